//! The optimal fixed-length-label code over an `ℓ`-repeat-free reference.
//!
//! A message `m < η(n, ℓ)` is unranked into a constrained word `X`, and `X`
//! is turned into a codeset by tiling each run of ones with reference
//! windows. Every window occurs once in the reference, so the channel output
//! of that codeset is exactly `X` and decoding is a rank.
//!
//! Tiling rule for a run of length `r >= ℓ` starting at `i`: the windows at
//! `i, i + ℓ, …, i + (⌊r/ℓ⌋ − 1)ℓ`, plus the window at `i + r − ℓ` when `ℓ`
//! does not divide `r`.

use crate::analysis::check_repeat_free;
use crate::bits::{BinaryWord, LabelingOutput};
use crate::constrained::{check_member, Enumerator, MessageIndex};
use crate::error::{Error, Result};
use crate::seq::{Codeset, DnaSequence, Label};

fn check_ell(ell: usize) -> Result<()> {
    if ell == 0 {
        return Err(Error::OutOfRange {
            name: "ell",
            value: 0,
            min: 1,
        });
    }
    Ok(())
}

/// Tiles the runs of `word` with windows of `reference`; no validation.
fn tile(word: &BinaryWord, reference: &DnaSequence, ell: usize) -> Codeset {
    let s = reference.as_bytes();
    let mut codeset = Codeset::empty();
    for (start, run) in word.runs_of_ones() {
        for j in 0..run / ell {
            let at = start + j * ell;
            codeset.insert(Label::from_window(&s[at..at + ell]));
        }
        if run % ell != 0 {
            let at = start + run - ell;
            codeset.insert(Label::from_window(&s[at..at + ell]));
        }
    }
    codeset
}

fn check_word(word: &BinaryWord, reference: &DnaSequence, ell: usize) -> Result<()> {
    if word.len() != reference.len() {
        return Err(Error::LengthMismatch {
            word: word.len(),
            reference: reference.len(),
        });
    }
    check_member(word, ell)
}

/// The codeset `Λ_X` for a constrained word `X` and an `ℓ`-repeat-free reference.
pub fn build_codeset(word: &BinaryWord, reference: &DnaSequence, ell: usize) -> Result<Codeset> {
    check_ell(ell)?;
    check_word(word, reference, ell)?;
    check_repeat_free(reference, ell)?;
    Ok(tile(word, reference, ell))
}

pub fn encode(message: &MessageIndex, reference: &DnaSequence, ell: usize) -> Result<Codeset> {
    LabelingCodec::new(reference.clone(), ell)?.encode(message)
}

pub fn recover_codeset(
    output: &LabelingOutput,
    reference: &DnaSequence,
    ell: usize,
) -> Result<Codeset> {
    build_codeset(output, reference, ell)
}

pub fn decode(
    output: &LabelingOutput,
    reference: &DnaSequence,
    ell: usize,
) -> Result<MessageIndex> {
    LabelingCodec::new(reference.clone(), ell)?.decode(output)
}

/// Encoder/decoder bound to one reference and label length.
///
/// Validates the reference once and keeps the enumeration tables, so it is
/// the type to use when coding many messages.
#[derive(Clone, Debug)]
pub struct LabelingCodec {
    reference: DnaSequence,
    enumerator: Enumerator,
}

impl LabelingCodec {
    pub fn new(reference: DnaSequence, ell: usize) -> Result<Self> {
        check_ell(ell)?;
        check_repeat_free(&reference, ell)?;
        let enumerator = Enumerator::new(reference.len(), ell)?;
        Ok(Self {
            reference,
            enumerator,
        })
    }

    pub fn reference(&self) -> &DnaSequence {
        &self.reference
    }

    pub fn ell(&self) -> usize {
        self.enumerator.ell()
    }

    /// Number of codewords, `η(n, ℓ)`.
    pub fn capacity(&self) -> &MessageIndex {
        self.enumerator.count()
    }

    pub fn encode(&self, message: &MessageIndex) -> Result<Codeset> {
        let word = self.enumerator.unrank(message)?;
        Ok(tile(word.word(), &self.reference, self.ell()))
    }

    pub fn recover_codeset(&self, output: &LabelingOutput) -> Result<Codeset> {
        check_word(output, &self.reference, self.ell())?;
        Ok(tile(output, &self.reference, self.ell()))
    }

    pub fn decode(&self, output: &LabelingOutput) -> Result<MessageIndex> {
        check_word(output, &self.reference, self.ell())?;
        self.enumerator.rank(output)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constrained::unrank;
    use crate::labeling::label_set;
    use num_bigint::BigUint;
    use num_traits::{One, Zero};

    const EXAMPLE_REF: &str = "AAAACAAAGAAATAACCAACGAACT";

    fn s(x: &str) -> DnaSequence {
        x.parse().unwrap()
    }

    fn example_word() -> BinaryWord {
        format!(
            "{}{}{}{}",
            "1".repeat(11),
            "0".repeat(5),
            "1".repeat(4),
            "0".repeat(5)
        )
        .parse()
        .unwrap()
    }

    #[test]
    fn worked_example() {
        let seq = s(EXAMPLE_REF);
        let x = example_word();
        let lam = build_codeset(&x, &seq, 4).unwrap();
        let expected: Codeset = "AAAA,CAAA,AGAA,CAAC".parse().unwrap();
        assert_eq!(lam, expected);
        assert_eq!(label_set(&seq, &lam), x);
    }

    #[test]
    fn degenerate_words() {
        let seq = s(EXAMPLE_REF);
        assert!(build_codeset(&BinaryWord::zeros(25), &seq, 4)
            .unwrap()
            .is_empty());
        // 24 = 4 * 6: six disjoint blocks.
        let seq24 = s(&EXAMPLE_REF[..24]);
        let all = build_codeset(&BinaryWord::ones(24), &seq24, 4).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(label_set(&seq24, &all), BinaryWord::ones(24));
    }

    #[test]
    fn precondition_errors() {
        let seq = s(EXAMPLE_REF);
        assert!(matches!(
            build_codeset(&BinaryWord::zeros(24), &seq, 4),
            Err(Error::LengthMismatch {
                word: 24,
                reference: 25
            })
        ));
        let short: BinaryWord = format!("111{}", "0".repeat(22)).parse().unwrap();
        assert!(matches!(
            build_codeset(&short, &seq, 4),
            Err(Error::ConstraintViolation { run: 3, .. })
        ));
        assert!(matches!(
            build_codeset(&BinaryWord::zeros(25), &seq, 2),
            Err(Error::NotRepeatFree { ell: 2, .. })
        ));
        assert!(matches!(
            LabelingCodec::new(s("ACGTACGT"), 3),
            Err(Error::NotRepeatFree { .. })
        ));
    }

    #[test]
    fn extremes_of_message_range() {
        let codec = LabelingCodec::new(s(EXAMPLE_REF), 4).unwrap();
        assert!(codec.encode(&BigUint::zero()).unwrap().is_empty());
        let top = codec.capacity() - BigUint::one();
        let lam = codec.encode(&top).unwrap();
        assert_eq!(label_set(codec.reference(), &lam), BinaryWord::ones(25));
        assert!(matches!(
            codec.encode(codec.capacity()),
            Err(Error::MessageOutOfRange { n: 25, ell: 4, .. })
        ));
        assert!(codec.decode(&BinaryWord::zeros(25)).unwrap().is_zero());
        assert_eq!(codec.decode(&BinaryWord::ones(25)).unwrap(), top);
    }

    #[test]
    fn round_trip_small() {
        let seq = s(EXAMPLE_REF);
        let codec = LabelingCodec::new(seq.clone(), 4).unwrap();
        let total: u64 = codec.capacity().try_into().unwrap();
        for m in (0..total).step_by(7) {
            let m = BigUint::from(m);
            let lam = codec.encode(&m).unwrap();
            assert!(lam.iter().all(|l| l.len() == 4));
            let y = label_set(&seq, &lam);
            assert_eq!(&y, unrank(&m, 25, 4).unwrap().word());
            assert_eq!(codec.recover_codeset(&y).unwrap(), lam);
            assert_eq!(codec.decode(&y).unwrap(), m);
            assert_eq!(decode(&y, &seq, 4).unwrap(), m);
            assert_eq!(encode(&m, &seq, 4).unwrap(), lam);
            assert_eq!(recover_codeset(&y, &seq, 4).unwrap(), lam);
        }
    }

    #[test]
    fn corrupted_output_is_rejected() {
        let codec = LabelingCodec::new(s(EXAMPLE_REF), 4).unwrap();
        let mut y = BinaryWord::zeros(25);
        y.set_range(3, 3);
        assert!(matches!(
            codec.decode(&y),
            Err(Error::ConstraintViolation { .. })
        ));
        assert!(codec.recover_codeset(&y).is_err());
    }
}
