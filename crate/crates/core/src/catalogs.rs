//! Reference sequences and label catalogs.
//!
//! [`de_bruijn`] and [`make_reference`] produce repeat-free references. The
//! rest of the module covers the short-label regime, where no reference of
//! the wanted length is repeat-free: a non-overlapping code restricted to the
//! windows of the reference, used as a power-set code.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::analysis::window_set;
use crate::error::{Error, Result};
use crate::seq::{Codeset, DnaSequence, Label, ALPHABET};

/// Largest order accepted by [`de_bruijn`] (`4^12 + 11` symbols).
pub const MAX_DE_BRUIJN_ORDER: usize = 12;
/// Largest label length accepted by [`non_overlapping_code`].
pub const MAX_CATALOG_LENGTH: usize = 12;

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

/// The first `limit` digits of the lexicographically least de Bruijn cycle of
/// the given order over `{0, 1, 2, 3}`: the Lyndon words whose length divides
/// `order`, concatenated in lexicographic order.
fn de_bruijn_cycle(order: usize, limit: usize) -> Vec<u8> {
    let k = ALPHABET.len() as u8;
    let mut out = Vec::with_capacity(limit);
    let mut w: Vec<u8> = vec![0];
    while out.len() < limit {
        if order.is_multiple_of(w.len()) {
            out.extend_from_slice(&w);
        }
        let period = w.len();
        while w.len() < order {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out.truncate(limit);
    out
}

fn cycle_len(ell: usize) -> Option<usize> {
    4usize.checked_pow(ell as u32)
}

/// Linearized order-`ℓ` de Bruijn sequence: every length-`ℓ` word exactly
/// once, `4^ℓ + ℓ − 1` symbols.
pub fn de_bruijn(ell: usize) -> Result<DnaSequence> {
    check_ell(ell)?;
    if ell > MAX_DE_BRUIJN_ORDER {
        return Err(Error::GuardExceeded {
            what: "de Bruijn order",
            actual: ell,
            limit: MAX_DE_BRUIJN_ORDER,
        });
    }
    let len = 4usize.pow(ell as u32);
    let mut digits = de_bruijn_cycle(ell, len);
    digits.extend_from_within(..ell - 1);
    Ok(DnaSequence::from_digits(&digits))
}

/// A generated reference sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reference {
    pub sequence: DnaSequence,
    pub ell: usize,
    /// `false` when `n` exceeded `4^ℓ + ℓ − 1` and padding was appended;
    /// only the de Bruijn prefix is repeat-free then.
    pub repeat_free: bool,
}

/// A length-`n` reference whose longest possible prefix is `ℓ`-repeat-free.
///
/// Up to `4^ℓ + ℓ − 1` symbols this is a prefix of [`de_bruijn`]`(ℓ)`.
/// Beyond that the full de Bruijn sequence is padded by repeating its last
/// symbol.
pub fn make_reference(n: usize, ell: usize) -> Result<Reference> {
    check_ell(ell)?;
    let cycle = cycle_len(ell);
    let fits = cycle.is_none_or(|c| n < c + ell);
    if fits {
        let mut digits = de_bruijn_cycle(ell, n);
        if digits.len() < n {
            let wrap = n - digits.len();
            digits.extend_from_within(..wrap);
        }
        return Ok(Reference {
            sequence: DnaSequence::from_digits(&digits),
            ell,
            repeat_free: true,
        });
    }
    let mut bytes = de_bruijn(ell)?.as_bytes().to_vec();
    let last = *bytes.last().expect("nonempty");
    bytes.resize(n, last);
    Ok(Reference {
        sequence: DnaSequence::from_trusted(bytes),
        ell,
        repeat_free: false,
    })
}

/// Whether no proper nonempty prefix of any word equals a proper nonempty
/// suffix of any word, the word itself included.
pub fn is_non_overlapping<'a, I>(labels: I) -> bool
where
    I: IntoIterator<Item = &'a Label>,
    I::IntoIter: Clone,
{
    let labels = labels.into_iter();
    labels.clone().all(|a| {
        labels.clone().all(|b| {
            let (a, b) = (a.as_bytes(), b.as_bytes());
            (1..a.len().min(b.len())).all(|p| a[..p] != b[b.len() - p..])
        })
    })
}

/// A non-overlapping code of length-`ℓ` labels with parameter `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonOverlappingCode {
    ell: usize,
    k: usize,
    labels: Vec<Label>,
}

impl NonOverlappingCode {
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Labels in lexicographic order; this order fixes [`powerset_code_member`].
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of codesets of the power-set code, `2^|N|`.
    pub fn powerset_size(&self) -> BigUint {
        BigUint::one() << self.labels.len()
    }
}

impl fmt::Display for NonOverlappingCode {
    /// Header `ell=<ℓ> k=<k> size=<|N|>`, then one label per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "ell={} k={} size={}",
            self.ell,
            self.k,
            self.labels.len()
        )?;
        for l in &self.labels {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}

/// All words `A^k s_{k+1} … s_ℓ` with `s_{k+1} ≠ A`, `s_ℓ ≠ A`, and no run of
/// `k` consecutive `A`s inside `s_{k+1} … s_{ℓ−1}`.
pub fn non_overlapping_code(ell: usize, k: usize) -> Result<NonOverlappingCode> {
    if ell < 2 {
        return Err(Error::OutOfRange {
            name: "ell",
            value: ell,
            min: 2,
        });
    }
    if ell > MAX_CATALOG_LENGTH {
        return Err(Error::GuardExceeded {
            what: "catalog label length",
            actual: ell,
            limit: MAX_CATALOG_LENGTH,
        });
    }
    if k == 0 || k >= ell {
        return Err(Error::OutOfRange {
            name: "k",
            value: k,
            min: 1,
        });
    }
    let mut labels = Vec::new();
    let mut word = vec![b'A'; ell];
    extend_tail(&mut word, k, k, 0, &mut labels);
    Ok(NonOverlappingCode { ell, k, labels })
}

/// Fills `word[pos..]`; `zeros` is the current run of `A`s in the free middle.
fn extend_tail(word: &mut [u8], k: usize, pos: usize, zeros: usize, out: &mut Vec<Label>) {
    let ell = word.len();
    if pos == ell {
        out.push(Label::from_window(word));
        return;
    }
    let edge = pos == k || pos == ell - 1;
    for &c in &ALPHABET {
        let zeros = if c == b'A' { zeros + 1 } else { 0 };
        if c == b'A' && (edge || zeros >= k) {
            continue;
        }
        word[pos] = c;
        extend_tail(word, k, pos + 1, zeros, out);
    }
}

/// The largest code over `k = 1..ℓ−1`; ties go to the smaller `k`.
pub fn best_non_overlapping_code(ell: usize) -> Result<NonOverlappingCode> {
    let mut best: Option<NonOverlappingCode> = None;
    for k in 1..ell.max(2) {
        let code = non_overlapping_code(ell, k)?;
        if best.as_ref().is_none_or(|b| code.len() > b.len()) {
            best = Some(code);
        }
    }
    best.ok_or(Error::OutOfRange {
        name: "ell",
        value: ell,
        min: 2,
    })
}

/// The labels of `code` that occur in `seq`.
pub fn restrict_to_s(code: &NonOverlappingCode, seq: &DnaSequence) -> NonOverlappingCode {
    let windows = window_set(seq, code.ell).expect("ell >= 2");
    NonOverlappingCode {
        ell: code.ell,
        k: code.k,
        labels: code
            .labels
            .iter()
            .filter(|l| windows.contains(l))
            .cloned()
            .collect(),
    }
}

/// Member `index` of the power-set code: bit `i` of `index` selects `labels()[i]`.
pub fn powerset_code_member(code: &NonOverlappingCode, index: &BigUint) -> Result<Codeset> {
    if index >= &code.powerset_size() {
        return Err(Error::IndexOutOfRange {
            index: index.clone(),
            size: code.powerset_size(),
        });
    }
    Ok(code
        .labels
        .iter()
        .enumerate()
        .filter(|&(i, _)| index.bit(i as u64))
        .map(|(_, l)| l.clone())
        .collect())
}

/// `63 · 4^{ℓ−5} / ℓ`, exact.
pub fn non_overlapping_lower_bound(ell: usize) -> Result<BigRational> {
    check_ell(ell)?;
    let sixty_three = BigInt::from(63u32);
    let value = if ell >= 5 {
        BigRational::new(sixty_three << (2 * (ell - 5)), BigInt::from(ell))
    } else {
        BigRational::new(sixty_three, BigInt::from(ell) << (2 * (5 - ell)))
    };
    debug_assert!(!value.is_zero());
    Ok(value)
}
