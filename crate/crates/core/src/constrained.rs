//! Binary words in which every maximal run of ones is at least `ℓ` long.
//!
//! `η(n, ℓ)` is the number of such words of length `n`. It is computed two
//! independent ways: a closed-form binomial sum and a forward dynamic
//! program over run states. [`Enumerator`] ranks and unranks the words in
//! lexicographic order (`0 < 1`). That order is part of the codec's wire
//! format and must not change.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::bits::BinaryWord;
use crate::error::{Error, Result};

/// Information word of the encoder, `0 <= m < η(n, ℓ)`.
pub type MessageIndex = BigUint;

/// First maximal run of ones shorter than `ell`, as 0-based `(start, len)`.
pub fn first_violation(word: &BinaryWord, ell: usize) -> Option<(usize, usize)> {
    word.runs_of_ones().find(|&(_, len)| len < ell)
}

pub fn is_member(word: &BinaryWord, ell: usize) -> bool {
    first_violation(word, ell).is_none()
}

pub(crate) fn check_member(word: &BinaryWord, ell: usize) -> Result<()> {
    match first_violation(word, ell) {
        None => Ok(()),
        Some((start, run)) => Err(Error::ConstraintViolation {
            word: word.to_string(),
            position: start + 1,
            run,
            ell,
        }),
    }
}

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

/// A binary word known to satisfy the run-length constraint for its `ell`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConstrainedWord {
    word: BinaryWord,
    ell: usize,
}

impl ConstrainedWord {
    pub fn new(word: BinaryWord, ell: usize) -> Result<Self> {
        check_ell(ell)?;
        check_member(&word, ell)?;
        Ok(Self { word, ell })
    }

    pub fn word(&self) -> &BinaryWord {
        &self.word
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn into_word(self) -> BinaryWord {
        self.word
    }
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `η(n, ℓ) = Σ_{t=0}^{⌊(n+1)/(ℓ+1)⌋} C(n − t(ℓ−1) + 1, 2t)`.
pub fn eta_closed_form(n: usize, ell: usize) -> BigUint {
    assert!(ell >= 1, "ell must be positive");
    let (n, ell) = (n as i64, ell as i64);
    (0..=(n + 1) / (ell + 1))
        .filter_map(|t| {
            let top = n - t * (ell - 1) + 1;
            (top >= 0).then(|| binomial(top as u64, 2 * t as u64))
        })
        .sum()
}

/// `η(n, ℓ)` by a forward pass over run states.
///
/// State 0 means "last symbol was a zero (or nothing yet)", state `k` for
/// `1 <= k < ℓ` is an unfinished run of `k` ones, and state `ℓ` is a run
/// that already meets the bound.
pub fn eta_dp(n: usize, ell: usize) -> BigUint {
    assert!(ell >= 1, "ell must be positive");
    let mut count = vec![BigUint::zero(); ell + 1];
    count[0] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); ell + 1];
        next[0] = &count[0] + &count[ell];
        for (k, c) in count.iter().enumerate() {
            let to = if k == 0 { 1 } else { (k + 1).min(ell) };
            next[to] += c;
        }
        count = next;
    }
    // Truncation: the unfinished states are rejected.
    &count[0] + &count[ell]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RunState {
    Zero,
    Short(usize),
    Long,
}

/// Lexicographic rank/unrank over all constrained words of length `n`.
///
/// Holds suffix-completion counts; immutable once built.
#[derive(Clone, Debug)]
pub struct Enumerator {
    n: usize,
    ell: usize,
    /// Completions of `r` more bits after a zero or at the start; equals `η(r, ℓ)`.
    after_zero: Vec<BigUint>,
    /// Completions of `r` more bits inside a run already `>= ℓ` long.
    after_long: Vec<BigUint>,
}

impl Enumerator {
    pub fn new(n: usize, ell: usize) -> Result<Self> {
        check_ell(ell)?;
        let mut after_zero = Vec::with_capacity(n + 1);
        let mut after_long = Vec::with_capacity(n + 1);
        after_zero.push(BigUint::one());
        after_long.push(BigUint::one());
        for r in 1..=n {
            let z = if r >= ell {
                &after_zero[r - 1] + &after_long[r - ell]
            } else {
                after_zero[r - 1].clone()
            };
            let l = &after_zero[r - 1] + &after_long[r - 1];
            after_zero.push(z);
            after_long.push(l);
        }
        Ok(Self {
            n,
            ell,
            after_zero,
            after_long,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `η(n, ℓ)`, the number of words enumerated.
    pub fn count(&self) -> &BigUint {
        &self.after_zero[self.n]
    }

    fn step(&self, state: RunState, bit: bool) -> Option<RunState> {
        let ell = self.ell;
        match (state, bit) {
            (RunState::Zero | RunState::Long, false) => Some(RunState::Zero),
            (RunState::Short(_), false) => None,
            (RunState::Zero, true) if ell == 1 => Some(RunState::Long),
            (RunState::Zero, true) => Some(RunState::Short(1)),
            (RunState::Short(k), true) if k + 1 >= ell => Some(RunState::Long),
            (RunState::Short(k), true) => Some(RunState::Short(k + 1)),
            (RunState::Long, true) => Some(RunState::Long),
        }
    }

    fn completions(&self, state: RunState, remaining: usize) -> BigUint {
        match state {
            RunState::Zero => self.after_zero[remaining].clone(),
            RunState::Long => self.after_long[remaining].clone(),
            RunState::Short(k) => {
                let need = self.ell - k;
                if remaining < need {
                    BigUint::zero()
                } else {
                    self.after_long[remaining - need].clone()
                }
            }
        }
    }

    /// Lexicographic index of `word`, validating length and constraint.
    pub fn rank(&self, word: &BinaryWord) -> Result<MessageIndex> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                word: word.len(),
                reference: self.n,
            });
        }
        check_member(word, self.ell)?;
        let mut state = RunState::Zero;
        let mut index = BigUint::zero();
        for (pos, bit) in word.iter().enumerate() {
            let remaining = self.n - pos - 1;
            if bit {
                if let Some(s0) = self.step(state, false) {
                    index += self.completions(s0, remaining);
                }
            }
            state = self.step(state, bit).expect("member words never stall");
        }
        Ok(index)
    }

    /// The word of lexicographic index `index`.
    pub fn unrank(&self, index: &MessageIndex) -> Result<ConstrainedWord> {
        if index >= self.count() {
            return Err(Error::MessageOutOfRange {
                n: self.n,
                ell: self.ell,
                capacity: self.count().clone(),
            });
        }
        let mut rest = index.clone();
        let mut state = RunState::Zero;
        let mut word = BinaryWord::zeros(self.n);
        for pos in 0..self.n {
            let remaining = self.n - pos - 1;
            let with_zero = self
                .step(state, false)
                .map(|s| self.completions(s, remaining))
                .unwrap_or_default();
            let bit = if rest < with_zero {
                false
            } else {
                rest -= with_zero;
                true
            };
            word.set(pos, bit);
            state = self.step(state, bit).expect("index in range never stalls");
        }
        debug_assert!(rest.is_zero());
        Ok(ConstrainedWord {
            word,
            ell: self.ell,
        })
    }
}

pub fn rank(word: &ConstrainedWord) -> MessageIndex {
    Enumerator::new(word.len(), word.ell())
        .and_then(|e| e.rank(word.word()))
        .expect("validated word")
}

pub fn unrank(index: &MessageIndex, n: usize, ell: usize) -> Result<ConstrainedWord> {
    Enumerator::new(n, ell)?.unrank(index)
}

/// `log2` of the largest root in `(1, 2]` of an increasing polynomial `f`
/// with `f(1) < 0 <= f(2)`, to absolute error `tol`.
fn log2_root(f: impl Fn(f64) -> f64, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Tolerance(tol));
    }
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    while hi.log2() - lo.log2() > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi)).log2())
}

/// `log2 ρ` for the largest real root `ρ` of `x^{ℓ+1} − x^ℓ − 1`, the
/// capacity of the `(ℓ, ∞)` run-length-limited constraint.
///
/// This is *not* an upper bound on the growth rate of `η(n, ℓ)`: that
/// family leaves runs of zeros unconstrained. See [`constraint_capacity`].
pub fn capacity_bound(ell: usize, tol: f64) -> Result<f64> {
    check_ell(ell)?;
    let e = ell as i32;
    log2_root(|x| x.powi(e + 1) - x.powi(e) - 1.0, tol)
}

/// `lim (1/n) log2 η(n, ℓ)`: `log2` of the largest root of
/// `x^{ℓ+1} − 2x^ℓ + x^{ℓ−1} − 1`.
///
/// The polynomial follows from parsing a word into blocks `0` and `1^k 0`
/// with `k >= ℓ`.
pub fn constraint_capacity(ell: usize, tol: f64) -> Result<f64> {
    check_ell(ell)?;
    let e = ell as i32;
    log2_root(
        |x| x.powi(e + 1) - 2.0 * x.powi(e) + x.powi(e - 1) - 1.0,
        tol,
    )
}

/// `log2` of an arbitrary-precision integer, as a float.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().map_or(f64::NAN, |v| (v as f64).log2());
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 bits");
    (top as f64).log2() + shift as f64
}
