//! Structural analysis of reference sequences and exhaustive oracles.
//!
//! The oracles compute maximum code sizes as the number of *distinct channel
//! outputs* reachable by label subsets. A maximum uniquely-decodable code
//! picks one codeset per output, so the two quantities coincide. Every oracle
//! is guarded and refuses instances beyond its limit.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::bits::LabelingOutput;
use crate::error::{Error, Result};
use crate::labeling::{label_one, occurrences};
use crate::seq::{Codeset, DnaSequence, Label, LabelingCode};

/// Maximum number of candidate labels an image oracle enumerates subsets of.
pub const MAX_ORACLE_LABELS: usize = 24;
/// Maximum reference length searched by [`brute_force_m_n_v`].
pub const MAX_SEARCH_LENGTH: usize = 8;
/// Maximum executable-label count for [`brute_force_m_n_v`].
pub const MAX_SEARCH_LABELS: usize = 12;

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

/// The distinct length-`ℓ` windows of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowSet {
    ell: usize,
    windows: BTreeSet<Label>,
}

impl WindowSet {
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn len(&self) -> usize {
        self.windows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.windows.is_empty()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.windows.contains(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Label> {
        self.windows.iter()
    }
}

pub fn window_set(seq: &DnaSequence, ell: usize) -> Result<WindowSet> {
    check_ell(ell)?;
    let windows = if ell > seq.len() {
        BTreeSet::new()
    } else {
        seq.as_bytes()
            .windows(ell)
            .map(Label::from_window)
            .collect()
    };
    Ok(WindowSet { ell, windows })
}

/// Smallest proper divisor `π` of `n` with `S_i = S_{i+π}` everywhere, or `n`.
pub fn minimal_period(seq: &DnaSequence) -> Result<usize> {
    let n = seq.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let s = seq.as_bytes();
    Ok((1..n)
        .filter(|p| n.is_multiple_of(*p))
        .find(|&p| (0..n - p).all(|i| s[i] == s[i + p]))
        .unwrap_or(n))
}

/// `2^{2π−2} + 2^π − 1`, an upper bound on `M(S)` for a sequence of minimal period `π`.
pub fn period_upper_bound(period: usize) -> Result<BigUint> {
    if period == 0 {
        return Err(Error::OutOfRange {
            name: "period",
            value: 0,
            min: 1,
        });
    }
    Ok((BigUint::one() << (2 * period - 2)) + (BigUint::one() << period) - BigUint::one())
}

/// 1-based positions of the first repeated length-`ℓ` window, if any.
pub fn first_repeat(seq: &DnaSequence, ell: usize) -> Option<(usize, usize)> {
    if ell == 0 || ell > seq.len() {
        return None;
    }
    let mut seen: HashMap<&[u8], usize> = HashMap::new();
    for (i, w) in seq.as_bytes().windows(ell).enumerate() {
        if let Some(&j) = seen.get(w) {
            return Some((j + 1, i + 1));
        }
        seen.insert(w, i);
    }
    None
}

/// Whether all length-`ℓ` windows of `seq` are pairwise distinct.
pub fn is_repeat_free(seq: &DnaSequence, ell: usize) -> bool {
    first_repeat(seq, ell).is_none()
}

pub(crate) fn check_repeat_free(seq: &DnaSequence, ell: usize) -> Result<()> {
    match first_repeat(seq, ell) {
        None => Ok(()),
        Some((first, second)) => Err(Error::NotRepeatFree {
            ell,
            window: String::from_utf8_lossy(seq.window(first, ell).unwrap()).into_owned(),
            first,
            second,
        }),
    }
}

/// A catalog of labels available to the encoder.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExecutableLabelSet(Codeset);

impl ExecutableLabelSet {
    pub fn new<I: IntoIterator<Item = Label>>(labels: I) -> Result<Self> {
        Codeset::new(labels).map(Self)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Label> {
        self.0.iter()
    }
}

impl From<Codeset> for ExecutableLabelSet {
    fn from(c: Codeset) -> Self {
        Self(c)
    }
}

impl FromStr for ExecutableLabelSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(Self)
    }
}

impl fmt::Display for ExecutableLabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Number of distinct ORs over all subsets of `masks`, empty subset included.
///
/// Grows the reachable set one mask at a time, so the cost tracks the number
/// of distinct outputs rather than `2^k`.
fn distinct_unions(masks: &[LabelingOutput], len: usize) -> usize {
    let mut reached: HashSet<LabelingOutput> = HashSet::new();
    reached.insert(LabelingOutput::zeros(len));
    for m in masks {
        let fresh: Vec<_> = reached
            .iter()
            .map(|x| x | m)
            .filter(|y| !reached.contains(y))
            .collect();
        reached.extend(fresh);
    }
    reached.len()
}

fn image_size(seq: &DnaSequence, labels: &[Label], what: &'static str) -> Result<usize> {
    if labels.len() > MAX_ORACLE_LABELS {
        return Err(Error::GuardExceeded {
            what,
            actual: labels.len(),
            limit: MAX_ORACLE_LABELS,
        });
    }
    let masks: Vec<_> = labels.iter().map(|l| label_one(seq, l)).collect();
    Ok(distinct_unions(&masks, seq.len()))
}

/// Distinct substrings of `seq`, or a guard error once more than `limit` are found.
fn distinct_substrings(seq: &DnaSequence, limit: usize) -> Result<Vec<Label>> {
    let s = seq.as_bytes();
    let mut found: HashSet<&[u8]> = HashSet::new();
    for len in 1..=s.len() {
        for w in s.windows(len) {
            if found.insert(w) && found.len() > limit {
                // Exact count for the report only while it stays cheap.
                if s.len() > 1024 {
                    return Err(Error::GuardExceeded {
                        what: "distinct substrings of S (at least)",
                        actual: found.len(),
                        limit,
                    });
                }
                let total: HashSet<&[u8]> = (1..=s.len()).flat_map(|l| s.windows(l)).collect();
                return Err(Error::GuardExceeded {
                    what: "distinct substrings of S",
                    actual: total.len(),
                    limit,
                });
            }
        }
    }
    let mut labels: Vec<Label> = found.into_iter().map(Label::from_window).collect();
    labels.sort();
    Ok(labels)
}

/// `M(S)`: the largest S-uniquely-decodable code with labels of any length.
pub fn brute_force_m(seq: &DnaSequence) -> Result<usize> {
    let labels = distinct_substrings(seq, MAX_ORACLE_LABELS)?;
    image_size(seq, &labels, "distinct substrings of S")
}

/// `M_ℓ(S)`: the largest S-uniquely-decodable code with labels of length `ℓ`.
pub fn brute_force_m_ell(seq: &DnaSequence, ell: usize) -> Result<usize> {
    let windows: Vec<Label> = window_set(seq, ell)?.windows.into_iter().collect();
    image_size(seq, &windows, "distinct windows of S")
}

/// `M(S, V)`: the largest S-uniquely-decodable code drawn from subsets of `labels`.
pub fn brute_force_m_v(seq: &DnaSequence, labels: &ExecutableLabelSet) -> Result<usize> {
    let present: Vec<Label> = labels
        .iter()
        .filter(|l| !occurrences(seq, l).is_empty())
        .cloned()
        .collect();
    image_size(seq, &present, "executable labels occurring in S")
}

/// `M(n, V)` with a maximizing reference. Ties go to the lexicographically
/// smallest sequence.
pub fn brute_force_m_n_v(n: usize, labels: &ExecutableLabelSet) -> Result<(usize, DnaSequence)> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: 0,
            min: 1,
        });
    }
    if n > MAX_SEARCH_LENGTH {
        return Err(Error::GuardExceeded {
            what: "reference length n",
            actual: n,
            limit: MAX_SEARCH_LENGTH,
        });
    }
    if labels.len() > MAX_SEARCH_LABELS {
        return Err(Error::GuardExceeded {
            what: "executable label count",
            actual: labels.len(),
            limit: MAX_SEARCH_LABELS,
        });
    }
    let sequences: Vec<DnaSequence> = DnaSequence::all_of_length(n).collect();
    let (best, idx) = sequences
        .par_iter()
        .enumerate()
        .map(|(i, s)| brute_force_m_v(s, labels).map(|m| (m, i)))
        .try_reduce(
            || (0, usize::MAX),
            |a, b| {
                // Larger value wins, then the smaller index.
                Ok(
                    if (b.0, std::cmp::Reverse(b.1)) > (a.0, std::cmp::Reverse(a.1)) {
                        b
                    } else {
                        a
                    },
                )
            },
        )?;
    Ok((best, sequences[idx].clone()))
}

/// Sufficient test for S-unique decodability of an `ℓ`-labeling code.
///
/// Passes when (1) the codesets stay pairwise distinct after discarding
/// labels that do not occur in `S`, and (2) within each codeset no two
/// occurrences of its labels start fewer than `ℓ` positions apart. `true`
/// guarantees unique decodability; `false` is inconclusive.
pub fn check_sufficient_conditions(
    code: &LabelingCode,
    seq: &DnaSequence,
    ell: usize,
) -> Result<bool> {
    check_ell(ell)?;
    for label in code.iter().flat_map(Codeset::iter) {
        if label.len() != ell {
            return Err(Error::LabelLength {
                label: label.to_string(),
                len: label.len(),
                ell,
            });
        }
    }
    let windows = window_set(seq, ell)?;
    let mut projections = HashSet::with_capacity(code.len());
    for codeset in code.iter() {
        let projected: Codeset = codeset
            .iter()
            .filter(|l| windows.contains(l))
            .cloned()
            .collect();
        // Equal-length labels occupy distinct start positions, so sorting
        // all starts and checking neighbours covers every ordered pair.
        let mut starts: Vec<usize> = projected.iter().flat_map(|l| occurrences(seq, l)).collect();
        starts.sort_unstable();
        if starts.windows(2).any(|p| p[1] - p[0] < ell) {
            return Ok(false);
        }
        if !projections.insert(projected) {
            return Ok(false);
        }
    }
    Ok(true)
}
