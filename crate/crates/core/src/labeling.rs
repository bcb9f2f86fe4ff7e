//! The labeling channel: single-label and codeset labelings of a reference,
//! equivalence of codesets, and unique decodability of codes.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::bits::LabelingOutput;
use crate::seq::{Codeset, DnaSequence, Label, LabelingCode};

/// 1-based start positions of every occurrence of `label` in `seq`, ascending.
/// Overlapping occurrences are all reported.
pub fn occurrences(seq: &DnaSequence, label: &Label) -> Vec<usize> {
    let l = label.len();
    if l > seq.len() {
        return Vec::new();
    }
    seq.as_bytes()
        .windows(l)
        .enumerate()
        .filter(|(_, w)| *w == label.as_bytes())
        .map(|(i, _)| i + 1)
        .collect()
}

/// The λ-labeling: ones exactly on the positions covered by an occurrence of `label`.
pub fn label_one(seq: &DnaSequence, label: &Label) -> LabelingOutput {
    let mut out = LabelingOutput::zeros(seq.len());
    for i in occurrences(seq, label) {
        out.set_range(i - 1, label.len());
    }
    out
}

/// The Λ-labeling: bitwise OR of the single-label labelings.
pub fn label_set(seq: &DnaSequence, codeset: &Codeset) -> LabelingOutput {
    let mut out = LabelingOutput::zeros(seq.len());
    let mut by_len: BTreeMap<usize, HashSet<&[u8]>> = BTreeMap::new();
    for label in codeset {
        if label.len() <= seq.len() {
            by_len
                .entry(label.len())
                .or_default()
                .insert(label.as_bytes());
        }
    }
    for (&l, labels) in &by_len {
        for (i, w) in seq.as_bytes().windows(l).enumerate() {
            if labels.contains(w) {
                out.set_range(i, l);
            }
        }
    }
    out
}

/// Whether two codesets produce the same labeling of `seq`.
pub fn is_equivalent(a: &Codeset, b: &Codeset, seq: &DnaSequence) -> bool {
    label_set(seq, a) == label_set(seq, b)
}

/// Whether distinct codesets of `code` always produce distinct labelings of `seq`.
pub fn is_uniquely_decodable(code: &LabelingCode, seq: &DnaSequence) -> bool {
    let mut seen = HashMap::with_capacity(code.len());
    code.iter()
        .all(|c| seen.insert(label_set(seq, c), ()).is_none())
}
