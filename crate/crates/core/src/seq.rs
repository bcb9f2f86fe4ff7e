//! DNA words, labels, codesets and labeling codes.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The DNA alphabet in canonical order.
pub const ALPHABET: [u8; 4] = *b"ACGT";

/// An immutable word over `{A, C, G, T}`.
///
/// Symbols are kept as uppercase ASCII bytes, so byte order is the
/// lexicographic order `A < C < G < T`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DnaSequence(Vec<u8>);

impl DnaSequence {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if let Some(i) = bytes.iter().position(|b| !ALPHABET.contains(b)) {
            return Err(Error::InvalidSymbol {
                position: i + 1,
                found: bytes[i] as char,
            });
        }
        Ok(Self(bytes))
    }

    pub(crate) fn from_trusted(bytes: Vec<u8>) -> Self {
        debug_assert!(bytes.iter().all(|b| ALPHABET.contains(b)));
        Self(bytes)
    }

    /// The word whose symbols are `ALPHABET[digits[i]]`.
    pub fn from_digits(digits: &[u8]) -> Self {
        Self(digits.iter().map(|&d| ALPHABET[d as usize]).collect())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The window `S[i; len]` at 1-based position `i`, if it fits.
    pub fn window(&self, i: usize, len: usize) -> Option<&[u8]> {
        if i == 0 || i + len > self.len() + 1 {
            return None;
        }
        Some(&self.0[i - 1..i - 1 + len])
    }

    /// All `4^n` sequences of length `n` in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = DnaSequence> {
        let total = 4usize.pow(n as u32);
        (0..total).map(move |mut idx| {
            let mut digits = vec![0u8; n];
            for d in digits.iter_mut().rev() {
                *d = (idx % 4) as u8;
                idx /= 4;
            }
            DnaSequence::from_digits(&digits)
        })
    }
}

impl FromStr for DnaSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some((i, c)) = s.chars().enumerate().find(|(_, c)| !c.is_ascii()) {
            return Err(Error::InvalidSymbol {
                position: i + 1,
                found: c,
            });
        }
        Self::new(s.as_bytes().to_vec())
    }
}

impl fmt::Display for DnaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Always valid ASCII.
        f.write_str(std::str::from_utf8(&self.0).unwrap())
    }
}

impl fmt::Debug for DnaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DnaSequence({self})")
    }
}

/// A nonempty DNA word used as a marker.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(DnaSequence);

impl Label {
    pub fn new(seq: DnaSequence) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::EmptyLabel);
        }
        Ok(Self(seq))
    }

    pub(crate) fn from_window(window: &[u8]) -> Self {
        debug_assert!(!window.is_empty());
        Self(DnaSequence::from_trusted(window.to_vec()))
    }

    pub fn sequence(&self) -> &DnaSequence {
        &self.0
    }
}

impl Deref for Label {
    type Target = DnaSequence;

    fn deref(&self) -> &DnaSequence {
        &self.0
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::new(s.parse()?)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Label({})", self.0)
    }
}

/// A finite set of labels applied together. May be empty.
///
/// Iteration order is lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Codeset(BTreeSet<Label>);

impl Codeset {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a codeset, rejecting repeated labels.
    pub fn new<I: IntoIterator<Item = Label>>(labels: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for label in labels {
            if set.contains(&label) {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
            set.insert(label);
        }
        Ok(Self(set))
    }

    /// Returns `false` if the label was already present.
    pub fn insert(&mut self, label: Label) -> bool {
        self.0.insert(label)
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.0.contains(label)
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

    pub fn is_subset(&self, other: &Codeset) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<Label> for Codeset {
    /// Collects labels, silently merging duplicates.
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Codeset {
    type Item = &'a Label;
    type IntoIter = std::collections::btree_set::Iter<'a, Label>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromStr for Codeset {
    type Err = Error;

    /// Comma-separated labels; the empty string is the empty codeset.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let labels = s
            .split(',')
            .map(|part| part.trim().parse::<Label>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(labels)
    }
}

impl fmt::Display for Codeset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, label) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            label.fmt(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Codeset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// A collection of distinct codesets.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LabelingCode(Vec<Codeset>);

impl LabelingCode {
    pub fn new<I: IntoIterator<Item = Codeset>>(codesets: I) -> Result<Self> {
        let codesets: Vec<Codeset> = codesets.into_iter().collect();
        let mut seen = HashSet::with_capacity(codesets.len());
        for c in &codesets {
            if !seen.insert(c) {
                return Err(Error::DuplicateCodeset(c.to_string()));
            }
        }
        Ok(Self(codesets))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Codeset> {
        self.0.iter()
    }

    pub fn codesets(&self) -> &[Codeset] {
        &self.0
    }
}

impl FromStr for LabelingCode {
    type Err = Error;

    /// One codeset per line. A blank line is the empty codeset.
    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.lines().map(str::parse).collect::<Result<Vec<_>>>()?)
    }
}

impl fmt::Display for LabelingCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_symbols() {
        assert_eq!(
            "ACGN".parse::<DnaSequence>(),
            Err(Error::InvalidSymbol {
                position: 4,
                found: 'N'
            })
        );
        assert!("acgt".parse::<DnaSequence>().is_err());
        assert!("AC∅".parse::<DnaSequence>().is_err());
        assert_eq!("".parse::<Label>(), Err(Error::EmptyLabel));
    }

    #[test]
    fn windows_are_one_based() {
        let s: DnaSequence = "ACGT".parse().unwrap();
        assert_eq!(s.window(1, 2), Some(&b"AC"[..]));
        assert_eq!(s.window(3, 2), Some(&b"GT"[..]));
        assert_eq!(s.window(4, 2), None);
        assert_eq!(s.window(0, 1), None);
    }

    #[test]
    fn codeset_text_form() {
        let c: Codeset = "GTG, AAAC,CC".parse().unwrap();
        assert_eq!(c.to_string(), "AAAC,CC,GTG");
        assert!("".parse::<Codeset>().unwrap().is_empty());
        assert_eq!(
            "AC,AC".parse::<Codeset>(),
            Err(Error::DuplicateLabel("AC".into()))
        );
    }

    #[test]
    fn labeling_code_rejects_duplicates() {
        assert!("AC\nAC,GT\nA,C".parse::<LabelingCode>().is_ok());
        assert!("AC\nGT\nAC".parse::<LabelingCode>().is_err());
        let code: LabelingCode = "AC\n\nA".parse().unwrap();
        assert_eq!(code.len(), 3);
        assert!(code.codesets()[1].is_empty());
    }

    #[test]
    fn enumerate_all_sequences() {
        let all: Vec<_> = DnaSequence::all_of_length(2).collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0].to_string(), "AA");
        assert_eq!(all[1].to_string(), "AC");
        assert_eq!(all[15].to_string(), "TT");
        assert_eq!(DnaSequence::all_of_length(0).count(), 1);
    }
}
