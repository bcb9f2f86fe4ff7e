//! Packed binary words.
//!
//! A [`BinaryWord`] is the channel output of a labeling and also the carrier
//! for constrained words. Its textual form is a `0`/`1` string whose first
//! character is position 1.

use std::fmt;
use std::ops::{BitOr, BitOrAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

const BLOCK: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryWord {
    len: usize,
    blocks: Vec<u64>,
}

/// Channel output of a labeling function. Same representation as any binary word.
pub type LabelingOutput = BinaryWord;

impl BinaryWord {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            blocks: vec![0; len.div_ceil(BLOCK)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut w = Self::zeros(len);
        w.set_range(0, len);
        w
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut blocks = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % BLOCK == 0 {
                blocks.push(0);
            }
            if b {
                blocks[len / BLOCK] |= 1 << (len % BLOCK);
            }
            len += 1;
        }
        Self { len, blocks }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit at 0-based `index`.
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range");
        self.blocks[index / BLOCK] >> (index % BLOCK) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range");
        let mask = 1u64 << (index % BLOCK);
        if value {
            self.blocks[index / BLOCK] |= mask;
        } else {
            self.blocks[index / BLOCK] &= !mask;
        }
    }

    /// Sets the 0-based half-open range `start..start + count` to one.
    pub fn set_range(&mut self, start: usize, count: usize) {
        let end = start + count;
        assert!(end <= self.len, "range {start}..{end} out of bounds");
        let mut i = start;
        while i < end {
            let off = i % BLOCK;
            let take = (BLOCK - off).min(end - i);
            let mask = if take == BLOCK {
                u64::MAX
            } else {
                ((1u64 << take) - 1) << off
            };
            self.blocks[i / BLOCK] |= mask;
            i += take;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Maximal runs of ones as 0-based `(start, length)` pairs, left to right.
    pub fn runs_of_ones(&self) -> Runs<'_> {
        Runs { word: self, pos: 0 }
    }

    /// Positionwise `self <= other`.
    pub fn is_subset_of(&self, other: &BinaryWord) -> bool {
        self.len == other.len
            && self
                .blocks
                .iter()
                .zip(&other.blocks)
                .all(|(a, b)| a & !b == 0)
    }
}

pub struct Runs<'a> {
    word: &'a BinaryWord,
    pos: usize,
}

impl Iterator for Runs<'_> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        let n = self.word.len;
        while self.pos < n && !self.word.get(self.pos) {
            self.pos += 1;
        }
        if self.pos == n {
            return None;
        }
        let start = self.pos;
        while self.pos < n && self.word.get(self.pos) {
            self.pos += 1;
        }
        Some((start, self.pos - start))
    }
}

impl BitOrAssign<&BinaryWord> for BinaryWord {
    fn bitor_assign(&mut self, rhs: &BinaryWord) {
        assert_eq!(self.len, rhs.len, "OR of words with different lengths");
        for (a, b) in self.blocks.iter_mut().zip(&rhs.blocks) {
            *a |= b;
        }
    }
}

impl BitOr<&BinaryWord> for &BinaryWord {
    type Output = BinaryWord;

    fn bitor(self, rhs: &BinaryWord) -> BinaryWord {
        let mut out = self.clone();
        out |= rhs;
        out
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => {
                    return Err(Error::InvalidBit {
                        position: i + 1,
                        found: c,
                    })
                }
            }
        }
        Ok(Self::from_bits(bits))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.iter().map(|b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w: BinaryWord = "0011110".parse().unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.count_ones(), 4);
        assert_eq!(w.to_string(), "0011110");
        assert_eq!(
            "01x".parse::<BinaryWord>(),
            Err(Error::InvalidBit {
                position: 3,
                found: 'x'
            })
        );
    }

    #[test]
    fn set_range_crosses_blocks() {
        let mut w = BinaryWord::zeros(200);
        w.set_range(60, 80);
        assert_eq!(w.count_ones(), 80);
        assert!(!w.get(59) && w.get(60) && w.get(139) && !w.get(140));
        assert_eq!(w.runs_of_ones().collect::<Vec<_>>(), vec![(60, 80)]);
        assert_eq!(BinaryWord::ones(128).count_ones(), 128);
    }

    #[test]
    fn runs() {
        let w: BinaryWord = "1101110001".parse().unwrap();
        assert_eq!(
            w.runs_of_ones().collect::<Vec<_>>(),
            vec![(0, 2), (3, 3), (9, 1)]
        );
        assert_eq!(BinaryWord::zeros(5).runs_of_ones().count(), 0);
    }

    #[test]
    fn or_and_subset() {
        let a: BinaryWord = "1100".parse().unwrap();
        let b: BinaryWord = "0110".parse().unwrap();
        let c = &a | &b;
        assert_eq!(c.to_string(), "1110");
        assert!(a.is_subset_of(&c) && b.is_subset_of(&c));
        assert!(!c.is_subset_of(&a));
    }
}
