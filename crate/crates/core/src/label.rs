//! Subsets of a ground set `[k] = {1, ..., k}` packed into a machine word.
//!
//! Element `i` lives in bit `i - 1`. Every label remembers the size of its
//! ground set so that labels drawn from different power sets are never
//! compared by accident.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported ground size.
pub const MAX_GROUND: u32 = 62;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    bits: u64,
    k: u32,
}

fn full_mask(k: u32) -> u64 {
    if k == 0 {
        0
    } else {
        u64::MAX >> (64 - k)
    }
}

impl Label {
    pub fn from_bits(k: u32, bits: u64) -> Result<Self> {
        if k > MAX_GROUND {
            return Err(Error::Malformed(format!(
                "ground size {k} exceeds {MAX_GROUND}"
            )));
        }
        if bits & !full_mask(k) != 0 {
            return Err(Error::Malformed(format!(
                "bits {bits:#b} outside ground set [{k}]"
            )));
        }
        Ok(Label { bits, k })
    }

    pub fn from_elements<I: IntoIterator<Item = u32>>(k: u32, elems: I) -> Result<Self> {
        let mut bits = 0u64;
        for e in elems {
            if e == 0 || e > k {
                return Err(Error::Malformed(format!("element {e} not in [{k}]")));
            }
            bits |= 1 << (e - 1);
        }
        Label::from_bits(k, bits)
    }

    pub fn empty(k: u32) -> Self {
        Label { bits: 0, k }
    }

    /// The singleton `{e}` over ground `[k]`.
    pub fn singleton(k: u32, e: u32) -> Self {
        assert!(e >= 1 && e <= k && k <= MAX_GROUND);
        Label {
            bits: 1 << (e - 1),
            k,
        }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn ground(self) -> u32 {
        self.k
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn contains(self, e: u32) -> bool {
        e >= 1 && e <= self.k && self.bits & (1 << (e - 1)) != 0
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        let bits = self.bits;
        (1..=self.k).filter(move |e| bits & (1 << (e - 1)) != 0)
    }

    pub fn union(self, other: Label) -> Label {
        Label {
            bits: self.bits | other.bits,
            k: self.k.max(other.k),
        }
    }

    /// Subset-or-equal on the elements, ignoring ground sizes.
    pub fn is_subset(self, other: Label) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset(self, other: Label) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }

    /// Reinterpret over a larger ground set.
    pub fn lift(self, k: u32) -> Label {
        assert!(k >= self.k && k <= MAX_GROUND);
        Label { bits: self.bits, k }
    }

    /// `self ∪ {e}`, with the ground set grown to include `e` if needed.
    pub fn with(self, e: u32) -> Label {
        let k = self.k.max(e);
        assert!(e >= 1 && k <= MAX_GROUND);
        Label {
            bits: self.bits | 1 << (e - 1),
            k,
        }
    }

    /// Parse the brace form (`{1,3}`, `{}`) against a known ground size.
    pub fn parse_with_ground(s: &str, k: u32) -> Result<Label> {
        let elems = parse_braces(s)?;
        Label::from_elements(k, elems)
    }
}

fn parse_braces(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::Malformed(format!("label `{s}` is not brace-delimited")))?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Malformed(format!("bad element `{t}` in `{s}`")))
        })
        .collect()
}

/// Parses a label whose ground size is its largest element.
impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        let elems = parse_braces(s)?;
        let k = elems.iter().copied().max().unwrap_or(0);
        Label::from_elements(k, elems)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.k)
    }
}

/// Every subset of `[k]` in ascending bit order, the empty set first.
pub fn power_set(k: u32) -> impl Iterator<Item = Label> {
    assert!(k <= MAX_GROUND);
    (0..=full_mask(k)).map(move |bits| Label { bits, k })
}
