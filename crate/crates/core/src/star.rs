//! Star sequences of sets and forests of them.
//!
//! An `m`-star is an ordered list `A1..Am` of distinct sets with
//!
//! * `m >= 4`: `A1 = A2 ∪ A4`, every even-indexed `A2i ⊂ A1`, and every
//!   odd-indexed `A(2i+1) ⊂ A2i`;
//! * `m = 3`: `A1 = A2 ∪ A3`;
//! * `m = 2`: `A2 ⊂ A1`;
//! * `m <= 1`: nothing.
//!
//! Containments are only imposed between indices that exist. Since the
//! sets are distinct, every `⊂` is checked as `⊆`.

use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::label::Label;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct StarSequence(Vec<Label>);

impl StarSequence {
    pub fn new(sets: Vec<Label>) -> Self {
        StarSequence(sets)
    }

    pub fn empty() -> Self {
        StarSequence(Vec::new())
    }

    pub fn into_inner(self) -> Vec<Label> {
        self.0
    }

    /// Ground size shared by every element, `None` when empty.
    pub fn ground(&self) -> Result<Option<u32>> {
        let mut it = self.0.iter().map(|l| l.ground());
        let Some(k) = it.next() else {
            return Ok(None);
        };
        if it.all(|g| g == k) {
            Ok(Some(k))
        } else {
            Err(Error::Malformed(
                "star elements over different ground sets".into(),
            ))
        }
    }

    /// 1-based access, matching the usual `A1..Am` numbering.
    fn at(&self, i: usize) -> Label {
        self.0[i - 1]
    }
}

impl Deref for StarSequence {
    type Target = [Label];

    fn deref(&self) -> &[Label] {
        &self.0
    }
}

impl From<Vec<Label>> for StarSequence {
    fn from(v: Vec<Label>) -> Self {
        StarSequence(v)
    }
}

impl fmt::Display for StarSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StarSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

fn all_distinct(sets: &[Label]) -> bool {
    let mut seen = HashSet::with_capacity(sets.len());
    sets.iter().all(|l| seen.insert(l.bits()))
}

pub fn is_m_star(seq: &StarSequence) -> Result<bool> {
    seq.ground()?;
    if !all_distinct(seq) {
        return Ok(false);
    }
    let m = seq.len();
    let ok = match m {
        0 | 1 => true,
        2 => seq.at(2).is_subset(seq.at(1)),
        3 => seq.at(2).union(seq.at(3)).bits() == seq.at(1).bits(),
        _ => {
            let a1 = seq.at(1);
            a1.bits() == seq.at(2).union(seq.at(4)).bits()
                && (2..=m).all(|j| {
                    if j % 2 == 0 {
                        seq.at(j).is_subset(a1)
                    } else {
                        seq.at(j).is_subset(seq.at(j - 1))
                    }
                })
        }
    };
    Ok(ok)
}

/// Whether `blocks` partition the nonempty subsets of `[k]` (all subsets
/// when `include_empty`) into stars.
pub fn is_forest_partition(blocks: &[StarSequence], k: u32, include_empty: bool) -> bool {
    if k > crate::label::MAX_GROUND {
        return false;
    }
    let mut seen = HashSet::new();
    for block in blocks {
        if !matches!(is_m_star(block), Ok(true)) {
            return false;
        }
        for l in block.iter() {
            if l.ground() != k || (l.is_empty() && !include_empty) || !seen.insert(l.bits()) {
                return false;
            }
        }
    }
    let expected = (1u64 << k) - u64::from(!include_empty);
    seen.len() as u64 == expected
}
