//! Term orders on squarefree monomials, with ground order `1 < 2 < … < n`.
//!
//! Both orders compare by cardinality first. Within a cardinality class:
//!
//! - `RevLex`: `S ≺ R` iff the minimal element of `S △ R` belongs to `S`.
//!   So `{1,2,3}` is the smallest 3-set and `{n-2,n-1,n}` the largest.
//! - `Lex`: `S ≺ R` iff the maximal element of `S △ R` belongs to `R`, i.e.
//!   lexicographic comparison of the decreasingly sorted vertex lists. Under
//!   it `{1,2,4} ≺ {1,3,4} ≺ {1,2,5}`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::face::{k_subsets, FaceSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    #[default]
    RevLex,
    Lex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Ascending,
    Descending,
}

impl TermOrder {
    pub fn compare(self, s: FaceSet, r: FaceSet) -> Ordering {
        match s.len().cmp(&r.len()) {
            Ordering::Equal => {}
            other => return other,
        }
        let diff = s.symmetric_difference(r);
        if diff.is_empty() {
            return Ordering::Equal;
        }
        match self {
            TermOrder::RevLex => {
                if s.contains(diff.min().unwrap()) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            TermOrder::Lex => {
                if s.contains(diff.max().unwrap()) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    #[inline]
    pub fn less(self, s: FaceSet, r: FaceSet) -> bool {
        self.compare(s, r) == Ordering::Less
    }

    /// All `d`-subsets of `[n]`, sorted in the requested direction.
    pub fn enumerate(self, n: usize, d: usize, direction: Direction) -> Vec<FaceSet> {
        let mut all: Vec<FaceSet> = k_subsets(n, d).collect();
        match direction {
            Direction::Ascending => all.sort_by(|a, b| self.compare(*a, *b)),
            Direction::Descending => all.sort_by(|a, b| self.compare(*b, *a)),
        }
        all
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::RevLex => "revlex",
            TermOrder::Lex => "lex",
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "revlex" | "rev" => Ok(TermOrder::RevLex),
            "lex" => Ok(TermOrder::Lex),
            other => Err(Error::InvalidArgument(alloc::format!("unknown term order `{other}`"))),
        }
    }
}
