//! Finite sets of index pairs `(i, j)` with `1 <= i < j`.

use crate::error::{Error, Result};
use crate::partition::Partition;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PairSet(BTreeSet<(usize, usize)>);

impl PairSet {
    pub fn new() -> Self {
        PairSet(BTreeSet::new())
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        let mut s = BTreeSet::new();
        for (i, j) in pairs {
            if i == 0 || i >= j {
                return Err(Error::InvalidPairSet(format!("({i},{j}) is not a pair with 1 <= i < j")));
            }
            s.insert((i, j));
        }
        Ok(PairSet(s))
    }

    /// All pairs `(i, j)` with `i < j <= len`.
    pub fn full(len: usize) -> Self {
        let mut s = BTreeSet::new();
        for j in 2..=len {
            for i in 1..j {
                s.insert((i, j));
            }
        }
        PairSet(s)
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.0.contains(&(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest index appearing in the set.
    pub fn max_index(&self) -> usize {
        self.0.iter().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn with(&self, i: usize, j: usize) -> PairSet {
        let mut s = self.0.clone();
        s.insert((i, j));
        PairSet(s)
    }

    /// Order ideal test: membership of `(i, j)` forces `(i-1, j)` and `(i, j-1)`.
    pub fn is_valid(&self) -> bool {
        self.0.iter().all(|&(i, j)| {
            (i == 1 || self.contains(i - 1, j)) && (j == i + 1 || self.contains(i, j - 1))
        })
    }

    pub fn validated(self) -> Result<Self> {
        if self.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidPairSet(self.to_string()))
        }
    }
}

impl fmt::Display for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(i, j)| if i < 10 && j < 10 { format!("{i}{j}") } else { format!("{i}-{j}") })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PairSet {
    type Err = Error;
    /// Accepts `12,13,23` (single-digit indices) or `1-12,2-12`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut pairs = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let bad = || Error::Parse(format!("bad pair '{tok}'"));
            let (i, j) = if let Some((a, b)) = tok.split_once(['-', ':']) {
                (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
            } else if tok.len() == 2 && tok.chars().all(|c| c.is_ascii_digit()) {
                let d: Vec<usize> = tok.chars().map(|c| c as usize - '0' as usize).collect();
                (d[0], d[1])
            } else {
                return Err(bad());
            };
            pairs.push((i, j));
        }
        PairSet::from_pairs(pairs)
    }
}

/// Pairs `(i, j)`, `j <= len(lambda)`, with `lambda_i + lambda_j > 2k + j - i`.
pub fn cset(lambda: &Partition, k: usize) -> PairSet {
    let mut s = BTreeSet::new();
    let l = lambda.len();
    for j in 2..=l {
        for i in 1..j {
            if lambda.row(i) + lambda.row(j) + i > 2 * k + j {
                s.insert((i, j));
            }
        }
    }
    PairSet(s)
}

/// Pairs with `j <= len` outside `d` that are either in the first row or sit
/// diagonally below-right of a pair of `d`.
pub fn outside_rim(d: &PairSet, len: usize) -> PairSet {
    let mut s = BTreeSet::new();
    for j in 2..=len {
        for i in 1..j {
            if !d.contains(i, j) && (i == 1 || d.contains(i - 1, j - 1)) {
                s.insert((i, j));
            }
        }
    }
    PairSet(s)
}

/// Which of the two tameness shapes a position `j` has for `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tameness {
    /// `(j, j+1)` is outside `d` and the columns `j`, `j+1` agree above.
    Lower,
    /// `(j, j+1)` is in `d` and the rows `j`, `j+1` agree to the right.
    Upper,
}

pub fn tameness(d: &PairSet, j: usize) -> Option<Tameness> {
    if j == 0 {
        return None;
    }
    let bound = d.max_index() + 2;
    if !d.contains(j, j + 1) {
        let ok = (1..j).all(|h| d.contains(h, j) == d.contains(h, j + 1));
        ok.then_some(Tameness::Lower)
    } else {
        let ok = (j + 2..=bound).all(|h| d.contains(j, h) == d.contains(j + 1, h));
        ok.then_some(Tameness::Upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cset_examples() {
        let l: Partition = "6,2,1".parse().unwrap();
        assert_eq!(cset(&l, 2), PairSet::from_pairs([(1, 2), (1, 3)]).unwrap());
        let l: Partition = "4,2,1".parse().unwrap();
        assert_eq!(cset(&l, 0), PairSet::full(3));
    }

    #[test]
    fn parse_and_validity() {
        let d: PairSet = "12,13,23".parse().unwrap();
        assert!(d.is_valid());
        let bad: PairSet = "13".parse().unwrap();
        assert!(!bad.is_valid());
        assert_eq!("1-12".parse::<PairSet>().unwrap().max_index(), 12);
        assert_eq!(d.to_string(), "{12,13,23}");
    }

    #[test]
    fn outside_rim_of_small_set() {
        let d: PairSet = "12,13".parse().unwrap();
        let rim = outside_rim(&d, 4);
        assert_eq!(rim, PairSet::from_pairs([(1, 4), (2, 3), (2, 4)]).unwrap());
    }

    #[test]
    fn tameness_cases() {
        let d: PairSet = "12".parse().unwrap();
        assert_eq!(tameness(&d, 1), Some(Tameness::Upper));
        let d: PairSet = "12,13,14".parse().unwrap();
        assert_eq!(tameness(&d, 3), Some(Tameness::Lower));
        assert_eq!(tameness(&d, 2), Some(Tameness::Lower));
        assert_eq!(tameness(&d, 1), None);
    }
}
