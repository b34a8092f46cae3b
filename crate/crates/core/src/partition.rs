//! Integer vectors, partitions and k-strict partitions.
//!
//! Rows and columns of Young diagrams are numbered from 1; a box is a
//! `(row, col)` pair. Row 0 is used by some strip computations as a virtual
//! row above the diagram.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A box of a diagram, `(row, col)`, both counted from 1 (row 0 allowed as
/// the virtual top row).
pub type Cell = (usize, usize);

/// Finitely supported integer sequence with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntegerVector(Vec<i64>);

impl IntegerVector {
    pub fn new(mut v: Vec<i64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        IntegerVector(v)
    }

    /// Entries up to the last nonzero one.
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Entry `i` counted from 0; zero past the end.
    pub fn at(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Index of the last nonzero entry (1-based), or 0.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Number of nonzero entries.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&x| x != 0).count()
    }

    pub fn is_partition(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_partition() {
            return Err(Error::NotPartition(self.to_string()));
        }
        Ok(Partition(self.0.iter().map(|&x| x as usize).collect()))
    }

    /// Entries padded with zeros to length `len` (never truncates).
    pub fn padded(&self, len: usize) -> Vec<i64> {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    /// Result of the raising operator `R_ij` (1-based, `i < j`).
    pub fn raise(&self, i: usize, j: usize) -> IntegerVector {
        let mut v = self.padded(j);
        v[i - 1] += 1;
        v[j - 1] -= 1;
        IntegerVector::new(v)
    }
}

impl From<Vec<i64>> for IntegerVector {
    fn from(v: Vec<i64>) -> Self {
        IntegerVector::new(v)
    }
}

impl From<&Partition> for IntegerVector {
    fn from(p: &Partition) -> Self {
        IntegerVector::new(p.0.iter().map(|&x| x as i64).collect())
    }
}

impl fmt::Display for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for IntegerVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(IntegerVector::default());
        }
        let mut v = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            v.push(tok.parse::<i64>().map_err(|_| Error::Parse(format!("bad entry '{tok}'")))?);
        }
        Ok(IntegerVector::new(v))
    }
}

/// Whether `a` dominates `b`: equal weights and every prefix sum of `a` is at
/// least the matching prefix sum of `b`.
pub fn dominates(a: &IntegerVector, b: &IntegerVector) -> bool {
    if a.weight() != b.weight() {
        return false;
    }
    let n = a.length().max(b.length());
    let (mut sa, mut sb) = (0i64, 0i64);
    for i in 0..n {
        sa += a.at(i);
        sb += b.at(i);
        if sa < sb {
            return false;
        }
    }
    true
}

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, dropping zero parts; fails unless weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` counted from 1; zero past the end (and for `i == 0`, which
    /// callers treat separately).
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.row(1)
    }

    /// Length of column `c` (1-based).
    pub fn col(&self, c: usize) -> usize {
        self.0.iter().take_while(|&&x| x >= c).count()
    }

    pub fn conjugate(&self) -> Partition {
        Partition((1..=self.first()).map(|c| self.col(c)).collect())
    }

    /// Whether the box `(r, c)` lies in the diagram; row 0 is never inside.
    pub fn has_cell(&self, (r, c): Cell) -> bool {
        r >= 1 && c >= 1 && self.row(r) >= c
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &l) in self.0.iter().enumerate() {
            for c in 1..=l {
                out.push((i + 1, c));
            }
        }
        out
    }

    /// Boxes of `self` that are not in `other` (plain set difference).
    pub fn minus(&self, other: &Partition) -> Vec<Cell> {
        self.cells().into_iter().filter(|&b| !other.has_cell(b)).collect()
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.0.iter().filter(|&&x| x == part).count()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Parts larger than `k` are pairwise distinct.
    pub fn is_k_strict(&self, k: usize) -> bool {
        self.0.windows(2).all(|w| w[0] <= k || w[0] > w[1])
    }

    /// Prepends a part (not checked).
    pub fn with_first(&self, p: usize) -> Vec<usize> {
        let mut v = vec![p];
        v.extend_from_slice(&self.0);
        v
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x as i64).collect()
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.first() <= cols
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v: IntegerVector = s.parse()?;
        v.to_partition()
    }
}

/// A partition together with the parameter `k` for which it is k-strict.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct KStrict {
    k: usize,
    partition: Partition,
}

impl KStrict {
    pub fn new(k: usize, partition: Partition) -> Result<Self> {
        if !partition.is_k_strict(k) {
            return Err(Error::NotKStrict { partition: partition.to_string(), k });
        }
        Ok(KStrict { k, partition })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }
}

impl fmt::Display for KStrict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)
    }
}

/// Partitions of `n` with parts at most `max_part` and at most `max_len` parts,
/// in lexicographically decreasing order.
pub fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn rec(n: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, n)
}

pub fn k_strict_partitions(n: usize, k: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| p.is_k_strict(k)).collect()
}

pub fn strict_partitions(n: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| p.is_strict()).collect()
}

/// All partitions contained in `outer` (including `outer` and the empty one).
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &Partition, i: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > outer.len() {
            out.push(Partition::new(cur.clone()).expect("decreasing"));
            return;
        }
        let hi = outer.row(i).min(bound);
        for x in (0..=hi).rev() {
            cur.push(x);
            rec(outer, i + 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer, 1, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// k-strict partitions inside the `(n-k) x (n+k)` rectangle.
pub fn grassmannian_index_set(k: usize, n: usize) -> Vec<Partition> {
    if k > n {
        return Vec::new();
    }
    let rows = n - k;
    let cols = n + k;
    let rect = Partition(vec![cols; rows]);
    let mut out: Vec<Partition> = subpartitions(&rect).into_iter().filter(|p| p.is_k_strict(k)).collect();
    out.sort_by(|a, b| a.size().cmp(&b.size()).then(b.cmp(a)));
    out
}

/// Compositions (nonnegative, length exactly `len`) of `n`.
pub fn compositions(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if len == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if len == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in (0..=n).rev() {
            cur.push(x);
            rec(n - x, len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, len, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("8,5,2,1").parts(), &[8, 5, 2, 1]);
        assert!(p("").is_empty());
        assert_eq!(p("3,1,0").to_string(), "3,1");
        assert!("1,3".parse::<Partition>().is_err());
        let v: IntegerVector = "3,-1,0,0".parse().unwrap();
        assert_eq!(v.length(), 2);
        assert_eq!(v.weight(), 2);
    }

    #[test]
    fn conjugate_and_columns() {
        let l = p("4,2,1");
        assert_eq!(l.conjugate(), p("3,2,1,1"));
        assert_eq!(l.col(2), 2);
        assert_eq!(l.conjugate().conjugate(), l);
    }

    #[test]
    fn k_strictness() {
        assert!(p("6,2,1").is_k_strict(2));
        assert!(p("2,2,1").is_k_strict(2));
        assert!(!p("3,3").is_k_strict(2));
        assert!(p("3,3").is_k_strict(3));
    }

    #[test]
    fn dominance_is_prefix_sums() {
        let a = IntegerVector::from(vec![3, 1]);
        let b = IntegerVector::from(vec![2, 2]);
        assert!(dominates(&a, &b));
        assert!(!dominates(&b, &a));
        assert!(dominates(&a, &a));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions(8).len(), 22);
        assert_eq!(strict_partitions(10).len(), 10);
        assert_eq!(subpartitions(&p("2,1")).len(), 5);
        assert_eq!(compositions(3, 2).len(), 4);
        let set = grassmannian_index_set(1, 3);
        assert!(set.contains(&p("4,1")));
        assert!(set.iter().all(|q| q.fits_in(2, 4) && q.is_k_strict(1)));
    }

    #[test]
    fn raising_moves_one_unit() {
        let v = IntegerVector::from(vec![2, 1]);
        assert_eq!(v.raise(1, 3).entries(), &[3, 1, -1]);
    }
}
