//! k-tableaux, standard k-tableaux and k-bitableaux.
//!
//! A k-tableau of shape `lambda / mu` with entries at most `m` is a chain
//! `mu = l_0 ⊂ l_1 ⊂ ... ⊂ l_m = lambda` of k-strict partitions in which
//! every step is a k-horizontal strip; boxes of `l_i / l_{i-1}` carry the
//! entry `i`.

use super::kstrip::n_strip;
use crate::error::{Error, Result};
use crate::partition::{subpartitions, KStrict, Partition};
use crate::poly::{Poly, Vars};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;

/// The k-strict partitions between `inner` and `outer` together with every
/// k-horizontal strip relation among them.
#[derive(Clone, Debug)]
pub struct StripLattice {
    k: usize,
    nodes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `below[i]`: nodes `j != i` with `nodes[j]` a k-strip below `nodes[i]`,
    /// with the strip exponent.
    below: Vec<Vec<(usize, u32)>>,
    inner: usize,
    outer: usize,
}

impl StripLattice {
    pub fn new(outer: &KStrict, inner: &KStrict) -> Result<Self> {
        let k = outer.k();
        let (lam, mu) = (outer.partition(), inner.partition());
        if inner.k() != k {
            return Err(Error::Invalid("mismatched k".into()));
        }
        if !lam.contains(mu) {
            return Err(Error::NotContained { inner: mu.to_string(), outer: lam.to_string() });
        }
        let mut nodes: Vec<Partition> =
            subpartitions(lam).into_iter().filter(|q| q.contains(mu) && q.is_k_strict(k)).collect();
        nodes.sort_by(|a, b| a.size().cmp(&b.size()).then(b.cmp(a)));
        let index: HashMap<Partition, usize> = nodes.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
        let mut below = vec![Vec::new(); nodes.len()];
        for (i, hi) in nodes.iter().enumerate() {
            for (j, lo) in nodes.iter().enumerate() {
                if j != i && hi.contains(lo) {
                    if let Some(n) = n_strip(hi, lo, k) {
                        below[i].push((j, n));
                    }
                }
            }
        }
        let inner_i = index[mu];
        let outer_i = index[lam];
        Ok(StripLattice { k, nodes, index, below, inner: inner_i, outer: outer_i })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nodes(&self) -> &[Partition] {
        &self.nodes
    }

    /// Sum of `2^{n(T)}` over k-tableaux whose entry `i` occurs `content[i-1]`
    /// times.
    pub fn weighted_count(&self, content: &[usize]) -> BigInt {
        let mut cur: HashMap<usize, BigInt> = HashMap::new();
        cur.insert(self.outer, BigInt::from(1));
        for &c in content.iter().rev() {
            let mut next: HashMap<usize, BigInt> = HashMap::new();
            for (node, w) in cur {
                if c == 0 {
                    *next.entry(node).or_insert_with(BigInt::zero) += w;
                    continue;
                }
                let size = self.nodes[node].size();
                for &(j, n) in &self.below[node] {
                    if self.nodes[j].size() + c == size {
                        *next.entry(j).or_insert_with(BigInt::zero) += &w << n;
                    }
                }
            }
            cur = next;
        }
        cur.remove(&self.inner).unwrap_or_default()
    }

    /// Number of standard k-tableaux (one box per step), without weights.
    pub fn standard_count(&self) -> BigInt {
        let mut ways = vec![BigInt::zero(); self.nodes.len()];
        ways[self.inner] = BigInt::from(1);
        for i in 0..self.nodes.len() {
            if i == self.inner {
                continue;
            }
            let size = self.nodes[i].size();
            let mut acc = BigInt::zero();
            for &(j, _) in &self.below[i] {
                if self.nodes[j].size() + 1 == size {
                    acc += &ways[j];
                }
            }
            ways[i] = acc;
        }
        ways[self.outer].clone()
    }

    /// All chains of length `max_entry` from the inner to the outer shape.
    pub fn chains(&self, max_entry: usize) -> Vec<(Vec<Partition>, u32)> {
        // Fewest nonempty steps needed to get from each node down to the inner shape.
        let mut dist = vec![usize::MAX; self.nodes.len()];
        dist[self.inner] = 0;
        for i in 0..self.nodes.len() {
            for &(j, _) in &self.below[i] {
                if dist[j] != usize::MAX {
                    dist[i] = dist[i].min(dist[j] + 1);
                }
            }
        }
        let mut out = Vec::new();
        let mut stack_chain = vec![self.outer];
        self.chain_rec(max_entry, &dist, &mut stack_chain, 0, &mut out);
        out
    }

    fn chain_rec(&self, left: usize, dist: &[usize], chain: &mut Vec<usize>, n: u32, out: &mut Vec<(Vec<Partition>, u32)>) {
        let top = *chain.last().expect("nonempty");
        if left == 0 {
            if top == self.inner {
                let shapes: Vec<Partition> = chain.iter().rev().map(|&i| self.nodes[i].clone()).collect();
                out.push((shapes, n));
            }
            return;
        }
        if dist[top] > left {
            return;
        }
        let mut options: Vec<(usize, u32)> = vec![(top, 0)];
        options.extend(self.below[top].iter().copied());
        options.sort_by(|a, b| self.nodes[b.0].size().cmp(&self.nodes[a.0].size()).then(self.nodes[b.0].cmp(&self.nodes[a.0])));
        for (j, dn) in options {
            chain.push(j);
            self.chain_rec(left - 1, dist, chain, n + dn, out);
            chain.pop();
        }
    }

    /// `sum_T 2^{n(T)} x^T` over k-tableaux with entries at most `vars.x`;
    /// entry `i` is carried by `x_i`.
    pub fn skew_polynomial(&self, vars: Vars) -> Poly {
        let mut above: Vec<Vec<(usize, u32)>> = vec![Vec::new(); self.nodes.len()];
        for (hi, list) in self.below.iter().enumerate() {
            for &(lo, n) in list {
                above[lo].push((hi, n));
            }
        }
        let mut cur: HashMap<usize, Poly> = HashMap::new();
        cur.insert(self.inner, Poly::one(vars));
        for i in 1..=vars.x {
            let mut next: HashMap<usize, Poly> = HashMap::new();
            for (lo, p) in &cur {
                next.entry(*lo).or_insert_with(|| Poly::zero(vars)).add_assign(p);
                for &(hi, n) in &above[*lo] {
                    let step = (self.nodes[hi].size() - self.nodes[*lo].size()) as u32;
                    let term = p.mul(&Poly::x_pow(vars, i, step)).scale(&(BigInt::from(1) << n));
                    next.entry(hi).or_insert_with(|| Poly::zero(vars)).add_assign(&term);
                }
            }
            cur = next;
        }
        cur.remove(&self.outer).unwrap_or_else(|| Poly::zero(vars))
    }

    pub fn contains_shape(&self, q: &Partition) -> bool {
        self.index.contains_key(q)
    }
}

/// A k-tableau, stored as its chain of shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTableau {
    pub k: usize,
    /// `chain[0]` is the inner shape, `chain[last]` the outer one.
    pub chain: Vec<Partition>,
    /// Sum of the strip exponents.
    pub n: u32,
}

impl KTableau {
    pub fn outer(&self) -> &Partition {
        self.chain.last().expect("nonempty chain")
    }

    pub fn inner(&self) -> &Partition {
        &self.chain[0]
    }

    /// Number of occurrences of each entry `1..=m`.
    pub fn content(&self) -> Vec<usize> {
        self.chain.windows(2).map(|w| w[1].size() - w[0].size()).collect()
    }

    /// Entry in each box of the outer shape; `None` for boxes of the inner one.
    pub fn rows(&self) -> Vec<Vec<Option<usize>>> {
        let outer = self.outer();
        let mut rows: Vec<Vec<Option<usize>>> = outer.parts().iter().map(|&l| vec![None; l]).collect();
        for (e, w) in self.chain.windows(2).enumerate() {
            for (r, c) in w[1].minus(&w[0]) {
                rows[r - 1][c - 1] = Some(e + 1);
            }
        }
        rows
    }
}

impl fmt::Display for KTableau {
    /// Rows separated by `/`, inner boxes shown as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| row.iter().map(|e| e.map_or(".".to_string(), |v| v.to_string())).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Every k-tableau of shape `lambda / mu` with entries in `1..=max_entry`.
pub fn enumerate_k_tableaux(lambda: &KStrict, mu: &KStrict, max_entry: usize) -> Result<impl Iterator<Item = KTableau>> {
    let lattice = StripLattice::new(lambda, mu)?;
    let k = lambda.k();
    Ok(lattice.chains(max_entry).into_iter().map(move |(chain, n)| KTableau { k, chain, n }))
}

/// Number of standard k-tableaux of shape `lambda / mu`.
pub fn count_standard_k_tableaux(lambda: &KStrict, mu: &KStrict) -> Result<BigInt> {
    Ok(StripLattice::new(lambda, mu)?.standard_count())
}

/// Fillings of a shape with entries in `1..=max`, strictly increasing along
/// rows and weakly increasing down columns. Each filling is a list of rows.
pub fn row_strict_fillings(shape: &Partition, max: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(max: usize, cells: &[(usize, usize)], pos: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if pos == cells.len() {
            out.push(cur.clone());
            return;
        }
        let (r, c) = cells[pos];
        let left = if c > 1 { cur[r - 1][c - 2] + 1 } else { 1 };
        let above = if r > 1 { cur[r - 2][c - 1] } else { 1 };
        for v in left.max(above)..=max {
            cur[r - 1].push(v);
            rec(max, cells, pos + 1, cur, out);
            cur[r - 1].pop();
        }
    }
    let cells = shape.cells();
    let mut out = Vec::new();
    let mut cur: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    rec(max, &cells, 0, &mut cur, &mut out);
    out
}

/// A k-bitableau: a marked part (entries `1'..k'`) of shape `marked_shape`,
/// and a k-tableau of unmarked entries on the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KBitableau {
    pub marked_shape: Partition,
    /// Rows of marked entries, `j` standing for `j'`.
    pub marked: Vec<Vec<usize>>,
    pub unmarked: KTableau,
}

impl KBitableau {
    pub fn n(&self) -> u32 {
        self.unmarked.n
    }

    /// Number of occurrences of `1', 2', ..., k'`.
    pub fn marked_content(&self, k: usize) -> Vec<usize> {
        let mut v = vec![0; k];
        for row in &self.marked {
            for &e in row {
                v[e - 1] += 1;
            }
        }
        v
    }
}

impl fmt::Display for KBitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.unmarked.rows();
        let text: Vec<String> = rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, e)| match e {
                        Some(v) => v.to_string(),
                        None => format!("{}'", self.marked[r][c]),
                    })
                    .collect::<Vec<_>>()
                    .join("")
            })
            .collect();
        write!(f, "{}", text.join("/"))
    }
}

/// Every k-bitableau of shape `lambda` with unmarked entries at most
/// `max_unmarked`.
pub fn enumerate_k_bitableaux(lambda: &KStrict, max_unmarked: usize) -> Result<Vec<KBitableau>> {
    let k = lambda.k();
    let lam = lambda.partition();
    let mut out = Vec::new();
    let mut shapes: Vec<Partition> = subpartitions(lam).into_iter().filter(|q| q.first() <= k).collect();
    shapes.sort_by(|a, b| a.size().cmp(&b.size()).then(b.cmp(a)));
    for shape in shapes {
        let inner = KStrict::new(k, shape.clone())?;
        let tableaux: Vec<KTableau> = enumerate_k_tableaux(lambda, &inner, max_unmarked)?.collect();
        if tableaux.is_empty() {
            continue;
        }
        for marked in row_strict_fillings(&shape, k) {
            for t in &tableaux {
                out.push(KBitableau { marked_shape: shape.clone(), marked: marked.clone(), unmarked: t.clone() });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ks(k: usize, s: &str) -> KStrict {
        KStrict::new(k, s.parse().unwrap()).unwrap()
    }

    #[test]
    fn standard_tableaux_of_four_one() {
        let empty = ks(1, "");
        assert_eq!(count_standard_k_tableaux(&ks(1, "4,1"), &empty).unwrap(), BigInt::from(3));
        let mut ts: Vec<String> = enumerate_k_tableaux(&ks(1, "4,1"), &empty, 5)
            .unwrap()
            .filter(|t| t.content().iter().all(|&c| c == 1))
            .map(|t| t.to_string())
            .collect();
        ts.sort();
        assert_eq!(ts, vec!["1234/5", "1245/3", "1345/2"]);
    }

    #[test]
    fn bitableaux_of_three_one() {
        let all = enumerate_k_bitableaux(&ks(1, "3,1"), 2).unwrap();
        assert_eq!(all.len(), 12);
        let by_n = |n: u32| all.iter().filter(|b| b.n() == n).count();
        assert_eq!((by_n(3), by_n(2), by_n(1)), (1, 7, 4));
        let shown: Vec<String> = all.iter().map(|b| b.to_string()).collect();
        assert!(shown.contains(&"1'12/1".to_string()));
        assert!(shown.contains(&"1'22/1'".to_string()));
    }

    #[test]
    fn weighted_count_matches_enumeration() {
        let lam = ks(2, "4,2,1");
        let empty = ks(2, "");
        let lattice = StripLattice::new(&lam, &empty).unwrap();
        let content = [3, 2, 2];
        let direct: BigInt = enumerate_k_tableaux(&lam, &empty, 3)
            .unwrap()
            .filter(|t| t.content() == content)
            .map(|t| BigInt::from(1) << t.n)
            .sum();
        assert_eq!(lattice.weighted_count(&content), direct);
    }

    #[test]
    fn row_strict_fillings_count_schur() {
        // s_{(2,1)}(y1, y2) has 2 monomials; the transposed shape (2,1) gives 2 fillings.
        assert_eq!(row_strict_fillings(&"2,1".parse().unwrap(), 2).len(), 2);
    }
}
