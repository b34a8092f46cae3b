//! The type C Pieri relation `lambda -> mu` and k-horizontal strips.
//!
//! Columns `1..=k` are the left part of a diagram and columns `> k` the right
//! part. Two boxes `(r, c)` (left) and `(r', c')` (right) are k-related when
//! `c + c' = 2k + 2 + r - r'`. For strips, two boxes are k'-related when
//! `|c - k - 1/2| + r` agrees; we compare the doubled quantity
//! `|2c - 2k - 1| + 2r` to stay in integers.

use super::strips::{add_horizontal_strip, components, Adjacency};
use crate::partition::{Cell, KStrict, Partition};
use std::collections::BTreeSet;

fn k_related(k: usize, left: Cell, right: Cell) -> bool {
    let (r, c) = left;
    let (rr, cc) = right;
    c + cc + rr == 2 * k + 2 + r
}

fn doubled_level(k: usize, (r, c): Cell) -> usize {
    (2 * c).abs_diff(2 * k + 1) + 2 * r
}

/// Partitions obtained from `lambda` by deleting a vertical strip contained
/// in the first `k` columns.
fn left_vertical_removals(lambda: &Partition, k: usize) -> Vec<Partition> {
    let rows = lambda.parts();
    let mut out = Vec::new();
    let movable: Vec<usize> = (0..rows.len()).filter(|&i| rows[i] <= k).collect();
    for mask in 0u64..(1u64 << movable.len()) {
        let mut v = rows.to_vec();
        for (bit, &i) in movable.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                v[i] -= 1;
            }
        }
        if let Ok(p) = Partition::new(v) {
            out.push(p);
        }
    }
    out
}

/// Checks the relation `lambda -> mu` and returns the exponent `N(lambda, mu)`
/// of 2 in the Pieri coefficient of `W_mu` in `w_p W_lambda`,
/// `p = |mu| - |lambda|`.
pub fn pieri_relation(k: usize, lambda: &Partition, mu: &Partition) -> Option<u32> {
    if mu.size() < lambda.size() || !mu.is_k_strict(k) || !lambda.is_k_strict(k) {
        return None;
    }
    let reachable = left_vertical_removals(lambda, k).iter().any(|nu| {
        mu.contains(nu) && (1..=mu.len()).all(|r| mu.row(r + 1) <= nu.row(r))
    });
    if !reachable {
        return None;
    }
    let new_right: BTreeSet<Cell> = mu.minus(lambda).into_iter().filter(|&(_, c)| c > k).collect();
    let mut mentioned: BTreeSet<Cell> = BTreeSet::new();
    for i in 1..=k {
        let a = lambda.col(i);
        let b = mu.col(i);
        let related = |r: usize| -> Vec<Cell> { new_right.iter().copied().filter(|&bx| k_related(k, (r, i), bx)).collect() };
        if b == a {
            let rel = related(a);
            if rel.len() > 1 {
                return None;
            }
            mentioned.extend(rel);
        } else if b < a {
            let mut row = None;
            for r in b..=a {
                let rel = related(r);
                if rel.len() != 1 {
                    return None;
                }
                match row {
                    None => row = Some(rel[0].0),
                    Some(x) if x != rel[0].0 => return None,
                    _ => {}
                }
                mentioned.insert(rel[0]);
            }
        }
    }
    let rest: BTreeSet<Cell> = new_right.difference(&mentioned).copied().collect();
    let n = components(&rest, Adjacency::Vertex).iter().filter(|comp| comp.iter().all(|&(_, c)| c != k + 1)).count();
    Some(n as u32)
}

/// Every `mu` with `lambda -> mu` and `|mu| = |lambda| + p`, with the exponent
/// `N(lambda, mu)`, dominant shapes first.
pub fn pieri_targets(lambda: &KStrict, p: usize) -> Vec<(Partition, u32)> {
    let k = lambda.k();
    let lam = lambda.partition();
    let mut candidates: BTreeSet<Partition> = BTreeSet::new();
    for nu in left_vertical_removals(lam, k) {
        let extra = lam.size() - nu.size();
        for mu in add_horizontal_strip(&nu, p + extra) {
            if mu.is_k_strict(k) {
                candidates.insert(mu);
            }
        }
    }
    candidates.into_iter().rev().filter_map(|mu| pieri_relation(k, lam, &mu).map(|n| (mu, n))).collect()
}

/// First-row threshold used to read k-horizontal strips off the Pieri rule.
pub fn strip_threshold(lambda: &Partition, k: usize) -> usize {
    (lambda.first() + 1).max(lambda.len() + 2 * k)
}

/// `n(lambda / mu)` read off the Pieri rule: `mu` is a k-horizontal strip
/// below `lambda` exactly when `lambda -> (p + r, mu)` for a large `p`,
/// `r = |lambda| - |mu|`.
pub fn n_strip_oracle(lambda: &Partition, mu: &Partition, k: usize) -> Option<u32> {
    n_strip_oracle_with(lambda, mu, k, strip_threshold(lambda, k))
}

/// [`n_strip_oracle`] with an explicit first-row parameter `p` (at least the
/// threshold).
pub fn n_strip_oracle_with(lambda: &Partition, mu: &Partition, k: usize, p: usize) -> Option<u32> {
    if mu.size() > lambda.size() || mu.first() >= p {
        return None;
    }
    let r = lambda.size() - mu.size();
    let target = Partition::new(mu.with_first(p + r)).ok()?;
    pieri_relation(k, lambda, &target)
}

/// `n(lambda / mu)` when `mu` is a k-horizontal strip below `lambda`, via the
/// direct characterization with a virtual row 0 above the diagram.
pub fn n_strip(lambda: &Partition, mu: &Partition, k: usize) -> Option<u32> {
    if !lambda.contains(mu) || !lambda.is_k_strict(k) || !mu.is_k_strict(k) {
        return None;
    }
    let skew: Vec<Cell> = lambda.minus(mu);
    // Every box must lie on the rim, and right boxes form a horizontal strip.
    if skew.iter().any(|&(r, c)| lambda.has_cell((r + 1, c + 1))) {
        return None;
    }
    let mut right_cols = BTreeSet::new();
    for &(_, c) in skew.iter().filter(|&&(_, c)| c > k) {
        if !right_cols.insert(c) {
            return None;
        }
    }
    let left: Vec<Cell> = skew.iter().copied().filter(|&(_, c)| c <= k).collect();
    let left_levels: BTreeSet<usize> = left.iter().map(|&b| doubled_level(k, b)).collect();
    // Bottom boxes of lambda that survive in mu, in right columns; row 0 boxes
    // sit above empty columns. Row 0 partners of left boxes lie in columns up
    // to 2k + len(lambda), so the scan reaches one column past that.
    let last_col = lambda.first().max(2 * k + lambda.len()) + 1;
    let mut related = Vec::new();
    let mut free: BTreeSet<Cell> = BTreeSet::new();
    for c in k + 1..=last_col {
        let r = lambda.col(c);
        if mu.col(c) != r {
            continue;
        }
        if left_levels.contains(&doubled_level(k, (r, c))) {
            related.push((r, c));
        } else {
            free.insert((r, c));
        }
    }
    let mut levels = BTreeSet::new();
    for &b in &related {
        if !levels.insert(doubled_level(k, b)) {
            return None;
        }
    }
    for col in 1..=k {
        let in_col: Vec<Cell> = left.iter().copied().filter(|&(_, c)| c == col).collect();
        if in_col.len() < 2 {
            continue;
        }
        let mut row = None;
        for b in in_col {
            let lvl = doubled_level(k, b);
            let partner = related.iter().find(|&&x| doubled_level(k, x) == lvl)?;
            match row {
                None => row = Some(partner.0),
                Some(x) if x != partner.0 => return None,
                _ => {}
            }
        }
    }
    let n = components(&free, Adjacency::Vertex).iter().filter(|comp| comp.iter().all(|&(_, c)| c != k + 1)).count();
    Some(n as u32)
}

pub fn is_k_horizontal_strip(lambda: &Partition, mu: &Partition, k: usize) -> bool {
    n_strip(lambda, mu, k).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn targets(k: usize, lam: &str, pp: usize) -> Vec<(String, u32)> {
        pieri_targets(&KStrict::new(k, p(lam)).unwrap(), pp).into_iter().map(|(m, n)| (m.to_string(), n)).collect()
    }

    #[test]
    fn pieri_p1_on_3211() {
        let mut got = targets(1, "3,2,1,1", 1);
        got.sort();
        assert_eq!(got, vec![("3,2,1,1,1".into(), 0), ("4,2,1,1".into(), 1), ("6,2".into(), 0)]);
    }

    #[test]
    fn pieri_p3_on_21() {
        let mut got = targets(1, "2,1", 3);
        got.sort();
        let want: Vec<(String, u32)> =
            vec![("3,2,1".into(), 0), ("4,1,1".into(), 1), ("4,2".into(), 0), ("5,1".into(), 2), ("6".into(), 1)];
        assert_eq!(got, want);
    }

    #[test]
    fn strip_examples() {
        assert_eq!(n_strip(&p("4,2,1"), &p("3,2,1"), 2), Some(1));
        assert_eq!(n_strip(&p("4,2,1"), &p("2,2"), 2), Some(2));
        assert_eq!(n_strip(&p("4,2,1"), &p("4,2,1"), 2), Some(0));
        assert_eq!(n_strip(&p("3,1"), &p("3"), 1), None);
        assert_eq!(n_strip(&p("3"), &p(""), 1), Some(1));
    }

    #[test]
    fn strip_characterization_agrees_with_pieri_rule() {
        for k in 0..=3 {
            for size in 0..=8 {
                for lam in crate::partition::k_strict_partitions(size, k) {
                    for mu in crate::partition::subpartitions(&lam) {
                        if !mu.is_k_strict(k) {
                            continue;
                        }
                        assert_eq!(n_strip(&lam, &mu, k), n_strip_oracle(&lam, &mu, k), "k={k} {lam}/{mu}");
                    }
                }
            }
        }
    }
}
