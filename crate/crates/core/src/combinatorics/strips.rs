//! Ordinary horizontal and vertical strips, rims and connected components.

use crate::partition::{Cell, Partition};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripType {
    /// No two boxes in a column or in a row (includes the empty strip).
    Both,
    Horizontal,
    Vertical,
    Neither,
}

/// Shape of `outer / inner`, or `None` unless `inner` is contained in `outer`.
pub fn strip_type(outer: &Partition, inner: &Partition) -> Option<StripType> {
    if !outer.contains(inner) {
        return None;
    }
    let horizontal = (1..=outer.len()).all(|r| outer.row(r + 1) <= inner.row(r));
    let vertical = (1..=outer.len()).all(|r| outer.row(r) <= inner.row(r) + 1);
    Some(match (horizontal, vertical) {
        (true, true) => StripType::Both,
        (true, false) => StripType::Horizontal,
        (false, true) => StripType::Vertical,
        (false, false) => StripType::Neither,
    })
}

pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    matches!(strip_type(outer, inner), Some(StripType::Both | StripType::Horizontal))
}

pub fn is_vertical_strip(outer: &Partition, inner: &Partition) -> bool {
    matches!(strip_type(outer, inner), Some(StripType::Both | StripType::Vertical))
}

/// All `mu` containing `nu` with `mu / nu` a horizontal strip of `size` boxes.
pub fn add_horizontal_strip(nu: &Partition, size: usize) -> Vec<Partition> {
    fn rec(nu: &Partition, r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let base = nu.row(r);
        if r > nu.len() {
            // New row below: at most nu.row(r - 1) boxes (r - 1 >= 1 here or nu empty).
            let cap = if r == 1 { usize::MAX } else { nu.row(r - 1) };
            if left <= cap {
                let mut v = cur.clone();
                v.push(left);
                out.push(Partition::from_unsorted(v));
            }
            return;
        }
        let cap = if r == 1 { left } else { (nu.row(r - 1) - base).min(left) };
        for add in (0..=cap).rev() {
            cur.push(base + add);
            rec(nu, r + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nu, 1, size, &mut Vec::new(), &mut out);
    out
}

/// All `mu` contained in `lambda` with `lambda / mu` a horizontal strip of
/// `size` boxes.
pub fn remove_horizontal_strip(lambda: &Partition, size: usize) -> Vec<Partition> {
    fn rec(lam: &Partition, r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if r > lam.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("decreasing"));
            }
            return;
        }
        let lo = lam.row(r + 1);
        let top = lam.row(r);
        for keep in (lo..=top).rev() {
            let removed = top - keep;
            if removed > left {
                continue;
            }
            cur.push(keep);
            rec(lam, r + 1, left - removed, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 1, size, &mut Vec::new(), &mut out);
    out
}

/// All `mu` contained in `lambda` with `lambda / mu` a vertical strip of
/// `size` boxes.
pub fn remove_vertical_strip(lambda: &Partition, size: usize) -> Vec<Partition> {
    remove_horizontal_strip(&lambda.conjugate(), size).iter().map(Partition::conjugate).collect()
}

/// Boxes `(r, c)` of `lambda` such that `(r + 1, c + 1)` is not in `lambda`.
pub fn rim(lambda: &Partition) -> BTreeSet<Cell> {
    lambda.cells().into_iter().filter(|&(r, c)| !lambda.has_cell((r + 1, c + 1))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjacency {
    /// Boxes sharing at least a corner.
    Vertex,
    /// Boxes sharing an edge.
    Edge,
}

/// Connected components of a set of boxes.
pub fn components(cells: &BTreeSet<Cell>, adjacency: Adjacency) -> Vec<Vec<Cell>> {
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut out = Vec::new();
    for &start in cells {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some((r, c)) = stack.pop() {
            comp.push((r, c));
            for &(other_r, other_c) in cells {
                if seen.contains(&(other_r, other_c)) {
                    continue;
                }
                let dr = r.abs_diff(other_r);
                let dc = c.abs_diff(other_c);
                let touch = match adjacency {
                    Adjacency::Vertex => dr <= 1 && dc <= 1,
                    Adjacency::Edge => dr + dc == 1,
                };
                if touch {
                    seen.insert((other_r, other_c));
                    stack.push((other_r, other_c));
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn strip_types() {
        assert_eq!(strip_type(&p("3,1"), &p("2")), Some(StripType::Both));
        assert_eq!(strip_type(&p("3,1"), &p("1")), Some(StripType::Horizontal));
        assert_eq!(strip_type(&p("2,2"), &p("1,1")), Some(StripType::Vertical));
        assert_eq!(strip_type(&p("2,2"), &p("1")), Some(StripType::Neither));
        assert_eq!(strip_type(&p("2"), &p("1,1")), None);
    }

    #[test]
    fn horizontal_strip_enumeration() {
        let mut got: Vec<String> = add_horizontal_strip(&p("2,1"), 2).iter().map(|q| q.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["2,2,1", "3,1,1", "3,2", "4,1"]);
        for mu in remove_horizontal_strip(&p("4,2,1"), 2) {
            assert!(is_horizontal_strip(&p("4,2,1"), &mu));
            assert_eq!(mu.size(), 5);
        }
        assert_eq!(remove_vertical_strip(&p("2,2"), 2), vec![p("1,1")]);
    }

    #[test]
    fn rim_and_components() {
        let r = rim(&p("3,2"));
        assert!(!r.contains(&(1, 1)));
        assert_eq!(r.len(), 4);
        let cells: BTreeSet<Cell> = [(1, 3), (2, 2), (2, 5)].into_iter().collect();
        assert_eq!(components(&cells, Adjacency::Vertex).len(), 2);
        assert_eq!(components(&cells, Adjacency::Edge).len(), 3);
    }
}
