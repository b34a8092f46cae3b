//! Change of basis for unitriangular families and Pfaffians.

use crate::element::{Basis, RingElement};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tpoly::TPoly;
use num_traits::{One, Signed};

/// Rewrites `e` (in a monomial basis) in the basis `target`, where
/// `expansion(lambda)` gives the monomial expansion of the target basis
/// element of index `lambda`. Each expansion must have a unit coefficient on
/// `lambda` itself and otherwise only lexicographically larger indices of the
/// same weight.
pub fn change_basis_unitriangular<F>(e: &RingElement, target: Basis, mut expansion: F) -> Result<RingElement>
where
    F: FnMut(&Partition) -> Result<RingElement>,
{
    let mut rest = e.clone();
    let mut out = RingElement::zero(target, e.k());
    loop {
        let first = rest.terms().next().map(|(l, c)| (l.clone(), c.clone()));
        let Some((lam, c)) = first else { break };
        let exp = expansion(&lam)?;
        let lead = exp.coeff(&lam);
        if !(lead.is_constant() && lead.constant_term().abs().is_one()) {
            return Err(Error::NonUnitLeading(lam.to_string()));
        }
        if exp.terms().any(|(m, _)| m != &lam && (m.size() != lam.size() || m < &lam)) {
            return Err(Error::Invalid(format!("expansion of {lam} is not unitriangular")));
        }
        let scale = if lead.constant_term().is_negative() { -&c } else { c };
        out.add_term(lam, &scale);
        rest.add_scaled(&exp, &-&scale);
    }
    Ok(out)
}

/// Minimal ring interface used by [`pfaffian`].
pub trait Ring: Clone {
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Ring for TPoly {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Pfaffian of the skew matrix whose entries above the diagonal are
/// `entries[i][j]`, `i < j`; entries on and below the diagonal are ignored.
pub fn pfaffian<R: Ring>(entries: &[Vec<R>], zero: &R, one: &R) -> R {
    let idx: Vec<usize> = (0..entries.len()).collect();
    pf_rec(entries, &idx, zero, one)
}

fn pf_rec<R: Ring>(a: &[Vec<R>], idx: &[usize], zero: &R, one: &R) -> R {
    if idx.is_empty() {
        return one.clone();
    }
    if idx.len() % 2 == 1 {
        return zero.clone();
    }
    let first = idx[0];
    let mut acc = zero.clone();
    for pos in 1..idx.len() {
        let rest: Vec<usize> = idx.iter().enumerate().filter(|&(p, _)| p != 0 && p != pos).map(|(_, &v)| v).collect();
        let term = a[first][idx[pos]].mul(&pf_rec(a, &rest, zero, one));
        acc = if pos % 2 == 1 { acc.add(&term) } else { acc.add(&term.neg()) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> TPoly {
        TPoly::constant(v)
    }

    #[test]
    fn pfaffian_four_by_four() {
        let z = c(0);
        let m = vec![
            vec![z.clone(), c(2), c(3), c(5)],
            vec![z.clone(), z.clone(), c(7), c(11)],
            vec![z.clone(), z.clone(), z.clone(), c(13)],
            vec![z.clone(), z.clone(), z.clone(), z.clone()],
        ];
        // a12 a34 - a13 a24 + a14 a23
        assert_eq!(pfaffian(&m, &c(0), &c(1)), c(2 * 13 - 3 * 11 + 5 * 7));
    }

    #[test]
    fn pfaffian_squares_to_determinant_for_generic_six() {
        // Skew matrix with entries a_ij = i + 2j + ij (1-based); the Pfaffian
        // squared equals the determinant.
        let n = 6;
        let val = |i: usize, j: usize| (i + 1 + 2 * (j + 1) + (i + 1) * (j + 1)) as i64;
        let m: Vec<Vec<TPoly>> = (0..n).map(|i| (0..n).map(|j| c(if i < j { val(i, j) } else { 0 })).collect()).collect();
        let pf = pfaffian(&m, &c(0), &c(1)).constant_term();
        let full: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i < j { val(i, j) } else if i > j { -val(j, i) } else { 0 }).collect())
            .collect();
        assert_eq!(pf.clone() * pf, num_bigint::BigInt::from(det(full)));
    }

    fn det(mut m: Vec<Vec<i64>>) -> i128 {
        // Fraction-free Bareiss elimination.
        let n = m.len();
        let mut m: Vec<Vec<i128>> = m.drain(..).map(|r| r.into_iter().map(i128::from).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        sign * m[n - 1][n - 1]
    }
}
