//! The Schur-type raising ring `Z[u_1, u_2, ...]` with `U_alpha = prod (1 - R_ij) u_alpha`.

use crate::basis::change_basis_unitriangular;
use crate::combinatorics::strips::{add_horizontal_strip, remove_vertical_strip};
use crate::element::{Basis, RingElement};
use crate::error::{Error, Result};
use crate::partition::{compositions, IntegerVector, Partition};
use crate::raising::{expand_raising, Factor, FactorSpec};
use crate::report::{IdentityReport, MirrorReport};
use crate::tpoly::TPoly;
use std::collections::HashMap;

/// `U_alpha` expanded in `u` monomials.
pub fn giambelli_u(alpha: &IntegerVector) -> RingElement {
    let spec = FactorSpec::uniform(alpha.length(), Factor::OneMinusR);
    expand_raising(&spec, alpha, Basis::UMonomial).expect("t-free factors with matching length")
}

/// `det(u_{alpha_i + j - i})`, expanded in `u` monomials.
pub fn jacobi_trudi(alpha: &IntegerVector) -> RingElement {
    let a = alpha.entries();
    let n = a.len();
    let entry = |i: usize, j: usize| a[i] + j as i64 - i as i64;
    // Row-by-row Laplace expansion, memoized on the set of used columns.
    let mut memo: HashMap<u32, RingElement> = HashMap::new();
    fn rec(row: usize, mask: u32, n: usize, entry: &dyn Fn(usize, usize) -> i64, memo: &mut HashMap<u32, RingElement>) -> RingElement {
        if row == n {
            return RingElement::one(Basis::UMonomial, None);
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let mut acc = RingElement::zero(Basis::UMonomial, None);
        for c in 0..n {
            if mask >> c & 1 == 1 {
                continue;
            }
            let r = entry(row, c);
            if r < 0 {
                continue;
            }
            let sub = rec(row + 1, mask | 1 << c, n, entry, memo);
            if sub.is_zero() {
                continue;
            }
            let larger_used = (c + 1..n).filter(|&d| mask >> d & 1 == 1).count();
            let sign = if larger_used % 2 == 0 { 1 } else { -1 };
            acc.add_scaled(&sub.times_generator(r), &TPoly::constant(sign));
        }
        memo.insert(mask, acc.clone());
        acc
    }
    rec(0, 0, n, &entry, &mut memo)
}

/// Rewrites a `u`-monomial combination in the `U` basis.
pub fn to_u_basis(e: &RingElement) -> Result<RingElement> {
    change_basis_unitriangular(e, Basis::U, |lam| Ok(giambelli_u(&IntegerVector::from(lam))))
}

/// Shapes `mu` with `mu / lambda` a horizontal strip of `p` boxes, so that
/// `u_p U_lambda = sum U_mu`.
pub fn pieri_u(p: usize, lambda: &Partition) -> Vec<Partition> {
    let mut v = add_horizontal_strip(lambda, p);
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// `u_p U_lambda` computed in the ring and rewritten in the `U` basis.
pub fn pieri_u_oracle(p: usize, lambda: &Partition) -> Result<RingElement> {
    to_u_basis(&giambelli_u(&IntegerVector::from(lambda)).times_generator(p as i64))
}

/// `U_(p, lambda) = sum_{r, mu} (-1)^r u_{p+r} U_mu` over vertical strips
/// `lambda / mu` of size `r`, for `p >= lambda_1`.
pub fn toprow_recursion_u(p: usize, lambda: &Partition) -> Result<IdentityReport> {
    if p < lambda.first() {
        return Err(Error::ThresholdViolation { p, threshold: lambda.first() });
    }
    let lhs = giambelli_u(&IntegerVector::from(lambda.with_first(p).iter().map(|&x| x as i64).collect::<Vec<_>>()));
    let mut rhs = RingElement::zero(Basis::UMonomial, None);
    for r in 0..=lambda.len() {
        let sign = TPoly::constant(if r % 2 == 0 { 1 } else { -1 });
        for mu in remove_vertical_strip(lambda, r) {
            rhs.add_scaled(&giambelli_u(&IntegerVector::from(&mu)).times_generator((p + r) as i64), &sign);
        }
    }
    Ok(IdentityReport::new(format!("top row recursion for ({p},{lambda})"), lhs, rhs))
}

/// Sum of `U_{lambda - alpha}` over `alpha >= 0` of length at most `len(lambda)`
/// against the sum of `U_mu` over horizontal strips `lambda / mu`; and, for
/// each degree up to `cap`, the sum of `U_{lambda + alpha}` (`alpha` of length
/// at most `len(lambda) + 1`) against the sum over horizontal strips above
/// `lambda`.
pub fn mirror_u(lambda: &Partition, cap: Option<usize>) -> MirrorReport {
    let l = lambda.len();
    let size = lambda.size();
    let base = lambda.to_i64();
    let mut lhs = RingElement::zero(Basis::UMonomial, None);
    for total in 0..=size {
        for alpha in compositions(total, l) {
            let v: Vec<i64> = base.iter().zip(&alpha).map(|(a, b)| a - *b as i64).collect();
            lhs.add_assign(&giambelli_u(&IntegerVector::from(v)));
        }
    }
    let mut rhs = RingElement::zero(Basis::UMonomial, None);
    for r in 0..=size {
        for mu in crate::combinatorics::strips::remove_horizontal_strip(lambda, r) {
            rhs.add_assign(&giambelli_u(&IntegerVector::from(&mu)));
        }
    }
    let downward = IdentityReport::new(format!("lowering mirror sum for {lambda}"), lhs, rhs);
    let cap = cap.unwrap_or(size + 4);
    let mut upward = Vec::new();
    let padded: Vec<i64> = {
        let mut v = base.clone();
        v.push(0);
        v
    };
    for d in 0..=cap.saturating_sub(size) {
        let mut lhs = RingElement::zero(Basis::UMonomial, None);
        for alpha in compositions(d, l + 1) {
            let v: Vec<i64> = padded.iter().zip(&alpha).map(|(a, b)| a + *b as i64).collect();
            lhs.add_assign(&giambelli_u(&IntegerVector::from(v)));
        }
        let mut rhs = RingElement::zero(Basis::UMonomial, None);
        for mu in add_horizontal_strip(lambda, d) {
            rhs.add_assign(&giambelli_u(&IntegerVector::from(&mu)));
        }
        upward.push(IdentityReport::new(format!("raising mirror sum for {lambda}, degree +{d}"), lhs, rhs));
    }
    MirrorReport { downward, upward }
}
