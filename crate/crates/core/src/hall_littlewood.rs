//! The Hall-Littlewood raising ring `Z[t][v_1, v_2, ...]` with
//! `V_alpha = prod (1 - R_ij)/(1 - t R_ij) v_alpha`, and its realizations in
//! finitely many variables.

use crate::basis::change_basis_unitriangular;
use crate::combinatorics::strips::{add_horizontal_strip, is_horizontal_strip, remove_horizontal_strip};
use crate::element::{Basis, RingElement};
use crate::error::{Error, Result};
use crate::partition::{compositions, IntegerVector, Partition};
use crate::poly::{Poly, Vars};
use crate::raising::{expand_raising, Factor, FactorSpec};
use crate::report::IdentityReport;
use crate::series::{e_series, h_series, q_series, substitute};
use crate::tpoly::TPoly;
use std::collections::{BTreeSet, HashMap};

/// `V_alpha` expanded in `v` monomials.
pub fn giambelli_v(alpha: &IntegerVector) -> RingElement {
    let spec = FactorSpec::uniform(alpha.length(), Factor::HallLittlewood);
    expand_raising(&spec, alpha, Basis::VMonomial).expect("v monomials admit t coefficients")
}

/// Rewrites a `v`-monomial combination in the `V` basis.
pub fn to_v_basis(e: &RingElement) -> Result<RingElement> {
    change_basis_unitriangular(e, Basis::V, |lam| Ok(giambelli_v(&IntegerVector::from(lam))))
}

/// Expands a `V`-basis element back into `v` monomials; monomial input is
/// returned unchanged.
pub fn to_v_monomials(e: &RingElement) -> RingElement {
    if e.basis() != Basis::V {
        return e.clone();
    }
    let mut out = RingElement::zero(Basis::VMonomial, None);
    for (lam, c) in e.terms() {
        out.add_scaled(&giambelli_v(&IntegerVector::from(lam)), c);
    }
    out
}

fn columns_with_boxes(outer: &Partition, inner: &Partition) -> BTreeSet<usize> {
    outer.minus(inner).into_iter().map(|(_, c)| c).collect()
}

/// `psi_{mu/lambda}(t)`: product of `1 - t^{m_c(lambda)}` over columns `c`
/// that hold no box of `mu / lambda` while column `c + 1` does.
pub fn psi(mu: &Partition, lambda: &Partition) -> Result<TPoly> {
    if !mu.contains(lambda) || !is_horizontal_strip(mu, lambda) {
        return Err(Error::Invalid(format!("{mu}/{lambda} is not a horizontal strip")));
    }
    let cols = columns_with_boxes(mu, lambda);
    let mut out = TPoly::one();
    for &c in &cols {
        if c >= 2 && !cols.contains(&(c - 1)) {
            out = &out * &TPoly::one_minus_t_pow(lambda.multiplicity(c - 1));
        }
    }
    Ok(out)
}

/// `phi_{lambda/mu}(t)`: product of `1 - t^{m_c(lambda)}` over columns `c`
/// that hold a box of `lambda / mu` while column `c + 1` does not.
pub fn phi(lambda: &Partition, mu: &Partition) -> Result<TPoly> {
    if !lambda.contains(mu) || !is_horizontal_strip(lambda, mu) {
        return Err(Error::Invalid(format!("{lambda}/{mu} is not a horizontal strip")));
    }
    let cols = columns_with_boxes(lambda, mu);
    let mut out = TPoly::one();
    for &c in &cols {
        if !cols.contains(&(c + 1)) {
            out = &out * &TPoly::one_minus_t_pow(lambda.multiplicity(c));
        }
    }
    Ok(out)
}

/// `v_p V_lambda = sum psi_{mu/lambda}(t) V_mu` over horizontal `p`-strips,
/// dominant shapes first.
pub fn pieri_v(p: usize, lambda: &Partition) -> Vec<(Partition, TPoly)> {
    let mut out: Vec<(Partition, TPoly)> = add_horizontal_strip(lambda, p)
        .into_iter()
        .map(|mu| {
            let c = psi(&mu, lambda).expect("horizontal strip by construction");
            (mu, c)
        })
        .collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// `v_p V_lambda` computed in the ring and rewritten in the `V` basis.
pub fn pieri_v_oracle(p: usize, lambda: &Partition) -> Result<RingElement> {
    to_v_basis(&giambelli_v(&IntegerVector::from(lambda)).times_generator(p as i64))
}

/// The combinatorial Pieri product as a `V`-basis element.
pub fn pieri_v_element(p: usize, lambda: &Partition) -> RingElement {
    let mut out = RingElement::zero(Basis::V, None);
    for (mu, c) in pieri_v(p, lambda) {
        out.add_term(mu, &c);
    }
    out
}

/// `sum (1 - t)^{#alpha} V_{lambda - alpha}` over `alpha >= 0` of length at most
/// `len(lambda)` against `sum phi_{lambda/mu}(t) V_mu` over horizontal strips
/// `lambda / mu`, both in `v` monomials.
pub fn mirror_v(lambda: &Partition) -> IdentityReport {
    let base = lambda.to_i64();
    let mut lhs = RingElement::zero(Basis::VMonomial, None);
    for total in 0..=lambda.size() {
        for alpha in compositions(total, lambda.len()) {
            let v: Vec<i64> = base.iter().zip(&alpha).map(|(a, b)| a - *b as i64).collect();
            let weight = TPoly::from_i64s(&[1, -1]).pow(alpha.iter().filter(|&&a| a > 0).count() as u32);
            lhs.add_scaled(&giambelli_v(&IntegerVector::from(v)), &weight);
        }
    }
    let mut rhs = RingElement::zero(Basis::VMonomial, None);
    for r in 0..=lambda.size() {
        for mu in remove_horizontal_strip(lambda, r) {
            let c = phi(lambda, &mu).expect("horizontal strip by construction");
            rhs.add_scaled(&giambelli_v(&IntegerVector::from(&mu)), &c);
        }
    }
    IdentityReport::new(format!("Hall-Littlewood lowering mirror sum for {lambda}"), lhs, rhs)
}

/// A linear relation among `V_alpha` for raw integer vectors, checked by
/// expanding both sides in `v` monomials.
#[derive(Clone, Debug)]
pub struct VRelation {
    pub name: String,
    pub lhs: Vec<(Vec<i64>, TPoly)>,
    pub rhs: Vec<(Vec<i64>, TPoly)>,
}

impl VRelation {
    pub fn evaluate(&self) -> IdentityReport {
        let side = |terms: &[(Vec<i64>, TPoly)]| {
            let mut acc = RingElement::zero(Basis::VMonomial, None);
            for (v, c) in terms {
                acc.add_scaled(&giambelli_v(&IntegerVector::from(v.clone())), c);
            }
            acc
        };
        IdentityReport::new(self.name.clone(), side(&self.lhs), side(&self.rhs))
    }

    /// The same relation with a row `p` placed on top of every index.
    pub fn prefixed(&self, p: i64) -> VRelation {
        let shift = |terms: &[(Vec<i64>, TPoly)]| {
            terms
                .iter()
                .map(|(v, c)| {
                    let mut w = vec![p];
                    w.extend_from_slice(v);
                    (w, c.clone())
                })
                .collect()
        };
        VRelation { name: format!("{} with top row {p}", self.name), lhs: shift(&self.lhs), rhs: shift(&self.rhs) }
    }
}

fn splice(alpha: &[i64], middle: &[i64], beta: &[i64]) -> Vec<i64> {
    let mut v = alpha.to_vec();
    v.extend_from_slice(middle);
    v.extend_from_slice(beta);
    v
}

/// `V_(a,r,s,b) + V_(a,s-1,r+1,b) = t (V_(a,r+1,s-1,b) + V_(a,s,r,b))`.
pub fn straightening_v(alpha: &[i64], r: i64, s: i64, beta: &[i64]) -> VRelation {
    let one = TPoly::one();
    let t = TPoly::t();
    VRelation {
        name: format!("Hall-Littlewood exchange at ({r},{s})"),
        lhs: vec![(splice(alpha, &[r, s], beta), one.clone()), (splice(alpha, &[s - 1, r + 1], beta), one)],
        rhs: vec![(splice(alpha, &[r + 1, s - 1], beta), t.clone()), (splice(alpha, &[s, r], beta), t)],
    }
}

/// `V_(a,c,c+d,b) + (1-t) sum_{0<i<d} V_(a,c+i,c+d-i,b) = t V_(a,c+d,c,b)`
/// for `d >= 1`.
pub fn exchange_sum_v(alpha: &[i64], c: i64, d: i64, beta: &[i64]) -> VRelation {
    let mut lhs = vec![(splice(alpha, &[c, c + d], beta), TPoly::one())];
    let one_minus_t = TPoly::from_i64s(&[1, -1]);
    for i in 1..d {
        lhs.push((splice(alpha, &[c + i, c + d - i], beta), one_minus_t.clone()));
    }
    VRelation {
        name: format!("Hall-Littlewood exchange sum at c={c}, d={d}"),
        lhs,
        rhs: vec![(splice(alpha, &[c + d, c], beta), TPoly::t())],
    }
}

/// `V_(alpha, r) = sum_gamma t^{|gamma| - #gamma} (t - 1)^{#gamma} V_{alpha+gamma} v_{r-|gamma|}`
/// over `gamma >= 0` of the length of `alpha`.
pub fn last_row_recursion_v(alpha: &[i64], r: i64) -> IdentityReport {
    let mut full = alpha.to_vec();
    full.push(r);
    let lhs = giambelli_v(&IntegerVector::from(full.clone()));
    let mut rhs = RingElement::zero(Basis::VMonomial, None);
    let t_minus_one = TPoly::from_i64s(&[-1, 1]);
    for g in 0..=r.max(0) as usize {
        for gamma in compositions(g, alpha.len()) {
            let support = gamma.iter().filter(|&&x| x > 0).count();
            let coeff = &TPoly::monomial(1, g - support) * &t_minus_one.pow(support as u32);
            let shifted: Vec<i64> = alpha.iter().zip(&gamma).map(|(a, b)| a + *b as i64).collect();
            rhs.add_scaled(&giambelli_v(&IntegerVector::from(shifted)).times_generator(r - g as i64), &coeff);
        }
    }
    IdentityReport::new(format!("last row recursion for V_({})", full.iter().map(i64::to_string).collect::<Vec<_>>().join(",")), lhs, rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HlMode {
    Reduction,
    Realization,
}

/// `Q_lambda(x_1..x_m; t)` in `Vars::new(m, 0, true)`.
pub fn hl_function(lambda: &Partition, m: usize, mode: HlMode) -> Poly {
    let vars = Vars::new(m, 0, true);
    match mode {
        HlMode::Realization => {
            let q = q_series(vars, lambda.size());
            substitute(&giambelli_v(&IntegerVector::from(lambda)), &q, vars).expect("generators cover every part")
        }
        HlMode::Reduction => {
            let mut memo = HashMap::new();
            reduce(lambda, 1, vars, &mut memo)
        }
    }
}

/// `Q_mu` in the variables `x_i..x_m`.
fn reduce(mu: &Partition, i: usize, vars: Vars, memo: &mut HashMap<(Partition, usize), Poly>) -> Poly {
    if i > vars.x {
        return if mu.is_empty() { Poly::one(vars) } else { Poly::zero(vars) };
    }
    if mu.len() > vars.x + 1 - i {
        return Poly::zero(vars);
    }
    if let Some(hit) = memo.get(&(mu.clone(), i)) {
        return hit.clone();
    }
    let mut acc = Poly::zero(vars);
    for p in 0..=mu.size() {
        for nu in remove_horizontal_strip(mu, p) {
            let rest = reduce(&nu, i + 1, vars, memo);
            if rest.is_zero() {
                continue;
            }
            let c = Poly::from_tpoly(vars, &phi(mu, &nu).expect("horizontal strip by construction"));
            acc.add_assign(&Poly::x_pow(vars, i, p as u32).mul(&c).mul(&rest));
        }
    }
    memo.insert((mu.clone(), i), acc.clone());
    acc
}

/// Images of the generators `v_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    /// `v_r -> h_r(x)`
    Complete,
    /// `v_r -> e_r(x)`, only at `t = -1`
    Elementary,
    /// `v_r -> q_r(x; t)`
    HallLittlewood,
}

/// Treatment of `t` in a realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TValue {
    Formal,
    At(i64),
}

/// Substitutes the chosen generator images into `e` (either `v` monomials or
/// the `V` basis) in `m` variables.
pub fn realize(e: &RingElement, target: Realization, t: TValue, m: usize) -> Result<Poly> {
    if target == Realization::Elementary && t != TValue::At(-1) {
        return Err(Error::NeedsTMinusOne);
    }
    let mono = to_v_monomials(e);
    let cap = mono.terms().map(|(l, _)| l.first()).max().unwrap_or(0);
    let formal = Vars::new(m, 0, true);
    match t {
        TValue::Formal => {
            let gens = match target {
                Realization::Complete => h_series(formal, cap),
                Realization::Elementary => unreachable!(),
                Realization::HallLittlewood => q_series(formal, cap),
            };
            substitute(&mono, &gens, formal)
        }
        TValue::At(value) => {
            let vars = Vars::xs(m);
            let gens = match target {
                Realization::Complete => h_series(vars, cap),
                Realization::Elementary => e_series(vars, cap),
                Realization::HallLittlewood => q_series(formal, cap).iter().map(|g| g.specialize_t(value)).collect(),
            };
            substitute(&mono.specialize_t(value), &gens, vars)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::tableaux::row_strict_fillings;
    use crate::partition::partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tp(c: &[i64]) -> TPoly {
        TPoly::from_i64s(c)
    }

    #[test]
    fn two_row_expansion() {
        let v = giambelli_v(&IntegerVector::from(vec![1, 1]));
        let mut want = RingElement::zero(Basis::VMonomial, None);
        want.add_term(p("1,1"), &TPoly::one());
        want.add_term(p("2"), &tp(&[-1, 1]));
        assert_eq!(v, want);
        assert_eq!(giambelli_v(&IntegerVector::from(vec![4])), RingElement::monomial(Basis::VMonomial, None, p("4")));
    }

    #[test]
    fn psi_and_phi_values() {
        assert_eq!(psi(&p("2,1"), &p("1,1")).unwrap(), tp(&[1, 0, -1]));
        assert_eq!(psi(&p("2,1"), &p("2,1")).unwrap(), TPoly::one());
        assert_eq!(phi(&p("1"), &p("")).unwrap(), tp(&[1, -1]));
        assert!(psi(&p("2,2"), &p("1,1")).is_err());
    }

    #[test]
    fn pieri_agrees_with_ring_product() {
        let got = pieri_v(1, &p("1"));
        assert_eq!(got, vec![(p("2"), tp(&[1, -1])), (p("1,1"), TPoly::one())]);
        let got = pieri_v(2, &p("1"));
        assert_eq!(got, vec![(p("3"), tp(&[1, -1])), (p("2,1"), TPoly::one())]);
        for n in 0..=4 {
            for lam in partitions(n) {
                for q in 0..=3 {
                    assert_eq!(pieri_v_element(q, &lam), pieri_v_oracle(q, &lam).unwrap(), "p={q} {lam}");
                }
            }
        }
    }

    #[test]
    fn mirror_on_small_shapes() {
        for n in 0..=4 {
            for lam in partitions(n) {
                assert!(mirror_v(&lam).holds(), "{lam}");
            }
        }
    }

    #[test]
    fn exchange_relations() {
        for r in -1..=3 {
            for s in -1..=3 {
                let rel = straightening_v(&[1], r, s, &[]);
                assert!(rel.evaluate().holds(), "{r},{s}");
                assert!(rel.prefixed(2).evaluate().holds());
            }
        }
        for c in -1..=2 {
            for d in 1..=3 {
                assert!(exchange_sum_v(&[], c, d, &[1]).evaluate().holds(), "c={c} d={d}");
            }
        }
        assert!(last_row_recursion_v(&[2, 1], 2).holds());
        assert!(last_row_recursion_v(&[1], 3).holds());
    }

    #[test]
    fn function_modes_agree() {
        let v1 = Vars::new(1, 0, true);
        assert_eq!(
            hl_function(&p("1"), 1, HlMode::Reduction),
            Poly::x(v1, 1).mul(&Poly::one(v1).sub(&Poly::t(v1)))
        );
        assert!(hl_function(&p("1"), 0, HlMode::Realization).is_zero());
        for n in 0..=4 {
            for lam in partitions(n) {
                for m in 0..=3 {
                    assert_eq!(hl_function(&lam, m, HlMode::Reduction), hl_function(&lam, m, HlMode::Realization), "{lam} m={m}");
                }
            }
        }
    }

    #[test]
    fn schur_at_t_zero() {
        let vars = Vars::xs(3);
        for n in 0..=4 {
            for lam in partitions(n) {
                let e = to_v_basis(&giambelli_v(&IntegerVector::from(&lam))).unwrap();
                let got = realize(&e, Realization::Complete, TValue::At(0), 3).unwrap();
                let mut want = Poly::zero(vars);
                for filling in row_strict_fillings(&lam.conjugate(), 3) {
                    let mut exps = vec![0u32; 3];
                    for row in &filling {
                        for &x in row {
                            exps[x - 1] += 1;
                        }
                    }
                    want.add_term(exps, 1.into());
                }
                assert_eq!(got, want, "{lam}");
            }
        }
    }

    #[test]
    fn realization_targets() {
        let v1 = RingElement::monomial(Basis::V, None, p("1"));
        let vars = Vars::xs(2);
        let sum = Poly::x(vars, 1).add(&Poly::x(vars, 2));
        assert_eq!(realize(&v1, Realization::Complete, TValue::At(1), 2).unwrap(), sum);
        assert_eq!(realize(&v1, Realization::Elementary, TValue::At(-1), 2).unwrap(), sum);
        assert!(matches!(realize(&v1, Realization::Elementary, TValue::Formal, 2), Err(Error::NeedsTMinusOne)));
    }
}
