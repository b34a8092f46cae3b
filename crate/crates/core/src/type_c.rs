//! The ring `B^(k) = Z[w_1, w_2, ...] / I^(k)`, where `I^(k)` is generated by
//! `w_r^2 + 2 sum_{i=1}^r (-1)^i w_{r+i} w_{r-i}` for `r > k`, and the
//! Giambelli polynomials `W^D_alpha = R^D w_alpha`.

use crate::basis::{change_basis_unitriangular, pfaffian, Ring};
use crate::combinatorics::kstrip::{n_strip, pieri_targets, strip_threshold};
use crate::element::{Basis, RingElement};
use crate::error::{Error, Result};
use crate::pairs::{cset, tameness, PairSet, Tameness};
use crate::partition::{compositions, subpartitions, IntegerVector, KStrict, Partition};
use crate::raising::{expand_raising, Factor, FactorSpec};
use crate::report::IdentityReport;
use crate::tpoly::TPoly;
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

type Cache = RwLock<HashMap<(usize, Partition), RingElement>>;

fn straighten_cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn w_table() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached(cache: &Cache, key: &(usize, Partition), build: impl FnOnce() -> RingElement) -> RingElement {
    if let Some(hit) = cache.read().expect("cache lock").get(key) {
        return hit.clone();
    }
    let out = build();
    cache.write().expect("cache lock").insert(key.clone(), out.clone());
    out
}

/// Normal form of the monomial `w_nu` in `B^(k)`: the leftmost repeated part
/// `r > k` is rewritten as `sum_{i=1}^r 2 (-1)^{i+1} w_{r+i} w_{r-i}` until
/// only k-strict indices remain.
pub fn straighten(nu: &Partition, k: usize) -> RingElement {
    let key = (k, nu.clone());
    cached(straighten_cache(), &key, || {
        let parts = nu.parts();
        let Some(pos) = (1..parts.len()).find(|&i| parts[i] == parts[i - 1] && parts[i] > k) else {
            return RingElement::monomial(Basis::WMonomial, Some(k), nu.clone());
        };
        let r = parts[pos];
        let mut rest = parts.to_vec();
        rest.drain(pos - 1..=pos);
        let mut out = RingElement::zero(Basis::WMonomial, Some(k));
        for i in 1..=r {
            let mut v = rest.clone();
            v.push(r + i);
            v.push(r - i);
            let sign = if i % 2 == 1 { 2 } else { -2 };
            out.add_scaled(&straighten(&Partition::from_unsorted(v), k), &TPoly::constant(sign));
        }
        out
    })
}

/// Normal form of a `w`-monomial combination.
pub fn normalize(e: &RingElement, k: usize) -> RingElement {
    let mut out = RingElement::zero(Basis::WMonomial, Some(k));
    for (nu, c) in e.terms() {
        out.add_scaled(&straighten(nu, k), c);
    }
    out
}

/// Product of two normalized elements of `B^(k)`.
pub fn multiply(a: &RingElement, b: &RingElement, k: usize) -> RingElement {
    normalize(&a.mul_monomials(b), k)
}

/// `W^D_alpha` in normal form. With `d = None` the set `C(alpha)` is used,
/// which needs `alpha` to be a k-strict partition.
pub fn giambelli_w(alpha: &IntegerVector, d: Option<&PairSet>, k: usize) -> Result<RingElement> {
    match d {
        Some(d) => {
            if !d.is_valid() {
                return Err(Error::InvalidPairSet(d.to_string()));
            }
            Ok(raw_w(alpha, d, k))
        }
        None => {
            let lam = alpha.to_partition()?;
            Ok(w_of(&KStrict::new(k, lam)?))
        }
    }
}

fn raw_w(alpha: &IntegerVector, d: &PairSet, k: usize) -> RingElement {
    let spec = FactorSpec::split(alpha.length(), d, Factor::OneMinusROverOnePlusR, Factor::OneMinusR);
    let mono = expand_raising(&spec, alpha, Basis::WMonomial).expect("t-free factors with matching length");
    normalize(&mono, k)
}

/// `W_lambda = R^{C(lambda)} w_lambda` in normal form, cached per `(k, lambda)`.
pub fn w_of(lambda: &KStrict) -> RingElement {
    let k = lambda.k();
    let lam = lambda.partition();
    cached(w_table(), &(k, lam.clone()), || raw_w(&IntegerVector::from(lam), &cset(lam, k), k))
}

/// Rewrites an element of `B^(k)` (given in `w` monomials) in the `W` basis.
pub fn to_w_basis(e: &RingElement, k: usize) -> Result<RingElement> {
    let normal = normalize(e, k);
    change_basis_unitriangular(&normal, Basis::W, |lam| Ok(w_of(&KStrict::new(k, lam.clone())?)))
}

/// Expands a `W`-basis element back into normalized `w` monomials.
pub fn to_w_monomials(e: &RingElement, k: usize) -> Result<RingElement> {
    if e.basis() != Basis::W {
        return Ok(normalize(e, k));
    }
    let mut out = RingElement::zero(Basis::WMonomial, Some(k));
    for (lam, c) in e.terms() {
        out.add_scaled(&w_of(&KStrict::new(k, lam.clone())?), c);
    }
    Ok(out)
}

/// `w_p W_lambda = sum 2^{N(lambda, mu)} W_mu`, dominant shapes first.
pub fn pieri_w(p: usize, lambda: &KStrict) -> Vec<(Partition, BigInt)> {
    pieri_targets(lambda, p).into_iter().map(|(mu, n)| (mu, BigInt::from(1) << n)).collect()
}

/// The combinatorial Pieri product as a `W`-basis element.
pub fn pieri_w_element(p: usize, lambda: &KStrict) -> RingElement {
    let mut out = RingElement::zero(Basis::W, Some(lambda.k()));
    for (mu, c) in pieri_w(p, lambda) {
        out.add_term(mu, &TPoly::constant(c));
    }
    out
}

/// `w_p W_lambda` computed in the ring and rewritten in the `W` basis.
pub fn pieri_w_oracle(p: usize, lambda: &KStrict) -> Result<RingElement> {
    let k = lambda.k();
    to_w_basis(&w_of(lambda).times_generator(p as i64), k)
}

fn two_pow(n: usize) -> TPoly {
    TPoly::constant(BigInt::from(1) << n)
}

/// `sum 2^{#alpha} W^{C(lambda)}_{lambda - alpha}` over `alpha >= 0` of length at
/// most `len(lambda)` against `sum 2^{n(lambda/mu)} W_mu` over k-horizontal
/// strips `lambda / mu`, both in normalized `w` monomials.
pub fn mirror_w(lambda: &KStrict) -> IdentityReport {
    let k = lambda.k();
    let lam = lambda.partition();
    let d = cset(lam, k);
    let base = lam.to_i64();
    let mut lhs = RingElement::zero(Basis::WMonomial, Some(k));
    for total in 0..=lam.size() {
        for alpha in compositions(total, lam.len()) {
            let v: Vec<i64> = base.iter().zip(&alpha).map(|(a, b)| a - *b as i64).collect();
            let support = alpha.iter().filter(|&&a| a > 0).count();
            lhs.add_scaled(&raw_w(&IntegerVector::from(v), &d, k), &two_pow(support));
        }
    }
    let mut rhs = RingElement::zero(Basis::WMonomial, Some(k));
    for mu in subpartitions(lam) {
        if !mu.is_k_strict(k) {
            continue;
        }
        if let Some(n) = n_strip(lam, &mu, k) {
            rhs.add_scaled(&w_of(&KStrict::new(k, mu).expect("checked k-strict")), &two_pow(n as usize));
        }
    }
    IdentityReport::new(format!("type C lowering mirror sum for {lam} (k={k})"), lhs, rhs)
}

/// `W_(p, lambda) = sum_{r, mu} (-1)^r 2^{n(lambda/mu)} w_{p+r} W_mu` over
/// k-horizontal strips `lambda / mu` with `r` boxes, for
/// `p >= max(lambda_1 + 1, len(lambda) + 2k)`.
pub fn toprow_recursion_w(p: usize, lambda: &KStrict) -> Result<IdentityReport> {
    let k = lambda.k();
    let lam = lambda.partition();
    let threshold = strip_threshold(lam, k);
    if p < threshold {
        return Err(Error::ThresholdViolation { p, threshold });
    }
    let top = KStrict::new(k, Partition::new(lam.with_first(p))?)?;
    let lhs = w_of(&top);
    let mut rhs = RingElement::zero(Basis::WMonomial, Some(k));
    for mu in subpartitions(lam) {
        if !mu.is_k_strict(k) {
            continue;
        }
        let Some(n) = n_strip(lam, &mu, k) else { continue };
        let r = lam.size() - mu.size();
        let mut c = two_pow(n as usize);
        if r % 2 == 1 {
            c = -&c;
        }
        let term = w_of(&KStrict::new(k, mu).expect("checked k-strict")).times_generator((p + r) as i64);
        rhs.add_scaled(&normalize(&term, k), &c);
    }
    Ok(IdentityReport::new(format!("type C top row recursion for ({p},{lam}) (k={k})"), lhs, rhs))
}

/// The exchange identity at a `D`-tame position `(j, j+1)` of `v`:
/// `W^D_v = -W^D_{v'}` with `v'` carrying `(s-1, r+1)` when `(j, j+1)` is outside
/// `D`, and `(s, r)` when it is inside (this case needs `r + s > 2k`).
pub fn check_tame(d: &PairSet, j: usize, v: &[i64], k: usize) -> Result<IdentityReport> {
    if !d.is_valid() {
        return Err(Error::InvalidPairSet(d.to_string()));
    }
    let kind = tameness(d, j).ok_or(Error::NotTame { i: j, j: j + 1 })?;
    let mut full = v.to_vec();
    if full.len() < j + 1 {
        full.resize(j + 1, 0);
    }
    let (r, s) = (full[j - 1], full[j]);
    let mut swapped = full.clone();
    match kind {
        Tameness::Lower => {
            swapped[j - 1] = s - 1;
            swapped[j] = r + 1;
        }
        Tameness::Upper => {
            if r + s <= 2 * k as i64 {
                return Err(Error::Invalid(format!("exchange inside D needs r + s > 2k, got r + s = {}", r + s)));
            }
            swapped[j - 1] = s;
            swapped[j] = r;
        }
    }
    let lhs = raw_w(&IntegerVector::from(full.clone()), d, k);
    let rhs = raw_w(&IntegerVector::from(swapped), d, k).scaled(&TPoly::constant(-1));
    Ok(IdentityReport::new(format!("exchange of W^{d}_{} at ({j},{})", fmt_vec(&full), j + 1), lhs, rhs))
}

fn fmt_vec(v: &[i64]) -> String {
    format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}

/// A raising operator polynomial `W^D_alpha` kept unsimplified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DIndexed {
    pub d: PairSet,
    pub alpha: Vec<i64>,
    pub k: usize,
}

impl DIndexed {
    pub fn new(d: PairSet, alpha: Vec<i64>, k: usize) -> Result<Self> {
        Ok(DIndexed { d: d.validated()?, alpha, k })
    }

    pub fn value(&self) -> RingElement {
        raw_w(&IntegerVector::from(self.alpha.clone()), &self.d, self.k)
    }
}

impl std::fmt::Display for DIndexed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "W^{}_{}", self.d, fmt_vec(&self.alpha))
    }
}

/// `W^D_alpha = W^{D+(i,j)}_alpha + W^{D+(i,j)}_{R_ij alpha}`.
pub fn mitosis(w: &DIndexed, i: usize, j: usize) -> Result<(DIndexed, DIndexed)> {
    if i == 0 || i >= j || w.d.contains(i, j) {
        return Err(Error::BadMitosisPair { i, j });
    }
    let d = w.d.with(i, j);
    if !d.is_valid() {
        return Err(Error::BadMitosisPair { i, j });
    }
    let mut raised = w.alpha.clone();
    if raised.len() < j {
        raised.resize(j, 0);
    }
    raised[i - 1] += 1;
    raised[j - 1] -= 1;
    Ok((DIndexed { d: d.clone(), alpha: w.alpha.clone(), k: w.k }, DIndexed { d, alpha: raised, k: w.k }))
}

/// Checks one mitosis step by comparing normal forms.
pub fn mitosis_report(w: &DIndexed, i: usize, j: usize) -> Result<IdentityReport> {
    let (a, b) = mitosis(w, i, j)?;
    let mut rhs = a.value();
    rhs.add_assign(&b.value());
    Ok(IdentityReport::new(format!("{w} = {a} + {b}"), w.value(), rhs))
}

/// Elements of `B^(k)` with the straightened product, for Pfaffians.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bk {
    e: RingElement,
    k: usize,
}

impl Ring for Bk {
    fn add(&self, other: &Self) -> Self {
        let mut e = self.e.clone();
        e.add_assign(&other.e);
        Bk { e, k: self.k }
    }
    fn neg(&self) -> Self {
        Bk { e: self.e.scaled(&TPoly::constant(-1)), k: self.k }
    }
    fn mul(&self, other: &Self) -> Self {
        Bk { e: multiply(&self.e, &other.e, self.k), k: self.k }
    }
}

/// `Pf(W_{(lambda_i, lambda_j)})` at `k = 0` for a strict partition, padded
/// with a zero part to even length.
pub fn pfaffian_w(lambda: &Partition) -> Result<RingElement> {
    if !lambda.is_strict() {
        return Err(Error::NotKStrict { partition: lambda.to_string(), k: 0 });
    }
    let mut parts = lambda.to_i64();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let n = parts.len();
    let full = PairSet::full(2);
    let zero = Bk { e: RingElement::zero(Basis::WMonomial, Some(0)), k: 0 };
    let one = Bk { e: RingElement::one(Basis::WMonomial, Some(0)), k: 0 };
    let entries: Vec<Vec<Bk>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| if a < b { Bk { e: raw_w(&IntegerVector::from(vec![parts[a], parts[b]]), &full, 0), k: 0 } } else { zero.clone() })
                .collect()
        })
        .collect();
    Ok(pfaffian(&entries, &zero, &one).e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::from_int_terms;
    use crate::partition::{k_strict_partitions, strict_partitions};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ks(k: usize, s: &str) -> KStrict {
        KStrict::new(k, p(s)).unwrap()
    }

    fn iv(v: &[i64]) -> IntegerVector {
        IntegerVector::from(v.to_vec())
    }

    #[test]
    fn straightening_relations() {
        assert_eq!(straighten(&p("2,2"), 1), from_int_terms(Basis::WMonomial, Some(1), &[("3,1", 2), ("4", -2)]));
        assert_eq!(straighten(&p("1,1"), 0), from_int_terms(Basis::WMonomial, Some(0), &[("2", 2)]));
        assert_eq!(straighten(&p("3,1,1"), 1), RingElement::monomial(Basis::WMonomial, Some(1), p("3,1,1")));
    }

    #[test]
    fn six_two_one_at_k_two() {
        let got = giambelli_w(&iv(&[6, 2, 1]), None, 2).unwrap();
        let want = from_int_terms(
            Basis::WMonomial,
            Some(2),
            &[("6,2,1", 1), ("6,3", -1), ("7,1,1", -2), ("8,1", 4), ("9", -2)],
        );
        assert_eq!(got, want);
    }

    #[test]
    fn basis_round_trip() {
        for k in 0..=2 {
            for n in 0..=6 {
                for lam in k_strict_partitions(n, k) {
                    let w = w_of(&KStrict::new(k, lam.clone()).unwrap());
                    let back = to_w_basis(&w, k).unwrap();
                    assert_eq!(back, RingElement::monomial(Basis::W, Some(k), lam.clone()), "k={k} {lam}");
                }
            }
        }
    }

    #[test]
    fn pieri_rule_against_oracle() {
        let ex1 = pieri_w_element(1, &ks(1, "3,2,1,1"));
        assert_eq!(ex1, from_int_terms(Basis::W, Some(1), &[("3,2,1,1,1", 1), ("4,2,1,1", 2), ("6,2", 1)]));
        assert_eq!(pieri_w_oracle(1, &ks(1, "3,2,1,1")).unwrap(), ex1);
        let ex2 = pieri_w_element(3, &ks(1, "2,1"));
        assert_eq!(
            ex2,
            from_int_terms(Basis::W, Some(1), &[("6", 2), ("5,1", 4), ("4,2", 1), ("4,1,1", 2), ("3,2,1", 1)])
        );
        assert_eq!(pieri_w_oracle(3, &ks(1, "2,1")).unwrap(), ex2);
        for k in 0..=2 {
            for n in 0..=5 {
                for lam in k_strict_partitions(n, k) {
                    let lam = KStrict::new(k, lam).unwrap();
                    for q in 0..=3 {
                        assert_eq!(pieri_w_element(q, &lam), pieri_w_oracle(q, &lam).unwrap(), "k={k} p={q} {lam:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn twelve_term_product_and_recursion() {
        let lam = ks(2, "4,2,1");
        let got = pieri_w_element(7, &lam);
        let want = from_int_terms(
            Basis::W,
            Some(2),
            &[
                ("7,4,2,1", 1),
                ("8,3,2,1", 2),
                ("8,4,2", 2),
                ("9,2,2,1", 2),
                ("9,3,1,1", 2),
                ("9,3,2", 4),
                ("10,2,1,1", 2),
                ("10,2,2", 4),
                ("10,3,1", 4),
                ("11,2,1", 4),
                ("11,3", 2),
                ("12,2", 2),
            ],
        );
        assert_eq!(got, want);
        assert!(toprow_recursion_w(7, &lam).unwrap().holds());
        assert!(toprow_recursion_w(4, &lam).is_err());
    }

    #[test]
    fn mirror_small_cases() {
        for k in 0..=2 {
            for n in 0..=5 {
                for lam in k_strict_partitions(n, k) {
                    assert!(mirror_w(&KStrict::new(k, lam.clone()).unwrap()).holds(), "k={k} {lam}");
                }
            }
        }
    }

    #[test]
    fn vanishing_terms_under_3211() {
        let d12: PairSet = "12".parse().unwrap();
        assert!(DIndexed::new(d12.clone(), vec![3, 3, 1, 1], 1).unwrap().value().is_zero());
        assert!(DIndexed::new(d12.clone(), vec![3, 2, 1, 2], 1).unwrap().value().is_zero());
        assert!(DIndexed::new("12,13,14".parse().unwrap(), vec![5, 2, 0, 1], 1).unwrap().value().is_zero());
        assert!(DIndexed::new("12,13,23".parse().unwrap(), vec![3, 2, 2, 1], 1).unwrap().value().is_zero());
        assert!(DIndexed::new("12,13,23".parse().unwrap(), vec![3, 3, 1, 1], 1).unwrap().value().is_zero());
        assert!(check_tame(&d12, 1, &[3, 3, 1, 1], 1).unwrap().holds());
        assert!(check_tame(&"12,13,14".parse().unwrap(), 3, &[5, 2, 0, 1], 1).unwrap().holds());
        assert!(check_tame(&PairSet::new(), 1, &[2, 3], 0).unwrap().holds());
    }

    #[test]
    fn mitosis_steps_under_3211() {
        let w = DIndexed::new("12".parse().unwrap(), vec![3, 2, 2, 1], 1).unwrap();
        let (a, b) = mitosis(&w, 1, 3).unwrap();
        assert_eq!(a.to_string(), "W^{12,13}_(3,2,2,1)");
        assert_eq!(b.to_string(), "W^{12,13}_(4,2,1,1)");
        assert!(mitosis_report(&w, 1, 3).unwrap().holds());
        let w = DIndexed::new("12,13".parse().unwrap(), vec![5, 2, 0, 1], 1).unwrap();
        let (_, b) = mitosis(&w, 1, 4).unwrap();
        assert_eq!(b.alpha, vec![6, 2, 0, 0]);
        assert!(mitosis_report(&w, 1, 4).unwrap().holds());
        assert!(mitosis(&w, 1, 2).is_err());
        assert!(mitosis(&w, 2, 4).is_err());
    }

    #[test]
    fn pfaffian_matches_giambelli_at_k_zero() {
        for n in 0..=8 {
            for lam in strict_partitions(n) {
                if lam.len() > 4 {
                    continue;
                }
                let want = giambelli_w(&IntegerVector::from(&lam), None, 0).unwrap();
                assert_eq!(pfaffian_w(&lam).unwrap(), want, "{lam}");
            }
        }
    }
}
