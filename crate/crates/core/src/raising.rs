//! Expansion of products of raising-operator power series applied to a
//! monomial `g_alpha = g_{alpha_1} g_{alpha_2} ...`.
//!
//! A raising operator `R_ij` (`i < j`) moves one unit from position `j` to
//! position `i` of the index vector. Operators act on indices only, so the
//! expansion is a sum over exponent families `n_ij` of
//! `prod c_ij(n_ij) * g_{alpha + sum n_ij (e_i - e_j)}`; generators with
//! negative index vanish and `g_0 = 1`.
//!
//! Pairs are processed column by column from the last position down. While a
//! column `j` is processed its entry only decreases and nothing later touches
//! it, so every partial vector with a negative entry in a finished column can
//! be discarded. This makes the sum finite even for infinite series factors.

use crate::element::{Basis, RingElement};
use crate::error::{Error, Result};
use crate::pairs::PairSet;
use crate::partition::{IntegerVector, Partition};
use crate::tpoly::TPoly;
use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

/// A power series `sum_n c(n) R^n` attached to one pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    One,
    /// `1 - R`
    OneMinusR,
    /// `1 + R`
    OnePlusR,
    /// `(1 - R) / (1 - tR)`
    HallLittlewood,
    /// `(1 - tR) / (1 - R)`
    HallLittlewoodInverse,
    /// `(1 + R)^{-1}`
    OnePlusRInverse,
    /// `(1 - R)^{-1}`
    OneMinusRInverse,
    /// `(1 - R) / (1 + R)`
    OneMinusROverOnePlusR,
}

impl Factor {
    /// Coefficient of `R^n`.
    pub fn coeff(self, n: usize) -> TPoly {
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        match (self, n) {
            (_, 0) => TPoly::one(),
            (Factor::One, _) => TPoly::zero(),
            (Factor::OneMinusR, 1) => TPoly::constant(-1),
            (Factor::OnePlusR, 1) => TPoly::one(),
            (Factor::OneMinusR | Factor::OnePlusR, _) => TPoly::zero(),
            (Factor::HallLittlewood, n) => &TPoly::monomial(1, n) - &TPoly::monomial(1, n - 1),
            (Factor::HallLittlewoodInverse, _) => TPoly::from_i64s(&[1, -1]),
            (Factor::OnePlusRInverse, _) => TPoly::constant(sign),
            (Factor::OneMinusRInverse, _) => TPoly::one(),
            (Factor::OneMinusROverOnePlusR, _) => TPoly::constant(2 * sign),
        }
    }

    /// Largest power with a nonzero coefficient, if finite.
    pub fn max_power(self) -> Option<usize> {
        match self {
            Factor::One => Some(0),
            Factor::OneMinusR | Factor::OnePlusR => Some(1),
            _ => None,
        }
    }

    pub fn depends_on_t(self) -> bool {
        matches!(self, Factor::HallLittlewood | Factor::HallLittlewoodInverse)
    }
}

/// Assignment of a factor to every pair `(i, j)` with `i < j <= len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorSpec {
    len: usize,
    default: Factor,
    overrides: BTreeMap<(usize, usize), Factor>,
}

impl FactorSpec {
    pub fn uniform(len: usize, factor: Factor) -> Self {
        FactorSpec { len, default: factor, overrides: BTreeMap::new() }
    }

    /// `inside` on the pairs of `set`, `outside` elsewhere.
    pub fn split(len: usize, set: &PairSet, inside: Factor, outside: Factor) -> Self {
        let overrides = set.iter().filter(|&(_, j)| j <= len).map(|p| (p, inside)).collect();
        FactorSpec { len, default: outside, overrides }
    }

    pub fn set(&mut self, i: usize, j: usize, factor: Factor) {
        self.overrides.insert((i, j), factor);
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn factor(&self, i: usize, j: usize) -> Factor {
        self.overrides.get(&(i, j)).copied().unwrap_or(self.default)
    }

    pub fn depends_on_t(&self) -> bool {
        (2..=self.len).any(|j| (1..j).any(|i| self.factor(i, j).depends_on_t()))
    }
}

type MemoKey = (FactorSpec, IntegerVector, Basis);

fn memo() -> &'static RwLock<HashMap<MemoKey, RingElement>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, RingElement>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Maximum number of cached expansions, read once from
/// `RAISING_MEMO_CAPACITY` (default 200000; 0 disables caching).
pub fn memo_capacity() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("RAISING_MEMO_CAPACITY").ok().and_then(|s| s.parse().ok()).unwrap_or(200_000)
    })
}

/// Expands `prod_{i<j} factor(i,j)(R_ij)` applied to `g_alpha` into monomials
/// of `target`. Results are cached; see [`expand_raising_uncached`].
pub fn expand_raising(spec: &FactorSpec, alpha: &IntegerVector, target: Basis) -> Result<RingElement> {
    let cap = memo_capacity();
    let key = (spec.clone(), alpha.clone(), target);
    if cap > 0 {
        if let Some(hit) = memo().read().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
    }
    let out = expand_raising_uncached(spec, alpha, target)?;
    if cap > 0 {
        let mut m = memo().write().expect("memo lock");
        if m.len() < cap {
            m.insert(key, out.clone());
        }
    }
    Ok(out)
}

pub fn expand_raising_uncached(spec: &FactorSpec, alpha: &IntegerVector, target: Basis) -> Result<RingElement> {
    if !target.is_monomial() {
        return Err(Error::Invalid(format!("target basis {} is not a monomial basis", target.tag())));
    }
    if spec.len < alpha.length() {
        return Err(Error::LengthTooShort { len: spec.len, needed: alpha.length() });
    }
    if !target.allows_t() && spec.depends_on_t() {
        return Err(Error::TDependentFactor);
    }
    let len = alpha.length();
    let mut out = RingElement::zero(target, None);
    if len == 0 {
        out.add_term(Partition::empty(), &TPoly::one());
        return Ok(out);
    }
    let mut states: HashMap<Vec<i64>, TPoly> = HashMap::new();
    states.insert(alpha.padded(len), TPoly::one());
    let mut coeff_cache: HashMap<(Factor, usize), TPoly> = HashMap::new();
    for j in (2..=len).rev() {
        states.retain(|v, _| v[j - 1] >= 0);
        for i in (1..j).rev() {
            let f = spec.factor(i, j);
            if f == Factor::One {
                continue;
            }
            let mut next: HashMap<Vec<i64>, TPoly> = HashMap::with_capacity(states.len() * 2);
            for (v, c) in states {
                let avail = v[j - 1] as usize;
                let top = f.max_power().map_or(avail, |m| m.min(avail));
                for n in 0..=top {
                    let cn = coeff_cache.entry((f, n)).or_insert_with(|| f.coeff(n));
                    if cn.is_zero() {
                        continue;
                    }
                    let mut w = v.clone();
                    w[i - 1] += n as i64;
                    w[j - 1] -= n as i64;
                    let term = &c * cn;
                    match next.get_mut(&w) {
                        Some(acc) => *acc += &term,
                        None => {
                            next.insert(w, term);
                        }
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            states = next;
        }
    }
    for (v, c) in states {
        if v.iter().any(|&x| x < 0) {
            continue;
        }
        let idx = Partition::from_unsorted(v.into_iter().map(|x| x as usize).collect());
        out.add_term(idx, &c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::from_int_terms;

    fn iv(v: &[i64]) -> IntegerVector {
        IntegerVector::from(v.to_vec())
    }

    #[test]
    fn hall_littlewood_series_coefficients() {
        let f = Factor::HallLittlewood;
        assert_eq!(f.coeff(1), TPoly::from_i64s(&[-1, 1]));
        assert_eq!(f.coeff(2), TPoly::from_i64s(&[0, -1, 1]));
        assert_eq!(Factor::OneMinusROverOnePlusR.coeff(3), TPoly::constant(-2));
    }

    #[test]
    fn two_row_schur_expansion() {
        let spec = FactorSpec::uniform(2, Factor::OneMinusR);
        let e = expand_raising(&spec, &iv(&[2, 1]), Basis::UMonomial).unwrap();
        assert_eq!(e, from_int_terms(Basis::UMonomial, None, &[("2,1", 1), ("3", -1)]));
    }

    #[test]
    fn negative_last_entry_vanishes() {
        let spec = FactorSpec::uniform(3, Factor::OneMinusROverOnePlusR);
        let e = expand_raising(&spec, &iv(&[4, 2, -1]), Basis::WMonomial).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn degree_zero_vector_can_survive() {
        let spec = FactorSpec::uniform(2, Factor::OneMinusR);
        let e = expand_raising(&spec, &iv(&[-1, 1]), Basis::UMonomial).unwrap();
        assert_eq!(e, from_int_terms(Basis::UMonomial, None, &[("", -1)]));
    }

    #[test]
    fn rejects_short_length_and_t_in_t_free_target() {
        let spec = FactorSpec::uniform(1, Factor::OneMinusR);
        assert!(matches!(
            expand_raising(&spec, &iv(&[1, 1]), Basis::UMonomial),
            Err(Error::LengthTooShort { .. })
        ));
        let spec = FactorSpec::uniform(2, Factor::HallLittlewood);
        assert_eq!(expand_raising(&spec, &iv(&[1, 1]), Basis::WMonomial), Err(Error::TDependentFactor));
    }

    #[test]
    fn cache_is_transparent() {
        let spec = FactorSpec::uniform(3, Factor::HallLittlewood);
        let a = iv(&[3, 1, 2]);
        let cached = expand_raising(&spec, &a, Basis::VMonomial).unwrap();
        let again = expand_raising(&spec, &a, Basis::VMonomial).unwrap();
        let fresh = expand_raising_uncached(&spec, &a, Basis::VMonomial).unwrap();
        assert_eq!(cached, fresh);
        assert_eq!(again, fresh);
    }
}
