//! Sparse linear combinations indexed by partitions, over `Z[t]`.

use crate::partition::Partition;
use crate::tpoly::TPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Which family of generators or basis elements the indices refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Monomials `u_a u_b ...` in the polynomial ring `Z[u_1, u_2, ...]`.
    UMonomial,
    /// Monomials `v_a v_b ...` over `Z[t]`.
    VMonomial,
    /// Monomials `w_a w_b ...` in the type C quotient ring.
    WMonomial,
    /// Raising operator images of `u` monomials (Schur type).
    U,
    /// Hall-Littlewood type images of `v` monomials.
    V,
    /// Type C images of `w` monomials.
    W,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::UMonomial => "u",
            Basis::VMonomial => "v",
            Basis::WMonomial => "w",
            Basis::U => "U",
            Basis::V => "V",
            Basis::W => "W",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Basis> {
        Some(match tag {
            "u" => Basis::UMonomial,
            "v" => Basis::VMonomial,
            "w" => Basis::WMonomial,
            "U" => Basis::U,
            "V" => Basis::V,
            "W" => Basis::W,
            _ => return None,
        })
    }

    pub fn is_monomial(self) -> bool {
        matches!(self, Basis::UMonomial | Basis::VMonomial | Basis::WMonomial)
    }

    pub fn allows_t(self) -> bool {
        matches!(self, Basis::VMonomial | Basis::V)
    }

    /// Monomial basis of the same ring.
    pub fn monomial(self) -> Basis {
        match self {
            Basis::U | Basis::UMonomial => Basis::UMonomial,
            Basis::V | Basis::VMonomial => Basis::VMonomial,
            Basis::W | Basis::WMonomial => Basis::WMonomial,
        }
    }
}

/// Output order: by degree, then dominant (lexicographically larger) first.
pub fn display_order(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.cmp(a))
}

#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    basis: Basis,
    k: Option<usize>,
    terms: BTreeMap<Partition, TPoly>,
}

impl RingElement {
    pub fn zero(basis: Basis, k: Option<usize>) -> Self {
        RingElement { basis, k, terms: BTreeMap::new() }
    }

    pub fn monomial(basis: Basis, k: Option<usize>, index: Partition) -> Self {
        let mut e = Self::zero(basis, k);
        e.add_term(index, &TPoly::one());
        e
    }

    pub fn one(basis: Basis, k: Option<usize>) -> Self {
        Self::monomial(basis, k, Partition::empty())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn with_basis(mut self, basis: Basis, k: Option<usize>) -> Self {
        self.basis = basis;
        self.k = k;
        self
    }

    pub fn add_term(&mut self, index: Partition, coeff: &TPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&index) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&index);
                }
            }
            None => {
                self.terms.insert(index, coeff.clone());
            }
        }
    }

    pub fn add_int_term(&mut self, index: Partition, coeff: i64) {
        self.add_term(index, &TPoly::constant(coeff));
    }

    pub fn coeff(&self, index: &Partition) -> TPoly {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &TPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in output order (by degree, dominant first).
    pub fn sorted_terms(&self) -> Vec<(&Partition, &TPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| display_order(a.0, b.0));
        v
    }

    pub fn add_scaled(&mut self, other: &RingElement, scale: &TPoly) {
        for (idx, c) in &other.terms {
            self.add_term(idx.clone(), &(c * scale));
        }
    }

    pub fn add_assign(&mut self, other: &RingElement) {
        for (idx, c) in &other.terms {
            self.add_term(idx.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, other: &RingElement) {
        for (idx, c) in &other.terms {
            self.add_term(idx.clone(), &-c);
        }
    }

    pub fn difference(&self, other: &RingElement) -> RingElement {
        let mut d = self.clone();
        d.sub_assign(other);
        d
    }

    pub fn scaled(&self, scale: &TPoly) -> RingElement {
        let mut out = Self::zero(self.basis, self.k);
        out.add_scaled(self, scale);
        out
    }

    /// Multiplies monomials by concatenating and re-sorting their indices.
    /// Only meaningful for monomial bases.
    pub fn mul_monomials(&self, other: &RingElement) -> RingElement {
        let mut out = Self::zero(self.basis, self.k);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(concat_index(a, b), &(ca * cb));
            }
        }
        out
    }

    /// Product with the single generator of index `r` (monomial bases).
    pub fn times_generator(&self, r: i64) -> RingElement {
        if r < 0 {
            return Self::zero(self.basis, self.k);
        }
        let single = if r == 0 { Partition::empty() } else { Partition::from_unsorted(vec![r as usize]) };
        let mut out = Self::zero(self.basis, self.k);
        for (a, c) in &self.terms {
            out.add_term(concat_index(a, &single), c);
        }
        out
    }

    /// Substitutes an integer for `t`.
    pub fn specialize_t(&self, t: i64) -> RingElement {
        let tv = BigInt::from(t);
        let mut out = Self::zero(self.basis, self.k);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), &TPoly::constant(c.eval(&tv)));
        }
        out
    }

    /// Whether every coefficient is a constant.
    pub fn is_t_free(&self) -> bool {
        self.terms.values().all(TPoly::is_constant)
    }

    /// Integer coefficients in output order, or `None` if some coefficient involves `t`.
    pub fn integer_terms(&self) -> Option<Vec<(Partition, BigInt)>> {
        let mut out = Vec::new();
        for (idx, c) in self.sorted_terms() {
            if !c.is_constant() {
                return None;
            }
            out.push((idx.clone(), c.constant_term()));
        }
        Some(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(idx, c)| {
                serde_json::json!({
                    "index": idx.parts(),
                    "coeff": c.coeffs().iter().map(crate::json::bigint).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "basis": self.basis.tag(),
            "k": self.k,
            "terms": terms,
        })
    }
}

/// Sorted union of two monomial indices.
pub fn concat_index(a: &Partition, b: &Partition) -> Partition {
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::from_unsorted(v)
}

fn write_index(f: &mut fmt::Formatter<'_>, sym: &str, idx: &Partition) -> fmt::Result {
    if idx.is_empty() {
        return write!(f, "1");
    }
    let s: Vec<String> = idx.parts().iter().map(|x| x.to_string()).collect();
    write!(f, "{sym}_{{{}}}", s.join(","))
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.tag();
        for (n, (idx, c)) in self.sorted_terms().into_iter().enumerate() {
            if c.is_constant() {
                let v = c.constant_term();
                let neg = v.is_negative();
                let mag = v.abs();
                match (n == 0, neg) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                if idx.is_empty() {
                    write!(f, "{mag}")?;
                    continue;
                }
                if !mag.is_one() {
                    write!(f, "{mag} ")?;
                }
            } else {
                if n > 0 {
                    write!(f, " + ")?;
                }
                write!(f, "({c})")?;
                if idx.is_empty() {
                    continue;
                }
                write!(f, " ")?;
            }
            write_index(f, sym, idx)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Builds an element from `(index, integer)` pairs; handy in tests.
pub fn from_int_terms(basis: Basis, k: Option<usize>, terms: &[(&str, i64)]) -> RingElement {
    let mut e = RingElement::zero(basis, k);
    for (idx, c) in terms {
        let p: Partition = idx.parse().expect("partition literal");
        e.add_int_term(p, *c);
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_orders_dominant_first() {
        let e = from_int_terms(Basis::WMonomial, Some(2), &[("9", -2), ("6,2,1", 1), ("8,1", 4), ("6,3", -1), ("7,1,1", -2)]);
        assert_eq!(e.to_string(), "-2 w_{9} + 4 w_{8,1} - 2 w_{7,1,1} - w_{6,3} + w_{6,2,1}");
    }

    #[test]
    fn t_coefficients_display() {
        let mut e = RingElement::zero(Basis::VMonomial, None);
        e.add_term("1,1".parse().unwrap(), &TPoly::one());
        e.add_term("2".parse().unwrap(), &TPoly::from_i64s(&[-1, 1]));
        assert_eq!(e.to_string(), "(-1 + t) v_{2} + v_{1,1}");
        assert_eq!(e.specialize_t(1).len(), 1);
    }

    #[test]
    fn generator_products_sort_indices() {
        let e = RingElement::monomial(Basis::UMonomial, None, "2,1".parse().unwrap());
        let f = e.times_generator(3);
        assert_eq!(f.to_string(), "u_{3,2,1}");
        assert!(e.times_generator(-1).is_zero());
        assert_eq!(e.times_generator(0), e);
    }

    #[test]
    fn json_shape() {
        let e = from_int_terms(Basis::W, Some(1), &[("2,1", 3)]);
        let j = e.to_json();
        assert_eq!(j["basis"], "W");
        assert_eq!(j["k"], 1);
        assert_eq!(j["terms"][0]["index"], serde_json::json!([2, 1]));
        assert_eq!(j["terms"][0]["coeff"], serde_json::json!([3]));
    }
}
