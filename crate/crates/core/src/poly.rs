//! Multivariate integer polynomials in `x_1..x_m`, `y_1..y_k` and optionally `t`.

use crate::basis::Ring;
use crate::error::{Error, Result};
use crate::tpoly::TPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Variable layout: `x_1..x_x`, then `y_1..y_y`, then `t` if present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vars {
    pub x: usize,
    pub y: usize,
    pub t: bool,
}

impl Vars {
    pub fn new(x: usize, y: usize, t: bool) -> Self {
        Vars { x, y, t }
    }

    pub fn xs(x: usize) -> Self {
        Vars { x, y: 0, t: false }
    }

    pub fn len(&self) -> usize {
        self.x + self.y + usize::from(self.t)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn names(&self) -> Vec<String> {
        let mut v: Vec<String> = (1..=self.x).map(|i| format!("x{i}")).collect();
        v.extend((1..=self.y).map(|j| format!("y{j}")));
        if self.t {
            v.push("t".into());
        }
        v
    }

    /// Position of `x_i` (1-based).
    pub fn x_pos(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.x, "x_{i} out of range");
        i - 1
    }

    pub fn y_pos(&self, j: usize) -> usize {
        assert!(j >= 1 && j <= self.y, "y_{j} out of range");
        self.x + j - 1
    }

    pub fn t_pos(&self) -> usize {
        assert!(self.t, "no t variable");
        self.x + self.y
    }
}

/// Sparse polynomial; exponent vectors follow the layout of [`Vars`].
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// Name used where a degree-capped polynomial is meant.
pub type TruncatedPolynomial = Poly;

impl Poly {
    pub fn zero(vars: Vars) -> Self {
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn constant<I: Into<BigInt>>(vars: Vars, c: I) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, 1)
    }

    pub fn monomial<I: Into<BigInt>>(vars: Vars, exps: Vec<u32>, c: I) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        p.add_term(exps, c.into());
        p
    }

    fn var_at(vars: Vars, pos: usize, power: u32) -> Self {
        let mut e = vec![0; vars.len()];
        e[pos] = power;
        Self::monomial(vars, e, 1)
    }

    pub fn x(vars: Vars, i: usize) -> Self {
        Self::var_at(vars, vars.x_pos(i), 1)
    }

    pub fn x_pow(vars: Vars, i: usize, power: u32) -> Self {
        Self::var_at(vars, vars.x_pos(i), power)
    }

    pub fn y(vars: Vars, j: usize) -> Self {
        Self::var_at(vars, vars.y_pos(j), 1)
    }

    pub fn t(vars: Vars) -> Self {
        Self::var_at(vars, vars.t_pos(), 1)
    }

    /// A polynomial in `t` as an element of this ring.
    pub fn from_tpoly(vars: Vars, p: &TPoly) -> Self {
        let mut out = Self::zero(vars);
        for (n, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if n == 0 {
                out.add_term(vec![0; vars.len()], c.clone());
            } else {
                let mut e = vec![0; vars.len()];
                e[vars.t_pos()] = n as u32;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(acc) => {
                *acc += c;
                if acc.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn check(&self, other: &Poly) {
        assert_eq!(self.vars, other.vars, "polynomials over different variable sets");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn add_assign(&mut self, other: &Poly) {
        self.check(other);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> Poly {
        Poly { vars: self.vars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        let mut out = Self::zero(self.vars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Product keeping only terms of total degree at most `cap`.
    pub fn mul_truncated(&self, other: &Poly, cap: u32) -> Poly {
        self.check(other);
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &other.terms {
                if da + eb.iter().sum::<u32>() > cap {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Self::one(self.vars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Drops terms of total degree above `cap`.
    pub fn truncate(&self, cap: u32) -> Poly {
        Poly {
            vars: self.vars,
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() <= cap).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Part of total degree exactly `d`, counting all variables.
    pub fn homogeneous(&self, d: u32) -> Poly {
        Poly {
            vars: self.vars,
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Reindexes variables into `target`: `x_i -> x_{i + x_offset}`, `y_j -> y_j`,
    /// `t -> t`.
    pub fn embed(&self, target: Vars, x_offset: usize) -> Result<Poly> {
        if self.vars.x + x_offset > target.x || self.vars.y > target.y || (self.vars.t && !target.t) {
            return Err(Error::VarMismatch);
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut f = vec![0; target.len()];
            for i in 1..=self.vars.x {
                f[target.x_pos(i + x_offset)] = e[self.vars.x_pos(i)];
            }
            for j in 1..=self.vars.y {
                f[target.y_pos(j)] = e[self.vars.y_pos(j)];
            }
            if self.vars.t {
                f[target.t_pos()] = e[self.vars.t_pos()];
            }
            out.add_term(f, c.clone());
        }
        Ok(out)
    }

    /// Substitutes an integer for `t`, removing the variable.
    pub fn specialize_t(&self, value: i64) -> Poly {
        if !self.vars.t {
            return self.clone();
        }
        let target = Vars { t: false, ..self.vars };
        let tp = self.vars.t_pos();
        let v = BigInt::from(value);
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let n = f.remove(tp);
            out.add_term(f, c * num_traits::pow(v.clone(), n as usize));
        }
        out
    }

    /// Sets `x_i = 0` for every `i` (the layout is kept).
    pub fn x_to_zero(&self) -> Poly {
        Poly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[..self.vars.x].iter().all(|&a| a == 0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exchanges `x_i` and `x_j`.
    pub fn swap_x(&self, i: usize, j: usize) -> Poly {
        let (a, b) = (self.vars.x_pos(i), self.vars.x_pos(j));
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f.swap(a, b);
            out.add_term(f, c.clone());
        }
        out
    }

    pub fn is_symmetric_in_x(&self) -> bool {
        (1..self.vars.x).all(|i| &self.swap_x(i, i + 1) == self)
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| serde_json::json!({"exponents": e, "coeff": crate::json::bigint(c)}))
            .collect();
        serde_json::json!({"variables": self.vars.names(), "terms": terms})
    }
}

impl Ring for Poly {
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
}

impl fmt::Display for Poly {
    /// Terms in decreasing lexicographic order of exponents, e.g.
    /// `4*x1^3*x2 + 8*x1^2*x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (n == 0, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = e
                .iter()
                .zip(&names)
                .filter(|(&a, _)| a > 0)
                .map(|(&a, name)| if a == 1 { name.clone() } else { format!("{name}^{a}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_display() {
        let v = Vars::new(2, 1, false);
        let p = Poly::x(v, 1).add(&Poly::y(v, 1));
        let sq = p.mul(&p);
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*y1 + y1^2");
        assert_eq!(sq.total_degree(), Some(2));
        assert_eq!(sq.mul_truncated(&p, 2), Poly::zero(v));
    }

    #[test]
    fn embed_and_specialize() {
        let v = Vars::new(1, 0, true);
        let p = Poly::x(v, 1).mul(&Poly::from_tpoly(v, &TPoly::from_i64s(&[1, -1])));
        let q = p.specialize_t(-1);
        assert_eq!(q.to_string(), "2*x1");
        let w = Vars::new(3, 0, false);
        let e = q.embed(w, 2).unwrap();
        assert_eq!(e.to_string(), "2*x3");
        assert!(q.embed(Vars::xs(0), 0).is_err());
    }

    #[test]
    fn symmetry_check() {
        let v = Vars::xs(2);
        let s = Poly::x(v, 1).mul(&Poly::x(v, 1)).add(&Poly::x(v, 2).mul(&Poly::x(v, 2)));
        assert!(s.is_symmetric_in_x());
        assert!(!Poly::x(v, 1).is_symmetric_in_x());
    }
}
