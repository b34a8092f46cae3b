//! Signed permutations, the nilCoxeter algebra of `B_n`, type C and type A
//! Stanley functions, Billey-Haiman Schubert polynomials and the dictionary
//! between k-strict partitions and k-Grassmannian elements.
//!
//! Words act on the right: the word `(a_1, ..., a_l)` denotes
//! `s_{a_1} ... s_{a_l}`, where right multiplication by `s_i` (`i > 0`) swaps
//! positions `i` and `i + 1` of the window and `s_0` negates position 1.

use crate::error::{Error, Result};
use crate::partition::{Partition, KStrict};
use crate::poly::{Poly, Vars};
use crate::report::PolyIdentity;
use num_bigint::BigInt;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

/// An element of `B_n`, stored as its window `(w(1), ..., w(n))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Vec<i64>);

impl SignedPermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::BadSignedPermutation(format!("{window:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation(window))
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation((1..=n as i64).collect())
    }

    /// The simple reflection `s_i` in `B_n`.
    pub fn generator(i: usize, n: usize) -> Self {
        Self::identity(n.max(i + 1)).times_generator(i)
    }

    pub fn from_word(word: &[usize], n: usize) -> Self {
        let n = word.iter().map(|&a| a + 1).max().unwrap_or(0).max(n);
        word.iter().fold(Self::identity(n), |w, &a| w.times_generator(a))
    }

    pub fn window(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// The same element in `B_n` for a larger `n`.
    pub fn extended(&self, n: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(self.0.len() as i64 + 1..=n as i64);
        SignedPermutation(v)
    }

    fn at(&self, x: i64) -> i64 {
        let v = self.0[x.unsigned_abs() as usize - 1];
        if x < 0 {
            -v
        } else {
            v
        }
    }

    /// `self * other`, acting as `x -> self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.n().max(other.n());
        let (a, b) = (self.extended(n), other.extended(n));
        SignedPermutation(b.0.iter().map(|&x| a.at(x)).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            let pos = x.unsigned_abs() as usize - 1;
            v[pos] = if x < 0 { -(i as i64 + 1) } else { i as i64 + 1 };
        }
        SignedPermutation(v)
    }

    /// `self * s_i`.
    pub fn times_generator(&self, i: usize) -> Self {
        let mut v = self.extended(i + 1).0;
        if i == 0 {
            v[0] = -v[0];
        } else {
            v.swap(i - 1, i);
        }
        SignedPermutation(v)
    }

    /// `inv(w) + sum |w(i)|` over negative entries.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv + w.iter().filter(|&&x| x < 0).map(|&x| x.unsigned_abs() as usize).sum::<usize>()
    }

    /// Whether `l(w s_i) < l(w)`.
    pub fn has_descent(&self, i: usize) -> bool {
        if i >= self.n() {
            return false;
        }
        if i == 0 {
            self.0[0] < 0
        } else {
            self.0[i - 1] > self.0[i]
        }
    }

    pub fn descents(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.has_descent(i)).collect()
    }

    /// A reduced word found by stripping the smallest descent repeatedly.
    pub fn greedy_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(&i) = w.descents().first() {
            word.push(i);
            w = w.times_generator(i);
        }
        word.reverse();
        word
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i as i64 + 1)
    }

    /// Whether `self = v * rest` with lengths adding up.
    pub fn has_prefix(&self, v: &Self) -> bool {
        let rest = v.inverse().compose(self);
        v.length() + rest.length() == self.length()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let window: std::result::Result<Vec<i64>, _> =
            s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::parse).collect();
        Self::new(window.map_err(|_| Error::Parse(format!("bad signed permutation '{s}'")))?)
    }
}

/// Parses a word such as `1,2,1,0,1`.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad letter '{t}'"))))
        .collect()
}

pub fn is_reduced_word(word: &[usize], w: &SignedPermutation) -> bool {
    let v = SignedPermutation::from_word(word, w.n());
    v.extended(w.n().max(v.n())) == w.extended(w.n().max(v.n())) && v.length() == word.len()
}

/// Every reduced word of `w`, in lexicographic order.
pub fn reduced_words(w: &SignedPermutation) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut suffix = Vec::new();
    words_rec(w, &mut suffix, &mut out);
    out.sort();
    out
}

fn words_rec(w: &SignedPermutation, suffix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if w.is_identity() {
        out.push(suffix.iter().rev().copied().collect());
        return;
    }
    for i in w.descents() {
        suffix.push(i);
        words_rec(&w.times_generator(i), suffix, out);
        suffix.pop();
    }
}

/// Number of reduced words of `w`.
pub fn count_reduced_words(w: &SignedPermutation) -> BigInt {
    fn rec(w: &SignedPermutation, memo: &mut HashMap<SignedPermutation, BigInt>) -> BigInt {
        if w.is_identity() {
            return BigInt::from(1);
        }
        if let Some(hit) = memo.get(w) {
            return hit.clone();
        }
        let total = w.descents().into_iter().map(|i| rec(&w.times_generator(i), memo)).sum();
        memo.insert(w.clone(), total);
        memo[w].clone()
    }
    rec(w, &mut HashMap::new())
}

/// Finite sums `sum c_w u_w` in the nilCoxeter algebra of `B_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilCoxeterElement {
    n: usize,
    vars: Vars,
    terms: BTreeMap<SignedPermutation, Poly>,
}

impl NilCoxeterElement {
    pub fn one(n: usize, vars: Vars) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(SignedPermutation::identity(n), Poly::one(vars));
        NilCoxeterElement { n, vars, terms }
    }

    pub fn coeff(&self, w: &SignedPermutation) -> Poly {
        self.terms.get(&w.extended(self.n)).cloned().unwrap_or_else(|| Poly::zero(self.vars))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedPermutation, &Poly)> {
        self.terms.iter()
    }

    /// `self * (1 + c u_i)`, keeping only terms that are prefixes of `target`.
    pub fn times_factor(&self, i: usize, c: &Poly, target: Option<&SignedPermutation>) -> Self {
        let mut out = self.clone();
        for (v, p) in &self.terms {
            if v.has_descent(i) {
                continue;
            }
            let next = v.times_generator(i);
            if let Some(t) = target {
                if !t.has_prefix(&next) {
                    continue;
                }
            }
            let term = p.mul(c);
            let slot = out.terms.entry(next).or_insert_with(|| Poly::zero(self.vars));
            slot.add_assign(&term);
        }
        out.terms.retain(|_, p| !p.is_zero());
        out
    }

    /// `self * C(omega)`.
    pub fn times_c(&self, omega: &Poly, target: Option<&SignedPermutation>) -> Self {
        let two = omega.scale(&BigInt::from(2));
        let mut out = self.clone();
        for i in (1..self.n).rev() {
            out = out.times_factor(i, omega, target);
        }
        out = out.times_factor(0, &two, target);
        for i in 1..self.n {
            out = out.times_factor(i, omega, target);
        }
        out
    }

    /// `self * A_i(omega)`.
    pub fn times_a(&self, i: usize, omega: &Poly, target: Option<&SignedPermutation>) -> Self {
        let mut out = self.clone();
        for j in (i.max(1)..self.n).rev() {
            out = out.times_factor(j, omega, target);
        }
        out
    }

    /// Product in the nilCoxeter algebra: `u_v u_v' = u_{vv'}` when lengths add,
    /// and 0 otherwise.
    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<SignedPermutation, Poly> = BTreeMap::new();
        for (a, p) in &self.terms {
            for (b, q) in &other.terms {
                let ab = a.compose(b);
                if ab.length() == a.length() + b.length() {
                    terms.entry(ab).or_insert_with(|| Poly::zero(self.vars)).add_assign(&p.mul(q));
                }
            }
        }
        terms.retain(|_, p| !p.is_zero());
        NilCoxeterElement { n: self.n, vars: self.vars, terms }
    }

    /// `u_w` as an element.
    pub fn basis_element(w: &SignedPermutation, vars: Vars) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), Poly::one(vars));
        NilCoxeterElement { n: w.n(), vars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `C(omega)` as an element of the nilCoxeter algebra of `B_n`.
pub fn c_factor(n: usize, omega: &Poly) -> NilCoxeterElement {
    NilCoxeterElement::one(n, omega.vars()).times_c(omega, None)
}

/// `F_w(x_1..x_m)`: the coefficient of `u_w` in `C(x_1) ... C(x_m)`.
pub fn stanley_c(w: &SignedPermutation, m: usize) -> Poly {
    let vars = Vars::xs(m);
    let mut e = NilCoxeterElement::one(w.n(), vars);
    for i in 1..=m {
        e = e.times_c(&Poly::x(vars, i), Some(w));
    }
    e.coeff(w)
}

/// The Billey-Haiman polynomial: coefficient of `u_w` in
/// `C(x_1) ... C(x_m) A_1(y_1) ... A_{n-1}(y_{n-1})`, in
/// `Vars::new(m, n - 1, false)`.
pub fn schubert_bh(w: &SignedPermutation, m: usize) -> Poly {
    let n = w.n();
    let vars = Vars::new(m, n.saturating_sub(1), false);
    let mut e = NilCoxeterElement::one(n, vars);
    for i in 1..=m {
        e = e.times_c(&Poly::x(vars, i), Some(w));
    }
    for j in 1..n {
        e = e.times_a(j, &Poly::y(vars, j), Some(w));
    }
    e.coeff(w)
}

/// `G_omega(x_1..x_m)`: coefficient of `u_omega` in `A_1(x_1) ... A_1(x_m)` for
/// an unsigned permutation `omega`.
pub fn stanley_a(omega: &SignedPermutation, m: usize) -> Result<Poly> {
    if omega.window().iter().any(|&x| x < 0) {
        return Err(Error::BadSignedPermutation(format!("{omega} is not an unsigned permutation")));
    }
    let vars = Vars::xs(m);
    let mut e = NilCoxeterElement::one(omega.n(), vars);
    for i in 1..=m {
        e = e.times_a(1, &Poly::x(vars, i), Some(omega));
    }
    Ok(e.coeff(omega))
}

/// The k-Grassmannian element `w_lambda` of `B_n`, for `lambda` inside the
/// `(n - k) x (n + k)` rectangle.
pub fn grassmannian_element(lambda: &KStrict, n: usize) -> Result<SignedPermutation> {
    let k = lambda.k();
    let lam = lambda.partition();
    if k > n || !lam.fits_in(n - k, n + k) {
        return Err(Error::OutsideRectangle { partition: lam.to_string(), rows: n.saturating_sub(k), cols: n + k });
    }
    let zeta: Vec<i64> = lam.parts().iter().filter(|&&p| p > k).map(|&p| (p - k) as i64).collect();
    let mut left = Vec::with_capacity(k);
    for i in 1..=k {
        let alpha = lam.col(i) as i64;
        let u = (1..=n as i64)
            .filter(|u| !zeta.contains(u))
            .find(|&u| u + i as i64 - k as i64 - 1 + zeta.iter().filter(|&&z| z > u).count() as i64 == alpha)
            .ok_or_else(|| Error::Invalid(format!("no entry for column {i} of {lam}")))?;
        left.push(u);
    }
    let mut window: Vec<i64> = left.iter().rev().copied().collect();
    window.extend(zeta.iter().map(|z| -z));
    let used: BTreeSet<i64> = window.iter().map(|x| x.abs()).collect();
    window.extend((1..=n as i64).filter(|x| !used.contains(x)));
    SignedPermutation::new(window)
}

/// Whether every right descent of `w` is at `k`.
pub fn is_k_grassmannian(w: &SignedPermutation, k: usize) -> bool {
    w.descents().iter().all(|&i| i == k)
}

/// The k-strict partition `lambda` with `w = w_lambda`.
pub fn partition_of(w: &SignedPermutation, k: usize) -> Result<KStrict> {
    let n = w.n();
    let not_grassmannian = || Error::NotGrassmannian(w.to_string(), k);
    if k > n || !is_k_grassmannian(w, k) {
        return Err(not_grassmannian());
    }
    let win = w.window();
    if win[..k].iter().any(|&x| x < 0) {
        return Err(not_grassmannian());
    }
    let zeta: Vec<usize> = win[k..].iter().filter(|&&x| x < 0).map(|&x| x.unsigned_abs() as usize).collect();
    let alpha: Vec<usize> = (1..=k)
        .map(|i| {
            let u = win[k - i];
            let v = u + i as i64 - k as i64 - 1 + zeta.iter().filter(|&&z| z as i64 > u).count() as i64;
            usize::try_from(v).map_err(|_| not_grassmannian())
        })
        .collect::<Result<_>>()?;
    let rows = alpha.first().copied().unwrap_or(0).max(zeta.len());
    let parts: Vec<usize> =
        (1..=rows).map(|r| alpha.iter().filter(|&&a| a >= r).count() + zeta.get(r - 1).copied().unwrap_or(0)).collect();
    let lam = KStrict::new(k, Partition::new(parts).map_err(|_| not_grassmannian())?).map_err(|_| not_grassmannian())?;
    if grassmannian_element(&lam, n).ok().as_ref() != Some(w) {
        return Err(not_grassmannian());
    }
    Ok(lam)
}

/// `w_lambda w_mu^{-1}` in `B_n`.
pub fn skew_element(lambda: &KStrict, mu: &KStrict, n: usize) -> Result<SignedPermutation> {
    Ok(grassmannian_element(lambda, n)?.compose(&grassmannian_element(mu, n)?.inverse()))
}

/// Whether `l(w_lambda w_mu^{-1}) = |lambda| - |mu|`.
pub fn compatible_pair(lambda: &KStrict, mu: &KStrict, n: usize) -> Result<bool> {
    if !lambda.partition().contains(mu.partition()) {
        return Ok(false);
    }
    Ok(skew_element(lambda, mu, n)?.length() == lambda.partition().size() - mu.partition().size())
}

/// A pair `(lambda, mu)` in `P(k, n)` with `w_lambda = w w_mu` reduced, if any.
pub fn is_skew(w: &SignedPermutation, k: usize, n: usize) -> Option<(KStrict, KStrict)> {
    let w = w.extended(n);
    let len = w.length();
    for lam in crate::partition::grassmannian_index_set(k, n) {
        if lam.size() < len {
            continue;
        }
        let lam = KStrict::new(k, lam).ok()?;
        let wl = grassmannian_element(&lam, n).ok()?;
        let v = w.inverse().compose(&wl);
        if v.length() + len == wl.length() && is_k_grassmannian(&v, k) {
            if let Ok(mu) = partition_of(&v, k) {
                return Some((lam, mu));
            }
        }
    }
    None
}

/// The reduced word read off a standard k-tableau given as a chain of shapes
/// growing one box at a time: `w_{l_i} = s_{a_i} w_{l_{i-1}}`, and the word is
/// `(a_r, ..., a_1)`.
pub fn tableau_word(chain: &[Partition], k: usize, n: usize) -> Result<Vec<usize>> {
    let mut word = Vec::new();
    for pair in chain.windows(2) {
        let lo = grassmannian_element(&KStrict::new(k, pair[0].clone())?, n)?;
        let hi = grassmannian_element(&KStrict::new(k, pair[1].clone())?, n)?;
        let step = hi.compose(&lo.inverse());
        let a = (0..n)
            .find(|&a| SignedPermutation::generator(a, n) == step)
            .ok_or_else(|| Error::Invalid(format!("{} -> {} is not a single reflection", pair[0], pair[1])))?;
        word.push(a);
    }
    word.reverse();
    Ok(word)
}

/// Whether the letters strictly decrease and then strictly increase.
pub fn is_unimodal(word: &[usize]) -> bool {
    let mut i = 1;
    while i < word.len() && word[i] < word[i - 1] {
        i += 1;
    }
    while i < word.len() && word[i] > word[i - 1] {
        i += 1;
    }
    i >= word.len()
}

/// Unimodal reduced words of elements `u` with `w = u v` reduced, grouped by
/// `u`; identity excluded.
fn unimodal_prefixes(w: &SignedPermutation) -> BTreeMap<SignedPermutation, usize> {
    let mut out = BTreeMap::new();
    let start = SignedPermutation::identity(w.n());
    // (element, last letter, still decreasing)
    let mut stack: Vec<(SignedPermutation, usize, bool)> = Vec::new();
    for a in 0..w.n() {
        let next = start.times_generator(a);
        if w.has_prefix(&next) {
            stack.push((next, a, true));
        }
    }
    while let Some((v, last, decreasing)) = stack.pop() {
        *out.entry(v.clone()).or_insert(0) += 1;
        for a in 0..w.n() {
            if a == last || v.has_descent(a) {
                continue;
            }
            let still = decreasing && a < last;
            if !decreasing && a < last {
                continue;
            }
            let next = v.times_generator(a);
            if w.has_prefix(&next) {
                stack.push((next, a, still));
            }
        }
    }
    out
}

/// Number of unimodal reduced words of `u`.
pub fn count_unimodal_words(u: &SignedPermutation) -> usize {
    unimodal_prefixes(u).get(u).copied().unwrap_or(0)
}

/// Every reduced factorization `w = u_1 ... u_r` into non-identity unimodal
/// elements, each factor paired with its number of unimodal reduced words.
pub fn unimodal_factorizations(w: &SignedPermutation, r: usize) -> Vec<Vec<(SignedPermutation, usize)>> {
    if r == 0 {
        return if w.is_identity() { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for (u, count) in unimodal_prefixes(w) {
        let rest = u.inverse().compose(w);
        for mut tail in unimodal_factorizations(&rest, r - 1) {
            tail.insert(0, (u.clone(), count));
            out.push(tail);
        }
    }
    out
}

/// Every `u` with `w = u v` reduced.
pub fn reduced_prefixes(w: &SignedPermutation) -> Vec<SignedPermutation> {
    let mut seen: BTreeSet<SignedPermutation> = BTreeSet::new();
    let mut stack = vec![SignedPermutation::identity(w.n())];
    while let Some(v) = stack.pop() {
        if !seen.insert(v.clone()) {
            continue;
        }
        for a in 0..w.n() {
            if v.has_descent(a) {
                continue;
            }
            let next = v.times_generator(a);
            if w.has_prefix(&next) {
                stack.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// `F_w(x, x') = sum F_u(x) F_v(x')` over reduced factorizations `w = u v`.
pub fn stanley_coproduct(w: &SignedPermutation, m: usize, m_prime: usize) -> Result<PolyIdentity> {
    let both = Vars::xs(m + m_prime);
    let mut rhs = Poly::zero(both);
    for u in reduced_prefixes(w) {
        let v = u.inverse().compose(w);
        let left = stanley_c(&u, m).embed(both, 0)?;
        let right = stanley_c(&v, m_prime).embed(both, m)?;
        rhs.add_assign(&left.mul(&right));
    }
    Ok(PolyIdentity::new(format!("coproduct of F_[{w}]"), stanley_c(w, m + m_prime), rhs))
}
