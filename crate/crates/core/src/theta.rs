//! Theta polynomials `Theta_lambda(x; y)` in finitely many variables, the skew
//! functions `F^(k)_{lambda/mu}(x)`, Schur Q-functions and Q-expansions.

use crate::combinatorics::kstrip::n_strip;
use crate::combinatorics::tableaux::{enumerate_k_bitableaux, row_strict_fillings, StripLattice};
use crate::element::Basis;
use crate::error::{Error, Result};
use crate::pairs::cset;
use crate::partition::{partitions, strict_partitions, subpartitions, IntegerVector, KStrict, Partition};
use crate::poly::{Poly, Vars};
use crate::raising::{expand_raising, Factor, FactorSpec};
use crate::report::PolyIdentity;
use crate::series::{e_series_y, substitute, theta_series};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaMode {
    Raising,
    Tableau,
    Reduction,
}

/// `R^lambda` applied to `w_lambda`, left unstraightened.
fn raising_monomials(lambda: &Partition, k: usize) -> crate::element::RingElement {
    let spec = FactorSpec::split(lambda.len(), &cset(lambda, k), Factor::OneMinusROverOnePlusR, Factor::OneMinusR);
    expand_raising(&spec, &IntegerVector::from(lambda), Basis::WMonomial).expect("t-free factors with matching length")
}

/// `Theta_lambda(x_1..x_m; y_1..y_k)` in `Vars::new(m, k, false)`.
pub fn theta(lambda: &KStrict, m: usize, mode: ThetaMode) -> Poly {
    let k = lambda.k();
    let lam = lambda.partition();
    let vars = Vars::new(m, k, false);
    match mode {
        ThetaMode::Raising => {
            let gens = theta_series(vars, lam.size());
            substitute(&raising_monomials(lam, k), &gens, vars).expect("generators cover every part")
        }
        ThetaMode::Tableau => {
            let mut out = Poly::zero(vars);
            for u in enumerate_k_bitableaux(lambda, m).expect("shape is k-strict") {
                let mut exps = vec![0u32; vars.len()];
                for (i, c) in u.unmarked.content().iter().enumerate() {
                    exps[vars.x_pos(i + 1)] = *c as u32;
                }
                for (j, c) in u.marked_content(k).iter().enumerate() {
                    exps[vars.y_pos(j + 1)] = *c as u32;
                }
                out.add_term(exps, BigInt::from(1) << u.n());
            }
            out
        }
        ThetaMode::Reduction => {
            let mut memo = HashMap::new();
            reduce(lam, k, 1, vars, &mut memo)
        }
    }
}

/// `Theta_mu(x_i..x_m; y)`, peeling off `x_i` with a k-horizontal strip.
fn reduce(mu: &Partition, k: usize, i: usize, vars: Vars, memo: &mut HashMap<(Partition, usize), Poly>) -> Poly {
    if i > vars.x {
        return theta_at_zero(mu, k, vars);
    }
    if let Some(hit) = memo.get(&(mu.clone(), i)) {
        return hit.clone();
    }
    let mut acc = Poly::zero(vars);
    for nu in subpartitions(mu) {
        if !nu.is_k_strict(k) {
            continue;
        }
        let Some(n) = n_strip(mu, &nu, k) else { continue };
        let rest = reduce(&nu, k, i + 1, vars, memo);
        if rest.is_zero() {
            continue;
        }
        let lead = Poly::x_pow(vars, i, (mu.size() - nu.size()) as u32).scale(&(BigInt::from(1) << n));
        acc.add_assign(&lead.mul(&rest));
    }
    memo.insert((mu.clone(), i), acc.clone());
    acc
}

/// `Theta_mu(0; y) = R^mu e_mu(y)`.
pub fn theta_at_zero(mu: &Partition, k: usize, vars: Vars) -> Poly {
    let gens = e_series_y(vars, mu.size());
    substitute(&raising_monomials(mu, k), &gens, vars).expect("generators cover every part")
}

/// `s_{mu'}(y_1..y_j)` in `vars`, with `j = vars.y`.
pub fn schur_s(mu: &Partition, vars: Vars) -> Poly {
    let mut out = Poly::zero(vars);
    for filling in row_strict_fillings(mu, vars.y) {
        let mut exps = vec![0u32; vars.len()];
        for row in &filling {
            for &e in row {
                exps[vars.y_pos(e)] += 1;
            }
        }
        out.add_term(exps, BigInt::from(1));
    }
    out
}

/// `F^(k)_{lambda/mu}(x_1..x_m) = sum_T 2^{n(T)} x^T`.
pub fn skew_f(lambda: &KStrict, mu: &KStrict, m: usize) -> Result<Poly> {
    Ok(StripLattice::new(lambda, mu)?.skew_polynomial(Vars::xs(m)))
}

/// Coefficient of `x^content` in `F^(k)_{lambda/mu}`, for any number of variables.
pub fn skew_f_coefficient(lambda: &KStrict, mu: &KStrict, content: &[usize]) -> Result<BigInt> {
    Ok(StripLattice::new(lambda, mu)?.weighted_count(content))
}

fn strict(lambda: &Partition) -> Result<KStrict> {
    if !lambda.is_strict() {
        return Err(Error::NotKStrict { partition: lambda.to_string(), k: 0 });
    }
    KStrict::new(0, lambda.clone())
}

/// `Q_lambda(x_1..x_m)`.
pub fn schur_q(lambda: &Partition, m: usize) -> Result<Poly> {
    skew_f(&strict(lambda)?, &KStrict::new(0, Partition::empty())?, m)
}

/// `Q_{lambda/mu}(x_1..x_m)`.
pub fn skew_schur_q(lambda: &Partition, mu: &Partition, m: usize) -> Result<Poly> {
    skew_f(&strict(lambda)?, &strict(mu)?, m)
}

/// Expands a symmetric function of degree `d`, given through its monomial
/// coefficients `[x^nu]` for partitions `nu` of `d`, in Schur Q-functions.
/// Every partition coefficient is checked against the reconstruction.
pub fn q_expansion_by<F>(d: usize, mut coeff: F) -> Result<BTreeMap<Partition, BigInt>>
where
    F: FnMut(&Partition) -> Result<BigInt>,
{
    let mut basis: Vec<Partition> = strict_partitions(d);
    basis.sort_by(|a, b| b.cmp(a));
    let mut lattices: Vec<StripLattice> = Vec::new();
    let empty = KStrict::new(0, Partition::empty())?;
    for rho in &basis {
        lattices.push(StripLattice::new(&KStrict::new(0, rho.clone())?, &empty)?);
    }
    let mut out = BTreeMap::new();
    let mut found: Vec<(usize, BigInt)> = Vec::new();
    for (i, rho) in basis.iter().enumerate() {
        let mut rest = coeff(rho)?;
        for (j, c) in &found {
            rest -= c * lattices[*j].weighted_count(rho.parts());
        }
        let lead = BigInt::from(1) << rho.len();
        let (q, r) = rest.div_rem(&lead);
        if !r.is_zero() {
            return Err(Error::NotQExpandable(format!("coefficient at {rho} is not divisible by {lead}")));
        }
        if !q.is_zero() {
            found.push((i, q.clone()));
            out.insert(rho.clone(), q);
        }
    }
    for nu in partitions(d) {
        let mut total = BigInt::zero();
        for (j, c) in &found {
            total += c * lattices[*j].weighted_count(nu.parts());
        }
        if total != coeff(&nu)? {
            return Err(Error::NotQExpandable(format!("reconstruction differs at x^({nu})")));
        }
    }
    Ok(out)
}

/// Q-expansion of a symmetric polynomial in `m >= d` variables `x` (no `y`, no
/// `t`), homogeneous of degree `d`.
pub fn q_expansion(f: &Poly, d: usize) -> Result<BTreeMap<Partition, BigInt>> {
    let vars = f.vars();
    if vars.y > 0 || vars.t {
        return Err(Error::VarMismatch);
    }
    if vars.x < d {
        return Err(Error::TooFewVariables { degree: d, vars: vars.x });
    }
    if !f.is_symmetric_in_x() || f.terms().any(|(e, _)| e.iter().sum::<u32>() as usize != d) {
        return Err(Error::NotQExpandable(format!("not a symmetric form of degree {d}")));
    }
    q_expansion_by(d, |nu| {
        let mut e = vec![0u32; vars.x];
        for (i, &p) in nu.parts().iter().enumerate() {
            e[i] = p as u32;
        }
        Ok(f.coeff(&e))
    })
}

/// Q-expansion of `F^(k)_{lambda/mu}` in infinitely many variables, read from
/// tableau counts.
pub fn skew_f_q_expansion(lambda: &KStrict, mu: &KStrict) -> Result<BTreeMap<Partition, BigInt>> {
    let lattice = StripLattice::new(lambda, mu)?;
    let d = lambda.partition().size() - mu.partition().size();
    q_expansion_by(d, |nu| Ok(lattice.weighted_count(nu.parts())))
}

/// Whether every coefficient of a Q-expansion is nonnegative.
pub fn is_nonnegative(expansion: &BTreeMap<Partition, BigInt>) -> bool {
    expansion.values().all(|c| !c.is_negative())
}

/// The four coproduct identities for `lambda`, with `x = (x_1..x_m)` and
/// `x' = (x_{m+1}..x_{m+m'})`:
/// `Theta_lambda(x, x'; y) = sum_mu F_{lambda/mu}(x) Theta_mu(x'; y)`,
/// `Theta_lambda(x; y) = sum_mu F_{lambda/mu}(x) s_{mu'}(y)`,
/// `F_lambda(x, x') = sum_mu F_{lambda/mu}(x) F_mu(x')`, and for every `mu`,
/// `F_{lambda/mu}(x, x') = sum_nu F_{lambda/nu}(x) F_{nu/mu}(x')`.
pub fn master_identities(lambda: &KStrict, m: usize, m_prime: usize) -> Result<Vec<PolyIdentity>> {
    let k = lambda.k();
    let lam = lambda.partition();
    let both = Vars::new(m + m_prime, k, false);
    let xs_both = Vars::xs(m + m_prime);
    let single = Vars::new(m, k, false);
    let inner: Vec<KStrict> =
        subpartitions(lam).into_iter().filter(|q| q.is_k_strict(k)).map(|q| KStrict::new(k, q).expect("checked")).collect();
    let f_x: HashMap<&Partition, Poly> = inner.iter().map(|mu| Ok((mu.partition(), skew_f(lambda, mu, m)?))).collect::<Result<_>>()?;
    let empty = KStrict::new(k, Partition::empty())?;

    let mut out = Vec::new();

    let mut rhs = Poly::zero(both);
    for mu in &inner {
        let left = f_x[mu.partition()].embed(both, 0)?;
        let right = theta(mu, m_prime, ThetaMode::Reduction).embed(both, m)?;
        rhs.add_assign(&left.mul(&right));
    }
    out.push(PolyIdentity::new(
        format!("theta coproduct for {lam} (k={k})"),
        theta(lambda, m + m_prime, ThetaMode::Reduction),
        rhs,
    ));

    let mut rhs = Poly::zero(single);
    for mu in &inner {
        let s = schur_s(mu.partition(), single);
        if s.is_zero() {
            continue;
        }
        rhs.add_assign(&f_x[mu.partition()].embed(single, 0)?.mul(&s));
    }
    out.push(PolyIdentity::new(format!("theta as skew functions times Schur in y for {lam} (k={k})"), theta(lambda, m, ThetaMode::Reduction), rhs));

    let mut rhs = Poly::zero(xs_both);
    for mu in &inner {
        let right = skew_f(mu, &empty, m_prime)?.embed(xs_both, m)?;
        rhs.add_assign(&f_x[mu.partition()].embed(xs_both, 0)?.mul(&right));
    }
    out.push(PolyIdentity::new(format!("coproduct of F_{lam} (k={k})"), skew_f(lambda, &empty, m + m_prime)?, rhs));

    for mu in &inner {
        let mut rhs = Poly::zero(xs_both);
        for nu in &inner {
            if !nu.partition().contains(mu.partition()) {
                continue;
            }
            let right = skew_f(nu, mu, m_prime)?.embed(xs_both, m)?;
            rhs.add_assign(&f_x[nu.partition()].embed(xs_both, 0)?.mul(&right));
        }
        out.push(PolyIdentity::new(
            format!("coproduct of F_{lam}/{} (k={k})", mu.partition()),
            skew_f(lambda, mu, m + m_prime)?,
            rhs,
        ));
    }
    Ok(out)
}
