//! Coefficients of products of power series in an auxiliary variable `z`.
//!
//! A series is stored as the vector of its `z^r` coefficients, truncated at a
//! cap.

use crate::element::RingElement;
use crate::error::{Error, Result};
use crate::poly::{Poly, Vars};
use num_bigint::BigInt;

/// Coefficients of `z^0..=z^cap` in the product of the given series.
pub fn series_coefficients(factors: &[Vec<Poly>], vars: Vars, cap: usize) -> Vec<Poly> {
    let mut acc: Vec<Poly> = vec![Poly::zero(vars); cap + 1];
    acc[0] = Poly::one(vars);
    for f in factors {
        let mut next = vec![Poly::zero(vars); cap + 1];
        for (a, pa) in acc.iter().enumerate() {
            if pa.is_zero() {
                continue;
            }
            for (b, pb) in f.iter().enumerate().take(cap + 1 - a) {
                if pb.is_zero() {
                    continue;
                }
                next[a + b].add_assign(&pa.mul(pb));
            }
        }
        acc = next;
    }
    acc
}

/// Series of `(1 + c_plus * x z) / (1 - x z)` style factors:
/// coefficient `1` at `z^0` and `lead * x^n` for `n >= 1`.
fn geometric_factor(vars: Vars, var: &Poly, lead: &Poly, cap: usize) -> Vec<Poly> {
    let mut out = vec![Poly::one(vars)];
    let mut power = Poly::one(vars);
    for _ in 1..=cap {
        power = power.mul(var);
        out.push(lead.mul(&power));
    }
    out
}

/// `q_r(x; t)` for `r <= cap`: coefficients of `prod_i (1 - x_i t z)/(1 - x_i z)`.
/// `vars` must contain `t`.
pub fn q_series(vars: Vars, cap: usize) -> Vec<Poly> {
    let lead = Poly::one(vars).sub(&Poly::t(vars));
    let factors: Vec<Vec<Poly>> = (1..=vars.x).map(|i| geometric_factor(vars, &Poly::x(vars, i), &lead, cap)).collect();
    series_coefficients(&factors, vars, cap)
}

/// Complete homogeneous symmetric polynomials in the `x` variables.
pub fn h_series(vars: Vars, cap: usize) -> Vec<Poly> {
    let one = Poly::one(vars);
    let factors: Vec<Vec<Poly>> = (1..=vars.x).map(|i| geometric_factor(vars, &Poly::x(vars, i), &one, cap)).collect();
    series_coefficients(&factors, vars, cap)
}

/// Elementary symmetric polynomials in the `x` variables.
pub fn e_series(vars: Vars, cap: usize) -> Vec<Poly> {
    let factors: Vec<Vec<Poly>> = (1..=vars.x).map(|i| vec![Poly::one(vars), Poly::x(vars, i)]).collect();
    series_coefficients(&factors, vars, cap)
}

/// Elementary symmetric polynomials in the `y` variables.
pub fn e_series_y(vars: Vars, cap: usize) -> Vec<Poly> {
    let factors: Vec<Vec<Poly>> = (1..=vars.y).map(|j| vec![Poly::one(vars), Poly::y(vars, j)]).collect();
    series_coefficients(&factors, vars, cap)
}

/// `theta_r(x; y)`: coefficients of
/// `prod_i (1 + x_i z)/(1 - x_i z) * prod_j (1 + y_j z)`.
pub fn theta_series(vars: Vars, cap: usize) -> Vec<Poly> {
    let two = Poly::constant(vars, BigInt::from(2));
    let mut factors: Vec<Vec<Poly>> = (1..=vars.x).map(|i| geometric_factor(vars, &Poly::x(vars, i), &two, cap)).collect();
    factors.extend((1..=vars.y).map(|j| vec![Poly::one(vars), Poly::y(vars, j)]));
    series_coefficients(&factors, vars, cap)
}

/// Image of a monomial-basis element under `g_r -> gens[r]`. Coefficients
/// involving `t` need `t` among `vars`.
pub fn substitute(e: &RingElement, gens: &[Poly], vars: Vars) -> Result<Poly> {
    let mut out = Poly::zero(vars);
    for (idx, c) in e.terms() {
        let coeff = if c.is_constant() {
            Poly::constant(vars, c.constant_term())
        } else if vars.t {
            Poly::from_tpoly(vars, c)
        } else {
            return Err(Error::Invalid(format!("coefficient {c} needs the variable t")));
        };
        let mut term = coeff;
        for &part in idx.parts() {
            let g = gens.get(part).ok_or_else(|| Error::Invalid(format!("no generator of degree {part}")))?;
            term = term.mul(g);
            if term.is_zero() {
                break;
            }
        }
        out.add_assign(&term);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_variable_q_is_one_minus_t_times_power() {
        let v = Vars::new(1, 0, true);
        let q = q_series(v, 3);
        for (r, qr) in q.iter().enumerate().skip(1) {
            let expect = Poly::x_pow(v, 1, r as u32).mul(&Poly::one(v).sub(&Poly::t(v)));
            assert_eq!(qr, &expect);
        }
    }

    #[test]
    fn h_and_e_in_two_variables() {
        let v = Vars::xs(2);
        assert_eq!(h_series(v, 2)[2].to_string(), "x1^2 + x1*x2 + x2^2");
        let e = e_series(v, 3);
        assert_eq!(e[2].to_string(), "x1*x2");
        assert!(e[3].is_zero());
    }

    #[test]
    fn theta_low_degrees() {
        let v = Vars::new(1, 1, false);
        let th = theta_series(v, 2);
        assert_eq!(th[1].to_string(), "2*x1 + y1");
        assert_eq!(th[2].to_string(), "2*x1^2 + 2*x1*y1");
    }
}
