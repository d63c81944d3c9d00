//! Growth constants: the reciprocal of the radius of convergence of an
//! algebraic series, located at the least positive root of the discriminant
//! of its defining equation.

use num::traits::{Signed, ToPrimitive, Zero};

use super::poly::resultant_w;
use crate::{q_int, Error, QEquation, QPoly, Result, Q, Z};

/// Result of a growth-constant computation.
#[derive(Clone, Debug)]
pub struct GrowthResult {
    /// Reciprocal of the radius of convergence.
    pub growth: f64,
    /// The least positive real root of the discriminant.
    pub radius: f64,
    /// Exact discriminant of the equation with respect to the unknown.
    pub discriminant: QPoly,
}

/// Discriminant with respect to W: (-1)^(d(d-1)/2) res(P, dP/dW) / lc(P).
pub fn discriminant_w(eq: &QEquation) -> Result<QPoly> {
    let polys = eq.univariate_w_polys()?;
    let d = polys.len() - 1;
    let dpolys: Vec<QPoly> = polys
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, p)| p.scale(&q_int(k as i64)))
        .collect();
    let res = resultant_w(&polys, &dpolys);
    let lead = polys.last().unwrap();
    let quotient = res.exact_div(lead);
    if (d * (d - 1) / 2) % 2 == 1 {
        Ok(quotient.neg())
    } else {
        Ok(quotient)
    }
}

fn sign_at(p: &QPoly, at: &Q) -> i8 {
    let v = p.eval(at);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Locate the least positive real root of `p` by a sign-change scan over
/// (0, 2] followed by exact bisection to an interval narrower than 1e-9.
/// Roots are made simple first by passing to the squarefree part.
fn least_positive_root(p: &QPoly) -> Result<Q> {
    let (reduced, _) = p.strip_x_power();
    if reduced.degree().unwrap_or(0) == 0 {
        return Err(Error::NoPositiveRoot);
    }
    let sf = reduced.squarefree_part();
    let step = Q::new(Z::from(1), Z::from(1024));
    let mut prev_sign = sign_at(&sf, &Q::zero());
    if prev_sign == 0 {
        // squarefree part still vanishing at 0 cannot happen after stripping
        return Err(Error::NoPositiveRoot);
    }
    let mut t = Q::zero();
    for _ in 0..2048 {
        let next = t.clone() + step.clone();
        let s = sign_at(&sf, &next);
        if s == 0 {
            return Ok(next);
        }
        if s != prev_sign {
            // bisect (t, next)
            let tolerance = Q::new(Z::from(1), Z::from(1_000_000_000u64));
            let mut lo = t;
            let mut hi = next;
            while hi.clone() - lo.clone() > tolerance {
                let mid = (lo.clone() + hi.clone()) / q_int(2);
                let ms = sign_at(&sf, &mid);
                if ms == 0 {
                    return Ok(mid);
                }
                if ms == prev_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Ok((lo + hi) / q_int(2));
        }
        prev_sign = s;
        t = next;
    }
    Err(Error::NoPositiveRoot)
}

/// Growth constant of the series defined by a univariate equation: the
/// reciprocal of the least positive real root of its discriminant.
pub fn growth_constant(eq: &QEquation) -> Result<GrowthResult> {
    let discriminant = discriminant_w(eq)?;
    let root = least_positive_root(&discriminant)?;
    let radius = root.to_f64().ok_or(Error::NoPositiveRoot)?;
    Ok(GrowthResult {
        growth: 1.0 / radius,
        radius,
        discriminant,
    })
}
