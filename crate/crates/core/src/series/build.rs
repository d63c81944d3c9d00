//! Builders for the named generating functions, in both univariate and
//! bivariate form, plus the Narayana closed form, the Schroeder-number
//! relation for the skeleton series, and the wreath fixed-point solver.

use std::str::FromStr;

use num::traits::Zero;

use super::equations;
use crate::{q_int, Error, QBivariate, QSeries, Result, Z};

/// Default truncation order used by the command-line surface.
pub const DEFAULT_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// Skeletons: by maxima (univariate) or maxima/marked cells (bivariate).
    S,
    /// All 321-avoiders: by length, or maxima/others.
    A,
    /// All 321-avoiders by length and number of maxima.
    AAm,
    /// Plus-irreducible 321-avoiders.
    APlusIrr,
    /// Minus-irreducible 321-avoiders.
    AMinusIrr,
    /// Nonempty plus-indecomposable 321-avoiders.
    APlusInd,
    /// Nonempty plus-indecomposable skeletons.
    SPlusInd,
    /// Absolutely irreducible 321-avoiders (with the empty one, 1 and 12
    /// added back in).
    AAbsIrr,
    /// The fractal closure class: 321-avoiding block structure all the way
    /// down. Univariate only.
    F,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 9] = [
        SeriesKind::S,
        SeriesKind::A,
        SeriesKind::AAm,
        SeriesKind::APlusIrr,
        SeriesKind::AMinusIrr,
        SeriesKind::APlusInd,
        SeriesKind::SPlusInd,
        SeriesKind::AAbsIrr,
        SeriesKind::F,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::S => "s",
            SeriesKind::A => "a",
            SeriesKind::AAm => "a-am",
            SeriesKind::APlusIrr => "a-plus-irr",
            SeriesKind::AMinusIrr => "a-minus-irr",
            SeriesKind::APlusInd => "a-plus-ind",
            SeriesKind::SPlusInd => "s-plus-ind",
            SeriesKind::AAbsIrr => "a-abs-irr",
            SeriesKind::F => "f",
        }
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase().replace('_', "-");
        SeriesKind::ALL
            .into_iter()
            .find(|k| k.name() == lower)
            .ok_or_else(|| {
                let names: Vec<&str> = SeriesKind::ALL.iter().map(|k| k.name()).collect();
                Error::LimitExceeded(format!(
                    "unknown series kind {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

fn one_plus_x_sq(order: usize) -> QSeries {
    QSeries::from_coeffs(vec![q_int(1), q_int(1), q_int(1)], order)
}

/// Build a univariate series. The A-family counts by total length; S by
/// number of maxima; `SPlusInd` by maxima of the skeleton.
pub fn build_univariate(kind: SeriesKind, order: usize) -> Result<QSeries> {
    match kind {
        SeriesKind::S => equations::eq_s_univariate().solve_univariate(q_int(1), order),
        SeriesKind::A | SeriesKind::AAm => {
            equations::eq_catalan().solve_univariate(q_int(1), order)
        }
        SeriesKind::APlusIrr => {
            equations::eq_a_plus_irr_univariate().solve_univariate(q_int(1), order)
        }
        SeriesKind::AMinusIrr => {
            // unique factorization off the first minus-reducible pair:
            // A = A_minus_irr (1 + x^2 A) in the length grading
            let a = build_univariate(SeriesKind::A, order)?;
            let denom = QSeries::one(order).add(&QSeries::monomial(q_int(1), 2, order).mul(&a));
            a.div(&denom)
        }
        SeriesKind::APlusInd => {
            equations::eq_a_plus_ind_univariate().solve_univariate(q_int(0), order)
        }
        SeriesKind::SPlusInd => {
            let s = build_univariate(SeriesKind::S, order)?;
            s.sub(&QSeries::one(order)).div(&s)
        }
        SeriesKind::AAbsIrr => {
            let w = equations::eq_a_abs_irr_univariate().solve_univariate(q_int(0), order)?;
            Ok(w.add(&one_plus_x_sq(order)))
        }
        SeriesKind::F => equations::eq_frac2().solve_univariate(q_int(0), order),
    }
}

/// Build a bivariate series in the maxima/others grading (`AAm` is by
/// length/maxima). The fractal class has no bivariate form here.
pub fn build_bivariate(kind: SeriesKind, order: usize) -> Result<QBivariate> {
    match kind {
        SeriesKind::S => equations::eq_s_bivariate().solve_bivariate(q_int(1), order),
        SeriesKind::A => equations::eq_a_bivariate().solve_bivariate(q_int(1), order),
        SeriesKind::AAm => equations::eq_a_am().solve_bivariate(q_int(1), order),
        SeriesKind::APlusIrr => {
            equations::eq_a_plus_irr_bivariate().solve_bivariate(q_int(1), order)
        }
        SeriesKind::AMinusIrr => {
            let a = build_bivariate(SeriesKind::A, order)?;
            let xy = QBivariate::monomial(q_int(1), 1, 1, order);
            let denom = QBivariate::one(order).add(&xy.mul(&a));
            a.div(&denom)
        }
        SeriesKind::APlusInd => {
            equations::eq_a_plus_ind_bivariate().solve_bivariate(q_int(0), order)
        }
        SeriesKind::SPlusInd => equations::eq_s_plus_ind().solve_bivariate(q_int(0), order),
        SeriesKind::AAbsIrr => {
            let w = equations::eq_a_abs_irr_bivariate().solve_bivariate(q_int(0), order)?;
            let adjust = QBivariate::one(order)
                .add(&QBivariate::monomial(q_int(1), 1, 0, order))
                .add(&QBivariate::monomial(q_int(1), 2, 0, order));
            Ok(w.add(&adjust))
        }
        SeriesKind::F => Err(Error::LimitExceeded(
            "the fractal class series is univariate only".to_string(),
        )),
    }
}

fn binomial(n: usize, k: usize) -> Z {
    if k > n {
        return Z::zero();
    }
    let mut acc = Z::from(1);
    for t in 0..k.min(n - k) {
        acc = acc * Z::from(n - t) / Z::from(t + 1);
    }
    acc
}

/// The Narayana number (1/n) C(n, k) C(n, k-1): 321-avoiders of length n
/// with k left-to-right maxima.
pub fn narayana(n: usize, k: usize) -> Result<Z> {
    if n < 1 || k < 1 || k > n {
        return Err(Error::NarayanaRange { n, k });
    }
    let prod = binomial(n, k) * binomial(n, k - 1);
    let (q, r) = num::Integer::div_rem(&prod, &Z::from(n));
    assert!(r.is_zero(), "Narayana product is always divisible by n");
    Ok(q)
}

/// Verify [x^n] S = 2^(n+1) * s(n-1) for 2 <= n <= order, where s is the
/// little Schroeder sequence 1, 1, 3, 11, 45, ... computed from its own
/// quadratic, together with the initial terms 1 and 2x.
pub fn schroder_check(order: usize) -> Result<bool> {
    if order > 20 {
        return Err(Error::LimitExceeded(
            "schroder check is capped at order 20".to_string(),
        ));
    }
    let s = build_univariate(SeriesKind::S, order)?;
    let schroder = equations::eq_little_schroder().solve_univariate(q_int(1), order)?;
    if s.coeff(0) != &q_int(1) {
        return Ok(false);
    }
    if order >= 1 && s.coeff(1) != &q_int(2) {
        return Ok(false);
    }
    let mut power = q_int(8); // 2^(n+1) at n = 2
    for n in 2..=order {
        if &power.clone() * schroder.coeff(n - 1) != *s.coeff(n) {
            return Ok(false);
        }
        power *= q_int(2);
    }
    Ok(true)
}

/// Solve the fixed-point system for a class closed under inflation:
///   F  = x + F+ F + F- F + G(F)
///   F+ = x + F- F + G(F)
///   F- = x + F+ F + G(F)
/// where G is the generating function of the allowed simple quotients
/// (absolutely irreducible, length >= 4). Iterates in the coefficient
/// filtration; each pass determines at least one further coefficient.
pub fn solve_wreath_fixed_point(simple_gf: &QSeries, order: usize) -> Result<QSeries> {
    if simple_gf
        .coeffs()
        .iter()
        .take(4)
        .any(|c| !c.is_zero())
    {
        return Err(Error::LimitExceeded(
            "simple-quotient series must vanish below degree 4".to_string(),
        ));
    }
    let g = simple_gf.truncated(order);
    let x = QSeries::x(order);
    let mut f = QSeries::zero(order);
    let mut fp = QSeries::zero(order);
    let mut fm = QSeries::zero(order);
    for _ in 0..=order + 1 {
        let gf = g.compose(&f)?;
        let next_f = x.add(&fp.mul(&f)).add(&fm.mul(&f)).add(&gf);
        let next_fp = x.add(&fm.mul(&f)).add(&gf);
        let next_fm = x.add(&fp.mul(&f)).add(&gf);
        f = next_f;
        fp = next_fp;
        fm = next_fm;
    }
    // one more pass must leave everything fixed
    let gf = g.compose(&f)?;
    let check = x.add(&fp.mul(&f)).add(&fm.mul(&f)).add(&gf);
    if check != f {
        return Err(Error::LimitExceeded(
            "wreath fixed-point iteration did not converge".to_string(),
        ));
    }
    Ok(f)
}
