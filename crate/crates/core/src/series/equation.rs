//! Polynomial equations in one unknown series W with coefficients that are
//! exact polynomials in x (and optionally y), and their unique power-series
//! solutions by Newton iteration in the adic filtration.

use num::traits::FromPrimitive;

use super::bivariate::BivariateSeries;
use super::poly::Poly;
use super::{Coeff, TruncatedSeries};
use crate::{Error, Result};

/// A small exact polynomial in x and y.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly2<C> {
    /// rows[i][j] = coefficient of x^i y^j
    rows: Vec<Vec<C>>,
}

impl<C: Coeff> Poly2<C> {
    pub fn zero() -> Self {
        Self { rows: Vec::new() }
    }

    /// Build from (x-degree, y-degree, integer coefficient) terms.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self
    where
        C: FromPrimitive,
    {
        let mut rows: Vec<Vec<C>> = Vec::new();
        for &(i, j, c) in terms {
            while rows.len() <= i {
                rows.push(Vec::new());
            }
            while rows[i].len() <= j {
                rows[i].push(C::zero());
            }
            rows[i][j] = rows[i][j].clone() + C::from_i64(c).expect("integer coefficient");
        }
        Self { rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|c| c.is_zero()))
    }

    fn y_degree(&self) -> usize {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .rev()
                    .find(|(_, c)| !c.is_zero())
                    .map_or(0, |(j, _)| j)
            })
            .max()
            .unwrap_or(0)
    }

    pub fn is_univariate_in_x(&self) -> bool {
        self.y_degree() == 0
    }

    fn scale_int(&self, k: i64) -> Self
    where
        C: FromPrimitive,
    {
        let f = C::from_i64(k).expect("integer scale");
        Self {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c.clone() * f.clone()).collect())
                .collect(),
        }
    }

    fn to_x_poly(&self) -> Result<Poly<C>> {
        if !self.is_univariate_in_x() {
            return Err(Error::NotUnivariate);
        }
        Ok(Poly::new(
            self.rows
                .iter()
                .map(|r| r.first().cloned().unwrap_or_else(C::zero))
                .collect(),
        ))
    }

    fn to_series(&self, order: usize) -> Result<TruncatedSeries<C>> {
        let p = self.to_x_poly()?;
        Ok(TruncatedSeries::from_coeffs(p.coeffs().to_vec(), order))
    }

    fn to_bivariate(&self, order: usize) -> BivariateSeries<C> {
        let mut out = BivariateSeries::zero(order);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() && i + j <= order {
                    out = out.add(&BivariateSeries::monomial(c.clone(), i, j, order));
                }
            }
        }
        out
    }

    /// Evaluate at exact scalar arguments.
    pub fn eval(&self, x: &C, y: &C) -> C {
        let mut acc = C::zero();
        for row in self.rows.iter().rev() {
            let mut racc = C::zero();
            for c in row.iter().rev() {
                racc = racc * y.clone() + c.clone();
            }
            acc = acc * x.clone() + racc;
        }
        acc
    }
}

/// A polynomial in the unknown W: sum over k of coeff[k] * W^k, where each
/// coeff[k] is an exact polynomial in x (and optionally y). The equation is
/// the statement "this polynomial evaluates to the zero series".
#[derive(Clone, Debug)]
pub struct AlgebraicEquation<C> {
    name: String,
    w_coeffs: Vec<Poly2<C>>,
}

impl<C: Coeff + FromPrimitive> AlgebraicEquation<C> {
    /// Build from a table of (w-degree, x-degree, y-degree, coefficient).
    pub fn from_terms(name: &str, terms: &[(usize, usize, usize, i64)]) -> Self {
        let w_deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut w_coeffs = Vec::with_capacity(w_deg + 1);
        for k in 0..=w_deg {
            let row: Vec<(usize, usize, i64)> = terms
                .iter()
                .filter(|t| t.0 == k)
                .map(|&(_, i, j, c)| (i, j, c))
                .collect();
            w_coeffs.push(Poly2::from_terms(&row));
        }
        Self {
            name: name.to_string(),
            w_coeffs,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn w_degree(&self) -> usize {
        self.w_coeffs.len() - 1
    }

    pub fn is_univariate_in_x(&self) -> bool {
        self.w_coeffs.iter().all(|c| c.is_univariate_in_x())
    }

    /// Formal derivative with respect to W.
    pub fn w_derivative(&self) -> Self {
        let w_coeffs = self
            .w_coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale_int(k as i64))
            .collect();
        Self {
            name: format!("d/dW {}", self.name),
            w_coeffs,
        }
    }

    /// The W-coefficients as polynomials in x (fails on bivariate equations).
    pub fn univariate_w_polys(&self) -> Result<Vec<Poly<C>>> {
        self.w_coeffs.iter().map(|c| c.to_x_poly()).collect()
    }

    /// Substitute a univariate series for W.
    pub fn eval_series(&self, w: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
        let order = w.order();
        let mut acc = TruncatedSeries::zero(order);
        for c in self.w_coeffs.iter().rev() {
            acc = acc.mul(w).add(&c.to_series(order)?);
        }
        Ok(acc)
    }

    /// Substitute a bivariate series for W.
    pub fn eval_bivariate(&self, w: &BivariateSeries<C>) -> BivariateSeries<C> {
        let order = w.order();
        let mut acc = BivariateSeries::zero(order);
        for c in self.w_coeffs.iter().rev() {
            acc = acc.mul(w).add(&c.to_bivariate(order));
        }
        acc
    }

    fn check_seed(&self, seed: &C) -> Result<()> {
        let zero = C::zero();
        let at_origin = self
            .w_coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * seed.clone() + c.eval(&zero, &zero));
        if !at_origin.is_zero() {
            return Err(Error::InconsistentSeed(format!("{seed:?}")));
        }
        let deriv = self.w_derivative();
        let d_at_origin = deriv
            .w_coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * seed.clone() + c.eval(&zero, &zero));
        if d_at_origin.is_zero() {
            return Err(Error::SingularBranch);
        }
        Ok(())
    }

    /// The unique series solution with the given constant term, to order N.
    /// Newton iteration doubles the number of correct coefficients per step;
    /// the residual is checked before returning.
    pub fn solve_univariate(&self, seed: C, order: usize) -> Result<TruncatedSeries<C>> {
        self.check_seed(&seed)?;
        let deriv = self.w_derivative();
        let mut w = TruncatedSeries::constant(seed, order);
        let mut correct = 1usize;
        while correct <= order {
            let value = self.eval_series(&w)?;
            let slope = deriv.eval_series(&w)?;
            w = w.sub(&value.div(&slope)?);
            correct *= 2;
        }
        let residual = self.eval_series(&w)?;
        assert!(
            residual.is_zero(),
            "{}: nonzero residual after solving",
            self.name
        );
        Ok(w)
    }

    /// Bivariate counterpart of `solve_univariate`, in the total-degree
    /// filtration.
    pub fn solve_bivariate(&self, seed: C, order: usize) -> Result<BivariateSeries<C>> {
        self.check_seed(&seed)?;
        let deriv = self.w_derivative();
        let mut w = BivariateSeries::constant(seed, order);
        let mut correct = 1usize;
        while correct <= order {
            let value = self.eval_bivariate(&w);
            let slope = deriv.eval_bivariate(&w);
            w = w.sub(&value.div(&slope)?);
            correct *= 2;
        }
        let residual = self.eval_bivariate(&w);
        assert!(
            residual.is_zero(),
            "{}: nonzero residual after solving",
            self.name
        );
        Ok(w)
    }
}
