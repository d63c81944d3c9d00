//! Bivariate truncated power series with total-degree truncation: the
//! coefficient of x^i y^j is stored iff i + j <= N. Represented as a series
//! in x whose coefficients are polynomials in y.

use super::{Coeff, TruncatedSeries};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariateSeries<C> {
    /// rows[i][j] = coefficient of x^i y^j; row i has length N + 1 - i.
    rows: Vec<Vec<C>>,
}

fn row_mul<C: Coeff>(a: &[C], b: &[C], cap: usize) -> Vec<C> {
    let mut out = vec![C::zero(); cap + 1];
    for (p, av) in a.iter().enumerate() {
        if av.is_zero() || p > cap {
            continue;
        }
        for (q, bv) in b.iter().enumerate().take(cap + 1 - p) {
            if bv.is_zero() {
                continue;
            }
            out[p + q] = out[p + q].clone() + av.clone() * bv.clone();
        }
    }
    out
}

fn row_div<C: Coeff>(num: &[C], den: &[C], cap: usize) -> Vec<C> {
    debug_assert!(!den[0].is_zero());
    let mut out: Vec<C> = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let mut acc = num.get(n).cloned().unwrap_or_else(C::zero);
        for k in 0..n {
            let d = den.get(n - k).cloned().unwrap_or_else(C::zero);
            acc = acc - out[k].clone() * d;
        }
        out.push(acc / den[0].clone());
    }
    out
}

impl<C: Coeff> BivariateSeries<C> {
    pub fn zero(order: usize) -> Self {
        Self {
            rows: (0..=order).map(|i| vec![C::zero(); order + 1 - i]).collect(),
        }
    }

    pub fn constant(value: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.rows[0][0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// The series c * x^i y^j.
    pub fn monomial(value: C, i: usize, j: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if i + j <= order {
            s.rows[i][j] = value;
        }
        s
    }

    /// Lift a univariate series in x.
    pub fn from_x_series(s: &TruncatedSeries<C>, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (i, c) in s.coeffs().iter().enumerate().take(order + 1) {
            out.rows[i][0] = c.clone();
        }
        out
    }

    /// Lift a univariate series in y.
    pub fn from_y_series(s: &TruncatedSeries<C>, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (j, c) in s.coeffs().iter().enumerate().take(order + 1) {
            out.rows[0][j] = c.clone();
        }
        out
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn coeff(&self, i: usize, j: usize) -> &C {
        &self.rows[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|row| row.iter().all(|c| c.is_zero()))
    }

    pub fn truncated(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            rows: (0..=order)
                .map(|i| self.rows[i][..=order - i].to_vec())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            for j in 0..=order - i {
                out.rows[i][j] = self.rows[i][j].clone() + other.rows[i][j].clone();
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            for j in 0..=order - i {
                out.rows[i][j] = self.rows[i][j].clone() - other.rows[i][j].clone();
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|c| -c.clone()).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.rows[i].iter().all(|c| c.is_zero()) {
                continue;
            }
            for k in 0..=order - i {
                let part = row_mul(&self.rows[i], &other.rows[k], order - i - k);
                let target = &mut out.rows[i + k];
                for (j, v) in part.into_iter().enumerate() {
                    target[j] = target[j].clone() + v;
                }
            }
        }
        out
    }

    /// Division; the divisor needs a nonzero coefficient at (0, 0).
    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.rows[0][0].is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let order = self.order().min(other.order());
        let mut rows: Vec<Vec<C>> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let cap = order - i;
            let mut acc: Vec<C> = self.rows[i][..=cap].to_vec();
            for k in 0..i {
                let part = row_mul(&rows[k], &other.rows[i - k], cap);
                for (j, v) in part.into_iter().enumerate() {
                    acc[j] = acc[j].clone() - v;
                }
            }
            rows.push(row_div(&acc, &other.rows[0], cap));
        }
        Ok(Self { rows })
    }

    /// Substitute a series t(y) with t(0) = 0 for y.
    pub fn substitute_y(&self, t: &TruncatedSeries<C>) -> Result<Self> {
        if !t.coeff(0).is_zero() {
            return Err(Error::ComposeConstantTerm);
        }
        let order = self.order();
        let mut out = Self::zero(order);
        for i in 0..=order {
            let cap = order - i;
            // Horner in y on this row
            let mut acc = vec![C::zero(); cap + 1];
            for j in (0..=cap).rev() {
                acc = row_mul(&acc, t.coeffs(), cap);
                acc[0] = acc[0].clone() + self.rows[i][j].clone();
            }
            out.rows[i] = acc;
        }
        Ok(out)
    }

    /// Substitute a series t(x) with t(0) = 0 for x.
    pub fn substitute_x(&self, t: &TruncatedSeries<C>) -> Result<Self> {
        if !t.coeff(0).is_zero() {
            return Err(Error::ComposeConstantTerm);
        }
        let order = self.order();
        let tb = Self::from_x_series(&t.truncated(order), order);
        let mut out = Self::zero(order);
        // Horner over the x-rows
        for i in (0..=order).rev() {
            out = out.mul(&tb);
            for j in 0..=order - i {
                out.rows[0][j] = out.rows[0][j].clone() + self.rows[i][j].clone();
            }
        }
        Ok(out)
    }

    /// Sum each x-row over y (evaluate y = 1 on the stored coefficients).
    pub fn eval_y_one(&self) -> TruncatedSeries<C> {
        let coeffs = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .fold(C::zero(), |acc, c| acc + c.clone())
            })
            .collect();
        TruncatedSeries::from_coeffs(coeffs, self.order())
    }

    /// Collapse to the total-degree grading: coefficient of x^n becomes the
    /// sum of all (i, j) with i + j = n (evaluate y = x).
    pub fn collapse_total_degree(&self) -> TruncatedSeries<C> {
        let order = self.order();
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + c.clone();
            }
        }
        TruncatedSeries::from_coeffs(coeffs, order)
    }

    /// Regrade (x, y) -> (xy, x): the image of x^i y^j is x^(i+j) y^i.
    /// Terms pushed past the truncation order are dropped.
    pub fn regrade_x_to_xy_y_to_x(&self) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if i + j + i <= order {
                    out.rows[i + j][i] = out.rows[i + j][i].clone() + c.clone();
                }
            }
        }
        out
    }

    /// All stored coefficients as (i, j, value) triples, zeros skipped.
    pub fn terms(&self) -> Vec<(usize, usize, C)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::{q_int, QBivariate, QSeries};

    #[test]
    fn product_respects_total_degree() {
        // (1 + xy)^2 at order 3: 1 + 2xy; the x^2 y^2 term exceeds the order
        let a = QBivariate::one(3).add(&QBivariate::monomial(q_int(1), 1, 1, 3));
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(0, 0), &q_int(1));
        assert_eq!(sq.coeff(1, 1), &q_int(2));
        assert_eq!(sq.terms().len(), 2);
    }

    #[test]
    fn division_roundtrip() {
        let a = QBivariate::one(5)
            .add(&QBivariate::monomial(q_int(3), 1, 0, 5))
            .add(&QBivariate::monomial(q_int(-2), 1, 2, 5));
        let b = QBivariate::one(5).sub(&QBivariate::monomial(q_int(1), 0, 1, 5));
        let q = a.div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
        let x = QBivariate::monomial(q_int(1), 1, 0, 5);
        assert!(a.div(&x).is_err());
    }

    #[test]
    fn substitution_in_y() {
        // substitute y -> y/(1-y) into 1 + xy: 1 + x(y + y^2 + ...)
        let s = QBivariate::one(4).add(&QBivariate::monomial(q_int(1), 1, 1, 4));
        let t = QSeries::x(4)
            .div(&QSeries::one(4).sub(&QSeries::x(4)))
            .unwrap();
        let out = s.substitute_y(&t).unwrap();
        assert_eq!(out.coeff(1, 1), &q_int(1));
        assert_eq!(out.coeff(1, 2), &q_int(1));
        assert_eq!(out.coeff(1, 3), &q_int(1));
        assert_eq!(out.coeff(0, 0), &q_int(1));
    }

    #[test]
    fn collapse_and_regrade() {
        let s = QBivariate::monomial(q_int(1), 1, 2, 6); // x y^2
        let uni = s.collapse_total_degree();
        assert_eq!(uni.coeff(3), &q_int(1));
        let re = s.regrade_x_to_xy_y_to_x(); // -> x^3 y^1
        assert_eq!(re.coeff(3, 1), &q_int(1));
    }
}
