//! Exact truncated power series, algebraic equations and their series
//! solutions, and builders for the named generating functions.
//!
//! The arithmetic core is generic over the coefficient scalar; the crate
//! root exports exact-rational aliases (`QSeries`, `QBivariate`, `QPoly`),
//! which is what everything counting-related uses.

pub mod bivariate;
pub mod build;
pub mod equation;
pub mod equations;
pub mod growth;
pub mod poly;

use std::fmt;
use std::ops::{Div, Neg, Sub};

use num::traits::{One, Zero};

use crate::{Error, Result};

/// Scalar bound for series and polynomial coefficients: a commutative ring
/// with exact division where it is used (rationals, floats).
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Div<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = T> + Sub<Output = T> + Div<Output = T>
{
}

/// A power series truncated at a fixed order N: exactly the coefficients of
/// x^0..x^N are stored. Arithmetic never extends past the truncation order;
/// operations on mismatched orders truncate to the smaller one.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn constant(value: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// The series c * x^k.
    pub fn monomial(value: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = value;
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    /// Build from low-to-high coefficients, padding or truncating to `order`.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Restrict to a (smaller or equal) truncation order.
    pub fn truncated(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Zero out every coefficient below `degree`.
    pub fn without_terms_below(&self, degree: usize) -> Self {
        let mut out = self.clone();
        for k in 0..degree.min(out.coeffs.len()) {
            out.coeffs[k] = C::zero();
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].clone() + other.coeffs[k].clone())
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].clone() - other.coeffs[k].clone())
            .collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs }
    }

    /// Series division; the divisor needs a nonzero constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.coeffs[0].is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let order = self.order().min(other.order());
        let mut coeffs: Vec<C> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 0..n {
                acc = acc - coeffs[k].clone() * other.coeffs[n - k].clone();
            }
            coeffs.push(acc / other.coeffs[0].clone());
        }
        Ok(Self { coeffs })
    }

    /// Substitute `inner` (constant term zero) for the variable.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ComposeConstantTerm);
        }
        let order = self.order().min(inner.order());
        let mut result = Self::zero(order);
        let inner = inner.truncated(order);
        for k in (0..=order).rev() {
            result = result.mul(&inner);
            result.coeffs[0] = result.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(result)
    }

    /// Square root by Newton iteration; needs constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let order = self.order();
        let two = C::one() + C::one();
        let half = C::one() / two;
        let mut r = Self::one(order);
        let mut correct = 1usize;
        while correct <= order {
            let q = self.div(&r)?;
            r = r.add(&q).scale(&half);
            correct *= 2;
        }
        debug_assert!(r.mul(&r) == self.truncated(order));
        Ok(r)
    }

    pub fn scale(&self, factor: &C) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect(),
        }
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for TruncatedSeries<C> {
    /// Nonzero terms as "c0 + c1*x + c2*x^2 + ...".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries{:?}", self.coeffs)
    }
}
