//! Dense univariate polynomials with exact coefficient arithmetic, plus the
//! resultant machinery (Sylvester determinant by fraction-free elimination)
//! used to locate the singularities of an algebraic generating function.

use super::Coeff;

/// Polynomial stored low-to-high with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn x() -> Self {
        Self::new(vec![C::zero(), C::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_coeff(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, factor: &C) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    /// Euclidean division over a field of coefficients.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return (Self::zero(), self.clone());
        }
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![C::zero(); self.coeffs.len() - dlen + 1];
        for k in (0..quo.len()).rev() {
            let q = rem[k + dlen - 1].clone() / lead.clone();
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].clone() - q.clone() * d.clone();
                }
            }
            quo[k] = q;
        }
        rem.truncate(dlen - 1);
        (Self::new(quo), Self::new(rem))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut k = C::zero();
        let coeffs = self.coeffs[1..]
            .iter()
            .map(|c| {
                k = k.clone() + C::one();
                c.clone() * k.clone()
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn eval(&self, at: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut f = a.clone();
        let mut g = b.clone();
        while !g.is_zero() {
            let (_, r) = f.div_rem(&g);
            f = g;
            g = r;
        }
        if f.is_zero() {
            return f;
        }
        let lead = f.leading_coeff();
        f.scale(&(C::one() / lead))
    }

    /// The product of the distinct irreducible factors: p / gcd(p, p').
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = Self::gcd(self, &self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.exact_div(&g)
    }

    /// Divide out the largest power of x; returns (reduced, multiplicity).
    pub fn strip_x_power(&self) -> (Self, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if k == 0 || self.is_zero() {
            return (self.clone(), 0);
        }
        (Self::new(self.coeffs[k..].to_vec()), k)
    }
}

/// Resultant with respect to W of two polynomials in W whose coefficients
/// are polynomials (in x): the determinant of their Sylvester matrix,
/// computed by fraction-free (Bareiss) elimination so every division is
/// exact in the coefficient ring.
pub fn resultant_w<C: Coeff>(p: &[Poly<C>], q: &[Poly<C>]) -> Poly<C> {
    let dp = p.len() - 1;
    let dq = q.len() - 1;
    assert!(dp >= 1 && dq >= 1, "resultant needs positive degrees in W");
    let k = dp + dq;
    let mut m: Vec<Vec<Poly<C>>> = vec![vec![Poly::zero(); k]; k];
    for row in 0..dq {
        for (t, c) in p.iter().rev().enumerate() {
            m[row][row + t] = c.clone();
        }
    }
    for row in 0..dp {
        for (t, c) in q.iter().rev().enumerate() {
            m[dq + row][row + t] = c.clone();
        }
    }

    let mut sign_flip = false;
    let mut prev = Poly::one();
    for col in 0..k - 1 {
        if m[col][col].is_zero() {
            match (col + 1..k).find(|&r| !m[r][col].is_zero()) {
                Some(r) => {
                    m.swap(col, r);
                    sign_flip = !sign_flip;
                }
                None => return Poly::zero(),
            }
        }
        for i in col + 1..k {
            for j in col + 1..k {
                let t = m[col][col].mul(&m[i][j]).sub(&m[i][col].mul(&m[col][j]));
                m[i][j] = t.exact_div(&prev);
            }
            m[i][col] = Poly::zero();
        }
        prev = m[col][col].clone();
    }
    let det = m[k - 1][k - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q_int, QPoly, Q};

    fn p(coeffs: &[i64]) -> QPoly {
        Poly::new(coeffs.iter().map(|&c| q_int(c)).collect())
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 2, 1]); // (1+x)^2
        let b = p(&[1, 1]);
        assert_eq!(b.mul(&b), a);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(a.exact_div(&b), b);
        assert_eq!(a.derivative(), p(&[2, 2]));
        assert_eq!(a.eval(&q_int(2)), q_int(9));
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[1, 1]).mul(&p(&[1, 1])).mul(&p(&[-2, 1])); // (1+x)^2 (x-2)
        let g = Poly::gcd(&a, &a.derivative());
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(a.squarefree_part(), p(&[1, 1]).mul(&p(&[-2, 1])));
        let (reduced, k) = p(&[0, 0, 3, 3]).strip_x_power();
        assert_eq!(k, 2);
        assert_eq!(reduced, p(&[3, 3]));
    }

    #[test]
    fn resultant_of_quadratics() {
        // res_W(x W^2 - W + 1, 2x W - 1) = x (4x - 1)
        let f = vec![p(&[1]), p(&[-1]), p(&[0, 1])];
        let fd = vec![p(&[-1]), p(&[0, 2])];
        let r = resultant_w(&f, &fd);
        assert_eq!(r, p(&[0, -1, 4]));
    }

    #[test]
    fn resultant_detects_common_root() {
        // W^2 - x and W - x share a root when x^2 = x
        let f: Vec<QPoly> = vec![p(&[0, -1]), p(&[]), p(&[1])];
        let g: Vec<QPoly> = vec![p(&[0, -1]), p(&[1])];
        let r = resultant_w(&f, &g);
        // res = x^2 - x
        assert_eq!(r, p(&[0, -1, 1]));
        assert_eq!(r.eval(&q_int(1)), q_int(0));
        assert_eq!(r.eval(&q_int(0)), Q::from_integer(0.into()));
    }
}
