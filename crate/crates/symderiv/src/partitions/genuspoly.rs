//! Integer polynomials in the genus variable g, and the eigenvalue
//! polynomial mu_lambda attached to a Young diagram.

use super::Partition;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// A univariate polynomial in the genus g with exact integer coefficients,
/// stored lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GenusPolynomial(Vec<BigInt>);

impl GenusPolynomial {
    pub fn zero() -> Self {
        GenusPolynomial(Vec::new())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            GenusPolynomial(vec![c])
        }
    }

    /// The polynomial 2g + c.
    pub fn linear_2g_plus(c: i64) -> Self {
        GenusPolynomial(vec![BigInt::from(c), BigInt::from(2)]).trimmed()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Exact evaluation at an integer genus.
    pub fn eval(&self, g: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * g + c;
        }
        acc
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
        self
    }
}

impl Add for &GenusPolynomial {
    type Output = GenusPolynomial;
    fn add(self, rhs: &GenusPolynomial) -> GenusPolynomial {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] += c;
        }
        GenusPolynomial(out).trimmed()
    }
}

impl Sub for &GenusPolynomial {
    type Output = GenusPolynomial;
    fn sub(self, rhs: &GenusPolynomial) -> GenusPolynomial {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] -= c;
        }
        GenusPolynomial(out).trimmed()
    }
}

impl Mul for &GenusPolynomial {
    type Output = GenusPolynomial;
    fn mul(self, rhs: &GenusPolynomial) -> GenusPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return GenusPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        GenusPolynomial(out).trimmed()
    }
}

impl fmt::Display for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*g")?,
                _ => write!(f, "{c}*g^{i}")?,
            }
        }
        Ok(())
    }
}

/// The eigenvalue polynomial mu_lambda = prod over boxes b of
/// (2g - 2 s_b + t_b), where s_b counts columns strictly left of b and t_b
/// counts rows strictly above b.
pub fn eigenvalue_poly(lambda: &Partition) -> GenusPolynomial {
    let mut poly = GenusPolynomial::constant(1);
    for (row, &len) in lambda.parts().iter().enumerate() {
        for col in 0..len as i64 {
            let f = GenusPolynomial::linear_2g_plus(row as i64 - 2 * col);
            poly = &poly * &f;
        }
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn published_examples() {
        // mu_[4] = 2g(2g-2)(2g-4)(2g-6)
        let m4 = eigenvalue_poly(&p(&[4]));
        for g in 1..=6 {
            let expect: i64 = [0i64, -2, -4, -6].iter().map(|c| 2 * g + c).product();
            assert_eq!(m4.eval(g), BigInt::from(expect));
        }
        // mu_[1^4] = 2g(2g+1)(2g+2)(2g+3)
        let m1111 = eigenvalue_poly(&p(&[1, 1, 1, 1]));
        for g in 1..=6 {
            let expect: i64 = (0..4).map(|c| 2 * g + c).product();
            assert_eq!(m1111.eval(g), BigInt::from(expect));
        }
        assert_eq!(eigenvalue_poly(&p(&[1])).eval(5), BigInt::from(10));
    }

    #[test]
    fn injective_per_degree() {
        // Distinct diagrams of equal size have distinct eigenvalue polynomials.
        for n in 1..=10u32 {
            let polys: Vec<GenusPolynomial> = enumerate_partitions(n, None)
                .iter()
                .map(eigenvalue_poly)
                .collect();
            for i in 0..polys.len() {
                for j in i + 1..polys.len() {
                    assert_ne!(polys[i], polys[j], "collision at n={n}");
                }
            }
        }
    }

    #[test]
    fn zero_eigenvalue_exactly_when_width_exceeds_genus() {
        for n in 1..=8u32 {
            for lam in enumerate_partitions(n, None) {
                for g in 1..=6i64 {
                    let v = eigenvalue_poly(&lam).eval(g);
                    let wide = lam.parts().first().map_or(0, |&w| w) as i64 > g;
                    assert_eq!(v.is_zero(), wide, "lambda={lam:?} g={g}");
                }
            }
        }
    }
}
