//! Free-Lie structure inside the tensor algebra: the commutator bracket,
//! right-nested bracket words, and the Dynkin-Specht-Wever membership
//! test.

use super::SparseTensor;
use crate::chords::p_op;
use crate::error::{Error, Result};
use num_rational::BigRational;

/// [a, b] = a (x) b - b (x) a for homogeneous tensors.
pub fn lie_bracket(a: &SparseTensor, b: &SparseTensor) -> SparseTensor {
    a.tensor(b).sub(&b.tensor(a))
}

/// The nested bracket [u_1, [u_2, [... [u_{m-1}, u_m] ...]]] of
/// single-letter tensors.
pub fn left_normed(g: u32, letters: &[super::Letter]) -> SparseTensor {
    assert!(!letters.is_empty());
    let mut acc = SparseTensor::word(g, &letters[letters.len() - 1..]);
    for &l in letters[..letters.len() - 1].iter().rev() {
        acc = lie_bracket(&SparseTensor::word(g, &[l]), &acc);
    }
    acc
}

/// Applies the left-bracketing operator and returns the scalar c with
/// theta(T) = c T. By Dynkin-Specht-Wever, homogeneous T of degree n is a
/// Lie element exactly when c = n. Non-eigenvectors are rejected.
pub fn dsw_degree(t: &SparseTensor) -> Result<BigRational> {
    if t.is_zero() {
        return Err(Error::NotLie);
    }
    let n = t.degree();
    let theta = super::apply_tensor(&p_op(n, n), t)?;
    if theta.is_zero() {
        return Err(Error::NotLie);
    }
    let (w0, c0) = t.terms().next().unwrap();
    let ratio = theta.coeff(w0) / c0;
    if theta == t.scaled(&ratio) {
        Ok(ratio)
    } else {
        Err(Error::NotLie)
    }
}

/// True when T is a homogeneous Lie element.
pub fn is_lie(t: &SparseTensor) -> bool {
    match dsw_degree(t) {
        Ok(c) => c == BigRational::from(num_bigint::BigInt::from(t.degree() as i64)),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensors::{omega, Letter};
    use num_bigint::BigInt;

    fn x(i: u32) -> Letter {
        Letter::x(i)
    }
    fn y(i: u32) -> Letter {
        Letter::y(i)
    }

    #[test]
    fn left_normed_examples() {
        assert_eq!(left_normed(1, &[x(1), y(1)]), omega(1));
        let t = left_normed(2, &[x(1), x(2), y(1)]);
        assert_eq!(
            dsw_degree(&t).unwrap(),
            BigRational::from(BigInt::from(3))
        );
        assert!(is_lie(&t));
    }

    #[test]
    fn non_lie_rejected() {
        let t = SparseTensor::word(2, &[x(1), x(2)]);
        assert!(matches!(dsw_degree(&t), Err(Error::NotLie)));
        assert!(!is_lie(&t));
    }

    #[test]
    fn jacobi_identity() {
        // On a fixed batch of Lie elements of degree <= 4 at g = 2.
        let elems = [
            left_normed(2, &[x(1), y(1)]),
            left_normed(2, &[x(2), y(1)]),
            left_normed(2, &[x(1), x(2), y(2)]),
            left_normed(2, &[y(2), x(1), y(1)]),
        ];
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let lhs = lie_bracket(a, &lie_bracket(b, c))
                        .add(&lie_bracket(b, &lie_bracket(c, a)))
                        .add(&lie_bracket(c, &lie_bracket(a, b)));
                    assert!(lhs.is_zero());
                }
            }
        }
    }

    #[test]
    fn brackets_stay_lie() {
        let a = left_normed(2, &[x(1), y(1)]);
        let b = left_normed(2, &[x(2), y(2)]);
        let c = lie_bracket(&a, &b);
        if !c.is_zero() {
            assert!(is_lie(&c));
        }
        let d = lie_bracket(&a, &left_normed(2, &[x(2), x(1), y(1)]));
        assert!(is_lie(&d));
    }
}
