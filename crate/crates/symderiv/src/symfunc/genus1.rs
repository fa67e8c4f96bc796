//! Genus-one decompositions: SL(2) characters as Laurent polynomials in a
//! single variable, and the decomposition of h_{1,1}(k) by peeling
//! irreducibles from the top exponent down.

use super::{Basis, VirtualCharacter};
use crate::error::{Error, Result};
use crate::partitions::{divisors, mobius, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;

/// A Laurent polynomial in x with integer coefficients: the character of an
/// SL(2) module evaluated on diag(x, 1/x).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentCharacter(BTreeMap<i64, i64>);

impl LaurentCharacter {
    pub fn zero() -> Self {
        LaurentCharacter(BTreeMap::new())
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn top_exponent(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// Symmetry under x -> 1/x; genuine SL(2) characters satisfy this.
    pub fn is_symmetric(&self) -> bool {
        self.0.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    /// Multiplication by (x + 1/x).
    pub fn mul_h(&self) -> LaurentCharacter {
        let mut out = LaurentCharacter::zero();
        for (&e, &c) in &self.0 {
            out.add_term(e + 1, c);
            out.add_term(e - 1, c);
        }
        out
    }

    pub fn sub(&self, rhs: &LaurentCharacter) -> LaurentCharacter {
        let mut out = self.clone();
        for (&e, &c) in &rhs.0 {
            out.add_term(e, -c);
        }
        out
    }
}

/// Character of the degree-l piece of the free Lie algebra on the two
/// letters of the genus-one symplectic basis:
/// (1/l) sum_{d|l} mu(d) (x^d + x^-d)^{l/d}.
pub fn genus1_free_lie_char(l: u32) -> Result<LaurentCharacter> {
    assert!(l >= 1);
    let lq = BigRational::from(BigInt::from(l));
    let mut acc: BTreeMap<i64, BigRational> = BTreeMap::new();
    for d in divisors(l) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let scale = BigRational::from(BigInt::from(mu)) / lq.clone();
        let reps = l / d;
        // (x^d + x^-d)^reps = sum_i C(reps, i) x^(d(reps - 2i))
        let mut binom = BigInt::from(1);
        for i in 0..=reps {
            let e = d as i64 * (reps as i64 - 2 * i as i64);
            let term = scale.clone() * BigRational::from(binom.clone());
            *acc.entry(e).or_insert_with(BigRational::zero) += term;
            if i < reps {
                binom = binom * BigInt::from(reps - i) / BigInt::from(i + 1);
            }
        }
    }
    let mut out = LaurentCharacter::zero();
    for (e, c) in acc {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::InternalInconsistency(format!(
                "fractional Laurent coefficient {c} at exponent {e}"
            )));
        }
        out.add_term(e, c.to_integer().to_i64().unwrap());
    }
    Ok(out)
}

/// SL(2) decomposition of h_{1,1}(k): builds the Laurent character
/// (x + 1/x) ch L(k+1) - ch L(k+2) and peels irreducibles [m] from the top
/// exponent down. All multiplicities must be nonnegative.
pub fn genus1_decompose(k: u32) -> Result<VirtualCharacter> {
    assert!(k >= 1);
    let mut ch = genus1_free_lie_char(k + 1)?
        .mul_h()
        .sub(&genus1_free_lie_char(k + 2)?);
    if !ch.is_symmetric() {
        return Err(Error::InternalInconsistency(format!(
            "genus-one character of degree {k} is not symmetric"
        )));
    }
    let mut out = VirtualCharacter::zero(Basis::Sl2);
    while let Some(top) = ch.top_exponent() {
        if top < 0 {
            return Err(Error::InternalInconsistency(
                "leftover negative-exponent terms while peeling".into(),
            ));
        }
        let mult = ch.coeff(top);
        if mult <= 0 {
            return Err(Error::InternalInconsistency(format!(
                "negative multiplicity {mult} for [{top}] in degree {k}"
            )));
        }
        // chi_[m] = x^m + x^(m-2) + ... + x^-m
        let mut e = top;
        loop {
            ch.add_term(e, -mult);
            if e == -top {
                break;
            }
            e -= 2;
        }
        let label = if top == 0 {
            Partition::empty()
        } else {
            Partition::new(vec![top as u32])
        };
        out.add_term(label, mult);
    }
    Ok(out)
}

/// Leading term of the genus-one decomposition: ([m], multiplicity).
/// Returns None for the zero module.
pub fn genus1_leading_term(k: u32) -> Result<Option<(u32, i64)>> {
    let dec = genus1_decompose(k)?;
    Ok(dec
        .ordered_terms()
        .into_iter()
        .next()
        .map(|(p, m)| (p.parts().first().copied().unwrap_or(0), m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2(terms: &[(u32, i64)]) -> VirtualCharacter {
        VirtualCharacter::from_terms(
            Basis::Sl2,
            terms.iter().map(|&(m, c)| {
                let p = if m == 0 {
                    Partition::empty()
                } else {
                    Partition::new(vec![m])
                };
                (p, c)
            }),
        )
    }

    #[test]
    fn small_degrees() {
        // Degrees 1, 3, 5 vanish.
        for k in [1u32, 3, 5] {
            assert!(genus1_decompose(k).unwrap().is_zero(), "k={k}");
        }
        assert_eq!(genus1_decompose(2).unwrap(), sl2(&[(0, 1)]));
        assert_eq!(genus1_decompose(4).unwrap(), sl2(&[(2, 1)]));
        assert_eq!(genus1_decompose(6).unwrap(), sl2(&[(4, 1), (0, 1)]));
        assert_eq!(genus1_decompose(7).unwrap(), sl2(&[(3, 1)]));
    }

    #[test]
    fn published_rows() {
        assert_eq!(
            genus1_decompose(10).unwrap(),
            sl2(&[(8, 1), (6, 1), (4, 3), (2, 1), (0, 3)])
        );
        assert_eq!(
            genus1_decompose(12).unwrap(),
            sl2(&[(10, 1), (8, 1), (6, 5), (4, 4), (2, 8)])
        );
    }

    #[test]
    fn leading_terms() {
        // [k-2] once for even k; floor(k/6) copies of [k-4] for odd k >= 7.
        for k in 2..=18u32 {
            let lead = genus1_leading_term(k).unwrap();
            if k % 2 == 0 {
                assert_eq!(lead, Some((k - 2, 1)), "k={k}");
            } else if k >= 7 {
                assert_eq!(lead, Some((k - 4, (k / 6) as i64)), "k={k}");
            } else {
                assert_eq!(lead, None, "k={k}");
            }
        }
    }
}
