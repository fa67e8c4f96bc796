//! Young-diagram combinatorics: partitions, cycle types, symmetric-group
//! characters, Littlewood-Richardson coefficients, stable GL-to-Sp branching
//! and the genus eigenvalue polynomials.

mod characters;
mod genuspoly;
mod lr;

pub use characters::{
    factorial,
    class_size, dim_h_lambda, hook_dimension, kontsevich_character, load_character_cache,
    save_character_cache, sn_character,
};
pub use genuspoly::{eigenvalue_poly, GenusPolynomial};
pub use lr::{
    dim_gl_irrep, dim_sp_irrep, gl_to_sp_branching, lr_coefficient, lr_expand_product,
    sp_trivial_multiplicity,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition (Young diagram): weakly decreasing positive parts.
///
/// The empty partition is valid and denotes the zero diagram `[0]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

/// A partition of `n` read as a conjugacy class of the symmetric group on
/// `n` letters.
pub type CycleType = Partition;

impl Partition {
    /// Builds a partition from parts, validating shape.
    ///
    /// Panics if the parts are not weakly decreasing or contain a zero;
    /// all call sites construct from trusted data.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Box count |λ|.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Row count h(λ).
    pub fn height(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The transposed diagram λ'.
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut parts = vec![0u32; cols];
        for &p in &self.0 {
            for c in 0..p as usize {
                parts[c] += 1;
            }
        }
        Partition(parts)
    }

    /// λ^δ: every row of λ repeated twice.
    pub fn double_floor(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.0.len() * 2);
        for &p in &self.0 {
            parts.push(p);
            parts.push(p);
        }
        Partition(parts)
    }

    /// 2λ: every part doubled.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|&p| 2 * p).collect())
    }

    /// True exactly when λ = μ^δ for some μ, i.e. rows come in equal pairs.
    pub fn is_double_floor(&self) -> bool {
        self.0.len() % 2 == 0 && self.0.chunks(2).all(|c| c[0] == c[1])
    }

    /// Inverse of [`Partition::double_floor`].
    pub fn inverse_double_floor(&self) -> Result<Partition> {
        if !self.is_double_floor() {
            return Err(Error::NotDoubleFloor(self.to_string()));
        }
        Ok(Partition(self.0.chunks(2).map(|c| c[0]).collect()))
    }

    /// Multiplicity of each distinct part, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Packs the parts into a u128 key (5 bits per part). Supports
    /// partitions with parts ≤ 31 and at most 25 rows, which covers
    /// everything the degree-20 tables need.
    pub(crate) fn pack(&self) -> u128 {
        debug_assert!(self.0.len() <= 25 && self.0.iter().all(|&p| p <= 31));
        let mut key: u128 = 0;
        for &p in &self.0 {
            key = (key << 5) | p as u128;
        }
        key
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// All partitions of `n` (optionally with at most `max_height` rows) in
/// reverse lexicographic order: `[n]` first, `[1^n]` last. This order is
/// part of the public contract; emitted tables rely on it.
pub fn enumerate_partitions(n: u32, max_height: Option<u32>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let h = max_height.unwrap_or(n);
    rec(n, n, h, &mut current, &mut out);
    return out;

    fn rec(left: u32, max_part: u32, rows_left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        let hi = max_part.min(left);
        for p in (1..=hi).rev() {
            // Feasibility: remaining boxes must fit in the remaining rows.
            if (left - p) > p * (rows_left - 1) {
                continue;
            }
            cur.push(p);
            rec(left - p, p, rows_left - 1, cur, out);
            cur.pop();
        }
    }
}

/// Number-theoretic Möbius function.
pub fn mobius(n: u32) -> i64 {
    assert!(n >= 1);
    let mut m = n;
    let mut primes = 0;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            primes += 1;
        }
        d += 1;
    }
    if m > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_partitions(4, None).len(), 5);
        assert_eq!(enumerate_partitions(0, None), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(11, Some(2)).len(), 6);
        // Brute-force oracle for the height-limited count.
        let brute = enumerate_partitions(11, None)
            .into_iter()
            .filter(|p| p.height() <= 2)
            .count();
        assert_eq!(brute, 6);
    }

    #[test]
    fn enumerate_order_reverse_lex() {
        let ps = enumerate_partitions(4, None);
        let shown: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn conjugate_examples() {
        let p = Partition::new(vec![3, 1]);
        assert_eq!(p.conjugate(), Partition::new(vec![2, 1, 1]));
        let q = Partition::new(vec![2, 2]);
        assert_eq!(q.conjugate(), q);
        assert_eq!(
            Partition::new(vec![4]).conjugate(),
            Partition::new(vec![1, 1, 1, 1])
        );
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=12 {
            for p in enumerate_partitions(n, None) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn double_floor_examples() {
        let p = Partition::new(vec![3, 1]);
        assert_eq!(p.double_floor(), Partition::new(vec![3, 3, 1, 1]));
        let df = Partition::new(vec![2, 2, 1, 1]);
        assert!(df.is_double_floor());
        assert_eq!(df.inverse_double_floor().unwrap(), Partition::new(vec![2, 1]));
        let nd = Partition::new(vec![2, 1]);
        assert!(!nd.is_double_floor());
        assert!(matches!(
            nd.inverse_double_floor(),
            Err(Error::NotDoubleFloor(_))
        ));
        assert!(Partition::empty().is_double_floor());
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(21), 1);
    }
}
