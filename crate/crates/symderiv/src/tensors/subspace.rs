//! Echelonized subspaces of tensor powers, invariant subspaces, and
//! highest-weight vector extraction.

use super::{pack_word, phi, unpack_word, Letter, SparseTensor};
use crate::chords::diagram_table;
use crate::error::Result;
use crate::exact::{dense_kernel, Echelon};
use crate::partitions::Partition;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// An echelonized span of tensors of a fixed genus and degree.
#[derive(Clone)]
pub struct Subspace {
    g: u32,
    n: usize,
    ech: Echelon,
}

impl Subspace {
    pub fn new(g: u32, n: usize) -> Subspace {
        Subspace {
            g,
            n,
            ech: Echelon::new(),
        }
    }

    pub fn from_spanning(g: u32, n: usize, spanning: impl IntoIterator<Item = SparseTensor>) -> Subspace {
        let mut s = Subspace::new(g, n);
        for t in spanning {
            s.insert(&t);
        }
        s
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    /// Inserts a tensor; true when the dimension grew.
    pub fn insert(&mut self, t: &SparseTensor) -> bool {
        assert_eq!((self.g, self.n), (t.genus(), t.degree()));
        if t.is_zero() {
            return false;
        }
        self.ech.insert(t.to_row())
    }

    pub fn contains(&self, t: &SparseTensor) -> bool {
        t.is_zero() || self.ech.contains(&t.to_row())
    }

    /// Residual of t after reduction (zero iff contained). The reduction
    /// is linear in t, so residuals of combinations combine.
    pub fn reduce(&self, t: &SparseTensor) -> SparseTensor {
        let v: Vec<(u64, BigRational)> = t.terms().map(|(w, c)| (w, c.clone())).collect();
        let mut out = SparseTensor::zero(self.g, self.n);
        for (w, c) in self.ech.reduce_rational(v) {
            out.add_word(w, c);
        }
        out
    }

    /// The echelon rows as tensors, in pivot order.
    pub fn basis(&self) -> Vec<SparseTensor> {
        self.ech
            .rows()
            .iter()
            .map(|r| SparseTensor::from_row(self.g, self.n, r))
            .collect()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.ech
    }
}

/// The Sp-invariant part of a subspace: its intersection with the span of
/// the chord-diagram tensors (the invariant tensors are exactly that span).
pub fn sp_invariants(v: &Subspace) -> Result<Subspace> {
    if v.degree() % 2 != 0 {
        // Odd tensor powers have no invariants.
        return Ok(Subspace::new(v.genus(), v.degree()));
    }
    let table = diagram_table(v.degree(), true)?;
    let gens: Vec<SparseTensor> = table
        .diagrams()
        .iter()
        .map(|d| phi(d, v.genus()))
        .collect();
    // Solve for combinations of the generators lying in v: the residuals
    // after reduction must cancel.
    let residuals: Vec<SparseTensor> = gens.iter().map(|t| v.reduce(t)).collect();
    let combos = cancel_combinations(&residuals);
    let mut out = Subspace::new(v.genus(), v.degree());
    for combo in combos {
        let mut t = SparseTensor::zero(v.genus(), v.degree());
        for (gen, c) in gens.iter().zip(&combo) {
            if !c.is_zero() {
                t = t.add(&gen.scaled(c));
            }
        }
        out.insert(&t);
    }
    Ok(out)
}

/// Kernel of the linear map (c_1..c_m) -> sum c_i t_i: coefficient vectors
/// whose combination vanishes.
fn cancel_combinations(tensors: &[SparseTensor]) -> Vec<Vec<BigRational>> {
    let mut keys: BTreeMap<u64, usize> = BTreeMap::new();
    for t in tensors {
        for (w, _) in t.terms() {
            let next = keys.len();
            keys.entry(w).or_insert(next);
        }
    }
    let mut matrix = vec![vec![BigRational::zero(); tensors.len()]; keys.len()];
    for (j, t) in tensors.iter().enumerate() {
        for (w, c) in t.terms() {
            matrix[keys[&w]][j] = c.clone();
        }
    }
    dense_kernel(&matrix, tensors.len())
}

/// Weight of a word under the diagonal torus: coordinate i counts x_i
/// minus y_i occurrences (1-based i).
pub fn word_weight(word: &[u8], g: u32) -> Vec<i64> {
    let mut wt = vec![0i64; g as usize];
    for &l in word {
        let letter = Letter::from_code(l);
        let i = (letter.pair_index() - 1) as usize;
        wt[i] += if letter.is_x() { 1 } else { -1 };
    }
    wt
}

/// All words of length n at genus g whose weight equals `target` (as a
/// vector padded with zeros).
pub fn weight_words(g: u32, n: usize, target: &[i64]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    rec(g, n, target, &mut word, &mut out);
    return out;

    fn rec(g: u32, n: usize, target: &[i64], word: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if word.len() == n {
            if word_weight(word, g) == target {
                out.push(word.clone());
            }
            return;
        }
        // Prune: remaining slots must cover the weight gap.
        let current = word_weight(word, g);
        let gap: i64 = target
            .iter()
            .zip(&current)
            .map(|(t, c)| (t - c).abs())
            .sum();
        if gap > (n - word.len()) as i64 {
            return;
        }
        for l in 0..2 * g as u8 {
            word.push(l);
            rec(g, n, target, word, out);
            word.pop();
        }
    }
}

/// Simple raising operators of the rank-g symplectic algebra acting by
/// derivations on words: for i < g the operator x_{i+1} -> x_i,
/// y_i -> -y_{i+1}; the long-root operator y_g -> x_g.
pub fn raising_operators(g: u32) -> Vec<Vec<(Letter, Vec<(Letter, i64)>)>> {
    let mut ops = Vec::new();
    for i in 1..g {
        ops.push(vec![
            (Letter::x(i + 1), vec![(Letter::x(i), 1)]),
            (Letter::y(i), vec![(Letter::y(i + 1), -1)]),
        ]);
    }
    ops.push(vec![(Letter::y(g), vec![(Letter::x(g), 1)])]);
    ops
}

/// Applies a derivation-by-letter-substitution operator to a tensor.
pub fn apply_letter_derivation(
    rule: &[(Letter, Vec<(Letter, i64)>)],
    t: &SparseTensor,
) -> SparseTensor {
    let n = t.degree();
    let mut out = SparseTensor::zero(t.genus(), n);
    for (w, c) in t.terms() {
        let word = unpack_word(w, n);
        for s in 0..n {
            let here = Letter::from_code(word[s]);
            for (from, images) in rule {
                if here != *from {
                    continue;
                }
                for (to, factor) in images {
                    let mut nw = word.clone();
                    nw[s] = to.code();
                    out.add_word(
                        pack_word(&nw),
                        c * BigRational::from(BigInt::from(*factor)),
                    );
                }
            }
        }
    }
    out
}

/// Highest-weight vectors of weight `target` inside a subspace: elements
/// of the weight space killed by every simple raising operator.
pub fn highest_weight_vectors(v: &Subspace, target: &Partition) -> Result<Subspace> {
    let g = v.genus();
    if target.height() > g {
        return Ok(Subspace::new(g, v.degree()));
    }
    let mut wt: Vec<i64> = target.parts().iter().map(|&p| p as i64).collect();
    wt.resize(g as usize, 0);
    let words = weight_words(g, v.degree(), &wt);
    if words.is_empty() {
        return Ok(Subspace::new(g, v.degree()));
    }
    let candidates: Vec<SparseTensor> = words
        .iter()
        .map(|w| {
            let mut t = SparseTensor::zero(g, v.degree());
            t.add_word(pack_word(w), BigRational::from(BigInt::from(1)));
            t
        })
        .collect();
    // Conditions: combination lies in v, and every raising kills it.
    let mut constraint_tensors: Vec<Vec<SparseTensor>> = Vec::new();
    constraint_tensors.push(candidates.iter().map(|t| v.reduce(t)).collect());
    for rule in raising_operators(g) {
        constraint_tensors.push(
            candidates
                .iter()
                .map(|t| apply_letter_derivation(&rule, t))
                .collect(),
        );
    }
    // Stack the constraint groups into one cancellation system; the key
    // space of each group is kept disjoint.
    let mut keys: BTreeMap<(usize, u64), usize> = BTreeMap::new();
    for (gi, group) in constraint_tensors.iter().enumerate() {
        for t in group {
            for (w, _) in t.terms() {
                let next = keys.len();
                keys.entry((gi, w)).or_insert(next);
            }
        }
    }
    let mut matrix = vec![vec![BigRational::zero(); candidates.len()]; keys.len()];
    for (gi, group) in constraint_tensors.iter().enumerate() {
        for (j, t) in group.iter().enumerate() {
            for (w, c) in t.terms() {
                matrix[keys[&(gi, w)]][j] = c.clone();
            }
        }
    }
    let kernel = dense_kernel(&matrix, candidates.len());
    let mut out = Subspace::new(g, v.degree());
    for combo in kernel {
        let mut t = SparseTensor::zero(g, v.degree());
        for (cand, c) in candidates.iter().zip(&combo) {
            if !c.is_zero() {
                t = t.add(&cand.scaled(c));
            }
        }
        out.insert(&t);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensors::omega;

    #[test]
    fn invariants_of_full_square() {
        // (H (x) H)^Sp at g = 2 is spanned by omega.
        let g = 2u32;
        let mut all = Subspace::new(g, 2);
        for a in 0..4u8 {
            for b in 0..4u8 {
                let mut t = SparseTensor::zero(g, 2);
                t.add_word(pack_word(&[a, b]), BigRational::from(BigInt::from(1)));
                all.insert(&t);
            }
        }
        assert_eq!(all.dim(), 16);
        let inv = sp_invariants(&all).unwrap();
        assert_eq!(inv.dim(), 1);
        assert!(inv.contains(&omega(2)));
    }

    #[test]
    fn odd_degree_has_no_invariants() {
        let mut v = Subspace::new(2, 3);
        v.insert(&SparseTensor::word(2, &[Letter::x(1), Letter::y(1), Letter::x(2)]));
        assert_eq!(sp_invariants(&v).unwrap().dim(), 0);
    }

    #[test]
    fn weight_enumeration() {
        // Words of length 5 at g=3 with weight (3,1,1): arrangements of
        // {x1,x1,x1,x2,x3}.
        let words = weight_words(3, 5, &[3, 1, 1]);
        assert_eq!(words.len(), 20);
    }

    #[test]
    fn raising_kills_top_letter() {
        let g = 2;
        let t = SparseTensor::word(g, &[Letter::x(1)]);
        for rule in raising_operators(g) {
            assert!(apply_letter_derivation(&rule, &t).is_zero());
        }
        // x2 raises to x1 under the short root.
        let s = SparseTensor::word(g, &[Letter::x(2)]);
        let rules = raising_operators(g);
        let raised = apply_letter_derivation(&rules[0], &s);
        assert_eq!(raised, SparseTensor::word(g, &[Letter::x(1)]));
    }
}
