//! Young-symmetrizer machinery on the chord-diagram module and the
//! eigenspace bases E_lambda.
//!
//! The symmetrizer for a shape is the row symmetrizer composed with the
//! column antisymmetrizer, both applied as orbit sums (the groups are far
//! too large to flatten, but orbits in the diagram basis are small). Each
//! eigenspace occurs with multiplicity one, so a single nonzero
//! symmetrizer image generates it under the symmetric-group action; the
//! basis is grown by closing under adjacent transpositions.

use super::{diagram_table, ChordVector, DiagramTable, Permutation};
use crate::error::{Error, Result};
use crate::exact::{Echelon, Row};
use crate::partitions::{hook_dimension, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::collections::HashMap;

/// Slot indices of the canonical tableau (row-major filling 1..n) for a
/// shape: `rows[i]` lists the 0-based slots in row i.
fn canonical_tableau(shape: &Partition) -> Vec<Vec<usize>> {
    let mut rows = Vec::new();
    let mut next = 0usize;
    for &len in shape.parts() {
        rows.push((next..next + len as usize).collect());
        next += len as usize;
    }
    rows
}

fn columns_of(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let width = rows.first().map_or(0, |r| r.len());
    (0..width)
        .map(|c| rows.iter().filter_map(|r| r.get(c).copied()).collect())
        .collect()
}

/// Transpositions of adjacent cells inside each group (enough to generate
/// the Young subgroup).
fn group_generators(groups: &[Vec<usize>], n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for g in groups {
        for w in g.windows(2) {
            let mut img: Vec<u8> = (0..n as u8).collect();
            img.swap(w[0], w[1]);
            out.push(Permutation::from_images(img));
        }
    }
    out
}

fn group_order(groups: &[Vec<usize>]) -> BigInt {
    let mut o = BigInt::from(1);
    for g in groups {
        o *= crate::partitions::factorial(g.len() as u32);
    }
    o
}

/// Orbit sum over the Young subgroup generated by `gens`: for each basis
/// diagram d in the support, sum the orbit of d weighted by the stabilizer
/// order, with signs when `signed`. Sign conflicts (odd stabilizer) kill
/// the orbit.
fn orbit_sum(
    v: &ChordVector,
    gens: &[Permutation],
    order: &BigInt,
    signed: bool,
    table: &DiagramTable,
) -> ChordVector {
    let mut out = ChordVector::zero(v.vertices());
    for (start, coeff) in v.entries() {
        let mut sign_of: HashMap<u32, i64> = HashMap::new();
        sign_of.insert(start, 1);
        let mut queue = vec![start];
        let mut dead = false;
        while let Some(idx) = queue.pop() {
            let s = sign_of[&idx];
            let d = table.diagram_at(idx);
            for (gi, gamma) in gens.iter().enumerate() {
                let ns = if signed { -s } else { s };
                let _ = gi;
                let nd = d.relabel(gamma);
                let ni = table.index_of(&nd);
                match sign_of.get(&ni) {
                    Some(&old) if signed && old != ns => {
                        dead = true;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        sign_of.insert(ni, ns);
                        queue.push(ni);
                    }
                }
            }
            if dead {
                break;
            }
        }
        if dead {
            continue;
        }
        // Stabilizer order = |group| / |orbit|.
        let stab = BigRational::new(order.clone(), BigInt::from(sign_of.len() as u64));
        for (ni, s) in sign_of {
            out.add_index(ni, coeff * &stab * BigRational::from(BigInt::from(s)));
        }
    }
    out
}

/// Applies the Young symmetrizer of `shape` (row symmetrizer after column
/// antisymmetrizer) to a chord vector.
pub fn young_apply(shape: &Partition, v: &ChordVector) -> Result<ChordVector> {
    let n = v.vertices();
    if shape.size() as usize != n {
        return Err(Error::DimensionMismatch(format!(
            "symmetrizer shape [{shape}] on {n} vertices"
        )));
    }
    let table = diagram_table(n, true)?;
    let rows = canonical_tableau(shape);
    let cols = columns_of(&rows);
    let col_sum = orbit_sum(v, &group_generators(&cols, n), &group_order(&cols), true, &table);
    Ok(orbit_sum(
        &col_sum,
        &group_generators(&rows, n),
        &group_order(&rows),
        false,
        &table,
    ))
}

pub(crate) fn act_row(table: &DiagramTable, gamma: &Permutation, row: &Row) -> Row {
    Row::from_big_pairs(row.iter_big().map(|(k, c)| {
        let d = table.diagram_at(k as u32 + 1).relabel(gamma);
        ((table.index_of(&d) - 1) as u64, c)
    }))
}

/// Basis of the eigenspace E_lambda inside the diagram space on
/// 2k+2 = `n` vertices: the isotypic image of the Young symmetrizer for
/// the doubled shape, closed under the symmetric-group action and
/// echelonized. The dimension is checked against the hook-length count.
///
/// Explicit eigenbases are kept to at most 10 vertices; the projected
/// spaces at 12 vertices go through the block split in `projection`.
pub fn eigenspace_basis(lambda: &Partition, n: usize) -> Result<Vec<ChordVector>> {
    if n > 10 {
        return Err(Error::TooLarge(format!(
            "explicit eigenspace bases are limited to 10 vertices (requested {n}); \
             the projected spaces at 12 vertices are served by the split basis"
        )));
    }
    if 2 * lambda.size() as usize != n {
        return Err(Error::DimensionMismatch(format!(
            "E_[{lambda}] needs 2|lambda| = {n}"
        )));
    }
    let shape = lambda.doubled();
    let table = diagram_table(n, false)?;
    let expected = hook_dimension(&shape)
        .to_usize()
        .expect("dimension fits usize");
    // Any nonzero symmetrizer image generates (multiplicity one).
    let mut seed = None;
    for i in 1..=table.len() as u32 {
        let w = young_apply(&shape, &ChordVector::basis(n, i))?;
        if !w.is_zero() {
            seed = Some(w);
            break;
        }
    }
    let seed = seed.ok_or_else(|| {
        Error::InternalInconsistency(format!("symmetrizer of [{shape}] annihilates the space"))
    })?;
    let gens: Vec<Permutation> = (0..n - 1).map(|i| Permutation::adjacent(i, n)).collect();
    let mut ech = Echelon::new();
    let mut queue: Vec<Row> = Vec::new();
    let first = seed.to_row().normalize_primitive();
    ech.insert(first.clone());
    queue.push(first);
    while let Some(row) = queue.pop() {
        for gamma in &gens {
            let cand = act_row(&table, gamma, &row);
            let reduced = ech.reduce(cand).normalize_primitive();
            if !reduced.is_zero() {
                ech.insert(reduced.clone());
                queue.push(reduced);
            }
        }
    }
    if ech.rank() != expected {
        return Err(Error::InternalInconsistency(format!(
            "E_[{lambda}] on {n} vertices has rank {} but the isotypic count is {expected}",
            ech.rank()
        )));
    }
    Ok(ech
        .rows()
        .iter()
        .map(|r| ChordVector::from_row(n, r))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chords::{gram_apply, pairing_at};
    use crate::partitions::{enumerate_partitions, eigenvalue_poly};
    use num_traits::Zero;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn four_vertex_eigenspaces() {
        // E_[2] is the one-dimensional [4]-isotypic part; E_[1,1] has
        // dimension two.
        let e2 = eigenspace_basis(&p(&[2]), 4).unwrap();
        assert_eq!(e2.len(), 1);
        let e11 = eigenspace_basis(&p(&[1, 1]), 4).unwrap();
        assert_eq!(e11.len(), 2);
        // Eigen property, identically in g: both sides are polynomials of
        // degree <= 2 in g, so equality at 4 points pins the identity.
        for ((lam, basis), _) in [(p(&[2]), &e2), (p(&[1, 1]), &e11)].iter().zip(0..) {
            let mu = eigenvalue_poly(lam);
            for v in basis.iter() {
                for g in 1..=4u32 {
                    let lhs = gram_apply(v, g).unwrap();
                    let rhs = v.scaled(&BigRational::from(mu.eval(g as i64)));
                    assert_eq!(lhs, rhs, "lambda={lam:?} g={g}");
                }
            }
        }
    }

    #[test]
    fn completeness_small() {
        for k in 1..=3usize {
            let n = 2 * k + 2;
            let total: usize = enumerate_partitions(k as u32 + 1, None)
                .iter()
                .map(|lam| eigenspace_basis(lam, n).unwrap().len())
                .sum();
            let dim = diagram_table(n, false).unwrap().len();
            assert_eq!(total, dim, "n={n}");
        }
    }

    #[test]
    fn orthogonality_under_gram() {
        // E_lambda and E_mu are orthogonal for the pairing at any genus;
        // checked at two genera on 6 vertices.
        let lams = enumerate_partitions(3, None);
        let bases: Vec<Vec<ChordVector>> = lams
            .iter()
            .map(|l| eigenspace_basis(l, 6).unwrap())
            .collect();
        let table = diagram_table(6, false).unwrap();
        for i in 0..lams.len() {
            for j in i + 1..lams.len() {
                for u in &bases[i] {
                    for v in &bases[j] {
                        for g in [1u32, 3] {
                            let mut acc = BigRational::zero();
                            for (a, ca) in u.entries() {
                                for (b, cb) in v.entries() {
                                    let w = pairing_at(
                                        table.diagram_at(a),
                                        table.diagram_at(b),
                                        g,
                                    );
                                    acc += ca * cb * BigRational::from(w);
                                }
                            }
                            assert!(acc.is_zero(), "{:?} vs {:?} at g={g}", lams[i], lams[j]);
                        }
                    }
                }
            }
        }
    }
}
