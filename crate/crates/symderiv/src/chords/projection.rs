//! The derivation projector on chord space and the splitting of its image
//! into the orthogonal components F_lambda.
//!
//! The image W of the projector decomposes as the direct sum of the
//! F_lambda over diagrams lambda with k+1 boxes, each sitting inside the
//! eigenspace E_lambda. Central class sums of the symmetric group act on
//! E_lambda by the scalar |class| chi(class) / dim, so W splits exactly
//! into the F_lambda by intersecting kernels of (class sum - scalar).
//! This avoids ever materializing the large eigenspaces: at 12 vertices W
//! is 108-dimensional while the eigenspaces run into the thousands.

use super::{diagram_table, ChordVector, DiagramTable, Permutation};
use crate::error::{Error, Result};
use crate::exact::{dense_kernel, Echelon, Row};
use crate::partitions::{
    class_size, enumerate_partitions, hook_dimension, sn_character, Partition,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// The image of the derivation projector on n-vertex chord space, split
/// into the components F_lambda (keyed by the eigenspace label lambda,
/// with |lambda| = n/2).
#[derive(Clone)]
pub struct DerivationSplit {
    n: usize,
    blocks: Vec<(Partition, Vec<ChordVector>)>,
}

impl DerivationSplit {
    pub fn vertices(&self) -> usize {
        self.n
    }

    /// Components in the deterministic partition order.
    pub fn blocks(&self) -> &[(Partition, Vec<ChordVector>)] {
        &self.blocks
    }

    pub fn component(&self, lambda: &Partition) -> &[ChordVector] {
        self.blocks
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, v)| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn total_dim(&self) -> usize {
        self.blocks.iter().map(|(_, v)| v.len()).sum()
    }
}

fn split_cache() -> &'static Mutex<HashMap<usize, Arc<DerivationSplit>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DerivationSplit>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Central character scalar of the class sum of `rho` on the irreducible
/// indexed by `shape`: |class| * chi_shape(rho) / dim(shape).
fn central_scalar(shape: &Partition, rho: &Partition) -> BigRational {
    let chi = sn_character(shape, rho).expect("sizes agree");
    BigRational::new(
        class_size(rho) * BigInt::from(chi),
        hook_dimension(shape),
    )
}

/// All permutations of cycle type (m, 1^(n-m)) as slot permutations.
fn single_cycle_class(n: usize, m: usize) -> Vec<Permutation> {
    // Choose the support and the cyclic order on it.
    let mut out = Vec::new();
    let mut support = Vec::new();
    choose(0, n, m, &mut support, &mut out);
    return out;

    fn choose(
        start: usize,
        n: usize,
        left: usize,
        support: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if left == 0 {
            // All distinct cyclic orders: fix the smallest element first.
            let m = support.len();
            let mut rest: Vec<usize> = support[1..].to_vec();
            permute(&mut rest, 0, support[0], n, out);
            let _ = m;
            return;
        }
        for v in start..n {
            support.push(v);
            choose(v + 1, n, left - 1, support, out);
            support.pop();
        }
    }

    fn permute(rest: &mut Vec<usize>, at: usize, anchor: usize, n: usize, out: &mut Vec<Permutation>) {
        if at == rest.len() {
            let mut img: Vec<u8> = (0..n as u8).collect();
            let mut cycle = vec![anchor];
            cycle.extend(rest.iter().copied());
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                img[from] = to as u8;
            }
            out.push(Permutation::from_images(img));
            return;
        }
        for i in at..rest.len() {
            rest.swap(at, i);
            permute(rest, at + 1, anchor, n, out);
            rest.swap(at, i);
        }
    }
}

fn apply_class_sum(table: &DiagramTable, class: &[Permutation], row: &Row) -> Row {
    let mut pairs: Vec<(u64, BigInt)> = Vec::with_capacity(class.len() * row.support());
    for gamma in class {
        for (k, c) in row.iter_big() {
            let d = table.diagram_at(k as u32 + 1).relabel(gamma);
            pairs.push(((table.index_of(&d) - 1) as u64, c));
        }
    }
    Row::from_big_pairs(pairs)
}

/// Computes the image W of the derivation projector and splits it into
/// the F_lambda. Results are cached per vertex count.
pub fn derivation_split(n: usize) -> Result<Arc<DerivationSplit>> {
    if n % 2 != 0 || n < 4 {
        return Err(Error::DegreeParity(format!(
            "derivation projector needs an even vertex count >= 4, got {n}"
        )));
    }
    if n > super::DENSE_LIMIT {
        return Err(Error::TooLarge(format!(
            "projected bases are limited to {} vertices (requested {n})",
            super::DENSE_LIMIT
        )));
    }
    if let Some(hit) = split_cache().lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let table = diagram_table(n, false)?;
    let op = super::perm::derivation_operator(n);
    let op_terms: Vec<(Permutation, i64)> = op.terms().to_vec();

    // Image of every basis diagram under the projector, echelonized in
    // parallel chunks and merged. The chunk size is fixed so the merged
    // basis is byte-identical across thread counts.
    let m = table.len();
    let chunk = 512;
    let indices: Vec<u32> = (1..=m as u32).collect();
    let partial: Vec<Echelon> = indices
        .par_chunks(chunk)
        .map(|ids| {
            let mut ech = Echelon::new();
            for &i in ids {
                let d = table.diagram_at(i);
                let mut pairs: Vec<(u64, i128)> = Vec::with_capacity(op_terms.len());
                for (gamma, c) in &op_terms {
                    let nd = d.relabel(gamma);
                    pairs.push(((table.index_of(&nd) - 1) as u64, *c as i128));
                }
                ech.insert(Row::from_pairs(pairs));
            }
            ech
        })
        .collect();
    let mut w = Echelon::new();
    for part in partial {
        for row in part.into_rows() {
            w.insert(row);
        }
    }

    // Split W by central class sums. Blocks carry the candidate labels
    // they could still contain; classes are consumed until every block is
    // pinned to a single lambda.
    let k1 = (n / 2) as u32;
    let lambdas = enumerate_partitions(k1, None);
    let all_rows: Vec<Row> = w.rows().to_vec();
    let mut blocks: Vec<(Vec<Partition>, Vec<Row>)> = vec![(lambdas.clone(), all_rows)];
    for cycle_len in 2..=n {
        if blocks.iter().all(|(c, _)| c.len() <= 1) {
            break;
        }
        let rho_parts: Vec<u32> = std::iter::once(cycle_len as u32)
            .chain(std::iter::repeat(1).take(n - cycle_len))
            .collect();
        let rho = Partition::new(rho_parts);
        let class = single_cycle_class(n, cycle_len);
        let mut next_blocks = Vec::new();
        for (cands, rows) in blocks {
            if cands.len() <= 1 || rows.is_empty() {
                next_blocks.push((cands, rows));
                continue;
            }
            // Distinct scalars among the candidates for this class.
            let mut by_scalar: Vec<(BigRational, Vec<Partition>)> = Vec::new();
            for lam in &cands {
                let s = central_scalar(&lam.doubled(), &rho);
                match by_scalar.iter_mut().find(|(t, _)| *t == s) {
                    Some((_, ls)) => ls.push(lam.clone()),
                    None => by_scalar.push((s, vec![lam.clone()])),
                }
            }
            if by_scalar.len() == 1 {
                next_blocks.push((cands, rows));
                continue;
            }
            // Work in the echelon basis of the block; the class sum
            // preserves it, so images express exactly.
            let mut ech = Echelon::new();
            for r in rows {
                ech.insert(r);
            }
            let rows: Vec<Row> = ech.rows().to_vec();
            let dim = rows.len();
            let images: Vec<Vec<BigRational>> = rows
                .par_iter()
                .map(|r| {
                    let img = apply_class_sum(&table, &class, r);
                    ech.express(&img)
                        .expect("class sums preserve the projector image")
                })
                .collect();
            // Columns of the operator matrix: images[i] = T(row_i) in row
            // coordinates.
            for (scalar, ls) in by_scalar {
                // Kernel of (T - scalar I): rows of the homogeneous system
                // are the coordinates of T(row_j) - scalar e_j.
                let mut system: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); dim]; dim];
                for (j, img) in images.iter().enumerate() {
                    for i in 0..dim {
                        system[i][j] = img[i].clone();
                    }
                    system[j][j] -= &scalar;
                }
                let kernel = dense_kernel(&system, dim);
                let sub_rows: Vec<Row> = kernel
                    .iter()
                    .map(|combo| combine_rows(&rows, combo))
                    .collect();
                next_blocks.push((ls, sub_rows));
            }
        }
        blocks = next_blocks;
    }

    let mut out_blocks: Vec<(Partition, Vec<ChordVector>)> = Vec::new();
    let mut total = 0usize;
    for lam in &lambdas {
        let rows = blocks
            .iter()
            .find(|(c, _)| c.len() == 1 && &c[0] == lam)
            .map(|(_, r)| r.clone())
            .unwrap_or_default();
        let mut ech = Echelon::new();
        for r in rows {
            ech.insert(r);
        }
        total += ech.rank();
        let vectors = ech
            .rows()
            .iter()
            .map(|r| ChordVector::from_row(n, r))
            .collect();
        out_blocks.push((lam.clone(), vectors));
    }
    if total != w.rank() {
        return Err(Error::InternalInconsistency(format!(
            "block split of the projector image lost rank: {total} vs {}",
            w.rank()
        )));
    }
    let split = Arc::new(DerivationSplit { n, blocks: out_blocks });
    split_cache().lock().unwrap().insert(n, split.clone());
    Ok(split)
}

fn combine_rows(rows: &[Row], combo: &[BigRational]) -> Row {
    let mut denom = BigInt::one();
    for c in combo {
        denom = num_integer::lcm(denom, c.denom().clone());
    }
    let mut acc: Row = Row::zero();
    for (r, c) in rows.iter().zip(combo) {
        if c.is_zero() {
            continue;
        }
        let scale = (c * BigRational::from(denom.clone())).to_integer();
        acc = acc.combine(&BigInt::one(), r, &-scale);
    }
    acc.normalize_primitive()
}

/// Basis of F_lambda: the image of E_lambda under the derivation
/// projector, echelonized. Its image under the tensor realization is the
/// orthogonal component labelled by the conjugate diagram.
pub fn derivation_projection(lambda: &Partition, n: usize) -> Result<Vec<ChordVector>> {
    if 2 * lambda.size() as usize != n {
        return Err(Error::DimensionMismatch(format!(
            "F_[{lambda}] needs 2|lambda| = {n}"
        )));
    }
    Ok(derivation_split(n)?.component(lambda).to_vec())
}

/// A p-stable basis of the invariant derivation space in degree 2k: for
/// every lambda the component basis C_lambda^i, keyed by the tensor-side
/// label (the conjugate of the eigenspace label), in the deterministic
/// partition order.
pub struct StableFamily {
    pub degree: usize,
    /// (tensor-side label lambda, eigenspace label lambda', basis of
    /// F_{lambda'}).
    pub components: Vec<(Partition, Partition, Vec<ChordVector>)>,
}

impl StableFamily {
    pub fn total(&self) -> usize {
        self.components.iter().map(|(_, _, v)| v.len()).sum()
    }

    pub fn component(&self, tensor_label: &Partition) -> &[ChordVector] {
        self.components
            .iter()
            .find(|(l, _, _)| l == tensor_label)
            .map(|(_, _, v)| v.as_slice())
            .unwrap_or(&[])
    }
}

/// The p-stable basis for degree 2k (diagrams on 2k+2 vertices),
/// genus-independent by construction.
pub fn p_stable_basis(two_k: usize) -> Result<StableFamily> {
    let n = two_k + 2;
    let split = derivation_split(n)?;
    let mut components = Vec::new();
    for lam in enumerate_partitions((n / 2) as u32, None) {
        let eigen_label = lam.conjugate();
        let basis = split.component(&eigen_label).to_vec();
        components.push((lam, eigen_label, basis));
    }
    Ok(StableFamily {
        degree: two_k,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::dim_h_lambda;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn degree_two_family() {
        let fam = p_stable_basis(2).unwrap();
        assert_eq!(fam.total(), 1);
        assert_eq!(fam.component(&p(&[2])).len(), 1);
        assert_eq!(fam.component(&p(&[1, 1])).len(), 0);
    }

    #[test]
    fn degree_six_family_matches_dimension_formula() {
        let fam = p_stable_basis(6).unwrap();
        assert_eq!(fam.total(), 5);
        let expect: &[(&[u32], usize)] = &[
            (&[4], 1),
            (&[3, 1], 2),
            (&[2, 2], 1),
            (&[2, 1, 1], 1),
            (&[1, 1, 1, 1], 0),
        ];
        for &(parts, d) in expect {
            assert_eq!(fam.component(&p(parts)).len(), d, "H_{parts:?}");
            assert_eq!(
                dim_h_lambda(&p(parts), 3).unwrap() as usize,
                d
            );
        }
    }

    #[test]
    fn projection_lands_in_eigenspace() {
        // F_lambda vectors are Gram eigenvectors with eigenvalue
        // mu_lambda(g): both sides have degree <= |lambda| in g, so
        // equality at |lambda|+1 points is an identity.
        use crate::chords::gram_apply;
        use crate::partitions::eigenvalue_poly;
        for lam in enumerate_partitions(4, None) {
            let basis = derivation_projection(&lam, 8).unwrap();
            let mu = eigenvalue_poly(&lam);
            for v in &basis {
                for g in 1..=5u32 {
                    let lhs = gram_apply(v, g).unwrap();
                    let rhs = v.scaled(&BigRational::from(mu.eval(g as i64)));
                    assert_eq!(lhs, rhs, "lambda={lam:?} g={g}");
                }
            }
        }
    }
}
