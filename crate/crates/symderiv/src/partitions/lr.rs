//! Littlewood-Richardson coefficients by tableau enumeration, the stable
//! GL-to-Sp restriction rule, and Weyl dimension formulas used as
//! cross-check oracles.

use super::{enumerate_partitions, Partition};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

fn lr_cache() -> &'static Mutex<HashMap<(u128, u128), BTreeMap<Partition, u64>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u128, u128), BTreeMap<Partition, u64>>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All contents mu with c^lambda_{mu,beta} > 0 for the skew shape
/// lambda/beta, with multiplicities: enumerates column-strict lattice
/// fillings of lambda/beta by backtracking.
fn lr_fillings(lambda: &Partition, beta: &Partition) -> BTreeMap<Partition, u64> {
    let key = (lambda.pack(), beta.pack());
    if let Some(hit) = lr_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    if !contains(lambda, beta) {
        lr_cache().lock().unwrap().insert(key, out.clone());
        return out;
    }
    let rows = lambda.height() as usize;
    let lam: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut inner: Vec<usize> = beta.parts().iter().map(|&p| p as usize).collect();
    inner.resize(rows, 0);
    // Cells in reverse reading order (right-to-left along each row, top row
    // first) so the lattice condition can be checked greedily.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..rows {
        for c in (inner[r]..lam[r]).rev() {
            cells.push((r, c));
        }
    }
    let mut fill: Vec<Vec<usize>> = (0..rows).map(|r| vec![0usize; lam[r]]).collect();
    let mut counts = vec![0usize; rows + 2];
    rec(
        0, &cells, &mut fill, &mut counts, &inner, &lam, rows, &mut out,
    );
    lr_cache().lock().unwrap().insert(key, out.clone());
    return out;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        fill: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        inner: &[usize],
        lam: &[usize],
        rows: usize,
        out: &mut BTreeMap<Partition, u64>,
    ) {
        if idx == cells.len() {
            let content: Vec<u32> = counts
                .iter()
                .skip(1)
                .take_while(|&&c| c > 0)
                .map(|&c| c as u32)
                .collect();
            *out.entry(Partition::new(content)).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        // Row-weak constraint from the cell to the right (filled earlier).
        let right_cap = if c + 1 < lam[r] {
            fill[r][c + 1]
        } else {
            usize::MAX
        };
        // Column-strict constraint from the cell above.
        let above = if r > 0 && c < lam[r - 1] && c >= inner[r - 1] {
            Some(fill[r - 1][c])
        } else if r > 0 && c < inner[r - 1] {
            // Cell above is inside the inner shape: no constraint.
            None
        } else if r > 0 {
            None
        } else {
            None
        };
        let lo = above.map_or(1, |a| a + 1);
        let hi = (r + 1).min(right_cap);
        for v in lo..=hi.min(rows) {
            // Lattice: after writing v, #v so far must not exceed #(v-1).
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            fill[r][c] = v;
            counts[v] += 1;
            rec(idx + 1, cells, fill, counts, inner, lam, rows, out);
            counts[v] -= 1;
        }
        fill[r][c] = 0;
    }
}

fn contains(outer: &Partition, inner: &Partition) -> bool {
    inner.height() <= outer.height()
        && inner
            .parts()
            .iter()
            .zip(outer.parts())
            .all(|(i, o)| i <= o)
}

/// Littlewood-Richardson coefficient: the multiplicity of nu in the
/// product of the Schur functions of lambda and mu. Zero unless
/// |lambda| + |mu| = |nu|.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    lr_fillings(nu, lambda).get(mu).copied().unwrap_or(0)
}

/// Schur expansion of s_lambda * s_mu: all nu with their LR coefficients.
pub fn lr_expand_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let n = lambda.size() + mu.size();
    let mut out = BTreeMap::new();
    for nu in enumerate_partitions(n, None) {
        let c = lr_coefficient(lambda, mu, &nu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// Stable restriction of the GL irreducible lambda to Sp (Littlewood's
/// rule): the multiplicity of mu is the sum of c^lambda_{mu,beta} over
/// partitions beta all of whose column lengths are even.
pub fn gl_to_sp_branching(lambda: &Partition) -> BTreeMap<Partition, u64> {
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    for beta in even_column_subdiagrams(lambda) {
        for (mu, c) in lr_fillings(lambda, &beta) {
            *out.entry(mu).or_insert(0) += c;
        }
    }
    out
}

/// Partitions with all columns of even length (equivalently, shapes
/// mu^delta) that fit inside `outer`, the empty one included.
fn even_column_subdiagrams(outer: &Partition) -> Vec<Partition> {
    let max_pairs = outer.height() / 2;
    let mut out = Vec::new();
    for m in 0..=(outer.size() / 2) {
        for half in enumerate_partitions(m, Some(max_pairs)) {
            let beta = half.double_floor();
            if contains(outer, &beta) {
                out.push(beta);
            }
        }
    }
    out
}

/// Multiplicity of the trivial Sp representation in the restriction of
/// lambda: 1 exactly on double-floor diagrams.
pub fn sp_trivial_multiplicity(lambda: &Partition) -> u64 {
    if lambda.is_double_floor() {
        1
    } else {
        0
    }
}

/// Dimension of the GL(m) irreducible indexed by lambda (hook content
/// formula). Zero when the diagram is taller than m.
pub fn dim_gl_irrep(lambda: &Partition, m: u32) -> BigInt {
    if lambda.height() > m {
        return BigInt::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 0..p as usize {
            num *= BigInt::from(m as i64 + j as i64 - i as i64);
            let arm = p - 1 - j as u32;
            let leg = conj.parts()[j] - 1 - i as u32;
            den *= BigInt::from(arm + leg + 1);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// Dimension of the Sp(2n) irreducible indexed by lambda (Weyl dimension
/// formula for type C). Zero when the diagram is taller than n.
pub fn dim_sp_irrep(lambda: &Partition, n: u32) -> BigInt {
    if lambda.height() > n {
        return BigInt::zero();
    }
    let n = n as usize;
    let mut l = vec![0i64; n];
    for i in 0..n {
        let part = lambda.parts().get(i).copied().unwrap_or(0) as i64;
        l[i] = part + (n - i) as i64;
    }
    let m: Vec<i64> = (0..n).map(|i| (n - i) as i64).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= BigInt::from(l[i]);
        den *= BigInt::from(m[i]);
        for j in i + 1..n {
            num *= BigInt::from((l[i] - l[j]) * (l[i] + l[j]));
            den *= BigInt::from((m[i] - m[j]) * (m[i] + m[j]));
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn pieri_cases() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        // Size mismatch gives zero.
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2])), 0);
    }

    #[test]
    fn product_symmetry() {
        let pairs = [
            (p(&[2, 1]), p(&[3, 1])),
            (p(&[2, 2]), p(&[2, 1, 1])),
            (p(&[3]), p(&[1, 1, 1])),
        ];
        for (a, b) in pairs {
            assert_eq!(lr_expand_product(&a, &b), lr_expand_product(&b, &a));
        }
    }

    #[test]
    fn square_of_column() {
        // s_{11}^2 = s_{22} + s_{211} + s_{1111}
        let prod = lr_expand_product(&p(&[1, 1]), &p(&[1, 1]));
        let expect: Vec<(Partition, u64)> = vec![
            (p(&[2, 2]), 1),
            (p(&[2, 1, 1]), 1),
            (p(&[1, 1, 1, 1]), 1),
        ];
        assert_eq!(prod.len(), 3);
        for (nu, c) in expect {
            assert_eq!(prod.get(&nu), Some(&c), "nu={nu:?}");
        }
    }

    #[test]
    fn branching_examples() {
        // Lambda^2 H = [1,1] + trivial.
        let b = gl_to_sp_branching(&p(&[1, 1]));
        assert_eq!(b.get(&p(&[1, 1])), Some(&1));
        assert_eq!(b.get(&Partition::empty()), Some(&1));
        assert_eq!(b.len(), 2);
        // The standard representation restricts irreducibly.
        let b1 = gl_to_sp_branching(&p(&[1]));
        assert_eq!(b1.len(), 1);
        assert_eq!(b1.get(&p(&[1])), Some(&1));
        // Two-row chain.
        let b31 = gl_to_sp_branching(&p(&[3, 1]));
        assert_eq!(b31.get(&p(&[3, 1])), Some(&1));
        assert_eq!(b31.get(&p(&[2])), Some(&1));
        assert_eq!(b31.len(), 2);
    }

    #[test]
    fn two_row_chain_general() {
        // [k,l] restricts to [k,l] + [k-1,l-1] + ... + [k-l], multiplicity
        // one each, for all k >= l with k+l <= 12.
        for k in 1..=11u32 {
            for l in 1..=k.min(12 - k) {
                let lam = if l == 0 { p(&[k]) } else { p(&[k, l]) };
                let b = gl_to_sp_branching(&lam);
                assert_eq!(b.len() as u32, l + 1, "chain length for [{k},{l}]");
                for j in 0..=l {
                    let mu = if l == j {
                        if k == j {
                            Partition::empty()
                        } else {
                            p(&[k - j])
                        }
                    } else {
                        p(&[k - j, l - j])
                    };
                    assert_eq!(b.get(&mu), Some(&1), "[{k},{l}] at step {j}");
                }
            }
        }
    }

    #[test]
    fn trivial_multiplicity_matches_branching() {
        for n in 0..=8u32 {
            for lam in enumerate_partitions(n, None) {
                let direct = sp_trivial_multiplicity(&lam);
                let via = gl_to_sp_branching(&lam)
                    .get(&Partition::empty())
                    .copied()
                    .unwrap_or(0);
                assert_eq!(direct, via, "lambda={lam:?}");
            }
        }
    }

    #[test]
    fn weyl_dimension_spot_checks() {
        assert_eq!(dim_gl_irrep(&p(&[1]), 6), BigInt::from(6));
        assert_eq!(dim_gl_irrep(&p(&[2, 2]), 4), BigInt::from(20));
        assert_eq!(dim_sp_irrep(&p(&[1, 1]), 2), BigInt::from(5));
        assert_eq!(dim_sp_irrep(&p(&[1]), 3), BigInt::from(6));
        // S_n-dimension degenerate case: single box.
        assert_eq!(dim_sp_irrep(&p(&[2]), 1), BigInt::from(3));
    }

    #[test]
    fn branching_dimension_audit() {
        // Restriction preserves dimension: checked against the Weyl
        // formulas for g = 3..5 and diagrams with at most 8 boxes that fit
        // in height g (the validity range of the stable rule).
        for g in 3..=5u32 {
            for n in 1..=8u32 {
                for lam in enumerate_partitions(n, None) {
                    if lam.height() > g {
                        continue;
                    }
                    let lhs = dim_gl_irrep(&lam, 2 * g);
                    let rhs: BigInt = gl_to_sp_branching(&lam)
                        .iter()
                        .map(|(mu, &m)| dim_sp_irrep(mu, g) * BigInt::from(m))
                        .sum();
                    assert_eq!(lhs, rhs, "dimension audit for {lam:?} at g={g}");
                }
            }
        }
    }
}
