//! Exact sparse linear algebra over the integers and rationals: sparse
//! rows keyed by u64 columns, fraction-free echelonization with primitive
//! integer rows, membership and coordinate solves.
//!
//! Rows keep their entries in a fixed-width fast lane (i128) as long as
//! they fit and are promoted to arbitrary precision transparently when a
//! combination would overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A sparse vector with exact integer entries, sorted by column key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Row {
    Small(Vec<(u64, i128)>),
    Big(Vec<(u64, BigInt)>),
}

impl Row {
    pub fn zero() -> Row {
        Row::Small(Vec::new())
    }

    /// Builds a row from unsorted (key, value) pairs, merging duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, i128)>) -> Row {
        let mut v: Vec<(u64, i128)> = pairs.into_iter().filter(|&(_, c)| c != 0).collect();
        v.sort_unstable_by_key(|&(k, _)| k);
        let mut out: Vec<(u64, i128)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => {
                    *lc = lc.checked_add(c).expect("row construction overflow")
                }
                _ => out.push((k, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        Row::Small(out)
    }

    pub fn from_big_pairs(pairs: impl IntoIterator<Item = (u64, BigInt)>) -> Row {
        let mut v: Vec<(u64, BigInt)> = pairs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(u64, BigInt)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc += c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Row::Big(out).demoted()
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Row::Small(v) => v.is_empty(),
            Row::Big(v) => v.is_empty(),
        }
    }

    pub fn support(&self) -> usize {
        match self {
            Row::Small(v) => v.len(),
            Row::Big(v) => v.len(),
        }
    }

    /// Leading (smallest) column key.
    pub fn pivot(&self) -> Option<u64> {
        match self {
            Row::Small(v) => v.first().map(|&(k, _)| k),
            Row::Big(v) => v.first().map(|(k, _)| k.clone()).map(|_| v[0].0),
        }
    }

    pub fn get_big(&self, key: u64) -> BigInt {
        match self {
            Row::Small(v) => v
                .binary_search_by_key(&key, |&(k, _)| k)
                .map(|i| BigInt::from(v[i].1))
                .unwrap_or_else(|_| BigInt::zero()),
            Row::Big(v) => v
                .binary_search_by_key(&key, |&(k, _)| k)
                .map(|i| v[i].1.clone())
                .unwrap_or_else(|_| BigInt::zero()),
        }
    }

    pub fn iter_big(&self) -> Box<dyn Iterator<Item = (u64, BigInt)> + '_> {
        match self {
            Row::Small(v) => Box::new(v.iter().map(|&(k, c)| (k, BigInt::from(c)))),
            Row::Big(v) => Box::new(v.iter().map(|(k, c)| (*k, c.clone()))),
        }
    }

    fn to_big(&self) -> Vec<(u64, BigInt)> {
        match self {
            Row::Small(v) => v.iter().map(|&(k, c)| (k, BigInt::from(c))).collect(),
            Row::Big(v) => v.clone(),
        }
    }

    fn demoted(self) -> Row {
        if let Row::Big(v) = &self {
            if v.iter().all(|(_, c)| c.to_i128().is_some()) {
                return Row::Small(v.iter().map(|(k, c)| (*k, c.to_i128().unwrap())).collect());
            }
        }
        self
    }

    /// Divides by the gcd of the entries and makes the leading entry
    /// positive.
    pub fn normalize_primitive(self) -> Row {
        match self {
            Row::Small(mut v) => {
                if v.is_empty() {
                    return Row::Small(v);
                }
                let mut g: i128 = 0;
                for &(_, c) in &v {
                    g = gcd_i128(g, c);
                }
                let sign = if v[0].1 < 0 { -1 } else { 1 };
                let d = g * sign;
                if d != 1 {
                    for (_, c) in v.iter_mut() {
                        *c /= d;
                    }
                }
                Row::Small(v)
            }
            Row::Big(mut v) => {
                if v.is_empty() {
                    return Row::Big(v);
                }
                let mut g = BigInt::zero();
                for (_, c) in &v {
                    g = g.gcd(c);
                }
                if v[0].1.is_negative() {
                    g = -g;
                }
                if !g.is_one() {
                    for (_, c) in v.iter_mut() {
                        *c = &*c / &g;
                    }
                }
                Row::Big(v).demoted()
            }
        }
    }

    /// self * a - other * b, exact.
    pub fn combine(&self, a: &BigInt, other: &Row, b: &BigInt) -> Row {
        if let (Row::Small(x), Row::Small(y), Some(sa), Some(sb)) =
            (self, other, a.to_i128(), b.to_i128())
        {
            if let Some(v) = combine_small(x, sa, y, sb) {
                return Row::Small(v);
            }
        }
        let x = self.to_big();
        let y = other.to_big();
        Row::Big(combine_big(&x, a, &y, b)).demoted()
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn combine_small(
    x: &[(u64, i128)],
    a: i128,
    y: &[(u64, i128)],
    b: i128,
) -> Option<Vec<(u64, i128)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let kx = x.get(i).map(|&(k, _)| k);
        let ky = y.get(j).map(|&(k, _)| k);
        let (key, val) = match (kx, ky) {
            (Some(kx), Some(ky)) if kx == ky => {
                let v = x[i].1.checked_mul(a)?.checked_sub(y[j].1.checked_mul(b)?)?;
                i += 1;
                j += 1;
                (kx, v)
            }
            (Some(kx), Some(ky)) if kx < ky => {
                let v = x[i].1.checked_mul(a)?;
                i += 1;
                (kx, v)
            }
            (Some(_), Some(ky)) => {
                let v = y[j].1.checked_mul(b)?.checked_neg()?;
                j += 1;
                (ky, v)
            }
            (Some(kx), None) => {
                let v = x[i].1.checked_mul(a)?;
                i += 1;
                (kx, v)
            }
            (None, Some(ky)) => {
                let v = y[j].1.checked_mul(b)?.checked_neg()?;
                j += 1;
                (ky, v)
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((key, val));
        }
    }
    Some(out)
}

fn combine_big(x: &[(u64, BigInt)], a: &BigInt, y: &[(u64, BigInt)], b: &BigInt) -> Vec<(u64, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let kx = x.get(i).map(|(k, _)| *k);
        let ky = y.get(j).map(|(k, _)| *k);
        let (key, val) = match (kx, ky) {
            (Some(kx), Some(ky)) if kx == ky => {
                let v = &x[i].1 * a - &y[j].1 * b;
                i += 1;
                j += 1;
                (kx, v)
            }
            (Some(kx), Some(ky)) if kx < ky => {
                let v = &x[i].1 * a;
                i += 1;
                (kx, v)
            }
            (Some(_), Some(ky)) => {
                let v = -(&y[j].1 * b);
                j += 1;
                (ky, v)
            }
            (Some(kx), None) => {
                let v = &x[i].1 * a;
                i += 1;
                (kx, v)
            }
            (None, Some(ky)) => {
                let v = -(&y[j].1 * b);
                j += 1;
                (ky, v)
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((key, val));
        }
    }
    out
}

/// A row-echelon basis of a subspace: primitive integer rows with strictly
/// increasing pivot keys. Rows are not fully reduced against each other;
/// pivots are unique, which is all the solves below need.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Row>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Row> {
        self.rows
    }

    fn find_pivot(&self, key: u64) -> Option<usize> {
        self.rows
            .binary_search_by_key(&key, |r| r.pivot().expect("echelon rows are nonzero"))
            .ok()
    }

    /// Fully reduces `v` against the basis.
    pub fn reduce(&self, mut v: Row) -> Row {
        loop {
            let Some(p) = v.pivot() else { return v };
            let Some(idx) = self.find_pivot(p) else {
                return v;
            };
            let row = &self.rows[idx];
            let a = row.get_big(p);
            let b = v.get_big(p);
            v = v.combine(&a, row, &b).normalize_primitive();
        }
    }

    /// Reduces and, if independent, inserts. Returns true when rank grew.
    pub fn insert(&mut self, v: Row) -> bool {
        let r = self.reduce(v).normalize_primitive();
        if r.is_zero() {
            return false;
        }
        let p = r.pivot().unwrap();
        let pos = self
            .rows
            .binary_search_by_key(&p, |row| row.pivot().unwrap())
            .unwrap_err();
        self.rows.insert(pos, r);
        true
    }

    pub fn contains(&self, v: &Row) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Fully reduces a rational vector against the basis without any
    /// rescaling, so the residual is linear in the input.
    pub fn reduce_rational(&self, v: Vec<(u64, BigRational)>) -> Vec<(u64, BigRational)> {
        let mut cur = v;
        cur.sort_by_key(|&(k, _)| k);
        cur.retain(|(_, c)| !c.is_zero());
        let mut out: Vec<(u64, BigRational)> = Vec::new();
        while let Some((p, lead)) = cur.first().cloned() {
            let Some(idx) = self.find_pivot(p) else {
                out.push(cur.remove(0));
                continue;
            };
            let row = &self.rows[idx];
            let factor = lead / BigRational::from(row.get_big(p));
            let rowv: Vec<(u64, BigRational)> = row
                .iter_big()
                .map(|(k, c)| (k, BigRational::from(c) * &factor))
                .collect();
            let mut next: Vec<(u64, BigRational)> = Vec::with_capacity(cur.len() + rowv.len());
            let (mut i, mut j) = (0, 0);
            while i < cur.len() || j < rowv.len() {
                let kx = cur.get(i).map(|(k, _)| *k);
                let ky = rowv.get(j).map(|(k, _)| *k);
                match (kx, ky) {
                    (Some(kx), Some(ky)) if kx == ky => {
                        let v = &cur[i].1 - &rowv[j].1;
                        if !v.is_zero() {
                            next.push((kx, v));
                        }
                        i += 1;
                        j += 1;
                    }
                    (Some(kx), Some(ky)) if kx < ky => {
                        next.push((kx, cur[i].1.clone()));
                        i += 1;
                    }
                    (Some(_), Some(ky)) => {
                        next.push((ky, -rowv[j].1.clone()));
                        j += 1;
                    }
                    (Some(kx), None) => {
                        next.push((kx, cur[i].1.clone()));
                        i += 1;
                    }
                    (None, Some(ky)) => {
                        next.push((ky, -rowv[j].1.clone()));
                        j += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            // Entries smaller than every remaining pivot are settled; but
            // pivots only grow, so strip the settled prefix lazily via the
            // loop head. Entries equal to handled pivots are gone.
            cur = next;
        }
        out.extend(cur);
        out.sort_by_key(|&(k, _)| k);
        out
    }

    /// Expresses `v` as a rational combination of the basis rows; None if
    /// `v` is outside the span. Coefficients are indexed like `rows()`.
    pub fn express(&self, v: &Row) -> Option<Vec<BigRational>> {
        let mut coeffs = vec![BigRational::zero(); self.rows.len()];
        let mut cur: Vec<(u64, BigRational)> = v
            .iter_big()
            .map(|(k, c)| (k, BigRational::from(c)))
            .collect();
        while let Some((p, lead)) = cur.first().cloned() {
            let idx = self.find_pivot(p)?;
            let row = &self.rows[idx];
            let factor = lead / BigRational::from(row.get_big(p));
            coeffs[idx] += &factor;
            // cur -= factor * row
            let mut next: Vec<(u64, BigRational)> = Vec::with_capacity(cur.len() + row.support());
            let rowv: Vec<(u64, BigRational)> = row
                .iter_big()
                .map(|(k, c)| (k, BigRational::from(c) * &factor))
                .collect();
            let (mut i, mut j) = (0, 0);
            while i < cur.len() || j < rowv.len() {
                let kx = cur.get(i).map(|(k, _)| *k);
                let ky = rowv.get(j).map(|(k, _)| *k);
                match (kx, ky) {
                    (Some(kx), Some(ky)) if kx == ky => {
                        let v = &cur[i].1 - &rowv[j].1;
                        if !v.is_zero() {
                            next.push((kx, v));
                        }
                        i += 1;
                        j += 1;
                    }
                    (Some(kx), Some(ky)) if kx < ky => {
                        next.push((kx, cur[i].1.clone()));
                        i += 1;
                    }
                    (Some(_), Some(ky)) => {
                        next.push((ky, -rowv[j].1.clone()));
                        j += 1;
                    }
                    (Some(kx), None) => {
                        next.push((kx, cur[i].1.clone()));
                        i += 1;
                    }
                    (None, Some(ky)) => {
                        next.push((ky, -rowv[j].1.clone()));
                        j += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            cur = next;
        }
        Some(coeffs)
    }
}

/// Exact kernel of a small dense rational matrix (rows x cols), returned
/// as a basis of column-coefficient vectors. Used for the final stage of
/// eigen-splits and detector solves, where matrices are tiny.
pub fn dense_kernel(matrix: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut rows: Vec<Vec<BigRational>> = matrix.to_vec();
    for r in &rows {
        assert_eq!(r.len(), cols);
    }
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..cols {
                    let sub = &rows[r][j] * &f;
                    rows[i][j] -= sub;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let pivot_cols: std::collections::BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (ri, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -rows[ri][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(pairs: &[(u64, i128)]) -> Row {
        Row::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(row(&[(0, 1), (1, 2)])));
        assert!(e.insert(row(&[(1, 1), (2, 1)])));
        assert!(!e.insert(row(&[(0, 2), (1, 6), (2, 2)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&row(&[(0, 3), (1, 6)])));
        assert!(!e.contains(&row(&[(2, 1)])));
    }

    #[test]
    fn express_coefficients() {
        let mut e = Echelon::new();
        e.insert(row(&[(0, 2), (1, 4)]));
        e.insert(row(&[(1, 3)]));
        let v = row(&[(0, 1), (1, 5)]);
        let c = e.express(&v).unwrap();
        // Coefficients are relative to the stored (primitive) rows
        // [(0,1),(1,2)] and [(1,1)]: v = 1*r0 + 3*r1.
        assert_eq!(c[0], BigRational::from(BigInt::from(1)));
        assert_eq!(c[1], BigRational::from(BigInt::from(3)));
        // Reconstruction check.
        let mut back = Row::zero();
        for (r, coef) in e.rows().iter().zip(&c) {
            assert!(coef.is_integer());
            back = back.combine(&BigInt::from(1), r, &-coef.to_integer());
        }
        assert_eq!(back, v);
        assert!(e.express(&row(&[(5, 1)])).is_none());
    }

    #[test]
    fn overflow_promotes() {
        let huge = i128::MAX / 2;
        let a = row(&[(0, huge), (1, 1)]);
        let b = row(&[(0, 1), (1, huge)]);
        let c = a.combine(&BigInt::from(huge), &b, &BigInt::from(3));
        // Exact value survives promotion.
        let expect = BigInt::from(huge) * BigInt::from(huge) - BigInt::from(3);
        assert_eq!(c.get_big(0), expect);
    }

    #[test]
    fn dense_kernel_small() {
        // Kernel of [1 1 1; 0 1 2] is spanned by (1, -2, 1).
        let m = vec![
            vec![
                BigRational::from(BigInt::from(1)),
                BigRational::from(BigInt::from(1)),
                BigRational::from(BigInt::from(1)),
            ],
            vec![
                BigRational::zero(),
                BigRational::from(BigInt::from(1)),
                BigRational::from(BigInt::from(2)),
            ],
        ];
        let k = dense_kernel(&m, 3);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        let (a, b, c) = (v[0].clone(), v[1].clone(), v[2].clone());
        assert_eq!(a.clone() + b.clone() + c.clone(), BigRational::zero());
        assert_eq!(b + c.clone() * BigRational::from(BigInt::from(2)), BigRational::zero());
    }
}
