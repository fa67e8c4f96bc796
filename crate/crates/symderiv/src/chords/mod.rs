//! Linear chord diagrams: enumeration in lexicographic order, signs, the
//! symmetric-group action, the genus-parameterized pairing and Gram
//! matrix, eigenspace decompositions and the projected spaces they induce.

pub mod perm;
mod projection;
mod symmetrizer;

pub use perm::{
    derivation_operator, p_op, p_prime_op, s_op, s_prime_op, sigma, GroupAlgebraOperator,
    Permutation,
};
pub use projection::{
    derivation_projection, derivation_split, p_stable_basis, DerivationSplit, StableFamily,
};
pub use symmetrizer::eigenspace_basis;

use crate::error::{Error, Result};
use crate::exact::Row;
use crate::partitions::GenusPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Largest vertex count with dense tables by default; 14 is reachable
/// behind the explicit opt-in, and 16+ is always refused (the dimension
/// formulas cover those degrees).
pub const DENSE_LIMIT: usize = 12;
pub const LARGE_LIMIT: usize = 14;

/// A linear chord diagram: a perfect matching of {1..2k} stored in
/// canonical form (i_1 < i_2 < ... < i_k and i_l < j_l).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChordDiagram(Vec<(u8, u8)>);

impl ChordDiagram {
    /// Canonicalizes arbitrary pairs into the standard form.
    pub fn new(pairs: Vec<(u8, u8)>) -> ChordDiagram {
        let mut pairs: Vec<(u8, u8)> = pairs
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        pairs.sort_unstable();
        let d = ChordDiagram(pairs);
        debug_assert!(d.is_valid());
        d
    }

    fn is_valid(&self) -> bool {
        let n = 2 * self.0.len();
        let mut seen = vec![false; n + 1];
        for &(a, b) in &self.0 {
            if a == 0 || b as usize > n || a >= b || seen[a as usize] || seen[b as usize] {
                return false;
            }
            seen[a as usize] = true;
            seen[b as usize] = true;
        }
        self.0.windows(2).all(|w| w[0].0 < w[1].0)
    }

    pub fn pairs(&self) -> &[(u8, u8)] {
        &self.0
    }

    /// Vertex count 2k.
    pub fn vertices(&self) -> usize {
        2 * self.0.len()
    }

    /// Sign of the permutation sending 1..2k to i_1 j_1 ... i_k j_k.
    pub fn sign(&self) -> i64 {
        let flat: Vec<u8> = self.0.iter().flat_map(|&(a, b)| [a, b]).collect();
        let n = flat.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        // Cycle decomposition of s -> flat[s]-1.
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                s = (flat[s] - 1) as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Relabels every vertex v to gamma(v) (gamma on 0-based slots) and
    /// re-canonicalizes. No sign is attached in the diagram basis.
    pub fn relabel(&self, gamma: &Permutation) -> ChordDiagram {
        ChordDiagram::new(
            self.0
                .iter()
                .map(|&(a, b)| {
                    (
                        gamma.image((a - 1) as usize) as u8 + 1,
                        gamma.image((b - 1) as usize) as u8 + 1,
                    )
                })
                .collect(),
        )
    }

    fn pack(&self) -> u64 {
        let mut key = 0u64;
        for &(a, b) in &self.0 {
            key = (key << 8) | ((a as u64) << 4) | b as u64;
        }
        key
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(a, b) in &self.0 {
            write!(f, "({a} {b})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The lexicographically ordered table of all diagrams on n vertices.
pub struct DiagramTable {
    n: usize,
    list: Vec<ChordDiagram>,
    index: HashMap<u64, u32>,
}

impl DiagramTable {
    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    /// 1-based index of a diagram in the lexicographic enumeration.
    pub fn index_of(&self, d: &ChordDiagram) -> u32 {
        self.index[&d.pack()] + 1
    }

    /// Diagram at a 1-based index.
    pub fn diagram_at(&self, index: u32) -> &ChordDiagram {
        &self.list[(index - 1) as usize]
    }

    pub fn diagrams(&self) -> &[ChordDiagram] {
        &self.list
    }
}

/// All (2k-1)!! diagrams on 2k vertices, sorted lexicographically on the
/// flattened pair sequence, cached per size. Sizes above the policy limit
/// are refused unless `large` is set; 16+ vertices are always refused.
pub fn diagram_table(n: usize, large: bool) -> Result<Arc<DiagramTable>> {
    if n % 2 != 0 || n == 0 {
        return Err(Error::DegreeParity(format!(
            "chord diagrams need a positive even vertex count, got {n}"
        )));
    }
    let limit = if large { LARGE_LIMIT } else { DENSE_LIMIT };
    if n > limit {
        return Err(Error::TooLarge(format!(
            "{n} vertices exceeds the explicit-vector policy ({limit}); \
             use the dimension formulas for these degrees"
        )));
    }
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<DiagramTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().unwrap();
    if let Some(t) = guard.get(&n) {
        return Ok(t.clone());
    }
    let mut list = Vec::new();
    let mut pairs = Vec::new();
    let mut used = vec![false; n + 1];
    build(n, &mut used, &mut pairs, &mut list);
    list.sort();
    let index = list
        .iter()
        .enumerate()
        .map(|(i, d)| (d.pack(), i as u32))
        .collect();
    let table = Arc::new(DiagramTable { n, list, index });
    guard.insert(n, table.clone());
    return Ok(table);

    fn build(
        n: usize,
        used: &mut Vec<bool>,
        pairs: &mut Vec<(u8, u8)>,
        out: &mut Vec<ChordDiagram>,
    ) {
        let Some(first) = (1..=n).find(|&v| !used[v]) else {
            out.push(ChordDiagram(pairs.clone()));
            return;
        };
        used[first] = true;
        for second in first + 1..=n {
            if used[second] {
                continue;
            }
            used[second] = true;
            pairs.push((first as u8, second as u8));
            build(n, used, pairs, out);
            pairs.pop();
            used[second] = false;
        }
        used[first] = false;
    }
}

/// A sparse rational vector over the lexicographically ordered diagram
/// basis of a fixed vertex count.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChordVector {
    n: usize,
    entries: std::collections::BTreeMap<u32, BigRational>,
}

impl ChordVector {
    pub fn zero(n: usize) -> ChordVector {
        ChordVector {
            n,
            entries: Default::default(),
        }
    }

    pub fn basis(n: usize, index: u32) -> ChordVector {
        let mut v = ChordVector::zero(n);
        v.add_index(index, BigRational::from(BigInt::from(1)));
        v
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff(&self, index: u32) -> BigRational {
        self.entries.get(&index).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> usize {
        self.entries.len()
    }

    pub fn add_index(&mut self, index: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self
            .entries
            .entry(index)
            .or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.entries.remove(&index);
        }
    }

    pub fn scaled(&self, c: &BigRational) -> ChordVector {
        if c.is_zero() {
            return ChordVector::zero(self.n);
        }
        ChordVector {
            n: self.n,
            entries: self.entries.iter().map(|(&i, v)| (i, v * c)).collect(),
        }
    }

    pub fn add(&self, rhs: &ChordVector) -> ChordVector {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (i, c) in rhs.entries() {
            out.add_index(i, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &ChordVector) -> ChordVector {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (i, c) in rhs.entries() {
            out.add_index(i, -c.clone());
        }
        out
    }

    /// Conversion to an integer row over 0-based column keys (clears
    /// denominators).
    pub fn to_row(&self) -> Row {
        let mut denom = BigInt::from(1);
        for c in self.entries.values() {
            denom = num_integer::lcm(denom, c.denom().clone());
        }
        Row::from_big_pairs(
            self.entries
                .iter()
                .map(|(&i, c)| ((i - 1) as u64, (c * BigRational::from(denom.clone())).to_integer())),
        )
    }

    pub fn from_row(n: usize, row: &Row) -> ChordVector {
        let mut v = ChordVector::zero(n);
        for (k, c) in row.iter_big() {
            v.add_index(k as u32 + 1, BigRational::from(c));
        }
        v
    }
}

/// Relabels every diagram in the support through `gamma` and collects
/// like terms. The action is unsigned in the diagram basis.
pub fn act(gamma: &Permutation, v: &ChordVector) -> Result<ChordVector> {
    if gamma.len() != v.vertices() {
        return Err(Error::DimensionMismatch(format!(
            "permutation of degree {} acting on {}-vertex diagrams",
            gamma.len(),
            v.vertices()
        )));
    }
    let table = diagram_table(v.vertices(), true)?;
    let mut out = ChordVector::zero(v.vertices());
    for (i, c) in v.entries() {
        let d = table.diagram_at(i).relabel(gamma);
        out.add_index(table.index_of(&d), c.clone());
    }
    Ok(out)
}

/// Applies a group-algebra operator by folding `act` over its terms.
pub fn apply(op: &GroupAlgebraOperator, v: &ChordVector) -> Result<ChordVector> {
    let table = diagram_table(v.vertices(), true)?;
    let mut out = ChordVector::zero(v.vertices());
    for (gamma, coeff) in op.terms() {
        if gamma.len() != v.vertices() {
            return Err(Error::DimensionMismatch(format!(
                "operator degree {} on {}-vertex diagrams",
                gamma.len(),
                v.vertices()
            )));
        }
        let c = BigRational::from(BigInt::from(*coeff));
        for (i, x) in v.entries() {
            let d = table.diagram_at(i).relabel(gamma);
            out.add_index(table.index_of(&d), x * &c);
        }
    }
    Ok(out)
}

/// Number of connected components of the union multigraph of two diagrams.
pub fn union_components(c: &ChordDiagram, d: &ChordDiagram) -> usize {
    assert_eq!(c.vertices(), d.vertices());
    let n = c.vertices();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in c.pairs().iter().chain(d.pairs()) {
        let (ra, rb) = (
            find(&mut parent, (a - 1) as usize),
            find(&mut parent, (b - 1) as usize),
        );
        if ra != rb {
            parent[ra] = rb;
        }
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

/// The pairing <C, C'> = (-1)^(k-r) (2g)^r as a polynomial in the genus,
/// where r counts components of the union multigraph.
pub fn pairing_poly(c: &ChordDiagram, d: &ChordDiagram) -> GenusPolynomial {
    let k = c.pairs().len();
    let r = union_components(c, d);
    let sign: i64 = if (k - r) % 2 == 0 { 1 } else { -1 };
    // sign * (2g)^r
    let mut poly = GenusPolynomial::constant(sign);
    for _ in 0..r {
        poly = &poly * &GenusPolynomial::linear_2g_plus(0);
    }
    poly
}

/// The pairing evaluated at a concrete genus.
pub fn pairing_at(c: &ChordDiagram, d: &ChordDiagram, g: u32) -> BigInt {
    let k = c.pairs().len();
    let r = union_components(c, d);
    let sign: i64 = if (k - r) % 2 == 0 { 1 } else { -1 };
    BigInt::from(sign) * BigInt::from(2 * g as i64).pow(r as u32)
}

/// Full Gram matrix of the pairing on n-vertex diagrams, polynomial in g.
pub fn gram_matrix(n: usize) -> Result<Vec<Vec<GenusPolynomial>>> {
    let table = diagram_table(n, false)?;
    let m = table.len();
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(m);
        for j in 0..m {
            if j < i {
                let prev: &Vec<GenusPolynomial> = &rows[j];
                row.push(prev[i].clone());
            } else {
                row.push(pairing_poly(&table.diagrams()[i], &table.diagrams()[j]));
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Applies the Gram form at genus g to a chord vector:
/// (M v)[C] = sum_C' <C, C'> v[C'].
pub fn gram_apply(v: &ChordVector, g: u32) -> Result<ChordVector> {
    let table = diagram_table(v.vertices(), true)?;
    let mut out = ChordVector::zero(v.vertices());
    for (i, d) in table.diagrams().iter().enumerate() {
        let mut acc = BigRational::zero();
        for (j, c) in v.entries() {
            let w = pairing_at(d, table.diagram_at(j), g);
            acc += c * BigRational::from(w);
        }
        out.add_index(i as u32 + 1, acc);
    }
    Ok(out)
}

/// Serialized sparse form: {"n":8,"entries":[[index,num,den],...]}.
#[derive(Serialize, Deserialize)]
pub struct ChordVectorRecord {
    pub n: usize,
    pub entries: Vec<(u32, String, String)>,
}

impl ChordVectorRecord {
    pub fn from_vector(v: &ChordVector) -> ChordVectorRecord {
        ChordVectorRecord {
            n: v.vertices(),
            entries: v
                .entries()
                .map(|(i, c)| (i, c.numer().to_string(), c.denom().to_string()))
                .collect(),
        }
    }

    pub fn to_vector(&self) -> ChordVector {
        let mut v = ChordVector::zero(self.n);
        for (i, num, den) in &self.entries {
            let c = BigRational::new(num.parse().unwrap(), den.parse().unwrap());
            v.add_index(*i, c);
        }
        v
    }
}

/// JSON form of a serialized chord vector.
pub fn chord_vector_record_json(rec: &ChordVectorRecord) -> String {
    serde_json::to_string(rec).expect("serialization cannot fail")
}

/// Dense text form: all (2k-1)!! coordinates in lexicographic order,
/// comma separated, matching the layout of the published basis listings.
pub fn chord_vector_dense_text(v: &ChordVector) -> Result<String> {
    let table = diagram_table(v.vertices(), false)?;
    let coords: Vec<String> = (1..=table.len() as u32)
        .map(|i| {
            let c = v.coeff(i);
            if c.is_integer() {
                c.to_integer().to_string()
            } else {
                format!("{}/{}", c.numer(), c.denom())
            }
        })
        .collect();
    Ok(coords.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(pairs: &[(u8, u8)]) -> ChordDiagram {
        ChordDiagram::new(pairs.to_vec())
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(diagram_table(2, false).unwrap().len(), 1);
        assert_eq!(diagram_table(4, false).unwrap().len(), 3);
        assert_eq!(diagram_table(8, false).unwrap().len(), 105);
        assert_eq!(diagram_table(10, false).unwrap().len(), 945);
        let t = diagram_table(8, false).unwrap();
        assert_eq!(t.diagram_at(1), &d(&[(1, 2), (3, 4), (5, 6), (7, 8)]));
        // The published detector indices.
        assert_eq!(t.index_of(&d(&[(1, 2), (3, 4), (5, 7), (6, 8)])), 2);
        assert_eq!(t.index_of(&d(&[(1, 2), (3, 4), (5, 8), (6, 7)])), 3);
        assert_eq!(t.index_of(&d(&[(1, 2), (3, 6), (4, 7), (5, 8)])), 8);
        assert_eq!(t.index_of(&d(&[(1, 2), (3, 8), (4, 6), (5, 7)])), 14);
    }

    #[test]
    fn size_policy() {
        assert!(matches!(
            diagram_table(14, false),
            Err(Error::TooLarge(_))
        ));
        assert!(diagram_table(14, true).is_ok());
        assert!(matches!(diagram_table(16, true), Err(Error::TooLarge(_))));
        assert!(matches!(diagram_table(5, false), Err(Error::DegreeParity(_))));
    }

    #[test]
    fn signs() {
        assert_eq!(d(&[(1, 2), (3, 4)]).sign(), 1);
        assert_eq!(d(&[(1, 3), (2, 4)]).sign(), -1);
        assert_eq!(d(&[(1, 4), (2, 3)]).sign(), 1);
    }

    #[test]
    fn action_examples() {
        let t = diagram_table(4, false).unwrap();
        let v = ChordVector::basis(4, t.index_of(&d(&[(1, 2), (3, 4)])));
        // Identity fixes everything.
        let id = Permutation::identity(4);
        assert_eq!(act(&id, &v).unwrap(), v);
        // The transposition (1 2) fixes (12)(34).
        let s = Permutation::adjacent(0, 4);
        assert_eq!(act(&s, &v).unwrap(), v);
        // The 4-cycle sends (12)(34) to (14)(23).
        let c = Permutation::cycle(4, 4);
        let got = act(&c, &v).unwrap();
        let expect = ChordVector::basis(4, t.index_of(&d(&[(1, 4), (2, 3)])));
        assert_eq!(got, expect);
        // Size mismatch is an error.
        assert!(matches!(
            act(&Permutation::identity(6), &v),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn pairing_examples() {
        // <C, C> = (2g)^k.
        for table_n in [2usize, 4, 6] {
            let t = diagram_table(table_n, false).unwrap();
            for c in t.diagrams() {
                for g in 1..=3u32 {
                    assert_eq!(
                        pairing_at(c, c, g),
                        BigInt::from(2 * g as i64).pow((table_n / 2) as u32)
                    );
                }
            }
        }
        // Union of (12)(34) and (13)(24) is a 4-cycle: one component.
        let a = d(&[(1, 2), (3, 4)]);
        let b = d(&[(1, 3), (2, 4)]);
        assert_eq!(union_components(&a, &b), 1);
        for g in 1..=4u32 {
            assert_eq!(pairing_at(&a, &b, g), BigInt::from(-(2 * g as i64)));
        }
    }

    #[test]
    fn gram_small() {
        // 2k = 4 at g = 1: diagonal 4, off-diagonal -2.
        let m = gram_matrix(4).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let v = m[i][j].eval(1);
                let expect = if i == j { 4 } else { -2 };
                assert_eq!(v, BigInt::from(expect));
                // Symmetry as polynomials.
                assert_eq!(m[i][j], m[j][i]);
            }
        }
    }

    #[test]
    fn serialization_roundtrip() {
        let t = diagram_table(6, false).unwrap();
        let mut v = ChordVector::zero(6);
        v.add_index(3, BigRational::new(BigInt::from(5), BigInt::from(2)));
        v.add_index(11, BigRational::from(BigInt::from(-7)));
        let rec = ChordVectorRecord::from_vector(&v);
        let json = serde_json::to_string(&rec).unwrap();
        let back: ChordVectorRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_vector(), v);
        assert_eq!(t.len(), 15);
        let text = chord_vector_dense_text(&v).unwrap();
        assert_eq!(text.split(", ").count(), 15);
        assert!(text.starts_with("0, 0, 5/2"));
    }
}
