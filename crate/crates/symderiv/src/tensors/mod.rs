//! Sparse exact tensors over the symplectic basis: the symplectic element,
//! the realization of chord diagrams as invariant tensors and its dual
//! evaluation, contractions, the tensor metric, the symplectic
//! automorphism, and degree-one derivation generators.

mod lie;
mod subspace;

pub use lie::{dsw_degree, is_lie, left_normed, lie_bracket};
pub use subspace::{highest_weight_vectors, sp_invariants, weight_words, Subspace};

use crate::chords::{diagram_table, ChordDiagram, ChordVector, Permutation};
use crate::error::{Error, Result};
use crate::exact::Row;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A basis letter of the symplectic vector space: x_1 < y_1 < x_2 < ... in
/// the fixed alphabet order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(u8);

impl Letter {
    /// x_i, 1-based.
    pub fn x(i: u32) -> Letter {
        Letter((2 * (i - 1)) as u8)
    }

    /// y_i, 1-based.
    pub fn y(i: u32) -> Letter {
        Letter((2 * (i - 1) + 1) as u8)
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn from_code(c: u8) -> Letter {
        Letter(c)
    }

    /// 1-based symplectic pair index.
    pub fn pair_index(self) -> u32 {
        (self.0 / 2) as u32 + 1
    }

    pub fn is_x(self) -> bool {
        self.0 % 2 == 0
    }

    /// The dual letter under the symplectic form.
    pub fn partner(self) -> Letter {
        Letter(self.0 ^ 1)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}",
            if self.is_x() { "x" } else { "y" },
            self.pair_index()
        )
    }
}

/// Intersection number of two basis letters: x_i . y_i = 1 = -(y_i . x_i),
/// everything else 0.
pub fn intersection(u: Letter, v: Letter) -> i64 {
    if u.partner() == v {
        if u.is_x() {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// Words are packed four bits per letter, leftmost slot in the high
/// nibble, so numeric order is the length-lexicographic alphabet order.
pub fn pack_word(letters: &[u8]) -> u64 {
    debug_assert!(letters.len() <= 16);
    let mut key = 0u64;
    for &c in letters {
        debug_assert!(c < 16);
        key = (key << 4) | c as u64;
    }
    key
}

pub fn unpack_word(key: u64, n: usize) -> Vec<u8> {
    let mut out = vec![0u8; n];
    let mut k = key;
    for i in (0..n).rev() {
        out[i] = (k & 15) as u8;
        k >>= 4;
    }
    out
}

/// An element of the n-th tensor power of the genus-g symplectic space:
/// a finite map from words to exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseTensor {
    g: u32,
    n: usize,
    terms: BTreeMap<u64, BigRational>,
}

impl SparseTensor {
    pub fn zero(g: u32, n: usize) -> SparseTensor {
        assert!(n <= 16, "tensor degree limited to 16 slots");
        assert!(g >= 1 && g <= 7, "genus limited to the packed alphabet");
        SparseTensor {
            g,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(g: u32, letters: &[Letter]) -> SparseTensor {
        let mut t = SparseTensor::zero(g, letters.len());
        let codes: Vec<u8> = letters.iter().map(|l| l.code()).collect();
        t.add_word(pack_word(&codes), BigRational::one());
        t
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn coeff(&self, word: u64) -> BigRational {
        self.terms.get(&word).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeff_of(&self, letters: &[Letter]) -> BigRational {
        let codes: Vec<u8> = letters.iter().map(|l| l.code()).collect();
        self.coeff(pack_word(&codes))
    }

    pub fn add_word(&mut self, word: u64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        debug_assert!(unpack_word(word, self.n).iter().all(|&l| (l as u32) < 2 * self.g));
        let e = self.terms.entry(word).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn add(&self, rhs: &SparseTensor) -> SparseTensor {
        assert_eq!((self.g, self.n), (rhs.g, rhs.n));
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_word(w, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SparseTensor) -> SparseTensor {
        assert_eq!((self.g, self.n), (rhs.g, rhs.n));
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_word(w, -c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &BigRational) -> SparseTensor {
        if c.is_zero() {
            return SparseTensor::zero(self.g, self.n);
        }
        SparseTensor {
            g: self.g,
            n: self.n,
            terms: self.terms.iter().map(|(&w, v)| (w, v * c)).collect(),
        }
    }

    /// Concatenation of tensor factors.
    pub fn tensor(&self, rhs: &SparseTensor) -> SparseTensor {
        assert_eq!(self.g, rhs.g);
        let mut out = SparseTensor::zero(self.g, self.n + rhs.n);
        for (w1, c1) in self.terms() {
            for (w2, c2) in rhs.terms() {
                out.add_word((w1 << (4 * rhs.n)) | w2, c1 * c2);
            }
        }
        out
    }

    /// True when `rhs` is a nonzero rational multiple of `self`.
    pub fn proportional_to(&self, rhs: &SparseTensor) -> bool {
        if self.is_zero() || rhs.is_zero() {
            return self.is_zero() && rhs.is_zero();
        }
        if self.support() != rhs.support() {
            return false;
        }
        let (w0, c0) = self.terms().next().unwrap();
        let d0 = rhs.coeff(w0);
        if d0.is_zero() {
            return false;
        }
        let ratio = d0 / c0;
        rhs == &self.scaled(&ratio)
    }

    /// Integer row over packed-word keys (clears denominators); used for
    /// echelon computations.
    pub fn to_row(&self) -> Row {
        let mut denom = BigInt::one();
        for c in self.terms.values() {
            denom = denom.lcm(c.denom());
        }
        Row::from_big_pairs(
            self.terms
                .iter()
                .map(|(&w, c)| (w, (c * BigRational::from(denom.clone())).to_integer())),
        )
    }

    pub fn from_row(g: u32, n: usize, row: &Row) -> SparseTensor {
        let mut t = SparseTensor::zero(g, n);
        for (w, c) in row.iter_big() {
            t.add_word(w, BigRational::from(c));
        }
        t
    }

    /// Re-tags the tensor at a larger genus (the inclusion of alphabets).
    pub fn embedded(&self, g: u32) -> SparseTensor {
        assert!(g >= self.g);
        SparseTensor {
            g,
            n: self.n,
            terms: self.terms.clone(),
        }
    }

    /// Kills all words that use letters beyond genus g (the projection
    /// dual to the inclusion).
    pub fn projected(&self, g: u32) -> SparseTensor {
        assert!(g <= self.g);
        let mut out = SparseTensor::zero(g, self.n);
        'words: for (&w, c) in &self.terms {
            for l in unpack_word(w, self.n) {
                if (l as u32) >= 2 * g {
                    continue 'words;
                }
            }
            out.add_word(w, c.clone());
        }
        out
    }
}

impl fmt::Debug for SparseTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tensor(g={}, n={}; ", self.g, self.n)?;
        for (i, (w, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if i > 8 {
                write!(f, "... [{} terms]", self.support())?;
                break;
            }
            write!(f, "{c}*")?;
            for l in unpack_word(w, self.n) {
                write!(f, "{}", Letter::from_code(l))?;
            }
        }
        write!(f, ")")
    }
}

/// The symplectic element: sum of x_i (x) y_i - y_i (x) x_i.
pub fn omega(g: u32) -> SparseTensor {
    let mut t = SparseTensor::zero(g, 2);
    for i in 1..=g {
        t.add_word(
            pack_word(&[Letter::x(i).code(), Letter::y(i).code()]),
            BigRational::one(),
        );
        t.add_word(
            pack_word(&[Letter::y(i).code(), Letter::x(i).code()]),
            -BigRational::one(),
        );
    }
    t
}

/// Slot permutation action: the factor in slot s moves to slot gamma(s).
pub fn act_tensor(gamma: &Permutation, t: &SparseTensor) -> Result<SparseTensor> {
    if gamma.len() != t.degree() {
        return Err(Error::DimensionMismatch(format!(
            "permutation of degree {} on a {}-tensor",
            gamma.len(),
            t.degree()
        )));
    }
    let mut out = SparseTensor::zero(t.genus(), t.degree());
    for (w, c) in t.terms() {
        let word = unpack_word(w, t.degree());
        out.add_word(pack_word(&gamma.act_word(&word)), c.clone());
    }
    Ok(out)
}

/// Applies a group-algebra operator to a tensor.
pub fn apply_tensor(
    op: &crate::chords::GroupAlgebraOperator,
    t: &SparseTensor,
) -> Result<SparseTensor> {
    let mut out = SparseTensor::zero(t.genus(), t.degree());
    for (gamma, coeff) in op.terms() {
        let part = act_tensor(gamma, t)?;
        out = out.add(&part.scaled(&BigRational::from(BigInt::from(*coeff))));
    }
    Ok(out)
}

/// The invariant tensor attached to a chord diagram: the s-th symplectic
/// factor is placed into slots (i_s, j_s), weighted by the diagram sign.
pub fn phi(c: &ChordDiagram, g: u32) -> SparseTensor {
    let n = c.vertices();
    let k = n / 2;
    let sign = BigRational::from(BigInt::from(c.sign()));
    let mut out = SparseTensor::zero(g, n);
    // One choice per factor: a pair index and an orientation.
    let mut word = vec![0u8; n];
    place(c, g, 0, k, &mut word, sign, &mut out);
    return out;

    fn place(
        c: &ChordDiagram,
        g: u32,
        s: usize,
        k: usize,
        word: &mut Vec<u8>,
        coeff: BigRational,
        out: &mut SparseTensor,
    ) {
        if s == k {
            out.add_word(pack_word(word), coeff);
            return;
        }
        let (a, b) = c.pairs()[s];
        let (a, b) = ((a - 1) as usize, (b - 1) as usize);
        for i in 1..=g {
            word[a] = Letter::x(i).code();
            word[b] = Letter::y(i).code();
            place(c, g, s + 1, k, word, coeff.clone(), out);
            word[a] = Letter::y(i).code();
            word[b] = Letter::x(i).code();
            place(c, g, s + 1, k, word, -coeff.clone(), out);
        }
    }
}

/// Linear extension of `phi` to chord vectors.
pub fn phi_vector(v: &ChordVector, g: u32) -> Result<SparseTensor> {
    let table = diagram_table(v.vertices(), true)?;
    let mut out = SparseTensor::zero(g, v.vertices());
    for (i, c) in v.entries() {
        out = out.add(&phi(table.diagram_at(i), g).scaled(c));
    }
    Ok(out)
}

/// The dual evaluation: alpha_C(u_1 (x) ... (x) u_2k) = sgn C times the
/// product of intersection numbers over the chords.
pub fn alpha(c: &ChordDiagram, t: &SparseTensor) -> Result<BigRational> {
    if c.vertices() != t.degree() {
        return Err(Error::DimensionMismatch(format!(
            "alpha on {} vertices against a {}-tensor",
            c.vertices(),
            t.degree()
        )));
    }
    let mut acc = BigRational::zero();
    for (w, coeff) in t.terms() {
        let word = unpack_word(w, t.degree());
        let mut prod = 1i64;
        for &(a, b) in c.pairs() {
            let f = intersection(
                Letter::from_code(word[(a - 1) as usize]),
                Letter::from_code(word[(b - 1) as usize]),
            );
            if f == 0 {
                prod = 0;
                break;
            }
            prod *= f;
        }
        if prod != 0 {
            acc += coeff * BigRational::from(BigInt::from(prod * c.sign()));
        }
    }
    Ok(acc)
}

/// The full contraction vector: sum over all diagrams C of alpha_C(T) C.
pub fn kappa(t: &SparseTensor) -> Result<ChordVector> {
    if t.degree() % 2 != 0 {
        return Err(Error::DegreeParity(format!(
            "contraction vector needs even degree, got {}",
            t.degree()
        )));
    }
    let table = diagram_table(t.degree(), true)?;
    let mut out = ChordVector::zero(t.degree());
    for (i, d) in table.diagrams().iter().enumerate() {
        out.add_index(i as u32 + 1, alpha(d, t)?);
    }
    Ok(out)
}

/// Restriction of the contraction vector to the coordinates of a detector,
/// in the given order.
pub fn kappa_d(t: &SparseTensor, detector: &[ChordDiagram]) -> Result<Vec<BigRational>> {
    detector.iter().map(|d| alpha(d, t)).collect()
}

/// Contraction of slots (i, j), 1-based, i < j: multiplies by the
/// intersection number and deletes both slots.
pub fn contract(t: &SparseTensor, i: usize, j: usize) -> Result<SparseTensor> {
    let n = t.degree();
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::IndexError(format!(
            "contraction slots ({i},{j}) in degree {n}"
        )));
    }
    let mut out = SparseTensor::zero(t.genus(), n - 2);
    for (w, c) in t.terms() {
        let word = unpack_word(w, n);
        let f = intersection(
            Letter::from_code(word[i - 1]),
            Letter::from_code(word[j - 1]),
        );
        if f == 0 {
            continue;
        }
        let mut rest = Vec::with_capacity(n - 2);
        for (s, &l) in word.iter().enumerate() {
            if s != i - 1 && s != j - 1 {
                rest.push(l);
            }
        }
        out.add_word(pack_word(&rest), c * BigRational::from(BigInt::from(f)));
    }
    Ok(out)
}

/// The tensor-power pairing: the product of slotwise intersection numbers,
/// extended bilinearly.
pub fn tensor_pairing(a: &SparseTensor, b: &SparseTensor) -> Result<BigRational> {
    if a.degree() != b.degree() {
        return Err(Error::DimensionMismatch(format!(
            "pairing of degrees {} and {}",
            a.degree(),
            b.degree()
        )));
    }
    let n = a.degree();
    let mut acc = BigRational::zero();
    for (w, c) in a.terms() {
        let word = unpack_word(w, n);
        // The only partner word with nonzero product pairs every letter.
        let mut partner = Vec::with_capacity(n);
        let mut sign = 1i64;
        for &l in &word {
            let letter = Letter::from_code(l);
            partner.push(letter.partner().code());
            if !letter.is_x() {
                sign = -sign;
            }
        }
        let d = b.coeff(pack_word(&partner));
        if !d.is_zero() {
            acc += c * d * BigRational::from(BigInt::from(sign));
        }
    }
    Ok(acc)
}

/// The symplectic automorphism x_i -> y_i, y_i -> -x_i, letterwise.
pub fn iota(t: &SparseTensor) -> SparseTensor {
    let n = t.degree();
    let mut out = SparseTensor::zero(t.genus(), n);
    for (w, c) in t.terms() {
        let word = unpack_word(w, n);
        let mut image = Vec::with_capacity(n);
        let mut sign = 1i64;
        for &l in &word {
            let letter = Letter::from_code(l);
            if letter.is_x() {
                image.push(letter.partner().code());
            } else {
                image.push(letter.partner().code());
                sign = -sign;
            }
        }
        out.add_word(pack_word(&image), c * BigRational::from(BigInt::from(sign)));
    }
    out
}

/// The degree-one derivation attached to u ^ v ^ w:
/// u (x) [v,w] + v (x) [w,u] + w (x) [u,v].
pub fn wedge3(g: u32, u: Letter, v: Letter, w: Letter) -> SparseTensor {
    let word = |a: Letter| SparseTensor::word(g, &[a]);
    let term = |a: Letter, b: Letter, c: Letter| {
        word(a).tensor(&lie_bracket(&word(b), &word(c)))
    };
    term(u, v, w).add(&term(v, w, u)).add(&term(w, u, v))
}

/// Serialized form: {"g":3,"n":8,"terms":[["x1y1...",num,den],...]}.
#[derive(Serialize, Deserialize)]
pub struct TensorRecord {
    pub g: u32,
    pub n: usize,
    pub terms: Vec<(String, String, String)>,
}

impl TensorRecord {
    pub fn from_tensor(t: &SparseTensor) -> TensorRecord {
        TensorRecord {
            g: t.genus(),
            n: t.degree(),
            terms: t
                .terms()
                .map(|(w, c)| {
                    let word: String = unpack_word(w, t.degree())
                        .into_iter()
                        .map(|l| Letter::from_code(l).to_string())
                        .collect();
                    (word, c.numer().to_string(), c.denom().to_string())
                })
                .collect(),
        }
    }

    pub fn to_tensor(&self) -> SparseTensor {
        let mut t = SparseTensor::zero(self.g, self.n);
        for (word, num, den) in &self.terms {
            let letters = parse_word(word);
            t.add_word(
                pack_word(&letters),
                BigRational::new(num.parse().unwrap(), den.parse().unwrap()),
            );
        }
        t
    }
}

fn parse_word(s: &str) -> Vec<u8> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let is_x = chars[i] == 'x';
        let mut j = i + 1;
        let mut idx = 0u32;
        while j < chars.len() && chars[j].is_ascii_digit() {
            idx = idx * 10 + chars[j].to_digit(10).unwrap();
            j += 1;
        }
        out.push(if is_x {
            Letter::x(idx).code()
        } else {
            Letter::y(idx).code()
        });
        i = j;
    }
    out
}
