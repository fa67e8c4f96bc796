//! Permutations of tensor slots and the group-algebra operators used to
//! cut out Lie elements, derivations and their signed (chord-side)
//! variants.
//!
//! Convention: a permutation is stored as an image list on 0-based slots;
//! `gamma` moves the content of slot `s` to slot `gamma(s)`, and products
//! compose as functions: `(gamma * delta)(s) = gamma(delta(s))`. Acting on
//! words this reads `(gamma . w)[gamma(s)] = w[s]`.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Permutation {
        let n = images.len();
        debug_assert!({
            let mut seen = vec![false; n];
            images.iter().all(|&i| {
                let fresh = !seen[i as usize];
                seen[i as usize] = true;
                fresh
            })
        });
        Permutation(images)
    }

    /// The cycle (1 2 ... k) embedded in degree n: slot i goes to i+1 for
    /// i < k-1, slot k-1 wraps to 0 (0-based), larger slots fixed.
    pub fn cycle(k: usize, n: usize) -> Permutation {
        assert!(k <= n && k >= 1);
        let mut img: Vec<u8> = (0..n as u8).collect();
        for i in 0..k {
            img[i] = if i + 1 == k { 0 } else { (i + 1) as u8 };
        }
        Permutation(img)
    }

    /// Adjacent transposition (i, i+1), 0-based.
    pub fn adjacent(i: usize, n: usize) -> Permutation {
        let mut img: Vec<u8> = (0..n as u8).collect();
        img.swap(i, i + 1);
        Permutation(img)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, s: usize) -> usize {
        self.0[s] as usize
    }

    pub fn image_list(&self) -> &[u8] {
        &self.0
    }

    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), rhs.len());
        Permutation(rhs.0.iter().map(|&s| self.0[s as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0u8; self.len()];
        for (s, &t) in self.0.iter().enumerate() {
            img[t as usize] = s as u8;
        }
        Permutation(img)
    }

    pub fn sign(&self) -> i64 {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                s = self.0[s] as usize;
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

    /// Relabels a word: output[gamma(s)] = input[s].
    pub fn act_word(&self, word: &[u8]) -> Vec<u8> {
        debug_assert_eq!(word.len(), self.len());
        let mut out = vec![0u8; word.len()];
        for (s, &c) in word.iter().enumerate() {
            out[self.0[s] as usize] = c;
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm{:?}", self.0)
    }
}

/// A formal integer combination of permutations of a fixed degree.
#[derive(Clone, Debug, Default)]
pub struct GroupAlgebraOperator {
    terms: Vec<(Permutation, i64)>,
}

impl GroupAlgebraOperator {
    pub fn identity(n: usize) -> GroupAlgebraOperator {
        GroupAlgebraOperator {
            terms: vec![(Permutation::identity(n), 1)],
        }
    }

    pub fn from_terms(terms: Vec<(Permutation, i64)>) -> GroupAlgebraOperator {
        GroupAlgebraOperator { terms }.merged()
    }

    pub fn terms(&self) -> &[(Permutation, i64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Group-algebra product; applied to a vector, `self` acts after `rhs`.
    pub fn compose(&self, rhs: &GroupAlgebraOperator) -> GroupAlgebraOperator {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (g, a) in &self.terms {
            for (h, b) in &rhs.terms {
                terms.push((g.compose(h), a * b));
            }
        }
        GroupAlgebraOperator { terms }.merged()
    }

    fn merged(mut self) -> GroupAlgebraOperator {
        use std::collections::HashMap;
        let mut map: HashMap<Permutation, i64> = HashMap::with_capacity(self.terms.len());
        for (g, c) in self.terms.drain(..) {
            *map.entry(g).or_insert(0) += c;
        }
        let mut terms: Vec<(Permutation, i64)> =
            map.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_by(|(a, _), (b, _)| a.0.cmp(&b.0));
        GroupAlgebraOperator { terms }
    }
}

/// sigma_k = (1 2 ... k) in degree n.
pub fn sigma(k: usize, n: usize) -> GroupAlgebraOperator {
    GroupAlgebraOperator::from_terms(vec![(Permutation::cycle(k, n), 1)])
}

/// p_k = (1 - sigma_k)(1 - sigma_{k-1}) ... (1 - sigma_2), embedded in
/// degree n acting on the first k slots. Images span the degree-k piece of
/// the free Lie algebra; on Lie elements it is multiplication by k.
pub fn p_op(k: usize, n: usize) -> GroupAlgebraOperator {
    let mut op = GroupAlgebraOperator::identity(n);
    for j in 2..=k {
        let factor = GroupAlgebraOperator::from_terms(vec![
            (Permutation::identity(n), 1),
            (Permutation::cycle(j, n), -1),
        ]);
        op = factor.compose(&op);
    }
    op
}

/// S_k = sum_{j=1..k} sigma_k^j, embedded in degree n.
pub fn s_op(k: usize, n: usize) -> GroupAlgebraOperator {
    let c = Permutation::cycle(k, n);
    let mut terms = Vec::with_capacity(k);
    let mut pow = c.clone();
    for _ in 0..k {
        terms.push((pow.clone(), 1));
        pow = c.compose(&pow);
    }
    GroupAlgebraOperator::from_terms(terms)
}

/// p'_k = (1 - (-1)^{k-1} sigma_k)(1 - (-1)^{k-2} sigma_{k-1}) ... (1 + sigma_2),
/// the signed variant used on the chord-diagram side.
pub fn p_prime_op(k: usize, n: usize) -> GroupAlgebraOperator {
    let mut op = GroupAlgebraOperator::identity(n);
    for j in 2..=k {
        let sign: i64 = if (j - 1) % 2 == 0 { -1 } else { 1 };
        let factor = GroupAlgebraOperator::from_terms(vec![
            (Permutation::identity(n), 1),
            (Permutation::cycle(j, n), sign),
        ]);
        op = factor.compose(&op);
    }
    op
}

/// S'_k = sum_{j=1..k} (-1)^{j(k-1)} sigma_k^j.
pub fn s_prime_op(k: usize, n: usize) -> GroupAlgebraOperator {
    let c = Permutation::cycle(k, n);
    let mut terms = Vec::with_capacity(k);
    let mut pow = c.clone();
    for j in 1..=k {
        let sign: i64 = if (j * (k - 1)) % 2 == 0 { 1 } else { -1 };
        terms.push((pow.clone(), sign));
        pow = c.compose(&pow);
    }
    GroupAlgebraOperator::from_terms(terms)
}

/// The derivation projector on the chord side:
/// S'_n . sigma_n . p'_{n-1} . sigma_n^{-1}.
pub fn derivation_operator(n: usize) -> GroupAlgebraOperator {
    let s = sigma(n, n);
    let s_inv = GroupAlgebraOperator::from_terms(vec![(Permutation::cycle(n, n).inverse(), 1)]);
    s_prime_op(n, n)
        .compose(&s)
        .compose(&p_prime_op(n - 1, n))
        .compose(&s_inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_sign() {
        let c3 = Permutation::cycle(3, 3);
        assert_eq!(c3.image(0), 1);
        assert_eq!(c3.image(2), 0);
        assert_eq!(c3.sign(), 1);
        assert_eq!(Permutation::adjacent(0, 4).sign(), -1);
        let id = c3.compose(&c3).compose(&c3);
        assert_eq!(id, Permutation::identity(3));
        assert_eq!(c3.compose(&c3.inverse()), Permutation::identity(3));
    }

    #[test]
    fn word_action_is_left_action() {
        let g = Permutation::cycle(3, 3);
        let h = Permutation::adjacent(0, 3);
        let w = vec![10u8, 11, 12];
        let lhs = g.compose(&h).act_word(&w);
        let rhs = g.act_word(&h.act_word(&w));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dynkin_on_words() {
        // p_3 applied to u (x) v (x) w gives the left-normed bracket
        // [[u,v],w] = uvw - vuw - wuv + wvu.
        let op = p_op(3, 3);
        let mut got: Vec<(Vec<u8>, i64)> = op
            .terms()
            .iter()
            .map(|(g, c)| (g.act_word(&[0, 1, 2]), *c))
            .collect();
        got.sort();
        let mut expect = vec![
            (vec![0u8, 1, 2], 1),
            (vec![1, 0, 2], -1),
            (vec![2, 0, 1], -1),
            (vec![2, 1, 0], 1),
        ];
        expect.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn operator_sizes() {
        assert_eq!(p_op(4, 4).len(), 8);
        assert_eq!(s_op(4, 4).len(), 4);
        assert_eq!(p_prime_op(3, 4).len(), 4);
        assert_eq!(derivation_operator(4).len(), 16);
    }
}
