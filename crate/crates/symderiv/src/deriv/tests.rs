use super::*;
use crate::tensors::{contract, dsw_degree, is_lie, iota, sp_invariants, tensor_pairing, wedge3};
use num_traits::{Signed, ToPrimitive};

fn x(i: u32) -> Letter {
    Letter::x(i)
}
fn y(i: u32) -> Letter {
    Letter::y(i)
}
fn rat(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

#[test]
fn wedge3_is_spider_and_in_h() {
    for g in 2..=3u32 {
        let w = wedge3(g, x(1), x(2), y(1));
        let s = lie_spider(g, &[x(1), x(2), y(1)]);
        assert_eq!(&w, s.tensor());
        assert!(is_in_h(&w).unwrap());
    }
}

#[test]
fn spider_cyclic_invariance() {
    let s = lie_spider(2, &[x(1), x(2), y(2), y(1)]);
    let rotated = act_tensor(&rotate_first_to_last(4), s.tensor()).unwrap();
    assert_eq!(&rotated, s.tensor());
    assert!(is_in_h(s.tensor()).unwrap());
}

#[test]
fn spider_bracket_identity() {
    // [l(u_1..u_k, x_{k+3}), l(y_{k+3}, u_{k+1}, u_{k+2})] = l(u_1..u_{k+2})
    // at k = 2, genus 6, with legs drawn from the x-side so that no
    // cross contractions interfere. This pins every sign convention in
    // the bracket.
    let g = 6u32;
    let u = [x(1), x(2), x(3), x(4)];
    let a = lie_spider(g, &[u[0], u[1], x(5)]);
    let b = lie_spider(g, &[y(5), u[2], u[3]]);
    let got = bracket(&a, &b).unwrap();
    let expect = lie_spider(g, &u);
    assert_eq!(got.tensor(), expect.tensor());
}

#[test]
fn bracket_antisymmetry_and_membership() {
    let g = 3u32;
    let a = lie_spider(g, &[x(1), x(2), x(3)]);
    let self_bracket = bracket(&a, &a).unwrap();
    assert!(self_bracket.is_zero());
    let b = lie_spider(g, &[y(1), x(2), y(3)]);
    let ab = bracket(&a, &b).unwrap();
    let ba = bracket(&b, &a).unwrap();
    assert_eq!(ab.tensor(), &ba.tensor().scaled(&rat(-1)));
    assert!(is_in_h(ab.tensor()).unwrap());
    // Genus mismatch is rejected.
    let c = lie_spider(2, &[x(1), x(2), y(1)]);
    assert!(matches!(bracket(&a, &c), Err(Error::GenusMismatch(_))));
}

#[test]
fn h_project_properties() {
    let g = 2u32;
    // Projection of a plain word lands in h.
    let t = SparseTensor::word(g, &[x(1), x(2), y(2), y(1)]);
    let p = h_project(&t).unwrap();
    assert!(is_in_h(p.tensor()).unwrap());
    // Linearity.
    let s = SparseTensor::word(g, &[y(1), x(2), x(2), y(2)]);
    let lhs = h_project(&t.scaled(&rat(3)).add(&s.scaled(&rat(-2)))).unwrap();
    let rhs = h_project(&t)
        .unwrap()
        .scaled(&rat(3))
        .add(&h_project(&s).unwrap().scaled(&rat(-2)));
    assert_eq!(lhs.tensor(), rhs.tensor());
    // On h itself the operator is multiplication by (k+1)(k+2).
    let spider = lie_spider(g, &[x(1), x(2), y(2), y(1)]);
    let scaled = h_project(spider.tensor()).unwrap();
    assert_eq!(scaled.tensor(), &spider.tensor().scaled(&rat(3 * 4)));
}

#[test]
fn h_project_rank_degree_two() {
    // The projection of the full tensor square of degree 4 has rank
    // dim h(2) = dim [2,2]_GL at GL(2g).
    let g = 2u32;
    let mut space = Subspace::new(g, 4);
    for w in 0..(2 * g as u64).pow(4) {
        let letters: Vec<u8> = (0..4)
            .map(|s| ((w >> (2 * s)) & 3) as u8)
            .collect();
        let t = SparseTensor::word(
            g,
            &letters
                .iter()
                .map(|&c| Letter::from_code(c))
                .collect::<Vec<_>>(),
        );
        space.insert(&h_project(&t).unwrap().into_tensor());
    }
    assert_eq!(
        BigInt::from(space.dim() as i64),
        crate::partitions::dim_gl_irrep(&Partition::new(vec![2, 2]), 2 * g)
    );
}

#[test]
fn raw_tensor_not_in_h() {
    // omega (x) x_1 is not cyclically invariant before projection.
    let t = omega(2).tensor(&SparseTensor::word(2, &[x(1)]));
    assert!(!is_in_h(&t).unwrap());
}

#[test]
fn epsilon_expansion_and_membership() {
    // 2k = 2: the displayed expansion.
    let e2 = epsilon(2, 1);
    let x1 = SparseTensor::word(1, &[x(1)]);
    let y1 = SparseTensor::word(1, &[y(1)]);
    let x2chain = left_normed(1, &[x(1), x(1), y(1)]);
    let x1chain = left_normed(1, &[x(1), y(1)]);
    let expect = y1
        .tensor(&x2chain)
        .scaled(&rat(2))
        .add(&x1.tensor(&lie_bracket(&x1chain, &y1)).scaled(&rat(2)));
    assert_eq!(e2.tensor(), &expect);
    for two_k in [2usize, 4, 6] {
        let e = epsilon(two_k, 1);
        assert!(is_in_h(e.tensor()).unwrap(), "2k={two_k}");
        assert!(!e.is_zero());
    }
    // Proportional to the doubled-tip Lie spider in degree two.
    let spider = lie_spider(1, &[y(1), x(1), x(1), y(1)]);
    assert!(e2.tensor().proportional_to(spider.tensor()));
}

#[test]
fn enomoto_satoh_kills_epsilon() {
    for two_k in [2usize, 4, 6, 8] {
        let e = epsilon(two_k, 1);
        assert!(enomoto_satoh(&e).unwrap().is_zero(), "2k={two_k}");
    }
}

#[test]
fn ideal_small_degrees() {
    // Degree 2: the symplectic class alone.
    for g in 1..=3u32 {
        let i2 = ideal_basis(g, 2).unwrap();
        assert_eq!(i2.dim(), 1);
        assert!(i2.contains(&omega(g)));
        // Degree 3 has dimension 2g.
        let i3 = ideal_basis(g, 3).unwrap();
        assert_eq!(i3.dim(), 2 * g as usize);
    }
    // dim I_g(k) = free rank - surface rank at g = 2, k <= 6.
    for k in 2..=6usize {
        let i = ideal_basis(2, k).unwrap();
        let expect = crate::symfunc::free_lie_rank(2, k as u32)
            - crate::symfunc::labute_rank(2, k as u32);
        assert_eq!(BigInt::from(i.dim() as i64), expect, "k={k}");
    }
}

#[test]
fn j_space_small() {
    // Degree 2: one-dimensional, spanned by the boundary element.
    for g in 1..=2u32 {
        let j2 = j_space(g, 2).unwrap();
        assert_eq!(j2.dim(), 1);
        let mut boundary = SparseTensor::zero(g, 4);
        for i in 1..=g {
            let xi = SparseTensor::word(g, &[x(i)]);
            let yi = SparseTensor::word(g, &[y(i)]);
            boundary = boundary
                .add(&xi.tensor(&lie_bracket(&yi, &omega(g))))
                .sub(&yi.tensor(&lie_bracket(&xi, &omega(g))));
        }
        assert!(j2.contains(&boundary), "g={g}");
        assert!(is_in_h(&boundary).unwrap());
    }
}

#[test]
fn j_invariants_degree_six() {
    // The unstable row of the degree-6 table: dims (1, 2, 2) at g=1,2,3,
    // inside h^Sp of dims (1, 4, 5).
    let expect_h = [1usize, 4, 5];
    let expect_j = [1usize, 2, 2];
    for (i, g) in (1..=3u32).enumerate() {
        let h = h_invariant_basis(g, 6).unwrap();
        assert_eq!(h.dim(), expect_h[i], "h at g={g}");
        let j = j_invariant_basis(g, 6).unwrap();
        assert_eq!(j.dim(), expect_j[i], "j at g={g}");
    }
    // Genus-1 degree-6 cross-check via the full kernel.
    let j6 = j_space(1, 6).unwrap();
    let inv = sp_invariants(&j6).unwrap();
    assert_eq!(inv.dim(), 1);
}

#[test]
fn p_stability_of_j() {
    // Projection of the genus-(g+1) kernel lands in the genus-g kernel.
    for k in [2usize, 4] {
        let big = j_space(2, k).unwrap();
        let small = j_space(1, k).unwrap();
        for t in big.basis() {
            let projected = t.projected(1);
            assert!(small.contains(&projected), "k={k}");
        }
    }
}

#[test]
fn i_stability_of_bracket_and_membership() {
    // Embedding commutes with the bracket and preserves membership.
    let a2 = lie_spider(2, &[x(1), x(2), y(1)]);
    let b2 = lie_spider(2, &[y(2), x(1), y(1)]);
    let ab2 = bracket(&a2, &b2).unwrap();
    let a3 = DerivationElement::unchecked(a2.tensor().embedded(3));
    let b3 = DerivationElement::unchecked(b2.tensor().embedded(3));
    let ab3 = bracket(&a3, &b3).unwrap();
    assert_eq!(&ab2.tensor().embedded(3), ab3.tensor());
    assert!(is_in_h(ab3.tensor()).unwrap());
    // Letter-killing projection of a derivation element stays one.
    let c = lie_spider(3, &[x(3), x(2), y(2), y(3)]);
    let projected = c.tensor().projected(2);
    assert!(is_in_h(&projected).unwrap());
}

#[test]
fn kappa_i_stability() {
    // The contraction vector is blind to the ambient genus.
    let t = lie_spider(2, &[x(1), x(2), y(2), y(1)]);
    let k2 = kappa(t.tensor()).unwrap();
    let k3 = kappa(&t.tensor().embedded(3)).unwrap();
    assert_eq!(k2, k3);
}

#[test]
fn fixture_vectors_are_eigen_and_in_h() {
    // Gram C_i = mu C_i identically in g (degree-4 polynomials: equality
    // at five genera is an identity), and Phi(C_i) lies in h(6)^Sp.
    let fix = fixtures::h6_fixture();
    for (v, label) in fix.vectors.iter().zip(&fix.labels) {
        let mu = eigenvalue_poly(&label.conjugate());
        for g in 1..=5u32 {
            let lhs = crate::chords::gram_apply(v, g).unwrap();
            let rhs = v.scaled(&BigRational::from(mu.eval(g as i64)));
            assert_eq!(lhs, rhs, "label {label:?} at g={g}");
        }
        for g in 3..=4u32 {
            let t = phi_vector(v, g).unwrap();
            assert!(is_in_h(&t).unwrap(), "membership of {label:?} at g={g}");
            assert!(is_invariant(&t).unwrap(), "invariance of {label:?} at g={g}");
        }
    }
}

#[test]
fn fixture_span_matches_projected_basis() {
    // The published vectors span the same components as the generated
    // p-stable basis.
    let fix = fixtures::h6_fixture();
    let family = crate::chords::p_stable_basis(6).unwrap();
    for (v, label) in fix.vectors.iter().zip(&fix.labels) {
        let ours = family.component(label);
        let rows: Vec<Row> = ours.iter().map(|c| c.to_row()).collect();
        assert!(
            express_over(&rows, &v.to_row()).is_some(),
            "published [{label}] vector inside the generated component"
        );
    }
}

#[test]
fn detector_values_of_basis() {
    // K_D(v_i) = mu_i(g) * (detector coordinates of C_i) at g = 3 and 4.
    let fix = fixtures::h6_fixture();
    let detector = fixtures::h6_detector().unwrap();
    let published: [[i64; 5]; 5] = [
        [18, -2, -16, 11, -3],
        [16, 4, -7, -8, 3],
        [4, 0, -3, -2, -1],
        [-2, -4, -2, 1, 1],
        [-2, -1, 1, 1, -2],
    ];
    for g in 3..=4u32 {
        for (i, (v, label)) in fix.vectors.iter().zip(&fix.labels).enumerate() {
            let t = phi_vector(v, g).unwrap();
            let values = crate::tensors::kappa_d(&t, &detector).unwrap();
            let mu = eigenvalue_poly(&label.conjugate()).eval(g as i64);
            let expect: Vec<BigRational> = published[i]
                .iter()
                .map(|&c| BigRational::from(&mu * BigInt::from(c)))
                .collect();
            assert_eq!(values, expect, "v_{} at g={g}", i + 1);
        }
    }
}

#[test]
fn ortho_coordinates_of_basis_vectors() {
    // Each v_lambda^i is supported on its single component.
    let basis = v_basis(6, 3).unwrap();
    for (label, _, elems) in &basis.components {
        for e in elems {
            let coords = ortho_coordinates(e).unwrap();
            let nonzero: Vec<&Partition> = coords
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(l, _)| l)
                .collect();
            assert_eq!(nonzero, vec![label], "component of v in {label:?}");
        }
    }
    // The zero element has all-zero coordinates.
    let zero = DerivationElement::unchecked(SparseTensor::zero(3, 8));
    let coords = ortho_coordinates(&zero).unwrap();
    assert!(coords.iter().all(|(_, c)| c.is_zero()));
}

#[test]
fn normalized_basis_unstable_error() {
    // The [1^4] component normalizes by mu_[4], which vanishes at g = 3.
    assert!(matches!(
        normalization_factor(&Partition::new(vec![1, 1, 1, 1]), 3),
        Err(Error::UnstableGenus(_))
    ));
    // All surviving degree-6 components normalize fine at g = 3 and the
    // basis construction succeeds.
    assert!(normalized_basis(6, 3).is_ok());
}

#[test]
fn weighted_stability() {
    // kappa of each normalized element is the chord vector itself,
    // independent of the genus, for 2k <= 6.
    for two_k in [2usize, 4, 6] {
        let family = crate::chords::p_stable_basis(two_k).unwrap();
        for g in [two_k as u32, two_k as u32 + 1] {
            let normalized = normalized_basis(two_k, g).unwrap();
            for (label, _, elems) in &normalized.components {
                let chords = family.component(label);
                for (e, c) in elems.iter().zip(chords) {
                    assert_eq!(&kappa(e.tensor()).unwrap(), c, "{label:?} g={g}");
                }
            }
        }
    }
}

#[test]
fn dsw_and_contract_consistency() {
    // K_12 of omega is the scalar 2g; membership tests replay the free
    // Lie structure used throughout.
    let w = omega(2);
    let c = contract(&w, 1, 2).unwrap();
    assert_eq!(c.coeff(0), rat(4));
    assert!(is_lie(&left_normed(2, &[x(1), x(2), y(1)])));
    assert!(dsw_degree(&SparseTensor::word(2, &[x(1), x(2)])).is_err());
}

#[test]
fn invariant_projection_identity() {
    // The invariant projection fixes invariant tensors and is killed by
    // the pairing against nothing (projection of a non-invariant word has
    // the same contraction vector).
    let g = 2u32;
    let t = phi_vector(
        &ChordVector::basis(4, 2),
        g,
    )
    .unwrap();
    assert_eq!(sp_invariant_part(&t).unwrap(), t);
    let word = SparseTensor::word(g, &[x(1), y(1), x(2), y(2)]);
    let proj = sp_invariant_part(&word).unwrap();
    assert_eq!(kappa(&proj).unwrap(), kappa(&word).unwrap());
    assert!(is_invariant(&proj).unwrap());
    assert!(!is_invariant(&word).unwrap());
    // mu(T, T) > 0 for nonzero invariant T.
    assert!(tensor_pairing(&proj, &proj).unwrap().is_positive());
}

#[test]
fn iota_fixes_isotypic_components() {
    // iota is symplectic, so it preserves the orthogonal components.
    let basis = v_basis(6, 3).unwrap();
    for (label, _, elems) in &basis.components {
        for e in elems {
            let rotated = DerivationElement::unchecked(iota(e.tensor()));
            let coords = ortho_coordinates(&rotated).unwrap();
            for (l, c) in coords {
                if !c.is_zero() {
                    assert_eq!(&l, label);
                }
            }
        }
    }
}
