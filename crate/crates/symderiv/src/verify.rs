//! Named verification suites: the published-table reproductions and the
//! element-level fixture computations, exposed both to the test suite and
//! to the command-line verifier. Every check returns a pass/fail record
//! with a short account of what was compared.

use crate::chords::{derivation_split, diagram_table, gram_apply};
use crate::deriv::{
    self, bracket, enomoto_satoh, epsilon, fixtures, h_invariant_basis, ideal_basis, is_in_h,
    is_in_j, is_invariant, lie_spider, normalization_factor, ortho_coordinates,
    DerivationElement,
};
use crate::error::Result;
use crate::exact::Echelon;
use crate::partitions::{dim_h_lambda, enumerate_partitions, eigenvalue_poly, Partition};
use crate::symfunc::{
    genus1_decompose, labute_rank, module_char, sp_invariant_dim, Basis, Module,
    VirtualCharacter,
};
use crate::tensors::{
    apply_tensor, kappa, kappa_d, lie_bracket, omega, phi_vector, wedge3, Letter,
    SparseTensor, Subspace,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Deserialize;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn ok(name: &str, detail: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &str, detail: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }

    fn of(name: &str, passed: bool, detail: impl Into<String>) -> CheckResult {
        if passed {
            CheckResult::ok(name, detail)
        } else {
            CheckResult::fail(name, detail)
        }
    }
}

fn guard(name: &str, body: impl FnOnce() -> Result<CheckResult>) -> CheckResult {
    match body() {
        Ok(r) => r,
        Err(e) => CheckResult::fail(name, format!("error: {e}")),
    }
}

/// Published stable dimension table (the genus-5 convention of the
/// dimension tables: the derivation column truncates components to height
/// five, the ideal and surface columns are the full character counts).
pub fn check_dimension_table() -> Vec<CheckResult> {
    let expect_h: [i64; 10] = [1, 0, 5, 3, 108, 650, 8795, 110610, 1710798, 29129790];
    let expect_j: [i64; 10] = [1, 0, 2, 1, 38, 210, 2831, 34591, 530466, 8980269];
    let expect_hs: [i64; 10] = [0, 0, 3, 2, 70, 440, 5964, 76019, 1180332, 20149521];
    let expect_l: [i64; 10] = [0, 0, 1, 2, 34, 259, 3215, 41858, 644758, 11111008];
    let expect_hg: [i64; 10] = [0, 0, 2, 0, 36, 181, 2749, 34161, 535574, 9038513];
    let mut out = Vec::new();
    for (i, k) in (2..=20u32).step_by(2).enumerate() {
        out.push(guard(&format!("dims-k{k}"), || {
            let h = truncated_invariant_dim(&module_char(Module::H, k)?, 5);
            let j = sp_invariant_dim(&module_char(Module::J, k)?);
            let l = sp_invariant_dim(&module_char(Module::Lg, k)?);
            let hs = h - j;
            let hg = hs - l;
            let got = (h, j, hs, l, hg);
            let expect = (
                expect_h[i],
                expect_j[i],
                expect_hs[i],
                expect_l[i],
                expect_hg[i],
            );
            Ok(CheckResult::of(
                &format!("dims-k{k}"),
                got == expect,
                format!("(h,j,h*,L,hg) = {got:?} expected {expect:?}"),
            ))
        }));
    }
    out
}

/// Invariant dimension of a virtual GL character with components
/// truncated to height <= g.
pub fn truncated_invariant_dim(c: &VirtualCharacter, g: u32) -> i64 {
    c.terms()
        .filter(|(p, _)| p.is_double_floor() && p.height() <= 2 * g)
        .map(|(_, m)| m)
        .sum()
}

#[derive(Deserialize)]
struct OrthoTables {
    tables: Vec<OrthoTable>,
}

#[derive(Deserialize)]
struct OrthoTable {
    two_k: u32,
    rows: Vec<OrthoRow>,
    cumulative: Vec<u64>,
}

#[derive(Deserialize)]
struct OrthoRow {
    genus: u32,
    entries: Vec<(Vec<u32>, u64)>,
}

/// Orthogonal decomposition tables for every even degree up to 20: each
/// (component, multiplicity, genus threshold) entry and the cumulative
/// genus rows.
pub fn check_orthogonal_tables() -> Vec<CheckResult> {
    let data: OrthoTables =
        serde_json::from_str(include_str!("../fixtures/ortho_tables.json")).expect("fixture");
    let mut out = Vec::new();
    for table in &data.tables {
        let two_k = table.two_k;
        let k = two_k / 2;
        out.push(guard(&format!("ortho-{two_k}"), || {
            let mut expected: std::collections::BTreeMap<Partition, u64> = Default::default();
            for row in &table.rows {
                for (parts, d) in &row.entries {
                    let lam = Partition::new(parts.clone());
                    if lam.height() != row.genus {
                        return Ok(CheckResult::fail(
                            &format!("ortho-{two_k}"),
                            format!("fixture row genus mismatch at [{lam}]"),
                        ));
                    }
                    expected.insert(lam, *d);
                }
            }
            // Every component: listed entries match, unlisted vanish.
            let mut per_genus: Vec<u64> = Vec::new();
            let mut running = 0u64;
            let max_genus = (k + 1).min(
                table
                    .cumulative
                    .len() as u32,
            );
            for g in 1..=max_genus {
                for lam in enumerate_partitions(k + 1, None) {
                    if lam.height() != g {
                        continue;
                    }
                    let dim = dim_h_lambda(&lam, k)?;
                    let expect = expected.get(&lam).copied().unwrap_or(0);
                    if dim != expect {
                        return Ok(CheckResult::fail(
                            &format!("ortho-{two_k}"),
                            format!("H_[{lam}] has dim {dim}, table says {expect}"),
                        ));
                    }
                    running += dim;
                }
                per_genus.push(running);
            }
            let want: Vec<u64> = table.cumulative.clone();
            Ok(CheckResult::of(
                &format!("ortho-{two_k}"),
                per_genus == want,
                format!("genus rows {per_genus:?}"),
            ))
        }));
    }
    out
}

/// Cross-check of the chord-space projections against the character
/// dimension formula for every component with 2k <= 10.
pub fn check_projection_dimensions() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for two_k in (2..=10usize).step_by(2) {
        out.push(guard(&format!("projection-{two_k}"), || {
            let split = derivation_split(two_k + 2)?;
            let k = (two_k / 2) as u32;
            let mut detail = Vec::new();
            for (eigen_label, vectors) in split.blocks() {
                let tensor_label = eigen_label.conjugate();
                let expect = dim_h_lambda(&tensor_label, k)? as usize;
                if vectors.len() != expect {
                    return Ok(CheckResult::fail(
                        &format!("projection-{two_k}"),
                        format!(
                            "F component for H_[{tensor_label}]: dim {} vs formula {expect}",
                            vectors.len()
                        ),
                    ));
                }
                if expect > 0 {
                    detail.push(format!("[{tensor_label}]:{expect}"));
                }
            }
            Ok(CheckResult::ok(
                &format!("projection-{two_k}"),
                detail.join(" "),
            ))
        }));
    }
    out
}

fn published_detector_rows() -> [[i64; 5]; 5] {
    [
        [18, -2, -16, 11, -3],
        [16, 4, -7, -8, 3],
        [4, 0, -3, -2, -1],
        [-2, -4, -2, 1, 1],
        [-2, -1, 1, 1, -2],
    ]
}

fn rational_vec(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&c| BigRational::from(BigInt::from(c))).collect()
}

fn scale_vec(v: &[i64], s: &BigInt) -> Vec<BigRational> {
    v.iter()
        .map(|&c| BigRational::from(s * BigInt::from(c)))
        .collect()
}

fn proportional(a: &[BigRational], b: &[i64]) -> bool {
    let bq = rational_vec(b);
    let Some(i0) = bq.iter().position(|c| !c.is_zero()) else {
        return a.iter().all(|c| c.is_zero());
    };
    if a[i0].is_zero() {
        return false;
    }
    let ratio = &a[i0] / &bq[i0];
    a.iter().zip(&bq).all(|(x, y)| x == &(y * &ratio))
}

/// The degree-6 fixture suite at a concrete genus.
pub fn check_weight6_fixtures(g: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let fix = fixtures::h6_fixture();
    let detector = match fixtures::h6_detector() {
        Ok(d) => d,
        Err(e) => return vec![CheckResult::fail("w6-detector", format!("{e}"))],
    };
    let published = published_detector_rows();

    // Eigen property identically in the genus (degree-4 polynomials;
    // five evaluation points pin the identity).
    out.push(guard(&format!("w6-eigen-g{g}"), || {
        for (v, label) in fix.vectors.iter().zip(&fix.labels) {
            let mu = eigenvalue_poly(&label.conjugate());
            for gg in 1..=5u32 {
                let lhs = gram_apply(v, gg)?;
                let rhs = v.scaled(&BigRational::from(mu.eval(gg as i64)));
                if lhs != rhs {
                    return Ok(CheckResult::fail(
                        &format!("w6-eigen-g{g}"),
                        format!("Gram action on the [{label}] vector at g={gg}"),
                    ));
                }
            }
        }
        Ok(CheckResult::ok(
            &format!("w6-eigen-g{g}"),
            "Gram C_i = mu C_i identically",
        ))
    }));

    // Membership and detector values of the realized basis.
    let vs: Vec<SparseTensor> = match fix
        .vectors
        .iter()
        .map(|v| phi_vector(v, g))
        .collect::<Result<Vec<_>>>()
    {
        Ok(v) => v,
        Err(e) => return vec![CheckResult::fail("w6-realize", format!("{e}"))],
    };
    out.push(guard(&format!("w6-membership-g{g}"), || {
        for (i, t) in vs.iter().enumerate() {
            if !is_in_h(t)? || !is_invariant(t)? {
                return Ok(CheckResult::fail(
                    &format!("w6-membership-g{g}"),
                    format!("v_{} fails membership", i + 1),
                ));
            }
        }
        Ok(CheckResult::ok(
            &format!("w6-membership-g{g}"),
            "Phi(C_i) lie in the invariant derivation space",
        ))
    }));
    out.push(guard(&format!("w6-detector-values-g{g}"), || {
        for (i, (t, label)) in vs.iter().zip(&fix.labels).enumerate() {
            let mu = eigenvalue_poly(&label.conjugate()).eval(g as i64);
            let got = kappa_d(t, &detector)?;
            if got != scale_vec(&published[i], &mu) {
                return Ok(CheckResult::fail(
                    &format!("w6-detector-values-g{g}"),
                    format!("K_D(v_{}) mismatch", i + 1),
                ));
            }
        }
        Ok(CheckResult::ok(
            &format!("w6-detector-values-g{g}"),
            "all five closed forms",
        ))
    }));

    // The bracket of the degree-3 highest-weight pair.
    out.push(guard(&format!("w6-hw-bracket-g{g}"), || {
        let xi = weight3_highest_vector(g)?;
        let eta = DerivationElement::unchecked(crate::tensors::iota(xi.tensor()));
        let b = bracket(&xi, &eta)?;
        let got = kappa_d(b.tensor(), &detector)?;
        let ok = proportional(&got, &[0, 0, 0, -2, 2]);
        Ok(CheckResult::of(
            &format!("w6-hw-bracket-g{g}"),
            ok,
            "K_D([xi, iota xi]) proportional to (0,0,0,-2,2)",
        ))
    }));

    // The wedge-generated element of the Johnson side (needs six pairs).
    out.push(guard("w6-phi-bracket", || {
        let gg = 6u32;
        let x = Letter::x;
        let y = Letter::y;
        let psi = bracket(
            &bracket(
                &DerivationElement::unchecked(wedge3(gg, x(1), x(2), x(5))),
                &DerivationElement::unchecked(wedge3(gg, x(3), x(4), y(5))),
            )?,
            &bracket(
                &DerivationElement::unchecked(wedge3(gg, x(1), x(2), x(6))),
                &DerivationElement::unchecked(wedge3(gg, x(3), y(4), y(6))),
            )?,
        )?;
        let yyy = DerivationElement::unchecked(wedge3(gg, y(1), y(2), y(3)));
        let phi_elt = bracket(&yyy, &bracket(&yyy, &psi)?)?;
        let got = kappa_d(phi_elt.tensor(), &detector)?;
        // The realized element carries an overall factor of 24 against
        // the published ray.
        let exact = got == scale_vec(&[4, -1, -4, 4, -4], &BigInt::from(24));
        let ray = proportional(&got, &[4, -1, -4, 4, -4]);
        Ok(CheckResult::of(
            "w6-phi-bracket",
            exact && ray,
            format!("K_D(phi) = {:?} = 24 (4,-1,-4,4,-4)", show_vals(&got)),
        ))
    }));

    // The two ideal elements and their evaluations (pinned at genus 3).
    if g == 3 {
        out.push(guard("w6-p-values", || {
            let (p1, p2) = boundary_pair(3);
            let got1 = kappa_d(&p1, &detector)?;
            let got2 = kappa_d(&p2, &detector)?;
            let ok = got1 == scale_vec(&[98, -7, -81, 23, -10], &BigInt::from(4))
                && got2 == scale_vec(&[0, -3, -3, 0, -1], &BigInt::from(24));
            Ok(CheckResult::of(
                "w6-p-values",
                ok,
                format!(
                    "K_D(p_1) = {:?}, K_D(p_2) = {:?}",
                    show_vals(&got1),
                    show_vals(&got2)
                ),
            ))
        }));
        out.push(guard("w6-linear-relations", || {
            // K_D(v_2 - 5v_3 - 4v_4 + 2v_5) + 6048 (0,-3,-3,0,-1) = 0 and
            // K_D(-36v_1 - 23v_2 - 101v_3 - 40v_4 + 50v_5)
            //   + 30240 (98,-7,-81,23,-10) = 0.
            let combo = |coeffs: [i64; 5]| -> SparseTensor {
                let mut t = SparseTensor::zero(3, 8);
                for (v, &c) in vs.iter().zip(&coeffs) {
                    t = t.add(&v.scaled(&BigRational::from(BigInt::from(c))));
                }
                t
            };
            let r1 = kappa_d(&combo([0, 1, -5, -4, 2]), &detector)?;
            let e1 = scale_vec(&[0, -3, -3, 0, -1], &BigInt::from(-6048));
            let r2 = kappa_d(&combo([-36, -23, -101, -40, 50]), &detector)?;
            let e2 = scale_vec(&[98, -7, -81, 23, -10], &BigInt::from(-30240));
            Ok(CheckResult::of(
                "w6-linear-relations",
                r1 == e1 && r2 == e2,
                "both published relations hold exactly",
            ))
        }));
        out.push(guard("w6-ideal-membership", || {
            // j_1 = v_2 - 5v_3 - 4v_4 + 2v_5 and
            // j_2 = 3v_1 + 3v_2 + 3v_3 - v_4 - 2v_5 lie in the ideal, and
            // 13 j_1 - 12 j_2 = -36v_1 - 23v_2 - 101v_3 - 40v_4 + 50v_5.
            let combo = |coeffs: [i64; 5]| -> SparseTensor {
                let mut t = SparseTensor::zero(3, 8);
                for (v, &c) in vs.iter().zip(&coeffs) {
                    t = t.add(&v.scaled(&BigRational::from(BigInt::from(c))));
                }
                t
            };
            let j1 = combo([0, 1, -5, -4, 2]);
            let j2 = combo([3, 3, 3, -1, -2]);
            let ideal7 = ideal_basis(3, 7)?;
            let members = is_in_j(&j1, &ideal7)? && is_in_j(&j2, &ideal7)?;
            let mut lhs = SparseTensor::zero(3, 8);
            lhs = lhs.add(&j1.scaled(&BigRational::from(BigInt::from(13))));
            lhs = lhs.add(&j2.scaled(&BigRational::from(BigInt::from(-12))));
            let identity = lhs == combo([-36, -23, -101, -40, 50]);
            Ok(CheckResult::of(
                "w6-ideal-membership",
                members && identity,
                "j_1, j_2 in the ideal kernel; 13 j_1 - 12 j_2 identity",
            ))
        }));
    }

    // Trace map: the Johnson-side combinations vanish, the ideal pair is
    // independent, and the kernel has invariant dimension 3.
    out.push(guard(&format!("w6-trace-g{g}"), || {
        let combo_norm = |coeffs: [i64; 5]| -> Result<DerivationElement> {
            let mut t = SparseTensor::zero(g, 8);
            for ((v, label), &c) in vs.iter().zip(&fix.labels).zip(&coeffs) {
                let factor = normalization_factor(label, g)?;
                t = t.add(&v.scaled(&(factor * BigRational::from(BigInt::from(c)))));
            }
            Ok(DerivationElement::unchecked(t))
        };
        let tau1 = combo_norm([3, -1, 8, 0, 5])?;
        let tau2 = combo_norm([6, 3, 36, 25, -25])?;
        let t1 = enomoto_satoh(&tau1)?;
        let t2 = enomoto_satoh(&tau2)?;
        if !t1.is_zero() || !t2.is_zero() {
            return Ok(CheckResult::fail(
                &format!("w6-trace-g{g}"),
                "tau combinations not killed by the trace",
            ));
        }
        // Rank of the trace on the invariant space is 2.
        let mut ech = Echelon::new();
        for t in &vs {
            let es = enomoto_satoh(&DerivationElement::unchecked(t.clone()))?;
            ech.insert(es.to_row());
        }
        let rank = ech.rank();
        // Invariant part of the degree-4 trace target is two-dimensional.
        // The trace target in derivation degree 4 consists of cyclic
        // words of length six.
        let a4 = cyclic_invariant_dim(g, 6)?;
        Ok(CheckResult::of(
            &format!("w6-trace-g{g}"),
            rank == 2 && a4 == 2,
            format!("trace rank {rank} (kernel 3), invariant trace target dim {a4}"),
        ))
    }));

    out
}

fn show_vals(v: &[BigRational]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

/// The highest-weight vector of a multiplicity-one isotypic component of
/// the degree-k derivation space: spiders on all letter tuples of the
/// target weight span the weight space, and the raising conditions cut
/// the line.
pub fn isotypic_highest_vector(g: u32, k: usize, target: &Partition) -> Result<DerivationElement> {
    let mut wt: Vec<i64> = target.parts().iter().map(|&p| p as i64).collect();
    wt.resize(g as usize, 0);
    let words = crate::tensors::weight_words(g, k + 2, &wt);
    let mut space = Subspace::new(g, k + 2);
    for w in &words {
        let letters: Vec<Letter> = w.iter().map(|&c| Letter::from_code(c)).collect();
        space.insert(lie_spider(g, &letters).tensor());
    }
    let hw = crate::tensors::highest_weight_vectors(&space, target)?;
    if hw.dim() != 1 {
        return Err(crate::error::Error::InternalInconsistency(format!(
            "[{target}] highest-weight space in degree {k} has dim {}",
            hw.dim()
        )));
    }
    Ok(DerivationElement::unchecked(hw.basis().remove(0)))
}

/// The highest-weight vector of the [3,1,1]-isotypic component of the
/// degree-3 derivation space at genus g >= 3, unique up to scale.
pub fn weight3_highest_vector(g: u32) -> Result<DerivationElement> {
    isotypic_highest_vector(g, 3, &Partition::new(vec![3, 1, 1]))
}

/// The two degree-6 ideal elements built from the symplectic class.
pub fn boundary_pair(g: u32) -> (SparseTensor, SparseTensor) {
    let x1 = SparseTensor::word(g, &[Letter::x(1)]);
    let y1 = SparseTensor::word(g, &[Letter::y(1)]);
    let x2 = SparseTensor::word(g, &[Letter::x(2)]);
    let y2 = SparseTensor::word(g, &[Letter::y(2)]);
    let w = omega(g);
    let inner1 = lie_bracket(&w, &lie_bracket(&y2, &lie_bracket(&x2, &lie_bracket(&w, &y1))));
    let inner2 = lie_bracket(&y2, &lie_bracket(&w, &lie_bracket(&x2, &lie_bracket(&w, &y1))));
    let s8 = crate::chords::s_op(8, 8);
    let p1 = apply_tensor(&s8, &x1.tensor(&inner1)).expect("degree 8");
    let p2 = apply_tensor(&s8, &x1.tensor(&inner2)).expect("degree 8");
    (p1, p2)
}

/// Dimension of the invariant part of the degree-m trace target (cyclic
/// coinvariants) at genus g.
pub fn cyclic_invariant_dim(g: u32, m: usize) -> Result<usize> {
    let table = diagram_table(m, false)?;
    let mut ech = Echelon::new();
    for d in table.diagrams() {
        let t = crate::tensors::phi(d, g);
        let mut cyc = deriv::CyclicTensor::zero(g, m);
        for (w, c) in t.terms() {
            cyc.add_word(&crate::tensors::unpack_word(w, m), c.clone());
        }
        ech.insert(cyc.to_row());
    }
    Ok(ech.rank())
}

/// The genus-one suite: trace vanishing on the highest-weight family and
/// the degree-10 kernel computation.
pub fn check_genus1_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.push(guard("g1-trace-vanishing", || {
        for k in 1..=4usize {
            let e = epsilon(2 * k, 1);
            if !is_in_h(e.tensor())? {
                return Ok(CheckResult::fail(
                    "g1-trace-vanishing",
                    format!("epsilon_{} not a derivation", 2 * k),
                ));
            }
            if !enomoto_satoh(&e)?.is_zero() {
                return Ok(CheckResult::fail(
                    "g1-trace-vanishing",
                    format!("trace of epsilon_{} nonzero", 2 * k),
                ));
            }
        }
        Ok(CheckResult::ok(
            "g1-trace-vanishing",
            "ES(epsilon_2k) = 0 for k = 1..4",
        ))
    }));
    out.push(guard("g1-sigma5", || {
        let fix = fixtures::genus1_fixture();
        let result = deriv::genus1_sigma5()?;
        let matrix_ok = result
            .detector_matrix
            .iter()
            .zip(&fix.detector_matrix)
            .all(|(got, want)| {
                got.iter()
                    .zip(want)
                    .all(|(a, b)| a == &BigInt::from(*b))
            });
        let relation_ok = result
            .relation
            .iter()
            .zip(&fix.relation)
            .all(|(a, b)| a == &BigInt::from(*b));
        Ok(CheckResult::of(
            "g1-sigma5",
            matrix_ok && relation_ok,
            format!(
                "detector matrix pinned; kernel relation {:?}",
                result
                    .relation
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
            ),
        ))
    }));
    out.push(guard("g1-degree10-dim", || {
        let basis = h_invariant_basis(1, 10)?;
        Ok(CheckResult::of(
            "g1-degree10-dim",
            basis.dim() == 3,
            format!("invariant dimension {} (expected 3)", basis.dim()),
        ))
    }));
    out
}

/// The unstable degree-6 table: all five columns at genus 1, 2 and 3 by
/// direct tensor computation.
pub fn check_unstable_table() -> Vec<CheckResult> {
    let expect: [[usize; 5]; 3] = [
        // h, j, h_*, L, h_g
        [1, 1, 0, 0, 0],
        [4, 2, 2, 1, 1],
        [5, 2, 3, 1, 2],
    ];
    (1..=3u32)
        .map(|g| {
            guard(&format!("unstable-6-g{g}"), || {
                let h = h_invariant_basis(g, 6)?.dim();
                let j = deriv::j_invariant_basis(g, 6)?.dim();
                let free_inv = free_lie_invariant_dim(g, 6)?;
                let ideal_inv = ideal_invariant_dim(g, 6)?;
                let l = free_inv - ideal_inv;
                let hs = h - j;
                let hg = hs - l;
                let got = [h, j, hs, l, hg];
                let want = expect[(g - 1) as usize];
                Ok(CheckResult::of(
                    &format!("unstable-6-g{g}"),
                    got == want,
                    format!("(h,j,h*,L,hg) = {got:?} expected {want:?}"),
                ))
            })
        })
        .collect()
}

/// Dimension of the invariant part of the free Lie algebra piece at genus
/// g: invariant tensors that are Lie elements.
pub fn free_lie_invariant_dim(g: u32, m: usize) -> Result<usize> {
    let table = diagram_table(m, false)?;
    let gens: Vec<SparseTensor> = table
        .diagrams()
        .iter()
        .map(|d| crate::tensors::phi(d, g))
        .collect();
    // c is in the kernel of (theta - m) exactly when the combination is a
    // Lie element.
    let op = crate::chords::p_op(m, m);
    let scale = BigRational::from(BigInt::from(m as i64));
    let images: Vec<SparseTensor> = gens
        .iter()
        .map(|t| Ok(apply_tensor(&op, t)?.sub(&t.scaled(&scale))))
        .collect::<Result<Vec<_>>>()?;
    Ok(kernel_dim_of_tensors(&images))
}

/// Dimension of the invariant part of the symplectic ideal piece.
pub fn ideal_invariant_dim(g: u32, m: usize) -> Result<usize> {
    let table = diagram_table(m, false)?;
    let ideal = ideal_basis(g, m)?;
    let residuals: Vec<SparseTensor> = table
        .diagrams()
        .iter()
        .map(|d| ideal.reduce(&crate::tensors::phi(d, g)))
        .collect();
    Ok(kernel_dim_of_tensors(&residuals))
}

fn kernel_dim_of_tensors(images: &[SparseTensor]) -> usize {
    // Kernel dimension of c -> sum c_i images_i via augmented elimination.
    let tag_base: u64 = 1 << 62;
    let mut ech = Echelon::new();
    let mut kernel = 0usize;
    for (i, t) in images.iter().enumerate() {
        let mut pairs: Vec<(u64, BigInt)> = t.to_row().iter_big().collect();
        pairs.push((tag_base + i as u64, BigInt::from(1)));
        let reduced = ech
            .reduce(crate::exact::Row::from_big_pairs(pairs))
            .normalize_primitive();
        match reduced.pivot() {
            Some(p) if p >= tag_base => {
                kernel += 1;
                ech.insert(reduced);
            }
            Some(_) => {
                ech.insert(reduced);
            }
            None => {}
        }
    }
    kernel
}

/// Wait-free identities tying independent pipelines together.
pub fn check_structural_identities() -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.push(guard("rank-agreement", || {
        for g in 2..=4u32 {
            for k in 1..=10u32 {
                let by_char = module_char(Module::Lg, k)?.gl_dimension(2 * g);
                if by_char != labute_rank(g, k) {
                    return Ok(CheckResult::fail(
                        "rank-agreement",
                        format!("g={g} k={k}"),
                    ));
                }
            }
        }
        Ok(CheckResult::ok(
            "rank-agreement",
            "surface ranks agree with character dimensions (g=2..4, k<=10)",
        ))
    }));
    out.push(guard("direct-sum", || {
        for k in 2..=12u32 {
            let h = module_char(Module::H, k)?;
            let sum = module_char(Module::J, k)?
                .add(&module_char(Module::Lg, k)?)
                .add(&module_char(Module::Hg, k)?);
            if h != sum {
                return Ok(CheckResult::fail("direct-sum", format!("k={k}")));
            }
        }
        Ok(CheckResult::ok(
            "direct-sum",
            "h = j + L + h_g as virtual characters (k<=12)",
        ))
    }));
    out.push(guard("invariant-dim-agreement", || {
        for k in 1..=10u32 {
            let via_char = sp_invariant_dim(&module_char(Module::H, 2 * k)?);
            let mut via_orth = 0u64;
            for lam in enumerate_partitions(k + 1, None) {
                via_orth += dim_h_lambda(&lam, k)?;
            }
            if via_char as u64 != via_orth {
                return Ok(CheckResult::fail(
                    "invariant-dim-agreement",
                    format!("2k={}", 2 * k),
                ));
            }
        }
        Ok(CheckResult::ok(
            "invariant-dim-agreement",
            "character count equals orthogonal sum (k<=10)",
        ))
    }));
    out.push(guard("duality-pairs", || {
        for n in [4usize, 6] {
            let table = diagram_table(n, false)?;
            for g in 1..=3u32 {
                for c in table.diagrams() {
                    for d in table.diagrams() {
                        let got = crate::tensors::alpha(c, &crate::tensors::phi(d, g))?;
                        let expect =
                            BigRational::from(crate::chords::pairing_at(c, d, g));
                        if got != expect {
                            return Ok(CheckResult::fail(
                                "duality-pairs",
                                format!("n={n} g={g}"),
                            ));
                        }
                    }
                }
            }
        }
        Ok(CheckResult::ok(
            "duality-pairs",
            "evaluation against realization equals the pairing (2k<=6, g<=3)",
        ))
    }));
    out.push(guard("eigen-identity", || {
        for n in [6usize, 8] {
            let split = derivation_split(n)?;
            for g in [3u32, 4] {
                for (label, vectors) in split.blocks() {
                    let mu = eigenvalue_poly(label).eval(g as i64);
                    for v in vectors {
                        let t = phi_vector(v, g)?;
                        let back = kappa(&t)?;
                        if back != v.scaled(&BigRational::from(mu.clone())) {
                            return Ok(CheckResult::fail(
                                "eigen-identity",
                                format!("n={n} g={g} [{label}]"),
                            ));
                        }
                    }
                }
            }
        }
        Ok(CheckResult::ok(
            "eigen-identity",
            "kappa(Phi(xi)) = mu xi on every component (2k+2 <= 8, two genera)",
        ))
    }));
    out.push(guard("weighted-stability", || {
        for two_k in [2usize, 4, 6] {
            let family = crate::chords::p_stable_basis(two_k)?;
            for g in [two_k as u32, two_k as u32 + 1] {
                let normalized = deriv::normalized_basis(two_k, g)?;
                for (label, _, elems) in &normalized.components {
                    let chords = family.component(label);
                    for (e, c) in elems.iter().zip(chords) {
                        if &kappa(e.tensor())? != c {
                            return Ok(CheckResult::fail(
                                "weighted-stability",
                                format!("2k={two_k} g={g}"),
                            ));
                        }
                    }
                }
            }
        }
        Ok(CheckResult::ok(
            "weighted-stability",
            "normalized bases contract to the same chord vectors at consecutive genera",
        ))
    }));
    out.push(guard("multiplicity-facts", || {
        for k in 1..=7u32 {
            let h = module_char(Module::H, 2 * k)?;
            let mut parts = vec![2u32, 2];
            parts.extend(std::iter::repeat(1).take((2 * k - 2) as usize));
            let m = h.coeff(&Partition::new(parts));
            let expect = if k % 2 == 1 { 1 } else { 0 };
            let col = Partition::new(vec![1; (2 * k + 2) as usize]);
            if m != expect || h.coeff(&col) != 0 {
                return Ok(CheckResult::fail("multiplicity-facts", format!("k={k}")));
            }
        }
        Ok(CheckResult::ok(
            "multiplicity-facts",
            "the two-column component appears exactly for odd k; the full column never",
        ))
    }));
    out.push(guard("genus1-table", || {
        #[derive(Deserialize)]
        struct G1 {
            rows: Vec<G1Row>,
        }
        #[derive(Deserialize)]
        struct G1Row {
            k: u32,
            terms: Vec<(u32, i64)>,
        }
        let data: G1 =
            serde_json::from_str(include_str!("../fixtures/genus1_table.json")).expect("fixture");
        for row in &data.rows {
            let got = genus1_decompose(row.k)?;
            let want = VirtualCharacter::from_terms(
                Basis::Sl2,
                row.terms.iter().map(|&(m, c)| {
                    let p = if m == 0 {
                        Partition::empty()
                    } else {
                        Partition::new(vec![m])
                    };
                    (p, c)
                }),
            );
            if got != want {
                return Ok(CheckResult::fail("genus1-table", format!("k={}", row.k)));
            }
        }
        Ok(CheckResult::ok(
            "genus1-table",
            "full genus-one decomposition table (k<=18)",
        ))
    }));
    out.push(guard("bracket-window", || {
        // Degree (3,3): the invariant bracket of [3,1,1]-isotypic inputs
        // has coordinates only in heights <= 3, with the [2,1,1] one
        // nonzero; degrees (1,5) confined similarly.
        let g = 3u32;
        let xi = weight3_highest_vector(g)?;
        let eta = DerivationElement::unchecked(crate::tensors::iota(xi.tensor()));
        let b = bracket(&xi, &eta)?;
        let inv = deriv::sp_invariant_part(b.tensor())?;
        let coords = ortho_coordinates(&DerivationElement::unchecked(inv))?;
        let mut saw_211 = false;
        for (label, comp) in &coords {
            if comp.is_zero() {
                continue;
            }
            if label.height() > 3 {
                return Ok(CheckResult::fail(
                    "bracket-window",
                    format!("coordinate [{label}] outside the height window"),
                ));
            }
            if label == &Partition::new(vec![2, 1, 1]) {
                saw_211 = true;
            }
        }
        if !saw_211 {
            return Ok(CheckResult::fail(
                "bracket-window",
                "the [2,1,1] coordinate vanished",
            ));
        }
        // Degrees (1, 5): the degree-1 space is [1,1,1]-isotypic and the
        // degree-5 input is the unique [5,1,1] highest-weight vector;
        // the window confines invariant coordinates to height <= 3.
        let a = DerivationElement::unchecked(wedge3(g, Letter::x(1), Letter::x(2), Letter::x(3)));
        let c = isotypic_highest_vector(g, 5, &Partition::new(vec![5, 1, 1]))?;
        let bc = bracket(&a, &c)?;
        let inv = deriv::sp_invariant_part(bc.tensor())?;
        let coords = ortho_coordinates(&DerivationElement::unchecked(inv))?;
        for (label, comp) in &coords {
            if !comp.is_zero() && 2 * label.height() > 3 + 3 {
                return Ok(CheckResult::fail(
                    "bracket-window",
                    format!("degree-(1,5) coordinate [{label}] outside the window"),
                ));
            }
        }
        Ok(CheckResult::ok(
            "bracket-window",
            "invariant bracket coordinates confined to the height window",
        ))
    }));
    out
}

/// Collected suites.
pub fn run_fixtures7() -> Vec<CheckResult> {
    let mut out = check_weight6_fixtures(3);
    out.extend(check_weight6_fixtures(4));
    // The detector closed forms at one more genus: the values scale by
    // the component eigenvalues and nothing else.
    out.push(guard("w6-detector-values-g5", || {
        let fix = fixtures::h6_fixture();
        let detector = fixtures::h6_detector()?;
        let published = published_detector_rows();
        for (i, (v, label)) in fix.vectors.iter().zip(&fix.labels).enumerate() {
            let t = phi_vector(v, 5)?;
            let got = kappa_d(&t, &detector)?;
            let mu = eigenvalue_poly(&label.conjugate()).eval(5);
            if got != scale_vec(&published[i], &mu) {
                return Ok(CheckResult::fail(
                    "w6-detector-values-g5",
                    format!("K_D(v_{}) mismatch at genus 5", i + 1),
                ));
            }
        }
        Ok(CheckResult::ok(
            "w6-detector-values-g5",
            "all five closed forms at the third genus",
        ))
    }));
    out
}

pub fn run_fixtures8() -> Vec<CheckResult> {
    check_genus1_suite()
}

pub fn run_properties() -> Vec<CheckResult> {
    let mut out = check_dimension_table();
    out.extend(check_orthogonal_tables());
    out.extend(check_structural_identities());
    out.extend(check_unstable_table());
    out
}

pub fn run_all() -> Vec<CheckResult> {
    let mut out = run_properties();
    out.extend(check_projection_dimensions());
    out.extend(run_fixtures7());
    out.extend(run_fixtures8());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unstable_table_matches() {
        for r in check_unstable_table() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn weight3_vector_is_unique_and_in_h() {
        let xi = weight3_highest_vector(3).unwrap();
        assert!(is_in_h(xi.tensor()).unwrap());
    }
}
