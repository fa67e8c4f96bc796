//! The acceptance suite: every published-number criterion as one
//! pass/fail line. Run with
//!
//!     cargo test -p symderiv --release --test acceptance -- --nocapture

use symderiv::verify;

fn report(results: Vec<verify::CheckResult>) -> (usize, usize) {
    let mut pass = 0;
    let mut fail = 0;
    for r in results {
        if r.passed {
            pass += 1;
            println!("PASS {} - {}", r.name, r.detail);
        } else {
            fail += 1;
            println!("FAIL {} - {}", r.name, r.detail);
        }
    }
    (pass, fail)
}

#[test]
fn criterion_1_stable_dimension_table() {
    let (pass, fail) = report(verify::check_dimension_table());
    assert_eq!(fail, 0, "{fail} dimension rows failed ({pass} passed)");
}

#[test]
fn criterion_2_orthogonal_decomposition_tables() {
    let (pass, fail) = report(verify::check_orthogonal_tables());
    assert_eq!(fail, 0, "{fail} tables failed ({pass} passed)");
}

#[test]
fn criterion_3_projection_cross_check() {
    let (pass, fail) = report(verify::check_projection_dimensions());
    assert_eq!(fail, 0, "{fail} degrees failed ({pass} passed)");
}

#[test]
fn criterion_4_weight6_fixture_suite() {
    let mut results = verify::check_weight6_fixtures(3);
    results.extend(verify::check_weight6_fixtures(4));
    let (pass, fail) = report(results);
    assert_eq!(fail, 0, "{fail} fixture checks failed ({pass} passed)");
}

#[test]
fn criterion_5_genus_one_suite() {
    let (pass, fail) = report(verify::check_genus1_suite());
    assert_eq!(fail, 0, "{fail} genus-one checks failed ({pass} passed)");
}

#[test]
fn criterion_6_unstable_degree6_table() {
    let (pass, fail) = report(verify::check_unstable_table());
    assert_eq!(fail, 0, "{fail} unstable rows failed ({pass} passed)");
}

#[test]
fn criterion_7_structural_identities() {
    let (pass, fail) = report(verify::check_structural_identities());
    assert_eq!(fail, 0, "{fail} identities failed ({pass} passed)");
}
