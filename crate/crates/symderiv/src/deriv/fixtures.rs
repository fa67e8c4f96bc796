//! Published reference data for the degree-6 invariant space and the
//! genus-one degree-10 computation, shipped as JSON files and embedded at
//! build time.

use crate::chords::{diagram_table, ChordDiagram, ChordVector};
use crate::error::Result;
use crate::partitions::Partition;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;
use std::collections::BTreeMap;

/// The degree-6 reference basis: five integer chord vectors on 8 vertices
/// with their component labels, and the detector indices.
pub struct H6Fixture {
    pub vectors: Vec<ChordVector>,
    /// Tensor-side component label of each vector.
    pub labels: Vec<Partition>,
    pub detector_indices: Vec<u32>,
}

#[derive(Deserialize)]
struct H6Raw {
    n: usize,
    detector_indices: Vec<u32>,
    labels: BTreeMap<String, Vec<u32>>,
    vectors: BTreeMap<String, Vec<i64>>,
}

/// Loads the embedded degree-6 fixture.
pub fn h6_fixture() -> H6Fixture {
    let raw: H6Raw =
        serde_json::from_str(include_str!("../../fixtures/h6_basis.json")).expect("fixture parses");
    let mut vectors = Vec::new();
    let mut labels = Vec::new();
    for i in 1..=5u32 {
        let key = format!("C{i}");
        let coords = &raw.vectors[&key];
        assert_eq!(coords.len(), 105);
        let mut v = ChordVector::zero(raw.n);
        for (j, &c) in coords.iter().enumerate() {
            v.add_index(j as u32 + 1, BigRational::from(BigInt::from(c)));
        }
        vectors.push(v);
        labels.push(Partition::new(raw.labels[&key].clone()));
    }
    H6Fixture {
        vectors,
        labels,
        detector_indices: raw.detector_indices,
    }
}

/// The degree-6 detector: five diagrams on 8 vertices.
pub fn h6_detector() -> Result<Vec<ChordDiagram>> {
    let fix = h6_fixture();
    let table = diagram_table(8, false)?;
    Ok(fix
        .detector_indices
        .iter()
        .map(|&i| table.diagram_at(i).clone())
        .collect())
}

/// The genus-one degree-10 reference data: detector and generator
/// diagrams on 12 vertices, the published evaluation matrix and the
/// kernel relation.
pub struct Genus1Fixture {
    pub detectors: Vec<ChordDiagram>,
    pub generators: Vec<ChordDiagram>,
    pub detector_matrix: Vec<Vec<i64>>,
    pub relation: Vec<i64>,
}

#[derive(Deserialize)]
struct Genus1Raw {
    n: usize,
    detectors: Vec<Vec<(u8, u8)>>,
    generators: Vec<Vec<(u8, u8)>>,
    detector_matrix: Vec<Vec<i64>>,
    relation: Vec<i64>,
}

pub fn genus1_fixture() -> Genus1Fixture {
    let raw: Genus1Raw = serde_json::from_str(include_str!("../../fixtures/genus1_deg10.json"))
        .expect("fixture parses");
    assert_eq!(raw.n, 12);
    Genus1Fixture {
        detectors: raw
            .detectors
            .into_iter()
            .map(ChordDiagram::new)
            .collect(),
        generators: raw
            .generators
            .into_iter()
            .map(ChordDiagram::new)
            .collect(),
        detector_matrix: raw.detector_matrix,
        relation: raw.relation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_load() {
        let h6 = h6_fixture();
        assert_eq!(h6.vectors.len(), 5);
        assert_eq!(h6.detector_indices, vec![1, 2, 3, 8, 14]);
        assert_eq!(h6.labels[0], Partition::new(vec![4]));
        // Detector coordinates of the first vector match its published
        // evaluation row.
        let v1 = &h6.vectors[0];
        let got: Vec<i64> = h6
            .detector_indices
            .iter()
            .map(|&i| {
                use num_traits::ToPrimitive;
                v1.coeff(i).to_integer().to_i64().unwrap()
            })
            .collect();
        assert_eq!(got, vec![18, -2, -16, 11, -3]);

        let g1 = genus1_fixture();
        assert_eq!(g1.detectors.len(), 3);
        assert_eq!(g1.generators.len(), 3);
        assert_eq!(g1.relation, vec![41, -51, 4]);
    }
}
