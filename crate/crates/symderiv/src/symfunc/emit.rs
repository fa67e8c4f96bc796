//! Serialization of decompositions: JSON records and CSV rows in the
//! deterministic partition order.

use super::{Basis, VirtualCharacter};
use serde::Serialize;

#[derive(Serialize)]
struct TermRecord {
    partition: Vec<u32>,
    mult: i64,
}

#[derive(Serialize)]
struct CharacterRecord {
    degree: u32,
    basis: &'static str,
    terms: Vec<TermRecord>,
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::Gl => "GL",
        Basis::Sp => "Sp",
        Basis::Sl2 => "SL2",
    }
}

/// JSON form: {"degree":k,"basis":"Sp","terms":[{"partition":[3,1],"mult":2},...]}
pub fn character_to_json(degree: u32, c: &VirtualCharacter) -> String {
    let rec = CharacterRecord {
        degree,
        basis: basis_name(c.basis()),
        terms: c
            .ordered_terms()
            .into_iter()
            .map(|(p, m)| TermRecord {
                partition: p.parts().to_vec(),
                mult: m,
            })
            .collect(),
    };
    serde_json::to_string(&rec).expect("serialization cannot fail")
}

/// CSV form with columns (degree, partition, mult), one term per row.
pub fn character_to_csv(degree: u32, c: &VirtualCharacter) -> String {
    let mut out = String::from("degree,partition,mult\n");
    for (p, m) in c.ordered_terms() {
        out.push_str(&format!("{},\"[{}]\",{}\n", degree, p, m));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    #[test]
    fn json_and_csv_shapes() {
        let c = VirtualCharacter::from_terms(
            Basis::Sp,
            [
                (Partition::new(vec![3, 1]), 2),
                (Partition::new(vec![4]), 1),
            ],
        );
        let js = character_to_json(4, &c);
        assert_eq!(
            js,
            "{\"degree\":4,\"basis\":\"Sp\",\"terms\":[{\"partition\":[4],\"mult\":1},{\"partition\":[3,1],\"mult\":2}]}"
        );
        let csv = character_to_csv(4, &c);
        assert_eq!(csv, "degree,partition,mult\n4,\"[4]\",1\n4,\"[3,1]\",2\n");
    }
}
