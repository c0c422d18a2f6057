use std::collections::BTreeSet;

use sgsmooth_core::orbits::{
    classical_orbits, classical_types_up_to, criterion_equivalence_sweep, distinguished_table,
    exposed_root_sweep, f4_levi_table, grading_dims, is_distinguished, levi_grading,
    stored_d_rows, weighted_dynkin, check_distinguished_criterion, OrbitLabel,
    WeightedDynkinDiagram,
};
use sgsmooth_core::rootsys::{build_root_system, levi_factors, DynkinType, RootSystem};

fn rs(s: &str) -> RootSystem {
    build_root_system(s.parse::<DynkinType>().unwrap()).unwrap()
}

#[test]
fn computed_d_diagrams_match_stored_rows() {
    let mut diagrams = 0;
    for n in 4..=7 {
        let r = rs(&format!("D{n}"));
        let stored = stored_d_rows(n).unwrap();
        let computed: Vec<(Vec<u32>, WeightedDynkinDiagram)> = classical_orbits(&r)
            .unwrap()
            .into_iter()
            .filter(|o| is_distinguished(&r, o))
            .map(|o| {
                let w = weighted_dynkin(&r, &o).unwrap();
                (o.parts().unwrap().to_vec(), w)
            })
            .collect();
        assert_eq!(computed.len(), stored.len(), "D{n}");
        for row in &stored {
            assert!(computed.contains(row), "D{n} row {:?}", row.0);
        }
        diagrams += computed.len();
    }
    assert_eq!(diagrams, 10);
}

#[test]
fn d4_subregular_chain_and_fork() {
    let r = rs("D4");
    let w = weighted_dynkin(&r, &OrbitLabel::Partition(vec![5, 3])).unwrap();
    assert_eq!(w.labels, vec![2, 0, 2, 2]);
}

#[test]
fn distinguished_counts() {
    for (t, n) in [("D4", 2), ("D5", 2), ("D6", 3), ("D7", 3), ("E6", 3), ("E7", 6)] {
        let rows = distinguished_table(t.parse().unwrap()).unwrap();
        assert_eq!(rows.len(), n, "{t}");
    }
}

#[test]
fn exceptional_rows_are_even_and_distinguished() {
    for t in ["E6", "E7"] {
        let r = rs(t);
        let levi = levi_factors(&r, &(0..r.rank()).collect()).unwrap();
        for row in distinguished_table(t.parse().unwrap()).unwrap() {
            assert!(row.provenance.is_some());
            assert!(row.diagram.labels.iter().all(|&l| l == 0 || l == 2));
            let g = grading_dims(&r, &row.diagram).unwrap();
            assert_eq!(g.get(1), 0);
            assert!(check_distinguished_criterion(&levi, &row.diagram).unwrap(), "{t} {}", row.orbit);
        }
    }
}

#[test]
fn f4_levi_rows() {
    let f4 = rs("F4");
    let table = f4_levi_table();
    assert_eq!(table.len(), 4);
    for entry in table {
        let subset: BTreeSet<usize> = entry.embedding.iter().copied().collect();
        let levi = levi_factors(&f4, &subset).unwrap();
        assert_eq!(levi.factors.len(), 1);
        assert_eq!(levi.factors[0].dynkin_type, entry.factor, "{}", entry.label);
        // Reorder labels from the factor's numbering to increasing ambient index.
        let mut ambient: Vec<(usize, u8)> =
            entry.embedding.iter().copied().zip(entry.diagram.labels.iter().copied()).collect();
        ambient.sort();
        let w = WeightedDynkinDiagram::new(ambient.into_iter().map(|(_, l)| l).collect());
        assert!(w.labels.iter().all(|&l| l == 0 || l == 2));
        let g = levi_grading(&levi, &w).unwrap();
        assert_eq!(g.get(1), 0);
        assert!(check_distinguished_criterion(&levi, &w).unwrap(), "{}", entry.label);
    }
}

#[test]
fn exposed_roots_carry_label_two_through_rank_seven() {
    let report = exposed_root_sweep(&classical_types_up_to(7)).unwrap();
    assert!(report.passed(), "{:?}", report.violations);
    assert_eq!(report.levis_skipped, 0);
    let exceptional: Vec<DynkinType> = ["E6", "E7", "F4"].iter().map(|s| s.parse().unwrap()).collect();
    assert!(exposed_root_sweep(&exceptional).unwrap().passed());
}

#[test]
fn partition_rule_matches_dimension_criterion() {
    let report = criterion_equivalence_sweep(&classical_types_up_to(7)).unwrap();
    assert!(report.passed(), "{:?}", report.mismatches);
    assert!(report.distinguished > 0);
}
