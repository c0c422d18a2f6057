//! Exhaustive checks over Levi subsets and classical orbits.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    check_distinguished_criterion, classical_orbits, distinguished_table, full_levi,
    is_distinguished, verify_exposed_weight_two, weighted_dynkin, WeightedDynkinDiagram,
};
use crate::error::Result;
use crate::rootsys::{build_root_system, levi_factors, DynkinType, Family};

/// `A_1..A_r`, `B_2..B_r`, `C_2..C_r` and `D_4..D_r`.
pub fn classical_types_up_to(max_rank: usize) -> Vec<DynkinType> {
    let mut out = Vec::new();
    for (family, start) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 4)] {
        for r in start..=max_rank {
            out.push(DynkinType::new(family, r).expect("admissible"));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExposedViolation {
    pub ambient: String,
    pub subset: Vec<usize>,
    pub diagrams: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExposedSweepReport {
    pub ambients: Vec<String>,
    pub levis_checked: u64,
    /// Levi subsets with a factor lacking a diagram table.
    pub levis_skipped: u64,
    pub diagram_tuples_checked: u64,
    pub violations: Vec<ExposedViolation>,
}

impl ExposedSweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.diagram_tuples_checked > 0
    }
}

fn cartesian(tables: &[Vec<WeightedDynkinDiagram>]) -> Vec<Vec<WeightedDynkinDiagram>> {
    tables.iter().fold(vec![Vec::new()], |acc, choices| {
        acc.iter()
            .flat_map(|prefix| {
                choices.iter().map(move |w| {
                    let mut next = prefix.clone();
                    next.push(w.clone());
                    next
                })
            })
            .collect()
    })
}

/// For every proper Levi subset of every ambient type and every choice of
/// distinguished diagram on its factors, each exposed root has label 2.
pub fn exposed_root_sweep(ambients: &[DynkinType]) -> Result<ExposedSweepReport> {
    let systems = ambients
        .iter()
        .map(|&t| build_root_system(t))
        .collect::<Result<Vec<_>>>()?;
    let per_ambient = systems
        .par_iter()
        .map(|rs| -> Result<(u64, u64, u64, Vec<ExposedViolation>)> {
            let rank = rs.rank();
            let (mut checked, mut skipped, mut tuples) = (0, 0, 0);
            let mut violations = Vec::new();
            for mask in 0u32..(1 << rank) - 1 {
                let subset: BTreeSet<usize> = (0..rank).filter(|i| mask >> i & 1 == 1).collect();
                let levi = levi_factors(rs, &subset)?;
                let tables: Option<Vec<Vec<WeightedDynkinDiagram>>> = levi
                    .factors
                    .iter()
                    .map(|f| {
                        distinguished_table(f.dynkin_type)
                            .ok()
                            .map(|rows| rows.into_iter().map(|r| r.diagram).collect())
                    })
                    .collect();
                let Some(tables) = tables else {
                    skipped += 1;
                    continue;
                };
                checked += 1;
                for choice in cartesian(&tables) {
                    tuples += 1;
                    if !verify_exposed_weight_two(&levi, &choice)? {
                        violations.push(ExposedViolation {
                            ambient: rs.dynkin_type.to_string(),
                            subset: subset.iter().copied().collect(),
                            diagrams: choice.iter().map(ToString::to_string).collect(),
                        });
                    }
                }
            }
            Ok((checked, skipped, tuples, violations))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = ExposedSweepReport {
        ambients: systems.iter().map(|rs| rs.dynkin_type.to_string()).collect(),
        levis_checked: 0,
        levis_skipped: 0,
        diagram_tuples_checked: 0,
        violations: Vec::new(),
    };
    for (c, s, t, v) in per_ambient {
        report.levis_checked += c;
        report.levis_skipped += s;
        report.diagram_tuples_checked += t;
        report.violations.extend(v);
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionMismatch {
    pub group: String,
    pub orbit: String,
    pub partition_rule: bool,
    pub dimension_rule: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub groups: Vec<String>,
    pub orbits_checked: u64,
    pub distinguished: u64,
    pub mismatches: Vec<CriterionMismatch>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.orbits_checked > 0
    }
}

/// The partition rule for distinguishedness against
/// `dim g(λ,0) = dim g(λ,2) + dim Z` on the computed diagram.
pub fn criterion_equivalence_sweep(types: &[DynkinType]) -> Result<CriterionReport> {
    let mut report = CriterionReport {
        groups: Vec::new(),
        orbits_checked: 0,
        distinguished: 0,
        mismatches: Vec::new(),
    };
    for &t in types {
        let rs = build_root_system(t)?;
        report.groups.push(t.to_string());
        let levi = full_levi(&rs);
        for o in classical_orbits(&rs)? {
            let by_parts = is_distinguished(&rs, &o);
            let by_dims = check_distinguished_criterion(&levi, &weighted_dynkin(&rs, &o)?)?;
            report.orbits_checked += 1;
            report.distinguished += u64::from(by_parts);
            if by_parts != by_dims {
                report.mismatches.push(CriterionMismatch {
                    group: t.to_string(),
                    orbit: o.to_string(),
                    partition_rule: by_parts,
                    dimension_rule: by_dims,
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps() {
        let types = classical_types_up_to(4);
        assert!(exposed_root_sweep(&types).unwrap().passed());
        let r = criterion_equivalence_sweep(&types).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
    }

    #[test]
    fn exceptional_ambients_use_stored_tables() {
        let types: Vec<DynkinType> = ["F4", "E6", "G2"].iter().map(|s| s.parse().unwrap()).collect();
        let r = exposed_root_sweep(&types).unwrap();
        assert!(r.passed());
    }
}
