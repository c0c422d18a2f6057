//! Nilpotent orbits: partitions for the classical types, stored labels for `E_6`
//! and `E_7`, weighted Dynkin diagrams and the gradings they induce.

mod sweeps;
mod tables;

pub use sweeps::{
    classical_types_up_to, criterion_equivalence_sweep, exposed_root_sweep, CriterionMismatch,
    CriterionReport, ExposedSweepReport, ExposedViolation,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{
    build_root_system, levi_factors, DynkinType, Family, LeviSubset, RootSystem,
};

/// Labels `⟨α_i, λ⟩` on the simple roots, in Bourbaki order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightedDynkinDiagram {
    pub labels: Vec<u8>,
}

impl WeightedDynkinDiagram {
    pub fn new(labels: Vec<u8>) -> Self {
        Self { labels }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            labels: vec![0; rank],
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.labels.iter().all(|&l| l == 0 || l == 2)
    }
}

impl fmt::Display for WeightedDynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(u8::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbitLabel {
    /// Jordan type of the orbit in the natural representation, weakly decreasing.
    Partition(Vec<u32>),
    /// A stored exceptional orbit, or the zero orbit `"0"` of any type.
    Named {
        label: String,
        diagram: WeightedDynkinDiagram,
    },
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Partition(parts) => {
                let s: Vec<String> = parts.iter().map(u32::to_string).collect();
                write!(f, "({})", s.join(","))
            }
            OrbitLabel::Named { label, .. } => f.write_str(label),
        }
    }
}

impl OrbitLabel {
    /// Parse `"2,1"`, `"(5,3)"`, or a stored label such as `"E7(a3)"` (case-insensitive).
    /// `"0"` denotes the zero orbit of any type.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t);
        if inner == "0" {
            return Ok(match natural_dimension(rs.dynkin_type) {
                Some(n) => OrbitLabel::Partition(vec![1; n as usize]),
                None => OrbitLabel::Named {
                    label: "0".into(),
                    diagram: WeightedDynkinDiagram::zero(rs.rank()),
                },
            });
        }
        let looks_numeric = !inner.is_empty()
            && inner
                .chars()
                .all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace());
        if looks_numeric {
            let parts: Vec<u32> = inner
                .split(',')
                .map(|p| p.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::MalformedOrbit(s.to_string()))?;
            if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::MalformedOrbit(s.to_string()));
            }
            let o = OrbitLabel::Partition(parts);
            validate_orbit(rs, &o)?;
            return Ok(o);
        }
        let t_type = rs.dynkin_type;
        let rows = match t_type.family {
            Family::E => tables::stored_e(t_type.rank),
            _ => None,
        }
        .ok_or_else(|| Error::InvalidOrbit {
            orbit: s.to_string(),
            group: t_type.to_string(),
            reason: "no stored orbit labels for this type".into(),
        })?;
        let wanted = t.to_ascii_lowercase();
        rows.iter()
            .find(|r| {
                r.label.to_ascii_lowercase() == wanted
                    || r.aliases.iter().any(|a| a.to_ascii_lowercase() == wanted)
            })
            .map(|r| OrbitLabel::Named {
                label: r.label.to_string(),
                diagram: WeightedDynkinDiagram::new(r.labels.to_vec()),
            })
            .ok_or_else(|| Error::InvalidOrbit {
                orbit: s.to_string(),
                group: t_type.to_string(),
                reason: "unknown orbit label".into(),
            })
    }

    pub fn parts(&self) -> Option<&[u32]> {
        match self {
            OrbitLabel::Partition(p) => Some(p),
            OrbitLabel::Named { .. } => None,
        }
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn multiplicities(parts: &[u32]) -> BTreeMap<u32, usize> {
    let mut m = BTreeMap::new();
    for &p in parts {
        *m.entry(p).or_default() += 1;
    }
    m
}

/// Size of the natural representation whose Jordan types index the orbits.
pub fn natural_dimension(t: DynkinType) -> Option<u32> {
    let n = t.rank as u32;
    match t.family {
        Family::A => Some(n + 1),
        Family::B => Some(2 * n + 1),
        Family::C | Family::D => Some(2 * n),
        _ => None,
    }
}

fn partition_admissible(family: Family, parts: &[u32]) -> bool {
    let mult = multiplicities(parts);
    match family {
        Family::A => true,
        Family::B | Family::D => mult.iter().all(|(&p, &m)| p % 2 == 1 || m % 2 == 0),
        Family::C => mult.iter().all(|(&p, &m)| p % 2 == 0 || m % 2 == 0),
        _ => false,
    }
}

pub fn validate_orbit(rs: &RootSystem, o: &OrbitLabel) -> Result<()> {
    let t = rs.dynkin_type;
    let invalid = |reason: &str| Error::InvalidOrbit {
        orbit: o.to_string(),
        group: t.to_string(),
        reason: reason.to_string(),
    };
    match o {
        OrbitLabel::Partition(parts) => {
            let n = natural_dimension(t)
                .ok_or_else(|| invalid("partitions label orbits of classical types only"))?;
            if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(invalid("parts must be positive and weakly decreasing"));
            }
            if parts.iter().sum::<u32>() != n {
                return Err(invalid(&format!("parts must sum to {n}")));
            }
            if !partition_admissible(t.family, parts) {
                return Err(invalid(match t.family {
                    Family::C => "odd parts must have even multiplicity",
                    _ => "even parts must have even multiplicity",
                }));
            }
            Ok(())
        }
        OrbitLabel::Named { label, diagram } => {
            if diagram.len() != rs.rank() {
                return Err(invalid("diagram length differs from the rank"));
            }
            if label == "0" && diagram.labels.iter().all(|&l| l == 0) {
                return Ok(());
            }
            let stored = match t.family {
                Family::E => tables::stored_e(t.rank),
                _ => None,
            };
            let known = stored.is_some_and(|rows| {
                rows.iter()
                    .any(|r| r.label == label && r.labels == diagram.labels.as_slice())
            });
            if known {
                Ok(())
            } else {
                Err(invalid("not a stored orbit of this type"))
            }
        }
    }
}

/// Orbits of a classical type as admissible partitions, from the regular orbit
/// down (decreasing lexicographic order refines the dominance order).
pub fn classical_orbits(rs: &RootSystem) -> Result<Vec<OrbitLabel>> {
    let t = rs.dynkin_type;
    let n = natural_dimension(t).ok_or_else(|| Error::UnsupportedType(t.to_string()))?;
    Ok(partitions(n)
        .into_iter()
        .filter(|p| partition_admissible(t.family, p))
        .map(OrbitLabel::Partition)
        .collect())
}

/// Type `D` partitions with only even parts correspond to two orbits. They are
/// listed once and flagged here instead of being split.
pub fn is_very_even(rs: &RootSystem, o: &OrbitLabel) -> bool {
    rs.dynkin_type.family == Family::D
        && o.parts().is_some_and(|p| p.iter().all(|&x| x % 2 == 0))
}

pub fn is_zero_orbit(o: &OrbitLabel) -> bool {
    match o {
        OrbitLabel::Partition(p) => p.iter().all(|&x| x == 1),
        OrbitLabel::Named { diagram, .. } => diagram.labels.iter().all(|&l| l == 0),
    }
}

/// The partition rule: type `A` only the regular orbit, `B`/`D` distinct odd parts,
/// `C` distinct even parts. Stored exceptional labels are distinguished.
pub fn is_distinguished(rs: &RootSystem, o: &OrbitLabel) -> bool {
    match o {
        OrbitLabel::Partition(parts) => {
            let distinct = parts.windows(2).all(|w| w[0] > w[1]);
            match rs.dynkin_type.family {
                Family::A => parts.len() == 1,
                Family::B | Family::D => distinct && parts.iter().all(|p| p % 2 == 1),
                Family::C => distinct && parts.iter().all(|p| p % 2 == 0),
                _ => false,
            }
        }
        OrbitLabel::Named { .. } => !is_zero_orbit(o),
    }
}

/// The regular orbit: the single-part partition for `A`, `B`, `C`; `(2n−1, 1)` for
/// `D_n`; the all-2 label for stored types.
pub fn is_regular(rs: &RootSystem, o: &OrbitLabel) -> bool {
    match o {
        OrbitLabel::Partition(parts) => match rs.dynkin_type.family {
            Family::D => parts.len() == 2 && parts[1] == 1,
            _ => parts.len() == 1,
        },
        OrbitLabel::Named { diagram, .. } => diagram.labels.iter().all(|&l| l == 2),
    }
}

/// Weighted Dynkin diagram of a classical orbit from its `sl_2` weights.
pub fn weighted_dynkin(rs: &RootSystem, o: &OrbitLabel) -> Result<WeightedDynkinDiagram> {
    validate_orbit(rs, o)?;
    let parts = match o {
        OrbitLabel::Named { diagram, .. } => return Ok(diagram.clone()),
        OrbitLabel::Partition(p) => p,
    };
    let t = rs.dynkin_type;
    let mut h: Vec<i64> = parts
        .iter()
        .flat_map(|&p| {
            let p = p as i64;
            (0..p).map(move |k| p - 1 - 2 * k)
        })
        .collect();
    h.sort_unstable_by(|a, b| b.cmp(a));
    let n = t.rank;
    let mut labels: Vec<i64> = Vec::with_capacity(n);
    match t.family {
        Family::A => labels.extend(h.windows(2).map(|w| w[0] - w[1])),
        Family::B | Family::C | Family::D => {
            let top = &h[..n];
            labels.extend(top.windows(2).map(|w| w[0] - w[1]));
            match t.family {
                Family::B => labels.push(top[n - 1]),
                Family::C => labels.push(2 * top[n - 1]),
                _ => labels.push(top[n - 2] + top[n - 1]),
            }
        }
        _ => return Err(Error::UnsupportedType(t.to_string())),
    }
    let labels = labels
        .into_iter()
        .map(|l| {
            u8::try_from(l)
                .ok()
                .filter(|&l| l <= 2)
                .ok_or_else(|| Error::Precondition(format!("label {l} outside 0..=2 for {o}")))
        })
        .collect::<Result<Vec<u8>>>()?;
    Ok(WeightedDynkinDiagram::new(labels))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishedRow {
    pub orbit: OrbitLabel,
    pub diagram: WeightedDynkinDiagram,
    /// Source of a stored row, or of the stored table a computed row was checked against.
    pub provenance: Option<String>,
}

/// Distinguished orbits and their diagrams. Classical types are computed (and, for
/// `D_4..D_7`, compared with the stored rows); `E_6`, `E_7` are stored.
pub fn distinguished_table(t: DynkinType) -> Result<Vec<DistinguishedRow>> {
    let t = t.semisimple();
    let rs = build_root_system(t)?;
    match t.family {
        Family::A | Family::B | Family::C | Family::D => {
            let stored = if t.family == Family::D {
                tables::stored_d(t.rank)
            } else {
                None
            };
            let mut rows = Vec::new();
            for o in classical_orbits(&rs)? {
                if !is_distinguished(&rs, &o) {
                    continue;
                }
                let diagram = weighted_dynkin(&rs, &o)?;
                rows.push(DistinguishedRow {
                    orbit: o,
                    diagram,
                    provenance: stored.map(|_| format!("computed; checked against {}", tables::provenance_d())),
                });
            }
            if let Some(stored) = stored {
                if stored.len() != rows.len() {
                    return Err(Error::TableMismatch {
                        group: t.to_string(),
                        row: stored.len().min(rows.len()),
                    });
                }
                for (i, s) in stored.iter().enumerate() {
                    let hit = rows.iter().any(|r| {
                        r.orbit.parts() == Some(s.partition) && r.diagram.labels == s.labels
                    });
                    if !hit {
                        return Err(Error::TableMismatch {
                            group: t.to_string(),
                            row: i,
                        });
                    }
                }
            }
            Ok(rows)
        }
        Family::E if t.rank <= 7 => {
            let rows = tables::stored_e(t.rank).expect("E6 and E7 are stored");
            Ok(rows
                .iter()
                .map(|r| DistinguishedRow {
                    orbit: OrbitLabel::Named {
                        label: r.label.to_string(),
                        diagram: WeightedDynkinDiagram::new(r.labels.to_vec()),
                    },
                    diagram: WeightedDynkinDiagram::new(r.labels.to_vec()),
                    provenance: Some(tables::provenance_e(t.rank).to_string()),
                })
                .collect())
        }
        _ => Err(Error::UnsupportedType(format!(
            "no distinguished table available for {t}"
        ))),
    }
}

/// The stored `D_n` rows as `(partition, labels)`, for comparison with the recipe.
pub fn stored_d_rows(rank: usize) -> Option<Vec<(Vec<u32>, WeightedDynkinDiagram)>> {
    tables::stored_d(rank).map(|rows| {
        rows.iter()
            .map(|r| {
                (
                    r.partition.to_vec(),
                    WeightedDynkinDiagram::new(r.labels.to_vec()),
                )
            })
            .collect()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct F4LeviEntry {
    pub label: String,
    pub factor: DynkinType,
    /// Ambient simple roots in the factor's Bourbaki order.
    pub embedding: Vec<usize>,
    /// Labels in the factor's Bourbaki order.
    pub diagram: WeightedDynkinDiagram,
    pub provenance: String,
}

/// Distinguished diagrams on the Levi factors `C_2`, `C_3`, `B_3` of `F_4`.
pub fn f4_levi_table() -> Vec<F4LeviEntry> {
    tables::F4_LEVI
        .iter()
        .map(|r| F4LeviEntry {
            label: r.label.to_string(),
            factor: r.factor.parse().expect("stored factor type parses"),
            embedding: r.subset.to_vec(),
            diagram: WeightedDynkinDiagram::new(r.labels.to_vec()),
            provenance: tables::provenance_f4_levi().to_string(),
        })
        .collect()
}

/// `dim g(λ, i)` for each `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingDims {
    pub dims: BTreeMap<i64, usize>,
}

impl GradingDims {
    pub fn get(&self, i: i64) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }
}

fn pairing(coeffs: &[i64], labels: &[u8]) -> i64 {
    coeffs
        .iter()
        .zip(labels)
        .map(|(c, &w)| c * w as i64)
        .sum()
}

pub fn grading_dims(rs: &RootSystem, w: &WeightedDynkinDiagram) -> Result<GradingDims> {
    if w.len() != rs.rank() {
        return Err(Error::DiagramShape {
            expected: rs.rank(),
            found: w.len(),
        });
    }
    let mut dims = BTreeMap::new();
    dims.insert(0, rs.reductive_rank());
    for c in &rs.positive_coefficients {
        let k = pairing(c, &w.labels);
        *dims.entry(k).or_default() += 1;
        *dims.entry(-k).or_default() += 1;
    }
    dims.retain(|_, v| *v > 0);
    Ok(GradingDims { dims })
}

/// Grading of `Lie(L)` for a diagram on the Levi's simple roots, listed in
/// increasing ambient index.
pub fn levi_grading(levi: &LeviSubset<'_>, w: &WeightedDynkinDiagram) -> Result<GradingDims> {
    if w.len() != levi.subset.len() {
        return Err(Error::DiagramShape {
            expected: levi.subset.len(),
            found: w.len(),
        });
    }
    let rank = levi.ambient.rank();
    let mut full = vec![0u8; rank];
    for (&i, &l) in levi.subset.iter().zip(&w.labels) {
        full[i] = l;
    }
    let mut dims = BTreeMap::new();
    dims.insert(0, levi.ambient.reductive_rank());
    for c in levi.positive_coefficients() {
        let k = pairing(c, &full);
        *dims.entry(k).or_default() += 1;
        *dims.entry(-k).or_default() += 1;
    }
    dims.retain(|_, v| *v > 0);
    Ok(GradingDims { dims })
}

/// `dim g_L(λ,0) = dim g_L(λ,2) + dim Z_L`.
pub fn check_distinguished_criterion(
    levi: &LeviSubset<'_>,
    w: &WeightedDynkinDiagram,
) -> Result<bool> {
    let g = levi_grading(levi, w)?;
    Ok(g.get(0) == g.get(2) + levi.center_dim())
}

/// Levi simple roots joined by an ambient edge to a simple root outside the Levi.
pub fn exposed_roots(levi: &LeviSubset<'_>) -> BTreeSet<usize> {
    levi.subset
        .iter()
        .copied()
        .filter(|&i| {
            levi.ambient
                .dynkin_graph
                .neighbors(i)
                .any(|j| !levi.subset.contains(&j))
        })
        .collect()
}

/// Every exposed root carries label 2, given one distinguished diagram per factor
/// (in the factor's Bourbaki order).
pub fn verify_exposed_weight_two(
    levi: &LeviSubset<'_>,
    diagrams: &[WeightedDynkinDiagram],
) -> Result<bool> {
    if diagrams.len() != levi.factors.len() {
        return Err(Error::DiagramShape {
            expected: levi.factors.len(),
            found: diagrams.len(),
        });
    }
    let exposed = exposed_roots(levi);
    let mut ok = true;
    for (factor, w) in levi.factors.iter().zip(diagrams) {
        let table = distinguished_table(factor.dynkin_type)?;
        if !table.iter().any(|r| &r.diagram == w) {
            return Err(Error::NotDistinguished {
                factor: factor.dynkin_type.to_string(),
            });
        }
        for (&ambient, &label) in factor.embedding.iter().zip(&w.labels) {
            if exposed.contains(&ambient) && label != 2 {
                ok = false;
            }
        }
    }
    Ok(ok)
}

/// `1 + max{i : g(λ, 2i) ≠ 0}`.
pub fn smooth_bound_r(dims: &GradingDims) -> u32 {
    let max_i = dims
        .dims
        .iter()
        .filter(|&(&k, &v)| v > 0 && k >= 0 && k % 2 == 0)
        .map(|(&k, _)| k / 2)
        .max()
        .unwrap_or(0);
    1 + max_i as u32
}

/// Levi subset of the whole ambient system, used to evaluate the criterion on `G`.
pub fn full_levi(rs: &RootSystem) -> LeviSubset<'_> {
    levi_factors(rs, &(0..rs.rank()).collect()).expect("all indices are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    fn p(parts: &[u32]) -> OrbitLabel {
        OrbitLabel::Partition(parts.to_vec())
    }

    #[test]
    fn orbit_lists() {
        let names = |g: &str| -> Vec<String> {
            classical_orbits(&rs(g))
                .unwrap()
                .iter()
                .map(|o| o.to_string())
                .collect()
        };
        assert_eq!(names("GL3"), vec!["(3)", "(2,1)", "(1,1,1)"]);
        assert_eq!(names("B2"), vec!["(5)", "(3,1,1)", "(2,2,1)", "(1,1,1,1,1)"]);
        assert_eq!(names("C2"), vec!["(4)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert!(classical_orbits(&rs("E6")).is_err());
    }

    #[test]
    fn distinguished_examples() {
        assert!(!is_distinguished(&rs("GL3"), &p(&[2, 1])));
        assert!(is_distinguished(&rs("D4"), &p(&[5, 3])));
        let b3 = rs("B3");
        let dist: Vec<_> = classical_orbits(&b3)
            .unwrap()
            .into_iter()
            .filter(|o| is_distinguished(&b3, o))
            .collect();
        assert_eq!(dist, vec![p(&[7])]);
    }

    #[test]
    fn diagrams() {
        assert_eq!(weighted_dynkin(&rs("GL3"), &p(&[2, 1])).unwrap().labels, vec![1, 1]);
        assert_eq!(
            weighted_dynkin(&rs("D4"), &p(&[5, 3])).unwrap().labels,
            vec![2, 0, 2, 2]
        );
        assert_eq!(weighted_dynkin(&rs("GL5"), &p(&[5])).unwrap().labels, vec![2; 4]);
        assert_eq!(
            weighted_dynkin(&rs("C3"), &p(&[4, 2])).unwrap().labels,
            vec![2, 0, 2]
        );
    }

    #[test]
    fn table_sizes() {
        let count = |g: &str| distinguished_table(g.parse().unwrap()).unwrap().len();
        assert_eq!(count("E6"), 3);
        assert_eq!(count("E7"), 6);
        assert_eq!(count("D5"), 2);
        assert!(distinguished_table("E8".parse().unwrap()).is_err());
        assert!(distinguished_table("F4".parse().unwrap()).is_err());
        assert!(distinguished_table("G2".parse().unwrap()).is_err());
    }

    #[test]
    fn gradings() {
        let g = grading_dims(&rs("GL3"), &WeightedDynkinDiagram::new(vec![2, 2])).unwrap();
        let expect: BTreeMap<i64, usize> = [(-4, 1), (-2, 2), (0, 3), (2, 2), (4, 1)].into();
        assert_eq!(g.dims, expect);
        assert_eq!(smooth_bound_r(&g), 3);
        let zero = grading_dims(&rs("D4"), &WeightedDynkinDiagram::zero(4)).unwrap();
        assert_eq!(zero.get(0), 28);
        assert_eq!(smooth_bound_r(&zero), 1);
    }

    #[test]
    fn criterion_examples() {
        let gl3 = rs("GL3");
        let levi = levi_factors(&gl3, &BTreeSet::from([0])).unwrap();
        assert!(check_distinguished_criterion(&levi, &WeightedDynkinDiagram::new(vec![2])).unwrap());
        let full = full_levi(&gl3);
        let w = weighted_dynkin(&gl3, &p(&[2, 1])).unwrap();
        let g = levi_grading(&full, &w).unwrap();
        assert_eq!((g.get(0), g.get(2), full.center_dim()), (3, 1, 1));
        assert!(!check_distinguished_criterion(&full, &w).unwrap());
        let torus = levi_factors(&gl3, &BTreeSet::new()).unwrap();
        assert!(check_distinguished_criterion(&torus, &WeightedDynkinDiagram::zero(0)).unwrap());
    }

    #[test]
    fn exposed_examples() {
        let a4 = rs("A4");
        let levi = levi_factors(&a4, &BTreeSet::from([0, 1])).unwrap();
        assert_eq!(exposed_roots(&levi), BTreeSet::from([1]));
        assert!(exposed_roots(&full_levi(&a4)).is_empty());
        let a3 = rs("A3");
        let levi = levi_factors(&a3, &BTreeSet::from([0, 2])).unwrap();
        assert_eq!(exposed_roots(&levi), BTreeSet::from([0, 2]));
    }

    #[test]
    fn exposed_weight_two_examples() {
        let b4 = rs("B4");
        let levi = levi_factors(&b4, &BTreeSet::from([1, 2, 3])).unwrap();
        assert_eq!(levi.factors[0].dynkin_type.to_string(), "B3");
        assert!(verify_exposed_weight_two(&levi, &[WeightedDynkinDiagram::new(vec![2, 2, 2])]).unwrap());

        let f4 = rs("F4");
        for entry in f4_levi_table() {
            let subset: BTreeSet<usize> = entry.embedding.iter().copied().collect();
            let levi = levi_factors(&f4, &subset).unwrap();
            assert_eq!(levi.factors.len(), 1);
            assert_eq!(levi.factors[0].dynkin_type, entry.factor);
            assert_eq!(levi.factors[0].embedding, entry.embedding);
            assert!(verify_exposed_weight_two(&levi, &[entry.diagram.clone()]).unwrap());
        }
    }

    #[test]
    fn parse_labels() {
        let e6 = rs("E6");
        let a = OrbitLabel::parse(&e6, "e6(A2)").unwrap();
        let b = OrbitLabel::parse(&e6, "E6(a3)").unwrap();
        assert_eq!(a, b);
        assert!(OrbitLabel::parse(&e6, "E6(a4)").is_err());
        assert!(is_zero_orbit(&OrbitLabel::parse(&e6, "0").unwrap()));
        let gl3 = rs("GL3");
        assert_eq!(OrbitLabel::parse(&gl3, "2,1").unwrap(), p(&[2, 1]));
        assert_eq!(OrbitLabel::parse(&gl3, "(2,1)").unwrap(), p(&[2, 1]));
        assert!(OrbitLabel::parse(&gl3, "1,2").is_err());
        assert!(OrbitLabel::parse(&gl3, "2,2").is_err());
        assert!(OrbitLabel::parse(&rs("C2"), "3,1").is_err());
    }
}
