//! Root systems, Dynkin diagrams and Levi subdiagrams.
//!
//! Simple roots live in the usual Euclidean coordinates (`A_{n-1}` inside the
//! sum-zero hyperplane of `Z^n`, `B/C/D` in `Z^n`, `E` inside `Z^8`, `F_4` in `Z^4`,
//! `G_2` in `Z^3`). Types with half-integral coordinates (`E`, `F`) are stored scaled
//! by 2, which leaves every coroot pairing `2(v,α)/(α,α)` unchanged.
//!
//! Roots themselves are generated as coefficient vectors over the simple roots by
//! closing the simple roots under simple reflections, so no table of positive roots
//! is stored anywhere.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// Whether the group carries a one-dimensional central torus on top of its
/// semisimple part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    Semisimple,
    /// `GL_n`: type `A_{n-1}` plus the scalar torus.
    GeneralLinear,
    /// `GSp_4`: type `C_2` plus the similitude torus.
    GeneralSymplectic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
    pub variant: Variant,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InadmissibleType {
                family: family.letter(),
                rank,
            });
        }
        Ok(Self {
            family,
            rank,
            variant: Variant::Semisimple,
        })
    }

    /// `GL_n`, i.e. `A_{n-1}` with its centre.
    pub fn gl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InadmissibleType {
                family: 'A',
                rank: n.saturating_sub(1),
            });
        }
        Ok(Self {
            family: Family::A,
            rank: n - 1,
            variant: Variant::GeneralLinear,
        })
    }

    pub fn gsp4() -> Self {
        Self {
            family: Family::C,
            rank: 2,
            variant: Variant::GeneralSymplectic,
        }
    }

    /// Dimension of the central torus.
    pub fn central_rank(&self) -> usize {
        match self.variant {
            Variant::Semisimple => 0,
            Variant::GeneralLinear | Variant::GeneralSymplectic => 1,
        }
    }

    pub fn reductive_rank(&self) -> usize {
        self.rank + self.central_rank()
    }

    /// The same type with the centre dropped.
    pub fn semisimple(&self) -> Self {
        Self {
            variant: Variant::Semisimple,
            ..*self
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::GeneralLinear => write!(f, "GL{}", self.rank + 1),
            Variant::GeneralSymplectic => write!(f, "GSp{}", 2 * self.rank),
            Variant::Semisimple => write!(f, "{}{}", self.family.letter(), self.rank),
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    /// Accepts Cartan names (`A2`, `D5`, `E7`) and matrix-group names
    /// (`GL3`, `SL3`, `Sp6`, `SO7`, `SO8`, `GSp4`), case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let upper = t.to_ascii_uppercase();
        let split = upper
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::UnknownGroup(s.to_string()))?;
        let (name, num) = upper.split_at(split);
        let num: usize = num.parse().map_err(|_| Error::UnknownGroup(s.to_string()))?;
        let bad = || Error::UnknownGroup(s.to_string());
        match name {
            "A" => Self::new(Family::A, num),
            "B" => Self::new(Family::B, num),
            "C" => Self::new(Family::C, num),
            "D" => Self::new(Family::D, num),
            "E" => Self::new(Family::E, num),
            "F" => Self::new(Family::F, num),
            "G" => Self::new(Family::G, num),
            "GL" => Self::gl(num),
            "SL" => Self::new(Family::A, num.checked_sub(1).ok_or_else(bad)?),
            "SP" if num % 2 == 0 => Self::new(Family::C, num / 2),
            "SO" if num % 2 == 1 => Self::new(Family::B, num / 2),
            "SO" => Self::new(Family::D, num / 2),
            "GSP" if num == 4 => Ok(Self::gsp4()),
            _ => Err(bad()),
        }
    }
}

/// An edge of a Dynkin diagram. `longer` names the endpoint carrying the longer
/// root when the bond is multiple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinEdge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
    pub longer: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinGraph {
    pub nodes: usize,
    pub edges: Vec<DynkinEdge>,
}

impl DynkinGraph {
    fn from_cartan(cartan: &[Vec<i64>]) -> Self {
        let n = cartan.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if cartan[a][b] == 0 {
                    continue;
                }
                let multiplicity = (cartan[a][b] * cartan[b][a]) as u8;
                // |a_ab| > 1 means α_a is the longer root.
                let longer = match cartan[a][b].abs().cmp(&cartan[b][a].abs()) {
                    std::cmp::Ordering::Greater => Some(a),
                    std::cmp::Ordering::Less => Some(b),
                    std::cmp::Ordering::Equal => None,
                };
                edges.push(DynkinEdge {
                    a,
                    b,
                    multiplicity,
                    longer,
                });
            }
        }
        Self { nodes: n, edges }
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.a == i {
                Some(e.b)
            } else if e.b == i {
                Some(e.a)
            } else {
                None
            }
        })
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.neighbors(i).any(|k| k == j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub dynkin_type: DynkinType,
    /// Common scale factor applied to all Euclidean coordinates.
    pub coordinate_scale: i64,
    pub simple_roots: Vec<Vec<i64>>,
    /// Positive roots in Euclidean coordinates, ordered by height then coefficients.
    pub positive_roots: Vec<Vec<i64>>,
    /// The same roots as coefficient vectors over the simple roots.
    pub positive_coefficients: Vec<Vec<i64>>,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`.
    pub cartan_matrix: Vec<Vec<i64>>,
    pub dynkin_graph: DynkinGraph,
    pub fundamental_degrees: Vec<u32>,
    pub coxeter_number: u32,
    pub weyl_order: BigUint,
}

fn unit(n: usize, i: usize, k: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = k;
    v
}

fn diff(n: usize, i: usize, j: usize, k: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] += k;
    v[j] -= k;
    v
}

/// Standard simple roots (Bourbaki numbering) and the coordinate scale.
fn simple_roots_for(family: Family, rank: usize) -> (Vec<Vec<i64>>, i64) {
    let n = rank;
    match family {
        Family::A => ((0..n).map(|i| diff(n + 1, i, i + 1, 1)).collect(), 1),
        Family::B | Family::C | Family::D => {
            let mut roots: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1, 1)).collect();
            roots.push(match family {
                Family::B => unit(n, n - 1, 1),
                Family::C => unit(n, n - 1, 2),
                _ => {
                    let mut v = vec![0; n];
                    v[n - 2] = 1;
                    v[n - 1] = 1;
                    v
                }
            });
            (roots, 1)
        }
        Family::E => {
            let mut roots = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], {
                let mut v = vec![0; 8];
                v[0] = 2;
                v[1] = 2;
                v
            }];
            for i in 0..6 {
                roots.push(diff(8, i + 1, i, 2));
            }
            roots.truncate(rank);
            (roots, 2)
        }
        Family::F => (
            vec![
                vec![0, 2, -2, 0],
                vec![0, 0, 2, -2],
                vec![0, 0, 0, 2],
                vec![1, -1, -1, -1],
            ],
            2,
        ),
        Family::G => (vec![vec![1, -1, 0], vec![-2, 1, 1]], 1),
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cartan_of(simple: &[Vec<i64>]) -> Vec<Vec<i64>> {
    simple
        .iter()
        .map(|ai| {
            simple
                .iter()
                .map(|aj| 2 * dot(ai, aj) / dot(aj, aj))
                .collect()
        })
        .collect()
}

/// Cartan matrix of an admissible type, computed from its simple roots only.
pub fn cartan_matrix(t: DynkinType) -> Vec<Vec<i64>> {
    cartan_of(&simple_roots_for(t.family, t.rank).0)
}

/// Weyl group order from the closed formulas; validated against degree products
/// and against brute-force generation for small rank.
fn weyl_order_formula(t: DynkinType) -> BigUint {
    let fact = |n: usize| (1..=n as u64).fold(BigUint::from(1u32), |acc, k| acc * k);
    match t.family {
        Family::A => fact(t.rank + 1),
        Family::B | Family::C => fact(t.rank) << t.rank,
        Family::D => fact(t.rank) << (t.rank - 1),
        Family::E => BigUint::from(match t.rank {
            6 => 51_840u64,
            7 => 2_903_040,
            _ => 696_729_600,
        }),
        Family::F => BigUint::from(1152u32),
        Family::G => BigUint::from(12u32),
    }
}

/// Apply the simple reflection `s_j` to a root given by simple-root coefficients.
fn reflect_coefficients(cartan: &[Vec<i64>], j: usize, c: &[i64]) -> Vec<i64> {
    let pairing: i64 = c.iter().enumerate().map(|(i, &ci)| ci * cartan[i][j]).sum();
    let mut out = c.to_vec();
    out[j] -= pairing;
    out
}

/// All roots (positive and negative) as simple-root coefficient vectors.
fn all_root_coefficients(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let v = unit(n, i, 1);
        seen.insert(v.clone());
        queue.push_back(v);
    }
    while let Some(r) = queue.pop_front() {
        for j in 0..n {
            let s = reflect_coefficients(cartan, j, &r);
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    let mut roots: Vec<_> = seen.into_iter().collect();
    roots.sort();
    roots
}

/// Fundamental degrees from the height distribution of positive roots: the number of
/// exponents `≥ k` equals the number of positive roots of height `k`.
fn degrees_from_heights(positive: &[Vec<i64>]) -> Vec<u32> {
    let mut by_height: HashMap<i64, usize> = HashMap::new();
    for r in positive {
        *by_height.entry(r.iter().sum()).or_default() += 1;
    }
    let max_h = by_height.keys().copied().max().unwrap_or(0);
    let count = |k: i64| by_height.get(&k).copied().unwrap_or(0);
    let mut degrees = Vec::new();
    for k in 1..=max_h {
        let exact = count(k) - count(k + 1);
        degrees.extend(std::iter::repeat((k + 1) as u32).take(exact));
    }
    degrees.sort_unstable();
    degrees
}

pub fn build_root_system(t: DynkinType) -> Result<RootSystem> {
    // Re-validate in case the caller built the struct by hand.
    DynkinType::new(t.family, t.rank)?;
    let (simple_roots, coordinate_scale) = simple_roots_for(t.family, t.rank);
    let cartan_matrix = cartan_of(&simple_roots);
    let mut positive_coefficients: Vec<Vec<i64>> = all_root_coefficients(&cartan_matrix)
        .into_iter()
        .filter(|c| c.iter().all(|&x| x >= 0))
        .collect();
    positive_coefficients.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let dim = simple_roots[0].len();
    let positive_roots = positive_coefficients
        .iter()
        .map(|c| {
            let mut v = vec![0i64; dim];
            for (ci, a) in c.iter().zip(&simple_roots) {
                for (vk, ak) in v.iter_mut().zip(a) {
                    *vk += ci * ak;
                }
            }
            v
        })
        .collect();
    let fundamental_degrees = degrees_from_heights(&positive_coefficients);
    let coxeter_number = (2 * positive_coefficients.len() / t.rank) as u32;
    let dynkin_graph = DynkinGraph::from_cartan(&cartan_matrix);
    Ok(RootSystem {
        dynkin_type: t,
        coordinate_scale,
        simple_roots,
        positive_roots,
        positive_coefficients,
        cartan_matrix,
        dynkin_graph,
        fundamental_degrees,
        coxeter_number,
        weyl_order: weyl_order_formula(t),
    })
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.dynkin_type.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_coefficients.len()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.num_positive_roots()
    }

    /// `dim g = |Φ| + reductive rank`.
    pub fn dim_lie_algebra(&self) -> usize {
        self.num_roots() + self.dynkin_type.reductive_rank()
    }

    pub fn reductive_rank(&self) -> usize {
        self.dynkin_type.reductive_rank()
    }

    /// All roots (positive first, then their negatives) as coefficient vectors.
    pub fn all_coefficients(&self) -> Vec<Vec<i64>> {
        let mut all = self.positive_coefficients.clone();
        all.extend(
            self.positive_coefficients
                .iter()
                .map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        all
    }
}

pub fn coxeter_number(rs: &RootSystem) -> u32 {
    rs.coxeter_number
}

pub fn fundamental_degrees(rs: &RootSystem) -> &[u32] {
    &rs.fundamental_degrees
}

/// `s_α(v) = v − ⟨v, α^∨⟩ α` in the system's Euclidean coordinates.
pub fn simple_reflection_weights(rs: &RootSystem, alpha: usize, v: &[i64]) -> Result<Vec<i64>> {
    let a = rs.simple_roots.get(alpha).ok_or(Error::RootIndex {
        index: alpha,
        rank: rs.rank(),
    })?;
    if v.len() != a.len() {
        return Err(Error::Precondition(format!(
            "weight has {} coordinates, expected {}",
            v.len(),
            a.len()
        )));
    }
    let num = 2 * dot(v, a);
    let den = dot(a, a);
    if num % den != 0 {
        return Err(Error::NotIntegral);
    }
    let k = num / den;
    Ok(v.iter().zip(a).map(|(x, y)| x - k * y).collect())
}

/// Order of the Weyl group by closing the simple reflections, acting as
/// permutations of the root set. Only sensible for small rank.
pub fn weyl_order_by_generation(rs: &RootSystem) -> Result<u64> {
    if rs.rank() > 4 {
        return Err(Error::Budget(format!(
            "Weyl group generation limited to rank <= 4, got {}",
            rs.dynkin_type
        )));
    }
    let roots = rs.all_coefficients();
    let index: HashMap<&Vec<i64>, usize> = roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let gens: Vec<Vec<usize>> = (0..rs.rank())
        .map(|j| {
            roots
                .iter()
                .map(|r| index[&reflect_coefficients(&rs.cartan_matrix, j, r)])
                .collect()
        })
        .collect();
    let identity: Vec<usize> = (0..roots.len()).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let composed: Vec<usize> = w.iter().map(|&i| g[i]).collect();
            if seen.insert(composed.clone()) {
                queue.push_back(composed);
            }
        }
    }
    Ok(seen.len() as u64)
}

/// One connected component of a Levi subdiagram, typed by graph isomorphism.
/// `embedding[k]` is the ambient index of the factor's `k`-th simple root
/// (Bourbaki numbering of the factor type).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviFactor {
    pub dynkin_type: DynkinType,
    pub embedding: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct LeviSubset<'a> {
    pub ambient: &'a RootSystem,
    pub subset: BTreeSet<usize>,
    pub factors: Vec<LeviFactor>,
}

impl LeviSubset<'_> {
    /// `dim Z_L = reductive rank of G − semisimple rank of L`.
    pub fn center_dim(&self) -> usize {
        self.ambient.reductive_rank() - self.subset.len()
    }

    /// Positive roots of the ambient system supported on the Levi's simple roots.
    pub fn positive_coefficients(&self) -> impl Iterator<Item = &Vec<i64>> + '_ {
        self.ambient.positive_coefficients.iter().filter(|c| {
            c.iter()
                .enumerate()
                .all(|(i, &x)| x == 0 || self.subset.contains(&i))
        })
    }
}

fn candidate_types(rank: usize) -> Vec<DynkinType> {
    // C before B so that a rank-2 double bond is reported as C2.
    let order = [
        (Family::A, rank),
        (Family::D, rank),
        (Family::E, rank),
        (Family::C, rank),
        (Family::B, rank),
        (Family::F, rank),
        (Family::G, rank),
    ];
    order
        .iter()
        .filter_map(|&(f, r)| DynkinType::new(f, r).ok())
        .collect()
}

/// Find `map` with `cand[i][j] == amb[map[i]][map[j]]` for all `i, j`.
fn match_cartan(cand: &[Vec<i64>], amb: &[Vec<i64>], nodes: &[usize]) -> Option<Vec<usize>> {
    fn extend(
        cand: &[Vec<i64>],
        amb: &[Vec<i64>],
        nodes: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let k = map.len();
        if k == cand.len() {
            return true;
        }
        for (slot, &node) in nodes.iter().enumerate() {
            if used[slot] {
                continue;
            }
            let consistent = map
                .iter()
                .enumerate()
                .all(|(i, &m)| cand[i][k] == amb[m][node] && cand[k][i] == amb[node][m]);
            if !consistent {
                continue;
            }
            used[slot] = true;
            map.push(node);
            if extend(cand, amb, nodes, map, used) {
                return true;
            }
            map.pop();
            used[slot] = false;
        }
        false
    }
    let mut map = Vec::with_capacity(nodes.len());
    let mut used = vec![false; nodes.len()];
    extend(cand, amb, nodes, &mut map, &mut used).then_some(map)
}

/// Identify the Dynkin type of a connected set of ambient nodes.
pub fn identify_component(rs: &RootSystem, nodes: &[usize]) -> Option<LeviFactor> {
    candidate_types(nodes.len()).into_iter().find_map(|t| {
        match_cartan(&cartan_matrix(t), &rs.cartan_matrix, nodes).map(|embedding| LeviFactor {
            dynkin_type: t,
            embedding,
        })
    })
}

pub fn levi_factors<'a>(rs: &'a RootSystem, subset: &BTreeSet<usize>) -> Result<LeviSubset<'a>> {
    if let Some(&bad) = subset.iter().find(|&&i| i >= rs.rank()) {
        return Err(Error::RootIndex {
            index: bad,
            rank: rs.rank(),
        });
    }
    let mut remaining = subset.clone();
    let mut factors = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        let mut component = vec![start];
        remaining.remove(&start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for w in rs.dynkin_graph.neighbors(v) {
                if remaining.remove(&w) {
                    component.push(w);
                    frontier.push(w);
                }
            }
        }
        component.sort_unstable();
        let factor = identify_component(rs, &component).ok_or_else(|| {
            Error::UnsupportedType(format!("unrecognised subdiagram {component:?}"))
        })?;
        factors.push(factor);
    }
    Ok(LeviSubset {
        ambient: rs,
        subset: subset.clone(),
        factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.num_positive_roots(), 3);
        assert_eq!(a2.coxeter_number, 3);
        assert_eq!(a2.fundamental_degrees, vec![2, 3]);

        let d4 = rs("D4");
        assert_eq!(d4.num_positive_roots(), 12);
        assert_eq!(d4.coxeter_number, 6);
        assert_eq!(d4.fundamental_degrees, vec![2, 4, 4, 6]);

        let a1 = rs("A1");
        assert_eq!(a1.num_positive_roots(), 1);
        assert_eq!(a1.coxeter_number, 2);
        assert_eq!(a1.fundamental_degrees, vec![2]);
    }

    #[test]
    fn coxeter_numbers() {
        assert_eq!(rs("GL5").coxeter_number, 5);
        assert_eq!(rs("E7").coxeter_number, 18);
        assert_eq!(rs("E7").num_roots(), 126);
        assert_eq!(rs("E8").num_roots(), 240);
        assert_eq!(rs("F4").num_roots(), 48);
        assert_eq!(rs("G2").num_roots(), 12);
    }

    #[test]
    fn parse_group_names() {
        assert_eq!("GL3".parse::<DynkinType>().unwrap(), DynkinType::gl(3).unwrap());
        assert_eq!("sp6".parse::<DynkinType>().unwrap().to_string(), "C3");
        assert_eq!("SO7".parse::<DynkinType>().unwrap().to_string(), "B3");
        assert_eq!("SO8".parse::<DynkinType>().unwrap().to_string(), "D4");
        assert_eq!("GSp4".parse::<DynkinType>().unwrap(), DynkinType::gsp4());
        assert!("D3".parse::<DynkinType>().is_err());
        assert!("E9".parse::<DynkinType>().is_err());
        assert!("B1".parse::<DynkinType>().is_err());
        assert!("XY".parse::<DynkinType>().is_err());
    }

    #[test]
    fn dimensions_of_reductive_variants() {
        assert_eq!(rs("GL3").dim_lie_algebra(), 9);
        assert_eq!(rs("GSp4").dim_lie_algebra(), 11);
        assert_eq!(rs("SL3").dim_lie_algebra(), 8);
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs("A2");
        let a1 = a2.simple_roots[0].clone();
        let a2v = a2.simple_roots[1].clone();
        let neg: Vec<i64> = a1.iter().map(|x| -x).collect();
        assert_eq!(simple_reflection_weights(&a2, 0, &a1).unwrap(), neg);
        let sum: Vec<i64> = a1.iter().zip(&a2v).map(|(x, y)| x + y).collect();
        assert_eq!(simple_reflection_weights(&a2, 0, &a2v).unwrap(), sum);
        // (1,1,1) is orthogonal to every root of A2.
        assert_eq!(simple_reflection_weights(&a2, 1, &[1, 1, 1]).unwrap(), vec![1, 1, 1]);
        assert!(simple_reflection_weights(&a2, 5, &[0, 0, 0]).is_err());
    }

    #[test]
    fn levi_path_components() {
        let a4 = rs("A4");
        let levi = levi_factors(&a4, &BTreeSet::from([0, 1, 3])).unwrap();
        let types: Vec<String> = levi.factors.iter().map(|f| f.dynkin_type.to_string()).collect();
        assert_eq!(types, vec!["A2", "A1"]);
        assert!(levi_factors(&a4, &BTreeSet::new()).unwrap().factors.is_empty());
        let full = levi_factors(&a4, &(0..4).collect()).unwrap();
        assert_eq!(full.factors.len(), 1);
        assert_eq!(full.factors[0].dynkin_type.to_string(), "A4");
    }

    #[test]
    fn levi_in_e8() {
        let e8 = rs("E8");
        let subset: BTreeSet<usize> = [1, 2, 3, 4, 6, 7].into_iter().collect();
        // α2,α3,α4,α5 with α2 on α4: D4; α7,α8: A2.
        let levi = levi_factors(&e8, &subset).unwrap();
        let types: Vec<String> = levi.factors.iter().map(|f| f.dynkin_type.to_string()).collect();
        assert_eq!(types, vec!["D4", "A2"]);
    }

    #[test]
    fn levi_typing_respects_arrows() {
        let f4 = rs("F4");
        let b3 = levi_factors(&f4, &BTreeSet::from([0, 1, 2])).unwrap();
        assert_eq!(b3.factors[0].dynkin_type.to_string(), "B3");
        let c3 = levi_factors(&f4, &BTreeSet::from([1, 2, 3])).unwrap();
        assert_eq!(c3.factors[0].dynkin_type.to_string(), "C3");
        let c2 = levi_factors(&f4, &BTreeSet::from([1, 2])).unwrap();
        assert_eq!(c2.factors[0].dynkin_type.to_string(), "C2");
    }
}
