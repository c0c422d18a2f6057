//! Considerateness and banality: multiplicative orders of `q` and the orders of
//! finite groups of Lie type.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, DynkinType, Family, RootSystem, Variant};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc = 1u128 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// The pair `(q, l)`: `q` is the Frobenius scale and `l` the residue
/// characteristic, with `l = 0` meaning characteristic zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QContext {
    q: u64,
    l: u64,
}

impl QContext {
    pub fn new(q: u64, l: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidContext(format!("q must be at least 2, got {q}")));
        }
        if l != 0 && !is_prime(l) {
            return Err(Error::InvalidContext(format!("l = {l} is neither 0 nor prime")));
        }
        if l != 0 && q % l == 0 {
            return Err(Error::Precondition(format!("l = {l} divides q = {q}")));
        }
        Ok(Self { q, l })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn is_char_zero(&self) -> bool {
        self.l == 0
    }

    /// Multiplicative order of `q` modulo `l`; `None` in characteristic zero.
    pub fn order(&self) -> Option<u32> {
        (self.l != 0).then(|| multiplicative_order(self.q, self.l))
    }

    /// The least `k ≤ h` with `q^k ≡ 1 (mod l)`, if any.
    pub fn failing_power(&self, h: u32) -> Option<u32> {
        self.order().filter(|&k| k <= h)
    }
}

/// Order of `q` in `(Z/l)^×`. `q` must be coprime to the prime `l`.
pub fn multiplicative_order(q: u64, l: u64) -> u32 {
    debug_assert!(l >= 2 && q % l != 0);
    let q = q % l;
    let mut acc = q;
    let mut k = 1u32;
    while acc != 1 {
        acc = ((acc as u128 * q as u128) % l as u128) as u64;
        k += 1;
    }
    k
}

/// `q^k − 1` is a unit for all `1 ≤ k ≤ h`.
pub fn is_considerate(ctx: &QContext, h: u32) -> bool {
    ctx.failing_power(h).is_none()
}

/// `q^{|Φ⁺|} ∏_d (q^d − 1)`, with an extra `(q − 1)` for a one-dimensional centre.
pub fn chevalley_steinberg_order(rs: &RootSystem, q: u64) -> BigUint {
    let qb = BigUint::from(q);
    let one = BigUint::from(1u32);
    let mut order = qb.pow(rs.num_positive_roots() as u32);
    for &d in &rs.fundamental_degrees {
        order *= qb.pow(d) - &one;
    }
    for _ in 0..rs.dynkin_type.central_rank() {
        order *= &qb - &one;
    }
    order
}

/// `l ∤ |G(F_q)|`.
pub fn is_banal(l: u64, rs: &RootSystem, q: u64) -> Result<bool> {
    if !is_prime(l) {
        return Err(Error::InvalidContext(format!("l = {l} is not prime")));
    }
    if q < 2 {
        return Err(Error::InvalidContext(format!("q must be at least 2, got {q}")));
    }
    // Residue of each factor mod l avoids building the big integer.
    let lb = l as u128;
    let q_mod = q as u128 % lb;
    let mut residue = pow_mod(q, rs.num_positive_roots() as u64, l) as u128;
    for &d in &rs.fundamental_degrees {
        let t = (pow_mod(q, d as u64, l) as u128 + lb - 1) % lb;
        residue = residue * t % lb;
    }
    for _ in 0..rs.dynkin_type.central_rank() {
        residue = residue * ((q_mod + lb - 1) % lb) % lb;
    }
    Ok(residue != 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepViolation {
    pub group: String,
    pub l: u64,
    pub q: u64,
    pub considerate: bool,
    pub banal: bool,
    pub kind: String,
}

/// An instance of the order-5 phenomenon for a group with Coxeter number 6:
/// banal but not considerate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub group: String,
    pub l: u64,
    pub q: u64,
    pub order: u32,
    pub banal: bool,
    pub considerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub groups: Vec<String>,
    pub l_bound: u64,
    pub q_bound: u64,
    pub instances: u64,
    pub considerate_instances: u64,
    pub type_a_equivalence_checks: u64,
    pub violations: Vec<SweepViolation>,
    pub witnesses: Vec<WitnessRecord>,
}

impl SweepReport {
    /// No violations, and every order-5 instance for an `h = 6` group behaves as the
    /// witness class predicts.
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.witnesses.iter().all(|w| w.banal && !w.considerate)
    }
}

/// The default sweep: `A_1..A_3`, `B_2..B_3`, `C_2..C_3`.
pub fn default_sweep_types() -> Vec<DynkinType> {
    let mut out = Vec::new();
    for r in 1..=3 {
        out.push(DynkinType::new(Family::A, r).expect("admissible"));
    }
    for r in 2..=3 {
        out.push(DynkinType::new(Family::B, r).expect("admissible"));
    }
    for r in 2..=3 {
        out.push(DynkinType::new(Family::C, r).expect("admissible"));
    }
    out
}

/// Check `considerate ⇒ banal` on every `(type, l, q)` with prime `l ≤ l_bound`,
/// `2 ≤ q ≤ q_bound`, `l ∤ q`; the converse for type `A`; and the order-5 witness
/// class for groups with Coxeter number 6. Types of rank above `rank_bound` are
/// skipped.
pub fn implication_sweep(
    types: &[DynkinType],
    rank_bound: usize,
    l_bound: u64,
    q_bound: u64,
) -> Result<SweepReport> {
    if rank_bound == 0 || l_bound < 2 || q_bound < 2 {
        return Err(Error::Precondition("sweep bounds must be positive".into()));
    }
    let systems: Vec<RootSystem> = types
        .iter()
        .filter(|t| t.rank <= rank_bound)
        .map(|&t| build_root_system(t))
        .collect::<Result<_>>()?;
    let cells: Vec<(u64, u64)> = (2..=l_bound)
        .filter(|&l| is_prime(l))
        .flat_map(|l| (2..=q_bound).filter(move |q| q % l != 0).map(move |q| (l, q)))
        .collect();

    struct Cell {
        instances: u64,
        considerate: u64,
        equivalence: u64,
        violations: Vec<SweepViolation>,
        witnesses: Vec<WitnessRecord>,
    }

    let results: Vec<Cell> = cells
        .par_iter()
        .map(|&(l, q)| {
            let ctx = QContext::new(q, l).expect("l prime and coprime to q");
            let mut cell = Cell {
                instances: 0,
                considerate: 0,
                equivalence: 0,
                violations: Vec::new(),
                witnesses: Vec::new(),
            };
            for rs in &systems {
                let considerate = is_considerate(&ctx, rs.coxeter_number);
                let banal = is_banal(l, rs, q).expect("l prime");
                cell.instances += 1;
                let group = rs.dynkin_type.to_string();
                let mut violate = |kind: &str| {
                    cell.violations.push(SweepViolation {
                        group: group.clone(),
                        l,
                        q,
                        considerate,
                        banal,
                        kind: kind.to_string(),
                    })
                };
                if considerate {
                    cell.considerate += 1;
                    if !banal {
                        violate("considerate but not banal");
                    }
                }
                if rs.dynkin_type.family == Family::A {
                    cell.equivalence += 1;
                    if banal && !considerate {
                        violate("type A: banal but not considerate");
                    }
                }
                let order = ctx.order().expect("l is prime");
                if rs.coxeter_number == 6 && order == 5 {
                    cell.witnesses.push(WitnessRecord {
                        group,
                        l,
                        q,
                        order,
                        banal,
                        considerate,
                    });
                }
            }
            cell
        })
        .collect();

    let mut report = SweepReport {
        groups: systems.iter().map(|rs| rs.dynkin_type.to_string()).collect(),
        l_bound,
        q_bound,
        instances: 0,
        considerate_instances: 0,
        type_a_equivalence_checks: 0,
        violations: Vec::new(),
        witnesses: Vec::new(),
    };
    for cell in results {
        report.instances += cell.instances;
        report.considerate_instances += cell.considerate;
        report.type_a_equivalence_checks += cell.equivalence;
        report.violations.extend(cell.violations);
        report.witnesses.extend(cell.witnesses);
    }
    Ok(report)
}

/// Coxeter number governing considerateness for a type, including `GL_n`/`GSp_4`.
pub fn coxeter_number_of(t: DynkinType) -> Result<u32> {
    Ok(build_root_system(t)?.coxeter_number)
}

/// Human-readable name of the finite group for reports.
pub fn finite_group_name(t: DynkinType) -> String {
    match (t.variant, t.family) {
        (Variant::GeneralLinear, _) => format!("GL{}", t.rank + 1),
        (Variant::GeneralSymplectic, _) => "GSp4".to_string(),
        (Variant::Semisimple, Family::A) => format!("SL{}", t.rank + 1),
        (Variant::Semisimple, Family::C) => format!("Sp{}", 2 * t.rank),
        (Variant::Semisimple, Family::B) => format!("SO{}", 2 * t.rank + 1),
        (Variant::Semisimple, Family::D) => format!("SO{}", 2 * t.rank),
        _ => t.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(2_147_483_647));
    }

    #[test]
    fn considerate_examples() {
        assert!(is_considerate(&QContext::new(2, 5).unwrap(), 2));
        assert!(!is_considerate(&QContext::new(4, 5).unwrap(), 2));
        assert!(!is_considerate(&QContext::new(3, 11).unwrap(), 6));
        assert_eq!(QContext::new(3, 11).unwrap().failing_power(6), Some(5));
        assert!(is_considerate(&QContext::new(3, 0).unwrap(), 1000));
    }

    #[test]
    fn context_preconditions() {
        assert!(QContext::new(10, 5).is_err());
        assert!(QContext::new(1, 5).is_err());
        assert!(QContext::new(3, 9).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(chevalley_steinberg_order(&rs("GL2"), 5), BigUint::from(480u32));
        assert_eq!(chevalley_steinberg_order(&rs("SL2"), 3), BigUint::from(24u32));
        assert_eq!(
            chevalley_steinberg_order(&rs("Sp6"), 3),
            BigUint::from(9_170_703_360u64)
        );
        assert_eq!(chevalley_steinberg_order(&rs("GL3"), 2), BigUint::from(168u32));
    }

    #[test]
    fn banal_examples() {
        assert!(is_banal(11, &rs("Sp6"), 3).unwrap());
        assert!(!is_banal(5, &rs("GL2"), 5).unwrap());
        assert!(is_banal(7, &rs("SL2"), 3).unwrap());
        assert!(is_banal(5, &rs("GL2"), 2).unwrap());
    }

    #[test]
    fn small_sweep_is_clean() {
        let r = implication_sweep(&default_sweep_types(), 3, 50, 20).unwrap();
        assert!(r.violations.is_empty());
        assert!(r.witnesses.iter().any(|w| w.group == "C3" && w.l == 11 && w.q == 3));
        assert!(r.passed());
    }
}
