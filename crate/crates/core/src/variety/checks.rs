//! Empirical checks: automatic nilpotency of `N`, the exponential bridge to
//! `ΦσΦ⁻¹ = σ^q`, and the vector-bundle structure over the regular locus.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::group::{GroupKind, GroupSpec};
use super::points::{gl2_elements, span_elements, twisted_commutator_map};
use super::{matrix_rows, SGPoint};
use crate::arith::{is_considerate, QContext};
use crate::error::{Error, Result};
use crate::field::Matrix;

/// Largest kernel, counted in elements, enumerated per sampled `Φ`.
const SPAN_BUDGET: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixPair {
    pub phi: Vec<Vec<i64>>,
    pub n: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotencyReport {
    pub group: String,
    pub p: u64,
    pub q: u64,
    pub order_of_q: u32,
    pub considerate: bool,
    pub exhaustive: bool,
    pub phis_checked: u64,
    pub solutions_checked: u64,
    pub non_nilpotent_solutions: u64,
    pub witness: Option<MatrixPair>,
    pub witness_verified: bool,
}

impl NilpotencyReport {
    pub fn passed(&self) -> bool {
        if self.considerate {
            self.non_nilpotent_solutions == 0
        } else {
            self.witness_verified
        }
    }
}

fn context(spec: &GroupSpec, q: u64) -> Result<QContext> {
    QContext::new(q, spec.field().modulus())
}

/// The canonical non-nilpotent solution when `k = ord(q) ≤ n`: `Φ = diag(1, q, ..,
/// q^{k−1}, 1, ..)` and `N` the cyclic permutation `e_i ↦ e_{i+1}` on the first `k`
/// coordinates.
pub fn cyclic_witness(spec: &GroupSpec, q: u64, k: usize) -> (Matrix, Matrix) {
    let f = spec.field();
    let n = spec.n();
    let mut d = vec![1u64; n];
    for (i, di) in d.iter_mut().enumerate().take(k) {
        *di = f.pow(q, i as u64);
    }
    let mut nm = Matrix::zeros(f, n, n);
    for i in 0..k {
        nm[((i + 1) % k, i)] = 1;
    }
    (Matrix::diagonal(f, &d), nm)
}

/// Solutions of `ΦNΦ⁻¹ = qN` with `N` unconstrained are nilpotent when `q` is
/// considerate; otherwise a non-nilpotent solution is exhibited.
///
/// `GL_2` is checked over every `Φ`; larger groups over `samples` random `Φ`.
pub fn nilpotency_redundancy_check(
    spec: &GroupSpec,
    q: u64,
    samples: usize,
    seed: u64,
) -> Result<NilpotencyReport> {
    let GroupKind::GL(n) = spec.kind() else {
        return Err(Error::UnsupportedType(format!("{}: GL_n only", spec.name())));
    };
    let ctx = context(spec, q)?;
    let f = spec.field();
    let qf = f.reduce(q);
    let order = ctx.order().expect("p is prime");
    let considerate = is_considerate(&ctx, n as u32);
    let exhaustive = n == 2;
    let phis: Vec<Matrix> = if exhaustive {
        gl2_elements(f)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).map(|_| spec.random_element(&mut rng)).collect()
    };
    let counts: Vec<(u64, u64, Option<(Matrix, Matrix)>)> = phis
        .par_iter()
        .map(|phi| {
            let kernel = twisted_commutator_map(phi, qf).kernel();
            if f.modulus().checked_pow(kernel.len() as u32).is_none_or(|t| t > SPAN_BUDGET) {
                // Too many solutions to list; the basis vectors still witness the failure.
                let bad: Vec<Matrix> = kernel
                    .iter()
                    .map(|v| Matrix::from_flat(f, n, n, v.clone()))
                    .filter(|m| !m.is_nilpotent())
                    .collect();
                let w = bad.first().map(|m| (phi.clone(), m.clone()));
                return (kernel.len() as u64, bad.len() as u64, w);
            }
            let mut total = 0;
            let mut bad = 0;
            let mut witness = None;
            for m in span_elements(f, n, &kernel) {
                total += 1;
                if !m.is_nilpotent() {
                    bad += 1;
                    if witness.is_none() {
                        witness = Some((phi.clone(), m));
                    }
                }
            }
            (total, bad, witness)
        })
        .collect();
    let solutions_checked = counts.iter().map(|c| c.0).sum();
    let non_nilpotent_solutions = counts.iter().map(|c| c.1).sum();

    let (witness, witness_verified) = if considerate {
        (None, false)
    } else {
        let (phi, nm) = cyclic_witness(spec, qf, order as usize);
        let holds = &(&phi * &nm) == &(&nm * &phi).scale(qf) && !nm.is_nilpotent();
        (
            Some(MatrixPair {
                phi: matrix_rows(&phi),
                n: matrix_rows(&nm),
            }),
            holds,
        )
    };
    Ok(NilpotencyReport {
        group: spec.name(),
        p: f.modulus(),
        q: qf,
        order_of_q: order,
        considerate,
        exhaustive,
        phis_checked: phis.len() as u64,
        solutions_checked,
        non_nilpotent_solutions,
        witness,
        witness_verified,
    })
}

/// `σ = exp(N) = Σ_{k<n} N^k/k!`.
pub fn exp_nilpotent(n_mat: &Matrix) -> Result<Matrix> {
    let f = n_mat.field();
    let n = n_mat.rows();
    if f.modulus() <= n as u64 {
        return Err(Error::Precondition(format!(
            "exp needs p > n, got p = {} and n = {n}",
            f.modulus()
        )));
    }
    let mut sigma = Matrix::identity(f, n);
    let mut term = Matrix::identity(f, n);
    for k in 1..n as u64 {
        term = (&term * n_mat).scale(f.inv(k).expect("k < p"));
        sigma = &sigma + &term;
    }
    Ok(sigma)
}

/// `log σ = Σ_{k≥1} (−1)^{k+1}(σ − 1)^k/k` for unipotent `σ`.
pub fn log_unipotent(sigma: &Matrix) -> Result<Matrix> {
    let f = sigma.field();
    let n = sigma.rows();
    if f.modulus() <= n as u64 {
        return Err(Error::Precondition("log needs p > n".into()));
    }
    let u = sigma - &Matrix::identity(f, n);
    let mut out = Matrix::zeros(f, n, n);
    let mut power = Matrix::identity(f, n);
    for k in 1..n as u64 {
        power = &power * &u;
        let mut c = f.inv(k).expect("k < p");
        if k % 2 == 0 {
            c = f.neg(c);
        }
        out = &out + &power.scale(c);
    }
    Ok(out)
}

/// With `σ = exp(N)`: `ΦσΦ⁻¹ = σ^q` and `log σ = N`.
pub fn exp_bridge_check(pt: &SGPoint) -> Result<bool> {
    let sigma = exp_nilpotent(&pt.n_mat)?;
    let lhs = pt
        .phi
        .conjugate(&sigma)
        .ok_or_else(|| Error::Precondition("Φ is not invertible".into()))?;
    let rhs = sigma.pow(pt.q);
    Ok(lhs == rhs && log_unipotent(&sigma)? == pt.n_mat)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleReport {
    pub group: String,
    pub p: u64,
    pub q: u64,
    pub exhaustive: bool,
    pub base_points: u64,
    pub expected_fiber: u64,
    /// Fibre size `#{N : Ad(Φ)N = qN}` against the number of base points with it.
    pub fiber_histogram: BTreeMap<u64, u64>,
    pub all_fibers_match: bool,
    /// Sampled base points all passed the locus test.
    pub locus_verified: bool,
}

impl BundleReport {
    pub fn passed(&self) -> bool {
        self.all_fibers_match && self.locus_verified && self.base_points > 0
    }
}

/// `Φ` is diagonalizable with eigenvalues `z, zq, .., zq^{n−1}` for some `z ≠ 0`:
/// `z` is read off the trace, each `zq^i` is an eigenvalue with a one-dimensional
/// eigenspace, and `∏(Φ − zq^i)` vanishes (squarefree minimal polynomial).
pub fn in_regular_locus(phi: &Matrix, q: u64) -> bool {
    let f = phi.field();
    let n = phi.rows();
    let denom = (0..n as u64).fold(0, |acc, i| f.add(acc, f.pow(q, i)));
    let Some(dinv) = f.inv(denom) else {
        return false;
    };
    let z = f.mul(phi.trace(), dinv);
    if z == 0 {
        return false;
    }
    let id = Matrix::identity(f, n);
    let mut product = Matrix::identity(f, n);
    for i in 0..n as u64 {
        let shifted = phi - &id.scale(f.mul(z, f.pow(q, i)));
        if shifted.rank() != n - 1 {
            return false;
        }
        product = &product * &shifted;
    }
    product.is_zero()
}

/// Over every base point `Φ` of the regular semisimple locus, the fibre
/// `{N : Ad(Φ)N = qN}` has `p^{n−1}` points. `GL_2` is exhaustive; `GL_3` samples
/// `Φ = g·z·diag(1, q, q²)·g⁻¹`.
pub fn bundle_count_check(
    spec: &GroupSpec,
    q: u64,
    samples: usize,
    seed: u64,
) -> Result<BundleReport> {
    let n = match spec.kind() {
        GroupKind::GL(n) if n <= 3 => n,
        _ => {
            return Err(Error::UnsupportedType(format!(
                "{}: bundle check covers GL2 and GL3",
                spec.name()
            )))
        }
    };
    let ctx = context(spec, q)?;
    if let Some(k) = ctx.failing_power(n as u32) {
        return Err(Error::Inconsiderate {
            q,
            l: ctx.l(),
            h: n as u32,
            k,
        });
    }
    let f = spec.field();
    let p = f.modulus();
    let qf = f.reduce(q);
    let expected = p.pow(n as u32 - 1);
    let fiber = |phi: &Matrix| -> u64 {
        let d = spec.eigenspace_dim(phi, qf).expect("square invertible");
        p.pow(d as u32)
    };
    let (exhaustive, fibers, locus_verified) = if n == 2 {
        let fibers: Vec<u64> = gl2_elements(f)
            .par_iter()
            .filter(|phi| in_regular_locus(phi, qf))
            .map(fiber)
            .collect();
        (true, fibers, true)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut fibers = Vec::with_capacity(samples);
        let mut locus_ok = true;
        for _ in 0..samples {
            let z = rng.gen_range(1..p);
            let d: Vec<u64> = (0..n as u64).map(|i| f.mul(z, f.pow(qf, i))).collect();
            let g = spec.random_element(&mut rng);
            let phi = g.conjugate(&Matrix::diagonal(f, &d)).expect("invertible");
            locus_ok &= in_regular_locus(&phi, qf);
            fibers.push(fiber(&phi));
        }
        (false, fibers, locus_ok)
    };
    let mut hist = BTreeMap::new();
    for &s in &fibers {
        *hist.entry(s).or_insert(0) += 1;
    }
    Ok(BundleReport {
        group: spec.name(),
        p,
        q: qf,
        exhaustive,
        base_points: fibers.len() as u64,
        expected_fiber: expected,
        all_fibers_match: fibers.iter().all(|&s| s == expected),
        fiber_histogram: hist,
        locus_verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use std::sync::Arc;

    fn gl(n: usize, p: u64) -> GroupSpec {
        GroupSpec::gl(n, PrimeField::new(p).unwrap()).unwrap()
    }

    #[test]
    fn gl2_nilpotency() {
        let r = nilpotency_redundancy_check(&gl(2, 7), 4, 0, 0).unwrap();
        assert!(r.considerate && r.exhaustive);
        assert_eq!(r.non_nilpotent_solutions, 0);
        let r = nilpotency_redundancy_check(&gl(2, 7), 6, 0, 0).unwrap();
        assert!(!r.considerate);
        assert!(r.witness_verified);
        assert!(r.non_nilpotent_solutions > 0);
        let w = r.witness.unwrap();
        assert_eq!(w.phi, vec![vec![1, 0], vec![0, -1]]);
        assert_eq!(w.n, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn exp_bridge_example() {
        let spec = Arc::new(gl(2, 7));
        let f = spec.field();
        let pt = SGPoint::new(
            Arc::clone(&spec),
            Matrix::diagonal(f, &[4, 1]),
            Matrix::unit(f, 2, 0, 1),
            4,
        )
        .unwrap();
        let sigma = exp_nilpotent(&pt.n_mat).unwrap();
        assert_eq!(sigma, Matrix::from_rows(f, &[vec![1, 1], vec![0, 1]]));
        assert!(exp_bridge_check(&pt).unwrap());
        let tiny = Arc::new(gl(3, 3));
        let z = Matrix::zeros(tiny.field(), 3, 3);
        let pt = SGPoint::new(Arc::clone(&tiny), Matrix::identity(tiny.field(), 3), z, 2).unwrap();
        assert!(exp_bridge_check(&pt).is_err());
    }

    #[test]
    fn bundle_gl2() {
        let r = bundle_count_check(&gl(2, 7), 4, 0, 0).unwrap();
        assert_eq!(r.base_points, 336);
        assert!(r.passed());
        let spec = gl(2, 7);
        let f = spec.field();
        for z in 1..7 {
            let phi = Matrix::diagonal(f, &[f.mul(4, z), z]);
            assert!(in_regular_locus(&phi, 4));
            let k = spec.eigenspace(&phi, 4).unwrap();
            assert_eq!(k, vec![Matrix::unit(f, 2, 0, 1)]);
        }
    }

    #[test]
    fn bundle_rejects_inconsiderate() {
        assert!(matches!(
            bundle_count_check(&gl(2, 7), 6, 0, 0),
            Err(Error::Inconsiderate { k: 2, .. })
        ));
    }
}
