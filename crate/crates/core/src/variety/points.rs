//! Point enumeration for `GL_2` and seeded sampling of a chosen stratum.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::group::{GroupKind, GroupSpec};
use super::SGPoint;
use crate::arith::{is_considerate, QContext};
use crate::error::{Error, Result};
use crate::field::{combine, Matrix, PrimeField};

/// Largest prime for which `S_{GL_2}(F_p)` is enumerated in full.
pub const ENUMERATION_MAX_P: u64 = 13;

/// Matrix of `N ↦ ΦN − qNΦ` on `gl_n` in the unit-matrix basis.
pub(crate) fn twisted_commutator_map(phi: &Matrix, q: u64) -> Matrix {
    let f = phi.field();
    let n = phi.rows();
    let cols: Vec<Vec<u64>> = (0..n * n)
        .map(|k| {
            let e = Matrix::unit(f, n, k / n, k % n);
            (&(phi * &e) - &(&e * phi).scale(q)).to_vec()
        })
        .collect();
    Matrix::from_columns(f, n * n, &cols)
}

/// Basis of `{Φ ∈ gl_n : ΦN = qNΦ}`.
pub(crate) fn phi_solutions(n_mat: &Matrix, q: u64) -> Vec<Matrix> {
    let f = n_mat.field();
    let n = n_mat.rows();
    let cols: Vec<Vec<u64>> = (0..n * n)
        .map(|k| {
            let e = Matrix::unit(f, n, k / n, k % n);
            (&(&e * n_mat) - &(n_mat * &e).scale(q)).to_vec()
        })
        .collect();
    Matrix::from_columns(f, n * n, &cols)
        .kernel()
        .into_iter()
        .map(|v| Matrix::from_flat(f, n, n, v))
        .collect()
}

/// Every element of the span of `basis` (`p^k` of them), in a fixed order.
pub(crate) fn span_elements(f: PrimeField, n: usize, basis: &[Vec<u64>]) -> Vec<Matrix> {
    let p = f.modulus();
    let k = basis.len();
    let total = p.pow(k as u32);
    (0..total)
        .map(|mut idx| {
            let mut v = vec![0u64; n * n];
            for b in basis {
                let c = idx % p;
                idx /= p;
                if c != 0 {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi = f.add(*vi, f.mul(c, *bi));
                    }
                }
            }
            Matrix::from_flat(f, n, n, v)
        })
        .collect()
}

/// All invertible `2 × 2` matrices over `F_p` in lexicographic order of entries.
pub(crate) fn gl2_elements(f: PrimeField) -> Vec<Matrix> {
    let p = f.modulus();
    (0..p.pow(4))
        .into_par_iter()
        .filter_map(|idx| {
            let data = vec![idx / (p * p * p), idx / (p * p) % p, idx / p % p, idx % p];
            let m = Matrix::from_flat(f, 2, 2, data);
            m.is_invertible().then_some(m)
        })
        .collect()
}

/// Every point of `S_{GL_2}(F_p)`: for each `Φ`, the nilpotent elements of the
/// kernel of `N ↦ ΦN − qNΦ`.
pub fn enumerate_sg(spec: &Arc<GroupSpec>, q: u64) -> Result<Vec<SGPoint>> {
    let f = spec.field();
    if spec.kind() != GroupKind::GL(2) {
        return Err(Error::Budget(format!(
            "full enumeration is limited to GL2, got {}",
            spec.name()
        )));
    }
    if f.modulus() > ENUMERATION_MAX_P {
        return Err(Error::Budget(format!(
            "full enumeration is limited to p <= {ENUMERATION_MAX_P}, got {}",
            f.modulus()
        )));
    }
    let q = f.reduce(q);
    let points: Vec<Vec<SGPoint>> = gl2_elements(f)
        .into_par_iter()
        .map(|phi| {
            let kernel = twisted_commutator_map(&phi, q).kernel();
            span_elements(f, 2, &kernel)
                .into_iter()
                .filter(Matrix::is_nilpotent)
                .map(|n_mat| SGPoint {
                    spec: Arc::clone(spec),
                    phi: phi.clone(),
                    n_mat,
                    q,
                })
                .collect()
        })
        .collect();
    Ok(points.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    pub group: String,
    pub p: u64,
    pub q: u64,
    pub considerate: bool,
    pub group_order: u64,
    pub points: u64,
    pub zero_stratum: u64,
    pub regular_stratum: u64,
    /// Every point with `N ≠ 0` has trace and determinant zero.
    pub nonzero_trace_det_zero: bool,
}

pub fn summarize_enumeration(spec: &GroupSpec, q: u64, points: &[SGPoint]) -> EnumerationSummary {
    let f = spec.field();
    let p = f.modulus();
    let ctx = QContext::new(q.max(2), p).ok();
    let zero = points.iter().filter(|pt| pt.n_mat.is_zero()).count() as u64;
    EnumerationSummary {
        group: spec.name(),
        p,
        q: f.reduce(q),
        considerate: ctx.is_some_and(|c| is_considerate(&c, spec.coxeter_number())),
        group_order: (p * p - 1) * (p * p - p),
        points: points.len() as u64,
        zero_stratum: zero,
        regular_stratum: points.len() as u64 - zero,
        nonzero_trace_det_zero: points
            .iter()
            .filter(|pt| !pt.n_mat.is_zero())
            .all(|pt| pt.n_mat.trace() == 0 && pt.n_mat.determinant() == 0),
    }
}

/// A square root of `q` in `F_p`, if one exists.
pub fn sqrt_mod(f: PrimeField, q: u64) -> Option<u64> {
    let q = f.reduce(q);
    (1..f.modulus()).find(|&s| f.mul(s, s) == q)
}

/// Up to `count` points with `N` in the stratum of the given Jordan type.
///
/// For `GL_n`: `N = gJg⁻¹` for random `g`, and `Φ` a random invertible solution of the
/// linear system `ΦN = qNΦ`. For `GSp_4`: the model point `(t·λ(s), e)` with `t`
/// in the centre of the orbit's Levi and `s² = q`, conjugated by a random element.
pub fn stratum_sample(
    spec: &Arc<GroupSpec>,
    q: u64,
    partition: &[u32],
    count: usize,
    seed: u64,
) -> Result<Vec<SGPoint>> {
    let f = spec.field();
    let q = f.reduce(q);
    if q == 0 {
        return Err(Error::Precondition("q must be a unit in F_p".into()));
    }
    let model = spec.orbit_model(partition)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let budget = 200 * count.max(1);
    match spec.kind() {
        GroupKind::GL(n) => {
            for _ in 0..budget {
                if out.len() == count {
                    break;
                }
                let g = spec.random_element(&mut rng);
                let n_mat = g.conjugate(&model.e).expect("g is invertible");
                let basis = phi_solutions(&n_mat, q);
                if basis.is_empty() {
                    continue;
                }
                let coeffs: Vec<u64> = basis.iter().map(|_| rng.gen_range(0..f.modulus())).collect();
                let phi = combine(f, &basis, &coeffs);
                if phi.is_invertible() {
                    debug_assert_eq!(phi.rows(), n);
                    out.push(SGPoint {
                        spec: Arc::clone(spec),
                        phi,
                        n_mat,
                        q,
                    });
                }
            }
        }
        GroupKind::GSp4 => {
            let s = sqrt_mod(f, q).ok_or_else(|| {
                Error::Precondition(format!("q = {q} has no square root in F_{}", f.modulus()))
            })?;
            let lambda_s = spec.cochar(&model.lambda, s)?;
            for _ in 0..budget {
                if out.len() == count {
                    break;
                }
                let g = spec.random_element(&mut rng);
                let (phi, n_mat) = if model.is_zero() {
                    (spec.random_element(&mut rng), Matrix::zeros(f, 4, 4))
                } else {
                    let t = spec.random_torus_element(&model.center_cochars, &mut rng);
                    let base = &t * &lambda_s;
                    (
                        g.conjugate(&base).expect("invertible"),
                        g.conjugate(&model.e).expect("invertible"),
                    )
                };
                out.push(SGPoint {
                    spec: Arc::clone(spec),
                    phi,
                    n_mat,
                    q,
                });
            }
        }
    }
    Ok(out)
}
