//! Lower bounds on `dim T_P X_C` at `P = (Φ₀, 0)` for non-distinguished orbits.
//!
//! In the chart `Φ = Φ₀·exp(εX)`, `N = εM` four families of tangent vectors are
//! written down explicitly: the `G`-orbit of `Φ₀`, the torus `Z_L + s_α(Z_L)`, the
//! root line `e_{−α}`, and the `N`-directions `g_L(λ,2) + s_α(g_L(λ,2))`. Their
//! span is computed exactly; when it exceeds `dim G` the component is singular at `P`.

use serde::{Deserialize, Serialize};

use super::group::{GroupSpec, OrbitModel};
use super::{matrix_rows, tangent_map};
use crate::arith::QContext;
use crate::error::{Error, Result};
use crate::field::{solve_integer_system, span_dim, Matrix};

fn context_for(spec: &GroupSpec, s: u64) -> Result<(QContext, u64)> {
    let f = spec.field();
    let s = f.reduce(s);
    if s == 0 {
        return Err(Error::Precondition("s must be a unit in F_p".into()));
    }
    let q = f.mul(s, s);
    let h = spec.coxeter_number();
    if q == 1 {
        return Err(Error::Inconsiderate {
            q,
            l: f.modulus(),
            h,
            k: 1,
        });
    }
    let ctx = QContext::new(q, f.modulus())
        .map_err(|_| Error::Precondition(format!("q = s^2 = {q} is not a usable scale")))?;
    if let Some(k) = ctx.failing_power(h) {
        return Err(Error::Inconsiderate {
            q,
            l: f.modulus(),
            h,
            k,
        });
    }
    Ok((ctx, q))
}

fn adjacent(i: usize, j: usize) -> bool {
    i.abs_diff(j) == 1
}

fn default_alpha(spec: &GroupSpec, model: &OrbitModel) -> Option<usize> {
    (0..spec.rank()).find(|&a| !model.levi.contains(&a) && model.levi.iter().any(|&b| adjacent(a, b)))
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Integer exponents `x` with `Φ₀ = diag(s^{x_i})`.
///
/// Distinguished orbits give `x = λ`. Otherwise `x − λ` lies in the centre of the
/// Levi and is fixed by `α(Φ₀) = 1` and `β(Φ₀) = q` on the other simple roots outside
/// the Levi, with the scalar part normalized (`x_1 = λ_1` for `GL_n`, `x_1 + x_4 = 0`
/// for `GSp_4`).
pub fn phi0_exponents(
    spec: &GroupSpec,
    model: &OrbitModel,
    alpha: Option<usize>,
) -> Result<(Vec<i64>, Option<usize>)> {
    let rank = spec.rank();
    if model.levi.len() == rank {
        return Ok((model.lambda.clone(), None));
    }
    let alpha = match alpha {
        Some(a) => {
            if a >= rank {
                return Err(Error::RootIndex { index: a, rank });
            }
            if model.levi.contains(&a) || !model.levi.iter().any(|&b| adjacent(a, b)) {
                return Err(Error::Precondition(format!(
                    "simple root {} is not adjacent to the Levi from outside",
                    a + 1
                )));
            }
            a
        }
        None => default_alpha(spec, model).ok_or_else(|| {
            Error::Precondition("no simple root is adjacent to the Levi".into())
        })?,
    };
    let n = spec.n();
    let mut rows = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for b in 0..rank {
        let beta = spec.simple_root(b).to_vec();
        let target = if model.levi.contains(&b) {
            dot(&beta, &model.lambda)
        } else if b == alpha {
            0
        } else {
            2
        };
        rows.push(beta);
        rhs.push(target);
    }
    match spec.kind() {
        super::GroupKind::GL(_) => {
            let mut e1 = vec![0; n];
            e1[0] = 1;
            rows.push(e1);
            rhs.push(model.lambda[0]);
        }
        super::GroupKind::GSp4 => {
            rows.push(vec![1, -1, -1, 1]);
            rhs.push(0);
            rows.push(vec![1, 0, 0, 1]);
            rhs.push(0);
        }
    }
    let x = solve_integer_system(&rows, &rhs).ok_or_else(|| {
        Error::CertificateInvalid("Φ₀ exponent system has no unique integral solution".into())
    })?;
    Ok((x, Some(alpha)))
}

/// `Φ₀ = z·λ(s)`; see [`phi0_exponents`]. `alpha` is a 0-based simple root index.
pub fn build_phi0(
    spec: &GroupSpec,
    partition: &[u32],
    s: u64,
    alpha: Option<usize>,
) -> Result<Matrix> {
    context_for(spec, s)?;
    let model = spec.orbit_model(partition)?;
    if model.is_zero() && spec.rank() > 0 {
        return Err(Error::Precondition("the zero orbit has no Φ₀".into()));
    }
    let (x, _) = phi0_exponents(spec, &model, alpha)?;
    spec.cochar(&x, spec.field().reduce(s))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonCertificate {
    pub group: String,
    pub orbit: Vec<u32>,
    pub p: u64,
    pub s: u64,
    pub q: u64,
    /// Simple root `α` in 1-based Bourbaki numbering.
    pub alpha: usize,
    pub phi0: Vec<Vec<i64>>,
    pub phi0_exponents: Vec<i64>,
    pub dim_g: usize,
    pub stabilizer_dim: usize,
    pub levi_center_dim: usize,
    pub g_l0_dim: usize,
    pub g_l2_dim: usize,
    pub orbit_part_dim: usize,
    pub torus_part_dim: usize,
    pub unipotent_part_dim: usize,
    pub phi_span_dim: usize,
    pub n_span_dim: usize,
    /// Torus, unipotent and `N` parts together.
    pub contribution_dim: usize,
    pub eps0: i64,
    pub eps1: i64,
    pub eps2: i64,
    pub eps3: i64,
    pub lower_bound: usize,
    /// `dim T_P S_G = dim g + dim ker(Ad Φ₀ − q)`, an upper bound for `dim T_P X_C`.
    pub ambient_tangent_dim: usize,
    pub verified_tangency: bool,
}

impl EpsilonCertificate {
    pub fn is_valid(&self) -> bool {
        self.verified_tangency
            && self.lower_bound > self.dim_g
            && self.lower_bound <= self.ambient_tangent_dim
            && self.eps1 >= 1
            && self.eps2 >= 1
            && self.eps3 >= 1
    }
}

fn flat(ms: &[Matrix]) -> Vec<Vec<u64>> {
    ms.iter().map(Matrix::to_vec).collect()
}

/// Build the four families of tangent vectors at `(Φ₀, 0)` and measure them.
pub fn epsilon_certificate(
    spec: &GroupSpec,
    partition: &[u32],
    s: u64,
    alpha: Option<usize>,
) -> Result<EpsilonCertificate> {
    let (_, q) = context_for(spec, s)?;
    let f = spec.field();
    let s = f.reduce(s);
    let model = spec.orbit_model(partition)?;
    if model.is_zero() {
        return Err(Error::Precondition("the zero orbit is smooth; no certificate".into()));
    }
    if model.levi.len() == spec.rank() {
        return Err(Error::Precondition(
            "orbit is distinguished; its component is smooth".into(),
        ));
    }
    let (x, alpha) = phi0_exponents(spec, &model, alpha)?;
    let alpha = alpha.expect("non-distinguished orbit");
    let phi0 = spec.cochar(&x, s)?;
    let phi0_inv = phi0.inverse().expect("diagonal with unit entries");
    let w = spec.weyl_rep(alpha)?;
    let ad = |g: &Matrix, m: &Matrix| g.conjugate(m).expect("invertible");
    let invalid = |what: String| Err(Error::CertificateInvalid(what));

    // Orbit of Φ₀ under conjugation.
    let orbit_part: Vec<Matrix> = spec
        .lie_basis()
        .iter()
        .map(|b| &ad(&phi0_inv, b) - b)
        .collect();

    // Lie(Z_L) and its reflection.
    let center: Vec<Matrix> = model
        .center_cochars
        .iter()
        .map(|y| {
            let d: Vec<u64> = y.iter().map(|&v| f.from_i64(v)).collect();
            Matrix::diagonal(f, &d)
        })
        .collect();
    let levi_center_dim = span_dim(f, &flat(&center));
    if levi_center_dim + model.levi.len() != spec.cochar_basis().len() {
        return invalid(format!(
            "centre of the Levi has dimension {levi_center_dim}, expected {}",
            spec.cochar_basis().len() - model.levi.len()
        ));
    }
    let mut torus_part = center.clone();
    torus_part.extend(center.iter().map(|z| ad(&w, z)));

    // e_{−α}: fixed by Φ₀ and commuting with e.
    let neg_alpha: Vec<i64> = spec.simple_root(alpha).iter().map(|c| -c).collect();
    let e_neg = spec
        .root_vector(&neg_alpha)
        .ok_or_else(|| Error::CertificateInvalid("no root vector for −α".into()))?
        .clone();
    if ad(&phi0, &e_neg) != e_neg {
        return invalid("α(Φ₀) ≠ 1".into());
    }
    if !e_neg.bracket(&model.e).is_zero() {
        return invalid("[e_{−α}, e] ≠ 0".into());
    }
    let unipotent_part = vec![e_neg];

    // g_L(λ, 0) and g_L(λ, 2) from the Levi root vectors.
    let mut g_l0_dim = spec.torus_basis().len();
    let mut g_l2 = Vec::new();
    for (m, c) in spec.root_vectors() {
        if !spec.in_levi(&c, &model.levi) {
            continue;
        }
        match dot(&c, &model.lambda) {
            0 => g_l0_dim += 1,
            2 => g_l2.push(m.clone()),
            _ => {}
        }
    }
    let mut n_part = g_l2.clone();
    n_part.extend(g_l2.iter().map(|m| ad(&w, m)));
    for m in &n_part {
        if !spec.in_lie(m) || ad(&phi0, m) != m.scale(q) {
            return invalid("an N-direction fails Ad(Φ₀)M = qM".into());
        }
    }

    let mut phi_vectors = orbit_part.clone();
    phi_vectors.extend(torus_part.iter().cloned());
    phi_vectors.extend(unipotent_part.iter().cloned());

    // Every vector must lie in the kernel of the tangent map at (Φ₀, 0).
    let dim_g = spec.dim_g();
    let zero = Matrix::zeros(f, spec.n(), spec.n());
    let tmap = tangent_map(spec, &phi0, &zero, q)?;
    let mut combined: Vec<Vec<u64>> = Vec::new();
    for (m, is_x) in phi_vectors
        .iter()
        .map(|m| (m, true))
        .chain(n_part.iter().map(|m| (m, false)))
    {
        let coords = spec
            .coordinates(m)
            .ok_or_else(|| Error::CertificateInvalid("vector outside the Lie algebra".into()))?;
        let mut v = vec![0u64; 2 * dim_g];
        let offset = if is_x { 0 } else { dim_g };
        v[offset..offset + dim_g].copy_from_slice(&coords);
        let col = Matrix::from_columns(f, 2 * dim_g, std::slice::from_ref(&v));
        if !(&tmap * &col).is_zero() {
            return invalid("a vector is not tangent to S_G at (Φ₀, 0)".into());
        }
        combined.push(v);
    }

    let orbit_part_dim = span_dim(f, &flat(&orbit_part));
    let torus_part_dim = span_dim(f, &flat(&torus_part));
    let unipotent_part_dim = span_dim(f, &flat(&unipotent_part));
    let phi_span_dim = span_dim(f, &flat(&phi_vectors));
    let n_span_dim = span_dim(f, &flat(&n_part));
    let lower_bound = span_dim(f, &combined);
    if lower_bound != phi_span_dim + n_span_dim {
        return invalid("X- and N-parts are not independent".into());
    }
    let mut contribution = torus_part.clone();
    contribution.extend(unipotent_part.iter().cloned());
    let contribution_dim = span_dim(f, &flat(&contribution)) + n_span_dim;
    let stabilizer_dim = spec.eigenspace_dim(&phi0, 1)?;
    let ambient_tangent_dim = dim_g + spec.eigenspace_dim(&phi0, q)?;

    Ok(EpsilonCertificate {
        group: spec.name(),
        orbit: partition.to_vec(),
        p: f.modulus(),
        s,
        q,
        alpha: alpha + 1,
        phi0: matrix_rows(&phi0),
        phi0_exponents: x,
        dim_g,
        stabilizer_dim,
        levi_center_dim,
        g_l0_dim,
        g_l2_dim: g_l2.len(),
        orbit_part_dim,
        torus_part_dim,
        unipotent_part_dim,
        phi_span_dim,
        n_span_dim,
        contribution_dim,
        eps0: stabilizer_dim as i64 - g_l0_dim as i64,
        eps1: torus_part_dim as i64 - levi_center_dim as i64,
        eps2: n_span_dim as i64 - g_l2.len() as i64,
        eps3: unipotent_part_dim as i64,
        lower_bound,
        ambient_tangent_dim,
        verified_tangency: true,
    })
}
