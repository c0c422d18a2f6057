//! Exact verification over `F_p`: points `(Φ, N)` of the moduli space for `GL_n` and
//! `GSp_4`, Zariski tangent spaces, and the explicit subspaces that certify
//! singularity.

pub mod certificate;
pub mod checks;
pub mod group;
pub mod points;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Matrix;

pub use certificate::{build_phi0, epsilon_certificate, EpsilonCertificate};
pub use checks::{
    bundle_count_check, exp_bridge_check, nilpotency_redundancy_check, BundleReport,
    NilpotencyReport,
};
pub use group::{GroupKind, GroupSpec, OrbitModel};
pub use points::{enumerate_sg, stratum_sample, summarize_enumeration, EnumerationSummary};

/// A pair `(Φ, N)` with `Φ ∈ G`, `N ∈ g` nilpotent and `Ad(Φ)N = qN`.
#[derive(Debug, Clone)]
pub struct SGPoint {
    pub spec: Arc<GroupSpec>,
    pub phi: Matrix,
    pub n_mat: Matrix,
    /// `q` reduced into `F_p`.
    pub q: u64,
}

impl SGPoint {
    pub fn new(spec: Arc<GroupSpec>, phi: Matrix, n_mat: Matrix, q: u64) -> Result<Self> {
        let q = spec.field().reduce(q);
        if !sg_member(&spec, &phi, &n_mat, q)? {
            return Err(Error::Precondition("(Φ, N) is not a point of S_G".into()));
        }
        Ok(Self {
            spec,
            phi,
            n_mat,
            q,
        })
    }

    /// Simultaneous conjugation by `g`.
    pub fn conjugate_by(&self, g: &Matrix) -> Option<Self> {
        Some(Self {
            spec: Arc::clone(&self.spec),
            phi: g.conjugate(&self.phi)?,
            n_mat: g.conjugate(&self.n_mat)?,
            q: self.q,
        })
    }
}

/// `Φ ∈ G`, `N ∈ g`, `ΦNΦ⁻¹ = qN` and `N^n = 0`.
pub fn sg_member(spec: &GroupSpec, phi: &Matrix, n_mat: &Matrix, q: u64) -> Result<bool> {
    spec.check_sizes(&[phi, n_mat])?;
    let q = spec.field().reduce(q);
    Ok(spec.in_group(phi)
        && spec.in_lie(n_mat)
        && phi * n_mat == &n_mat.scale(q) * phi
        && n_mat.is_nilpotent())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentReport {
    pub tangent_dim: usize,
    /// `dim G`, the relative dimension of `S_G`.
    pub reference_dim: usize,
    pub kernel_basis_size: usize,
}

/// Matrix of `(X, M) ↦ Ad(Φ)([X, N] + M) − qM` on `g ⊕ g`, columns in ambient
/// coordinates.
pub fn tangent_map(spec: &GroupSpec, phi: &Matrix, n_mat: &Matrix, q: u64) -> Result<Matrix> {
    spec.check_sizes(&[phi, n_mat])?;
    let f = spec.field();
    let inv = phi
        .inverse()
        .ok_or_else(|| Error::Precondition("Φ is not invertible".into()))?;
    let ad = |m: &Matrix| &(phi * m) * &inv;
    let mut cols: Vec<Vec<u64>> = spec
        .lie_basis()
        .iter()
        .map(|x| ad(&x.bracket(n_mat)).to_vec())
        .collect();
    cols.extend(
        spec.lie_basis()
            .iter()
            .map(|m| (&ad(m) - &m.scale(f.reduce(q))).to_vec()),
    );
    Ok(Matrix::from_columns(f, spec.n() * spec.n(), &cols))
}

/// Dimension of the Zariski tangent space of `S_G` at the point.
pub fn tangent_dim(pt: &SGPoint) -> TangentReport {
    let map = tangent_map(&pt.spec, &pt.phi, &pt.n_mat, pt.q).expect("point was validated");
    let kernel = map.kernel();
    TangentReport {
        tangent_dim: kernel.len(),
        reference_dim: pt.spec.dim_g(),
        kernel_basis_size: kernel.len(),
    }
}

/// Rows of a matrix as symmetric residues, for reports.
pub fn matrix_rows(m: &Matrix) -> Vec<Vec<i64>> {
    let f = m.field();
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| f.signed(m[(r, c)])).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn gl(n: usize, p: u64) -> Arc<GroupSpec> {
        Arc::new(GroupSpec::gl(n, PrimeField::new(p).unwrap()).unwrap())
    }

    #[test]
    fn membership_examples() {
        let spec = gl(2, 7);
        let f = spec.field();
        let phi = Matrix::diagonal(f, &[4, 1]);
        let e12 = Matrix::unit(f, 2, 0, 1);
        assert!(sg_member(&spec, &phi, &e12, 4).unwrap());
        assert!(!sg_member(&spec, &Matrix::identity(f, 2), &e12, 4).unwrap());
        assert!(sg_member(&spec, &phi, &Matrix::zeros(f, 2, 2), 4).unwrap());
        assert!(sg_member(&spec, &Matrix::identity(f, 3), &e12, 4).is_err());
    }

    #[test]
    fn tangent_at_zero_decouples() {
        let spec = gl(3, 11);
        let f = spec.field();
        let phi = Matrix::diagonal(f, &[2, 6, 6]);
        let pt = SGPoint::new(Arc::clone(&spec), phi.clone(), Matrix::zeros(f, 3, 3), 4).unwrap();
        let t = tangent_dim(&pt);
        assert_eq!(t.tangent_dim, 9 + spec.eigenspace_dim(&phi, 4).unwrap());
        assert_eq!(t.tangent_dim, 11);
    }

    #[test]
    fn tangent_regular_gl2() {
        let spec = gl(2, 7);
        let f = spec.field();
        let pt = SGPoint::new(
            Arc::clone(&spec),
            Matrix::diagonal(f, &[4, 1]),
            Matrix::unit(f, 2, 0, 1),
            4,
        )
        .unwrap();
        assert_eq!(tangent_dim(&pt).tangent_dim, 4);
    }
}
