//! Matrix realizations of `GL_n` (n ≤ 4) and `GSp_4` over `F_p`.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{combine, integer_rank, Matrix, PrimeField};
use crate::rootsys::DynkinType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    GL(usize),
    GSp4,
}

/// A matrix group with a fixed basis of its Lie algebra: the diagonal part first,
/// then one root vector per root.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    kind: GroupKind,
    field: PrimeField,
    n: usize,
    lie_basis: Vec<Matrix>,
    torus_dim: usize,
    /// Leading matrix position `(i, j)` of each root vector; its torus weight is `e_i − e_j`.
    root_positions: Vec<(usize, usize)>,
    omega: Option<Matrix>,
    /// Simple roots as characters `Σ c_k e_k` of the diagonal torus.
    simple_roots: Vec<Vec<i64>>,
    /// Characters that are trivial on the torus.
    char_relations: Vec<Vec<i64>>,
    /// A basis of the cocharacter lattice of the diagonal torus.
    cochar_basis: Vec<Vec<i64>>,
}

/// A nilpotent orbit representative `e` with its associated cocharacter `λ`, the
/// simple roots of its minimal Levi, and cocharacters spanning the centre of that Levi.
#[derive(Debug, Clone)]
pub struct OrbitModel {
    pub partition: Vec<u32>,
    pub e: Matrix,
    pub lambda: Vec<i64>,
    pub levi: BTreeSet<usize>,
    pub center_cochars: Vec<Vec<i64>>,
}

impl OrbitModel {
    pub fn is_zero(&self) -> bool {
        self.e.is_zero()
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

impl GroupSpec {
    pub fn gl(n: usize, field: PrimeField) -> Result<Self> {
        if !(2..=4).contains(&n) {
            return Err(Error::UnsupportedType(format!("GL{n}: only 2 <= n <= 4 is modelled")));
        }
        let mut lie_basis: Vec<Matrix> = (0..n).map(|i| Matrix::unit(field, n, i, i)).collect();
        let mut root_positions = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    lie_basis.push(Matrix::unit(field, n, i, j));
                    root_positions.push((i, j));
                }
            }
        }
        let simple_roots = (0..n - 1)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v[i + 1] = -1;
                v
            })
            .collect();
        Ok(Self {
            kind: GroupKind::GL(n),
            field,
            n,
            lie_basis,
            torus_dim: n,
            root_positions,
            omega: None,
            simple_roots,
            char_relations: Vec::new(),
            cochar_basis: (0..n).map(|i| unit_vec(n, i)).collect(),
        })
    }

    /// `GSp_4` for the antidiagonal form `Ω` with entries `(1, 1, −1, −1)` from the
    /// top-right corner down.
    pub fn gsp4(field: PrimeField) -> Result<Self> {
        if field.modulus() < 5 {
            return Err(Error::InvalidField(field.modulus()));
        }
        let omega = Matrix::from_rows(
            field,
            &[
                vec![0, 0, 0, 1],
                vec![0, 0, 1, 0],
                vec![0, -1, 0, 0],
                vec![-1, 0, 0, 0],
            ],
        );
        let cochar_basis = vec![vec![1, 0, 0, -1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]];
        let mut spec = Self {
            kind: GroupKind::GSp4,
            field,
            n: 4,
            lie_basis: Vec::new(),
            torus_dim: 3,
            root_positions: Vec::new(),
            omega: Some(omega),
            simple_roots: vec![vec![1, -1, 0, 0], vec![0, 1, -1, 0]],
            char_relations: vec![vec![1, -1, -1, 1]],
            cochar_basis: cochar_basis.clone(),
        };
        spec.lie_basis = cochar_basis
            .iter()
            .map(|y| {
                let d: Vec<u64> = y.iter().map(|&v| field.from_i64(v)).collect();
                Matrix::diagonal(field, &d)
            })
            .collect();
        let mut seen = BTreeSet::new();
        for i in 0..4 {
            for j in 0..4 {
                if i == j || seen.contains(&(i, j)) {
                    continue;
                }
                let partner = (3 - j, 3 - i);
                let single = Matrix::unit(field, 4, i, j);
                let x = if partner == (i, j) {
                    single
                } else {
                    [1i64, -1]
                        .iter()
                        .map(|&sign| {
                            let mut m = single.clone();
                            m[partner] = field.from_i64(sign);
                            m
                        })
                        .find(|m| spec.in_lie(m))
                        .expect("one sign gives an element of gsp4")
                };
                debug_assert!(spec.in_lie(&x));
                seen.insert((i, j));
                seen.insert(partner);
                spec.lie_basis.push(x);
                spec.root_positions.push((i, j));
            }
        }
        Ok(spec)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim_g(&self) -> usize {
        self.lie_basis.len()
    }

    pub fn lie_basis(&self) -> &[Matrix] {
        &self.lie_basis
    }

    pub fn torus_basis(&self) -> &[Matrix] {
        &self.lie_basis[..self.torus_dim]
    }

    pub fn omega(&self) -> Option<&Matrix> {
        self.omega.as_ref()
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn name(&self) -> String {
        match self.kind {
            GroupKind::GL(n) => format!("GL{n}"),
            GroupKind::GSp4 => "GSp4".into(),
        }
    }

    pub fn dynkin_type(&self) -> DynkinType {
        match self.kind {
            GroupKind::GL(n) => DynkinType::gl(n).expect("n >= 2"),
            GroupKind::GSp4 => DynkinType::gsp4(),
        }
    }

    pub fn coxeter_number(&self) -> u32 {
        match self.kind {
            GroupKind::GL(n) => n as u32,
            GroupKind::GSp4 => 4,
        }
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.simple_roots[i]
    }

    pub fn cochar_basis(&self) -> &[Vec<i64>] {
        &self.cochar_basis
    }

    fn check_size(&self, m: &Matrix) -> Result<()> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        Ok(())
    }

    pub fn check_sizes(&self, ms: &[&Matrix]) -> Result<()> {
        ms.iter().try_for_each(|m| self.check_size(m))
    }

    /// `gᵀΩg = μΩ`; returns the multiplier `μ`.
    pub fn similitude(&self, g: &Matrix) -> Option<u64> {
        let omega = self.omega.as_ref()?;
        let lhs = &(&g.transpose() * omega) * g;
        let mu = lhs[(0, 3)];
        (mu != 0 && lhs == omega.scale(mu)).then_some(mu)
    }

    pub fn in_group(&self, g: &Matrix) -> bool {
        if g.rows() != self.n || g.cols() != self.n || !g.is_invertible() {
            return false;
        }
        match self.kind {
            GroupKind::GL(_) => true,
            GroupKind::GSp4 => self.similitude(g).is_some(),
        }
    }

    /// `XᵀΩ + ΩX = cΩ` for some `c`.
    pub fn in_lie(&self, x: &Matrix) -> bool {
        if x.rows() != self.n || x.cols() != self.n {
            return false;
        }
        match &self.omega {
            None => true,
            Some(omega) => {
                let y = &(&x.transpose() * omega) + &(omega * x);
                y == omega.scale(y[(0, 3)])
            }
        }
    }

    /// Coordinates of `x ∈ g` in the Lie basis.
    pub fn coordinates(&self, x: &Matrix) -> Option<Vec<u64>> {
        let n2 = self.n * self.n;
        let mut cols: Vec<Vec<u64>> = self.lie_basis.iter().map(Matrix::to_vec).collect();
        cols.push(x.to_vec());
        let aug = Matrix::from_columns(self.field, n2, &cols);
        let red = aug.row_reduce();
        let d = self.dim_g();
        if red.pivots.iter().any(|&c| c == d) {
            return None;
        }
        let mut coords = vec![0; d];
        for (r, &c) in red.pivots.iter().enumerate() {
            coords[c] = red.rref[(r, d)];
        }
        Some(coords)
    }

    /// Matrix, in flattened ambient coordinates, of `B ↦ Ad(Φ)B − c·B` on the Lie basis.
    pub fn ad_shift(&self, phi: &Matrix, c: u64) -> Result<Matrix> {
        self.check_size(phi)?;
        let inv = phi
            .inverse()
            .ok_or_else(|| Error::Precondition("Φ is not invertible".into()))?;
        let cols: Vec<Vec<u64>> = self
            .lie_basis
            .iter()
            .map(|b| (&(&(phi * b) * &inv) - &b.scale(c)).to_vec())
            .collect();
        Ok(Matrix::from_columns(self.field, self.n * self.n, &cols))
    }

    /// Basis of `{M ∈ g : Ad(Φ)M = c·M}`.
    pub fn eigenspace(&self, phi: &Matrix, c: u64) -> Result<Vec<Matrix>> {
        Ok(self
            .ad_shift(phi, c)?
            .kernel()
            .iter()
            .map(|k| combine(self.field, &self.lie_basis, k))
            .collect())
    }

    pub fn eigenspace_dim(&self, phi: &Matrix, c: u64) -> Result<usize> {
        Ok(self.ad_shift(phi, c)?.nullity())
    }

    /// `diag(a^{y_1}, ..., a^{y_n})` for a cocharacter `y`.
    pub fn cochar(&self, y: &[i64], a: u64) -> Result<Matrix> {
        let d = y
            .iter()
            .map(|&e| self.field.pow_signed(a, e))
            .collect::<Option<Vec<u64>>>()
            .ok_or_else(|| Error::Precondition("cocharacter evaluated at 0".into()))?;
        Ok(Matrix::diagonal(self.field, &d))
    }

    pub fn is_cocharacter(&self, y: &[i64]) -> bool {
        y.len() == self.n && self.char_relations.iter().all(|r| r.iter().zip(y).map(|(a, b)| a * b).sum::<i64>() == 0)
    }

    /// Root vectors paired with their torus weights `e_i − e_j`.
    pub fn root_vectors(&self) -> impl Iterator<Item = (&Matrix, Vec<i64>)> + '_ {
        self.lie_basis[self.torus_dim..]
            .iter()
            .zip(&self.root_positions)
            .map(|(m, &(i, j))| {
                let mut c = vec![0; self.n];
                c[i] += 1;
                c[j] -= 1;
                (m, c)
            })
    }

    /// The root vector whose weight equals `weight` as a character of the torus.
    pub fn root_vector(&self, weight: &[i64]) -> Option<&Matrix> {
        self.root_vectors()
            .find(|(_, c)| self.same_character(c, weight))
            .map(|(m, _)| m)
    }

    fn same_character(&self, a: &[i64], b: &[i64]) -> bool {
        let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        if diff.iter().all(|&x| x == 0) {
            return true;
        }
        let mut rows = self.char_relations.clone();
        let base = integer_rank(&rows);
        rows.push(diff);
        integer_rank(&rows) == base && !self.char_relations.is_empty()
    }

    /// The character `c` lies in the span of the simple roots in `levi` (modulo
    /// characters trivial on the torus).
    pub fn in_levi(&self, c: &[i64], levi: &BTreeSet<usize>) -> bool {
        let mut rows: Vec<Vec<i64>> = levi.iter().map(|&i| self.simple_roots[i].clone()).collect();
        rows.extend(self.char_relations.iter().cloned());
        let base = integer_rank(&rows);
        rows.push(c.to_vec());
        integer_rank(&rows) == base
    }

    /// A signed permutation matrix in the group normalizing the torus and acting as
    /// the simple reflection `s_i`.
    pub fn weyl_rep(&self, i: usize) -> Result<Matrix> {
        if i >= self.rank() {
            return Err(Error::RootIndex {
                index: i,
                rank: self.rank(),
            });
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        match self.kind {
            GroupKind::GL(_) => perm.swap(i, i + 1),
            GroupKind::GSp4 if i == 0 => {
                perm.swap(0, 1);
                perm.swap(2, 3);
            }
            GroupKind::GSp4 => perm.swap(1, 2),
        }
        for signs in 0u32..(1 << self.n) {
            let mut w = Matrix::zeros(self.field, self.n, self.n);
            for (k, &pk) in perm.iter().enumerate() {
                w[(pk, k)] = if signs >> k & 1 == 1 {
                    self.field.neg(1)
                } else {
                    1
                };
            }
            if self.in_group(&w) {
                return Ok(w);
            }
        }
        Err(Error::Precondition(format!("no signed permutation realizes s_{}", i + 1)))
    }

    pub fn orbit_model(&self, partition: &[u32]) -> Result<OrbitModel> {
        let f = self.field;
        let invalid = |reason: &str| Error::InvalidOrbit {
            orbit: format!("{partition:?}"),
            group: self.name(),
            reason: reason.into(),
        };
        if partition.iter().sum::<u32>() as usize != self.n
            || partition.windows(2).any(|w| w[0] < w[1])
            || partition.contains(&0)
        {
            return Err(invalid("not a partition of the matrix size"));
        }
        match self.kind {
            GroupKind::GL(n) => {
                let mut e = Matrix::zeros(f, n, n);
                let mut lambda = Vec::with_capacity(n);
                let mut levi = BTreeSet::new();
                let mut center = Vec::new();
                let mut start = 0;
                for &p in partition {
                    let p = p as usize;
                    let mut y = vec![0; n];
                    for k in 0..p {
                        lambda.push(p as i64 - 1 - 2 * k as i64);
                        y[start + k] = 1;
                        if k + 1 < p {
                            e[(start + k, start + k + 1)] = 1;
                            levi.insert(start + k);
                        }
                    }
                    center.push(y);
                    start += p;
                }
                Ok(OrbitModel {
                    partition: partition.to_vec(),
                    e,
                    lambda,
                    levi,
                    center_cochars: center,
                })
            }
            GroupKind::GSp4 => {
                let short = self.root_vector(&[1, -1, 0, 0]).expect("short root vector").clone();
                let long = self.root_vector(&[0, 1, -1, 0]).expect("long root vector").clone();
                let (e, lambda, levi, center): (Matrix, Vec<i64>, Vec<usize>, Vec<Vec<i64>>) =
                    match partition {
                        [4] => (&short + &long, vec![3, 1, -1, -3], vec![0, 1], vec![vec![1, 1, 1, 1]]),
                        [2, 2] => (
                            short,
                            vec![1, -1, 1, -1],
                            vec![0],
                            vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]],
                        ),
                        [2, 1, 1] => (
                            long,
                            vec![0, 1, -1, 0],
                            vec![1],
                            vec![vec![1, 0, 0, -1], vec![0, 1, 1, 2]],
                        ),
                        [1, 1, 1, 1] => (
                            Matrix::zeros(f, 4, 4),
                            vec![0; 4],
                            vec![],
                            self.cochar_basis.clone(),
                        ),
                        _ => return Err(invalid("odd parts must have even multiplicity")),
                    };
                Ok(OrbitModel {
                    partition: partition.to_vec(),
                    e,
                    lambda,
                    levi: levi.into_iter().collect(),
                    center_cochars: center,
                })
            }
        }
    }

    /// A random group element: uniform over invertible matrices for `GL_n`, a product
    /// of root-group elements and a torus element for `GSp_4`.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Matrix {
        let f = self.field;
        let p = f.modulus();
        match self.kind {
            GroupKind::GL(n) => loop {
                let data: Vec<u64> = (0..n * n).map(|_| rng.gen_range(0..p)).collect();
                let g = Matrix::from_flat(f, n, n, data);
                if g.is_invertible() {
                    return g;
                }
            },
            GroupKind::GSp4 => {
                let mut g = Matrix::identity(f, 4);
                for x in &self.lie_basis[self.torus_dim..] {
                    // Root vectors here square to zero, so exp(aX) = 1 + aX.
                    let a = rng.gen_range(0..p);
                    let u = &Matrix::identity(f, 4) + &x.scale(a);
                    g = &g * &u;
                }
                for y in &self.cochar_basis {
                    let a = rng.gen_range(1..p);
                    g = &g * &self.cochar(y, a).expect("a is nonzero");
                }
                g
            }
        }
    }

    /// A random element of the torus generated by the given cocharacters.
    pub fn random_torus_element<R: Rng>(&self, cochars: &[Vec<i64>], rng: &mut R) -> Matrix {
        let p = self.field.modulus();
        let mut t = Matrix::identity(self.field, self.n);
        for y in cochars {
            let a = rng.gen_range(1..p);
            t = &t * &self.cochar(y, a).expect("a is nonzero");
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::span_dim;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn gsp4_lie_algebra() {
        let g = GroupSpec::gsp4(f(11)).unwrap();
        assert_eq!(g.dim_g(), 11);
        let vecs: Vec<Vec<u64>> = g.lie_basis().iter().map(Matrix::to_vec).collect();
        assert_eq!(span_dim(g.field(), &vecs), 11);
        for a in g.lie_basis() {
            assert!(g.in_lie(a));
            for b in g.lie_basis() {
                assert!(g.in_lie(&a.bracket(b)));
            }
        }
    }

    #[test]
    fn gsp4_weyl_reps_reflect() {
        let g = GroupSpec::gsp4(f(13)).unwrap();
        for i in 0..2 {
            let w = g.weyl_rep(i).unwrap();
            assert!(g.in_group(&w));
            let alpha = g.simple_root(i).to_vec();
            let neg: Vec<i64> = alpha.iter().map(|x| -x).collect();
            let x = g.root_vector(&alpha).unwrap();
            let y = w.conjugate(x).unwrap();
            let target = g.root_vector(&neg).unwrap();
            let coords = g.coordinates(&y).unwrap();
            let tc = g.coordinates(target).unwrap();
            let k = tc.iter().position(|&c| c != 0).unwrap();
            assert_ne!(coords[k], 0);
            assert_eq!(coords.iter().filter(|&&c| c != 0).count(), 1);
        }
    }

    #[test]
    fn random_gsp4_elements_are_similitudes() {
        let g = GroupSpec::gsp4(f(11)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert!(g.in_group(&g.random_element(&mut rng)));
        }
    }

    #[test]
    fn orbit_models_have_the_right_grading() {
        let fld = f(11);
        for spec in [GroupSpec::gl(3, fld).unwrap(), GroupSpec::gsp4(fld).unwrap()] {
            let parts: &[&[u32]] = match spec.kind() {
                GroupKind::GL(_) => &[&[3], &[2, 1], &[1, 1, 1]],
                GroupKind::GSp4 => &[&[4], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]],
            };
            for &p in parts {
                let m = spec.orbit_model(p).unwrap();
                assert!(spec.in_lie(&m.e));
                assert!(spec.is_cocharacter(&m.lambda));
                // Ad(λ(s))e = s²e.
                let s = 3;
                let l = spec.cochar(&m.lambda, s).unwrap();
                assert_eq!(l.conjugate(&m.e).unwrap(), m.e.scale(9));
                for y in &m.center_cochars {
                    assert!(spec.is_cocharacter(y));
                    let z = spec.cochar(y, 5).unwrap();
                    assert_eq!(z.conjugate(&m.e).unwrap(), m.e);
                }
            }
        }
    }

    #[test]
    fn coordinates_roundtrip() {
        let g = GroupSpec::gsp4(f(7)).unwrap();
        let x = combine(g.field(), g.lie_basis(), &[1, 2, 3, 4, 5, 6, 0, 1, 2, 3, 4]);
        assert_eq!(g.coordinates(&x).unwrap(), vec![1, 2, 3, 4, 5, 6, 0, 1, 2, 3, 4]);
        assert!(g.coordinates(&Matrix::unit(g.field(), 4, 0, 1)).is_none());
    }
}
