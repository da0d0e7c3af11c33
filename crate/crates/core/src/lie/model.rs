use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{mat_exp, Matrix};
use crate::error::{Error, Result};

/// Default membership tolerance for group elements.
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ModelKind {
    /// Real rotations, algebra of antisymmetric matrices.
    SO3,
    /// Unitary 2×2 matrices of determinant 1, algebra of traceless anti-Hermitian matrices.
    SU2,
    /// Dense invertible `n×n` complex matrices.
    GL(usize),
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelKind::SO3 => f.write_str("SO3"),
            ModelKind::SU2 => f.write_str("SU2"),
            ModelKind::GL(n) => write!(f, "GL{n}"),
        }
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "SO3" => Ok(ModelKind::SO3),
            "SU2" => Ok(ModelKind::SU2),
            _ => s
                .strip_prefix("GL")
                .and_then(|n| n.parse().ok())
                .filter(|&n| n > 0)
                .map(ModelKind::GL)
                .ok_or_else(|| Error::Input(format!("unknown matrix group `{s}`"))),
        }
    }
}

impl TryFrom<String> for ModelKind {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ModelKind> for String {
    fn from(k: ModelKind) -> Self {
        k.to_string()
    }
}

/// A matrix Lie group with a basis of its Lie algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixGroupModel {
    kind: ModelKind,
    dim: usize,
    basis: Vec<Matrix>,
    tolerance: f64,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn real(rows: usize, entries: &[f64]) -> Matrix {
    DMatrix::from_row_slice(rows, rows, entries).map(|x| c(x, 0.0))
}

impl MatrixGroupModel {
    pub fn new(kind: ModelKind, tolerance: f64) -> Result<Self> {
        let basis = match kind {
            ModelKind::SO3 => vec![
                real(3, &[0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0]),
                real(3, &[0.0, 0.0, 1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0]),
                real(3, &[0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
            ],
            ModelKind::SU2 => {
                let z = c(0.0, 0.0);
                // i·σ_k / 2
                vec![
                    DMatrix::from_row_slice(2, 2, &[z, c(0.0, 0.5), c(0.0, 0.5), z]),
                    DMatrix::from_row_slice(2, 2, &[z, c(0.5, 0.0), c(-0.5, 0.0), z]),
                    DMatrix::from_row_slice(2, 2, &[c(0.0, 0.5), z, z, c(0.0, -0.5)]),
                ]
            }
            ModelKind::GL(n) => (0..n * n)
                .map(|k| {
                    let mut e = Matrix::zeros(n, n);
                    e[(k / n, k % n)] = c(1.0, 0.0);
                    e
                })
                .collect(),
        };
        let model = Self { kind, dim: basis[0].nrows(), basis, tolerance };
        for b in &model.basis {
            let r = model.algebra_residual(b)?;
            if r > tolerance {
                return Err(Error::NotInGroup { residual: r, tolerance });
            }
        }
        Ok(model)
    }

    pub fn so3() -> Self {
        Self::new(ModelKind::SO3, MEMBERSHIP_TOLERANCE).expect("so(3) basis")
    }

    pub fn su2() -> Self {
        Self::new(ModelKind::SU2, MEMBERSHIP_TOLERANCE).expect("su(2) basis")
    }

    pub fn gl(n: usize) -> Self {
        Self::new(ModelKind::GL(n), MEMBERSHIP_TOLERANCE).expect("gl(n) basis")
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    fn check_dim(&self, m: &Matrix) -> Result<()> {
        if m.nrows() == self.dim && m.ncols() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, found: m.nrows() })
        }
    }

    /// Distance of `a` from the Lie algebra constraints.
    pub fn algebra_residual(&self, a: &Matrix) -> Result<f64> {
        self.check_dim(a)?;
        Ok(match self.kind {
            ModelKind::SO3 => (a + a.transpose()).norm() + a.map(|z| z.im).norm(),
            ModelKind::SU2 => (a + a.adjoint()).norm() + a.trace().norm(),
            ModelKind::GL(_) => 0.0,
        })
    }

    /// Distance of `g` from the group: orthogonality or unitarity defect plus
    /// determinant defect. For GL(n), infinite when `g` is numerically singular.
    pub fn membership_residual(&self, g: &Matrix) -> Result<f64> {
        self.check_dim(g)?;
        let id = Matrix::identity(self.dim, self.dim);
        Ok(match self.kind {
            ModelKind::SO3 => {
                (g.transpose() * g - &id).norm() + (g.determinant() - c(1.0, 0.0)).norm() + g.map(|z| z.im).norm()
            }
            ModelKind::SU2 => (g.adjoint() * g - &id).norm() + (g.determinant() - c(1.0, 0.0)).norm(),
            ModelKind::GL(_) => {
                if g.determinant().norm() > self.tolerance {
                    0.0
                } else {
                    f64::INFINITY
                }
            }
        })
    }

    pub fn check_member(&self, g: &Matrix) -> Result<()> {
        let residual = self.membership_residual(g)?;
        if residual <= self.tolerance {
            Ok(())
        } else {
            Err(Error::NotInGroup { residual, tolerance: self.tolerance })
        }
    }

    pub fn check_algebra(&self, a: &Matrix) -> Result<()> {
        let residual = self.algebra_residual(a)?;
        if residual <= self.tolerance {
            Ok(())
        } else {
            Err(Error::NotInGroup { residual, tolerance: self.tolerance })
        }
    }

    /// Group inverse; the adjoint for the compact models.
    pub fn inverse(&self, g: &Matrix) -> Matrix {
        match self.kind {
            ModelKind::SO3 | ModelKind::SU2 => g.adjoint(),
            ModelKind::GL(_) => g.clone().try_inverse().expect("group elements are invertible"),
        }
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.dim, self.dim)
    }

    /// `Σ c_k B_k` with coefficients uniform in `[-scale, scale]`.
    pub fn random_algebra<R: Rng>(&self, rng: &mut R, scale: f64) -> Matrix {
        let mut a = Matrix::zeros(self.dim, self.dim);
        for b in &self.basis {
            let coeff = rng.random_range(-scale..=scale);
            a += b * c(coeff, 0.0);
        }
        a
    }

    /// `exp` of a random algebra element with coefficients in `[-π, π]`
    /// (`[-1/2, 1/2]` for GL(n), to keep conditioning reasonable).
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Matrix {
        let scale = match self.kind {
            ModelKind::GL(_) => 0.5,
            _ => std::f64::consts::PI,
        };
        mat_exp(&self.random_algebra(rng, scale)).expect("finite algebra element")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exp_lands_in_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for model in [MatrixGroupModel::so3(), MatrixGroupModel::su2(), MatrixGroupModel::gl(3)] {
            for _ in 0..50 {
                let a = model.random_algebra(&mut rng, 3.0);
                assert!(model.algebra_residual(&a).unwrap() < 1e-14);
                let g = mat_exp(&a).unwrap();
                model.check_member(&g).unwrap();
                let inv = model.inverse(&g);
                let scale = inv.norm() * g.norm();
                assert!((inv * &g - model.identity()).norm() < 1e-14 * scale);
            }
        }
    }

    #[test]
    fn rejects_non_members() {
        let so3 = MatrixGroupModel::so3();
        let reflection = real(3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, -1.0]);
        assert!(so3.check_member(&reflection).is_err());
        assert!(so3.check_member(&(so3.identity() * c(2.0, 0.0))).is_err());
        assert!(matches!(
            so3.check_member(&Matrix::identity(2, 2)),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));
        let su2 = MatrixGroupModel::su2();
        assert!(su2.check_algebra(&Matrix::identity(2, 2)).is_err());
        assert!(su2.check_member(&(su2.identity() * c(0.0, 1.0))).is_err());
        let gl = MatrixGroupModel::gl(2);
        assert!(gl.check_member(&Matrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn kind_names() {
        for (s, k) in [("SO3", ModelKind::SO3), ("SU2", ModelKind::SU2), ("GL4", ModelKind::GL(4))] {
            assert_eq!(s.parse::<ModelKind>().unwrap(), k);
            assert_eq!(k.to_string(), s);
        }
        assert!("SO4".parse::<ModelKind>().is_err());
        assert!("GL0".parse::<ModelKind>().is_err());
    }
}
