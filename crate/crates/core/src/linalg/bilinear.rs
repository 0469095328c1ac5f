//! Bilinear maps given by coordinate tensors, and the annihilator-codimension
//! bound on the dimension of their image.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::field::{Fp, Scalar};
use crate::linalg::subspace::{rank, Subspace};

/// `φ: U × V → W` with `φ(e_i, f_j) = images[i][j]`.
#[derive(Debug, Clone)]
pub struct BilinearMap {
    field: Fp,
    u_dim: usize,
    v_dim: usize,
    w_dim: usize,
    images: Vec<Vec<Vec<Scalar>>>,
}

/// Outcome of the bound check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeumannReport {
    /// Max over `u ∈ U` of the codimension of `{v : φ(u,v) = 0}` in `V`.
    pub left_codim: usize,
    /// Max over `v ∈ V` of the codimension of `{u : φ(u,v) = 0}` in `U`.
    pub right_codim: usize,
    pub image_dim: usize,
    pub holds: bool,
}

impl BilinearMap {
    pub fn new(field: Fp, w_dim: usize, images: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let u_dim = images.len();
        let v_dim = images.first().map_or(0, |r| r.len());
        for row in &images {
            if row.len() != v_dim {
                return Err(Error::DimensionMismatch {
                    expected: v_dim,
                    found: row.len(),
                });
            }
            for w in row {
                if w.len() != w_dim {
                    return Err(Error::DimensionMismatch {
                        expected: w_dim,
                        found: w.len(),
                    });
                }
            }
        }
        Ok(BilinearMap {
            field,
            u_dim,
            v_dim,
            w_dim,
            images,
        })
    }

    /// Tabulates `op` on two bases.
    pub fn from_fn<F>(field: Fp, u: &[Vec<Scalar>], v: &[Vec<Scalar>], w_dim: usize, mut op: F) -> Result<Self>
    where
        F: FnMut(&[Scalar], &[Scalar]) -> Vec<Scalar>,
    {
        let images = u
            .iter()
            .map(|a| v.iter().map(|b| op(a, b)).collect())
            .collect();
        BilinearMap::new(field, w_dim, images)
    }

    pub fn u_dim(&self) -> usize {
        self.u_dim
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![0; self.w_dim];
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b != 0 {
                    f.axpy(&mut out, f.mul(a, b), &self.images[i][j]);
                }
            }
        }
        out
    }

    pub fn image_dim(&self) -> usize {
        let all: Vec<&Vec<Scalar>> = self.images.iter().flatten().collect();
        rank(self.field, self.w_dim, &all)
    }

    /// Checks `dim span φ(U,V) ≤ m·ℓ` where `m`, `ℓ` are the largest
    /// annihilator codimensions over *all* elements (not just a basis), found
    /// by enumerating `U` and `V` within `cap`.
    pub fn neumann_check(&self, cap: u64) -> Result<NeumannReport> {
        let f = self.field;
        let u_space = Subspace::full(f, self.u_dim);
        let v_space = Subspace::full(f, self.v_dim);
        let v_basis = v_space.basis().to_vec();
        let u_basis = u_space.basis().to_vec();
        let mut left = 0;
        for u in u_space.enumerate(cap)? {
            let imgs: Vec<Vec<Scalar>> = v_basis.iter().map(|v| self.eval(&u, v)).collect();
            left = left.max(rank(f, self.w_dim, &imgs));
        }
        let mut right = 0;
        for v in v_space.enumerate(cap)? {
            let imgs: Vec<Vec<Scalar>> = u_basis.iter().map(|u| self.eval(u, &v)).collect();
            right = right.max(rank(f, self.w_dim, &imgs));
        }
        let image_dim = self.image_dim();
        Ok(NeumannReport {
            left_codim: left,
            right_codim: right,
            image_dim,
            holds: image_dim <= left * right,
        })
    }
}
