//! Dense fourth- and sixth-order tensors in two or three dimensions.
//!
//! Components are stored in row-major order with every index running over
//! `0..dim`. Constructors that take arbitrary component functions project the
//! result onto the symmetric subspace by successive pairwise averaging, one
//! generator of the symmetry group at a time. Averaging two equal floats is
//! exact, so already-symmetric inputs pass through unchanged and the
//! projection is idempotent bit for bit.

mod basis;
mod orthogonal;
mod spectral;

pub use basis::{chi_basis, chi_matrix_of_tensor6, sym_basis, sym_matrix_of_tensor4};
pub use orthogonal::{is_invariant_under, OrthogonalMap, Rotate};
pub use spectral::{min_eigenvalue_sym, symmetric_eigenvalues};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Spatial dimension of a tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dim {
    Two,
    Three,
}

impl Dim {
    pub fn n(self) -> usize {
        match self {
            Dim::Two => 2,
            Dim::Three => 3,
        }
    }

    pub fn from_usize(n: usize) -> Result<Self> {
        match n {
            2 => Ok(Dim::Two),
            3 => Ok(Dim::Three),
            other => Err(Error::UnsupportedDimension(other)),
        }
    }
}

#[inline]
pub(crate) fn delta(a: usize, b: usize) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

fn check_same_dim(a: Dim, b: Dim) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        })
    }
}

/// Replaces `data` by the average of itself and its image under the index
/// permutation `perm` (output axis `a` reads input axis `perm[a]`).
fn average_with_permutation(data: &mut [f64], n: usize, order: usize, perm: &[usize]) {
    let src = data.to_vec();
    let mut idx = vec![0usize; order];
    let mut permuted = vec![0usize; order];
    for (flat, value) in data.iter_mut().enumerate() {
        let mut rem = flat;
        for slot in idx.iter_mut().rev() {
            *slot = rem % n;
            rem /= n;
        }
        for (a, p) in permuted.iter_mut().zip(perm) {
            *a = idx[*p];
        }
        let other = permuted.iter().fold(0, |acc, &v| acc * n + v);
        *value = 0.5 * (src[flat] + src[other]);
    }
}

/// Contracts `q` into every axis of the order-`order` tensor stored in `data`.
pub(crate) fn transform_all_axes(data: &[f64], n: usize, order: usize, q: &[[f64; 3]; 3]) -> Vec<f64> {
    let mut current = data.to_vec();
    let mut next = vec![0.0; current.len()];
    for axis in 0..order {
        let stride = n.pow((order - 1 - axis) as u32);
        for (flat, out) in next.iter_mut().enumerate() {
            let a = (flat / stride) % n;
            let base = flat - a * stride;
            *out = (0..n).map(|p| q[a][p] * current[base + p * stride]).sum();
        }
        std::mem::swap(&mut current, &mut next);
    }
    current
}

fn max_abs(data: &[f64]) -> f64 {
    data.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()))
}

/// Fourth-order tensor with minor and major symmetries (units of stress).
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor4 {
    dim: Dim,
    data: Vec<f64>,
}

impl Tensor4 {
    const ORDER: usize = 4;

    pub fn zeros(dim: Dim) -> Self {
        Self {
            dim,
            data: vec![0.0; dim.n().pow(4)],
        }
    }

    /// Evaluates `f` at every index and projects onto the symmetric subspace.
    pub fn from_fn(dim: Dim, f: impl Fn(usize, usize, usize, usize) -> f64) -> Self {
        let n = dim.n();
        let mut data = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for h in 0..n {
                    for k in 0..n {
                        data.push(f(i, j, h, k));
                    }
                }
            }
        }
        let mut t = Self { dim, data };
        t.symmetrize();
        t
    }

    /// Wraps raw components, rejecting anything that is not exactly symmetric.
    pub fn from_components(dim: Dim, data: Vec<f64>) -> Result<Self> {
        let expected = dim.n().pow(4);
        if data.len() != expected {
            return Err(Error::BadLength {
                expected,
                found: data.len(),
            });
        }
        let t = Self { dim, data };
        t.check_symmetries()?;
        Ok(t)
    }

    /// Projects arbitrary components onto the symmetric subspace.
    pub fn symmetrized(dim: Dim, data: Vec<f64>) -> Result<Self> {
        let expected = dim.n().pow(4);
        if data.len() != expected {
            return Err(Error::BadLength {
                expected,
                found: data.len(),
            });
        }
        let mut t = Self { dim, data };
        t.symmetrize();
        Ok(t)
    }

    fn symmetrize(&mut self) {
        let n = self.dim.n();
        average_with_permutation(&mut self.data, n, Self::ORDER, &[1, 0, 2, 3]);
        average_with_permutation(&mut self.data, n, Self::ORDER, &[0, 1, 3, 2]);
        average_with_permutation(&mut self.data, n, Self::ORDER, &[2, 3, 0, 1]);
    }

    /// Exact (tolerance 0) check of the minor and major symmetries.
    pub fn check_symmetries(&self) -> Result<()> {
        let n = self.dim.n();
        for i in 0..n {
            for j in 0..n {
                for h in 0..n {
                    for k in 0..n {
                        let v = self.get(i, j, h, k);
                        if v != self.get(j, i, h, k) || v != self.get(i, j, k, h) {
                            return Err(Error::MissingSymmetry("minor"));
                        }
                        if v != self.get(h, k, i, j) {
                            return Err(Error::MissingSymmetry("major"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    fn index(&self, i: usize, j: usize, h: usize, k: usize) -> usize {
        let n = self.dim.n();
        ((i * n + j) * n + h) * n + k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, h: usize, k: usize) -> f64 {
        self.data[self.index(i, j, h, k)]
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn max_abs(&self) -> f64 {
        max_abs(&self.data)
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        check_same_dim(self.dim, other.dim)?;
        Ok(max_abs_diff(&self.data, &other.data))
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, s: f64, other: &Self) -> Result<Self> {
        check_same_dim(self.dim, other.dim)?;
        Ok(Self {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + s * b).collect(),
        })
    }

    /// `C'_ijhk = Q_ip Q_jq Q_hr Q_ks C_pqrs`.
    pub fn rotate(&self, q: &OrthogonalMap) -> Result<Self> {
        check_same_dim(self.dim, q.dim())?;
        let data = transform_all_axes(&self.data, self.dim.n(), Self::ORDER, q.matrix());
        let mut t = Self { dim: self.dim, data };
        t.symmetrize();
        Ok(t)
    }
}

/// Sixth-order tensor `A_ijhlmn`, symmetric in `(i, j)`, in `(l, m)` and under
/// exchange of the triples `(ijh)` and `(lmn)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor6 {
    dim: Dim,
    data: Vec<f64>,
}

impl Tensor6 {
    const ORDER: usize = 6;

    pub fn zeros(dim: Dim) -> Self {
        Self {
            dim,
            data: vec![0.0; dim.n().pow(6)],
        }
    }

    pub fn from_fn(dim: Dim, f: impl Fn([usize; 6]) -> f64) -> Self {
        let n = dim.n();
        let len = n.pow(6);
        let mut data = Vec::with_capacity(len);
        for flat in 0..len {
            let mut idx = [0usize; 6];
            let mut rem = flat;
            for slot in idx.iter_mut().rev() {
                *slot = rem % n;
                rem /= n;
            }
            data.push(f(idx));
        }
        let mut t = Self { dim, data };
        t.symmetrize();
        t
    }

    pub fn from_components(dim: Dim, data: Vec<f64>) -> Result<Self> {
        let expected = dim.n().pow(6);
        if data.len() != expected {
            return Err(Error::BadLength {
                expected,
                found: data.len(),
            });
        }
        let t = Self { dim, data };
        t.check_symmetries()?;
        Ok(t)
    }

    fn symmetrize(&mut self) {
        let n = self.dim.n();
        average_with_permutation(&mut self.data, n, Self::ORDER, &[1, 0, 2, 3, 4, 5]);
        average_with_permutation(&mut self.data, n, Self::ORDER, &[0, 1, 2, 4, 3, 5]);
        average_with_permutation(&mut self.data, n, Self::ORDER, &[3, 4, 5, 0, 1, 2]);
    }

    /// Exact check of the three index symmetries.
    pub fn check_symmetries(&self) -> Result<()> {
        let n = self.dim.n();
        for flat in 0..self.data.len() {
            let mut idx = [0usize; 6];
            let mut rem = flat;
            for slot in idx.iter_mut().rev() {
                *slot = rem % n;
                rem /= n;
            }
            let [i, j, h, l, m, nn] = idx;
            let v = self.data[flat];
            if v != self.get([j, i, h, l, m, nn]) {
                return Err(Error::MissingSymmetry("first-pair"));
            }
            if v != self.get([i, j, h, m, l, nn]) {
                return Err(Error::MissingSymmetry("second-pair"));
            }
            if v != self.get([l, m, nn, i, j, h]) {
                return Err(Error::MissingSymmetry("block-exchange"));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn get(&self, idx: [usize; 6]) -> f64 {
        let n = self.dim.n();
        self.data[idx.iter().fold(0, |acc, &v| acc * n + v)]
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn max_abs(&self) -> f64 {
        max_abs(&self.data)
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        check_same_dim(self.dim, other.dim)?;
        Ok(max_abs_diff(&self.data, &other.data))
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn add_scaled(&self, s: f64, other: &Self) -> Result<Self> {
        check_same_dim(self.dim, other.dim)?;
        Ok(Self {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + s * b).collect(),
        })
    }

    /// `A'_ijhlmn = Q_ip Q_jq Q_hr Q_ls Q_mt Q_nu A_pqrstu`.
    pub fn rotate(&self, q: &OrthogonalMap) -> Result<Self> {
        check_same_dim(self.dim, q.dim())?;
        let data = transform_all_axes(&self.data, self.dim.n(), Self::ORDER, q.matrix());
        let mut t = Self { dim: self.dim, data };
        t.symmetrize();
        Ok(t)
    }
}
