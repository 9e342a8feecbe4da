use rand::Rng;

use super::{Dim, Tensor4, Tensor6};
use crate::error::{Error, Result};

const ORTHOGONALITY_TOL: f64 = 1e-12;

/// Orthogonal transformation `Q` with `Q Qᵀ = I`.
///
/// Stored in a 3×3 array; for two-dimensional maps only the leading 2×2
/// block is meaningful.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthogonalMap {
    dim: Dim,
    q: [[f64; 3]; 3],
}

impl OrthogonalMap {
    pub fn new(dim: Dim, rows: &[&[f64]]) -> Result<Self> {
        let n = dim.n();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.iter().map(|r| r.len()).max().unwrap_or(0).max(rows.len()),
            });
        }
        let mut q = [[0.0; 3]; 3];
        for (a, row) in rows.iter().enumerate() {
            q[a][..n].copy_from_slice(row);
        }
        let map = Self { dim, q };
        let err = map.orthogonality_error();
        if err > ORTHOGONALITY_TOL {
            return Err(Error::NotOrthogonal(err));
        }
        Ok(map)
    }

    pub fn identity(dim: Dim) -> Self {
        let mut q = [[0.0; 3]; 3];
        for (a, row) in q.iter_mut().enumerate().take(dim.n()) {
            row[a] = 1.0;
        }
        Self { dim, q }
    }

    /// In-plane rotation by `angle` (counterclockwise about x₃ in 3D).
    pub fn rotation_z(dim: Dim, angle: f64) -> Self {
        Self::rotation_about(dim, 2, angle)
    }

    /// Rotation by `angle` about coordinate axis `axis`. In 2D only `axis = 2`
    /// (the out-of-plane normal) is meaningful.
    pub fn rotation_about(dim: Dim, axis: usize, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        let mut q = Self::identity(dim).q;
        let (a, b) = match axis {
            0 => (1, 2),
            1 => (2, 0),
            _ => (0, 1),
        };
        q[a][a] = c;
        q[a][b] = -s;
        q[b][a] = s;
        q[b][b] = c;
        if dim == Dim::Two {
            q[2] = [0.0; 3];
            for row in q.iter_mut() {
                row[2] = 0.0;
            }
        }
        Self { dim, q }
    }

    /// Reflection `x_axis ↦ -x_axis`.
    pub fn reflection(dim: Dim, axis: usize) -> Self {
        let mut map = Self::identity(dim);
        map.q[axis][axis] = -1.0;
        map
    }

    /// Uniformly distributed proper rotation.
    pub fn random_rotation<R: Rng + ?Sized>(dim: Dim, rng: &mut R) -> Self {
        match dim {
            Dim::Two => Self::rotation_z(dim, rng.random_range(0.0..std::f64::consts::TAU)),
            Dim::Three => {
                // Uniform unit quaternion (Shoemake).
                let u1: f64 = rng.random();
                let u2: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                let u3: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
                let (w, x, y, z) = (a * u2.sin(), a * u2.cos(), b * u3.sin(), b * u3.cos());
                let q = [
                    [
                        1.0 - 2.0 * (y * y + z * z),
                        2.0 * (x * y - z * w),
                        2.0 * (x * z + y * w),
                    ],
                    [
                        2.0 * (x * y + z * w),
                        1.0 - 2.0 * (x * x + z * z),
                        2.0 * (y * z - x * w),
                    ],
                    [
                        2.0 * (x * z - y * w),
                        2.0 * (y * z + x * w),
                        1.0 - 2.0 * (x * x + y * y),
                    ],
                ];
                Self { dim, q }
            }
        }
    }

    /// Random orthogonal map, improper with probability one half.
    pub fn random_orthogonal<R: Rng + ?Sized>(dim: Dim, rng: &mut R) -> Self {
        let r = Self::random_rotation(dim, rng);
        if rng.random::<bool>() {
            Self::reflection(dim, 0).then(&r)
        } else {
            r
        }
    }

    /// Composition `other ∘ self`, i.e. the matrix product `Q_other Q_self`:
    /// applying the result equals applying `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        let n = self.dim.n();
        let mut q = [[0.0; 3]; 3];
        for (a, row) in q.iter_mut().enumerate().take(n) {
            for (b, out) in row.iter_mut().enumerate().take(n) {
                *out = (0..n).map(|p| other.q[a][p] * self.q[p][b]).sum();
            }
        }
        Self { dim: self.dim, q }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn matrix(&self) -> &[[f64; 3]; 3] {
        &self.q
    }

    pub fn orthogonality_error(&self) -> f64 {
        let n = self.dim.n();
        let mut err = 0.0_f64;
        for a in 0..n {
            for b in 0..n {
                let dot: f64 = (0..n).map(|p| self.q[a][p] * self.q[b][p]).sum();
                err = err.max((dot - super::delta(a, b)).abs());
            }
        }
        err
    }
}

/// Tensors that transform under orthogonal maps.
pub trait Rotate: Sized {
    fn rotated(&self, q: &OrthogonalMap) -> Result<Self>;
    fn max_abs_component(&self) -> f64;
    fn max_abs_difference(&self, other: &Self) -> Result<f64>;
}

impl Rotate for Tensor4 {
    fn rotated(&self, q: &OrthogonalMap) -> Result<Self> {
        self.rotate(q)
    }
    fn max_abs_component(&self) -> f64 {
        self.max_abs()
    }
    fn max_abs_difference(&self, other: &Self) -> Result<f64> {
        self.max_abs_diff(other)
    }
}

impl Rotate for Tensor6 {
    fn rotated(&self, q: &OrthogonalMap) -> Result<Self> {
        self.rotate(q)
    }
    fn max_abs_component(&self) -> f64 {
        self.max_abs()
    }
    fn max_abs_difference(&self, other: &Self) -> Result<f64> {
        self.max_abs_diff(other)
    }
}

/// True iff `max |T - Q·T| <= tol (1 + max |T|)`.
pub fn is_invariant_under<T: Rotate>(t: &T, q: &OrthogonalMap, tol: f64) -> Result<bool> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let rotated = t.rotated(q)?;
    Ok(t.max_abs_difference(&rotated)? <= tol * (1.0 + t.max_abs_component()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_maps_are_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for dim in [Dim::Two, Dim::Three] {
            for _ in 0..100 {
                assert!(OrthogonalMap::random_orthogonal(dim, &mut rng).orthogonality_error() < 1e-14);
            }
        }
    }

    #[test]
    fn new_rejects_non_orthogonal() {
        let err = OrthogonalMap::new(Dim::Two, &[&[1.0, 0.1], &[0.0, 1.0]]).unwrap_err();
        assert!(matches!(err, Error::NotOrthogonal(_)));
        let ok = OrthogonalMap::new(Dim::Two, &[&[0.0, -1.0], &[1.0, 0.0]]).unwrap();
        let r = OrthogonalMap::rotation_z(Dim::Two, std::f64::consts::FRAC_PI_2);
        for a in 0..2 {
            for b in 0..2 {
                assert!((ok.matrix()[a][b] - r.matrix()[a][b]).abs() < 1e-16);
            }
        }
    }

    #[test]
    fn composition_order() {
        let a = OrthogonalMap::rotation_about(Dim::Three, 0, 0.3);
        let b = OrthogonalMap::rotation_about(Dim::Three, 2, 1.1);
        let ab = a.then(&b);
        let x = [0.2, -0.7, 1.3];
        let apply = |q: &OrthogonalMap, v: [f64; 3]| {
            let m = q.matrix();
            [0, 1, 2].map(|r| (0..3).map(|c| m[r][c] * v[c]).sum::<f64>())
        };
        let seq = apply(&b, apply(&a, x));
        let once = apply(&ab, x);
        for r in 0..3 {
            assert!((seq[r] - once[r]).abs() < 1e-15);
        }
    }

    #[test]
    fn tolerance_must_be_positive() {
        let t = Tensor4::zeros(Dim::Two);
        let q = OrthogonalMap::identity(Dim::Two);
        assert!(is_invariant_under(&t, &q, 0.0).is_err());
    }
}
