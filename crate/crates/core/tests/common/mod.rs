#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sge_dilute::moduli::{cubic_tensor4, iso_tensor4, OrthoDiscrepancyConstants};
use sge_dilute::tensor::{sym_basis, Dim, OrthogonalMap, Tensor4};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn dim_of(k: usize) -> Dim {
    if k.is_multiple_of(2) {
        Dim::Two
    } else {
        Dim::Three
    }
}

/// Spectrum pattern of a random discrepancy tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    Negative,
    Positive,
    Indefinite,
    NegativeSemi,
}

pub const DEFINITENESS: [Definiteness; 4] = [
    Definiteness::Negative,
    Definiteness::Positive,
    Definiteness::Indefinite,
    Definiteness::NegativeSemi,
];

/// `Σ_ab M_ab B^a ⊗ B^b` on the orthonormal symmetric basis.
pub fn tensor4_from_mandel(dim: Dim, m: &DMatrix<f64>) -> Tensor4 {
    let n = dim.n();
    let basis = sym_basis(dim);
    Tensor4::from_fn(dim, |i, j, h, k| {
        let mut s = 0.0;
        for (a, ba) in basis.iter().enumerate() {
            let x = ba[i * n + j];
            if x == 0.0 {
                continue;
            }
            for (b, bb) in basis.iter().enumerate() {
                s += m[(a, b)] * x * bb[h * n + k];
            }
        }
        s
    })
}

fn random_orthogonal_matrix<R: Rng>(size: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(size, size, |_, _| gaussian(rng));
    g.qr().q()
}

pub fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    let u: f64 = rng.random_range(f64::EPSILON..1.0);
    let v: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    (-2.0 * u.ln()).sqrt() * v.cos()
}

/// Fully anisotropic `C̃` with a prescribed spectrum pattern.
pub fn random_discrepancy<R: Rng>(dim: Dim, class: Definiteness, rng: &mut R) -> Tensor4 {
    let size = sym_basis(dim).len();
    let mut eigs: Vec<f64> = (0..size).map(|_| rng.random_range(0.1..3.0)).collect();
    match class {
        Definiteness::Negative => eigs.iter_mut().for_each(|e| *e = -*e),
        Definiteness::Positive => {}
        Definiteness::Indefinite => {
            eigs.iter_mut().for_each(|e| *e = -*e);
            let k = rng.random_range(0..size);
            eigs[k] = -eigs[k];
        }
        Definiteness::NegativeSemi => {
            eigs.iter_mut().for_each(|e| *e = -*e);
            let k = rng.random_range(0..size);
            eigs[k] = 0.0;
        }
    }
    let v = random_orthogonal_matrix(size, rng);
    let m = &v * DMatrix::from_diagonal(&DVector::from_vec(eigs)) * v.transpose();
    tensor4_from_mandel(dim, &(&m + m.transpose()).scale(0.5))
}

pub fn random_generic<R: Rng>(dim: Dim, rng: &mut R) -> Tensor4 {
    let size = sym_basis(dim).len();
    let g = DMatrix::from_fn(size, size, |_, _| rng.random_range(-2.0..2.0));
    tensor4_from_mandel(dim, &(&g + g.transpose()).scale(0.5))
}

pub fn random_iso<R: Rng>(dim: Dim, rng: &mut R) -> Tensor4 {
    iso_tensor4(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0), dim)
}

pub fn random_cubic<R: Rng>(dim: Dim, rng: &mut R) -> Tensor4 {
    cubic_tensor4(
        rng.random_range(-3.0..3.0),
        rng.random_range(-3.0..3.0),
        rng.random_range(0.2..3.0) * if rng.random_bool(0.5) { 1.0 } else { -1.0 },
        dim,
    )
}

pub fn random_ortho_constants<R: Rng>(rng: &mut R) -> OrthoDiscrepancyConstants {
    let mut r = || rng.random_range(-3.0..3.0);
    OrthoDiscrepancyConstants {
        lambda_t: r(),
        mu_t: r(),
        xi_t: [r(), r(), r()],
        omega_t: [r(), r(), r(), r()],
    }
}

pub fn transpose(q: &OrthogonalMap) -> OrthogonalMap {
    let n = q.dim().n();
    let m = q.matrix();
    let rows: Vec<Vec<f64>> = (0..n).map(|a| (0..n).map(|b| m[b][a]).collect()).collect();
    let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
    OrthogonalMap::new(q.dim(), &refs).expect("transpose of an orthogonal map")
}

/// `R g Rᵀ`.
pub fn conjugate(g: &OrthogonalMap, r: &OrthogonalMap) -> OrthogonalMap {
    transpose(r).then(g).then(r)
}

fn mandel_index(dim: Dim) -> Vec<(usize, usize, f64)> {
    let n = dim.n();
    let mut idx: Vec<(usize, usize, f64)> = (0..n).map(|a| (a, a, 1.0)).collect();
    for a in 0..n {
        for b in a + 1..n {
            idx.push((a, b, std::f64::consts::SQRT_2));
        }
    }
    idx
}

pub fn mandel_of(t: &Tensor4) -> DMatrix<f64> {
    let idx = mandel_index(t.dim());
    DMatrix::from_fn(idx.len(), idx.len(), |a, b| {
        let (i, j, wa) = idx[a];
        let (h, k, wb) = idx[b];
        t.get(i, j, h, k) * wa * wb
    })
}

/// Plane Eshelby tensor of a circular inclusion in an anisotropic matrix,
/// by midpoint quadrature of the Green's-function integral over the unit
/// circle. Returned on the Mandel basis since `S` lacks major symmetry.
#[allow(clippy::needless_range_loop)]
pub fn eshelby_2d(c: &Tensor4, points: usize) -> DMatrix<f64> {
    let mut s = [[[[0.0; 2]; 2]; 2]; 2];
    for q in 0..points {
        let t = (q as f64 + 0.5) * std::f64::consts::TAU / points as f64;
        let xi = [t.cos(), t.sin()];
        let mut acoustic = nalgebra::Matrix2::<f64>::zeros();
        for i in 0..2 {
            for k in 0..2 {
                for j in 0..2 {
                    for l in 0..2 {
                        acoustic[(i, k)] += c.get(i, j, k, l) * xi[j] * xi[l];
                    }
                }
            }
        }
        let g = acoustic.try_inverse().expect("strongly elliptic matrix");
        for i in 0..2 {
            for j in 0..2 {
                for m in 0..2 {
                    for n in 0..2 {
                        let mut v = 0.0;
                        for p in 0..2 {
                            for r in 0..2 {
                                v += c.get(p, r, m, n) * (g[(i, p)] * xi[j] + g[(j, p)] * xi[i]) * xi[r];
                            }
                        }
                        s[i][j][m][n] += 0.5 * v / points as f64;
                    }
                }
            }
        }
    }
    let idx = mandel_index(Dim::Two);
    DMatrix::from_fn(3, 3, |a, b| {
        let (i, j, wa) = idx[a];
        let (m, n, wb) = idx[b];
        s[i][j][m][n] * wa * wb
    })
}

/// Dilute discrepancy of circular holes: `C̃ = −C₁ (I − S)⁻¹`.
pub fn void_discrepancy_2d(c: &Tensor4, points: usize) -> Tensor4 {
    let s = eshelby_2d(c, points);
    let ct = -(mandel_of(c) * (DMatrix::identity(3, 3) - s).try_inverse().expect("I - S invertible"));
    let asymmetry = (&ct - ct.transpose()).amax();
    assert!(
        asymmetry <= 1e-10 * ct.amax(),
        "oracle lost major symmetry: {asymmetry:e}"
    );
    tensor4_from_mandel(Dim::Two, &(&ct + ct.transpose()).scale(0.5))
}

pub fn rel_diff(a: &Tensor4, b: &Tensor4) -> f64 {
    a.max_abs_diff(b).unwrap() / a.max_abs().max(b.max_abs()).max(f64::MIN_POSITIVE)
}
