//! Orthonormal bases of symmetric second-order tensors and of third-order
//! tensors symmetric in their first two indices, with √2 weights on the
//! off-diagonal pairs (Mandel weighting). Quadratic forms expressed on these
//! bases have the same eigenvalues as the underlying tensor operator.

use nalgebra::DMatrix;

use super::{Dim, Tensor4, Tensor6};

/// Dense `dim × dim` basis elements: `e_a ⊗ e_a` first, then
/// `(e_a ⊗ e_b + e_b ⊗ e_a)/√2` for `a < b`.
pub fn sym_basis(dim: Dim) -> Vec<Vec<f64>> {
    let n = dim.n();
    let mut out = Vec::new();
    for a in 0..n {
        let mut e = vec![0.0; n * n];
        e[a * n + a] = 1.0;
        out.push(e);
    }
    let w = std::f64::consts::FRAC_1_SQRT_2;
    for a in 0..n {
        for b in a + 1..n {
            let mut e = vec![0.0; n * n];
            e[a * n + b] = w;
            e[b * n + a] = w;
            out.push(e);
        }
    }
    out
}

/// Basis of `χ_ijk = χ_jik`: each symmetric basis element paired with a
/// unit vector on the third index. Elements are dense `dim³` arrays.
pub fn chi_basis(dim: Dim) -> Vec<Vec<f64>> {
    let n = dim.n();
    let mut out = Vec::new();
    for s in sym_basis(dim) {
        for k in 0..n {
            let mut e = vec![0.0; n * n * n];
            for ij in 0..n * n {
                e[ij * n + k] = s[ij];
            }
            out.push(e);
        }
    }
    out
}

fn symmetric_part(m: DMatrix<f64>) -> DMatrix<f64> {
    let t = m.transpose();
    (m + t) * 0.5
}

/// `M_ab = B^a : C : B^b` on [`sym_basis`].
pub fn sym_matrix_of_tensor4(c: &Tensor4) -> DMatrix<f64> {
    let n = c.dim().n();
    let basis = sym_basis(c.dim());
    let data = c.as_slice();
    let nb = basis.len();
    let mut m = DMatrix::zeros(nb, nb);
    for (a, ba) in basis.iter().enumerate() {
        // v_hk = B^a_ij C_ijhk
        let mut v = vec![0.0; n * n];
        for (ij, &w) in ba.iter().enumerate().filter(|(_, w)| **w != 0.0) {
            for hk in 0..n * n {
                v[hk] += w * data[ij * n * n + hk];
            }
        }
        for (b, bb) in basis.iter().enumerate() {
            m[(a, b)] = v.iter().zip(bb).map(|(x, y)| x * y).sum();
        }
    }
    symmetric_part(m)
}

/// `M_ab = X^a ⋮ A ⋮ X^b` on [`chi_basis`].
pub fn chi_matrix_of_tensor6(a6: &Tensor6) -> DMatrix<f64> {
    let n = a6.dim().n();
    let n3 = n * n * n;
    let basis = chi_basis(a6.dim());
    let data = a6.as_slice();
    let nb = basis.len();
    let mut m = DMatrix::zeros(nb, nb);
    for (a, xa) in basis.iter().enumerate() {
        let mut v = vec![0.0; n3];
        for (ijh, &w) in xa.iter().enumerate().filter(|(_, w)| **w != 0.0) {
            for lmn in 0..n3 {
                v[lmn] += w * data[ijh * n3 + lmn];
            }
        }
        for (b, xb) in basis.iter().enumerate() {
            m[(a, b)] = v.iter().zip(xb).map(|(x, y)| x * y).sum();
        }
    }
    symmetric_part(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gram(basis: &[Vec<f64>]) -> f64 {
        let mut err = 0.0_f64;
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate() {
                let dot: f64 = x.iter().zip(y).map(|(p, q)| p * q).sum();
                err = err.max((dot - if a == b { 1.0 } else { 0.0 }).abs());
            }
        }
        err
    }

    #[test]
    fn bases_are_orthonormal_with_expected_sizes() {
        assert_eq!(sym_basis(Dim::Two).len(), 3);
        assert_eq!(sym_basis(Dim::Three).len(), 6);
        assert_eq!(chi_basis(Dim::Two).len(), 6);
        assert_eq!(chi_basis(Dim::Three).len(), 18);
        for dim in [Dim::Two, Dim::Three] {
            assert!(gram(&sym_basis(dim)) < 1e-14);
            assert!(gram(&chi_basis(dim)) < 1e-14);
        }
    }

    #[test]
    fn chi_basis_elements_are_first_pair_symmetric() {
        let n = 3;
        for e in chi_basis(Dim::Three) {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        assert_eq!(e[(i * n + j) * n + k], e[(j * n + i) * n + k]);
                    }
                }
            }
        }
    }

    #[test]
    fn zero_tensors_give_zero_matrices() {
        assert_eq!(sym_matrix_of_tensor4(&Tensor4::zeros(Dim::Three)).amax(), 0.0);
        assert_eq!(chi_matrix_of_tensor6(&Tensor6::zeros(Dim::Two)).amax(), 0.0);
    }
}
