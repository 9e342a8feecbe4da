use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-10;

/// Eigenvalues of a symmetric matrix in ascending order.
///
/// Backed by nalgebra's implicit symmetric QR iteration, which is backward
/// stable: for the ≤ 18×18 matrices used here the eigenvalues are accurate to
/// a small multiple of machine epsilon times the spectral radius, well inside
/// 1e-10. Asymmetry above 1e-10·(1 + max |M|) is rejected.
pub fn symmetric_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: m.ncols(),
        });
    }
    let asym = (m - m.transpose()).amax();
    if asym > SYMMETRY_TOL * (1.0 + m.amax()) {
        return Err(Error::NotSymmetric(asym));
    }
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    let sym = (m + m.transpose()) * 0.5;
    let mut values: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

pub fn min_eigenvalue_sym(m: &DMatrix<f64>) -> Result<f64> {
    symmetric_eigenvalues(m)?
        .first()
        .copied()
        .ok_or(Error::InvalidParameter("empty matrix".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_diagonal() {
        assert_eq!(min_eigenvalue_sym(&DMatrix::identity(6, 6)).unwrap(), 1.0);
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![-3.0, 2.0]));
        assert_eq!(min_eigenvalue_sym(&d).unwrap(), -3.0);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 0.5, 0.0, 1.0]);
        assert!(matches!(min_eigenvalue_sym(&m), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn ascending_order_and_known_spectrum() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let m = DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        let ev = symmetric_eigenvalues(&m).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] - 3.0).abs() < 1e-14);
    }
}
