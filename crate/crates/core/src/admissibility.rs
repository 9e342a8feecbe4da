//! Definiteness of the discrepancy tensor and of the sixth-order tensor.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moduli::{OrthoDiscrepancyConstants, Regime};
use crate::tensor::{chi_matrix_of_tensor6, sym_matrix_of_tensor4, symmetric_eigenvalues, Tensor4, Tensor6};

/// Eigenvalues within this fraction of the spectral radius count as zero.
pub const SPECTRAL_MARGIN: f64 = 1e-12;

/// `K̃ < 0` and `μ̃ < 0`.
pub fn iso_nd_check(bulk_t: f64, mu_t: f64) -> bool {
    bulk_t < 0.0 && mu_t < 0.0
}

/// Isotropic conditions and `μ̃ + ξ̃ < 0`.
pub fn cubic_nd_check(bulk_t: f64, mu_t: f64, xi_t: f64) -> bool {
    iso_nd_check(bulk_t, mu_t) && mu_t + xi_t < 0.0
}

/// Left-hand sides of the orthotropic negative-definiteness conditions with
/// the required sign of each: shear terms and the leading normal entry must
/// be negative, the 2×2 normal minor positive and the 3×3 normal determinant
/// negative. Plane strain keeps the first shear term and the 1–2 normal block.
pub fn ortho_nd_conditions(c: &OrthoDiscrepancyConstants, regime: Regime) -> Vec<(f64, bool)> {
    let (l, m) = (c.lambda_t, c.mu_t);
    let [x1, x2, x3] = c.xi_t;
    let [w1, w2, w3, w4] = c.omega_t;
    let lead = l + 2.0 * m + w1;
    let minor = 4.0 * m * (l + m) + (l + 2.0 * m) * w1;
    match regime {
        Regime::PlaneStrain => vec![(m + x3, false), (lead, false), (minor, true)],
        Regime::ThreeD => {
            let det3 = 8.0 * m.powi(3) - w1 * w3 * w3
                + 4.0 * m * m * (w1 + w2 + 2.0 * w3)
                + l * (12.0 * m * m + w1 * w2 + 4.0 * m * (w1 + w2 - w4) - w4 * w4)
                - 2.0 * m * (2.0 * w3 * w3 - w1 * (w2 + 2.0 * w3) + 2.0 * w3 * w4 + w4 * w4);
            vec![
                (m + x3, false),
                (m + x2, false),
                (m + x1, false),
                (lead, false),
                (minor, true),
                (det3, false),
            ]
        }
    }
}

/// Closed-form negative definiteness of an orthotropic discrepancy.
pub fn ortho_nd_check(c: &OrthoDiscrepancyConstants, regime: Regime) -> bool {
    ortho_nd_conditions(c, regime)
        .iter()
        .all(|&(v, positive)| if positive { v > 0.0 } else { v < 0.0 })
}

/// Spectral definiteness verdict. `marginal` flags an extreme eigenvalue
/// within [`SPECTRAL_MARGIN`] of zero (semi-definite inputs).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralVerdict {
    pub definite: bool,
    pub marginal: bool,
    pub min_eigenvalue: f64,
    pub max_eigenvalue: f64,
}

fn verdict(eigs: &[f64], negative: bool) -> SpectralVerdict {
    let min = eigs.first().copied().unwrap_or(0.0);
    let max = eigs.last().copied().unwrap_or(0.0);
    let radius = min.abs().max(max.abs());
    let edge = if negative { max } else { min };
    let margin = SPECTRAL_MARGIN * radius;
    let definite = if negative { edge < -margin } else { edge > margin };
    SpectralVerdict {
        definite,
        marginal: edge.abs() <= margin,
        min_eigenvalue: min,
        max_eigenvalue: max,
    }
}

/// Negative definiteness of `C̃` on symmetric second-order tensors.
pub fn spectral_nd_tensor4(c: &Tensor4) -> Result<SpectralVerdict> {
    let eigs = symmetric_eigenvalues(&sym_matrix_of_tensor4(c))?;
    Ok(verdict(&eigs, true))
}

/// Positive definiteness of `A` on third-order tensors symmetric in the
/// first two indices.
pub fn spectral_pd_tensor6(a: &Tensor6) -> Result<SpectralVerdict> {
    let eigs = symmetric_eigenvalues(&chi_matrix_of_tensor6(a))?;
    Ok(verdict(&eigs, false))
}

/// Largest `μ₂/μ₁` for which an inclusion of Poisson's ratio `ν₂` in a
/// matrix of Poisson's ratio `ν₁` keeps `A` positive definite.
pub fn pd_threshold(nu1: f64, nu2: f64, regime: Regime) -> Result<f64> {
    if nu1 == 0.5 {
        return Err(Error::IncompressibleMatrix);
    }
    for nu in [nu1, nu2] {
        if !(nu > -1.0 && nu < 0.5) {
            return Err(Error::NonphysicalPoisson(nu));
        }
    }
    let t = match regime {
        Regime::PlaneStrain => (1.0 - 2.0 * nu2) / (1.0 - 2.0 * nu1),
        Regime::ThreeD => (1.0 + nu1) * (1.0 - 2.0 * nu2) / ((1.0 + nu2) * (1.0 - 2.0 * nu1)),
    };
    Ok(t.min(1.0))
}
