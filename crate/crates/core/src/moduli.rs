//! Phase moduli and the fourth-order isotropic, cubic and orthotropic
//! representations.
//!
//! Plane-strain quantities live on two-dimensional tensors; the out-of-plane
//! response is never materialized.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{delta, Dim, Tensor4};

/// Deformation regime of a phase or of a composite case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    PlaneStrain,
    ThreeD,
}

impl Regime {
    pub fn dim(self) -> Dim {
        match self {
            Regime::PlaneStrain => Dim::Two,
            Regime::ThreeD => Dim::Three,
        }
    }

    /// `K = λ + κ μ` with κ = 1 (plane strain) or 2/3 (3D).
    pub fn bulk_from_lame(self, lambda: f64, mu: f64) -> f64 {
        match self {
            Regime::PlaneStrain => lambda + mu,
            Regime::ThreeD => lambda + 2.0 * mu / 3.0,
        }
    }

    pub fn lambda_from_bulk(self, bulk: f64, mu: f64) -> f64 {
        match self {
            Regime::PlaneStrain => bulk - mu,
            Regime::ThreeD => bulk - 2.0 * mu / 3.0,
        }
    }
}

/// Isotropic phase, Lamé constants in GPa.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsotropicModuli {
    pub lambda: f64,
    pub mu: f64,
    pub regime: Regime,
}

impl IsotropicModuli {
    pub fn new(lambda: f64, mu: f64, regime: Regime) -> Self {
        Self { lambda, mu, regime }
    }

    pub fn void(regime: Regime) -> Self {
        Self::new(0.0, 0.0, regime)
    }

    /// `λ = 2μν/(1 − 2ν)`.
    pub fn from_poisson(nu: f64, mu: f64, regime: Regime) -> Result<Self> {
        if !(nu > -1.0 && nu < 0.5) {
            return Err(Error::NonphysicalPoisson(nu));
        }
        if !(mu > 0.0) {
            return Err(Error::NonphysicalPhase(format!("shear modulus {mu} must be positive")));
        }
        Ok(Self::new(2.0 * mu * nu / (1.0 - 2.0 * nu), mu, regime))
    }

    pub fn is_void(&self) -> bool {
        self.lambda == 0.0 && self.mu == 0.0
    }

    pub fn bulk_modulus(&self) -> f64 {
        self.regime.bulk_from_lame(self.lambda, self.mu)
    }

    /// `ν = λ / (2(λ + μ))`.
    pub fn poisson(&self) -> f64 {
        self.lambda / (2.0 * (self.lambda + self.mu))
    }

    /// Positive shear and bulk moduli.
    pub fn check_physical(&self) -> Result<()> {
        let k = self.bulk_modulus();
        if self.mu > 0.0 && k > 0.0 {
            Ok(())
        } else {
            Err(Error::NonphysicalPhase(format!(
                "mu = {}, K = {k} (both must be positive)",
                self.mu
            )))
        }
    }

    pub fn tensor(&self) -> Tensor4 {
        iso_tensor4(self.lambda, self.mu, self.regime.dim())
    }
}

/// In-plane orthotropic matrix constants `{λ, μ, ξ, ω}` in GPa, with
/// `C₁₁₁₁ = λ + 2μ + ω`, `C₂₂₂₂ = λ + 2μ`, `C₁₁₂₂ = λ`, `C₁₂₁₂ = μ + ξ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrthotropicModuli2D {
    pub lambda: f64,
    pub mu: f64,
    pub xi: f64,
    pub omega: f64,
}

impl OrthotropicModuli2D {
    pub fn new(lambda: f64, mu: f64, xi: f64, omega: f64) -> Self {
        Self { lambda, mu, xi, omega }
    }

    pub fn tensor(&self) -> Tensor4 {
        OrthoDiscrepancyConstants::in_plane(self.lambda, self.mu, self.xi, self.omega).tensor(Dim::Two)
    }
}

/// The nine constants of the orthotropic representation: `λ̃`, `μ̃`, one `ξ̃`
/// per shear plane and four `ω̃`.
///
/// `xi_t[0]`, `xi_t[1]`, `xi_t[2]` act on the (23), (13) and (12) shear
/// dyads. `omega_t[0]` augments the 1111 component, `omega_t[1]` the 3333
/// component, `omega_t[2]` couples δ with the x₃ dyad and `omega_t[3]`
/// couples the x₁ and x₃ dyads.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct OrthoDiscrepancyConstants {
    pub lambda_t: f64,
    pub mu_t: f64,
    pub xi_t: [f64; 3],
    pub omega_t: [f64; 4],
}

impl OrthoDiscrepancyConstants {
    pub fn isotropic(lambda_t: f64, mu_t: f64) -> Self {
        Self {
            lambda_t,
            mu_t,
            ..Self::default()
        }
    }

    pub fn cubic(lambda_t: f64, mu_t: f64, xi_t: f64) -> Self {
        Self {
            lambda_t,
            mu_t,
            xi_t: [xi_t; 3],
            omega_t: [0.0; 4],
        }
    }

    /// Only the x₁–x₂ plane constants: `ξ̃ = ξ̃^III`, `ω̃ = ω̃^I`.
    pub fn in_plane(lambda_t: f64, mu_t: f64, xi_t: f64, omega_t: f64) -> Self {
        Self {
            lambda_t,
            mu_t,
            xi_t: [0.0, 0.0, xi_t],
            omega_t: [omega_t, 0.0, 0.0, 0.0],
        }
    }

    pub fn tensor(&self, dim: Dim) -> Tensor4 {
        ortho_tensor4(self, dim)
    }
}

/// `C_ijhk = λ δ_ij δ_hk + μ (δ_ih δ_jk + δ_ik δ_jh)`.
pub fn iso_tensor4(lambda: f64, mu: f64, dim: Dim) -> Tensor4 {
    Tensor4::from_fn(dim, |i, j, h, k| iso_component(lambda, mu, i, j, h, k))
}

fn iso_component(lambda: f64, mu: f64, i: usize, j: usize, h: usize, k: usize) -> f64 {
    lambda * delta(i, j) * delta(h, k) + mu * (delta(i, h) * delta(j, k) + delta(i, k) * delta(j, h))
}

/// `(δ_ip δ_jq + δ_iq δ_jp)` for the shear dyad on axes `p ≠ q`.
fn shear_dyad(i: usize, j: usize, p: usize, q: usize) -> f64 {
    delta(i, p) * delta(j, q) + delta(i, q) * delta(j, p)
}

/// Isotropic part plus `ξ` on the (12), (13) and (23) shear dyads. In 2D only
/// the (12) term survives.
pub fn cubic_tensor4(lambda: f64, mu: f64, xi: f64, dim: Dim) -> Tensor4 {
    ortho_tensor4(&OrthoDiscrepancyConstants::cubic(lambda, mu, xi), dim)
}

pub fn ortho_tensor4(c: &OrthoDiscrepancyConstants, dim: Dim) -> Tensor4 {
    let [xi1, xi2, xi3] = c.xi_t;
    let [om1, om2, om3, om4] = c.omega_t;
    // Axis 2 (x₃) does not exist in 2D; delta against it is then always 0.
    let x1 = 0;
    let x2 = 1;
    let x3 = 2;
    Tensor4::from_fn(dim, |i, j, h, k| {
        iso_component(c.lambda_t, c.mu_t, i, j, h, k)
            + xi1 * shear_dyad(i, j, x2, x3) * shear_dyad(h, k, x2, x3)
            + xi2 * shear_dyad(i, j, x1, x3) * shear_dyad(h, k, x1, x3)
            + xi3 * shear_dyad(i, j, x1, x2) * shear_dyad(h, k, x1, x2)
            + om1 * delta(i, x1) * delta(j, x1) * delta(h, x1) * delta(k, x1)
            + om2 * delta(i, x3) * delta(j, x3) * delta(h, x3) * delta(k, x3)
            + om3 * (delta(i, j) * delta(h, x3) * delta(k, x3) + delta(h, k) * delta(i, x3) * delta(j, x3))
            + om4
                * (delta(i, x1) * delta(j, x1) * delta(h, x3) * delta(k, x3)
                    + delta(i, x3) * delta(j, x3) * delta(h, x1) * delta(k, x1))
    })
}
