//! First-order discrepancy constants for dilute inclusions and holes.
//!
//! Every case returns the constants of `C̃`, the first-order (in the volume
//! fraction) change of the local stiffness: `C_eq = C₁ + f C̃`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moduli::{iso_tensor4, IsotropicModuli, OrthoDiscrepancyConstants, OrthotropicModuli2D, Regime};
use crate::tensor::{Dim, Tensor4};

/// Isotropic discrepancy `(λ̃, μ̃, K̃)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsoDiscrepancy {
    pub lambda_t: f64,
    pub mu_t: f64,
    pub bulk_t: f64,
    pub regime: Regime,
}

impl IsoDiscrepancy {
    pub fn from_bulk_shear(bulk_t: f64, mu_t: f64, regime: Regime) -> Self {
        Self {
            lambda_t: regime.lambda_from_bulk(bulk_t, mu_t),
            mu_t,
            bulk_t,
            regime,
        }
    }

    pub fn from_lame(lambda_t: f64, mu_t: f64, regime: Regime) -> Self {
        Self {
            lambda_t,
            mu_t,
            bulk_t: regime.bulk_from_lame(lambda_t, mu_t),
            regime,
        }
    }

    pub fn tensor(&self) -> Tensor4 {
        iso_tensor4(self.lambda_t, self.mu_t, self.regime.dim())
    }
}

/// Cubic (square-symmetric in plane strain) discrepancy `(λ̃, μ̃, ξ̃)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CubicDiscrepancy {
    pub lambda_t: f64,
    pub mu_t: f64,
    pub xi_t: f64,
    pub regime: Regime,
}

impl CubicDiscrepancy {
    pub fn bulk_t(&self) -> f64 {
        self.regime.bulk_from_lame(self.lambda_t, self.mu_t)
    }

    pub fn tensor(&self) -> Tensor4 {
        crate::moduli::cubic_tensor4(self.lambda_t, self.mu_t, self.xi_t, self.regime.dim())
    }
}

/// Number of edges of a regular polygonal hole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolygonSides {
    Finite(u32),
    Infinite,
}

/// Polygonal-hole constants `𝒜(n)`, `ℬ(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolygonConstants {
    pub n: PolygonSides,
    pub a: f64,
    pub b: f64,
}

/// Tabulated `(n, 𝒜, ℬ)` for triangle, pentagon, hexagon and circle.
pub const POLYGON_TABLE: [PolygonConstants; 4] = [
    PolygonConstants {
        n: PolygonSides::Finite(3),
        a: 2.1065,
        b: 0.2295,
    },
    PolygonConstants {
        n: PolygonSides::Finite(5),
        a: 1.6198,
        b: 0.3233,
    },
    PolygonConstants {
        n: PolygonSides::Finite(6),
        a: 1.5688,
        b: 0.3288,
    },
    PolygonConstants {
        n: PolygonSides::Infinite,
        a: 3.0 / 2.0,
        b: 1.0 / 3.0,
    },
];

/// Randomly oriented square holes.
pub const RANDOM_SQUARE_CONSTANTS: PolygonConstants = PolygonConstants {
    n: PolygonSides::Finite(4),
    a: 1.738,
    b: 0.306,
};

/// Coefficients of the aligned square-hole discrepancy:
/// `λ̃ = −(c_λ K² − c_μ μ²)(K+μ)/(Kμ)`, `μ̃ = −c_μ (K+μ)μ/K`, `ξ̃ = −c_ξ (K+μ)μ/K`.
pub const SQUARE_COEFF_LAMBDA: f64 = 1.198;
pub const SQUARE_COEFF_MU: f64 = 1.864;
pub const SQUARE_COEFF_XI: f64 = 0.796;

impl PolygonConstants {
    pub fn lookup(n: PolygonSides) -> Result<Self> {
        match n {
            PolygonSides::Finite(4) => Err(Error::SquareHoleNotIsotropic),
            other => POLYGON_TABLE
                .iter()
                .find(|c| c.n == other)
                .copied()
                .ok_or_else(|| match other {
                    PolygonSides::Finite(k) => Error::UntabulatedPolygon(k),
                    PolygonSides::Infinite => unreachable!("circle is tabulated"),
                }),
        }
    }
}

fn require_regime(m: &IsotropicModuli, regime: Regime, case: &'static str) -> Result<()> {
    if m.regime != regime {
        return Err(Error::WrongRegime {
            case,
            expected: match regime {
                Regime::PlaneStrain => "plane strain",
                Regime::ThreeD => "three-dimensional",
            },
        });
    }
    Ok(())
}

fn positive_denominator(case: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NonpositiveDenominator { case, value })
    }
}

/// Parallel circular cylinders in plane strain.
pub fn cylindrical_inclusion(matrix: &IsotropicModuli, inclusion: &IsotropicModuli) -> Result<IsoDiscrepancy> {
    const CASE: &str = "cylindrical inclusion";
    require_regime(matrix, Regime::PlaneStrain, CASE)?;
    require_regime(inclusion, Regime::PlaneStrain, CASE)?;
    matrix.check_physical()?;
    let (k1, mu1) = (matrix.bulk_modulus(), matrix.mu);
    let (k2, mu2) = (inclusion.bulk_modulus(), inclusion.mu);
    let den_k = positive_denominator(CASE, k2 + mu1)?;
    let den_mu = positive_denominator(CASE, 2.0 * mu1 * mu2 + k1 * (mu1 + mu2))?;
    let bulk_t = (k2 - k1) * (k1 + mu1) / den_k;
    let mu_t = 2.0 * mu1 * (mu2 - mu1) * (k1 + mu1) / den_mu;
    Ok(IsoDiscrepancy::from_bulk_shear(bulk_t, mu_t, Regime::PlaneStrain))
}

/// Spheres in three dimensions.
pub fn spherical_inclusion(matrix: &IsotropicModuli, inclusion: &IsotropicModuli) -> Result<IsoDiscrepancy> {
    const CASE: &str = "spherical inclusion";
    require_regime(matrix, Regime::ThreeD, CASE)?;
    require_regime(inclusion, Regime::ThreeD, CASE)?;
    matrix.check_physical()?;
    let (k1, mu1) = (matrix.bulk_modulus(), matrix.mu);
    let (k2, mu2) = (inclusion.bulk_modulus(), inclusion.mu);
    let s1 = 3.0 * k1 + 4.0 * mu1;
    let den_k = positive_denominator(CASE, 3.0 * k2 + 4.0 * mu1)?;
    let den_mu = positive_denominator(CASE, mu1 * (3.0 * k1 + 4.0 * mu2) + 2.0 * s1 * (mu2 + mu1))?;
    let bulk_t = s1 * (k2 - k1) / den_k;
    let mu_t = 5.0 * mu1 * (mu2 - mu1) * s1 / den_mu;
    Ok(IsoDiscrepancy::from_bulk_shear(bulk_t, mu_t, Regime::ThreeD))
}

fn polygon_discrepancy(matrix: &IsotropicModuli, c: &PolygonConstants) -> IsoDiscrepancy {
    let (k1, mu1) = (matrix.bulk_modulus(), matrix.mu);
    let bulk_t = -c.a * (1.0 - c.b) * (k1 + mu1) / mu1 * k1;
    let mu_t = -c.a * (1.0 + c.b) * (k1 + mu1) / k1 * mu1;
    IsoDiscrepancy::from_bulk_shear(bulk_t, mu_t, Regime::PlaneStrain)
}

/// Regular `n`-polygonal holes, `n ∈ {3, 5, 6, ∞}`.
pub fn polygonal_hole(matrix: &IsotropicModuli, n: PolygonSides) -> Result<IsoDiscrepancy> {
    require_regime(matrix, Regime::PlaneStrain, "polygonal hole")?;
    matrix.check_physical()?;
    let c = PolygonConstants::lookup(n)?;
    Ok(polygon_discrepancy(matrix, &c))
}

/// Square holes with edges parallel to the axes; cubic discrepancy.
pub fn square_hole_aligned(matrix: &IsotropicModuli) -> Result<CubicDiscrepancy> {
    require_regime(matrix, Regime::PlaneStrain, "aligned square hole")?;
    matrix.check_physical()?;
    let (k1, mu1) = (matrix.bulk_modulus(), matrix.mu);
    let g = (k1 + mu1) / k1 * mu1;
    Ok(CubicDiscrepancy {
        lambda_t: -(SQUARE_COEFF_LAMBDA * k1 * k1 - SQUARE_COEFF_MU * mu1 * mu1) * (k1 + mu1) / (k1 * mu1),
        mu_t: -SQUARE_COEFF_MU * g,
        xi_t: -SQUARE_COEFF_XI * g,
        regime: Regime::PlaneStrain,
    })
}

/// Randomly oriented square holes; isotropic.
pub fn square_hole_random(matrix: &IsotropicModuli) -> Result<IsoDiscrepancy> {
    require_regime(matrix, Regime::PlaneStrain, "random square hole")?;
    matrix.check_physical()?;
    Ok(polygon_discrepancy(matrix, &RANDOM_SQUARE_CONSTANTS))
}

/// Auxiliary constants of the orthotropic hole solution. `γ = β₁β₂` and
/// `δ = β₁ + β₂` in terms of the roots `±iβ_k` of the characteristic
/// equation of the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrthoAux {
    pub gamma_cap: f64,
    pub delta_cap: f64,
    pub gamma: f64,
    pub delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrthoHoleDiscrepancy {
    /// In-plane constants; `xi_t[2]` and `omega_t[0]` carry `ξ̃` and `ω̃`.
    pub constants: OrthoDiscrepancyConstants,
    pub aux: OrthoAux,
    /// Set when a denominator is below 1e-9 of the magnitude of its terms.
    pub ill_conditioned: bool,
}

impl OrthoHoleDiscrepancy {
    pub fn lambda_t(&self) -> f64 {
        self.constants.lambda_t
    }
    pub fn mu_t(&self) -> f64 {
        self.constants.mu_t
    }
    pub fn xi_t(&self) -> f64 {
        self.constants.xi_t[2]
    }
    pub fn omega_t(&self) -> f64 {
        self.constants.omega_t[0]
    }
    pub fn tensor(&self) -> Tensor4 {
        self.constants.tensor(Dim::Two)
    }
}

const CONDITION_RATIO: f64 = 1e-9;

struct Denominator {
    value: f64,
    scale: f64,
}

impl Denominator {
    fn new(terms: &[f64]) -> Self {
        Self {
            value: terms.iter().sum(),
            scale: terms.iter().map(|t| t.abs()).sum(),
        }
    }

    fn checked(&self, what: &'static str) -> Result<f64> {
        if self.value == 0.0 || !self.value.is_finite() {
            Err(Error::DegenerateOrthotropy(what))
        } else {
            Ok(self.value)
        }
    }

    fn ill_conditioned(&self) -> bool {
        self.value.abs() < CONDITION_RATIO * self.scale
    }
}

/// Circular holes in an orthotropic matrix (plane strain, hole axis along
/// x₃, orthotropy axes along x₁ and x₂).
pub fn ortho_circular_hole(matrix: &OrthotropicModuli2D) -> Result<OrthoHoleDiscrepancy> {
    let OrthotropicModuli2D {
        lambda: l,
        mu: m,
        xi: x,
        omega: w,
    } = *matrix;
    // The closed forms for Γ, Δ count ω twice on C₁₁₁₁; the representation
    // used here counts it once.
    let wh = 0.5 * w;
    let lm = l + 2.0 * m;

    let den_aux = Denominator::new(&[lm * m, lm * x]);
    den_aux.checked("(λ₁ + 2μ₁)(μ₁ + ξ₁)")?;
    let den_aux_value = lm * (m + x);
    let gamma_cap = (2.0 * m * (m + wh) + l * (m - x + wh)) / den_aux_value;
    let delta_cap =
        ((-2.0 * x * (lm + x) + lm * wh) * (2.0 * m * (m + wh) + l * (2.0 * m + wh))) / (den_aux_value * den_aux_value);

    let gamma_sq = gamma_cap * gamma_cap - delta_cap;
    if gamma_sq < 0.0 {
        return Err(Error::ComplexAuxiliary("Γ² − Δ < 0"));
    }
    if delta_cap < 0.0 {
        return Err(Error::ComplexAuxiliary("Δ < 0"));
    }
    let root_delta = delta_cap.sqrt();
    if gamma_cap - root_delta < 0.0 {
        return Err(Error::ComplexAuxiliary("Γ − √Δ < 0"));
    }
    let g = gamma_sq.sqrt();
    let d = (gamma_cap + root_delta).sqrt() + (gamma_cap - root_delta).sqrt();

    let p = Denominator::new(&[(g - 1.0) * l, 2.0 * g * m]);
    let r = Denominator::new(&[l, g * l, 2.0 * g * m]);
    let q = Denominator::new(&[(-2.0 + 2.0 * g - d * d) * l, 4.0 * g * m, -2.0 * d * d * m]);
    let pv = p.checked("(γ − 1)λ₁ + 2γμ₁")?;
    let rv = r.checked("λ₁ + γλ₁ + 2γμ₁")?;
    let qv = q.checked("(−2 + 2γ − δ²)λ₁ + 4γμ₁ − 2δ²μ₁")?;
    let ill_conditioned = [&den_aux, &p, &r, &q].iter().any(|den| den.ill_conditioned());

    let l2 = l * l;
    let m2 = m * m;
    let pr = pv * rv;

    let lambda_t = g
        * lm
        * (((g - 1.0).powi(2) - (1.0 + g) * d) * l2
            + 2.0 * (2.0 * (g - 1.0) * g - (1.0 + g) * d) * l * m
            + 4.0 * g * g * m2)
        / pr;
    let mu_t = -lm
        * ((g * g - 1.0) * (g - 1.0 - d) * l2
            + 2.0 * (g - 1.0) * g * (2.0 + 2.0 * g - d) * l * m
            + 4.0 * g * (g + g * g + d) * m2)
        / (2.0 * pr);
    let xi_t = -mu_t - d * (1.0 + g + d) * lm * pv * rv / (qv * qv);
    // The closed form yields ω̃ in the doubled-ω convention; convert.
    let omega_half = -mu_t
        - g * lm
            * ((g * g - 1.0) * (g - 1.0 + g * d) * l2
                + 2.0 * (g - 1.0) * (d + 2.0 * g * (1.0 + g) * (1.0 + d)) * l * m
                + 4.0 * g * g * (1.0 + g + g * d) * m2)
            / (2.0 * pr);
    let omega_t = 2.0 * omega_half;

    Ok(OrthoHoleDiscrepancy {
        constants: OrthoDiscrepancyConstants::in_plane(lambda_t, mu_t, xi_t, omega_t),
        aux: OrthoAux {
            gamma_cap,
            delta_cap,
            gamma: g,
            delta: d,
        },
        ill_conditioned,
    })
}

/// `C_eq = C₁ + f C̃` for `0 ≤ f < 1`.
pub fn effective_local_tensor(matrix_c: &Tensor4, disc_c: &Tensor4, f: f64) -> Result<Tensor4> {
    if !(0.0..1.0).contains(&f) {
        return Err(Error::VolumeFraction(f));
    }
    matrix_c.add_scaled(f, disc_c)
}
