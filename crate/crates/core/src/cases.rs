//! Named composite cases, their reports and parameter sweeps.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::admissibility::{
    cubic_nd_check, iso_nd_check, ortho_nd_check, pd_threshold, spectral_nd_tensor4, spectral_pd_tensor6,
    SpectralVerdict,
};
use crate::assembly::{
    assemble_from_constants, assemble_generic, classify, cubic_constants, iso_constants, ortho_constants, SymmetryClass,
};
use crate::discrepancy::{
    cylindrical_inclusion, effective_local_tensor, ortho_circular_hole, polygonal_hole, spherical_inclusion,
    square_hole_aligned, square_hole_random, OrthoAux, PolygonSides,
};
use crate::error::{Error, Result};
use crate::moduli::{IsotropicModuli, OrthoDiscrepancyConstants, OrthotropicModuli2D, Regime};
use crate::rve::RveShape;

/// Default tolerance for symmetry detection.
pub const DEFAULT_SYMMETRY_TOL: f64 = 1e-10;

/// Above this volume fraction the dilute approximation is strained.
pub const DILUTE_WARNING_F: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseKind {
    CylindricalInclusion,
    SphericalInclusion,
    PolygonalHole,
    SquareHoleAligned,
    SquareHoleRandom,
    OrthoCircularHole,
}

impl CaseKind {
    pub fn regime(self) -> Regime {
        match self {
            CaseKind::SphericalInclusion => Regime::ThreeD,
            _ => Regime::PlaneStrain,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseKind::CylindricalInclusion => "cylindrical_inclusion",
            CaseKind::SphericalInclusion => "spherical_inclusion",
            CaseKind::PolygonalHole => "polygonal_hole",
            CaseKind::SquareHoleAligned => "square_hole_aligned",
            CaseKind::SquareHoleRandom => "square_hole_random",
            CaseKind::OrthoCircularHole => "ortho_circular_hole",
        }
    }

    pub fn has_inclusion(self) -> bool {
        matches!(self, CaseKind::CylindricalInclusion | CaseKind::SphericalInclusion)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LameSpec {
    pub lambda: f64,
    pub mu: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoissonSpec {
    pub nu: f64,
    pub mu: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrthotropicSpec {
    pub lambda: f64,
    pub mu: f64,
    pub xi: f64,
    pub omega: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    Orthotropic(OrthotropicSpec),
    Lame(LameSpec),
    Poisson(PoissonSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VoidSpec {
    pub void: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatioSpec {
    pub mu_ratio: f64,
    pub nu: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InclusionSpec {
    Void(VoidSpec),
    Lame(LameSpec),
    Poisson(PoissonSpec),
    Ratio(RatioSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RhoSpec {
    pub rho: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RveSpec {
    Rho(RhoSpec),
    Shape(RveShape),
}

/// Polygon edge count, written as an integer or `"inf"` in configs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonN(pub PolygonSides);

impl Serialize for PolygonN {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            PolygonSides::Finite(n) => s.serialize_u32(n),
            PolygonSides::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for PolygonN {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(PolygonN(PolygonSides::Finite(n))),
            Raw::Text(t) if matches!(t.as_str(), "inf" | "infinity" | "∞") => Ok(PolygonN(PolygonSides::Infinite)),
            Raw::Text(t) => Err(serde::de::Error::custom(format!(
                "polygon n must be an integer or \"inf\", got {t:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseConfig {
    pub case: CaseKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regime: Option<Regime>,
    pub matrix: MatrixSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inclusion: Option<InclusionSpec>,
    pub f: f64,
    pub rve: RveSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<PolygonN>,
}

fn config_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Config(msg.into()))
}

fn isotropic_phase(spec: MatrixSpec, regime: Regime) -> Result<IsotropicModuli> {
    match spec {
        MatrixSpec::Lame(LameSpec { lambda, mu }) => Ok(IsotropicModuli::new(lambda, mu, regime)),
        MatrixSpec::Poisson(PoissonSpec { nu, mu }) => IsotropicModuli::from_poisson(nu, mu, regime),
        MatrixSpec::Orthotropic(_) => config_err("this case needs an isotropic matrix ({lambda, mu} or {nu, mu})"),
    }
}

fn inclusion_phase(spec: InclusionSpec, matrix: &IsotropicModuli) -> Result<IsotropicModuli> {
    let regime = matrix.regime;
    match spec {
        InclusionSpec::Void(VoidSpec { void: true }) => Ok(IsotropicModuli::void(regime)),
        InclusionSpec::Void(VoidSpec { void: false }) => config_err("inclusion {\"void\": false} is not a phase"),
        InclusionSpec::Lame(LameSpec { lambda, mu }) => Ok(IsotropicModuli::new(lambda, mu, regime)),
        InclusionSpec::Poisson(PoissonSpec { nu, mu }) => IsotropicModuli::from_poisson(nu, mu, regime),
        InclusionSpec::Ratio(RatioSpec { mu_ratio, nu }) => {
            if !(nu > -1.0 && nu < 0.5) {
                return Err(Error::NonphysicalPoisson(nu));
            }
            if !(mu_ratio >= 0.0 && mu_ratio.is_finite()) {
                return Err(Error::NonphysicalPhase(format!(
                    "mu_ratio {mu_ratio} must be non-negative"
                )));
            }
            let mu = mu_ratio * matrix.mu;
            Ok(IsotropicModuli::new(2.0 * mu * nu / (1.0 - 2.0 * nu), mu, regime))
        }
    }
}

impl CaseConfig {
    /// Structural checks that do not involve the physics.
    pub fn validate(&self) -> Result<()> {
        let regime = self.case.regime();
        if let Some(r) = self.regime {
            if r != regime {
                return config_err(format!("case {} requires regime {:?}", self.case.name(), regime));
            }
        }
        if !(self.f > 0.0 && self.f < 1.0) {
            return config_err(format!("f = {} must lie in (0, 1)", self.f));
        }
        match (self.case.has_inclusion(), &self.inclusion) {
            (true, None) => return config_err(format!("case {} needs an inclusion", self.case.name())),
            (false, Some(InclusionSpec::Void(VoidSpec { void: true }))) | (false, None) => {}
            (false, Some(_)) => {
                return config_err(format!(
                    "case {} describes holes; only {{\"void\": true}} is accepted",
                    self.case.name()
                ))
            }
            _ => {}
        }
        match (self.case, self.n) {
            (CaseKind::PolygonalHole, None) => return config_err("polygonal_hole needs n"),
            (CaseKind::PolygonalHole, Some(_)) => {}
            (_, Some(_)) => {
                return config_err(format!(
                    "n is only meaningful for polygonal_hole, not {}",
                    self.case.name()
                ))
            }
            _ => {}
        }
        if self.case == CaseKind::OrthoCircularHole {
            if let MatrixSpec::Poisson(_) = self.matrix {
                return config_err("ortho_circular_hole needs {lambda, mu, xi, omega} or {lambda, mu}");
            }
        } else if let MatrixSpec::Orthotropic(_) = self.matrix {
            return config_err(format!("case {} needs an isotropic matrix", self.case.name()));
        }
        match &self.rve {
            RveSpec::Rho(RhoSpec { rho }) if !(*rho > 0.0 && rho.is_finite()) => {
                return config_err(format!("rho = {rho} must be positive"))
            }
            RveSpec::Shape(shape) if shape.dim() != regime.dim() => {
                return config_err(format!(
                    "RVE shape is {}-dimensional but case {} is {}-dimensional",
                    shape.dim().n(),
                    self.case.name(),
                    regime.dim().n()
                ))
            }
            _ => {}
        }
        Ok(())
    }

    pub fn rho(&self) -> Result<f64> {
        match &self.rve {
            RveSpec::Rho(RhoSpec { rho }) => Ok(*rho),
            RveSpec::Shape(shape) => shape.radius_of_inertia(),
        }
    }
}

/// First-order discrepancy constants as reported.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub lambda_t: f64,
    pub mu_t: f64,
    pub bulk_t: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi_t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aux: Option<OrthoAux>,
}

/// `C_eq = C₁ + f C̃` in terms of its constants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquivalentModuli {
    pub lambda: f64,
    pub mu: f64,
    pub bulk: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstantsReport {
    pub class: SymmetryClass,
    /// `a₁ … a₁₂`.
    pub raw: [f64; 12],
    /// `a_i / (fρ²μ₁)`.
    pub normalized: [f64; 12],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DefinitenessReport {
    /// Closed-form negative definiteness of `C̃`.
    pub closed_form_nd: bool,
    pub spectral_nd: SpectralVerdict,
    /// Positive definiteness of `A` on the strain-gradient space.
    pub spectral_pd: SpectralVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: CaseKind,
    pub regime: Regime,
    pub f: f64,
    pub rho: f64,
    pub mu1: f64,
    pub discrepancy: DiscrepancyReport,
    pub constants: ConstantsReport,
    pub equivalent_moduli: EquivalentModuli,
    pub definiteness: DefinitenessReport,
    pub symmetry_class: SymmetryClass,
    /// Max difference between the closed-form representation and the
    /// generic assembly of `A`.
    pub representation_residual: f64,
    pub warnings: Vec<String>,
}

enum Computed {
    Iso {
        lambda_t: f64,
        mu_t: f64,
        bulk_t: f64,
    },
    Cubic {
        lambda_t: f64,
        mu_t: f64,
        bulk_t: f64,
        xi_t: f64,
    },
    Ortho {
        constants: OrthoDiscrepancyConstants,
        aux: OrthoAux,
        ill_conditioned: bool,
    },
}

struct Matrix {
    lambda: f64,
    mu: f64,
    xi: f64,
    omega: f64,
    tensor: crate::tensor::Tensor4,
}

pub fn run_case(config: &CaseConfig) -> Result<CaseReport> {
    run_case_with_tolerance(config, DEFAULT_SYMMETRY_TOL)
}

pub fn run_case_with_tolerance(config: &CaseConfig, symmetry_tol: f64) -> Result<CaseReport> {
    config.validate()?;
    let regime = config.case.regime();
    let dim = regime.dim();
    let (f, rho) = (config.f, config.rho()?);

    let (matrix, computed) = if config.case == CaseKind::OrthoCircularHole {
        let m = match config.matrix {
            MatrixSpec::Orthotropic(OrthotropicSpec { lambda, mu, xi, omega }) => {
                OrthotropicModuli2D::new(lambda, mu, xi, omega)
            }
            MatrixSpec::Lame(LameSpec { lambda, mu }) => OrthotropicModuli2D::new(lambda, mu, 0.0, 0.0),
            MatrixSpec::Poisson(_) => unreachable!("rejected by validate"),
        };
        let hole = ortho_circular_hole(&m)?;
        (
            Matrix {
                lambda: m.lambda,
                mu: m.mu,
                xi: m.xi,
                omega: m.omega,
                tensor: m.tensor(),
            },
            Computed::Ortho {
                constants: hole.constants,
                aux: hole.aux,
                ill_conditioned: hole.ill_conditioned,
            },
        )
    } else {
        let m = isotropic_phase(config.matrix, regime)?;
        let computed = match config.case {
            CaseKind::CylindricalInclusion | CaseKind::SphericalInclusion => {
                let inc = inclusion_phase(config.inclusion.expect("validated"), &m)?;
                let d = if config.case == CaseKind::CylindricalInclusion {
                    cylindrical_inclusion(&m, &inc)?
                } else {
                    spherical_inclusion(&m, &inc)?
                };
                Computed::Iso {
                    lambda_t: d.lambda_t,
                    mu_t: d.mu_t,
                    bulk_t: d.bulk_t,
                }
            }
            CaseKind::PolygonalHole | CaseKind::SquareHoleRandom => {
                let d = if config.case == CaseKind::PolygonalHole {
                    polygonal_hole(&m, config.n.expect("validated").0)?
                } else {
                    square_hole_random(&m)?
                };
                Computed::Iso {
                    lambda_t: d.lambda_t,
                    mu_t: d.mu_t,
                    bulk_t: d.bulk_t,
                }
            }
            CaseKind::SquareHoleAligned => {
                let d = square_hole_aligned(&m)?;
                Computed::Cubic {
                    lambda_t: d.lambda_t,
                    mu_t: d.mu_t,
                    bulk_t: d.bulk_t(),
                    xi_t: d.xi_t,
                }
            }
            CaseKind::OrthoCircularHole => unreachable!(),
        };
        (
            Matrix {
                lambda: m.lambda,
                mu: m.mu,
                xi: 0.0,
                omega: 0.0,
                tensor: m.tensor(),
            },
            computed,
        )
    };

    let mut warnings = Vec::new();
    if f > DILUTE_WARNING_F {
        warnings.push(format!(
            "f = {f} exceeds {DILUTE_WARNING_F}; the dilute approximation is strained"
        ));
    }

    let (disc_report, disc_tensor, constants, closed_form_nd) = match computed {
        Computed::Iso { lambda_t, mu_t, bulk_t } => (
            DiscrepancyReport {
                lambda_t,
                mu_t,
                bulk_t,
                xi_t: None,
                omega_t: None,
                aux: None,
            },
            crate::moduli::iso_tensor4(lambda_t, mu_t, dim),
            iso_constants(lambda_t, mu_t, f, rho, dim),
            iso_nd_check(bulk_t, mu_t),
        ),
        Computed::Cubic {
            lambda_t,
            mu_t,
            bulk_t,
            xi_t,
        } => (
            DiscrepancyReport {
                lambda_t,
                mu_t,
                bulk_t,
                xi_t: Some(xi_t),
                omega_t: None,
                aux: None,
            },
            crate::moduli::cubic_tensor4(lambda_t, mu_t, xi_t, dim),
            cubic_constants(lambda_t, mu_t, xi_t, f, rho, dim),
            cubic_nd_check(bulk_t, mu_t, xi_t),
        ),
        Computed::Ortho {
            constants,
            aux,
            ill_conditioned,
        } => {
            if ill_conditioned {
                warnings.push("orthotropic closed form is ill-conditioned (near-vanishing denominator)".into());
            }
            (
                DiscrepancyReport {
                    lambda_t: constants.lambda_t,
                    mu_t: constants.mu_t,
                    bulk_t: regime.bulk_from_lame(constants.lambda_t, constants.mu_t),
                    xi_t: Some(constants.xi_t[2]),
                    omega_t: Some(constants.omega_t[0]),
                    aux: Some(aux),
                },
                constants.tensor(dim),
                ortho_constants(&constants, f, rho, dim),
                ortho_nd_check(&constants, regime),
            )
        }
    };

    let a_generic = assemble_generic(&disc_tensor, f, rho);
    let representation_residual = assemble_from_constants(&constants).max_abs_diff(&a_generic)?;
    let spectral_nd = spectral_nd_tensor4(&disc_tensor)?;
    let spectral_pd = spectral_pd_tensor6(&a_generic)?;
    if spectral_nd.definite != closed_form_nd && !spectral_nd.marginal {
        warnings.push("closed-form and spectral definiteness verdicts disagree".into());
    }
    let symmetry_class = classify(&a_generic, dim, symmetry_tol)?;

    let c_eq = effective_local_tensor(&matrix.tensor, &disc_tensor, f)?;
    let lambda_eq = c_eq.get(0, 0, 1, 1);
    let mu_eq = matrix.mu + f * disc_report.mu_t;
    let equivalent_moduli = EquivalentModuli {
        lambda: lambda_eq,
        mu: mu_eq,
        bulk: regime.bulk_from_lame(lambda_eq, mu_eq),
        xi: disc_report.xi_t.map(|x| matrix.xi + f * x),
        omega: disc_report.omega_t.map(|w| matrix.omega + f * w),
    };
    debug_assert!((lambda_eq - (matrix.lambda + f * disc_report.lambda_t)).abs() <= 1e-12 * (1.0 + lambda_eq.abs()));

    Ok(CaseReport {
        case: config.case,
        regime,
        f,
        rho,
        mu1: matrix.mu,
        discrepancy: disc_report,
        constants: ConstantsReport {
            class: constants.class,
            raw: constants.a,
            normalized: constants.normalized(f, rho, matrix.mu),
        },
        equivalent_moduli,
        definiteness: DefinitenessReport {
            closed_form_nd,
            spectral_nd,
            spectral_pd,
        },
        symmetry_class,
        representation_residual,
        warnings,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepVariable {
    MuRatio,
    Nu1,
}

fn default_mu1() -> f64 {
    1.0
}

fn default_f() -> f64 {
    0.05
}

fn default_rho() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub case: CaseKind,
    pub sweep: SweepVariable,
    pub range: [f64; 2],
    pub points: usize,
    #[serde(default)]
    pub nu1: Option<f64>,
    #[serde(default)]
    pub nu2: Option<f64>,
    #[serde(default)]
    pub mu_ratio: Option<f64>,
    #[serde(default)]
    pub void: bool,
    #[serde(default = "default_mu1")]
    pub mu1: f64,
    #[serde(default = "default_f")]
    pub f: f64,
    #[serde(default = "default_rho")]
    pub rho: f64,
    #[serde(default)]
    pub n: Option<PolygonN>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub value: f64,
    pub a2: f64,
    pub a4: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a6: Option<f64>,
    pub pd: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepFailure {
    pub index: usize,
    pub value: f64,
    pub error: Error,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub columns: Vec<&'static str>,
    /// Rows in grid order up to the first failing point.
    pub rows: Vec<SweepRow>,
    pub failure: Option<SweepFailure>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let [lo, hi] = self.range;
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return config_err(format!("range [{lo}, {hi}] must satisfy lo < hi"));
        }
        if self.points < 2 {
            return config_err(format!("points = {} must be at least 2", self.points));
        }
        if self.case == CaseKind::OrthoCircularHole {
            return config_err("sweeps cover the isotropic-matrix cases only");
        }
        let inclusion = self.case.has_inclusion();
        match self.sweep {
            SweepVariable::MuRatio => {
                if !inclusion {
                    return config_err("mu_ratio sweeps need an inclusion case");
                }
                if self.nu1.is_none() || self.nu2.is_none() {
                    return config_err("mu_ratio sweeps need nu1 and nu2");
                }
                if self.void || self.mu_ratio.is_some() {
                    return config_err("mu_ratio sweeps take neither void nor a fixed mu_ratio");
                }
            }
            SweepVariable::Nu1 => {
                if self.nu1.is_some() {
                    return config_err("nu1 is the swept variable");
                }
                if inclusion && !self.void && (self.mu_ratio.is_none() || self.nu2.is_none()) {
                    return config_err("nu1 sweeps of inclusions need void = true or both mu_ratio and nu2");
                }
                if !inclusion && (self.void || self.mu_ratio.is_some() || self.nu2.is_some()) {
                    return config_err("hole cases take no inclusion parameters");
                }
            }
        }
        if (self.case == CaseKind::PolygonalHole) != self.n.is_some() {
            return config_err("n is required for polygonal_hole and only there");
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        let [lo, hi] = self.range;
        let last = self.points - 1;
        (0..self.points)
            .map(|k| {
                if k == last {
                    hi
                } else {
                    lo + (hi - lo) * k as f64 / last as f64
                }
            })
            .collect()
    }

    fn case_at(&self, value: f64) -> CaseConfig {
        let nu1 = match self.sweep {
            SweepVariable::Nu1 => value,
            SweepVariable::MuRatio => self.nu1.unwrap_or_default(),
        };
        let inclusion = if !self.case.has_inclusion() {
            None
        } else if self.void {
            Some(InclusionSpec::Void(VoidSpec { void: true }))
        } else {
            let mu_ratio = match self.sweep {
                SweepVariable::MuRatio => value,
                SweepVariable::Nu1 => self.mu_ratio.unwrap_or_default(),
            };
            Some(InclusionSpec::Ratio(RatioSpec {
                mu_ratio,
                nu: self.nu2.unwrap_or_default(),
            }))
        };
        CaseConfig {
            case: self.case,
            regime: None,
            matrix: MatrixSpec::Poisson(PoissonSpec { nu: nu1, mu: self.mu1 }),
            inclusion,
            f: self.f,
            rve: RveSpec::Rho(RhoSpec { rho: self.rho }),
            n: self.n,
        }
    }

    fn has_threshold(&self) -> bool {
        self.case.has_inclusion() && !self.void
    }
}

/// Evaluates every grid point in order, stopping at the first domain error.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    let mut columns = vec![
        match config.sweep {
            SweepVariable::MuRatio => "mu_ratio",
            SweepVariable::Nu1 => "nu1",
        },
        "a2",
        "a4",
    ];
    let cubic = config.case == CaseKind::SquareHoleAligned;
    if cubic {
        columns.push("a6");
    }
    columns.push("pd");
    if config.has_threshold() {
        columns.push("threshold");
    }

    let mut rows = Vec::with_capacity(config.points);
    for (index, value) in config.grid().into_iter().enumerate() {
        let evaluated = run_case(&config.case_at(value)).and_then(|report| {
            let threshold = if config.has_threshold() {
                let nu1 = config.nu1.unwrap_or(value);
                Some(pd_threshold(nu1, config.nu2.unwrap_or_default(), config.case.regime())?)
            } else {
                None
            };
            let a = report.constants.normalized;
            Ok(SweepRow {
                value,
                a2: a[1],
                a4: a[3],
                a6: cubic.then_some(a[5]),
                pd: report.definiteness.spectral_pd.definite,
                threshold,
            })
        });
        match evaluated {
            Ok(row) => rows.push(row),
            Err(error) if !error.is_config() => {
                return Ok(SweepResult {
                    columns,
                    rows,
                    failure: Some(SweepFailure { index, value, error }),
                })
            }
            Err(error) => return Err(error),
        }
    }
    Ok(SweepResult {
        columns,
        rows,
        failure: None,
    })
}
