//! Sixth-order equivalent tensor `A` of the strain-gradient solid.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moduli::OrthoDiscrepancyConstants;
use crate::tensor::{delta, is_invariant_under, Dim, OrthogonalMap, Rotate, Tensor4, Tensor6};

const INVERSION_RESIDUAL: f64 = 1e-9;
const CONSTANTS_TOL: f64 = 1e-12;

fn check_f_rho(f: f64, rho: f64) -> Result<()> {
    if !(f > 0.0 && f < 1.0) {
        return Err(Error::VolumeFraction(f));
    }
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::NonpositiveRadius(rho));
    }
    Ok(())
}

/// `A_ijhlmn = −fρ²/4 (C̃_ihln δ_jm + C̃_ihmn δ_jl + C̃_jhln δ_im + C̃_jhmn δ_il)`.
///
/// The bracket is assembled first and scaled last, so that
/// `assemble_generic(C̃, f, ρ) == assemble_generic(C̃, 1, 1).scaled(fρ²)`
/// holds bit for bit.
pub fn assemble_generic(disc: &Tensor4, f: f64, rho: f64) -> Tensor6 {
    let c = disc;
    let bracket = Tensor6::from_fn(c.dim(), |[i, j, h, l, m, n]| {
        c.get(i, h, l, n) * delta(j, m)
            + c.get(i, h, m, n) * delta(j, l)
            + c.get(j, h, l, n) * delta(i, m)
            + c.get(j, h, m, n) * delta(i, l)
    });
    bracket.scaled(-0.25).scaled(f * rho * rho)
}

/// Recovers `C̃` from `A`. The nine-term index combination of `A` equals
/// `−fρ² C̃_ihln δ_jm`; contracting `j = m` and dividing by `−d fρ²` yields
/// `C̃`. The result is validated by re-assembly.
pub fn invert_to_discrepancy(a: &Tensor6, f: f64, rho: f64) -> Result<Tensor4> {
    check_f_rho(f, rho)?;
    let dim = a.dim();
    let d = dim.n();
    let k = f * rho * rho;
    let g = |p: [usize; 6]| a.get(p);
    let combination = |i: usize, j: usize, h: usize, l: usize, m: usize, n: usize| {
        g([i, j, h, l, m, n]) + g([j, h, i, m, n, l]) + g([h, i, j, n, l, m])
            - g([i, j, h, n, l, m])
            - g([h, i, j, l, m, n])
            + g([i, j, h, m, n, l])
            + g([j, h, i, l, m, n])
            - g([j, h, i, n, l, m])
            - g([h, i, j, m, n, l])
    };
    let mut data = vec![0.0; d * d * d * d];
    for i in 0..d {
        for h in 0..d {
            for l in 0..d {
                for n in 0..d {
                    let s: f64 = (0..d).map(|j| combination(i, j, h, l, j, n)).sum();
                    data[((i * d + h) * d + l) * d + n] = -s / (d as f64 * k);
                }
            }
        }
    }
    let disc = Tensor4::symmetrized(dim, data)?;
    let residual = assemble_generic(&disc, f, rho).max_abs_diff(a)?;
    if residual > INVERSION_RESIDUAL * a.max_abs() {
        return Err(Error::NotDiluteForm(residual / a.max_abs()));
    }
    Ok(disc)
}

/// Material symmetry class of a fourth- or sixth-order tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryClass {
    Isotropic,
    /// Square symmetry in 2D, cubic in 3D.
    Cubic,
    Orthotropic,
    Other,
}

fn generic_rotations(dim: Dim) -> Vec<OrthogonalMap> {
    match dim {
        Dim::Two => vec![OrthogonalMap::rotation_z(dim, 0.3), OrthogonalMap::rotation_z(dim, 1.1)],
        Dim::Three => vec![
            OrthogonalMap::rotation_about(dim, 0, 0.3),
            OrthogonalMap::rotation_about(dim, 1, 1.1),
            OrthogonalMap::rotation_about(dim, 2, 0.7),
        ],
    }
}

fn quarter_turns(dim: Dim) -> Vec<OrthogonalMap> {
    let axes: &[usize] = match dim {
        Dim::Two => &[2],
        Dim::Three => &[0, 1, 2],
    };
    axes.iter()
        .map(|&ax| OrthogonalMap::rotation_about(dim, ax, std::f64::consts::FRAC_PI_2))
        .collect()
}

fn axis_reflections(dim: Dim) -> Vec<OrthogonalMap> {
    (0..dim.n()).map(|ax| OrthogonalMap::reflection(dim, ax)).collect()
}

/// Highest symmetry class (with respect to the coordinate axes) under which
/// `t` is invariant within `tol`.
pub fn classify<T: Rotate>(t: &T, dim: Dim, tol: f64) -> Result<SymmetryClass> {
    let all = |maps: Vec<OrthogonalMap>| -> Result<bool> {
        for q in &maps {
            if !is_invariant_under(t, q, tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    if !all(axis_reflections(dim))? {
        return Ok(SymmetryClass::Other);
    }
    if !all(quarter_turns(dim))? {
        return Ok(SymmetryClass::Orthotropic);
    }
    if !all(generic_rotations(dim))? {
        return Ok(SymmetryClass::Cubic);
    }
    Ok(SymmetryClass::Isotropic)
}

/// The scalars `a₁ … a₁₂` of the isotropic, cubic and orthotropic
/// representations of `A`. `a[0]` holds `a₁`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HigherOrderConstants {
    pub a: [f64; 12],
    pub class: SymmetryClass,
    pub dim: Dim,
}

impl HigherOrderConstants {
    /// Validates the pattern of vanishing and equal constants of `class`:
    /// `a₁ = a₃ = 0` and `a₄ = a₅` always; cubic allows only `a₆` among
    /// `a₆ … a₁₂`; isotropic allows none.
    pub fn new(a: [f64; 12], class: SymmetryClass, dim: Dim) -> Result<Self> {
        let scale = a.iter().fold(0.0_f64, |s, x| s.max(x.abs()));
        let tol = CONSTANTS_TOL * scale;
        let bad = |msg: &str| Err(Error::InconsistentConstants(format!("{class:?}: {msg}")));
        if class == SymmetryClass::Other {
            return bad("no closed-form representation");
        }
        if a[0].abs() > tol || a[2].abs() > tol {
            return bad("a1 and a3 must vanish");
        }
        if (a[3] - a[4]).abs() > tol {
            return bad("a4 must equal a5");
        }
        let extra = match class {
            SymmetryClass::Isotropic => &a[5..],
            SymmetryClass::Cubic => &a[6..],
            _ => &[][..],
        };
        if extra.iter().any(|x| x.abs() > tol) {
            return bad("constants outside the class are nonzero");
        }
        Ok(Self { a, class, dim })
    }

    /// `a_i / (fρ² μ₁)`.
    pub fn normalized(&self, f: f64, rho: f64, mu1: f64) -> [f64; 12] {
        let s = f * rho * rho * mu1;
        self.a.map(|x| x / s)
    }
}

fn half_scale(f: f64, rho: f64) -> f64 {
    -0.5 * f * rho * rho
}

/// `a₂ = −fρ²λ̃/2`, `a₄ = a₅ = −fρ²μ̃/2`.
pub fn iso_constants(lambda_t: f64, mu_t: f64, f: f64, rho: f64, dim: Dim) -> HigherOrderConstants {
    let k = half_scale(f, rho);
    let mut a = [0.0; 12];
    a[1] = k * lambda_t;
    a[3] = k * mu_t;
    a[4] = k * mu_t;
    HigherOrderConstants {
        a,
        class: SymmetryClass::Isotropic,
        dim,
    }
}

/// `a₆ = −fρ²ξ̃/2`.
pub fn cubic_constant(xi_t: f64, f: f64, rho: f64) -> f64 {
    half_scale(f, rho) * xi_t
}

pub fn cubic_constants(lambda_t: f64, mu_t: f64, xi_t: f64, f: f64, rho: f64, dim: Dim) -> HigherOrderConstants {
    let mut c = iso_constants(lambda_t, mu_t, f, rho, dim);
    c.a[5] = cubic_constant(xi_t, f, rho);
    c.class = SymmetryClass::Cubic;
    c
}

/// `a₆, a₇, a₈ ← ξ̃^III, ξ̃^II, ξ̃^I` and `a₉ … a₁₂ ← ω̃^I … ω̃^IV`, each times `−fρ²/2`.
pub fn ortho_constants(disc: &OrthoDiscrepancyConstants, f: f64, rho: f64, dim: Dim) -> HigherOrderConstants {
    let k = half_scale(f, rho);
    let mut c = iso_constants(disc.lambda_t, disc.mu_t, f, rho, dim);
    c.a[5] = k * disc.xi_t[2];
    c.a[6] = k * disc.xi_t[1];
    c.a[7] = k * disc.xi_t[0];
    for (slot, w) in c.a[8..].iter_mut().zip(disc.omega_t) {
        *slot = k * w;
    }
    c.class = SymmetryClass::Orthotropic;
    c
}

fn unit(a: usize, k: usize) -> f64 {
    delta(a, k)
}

/// Componentwise evaluation of the explicit isotropic, cubic and
/// orthotropic representations.
pub fn assemble_from_constants(c: &HigherOrderConstants) -> Tensor6 {
    let a = &c.a;
    Tensor6::from_fn(c.dim, |[i, j, h, l, m, n]| {
        let e = delta;
        let mut v = 0.5
            * a[0]
            * (e(i, j) * (e(h, l) * e(m, n) + e(h, m) * e(l, n)) + e(l, m) * (e(i, n) * e(j, h) + e(i, h) * e(j, n)));
        v += 0.5
            * a[1]
            * (e(i, h) * (e(j, l) * e(m, n) + e(j, m) * e(l, n)) + e(j, h) * (e(i, l) * e(m, n) + e(i, m) * e(l, n)));
        v += 2.0 * a[2] * e(i, j) * e(h, n) * e(l, m);
        v += a[3] * (e(i, l) * e(j, m) + e(i, m) * e(j, l)) * e(h, n);
        v += 0.5
            * a[4]
            * (e(i, n) * (e(j, l) * e(h, m) + e(j, m) * e(h, l)) + e(j, n) * (e(i, l) * e(h, m) + e(i, m) * e(h, l)));
        if c.class == SymmetryClass::Isotropic {
            return v;
        }

        let pair = |x: usize, y: usize, p: usize, q: usize| unit(x, p) * unit(y, q) + unit(x, q) * unit(y, p);
        let shear_block = |p: usize, q: usize| {
            pair(i, h, p, q) * (pair(l, n, p, q) * e(j, m) + pair(m, n, p, q) * e(j, l))
                + pair(j, h, p, q) * (pair(l, n, p, q) * e(i, m) + pair(m, n, p, q) * e(i, l))
        };
        v += 0.5 * a[5] * shear_block(0, 1);
        if c.class == SymmetryClass::Cubic {
            v += 0.5 * a[5] * (shear_block(0, 2) + shear_block(1, 2));
            return v;
        }
        v += 0.5 * a[6] * shear_block(0, 2);
        v += 0.5 * a[7] * shear_block(1, 2);

        let normal_block = |p: usize| {
            (unit(i, p) * (unit(l, p) * e(j, m) + unit(m, p) * e(j, l))
                + unit(j, p) * (unit(l, p) * e(i, m) + unit(m, p) * e(i, l)))
                * unit(h, p)
                * unit(n, p)
        };
        v += 0.5 * a[8] * normal_block(0);
        v += 0.5 * a[9] * normal_block(2);
        v += 0.5
            * a[10]
            * (unit(h, 2)
                * (e(l, n) * (e(j, m) * unit(i, 2) + e(i, m) * unit(j, 2))
                    + e(m, n) * (e(j, l) * unit(i, 2) + e(i, l) * unit(j, 2)))
                + unit(n, 2)
                    * (e(i, h) * (e(j, m) * unit(l, 2) + e(j, l) * unit(m, 2))
                        + e(j, h) * (e(i, m) * unit(l, 2) + e(i, l) * unit(m, 2))));
        v += 0.5
            * a[11]
            * (unit(h, 0)
                * unit(n, 2)
                * (unit(i, 0) * (e(j, m) * unit(l, 2) + e(j, l) * unit(m, 2))
                    + unit(j, 0) * (e(i, m) * unit(l, 2) + e(i, l) * unit(m, 2)))
                + unit(h, 2)
                    * unit(n, 0)
                    * (unit(i, 2) * (e(j, m) * unit(l, 0) + e(j, l) * unit(m, 0))
                        + unit(j, 2) * (e(i, m) * unit(l, 0) + e(i, l) * unit(m, 0))));
        v
    })
}
