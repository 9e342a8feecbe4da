//! Radius of inertia of representative volume elements.
//!
//! `ρ² = 2 J/A` in two dimensions and `ρ² = (5/3) I₀/V` in three, with `J`
//! and `I₀` the centroidal polar second moments. Both constants make a disk or
//! ball of radius `R` have `ρ = R`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::Dim;

pub const RHO_SQ_PER_MOMENT_2D: f64 = 2.0;
pub const RHO_SQ_PER_MOMENT_3D: f64 = 5.0 / 3.0;

pub const MIN_MC_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum RveShape {
    Circle {
        radius: f64,
    },
    RegularPolygon {
        n: u32,
        side: f64,
    },
    /// Counterclockwise vertices of a convex polygon.
    ConvexPolygon {
        vertices: Vec<[f64; 2]>,
    },
    Sphere {
        radius: f64,
    },
    Cube {
        edge: f64,
    },
    TruncatedOctahedron {
        edge: f64,
    },
}

fn positive(x: f64, what: &str) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(Error::DegenerateGeometry(format!("{what} must be positive, got {x}")))
    }
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn regular_polygon_vertices(n: u32, side: f64) -> Vec<[f64; 2]> {
    let circumradius = side / (2.0 * (std::f64::consts::PI / n as f64).sin());
    (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64;
            [circumradius * t.cos(), circumradius * t.sin()]
        })
        .collect()
}

/// Area, centroid and centroidal polar moment of a simple polygon.
fn polygon_moments(v: &[[f64; 2]]) -> (f64, [f64; 2], f64) {
    let (mut a2, mut cx, mut cy, mut ixx, mut iyy) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for k in 0..v.len() {
        let p = v[k];
        let q = v[(k + 1) % v.len()];
        let w = p[0] * q[1] - q[0] * p[1];
        a2 += w;
        cx += (p[0] + q[0]) * w;
        cy += (p[1] + q[1]) * w;
        ixx += (p[1] * p[1] + p[1] * q[1] + q[1] * q[1]) * w;
        iyy += (p[0] * p[0] + p[0] * q[0] + q[0] * q[0]) * w;
    }
    let area = 0.5 * a2;
    let c = [cx / (6.0 * area), cy / (6.0 * area)];
    let polar_origin = (ixx + iyy) / 12.0;
    (area, c, polar_origin - area * (c[0] * c[0] + c[1] * c[1]))
}

fn validate_convex(v: &[[f64; 2]]) -> Result<()> {
    if v.len() < 3 {
        return Err(Error::DegenerateGeometry(
            "a polygon needs at least three vertices".into(),
        ));
    }
    if v.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::DegenerateGeometry("non-finite vertex".into()));
    }
    let n = v.len();
    for k in 0..n {
        if cross(v[k], v[(k + 1) % n], v[(k + 2) % n]) <= 0.0 {
            return Err(Error::DegenerateGeometry(format!(
                "vertices are not strictly convex in counterclockwise order at index {}",
                (k + 1) % n
            )));
        }
    }
    // Convex turns everywhere but winding more than once means self-intersection.
    let mut turning = 0.0;
    for k in 0..n {
        let (a, b, c) = (v[k], v[(k + 1) % n], v[(k + 2) % n]);
        let e1 = [b[0] - a[0], b[1] - a[1]];
        let e2 = [c[0] - b[0], c[1] - b[1]];
        turning += (e1[0] * e2[1] - e1[1] * e2[0]).atan2(e1[0] * e2[0] + e1[1] * e2[1]);
    }
    if (turning - std::f64::consts::TAU).abs() > 1e-9 {
        return Err(Error::DegenerateGeometry("polygon is self-intersecting".into()));
    }
    Ok(())
}

fn truncated_octahedron_vertices(edge: f64) -> Vec<[f64; 3]> {
    let s = edge / std::f64::consts::SQRT_2;
    let mut out = Vec::with_capacity(24);
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for p in perms {
        for s1 in [-1.0, 1.0] {
            for s2 in [-1.0, 1.0] {
                let base = [0.0, s1, 2.0 * s2];
                let mut v = [0.0; 3];
                for (axis, &src) in p.iter().enumerate() {
                    v[axis] = base[src] * s;
                }
                out.push(v);
            }
        }
    }
    out
}

fn sub3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Faces of the convex hull of `v`, each as a counterclockwise (seen from
/// outside) list of vertex indices.
fn hull_faces(v: &[[f64; 3]]) -> Vec<Vec<usize>> {
    let scale = v.iter().flatten().fold(0.0_f64, |s, x| s.max(x.abs()));
    let tol = 1e-9 * scale * scale * scale.max(1.0);
    let mut planes: Vec<([f64; 3], f64)> = Vec::new();
    let mut faces = Vec::new();
    let n = v.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut normal = cross3(sub3(v[b], v[a]), sub3(v[c], v[a]));
                let len = dot3(normal, normal).sqrt();
                if len <= tol {
                    continue;
                }
                normal = normal.map(|x| x / len);
                let mut offset = dot3(normal, v[a]);
                let side: Vec<f64> = v.iter().map(|p| dot3(normal, *p) - offset).collect();
                let eps = 1e-9 * scale.max(1.0);
                let below = side.iter().all(|&s| s <= eps);
                let above = side.iter().all(|&s| s >= -eps);
                if !below && !above {
                    continue;
                }
                if !below {
                    normal = normal.map(|x| -x);
                    offset = -offset;
                }
                if planes
                    .iter()
                    .any(|(m, o)| dot3(*m, normal) > 1.0 - 1e-12 && (o - offset).abs() <= eps)
                {
                    continue;
                }
                planes.push((normal, offset));
                let on: Vec<usize> = (0..n).filter(|&k| (dot3(normal, v[k]) - offset).abs() <= eps).collect();
                let centre = on
                    .iter()
                    .fold([0.0; 3], |s, &k| [s[0] + v[k][0], s[1] + v[k][1], s[2] + v[k][2]])
                    .map(|x| x / on.len() as f64);
                let u = sub3(v[on[0]], centre);
                let w = cross3(normal, u);
                let mut ordered = on.clone();
                ordered.sort_by(|&p, &q| {
                    let ang = |k: usize| {
                        let r = sub3(v[k], centre);
                        dot3(r, w).atan2(dot3(r, u))
                    };
                    ang(p).total_cmp(&ang(q))
                });
                faces.push(ordered);
            }
        }
    }
    faces
}

/// Volume, centroid and centroidal `I₀ = ∫|x − c|² dV` of a convex
/// polyhedron given by its vertices, by decomposition into tetrahedra that
/// share the vertex mean.
fn polyhedron_moments(v: &[[f64; 3]]) -> (f64, [f64; 3], f64) {
    let apex = v
        .iter()
        .fold([0.0; 3], |s, p| [s[0] + p[0], s[1] + p[1], s[2] + p[2]])
        .map(|x| x / v.len() as f64);
    let (mut vol, mut first, mut second) = (0.0, [0.0; 3], 0.0);
    for face in hull_faces(v) {
        for k in 1..face.len() - 1 {
            let tet = [apex, v[face[0]], v[face[k]], v[face[k + 1]]];
            let vt = dot3(sub3(tet[1], tet[0]), cross3(sub3(tet[2], tet[0]), sub3(tet[3], tet[0]))) / 6.0;
            let s = tet
                .iter()
                .fold([0.0; 3], |s, p| [s[0] + p[0], s[1] + p[1], s[2] + p[2]]);
            // ∫ x_a x_a dV = V/20 (Σ p_a² + s_a²) over the four vertices p.
            let sq: f64 = tet.iter().map(|p| dot3(*p, *p)).sum::<f64>() + dot3(s, s);
            vol += vt;
            for axis in 0..3 {
                first[axis] += vt * s[axis] / 4.0;
            }
            second += vt * sq / 20.0;
        }
    }
    let c = first.map(|x| x / vol);
    (vol, c, second - vol * dot3(c, c))
}

impl RveShape {
    pub fn dim(&self) -> Dim {
        match self {
            Self::Circle { .. } | Self::RegularPolygon { .. } | Self::ConvexPolygon { .. } => Dim::Two,
            _ => Dim::Three,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Circle { radius } | Self::Sphere { radius } => positive(*radius, "radius").map(drop),
            Self::Cube { edge } | Self::TruncatedOctahedron { edge } => positive(*edge, "edge").map(drop),
            Self::RegularPolygon { n, side } => {
                if *n < 3 {
                    return Err(Error::DegenerateGeometry(format!("a polygon needs n >= 3, got {n}")));
                }
                positive(*side, "side").map(drop)
            }
            Self::ConvexPolygon { vertices } => validate_convex(vertices),
        }
    }

    /// Area (2D) or volume (3D).
    pub fn measure(&self) -> Result<f64> {
        Ok(self.moments()?.0)
    }

    /// Centroidal `J/A` (2D) or `I₀/V` (3D).
    pub fn mean_square_radius(&self) -> Result<f64> {
        let (m, j) = self.moments()?;
        Ok(j / m)
    }

    fn moments(&self) -> Result<(f64, f64)> {
        self.validate()?;
        use std::f64::consts::PI;
        Ok(match self {
            Self::Circle { radius: r } => (PI * r * r, 0.5 * PI * r.powi(4)),
            Self::Sphere { radius: r } => {
                let v = 4.0 / 3.0 * PI * r.powi(3);
                (v, 0.6 * r * r * v)
            }
            Self::Cube { edge } => {
                let v = edge.powi(3);
                (v, 0.25 * edge * edge * v)
            }
            Self::RegularPolygon { n, side } => {
                let t = PI / *n as f64;
                let area = *n as f64 * side * side / (4.0 * t.tan());
                let cot = 1.0 / t.tan();
                (area, area * side * side * (1.0 + 3.0 * cot * cot) / 24.0)
            }
            Self::ConvexPolygon { vertices } => {
                let (a, _, j) = polygon_moments(vertices);
                (a, j)
            }
            Self::TruncatedOctahedron { edge } => {
                let (v, _, i0) = polyhedron_moments(&truncated_octahedron_vertices(*edge));
                (v, i0)
            }
        })
    }

    pub fn radius_of_inertia(&self) -> Result<f64> {
        let factor = match self.dim() {
            Dim::Two => RHO_SQ_PER_MOMENT_2D,
            Dim::Three => RHO_SQ_PER_MOMENT_3D,
        };
        Ok((factor * self.mean_square_radius()?).sqrt())
    }

    /// Scale-free `(J/A)/A` (2D) or `(I₀/V)/V^{2/3}` (3D).
    pub fn shape_factor(&self) -> Result<f64> {
        let (m, j) = self.moments()?;
        let exponent = match self.dim() {
            Dim::Two => 1.0,
            Dim::Three => 2.0 / 3.0,
        };
        Ok(j / m / m.powf(exponent))
    }

    fn bounding_box(&self) -> Vec<(f64, f64)> {
        match self {
            Self::Circle { radius: r } => vec![(-r, *r); 2],
            Self::Sphere { radius: r } => vec![(-r, *r); 3],
            Self::Cube { edge } => vec![(0.0, *edge); 3],
            Self::TruncatedOctahedron { edge } => {
                let h = std::f64::consts::SQRT_2 * edge;
                vec![(-h, h); 3]
            }
            Self::RegularPolygon { n, side } => polygon_box(&regular_polygon_vertices(*n, *side)),
            Self::ConvexPolygon { vertices } => polygon_box(vertices),
        }
    }

    /// Membership test written independently of the moment formulas.
    fn contains(&self, x: &[f64]) -> bool {
        match self {
            Self::Circle { radius: r } | Self::Sphere { radius: r } => x.iter().map(|c| c * c).sum::<f64>() <= r * r,
            Self::Cube { edge } => x.iter().all(|&c| (0.0..=*edge).contains(&c)),
            Self::TruncatedOctahedron { edge } => {
                let s = edge / std::f64::consts::SQRT_2;
                x.iter().all(|c| c.abs() <= 2.0 * s) && x.iter().map(|c| c.abs()).sum::<f64>() <= 3.0 * s
            }
            Self::RegularPolygon { n, side } => inside_convex(&regular_polygon_vertices(*n, *side), x),
            Self::ConvexPolygon { vertices } => inside_convex(vertices, x),
        }
    }
}

fn polygon_box(v: &[[f64; 2]]) -> Vec<(f64, f64)> {
    (0..2)
        .map(|a| {
            v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
                (lo.min(p[a]), hi.max(p[a]))
            })
        })
        .collect()
}

fn inside_convex(v: &[[f64; 2]], x: &[f64]) -> bool {
    let p = [x[0], x[1]];
    (0..v.len()).all(|k| cross(v[k], v[(k + 1) % v.len()], p) >= 0.0)
}

/// Monte Carlo estimate of `J/A` or `I₀/V`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
}

/// Rejection sampling from the bounding box until `samples` points fall
/// inside the shape. The centroid is estimated from the same points.
pub fn mc_second_moment(shape: &RveShape, samples: usize, seed: u64) -> Result<McEstimate> {
    shape.validate()?;
    if samples < MIN_MC_SAMPLES {
        return Err(Error::InvalidParameter(format!(
            "at least {MIN_MC_SAMPLES} Monte Carlo samples are required, got {samples}"
        )));
    }
    let bounds = shape.bounding_box();
    let d = bounds.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(samples * d);
    let mut x = vec![0.0; d];
    while points.len() < samples * d {
        for (xa, (lo, hi)) in x.iter_mut().zip(&bounds) {
            *xa = rng.random_range(*lo..=*hi);
        }
        if shape.contains(&x) {
            points.extend_from_slice(&x);
        }
    }
    let n = samples as f64;
    let mut centre = vec![0.0; d];
    for p in points.chunks(d) {
        for (c, v) in centre.iter_mut().zip(p) {
            *c += v / n;
        }
    }
    let r2: Vec<f64> = points
        .chunks(d)
        .map(|p| p.iter().zip(&centre).map(|(v, c)| (v - c) * (v - c)).sum())
        .collect();
    let mean = r2.iter().sum::<f64>() / n;
    let var = r2.iter().map(|r| (r - mean) * (r - mean)).sum::<f64>() / (n - 1.0);
    Ok(McEstimate {
        mean,
        std_error: (var / n).sqrt(),
        samples,
    })
}

/// `ρ²(M) / ρ²(N)` after rescaling `N` to the area or volume of `M`.
pub fn rve_ratio(m: &RveShape, n: &RveShape) -> Result<f64> {
    if m.dim() != n.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim().n(),
            found: n.dim().n(),
        });
    }
    Ok(m.shape_factor()? / n.shape_factor()?)
}
