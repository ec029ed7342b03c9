//! Regions of the sphere used as `B₁`, `B₂` in the combination theorems.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::moebius::{serde_c64, ComplexPoint, GeneralizedCircle, MoebiusError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Inside a circle; for a line, the side to the left of its direction.
    Inside,
    Outside,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    Disk {
        circle: GeneralizedCircle,
        side: Side,
    },
    HalfPlane {
        line: GeneralizedCircle,
        side: Side,
    },
    /// `|arg z - theta0| < phi`, optionally cut to `rmin < |z| < rmax`.
    Sector {
        theta0: f64,
        phi: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rmin: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rmax: Option<f64>,
    },
    /// `|arg((z - p)/(z - q)) - theta0| < phi`: the region between two
    /// circular arcs through `p` and `q`.
    Lens {
        #[serde(with = "serde_c64")]
        p: Complex64,
        #[serde(with = "serde_c64")]
        q: Complex64,
        theta0: f64,
        phi: f64,
    },
}

/// Signed angle difference folded into `(-π, π]`.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    let mut d = (a - b) % (2.0 * PI);
    if d > PI {
        d -= 2.0 * PI;
    } else if d <= -PI {
        d += 2.0 * PI;
    }
    d
}

impl Region {
    pub fn sector(theta0: f64, phi: f64) -> Result<Self, MoebiusError> {
        let r = Region::Sector { theta0, phi, rmin: None, rmax: None };
        r.validate()?;
        Ok(r)
    }

    pub fn validate(&self) -> Result<(), MoebiusError> {
        let bad = |m: &str| Err(MoebiusError::BadParameter(m.into()));
        match *self {
            Region::Disk { circle, .. } => match circle {
                GeneralizedCircle::Circle { .. } => circle.validate(),
                GeneralizedCircle::Line { .. } => bad("disk region needs a circle"),
            },
            Region::HalfPlane { line, .. } => match line {
                GeneralizedCircle::Line { .. } => line.validate(),
                GeneralizedCircle::Circle { .. } => bad("half-plane region needs a line"),
            },
            Region::Sector { phi, rmin, rmax, .. } => {
                if !(phi > 0.0 && phi < PI) {
                    return bad("sector half-angle must lie in (0, π)");
                }
                if rmin.is_some_and(|r| !(r >= 0.0)) {
                    return bad("rmin must be >= 0");
                }
                if let (Some(a), Some(b)) = (rmin, rmax) {
                    if !(a < b) {
                        return bad("rmin must be below rmax");
                    }
                }
                Ok(())
            }
            Region::Lens { p, q, phi, .. } => {
                if !(phi > 0.0 && phi < PI) {
                    return bad("lens half-angle must lie in (0, π)");
                }
                if (p - q).norm() == 0.0 {
                    return bad("lens endpoints must differ");
                }
                Ok(())
            }
        }
    }

    /// Positive in the open region, negative outside, zero on the boundary.
    /// Units are relative (radii, radians, or log-radii) so one tolerance
    /// serves every variant.
    pub fn margin(&self, z: ComplexPoint) -> f64 {
        match *self {
            Region::Disk { circle: GeneralizedCircle::Circle { center, radius }, side } => {
                let m = match z {
                    ComplexPoint::Infinity => f64::NEG_INFINITY,
                    ComplexPoint::Finite(z) => (radius - (z - center).norm()) / radius,
                };
                if side == Side::Inside {
                    m
                } else {
                    -m
                }
            }
            Region::Disk { .. } => f64::NAN,
            Region::HalfPlane { line, side } => {
                let m = match z {
                    ComplexPoint::Infinity => 0.0,
                    ComplexPoint::Finite(z) => match line {
                        // Sine of the angle seen from the base point, far out.
                        GeneralizedCircle::Line { point, .. } => -line.signed_offset(z) / (z - point).norm().max(1.0),
                        _ => -line.signed_offset(z),
                    },
                };
                if side == Side::Inside {
                    m
                } else {
                    -m
                }
            }
            Region::Sector { theta0, phi, rmin, rmax } => match z {
                ComplexPoint::Infinity => {
                    if rmax.is_some() {
                        f64::NEG_INFINITY
                    } else {
                        0.0
                    }
                }
                ComplexPoint::Finite(z) if z.norm() == 0.0 => {
                    if rmin.is_some_and(|r| r > 0.0) {
                        f64::NEG_INFINITY
                    } else {
                        0.0
                    }
                }
                ComplexPoint::Finite(z) => {
                    let mut m = phi - angle_diff(z.arg(), theta0).abs();
                    if let Some(r) = rmin.filter(|r| *r > 0.0) {
                        m = m.min((z.norm() / r).ln());
                    }
                    if let Some(r) = rmax {
                        m = m.min((r / z.norm()).ln());
                    }
                    m
                }
            },
            Region::Lens { p, q, theta0, phi } => match z {
                ComplexPoint::Infinity => phi - angle_diff(0.0, theta0).abs(),
                ComplexPoint::Finite(z) => {
                    // Arguments are meaningless this close to the corners.
                    let apex = 1e-4 * (p - q).norm();
                    if (z - p).norm() <= apex || (z - q).norm() <= apex {
                        return 0.0;
                    }
                    phi - angle_diff(((z - p) / (z - q)).arg(), theta0).abs()
                }
            },
        }
    }

    pub fn contains_open(&self, z: ComplexPoint, tol: f64) -> bool {
        self.margin(z) > tol
    }

    pub fn contains_closed(&self, z: ComplexPoint, tol: f64) -> bool {
        self.margin(z) >= -tol
    }

    /// `n` points on the boundary (apexes and other degenerate points are left out).
    pub fn boundary_samples(&self, n: usize) -> Vec<ComplexPoint> {
        let n = n.max(2);
        match *self {
            Region::Disk { circle, .. } => circle.sample(n, 1.0).into_iter().map(Into::into).collect(),
            Region::HalfPlane { line, .. } => {
                let GeneralizedCircle::Line { point, direction } = line else { return Vec::new() };
                // Geometric spacing in both directions from the base point.
                let half = n / 2;
                (0..n)
                    .map(|k| {
                        let i = k as i64 - half as i64;
                        let s = if i == 0 { 0.0 } else { i.signum() as f64 * 10f64.powf(-2.0 + 4.0 * (i.unsigned_abs() as f64) / half as f64) };
                        (point + direction * s).into()
                    })
                    .collect()
            }
            Region::Sector { theta0, phi, rmin, rmax } => {
                let (lo, hi) = radial_range(rmin, rmax);
                let per_ray = n / 2;
                let mut out = Vec::with_capacity(n);
                for edge in [theta0 - phi, theta0 + phi] {
                    for k in 0..per_ray {
                        let r = geometric(lo, hi, k, per_ray);
                        out.push(Complex64::from_polar(r, edge).into());
                    }
                }
                out
            }
            Region::Lens { theta0, phi, .. } => {
                let per_arc = n / 2;
                let mut out = Vec::with_capacity(n);
                for edge in [theta0 - phi, theta0 + phi] {
                    for k in 0..per_arc {
                        let r = geometric(1e-2, 1e2, k, per_arc);
                        out.push(self.lens_point(Complex64::from_polar(r, edge)));
                    }
                }
                out
            }
        }
    }

    /// Deterministic points strictly inside the region.
    pub fn interior_samples(&self, n: usize) -> Vec<ComplexPoint> {
        let n = n.max(4);
        let fracs = [-0.9, -0.5, 0.0, 0.5, 0.9];
        match *self {
            Region::Disk { circle: GeneralizedCircle::Circle { center, radius }, side } => {
                let scales: &[f64] = if side == Side::Inside { &[0.0, 0.3, 0.6, 0.9] } else { &[1.1, 1.5, 3.0, 10.0] };
                let per = n / scales.len();
                let mut out = Vec::new();
                for &s in scales {
                    for k in 0..per.max(1) {
                        out.push((center + Complex64::from_polar(radius * s, 2.0 * PI * (k as f64 + 0.5) / per as f64)).into());
                    }
                }
                if side == Side::Outside {
                    out.push(ComplexPoint::Infinity);
                }
                out
            }
            Region::Disk { .. } => Vec::new(),
            Region::HalfPlane { line, side } => {
                let GeneralizedCircle::Line { point, direction } = line else { return Vec::new() };
                let normal = if side == Side::Inside { direction * Complex64::i() } else { -direction * Complex64::i() };
                let per = n / 4;
                let mut out = Vec::new();
                for depth in [0.05, 0.5, 2.0, 10.0] {
                    for k in 0..per.max(1) {
                        let s = -10.0 + 20.0 * (k as f64 + 0.5) / per as f64;
                        out.push((point + direction * s + normal * depth).into());
                    }
                }
                out
            }
            Region::Sector { theta0, phi, rmin, rmax } => {
                let (lo, hi) = radial_range(rmin, rmax);
                let per = n / fracs.len();
                let mut out = Vec::new();
                for f in fracs {
                    for k in 0..per.max(1) {
                        let r = lo * (hi / lo).powf((k as f64 + 0.5) / per.max(1) as f64);
                        out.push(Complex64::from_polar(r, theta0 + f * phi).into());
                    }
                }
                out
            }
            Region::Lens { theta0, phi, .. } => {
                let per = n / fracs.len();
                let mut out = Vec::new();
                for f in fracs {
                    for k in 0..per.max(1) {
                        let r = 1e-2 * 1e4f64.powf((k as f64 + 0.5) / per.max(1) as f64);
                        out.push(self.lens_point(Complex64::from_polar(r, theta0 + f * phi)));
                    }
                }
                out
            }
        }
    }

    /// Inverse of `z -> (z - p)/(z - q)`.
    fn lens_point(&self, u: Complex64) -> ComplexPoint {
        let Region::Lens { p, q, .. } = *self else { unreachable!("lens only") };
        let den = u - 1.0;
        if den.norm() == 0.0 {
            ComplexPoint::Infinity
        } else {
            ((q * u - p) / den).into()
        }
    }
}

fn radial_range(rmin: Option<f64>, rmax: Option<f64>) -> (f64, f64) {
    match (rmin.filter(|r| *r > 0.0), rmax) {
        (Some(a), Some(b)) => (a, b),
        (Some(a), None) => (a, a * 1e4),
        (None, Some(b)) => (b * 1e-4, b),
        (None, None) => (1e-2, 1e2),
    }
}

fn geometric(lo: f64, hi: f64, k: usize, n: usize) -> f64 {
    if n <= 1 {
        return (lo * hi).sqrt();
    }
    lo * (hi / lo).powf(k as f64 / (n - 1) as f64)
}
