//! Möbius transformations of the extended complex plane, generalized
//! circles, and the conformal embedding of `H³ × S¹` into `R⁴`.
//!
//! Transforms are stored as 2×2 complex matrices normalized to determinant
//! one, with a canonical sign, so that `PSL(2, C)` equality can be tested
//! entrywise.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Relative tolerance on `ad - bc = 1` after normalization.
pub const TAU_DET: f64 = 1e-9;
/// Relative tolerance for fixed-point residuals and matrix equality.
pub const TAU_FIX: f64 = 1e-9;
/// Absolute threshold on `|cz + d|` below which `apply` returns infinity.
pub const TAU_POLE: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MoebiusError {
    #[error("singular matrix: ad - bc = 0")]
    Singular,
    #[error("transform is the identity")]
    IdentityTransform,
    #[error("transform is not loxodromic")]
    NotLoxodromic,
    #[error("circles intersect or coincide")]
    IntersectingCircles,
    #[error("circle radius must be positive and finite")]
    DegenerateRadius,
    #[error("circle pairing needs two proper circles, got a line")]
    UnsupportedLine,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("t must be positive, got {0}")]
    NonpositiveT(f64),
}

/// A point of the Riemann sphere. Infinity is its own variant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComplexPoint {
    Finite(Complex64),
    Infinity,
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexPoint::Finite(Complex64::new(re, im))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ComplexPoint::Infinity)
    }

    pub fn finite(&self) -> Option<Complex64> {
        match *self {
            ComplexPoint::Finite(z) => Some(z),
            ComplexPoint::Infinity => None,
        }
    }

    /// Coordinates on the unit sphere under inverse stereographic projection.
    pub fn to_sphere(&self) -> [f64; 3] {
        match *self {
            ComplexPoint::Infinity => [0.0, 0.0, 1.0],
            ComplexPoint::Finite(z) => {
                let n = z.norm_sqr();
                if !n.is_finite() {
                    return [0.0, 0.0, 1.0];
                }
                let s = 1.0 + n;
                [2.0 * z.re / s, 2.0 * z.im / s, (n - 1.0) / s]
            }
        }
    }

    /// Chordal distance on the unit sphere; bounded by 2 and finite at infinity.
    pub fn chordal_distance(&self, other: &ComplexPoint) -> f64 {
        match (self, other) {
            (ComplexPoint::Infinity, ComplexPoint::Infinity) => 0.0,
            (ComplexPoint::Finite(z), ComplexPoint::Infinity)
            | (ComplexPoint::Infinity, ComplexPoint::Finite(z)) => 2.0 / (1.0 + z.norm_sqr()).sqrt(),
            (ComplexPoint::Finite(z), ComplexPoint::Finite(w)) => {
                2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()).sqrt() * (1.0 + w.norm_sqr()).sqrt())
            }
        }
    }

    /// Total order used for canonical output: lexicographic on `(re, im)`,
    /// infinity last.
    pub fn canonical_cmp(&self, other: &ComplexPoint) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self, other) {
            (ComplexPoint::Infinity, ComplexPoint::Infinity) => Ordering::Equal,
            (ComplexPoint::Infinity, _) => Ordering::Greater,
            (_, ComplexPoint::Infinity) => Ordering::Less,
            (ComplexPoint::Finite(z), ComplexPoint::Finite(w)) => z
                .re
                .total_cmp(&w.re)
                .then_with(|| z.im.total_cmp(&w.im)),
        }
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        ComplexPoint::Finite(z)
    }
}

impl fmt::Display for ComplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexPoint::Infinity => write!(f, "inf"),
            ComplexPoint::Finite(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

/// `[re, im]` serialization for complex scalars.
pub(crate) mod serde_c64 {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

impl Serialize for ComplexPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ComplexPoint::Finite(z) => [z.re, z.im].serialize(s),
            ComplexPoint::Infinity => "inf".serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for ComplexPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Pair([f64; 2]),
            Tag(String),
        }
        match Raw::deserialize(d)? {
            Raw::Pair([re, im]) => Ok(ComplexPoint::new(re, im)),
            Raw::Tag(t) if t == "inf" => Ok(ComplexPoint::Infinity),
            Raw::Tag(t) => Err(serde::de::Error::custom(format!("expected [re, im] or \"inf\", got {t:?}"))),
        }
    }
}

/// Fixed-point structure of a non-identity transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformClass {
    Parabolic,
    Elliptic,
    /// `hyperbolic` when conjugate to a real dilation `z -> k z`, `k > 1`.
    Loxodromic { hyperbolic: bool },
}

/// Element of `PSL(2, C)` acting by `z -> (az + b) / (cz + d)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusTransform {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl MoebiusTransform {
    pub const IDENTITY: MoebiusTransform = MoebiusTransform {
        a: Complex64::new(1.0, 0.0),
        b: Complex64::new(0.0, 0.0),
        c: Complex64::new(0.0, 0.0),
        d: Complex64::new(1.0, 0.0),
    };

    /// Builds and normalizes a transform from raw matrix entries.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self, MoebiusError> {
        let det = a * d - b * c;
        let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm());
        if !det.is_finite() || scale == 0.0 || det.norm() <= 1e-14 * scale * scale {
            return Err(MoebiusError::Singular);
        }
        Ok(MoebiusTransform { a, b, c, d }.normalize())
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Result<Self, MoebiusError> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Rescales to `det = 1` and fixes the sign so the first entry that is
    /// not negligible has positive real part (positive imaginary part when
    /// the real part vanishes).
    pub fn normalize(&self) -> Self {
        let det = self.det();
        let mut m = *self;
        if (det - 1.0).norm() > 4.0 * f64::EPSILON {
            let s = det.sqrt();
            m = MoebiusTransform { a: m.a / s, b: m.b / s, c: m.c / s, d: m.d / s };
        }
        let scale = m.a.norm().max(m.b.norm()).max(m.c.norm()).max(m.d.norm());
        let lead = [m.a, m.b, m.c, m.d]
            .into_iter()
            .find(|z| z.norm() > 1e-12 * scale)
            .unwrap_or(m.a);
        let flip = if lead.re.abs() > 1e-12 * scale { lead.re < 0.0 } else { lead.im < 0.0 };
        if flip {
            m = MoebiusTransform { a: -m.a, b: -m.b, c: -m.c, d: -m.d };
        }
        m
    }

    /// `(self ∘ other)(z) = self(other(z))`.
    pub fn compose(&self, other: &MoebiusTransform) -> MoebiusTransform {
        let (p, q) = (self, other);
        MoebiusTransform {
            a: p.a * q.a + p.b * q.c,
            b: p.a * q.b + p.b * q.d,
            c: p.c * q.a + p.d * q.c,
            d: p.c * q.b + p.d * q.d,
        }
        .normalize()
    }

    /// Product without renormalization, for inner loops that renormalize
    /// on their own schedule.
    pub(crate) fn mul_raw(&self, q: &MoebiusTransform) -> MoebiusTransform {
        let p = self;
        MoebiusTransform {
            a: p.a * q.a + p.b * q.c,
            b: p.a * q.b + p.b * q.d,
            c: p.c * q.a + p.d * q.c,
            d: p.c * q.b + p.d * q.d,
        }
    }

    pub fn inverse(&self) -> MoebiusTransform {
        MoebiusTransform { a: self.d, b: -self.b, c: -self.c, d: self.a }.normalize()
    }

    pub fn pow(&self, n: i64) -> MoebiusTransform {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut acc = MoebiusTransform::IDENTITY;
        let mut sq = base;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            k >>= 1;
        }
        acc
    }

    /// `N ∘ self ∘ N⁻¹`.
    pub fn conjugate_by(&self, n: &MoebiusTransform) -> MoebiusTransform {
        n.compose(self).compose(&n.inverse())
    }

    pub fn apply(&self, p: ComplexPoint) -> ComplexPoint {
        match p {
            ComplexPoint::Infinity => {
                if self.c.norm() <= TAU_POLE {
                    ComplexPoint::Infinity
                } else {
                    ComplexPoint::Finite(self.a / self.c)
                }
            }
            ComplexPoint::Finite(z) => {
                let den = self.c * z + self.d;
                if den.norm() <= TAU_POLE {
                    ComplexPoint::Infinity
                } else {
                    let w = (self.a * z + self.b) / den;
                    if w.is_finite() {
                        ComplexPoint::Finite(w)
                    } else {
                        ComplexPoint::Infinity
                    }
                }
            }
        }
    }

    /// Entrywise comparison up to overall sign, relative to the entry scale.
    pub fn approx_eq(&self, other: &MoebiusTransform, tol: f64) -> bool {
        let p = self.normalize();
        let q = other.normalize();
        let (pe, qe) = (p.entries(), q.entries());
        let scale = pe.iter().chain(qe.iter()).map(|z| z.norm()).fold(1.0, f64::max);
        let same = pe.iter().zip(&qe).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
        let flip = pe.iter().zip(&qe).map(|(x, y)| (x + y).norm()).fold(0.0, f64::max);
        same.min(flip) <= tol * scale
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.approx_eq(&MoebiusTransform::IDENTITY, tol)
    }

    pub fn classify(&self) -> Result<TransformClass, MoebiusError> {
        let m = self.normalize();
        if m.is_identity(TAU_FIX) {
            return Err(MoebiusError::IdentityTransform);
        }
        let t = m.trace();
        let t2 = t * t;
        let tol = TAU_FIX * t2.norm().max(1.0);
        if t2.im.abs() <= tol {
            if (t2.re - 4.0).abs() <= tol {
                return Ok(TransformClass::Parabolic);
            }
            if t2.re >= -tol && t2.re < 4.0 {
                return Ok(TransformClass::Elliptic);
            }
        }
        let hyperbolic = t.im.abs() <= TAU_FIX * t.norm().max(1.0) && t.re.abs() > 2.0;
        Ok(TransformClass::Loxodromic { hyperbolic })
    }

    pub fn is_loxodromic(&self) -> bool {
        matches!(self.classify(), Ok(TransformClass::Loxodromic { .. }))
    }

    /// Fixed points on the Riemann sphere. Loxodromic transforms report
    /// `[repelling, attracting]`; parabolic ones a single point.
    pub fn fixed_points(&self) -> Result<Vec<ComplexPoint>, MoebiusError> {
        let class = self.classify()?;
        let m = self.normalize();
        let scale = m.entries().iter().map(|z| z.norm()).fold(1.0, f64::max);
        let mut pts = if m.c.norm() <= TAU_FIX * scale {
            // Upper triangular: infinity is fixed, plus b / (d - a) unless parabolic.
            if class == TransformClass::Parabolic {
                vec![ComplexPoint::Infinity]
            } else {
                vec![ComplexPoint::Finite(m.b / (m.d - m.a)), ComplexPoint::Infinity]
            }
        } else {
            // c z^2 + (d - a) z - b = 0, with the cancellation-free root pair.
            let qa = m.c;
            let qb = m.d - m.a;
            let qc = -m.b;
            if class == TransformClass::Parabolic {
                vec![ComplexPoint::Finite(-qb / (2.0 * qa))]
            } else {
                let disc = (qb * qb - 4.0 * qa * qc).sqrt();
                let s = if (qb + disc).norm() >= (qb - disc).norm() { qb + disc } else { qb - disc };
                let q = -0.5 * s;
                vec![ComplexPoint::Finite(q / qa), ComplexPoint::Finite(qc / q)]
            }
        };
        if let TransformClass::Loxodromic { .. } = class {
            // Order as [repelling, attracting] using |M'(z)| = 1 / |cz + d|^2.
            if self.derivative_modulus(pts[0]) < 1.0 {
                pts.swap(0, 1);
            }
        }
        Ok(pts)
    }

    /// Modulus of the derivative at a fixed point, in the chart at infinity
    /// when the point is infinite.
    fn derivative_modulus(&self, p: ComplexPoint) -> f64 {
        let m = self.normalize();
        match p {
            ComplexPoint::Finite(z) => 1.0 / (m.c * z + m.d).norm_sqr(),
            // In w = 1/z the map near infinity has derivative d^2 when c = 0.
            ComplexPoint::Infinity => m.d.norm_sqr(),
        }
    }

    /// The multiplier `k`, `|k| > 1`, of the normal form `z -> k z`.
    pub fn multiplier(&self) -> Result<Complex64, MoebiusError> {
        match self.classify()? {
            TransformClass::Loxodromic { .. } => {}
            _ => return Err(MoebiusError::NotLoxodromic),
        }
        let t = self.normalize().trace();
        let root = (t * t - 4.0).sqrt();
        let mu_plus = (t + root) / 2.0;
        let mu_minus = (t - root) / 2.0;
        let mu = if mu_plus.norm() >= mu_minus.norm() { mu_plus } else { mu_minus };
        Ok(mu * mu)
    }

    /// A transform `N` with `N(0)` the repelling and `N(∞)` the attracting
    /// fixed point, so that `N⁻¹ ∘ self ∘ N` is `z -> k z`.
    pub fn normalizing_frame(&self) -> Result<MoebiusTransform, MoebiusError> {
        let fp = self.fixed_points()?;
        if fp.len() != 2 || !self.is_loxodromic() {
            return Err(MoebiusError::NotLoxodromic);
        }
        frame_from_points(fp[0], fp[1])
    }

    pub fn elementary(kind: Elementary) -> Result<MoebiusTransform, MoebiusError> {
        match kind {
            Elementary::Scaling(l) => Self::scaling(l),
            Elementary::Rotation { p, q } => Self::rotation(p, q),
            Elementary::Translation(t) => Ok(Self::translation(t)),
        }
    }

    /// `z -> λ z` for real `λ > 0`.
    pub fn scaling(lambda: f64) -> Result<MoebiusTransform, MoebiusError> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(MoebiusError::BadParameter(format!("scaling factor must be positive, got {lambda}")));
        }
        let s = lambda.sqrt();
        Ok(MoebiusTransform {
            a: Complex64::new(s, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0 / s, 0.0),
        }
        .normalize())
    }

    /// `z -> exp(2πi p/q) z`.
    pub fn rotation(p: i64, q: i64) -> Result<MoebiusTransform, MoebiusError> {
        if q == 0 {
            return Err(MoebiusError::BadParameter("rotation denominator must be nonzero".into()));
        }
        Ok(Self::rotation_angle(2.0 * PI * p as f64 / q as f64))
    }

    /// `z -> exp(iθ) z`.
    pub fn rotation_angle(theta: f64) -> MoebiusTransform {
        let h = Complex64::from_polar(1.0, theta / 2.0);
        MoebiusTransform { a: h, b: Complex64::new(0.0, 0.0), c: Complex64::new(0.0, 0.0), d: h.inv() }.normalize()
    }

    pub fn translation(t: Complex64) -> MoebiusTransform {
        MoebiusTransform { a: 1.0.into(), b: t, c: 0.0.into(), d: 1.0.into() }.normalize()
    }
}

/// The transform sending `0 -> p` and `∞ -> q`, with `1 -> ` a point chosen
/// off both.
pub fn frame_from_points(p: ComplexPoint, q: ComplexPoint) -> Result<MoebiusTransform, MoebiusError> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    match (p, q) {
        (ComplexPoint::Finite(p), ComplexPoint::Finite(q)) => {
            // w -> (q w + p) / (w + 1)
            MoebiusTransform::new(q, p, one, one)
        }
        (ComplexPoint::Finite(p), ComplexPoint::Infinity) => MoebiusTransform::new(one, p, zero, one),
        (ComplexPoint::Infinity, ComplexPoint::Finite(q)) => {
            // w -> (q w + 1) / w
            MoebiusTransform::new(q, one, one, zero)
        }
        (ComplexPoint::Infinity, ComplexPoint::Infinity) => Err(MoebiusError::Singular),
    }
}

/// Parameters for the elementary constructors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Elementary {
    Scaling(f64),
    Rotation { p: i64, q: i64 },
    Translation(Complex64),
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    #[serde(with = "serde_c64")]
    a: Complex64,
    #[serde(with = "serde_c64")]
    b: Complex64,
    #[serde(with = "serde_c64")]
    c: Complex64,
    #[serde(with = "serde_c64")]
    d: Complex64,
}

impl Serialize for MoebiusTransform {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson { a: self.a, b: self.b, c: self.c, d: self.d }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MoebiusTransform {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m = MatrixJson::deserialize(d)?;
        MoebiusTransform::new(m.a, m.b, m.c, m.d).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for MoebiusTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A circle or a straight line in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneralizedCircle {
    Circle {
        #[serde(with = "serde_c64")]
        center: Complex64,
        radius: f64,
    },
    Line {
        #[serde(with = "serde_c64")]
        point: Complex64,
        #[serde(with = "serde_c64")]
        direction: Complex64,
    },
}

impl GeneralizedCircle {
    pub fn circle(center: Complex64, radius: f64) -> Result<Self, MoebiusError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(MoebiusError::DegenerateRadius);
        }
        Ok(GeneralizedCircle::Circle { center, radius })
    }

    /// Line through `point`; `direction` is rescaled to unit modulus.
    pub fn line(point: Complex64, direction: Complex64) -> Result<Self, MoebiusError> {
        let n = direction.norm();
        if !(n > 0.0 && n.is_finite()) {
            return Err(MoebiusError::BadParameter("line direction must be nonzero".into()));
        }
        Ok(GeneralizedCircle::Line { point, direction: direction / n })
    }

    /// The line through the origin at angle `theta`.
    pub fn ray_line(theta: f64) -> Self {
        GeneralizedCircle::Line { point: 0.0.into(), direction: Complex64::from_polar(1.0, theta) }
    }

    pub fn validate(&self) -> Result<(), MoebiusError> {
        match *self {
            GeneralizedCircle::Circle { radius, .. } => {
                if radius > 0.0 && radius.is_finite() {
                    Ok(())
                } else {
                    Err(MoebiusError::DegenerateRadius)
                }
            }
            GeneralizedCircle::Line { direction, .. } => {
                if (direction.norm() - 1.0).abs() <= 1e-9 {
                    Ok(())
                } else {
                    Err(MoebiusError::BadParameter("line direction must have unit modulus".into()))
                }
            }
        }
    }

    /// Signed offset: negative inside a circle (or left of a line),
    /// positive outside (right), zero on the curve.
    pub fn signed_offset(&self, z: Complex64) -> f64 {
        match *self {
            GeneralizedCircle::Circle { center, radius } => (z - center).norm() - radius,
            GeneralizedCircle::Line { point, direction } => -(direction.conj() * (z - point)).im,
        }
    }

    /// `n` points on the curve. Lines are sampled on a symmetric window of
    /// half-width `extent` around their base point.
    pub fn sample(&self, n: usize, extent: f64) -> Vec<Complex64> {
        match *self {
            GeneralizedCircle::Circle { center, radius } => (0..n)
                .map(|k| center + Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64))
                .collect(),
            GeneralizedCircle::Line { point, direction } => (0..n)
                .map(|k| {
                    let s = if n == 1 { 0.0 } else { -extent + 2.0 * extent * k as f64 / (n - 1) as f64 };
                    point + direction * s
                })
                .collect(),
        }
    }
}

/// Pairs `c1` with `c2` by a Möbius transform carrying the exterior of `c1`
/// onto the interior of `c2`.
///
/// For disjoint disks this is inversion in `c1` followed by the reflection
/// that carries `c1` to `c2` (the perpendicular bisector when the radii
/// agree), i.e. `z -> c2 - u² r1 r2 / (z - c1)` with `u` the unit vector
/// between centers. When one circle strictly contains the other, the larger
/// circle's "interior" is taken to be the side containing infinity and the
/// pairing is the direct similarity `z -> c2 + (r2/r1)(z - c1)`; concentric
/// circles give a dilation.
pub fn pair_circles(c1: &GeneralizedCircle, c2: &GeneralizedCircle) -> Result<MoebiusTransform, MoebiusError> {
    let (
        GeneralizedCircle::Circle { center: p, radius: r1 },
        GeneralizedCircle::Circle { center: q, radius: r2 },
    ) = (*c1, *c2)
    else {
        return Err(MoebiusError::UnsupportedLine);
    };
    c1.validate()?;
    c2.validate()?;
    let dist = (q - p).norm();
    let slack = 1e-12 * (r1 + r2 + dist);
    if dist > r1 + r2 + slack {
        let u = (q - p) / dist;
        let k = u * u * r1 * r2;
        MoebiusTransform::new(q, -p * q - k, 1.0.into(), -p)
    } else if dist + r1.min(r2) < r1.max(r2) - slack {
        let rho = r2 / r1;
        MoebiusTransform::new(rho.into(), q - p * rho, 0.0.into(), 1.0.into())
    } else {
        Err(MoebiusError::IntersectingCircles)
    }
}

/// The conformal embedding `H³ × S¹ -> R⁴`,
/// `(x, y, t, θ) -> (x, y, t cos θ, t sin θ)`.
pub fn embed_h3s1(x: f64, y: f64, t: f64, theta: f64) -> Result<[f64; 4], MoebiusError> {
    if !(t > 0.0) {
        return Err(MoebiusError::NonpositiveT(t));
    }
    Ok([x, y, t * theta.cos(), t * theta.sin()])
}
