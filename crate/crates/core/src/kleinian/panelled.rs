//! A worked panelled-web group: a Fuchsian group for the twice-punctured
//! torus amalgamated with an extended Fuchsian group over a shared dilation.
//!
//! The layout is chosen for clean sampled checks, not to match any
//! particular drawing: every disk of the Fuchsian side lies in the sector
//! `|arg z| < 41°`, every disk of the extended side lies within `10°` of the
//! ray `arg z = 5π/6`, and the separator is the line through 0 at angle `π/3`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::combine::first_combination;
use super::group::{adjoin_extension, Generator, GroupSpec, Step};
use super::region::{Region, Side};
use super::KleinianError;
use crate::moebius::{GeneralizedCircle, MoebiusTransform};
use crate::word::Label;

/// Multiplier of the shared generator `a`.
pub const MU: f64 = 64.0;
/// Direction of the extended side's limit set.
pub const EXTENDED_AXIS: f64 = 5.0 * PI / 6.0;
/// Separator angle.
pub const SEPARATOR_ANGLE: f64 = PI / 3.0;

fn l(c: char) -> Label {
    Label::new(c, None).expect("letter label")
}

fn circle_at(x: f64, half_angle_deg: f64) -> GeneralizedCircle {
    GeneralizedCircle::Circle { center: Complex64::new(x, 0.0), radius: x * half_angle_deg.to_radians().sin() }
}

/// `⟨a, c, d⟩`: `a = z -> μz` pairs `|z| = 1` with `|z| = μ`; `c` and `d`
/// pair interleaved disks on the positive axis inside that annulus, `c`'s
/// subtending 40° and `d`'s 10°.
pub fn fuchsian_side() -> Result<GroupSpec, KleinianError> {
    let unit = GeneralizedCircle::circle(Complex64::new(0.0, 0.0), 1.0)?;
    let outer = GeneralizedCircle::circle(Complex64::new(0.0, 0.0), MU)?;
    let gens = vec![
        Generator::from_pair(l('a'), unit, outer)?,
        Generator::from_pair(l('c'), circle_at(3.0, 40.0), circle_at(22.0, 40.0))?,
        Generator::from_pair(l('d'), circle_at(6.5, 10.0), circle_at(46.0, 10.0))?,
    ];
    GroupSpec::new(gens, vec![Step::FuchsianSchottky { genus: 1, holes: 2, circles: 6 }])
}

/// Extended Fuchsian side before it is moved into place. `g = z -> -kz`;
/// `G₀ = ⟨g², a, g a g⁻¹⟩` with `a` pairing two small disks on the positive
/// axis inside `1 < |z| < k`, with multiplier `μ`. Labels: `b = g²`,
/// `a`, `e = g a g⁻¹`, `f = g`.
pub fn extended_side_raw() -> Result<GroupSpec, KleinianError> {
    let rho = 0.5;
    let x1 = 2.0;
    let trace = MU.sqrt() + 1.0 / MU.sqrt();
    let x2 = x1 + trace * rho;
    let k = 1.5 * (x2 + rho);
    let a = Generator::from_pair(
        l('a'),
        GeneralizedCircle::circle(Complex64::new(x1, 0.0), rho)?,
        GeneralizedCircle::circle(Complex64::new(x2, 0.0), rho)?,
    )?;
    let g = MoebiusTransform::new(Complex64::new(-k, 0.0), 0.0.into(), 0.0.into(), 1.0.into())?;
    let gens = vec![
        Generator::new(l('b'), g.compose(&g)),
        Generator::new(l('a'), a.transform),
        Generator::new(l('e'), a.transform.conjugate_by(&g)),
    ];
    let g0 = GroupSpec::new(gens, vec![Step::Input { note: "Fuchsian subgroup of index 2".into() }])?;
    adjoin_extension(&g0, g, Some(l('f')))
}

/// The extended side moved so that `a` is exactly the dilation of
/// [`fuchsian_side`], then rotated onto [`EXTENDED_AXIS`]. Only `g` is carried
/// over from [`extended_side_raw`]; `b` and `e` are rebuilt from it and the
/// exact `a` so the defining relations hold to rounding.
pub fn extended_side() -> Result<GroupSpec, KleinianError> {
    let raw = extended_side_raw()?;
    let fp = raw.transform(&l('a'))?.fixed_points()?;
    let (p, q) = (fp[0].finite().expect("finite"), fp[1].finite().expect("finite"));
    // z -> (z - p)/(z - q): repelling point to 0, attracting to ∞, and the
    // arc of the real line outside [p, q] onto the positive axis.
    let n = MoebiusTransform::new(1.0.into(), -p, 1.0.into(), -q)?;
    let frame = MoebiusTransform::rotation_angle(EXTENDED_AXIS).compose(&n);
    let g = raw.transform(&l('f'))?.conjugate_by(&frame);
    let a = MoebiusTransform::scaling(MU)?;
    let gens = vec![Generator::new(l('b'), g.compose(&g)), Generator::new(l('a'), a), Generator::new(l('e'), a.conjugate_by(&g))];
    let note = format!("Fuchsian subgroup of index 2, moved by {frame}");
    let g0 = GroupSpec::new(gens, vec![Step::Input { note }])?;
    adjoin_extension(&g0, g, Some(l('f')))
}

pub fn separator() -> GeneralizedCircle {
    GeneralizedCircle::ray_line(SEPARATOR_ANGLE)
}

/// Left of the separator: contains the ray at `2π/3`.
pub fn b1() -> Region {
    Region::HalfPlane { line: separator(), side: Side::Inside }
}

pub fn b2() -> Region {
    Region::HalfPlane { line: separator(), side: Side::Outside }
}

/// First combination of the two sides over `⟨a⟩`, checked to `depth`.
pub fn panelled_group(depth: usize) -> Result<GroupSpec, KleinianError> {
    first_combination(&fuchsian_side()?, &extended_side()?, &l('a'), separator(), b1(), b2(), depth)
}
