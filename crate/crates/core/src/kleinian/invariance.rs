//! Sampled checks of precise invariance.
//!
//! A region `B` is precisely invariant under a subgroup `H` of `G` when
//! every element of `H` maps `B` onto itself and every other element of `G`
//! maps `B` off itself. The checks below test this on boundary and interior
//! sample points for all reduced words up to a given length. A pass is
//! evidence, not a proof.

use num_complex::Complex64;
use serde::Serialize;

use super::enumerate::Element;
use super::group::GroupSpec;
use super::region::Region;
use super::KleinianError;

use crate::moebius::{ComplexPoint, MoebiusTransform, TAU_FIX};
use crate::word::{Label, Word};

pub const DEFAULT_DEPTH: usize = 5;
pub const DEFAULT_BOUNDARY_SAMPLES: usize = 64;
pub const DEFAULT_INTERIOR_SAMPLES: usize = 64;

/// Slack on region margins, which are in relative units. Words that equal
/// a power of `h` only through a relation (`f⁻¹ e³ f = a³`) carry angular
/// errors near 1e-7 at depth 5, so the slack sits an order above that.
pub const TAU_REGION: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub word: Word,
    pub point: ComplexPoint,
    pub image: ComplexPoint,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum InvarianceCheck {
    Pass { words_checked: usize, points_per_word: usize },
    Witness(Witness),
}

impl InvarianceCheck {
    pub fn passed(&self) -> bool {
        matches!(self, InvarianceCheck::Pass { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            InvarianceCheck::Witness(w) => Some(w),
            InvarianceCheck::Pass { .. } => None,
        }
    }

    pub fn into_result(self) -> Result<(), KleinianError> {
        match self {
            InvarianceCheck::Pass { .. } => Ok(()),
            InvarianceCheck::Witness(w) => Err(KleinianError::PreciseInvarianceFailed(Box::new(w))),
        }
    }
}

pub(crate) fn region_samples(b: &Region) -> Vec<ComplexPoint> {
    let mut pts = b.boundary_samples(DEFAULT_BOUNDARY_SAMPLES);
    pts.extend(b.interior_samples(DEFAULT_INTERIOR_SAMPLES));
    pts
}

/// Membership test for `⟨h⟩`, restricted to `|k| <= kmax`.
///
/// For loxodromic `h` an element is `h^k` when, in the frame where `h` is
/// `z -> κz`, it is diagonal with ratio `κ^k`. This stays well conditioned for
/// long words, where entrywise matrix comparison does not.
enum Cyclic {
    Frame { n: MoebiusTransform, n_inv: MoebiusTransform, log_kappa: Complex64, kmax: i64 },
    Powers(Vec<MoebiusTransform>),
}

impl Cyclic {
    fn new(h: &MoebiusTransform, kmax: usize) -> Self {
        if let (Ok(n), Ok(kappa)) = (h.normalizing_frame(), h.multiplier()) {
            return Cyclic::Frame { n, n_inv: n.inverse(), log_kappa: kappa.ln(), kmax: kmax as i64 };
        }
        let mut out = vec![MoebiusTransform::IDENTITY];
        for k in 1..=kmax as i64 {
            out.push(h.pow(k));
            out.push(h.pow(-k));
        }
        Cyclic::Powers(out)
    }

    fn contains(&self, m: &MoebiusTransform) -> bool {
        match self {
            Cyclic::Powers(ps) => ps.iter().any(|p| p.approx_eq(m, TAU_FIX * 100.0)),
            Cyclic::Frame { n, n_inv, log_kappa, kmax } => {
                let [a, b, c, d] = n_inv.compose(m).compose(n).entries();
                let big = a.norm().max(d.norm());
                if b.norm() > 1e-7 * big || c.norm() > 1e-7 * big || d.norm() == 0.0 {
                    return false;
                }
                let log_r = (a / d).ln();
                let k = (log_r.re / log_kappa.re).round();
                if k.abs() > *kmax as f64 {
                    return false;
                }
                let resid = log_r - log_kappa * k;
                let turn = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
                let wrapped = resid - turn * (resid.im / turn.im).round();
                wrapped.norm() <= 1e-6
            }
        }
    }
}

/// One-region check over a precomputed element list.
fn check_one(b: &Region, h: &MoebiusTransform, elements: &[Element], labels: &[Label], depth: usize) -> InvarianceCheck {
    let samples = region_samples(b);
    let cyclic = Cyclic::new(h, 2 * depth);
    for e in elements {
        let in_h = cyclic.contains(&e.matrix);
        for &z in &samples {
            let w = e.matrix.apply(z);
            let bad = if in_h { !b.contains_closed(w, TAU_REGION) } else { b.contains_open(w, TAU_REGION) };
            if bad {
                return InvarianceCheck::Witness(Witness { word: super::word_of(&e.syms, labels), point: z, image: w });
            }
        }
    }
    InvarianceCheck::Pass { words_checked: elements.len(), points_per_word: samples.len() }
}

/// Sampled test that `b` is precisely invariant under `⟨h_label⟩` in `g`,
/// over all reduced words of length `<= depth`. The first violation in
/// shortlex word order is returned as a witness.
pub fn check_precisely_invariant(b: &Region, h_label: &Label, g: &GroupSpec, depth: usize) -> Result<InvarianceCheck, KleinianError> {
    if depth == 0 {
        return Err(KleinianError::BadParameter("depth must be >= 1".into()));
    }
    b.validate()?;
    let h = g.transform(h_label)?;
    Ok(check_one(b, &h, &g.elements(depth), &g.labels(), depth))
}

/// Pairwise precise invariance of `(b1, b2)` under `(⟨h1⟩, ⟨h2⟩)`: each region
/// precisely invariant under its subgroup, and no element of `g` carries
/// a point of one region into the other.
pub fn check_pairwise_precisely_invariant(
    b1: &Region,
    h1: &Label,
    b2: &Region,
    h2: &Label,
    g: &GroupSpec,
    depth: usize,
) -> Result<InvarianceCheck, KleinianError> {
    if depth == 0 {
        return Err(KleinianError::BadParameter("depth must be >= 1".into()));
    }
    b1.validate()?;
    b2.validate()?;
    let (m1, m2) = (g.transform(h1)?, g.transform(h2)?);
    let elements = g.elements(depth);
    let labels = g.labels();
    for (b, m) in [(b1, &m1), (b2, &m2)] {
        let r = check_one(b, m, &elements, &labels, depth);
        if !r.passed() {
            return Ok(r);
        }
    }
    let (s1, s2) = (region_samples(b1), region_samples(b2));
    for e in &elements {
        for (from, to) in [(&s1, b2), (&s2, b1)] {
            for &z in from.iter() {
                let w = e.matrix.apply(z);
                if to.contains_open(w, TAU_REGION) {
                    return Ok(InvarianceCheck::Witness(Witness { word: super::word_of(&e.syms, &labels), point: z, image: w }));
                }
            }
        }
    }
    Ok(InvarianceCheck::Pass { words_checked: elements.len(), points_per_word: s1.len() + s2.len() })
}
