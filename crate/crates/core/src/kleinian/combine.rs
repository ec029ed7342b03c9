//! Maskit's combination theorems as checked assembly operations.

use super::group::{Generator, GroupSpec, Step};
use super::invariance::{check_pairwise_precisely_invariant, check_precisely_invariant, TAU_REGION};
use super::region::Region;
use super::KleinianError;
use crate::moebius::{GeneralizedCircle, MoebiusTransform, TAU_FIX};
use crate::word::Label;

/// Free product of `g1` and `g2` amalgamated over `⟨h⟩`, where `h` is the
/// generator both groups share. `b1` and `b2` are the two sides of the
/// separator `c`; `b1` must be precisely invariant under `⟨h⟩` in `g1` and
/// `b2` in `g2`, checked on samples up to `depth`.
pub fn first_combination(
    g1: &GroupSpec,
    g2: &GroupSpec,
    h: &Label,
    c: GeneralizedCircle,
    b1: Region,
    b2: Region,
    depth: usize,
) -> Result<GroupSpec, KleinianError> {
    let m1 = g1.transform(h).map_err(|_| KleinianError::SharedGeneratorMismatch(h.clone()))?;
    let m2 = g2.transform(h).map_err(|_| KleinianError::SharedGeneratorMismatch(h.clone()))?;
    if !m1.approx_eq(&m2, TAU_FIX * 100.0) {
        return Err(KleinianError::SharedGeneratorMismatch(h.clone()));
    }
    c.validate()?;
    let mut gens: Vec<Generator> = g1.generators().to_vec();
    for g in g2.generators() {
        if &g.label == h {
            continue;
        }
        if g1.get(&g.label).is_some() {
            return Err(KleinianError::LabelCollision(g.label.clone()));
        }
        gens.push(g.clone());
    }
    check_precisely_invariant(&b1, h, g1, depth)?.into_result()?;
    check_precisely_invariant(&b2, h, g2, depth)?.into_result()?;
    let step = Step::FirstCombination {
        amalgamated: h.clone(),
        separator: c,
        b1,
        b2,
        left: g1.provenance().to_vec(),
        right: g2.provenance().to_vec(),
    };
    GroupSpec::new(gens, vec![step])
}

/// HNN-type extension: adjoins `f` with `f h1 f⁻¹ = h2^{±1}`, where `f`
/// carries the interior of `b1` onto the exterior of `b2` and `(b1, b2)` is
/// pairwise precisely invariant under `(⟨h1⟩, ⟨h2⟩)`.
#[allow(clippy::too_many_arguments)]
pub fn second_combination(
    g: &GroupSpec,
    h1: &Label,
    h2: &Label,
    f: MoebiusTransform,
    b1: Region,
    b2: Region,
    f_label: Option<Label>,
    depth: usize,
) -> Result<GroupSpec, KleinianError> {
    let (m1, m2) = (g.transform(h1)?, g.transform(h2)?);
    let conj = m1.conjugate_by(&f);
    let relation = if conj.approx_eq(&m2, TAU_FIX * 100.0) {
        format!("f {h1} f^-1 = {h2}")
    } else if conj.approx_eq(&m2.inverse(), TAU_FIX * 100.0) {
        format!("f {h1} f^-1 = {h2}^-1")
    } else {
        return Err(KleinianError::ConjugationFailed { h1: h1.clone(), h2: h2.clone() });
    };
    b1.validate()?;
    b2.validate()?;
    for z in b1.boundary_samples(64) {
        let w = f.apply(z);
        if b2.margin(w).abs() > 1e-6 {
            return Err(KleinianError::RegionMapFailed { point: z, image: w });
        }
    }
    for z in b1.interior_samples(64) {
        let w = f.apply(z);
        if b2.contains_closed(w, -TAU_REGION) {
            return Err(KleinianError::RegionMapFailed { point: z, image: w });
        }
    }
    check_pairwise_precisely_invariant(&b1, h1, &b2, h2, g, depth)?.into_result()?;
    let label = match f_label {
        Some(l) => l,
        None => g.next_free_label()?,
    };
    g.with_generator(
        Generator::new(label.clone(), f),
        Step::SecondCombination {
            h1: h1.clone(),
            h2: h2.clone(),
            f: label,
            b1,
            b2,
            relation,
            note: "round 1-handle: reglues a pair of half-cylinders".into(),
        },
    )
}
