//! Symbolic 4-dimensional handle decompositions and their doubles.
//!
//! A decomposition has one implicit 0-handle, labeled 1-handles (the
//! generators of π₁) and 2-handles attached along relator words. Doubling
//! adds a 0-framed meridian to every 2-handle together with the dual 3- and
//! 4-handles; the dual 2-handles bound cocore disks, so π₁ of the double is
//! read off the original presentation unchanged.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intlinalg::{self, AbelianInvariants, IntMatrix, LinalgError};
use crate::kleinian::sign::{scalar_sign, ScalarSign, SignError};
use crate::word::{Label, Word};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HandleError {
    #[error("operation needs a doubled decomposition")]
    NotDoubled,
    #[error("inconsistent decomposition: derived b2 = {b2} is negative")]
    InconsistentDecomposition { b2: i64 },
    #[error("duplicate 1-handle label {0}")]
    DuplicateGenerator(Label),
    #[error("asserted intersection form {form} has rank {form_rank}, but b2 = {b2}")]
    FormRankMismatch { form: IntersectionForm, form_rank: usize, b2: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Sign(#[from] SignError),
}

/// `⟨generators | relators⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    generators: Vec<Label>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Checks that labels are distinct and that every relator only uses them.
    pub fn new(generators: Vec<Label>, relators: Vec<Word>) -> Result<Self, HandleError> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g) {
                return Err(HandleError::DuplicateGenerator(g.clone()));
            }
        }
        for (i, r) in relators.iter().enumerate() {
            if let Some(l) = r.letters().iter().find(|l| !seen.contains(&l.label)) {
                return Err(LinalgError::UnknownGenerator { relator: i, label: l.label.clone() }.into());
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> &[Label] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn abelianization(&self) -> Result<AbelianInvariants, HandleError> {
        Ok(intlinalg::abelian_invariants(self)?)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<&str> = self.generators.iter().map(Label::as_str).collect();
        let rels: Vec<String> = self.relators.iter().map(Word::to_exponent_string).collect();
        write!(f, "⟨{} | {}⟩", gens.join(", "), rels.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoHandle {
    pub word: Word,
    /// Blackboard framing. Kept for fidelity; homology does not use it.
    #[serde(default)]
    pub framing: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleDecomposition {
    pub one_handles: Vec<Label>,
    pub two_handles: Vec<TwoHandle>,
    #[serde(default)]
    pub doubled: bool,
}

impl HandleDecomposition {
    pub fn new(one_handles: Vec<Label>, two_handles: Vec<TwoHandle>) -> Result<Self, HandleError> {
        let hd = HandleDecomposition { one_handles, two_handles, doubled: false };
        hd.validate()?;
        Ok(hd)
    }

    /// 0-framed 2-handles from relator words.
    pub fn from_relators(one_handles: Vec<Label>, relators: Vec<Word>) -> Result<Self, HandleError> {
        Self::new(one_handles, relators.into_iter().map(|word| TwoHandle { word, framing: 0 }).collect())
    }

    pub fn empty() -> Self {
        HandleDecomposition { one_handles: Vec::new(), two_handles: Vec::new(), doubled: false }
    }

    pub fn validate(&self) -> Result<(), HandleError> {
        self.presentation().map(|_| ())
    }

    /// Inserts the 0-framed meridians and dual handles.
    pub fn double(&self) -> Self {
        HandleDecomposition { doubled: true, ..self.clone() }
    }

    fn presentation(&self) -> Result<Presentation, HandleError> {
        Presentation::new(self.one_handles.clone(), self.two_handles.iter().map(|h| h.word.clone()).collect())
    }

    fn require_doubled(&self) -> Result<(), HandleError> {
        if self.doubled {
            Ok(())
        } else {
            Err(HandleError::NotDoubled)
        }
    }
}

/// π₁ presentation: generators are the 1-handles, relators the 2-handle
/// words. Doubling contributes no relators.
pub fn presentation_of(hd: &HandleDecomposition) -> Result<Presentation, HandleError> {
    hd.presentation()
}

/// Ranks of the handle chain complex `C_0 .. C_4` of a double.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRanks(pub [usize; 5]);

impl ChainRanks {
    pub fn euler_characteristic(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }
}

impl fmt::Display for ChainRanks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = |n: usize| match n {
            0 => "0".to_string(),
            1 => "Z".to_string(),
            n => format!("Z^{n}"),
        };
        write!(f, "0 -> {} -> {} -> {} -> {} -> {} -> 0", z(self.0[4]), z(self.0[3]), z(self.0[2]), z(self.0[1]), z(self.0[0]))
    }
}

pub fn chain_ranks(hd: &HandleDecomposition) -> Result<ChainRanks, HandleError> {
    hd.require_doubled()?;
    let g = hd.one_handles.len();
    let t = hd.two_handles.len();
    Ok(ChainRanks([1, g, 2 * t, g, 1]))
}

pub fn euler_characteristic(hd: &HandleDecomposition) -> Result<i64, HandleError> {
    let chi = chain_ranks(hd)?.euler_characteristic();
    debug_assert_eq!(chi, 2 * (1 - hd.one_handles.len() as i64 + hd.two_handles.len() as i64));
    Ok(chi)
}

/// Intersection form descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IntersectionForm {
    Zero,
    /// `H ⊕ ... ⊕ H` (`k` copies) with `H = [[0,1],[1,0]]`.
    HyperbolicSum { k: usize },
    Unknown,
}

impl IntersectionForm {
    pub const H: IntersectionForm = IntersectionForm::HyperbolicSum { k: 1 };

    fn rank(&self) -> Option<usize> {
        match self {
            IntersectionForm::Zero => Some(0),
            IntersectionForm::HyperbolicSum { k } => Some(2 * k),
            IntersectionForm::Unknown => None,
        }
    }
}

impl fmt::Display for IntersectionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntersectionForm::Zero => f.write_str("(0)"),
            IntersectionForm::HyperbolicSum { k: 1 } => f.write_str("H"),
            IntersectionForm::HyperbolicSum { k } => write!(f, "{k}H"),
            IntersectionForm::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub chi: i64,
    pub betti: [usize; 5],
    pub h1: AbelianInvariants,
    pub h2: AbelianInvariants,
    pub h3_rank: usize,
    pub signature: i64,
    pub intersection_form: IntersectionForm,
    pub einstein_obstructed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar_sign: Option<ScalarSign>,
}

impl InvariantReport {
    /// Duality and Euler-characteristic identities every report satisfies.
    pub fn check_consistency(&self) -> Result<(), String> {
        let [b0, b1, b2, b3, b4] = self.betti;
        let mut errs = Vec::new();
        if b0 != 1 || b4 != 1 {
            errs.push(format!("b0 = {b0}, b4 = {b4}"));
        }
        if b3 != b1 {
            errs.push(format!("b3 = {b3} differs from b1 = {b1}"));
        }
        if self.chi != 2 - 2 * b1 as i64 + b2 as i64 {
            errs.push(format!("chi = {} but 2 - 2b1 + b2 = {}", self.chi, 2 - 2 * b1 as i64 + b2 as i64));
        }
        if self.h2.torsion != self.h1.torsion {
            errs.push("torsion of H2 differs from torsion of H1".into());
        }
        if self.h1.free_rank != b1 || self.h2.free_rank != b2 || self.h3_rank != b1 {
            errs.push("free ranks disagree with Betti numbers".into());
        }
        if self.einstein_obstructed != (self.chi < 0) {
            errs.push("Einstein flag disagrees with chi".into());
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(errs.join("; "))
        }
    }
}

/// `b1` recomputed from the cellular boundary `C_2 -> C_1` of the double,
/// where the dual 2-handles contribute zero rows.
pub fn boundary_b1(hd: &HandleDecomposition) -> Result<usize, HandleError> {
    hd.require_doubled()?;
    let base = intlinalg::exponent_matrix(&hd.presentation()?)?;
    let mut rows = base.to_rows();
    rows.extend(std::iter::repeat_n(vec![0.into(); base.cols()], hd.two_handles.len()));
    let doubled = if rows.is_empty() {
        IntMatrix::zeros(0, hd.one_handles.len())
    } else {
        IntMatrix::from_rows(&rows)?
    };
    Ok(hd.one_handles.len() - intlinalg::smith_normal_form(&doubled).rank)
}

/// Full invariant pipeline for a doubled decomposition: H₁ from the
/// abelianized presentation, χ from handle counts, b₂ from χ and b₁, H₂ and
/// H₃ by Poincaré duality and universal coefficients.
pub fn invariants(
    hd: &HandleDecomposition,
    asserted_form: Option<IntersectionForm>,
    dim_estimate: Option<f64>,
) -> Result<InvariantReport, HandleError> {
    hd.require_doubled()?;
    let h1 = presentation_of(hd)?.abelianization()?;
    let b1 = h1.free_rank;
    debug_assert_eq!(boundary_b1(hd)?, b1);
    let chi = euler_characteristic(hd)?;
    let b2 = chi - 2 + 2 * b1 as i64;
    if b2 < 0 {
        return Err(HandleError::InconsistentDecomposition { b2 });
    }
    let b2 = b2 as usize;
    let intersection_form = match asserted_form {
        Some(form) => match form.rank() {
            Some(r) if r != b2 => return Err(HandleError::FormRankMismatch { form, form_rank: r, b2 }),
            _ => form,
        },
        None if b2 == 0 => IntersectionForm::Zero,
        None => IntersectionForm::Unknown,
    };
    let scalar_sign = dim_estimate.map(|d| scalar_sign(d, 4)).transpose()?;
    let report = InvariantReport {
        chi,
        betti: [1, b1, b2, b1, 1],
        h2: AbelianInvariants { free_rank: b2, torsion: h1.torsion.clone() },
        h1,
        h3_rank: b1,
        signature: 0,
        intersection_form,
        einstein_obstructed: chi < 0,
        scalar_sign,
    };
    if let Err(e) = report.check_consistency() {
        panic!("invariant report violates duality identities: {e}");
    }
    Ok(report)
}

/// Einstein metrics force `χ ≥ 0`; a negative Euler characteristic rules them out.
pub fn einstein_obstructed(report: &InvariantReport) -> bool {
    report.chi < 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn labels(s: &str) -> Vec<Label> {
        s.split(',').map(|x| x.trim().parse().unwrap()).collect()
    }

    fn hd(gens: &str, rels: &[&str]) -> HandleDecomposition {
        HandleDecomposition::from_relators(labels(gens), rels.iter().map(|r| parse_word(r).unwrap()).collect()).unwrap()
    }

    fn m1() -> HandleDecomposition {
        hd("a,b,c,d,e,f", &["a^-1 b^-1 a b c d^-1", "e d e^-1 c^-1", "f^-3 d^-1"]).double()
    }

    #[test]
    fn presentation_lists_handles() {
        let p = presentation_of(&m1()).unwrap();
        assert_eq!(p.generators().len(), 6);
        assert_eq!(p.relators()[1], parse_word("edEC").unwrap());
        assert_eq!(p.to_string(), "⟨a, b, c, d, e, f | a^-1 b^-1 a b c d^-1, e d e^-1 c^-1, f^-3 d^-1⟩");
        let empty = presentation_of(&HandleDecomposition::empty()).unwrap();
        assert!(empty.generators().is_empty() && empty.relators().is_empty());
    }

    #[test]
    fn chain_ranks_and_chi() {
        assert_eq!(chain_ranks(&m1()).unwrap(), ChainRanks([1, 6, 6, 6, 1]));
        assert_eq!(euler_characteristic(&m1()).unwrap(), -4);
        let e = HandleDecomposition::empty().double();
        assert_eq!(chain_ranks(&e).unwrap(), ChainRanks([1, 0, 0, 0, 1]));
        assert_eq!(euler_characteristic(&e).unwrap(), 2);
        assert_eq!(chain_ranks(&HandleDecomposition::empty()), Err(HandleError::NotDoubled));
        assert_eq!(chain_ranks(&m1()).unwrap().to_string(), "0 -> Z -> Z^6 -> Z^6 -> Z^6 -> Z -> 0");
    }

    #[test]
    fn m1_report() {
        let r = invariants(&m1(), Some(IntersectionForm::H), None).unwrap();
        assert_eq!(r.chi, -4);
        assert_eq!(r.h1, AbelianInvariants::free(4));
        assert_eq!(r.betti, [1, 4, 2, 4, 1]);
        assert_eq!(r.h2, AbelianInvariants::free(2));
        assert_eq!(r.h3_rank, 4);
        assert_eq!(r.signature, 0);
        assert!(r.einstein_obstructed && einstein_obstructed(&r));
        assert_eq!(boundary_b1(&m1()).unwrap(), 4);
    }

    #[test]
    fn empty_double_is_sphere_like() {
        let r = invariants(&HandleDecomposition::empty().double(), None, None).unwrap();
        assert_eq!(r.chi, 2);
        assert!(r.h1.is_trivial() && r.h2.is_trivial() && r.h3_rank == 0);
        assert_eq!(r.intersection_form, IntersectionForm::Zero);
        assert!(!r.einstein_obstructed);
    }

    #[test]
    fn undoubled_and_inconsistent_inputs() {
        let base = hd("a", &[]);
        assert_eq!(invariants(&base, None, None), Err(HandleError::NotDoubled));
        // Two relators killing a single generator: b2 = 2(1-1+2) - 2 + 0 = 2, fine.
        // Zero relators on three generators: chi = -4, b1 = 3, b2 = 0.
        let free = hd("a,b,c", &[]).double();
        assert_eq!(invariants(&free, None, None).unwrap().betti[2], 0);
        // A proper relation that does not lower b1 leaves b2 = 2.
        let comm = hd("a,b", &["abAB"]).double();
        assert_eq!(invariants(&comm, None, None).unwrap().betti[2], 2);
        let err = invariants(&comm, Some(IntersectionForm::Zero), None).unwrap_err();
        assert!(matches!(err, HandleError::FormRankMismatch { .. }));
    }

    #[test]
    fn unknown_and_duplicate_generators() {
        let bad = HandleDecomposition::from_relators(labels("a,b"), vec![parse_word("ac").unwrap()]);
        assert!(matches!(bad, Err(HandleError::Linalg(LinalgError::UnknownGenerator { .. }))));
        let dup = HandleDecomposition::from_relators(labels("a,a"), vec![]);
        assert!(matches!(dup, Err(HandleError::DuplicateGenerator(_))));
    }

    #[test]
    fn scalar_sign_attaches_when_dimension_given() {
        let r = invariants(&m1(), None, Some(1.2)).unwrap();
        assert_eq!(r.scalar_sign.unwrap().sign, crate::kleinian::sign::Sign::Negative);
        assert!(invariants(&m1(), None, Some(-1.0)).is_err());
    }

    #[test]
    fn handle_spec_json() {
        let j = r#"{"one_handles":["a","b"],"two_handles":[{"word":"ABab","framing":0}],"doubled":true}"#;
        let parsed: HandleDecomposition = serde_json::from_str(j).unwrap();
        assert_eq!(parsed.two_handles[0].word, parse_word("a^-1 b^-1 a b").unwrap());
        assert_eq!(serde_json::to_string(&parsed).unwrap(), j);
    }

    #[test]
    fn report_json_shape() {
        let r = invariants(&m1(), Some(IntersectionForm::H), None).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["h1"], serde_json::json!({"free_rank": 4, "torsion": []}));
        assert_eq!(v["intersection_form"], serde_json::json!({"kind": "hyperbolic_sum", "k": 1}));
        assert!(v.get("scalar_sign").is_none());
    }
}
