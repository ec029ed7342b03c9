//! Built-in panelled-web manifolds and the infinite families built from them.
//!
//! Each constructor returns the doubled handle decomposition together with
//! the intersection form asserted for it and the closed-form Betti numbers
//! and Euler characteristic the pipeline must reproduce.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::handlebody::{self, HandleDecomposition, HandleError, IntersectionForm, InvariantReport};
use crate::word::{Label, Letter, Word};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown family {0:?} (expected one of m1, m2, m3, m1g, m1gn, m3gn, m4n)")]
    UnknownFamily(String),
    #[error(transparent)]
    Handle(#[from] HandleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForms {
    pub b1: i64,
    pub b2: i64,
    pub chi: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub name: String,
    pub decomposition: HandleDecomposition,
    pub asserted_form: IntersectionForm,
    pub closed_forms: ClosedForms,
}

impl FamilyRecord {
    pub fn report(&self) -> Result<InvariantReport, HandleError> {
        self.report_with_dimension(None)
    }

    pub fn report_with_dimension(&self, d: Option<f64>) -> Result<InvariantReport, HandleError> {
        handlebody::invariants(&self.decomposition, Some(self.asserted_form), d)
    }

    /// Compares the computed report against the closed forms.
    pub fn check(&self) -> Result<InvariantReport, String> {
        let r = self.report().map_err(|e| e.to_string())?;
        let got = ClosedForms { b1: r.betti[1] as i64, b2: r.betti[2] as i64, chi: r.chi };
        if got != self.closed_forms {
            return Err(format!("{}: computed {:?}, expected {:?}", self.name, got, self.closed_forms));
        }
        Ok(r)
    }
}

fn lab(c: char, i: Option<u32>) -> Label {
    Label::new(c, i).expect("family labels are lowercase")
}

/// Word from `(letter, index, exponent)` triples.
fn w(parts: &[(char, Option<u32>, i8)]) -> Word {
    Word::from_letters(parts.iter().map(|&(c, i, e)| Letter::new(lab(c, i), e)))
}

fn record(
    name: String,
    gens: Vec<Label>,
    rels: Vec<Word>,
    form: IntersectionForm,
    (b1, b2, chi): (i64, i64, i64),
) -> FamilyRecord {
    let decomposition = HandleDecomposition::from_relators(gens, rels).expect("family relators use declared generators").double();
    FamilyRecord { name, decomposition, asserted_form: form, closed_forms: ClosedForms { b1, b2, chi } }
}

fn plain(s: &str) -> Vec<Label> {
    s.chars().map(|c| lab(c, None)).collect()
}

fn parse(s: &str) -> Word {
    s.parse().expect("static relator")
}

pub fn m1() -> FamilyRecord {
    record("M1".into(), plain("abcdef"), vec![parse("ABabcD"), parse("edEC"), parse("FFFD")], IntersectionForm::H, (4, 2, -4))
}

pub fn m2() -> FamilyRecord {
    record("M2".into(), plain("abcdef"), vec![parse("ABabcD"), parse("eDEC"), parse("FFFD")], IntersectionForm::Zero, (3, 0, -4))
}

pub fn m3() -> FamilyRecord {
    record("M3".into(), plain("abcef"), vec![parse("Ababc"), parse("eCEc"), parse("FFFc")], IntersectionForm::H, (3, 2, -2))
}

fn genus_part(g: u32) -> Vec<(char, Option<u32>, i8)> {
    (1..=g).flat_map(|i| [('a', Some(i), -1), ('b', Some(i), -1), ('a', Some(i), 1), ('b', Some(i), 1)]).collect()
}

fn genus_gens(g: u32) -> Vec<Label> {
    (1..=g).flat_map(|i| [lab('a', Some(i)), lab('b', Some(i))]).collect()
}

fn need(ok: bool, msg: &str) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::BadParameter(msg.into()))
    }
}

pub fn m1_g(g: u32) -> Result<FamilyRecord, FamilyError> {
    need(g >= 1, "M1_g needs g >= 1")?;
    let mut gens = genus_gens(g);
    gens.extend(plain("cdef"));
    let mut main = genus_part(g);
    main.extend([('c', None, 1), ('d', None, -1)]);
    let rels = vec![w(&main), parse("edEC"), parse("FFFD")];
    let gi = g as i64;
    Ok(record(format!("M1_g(g={g})"), gens, rels, IntersectionForm::H, (2 * gi + 2, 2, -4 * gi)))
}

pub fn m1_gn(g: u32, n: u32) -> Result<FamilyRecord, FamilyError> {
    need(n >= 1, "M1_{g,n} needs n >= 1")?;
    let mut gens = genus_gens(g);
    for i in 1..=n {
        gens.extend([lab('c', Some(i)), lab('d', Some(i)), lab('e', Some(i))]);
    }
    let mut main = genus_part(g);
    main.extend((1..=n).map(|i| ('c', Some(i), 1)));
    main.extend((1..=n).rev().map(|i| ('d', Some(i), -1)));
    let mut rels = vec![w(&main)];
    for i in 1..=n {
        let i = Some(i);
        rels.push(w(&[('e', i, 1), ('d', i, 1), ('e', i, -1), ('c', i, -1)]));
    }
    let (gi, ni) = (g as i64, n as i64);
    Ok(record(
        format!("M1_gn(g={g},n={n})"),
        gens,
        rels,
        IntersectionForm::H,
        (2 * gi + 2 * ni, 2, 4 - 4 * gi - 4 * ni),
    ))
}

pub fn m3_gn(g: u32, n: u32) -> Result<FamilyRecord, FamilyError> {
    need(n >= 1, "M3_{g,n} needs n >= 1")?;
    let mut gens = genus_gens(g);
    for i in 1..=n {
        gens.extend("dghjklm".chars().map(|c| lab(c, Some(i))));
    }
    let mut main = genus_part(g);
    main.extend((1..=n).rev().map(|i| ('d', Some(i), -1)));
    let mut rels = vec![w(&main)];
    for i in 1..=n {
        let i = Some(i);
        rels.push(w(&[('g', i, -1), ('d', i, -1)]));
        rels.push(w(&[('k', i, 1), ('h', i, 1), ('k', i, -1), ('g', i, 1)]));
        rels.push(w(&[('l', i, -1), ('j', i, 1), ('l', i, 1), ('h', i, 1)]));
        rels.push(w(&[('m', i, -1), ('d', i, -1), ('m', i, 1), ('j', i, -1)]));
        rels.push(w(&[('g', i, 1), ('h', i, 1), ('j', i, 1)]));
    }
    let (gi, ni) = (g as i64, n as i64);
    Ok(record(
        format!("M3_gn(g={g},n={n})"),
        gens,
        rels,
        IntersectionForm::Unknown,
        (2 * gi + 3 * ni, 2 + 2 * ni, 4 - 4 * gi - 4 * ni),
    ))
}

/// The connecting relators `g_{i+1} j_i` and `m⁻¹ j_n m g_1` are a choice;
/// any words killing the same classes give the same homology.
pub fn m4_n(n: u32) -> Result<FamilyRecord, FamilyError> {
    need(n >= 1, "M4_n needs n >= 1")?;
    let mut gens = Vec::new();
    for i in 1..=n {
        gens.extend("ghjkl".chars().map(|c| lab(c, Some(i))));
    }
    gens.push(lab('m', None));
    let mut rels = Vec::new();
    for i in 1..=n {
        let i = Some(i);
        rels.push(w(&[('k', i, 1), ('h', i, 1), ('k', i, -1), ('g', i, 1)]));
        rels.push(w(&[('l', i, -1), ('j', i, 1), ('l', i, 1), ('h', i, 1)]));
        rels.push(w(&[('g', i, 1), ('h', i, 1), ('j', i, 1)]));
    }
    for i in 1..n {
        rels.push(w(&[('g', Some(i + 1), 1), ('j', Some(i), 1)]));
    }
    rels.push(w(&[('m', None, -1), ('j', Some(n), 1), ('m', None, 1), ('g', Some(1), 1)]));
    let ni = n as i64;
    Ok(record(format!("M4_n(n={n})"), gens, rels, IntersectionForm::Unknown, (2 * ni + 1, 2 * ni, -2 * ni)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    M1,
    M2,
    M3,
    M1g,
    M1gn,
    M3gn,
    M4n,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::M1, Family::M2, Family::M3, Family::M1g, Family::M1gn, Family::M3gn, Family::M4n];

    pub fn name(&self) -> &'static str {
        match self {
            Family::M1 => "m1",
            Family::M2 => "m2",
            Family::M3 => "m3",
            Family::M1g => "m1g",
            Family::M1gn => "m1gn",
            Family::M3gn => "m3gn",
            Family::M4n => "m4n",
        }
    }

    pub fn uses_g(&self) -> bool {
        matches!(self, Family::M1g | Family::M1gn | Family::M3gn)
    }

    pub fn uses_n(&self) -> bool {
        matches!(self, Family::M1gn | Family::M3gn | Family::M4n)
    }

    /// Builds a member; unused parameters are ignored. Missing ones default to 1.
    pub fn build(&self, g: Option<u32>, n: Option<u32>) -> Result<FamilyRecord, FamilyError> {
        let (g, n) = (g.unwrap_or(1), n.unwrap_or(1));
        match self {
            Family::M1 => Ok(m1()),
            Family::M2 => Ok(m2()),
            Family::M3 => Ok(m3()),
            Family::M1g => m1_g(g),
            Family::M1gn => m1_gn(g, n),
            Family::M3gn => m3_gn(g, n),
            Family::M4n => m4_n(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.to_ascii_lowercase().chars().filter(|c| *c != '_' && *c != '-').collect();
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub g: Option<u32>,
    pub n: Option<u32>,
    pub b1: usize,
    pub b2: usize,
    pub chi: i64,
    pub torsion: Vec<u64>,
    pub einstein_obstructed: bool,
    pub matches_closed_forms: bool,
}

/// Evaluates a family over a parameter grid. Parameters the family does not
/// take are collapsed to a single `None` entry.
pub fn sweep(family: Family, gs: &[u32], ns: &[u32]) -> Result<Vec<SweepRow>, FamilyError> {
    let gs: Vec<Option<u32>> = if family.uses_g() { gs.iter().copied().map(Some).collect() } else { vec![None] };
    let ns: Vec<Option<u32>> = if family.uses_n() { ns.iter().copied().map(Some).collect() } else { vec![None] };
    let mut rows = Vec::new();
    for &g in &gs {
        for &n in &ns {
            let rec = family.build(g, n)?;
            let r = rec.report()?;
            rows.push(SweepRow {
                g,
                n,
                b1: r.betti[1],
                b2: r.betti[2],
                chi: r.chi,
                torsion: r.h1.torsion_u64(),
                einstein_obstructed: r.einstein_obstructed,
                matches_closed_forms: rec.check().is_ok(),
            });
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Monotonicity {
    pub chi_strictly_decreasing: bool,
    pub b1_strictly_increasing: bool,
    pub einstein_flag_consistent: bool,
}

impl Monotonicity {
    pub fn all(&self) -> bool {
        self.chi_strictly_decreasing && self.b1_strictly_increasing && self.einstein_flag_consistent
    }
}

/// Checks the growth trends along each parameter with the other held fixed.
/// Rows are compared only when their parameters are consecutive in the grid.
pub fn monotonicity(rows: &[SweepRow]) -> Monotonicity {
    let mut chi_ok = true;
    let mut b1_ok = true;
    for (i, r) in rows.iter().enumerate() {
        for s in &rows[i + 1..] {
            let step_g = r.n == s.n && r.g.zip(s.g).is_some_and(|(a, b)| b > a);
            let step_n = r.g == s.g && r.n.zip(s.n).is_some_and(|(a, b)| b > a);
            if step_g || step_n {
                chi_ok &= s.chi < r.chi;
                b1_ok &= s.b1 > r.b1;
            }
        }
    }
    Monotonicity {
        chi_strictly_decreasing: chi_ok,
        b1_strictly_increasing: b1_ok,
        einstein_flag_consistent: rows.iter().all(|r| r.einstein_obstructed == (r.chi < 0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlinalg::AbelianInvariants;
    use num_bigint::BigInt;

    #[test]
    fn base_manifolds() {
        let r1 = m1().check().unwrap();
        assert_eq!(r1.h1, AbelianInvariants::free(4));
        assert_eq!(r1.intersection_form, IntersectionForm::H);
        let r2 = m2().check().unwrap();
        assert_eq!(r2.h1.torsion, vec![BigInt::from(6)]);
        assert_eq!(r2.h2, AbelianInvariants { free_rank: 0, torsion: vec![BigInt::from(6)] });
        assert_eq!(r2.intersection_form, IntersectionForm::Zero);
        assert_eq!(m3().check().unwrap().chi, -2);
    }

    #[test]
    fn m1_g_one_matches_m1() {
        assert_eq!(m1_g(1).unwrap().report().unwrap(), m1().report().unwrap());
        let r = m1_g(5).unwrap().check().unwrap();
        assert_eq!((r.betti[1], r.chi), (12, -20));
    }

    #[test]
    fn documented_points() {
        let r = m1_gn(2, 3).unwrap().check().unwrap();
        assert_eq!((r.betti[1], r.chi), (10, -16));
        let r = m1_gn(1, 1).unwrap().check().unwrap();
        assert_eq!((r.betti[1], r.chi), (4, -4));
        let r = m3_gn(0, 1).unwrap().check().unwrap();
        assert_eq!((r.betti[1], r.betti[2], r.chi), (3, 4, 0));
        assert!(!r.einstein_obstructed);
        assert_eq!(m3_gn(3, 2).unwrap().check().unwrap().chi, -16);
        let r = m4_n(3).unwrap().check().unwrap();
        assert_eq!((r.betti[1], r.chi), (7, -6));
        let r = m4_n(1).unwrap().check().unwrap();
        assert_eq!((r.betti[1], r.betti[2], r.chi), (3, 2, -2));
    }

    #[test]
    fn m4_survivors_are_k_l_m() {
        // Killing k_i, l_i and m should leave a perfect group.
        let rec = m4_n(2).unwrap();
        let mut hd = rec.decomposition.clone();
        for l in ["k_1", "k_2", "l_1", "l_2", "m"] {
            hd.two_handles.push(handlebody::TwoHandle { word: l.parse().unwrap(), framing: 0 });
        }
        let h1 = handlebody::presentation_of(&hd).unwrap().abelianization().unwrap();
        assert!(h1.is_trivial());
    }

    #[test]
    fn m3_chain_ranks() {
        for g in 0..4 {
            for n in 1..4 {
                let cr = handlebody::chain_ranks(&m3_gn(g, n).unwrap().decomposition).unwrap();
                let (g, n) = (g as usize, n as usize);
                assert_eq!(cr.0, [1, 2 * g + 7 * n, 10 * n + 2, 2 * g + 7 * n, 1]);
            }
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(m1_g(0), Err(FamilyError::BadParameter(_))));
        assert!(m1_gn(1, 0).is_err());
        assert!(m3_gn(1, 0).is_err());
        assert!(m4_n(0).is_err());
        assert!(m1_gn(0, 1).is_ok());
    }

    #[test]
    fn names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("M1_g".parse::<Family>().unwrap(), Family::M1g);
        assert!("m9".parse::<Family>().is_err());
    }

    #[test]
    fn sweep_and_trends() {
        let rows = sweep(Family::M3gn, &[1, 2, 3], &[1, 2]).unwrap();
        assert_eq!(rows.len(), 6);
        assert!(rows.iter().all(|r| r.matches_closed_forms && r.b2 == 2 + 2 * r.n.unwrap() as usize));
        assert!(monotonicity(&rows).all());
        let rows = sweep(Family::M1, &[1, 2], &[1, 2]).unwrap();
        assert_eq!(rows.len(), 1);
    }
}
