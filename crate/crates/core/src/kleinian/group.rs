//! Labeled generator sets and the elementary assembly steps: Schottky
//! circle pairings, conjugation, extended-Fuchsian adjoining, complex twists.

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::enumerate::{elements_up_to, Element};
use super::region::Region;
use super::KleinianError;
use crate::moebius::{pair_circles, GeneralizedCircle, MoebiusTransform, TAU_FIX};
use crate::word::{Label, Word};

/// Search depth for the `g² ∈ G₀` and conjugation-stability checks.
pub const D_EXT: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub label: Label,
    pub transform: MoebiusTransform,
    /// The circle pair this generator was built from, when known.
    pub pair: Option<(GeneralizedCircle, GeneralizedCircle)>,
}

impl Generator {
    pub fn new(label: Label, transform: MoebiusTransform) -> Self {
        Generator { label, transform, pair: None }
    }

    pub fn from_pair(label: Label, c1: GeneralizedCircle, c2: GeneralizedCircle) -> Result<Self, KleinianError> {
        Ok(Generator { label, transform: pair_circles(&c1, &c2)?, pair: Some((c1, c2)) })
    }
}

#[derive(Serialize, Deserialize)]
struct PairJson {
    c1: GeneralizedCircle,
    c2: GeneralizedCircle,
}

#[derive(Serialize, Deserialize)]
struct GeneratorJson {
    label: Label,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<MoebiusTransform>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pair: Option<PairJson>,
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let json = match self.pair {
            Some((c1, c2)) => GeneratorJson { label: self.label.clone(), matrix: None, pair: Some(PairJson { c1, c2 }) },
            None => GeneratorJson { label: self.label.clone(), matrix: Some(self.transform), pair: None },
        };
        json.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = GeneratorJson::deserialize(d)?;
        match (j.matrix, j.pair) {
            (Some(m), None) => Ok(Generator::new(j.label, m)),
            (None, Some(p)) => Generator::from_pair(j.label, p.c1, p.c2).map_err(D::Error::custom),
            (Some(m), Some(p)) => {
                let g = Generator::from_pair(j.label, p.c1, p.c2).map_err(D::Error::custom)?;
                if !g.transform.approx_eq(&m, 1e-6) {
                    return Err(D::Error::custom(format!("generator {}: matrix disagrees with its circle pair", g.label)));
                }
                Ok(g)
            }
            (None, None) => Err(D::Error::custom(format!("generator {} needs \"matrix\" or \"pair\"", j.label))),
        }
    }
}

/// One assembly step, kept for reporting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    Input {
        note: String,
    },
    FuchsianSchottky {
        genus: u32,
        holes: u32,
        circles: usize,
    },
    ExtendedFuchsian {
        label: Label,
        accepted_by: String,
        note: String,
    },
    Conjugated {
        by: MoebiusTransform,
    },
    FirstCombination {
        amalgamated: Label,
        separator: GeneralizedCircle,
        b1: Region,
        b2: Region,
        left: Vec<Step>,
        right: Vec<Step>,
    },
    SecondCombination {
        h1: Label,
        h2: Label,
        f: Label,
        b1: Region,
        b2: Region,
        relation: String,
        note: String,
    },
    ComplexTwist {
        label: Label,
        root: Option<Label>,
        p: i64,
        q: i64,
        lambda: f64,
        description: String,
    },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Input { note } => write!(f, "input: {note}"),
            Step::FuchsianSchottky { genus, holes, circles } => {
                write!(f, "Fuchsian Schottky group for genus {genus} with {holes} holes ({circles} circles)")
            }
            Step::ExtendedFuchsian { label, accepted_by, note } => {
                write!(f, "adjoined {label} as extended-Fuchsian element ({accepted_by}); {note}")
            }
            Step::Conjugated { by } => write!(f, "conjugated by {by}"),
            Step::FirstCombination { amalgamated, left, right, .. } => write!(
                f,
                "first combination amalgamated over <{amalgamated}> ({} + {} prior steps)",
                left.len(),
                right.len()
            ),
            Step::SecondCombination { f: fl, relation, note, .. } => write!(f, "second combination adjoining {fl}: {relation}; {note}"),
            Step::ComplexTwist { description, .. } => f.write_str(description),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupSpec {
    generators: Vec<Generator>,
    provenance: Vec<Step>,
}

#[derive(Deserialize)]
struct GroupJson {
    generators: Vec<Generator>,
    #[serde(default)]
    provenance: Vec<Step>,
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = GroupJson::deserialize(d)?;
        GroupSpec::new(j.generators, j.provenance).map_err(serde::de::Error::custom)
    }
}

impl GroupSpec {
    /// Checks labels (single letters, distinct) and rejects identity generators.
    pub fn new(generators: Vec<Generator>, provenance: Vec<Step>) -> Result<Self, KleinianError> {
        let mut spec = GroupSpec { generators: Vec::new(), provenance };
        for g in generators {
            spec.push(g)?;
        }
        Ok(spec)
    }

    pub fn trivial() -> Self {
        GroupSpec { generators: Vec::new(), provenance: Vec::new() }
    }

    pub fn cyclic(label: Label, m: MoebiusTransform) -> Result<Self, KleinianError> {
        GroupSpec::new(vec![Generator::new(label, m)], vec![Step::Input { note: "cyclic group".into() }])
    }

    fn push(&mut self, g: Generator) -> Result<(), KleinianError> {
        let s = g.label.as_str();
        if s.len() != 1 {
            return Err(KleinianError::BadLabel(g.label));
        }
        if self.get(&g.label).is_some() {
            return Err(KleinianError::LabelCollision(g.label));
        }
        if g.transform.is_identity(TAU_FIX) {
            return Err(KleinianError::IdentityGenerator(g.label));
        }
        self.generators.push(g);
        Ok(())
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn provenance(&self) -> &[Step] {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn labels(&self) -> Vec<Label> {
        self.generators.iter().map(|g| g.label.clone()).collect()
    }

    pub fn transforms(&self) -> Vec<MoebiusTransform> {
        self.generators.iter().map(|g| g.transform).collect()
    }

    pub fn get(&self, label: &Label) -> Option<&Generator> {
        self.generators.iter().find(|g| &g.label == label)
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.generators.iter().position(|g| &g.label == label)
    }

    pub fn transform(&self, label: &Label) -> Result<MoebiusTransform, KleinianError> {
        self.get(label).map(|g| g.transform).ok_or_else(|| KleinianError::UnknownLabel(label.clone()))
    }

    /// First unused letter in alphabetical order.
    pub fn next_free_label(&self) -> Result<Label, KleinianError> {
        ('a'..='z')
            .map(|c| Label::new(c, None).expect("lowercase"))
            .find(|l| self.get(l).is_none())
            .ok_or(KleinianError::LabelsExhausted)
    }

    /// Adds a generator and records the step.
    pub fn with_generator(&self, g: Generator, step: Step) -> Result<GroupSpec, KleinianError> {
        let mut out = self.clone();
        out.push(g)?;
        out.provenance.push(step);
        Ok(out)
    }

    pub fn with_step(mut self, step: Step) -> GroupSpec {
        self.provenance.push(step);
        self
    }

    pub(crate) fn from_parts_unchecked(generators: Vec<Generator>, provenance: Vec<Step>) -> GroupSpec {
        GroupSpec { generators, provenance }
    }

    /// Every reduced word of length `<= depth`, evaluated, in shortlex order.
    pub fn elements(&self, depth: usize) -> Vec<Element> {
        elements_up_to(&self.transforms(), depth)
    }

    /// Evaluates a word in the generators.
    pub fn evaluate(&self, word: &Word) -> Result<MoebiusTransform, KleinianError> {
        let mut m = MoebiusTransform::IDENTITY;
        for l in word.letters() {
            let g = self.transform(&l.label)?;
            m = m.compose(&if l.exp > 0 { g } else { g.inverse() });
        }
        Ok(m)
    }

    /// Shortest word of length `<= depth` equal to `target` up to sign.
    pub fn find_word(&self, target: &MoebiusTransform, depth: usize) -> Option<Word> {
        let labels = self.labels();
        self.elements(depth)
            .into_iter()
            .find(|e| e.matrix.approx_eq(target, TAU_FIX * 10.0))
            .map(|e| super::word_of(&e.syms, &labels))
    }
}

/// Circle layout for [`fuchsian_schottky`]: identical circles of the given
/// radius, centered on the real axis `spacing` apart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchottkyLayout {
    pub radius: f64,
    pub spacing: f64,
}

impl Default for SchottkyLayout {
    fn default() -> Self {
        SchottkyLayout { radius: 1.0, spacing: 3.0 }
    }
}

/// Fuchsian Schottky group for a genus-`g` surface with `n` holes, from
/// `4g + 2(n-1)` identical circles on the real axis. Handle pairs are
/// interleaved (`C_a, C_b, C_a', C_b'`), hole pairs adjacent. `(0, 1)` is
/// the disk and gives the trivial group.
pub fn fuchsian_schottky(g: u32, n: u32, layout: SchottkyLayout) -> Result<GroupSpec, KleinianError> {
    if g == 0 && n == 0 {
        return Err(KleinianError::BadParameter("(g, n) = (0, 0) is closed; no Fuchsian Schottky group".into()));
    }
    if !(layout.radius > 0.0 && layout.radius.is_finite() && layout.spacing.is_finite()) {
        return Err(KleinianError::BadParameter("layout radius must be positive and finite".into()));
    }
    let rank = (2 * g + n) as usize - 1;
    if rank > 26 {
        return Err(KleinianError::LabelsExhausted);
    }
    let circles_n = 2 * rank;
    if circles_n >= 2 && layout.spacing <= 2.0 * layout.radius {
        return Err(KleinianError::OverlappingCircles(0, 1));
    }
    let centers: Vec<f64> = (0..circles_n).map(|k| (k as f64 - (circles_n as f64 - 1.0) / 2.0) * layout.spacing).collect();
    let circle = |k: usize| GeneralizedCircle::circle(Complex64::new(centers[k], 0.0), layout.radius);
    // (source, target) circle indices per generator.
    let mut pairs = Vec::with_capacity(rank);
    for i in 0..g as usize {
        let b = 4 * i;
        pairs.push((b, b + 2));
        pairs.push((b + 1, b + 3));
    }
    for j in 0..(n as usize).saturating_sub(1) {
        let b = 4 * g as usize + 2 * j;
        pairs.push((b, b + 1));
    }
    let mut gens = Vec::with_capacity(rank);
    for (idx, (s, t)) in pairs.into_iter().enumerate() {
        let label = Label::new((b'a' + idx as u8) as char, None).expect("lowercase");
        gens.push(Generator::from_pair(label, circle(s)?, circle(t)?)?);
    }
    GroupSpec::new(gens, vec![Step::FuchsianSchottky { genus: g, holes: n, circles: circles_n }])
}

/// `M G M⁻¹`. Circle-pair sources are dropped since the images may be lines.
pub fn conjugate(group: &GroupSpec, m: &MoebiusTransform) -> GroupSpec {
    let gens = group
        .generators
        .iter()
        .map(|g| Generator::new(g.label.clone(), g.transform.conjugate_by(m)))
        .collect();
    let mut prov = group.provenance.clone();
    prov.push(Step::Conjugated { by: *m });
    GroupSpec::from_parts_unchecked(gens, prov)
}

/// Adjoins `g` to a Fuchsian group `G₀` to make an extended Fuchsian group.
/// Accepted when `g²` is a word of length `<= D_EXT` in `G₀`, or when
/// conjugation by `g` carries every generator of `G₀` to such a word.
pub fn adjoin_extension(g0: &GroupSpec, g: MoebiusTransform, label: Option<Label>) -> Result<GroupSpec, KleinianError> {
    let label = match label {
        Some(l) => l,
        None => g0.next_free_label()?,
    };
    if g.is_identity(TAU_FIX) {
        return Err(KleinianError::IdentityGenerator(label));
    }
    let square = g.compose(&g);
    let accepted_by = if let Some(w) = g0.find_word(&square, D_EXT) {
        format!("{label}^2 = {}", w.to_exponent_string())
    } else {
        let gi = g.inverse();
        let stable = g0.generators.iter().all(|x| {
            g0.find_word(&x.transform.conjugate_by(&g), D_EXT).is_some() && g0.find_word(&x.transform.conjugate_by(&gi), D_EXT).is_some()
        });
        if !stable {
            return Err(KleinianError::ExtensionCheckFailed(format!(
                "{label}^2 is not a word of length <= {D_EXT} and conjugation by {label} does not preserve the group"
            )));
        }
        format!("conjugation by {label} preserves the group")
    };
    g0.with_generator(
        Generator::new(label.clone(), g),
        Step::ExtendedFuchsian { label, accepted_by, note: "index-2 Fuchsian subgroup; twisted I-bundle quotient".into() },
    )
}

/// Adjoins `a₀ = N ∘ (z -> λ^{1/q} e^{2πip/q} z) ∘ N⁻¹`, where `N` is the
/// normalizing frame of generator `a`, and checks `a₀^q = a`.
/// `q = 1` is a no-op (`a₀ = a`).
pub fn complex_twist(
    group: &GroupSpec,
    a_label: &Label,
    p: i64,
    q: i64,
    lambda: f64,
    new_label: Option<Label>,
) -> Result<GroupSpec, KleinianError> {
    if q < 1 {
        return Err(KleinianError::BadParameter(format!("q must be >= 1, got {q}")));
    }
    if !(lambda > 1.0 && lambda.is_finite()) {
        return Err(KleinianError::BadParameter(format!("lambda must exceed 1, got {lambda}")));
    }
    if p.gcd(&q) != 1 {
        return Err(KleinianError::NotCoprime { p, q });
    }
    let a = group.transform(a_label)?;
    let description = format!("{p}/{q}-complex twist along {a_label}");
    if q == 1 {
        return Ok(group.clone().with_step(Step::ComplexTwist { label: a_label.clone(), root: None, p, q, lambda, description }));
    }
    let frame = a.normalizing_frame()?;
    let root = MoebiusTransform::scaling(lambda.powf(1.0 / q as f64))?.compose(&MoebiusTransform::rotation(p, q)?);
    let a0 = root.conjugate_by(&frame);
    let power = a0.pow(q);
    if !power.approx_eq(&a, TAU_FIX * 10.0) {
        let residual = power
            .entries()
            .iter()
            .zip(a.entries().iter())
            .map(|(x, y)| (x - y).norm().min((x + y).norm()))
            .fold(0.0, f64::max);
        return Err(KleinianError::PowerCheckFailed(residual));
    }
    let label = match new_label {
        Some(l) => l,
        None => group.next_free_label()?,
    };
    group.with_generator(
        Generator::new(label.clone(), a0),
        Step::ComplexTwist { label: a_label.clone(), root: Some(label), p, q, lambda, description },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::TransformClass;
    use std::f64::consts::PI;

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    #[test]
    fn schottky_sigma_1_3() {
        let g = fuchsian_schottky(1, 3, SchottkyLayout::default()).unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g.provenance()[0], Step::FuchsianSchottky { genus: 1, holes: 3, circles: 8 });
        for gen in g.generators() {
            assert_eq!(gen.transform.classify().unwrap(), TransformClass::Loxodromic { hyperbolic: true });
            // Real matrices: the upper half-plane is preserved.
            assert!(gen.transform.entries().iter().all(|z| z.im.abs() < 1e-12));
        }
    }

    #[test]
    fn schottky_edge_cases() {
        let annulus = fuchsian_schottky(0, 2, SchottkyLayout::default()).unwrap();
        assert_eq!(annulus.len(), 1);
        assert!(annulus.generators()[0].transform.is_loxodromic());
        assert!(fuchsian_schottky(0, 1, SchottkyLayout::default()).unwrap().is_empty());
        assert!(matches!(fuchsian_schottky(0, 0, SchottkyLayout::default()), Err(KleinianError::BadParameter(_))));
        let tight = SchottkyLayout { radius: 1.0, spacing: 1.5 };
        assert!(matches!(fuchsian_schottky(1, 1, tight), Err(KleinianError::OverlappingCircles(..))));
    }

    #[test]
    fn spec_validation() {
        let id = Generator::new(l("a"), MoebiusTransform::IDENTITY);
        assert!(matches!(GroupSpec::new(vec![id], vec![]), Err(KleinianError::IdentityGenerator(_))));
        let s = MoebiusTransform::scaling(4.0).unwrap();
        let dup = vec![Generator::new(l("a"), s), Generator::new(l("a"), s)];
        assert!(matches!(GroupSpec::new(dup, vec![]), Err(KleinianError::LabelCollision(_))));
        assert!(matches!(GroupSpec::cyclic(l("a_1"), s), Err(KleinianError::BadLabel(_))));
    }

    #[test]
    fn extension_by_square_root() {
        let lambda: f64 = 9.0;
        let g0 = GroupSpec::cyclic(l("a"), MoebiusTransform::scaling(lambda).unwrap()).unwrap();
        let g = MoebiusTransform::rotation(1, 2).unwrap().compose(&MoebiusTransform::scaling(lambda.sqrt()).unwrap());
        let ext = adjoin_extension(&g0, g, None).unwrap();
        assert_eq!(ext.labels(), vec![l("a"), l("b")]);
        assert!(matches!(ext.provenance().last(), Some(Step::ExtendedFuchsian { .. })));
        assert!(matches!(adjoin_extension(&g0, MoebiusTransform::IDENTITY, None), Err(KleinianError::IdentityGenerator(_))));
        let unrelated = MoebiusTransform::from_real(2.0, 1.0, 1.0, 1.0).unwrap();
        assert!(matches!(adjoin_extension(&g0, unrelated, None), Err(KleinianError::ExtensionCheckFailed(_))));
    }

    #[test]
    fn twists() {
        let a = MoebiusTransform::scaling(4.0).unwrap();
        let n = MoebiusTransform::from_real(1.0, 2.0, 1.0, 3.0).unwrap();
        let g = GroupSpec::cyclic(l("a"), a.conjugate_by(&n)).unwrap();
        for (p, q) in [(1, 3), (2, 3), (1, 5)] {
            let t = complex_twist(&g, &l("a"), p, q, 4.0, None).unwrap();
            let a0 = t.transform(&l("b")).unwrap();
            assert!(a0.pow(q).approx_eq(&g.transform(&l("a")).unwrap(), 1e-9));
            match t.provenance().last().unwrap() {
                Step::ComplexTwist { description, .. } => assert!(description.starts_with(&format!("{p}/{q}-complex twist"))),
                s => panic!("unexpected step {s:?}"),
            }
        }
        let same = complex_twist(&g, &l("a"), 0, 1, 4.0, None).unwrap();
        assert_eq!(same.len(), 1);
        assert!(matches!(complex_twist(&g, &l("a"), 2, 4, 4.0, None), Err(KleinianError::NotCoprime { .. })));
        assert!(matches!(complex_twist(&g, &l("a"), 1, 3, 5.0, None), Err(KleinianError::PowerCheckFailed(_))));
        let rotated = GroupSpec::cyclic(l("a"), MoebiusTransform::rotation_angle(PI / 2.0)).unwrap();
        assert!(complex_twist(&rotated, &l("a"), 1, 3, 4.0, None).is_err());
    }

    #[test]
    fn conjugation_keeps_labels() {
        let g = fuchsian_schottky(1, 1, SchottkyLayout::default()).unwrap();
        let m = MoebiusTransform::from_real(1.0, 1.0, 0.0, 1.0).unwrap();
        let c = conjugate(&g, &m);
        assert_eq!(c.labels(), g.labels());
        for (x, y) in c.generators().iter().zip(g.generators()) {
            assert!(x.transform.approx_eq(&y.transform.conjugate_by(&m), 1e-12));
            assert!(x.pair.is_none());
        }
    }

    #[test]
    fn json_round_trip() {
        let g = fuchsian_schottky(1, 1, SchottkyLayout::default()).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert!(text.contains("\"pair\""));
        let back: GroupSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        let m = r#"{"generators":[{"label":"a","matrix":{"a":[2.0,0.0],"b":[0.0,0.0],"c":[0.0,0.0],"d":[0.5,0.0]}}]}"#;
        let cyc: GroupSpec = serde_json::from_str(m).unwrap();
        assert!(cyc.transform(&l("a")).unwrap().approx_eq(&MoebiusTransform::scaling(4.0).unwrap(), 1e-12));
        assert!(serde_json::from_str::<GroupSpec>(r#"{"generators":[{"label":"a"}]}"#).is_err());
    }

    #[test]
    fn evaluate_and_find() {
        let a = MoebiusTransform::scaling(4.0).unwrap();
        let g = GroupSpec::cyclic(l("a"), a).unwrap();
        let w: Word = "aaA a".parse().unwrap();
        assert!(g.evaluate(&w).unwrap().approx_eq(&a.pow(2), 1e-12));
        assert_eq!(g.find_word(&a.pow(-3), 4).unwrap().to_string(), "AAA");
        assert!(g.find_word(&MoebiusTransform::rotation(1, 3).unwrap(), 4).is_none());
    }
}
