//! Orbit sampling of limit sets.
//!
//! The sample at depth `D` is the set of images of the seed points under
//! all words of length `<= D`, built breadth-first over points with
//! near-duplicates (chordal distance below `tau_dedup`) merged. Because
//! each level applies every generator to every new point, the depth-`D`
//! sample mapped by any generator lies within `tau_dedup` of the depth
//! `D + 1` sample.

use std::collections::HashMap;

use serde::Serialize;

use super::group::GroupSpec;
use crate::moebius::{ComplexPoint, MoebiusTransform, TransformClass};

/// Default chordal merge radius on the unit sphere.
pub const DEFAULT_TAU_DEDUP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitSetSample {
    /// Canonically sorted, infinity last.
    pub points: Vec<ComplexPoint>,
    pub depth: usize,
    pub seed_points: Vec<ComplexPoint>,
    pub generator_count: usize,
    pub tau_dedup: f64,
    /// Set when the group is elementary; the sample then holds at most the
    /// seeds and their finitely many images.
    pub elementary: bool,
}

/// Points on the sphere with chordal near-duplicate detection.
pub struct PointSet {
    points: Vec<ComplexPoint>,
    sphere: Vec<[f64; 3]>,
    next: Vec<u32>,
    cells: HashMap<[i64; 3], u32>,
    cell: f64,
}

const NONE: u32 = u32::MAX;

impl PointSet {
    pub fn new(tau: f64) -> Self {
        assert!(tau > 0.0, "merge radius must be positive");
        PointSet { points: Vec::new(), sphere: Vec::new(), next: Vec::new(), cells: HashMap::new(), cell: tau }
    }

    fn key(&self, s: &[f64; 3]) -> [i64; 3] {
        [(s[0] / self.cell).floor() as i64, (s[1] / self.cell).floor() as i64, (s[2] / self.cell).floor() as i64]
    }

    /// Whether some stored point lies within `self.cell` of `p`.
    pub fn contains_near(&self, p: &ComplexPoint) -> bool {
        let s = p.to_sphere();
        let k = self.key(&s);
        let r2 = self.cell * self.cell;
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    let mut i = self.cells.get(&[k[0] + dx, k[1] + dy, k[2] + dz]).copied().unwrap_or(NONE);
                    while i != NONE {
                        let t = &self.sphere[i as usize];
                        let d2 = (t[0] - s[0]).powi(2) + (t[1] - s[1]).powi(2) + (t[2] - s[2]).powi(2);
                        if d2 <= r2 {
                            return true;
                        }
                        i = self.next[i as usize];
                    }
                }
            }
        }
        false
    }

    /// Inserts `p` unless it duplicates a stored point. Returns whether it was added.
    pub fn insert(&mut self, p: ComplexPoint) -> bool {
        if let ComplexPoint::Finite(z) = p {
            if !z.is_finite() {
                return false;
            }
        }
        if self.contains_near(&p) {
            return false;
        }
        let s = p.to_sphere();
        let k = self.key(&s);
        let idx = self.points.len() as u32;
        let head = self.cells.insert(k, idx).unwrap_or(NONE);
        self.next.push(head);
        self.points.push(p);
        self.sphere.push(s);
        true
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_sorted(self) -> Vec<ComplexPoint> {
        let mut pts = self.points;
        pts.sort_by(|a, b| a.canonical_cmp(b));
        pts
    }
}

/// Fixed points of the loxodromic and parabolic generators, in generator order.
pub fn default_seeds(g: &GroupSpec) -> Vec<ComplexPoint> {
    let mut set = PointSet::new(1e-12);
    let mut out = Vec::new();
    for gen in g.generators() {
        match gen.transform.classify() {
            Ok(TransformClass::Loxodromic { .. }) | Ok(TransformClass::Parabolic) => {
                for p in gen.transform.fixed_points().unwrap_or_default() {
                    if set.insert(p) {
                        out.push(p);
                    }
                }
            }
            _ => {}
        }
    }
    out
}

/// Heuristic: a group is treated as elementary when all generators
/// together fix at most two points of the sphere.
pub fn is_elementary(g: &GroupSpec) -> bool {
    let mut set = PointSet::new(1e-9);
    for gen in g.generators() {
        for p in gen.transform.fixed_points().unwrap_or_default() {
            set.insert(p);
        }
    }
    set.len() <= 2
}

fn symbol_transforms(g: &GroupSpec) -> Vec<MoebiusTransform> {
    g.generators().iter().flat_map(|x| [x.transform, x.transform.inverse()]).collect()
}

pub fn limit_set_sample(g: &GroupSpec, depth: usize, seeds: Option<&[ComplexPoint]>) -> LimitSetSample {
    limit_set_sample_with(g, depth, seeds, DEFAULT_TAU_DEDUP)
}

/// Deterministic orbit sample; see the module docs.
pub fn limit_set_sample_with(g: &GroupSpec, depth: usize, seeds: Option<&[ComplexPoint]>, tau_dedup: f64) -> LimitSetSample {
    let seed_points = match seeds {
        Some(s) => s.to_vec(),
        None => default_seeds(g),
    };
    let syms = symbol_transforms(g);
    let mut set = PointSet::new(tau_dedup);
    let mut frontier: Vec<ComplexPoint> = seed_points.iter().copied().filter(|p| set.insert(*p)).collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in &frontier {
            for m in &syms {
                let q = m.apply(*p);
                if set.insert(q) {
                    next.push(q);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    LimitSetSample {
        points: set.into_sorted(),
        depth,
        seed_points,
        generator_count: g.len(),
        tau_dedup,
        elementary: is_elementary(g),
    }
}

/// First point `p` of `small` and generator image `g(p)` with no point of
/// `big` within `eps`, if any.
pub fn forward_invariance_violation(
    g: &GroupSpec,
    small: &LimitSetSample,
    big: &LimitSetSample,
    eps: f64,
) -> Option<(ComplexPoint, ComplexPoint)> {
    let mut index = PointSet::new(eps);
    for p in &big.points {
        // Bypass dedup so every point is indexed.
        let s = p.to_sphere();
        let k = index.key(&s);
        let idx = index.points.len() as u32;
        let head = index.cells.insert(k, idx).unwrap_or(NONE);
        index.next.push(head);
        index.points.push(*p);
        index.sphere.push(s);
    }
    let syms = symbol_transforms(g);
    for p in &small.points {
        for m in &syms {
            let q = m.apply(*p);
            if !index.contains_near(&q) {
                return Some((*p, q));
            }
        }
    }
    None
}

/// Writes `re,im` rows (infinity as `inf,inf`) with a header line.
/// Floats use the shortest round-trip form.
pub fn write_csv<W: std::io::Write>(points: &[ComplexPoint], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["re", "im"])?;
    for p in points {
        match p {
            ComplexPoint::Infinity => w.write_record(["inf", "inf"])?,
            // `+ 0.0` folds -0.0 into 0.0.
            ComplexPoint::Finite(z) => w.write_record([format!("{:?}", z.re + 0.0), format!("{:?}", z.im + 0.0)])?,
        }
    }
    w.flush()?;
    Ok(())
}

/// Reads the format written by [`write_csv`].
pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<ComplexPoint>, String> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(input);
    let headers = r.headers().map_err(|e| e.to_string())?.clone();
    if headers.len() != 2 || &headers[0] != "re" || &headers[1] != "im" {
        return Err(format!("expected header \"re,im\", got {:?}", headers.iter().collect::<Vec<_>>().join(",")));
    }
    let mut out = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| e.to_string())?;
        let field = |k: usize| rec.get(k).ok_or_else(|| format!("row {}: missing column", i + 2));
        let (a, b) = (field(0)?, field(1)?);
        if a.eq_ignore_ascii_case("inf") || b.eq_ignore_ascii_case("inf") {
            out.push(ComplexPoint::Infinity);
            continue;
        }
        let parse = |s: &str| s.parse::<f64>().map_err(|_| format!("row {}: not a number: {s:?}", i + 2));
        let (re, im) = (parse(a)?, parse(b)?);
        if !(re.is_finite() && im.is_finite()) {
            return Err(format!("row {}: non-finite coordinate", i + 2));
        }
        out.push(ComplexPoint::new(re, im));
    }
    Ok(out)
}
