//! Box-counting dimension of planar point samples.

use std::collections::HashSet;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::KleinianError;
use crate::moebius::ComplexPoint;

pub const MIN_POINTS: usize = 100;

/// Geometric ladder of box sizes `largest * ratio^k`, `k = 0..count`.
/// `largest` defaults to a quarter of the sample diameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaleLadder {
    pub count: usize,
    pub ratio: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub largest: Option<f64>,
}

impl Default for ScaleLadder {
    fn default() -> Self {
        ScaleLadder { count: 8, ratio: 0.5, largest: None }
    }
}

impl ScaleLadder {
    pub fn scales(&self, diameter: f64) -> Result<Vec<f64>, KleinianError> {
        if self.count < 2 {
            return Err(KleinianError::DegenerateScales(format!("need at least 2 scales, got {}", self.count)));
        }
        if !(self.ratio > 0.0 && self.ratio < 1.0) {
            return Err(KleinianError::DegenerateScales(format!("ratio must lie in (0, 1), got {}", self.ratio)));
        }
        let top = self.largest.unwrap_or(diameter / 4.0);
        if !(top.is_finite() && top > 0.0) {
            return Err(KleinianError::DegenerateScales(format!("largest scale must be positive, got {top}")));
        }
        Ok((0..self.count).map(|k| top * self.ratio.powi(k as i32)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimensionEstimate {
    pub d: f64,
    pub fit_r2: f64,
    #[serde(rename = "scales")]
    pub scales_used: Vec<f64>,
    #[serde(rename = "points")]
    pub point_count: usize,
}

fn bbox(pts: &[Complex64]) -> (f64, f64, f64, f64) {
    pts.iter().fold((f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY), |(a, b, c, d), z| {
        (a.min(z.re), b.min(z.im), c.max(z.re), d.max(z.im))
    })
}

/// Pole for the chart change: the node of a 17x17 grid over the enlarged
/// bounding box farthest from the sample.
fn pole_off_sample(pts: &[Complex64]) -> Complex64 {
    let (x0, y0, x1, y1) = bbox(pts);
    let pad = ((x1 - x0).max(y1 - y0)).max(1.0) * 0.5;
    let (x0, y0, x1, y1) = (x0 - pad, y0 - pad, x1 + pad, y1 + pad);
    let n = 16;
    let mut best = (f64::NEG_INFINITY, Complex64::new(x0, y0));
    for i in 0..=n {
        for j in 0..=n {
            let c = Complex64::new(x0 + (x1 - x0) * i as f64 / n as f64, y0 + (y1 - y0) * j as f64 / n as f64);
            let gap = pts.iter().map(|z| (z - c).norm()).fold(f64::INFINITY, f64::min);
            if gap > best.0 {
                best = (gap, c);
            }
        }
    }
    best.1
}

/// Finite planar coordinates for a sample. If infinity is present, the
/// whole sample is moved by `z -> 1/(z - z0)` with `z0` off the sample.
pub fn planar_chart(points: &[ComplexPoint]) -> Vec<Complex64> {
    let finite: Vec<Complex64> = points.iter().filter_map(|p| p.finite()).filter(|z| z.is_finite()).collect();
    if finite.len() == points.len() || finite.is_empty() {
        return finite;
    }
    let z0 = pole_off_sample(&finite);
    let mut out: Vec<Complex64> = finite.iter().map(|z| 1.0 / (z - z0)).collect();
    out.push(Complex64::new(0.0, 0.0));
    out
}

fn box_count(pts: &[Complex64], origin: (f64, f64), eps: f64) -> usize {
    let cells: HashSet<(i64, i64)> =
        pts.iter().map(|z| (((z.re - origin.0) / eps).floor() as i64, ((z.im - origin.1) / eps).floor() as i64)).collect();
    cells.len()
}

/// Least-squares slope of `log N(eps)` against `log(1/eps)`, clamped to `[0, 2]`.
pub fn box_counting_dimension(points: &[ComplexPoint], ladder: &ScaleLadder) -> Result<DimensionEstimate, KleinianError> {
    let pts = planar_chart(points);
    if pts.len() < MIN_POINTS {
        return Err(KleinianError::TooFewPoints(pts.len()));
    }
    let (x0, y0, x1, y1) = bbox(&pts);
    let diameter = (x1 - x0).max(y1 - y0);
    if !(diameter > 0.0) {
        return Err(KleinianError::DegenerateScales("sample has zero diameter".into()));
    }
    let scales = ladder.scales(diameter)?;
    let xs: Vec<f64> = scales.iter().map(|e| -e.ln()).collect();
    let ys: Vec<f64> = scales.iter().map(|&e| (box_count(&pts, (x0, y0), e) as f64).ln()).collect();

    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let fit_r2 = if syy == 0.0 { 1.0 } else { (sxy * sxy / (sxx * syy)).clamp(0.0, 1.0) };
    Ok(DimensionEstimate { d: slope.clamp(0.0, 2.0), fit_r2, scales_used: scales, point_count: pts.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cantor(level: u32) -> Vec<ComplexPoint> {
        let mut iv = vec![(0.0f64, 1.0f64)];
        for _ in 0..level {
            iv = iv.iter().flat_map(|&(a, b)| {
                let t = (b - a) / 3.0;
                [(a, a + t), (b - t, b)]
            })
            .collect();
        }
        iv.iter().flat_map(|&(a, b)| [ComplexPoint::new(a, 0.0), ComplexPoint::new(b, 0.0)]).collect()
    }

    #[test]
    fn segment_and_cantor() {
        let seg: Vec<_> = (0..10_000).map(|i| ComplexPoint::new(i as f64 / 9_999.0, 0.5)).collect();
        let e = box_counting_dimension(&seg, &ScaleLadder::default()).unwrap();
        assert!((e.d - 1.0).abs() < 0.1, "{e:?}");
        let c = box_counting_dimension(&cantor(12), &ScaleLadder::default()).unwrap();
        assert!((c.d - 2f64.ln() / 3f64.ln()).abs() < 0.1, "{c:?}");
        assert_eq!(c.scales_used.len(), 8);
        assert!(c.fit_r2 > 0.9 && c.fit_r2 <= 1.0);
    }

    #[test]
    fn filled_square_is_two() {
        let sq: Vec<_> = (0..200).flat_map(|i| (0..200).map(move |j| ComplexPoint::new(i as f64, j as f64))).collect();
        let e = box_counting_dimension(&sq, &ScaleLadder { count: 4, ratio: 0.5, largest: Some(16.0) }).unwrap();
        assert!((e.d - 2.0).abs() < 0.1, "{e:?}");
    }

    #[test]
    fn errors() {
        let few: Vec<_> = (0..99).map(|i| ComplexPoint::new(i as f64, 0.0)).collect();
        assert_eq!(box_counting_dimension(&few, &ScaleLadder::default()), Err(KleinianError::TooFewPoints(99)));
        let same = vec![ComplexPoint::new(1.0, 1.0); 200];
        assert!(matches!(box_counting_dimension(&same, &ScaleLadder::default()), Err(KleinianError::DegenerateScales(_))));
        let seg: Vec<_> = (0..200).map(|i| ComplexPoint::new(i as f64, 0.0)).collect();
        let bad = ScaleLadder { count: 1, ..Default::default() };
        assert!(matches!(box_counting_dimension(&seg, &bad), Err(KleinianError::DegenerateScales(_))));
    }

    #[test]
    fn infinity_is_charted_away() {
        let mut pts: Vec<_> = (0..1000).map(|i| ComplexPoint::new(i as f64 / 999.0, 0.0)).collect();
        pts.push(ComplexPoint::Infinity);
        let e = box_counting_dimension(&pts, &ScaleLadder::default()).unwrap();
        assert_eq!(e.point_count, 1001);
        assert!(e.d.is_finite());
    }

    #[test]
    fn json_shape() {
        let e = DimensionEstimate { d: 0.5, fit_r2: 0.99, scales_used: vec![0.25, 0.125], point_count: 200 };
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"d":0.5,"fit_r2":0.99,"scales":[0.25,0.125],"points":200}"#);
    }
}
