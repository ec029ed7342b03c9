//! Oracles shared by the integration tests. Nothing here calls into the
//! code under test except to build inputs.
#![allow(dead_code)]

use num_bigint::BigInt;
use panelweb::moebius::ComplexPoint;

/// Closed forms `(b1, b2, chi)` per family, written out from the formulas.
pub fn closed_forms(family: &str, g: i64, n: i64) -> (i64, i64, i64) {
    match family {
        "m1g" => (2 * g + 2, 2, -4 * g),
        "m1gn" => (2 * g + 2 * n, 2, 4 - 4 * g - 4 * n),
        "m3gn" => (2 * g + 3 * n, 2 + 2 * n, 4 - 4 * g - 4 * n),
        "m4n" => (2 * n + 1, 2 * n, -2 * n),
        _ => panic!("no closed forms for {family}"),
    }
}

pub fn m3_chain_ranks(g: usize, n: usize) -> [usize; 5] {
    [1, 2 * g + 7 * n, 10 * n + 2, 2 * g + 7 * n, 1]
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        k => (0..k)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Invariant factors `d_k / d_{k-1}`, where `d_k` is the gcd of all `k x k`
/// minors, up to the rank.
pub fn invariant_factors_by_minors(a: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut out = Vec::new();
    let mut prev: i128 = 1;
    for k in 1..=rows.min(cols) {
        let mut dk = 0i128;
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect()).collect();
                dk = gcd(dk, det(&sub));
            }
        }
        if dk == 0 {
            break;
        }
        out.push(BigInt::from(dk / prev));
        prev = dk;
    }
    out
}

/// Endpoints of the `level`-th stage of the middle-thirds construction.
pub fn cantor_points(level: u32) -> Vec<ComplexPoint> {
    let mut iv = vec![(0.0f64, 1.0f64)];
    for _ in 0..level {
        iv = iv
            .iter()
            .flat_map(|&(a, b)| {
                let t = (b - a) / 3.0;
                [(a, a + t), (b - t, b)]
            })
            .collect();
    }
    iv.iter().flat_map(|&(a, b)| [ComplexPoint::new(a, 0.0), ComplexPoint::new(b, 0.0)]).collect()
}

pub fn segment_points(n: usize) -> Vec<ComplexPoint> {
    (0..n).map(|i| ComplexPoint::new(-1.0 + 3.0 * i as f64 / (n - 1) as f64, 0.5 + 1.5 * i as f64 / (n - 1) as f64)).collect()
}

/// Classical Schottky group: `a` pairs the unit disks at -3 and 3, `b` those at -3i and 3i.
pub fn classical_schottky() -> panelweb::kleinian::GroupSpec {
    use num_complex::Complex64;
    use panelweb::kleinian::{Generator, GroupSpec};
    use panelweb::moebius::GeneralizedCircle;
    let c = |re: f64, im: f64| GeneralizedCircle::circle(Complex64::new(re, im), 1.0).unwrap();
    GroupSpec::new(
        vec![
            Generator::from_pair("a".parse().unwrap(), c(-3.0, 0.0), c(3.0, 0.0)).unwrap(),
            Generator::from_pair("b".parse().unwrap(), c(0.0, -3.0), c(0.0, 3.0)).unwrap(),
        ],
        vec![],
    )
    .unwrap()
}

/// Exact sign of `1 - d` with the dead band.
pub fn expected_sign(d: f64) -> &'static str {
    if (1.0 - d).abs() <= 1e-6 {
        "zero"
    } else if d < 1.0 {
        "positive"
    } else {
        "negative"
    }
}
