//! Box counting on the middle-thirds Cantor set, against log 2 / log 3.
//!
//!     cargo run --example dimension_cantor

use panelweb::kleinian::{box_counting_dimension, scalar_sign, ScaleLadder};
use panelweb::moebius::ComplexPoint;

fn main() {
    let mut iv = vec![(0.0f64, 1.0f64)];
    for _ in 0..12 {
        iv = iv.iter().flat_map(|&(a, b)| [(a, a + (b - a) / 3.0), (b - (b - a) / 3.0, b)]).collect();
    }
    let pts: Vec<ComplexPoint> = iv.iter().flat_map(|&(a, b)| [ComplexPoint::new(a, 0.0), ComplexPoint::new(b, 0.0)]).collect();

    let e = box_counting_dimension(&pts, &ScaleLadder::default()).expect("8192 points");
    println!("estimate {:.4}, exact {:.4}, r^2 {:.4}", e.d, 2f64.ln() / 3f64.ln(), e.fit_r2);
    let s = scalar_sign(e.d, 4).expect("d in range");
    println!("scalar curvature sign for d = {:.3}: {} (n/2 - 1 - d = {:.3})", e.d, s.sign, s.quantity);
}
