//! Adjoin q-th roots of a loxodromic generator and check a0^q = a.
//!
//!     cargo run --example complex_twist

use panelweb::kleinian::{complex_twist, GroupSpec};
use panelweb::moebius::MoebiusTransform;
use panelweb::word::Label;

fn main() {
    let a: Label = "a".parse().unwrap();
    // A loxodromic with fixed points 1 and -1.
    let frame = MoebiusTransform::from_real(1.0, -1.0, 1.0, 1.0).unwrap();
    let m = MoebiusTransform::scaling(9.0).unwrap().conjugate_by(&frame);
    let g = GroupSpec::cyclic(a.clone(), m).unwrap();
    for (p, q) in [(1, 2), (1, 3), (2, 3), (1, 5), (3, 7)] {
        let t = complex_twist(&g, &a, p, q, 9.0, None).unwrap();
        let a0 = t.transform(&"b".parse().unwrap()).unwrap();
        println!("{p}/{q}: a0 = {a0}, multiplier {:.4}, a0^{q} = a: {}", a0.multiplier().unwrap(), a0.pow(q).approx_eq(&m, 1e-9));
    }
    println!("{}", complex_twist(&g, &a, 2, 4, 9.0, None).unwrap_err());
}
