//! The worked panelled-web group: combine the two sides, check a lens
//! region, sample the limit set.
//!
//!     cargo run --example panelled_sigma12

use std::f64::consts::PI;

use panelweb::kleinian::limit_set::{forward_invariance_violation, limit_set_sample};
use panelweb::kleinian::{box_counting_dimension, check_precisely_invariant, panelled, Region, ScaleLadder};
use panelweb::word::Label;

fn main() {
    let g = panelled::panelled_group(4).expect("combination holds");
    for gen in g.generators() {
        println!("{}  {}", gen.label, gen.transform);
    }
    let a: Label = "a".parse().unwrap();
    for phi in [PI / 8.0, PI / 4.0, PI / 2.0] {
        let r = check_precisely_invariant(&Region::sector(4.0 * PI / 3.0, phi).unwrap(), &a, &g, 5).unwrap();
        match r.witness() {
            None => println!("sector half-angle {phi:.3}: precisely invariant to depth 5"),
            Some(w) => println!("sector half-angle {phi:.3}: {} moves {} to {}", w.word, w.point, w.image),
        }
    }
    let (s6, s7) = (limit_set_sample(&g, 6, None), limit_set_sample(&g, 7, None));
    let ok = forward_invariance_violation(&g, &s6, &s7, 10.0 * s6.tau_dedup).is_none();
    println!("{} -> {} points, forward invariant: {ok}", s6.points.len(), s7.points.len());
    let e = box_counting_dimension(&s7.points, &ScaleLadder::default()).unwrap();
    println!("box-counting d ~ {:.3} (r^2 {:.3})", e.d, e.fit_r2);
}
