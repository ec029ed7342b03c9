//! Exact invariants of the three base manifolds, printed side by side.
//!
//!     cargo run --example invariants_m1

use panelweb::families;
use panelweb::handlebody::{chain_ranks, presentation_of};

fn main() {
    for rec in [families::m1(), families::m2(), families::m3()] {
        let r = rec.report().expect("base manifolds are consistent");
        let ranks = chain_ranks(&rec.decomposition).expect("doubled");
        println!("{}", rec.name);
        println!("  pi1      {}", presentation_of(&rec.decomposition).expect("valid"));
        println!("  chain    {:?}", ranks.0);
        println!("  chi      {}", r.chi);
        println!("  H1, H2   {}, {}", r.h1, r.h2);
        println!("  form     {} (signature {})", r.intersection_form, r.signature);
        println!("  einstein {}", if r.einstein_obstructed { "obstructed" } else { "not obstructed" });
    }
}
