//! Sweep each family over a small grid and check the growth trends.
//!
//!     cargo run --example family_sweep [max]

use panelweb::families::{monotonicity, sweep, Family};

fn main() {
    let max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let range: Vec<u32> = (1..=max).collect();
    for fam in [Family::M1g, Family::M1gn, Family::M3gn, Family::M4n] {
        let rows = sweep(fam, &range, &range).expect("family members build");
        println!("{fam}: {} members", rows.len());
        for r in rows.iter().take(5) {
            println!("  g={:?} n={:?}  b1={} b2={} chi={}", r.g, r.n, r.b1, r.b2, r.chi);
        }
        if rows.len() > 5 {
            println!("  ...");
        }
        let m = monotonicity(&rows);
        println!("  chi decreasing {}, b1 increasing {}, Einstein flag {}", m.chi_strictly_decreasing, m.b1_strictly_increasing, m.einstein_flag_consistent);
    }
}
