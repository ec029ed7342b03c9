//! Limit set of the Fuchsian Schottky group of a genus-2 surface with one
//! hole, written as CSV to stdout.
//!
//!     cargo run --example schottky_limit_set > pts.csv

use panelweb::kleinian::limit_set::{limit_set_sample, write_csv};
use panelweb::kleinian::{box_counting_dimension, fuchsian_schottky, SchottkyLayout, ScaleLadder};

fn main() {
    let g = fuchsian_schottky(2, 1, SchottkyLayout::default()).expect("layout fits");
    let s = limit_set_sample(&g, 6, None);
    let d = box_counting_dimension(&s.points, &ScaleLadder::default()).expect("enough points");
    eprintln!("{} generators, {} points, d ~ {:.3}", s.generator_count, s.points.len(), d.d);
    write_csv(&s.points, std::io::stdout().lock()).expect("stdout");
}
