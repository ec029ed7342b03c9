//! Smith normal form of a relation matrix and the abelian group it presents.
//!
//!     cargo run --example snf_abelianize

use panelweb::handlebody::Presentation;
use panelweb::intlinalg::{smith_normal_form, AbelianInvariants, IntMatrix};
use panelweb::word::parse_word;

fn main() {
    let a = IntMatrix::from_rows(&[vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
    let s = smith_normal_form(&a);
    println!("D = {:?}", s.d.to_rows());
    println!("U = {:?}", s.u.to_rows());
    println!("V = {:?}", s.v.to_rows());
    println!("UAV = D: {}", s.u.mul(&a).mul(&s.v) == s.d);
    println!("cokernel {}", AbelianInvariants::from_relation_matrix(&a));

    let gens = ["a", "b", "c"].iter().map(|x| x.parse().unwrap()).collect();
    let rels = ["a^2 b^-3", "a^-1 b^-1 a b c^6"].iter().map(|r| parse_word(r).unwrap()).collect();
    let p = Presentation::new(gens, rels).unwrap();
    println!("{p}  abelianizes to {}", p.abelianization().unwrap());
}
