//! The cyclic braiding under quadrupling: both sides move every strand to the
//! same place, and each generator's copies are rotated the same way, yet the
//! braids differ.

use coh::dsl::load_source;
use coh::{braid_equal, BraidWord};

fn main() {
    let d = load_source(include_str!("../fixtures/cursed_cyclic.coh"), None).expect("fixture loads");
    let x = d.explain_goal(&d.goals()[0]).expect("goal typechecks");
    print!("{x}");

    let left = BraidWord::parse(&x.left.word, 8).unwrap();
    let right = BraidWord::parse(&x.right.word, 8).unwrap();
    println!("\nbraid equal: {}", braid_equal(&left, &right).unwrap());
    println!("difference right⁻¹ left has normal form {}", right.inverse().compose(&left).unwrap().normal_form());
}
