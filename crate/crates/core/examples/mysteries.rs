//! Check the three small diagrams shipped in `fixtures/`, in both the braided
//! and the symmetric reading.

use coh::diagram::Verdict;
use coh::dsl::load_source;
use coh::Flavor;

const FIXTURES: [(&str, &str); 3] = [
    ("mystery1", include_str!("../fixtures/mystery1.coh")),
    ("mystery2", include_str!("../fixtures/mystery2.coh")),
    ("mystery3", include_str!("../fixtures/mystery3.coh")),
];

fn main() {
    for (name, src) in FIXTURES {
        for flavor in [Flavor::Braided, Flavor::Symmetric] {
            let d = load_source(src, Some(flavor)).unwrap_or_else(|e| panic!("{name}: {e}"));
            for goal in d.goals() {
                let x = d.explain_goal(goal).expect("goal typechecks");
                println!("{name} in {flavor}: {}", x.verdict);
                if x.verdict != Verdict::NotEqual {
                    println!("    left  {}\n    right {}", x.left.word, x.right.word);
                }
            }
        }
    }
}
