//! Building a diagram by hand instead of through the text format. Two edges
//! leave `x = [fa, fa]`; going through φ(a a) and back is the identity, while
//! the twist is not.

use coh::diagram::{Diagram, Goal, Path};
use coh::ualg::{ObjMap, UAlg};
use coh::{BraidWord, Flavor, FreeMor, GenSet, Tuple, Tuple2};

fn main() -> coh::Result<()> {
    let phi = ObjMap::new(GenSet::new(["a"])?, GenSet::new(["fa"])?, [("a", "fa")])?;
    let alg = UAlg::new(Flavor::Braided, phi);
    let w = Tuple2(vec![Tuple::from(["a"]), Tuple::from(["a"])]);

    let mut d = Diagram::new(alg.clone());
    let x = alg.free_obj(&Tuple::from(["fa", "fa"]))?;
    d.add_node("x", x.clone())?;
    d.add_node("y", alg.phi_object(&Tuple2(vec![w.flatten()]))?)?;
    d.add_node("z", x.clone())?;
    d.add_edge("glue", "x", "y", alg.phi_q(&w)?)?;
    d.add_edge("split", "y", "z", alg.phi_q_inv(&w)?)?;
    d.add_edge("stay", "x", "z", alg.id(&x))?;
    let swap = FreeMor::from_braid(Tuple::from(["fa", "fa"]), BraidWord::parse("s1", 2)?)?;
    d.add_edge("twist", "x", "z", alg.kappa_embed(&swap)?)?;

    for g in d.all_parallel_pairs()? {
        let r = d.check_goal(&g)?;
        println!("{} == {}: {}", g.lhs, g.rhs, r.verdict);
    }
    d.add_goal(Goal { name: "round_trip".into(), lhs: Path::of(&["split", "glue"]), rhs: Path::of(&["stay"]) })?;
    for r in d.check_all() {
        let r = r?;
        println!("goal {}: {}", r.goal, r.verdict);
    }
    Ok(())
}
