//! The two-level classifier: morphisms between tuples of tuples, the
//! flattening evaluation δ, and the two sections ζ and ζ♭.

use coh::classifier::{delta_eval, qmor_equal, theta_flat_component, zeta, zeta_flat, QMor};
use coh::free::fmor_equal;
use coh::{BraidWord, Flavor, FreeMor, Tuple, Tuple2};

fn main() -> coh::Result<()> {
    let x = Tuple::from(["a", "b", "a"]);
    let u = FreeMor::from_braid(x.clone(), BraidWord::parse("s1 s2 s1^-1", 3)?)?;
    println!("u = {u}");

    for (name, section) in [("ζ", zeta(&u)), ("ζ♭", zeta_flat(&u))] {
        let back = delta_eval(&section)?;
        println!("{name}(u): {} → {}, δ gives u back: {}", section.source(), section.target(), fmor_equal(&back, &u)?);
    }

    // q glues blocks together; with its inverse it is the identity
    let w = Tuple2(vec![Tuple::from(["a"]), Tuple::from(["b", "a"])]);
    let q = QMor::q(Flavor::Braided, w.clone());
    let round = QMor::q_inv(Flavor::Braided, w.clone()).compose(q.clone())?;
    println!("q⁻¹ q = id: {}", qmor_equal(&round, &QMor::id(Flavor::Braided, w.clone()))?);
    println!("δ(q) is an identity: {}", delta_eval(&q)?.is_identity());

    let theta = theta_flat_component(Flavor::Braided, &w);
    println!("Θ♭ at {w}: {} → {}", theta.source(), theta.target());
    Ok(())
}
