//! Which built-in functors are braided? Doubling keeps the monoidal axioms on
//! braids but not the braid axiom; over permutations everything holds.

use coh::free::Tuple;
use coh::functor::{check_axioms, make_builtin_spec, Axiom, BuiltinKind};
use coh::{Flavor, GenSet};

fn main() -> coh::Result<()> {
    let gens = GenSet::new(["a", "b"])?;
    for flavor in [Flavor::Braided, Flavor::Symmetric] {
        for kind in [BuiltinKind::Identity, BuiltinKind::Doubling, BuiltinKind::Quadrupling, BuiltinKind::NFold(3)] {
            let f = make_builtin_spec(kind, flavor, &gens)?;
            let report = check_axioms(f.as_ref(), &[])?;
            println!("{kind:?} in {flavor}: all pass = {}", report.all_pass());
        }
    }

    let d = make_builtin_spec(BuiltinKind::Doubling, Flavor::Braided, &gens)?;
    let report = check_axioms(d.as_ref(), &[Tuple::from(["a"]), Tuple::from(["b"])])?;
    println!("\ndoubling on the probe (a), (b):\n{report}");
    println!("{} failing squares for the braid axiom", report.witnesses(Axiom::Braid).len());
    Ok(())
}
