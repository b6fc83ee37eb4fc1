//! Letter signatures of the lift objects in the cyclic diagram, weighted by
//! how often each generator occurs after quadrupling.

use coh::dsl::load_source;
use coh::functor::{derive_interp, make_builtin_spec, BuiltinKind};
use coh::ualg::signature_of;
use coh::{Flavor, Tuple};

fn main() -> coh::Result<()> {
    let d = load_source(include_str!("../fixtures/cursed_cyclic.coh"), None).expect("fixture loads");
    let quad = make_builtin_spec(BuiltinKind::Quadrupling, Flavor::Braided, d.alg().phi().source())?;
    let interp = derive_interp(d.alg(), quad.as_ref(), &d.lift().expect("lift").interp)?;
    for (node, x) in d.nodes() {
        let mut line = format!("{node:>6} {x}");
        for g in ["a", "b"] {
            let count = |t: &Tuple| t.iter().filter(|h| h.as_str() == g).count();
            let sig = signature_of(x, |l| interp.get(l).map(count), |w| Some(count(&quad.obj(w))))?;
            line += &format!("  {g}: {sig:?}");
        }
        println!("{line}");
    }
    Ok(())
}
