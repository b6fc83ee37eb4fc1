//! Evaluating diagram terms through a functor, here on the cyclic diagram read
//! over permutations. Letters of G' outside the image of φ need an explicit
//! interpretation; the others are derived from the functor.

use coh::dsl::load_source;
use coh::free::fmor_equal;
use coh::functor::{check_axioms, derive_interp, make_builtin_spec, BuiltinKind, Evaluator, LetterInterp};
use coh::Flavor;

fn main() -> coh::Result<()> {
    let d = load_source(include_str!("../fixtures/cursed_cyclic.coh"), Some(Flavor::Symmetric))
        .expect("fixture loads");
    let alg = d.alg();
    let goal = &d.goals()[0];
    let (l, r) = (d.compose_path(&goal.lhs)?, d.compose_path(&goal.rhs)?);
    println!("goal {}: sides equal after dissolving: {}", goal.name, alg.equal(&l, &r)?);

    let images: Vec<&String> = alg.phi().as_map().values().collect();
    let explicit: LetterInterp = d
        .lift()
        .expect("lift")
        .interp
        .iter()
        .filter(|(k, _)| !images.contains(k))
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    for kind in [BuiltinKind::Identity, BuiltinKind::Doubling, BuiltinKind::Quadrupling] {
        let f = make_builtin_spec(kind, alg.flavor(), alg.phi().source())?;
        if !check_axioms(f.as_ref(), &[])?.all_pass() {
            println!("{kind:?}: not braided here, skipped");
            continue;
        }
        let interp = derive_interp(alg, f.as_ref(), &explicit)?;
        let ev = Evaluator::new(alg, f.as_ref(), &interp)?;
        let (fl, fr) = (ev.mor(&l)?, ev.mor(&r)?);
        println!("{kind:?}: {} → {}, images equal: {}", fl.source(), fl.target(), fmor_equal(&fl, &fr)?);
    }
    Ok(())
}
