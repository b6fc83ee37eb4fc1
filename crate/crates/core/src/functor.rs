//! Strong monoidal functors between free algebras, their axioms, and the
//! evaluation `Λ` of `T(G′, φ)` terms through such a functor.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::free::{Flavor, FreeMor, GenSet, Tuple, Tuple2};
use crate::ualg::{UAlg, ULetter, UMor, UObj, UTerm};

/// A strong monoidal functor `F: T G → T H` given by formulas.
pub trait FunctorSpec: Send + Sync + fmt::Debug {
    fn name(&self) -> String;
    fn flavor(&self) -> Flavor;
    fn source(&self) -> &GenSet;
    fn target(&self) -> &GenSet;
    fn obj(&self, x: &Tuple) -> Tuple;
    fn mor(&self, u: &FreeMor) -> Result<FreeMor>;
    /// `F x ; F y → F(x;y)`.
    fn f2(&self, x: &Tuple, y: &Tuple) -> Result<FreeMor>;
    /// `⟨⟩ → F⟨⟩`.
    fn f0(&self) -> Result<FreeMor>;
}

pub type SharedFunctor = Arc<dyn FunctorSpec>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinKind {
    Identity,
    Doubling,
    Quadrupling,
    NFold(usize),
}

#[derive(Debug)]
struct IdentityFunctor {
    flavor: Flavor,
    gens: GenSet,
}

impl FunctorSpec for IdentityFunctor {
    fn name(&self) -> String {
        "identity".into()
    }

    fn flavor(&self) -> Flavor {
        self.flavor
    }

    fn source(&self) -> &GenSet {
        &self.gens
    }

    fn target(&self) -> &GenSet {
        &self.gens
    }

    fn obj(&self, x: &Tuple) -> Tuple {
        x.clone()
    }

    fn mor(&self, u: &FreeMor) -> Result<FreeMor> {
        Ok(u.clone())
    }

    fn f2(&self, x: &Tuple, y: &Tuple) -> Result<FreeMor> {
        Ok(FreeMor::identity(self.flavor, x.concat(y)))
    }

    fn f0(&self) -> Result<FreeMor> {
        Ok(FreeMor::identity(self.flavor, Tuple::empty()))
    }
}

/// `h^n(x) = h^{n-1}(x) ; x`, doubled block first.
#[derive(Debug)]
struct NFold {
    n: usize,
    flavor: Flavor,
    gens: GenSet,
}

impl FunctorSpec for NFold {
    fn name(&self) -> String {
        match self.n {
            2 => "doubling".into(),
            n => format!("nfold({n})"),
        }
    }

    fn flavor(&self) -> Flavor {
        self.flavor
    }

    fn source(&self) -> &GenSet {
        &self.gens
    }

    fn target(&self) -> &GenSet {
        &self.gens
    }

    fn obj(&self, x: &Tuple) -> Tuple {
        Tuple(std::iter::repeat_n(x.0.iter().cloned(), self.n).flatten().collect())
    }

    fn mor(&self, u: &FreeMor) -> Result<FreeMor> {
        if u.flavor() != self.flavor {
            return Err(Error::Flavor(format!(
                "{} is a flavor {} functor, given a flavor {} morphism",
                self.name(),
                self.flavor,
                u.flavor()
            )));
        }
        let mut out = u.clone();
        for _ in 1..self.n {
            out = out.tensor(u)?;
        }
        Ok(out)
    }

    fn f2(&self, x: &Tuple, y: &Tuple) -> Result<FreeMor> {
        nfold_f2(self.flavor, self.n, x, y)
    }

    fn f0(&self) -> Result<FreeMor> {
        Ok(FreeMor::identity(self.flavor, Tuple::empty()))
    }
}

fn repeat(x: &Tuple, n: usize) -> Tuple {
    Tuple(std::iter::repeat_n(x.0.iter().cloned(), n).flatten().collect())
}

// h^n_2 = (h^{n-1}_2 ⊗ 1_{x;y}) ∘ (1_{h^{n-1}x} ⊗ β_{x, h^{n-1}y} ⊗ 1_y)
fn nfold_f2(flavor: Flavor, n: usize, x: &Tuple, y: &Tuple) -> Result<FreeMor> {
    if n == 1 {
        return Ok(FreeMor::identity(flavor, x.concat(y)));
    }
    let hx = repeat(x, n - 1);
    let hy = repeat(y, n - 1);
    let shuffle = FreeMor::identity(flavor, hx)
        .tensor(&FreeMor::braiding(flavor, x, &hy)?)?
        .tensor(&FreeMor::identity(flavor, y.clone()))?;
    let inner = nfold_f2(flavor, n - 1, x, y)?.tensor(&FreeMor::identity(flavor, x.concat(y)))?;
    inner.compose(&shuffle)
}

#[derive(Debug)]
struct Composite {
    g: SharedFunctor,
    f: SharedFunctor,
}

impl FunctorSpec for Composite {
    fn name(&self) -> String {
        format!("compose({}, {})", self.g.name(), self.f.name())
    }

    fn flavor(&self) -> Flavor {
        self.f.flavor()
    }

    fn source(&self) -> &GenSet {
        self.f.source()
    }

    fn target(&self) -> &GenSet {
        self.g.target()
    }

    fn obj(&self, x: &Tuple) -> Tuple {
        self.g.obj(&self.f.obj(x))
    }

    fn mor(&self, u: &FreeMor) -> Result<FreeMor> {
        self.g.mor(&self.f.mor(u)?)
    }

    fn f2(&self, x: &Tuple, y: &Tuple) -> Result<FreeMor> {
        let outer = self.g.mor(&self.f.f2(x, y)?)?;
        outer.compose(&self.g.f2(&self.f.obj(x), &self.f.obj(y))?)
    }

    fn f0(&self) -> Result<FreeMor> {
        self.g.mor(&self.f.f0()?)?.compose(&self.g.f0()?)
    }
}

pub fn make_builtin_spec(kind: BuiltinKind, flavor: Flavor, gens: &GenSet) -> Result<SharedFunctor> {
    let nfold = |n: usize| -> Result<SharedFunctor> {
        if n == 0 {
            return Err(Error::Domain("nfold needs n ≥ 1".into()));
        }
        if n == 1 {
            return Ok(Arc::new(IdentityFunctor {
                flavor,
                gens: gens.clone(),
            }));
        }
        if !flavor.has_braiding() {
            return Err(Error::Unsupported(format!(
                "nfold({n}) needs a braiding, unavailable in flavor {flavor}"
            )));
        }
        Ok(Arc::new(NFold {
            n,
            flavor,
            gens: gens.clone(),
        }))
    };
    match kind {
        BuiltinKind::Identity => Ok(Arc::new(IdentityFunctor {
            flavor,
            gens: gens.clone(),
        })),
        BuiltinKind::Doubling => nfold(2),
        BuiltinKind::NFold(n) => nfold(n),
        BuiltinKind::Quadrupling => {
            let d = nfold(2)?;
            compose_specs(d.clone(), d)
        }
    }
}

/// `g ∘ f`.
pub fn compose_specs(g: SharedFunctor, f: SharedFunctor) -> Result<SharedFunctor> {
    if f.target() != g.source() {
        return Err(Error::Composition(format!(
            "{} lands in {:?} but {} starts at {:?}",
            f.name(),
            f.target().names(),
            g.name(),
            g.source().names()
        )));
    }
    if f.flavor() != g.flavor() {
        return Err(Error::Flavor(format!(
            "composing a flavor {} functor after a flavor {} functor",
            g.flavor(),
            f.flavor()
        )));
    }
    Ok(Arc::new(Composite { g, f }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Associativity,
    LeftUnit,
    RightUnit,
    Braid,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Associativity => "associativity",
            Axiom::LeftUnit => "left unit",
            Axiom::RightUnit => "right unit",
            Axiom::Braid => "braid",
        })
    }
}

/// One failed square, with both composites as witnesses.
#[derive(Clone, Debug)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub objects: Vec<Tuple>,
    pub left: FreeMor,
    pub right: FreeMor,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let objs: Vec<String> = self.objects.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{} fails at ({}): {} versus {}",
            self.axiom,
            objs.join(", "),
            self.left.content_text(),
            self.right.content_text()
        )
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub functor: String,
    pub flavor: Flavor,
    pub checked: BTreeMap<Axiom, usize>,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passes(&self, axiom: Axiom) -> bool {
        self.checked.contains_key(&axiom) && self.failures.iter().all(|f| f.axiom != axiom)
    }

    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn witnesses(&self, axiom: Axiom) -> Vec<&[Tuple]> {
        self.failures
            .iter()
            .filter(|f| f.axiom == axiom)
            .map(|f| f.objects.as_slice())
            .collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} in flavor {}", self.functor, self.flavor)?;
        for (axiom, n) in &self.checked {
            let bad = self.failures.iter().filter(|x| x.axiom == *axiom).count();
            let status = if bad == 0 { "ok" } else { "FAILED" };
            writeln!(f, "  {axiom:<14} {status} ({bad} of {n} squares fail)")?;
        }
        for fail in &self.failures {
            writeln!(f, "  {fail}")?;
        }
        Ok(())
    }
}

/// Check the axioms of a strong monoidal (and, in S and B, braided) functor
/// on all pairs and triples of probe objects. An empty probe means every
/// tuple of length at most two.
pub fn check_axioms(functor: &dyn FunctorSpec, probe: &[Tuple]) -> Result<AxiomReport> {
    let default;
    let probe = if probe.is_empty() {
        default = functor.source().tuples_up_to(2);
        &default[..]
    } else {
        probe
    };
    for x in probe {
        functor.source().check(x)?;
    }
    let flavor = functor.flavor();
    let id = |x: &Tuple| FreeMor::identity(flavor, functor.obj(x));
    let mut checked = BTreeMap::new();
    let mut failures = Vec::new();
    let mut record = |axiom: Axiom, objects: Vec<Tuple>, left: FreeMor, right: FreeMor| -> Result<()> {
        *checked.entry(axiom).or_insert(0) += 1;
        if !left.equals(&right)? {
            failures.push(AxiomFailure {
                axiom,
                objects,
                left,
                right,
            });
        }
        Ok(())
    };

    for x in probe {
        for y in probe {
            for z in probe {
                let lhs = functor
                    .f2(&x.concat(y), z)?
                    .compose(&functor.f2(x, y)?.tensor(&id(z))?)?;
                let rhs = functor
                    .f2(x, &y.concat(z))?
                    .compose(&id(x).tensor(&functor.f2(y, z)?)?)?;
                record(Axiom::Associativity, vec![x.clone(), y.clone(), z.clone()], lhs, rhs)?;
            }
        }
    }

    let f0 = functor.f0()?;
    let empty = Tuple::empty();
    for x in probe {
        let left = functor.f2(&empty, x)?.compose(&f0.tensor(&id(x))?)?;
        record(Axiom::LeftUnit, vec![x.clone()], left, id(x))?;
        let right = functor.f2(x, &empty)?.compose(&id(x).tensor(&f0)?)?;
        record(Axiom::RightUnit, vec![x.clone()], right, id(x))?;
    }

    if flavor.has_braiding() {
        for x in probe {
            for y in probe {
                let beta = FreeMor::braiding(flavor, x, y)?;
                let lhs = functor.mor(&beta)?.compose(&functor.f2(x, y)?)?;
                let rhs = functor
                    .f2(y, x)?
                    .compose(&FreeMor::braiding(flavor, &functor.obj(x), &functor.obj(y))?)?;
                record(Axiom::Braid, vec![x.clone(), y.clone()], lhs, rhs)?;
            }
        }
    }

    Ok(AxiomReport {
        functor: functor.name(),
        flavor,
        checked,
        failures,
    })
}

/// `f_•` at a tuple of tuples: `f0`, the identity, or left-nested `f2`s.
pub fn f_bullet(functor: &dyn FunctorSpec, w: &Tuple2) -> Result<FreeMor> {
    let blocks = w.blocks();
    match blocks.len() {
        0 => functor.f0(),
        1 => Ok(FreeMor::identity(functor.flavor(), functor.obj(&blocks[0]))),
        m => {
            let head = Tuple2(blocks[..m - 1].to_vec());
            let last = &blocks[m - 1];
            let step = functor.f2(&head.flatten(), last)?;
            let rest = f_bullet(functor, &head)?
                .tensor(&FreeMor::identity(functor.flavor(), functor.obj(last)))?;
            step.compose(&rest)
        }
    }
}

/// How each free letter of `G′` reads in the target.
pub type LetterInterp = BTreeMap<String, Tuple>;

/// Fill in `φ(g) ↦ F(g)` and check it against any explicit entries.
pub fn derive_interp(
    alg: &UAlg,
    functor: &dyn FunctorSpec,
    explicit: &LetterInterp,
) -> Result<LetterInterp> {
    let mut out = explicit.clone();
    for g in alg.phi().source().names() {
        let image = functor.obj(&Tuple(vec![g.clone()]));
        let letter = alg.phi().apply(g)?.to_string();
        match out.get(&letter) {
            Some(existing) if *existing != image => {
                return Err(Error::Interpretation(format!(
                    "`{letter}` is read as {existing}, but {} sends ({g}) to {image}",
                    functor.name()
                )));
            }
            _ => {
                out.insert(letter, image);
            }
        }
    }
    Ok(out)
}

/// `Λ` for one functor and letter reading.
pub struct Evaluator<'a> {
    alg: &'a UAlg,
    functor: &'a dyn FunctorSpec,
    interp: &'a LetterInterp,
}

impl<'a> Evaluator<'a> {
    pub fn new(alg: &'a UAlg, functor: &'a dyn FunctorSpec, interp: &'a LetterInterp) -> Result<Self> {
        if functor.source() != alg.phi().source() {
            return Err(Error::Interpretation(format!(
                "{} is defined on {:?}, not on {:?}",
                functor.name(),
                functor.source().names(),
                alg.phi().source().names()
            )));
        }
        if functor.flavor() != alg.flavor() {
            return Err(Error::Flavor(format!(
                "{} is a flavor {} functor, the diagram has flavor {}",
                functor.name(),
                functor.flavor(),
                alg.flavor()
            )));
        }
        for g in alg.phi().source().names() {
            let letter = alg.phi().apply(g)?;
            let expected = functor.obj(&Tuple(vec![g.clone()]));
            match interp.get(letter) {
                Some(t) if *t == expected => {}
                Some(t) => {
                    return Err(Error::Interpretation(format!(
                        "`{letter}` is read as {t}, but {} sends ({g}) to {expected}",
                        functor.name()
                    )))
                }
                None => {
                    return Err(Error::Interpretation(format!(
                        "no reading for `{letter}`"
                    )))
                }
            }
        }
        for (letter, t) in interp {
            functor
                .target()
                .check(t)
                .map_err(|e| Error::Interpretation(format!("reading of `{letter}`: {e}")))?;
        }
        Ok(Evaluator {
            alg,
            functor,
            interp,
        })
    }

    fn letter(&self, g: &str) -> Result<&Tuple> {
        self.interp
            .get(g)
            .ok_or_else(|| Error::Interpretation(format!("no reading for `{g}`")))
    }

    pub fn obj(&self, x: &UObj) -> Result<Tuple> {
        let mut out = Tuple::empty();
        for l in x.letters() {
            let part = match l {
                ULetter::Free(g) => self.letter(g)?.clone(),
                ULetter::Phi(w) => self.functor.obj(w),
            };
            out = out.concat(&part);
        }
        Ok(out)
    }

    pub fn mor(&self, t: &UMor) -> Result<FreeMor> {
        let flavor = self.alg.flavor();
        match t.term() {
            UTerm::FreeG(u) => {
                let readings = u
                    .source()
                    .iter()
                    .map(|g| self.letter(g).cloned())
                    .collect::<Result<Vec<_>>>()?;
                let sizes: Vec<usize> = readings.iter().map(Tuple::len).collect();
                let source = readings.iter().fold(Tuple::empty(), |acc, r| acc.concat(r));
                FreeMor::new(source, u.content().cable(&sizes)?)
            }
            UTerm::PhiFree(u) => {
                let mut sum = FreeMor::identity(flavor, Tuple::empty());
                let mut sizes = Vec::new();
                for v in u.inner() {
                    let image = self.functor.mor(v)?;
                    sizes.push(image.target().len());
                    sum = sum.tensor(&image)?;
                }
                let outer = FreeMor::new(sum.target().clone(), u.outer().cable(&sizes)?)?;
                outer.compose(&sum)
            }
            UTerm::PhiQ(w) => f_bullet(self.functor, w),
            UTerm::PhiQInv(w) => Ok(f_bullet(self.functor, w)?.inverse()),
            UTerm::Braiding(x, y) => FreeMor::braiding(flavor, &self.obj(x)?, &self.obj(y)?),
            UTerm::Id(x) => Ok(FreeMor::identity(flavor, self.obj(x)?)),
            UTerm::Compose(a, b) => self.mor(a)?.compose(&self.mor(b)?),
            UTerm::Tensor(a, b) => self.mor(a)?.tensor(&self.mor(b)?),
        }
    }
}

pub fn lambda_eval(
    alg: &UAlg,
    t: &UMor,
    functor: &dyn FunctorSpec,
    interp: &LetterInterp,
) -> Result<FreeMor> {
    Evaluator::new(alg, functor, interp)?.mor(t)
}

/// Whether `t` evaluates to `claimed`.
pub fn verify_lift(
    alg: &UAlg,
    t: &UMor,
    claimed: &FreeMor,
    functor: &dyn FunctorSpec,
    interp: &LetterInterp,
) -> Result<bool> {
    let image = lambda_eval(alg, t, functor, interp)?;
    if image.source() != claimed.source() || image.target() != claimed.target() {
        return Ok(false);
    }
    image.equals(claimed)
}
