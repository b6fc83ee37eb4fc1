//! The universal pseudomorphism algebra `T(G′, φ)`.
//!
//! Objects are words in free letters from `G′` and φ-letters `Φ(w)` with
//! `w` a tuple over `G` of length other than one. Morphisms are terms over
//! free morphisms, φ-free morphisms, φ-adjoined isomorphisms and formal
//! braidings. Equality goes through the dissolution `Δ`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::free::{Flavor, FreeMor, FreeMor2, GenSet, Tuple, Tuple2};

/// A total map `φ: G → G′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjMap {
    source: GenSet,
    target: GenSet,
    map: BTreeMap<String, String>,
}

impl ObjMap {
    pub fn new<I, S, T>(source: GenSet, target: GenSet, pairs: I) -> Result<ObjMap>
    where
        I: IntoIterator<Item = (S, T)>,
        S: Into<String>,
        T: Into<String>,
    {
        let mut map = BTreeMap::new();
        for (a, b) in pairs {
            let (a, b) = (a.into(), b.into());
            if !source.contains(&a) {
                return Err(Error::UnknownName(a));
            }
            if !target.contains(&b) {
                return Err(Error::UnknownName(b));
            }
            if map.insert(a.clone(), b).is_some() {
                return Err(Error::InvalidName(format!("`{a}` mapped twice")));
            }
        }
        if let Some(missing) = source.names().iter().find(|g| !map.contains_key(*g)) {
            return Err(Error::Domain(format!("φ is not defined on `{missing}`")));
        }
        Ok(ObjMap {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &GenSet {
        &self.source
    }

    pub fn target(&self) -> &GenSet {
        &self.target
    }

    pub fn apply(&self, g: &str) -> Result<&str> {
        self.map
            .get(g)
            .map(String::as_str)
            .ok_or_else(|| Error::UnknownName(g.to_string()))
    }

    pub fn as_map(&self) -> &BTreeMap<String, String> {
        &self.map
    }

    /// `T φ` on objects.
    pub fn apply_tuple(&self, w: &Tuple) -> Result<Tuple> {
        w.relabel(&self.map)
    }

    pub fn preimages(&self, g: &str) -> Vec<&str> {
        self.map
            .iter()
            .filter(|(_, v)| *v == g)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

/// A letter of a normalized object.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ULetter {
    Free(String),
    /// Never of length one.
    Phi(Tuple),
}

impl fmt::Display for ULetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ULetter::Free(g) => f.write_str(g),
            ULetter::Phi(w) => write!(f, "phi({})", w.0.join(" ")),
        }
    }
}

impl fmt::Debug for ULetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A letter before normalization: any `Φ(w)` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RawLetter {
    Free(String),
    Phi(Tuple),
}

/// An object of `T(G′, φ)` in normal form.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UObj(Vec<ULetter>);

impl UObj {
    pub fn empty() -> UObj {
        UObj(Vec::new())
    }

    pub fn letters(&self) -> &[ULetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &UObj) -> UObj {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        UObj(v)
    }

    /// True if every letter is free.
    pub fn is_free(&self) -> bool {
        self.0.iter().all(|l| matches!(l, ULetter::Free(_)))
    }

    pub fn free_word(&self) -> Option<Tuple> {
        self.0
            .iter()
            .map(|l| match l {
                ULetter::Free(g) => Some(g.clone()),
                ULetter::Phi(_) => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Tuple)
    }

    pub fn slice(&self, start: usize, end: usize) -> UObj {
        UObj(self.0[start..end].to_vec())
    }
}

impl fmt::Display for UObj {
    /// DSL syntax, e.g. `[fa, fa]; phi(a a)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("[]");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut run: Vec<&str> = Vec::new();
        for l in &self.0 {
            match l {
                ULetter::Free(g) => run.push(g),
                ULetter::Phi(_) => {
                    if !run.is_empty() {
                        parts.push(format!("[{}]", run.join(", ")));
                        run.clear();
                    }
                    parts.push(l.to_string());
                }
            }
        }
        if !run.is_empty() {
            parts.push(format!("[{}]", run.join(", ")));
        }
        f.write_str(&parts.join("; "))
    }
}

impl fmt::Debug for UObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UTerm {
    FreeG(FreeMor),
    PhiFree(FreeMor2),
    PhiQ(Tuple2),
    PhiQInv(Tuple2),
    Braiding(UObj, UObj),
    Id(UObj),
    Compose(Box<UMor>, Box<UMor>),
    Tensor(Box<UMor>, Box<UMor>),
}

/// A well-typed morphism term of `T(G′, φ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UMor {
    flavor: Flavor,
    source: UObj,
    target: UObj,
    term: UTerm,
}

impl UMor {
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn source(&self) -> &UObj {
        &self.source
    }

    pub fn target(&self) -> &UObj {
        &self.target
    }

    pub fn term(&self) -> &UTerm {
        &self.term
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &UMor) -> Result<UMor> {
        if self.flavor != other.flavor {
            return Err(Error::Flavor(format!(
                "composing {} after {}",
                self.flavor, other.flavor
            )));
        }
        if self.source != other.target {
            return Err(Error::Composition(format!(
                "{} does not start where {} ends",
                self.source, other.target
            )));
        }
        Ok(UMor {
            flavor: self.flavor,
            source: other.source.clone(),
            target: self.target.clone(),
            term: UTerm::Compose(Box::new(self.clone()), Box::new(other.clone())),
        })
    }

    pub fn tensor(&self, other: &UMor) -> Result<UMor> {
        if self.flavor != other.flavor {
            return Err(Error::Flavor(format!(
                "tensoring {} with {}",
                self.flavor, other.flavor
            )));
        }
        Ok(UMor {
            flavor: self.flavor,
            source: self.source.concat(&other.source),
            target: self.target.concat(&other.target),
            term: UTerm::Tensor(Box::new(self.clone()), Box::new(other.clone())),
        })
    }

    /// A tensor product of generators (no composition inside).
    pub fn is_generator_product(&self) -> bool {
        match &self.term {
            UTerm::Compose(..) => false,
            UTerm::Tensor(a, b) => a.is_generator_product() && b.is_generator_product(),
            _ => true,
        }
    }
}

impl fmt::Display for UMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.term {
            UTerm::FreeG(u) => f.write_str(&u.content_text()),
            UTerm::PhiFree(u) => write!(f, "pf({} → {})", u.source(), u.target()),
            UTerm::PhiQ(w) => write!(f, "q{w}"),
            UTerm::PhiQInv(w) => write!(f, "q^-1{w}"),
            UTerm::Braiding(x, y) => write!(f, "braid({x}, {y})"),
            UTerm::Id(x) => write!(f, "id({x})"),
            UTerm::Compose(a, b) => write!(f, "({a} . {b})"),
            UTerm::Tensor(a, b) => write!(f, "({a} ; {b})"),
        }
    }
}

/// An unchecked morphism expression, validated by [`UAlg::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UExpr {
    FreeG(FreeMor),
    PhiFree(FreeMor2),
    PhiQ(Tuple2),
    PhiQInv(Tuple2),
    Braiding(UObj, UObj),
    Id(UObj),
    Compose(Box<UExpr>, Box<UExpr>),
    Tensor(Box<UExpr>, Box<UExpr>),
}

/// The ambient algebra: a flavor and the map `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UAlg {
    flavor: Flavor,
    phi: ObjMap,
}

impl UAlg {
    pub fn new(flavor: Flavor, phi: ObjMap) -> UAlg {
        UAlg { flavor, phi }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn phi(&self) -> &ObjMap {
        &self.phi
    }

    /// The same generators in another flavor.
    pub fn with_flavor(&self, flavor: Flavor) -> UAlg {
        UAlg {
            flavor,
            phi: self.phi.clone(),
        }
    }

    fn check_g(&self, w: &Tuple) -> Result<()> {
        self.phi.source().check(w)
    }

    fn check_flavor(&self, found: Flavor) -> Result<()> {
        if found != self.flavor {
            return Err(Error::Flavor(format!(
                "morphism of flavor {found} in a flavor {} algebra",
                self.flavor
            )));
        }
        Ok(())
    }

    fn letter(&self, raw: &RawLetter) -> Result<Option<ULetter>> {
        match raw {
            RawLetter::Free(g) => {
                if !self.phi.target().contains(g) {
                    return Err(Error::UnknownName(g.clone()));
                }
                Ok(Some(ULetter::Free(g.clone())))
            }
            RawLetter::Phi(w) => {
                self.check_g(w)?;
                if w.len() == 1 {
                    Ok(Some(ULetter::Free(self.phi.apply(&w.0[0])?.to_string())))
                } else {
                    Ok(Some(ULetter::Phi(w.clone())))
                }
            }
        }
    }

    pub fn normalize(&self, raw: &[RawLetter]) -> Result<UObj> {
        let mut out = Vec::with_capacity(raw.len());
        for r in raw {
            if let Some(l) = self.letter(r)? {
                out.push(l);
            }
        }
        Ok(UObj(out))
    }

    pub fn free_obj(&self, x: &Tuple) -> Result<UObj> {
        self.phi.target().check(x)?;
        Ok(UObj(x.iter().map(|g| ULetter::Free(g.clone())).collect()))
    }

    /// The φ-object of a tuple of tuples, one letter per block.
    pub fn phi_object(&self, w: &Tuple2) -> Result<UObj> {
        let raw: Vec<RawLetter> = w.blocks().iter().map(|t| RawLetter::Phi(t.clone())).collect();
        self.normalize(&raw)
    }

    /// `Δ` on objects.
    pub fn dissolve_obj(&self, x: &UObj) -> Result<Tuple> {
        let mut out = Vec::new();
        for l in x.letters() {
            match l {
                ULetter::Free(g) => out.push(g.clone()),
                ULetter::Phi(w) => out.extend(self.phi.apply_tuple(w)?.0),
            }
        }
        Ok(Tuple(out))
    }

    /// `κ`: a free morphism over `G′`.
    pub fn kappa_embed(&self, u: &FreeMor) -> Result<UMor> {
        self.check_flavor(u.flavor())?;
        Ok(UMor {
            flavor: self.flavor,
            source: self.free_obj(u.source())?,
            target: self.free_obj(u.target())?,
            term: UTerm::FreeG(u.clone()),
        })
    }

    pub fn phi_free(&self, u: &FreeMor2) -> Result<UMor> {
        self.check_flavor(u.flavor())?;
        for b in u.source().blocks() {
            self.check_g(b)?;
        }
        Ok(UMor {
            flavor: self.flavor,
            source: self.phi_object(u.source())?,
            target: self.phi_object(u.target())?,
            term: UTerm::PhiFree(u.clone()),
        })
    }

    /// `[φ]q_w`: the φ-object of `w` to the single letter `Φ(w_•)`.
    pub fn phi_q(&self, w: &Tuple2) -> Result<UMor> {
        Ok(UMor {
            flavor: self.flavor,
            source: self.phi_object(w)?,
            target: self.phi_object(&Tuple2(vec![w.flatten()]))?,
            term: UTerm::PhiQ(w.clone()),
        })
    }

    pub fn phi_q_inv(&self, w: &Tuple2) -> Result<UMor> {
        Ok(UMor {
            flavor: self.flavor,
            source: self.phi_object(&Tuple2(vec![w.flatten()]))?,
            target: self.phi_object(w)?,
            term: UTerm::PhiQInv(w.clone()),
        })
    }

    pub fn braiding(&self, x: &UObj, y: &UObj) -> Result<UMor> {
        if !self.flavor.has_braiding() {
            return Err(Error::Unsupported(
                "plain monoidal categories have no braiding".into(),
            ));
        }
        Ok(UMor {
            flavor: self.flavor,
            source: x.concat(y),
            target: y.concat(x),
            term: UTerm::Braiding(x.clone(), y.clone()),
        })
    }

    pub fn id(&self, x: &UObj) -> UMor {
        UMor {
            flavor: self.flavor,
            source: x.clone(),
            target: x.clone(),
            term: UTerm::Id(x.clone()),
        }
    }

    /// Type-check an expression, reporting the path of the offending subterm.
    pub fn validate(&self, e: &UExpr) -> Result<UMor> {
        match e {
            UExpr::FreeG(u) => self.kappa_embed(u).map_err(|err| err.at("free")),
            UExpr::PhiFree(u) => self.phi_free(u).map_err(|err| err.at("pf")),
            UExpr::PhiQ(w) => self.phi_q(w).map_err(|err| err.at("q")),
            UExpr::PhiQInv(w) => self.phi_q_inv(w).map_err(|err| err.at("q^-1")),
            UExpr::Braiding(x, y) => self.braiding(x, y).map_err(|err| err.at("braid")),
            UExpr::Id(x) => Ok(self.id(x)),
            UExpr::Compose(a, b) => {
                let a = self.validate(a).map_err(|err| err.at("compose.left"))?;
                let b = self.validate(b).map_err(|err| err.at("compose.right"))?;
                a.compose(&b).map_err(|err| err.at("compose"))
            }
            UExpr::Tensor(a, b) => {
                let a = self.validate(a).map_err(|err| err.at("tensor.left"))?;
                let b = self.validate(b).map_err(|err| err.at("tensor.right"))?;
                a.tensor(&b).map_err(|err| err.at("tensor"))
            }
        }
    }

    /// `φ̃` on objects: the single letter `Φ(x)`.
    pub fn phi_tilde_obj(&self, x: &Tuple) -> Result<UObj> {
        self.phi_object(&Tuple2(vec![x.clone()]))
    }

    /// `φ̃` on morphisms: a one-block φ-free morphism.
    pub fn phi_tilde_mor(&self, u: &FreeMor) -> Result<UMor> {
        self.phi_free(&FreeMor2::one_block(u.clone()))
    }

    /// The unit constraint of `φ̃`.
    pub fn phi_tilde_unit(&self) -> Result<UMor> {
        self.phi_q(&Tuple2::empty())
    }

    /// The monoidal constraint of `φ̃` at `(w1, w2)`.
    pub fn phi_tilde_monoidal(&self, w1: &Tuple, w2: &Tuple) -> Result<UMor> {
        self.phi_q(&Tuple2(vec![w1.clone(), w2.clone()]))
    }

    /// `Δ`: the strict map to `T G′` sending φ-adjoined isomorphisms to
    /// identities.
    pub fn dissolve(&self, t: &UMor) -> Result<FreeMor> {
        match &t.term {
            UTerm::FreeG(u) => Ok(u.clone()),
            UTerm::PhiFree(u) => u.flatten()?.relabel(self.phi.as_map()),
            UTerm::PhiQ(_) | UTerm::PhiQInv(_) | UTerm::Id(_) => Ok(FreeMor::identity(
                self.flavor,
                self.dissolve_obj(&t.source)?,
            )),
            UTerm::Braiding(x, y) => {
                FreeMor::braiding(self.flavor, &self.dissolve_obj(x)?, &self.dissolve_obj(y)?)
            }
            UTerm::Compose(a, b) => self.dissolve(a)?.compose(&self.dissolve(b)?),
            UTerm::Tensor(a, b) => self.dissolve(a)?.tensor(&self.dissolve(b)?),
        }
    }

    pub fn equal(&self, s: &UMor, t: &UMor) -> Result<bool> {
        if s.source != t.source || s.target != t.target {
            return Err(Error::Incomparable(format!(
                "{} → {} versus {} → {}",
                s.source, s.target, t.source, t.target
            )));
        }
        self.dissolve(s)?.equals(&self.dissolve(t)?)
    }
}

pub fn normalize_uobj(alg: &UAlg, raw: &[RawLetter]) -> Result<UObj> {
    alg.normalize(raw)
}

pub fn validate_umor(alg: &UAlg, e: &UExpr) -> Result<(UObj, UObj)> {
    let t = alg.validate(e)?;
    Ok((t.source, t.target))
}

pub fn kappa_embed(alg: &UAlg, u: &FreeMor) -> Result<UMor> {
    alg.kappa_embed(u)
}

pub fn dissolve(alg: &UAlg, t: &UMor) -> Result<FreeMor> {
    alg.dissolve(t)
}

pub fn umor_equal(alg: &UAlg, s: &UMor, t: &UMor) -> Result<bool> {
    alg.equal(s, t)
}

/// Per-letter weights: `weight` for free letters, `phi_weight` for φ-letters.
pub fn signature_of<W, P>(x: &UObj, weight: W, phi_weight: P) -> Result<Vec<usize>>
where
    W: Fn(&str) -> Option<usize>,
    P: Fn(&Tuple) -> Option<usize>,
{
    x.letters()
        .iter()
        .map(|l| match l {
            ULetter::Free(g) => weight(g).ok_or_else(|| Error::UnknownName(g.clone())),
            ULetter::Phi(w) => phi_weight(w).ok_or_else(|| Error::UnknownName(format!("phi({})", w.0.join(" ")))),
        })
        .collect()
}

/// No φ-letter built only from unit generators. `Φ(⟨⟩)` counts as such a
/// letter.
pub fn is_tidy(x: &UObj, units: &BTreeSet<String>) -> bool {
    x.letters().iter().all(|l| match l {
        ULetter::Free(_) => true,
        ULetter::Phi(w) => !w.iter().all(|g| units.contains(g)),
    })
}

/// A chain `ts[0]` then `ts[1]` and so on, each step a product of generators
/// between tidy objects.
pub fn is_tidy_composite(ts: &[UMor], units: &BTreeSet<String>) -> bool {
    if ts.is_empty() {
        return false;
    }
    let chained = ts.windows(2).all(|p| p[0].target() == p[1].source());
    chained
        && is_tidy(ts[0].source(), units)
        && ts
            .iter()
            .all(|t| t.is_generator_product() && is_tidy(t.target(), units))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::free::Content;

    fn t<const N: usize>(v: [&str; N]) -> Tuple {
        Tuple::from(v)
    }

    fn alg() -> UAlg {
        let g = GenSet::new(["a", "b"]).unwrap();
        let gp = GenSet::new(["fa", "fb", "z"]).unwrap();
        UAlg::new(
            Flavor::Braided,
            ObjMap::new(g, gp, [("a", "fa"), ("b", "fb")]).unwrap(),
        )
    }

    #[test]
    fn objmap_must_be_total() {
        let g = GenSet::new(["a", "b"]).unwrap();
        let gp = GenSet::new(["fa"]).unwrap();
        assert!(ObjMap::new(g.clone(), gp.clone(), [("a", "fa")]).is_err());
        assert!(ObjMap::new(g, gp, [("a", "fa"), ("b", "nope")]).is_err());
    }

    #[test]
    fn length_one_phi_letters_become_free() {
        let a = alg();
        let x = a.normalize(&[RawLetter::Phi(t(["a"]))]).unwrap();
        assert_eq!(x.letters(), &[ULetter::Free("fa".into())]);
        let y = a.normalize(&[RawLetter::Phi(t(["a", "b"]))]).unwrap();
        assert_eq!(y.letters(), &[ULetter::Phi(t(["a", "b"]))]);
        assert!(a.normalize(&[RawLetter::Free("q".into())]).is_err());
        assert!(a.normalize(&[RawLetter::Phi(t(["fa"]))]).is_err());
    }

    #[test]
    fn empty_phi_object_is_empty_word() {
        assert!(alg().phi_object(&Tuple2::empty()).unwrap().is_empty());
        let unit = alg().phi_tilde_unit().unwrap();
        assert!(unit.source().is_empty());
        assert_eq!(unit.target().letters(), &[ULetter::Phi(Tuple::empty())]);
    }

    #[test]
    fn phi_q_boundaries() {
        let q = alg().phi_q(&Tuple2(vec![t(["a"]), t(["a"])])).unwrap();
        assert_eq!(
            q.source().letters(),
            &[ULetter::Free("fa".into()), ULetter::Free("fa".into())]
        );
        assert_eq!(q.target().letters(), &[ULetter::Phi(t(["a", "a"]))]);
    }

    #[test]
    fn validation_reports_paths() {
        let a = alg();
        let q = UExpr::PhiQ(Tuple2(vec![t(["a"]), t(["b"])]));
        let bad = UExpr::Compose(Box::new(q.clone()), Box::new(q));
        match a.validate(&bad) {
            Err(Error::Typing { path, .. }) => assert_eq!(path, "compose"),
            other => panic!("unexpected {other:?}"),
        }
        let inner_bad = UExpr::Tensor(
            Box::new(UExpr::Id(UObj::empty())),
            Box::new(UExpr::PhiQ(Tuple2(vec![t(["c"])]))),
        );
        match a.validate(&inner_bad) {
            Err(Error::Typing { path, .. }) => assert_eq!(path, "tensor.right.q"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn kappa_then_dissolve() {
        let a = alg();
        let u = FreeMor::from_braid(t(["fa", "fb"]), BraidWord::parse("s1", 2).unwrap()).unwrap();
        assert_eq!(a.dissolve(&a.kappa_embed(&u).unwrap()).unwrap(), u);
    }

    #[test]
    fn dissolving_a_phi_letter_object() {
        let g = GenSet::new(["a1", "a2", "a3", "b1", "b2"]).unwrap();
        let gp = GenSet::new(["f1", "f2", "f3", "g1", "g2"]).unwrap();
        let phi = ObjMap::new(
            g,
            gp,
            [("a1", "f1"), ("a2", "f2"), ("a3", "f3"), ("b1", "g1"), ("b2", "g2")],
        )
        .unwrap();
        let a = UAlg::new(Flavor::Symmetric, phi);
        let x = a
            .phi_tilde_obj(&t(["a1", "a2", "a3", "b1", "b2"]))
            .unwrap();
        assert_eq!(a.dissolve_obj(&x).unwrap(), t(["f1", "f2", "f3", "g1", "g2"]));
    }

    #[test]
    fn q_inverse_round_trip() {
        let a = alg();
        let w = Tuple2(vec![t(["a", "b"]), t(["b"])]);
        let round = a.phi_q(&w).unwrap().compose(&a.phi_q_inv(&w).unwrap()).unwrap();
        let id = a.id(round.source());
        assert!(a.equal(&round, &id).unwrap());
    }

    #[test]
    fn braiding_needs_a_braided_flavor() {
        let a = alg().with_flavor(Flavor::Monoidal);
        assert!(a.braiding(&UObj::empty(), &UObj::empty()).is_err());
    }

    #[test]
    fn phi_free_dissolves_through_phi() {
        let a = alg();
        let w = Tuple2(vec![t(["a", "a"]), t(["b"])]);
        let inner = vec![
            FreeMor::identity(Flavor::Braided, t(["a", "a"])),
            FreeMor::identity(Flavor::Braided, t(["b"])),
        ];
        let u = FreeMor2::new(w, Content::Braid(BraidWord::parse("s1", 2).unwrap()), inner)
            .unwrap();
        let m = a.phi_free(&u).unwrap();
        let d = a.dissolve(&m).unwrap();
        assert_eq!(d.source(), &t(["fa", "fa", "fb"]));
        assert_eq!(d.target(), &t(["fb", "fa", "fa"]));
    }

    #[test]
    fn signatures_entrywise() {
        let a = alg();
        let x = a.free_obj(&t(["fa", "fb", "fa"])).unwrap();
        let sig = signature_of(&x, |g| Some(usize::from(g == "fa")), |_| None).unwrap();
        assert_eq!(sig, vec![1, 0, 1]);
        let y = a.phi_tilde_obj(&t(["a", "b"])).unwrap();
        assert!(signature_of(&y, |_| Some(0), |_| None).is_err());
    }

    #[test]
    fn tidiness() {
        let g = GenSet::new(["a", "zero"]).unwrap();
        let gp = GenSet::new(["fa", "fz"]).unwrap();
        let a = UAlg::new(
            Flavor::Symmetric,
            ObjMap::new(g, gp, [("a", "fa"), ("zero", "fz")]).unwrap(),
        );
        let units: BTreeSet<String> = ["zero".to_string()].into();
        let free = a.free_obj(&t(["fa", "fz"])).unwrap();
        assert!(is_tidy(&free, &units));
        let zz = a.phi_tilde_obj(&t(["zero", "zero"])).unwrap();
        assert!(!is_tidy(&zz, &units));
        let az = a.phi_tilde_obj(&t(["a", "zero"])).unwrap();
        assert!(is_tidy(&az, &units));

        let q = a.phi_q(&Tuple2(vec![t(["a"]), t(["zero"])])).unwrap();
        let step = q.tensor(&a.id(&free)).unwrap();
        assert!(is_tidy_composite(std::slice::from_ref(&step), &units));
        let composed = a.id(step.target()).compose(&step).unwrap();
        assert!(!is_tidy_composite(&[composed], &units));
        assert!(!is_tidy_composite(&[], &units));
    }
}
