//! Turning a parsed file into a checked [`Diagram`].
//!
//! Morphism expressions are elaborated against the object they start from.
//! Only a few literals need that object (`id`, an unannotated word or
//! permutation, `pf` without `on=`); everything else carries its own
//! boundary, which is how tensor factors are split.

use std::collections::HashMap;

use super::ast::*;
use super::{parse_source, Diagnostic, Span};
use crate::braid::BraidWord;
use crate::diagram::{Diagram, Goal, Path};
use crate::error::Error;
use crate::free::{Content, Flavor, FreeMor, FreeMor2, GenSet, Tuple, Tuple2};
use crate::functor::{compose_specs, derive_interp, make_builtin_spec, BuiltinKind, LetterInterp, SharedFunctor};
use crate::perm::Permutation;
use crate::ualg::{ObjMap, RawLetter, UAlg, ULetter, UMor, UObj};

enum Fail {
    /// The expression cannot be typed without knowing where it starts.
    NeedSource(Span),
    Diag(Diagnostic),
}

impl From<Diagnostic> for Fail {
    fn from(d: Diagnostic) -> Fail {
        Fail::Diag(d)
    }
}

type Elab<T> = Result<T, Fail>;

fn diag(span: Span, e: Error) -> Diagnostic {
    Diagnostic::at(span, e.to_string())
}

fn lift<T>(span: Span, r: crate::Result<T>) -> Elab<T> {
    r.map_err(|e| Fail::Diag(diag(span, e)))
}

fn settle<T>(r: Elab<T>) -> Result<T, Diagnostic> {
    r.map_err(|f| match f {
        Fail::Diag(d) => d,
        Fail::NeedSource(span) => Diagnostic::at(
            span,
            "cannot tell where this morphism starts; annotate it with `@ <object>`",
        ),
    })
}

fn tuple(names: &[Name]) -> Tuple {
    Tuple(names.iter().map(|n| n.text.clone()).collect())
}

fn tuple2(blocks: &[Block]) -> Tuple2 {
    Tuple2(blocks.iter().map(|b| tuple(b)).collect())
}

/// Parse and elaborate in one step. `flavor` replaces the declared flavor.
pub fn load_source(text: &str, flavor: Option<Flavor>) -> Result<Diagram, Diagnostic> {
    let file = parse_source(text)?;
    elaborate(&file, flavor)
}

pub fn elaborate(file: &SourceFile, flavor_override: Option<Flavor>) -> Result<Diagram, Diagnostic> {
    let whole = file.decls.first().map(|d| d.span).unwrap_or_default();
    let flavors: Vec<(Flavor, Span)> = file
        .decls
        .iter()
        .filter_map(|d| match d.kind {
            DeclKind::Flavor(f) => Some((f, d.span)),
            _ => None,
        })
        .collect();
    if flavors.len() > 1 {
        return Err(Diagnostic::at(flavors[1].1, "a file declares exactly one flavor"));
    }
    let flavor = match (flavor_override, flavors.first()) {
        (Some(f), _) => f,
        (None, Some((f, _))) => *f,
        (None, None) => return Err(Diagnostic::at(whole, "missing `flavor` declaration")),
    };

    let mut sets: HashMap<&str, GenSet> = HashMap::new();
    for d in &file.decls {
        if let DeclKind::Gens { name, members } = &d.kind {
            let set = GenSet::new(members.iter().map(|m| m.text.clone())).map_err(|e| diag(d.span, e))?;
            sets.insert(&name.text, set);
        }
    }
    let maps: Vec<&Decl> = file
        .decls
        .iter()
        .filter(|d| matches!(d.kind, DeclKind::Map { .. }))
        .collect();
    let phi = match maps.as_slice() {
        [] => {
            if sets.len() != 1 {
                return Err(Diagnostic::at(
                    whole,
                    "without a `map`, exactly one generator set is allowed",
                ));
            }
            let only = sets.values().next().expect("one set").clone();
            ObjMap::new(GenSet::new(Vec::<String>::new()).map_err(|e| diag(whole, e))?, only, Vec::<(String, String)>::new())
                .map_err(|e| diag(whole, e))?
        }
        [d] => {
            let DeclKind::Map {
                source,
                target,
                pairs,
                ..
            } = &d.kind
            else {
                unreachable!()
            };
            ObjMap::new(
                sets[source.text.as_str()].clone(),
                sets[target.text.as_str()].clone(),
                pairs.iter().map(|(a, b)| (a.text.clone(), b.text.clone())),
            )
            .map_err(|e| diag(d.span, e))?
        }
        [_, second, ..] => return Err(Diagnostic::at(second.span, "a file declares at most one `map`")),
    };

    let alg = UAlg::new(flavor, phi);
    let mut diagram = Diagram::new(alg.clone());
    let cx = Cx { alg: &alg };

    for d in &file.decls {
        if let DeclKind::Node { name, obj } = &d.kind {
            let o = cx.obj(obj)?;
            diagram.add_node(&name.text, o).map_err(|e| diag(name.span, e))?;
        }
    }
    for d in &file.decls {
        if let DeclKind::Edge {
            name,
            source,
            target,
            mor,
        } = &d.kind
        {
            let src = diagram.node(&source.text).map_err(|e| diag(source.span, e))?.clone();
            let m = settle(cx.mor(mor, Some(&src)))?;
            diagram
                .add_edge(&name.text, &source.text, &target.text, m)
                .map_err(|e| diag(mor.span, e))?;
        }
    }

    let mut functors: HashMap<&str, SharedFunctor> = HashMap::new();
    let mut last: Option<SharedFunctor> = None;
    let mut interp = LetterInterp::new();
    for d in &file.decls {
        match &d.kind {
            DeclKind::Functor { name, def } => {
                let f = match def {
                    FunctorExpr::Builtin { kind, on } => {
                        let kind = match kind {
                            BuiltinName::Identity => BuiltinKind::Identity,
                            BuiltinName::Doubling => BuiltinKind::Doubling,
                            BuiltinName::Quadrupling => BuiltinKind::Quadrupling,
                            BuiltinName::NFold(n) => BuiltinKind::NFold(*n as usize),
                        };
                        make_builtin_spec(kind, flavor, &sets[on.text.as_str()])
                    }
                    FunctorExpr::Compose(g, f) => {
                        compose_specs(functors[g.text.as_str()].clone(), functors[f.text.as_str()].clone())
                    }
                }
                .map_err(|e| diag(d.span, e))?;
                functors.insert(&name.text, f.clone());
                last = Some(f);
            }
            DeclKind::Interp { letter, image } => {
                interp.insert(letter.text.clone(), tuple(image));
            }
            _ => {}
        }
    }
    if let Some(f) = last {
        let span = file
            .decls
            .iter()
            .rev()
            .find(|d| matches!(d.kind, DeclKind::Functor { .. }))
            .map(|d| d.span)
            .unwrap_or_default();
        let full = derive_interp(&alg, f.as_ref(), &interp).map_err(|e| diag(span, e))?;
        diagram.set_lift(f, full).map_err(|e| diag(span, e))?;
    } else if let Some(d) = file.decls.iter().find(|d| matches!(d.kind, DeclKind::Interp { .. })) {
        return Err(Diagnostic::at(d.span, "`interp` needs a `functor` to read letters through"));
    }

    for d in &file.decls {
        if let DeclKind::Goal { name, lhs, rhs } = &d.kind {
            let goal = Goal {
                name: name.text.clone(),
                lhs: path(lhs),
                rhs: path(rhs),
            };
            diagram.add_goal(goal).map_err(|e| diag(d.span, e))?;
        }
    }
    Ok(diagram)
}

fn path(p: &PathExpr) -> Path {
    match p {
        PathExpr::Edges(es) => Path::of(&es.iter().map(|e| e.text.as_str()).collect::<Vec<_>>()),
        PathExpr::Identity(n) => Path::empty_at(&n.text),
    }
}

struct Cx<'a> {
    alg: &'a UAlg,
}

impl Cx<'_> {
    fn flavor(&self) -> Flavor {
        self.alg.flavor()
    }

    fn obj(&self, o: &ObjExpr) -> Result<UObj, Diagnostic> {
        let mut raw = Vec::new();
        for a in &o.atoms {
            match a {
                ObjAtom::Free(v) => raw.extend(v.iter().map(|n| RawLetter::Free(n.text.clone()))),
                ObjAtom::Phi(v) => raw.push(RawLetter::Phi(tuple(v))),
            }
        }
        self.alg.normalize(&raw).map_err(|e| diag(o.span, e))
    }

    /// A `[..]`-only object as a plain tuple, with no generator check.
    fn free_tuple(&self, o: &ObjExpr) -> Result<Tuple, Diagnostic> {
        let mut out = Vec::new();
        for a in &o.atoms {
            match a {
                ObjAtom::Free(v) => out.extend(v.iter().map(|n| n.text.clone())),
                ObjAtom::Phi(_) => {
                    return Err(Diagnostic::at(o.span, "a φ-letter cannot appear here"));
                }
            }
        }
        Ok(Tuple(out))
    }

    fn expect_source(&self, m: &UMor, src: Option<&UObj>, span: Span) -> Elab<()> {
        match src {
            Some(s) if s != m.source() => Err(Fail::Diag(Diagnostic::at(
                span,
                format!("this morphism starts at {}, but {} is expected here", m.source(), s),
            ))),
            _ => Ok(()),
        }
    }

    fn mor(&self, m: &MorExpr, src: Option<&UObj>) -> Elab<UMor> {
        let span = m.span;
        let out = match &m.kind {
            MorKind::Id(None) => match src {
                Some(s) => self.alg.id(s),
                None => return Err(Fail::NeedSource(span)),
            },
            MorKind::Id(Some(o)) => self.alg.id(&self.obj(o)?),
            MorKind::Word { .. } | MorKind::Perm { .. } => {
                let at = match &m.kind {
                    MorKind::Word { at, .. } | MorKind::Perm { at, .. } => at,
                    _ => unreachable!(),
                };
                let start = match (at, src) {
                    (Some(o), _) => self.obj(o)?,
                    (None, Some(s)) => s.clone(),
                    (None, None) => return Err(Fail::NeedSource(span)),
                };
                let Some(x) = start.free_word() else {
                    return Err(Fail::Diag(Diagnostic::at(
                        span,
                        format!("words act on free objects only, not on {start}"),
                    )));
                };
                let u = self.free_literal(m, &x)?;
                lift(span, self.alg.kappa_embed(&u))?
            }
            MorKind::Q { inverse, blocks } => {
                let w = tuple2(blocks);
                let r = if *inverse {
                    self.alg.phi_q_inv(&w)
                } else {
                    self.alg.phi_q(&w)
                };
                lift(span, r)?
            }
            MorKind::Pf { on, outer, inner } => {
                let blocks = match (on, src) {
                    (Some(b), _) => tuple2(b),
                    (None, Some(s)) => self.infer_blocks(s, span)?,
                    (None, None) => return Err(Fail::NeedSource(span)),
                };
                let n = blocks.len();
                let inner_mors = match inner {
                    None => blocks
                        .blocks()
                        .iter()
                        .map(|b| FreeMor::identity(self.flavor(), b.clone()))
                        .collect(),
                    Some(v) => {
                        if v.len() != n {
                            return Err(Fail::Diag(Diagnostic::at(
                                span,
                                format!("{} inner morphisms for {n} blocks", v.len()),
                            )));
                        }
                        let mut out = Vec::with_capacity(n);
                        for (e, b) in v.iter().zip(blocks.blocks()) {
                            out.push(self.free(e, Some(b))?);
                        }
                        out
                    }
                };
                let outer_content = match outer {
                    None => Content::identity(self.flavor(), n),
                    Some(o) => {
                        let labels = Tuple((0..n).map(|i| format!("#{i}")).collect());
                        self.free(o, Some(&labels))?.content().clone()
                    }
                };
                let u = lift(span, FreeMor2::new(blocks, outer_content, inner_mors))?;
                lift(span, self.alg.phi_free(&u))?
            }
            MorKind::Braid(x, y) => {
                let (x, y) = (self.obj(x)?, self.obj(y)?);
                lift(span, self.alg.braiding(&x, &y))?
            }
            MorKind::Compose(parts) => {
                let mut cur: Option<UMor> = None;
                for p in parts.iter().rev() {
                    let here = cur.as_ref().map(|c| c.target().clone());
                    let next = self.mor(p, here.as_ref().or(src))?;
                    cur = Some(match cur {
                        None => next,
                        Some(c) => lift(p.span, next.compose(&c))?,
                    });
                }
                cur.expect("composites have at least two factors")
            }
            MorKind::Tensor(parts) => {
                let pieces = split_tensor(parts, src.map(UObj::len), span, |p, s| {
                    self.mor(p, s.map(|(a, b)| src.expect("split needs a source").slice(a, b)).as_ref())
                }, |m| m.source().len())?;
                let mut it = pieces.into_iter();
                let mut acc = it.next().expect("tensors have at least two factors");
                for m in it {
                    acc = lift(span, acc.tensor(&m))?;
                }
                acc
            }
        };
        self.expect_source(&out, src, span)?;
        Ok(out)
    }

    /// `pf` blocks read off its source: a `Φ(w)` letter is the block `w`, a
    /// free letter the single generator mapped to it.
    fn infer_blocks(&self, s: &UObj, span: Span) -> Elab<Tuple2> {
        let mut blocks = Vec::new();
        for l in s.letters() {
            match l {
                ULetter::Phi(w) => blocks.push(w.clone()),
                ULetter::Free(g) => match self.alg.phi().preimages(g).as_slice() {
                    [a] => blocks.push(Tuple(vec![a.to_string()])),
                    [] => {
                        return Err(Fail::Diag(Diagnostic::at(
                            span,
                            format!("`{g}` is not a φ-image, so `pf` cannot start at {s}"),
                        )))
                    }
                    _ => {
                        return Err(Fail::Diag(Diagnostic::at(
                            span,
                            format!("`{g}` has several φ-preimages; give the blocks with `on=`"),
                        )))
                    }
                },
            }
        }
        Ok(Tuple2(blocks))
    }

    /// A word or permutation literal on the tuple `x`.
    fn free_literal(&self, m: &MorExpr, x: &Tuple) -> Elab<FreeMor> {
        let span = m.span;
        match &m.kind {
            MorKind::Word { text, .. } => {
                let w = lift(span, BraidWord::parse(text, x.len()))?;
                match self.flavor() {
                    Flavor::Braided => lift(span, FreeMor::from_braid(x.clone(), w)),
                    Flavor::Symmetric => lift(span, FreeMor::from_perm(x.clone(), w.underlying_permutation())),
                    Flavor::Monoidal if w.letters().is_empty() => Ok(FreeMor::identity(Flavor::Monoidal, x.clone())),
                    Flavor::Monoidal => Err(Fail::Diag(Diagnostic::at(
                        span,
                        "braid words need a braided or symmetric flavor",
                    ))),
                }
            }
            MorKind::Perm { image, .. } => {
                if self.flavor() != Flavor::Symmetric {
                    return Err(Fail::Diag(Diagnostic::at(
                        span,
                        format!("`perm(..)` is only meaningful in the symmetric flavor, not {}", self.flavor()),
                    )));
                }
                let image: Vec<usize> = image.iter().map(|&v| v as usize).collect();
                let p = lift(span, Permutation::from_one_line(&image))?;
                if p.len() != x.len() {
                    return Err(Fail::Diag(Diagnostic::at(
                        span,
                        format!("permutation of {} strands on {} letters", p.len(), x.len()),
                    )));
                }
                lift(span, FreeMor::from_perm(x.clone(), p))
            }
            _ => unreachable!("only word and permutation literals"),
        }
    }

    /// A morphism of the free category on plain labels, used for the parts
    /// of a `pf` literal.
    fn free(&self, m: &MorExpr, src: Option<&Tuple>) -> Elab<FreeMor> {
        let span = m.span;
        let out = match &m.kind {
            MorKind::Id(None) => match src {
                Some(s) => FreeMor::identity(self.flavor(), s.clone()),
                None => return Err(Fail::NeedSource(span)),
            },
            MorKind::Id(Some(o)) => FreeMor::identity(self.flavor(), self.free_tuple(o)?),
            MorKind::Word { at, .. } | MorKind::Perm { at, .. } => {
                let x = match (at, src) {
                    (Some(o), _) => self.free_tuple(o)?,
                    (None, Some(s)) => s.clone(),
                    (None, None) => return Err(Fail::NeedSource(span)),
                };
                self.free_literal(m, &x)?
            }
            MorKind::Braid(x, y) => {
                let (x, y) = (self.free_tuple(x)?, self.free_tuple(y)?);
                lift(span, FreeMor::braiding(self.flavor(), &x, &y))?
            }
            MorKind::Compose(parts) => {
                let mut cur: Option<FreeMor> = None;
                for p in parts.iter().rev() {
                    let here = cur.as_ref().map(|c| c.target().clone());
                    let next = self.free(p, here.as_ref().or(src))?;
                    cur = Some(match cur {
                        None => next,
                        Some(c) => lift(p.span, next.compose(&c))?,
                    });
                }
                cur.expect("composites have at least two factors")
            }
            MorKind::Tensor(parts) => {
                let pieces = split_tensor(parts, src.map(Tuple::len), span, |p, s| {
                    let sub = s.map(|(a, b)| Tuple(src.expect("split needs a source").0[a..b].to_vec()));
                    self.free(p, sub.as_ref())
                }, |m| m.source().len())?;
                let mut it = pieces.into_iter();
                let mut acc = it.next().expect("tensors have at least two factors");
                for m in it {
                    acc = lift(span, acc.tensor(&m))?;
                }
                acc
            }
            MorKind::Q { .. } | MorKind::Pf { .. } => {
                return Err(Fail::Diag(Diagnostic::at(
                    span,
                    "`q` and `pf` cannot appear inside a `pf` literal",
                )))
            }
        };
        if let Some(s) = src {
            if s != out.source() {
                return Err(Fail::Diag(Diagnostic::at(
                    span,
                    format!("this morphism starts at {}, but {} is expected here", out.source(), s),
                )));
            }
        }
        Ok(out)
    }
}

/// Elaborate the factors of a tensor. Factors that type on their own fix
/// their widths; a single factor that needs its source gets what is left.
fn split_tensor<M>(
    parts: &[MorExpr],
    total: Option<usize>,
    span: Span,
    elab: impl Fn(&MorExpr, Option<(usize, usize)>) -> Elab<M>,
    width: impl Fn(&M) -> usize,
) -> Elab<Vec<M>> {
    let mut done: Vec<Option<M>> = Vec::with_capacity(parts.len());
    let mut unknown = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        match elab(p, None) {
            Ok(m) => done.push(Some(m)),
            Err(Fail::NeedSource(s)) => {
                unknown.push((i, s));
                done.push(None);
            }
            Err(e) => return Err(e),
        }
    }
    if unknown.is_empty() {
        return Ok(done.into_iter().map(|m| m.expect("all typed")).collect());
    }
    let Some(total) = total else {
        return Err(Fail::NeedSource(unknown[0].1));
    };
    if unknown.len() > 1 {
        return Err(Fail::Diag(Diagnostic::at(
            unknown[1].1,
            "only one factor of a tensor may leave its width implicit; annotate with `@ <object>`",
        )));
    }
    let known: usize = done.iter().flatten().map(&width).sum();
    if known > total {
        return Err(Fail::Diag(Diagnostic::at(
            span,
            format!("tensor factors span {known} letters but the source has {total}"),
        )));
    }
    let (hole, _) = unknown[0];
    let offset: usize = done[..hole].iter().flatten().map(&width).sum();
    let filled = elab(&parts[hole], Some((offset, offset + total - known)))?;
    done[hole] = Some(filled);
    Ok(done.into_iter().map(|m| m.expect("all typed")).collect())
}
