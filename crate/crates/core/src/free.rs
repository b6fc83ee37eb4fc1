//! Free strict monoidal categories `T G` in the plain, symmetric and braided
//! flavors, plus the nested algebra `T²G`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{block_braid, braid_equal, BraidWord};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Plain strict monoidal.
    Monoidal,
    Symmetric,
    Braided,
}

impl Flavor {
    pub fn has_braiding(self) -> bool {
        self != Flavor::Monoidal
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Flavor::Monoidal => "monoidal",
            Flavor::Symmetric => "symmetric",
            Flavor::Braided => "braided",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Monoidal => "M",
            Flavor::Symmetric => "S",
            Flavor::Braided => "B",
        })
    }
}

/// An ordered finite set of generator names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenSet {
    names: Vec<String>,
}

impl GenSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for n in names {
            let n = n.into();
            if n.is_empty() {
                return Err(Error::InvalidName("generator names must be nonempty".into()));
            }
            if out.contains(&n) {
                return Err(Error::InvalidName(format!("generator `{n}` listed twice")));
            }
            out.push(n);
        }
        Ok(GenSet { names: out })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn contains(&self, g: &str) -> bool {
        self.names.iter().any(|n| n == g)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// `η(g) = (g)`.
    pub fn unit_embed(&self, g: &str) -> Result<Tuple> {
        if !self.contains(g) {
            return Err(Error::UnknownName(g.to_string()));
        }
        Ok(Tuple::from([g]))
    }

    pub fn check(&self, t: &Tuple) -> Result<()> {
        match t.iter().find(|g| !self.contains(g)) {
            Some(g) => Err(Error::UnknownName(g.clone())),
            None => Ok(()),
        }
    }

    /// All tuples of length at most `max_len`, shortest first.
    pub fn tuples_up_to(&self, max_len: usize) -> Vec<Tuple> {
        let mut out = vec![Tuple::empty()];
        let mut layer = vec![Tuple::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for t in &layer {
                for g in &self.names {
                    let mut v = t.0.clone();
                    v.push(g.clone());
                    next.push(Tuple(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

/// An object of `T G`: a word in the generators.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tuple(pub Vec<String>);

impl Tuple {
    pub fn empty() -> Self {
        Tuple(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, String> {
        self.0.iter()
    }

    pub fn concat(&self, other: &Tuple) -> Tuple {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Tuple(v)
    }

    pub fn count(&self, g: &str) -> usize {
        self.0.iter().filter(|x| *x == g).count()
    }

    /// Apply a letter map (for instance `T φ`).
    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Tuple> {
        self.0
            .iter()
            .map(|g| map.get(g).cloned().ok_or_else(|| Error::UnknownName(g.clone())))
            .collect::<Result<Vec<_>>>()
            .map(Tuple)
    }
}

impl<S: Into<String>, const N: usize> From<[S; N]> for Tuple {
    fn from(v: [S; N]) -> Self {
        Tuple(v.into_iter().map(Into::into).collect())
    }
}

impl FromIterator<String> for Tuple {
    fn from_iter<I: IntoIterator<Item = String>>(iter: I) -> Self {
        Tuple(iter.into_iter().collect())
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(", "))
    }
}

impl fmt::Debug for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Morphism content: nothing, a permutation, or a braid word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Content {
    Plain(usize),
    Perm(Permutation),
    Braid(BraidWord),
}

impl Content {
    pub fn identity(flavor: Flavor, n: usize) -> Content {
        match flavor {
            Flavor::Monoidal => Content::Plain(n),
            Flavor::Symmetric => Content::Perm(Permutation::identity(n)),
            Flavor::Braided => Content::Braid(BraidWord::identity(n)),
        }
    }

    /// The content of the block transposition `x;y → y;x`.
    pub fn block_swap(flavor: Flavor, m: usize, k: usize) -> Result<Content> {
        match flavor {
            Flavor::Monoidal => Err(Error::Unsupported(
                "plain monoidal categories have no braiding".into(),
            )),
            Flavor::Symmetric => Ok(Content::Perm(Permutation::block_transposition(m, k))),
            Flavor::Braided => Ok(Content::Braid(block_braid(m, k))),
        }
    }

    pub fn flavor(&self) -> Flavor {
        match self {
            Content::Plain(_) => Flavor::Monoidal,
            Content::Perm(_) => Flavor::Symmetric,
            Content::Braid(_) => Flavor::Braided,
        }
    }

    pub fn strands(&self) -> usize {
        match self {
            Content::Plain(n) => *n,
            Content::Perm(p) => p.len(),
            Content::Braid(w) => w.strands(),
        }
    }

    pub fn permutation(&self) -> Permutation {
        match self {
            Content::Plain(n) => Permutation::identity(*n),
            Content::Perm(p) => p.clone(),
            Content::Braid(w) => w.underlying_permutation(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Content::Plain(_) => true,
            Content::Perm(p) => p.is_identity(),
            Content::Braid(w) => w.is_empty(),
        }
    }

    fn same_flavor(&self, other: &Content) -> Result<()> {
        if self.flavor() != other.flavor() {
            return Err(Error::Flavor(format!(
                "cannot combine {} with {} content",
                self.flavor(),
                other.flavor()
            )));
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Content) -> Result<Content> {
        self.same_flavor(other)?;
        if self.strands() != other.strands() {
            return Err(Error::Composition(format!(
                "{} strands after {} strands",
                self.strands(),
                other.strands()
            )));
        }
        Ok(match (self, other) {
            (Content::Plain(n), Content::Plain(_)) => Content::Plain(*n),
            (Content::Perm(p), Content::Perm(q)) => Content::Perm(p.compose(q)?),
            (Content::Braid(u), Content::Braid(v)) => Content::Braid(u.compose(v)?),
            _ => unreachable!("flavors checked"),
        })
    }

    pub fn tensor(&self, other: &Content) -> Result<Content> {
        self.same_flavor(other)?;
        Ok(match (self, other) {
            (Content::Plain(n), Content::Plain(m)) => Content::Plain(n + m),
            (Content::Perm(p), Content::Perm(q)) => Content::Perm(p.block_sum(q)),
            (Content::Braid(u), Content::Braid(v)) => Content::Braid(u.tensor(v)),
            _ => unreachable!("flavors checked"),
        })
    }

    pub fn inverse(&self) -> Content {
        match self {
            Content::Plain(n) => Content::Plain(*n),
            Content::Perm(p) => Content::Perm(p.inverse()),
            Content::Braid(w) => Content::Braid(w.inverse()),
        }
    }

    pub fn cable(&self, sizes: &[usize]) -> Result<Content> {
        Ok(match self {
            Content::Plain(n) => {
                if sizes.len() != *n {
                    return Err(Error::Arity {
                        expected: *n,
                        found: sizes.len(),
                    });
                }
                Content::Plain(sizes.iter().sum())
            }
            Content::Perm(p) => Content::Perm(p.cable(sizes)?),
            Content::Braid(w) => Content::Braid(w.cable(sizes)?),
        })
    }

    /// Forget down to a weaker flavor (B → S → M).
    pub fn forget_to(&self, flavor: Flavor) -> Result<Content> {
        match (self, flavor) {
            (c, f) if c.flavor() == f => Ok(c.clone()),
            (Content::Braid(w), Flavor::Symmetric) => Ok(Content::Perm(w.underlying_permutation())),
            (c, Flavor::Monoidal) if c.is_identity() => Ok(Content::Plain(c.strands())),
            (c, f) => Err(Error::Flavor(format!(
                "cannot read {} content in flavor {f}",
                c.flavor()
            ))),
        }
    }

    fn equal(&self, other: &Content) -> Result<bool> {
        self.same_flavor(other)?;
        Ok(match (self, other) {
            (Content::Plain(n), Content::Plain(m)) => n == m,
            (Content::Perm(p), Content::Perm(q)) => p == q,
            (Content::Braid(u), Content::Braid(v)) => braid_equal(u, v)?,
            _ => unreachable!("flavors checked"),
        })
    }

    pub fn braid(&self) -> Option<&BraidWord> {
        match self {
            Content::Braid(w) => Some(w),
            _ => None,
        }
    }
}

/// A morphism of `T G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeMor {
    source: Tuple,
    target: Tuple,
    content: Content,
}

impl FreeMor {
    /// Build from source and content; the target is computed.
    pub fn new(source: Tuple, content: Content) -> Result<FreeMor> {
        if content.strands() != source.len() {
            return Err(Error::Arity {
                expected: source.len(),
                found: content.strands(),
            });
        }
        if let Content::Plain(_) = content {
            return Ok(FreeMor {
                target: source.clone(),
                source,
                content,
            });
        }
        let target = Tuple(content.permutation().permute(&source.0)?);
        Ok(FreeMor {
            source,
            target,
            content,
        })
    }

    /// Build and check against a stated target.
    pub fn with_target(source: Tuple, target: Tuple, content: Content) -> Result<FreeMor> {
        let m = FreeMor::new(source, content)?;
        if m.target != target {
            return Err(Error::Composition(format!(
                "content sends {} to {}, not {}",
                m.source, m.target, target
            )));
        }
        Ok(m)
    }

    pub fn identity(flavor: Flavor, x: Tuple) -> FreeMor {
        FreeMor {
            content: Content::identity(flavor, x.len()),
            target: x.clone(),
            source: x,
        }
    }

    pub fn from_braid(source: Tuple, word: BraidWord) -> Result<FreeMor> {
        FreeMor::new(source, Content::Braid(word))
    }

    pub fn from_perm(source: Tuple, perm: Permutation) -> Result<FreeMor> {
        FreeMor::new(source, Content::Perm(perm))
    }

    /// `β_{x,y}: x;y → y;x`.
    pub fn braiding(flavor: Flavor, x: &Tuple, y: &Tuple) -> Result<FreeMor> {
        FreeMor::new(x.concat(y), Content::block_swap(flavor, x.len(), y.len())?)
    }

    pub fn flavor(&self) -> Flavor {
        self.content.flavor()
    }

    pub fn source(&self) -> &Tuple {
        &self.source
    }

    pub fn target(&self) -> &Tuple {
        &self.target
    }

    pub fn content(&self) -> &Content {
        &self.content
    }

    pub fn braid(&self) -> Option<&BraidWord> {
        self.content.braid()
    }

    pub fn permutation(&self) -> Permutation {
        self.content.permutation()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeMor) -> Result<FreeMor> {
        if self.flavor() != other.flavor() {
            return Err(Error::Flavor(format!(
                "composing {} after {}",
                self.flavor(),
                other.flavor()
            )));
        }
        if self.source != other.target {
            return Err(Error::Composition(format!(
                "{} does not start where {} ends",
                self.source, other.target
            )));
        }
        Ok(FreeMor {
            source: other.source.clone(),
            target: self.target.clone(),
            content: self.content.compose(&other.content)?,
        })
    }

    pub fn tensor(&self, other: &FreeMor) -> Result<FreeMor> {
        Ok(FreeMor {
            source: self.source.concat(&other.source),
            target: self.target.concat(&other.target),
            content: self.content.tensor(&other.content)?,
        })
    }

    pub fn inverse(&self) -> FreeMor {
        FreeMor {
            source: self.target.clone(),
            target: self.source.clone(),
            content: self.content.inverse(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.content.is_identity()
    }

    /// Decide equality of parallel morphisms.
    pub fn equals(&self, other: &FreeMor) -> Result<bool> {
        if self.flavor() != other.flavor() {
            return Err(Error::Flavor(format!(
                "comparing {} with {}",
                self.flavor(),
                other.flavor()
            )));
        }
        if self.source != other.source || self.target != other.target {
            return Err(Error::Incomparable(format!(
                "{} → {} versus {} → {}",
                self.source, self.target, other.source, other.target
            )));
        }
        self.content.equal(&other.content)
    }

    /// Permutation induced on the strands labeled `g`, in any flavor.
    pub fn self_permutation(&self, g: &str) -> Permutation {
        let pi = self.permutation();
        let targets: Vec<usize> = (0..self.target.len())
            .filter(|&j| self.target.0[j] == g)
            .collect();
        let image = (0..self.source.len())
            .filter(|&i| self.source.0[i] == g)
            .map(|i| {
                let j = pi.apply0(i);
                targets.binary_search(&j).expect("labels preserved")
            })
            .collect();
        Permutation::from_zero_based(image)
    }

    /// `I_g(u)`, defined for symmetric morphisms.
    pub fn project_generator(&self, g: &str) -> Result<Permutation> {
        if self.flavor() != Flavor::Symmetric {
            return Err(Error::Unsupported(format!(
                "generator projection needs a symmetric morphism, found flavor {}",
                self.flavor()
            )));
        }
        Ok(self.self_permutation(g))
    }

    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<FreeMor> {
        Ok(FreeMor {
            source: self.source.relabel(map)?,
            target: self.target.relabel(map)?,
            content: self.content.clone(),
        })
    }

    pub fn forget_to(&self, flavor: Flavor) -> Result<FreeMor> {
        Ok(FreeMor {
            source: self.source.clone(),
            target: self.target.clone(),
            content: self.content.forget_to(flavor)?,
        })
    }

    /// Text form of the content: a braid word, `perm(...)`, or `id`.
    pub fn content_text(&self) -> String {
        match &self.content {
            Content::Plain(_) => "id".into(),
            Content::Perm(p) => p.to_literal(),
            Content::Braid(w) => format!("\"{w}\""),
        }
    }
}

impl fmt::Display for FreeMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} → {}", self.content_text(), self.source, self.target)
    }
}

pub fn fmor_compose(u: &FreeMor, v: &FreeMor) -> Result<FreeMor> {
    u.compose(v)
}

pub fn fmor_tensor(u: &FreeMor, v: &FreeMor) -> Result<FreeMor> {
    u.tensor(v)
}

pub fn fmor_braiding(flavor: Flavor, x: &Tuple, y: &Tuple) -> Result<FreeMor> {
    FreeMor::braiding(flavor, x, y)
}

pub fn fmor_equal(u: &FreeMor, v: &FreeMor) -> Result<bool> {
    u.equals(v)
}

/// A list of tuples: an object of `T²G`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple2(pub Vec<Tuple>);

impl Tuple2 {
    pub fn empty() -> Self {
        Tuple2(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn blocks(&self) -> &[Tuple] {
        &self.0
    }

    /// `w_•`: the concatenation of all blocks.
    pub fn flatten(&self) -> Tuple {
        Tuple(self.0.iter().flat_map(|t| t.0.iter().cloned()).collect())
    }

    pub fn concat(&self, other: &Tuple2) -> Tuple2 {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Tuple2(v)
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(Tuple::len).collect()
    }

    /// One singleton block per letter.
    pub fn singletons(x: &Tuple) -> Tuple2 {
        Tuple2(x.iter().map(|g| Tuple(vec![g.clone()])).collect())
    }
}

impl fmt::Display for Tuple2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.0.join(" ")).collect();
        write!(f, "({})", parts.join(" | "))
    }
}

impl fmt::Debug for Tuple2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A morphism of `T²G`: an outer free morphism on blocks plus one inner
/// morphism per block. Inner `i` maps source block `i` to the target block
/// at position `π(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeMor2 {
    source: Tuple2,
    target: Tuple2,
    outer: Content,
    inner: Vec<FreeMor>,
}

impl FreeMor2 {
    pub fn new(source: Tuple2, outer: Content, inner: Vec<FreeMor>) -> Result<FreeMor2> {
        let m = source.len();
        if outer.strands() != m {
            return Err(Error::Structure(format!(
                "outer content has {} strands for {} blocks",
                outer.strands(),
                m
            )));
        }
        if inner.len() != m {
            return Err(Error::Structure(format!(
                "{} inner morphisms for {} blocks",
                inner.len(),
                m
            )));
        }
        for (i, (u, block)) in inner.iter().zip(source.blocks()).enumerate() {
            if u.flavor() != outer.flavor() {
                return Err(Error::Flavor(format!(
                    "inner morphism {i} has flavor {}, outer has {}",
                    u.flavor(),
                    outer.flavor()
                )));
            }
            if u.source() != block {
                return Err(Error::Structure(format!(
                    "inner morphism {i} starts at {}, block is {}",
                    u.source(),
                    block
                )));
            }
        }
        let inner_targets: Vec<Tuple> = inner.iter().map(|u| u.target().clone()).collect();
        let target = Tuple2(outer.permutation().permute(&inner_targets)?);
        Ok(FreeMor2 {
            source,
            target,
            outer,
            inner,
        })
    }

    pub fn identity(flavor: Flavor, w: Tuple2) -> FreeMor2 {
        let inner = w
            .blocks()
            .iter()
            .map(|t| FreeMor::identity(flavor, t.clone()))
            .collect();
        FreeMor2 {
            outer: Content::identity(flavor, w.len()),
            target: w.clone(),
            source: w,
            inner,
        }
    }

    /// A single block carrying `u`.
    pub fn one_block(u: FreeMor) -> FreeMor2 {
        FreeMor2 {
            source: Tuple2(vec![u.source().clone()]),
            target: Tuple2(vec![u.target().clone()]),
            outer: Content::identity(u.flavor(), 1),
            inner: vec![u],
        }
    }

    /// `u` acting on singleton blocks.
    pub fn on_singletons(u: &FreeMor) -> FreeMor2 {
        let flavor = u.flavor();
        FreeMor2 {
            source: Tuple2::singletons(u.source()),
            target: Tuple2::singletons(u.target()),
            outer: u.content().clone(),
            inner: u
                .source()
                .iter()
                .map(|g| FreeMor::identity(flavor, Tuple(vec![g.clone()])))
                .collect(),
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.outer.flavor()
    }

    pub fn source(&self) -> &Tuple2 {
        &self.source
    }

    pub fn target(&self) -> &Tuple2 {
        &self.target
    }

    pub fn outer(&self) -> &Content {
        &self.outer
    }

    pub fn inner(&self) -> &[FreeMor] {
        &self.inner
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeMor2) -> Result<FreeMor2> {
        if self.source != other.target {
            return Err(Error::Composition(format!(
                "{} does not start where {} ends",
                self.source, other.target
            )));
        }
        let pi = other.outer.permutation();
        let inner = other
            .inner
            .iter()
            .enumerate()
            .map(|(i, v)| self.inner[pi.apply0(i)].compose(v))
            .collect::<Result<Vec<_>>>()?;
        FreeMor2::new(
            other.source.clone(),
            self.outer.compose(&other.outer)?,
            inner,
        )
    }

    pub fn tensor(&self, other: &FreeMor2) -> Result<FreeMor2> {
        let mut inner = self.inner.clone();
        inner.extend(other.inner.iter().cloned());
        FreeMor2::new(
            self.source.concat(&other.source),
            self.outer.tensor(&other.outer)?,
            inner,
        )
    }

    /// `μ`: concatenate blocks, cabling the outer content.
    pub fn flatten(&self) -> Result<FreeMor> {
        let flavor = self.flavor();
        let mut sum = FreeMor::identity(flavor, Tuple::empty());
        for u in &self.inner {
            sum = sum.tensor(u)?;
        }
        let sizes: Vec<usize> = self.inner.iter().map(|u| u.target().len()).collect();
        let outer = FreeMor::new(sum.target().clone(), self.outer.cable(&sizes)?)?;
        outer.compose(&sum)
    }
}

pub fn flatten_mu(u: &FreeMor2) -> Result<FreeMor> {
    u.flatten()
}
