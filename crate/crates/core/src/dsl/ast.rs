//! Syntax trees for `.coh` files. Spans never take part in equality.

use super::Span;
use crate::free::Flavor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Name {
    pub text: String,
    pub span: Span,
}

impl Name {
    pub fn new(text: &str) -> Name {
        Name {
            text: text.to_string(),
            span: Span::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SourceFile {
    pub decls: Vec<Decl>,
}

impl SourceFile {
    pub fn nodes(&self) -> impl Iterator<Item = &Decl> {
        self.decls.iter().filter(|d| matches!(d.kind, DeclKind::Node { .. }))
    }

    pub fn edges(&self) -> impl Iterator<Item = &Decl> {
        self.decls.iter().filter(|d| matches!(d.kind, DeclKind::Edge { .. }))
    }

    pub fn goals(&self) -> impl Iterator<Item = &Decl> {
        self.decls.iter().filter(|d| matches!(d.kind, DeclKind::Goal { .. }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decl {
    pub kind: DeclKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeclKind {
    Flavor(Flavor),
    Gens {
        name: Name,
        members: Vec<Name>,
    },
    Map {
        name: Name,
        source: Name,
        target: Name,
        pairs: Vec<(Name, Name)>,
    },
    Node {
        name: Name,
        obj: ObjExpr,
    },
    Edge {
        name: Name,
        source: Name,
        target: Name,
        mor: MorExpr,
    },
    Functor {
        name: Name,
        def: FunctorExpr,
    },
    Interp {
        letter: Name,
        image: Vec<Name>,
    },
    Goal {
        name: Name,
        lhs: PathExpr,
        rhs: PathExpr,
    },
}

/// Concatenation of atoms, `[x, y]; phi(a a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjExpr {
    pub atoms: Vec<ObjAtom>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjAtom {
    Free(Vec<Name>),
    Phi(Vec<Name>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorExpr {
    pub kind: MorKind,
    pub span: Span,
}

/// A block of a φ-adjoined or φ-free literal; empty blocks are written `[]`.
pub type Block = Vec<Name>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorKind {
    Id(Option<ObjExpr>),
    Word {
        text: String,
        at: Option<ObjExpr>,
    },
    Perm {
        image: Vec<u64>,
        at: Option<ObjExpr>,
    },
    Q {
        inverse: bool,
        blocks: Vec<Block>,
    },
    Pf {
        on: Option<Vec<Block>>,
        outer: Option<Box<MorExpr>>,
        inner: Option<Vec<MorExpr>>,
    },
    Braid(ObjExpr, ObjExpr),
    /// Written order: the last factor runs first.
    Compose(Vec<MorExpr>),
    Tensor(Vec<MorExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctorExpr {
    Builtin { kind: BuiltinName, on: Name },
    Compose(Name, Name),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinName {
    Identity,
    Doubling,
    Quadrupling,
    NFold(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathExpr {
    Edges(Vec<Name>),
    Identity(Name),
}
