use std::collections::HashMap;

use super::ast::*;
use super::lexer::{lex, Tok, Token};
use super::{Diagnostic, Span};
use crate::free::Flavor;

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, Diagnostic>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos.min(self.toks.len() - 1)].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos.min(self.toks.len() - 1)].span
    }

    fn prev_span(&self) -> Span {
        self.toks[self.pos.saturating_sub(1).min(self.toks.len() - 1)].span
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos.min(self.toks.len() - 1)].clone();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> PResult<T> {
        Err(Diagnostic {
            message: format!("expected {expected}, found {}", self.peek().describe()),
            span: self.span(),
        })
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> PResult<Span> {
        if *self.peek() == tok {
            Ok(self.bump().span)
        } else {
            self.error(what)
        }
    }

    fn is_ident(&self, word: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == word)
    }

    fn ident(&mut self, what: &str) -> PResult<Name> {
        match self.peek().clone() {
            Tok::Ident(text) => {
                let span = self.bump().span;
                Ok(Name { text, span })
            }
            _ => self.error(what),
        }
    }

    fn keyword(&mut self, word: &str) -> PResult<()> {
        if self.is_ident(word) {
            self.bump();
            Ok(())
        } else {
            self.error(&format!("`{word}`"))
        }
    }

    fn join(&self, start: Span) -> Span {
        let end = self.prev_span();
        Span {
            end: end.end.max(start.start),
            ..start
        }
    }

    fn file(&mut self) -> PResult<SourceFile> {
        let mut decls = Vec::new();
        loop {
            while self.eat(&Tok::Newline) {}
            if *self.peek() == Tok::Eof {
                return Ok(SourceFile { decls });
            }
            decls.push(self.decl()?);
            match self.peek() {
                Tok::Newline | Tok::Eof => {}
                _ => return self.error("end of line"),
            }
        }
    }

    fn decl(&mut self) -> PResult<Decl> {
        let start = self.span();
        let head = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.error("a declaration"),
        };
        self.bump();
        let kind = match head.as_str() {
            "flavor" => {
                let f = match self.peek() {
                    Tok::Ident(s) if s == "braided" => Flavor::Braided,
                    Tok::Ident(s) if s == "symmetric" => Flavor::Symmetric,
                    Tok::Ident(s) if s == "monoidal" => Flavor::Monoidal,
                    _ => return self.error("`braided`, `symmetric` or `monoidal`"),
                };
                self.bump();
                DeclKind::Flavor(f)
            }
            "gens" => {
                let name = self.ident("a generator set name")?;
                self.expect(Tok::Eq, "`=`")?;
                self.expect(Tok::LBrace, "`{`")?;
                let mut members = Vec::new();
                while *self.peek() != Tok::RBrace {
                    members.push(self.ident("a generator name")?);
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
                self.expect(Tok::RBrace, "`}`")?;
                DeclKind::Gens { name, members }
            }
            "map" => {
                let name = self.ident("a map name")?;
                self.expect(Tok::Colon, "`:`")?;
                let source = self.ident("a generator set")?;
                self.expect(Tok::Arrow, "`->`")?;
                let target = self.ident("a generator set")?;
                self.expect(Tok::LBrace, "`{`")?;
                let mut pairs = Vec::new();
                while *self.peek() != Tok::RBrace {
                    let a = self.ident("a generator")?;
                    self.expect(Tok::Arrow, "`->`")?;
                    let b = self.ident("a generator")?;
                    pairs.push((a, b));
                    if !(self.eat(&Tok::Semi) || self.eat(&Tok::Comma)) {
                        break;
                    }
                }
                self.expect(Tok::RBrace, "`}`")?;
                DeclKind::Map {
                    name,
                    source,
                    target,
                    pairs,
                }
            }
            "node" => {
                let name = self.ident("a node name")?;
                self.expect(Tok::Eq, "`=`")?;
                let obj = self.obj()?;
                DeclKind::Node { name, obj }
            }
            "edge" => {
                let name = self.ident("an edge name")?;
                self.expect(Tok::Colon, "`:`")?;
                let source = self.ident("a node name")?;
                self.expect(Tok::Arrow, "`->`")?;
                let target = self.ident("a node name")?;
                self.expect(Tok::Eq, "`=`")?;
                let mor = self.mor()?;
                DeclKind::Edge {
                    name,
                    source,
                    target,
                    mor,
                }
            }
            "functor" => {
                let name = self.ident("a functor name")?;
                self.expect(Tok::Eq, "`=`")?;
                let def = self.functor()?;
                DeclKind::Functor { name, def }
            }
            "interp" => {
                let letter = self.ident("a letter")?;
                self.expect(Tok::Eq, "`=`")?;
                let image = self.tuple()?;
                DeclKind::Interp { letter, image }
            }
            "goal" => {
                let name = self.ident("a goal name")?;
                self.expect(Tok::Colon, "`:`")?;
                let lhs = self.path()?;
                self.expect(Tok::EqEq, "`==`")?;
                let rhs = self.path()?;
                DeclKind::Goal { name, lhs, rhs }
            }
            _ => {
                return Err(Diagnostic {
                    message: format!("unknown declaration `{head}`"),
                    span: start,
                })
            }
        };
        Ok(Decl {
            kind,
            span: self.join(start),
        })
    }

    fn functor(&mut self) -> PResult<FunctorExpr> {
        if self.is_ident("compose") {
            self.bump();
            self.expect(Tok::LParen, "`(`")?;
            let g = self.ident("a functor name")?;
            self.expect(Tok::Comma, "`,`")?;
            let f = self.ident("a functor name")?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(FunctorExpr::Compose(g, f));
        }
        let kind = match self.peek() {
            Tok::Ident(s) if s == "identity" => BuiltinName::Identity,
            Tok::Ident(s) if s == "doubling" => BuiltinName::Doubling,
            Tok::Ident(s) if s == "quadrupling" => BuiltinName::Quadrupling,
            Tok::Ident(s) if s == "nfold" => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let n = match self.peek() {
                    Tok::Int(n) => *n,
                    _ => return self.error("a number"),
                };
                self.bump();
                if *self.peek() != Tok::RParen {
                    return self.error("`)`");
                }
                BuiltinName::NFold(n)
            }
            _ => return self.error("`identity`, `doubling`, `quadrupling`, `nfold(n)` or `compose`"),
        };
        self.bump();
        self.keyword("on")?;
        let on = self.ident("a generator set")?;
        Ok(FunctorExpr::Builtin { kind, on })
    }

    fn path(&mut self) -> PResult<PathExpr> {
        if self.is_ident("id") && *self.peek_at(1) == Tok::LParen {
            self.bump();
            self.bump();
            let n = self.ident("a node name")?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(PathExpr::Identity(n));
        }
        let mut edges = vec![self.ident("an edge name")?];
        while self.eat(&Tok::Dot) {
            edges.push(self.ident("an edge name")?);
        }
        Ok(PathExpr::Edges(edges))
    }

    /// `[a, b]` or `[a b]`.
    fn tuple(&mut self) -> PResult<Vec<Name>> {
        self.expect(Tok::LBrack, "`[`")?;
        let mut out = Vec::new();
        while *self.peek() != Tok::RBrack {
            out.push(self.ident("a generator")?);
            self.eat(&Tok::Comma);
        }
        self.expect(Tok::RBrack, "`]`")?;
        Ok(out)
    }

    fn obj(&mut self) -> PResult<ObjExpr> {
        let start = self.span();
        let mut atoms = vec![self.obj_atom()?];
        while self.eat(&Tok::Semi) {
            atoms.push(self.obj_atom()?);
        }
        Ok(ObjExpr {
            atoms,
            span: self.join(start),
        })
    }

    fn obj_atom(&mut self) -> PResult<ObjAtom> {
        match self.peek() {
            Tok::LBrack => Ok(ObjAtom::Free(self.tuple()?)),
            Tok::Ident(s) if s == "phi" => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let mut out = Vec::new();
                while *self.peek() != Tok::RParen {
                    out.push(self.ident("a generator")?);
                    self.eat(&Tok::Comma);
                }
                self.expect(Tok::RParen, "`)`")?;
                Ok(ObjAtom::Phi(out))
            }
            _ => self.error("an object (`[...]` or `phi(...)`)"),
        }
    }

    /// An object after `@` or inside `braid(..)` when a single atom is
    /// wanted; parentheses allow a concatenation.
    fn obj_annot(&mut self) -> PResult<ObjExpr> {
        if *self.peek() == Tok::LParen {
            self.bump();
            let o = self.obj()?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(o);
        }
        let start = self.span();
        let atom = self.obj_atom()?;
        Ok(ObjExpr {
            atoms: vec![atom],
            span: self.join(start),
        })
    }

    fn mor(&mut self) -> PResult<MorExpr> {
        let start = self.span();
        let mut parts = vec![self.tensor()?];
        while self.eat(&Tok::Dot) {
            parts.push(self.tensor()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            MorExpr {
                kind: MorKind::Compose(parts),
                span: self.join(start),
            }
        })
    }

    /// Composition of atoms only, used inside `pf(...)`.
    fn mor_no_tensor(&mut self) -> PResult<MorExpr> {
        let start = self.span();
        let mut parts = vec![self.atom()?];
        while self.eat(&Tok::Dot) {
            parts.push(self.atom()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            MorExpr {
                kind: MorKind::Compose(parts),
                span: self.join(start),
            }
        })
    }

    fn tensor(&mut self) -> PResult<MorExpr> {
        let start = self.span();
        let mut parts = vec![self.atom()?];
        while self.eat(&Tok::Semi) {
            parts.push(self.atom()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            MorExpr {
                kind: MorKind::Tensor(parts),
                span: self.join(start),
            }
        })
    }

    fn at_annotation(&mut self) -> PResult<Option<ObjExpr>> {
        if self.eat(&Tok::At) {
            Ok(Some(self.obj_annot()?))
        } else {
            Ok(None)
        }
    }

    fn blocks(&mut self, close: Tok) -> PResult<Vec<Block>> {
        let mut blocks = Vec::new();
        if *self.peek() == close {
            return Ok(blocks);
        }
        loop {
            if *self.peek() == Tok::LBrack && *self.peek_at(1) == Tok::RBrack {
                self.bump();
                self.bump();
                blocks.push(Vec::new());
            } else {
                let mut b = vec![self.ident("a generator or `[]`")?];
                while let Tok::Ident(_) = self.peek() {
                    b.push(self.ident("a generator")?);
                }
                blocks.push(b);
            }
            if !self.eat(&Tok::Bar) {
                return Ok(blocks);
            }
        }
    }

    fn atom(&mut self) -> PResult<MorExpr> {
        let start = self.span();
        let kind = match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let inner = self.mor()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(inner);
            }
            Tok::Str(text) => {
                self.bump();
                let at = self.at_annotation()?;
                MorKind::Word { text, at }
            }
            Tok::Ident(s) => match s.as_str() {
                "id" => {
                    self.bump();
                    if *self.peek() == Tok::LParen {
                        self.bump();
                        let o = self.obj()?;
                        self.expect(Tok::RParen, "`)`")?;
                        MorKind::Id(Some(o))
                    } else if *self.peek() == Tok::At {
                        MorKind::Id(self.at_annotation()?)
                    } else {
                        MorKind::Id(None)
                    }
                }
                "perm" => {
                    self.bump();
                    self.expect(Tok::LParen, "`(`")?;
                    let mut image = Vec::new();
                    while let Tok::Int(n) = self.peek() {
                        image.push(*n);
                        self.bump();
                        self.eat(&Tok::Comma);
                    }
                    self.expect(Tok::RParen, "`)` or a number")?;
                    let at = self.at_annotation()?;
                    MorKind::Perm { image, at }
                }
                "q" => {
                    self.bump();
                    let inverse = if self.eat(&Tok::Caret) {
                        self.expect(Tok::Minus, "`-1`")?;
                        match self.peek() {
                            Tok::Int(1) => {
                                self.bump();
                            }
                            _ => return self.error("`1`"),
                        }
                        true
                    } else {
                        false
                    };
                    self.expect(Tok::LParen, "`(`")?;
                    let blocks = self.blocks(Tok::RParen)?;
                    self.expect(Tok::RParen, "`|` or `)`")?;
                    MorKind::Q { inverse, blocks }
                }
                "pf" => {
                    self.bump();
                    self.expect(Tok::LParen, "`(`")?;
                    let (mut on, mut outer, mut inner) = (None, None, None);
                    while *self.peek() != Tok::RParen {
                        let key = self.ident("`on`, `outer` or `inner`")?;
                        self.expect(Tok::Eq, "`=`")?;
                        let dup = |present: bool, key: &Name| -> PResult<()> {
                            if present {
                                Err(Diagnostic {
                                    message: format!("`{}` given twice", key.text),
                                    span: key.span,
                                })
                            } else {
                                Ok(())
                            }
                        };
                        match key.text.as_str() {
                            "on" => {
                                dup(on.is_some(), &key)?;
                                on = Some(self.blocks(Tok::Semi)?);
                            }
                            "outer" => {
                                dup(outer.is_some(), &key)?;
                                outer = Some(Box::new(self.mor_no_tensor()?));
                            }
                            "inner" => {
                                dup(inner.is_some(), &key)?;
                                let mut v = vec![self.mor_no_tensor()?];
                                while self.eat(&Tok::Comma) {
                                    v.push(self.mor_no_tensor()?);
                                }
                                inner = Some(v);
                            }
                            other => {
                                return Err(Diagnostic {
                                    message: format!("unknown pf field `{other}`"),
                                    span: key.span,
                                })
                            }
                        }
                        if !self.eat(&Tok::Semi) {
                            break;
                        }
                    }
                    self.expect(Tok::RParen, "`;` or `)`")?;
                    MorKind::Pf { on, outer, inner }
                }
                "braid" => {
                    self.bump();
                    self.expect(Tok::LParen, "`(`")?;
                    let x = self.obj()?;
                    self.expect(Tok::Comma, "`,`")?;
                    let y = self.obj()?;
                    self.expect(Tok::RParen, "`)`")?;
                    MorKind::Braid(x, y)
                }
                _ => return self.error("a morphism"),
            },
            _ => return self.error("a morphism"),
        };
        Ok(MorExpr {
            kind,
            span: self.join(start),
        })
    }
}

/// Parse and resolve names. Duplicate and unresolved names are reported
/// with the span of the offending occurrence.
pub fn parse_source(text: &str) -> Result<SourceFile, Diagnostic> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let file = p.file()?;
    resolve(&file)?;
    Ok(file)
}

fn resolve(file: &SourceFile) -> Result<(), Diagnostic> {
    let mut spaces: HashMap<&'static str, HashMap<String, Span>> = HashMap::new();
    let mut declare = |space: &'static str, n: &Name| -> Result<(), Diagnostic> {
        let seen = spaces.entry(space).or_default();
        if seen.contains_key(&n.text) {
            return Err(Diagnostic {
                message: format!("duplicate {space} `{}`", n.text),
                span: n.span,
            });
        }
        seen.insert(n.text.clone(), n.span);
        Ok(())
    };
    for d in &file.decls {
        match &d.kind {
            DeclKind::Gens { name, members } => {
                declare("generator set", name)?;
                let mut local: Vec<&str> = Vec::new();
                for m in members {
                    if local.contains(&m.text.as_str()) {
                        return Err(Diagnostic {
                            message: format!("duplicate generator `{}` in `{}`", m.text, name.text),
                            span: m.span,
                        });
                    }
                    local.push(&m.text);
                }
            }
            DeclKind::Map { name, .. } => declare("map", name)?,
            DeclKind::Node { name, .. } => declare("node", name)?,
            DeclKind::Edge { name, .. } => declare("edge", name)?,
            DeclKind::Functor { name, .. } => declare("functor", name)?,
            DeclKind::Interp { letter, .. } => declare("interp", letter)?,
            DeclKind::Goal { name, .. } => declare("goal", name)?,
            DeclKind::Flavor(_) => {}
        }
    }
    let known = |space: &str, n: &Name| -> Result<(), Diagnostic> {
        if spaces.get(space).is_some_and(|s| s.contains_key(&n.text)) {
            Ok(())
        } else {
            Err(Diagnostic {
                message: format!("unresolved {space} `{}`", n.text),
                span: n.span,
            })
        }
    };
    let mut functors_so_far: Vec<&str> = Vec::new();
    for d in &file.decls {
        match &d.kind {
            DeclKind::Map { source, target, .. } => {
                known("generator set", source)?;
                known("generator set", target)?;
            }
            DeclKind::Edge { source, target, .. } => {
                known("node", source)?;
                known("node", target)?;
            }
            DeclKind::Goal { lhs, rhs, .. } => {
                for p in [lhs, rhs] {
                    match p {
                        PathExpr::Edges(es) => {
                            for e in es {
                                known("edge", e)?;
                            }
                        }
                        PathExpr::Identity(n) => known("node", n)?,
                    }
                }
            }
            DeclKind::Functor { name, def } => {
                match def {
                    FunctorExpr::Builtin { on, .. } => known("generator set", on)?,
                    FunctorExpr::Compose(g, f) => {
                        for x in [g, f] {
                            if !functors_so_far.contains(&x.text.as_str()) {
                                return Err(Diagnostic {
                                    message: format!("unresolved functor `{}`", x.text),
                                    span: x.span,
                                });
                            }
                        }
                    }
                }
                functors_so_far.push(&name.text);
            }
            _ => {}
        }
    }
    Ok(())
}
