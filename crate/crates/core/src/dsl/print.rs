use std::fmt::Write;

use super::ast::*;
use crate::free::Flavor;

/// Canonical text for a syntax tree. Reparsing the output gives back an
/// equal tree.
pub fn print_source(file: &SourceFile) -> String {
    let mut out = String::new();
    for d in &file.decls {
        print_decl(&mut out, &d.kind);
        out.push('\n');
    }
    out
}

fn names(v: &[Name], sep: &str) -> String {
    v.iter().map(|n| n.text.as_str()).collect::<Vec<_>>().join(sep)
}

fn print_decl(out: &mut String, d: &DeclKind) {
    match d {
        DeclKind::Flavor(f) => {
            let word = match f {
                Flavor::Braided => "braided",
                Flavor::Symmetric => "symmetric",
                Flavor::Monoidal => "monoidal",
            };
            let _ = write!(out, "flavor {word}");
        }
        DeclKind::Gens { name, members } => {
            let _ = write!(out, "gens {} = {{ {} }}", name.text, names(members, ", "));
        }
        DeclKind::Map {
            name,
            source,
            target,
            pairs,
        } => {
            let body: Vec<String> = pairs
                .iter()
                .map(|(a, b)| format!("{} -> {}", a.text, b.text))
                .collect();
            let _ = write!(
                out,
                "map {} : {} -> {} {{ {} }}",
                name.text,
                source.text,
                target.text,
                body.join("; ")
            );
        }
        DeclKind::Node { name, obj } => {
            let _ = write!(out, "node {} = {}", name.text, obj_text(obj));
        }
        DeclKind::Edge {
            name,
            source,
            target,
            mor,
        } => {
            let _ = write!(
                out,
                "edge {} : {} -> {} = {}",
                name.text,
                source.text,
                target.text,
                mor_text(mor)
            );
        }
        DeclKind::Functor { name, def } => {
            let body = match def {
                FunctorExpr::Builtin { kind, on } => {
                    let k = match kind {
                        BuiltinName::Identity => "identity".to_string(),
                        BuiltinName::Doubling => "doubling".to_string(),
                        BuiltinName::Quadrupling => "quadrupling".to_string(),
                        BuiltinName::NFold(n) => format!("nfold({n})"),
                    };
                    format!("{k} on {}", on.text)
                }
                FunctorExpr::Compose(g, f) => format!("compose({}, {})", g.text, f.text),
            };
            let _ = write!(out, "functor {} = {body}", name.text);
        }
        DeclKind::Interp { letter, image } => {
            let _ = write!(out, "interp {} = [{}]", letter.text, names(image, ", "));
        }
        DeclKind::Goal { name, lhs, rhs } => {
            let _ = write!(out, "goal {} : {} == {}", name.text, path_text(lhs), path_text(rhs));
        }
    }
}

fn path_text(p: &PathExpr) -> String {
    match p {
        PathExpr::Edges(es) => names(es, " . "),
        PathExpr::Identity(n) => format!("id({})", n.text),
    }
}

pub(crate) fn obj_text(o: &ObjExpr) -> String {
    o.atoms
        .iter()
        .map(|a| match a {
            ObjAtom::Free(v) => format!("[{}]", names(v, ", ")),
            ObjAtom::Phi(v) => format!("phi({})", names(v, " ")),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn annot(at: &Option<ObjExpr>) -> String {
    match at {
        None => String::new(),
        Some(o) if o.atoms.len() == 1 => format!(" @ {}", obj_text(o)),
        Some(o) => format!(" @ ({})", obj_text(o)),
    }
}

fn blocks_text(blocks: &[Block]) -> String {
    blocks
        .iter()
        .map(|b| if b.is_empty() { "[]".to_string() } else { names(b, " ") })
        .collect::<Vec<_>>()
        .join(" | ")
}

pub(crate) fn mor_text(m: &MorExpr) -> String {
    match &m.kind {
        MorKind::Id(None) => "id".into(),
        MorKind::Id(Some(o)) => format!("id({})", obj_text(o)),
        MorKind::Word { text, at } => format!("\"{text}\"{}", annot(at)),
        MorKind::Perm { image, at } => {
            let v: Vec<String> = image.iter().map(u64::to_string).collect();
            format!("perm({}){}", v.join(" "), annot(at))
        }
        MorKind::Q { inverse, blocks } => {
            format!("q{}({})", if *inverse { "^-1" } else { "" }, blocks_text(blocks))
        }
        MorKind::Pf { on, outer, inner } => {
            let mut fields = Vec::new();
            if let Some(b) = on {
                fields.push(format!("on={}", blocks_text(b)));
            }
            if let Some(o) = outer {
                fields.push(format!("outer={}", nested(o)));
            }
            if let Some(v) = inner {
                let parts: Vec<String> = v.iter().map(nested).collect();
                fields.push(format!("inner={}", parts.join(", ")));
            }
            format!("pf({})", fields.join("; "))
        }
        MorKind::Braid(x, y) => format!("braid({}, {})", obj_text(x), obj_text(y)),
        MorKind::Compose(parts) => parts
            .iter()
            .map(nested)
            .collect::<Vec<_>>()
            .join(" . "),
        MorKind::Tensor(parts) => parts
            .iter()
            .map(nested)
            .collect::<Vec<_>>()
            .join(" ; "),
    }
}

/// Factors of composites and tensors, and `pf` fields, are atoms or
/// parenthesized.
fn nested(m: &MorExpr) -> String {
    match &m.kind {
        MorKind::Compose(_) | MorKind::Tensor(_) => format!("({})", mor_text(m)),
        _ => mor_text(m),
    }
}
