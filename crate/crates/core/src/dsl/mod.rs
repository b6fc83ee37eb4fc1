//! The `.coh` diagram language: lexing, parsing, printing and elaboration
//! into a [`Diagram`](crate::diagram::Diagram).

pub mod ast;
mod elaborate;
mod lexer;
mod parser;
mod print;

use std::fmt;

use serde::Serialize;

pub use elaborate::{elaborate, load_source};
pub use parser::parse_source;
pub use print::print_source;

/// A byte range with the line and column of its first character.
///
/// Spans compare equal unconditionally so that syntax trees compare by
/// structure alone.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Span {
    fn eq(&self, _: &Span) -> bool {
        true
    }
}

impl Eq for Span {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub message: String,
    pub span: Span,
}

impl Diagnostic {
    pub(crate) fn at(span: Span, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            message: message.into(),
            span,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.span.line, self.span.col, self.message)
    }
}

impl std::error::Error for Diagnostic {}
