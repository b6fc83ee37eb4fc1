use super::{Diagnostic, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Str(String),
    Int(u64),
    LBrace,
    RBrace,
    LBrack,
    RBrack,
    LParen,
    RParen,
    Comma,
    Semi,
    Dot,
    Colon,
    Eq,
    EqEq,
    Arrow,
    Bar,
    Caret,
    Minus,
    At,
    Newline,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Str(s) => format!("\"{s}\""),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LBrack => "[",
            Tok::RBrack => "]",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Dot => ".",
            Tok::Colon => ":",
            Tok::Eq => "=",
            Tok::EqEq => "==",
            Tok::Arrow => "->",
            Tok::Bar => "|",
            Tok::Caret => "^",
            Tok::Minus => "-",
            Tok::At => "@",
            _ => "",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

/// Newlines inside brackets are dropped so long expressions may wrap.
pub fn lex(text: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    let (mut line, mut col) = (1usize, 1usize);
    let mut depth: usize = 0;
    let end_of = |k: usize| chars.get(k).map_or(text.len(), |c| c.0);

    while i < chars.len() {
        let (start, c) = chars[i];
        let span_from = |j: usize, line: usize, col: usize| Span {
            start,
            end: end_of(j),
            line,
            col,
        };
        if c == '\n' {
            if depth == 0 {
                out.push(Token {
                    tok: Tok::Newline,
                    span: span_from(i + 1, line, col),
                });
            }
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i].1 != '\n' {
                i += 1;
                col += 1;
            }
            continue;
        }
        let (tok, len) = if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len()
                && (chars[j].1.is_ascii_alphanumeric() || chars[j].1 == '_' || chars[j].1 == '\'')
            {
                j += 1;
            }
            (Tok::Ident(text[start..end_of(j)].to_string()), j - i)
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            let digits = &text[start..end_of(j)];
            let n = digits.parse().map_err(|_| Diagnostic {
                message: format!("number `{digits}` is too large"),
                span: span_from(j, line, col),
            })?;
            (Tok::Int(n), j - i)
        } else if c == '"' {
            let mut j = i + 1;
            while j < chars.len() && chars[j].1 != '"' {
                if chars[j].1 == '\n' {
                    break;
                }
                j += 1;
            }
            if j >= chars.len() || chars[j].1 != '"' {
                return Err(Diagnostic {
                    message: "unterminated string".into(),
                    span: span_from(j, line, col),
                });
            }
            (Tok::Str(text[end_of(i + 1)..end_of(j)].to_string()), j + 1 - i)
        } else {
            let next = chars.get(i + 1).map(|c| c.1);
            match (c, next) {
                ('=', Some('=')) => (Tok::EqEq, 2),
                ('-', Some('>')) => (Tok::Arrow, 2),
                ('{', _) => (Tok::LBrace, 1),
                ('}', _) => (Tok::RBrace, 1),
                ('[', _) => (Tok::LBrack, 1),
                (']', _) => (Tok::RBrack, 1),
                ('(', _) => (Tok::LParen, 1),
                (')', _) => (Tok::RParen, 1),
                (',', _) => (Tok::Comma, 1),
                (';', _) => (Tok::Semi, 1),
                ('.', _) => (Tok::Dot, 1),
                (':', _) => (Tok::Colon, 1),
                ('=', _) => (Tok::Eq, 1),
                ('|', _) => (Tok::Bar, 1),
                ('^', _) => (Tok::Caret, 1),
                ('-', _) => (Tok::Minus, 1),
                ('@', _) => (Tok::At, 1),
                _ => {
                    return Err(Diagnostic {
                        message: format!("unexpected character `{c}`"),
                        span: span_from(i + 1, line, col),
                    })
                }
            }
        };
        match tok {
            Tok::LBrace | Tok::LBrack | Tok::LParen => depth += 1,
            Tok::RBrace | Tok::RBrack | Tok::RParen => depth = depth.saturating_sub(1),
            _ => {}
        }
        // strings cannot span lines, so the column advance is the char count
        out.push(Token {
            tok,
            span: span_from(i + len, line, col),
        });
        i += len;
        col += len;
    }
    out.push(Token {
        tok: Tok::Eof,
        span: Span {
            start: text.len(),
            end: text.len(),
            line,
            col,
        },
    });
    Ok(out)
}
