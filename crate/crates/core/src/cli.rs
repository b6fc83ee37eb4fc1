//! Command dispatch for the `coh` binary, kept in the library so that the
//! commands can be driven from tests and examples.

use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::braid::{braid_equal, BraidWord};
use crate::diagram::{Diagram, Verdict, VerdictJson};
use crate::dsl::{load_source, Diagnostic};
use crate::error::{Error, Result};
use crate::free::{Content, Flavor};
use crate::garside::positive_word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_GOAL_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "coh", about = "Decide commutativity of formal diagrams by dissolution")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Monoidal,
    Symmetric,
    Braided,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Monoidal => Flavor::Monoidal,
            FlavorArg::Symmetric => Flavor::Symmetric,
            FlavorArg::Braided => Flavor::Braided,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every goal and print the verdicts as a JSON array.
    Check {
        file: PathBuf,
        /// Count EQUAL_IN_S_ONLY as success.
        #[arg(long)]
        symmetric_ok: bool,
        /// Also write the JSON array to this file.
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
        /// Check every pair of parallel paths instead of the declared goals.
        #[arg(long)]
        all_pairs: bool,
        /// Replace the flavor declared in the file.
        #[arg(long, value_enum)]
        flavor: Option<FlavorArg>,
        /// Print a readable explanation instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Print the dissolution of every edge.
    Dissolve {
        file: PathBuf,
        #[arg(long, value_enum)]
        flavor: Option<FlavorArg>,
    },
    /// Decide equality of two braid words.
    BraidEq {
        w1: String,
        w2: String,
        #[arg(long)]
        strands: usize,
    },
    /// Draw the dissolved braid of one edge.
    Render {
        file: PathBuf,
        #[arg(long)]
        edge: String,
        #[arg(long, value_enum)]
        flavor: Option<FlavorArg>,
    },
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: &'a str,
    file: Option<String>,
    line: Option<usize>,
    col: Option<usize>,
}

fn color_enabled() -> bool {
    std::env::var("COH_COLOR").is_ok_and(|v| v == "1")
}

fn paint(text: &str, code: &str) -> String {
    if color_enabled() {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn paint_verdict(v: Verdict) -> String {
    let code = match v {
        Verdict::Equal => "32",
        Verdict::EqualInSOnly => "33",
        Verdict::NotEqual => "31",
    };
    paint(&v.to_string(), code)
}

fn report(err: &mut dyn Write, file: Option<&FsPath>, message: &str, at: Option<&Diagnostic>) -> i32 {
    let j = ErrorJson {
        error: message,
        file: file.map(|p| p.display().to_string()),
        line: at.map(|d| d.span.line),
        col: at.map(|d| d.span.col),
    };
    let _ = writeln!(err, "{}", serde_json::to_string(&j).expect("plain struct"));
    EXIT_ERROR
}

fn load(path: &FsPath, flavor: Option<FlavorArg>, err: &mut dyn Write) -> std::result::Result<Diagram, i32> {
    let text = fs::read_to_string(path)
        .map_err(|e| report(err, Some(path), &format!("cannot read file: {e}"), None))?;
    load_source(&text, flavor.map(Flavor::from)).map_err(|d| report(err, Some(path), &d.message, Some(&d)))
}

/// Run one command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match &cli.command {
        Command::Check {
            file,
            symmetric_ok,
            json,
            all_pairs,
            flavor,
            text,
        } => {
            let d = match load(file, *flavor, err) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let goals = if *all_pairs {
                match d.all_parallel_pairs() {
                    Ok(g) => g,
                    Err(e) => return report(err, Some(file), &e.to_string(), None),
                }
            } else {
                d.goals().to_vec()
            };
            let mut verdicts: Vec<VerdictJson> = Vec::new();
            let mut texts = Vec::new();
            for g in &goals {
                match d.explain_goal(g) {
                    Ok(x) => {
                        texts.push(x.to_string().replacen(
                            &x.verdict.to_string(),
                            &paint_verdict(x.verdict),
                            1,
                        ));
                        verdicts.push(x.to_json());
                    }
                    Err(e) => {
                        return report(err, Some(file), &format!("goal `{}`: {e}", g.name), None)
                    }
                }
            }
            let body = serde_json::to_string_pretty(&verdicts).expect("serializable");
            if *text {
                for t in &texts {
                    let _ = write!(out, "{t}");
                }
            } else {
                let _ = writeln!(out, "{body}");
            }
            if let Some(path) = json {
                if let Err(e) = fs::write(path, format!("{body}\n")) {
                    return report(err, Some(path), &format!("cannot write file: {e}"), None);
                }
            }
            let ok = verdicts.iter().all(|v| {
                v.verdict == Verdict::Equal || (*symmetric_ok && v.verdict == Verdict::EqualInSOnly)
            });
            if ok {
                EXIT_OK
            } else {
                EXIT_GOAL_FAILED
            }
        }
        Command::Dissolve { file, flavor } => {
            let d = match load(file, *flavor, err) {
                Ok(d) => d,
                Err(code) => return code,
            };
            for (name, e) in d.edges() {
                match d.alg().dissolve(&e.mor) {
                    Ok(u) => {
                        let _ = writeln!(out, "{name} : {} -> {} = {}", u.source(), u.target(), u.content_text());
                    }
                    Err(x) => return report(err, Some(file), &format!("edge `{name}`: {x}"), None),
                }
            }
            EXIT_OK
        }
        Command::BraidEq { w1, w2, strands } => {
            let parsed = BraidWord::parse(w1, *strands).and_then(|a| Ok((a, BraidWord::parse(w2, *strands)?)));
            let (a, b) = match parsed {
                Ok(p) => p,
                Err(e) => return report(err, None, &e.to_string(), None),
            };
            let equal = braid_equal(&a, &b).expect("same strand count");
            let _ = writeln!(out, "left   {}", a.normal_form());
            let _ = writeln!(out, "right  {}", b.normal_form());
            let same_perm = a.underlying_permutation() == b.underlying_permutation();
            let verdict = if equal {
                Verdict::Equal
            } else if same_perm {
                Verdict::EqualInSOnly
            } else {
                Verdict::NotEqual
            };
            let _ = writeln!(out, "{}", paint_verdict(verdict));
            if equal {
                EXIT_OK
            } else {
                EXIT_GOAL_FAILED
            }
        }
        Command::Render { file, edge, flavor } => {
            let d = match load(file, *flavor, err) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let Some(e) = d.edges().get(edge) else {
                return report(err, Some(file), &format!("no edge named `{edge}`"), None);
            };
            let drawn = d.alg().dissolve(&e.mor).and_then(|u| {
                let word = match u.content() {
                    Content::Braid(w) => w.clone(),
                    Content::Perm(p) => positive_word(p, p.len()),
                    Content::Plain(n) => BraidWord::identity(*n),
                };
                render_braid_ascii(&word, &u.source().0)
            });
            match drawn {
                Ok(pic) => {
                    let _ = write!(out, "{pic}");
                    EXIT_OK
                }
                Err(x) => report(err, Some(file), &x.to_string(), None),
            }
        }
    }
}

/// Draw a braid word top to bottom in the order its letters act, one row
/// per letter. A crossing where the left strand goes under is drawn `/`,
/// the mirror crossing `\`. Labels are written above and, permuted, below.
pub fn render_braid_ascii<S: AsRef<str>>(w: &BraidWord, labels: &[S]) -> Result<String> {
    let n = w.strands();
    if labels.len() != n {
        return Err(Error::Arity {
            expected: n,
            found: labels.len(),
        });
    }
    let width = labels.iter().map(|l| l.as_ref().chars().count()).max().unwrap_or(1).max(1) + 2;
    let mut current: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
    let label_row = |row: &[String]| -> String {
        let mut s = String::new();
        for l in row {
            s.push_str(&format!("{l:<width$}"));
        }
        s.trim_end().to_string()
    };
    let strands_row = |skip: Option<usize>| -> Vec<char> {
        let mut cells = vec![' '; n * width];
        for c in 0..n {
            if skip.is_none_or(|i| c != i && c != i + 1) {
                cells[c * width] = '|';
            }
        }
        cells
    };
    let mut out = String::new();
    out.push_str(&label_row(&current));
    out.push('\n');
    let annot_col = n * width;
    for letter in w.letters().iter().rev() {
        let i = letter.index - 1;
        let mut cells = strands_row(Some(i));
        let mid = i * width + width.div_ceil(2);
        cells[mid] = if letter.positive { '/' } else { '\\' };
        let mut row: String = cells.into_iter().collect();
        row.truncate(annot_col);
        let name = if letter.positive {
            format!("s{}", letter.index)
        } else {
            format!("s{}^-1", letter.index)
        };
        out.push_str(&format!("{row}  {name}\n"));
        current.swap(i, i + 1);
    }
    if w.letters().is_empty() {
        let row: String = strands_row(None).into_iter().collect();
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out.push_str(&label_row(&current));
    out.push('\n');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_crossing() {
        let w = BraidWord::parse("s1", 2).unwrap();
        let pic = render_braid_ascii(&w, &["a", "b"]).unwrap();
        assert_eq!(pic, "a  b\n  /     s1\nb  a\n");
    }

    #[test]
    fn inverse_crossing_is_mirrored() {
        let w = BraidWord::parse("s1^-1", 2).unwrap();
        let pic = render_braid_ascii(&w, &["a", "b"]).unwrap();
        assert!(pic.contains('\\'));
        assert!(!pic.contains('/'));
    }

    #[test]
    fn empty_word_is_parallel_strands() {
        let w = BraidWord::identity(3);
        let pic = render_braid_ascii(&w, &["x", "y", "z"]).unwrap();
        assert_eq!(pic, "x  y  z\n|  |  |\nx  y  z\n");
    }

    #[test]
    fn rows_follow_the_order_of_action() {
        let w = BraidWord::parse("s2 s1", 3).unwrap();
        let pic = render_braid_ascii(&w, &["fa1", "fa2", "fa3"]).unwrap();
        let rows: Vec<&str> = pic.lines().collect();
        assert_eq!(rows.len(), 4);
        assert!(rows[1].ends_with("s1"));
        assert!(rows[2].ends_with("s2"));
        assert_eq!(rows[3].split_whitespace().collect::<Vec<_>>(), ["fa2", "fa3", "fa1"]);
        assert_eq!(pic, render_braid_ascii(&w, &["fa1", "fa2", "fa3"]).unwrap());
    }

    #[test]
    fn label_arity_is_checked() {
        let w = BraidWord::identity(3);
        assert!(matches!(
            render_braid_ascii(&w, &["a"]),
            Err(Error::Arity { expected: 3, found: 1 })
        ));
    }
}
