//! Braid words on `n` strands.
//!
//! `σ_i` passes strand `i` under strand `i + 1`. Letters are stored in text
//! order, and the leftmost letter is applied last, so composing `u ∘ v` is
//! plain concatenation `u v`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::garside::{self, BraidNormalForm};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    /// 1-based generator index.
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter {
            index,
            positive: true,
        }
    }

    pub fn neg(index: usize) -> Self {
        Letter {
            index,
            positive: false,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            positive: !self.positive,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "s{}", self.index)
        } else {
            write!(f, "s{}^-1", self.index)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::MalformedWord(format!(
                    "generator {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parse the text format (`"s1 s2^-1"`) on a given number of strands.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            letters.push(parse_letter(tok)?);
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::Incomparable(format!(
                "braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        Ok(())
    }

    /// `self ∘ other`: `other` first.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Disjoint union, `other` on the trailing strands.
    pub fn tensor(&self, other: &BraidWord) -> BraidWord {
        let shift = self.strands;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|l| Letter {
            index: l.index + shift,
            positive: l.positive,
        }));
        BraidWord {
            strands: self.strands + other.strands,
            letters,
        }
    }

    /// Pad with `before` idle strands on the left and `after` on the right.
    pub fn padded(&self, before: usize, after: usize) -> BraidWord {
        BraidWord::identity(before)
            .tensor(self)
            .tensor(&BraidWord::identity(after))
    }

    pub fn underlying_permutation(&self) -> Permutation {
        let mut image: Vec<usize> = (0..self.strands).collect();
        // rightmost letter acts first
        for l in self.letters.iter().rev() {
            for v in image.iter_mut() {
                if *v == l.index - 1 {
                    *v = l.index;
                } else if *v == l.index {
                    *v = l.index - 1;
                }
            }
        }
        Permutation::from_zero_based(image)
    }

    pub fn normal_form(&self) -> BraidNormalForm {
        garside::normalize(self)
    }

    /// Replace each strand by a ribbon of `sizes[i]` parallel strands.
    pub fn cable(&self, sizes: &[usize]) -> Result<BraidWord> {
        if sizes.len() != self.strands {
            return Err(Error::Arity {
                expected: self.strands,
                found: sizes.len(),
            });
        }
        let total: usize = sizes.iter().sum();
        let mut widths = sizes.to_vec();
        let mut pieces: Vec<BraidWord> = Vec::with_capacity(self.letters.len());
        for l in self.letters.iter().rev() {
            let i = l.index - 1;
            let before: usize = widths[..i].iter().sum();
            let (p, q) = (widths[i], widths[i + 1]);
            let local = if l.positive {
                block_braid(p, q)
            } else {
                block_braid(q, p).inverse()
            };
            pieces.push(local.padded(before, total - before - p - q));
            widths.swap(i, i + 1);
        }
        let mut letters = Vec::new();
        for piece in pieces.iter().rev() {
            letters.extend_from_slice(&piece.letters);
        }
        Ok(BraidWord {
            strands: total,
            letters,
        })
    }

    /// Text form without the strand count.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn parse_letter(tok: &str) -> Result<Letter> {
    let (body, positive) = match tok.strip_suffix("^-1") {
        Some(b) => (b, false),
        None => (tok, true),
    };
    let digits = body
        .strip_prefix('s')
        .ok_or_else(|| Error::MalformedWord(format!("expected `s<i>`, found `{tok}`")))?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::MalformedWord(format!("expected `s<i>`, found `{tok}`")));
    }
    let index: usize = digits
        .parse()
        .map_err(|_| Error::MalformedWord(format!("generator index in `{tok}` is too large")))?;
    Ok(Letter { index, positive })
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.strands, self)
    }
}

/// A word paired with its strand count, so `"s1 s2@3".parse()` works in tests
/// and examples.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (text, n) = s
            .rsplit_once('@')
            .ok_or_else(|| Error::MalformedWord("expected `<word>@<strands>`".into()))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::MalformedWord(format!("bad strand count `{n}`")))?;
        BraidWord::parse(text, n)
    }
}

/// `β_{m,k}`: the first `m` strands pass under the last `k`, with no
/// crossings inside either block.
pub fn block_braid(m: usize, k: usize) -> BraidWord {
    let mut letters = Vec::with_capacity(m * k);
    for j in 1..=m {
        for i in (j..j + k).rev() {
            letters.push(Letter::pos(i));
        }
    }
    BraidWord {
        strands: m + k,
        letters,
    }
}

pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    u.check_strands(v)?;
    Ok(u.underlying_permutation() == v.underlying_permutation()
        && u.normal_form() == v.normal_form())
}

pub fn normalize_braid(w: &BraidWord) -> BraidNormalForm {
    w.normal_form()
}
