//! Left-greedy normal form `Δ^p · A_1 ⋯ A_k` of braids.
//!
//! Each `A_j` is a permutation braid, stored as its permutation. Factors are
//! in text order, like braid words: `A_1` is applied last.

use std::fmt;

use crate::braid::{BraidWord, Letter};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidNormalForm {
    pub strands: usize,
    pub delta_power: i64,
    pub factors: Vec<Permutation>,
}

impl BraidNormalForm {
    /// A word representing the same braid.
    pub fn expand(&self) -> BraidWord {
        let n = self.strands;
        let delta = positive_word(&half_twist(n), n);
        let mut out = BraidWord::identity(n);
        let step = if self.delta_power >= 0 {
            delta
        } else {
            delta.inverse()
        };
        for _ in 0..self.delta_power.unsigned_abs() {
            out = out.compose(&step).expect("same strands");
        }
        for f in &self.factors {
            out = out.compose(&positive_word(f, n)).expect("same strands");
        }
        out
    }
}

impl fmt::Display for BraidNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for p in &self.factors {
            let body: Vec<String> = p.one_line().iter().map(|v| v.to_string()).collect();
            write!(f, " [{}]", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NF{}({})", self.strands, self)
    }
}

fn half_twist(n: usize) -> Permutation {
    Permutation::from_zero_based((0..n).rev().collect())
}

/// The reduced positive word of a permutation braid.
pub fn positive_word(p: &Permutation, n: usize) -> BraidWord {
    let mut letters = Vec::new();
    let mut rest = p.clone();
    // peel left descents: rest = s_i ∘ rest'
    while let Some(i) = left_descents(&rest).into_iter().next() {
        letters.push(Letter::pos(i + 1));
        rest = swap_values(&rest, i);
    }
    BraidWord::new(n, letters).expect("indices in range")
}

// zero-based i with p⁻¹(i) > p⁻¹(i+1)
fn left_descents(p: &Permutation) -> Vec<usize> {
    let inv = p.inverse();
    (0..p.len().saturating_sub(1))
        .filter(|&i| inv.apply0(i) > inv.apply0(i + 1))
        .collect()
}

// zero-based i with p(i) > p(i+1)
fn right_descents(p: &Permutation) -> Vec<usize> {
    (0..p.len().saturating_sub(1))
        .filter(|&i| p.apply0(i) > p.apply0(i + 1))
        .collect()
}

// s_i ∘ p
fn swap_values(p: &Permutation, i: usize) -> Permutation {
    let image = p
        .as_slice()
        .iter()
        .map(|&v| {
            if v == i {
                i + 1
            } else if v == i + 1 {
                i
            } else {
                v
            }
        })
        .collect();
    Permutation::from_zero_based(image)
}

// p ∘ s_i
fn swap_positions(p: &Permutation, i: usize) -> Permutation {
    let mut image = p.as_slice().to_vec();
    image.swap(i, i + 1);
    Permutation::from_zero_based(image)
}

// Make (a, b) left-weighted; returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut moved = false;
    loop {
        let finishing = right_descents(a);
        let Some(i) = left_descents(b)
            .into_iter()
            .find(|i| !finishing.contains(i))
        else {
            return moved;
        };
        *a = swap_positions(a, i);
        *b = swap_values(b, i);
        moved = true;
    }
}

// Append a simple factor to a left-weighted sequence and restore the
// property with one sweep from the right.
fn push_simple(factors: &mut Vec<Permutation>, x: Permutation) {
    if x.is_identity() {
        return;
    }
    factors.push(x);
    for k in (1..factors.len()).rev() {
        let (head, tail) = factors.split_at_mut(k);
        if !left_weight(&mut head[k - 1], &mut tail[0]) {
            break;
        }
    }
    while factors.last().is_some_and(|f| f.is_identity()) {
        factors.pop();
    }
}

pub fn normalize(w: &BraidWord) -> BraidNormalForm {
    let n = w.strands();
    if n < 2 {
        return BraidNormalForm {
            strands: n,
            delta_power: 0,
            factors: Vec::new(),
        };
    }
    let w0 = half_twist(n);
    let tau = |p: &Permutation| {
        w0.compose(p)
            .and_then(|q| q.compose(&w0))
            .expect("same size")
    };
    // Factors are stored twisted by τ^flips; τ is an automorphism that
    // preserves left-weighting, so the twist is undone once at the end.
    let mut power: i64 = 0;
    let mut flips = false;
    let mut factors: Vec<Permutation> = Vec::new();
    for l in w.letters() {
        let s = Permutation::transposition(n, l.index).expect("validated word");
        // Δ^p F σ⁻¹ = Δ^(p-1) τ(F) (Δ σ⁻¹)
        let x = if l.positive {
            s
        } else {
            power -= 1;
            flips = !flips;
            w0.compose(&s).expect("same size")
        };
        push_simple(&mut factors, if flips { tau(&x) } else { x });
    }
    if flips {
        factors = factors.iter().map(tau).collect();
    }
    loop {
        let mut changed = false;
        for j in 0..factors.len().saturating_sub(1) {
            let (head, tail) = factors.split_at_mut(j + 1);
            changed |= left_weight(&mut head[j], &mut tail[0]);
        }
        if !changed {
            break;
        }
    }
    factors.retain(|f| !f.is_identity());
    let leading = factors.iter().take_while(|f| **f == w0).count();
    power += leading as i64;
    factors.drain(..leading);
    while factors.last().is_some_and(|f| f.is_identity()) {
        factors.pop();
    }
    BraidNormalForm {
        strands: n,
        delta_power: power,
        factors,
    }
}
