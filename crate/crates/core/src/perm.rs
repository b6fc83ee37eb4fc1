//! Permutations of `{1..n}` in one-line notation.
//!
//! `p.image()[i - 1]` is the position strand `i` ends up at. Composition is
//! right-to-left: `p.compose(&q)` applies `q` first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    // zero-based internally
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Build from a one-line image array with values in `1..=n`.
    pub fn from_one_line(image: &[usize]) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &v in image {
            if v == 0 || v > n {
                return Err(Error::MalformedPermutation(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::MalformedPermutation(format!("value {v} repeated")));
            }
            seen[v - 1] = true;
            zero_based.push(v - 1);
        }
        Ok(Permutation { image: zero_based })
    }

    pub(crate) fn from_zero_based(image: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = image.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { image }
    }

    /// The transposition of `i` and `i + 1` (1-based) in `Σ_n`.
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::MalformedPermutation(format!(
                "adjacent transposition s{i} out of range for {n} strands"
            )));
        }
        let mut p = Self::identity(n);
        p.image.swap(i - 1, i);
        Ok(p)
    }

    /// Permutation moving the first `m` positions past the last `k`.
    pub fn block_transposition(m: usize, k: usize) -> Self {
        let image = (0..m).map(|i| i + k).chain(0..k).collect();
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// One-line image array, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|v| v + 1).collect()
    }

    /// Where the strand starting at 1-based position `i` ends up (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    pub(crate) fn apply0(&self, i: usize) -> usize {
        self.image[i]
    }

    pub(crate) fn as_slice(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::Incomparable(format!(
                "permutations on {} and {} points",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    /// Block sum `self ⊕ other`, `other` acting on the trailing positions.
    pub fn block_sum(&self, other: &Permutation) -> Permutation {
        let n = self.len();
        let image = self
            .image
            .iter()
            .copied()
            .chain(other.image.iter().map(|v| v + n))
            .collect();
        Permutation { image }
    }

    /// Replace each point `i` by a block of `sizes[i]` points and move the
    /// blocks rigidly.
    pub fn cable(&self, sizes: &[usize]) -> Result<Permutation> {
        if sizes.len() != self.len() {
            return Err(Error::Arity {
                expected: self.len(),
                found: sizes.len(),
            });
        }
        let m = self.len();
        let inv = self.inverse();
        // offset of each target slot
        let mut target_offset = vec![0; m];
        let mut acc = 0;
        for slot in 0..m {
            target_offset[slot] = acc;
            acc += sizes[inv.image[slot]];
        }
        let mut image = Vec::with_capacity(acc);
        for (i, &size) in sizes.iter().enumerate() {
            let base = target_offset[self.image[i]];
            image.extend(base..base + size);
        }
        Ok(Permutation { image })
    }

    /// Move labels along the permutation: `result[p(i)] = items[i]`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Result<Vec<T>> {
        if items.len() != self.len() {
            return Err(Error::Arity {
                expected: self.len(),
                found: items.len(),
            });
        }
        let mut out: Vec<Option<T>> = vec![None; items.len()];
        for (i, item) in items.iter().enumerate() {
            out[self.image[i]] = Some(item.clone());
        }
        Ok(out.into_iter().map(|x| x.expect("bijection")).collect())
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Disjoint cycles of length at least two, 1-based, each starting at
    /// its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.image[i];
            }
            out.push(cycle);
        }
        out
    }

    /// `perm(2 1 3)` style text.
    pub fn to_literal(&self) -> String {
        let body: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        format!("perm({})", body.join(" "))
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.one_line()
    }
}
