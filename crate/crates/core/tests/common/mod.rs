#![allow(dead_code)]

use coh::free::{Content, Flavor, FreeMor, FreeMor2, Tuple, Tuple2};
use coh::{BraidWord, Letter, Permutation};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Elements of a free group as reduced words; `±j` is `x_j^{±1}`.
pub type FreeWord = Vec<i32>;

fn reduce(w: FreeWord) -> FreeWord {
    let mut out: FreeWord = Vec::with_capacity(w.len());
    for x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn invert(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|x| -x).collect()
}

/// The automorphism of `F_n` attached to a braid by Artin's action, given
/// as the images of the generators. Two braids are equal exactly when
/// these images agree.
pub fn artin_images(w: &BraidWord) -> Vec<FreeWord> {
    let n = w.strands();
    let mut images: Vec<FreeWord> = (1..=n as i32).map(|j| vec![j]).collect();
    for l in w.letters() {
        let i = l.index as i32;
        let sub = |j: i32| -> FreeWord {
            if l.positive {
                if j == i {
                    vec![i, i + 1, -i]
                } else if j == i + 1 {
                    vec![i]
                } else {
                    vec![j]
                }
            } else if j == i {
                vec![i + 1]
            } else if j == i + 1 {
                vec![-(i + 1), i, i + 1]
            } else {
                vec![j]
            }
        };
        images = images
            .iter()
            .map(|img| {
                let mut out = Vec::new();
                for &x in img {
                    let s = sub(x.abs());
                    if x > 0 {
                        out.extend(s);
                    } else {
                        out.extend(invert(&s));
                    }
                }
                reduce(out)
            })
            .collect();
    }
    images
}

pub fn artin_equal(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands() && artin_images(a) == artin_images(b)
}

/// Permutation of a word computed letter by letter on positions.
pub fn naive_permutation(w: &BraidWord) -> Permutation {
    // track where each strand ends up, applying the rightmost letter first
    let n = w.strands();
    let mut at: Vec<usize> = (0..n).collect();
    for l in w.letters().iter().rev() {
        let i = l.index - 1;
        for p in at.iter_mut() {
            if *p == i {
                *p = i + 1;
            } else if *p == i + 1 {
                *p = i;
            }
        }
    }
    Permutation::from_one_line(&at.iter().map(|p| p + 1).collect::<Vec<_>>()).unwrap()
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let letters = (0..len)
        .map(|_| Letter {
            index: rng.gen_range(1..n),
            positive: rng.gen_bool(0.5),
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::from_one_line(&v).unwrap()
}

pub fn random_tuple<R: Rng>(rng: &mut R, gens: &[&str], len: usize) -> Tuple {
    Tuple((0..len).map(|_| gens[rng.gen_range(0..gens.len())].to_string()).collect())
}

pub fn random_content<R: Rng>(rng: &mut R, flavor: Flavor, n: usize) -> Content {
    match flavor {
        Flavor::Monoidal => Content::identity(flavor, n),
        Flavor::Symmetric => Content::Perm(random_perm(rng, n)),
        Flavor::Braided => {
            let len = rng.gen_range(0..=2 * n);
            Content::Braid(random_word(rng, n, len))
        }
    }
}

pub fn random_fmor<R: Rng>(rng: &mut R, flavor: Flavor, gens: &[&str], max_len: usize) -> FreeMor {
    let n = rng.gen_range(0..=max_len);
    let x = random_tuple(rng, gens, n);
    FreeMor::new(x, random_content(rng, flavor, n)).unwrap()
}

/// A random free morphism starting at `x`.
pub fn random_fmor_from<R: Rng>(rng: &mut R, flavor: Flavor, x: &Tuple) -> FreeMor {
    FreeMor::new(x.clone(), random_content(rng, flavor, x.len())).unwrap()
}

pub fn random_tuple2<R: Rng>(rng: &mut R, gens: &[&str], max_blocks: usize, max_block: usize) -> Tuple2 {
    let m = rng.gen_range(0..=max_blocks);
    Tuple2(
        (0..m)
            .map(|_| {
                let k = rng.gen_range(0..=max_block);
                random_tuple(rng, gens, k)
            })
            .collect(),
    )
}

pub fn random_fmor2_from<R: Rng>(rng: &mut R, flavor: Flavor, w: &Tuple2) -> FreeMor2 {
    let inner = w.blocks().iter().map(|b| random_fmor_from(rng, flavor, b)).collect();
    FreeMor2::new(w.clone(), random_content(rng, flavor, w.len()), inner).unwrap()
}

pub fn flavors() -> [Flavor; 3] {
    [Flavor::Monoidal, Flavor::Symmetric, Flavor::Braided]
}

pub fn arb_flavor() -> impl Strategy<Value = Flavor> {
    prop_oneof![Just(Flavor::Monoidal), Just(Flavor::Symmetric), Just(Flavor::Braided)]
}

pub fn arb_letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(|v| {
        v.into_iter()
            .map(|(index, positive)| Letter { index, positive })
            .collect()
    })
}

/// A braid word on `n ≥ 2` strands.
pub fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    arb_letters(n, max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

/// Strand count together with a word on it.
pub fn arb_sized_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| arb_word(n, max_len))
}

pub fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

/// A seed for the `rand`-based generators, so proptest can shrink over it.
pub fn arb_seed() -> impl Strategy<Value = u64> {
    any::<u64>()
}

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub const FIXTURES: [&str; 6] = [
    "mystery1.coh",
    "mystery2.coh",
    "mystery3.coh",
    "cursed_cyclic.coh",
    "doubling_assoc.coh",
    "doubling_symmetry.coh",
];
