mod common;

use coh::{block_braid, braid_equal, normalize_braid, BraidWord, Letter};
use common::*;
use proptest::prelude::*;

/// Apply one braid relation somewhere in the word, if any applies.
fn rewrite(w: &BraidWord, choice: usize) -> BraidWord {
    let l = w.letters().to_vec();
    let n = w.strands();
    let mut candidates: Vec<Vec<Letter>> = Vec::new();
    for p in 0..l.len() {
        // σ_i σ_j = σ_j σ_i when far apart, any signs
        if p + 1 < l.len() && l[p].index.abs_diff(l[p + 1].index) >= 2 {
            let mut v = l.clone();
            v.swap(p, p + 1);
            candidates.push(v);
        }
        // σ_i σ_{i±1} σ_i = σ_{i±1} σ_i σ_{i±1}, all positive or all negative
        if p + 2 < l.len()
            && l[p].index == l[p + 2].index
            && l[p].index.abs_diff(l[p + 1].index) == 1
            && l[p].positive == l[p + 1].positive
            && l[p + 1].positive == l[p + 2].positive
        {
            let mut v = l.clone();
            let (a, b) = (l[p], l[p + 1]);
            v[p] = b;
            v[p + 1] = a;
            v[p + 2] = b;
            candidates.push(v);
        }
        // cancel σ σ⁻¹
        if p + 1 < l.len() && l[p + 1] == l[p].inverse() {
            let mut v = l.clone();
            v.drain(p..p + 2);
            candidates.push(v);
        }
    }
    // insert a cancelling pair
    if n >= 2 {
        let i = 1 + choice % (n - 1);
        let at = choice % (l.len() + 1);
        let mut v = l.clone();
        v.insert(at, Letter::neg(i));
        v.insert(at, Letter::pos(i));
        candidates.push(v);
    }
    if candidates.is_empty() {
        return w.clone();
    }
    let pick = candidates.swap_remove(choice % candidates.len());
    BraidWord::new(n, pick).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rewriting_preserves_the_braid(w in arb_sized_word(6, 14), choices in prop::collection::vec(any::<usize>(), 1..8)) {
        let mut v = w.clone();
        for c in choices {
            v = rewrite(&v, c);
        }
        prop_assert!(braid_equal(&w, &v).unwrap());
        prop_assert_eq!(w.normal_form(), v.normal_form());
        prop_assert!(artin_equal(&w, &v));
    }

    #[test]
    fn word_problem_matches_artin_action(n in 2usize..6, a in prop::collection::vec((1usize..6, any::<bool>()), 0..10), b in prop::collection::vec((1usize..6, any::<bool>()), 0..10)) {
        let mk = |v: &[(usize, bool)]| {
            let letters = v.iter().map(|&(i, p)| Letter { index: 1 + (i - 1) % (n - 1), positive: p }).collect();
            BraidWord::new(n, letters).unwrap()
        };
        let (u, v) = (mk(&a), mk(&b));
        prop_assert_eq!(braid_equal(&u, &v).unwrap(), artin_equal(&u, &v));
    }

    #[test]
    fn normal_form_expands_to_the_same_braid(w in arb_sized_word(7, 16)) {
        let nf = normalize_braid(&w);
        let back = nf.expand();
        prop_assert!(artin_equal(&w, &back));
        prop_assert_eq!(back.normal_form(), nf);
    }

    #[test]
    fn inverse_cancels(w in arb_sized_word(6, 12)) {
        let id = BraidWord::identity(w.strands());
        prop_assert!(braid_equal(&w.compose(&w.inverse()).unwrap(), &id).unwrap());
        prop_assert!(braid_equal(&w.inverse().compose(&w).unwrap(), &id).unwrap());
    }

    #[test]
    fn permutation_is_a_homomorphism(a in arb_word(5, 10), b in arb_word(5, 10)) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.underlying_permutation(), a.underlying_permutation().compose(&b.underlying_permutation()).unwrap());
        prop_assert_eq!(a.underlying_permutation(), naive_permutation(&a));
    }

    #[test]
    fn text_round_trip(w in arb_sized_word(9, 12)) {
        let text = w.to_string();
        let back = BraidWord::parse(&text, w.strands()).unwrap();
        prop_assert_eq!(&back, &w);
        let tagged: BraidWord = format!("{text}@{}", w.strands()).parse().unwrap();
        prop_assert_eq!(tagged, w);
    }

    #[test]
    fn block_braid_is_natural(m in 1usize..4, k in 1usize..4, f in any::<u64>(), g in any::<u64>()) {
        let mut r = rng(f ^ g.rotate_left(17));
        let fw = random_word(&mut r, m, 4);
        let gw = random_word(&mut r, k, 4);
        let lhs = gw.tensor(&fw).compose(&block_braid(m, k)).unwrap();
        let rhs = block_braid(m, k).compose(&fw.tensor(&gw)).unwrap();
        prop_assert!(braid_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn cabling_is_functorial(seed in arb_seed()) {
        let mut r = rng(seed);
        let n = 2 + (seed % 3) as usize;
        let u = random_word(&mut r, n, 5);
        let v = random_word(&mut r, n, 5);
        let sizes: Vec<usize> = (0..n).map(|i| ((seed >> (3 * i)) % 3) as usize).collect();
        let after_v = v.underlying_permutation().permute(&sizes).unwrap();
        let lhs = u.compose(&v).unwrap().cable(&sizes).unwrap();
        let rhs = u.cable(&after_v).unwrap().compose(&v.cable(&sizes).unwrap()).unwrap();
        prop_assert!(braid_equal(&lhs, &rhs).unwrap());
        prop_assert!(artin_equal(&lhs, &rhs));
    }

    #[test]
    fn cabling_respects_tensor_and_inverse(seed in arb_seed()) {
        let mut r = rng(seed);
        let u = random_word(&mut r, 2, 4);
        let v = random_word(&mut r, 3, 4);
        let (su, sv) = (vec![1, 2], vec![2, 0, 1]);
        let whole: Vec<usize> = su.iter().chain(&sv).copied().collect();
        let lhs = u.tensor(&v).cable(&whole).unwrap();
        let rhs = u.cable(&su).unwrap().tensor(&v.cable(&sv).unwrap());
        prop_assert!(braid_equal(&lhs, &rhs).unwrap());
        let after = u.underlying_permutation().permute(&su).unwrap();
        let inv = u.inverse().cable(&after).unwrap();
        let expect = u.cable(&su).unwrap().inverse();
        prop_assert!(braid_equal(&inv, &expect).unwrap());
    }
}

#[test]
fn hexagons_for_small_blocks() {
    for m in 1..=4 {
        for k in 1..=4 {
            for p in 1..=4 {
                // β_{X, Y⊗Z} = (1_Y ⊗ β_{X,Z}) ∘ (β_{X,Y} ⊗ 1_Z)
                let lhs = block_braid(m, k + p);
                let rhs = BraidWord::identity(k)
                    .tensor(&block_braid(m, p))
                    .compose(&block_braid(m, k).tensor(&BraidWord::identity(p)))
                    .unwrap();
                assert!(braid_equal(&lhs, &rhs).unwrap(), "first hexagon {m} {k} {p}");
                // β_{X⊗Y, Z} = (β_{X,Z} ⊗ 1_Y) ∘ (1_X ⊗ β_{Y,Z})
                let lhs = block_braid(m + k, p);
                let rhs = block_braid(m, p)
                    .tensor(&BraidWord::identity(k))
                    .compose(&BraidWord::identity(m).tensor(&block_braid(k, p)))
                    .unwrap();
                assert!(braid_equal(&lhs, &rhs).unwrap(), "second hexagon {m} {k} {p}");
            }
        }
    }
}

#[test]
fn block_braid_words() {
    assert_eq!(block_braid(2, 1).to_string(), "s1 s2");
    assert_eq!(block_braid(1, 2).to_string(), "s2 s1");
    assert_eq!(block_braid(2, 2).to_string(), "s2 s1 s3 s2");
    assert_eq!(block_braid(1, 3).to_string(), "s3 s2 s1");
    assert_eq!(block_braid(0, 3).to_string(), "");
    assert_eq!(
        block_braid(2, 2).underlying_permutation().one_line(),
        vec![3, 4, 1, 2]
    );
}

#[test]
fn known_equalities() {
    let w = |s: &str, n| BraidWord::parse(s, n).unwrap();
    assert!(braid_equal(&w("s3 s4 s2", 6), &w("s3 s2 s4", 6)).unwrap());
    let (l, r) = (w("s3 s1 s2", 4), w("s2 s2 s1 s3 s2", 4));
    assert!(!braid_equal(&l, &r).unwrap());
    assert_eq!(l.underlying_permutation(), r.underlying_permutation());
    assert!(!artin_equal(&l, &r));
    assert!(braid_equal(&w("s1 s2 s1", 3), &w("s2 s1 s2", 3)).unwrap());
    assert!(!braid_equal(&w("s1 s1", 2), &w("", 2)).unwrap());
    assert!(braid_equal(&w("s1 s1^-1", 2), &w("", 2)).unwrap());
    assert!(braid_equal(&w("s1", 3), &w("s1", 4)).is_err());
}

#[test]
fn two_strands_are_counted_by_exponent_sum() {
    let mut r = rng(7);
    for _ in 0..200 {
        let a = random_word(&mut r, 2, 8);
        let b = random_word(&mut r, 2, 8);
        let sum = |w: &BraidWord| {
            w.letters()
                .iter()
                .map(|l| if l.positive { 1i64 } else { -1 })
                .sum::<i64>()
        };
        assert_eq!(braid_equal(&a, &b).unwrap(), sum(&a) == sum(&b));
    }
}

#[test]
fn malformed_words_are_rejected() {
    for bad in ["s0", "s3", "t1", "s1^2", "s", "s1^-"] {
        assert!(BraidWord::parse(bad, 3).is_err(), "{bad}");
    }
    assert!(BraidWord::parse("  s1   s2^-1 ", 3).is_ok());
}
