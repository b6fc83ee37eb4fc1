//! Decide equality in the braid group through the left-greedy normal form.
//!
//! Usage: `cargo run --example braid_word_problem -- 4 "s3 s1 s2" "s2 s2 s1 s3 s2"`

use coh::{braid_equal, normalize_braid, BraidWord};

fn main() -> coh::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (n, u, v) = match args.as_slice() {
        [n, u, v] => (n.parse().expect("strand count"), u.clone(), v.clone()),
        _ => (6, "s3 s4 s2".to_string(), "s3 s2 s4".to_string()),
    };
    let u = BraidWord::parse(&u, n)?;
    let v = BraidWord::parse(&v, n)?;
    for w in [&u, &v] {
        println!("{:>24}  nf {}  perm {}", w.to_text(), normalize_braid(w), w.underlying_permutation());
    }
    let same = braid_equal(&u, &v)?;
    println!("equal in B{n}: {same}");
    if !same && u.underlying_permutation() == v.underlying_permutation() {
        println!("same permutation, so equal in the symmetric group only");
    }
    Ok(())
}
