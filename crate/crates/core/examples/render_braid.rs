//! ASCII pictures of braid words, labelled by the strands they carry.
//!
//! Usage: `cargo run --example render_braid -- "s1 s2^-1 s1" a b c`

use coh::cli::render_braid_ascii;
use coh::BraidWord;

fn main() -> coh::Result<()> {
    let mut args = std::env::args().skip(1);
    let word = args.next().unwrap_or_else(|| "s1 s2 s1^-1".into());
    let mut labels: Vec<String> = args.collect();
    if labels.is_empty() {
        labels = ["x", "y", "z"].map(String::from).to_vec();
    }
    let w = BraidWord::parse(&word, labels.len())?;
    print!("{}", render_braid_ascii(&w, &labels)?);
    Ok(())
}
