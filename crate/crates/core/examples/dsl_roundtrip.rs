//! Parse a `.coh` file, print it back in canonical layout, and report the
//! position of the first error in a broken copy.

use coh::dsl::{parse_source, print_source};

fn main() {
    let src = include_str!("../fixtures/mystery2.coh");
    let file = parse_source(src).expect("fixture parses");
    let printed = print_source(&file);
    print!("{printed}");
    assert_eq!(parse_source(&printed).expect("reparses"), file);

    let broken = src.replacen("node", "nod", 1);
    match parse_source(&broken) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(d) => println!("\nbroken copy: {d}"),
    }
}
