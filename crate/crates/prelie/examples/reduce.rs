//! Reduce a tree polynomial to its canonical form modulo the non-planar
//! ideal I (the README walkthrough).

use prelie::ideal::{can, span_nonplanar, SpanConfig};
use prelie::parse::{format_tree_poly, parse_nonplanar_poly};
use prelie::Alphabet;

fn main() -> prelie::Result<()> {
    let al = Alphabet::xy();
    let span = span_nonplanar(&al, 4, &SpanConfig::default())?;
    let f = parse_nonplanar_poly(&al, "x(y) - 2*y(x,x)")?;
    println!("{}", format_tree_poly(&al, &can(&f, &span)?));
    Ok(())
}
