//! Lists the basis of gl(2|1) with parities, one bracket, and the
//! presentation relations in Chevalley generators.

use glmn::expr::presentation_relations;
use glmn::superalgebra::{bracket, BasisElement, Shape};

fn main() -> glmn::Result<()> {
    let s = Shape::new(2, 1)?;
    for e in BasisElement::all(s) {
        println!("{e}  parity {}", e.parity(s));
    }
    let (a, b) = (BasisElement::new(2, 3, s)?, BasisElement::new(3, 2, s)?);
    let c: Vec<String> = bracket(a, b, s)?.into_iter().map(|(e, q)| format!("{q}·{e}")).collect();
    println!("[{a}, {b}] = {}", c.join(" + "));
    let rels = presentation_relations(s);
    println!("{} presentation relations:", rels.len());
    for r in rels {
        println!("  {r}");
    }
    Ok(())
}
