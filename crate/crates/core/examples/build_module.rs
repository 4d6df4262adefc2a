//! Builds the standard modules of gl(1|1) with highest weight (1, 0) and
//! of gl(2|1) with highest weight (3, 1, -5), then acts with e and f.

use glmn::expr::Generator;
use glmn::module::{Mode, ModuleSpace};
use glmn::relations::SuperRelationSet;
use glmn::superalgebra::{Shape, Weight};
use glmn::tableau::Tableau;

fn standard(m: usize, n: usize, lam: &[i64]) -> glmn::Result<ModuleSpace> {
    let s = Shape::new(m, n)?;
    let seed = Tableau::highest(&Weight::from_ints(s, lam)?);
    ModuleSpace::build(&seed, &SuperRelationSet::standard(s), Mode::QuasiTypical, 10_000)
}

fn main() -> glmn::Result<()> {
    let small = standard(1, 1, &[1, 0])?;
    println!("gl(1|1), (1, 0): dimension {}", small.dim());
    for t in small.basis() {
        println!("{t}");
        for g in [Generator::E(1), Generator::F(1)] {
            let v = small.act(g, t)?;
            let terms: Vec<String> = v.iter().map(|(u, q)| format!("{q}·{:?}", u.rows())).collect();
            println!("  {g} -> {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
        }
    }
    let big = standard(2, 1, &[3, 1, -5])?;
    println!("gl(2|1), (3, 1, -5): dimension {} (finite = {})", big.dim(), big.is_finite());
    Ok(())
}
