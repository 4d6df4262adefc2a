//! Computes the g₁-invariants of a typical gl(2|1) module and compares its
//! weights with the Kac module model.

use glmn::module::{Mode, ModuleSpace};
use glmn::relations::SuperRelationSet;
use glmn::superalgebra::{Shape, Weight};
use glmn::tableau::Tableau;
use glmn::verification::{g1_invariants, kac_compare};

fn main() -> glmn::Result<()> {
    let s = Shape::new(2, 1)?;
    let seed = Tableau::highest(&Weight::from_ints(s, &[3, 1, -5])?);
    let m = ModuleSpace::build(&seed, &SuperRelationSet::standard(s), Mode::QuasiTypical, 10_000)?;
    let inv = g1_invariants(&m)?;
    println!("g1-invariants: dimension {}, equal to the θ = 0 span: {}", inv.dimension, inv.equals_theta_zero_span);
    for t in &inv.theta_zero {
        println!("  {:?}", t.rows());
    }
    println!("{}", kac_compare(&m)?.to_json_line());
    Ok(())
}
