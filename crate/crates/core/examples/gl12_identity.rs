//! Evaluates the cubic gl(1|2) commutator identity on a standard module and
//! reports which sign holds.

use glmn::module::{Mode, ModuleSpace};
use glmn::relations::SuperRelationSet;
use glmn::superalgebra::{Shape, Weight};
use glmn::tableau::Tableau;
use glmn::verification::{check_gl12_commutator, gl12_nonvanishing_search};

fn main() -> glmn::Result<()> {
    let s = Shape::new(1, 2)?;
    let seed = Tableau::highest(&Weight::from_ints(s, &[2, 1, 0])?);
    let m = ModuleSpace::build(&seed, &SuperRelationSet::standard(s), Mode::QuasiTypical, 1000)?;
    println!("{}", check_gl12_commutator(&m)?.to_json_line());
    println!("{}", gl12_nonvanishing_search(64)?.to_json_line());
    Ok(())
}
