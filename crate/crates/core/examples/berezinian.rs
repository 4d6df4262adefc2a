//! Prints the Berezinian eigenvalue series of each basis tableau of a
//! gl(1|1) module and checks them against the truncated operator.

use glmn::module::berezinian::eigenvalue_tuple;
use glmn::module::{Mode, ModuleSpace};
use glmn::relations::SuperRelationSet;
use glmn::superalgebra::{Shape, Weight};
use glmn::tableau::Tableau;
use glmn::verification::check_berezinian;

fn main() -> glmn::Result<()> {
    let s = Shape::new(1, 1)?;
    let seed = Tableau::highest(&Weight::from_ints(s, &[2, -1])?);
    let m = ModuleSpace::build(&seed, &SuperRelationSet::standard(s), Mode::QuasiTypical, 100)?;
    for t in m.basis() {
        let series: Vec<String> = eigenvalue_tuple(t).iter().map(|b| format!("{b} = {:?}", b.expand(3))).collect();
        println!("{:?}: {}", t.rows(), series.join("; "));
    }
    println!("{}", check_berezinian(&m, 3)?.to_json_line());
    Ok(())
}
