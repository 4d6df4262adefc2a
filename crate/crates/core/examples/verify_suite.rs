//! Runs the full verification suite on a standard gl(2|1) module and prints
//! one JSON report per check.

use glmn::module::{Mode, ModuleSpace};
use glmn::relations::SuperRelationSet;
use glmn::superalgebra::{Shape, Weight};
use glmn::tableau::Tableau;
use glmn::verification::{run_suite, summarize, Suite, SuiteOptions};

fn main() -> glmn::Result<()> {
    let s = Shape::new(2, 1)?;
    let seed = Tableau::highest(&Weight::from_ints(s, &[2, 0, -3])?);
    let m = ModuleSpace::build(&seed, &SuperRelationSet::standard(s), Mode::QuasiTypical, 10_000)?;
    let reports = run_suite(&m, Suite::All, &SuiteOptions { seed: 7, ..SuiteOptions::default() })?;
    for r in &reports {
        println!("{}", r.to_json_line());
    }
    println!("{:?}", summarize(&reports));
    Ok(())
}
