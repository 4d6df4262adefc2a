//! Compares the tableau irreducibility criterion with a brute-force
//! submodule search on gl(1|1) and gl(2|1) modules, typical and atypical.

use glmn::module::{Mode, ModuleSpace};
use glmn::relations::SuperRelationSet;
use glmn::superalgebra::{is_essentially_typical, Shape, Weight};
use glmn::tableau::Tableau;
use glmn::verification::{brute_force_irreducible, irreducibility_criterion};

fn main() -> glmn::Result<()> {
    for (m, n, lam) in [(1, 1, vec![1, 0]), (1, 1, vec![0, 0]), (2, 1, vec![3, 1, -5]), (2, 1, vec![1, 1, -1])] {
        let s = Shape::new(m, n)?;
        let w = Weight::from_ints(s, &lam)?;
        let module = ModuleSpace::build(&Tableau::highest(&w), &SuperRelationSet::standard(s), Mode::QuasiTypical, 10_000)?;
        println!(
            "{s} {lam:?}: typical = {}, criterion = {}, brute force = {}",
            is_essentially_typical(&w),
            irreducibility_criterion(&module),
            brute_force_irreducible(&module)?
        );
    }
    Ok(())
}
