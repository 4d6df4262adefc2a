//! Builds covariant tensor modules of gl(2|1) in quasi-covariant mode and
//! checks the defining relations on the whole basis.

use glmn::module::{Mode, ModuleSpace};
use glmn::relations::SuperRelationSet;
use glmn::superalgebra::{Shape, Weight};
use glmn::tableau::Tableau;
use glmn::verification::check_defining_relations;

fn main() -> glmn::Result<()> {
    let s = Shape::new(2, 1)?;
    for lam in [[1, 0, 0], [1, 1, 0], [2, 1, 1], [2, 2, 2]] {
        let seed = Tableau::highest(&Weight::from_ints(s, &lam)?);
        let m = ModuleSpace::build(&seed, &SuperRelationSet::standard(s), Mode::QuasiCovariant, 10_000)?;
        let ok = check_defining_relations(&m, m.basis()).passed();
        println!("{lam:?}: dimension {}, relations hold = {ok}", m.dim());
    }
    Ok(())
}
