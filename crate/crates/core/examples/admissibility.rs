//! Checks admissibility of a few relation sets and pairs, including a pair
//! whose even side orders row m.

use glmn::relations::{Relation, RelationSet, SuperRelationSet};
use glmn::superalgebra::Shape;

fn main() -> glmn::Result<()> {
    for n in 2..=4 {
        println!("standard gl({n}): admissible = {}", RelationSet::standard(n).is_admissible());
    }
    let double = RelationSet::new(2, [Relation::new((1, 1), (2, 1)), Relation::new((1, 1), (2, 2))])?;
    let report = double.admissibility();
    println!("{double}: admissible = {}", report.admissible);
    for v in &report.violations {
        println!("  {v}");
    }

    let s = Shape::new(2, 1)?;
    let c1 = RelationSet::new(2, [Relation::new((1, 1), (2, 1)), Relation::new((2, 2), (1, 1))])?;
    let pair = SuperRelationSet::new(s, c1, RelationSet::empty(1))?;
    println!("{pair}");
    println!("  admissible = {}, orders row m = {}", pair.is_admissible(), pair.orders_even_top_row());
    Ok(())
}
