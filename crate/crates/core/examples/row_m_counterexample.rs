//! A gl(2|1) module over an admissible pair whose even side orders row m,
//! on which [e₂, f₂] = h₂ + h₃ fails at a single tableau.
//!
//! f₂ carries the factor (l₁₁ − l₂₂) = 0 here, and the only e₂ target has
//! l₂₁ = l₂₂, which breaks the strict relation (1,1) → (2,1).

use glmn::expr::Generator;
use glmn::module::{Mode, ModuleSpace};
use glmn::relations::{Relation, RelationSet, SuperRelationSet};
use glmn::superalgebra::Shape;
use glmn::tableau::Tableau;

fn main() -> glmn::Result<()> {
    let s = Shape::new(2, 1)?;
    let c1 = RelationSet::new(2, [Relation::new((1, 1), (2, 1)), Relation::new((2, 2), (1, 1))])?;
    let c = SuperRelationSet::new(s, c1, RelationSet::empty(1))?;
    let t = Tableau::from_int_rows(s, &[&[2], &[1, 3], &[2, 3, -1]])?;
    println!("pair {c}: admissible = {}, orders row m = {}", c.is_admissible(), c.orders_even_top_row());
    println!("seed satisfies the pair: {}", c.satisfied_by(&t));
    let m = ModuleSpace::ball(&t, &c, Mode::QuasiTypical, 2, 10_000)?;
    let f = m.act(Generator::F(2), &t)?;
    let e = m.act(Generator::E(2), &t)?;
    let ef = m.act_vector(Generator::E(2), &f)?;
    let fe = m.act_vector(Generator::F(2), &e)?;
    let h = t.h_eigenvalue(2)? + t.h_eigenvalue(3)?;
    println!("f2·t zero: {}, e2·t zero: {}", f.is_empty(), e.is_empty());
    println!("[e2, f2]·t zero: {}, (h2 + h3)·t = {h}·t", ef.is_empty() && fe.is_empty());
    Ok(())
}
