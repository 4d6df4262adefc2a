//! Exports a module with its generator matrices to JSON and imports it
//! back.

use glmn::io::{export_module, import_module, parse_json, to_json_string, ModuleJson};
use glmn::module::{Mode, ModuleSpace};
use glmn::relations::SuperRelationSet;
use glmn::superalgebra::{Shape, Weight};
use glmn::tableau::Tableau;

fn main() -> glmn::Result<()> {
    let s = Shape::new(1, 1)?;
    let seed = Tableau::highest(&Weight::from_ints(s, &[1, 0])?);
    let m = ModuleSpace::build(&seed, &SuperRelationSet::standard(s), Mode::QuasiTypical, 100)?;
    let text = to_json_string(&export_module(&m, true)?);
    println!("{text}");
    let back = import_module(&parse_json::<ModuleJson>(&text)?)?;
    println!("round trip keeps the basis: {}", back.basis() == m.basis());
    Ok(())
}
