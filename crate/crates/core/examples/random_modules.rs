//! Draws random admissible pairs with rational seeds, builds each module
//! (or a ball of radius 2 when it is infinite) and checks the relations.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use glmn::module::{Mode, ModuleSpace};
use glmn::relations::{random_consistent_super_admissible, random_seed_tableau};
use glmn::superalgebra::Shape;
use glmn::verification::{check_defining_relations, sample_basis};

fn main() -> glmn::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let s = Shape::new(m, n)?;
        let c = random_consistent_super_admissible(s, 4, &mut rng);
        let Some(seed) = random_seed_tableau(&c, 3000, &mut rng) else { continue };
        let mut module = ModuleSpace::build(&seed, &c, Mode::QuasiTypical, 400)?;
        if !module.is_finite() {
            module = ModuleSpace::ball(&seed, &c, Mode::QuasiTypical, 2, 20_000)?;
        }
        let sample = sample_basis(&module, 40, 3);
        let rep = check_defining_relations(&module, &sample);
        println!(
            "{s} {c}: {} tableaux (finite = {}), row m ordered = {}, relations {:?}",
            module.dim(),
            module.is_finite(),
            c.orders_even_top_row(),
            rep.status
        );
    }
    Ok(())
}
