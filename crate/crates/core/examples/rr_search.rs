//! Searches small shapes for relation pairs produced by removing an
//! extremal vertex (the RR method) that still give a finite module, and
//! reports whether the reduced pair is maximal for the seed.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use glmn::module::{Mode, ModuleSpace};
use glmn::relations::{
    random_consistent_super_admissible, random_seed_tableau, rr_remove_super, SideOf, SuperRelationSet,
};
use glmn::superalgebra::Shape;

fn main() -> glmn::Result<()> {
    let trials: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(200);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut stats: BTreeMap<&str, usize> = BTreeMap::new();
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)] {
        let s = Shape::new(m, n)?;
        let mut starts = vec![SuperRelationSet::standard(s)];
        starts.extend((0..trials).map(|_| random_consistent_super_admissible(s, 5, &mut rng)));
        for c in starts {
            for side in [SideOf::Even, SideOf::Odd] {
                for v in c.side(side).extremal_vertices() {
                    let Ok(reduced) = rr_remove_super(&c, side, v) else {
                        *stats.entry("inadmissible").or_default() += 1;
                        continue;
                    };
                    let Some(seed) = random_seed_tableau(&reduced, 3000, &mut rng) else {
                        *stats.entry("no seed").or_default() += 1;
                        continue;
                    };
                    let module = ModuleSpace::build(&seed, &reduced, Mode::QuasiTypical, 300)?;
                    if !module.is_finite() {
                        *stats.entry("infinite").or_default() += 1;
                        continue;
                    }
                    *stats.entry("finite").or_default() += 1;
                    if !reduced.is_maximal_for(&seed) {
                        *stats.entry("finite, not maximal").or_default() += 1;
                        println!("{s} seed {seed} C'={reduced} dim {}", module.dim());
                    }
                }
            }
        }
    }
    println!("{stats:?}");
    Ok(())
}
