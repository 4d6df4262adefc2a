//! Randomized admissible sets, grown one relation at a time.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::rational::Q;
use crate::superalgebra::Shape;
use crate::tableau::Tableau;

use super::constraints::Convention;
use super::superset::SuperRelationSet;
use super::RelationSet;

/// Grows a set from empty by trying the pairs of R in random order and
/// keeping each one that leaves the set admissible, stopping at `max_len`.
pub fn random_admissible<R: Rng + ?Sized>(n: usize, max_len: usize, rng: &mut R) -> RelationSet {
    grow(n, max_len, None, rng)
}

fn grow<R: Rng + ?Sized>(n: usize, max_len: usize, conv: Option<Convention>, rng: &mut R) -> RelationSet {
    let mut pairs = RelationSet::all_pairs(n);
    pairs.shuffle(rng);
    let mut c = RelationSet::empty(n);
    for r in pairs {
        if c.len() >= max_len {
            break;
        }
        let mut next = c.clone();
        next.insert(r).expect("valid pair");
        if next.is_admissible() && conv.is_none_or(|cv| next.is_consistent(cv)) {
            c = next;
        }
    }
    c
}

/// An admissible pair with each side grown independently up to a random
/// length of at most `max_len`.
pub fn random_super_admissible<R: Rng + ?Sized>(shape: Shape, max_len: usize, rng: &mut R) -> SuperRelationSet {
    let a = rng.gen_range(0..=max_len);
    let b = rng.gen_range(0..=max_len);
    let c1 = random_admissible(shape.m(), a, rng);
    let c2 = random_admissible(shape.n(), b, rng);
    SuperRelationSet::new(shape, c1, c2).expect("ranks match")
}

/// Like [`random_super_admissible`], but each side also stays consistent
/// under its sign convention, so that some tableau can satisfy the pair.
pub fn random_consistent_super_admissible<R: Rng + ?Sized>(
    shape: Shape,
    max_len: usize,
    rng: &mut R,
) -> SuperRelationSet {
    let a = rng.gen_range(0..=max_len);
    let b = rng.gen_range(0..=max_len);
    let c1 = grow(shape.m(), a, Some(Convention::Even), rng);
    let c2 = grow(shape.n(), b, Some(Convention::Odd), rng);
    SuperRelationSet::new(shape, c1, c2).expect("ranks match")
}

/// A random rational tableau satisfying `c`, by rejection sampling.
/// Vertices of one connected component share a fractional part, chosen
/// with denominator up to 7; odd entries follow from random θ ∈ {0, 1}.
/// Returns `None` when `tries` candidates all fail.
pub fn random_seed_tableau<R: Rng + ?Sized>(c: &SuperRelationSet, tries: usize, rng: &mut R) -> Option<Tableau> {
    let s = c.shape();
    let (m, tot) = (s.m(), s.total());
    let labels1 = c.c1().component_labels();
    let labels2 = c.c2().component_labels();
    for _ in 0..tries {
        let frac = |rng: &mut R| {
            let den = rng.gen_range(1..=7i64);
            Q::new(rng.gen_range(0..den), den)
        };
        let f1: Vec<Q> = (0..labels1.len()).map(|_| frac(rng)).collect();
        let f2: Vec<Q> = (0..labels2.len()).map(|_| frac(rng)).collect();
        let mut rows: Vec<Vec<Q>> = Vec::with_capacity(tot);
        for k in 1..=tot {
            let mut row = Vec::with_capacity(k);
            for i in 1..=k {
                let v = if k <= m {
                    f1[labels1[&super::Vertex::new(k, i)]] + Q::int(rng.gen_range(-3..=3))
                } else if i <= m {
                    rows[k - 2][i - 1] + Q::int(rng.gen_range(0..=1))
                } else {
                    f2[labels2[&super::Vertex::new(k - m, i - m)]] + Q::int(rng.gen_range(-3..=3))
                };
                row.push(v);
            }
            rows.push(row);
        }
        let t = Tableau::from_rows(s, rows).expect("consistent sizes");
        if c.satisfied_by(&t) {
            return Some(t);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_sets_are_admissible_and_reproducible() {
        for seed in 0..20 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = random_admissible(4, 12, &mut rng);
            assert!(c.is_admissible(), "seed {seed}: {c}");
            let mut again = ChaCha8Rng::seed_from_u64(seed);
            assert_eq!(random_admissible(4, 12, &mut again), c);
        }
    }

    #[test]
    fn random_seeds_satisfy_their_pair() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut hits = 0;
        for _ in 0..10 {
            let c = random_consistent_super_admissible(Shape::new(2, 2).unwrap(), 3, &mut rng);
            if let Some(t) = random_seed_tableau(&c, 2000, &mut rng) {
                assert!(c.satisfied_by(&t));
                hits += 1;
            }
        }
        assert!(hits >= 8, "{hits}");
    }

    #[test]
    fn super_sets_are_admissible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let c = random_super_admissible(Shape::new(2, 3).unwrap(), 6, &mut rng);
            assert!(c.is_admissible(), "{c}");
        }
    }
}
