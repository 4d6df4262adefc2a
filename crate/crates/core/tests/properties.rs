//! Property tests for algebraic and combinatorial invariants.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use glmn::module::{BerezinianSeries, Mode, ModuleSpace};
use glmn::relations::{random_admissible, random_consistent_super_admissible, random_seed_tableau, RelationSet};
use glmn::superalgebra::{bracket, is_dominant, is_essentially_typical, l_to_weight, weight_to_l, BasisElement, Shape, Weight};
use glmn::verification::{
    check_defining_relations, check_dimension_law, check_separation, expected_dimension, sample_basis, Status,
};
use glmn::Q;

fn small_shape() -> impl Strategy<Value = Shape> {
    prop::sample::select(vec![(1, 1), (2, 1), (1, 2)]).prop_map(|(m, n)| shape(m, n))
}

fn rational() -> impl Strategy<Value = Q> {
    (-20i64..20, 1i64..8).prop_map(|(a, b)| Q::new(a, b))
}

fn element(s: Shape) -> impl Strategy<Value = BasisElement> {
    let t = s.total();
    (1..=t, 1..=t).prop_map(move |(i, j)| BasisElement::new(i, j, s).unwrap())
}

fn elements2() -> impl Strategy<Value = (Shape, BasisElement, BasisElement)> {
    small_shape().prop_flat_map(|s| (Just(s), element(s), element(s)))
}

fn elements3() -> impl Strategy<Value = (Shape, BasisElement, BasisElement, BasisElement)> {
    small_shape().prop_flat_map(|s| (Just(s), element(s), element(s), element(s)))
}

/// `[a, b]` extended bilinearly to a combination on the right.
fn bracket_combo(a: BasisElement, b: &glmn::superalgebra::ElementCombo, s: Shape) -> glmn::superalgebra::ElementCombo {
    let mut out = glmn::superalgebra::ElementCombo::new();
    for (e, c) in b {
        for (f, d) in bracket(a, *e, s).unwrap() {
            let v = out.entry(f).or_insert(Q::ZERO);
            *v += *c * d;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn sign(p: u8, q: u8) -> Q {
    if p * q == 1 {
        -Q::ONE
    } else {
        Q::ONE
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_super_antisymmetric((s, a, b) in elements2()) {
        let ab = bracket(a, b, s).unwrap();
        let ba = bracket(b, a, s).unwrap();
        let k = -sign(a.parity(s), b.parity(s));
        for e in ab.keys().chain(ba.keys()) {
            let x = ab.get(e).copied().unwrap_or(Q::ZERO);
            let y = ba.get(e).copied().unwrap_or(Q::ZERO);
            prop_assert_eq!(x, k * y);
        }
    }

    #[test]
    fn bracket_satisfies_super_jacobi((s, a, b, c) in elements3()) {
        // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        let lhs = bracket_combo(a, &bracket(b, c, s).unwrap(), s);
        let mut rhs = glmn::superalgebra::ElementCombo::new();
        for (f, x) in bracket(a, b, s).unwrap() {
            for (g, y) in bracket(f, c, s).unwrap() {
                *rhs.entry(g).or_insert(Q::ZERO) += x * y;
            }
        }
        let k = sign(a.parity(s), b.parity(s));
        for (g, y) in bracket_combo(b, &bracket(a, c, s).unwrap(), s) {
            *rhs.entry(g).or_insert(Q::ZERO) += k * y;
        }
        rhs.retain(|_, v| !v.is_zero());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn l_coordinates_invert(s in small_shape(), v in prop::collection::vec(rational(), 3)) {
        let w = Weight::new(s, v[..s.total()].to_vec()).unwrap();
        prop_assert_eq!(l_to_weight(&weight_to_l(&w)), w);
    }

    #[test]
    fn berezinian_series_expansion_inverts_the_denominator(
        num in prop::collection::vec(rational(), 0..3),
        den in prop::collection::vec(rational(), 0..3),
    ) {
        let order = 4;
        let s = BerezinianSeries::new(num.clone(), den.clone());
        let f = s.expand(order);
        // multiply the expansion back by the denominator product
        let mut d = vec![Q::ZERO; order + 1];
        d[0] = Q::ONE;
        for a in &den {
            for k in (1..=order).rev() {
                let prev = d[k - 1];
                d[k] += *a * prev;
            }
        }
        let mut n = vec![Q::ZERO; order + 1];
        n[0] = Q::ONE;
        for a in &num {
            for k in (1..=order).rev() {
                let prev = n[k - 1];
                n[k] += *a * prev;
            }
        }
        for k in 0..=order {
            let c: Q = (0..=k).map(|j| f[j] * d[k - j]).sum();
            prop_assert_eq!(c, n[k]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn typical_modules_obey_the_dimension_law(s in small_shape(), v in prop::collection::vec(-3i64..=3, 3)) {
        let w = Weight::from_ints(s, &v[..s.total()]).unwrap();
        prop_assume!(is_dominant(&w) && is_essentially_typical(&w));
        let m = standard_module(&w, 5000);
        prop_assert_eq!(Q::int(m.dim() as i64), expected_dimension(&w));
        prop_assert_eq!(check_dimension_law(&m).status, Status::Pass);
        prop_assert!(check_separation(&m).passed());
        prop_assert!(check_defining_relations(&m, m.basis()).passed());
        // every basis tableau satisfies the pair and shares the top row
        for t in m.basis() {
            prop_assert!(m.relations().satisfied_by(t));
            prop_assert_eq!(t.top_row(), m.seed().top_row());
        }
    }

    #[test]
    fn rr_removal_preserves_admissibility(n in 2usize..=4, len in 0usize..8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c: RelationSet = random_admissible(n, len, &mut rng);
        prop_assert!(c.is_admissible());
        for v in c.extremal_vertices() {
            let r = c.rr_remove(v).unwrap();
            prop_assert!(r.is_admissible());
            prop_assert!(r.len() < c.len());
        }
        let back: RelationSet = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn random_seeds_satisfy_their_pair(s in small_shape(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_consistent_super_admissible(s, 4, &mut rng);
        prop_assert!(c.is_admissible());
        if let Some(t) = random_seed_tableau(&c, 2000, &mut rng) {
            prop_assert!(c.satisfied_by(&t));
        }
    }

    #[test]
    fn relations_hold_when_row_m_is_unordered(s in small_shape(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_consistent_super_admissible(s, 4, &mut rng);
        prop_assume!(!c.orders_even_top_row());
        let Some(t) = random_seed_tableau(&c, 2000, &mut rng) else { return Ok(()) };
        let m = ModuleSpace::ball(&t, &c, Mode::QuasiTypical, 2, 20_000).unwrap();
        let sample = sample_basis(&m, 30, seed);
        let rep = check_defining_relations(&m, &sample);
        prop_assert!(rep.passed(), "{}", rep.to_json_line());
    }
}
