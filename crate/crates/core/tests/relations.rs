//! Relation sets, admissibility, relation removal and satisfaction.

mod common;

use common::shape;
use glmn::relations::{
    maximal_relation_set, rr_remove_super, Relation, RelationClass, RelationSet, SideOf, SuperRelationSet, Vertex,
};
use glmn::tableau::Tableau;

type Arrow = ((usize, usize), (usize, usize));

fn set(n: usize, pairs: &[Arrow]) -> RelationSet {
    RelationSet::new(n, pairs.iter().map(|&(a, b)| Relation::new(a, b))).unwrap()
}

#[test]
fn classes_follow_row_offsets() {
    assert_eq!(Relation::new((2, 1), (1, 1)).class(2), Some(RelationClass::Plus));
    assert_eq!(Relation::new((1, 1), (2, 2)).class(2), Some(RelationClass::Minus));
    assert_eq!(Relation::new((2, 1), (2, 2)).class(2), Some(RelationClass::Zero));
    // same row below the top, or two rows apart, is not a relation
    assert_eq!(Relation::new((2, 1), (2, 2)).class(3), None);
    assert_eq!(Relation::new((3, 1), (1, 1)).class(3), None);
}

#[test]
fn standard_sets_are_admissible() {
    for n in 1..=4 {
        let c = RelationSet::standard(n);
        assert!(c.is_admissible(), "n = {n}");
    }
}

#[test]
fn reachability_is_transitive_and_irreflexive_without_cycles() {
    let c = set(3, &[((3, 1), (2, 1)), ((2, 1), (1, 1))]);
    assert!(c.reaches(Vertex::new(3, 1), Vertex::new(1, 1)));
    assert!(!c.reaches(Vertex::new(1, 1), Vertex::new(3, 1)));
    assert!(!c.reaches(Vertex::new(2, 1), Vertex::new(2, 1)));
    assert!(!RelationSet::empty(2).reaches(Vertex::new(1, 1), Vertex::new(1, 1)));
}

#[test]
fn double_arrows_are_not_reduced() {
    let c = set(2, &[((1, 1), (2, 1)), ((1, 1), (2, 2))]);
    assert!(!c.is_reduced());
    assert!(!c.is_admissible());
}

#[test]
fn components_split_disjoint_chains() {
    let c = set(3, &[((3, 1), (2, 1)), ((2, 2), (1, 1))]);
    assert_eq!(c.indecomposable_components().len(), 2);
    assert!(RelationSet::empty(3).indecomposable_components().is_empty());
}

#[test]
fn rr_removal_drops_every_relation_at_the_vertex() {
    let c = RelationSet::standard(3);
    for v in c.extremal_vertices() {
        let r = c.rr_remove(v).unwrap();
        assert!(r.iter().all(|rel| !rel.touches(v)));
        assert!(r.is_admissible());
    }
    // a vertex with arrows in and out is not extremal
    let inner = Vertex::new(2, 1);
    assert!(!c.extremal_vertices().contains(&inner));
    assert!(c.rr_remove(inner).is_err());
}

#[test]
fn super_rr_removal_keeps_the_other_side() {
    let c = SuperRelationSet::standard(shape(2, 2));
    for v in c.c1().extremal_vertices() {
        let r = rr_remove_super(&c, SideOf::Even, v).unwrap();
        assert_eq!(r.c2(), c.c2());
        assert!(r.is_admissible());
    }
}

#[test]
fn maximal_set_of_a_highest_tableau_is_satisfied_and_maximal() {
    for lam in [[3, 1, -5], [2, 0, -3], [4, 4, -9]] {
        let w = glmn::superalgebra::Weight::from_ints(shape(2, 1), &lam).unwrap();
        let t = Tableau::highest(&w);
        let c = maximal_relation_set(&t).unwrap();
        assert!(c.is_admissible());
        assert!(c.satisfied_by(&t));
        assert!(c.is_maximal_for(&t));
    }
}

#[test]
fn row_m_orders_are_flagged() {
    let s = shape(2, 1);
    let ordered = SuperRelationSet::new(s, set(2, &[((1, 1), (2, 1)), ((2, 2), (1, 1))]), RelationSet::empty(1)).unwrap();
    assert!(ordered.is_admissible());
    assert!(ordered.orders_even_top_row());
    assert!(!SuperRelationSet::new(s, set(2, &[((2, 1), (1, 1))]), RelationSet::empty(1)).unwrap().orders_even_top_row());
}

#[test]
fn super_json_round_trip() {
    let c = SuperRelationSet::standard(shape(2, 2));
    let text = serde_json::to_string(&c).unwrap();
    let back: SuperRelationSet = serde_json::from_str(&text).unwrap();
    assert_eq!(back, c);
    // C2 coordinates carry the offset m
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["c2"]["offset"], 2);
}

#[test]
fn satisfaction_needs_integral_same_component_differences() {
    let s = shape(1, 1);
    let c = SuperRelationSet::standard(s);
    let good = Tableau::from_int_rows(s, &[&[1], &[1, 0]]).unwrap();
    assert!(c.satisfied_by(&good));
    // theta outside {0, 1}
    let bad = Tableau::from_int_rows(s, &[&[-1], &[1, 0]]).unwrap();
    assert!(!c.satisfied_by(&bad));
}
