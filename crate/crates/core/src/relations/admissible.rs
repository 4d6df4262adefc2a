//! Noncritical, reduced, the family 𝔉 and admissibility, with a diagnostic
//! naming the first failing condition.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::constraints::{add_relation, Convention, DifferenceSystem};
use super::{Relation, RelationClass, RelationSet, Vertex};

/// Why a set is not admissible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum Violation {
    /// Some satisfying tableau has equal values at two vertices of a row.
    Critical { a: Vertex, b: Vertex },
    /// Reducedness (i)–(iv): two arrows of one kind at a vertex.
    Unreduced { clause: u8, vertex: Vertex, arrows: Vec<Relation> },
    /// Reducedness (v): a top-row relation follows from the others.
    ImpliedTopRelation { relation: Relation },
    /// Condition (ii): the cross pattern.
    Cross { first: Relation, second: Relation },
    /// Condition (iii): top-row vertices of one component are incomparable.
    TopIncomparable { a: Vertex, b: Vertex },
    /// Condition (iv): an adjoining pair lacks both required patterns.
    Adjoining { a: Vertex, b: Vertex },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Critical { a, b } => write!(f, "condition (i) violated: {a} and {b} can be equal"),
            Violation::Unreduced { clause, vertex, arrows } => {
                let a: Vec<String> = arrows.iter().map(|r| r.to_string()).collect();
                write!(f, "condition (i) violated: reducedness ({clause}) fails at {vertex}: {}", a.join(", "))
            }
            Violation::ImpliedTopRelation { relation } => {
                write!(f, "condition (i) violated: top-row relation {relation} follows from the others")
            }
            Violation::Cross { first, second } => {
                write!(f, "condition (ii) violated at {first} and {second}")
            }
            Violation::TopIncomparable { a, b } => {
                write!(f, "condition (iii) violated: {a} and {b} are incomparable")
            }
            Violation::Adjoining { a, b } => {
                write!(f, "condition (iv) violated: adjoining pair {a}, {b} has no diamond or fork")
            }
        }
    }
}

/// Outcome of an admissibility check over all components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub components: usize,
    pub violations: Vec<Violation>,
}

impl RelationSet {
    /// No tableau satisfying the set has equal values at two vertices of
    /// one row below the top.
    pub fn is_noncritical(&self) -> bool {
        self.critical_pair().is_none()
    }

    /// Whether some integer assignment meets every sign demand of the set
    /// under `conv`. Inconsistent sets are vacuously noncritical and can be
    /// admissible, but no tableau satisfies them.
    pub fn is_consistent(&self, conv: Convention) -> bool {
        let vs = self.universe();
        let index: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut sys = DifferenceSystem::new(vs.len());
        for r in self.iter() {
            add_relation(&mut sys, conv, self.class_of(r), index[&r.from], index[&r.to], 0);
        }
        sys.feasible()
    }

    fn critical_pair(&self) -> Option<(Vertex, Vertex)> {
        let vs = self.universe();
        let index: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut base = DifferenceSystem::new(vs.len());
        for r in self.iter() {
            add_relation(&mut base, Convention::Gl, self.class_of(r), index[&r.from], index[&r.to], 0);
        }
        if !base.clone().feasible() {
            return None;
        }
        let labels = self.component_labels();
        for k in 1..self.rank() {
            for i in 1..=k {
                for j in i + 1..=k {
                    let (a, b) = (Vertex::new(k, i), Vertex::new(k, j));
                    if labels[&a] != labels[&b] {
                        continue;
                    }
                    let mut sys = base.clone();
                    sys.add_eq(index[&a], index[&b], 0);
                    if sys.feasible() {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    fn reduced_violation(&self) -> Option<Violation> {
        for v in self.involved() {
            let up = v.row + 1;
            let down = v.row.wrapping_sub(1);
            let clauses: [(u8, Vec<Relation>); 4] = [
                (1, self.out_arrows(v).filter(|r| r.to.row == up).copied().collect()),
                (2, self.in_arrows(v).filter(|r| r.from.row == up).copied().collect()),
                (3, self.out_arrows(v).filter(|r| r.to.row == down).copied().collect()),
                (4, self.in_arrows(v).filter(|r| r.from.row == down).copied().collect()),
            ];
            for (clause, arrows) in clauses {
                if arrows.len() > 1 {
                    return Some(Violation::Unreduced { clause, vertex: v, arrows });
                }
            }
        }
        for r in self.iter().filter(|r| self.class_of(r) == RelationClass::Zero) {
            let mut rest = self.clone();
            rest.remove(r);
            if rest.reaches(r.from, r.to) {
                return Some(Violation::ImpliedTopRelation { relation: *r });
            }
        }
        None
    }

    /// Conditions (i)–(v) of reducedness.
    pub fn is_reduced(&self) -> bool {
        self.reduced_violation().is_none()
    }

    fn cross_violation(&self) -> Option<Violation> {
        for a in self.iter().filter(|r| self.class_of(r) == RelationClass::Minus) {
            for b in self.iter().filter(|r| self.class_of(r) == RelationClass::Plus) {
                // a = ((k,i);(k+1,t)), b = ((k+1,s);(k,j)) with i < j and s < t
                if b.from.row == a.to.row
                    && b.to.row == a.from.row
                    && a.from.col < b.to.col
                    && b.from.col < a.to.col
                {
                    return Some(Violation::Cross { first: *a, second: *b });
                }
            }
        }
        None
    }

    fn top_violation(&self) -> Option<Violation> {
        let n = self.rank();
        let labels = self.component_labels();
        let involved = self.involved();
        for i in 1..=n {
            for j in i + 1..=n {
                let (a, b) = (Vertex::new(n, i), Vertex::new(n, j));
                if involved.contains(&a) && labels[&a] == labels[&b] && !self.comparable(a, b) {
                    return Some(Violation::TopIncomparable { a, b });
                }
            }
        }
        None
    }

    /// Pairs `(k,i)`, `(k,j)`, `i < j`, of one component with no `(k,s)`
    /// between them in the order.
    pub fn adjoining_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let labels = self.component_labels();
        let involved = self.involved();
        let mut out = Vec::new();
        for k in 1..self.rank() {
            let reach: BTreeMap<usize, _> =
                (1..=k).map(|s| (s, self.reachable_from(Vertex::new(k, s)))).collect();
            for i in 1..=k {
                for j in i + 1..=k {
                    let (a, b) = (Vertex::new(k, i), Vertex::new(k, j));
                    if !involved.contains(&a) || labels[&a] != labels[&b] {
                        continue;
                    }
                    let between = (1..=k).any(|s| {
                        let c = Vertex::new(k, s);
                        reach[&i].contains(&c) && reach[&s].contains(&b)
                    });
                    if !between {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    fn has_diamond_or_fork(&self, a: Vertex, b: Vertex) -> bool {
        let k = a.row;
        let has = |f: Vertex, t: Vertex| self.contains(&Relation { from: f, to: t });
        let diamond_up = (1..=k + 1).any(|p| {
            let v = Vertex::new(k + 1, p);
            has(a, v) && has(v, b)
        });
        let diamond_down = k > 1
            && (1..k).any(|q| {
                let v = Vertex::new(k - 1, q);
                has(a, v) && has(v, b)
            });
        if diamond_up && diamond_down {
            return true;
        }
        (1..=k + 1).any(|s| {
            has(a, Vertex::new(k + 1, s)) && (s + 1..=k + 1).any(|t| has(Vertex::new(k + 1, t), b))
        })
    }

    /// Membership in 𝔉 for one indecomposable set; `None` means it belongs.
    pub fn f_violation(&self) -> Option<Violation> {
        if let Some((a, b)) = self.critical_pair() {
            return Some(Violation::Critical { a, b });
        }
        if let Some(v) = self.reduced_violation() {
            return Some(v);
        }
        if let Some(v) = self.cross_violation() {
            return Some(v);
        }
        if let Some(v) = self.top_violation() {
            return Some(v);
        }
        self.adjoining_pairs()
            .into_iter()
            .find(|&(a, b)| !self.has_diamond_or_fork(a, b))
            .map(|(a, b)| Violation::Adjoining { a, b })
    }

    /// Membership in 𝔉; an error for decomposable input.
    pub fn in_f(&self) -> crate::error::Result<bool> {
        if !self.is_indecomposable() {
            return Err(crate::error::Error::Precondition("set is not indecomposable".into()));
        }
        Ok(self.f_violation().is_none())
    }

    pub fn admissibility(&self) -> AdmissibilityReport {
        let comps = self.indecomposable_components();
        let violations: Vec<Violation> = comps.iter().filter_map(RelationSet::f_violation).collect();
        AdmissibilityReport { admissible: violations.is_empty(), components: comps.len(), violations }
    }

    /// Every indecomposable component belongs to 𝔉.
    pub fn is_admissible(&self) -> bool {
        self.indecomposable_components().iter().all(|c| c.f_violation().is_none())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Arrow = ((usize, usize), (usize, usize));

    fn set(n: usize, pairs: &[Arrow]) -> RelationSet {
        RelationSet::new(n, pairs.iter().map(|&(a, b)| Relation::new(a, b))).unwrap()
    }

    #[test]
    fn standard_sets_are_admissible() {
        for n in 1..=5 {
            let s = RelationSet::standard(n);
            assert!(s.is_noncritical(), "n={n}");
            assert!(s.is_reduced(), "n={n}");
            assert!(s.is_admissible(), "n={n}: {:?}", s.admissibility());
        }
        assert!(RelationSet::empty(3).is_admissible());
    }

    #[test]
    fn two_up_arrows_are_not_reduced() {
        let c = set(2, &[((1, 1), (2, 1)), ((1, 1), (2, 2))]);
        assert!(!c.is_reduced());
        assert!(!c.is_admissible());
    }

    #[test]
    fn implied_top_relation_is_not_reduced() {
        let c = set(2, &[((2, 1), (1, 1)), ((1, 1), (2, 2)), ((2, 1), (2, 2))]);
        assert!(matches!(c.admissibility().violations[0], Violation::ImpliedTopRelation { .. }));
    }

    #[test]
    fn cross_pattern_is_rejected() {
        // ((2,1);(3,2)) and ((3,1);(2,2)): i=1<j=2, s=1<t=2
        let c = set(3, &[((2, 1), (3, 2)), ((3, 1), (2, 2)), ((3, 1), (3, 2))]);
        assert!(!c.is_admissible());
        assert!(matches!(c.cross_violation(), Some(Violation::Cross { .. })));
    }

    #[test]
    fn critical_pair_is_found() {
        // (3,1) ≥ (2,1) and (3,1) ≥ (2,2): row 2 may be equal
        let c = set(3, &[((3, 1), (2, 1)), ((3, 1), (2, 2))]);
        assert!(!c.is_noncritical());
        assert!(RelationSet::empty(3).is_noncritical());
    }

    #[test]
    fn single_relation_is_in_f() {
        let c = set(3, &[((2, 1), (3, 2))]);
        assert_eq!(c.in_f(), Ok(true));
    }

    #[test]
    fn adjoining_pair_without_pattern() {
        // (2,1) ≥ (1,1) > (2,2)... swapped so that the only link is through row 1
        let c = set(3, &[((2, 1), (1, 1)), ((1, 1), (2, 2))]);
        let rep = c.admissibility();
        assert!(!rep.admissible);
        assert!(matches!(rep.violations[0], Violation::Adjoining { .. }), "{rep:?}");
    }
}
