//! Relation sets over a Gelfand-Tsetlin triangle, their directed graphs,
//! admissibility, tableau satisfaction and the relation removal method.
//!
//! A [`RelationSet`] lives on the triangle of a gl(n) with vertices
//! `(i,j)`, `1 ≤ j ≤ i ≤ n`, in relative coordinates. A super set pairs one
//! set on the gl(m) triangle (tableau rows 1..m) with one on the gl(n)
//! triangle, whose vertex `(i,j)` is the tableau entry `(m+i, m+j)`.

mod admissible;
mod constraints;
mod covariant;
mod random;
mod superset;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

pub use admissible::{AdmissibilityReport, Violation};
pub use constraints::{Convention, DifferenceSystem};
pub use covariant::{covariant_chain_start, is_c_covariant, is_covariant_admissible};
pub use random::{
    random_admissible, random_consistent_super_admissible, random_seed_tableau, random_super_admissible,
};
pub use superset::{
    is_maximal_for, is_maximal_strict, maximal_relation_set, rr_remove_super, satisfies_super,
    shift_closure_holds, SideOf, SuperRelationSet,
};

/// A vertex `(row, col)` of the triangle, `1 ≤ col ≤ row ≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Vertex {
    pub row: usize,
    pub col: usize,
}

impl From<(usize, usize)> for Vertex {
    fn from((row, col): (usize, usize)) -> Vertex {
        Vertex { row, col }
    }
}

impl From<Vertex> for (usize, usize) {
    fn from(v: Vertex) -> (usize, usize) {
        (v.row, v.col)
    }
}

impl Vertex {
    pub fn new(row: usize, col: usize) -> Vertex {
        Vertex { row, col }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Which of R⁺, R⁻, R⁰ a pair belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationClass {
    /// `((i,j);(i−1,t))`
    Plus,
    /// `((i,j);(i+1,s))`
    Minus,
    /// two distinct vertices of the top row
    Zero,
}

/// An ordered pair of vertices, an arrow of the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Relation {
    pub from: Vertex,
    pub to: Vertex,
}

impl Relation {
    pub fn new(from: (usize, usize), to: (usize, usize)) -> Relation {
        Relation { from: from.into(), to: to.into() }
    }

    /// The class of the pair in a rank-`n` triangle, if it is a valid pair.
    pub fn class(&self, n: usize) -> Option<RelationClass> {
        let ok = |v: Vertex| v.col >= 1 && v.col <= v.row && v.row <= n;
        if !ok(self.from) || !ok(self.to) {
            return None;
        }
        if self.to.row + 1 == self.from.row {
            Some(RelationClass::Plus)
        } else if self.from.row + 1 == self.to.row {
            Some(RelationClass::Minus)
        } else if self.from.row == n && self.to.row == n && self.from.col != self.to.col {
            Some(RelationClass::Zero)
        } else {
            None
        }
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.from == v || self.to == v
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.from, self.to)
    }
}

/// A set of relations over the rank-`n` triangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationSet {
    n: usize,
    pairs: BTreeSet<Relation>,
}

impl RelationSet {
    pub fn empty(n: usize) -> RelationSet {
        RelationSet { n, pairs: BTreeSet::new() }
    }

    pub fn new(n: usize, pairs: impl IntoIterator<Item = Relation>) -> Result<RelationSet> {
        let mut s = RelationSet::empty(n);
        for p in pairs {
            s.insert(p)?;
        }
        Ok(s)
    }

    /// The set of betweenness relations `((k+1,i);(k,i))` and `((k,i);(k+1,i+1))`.
    pub fn standard(n: usize) -> RelationSet {
        let mut s = RelationSet::empty(n);
        for k in 1..n {
            for i in 1..=k {
                s.pairs.insert(Relation::new((k + 1, i), (k, i)));
                s.pairs.insert(Relation::new((k, i), (k + 1, i + 1)));
            }
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, r: Relation) -> Result<bool> {
        if r.class(self.n).is_none() {
            return Err(Error::Relation(format!("{r} is not in R⁺ ∪ R⁻ ∪ R⁰ for rank {}", self.n)));
        }
        Ok(self.pairs.insert(r))
    }

    pub fn remove(&mut self, r: &Relation) -> bool {
        self.pairs.remove(r)
    }

    pub fn contains(&self, r: &Relation) -> bool {
        self.pairs.contains(r)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Relation> {
        self.pairs.iter()
    }

    pub fn class_of(&self, r: &Relation) -> RelationClass {
        r.class(self.n).expect("pairs are validated on insertion")
    }

    /// All vertices of the triangle, row by row.
    pub fn universe(&self) -> Vec<Vertex> {
        universe(self.n)
    }

    /// Every valid pair of R = R⁺ ∪ R⁻ ∪ R⁰ for this rank.
    pub fn all_pairs(n: usize) -> Vec<Relation> {
        let vs = universe(n);
        let mut out = Vec::new();
        for &a in &vs {
            for &b in &vs {
                let r = Relation { from: a, to: b };
                if r.class(n).is_some() {
                    out.push(r);
                }
            }
        }
        out
    }

    /// Vertices that start or end an arrow.
    pub fn involved(&self) -> BTreeSet<Vertex> {
        self.pairs.iter().flat_map(|r| [r.from, r.to]).collect()
    }

    pub fn out_arrows(&self, v: Vertex) -> impl Iterator<Item = &Relation> {
        self.pairs.iter().filter(move |r| r.from == v)
    }

    pub fn in_arrows(&self, v: Vertex) -> impl Iterator<Item = &Relation> {
        self.pairs.iter().filter(move |r| r.to == v)
    }

    fn successors(&self) -> BTreeMap<Vertex, Vec<Vertex>> {
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for r in &self.pairs {
            adj.entry(r.from).or_default().push(r.to);
        }
        adj
    }

    /// Vertices reachable from `v` by a path of length at least one.
    pub fn reachable_from(&self, v: Vertex) -> BTreeSet<Vertex> {
        let adj = self.successors();
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<Vertex> = adj.get(&v).into_iter().flatten().copied().collect();
        while let Some(u) = queue.pop_front() {
            if seen.insert(u) {
                queue.extend(adj.get(&u).into_iter().flatten().copied());
            }
        }
        seen
    }

    /// `v ⪰ w`: a path of length ≥ 1 leads from `v` to `w`.
    pub fn reaches(&self, v: Vertex, w: Vertex) -> bool {
        self.reachable_from(v).contains(&w)
    }

    /// Either vertex reaches the other.
    pub fn comparable(&self, v: Vertex, w: Vertex) -> bool {
        self.reaches(v, w) || self.reaches(w, v)
    }

    /// Weak component label of every vertex of the triangle; vertices not
    /// involved in any arrow are singletons.
    pub fn component_labels(&self) -> BTreeMap<Vertex, usize> {
        let vs = self.universe();
        let index: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut parent: Vec<usize> = (0..vs.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for r in &self.pairs {
            let a = find(&mut parent, index[&r.from]);
            let b = find(&mut parent, index[&r.to]);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        vs.iter().map(|v| (*v, find(&mut parent, index[v]))).collect()
    }

    pub fn same_component(&self, v: Vertex, w: Vertex) -> bool {
        let labels = self.component_labels();
        labels[&v] == labels[&w]
    }

    /// The partition of the pairs by weak components of the graph, ordered
    /// by smallest pair.
    pub fn indecomposable_components(&self) -> Vec<RelationSet> {
        let labels = self.component_labels();
        let mut groups: BTreeMap<usize, RelationSet> = BTreeMap::new();
        for r in &self.pairs {
            groups.entry(labels[&r.from]).or_insert_with(|| RelationSet::empty(self.n)).pairs.insert(*r);
        }
        let mut out: Vec<RelationSet> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn is_indecomposable(&self) -> bool {
        self.indecomposable_components().len() <= 1
    }

    /// Removes every pair touching `v`.
    pub fn without_vertex(&self, v: Vertex) -> RelationSet {
        RelationSet { n: self.n, pairs: self.pairs.iter().filter(|r| !r.touches(v)).copied().collect() }
    }

    /// No arrow ends at `v`.
    pub fn is_source(&self, v: Vertex) -> bool {
        self.in_arrows(v).next().is_none()
    }

    /// No arrow starts at `v`.
    pub fn is_sink(&self, v: Vertex) -> bool {
        self.out_arrows(v).next().is_none()
    }

    /// Involved vertices that are sources or sinks, the candidates for the
    /// relation removal method.
    pub fn extremal_vertices(&self) -> Vec<Vertex> {
        self.involved().into_iter().filter(|&v| self.is_source(v) || self.is_sink(v)).collect()
    }

    /// Removes all pairs through an extremal vertex and checks that the
    /// result is admissible.
    pub fn rr_remove(&self, v: Vertex) -> Result<RelationSet> {
        if !self.involved().contains(&v) {
            return Err(Error::Precondition(format!("vertex {v} is not involved in the set")));
        }
        if !(self.is_source(v) || self.is_sink(v)) {
            return Err(Error::Precondition(format!("vertex {v} is neither maximal nor minimal")));
        }
        let out = self.without_vertex(v);
        if !out.is_admissible() {
            return Err(Error::Relation(format!("removing {v} produced an inadmissible set")));
        }
        Ok(out)
    }

    /// JSON with absolute coordinates shifted by `offset`.
    pub fn to_json(&self, offset: usize) -> RelationSetJson {
        let pairs = self
            .pairs
            .iter()
            .map(|r| PairJson {
                from: [r.from.row + offset, r.from.col + offset],
                to: [r.to.row + offset, r.to.col + offset],
                class: self.class_of(r),
            })
            .collect();
        RelationSetJson { n: self.n, offset, pairs }
    }

    pub fn from_json(j: &RelationSetJson) -> Result<RelationSet> {
        let off = j.offset;
        let mut s = RelationSet::empty(j.n);
        for p in &j.pairs {
            let rel = |a: [usize; 2]| -> Result<Vertex> {
                if a[0] <= off || a[1] <= off {
                    return Err(Error::Relation(format!("vertex {a:?} lies outside the triangle at offset {off}")));
                }
                Ok(Vertex::new(a[0] - off, a[1] - off))
            };
            let r = Relation { from: rel(p.from)?, to: rel(p.to)? };
            let class = r
                .class(j.n)
                .ok_or_else(|| Error::Relation(format!("{:?} → {:?} is not a relation", p.from, p.to)))?;
            if class != p.class {
                return Err(Error::Relation(format!(
                    "{:?} → {:?} is tagged {:?} but belongs to {:?}",
                    p.from, p.to, p.class, class
                )));
            }
            s.pairs.insert(r);
        }
        Ok(s)
    }
}

pub(crate) fn universe(n: usize) -> Vec<Vertex> {
    (1..=n).flat_map(|i| (1..=i).map(move |j| Vertex::new(i, j))).collect()
}

impl fmt::Display for RelationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|r| r.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// On-disk form of a relation set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSetJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub offset: usize,
    pub pairs: Vec<PairJson>,
}

fn is_zero(v: &usize) -> bool {
    *v == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub from: [usize; 2],
    pub to: [usize; 2],
    pub class: RelationClass,
}

impl Serialize for RelationSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json(0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RelationSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<RelationSet, D::Error> {
        let j = RelationSetJson::deserialize(d)?;
        RelationSet::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// Checks the integrality and sign conditions of `c` against values given by
/// `value`, under a sign convention.
///
/// `integral_rows` are the rows on which same-row differences must be
/// integral exactly when the vertices share a component.
pub fn satisfies_with<F>(c: &RelationSet, conv: Convention, value: F) -> bool
where
    F: Fn(Vertex) -> Q,
{
    for r in c.iter() {
        let d = value(r.from) - value(r.to);
        if !d.is_integer() {
            return false;
        }
        if !conv.accepts(c.class_of(r), d) {
            return false;
        }
    }
    let labels = c.component_labels();
    for k in conv.integral_rows(c.rank()) {
        for i in 1..=k {
            for j in i + 1..=k {
                let (a, b) = (Vertex::new(k, i), Vertex::new(k, j));
                let integral = (value(a) - value(b)).is_integer();
                if integral != (labels[&a] == labels[&b]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Satisfaction for gl(n) tableaux given as l-rows, bottom-up.
pub fn satisfies_gl(l_rows: &[Vec<Q>], c: &RelationSet) -> Result<bool> {
    let n = c.rank();
    if l_rows.len() != n || l_rows.iter().enumerate().any(|(k, r)| r.len() != k + 1) {
        return Err(Error::Shape(format!("tableau rows do not form a rank-{n} triangle")));
    }
    Ok(satisfies_with(c, Convention::Gl, |v| l_rows[v.row - 1][v.col - 1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reachability() {
        let c = RelationSet::empty(2);
        assert!(!c.reaches(Vertex::new(1, 1), Vertex::new(1, 1)));
        let c = RelationSet::new(2, [Relation::new((2, 1), (1, 1))]).unwrap();
        assert!(c.reaches(Vertex::new(2, 1), Vertex::new(1, 1)));
        let s = RelationSet::standard(2);
        assert!(s.reaches(Vertex::new(2, 1), Vertex::new(2, 2)));
        assert!(!s.reaches(Vertex::new(2, 2), Vertex::new(2, 1)));
    }

    #[test]
    fn classes() {
        assert_eq!(Relation::new((2, 1), (1, 1)).class(2), Some(RelationClass::Plus));
        assert_eq!(Relation::new((1, 1), (2, 2)).class(2), Some(RelationClass::Minus));
        assert_eq!(Relation::new((2, 1), (2, 2)).class(2), Some(RelationClass::Zero));
        assert_eq!(Relation::new((1, 1), (1, 1)).class(2), None);
        assert_eq!(Relation::new((2, 1), (2, 2)).class(3), None);
        assert!(RelationSet::new(2, [Relation::new((1, 1), (3, 1))]).is_err());
    }

    #[test]
    fn components() {
        assert!(RelationSet::empty(3).indecomposable_components().is_empty());
        let c = RelationSet::new(3, [Relation::new((2, 1), (1, 1)), Relation::new((3, 3), (2, 2))]).unwrap();
        assert_eq!(c.indecomposable_components().len(), 2);
        assert_eq!(RelationSet::standard(3).indecomposable_components().len(), 1);
    }

    #[test]
    fn json_sorted_and_round_trips() {
        let s = RelationSet::standard(2);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(
            js,
            r#"{"n":2,"pairs":[{"from":[1,1],"to":[2,2],"class":"minus"},{"from":[2,1],"to":[1,1],"class":"plus"}]}"#
        );
        assert_eq!(serde_json::from_str::<RelationSet>(&js).unwrap(), s);
        let bad = r#"{"n":2,"pairs":[{"from":[1,1],"to":[2,2],"class":"plus"}]}"#;
        assert!(serde_json::from_str::<RelationSet>(bad).is_err());
    }

    #[test]
    fn gl_satisfaction() {
        let s = RelationSet::standard(2);
        let rows = vec![vec![Q::int(1)], vec![Q::int(2), Q::int(0)]];
        assert!(satisfies_gl(&rows, &s).unwrap());
        let rows = vec![vec![Q::new(1, 2)], vec![Q::int(2), Q::int(0)]];
        assert!(!satisfies_gl(&rows, &s).unwrap());
        let e = RelationSet::empty(2);
        let generic = vec![vec![Q::new(1, 3)], vec![Q::new(1, 2), Q::int(0)]];
        assert!(satisfies_gl(&generic, &e).unwrap());
    }
}
