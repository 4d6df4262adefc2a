//! Super relation pairs `(C₁, C₂)` and tableau satisfaction for gl(m|n).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::superalgebra::Shape;
use crate::tableau::Tableau;

use super::constraints::{add_relation, Convention, DifferenceSystem};
use super::{satisfies_with, universe, Relation, RelationClass, RelationSet, RelationSetJson, Vertex};

/// Which triangle of a super pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideOf {
    /// `C₁` on the gl(m) triangle, tableau rows 1..m.
    Even,
    /// `C₂` on the gl(n) triangle, tableau entries `(m+i, m+j)`.
    Odd,
}

/// A pair `(C₁, C₂)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperRelationSet {
    shape: Shape,
    c1: RelationSet,
    c2: RelationSet,
}

#[derive(Serialize, Deserialize)]
struct SuperJson {
    c1: RelationSetJson,
    c2: RelationSetJson,
}

impl Serialize for SuperRelationSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SuperJson { c1: self.c1.to_json(0), c2: self.c2.to_json(self.shape.m()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SuperRelationSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SuperJson::deserialize(d)?;
        fn err<E: serde::de::Error>(e: impl fmt::Display) -> E {
            E::custom(e)
        }
        if j.c1.offset != 0 {
            return Err(err("c1 must not carry an offset"));
        }
        let shape = Shape::new(j.c1.n, j.c2.n).map_err(err)?;
        if j.c2.offset != shape.m() {
            return Err(err(format!("c2 offset must equal m = {}", shape.m())));
        }
        let c1 = RelationSet::from_json(&j.c1).map_err(err)?;
        let c2 = RelationSet::from_json(&j.c2).map_err(err)?;
        SuperRelationSet::new(shape, c1, c2).map_err(err)
    }
}

impl fmt::Display for SuperRelationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C1={} C2={}", self.c1, self.c2)
    }
}

impl SuperRelationSet {
    pub fn new(shape: Shape, c1: RelationSet, c2: RelationSet) -> Result<SuperRelationSet> {
        if c1.rank() != shape.m() || c2.rank() != shape.n() {
            return Err(Error::Shape(format!(
                "relation ranks ({},{}) do not match {shape}",
                c1.rank(),
                c2.rank()
            )));
        }
        Ok(SuperRelationSet { shape, c1, c2 })
    }

    pub fn empty(shape: Shape) -> SuperRelationSet {
        SuperRelationSet { shape, c1: RelationSet::empty(shape.m()), c2: RelationSet::empty(shape.n()) }
    }

    /// The betweenness pair: `((k+1,i);(k,i))` and `((k,i);(k+1,i+1))` in
    /// both triangles.
    pub fn standard(shape: Shape) -> SuperRelationSet {
        SuperRelationSet {
            shape,
            c1: RelationSet::standard(shape.m()),
            c2: RelationSet::standard(shape.n()),
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn c1(&self) -> &RelationSet {
        &self.c1
    }

    pub fn c2(&self) -> &RelationSet {
        &self.c2
    }

    pub fn side(&self, side: SideOf) -> &RelationSet {
        match side {
            SideOf::Even => &self.c1,
            SideOf::Odd => &self.c2,
        }
    }

    pub fn with_side(&self, side: SideOf, c: RelationSet) -> Result<SuperRelationSet> {
        match side {
            SideOf::Even => SuperRelationSet::new(self.shape, c, self.c2.clone()),
            SideOf::Odd => SuperRelationSet::new(self.shape, self.c1.clone(), c),
        }
    }

    pub fn len(&self) -> usize {
        self.c1.len() + self.c2.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c1.is_empty() && self.c2.is_empty()
    }

    /// Both components admissible.
    pub fn is_admissible(&self) -> bool {
        self.c1.is_admissible() && self.c2.is_admissible()
    }

    /// Tableau position of a vertex of one triangle.
    pub fn position(&self, side: SideOf, v: Vertex) -> (usize, usize) {
        match side {
            SideOf::Even => (v.row, v.col),
            SideOf::Odd => (v.row + self.shape.m(), v.col + self.shape.m()),
        }
    }

    fn convention(side: SideOf) -> Convention {
        match side {
            SideOf::Even => Convention::Even,
            SideOf::Odd => Convention::Odd,
        }
    }

    fn satisfies_side(&self, t: &Tableau, side: SideOf) -> bool {
        let c = self.side(side);
        satisfies_with(c, Self::convention(side), |v| {
            let (k, i) = self.position(side, v);
            t.l(k, i)
        })
    }

    /// Conditions checked tableau by tableau for members of a module:
    /// (1) both triangles, (2) θ ∈ {0,1}, (3) mixed nonvanishing, and the
    /// even-pair nonvanishing `l_ki ≠ l_kj` for `i < j ≤ m` in the same rows.
    pub fn pointwise_failure(&self, t: &Tableau) -> Option<&'static str> {
        if t.shape() != self.shape {
            return Some("shape");
        }
        if !self.satisfies_side(t, SideOf::Even) {
            return Some("c1");
        }
        if !self.satisfies_side(t, SideOf::Odd) {
            return Some("c2");
        }
        if !theta_ok(t) {
            return Some("theta");
        }
        let (m, tot) = (self.shape.m(), self.shape.total());
        for k in m + 1..tot {
            for i in 1..=m {
                for j in m + 1..=k {
                    if t.l(k, i) == t.l(k, j) {
                        return Some("mixed");
                    }
                }
                for j in i + 1..=m {
                    if t.l(k, i) == t.l(k, j) {
                        return Some("even-pair");
                    }
                }
            }
        }
        None
    }

    /// Offset system of one triangle relative to `t`: one variable per
    /// vertex plus a zero node (the last index). `None` if `t` does not
    /// satisfy the triangle's relations.
    fn offset_system(&self, t: &Tableau, side: SideOf) -> Option<(DifferenceSystem, BTreeMap<Vertex, usize>)> {
        let c = self.side(side);
        let vs = universe(c.rank());
        let index: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let zero = vs.len();
        let mut sys = DifferenceSystem::new(vs.len() + 1);
        let conv = Self::convention(side);
        let lv = |v: Vertex| {
            let (k, i) = self.position(side, v);
            t.l(k, i)
        };
        for r in c.iter() {
            let d = (lv(r.from) - lv(r.to)).to_integer()?;
            add_relation(&mut sys, conv, c.class_of(r), index[&r.from], index[&r.to], d);
        }
        let (m, n) = (self.shape.m(), self.shape.n());
        match side {
            SideOf::Even => {
                // row m is tied to the fixed top row through θ ∈ {0,1}
                for i in 1..=m {
                    let d = (t.l(m + n, i) - t.l(m, i)).to_integer()?;
                    sys.add_range(index[&Vertex::new(m, i)], zero, d - n as i64, d);
                }
            }
            SideOf::Odd => {
                for j in 1..=n {
                    sys.add_eq(index[&Vertex::new(n, j)], zero, 0);
                }
            }
        }
        Some((sys, index))
    }

    /// Whether every integer shift satisfying (1) and (2) keeps mixed
    /// entries of rows m+1..m+n−1 distinct. Decided exactly: the attainable
    /// values of an even entry form a finite set and those of an odd entry
    /// an integer interval, computed from the two triangles independently.
    pub fn shift_closure_holds(&self, t: &Tableau) -> bool {
        let (m, n, tot) = (self.shape.m(), self.shape.n(), self.shape.total());
        let Some((even_sys, even_idx)) = self.offset_system(t, SideOf::Even) else { return false };
        let Some((mut odd_sys, odd_idx)) = self.offset_system(t, SideOf::Odd) else { return false };
        let even_zero = even_sys.len() - 1;
        let odd_zero = odd_sys.len() - 1;
        for k in m + 1..tot {
            for i in 1..=m {
                let mut attainable: Option<Vec<Q>> = None;
                for j in m + 1..=k {
                    if !(t.l(k, i) - t.l(k, j)).is_integer() {
                        continue;
                    }
                    let values = attainable.get_or_insert_with(|| {
                        let d = (t.l(m + n, i) - t.l(m, i)).to_integer().unwrap_or(0);
                        let below = (k - m) as i64;
                        (0..=(tot - k) as i64)
                            .filter(|&s| {
                                let mut sys = even_sys.clone();
                                sys.add_range(even_idx[&Vertex::new(m, i)], even_zero, d - s - below, d - s);
                                sys.feasible()
                            })
                            .map(|s| t.l(m + n, i) - Q::int(s))
                            .collect()
                    });
                    let v = odd_idx[&Vertex::new(k - m, j - m)];
                    let lo = odd_sys.min_diff(v, odd_zero);
                    let hi = odd_sys.max_diff(v, odd_zero);
                    let base = t.l(k, j);
                    let hit = values.iter().any(|&a| {
                        let z = (a - base).to_integer().expect("integral by the class test");
                        lo.is_none_or(|lo| z >= lo) && hi.is_none_or(|hi| z <= hi)
                    });
                    if hit {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether the tableau satisfies the pair: conditions (1)–(4) plus the
    /// even-pair nonvanishing.
    pub fn satisfied_by(&self, t: &Tableau) -> bool {
        self.pointwise_failure(t).is_none() && self.shift_closure_holds(t)
    }

    /// Vertex pairs of one triangle that a maximal set must order: adjacent
    /// rows, and same-row pairs of the triangle's top row.
    fn candidate_pairs(rank: usize) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for a in universe(rank) {
            for b in universe(rank) {
                if a < b && (a.row + 1 == b.row || (a.row == rank && b.row == rank)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn side_is_maximal(&self, t: &Tableau, side: SideOf) -> bool {
        let c = self.side(side);
        Self::candidate_pairs(c.rank()).into_iter().all(|(a, b)| {
            let (ka, ia) = self.position(side, a);
            let (kb, ib) = self.position(side, b);
            !(t.l(ka, ia) - t.l(kb, ib)).is_integer() || c.comparable(a, b)
        })
    }

    /// Whether a path in C₁ orders two vertices of row m. The odd
    /// generators move row m without protecting such orders, and the
    /// defining relations can fail on modules over these pairs.
    pub fn orders_even_top_row(&self) -> bool {
        let m = self.shape.m();
        let c = self.c1();
        (1..=m).any(|i| (1..=m).any(|j| i != j && c.reaches(Vertex::new(m, i), Vertex::new(m, j))))
    }

    /// Every pair of adjacent-row (or top-row) vertices with integral
    /// difference at `t` is ordered by a path.
    pub fn is_maximal_for(&self, t: &Tableau) -> bool {
        self.side_is_maximal(t, SideOf::Even) && self.side_is_maximal(t, SideOf::Odd)
    }

    /// No single relation outside the pair can be added with `t` still
    /// satisfying both triangles.
    pub fn is_maximal_strict(&self, t: &Tableau) -> bool {
        for side in [SideOf::Even, SideOf::Odd] {
            let c = self.side(side);
            for r in RelationSet::all_pairs(c.rank()) {
                if c.contains(&r) {
                    continue;
                }
                let mut bigger = c.clone();
                bigger.insert(r).expect("valid pair");
                let ext = self.with_side(side, bigger).expect("same rank");
                if ext.satisfies_side(t, side) {
                    return false;
                }
            }
        }
        true
    }
}

fn theta_ok(t: &Tableau) -> bool {
    let s = t.shape();
    (s.m()..s.total()).all(|k| (1..=s.m()).all(|i| {
        let th = t.th(k, i);
        th == 0 || th == 1
    }))
}

/// Whether the tableau satisfies the pair (see [`SuperRelationSet::satisfied_by`]).
pub fn satisfies_super(t: &Tableau, c: &SuperRelationSet) -> Result<bool> {
    if t.shape() != c.shape() {
        return Err(Error::Shape(format!("tableau of {} against relations of {}", t.shape(), c.shape())));
    }
    Ok(c.satisfied_by(t))
}

/// Condition (4) alone.
pub fn shift_closure_holds(t: &Tableau, c: &SuperRelationSet) -> bool {
    c.shift_closure_holds(t)
}

pub fn is_maximal_for(c: &SuperRelationSet, t: &Tableau) -> bool {
    c.is_maximal_for(t)
}

pub fn is_maximal_strict(c: &SuperRelationSet, t: &Tableau) -> bool {
    c.is_maximal_strict(t)
}

/// The relations satisfied by `t` with integral differences, reduced to
/// the transitive reduction (top-row relations dropped first).
fn maximal_side(t: &Tableau, shape: Shape, side: SideOf) -> RelationSet {
    let probe = SuperRelationSet::empty(shape);
    let rank = probe.side(side).rank();
    let conv = SuperRelationSet::convention(side);
    let value = |v: Vertex| {
        let (k, i) = probe.position(side, v);
        t.l(k, i)
    };
    let mut c = RelationSet::empty(rank);
    for r in RelationSet::all_pairs(rank) {
        let d = value(r.from) - value(r.to);
        if d.is_integer() && conv.accepts(r.class(rank).expect("valid"), d) {
            c.insert(r).expect("valid");
        }
    }
    let mut order: Vec<Relation> = c.iter().copied().collect();
    order.sort_by_key(|r| (c.class_of(r) != RelationClass::Zero, *r));
    for r in order {
        let mut rest = c.clone();
        rest.remove(&r);
        if rest.reaches(r.from, r.to) {
            c = rest;
        }
    }
    c
}

/// The maximal pair satisfied by `t`; an error when the result is not
/// admissible or `t` is degenerate.
pub fn maximal_relation_set(t: &Tableau) -> Result<SuperRelationSet> {
    if !theta_ok(t) {
        return Err(Error::Precondition("every θ must be 0 or 1".into()));
    }
    let shape = t.shape();
    let c = SuperRelationSet::new(
        shape,
        maximal_side(t, shape, SideOf::Even),
        maximal_side(t, shape, SideOf::Odd),
    )?;
    if !c.is_admissible() {
        return Err(Error::NoMaximalSet(format!("the reduced set {c} is not admissible")));
    }
    if !c.satisfied_by(t) {
        return Err(Error::NoMaximalSet(format!("{t} does not satisfy its own maximal set")));
    }
    Ok(c)
}

/// The relation removal method on one triangle of a pair.
pub fn rr_remove_super(c: &SuperRelationSet, side: SideOf, v: Vertex) -> Result<SuperRelationSet> {
    let reduced = c.side(side).rr_remove(v)?;
    c.with_side(side, reduced)
}
