//! Sign conventions for relation satisfaction and a small solver for
//! systems of difference constraints `x_a − x_b ≤ c` over the integers.

use crate::rational::Q;

use super::RelationClass;

/// How a relation `((i,j);(r,s))` constrains `d = l_ij − l_rs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// gl(n): `d ≥ 0` on R⁺ ∪ R⁰, `d > 0` on R⁻; integrality on rows 1..n−1.
    Gl,
    /// Even triangle of gl(m|n): `d ≥ 0` on R⁺, `d > 0` on R⁻ ∪ R⁰; all rows.
    Even,
    /// Odd triangle of gl(m|n): `d ≤ 0` on R⁺ ∪ R⁰, `d < 0` on R⁻; all rows.
    Odd,
}

impl Convention {
    /// Returns `(lower, gap)`: when `lower` the relation demands `d ≥ gap`,
    /// otherwise `d ≤ −gap`.
    pub fn bound(&self, class: RelationClass) -> (bool, i64) {
        use RelationClass::*;
        match (self, class) {
            (Convention::Gl, Plus | Zero) => (true, 0),
            (Convention::Gl, Minus) => (true, 1),
            (Convention::Even, Plus) => (true, 0),
            (Convention::Even, Minus | Zero) => (true, 1),
            (Convention::Odd, Plus | Zero) => (false, 0),
            (Convention::Odd, Minus) => (false, 1),
        }
    }

    /// Whether an integral difference `d` meets the relation's sign demand.
    pub fn accepts(&self, class: RelationClass, d: Q) -> bool {
        let (lower, gap) = self.bound(class);
        if lower {
            d >= gap
        } else {
            d <= -gap
        }
    }

    /// Rows on which same-row integrality must match the component structure.
    pub fn integral_rows(&self, n: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            Convention::Gl => 1..=n.saturating_sub(1),
            Convention::Even | Convention::Odd => 1..=n,
        }
    }
}

/// Adds the demand of one relation on integer offsets `z`, where the
/// values are `l = base + z` and `base_diff = base_from − base_to`.
pub(crate) fn add_relation(
    sys: &mut DifferenceSystem,
    conv: Convention,
    class: RelationClass,
    from: usize,
    to: usize,
    base_diff: i64,
) {
    let (lower, gap) = conv.bound(class);
    if lower {
        sys.add(to, from, base_diff - gap);
    } else {
        sys.add(from, to, -gap - base_diff);
    }
}

/// Difference constraints `x_a − x_b ≤ c` over a fixed number of integer
/// variables, solved by all-pairs shortest paths.
#[derive(Clone, Debug)]
pub struct DifferenceSystem {
    n: usize,
    dist: Vec<Vec<Option<i64>>>,
    dirty: bool,
}

impl DifferenceSystem {
    pub fn new(n: usize) -> DifferenceSystem {
        let mut dist = vec![vec![None; n]; n];
        for (i, row) in dist.iter_mut().enumerate() {
            row[i] = Some(0);
        }
        DifferenceSystem { n, dist, dirty: false }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Adds `x_a − x_b ≤ c`.
    pub fn add(&mut self, a: usize, b: usize, c: i64) {
        let e = &mut self.dist[b][a];
        if e.is_none_or(|v| c < v) {
            *e = Some(c);
            self.dirty = true;
        }
    }

    /// Adds `x_a − x_b = c`.
    pub fn add_eq(&mut self, a: usize, b: usize, c: i64) {
        self.add(a, b, c);
        self.add(b, a, -c);
    }

    /// Adds `lo ≤ x_a − x_b ≤ hi`.
    pub fn add_range(&mut self, a: usize, b: usize, lo: i64, hi: i64) {
        self.add(a, b, hi);
        self.add(b, a, -lo);
    }

    fn close(&mut self) {
        if !self.dirty {
            return;
        }
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                let Some(ik) = self.dist[i][k] else { continue };
                for j in 0..n {
                    if let Some(kj) = self.dist[k][j] {
                        let cand = ik + kj;
                        if self.dist[i][j].is_none_or(|v| cand < v) {
                            self.dist[i][j] = Some(cand);
                        }
                    }
                }
            }
        }
        self.dirty = false;
    }

    /// Whether some integer assignment meets every constraint.
    pub fn feasible(&mut self) -> bool {
        self.close();
        (0..self.n).all(|i| self.dist[i][i].is_none_or(|v| v >= 0))
    }

    /// The largest value of `x_a − x_b` over feasible assignments, or `None`
    /// when unbounded. Only meaningful for feasible systems.
    pub fn max_diff(&mut self, a: usize, b: usize) -> Option<i64> {
        self.close();
        self.dist[b][a]
    }

    /// The smallest value of `x_a − x_b`, or `None` when unbounded below.
    pub fn min_diff(&mut self, a: usize, b: usize) -> Option<i64> {
        self.close();
        self.dist[a][b].map(|v| -v)
    }
}
