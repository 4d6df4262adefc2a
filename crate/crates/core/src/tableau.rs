//! Gelfand-Tsetlin tableaux for gl(m|n), stored in λ-coordinates with the l
//! and θ views computed on demand.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::superalgebra::{l_of, lambda_of, Shape, Weight};

/// A triangular array λ_{ki}, 1 ≤ i ≤ k ≤ m+n.
///
/// Entries are kept flat with the top row first, so the derived ordering is
/// the canonical one: lexicographic on rows read top row first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    shape: Shape,
    data: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    m: usize,
    n: usize,
    rows: Vec<Vec<Q>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;
    fn try_from(r: TableauRepr) -> Result<Tableau> {
        Tableau::from_rows(Shape::new(r.m, r.n)?, r.rows)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> TableauRepr {
        TableauRepr { m: t.shape.m(), n: t.shape.n(), rows: t.rows() }
    }
}

/// A unit change ±1 of one non-top entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shift {
    pub k: usize,
    pub i: usize,
    pub sign: i8,
}

impl Shift {
    pub fn up(k: usize, i: usize) -> Shift {
        Shift { k, i, sign: 1 }
    }

    pub fn down(k: usize, i: usize) -> Shift {
        Shift { k, i, sign: -1 }
    }

    pub fn opposite(self) -> Shift {
        Shift { sign: -self.sign, ..self }
    }

    /// All ± shifts of a shape.
    pub fn all(shape: Shape) -> Vec<Shift> {
        let mut out = Vec::new();
        for k in 1..shape.total() {
            for i in 1..=k {
                out.push(Shift::up(k, i));
                out.push(Shift::down(k, i));
            }
        }
        out
    }
}

fn offset(total: usize, k: usize) -> usize {
    total * (total + 1) / 2 - k * (k + 1) / 2
}

impl Tableau {
    /// Builds a tableau from rows listed bottom-up (row 1 first).
    pub fn from_rows(shape: Shape, rows: Vec<Vec<Q>>) -> Result<Tableau> {
        let t = shape.total();
        if rows.len() != t {
            return Err(Error::Shape(format!("{} rows given, {shape} needs {t}", rows.len())));
        }
        for (idx, r) in rows.iter().enumerate() {
            if r.len() != idx + 1 {
                return Err(Error::Shape(format!("row {} has {} entries", idx + 1, r.len())));
            }
        }
        let data = rows.into_iter().rev().flatten().collect();
        Ok(Tableau { shape, data })
    }

    pub fn from_int_rows(shape: Shape, rows: &[&[i64]]) -> Result<Tableau> {
        Tableau::from_rows(shape, rows.iter().map(|r| r.iter().map(|&v| Q::int(v)).collect()).collect())
    }

    /// The tableau with λ_{ki} = λ_i in every row.
    pub fn highest(w: &Weight) -> Tableau {
        let s = w.shape();
        let rows = (1..=s.total()).map(|k| (1..=k).map(|i| w.get(i)).collect()).collect();
        Tableau::from_rows(s, rows).expect("consistent sizes")
    }

    /// Builds a tableau from l-coordinates, rows bottom-up.
    pub fn from_l_rows(shape: Shape, rows: Vec<Vec<Q>>) -> Result<Tableau> {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().enumerate().map(|(c, l)| lambda_of(shape, c + 1, l)).collect())
            .collect();
        Tableau::from_rows(shape, rows)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    fn check(&self, k: usize, i: usize) -> Result<()> {
        if k == 0 || k > self.shape.total() || i == 0 || i > k {
            return Err(Error::Index(format!("entry ({k},{i}) not in the pattern of {}", self.shape)));
        }
        Ok(())
    }

    fn pos(&self, k: usize, i: usize) -> usize {
        offset(self.shape.total(), k) + i - 1
    }

    /// λ_{ki}; panics on bad indices.
    pub fn lambda(&self, k: usize, i: usize) -> Q {
        debug_assert!(i >= 1 && i <= k && k <= self.shape.total());
        self.data[self.pos(k, i)]
    }

    pub fn try_lambda(&self, k: usize, i: usize) -> Result<Q> {
        self.check(k, i)?;
        Ok(self.lambda(k, i))
    }

    /// l_{ki}; panics on bad indices.
    pub fn l(&self, k: usize, i: usize) -> Q {
        l_of(self.shape, i, self.lambda(k, i))
    }

    pub fn l_value(&self, k: usize, i: usize) -> Result<Q> {
        self.check(k, i)?;
        Ok(self.l(k, i))
    }

    /// θ_{ki} = λ_{k+1,i} − λ_{ki}; panics on bad indices.
    pub fn th(&self, k: usize, i: usize) -> Q {
        self.lambda(k + 1, i) - self.lambda(k, i)
    }

    /// θ_{ki} for m ≤ k ≤ m+n−1 and 1 ≤ i ≤ m.
    pub fn theta(&self, k: usize, i: usize) -> Result<Q> {
        let m = self.shape.m();
        if k < m || k >= self.shape.total() || i == 0 || i > m {
            return Err(Error::Index(format!("θ({k},{i}) is not defined for {}", self.shape)));
        }
        Ok(self.th(k, i))
    }

    /// Row `k` in λ-coordinates.
    pub fn row(&self, k: usize) -> &[Q] {
        let p = offset(self.shape.total(), k);
        &self.data[p..p + k]
    }

    pub fn top_row(&self) -> &[Q] {
        self.row(self.shape.total())
    }

    /// All rows bottom-up.
    pub fn rows(&self) -> Vec<Vec<Q>> {
        (1..=self.shape.total()).map(|k| self.row(k).to_vec()).collect()
    }

    pub fn apply_shift(&self, s: Shift) -> Result<Tableau> {
        self.check(s.k, s.i)?;
        if s.k == self.shape.total() {
            return Err(Error::Index("the top row is never shifted".into()));
        }
        Ok(self.shifted(s.k, s.i, s.sign as i64))
    }

    /// Adds `d` to λ_{ki} without range checks on the top row.
    pub fn shifted(&self, k: usize, i: usize, d: i64) -> Tableau {
        let mut t = self.clone();
        let p = t.pos(k, i);
        t.data[p] += Q::int(d);
        t
    }

    /// Eigenvalue of h_k: Σ_j λ_{kj} − Σ_j λ_{k−1,j}.
    pub fn h_eigenvalue(&self, k: usize) -> Result<Q> {
        if k == 0 || k > self.shape.total() {
            return Err(Error::Index(format!("h{k} not defined for {}", self.shape)));
        }
        let up: Q = self.row(k).iter().copied().sum();
        let down: Q = if k > 1 { self.row(k - 1).iter().copied().sum() } else { Q::ZERO };
        Ok(up - down)
    }

    /// (h₁,…,h_{m+n}) eigenvalues.
    pub fn weight(&self) -> Vec<Q> {
        (1..=self.shape.total()).map(|k| self.h_eigenvalue(k).expect("in range")).collect()
    }

    /// The offset of every entry from `other`, if all are integers.
    pub fn integer_offset(&self, other: &Tableau) -> Option<Vec<i64>> {
        if self.shape != other.shape {
            return None;
        }
        self.data.iter().zip(&other.data).map(|(a, b)| (*a - *b).to_integer()).collect()
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.shape.total())
            .rev()
            .map(|k| {
                let r: Vec<String> = self.row(k).iter().map(|q| q.to_string()).collect();
                r.join(",")
            })
            .collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl11(rows: &[&[i64]]) -> Tableau {
        Tableau::from_int_rows(Shape::new(1, 1).unwrap(), rows).unwrap()
    }

    #[test]
    fn l_and_theta_examples() {
        let t = gl11(&[&[1], &[1, 0]]);
        assert_eq!(t.l_value(2, 2).unwrap(), Q::ZERO);
        assert_eq!(t.l_value(1, 1).unwrap(), Q::ONE);
        assert_eq!(t.theta(1, 1).unwrap(), Q::ZERO);
        assert_eq!(gl11(&[&[0], &[1, 0]]).theta(1, 1).unwrap(), Q::ONE);
        assert_eq!(gl11(&[&[5], &[1, 0]]).theta(1, 1).unwrap(), Q::int(-4));
        let s = Shape::new(1, 2).unwrap();
        let t = Tableau::from_int_rows(s, &[&[0], &[0, 0], &[0, 0, -4]]).unwrap();
        assert_eq!(t.l_value(3, 3).unwrap(), Q::int(5));
        assert!(t.l_value(2, 3).is_err());
    }

    #[test]
    fn shifts() {
        let t = gl11(&[&[1], &[1, 0]]);
        let u = t.apply_shift(Shift::up(1, 1)).unwrap();
        assert_eq!(u, gl11(&[&[2], &[1, 0]]));
        assert_eq!(u.apply_shift(Shift::down(1, 1)).unwrap(), t);
        assert!(t.apply_shift(Shift::up(2, 1)).is_err());
    }

    #[test]
    fn h_eigenvalues() {
        let t = gl11(&[&[1], &[1, 0]]);
        assert_eq!(t.weight(), vec![Q::ONE, Q::ZERO]);
        let t = gl11(&[&[0], &[1, 0]]);
        assert_eq!(t.weight(), vec![Q::ZERO, Q::ONE]);
    }

    #[test]
    fn json_rows_bottom_up() {
        let t = gl11(&[&[1], &[1, 0]]);
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"m":1,"n":1,"rows":[["1"],["1","0"]]}"#);
        assert_eq!(serde_json::from_str::<Tableau>(&js).unwrap(), t);
    }

    #[test]
    fn canonical_order_reads_top_row_first() {
        let s = Shape::new(1, 1).unwrap();
        let a = Tableau::from_int_rows(s, &[&[5], &[1, 0]]).unwrap();
        let b = Tableau::from_int_rows(s, &[&[0], &[2, 0]]).unwrap();
        assert!(a < b);
    }
}
