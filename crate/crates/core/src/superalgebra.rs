//! Structure of gl(m|n): indices, parity, the super bracket of matrix units,
//! weights in λ- and l-coordinates, and typicality predicates.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

/// The pair (m, n) of gl(m|n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ShapeRepr", into = "ShapeRepr")]
pub struct Shape {
    m: usize,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct ShapeRepr {
    m: usize,
    n: usize,
}

impl TryFrom<ShapeRepr> for Shape {
    type Error = Error;
    fn try_from(r: ShapeRepr) -> Result<Shape> {
        Shape::new(r.m, r.n)
    }
}

impl From<Shape> for ShapeRepr {
    fn from(s: Shape) -> ShapeRepr {
        ShapeRepr { m: s.m, n: s.n }
    }
}

impl Shape {
    pub fn new(m: usize, n: usize) -> Result<Shape> {
        if m == 0 || n == 0 {
            return Err(Error::Shape(format!("need m ≥ 1 and n ≥ 1, got ({m},{n})")));
        }
        Ok(Shape { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// m + n, the size of the defining matrices.
    pub fn total(&self) -> usize {
        self.m + self.n
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.total() {
            return Err(Error::Index(format!("index {i} not in 1..={}", self.total())));
        }
        Ok(())
    }

    /// 0 for even indices (i ≤ m), 1 for odd ones.
    pub fn parity(&self, i: usize) -> Result<u8> {
        self.check_index(i)?;
        Ok(self.parity_unchecked(i))
    }

    pub(crate) fn parity_unchecked(&self, i: usize) -> u8 {
        u8::from(i > self.m)
    }

    /// Parses `"m,n"`.
    pub fn parse(s: &str) -> Result<Shape> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("shape must look like m,n: {s:?}")))?;
        let m = a.trim().parse().map_err(|_| Error::Parse(format!("bad m in {s:?}")))?;
        let n = b.trim().parse().map_err(|_| Error::Parse(format!("bad n in {s:?}")))?;
        Shape::new(m, n)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{})", self.m, self.n)
    }
}

/// The matrix unit E_ij.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisElement {
    pub i: usize,
    pub j: usize,
}

impl BasisElement {
    pub fn new(i: usize, j: usize, shape: Shape) -> Result<BasisElement> {
        shape.check_index(i)?;
        shape.check_index(j)?;
        Ok(BasisElement { i, j })
    }

    pub fn parity(&self, shape: Shape) -> u8 {
        shape.parity_unchecked(self.i) ^ shape.parity_unchecked(self.j)
    }

    /// All (m+n)² matrix units in row-major order.
    pub fn all(shape: Shape) -> Vec<BasisElement> {
        let t = shape.total();
        (1..=t).flat_map(|i| (1..=t).map(move |j| BasisElement { i, j })).collect()
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{},{}", self.i, self.j)
    }
}

/// A finite linear combination of matrix units with no zero coefficients.
pub type ElementCombo = BTreeMap<BasisElement, Q>;

/// The super bracket `[a, b] = δ_kj E_il − (−1)^{(ī+j̄)(k̄+l̄)} δ_il E_kj`
/// for `a = E_ij`, `b = E_kl`.
pub fn bracket(a: BasisElement, b: BasisElement, shape: Shape) -> Result<ElementCombo> {
    for x in [a.i, a.j, b.i, b.j] {
        shape.check_index(x)?;
    }
    let mut out = ElementCombo::new();
    let mut add = |e: BasisElement, c: Q| {
        let v = out.entry(e).or_insert(Q::ZERO);
        *v += c;
        if v.is_zero() {
            out.remove(&e);
        }
    };
    if b.i == a.j {
        add(BasisElement { i: a.i, j: b.j }, Q::ONE);
    }
    if a.i == b.j {
        let sign = if a.parity(shape) * b.parity(shape) == 1 { -1 } else { 1 };
        add(BasisElement { i: b.i, j: a.j }, Q::int(-sign));
    }
    Ok(out)
}

/// Highest-weight data (λ₁,…,λ_{m+n}).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WeightRepr", into = "WeightRepr")]
pub struct Weight {
    shape: Shape,
    entries: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    m: usize,
    n: usize,
    lambda: Vec<Q>,
}

impl TryFrom<WeightRepr> for Weight {
    type Error = Error;
    fn try_from(r: WeightRepr) -> Result<Weight> {
        Weight::new(Shape::new(r.m, r.n)?, r.lambda)
    }
}

impl From<Weight> for WeightRepr {
    fn from(w: Weight) -> WeightRepr {
        WeightRepr { m: w.shape.m, n: w.shape.n, lambda: w.entries }
    }
}

impl Weight {
    pub fn new(shape: Shape, entries: Vec<Q>) -> Result<Weight> {
        if entries.len() != shape.total() {
            return Err(Error::Shape(format!(
                "weight has {} entries, {} expects {}",
                entries.len(),
                shape,
                shape.total()
            )));
        }
        Ok(Weight { shape, entries })
    }

    pub fn from_ints(shape: Shape, entries: &[i64]) -> Result<Weight> {
        Weight::new(shape, entries.iter().map(|&v| Q::int(v)).collect())
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    /// λ_i with a 1-based index.
    pub fn get(&self, i: usize) -> Q {
        self.entries[i - 1]
    }

    pub fn to_l(&self) -> LVector {
        weight_to_l(self)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|q| q.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Weight data in l-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LVector {
    shape: Shape,
    entries: Vec<Q>,
}

impl LVector {
    pub fn new(shape: Shape, entries: Vec<Q>) -> Result<LVector> {
        if entries.len() != shape.total() {
            return Err(Error::Shape(format!("l-vector length {} for {}", entries.len(), shape)));
        }
        Ok(LVector { shape, entries })
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Q {
        self.entries[i - 1]
    }
}

/// l-coordinate of an entry λ in column `i`: `λ − i + 1` for even columns,
/// `−λ + i − 2m` for odd ones. Row-independent.
pub fn l_of(shape: Shape, i: usize, lambda: Q) -> Q {
    let i_q = Q::int(i as i64);
    if i <= shape.m {
        lambda - i_q + Q::ONE
    } else {
        -lambda + i_q - Q::int(2 * shape.m as i64)
    }
}

/// Inverse of [`l_of`].
pub fn lambda_of(shape: Shape, i: usize, l: Q) -> Q {
    let i_q = Q::int(i as i64);
    if i <= shape.m {
        l + i_q - Q::ONE
    } else {
        -l + i_q - Q::int(2 * shape.m as i64)
    }
}

pub fn weight_to_l(w: &Weight) -> LVector {
    let entries = (1..=w.shape.total()).map(|i| l_of(w.shape, i, w.get(i))).collect();
    LVector { shape: w.shape, entries }
}

pub fn l_to_weight(l: &LVector) -> Weight {
    let entries = (1..=l.shape.total()).map(|i| lambda_of(l.shape, i, l.get(i))).collect();
    Weight { shape: l.shape, entries }
}

/// `l_i ≠ l_j` for every even `i` and odd `j`.
pub fn is_typical(w: &Weight) -> bool {
    let l = w.to_l();
    let s = w.shape;
    (1..=s.m).all(|i| (s.m + 1..=s.total()).all(|j| l.get(i) != l.get(j)))
}

/// No even l-value lies in the integer-step interval `[l_{m+1}; l_{m+n}]`.
///
/// When `l_{m+n} − l_{m+1}` is not a nonnegative integer the interval is read
/// as the points `l_{m+1} + s` (s a nonnegative integer) not exceeding
/// `l_{m+n}`.
pub fn is_essentially_typical(w: &Weight) -> bool {
    let l = w.to_l();
    let s = w.shape;
    let lo = l.get(s.m + 1);
    let hi = l.get(s.total());
    (1..=s.m).all(|i| {
        let d = l.get(i) - lo;
        !(d.is_integer() && d >= 0 && l.get(i) <= hi)
    })
}

/// `λ_i − λ_{i+1}` is a nonnegative integer for every `i ≠ m`.
pub fn is_dominant(w: &Weight) -> bool {
    let s = w.shape;
    (1..s.total()).filter(|&i| i != s.m).all(|i| {
        let d = w.get(i) - w.get(i + 1);
        d.is_integer() && d >= 0
    })
}
