//! Exact linear algebra over ℚ: fraction-free echelon forms on big
//! integers, rank, invariant-subspace closure and kernels.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;
use crate::sparse::SparseMatrix;

type SparseRow = BTreeMap<usize, BigInt>;

fn to_big_row(v: &[Q]) -> SparseRow {
    let l = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(&BigInt::from(q.denom())));
    v.iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(i, q)| (i, BigInt::from(q.numer()) * (&l / BigInt::from(q.denom()))))
        .collect()
}

fn primitive(v: &mut SparseRow) {
    let g = v.values().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.values_mut() {
        *x /= &g;
    }
}

/// `a·v − b·r` on sparse rows.
fn combine(v: &SparseRow, a: &BigInt, r: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out: SparseRow = v.iter().map(|(k, x)| (*k, a * x)).collect();
    for (k, y) in r {
        let e = out.entry(*k).or_insert_with(BigInt::zero);
        *e -= b * y;
        if e.is_zero() {
            out.remove(k);
        }
    }
    out
}

/// An incrementally built row echelon basis with sparse integer rows,
/// keyed by pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates leading entries until the leading column has no pivot.
    fn reduce(&self, mut v: SparseRow) -> SparseRow {
        while let Some((&p, lead)) = v.iter().next() {
            let Some(r) = self.rows.get(&p) else { break };
            let (a, b) = (r[&p].clone(), lead.clone());
            v = combine(&v, &a, r, &b);
            primitive(&mut v);
        }
        v
    }

    /// Adds a vector; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        self.insert_sparse(to_big_row(v))
    }

    fn insert_sparse(&mut self, v: SparseRow) -> bool {
        let mut v = self.reduce(v);
        let Some((&p, lead)) = v.iter().next() else { return false };
        if lead.is_negative() {
            v.values_mut().for_each(|x| *x = -&*x);
        }
        self.rows.insert(p, v);
        true
    }

    /// Whether `v` lies in the span of the rows.
    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(to_big_row(v)).is_empty()
    }
}

/// Rank of a list of rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// An operator with its entries scaled to integers; the scale does not
/// change spans.
struct IntOperator {
    cols: Vec<Vec<(usize, BigInt)>>,
}

impl IntOperator {
    fn new(m: &SparseMatrix) -> IntOperator {
        let l = m.entries().iter().fold(BigInt::one(), |acc, (_, _, q)| acc.lcm(&BigInt::from(q.denom())));
        let cols = (0..m.ncols())
            .map(|c| {
                m.column(c)
                    .iter()
                    .map(|&(r, q)| (r, BigInt::from(q.numer()) * (&l / BigInt::from(q.denom()))))
                    .collect()
            })
            .collect();
        IntOperator { cols }
    }

    fn apply(&self, v: &SparseRow) -> SparseRow {
        let mut out = SparseRow::new();
        for (c, x) in v {
            for (r, y) in &self.cols[*c] {
                let e = out.entry(*r).or_insert_with(BigInt::zero);
                *e += x * y;
                if e.is_zero() {
                    out.remove(r);
                }
            }
        }
        out
    }
}

/// Dimension of the smallest subspace containing `v` and invariant under
/// every operator.
pub fn span_closure_dim(v: &[Q], ops: &[SparseMatrix]) -> usize {
    let ops: Vec<IntOperator> = ops.iter().map(IntOperator::new).collect();
    let mut e = Echelon::new();
    let mut queue = vec![to_big_row(v)];
    while let Some(w) = queue.pop() {
        if !e.insert_sparse(w.clone()) {
            continue;
        }
        if e.rank() == v.len() {
            break;
        }
        for op in &ops {
            let img = op.apply(&w);
            if !img.is_empty() {
                queue.push(img);
            }
        }
    }
    e.rank()
}

/// Basis of the common kernel of the operators on the span of the given
/// columns, as vectors over all `dim` coordinates.
pub fn joint_kernel_on(ops: &[SparseMatrix], cols: &[usize], dim: usize) -> Vec<Vec<BigRational>> {
    let big = |q: Q| BigRational::new(q.numer().into(), q.denom().into());
    // rows of the restricted matrix, indexed by (operator, row)
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (o, op) in ops.iter().enumerate() {
        for (c_local, &c) in cols.iter().enumerate() {
            for &(r, q) in op.column(c) {
                let idx = *index.entry((o, r)).or_insert_with(|| {
                    rows.push(vec![BigRational::zero(); cols.len()]);
                    rows.len() - 1
                });
                rows[idx][c_local] = big(q);
            }
        }
    }
    // reduced row echelon form
    let width = cols.len();
    let mut pivots = Vec::new();
    let mut lead = 0;
    for c in 0..width {
        if lead == rows.len() {
            break;
        }
        let Some(p) = (lead..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(lead, p);
        let inv = rows[lead][c].recip();
        rows[lead].iter_mut().for_each(|x| *x *= &inv);
        let pivot_row = rows[lead].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != lead && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        lead += 1;
    }
    (0..width)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![BigRational::zero(); dim];
            v[cols[f]] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[cols[p]] = -rows[r][f].clone();
            }
            v
        })
        .collect()
}

/// Basis of the common kernel of the operators on the whole space.
pub fn joint_kernel(ops: &[SparseMatrix], dim: usize) -> Vec<Vec<BigRational>> {
    joint_kernel_on(ops, &(0..dim).collect::<Vec<_>>(), dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn q(v: i64) -> Q {
        Q::int(v)
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![Q::new(1, 2), q(0), q(1)]];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn closure_under_a_nilpotent() {
        // shift e0 → e1 → e2 → 0
        let cols: Vec<BTreeMap<usize, Q>> =
            vec![BTreeMap::from([(1, q(1))]), BTreeMap::from([(2, Q::new(1, 3))]), BTreeMap::new()];
        let s = SparseMatrix::from_columns(3, cols);
        assert_eq!(span_closure_dim(&[q(1), q(0), q(0)], std::slice::from_ref(&s)), 3);
        assert_eq!(span_closure_dim(&[q(0), q(1), q(0)], std::slice::from_ref(&s)), 2);
        let k = joint_kernel(&[s], 3);
        assert_eq!(k.len(), 1);
        assert!(k[0][2].is_one() && k[0][0].is_zero());
    }
}
