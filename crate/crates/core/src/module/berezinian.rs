//! Eigenvalues of the row Berezinians `B_k(t)` on tableaux, in factored
//! form, and the truncated operator series from the defining double sum.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::sparse::SparseMatrix;
use crate::superalgebra::{BasisElement, Shape};
use crate::tableau::Tableau;

use super::ModuleSpace;

/// `Π(1 + t·a) / Π(1 + t·b)`, kept reduced: no zero roots, no common
/// factor, both lists sorted. Equality is equality of rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BerezinianSeries {
    pub numerator: Vec<Q>,
    pub denominator: Vec<Q>,
}

impl BerezinianSeries {
    pub fn new(numerator: Vec<Q>, denominator: Vec<Q>) -> BerezinianSeries {
        let mut num: Vec<Q> = numerator.into_iter().filter(|q| !q.is_zero()).collect();
        let mut den = Vec::new();
        for b in denominator.into_iter().filter(|q| !q.is_zero()) {
            if let Some(p) = num.iter().position(|a| *a == b) {
                num.remove(p);
            } else {
                den.push(b);
            }
        }
        num.sort();
        den.sort();
        BerezinianSeries { numerator: num, denominator: den }
    }

    /// Power series coefficients up to `t^order`.
    pub fn expand(&self, order: usize) -> Vec<Q> {
        let mut c = vec![Q::ZERO; order + 1];
        c[0] = Q::ONE;
        for &a in &self.numerator {
            for i in (1..=order).rev() {
                let prev = c[i - 1];
                c[i] += a * prev;
            }
        }
        for &b in &self.denominator {
            // multiply by Σ (−b t)^r
            for i in 1..=order {
                let prev = c[i - 1];
                c[i] -= b * prev;
            }
        }
        c
    }
}

impl fmt::Display for BerezinianSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |v: &[Q]| {
            if v.is_empty() {
                "1".to_string()
            } else {
                v.iter()
                    .map(|a| {
                        let (sign, abs) = if a.is_negative() { ('-', -*a) } else { ('+', *a) };
                        if abs == Q::ONE {
                            format!("(1{sign}t)")
                        } else {
                            format!("(1{sign}{abs}t)")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("")
            }
        };
        write!(f, "{}/{}", part(&self.numerator), part(&self.denominator))
    }
}

/// Eigenvalue of `B_k(t)` on a tableau: `Π_{i≤k}(1+t·l_ki)` for `k ≤ m`,
/// otherwise `Π_{i≤m}(1+t·l_ki) / Π_{m<j≤k}(1+t·l_kj)`.
pub fn berezinian_eigenvalue(k: usize, t: &Tableau) -> Result<BerezinianSeries> {
    let s = t.shape();
    if k == 0 || k > s.total() {
        return Err(Error::Index(format!("row {k} not in {s}")));
    }
    let m = s.m();
    let num = (1..=k.min(m)).map(|i| t.l(k, i)).collect();
    let den = (m + 1..=k).map(|j| t.l(k, j)).collect();
    Ok(BerezinianSeries::new(num, den))
}

/// The Berezinian of the whole row tuple `(B₁,…,B_{m+n})`.
pub fn eigenvalue_tuple(t: &Tableau) -> Vec<BerezinianSeries> {
    (1..=t.shape().total()).map(|k| berezinian_eigenvalue(k, t).expect("row in range")).collect()
}

type Series = Vec<SparseMatrix>;

struct SeriesAlgebra {
    dim: usize,
    order: usize,
}

impl SeriesAlgebra {
    fn zero(&self) -> Series {
        vec![SparseMatrix::zeros(self.dim, self.dim); self.order + 1]
    }

    fn one(&self) -> Series {
        let mut s = self.zero();
        s[0] = SparseMatrix::identity(self.dim);
        s
    }

    fn mul(&self, a: &Series, b: &Series) -> Result<Series> {
        let mut r = self.zero();
        for (p, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (q, y) in b.iter().enumerate().take(self.order + 1 - p) {
                if y.is_zero() {
                    continue;
                }
                r[p + q] = r[p + q].add(&x.mul(y)?)?;
            }
        }
        Ok(r)
    }

    fn add_scaled(&self, a: &mut Series, b: &Series, c: Q) -> Result<()> {
        for (x, y) in a.iter_mut().zip(b) {
            *x = x.lin_comb(Q::ONE, y, c)?;
        }
        Ok(())
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, Q)> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, sign: Q, out: &mut Vec<(Vec<usize>, Q)>) {
        if rest.is_empty() {
            out.push((prefix.clone(), sign));
            return;
        }
        for idx in 0..rest.len() {
            let v = rest.remove(idx);
            prefix.push(v);
            // moving element idx to the front costs idx transpositions
            rec(prefix, rest, sign * Q::sign_power(idx as i64), out);
            prefix.pop();
            rest.insert(idx, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (1..=n).collect(), Q::ONE, &mut out);
    out
}

/// Coefficients of `B_k(t)` mod `t^{order+1}` as matrices on a finite module,
/// where `B_k` is the Berezinian of the subalgebra spanned by `E_ij`,
/// `i,j ≤ k`. Each inverse entry is a truncated geometric series.
pub fn berezinian_operator_truncated(module: &ModuleSpace, k: usize, order: usize) -> Result<Vec<SparseMatrix>> {
    let s: Shape = module.shape();
    if k == 0 || k > s.total() {
        return Err(Error::Index(format!("row {k} not in {s}")));
    }
    let elements = module.all_element_matrices()?;
    let dim = module.dim();
    let alg = SeriesAlgebra { dim, order };
    let m = s.m();
    let hat = |i: usize, j: usize| -> SparseMatrix {
        let e = &elements[&BasisElement { i, j }];
        if j > m {
            e.scale(-Q::ONE)
        } else {
            e.clone()
        }
    };
    // X = Ê − c on indices 1..=k
    let x_entry = |c: i64, a: usize, b: usize| -> Result<SparseMatrix> {
        let h = hat(a, b);
        if a == b {
            h.lin_comb(Q::ONE, &SparseMatrix::identity(dim), Q::int(-c))
        } else {
            Ok(h)
        }
    };
    let direct = |c: i64, i: usize, j: usize| -> Result<Series> {
        let mut sr = alg.zero();
        if i == j {
            sr[0] = SparseMatrix::identity(dim);
        }
        if order >= 1 {
            sr[1] = x_entry(c, i, j)?;
        }
        Ok(sr)
    };
    let mm = k.min(m);
    let nn = k - mm;
    let mut first = alg.zero();
    for (p, sg) in permutations(mm) {
        let mut term = alg.one();
        for a in 1..=mm {
            term = alg.mul(&term, &direct(a as i64 - 1, p[a - 1], a)?)?;
        }
        alg.add_scaled(&mut first, &term, sg)?;
    }
    // rows of (1 + tX)^{-1} = Σ (−t)^r X^r, cached per (c, i)
    let mut inverse_rows: HashMap<(i64, usize), Vec<Series>> = HashMap::new();
    let mut inverse_row = |c: i64, i: usize| -> Result<Vec<Series>> {
        if let Some(r) = inverse_rows.get(&(c, i)) {
            return Ok(r.clone());
        }
        let x: Vec<Vec<SparseMatrix>> =
            (1..=k).map(|a| (1..=k).map(|b| x_entry(c, a, b)).collect::<Result<_>>()).collect::<Result<_>>()?;
        let mut cur: Vec<SparseMatrix> =
            (1..=k).map(|a| if a == i { SparseMatrix::identity(dim) } else { SparseMatrix::zeros(dim, dim) }).collect();
        let mut row: Vec<Series> = (0..k).map(|_| alg.zero()).collect();
        for (b, entry) in row.iter_mut().enumerate() {
            entry[0] = cur[b].clone();
        }
        for r in 1..=order {
            let mut next = vec![SparseMatrix::zeros(dim, dim); k];
            for a in 0..k {
                if cur[a].is_zero() {
                    continue;
                }
                for b in 0..k {
                    next[b] = next[b].add(&cur[a].mul(&x[a][b])?)?;
                }
            }
            cur = next;
            let sg = Q::sign_power(r as i64);
            for (entry, m) in row.iter_mut().zip(&cur) {
                entry[r] = m.scale(sg);
            }
        }
        inverse_rows.insert((c, i), row.clone());
        Ok(row)
    };
    let mut second = alg.zero();
    for (p, sg) in permutations(nn) {
        let mut term = alg.one();
        for a in 1..=nn {
            let row = inverse_row(m as i64 - a as i64, m + a)?;
            term = alg.mul(&term, &row[m + p[a - 1] - 1])?;
        }
        alg.add_scaled(&mut second, &term, sg)?;
    }
    alg.mul(&first, &second)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form_and_expansion() {
        let b = BerezinianSeries::new(vec![Q::ONE, Q::int(2)], vec![Q::int(2), Q::ZERO]);
        assert_eq!(b, BerezinianSeries::new(vec![Q::ONE], vec![]));
        assert_eq!(b.expand(2), vec![Q::ONE, Q::ONE, Q::ZERO]);
        let g = BerezinianSeries::new(vec![], vec![Q::int(3)]);
        assert_eq!(g.expand(2), vec![Q::ONE, Q::int(-3), Q::int(9)]);
    }

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        let sum: Q = p.iter().map(|(_, s)| *s).sum();
        assert_eq!(sum, Q::ZERO);
        assert!(p.contains(&(vec![2, 1, 3], -Q::ONE)));
        assert!(p.contains(&(vec![2, 3, 1], Q::ONE)));
    }
}
