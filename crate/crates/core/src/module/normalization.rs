//! The normalization factor `a(Λ) = Π_k a_k(Λ)` relating this basis to the
//! unnormalized one, and the generalized factorial it uses.

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::tableau::Tableau;

/// `a!` for integers: `1·2⋯a` for `a > 0`, `1` at `0` and `±1`, and
/// `1/((a+1)(a+2)⋯(−1))` for `a < 0`.
pub fn factorial(a: Q) -> Result<Q> {
    let n = a
        .to_integer()
        .ok_or_else(|| Error::Precondition(format!("factorial of non-integer {a}")))?;
    let overflow = || Error::Precondition(format!("factorial of {n} overflows"));
    let mut p: i64 = 1;
    if n > 0 {
        for v in 2..=n {
            p = p.checked_mul(v).ok_or_else(overflow)?;
        }
        Ok(Q::int(p))
    } else {
        for v in n + 1..=-1 {
            p = p.checked_mul(v).ok_or_else(overflow)?;
        }
        Ok(Q::new(1, p))
    }
}

fn ratio(num: Q, den: Q) -> Result<Q> {
    Ok(factorial(num)? / factorial(den)?)
}

/// `a_k(Λ)` for one row.
pub fn normalization_a_k(t: &Tableau, k: usize) -> Result<Q> {
    let s = t.shape();
    if k == 0 || k > s.total() {
        return Err(Error::Index(format!("row {k} not in {s}")));
    }
    let m = s.m();
    let l = |a: usize, b: usize| t.l(a, b);
    let one = Q::ONE;
    let mut acc = Q::ONE;
    if k <= m {
        for j in 1..k {
            for i in 1..=j {
                acc *= ratio(l(k, i) - l(k - 1, j), l(k - 1, i) - l(k - 1, j))?;
            }
        }
        for j in 1..=k {
            for i in 1..j {
                acc *= ratio(l(k, i) - l(k, j) - one, l(k - 1, i) - l(k, j) - one)?;
            }
        }
    } else {
        let first = (1..=m).flat_map(|j| (1..=j).map(move |i| (i, j)));
        let second = (m + 1..k).flat_map(|j| (m + 1..=j).map(move |i| (i, j)));
        for (i, j) in first.chain(second) {
            acc *= ratio(l(k - 1, j) - l(k, i), l(k - 1, j) - l(k - 1, i))?;
        }
        let first = (1..=m).flat_map(|j| (1..j).map(move |i| (i, j)));
        let second = (m + 1..=k).flat_map(|j| (m + 1..j).map(move |i| (i, j)));
        for (i, j) in first.chain(second) {
            acc *= ratio(l(k, j) - l(k, i) - one, l(k, j) - l(k - 1, i) - one)?;
        }
    }
    Ok(acc)
}

/// `a(Λ) = Π_{k=1}^{m+n} a_k(Λ)`.
pub fn normalization_a(t: &Tableau) -> Result<Q> {
    (1..=t.shape().total()).map(|k| normalization_a_k(t, k)).product()
}
