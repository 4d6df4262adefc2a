//! Raw action formulas: for a tableau, the list of shifted target tableaux
//! with their coefficient as an unevaluated numerator/denominator pair.

use crate::rational::Q;
use crate::tableau::Tableau;

/// One summand of an e/f action before the basis convention is applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTerm {
    pub target: Tableau,
    pub num: Q,
    pub den: Q,
}

impl RawTerm {
    /// The coefficient, or `None` when the denominator vanishes.
    pub fn coefficient(&self) -> Option<Q> {
        if self.den.is_zero() {
            None
        } else {
            Some(self.num / self.den)
        }
    }
}

fn prod(it: impl Iterator<Item = Q>) -> Q {
    it.product()
}

fn sign(exp: Q) -> Q {
    let e = exp.to_integer().expect("θ sums are integers");
    if e.rem_euclid(2) == 0 {
        Q::ONE
    } else {
        -Q::ONE
    }
}

/// The sign `(−1)^{θ_{k1}+…+θ_{k,i−1} + θ_{k−1,i+1}+…+θ_{k−1,m}}` of the
/// odd-level branches.
fn odd_sign(t: &Tableau, k: usize, i: usize, m: usize) -> Q {
    let s: Q = (1..i).map(|j| t.th(k, j)).sum::<Q>() + (i + 1..=m).map(|j| t.th(k - 1, j)).sum::<Q>();
    sign(s)
}

/// Summands of `e_k` on `t`. Terms whose θ-prefactor vanishes are omitted.
pub fn raw_e(t: &Tableau, k: usize) -> Vec<RawTerm> {
    let m = t.shape().m();
    let l = |a: usize, b: usize| t.l(a, b);
    let one = Q::ONE;
    let mut out = Vec::new();
    let mut push = |i: usize, num: Q, den: Q| out.push(RawTerm { target: t.shifted(k, i, 1), num, den });
    if k < m {
        for i in 1..=k {
            let li = l(k, i);
            let num = -prod((1..=k + 1).map(|j| l(k + 1, j) - li));
            let den = prod((1..=k).filter(|&j| j != i).map(|j| l(k, j) - li));
            push(i, num, den);
        }
    } else if k == m {
        for i in 1..=m {
            let th = t.th(m, i);
            if th.is_zero() {
                continue;
            }
            let li = l(m, i);
            let sg = sign(Q::int(i as i64 - 1) + (1..i).map(|j| t.th(m, j)).sum::<Q>());
            let num = th * sg * prod((1..i).map(|j| l(m, j) - li - one));
            let den = prod((i + 1..=m).map(|j| l(m, j) - li))
                * prod((1..=m).filter(|&j| j != i).map(|j| l(m + 1, j) - li - one));
            push(i, num, den);
        }
    } else {
        for i in 1..=m {
            let c = t.th(k, i) * (one - t.th(k - 1, i));
            if c.is_zero() {
                continue;
            }
            let li = l(k, i);
            let others = || (1..=m).filter(move |&j| j != i);
            let num = c * odd_sign(t, k, i, m) * prod(others().map(|j| l(k, j) - li - one));
            let den = prod(others().map(|j| l(k + 1, j) - li - one));
            push(i, num, den);
        }
        for i in m + 1..=k {
            let li = l(k, i);
            let num = -prod((1..=m).map(|j| (l(k, j) - li) * (l(k, j) - li + one)))
                * prod((m + 1..=k + 1).map(|j| l(k + 1, j) - li));
            let den = prod((1..=m).map(|j| (l(k + 1, j) - li) * (l(k - 1, j) - li + one)))
                * prod((m + 1..=k).filter(|&j| j != i).map(|j| l(k, j) - li));
            push(i, num, den);
        }
    }
    out
}

/// Summands of `f_k` on `t`. Terms whose θ-prefactor vanishes are omitted.
pub fn raw_f(t: &Tableau, k: usize) -> Vec<RawTerm> {
    let m = t.shape().m();
    let l = |a: usize, b: usize| t.l(a, b);
    let one = Q::ONE;
    let mut out = Vec::new();
    let mut push = |i: usize, num: Q, den: Q| out.push(RawTerm { target: t.shifted(k, i, -1), num, den });
    if k < m {
        for i in 1..=k {
            let li = l(k, i);
            let num = prod((1..k).map(|j| l(k - 1, j) - li));
            let den = prod((1..=k).filter(|&j| j != i).map(|j| l(k, j) - li));
            push(i, num, den);
        }
    } else if k == m {
        for i in 1..=m {
            let c = one - t.th(m, i);
            if c.is_zero() {
                continue;
            }
            let li = l(m, i);
            let sg = sign(Q::int(i as i64 - 1) + (1..i).map(|j| t.th(m, j)).sum::<Q>());
            let num = c
                * sg
                * (li - l(m + 1, m + 1))
                * prod((i + 1..=m).map(|j| l(m, j) - li + one))
                * prod((1..m).map(|j| l(m - 1, j) - li));
            let den = prod((1..i).map(|j| l(m, j) - li));
            push(i, num, den);
        }
    } else {
        for i in 1..=m {
            let c = t.th(k - 1, i) * (one - t.th(k, i));
            if c.is_zero() {
                continue;
            }
            let li = l(k, i);
            let others = || (1..=m).filter(move |&j| j != i);
            let num = c
                * odd_sign(t, k, i, m)
                * prod(others().map(|j| l(k, j) - li + one))
                * prod((m + 1..=k + 1).map(|j| l(k + 1, j) - li))
                * prod((m + 1..k).map(|j| l(k - 1, j) - li + one));
            let den = prod(others().map(|j| l(k - 1, j) - li + one))
                * prod((m + 1..=k).map(|j| (l(k, j) - li) * (l(k, j) - li + one)));
            push(i, num, den);
        }
        for i in m + 1..=k {
            let li = l(k, i);
            let num = prod((m + 1..k).map(|j| l(k - 1, j) - li));
            let den = prod((m + 1..=k).filter(|&j| j != i).map(|j| l(k, j) - li));
            push(i, num, den);
        }
    }
    out
}
