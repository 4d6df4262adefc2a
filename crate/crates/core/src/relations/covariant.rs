//! Covariant admissible pairs and 𝒞-covariant tableaux.

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::tableau::Tableau;

use super::superset::SuperRelationSet;
use super::{Relation, Vertex};

/// The smallest absolute `p`, `m+1 ≤ p ≤ m+n`, for which the odd triangle
/// contains the diagonal chain `((i,i);(i+1,i+1))`, `p ≤ i ≤ m+n−1`, with
/// no arrow between `(p,p)` and row `p−1`.
pub fn covariant_chain_start(c: &SuperRelationSet) -> Option<usize> {
    (1..=c.shape().n()).find(|&p| chain_at(c, p)).map(|p| p + c.shape().m())
}

/// Relative `p` together with the component saturation check.
fn chain_component(c: &SuperRelationSet) -> Option<(usize, usize)> {
    let m = c.shape().m();
    let n = c.shape().n();
    let c2 = c.c2();
    let labels = c2.component_labels();
    (1..=n).find_map(|p| {
        if chain_at(c, p) {
            let label = labels[&Vertex::new(p, p)];
            let saturated = labels.iter().all(|(v, &l)| {
                l != label || (v.col..=v.row).all(|j| labels[&Vertex::new(v.row, j)] == label)
            });
            saturated.then_some((p + m, label))
        } else {
            None
        }
    })
}

fn chain_at(c: &SuperRelationSet, p: usize) -> bool {
    let n = c.shape().n();
    let c2 = c.c2();
    let chain = (p..n).all(|i| c2.contains(&Relation::new((i, i), (i + 1, i + 1))));
    let pp = Vertex::new(p, p);
    let detached =
        p == 1 || c2.iter().all(|r| !(r.touches(pp) && (r.from.row + 1 == p || r.to.row + 1 == p)));
    chain && detached
}

/// Admissible, with a detached diagonal chain whose component is closed
/// to the right within each row.
pub fn is_covariant_admissible(c: &SuperRelationSet) -> bool {
    c.is_admissible() && chain_component(c).is_some()
}

/// The covariant conditions for a tableau, plus the even-pair
/// nonvanishing `l_ki ≠ l_kj`, `i < j ≤ m`, in rows m+1..m+n−1.
///
/// The integrality clause compares `l_{m+n,m}` with `l_{m+n,m+n}`.
pub fn is_c_covariant(t: &Tableau, c: &SuperRelationSet) -> Result<bool> {
    if t.shape() != c.shape() {
        return Err(Error::Shape(format!("tableau of {} against relations of {}", t.shape(), c.shape())));
    }
    let Some((_, label)) = chain_component(c).filter(|_| c.is_admissible()) else {
        return Err(Error::Precondition("relation set is not covariant admissible".into()));
    };
    let (m, n, tot) = (c.shape().m(), c.shape().n(), c.shape().total());
    // (1) and (2) via the pointwise checks, minus the mixed nonvanishing
    match c.pointwise_failure(t) {
        None | Some("mixed") => {}
        Some(_) => return Ok(false),
    }
    for k in m + 1..tot {
        for i in 1..=m {
            for j in i + 1..=m {
                if t.l(k, i) == t.l(k, j) {
                    return Ok(false);
                }
            }
        }
    }
    // (3)
    let top = t.l(tot, tot);
    if !(t.l(tot, m) - top).is_integer() {
        return Ok(false);
    }
    let labels = c.c2().component_labels();
    for k in m + 1..=tot {
        for j in m + 1..=k {
            if labels[&Vertex::new(k - m, j - m)] == label {
                continue;
            }
            if (1..=m).any(|i| (t.l(k, i) - t.l(k, j)).is_integer()) {
                return Ok(false);
            }
        }
    }
    // (4)
    if t.l(tot, m) - top <= Q::ZERO {
        for k in m + 1..=tot {
            let pk = (m + 1..=k).find(|&q| t.l(k, q) - top == Q::int(q as i64 - tot as i64));
            let bound = match pk {
                Some(q) => top + Q::int(q as i64 - tot as i64),
                None => top + Q::int(k as i64 + 1 - tot as i64),
            };
            if t.l(k, m) < bound {
                return Ok(false);
            }
        }
    }
    // (5)
    if t.l(m + 1, m) - top == Q::int(1 - n as i64) && t.th(m, m) != 0 {
        return Ok(false);
    }
    Ok(true)
}
