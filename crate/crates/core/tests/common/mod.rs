//! Shared fixtures for the integration tests: weight enumeration, module
//! builders, random modules and an independent covariant basis oracle.

#![allow(dead_code)]

use rand::Rng;

use glmn::module::{Mode, ModuleSpace};
use glmn::relations::{random_consistent_super_admissible, random_seed_tableau, SuperRelationSet};
use glmn::superalgebra::{is_dominant, is_essentially_typical, Shape, Weight};
use glmn::tableau::Tableau;
use glmn::Q;

pub const SHAPES: [(usize, usize); 4] = [(1, 1), (1, 2), (2, 1), (2, 2)];

pub fn shape(m: usize, n: usize) -> Shape {
    Shape::new(m, n).unwrap()
}

/// Every integer vector of length `len` with entries in `-bound..=bound`.
pub fn int_vectors(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn dominant_integral_weights(s: Shape, bound: i64) -> Vec<Weight> {
    int_vectors(s.total(), -bound, bound)
        .into_iter()
        .map(|v| Weight::from_ints(s, &v).unwrap())
        .filter(is_dominant)
        .collect()
}

pub fn essentially_typical_weights(s: Shape, bound: i64) -> Vec<Weight> {
    dominant_integral_weights(s, bound).into_iter().filter(is_essentially_typical).collect()
}

pub fn standard_module(w: &Weight, cap: usize) -> ModuleSpace {
    let s = w.shape();
    ModuleSpace::build(&Tableau::highest(w), &SuperRelationSet::standard(s), Mode::QuasiTypical, cap).unwrap()
}

pub fn module_of(m: usize, n: usize, lam: &[i64]) -> ModuleSpace {
    standard_module(&Weight::from_ints(shape(m, n), lam).unwrap(), 5000)
}

/// A module over a random consistent admissible pair and a random rational
/// seed; infinite modules are cut to the ball of `radius` around the seed.
pub fn random_module<R: Rng>(s: Shape, radius: usize, rng: &mut R) -> ModuleSpace {
    loop {
        let c = random_consistent_super_admissible(s, 4, rng);
        let Some(seed) = random_seed_tableau(&c, 3000, rng) else { continue };
        let m = ModuleSpace::build(&seed, &c, Mode::QuasiTypical, 400).unwrap();
        if m.is_finite() {
            return m;
        }
        return ModuleSpace::ball(&seed, &c, Mode::QuasiTypical, radius, 20_000).unwrap();
    }
}

/// Dominant weights with nonnegative entries meeting the hook condition
/// `λ_m ≥ #{j > m : λ_j > 0}`, the highest weights of covariant tensor
/// modules.
pub fn covariant_weights(s: Shape, bound: i64) -> Vec<Weight> {
    int_vectors(s.total(), 0, bound)
        .into_iter()
        .map(|v| Weight::from_ints(s, &v).unwrap())
        .filter(|w| {
            let e = w.entries();
            let positive_odd = e[s.m()..].iter().filter(|x| **x > Q::ZERO).count() as i64;
            is_dominant(w) && e[s.m() - 1] >= Q::int(positive_odd)
        })
        .collect()
}

/// The covariant basis by brute force: every integer tableau with the given
/// top row meeting the six basis conditions, written out directly on
/// λ-entries.
pub fn covariant_oracle_basis(w: &Weight) -> Vec<Tableau> {
    let s = w.shape();
    let (m, tot) = (s.m(), s.total());
    let top: Vec<i64> = w.entries().iter().map(|q| q.to_integer().unwrap()).collect();
    let lo = top.iter().min().unwrap() - s.n() as i64 - 1;
    let hi = top.iter().max().unwrap() + 1;
    let free = tot * (tot - 1) / 2;
    let mut out = Vec::new();
    for v in int_vectors(free, lo, hi) {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        let mut it = v.into_iter();
        for k in 1..tot {
            rows.push((0..k).map(|_| it.next().unwrap()).collect());
        }
        rows.push(top.clone());
        let lam = |k: usize, i: usize| rows[k - 1][i - 1];
        let mut ok = true;
        // θ ∈ {0, 1} on the mixed columns
        for k in m + 1..=tot {
            for i in 1..=m {
                let th = lam(k, i) - lam(k - 1, i);
                ok &= th == 0 || th == 1;
            }
        }
        // λ_km ≥ #{i : λ_ki > 0, m < i ≤ k}
        for k in m + 1..=tot {
            let count = (m + 1..=k).filter(|&i| lam(k, i) > 0).count() as i64;
            ok &= lam(k, m) >= count;
        }
        // λ_{m+1,m} = 0 forces θ_mm = 0
        if lam(m + 1, m) == 0 {
            ok &= lam(m + 1, m) == lam(m, m);
        }
        // even columns decrease along the odd rows
        for k in m + 1..tot {
            for i in 1..m {
                ok &= lam(k, i) >= lam(k, i + 1);
            }
        }
        // betweenness inside each triangle
        for k in 1..tot {
            for i in 1..=k {
                let even = k < m;
                let odd = i > m;
                if even || odd {
                    ok &= lam(k + 1, i) >= lam(k, i) && lam(k, i) >= lam(k + 1, i + 1);
                }
            }
        }
        if ok {
            let q: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| Q::int(x)).collect()).collect();
            out.push(Tableau::from_rows(s, q).unwrap());
        }
    }
    out.sort();
    out
}

pub fn covariant_module(w: &Weight) -> glmn::Result<ModuleSpace> {
    let s = w.shape();
    ModuleSpace::build(&Tableau::highest(w), &SuperRelationSet::standard(s), Mode::QuasiCovariant, 5000)
}
