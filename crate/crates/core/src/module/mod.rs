//! The tableau module `V_C([l⁰])`: membership, basis enumeration, the
//! generator action, composite matrix units and sparse matrices.

pub mod action;
pub mod berezinian;
pub mod normalization;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::Generator;
use crate::rational::Q;
use crate::relations::{
    is_c_covariant, is_covariant_admissible, satisfies_with, Convention, RelationSet, SideOf, SuperRelationSet,
};
use crate::sparse::{SparseMatrix, SparseVector};
use crate::superalgebra::{BasisElement, Shape};
use crate::tableau::Tableau;

pub use action::{raw_e, raw_f, RawTerm};
pub use berezinian::{berezinian_eigenvalue, berezinian_operator_truncated, eigenvalue_tuple, BerezinianSeries};
pub use normalization::{factorial, normalization_a, normalization_a_k};

/// Which family of modules, and so which membership predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    QuasiTypical,
    QuasiCovariant,
}

/// A vector of the module: tableaux with rational coefficients.
pub type TabVector = SparseVector<Tableau>;

/// One sign constraint `±(l_a − l_b) ≥ gap` between tableau entries.
#[derive(Clone, Debug)]
struct SignConstraint {
    from: (usize, usize),
    to: (usize, usize),
    lower: bool,
    gap: i64,
}

/// The membership predicate of `B_C([l⁰])`, with every condition that is
/// constant on the integer orbit of the seed decided once.
#[derive(Clone, Debug)]
struct Membership {
    shape: Shape,
    seed: Tableau,
    relations: SuperRelationSet,
    mode: Mode,
    constraints: Vec<SignConstraint>,
}

impl Membership {
    fn new(seed: &Tableau, relations: &SuperRelationSet, mode: Mode) -> Result<Membership> {
        let shape = seed.shape();
        if shape != relations.shape() {
            return Err(Error::Shape(format!("seed of {shape} against relations of {}", relations.shape())));
        }
        let seed_ok = match mode {
            Mode::QuasiTypical => {
                if !relations.is_admissible() {
                    return Err(Error::Precondition(format!("relation pair {relations} is not admissible")));
                }
                relations.satisfied_by(seed)
            }
            Mode::QuasiCovariant => {
                if !is_covariant_admissible(relations) {
                    return Err(Error::Precondition(format!(
                        "relation pair {relations} is not covariant admissible"
                    )));
                }
                is_c_covariant(seed, relations)?
            }
        };
        if !seed_ok {
            return Err(Error::Precondition(format!("seed {seed} does not satisfy {relations}")));
        }
        let mut constraints = Vec::new();
        for side in [SideOf::Even, SideOf::Odd] {
            let c = relations.side(side);
            let conv = if side == SideOf::Even { Convention::Even } else { Convention::Odd };
            for r in c.iter() {
                let (lower, gap) = conv.bound(c.class_of(r));
                constraints.push(SignConstraint {
                    from: relations.position(side, r.from),
                    to: relations.position(side, r.to),
                    lower,
                    gap,
                });
            }
        }
        Ok(Membership { shape, seed: seed.clone(), relations: relations.clone(), mode, constraints })
    }

    /// Membership for a tableau already known to lie in the integer orbit
    /// of the seed with the same top row.
    fn in_orbit(&self, t: &Tableau) -> bool {
        match self.mode {
            Mode::QuasiCovariant => is_c_covariant(t, &self.relations).unwrap_or(false),
            Mode::QuasiTypical => {
                for c in &self.constraints {
                    let d = t.l(c.from.0, c.from.1) - t.l(c.to.0, c.to.1);
                    let ok = if c.lower { d >= c.gap } else { d <= -c.gap };
                    if !ok {
                        return false;
                    }
                }
                let (m, tot) = (self.shape.m(), self.shape.total());
                for k in m..tot {
                    for i in 1..=m {
                        let th = t.th(k, i);
                        if th != 0 && th != 1 {
                            return false;
                        }
                    }
                }
                for k in m + 1..tot {
                    for i in 1..=m {
                        let li = t.l(k, i);
                        if (i + 1..=k).any(|j| t.l(k, j) == li) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    fn contains(&self, t: &Tableau) -> bool {
        t.shape() == self.shape
            && t.top_row() == self.seed.top_row()
            && t.integer_offset(&self.seed).is_some()
            && self.in_orbit(t)
    }
}

/// The module `V_C([l⁰])` with an enumerated basis: complete when finite,
/// otherwise the ball explored before a cap or radius was reached.
#[derive(Clone, Debug)]
pub struct ModuleSpace {
    membership: Membership,
    basis: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    finite: bool,
    radius: Option<usize>,
}

/// Unit moves used to explore the orbit: every ±δ_{ki}, plus ±Σ_{r=a}^{b} δ_{ri}
/// on even columns across odd levels, which keep θ-values in {0,1}.
fn moves(shape: Shape) -> Vec<Vec<(usize, usize, i64)>> {
    let (m, tot) = (shape.m(), shape.total());
    let mut out = Vec::new();
    for k in 1..tot {
        for i in 1..=k {
            out.push(vec![(k, i, 1)]);
            out.push(vec![(k, i, -1)]);
        }
    }
    for i in 1..=m {
        for a in m.max(i)..tot {
            for b in a + 1..tot {
                for s in [1, -1] {
                    out.push((a..=b).map(|r| (r, i, s)).collect());
                }
            }
        }
    }
    out
}

fn apply_move(t: &Tableau, mv: &[(usize, usize, i64)]) -> Tableau {
    let mut u = t.clone();
    for &(k, i, d) in mv {
        u = u.shifted(k, i, d);
    }
    u
}

/// Breadth-first closure of the seed under the orbit moves, filtered by
/// membership. Stops at `cap` tableaux or at `radius` moves from the seed.
fn explore(mem: &Membership, cap: usize, radius: Option<usize>) -> (Vec<Tableau>, bool) {
    let mvs = moves(mem.shape);
    let mut seen: HashSet<Tableau> = HashSet::new();
    let mut found = vec![mem.seed.clone()];
    seen.insert(mem.seed.clone());
    let mut queue = VecDeque::from([(mem.seed.clone(), 0usize)]);
    let mut complete = true;
    while let Some((t, d)) = queue.pop_front() {
        let mut frontier = Vec::new();
        for mv in &mvs {
            let u = apply_move(&t, mv);
            if seen.contains(&u) || !mem.in_orbit(&u) {
                continue;
            }
            frontier.push(u);
        }
        if radius.is_some_and(|r| d >= r) {
            if !frontier.is_empty() {
                complete = false;
            }
            continue;
        }
        for u in frontier {
            if seen.contains(&u) {
                continue;
            }
            if found.len() >= cap {
                complete = false;
                break;
            }
            seen.insert(u.clone());
            found.push(u.clone());
            queue.push_back((u, d + 1));
        }
        if found.len() >= cap && !complete {
            break;
        }
    }
    found.sort();
    (found, complete)
}

/// Enumerates `B_C([l⁰])` up to `cap` tableaux; the flag is true when the
/// closure completed.
pub fn enumerate_basis(seed: &Tableau, c: &SuperRelationSet, mode: Mode, cap: usize) -> Result<(Vec<Tableau>, bool)> {
    if cap == 0 {
        return Err(Error::Precondition("cap must be positive".into()));
    }
    let mem = Membership::new(seed, c, mode)?;
    Ok(explore(&mem, cap, None))
}

impl ModuleSpace {
    /// Enumerates the basis up to `cap` tableaux.
    pub fn build(seed: &Tableau, relations: &SuperRelationSet, mode: Mode, cap: usize) -> Result<ModuleSpace> {
        if cap == 0 {
            return Err(Error::Precondition("cap must be positive".into()));
        }
        let membership = Membership::new(seed, relations, mode)?;
        let (basis, finite) = explore(&membership, cap, None);
        Ok(ModuleSpace::assemble(membership, basis, finite, None))
    }

    /// The tableaux within `radius` moves of the seed; `finite` is set when
    /// the whole module fits in the ball.
    pub fn ball(
        seed: &Tableau,
        relations: &SuperRelationSet,
        mode: Mode,
        radius: usize,
        cap: usize,
    ) -> Result<ModuleSpace> {
        let membership = Membership::new(seed, relations, mode)?;
        let (basis, finite) = explore(&membership, cap.max(1), Some(radius));
        Ok(ModuleSpace::assemble(membership, basis, finite, if finite { None } else { Some(radius) }))
    }

    /// A module over an explicit basis, checked against the predicate.
    /// `radius` marks a sampled ball of an infinite module.
    pub fn from_basis(
        seed: &Tableau,
        relations: &SuperRelationSet,
        mode: Mode,
        basis: Vec<Tableau>,
        finite: bool,
        radius: Option<usize>,
    ) -> Result<ModuleSpace> {
        let membership = Membership::new(seed, relations, mode)?;
        if let Some(t) = basis.iter().find(|t| !membership.contains(t)) {
            return Err(Error::Precondition(format!("{t} is not a basis tableau of this module")));
        }
        let mut basis = basis;
        basis.sort();
        basis.dedup();
        let radius = if finite { None } else { radius };
        Ok(ModuleSpace::assemble(membership, basis, finite, radius))
    }

    fn assemble(membership: Membership, basis: Vec<Tableau>, finite: bool, radius: Option<usize>) -> ModuleSpace {
        let index = basis.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        ModuleSpace { membership, basis, index, finite, radius }
    }

    pub fn shape(&self) -> Shape {
        self.membership.shape
    }

    pub fn seed(&self) -> &Tableau {
        &self.membership.seed
    }

    pub fn relations(&self) -> &SuperRelationSet {
        &self.membership.relations
    }

    pub fn mode(&self) -> Mode {
        self.membership.mode
    }

    /// Basis tableaux in canonical order.
    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    /// The exploration radius when the basis is a truncated ball.
    pub fn radius(&self) -> Option<usize> {
        self.radius
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Whether `t` lies in `B_C([l⁰])`, enumerated or not.
    pub fn contains(&self, t: &Tableau) -> bool {
        self.index.contains_key(t) || self.membership.contains(t)
    }

    fn member(&self, t: &Tableau) -> bool {
        self.index.contains_key(t) || (!self.finite && self.membership.in_orbit(t))
    }

    fn finish(&self, terms: Vec<RawTerm>, what: &str, t: &Tableau) -> Result<TabVector> {
        let mut out = TabVector::new();
        for term in terms {
            if !self.member(&term.target) {
                continue;
            }
            let c = term.coefficient().ok_or_else(|| {
                Error::ZeroDenominator(format!("{what} on {t}: vanishing denominator for basis target {}", term.target))
            })?;
            out.add_term(term.target, c);
        }
        Ok(out)
    }

    /// `e_k` on a basis tableau; targets outside the basis are dropped.
    pub fn act_e(&self, k: usize, t: &Tableau) -> Result<TabVector> {
        self.check_gen(Generator::E(k))?;
        self.finish(raw_e(t, k), &format!("e{k}"), t)
    }

    pub fn act_f(&self, k: usize, t: &Tableau) -> Result<TabVector> {
        self.check_gen(Generator::F(k))?;
        self.finish(raw_f(t, k), &format!("f{k}"), t)
    }

    pub fn act_h(&self, k: usize, t: &Tableau) -> Result<TabVector> {
        let c = t.h_eigenvalue(k)?;
        Ok([(t.clone(), c)].into_iter().collect())
    }

    fn check_gen(&self, g: Generator) -> Result<()> {
        g.check(self.shape())
    }

    /// A generator on a basis tableau.
    pub fn act(&self, g: Generator, t: &Tableau) -> Result<TabVector> {
        match g {
            Generator::E(k) => self.act_e(k, t),
            Generator::F(k) => self.act_f(k, t),
            Generator::H(k) => self.act_h(k, t),
        }
    }

    /// A generator on a vector.
    pub fn act_vector(&self, g: Generator, v: &TabVector) -> Result<TabVector> {
        let mut out = TabVector::new();
        for (t, c) in v.iter() {
            out.add_scaled(&self.act(g, t)?, *c);
        }
        Ok(out)
    }

    /// Every raw summand of a generator with its fate under the basis
    /// convention: `(term, member)`.
    pub fn trace(&self, g: Generator, t: &Tableau) -> Result<Vec<(RawTerm, bool)>> {
        self.check_gen(g)?;
        let terms = match g {
            Generator::E(k) => raw_e(t, k),
            Generator::F(k) => raw_f(t, k),
            Generator::H(_) => Vec::new(),
        };
        Ok(terms.into_iter().map(|r| {
            let m = self.member(&r.target);
            (r, m)
        }).collect())
    }

    /// `E_ij` on a vector, through `E_ij = [E_{i,j∓1}, E_{j∓1,j}]` for
    /// non-adjacent indices.
    pub fn act_basis_element_vector(&self, e: BasisElement, v: &TabVector) -> Result<TabVector> {
        let s = self.shape();
        s.check_index(e.i)?;
        s.check_index(e.j)?;
        let (i, j) = (e.i, e.j);
        if i == j {
            return self.act_vector(Generator::H(i), v);
        }
        if j == i + 1 {
            return self.act_vector(Generator::E(i), v);
        }
        if i == j + 1 {
            return self.act_vector(Generator::F(j), v);
        }
        let p = if i < j { j - 1 } else { j + 1 };
        let a = BasisElement { i, j: p };
        let b = BasisElement { i: p, j };
        let sign = if a.parity(s) * b.parity(s) == 1 { Q::ONE } else { -Q::ONE };
        let bv = self.act_basis_element_vector(b, v)?;
        let mut out = self.act_basis_element_vector(a, &bv)?;
        let av = self.act_basis_element_vector(a, v)?;
        out.add_scaled(&self.act_basis_element_vector(b, &av)?, sign);
        Ok(out)
    }

    pub fn act_basis_element(&self, e: BasisElement, t: &Tableau) -> Result<TabVector> {
        self.act_basis_element_vector(e, &TabVector::unit(t.clone()))
    }

    fn require_finite(&self) -> Result<()> {
        if self.finite {
            Ok(())
        } else {
            Err(Error::Infinite(format!("module of {} has an infinite basis", self.seed())))
        }
    }

    fn columns_of<F>(&self, mut f: F) -> Result<SparseMatrix>
    where
        F: FnMut(&Tableau) -> Result<TabVector>,
    {
        self.require_finite()?;
        let mut cols = Vec::with_capacity(self.dim());
        for t in &self.basis {
            let img = f(t)?;
            let mut col = BTreeMap::new();
            for (u, c) in img.iter() {
                let r = self
                    .index_of(u)
                    .ok_or_else(|| Error::Precondition(format!("image {u} of {t} left the basis")))?;
                col.insert(r, *c);
            }
            cols.push(col);
        }
        Ok(SparseMatrix::from_columns(self.dim(), cols))
    }

    /// Matrix of a generator in the canonical basis order.
    pub fn generator_matrix(&self, g: Generator) -> Result<SparseMatrix> {
        self.check_gen(g)?;
        self.columns_of(|t| self.act(g, t))
    }

    /// Matrices of all generators.
    pub fn generator_matrices(&self) -> Result<HashMap<Generator, SparseMatrix>> {
        Generator::all(self.shape()).into_iter().map(|g| Ok((g, self.generator_matrix(g)?))).collect()
    }

    /// Matrix of `E_ij`, assembled from generator matrices by the same
    /// bracket recursion as [`Self::act_basis_element`].
    pub fn matrix_of(&self, e: BasisElement) -> Result<SparseMatrix> {
        let gens = self.generator_matrices()?;
        let mut memo = HashMap::new();
        element_matrix(self.shape(), e, &gens, &mut memo)
    }

    /// Matrices of every `E_ij`.
    pub fn all_element_matrices(&self) -> Result<HashMap<BasisElement, SparseMatrix>> {
        let gens = self.generator_matrices()?;
        let mut memo = HashMap::new();
        for e in BasisElement::all(self.shape()) {
            element_matrix(self.shape(), e, &gens, &mut memo)?;
        }
        Ok(memo)
    }
}

/// `E_ij` from generator matrices with memoization.
pub fn element_matrix(
    shape: Shape,
    e: BasisElement,
    gens: &HashMap<Generator, SparseMatrix>,
    memo: &mut HashMap<BasisElement, SparseMatrix>,
) -> Result<SparseMatrix> {
    if let Some(m) = memo.get(&e) {
        return Ok(m.clone());
    }
    shape.check_index(e.i)?;
    shape.check_index(e.j)?;
    let (i, j) = (e.i, e.j);
    let gen = |g: Generator| gens.get(&g).cloned().ok_or_else(|| Error::Index(format!("no matrix for {g}")));
    let m = if i == j {
        gen(Generator::H(i))?
    } else if j == i + 1 {
        gen(Generator::E(i))?
    } else if i == j + 1 {
        gen(Generator::F(j))?
    } else {
        let p = if i < j { j - 1 } else { j + 1 };
        let a = BasisElement { i, j: p };
        let b = BasisElement { i: p, j };
        let ma = element_matrix(shape, a, gens, memo)?;
        let mb = element_matrix(shape, b, gens, memo)?;
        ma.super_commutator(&mb, a.parity(shape), b.parity(shape))?
    };
    memo.insert(e, m.clone());
    Ok(m)
}

/// Whether `t` satisfies one triangle of `c` with the super conventions;
/// exposed for diagnostics.
pub fn satisfies_side(t: &Tableau, c: &SuperRelationSet, side: SideOf) -> bool {
    let set: &RelationSet = c.side(side);
    let conv = if side == SideOf::Even { Convention::Even } else { Convention::Odd };
    satisfies_with(set, conv, |v| {
        let (k, i) = c.position(side, v);
        t.l(k, i)
    })
}
