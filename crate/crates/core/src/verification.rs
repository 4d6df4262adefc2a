//! Executable checks on constructed modules: the defining relations,
//! irreducibility against a linear-algebra oracle, Gelfand-Tsetlin
//! separation, Kac-module structure, Berezinian eigenvalues and the
//! enveloping-algebra identities for gl(1|1) and gl(1|2).
//!
//! Every check returns a [`VerificationReport`]; a failing report always
//! carries a witness.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::expr::{presentation_relations, Generator, LieWord, MatrixEvaluator};
use crate::linalg::{joint_kernel_on, span_closure_dim};
use crate::module::{
    berezinian_eigenvalue, berezinian_operator_truncated, eigenvalue_tuple, BerezinianSeries, Mode, ModuleSpace,
    TabVector,
};
use crate::rational::Q;
use crate::relations::SuperRelationSet;
use crate::sparse::SparseMatrix;
use crate::superalgebra::{is_dominant, is_essentially_typical, BasisElement, Shape, Weight};
use crate::tableau::Tableau;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

/// One line of a verification run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub shape: Shape,
    pub module: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl VerificationReport {
    fn new(check: &str, module: &ModuleSpace) -> VerificationReport {
        VerificationReport {
            check: check.to_string(),
            shape: module.shape(),
            module: describe(module),
            status: Status::Pass,
            witness: None,
            details: Map::new(),
            timing_ms: None,
        }
    }

    fn fail(mut self, witness: Value) -> VerificationReport {
        self.status = Status::Fail;
        self.witness = Some(witness);
        self
    }

    fn detail(mut self, key: &str, v: impl Serialize) -> VerificationReport {
        self.details.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One JSON line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// A short descriptor: shape, mode, seed and relation pair.
pub fn describe(module: &ModuleSpace) -> String {
    let mode = match module.mode() {
        Mode::QuasiTypical => "quasi-typical",
        Mode::QuasiCovariant => "quasi-covariant",
    };
    format!("{} {mode} seed {} relations {}", module.shape(), module.seed(), module.relations())
}

fn vector_json(v: &TabVector) -> Value {
    Value::Array(v.iter().map(|(t, c)| json!({"tableau": t, "coefficient": c})).collect())
}

/// Tableaux to test: the whole basis, or a seeded random subset of at most
/// `limit` tableaux (always containing the seed).
pub fn sample_basis(module: &ModuleSpace, limit: usize, seed: u64) -> Vec<Tableau> {
    if module.dim() <= limit {
        return module.basis().to_vec();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<Tableau> = module.basis().choose_multiple(&mut rng, limit).cloned().collect();
    if !picked.contains(module.seed()) {
        picked[0] = module.seed().clone();
    }
    picked.sort();
    picked
}

/// Every instantiated relation applied to every sample tableau through the
/// given generator action.
pub fn check_relations_with<F>(module: &ModuleSpace, sample: &[Tableau], mut act: F) -> VerificationReport
where
    F: FnMut(Generator, &TabVector) -> Result<TabVector>,
{
    let shape = module.shape();
    let rels = presentation_relations(shape);
    let rep = VerificationReport::new("defining-relations", module)
        .detail("relations", rels.len())
        .detail("tableaux", sample.len());
    for t in sample {
        let v = TabVector::unit(t.clone());
        for r in &rels {
            match r.expr.apply(shape, &v, &mut act) {
                Ok(w) if w.is_zero() => {}
                Ok(w) => {
                    return rep.fail(json!({"relation": r.to_string(), "tableau": t, "image": vector_json(&w)}));
                }
                Err(e) => return rep.fail(json!({"relation": r.to_string(), "tableau": t, "error": e.to_string()})),
            }
        }
    }
    rep
}

/// The defining relations on a sample. Finite modules go through memoized
/// generator matrices, infinite ones through per-vector evaluation.
pub fn check_defining_relations(module: &ModuleSpace, sample: &[Tableau]) -> VerificationReport {
    if !module.is_finite() {
        return check_relations_with(module, sample, |g, v| module.act_vector(g, v));
    }
    let shape = module.shape();
    let rels = presentation_relations(shape);
    let rep = VerificationReport::new("defining-relations", module)
        .detail("relations", rels.len())
        .detail("tableaux", sample.len());
    let gens = match module.generator_matrices() {
        Ok(g) => g,
        Err(e) => return rep.fail(json!({"error": e.to_string()})),
    };
    let cols: Vec<(usize, &Tableau)> =
        sample.iter().filter_map(|t| module.index_of(t).map(|c| (c, t))).collect();
    let mut ev = MatrixEvaluator::new(shape, &gens);
    for r in &rels {
        let m = match ev.combo(&r.expr) {
            Ok(m) => m,
            Err(e) => return rep.fail(json!({"relation": r.to_string(), "error": e.to_string()})),
        };
        for &(c, t) in &cols {
            if !m.column(c).is_empty() {
                let image: TabVector = m.column(c).iter().map(|&(row, q)| (module.basis()[row].clone(), q)).collect();
                return rep.fail(json!({"relation": r.to_string(), "tableau": t, "image": vector_json(&image)}));
            }
        }
    }
    rep
}

/// Counts how the basis convention treats every raw summand: kept, dropped
/// with a zero coefficient, or dropped because the target is not a member.
pub fn check_basis_closure(module: &ModuleSpace, sample: &[Tableau]) -> VerificationReport {
    let rep = VerificationReport::new("basis-closure", module);
    let (mut kept, mut dropped_zero, mut dropped_outside) = (0usize, 0usize, 0usize);
    for t in sample {
        for g in Generator::all(module.shape()) {
            let trace = match module.trace(g, t) {
                Ok(tr) => tr,
                Err(e) => return rep.fail(json!({"generator": g.to_string(), "error": e.to_string()})),
            };
            for (term, member) in trace {
                match (member, term.coefficient()) {
                    (true, None) => {
                        return rep.fail(json!({
                            "generator": g.to_string(), "tableau": t, "target": term.target,
                            "error": "vanishing denominator for a basis target"
                        }))
                    }
                    (true, Some(_)) => kept += 1,
                    (false, Some(c)) if c.is_zero() => dropped_zero += 1,
                    (false, _) => dropped_outside += 1,
                }
            }
        }
    }
    rep.detail("kept", kept).detail("dropped_zero_coefficient", dropped_zero).detail("dropped_outside", dropped_outside)
}

/// `e_k` raises the weight by `ε_k − ε_{k+1}` and `f_k` lowers it.
pub fn check_weight_grading(module: &ModuleSpace, sample: &[Tableau]) -> VerificationReport {
    let rep = VerificationReport::new("weight-grading", module);
    let tot = module.shape().total();
    for t in sample {
        let w = t.weight();
        for k in 1..tot {
            for (g, s) in [(Generator::E(k), 1i64), (Generator::F(k), -1)] {
                let img = match module.act(g, t) {
                    Ok(v) => v,
                    Err(e) => return rep.fail(json!({"generator": g.to_string(), "error": e.to_string()})),
                };
                let mut want = w.clone();
                want[k - 1] += Q::int(s);
                want[k] -= Q::int(s);
                let bad = img.iter().find(|(u, _)| u.weight() != want).map(|(u, _)| u.clone());
                if let Some(u) = bad {
                    return rep.fail(json!({"generator": g.to_string(), "tableau": t, "target": u}));
                }
            }
        }
    }
    rep
}

/// `[mat(x), mat(y)] = mat([x,y])` for every pair of matrix units.
pub fn check_bracket_compatibility(module: &ModuleSpace) -> Result<VerificationReport> {
    let s = module.shape();
    let mats = module.all_element_matrices()?;
    let dim = module.dim();
    let rep = VerificationReport::new("bracket-compatibility", module);
    let elems = BasisElement::all(s);
    for &a in &elems {
        for &b in &elems {
            let lhs = mats[&a].super_commutator(&mats[&b], a.parity(s), b.parity(s))?;
            let mut rhs = SparseMatrix::zeros(dim, dim);
            for (e, c) in crate::superalgebra::bracket(a, b, s)? {
                rhs = rhs.lin_comb(Q::ONE, &mats[&e], c)?;
            }
            if lhs != rhs {
                return Ok(rep.fail(json!({"x": a.to_string(), "y": b.to_string()})));
            }
        }
    }
    Ok(rep.detail("pairs", elems.len() * elems.len()))
}

/// The criterion: the pair is maximal for the seed and, in quasi-typical
/// mode, the mixed top-row l-values are pairwise distinct.
pub fn irreducibility_criterion(module: &ModuleSpace) -> bool {
    let t = module.seed();
    let maximal = module.relations().is_maximal_for(t);
    match module.mode() {
        Mode::QuasiCovariant => maximal,
        Mode::QuasiTypical => {
            let s = module.shape();
            let tot = s.total();
            let distinct = (1..=s.m()).all(|i| (s.m() + 1..=tot).all(|j| t.l(tot, i) != t.l(tot, j)));
            maximal && distinct
        }
    }
}

/// Every basis vector generates the whole module. Because the
/// Gelfand-Tsetlin subalgebra separates tableaux, every submodule is
/// spanned by basis tableaux, so testing basis vectors suffices.
pub fn brute_force_irreducible(module: &ModuleSpace) -> Result<bool> {
    if !module.is_finite() {
        return Err(Error::Infinite("the oracle needs a finite module".into()));
    }
    let gens: Vec<SparseMatrix> = module.generator_matrices()?.into_values().collect();
    let dim = module.dim();
    for c in 0..dim {
        let mut v = vec![Q::ZERO; dim];
        v[c] = Q::ONE;
        if span_closure_dim(&v, &gens) < dim {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Criterion against oracle on a finite module.
pub fn check_irreducibility(module: &ModuleSpace) -> Result<VerificationReport> {
    let criterion = irreducibility_criterion(module);
    let oracle = brute_force_irreducible(module)?;
    let rep = VerificationReport::new("irreducibility", module)
        .detail("criterion", criterion)
        .detail("oracle", oracle)
        .detail("dimension", module.dim());
    Ok(if criterion == oracle { rep } else { rep.fail(json!({"criterion": criterion, "oracle": oracle})) })
}

/// The joint kernel of the `E_ij`, `i ≤ m < j`, compared with the span of
/// the tableaux with every θ = 0.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct G1Invariants {
    pub dimension: usize,
    /// Kernel basis vectors as rational strings in basis order.
    pub basis: Vec<Vec<String>>,
    pub theta_zero: Vec<Tableau>,
    pub equals_theta_zero_span: bool,
}

fn theta_zero(t: &Tableau) -> bool {
    let s = t.shape();
    (s.m()..s.total()).all(|k| (1..=s.m()).all(|i| t.th(k, i).is_zero()))
}

pub fn g1_invariants(module: &ModuleSpace) -> Result<G1Invariants> {
    let s = module.shape();
    let mats = module.all_element_matrices()?;
    let ops: Vec<SparseMatrix> = (1..=s.m())
        .flat_map(|i| (s.m() + 1..=s.total()).map(move |j| BasisElement { i, j }))
        .map(|e| mats[&e].clone())
        .collect();
    // the operators shift weights, so the kernel splits over weight spaces
    let mut blocks: BTreeMap<Vec<Q>, Vec<usize>> = BTreeMap::new();
    for (c, t) in module.basis().iter().enumerate() {
        blocks.entry(t.weight()).or_default().push(c);
    }
    let mut kernel = Vec::new();
    for cols in blocks.values() {
        kernel.extend(joint_kernel_on(&ops, cols, module.dim()));
    }
    let theta0: Vec<(usize, Tableau)> =
        module.basis().iter().enumerate().filter(|(_, t)| theta_zero(t)).map(|(c, t)| (c, t.clone())).collect();
    let units_in_kernel = theta0.iter().all(|(c, _)| ops.iter().all(|m| m.column(*c).is_empty()));
    Ok(G1Invariants {
        dimension: kernel.len(),
        basis: kernel.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect(),
        equals_theta_zero_span: units_in_kernel && kernel.len() == theta0.len(),
        theta_zero: theta0.into_iter().map(|(_, t)| t).collect(),
    })
}

/// Weight multiset of `Λ(g₋₁) ⊗ W` from the weights of `W`.
pub fn kac_model_weights(shape: Shape, w_weights: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let roots: Vec<(usize, usize)> =
        (1..=shape.m()).flat_map(|i| (shape.m() + 1..=shape.total()).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for w in w_weights {
        for mask in 0u64..(1u64 << roots.len()) {
            let mut v = w.clone();
            for (b, &(i, j)) in roots.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    v[i - 1] -= Q::ONE;
                    v[j - 1] += Q::ONE;
                }
            }
            out.push(v);
        }
    }
    out.sort();
    out
}

/// Compares a module's weight multiset with the Kac-module model.
pub fn compare_weight_multisets(
    module: &ModuleSpace,
    module_weights: &[Vec<Q>],
    w_weights: &[Vec<Q>],
) -> VerificationReport {
    let s = module.shape();
    let mut mine = module_weights.to_vec();
    mine.sort();
    let model = kac_model_weights(s, w_weights);
    let expected_dim = (1usize << (s.m() * s.n())) * w_weights.len();
    let rep = VerificationReport::new("kac-structure", module)
        .detail("dimension", mine.len())
        .detail("invariants", w_weights.len());
    if mine.len() != expected_dim {
        return rep.fail(json!({"dimension": mine.len(), "expected": expected_dim}));
    }
    if mine != model {
        let first = mine.iter().zip(&model).find(|(a, b)| a != b).map(|(a, b)| json!({"module": a, "model": b}));
        return rep.fail(json!({"first_difference": first}));
    }
    rep
}

/// Structure of an irreducible quasi-typical module as a Kac module:
/// invariants equal the θ ≡ 0 span, `dim = 2^{mn}·dim W`, and matching
/// weight multisets.
pub fn kac_compare(module: &ModuleSpace) -> Result<VerificationReport> {
    if module.mode() != Mode::QuasiTypical || !module.is_finite() || !irreducibility_criterion(module) {
        return Err(Error::Precondition(
            "Kac comparison needs a finite quasi-typical module meeting the irreducibility criterion".into(),
        ));
    }
    let inv = g1_invariants(module)?;
    if !inv.equals_theta_zero_span {
        return Ok(VerificationReport::new("kac-structure", module).fail(json!({
            "kernel_dimension": inv.dimension,
            "theta_zero": inv.theta_zero.len()
        })));
    }
    let weights: Vec<Vec<Q>> = module.basis().iter().map(Tableau::weight).collect();
    let w: Vec<Vec<Q>> = inv.theta_zero.iter().map(Tableau::weight).collect();
    Ok(compare_weight_multisets(module, &weights, &w).detail("g1_invariants_equal_theta_zero_span", true))
}

fn matrix_witness(m: &SparseMatrix, module: &ModuleSpace) -> Value {
    let (r, c, q) = m.entries()[0];
    json!({"row": module.basis()[r], "column": module.basis()[c], "entry": q})
}

/// `x(x − E₁₁ − E₂₂) = 0` with `x = E₂₁E₁₂` on a gl(1|1) module.
pub fn check_gl11_identity(module: &ModuleSpace) -> Result<VerificationReport> {
    let s = module.shape();
    if s.m() != 1 || s.n() != 1 {
        return Err(Error::Shape(format!("the identity lives on gl(1|1), not {s}")));
    }
    let e = module.all_element_matrices()?;
    let u = |i, j| &e[&BasisElement { i, j }];
    let x = u(2, 1).mul(u(1, 2))?;
    let inner = x.sub(u(1, 1))?.sub(u(2, 2))?;
    let r = x.mul(&inner)?;
    let rep = VerificationReport::new("gl11-identity", module).detail("dimension", module.dim());
    Ok(if r.is_zero() { rep } else { rep.fail(matrix_witness(&r, module)) })
}

/// `[x, y]` with `x = E₂₁E₁₂`, `y = E₃₂E₂₃` on a gl(1|2) module, compared
/// with `E₃₁E₂₃E₁₂ − E₂₁E₃₂E₁₃`. The report also records whether the
/// opposite sign `E₂₁E₃₂E₁₃ − E₃₁E₂₃E₁₂` holds and whether `[x,y] ≠ 0`.
pub fn check_gl12_commutator(module: &ModuleSpace) -> Result<VerificationReport> {
    let s = module.shape();
    if s.m() != 1 || s.n() != 2 {
        return Err(Error::Shape(format!("the identity lives on gl(1|2), not {s}")));
    }
    let e = module.all_element_matrices()?;
    let mat = |b: BasisElement| Ok(e[&b].clone());
    let u = |i, j| &e[&BasisElement { i, j }];
    let x = u(2, 1).mul(u(1, 2))?;
    let y = u(3, 2).mul(u(2, 3))?;
    let comm = x.super_commutator(&y, 0, 0)?;
    let a = LieWord::units(&[(3, 1), (2, 3), (1, 2)])?.matrix(mat)?;
    let b = LieWord::units(&[(2, 1), (3, 2), (1, 3)])?.matrix(mat)?;
    let stated = comm.sub(&a.sub(&b)?)?;
    let opposite = comm.sub(&b.sub(&a)?)?;
    let rep = VerificationReport::new("gl12-commutator", module)
        .detail("dimension", module.dim())
        .detail("stated_form_holds", stated.is_zero())
        .detail("opposite_sign_holds", opposite.is_zero())
        .detail("commutator_nonzero", !comm.is_zero());
    Ok(if stated.is_zero() { rep } else { rep.fail(matrix_witness(&stated, module)) })
}

/// Searches essentially typical dominant gl(1|2) modules of growing size,
/// up to `max_dim`, for one on which `[x,y] ≠ 0`.
pub fn gl12_nonvanishing_search(max_dim: usize) -> Result<VerificationReport> {
    let s = Shape::new(1, 2)?;
    let mut candidates = Vec::new();
    for a in -4i64..=6 {
        for b in -4i64..=4 {
            for c in -4i64..=b {
                let w = Weight::from_ints(s, &[a, b, c])?;
                if is_dominant(&w) && is_essentially_typical(&w) {
                    let dim = 4 * (b - c + 1) as usize;
                    if dim <= max_dim {
                        candidates.push((dim, w));
                    }
                }
            }
        }
    }
    candidates.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.entries().cmp(y.1.entries())));
    for (_, w) in candidates {
        let m = ModuleSpace::build(&Tableau::highest(&w), &SuperRelationSet::standard(s), Mode::QuasiTypical, max_dim)?;
        if !m.is_finite() {
            continue;
        }
        let rep = check_gl12_commutator(&m)?;
        if rep.details.get("commutator_nonzero") == Some(&Value::Bool(true)) {
            let mut out = VerificationReport::new("gl12-nonvanishing", &m);
            out.details.insert("weight".into(), json!(w.entries()));
            out.details.insert("dimension".into(), json!(m.dim()));
            return Ok(out);
        }
    }
    let dummy = ModuleSpace::build(
        &Tableau::highest(&Weight::from_ints(s, &[1, 0, 0])?),
        &SuperRelationSet::standard(s),
        Mode::QuasiTypical,
        max_dim,
    )?;
    let mut out = VerificationReport::new("gl12-nonvanishing", &dummy);
    out.status = Status::Undecided;
    out.details.insert("max_dimension".into(), json!(max_dim));
    Ok(out)
}

/// Injectivity of the eigenvalue tuples on a list of tableaux.
pub fn separation_of(module: &ModuleSpace, tableaux: &[Tableau]) -> VerificationReport {
    let mut seen: HashMap<Vec<BerezinianSeries>, &Tableau> = HashMap::new();
    let rep = VerificationReport::new("separation", module).detail("tableaux", tableaux.len());
    for t in tableaux {
        let tuple = eigenvalue_tuple(t);
        if let Some(prev) = seen.insert(tuple.clone(), t) {
            let tuple: Vec<String> = tuple.iter().map(|b| b.to_string()).collect();
            return rep.fail(json!({"first": prev, "second": t, "eigenvalues": tuple}));
        }
    }
    rep
}

pub fn check_separation(module: &ModuleSpace) -> VerificationReport {
    separation_of(module, module.basis())
}

/// The truncated operator series of every row Berezinian is diagonal with
/// the factored eigenvalues, and `B_{m+n}` acts by the highest-weight
/// scalar `Π(1+t·x_i)/Π(1+t·x_j)`.
pub fn check_berezinian(module: &ModuleSpace, order: usize) -> Result<VerificationReport> {
    let s = module.shape();
    let tot = s.total();
    let rep = VerificationReport::new("berezinian", module).detail("order", order);
    let top = module.seed().top_row().to_vec();
    let x: Vec<Q> = (1..=tot).map(|i| crate::superalgebra::l_of(s, i, top[i - 1])).collect();
    let hc = BerezinianSeries::new(x[..s.m()].to_vec(), x[s.m()..].to_vec()).expand(order);
    for k in 1..=tot {
        let series = berezinian_operator_truncated(module, k, order)?;
        for (p, m) in series.iter().enumerate() {
            if !m.is_diagonal() {
                let (r, c, q) = m.entries().into_iter().find(|(r, c, _)| r != c).expect("off-diagonal entry");
                return Ok(rep.fail(json!({
                    "row": k, "power": p, "from": module.basis()[c], "to": module.basis()[r], "entry": q
                })));
            }
        }
        for (c, t) in module.basis().iter().enumerate() {
            let want = berezinian_eigenvalue(k, t)?.expand(order);
            let got: Vec<Q> = series.iter().map(|m| m.get(c, c)).collect();
            if got != want {
                return Ok(rep.fail(json!({"row": k, "tableau": t, "operator": got, "factored": want})));
            }
            if k == tot && got != hc {
                return Ok(rep.fail(json!({"tableau": t, "operator": got, "highest_weight_scalar": hc})));
            }
        }
    }
    Ok(rep)
}

/// Weyl dimension `Π_{i<j} (λ_i − λ_j + j − i)/(j − i)` of a gl(k) weight.
pub fn weyl_dimension(lambda: &[Q]) -> Q {
    let mut d = Q::ONE;
    for i in 0..lambda.len() {
        for j in i + 1..lambda.len() {
            let gap = Q::int((j - i) as i64);
            d = d * (lambda[i] - lambda[j] + gap) / gap;
        }
    }
    d
}

/// `2^{mn}` times the Weyl dimensions of the two blocks of the weight.
pub fn expected_dimension(w: &Weight) -> Q {
    let s = w.shape();
    let e = w.entries();
    Q::int(1i64 << (s.m() * s.n())) * weyl_dimension(&e[..s.m()]) * weyl_dimension(&e[s.m()..])
}

/// Dimension law for a standard module over a dominant essentially typical
/// weight.
pub fn check_dimension_law(module: &ModuleSpace) -> VerificationReport {
    let s = module.shape();
    let rep = VerificationReport::new("dimension-law", module);
    let w = Weight::new(s, module.seed().top_row().to_vec()).expect("top row has the right length");
    let expected = expected_dimension(&w);
    let rep = rep.detail("dimension", module.dim()).detail("expected", expected);
    if Q::int(module.dim() as i64) == expected && module.is_finite() {
        rep
    } else {
        rep.fail(json!({"dimension": module.dim(), "expected": expected, "finite": module.is_finite()}))
    }
}

/// Whether the module is the standard one over a dominant essentially
/// typical highest weight, where the dimension law applies.
pub fn dimension_law_applies(module: &ModuleSpace) -> bool {
    let s = module.shape();
    let Ok(w) = Weight::new(s, module.seed().top_row().to_vec()) else { return false };
    module.mode() == Mode::QuasiTypical
        && *module.relations() == SuperRelationSet::standard(s)
        && *module.seed() == Tableau::highest(&w)
        && w.entries().iter().all(Q::is_integer)
        && is_dominant(&w)
        && is_essentially_typical(&w)
}

/// Self-tests: each check must fail on deliberately corrupted input.
/// A report passes when the corruption was detected.
pub fn mutation_self_tests(module: &ModuleSpace) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let sample = sample_basis(module, 64, 0);
    // double the first nonzero generator image on one tableau
    let target = sample.iter().find_map(|t| {
        Generator::all(module.shape())
            .into_iter()
            .filter(|g| !matches!(g, Generator::H(_)))
            .find(|&g| module.act(g, t).map(|v| !v.is_zero()).unwrap_or(false))
            .map(|g| (g, t.clone()))
    });
    if let Some((g0, t0)) = target {
        let corrupted = check_relations_with(module, &sample, |g, v| {
            let mut out = TabVector::new();
            for (t, c) in v.iter() {
                let mut img = module.act(g, t)?;
                if g == g0 && *t == t0 {
                    img = img.scaled(Q::int(2));
                }
                out.add_scaled(&img, *c);
            }
            Ok(out)
        });
        let detected = corrupted.status == Status::Fail;
        let mut rep = VerificationReport::new("mutation-relations", module)
            .detail("generator", g0.to_string())
            .detail("tableau", &t0);
        if !detected {
            rep = rep.fail(json!({"undetected": "doubled generator image"}));
        }
        out.push(rep);
    }
    let mut dup = module.basis().to_vec();
    dup.push(module.seed().clone());
    let sep = separation_of(module, &dup);
    let mut rep = VerificationReport::new("mutation-separation", module);
    if sep.status != Status::Fail {
        rep = rep.fail(json!({"undetected": "duplicated tableau"}));
    }
    out.push(rep);
    if module.is_finite() {
        let mut weights: Vec<Vec<Q>> = module.basis().iter().map(Tableau::weight).collect();
        let w: Vec<Vec<Q>> = module.basis().iter().filter(|t| theta_zero(t)).map(Tableau::weight).collect();
        weights[0][0] += Q::ONE;
        let kac = compare_weight_multisets(module, &weights, &w);
        let mut rep = VerificationReport::new("mutation-kac", module);
        if kac.status != Status::Fail {
            rep = rep.fail(json!({"undetected": "perturbed weight"}));
        }
        out.push(rep);
    }
    Ok(out)
}

/// Named groups of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Relations,
    Irreducibility,
    Kac,
    Berezinian,
    Examples,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "all" => Suite::All,
            "relations" => Suite::Relations,
            "irreducibility" => Suite::Irreducibility,
            "kac" => Suite::Kac,
            "berezinian" => Suite::Berezinian,
            "examples" => Suite::Examples,
            other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
        })
    }
}

/// Options shared by suite runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub sample_limit: usize,
    pub berezinian_order: usize,
    pub timing: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0, sample_limit: 400, berezinian_order: 2, timing: false }
    }
}

fn timed<F>(opts: &SuiteOptions, out: &mut Vec<VerificationReport>, f: F) -> Result<()>
where
    F: FnOnce() -> Result<Vec<VerificationReport>>,
{
    let start = Instant::now();
    let mut reps = f()?;
    if opts.timing {
        let ms = start.elapsed().as_millis();
        for r in &mut reps {
            r.timing_ms = Some(ms);
        }
    }
    out.extend(reps);
    Ok(())
}

/// Runs a suite; reports come out in a fixed order.
pub fn run_suite(module: &ModuleSpace, suite: Suite, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    let finite = module.is_finite();
    let s = module.shape();
    if all || suite == Suite::Relations {
        let sample = sample_basis(module, opts.sample_limit, opts.seed);
        timed(opts, &mut out, || {
            let rep = check_defining_relations(module, &sample);
            Ok(vec![if sample.len() < module.dim() { rep.detail("sample_seed", opts.seed) } else { rep }])
        })?;
        timed(opts, &mut out, || Ok(vec![check_basis_closure(module, &sample)]))?;
        timed(opts, &mut out, || Ok(vec![check_weight_grading(module, &sample)]))?;
        if finite {
            timed(opts, &mut out, || Ok(vec![check_bracket_compatibility(module)?]))?;
        }
        timed(opts, &mut out, || mutation_self_tests(module))?;
    }
    if (all || suite == Suite::Irreducibility) && finite {
        timed(opts, &mut out, || Ok(vec![check_irreducibility(module)?]))?;
    }
    if all || suite == Suite::Kac {
        if dimension_law_applies(module) {
            timed(opts, &mut out, || Ok(vec![check_dimension_law(module)]))?;
        }
        if finite && module.mode() == Mode::QuasiTypical && irreducibility_criterion(module) {
            timed(opts, &mut out, || Ok(vec![kac_compare(module)?]))?;
        }
    }
    if all || suite == Suite::Berezinian {
        timed(opts, &mut out, || Ok(vec![check_separation(module)]))?;
        if finite {
            timed(opts, &mut out, || Ok(vec![check_berezinian(module, opts.berezinian_order)?]))?;
        }
    }
    if (all || suite == Suite::Examples) && finite {
        if s.m() == 1 && s.n() == 1 {
            timed(opts, &mut out, || Ok(vec![check_gl11_identity(module)?]))?;
        }
        if s.m() == 1 && s.n() == 2 {
            timed(opts, &mut out, || Ok(vec![check_gl12_commutator(module)?]))?;
        }
    }
    Ok(out)
}

/// Tally of statuses, for summaries.
pub fn summarize(reports: &[VerificationReport]) -> BTreeMap<&'static str, usize> {
    let mut m = BTreeMap::new();
    for r in reports {
        let k = match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undecided => "undecided",
        };
        *m.entry(k).or_insert(0) += 1;
    }
    m
}

/// Distinct checks that failed.
pub fn failed_checks(reports: &[VerificationReport]) -> HashSet<String> {
    reports.iter().filter(|r| r.status == Status::Fail).map(|r| r.check.clone()).collect()
}
