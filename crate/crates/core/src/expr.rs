//! Formal expressions in the Chevalley generators e_i, f_i, h_j: nested
//! brackets, the instantiated presentation relations of gl(m|n), and
//! products of matrix units.
//!
//! Text syntax: `[e1,f1] - h1 - h2`, `3/2*h1`, `[e2,[e3,[e2,e1]]]`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::sparse::{SparseMatrix, SparseVector};
use crate::superalgebra::{BasisElement, Shape};

/// A Chevalley generator. `E(i)` is e_i ↦ E_{i,i+1}, `F(i)` is f_i ↦ E_{i+1,i},
/// `H(j)` is h_j ↦ E_jj.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E(usize),
    F(usize),
    H(usize),
}

impl Generator {
    pub fn basis_element(&self) -> BasisElement {
        match *self {
            Generator::E(i) => BasisElement { i, j: i + 1 },
            Generator::F(i) => BasisElement { i: i + 1, j: i },
            Generator::H(j) => BasisElement { i: j, j },
        }
    }

    /// e_m and f_m are odd, everything else is even.
    pub fn parity(&self, shape: Shape) -> u8 {
        match *self {
            Generator::E(i) | Generator::F(i) => u8::from(i == shape.m()),
            Generator::H(_) => 0,
        }
    }

    pub fn check(&self, shape: Shape) -> Result<()> {
        let ok = match *self {
            Generator::E(i) | Generator::F(i) => i >= 1 && i < shape.total(),
            Generator::H(j) => j >= 1 && j <= shape.total(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Index(format!("generator {self} not defined for {shape}")))
        }
    }

    /// Every generator of the shape: e's, then f's, then h's.
    pub fn all(shape: Shape) -> Vec<Generator> {
        let t = shape.total();
        let mut v: Vec<Generator> = (1..t).map(Generator::E).collect();
        v.extend((1..t).map(Generator::F));
        v.extend((1..=t).map(Generator::H));
        v
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "e{i}"),
            Generator::F(i) => write!(f, "f{i}"),
            Generator::H(i) => write!(f, "h{i}"),
        }
    }
}

/// A generator or a bracket of two combinations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LieExpr {
    Gen(Generator),
    Bracket(Box<LieCombo>, Box<LieCombo>),
}

/// A rational linear combination of expressions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LieCombo {
    pub terms: Vec<(Q, LieExpr)>,
}

impl LieExpr {
    pub fn gen(g: Generator) -> LieExpr {
        LieExpr::Gen(g)
    }

    pub fn bracket(a: impl Into<LieCombo>, b: impl Into<LieCombo>) -> LieExpr {
        LieExpr::Bracket(Box::new(a.into()), Box::new(b.into()))
    }

    /// Parity of a homogeneous expression.
    pub fn parity(&self, shape: Shape) -> Result<u8> {
        match self {
            LieExpr::Gen(g) => Ok(g.parity(shape)),
            LieExpr::Bracket(a, b) => Ok((a.parity(shape)? + b.parity(shape)?) % 2),
        }
    }

    fn check(&self, shape: Shape) -> Result<()> {
        match self {
            LieExpr::Gen(g) => g.check(shape),
            LieExpr::Bracket(a, b) => {
                a.check(shape)?;
                b.check(shape)
            }
        }
    }
}

impl From<Generator> for LieExpr {
    fn from(g: Generator) -> LieExpr {
        LieExpr::Gen(g)
    }
}

impl From<LieExpr> for LieCombo {
    fn from(e: LieExpr) -> LieCombo {
        LieCombo { terms: vec![(Q::ONE, e)] }
    }
}

impl From<Generator> for LieCombo {
    fn from(g: Generator) -> LieCombo {
        LieExpr::Gen(g).into()
    }
}

impl LieCombo {
    pub fn plus(mut self, c: Q, e: impl Into<LieExpr>) -> LieCombo {
        self.terms.push((c, e.into()));
        self
    }

    /// Parity shared by all terms; an error for inhomogeneous combinations.
    pub fn parity(&self, shape: Shape) -> Result<u8> {
        let mut p = None;
        for (_, e) in &self.terms {
            let q = e.parity(shape)?;
            match p {
                None => p = Some(q),
                Some(p0) if p0 != q => {
                    return Err(Error::Precondition(format!("inhomogeneous combination {self}")))
                }
                _ => {}
            }
        }
        Ok(p.unwrap_or(0))
    }

    pub fn check(&self, shape: Shape) -> Result<()> {
        self.terms.iter().try_for_each(|(_, e)| e.check(shape))?;
        self.parity(shape).map(|_| ())
    }

    /// Evaluates on a vector given the action of single generators.
    pub fn apply<K, F>(&self, shape: Shape, v: &SparseVector<K>, act: &mut F) -> Result<SparseVector<K>>
    where
        K: Ord + Clone,
        F: FnMut(Generator, &SparseVector<K>) -> Result<SparseVector<K>>,
    {
        let mut out = SparseVector::new();
        for (c, e) in &self.terms {
            let w = apply_expr(e, shape, v, act)?;
            out.add_scaled(&w, *c);
        }
        Ok(out)
    }
}

fn apply_expr<K, F>(e: &LieExpr, shape: Shape, v: &SparseVector<K>, act: &mut F) -> Result<SparseVector<K>>
where
    K: Ord + Clone,
    F: FnMut(Generator, &SparseVector<K>) -> Result<SparseVector<K>>,
{
    match e {
        LieExpr::Gen(g) => act(*g, v),
        LieExpr::Bracket(a, b) => {
            let sign = if a.parity(shape)? * b.parity(shape)? == 1 { Q::ONE } else { -Q::ONE };
            let bv = b.apply(shape, v, act)?;
            let mut out = a.apply(shape, &bv, act)?;
            let av = a.apply(shape, v, act)?;
            let bav = b.apply(shape, &av, act)?;
            out.add_scaled(&bav, sign);
            Ok(out)
        }
    }
}

/// Evaluates combinations to matrices, memoizing every sub-expression.
pub struct MatrixEvaluator<'a> {
    shape: Shape,
    generators: &'a HashMap<Generator, SparseMatrix>,
    memo: HashMap<LieExpr, SparseMatrix>,
}

impl<'a> MatrixEvaluator<'a> {
    pub fn new(shape: Shape, generators: &'a HashMap<Generator, SparseMatrix>) -> Self {
        MatrixEvaluator { shape, generators, memo: HashMap::new() }
    }

    fn dim(&self) -> usize {
        self.generators.values().next().map_or(0, SparseMatrix::rows)
    }

    pub fn combo(&mut self, c: &LieCombo) -> Result<SparseMatrix> {
        let d = self.dim();
        let mut acc = SparseMatrix::zeros(d, d);
        for (q, e) in &c.terms {
            let m = self.expr(e)?;
            acc = acc.lin_comb(Q::ONE, &m, *q)?;
        }
        Ok(acc)
    }

    pub fn expr(&mut self, e: &LieExpr) -> Result<SparseMatrix> {
        if let Some(m) = self.memo.get(e) {
            return Ok(m.clone());
        }
        let m = match e {
            LieExpr::Gen(g) => self
                .generators
                .get(g)
                .cloned()
                .ok_or_else(|| Error::Index(format!("no matrix for generator {g}")))?,
            LieExpr::Bracket(a, b) => {
                let p = a.parity(self.shape)?;
                let q = b.parity(self.shape)?;
                let ma = self.combo(a)?;
                let mb = self.combo(b)?;
                ma.super_commutator(&mb, p, q)?
            }
        };
        self.memo.insert(e.clone(), m.clone());
        Ok(m)
    }
}

impl fmt::Display for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieExpr::Gen(g) => write!(f, "{g}"),
            LieExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

impl fmt::Display for LieCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (c, e)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if a != Q::ONE {
                write!(f, "{a}*")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for LieCombo {
    type Err = Error;
    fn from_str(s: &str) -> Result<LieCombo> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let c = p.combo()?;
        p.ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(c)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected a number"))
    }

    fn combo(&mut self) -> Result<LieCombo> {
        let mut terms = Vec::new();
        let mut sign = Q::ONE;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -Q::ONE;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let (c, e) = self.term()?;
            terms.push((sign * c, e));
            match self.peek() {
                Some(b'+') => sign = Q::ONE,
                Some(b'-') => sign = -Q::ONE,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(LieCombo { terms })
    }

    fn term(&mut self) -> Result<(Q, LieExpr)> {
        let mut coeff = Q::ONE;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let start = self.pos;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'/')
            {
                self.pos += 1;
            }
            coeff = std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse()?;
            self.expect(b'*')?;
        }
        Ok((coeff, self.atom()?))
    }

    fn atom(&mut self) -> Result<LieExpr> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let a = self.combo()?;
                self.expect(b',')?;
                let b = self.combo()?;
                self.expect(b']')?;
                Ok(LieExpr::Bracket(Box::new(a), Box::new(b)))
            }
            Some(c @ (b'e' | b'f' | b'h')) => {
                self.pos += 1;
                let i = self.number()?;
                Ok(LieExpr::Gen(match c {
                    b'e' => Generator::E(i),
                    b'f' => Generator::F(i),
                    _ => Generator::H(i),
                }))
            }
            _ => Err(self.err("expected a generator or '['")),
        }
    }
}

/// The ten families of defining relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationFamily {
    /// `[h_i, h_j] = 0`
    CartanCommute,
    /// `[h_i, e_j] = (δ_ij − δ_{i,j+1}) e_j`
    CartanE,
    /// `[h_i, f_j] = −(δ_ij − δ_{i,j+1}) f_j`
    CartanF,
    /// `[e_i, f_j] = 0` for `i ≠ j`
    EfOffDiagonal,
    /// `[e_i, f_i] = h_i − h_{i+1}` for `i ≠ m`
    EfEven,
    /// `[e_m, f_m] = h_m + h_{m+1}`
    EfOdd,
    /// `[e_i, e_j] = [f_i, f_j] = 0` for `|i − j| > 1`
    FarCommute,
    /// `[e_m, e_m] = [f_m, f_m] = 0`
    OddSquare,
    /// `[e_i, [e_i, e_{i±1}]] = 0` and the f version, `i ≠ m`
    Serre,
    /// `[e_m, [e_{m±1}, [e_m, e_{m∓1}]]] = 0` and the f version
    QuarticSerre,
}

/// One instantiated relation; the expression must act as zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresentationRelation {
    pub family: RelationFamily,
    pub expr: LieCombo,
}

impl fmt::Display for PresentationRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)
    }
}

/// Every instance of the ten relation families, over ordered index pairs.
pub fn presentation_relations(shape: Shape) -> Vec<PresentationRelation> {
    use Generator::{E, F, H};
    use RelationFamily::*;
    let t = shape.total();
    let m = shape.m();
    let mut out = Vec::new();
    let mut push = |family, expr: LieCombo| out.push(PresentationRelation { family, expr });
    let br = |a: Generator, b: Generator| LieExpr::bracket(a, b);
    let delta = |a: usize, b: usize| i64::from(a == b);

    for i in 1..=t {
        for j in 1..=t {
            push(CartanCommute, br(H(i), H(j)).into());
        }
    }
    for i in 1..=t {
        for j in 1..t {
            let c = Q::int(delta(i, j) - delta(i, j + 1));
            push(CartanE, LieCombo::from(br(H(i), E(j))).plus(-c, E(j)));
        }
    }
    for i in 1..=t {
        for j in 1..t {
            let c = Q::int(delta(i, j) - delta(i, j + 1));
            push(CartanF, LieCombo::from(br(H(i), F(j))).plus(c, F(j)));
        }
    }
    for i in 1..t {
        for j in 1..t {
            if i != j {
                push(EfOffDiagonal, br(E(i), F(j)).into());
            }
        }
    }
    for i in (1..t).filter(|&i| i != m) {
        push(EfEven, LieCombo::from(br(E(i), F(i))).plus(-Q::ONE, H(i)).plus(Q::ONE, H(i + 1)));
    }
    push(EfOdd, LieCombo::from(br(E(m), F(m))).plus(-Q::ONE, H(m)).plus(-Q::ONE, H(m + 1)));
    for i in 1..t {
        for j in 1..t {
            if i.abs_diff(j) > 1 {
                push(FarCommute, br(E(i), E(j)).into());
                push(FarCommute, br(F(i), F(j)).into());
            }
        }
    }
    push(OddSquare, br(E(m), E(m)).into());
    push(OddSquare, br(F(m), F(m)).into());
    for i in (1..t).filter(|&i| i != m) {
        for j in [i.wrapping_sub(1), i + 1] {
            if j >= 1 && j < t {
                push(Serre, LieExpr::bracket(E(i), br(E(i), E(j))).into());
                push(Serre, LieExpr::bracket(F(i), br(F(i), F(j))).into());
            }
        }
    }
    if m >= 2 && m + 1 < t {
        for (a, b) in [(m + 1, m - 1), (m - 1, m + 1)] {
            push(QuarticSerre, LieExpr::bracket(E(m), LieExpr::bracket(E(a), br(E(m), E(b)))).into());
            push(QuarticSerre, LieExpr::bracket(F(m), LieExpr::bracket(F(a), br(F(m), F(b)))).into());
        }
    }
    out
}

/// A product `c₁E_{i₁j₁} · c₂E_{i₂j₂} ⋯` in the enveloping algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieWord {
    factors: Vec<(BasisElement, Q)>,
}

impl LieWord {
    pub fn new(factors: Vec<(BasisElement, Q)>) -> Result<LieWord> {
        if factors.is_empty() {
            return Err(Error::Precondition("empty word".into()));
        }
        Ok(LieWord { factors })
    }

    /// The word `E_{a₁b₁} E_{a₂b₂} ⋯` with unit scalars.
    pub fn units(pairs: &[(usize, usize)]) -> Result<LieWord> {
        LieWord::new(pairs.iter().map(|&(i, j)| (BasisElement { i, j }, Q::ONE)).collect())
    }

    pub fn factors(&self) -> &[(BasisElement, Q)] {
        &self.factors
    }

    /// The product of the factor matrices, leftmost factor outermost.
    pub fn matrix<F>(&self, mut mat: F) -> Result<SparseMatrix>
    where
        F: FnMut(BasisElement) -> Result<SparseMatrix>,
    {
        let mut acc: Option<SparseMatrix> = None;
        for &(e, c) in &self.factors {
            let m = mat(e)?.scale(c);
            acc = Some(match acc {
                None => m,
                Some(a) => a.mul(&m)?,
            });
        }
        Ok(acc.expect("nonempty word"))
    }
}

impl fmt::Display for LieWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(e, c)| if *c == Q::ONE { e.to_string() } else { format!("{c}*{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}
