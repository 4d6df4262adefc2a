//! Command-line front end: build, verify, inspect and export modules.
//!
//! Exit codes: 0 for success or a finding (such as a reducible module),
//! 1 when a verification check fails, 2 for usage, parse and input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expr::presentation_relations;
use crate::io::{export_module, import_module, in_file, parse_json, read_json, to_json_string, write_text, ModuleJson};
use crate::module::{berezinian_eigenvalue, berezinian_operator_truncated, Mode, ModuleSpace};
use crate::rational::{parse_list, Q};
use crate::relations::{is_covariant_admissible, maximal_relation_set, RelationSet, SuperRelationSet};
use crate::superalgebra::{BasisElement, Shape, Weight};
use crate::tableau::Tableau;
use crate::verification::{run_suite, summarize, Status, Suite, SuiteOptions};

#[derive(Parser, Debug)]
#[command(name = "glmn", version, about = "Gelfand-Tsetlin modules for gl(m|n) in exact arithmetic")]
pub struct Cli {
    /// Write the machine-readable output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Emit JSON from commands that default to text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the basis elements with parities and every defining relation.
    Structure {
        /// Shape as `m,n`, such as `2,1`.
        #[arg(long)]
        shape: String,
    },
    /// Check a relation set (gl(n) or super pair) for admissibility.
    CheckAdmissible {
        /// Relation file: a gl(n) set or a super pair {c1, c2}.
        #[arg(long)]
        relations: PathBuf,
    },
    /// Enumerate a module and write it as JSON.
    BuildModule(BuildArgs),
    /// Run a verification suite on a module file, one JSON line per check.
    Verify {
        /// Module file written by build-module or export.
        #[arg(long)]
        module: PathBuf,
        /// One of all, relations, irreducibility, kac, berezinian, examples.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Seed for sampling basis tableaux.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Resample an infinite module on a ball of this radius.
        #[arg(long)]
        radius: Option<usize>,
        /// Maximum number of sampled tableaux.
        #[arg(long, default_value_t = 400)]
        sample: usize,
        /// Include wall time per check.
        #[arg(long)]
        timing: bool,
    },
    /// Row Berezinian eigenvalues per basis tableau, checked against the
    /// truncated operator series on finite modules.
    Berezinian {
        /// Module file written by build-module or export.
        #[arg(long)]
        module: PathBuf,
        /// Truncation order; defaults to m+n.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Re-export a module file canonically, optionally with generator
    /// matrices.
    Export {
        /// Module file written by build-module or export.
        #[arg(long)]
        module: PathBuf,
        /// Include generator matrices (finite modules only).
        #[arg(long)]
        matrices: bool,
    },
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    /// Shape as `m,n`, such as `2,1`.
    #[arg(long)]
    pub shape: String,
    /// Highest weight such as `3,1,-5`; the seed is its highest tableau.
    #[arg(long, conflicts_with = "seed")]
    pub weight: Option<String>,
    /// Seed tableau file.
    #[arg(long)]
    pub seed: Option<PathBuf>,
    /// Use the standard betweenness relation pair.
    #[arg(long, conflicts_with_all = ["relations", "maximal"])]
    pub standard: bool,
    /// Relation pair file.
    #[arg(long, conflicts_with = "maximal")]
    pub relations: Option<PathBuf>,
    /// Use the maximal relation pair satisfied by the seed.
    #[arg(long)]
    pub maximal: bool,
    /// Quasi-covariant membership.
    #[arg(long)]
    pub covariant: bool,
    /// Maximum number of basis tableaux.
    #[arg(long, default_value_t = 5000)]
    pub cap: usize,
    /// Enumerate only the ball of this radius around the seed.
    #[arg(long)]
    pub radius: Option<usize>,
    /// Include generator matrices (finite modules only).
    #[arg(long)]
    pub matrices: bool,
}

/// Output of a command before it is written.
struct Output {
    stdout: String,
    stderr: String,
    code: i32,
}

impl Output {
    fn ok(stdout: String, stderr: String) -> Output {
        Output { stdout, stderr, code: 0 }
    }
}

/// Runs a parsed command line, writing to the given streams; returns the
/// exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match dispatch(cli) {
        Ok(out) => {
            let wrote = match &cli.out {
                Some(p) => write_text(p, &out.stdout),
                None => stdout.write_all(out.stdout.as_bytes()).map_err(Error::from),
            };
            if let Err(e) = wrote {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            let _ = stderr.write_all(out.stderr.as_bytes());
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Structure { shape } => structure(&Shape::parse(shape)?, cli.json),
        Command::CheckAdmissible { relations } => check_admissible(relations, cli.json),
        Command::BuildModule(a) => build_module(a),
        Command::Verify { module, suite, seed, radius, sample, timing } => {
            let opts = SuiteOptions { seed: *seed, sample_limit: *sample, timing: *timing, ..SuiteOptions::default() };
            verify(module, suite.parse()?, *radius, &opts)
        }
        Command::Berezinian { module, order } => berezinian(module, *order, cli.json),
        Command::Export { module, matrices } => {
            let m = load_module(module)?;
            let text = to_json_string(&export_module(&m, *matrices)?) + "\n";
            Ok(Output::ok(text, format!("exported {} basis tableaux\n", m.dim())))
        }
    }
}

#[derive(Serialize)]
struct ElementRow {
    element: String,
    i: usize,
    j: usize,
    parity: u8,
}

#[derive(Serialize)]
struct RelationRow {
    family: crate::expr::RelationFamily,
    relation: String,
}

/// The listing printed by `structure`.
pub fn structure_json(shape: &Shape) -> Value {
    let elements: Vec<ElementRow> = BasisElement::all(*shape)
        .into_iter()
        .map(|e| ElementRow { element: e.to_string(), i: e.i, j: e.j, parity: e.parity(*shape) })
        .collect();
    let relations: Vec<RelationRow> = presentation_relations(*shape)
        .into_iter()
        .map(|r| RelationRow { family: r.family, relation: r.to_string() })
        .collect();
    json!({"shape": shape, "basis_elements": elements, "relations": relations})
}

fn structure(shape: &Shape, as_json: bool) -> Result<Output> {
    let v = structure_json(shape);
    let rels = v["relations"].as_array().map_or(0, Vec::len);
    let summary = format!("{shape}: {} basis elements, {rels} relations\n", shape.total() * shape.total());
    if as_json {
        return Ok(Output::ok(to_json_string(&v) + "\n", summary));
    }
    let mut text = format!("{shape}\nbasis elements (parity):\n");
    for e in BasisElement::all(*shape) {
        text += &format!("  {e} ({})\n", e.parity(*shape));
    }
    text += "relations (each acts as zero):\n";
    for r in presentation_relations(*shape) {
        text += &format!("  {r}\n");
    }
    Ok(Output::ok(text, summary))
}

/// A relation file holds either a gl(n) set or a super pair.
pub enum RelationFile {
    Plain(RelationSet),
    Super(SuperRelationSet),
}

pub fn parse_relation_file(text: &str) -> Result<RelationFile> {
    let v: Value = parse_json(text)?;
    if v.get("c1").is_some() {
        Ok(RelationFile::Super(serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?))
    } else {
        Ok(RelationFile::Plain(serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?))
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Admissibility diagnostics as JSON.
pub fn admissibility_json(file: &RelationFile) -> Value {
    match file {
        RelationFile::Plain(c) => {
            let r = c.admissibility();
            json!({"admissible": r.admissible, "n": c.rank(), "components": r.components, "violations": r.violations})
        }
        RelationFile::Super(c) => {
            let r1 = c.c1().admissibility();
            let r2 = c.c2().admissibility();
            json!({
                "admissible": r1.admissible && r2.admissible,
                "shape": c.shape(),
                "c1": r1,
                "c2": r2,
                "covariant_admissible": is_covariant_admissible(c),
                "c1_orders_row_m": c.orders_even_top_row(),
            })
        }
    }
}

fn check_admissible(path: &Path, as_json: bool) -> Result<Output> {
    let file = parse_relation_file(&read_text(path)?).map_err(|e| in_file(path, e))?;
    let v = admissibility_json(&file);
    let admissible = v["admissible"].as_bool().unwrap_or(false);
    let mut lines = Vec::new();
    match &file {
        RelationFile::Plain(c) => lines.extend(c.admissibility().violations.iter().map(|x| x.to_string())),
        RelationFile::Super(c) => {
            for (name, side) in [("C1", c.c1()), ("C2", c.c2())] {
                lines.extend(side.admissibility().violations.iter().map(|x| format!("{name}: {x}")));
            }
        }
    }
    let verdict = if admissible { "admissible" } else { "not admissible" };
    let mut human = format!("{verdict}\n");
    if let RelationFile::Super(c) = &file {
        if c.orders_even_top_row() {
            human += "  warning: C1 orders vertices of row m; odd generators need not preserve this order\n";
        }
    }
    for l in &lines {
        human += &format!("  {l}\n");
    }
    if as_json {
        Ok(Output::ok(to_json_string(&v) + "\n", human))
    } else {
        Ok(Output::ok(human, String::new()))
    }
}

/// Assembles the module described by `build-module` arguments.
pub fn build_from_args(a: &BuildArgs) -> Result<ModuleSpace> {
    let shape = Shape::parse(&a.shape)?;
    let seed = match (&a.weight, &a.seed) {
        (Some(w), None) => Tableau::highest(&Weight::new(shape, parse_list(w)?)?),
        (None, Some(p)) => read_json::<Tableau>(p)?,
        _ => return Err(Error::Parse("give exactly one of --weight and --seed".into())),
    };
    if seed.shape() != shape {
        return Err(Error::Shape(format!("seed is a {} tableau, expected {shape}", seed.shape())));
    }
    let relations = if a.standard {
        SuperRelationSet::standard(shape)
    } else if a.maximal {
        maximal_relation_set(&seed)?
    } else if let Some(p) = &a.relations {
        match parse_relation_file(&read_text(p)?).map_err(|e| in_file(p, e))? {
            RelationFile::Super(c) => c,
            RelationFile::Plain(_) => return Err(Error::Parse("a module needs a super relation pair {c1, c2}".into())),
        }
    } else {
        return Err(Error::Parse("give one of --standard, --maximal and --relations".into()));
    };
    if relations.shape() != shape {
        return Err(Error::Shape(format!("relations are for {}, expected {shape}", relations.shape())));
    }
    let mode = if a.covariant { Mode::QuasiCovariant } else { Mode::QuasiTypical };
    match a.radius {
        Some(r) => ModuleSpace::ball(&seed, &relations, mode, r, a.cap),
        None => ModuleSpace::build(&seed, &relations, mode, a.cap),
    }
}

fn build_module(a: &BuildArgs) -> Result<Output> {
    let m = build_from_args(a)?;
    let with_matrices = a.matrices && m.is_finite();
    let text = to_json_string(&export_module(&m, with_matrices)?) + "\n";
    let extent = if m.is_finite() {
        "finite".to_string()
    } else if let Some(r) = m.radius() {
        format!("infinite, ball of radius {r}")
    } else {
        format!("cap {} reached", a.cap)
    };
    Ok(Output::ok(text, format!("{}: {} basis tableaux ({extent})\n", m.shape(), m.dim())))
}

fn load_module(path: &Path) -> Result<ModuleSpace> {
    import_module(&read_json::<ModuleJson>(path)?).map_err(|e| match e {
        Error::Precondition(m) => Error::Precondition(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn verify(path: &Path, suite: Suite, radius: Option<usize>, opts: &SuiteOptions) -> Result<Output> {
    let mut m = load_module(path)?;
    if let Some(r) = radius {
        if !m.is_finite() {
            m = ModuleSpace::ball(m.seed(), m.relations(), m.mode(), r, usize::MAX)?;
        }
    }
    let reports = run_suite(&m, suite, opts)?;
    let mut text = String::new();
    for r in &reports {
        text += &r.to_json_line();
        text.push('\n');
    }
    let tally = summarize(&reports);
    let mut human = format!("seed {}; ", opts.seed);
    human += &tally.iter().map(|(k, v)| format!("{v} {k}")).collect::<Vec<_>>().join(", ");
    human.push('\n');
    for r in &reports {
        if r.status != Status::Pass {
            human += &format!("  {} {:?}\n", r.check, r.status);
        }
        if r.check == "irreducibility" {
            let irreducible = r.details.get("oracle").and_then(Value::as_bool).unwrap_or(false);
            human += if irreducible { "  module is irreducible\n" } else { "  module is reducible\n" };
        }
    }
    let code = i32::from(reports.iter().any(|r| r.status == Status::Fail));
    Ok(Output { stdout: text, stderr: human, code })
}

fn berezinian(path: &Path, order: Option<usize>, as_json: bool) -> Result<Output> {
    let m = load_module(path)?;
    let tot = m.shape().total();
    let order = order.unwrap_or(tot);
    let mut rows = Vec::new();
    for t in m.basis() {
        let ev: Vec<String> = (1..=tot).map(|k| berezinian_eigenvalue(k, t).map(|b| b.to_string())).collect::<Result<_>>()?;
        rows.push(json!({"tableau": t, "eigenvalues": ev}));
    }
    let mut code = 0;
    let mut operator_check = Value::Null;
    if m.is_finite() {
        let mut ok = true;
        'rows: for k in 1..=tot {
            let series = berezinian_operator_truncated(&m, k, order)?;
            for (c, t) in m.basis().iter().enumerate() {
                let want = berezinian_eigenvalue(k, t)?.expand(order);
                let got: Vec<Q> = series.iter().map(|s| s.get(c, c)).collect();
                if series.iter().any(|s| !s.is_diagonal()) || got != want {
                    ok = false;
                    break 'rows;
                }
            }
        }
        operator_check = json!({"order": order, "diagonal_and_matching": ok});
        code = i32::from(!ok);
    }
    let v = json!({"shape": m.shape(), "tableaux": rows, "operator_check": operator_check});
    let summary = format!("{} tableaux; operator check: {}\n", m.dim(), operator_check);
    if as_json {
        return Ok(Output { stdout: to_json_string(&v) + "\n", stderr: summary, code });
    }
    let mut text = String::new();
    for (t, r) in m.basis().iter().zip(&rows) {
        let ev: Vec<&str> = r["eigenvalues"].as_array().into_iter().flatten().filter_map(Value::as_str).collect();
        text += &format!("{t}: {}\n", ev.join("  "));
    }
    Ok(Output { stdout: text, stderr: summary, code })
}
