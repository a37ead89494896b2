//! `antypes`: command-line access to the tree, complex and gauge libraries.
//!
//! Exit codes: 0 success, 1 domain error (or failed verification), 2 usage.

use std::io::Read;
use std::process::ExitCode;

use antypes::complex::{self, BuildOptions, Family};
use antypes::gauge::{self, PrimeSet};
use antypes::operad::{self, GraftSpec, LevelWitness};
use antypes::rational::{self, Rational};
use antypes::tree::{self, Tree};
use antypes::{Error, Exec};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "antypes",
    version,
    about = "Associahedra, multiplihedra and A_n-types of gauge groups"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand)]
enum Group {
    /// Planted plane trees.
    #[command(subcommand)]
    Trees(TreesCmd),
    /// Cell complexes K_n, L_n, J_n, H_n.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// ε-sequence and triviality arithmetic.
    #[command(subcommand)]
    Gauge(GaugeCmd),
    /// Exhaustive checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeKind {
    Binary,
    Planar,
    Painted,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraftKind {
    /// ∂_k(r,t): unpainted onto unpainted.
    Partial,
    /// δ_k(r,t): unpainted onto a painted tree.
    UnpaintedOntoPainted,
    /// δ(t; r_1..r_t): painted trees onto an unpainted tree.
    PaintedOntoUnpainted,
}

#[derive(Args)]
struct TreeInput {
    /// Tree in bracket grammar; read from stdin (one per line) when absent.
    #[arg(long)]
    tree: Vec<String>,
}

#[derive(Subcommand)]
enum TreesCmd {
    /// List all shapes of a kind with the given leaf count.
    Enumerate {
        #[arg(long, value_enum)]
        kind: ShapeKind,
        #[arg(long)]
        leaves: usize,
    },
    /// Collapse zero-length edges.
    Reduce(TreeInput),
    /// Graft trees; the outer operand comes first.
    Graft {
        #[arg(long, value_enum)]
        kind: GraftKind,
        /// Leaf index for the single-leaf grafts.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        input: TreeInput,
    },
    /// Decide whether a painted metric tree is a level-tree.
    LevelTest(TreeInput),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    K,
    L,
    J,
    H,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::K => Family::K,
            FamilyArg::L => Family::L,
            FamilyArg::J => Family::J,
            FamilyArg::H => Family::H,
        }
    }
}

#[derive(Args)]
struct ComplexArgs {
    #[arg(long, value_enum, ignore_case = true)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// Build and list cells with their boundaries.
    Build(ComplexArgs),
    FVector(ComplexArgs),
    Euler(ComplexArgs),
    /// Rational Betti numbers.
    Homology(ComplexArgs),
    /// JSON export (always JSON).
    Export(ComplexArgs),
}

#[derive(Subcommand)]
enum GaugeCmd {
    /// ε_1..ε_n.
    Epsilon {
        #[arg(long)]
        n: usize,
    },
    /// ε_1..ε_n re-derived from the Chern character.
    Oracle {
        #[arg(long)]
        n: usize,
    },
    /// Least D with D·ε_i integral for i <= n.
    Divisor {
        #[arg(long)]
        n: usize,
    },
    /// Triviality of aut P_k localized at P as a fibrewise A_n-space.
    Decide {
        #[arg(long, allow_hyphen_values = true)]
        k: BigInt,
        #[arg(long)]
        primes: PrimeSet,
        #[arg(long)]
        n: usize,
    },
    /// ε congruences at each odd prime listed.
    Congruence {
        #[arg(long)]
        primes: PrimeSet,
    },
    /// p-adic valuations of k over P.
    UnitClass {
        #[arg(long, allow_hyphen_values = true)]
        k: BigInt,
        #[arg(long)]
        primes: PrimeSet,
    },
    /// Lower bound on the number of A_n-types.
    LowerBound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        sharper: bool,
    },
    /// Number of primes <= n.
    PrimePi {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Check all grafting relations on sampled points.
    Relations {
        #[arg(long, default_value_t = 6)]
        max_leaves: usize,
        #[arg(long, default_value = "0,1/3,1/2,1")]
        samples: String,
    },
}

/// Successful output, or a report that still exits with status 1.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Output {
        Output {
            text: text.into(),
            json,
            ok: true,
        }
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn read_trees(input: &TreeInput) -> antypes::Result<Vec<Tree>> {
    let lines: Vec<String> = if input.tree.is_empty() {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Domain(format!("reading stdin: {e}")))?;
        buf.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect()
    } else {
        input.tree.clone()
    };
    if lines.is_empty() {
        return Err(Error::Domain("no tree given (use --tree or stdin)".into()));
    }
    lines.iter().map(|l| l.parse()).collect()
}

fn one_tree(input: &TreeInput) -> antypes::Result<Tree> {
    let mut ts = read_trees(input)?;
    if ts.len() != 1 {
        return Err(Error::Domain(format!(
            "expected one tree, got {}",
            ts.len()
        )));
    }
    Ok(ts.remove(0))
}

fn witness_json(w: &LevelWitness) -> Value {
    match w {
        LevelWitness::Flat => json!({"kind": "flat"}),
        LevelWitness::Unpainted { k, rho, sigma } => {
            json!({"kind": "unpainted", "k": k, "rho": rho.encode(), "sigma": sigma.encode()})
        }
        LevelWitness::Painted { base, factors } => json!({
            "kind": "painted",
            "base": base.encode(),
            "factors": factors.iter().map(Tree::encode).collect::<Vec<_>>(),
        }),
    }
}

fn witness_text(w: &LevelWitness) -> String {
    match w {
        LevelWitness::Flat => "flat".into(),
        LevelWitness::Unpainted { k, rho, sigma } => format!("δ_{k} {rho} {sigma}"),
        LevelWitness::Painted { base, factors } => format!("δ {base} {}", join(factors)),
    }
}

fn trees(cmd: &TreesCmd) -> antypes::Result<Output> {
    match cmd {
        TreesCmd::Enumerate { kind, leaves } => {
            let ts = match kind {
                ShapeKind::Binary => tree::binary_unpainted(*leaves)?,
                ShapeKind::Planar => tree::planar_trees(*leaves)?,
                ShapeKind::Painted => tree::binary_painted_shapes(*leaves)?,
            };
            let text = ts.iter().map(Tree::encode).collect::<Vec<_>>().join("\n");
            let js: Vec<_> = ts.iter().map(Tree::to_json).collect();
            Ok(Output::new(
                text,
                serde_json::to_value(js).expect("trees serialize"),
            ))
        }
        TreesCmd::Reduce(input) => {
            let r = tree::reduce(&one_tree(input)?)?.into_tree();
            Ok(Output::new(
                r.encode(),
                serde_json::to_value(r.to_json()).expect("tree serializes"),
            ))
        }
        TreesCmd::Graft { kind, k, input } => {
            let ts = read_trees(input)?;
            let need_k = || k.ok_or_else(|| Error::Domain("this graft needs --k".into()));
            let spec = match kind {
                GraftKind::Partial | GraftKind::UnpaintedOntoPainted => {
                    let [rho, tau] = &ts[..] else {
                        return Err(Error::Domain(format!("expected 2 trees, got {}", ts.len())));
                    };
                    let (k, r, t) = (need_k()?, rho.leaves(), tau.leaves());
                    if matches!(kind, GraftKind::Partial) {
                        GraftSpec::Partial { k, r, t }
                    } else {
                        GraftSpec::UnpaintedOntoPainted { k, r, t }
                    }
                }
                GraftKind::PaintedOntoUnpainted => GraftSpec::PaintedOntoUnpainted {
                    t: ts[0].leaves(),
                    rs: ts[1..].iter().map(Tree::leaves).collect(),
                },
            };
            spec.check()?;
            let g = operad::graft(&spec, &ts)?;
            let json = json!({"spec": spec.to_string(), "tree": g.to_json()});
            Ok(Output::new(g.encode(), json))
        }
        TreesCmd::LevelTest(input) => {
            let t = one_tree(input)?;
            let w = operad::level_decomposition(&t);
            let text = match &w {
                Some(w) => format!("true {}", witness_text(w)),
                None => "false".into(),
            };
            let json = json!({"level": w.is_some(), "witness": w.as_ref().map(witness_json)});
            Ok(Output::new(text, json))
        }
    }
}

fn complex_cmd(cmd: &ComplexCmd, exec: Exec) -> antypes::Result<Output> {
    let (ComplexCmd::Build(a)
    | ComplexCmd::FVector(a)
    | ComplexCmd::Euler(a)
    | ComplexCmd::Homology(a)
    | ComplexCmd::Export(a)) = cmd;
    let c = complex::build(
        a.family.into(),
        a.n,
        BuildOptions {
            exec,
            reverse: false,
        },
    )?;
    Ok(match cmd {
        ComplexCmd::Build(_) => {
            let mut lines = vec![format!(
                "{}_{} f-vector {}",
                c.family(),
                c.n(),
                join(c.f_vector())
            )];
            for (id, cell) in c.cells().iter().enumerate() {
                let faces: Vec<String> = c
                    .boundary_of(id)
                    .iter()
                    .map(|(f, k)| format!("{}{}", if *k < 0 { "-" } else { "+" }, f))
                    .collect();
                lines.push(format!(
                    "{id} {} {} : {}",
                    cell.dim,
                    cell.label,
                    faces.join(" ")
                ));
            }
            Output::new(lines.join("\n"), complex::export_complex(&c))
        }
        ComplexCmd::FVector(_) => Output::new(join(c.f_vector()), json!(c.f_vector())),
        ComplexCmd::Euler(_) => {
            let x = c.euler_characteristic();
            Output::new(x.to_string(), json!(x))
        }
        ComplexCmd::Homology(_) => {
            let b = c.homology_ranks(exec);
            Output::new(join(&b), json!(b))
        }
        ComplexCmd::Export(_) => {
            let j = complex::export_complex(&c);
            Output::new(j.to_string(), j)
        }
    })
}

fn rationals(qs: &[Rational]) -> Output {
    let s: Vec<String> = qs.iter().map(rational::format).collect();
    Output::new(s.join(" "), json!(s))
}

fn gauge_cmd(cmd: &GaugeCmd) -> antypes::Result<Output> {
    Ok(match cmd {
        GaugeCmd::Epsilon { n } => rationals(&gauge::epsilon_sequence(*n)?),
        GaugeCmd::Oracle { n } => rationals(&gauge::chern_oracle(*n)?),
        GaugeCmd::Divisor { n } => {
            let d = gauge::triviality_divisor(*n)?;
            let f = gauge::format_factorization(&gauge::factorize(&d));
            Output::new(
                d.to_string(),
                json!({"divisor": d.to_string(), "factorization": f}),
            )
        }
        GaugeCmd::Decide { k, primes, n } => {
            let v = gauge::decide_triviality(k, primes, *n)?;
            Output::new(
                v.to_string(),
                serde_json::to_value(v).expect("verdict serializes"),
            )
        }
        GaugeCmd::Congruence { primes } => {
            let PrimeSet::Finite(ps) = primes else {
                return Err(Error::Domain("--primes must list odd primes".into()));
            };
            let reports = ps
                .iter()
                .map(|&p| gauge::epsilon_congruence(p))
                .collect::<antypes::Result<Vec<_>>>()?;
            let mut out = Output::new(
                reports
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n"),
                serde_json::to_value(&reports).expect("reports serialize"),
            );
            out.ok = reports.iter().all(|r| r.holds());
            out
        }
        GaugeCmd::UnitClass { k, primes } => {
            let c = gauge::local_unit_class(k, primes)?;
            let vs: Vec<_> = c.iter().map(|(_, v)| *v).collect();
            Output::new(
                join(&vs),
                serde_json::to_value(&vs).expect("valuations serialize"),
            )
        }
        GaugeCmd::LowerBound { n, sharper } => {
            let b = gauge::lower_bound_types(*n, *sharper)?;
            Output::new(b.to_string(), json!(b.to_string()))
        }
        GaugeCmd::PrimePi { n } => {
            let p = gauge::prime_pi(*n);
            Output::new(p.to_string(), json!(p))
        }
    })
}

fn verify_cmd(cmd: &VerifyCmd, exec: Exec) -> antypes::Result<Output> {
    let VerifyCmd::Relations {
        max_leaves,
        samples,
    } = cmd;
    let samples = samples
        .split(',')
        .map(rational::parse)
        .collect::<antypes::Result<Vec<_>>>()?;
    let report = operad::verify_graft_relations(*max_leaves, &samples, exec)?;
    let checked: serde_json::Map<String, Value> = report
        .checked
        .iter()
        .map(|(r, n)| (r.to_string(), json!(n)))
        .collect();
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| json!({"relation": f.relation.to_string(), "instance": f.instance, "lhs": f.lhs, "rhs": f.rhs}))
        .collect();
    let mut out = Output::new(
        report.to_string().trim_end(),
        json!({"checked": checked, "failures": failures}),
    );
    out.ok = report.is_clean();
    Ok(out)
}

fn exec_for(jobs: Option<usize>) -> Result<Exec, String> {
    match jobs {
        Some(0) => Err("--jobs must be at least 1".into()),
        Some(1) => Ok(Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(j) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build_global()
                .map_err(|e| e.to_string())?;
            Ok(Exec::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Exec::Sequential),
        None if cfg!(feature = "parallel") => Ok(Exec::Parallel),
        None => Ok(Exec::Sequential),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = match exec_for(cli.jobs) {
        Ok(e) => e,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let result = match &cli.group {
        Group::Trees(c) => trees(c),
        Group::Complex(c) => complex_cmd(c, exec),
        Group::Gauge(c) => gauge_cmd(c),
        Group::Verify(c) => verify_cmd(c, exec),
    };
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
