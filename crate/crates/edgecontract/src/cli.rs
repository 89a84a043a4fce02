//! Argument grammar and command dispatch. Exit codes: 0 success or passing
//! verification, 1 failing verification, 2 usage or input error.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgecontract_core::cellgraph::{enumerate_graphs, random_graph, CellGraph};
use edgecontract_core::exactmath::{int, Rational};
use edgecontract_core::frobenius::FrobeniusAlgebra;
use edgecontract_core::hgraph::{enumerate_classes, DEFAULT_ENUMERATION_CAP};
use edgecontract_core::hurwitz::{calh, factorization_count, hurwitz_h, jpt_01, jpt_02, partitions, HurwitzTable, Profile};
use edgecontract_core::mirror::{spectral_y, verify_f01, verify_f02, Report, F02_MAX_ORDER};
use edgecontract_core::tqft::{evaluate, verify_independence, Strategy};
use serde_json::{json, Value};

use crate::format::{self, rational};
use crate::keys::algebra_from_key;
use crate::suite;

#[derive(Parser, Debug)]
#[command(name = "edgecontract", version, about = "Exact edge-contraction computations for 2D TQFTs and orbifold Hurwitz numbers")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate or verify TQFT values on cell graphs
    Tqft {
        #[command(subcommand)]
        command: TqftCommand,
    },
    /// Orbifold Hurwitz numbers from the edge-contraction recursion
    Hurwitz(HurwitzArgs),
    /// Arrowed r-Hurwitz graphs
    Hgraph {
        #[command(subcommand)]
        command: HgraphCommand,
    },
    /// The r-Lambert curve and free-energy identities
    Mirror {
        #[command(subcommand)]
        command: MirrorCommand,
    },
    /// Cell graph utilities
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// Run the acceptance suite
    VerifyAll {
        #[arg(long, value_enum, default_value = "desk")]
        level: Level,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Level {
    Desk,
}

#[derive(Subcommand, Debug)]
enum TqftCommand {
    /// Value of the TQFT on one graph
    Eval {
        /// Algebra key or JSON file
        #[arg(long)]
        algebra: String,
        /// Graph JSON file
        #[arg(long)]
        graph: String,
        /// Slot vectors: JSON text or a file holding it
        #[arg(long)]
        vectors: String,
        /// least | greatest | loops-first | seeded:<u64>
        #[arg(long, default_value = "least", value_parser = parse_strategy)]
        strategy: Strategy,
    },
    /// Compare evaluation with the closed form on many graphs
    Verify {
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        #[arg(long)]
        algebra: String,
        /// Number of random graphs besides the enumerated ones
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct HurwitzArgs {
    #[command(subcommand)]
    command: Option<HurwitzCommand>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    g: Option<i64>,
    #[arg(long, value_delimiter = ',')]
    mu: Vec<u32>,
    #[arg(long, value_enum)]
    oracle: Option<Oracle>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Jpt,
    Factorization,
    Hgraph,
    All,
}

#[derive(Subcommand, Debug)]
enum HurwitzCommand {
    /// All values up to a degree, rows ordered by (g, n, μ)
    Table {
        #[arg(long)]
        r: u32,
        /// A genus or an inclusive range a..b
        #[arg(long, value_parser = parse_range)]
        g: RangeInclusive<i64>,
        #[arg(long)]
        d_max: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum HgraphCommand {
    /// Isomorphism classes with their weights
    Count {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        g: i64,
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<u32>,
    },
}

#[derive(Subcommand, Debug)]
enum MirrorCommand {
    /// y(x) and x(z) as series
    Spectral {
        #[arg(long)]
        r: u32,
        #[arg(long = "N")]
        n: u32,
    },
    /// Check the F01 and F02 closed forms
    Verify {
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<u32>,
        #[arg(long = "N")]
        n: u32,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    /// Canonical JSON of a graph
    Canon {
        #[arg(long)]
        graph: String,
    },
    /// Genus, vertices, faces and automorphisms
    Type {
        #[arg(long)]
        graph: String,
    },
    /// A random connected graph
    Random {
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        genus: Option<u32>,
        #[arg(long)]
        vertices: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every connected graph up to isomorphism
    Enumerate {
        #[arg(long)]
        max_edges: usize,
    },
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    match s {
        "least" => Ok(Strategy::LeastEdge),
        "greatest" => Ok(Strategy::GreatestEdge),
        "loops-first" => Ok(Strategy::LoopsFirst),
        _ => s
            .strip_prefix("seeded:")
            .and_then(|n| n.parse().ok())
            .map(Strategy::Seeded)
            .ok_or_else(|| "expected least, greatest, loops-first or seeded:<u64>".into()),
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || format!("expected a number or a..b, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => s.parse().map(|g| g..=g).map_err(|_| bad()),
    }
}

/// What a command produced: text for stdout and the exit code.
struct Done {
    text: String,
    code: i32,
}

impl Done {
    fn ok(v: Value) -> Self {
        Done {
            text: serde_json::to_string_pretty(&v).expect("serializable"),
            code: 0,
        }
    }

    fn verdict(v: Value, passed: bool) -> Self {
        Done {
            code: if passed { 0 } else { 1 },
            ..Done::ok(v)
        }
    }
}

/// An input problem: reported on stderr with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<Done, InputError>;

/// Runs the command line `argv` (program name first).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(done) => {
            if !done.text.is_empty() {
                let _ = writeln!(out, "{}", done.text);
            }
            done.code
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Tqft { command } => tqft(command),
        Command::Hurwitz(args) => hurwitz(args),
        Command::Hgraph { command: HgraphCommand::Count { r, g, mu } } => hgraph_count(r, g, &mu),
        Command::Mirror { command } => mirror(command),
        Command::Graph { command } => graph(command),
        Command::VerifyAll { level: Level::Desk, seed } => {
            let mut passed = true;
            for c in suite::criteria() {
                let o = c.run(seed);
                passed &= o.passed;
                writeln!(out, "{}", o.line())?;
            }
            let text = format!("verify-all: {}", if passed { "PASS" } else { "FAIL" });
            Ok(Done {
                text,
                code: if passed { 0 } else { 1 },
            })
        }
    }
}

fn read(path: &str) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))
}

fn load_algebra(given: &str) -> Result<Arc<FrobeniusAlgebra>, InputError> {
    match algebra_from_key(given) {
        Ok(a) => Ok(a),
        Err(e) if Path::new(given).is_file() => {
            format::parse_algebra(&read(given)?).map_err(|f| InputError(format!("{given}: {f} (not a key either: {e})")))
        }
        Err(e) => Err(e.into()),
    }
}

fn load_graph(path: &str) -> Result<CellGraph, InputError> {
    format::parse_graph(&read(path)?).map_err(|e| InputError(format!("{path}: {e}")))
}

fn type_json(g: &CellGraph) -> Value {
    match g.graph_type() {
        Ok(t) => json!({"g": t.g, "n": t.n}),
        Err(_) => json!({"components": g.component_types().iter().map(|t| json!({"g": t.g, "n": t.n})).collect::<Vec<_>>()}),
    }
}

fn tqft(command: TqftCommand) -> Outcome {
    match command {
        TqftCommand::Eval {
            algebra,
            graph,
            vectors,
            strategy,
        } => {
            let a = load_algebra(&algebra)?;
            let g = load_graph(&graph)?;
            let text = if vectors.trim_start().starts_with('[') { vectors } else { read(&vectors)? };
            let vs = format::parse_vectors(&text, &a)?;
            let value = evaluate(&g, &vs, strategy)?;
            Ok(Done::ok(json!({"value": rational(&value), "type": type_json(&g)})))
        }
        TqftCommand::Verify {
            max_edges,
            algebra,
            trials,
            seed,
        } => {
            let a = load_algebra(&algebra)?;
            // exhaustive enumeration is practical to four edges; beyond that, random graphs
            let mut graphs = enumerate_graphs(max_edges.min(4));
            let enumerated = graphs.len();
            for k in 0..trials {
                graphs.push(random_graph(None, None, k % (max_edges + 1), seed.wrapping_add(k as u64))?);
            }
            let mut evaluations = 0;
            for (k, g) in graphs.iter().enumerate() {
                match verify_independence(g, &a, 3, seed ^ k as u64) {
                    Ok(rep) => evaluations += rep.evaluations,
                    Err(e) => {
                        let v = json!({"passed": false, "graph": format::graph_json(g), "failure": e.to_string()});
                        return Ok(Done::verdict(v, false));
                    }
                }
            }
            let v = json!({"passed": true, "enumerated": enumerated, "random": trials, "evaluations": evaluations});
            Ok(Done::verdict(v, true))
        }
    }
}

fn oracle_check(value: Option<Rational>, want: &Rational) -> (Value, bool) {
    match value {
        Some(v) => {
            let agrees = &v == want;
            (json!({"calH": rational(&v), "agrees": agrees}), agrees)
        }
        None => (json!({"applicable": false}), true),
    }
}

fn hurwitz(args: HurwitzArgs) -> Outcome {
    if let Some(HurwitzCommand::Table { r, g, d_max, format }) = args.command {
        return hurwitz_table(r, g, d_max, format);
    }
    let (Some(r), Some(g)) = (args.r, args.g) else {
        return Err(InputError("hurwitz needs --r, --g and --mu (or the table subcommand)".into()));
    };
    if args.mu.is_empty() || r == 0 {
        return Err(InputError("hurwitz needs r >= 1 and a nonempty --mu".into()));
    }
    let mu = args.mu;
    let value = calh(r, g, &mu);
    let times_mu = |h: Rational| h * mu.iter().map(|&m| int(m.into())).product::<Rational>();
    let mut checks = serde_json::Map::new();
    let mut passed = true;
    let wanted = |o: Oracle| args.oracle == Some(o) || args.oracle == Some(Oracle::All);
    if wanted(Oracle::Jpt) {
        let closed = match (g, mu.as_slice()) {
            (0, &[d]) => Some(times_mu(jpt_01(r, d))),
            (0, &[a, b]) => Some(times_mu(jpt_02(r, a, b))),
            _ => None,
        };
        let (v, ok) = oracle_check(closed, &value);
        passed &= ok;
        checks.insert("jpt".into(), v);
    }
    if wanted(Oracle::Factorization) {
        let v = match factorization_count(r, g, &mu) {
            Ok(h) => {
                let (v, ok) = oracle_check(Some(times_mu(h)), &value);
                passed &= ok;
                v
            }
            Err(e) => json!({"applicable": false, "reason": e.to_string()}),
        };
        checks.insert("factorization".into(), v);
    }
    if wanted(Oracle::Hgraph) {
        let v = match enumerate_classes(r, g, &mu, DEFAULT_ENUMERATION_CAP) {
            Ok(classes) => {
                let (v, ok) = oracle_check(Some(classes.into_iter().map(|c| c.weight).sum()), &value);
                passed &= ok;
                v
            }
            Err(e) => json!({"applicable": false, "reason": e.to_string()}),
        };
        checks.insert("hgraph".into(), v);
    }
    let v = json!({
        "r": r,
        "g": g,
        "mu": mu,
        "calH": rational(&value),
        "H": rational(&hurwitz_h(r, g, &mu)),
        "checks": checks,
    });
    Ok(Done::verdict(v, passed))
}

fn hurwitz_table(r: u32, gs: RangeInclusive<i64>, d_max: u32, format: TableFormat) -> Outcome {
    if r == 0 {
        return Err(InputError("r must be positive".into()));
    }
    let mut profiles: Vec<Vec<u32>> = (1..=d_max).filter(|d| d % r == 0).flat_map(partitions).collect();
    profiles.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let mut table = HurwitzTable::new(r);
    let mut rows = Vec::new();
    for g in gs {
        for mu in &profiles {
            if !Profile::new(r, g, mu).is_admissible() {
                continue;
            }
            let value = table.get(g, mu);
            let h = value.clone() / mu.iter().map(|&m| int(m.into())).product::<Rational>();
            rows.push((g, mu.clone(), value, h));
        }
    }
    let text = match format {
        TableFormat::Json => serde_json::to_string_pretty(&json!(rows
            .iter()
            .map(|(g, mu, c, h)| json!({"g": g, "n": mu.len(), "mu": mu, "calH": rational(c), "H": rational(h)}))
            .collect::<Vec<_>>()))?,
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["r", "g", "n", "mu", "calH", "H"])?;
            for (g, mu, c, h) in &rows {
                let mu: Vec<String> = mu.iter().map(u32::to_string).collect();
                w.write_record([r.to_string(), g.to_string(), mu.len().to_string(), mu.join(" "), rational(c), rational(h)])?;
            }
            String::from_utf8(w.into_inner()?)?.trim_end().to_string()
        }
    };
    Ok(Done { text, code: 0 })
}

fn hgraph_count(r: u32, g: i64, mu: &[u32]) -> Outcome {
    let classes = enumerate_classes(r, g, mu, DEFAULT_ENUMERATION_CAP)?;
    let total: Rational = classes.iter().map(|c| c.weight.clone()).sum();
    let want = calh(r, g, mu);
    let list: Vec<Value> = classes
        .iter()
        .map(|c| {
            json!({
                "graph": format::hurwitz_graph_json(&c.graph),
                "automorphisms": c.automorphisms,
                "labelings": c.labelings,
                "arrowings": c.arrowings,
                "weight": rational(&c.weight),
            })
        })
        .collect();
    let agrees = total == want;
    let v = json!({"r": r, "g": g, "mu": mu, "classes": list, "total": rational(&total), "calH": rational(&want), "agrees": agrees});
    Ok(Done::verdict(v, agrees))
}

fn report_json(rep: &Report) -> Value {
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|c| {
            let first = c
                .mismatch
                .as_ref()
                .map(|m| json!({"exponent": m.exponent, "lhs": rational(&m.lhs), "rhs": rational(&m.rhs)}));
            json!({"name": c.name, "passed": c.mismatch.is_none(), "first_mismatch": first})
        })
        .collect();
    json!({"identity": rep.identity, "r": rep.r, "N": rep.order, "passed": rep.passed(), "checks": checks})
}

fn mirror(command: MirrorCommand) -> Outcome {
    match command {
        MirrorCommand::Spectral { r, n } => {
            let c = spectral_y(r, n)?;
            Ok(Done::ok(json!({
                "r": r,
                "N": n,
                "y_of_x": format::series_json(&c.y_of_x),
                "x_of_z": format::series_json(&c.x_of_z),
            })))
        }
        MirrorCommand::Verify { r, n } => {
            if n == 0 || n > F02_MAX_ORDER {
                return Err(InputError(format!("--N must be between 1 and {F02_MAX_ORDER}")));
            }
            let mut reports = Vec::new();
            let mut passed = true;
            for &r in &r {
                for rep in [verify_f01(r, n)?, verify_f02(r, n)?] {
                    passed &= rep.passed();
                    reports.push(report_json(&rep));
                }
            }
            Ok(Done::verdict(json!({"passed": passed, "reports": reports}), passed))
        }
    }
}

fn graph(command: GraphCommand) -> Outcome {
    match command {
        GraphCommand::Canon { graph } => Ok(Done {
            text: format::canonical_graph_text(&load_graph(&graph)?),
            code: 0,
        }),
        GraphCommand::Type { graph } => {
            let g = load_graph(&graph)?;
            let mut v = type_json(&g);
            if let Ok(t) = g.graph_type() {
                v["faces"] = json!(t.faces);
            }
            v["edges"] = json!(g.edge_count());
            v["automorphisms"] = json!(g.automorphism_count());
            Ok(Done::ok(v))
        }
        GraphCommand::Random {
            edges,
            genus,
            vertices,
            seed,
        } => Ok(Done::ok(format::graph_json(&random_graph(genus, vertices, edges, seed)?))),
        GraphCommand::Enumerate { max_edges } => {
            let graphs = enumerate_graphs(max_edges);
            let list: Vec<Value> = graphs.iter().map(format::graph_json).collect();
            Ok(Done::ok(json!({"count": list.len(), "graphs": list})))
        }
    }
}
