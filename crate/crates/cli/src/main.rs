use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heavy_core::closure::check_closed_shape;
use heavy_core::families::{FamilySpec, CATALOG};
use heavy_core::harness::{self, Status, SuiteConfig, SUITES, TARGET_FORMS};
use heavy_core::{
    circumference, closure, graph_satisfies, hamiltonian_cycle, make_pattern, ClosureKind, ConditionKind, FamilyError,
    Graph, PatternKind, Policy,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "heavy", version, about = "Heavy-subgraph conditions, closures and cycle oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Does the graph satisfy a pattern condition?
    Check {
        #[arg(long)]
        graph: String,
        /// Pattern name such as P4, Z2, B11, N111, W, H, K112, claw.
        #[arg(long)]
        pattern: String,
        /// free, o, f, c or p (p applies to the net only).
        #[arg(long)]
        condition: String,
    },
    /// r- or c-closure with its trace and a shape report.
    Closure {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        kind: Kind,
        /// smallest or random:<seed>
        #[arg(long, default_value = "smallest")]
        policy: String,
        /// Include every completion step.
        #[arg(long)]
        trace: bool,
    },
    /// Exact hamiltonicity or circumference.
    Oracle {
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        query: OracleQuery,
    },
    /// Print a named graph as graph6.
    Gen {
        #[arg(long, required_unless_present = "list")]
        family: Option<String>,
        /// key=value,... (x1,x2,x3 for pfam; r; k,r[,variant]; t,r)
        #[arg(long, default_value = "")]
        params: String,
        /// Print the graph even if one of its construction claims fails.
        #[arg(long)]
        unchecked: bool,
        /// Print the family catalog.
        #[arg(long)]
        list: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        /// Largest order of the exhaustive corpora (at most 7).
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Accepted graphs per sampled corpus.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the suite names.
        #[arg(long)]
        list: bool,
    },
    /// Search for counterexamples to a named property.
    Hunt {
        /// closure-preserves-<S>-<condition>, closure-no-heavy-pair or
        /// <S>-<condition>-implies-hamiltonian
        #[arg(long)]
        predicate: String,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    R,
    C,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct OracleQuery {
    #[arg(long)]
    hamiltonian: bool,
    #[arg(long)]
    circumference: bool,
}

enum Failure {
    Usage(String),
    Violations(Value),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_graph(text: &str) -> Result<Graph, Failure> {
    Graph::from_graph6(text.trim()).map_err(usage)
}

fn emit(value: &Value, out: Option<&PathBuf>) -> Result<(), Failure> {
    write_out(serde_json::to_string_pretty(value).map_err(usage)?, out)
}

fn write_out(text: String, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text + "\n").map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => print(&text),
    }
}

/// Writes a line to stdout; a closed pipe ends output quietly.
fn print(text: &str) -> Result<(), Failure> {
    match writeln!(io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(usage(e)),
        _ => Ok(()),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<Value, Failure> {
    serde_json::to_value(v).map_err(usage)
}

fn check(graph: &str, pattern: &str, condition: &str) -> Result<Value, Failure> {
    let g = parse_graph(graph)?;
    let kind: PatternKind = pattern.parse().map_err(usage)?;
    let spec = make_pattern(kind).map_err(usage)?;
    let condition: ConditionKind = condition.parse().map_err(usage)?;
    let verdict = graph_satisfies(&g, &spec, condition).map_err(usage)?;
    to_json(&verdict)
}

fn run_closure(graph: &str, kind: Kind, policy: &str, trace: bool) -> Result<Value, Failure> {
    let g = parse_graph(graph)?;
    let kind = match kind {
        Kind::R => ClosureKind::R,
        Kind::C => ClosureKind::C,
    };
    let policy: Policy = policy.parse().map_err(usage)?;
    let (h, steps) = closure(&g, kind, policy).map_err(usage)?;
    let mut out = json!({
        "closure_graph6": h.to_graph6(),
        "added_edges": h.edge_count() - g.edge_count(),
        "step_count": steps.steps.len(),
        "shape_report": to_json(&check_closed_shape(&h, kind))?,
    });
    if trace {
        out["steps"] = to_json(&steps.steps)?;
    }
    Ok(out)
}

fn oracle(graph: &str, query: &OracleQuery) -> Result<Value, Failure> {
    let g = parse_graph(graph)?;
    if query.hamiltonian {
        let cycle = hamiltonian_cycle(&g).map_err(usage)?;
        Ok(json!({ "value": cycle.is_some(), "certificate": to_json(&cycle)? }))
    } else {
        let c = circumference(&g).map_err(usage)?;
        Ok(json!({ "value": c.length, "certificate": to_json(&c.certificate)? }))
    }
}

fn generate(family: &str, params: &str, unchecked: bool) -> Result<String, Failure> {
    let spec = FamilySpec::parse(family, params).map_err(usage)?;
    let built = if unchecked { spec.build_unchecked() } else { spec.build() };
    match built {
        Ok(f) => Ok(f.graph.to_graph6()),
        Err(FamilyError::ClaimFailed { family, claim }) => {
            let f = spec.build_unchecked().map_err(usage)?;
            Err(Failure::Violations(json!({
                "family": family,
                "failed_claim": claim,
                "graph6": f.graph.to_graph6(),
            })))
        }
        Err(e) => Err(usage(e)),
    }
}

fn list_catalog() -> String {
    CATALOG.iter().map(|e| format!("{:<10} {:<14} {}", e.name, e.params, e.constraint)).collect::<Vec<_>>().join("\n")
}

fn verify(suite: &str, cfg: SuiteConfig, out: Option<&PathBuf>) -> Result<(), Failure> {
    if cfg.n_max > 7 {
        return Err(usage(format!("--n-max is at most 7, got {}", cfg.n_max)));
    }
    let report = harness::verify(suite, &cfg).map_err(usage)?;
    eprint!("{}", report.summary());
    write_out(report.to_json(), out)?;
    if report.status == Status::Failed {
        return Err(Failure::Violations(Value::Null));
    }
    Ok(())
}

fn hunt(predicate: &str, budget: u64, seed: u64, out: Option<&PathBuf>) -> Result<(), Failure> {
    let target =
        harness::target(predicate).map_err(|e| usage(format!("{e}; expected one of: {}", TARGET_FORMS.join(", "))))?;
    let report = harness::hunt(&target, budget, seed).map_err(usage)?;
    emit(&to_json(&report)?, out)?;
    if report.witnesses.is_empty() {
        Ok(())
    } else {
        Err(Failure::Violations(Value::Null))
    }
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Check { graph, pattern, condition } => emit(&check(&graph, &pattern, &condition)?, None),
        Command::Closure { graph, kind, policy, trace } => emit(&run_closure(&graph, kind, &policy, trace)?, None),
        Command::Oracle { graph, query } => emit(&oracle(&graph, &query)?, None),
        Command::Gen { list: true, .. } => print(&list_catalog()),
        Command::Gen { family, params, unchecked, .. } => {
            let family = family.ok_or_else(|| usage("--family is required"))?;
            print(&generate(&family, &params, unchecked)?)
        }
        Command::Verify { list: true, .. } => {
            print(&SUITES.iter().map(|(name, about)| format!("{name:<20} {about}")).collect::<Vec<_>>().join("\n"))
        }
        Command::Verify { suite, n_max, samples, seed, out, .. } => {
            let suite = suite.ok_or_else(|| usage("--suite is required"))?;
            verify(&suite, SuiteConfig { n_max, samples, seed }, out.as_ref())
        }
        Command::Hunt { predicate, budget, seed, out } => hunt(&predicate, budget, seed, out.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violations(detail)) => {
            if !detail.is_null() {
                eprintln!("{detail}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
