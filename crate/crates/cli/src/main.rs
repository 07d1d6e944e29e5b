use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use coxeter::analysis::GroupAnalysis;
use coxeter::automata;
use coxeter::shadows::ShadowSet;
use coxeter::verify::{self, Check, CheckResult};
use coxeter::{presets, CoxeterError, CoxeterSystem, Element};

#[derive(Parser)]
#[command(name = "coxeter", version, about = "Gates, tight gates and cone types of Coxeter groups")]
struct Cli {
    #[command(flatten)]
    group: GroupArgs,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// Named group, e.g. affine-G2, I2:5, rank3:I:3:7, cycle:3,3,4,3.
    #[arg(long, global = true, conflicts_with = "matrix")]
    preset: Option<String>,

    /// JSON file with "generators" and "matrix"; 0 or "inf" is an infinite label.
    #[arg(long, global = true)]
    matrix: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    #[value(name = "paper")]
    Published,
    Props,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, labels and field.
    Info,
    /// Elementary roots.
    Elementary,
    /// Low elements.
    Low,
    /// Gates of the cone type partition.
    Gates,
    /// Gates with a single final root.
    TightGates,
    /// Final roots of the tight gates.
    SuperElementary,
    /// Reduced-word automaton.
    Automaton {
        /// States are elementary inversion sets.
        #[arg(long, conflicts_with = "min")]
        raw: bool,
        /// States are cone types (the default).
        #[arg(long)]
        min: bool,
        /// Write Graphviz output to a file.
        #[arg(long)]
        dot: Option<String>,
        /// Write JSON output to a file.
        #[arg(long)]
        json: Option<String>,
    },
    /// Canonical join representation of an element.
    CanonicalJoin { word: String },
    /// Minimal witness for the inversion with the given index (root-sequence order, from 0).
    Witness { word: String, root_index: usize },
    /// Whether an element is ultra-low.
    Ultralow { word: String },
    /// Whether two elements have the same cone type.
    ConetypeEqual { first: String, second: String },
    /// |E| |S| |L| |L0| |Gamma| |Gamma0|.
    Table,
    /// Run the published-data checks or the property checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Published)]
        suite: Suite,
        /// Include the rank 5 table row.
        #[arg(long)]
        extra: bool,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<CoxeterError> for Failure {
    fn from(e: CoxeterError) -> Self {
        match e {
            CoxeterError::Invariant(_) | CoxeterError::CapExhausted(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
    }
}

fn load_group(args: &GroupArgs) -> Result<CoxeterSystem, Failure> {
    match (&args.preset, &args.matrix) {
        (Some(p), _) => Ok(presets::preset(p)?),
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {}", path, e)))?;
            Ok(CoxeterSystem::from_json(&text)?)
        }
        (None, None) => Err(Failure::Usage("give a group with --preset or --matrix".into())),
    }
}

fn emit(format: Format, text: String, value: Value) {
    match format {
        Format::Text => println!("{}", text),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
    }
}

fn write_file(path: &str, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::Usage(format!("cannot write {}: {}", path, e)))
}

fn shadow_text(g: &GroupAnalysis, set: &ShadowSet) -> String {
    let cat = g.catalog();
    let sys = g.sys();
    let mut lines = vec![format!("{} elements", set.len())];
    for x in set.iter() {
        let roots: Vec<String> = cat.roots(&cat.info(x).final_roots).iter().map(|r| r.to_string()).collect();
        lines.push(format!("{}  {}", sys.element_string(x), roots.join(" ")));
    }
    lines.join("\n")
}

fn set_literal(sys: &CoxeterSystem, xs: &[Element]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("\"{}\"", sys.element_string(x))).collect();
    format!("{{{}}}", parts.join(","))
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    if let Command::Verify { suite, extra } = &cli.command {
        return Ok(run_verify(*suite, *extra, cli.format));
    }
    let sys = Arc::new(load_group(&cli.group)?);
    let g = GroupAnalysis::new(sys.clone());
    let cat = g.catalog();
    let fmt = cli.format;
    match &cli.command {
        Command::Info => {
            let n = sys.rank();
            let labels: Vec<Vec<String>> =
                (0..n).map(|i| (0..n).map(|j| sys.label(i, j).to_string()).collect()).collect();
            let text = format!(
                "rank {}\ngenerators {}\nfield Q(2cos(pi/{})) of degree {}\n{}",
                n,
                sys.names().join(" "),
                sys.field().order(),
                sys.field().degree(),
                labels.iter().map(|r| r.join(" ")).collect::<Vec<_>>().join("\n")
            );
            let value = json!({
                "rank": n,
                "generators": sys.names(),
                "labels": labels,
                "field_order": sys.field().order(),
                "field_degree": sys.field().degree(),
            });
            emit(fmt, text, value);
        }
        Command::Elementary => {
            let roots: Vec<_> = g.catalog().elementary().0.iter().map(|&id| cat.root(id)).collect();
            let text = std::iter::once(format!("{} elementary roots", roots.len()))
                .chain(roots.iter().map(|r| r.to_string()))
                .collect::<Vec<_>>()
                .join("\n");
            emit(fmt, text, json!(roots.iter().map(|r| r.to_json()).collect::<Vec<_>>()));
        }
        Command::Low => {
            let set = g.low().clone();
            emit(fmt, shadow_text(&g, &set), set.to_json(cat));
        }
        Command::Gates => {
            let set = g.gates()?;
            emit(fmt, shadow_text(&g, &set), set.to_json(cat));
        }
        Command::TightGates => {
            let set = g.tight_gates().clone();
            emit(fmt, shadow_text(&g, &set), set.to_json(cat));
        }
        Command::SuperElementary => {
            let roots: Vec<_> = g.shadows().tight_gate_search().super_elementary.iter().map(|&id| cat.root(id)).collect();
            let text = std::iter::once(format!("{} super-elementary roots", roots.len()))
                .chain(roots.iter().map(|r| r.to_string()))
                .collect::<Vec<_>>()
                .join("\n");
            emit(fmt, text, json!(roots.iter().map(|r| r.to_json()).collect::<Vec<_>>()));
        }
        Command::Automaton { raw, min: _, dot, json: json_path } => {
            let a = if *raw { g.raw_automaton().clone() } else { g.annotated_minimized()? };
            if let Some(p) = dot {
                write_file(p, &a.to_dot())?;
            }
            if let Some(p) = json_path {
                write_file(p, &(serde_json::to_string_pretty(&a.to_json()).expect("serializable") + "\n"))?;
            }
            if dot.is_none() && json_path.is_none() {
                let text = format!("{} states, {} transitions\n{}", a.state_count(), a.edges().len(), a.to_dot().trim_end());
                emit(fmt, text, a.to_json());
            }
        }
        Command::CanonicalJoin { word } => {
            let w = sys.parse_element(word)?;
            let cj = coxeter::weak_order::canonical_join_representation(cat, &w)?;
            let words: Vec<String> = cj.iter().map(|x| sys.element_string(x)).collect();
            emit(fmt, set_literal(&sys, &cj), json!(words));
        }
        Command::Witness { word, root_index } => {
            let w = sys.parse_element(word)?;
            let info = cat.info(&w);
            let beta = *info
                .sequence
                .get(*root_index)
                .ok_or(CoxeterError::RootIndex { index: *root_index, len: info.sequence.len() })?;
            let rec = g.shadows().witness_record(&w, beta)?;
            let wit = rec.witness.as_ref().map(|y| sys.element_string(y));
            let text = format!("root {}\nwitness {}", rec.root, wit.clone().unwrap_or_else(|| "none".into()));
            emit(fmt, text, json!({"root": rec.root.to_json(), "witness": wit}));
        }
        Command::Ultralow { word } => {
            let w = sys.parse_element(word)?;
            let b = g.shadows().is_ultra_low(&w)?;
            emit(fmt, b.to_string(), json!(b));
        }
        Command::ConetypeEqual { first, second } => {
            let x = sys.parse_element(first)?;
            let y = sys.parse_element(second)?;
            let by_automaton = automata::cone_type_equal(g.minimized(), &x, &y);
            let by_gates = automata::cone_type_equal_by_tight_gates(cat, g.tight_gates().elements(), &x, &y);
            if by_automaton != by_gates {
                return Err(Failure::Verification("cone type routes disagree".into()));
            }
            emit(fmt, by_automaton.to_string(), json!(by_automaton));
        }
        Command::Table => {
            eprintln!("computing table row");
            let row = g.table_row()?;
            let a = row.as_array();
            let value = json!({"E": a[0], "S": a[1], "L": a[2], "L0": a[3], "Gamma": a[4], "Gamma0": a[5]});
            emit(fmt, row.to_string(), value);
        }
        Command::Verify { .. } => unreachable!("handled above"),
    }
    Ok(true)
}

fn run_verify(suite: Suite, extra: bool, fmt: Format) -> bool {
    let checks: Vec<(String, Check)> = match suite {
        Suite::Published => verify::published_checks(extra).into_iter().map(|(k, c)| (format!("criterion {}", k), c)).collect(),
        Suite::Props => verify::property_checks().into_iter().map(|(k, c)| (k.to_string(), c)).collect(),
    };
    let threads = std::env::var("COXETER_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
    let total = checks.len();
    let results: Vec<(String, CheckResult)> = pool.install(|| {
        checks
            .par_iter()
            .map(|(group, c)| {
                let r = c.run();
                eprintln!("{} {}", if r.passed { "ok" } else { "FAILED" }, r.name);
                (group.clone(), r)
            })
            .collect()
    });
    let passed = results.iter().filter(|(_, r)| r.passed).count();
    let text = results
        .iter()
        .map(|(g, r)| format!("[{}] {}", g, r))
        .chain(std::iter::once(format!("{}/{} checks passed", passed, total)))
        .collect::<Vec<_>>()
        .join("\n");
    let value = json!({
        "passed": passed,
        "total": total,
        "checks": results.iter().map(|(g, r)| json!({"group": g, "name": r.name, "passed": r.passed, "detail": r.detail})).collect::<Vec<_>>(),
    });
    emit(fmt, text, value);
    passed == total
}
