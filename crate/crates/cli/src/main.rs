//! `ambicolor` command-line frontend.
//!
//! Exit codes: 0 success, 1 counterexample found, 2 input error, 3 resource
//! bound exceeded.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ambicolor::coloring::count_colorings;
use ambicolor::dfold::{build_graph_d, ColorTensor};
use ambicolor::extremal::{ambiguous_max_edges, brute_force_max_edges, reports_to_tsv, verify_turan_theorem};
use ambicolor::graph::build_graph;
use ambicolor::graph::io::{parse_graph_auto, to_edge_list};
use ambicolor::matrix::{classify, io as matrix_io};
use ambicolor::maximality::{is_maximal_ambiguous, reconstruct_matrix, verify_theorem1};
use ambicolor::perfection::verify_perfectness;
use ambicolor::{Error, Limits, SimpleGraph};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "ambicolor", version, about = "Maximal ambiguously k-colorable graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    #[value(name = "1")]
    Characterization,
    Turan,
    Perfect,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a color matrix (JSON or whitespace text, `-` for stdin).
    Classify { input: PathBuf },
    /// Write the edge list of G(A) for a matrix or tensor.
    Build {
        input: PathBuf,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count k-colorings of a graph (edge list or graph6).
    Count {
        input: PathBuf,
        #[arg(short)]
        k: usize,
        /// Stop counting once this many colorings are found.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Decide whether a graph is maximal ambiguously k-colorable.
    CheckMaximal {
        input: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Recover a desirable matrix A with G ≅ G(A).
    Reconstruct {
        input: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Run an exhaustive verification harness.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        k_list: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Raise the exhaustive enumeration bound from 7 to 8 vertices.
        #[arg(long)]
        allow_n8: bool,
    },
    /// Tabulate the maximum edge count of ambiguously k-colorable graphs.
    Table {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        /// Add a column computed by exhaustive search.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        allow_n8: bool,
    },
}

enum Failure {
    Input(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Text to print and whether a counterexample was found.
struct Outcome {
    stdout: String,
    counterexample: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, counterexample: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(if out.counterexample { 1 } else { 0 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Classify { input } => {
            no_tsv(format, "classify")?;
            let a = matrix_io::parse_auto(&read_input(input)?)?;
            let class = classify(&a);
            Ok(Outcome::ok(match format {
                Format::Json => json_line(json!({ "matrix": a, "class": class })),
                _ => {
                    let mut s = class.summary() + "\n";
                    if let Some(block) = &class.normal_block {
                        let _ = writeln!(s, "block: {}", join_nums(block));
                    }
                    if !class.special_tags.is_empty() {
                        let tags: Vec<String> = class.special_tags.iter().map(|t| format!("{t:?}").to_lowercase()).collect();
                        let _ = writeln!(s, "special: {}", tags.join(" "));
                    }
                    let _ = writeln!(s, "balanced: rows={} columns={}", yes_no(class.balance.0), yes_no(class.balance.1));
                    s
                }
            }))
        }
        Command::Build { input, out } => {
            no_tsv(format, "build")?;
            let text = read_input(input)?;
            let g = if text.contains("entries_flat") {
                build_graph_d(&ColorTensor::from_json(&text)?)?
            } else {
                build_graph(&matrix_io::parse_auto(&text)?)?
            };
            let edges = to_edge_list(&g);
            let stdout = match out {
                Some(path) => {
                    std::fs::write(path, &edges)
                        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
                    match format {
                        Format::Json => json_line(json!({ "n": g.n(), "m": g.edge_count(), "out": path })),
                        _ => String::new(),
                    }
                }
                None => match format {
                    Format::Json => json_line(json!({ "n": g.n(), "m": g.edge_count(), "edges": g.edges() })),
                    _ => edges,
                },
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Count { input, k, cap } => {
            no_tsv(format, "count")?;
            let g = read_graph(input)?;
            let cap = cap.unwrap_or(usize::MAX);
            let count = count_colorings(&g, *k, cap);
            Ok(Outcome::ok(match format {
                Format::Json => json_line(json!({ "k": k, "count": count, "capped": count >= cap })),
                _ => format!("{count}\n"),
            }))
        }
        Command::CheckMaximal { input, k } => {
            no_tsv(format, "check-maximal")?;
            let g = read_graph(input)?;
            let maximal = is_maximal_ambiguous(&g, *k);
            Ok(Outcome::ok(match format {
                Format::Json => json_line(json!({ "k": k, "maximal": maximal })),
                _ => format!("{maximal}\n"),
            }))
        }
        Command::Reconstruct { input, k } => {
            no_tsv(format, "reconstruct")?;
            let g = read_graph(input)?;
            let (a, trace) = reconstruct_matrix(&g, *k)?;
            let class = classify(&a);
            Ok(Outcome::ok(match format {
                Format::Text => format!("{}\n{}", class.summary(), matrix_io::to_text(&a)),
                _ => json_line(json!({ "matrix": a, "class": class.summary(), "trace": trace })),
            }))
        }
        Command::Verify { theorem, max_n, k_list, jobs, allow_n8 } => {
            let limits = limits(*allow_n8);
            let jobs = (*jobs).max(1);
            match theorem {
                Theorem::Characterization => {
                    no_tsv(format, "verify --theorem 1")?;
                    let report = verify_theorem1(*max_n, k_list, jobs, &limits)?;
                    let bad = report.counterexample_count() > 0;
                    let stdout = match format {
                        Format::Json => json_line(report),
                        _ => {
                            let mut s = String::from("n\tk\tgraphs\tmaximal\tmatched\tmatrices\tcounterexamples\n");
                            for r in &report.rows {
                                let _ = writeln!(
                                    s,
                                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                                    r.n,
                                    r.k,
                                    r.graphs,
                                    r.maximal_ambiguous,
                                    r.matched_by_matrix,
                                    r.desirable_matrices,
                                    r.counterexamples.len()
                                );
                            }
                            let _ = writeln!(s, "counterexamples: {}", report.counterexample_count());
                            s
                        }
                    };
                    Ok(Outcome { stdout, counterexample: bad })
                }
                Theorem::Turan => {
                    let reports = verify_turan_theorem(*max_n, k_list, jobs, &limits)?;
                    let bad = reports.iter().any(|r| !r.agrees());
                    let stdout = match format {
                        Format::Json => json_line(json!({ "reports": reports })),
                        _ => reports_to_tsv(&reports),
                    };
                    Ok(Outcome { stdout, counterexample: bad })
                }
                Theorem::Perfect => {
                    no_tsv(format, "verify --theorem perfect")?;
                    let report = verify_perfectness(*max_n, k_list, jobs, &limits)?;
                    let bad = !report.violations.is_empty() || !report.method_disagreements.is_empty();
                    let stdout = match format {
                        Format::Json => json_line(report),
                        _ => format!(
                            "graphs checked: {}\nviolations: {}\nmethod disagreements: {}\n",
                            report.graphs_checked,
                            report.violations.len(),
                            report.method_disagreements.len()
                        ),
                    };
                    Ok(Outcome { stdout, counterexample: bad })
                }
            }
        }
        Command::Table { max_n, max_k, oracle, allow_n8 } => {
            let limits = limits(*allow_n8);
            if *oracle && *max_n > limits.exhaustive_max_n {
                return Err(Error::ResourceLimit {
                    what: "exhaustive graph order",
                    value: *max_n,
                    limit: limits.exhaustive_max_n,
                }
                .into());
            }
            let mut rows = Vec::new();
            for n in 2..=*max_n {
                for k in 2..=*max_k {
                    let formula = ambiguous_max_edges(n, k)?;
                    let oracle_value = if *oracle { Some(brute_force_max_edges(n, k, &limits)?.0) } else { None };
                    rows.push((n, k, formula, oracle_value));
                }
            }
            let bad = rows.iter().any(|&(_, _, f, o)| o.is_some_and(|o| o != Some(f)));
            let stdout = match format {
                Format::Json => json_line(json!({
                    "mode": if *oracle { "formula+oracle" } else { "formula" },
                    "rows": rows
                        .iter()
                        .map(|&(n, k, f, o)| match o {
                            Some(o) => json!({ "n": n, "k": k, "formula": f, "oracle": o }),
                            None => json!({ "n": n, "k": k, "formula": f }),
                        })
                        .collect::<Vec<_>>(),
                })),
                _ => {
                    let mut s = String::from(if *oracle { "n\tk\tformula\toracle\n" } else { "n\tk\tformula\n" });
                    for (n, k, f, o) in rows {
                        match o {
                            Some(o) => {
                                let o = o.map_or("-".to_string(), |v| v.to_string());
                                let _ = writeln!(s, "{n}\t{k}\t{f}\t{o}");
                            }
                            None => {
                                let _ = writeln!(s, "{n}\t{k}\t{f}");
                            }
                        }
                    }
                    s
                }
            };
            Ok(Outcome { stdout, counterexample: bad })
        }
    }
}

fn limits(allow_n8: bool) -> Limits {
    if allow_n8 {
        Limits::with_n8()
    } else {
        Limits::default()
    }
}

fn no_tsv(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Tsv {
        Err(Failure::Input(format!("tsv output is not available for {command}")))
    } else {
        Ok(())
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let read = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    read.map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<SimpleGraph, Failure> {
    Ok(parse_graph_auto(&read_input(path)?)?)
}

/// Serializes `value` with a top-level `schema_version`.
fn json_line(value: impl serde::Serialize) -> String {
    let mut v = serde_json::to_value(value).expect("library types serialize");
    match &mut v {
        Value::Object(map) => {
            map.insert("schema_version".into(), json!(SCHEMA_VERSION));
        }
        other => v = json!({ "schema_version": SCHEMA_VERSION, "result": other.take() }),
    }
    serde_json::to_string(&v).expect("json values serialize") + "\n"
}

fn join_nums(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
