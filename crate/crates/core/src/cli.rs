// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The `rdtool` command line.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 bad usage or
//! unreadable input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::census::{self, run_census, run_census_cached, verify_relations, MAX_CENSUS_ORDER};
use crate::coloring::{circle_method_rounds, vizing_color, EdgeColoring};
use crate::connectivity::{lambda_global, lambda_plus, mader_lambda_plus_bound};
use crate::constructions::{extremal_even, min_size_rd, peel_factorable};
use crate::graph::Graph;
use crate::io::{coloring_from_json, coloring_to_json, graph_from_json, graph_to_json, to_dot};
use crate::rainbow::{is_rd_coloring, rd_exact, star_rd_check, DEFAULT_EDGE_BUDGET};

#[derive(Parser, Debug)]
#[command(
    name = "rdtool",
    version,
    about = "Rainbow disconnection number toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an extremal graph, a peeled regular graph or a minimum size graph.
    #[command(group(ArgGroup::new("kind").required(true).args(["even_extremal", "peel", "min_size"])))]
    Construct {
        /// Maximum size graph of even order N with rd = K, plus its coloring.
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        even_extremal: Option<Vec<usize>>,
        /// K-regular 1-factorable graph of even order N.
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        peel: Option<Vec<usize>>,
        /// Connected graph of order N with N+K-2 edges and rd = K.
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        min_size: Option<Vec<usize>>,
        /// Output prefix; files are PREFIX.graph.json and friends.
        #[arg(long, value_name = "PREFIX")]
        out: PathBuf,
        /// Also write a DOT rendering with edges colored by class.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Exact rd with bounds and a witnessing coloring.
    Rd {
        graph: PathBuf,
        /// Largest edge count for which the coloring search runs.
        #[arg(long, default_value_t = DEFAULT_EDGE_BUDGET)]
        budget: usize,
    },
    /// Connectivity bounds and the Misra–Gries color count, no search.
    Bounds { graph: PathBuf },
    /// Circle-method 1-factorization of K_N.
    Factorize { n: usize },
    /// Exhaustive census for orders 2..=MAX_N.
    Census {
        #[arg(long, value_name = "N")]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Where per-order results are cached.
        #[arg(long, value_name = "DIR")]
        cache_dir: Option<PathBuf>,
        #[arg(long, conflicts_with = "cache_dir")]
        no_cache: bool,
    },
    /// Check a rainbow disconnection coloring (exit 1 when it is not one).
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        /// Only check that every star except this vertex's is rainbow.
        #[arg(long, value_name = "U")]
        star_hub: Option<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub written: Vec<PathBuf>,
}

/// An input or usage problem, reported with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CmdResult = std::result::Result<CommandOutcome, Failure>;

fn ok(written: Vec<PathBuf>) -> CmdResult {
    Ok(CommandOutcome {
        exit_code: 0,
        written,
    })
}

fn verdict(pass: bool, written: Vec<PathBuf>) -> CmdResult {
    Ok(CommandOutcome {
        exit_code: if pass { 0 } else { 1 },
        written,
    })
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return CommandOutcome {
                exit_code: code,
                written: Vec::new(),
            };
        }
    };
    match run(cli.command, out, err) {
        Ok(outcome) => outcome,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            CommandOutcome {
                exit_code: 2,
                written: Vec::new(),
            }
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}

/// Syntax errors carry a line and column; value errors raised after parsing
/// do not, so they are attributed to the validated field instead.
fn describe(path: &Path, field: &str, e: serde_json::Error) -> Failure {
    if e.line() == 0 {
        Failure(format!("{}: field \"{field}\": {e}", path.display()))
    } else {
        Failure(format!("{}: {e}", path.display()))
    }
}

fn load_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    graph_from_json(&read(path)?).map_err(|e| describe(path, "edges", e))
}

fn load_coloring(path: &Path) -> std::result::Result<EdgeColoring, Failure> {
    coloring_from_json(&read(path)?).map_err(|e| describe(path, "colors", e))
}

fn write_file(
    path: PathBuf,
    text: &str,
    written: &mut Vec<PathBuf>,
) -> std::result::Result<(), Failure> {
    fs::write(&path, text).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
    written.push(path);
    Ok(())
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Construct {
            even_extremal,
            peel,
            min_size,
            out: prefix,
            dot,
        } => {
            let mut written = Vec::new();
            let (graph, coloring) = if let Some(nk) = even_extremal {
                let w = extremal_even(nk[0], nk[1])?;
                (w.graph, Some(w.coloring))
            } else if let Some(nk) = peel {
                let p = peel_factorable(nk[0], nk[1])?;
                write_file(
                    with_suffix(&prefix, ".peel.json"),
                    &pretty(&p),
                    &mut written,
                )?;
                let coloring = p.factorization.to_coloring(&p.graph);
                (p.graph, Some(coloring))
            } else if let Some(nk) = min_size {
                (min_size_rd(nk[0], nk[1])?, None)
            } else {
                unreachable!("clap enforces one construction")
            };
            write_file(
                with_suffix(&prefix, ".graph.json"),
                &graph_to_json(&graph),
                &mut written,
            )?;
            if let Some(c) = &coloring {
                write_file(
                    with_suffix(&prefix, ".coloring.json"),
                    &coloring_to_json(c),
                    &mut written,
                )?;
            }
            if let Some(path) = dot {
                write_file(path, &to_dot(&graph, coloring.as_ref()), &mut written)?;
            }
            for path in &written {
                writeln!(out, "wrote {}", path.display())?;
            }
            writeln!(out, "{} vertices, {} edges", graph.n(), graph.edge_count())?;
            ok(written)
        }
        Command::Rd { graph, budget } => {
            let g = load_graph(&graph)?;
            let report = rd_exact(&g, budget)?;
            write!(out, "{}", pretty(&report))?;
            ok(Vec::new())
        }
        Command::Bounds { graph } => {
            #[derive(Serialize)]
            struct Bounds {
                lambda: usize,
                lambda_plus: usize,
                mader_bound: usize,
                chi_prime_upper: usize,
                max_degree: usize,
            }
            let g = load_graph(&graph)?;
            let bounds = Bounds {
                lambda: lambda_global(&g)?,
                lambda_plus: lambda_plus(&g)?,
                mader_bound: mader_lambda_plus_bound(&g),
                chi_prime_upper: vizing_color(&g).k(),
                max_degree: g.max_degree(),
            };
            write!(out, "{}", pretty(&bounds))?;
            ok(Vec::new())
        }
        Command::Factorize { n } => {
            #[derive(Serialize)]
            struct Factorization {
                n: usize,
                factors: Vec<Vec<(usize, usize)>>,
            }
            let factors = circle_method_rounds(n)?
                .into_iter()
                .map(|round| {
                    let mut f: Vec<_> = round
                        .into_iter()
                        .map(|(a, b)| (a.min(b), a.max(b)))
                        .collect();
                    f.sort_unstable();
                    f
                })
                .collect();
            let text = serde_json::to_string(&Factorization { n, factors }).expect("serializable");
            writeln!(out, "{text}")?;
            ok(Vec::new())
        }
        Command::Census {
            max_n,
            format,
            out: path,
            cache_dir,
            no_cache,
        } => {
            if max_n > MAX_CENSUS_ORDER {
                return Err(Failure(format!(
                    "--max-n {max_n} exceeds the supported maximum {MAX_CENSUS_ORDER}"
                )));
            }
            if max_n == MAX_CENSUS_ORDER {
                writeln!(
                    err,
                    "warning: order 7 solves 853 connected graphs, the largest census supported"
                )?;
            }
            let cache = (!no_cache)
                .then(|| cache_dir.unwrap_or_else(|| std::env::temp_dir().join("rdtool-census")));
            let mut tables = Vec::new();
            for n in 2..=max_n {
                let table = match &cache {
                    Some(dir) => run_census_cached(n, dir)?,
                    None => run_census(n)?,
                };
                tables.push(table);
            }
            let pass = tables
                .iter()
                .all(|t| t.all_pass() && verify_relations(t).failures() == 0);
            let text = match format {
                Format::Csv => census::to_csv(&tables),
                Format::Json => census::to_json(&tables),
            };
            let mut written = Vec::new();
            match path {
                Some(p) => write_file(p, &text, &mut written)?,
                None => write!(out, "{text}")?,
            }
            verdict(pass, written)
        }
        Command::Verify {
            graph,
            coloring,
            star_hub,
        } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring)?;
            let holds = match star_hub {
                Some(hub) => star_rd_check(&g, &c, hub)?,
                None => is_rd_coloring(&g, &c)?,
            };
            let check = if star_hub.is_some() {
                "star check"
            } else {
                "rainbow disconnection"
            };
            writeln!(out, "{check}: {}", if holds { "PASS" } else { "FAIL" })?;
            verdict(holds, Vec::new())
        }
    }
}
