//! Command-line surface. JSON results go to stdout, human summaries to
//! stderr. Exit codes: 0 success, 1 verification-suite failure, 2 usage or
//! input errors, 3 resource-budget errors.

use crate::betti::{betti_table, regularity, BettiBudget, BettiError};
use crate::graph::{Graph, GraphError, DEFAULT_VERTEX_CAP};
use crate::ideal::edge_ideal;
use crate::rees::{rees_generators, ReesError, DEFAULT_GENERATOR_BUDGET};
use crate::symbolic::{
    resurgence_search, symbolic_power_cover, symbolic_power_unicyclic, SymbolicError,
};
use crate::verify::{all_suites, suite_by_name, SuiteReport, SUITE_NAMES};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SUITE_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "symedge",
    version,
    about = "Exact symbolic powers, regularity and asymptotics of edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Graph-level statistics and invariants
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Ordinary or symbolic power of the edge ideal
    Power {
        file: PathBuf,
        /// Power exponent
        #[arg(long)]
        s: u32,
        /// Compute the symbolic power instead of the ordinary one
        #[arg(long)]
        symbolic: bool,
        /// Route for the symbolic power
        #[arg(long, value_enum, requires = "symbolic")]
        method: Option<Method>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Castelnuovo-Mumford regularity of a power of the edge ideal
    Reg {
        file: PathBuf,
        /// Power exponent
        #[arg(long, default_value_t = 1)]
        s: u32,
        /// Use the symbolic power
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Betti table of the edge ideal (CSV; JSON with --multigraded)
    Betti {
        file: PathBuf,
        /// Emit the multigraded table as JSON instead of the CSV
        #[arg(long)]
        multigraded: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Symbolic-vs-ordinary containment search over a grid
    Resurgence {
        file: PathBuf,
        #[arg(long)]
        smax: u32,
        #[arg(long)]
        tmax: u32,
        #[command(flatten)]
        caps: Caps,
    },
    /// Minimal symbolic Rees algebra generators up to a degree bound
    Rees {
        file: PathBuf,
        #[arg(long)]
        max_degree: u32,
        #[command(flatten)]
        caps: Caps,
    },
    /// Run a named verification suite, or all of them
    Verify {
        /// decomposition | colon-w | colon-symbolic | intersection-m2s |
        /// regularity | lemma-isj | all
        suite: String,
        #[command(flatten)]
        caps: Caps,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Invariants of a graph in the edge-list format
    Stats {
        file: PathBuf,
        #[command(flatten)]
        caps: Caps,
    },
}

#[derive(Args)]
struct Caps {
    /// Vertex cap for exhaustive invariant searches
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    vertex_cap: usize,
    /// Budget for Betti multidegree boxes
    #[arg(long, default_value_t = BettiBudget::default().max_box_points)]
    max_box_points: u64,
}

impl Caps {
    fn budget(&self) -> BettiBudget {
        BettiBudget {
            max_box_points: self.max_box_points,
            ..BettiBudget::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Cover,
    Formula,
}

#[derive(Serialize)]
struct GraphStats {
    vertices: usize,
    edges: usize,
    matching_number: usize,
    induced_matching_number: usize,
    vertex_cover_number: usize,
    minimal_vertex_covers: usize,
    is_unicyclic: bool,
    unique_cycle: Option<Vec<String>>,
    cycle_is_dominating: bool,
    decomposable: bool,
}

#[derive(Serialize)]
struct RegOutput {
    s: u32,
    symbolic: bool,
    regularity: i64,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Failure {
        let code = match e {
            GraphError::TooLarge { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<SymbolicError> for Failure {
    fn from(e: SymbolicError) -> Failure {
        match e {
            SymbolicError::Graph(g) => g.into(),
            other => Failure {
                code: EXIT_USAGE,
                message: other.to_string(),
            },
        }
    }
}

impl From<BettiError> for Failure {
    fn from(e: BettiError) -> Failure {
        let code = match e {
            BettiError::BoxBudget { .. } | BettiError::FaceBudget { .. } => EXIT_BUDGET,
            BettiError::Graph(GraphError::TooLarge { .. }) => EXIT_BUDGET,
            BettiError::Symbolic(SymbolicError::Graph(GraphError::TooLarge { .. })) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ReesError> for Failure {
    fn from(e: ReesError) -> Failure {
        let code = match e {
            ReesError::Budget { .. } => EXIT_BUDGET,
            ReesError::Symbolic(SymbolicError::Graph(GraphError::TooLarge { .. })) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<crate::ideal::IdealError> for Failure {
    fn from(e: crate::ideal::IdealError) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })?;
    Graph::parse(&text).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })
}

/// Runs the CLI against explicit argument and output streams. The first
/// argument is the program name, as in `std::env::args`.
pub fn run_cli(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cli.cmd {
        Cmd::Graph {
            cmd: GraphCmd::Stats { file, caps },
        } => {
            let g = load_graph(&file)?;
            let inv = g.invariants_capped(caps.vertex_cap)?;
            let covers = g.minimal_vertex_covers_capped(caps.vertex_cap)?;
            let (decomposable, _) = g.is_decomposable_capped(caps.vertex_cap)?;
            let stats = GraphStats {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                matching_number: inv.matching_number,
                induced_matching_number: inv.induced_matching_number,
                vertex_cover_number: inv.vertex_cover_number,
                minimal_vertex_covers: covers.len(),
                is_unicyclic: inv.is_unicyclic,
                unique_cycle: inv.unique_cycle,
                cycle_is_dominating: inv.cycle_is_dominating,
                decomposable,
            };
            writeln!(out, "{}", serde_json::to_string(&stats).expect("stats"))?;
            writeln!(err, "{g}")?;
            Ok(EXIT_OK)
        }
        Cmd::Power {
            file,
            s,
            symbolic,
            method,
            caps: _,
        } => {
            let g = load_graph(&file)?;
            let ideal = if symbolic {
                match method {
                    Some(Method::Cover) => symbolic_power_cover(&g, s)?.ideal,
                    Some(Method::Formula) => symbolic_power_unicyclic(&g, s)?.ideal,
                    None => crate::symbolic::symbolic_power(&g, s)?.ideal,
                }
            } else {
                edge_ideal(&g).power(s)
            };
            writeln!(out, "{}", ideal.to_json())?;
            let kind = if symbolic { "symbolic " } else { "" };
            writeln!(
                err,
                "{kind}power s={s}: {} generators{}",
                ideal.num_gens(),
                ideal
                    .alpha()
                    .map(|a| format!(", alpha={a}"))
                    .unwrap_or_default()
            )?;
            Ok(EXIT_OK)
        }
        Cmd::Reg {
            file,
            s,
            symbolic,
            caps,
        } => {
            let g = load_graph(&file)?;
            let ideal = if symbolic {
                crate::symbolic::symbolic_power(&g, s)?.ideal
            } else {
                edge_ideal(&g).power(s)
            };
            let reg = regularity(&ideal, &caps.budget())?;
            let out_row = RegOutput {
                s,
                symbolic,
                regularity: reg,
            };
            writeln!(out, "{}", serde_json::to_string(&out_row).expect("reg"))?;
            writeln!(err, "regularity = {reg}")?;
            Ok(EXIT_OK)
        }
        Cmd::Betti {
            file,
            multigraded,
            caps,
        } => {
            let g = load_graph(&file)?;
            let table = betti_table(&edge_ideal(&g), &caps.budget())?;
            if multigraded {
                writeln!(out, "{}", table.multigraded_json())?;
            } else {
                write!(out, "{}", table.to_csv())?;
            }
            writeln!(err, "regularity = {}", table.regularity)?;
            Ok(EXIT_OK)
        }
        Cmd::Resurgence {
            file,
            smax,
            tmax,
            caps: _,
        } => {
            let g = load_graph(&file)?;
            let id = file
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "graph".to_string());
            let report = resurgence_search(&g, &id, smax, tmax)?;
            writeln!(
                out,
                "{}",
                serde_json::to_string(&report).expect("resurgence report")
            )?;
            writeln!(
                err,
                "{} violations on the {smax}x{tmax} grid{}",
                report.violations.len(),
                report
                    .max_ratio
                    .map(|r| format!(", max ratio {r}"))
                    .unwrap_or_default()
            )?;
            Ok(EXIT_OK)
        }
        Cmd::Rees {
            file,
            max_degree,
            caps: _,
        } => {
            let g = load_graph(&file)?;
            let set = rees_generators(&g, max_degree, DEFAULT_GENERATOR_BUDGET)?;
            writeln!(out, "{}", set.to_json())?;
            for (&d, gens) in &set.strata {
                if !gens.is_empty() {
                    writeln!(err, "degree {d}: {} new generator(s)", gens.len())?;
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Verify { suite, caps } => {
            let budget = caps.budget();
            let reports: Vec<SuiteReport> = if suite == "all" {
                all_suites(&budget)
            } else {
                match suite_by_name(&suite, &budget) {
                    Some(r) => vec![r],
                    None => {
                        return Err(Failure {
                            code: EXIT_USAGE,
                            message: format!(
                                "unknown suite `{suite}`; expected one of {} or `all`",
                                SUITE_NAMES.join(", ")
                            ),
                        })
                    }
                }
            };
            let mut all_pass = true;
            for r in &reports {
                let ok = r.cases.iter().filter(|c| c.pass).count();
                writeln!(
                    err,
                    "suite {}: {}/{} cases passed ({:.1?})",
                    r.suite,
                    ok,
                    r.cases.len(),
                    r.wall
                )?;
                for c in r.cases.iter().filter(|c| !c.pass) {
                    writeln!(err, "  FAIL {}: {} | {} vs {}", c.instance, c.claim, c.lhs, c.rhs)?;
                }
                all_pass &= r.passed;
            }
            let json: Vec<String> = reports.iter().map(|r| r.to_json()).collect();
            writeln!(out, "[{}]", json.join(","))?;
            Ok(if all_pass { EXIT_OK } else { EXIT_SUITE_FAILURE })
        }
    }
}
