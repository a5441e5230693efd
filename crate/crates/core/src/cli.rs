//! Command-line front end. Every command writes JSON (or CSV/DOT where
//! asked) and follows one exit-code contract: 0 ok, 1 input error, 2 solver
//! budget exhausted, 3 check failed.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::colour::{is_nonrepetitive_edge, is_nonrepetitive_vertex, is_proper_total, ColouringJson};
use crate::construct::{
    bounds_report, colour_bridge_composition, colour_cycle_total, colour_path_total, colour_path_weak,
    colour_spanning_tree_bound, colour_star_total, exact_block_colourer, rainbow_plus_one,
};
use crate::graph::{from_generator_spec, make_cycle, make_path, make_star, Graph};
use crate::lll::{moser_tardos_sample, verify_lll_inequalities, ListAssignment, ListAssignmentJson, SampleMode, SampleOutcome};
use crate::solver::{exact_number, Budget, Certificate, Mode, SolveError, SolveReport, ThueParameters};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_EXHAUSTED: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

/// Environment variable overriding the default solver time budget, in milliseconds.
pub const BUDGET_ENV: &str = "THUE_LAB_BUDGET_MS";

const GENERATOR_HELP: &str = "Generator spec: path:N, cycle:N, star:N (N leaves), complete:N, diamond, random:N:D:SEED (SEED may be written seed7)";

#[derive(Debug, Parser)]
#[command(name = "thue-lab", version, about = "Nonrepetitive total colourings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact Thue number of a small graph in one mode
    Solve {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        mode: Mode,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Validate a colouring; exits 3 with a witness when invalid
    Check {
        #[command(flatten)]
        graph: GraphSource,
        /// colouring JSON: {"vertex_colours": {...}, "edge_colours": {...}}
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long, value_enum)]
        mode: CheckMode,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build a colouring with one of the constructions and verify it
    Construct {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, value_enum)]
        method: Method,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List every applicable bound
    Bounds {
        #[command(flatten)]
        graph: GraphSource,
        /// face count of a plane embedding (taken as given)
        #[arg(long)]
        faces: Option<u32>,
        /// also solve all four parameters exactly and check the bounds against them
        #[arg(long)]
        solve: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Margin table for the Local-Lemma inequalities
    LllVerify {
        #[arg(long)]
        delta: u32,
        #[arg(long, default_value_t = 50)]
        tmax: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Resampling search for a colouring from lists
    #[command(alias = "lll-sample")]
    Sample {
        #[command(flatten)]
        graph: GraphSource,
        /// list JSON: {"vertex_lists": {"0": [..]}, "edge_lists": {...}}
        #[arg(long, conflicts_with = "list_size")]
        lists: Option<PathBuf>,
        /// random lists of this size (default: every element gets 1..=5)
        #[arg(long)]
        list_size: Option<u32>,
        /// colour universe for random lists (default 2 × list size)
        #[arg(long)]
        universe: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SampleModeArg::Strong)]
        mode: SampleModeArg,
        #[arg(long, default_value_t = 100_000)]
        max_resamples: u64,
        /// longest checked path, in elements (default min(2|V|, 16))
        #[arg(long)]
        path_cap: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Generate a graph
    Gen {
        #[arg(long, help = GENERATOR_HELP, conflicts_with = "random", required_unless_present = "random")]
        gen: Option<String>,
        /// N:D:SEED, shorthand for --gen random:N:D:SEED
        #[arg(long)]
        random: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        /// also write DOT to this file
        #[arg(long)]
        dot_out: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    #[arg(long, help = GENERATOR_HELP)]
    gen: Option<String>,
    /// graph JSON: {"vertices": [0, 1, ..], "edges": [[0, 1], ..]}
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// solver node cap
    #[arg(long)]
    max_nodes: Option<u64>,
    /// solver time cap in milliseconds (overrides THUE_LAB_BUDGET_MS)
    #[arg(long)]
    time_ms: Option<u64>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// write the result here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckMode {
    Vertex,
    Edge,
    WeakTotal,
    StrongTotal,
    Proper,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    /// five colours on a path
    Path5,
    /// three colours on a path, weak
    PathWeak,
    /// at most six colours on a cycle
    Cycle,
    /// n + 1 colours on K_{1,n}
    Star,
    /// at most m - n + 5 colours, weak
    SpanningTree,
    /// bridge tree plus exact block colourings, weak
    Bridge,
    /// rainbow vertices and one edge colour, weak
    Rainbow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SampleModeArg {
    Weak,
    Strong,
}

impl GraphSource {
    fn load(&self) -> Result<Graph> {
        match (&self.gen, &self.file) {
            (Some(spec), None) => Ok(from_generator_spec(spec)?),
            (None, Some(path)) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                serde_json::from_str(&text).with_context(|| format!("parsing graph {}", path.display()))
            }
            _ => bail!("give exactly one of --gen and --file"),
        }
    }
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget> {
        let mut b = Budget::default();
        let env = std::env::var(BUDGET_ENV).ok();
        let ms = match (self.time_ms, env) {
            (Some(ms), _) => Some(ms),
            (None, Some(s)) => Some(s.trim().parse::<u64>().with_context(|| format!("{BUDGET_ENV}={s}"))?),
            (None, None) => None,
        };
        if let Some(ms) = ms {
            if ms == 0 {
                bail!("time budget must be positive");
            }
            b.max_time = Some(Duration::from_millis(ms));
        }
        if let Some(n) = self.max_nodes {
            if n == 0 {
                bail!("node budget must be positive");
            }
            b.max_nodes = Some(n);
        }
        Ok(b)
    }
}

impl OutputArgs {
    fn emit(&self, out: &mut dyn Write, text: &str) -> Result<()> {
        match &self.output {
            Some(path) => fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display())),
            None => writeln!(out, "{text}").context("writing output"),
        }
    }

    fn emit_json<T: Serialize>(&self, out: &mut dyn Write, value: &T) -> Result<()> {
        self.emit(out, &serde_json::to_string_pretty(value)?)
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code; diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Solve { graph, mode, budget, out: o } => cmd_solve(&graph.load()?, mode, budget.budget()?, &o, out),
        Command::Check {
            graph,
            colouring,
            mode,
            out: o,
        } => cmd_check(&graph.load()?, &colouring, mode, &o, out),
        Command::Construct {
            graph,
            method,
            budget,
            out: o,
        } => cmd_construct(&graph.load()?, method, budget.budget()?, &o, out),
        Command::Bounds {
            graph,
            faces,
            solve,
            format,
            budget,
            out: o,
        } => {
            let g = graph.load()?;
            let solved = if solve {
                Some(ThueParameters::solve(&g, budget.budget()?))
            } else {
                None
            };
            let report = bounds_report(&g, faces, solved.as_ref());
            match format {
                TableFormat::Json => {
                    let mut v = serde_json::to_value(&report)?;
                    if let Some(p) = &solved {
                        v["exact"] = json!({"pi": p.pi, "pi_prime": p.pi_prime, "pi_tw": p.pi_tw, "pi_t": p.pi_t});
                    }
                    o.emit_json(out, &v)?
                }
                TableFormat::Csv => o.emit(out, report.to_csv().trim_end())?,
            }
            Ok(EXIT_OK)
        }
        Command::LllVerify {
            delta,
            tmax,
            format,
            out: o,
        } => {
            let report = verify_lll_inequalities(delta, tmax)?;
            match format {
                TableFormat::Json => o.emit_json(out, &report)?,
                TableFormat::Csv => o.emit(out, report.to_csv().trim_end())?,
            }
            Ok(if report.all_positive { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Sample {
            graph,
            lists,
            list_size,
            universe,
            seed,
            mode,
            max_resamples,
            path_cap,
            out: o,
        } => {
            let g = graph.load()?;
            let lists = match (lists, list_size) {
                (Some(path), _) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    let json: ListAssignmentJson = serde_json::from_str(&text).context("parsing lists")?;
                    ListAssignment::from_json(&json, &g)?
                }
                (None, Some(size)) => {
                    if size == 0 {
                        bail!("list size must be positive");
                    }
                    ListAssignment::random(&g, size, universe.unwrap_or(2 * size), seed)
                }
                (None, None) => ListAssignment::uniform(&g, 5),
            };
            let mode = match mode {
                SampleModeArg::Weak => SampleMode::Weak,
                SampleModeArg::Strong => SampleMode::Strong,
            };
            let outcome = moser_tardos_sample(&g, &lists, mode, seed, max_resamples, path_cap)?;
            let (v, code) = match outcome {
                SampleOutcome::Found { colouring, resamples, .. } => (
                    json!({"found": true, "resamples": resamples, "verified": true,
                           "colours": colouring.distinct_colours(),
                           "colouring": ColouringJson::from_total(&colouring)}),
                    EXIT_OK,
                ),
                SampleOutcome::Failed {
                    resamples_used,
                    last_witness,
                    ..
                } => (
                    json!({"found": false, "resamples": resamples_used, "last_witness": last_witness}),
                    EXIT_EXHAUSTED,
                ),
            };
            o.emit_json(out, &v)?;
            Ok(code)
        }
        Command::Gen {
            gen,
            random,
            format,
            dot_out,
            out: o,
        } => {
            let spec = match (gen, random) {
                (Some(s), None) => s,
                (None, Some(r)) => format!("random:{r}"),
                _ => bail!("give exactly one of --gen and --random"),
            };
            let g = from_generator_spec(&spec)?;
            let json = serde_json::to_string_pretty(&g)?;
            let text = match format {
                GraphFormat::Json => json,
                GraphFormat::Dot => g.to_dot(),
                GraphFormat::Both => format!("{json}\n{}", g.to_dot()),
            };
            o.emit(out, text.trim_end())?;
            if let Some(path) = dot_out {
                fs::write(&path, g.to_dot()).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn cmd_solve(g: &Graph, mode: Mode, budget: Budget, o: &OutputArgs, out: &mut dyn Write) -> Result<i32> {
    match exact_number(g, mode, budget) {
        Ok(sol) => {
            o.emit_json(out, &SolveReport::from(&sol))?;
            Ok(EXIT_OK)
        }
        Err(SolveError::Exhausted { lower, upper, .. }) => {
            o.emit_json(
                out,
                &SolveReport::Exhausted {
                    exhausted: true,
                    lower,
                    upper,
                },
            )?;
            Ok(EXIT_EXHAUSTED)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_check(g: &Graph, path: &PathBuf, mode: CheckMode, o: &OutputArgs, out: &mut dyn Write) -> Result<i32> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let json: ColouringJson = serde_json::from_str(&text).with_context(|| format!("parsing colouring {}", path.display()))?;
    let witness = match mode {
        CheckMode::Vertex => is_nonrepetitive_vertex(g, &json.vertex_colours(g)?)?,
        CheckMode::Edge => is_nonrepetitive_edge(g, &json.edge_colours(g)?)?,
        CheckMode::WeakTotal => Certificate::Total(json.total(g)?).violation(g, Mode::WeakTotal)?,
        CheckMode::StrongTotal => Certificate::Total(json.total(g)?).violation(g, Mode::StrongTotal)?,
        CheckMode::Proper => is_proper_total(g, &json.total(g)?)?,
    };
    let v: Value = json!({"valid": witness.is_none(), "witness": witness});
    o.emit_json(out, &v)?;
    Ok(if witness.is_none() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn require_shape(g: &Graph, expected: Graph, what: &str) -> Result<()> {
    if *g != expected {
        bail!("method needs the graph {what} as produced by the generator");
    }
    Ok(())
}

fn cmd_construct(g: &Graph, method: Method, budget: Budget, o: &OutputArgs, out: &mut dyn Write) -> Result<i32> {
    let n = g.vertex_count();
    let mut extra = serde_json::Map::new();
    let (colouring, check) = match method {
        Method::Path5 => {
            require_shape(g, make_path(n)?, &format!("path:{n}"))?;
            (colour_path_total(n)?, "strong-total")
        }
        Method::PathWeak => {
            require_shape(g, make_path(n)?, &format!("path:{n}"))?;
            (colour_path_weak(n)?, "weak-total")
        }
        Method::Cycle => {
            require_shape(g, make_cycle(n)?, &format!("cycle:{n}"))?;
            (colour_cycle_total(n)?, "strong-total")
        }
        Method::Star => {
            let leaves = n.saturating_sub(1);
            require_shape(g, make_star(leaves)?, &format!("star:{leaves}"))?;
            (colour_star_total(leaves)?, "strong-total")
        }
        Method::SpanningTree => {
            let bound = (g.edge_count() + 5).saturating_sub(n);
            extra.insert("bound".into(), json!(bound));
            (colour_spanning_tree_bound(g, budget)?, "weak-total")
        }
        Method::Bridge => {
            let bc = colour_bridge_composition(g, exact_block_colourer(budget), budget)?;
            extra.insert("bridge_colours".into(), json!(bc.bridge_colours));
            extra.insert("block_palette".into(), json!(bc.block_palette));
            extra.insert("tree_max_degree".into(), json!(bc.tree_max_degree));
            (bc.colouring, "weak-total")
        }
        Method::Rainbow => (rainbow_plus_one(g)?, "weak-total"),
    };
    let mut v = json!({
        "method": format!("{method:?}").to_lowercase(),
        "colours": colouring.distinct_colours(),
        "verified": check,
        "colouring": ColouringJson::from_total(&colouring),
    });
    v.as_object_mut().expect("object").extend(extra);
    o.emit_json(out, &v)?;
    Ok(EXIT_OK)
}
