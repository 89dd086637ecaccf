//! Command-line front end. Every subcommand reads graphs in the text format
//! and prints `key value` lines plus `begin <name>` / `end <name>` blocks.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::bqueue::{exhaustive_full_bqueue, greedy_full_bqueue, DEFAULT_EXHAUSTIVE_CAP};
use crate::colouring::{chromatic_index_exact, fan_colouring, EdgeColouring, DEFAULT_INSTANCE_CAP};
use crate::core_analysis::{check_theorem4_hypothesis, check_theorem5_hypothesis, t_core};
use crate::error::{Error, Result};
use crate::fan::{
    corefan, corefan_bruteforce, fan_number, FanReport, DEFAULT_BRUTE_SUBGRAPH_CAP, DEFAULT_COREFAN_CLASS_CAP,
    DEFAULT_FAN_SUBGRAPH_CAP,
};
use crate::graph::Multigraph;
use crate::witness::{construct_witness, verify_witness, ConstructionPlan};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
    Usage,
    ResourceExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Error => 1,
            Status::Usage => 2,
            Status::ResourceExceeded => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub status: Status,
    pub output: String,
}

#[derive(Parser, Debug)]
#[command(name = "fancore", version, about = "Edge-colouring analysis for multigraphs")]
struct Cli {
    /// Cap on edge instances for exact chromatic index.
    #[arg(long, global = true)]
    max_instances: Option<u64>,
    /// Cap on parallel classes for corefan.
    #[arg(long, global = true)]
    max_classes: Option<usize>,
    /// Cap on enumerated sub-multiplicity assignments.
    #[arg(long, global = true)]
    max_subgraphs: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the t-core.
    Tcore {
        file: PathBuf,
        #[arg(long)]
        t: u32,
    },
    /// Check the multiforest (4) or B-queue (5) hypothesis on the t-core.
    Hypothesis {
        file: PathBuf,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(4..=5))]
        theorem: u8,
    },
    /// Search for a full B-queue of a simple graph.
    Bqueue {
        file: PathBuf,
        #[arg(long)]
        exhaustive: bool,
    },
    /// Corefan with its witness.
    Corefan {
        file: PathBuf,
        /// Enumerate every sub-multiplicity assignment instead.
        #[arg(long)]
        brute: bool,
    },
    /// Fan number and the bound max(Δ, fan).
    Fan { file: PathBuf },
    /// Exact chromatic index and an optimal colouring.
    Chi { file: PathBuf },
    /// Colour with k colours by fan recolouring.
    Colour {
        file: PathBuf,
        #[arg(short)]
        k: u32,
    },
    /// Build a witness graph and its plan sidecar.
    Construct {
        file: PathBuf,
        #[arg(long)]
        t: u32,
        #[arg(short)]
        o: PathBuf,
    },
    /// Re-verify a witness graph against its plan.
    VerifyWitness {
        h: PathBuf,
        g: PathBuf,
        plan: PathBuf,
        #[arg(long)]
        t: u32,
    },
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { Status::Usage } else { Status::Ok };
            return CommandResult { status, output: e.to_string() };
        }
    };
    match execute(&cli) {
        Ok(output) => CommandResult { status: Status::Ok, output },
        Err(e) => {
            let status = match e {
                Error::Resource { .. } => Status::ResourceExceeded,
                _ => Status::Error,
            };
            CommandResult { status, output: format!("error: {e}\n") }
        }
    }
}

fn read_graph(path: &Path) -> Result<Multigraph> {
    Multigraph::parse(&read(path)?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::domain(format!("{}: {e}", path.display())))
}

fn block(out: &mut String, name: &str, body: &str) {
    let _ = writeln!(out, "begin {name}");
    out.push_str(body);
    if !body.is_empty() && !body.ends_with('\n') {
        out.push('\n');
    }
    let _ = writeln!(out, "end {name}");
}

fn colouring_block(out: &mut String, c: &EdgeColouring<'_>) {
    let mut body = c.to_lines().join("\n");
    body.push('\n');
    block(out, "colouring", &body);
}

fn report_lines(out: &mut String, name: &str, g: &Multigraph, r: &FanReport<'_>) {
    let _ = writeln!(out, "{name} {}", r.value);
    if let (Some(sub), Some((x, y))) = (&r.witness_subgraph, r.witness_pair) {
        let _ = writeln!(out, "pair {} {}", g.label(x), g.label(y));
        let z: Vec<&str> = r.witness_z.iter().map(|&v| g.label(v)).collect();
        let _ = writeln!(out, "z {}", z.join(" "));
        block(out, "witness", &sub.materialize().serialize());
    }
}

fn execute(cli: &Cli) -> Result<String> {
    let mut out = String::new();
    match &cli.command {
        Command::Tcore { file, t } => {
            let core = t_core(&read_graph(file)?, *t);
            let _ = writeln!(out, "t {t}");
            let _ = writeln!(out, "vertices {}", core.vertex_count());
            block(&mut out, "graph", &core.serialize());
        }
        Command::Hypothesis { file, t, theorem } => {
            let g = read_graph(file)?;
            let check = if *theorem == 4 { check_theorem4_hypothesis(&g, *t) } else { check_theorem5_hypothesis(&g, *t)? };
            let _ = writeln!(out, "theorem {theorem}");
            let _ = writeln!(out, "t {t}");
            let _ = writeln!(out, "holds {}", check.holds);
            let _ = writeln!(out, "core_mult {}", check.report.core_mult);
            block(&mut out, "core", &check.report.core.serialize());
            if let Some(b) = &check.report.max_mult_simple {
                block(&mut out, "b", &b.serialize());
            }
        }
        Command::Bqueue { file, exhaustive } => {
            let b = read_graph(file)?;
            let q = if *exhaustive {
                exhaustive_full_bqueue(&b, DEFAULT_EXHAUSTIVE_CAP)?
            } else {
                greedy_full_bqueue(&b)?
            };
            match q {
                None => out.push_str("none\n"),
                Some(q) => {
                    let labels: Vec<&str> = q.us.iter().map(|&u| b.label(u)).collect();
                    let _ = writeln!(out, "queue {}", labels.join(" "));
                }
            }
        }
        Command::Corefan { file, brute } => {
            let h = read_graph(file)?;
            if *brute {
                let cap = cli.max_subgraphs.unwrap_or(DEFAULT_BRUTE_SUBGRAPH_CAP);
                let _ = writeln!(out, "corefan {}", corefan_bruteforce(&h, cap)?);
            } else {
                let r = corefan(&h, cli.max_classes.unwrap_or(DEFAULT_COREFAN_CLASS_CAP))?;
                report_lines(&mut out, "corefan", &h, &r);
            }
        }
        Command::Fan { file } => {
            let g = read_graph(file)?;
            let r = fan_number(&g, cli.max_subgraphs.unwrap_or(DEFAULT_FAN_SUBGRAPH_CAP))?;
            report_lines(&mut out, "fan", &g, &r);
            let _ = writeln!(out, "Fan {}", g.max_degree().max(r.value));
        }
        Command::Chi { file } => {
            let g = read_graph(file)?;
            let (chi, c) = chromatic_index_exact(&g, cli.max_instances.unwrap_or(DEFAULT_INSTANCE_CAP))?;
            let _ = writeln!(out, "chi {chi}");
            colouring_block(&mut out, &c);
        }
        Command::Colour { file, k } => {
            let g = read_graph(file)?;
            match fan_colouring(&g, *k)? {
                None => out.push_str("none\n"),
                Some(c) => {
                    let _ = writeln!(out, "k {k}");
                    colouring_block(&mut out, &c);
                }
            }
        }
        Command::Construct { file, t, o } => {
            let h = read_graph(file)?;
            let (g, plan) = construct_witness(&h, *t)?;
            let plan_path = sidecar(o);
            std::fs::write(o, g.serialize()).map_err(|e| Error::domain(format!("{}: {e}", o.display())))?;
            std::fs::write(&plan_path, plan.to_string())
                .map_err(|e| Error::domain(format!("{}: {e}", plan_path.display())))?;
            let _ = writeln!(out, "vertices {}", g.vertex_count());
            let _ = writeln!(out, "graph {}", o.display());
            let _ = writeln!(out, "plan {}", plan_path.display());
            block(&mut out, "plan", &plan.to_string());
            let v = verify_witness(&h, *t, &g, &plan);
            block(&mut out, "verification", &v.to_string());
            let _ = writeln!(out, "verified {}", v.passed());
        }
        Command::VerifyWitness { h, g, plan, t } => {
            let (h, g) = (read_graph(h)?, read_graph(g)?);
            let plan = ConstructionPlan::parse(&read(plan)?)?;
            let v = verify_witness(&h, *t, &g, &plan);
            block(&mut out, "verification", &v.to_string());
            let _ = writeln!(out, "verified {}", v.passed());
        }
    }
    Ok(out)
}

/// `OUT.plan` next to `OUT`.
pub fn sidecar(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".plan");
    PathBuf::from(name)
}
