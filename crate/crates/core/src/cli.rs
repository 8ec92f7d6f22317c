//! Command-line front end. [`run`] is the whole program minus process I/O,
//! so it can be driven from tests.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::bijection::{phi, phi_inv};
use crate::cartan::{dominant_weights, Weight};
use crate::crystal::{graph, CrystalGraph, Vertex};
use crate::energy::{energy_d, generating_polynomial};
use crate::exec::Strategy;
use crate::fermionic::{enumerate_rcs, fermionic_m};
use crate::graph_lemma::verify_graph_lemma;
use crate::rigged::{cc, RiggedConfiguration};
use crate::tensor::{enumerate_all_hw, Path};
use crate::verify::{verify, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kkr-e6",
    about = "Rigged configurations and paths for the E6(1) crystal B(1,1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Inspect the crystal graph.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Classically restricted paths.
    Paths(Selector),
    /// Rigged configurations.
    Rcs(Selector),
    /// One-dimensional sums.
    X(Selector),
    /// Fermionic sums.
    M(Selector),
    /// Map a rigged configuration to its path.
    Phi {
        #[arg(long)]
        rc: PathBuf,
    },
    /// Map a path to its rigged configuration.
    PhiInv {
        #[arg(long)]
        path: PathBuf,
    },
    /// Run the full verification harness for L = 0..=N.
    Verify {
        #[arg(long)]
        max_length: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Bijection checks only up to this length (defaults to --max-length).
        #[arg(long)]
        bijection_max_length: Option<usize>,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum GraphAction {
    Dump,
    Verify,
}

#[derive(Debug, clap::Args)]
struct Selector {
    #[arg(long)]
    length: usize,
    #[arg(long)]
    weight: Option<Weight>,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output::ok(text)
            } else {
                Output::usage(text)
            };
        }
    };
    match cli.command {
        Command::Graph {
            action: GraphAction::Dump,
        } => Output::ok(graph().dump()),
        Command::Graph {
            action: GraphAction::Verify,
        } => graph_verify(),
        Command::Paths(sel) => paths(&sel),
        Command::Rcs(sel) => rcs(&sel),
        Command::X(sel) => x_sums(&sel),
        Command::M(sel) => m_sums(&sel),
        Command::Phi { rc } => phi_cmd(&rc),
        Command::PhiInv { path } => phi_inv_cmd(&path),
        Command::Verify {
            max_length,
            jobs,
            bijection_max_length,
            json,
        } => verify_cmd(max_length, jobs, bijection_max_length, json),
    }
}

fn graph_verify() -> Output {
    let g = match CrystalGraph::build() {
        Ok(g) => g,
        Err(e) => {
            return Output {
                code: EXIT_FAILURE,
                stdout: String::new(),
                stderr: format!("{e}\n"),
            }
        }
    };
    let report = verify_graph_lemma(&g);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "vertices={} edges={} source={} sink={}",
        Vertex::all().count(),
        g.edges().len(),
        Vertex::HIGHEST,
        Vertex::LOWEST
    );
    let [c1, c2, c3, c4] = report.checked;
    let _ = writeln!(s, "routes={} checked={c1},{c2},{c3},{c4}", report.routes);
    for (item, route) in &report.counterexamples {
        let _ = writeln!(s, "counterexample {item:?}: {route}");
    }
    let _ = writeln!(s, "counterexamples={}", report.counterexamples.len());
    let code = if report.is_clean() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    Output {
        code,
        stdout: s,
        stderr: String::new(),
    }
}

/// The requested weight, or every candidate weight in lexicographic order.
fn weights_for(sel: &Selector) -> Vec<Weight> {
    match sel.weight {
        Some(w) => vec![w],
        None => dominant_weights(sel.length),
    }
}

fn paths(sel: &Selector) -> Output {
    let mut all = enumerate_all_hw(sel.length, Strategy::Parallel);
    let mut s = String::new();
    for w in weights_for(sel) {
        let ps = if w.is_dominant() {
            all.remove(&w).unwrap_or_default()
        } else {
            Vec::new()
        };
        if sel.weight.is_none() {
            let _ = writeln!(s, "# weight {w} count {}", ps.len());
        }
        for p in ps {
            let _ = writeln!(s, "{p}");
        }
    }
    Output::ok(s)
}

fn rcs(sel: &Selector) -> Output {
    let mut s = String::new();
    for w in weights_for(sel) {
        let list = enumerate_rcs(w, sel.length, Strategy::Parallel);
        if sel.weight.is_none() {
            let _ = writeln!(s, "# weight {w} count {}", list.len());
        }
        for (k, rc) in list.iter().enumerate() {
            if k > 0 {
                s.push('\n');
            }
            s.push_str(&rc.to_string());
        }
    }
    Output::ok(s)
}

fn x_sums(sel: &Selector) -> Output {
    let all = enumerate_all_hw(sel.length, Strategy::Parallel);
    let mut s = String::new();
    for w in weights_for(sel) {
        let x = generating_polynomial(all.get(&w).map(Vec::as_slice).unwrap_or_default());
        match sel.weight {
            Some(_) => writeln!(s, "{x}"),
            None => writeln!(s, "{w} {x}"),
        }
        .expect("writing to a String");
    }
    Output::ok(s)
}

fn m_sums(sel: &Selector) -> Output {
    let mut s = String::new();
    for w in weights_for(sel) {
        let m = match fermionic_m(w, sel.length, Strategy::Parallel) {
            Ok(m) => m,
            Err(e) => {
                return Output {
                    code: EXIT_FAILURE,
                    stdout: s,
                    stderr: format!("{e}\n"),
                };
            }
        };
        match sel.weight {
            Some(_) => writeln!(s, "{m}"),
            None => writeln!(s, "{w} {m}"),
        }
        .expect("writing to a String");
    }
    Output::ok(s)
}

fn read(path: &PathBuf) -> Result<String, Output> {
    std::fs::read_to_string(path).map_err(|e| Output::usage(format!("{}: {e}\n", path.display())))
}

fn statistics_line(c: i64, d: i64) -> (String, i32) {
    (
        format!("c={c} D={d}\n"),
        if c == d { EXIT_OK } else { EXIT_FAILURE },
    )
}

fn phi_cmd(file: &PathBuf) -> Output {
    let text = match read(file) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let rc: RiggedConfiguration = match text.parse() {
        Ok(rc) => rc,
        Err(e) => return Output::usage(format!("{e}\n")),
    };
    let path = match phi(&rc) {
        Ok(p) => p,
        Err(e) => return Output::usage(format!("{e}\n")),
    };
    let (stats, code) = statistics_line(cc(&rc), energy_d(&path));
    Output {
        code,
        stdout: format!("{path}\n{stats}"),
        stderr: String::new(),
    }
}

fn phi_inv_cmd(file: &PathBuf) -> Output {
    let text = match read(file) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let path: Path = match text.parse() {
        Ok(p) => p,
        Err(e) => return Output::usage(format!("{e}\n")),
    };
    let rc = match phi_inv(&path) {
        Ok(rc) => rc,
        Err(e) => return Output::usage(format!("{e}\n")),
    };
    let (stats, code) = statistics_line(cc(&rc), energy_d(&path));
    Output {
        code,
        stdout: format!("{rc}{stats}"),
        stderr: String::new(),
    }
}

fn verify_cmd(max_length: usize, jobs: Option<usize>, bij: Option<usize>, json: bool) -> Output {
    let strategy = match jobs {
        Some(0) => return Output::usage("--jobs must be at least 1\n"),
        Some(1) => Strategy::Sequential,
        _ => Strategy::Parallel,
    };
    let opts = VerifyOptions {
        max_length,
        bijection_max_length: bij.unwrap_or(max_length),
        strategy,
    };
    let report = match jobs {
        #[cfg(feature = "parallel")]
        Some(k) if k > 1 => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| verify(&opts)),
            Err(e) => return Output::usage(format!("cannot start {k} workers: {e}\n")),
        },
        _ => verify(&opts),
    };
    let stdout = if json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        report.to_text()
    };
    let mut stderr = String::new();
    for c in &report.cases {
        let _ = writeln!(
            stderr,
            "L={} weight={} {:.1} ms",
            c.length, c.weight, c.elapsed_ms
        );
    }
    Output {
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_FAILURE
        },
        stdout,
        stderr,
    }
}
