use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use assoc_nf::report::{render_jsonl, render_table};
use assoc_nf::{
    build_graph_with, enumerate_shapes_capped, export_dot, normalize, parse, verify_all_with, Metrics, Strategy, Term,
    VerifyOptions, ENUMERATION_CAP, GRAPH_CAP,
};

/// Normal forms and exhaustive checks for the rewrite rule (x*y)*z -> x*(y*z).
///
/// Terms use the grammar T ::= LEAF | "(" T "*" T ")", where LEAF is a
/// label over [a-z0-9_] or "." for an unlabeled leaf.
#[derive(Parser)]
#[command(name = "assoc-nf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Shortest,
    Longest,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Shortest => Strategy::Shortest,
            StrategyArg::Longest => Strategy::Longest,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Jsonl,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form and the number of steps taken.
    Nf {
        term: Option<String>,
        /// Read one term per line instead.
        #[arg(long, conflicts_with = "term")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "shortest")]
        strategy: StrategyArg,
    },
    /// Print every step of a normalization.
    Trace {
        term: String,
        #[arg(long, value_enum, default_value = "shortest")]
        strategy: StrategyArg,
        /// Print only the step count.
        #[arg(long)]
        quiet: bool,
    },
    /// Print size, sigma, rightmost-leaf depth and normal-form status.
    Metrics { term: String },
    /// List every unlabeled shape with N internal nodes.
    Enumerate {
        n: usize,
        /// Print only how many there are.
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = ENUMERATION_CAP)]
        cap: usize,
    },
    /// Check every shape of size 0..=max-n against the graph oracles.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = GRAPH_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFormat,
        /// Run single-threaded (output is identical either way).
        #[arg(long)]
        serial: bool,
    },
    /// Write the rewrite graph on shapes of size N in DOT format.
    Graph {
        n: usize,
        /// Output file; stdout if omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = GRAPH_CAP)]
        cap: usize,
    },
}

enum Failure {
    /// Exit 1.
    Verification,
    /// Exit 2.
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_term(text: &str) -> Result<Term, Failure> {
    parse(text).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Nf { term, file, strategy } => {
            let inputs: Vec<String> = match (term, file) {
                (Some(t), _) => vec![t],
                (None, Some(path)) => fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
                    .lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(str::to_owned)
                    .collect(),
                (None, None) => return Err(Failure::Usage("nf needs a term or --file".into())),
            };
            for text in &inputs {
                let trace = normalize(&parse_term(text)?, strategy.into());
                writeln!(out, "{} steps={}", trace.final_term(), trace.len())?;
            }
        }
        Command::Trace { term, strategy, quiet } => {
            let trace = normalize(&parse_term(&term)?, strategy.into());
            if !quiet {
                writeln!(out, "start {}", trace.start())?;
                for step in trace.steps() {
                    writeln!(out, "{} ⊳ {}", step.position, step.term_after)?;
                }
                writeln!(out, "final {}", trace.final_term())?;
            }
            writeln!(out, "steps={}", trace.len())?;
        }
        Command::Metrics { term } => {
            let m = Metrics::of(&parse_term(&term)?);
            writeln!(out, "n={} sigma={} d_rm={} nf={}", m.size, m.sigma, m.d_rm, m.is_nf)?;
        }
        Command::Enumerate { n, count, cap } => {
            let shapes = enumerate_shapes_capped(n, cap)?;
            if count {
                writeln!(out, "{}", shapes.len())?;
            } else {
                for s in &shapes {
                    writeln!(out, "{s}")?;
                }
            }
        }
        Command::Verify { max_n, cap, format, serial } => {
            let reports = verify_all_with(max_n, VerifyOptions { cap, parallel: !serial })?;
            match format {
                ReportFormat::Table => out.write_all(render_table(&reports).as_bytes())?,
                ReportFormat::Jsonl => out.write_all(render_jsonl(&reports).as_bytes())?,
            }
            out.flush()?;
            if !reports.iter().all(|r| r.passed()) {
                return Err(Failure::Verification);
            }
        }
        Command::Graph { n, output, cap } => {
            let dot = export_dot(&build_graph_with(n, cap, true)?);
            match output {
                Some(path) => fs::write(&path, dot).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                None => out.write_all(dot.as_bytes())?,
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
