//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 pass, 1 semantic failure, 2 parse error, 3 invalid input
//! graph, 4 cap exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rainbow_core::{
    rc_exact, verify_coloring, EdgeColoring, EnumerationError, EnumerationStream, GraphClass, GraphError,
    RainbowError,
};

use crate::format::{parse_coloring_triples, parse_graph, render_coloring, render_graph, GraphFormat};
use crate::report::{Theorem, Verdict};
use crate::verify::{verify, VerifyError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "rainbow",
    version,
    about = "Exact rainbow connection numbers for small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute rc(G) and print a witness coloring as `u v c` lines.
    Rc {
        /// Graph file, or `-` for standard input.
        graph: PathBuf,
        #[arg(long, default_value = "edgelist")]
        format: GraphFormat,
    },
    /// Check whether a coloring makes the graph rainbow connected.
    CheckColoring {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long, default_value = "edgelist")]
        format: GraphFormat,
    },
    /// Check a theorem over every graph up to `--max-n` vertices.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[arg(long)]
        max_n: usize,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also write the report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// List one representative per isomorphism class, one graph per line
    /// (edge lists are separated by blank lines).
    Enumerate {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        diameter: Option<usize>,
        #[arg(long, default_value = "graph6")]
        format: GraphFormat,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<RainbowError> for Failure {
    fn from(e: RainbowError) -> Self {
        Failure::new(EXIT_INVALID, e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::new(EXIT_INVALID, e.to_string())
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        let code = match e {
            EnumerationError::CapExceeded { .. } => EXIT_CAP,
            EnumerationError::OrderTooSmall { .. } => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::CapExceeded { .. } => Failure::new(EXIT_CAP, e.to_string()),
            VerifyError::Enumeration(e) => e.into(),
            VerifyError::Pool { .. } | VerifyError::Rainbow(_) => Failure::new(EXIT_INVALID, e.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::new(EXIT_PARSE, format!("{}: {e}", path.display()))
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io_failure(path, e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| io_failure(path, e))
    }
}

fn load_graph(path: &Path, format: GraphFormat) -> Result<rainbow_core::Graph, Failure> {
    let text = read_input(path)?;
    parse_graph(&text, format).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::new(EXIT_FAIL, format!("writing output: {e}")))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Rc { graph, format } => {
            let g = load_graph(&graph, format)?;
            let r = rc_exact(&g)?;
            write_out(out, &format!("rc {}\n", r.rc))?;
            write_out(out, &render_coloring(&r.witness))?;
            Ok(EXIT_PASS)
        }
        Command::CheckColoring {
            graph,
            coloring,
            format,
        } => {
            let g = load_graph(&graph, format)?;
            let text = read_input(&coloring)?;
            let triples = parse_coloring_triples(&text)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", coloring.display())))?;
            let c = EdgeColoring::from_triples(&g, &triples)?;
            let report = verify_coloring(&g, &c)?;
            if report.passed() {
                write_out(out, "pass\n")?;
                Ok(EXIT_PASS)
            } else {
                let mut s = format!("fail {}\n", report.failing_pairs.len());
                for (u, v) in &report.failing_pairs {
                    s.push_str(&format!("{u} {v}\n"));
                }
                write_out(out, &s)?;
                Ok(EXIT_FAIL)
            }
        }
        Command::Verify {
            theorem,
            max_n,
            jobs,
            report,
        } => {
            let r = verify(theorem, max_n, jobs)?;
            let text = r.render();
            if let Some(path) = report {
                fs::write(&path, &text)
                    .map_err(|e| Failure::new(EXIT_FAIL, format!("{}: {e}", path.display())))?;
            }
            write_out(out, &text)?;
            write_out(out, &format!("elapsed: {:.3}s\n", r.elapsed.as_secs_f64()))?;
            Ok(match r.verdict() {
                Verdict::Pass => EXIT_PASS,
                Verdict::Localized | Verdict::Fail => EXIT_FAIL,
            })
        }
        Command::Enumerate {
            class,
            n,
            diameter,
            format,
            jobs,
        } => {
            let mut stream = EnumerationStream::new(n, class);
            if let Some(d) = diameter {
                stream = stream.with_diameter(d);
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Failure::new(EXIT_INVALID, e.to_string()))?;
            let graphs = pool.install(|| stream.collect())?;
            let blocks: Vec<String> = graphs.iter().map(|g| render_graph(g, format)).collect();
            let sep = match format {
                GraphFormat::Graph6 => "",
                GraphFormat::EdgeList => "\n",
            };
            write_out(out, &blocks.join(sep))?;
            Ok(EXIT_PASS)
        }
    }
}
