use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use cdgforge::corpus::Corpus;
use cdgforge::scenario::{run, Report, RunOptions, Scenario, Workspace};
use cdgforge::verify::{run_suite, to_json_lines, Record, Suite, VerifyConfig};
use cdgforge::{Error, FieldSpec};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "cdgforge", version, about = "Exact computations with cdg modules and matrix factorizations")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Execute the commands of a JSON scenario.
    Run {
        file: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Run a verification suite (or `all`) over the standard corpus.
    Verify {
        suite: String,
        #[command(flatten)]
        flags: Flags,
    },
    /// Print a short description of a standard corpus object (`list` for all names).
    Describe {
        object: String,
        #[arg(long)]
        field: Option<u64>,
    },
}

#[derive(Args)]
struct Flags {
    /// Restrict to one command group or suite.
    #[arg(long)]
    only: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Override every randomized count.
    #[arg(long)]
    random_count: Option<usize>,
    /// Acyclicity window.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    window: Option<Vec<i64>>,
    /// Prime characteristic.
    #[arg(long)]
    field: Option<u64>,
    /// Results file, one JSON record per line.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Flags {
    fn config(&self) -> VerifyConfig {
        let mut cfg = VerifyConfig { seed: self.seed, random_count: self.random_count, ..VerifyConfig::default() };
        if let Some(w) = &self.window {
            cfg.window = (w[0], w[1]);
        }
        cfg
    }
}

enum Failure {
    Lib(Error),
    Io(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e)
    }
}

fn field(p: Option<u64>) -> Option<FieldSpec> {
    p.map(FieldSpec::Prime)
}

fn emit(report: &Report, out: Option<&Path>) -> anyhow::Result<bool> {
    let failed = report.records.iter().filter(|r| !r.passed()).count();
    let mut text = String::new();
    for note in &report.notes {
        text.push_str(note);
        text.push('\n');
    }
    for r in &report.records {
        text.push_str(&format!("{} {}\n", if r.passed() { "PASS" } else { "FAIL" }, r.id));
    }
    text.push_str(&format!("{} assertions, {failed} failed\n", report.records.len()));
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if let Some(path) = out {
        std::fs::write(path, to_json_lines(&report.records)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(failed == 0)
}

fn verify(suite: &str, flags: &Flags) -> Result<Vec<Record>, Failure> {
    let f = field(flags.field).unwrap_or_default().to_field()?;
    let corpus = Corpus::standard(f)?;
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let cfg = flags.config();
    let mut records = Vec::new();
    for s in suites {
        if flags.only.as_ref().is_some_and(|o| o != s.name()) {
            continue;
        }
        records.extend(run_suite(s, &corpus, &cfg)?);
    }
    Ok(records)
}

fn main_inner(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Cmd::Run { file, flags } => {
            let text = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let sc = Scenario::from_json(&text)?;
            let ws = Workspace::build(&sc, field(flags.field))?;
            let opts = RunOptions { only: flags.only.clone(), verify: flags.config() };
            let report = run(&ws, &opts)?;
            Ok(emit(&report, flags.out.as_deref())?)
        }
        Cmd::Verify { suite, flags } => {
            let records = verify(&suite, &flags)?;
            Ok(emit(&Report { records, notes: vec![] }, flags.out.as_deref())?)
        }
        Cmd::Describe { object, field: p } => {
            let corpus = Corpus::standard(field(p).unwrap_or_default().to_field()?)?;
            let names = corpus.names();
            if object == "list" {
                for (n, d) in &names {
                    println!("{n}: {d}");
                }
                return Ok(true);
            }
            let d = names.get(&object).ok_or_else(|| Error::Validation(format!("no corpus object named `{object}`")))?;
            println!("{object}: {d}");
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match main_inner(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
