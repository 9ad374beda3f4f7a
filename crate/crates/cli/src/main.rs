use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gint_cli::interp::execute;
use gint_cli::{corpus, parse_script, run_text, AggregateReport, RunOptions, Status};

#[derive(Parser)]
#[command(name = "gint", version, about = "Intersections of graded modules over polynomial rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Write the JSON report to this file (`-` for stdout)
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for randomized statements without their own seed
    #[arg(long)]
    seed: Option<u64>,
    /// Maximal monomial degree in Groebner computations
    #[arg(long)]
    degree_cap: Option<u32>,
    /// Coefficient field characteristic (0 for the rationals)
    #[arg(long)]
    field: Option<u64>,
    /// Show hypotheses and evidence for every check
    #[arg(long)]
    verbose: bool,
    /// Record wall-clock time in reports
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a script file
    Run {
        script: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Bundled example scripts
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Print invariants of one module binding of a script
    Invariants {
        script: PathBuf,
        #[arg(long)]
        module: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    Run {
        name: String,
        #[command(flatten)]
        common: Common,
    },
    RunAll {
        #[command(flatten)]
        common: Common,
    },
}

fn options(c: &Common) -> Result<RunOptions, String> {
    let env_cap = match std::env::var("GINT_DEGREE_CAP") {
        Ok(v) => Some(
            v.parse::<u32>()
                .map_err(|_| format!("GINT_DEGREE_CAP must be a positive integer, got `{v}`"))?,
        ),
        Err(_) => None,
    };
    Ok(RunOptions {
        seed: c.seed,
        degree_cap: c.degree_cap.or(env_cap),
        field: c.field,
    })
}

fn emit<T: serde::Serialize>(value: &T, text: String, c: &Common) -> Result<(), String> {
    match &c.json {
        Some(p) => {
            let json = serde_json::to_string_pretty(value).map_err(|e| e.to_string())? + "\n";
            if p.as_os_str() == "-" {
                print!("{json}");
            } else {
                std::fs::write(p, json).map_err(|e| format!("cannot write {}: {e}", p.display()))?;
                print!("{text}");
            }
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn read(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn main_inner(cli: Cli) -> Result<Status, String> {
    match cli.command {
        Command::Run { script, common } => {
            let text = read(&script)?;
            let r = run_text(&script.display().to_string(), &text, &options(&common)?, common.timing);
            emit(&r, r.to_text(common.verbose), &common)?;
            Ok(r.status())
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                for n in corpus::names() {
                    println!("{n}");
                }
                Ok(Status::Pass)
            }
            CorpusAction::Run { name, common } => {
                let text = corpus::get(&name).ok_or_else(|| {
                    format!("unknown corpus script `{name}`; try `gint corpus list`")
                })?;
                let r = run_text(&name, text, &options(&common)?, common.timing);
                emit(&r, r.to_text(common.verbose), &common)?;
                Ok(r.status())
            }
            CorpusAction::RunAll { common } => {
                let opts = options(&common)?;
                let reports: Vec<_> = corpus::CORPUS
                    .iter()
                    .map(|(n, t)| run_text(n, t, &opts, common.timing))
                    .collect();
                let agg = AggregateReport::new(reports);
                let text: String = agg.reports.iter().map(|r| r.to_text(common.verbose)).collect();
                emit(&agg, text, &common)?;
                Ok(agg.status())
            }
        },
        Command::Invariants { script, module, common } => {
            let text = read(&script)?;
            let parsed = parse_script(&text).map_err(|e| e.to_string())?;
            let ex = execute(&parsed, &options(&common)?, Some(&module));
            if let Some(e) = &ex.error {
                eprintln!("error: {}", e.message);
                return Ok(if e.cap_exceeded { Status::CapExceeded } else { Status::Usage });
            }
            let (_, s) = &ex.modules[0];
            let mut out = format!(
                "module {module}\n  generators in degrees {:?}, {} relations\n  dim {}  degree {}\n  hilbert polynomial coefficients {:?}\n",
                s.generator_degrees, s.relations, s.hilbert.dim, s.hilbert.degree, s.hilbert.hilbert_polynomial
            );
            if let (Some(pd), Some(depth), Some(cm)) = (s.pd, s.depth, s.is_cm) {
                out += &format!("  pd {pd}  depth {depth}  cohen-macaulay {cm}\n");
            }
            out += &format!("  ext dims {:?}\n", s.ext_dims);
            if let Some(g) = &s.betti_grid {
                out += g;
            }
            let value = serde_json::json!({
                "schema_version": gint_cli::report::SCHEMA_VERSION,
                "module": module,
                "invariants": s,
            });
            emit(&value, out, &common)?;
            Ok(Status::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Status::Usage as u8 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match main_inner(cli) {
        Ok(s) => ExitCode::from(s as u8),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(Status::Usage as u8)
        }
    }
}
