use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopf_link::analysis::{self, AnalysisReport, Session};
use hopf_link::format::from_json;
use hopf_link::generate::generate;
use hopf_link::{corpus, CliError};
use hopf_link_core::Error;

#[derive(Parser)]
#[command(name = "hopf-link", version, about = "Link-indecomposable decompositions of finite-dimensional Hopf algebras")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Override the cyclotomic order of the coefficient field.
    #[arg(long, global = true, value_name = "N")]
    field_order: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural axioms.
    Check { input: String },
    /// Coradical, simple subcoalgebras and orthonormal idempotents.
    Coradical { input: String },
    /// Link quiver, optionally written as Graphviz.
    Quiver {
        input: String,
        #[arg(long, value_name = "PATH")]
        dot: Option<String>,
    },
    /// Link-indecomposable components and their checks.
    Components { input: String },
    /// Component translates, products and the principal component.
    VerifyDcp { input: String },
    /// Smash coproduct pipeline for a generator spec such as smash:H12.
    Smash { spec: String },
    /// Every analysis.
    Analyze { input: String },
    /// Verify the fixture corpus, or rewrite it with --regen.
    Corpus {
        #[arg(long)]
        regen: bool,
        #[arg(long, default_value = "corpus")]
        dir: PathBuf,
    },
}

fn load(input: &str, field_order: Option<u32>) -> Result<Session, CliError> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {}", input, e)))?;
        let h = from_json(&text, field_order)?;
        let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| input.to_string());
        return Ok(Session::new(&id, h, None));
    }
    let g = generate(input)?;
    let h = match field_order {
        Some(n) => g.hopf.with_field_order(n)?,
        None => g.hopf,
    };
    Ok(Session::new(input, h, g.smash))
}

fn emit(report: &AnalysisReport, json: bool) -> ExitCode {
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.failed() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let fo = cli.field_order;
    let single = |input: &str, f: &dyn Fn(&mut Session, &mut AnalysisReport) -> Result<(), CliError>| {
        let mut s = load(input, fo)?;
        let mut out = AnalysisReport::new(&s.id);
        f(&mut s, &mut out)?;
        Ok(emit(&out, cli.json))
    };
    match &cli.command {
        Command::Check { input } => single(input, &|s, o| {
            analysis::section_axioms(s, o);
            Ok(())
        }),
        Command::Coradical { input } => single(input, &|s, o| analysis::section_coradical(s, o)),
        Command::Quiver { input, dot } => single(input, &|s, o| analysis::section_quiver(s, o, dot.as_deref())),
        Command::Components { input } => single(input, &|s, o| analysis::section_components(s, o)),
        Command::VerifyDcp { input } => single(input, &|s, o| {
            analysis::section_dcp(s, o)?;
            o.note("component_dims", serde_json::json!(s.link()?.2.dims()));
            Ok(())
        }),
        Command::Smash { spec } => {
            if !spec.starts_with("smash:") {
                return Err(CliError::Usage(format!("{:?} is not a smash generator spec", spec)));
            }
            single(spec, &|s, o| {
                analysis::section_smash(s, o)?;
                o.note("component_dims", serde_json::json!(s.link()?.2.dims()));
                Ok(())
            })
        }
        Command::Analyze { input } => {
            let mut s = load(input, fo)?;
            let out = analysis::full(&mut s)?;
            Ok(emit(&out, cli.json))
        }
        Command::Corpus { regen, dir } => {
            if *regen {
                for p in corpus::regen(dir)? {
                    println!("wrote {}", p.display());
                }
                return Ok(ExitCode::SUCCESS);
            }
            let reports = corpus::verify_all(dir)?;
            let failed = reports.iter().any(|r| r.failed());
            if cli.json {
                let all: Vec<_> = reports.iter().collect();
                println!("{}", serde_json::to_string_pretty(&all).expect("reports serialize"));
            } else {
                for r in &reports {
                    println!(
                        "{:<16} {:>3} pass {:>3} fail {:>3} n/a",
                        r.algebra_id,
                        r.count("pass"),
                        r.count("fail"),
                        r.count("not_applicable")
                    );
                    for c in r.checks.iter().filter(|c| c.status == "fail") {
                        println!("    FAIL {}  {}", c.name, c.details);
                    }
                }
            }
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(CliError::Engine(Error::NotApplicable(reason))) => {
            println!("not applicable: {}", reason);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
