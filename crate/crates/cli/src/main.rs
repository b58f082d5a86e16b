use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use frobcell::analysis::{analyze, render_check, render_text, AnalysisOptions};
use frobcell::fixtures::{fixture, provenance, FIXTURE_NAMES};
use frobcell::report::Status;
use frobcell::spec_file::{dump, to_json_pretty, AnySpec, LoadOptions, Loaded};
use frobcell::Field;

#[derive(Parser)]
#[command(
    name = "frobcell",
    version,
    about = "Frobenius and cellular structure checks for finite-dimensional algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a quiver presentation into a structure-constant spec.
    Build {
        input: String,
        #[arg(short, long)]
        output: PathBuf,
        #[command(flatten)]
        load: LoadArgs,
        /// Check associativity and unit laws before writing.
        #[arg(long)]
        validate: bool,
    },
    /// Print the full analysis of an algebra.
    Report {
        input: String,
        #[command(flatten)]
        load: LoadArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run selected checks; exit 0 iff all of them pass.
    Verify {
        input: String,
        /// `all`, `algebra`, `section2`, `section3`, or a check id such as `lemma-3.2`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        load: LoadArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Write a built-in example as a structure-constant spec plus a provenance note.
    Fixture {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(FIXTURE_NAMES))]
        name: String,
        #[arg(short, long)]
        output: PathBuf,
        #[command(flatten)]
        load: LoadArgs,
    },
}

#[derive(Args)]
struct LoadArgs {
    /// `q` for the rationals or `fp:<p>` for a prime field.
    #[arg(long)]
    field: Option<Field>,
    /// Parameter override, e.g. `--param lambda=3`.
    #[arg(long = "param", value_parser = parse_param)]
    params: Vec<(String, String)>,
    #[arg(long)]
    max_degree: Option<usize>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Replace the given cell order by the least order the products force.
    #[arg(long)]
    search_poset: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn parse_param(s: &str) -> Result<(String, String), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

/// Load failures and unmet preconditions.
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

impl LoadArgs {
    fn options(&self) -> LoadOptions {
        LoadOptions {
            field: self.field,
            params: self.params.clone(),
            max_degree: self.max_degree,
        }
    }
}

/// `fixture:<name>` selects a built-in example; anything else is a path.
fn read_spec(input: &str) -> Result<AnySpec, Fatal> {
    match input.strip_prefix("fixture:") {
        Some(name) => fixture(name).ok_or_else(|| Fatal(format!("unknown fixture {name:?}"))),
        None => Ok(AnySpec::read(Path::new(input))?),
    }
}

fn load(input: &str, args: &LoadArgs) -> Result<Loaded, Fatal> {
    Ok(read_spec(input)?.load(&args.options())?)
}

fn write(path: &Path, text: &str) -> Result<(), Fatal> {
    std::fs::write(path, text).map_err(|e| Fatal(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<u8, Fatal> {
    match cli.command {
        Command::Build {
            input,
            output,
            load: la,
            validate,
        } => {
            let loaded = load(&input, &la)?;
            if validate {
                let v = loaded.algebra.verify();
                if !v.is_empty() {
                    for x in &v {
                        eprintln!("{x}");
                    }
                    return Ok(1);
                }
            }
            write(&output, &to_json_pretty(&dump(&loaded)))?;
            Ok(0)
        }
        Command::Report {
            input,
            load: la,
            run,
        } => {
            let loaded = load(&input, &la)?;
            let a = analyze(&loaded, &options(&run))?;
            match run.format {
                Format::Text => print!("{}", render_text(&a)),
                Format::Structured => print!("{}", to_json_pretty(&a)),
            }
            Ok(0)
        }
        Command::Verify {
            input,
            suite,
            load: la,
            run,
        } => {
            let loaded = load(&input, &la)?;
            let a = analyze(&loaded, &options(&run))?;
            let selected: Vec<_> = a.selected(&suite).cloned().collect();
            let failed = selected.iter().any(|c| c.status == Status::Fail);
            let passed = selected.iter().any(|c| c.status == Status::Pass);
            let code = if failed {
                1
            } else if passed {
                0
            } else {
                2
            };
            match run.format {
                Format::Text => {
                    let mut s = String::new();
                    for c in &selected {
                        render_check(&mut s, c);
                    }
                    print!("{s}");
                }
                Format::Structured => {
                    let doc =
                        serde_json::json!({ "suite": suite, "exit": code, "checks": selected });
                    print!("{}", to_json_pretty(&doc));
                }
            }
            if selected.is_empty() {
                eprintln!("no checks match {suite:?}");
            } else if code == 2 {
                eprintln!("all selected checks were skipped");
            }
            Ok(code)
        }
        Command::Fixture {
            name,
            output,
            load: la,
        } => {
            let spec = fixture(&name).expect("validated by clap");
            let loaded = spec.load(&la.options())?;
            std::fs::create_dir_all(&output)?;
            write(
                &output.join(format!("{name}.json")),
                &to_json_pretty(&dump(&loaded)),
            )?;
            write(
                &output.join(format!("{name}.provenance.txt")),
                &provenance(&name, &spec, &loaded),
            )?;
            Ok(0)
        }
    }
}

fn options(run: &RunArgs) -> AnalysisOptions {
    AnalysisOptions {
        search_poset: run.search_poset,
        ..Default::default()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
