//! Command-line front end: parse a problem document, run the requested
//! analysis, print a deterministic report.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical failure (the
//! report carries re-checkable witnesses), 2 on input or usage errors.

mod commands;
mod document;
mod fixtures;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use commands::Context;
use report::{digest_hex, ReportFormat, RunReport};

#[derive(Parser)]
#[command(
    name = "homlts",
    version,
    about = "Exact verifier and cohomology calculator for compatible Hom-Lie triple systems"
)]
struct Cli {
    /// List the built-in example documents and exit.
    #[arg(long)]
    fixtures: bool,

    /// Print a built-in example document as JSON and exit.
    #[arg(long, value_name = "NAME")]
    dump_fixture: Option<String>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args)]
struct CommonArgs {
    /// Path to a JSON problem document, or `fixture:NAME` for a built-in.
    input: String,

    /// Report format.
    #[arg(long, value_enum, default_value = "text")]
    report: ReportFormat,

    /// Maximum number of recorded witnesses per failing check.
    #[arg(long, default_value_t = 5)]
    witness_limit: usize,

    /// Cochain degree cap.
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of the pair (and representation, if present).
    Verify(CommonArgs),
    /// Compute cohomology dimensions and representatives in one degree.
    Cohomology {
        #[command(flatten)]
        common: CommonArgs,
        /// Cohomology degree.
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Maurer-Cartan checks for the pair (and shifted pair, if increments
    /// are present).
    Mc(CommonArgs),
    /// Check the operator `N` and emit the deformation it generates.
    Nijenhuis(CommonArgs),
    /// Double-oracle linear-deformation check; with `N`, also equivalence.
    Deform(CommonArgs),
    /// Build, verify and classify the abelian extension along `mu`.
    Extend(CommonArgs),
    /// Decide whether `mu` and `nu` are cohomologous; emit the witness.
    Cohomologous(CommonArgs),
}

fn read_input(input: &str) -> Result<Vec<u8>, document::InputError> {
    if let Some(name) = input.strip_prefix("fixture:") {
        return fixtures::fixture_bytes(name).ok_or_else(|| {
            document::InputError(format!(
                "unknown fixture {name:?}; run `homlts --fixtures` for the list"
            ))
        });
    }
    std::fs::read(input).map_err(|e| document::InputError(format!("cannot read {input:?}: {e}")))
}

type Runner<'a> = Box<
    dyn Fn(&document::ProblemDocument, &Context) -> Result<RunReport, document::InputError> + 'a,
>;

fn run(command: &Command) -> Result<(RunReport, ReportFormat), document::InputError> {
    let (common, runner): (&CommonArgs, Runner) = match command {
        Command::Verify(c) => (c, Box::new(commands::cmd_verify)),
        Command::Cohomology { common, degree } => {
            let degree = *degree;
            (
                common,
                Box::new(move |doc, ctx| commands::cmd_cohomology(doc, degree, ctx)),
            )
        }
        Command::Mc(c) => (c, Box::new(commands::cmd_mc)),
        Command::Nijenhuis(c) => (c, Box::new(commands::cmd_nijenhuis)),
        Command::Deform(c) => (c, Box::new(commands::cmd_deform)),
        Command::Extend(c) => (c, Box::new(commands::cmd_extend)),
        Command::Cohomologous(c) => (c, Box::new(commands::cmd_cohomologous)),
    };

    let bytes = read_input(&common.input)?;
    let doc = document::parse_document(&bytes)?;
    let ctx = Context {
        input_label: common.input.clone(),
        digest: digest_hex(&bytes),
        witness_limit: common.witness_limit,
        max_degree: common.max_degree,
    };
    let report = runner(&doc, &ctx)?;
    Ok((report, common.report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if cli.fixtures {
        for name in fixtures::fixture_names() {
            println!("fixture:{name}");
        }
        return ExitCode::SUCCESS;
    }
    if let Some(name) = &cli.dump_fixture {
        return match fixtures::fixture_bytes(name) {
            Some(bytes) => {
                std::io::stdout().write_all(&bytes).expect("stdout");
                ExitCode::SUCCESS
            }
            None => {
                eprintln!("unknown fixture {name:?}; run `homlts --fixtures` for the list");
                ExitCode::from(2)
            }
        };
    }

    let Some(command) = &cli.command else {
        eprintln!("no command given; see `homlts --help`");
        return ExitCode::from(2);
    };

    let started = Instant::now();
    match run(command) {
        Ok((report, format)) => {
            print!("{}", report.render(format));
            // timing stays out of the report so identical inputs give
            // byte-identical output
            eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
            ExitCode::from(u8::try_from(report.exit_code()).unwrap_or(2))
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
