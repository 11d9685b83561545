use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use loopcoh::loops::Model;
use loopcoh::verify::{self, Suite};
use loopcoh_cli::{is_internal, load_file, parse_preset, run, Coefficients, EXIT_INTERNAL, EXIT_VALIDATION};

/// Cohomology of free loop space models of a presented cochain algebra.
#[derive(Parser, Debug)]
#[command(name = "loopcoh", version)]
struct Args {
    /// Model to compute: fls, hos or tc.
    #[arg(long, default_value = "fls")]
    model: Model,

    /// JSON algebra document.
    #[arg(long, conflicts_with = "preset")]
    input: Option<PathBuf>,

    /// sphere:<odd n> or wedge:<a>,<b>,...
    #[arg(long)]
    preset: Option<String>,

    /// Report H^n for n below this degree.
    #[arg(long, default_value_t = 16)]
    max_degree: i64,

    /// Z, F2 or Fp:<p>.
    #[arg(long, default_value = "Z")]
    coeff: Coefficients,

    /// Run an identity suite (all, dga, loop or circle) instead of a model.
    #[arg(long, conflicts_with_all = ["input", "preset"])]
    verify: Option<Suite>,

    /// Render a markdown table instead of TSV.
    #[arg(long)]
    markdown: bool,
}

fn fail(code: i32, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    // clap reports usage errors with status 2, which is reserved for invariant violations here
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_VALIDATION as u8 } else { 0 });
        }
    };

    if let Some(suite) = args.verify {
        let report = verify::run(suite);
        print!("{report}");
        return if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_INTERNAL as u8) };
    }

    let algebra = match (&args.input, &args.preset) {
        (Some(path), _) => load_file(path),
        (None, Some(p)) => parse_preset(p),
        (None, None) => return fail(EXIT_VALIDATION, "one of --input, --preset or --verify is required"),
    };
    let algebra = match algebra {
        Ok(a) => a,
        Err(e) => return fail(EXIT_VALIDATION, e),
    };

    match run(args.model, &algebra, args.max_degree, args.coeff) {
        Ok(table) => {
            if args.markdown {
                print!("{}", table.to_markdown());
            } else {
                print!("{}", table.to_tsv());
            }
            ExitCode::SUCCESS
        }
        Err(e) if is_internal(&e) => fail(EXIT_INTERNAL, e),
        Err(e) => fail(EXIT_VALIDATION, e),
    }
}
