//! `skewcat`: check, construct and normalize finite skew structures given as
//! JSON documents.
//!
//! Usage:
//!   skewcat check skew-moncat strictZ2.json
//!   skewcat mw enumerate ch3.json --format text
//!   skewcat normalize homCh2.json --bound 6 --out modules.json
//!   skewcat theorem2 --base ch2.json --endo endo.json --hom objects.json
//!   skewcat fixture strict-z2 > strictZ2.json
//!
//! Exit status: 0 every check passes, 1 a law fails, 2 the input is
//! malformed, 3 a precondition or bound fails, 4 a falsification.

mod commands;
mod library;
mod outcome;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use skewcat_core::format;

use commands::{Ctx, Options};
use outcome::{Counts, Envelope, Failure, Outcome};

#[derive(Parser, Debug)]
#[command(name = "skewcat", version, about = "Law checkers and constructions for finite skew structures")]
struct Cli {
    /// Output format on standard output.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Write the constructed document (or the full output if nothing is
    /// constructed) to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Size bound: morphisms of the base for `mw enumerate`, modules for
    /// `normalize`.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Number of random instances added by the redundancy harnesses.
    #[arg(long, global = true, default_value_t = 0)]
    seeds: u64,
    /// Largest hom-category (in 1-cells) the random harnesses accept.
    #[arg(long, global = true, default_value_t = 6)]
    max_hom_size: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the laws of a structure.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        file: PathBuf,
    },
    /// Monads in no-iteration form.
    Mw {
        #[arg(value_enum)]
        verb: MwVerb,
        file: PathBuf,
    },
    /// Skew warpings on skew bicategories.
    Warping {
        #[arg(value_enum)]
        verb: WarpingVerb,
        file: PathBuf,
    },
    /// Algebras for skew warpings.
    Algebra {
        #[arg(value_enum)]
        verb: AlgebraVerb,
        file: PathBuf,
    },
    /// Profunctors and the hom-category K(A, B).
    Prof {
        #[command(subcommand)]
        verb: ProfVerb,
    },
    /// Normalize a skew monoidal category or a hom bundle.
    Normalize { file: PathBuf },
    /// Compare K(B, B) with the normalization of K(A, B) on object lists.
    Theorem2 {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        endo: PathBuf,
        #[arg(long)]
        hom: PathBuf,
    },
    /// List the embedded fixtures, or print one as an input document.
    Fixture { name: Option<String> },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum CheckKind {
    Category,
    SkewMoncat,
    SkewBicat,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum MwVerb {
    Check,
    ToMonad,
    Kleisli,
    Enumerate,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum WarpingVerb {
    Check,
    Kleisli,
    Redundancy,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum AlgebraVerb {
    Check,
    Redundancy,
}

#[derive(Subcommand, Debug)]
enum ProfVerb {
    /// Coend composite `g·f` of two profunctors.
    Compose { g: PathBuf, f: PathBuf },
    /// Skew monoidal checks of K(A, B) on a bundle's objects.
    Homcat { file: PathBuf },
    /// Monoidal functor checks of u on a bundle's endo list.
    U { file: PathBuf },
    /// Monoids on a bundle's objects and their mw-monads.
    Monoids { file: PathBuf },
}

fn value_name<V: ValueEnum>(v: V) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

impl Command {
    fn label(&self) -> String {
        match self {
            Command::Check { kind, .. } => format!("check {}", value_name(*kind)),
            Command::Mw { verb, .. } => format!("mw {}", value_name(*verb)),
            Command::Warping { verb, .. } => format!("warping {}", value_name(*verb)),
            Command::Algebra { verb, .. } => format!("algebra {}", value_name(*verb)),
            Command::Prof { verb } => match verb {
                ProfVerb::Compose { .. } => "prof compose",
                ProfVerb::Homcat { .. } => "prof homcat",
                ProfVerb::U { .. } => "prof u",
                ProfVerb::Monoids { .. } => "prof monoids",
            }
            .into(),
            Command::Normalize { .. } => "normalize".into(),
            Command::Theorem2 { .. } => "theorem2".into(),
            Command::Fixture { .. } => "fixture".into(),
        }
    }
}

fn dispatch(ctx: &mut Ctx, command: &Command) -> Result<Outcome, Failure> {
    use commands::*;
    match command {
        Command::Check { kind, file } => match kind {
            CheckKind::Category => check_category(ctx, file),
            CheckKind::SkewMoncat => check_moncat(ctx, file),
            CheckKind::SkewBicat => check_bicat(ctx, file),
        },
        Command::Mw { verb, file } => match verb {
            MwVerb::Check => mw_check(ctx, file),
            MwVerb::ToMonad => mw_to_monad_cmd(ctx, file),
            MwVerb::Kleisli => mw_kleisli(ctx, file),
            MwVerb::Enumerate => mw_enumerate(ctx, file),
        },
        Command::Warping { verb, file } => match verb {
            WarpingVerb::Check => warping_check(ctx, file),
            WarpingVerb::Kleisli => warping_kleisli(ctx, file),
            WarpingVerb::Redundancy => warping_redundancy(ctx, file),
        },
        Command::Algebra { verb, file } => match verb {
            AlgebraVerb::Check => algebra_check(ctx, file),
            AlgebraVerb::Redundancy => algebra_redundancy(ctx, file),
        },
        Command::Prof { verb } => match verb {
            ProfVerb::Compose { g, f } => prof_compose_cmd(ctx, g, f),
            ProfVerb::Homcat { file } => prof_homcat(ctx, file),
            ProfVerb::U { file } => prof_u(ctx, file),
            ProfVerb::Monoids { file } => prof_monoids(ctx, file),
        },
        Command::Normalize { file } => normalize_cmd(ctx, file),
        Command::Theorem2 { base, endo, hom } => theorem2_cmd(ctx, base, endo, hom),
        Command::Fixture { name } => fixture(name.as_deref()),
    }
}

fn text_summary(outcome: Option<&Outcome>, failure: Option<&Failure>, code: i32) -> String {
    let mut s = String::new();
    if let Some(o) = outcome {
        s.push_str(&o.report.summary());
        for n in &o.notes {
            s.push_str(&format!("  note: {n}\n"));
        }
    }
    if let Some(f) = failure {
        s.push_str(&format!("error: {f}\n"));
    }
    s.push_str(&format!("exit {code}\n"));
    s
}

fn main() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    let mut ctx = Ctx::new(Options {
        bound: cli.bound,
        seeds: cli.seeds,
        max_hom_size: cli.max_hom_size,
    });
    let command = cli.command.label();
    let run = dispatch(&mut ctx, &cli.command);

    // `fixture NAME` prints the document itself so it can be redirected.
    if let (Command::Fixture { name: Some(_) }, Ok(o)) = (&cli.command, &run) {
        let text = format::print(o.result.as_ref().expect("fixtures carry a document"));
        match &cli.out {
            Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
            None => print!("{text}"),
        }
        return Ok(ExitCode::SUCCESS);
    }

    let (outcome, failure) = match run {
        Ok(o) => (Some(o), None),
        Err(f) => (None, Some(f)),
    };
    let code = match (&outcome, &failure) {
        (_, Some(f)) => f.code,
        (Some(o), None) => o.exit_code(),
        (None, None) => unreachable!(),
    };
    let envelope = Envelope {
        tool: "skewcat",
        version: env!("CARGO_PKG_VERSION"),
        command: &command,
        inputs: &ctx.inputs,
        exit_code: code,
        summary: outcome.as_ref().map(|o| Counts::of(&o.report)),
        report: outcome.as_ref().map(|o| &o.report),
        result: outcome.as_ref().and_then(|o| o.result.as_ref()),
        notes: outcome.as_ref().map(|o| o.notes.as_slice()).unwrap_or(&[]),
        error: failure.as_ref(),
    };
    let json = format::print(&envelope);
    let summary = text_summary(outcome.as_ref(), failure.as_ref(), code);

    if let Some(path) = &cli.out {
        let text = match outcome.as_ref().and_then(|o| o.result.as_ref()) {
            Some(doc) => format::print(doc),
            None => json.clone(),
        };
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    match cli.format {
        OutputFormat::Json => {
            print!("{json}");
            eprint!("{summary}");
        }
        OutputFormat::Text => print!("{summary}"),
    }
    std::io::stdout().flush()?;
    Ok(ExitCode::from(code as u8))
}
