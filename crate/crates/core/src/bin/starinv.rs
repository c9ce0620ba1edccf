use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use starinv::classify::classify;
use starinv::counterexample::{search, Claim};
use starinv::report::{
    classify_document, counterexample_document, survey_document, verify_document, Document,
    Invocation,
};
use starinv::survey::survey;
use starinv::{parse_elem, parse_ring, theorem, Error};

/// Exact generalized inverses and EP-type classification in finite *-rings.
#[derive(Parser)]
#[command(name = "starinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the structured JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Record wall-clock time in `elapsed_ms` (breaks byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one element: inverses, EP / CEP / *-DMP verdicts, decompositions.
    Classify {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        elem: String,
    },
    /// Exhaustively check a registry theorem over a ring.
    Verify {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        theorem: String,
    },
    /// Search for counterexamples to a refutable claim.
    Counterexample {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        claim: String,
        /// Report every counterexample, not just the first.
        #[arg(long)]
        all: bool,
    },
    /// Whole-ring counts of subsets and invertibility classes.
    Survey {
        #[arg(long)]
        ring: String,
    },
    /// List registry theorems and refutable claims.
    List,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BoundExceeded(_) => 3,
        Error::MethodDisagreement { .. } => 1,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<Document, Error> {
    match &cli.command {
        Command::Classify { ring, elem } => {
            let r = parse_ring(ring)?;
            let a = parse_elem(&r, elem)?;
            let inv = Invocation::new("classify", &[("ring", ring), ("elem", elem)]);
            Ok(classify_document(inv, &r, &classify(&r, a)?))
        }
        Command::Verify { ring, theorem: id } => {
            theorem::lookup(id)?;
            let r = parse_ring(ring)?;
            let inv = Invocation::new("verify", &[("ring", ring), ("theorem", id)]);
            Ok(verify_document(inv, &r, &theorem::verify(&r, id)?))
        }
        Command::Counterexample { ring, claim, all } => {
            let c: Claim = claim.parse()?;
            let r = parse_ring(ring)?;
            let mut args = vec![("ring", ring.as_str()), ("claim", claim.as_str())];
            if *all {
                args.push(("all", "true"));
            }
            Ok(counterexample_document(
                Invocation::new("counterexample", &args),
                &r,
                &search(&r, c, *all),
            ))
        }
        Command::Survey { ring } => {
            let r = parse_ring(ring)?;
            Ok(survey_document(
                Invocation::new("survey", &[("ring", ring)]),
                &r,
                &survey(&r),
            ))
        }
        Command::List => unreachable!("handled before dispatch"),
    }
}

fn list() {
    println!("theorems:");
    for t in theorem::REGISTRY {
        println!("  {:<18} {}", t.id, t.statement);
    }
    println!("claims:");
    for c in Claim::ALL {
        println!("  {:<18} {}", c.id(), c.statement());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if matches!(cli.command, Command::List) {
        list();
        return ExitCode::SUCCESS;
    }
    let start = Instant::now();
    match run(&cli) {
        Ok(mut doc) => {
            if cli.timing {
                doc.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            if cli.json {
                println!("{}", doc.to_json());
            } else {
                print!("{}", doc.render_text());
            }
            ExitCode::from(doc.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
