//! `genci`: classify Stanley-Reisner ideals as generalized complete
//! intersections, compute reduced homology, and run the enumeration oracle.
//!
//! Exit codes: 0 for every successful run (including mathematically negative
//! verdicts and validation runs that found mismatches), 1 for input or usage
//! errors, 2 for an internal route disagreement.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use genci_core::enumeration::{
    cross_validate, enumerate_complexes, sample_complexes, CheckId, CheckSelection, ALL_CHECKS,
};
use genci_core::fixtures::fixtures;
use genci_core::input::parse_input;
use genci_core::report::{classify_report, EnumerationReport};
use genci_core::{reduced_betti, Error, FieldSpec, InputDocument};

#[derive(Parser)]
#[command(name = "genci", version, about = "generalized complete intersection classifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a complex or ideal: CI, gCI by three routes, purity, core,
    /// homology, Cohen-Macaulay and Buchsbaum status per field.
    Classify(ClassifyArgs),
    /// Enumerate (or sample) complexes on n vertices and cross-validate the
    /// classifier routes and implications.
    Enumerate(EnumerateArgs),
    /// Reduced Betti numbers of a complex over one or more fields.
    Homology(HomologyArgs),
    /// List the built-in example catalog, or write it out as input files.
    Fixtures(FixturesArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Input file (text or JSON; `-` reads stdin)
    #[arg(long)]
    input: String,
    /// Field to compute homology over: `q`, `f2`, `f3`, ... (repeatable;
    /// defaults to q and f2)
    #[arg(long = "field")]
    fields: Vec<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Number of vertices
    #[arg(long)]
    n: usize,
    /// Sample this many random complexes instead of exhausting all of them
    #[arg(long)]
    sample: Option<usize>,
    /// RNG seed for sampling
    #[arg(long, default_value_t = 0, requires = "sample")]
    seed: u64,
    /// Checks to run: all, routes, purity, buchsbaum, converse, reconstruct
    /// (comma-separated or repeated)
    #[arg(long = "checks", value_delimiter = ',', default_value = "all")]
    checks: Vec<String>,
    /// Write each mismatching family to this directory as a replayable
    /// input file
    #[arg(long)]
    dump_dir: Option<PathBuf>,
}

#[derive(Args)]
struct HomologyArgs {
    /// Input file (text or JSON; `-` reads stdin)
    #[arg(long)]
    input: String,
    /// Field: `q`, `f2`, `f3`, ... (repeatable)
    #[arg(long = "field", required = true)]
    fields: Vec<String>,
}

#[derive(Args)]
struct FixturesArgs {
    /// Write each fixture to `<dir>/<name>.txt` instead of listing them
    #[arg(long)]
    emit: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify(args) => classify_command(args),
        Command::Enumerate(args) => enumerate_command(args),
        Command::Homology(args) => homology_command(args),
        Command::Fixtures(args) => fixtures_command(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::RouteDisagreement { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn read_input(path: &str) -> Result<InputDocument, Error> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(io_error)?
    } else {
        fs::read_to_string(path).map_err(io_error)?
    };
    parse_input(&text)
}

fn io_error(e: std::io::Error) -> Error {
    Error::Parse {
        line: 0,
        col: 0,
        msg: e.to_string(),
    }
}

fn parse_fields(specs: &[String]) -> Result<Vec<FieldSpec>, Error> {
    let mut out = Vec::new();
    for spec in specs {
        let field = if spec.eq_ignore_ascii_case("q") {
            FieldSpec::Rationals
        } else if let Some(p) = spec.strip_prefix('f').or_else(|| spec.strip_prefix('F')) {
            let p: u64 = p.parse().map_err(|_| Error::Parse {
                line: 0,
                col: 0,
                msg: format!("unknown field `{spec}` (expected q, f2, f3, ...)"),
            })?;
            FieldSpec::prime(p)?
        } else {
            return Err(Error::Parse {
                line: 0,
                col: 0,
                msg: format!("unknown field `{spec}` (expected q, f2, f3, ...)"),
            });
        };
        if !out.contains(&field) {
            out.push(field);
        }
    }
    Ok(out)
}

fn classify_command(args: ClassifyArgs) -> Result<(), Error> {
    let doc = read_input(&args.input)?;
    let fields = if args.fields.is_empty() {
        vec![FieldSpec::Rationals, FieldSpec::PrimeField(2)]
    } else {
        parse_fields(&args.fields)?
    };
    // On disagreement the error carries the three verdicts; dump the
    // offending input for replay before propagating it.
    let report = classify_report(&doc, &fields).inspect_err(|e| {
        if matches!(e, Error::RouteDisagreement { .. }) {
            eprintln!("offending input (replayable):\n{}", doc.to_text());
        }
    })?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(())
}

fn parse_checks(names: &[String]) -> Result<CheckSelection, Error> {
    let mut out: Vec<CheckId> = Vec::new();
    for name in names {
        let ids: &[CheckId] = match name.to_ascii_lowercase().as_str() {
            "all" => &ALL_CHECKS,
            "routes" => &[CheckId::Routes],
            "purity" => &[CheckId::Purity],
            "buchsbaum" => &[CheckId::Buchsbaum],
            "converse" => &[CheckId::Converse],
            "reconstruct" => &[CheckId::Reconstruct],
            other => {
                return Err(Error::Parse {
                    line: 0,
                    col: 0,
                    msg: format!("unknown check `{other}`"),
                })
            }
        };
        for &id in ids {
            if !out.contains(&id) {
                out.push(id);
            }
        }
    }
    Ok(CheckSelection(out))
}

fn enumerate_command(args: EnumerateArgs) -> Result<(), Error> {
    let selection = parse_checks(&args.checks)?;
    let started = Instant::now();
    let (families, mode, seed) = match args.sample {
        Some(count) => (
            sample_complexes(args.n, count, args.seed)?,
            "sampled".to_string(),
            Some(args.seed),
        ),
        None => (enumerate_complexes(args.n)?, "exhaustive".to_string(), None),
    };
    let summary = cross_validate(&families, &selection);
    let elapsed_ms = started.elapsed().as_millis() as u64;

    if let Some(dir) = &args.dump_dir {
        fs::create_dir_all(dir).map_err(io_error)?;
        for (k, m) in summary.mismatches.iter().enumerate() {
            let doc =
                InputDocument::from_generators(m.family.n(), m.family.members().to_vec());
            let path = dir.join(format!("mismatch-{k:04}.txt"));
            fs::write(&path, doc.to_text()).map_err(io_error)?;
        }
    }

    let clean = summary.is_clean();
    let report = EnumerationReport::new(
        args.n,
        mode,
        seed,
        args.checks.clone(),
        summary,
        elapsed_ms,
    );
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    if !clean {
        eprintln!("validation found mismatches; see the summary above");
    }
    Ok(())
}

fn homology_command(args: HomologyArgs) -> Result<(), Error> {
    let doc = read_input(&args.input)?;
    let fields = parse_fields(&args.fields)?;
    let delta = doc.complex()?;
    let mut out = serde_json::Map::new();
    out.insert("n".into(), serde_json::json!(delta.n()));
    out.insert("dim".into(), serde_json::json!(delta.dim()));
    out.insert("face_counts".into(), serde_json::json!(delta.face_counts()));
    let mut per_field = serde_json::Map::new();
    for field in fields {
        let betti = reduced_betti(&delta, field);
        per_field.insert(
            field.label(),
            serde_json::json!({
                "betti": betti.values(),
                "euler": betti.euler(),
            }),
        );
    }
    out.insert("betti_per_field".into(), per_field.into());
    println!("{}", serde_json::to_string_pretty(&out).expect("values serialize"));
    Ok(())
}

fn fixtures_command(args: FixturesArgs) -> Result<(), Error> {
    let catalog = fixtures();
    if let Some(dir) = &args.emit {
        fs::create_dir_all(dir).map_err(io_error)?;
        for f in &catalog {
            let path = dir.join(format!("{}.txt", f.name.to_ascii_lowercase()));
            fs::write(&path, f.doc.to_text()).map_err(io_error)?;
            println!("wrote {}", path.display());
        }
        return Ok(());
    }
    let listing: Vec<serde_json::Value> = catalog
        .iter()
        .map(|f| {
            serde_json::json!({
                "name": f.name,
                "description": f.description,
                "n": f.doc.n,
                "input": f.doc,
            })
        })
        .collect();
    println!("{}", serde_json::to_string_pretty(&listing).expect("values serialize"));
    Ok(())
}
