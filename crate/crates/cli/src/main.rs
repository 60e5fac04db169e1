//! `codewheel`: convexity-obstruction analysis for neural codes.
//!
//! Exit codes: 0 success, 1 invalid certificate in `check`, 2 fatal
//! contractibility-oracle indecision, 3 expected-value mismatch in `report`.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use codewheel_core::complex::SimplicialComplex;
use codewheel_core::error::Error as CoreError;
use codewheel_core::obstructions::{obstruction_report, pure_fast_path};
use codewheel_core::parse::{parse_code, parse_complex, set_to_string};
use codewheel_core::pipeline::{
    appendix_check, build_discrepancy_report, classify_code, classify_complexes,
    read_records_jsonl, theorem5_check, write_records_jsonl, ClassificationRecord,
    ClassifyOptions, Table1, Table2, EXPECTED_TABLE1, EXPECTED_TABLE2,
};
use codewheel_core::reduce::{find_decomposition, reduce};
use codewheel_core::set::NeuronSet;
use codewheel_core::wheels::{
    check_sprocket, check_wheel_frame, check_wire_wheel, wheel_report, PartialWheel,
    SprocketCert, WheelFrameCert, WireWheelCert,
};

#[derive(Parser)]
#[command(name = "codewheel", version, about = "Neural-code convexity obstruction engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate connected simplicial complexes up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Classify complexes from a file (one record per complex).
    Classify(ClassifyArgs),
    /// Analyze a single code: reduction, decomposition, obstructions, wheels.
    Analyze(AnalyzeArgs),
    /// Validate a wheel certificate (exit code 0 = valid, 1 = invalid).
    #[command(subcommand)]
    Check(CheckCommand),
    /// Render classification tables and cross-check published values.
    #[command(subcommand)]
    Report(ReportCommand),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Number of vertices (all must appear in some facet).
    #[arg(long, default_value_t = 6)]
    n: u8,
    /// Inclusive facet-count range, e.g. `4..7` or a single count `5`.
    #[arg(long, default_value = "4..7")]
    facets: String,
    /// Restrict to pure complexes of this dimension.
    #[arg(long)]
    pure_dim: Option<u32>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit JSON lines {id, n, facets} instead of facet tokens.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Input file of complexes: facet tokens per line, or JSON lines with a
    /// "facets" array.
    #[arg(long, name = "FILE")]
    r#in: PathBuf,
    /// Output JSONL file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Also run the unpruned brute-force finders and fail on disagreement.
    #[arg(long)]
    brute_force: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// The code, e.g. "2345 123 134 145 13 14 23 34 45 3 4".
    #[arg(long)]
    code: String,
    /// Ambient neuron count (defaults to the largest label mentioned).
    #[arg(long)]
    n: Option<u8>,
    /// Print the trunk of this set (repeatable).
    #[arg(long = "trunk")]
    trunks: Vec<String>,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Sprocket certificate: three spokes, a rim, and two witnesses.
    Sprocket(CheckArgs),
    /// Wire-wheel certificate: three spokes and a rim.
    Wirewheel(CheckArgs),
    /// Wheel-frame certificate: two spokes and a rim.
    Wheelframe(CheckArgs),
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    code: String,
    #[arg(long)]
    n: Option<u8>,
    /// Spoke sets (three for sprocket/wirewheel, two for wheelframe).
    #[arg(long, num_args = 2..=3, required = true)]
    spokes: Vec<String>,
    #[arg(long)]
    rim: String,
    /// Witness sets ρ1 ρ3 (sprocket only).
    #[arg(long, num_args = 2)]
    witnesses: Vec<String>,
}

#[derive(Subcommand)]
enum ReportCommand {
    /// Tally records against the published 4-to-7-facet table.
    Table1(ReportArgs),
    /// Tally records against the published pure-dimension table.
    Table2(ReportArgs),
    /// Sweep minimal codes on up to 5 vertices and check the detector-side
    /// statement: only the known 5-neuron class carries a wheel frame.
    Theorem5,
    /// Check the published sample "unknown" codes against classification
    /// records (pass --in twice: the 4-7 facet run, then the pure run).
    Appendix(AppendixArgs),
}

#[derive(Args)]
struct ReportArgs {
    /// Classification records (JSONL).
    #[arg(long, name = "FILE")]
    r#in: PathBuf,
    /// Where to write the JSON discrepancy report on mismatch
    /// (stdout when omitted).
    #[arg(long)]
    discrepancy_out: Option<PathBuf>,
}

#[derive(Args)]
struct AppendixArgs {
    /// Record files: first the 4-7 facet run, then the pure run.
    #[arg(long = "in", name = "FILE", action = clap::ArgAction::Append, required = true)]
    inputs: Vec<PathBuf>,
}

fn parse_facet_range(s: &str) -> Result<std::ops::RangeInclusive<usize>> {
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().context("bad facet range start")?;
        let b: usize = b.trim_start_matches('=').trim().parse().context("bad facet range end")?;
        Ok(a..=b)
    } else {
        let k: usize = s.trim().parse().context("bad facet count")?;
        Ok(k..=k)
    }
}

fn out_writer(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn read_complexes(path: &Path) -> Result<Vec<SimplicialComplex>> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let mut out = Vec::new();
    for (k, line) in BufReader::new(f).lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let cx = if t.starts_with('{') {
            let v: serde_json::Value = serde_json::from_str(t)
                .with_context(|| format!("line {}: bad JSON", k + 1))?;
            let n = v["n"].as_u64().context("missing n")? as u8;
            let facets = v["facets"].as_array().context("missing facets")?;
            let sets = facets
                .iter()
                .map(|f| {
                    let neurons: Vec<u8> = f
                        .as_array()
                        .context("facet must be an array")?
                        .iter()
                        .map(|x| x.as_u64().map(|u| u as u8).context("bad vertex"))
                        .collect::<Result<_>>()?;
                    Ok(NeuronSet::from_neurons(neurons))
                })
                .collect::<Result<Vec<_>>>()?;
            SimplicialComplex::from_faces(n, sets)?
        } else {
            parse_complex(t, None)?
        };
        out.push(cx);
    }
    Ok(out)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<()> {
    let range = parse_facet_range(&args.facets)?;
    let complexes =
        codewheel_core::enumerate::enumerate_connected(args.n, range, args.pure_dim)?;
    let mut w = out_writer(&args.out)?;
    for (id, cx) in complexes.iter().enumerate() {
        if args.json {
            let facets: Vec<Vec<u8>> =
                cx.facets().iter().map(|f| f.iter().collect()).collect();
            serde_json::to_writer(
                &mut w,
                &serde_json::json!({ "id": id, "n": cx.n(), "facets": facets }),
            )?;
            writeln!(w)?;
        } else {
            writeln!(w, "{cx}")?;
        }
    }
    w.flush()?;
    eprintln!("{} complexes", complexes.len());
    Ok(())
}

fn cmd_classify(args: ClassifyArgs) -> Result<()> {
    let complexes = read_complexes(&args.r#in)?;
    let opts = ClassifyOptions {
        brute_force_check: args.brute_force,
        ..ClassifyOptions::default()
    };
    let records = match args.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()?
            .install(|| classify_complexes(&complexes, &opts)),
        None => classify_complexes(&complexes, &opts),
    }?;
    let mut w = out_writer(&args.out)?;
    write_records_jsonl(&mut w, &records)?;
    w.flush()?;
    eprintln!("{} records", records.len());
    Ok(())
}

fn print_set_list(n: u8, sets: impl IntoIterator<Item = NeuronSet>) -> String {
    let mut parts: Vec<String> = sets.into_iter().map(|s| set_to_string(n, s)).collect();
    if parts.is_empty() {
        parts.push("(none)".to_string());
    }
    parts.join(" ")
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<()> {
    let code = parse_code(&args.code, args.n)?;
    let n = code.n();
    println!("code on {n} neurons: {code}");
    let cx = code.neural_complex();
    println!("neural complex:    {cx}");
    println!(
        "dimension {} / {} facets / pure: {}",
        cx.dim().map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
        cx.facet_count(),
        cx.is_pure()
    );

    for t in &args.trunks {
        let sigma = parse_code(t, Some(n))?
            .words()
            .iter()
            .copied()
            .fold(NeuronSet::EMPTY, |a, b| a | b);
        println!(
            "trunk({}) = {}",
            set_to_string(n, sigma),
            print_set_list(n, code.trunk(sigma))
        );
    }

    let (reduced, steps) = reduce(&code);
    if steps.is_empty() {
        println!("reduced: yes");
    } else {
        println!("reduced: no ({} removals -> {})", steps.len(), reduced);
        for s in &steps {
            println!(
                "  remove neuron {} ({:?}{})",
                s.neuron,
                s.kind,
                s.witness_sigma
                    .map(|w| format!(", trunk shared with {}", set_to_string(n, w)))
                    .unwrap_or_default()
            );
        }
    }
    match find_decomposition(&code) {
        Some(d) => println!(
            "decomposable: yes (embedded on {}, ambient codeword {})",
            set_to_string(n, d.phi),
            set_to_string(n, d.psi)
        ),
        None => println!("decomposable: no"),
    }

    let rep = obstruction_report(&code)?;
    println!(
        "max-intersection faces: {}",
        print_set_list(n, rep.max_intersection_faces.iter().copied())
    );
    println!(
        "mandatory faces:        {}",
        print_set_list(n, rep.mandatory_faces.iter().copied())
    );
    if rep.missing_mandatory.is_empty() {
        println!("local obstruction: none");
    } else {
        println!(
            "local obstruction: YES at {}",
            print_set_list(n, rep.missing_mandatory.iter().copied())
        );
    }
    println!("max-intersection-complete: {}", rep.is_max_int_complete);
    if let Some(v) = pure_fast_path(&code) {
        println!("pure-dimension shortcut: {v:?}");
    }

    let wheels = wheel_report(&code);
    match &wheels.sprocket {
        Some(c) => println!(
            "sprocket: YES spokes {} rim {} witnesses {}",
            print_set_list(n, c.wheel.spokes),
            set_to_string(n, c.wheel.rim),
            print_set_list(n, c.witnesses)
        ),
        None => println!("sprocket: none"),
    }
    match &wheels.wire_wheel {
        Some(c) => println!(
            "wire wheel: YES spokes {} rim {}",
            print_set_list(n, c.spokes),
            set_to_string(n, c.rim)
        ),
        None => println!("wire wheel: none"),
    }
    match &wheels.wheel_frame {
        Some(c) => println!(
            "wheel frame: YES spokes {} rim {}",
            print_set_list(n, c.spokes),
            set_to_string(n, c.rim)
        ),
        None => println!("wheel frame: none"),
    }

    let outcome = classify_code(
        &code,
        &ClassifyOptions { check_trivial_neurons: true, ..ClassifyOptions::default() },
    )?;
    println!("classification: {:?}", outcome.status);
    Ok(())
}

fn parse_one_set(text: &str, n: Option<u8>) -> Result<NeuronSet> {
    let sets = parse_code(text, n)?;
    // parse_code always includes ∅; the token itself is the other word
    let mut nonempty: Vec<NeuronSet> = sets
        .words()
        .iter()
        .copied()
        .filter(|s| !s.is_empty())
        .collect();
    if text.trim() == "-" {
        return Ok(NeuronSet::EMPTY);
    }
    if nonempty.len() != 1 {
        bail!("expected a single set token, got `{text}`");
    }
    Ok(nonempty.remove(0))
}

fn cmd_check(cmd: CheckCommand) -> Result<bool> {
    let (args, kind) = match &cmd {
        CheckCommand::Sprocket(a) => (a, "sprocket"),
        CheckCommand::Wirewheel(a) => (a, "wirewheel"),
        CheckCommand::Wheelframe(a) => (a, "wheelframe"),
    };
    let code = parse_code(&args.code, args.n)?;
    let n = Some(code.n());
    let spokes: Vec<NeuronSet> = args
        .spokes
        .iter()
        .map(|s| parse_one_set(s, n))
        .collect::<Result<_>>()?;
    let rim = parse_one_set(&args.rim, n)?;
    let ok = match kind {
        "sprocket" => {
            if spokes.len() != 3 {
                bail!("sprockets take three spokes");
            }
            if args.witnesses.len() != 2 {
                bail!("sprockets need --witnesses R1 R3");
            }
            let w1 = parse_one_set(&args.witnesses[0], n)?;
            let w3 = parse_one_set(&args.witnesses[1], n)?;
            let cert = SprocketCert {
                wheel: PartialWheel { spokes: [spokes[0], spokes[1], spokes[2]], rim },
                witnesses: [w1, w3],
            };
            check_sprocket(&code, &cert)
        }
        "wirewheel" => {
            if spokes.len() != 3 {
                bail!("wire wheels take three spokes");
            }
            let cert = WireWheelCert { spokes: [spokes[0], spokes[1], spokes[2]], rim };
            check_wire_wheel(&code, &cert)
        }
        _ => {
            if spokes.len() != 2 {
                bail!("wheel frames take two spokes");
            }
            let cert = WheelFrameCert { spokes: [spokes[0], spokes[1]], rim };
            check_wheel_frame(&code, &cert)
        }
    };
    println!("{}", if ok { "valid" } else { "invalid" });
    Ok(ok)
}

fn render_table<const W: usize>(
    title: &str,
    columns: &[String],
    rows: &[(&'static str, [u64; W])],
    expected: &[(&'static str, [u64; W])],
) {
    println!("{title}");
    let name_w = rows.iter().map(|(n, _)| n.len()).max().unwrap_or(0).max(8);
    print!("{:<name_w$}", "");
    for c in columns {
        print!("  {c:>16}");
    }
    println!();
    for ((name, actual), (_, exp)) in rows.iter().zip(expected) {
        print!("{name:<name_w$}");
        for k in 0..W {
            let cell = if actual[k] == exp[k] {
                format!("{}", actual[k])
            } else {
                format!("{} (exp {})", actual[k], exp[k])
            };
            print!("  {cell:>16}");
        }
        println!();
    }
}

fn emit_discrepancies(
    records: &[ClassificationRecord],
    mismatches: Vec<codewheel_core::pipeline::CellMismatch>,
    table1: bool,
    out: &Option<PathBuf>,
) -> Result<()> {
    let report = build_discrepancy_report(records, mismatches, table1)?;
    let json = serde_json::to_string_pretty(&report)?;
    match out {
        Some(p) => {
            std::fs::write(p, json)?;
            eprintln!(
                "{} mismatched cells; discrepancy report with {} code entries written to {}",
                report.mismatched_cells.len(),
                report.entries.len(),
                p.display()
            );
        }
        None => println!("{json}"),
    }
    Ok(())
}

fn cmd_report(cmd: ReportCommand) -> Result<i32> {
    match cmd {
        ReportCommand::Table1(args) => {
            let records = read_records(&args.r#in)?;
            let table = Table1::tally(&records);
            render_table(
                "6-neuron minimal codes by number of maximal codewords",
                &["4", "5", "6", "7"].map(String::from),
                &table.rows(),
                &EXPECTED_TABLE1.rows(),
            );
            let mismatches = table.mismatches();
            if mismatches.is_empty() {
                Ok(0)
            } else {
                emit_discrepancies(&records, mismatches, true, &args.discrepancy_out)?;
                Ok(3)
            }
        }
        ReportCommand::Table2(args) => {
            let records = read_records(&args.r#in)?;
            let table = Table2::tally(&records);
            render_table(
                "pure 6-neuron minimal codes by dimension",
                &["dim 2", "dim 3"].map(String::from),
                &table.rows(),
                &EXPECTED_TABLE2.rows(),
            );
            let mismatches = table.mismatches();
            if mismatches.is_empty() {
                Ok(0)
            } else {
                emit_discrepancies(&records, mismatches, false, &args.discrepancy_out)?;
                Ok(3)
            }
        }
        ReportCommand::Theorem5 => {
            let report = theorem5_check()?;
            println!(
                "classes swept (1-5 vertices): {}",
                report.entries.len()
            );
            println!(
                "minimal codes without local obstructions: {}",
                report.no_local_obstructions
            );
            println!(
                "no wheel detector fires on <=4 neurons: {}",
                report.no_wheels_up_to_four
            );
            println!(
                "unique frame-flagged 5-vertex class is the known counterexample: {}",
                report.frame_class_is_c_star
            );
            let ok = report.no_local_obstructions
                && report.no_wheels_up_to_four
                && report.frame_class_is_c_star;
            Ok(if ok { 0 } else { 3 })
        }
        ReportCommand::Appendix(args) => {
            if args.inputs.len() != 2 {
                bail!("pass --in twice: the 4-7 facet records, then the pure records");
            }
            let t1 = read_records(&args.inputs[0])?;
            let t2 = read_records(&args.inputs[1])?;
            let report = appendix_check(&t1, &t2)?;
            let mut missing = 0;
            for e in &report.entries {
                if e.found_unknown {
                    println!("found   {}: {}", e.bucket, e.code);
                } else {
                    missing += 1;
                    println!(
                        "MISSING {}: {} ({})",
                        e.bucket,
                        e.code,
                        e.diagnosis.as_deref().unwrap_or("not found")
                    );
                }
            }
            println!(
                "{} of {} sample codes found in their Unknown buckets",
                report.entries.len() - missing,
                report.entries.len()
            );
            Ok(if report.all_found { 0 } else { 3 })
        }
    }
}

fn read_records(path: &Path) -> Result<Vec<ClassificationRecord>> {
    let mut text = String::new();
    File::open(path)
        .with_context(|| format!("opening {}", path.display()))?
        .read_to_string(&mut text)?;
    Ok(read_records_jsonl(text.as_bytes())?)
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::Enumerate(args) => {
            cmd_enumerate(args)?;
            Ok(0)
        }
        Command::Classify(args) => {
            cmd_classify(args)?;
            Ok(0)
        }
        Command::Analyze(args) => {
            cmd_analyze(args)?;
            Ok(0)
        }
        Command::Check(cmd) => Ok(if cmd_check(cmd)? { 0 } else { 1 }),
        Command::Report(cmd) => cmd_report(cmd),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            // fatal oracle indecision has its own exit code
            if e.downcast_ref::<CoreError>()
                .map(|c| matches!(c, CoreError::OracleUndetermined { .. }))
                .unwrap_or(false)
            {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
