//! Batch command-line interface over the bdparse library: parse files,
//! decode and verify parse files, collect phrase-count and timing reports,
//! and generate benchmark strings.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or unreadable data,
//! 3 verification failure.

use bdparse::batch::{self, BatchInput};
use bdparse::{best_of_reverse, decode, format, validate, Algorithm, Parse, Text};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bdparse",
    version,
    about = "Bidirectional macro-scheme parsing toolkit",
    after_help = "Exit codes: 0 success, 1 usage, 2 I/O, 3 verification failure."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a file with one algorithm and write the parse file
    Parse(ParseArgs),
    /// Recover the original file from a parse file
    Decode(DecodeArgs),
    /// Check that a parse file is valid and reproduces a text file
    Verify(VerifyArgs),
    /// Run algorithms over files and write a phrase-count/timing report
    Stats(StatsArgs),
    /// Generate a benchmark string
    Gen(GenArgs),
}

#[derive(Args)]
struct ParseArgs {
    /// Input file to parse
    input: PathBuf,
    /// Algorithm: lz77, lzp, lzor, lex or lzrr
    #[arg(long)]
    algo: Algorithm,
    /// Where to write the parse
    #[arg(long, short)]
    output: PathBuf,
    /// Parse both the text and its reversal, keep the direction with fewer
    /// phrases
    #[arg(long)]
    best_of_reverse: bool,
    /// Parse file format
    #[arg(long, value_enum, default_value_t = FileFormat::Bin)]
    format: FileFormat,
}

#[derive(Args)]
struct DecodeArgs {
    /// Parse file (binary or json)
    parse_file: PathBuf,
    /// Where to write the recovered text
    #[arg(long, short)]
    output: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Parse file (binary or json)
    parse_file: PathBuf,
    /// The text the parse is supposed to describe
    text_file: PathBuf,
}

#[derive(Args)]
struct StatsArgs {
    /// Input files
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Comma-separated algorithms to run (default: all)
    #[arg(long, value_delimiter = ',')]
    algos: Vec<Algorithm>,
    /// Where to write the report
    #[arg(long, short)]
    output: PathBuf,
    /// Report format
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    format: ReportFormat,
}

#[derive(Args)]
struct GenArgs {
    /// Kind of string to generate
    #[arg(long, value_enum)]
    kind: GenKind,
    /// Where to write the string
    #[arg(long, short)]
    output: PathBuf,
    /// Order for fibonacci and thue-morse words
    #[arg(long)]
    order: Option<u32>,
    /// Length for run and random strings
    #[arg(long)]
    size: Option<usize>,
    /// Seed for random strings
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Alphabet size for random strings
    #[arg(long, default_value_t = 26)]
    sigma: u16,
    /// Byte repeated by run strings
    #[arg(long, default_value_t = 'a')]
    fill: char,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    Bin,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Fibonacci,
    ThueMorse,
    Run,
    Random,
}

/// An error that already knows its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let result = match cli.cmd {
        Cmd::Parse(args) => cmd_parse(args),
        Cmd::Decode(args) => cmd_decode(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Stats(args) => cmd_stats(args),
        Cmd::Gen(args) => cmd_gen(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::io(format!("reading {}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure::io(format!("writing {}: {e}", path.display())))
}

fn read_parse_file(path: &Path) -> Result<(Parse, bool), Failure> {
    let bytes = read_file(path)?;
    format::from_bytes(&bytes)
        .map_err(|e| Failure::io(format!("format error in {}: {e}", path.display())))
}

fn cmd_parse(args: ParseArgs) -> Result<(), Failure> {
    let bytes = read_file(&args.input)?;
    let text = Text::new(bytes);
    let (parse, reversed) = if args.best_of_reverse {
        let best = best_of_reverse(args.algo, &text);
        (best.parse, best.reversed)
    } else {
        (args.algo.run(&text), false)
    };
    let out = match args.format {
        FileFormat::Bin => format::to_binary(&parse, reversed),
        FileFormat::Json => format::to_json(&parse, reversed).into_bytes(),
    };
    write_file(&args.output, &out)?;
    println!(
        "file={} algo={} n={} phrases={} direction={}",
        args.input.display(),
        args.algo,
        text.len(),
        parse.phrase_count(),
        if reversed { "reverse" } else { "forward" }
    );
    Ok(())
}

fn cmd_decode(args: DecodeArgs) -> Result<(), Failure> {
    let (parse, reversed) = read_parse_file(&args.parse_file)?;
    let text = decode(&parse)
        .map_err(|e| Failure::verification(format!("{}: {e}", args.parse_file.display())))?;
    let text = if reversed { text.reversed() } else { text };
    write_file(&args.output, text.bytes())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let (parse, reversed) = read_parse_file(&args.parse_file)?;
    let original = read_file(&args.text_file)?;
    let expected = {
        let t = Text::new(original);
        if reversed {
            t.reversed()
        } else {
            t
        }
    };
    validate(&parse, &expected).map_err(|e| Failure::verification(e.to_string()))?;
    let decoded = decode(&parse).map_err(|e| Failure::verification(e.to_string()))?;
    if decoded != expected {
        return Err(Failure::verification(
            "decoded text differs from the given file",
        ));
    }
    println!(
        "ok file={} n={} phrases={}",
        args.text_file.display(),
        expected.len(),
        parse.phrase_count()
    );
    Ok(())
}

#[derive(Serialize)]
struct JsonReport<'a> {
    rows: &'a [batch::ReportRow],
    ratios: Vec<batch::RatioRow>,
}

fn cmd_stats(args: StatsArgs) -> Result<(), Failure> {
    let algos = if args.algos.is_empty() {
        Algorithm::ALL.to_vec()
    } else {
        args.algos.clone()
    };
    let inputs = args
        .inputs
        .iter()
        .map(|path| {
            Ok(BatchInput::new(
                path.display().to_string(),
                read_file(path)?,
            ))
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let rows = batch::run(&inputs, &algos);
    let ratios = batch::ratios(&rows);
    let report = match args.format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["file", "n", "algo", "direction", "phrases", "seconds"])
                .and_then(|()| {
                    rows.iter().try_for_each(|r| {
                        w.write_record([
                            r.file.as_str(),
                            &r.n.to_string(),
                            r.algo.name(),
                            r.direction.name(),
                            &r.phrases.to_string(),
                            &format!("{:.6}", r.seconds),
                        ])
                    })
                })
                .map_err(|e| Failure::io(format!("building csv: {e}")))?;
            w.into_inner()
                .map_err(|e| Failure::io(format!("building csv: {e}")))?
        }
        ReportFormat::Json => {
            let doc = JsonReport {
                rows: &rows,
                ratios: ratios.clone(),
            };
            let mut out = serde_json::to_vec_pretty(&doc)
                .map_err(|e| Failure::io(format!("building json: {e}")))?;
            out.push(b'\n');
            out
        }
    };
    write_file(&args.output, &report)?;
    for row in &rows {
        println!(
            "file={} algo={} n={} phrases={} direction={} seconds={:.6}",
            row.file,
            row.algo,
            row.n,
            row.phrases,
            row.direction.name(),
            row.seconds
        );
    }
    for ratio in &ratios {
        println!(
            "ratio file={} lzrr_over_lz77={:.6}",
            ratio.file, ratio.lzrr_over_lz77
        );
    }
    Ok(())
}

fn cmd_gen(args: GenArgs) -> Result<(), Failure> {
    let need_order = || {
        args.order
            .ok_or_else(|| Failure::usage("--order is required for this kind"))
    };
    let need_size = || {
        args.size
            .ok_or_else(|| Failure::usage("--size is required for this kind"))
    };
    let bytes = match args.kind {
        GenKind::Fibonacci => {
            let order = need_order()?;
            if !(1..=42).contains(&order) {
                return Err(Failure::usage("fibonacci order must be in 1..=42"));
            }
            bdparse::words::fibonacci(order)
        }
        GenKind::ThueMorse => {
            let order = need_order()?;
            if order > 28 {
                return Err(Failure::usage("thue-morse order must be at most 28"));
            }
            bdparse::words::thue_morse(order)
        }
        GenKind::Run => {
            if !args.fill.is_ascii() {
                return Err(Failure::usage("--fill must be an ascii character"));
            }
            bdparse::words::run(need_size()?, args.fill as u8)
        }
        GenKind::Random => {
            if !(1..=256).contains(&args.sigma) {
                return Err(Failure::usage("--sigma must be in 1..=256"));
            }
            bdparse::words::random(need_size()?, args.sigma, args.seed)
        }
    };
    write_file(&args.output, &bytes)?;
    println!("file={} n={}", args.output.display(), bytes.len());
    Ok(())
}
