//! Command-line front end: generation, reporting, exact-length tests,
//! longest palindrome, brute-force reference, and structural metrics.
//!
//! Stdout carries data only; diagnostics go to stderr. Exit codes:
//! 0 success, 1 input parse or I/O failure, 2 size guard exceeded,
//! 64 invalid usage.

use std::fs;
use std::io::{self, BufWriter, Read as _, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use treepal::generators;
use treepal::oracle;
use treepal::pipeline;
use treepal::{LabeledTree, PalTriple};

#[derive(Parser)]
#[command(
    name = "treepal",
    version,
    about = "Distinct palindromic substrings of edge-labeled trees",
    after_help = "Tree files: line 1 holds the node count n, then one line \"u v c\" per \
                  edge with 1-based ids and a single-character label; '#' starts a comment."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a generated tree file
    Gen(GenArgs),
    /// Report all distinct palindromes, one "length u v" record per line
    Report(ReportArgs),
    /// Print the number of distinct palindromes
    Count(CountArgs),
    /// Look for a palindrome of one exact length
    Test(TestArgs),
    /// Find a longest palindrome
    Longest(InputArg),
    /// Brute-force reference report (guarded by --limit)
    Oracle(OracleArgs),
    /// Structural metrics of one full run
    Stats(InputArg),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Path,
    Comb,
    Random,
}

#[derive(Args)]
struct GenArgs {
    /// Input family
    #[arg(long, value_enum)]
    kind: GenKind,
    /// Edge count (path, random)
    #[arg(long)]
    edges: Option<u32>,
    /// Label pattern tiled along the path [default: a]
    #[arg(long)]
    pattern: Option<String>,
    /// Odd prime size parameter of the comb family
    #[arg(long)]
    p: Option<u32>,
    /// Alphabet size (random) [default: 2]
    #[arg(long)]
    sigma: Option<u32>,
    /// PRNG seed (random) [default: 1]
    #[arg(long)]
    seed: Option<u64>,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InputArg {
    /// Tree file; stdin when omitted
    input: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    input: InputArg,
    /// Append each record's palindrome word (guarded by --max-materialize)
    #[arg(long, conflicts_with = "compare")]
    strings: bool,
    /// Cap on total materialized characters
    #[arg(long, default_value_t = 1_000_000)]
    max_materialize: u64,
    /// Write records here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Append a '#'-prefixed summary block after the records
    #[arg(long, conflicts_with = "compare")]
    stats: bool,
    /// Process the decomposition family on this many worker threads
    #[arg(long)]
    threads: Option<usize>,
    /// Emit canonical "length<TAB>word" lines for set comparison
    #[arg(long)]
    compare: bool,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    input: InputArg,
    /// Process the decomposition family on this many worker threads
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct TestArgs {
    #[command(flatten)]
    input: InputArg,
    /// Exact palindrome length to look for
    #[arg(long)]
    length: u32,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArg,
    /// Append each record's palindrome word (guarded by --max-materialize)
    #[arg(long, conflicts_with = "compare")]
    strings: bool,
    /// Cap on total materialized characters
    #[arg(long, default_value_t = 1_000_000)]
    max_materialize: u64,
    /// Refuse trees with more edges than this
    #[arg(long, default_value_t = oracle::DEFAULT_ORACLE_LIMIT)]
    limit: usize,
    /// Write records here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit canonical "length<TAB>word" lines for set comparison
    #[arg(long)]
    compare: bool,
}

/// Failure carrying its process exit code.
enum Failure {
    Input(String),
    Guard(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Guard(_) => 2,
            Failure::Usage(_) => 64,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Guard(m) | Failure::Usage(m) => m,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let run = match cli.cmd {
        Cmd::Gen(a) => cmd_gen(a),
        Cmd::Report(a) => cmd_report(a),
        Cmd::Count(a) => cmd_count(a),
        Cmd::Test(a) => cmd_test(a),
        Cmd::Longest(a) => cmd_longest(a),
        Cmd::Oracle(a) => cmd_oracle(a),
        Cmd::Stats(a) => cmd_stats(a),
    };
    match run {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("treepal: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn read_tree(input: &InputArg) -> Result<LabeledTree, Failure> {
    let text = match &input.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    LabeledTree::parse(&text).map_err(|e| Failure::Input(format!("parse error: {e}")))
}

fn out_writer(out: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => {
            let f = fs::File::create(path)
                .map_err(|e| Failure::Input(format!("cannot create {}: {e}", path.display())))?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn cmd_gen(a: GenArgs) -> Result<(), Failure> {
    fn forbid(cond: bool, flag: &str, kind: &str) -> Result<(), Failure> {
        if cond {
            return Err(Failure::Usage(format!("--{flag} does not apply to --kind {kind}")));
        }
        Ok(())
    }
    let t = match a.kind {
        GenKind::Path => {
            forbid(a.p.is_some(), "p", "path")?;
            forbid(a.sigma.is_some(), "sigma", "path")?;
            forbid(a.seed.is_some(), "seed", "path")?;
            let n = a.edges.ok_or(Failure::Usage("--kind path needs --edges".into()))?;
            let pattern = a.pattern.as_deref().unwrap_or("a");
            generators::gen_path(n, pattern)
        }
        GenKind::Comb => {
            forbid(a.edges.is_some(), "edges", "comb")?;
            forbid(a.pattern.is_some(), "pattern", "comb")?;
            forbid(a.sigma.is_some(), "sigma", "comb")?;
            forbid(a.seed.is_some(), "seed", "comb")?;
            let p = a.p.ok_or(Failure::Usage("--kind comb needs --p".into()))?;
            generators::gen_comb(p)
        }
        GenKind::Random => {
            forbid(a.pattern.is_some(), "pattern", "random")?;
            forbid(a.p.is_some(), "p", "random")?;
            let n = a.edges.ok_or(Failure::Usage("--kind random needs --edges".into()))?;
            generators::gen_random(n, a.sigma.unwrap_or(2), a.seed.unwrap_or(1))
        }
    }
    .map_err(|e| Failure::Usage(format!("generator: {e}")))?;
    let mut w = out_writer(a.out.as_deref())?;
    w.write_all(t.serialize().as_bytes())?;
    w.flush()?;
    Ok(())
}

/// Materializes the word behind a reported triple.
fn word_of(t: &LabeledTree, tr: &PalTriple) -> String {
    let w = oracle::verify_triple(t, tr).expect("reported witness failed verification");
    t.decode(&w)
}

/// Refuses to materialize more than `cap` characters in total.
fn guard_materialize(total: u64, cap: u64) -> Result<(), Failure> {
    if total > cap {
        return Err(Failure::Guard(format!(
            "materializing {total} characters exceeds --max-materialize {cap}"
        )));
    }
    Ok(())
}

fn write_records(
    w: &mut dyn Write,
    t: &LabeledTree,
    triples: &[PalTriple],
    strings: bool,
    cap: u64,
) -> Result<(), Failure> {
    if strings {
        guard_materialize(triples.iter().map(|tr| tr.length as u64).sum(), cap)?;
    }
    for tr in triples {
        if strings {
            writeln!(w, "{}\t{}\t{}\t{}", tr.length, tr.u + 1, tr.v + 1, word_of(t, tr))?;
        } else {
            writeln!(w, "{}\t{}\t{}", tr.length, tr.u + 1, tr.v + 1)?;
        }
    }
    Ok(())
}

/// Canonical (length, word) lines: sorted, witness-independent, suitable
/// for diffing two reporters against each other.
fn write_compare(
    w: &mut dyn Write,
    t: &LabeledTree,
    triples: &[PalTriple],
    cap: u64,
) -> Result<(), Failure> {
    guard_materialize(triples.iter().map(|tr| tr.length as u64).sum(), cap)?;
    let mut lines: Vec<(u32, String)> =
        triples.iter().map(|tr| (tr.length, word_of(t, tr))).collect();
    lines.sort();
    for (len, word) in lines {
        writeln!(w, "{len}\t{word}")?;
    }
    Ok(())
}

fn cmd_report(a: ReportArgs) -> Result<(), Failure> {
    let t = read_tree(&a.input)?;
    let rep = pipeline::prepare(&t).report_with_threads(a.threads);
    let mut w = out_writer(a.out.as_deref())?;
    if a.compare {
        write_compare(&mut *w, &t, &rep.triples, a.max_materialize)?;
    } else {
        write_records(&mut *w, &t, &rep.triples, a.strings, a.max_materialize)?;
        if a.stats {
            let s = &rep.stats;
            writeln!(w, "# count\t{}", s.count)?;
            writeln!(w, "# nodes\t{}", s.source_nodes)?;
            writeln!(w, "# edges\t{}", s.source_edges)?;
            writeln!(w, "# density\t{:.6}", s.density())?;
            writeln!(w, "# family_edges\t{}", s.family.total_edges)?;
            writeln!(w, "# spine_nodes\t{}", s.spine_nodes)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn cmd_count(a: CountArgs) -> Result<(), Failure> {
    let t = read_tree(&a.input)?;
    let rep = pipeline::prepare(&t).report_with_threads(a.threads);
    println!("{}", rep.stats.count);
    Ok(())
}

fn cmd_test(a: TestArgs) -> Result<(), Failure> {
    let t = read_tree(&a.input)?;
    match pipeline::prepare(&t).palindrome_test(a.length) {
        Some(tr) => println!("true\t{}\t{}\t{}", tr.length, tr.u + 1, tr.v + 1),
        None => println!("false"),
    }
    Ok(())
}

fn cmd_longest(a: InputArg) -> Result<(), Failure> {
    let t = read_tree(&a)?;
    match pipeline::prepare(&t).find_longest() {
        Some(tr) => println!("{}\t{}\t{}", tr.length, tr.u + 1, tr.v + 1),
        None => eprintln!("treepal: tree has no edges, hence no palindromes"),
    }
    Ok(())
}

fn cmd_oracle(a: OracleArgs) -> Result<(), Failure> {
    let t = read_tree(&a.input)?;
    let pairs = oracle::report(&t, a.limit)
        .map_err(|e| Failure::Guard(format!("oracle: {e}")))?;
    let mut w = out_writer(a.out.as_deref())?;
    if a.compare {
        let cap = a.max_materialize;
        guard_materialize(pairs.iter().map(|(wd, _)| wd.len() as u64).sum(), cap)?;
        let mut lines: Vec<(u32, String)> = pairs
            .iter()
            .map(|(wd, _)| (wd.len() as u32, t.decode(wd)))
            .collect();
        lines.sort();
        for (len, word) in lines {
            writeln!(w, "{len}\t{word}")?;
        }
    } else {
        if a.strings {
            guard_materialize(
                pairs.iter().map(|(wd, _)| wd.len() as u64).sum(),
                a.max_materialize,
            )?;
        }
        for (wd, tr) in &pairs {
            if a.strings {
                writeln!(w, "{}\t{}\t{}\t{}", tr.length, tr.u + 1, tr.v + 1, t.decode(wd))?;
            } else {
                writeln!(w, "{}\t{}\t{}", tr.length, tr.u + 1, tr.v + 1)?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn cmd_stats(a: InputArg) -> Result<(), Failure> {
    let t = read_tree(&a)?;
    let rep = pipeline::prepare(&t).report();
    let s = &rep.stats;
    let mut w = out_writer(None)?;
    writeln!(w, "nodes\t{}", s.source_nodes)?;
    writeln!(w, "edges\t{}", s.source_edges)?;
    writeln!(w, "palindromes\t{}", s.count)?;
    writeln!(w, "density\t{:.6}", s.density())?;
    writeln!(w, "family_calls\t{}", s.family.calls)?;
    writeln!(w, "family_edges\t{}", s.family.total_edges)?;
    writeln!(w, "family_depth\t{}", s.family.max_depth)?;
    writeln!(w, "spine_nodes\t{}", s.spine_nodes)?;
    w.flush()?;
    Ok(())
}
