//! Command-line front end.

use std::fs;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::adjacency::{best_count, log2_big, AdjacencyGraph};
use crate::construction::{Construction, DEFAULT_MAX_DEGREE};
use crate::error::{Error, Result};
use crate::gf2::BinaryPolynomial;
use crate::joiner::{
    greedy_connected_subgraph, pair_trees, random_spanning_tree, sequence_from_tree,
    verify_de_bruijn, DeBruijnSequence, PairTree,
};
use crate::lfsr::{bits_to_string, StateVector};

#[derive(Parser, Debug)]
#[command(
    name = "debruijn",
    version,
    about = "De Bruijn sequences by joining the cycles of an LFSR"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cycle table and conjugate-pair counts.
    Analyze(FactorArgs),
    /// Number of cycles and of constructible sequences.
    Count(FactorArgs),
    /// Sequences from the spanning trees in enumeration order.
    Generate(GenerateArgs),
    /// Sequences from uniformly random spanning trees.
    Sample(SampleArgs),
    /// Check sequences for the de Bruijn property.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct FactorArgs {
    /// Comma-separated factors as coefficient strings, highest degree first.
    #[arg(long, value_delimiter = ',', required = true)]
    pub factors: Vec<String>,

    /// Refuse total degrees above this.
    #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
    pub max_degree: usize,

    /// Use a greedily found spanning tree instead of the full graph; lifts
    /// the degree cap.
    #[arg(long)]
    pub partial: bool,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Number of sequences.
    #[arg(long, default_value_t = 100)]
    pub limit: usize,

    /// Initial state `s_0 ... s_{n-1}`; all zeros by default.
    #[arg(long)]
    pub initial_state: Option<String>,

    /// Print sequences as hex, `s_0` most significant.
    #[arg(long)]
    pub hex: bool,

    /// Also print the conjugate pairs of each tree.
    #[arg(long)]
    pub provenance: bool,
}

#[derive(Args, Debug, Clone)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub factors: FactorArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Skip this many trees first.
    #[arg(long, default_value_t = 0)]
    pub tree_index: usize,
}

#[derive(Args, Debug, Clone)]
pub struct SampleArgs {
    #[command(flatten)]
    pub factors: FactorArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Seed for the sampler; drawn from the OS when absent and reported.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// File with one sequence per line, `-` for standard input.
    #[arg(long, default_value = "-")]
    pub input: String,

    /// Lines are hex rather than bits.
    #[arg(long)]
    pub hex: bool,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Serialize, Debug, Default, PartialEq)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<usize>,
    #[serde(rename = "zeta_G", skip_serializing_if = "Option::is_none")]
    pub zeta_g: Option<String>,
    #[serde(rename = "zeta_Ghat", skip_serializing_if = "Option::is_none")]
    pub zeta_ghat: Option<String>,
    #[serde(rename = "log2_zeta_G", skip_serializing_if = "Option::is_none")]
    pub log2_zeta_g: Option<f64>,
    #[serde(rename = "log2_zeta_Ghat", skip_serializing_if = "Option::is_none")]
    pub log2_zeta_ghat: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<FactorRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub special_cycle: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cycles: Vec<CycleRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair_counts: Option<Vec<[usize; 3]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequences: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Vec<Vec<[String; 2]>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub results: Option<Vec<VerifyRow>>,
}

#[derive(Serialize, Debug, PartialEq)]
pub struct FactorRow {
    pub poly: String,
    pub degree: usize,
    pub order: u64,
    pub cycles: usize,
    pub associate: String,
}

#[derive(Serialize, Debug, PartialEq)]
pub struct CycleRow {
    pub index: usize,
    pub components: String,
    pub state: String,
    pub cycle: String,
    pub period: u64,
}

#[derive(Serialize, Debug, PartialEq)]
pub struct VerifyRow {
    pub n: usize,
    pub length: usize,
    pub valid: bool,
}

/// Parse arguments, run, and write the report. Returns the process exit
/// status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn run(command: &Command, out: &mut dyn Write) -> Result<()> {
    let (report, format) = match command {
        Command::Analyze(a) => (analyze(a)?, a.format),
        Command::Count(a) => (count(a)?, a.format),
        Command::Generate(a) => (generate(a)?, a.factors.format),
        Command::Sample(a) => (sample(a)?, a.factors.format),
        Command::Verify(a) => (verify(a)?, a.format),
    };
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &report)
                .map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Text => write_text(&report, out)?,
    }
    Ok(())
}

fn parse_factors(list: &[String]) -> Result<Vec<BinaryPolynomial>> {
    list.iter().map(|s| s.parse()).collect()
}

fn build(args: &FactorArgs) -> Result<Construction> {
    let polys = parse_factors(&args.factors)?;
    let cap = (!args.partial).then_some(args.max_degree);
    Construction::with_cap(&polys, cap)
}

/// The full graph, or the greedy tree with `--partial`.
fn graph_for(cons: &Construction, args: &FactorArgs) -> Result<AdjacencyGraph> {
    if args.partial {
        greedy_connected_subgraph(cons)
    } else {
        Ok(cons.build_graph())
    }
}

fn header(cons: &Construction) -> Report {
    Report {
        n: Some(cons.stages()),
        psi: Some(cons.psi()),
        ..Report::default()
    }
}

fn analyze(args: &FactorArgs) -> Result<Report> {
    let cons = build(args)?;
    let graph = graph_for(&cons, args)?;
    let n = cons.stages();
    let mut report = header(&cons);
    report.factors = cons
        .factors()
        .iter()
        .map(|f| FactorRow {
            poly: f.poly().to_string(),
            degree: f.degree(),
            order: f.order(),
            cycles: f.cycle_count(),
            associate: f.associate().to_string(),
        })
        .collect();
    report.special_cycle = Some(cons.cycles().special_index() + 1);
    report.cycles = cons
        .cycles()
        .cycles()
        .iter()
        .enumerate()
        .map(|(i, c)| CycleRow {
            index: i + 1,
            components: c.components(),
            state: bits_to_string(cons.representative(i), n),
            cycle: c.describe(),
            period: c.period,
        })
        .collect();
    report.pair_counts = Some(
        graph
            .pair_counts()
            .into_iter()
            .map(|(a, b, m)| [a + 1, b + 1, m])
            .collect(),
    );
    Ok(report)
}

fn count(args: &FactorArgs) -> Result<Report> {
    let cons = build(args)?;
    let mut report = header(&cons);
    if args.partial {
        // Only the cycle count is known without the full graph.
        return Ok(report);
    }
    let graph = cons.build_graph();
    let zg = best_count(&graph, false);
    let zh = best_count(&graph, true);
    report.log2_zeta_g = Some(round1(log2_big(&zg)));
    report.log2_zeta_ghat = Some(round1(log2_big(&zh)));
    report.zeta_g = Some(zg.to_string());
    report.zeta_ghat = Some(zh.to_string());
    Ok(report)
}

fn round1(x: f64) -> f64 {
    (x * 10.0).round() / 10.0
}

fn initial_state(out: &OutputArgs, n: usize) -> Result<StateVector> {
    match &out.initial_state {
        None => Ok(StateVector::zero(n)),
        Some(s) => {
            let v: StateVector = s.parse()?;
            if v.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
            Ok(v)
        }
    }
}

fn emit(
    report: &mut Report,
    cons: &Construction,
    trees: impl Iterator<Item = PairTree>,
    out: &OutputArgs,
) -> Result<()> {
    let init = initial_state(out, cons.stages())?;
    let n = cons.stages();
    let mut sequences = Vec::new();
    let mut provenance = Vec::new();
    for tree in trees.take(out.limit) {
        let seq: DeBruijnSequence = sequence_from_tree(cons.spec(), &tree, init)?;
        sequences.push(if out.hex {
            seq.to_hex()
        } else {
            seq.to_bit_string()
        });
        if out.provenance {
            provenance.push(
                tree.pairs()
                    .map(|p| [bits_to_string(p.v, n), bits_to_string(p.conjugate(), n)])
                    .collect(),
            );
        }
    }
    report.sequences = Some(sequences);
    if out.provenance {
        report.provenance = Some(provenance);
    }
    Ok(())
}

fn generate(args: &GenerateArgs) -> Result<Report> {
    let cons = build(&args.factors)?;
    let graph = graph_for(&cons, &args.factors)?;
    let mut report = header(&cons);
    let trees = pair_trees(&graph)?.skip(args.tree_index);
    emit(&mut report, &cons, trees, &args.output)?;
    Ok(report)
}

fn sample(args: &SampleArgs) -> Result<Report> {
    if args.factors.partial {
        return Err(Error::Usage(
            "sample draws from the full adjacency graph and cannot be combined with --partial"
                .into(),
        ));
    }
    let cons = build(&args.factors)?;
    let graph = cons.build_graph();
    let seed = args.seed.unwrap_or_else(rand::random);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = header(&cons);
    report.seed = Some(seed);
    let mut failure = None;
    let trees = std::iter::from_fn(|| match random_spanning_tree(&graph, &mut rng) {
        Ok(t) => Some(t),
        Err(e) => {
            failure = Some(e);
            None
        }
    });
    emit(&mut report, &cons, trees, &args.output)?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(report)
}

fn parse_sequence(line: &str, hex: bool) -> Result<Vec<u8>> {
    let mut bits = Vec::new();
    for c in line.chars().filter(|c| !c.is_whitespace()) {
        if hex {
            let d = c
                .to_digit(16)
                .ok_or_else(|| Error::InvalidBits(line.to_string()))?;
            bits.extend((0..4).rev().map(|i| ((d >> i) & 1) as u8));
        } else {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::InvalidBits(line.to_string())),
            }
        }
    }
    Ok(bits)
}

fn verify(args: &VerifyArgs) -> Result<Report> {
    let text = if args.input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&args.input)?
    };
    let mut results = Vec::new();
    for line in text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
    {
        let bits = parse_sequence(line, args.hex)?;
        let len = bits.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::LengthMismatch {
                expected: len.next_power_of_two().max(2),
                got: len,
            });
        }
        let n = len.trailing_zeros() as usize;
        results.push(VerifyRow {
            n,
            length: len,
            valid: verify_de_bruijn(&bits, n)?,
        });
    }
    Ok(Report {
        results: Some(results),
        ..Report::default()
    })
}

fn write_text(r: &Report, out: &mut dyn Write) -> io::Result<()> {
    if let Some(n) = r.n {
        writeln!(out, "n = {n}")?;
    }
    if let Some(psi) = r.psi {
        writeln!(out, "psi = {psi}")?;
    }
    if let (Some(z), Some(l)) = (&r.zeta_g, r.log2_zeta_g) {
        writeln!(out, "zeta_G = {z} (~2^{l:.1})")?;
    }
    if let (Some(z), Some(l)) = (&r.zeta_ghat, r.log2_zeta_ghat) {
        writeln!(out, "zeta_Ghat = {z} (~2^{l:.1})")?;
    }
    if let Some(seed) = r.seed {
        writeln!(out, "seed = {seed}")?;
    }
    if !r.factors.is_empty() {
        writeln!(out, "factors:")?;
        for f in &r.factors {
            writeln!(
                out,
                "  {}  degree {}  order {}  cycles {}  associate {}",
                f.poly, f.degree, f.order, f.cycles, f.associate
            )?;
        }
    }
    if let Some(v) = r.special_cycle {
        writeln!(out, "S = 10...0 lies on V{v}")?;
    }
    if !r.cycles.is_empty() {
        let w = r
            .cycles
            .iter()
            .map(|c| c.components.len())
            .max()
            .unwrap_or(0);
        let ws = r.cycles.iter().map(|c| c.state.len()).max().unwrap_or(0);
        let wc = r.cycles.iter().map(|c| c.cycle.len()).max().unwrap_or(0);
        writeln!(out, "cycles:")?;
        for c in &r.cycles {
            writeln!(
                out,
                "  V{:<4} {:<w$}  {:<ws$}  {:<wc$}  {}",
                c.index, c.components, c.state, c.cycle, c.period
            )?;
        }
    }
    if let Some(counts) = &r.pair_counts {
        writeln!(out, "pair counts:")?;
        for [a, b, m] in counts {
            writeln!(out, "  {{V{a},V{b}}} {m}")?;
        }
    }
    if let Some(seqs) = &r.sequences {
        for (i, s) in seqs.iter().enumerate() {
            if let Some(tree) = r.provenance.as_ref().and_then(|p| p.get(i)) {
                let pairs: Vec<String> = tree.iter().map(|[v, w]| format!("{v}/{w}")).collect();
                writeln!(out, "# tree {}: {}", i + 1, pairs.join(" "))?;
            }
            writeln!(out, "{s}")?;
        }
    }
    if let Some(results) = &r.results {
        for row in results {
            let verdict = if row.valid { "valid" } else { "invalid" };
            writeln!(out, "{verdict} n={} length={}", row.n, row.length)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(
            std::iter::once("debruijn").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_text() {
        let (code, out, _) = run_args(&["count", "--factors", "11,111,11111"]);
        assert_eq!(code, 0);
        assert!(out.contains("psi = 16"));
        assert!(out.contains("zeta_G = 12485394432 (~2^33.5)"));
        assert!(out.contains("zeta_Ghat = 1451520 (~2^20.5)"));
    }

    #[test]
    fn error_cases_exit_nonzero() {
        for factors in ["1x1", "1001", "111,111", "10", "1", "11", "10011,11111"] {
            let (code, _, err) = run_args(&["count", "--factors", factors, "--max-degree", "6"]);
            assert_eq!(code, 1, "{factors}: {err}");
            assert!(err.starts_with("error:"));
        }
    }

    #[test]
    fn partial_lifts_cap() {
        let (code, out, _) = run_args(&[
            "generate",
            "--factors",
            "10011,11111",
            "--max-degree",
            "6",
            "--partial",
        ]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().filter(|l| l.len() == 256).collect();
        assert_eq!(lines.len(), 1);
    }

    #[test]
    fn hex_and_bits_agree() {
        let (_, bits, _) = run_args(&["generate", "--factors", "1011,1101", "--limit", "3"]);
        let (_, hex, _) = run_args(&[
            "generate",
            "--factors",
            "1011,1101",
            "--limit",
            "3",
            "--hex",
        ]);
        let bits: Vec<&str> = bits.lines().skip(2).collect();
        let hex: Vec<&str> = hex.lines().skip(2).collect();
        for (b, h) in bits.iter().zip(&hex) {
            assert_eq!(
                parse_sequence(h, true).unwrap(),
                parse_sequence(b, false).unwrap()
            );
        }
    }
}
