use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use coinciding::{GeneratorRule, IntegerSet, RepVariant};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "coinciding",
    version,
    about = "Sets with coinciding representation functions"
)]
pub struct Cli {
    /// Output format; csv is only available for profile tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Do not echo the report on stdout.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for search and partition scans.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn parse_set(s: &str) -> Result<IntegerSet, String> {
    IntegerSet::parse_literal(s).map_err(|e| e.to_string())
}

fn parse_variant(s: &str) -> Result<RepVariant, String> {
    s.parse::<RepVariant>().map_err(|e| e.to_string())
}

fn parse_rule(s: &str) -> Result<GeneratorRule, String> {
    s.parse::<GeneratorRule>().map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Representation counts of a set.
    Repfn(RepfnArgs),
    /// Even and odd parts of a Hilbert cube.
    Cube(CubeArgs),
    /// Whether two sets have the same pair-representation function.
    #[command(name = "verify-eq1")]
    VerifyEq1(PairArgs),
    /// Multiplicity of the root 1 in C(z) - D(z).
    #[command(name = "cert-mult")]
    CertMult(PairArgs),
    /// Divisibility test and materialization of an eventually periodic pair.
    Nathanson(NathansonArgs),
    /// All C with the same representation function as D.
    Solve(SolveArgs),
    /// Whether a coinciding pair is a pair of cube halves.
    Classify(PairArgs),
    /// Partitions of the naturals with a progression overlap.
    #[command(subcommand)]
    Partition(PartitionCommand),
    /// Exhaustive search for coinciding pairs, with classification.
    Search(SearchArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Repfn(_) => "repfn",
            Self::Cube(_) => "cube",
            Self::VerifyEq1(_) => "verify-eq1",
            Self::CertMult(_) => "cert-mult",
            Self::Nathanson(_) => "nathanson",
            Self::Solve(_) => "solve",
            Self::Classify(_) => "classify",
            Self::Partition(PartitionCommand::Verify(_)) => "partition verify",
            Self::Partition(PartitionCommand::Scan(_)) => "partition scan",
            Self::Search(_) => "search",
        }
    }
}

#[derive(Debug, Args)]
pub struct RepfnArgs {
    /// Set literal (`0,3,5` or `@file`).
    #[arg(long, value_parser = parse_set)]
    pub set: IntegerSet,
    /// Number of summands.
    #[arg(long, default_value_t = 2)]
    pub h: usize,
    /// ordered, non-decreasing or strict.
    #[arg(long, value_parser = parse_variant, default_value = "strict")]
    pub variant: RepVariant,
    /// Largest n to report; defaults to h times the largest element.
    #[arg(long)]
    pub n_max: Option<u64>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["generators", "rule"])))]
pub struct CubeArgs {
    /// Explicit generators, strictly increasing.
    #[arg(long, value_parser = parse_set)]
    pub generators: Option<IntegerSet>,
    /// Named generator sequence: `pow2` or `chenlev:<l>`; needs --bound.
    #[arg(long, value_parser = parse_rule, requires = "bound")]
    pub rule: Option<GeneratorRule>,
    /// Keep only cube elements up to this bound.
    #[arg(long)]
    pub bound: Option<u64>,
    /// Print both parts.
    #[arg(long)]
    pub parts: bool,
    /// Check that the halves coincide and the product identities hold.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long = "C", value_parser = parse_set)]
    pub c: IntegerSet,
    #[arg(long = "D", value_parser = parse_set)]
    pub d: IntegerSet,
}

#[derive(Debug, Args)]
pub struct NathansonArgs {
    #[arg(long, value_parser = parse_set)]
    pub fc: IntegerSet,
    #[arg(long, value_parser = parse_set)]
    pub fd: IntegerSet,
    /// Residues repeated with period M.
    #[arg(long, value_parser = parse_set)]
    pub t: IntegerSet,
    #[arg(long)]
    pub modulus: u64,
    #[arg(long)]
    pub n0: u64,
    #[arg(long, default_value_t = 2)]
    pub h: usize,
    /// Materialize both sets on [0, bound].
    #[arg(long)]
    pub bound: Option<u64>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long = "D", value_parser = parse_set)]
    pub d: IntegerSet,
    #[arg(long, default_value_t = 64)]
    pub max_solutions: usize,
    /// Largest element allowed in C; defaults to twice max(D).
    #[arg(long)]
    pub n_max: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum PartitionCommand {
    /// Check the Chen–Lev partition with parameter l up to a bound.
    Verify(PartitionVerifyArgs),
    /// Search for partitions with a progression overlap.
    Scan(PartitionScanArgs),
}

#[derive(Debug, Args)]
pub struct PartitionVerifyArgs {
    #[arg(long)]
    pub l: u32,
    #[arg(long)]
    pub bound: u64,
}

#[derive(Debug, Args)]
pub struct PartitionScanArgs {
    #[arg(long)]
    pub bound: u64,
    #[arg(long)]
    pub max_m: u64,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub max_element: u64,
    #[arg(long)]
    pub size: usize,
    /// Allow sizes that are not powers of two.
    #[arg(long)]
    pub diagnostic: bool,
    /// Append each finished shard to this JSON lines file.
    #[arg(long, conflicts_with = "resume")]
    pub checkpoint: Option<PathBuf>,
    /// Continue from a checkpoint file, appending new shards to it.
    #[arg(long)]
    pub resume: Option<PathBuf>,
}
