use clap::{Args, Parser, Subcommand, ValueEnum};
use nythard_core::DEFAULT_BUDGET;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "nythard", version, about = "Solve, verify and reduce Letter Boxed, Pips, Strands and Tiles instances")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Flags {
    /// Word budget for Letter Boxed.
    #[arg(long)]
    pub k: Option<usize>,
    /// Strands paths use edge adjacency only.
    #[arg(long)]
    pub no_diagonal: bool,
    /// Pips reduction joins all gadgets into one board.
    #[arg(long)]
    pub connected: bool,
    /// Tiles: require a solution without teleports.
    #[arg(long)]
    pub no_teleport: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Search node budget.
    #[arg(long, env = "NYTHARD_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Also write an SVG picture here.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    pub format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Game {
    Letterboxed,
    Pips,
    Strands,
    Tiles,
    Flowfree,
    Nae3sat,
    #[value(name = "1in3")]
    OneInThree,
    #[value(name = "3dm")]
    ThreeDm,
    Subsetsum,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    #[value(name = "nae3sat-to-letterboxed")]
    NaeToLetterBoxed,
    #[value(name = "3dm-to-letterboxed")]
    ThreeDmToLetterBoxed,
    #[value(name = "lift-sides")]
    LiftSides,
    #[value(name = "1in3-to-pips")]
    OneInThreeToPips,
    #[value(name = "subsetsum-to-pips")]
    SubsetSumToPips,
    #[value(name = "1in3-to-strands")]
    OneInThreeToStrands,
    #[value(name = "expand-blocks")]
    ExpandBlocks,
    #[value(name = "flowfree-to-strands")]
    FlowFreeToStrands,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Letterboxed,
    Strands,
    Tiles,
    Nae3sat,
    #[value(name = "1in3")]
    OneInThree,
    #[value(name = "3dm")]
    ThreeDm,
    Subsetsum,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Letterboxed,
    #[value(name = "pips-1in3")]
    Pips1in3,
    #[value(name = "pips-subsetsum")]
    PipsSubsetSum,
    #[value(name = "strands-1in3")]
    Strands1in3,
    #[value(name = "strands-planted")]
    StrandsPlanted,
    Tiles,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve an instance; prints the solution.
    Solve {
        subject: Game,
        puzzle: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Check a solution against an instance.
    Verify {
        subject: Game,
        puzzle: PathBuf,
        solution: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Build the reduced instance and its layout sidecar.
    Reduce {
        reduction: Reduction,
        input: PathBuf,
        /// Reduced instance; stdout when omitted.
        output: Option<PathBuf>,
        /// Sidecar path; defaults to OUTPUT with `.layout.json`.
        #[arg(long)]
        layout: Option<PathBuf>,
        #[command(flatten)]
        flags: Flags,
    },
    /// Map a solution of a reduced instance back to the source problem.
    Pullback {
        reduction: Reduction,
        puzzle: PathBuf,
        layout: PathBuf,
        solution: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Reduce, solve, pull back and compare with the source oracle.
    Roundtrip {
        reduction: Reduction,
        input: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Draw an instance, optionally with a solution.
    Render {
        subject: Game,
        puzzle: PathBuf,
        solution: Option<PathBuf>,
        #[command(flatten)]
        flags: Flags,
    },
    /// Print a seeded random instance.
    Gen {
        kind: GenKind,
        /// Variables, n, element count, side length, grid side or tiles.
        #[arg(long, default_value_t = 4)]
        size: usize,
        /// Clauses, triples, maximum element, words or features.
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[command(flatten)]
        flags: Flags,
    },
    /// Time solver calls over a generated family; CSV on stdout.
    Bench {
        family: Family,
        /// Instances per size.
        #[arg(long, default_value_t = 5)]
        count: u64,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[command(flatten)]
        flags: Flags,
    },
}
