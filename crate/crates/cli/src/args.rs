//! Command-line surface: subcommands and flags.
//!
//! Field selection accepts either `--q` (a prime power, factored
//! automatically) or `--p` with an optional extension degree `--e`.
//! Block lists (`--blocks`) are 1-based on the command line; distribution
//! parameters (`--params`) are `n,r,k,q`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "folded-codes",
    version,
    about = "Linear codes under the folded Hamming distance: construct, classify, analyze",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build a code and write it as JSON
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Report d, d_perp, and the attained class of a code file
    Classify {
        #[command(flatten)]
        input: InputFile,
        /// How to compute minimum distances
        #[arg(long, value_enum, default_value_t = DistanceFlag::Rank)]
        method: DistanceFlag,
        #[command(flatten)]
        budget: BudgetFlag,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Weight distributions: count, evaluate in closed form, check the
    /// MacWilliams identities, or reconstruct the tail
    Wdist {
        #[arg(long, value_enum, default_value_t = WdistFlag::Exhaustive)]
        method: WdistFlag,
        /// Code file; optional when --params carries the parameters
        #[arg(long = "in", value_name = "PATH")]
        input: Option<PathBuf>,
        /// Closed-form parameters n,r,k,q (overrides the file's)
        #[arg(long, value_delimiter = ',', value_name = "N,R,K,Q")]
        params: Option<Vec<u64>>,
        #[command(flatten)]
        budget: BudgetFlag,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Project a code onto the chosen blocks
    Restrict {
        #[command(flatten)]
        input: InputFile,
        #[command(flatten)]
        blocks: BlocksFlag,
        #[command(flatten)]
        output: OutputFile,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Keep codewords supported inside the chosen blocks, projected
    Shorten {
        #[command(flatten)]
        input: InputFile,
        #[command(flatten)]
        blocks: BlocksFlag,
        #[command(flatten)]
        output: OutputFile,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Distance and length bounds for dually QMDS parameters
    Bounds {
        #[command(flatten)]
        field: FieldFlags,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        /// Block length, when known; enables the length bounds
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Sample random codes and measure the dually QMDS fraction
    Density {
        #[command(flatten)]
        field: FieldFlags,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Convert between codes and pseudo arcs, or report arc parameters
    Pseudoarc {
        #[command(subcommand)]
        kind: PseudoarcKind,
    },
    /// Apply a block isometry to a code, or solve for the dual-arc witness
    Isometry {
        #[command(subcommand)]
        kind: IsometryKind,
    },
}

#[derive(Subcommand)]
pub enum ConstructKind {
    /// Residues of low-degree polynomials modulo split coprime moduli
    Pi {
        #[command(flatten)]
        field: FieldFlags,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// How the moduli factor
        #[arg(long, value_enum, default_value_t = SplitFlag::Distinct)]
        method: SplitFlag,
        #[command(flatten)]
        output: OutputFile,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The one-weight binary family of type [2^{r+1}-1, r, r+1, 2^{r+1}-2]
    BinaryLong {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        output: OutputFile,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The dual of the block repetition code: an MDS code of distance 2
    RepetitionDual {
        #[command(flatten)]
        field: FieldFlags,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputFile,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The canonical QMDS subcode of lower dimension
    Subcode {
        #[command(flatten)]
        input: InputFile,
        /// Target dimension
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: OutputFile,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Expand a width-1 code over F_{p^e} to blocks of width e over F_p
    Expand {
        #[command(flatten)]
        input: InputFile,
        #[command(flatten)]
        output: OutputFile,
        #[command(flatten)]
        json: JsonFlag,
    },
}

#[derive(Subcommand)]
pub enum PseudoarcKind {
    /// Column blocks of the parity-check matrix as an arc
    FromCode {
        #[command(flatten)]
        input: InputFile,
        #[command(flatten)]
        output: OutputFile,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// The code whose parity-check matrix concatenates the arc
    ToCode {
        #[command(flatten)]
        input: InputFile,
        #[command(flatten)]
        output: OutputFile,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Arc parameters [n,r,m,t] and nondegeneracy
    Params {
        #[command(flatten)]
        input: InputFile,
        #[command(flatten)]
        json: JsonFlag,
    },
}

#[derive(Subcommand)]
pub enum IsometryKind {
    /// Apply the isometry in --iso to the code in --in
    Apply {
        #[command(flatten)]
        input: InputFile,
        #[command(flatten)]
        iso: IsoFile,
        #[command(flatten)]
        output: OutputFile,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Solve for the invertible B carrying the parity matrix onto the
    /// isometry image's, and verify it
    DualWitness {
        #[command(flatten)]
        input: InputFile,
        #[command(flatten)]
        iso: IsoFile,
        #[command(flatten)]
        json: JsonFlag,
    },
}

/// `--q` (prime power) or `--p` plus optional `--e`.
#[derive(Args)]
pub struct FieldFlags {
    /// Field order, a prime power
    #[arg(long, conflicts_with_all = ["p", "e"], required_unless_present = "p")]
    pub q: Option<u64>,
    /// Field characteristic (with --e for extensions)
    #[arg(long, required_unless_present = "q")]
    pub p: Option<u64>,
    /// Extension degree over the prime field (with --p)
    #[arg(long, requires = "p")]
    pub e: Option<usize>,
}

#[derive(Args)]
pub struct InputFile {
    /// Input file
    #[arg(id = "in", long = "in", value_name = "PATH")]
    pub path: PathBuf,
}

#[derive(Args)]
pub struct IsoFile {
    /// Isometry file
    #[arg(id = "iso", long = "iso", value_name = "PATH")]
    pub path: PathBuf,
}

#[derive(Args)]
pub struct OutputFile {
    /// Output file; without it the JSON goes to standard output
    #[arg(id = "out", long = "out", value_name = "PATH")]
    pub path: Option<PathBuf>,
}

#[derive(Args)]
pub struct BlocksFlag {
    /// Block numbers, 1-based, comma-separated
    #[arg(long, value_delimiter = ',', value_name = "I,J,...", required = true)]
    pub blocks: Vec<usize>,
}

#[derive(Args)]
pub struct BudgetFlag {
    /// Enumeration cap on the number of codewords visited
    #[arg(long)]
    pub budget: Option<u128>,
}

#[derive(Args)]
pub struct JsonFlag {
    /// Machine-readable JSON instead of the human-readable report
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum DistanceFlag {
    /// Scan block-column submatrices for rank defects
    Rank,
    /// Enumerate all codewords
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum WdistFlag {
    /// Count every codeword's folded weight
    Exhaustive,
    /// Closed form from parameters (exact for dually QMDS codes)
    Formula,
    /// Residuals of the MacWilliams identities for the code and its dual
    MacwilliamsCheck,
    /// Rebuild the tail from the low-weight head via the inverse transform
    Reconstruct,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SplitFlag {
    /// Moduli split into distinct linear factors (needs rn <= q)
    Distinct,
    /// Each modulus is a repeated linear factor (needs n <= q)
    Repeated,
}
