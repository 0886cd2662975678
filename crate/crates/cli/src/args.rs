use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "seaweed", version, about = "Frobenius seaweed algebras: meanders, spectra, enumeration")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbits, Frobenius verdict and U-turns.
    Check(SeaweedArgs),
    /// Simple eigenvalues, component spectra and the full spectrum.
    Spectrum(SeaweedArgs),
    /// Catalog of Frobenius seaweeds of one type.
    Enumerate(EnumerateArgs),
    /// Compare the combinatorial spectrum with a matrix computation (type A).
    Oracle(OracleArgs),
    /// Draw the orbit meander.
    Render(SeaweedArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Svg,
    Tikz,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// A, B, C, D (with --rank), or E6, E7, E8, F4, G2.
    #[arg(long = "type")]
    pub family: String,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Accepted for exceptional types only, whose numbering is already Bourbaki.
    #[arg(long)]
    pub bourbaki: bool,
}

#[derive(Debug, Args)]
pub struct SeaweedArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Simple roots of π₁, e.g. 9,7,6,4.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "top_comp")]
    pub top: Option<Vec<String>>,
    /// π₁ as Π∖φ(a) for a composition a.
    #[arg(long = "top-comp", value_delimiter = ',')]
    pub top_comp: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "bottom_comp")]
    pub bottom: Option<Vec<String>>,
    #[arg(long = "bottom-comp", value_delimiter = ',')]
    pub bottom_comp: Option<Vec<String>>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Split a seaweed with π₁∪π₂ ≠ Π into its direct summands.
    #[arg(long)]
    pub decompose: bool,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Diff the E6 catalog against the reference list of 74 pairs.
    #[arg(long = "check-appendix-a")]
    pub check_reference: bool,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub seaweed: SeaweedArgs,
    /// Seed for sampling functionals.
    #[arg(long)]
    pub seed: Option<u64>,
}
