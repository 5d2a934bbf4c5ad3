use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "forge", version, about = "Arithmetically Gorenstein schemes from sections of Buchsbaum-Rim sheaves")]
pub struct Cli {
    #[command(flatten)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

/// Where the results go.
#[derive(Args, Debug, Clone, Default)]
pub struct Output {
    /// Write the main artifact here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Write the JSON summary here (`-` for stdout, after the artifact).
    #[arg(long, global = true, value_name = "FILE")]
    pub json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Random t x (t+r) map, regular section of its kernel, top part of the zero locus.
    Br(BrArgs),
    /// Random section of given degree of the kernel of a matrix.
    Section(SectionArgs),
    /// Top-dimensional part of an ideal, as J:(J:I).
    Top(TopArgs),
    /// Hilbert series, dimension and degree of R/I.
    Hilb(IdealArg),
    /// Free resolution of an ideal and its Betti table.
    Res(ResArgs),
    /// Ideal of t x t minors of a matrix.
    Minors(MinorsArgs),
    /// Maximal Pfaffians of an odd skew-symmetric matrix.
    Pfaffians(MatrixArg),
    /// Chern classes, expected degree and expected resolution from twists.
    Predict(PredictArgs),
    /// G-link through a Gorenstein scheme containing the given one.
    Link(LinkArgs),
    /// Section of a generalized Buchsbaum-Rim sheaf from a CI link of a Gorenstein ideal.
    Genbr(GenbrArgs),
}

#[derive(Args, Debug)]
pub struct BrArgs {
    #[arg(long, required_unless_present = "matrix")]
    pub t: Option<usize>,
    #[arg(long, required_unless_present = "matrix")]
    pub r: Option<usize>,
    #[arg(long = "entry-deg", required_unless_present = "matrix")]
    pub entry_degree: Option<u32>,
    #[arg(long = "sec-deg", allow_hyphen_values = true)]
    pub section_degree: i32,
    /// Projective dimension; variables are z0..zn.
    #[arg(long, required_unless_present = "matrix")]
    pub n: Option<usize>,
    #[arg(long = "char", env = "FORGE_CHAR", default_value_t = 32003)]
    pub characteristic: u64,
    #[arg(long)]
    pub seed: u64,
    /// Use this matrix (entries of one degree) instead of a random one.
    #[arg(long, value_name = "FILE")]
    pub matrix: Option<PathBuf>,
    /// Print the `//` step log to stderr.
    #[arg(long)]
    pub protocol: bool,
    /// Resolve the result and compare with the predicted degree and shape.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args, Debug)]
pub struct SectionArgs {
    #[arg(long, value_name = "FILE")]
    pub matrix: PathBuf,
    /// Degree of the section in the source grading.
    #[arg(long, allow_hyphen_values = true)]
    pub deg: i32,
    #[arg(long)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct TopArgs {
    #[arg(long, value_name = "FILE")]
    pub ideal: PathBuf,
    #[arg(long)]
    pub codim: usize,
    #[arg(long)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct IdealArg {
    #[arg(long, value_name = "FILE")]
    pub ideal: PathBuf,
}

#[derive(Args, Debug)]
pub struct ResArgs {
    #[arg(long, value_name = "FILE")]
    pub ideal: PathBuf,
    #[arg(long)]
    pub minimal: bool,
}

#[derive(Args, Debug)]
pub struct MinorsArgs {
    #[arg(long, value_name = "FILE")]
    pub matrix: PathBuf,
    #[arg(long)]
    pub t: usize,
}

#[derive(Args, Debug)]
pub struct MatrixArg {
    #[arg(long, value_name = "FILE")]
    pub matrix: PathBuf,
}

#[derive(Args, Debug)]
pub struct PredictArgs {
    /// key=value lines or a JSON object: `a`, `b`, optional `p`, `n` for a
    /// twist spec; `e1`, `e2`, `ds`, `l`, `d`, `n` for a generalized one.
    #[arg(long, value_name = "FILE")]
    pub spec: PathBuf,
}

#[derive(Args, Debug)]
pub struct LinkArgs {
    #[arg(long, value_name = "FILE")]
    pub phi: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub ideal: PathBuf,
    /// Section degree; searched upward from the lowest one when missing.
    #[arg(long, allow_hyphen_values = true)]
    pub deg: Option<i32>,
    #[arg(long)]
    pub seed: u64,
    /// Also write zs.id, ix.id and iw.id here.
    #[arg(long, value_name = "DIR")]
    pub out_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GenbrArgs {
    #[arg(long, value_name = "FILE")]
    pub gorenstein: PathBuf,
    /// Degrees of the linking complete intersection, e.g. 3,3,3.
    #[arg(long, value_delimiter = ',', required = true)]
    pub ci: Vec<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<i64>,
    #[arg(long)]
    pub d: i64,
    #[arg(long)]
    pub seed: u64,
    /// Also write iv.id and zs.id here.
    #[arg(long, value_name = "DIR")]
    pub out_dir: Option<PathBuf>,
}
