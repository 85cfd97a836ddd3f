use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use tess4_core::Vec4;

#[derive(Parser, Debug)]
#[command(
    name = "tess4",
    version,
    about = "Equilateral triangles and regular tetrahedra with vertices in Z^4",
    propagate_version = true
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for the enumeration commands. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Primitive solutions [a,b,c] of a^2 + b^2 + c^2 = 3d^2.
    Solutions(SolutionsArgs),
    /// Closed-form count of primitive solutions against exhaustive search.
    Count(CountArgs),
    /// Solutions of 2a^2 + c^2 = 3d^2 from the (k, l) parametrization.
    Theorem11(Theorem11Args),
    /// The four-square generator: one seed, or coverage of the solution tables.
    Param12(Param12Args),
    /// Build or inspect an equilateral triangle.
    Triangle(TriangleArgs),
    /// Complete a triangle or a single point to a regular tetrahedron.
    Complete(CompleteArgs),
    /// Minor system, orthogonal frame and plane lattice of a triangle.
    Deltas(PairArgs),
    /// Rebuild a triangle from two representations of 3k^2.
    Construct(ConstructArgs),
    /// Ehrhart polynomial of a triangle in its plane lattice.
    Ehrhart(EhrhartArgs),
    /// Minimal triangles by side.
    Census(CensusArgs),
    /// Tetrahedron-completion and generator-coverage harnesses.
    Conjectures(ConjecturesArgs),
    /// Symmetry orbits of all triangles with a given side.
    Orbits(OrbitsArgs),
}

pub fn parse_ints<const N: usize>(s: &str) -> Result<[i64; N], String> {
    let parts: Vec<&str> = s.trim().trim_start_matches('[').trim_end_matches(']').split(',').collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated integers, got {:?}", s));
    }
    let mut out = [0; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.trim().parse().map_err(|e| format!("bad integer {p:?}: {e}"))?;
    }
    Ok(out)
}

fn vec4(s: &str) -> Result<Vec4, String> {
    parse_ints::<4>(s).map(Vec4)
}

fn triple(s: &str) -> Result<[i64; 3], String> {
    parse_ints::<3>(s)
}

fn pair(s: &str) -> Result<[i64; 2], String> {
    parse_ints::<2>(s)
}

fn quad(s: &str) -> Result<[i64; 4], String> {
    parse_ints::<4>(s)
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("which").required(true)))]
pub struct SolutionsArgs {
    /// Odd positive d.
    #[arg(long, group = "which")]
    pub d: Option<i64>,
    /// Every odd d up to this bound.
    #[arg(long, group = "which")]
    pub max_d: Option<i64>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("which").required(true)))]
pub struct CountArgs {
    #[arg(long, group = "which")]
    pub d: Option<i64>,
    /// Every odd d up to this bound.
    #[arg(long, group = "which")]
    pub max_d: Option<i64>,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
#[command(group(ArgGroup::new("which").required(true).args(["k", "verify_d"])))]
pub struct Theorem11Args {
    /// Odd k.
    #[arg(long, requires = "l")]
    pub k: Option<i64>,
    #[arg(long, requires = "k")]
    pub l: Option<i64>,
    /// Compare against exhaustive search for every d up to this bound.
    #[arg(long)]
    pub verify_d: Option<i64>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("which").required(true)))]
pub struct Param12Args {
    /// Seed x,y,z,t.
    #[arg(long, group = "which", value_parser = quad, allow_hyphen_values = true)]
    pub seed: Option<[i64; 4]>,
    /// Coverage of the solution tables for every odd d up to this bound.
    #[arg(long, group = "which")]
    pub coverage: Option<i64>,
    /// Seeds range over |x|,|y|,|z|,|t| <= ceil(sqrt(d)) + margin.
    #[arg(long, default_value_t = 1, requires = "coverage")]
    pub margin: i64,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
#[command(group(ArgGroup::new("source").required(true).args(["seed", "solution", "a"])))]
pub struct TriangleArgs {
    /// Four-parameter family seed a,b,c,d.
    #[arg(long, value_parser = quad, allow_hyphen_values = true)]
    pub seed: Option<[i64; 4]>,
    /// Solution a,b,c,d of a^2 + b^2 + c^2 = 3d^2; needs --mn.
    #[arg(long, value_parser = quad, allow_hyphen_values = true, requires = "mn")]
    pub solution: Option<[i64; 4]>,
    /// Coprime m,n for --solution.
    #[arg(long, value_parser = pair, allow_hyphen_values = true, requires = "solution")]
    pub mn: Option<[i64; 2]>,
    /// Explicit vertex A; needs --b.
    #[arg(long, value_parser = vec4, allow_hyphen_values = true, requires = "b")]
    pub a: Option<Vec4>,
    #[arg(long, value_parser = vec4, allow_hyphen_values = true, requires = "a")]
    pub b: Option<Vec4>,
    /// Apply the (m, n) generator to the triangle.
    #[arg(long, value_parser = pair, allow_hyphen_values = true)]
    pub generate: Option<[i64; 2]>,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
#[command(group(ArgGroup::new("source").required(true).args(["seed", "solution", "point"])))]
pub struct CompleteArgs {
    /// Four-parameter family seed a,b,c,d.
    #[arg(long, value_parser = quad, allow_hyphen_values = true)]
    pub seed: Option<[i64; 4]>,
    /// Solution a,b,c,d of a^2 + b^2 + c^2 = 3d^2; needs --mn.
    #[arg(long, value_parser = quad, allow_hyphen_values = true, requires = "mn")]
    pub solution: Option<[i64; 4]>,
    #[arg(long, value_parser = pair, allow_hyphen_values = true, requires = "solution")]
    pub mn: Option<[i64; 2]>,
    /// A point with even squared norm, completed to a tetrahedron with the origin.
    #[arg(long, value_parser = vec4, allow_hyphen_values = true)]
    pub point: Option<Vec4>,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long, value_parser = vec4, allow_hyphen_values = true)]
    pub a: Vec4,
    #[arg(long, value_parser = vec4, allow_hyphen_values = true)]
    pub b: Vec4,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct ConstructArgs {
    /// Odd k with 3k^2 = |rep1|^2 = |rep2|^2.
    #[arg(long)]
    pub k: i64,
    #[arg(long, value_parser = triple, allow_hyphen_values = true)]
    pub rep1: [i64; 3],
    #[arg(long, value_parser = triple, allow_hyphen_values = true)]
    pub rep2: [i64; 3],
    /// Search only this ell instead of the smallest one that works.
    #[arg(long)]
    pub ell: Option<i64>,
    /// Starting candidate v,w at --ell.
    #[arg(long, value_parser = pair, allow_hyphen_values = true, requires = "ell")]
    pub vw: Option<[i64; 2]>,
}

#[derive(Args, Debug)]
pub struct EhrhartArgs {
    #[arg(long, value_parser = vec4, allow_hyphen_values = true)]
    pub a: Vec4,
    #[arg(long, value_parser = vec4, allow_hyphen_values = true)]
    pub b: Vec4,
    /// Reference coefficients c2,c1,c0 (fractions allowed); a mismatch is reported as a diagnostic.
    #[arg(long, allow_hyphen_values = true)]
    pub expect: Option<String>,
    /// Largest dilation to list counts for.
    #[arg(long, default_value_t = 5)]
    pub max_t: i64,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("which").required(true)))]
pub struct CensusArgs {
    #[arg(long = "max-L", group = "which")]
    pub max_l: Option<i64>,
    /// A single side.
    #[arg(long = "L", group = "which")]
    pub l: Option<i64>,
}

#[derive(Args, Debug)]
pub struct ConjecturesArgs {
    /// Tetrahedron completion for every triangle orbit with L up to this bound.
    #[arg(long = "max-L")]
    pub max_l: i64,
    /// Generator coverage for every odd d up to this bound.
    #[arg(long)]
    pub coverage_d: Option<i64>,
    #[arg(long, default_value_t = 1)]
    pub margin: i64,
}

#[derive(Args, Debug)]
pub struct OrbitsArgs {
    #[arg(long = "L")]
    pub l: i64,
}
