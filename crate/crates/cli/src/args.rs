use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spinnet::arith::Rational;
use spinnet::orthopoly::Family;
use spinnet::statesum::Phase;
use spinnet::{HalfInt, Spin};

use crate::spins::{doubled_half, doubled_spin, half_value, spin_value};

#[derive(Parser, Debug)]
#[command(
    name = "spinnet",
    version,
    about = "Exact angular-momentum recoupling, discrete orthogonal polynomials and state sums"
)]
pub struct Cli {
    /// Print JSON with exact values as integer strings.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Print CSV with floating-point values and error bounds.
    #[arg(long, global = true)]
    pub csv: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)] // parsed once per process
pub enum Command {
    /// Wigner 3j, Clebsch-Gordan, 6j, 9j and 12j symbols and the recoupling matrix.
    /// Spins are doubled integers (3 means 3/2) or explicit halves like 3/2.
    #[command(subcommand)]
    Wigner(WignerCommand),
    /// Evaluate and verify hypergeometric orthogonal polynomials.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Compare large-spin approximations with exact values. Spins are given
    /// by value (20, 5/2 or 2.5).
    #[command(subcommand)]
    Asym(AsymCommand),
    /// Evaluate a state sum over a triangulation, or run the 2-3 move check.
    Statesum(StatesumArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum PathChoice {
    #[default]
    Racah,
    Oracle,
    Both,
}

#[derive(Subcommand, Debug)]
#[command(allow_negative_numbers = true)]
pub enum WignerCommand {
    /// (j1 j2 j3; m1 m2 m3)
    #[command(name = "3j", allow_negative_numbers = true)]
    ThreeJ {
        /// j1 j2 j3 m1 m2 m3
        #[arg(value_parser = doubled_half, num_args = 6, required = true, value_names = ["J1", "J2", "J3", "M1", "M2", "M3"])]
        values: Vec<HalfInt>,
    },
    /// <j1 m1 j2 m2 | j m>
    #[command(name = "cg", allow_negative_numbers = true)]
    Cg {
        #[arg(value_parser = doubled_spin)]
        j1: Spin,
        #[arg(value_parser = doubled_spin)]
        j2: Spin,
        #[arg(value_parser = doubled_half, allow_negative_numbers = true)]
        m1: HalfInt,
        #[arg(value_parser = doubled_half, allow_negative_numbers = true)]
        m2: HalfInt,
        #[arg(value_parser = doubled_spin)]
        j: Spin,
        #[arg(value_parser = doubled_half, allow_negative_numbers = true)]
        m: HalfInt,
    },
    /// {j1 j2 j12; j3 j j23}
    #[command(name = "6j")]
    SixJ {
        #[arg(value_parser = doubled_spin, num_args = 6, required = true, value_names = ["J1", "J2", "J12", "J3", "J", "J23"])]
        labels: Vec<Spin>,
        #[arg(long, value_enum, default_value_t)]
        path: PathChoice,
    },
    /// 9j symbol, rows in order.
    #[command(name = "9j")]
    NineJ {
        #[arg(value_parser = doubled_spin, num_args = 9, required = true, value_name = "J")]
        labels: Vec<Spin>,
        #[arg(long, value_enum, default_value_t)]
        path: PathChoice,
    },
    /// 12j symbol of the second kind: j1..j4, l1..l4, k1..k4.
    #[command(name = "12j")]
    TwelveJ {
        #[arg(value_parser = doubled_spin, num_args = 12, required = true, value_name = "J")]
        labels: Vec<Spin>,
        #[arg(long, value_enum, default_value_t)]
        path: PathChoice,
    },
    /// Recoupling coefficient U(j12, j23) for j1 j2 j3 j j12 j23.
    #[command(name = "u")]
    U {
        #[arg(value_parser = doubled_spin, num_args = 6, required = true, value_names = ["J1", "J2", "J3", "J", "J12", "J23"])]
        labels: Vec<Spin>,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|_| format!("'{s}' is not a rational like 3, -1 or 1/2"))
}

fn family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

#[derive(Args, Debug, Clone)]
#[command(allow_negative_numbers = true)]
pub struct FamilyArgs {
    /// hahn, kravchuk, meixner, charlier, racah or dual-hahn.
    #[arg(long, value_parser = family)]
    pub family: Family,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub alpha: Option<Rational>,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub beta: Option<Rational>,
    #[arg(long, value_parser = rational)]
    pub p: Option<Rational>,
    #[arg(long, value_parser = rational)]
    pub gamma: Option<Rational>,
    #[arg(long, value_parser = rational)]
    pub mu: Option<Rational>,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub a: Option<Rational>,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub b: Option<Rational>,
    #[arg(long, value_parser = rational, allow_negative_numbers = true)]
    pub c: Option<Rational>,
    /// Hahn: number of support points; Kravchuk: largest support point.
    #[arg(long = "N")]
    pub big_n: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum PolyCommand {
    /// p_n at one lattice point s (the polynomial variable is x(s)).
    Eval {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, visible_alias = "s", value_parser = rational, allow_negative_numbers = true)]
        x: Rational,
    },
    /// Orthogonality sums for every pair n, m up to --max-n.
    CheckOrtho {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
    /// Difference-equation residuals at every interior point.
    CheckDiffeq {
        #[command(flatten)]
        family: FamilyArgs,
        /// A single degree; without it every degree up to --max-n is checked.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum AsymCommand {
    /// Wigner d-function: exact sum against the large-j formula.
    D {
        #[arg(long, value_parser = spin_value, default_value = "20")]
        j: Spin,
        #[arg(long, value_parser = half_value, allow_negative_numbers = true, default_value = "0")]
        m: HalfInt,
        #[arg(long, value_parser = half_value, allow_negative_numbers = true, default_value = "0")]
        mp: HalfInt,
        /// Angle in radians.
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_3)]
        theta: f64,
        /// Several values of j, overriding --j.
        #[arg(long, value_parser = spin_value, value_delimiter = ',')]
        scales: Vec<Spin>,
    },
    /// Small-j12 formula over every j23 for {K K j12; K K j23}.
    #[command(name = "6j-eq1")]
    SixJEq1 {
        /// The common large spin K.
        #[arg(long, value_parser = spin_value, default_value = "20")]
        base: Spin,
        #[arg(long, value_parser = spin_value, default_value = "1")]
        j12: Spin,
        /// Several values of K, overriding --base.
        #[arg(long, value_parser = spin_value, value_delimiter = ',')]
        scales: Vec<Spin>,
    },
    /// Tetrahedron formula, on equilateral windows or one symbol.
    #[command(name = "6j-pr")]
    SixJPr {
        /// Windows of equilateral labels j_i = k, k = scale … scale+width-1.
        #[arg(long)]
        equilateral: bool,
        #[arg(long, value_delimiter = ',', default_value = "10,20,40")]
        scales: Vec<u32>,
        #[arg(long, default_value_t = 3)]
        width: u32,
        /// One symbol {j1 j2 j12; j3 j j23} instead of the windows.
        #[arg(long, value_parser = spin_value, num_args = 6, conflicts_with = "equilateral")]
        labels: Option<Vec<Spin>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Pachner23,
}

fn phase(s: &str) -> Result<Phase, String> {
    s.parse::<Phase>()
}

#[derive(Args, Debug)]
pub struct StatesumArgs {
    /// Triangulation document (JSON).
    #[arg(long, required_unless_present = "check")]
    pub input: Option<PathBuf>,
    /// Cutoff on internal spins, doubled.
    #[arg(long, value_parser = doubled_spin)]
    pub lambda: Option<Spin>,
    /// Evaluate at each of these doubled cutoffs.
    #[arg(long, value_parser = doubled_spin, value_delimiter = ',', conflicts_with = "check")]
    pub sweep: Vec<Spin>,
    /// boundary-normalized, ponzano-regge or none.
    #[arg(long, value_parser = phase, default_value = "boundary-normalized")]
    pub phase: Phase,
    /// Run an identity check on random boundaries instead of a document.
    #[arg(long, value_enum, conflicts_with = "input")]
    pub check: Option<Check>,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Largest doubled boundary spin for the random boundaries.
    #[arg(long, value_parser = doubled_spin, default_value = "6")]
    pub max_spin: Spin,
    /// Number of random boundaries.
    #[arg(long, default_value_t = 50)]
    pub count: usize,
}
