use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use farey_index::farey::Fraction;
use farey_index::geometry::Rational;
use serde::{Serialize, Serializer};

/// Exact Farey index statistics and Farey-triangle map constants.
#[derive(Debug, Parser)]
#[command(name = "farey-index", version, about)]
pub struct Cli {
    /// Worker threads for enumeration; results do not depend on it.
    #[arg(long, global = true, env = "FAREY_INDEX_WORKERS", default_value_t = 1)]
    pub workers: usize,

    /// Output format (each command has its own default).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the payload here instead of stdout; the run manifest goes to
    /// `<out>.manifest.json`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(untagged)]
pub enum Command {
    /// Check the index-sum and lower-count identities for every Q up to --q.
    Identities(IdentitiesArgs),
    /// Exact A(h), B_α with tail bounds, and the frequencies l_k, u_k.
    Constants(ConstantsArgs),
    /// Table of area(T^h T_m* ∩ T_n*) for m, n ≤ M with the tail families.
    Tables(TablesArgs),
    /// Exact statistics against their limiting predictions, one row per (Q, parameter).
    Converge(ConvergeArgs),
    /// Orbit of a point under the Farey triangle map (κ-sequence dump).
    Orbit(OrbitArgs),
    /// Visible lattice points in a dilated region.
    Visible(VisibleArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Identities(_) => "identities",
            Command::Constants(_) => "constants",
            Command::Tables(_) => "tables",
            Command::Converge(_) => "converge",
            Command::Orbit(_) => "orbit",
            Command::Visible(_) => "visible",
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct IdentitiesArgs {
    /// Largest order checked.
    #[arg(long = "q", value_parser = clap::value_parser!(u64).range(1..))]
    pub q_max: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct ConstantsArgs {
    /// Step counts h for A(h).
    #[arg(long, value_delimiter = ',', default_value = "1,2", value_parser = clap::value_parser!(u64).range(1..))]
    pub h: Vec<u64>,

    /// Exponents α in (0, 2) for B_α; "p/q" accepted.
    #[arg(long, value_delimiter = ',', default_value = "1/2,1,3/2")]
    pub alpha: Vec<Real>,

    /// Frequencies l_k, u_k are listed for k ≤ this.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,

    /// Target accuracy for B_α.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Debug, Args, Serialize)]
pub struct TablesArgs {
    /// Number of steps.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub h: u64,

    /// Block size M of the table.
    #[arg(long = "M", value_parser = clap::value_parser!(u64).range(2..))]
    pub size: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stat {
    /// S_{h,t}(Q) against t A(h) N(Q).
    #[value(name = "S_h", alias = "s-h")]
    SH,
    /// Σ ν^α against 2 N(Q) B_α.
    Moment,
    /// L(Q,k,t), U(Q,k,t) against t l_k N(Q), t u_k N(Q).
    #[value(name = "LU", alias = "lu")]
    Lu,
    /// Σ_{γ ≤ t} ν against 3 N(Q) t.
    Partial,
    /// Σ ν² against its Q² log Q asymptotic.
    SecondMoment,
}

#[derive(Debug, Args, Serialize)]
pub struct ConvergeArgs {
    /// Statistic to tabulate.
    #[arg(value_enum)]
    pub stat: Stat,

    /// Orders Q, ascending.
    #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub q_list: Vec<u64>,

    /// Step counts for S_h.
    #[arg(long, value_delimiter = ',', default_value = "1", value_parser = clap::value_parser!(u64).range(1..))]
    pub h: Vec<u64>,

    /// Exponents for the moment statistic.
    #[arg(long, value_delimiter = ',', default_value = "1/2,1,3/2")]
    pub alpha: Vec<Real>,

    /// Indices for L and U.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,5", value_parser = clap::value_parser!(u64).range(1..))]
    pub k: Vec<u64>,

    /// Right endpoints t of the subinterval [0, t].
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub t: Vec<Cut>,

    /// Target accuracy for B_α.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Debug, Args, Serialize)]
pub struct OrbitArgs {
    /// Farey order; the default start is (1/Q, 1), the first consecutive
    /// denominator pair scaled by 1/Q.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub q: u64,

    /// Number of steps (default: one period, N(Q)).
    #[arg(long)]
    pub steps: Option<u64>,

    /// Start x instead of 1/Q.
    #[arg(long)]
    pub x: Option<Exact>,

    /// Start y instead of 1.
    #[arg(long)]
    pub y: Option<Exact>,
}

#[derive(Debug, Args, Serialize)]
pub struct VisibleArgs {
    /// Dilation factor.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub q: u64,

    /// Count in T_k instead of the whole Farey triangle.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..), conflicts_with = "square")]
    pub k: Option<u64>,

    /// Count in the unit square.
    #[arg(long)]
    pub square: bool,
}

/// A real number given as a decimal or as `p/q`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Real(pub f64);

impl FromStr for Real {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains('/') {
            let r: Rational = s.parse().map_err(|e| format!("{e}"))?;
            return Ok(Real(r.to_f64()));
        }
        s.trim()
            .parse::<f64>()
            .map(Real)
            .map_err(|e| format!("{s}: {e}"))
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.0)
    }
}

/// A fraction in `[0, 1]`, written `p/q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cut(pub Fraction);

impl FromStr for Cut {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let f: Fraction = s.parse().map_err(|e| format!("{e}"))?;
        if !f.in_unit_interval() {
            return Err(format!("{f} is not in [0, 1]"));
        }
        Ok(Cut(f))
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Cut {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

/// An exact rational, written `p/q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl FromStr for Exact {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse()
            .map(Exact)
            .map_err(|e: farey_index::geometry::GeometryError| e.to_string())
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_ratio_string())
    }
}
