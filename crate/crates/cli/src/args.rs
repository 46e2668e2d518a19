use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use uhlenbeck::quiver::Polarization;
use uhlenbeck::{Partition, Rat};

#[derive(Parser, Debug)]
#[command(name = "uhl", version, about = "Exact computations on Calogero-Moser spaces, quiver representations and IC stalks")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Seed for every randomized step
    #[arg(long, global = true, env = "UHL_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Print the JSON envelope (the default)
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Print tabular results as CSV instead
    #[arg(long, global = true)]
    pub csv: bool,
}

// Parsed once per run, so variant sizes do not matter.
#[allow(clippy::large_enum_variant)]
#[derive(Subcommand, Debug)]
pub enum Command {
    /// The graded algebra and its quadratic dual
    #[command(subcommand)]
    Nc(NcCommand),
    /// Representations of the three-vertex quiver
    #[command(subcommand)]
    Quiver(QuiverCommand),
    /// Calogero-Moser pairs
    #[command(subcommand)]
    Cm(CmCommand),
    /// Triples (Y, Z, v) with [Y,Z] = tau Z^3
    #[command(subcommand)]
    Bvar(BvarCommand),
    /// Intersection cohomology stalks and strata
    #[command(subcommand)]
    Ic(IcCommand),
    /// Write strata, stalk, Betti and fixed-point tables as CSV files
    Report {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

/// `τ` as a rational, or the letter `t` to keep it symbolic.
#[derive(Clone, Debug)]
pub enum TauArg {
    Symbolic,
    Value(Rat),
}

fn parse_tau_arg(s: &str) -> Result<TauArg, String> {
    match s.trim() {
        "t" | "tau" => Ok(TauArg::Symbolic),
        other => other.parse().map(TauArg::Value).map_err(|e| format!("{e}")),
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// Comma-separated rationals.
#[derive(Clone, Debug)]
pub struct RatList(pub Vec<Rat>);

fn parse_rat_list(s: &str) -> Result<RatList, String> {
    parse_rats(s).map(RatList)
}

fn parse_rats(s: &str) -> Result<Vec<Rat>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rat).collect()
}

fn parse_polarization(s: &str) -> Result<Polarization, String> {
    let v = parse_rats(s)?;
    let [a, b, c]: [Rat; 3] = v
        .try_into()
        .map_err(|_| "a polarization has exactly three entries".to_string())?;
    Ok(Polarization([a, b, c]))
}

#[derive(Subcommand, Debug)]
pub enum NcCommand {
    /// Reduce a word in x, y, z to the basis x^a y^b z^c
    NormalForm {
        #[arg(long, value_parser = parse_tau_arg, default_value = "1", allow_hyphen_values = true)]
        tau: TauArg,
        #[arg(long)]
        word: String,
    },
    /// Graded dimensions of the algebra and its dual
    Dims {
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, value_parser = parse_rat, default_value = "1", allow_hyphen_values = true)]
        tau: Rat,
    },
}

#[allow(clippy::large_enum_variant)]
#[derive(Subcommand, Debug)]
pub enum QuiverCommand {
    /// Check the six relations on a representation file
    Check {
        /// Overrides the value stored in the file
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        tau: Option<Rat>,
        #[arg(long)]
        rep: PathBuf,
    },
    /// Stability for a lexicographic pair of polarizations
    Stability {
        #[arg(long, value_parser = parse_polarization, allow_hyphen_values = true)]
        theta0: Polarization,
        #[arg(long, value_parser = parse_polarization, allow_hyphen_values = true)]
        theta1: Option<Polarization>,
        #[arg(long)]
        rep: PathBuf,
        /// Random lines per vertex for representations other than (1,2,1)
        #[arg(long, default_value_t = 4)]
        budget: usize,
    },
    /// Dimension vector of the monad of a sheaf with invariants (r, d, n)
    Alpha {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum CmCommand {
    /// Rank report for a pair file
    Verify {
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        tau: Option<Rat>,
        #[arg(long)]
        pair: PathBuf,
    },
    /// A pair with diagonal X; the spectrum is drawn from the seed when omitted
    Sample {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = parse_rat_list, allow_hyphen_values = true)]
        spectrum: Option<RatList>,
        #[arg(long, value_parser = parse_rat, default_value = "1", allow_hyphen_values = true)]
        tau: Rat,
    },
    /// Torus fixed points, one per partition of n
    FixedPoints {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum BvarCommand {
    /// Check relation, nilpotency and cyclicity of a triple file
    Check {
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        tau: Option<Rat>,
        #[arg(long)]
        triple: PathBuf,
    },
    /// The Jordan triple of size k supported at u
    Jordan {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_rat, default_value = "0", allow_hyphen_values = true)]
        u: Rat,
        #[arg(long, value_parser = parse_rat, default_value = "1", allow_hyphen_values = true)]
        tau: Rat,
    },
    /// Component dimensions for every Jordan type of size k
    Components {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_rat, default_value = "1", allow_hyphen_values = true)]
        tau: Rat,
    },
    /// Dimension of the fiber over k·u for a Jordan type
    Fiber {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_rat, default_value = "0", allow_hyphen_values = true)]
        u: Rat,
        #[arg(long, value_parser = parse_rat, default_value = "1", allow_hyphen_values = true)]
        tau: Rat,
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum IcCommand {
    /// Graded stalk on the stratum (m, lambda)
    Stalk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        lambda: Partition,
    },
    /// Even Betti numbers of the punctual Hilbert scheme
    Betti {
        #[arg(long)]
        n: usize,
    },
    /// Every stratum with its dimension
    Strata {
        #[arg(long)]
        n: usize,
    },
    /// Torus fixed points of the compactification
    FixedPoints {
        #[arg(long)]
        n: usize,
    },
    /// Codimension against fiber bound on every stratum
    Audit {
        #[arg(long)]
        n: usize,
    },
}
