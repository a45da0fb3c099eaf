use std::path::PathBuf;

use blowup_core::{CurveSpec, Field, MonomialOrder};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "blowup-lab", version, about = "Exact checks of blowup-algebra invariants of monomial curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Leave wall-clock timings out of the report, so output is byte-stable.
    #[arg(long, global = true)]
    pub no_timings: bool,

    /// Coefficient field: QQ or FP:<prime>. Overrides an ideal file's header.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,

    /// Monomial order. Overrides an ideal file's header.
    #[arg(long, global = true, value_enum)]
    pub order: Option<OrderArg>,

    /// Include the Buchberger trace in the report (gb only).
    #[arg(long, global = true)]
    pub trace_gb: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Defining ideal of the projective monomial curve with the given degrees.
    Curve {
        #[arg(long, value_parser = parse_curve)]
        degrees: CurveSpec,
    },
    /// Reduced Gröbner basis.
    Gb(IdealArg),
    /// Hilbert series, dimension and length of R/I.
    Hilbert {
        #[command(flatten)]
        input: IdealArg,
        /// Print Hilbert function values up to this degree.
        #[arg(long, default_value_t = 6)]
        tmax: u32,
    },
    /// Minimal generator counts of I, I^2, ..., I^tmax.
    MuPowers {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, default_value_t = 3)]
        tmax: u32,
        /// Also compare with the fiber-cone Hilbert series.
        #[arg(long)]
        cross_check: bool,
    },
    /// Reduction number of J (the --reduction file) relative to I.
    Reduction {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, value_name = "FILE")]
        reduction: PathBuf,
        #[arg(long, default_value_t = blowup_core::blowup::DEFAULT_REDUCTION_CAP)]
        cap: u32,
    },
    /// Is the generator list, in file order, a d-sequence?
    DSequence(IdealArg),
    /// Fiber cone presentation k[u]/K with g_j -> u_j in file order.
    Fiber(IdealArg),
    /// Analytic spread.
    Spread(IdealArg),
    /// Is I^t saturated with respect to the maximal ideal, t = 1..tmax?
    SaturateCheck {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, default_value_t = 3)]
        tmax: u32,
    },
    /// Run a verification suite for one of the worked examples.
    Verify {
        #[arg(long, value_enum)]
        example: Example,
        /// Family parameter; the examples require a >= 3.
        #[arg(long, default_value_t = 3)]
        a: u32,
        #[arg(long)]
        tmax: Option<u32>,
        /// Restrict the p3 suite to one degree triple.
        #[arg(long, value_parser = parse_curve)]
        degrees: Option<CurveSpec>,
        /// Search bound for reduction numbers.
        #[arg(long, default_value_t = blowup_core::blowup::DEFAULT_REDUCTION_CAP)]
        cap: u32,
    },
}

#[derive(Debug, Args)]
pub struct IdealArg {
    /// Ideal file: a `ring:` header line, then one generator per line.
    #[arg(long, value_name = "FILE")]
    pub ideal: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Example {
    P3,
    Ex1,
    Ex2,
    Ex3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: blowup_core::RingError| e.to_string())
}

fn parse_curve(s: &str) -> Result<CurveSpec, String> {
    s.parse().map_err(|e: blowup_core::Error| e.to_string())
}
