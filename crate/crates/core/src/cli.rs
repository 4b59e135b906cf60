//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on domain errors or failed verification,
//! 2 on usage errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::error::Result;
use crate::moduli::{self, ChernInvariants};
use crate::partition::Partition;
use crate::report::{self, BettiReport, ComponentReport, OutputFormat};
use crate::shift::{shift_closed, shift_oracle, ShiftInput};
use crate::spaces::{betti_sym_component, macdonald_sym, CurveGenus};
use crate::verify::{self, VerifyConfig};
use crate::weights::{ext_weight_families, WeightTriple};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ruled-betti",
    version,
    about = "Exact Betti numbers of moduli of framed rank-two sheaves on a ruled surface over an elliptic curve"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Poincaré polynomial of the moduli space over an l-window
    Betti {
        #[command(flatten)]
        query: ModuliQuery,
        /// Also list every fixed component and its shifted contribution
        #[arg(long)]
        verbose: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Fixed components in an l-window with their shifts
    Components {
        #[command(flatten)]
        query: ModuliQuery,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Shift index d(alpha, beta, l, l')
    ShiftIndex {
        #[command(flatten)]
        point: FixedPoint,
        /// Count negative weights instead of using the closed form
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Betti numbers of Sym^alpha C x Sym^beta C
    Symprod {
        #[arg(long, default_value = "", value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, default_value = "", value_parser = parse_partition)]
        beta: Partition,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Betti numbers of Sym^n C from Macdonald's generating function
    Macdonald {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        genus: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Fiber splitting types with given framing degree, fiber degree and c2
    SplittingTypes {
        #[arg(long = "dege")]
        deg_e: i64,
        #[arg(long = "F", allow_negative_numbers = true)]
        fiber_degree: i64,
        #[arg(long)]
        c2: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Torus weights of the normal space at a fixed point
    Weights {
        #[command(flatten)]
        point: FixedPoint,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check the closed-form shift against weight counting, and the
    /// symmetric-product decomposition against Macdonald's formula
    Verify {
        #[arg(long, default_value_t = 4)]
        max_c2: u64,
        /// Sweep l over [-B, B]
        #[arg(long, default_value_t = 8)]
        l_bound: u32,
        /// Sweep l' over [-B, B]
        #[arg(long, default_value_t = 3)]
        lprime_bound: u32,
        #[arg(long, hide = true)]
        inject_flipped_delta: bool,
    },
}

#[derive(Debug, Args)]
pub struct ModuliQuery {
    /// c1 = -l' sigma
    #[arg(long, allow_negative_numbers = true)]
    pub lprime: i64,
    #[arg(long)]
    pub c2: u64,
    #[arg(long, allow_negative_numbers = true)]
    pub l_min: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub l_max: i64,
}

#[derive(Debug, Args)]
pub struct FixedPoint {
    #[arg(long, default_value = "", value_parser = parse_partition)]
    pub alpha: Partition,
    #[arg(long, default_value = "", value_parser = parse_partition)]
    pub beta: Partition,
    #[arg(long, allow_negative_numbers = true)]
    pub l: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub lprime: i64,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[arg(long, default_value_t = 1)]
    pub w1: i64,
    #[arg(long, default_value_t = 2)]
    pub w2: i64,
    #[arg(long, default_value_t = 10)]
    pub w3: i64,
}

impl WeightArgs {
    fn triple(&self) -> Result<WeightTriple> {
        WeightTriple::new(self.w1, self.w2, self.w3)
    }
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn execute(command: Command, err: &mut dyn Write) -> Result<(String, i32)> {
    let text = match command {
        Command::Betti {
            query,
            verbose,
            format,
        } => {
            let chern = ChernInvariants::new(query.lprime, query.c2);
            let contribs = moduli::contributions(chern, query.l_min, query.l_max)?;
            warn_below_strata(&query, err);
            let total = moduli::total_of(&contribs);
            let report = BettiReport::new(chern, query.l_min, query.l_max, &contribs, total);
            report::render_betti(&report, format, verbose)
        }
        Command::Components { query, format } => {
            let chern = ChernInvariants::new(query.lprime, query.c2);
            let contribs = moduli::contributions(chern, query.l_min, query.l_max)?;
            warn_below_strata(&query, err);
            let rows: Vec<ComponentReport> = contribs.iter().map(ComponentReport::from).collect();
            report::render_components(&rows, format)
        }
        Command::ShiftIndex {
            point,
            oracle,
            weights,
            format,
        } => {
            let w = weights.triple()?;
            let input = ShiftInput::new(point.alpha, point.beta, point.l, point.lprime);
            let d = if oracle {
                shift_oracle(&input, w)
            } else {
                shift_closed(&input)
            };
            report::render_scalar("shift", d, format)
        }
        Command::Symprod {
            alpha,
            beta,
            format,
        } => report::render_graded(&betti_sym_component(&alpha, &beta), format),
        Command::Macdonald { n, genus, format } => {
            report::render_graded(&macdonald_sym(n, CurveGenus(genus))?, format)
        }
        Command::SplittingTypes {
            deg_e,
            fiber_degree,
            c2,
            format,
        } => report::render_splitting_types(
            &moduli::splitting_types(deg_e, fiber_degree, c2)?,
            format,
        ),
        Command::Weights {
            point,
            weights,
            format,
        } => {
            let w = weights.triple()?;
            let ms = ext_weight_families(&point.alpha, &point.beta, point.l, point.lprime, w);
            report::render_weights(&ms, format)
        }
        Command::Verify {
            max_c2,
            l_bound,
            lprime_bound,
            inject_flipped_delta,
        } => {
            let config = VerifyConfig::new(max_c2, i64::from(l_bound), i64::from(lprime_bound));
            let result = if inject_flipped_delta {
                verify::run_with(&config, verify::flipped_delta_shift)?
            } else {
                verify::run(&config)?
            };
            let code = if result.passed() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            };
            return Ok((format!("{result}\n"), code));
        }
    };
    Ok((text, EXIT_OK))
}

fn warn_below_strata(query: &ModuliQuery, err: &mut dyn Write) {
    let bound = moduli::strata_lower_bound(query.lprime);
    if query.l_min < bound {
        let _ = writeln!(
            err,
            "note: window includes l < {bound} = ceil(-l'/2); those components are computed by the formula but not filtered"
        );
    }
}
