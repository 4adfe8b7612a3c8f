//! `equichar`: exact S_n-equivariant Euler characteristics of moduli spaces
//! of smooth pointed curves, and the configuration-space machinery behind
//! them. All arithmetic is exact; output is deterministic byte for byte.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation or invariant failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use equichar_cli::commands::{
    cmd_coeffs, cmd_confspace, cmd_mgn, cmd_nfun, cmd_orbchi, CliFailure,
};
use equichar_cli::output::{Basis, Format};
use equichar_cli::selftest::{run_selftest, Flip};

#[derive(Parser)]
#[command(
    name = "equichar",
    version,
    about = "Exact S_n-equivariant Euler characteristics of moduli spaces of curves",
    after_help = "Exit codes: 0 success, 1 usage error, 2 computation/invariant failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    /// Power-sum monomials p_1, p_2, ...
    P,
    /// Integer Schur multiplicities with numeric specializations
    Schur,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlipArg {
    /// Monodromy count with the sign-flipped prime powers (1 - p^(+2h))
    MonodromyExponent,
    /// Quotient genus h = (1 - sum k_j)/2
    QuotientGenus,
    /// chi_orb from the rejected factorial form (2h-1) B_{2h} / (2h-3)!
    ChiOrbFormula,
}

#[derive(Subcommand)]
enum Command {
    /// Series coefficients of sum_n t^n chi^{S_n}(M_{g,n}) for genus g >= 2
    Mgn {
        /// Genus of the curves (>= 2)
        #[arg(long)]
        genus: u64,
        /// Truncation order: emit coefficients of t^0 .. t^N
        #[arg(long, default_value_t = 10)]
        max_points: usize,
        #[arg(long, value_enum, default_value = "p")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Allow truncation orders above the default cap of 30
        #[arg(long)]
        uncapped: bool,
    },
    /// Per-signature coefficient table with exact factor breakdowns
    Coeffs {
        /// Genus of the curves (>= 2)
        #[arg(long)]
        genus: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// N(k; l_1..l_s): residue tuples with prescribed gcd classes, zero sum
    Nfun {
        /// The modulus k
        k: u64,
        /// gcd classes l_1 .. l_s, each dividing k (may be empty)
        classes: Vec<u64>,
        /// Also run the brute-force enumeration and require agreement
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Orbifold Euler characteristic of M_{h,s}
    Orbchi {
        /// Genus h of the curves
        h: u64,
        /// Number of marked points s
        s: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Equivariant configuration series from a JSON description
    /// (group-action fixed-point data or pre-integrated strata)
    Confspace {
        /// Path to the JSON input document
        #[arg(long)]
        input: PathBuf,
        /// Truncation order: emit coefficients of t^0 .. t^N
        #[arg(long, default_value_t = 10)]
        max_points: usize,
        #[arg(long, value_enum, default_value = "p")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Allow truncation orders above the default cap of 30
        #[arg(long)]
        uncapped: bool,
    },
    /// Oracle-equivalence sweeps and the frozen genus-2 regression
    Selftest {
        /// Substitute a rejected formula variant; the self-test must then
        /// fail, demonstrating that the oracles cover the formula
        #[arg(long, value_enum)]
        flip: Option<FlipArg>,
    },
}

impl From<BasisArg> for Basis {
    fn from(value: BasisArg) -> Basis {
        match value {
            BasisArg::P => Basis::P,
            BasisArg::Schur => Basis::Schur,
        }
    }
}

impl From<FormatArg> for Format {
    fn from(value: FormatArg) -> Format {
        match value {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Latex => Format::Latex,
        }
    }
}

impl From<FlipArg> for Flip {
    fn from(value: FlipArg) -> Flip {
        match value {
            FlipArg::MonodromyExponent => Flip::MonodromyExponent,
            FlipArg::QuotientGenus => Flip::QuotientGenus,
            FlipArg::ChiOrbFormula => Flip::ChiOrbFormula,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let result: Result<String, CliFailure> = match cli.command {
        Command::Mgn {
            genus,
            max_points,
            basis,
            format,
            uncapped,
        } => cmd_mgn(genus, max_points, basis.into(), format.into(), uncapped),
        Command::Coeffs { genus, format } => cmd_coeffs(genus, format.into()),
        Command::Nfun {
            k,
            classes,
            verify,
            format,
        } => cmd_nfun(k, classes, verify, format.into()),
        Command::Orbchi { h, s, format } => cmd_orbchi(h, s, format.into()),
        Command::Confspace {
            input,
            max_points,
            basis,
            format,
            uncapped,
        } => cmd_confspace(&input, max_points, basis.into(), format.into(), uncapped),
        Command::Selftest { flip } => {
            let report = run_selftest(flip.map(Flip::from));
            print!("{}", report.render());
            return if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            };
        }
    };

    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.exit_code)
        }
    }
}
