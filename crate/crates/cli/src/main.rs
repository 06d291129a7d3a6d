//! `plethyrs`: command-line access to plethysm decompositions, characters,
//! Kostka and Kronecker numbers, and sum-of-squares certificates.
//!
//! Exit codes: 0 success, 2 certificate budget exhausted, 3 invalid input,
//! 4 internal cross-check failure.

mod commands;
mod config;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use plethyrs::{Error, Partition};

use crate::config::{degree_limit_from_env, Config, Format};

pub const EXIT_OK: u8 = 0;
pub const EXIT_EXHAUSTED: u8 = 2;
pub const EXIT_INVALID: u8 = 3;
pub const EXIT_CROSS_CHECK: u8 = 4;

#[derive(Parser)]
#[command(
    name = "plethyrs",
    version,
    about = "Exact plethysm and highest-weight certificate toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Clone, Copy)]
struct Search {
    /// Seed for the random matrix stream.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of matrices to try (the identity counts as the first).
    #[arg(long, default_value_t = 64)]
    budget: usize,
    /// Also materialize σ(w⊗w) and check isotypic membership and ⟨v|ψ⟩ (2nk ≤ 8 only).
    #[arg(long)]
    check_projector: bool,
}

fn partition_arg(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

/// Content vector, kept as one value so clap does not treat it as repeated.
#[derive(Clone)]
struct Content(Vec<usize>);

fn content_arg(s: &str) -> Result<Content, String> {
    plethyrs::partitions::parse_parts(s)
        .map(Content)
        .map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Schur decomposition of Sym^k(Sym^m).
    Plethysm {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'm')]
        m: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Multiplicity of one Weyl module in Sym^k(Sym^m).
    Coefficient {
        #[arg(long, value_parser = partition_arg, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'm')]
        m: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Kostka number (count of semistandard tableaux).
    Kostka {
        #[arg(long, value_parser = partition_arg)]
        shape: Partition,
        /// Content vector; may contain zeros and need not be sorted.
        #[arg(long, value_parser = content_arg)]
        content: Content,
        /// Emit the tableaux themselves as JSON row arrays.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Symmetric-group character value χ^λ(class).
    Character {
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        /// Cycle type of the class.
        #[arg(long, value_parser = partition_arg)]
        class: Partition,
        #[command(flatten)]
        out: Output,
    },
    /// Kronecker coefficient g(λ, μ, ν).
    Kronecker {
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = partition_arg)]
        mu: Partition,
        #[arg(long, value_parser = partition_arg)]
        nu: Partition,
        #[command(flatten)]
        out: Output,
    },
    /// Build and verify a certificate that 2λ occurs in Sym^k(Sym^{2n} C^d).
    Weintraub {
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'd')]
        d: usize,
        #[command(flatten)]
        search: Search,
        #[command(flatten)]
        out: Output,
    },
    /// Certify every case with k ≤ d ≤ dmax, k ≤ kmax, n ≤ nmax.
    Sweep {
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        dmax: usize,
        #[command(flatten)]
        search: Search,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate the Kronecker/plethysm occurrence criterion for the permanent orbit closure.
    #[command(name = "gct-check")]
    GctCheck {
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long = "d")]
        d: usize,
        #[arg(long)]
        ell: usize,
        /// Maximum number of (μ, ν) pairs to examine.
        #[arg(long, default_value_t = usize::MAX)]
        search_limit: usize,
        #[command(flatten)]
        out: Output,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Domain(_) | Error::Resource(_) => EXIT_INVALID,
        Error::Invariant(_) => EXIT_CROSS_CHECK,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let degree_limit = match degree_limit_from_env() {
        Ok(v) => v,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let mut config = Config {
        degree_limit,
        ..Config::default()
    };
    let result = match cli.command {
        Command::Plethysm { k, m, out } => {
            config.format = out.format;
            commands::plethysm(&config, k, m)
        }
        Command::Coefficient { lambda, k, m, out } => {
            config.format = out.format;
            commands::coefficient(&config, &lambda, k, m)
        }
        Command::Kostka {
            shape,
            content,
            list,
            out,
        } => {
            config.format = out.format;
            commands::kostka(&config, &shape, &content.0, list)
        }
        Command::Character { lambda, class, out } => {
            config.format = out.format;
            commands::character(&config, &lambda, class)
        }
        Command::Kronecker {
            lambda,
            mu,
            nu,
            out,
        } => {
            config.format = out.format;
            commands::kronecker(&config, &lambda, &mu, &nu)
        }
        Command::Weintraub {
            lambda,
            k,
            n,
            d,
            search,
            out,
        } => {
            config.format = out.format;
            config.seed = search.seed;
            config.budget = search.budget;
            commands::weintraub(&config, lambda, k, n, d, search.check_projector)
        }
        Command::Sweep {
            kmax,
            nmax,
            dmax,
            search,
            out,
        } => {
            config.format = out.format;
            config.seed = search.seed;
            config.budget = search.budget;
            commands::sweep(&config, kmax, nmax, dmax, search.check_projector)
        }
        Command::GctCheck {
            lambda,
            d,
            ell,
            search_limit,
            out,
        } => {
            config.format = out.format;
            commands::gct_check(&config, lambda, d, ell, search_limit)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
