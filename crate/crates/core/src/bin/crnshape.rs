//! Command-line front end: analyze, enumerate, census, sample, verify.
//!
//! Exit codes: 0 success, 2 parse/usage errors, 3 unsupported analysis or
//! empty PSSV, 1 anything else (including verify failures). Diagnostics go
//! to stderr; with `--json` stdout carries only the JSON document.

use std::fs;
use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crnshape::enumeration::{census, enumerate_networks};
use crnshape::mass_action::{
    factor_common_monomial, reactant_matrix, steady_state_polynomials, stoichiometric_matrix,
    RateAssignment,
};
use crnshape::network::Network;
use crnshape::oracle::{run_verification_suite, sample_variety, OracleConfig};
use crnshape::parse::parse_network;
use crnshape::pssv::{canonical_binomial, pssv_status};
use crnshape::report::{analyze, sample_csv, AnalyzeOptions};
use crnshape::AnalysisError;

#[derive(Parser)]
#[command(
    name = "crnshape",
    version,
    about = "Steady-state variety analysis for small mass-action reaction networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a network file: matrices, polynomials, PSSV status, classes
    Analyze {
        /// Network file (one reaction per line, `->` or `<->`)
        file: PathBuf,
        /// Comma-separated positive rate constants, one per reaction
        #[arg(long, value_name = "K1,K2,...")]
        rates: Option<String>,
        /// Emit the report as JSON on stdout
        #[arg(long)]
        json: bool,
        /// Run the numeric oracle (steady state, variety sample, class fit)
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List all genuine 2-species 2-reaction networks up to isomorphism
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_molecularity: u32,
        /// Number of species (only 2 is supported)
        #[arg(long, default_value_t = 2)]
        species: u32,
    },
    /// Classify every enumerated network and tally the variety classes
    Census {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_molecularity: u32,
        #[arg(long)]
        json: bool,
    },
    /// Write sampled points of the positive steady-state variety as CSV
    Sample {
        file: PathBuf,
        /// Comma-separated positive rate constants (default: all 1)
        #[arg(long, value_name = "K1,K2,...")]
        rates: Option<String>,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        /// Output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the oracle agreement suite over the enumerated networks
    Verify {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        max_molecularity: u32,
        /// Rate draws per network
        #[arg(long, default_value_t = 5)]
        draws: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal()
}

fn bold(text: &str) -> String {
    if color_enabled() {
        format!("\x1b[1m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn verdict(passed: bool) -> String {
    match (passed, color_enabled()) {
        (true, true) => "\x1b[32mPASS\x1b[0m".to_string(),
        (true, false) => "PASS".to_string(),
        (false, true) => "\x1b[31mFAIL\x1b[0m".to_string(),
        (false, false) => "FAIL".to_string(),
    }
}

fn parse_rates(text: &str, expected: usize) -> Result<RateAssignment, String> {
    let values: Result<Vec<f64>, _> = text.split(',').map(|v| v.trim().parse::<f64>()).collect();
    let values = values.map_err(|e| format!("invalid rate list: {e}"))?;
    if values.len() != expected {
        return Err(format!(
            "expected {expected} rate constants, got {}",
            values.len()
        ));
    }
    RateAssignment::new(values).map_err(|e| e.to_string())
}

fn load_network(path: &PathBuf) -> Result<Network, ExitCode> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(ExitCode::from(2));
        }
    };
    match parse_network(&text) {
        Ok(net) => Ok(net),
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            Err(ExitCode::from(2))
        }
    }
}

fn analysis_exit(e: &AnalysisError) -> ExitCode {
    match e {
        AnalysisError::Unsupported(_)
        | AnalysisError::EmptyPssv
        | AnalysisError::NotTwoReactions(_)
        | AnalysisError::NotTwoSpecies(_) => ExitCode::from(3),
        _ => ExitCode::from(1),
    }
}

fn monomial_string(exponents: &[u32], names: &[String]) -> String {
    let parts: Vec<String> = exponents
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(k, &e)| {
            if e == 1 {
                format!("x_{}", names[k])
            } else {
                format!("x_{}^{e}", names[k])
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn run_analyze(
    file: PathBuf,
    rates: Option<String>,
    json: bool,
    verify: bool,
    seed: u64,
) -> ExitCode {
    let net = match load_network(&file) {
        Ok(n) => n,
        Err(code) => return code,
    };
    let rates = match rates {
        Some(text) => match parse_rates(&text, net.reaction_count()) {
            Ok(r) => Some(r),
            Err(msg) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
        },
        None => None,
    };
    let options = AnalyzeOptions {
        rates,
        verify,
        seed,
    };
    let report = match analyze(&net, &options) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return analysis_exit(&e);
        }
    };

    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
        return ExitCode::SUCCESS;
    }

    let names = net.species_names();
    println!("{}", bold("network"));
    for line in &report.network.reactions {
        println!("  {line}");
    }
    println!("  species: {}", names.join(", "));
    println!("  canonical: {}", report.network.canonical);

    println!("{}", bold("stoichiometric matrix N (species x reactions)"));
    for line in stoichiometric_matrix(&net).to_string().lines() {
        println!("  {line}");
    }
    println!("{}", bold("reactant matrix B"));
    for line in reactant_matrix(&net).to_string().lines() {
        println!("  {line}");
    }

    println!("{}", bold("steady-state polynomials"));
    let polys = steady_state_polynomials(&net);
    for p in &polys {
        println!(
            "  f_{} = {}",
            names[p.species_index],
            p.format_with(names)
        );
    }
    let (common, residuals) = factor_common_monomial(&polys, net.species_count());
    if !common.is_zero() {
        println!(
            "  common monomial: {}",
            monomial_string(common.exponents(), names)
        );
        for p in &residuals {
            println!(
                "  residual f_{} = {}",
                names[p.species_index],
                p.format_with(names)
            );
        }
    }

    println!("{}", bold("positive steady-state variety"));
    println!("  status: {}", pssv_status(&net));
    if let Some(b) = canonical_binomial(&net) {
        println!(
            "  relation: {}   (u = {:?}, c = {})",
            b.relation_string(names),
            b.u,
            b.coefficient_string()
        );
    }
    if let Some(c) = &report.classification {
        match c.by_binomial {
            Some(by_binomial) => println!(
                "  class: {} (reactant conditions), {} (binomial)",
                c.class, by_binomial
            ),
            None => println!("  class: {}", c.class),
        }
        match &c.acr {
            Some(acr) => println!("  acr: species {} fixed at {}", acr.species, acr.value),
            None => println!("  acr: none"),
        }
    }

    if let Some(o) = &report.oracle {
        println!("{}", bold("oracle"));
        println!("  rates: {:?}", o.rates);
        match &o.steady_state {
            Some(p) => println!(
                "  steady state: {:?} (residual {:.2e})",
                p,
                o.witness_residual.unwrap_or(0.0)
            ),
            None => println!("  steady state: none found"),
        }
        if let Some(n) = o.samples {
            println!(
                "  variety sample: {n} points, max residual {:.2e}",
                o.max_sample_residual.unwrap_or(0.0)
            );
        }
        if let Some(ok) = o.class_verified {
            println!("  class fit: {}", verdict(ok));
        }
    }
    ExitCode::SUCCESS
}

fn run_enumerate(max_molecularity: u32, species: u32) -> ExitCode {
    if species != 2 {
        eprintln!("error: only --species 2 is supported");
        return ExitCode::from(2);
    }
    let nets = enumerate_networks(max_molecularity);
    for net in &nets {
        println!("{}", net.canonical_key().replace('\n', ", "));
    }
    eprintln!("{} networks", nets.len());
    ExitCode::SUCCESS
}

fn run_census(max_molecularity: u32, json: bool) -> ExitCode {
    let nets = enumerate_networks(max_molecularity);
    let report = match census(&nets) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return analysis_exit(&e);
        }
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("{}", report.table());
    }
    ExitCode::SUCCESS
}

fn run_sample(
    file: PathBuf,
    rates: Option<String>,
    samples: usize,
    out: Option<PathBuf>,
    seed: u64,
) -> ExitCode {
    let net = match load_network(&file) {
        Ok(n) => n,
        Err(code) => return code,
    };
    let rates = match rates {
        Some(text) => match parse_rates(&text, net.reaction_count()) {
            Ok(r) => r,
            Err(msg) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
        },
        None => RateAssignment::ones(net.reaction_count()),
    };
    let cfg = OracleConfig {
        seed,
        samples,
        ..OracleConfig::default()
    };
    let sample = match sample_variety(&net, &rates, &cfg) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return analysis_exit(&e);
        }
    };
    let csv = sample_csv(&sample, net.species_count());
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, csv) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
            eprintln!(
                "{} points written to {}, max residual {:.2e}",
                sample.points.len(),
                path.display(),
                sample.max_residual
            );
        }
        None => {
            print!("{csv}");
            eprintln!(
                "{} points, max residual {:.2e}",
                sample.points.len(),
                sample.max_residual
            );
        }
    }
    ExitCode::SUCCESS
}

fn run_verify(max_molecularity: u32, draws: u64, seed: u64) -> ExitCode {
    let cfg = OracleConfig {
        seed,
        ..OracleConfig::default()
    };
    let checks = run_verification_suite(&cfg, max_molecularity, draws);
    let mut all_passed = true;
    for check in &checks {
        println!("{} {} — {}", verdict(check.passed), check.name, check.detail);
        all_passed &= check.passed;
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            file,
            rates,
            json,
            verify,
            seed,
        } => run_analyze(file, rates, json, verify, seed),
        Command::Enumerate {
            max_molecularity,
            species,
        } => run_enumerate(max_molecularity, species),
        Command::Census {
            max_molecularity,
            json,
        } => run_census(max_molecularity, json),
        Command::Sample {
            file,
            rates,
            samples,
            out,
            seed,
        } => run_sample(file, rates, samples, out, seed),
        Command::Verify {
            max_molecularity,
            draws,
            seed,
        } => run_verify(max_molecularity, draws, seed),
    }
}
