use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use spardiff_cli::record::{write_csv, write_json};
use spardiff_cli::{install_capacity, run_bench, run_network, run_stencil, run_verify, BENCH_CAPACITY};

#[derive(Parser)]
#[command(name = "spardiff", version, about = "Sparse forward-mode differentiation drivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derivatives of sin(x^2) at x = (1, 5) against the closed form.
    Verify,
    /// Sparse Jacobian of the second-difference stencil.
    Stencil {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        capacity: usize,
        /// Write `row col value` triplets here instead of stdout.
        #[arg(long)]
        triplets: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Sparse Jacobian of a synthetic reaction network.
    Network {
        #[arg(long)]
        shells: usize,
        #[arg(long)]
        species: usize,
        /// Defaults to the number of species.
        #[arg(long)]
        capacity: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Time sparse against dense Jacobian passes of the stencil.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify => {
            let report = run_verify()?;
            for line in &report.lines {
                println!("{line}");
            }
            Ok(report.passed())
        }
        Command::Stencil {
            n,
            capacity,
            triplets,
            json,
        } => {
            install_capacity(capacity)?;
            let out = run_stencil(n, capacity)?;
            let mut dump = String::new();
            for (r, c, v) in out.triplets.iter() {
                writeln!(dump, "{r} {c} {v:e}")?;
            }
            match triplets {
                Some(path) => std::fs::write(path, dump)?,
                None => print!("{dump}"),
            }
            eprintln!(
                "stencil n={} nz={} ldsize_opt={} ml={} mu={} fd_compared={} fd_mismatches={} wall_time_ns={}",
                out.n, out.nz, out.ldsize_opt, out.ml, out.mu,
                out.fd_entries_compared, out.fd_mismatches, out.record.wall_time_ns
            );
            if let Some(path) = json {
                write_json(&path, &out)?;
            }
            Ok(out.passed())
        }
        Command::Network {
            shells,
            species,
            capacity,
            json,
        } => {
            let capacity = capacity.unwrap_or(species);
            install_capacity(capacity)?;
            let out = run_network(shells, species, capacity)?;
            println!(
                "network shells={} species={} n={} nz={} ldsize_opt={} ml={} mu={} fd_columns={} fd_mismatches={} wall_time_ns={}",
                out.shells, out.species, out.record.n_independent, out.nz, out.ldsize_opt,
                out.ml, out.mu, out.fd_columns, out.fd_mismatches, out.record.wall_time_ns
            );
            if let Some(path) = json {
                write_json(&path, &out)?;
            }
            Ok(out.passed())
        }
        Command::Bench { n, csv, json } => {
            install_capacity(BENCH_CAPACITY)?;
            let cmp = run_bench(n)?;
            for r in cmp.records() {
                println!(
                    "{} n={} capacity={} wall_time_ns={} peak_bytes_estimate={} jacobian_nnz={}",
                    r.case_name, r.n_independent, r.capacity, r.wall_time_ns,
                    r.peak_bytes_estimate, r.jacobian_nnz
                );
            }
            println!("speedup={:.2} memory_ratio={:.6}", cmp.speedup, cmp.memory_ratio);
            if let Some(path) = csv {
                write_csv(&path, &cmp.records())?;
            }
            if let Some(path) = json {
                write_json(&path, &cmp)?;
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("check failed");
            ExitCode::FAILURE
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
