use clap::{Parser, Subcommand};
use std::process::ExitCode;

mod run;

/// Exact computations on higher secant complexes of clique complexes:
/// Betti tables, Stanley-Reisner generators, family classification,
/// theorem verification suites, and small-graph enumeration.
#[derive(Parser)]
#[command(name = "secantx", version, about)]
struct Cli {
    /// Worker threads (default: SECANTX_JOBS or all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graded Betti table of σ_qΔ for each input
    Betti {
        /// input file, or - for stdin
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 1)]
        q: usize,
        /// coefficient field: q (rationals) or f<p>
        #[arg(long, default_value = "q")]
        field: String,
        /// input format
        #[arg(long, default_value = "graph6")]
        format: String,
        /// machine-readable output
        #[arg(long)]
        json: bool,
    },
    /// Print facets and minimal generators of σ_qΔ with family tags
    Secant {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(long, default_value = "graph6")]
        format: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify a graph against the secant families (JSON output)
    Classify {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long, default_value = "graph6")]
        format: String,
    },
    /// Run a theorem verification suite (exit 1 on failures)
    Verify {
        /// suite id, or "all"
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        q_max: Option<usize>,
        #[arg(long)]
        p_max: Option<usize>,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Stream all graphs on n vertices, one graph6 line per isomorphism class
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.or_else(|| {
        std::env::var("SECANTX_JOBS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(j) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    match run::dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(run::exit_code_for(&e))
        }
    }
}
