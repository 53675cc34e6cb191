use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lambda_lab_cli::commands::{self, CliError};
use lambda_lab_cli::fixture::Fixture;
use lambda_lab_cli::session::Session;
use lambda_lab_cli::{api, verify};

#[derive(Parser)]
#[command(name = "lamlab", version, about = "Λ-cluster algebra laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a fixture quiver (`uf`, `linear:4`, `dynkin:A3:0,1,2`, `interval:A3:1,2,3,2,1,2:-2:6`).
    Build {
        #[arg(long)]
        fixture: Fixture,
        #[command(flatten)]
        out: Outputs,
    },
    /// Mutate a quiver along a vertex sequence.
    Mutate {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        at: String,
        #[command(flatten)]
        out: Outputs,
    },
    /// Print B̂, det B̂, B̃, Λ and d.
    Pair {
        #[arg(long)]
        quiver: String,
    },
    /// Λ-seed operations.
    Seed {
        #[command(subcommand)]
        op: SeedOp,
    },
    /// Green sequence runs.
    Green {
        #[command(subcommand)]
        op: GreenOp,
    },
    /// Interval quivers with potential.
    Interval {
        #[command(subcommand)]
        op: IntervalOp,
    },
    /// Graded Ext dimensions between vertex projectives of a regular window.
    Ext {
        #[command(flatten)]
        window: Window,
        /// `all` or `s:t,s:t,…`.
        #[arg(long, default_value = "all")]
        pairs: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Homological Λ against the matrix formula, with the entries that differ.
    LambdaMatrix {
        #[command(flatten)]
        window: Window,
    },
    /// DOT dump of the knitted Auslander–Reiten quiver of kQ_ξ.
    Ar {
        #[arg(long = "type")]
        dynkin: String,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Run the named identities of a scope (`A1`, `A2-adapted`, `A3-adapted`, `all`).
    Verify {
        #[arg(long, default_value = "A1")]
        scope: String,
    },
    /// Serve the HTTP JSON API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "uf")]
        fixture: Fixture,
    },
}

#[derive(Subcommand)]
enum SeedOp {
    /// Mutate the initial seed and print cluster variables with g-vectors and F-polynomials.
    Mutate {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        at: String,
    },
}

#[derive(Subcommand)]
enum GreenOp {
    /// Per-step colours and the final permutation.
    Run {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        seq: String,
    },
}

#[derive(Subcommand)]
enum IntervalOp {
    Build {
        #[command(flatten)]
        window: Window,
        #[command(flatten)]
        out: Outputs,
    },
}

#[derive(Args)]
struct Window {
    #[arg(long = "type")]
    dynkin: String,
    #[arg(long, value_delimiter = ',')]
    word: Vec<u32>,
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
}

#[derive(Args)]
struct Outputs {
    /// Write JSON here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

fn write(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn emit(out: &Outputs, json: &str, dot: &str) -> Result<(), CliError> {
    match &out.out {
        Some(p) => write(p, json)?,
        None => println!("{json}"),
    }
    if let Some(p) = &out.dot {
        write(p, dot)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Build { fixture, out } => {
            let q = fixture.build()?.quiver;
            emit(&out, &q.to_json(), &q.to_dot())?;
        }
        Command::Mutate { quiver, at, out } => {
            let q = commands::mutate(&commands::load_quiver(&quiver)?, &commands::parse_vertices(&at)?)?;
            emit(&out, &q.to_json(), &q.to_dot())?;
        }
        Command::Pair { quiver } => println!("{}", commands::pair(&commands::load_quiver(&quiver)?)?),
        Command::Seed { op: SeedOp::Mutate { quiver, at } } => {
            let q = commands::load_quiver(&quiver)?;
            println!("{}", commands::seed_mutate(&q, &commands::parse_vertices(&at)?)?);
        }
        Command::Green { op: GreenOp::Run { quiver, seq } } => {
            let q = commands::load_quiver(&quiver)?;
            println!("{}", commands::green(&q, &commands::parse_vertices(&seq)?)?);
        }
        Command::Interval { op: IntervalOp::Build { window: w, out } } => {
            let o = commands::interval(&w.dynkin, &w.word, w.a, w.b)?;
            println!("{}", o.summary);
            if let Some(p) = &out.out {
                write(p, &o.json)?;
            }
            if let Some(p) = &out.dot {
                write(p, &o.dot)?;
            }
        }
        Command::Ext { window: w, pairs, out } => {
            let pairs = commands::parse_pairs(&pairs, w.a, w.b)?;
            let text = commands::ext(&w.dynkin, &w.word, w.a, w.b, &pairs)?;
            match out {
                Some(p) => write(&p, &text)?,
                None => println!("{text}"),
            }
        }
        Command::LambdaMatrix { window: w } => {
            let (text, equal) = commands::lambda_matrix(&w.dynkin, &w.word, w.a, w.b)?;
            println!("{text}");
            return Ok(equal);
        }
        Command::Ar { dynkin, xi } => {
            let xi: Vec<i64> = xi
                .split(',')
                .map(|x| x.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::BadVertices(xi.clone()))?;
            print!("{}", commands::ar_dot(&dynkin, &xi)?);
        }
        Command::Verify { scope } => {
            let report = verify::verify_suite(&scope);
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            return Ok(report.all_passed());
        }
        Command::Serve { port, fixture } => {
            let session = Session::new(fixture).map_err(|e| CliError::BadVertices(e.to_string()))?;
            let rt = tokio::runtime::Runtime::new().map_err(|e| CliError::Io("runtime".into(), e))?;
            rt.block_on(async move {
                let listener = tokio::net::TcpListener::bind(("127.0.0.1", port))
                    .await
                    .map_err(|e| CliError::Io(format!("port {port}"), e))?;
                eprintln!("listening on http://127.0.0.1:{port}");
                axum::serve(listener, api::router(session)).await.map_err(|e| CliError::Io("server".into(), e))
            })?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
