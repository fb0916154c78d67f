use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use triarray::error::Error;
use triarray::export::{build_table, oeis_rows, Format, Structure, TableRequest};
use triarray::verify::{self, Bounds, Suite};

/// Exact tables and identity checks for the triangular arrays A, B, phi and F.
#[derive(Parser)]
#[command(name = "triarray", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table: A, B, phi, phiT or F.
    Table {
        structure: Structure,
        #[arg(long)]
        s: Option<i64>,
        #[arg(long)]
        rmax: Option<u32>,
        #[arg(long)]
        nmax: Option<u32>,
        /// Layer of F.
        #[arg(long)]
        n: Option<u32>,
        /// Single lambda row of F.
        #[arg(long)]
        lam: Option<u32>,
        #[arg(long)]
        symbolic: bool,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Run a verification suite and report each identity.
    Verify {
        suite: Suite,
        #[arg(long)]
        smax: Option<u32>,
        #[arg(long)]
        rmax: Option<u32>,
        #[arg(long)]
        nmax: Option<u32>,
        /// Truncation order of F(x, y, z).
        #[arg(long = "K")]
        k: Option<u32>,
        #[arg(long, conflicts_with_all = ["smax", "rmax", "nmax", "k"])]
        default_bounds: bool,
    },
    /// Coefficient rows of A(s, r, 0) for even r.
    OeisRows {
        #[arg(long)]
        rmax: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match cli.command {
        Command::Table { structure, s, rmax, nmax, n, lam, symbolic, format } => {
            let req = TableRequest { s, r_max: rmax, n_max: nmax, n, lam, symbolic };
            match build_table(structure, &req) {
                Ok(table) => {
                    out = table.render(format);
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
        Command::Verify { suite, smax, rmax, nmax, k, default_bounds: _ } => {
            let d = Bounds::default();
            let bounds = Bounds {
                s_max: smax.unwrap_or(d.s_max),
                r_max: rmax.unwrap_or(d.r_max),
                n_max: nmax.unwrap_or(d.n_max),
                order: k.unwrap_or(d.order),
            };
            let report = verify::run(suite, &bounds);
            out = report.render();
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::OeisRows { rmax } => {
            if rmax < 2 {
                usage(Error::Domain("--rmax must be at least 2".into()))
            } else {
                for row in oeis_rows(rmax) {
                    out.push_str(&row);
                    out.push('\n');
                }
                ExitCode::SUCCESS
            }
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(1);
    }
    code
}

fn usage(e: Error) -> ExitCode {
    eprintln!("triarray: {e}");
    ExitCode::from(2)
}
