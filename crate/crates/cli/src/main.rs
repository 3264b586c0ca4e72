use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use jetforge_cli::{
    fiber_cmd, flatness_cmd, jetify_cmd, smooth_cmd, tangent_cmd, verify_cmd, Output, ProblemFile, EXIT_ERROR,
};

/// Jet schemes, smoothness and non-flatness witnesses at the origin.
///
/// Problem files are line oriented: `field Q` or `field Fp <p>`, `vars x y`,
/// one `gen <polynomial>` per generator, optionally `reduced` and
/// `translate a b` (moves the point (a, b) to the origin). `#` starts a
/// comment. The order of the ideal is taken over the generators as written,
/// so give a generating set that realizes it.
///
/// Exit codes: smooth 0 = smooth, 1 = singular, 2 = inconclusive;
/// flatness and verify 0 = no witness, 1 = not flat (certified);
/// tangent 0 = smooth, 1 = singular; 3 = error.
#[derive(Parser, Debug)]
#[command(name = "jetforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Problem file, or `-` for stdin.
    file: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct Levels {
    /// Lower truncation level m.
    #[arg(short = 'm', long = "m")]
    m: usize,
    /// Upper truncation level m'.
    #[arg(short = 'p', long = "m-prime")]
    m_prime: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the generators F[g][i] of the m-jet ideal.
    Jetify {
        #[command(flatten)]
        common: Common,
        /// Jet order m.
        #[arg(short = 'm', long = "m")]
        m: usize,
        /// Only list levels up to this one (default: all of 0..=m).
        #[arg(long)]
        max_level: Option<usize>,
    },
    /// Jacobian test of X_m at the trivial jet over the origin.
    Smooth {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'm', long = "m", default_value_t = 0)]
        m: usize,
    },
    /// Look for a witness that X_{m'} -> X_m is not flat, and verify it.
    Flatness {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        levels: Levels,
        /// Degree bound of the local-membership check (default: d + 2).
        #[arg(long)]
        verify_bound: Option<u32>,
    },
    /// Fiber of X_{m'} -> X_m over the trivial jet 0_m.
    Fiber {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        levels: Levels,
    },
    /// Tangent space at the origin as the fiber of X_1 -> X.
    Tangent {
        #[command(flatten)]
        common: Common,
    },
    /// Re-check a witness: the constructed one, or `--witness F`.
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        levels: Levels,
        /// Candidate element in the file's variables and x[i][j].
        #[arg(long)]
        witness: Option<String>,
        /// Degree bound of the local-membership check (default: d + 2).
        #[arg(long)]
        verify_bound: Option<u32>,
    },
}

fn read_problem(path: &PathBuf) -> anyhow::Result<ProblemFile> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let name = path.display().to_string();
    ProblemFile::parse(&text).with_context(|| name)
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    let common = match &cli.command {
        Command::Jetify { common, .. }
        | Command::Smooth { common, .. }
        | Command::Flatness { common, .. }
        | Command::Fiber { common, .. }
        | Command::Tangent { common }
        | Command::Verify { common, .. } => common,
    };
    let problem = read_problem(&common.file)?;
    let json = common.json;
    let out = match &cli.command {
        Command::Jetify { m, max_level, .. } => jetify_cmd(&problem, *m, *max_level, json),
        Command::Smooth { m, .. } => smooth_cmd(&problem, *m, json),
        Command::Flatness { levels, verify_bound, .. } => {
            flatness_cmd(&problem, levels.m, levels.m_prime, *verify_bound, json)
        }
        Command::Fiber { levels, .. } => fiber_cmd(&problem, levels.m, levels.m_prime, json),
        Command::Tangent { .. } => tangent_cmd(&problem, json),
        Command::Verify { levels, witness, verify_bound, .. } => {
            verify_cmd(&problem, levels.m, levels.m_prime, witness.as_deref(), *verify_bound, json)
        }
    };
    out.with_context(|| common.file.display().to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
