use clap::{Parser, Subcommand};

use cyclotile::cli::{self, ReportDocument, DEFAULT_BUDGET, PAPER_900};

/// Exact checks for factorizations of Z/mZ and universal spectra of their tiling sets.
///
/// FILE is a JSON problem file, or `@paper-900` for the bundled mod-900 example.
#[derive(Parser)]
#[command(name = "cyclotile", version)]
struct Cli {
    /// Print the machine-readable report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print large sets in full instead of a summary.
    #[arg(long, global = true)]
    full: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that A ⊕ B is the whole group.
    VerifyFactorization {
        file: String,
        #[arg(long, default_value = "A")]
        a: String,
        #[arg(long, default_value = "B")]
        b: String,
    },
    /// Integer zeros of the exponential sum of a set.
    ZeroSet {
        file: String,
        #[arg(long, default_value = "A")]
        set: String,
    },
    /// Universal-spectrum criterion for the tiling set of TILE with spectrum candidate Γ.
    CheckUniversal {
        file: String,
        #[arg(long, default_value = "A")]
        tile: String,
        /// Set name to use as Γ (default: the file's `gamma`).
        #[arg(long)]
        gamma: Option<String>,
        /// Known complement of the tile (default: the other set when there are two).
        #[arg(long)]
        complement: Option<String>,
    },
    /// Spectral-pair criterion for Ω = box + SET with candidate Γ.
    CheckSpectrum {
        file: String,
        #[arg(long, default_value = "B")]
        set: String,
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Certify (A, B) as a counterexample to Tijdeman's conjecture mod m.
    CheckTijdeman { file: String },
    /// List complements B ∋ 0 of a set in lexicographic order.
    EnumerateComplements {
        file: String,
        #[arg(long, default_value = "A")]
        set: String,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Verify the file's quasiperiodic witness and search for one.
    CheckQuasiperiodic {
        file: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// For each zero k of f_SET, look for a complement B with f_B(k) ≠ 0.
    Necessity {
        file: String,
        #[arg(long, default_value = "A")]
        set: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run the full reproduction on the bundled mod-900 data.
    VerifyPaper,
    /// Print the bundled mod-900 problem file.
    PaperData,
}

fn main() {
    let args = Cli::parse();
    let full = args.full;
    let report: ReportDocument = match &args.command {
        Command::VerifyFactorization { file, a, b } => cli::cmd_verify_factorization(file, a, b),
        Command::ZeroSet { file, set } => cli::cmd_zero_set(file, set, full),
        Command::CheckUniversal {
            file,
            tile,
            gamma,
            complement,
        } => cli::cmd_check_universal(file, tile, gamma.as_deref(), complement.as_deref()),
        Command::CheckSpectrum { file, set, gamma } => {
            cli::cmd_check_spectrum(file, set, gamma.as_deref())
        }
        Command::CheckTijdeman { file } => cli::cmd_check_tijdeman(file),
        Command::EnumerateComplements {
            file,
            set,
            limit,
            budget,
        } => cli::cmd_enumerate_complements(file, set, *limit, *budget, full),
        Command::CheckQuasiperiodic { file, budget } => cli::cmd_check_quasiperiodic(file, *budget),
        Command::Necessity { file, set, budget } => cli::cmd_necessity(file, set, *budget, full),
        Command::VerifyPaper => cli::cmd_verify_paper(),
        Command::PaperData => {
            print!("{PAPER_900}");
            return;
        }
    };
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_text());
    }
    std::process::exit(report.exit_code);
}
