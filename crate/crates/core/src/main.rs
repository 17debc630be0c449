use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use metacyclic::applications::{
    dihedral_partner_exists, involution_lifts_dihedrally, irreducible_lift_check, polygon_word,
    sphere_quotient_lift_check,
};
use metacyclic::enumerate::{
    enumerate_classes, golden_diff, hurwitz_bound, presentations, reproduce_table, rows_to_csv,
    TableRow,
};
use metacyclic::oracle::{budget_from_env, cross_validate};
use metacyclic::{derive_factors, CyclicDataSet, Error, GroupParams, MetacyclicDataSet};

// Writes to stdout, ignoring a closed pipe.
macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

/// Finite split metacyclic actions on closed orientable surfaces.
#[derive(Parser)]
#[command(name = "metacyclic", version)]
struct Cli {
    /// Print data sets with `·` and `⋊` instead of ASCII.
    #[arg(long, global = true)]
    unicode: bool,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a data set against the definition; exit 0 valid, 1 invalid, 2 unparsable.
    Validate { dataset: String },
    /// Print the data sets `[D_G;D_F]` of the two cyclic factors.
    Derive { dataset: String },
    /// List all classes of a genus, optionally for one group.
    Enumerate {
        #[arg(long)]
        genus: u64,
        #[arg(long, requires_all = ["n", "k"])]
        m: Option<u64>,
        #[arg(long, requires_all = ["m", "k"])]
        n: Option<u64>,
        #[arg(long, requires_all = ["m", "n"], allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::PaperText)]
        format: Format,
    },
    /// Print the classification table of a genus.
    Table {
        #[arg(long)]
        genus: u64,
        /// Compare with the bundled reference table; exit 1 on any difference.
        #[arg(long)]
        diff_golden: bool,
    },
    /// Compare the validator with a brute-force epimorphism search.
    Oracle {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        max_order: u64,
    },
    /// Applications of the classification.
    Check {
        #[command(subcommand)]
        check: Check,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Dihedral partner of a cyclic data set.
    Dihedral { cyclic: String },
    /// Whether a metacyclic data set is quaternionic.
    Quaternionic { dataset: String },
    /// Lifts of an automorphism of a three-pointed sphere quotient.
    LiftIrreducible { cyclic: String },
    /// Lift of an action with sphere quotient through an `n`-sheeted cover.
    LiftSphere {
        cyclic: String,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Dihedral lift of an involution through an `n`-sheeted cover.
    LiftInvolution {
        cyclic: String,
        #[arg(long)]
        n: u64,
    },
    /// Polygon and side pairing of an irreducible Type 1 action.
    Polygon { cyclic: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    PaperText,
}

/// Failure carrying a process exit code.
struct Failure {
    code: u8,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        let code = if matches!(error, Error::Parse { .. }) {
            2
        } else {
            1
        };
        Failure { code, error }
    }
}

fn print_json<T: Serialize>(value: &T) {
    outln!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn residue(k: i64, n: u64) -> u64 {
    k.rem_euclid(n as i64) as u64
}

fn table_row(r: &TableRow) -> String {
    format!("{} | {} | {}", r.group, r.dataset, r.factors)
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let unicode = cli.unicode;
    match cli.command {
        Command::Validate { dataset } => {
            let d: MetacyclicDataSet = dataset.parse()?;
            let report = d.validate();
            print_json(&report);
            Ok(if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Derive { dataset } => {
            let d: MetacyclicDataSet = dataset.parse()?;
            let factors = derive_factors(&d)?;
            outln!("{factors}");
            print_json(&factors);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            genus,
            m,
            n,
            k,
            format,
        } => {
            if genus < 2 {
                return Err(Error::Precondition("genus must be at least 2".into()).into());
            }
            let rows = match (m, n, k) {
                (Some(m), Some(n), Some(k)) => {
                    let p = GroupParams::new(m, n, residue(k, n))?;
                    enumerate_classes(genus, &p, None)
                        .iter()
                        .map(|c| TableRow::from_class(genus, c, unicode))
                        .collect::<Result<Vec<_>, _>>()?
                }
                _ => reproduce_table(genus, unicode)?,
            };
            match format {
                Format::Csv => out!("{}", rows_to_csv(&rows)?),
                Format::Json => print_json(&rows),
                Format::PaperText => {
                    for r in &rows {
                        let d: MetacyclicDataSet = r.dataset.parse()?;
                        outln!("{} | {} | {}", r.group, d.to_text(unicode, true), r.factors);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { genus, diff_golden } => {
            if genus < 2 {
                return Err(Error::Precondition("genus must be at least 2".into()).into());
            }
            for r in reproduce_table(genus, unicode)? {
                outln!("{}", table_row(&r));
            }
            if diff_golden {
                let diff = golden_diff(genus)?;
                print_json(&diff);
                if !diff.is_empty() {
                    return Ok(ExitCode::from(1));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { genus, max_order } => {
            if genus < 2 {
                return Err(Error::Precondition("genus must be at least 2".into()).into());
            }
            let budget = budget_from_env();
            let mut agree = true;
            for p in presentations(max_order.min(hurwitz_bound(genus))) {
                let report = cross_validate(genus, &p, budget);
                agree &= report.agrees();
                outln!("{}", serde_json::to_string(&report).expect("serializable"));
            }
            Ok(if agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Check { check } => run_check(check),
    }
}

fn run_check(check: Check) -> Result<ExitCode, Failure> {
    match check {
        Check::Dihedral { cyclic } => {
            let d: CyclicDataSet = cyclic.parse()?;
            let witness = dihedral_partner_exists(&d)?;
            let verdict = if witness.is_some() { "witness" } else { "none" };
            print_json(&json!({
                "verdict": verdict,
                "witness": witness.map(|w| w.to_string()),
                "criterion": "inverse-paired",
            }));
        }
        Check::Quaternionic { dataset } => {
            let d: MetacyclicDataSet = dataset.parse()?;
            let report = d.validate();
            let genus = d.genus().ok();
            let quaternionic = report.ok && d.is_quaternionic();
            print_json(&json!({
                "verdict": quaternionic,
                "valid": report.ok,
                "genus": genus,
                "quotient_genus": genus.filter(|_| quaternionic).map(|g| g.div_ceil(2)),
                "criterion": "quaternionic-data-set",
            }));
        }
        Check::LiftIrreducible { cyclic } => {
            let d: CyclicDataSet = cyclic.parse()?;
            let options = irreducible_lift_check(&d)?;
            let options: Vec<_> = options
                .iter()
                .map(|o| {
                    json!({
                        "k": o.k,
                        "m": o.m,
                        "permutation": o.permutation,
                        "witness": o.witness.to_string(),
                    })
                })
                .collect();
            print_json(&json!({
                "verdict": !options.is_empty(),
                "options": options,
                "criterion": "irreducible-lift",
            }));
        }
        Check::LiftSphere { cyclic, n, k } => {
            let d: CyclicDataSet = cyclic.parse()?;
            let result = sphere_quotient_lift_check(&d, n, residue(k, n), budget_from_env())?;
            print_json(&json!({
                "verdict": result.verdict,
                "criterion": result.criterion,
                "coefficients": result.coefficients,
                "witness": result.witness.map(|w| w.to_string()),
            }));
        }
        Check::LiftInvolution { cyclic, n } => {
            let d: CyclicDataSet = cyclic.parse()?;
            let witness = involution_lifts_dihedrally(&d, n)?;
            print_json(&json!({
                "verdict": "witness",
                "witness": witness.to_string(),
                "criterion": "involution-lift",
            }));
        }
        Check::Polygon { cyclic } => {
            let d: CyclicDataSet = cyclic.parse()?;
            let polygon = polygon_word(&d)?;
            print_json(&json!({
                "verdict": polygon.is_fixed_point_free_involution(),
                "polygon": polygon,
                "glued_genus": polygon.glued_genus(),
                "criterion": "type-1-polygon",
            }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn configure_threads(jobs: Option<usize>) -> anyhow::Result<()> {
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .context("configuring the worker pool")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads(cli.jobs) {
        eprintln!("{}", json!({"error": "setup", "message": format!("{e:#}")}));
        return ExitCode::from(1);
    }
    match run(cli) {
        Ok(code) => code,
        Err(Failure { code, error }) => {
            eprintln!(
                "{}",
                json!({"error": error.kind(), "message": error.to_string()})
            );
            ExitCode::from(code)
        }
    }
}
