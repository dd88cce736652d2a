use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use homfly::input::BraidSpec;
use homfly::invariant::{
    check_transposition_symmetry_with_limit, homflypt_with_limit, specialize_invariant,
    unknot_value,
};
use homfly::perm::Partition;
use homfly::ring::RatFun;
use homfly::trace::trace;
use homfly::web::relation_suite;
use homfly::{clasp, Error};

/// Exact colored HOMFLY-PT polynomials of braid closures.
///
/// Braids are read from JSON files of the form
/// {"strands": K, "word": [i1, i2, ...], "colors": [[3,1], ...]}
/// where positive i is the positive crossing between strands i and i+1 and
/// each strand carries a Young diagram as a weakly decreasing list.
#[derive(Parser)]
#[command(name = "homfly", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the framed colored HOMFLY-PT polynomial of a braid closure.
    Invariant {
        /// JSON braid specification file.
        spec: PathBuf,
        /// Specialize a = q^(N-M): pass N or N M.
        #[arg(long, num_args = 1..=2, value_names = ["N", "M"])]
        specialize: Option<Vec<i64>>,
        /// Divide by the product of unknot values of each component's color
        /// (one factor per closure component).
        #[arg(long)]
        normalize_unknot: bool,
        #[arg(long, value_enum, default_value = "plain")]
        output: OutputFormat,
        /// Largest allowed total cable width.
        #[arg(long, default_value_t = homfly::DEFAULT_MAX_CABLE)]
        max_cable: usize,
    },
    /// Compute the gl(N|M) specialization directly (alias for
    /// `invariant --specialize`).
    Specialize {
        spec: PathBuf,
        n: i64,
        m: Option<i64>,
        #[arg(long, value_enum, default_value = "plain")]
        output: OutputFormat,
        #[arg(long, default_value_t = homfly::DEFAULT_MAX_CABLE)]
        max_cable: usize,
    },
    /// Check the transposition symmetry P^(a,q)(L(colors)) against
    /// P^(a,q^-1)(L(transposed colors)).
    CheckSymmetry {
        spec: PathBuf,
        #[arg(long, default_value_t = homfly::DEFAULT_MAX_CABLE)]
        max_cable: usize,
    },
    /// Run the diagrammatic relation suite and print a pass/fail table.
    VerifyRelations {
        #[arg(long, default_value_t = 3)]
        max_label: usize,
        #[arg(long, default_value_t = 6)]
        max_cable: usize,
    },
    /// Print the Gyoja-Aiston idempotent e_q(lambda) and its scalar
    /// a(lambda) for a partition such as `3,1`.
    Idempotent {
        partition: String,
        #[arg(long, value_enum, default_value = "plain")]
        output: OutputFormat,
    },
    /// Print the Markov trace of the Hecke image of a braid word
    /// (colors in the spec are ignored).
    Trace {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "plain")]
        output: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(classify(&err))
        }
    }
}

/// Input problems exit 2, computation failures exit 1.
fn classify(err: &Error) -> u8 {
    match err {
        Error::Parse(_)
        | Error::InvalidPartition(_)
        | Error::InvalidColoring(_)
        | Error::IndexOutOfRange { .. }
        | Error::UnknownRelation(_) => 2,
        _ => 1,
    }
}

fn read_spec(path: &PathBuf) -> Result<BraidSpec, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    BraidSpec::from_json(&text)
}

fn render(value: &RatFun, format: OutputFormat) -> String {
    let plain = value.to_string();
    match format {
        OutputFormat::Plain => plain,
        OutputFormat::Latex => latexify(&plain),
    }
}

/// Brace exponents for LaTeX: `q^-1` becomes `q^{-1}`.
fn latexify(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 8);
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c != '^' {
            out.push(c);
            continue;
        }
        out.push('^');
        out.push('{');
        if chars.peek() == Some(&'-') {
            out.push(chars.next().unwrap());
        }
        while chars.peek().map(|d| d.is_ascii_digit()).unwrap_or(false) {
            out.push(chars.next().unwrap());
        }
        out.push('}');
    }
    out
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Invariant {
            spec,
            specialize,
            normalize_unknot,
            output,
            max_cable,
        } => {
            let braid = read_spec(&spec)?.to_braid()?;
            let mut value = homflypt_with_limit(&braid, max_cable)?;
            if normalize_unknot {
                for cycle in braid.components() {
                    let color = &braid.colors()[cycle[0] - 1];
                    value = value.div_exact(&unknot_value(color, max_cable)?)?;
                }
            }
            if let Some(nm) = specialize {
                let n = nm[0];
                let m = nm.get(1).copied().unwrap_or(0);
                value = specialize_invariant(&value, n, m);
            }
            println!("{}", render(&value, output));
            Ok(ExitCode::SUCCESS)
        }
        Command::Specialize {
            spec,
            n,
            m,
            output,
            max_cable,
        } => {
            let braid = read_spec(&spec)?.to_braid()?;
            let value = specialize_invariant(
                &homflypt_with_limit(&braid, max_cable)?,
                n,
                m.unwrap_or(0),
            );
            println!("{}", render(&value, output));
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckSymmetry { spec, max_cable } => {
            let braid = read_spec(&spec)?.to_braid()?;
            let report = check_transposition_symmetry_with_limit(&braid, max_cable)?;
            let predicted = match report.predicted_sign {
                Some(1) => "+1".to_string(),
                Some(-1) => "-1".to_string(),
                Some(_) => unreachable!(),
                None => "n/a".to_string(),
            };
            println!(
                "holds={} sign={} predicted={}",
                report.holds,
                if report.observed_sign > 0 { "+1" } else { "-1" },
                predicted
            );
            Ok(if report.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::VerifyRelations {
            max_label,
            max_cable,
        } => {
            let cases = relation_suite(max_label, max_cable);
            let mut failed = 0usize;
            for rel in &cases {
                let ok = rel.verify(max_cable.max(homfly::DEFAULT_MAX_CABLE))?;
                println!("{} {}", if ok { "PASS" } else { "FAIL" }, rel.name());
                if !ok {
                    failed += 1;
                }
            }
            println!("{} relations, {} failed", cases.len(), failed);
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Idempotent { partition, output } => {
            let lambda = Partition::from_str(&partition)?;
            let (e, a) = clasp::young_idempotent(&lambda)?;
            println!("e_q({lambda}) = {e}");
            match output {
                OutputFormat::Plain => println!("a({lambda}) = {a}"),
                OutputFormat::Latex => println!("a({lambda}) = {}", latexify(&a.to_string())),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Trace { spec, output } => {
            let parsed = read_spec(&spec)?;
            let image = homfly::hecke::braid_to_hecke(&parsed.word, parsed.strands)?;
            let value = trace(&image)?;
            println!("{}", render(&value, output));
            Ok(ExitCode::SUCCESS)
        }
    }
}
