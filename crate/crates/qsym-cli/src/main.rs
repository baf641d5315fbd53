//! `qsym` — quasisymmetric functions, P-partition series, and descent
//! algebras in types A, B, and signed, on the command line.
//!
//! Verbs: `descent`, `expand`, `gamma`, `multiply`, `table`, `verify`,
//! `count`. All output is deterministic for fixed inputs and flags; errors
//! go to the error stream with a nonzero exit status.

use std::fmt::Display;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use qsym_core::combinatorics::{
    Composition, Flavor, PseudoComposition, SignedComposition,
};
use qsym_core::descent_algebra::{compute_structure_constants, ClassIndex, DegreeCaps};
use qsym_core::groups::{Permutation, SignedPermutation};
use qsym_core::ppartition::{
    gamma, gamma_b, gamma_b_permutation, gamma_permutation, gamma_signed, gamma_signed_poset,
    LabeledPoset, TypeBPoset,
};
use qsym_core::qsym::{BasisKind, QSymIndex, QSymVector};
use qsym_core::series::Series;
use qsym_core::verify::{default_suite, slow_suite, Check};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "S", alias = "s")]
    S,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::A => Flavor::A,
            FlavorArg::B => Flavor::B,
            FlavorArg::S => Flavor::S,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    #[value(name = "fundamental", alias = "F")]
    Fundamental,
    #[value(name = "monomial", alias = "M")]
    Monomial,
}

impl From<BasisArg> for BasisKind {
    fn from(b: BasisArg) -> BasisKind {
        match b {
            BasisArg::Fundamental => BasisKind::Fundamental,
            BasisArg::Monomial => BasisKind::Monomial,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "qsym",
    version,
    about = "Quasisymmetric functions, P-partition series, and descent algebras \
             in types A, B, and signed"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the descent index of a window
    Descent {
        #[arg(short = 'f', long, value_enum)]
        flavor: FlavorArg,
        /// Window such as "3,4,5,2,6,1" (signed entries for flavors B and S)
        #[arg(allow_hyphen_values = true)]
        window: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Expand a basis element as an explicit truncated series
    Expand {
        #[arg(short = 'f', long, value_enum)]
        flavor: FlavorArg,
        /// Largest variable index to keep
        #[arg(short = 'N', long)]
        truncation: u32,
        #[arg(long, value_enum, default_value_t = BasisArg::Fundamental)]
        basis: BasisArg,
        /// Index such as "2,1" (flavor A), "0,2,1" (B), or "-1,2,-1" (S)
        #[arg(allow_hyphen_values = true)]
        index: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Generating function of a window's total order or of a poset file
    Gamma {
        #[arg(short = 'f', long, value_enum)]
        flavor: FlavorArg,
        /// Largest variable index to keep
        #[arg(short = 'N', long)]
        truncation: u32,
        /// Window such as "3,4,5,2,6,1" (omit when --poset is given)
        #[arg(conflicts_with = "poset", allow_hyphen_values = true)]
        window: Option<String>,
        /// Poset file: first line the size, then one "i < j" cover per line
        #[arg(long)]
        poset: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Product of two descent classes, decomposed into classes
    Multiply {
        #[arg(short = 'f', long, value_enum)]
        flavor: FlavorArg,
        /// Degree (defaults to the degree of the indices)
        #[arg(short = 'n', long)]
        degree: Option<u32>,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        /// Replace the per-flavor degree caps with this uniform cap
        #[arg(long)]
        cap_override: Option<u32>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Full structure-constant table of a degree
    Table {
        #[arg(short = 'f', long, value_enum)]
        flavor: FlavorArg,
        #[arg(short = 'n', long)]
        degree: u32,
        /// Replace the per-flavor degree caps with this uniform cap
        #[arg(long)]
        cap_override: Option<u32>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Run every identity check and print one pass/fail line each
    Verify {
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Number of indices of a degree
    Count {
        #[arg(short = 'f', long, value_enum)]
        flavor: FlavorArg,
        #[arg(short = 'n', long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Descent { flavor, window, format } => run_descent(flavor, &window, format),
        Command::Expand { flavor, truncation, basis, index, format } => {
            run_expand(flavor, truncation, basis.into(), &index, format)
        }
        Command::Gamma { flavor, truncation, window, poset, format } => {
            run_gamma(flavor, truncation, window.as_deref(), poset.as_deref(), format)
        }
        Command::Multiply { flavor, degree, left, right, cap_override, format } => {
            run_multiply(flavor, degree, &left, &right, caps_from(cap_override), format)
        }
        Command::Table { flavor, degree, cap_override, format } => {
            run_table(flavor, degree, caps_from(cap_override), format)
        }
        Command::Verify { format } => run_verify(format),
        Command::Count { flavor, degree, format } => run_count(flavor, degree, format),
    }
}

fn caps_from(cap_override: Option<u32>) -> DegreeCaps {
    match cap_override {
        Some(cap) => DegreeCaps::uniform(cap),
        None => DegreeCaps::default(),
    }
}

fn reject_csv(format: OutputFormat, verb: &str) -> Result<()> {
    if format == OutputFormat::Csv {
        bail!("csv output is only available for the table verb, not {verb}");
    }
    Ok(())
}

// --- descent ---------------------------------------------------------------

fn run_descent(flavor: FlavorArg, window: &str, format: OutputFormat) -> Result<()> {
    reject_csv(format, "descent")?;
    let index: String = match flavor {
        FlavorArg::A => window.parse::<Permutation>()?.descent_composition().to_string(),
        FlavorArg::B => window.parse::<SignedPermutation>()?.descent_pseudo().to_string(),
        FlavorArg::S => {
            window.parse::<SignedPermutation>()?.signed_descent_composition().to_string()
        }
    };
    match format {
        OutputFormat::Text => println!("{index}"),
        OutputFormat::Json => println!(
            "{}",
            serde_json::json!({
                "flavor": Flavor::from(flavor).letter(),
                "window": window,
                "index": index,
            })
        ),
        OutputFormat::Csv => unreachable!(),
    }
    Ok(())
}

// --- expand ----------------------------------------------------------------

fn expand_index<I: QSymIndex>(
    index: &str,
    basis: BasisKind,
    truncation: u32,
) -> Result<Series> {
    let alpha: I = index.parse()?;
    Ok(QSymVector::unit(alpha, basis)?.expand(truncation)?)
}

fn run_expand(
    flavor: FlavorArg,
    truncation: u32,
    basis: BasisKind,
    index: &str,
    format: OutputFormat,
) -> Result<()> {
    reject_csv(format, "expand")?;
    let series = match flavor {
        FlavorArg::A => expand_index::<Composition>(index, basis, truncation)?,
        FlavorArg::B => expand_index::<PseudoComposition>(index, basis, truncation)?,
        FlavorArg::S => expand_index::<SignedComposition>(index, basis, truncation)?,
    };
    print_series(&series, format);
    Ok(())
}

fn print_series(series: &Series, format: OutputFormat) {
    match format {
        OutputFormat::Text => println!("{series}"),
        OutputFormat::Json => println!("{}", series.to_json()),
        OutputFormat::Csv => unreachable!(),
    }
}

// --- gamma -----------------------------------------------------------------

fn run_gamma(
    flavor: FlavorArg,
    truncation: u32,
    window: Option<&str>,
    poset: Option<&std::path::Path>,
    format: OutputFormat,
) -> Result<()> {
    reject_csv(format, "gamma")?;
    let series = match (window, poset) {
        (Some(window), None) => match flavor {
            FlavorArg::A => gamma_permutation(&window.parse::<Permutation>()?, truncation)?,
            FlavorArg::B => gamma_b_permutation(&window.parse::<SignedPermutation>()?, truncation)?,
            FlavorArg::S => gamma_signed(&window.parse::<SignedPermutation>()?, truncation)?,
        },
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read poset file {}", path.display()))?;
            match flavor {
                FlavorArg::A => gamma(&LabeledPoset::parse_text(&text)?, truncation)?,
                FlavorArg::B => gamma_b(&TypeBPoset::parse_text(&text)?, truncation)?,
                FlavorArg::S => gamma_signed_poset(&TypeBPoset::parse_text(&text)?, truncation)?,
            }
        }
        (None, None) => bail!("gamma needs either a window argument or --poset <FILE>"),
        (Some(_), Some(_)) => unreachable!("clap rejects window together with --poset"),
    };
    print_series(&series, format);
    Ok(())
}

// --- multiply --------------------------------------------------------------

fn decompose_product<C: ClassIndex>(
    left: &str,
    right: &str,
    degree: Option<u32>,
    caps: &DegreeCaps,
) -> Result<(u32, Vec<(C, i64)>)> {
    let alpha: C = left.parse()?;
    let beta: C = right.parse()?;
    if alpha.degree() != beta.degree() {
        bail!(
            "indices have different degrees: {} has degree {}, {} has degree {}",
            alpha,
            alpha.degree(),
            beta,
            beta.degree()
        );
    }
    if let Some(n) = degree {
        if n != alpha.degree() {
            bail!("--degree {n} does not match the index degree {}", alpha.degree());
        }
    }
    let table = compute_structure_constants::<C>(alpha.degree(), caps)?;
    Ok((alpha.degree(), table.row(&alpha, &beta)?))
}

fn print_decomposition<C: Display>(
    flavor: Flavor,
    degree: u32,
    left: &str,
    right: &str,
    terms: &[(C, i64)],
    format: OutputFormat,
) {
    match format {
        OutputFormat::Text => {
            let rendered: Vec<String> =
                terms.iter().map(|(gamma, count)| format!("{count}*({gamma})")).collect();
            println!("{}", rendered.join(" + "));
        }
        OutputFormat::Json => {
            let json_terms: Vec<serde_json::Value> = terms
                .iter()
                .map(|(gamma, count)| {
                    serde_json::json!({ "index": gamma.to_string(), "count": count })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "flavor": flavor.letter(),
                    "degree": degree,
                    "left": left,
                    "right": right,
                    "terms": json_terms,
                })
            );
        }
        OutputFormat::Csv => unreachable!(),
    }
}

fn run_multiply(
    flavor: FlavorArg,
    degree: Option<u32>,
    left: &str,
    right: &str,
    caps: DegreeCaps,
    format: OutputFormat,
) -> Result<()> {
    reject_csv(format, "multiply")?;
    match flavor {
        FlavorArg::A => {
            let (n, terms) = decompose_product::<Composition>(left, right, degree, &caps)?;
            print_decomposition(Flavor::A, n, left, right, &terms, format);
        }
        FlavorArg::B => {
            let (n, terms) = decompose_product::<PseudoComposition>(left, right, degree, &caps)?;
            print_decomposition(Flavor::B, n, left, right, &terms, format);
        }
        FlavorArg::S => {
            let (n, terms) = decompose_product::<SignedComposition>(left, right, degree, &caps)?;
            print_decomposition(Flavor::S, n, left, right, &terms, format);
        }
    }
    Ok(())
}

// --- table -----------------------------------------------------------------

fn print_table<C: ClassIndex>(degree: u32, caps: &DegreeCaps, format: OutputFormat) -> Result<()> {
    let table = compute_structure_constants::<C>(degree, caps)?;
    match format {
        OutputFormat::Csv => print!("{}", table.to_csv()?),
        OutputFormat::Json => println!("{}", table.to_json()?),
        OutputFormat::Text => {
            let order = C::enumerate(degree)?;
            for alpha in &order {
                for beta in &order {
                    let rendered: Vec<String> = table
                        .row(alpha, beta)?
                        .into_iter()
                        .map(|(gamma, count)| format!("{count}*({gamma})"))
                        .collect();
                    println!("u({alpha}) * u({beta}) = {}", rendered.join(" + "));
                }
            }
        }
    }
    Ok(())
}

fn run_table(flavor: FlavorArg, degree: u32, caps: DegreeCaps, format: OutputFormat) -> Result<()> {
    match flavor {
        FlavorArg::A => print_table::<Composition>(degree, &caps, format),
        FlavorArg::B => print_table::<PseudoComposition>(degree, &caps, format),
        FlavorArg::S => print_table::<SignedComposition>(degree, &caps, format),
    }
}

// --- verify ----------------------------------------------------------------

fn run_verify(format: OutputFormat) -> Result<()> {
    reject_csv(format, "verify")?;
    let mut checks: Vec<Check> = default_suite()?;
    checks.extend(slow_suite()?);
    let failed = checks.iter().filter(|c| !c.passed).count();
    match format {
        OutputFormat::Text => {
            for check in &checks {
                let status = if check.passed { "PASS" } else { "FAIL" };
                println!("{status} {}: {}", check.name, check.detail);
            }
            if failed == 0 {
                println!("all {} checks passed", checks.len());
            } else {
                println!("{failed} of {} checks failed", checks.len());
            }
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = checks
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "name": c.name,
                        "passed": c.passed,
                        "detail": c.detail,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
        OutputFormat::Csv => unreachable!(),
    }
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}

// --- count -----------------------------------------------------------------

fn index_count(flavor: Flavor, degree: u32) -> Result<u128> {
    if degree == 0 {
        bail!("degree must be at least 1");
    }
    let count = match flavor {
        Flavor::A => 1u128.checked_shl(degree - 1),
        Flavor::B => 1u128.checked_shl(degree),
        Flavor::S => 3u128.checked_pow(degree - 1).and_then(|p| p.checked_mul(2)),
    };
    count.with_context(|| format!("degree {degree} is too large to count"))
}

fn run_count(flavor: FlavorArg, degree: u32, format: OutputFormat) -> Result<()> {
    reject_csv(format, "count")?;
    let flavor = Flavor::from(flavor);
    let count = index_count(flavor, degree)?;
    match format {
        OutputFormat::Text => println!("{count}"),
        OutputFormat::Json => println!(
            "{}",
            serde_json::json!({
                "flavor": flavor.letter(),
                "degree": degree,
                "count": count.to_string(),
            })
        ),
        OutputFormat::Csv => unreachable!(),
    }
    Ok(())
}
