use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use translab::deciders::{
    check_k_separating, check_k_transitive, find_invertible, rank_extremes_ff, CheckOptions, RankExtremes, Strategy,
    DEFAULT_PRIMES, DEFAULT_SEED,
};
use translab::families::FamilySpec;
use translab::field::FiniteTarget;
use translab::io::{mat_to_json, parse_subspace, AnySubspace};
use translab::report::report_paper;
use translab::{with_subspace, with_subspace_pair, FieldTag, FiniteField, FiniteSubspace, MatrixSubspace};

#[derive(Parser)]
#[command(name = "translab", version, about = "Transitivity and separation of matrix subspaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(clap::Args)]
struct Common {
    /// Comma-separated primes for finite-field certification.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = DEFAULT_PRIMES.to_vec())]
    primes: Vec<u32>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest enumeration size, e.g. `100000000` or `1e8`.
    #[arg(long, global = true, value_parser = parse_budget, default_value = "1e8")]
    budget: u128,
    /// auto, exact, numeric or ff.
    #[arg(long, global = true, default_value = "auto")]
    strategy: Strategy,
}

#[derive(Subcommand)]
enum Command {
    /// Builds a family member and prints it.
    New {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value = "Q")]
        field: FieldTag,
    },
    /// Decides k-transitivity.
    Check {
        input: String,
        #[arg(short)]
        k: usize,
    },
    /// Decides k-separation.
    Sep {
        input: String,
        #[arg(short)]
        k: usize,
    },
    /// Prints the pre-annihilator.
    Preann {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Prints the tensor product of two subspaces.
    Tensor {
        a: String,
        b: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Prints the span of all products `A·B`.
    Prod {
        a: String,
        b: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Least `r` with `span(L^r) = Mat(n)`.
    PowerIndex {
        input: String,
        #[arg(long, default_value_t = 16)]
        max: usize,
    },
    /// Searches for an invertible element.
    Invertible {
        input: String,
        #[arg(long, default_value_t = 200)]
        attempts: usize,
    },
    /// Least nonzero rank and greatest singular rank over a finite field.
    Extremes { input: String },
    /// Runs a built-in report.
    Report {
        kind: ReportKind,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportKind {
    Paper,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn parse_budget(s: &str) -> Result<u128, String> {
    if let Ok(v) = s.parse::<u128>() {
        return Ok(v);
    }
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 && v.fract() == 0.0 => Ok(v as u128),
        _ => Err(format!("invalid budget {s:?}")),
    }
}

/// Reads a subspace file, or builds an inline family spec over Q.
fn load(input: &str) -> anyhow::Result<AnySubspace> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        return parse_subspace(&text, true).with_context(|| format!("parsing {input}"));
    }
    let spec: FamilySpec = input.parse().with_context(|| format!("{input:?} is neither a file nor a family spec"))?;
    Ok(spec.build_any(FieldTag::Rational)?)
}

fn emit(value: &Value, output: Option<&Path>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    write_out(&text, output)
}

fn write_out(text: &str, output: Option<&Path>) -> anyhow::Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn extremes_json<F: FiniteField>(e: &RankExtremes<F>) -> Value {
    let entry = |x: &Option<(usize, translab::Mat<F>)>| match x {
        Some((r, t)) => json!({ "rank": r, "element": mat_to_json(t) }),
        None => Value::Null,
    };
    json!({ "min_nonzero": entry(&e.min_nonzero), "max_singular": entry(&e.max_singular) })
}

fn extremes(s: AnySubspace, opts: &CheckOptions) -> anyhow::Result<Value> {
    let reduce = |v: &dyn Fn(&FiniteTarget) -> translab::Result<FiniteSubspace>| -> anyhow::Result<AnySubspace> {
        let p = *opts.primes.first().context("--primes is empty")?;
        Ok(match v(&FiniteTarget::Prime(p))? {
            FiniteSubspace::Prime(x) => x.into(),
            FiniteSubspace::Quad(x) => x.into(),
        })
    };
    let s = match s {
        AnySubspace::Q(x) => reduce(&|t| x.reduce_to(t))?,
        AnySubspace::Qi(x) => reduce(&|t| x.reduce_to(t))?,
        other => other,
    };
    let field = s.field().to_string();
    let body = match &s {
        AnySubspace::Fp(x) => extremes_json(&rank_extremes_ff(x, opts.budget)?),
        AnySubspace::Fp2(x) => extremes_json(&rank_extremes_ff(x, opts.budget)?),
        _ => unreachable!(),
    };
    Ok(json!({ "field": field, "extremes": body }))
}

fn invertible_json<F: translab::Field>(s: &MatrixSubspace<F>, attempts: usize, seed: u64) -> anyhow::Result<Value> {
    Ok(match find_invertible(s, attempts, seed)? {
        Some(m) => json!({ "found": true, "element": mat_to_json(&m) }),
        None => json!({ "found": false, "element": Value::Null }),
    })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let c = cli.common;
    let opts =
        CheckOptions { strategy: c.strategy, primes: c.primes, budget: c.budget, seed: c.seed, ..Default::default() };
    match cli.command {
        Command::New { spec, output, field } => {
            let spec: FamilySpec = spec.parse()?;
            emit(&spec.build_any(field)?.to_json(), output.as_deref())?;
        }
        Command::Check { input, k } => {
            let v = with_subspace!(load(&input)?, s => check_k_transitive(&s, k, &opts)?.to_json());
            emit(&v, None)?;
        }
        Command::Sep { input, k } => {
            let v = with_subspace!(load(&input)?, s => check_k_separating(&s, k, &opts)?.to_json());
            emit(&v, None)?;
        }
        Command::Preann { input, output } => {
            let v = with_subspace!(load(&input)?, s => AnySubspace::from(s.preannihilator()).to_json());
            emit(&v, output.as_deref())?;
        }
        Command::Tensor { a, b, output } => {
            let v = with_subspace_pair!(load(&a)?, load(&b)?, (x, y) => AnySubspace::from(x.tensor(&y)?).to_json())?;
            emit(&v, output.as_deref())?;
        }
        Command::Prod { a, b, output } => {
            let v =
                with_subspace_pair!(load(&a)?, load(&b)?, (x, y) => AnySubspace::from(x.product_span(&y)?).to_json())?;
            emit(&v, output.as_deref())?;
        }
        Command::PowerIndex { input, max } => {
            let r = with_subspace!(load(&input)?, s => s.power_span_index(max)?);
            emit(&json!({ "index": r, "max": max }), None)?;
        }
        Command::Invertible { input, attempts } => {
            let v = with_subspace!(load(&input)?, s => invertible_json(&s, attempts, opts.seed)?);
            emit(&v, None)?;
        }
        Command::Extremes { input } => emit(&extremes(load(&input)?, &opts)?, None)?,
        Command::Report { kind: ReportKind::Paper, format, output } => {
            let report = report_paper(&opts);
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report.to_json())? + "\n",
                Format::Table => report.to_table(),
            };
            write_out(&text, output.as_deref())?;
            if !report.all_pass() {
                eprintln!("some report rows failed");
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<translab::Error>() {
                Some(translab::Error::BudgetExceeded { .. }) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_accepts_scientific() {
        assert_eq!(parse_budget("1e8"), Ok(100_000_000));
        assert_eq!(parse_budget("42"), Ok(42));
        assert!(parse_budget("1.5").is_err());
        assert!(parse_budget("x").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
