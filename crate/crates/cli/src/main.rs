//! `jacksov`: compute Jack polynomials, separated polynomials and
//! coefficient tables, or run verification suites.
//!
//! Exit status: 0 success, 1 verification failure or internal error,
//! 2 usage error, 3 degenerate parameter.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use jack_sov::algebra::{default_g_panel, CouplingG};
use jack_sov::json::{to_json, Basis, CoeffTableJson, SymPolyJson, UniPolyJson};
use jack_sov::oracle::jack_oracle;
use jack_sov::separated::{f_lambda_product_form_with, f_lambda_sum_form};
use jack_sov::sov::a1::{jack_a1_elementary, jack_a1_gegenbauer, jack_a1_pmn, jack_a1_standard};
use jack_sov::sov::a2::{jack_a2_with, jack_one_row, jack_rectangular, jack_two_row, Representation};
use jack_sov::sov::coeffs::{amn_table_with, closed_form_table, cmn_by_expansion, Branch, CoeffProblem};
use jack_sov::verify::{run_named, SUITES};
use jack_sov::{Error, Evaluation, Partition, SymPoly};

#[derive(Parser)]
#[command(name = "jacksov", version, about = "Exact Jack polynomials by separation of variables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a Jack polynomial.
    Compute {
        #[arg(long)]
        vars: usize,
        /// Weakly decreasing parts, comma separated; padded with zeros to --vars.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        lambda: Vec<usize>,
        #[arg(long, default_value = "1")]
        g: CouplingG,
        #[arg(long, value_enum)]
        form: Form,
        #[arg(long, value_enum, default_value = "monomial")]
        basis: BasisArg,
        #[arg(long)]
        json: bool,
        /// Fail with exit status 3 instead of continuing in g when a formula is degenerate.
        #[arg(long)]
        strict: bool,
    },
    /// Print the separated polynomial f_λ, coefficients in ascending degree.
    Separated {
        #[arg(long)]
        vars: usize,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        lambda: Vec<usize>,
        #[arg(long, default_value = "1")]
        g: CouplingG,
        #[arg(long, value_enum)]
        form: SeparatedForm,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Print a c- or a-coefficient table as JSON.
    Coeffs {
        #[arg(long)]
        r1: usize,
        #[arg(long)]
        r2: usize,
        #[arg(long, default_value = "1")]
        g: CouplingG,
        #[arg(long, value_enum, default_value = "expansion")]
        formula: Formula,
        #[arg(long)]
        strict: bool,
    },
    /// Run a verification suite and print its report as JSON.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        /// Size bound: largest part, r1, weight or row length, depending on the suite.
        #[arg(long, default_value_t = 4)]
        max_weight: usize,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        g_panel: Option<Vec<CouplingG>>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Standard,
    Pmn,
    Elementary,
    Gegenbauer,
    Repr1,
    Repr2,
    OneRow,
    TwoRow,
    Rectangular,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Monomial,
    Elementary,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeparatedForm {
    Product,
    Sum,
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    F1,
    F2,
    Expansion,
    #[value(name = "a-table")]
    ATable,
}

/// Why a command stopped, mapped onto the exit status.
enum Failure {
    Usage(String),
    Verification,
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Usage(_) => 2,
        Failure::Verification => 1,
        Failure::Library(e) if e.is_degenerate() => 3,
        Failure::Library(Error::EigenvalueCollision { .. }) => 3,
        Failure::Library(
            Error::InvalidPartition(_)
            | Error::VariableCount { .. }
            | Error::InvalidIndex(_)
            | Error::WeightMismatch { .. }
            | Error::NonPositiveCoupling(_)
            | Error::NonIntegerCoupling(_)
            | Error::Parse(_),
        ) => 2,
        Failure::Library(_) => 1,
    }
}

fn partition(parts: &[usize], vars: usize) -> Result<Partition, Failure> {
    let lambda = Partition::new(parts.to_vec())?;
    if lambda.length() > vars {
        return Err(Failure::Usage(format!(
            "partition {lambda} has more than {vars} nonzero parts"
        )));
    }
    Ok(lambda.padded(vars)?)
}

fn require_vars(vars: usize, expected: usize, form: &str) -> Result<(), Failure> {
    if vars != expected {
        return Err(Failure::Usage(format!("form {form} needs --vars {expected}")));
    }
    Ok(())
}

/// Strict evaluation, falling back to continuation in `g` unless `strict`.
fn evaluate<T>(
    strict: bool,
    f: impl Fn(Evaluation) -> jack_sov::Result<T>,
) -> Result<T, Failure> {
    match f(Evaluation::Exact) {
        Err(e) if e.is_degenerate() && !strict => {
            eprintln!("note: {e}");
            eprintln!("note: value obtained by continuation in g");
            Ok(f(Evaluation::Limit)?)
        }
        other => Ok(other?),
    }
}

fn compute(
    vars: usize,
    parts: &[usize],
    g: &CouplingG,
    form: Form,
    strict: bool,
) -> Result<SymPoly, Failure> {
    let lambda = partition(parts, vars)?;
    let poly = match form {
        Form::Standard | Form::Pmn | Form::Elementary | Form::Gegenbauer => {
            require_vars(vars, 2, "standard/pmn/elementary/gegenbauer")?;
            match form {
                Form::Standard => jack_a1_standard(&lambda, g)?,
                Form::Pmn => jack_a1_pmn(&lambda, g)?,
                Form::Elementary => jack_a1_elementary(&lambda, g)?,
                _ => jack_a1_gegenbauer(&lambda, g)?,
            }
        }
        Form::Repr1 | Form::Repr2 => {
            require_vars(vars, 3, "repr1/repr2")?;
            let which = match form {
                Form::Repr1 => Representation::First,
                _ => Representation::Second,
            };
            evaluate(strict, |mode| jack_a2_with(&lambda, g, which, mode))?
        }
        Form::OneRow => {
            if lambda.parts()[1..].iter().any(|&p| p != 0) {
                return Err(Failure::Usage("one-row needs lambda = r,0,...,0".into()));
            }
            jack_one_row(lambda.part(0), vars, g)
        }
        Form::TwoRow => {
            require_vars(vars, 3, "two-row")?;
            if lambda.part(0) != lambda.part(1) || lambda.part(2) != 0 {
                return Err(Failure::Usage("two-row needs lambda = r,r,0".into()));
            }
            jack_two_row(lambda.part(0), g)?
        }
        Form::Rectangular => {
            let r = lambda.part(0);
            let rest = lambda.parts();
            if vars < 2 || rest[..vars - 1].iter().any(|&p| p != r) || rest[vars - 1] != 0 {
                return Err(Failure::Usage("rectangular needs lambda = r,...,r,0".into()));
            }
            jack_rectangular(r, vars, g)?
        }
        Form::Oracle => jack_oracle(&lambda, g, vars)?,
    };
    Ok(poly)
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute {
            vars,
            lambda,
            g,
            form,
            basis,
            json,
            strict,
        } => {
            let poly = compute(vars, &lambda, &g, form, strict)?;
            let basis = match basis {
                BasisArg::Monomial => Basis::Monomial,
                BasisArg::Elementary => Basis::Elementary,
            };
            if json {
                println!("{}", to_json(&SymPolyJson::from_sympoly(&poly, basis)));
            } else if basis == Basis::Monomial {
                println!("{}", poly.display_monomial());
            } else {
                println!("{}", poly.display_elementary());
            }
        }
        Command::Separated {
            vars,
            lambda,
            g,
            form,
            json,
            strict,
        } => {
            let lambda = partition(&lambda, vars)?;
            let f = match form {
                SeparatedForm::Sum => f_lambda_sum_form(&lambda, &g)?,
                SeparatedForm::Product => {
                    evaluate(strict, |mode| f_lambda_product_form_with(&lambda, &g, mode))?
                }
            };
            if json {
                println!("{}", to_json(&UniPolyJson::from_unipoly(&f)));
            } else {
                println!("{f}");
            }
        }
        Command::Coeffs {
            r1,
            r2,
            g,
            formula,
            strict,
        } => {
            let problem = CoeffProblem::new(r1, r2, g.clone())?;
            let table = match formula {
                Formula::Expansion => cmn_by_expansion(&problem.partition(), &g)?,
                Formula::F1 => evaluate(strict, |mode| closed_form_table(&problem, Branch::First, mode))?,
                Formula::F2 => evaluate(strict, |mode| closed_form_table(&problem, Branch::Second, mode))?,
                Formula::ATable => evaluate(strict, |mode| amn_table_with(&problem, mode))?,
            };
            println!("{}", to_json(&CoeffTableJson::from_table(&table)));
        }
        Command::Verify {
            suite,
            max_weight,
            g_panel,
        } => {
            let panel = g_panel.unwrap_or_else(default_g_panel);
            let run = run_named(&suite, max_weight, &panel)?;
            let report = run.report();
            println!("{}", to_json(&report));
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Library(e) => eprintln!("error: {e}"),
                Failure::Verification => eprintln!("verification failed"),
            }
            ExitCode::from(exit_code(&failure))
        }
    }
}
