//! Command-line front end for the `qspace` kernel.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qspace::calculus::{d, form_mul};
use qspace::cli::{
    eval_element, eval_form, eval_operator, infer_context, parse, parse_element, parse_form,
    render_outcomes, run_suites, Context, SuiteConfig,
};
use qspace::hopf::{antipode_a, antipode_d, coproduct_a, coproduct_d, counit_a, counit_d};
use qspace::invariants::{mc_basis, mc_form, vf_apply};
use qspace::operators::{apply_partial, apply_sigma};
use qspace::scalar::ScalarJson;
use qspace::{Error, MultiIndex};

#[derive(Parser)]
#[command(
    name = "qspace",
    version,
    about = "Exact computations in the quantum n-space A_q(n) and its quantum groups"
)]
struct Cli {
    /// Number of generators
    #[arg(long, global = true, default_value_t = 3)]
    n: usize,
    /// Degree bound used by the check suites
    #[arg(long, global = true, default_value_t = 4)]
    deg: i64,
    /// Random samples per identity in the check suites
    #[arg(long, global = true, default_value_t = 200)]
    trials: usize,
    /// Seed for the check suites
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraArg {
    /// The quantum space A_q(n)
    Aqn,
    /// The operator algebra D_q(2n)
    Dq,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ContextArg {
    Algebra,
    Operator,
    Form,
}

impl From<ContextArg> for Context {
    fn from(c: ContextArg) -> Self {
        match c {
            ContextArg::Algebra => Context::Algebra,
            ContextArg::Operator => Context::Operator,
            ContextArg::Form => Context::Form,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of an expression
    Normalize {
        expr: String,
        /// Context; inferred from the symbols used when omitted
        #[arg(long, value_enum)]
        context: Option<ContextArg>,
    },
    /// Multiply two expressions
    Mul {
        left: String,
        right: String,
        #[arg(long, value_enum)]
        context: Option<ContextArg>,
    },
    /// Coproduct of an element
    Coproduct {
        expr: String,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Aqn)]
        algebra: AlgebraArg,
    },
    /// Counit of an element
    Counit {
        expr: String,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Aqn)]
        algebra: AlgebraArg,
    },
    /// Antipode of an element
    Antipode {
        expr: String,
        #[arg(long, value_enum, default_value_t = AlgebraArg::Aqn)]
        algebra: AlgebraArg,
    },
    /// Apply the twisted derivation d_i
    Derive { index: usize, expr: String },
    /// Apply the automorphism s_b; `b` is an index i or a vector such as [1,0,-2]
    Sigma {
        #[arg(allow_hyphen_values = true)]
        beta: String,
        expr: String,
    },
    /// Exterior derivative of a form
    D { expr: String },
    /// Wedge product of two forms
    Wedge { left: String, right: String },
    /// Maurer-Cartan form of an element
    Mc { expr: String },
    /// The basis form w_i
    McBasis { index: usize },
    /// Apply the vector field T_i
    Vf { index: usize, expr: String },
    /// Run verification suites
    Check {
        #[arg(required = true)]
        suites: Vec<String>,
    },
}

enum Value {
    Element(qspace::Element),
    Operator(qspace::operators::DqElement),
    Form(qspace::calculus::Form),
}

impl Value {
    fn render(&self, format: Format) -> String {
        match (self, format) {
            (Value::Element(f), Format::Text) => f.to_string(),
            (Value::Operator(u), Format::Text) => u.to_string(),
            (Value::Form(u), Format::Text) => u.to_string(),
            (Value::Element(f), Format::Json) => serde_json::to_string(f).expect("serializable"),
            (Value::Operator(u), Format::Json) => serde_json::to_string(u).expect("serializable"),
            (Value::Form(u), Format::Json) => serde_json::to_string(u).expect("serializable"),
        }
    }
}

fn evaluate(expr: &str, context: Option<ContextArg>, n: usize) -> qspace::Result<Value> {
    let context = match context {
        Some(c) => c.into(),
        None => infer_context(expr)?,
    };
    let ast = parse(expr, context)?;
    Ok(match context {
        Context::Algebra => Value::Element(eval_element(&ast, n)?),
        Context::Operator => Value::Operator(eval_operator(&ast, n)?),
        Context::Form => Value::Form(eval_form(&ast, n)?),
    })
}

fn parse_beta(text: &str, n: usize) -> qspace::Result<MultiIndex> {
    if let Ok(i) = text.trim().parse::<usize>() {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        return Ok(MultiIndex::unit(n, i));
    }
    let beta: MultiIndex = text.parse()?;
    beta.ensure_dim(n)?;
    Ok(beta)
}

fn scalar_output(c: qspace::LaurentScalar, format: Format) -> String {
    match format {
        Format::Text => c.to_string(),
        Format::Json => serde_json::to_string(&ScalarJson { coeff: c }).expect("serializable"),
    }
}

fn run(cli: &Cli) -> qspace::Result<(String, bool)> {
    let (n, format) = (cli.n, cli.format);
    if n == 0 {
        return Err(Error::InvalidDimension);
    }
    let text = match &cli.command {
        Command::Normalize { expr, context } => evaluate(expr, *context, n)?.render(format),
        Command::Mul {
            left,
            right,
            context,
        } => {
            let context = match context {
                Some(c) => Some(*c),
                None => match (infer_context(left)?, infer_context(right)?) {
                    (Context::Form, _) | (_, Context::Form) => Some(ContextArg::Form),
                    (Context::Operator, _) | (_, Context::Operator) => Some(ContextArg::Operator),
                    _ => Some(ContextArg::Algebra),
                },
            };
            let product = match (evaluate(left, context, n)?, evaluate(right, context, n)?) {
                (Value::Element(a), Value::Element(b)) => Value::Element(a.checked_mul(&b)?),
                (Value::Operator(a), Value::Operator(b)) => Value::Operator(a.checked_mul(&b)?),
                (Value::Form(a), Value::Form(b)) => Value::Form(a.checked_wedge(&b)?),
                _ => unreachable!("both sides share one context"),
            };
            product.render(format)
        }
        Command::Coproduct { expr, algebra } => {
            let tensor = match algebra {
                AlgebraArg::Aqn => {
                    let t = coproduct_a(&parse_element(expr, n)?);
                    (t.to_string(), t.to_json())
                }
                AlgebraArg::Dq => {
                    let t = coproduct_d(&qspace::cli::parse_operator(expr, n)?);
                    (t.to_string(), t.to_json())
                }
            };
            match format {
                Format::Text => tensor.0,
                Format::Json => tensor.1.to_string(),
            }
        }
        Command::Counit { expr, algebra } => {
            let c = match algebra {
                AlgebraArg::Aqn => counit_a(&parse_element(expr, n)?),
                AlgebraArg::Dq => counit_d(&qspace::cli::parse_operator(expr, n)?),
            };
            scalar_output(c, format)
        }
        Command::Antipode { expr, algebra } => match algebra {
            AlgebraArg::Aqn => Value::Element(antipode_a(&parse_element(expr, n)?)).render(format),
            AlgebraArg::Dq => {
                Value::Operator(antipode_d(&qspace::cli::parse_operator(expr, n)?)).render(format)
            }
        },
        Command::Derive { index, expr } => {
            Value::Element(apply_partial(*index, &parse_element(expr, n)?)?).render(format)
        }
        Command::Sigma { beta, expr } => {
            let beta = parse_beta(beta, n)?;
            Value::Element(apply_sigma(&beta, &parse_element(expr, n)?)?).render(format)
        }
        Command::D { expr } => Value::Form(d(&parse_form(expr, n)?)).render(format),
        Command::Wedge { left, right } => {
            Value::Form(form_mul(&parse_form(left, n)?, &parse_form(right, n)?)).render(format)
        }
        Command::Mc { expr } => Value::Form(mc_form(&parse_element(expr, n)?)).render(format),
        Command::McBasis { index } => Value::Form(mc_basis(n, *index)?).render(format),
        Command::Vf { index, expr } => {
            Value::Element(vf_apply(*index, &parse_element(expr, n)?)?).render(format)
        }
        Command::Check { suites } => {
            let cfg = SuiteConfig {
                n,
                deg: cli.deg,
                trials: cli.trials,
                seed: cli.seed,
            };
            let outcomes = run_suites(suites, &cfg)?;
            let ok = outcomes.iter().all(|o| o.ok());
            let text = match format {
                Format::Text => render_outcomes(&outcomes).trim_end().to_string(),
                Format::Json => json!({ "ok": ok, "suites": outcomes }).to_string(),
            };
            return Ok((text, ok));
        }
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            println!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::UnknownSuite(_)) {
                eprintln!("available suites: {}, all", qspace::cli::SUITES.join(", "));
            }
            ExitCode::from(2)
        }
    }
}
