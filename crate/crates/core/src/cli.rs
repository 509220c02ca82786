//! Expression syntax, evaluation and the named verification suites behind
//! the `qspace` binary.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | juxtaposition | '/\') factor)*
//! factor := '-' factor | atom ('^' int)? | '(' expr ')' ('^' int)?
//! atom   := rational | q | x<i> | dx<i> | d<i> | s<i> | w<i> | T<i>
//! ```
//!
//! Negative exponents are accepted on `q`, `x1` and `s<i>` only.

use std::fmt;

use serde::Serialize;

use crate::bicharacter::{check_bicharacter, check_cocycle, eps_identities_check};
use crate::calculus::{check_bicovariance, check_calculus, form_mul, Form};
use crate::error::{Error, Result};
use crate::hopf::{check_hopf_a, check_hopf_d, module_algebra_check};
use crate::invariants::{
    classical_limit_check, dx_via_omega_check, mc_basis, mc_display_check, omega_relations_check,
    right_invariance_check, vf_coproduct_check, vf_leibniz_check, vf_structure_check,
};
use crate::operators::{
    check_confluence, check_operator_relations, check_twisted_leibniz, weyl_relation_check,
    DqElement,
};
use crate::qspace::{check_algebra, Element};
use crate::report::{all_ok, Report};
use crate::sample::{monomials_in_box, monomials_up_to};
use crate::scalar::{parse_rational, LaurentScalar, Rational};

/// Which algebra an expression is evaluated in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    /// `A_q(n)`
    Algebra,
    /// `D_q(2n)`
    Operator,
    /// Differential forms
    Form,
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Context::Algebra => "algebra",
            Context::Operator => "operator",
            Context::Form => "form",
        })
    }
}

/// Indexed symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Coordinate,
    Differential,
    Partial,
    Sigma,
    Omega,
    Field,
}

impl Symbol {
    fn prefix(self) -> &'static str {
        match self {
            Symbol::Coordinate => "x",
            Symbol::Differential => "dx",
            Symbol::Partial => "d",
            Symbol::Sigma => "s",
            Symbol::Omega => "w",
            Symbol::Field => "T",
        }
    }

    fn allowed_in(self, context: Context) -> bool {
        match context {
            Context::Algebra => self == Symbol::Coordinate,
            Context::Operator => matches!(self, Symbol::Partial | Symbol::Sigma),
            Context::Form => matches!(
                self,
                Symbol::Coordinate | Symbol::Differential | Symbol::Omega
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Scalar(Rational),
    Q,
    Symbol(Symbol, usize),
    Sum(Box<Ast>, Box<Ast>),
    Difference(Box<Ast>, Box<Ast>),
    Negation(Box<Ast>),
    Product(Box<Ast>, Box<Ast>),
    Wedge(Box<Ast>, Box<Ast>),
    Power(Box<Ast>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Number(Rational),
    Q,
    Symbol(Symbol, usize),
    Plus,
    Minus,
    Star,
    Wedge,
    Caret,
    Open,
    Close,
}

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut pos = 0;
    let digits_from = |start: usize| {
        let mut end = start;
        while end < chars.len() && chars[end].is_ascii_digit() {
            end += 1;
        }
        end
    };
    while pos < chars.len() {
        let c = chars[pos];
        let start = pos;
        let single = match c {
            ' ' | '\t' | '\n' => {
                pos += 1;
                continue;
            }
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '*' => Some(Token::Star),
            '^' => Some(Token::Caret),
            '(' => Some(Token::Open),
            ')' => Some(Token::Close),
            'q' => Some(Token::Q),
            _ => None,
        };
        if let Some(token) = single {
            out.push((start, token));
            pos += 1;
            continue;
        }
        if c == '/' {
            if chars.get(pos + 1) == Some(&'\\') {
                out.push((start, Token::Wedge));
                pos += 2;
                continue;
            }
            return Err(parse_error(start, "expected '/\\'"));
        }
        if c.is_ascii_digit() {
            let mut end = digits_from(pos);
            if chars.get(end) == Some(&'/') && chars.get(end + 1).is_some_and(char::is_ascii_digit)
            {
                end = digits_from(end + 1);
            }
            let text: String = chars[pos..end].iter().collect();
            let value = parse_rational(&text)
                .ok_or_else(|| parse_error(start, format!("invalid number '{text}'")))?;
            out.push((start, Token::Number(value)));
            pos = end;
            continue;
        }
        let (symbol, skip) = match (c, chars.get(pos + 1)) {
            ('d', Some('x')) => (Symbol::Differential, 2),
            ('d', _) => (Symbol::Partial, 1),
            ('x', _) => (Symbol::Coordinate, 1),
            ('s', _) => (Symbol::Sigma, 1),
            ('w', _) => (Symbol::Omega, 1),
            ('T', _) => (Symbol::Field, 1),
            _ => return Err(parse_error(start, format!("unexpected character '{c}'"))),
        };
        let end = digits_from(pos + skip);
        if end == pos + skip {
            return Err(parse_error(
                pos + skip,
                format!("expected an index after '{}'", symbol.prefix()),
            ));
        }
        let text: String = chars[pos + skip..end].iter().collect();
        let index = text
            .parse()
            .map_err(|_| parse_error(pos + skip, "index too large"))?;
        if index == 0 {
            return Err(parse_error(pos + skip, "indices start at 1"));
        }
        out.push((start, Token::Symbol(symbol, index)));
        pos = end;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    context: Context,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Ast::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Ast::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    lhs = Ast::Product(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Token::Wedge) => {
                    if self.context != Context::Form {
                        return Err(parse_error(
                            self.position(),
                            format!("'/\\' is not allowed in {} context", self.context),
                        ));
                    }
                    self.pos += 1;
                    lhs = Ast::Wedge(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Token::Number(_) | Token::Q | Token::Symbol(..) | Token::Open) => {
                    lhs = Ast::Product(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Ast> {
        let at = self.position();
        let base = match self.tokens.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Token::Minus) => {
                self.pos += 1;
                return Ok(Ast::Negation(Box::new(self.factor()?)));
            }
            Some(Token::Number(r)) => Ast::Scalar(r),
            Some(Token::Q) => Ast::Q,
            Some(Token::Symbol(s, i)) => {
                if !s.allowed_in(self.context) {
                    return Err(parse_error(
                        at,
                        format!(
                            "'{}{i}' is not allowed in {} context",
                            s.prefix(),
                            self.context
                        ),
                    ));
                }
                Ast::Symbol(s, i)
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(parse_error(self.position(), "expected ')'"));
                }
                inner
            }
            Some(_) => return Err(parse_error(at, "expected a term")),
            None => return Err(parse_error(at, "unexpected end of input")),
        };
        self.pos += 1;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exp_at = self.position();
        let negative = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let magnitude = match self.tokens.get(self.pos) {
            Some((_, Token::Number(r))) if r.is_integer() => i64::try_from(r.to_integer())
                .map_err(|_| parse_error(exp_at, "exponent too large"))?,
            _ => return Err(parse_error(exp_at, "expected an integer exponent")),
        };
        self.pos += 1;
        let exponent = if negative { -magnitude } else { magnitude };
        if exponent < 0 {
            let invertible = matches!(
                base,
                Ast::Q | Ast::Symbol(Symbol::Coordinate, 1) | Ast::Symbol(Symbol::Sigma, _)
            );
            if !invertible {
                return Err(parse_error(
                    exp_at,
                    "negative exponents are allowed only on q, x1 and s<i>",
                ));
            }
        }
        Ok(Ast::Power(Box::new(base), exponent))
    }
}

/// Parses an expression in the given context.
pub fn parse(input: &str, context: Context) -> Result<Ast> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: input.chars().count(),
        context,
    };
    let ast = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parse_error(parser.position(), "unexpected trailing input"));
    }
    Ok(ast)
}

/// Picks the narrowest context whose symbols cover the input.
pub fn infer_context(input: &str) -> Result<Context> {
    let tokens = tokenize(input)?;
    let has = |pred: &dyn Fn(Symbol) -> bool| {
        tokens
            .iter()
            .any(|(_, t)| matches!(t, Token::Symbol(s, _) if pred(*s)))
    };
    if has(&|s| matches!(s, Symbol::Differential | Symbol::Omega))
        || tokens.iter().any(|(_, t)| *t == Token::Wedge)
    {
        Ok(Context::Form)
    } else if has(&|s| matches!(s, Symbol::Partial | Symbol::Sigma)) {
        Ok(Context::Operator)
    } else {
        Ok(Context::Algebra)
    }
}

fn index_checked(i: usize, n: usize) -> Result<usize> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(i)
}

fn scalar_value(ast: &Ast) -> Option<LaurentScalar> {
    match ast {
        Ast::Scalar(r) => Some(LaurentScalar::constant(r.clone())),
        Ast::Q => Some(LaurentScalar::q()),
        Ast::Power(base, k) if **base == Ast::Q => Some(LaurentScalar::q_pow(*k)),
        _ => None,
    }
}

/// Evaluates in `A_q(n)`.
pub fn eval_element(ast: &Ast, n: usize) -> Result<Element> {
    if n == 0 {
        return Err(Error::InvalidDimension);
    }
    if let Some(c) = scalar_value(ast) {
        return Ok(Element::scalar(n, c));
    }
    Ok(match ast {
        Ast::Symbol(Symbol::Coordinate, i) => Element::generator(n, index_checked(*i, n)?)?,
        Ast::Symbol(s, i) => {
            return Err(parse_error(
                0,
                format!("'{}{i}' is not an element of the algebra", s.prefix()),
            ))
        }
        Ast::Sum(a, b) => &eval_element(a, n)? + &eval_element(b, n)?,
        Ast::Difference(a, b) => &eval_element(a, n)? - &eval_element(b, n)?,
        Ast::Negation(a) => -&eval_element(a, n)?,
        Ast::Product(a, b) => &eval_element(a, n)? * &eval_element(b, n)?,
        Ast::Wedge(..) => return Err(parse_error(0, "wedge products need form context")),
        Ast::Power(base, k) if *k < 0 => match base.as_ref() {
            Ast::Symbol(Symbol::Coordinate, 1) => Element::x1_pow(n, *k),
            _ => return Err(parse_error(0, "only x1 may carry a negative exponent")),
        },
        Ast::Power(base, k) => eval_element(base, n)?.pow(*k as u32),
        Ast::Scalar(_) | Ast::Q => unreachable!("handled above"),
    })
}

/// Evaluates in `D_q(2n)`.
pub fn eval_operator(ast: &Ast, n: usize) -> Result<DqElement> {
    if n == 0 {
        return Err(Error::InvalidDimension);
    }
    if let Some(c) = scalar_value(ast) {
        return Ok(DqElement::one(n).scale(&c));
    }
    Ok(match ast {
        Ast::Symbol(Symbol::Partial, i) => DqElement::partial(n, index_checked(*i, n)?)?,
        Ast::Symbol(Symbol::Sigma, i) => DqElement::sigma(n, index_checked(*i, n)?, 1)?,
        Ast::Symbol(s, i) => {
            return Err(parse_error(
                0,
                format!("'{}{i}' is not an operator", s.prefix()),
            ))
        }
        Ast::Sum(a, b) => &eval_operator(a, n)? + &eval_operator(b, n)?,
        Ast::Difference(a, b) => &eval_operator(a, n)? - &eval_operator(b, n)?,
        Ast::Negation(a) => -&eval_operator(a, n)?,
        Ast::Product(a, b) => &eval_operator(a, n)? * &eval_operator(b, n)?,
        Ast::Wedge(..) => return Err(parse_error(0, "wedge products need form context")),
        Ast::Power(base, k) => match (base.as_ref(), *k) {
            (Ast::Symbol(Symbol::Sigma, i), k) => DqElement::sigma(n, index_checked(*i, n)?, k)?,
            (_, k) if k < 0 => {
                return Err(parse_error(
                    0,
                    "negative exponent on a non-invertible operator",
                ))
            }
            (b, k) => eval_operator(b, n)?.pow(k as u32),
        },
        Ast::Scalar(_) | Ast::Q => unreachable!("handled above"),
    })
}

/// Evaluates in the exterior algebra; juxtaposition and `/\` both denote the wedge product.
pub fn eval_form(ast: &Ast, n: usize) -> Result<Form> {
    if n == 0 {
        return Err(Error::InvalidDimension);
    }
    if let Some(c) = scalar_value(ast) {
        return Ok(Form::from_element(&Element::scalar(n, c)));
    }
    Ok(match ast {
        Ast::Symbol(Symbol::Coordinate, i) => {
            Form::from_element(&Element::generator(n, index_checked(*i, n)?)?)
        }
        Ast::Symbol(Symbol::Differential, i) => Form::dx(n, index_checked(*i, n)?)?,
        Ast::Symbol(Symbol::Omega, i) => mc_basis(n, index_checked(*i, n)?)?,
        Ast::Symbol(s, i) => {
            return Err(parse_error(0, format!("'{}{i}' is not a form", s.prefix())))
        }
        Ast::Sum(a, b) => eval_form(a, n)?.checked_add(&eval_form(b, n)?)?,
        Ast::Difference(a, b) => {
            eval_form(a, n)?.checked_add(&eval_form(b, n)?.scale(&LaurentScalar::from_int(-1)))?
        }
        Ast::Negation(a) => eval_form(a, n)?.scale(&LaurentScalar::from_int(-1)),
        Ast::Product(a, b) | Ast::Wedge(a, b) => form_mul(&eval_form(a, n)?, &eval_form(b, n)?),
        Ast::Power(base, k) if *k < 0 => {
            Form::from_element(&eval_element(&Ast::Power(base.clone(), *k), n)?)
        }
        Ast::Power(base, k) => {
            let b = eval_form(base, n)?;
            (0..*k).fold(Form::from_element(&Element::one(n)), |acc, _| {
                form_mul(&acc, &b)
            })
        }
        Ast::Scalar(_) | Ast::Q => unreachable!("handled above"),
    })
}

pub fn parse_element(input: &str, n: usize) -> Result<Element> {
    eval_element(&parse(input, Context::Algebra)?, n)
}

pub fn parse_operator(input: &str, n: usize) -> Result<DqElement> {
    eval_operator(&parse(input, Context::Operator)?, n)
}

pub fn parse_form(input: &str, n: usize) -> Result<Form> {
    eval_form(&parse(input, Context::Form)?, n)
}

/// Parameters shared by every suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: usize,
    pub deg: i64,
    pub trials: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            n: 3,
            deg: 4,
            trials: 200,
            seed: 42,
        }
    }
}

pub const SUITES: [&str; 14] = [
    "bicharacter",
    "cocycle",
    "algebra",
    "hopf-aqn",
    "derivations",
    "dq-relations",
    "dq-hopf",
    "module-algebra",
    "calculus",
    "bicovariance",
    "weyl",
    "maurer-cartan",
    "vector-fields",
    "classical-limit",
];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub reports: Vec<Report>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        all_ok(&self.reports)
    }
}

/// Runs one named suite.
pub fn run_named(name: &str, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let SuiteConfig {
        n,
        deg,
        trials,
        seed,
    } = cfg.clone();
    if n == 0 {
        return Err(Error::InvalidDimension);
    }
    let deg = deg.max(1);
    let reports = match name {
        "bicharacter" => {
            let mut r = check_bicharacter(n, trials, seed, 6);
            r.extend(eps_identities_check(n, trials, seed, 6));
            r
        }
        "cocycle" => check_cocycle(n, trials, seed, 6),
        "algebra" => check_algebra(n, trials, seed),
        "hopf-aqn" => {
            let (x1, rest) = (deg.min(2), deg.min(3));
            check_hopf_a(n, &monomials_in_box(n, -x1, x1, rest), seed)
        }
        "derivations" => {
            let mut r = check_twisted_leibniz(n, deg, trials, seed);
            r.extend(check_operator_relations(n, deg, seed));
            r
        }
        "dq-relations" => check_confluence(n, trials, 6, seed),
        "dq-hopf" => check_hopf_d(n, deg.min(3)),
        "module-algebra" => module_algebra_check(n, trials.div_ceil(4), seed),
        "calculus" => check_calculus(n, deg, trials, seed),
        "bicovariance" => check_bicovariance(n, deg, trials.div_ceil(4), seed),
        "weyl" => weyl_relation_check(n, deg),
        "maurer-cartan" => {
            let mut r = mc_display_check(n);
            r.extend(omega_relations_check(n, trials, seed));
            r.extend(dx_via_omega_check(n));
            r.extend(right_invariance_check(
                n,
                &monomials_up_to(n, deg.min(2), -2),
                trials.div_ceil(4),
                seed,
            ));
            r
        }
        "vector-fields" => {
            let mut r = vf_structure_check(n, deg, -2);
            r.extend(vf_leibniz_check(n, deg, trials, seed));
            r.extend(vf_coproduct_check(n, deg, trials.div_ceil(4), seed));
            r
        }
        "classical-limit" => classical_limit_check(n, trials, seed),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    Ok(SuiteOutcome {
        suite: name.to_string(),
        reports,
    })
}

/// Runs the requested suites in order, expanding `all`.
pub fn run_suites(names: &[String], cfg: &SuiteConfig) -> Result<Vec<SuiteOutcome>> {
    let mut expanded: Vec<&str> = Vec::new();
    for name in names {
        if name == "all" {
            expanded.extend(SUITES);
        } else if SUITES.contains(&name.as_str()) {
            expanded.push(name);
        } else {
            return Err(Error::UnknownSuite(name.clone()));
        }
    }
    expanded
        .into_iter()
        .map(|name| run_named(name, cfg))
        .collect()
}

/// Text rendering of suite outcomes, ending with a summary line.
pub fn render_outcomes(outcomes: &[SuiteOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        out.push_str(&format!("== {} ==\n", o.suite));
        for r in &o.reports {
            out.push_str(&format!("{r}\n"));
        }
    }
    let failing: usize = outcomes
        .iter()
        .flat_map(|o| &o.reports)
        .filter(|r| !r.ok())
        .count();
    let total: usize = outcomes.iter().map(|o| o.reports.len()).sum();
    let verdict = if failing == 0 { "PASS" } else { "FAIL" };
    out.push_str(&format!(
        "{verdict}: {} identities checked, {failing} failing\n",
        total
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicharacter::MultiIndex;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        let ast = parse("x1^-1 x2", Context::Algebra).unwrap();
        assert!(matches!(ast, Ast::Product(..)));
        let ast = parse("dx1 /\\ dx2 * x1^-1", Context::Form).unwrap();
        assert!(matches!(ast, Ast::Product(ref lhs, _) if matches!(**lhs, Ast::Wedge(..))));
        let u = parse_operator("q^2 d1 s2^-1", 3).unwrap();
        // d1 s2^-1 = q^-1 s2^-1 d1
        assert_eq!(u.to_string(), "q s2^-1 d1");
    }

    #[test]
    fn evaluates_examples() {
        let n = 2;
        assert_eq!(
            (&parse_element("x2", n).unwrap() * &parse_element("x1", n).unwrap()).to_string(),
            "q^-1 x1 x2"
        );
        assert_eq!(parse_element("x1^-1 x1", n).unwrap(), Element::one(n));
        assert_eq!(parse_element("1/2 - 1/2", n).unwrap(), Element::zero(n));
        let f = parse_element("(q + 1)^2 x2^2 - 3 x1^-2", n).unwrap();
        assert_eq!(parse_element(&f.to_string(), n).unwrap(), f);
        let form = parse_form("dx2 dx1 x1", 2).unwrap();
        assert_eq!(form.to_string(), "-q^-1 dx1 /\\ dx2 x1");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse("dx1", Context::Algebra),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse("x2^-1", Context::Algebra),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse("d1^-1", Context::Operator),
            Err(Error::Parse { .. })
        ));
        assert!(parse("x1 +", Context::Algebra).is_err());
        assert!(parse("(x1", Context::Algebra).is_err());
        assert!(parse("x1 ) ", Context::Algebra).is_err());
        assert!(parse("x1 /\\ x2", Context::Algebra).is_err());
        assert!(parse("T1", Context::Operator).is_err());
        assert!(parse("x0", Context::Algebra).is_err());
        assert!(parse("x1 ? x2", Context::Algebra).is_err());
        assert!(matches!(
            parse_element("x5", 3),
            Err(Error::IndexOutOfRange { index: 5, n: 3 })
        ));
    }

    #[test]
    fn context_inference() {
        assert_eq!(infer_context("x1 x2").unwrap(), Context::Algebra);
        assert_eq!(infer_context("d1 s2").unwrap(), Context::Operator);
        assert_eq!(infer_context("dx1 x2").unwrap(), Context::Form);
        assert_eq!(infer_context("w2").unwrap(), Context::Form);
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suites(&["nope".into()], &SuiteConfig::default()).is_err());
    }

    #[test]
    fn bicharacter_suite_in_dimension_one() {
        let cfg = SuiteConfig {
            n: 1,
            deg: 2,
            trials: 20,
            seed: 1,
        };
        assert!(run_suites(&["bicharacter".into()], &cfg)
            .unwrap()
            .iter()
            .all(SuiteOutcome::ok));
    }

    fn arb_element(n: usize) -> impl Strategy<Value = Element> {
        let term = (
            -3i64..=3,
            proptest::collection::vec(0i64..=3, n - 1),
            -3i64..=3,
            prop_oneof![
                Just((1i64, 1i64)),
                Just((-1, 1)),
                Just((3, 2)),
                Just((-5, 7))
            ],
        );
        proptest::collection::vec(term, 0..4).prop_map(move |terms| {
            let mut f = Element::zero(n);
            for (a1, rest, k, (num, den)) in terms {
                let mut alpha = vec![a1];
                alpha.extend(rest);
                let c = LaurentScalar::monomial(crate::scalar::rational(num, den), k)
                    + LaurentScalar::q_pow(k + 1);
                f.add_term(MultiIndex::new(alpha), &c);
            }
            f
        })
    }

    proptest! {
        #[test]
        fn element_print_parse_round_trip(f in arb_element(3)) {
            prop_assert_eq!(parse_element(&f.to_string(), 3).unwrap(), f);
        }

        #[test]
        fn operator_print_parse_round_trip(g in proptest::collection::vec(-2i64..=2, 3), b in proptest::collection::vec(0i64..=2, 3), k in -2i64..=2) {
            let mut u = DqElement::word(MultiIndex::new(g), MultiIndex::new(b), LaurentScalar::q_pow(k)).unwrap();
            u = &u - &DqElement::partial(3, 2).unwrap();
            prop_assert_eq!(parse_operator(&u.to_string(), 3).unwrap(), u);
        }

        #[test]
        fn form_print_parse_round_trip(f in arb_element(3), g in arb_element(3), i in 1usize..=3) {
            let u = crate::calculus::d_element(&f).checked_add(&Form::dx(3, i).unwrap().right_mul(&g)).unwrap();
            let w = form_mul(&u, &Form::dx(3, 1).unwrap());
            prop_assert_eq!(parse_form(&u.to_string(), 3).unwrap(), u);
            prop_assert_eq!(parse_form(&w.to_string(), 3).unwrap(), w);
        }
    }
}
