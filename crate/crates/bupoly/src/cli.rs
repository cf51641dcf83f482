//! Command-line front end: polynomial expression parsing, report rendering,
//! and the subcommand implementations behind the `bupoly` binary.
//!
//! Expressions use the grammar
//!
//! ```text
//! sum     := product ('+' product)*
//! product := term ('*' term)*
//! term    := atom ('^' uint)?
//! atom    := 'x' | '1' | '0' | hex | name | '(' sum ')'
//! ```
//!
//! where `hex` is an `0x`-prefixed little-endian coefficient string and
//! `name` is one of the table constants `M1`..`M5`, `C1`..`C15`. Every form
//! the tool prints parses back to the same polynomial.

use std::fmt;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::divisor::{sigma_of_kind, SigmaKind};
use crate::factor::{factorize, Factorization};
use crate::gf2poly::Poly;
use crate::perfect::constants;
use crate::search::{
    check_guided_families, search_mersenne_special, search_omega, ExponentSet, Finding,
    SearchMode, SearchSpec,
};
use crate::Error;

/// Parses an expression to a polynomial.
///
/// Syntax faults carry the 1-based column; oversized operands surface as the
/// arithmetic cap errors they are.
///
/// ```
/// use bupoly::cli::parse_poly;
/// use bupoly::gf2poly::Poly;
///
/// let p = parse_poly("x^3*(1+x)^4*M1").unwrap();
/// assert_eq!(p, parse_poly("C1").unwrap());
/// assert!(parse_poly("x^^2").is_err());
/// ```
pub fn parse_poly(input: &str) -> Result<Poly, Error> {
    let mut p = ExprParser {
        src: input.as_bytes(),
        pos: 0,
    };
    let poly = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.fail("unexpected trailing input"));
    }
    Ok(poly)
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn fail(&self, message: &str) -> Error {
        Error::ParseExpr {
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn sum(&mut self) -> Result<Poly, Error> {
        let mut acc = self.product()?;
        while self.eat(b'+') {
            acc = acc + self.product()?;
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly, Error> {
        let mut acc = self.term()?;
        while self.eat(b'*') {
            let rhs = self.term()?;
            acc = acc.checked_mul(&rhs)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, Error> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.uint()?;
            return base.checked_pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.fail("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Poly::one())
            }
            Some(b'0') => {
                if matches!(self.src.get(self.pos + 1), Some(b'x') | Some(b'X')) {
                    return self.hex_literal();
                }
                self.pos += 1;
                Ok(Poly::zero())
            }
            Some(c) if c.is_ascii_alphabetic() => self.name(),
            Some(_) => Err(self.fail("expected 'x', '1', '0', a hex literal, a name, or '('")),
            None => Err(self.fail("unexpected end of input")),
        }
    }

    fn hex_literal(&mut self) -> Result<Poly, Error> {
        let start = self.pos;
        self.pos += 2;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_hexdigit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse().map_err(|_| {
            self.pos = start;
            self.fail("invalid hex literal")
        })
    }

    fn name(&mut self) -> Result<Poly, Error> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        constants().named(text).ok_or_else(|| {
            let column = start + 1;
            Error::ParseExpr {
                column,
                message: format!("unknown name '{text}' (expected M1..M5 or C1..C15)"),
            }
        })
    }

    fn uint(&mut self) -> Result<u32, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("expected an exponent"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse().map_err(|_| {
            self.pos = start;
            self.fail("exponent does not fit in 32 bits")
        })
    }
}

/// Ascending-power form: `0`, `1`, `1+x`, `1+x+x^2`, ...
pub fn symbolic(p: &Poly) -> String {
    let Some(deg) = p.degree().finite() else {
        return "0".to_string();
    };
    let mut terms = Vec::new();
    for k in 0..=deg {
        if p.coeff(k) {
            terms.push(match k {
                0 => "1".to_string(),
                1 => "x".to_string(),
                k => format!("x^{k}"),
            });
        }
    }
    terms.join("+")
}

/// Factored form with non-monomial bases parenthesized, e.g.
/// `x^3*(1+x)^4*(1+x+x^2)`. The empty factorization prints as `1`.
pub fn factored_symbolic(f: &Factorization) -> String {
    if f.is_empty() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (base, e) in f.iter() {
        let b = if *base == Poly::x() {
            "x".to_string()
        } else {
            format!("({})", symbolic(base))
        };
        parts.push(if *e == 1 { b } else { format!("{b}^{e}") });
    }
    parts.join("*")
}

/// Like [`factored_symbolic`], but prints table constants by name, e.g.
/// `x^3*(1+x)^4*M1`. Bases outside the table fall back to sums.
fn named_symbolic(f: &Factorization) -> String {
    if f.is_empty() {
        return "1".to_string();
    }
    let table = constants();
    let mut parts = Vec::new();
    for (base, e) in f.iter() {
        let b = if *base == Poly::x() {
            "x".to_string()
        } else if let Some(i) = (1..=5).find(|&i| table.m(i) == base) {
            format!("M{i}")
        } else {
            format!("({})", symbolic(base))
        };
        parts.push(if *e == 1 { b } else { format!("{b}^{e}") });
    }
    parts.join("*")
}

#[derive(Parser)]
#[command(
    name = "bupoly",
    version,
    about = "Divisor-sum functions and perfect-polynomial searches over GF(2)[x]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    /// All divisors.
    All,
    /// Unitary divisors.
    Unitary,
    /// Bi-unitary divisors.
    Biunitary,
}

impl KindArg {
    fn kind(self) -> SigmaKind {
        match self {
            KindArg::All => SigmaKind::AllDivisors,
            KindArg::Unitary => SigmaKind::Unitary,
            KindArg::Biunitary => SigmaKind::BiUnitary,
        }
    }

    fn label(self) -> &'static str {
        match self {
            KindArg::All => "sigma",
            KindArg::Unitary => "sigma*",
            KindArg::Biunitary => "sigma**",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Every x^a (x+1)^b M1^h1 .. M5^h5 over the default box.
    Mersenne,
    /// Exhaustive over candidates with omega distinct irreducible factors.
    Brute,
    /// The three guided candidate families.
    Guided,
}

#[derive(Subcommand)]
enum Command {
    /// Factor an expression into irreducibles.
    Factor { expr: String },

    /// Apply a divisor-sum function and factor the result.
    Sigma {
        /// Which divisors to sum over.
        #[arg(long, value_enum, default_value_t = KindArg::Biunitary)]
        kind: KindArg,
        expr: String,
    },

    /// Check whether an expression is a fixed point of the chosen sigma.
    /// Exits 1 (and prints the defect) when it is not.
    Verify {
        #[arg(long, value_enum, default_value_t = KindArg::Biunitary)]
        kind: KindArg,
        expr: String,
    },

    /// Run a search and report every perfect polynomial in its box.
    Search(SearchArgs),

    /// Print the constants table, symbolically and in hex.
    Tables,
}

#[derive(Args)]
struct SearchArgs {
    /// Which enumeration to run.
    #[arg(long, value_enum)]
    mode: ModeArg,

    /// Distinct irreducible factors for brute-force mode (2..=4).
    #[arg(long)]
    omega: Option<usize>,

    /// Override the cap on the exponents of x and x+1.
    #[arg(long)]
    max_xy: Option<u32>,

    /// Override the exponent menu cap for the other bases.
    #[arg(long)]
    max_exponent: Option<u32>,

    /// Override the degree cap for brute-force base polynomials.
    #[arg(long)]
    max_irreducible_degree: Option<usize>,

    /// Override the total-degree cap.
    #[arg(long)]
    max_total_degree: Option<usize>,

    /// Worker threads; 0 uses the rayon default.
    #[arg(long, env = "BUPOLY_JOBS", default_value_t = 0)]
    jobs: usize,
}

impl SearchArgs {
    fn spec(&self) -> SearchSpec {
        let mut spec = match self.mode {
            ModeArg::Mersenne => SearchSpec::mersenne_special(),
            ModeArg::Brute => SearchSpec::brute_force(self.omega.unwrap_or(3)),
            ModeArg::Guided => SearchSpec::guided_families(),
        };
        if let Some(v) = self.omega {
            spec.omega_max = v;
        }
        if let Some(v) = self.max_xy {
            spec.max_xy_exponent = v;
        }
        if let Some(v) = self.max_exponent {
            spec.exponent_set = match spec.exponent_set {
                ExponentSet::EsTruncated { .. } => ExponentSet::EsTruncated { max: v },
                ExponentSet::Full { .. } => ExponentSet::Full { max: v },
            };
        }
        if let Some(v) = self.max_irreducible_degree {
            spec.max_irreducible_degree = v;
        }
        if let Some(v) = self.max_total_degree {
            spec.max_total_degree = v;
        }
        spec.jobs = self.jobs;
        spec
    }
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Lib(e) => e.fmt(f),
            Failure::Io(e) => e.fmt(f),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Lib(
                Error::DegreeCapExceeded { .. }
                | Error::EnumerationCapExceeded { .. }
                | Error::OracleCapExceeded { .. },
            ) => 3,
            _ => 2,
        }
    }
}

/// Runs the CLI against the process arguments and returns the exit code:
/// 0 success or verified, 1 verified-false, 2 usage or parse error,
/// 3 arithmetic cap exceeded.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };

    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return 2;
            }
        },
        None => Box::new(io::stdout().lock()),
    };

    match dispatch(&cli, &mut sink) {
        Ok(code) => code,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(f) => {
            eprintln!("error: {f}");
            f.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Factor { expr } => cmd_factor(expr, cli.format, out),
        Command::Sigma { kind, expr } => cmd_sigma(expr, *kind, cli.format, out),
        Command::Verify { kind, expr } => cmd_verify(expr, *kind, cli.format, out),
        Command::Search(args) => cmd_search(args, cli.format, out),
        Command::Tables => cmd_tables(cli.format, out),
    }
}

/// One report row: a polynomial, its factorization, and an optional label.
fn record(poly: &Poly, factors: &Factorization, tag: Option<&str>) -> serde_json::Value {
    json!({
        "poly_hex": poly.to_string(),
        "poly_symbolic": symbolic(poly),
        "degree": poly.degree().finite(),
        "omega": factors.omega(),
        "factors": factors
            .iter()
            .map(|(base, e)| json!({
                "base_hex": base.to_string(),
                "base_symbolic": symbolic(base),
                "exponent": e,
            }))
            .collect::<Vec<_>>(),
        "tag": tag,
    })
}

fn cmd_factor(expr: &str, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let poly = parse_poly(expr)?;
    let factors = factorize(&poly).map_err(Error::from)?;
    match format {
        Format::Text => writeln!(out, "{poly} = {}", factored_symbolic(&factors))?,
        Format::Jsonl => writeln!(out, "{}", record(&poly, &factors, None))?,
    }
    Ok(0)
}

fn cmd_sigma(expr: &str, kind: KindArg, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let poly = parse_poly(expr)?;
    let value = sigma_of_kind(kind.kind(), &poly)?;
    let factors = factorize(&value)?;
    match format {
        Format::Text => {
            writeln!(out, "A = {poly} = {}", factored_symbolic(&factorize(&poly)?))?;
            writeln!(
                out,
                "{}(A) = {value} = {}",
                kind.label(),
                factored_symbolic(&factors)
            )?;
        }
        Format::Jsonl => writeln!(out, "{}", record(&value, &factors, Some(kind.label())))?,
    }
    Ok(0)
}

fn cmd_verify(expr: &str, kind: KindArg, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let poly = parse_poly(expr)?;
    let value = sigma_of_kind(kind.kind(), &poly)?;
    let defect = value + poly.clone();
    let perfect = defect.is_zero();
    match format {
        Format::Text => {
            writeln!(out, "A = {poly} = {}", factored_symbolic(&factorize(&poly)?))?;
            if perfect {
                writeln!(out, "PERFECT: {}(A) = A", kind.label())?;
            } else {
                writeln!(out, "NOT PERFECT under {}", kind.label())?;
                writeln!(
                    out,
                    "defect {}(A)+A = {defect} = {}",
                    kind.label(),
                    factored_symbolic(&factorize(&defect)?)
                )?;
            }
        }
        Format::Jsonl => {
            let factors = factorize(&poly)?;
            let mut rec = record(&poly, &factors, Some(kind.label()));
            rec["perfect"] = json!(perfect);
            if !perfect {
                rec["defect_hex"] = json!(defect.to_string());
            }
            writeln!(out, "{rec}")?;
        }
    }
    Ok(if perfect { 0 } else { 1 })
}

fn cmd_search(args: &SearchArgs, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = args.spec();
    let started = Instant::now();
    let findings: Vec<Finding> = match spec.mode {
        SearchMode::MersenneSpecial => search_mersenne_special(&spec)?,
        SearchMode::BruteForce => search_omega(&spec)?,
        SearchMode::GuidedFamilies => check_guided_families(&spec)?,
    };
    let elapsed = started.elapsed();

    match format {
        Format::Text => {
            writeln!(out, "# bupoly {}", env!("CARGO_PKG_VERSION"))?;
            writeln!(
                out,
                "# mode {}: {} findings in {elapsed:.2?}",
                spec.mode.name(),
                findings.len()
            )?;
            for f in &findings {
                writeln!(
                    out,
                    "deg {:>3}  omega {}  tag {:<18}  {} = {}",
                    f.factors.degree(),
                    f.factors.omega(),
                    f.family_tag.as_deref().unwrap_or("-"),
                    f.poly,
                    named_symbolic(&f.factors)
                )?;
            }
        }
        Format::Jsonl => {
            for f in &findings {
                writeln!(out, "{}", record(&f.poly, &f.factors, f.family_tag.as_deref()))?;
            }
            eprintln!(
                "mode {}: {} findings in {elapsed:.2?}",
                spec.mode.name(),
                findings.len()
            );
        }
    }
    Ok(0)
}

fn cmd_tables(format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let table = constants();
    match format {
        Format::Text => {
            for i in 1..=5 {
                let m = table.m(i);
                writeln!(out, "M{i} = {m} = {}", symbolic(m))?;
            }
            for i in 1..=15 {
                let c = table.c(i);
                let poly = c.product();
                writeln!(
                    out,
                    "C{i} = {} = {poly}  (deg {})",
                    named_symbolic(c),
                    poly.degree()
                )?;
            }
        }
        Format::Jsonl => {
            for i in 1..=5 {
                let m = table.m(i);
                let f = Factorization::from_prime_powers([(m.clone(), 1)]);
                writeln!(out, "{}", record(m, &f, Some(&format!("M{i}"))))?;
            }
            for i in 1..=15 {
                let c = table.c(i);
                writeln!(out, "{}", record(&c.product(), c, Some(&format!("C{i}"))))?;
            }
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parser_handles_the_grammar() {
        assert_eq!(parse_poly("0").unwrap(), Poly::zero());
        assert_eq!(parse_poly("1+x").unwrap(), Poly::x_plus_one());
        assert_eq!(parse_poly(" ( 1 + x ) ^ 2 ").unwrap(), Poly::x_plus_one().pow(2));
        assert_eq!(parse_poly("0x13").unwrap(), Poly::from_support(&[0, 1, 4]));
        assert_eq!(parse_poly("M2^4*M3").unwrap(), {
            let t = constants();
            t.m(2).pow(4) * t.m(3).clone()
        });
        assert_eq!(parse_poly("1+1").unwrap(), Poly::zero());
    }

    #[test]
    fn parser_reports_columns() {
        match parse_poly("x^2*(1+y)") {
            Err(Error::ParseExpr { column, .. }) => assert_eq!(column, 8),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_poly("Q7") {
            Err(Error::ParseExpr { column, .. }) => assert_eq!(column, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn printing_round_trips() {
        let samples = [
            Poly::zero(),
            Poly::one(),
            Poly::x(),
            constants().c_poly(14),
            Poly::from_support(&[0, 3, 17, 40]),
        ];
        for p in &samples {
            assert_eq!(&parse_poly(&symbolic(p)).unwrap(), p);
            assert_eq!(&parse_poly(&p.to_string()).unwrap(), p);
        }
        let f = factorize(&constants().c_poly(9)).unwrap();
        assert_eq!(parse_poly(&factored_symbolic(&f)).unwrap(), constants().c_poly(9));
        assert_eq!(parse_poly(&named_symbolic(&f)).unwrap(), constants().c_poly(9));
    }
}
