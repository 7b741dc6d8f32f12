//! Command-line front end.
//!
//! Data goes to `out`, diagnostics to `err`. Exit codes: 0 success, 1 usage
//! or domain error, 2 verification failure.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{compare_costs, identity_suite};
use crate::bernoulli::{
    bernoulli_number, bernoulli_poly_coeffs_binomial, bernoulli_poly_coeffs_stirling, bernoulli_poly_eval,
};
use crate::error::{domain, Error};
use crate::exact::Rational;
use crate::power_sum::{direct_sum, eval_binomial_form, eval_poly, BinomialForm, Method, PowerSumSpec};
use crate::special::{r_stirling2, r_whitney, stirling1, stirling2};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "apsum", version, about = "Exact power sums of arithmetic progressions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SpecArgs {
    /// Power k (>= 0)
    #[arg(short = 'k', long = "power", allow_negative_numbers = true)]
    k: i64,
    /// Common difference m (>= 1)
    #[arg(short = 'm', long = "step", default_value_t = 1, allow_negative_numbers = true)]
    m: i64,
    /// First term r (>= 0)
    #[arg(short = 'r', long = "start", default_value_t = 0, allow_negative_numbers = true)]
    r: i64,
}

impl SpecArgs {
    fn spec(&self) -> Result<PowerSumSpec, Error> {
        PowerSumSpec::from_signed(self.k, self.m, self.r)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients c_1..c_{k+1} of S(n)
    Coeffs {
        #[command(flatten)]
        spec: SpecArgs,
        /// simple, whitney, griffiths, bazso, ramirez, bernoulli, or all
        #[arg(long, default_value = "simple")]
        method: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Evaluate S(n) exactly
    Eval {
        #[command(flatten)]
        spec: SpecArgs,
        /// Number of terms n (>= 1)
        #[arg(short = 'n', long = "terms", allow_negative_numbers = true)]
        n: i64,
        /// A coefficient method, a binomial form (griffiths-form, bazso-form,
        /// ramirez-form), or direct
        #[arg(long, default_value = "simple")]
        method: String,
        /// Also compute the direct sum and compare
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Bernoulli numbers and polynomials (B_1 = -1/2)
    Bernoulli {
        #[arg(short = 'k', long = "index", allow_negative_numbers = true)]
        k: i64,
        /// Print B_0..B_k
        #[arg(long, conflicts_with_all = ["poly", "x"])]
        table: bool,
        /// Print the coefficients of B_k(x), ascending
        #[arg(long, conflicts_with = "x")]
        poly: bool,
        /// Coefficient route for --poly: stirling or binomial
        #[arg(long, default_value = "stirling", requires = "poly")]
        poly_method: String,
        /// Evaluate B_k(x) at a rational x such as 1/3
        #[arg(long, allow_negative_numbers = true)]
        x: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Dump a Stirling triangle as CSV, one row per k
    Stirling {
        /// first, second, or r-second
        #[arg(long, default_value = "second")]
        kind: String,
        #[arg(long = "k-max", allow_negative_numbers = true)]
        k_max: i64,
        /// r for --kind r-second
        #[arg(short = 'r', long = "start", default_value_t = 0, allow_negative_numbers = true)]
        r: i64,
    },
    /// Dump the r-Whitney triangle W_{m,r}(k, j) as CSV, one row per k
    Whitney {
        #[arg(short = 'm', long = "step", default_value_t = 1, allow_negative_numbers = true)]
        m: i64,
        #[arg(short = 'r', long = "start", default_value_t = 0, allow_negative_numbers = true)]
        r: i64,
        #[arg(long = "k-max", allow_negative_numbers = true)]
        k_max: i64,
    },
    /// Run the identity ledger; exit 2 on any failure
    Verify {
        #[arg(long = "max-k", default_value_t = 12, allow_negative_numbers = true)]
        max_k: i64,
        #[arg(short = 'm', long = "step", value_delimiter = ',', default_values_t = [1, 2, 3])]
        m: Vec<i64>,
        #[arg(short = 'r', long = "start", value_delimiter = ',', default_values_t = [0, 1, 2, 5])]
        r: Vec<i64>,
    },
    /// Cost profile of every formula as CSV
    Bench {
        #[arg(long = "k-max", allow_negative_numbers = true)]
        k_max: i64,
        #[arg(long = "t", default_value_t = 1, allow_negative_numbers = true)]
        t: i64,
    },
}

enum Failure {
    Usage(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Coeffs { spec, method, format } => coeffs(spec.spec()?, &method, format, out),
        Command::Eval {
            spec,
            n,
            method,
            verify,
            format,
        } => eval(spec.spec()?, n, &method, verify, format, out),
        Command::Bernoulli {
            k,
            table,
            poly,
            poly_method,
            x,
            format,
        } => bernoulli(
            non_negative("k", k)?,
            table,
            poly.then_some(poly_method),
            x,
            format,
            out,
        ),
        Command::Stirling { kind, k_max, r } => {
            stirling(&kind, non_negative("k-max", k_max)?, non_negative("r", r)?, out)
        }
        Command::Whitney { m, r, k_max } => whitney(
            positive("m", m)?,
            non_negative("r", r)?,
            non_negative("k-max", k_max)?,
            out,
        ),
        Command::Verify { max_k, m, r } => {
            let m: Vec<u32> = m.into_iter().map(|v| positive("m", v)).collect::<Result<_, _>>()?;
            let r: Vec<u32> = r.into_iter().map(|v| non_negative("r", v)).collect::<Result<_, _>>()?;
            verify(non_negative("max-k", max_k)?, &m, &r, out)
        }
        Command::Bench { k_max, t } => bench(non_negative("k-max", k_max)?, positive("t", t)?, out),
    }
}

fn non_negative(name: &str, v: i64) -> Result<u32, Error> {
    u32::try_from(v).map_err(|_| domain(format!("{name} = {v} must be >= 0")))
}

fn positive(name: &str, v: i64) -> Result<u32, Error> {
    u32::try_from(v)
        .ok()
        .filter(|&v| v >= 1)
        .ok_or_else(|| domain(format!("{name} = {v} must be >= 1")))
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[derive(Serialize)]
struct CoeffsJson<'a> {
    k: u32,
    m: u32,
    r: u32,
    method: &'a str,
    coeffs: Vec<String>,
}

fn coeffs(spec: PowerSumSpec, method: &str, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let methods: Vec<Method> = if method == "all" {
        Method::ALL.to_vec()
    } else {
        vec![method.parse()?]
    };
    let results: Vec<(Method, Vec<String>)> = methods.iter().map(|&m| (m, strings(m.coeffs(spec).coeffs()))).collect();

    match format {
        OutputFormat::Text if results.len() == 1 => {
            for (i, c) in results[0].1.iter().enumerate() {
                writeln!(out, "t={}: {c}", i + 1)?;
            }
        }
        OutputFormat::Text => {
            for (m, c) in &results {
                writeln!(out, "{:<10} [{}]", m.name(), c.join(", "))?;
            }
            let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
            writeln!(out, "agreement: {}", if agree { "OK" } else { "MISMATCH" })?;
        }
        OutputFormat::Json => {
            let docs: Vec<CoeffsJson> = results
                .into_iter()
                .map(|(m, coeffs)| CoeffsJson {
                    k: spec.k(),
                    m: spec.m(),
                    r: spec.r(),
                    method: m.name(),
                    coeffs,
                })
                .collect();
            let text = if docs.len() == 1 {
                serde_json::to_string(&docs[0])
            } else {
                serde_json::to_string(&docs)
            }
            .map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "{text}")?;
        }
        OutputFormat::Csv => {
            writeln!(out, "method,t,coeff")?;
            for (m, c) in &results {
                for (i, v) in c.iter().enumerate() {
                    writeln!(out, "{},{},{v}", m.name(), i + 1)?;
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct EvalJson<'a> {
    k: u32,
    m: u32,
    r: u32,
    n: u64,
    method: &'a str,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ok: Option<bool>,
}

fn eval(
    spec: PowerSumSpec,
    n: i64,
    method: &str,
    verify: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    let n = u64::try_from(n)
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| domain(format!("n = {n} must be >= 1")))?;
    let value = if method == "direct" {
        direct_sum(spec, n)?
    } else if let Ok(form) = method.parse::<BinomialForm>() {
        eval_binomial_form(spec, n, form)?
    } else {
        let m: Method = method
            .parse()
            .map_err(|_| domain(format!("unknown method '{method}'")))?;
        eval_poly(&m.coeffs(spec), n)
    };
    let oracle = if verify { Some(direct_sum(spec, n)?) } else { None };
    let ok = oracle.as_ref().map(|o| o == &value);

    match format {
        OutputFormat::Json => {
            let doc = EvalJson {
                k: spec.k(),
                m: spec.m(),
                r: spec.r(),
                n,
                method,
                value: value.to_string(),
                oracle: oracle.as_ref().map(|o| o.to_string()),
                ok,
            };
            let text = serde_json::to_string(&doc).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "{text}")?;
        }
        OutputFormat::Csv => {
            writeln!(out, "k,m,r,n,method,value{}", if verify { ",oracle,ok" } else { "" })?;
            write!(out, "{},{},{},{n},{method},{value}", spec.k(), spec.m(), spec.r())?;
            if let (Some(o), Some(ok)) = (&oracle, ok) {
                write!(out, ",{o},{ok}")?;
            }
            writeln!(out)?;
        }
        OutputFormat::Text => match (&oracle, ok) {
            (Some(o), Some(ok)) => writeln!(out, "{value} (oracle: {o}, {})", if ok { "OK" } else { "MISMATCH" })?,
            _ => writeln!(out, "{value}")?,
        },
    }
    if ok == Some(false) {
        return Err(Failure::Verify);
    }
    Ok(())
}

#[derive(Serialize)]
struct BernoulliValueJson {
    k: u32,
    value: String,
}

#[derive(Serialize)]
struct BernoulliCoeffsJson {
    k: u32,
    coeffs: Vec<String>,
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure::Usage(e.to_string()))
}

fn bernoulli(
    k: u32,
    table: bool,
    poly: Option<String>,
    x: Option<String>,
    format: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    if let Some(route) = poly {
        let coeffs = match route.as_str() {
            "stirling" => bernoulli_poly_coeffs_stirling(k),
            "binomial" => bernoulli_poly_coeffs_binomial(k),
            other => return Err(Failure::Usage(format!("unknown poly method '{other}'"))),
        };
        let coeffs = strings(&coeffs);
        match format {
            OutputFormat::Json => writeln!(out, "{}", to_json(&BernoulliCoeffsJson { k, coeffs })?)?,
            OutputFormat::Csv => {
                writeln!(out, "j,coeff")?;
                for (j, c) in coeffs.iter().enumerate() {
                    writeln!(out, "{j},{c}")?;
                }
            }
            OutputFormat::Text => {
                for (j, c) in coeffs.iter().enumerate() {
                    writeln!(out, "x^{j}: {c}")?;
                }
            }
        }
        return Ok(());
    }

    let rows: Vec<(u32, Rational)> = if table {
        (0..=k).map(|i| (i, bernoulli_number(i))).collect()
    } else if let Some(x) = x {
        let x: Rational = x
            .parse()
            .map_err(|_| domain(format!("cannot parse '{x}' as a rational")))?;
        vec![(k, bernoulli_poly_eval(k, &x))]
    } else {
        vec![(k, bernoulli_number(k))]
    };
    match format {
        OutputFormat::Json => {
            let docs: Vec<BernoulliValueJson> = rows
                .iter()
                .map(|(k, v)| BernoulliValueJson {
                    k: *k,
                    value: v.to_string(),
                })
                .collect();
            let text = if table { to_json(&docs)? } else { to_json(&docs[0])? };
            writeln!(out, "{text}")?;
        }
        OutputFormat::Csv => {
            writeln!(out, "k,value")?;
            for (k, v) in &rows {
                writeln!(out, "{k},{v}")?;
            }
        }
        OutputFormat::Text if table => {
            for (k, v) in &rows {
                writeln!(out, "k={k}: {v}")?;
            }
        }
        OutputFormat::Text => writeln!(out, "{}", rows[0].1)?,
    }
    Ok(())
}

fn write_row(out: &mut dyn Write, row: &[String]) -> io::Result<()> {
    writeln!(out, "{}", row.join(","))
}

fn stirling(kind: &str, k_max: u32, r: u32, out: &mut dyn Write) -> CmdResult {
    for k in 0..=k_max {
        let row: Vec<String> = match kind {
            "first" => (0..=k).map(|j| stirling1(k, j).to_string()).collect(),
            "second" => (0..=k).map(|j| stirling2(k, j).to_string()).collect(),
            "r-second" => (0..=k)
                .map(|j| r_stirling2(k, j, r).map(|v| v.to_string()))
                .collect::<Result<_, _>>()?,
            other => {
                return Err(Failure::Usage(format!(
                    "unknown kind '{other}' (first, second, r-second)"
                )))
            }
        };
        write_row(out, &row)?;
    }
    Ok(())
}

fn whitney(m: u32, r: u32, k_max: u32, out: &mut dyn Write) -> CmdResult {
    for k in 0..=k_max {
        let row: Vec<String> = (0..=k)
            .map(|j| r_whitney(k, j, m, r).map(|v| v.to_string()))
            .collect::<Result<_, _>>()?;
        write_row(out, &row)?;
    }
    Ok(())
}

fn verify(max_k: u32, m: &[u32], r: &[u32], out: &mut dyn Write) -> CmdResult {
    let reports = identity_suite(max_k, m, r)?;
    let mut failed = 0;
    for rep in &reports {
        writeln!(out, "{rep}")?;
        for f in rep.failures.iter().take(5) {
            writeln!(out, "    at {}: lhs={} rhs={}", f.params, f.lhs, f.rhs)?;
        }
        if !rep.passed() {
            failed += 1;
        }
    }
    writeln!(out, "{} identities, {} failed", reports.len(), failed)?;
    if failed > 0 {
        return Err(Failure::Verify);
    }
    Ok(())
}

fn bench(k_max: u32, t: u32, out: &mut dyn Write) -> CmdResult {
    writeln!(out, "formula_id,k,t,power_evals,total_terms")?;
    for k in 0..=k_max {
        if t > k + 1 {
            continue;
        }
        for rep in compare_costs(k, t)? {
            writeln!(
                out,
                "{},{},{},{},{}",
                rep.formula_id, rep.k, rep.t, rep.power_evals, rep.total_terms
            )?;
        }
    }
    Ok(())
}
