use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use ssym_harmonic::harmonic::{decompose, harmonic_basis_min_part, is_harmonic, HarmonicBasis};
use ssym_harmonic::qseries::{q_bracket, DEFAULT_ORDER};
use ssym_harmonic::quasimodular::recognize;
use ssym_harmonic::ssym::{eval, parse};
use ssym_harmonic::verify::{self, VerifyConfig};
use ssym_harmonic::{latex, Error, Partition, QMForm, QSeries, SSPoly};

mod render;

#[derive(Parser)]
#[command(name = "ssym", version, about = "Shifted symmetric polynomials, harmonic bases and q-brackets")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Truncation order of q-series.
    #[arg(short = 'N', long, default_value_t = DEFAULT_ORDER, global = true)]
    order: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the harmonic basis h_λ of weight n.
    Basis {
        n: u32,
        /// Smallest allowed part of λ.
        #[arg(long, default_value_t = 3)]
        min_part: u32,
    },
    /// Write f as Σ Q2^i h_i with harmonic h_i.
    Decompose {
        /// Expression; read from stdin when omitted or "-".
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Compute ⟨f⟩_q and identify it as a quasimodular form.
    Qbracket {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        /// Weight used for recognition; inferred when f is homogeneous.
        #[arg(long)]
        weight: Option<i64>,
    },
    /// Identify a q-series such as "1 + 240*q + O(q^3)" as a form of the given weight.
    Recognize {
        #[arg(allow_hyphen_values = true)]
        series: Option<String>,
        #[arg(long)]
        weight: i64,
    },
    /// Evaluate f at a partition, written like "(2,1)".
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        partition: String,
    },
    /// Run the property suites.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_weight: u32,
        #[arg(long, default_value_t = ssym_harmonic::random::DEFAULT_SEED)]
        seed: u64,
        /// Random inputs per identity.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Emit the tables of h_λ for even and odd weights, with brackets for the even ones.
    Tables {
        #[arg(long, default_value_t = 10)]
        max_weight: u32,
    },
}

/// Distinguishes input problems (exit 2) from failed computations (exit 1).
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. }
            | Error::HalfExponent(_)
            | Error::NegativeExponent(_)
            | Error::NonIntegralWeight(_)
            | Error::NotPolynomial(_)
            | Error::ContainsQ1(_)
            | Error::NotHomogeneous(_)
            | Error::NotHarmonic(_)
            | Error::NotInBasis(..)
            | Error::Invalid(_) => Failure::Usage(e.to_string()),
            Error::Inconsistent(_)
            | Error::NotQuasimodular { .. }
            | Error::InsufficientOrder { .. }
            | Error::NonzeroOddWeight(_)
            | Error::CrossCheck(_) => Failure::Check(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<(), Failure>;

fn input(arg: Option<String>) -> Result<String, Failure> {
    match arg.as_deref() {
        Some(s) if s != "-" => Ok(s.to_string()),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            let s = s.trim().to_string();
            if s.is_empty() {
                return Err(Failure::Usage("no input expression".into()));
            }
            Ok(s)
        }
    }
}

fn print_json(out: &mut impl Write, v: &serde_json::Value) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"))
}

/// `⟨h⟩_q` recognized at weight `n`; zero for odd `n`.
fn bracket_form(h: &SSPoly, n: i64, order: usize) -> Result<QMForm, Error> {
    recognize(&q_bracket(h, order)?, n, order)
}

fn basis_brackets(basis: &HarmonicBasis, order: usize) -> Result<Vec<QMForm>, Error> {
    basis
        .elements
        .par_iter()
        .map(|(_, h)| bracket_form(h, basis.weight as i64, order))
        .collect()
}

fn cmd_basis(cli: &Cli, n: u32, min_part: u32, out: &mut impl Write) -> Run {
    let basis = harmonic_basis_min_part(n, min_part)?;
    match cli.format {
        Format::Text => {
            for (l, h) in &basis.elements {
                writeln!(out, "{l}: {h}")?;
            }
        }
        Format::Latex => {
            let rows: Vec<_> = basis.elements.iter().map(|(l, h)| (l.clone(), h.clone(), None)).collect();
            write!(out, "{}", latex::table(&rows))?;
        }
        Format::Json => {
            let brackets = basis_brackets(&basis, cli.order)?;
            let rows: Vec<_> = basis
                .elements
                .iter()
                .zip(&brackets)
                .map(|((l, h), b)| {
                    json!({
                        "lambda": render::partition(l),
                        "h": render::poly(h),
                        "q_bracket": render::form(b),
                    })
                })
                .collect();
            print_json(out, &json!(rows))?;
        }
    }
    Ok(())
}

fn cmd_decompose(cli: &Cli, expr: &str, out: &mut impl Write) -> Run {
    let f = parse(expr)?;
    let d = decompose(&f)?;
    let flags = d.components.iter().map(is_harmonic).collect::<Result<Vec<_>, _>>()?;
    match cli.format {
        Format::Text => {
            for (i, (h, ok)) in d.components.iter().zip(&flags).enumerate() {
                let tag = if *ok { "harmonic" } else { "NOT harmonic" };
                writeln!(out, "h{i} = {h}  [{tag}]")?;
            }
            writeln!(out, "depth {}", d.depth())?;
        }
        Format::Latex => {
            for (i, h) in d.components.iter().enumerate() {
                writeln!(out, "h_{{{i}}} = {}", latex::poly(h))?;
            }
            writeln!(out, "% depth {}", d.depth())?;
        }
        Format::Json => {
            let comps: Vec<_> = d
                .components
                .iter()
                .zip(&flags)
                .map(|(h, ok)| json!({ "h": render::poly(h), "harmonic": ok }))
                .collect();
            print_json(out, &json!({ "components": comps, "depth": d.depth() }))?;
        }
    }
    if flags.iter().all(|&ok| ok) && d.reconstruct() == f {
        Ok(())
    } else {
        Err(Failure::Check("decomposition check failed".into()))
    }
}

fn show_form(cli: &Cli, series: &QSeries, form: Option<&QMForm>, out: &mut impl Write) -> Run {
    match cli.format {
        Format::Text => {
            writeln!(out, "series: {series}")?;
            if let Some(m) = form {
                writeln!(out, "form: {m}")?;
            }
        }
        Format::Latex => {
            if let Some(m) = form {
                writeln!(out, "{}", latex::qmform(m))?;
            }
        }
        Format::Json => {
            let mut v = json!({ "order": series.order(), "series": render::series(series) });
            if let Some(m) = form {
                v["q_bracket"] = render::form(m);
            }
            print_json(out, &v)?;
        }
    }
    Ok(())
}

fn cmd_qbracket(cli: &Cli, expr: &str, weight: Option<i64>, out: &mut impl Write) -> Run {
    let f = parse(expr)?;
    let series = q_bracket(&f, cli.order)?;
    let weight = weight.or_else(|| f.pr().homogeneous_weight()).or(f.pr().is_zero().then_some(0));
    let Some(k) = weight else {
        show_form(cli, &series, None, out)?;
        eprintln!("note: input is not homogeneous; pass --weight to recognize the bracket");
        return Ok(());
    };
    match recognize(&series, k, cli.order) {
        Ok(m) => show_form(cli, &series, Some(&m), out),
        Err(e) => {
            show_form(cli, &series, None, out)?;
            Err(e.into())
        }
    }
}

fn cmd_recognize(cli: &Cli, text: &str, weight: i64, out: &mut impl Write) -> Run {
    let series: QSeries = text.parse()?;
    let order = series.order().min(cli.order);
    let series = series.truncate(order);
    let m = recognize(&series, weight, order)?;
    show_form(cli, &series, Some(&m), out)
}

fn cmd_eval(cli: &Cli, expr: &str, lambda: &str, out: &mut impl Write) -> Run {
    let f = parse(expr)?;
    let lambda: Partition = lambda.parse()?;
    let v = eval(&f, &lambda)?;
    match cli.format {
        Format::Json => print_json(out, &json!({ "lambda": render::partition(&lambda), "value": v.to_string() }))?,
        Format::Latex => writeln!(out, "{}", latex::rational(&v))?,
        Format::Text => writeln!(out, "{v}")?,
    }
    Ok(())
}

fn cmd_verify(cli: &Cli, cfg: VerifyConfig, out: &mut impl Write) -> Run {
    let reports = verify::run_all(&cfg)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if cli.format == Format::Json {
        let rows: Vec<_> = reports
            .iter()
            .map(|r| json!({ "suite": r.name, "passed": r.passed(), "checks": r.cases, "failure": r.failure }))
            .collect();
        print_json(out, &json!(rows))?;
    } else {
        for r in &reports {
            writeln!(out, "{r}")?;
        }
        writeln!(out, "{} of {} suites passed", reports.len() - failed, reports.len())?;
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} suite(s) failed")))
    }
}

fn cmd_tables(cli: &Cli, max_weight: u32, out: &mut impl Write) -> Run {
    let bases = (0..=max_weight)
        .into_par_iter()
        .map(|n| harmonic_basis_min_part(n, 3))
        .collect::<Result<Vec<_>, _>>()?;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for basis in &bases {
        let brackets = if basis.weight % 2 == 0 {
            basis_brackets(basis, cli.order)?.into_iter().map(Some).collect()
        } else {
            vec![None; basis.len()]
        };
        let target = if basis.weight % 2 == 0 { &mut even } else { &mut odd };
        for ((l, h), b) in basis.elements.iter().zip(brackets) {
            target.push((l.clone(), h.clone(), b));
        }
    }
    match cli.format {
        Format::Latex => {
            write!(out, "{}", latex::table(&even))?;
            writeln!(out)?;
            write!(out, "{}", latex::table(&odd))?;
        }
        Format::Text => {
            for (title, rows) in [("even weight", &even), ("odd weight", &odd)] {
                writeln!(out, "# {title}")?;
                for (l, h, b) in rows.iter() {
                    match b {
                        Some(b) => writeln!(out, "{l}: {h}  |  {b}")?,
                        None => writeln!(out, "{l}: {h}")?,
                    }
                }
            }
        }
        Format::Json => {
            let rows = |rows: &[(Partition, SSPoly, Option<QMForm>)]| -> Vec<serde_json::Value> {
                rows.iter()
                    .map(|(l, h, b)| {
                        json!({
                            "lambda": render::partition(l),
                            "h": render::poly(h),
                            "q_bracket": b.as_ref().map(render::form).unwrap_or(json!([])),
                        })
                    })
                    .collect()
            };
            print_json(out, &json!({ "even": rows(&even), "odd": rows(&odd) }))?;
        }
    }
    Ok(())
}

fn run(cli: &Cli, out: &mut impl Write) -> Run {
    match &cli.command {
        Command::Basis { n, min_part } => cmd_basis(cli, *n, *min_part, out),
        Command::Decompose { expr } => cmd_decompose(cli, &input(expr.clone())?, out),
        Command::Qbracket { expr, weight } => cmd_qbracket(cli, &input(expr.clone())?, *weight, out),
        Command::Recognize { series, weight } => cmd_recognize(cli, &input(series.clone())?, *weight, out),
        Command::Eval { expr, partition } => cmd_eval(cli, expr, partition, out),
        Command::Verify {
            max_weight,
            seed,
            samples,
        } => {
            let cfg = VerifyConfig {
                max_weight: *max_weight,
                order: cli.order,
                seed: *seed,
                samples: *samples,
            };
            cmd_verify(cli, cfg, out)
        }
        Command::Tables { max_weight } => cmd_tables(cli, *max_weight, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
