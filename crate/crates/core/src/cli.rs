//! Command-line front end. [`run`] takes the argument list and output sinks so
//! it can be driven from tests as well as from `main`.

use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::interpretations::{FlavorSelection, Mode, Verifier};
use crate::lucasnomial::{Lucasnomials, Method};
use crate::partitions::enumerate_in_rect;
use crate::poly::BivariatePolynomial;
use crate::report::IdentityReport;
use crate::specializations::{specialize, Preset};
use crate::tilings::{enumerate, TilingKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "lucastile", version, about = "Lucas polynomials, lucasnomials and their tiling interpretations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print F_n, L_n or F_n!
    Lucas {
        which: LucasWhich,
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the lucasnomial C(n, k)
    Lucasnomial {
        n: usize,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = MethodArg::Quotient)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print rows 0..=N of the lucasnomial triangle
    Table {
        max_row: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the tilings of a 1 x n strip
    Tilings {
        kind: KindArg,
        n: usize,
        /// Append each tiling's weight and a final sum line
        #[arg(long)]
        weights: bool,
    },
    /// List the partitions inside an m x n rectangle
    Partitions {
        m: usize,
        n: usize,
        #[arg(long)]
        complement: bool,
    },
    /// Check identities exactly over a parameter range
    Verify {
        what: VerifyWhat,
        #[arg(long)]
        m_max: Option<usize>,
        /// Upper bound on n; for `recursions`, the bound on m + n
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Gf)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = FlavorArg::Both)]
        flavor: FlavorArg,
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Evaluate C(n, k) at a named specialization
    Specialize {
        n: i64,
        k: i64,
        #[arg(long, value_enum)]
        preset: PresetArg,
        /// Value of s for the lnomial preset
        #[arg(long, allow_negative_numbers = true)]
        ell: Option<i64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LucasWhich {
    #[value(name = "F")]
    F,
    #[value(name = "L")]
    L,
    Factorial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Quotient,
    RecFib,
    RecLuc,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Quotient => Method::Quotient,
            MethodArg::RecFib => Method::RecFib,
            MethodArg::RecLuc => Method::RecLuc,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Linear,
    Nolead,
    Circular,
}

impl From<KindArg> for TilingKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Linear => TilingKind::Linear,
            KindArg::Nolead => TilingKind::LinearNolead,
            KindArg::Circular => TilingKind::Circular,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyWhat {
    Lemma1,
    Recursions,
    Theorem,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Enumerate,
    Gf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FlavorArg {
    Linear,
    Circular,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PresetArg {
    Fibonomial,
    Lnomial,
    Qbinomial,
}

/// Outcome of a subcommand that did not produce its own exit status.
enum Failure {
    Usage(String),
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name), runs one subcommand and
/// returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Domain(_) | Error::Parse { .. } => EXIT_USAGE,
                Error::Resource { .. } => EXIT_RESOURCE,
                Error::Indivisible(_) | Error::InternalParity { .. } => EXIT_VERIFY_FAILED,
            }
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_VERIFY_FAILED
        }
    }
}

fn render_poly(p: &BivariatePolynomial, format: Format) -> String {
    match format {
        Format::Text => p.to_canonical_text(),
        Format::Json => serde_json::to_string(p).expect("polynomial serializes"),
        Format::Latex => p.to_latex(),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let lucasnomials = Arc::new(Lucasnomials::new());
    match command {
        Command::Lucas { which, n, format } => {
            let lucas = lucasnomials.lucas();
            let p = match which {
                LucasWhich::F => lucas.fib(n),
                LucasWhich::L => lucas.companion(n),
                LucasWhich::Factorial => lucas.factorial(n),
            };
            writeln!(out, "{}", render_poly(&p, format))?;
        }
        Command::Lucasnomial { n, k, method, format } => {
            let p = lucasnomials.compute(method.into(), n, k)?;
            writeln!(out, "{}", render_poly(&p, format))?;
        }
        Command::Table { max_row, format } => {
            let table = lucasnomials.table(max_row);
            match format {
                Format::Json => {
                    let doc = json!({ "rows": table.rows() });
                    writeln!(out, "{doc}")?;
                }
                Format::Text | Format::Latex => {
                    for (n, row) in table.rows().iter().enumerate() {
                        for (k, p) in row.iter().enumerate() {
                            writeln!(out, "{n} {k}: {}", render_poly(p, format))?;
                        }
                    }
                }
            }
        }
        Command::Tilings { kind, n, weights } => {
            let kind: TilingKind = kind.into();
            let mut sum = BivariatePolynomial::zero();
            for t in enumerate(kind, n) {
                if weights {
                    let w = t.weight();
                    writeln!(out, "{t}\t{w}")?;
                    sum += &w;
                } else {
                    writeln!(out, "{t}")?;
                }
            }
            if weights {
                writeln!(out, "sum\t{sum}")?;
            }
        }
        Command::Partitions { m, n, complement } => {
            for lam in enumerate_in_rect(m, n) {
                if complement {
                    writeln!(out, "{lam}\t{}", lam.complement())?;
                } else {
                    writeln!(out, "{lam}")?;
                }
            }
        }
        Command::Verify {
            what,
            m_max,
            n_max,
            mode,
            flavor,
            parallel,
            format,
        } => {
            let verifier = Verifier::new(lucasnomials);
            let text = format == ReportFormat::Text;
            let mut sink_err = None;
            let mut emit = |c: &crate::report::CaseOutcome| {
                if text && sink_err.is_none() {
                    if let Err(e) = writeln!(out, "{c}") {
                        sink_err = Some(e);
                    }
                }
            };
            let report = match what {
                VerifyWhat::Lemma1 => {
                    let (m_max, n_max) = (m_max.unwrap_or(12), n_max.unwrap_or(12));
                    let mut report = IdentityReport::new(
                        "lemma1",
                        format!("1<=m<={m_max}, 0<=n<={n_max}"),
                    );
                    for m in 1..=m_max as i64 {
                        for n in 0..=n_max as i64 {
                            let part = verifier.lucasnomials().lucas().check_lemma1(m, n)?;
                            part.cases.iter().for_each(&mut emit);
                            report.absorb(part);
                        }
                    }
                    report
                }
                VerifyWhat::Recursions => {
                    if m_max.is_some() {
                        return Err(Failure::Usage(
                            "verify recursions takes --n-max as the bound on m + n; --m-max is not used"
                                .into(),
                        ));
                    }
                    verifier.verify_recursions_with(n_max.unwrap_or(12), &mut emit)
                }
                VerifyWhat::Theorem => {
                    let mode = match mode {
                        ModeArg::Enumerate => Mode::Enumerate,
                        ModeArg::Gf => Mode::Gf,
                    };
                    let flavors = match flavor {
                        FlavorArg::Linear => FlavorSelection::Linear,
                        FlavorArg::Circular => FlavorSelection::Circular,
                        FlavorArg::Both => FlavorSelection::Both,
                    };
                    verifier.verify_theorem_with(
                        m_max.unwrap_or(5),
                        n_max.unwrap_or(5),
                        flavors,
                        mode,
                        parallel,
                        &mut emit,
                    )?
                }
            };
            if let Some(e) = sink_err {
                return Err(e.into());
            }
            if text {
                if let Some(f) = report.first_failure() {
                    let params: Vec<String> =
                        f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    writeln!(
                        out,
                        "first failure: {} {}: lhs = {}, rhs = {}",
                        f.identity,
                        params.join(" "),
                        f.lhs,
                        f.rhs
                    )?;
                }
                writeln!(out, "{}", report.summary_line())?;
            } else {
                let doc = json!({ "passed": report.passed(), "report": report });
                writeln!(out, "{doc}")?;
            }
            return Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
        Command::Specialize { n, k, preset, ell } => {
            let preset = match (preset, ell) {
                (PresetArg::Lnomial, Some(l)) => Preset::Lnomial(l),
                (PresetArg::Lnomial, None) => {
                    return Err(Failure::Usage("--preset lnomial requires --ell".into()))
                }
                (_, Some(_)) => {
                    return Err(Failure::Usage("--ell only applies to --preset lnomial".into()))
                }
                (PresetArg::Fibonomial, None) => Preset::Fibonomial,
                (PresetArg::Qbinomial, None) => Preset::QBinomial,
            };
            writeln!(out, "{}", specialize(&lucasnomials, n, k, preset)?)?;
        }
    }
    Ok(EXIT_OK)
}
