//! `borel` — classify monomial ideals and compute their regularity.
//!
//! Reads an ideal description (see [`parse`]) from stdin or `--input FILE`,
//! runs one subcommand, and prints a text report or, with `--json`, a JSON
//! object with the fixed shape
//! `{"command", "n", "generators", "result", "evidence"}`.
//!
//! Exit codes: 0 — success; 1 — internal contract violation (e.g. the
//! regularity methods disagree); 2 — bad input or an unmet precondition
//! (parse errors, non-Borel-type input to a method that requires it, ...).

mod parse;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use borel_kernel::structure::borel_type_failure;
use borel_kernel::{
    ass_primes, dfixed_sum, is_ass_chain, is_d_fixed, is_stable, is_strongly_stable, regularity,
    regularity_ceiling, KernelError, Monomial, MonomialIdeal, PrincipalSpec, RegularityMethod,
};
use parse::{parse_document, parse_monomial_text, resolve_dseq, IdealDocument};

#[derive(Parser)]
#[command(
    name = "borel",
    version,
    about = "Classification and regularity of monomial ideals",
    after_help = "The input document looks like:\n\n    ring 4\n    x1^7, x1^5 x2, x1^2 x2^4\n\nLines starting with '#' are comments; 'dseq name = 1|2|4' declares a\nd-sequence that --dseq flags can reference by name."
)]
struct Cli {
    /// Read the ideal description from FILE instead of stdin.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a structural property of the ideal.
    Check {
        #[arg(long, value_enum)]
        property: Property,
        /// d-sequence for `--property d-fixed` (literal like 1,2 or a name
        /// declared in the document).
        #[arg(long)]
        dseq: Option<String>,
    },
    /// Castelnuovo-Mumford regularity.
    Reg {
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// The sequential saturation chain and its s-values.
    Chain,
    /// Numerator of the Hilbert series of S/I.
    Hilbert,
    /// Associated primes of S/I.
    Ass,
    /// Expand the principal d-fixed ideal of a monomial.
    DfixedExpand {
        /// Generator, e.g. "x3^4".
        #[arg(long)]
        monomial: String,
        /// d-sequence (literal or declared name).
        #[arg(long)]
        dseq: String,
    },
    /// Closed-form regularity of a principal d-fixed ideal.
    DfixedReg {
        /// Generator, e.g. "x3^4".
        #[arg(long)]
        monomial: String,
        /// d-sequence (literal or declared name).
        #[arg(long)]
        dseq: String,
    },
    /// The regularity ceiling n*(deg(I)-1)+1.
    Bound,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Property {
    BorelType,
    Stable,
    StronglyStable,
    DFixed,
    AssChain,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Method {
    Chain,
    Truncation,
    Oracle,
    All,
}

/// A failure with the exit code it maps to.
struct AppError {
    code: u8,
    message: String,
}

impl AppError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<KernelError> for AppError {
    fn from(e: KernelError) -> Self {
        let code = match e {
            // The caller can fix these: the input does not meet the
            // method's hypotheses or is malformed.
            KernelError::NotProper
            | KernelError::NotBorelType { .. }
            | KernelError::TruncationHypothesisUnmet { .. }
            | KernelError::RenumberingWouldApply { .. }
            | KernelError::InvalidDSequence { .. }
            | KernelError::ScaleGuardExceeded { .. }
            | KernelError::RestrictOutOfRange { .. } => 2,
            // These indicate a broken internal contract.
            KernelError::MethodDisagreement { .. }
            | KernelError::InexactDivision { .. }
            | KernelError::TruncationBoundExceeded { .. } => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// The fixed report shape shared by every command.
#[derive(Serialize)]
struct Report {
    command: String,
    n: usize,
    generators: Vec<String>,
    result: Value,
    evidence: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn read_document(cli: &Cli) -> Result<IdealDocument, AppError> {
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| AppError::input(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| AppError::input(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    parse_document(&text).map_err(|e| AppError::input(e.to_string()))
}

fn generator_strings(ideal: &MonomialIdeal) -> Vec<String> {
    ideal.generators().iter().map(|g| g.to_string()).collect()
}

fn require_proper(ideal: &MonomialIdeal, what: &str) -> Result<(), AppError> {
    if ideal.is_proper_nonzero() {
        Ok(())
    } else {
        Err(AppError::input(format!(
            "{what} needs a proper nonzero ideal, not (0) or (1)"
        )))
    }
}

fn emit(cli: &Cli, report: Report, text: Vec<String>) -> Result<(), AppError> {
    if cli.json {
        let rendered = serde_json::to_string_pretty(&report).map_err(|e| AppError {
            code: 1,
            message: format!("cannot serialize the report: {e}"),
        })?;
        println!("{rendered}");
    } else {
        for line in text {
            println!("{line}");
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), AppError> {
    let doc = read_document(cli)?;
    let ideal = &doc.ideal;
    let n = doc.n;
    let header = vec![
        format!("ring: {n} variable{}", if n == 1 { "" } else { "s" }),
        format!("ideal: {ideal}"),
    ];

    match &cli.command {
        Command::Check { property, dseq } => {
            let (name, value, evidence) = match property {
                Property::BorelType => {
                    let failure = borel_type_failure(ideal);
                    (
                        "borel-type",
                        failure.is_none(),
                        match failure {
                            Some(j) => json!({ "failing_variable": j }),
                            None => json!({}),
                        },
                    )
                }
                Property::Stable => ("stable", is_stable(ideal), json!({})),
                Property::StronglyStable => ("strongly-stable", is_strongly_stable(ideal), json!({})),
                Property::DFixed => {
                    let flag = dseq.as_deref().ok_or_else(|| {
                        AppError::input("--dseq is required for --property d-fixed")
                    })?;
                    let d = resolve_dseq(flag, &doc).map_err(AppError::input)?;
                    require_proper(ideal, "the d-fixed check")?;
                    (
                        "d-fixed",
                        is_d_fixed(ideal, &d),
                        json!({ "dseq": d.to_string() }),
                    )
                }
                Property::AssChain => {
                    require_proper(ideal, "associated-prime enumeration")?;
                    let primes: Vec<String> =
                        ass_primes(ideal).iter().map(|p| p.to_string()).collect();
                    ("ass-chain", is_ass_chain(ideal), json!({ "ass": primes }))
                }
            };
            let mut text = header;
            // Zero and unit ideals pass the stability-type properties by
            // convention, which keeps the closure laws exception-free.
            if !ideal.is_proper_nonzero() {
                text.push("note: trivial ideal; classified by convention".into());
            }
            text.push(format!("{name}: {value}"));
            if let Some(j) = evidence.get("failing_variable") {
                text.push(format!("  fails at variable x{j}"));
            }
            if let Some(primes) = evidence.get("ass").and_then(Value::as_array) {
                for p in primes {
                    text.push(format!("  ass: {}", p.as_str().unwrap_or_default()));
                }
            }
            emit(
                cli,
                Report {
                    command: "check".into(),
                    n,
                    generators: generator_strings(ideal),
                    result: json!(value),
                    evidence: json!({ "property": name, "detail": evidence }),
                },
                text,
            )
        }

        Command::Reg { method } => {
            let method_kernel = match method {
                Method::Chain => RegularityMethod::Chain,
                Method::Truncation => RegularityMethod::Truncation,
                Method::Oracle => RegularityMethod::Oracle,
                Method::All => RegularityMethod::All,
            };
            let report = regularity(ideal, method_kernel)?;
            let mut text = header;
            text.push(format!("regularity: {}", report.value));
            if let Some(chain) = &report.chain {
                let s: Vec<String> = chain
                    .s_values
                    .iter()
                    .map(|s| match s {
                        Some(v) => v.to_string(),
                        None => "-".into(),
                    })
                    .collect();
                text.push(format!("  chain: {} (s-values {})", chain.regularity, s.join(", ")));
            }
            if let Some(tr) = &report.truncation {
                text.push(format!(
                    "  truncation: {} (minimal stable degree {}, scanned from {}, ceiling {})",
                    tr.regularity, tr.minimal_stable_degree, tr.scan_start, tr.ceiling
                ));
            }
            if let Some(or) = &report.oracle {
                text.push(format!(
                    "  oracle: {} (witness beta_{{{}, {}}}, total degree {})",
                    or.regularity,
                    or.witness_homological_index,
                    Monomial::new(or.witness_multidegree.clone()),
                    or.witness_total_degree
                ));
            }
            let value = report.value;
            emit(
                cli,
                Report {
                    command: "reg".into(),
                    n,
                    generators: generator_strings(ideal),
                    result: json!(value),
                    evidence: serde_json::to_value(&report).unwrap_or(Value::Null),
                },
                text,
            )
        }

        Command::Chain => {
            let report = regularity(ideal, RegularityMethod::Chain)?;
            let chain = report.chain.as_ref().expect("chain method fills chain evidence");
            let mut text = header;
            for step in &chain.steps {
                text.push(format!(
                    "step {}: n_{} = {}, I_{} = {}",
                    step.ell, step.ell, step.n_ell, step.ell, step.ideal
                ));
                text.push(format!(
                    "  restricted to {} variables: {}, saturation {}",
                    step.n_ell, step.restricted, step.saturated
                ));
                match step.s {
                    Some(s) => text.push(format!("  s(J^sat/J) = {s}")),
                    None => text.push("  J^sat = J (zero quotient)".into()),
                }
            }
            text.push(format!("regularity: {}", chain.regularity));
            emit(
                cli,
                Report {
                    command: "chain".into(),
                    n,
                    generators: generator_strings(ideal),
                    result: json!(report.value),
                    evidence: serde_json::to_value(chain).unwrap_or(Value::Null),
                },
                text,
            )
        }

        Command::Hilbert => {
            let numerator = ideal.hilbert_numerator();
            let function = ideal.hilbert_function(12);
            let mut text = header;
            text.push(format!("numerator: {numerator}"));
            text.push(format!("denominator: (1 - t)^{n}"));
            text.push(format!(
                "hilbert function (degrees 0..12): {}",
                function
                    .iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            emit(
                cli,
                Report {
                    command: "hilbert".into(),
                    n,
                    generators: generator_strings(ideal),
                    result: json!({
                        "numerator_coefficients": numerator.coefficients(),
                        "denominator_power": n,
                    }),
                    evidence: json!({
                        "numerator": numerator.to_string(),
                        "hilbert_function_prefix": function,
                    }),
                },
                text,
            )
        }

        Command::Ass => {
            require_proper(ideal, "associated-prime enumeration")?;
            let primes = ass_primes(ideal);
            let strings: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
            let chain = is_ass_chain(ideal);
            let mut text = header;
            for p in &strings {
                text.push(format!("ass: {p}"));
            }
            text.push(format!("totally ordered by inclusion: {chain}"));
            emit(
                cli,
                Report {
                    command: "ass".into(),
                    n,
                    generators: generator_strings(ideal),
                    result: json!(strings),
                    evidence: json!({ "count": strings.len(), "totally_ordered": chain }),
                },
                text,
            )
        }

        Command::DfixedExpand { monomial, dseq } => {
            let (spec, expansion) = principal_spec_from_flags(&doc, monomial, dseq)?;
            let mut text = header;
            text.push(format!(
                "<{}>_{} = {}",
                spec.generator(),
                spec.dseq(),
                expansion
            ));
            text.push(format!("pardue regularity: {}", spec.pardue_regularity()));
            emit(
                cli,
                Report {
                    command: "dfixed-expand".into(),
                    n,
                    generators: generator_strings(ideal),
                    result: json!(generator_strings(&expansion)),
                    evidence: json!({
                        "spec": serde_json::to_value(&spec).unwrap_or(Value::Null),
                        "pardue_regularity": spec.pardue_regularity(),
                    }),
                },
                text,
            )
        }

        Command::DfixedReg { monomial, dseq } => {
            let (spec, _) = principal_spec_from_flags(&doc, monomial, dseq)?;
            let value = spec.pardue_regularity();
            let mut text = header;
            text.push(format!(
                "reg(<{}>_{}) = {value}",
                spec.generator(),
                spec.dseq()
            ));
            text.push(format!(
                "per-factor values D_q: {}",
                spec.dq_values()
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            emit(
                cli,
                Report {
                    command: "dfixed-reg".into(),
                    n,
                    generators: generator_strings(ideal),
                    result: json!(value),
                    evidence: json!({
                        "spec": serde_json::to_value(&spec).unwrap_or(Value::Null),
                        "dq_values": spec.dq_values(),
                    }),
                },
                text,
            )
        }

        Command::Bound => {
            require_proper(ideal, "the regularity ceiling")?;
            let deg = ideal.deg().expect("proper nonzero ideals have generators");
            let ceiling = regularity_ceiling(ideal);
            let mut text = header;
            text.push(format!(
                "regularity ceiling n*(deg(I)-1)+1 = {n}*({deg}-1)+1 = {ceiling}"
            ));
            emit(
                cli,
                Report {
                    command: "bound".into(),
                    n,
                    generators: generator_strings(ideal),
                    result: json!(ceiling),
                    evidence: json!({ "n": n, "deg": deg }),
                },
                text,
            )
        }
    }
}

/// Shared flag handling for the two d-fixed subcommands.
fn principal_spec_from_flags(
    doc: &IdealDocument,
    monomial: &str,
    dseq: &str,
) -> Result<(PrincipalSpec, MonomialIdeal), AppError> {
    let u = parse_monomial_text(monomial, doc.n)
        .map_err(|e| AppError::input(format!("--monomial: {e}")))?;
    if u.is_one() {
        return Err(AppError::input(
            "--monomial: the principal d-fixed ideal needs a monomial other than 1",
        ));
    }
    let d = resolve_dseq(dseq, doc).map_err(AppError::input)?;
    let spec = PrincipalSpec::new(u, d);
    let expansion = dfixed_sum(std::slice::from_ref(&spec));
    Ok((spec, expansion))
}
