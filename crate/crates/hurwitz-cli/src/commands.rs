//! One function per subcommand. Each returns formatted output plus an
//! exit code, or a [`CliError`] carrying the exit code for failures.

use std::env;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use hurwitz_core::json::{AnyJet, WireScalar};
use hurwitz_core::{
    autonomous_operator, bound_flow_eval, certify, complete_bell, enumerate_partitions,
    family_flow, flow_series, image_of_family, jet_of_family, partial_bell, CoreError,
    DerivativeJet, FamilyKind, FamilySpec, FlowSeries, GaussianRational, MajorantSpec, QAlgebra,
    Rational,
};

use crate::output::{CommandOutput, Envelope, CSV_HEADER_COMMENT};
use crate::{CliError, OutputFormat};

const DEFAULT_MAX_ORDER: usize = 64;

/// Truncation cap from HURWITZ_MAX_ORDER (default 64): partition counts
/// grow superpolynomially, so unbounded orders are refused up front.
fn max_order() -> Result<usize, CliError> {
    match env::var("HURWITZ_MAX_ORDER") {
        Err(env::VarError::NotPresent) => Ok(DEFAULT_MAX_ORDER),
        Err(e) => Err(CliError::Usage(format!("HURWITZ_MAX_ORDER: {e}"))),
        Ok(text) => text.parse().map_err(|_| {
            CliError::Usage(format!(
                "HURWITZ_MAX_ORDER must be a nonnegative integer, got {text:?}"
            ))
        }),
    }
}

fn check_cap(what: &str, value: usize) -> Result<(), CliError> {
    let cap = max_order()?;
    if value > cap {
        return Err(CliError::Usage(format!(
            "{what} = {value} exceeds the HURWITZ_MAX_ORDER cap of {cap}"
        )));
    }
    Ok(())
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Core errors on user-supplied data are usage errors, except a majorant
/// hypothesis violation, which has its own exit code.
fn map_core(e: CoreError) -> CliError {
    match e {
        CoreError::HypothesisViolation { .. } => CliError::Hypothesis(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    }
}

fn require_json(format: OutputFormat, command: &str) -> Result<(), CliError> {
    if format == OutputFormat::Csv {
        return Err(CliError::Usage(format!(
            "--format csv is only supported by `flow`, not `{command}`"
        )));
    }
    Ok(())
}

fn parse_rational_list(what: &str, text: &str) -> Result<Vec<Rational>, CliError> {
    serde_json::from_str::<Vec<Rational>>(text)
        .map_err(|e| CliError::Usage(format!("{what}: expected a JSON list of rationals: {e}")))
}

fn rationals_to_json(values: &[Rational]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|v| Value::String(v.to_string()))
            .collect(),
    )
}

pub fn cmd_partitions(
    n: usize,
    parts: Option<usize>,
    format: OutputFormat,
) -> Result<CommandOutput, CliError> {
    require_json(format, "partitions")?;
    check_cap("n", n)?;
    let partitions = enumerate_partitions(n, parts).map_err(map_core)?;
    let vectors: Vec<Value> = partitions
        .iter()
        .map(|p| json!(p.multiplicities()))
        .collect();
    let envelope = Envelope::exact(
        "partitions",
        json!({ "n": n, "parts": parts }),
        json!({ "count": vectors.len(), "partitions": vectors }),
    );
    Ok(CommandOutput::ok(envelope.to_json_line()))
}

pub fn cmd_bell(
    n: usize,
    k: usize,
    b: &str,
    format: OutputFormat,
) -> Result<CommandOutput, CliError> {
    require_json(format, "bell")?;
    check_cap("n", n)?;
    let b_values = parse_rational_list("--b", b)?;
    let value = partial_bell(n, k, &b_values).map_err(map_core)?;
    let envelope = Envelope::exact(
        "bell",
        json!({ "n": n, "k": k, "b": rationals_to_json(&b_values) }),
        json!({ "value": value.to_string() }),
    );
    Ok(CommandOutput::ok(envelope.to_json_line()))
}

pub fn cmd_bell_complete(
    n: usize,
    b: &str,
    a: &str,
    format: OutputFormat,
) -> Result<CommandOutput, CliError> {
    require_json(format, "bell-complete")?;
    check_cap("n", n)?;
    let b_values = parse_rational_list("--b", b)?;
    let a_values = parse_rational_list("--a", a)?;
    let value = complete_bell(n, &b_values, &a_values).map_err(map_core)?;
    let envelope = Envelope::exact(
        "bell-complete",
        json!({
            "n": n,
            "b": rationals_to_json(&b_values),
            "a": rationals_to_json(&a_values),
        }),
        json!({ "value": value.to_string() }),
    );
    Ok(CommandOutput::ok(envelope.to_json_line()))
}

/// Ring-specific pieces of the flow command: parsing the base value and
/// rendering float rows.
trait FlowScalar: WireScalar + QAlgebra {
    fn parse_base(text: &str) -> Result<Self, CliError>;
    fn csv_columns() -> &'static str;
    fn csv_row(&self) -> String;
}

impl FlowScalar for Rational {
    fn parse_base(text: &str) -> Result<Self, CliError> {
        text.parse().map_err(usage)
    }

    fn csv_columns() -> &'static str {
        "value"
    }

    fn csv_row(&self) -> String {
        format!("{}", self.to_f64())
    }
}

impl FlowScalar for GaussianRational {
    /// Accepts the wire pair `["re","im"]` or a bare rational.
    fn parse_base(text: &str) -> Result<Self, CliError> {
        if let Ok(value) = serde_json::from_str::<GaussianRational>(text) {
            return Ok(value);
        }
        let re: Rational = text.parse().map_err(usage)?;
        Ok(GaussianRational::from_rational(re))
    }

    fn csv_columns() -> &'static str {
        "re,im"
    }

    fn csv_row(&self) -> String {
        format!("{},{}", self.re().to_f64(), self.im().to_f64())
    }
}

fn read_jet(path: &Path) -> Result<AnyJet, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    AnyJet::from_json_str(&text).map_err(usage)
}

fn parse_eval_list(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<Rational>()
                .map_err(|e| CliError::Usage(format!("--eval: {e}")))
        })
        .collect()
}

pub fn cmd_flow(
    jet_path: &Path,
    order: usize,
    base: Option<&str>,
    eval: Option<&str>,
    format: OutputFormat,
) -> Result<CommandOutput, CliError> {
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".to_owned()));
    }
    check_cap("order", order)?;
    match read_jet(jet_path)? {
        AnyJet::Rational(jet) => flow_for_ring(jet, order, base, eval, format),
        AnyJet::Gaussian(jet) => flow_for_ring(jet, order, base, eval, format),
    }
}

fn flow_for_ring<E: FlowScalar>(
    jet: DerivativeJet<E>,
    order: usize,
    base: Option<&str>,
    eval: Option<&str>,
    format: OutputFormat,
) -> Result<CommandOutput, CliError> {
    let jet = jet.prefix(order).map_err(map_core)?;
    let base = match base {
        Some(text) => E::parse_base(text)?,
        None => jet.value(0).zero_like(),
    };
    let ts = eval.map(parse_eval_list).transpose()?;
    let flow = flow_series(base, &jet);
    match format {
        OutputFormat::Json => flow_json(&jet, &flow, ts.as_deref()),
        OutputFormat::Csv => Ok(flow_csv(&flow, ts.as_deref())),
    }
}

fn flow_json<E: FlowScalar>(
    jet: &DerivativeJet<E>,
    flow: &FlowSeries<E>,
    ts: Option<&[Rational]>,
) -> Result<CommandOutput, CliError> {
    let coefficients: Vec<Value> = flow.coeffs().iter().map(|a| a.to_wire()).collect();
    let mut result = json!({
        "ring": E::RING_NAME,
        "base": flow.base().to_wire(),
        "coefficients": coefficients,
    });
    if let Some(ts) = ts {
        let sample = flow.trajectory(ts);
        let points: Vec<Value> = sample
            .t_values
            .iter()
            .zip(&sample.points)
            .map(|(t, point)| json!({ "t": t.to_string(), "value": point.to_wire() }))
            .collect();
        result["trajectory"] = Value::Array(points);
    }
    let envelope = Envelope::exact(
        "flow",
        json!({
            "jet": hurwitz_core::json::jet_to_value(jet),
            "order": flow.order(),
            "base": flow.base().to_wire(),
            "eval": ts.map(|ts| ts.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
        }),
        result,
    );
    Ok(CommandOutput::ok(envelope.to_json_line()))
}

fn flow_csv<E: FlowScalar>(flow: &FlowSeries<E>, ts: Option<&[Rational]>) -> CommandOutput {
    let mut lines = vec![CSV_HEADER_COMMENT.to_owned()];
    match ts {
        Some(ts) => {
            lines.push(format!("t,{}", E::csv_columns()));
            let sample = flow.trajectory(ts);
            for (t, point) in sample.t_values.iter().zip(&sample.points) {
                lines.push(format!("{},{}", t.to_f64(), point.csv_row()));
            }
        }
        None => {
            lines.push(format!("n,{}", E::csv_columns()));
            for (i, a) in flow.coeffs().iter().enumerate() {
                lines.push(format!("{},{}", i + 1, a.csv_row()));
            }
        }
    }
    lines.push(String::new());
    CommandOutput::ok(lines.join("\n"))
}

fn parse_family(text: &str) -> Result<FamilyKind, CliError> {
    if text == "geom" {
        return Ok(FamilyKind::Geometric);
    }
    if let Some(a) = text.strip_prefix("exp:") {
        return Ok(FamilyKind::Exponential(a.parse().map_err(usage)?));
    }
    if let Some(a) = text.strip_prefix("binom:") {
        return Ok(FamilyKind::Binomial(a.parse().map_err(usage)?));
    }
    Err(CliError::Usage(format!(
        "unknown family {text:?} (expected exp:a, geom, or binom:a)"
    )))
}

pub fn cmd_oracle(
    family: &str,
    order: usize,
    compare_recursion: bool,
    format: OutputFormat,
) -> Result<CommandOutput, CliError> {
    require_json(format, "oracle")?;
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".to_owned()));
    }
    check_cap("order", order)?;
    let spec = FamilySpec::new(parse_family(family)?, order).map_err(map_core)?;
    let closed = family_flow(&spec);
    let closed_values = image_of_family(&spec);

    let mut result = json!({
        "family": family,
        "label": closed.label,
        "closed-form": rationals_to_json(&closed_values),
    });
    let mut exit_code = 0;
    if compare_recursion {
        let recursion = autonomous_operator(&jet_of_family(&spec));
        let matches = recursion[..order] == closed_values[..];
        result["recursion"] = rationals_to_json(&recursion[..order]);
        result["match"] = Value::Bool(matches);
        if !matches {
            // cannot happen unless the recursion itself is broken
            exit_code = 4;
        }
    }
    let envelope = Envelope::exact(
        "oracle",
        json!({
            "family": family,
            "order": order,
            "compare-recursion": compare_recursion,
        }),
        result,
    );
    Ok(CommandOutput {
        text: envelope.to_json_line(),
        exit_code,
    })
}

fn parse_majorant(text: &str) -> Result<MajorantSpec, CliError> {
    if text == "fact" {
        return Ok(MajorantSpec::factorial());
    }
    if let Some(a) = text.strip_prefix("exp:") {
        return MajorantSpec::power(a.parse().map_err(usage)?).map_err(map_core);
    }
    if let Some(a) = text.strip_prefix("binom:") {
        return MajorantSpec::binomial(a.parse().map_err(usage)?).map_err(map_core);
    }
    if let Some(path) = text.strip_prefix("explicit:") {
        let body = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
        let values = parse_rational_list("explicit majorant", &body)?;
        return MajorantSpec::explicit(values).map_err(map_core);
    }
    Err(CliError::Usage(format!(
        "unknown majorant {text:?} (expected exp:a, fact, binom:a, or explicit:<file>)"
    )))
}

pub fn cmd_bound(
    jet_path: &Path,
    majorant: &str,
    order: usize,
    eval_t: Option<&str>,
    format: OutputFormat,
) -> Result<CommandOutput, CliError> {
    require_json(format, "bound")?;
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".to_owned()));
    }
    check_cap("order", order)?;
    let spec = parse_majorant(majorant)?;
    let any = read_jet(jet_path)?;
    let ring = any.ring_name();
    let (report, jet_echo) = match &any {
        AnyJet::Rational(jet) => {
            let jet = jet.prefix(order).map_err(map_core)?;
            (
                certify(&jet, &spec).map_err(map_core)?,
                hurwitz_core::json::jet_to_value(&jet),
            )
        }
        AnyJet::Gaussian(jet) => {
            let jet = jet.prefix(order).map_err(map_core)?;
            (
                certify(&jet, &spec).map_err(map_core)?,
                hurwitz_core::json::jet_to_value(&jet),
            )
        }
    };

    let mut result = json!({
        "ring": ring,
        "report": serde_json::to_value(&report).expect("report serialization cannot fail"),
    });
    if let Some(text) = eval_t {
        let t: Rational = text
            .parse()
            .map_err(|e| CliError::Usage(format!("--eval-t: {e}")))?;
        let bounds: Vec<Rational> = report.per_n.iter().map(|c| c.bound.clone()).collect();
        let value = bound_flow_eval(&bounds, &t, Some(&spec)).map_err(map_core)?;
        result["bound-flow"] = json!({ "t": t.to_string(), "value": value.to_string() });
    }

    let envelope = Envelope::exact(
        "bound",
        json!({
            "jet": jet_echo,
            "majorant": majorant,
            "order": order,
            "eval-t": eval_t,
        }),
        result,
    );
    // exit 0 iff every order certified; a false overall would mean the
    // bound theorem itself failed, which is an internal breach
    let exit_code = if report.overall { 0 } else { 4 };
    Ok(CommandOutput {
        text: envelope.to_json_line(),
        exit_code,
    })
}
