use std::fmt::Write as _;

use dnalabel::analysis::{
    brute_force_m, brute_force_m_ell, brute_force_m_n_v, brute_force_m_v, is_repeat_free,
    minimal_period, period_upper_bound, window_set, ExecutableLabelSet,
};
use dnalabel::catalogs::{
    best_non_overlapping_code, make_reference, non_overlapping_code, non_overlapping_lower_bound,
    restrict_to_s,
};
use dnalabel::constrained::{capacity_bound, constraint_capacity, eta_closed_form, eta_dp};
use dnalabel::labeling::{label_one, label_set};
use dnalabel::{BinaryWord, Codeset, DnaSequence, Label, LabelingCodec};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::{read_arg, CliError, Report};

const EMPTY_CODESET: &str = "∅";

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn parse_seq(arg: &str) -> Result<DnaSequence, CliError> {
    read_arg(arg)?.trim().parse().map_err(usage)
}

fn parse_labels<T: std::str::FromStr<Err = dnalabel::Error>>(arg: &str) -> Result<T, CliError> {
    arg.parse().map_err(usage)
}

fn codeset_text(c: &Codeset) -> String {
    if c.is_empty() {
        EMPTY_CODESET.to_string()
    } else {
        c.to_string()
    }
}

fn codeset_json(c: &Codeset) -> Value {
    Value::from(c.iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn label(seq: &str, labels: Option<&str>, one: Option<&str>) -> Result<Report, CliError> {
    let seq = parse_seq(seq)?;
    let out = match one {
        Some(l) => label_one(&seq, &parse_labels::<Label>(l)?),
        None => label_set(&seq, &parse_labels::<Codeset>(labels.unwrap_or(""))?),
    };
    Ok(Report {
        text: format!("{out}\n"),
        json: json!({ "sequence": seq.to_string(), "output": out.to_string() }),
    })
}

fn resolve_reference(
    n: Option<usize>,
    ell: usize,
    reference: Option<&str>,
    auto: bool,
) -> Result<DnaSequence, CliError> {
    match (reference, auto) {
        (Some(r), false) => {
            let seq = parse_seq(r)?;
            if let Some(n) = n.filter(|&n| n != seq.len()) {
                return Err(usage(format!(
                    "--n {n} does not match the reference length {}",
                    seq.len()
                )));
            }
            Ok(seq)
        }
        (None, true) => {
            let n = n.ok_or_else(|| usage("--ref-auto needs --n"))?;
            Ok(make_reference(n, ell)?.sequence)
        }
        _ => Err(usage("exactly one of --ref or --ref-auto is required")),
    }
}

pub fn encode(
    n: Option<usize>,
    ell: usize,
    reference: Option<&str>,
    auto: bool,
    message: &str,
) -> Result<Report, CliError> {
    let message: BigUint = message.trim().parse().map_err(|_| {
        usage(format!(
            "invalid message {message:?}: expected a decimal integer"
        ))
    })?;
    let seq = resolve_reference(n, ell, reference, auto)?;
    let codec = LabelingCodec::new(seq, ell)?;
    let codeset = codec.encode(&message)?;
    let output = label_set(codec.reference(), &codeset);
    Ok(Report {
        text: format!("{}\n{output}\n", codeset_text(&codeset)),
        json: json!({
            "n": codec.reference().len(),
            "ell": ell,
            "reference": codec.reference().to_string(),
            "message": message.to_string(),
            "codeset": codeset_json(&codeset),
            "output": output.to_string(),
        }),
    })
}

/// Pulls the channel output out of raw input: a bare 0/1 string, encode's
/// text output (last 0/1 line), or encode's JSON document.
fn extract_output(raw: &str) -> Result<BinaryWord, CliError> {
    let trimmed = raw.trim();
    if trimmed.starts_with('{') {
        let doc: Value = serde_json::from_str(trimmed).map_err(usage)?;
        let bits = doc
            .get("output")
            .and_then(Value::as_str)
            .ok_or_else(|| usage("JSON input has no \"output\" string"))?;
        return bits.parse().map_err(usage);
    }
    let line = trimmed
        .lines()
        .map(str::trim)
        .rfind(|l| !l.is_empty() && l.chars().all(|c| c == '0' || c == '1'))
        .unwrap_or(trimmed);
    line.parse().map_err(usage)
}

pub fn decode(
    n: Option<usize>,
    ell: usize,
    reference: Option<&str>,
    auto: bool,
    output: &str,
) -> Result<Report, CliError> {
    let y = extract_output(&read_arg(output)?)?;
    let n = n.or(Some(y.len()));
    let seq = resolve_reference(n, ell, reference, auto)?;
    let codec = LabelingCodec::new(seq, ell)?;
    let message = codec.decode(&y)?;
    let codeset = codec.recover_codeset(&y)?;
    Ok(Report {
        text: format!("{message}\n"),
        json: json!({
            "n": codec.reference().len(),
            "ell": ell,
            "output": y.to_string(),
            "codeset": codeset_json(&codeset),
            "message": message.to_string(),
        }),
    })
}

fn positive(name: &'static str, v: usize) -> Result<usize, CliError> {
    if v == 0 {
        Err(usage(format!("--{name} must be positive")))
    } else {
        Ok(v)
    }
}

pub fn eta(n: usize, ell: usize) -> Result<Report, CliError> {
    let ell = positive("ell", ell)?;
    let closed = eta_closed_form(n, ell);
    let dp = eta_dp(n, ell);
    if closed != dp {
        return Err(CliError::Domain(format!(
            "counting methods disagree: closed form {closed}, dynamic program {dp}"
        )));
    }
    Ok(Report {
        text: format!("{closed}\n"),
        json: json!({ "n": n, "ell": ell, "eta": closed.to_string(), "eta_dp": dp.to_string() }),
    })
}

pub fn bounds(ell: usize, period: Option<usize>, tol: f64) -> Result<Report, CliError> {
    let ell = positive("ell", ell)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(usage(format!("--tol must be positive, got {tol}")));
    }
    let cap = capacity_bound(ell, tol)?;
    let growth = constraint_capacity(ell, tol)?;
    let floor = non_overlapping_lower_bound(ell)?;
    let mut text = String::new();
    writeln!(text, "capacity_bound={cap:.9}").unwrap();
    writeln!(text, "constraint_capacity={growth:.9}").unwrap();
    writeln!(text, "non_overlapping_lower_bound={floor}").unwrap();
    let mut json = json!({
        "ell": ell,
        "capacity_bound": cap,
        "constraint_capacity": growth,
        "non_overlapping_lower_bound": floor.to_string(),
    });
    if let Some(p) = period {
        let bound = period_upper_bound(positive("period", p)?)?;
        writeln!(text, "period_upper_bound={bound}").unwrap();
        json["period"] = json!(p);
        json["period_upper_bound"] = json!(bound.to_string());
    }
    Ok(Report { text, json })
}

pub fn genref(n: usize, ell: usize) -> Result<Report, CliError> {
    let ell = positive("ell", ell)?;
    let r = make_reference(n, ell)?;
    Ok(Report {
        text: format!("{}\nrepeat_free={}\n", r.sequence, r.repeat_free),
        json: json!({
            "n": n,
            "ell": ell,
            "sequence": r.sequence.to_string(),
            "repeat_free": r.repeat_free,
        }),
    })
}

pub fn analyze(seq: &str, max_ell: Option<usize>) -> Result<Report, CliError> {
    let seq = parse_seq(seq)?;
    let period = minimal_period(&seq)?;
    let max_ell = max_ell.unwrap_or(8).min(seq.len());
    let mut text = format!("period={period} length={}\n", seq.len());
    let mut rows = Vec::new();
    for ell in 1..=max_ell {
        let windows = window_set(&seq, ell)?.len();
        let rf = is_repeat_free(&seq, ell);
        writeln!(text, "ell={ell} windows={windows} repeat_free={rf}").unwrap();
        rows.push(json!({ "ell": ell, "windows": windows, "repeat_free": rf }));
    }
    Ok(Report {
        text,
        json: json!({ "sequence": seq.to_string(), "length": seq.len(), "period": period, "windows": rows }),
    })
}

pub enum OracleMode {
    M,
    MEll(usize),
    MV(String),
    MnV(String),
}

pub fn oracle(mode: OracleMode, seq: Option<&str>, n: Option<usize>) -> Result<Report, CliError> {
    let need_seq = || {
        seq.ok_or_else(|| usage("--seq is required for this oracle"))
            .and_then(parse_seq)
    };
    match mode {
        OracleMode::M => {
            let s = need_seq()?;
            let m = brute_force_m(&s)?;
            let period = minimal_period(&s)?;
            let bound = period_upper_bound(period)?;
            Ok(Report {
                text: format!("{m}\n"),
                json: json!({
                    "oracle": "M",
                    "sequence": s.to_string(),
                    "value": m,
                    "period": period,
                    "period_upper_bound": bound.to_string(),
                }),
            })
        }
        OracleMode::MEll(ell) => {
            let s = need_seq()?;
            let m = brute_force_m_ell(&s, positive("M-ell", ell)?)?;
            let eta = eta_closed_form(s.len(), ell);
            Ok(Report {
                text: format!("{m}\n"),
                json: json!({
                    "oracle": "M_ell",
                    "sequence": s.to_string(),
                    "ell": ell,
                    "value": m,
                    "eta": eta.to_string(),
                    "repeat_free": is_repeat_free(&s, ell),
                }),
            })
        }
        OracleMode::MV(v) => {
            let s = need_seq()?;
            let labels: ExecutableLabelSet = parse_labels(&v)?;
            let m = brute_force_m_v(&s, &labels)?;
            Ok(Report {
                text: format!("{m}\n"),
                json: json!({ "oracle": "M_V", "sequence": s.to_string(), "labels": labels.to_string(), "value": m }),
            })
        }
        OracleMode::MnV(v) => {
            let n = n.ok_or_else(|| usage("--n is required for --M-n-v"))?;
            let labels: ExecutableLabelSet = parse_labels(&v)?;
            let (m, best) = brute_force_m_n_v(n, &labels)?;
            Ok(Report {
                text: format!("{m} {best}\n"),
                json: json!({
                    "oracle": "M_n_V",
                    "n": n,
                    "labels": labels.to_string(),
                    "value": m,
                    "sequence": best.to_string(),
                }),
            })
        }
    }
}

pub fn catalog(ell: usize, k: Option<usize>, seq: Option<&str>) -> Result<Report, CliError> {
    let mut code = match k {
        Some(k) => non_overlapping_code(ell, k)?,
        None => best_non_overlapping_code(ell)?,
    };
    if let Some(s) = seq {
        code = restrict_to_s(&code, &parse_seq(s)?);
    }
    Ok(Report {
        text: code.to_string(),
        json: json!({
            "ell": code.ell(),
            "k": code.k(),
            "size": code.len(),
            "labels": code.labels().iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    })
}
