use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::registry::ClaimKind;
use super::HarnessError;

/// One failing check with its full witness; unused coordinates are `None`.
///
/// Field order is the sort order: parameters first, then the variant.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub variant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index: Option<u64>,
    pub detail: String,
    /// For theorem claims: whether an independent second path reproduced
    /// the failure.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub confirmed: Option<bool>,
}

impl Counterexample {
    pub fn at_n(n: u64, detail: impl Into<String>) -> Self {
        Counterexample {
            n: Some(n),
            detail: detail.into(),
            ..Default::default()
        }
    }

    pub fn variant(mut self, v: impl Into<String>) -> Self {
        self.variant = Some(v.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub claim: String,
    pub kind: ClaimKind,
    pub anchor: String,
    pub conjecture: bool,
    /// Inclusive `[lo, hi]` per swept parameter.
    pub ranges: BTreeMap<String, [u64; 2]>,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub counterexamples: Vec<Counterexample>,
    pub verdict: Verdict,
    /// Left out of serialized reports so they stay byte-stable.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl RunReport {
    pub fn passed_all(&self) -> bool {
        self.failed == 0
    }

    pub fn banner(&self) -> &'static str {
        match (self.passed_all(), self.conjecture) {
            (true, _) => "all checks passed",
            (false, true) => "counterexample to open conjecture",
            (false, false) if self.counterexamples.iter().any(|c| c.confirmed == Some(false)) => {
                "implementation bug suspected: the two evaluation paths disagree"
            }
            (false, false) => "counterexample to the stated claim, confirmed by an independent path",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(HarnessError::UnknownFormat(other.to_string())),
        }
    }
}

/// Serializes with object keys sorted, so equal reports give equal bytes.
pub fn to_json(report: &RunReport) -> Result<String, HarnessError> {
    let value = serde_json::to_value(report)?;
    let mut out = serde_json::to_string_pretty(&value)?;
    out.push('\n');
    Ok(out)
}

pub fn to_csv(report: &RunReport) -> Result<String, HarnessError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["claim", "variant", "a", "b", "m", "n", "prime", "d", "index", "detail"])?;
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    for c in &report.counterexamples {
        w.write_record([
            report.claim.clone(),
            c.variant.clone().unwrap_or_default(),
            opt(c.a),
            opt(c.b),
            opt(c.m),
            opt(c.n),
            opt(c.prime),
            opt(c.d),
            opt(c.index),
            c.detail.clone(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| HarnessError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv writer emits utf-8"))
}

const TEXT_COUNTEREXAMPLE_LIMIT: usize = 20;

pub fn to_text(report: &RunReport) -> String {
    let mut s = String::new();
    let kind = if report.conjecture { "conjecture" } else { "claim" };
    let _ = writeln!(s, "{} [{}, {kind}]", report.claim, report.kind);
    let _ = writeln!(s, "  anchor: {}", report.anchor);
    let ranges: Vec<String> = report
        .ranges
        .iter()
        .map(|(k, [lo, hi])| format!("{k} in {lo}..={hi}"))
        .collect();
    if !ranges.is_empty() {
        let _ = writeln!(s, "  ranges: {}", ranges.join(", "));
    }
    let _ = writeln!(
        s,
        "  checked {}  passed {}  failed {}  skipped {}",
        report.checked, report.passed, report.failed, report.skipped
    );
    let _ = writeln!(s, "  verdict: {}", report.banner());
    let _ = writeln!(s, "  wall time: {:.3}s", report.wall_time.as_secs_f64());
    for c in report.counterexamples.iter().take(TEXT_COUNTEREXAMPLE_LIMIT) {
        let mut coords = Vec::new();
        for (name, v) in [("a", c.a), ("b", c.b), ("m", c.m), ("n", c.n), ("p", c.prime), ("d", c.d), ("index", c.index)] {
            if let Some(v) = v {
                coords.push(format!("{name}={v}"));
            }
        }
        let variant = c.variant.as_deref().map(|v| format!(" [{v}]")).unwrap_or_default();
        let _ = writeln!(s, "    {}{variant}: {}", coords.join(" "), c.detail);
    }
    if report.counterexamples.len() > TEXT_COUNTEREXAMPLE_LIMIT {
        let _ = writeln!(
            s,
            "    ... {} more",
            report.counterexamples.len() - TEXT_COUNTEREXAMPLE_LIMIT
        );
    }
    s
}

pub fn emit_report(report: &RunReport, format: Format) -> Result<String, HarnessError> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => to_csv(report),
        Format::Text => Ok(to_text(report)),
    }
}
