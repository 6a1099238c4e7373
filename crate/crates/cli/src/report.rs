//! Report schema and serialization.
//!
//! JSON layout (keys in this order):
//!
//! ```text
//! { "tool", "version",
//!   "config":  { "command", "p", "k", "m", "max_card", "max_hyperplanes",
//!                "catalog", "format", "workers", "timing" },
//!   "records": [ { "check", "subject", "status",
//!                  "witnesses": [ { "note", "hyperplane", "elements" } ],
//!                  "facts": { ... }, "timing_ms"? } ],
//!   "skipped": [ "subject: reason" ],
//!   "summary": { "records", "consistent", "exception_witnessed", "falsified" } }
//! ```
//!
//! Field elements are canonical encodings `Σ c_i p^i`; algebra elements and
//! hyperplane functionals use the mixed-radix encoding of their coordinates
//! (coordinate 0 least significant) and the list of coordinate encodings
//! respectively. CSV has one row per record with columns
//! `check,subject,status,witnesses,facts,timing_ms`.

use std::io::Write;

use normbasis::Status;
use serde::{Serialize, Serializer};
use serde_json::{Map, Value};

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub command: String,
    pub p: Option<u64>,
    pub k: u64,
    pub m: Option<u64>,
    pub max_card: u64,
    pub max_hyperplanes: u64,
    pub catalog: String,
    pub format: String,
    pub workers: usize,
    pub timing: bool,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct WitnessRecord {
    pub note: String,
    pub hyperplane: Option<Vec<u64>>,
    pub elements: Vec<u64>,
}

impl WitnessRecord {
    pub fn note(note: impl Into<String>) -> Self {
        Self {
            note: note.into(),
            ..Self::default()
        }
    }

    pub fn element(note: impl Into<String>, e: u64) -> Self {
        Self {
            note: note.into(),
            hyperplane: None,
            elements: vec![e],
        }
    }
}

fn status_label<S: Serializer>(s: &Status, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(s.label())
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub check: String,
    pub subject: String,
    #[serde(serialize_with = "status_label")]
    pub status: Status,
    pub witnesses: Vec<WitnessRecord>,
    pub facts: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Record {
    pub fn new(check: &str, subject: &str) -> Self {
        Self {
            check: check.to_string(),
            subject: subject.to_string(),
            status: Status::Consistent,
            witnesses: Vec::new(),
            facts: Map::new(),
            timing_ms: None,
        }
    }

    pub fn fact(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.facts.insert(key.to_string(), value.into());
        self
    }

    /// Marks the record FALSIFIED unless `ok`, attaching `witness` on failure.
    pub fn require(&mut self, ok: bool, witness: WitnessRecord) -> &mut Self {
        if !ok {
            self.status = Status::Falsified;
            self.witnesses.push(witness);
        }
        self
    }
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub records: usize,
    pub consistent: usize,
    pub exception_witnessed: usize,
    pub falsified: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub config: ConfigEcho,
    pub records: Vec<Record>,
    pub skipped: Vec<String>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: ConfigEcho, records: Vec<Record>, skipped: Vec<String>) -> Self {
        let mut summary = Summary {
            records: records.len(),
            ..Summary::default()
        };
        for r in &records {
            match r.status {
                Status::Consistent => summary.consistent += 1,
                Status::ExceptionWitnessed => summary.exception_witnessed += 1,
                Status::Falsified => summary.falsified += 1,
            }
        }
        Self {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            records,
            skipped,
            summary,
        }
    }

    pub fn any_falsified(&self) -> bool {
        self.summary.falsified > 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn witness_cell(w: &WitnessRecord) -> String {
    let mut parts = vec![w.note.clone()];
    if let Some(h) = &w.hyperplane {
        parts.push(format!("hyperplane={h:?}"));
    }
    if !w.elements.is_empty() {
        parts.push(format!("elements={:?}", w.elements));
    }
    parts.join(" ")
}

pub fn emit_report(report: &Report, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["check", "subject", "status", "witnesses", "facts", "timing_ms"])?;
            for r in &report.records {
                let witnesses: Vec<String> = r.witnesses.iter().map(witness_cell).collect();
                let facts: Vec<String> = r
                    .facts
                    .iter()
                    .map(|(k, v)| format!("{k}={}", compact(v)))
                    .collect();
                let timing = r.timing_ms.map(|t| t.to_string()).unwrap_or_default();
                w.write_record([
                    r.check.as_str(),
                    r.subject.as_str(),
                    r.status.label(),
                    &witnesses.join("; "),
                    &facts.join("; "),
                    &timing,
                ])?;
            }
            w.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn echo() -> ConfigEcho {
        ConfigEcho {
            command: "probe".into(),
            p: None,
            k: 1,
            m: None,
            max_card: 1,
            max_hyperplanes: 1,
            catalog: "default".into(),
            format: "json".into(),
            workers: 1,
            timing: false,
        }
    }

    #[test]
    fn empty_report_has_zero_summary() {
        let r = Report::new(echo(), Vec::new(), Vec::new());
        assert_eq!(r.summary, Summary::default());
        assert!(!r.any_falsified());
    }

    #[test]
    fn falsified_record_keeps_witness_encodings() {
        let mut rec = Record::new("x", "y");
        rec.require(false, WitnessRecord::element("bad", 42));
        let r = Report::new(echo(), vec![rec], Vec::new());
        assert!(r.any_falsified());
        let mut buf = Vec::new();
        emit_report(&r, Format::Json, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\"FALSIFIED\"") && text.contains("42"));
        let mut buf = Vec::new();
        emit_report(&r, Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().nth(1).unwrap().contains("elements=[42]"));
    }
}
