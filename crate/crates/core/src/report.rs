//! Verification reports and their JSON / markdown emission.

use std::collections::BTreeMap;
use std::fmt::{self, Display, Write as _};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::hecke::HeckeElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// The offending term (basis word, matrix entry, ...) and its residual.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub term: String,
    pub residual: String,
}

impl Witness {
    pub fn new(term: impl Into<String>, residual: impl Into<String>) -> Self {
        Self {
            term: term.into(),
            residual: residual.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Wall time; kept out of the serialized result body.
    #[serde(skip)]
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(check_id: impl Into<String>) -> Self {
        Self {
            check_id: check_id.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witness: None,
            note: None,
            elapsed_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn pass(mut self) -> Self {
        self.status = Status::Pass;
        self.witness = None;
        self
    }

    pub fn fail(mut self, witness: Witness) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness);
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.note = Some(reason.into());
        self
    }

    /// Pass when `witness` is `None`, fail otherwise.
    pub fn outcome(self, witness: Option<Witness>) -> Self {
        match witness {
            None => self.pass(),
            Some(w) => self.fail(w),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_ok(&self) -> bool {
        self.status != Status::Fail
    }

    fn sort_key(&self) -> (&str, &BTreeMap<String, String>) {
        (&self.check_id, &self.params)
    }
}

/// Runs `f` and stamps the elapsed time on every report it returns.
pub fn timed<F>(f: F) -> Vec<VerificationReport>
where
    F: FnOnce() -> Vec<VerificationReport>,
{
    let start = Instant::now();
    let mut out = f();
    let ms = start.elapsed().as_millis() as u64;
    for r in &mut out {
        r.elapsed_ms = ms;
    }
    out
}

pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

pub fn all_ok(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::is_ok)
}

/// First basis word where two elements differ, with the difference.
pub fn hecke_difference<R: Field + Display>(lhs: &HeckeElement<R>, rhs: &HeckeElement<R>) -> Option<Witness> {
    if lhs.order() != rhs.order() {
        return Some(Witness::new(
            "order",
            format!("{} vs {}", lhs.order(), rhs.order()),
        ));
    }
    let diff = lhs.sub(rhs);
    diff.terms()
        .iter()
        .next()
        .map(|(w, c)| Witness::new(w.to_string(), c.to_string()))
}

/// Witness for a numeric residual above tolerance.
pub fn tolerance_witness(term: impl Into<String>, residual: f64, tolerance: f64) -> Option<Witness> {
    if residual.is_finite() && residual <= tolerance {
        None
    } else {
        Some(Witness::new(term, format!("{:e}", residual)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

/// Reports plus run metadata as emitted by the command-line driver.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Document {
    pub meta: Meta,
    pub results: Vec<VerificationReport>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub flags: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<BTreeMap<String, u64>>,
}

impl Document {
    pub fn new(mut results: Vec<VerificationReport>, flags: BTreeMap<String, String>, timings: bool) -> Self {
        sort_reports(&mut results);
        let elapsed = timings.then(|| {
            let mut m = BTreeMap::new();
            for r in &results {
                *m.entry(r.check_id.clone()).or_insert(0) += r.elapsed_ms;
            }
            m
        });
        Self {
            meta: Meta {
                version: env!("CARGO_PKG_VERSION").to_string(),
                flags,
                elapsed,
            },
            results,
        }
    }
}

pub fn emit_report(doc: &Document, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Markdown => emit_markdown(doc),
    }
}

/// Short statement of what each check family asserts.
pub fn describe_check(check_id: &str) -> &'static str {
    let family = family_of(check_id);
    match family.as_str() {
        "hecke-axioms" => "quadratic and braid relations of H_n(q)",
        "lemma-2.1" => "A_n absorbs generators; A_n^2 = n!_q A_n; E_n central idempotent",
        "lemma-2.1-bn" => "right-handed recursion B_n equals A_n",
        "alpha-ak" => "alpha(A_k) = q^{k(k-1)/2} A_{-k}",
        "cor-2.2" => "nilpotency of A_n at roots of unity",
        "thm-3.3" => "trace ladder: Gram rank, positivity, lambda classification",
        "markov-oracle" => "iterated left inverse equals the Markov trace",
        "prop-4.1" => "image dimension equals Young diagram count",
        "prop-4.3" => "e_q selfadjoint iff q > 0",
        "prop-4.4" => "permutation operator recovered at |q| = 1",
        "lemma-5.1" => "quantum determinant identities",
        "lemma-5.4" => "partial contractions of S",
        "thm-5.5" => "conjugate equations (cleared form)",
        "lemma-5.6" => "k-fold contractions of S",
        "braiding-6.4" => "braided exchange of S",
        "special-object" => "special object conditions 6.1-6.4",
        _ => "",
    }
}

const FAMILIES: &[&str] = &[
    "hecke-axioms",
    "lemma-2.1-bn",
    "lemma-2.1",
    "alpha-ak",
    "cor-2.2",
    "thm-3.3",
    "markov-oracle",
    "prop-4.1",
    "prop-4.3",
    "prop-4.4",
    "lemma-5.1",
    "lemma-5.4",
    "thm-5.5",
    "lemma-5.6",
    "braiding-6.4",
    "special-object",
];

/// "lemma-2.1c" -> "lemma-2.1", "thm-3.3a-rank" -> "thm-3.3".
pub fn family_of(check_id: &str) -> String {
    FAMILIES
        .iter()
        .find(|f| check_id.starts_with(*f))
        .map(|f| f.to_string())
        .unwrap_or_else(|| check_id.to_string())
}

fn emit_markdown(doc: &Document) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Verification report\n");
    let _ = writeln!(s, "version {}\n", doc.meta.version);
    if doc.results.is_empty() {
        let _ = writeln!(s, "No checks were run.");
        return s;
    }

    let mut families: BTreeMap<String, (usize, usize, usize)> = BTreeMap::new();
    for r in &doc.results {
        let e = families.entry(family_of(&r.check_id)).or_default();
        match r.status {
            Status::Pass => e.0 += 1,
            Status::Fail => e.1 += 1,
            Status::Skipped => e.2 += 1,
        }
    }
    let _ = writeln!(s, "## Cross reference\n");
    let _ = writeln!(s, "| statement | checks | pass | fail | skipped |");
    let _ = writeln!(s, "|---|---|---|---|---|");
    for (fam, (p, f, k)) in &families {
        let _ = writeln!(s, "| {} | {} | {} | {} | {} |", fam, describe_check(fam), p, f, k);
    }

    let _ = writeln!(s, "\n## Results\n");
    let _ = writeln!(s, "| check | params | status |");
    let _ = writeln!(s, "|---|---|---|");
    for r in &doc.results {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        let _ = writeln!(s, "| {} | {} | {} |", r.check_id, params.join(", "), r.status);
    }

    let failures: Vec<&VerificationReport> = doc.results.iter().filter(|r| r.status == Status::Fail).collect();
    if !failures.is_empty() {
        let _ = writeln!(s, "\n## Witnesses\n");
        for r in failures {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
            let _ = writeln!(s, "### {} ({})\n", r.check_id, params.join(", "));
            if let Some(w) = &r.witness {
                let _ = writeln!(s, "```\nterm:     {}\nresidual: {}\n```\n", w.term, w.residual);
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_is_valid() {
        let doc = Document::new(vec![], BTreeMap::new(), false);
        let json = emit_report(&doc, Format::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["results"].as_array().unwrap().len(), 0);
        assert!(v["meta"].get("elapsed").is_none());
        assert!(emit_report(&doc, Format::Markdown).contains("No checks"));
    }

    #[test]
    fn single_pass_gives_one_row() {
        let r = VerificationReport::new("lemma-2.1a").param("n", 3).pass();
        let doc = Document::new(vec![r], BTreeMap::new(), false);
        let md = emit_report(&doc, Format::Markdown);
        assert_eq!(md.matches("| lemma-2.1a |").count(), 1);
        assert!(md.contains("| lemma-2.1 |"));
        assert!(!md.contains("Witnesses"));
    }

    #[test]
    fn failure_has_witness_block() {
        let r = VerificationReport::new("lemma-5.1c").fail(Witness::new("[2 1]", "mu"));
        let doc = Document::new(vec![r], BTreeMap::new(), false);
        let md = emit_report(&doc, Format::Markdown);
        assert!(md.contains("residual: mu"));
    }

    #[test]
    fn ordering_is_deterministic() {
        let a = VerificationReport::new("b").param("n", 2);
        let b = VerificationReport::new("a").param("n", 3);
        let c = VerificationReport::new("a").param("n", 2);
        let doc = Document::new(vec![a, b, c], BTreeMap::new(), false);
        let ids: Vec<(String, String)> = doc
            .results
            .iter()
            .map(|r| (r.check_id.clone(), r.params["n"].clone()))
            .collect();
        assert_eq!(
            ids,
            vec![
                ("a".into(), "2".into()),
                ("a".into(), "3".into()),
                ("b".into(), "2".into())
            ]
        );
    }

    #[test]
    fn elapsed_only_in_meta() {
        let mut r = VerificationReport::new("x");
        r.elapsed_ms = 17;
        let doc = Document::new(vec![r], BTreeMap::new(), true);
        let v: serde_json::Value = serde_json::from_str(&emit_report(&doc, Format::Json)).unwrap();
        assert_eq!(v["meta"]["elapsed"]["x"], 17);
        assert!(v["results"][0].get("elapsed_ms").is_none());
    }
}
