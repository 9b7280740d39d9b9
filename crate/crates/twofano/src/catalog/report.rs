use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::Rational;
use crate::classifier::FanoStatus;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessReport {
    pub description: String,
    #[serde(with = "crate::algebra::rational_str")]
    pub expected: Rational,
    /// `None` when the computation failed.
    pub got: Option<String>,
    pub pass: bool,
}

impl WitnessReport {
    pub fn new(description: &str, expected: Rational, got: Option<Rational>) -> WitnessReport {
        let pass = got.as_ref() == Some(&expected);
        WitnessReport { description: description.into(), expected, got: got.map(|g| g.to_string()), pass }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub expected: FanoStatus,
    pub status: Option<FanoStatus>,
    pub witnesses: Vec<WitnessReport>,
    pub rule_chain: Vec<String>,
    pub notes: Vec<String>,
    pub error: Option<String>,
    pub pass: bool,
}

impl EntryReport {
    pub(crate) fn new(id: &str, expected: FanoStatus) -> EntryReport {
        EntryReport {
            id: id.into(),
            expected,
            status: None,
            witnesses: Vec::new(),
            rule_chain: Vec::new(),
            notes: Vec::new(),
            error: None,
            pass: false,
        }
    }

    pub(crate) fn finish(&mut self) {
        self.pass = self.error.is_none() && self.status == Some(self.expected) && self.witnesses.iter().all(|w| w.pass);
    }

    fn status_str(&self) -> &'static str {
        self.status.map_or("error", FanoStatus::as_str)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub entries: Vec<EntryReport>,
    pub passed: usize,
    pub failed: usize,
    /// Passing entries whose status is Open.
    pub open: usize,
}

impl Summary {
    pub fn new(entries: Vec<EntryReport>) -> Summary {
        let passed = entries.iter().filter(|e| e.pass).count();
        let open = entries.iter().filter(|e| e.pass && e.status == Some(FanoStatus::Open)).count();
        Summary { failed: entries.len() - passed, passed, open, entries }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let mark = if e.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{mark} {} status={} expected={}", e.id, e.status_str(), e.expected);
            for w in &e.witnesses {
                let got = w.got.as_deref().unwrap_or("error");
                let m = if w.pass { "ok" } else { "MISMATCH" };
                let _ = writeln!(s, "    witness {}: got {got}, expected {} [{m}]", w.description, w.expected);
            }
            for r in &e.rule_chain {
                let _ = writeln!(s, "    rule {r}");
            }
            for n in &e.notes {
                let _ = writeln!(s, "    note {n}");
            }
            if let Some(err) = &e.error {
                let _ = writeln!(s, "    error {err}");
            }
        }
        let _ = writeln!(s, "{} entries: {} passed, {} failed, {} open", self.entries.len(), self.passed, self.failed, self.open);
        s
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("id\tstatus\twitness\texpected\tgot\tpass\n");
        for e in &self.entries {
            let got = e.status_str();
            let _ = writeln!(s, "{}\t{got}\tstatus\t{}\t{got}\t{}", e.id, e.expected, e.pass);
            for w in &e.witnesses {
                let _ = writeln!(
                    s,
                    "{}\t{got}\t{}\t{}\t{}\t{}",
                    e.id,
                    w.description.replace('\t', " "),
                    w.expected,
                    w.got.as_deref().unwrap_or("error"),
                    w.pass
                );
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
