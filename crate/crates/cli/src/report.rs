//! Suite reports: per-case records with pass/fail/skipped/finding status,
//! rendered as TSV (default) or the JSON schema used by CI gates.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Finding,
}

#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub got: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub finding: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report {
            suite: suite.to_string(),
            cases: Vec::new(),
            summary: Summary {
                pass: 0,
                fail: 0,
                skipped: 0,
                finding: 0,
            },
        }
    }

    pub fn push(&mut self, id: impl Into<String>, status: Status, expected: impl Into<String>, got: impl Into<String>) {
        match status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Skipped => self.summary.skipped += 1,
            Status::Finding => self.summary.finding += 1,
        }
        self.cases.push(Case {
            id: id.into(),
            status,
            expected: expected.into(),
            got: got.into(),
            runtime_ms: None,
        });
    }

    pub fn check(&mut self, id: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) {
        let expected = expected.into();
        let got = got.into();
        let status = if expected == got {
            Status::Pass
        } else {
            Status::Fail
        };
        self.push(id, status, expected, got);
    }

    pub fn check_bool(&mut self, id: impl Into<String>, ok: bool, expected: impl Into<String>, got: impl Into<String>) {
        self.push(id, if ok { Status::Pass } else { Status::Fail }, expected, got);
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// Attach wall-clock times (disabled by default so that repeated runs are
    /// byte-identical).
    pub fn with_timing(&mut self, ms: u128) {
        if let Some(last) = self.cases.last_mut() {
            last.runtime_ms = Some(ms);
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# suite\t{}\n", self.suite));
        for c in &self.cases {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skipped => "skipped",
                Status::Finding => "finding",
            };
            out.push_str(&format!("{}\t{}\t{}\t{}\n", c.id, status, c.expected, c.got));
        }
        out.push_str(&format!(
            "# summary\tpass={}\tfail={}\tskipped={}\tfinding={}\n",
            self.summary.pass, self.summary.fail, self.summary.skipped, self.summary.finding
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
