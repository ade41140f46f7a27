//! Assertion reports for the verify suites.

use serde::Serialize;

/// Whether an asserted value is a frozen reference number or the output of
/// an independent in-tree route being cross-checked.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Reference,
    Computed,
}

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub id: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
    pub source: Source,
}

/// One verify run: an ordered list of assertions plus the suite name.
#[derive(Serialize)]
pub struct Report {
    pub suite: String,
    pub assertions: Vec<Assertion>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            assertions: Vec::new(),
        }
    }

    /// Records an equality assertion; `pass` is supplied by the caller so
    /// tolerance-based comparisons stay at the call site.
    pub fn check(
        &mut self,
        id: impl Into<String>,
        source: Source,
        expected: impl ToString,
        actual: impl ToString,
        pass: bool,
    ) {
        self.assertions.push(Assertion {
            id: id.into(),
            pass,
            expected: expected.to_string(),
            actual: actual.to_string(),
            source,
        });
    }

    pub fn check_eq<T: PartialEq + ToString>(
        &mut self,
        id: impl Into<String>,
        source: Source,
        expected: T,
        actual: T,
    ) {
        let pass = expected == actual;
        self.check(id, source, expected.to_string(), actual.to_string(), pass);
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for a in &self.assertions {
            let status = if a.pass { "PASS" } else { "FAIL" };
            let source = match a.source {
                Source::Reference => "reference",
                Source::Computed => "computed",
            };
            out.push_str(&format!(
                "{status} {:40} expected={} actual={} [{source}]\n",
                a.id, a.expected, a.actual
            ));
        }
        let failed = self.assertions.iter().filter(|a| !a.pass).count();
        out.push_str(&format!(
            "suite {}: {} assertions, {} failed\n",
            self.suite,
            self.assertions.len(),
            failed
        ));
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,id,status,expected,actual,source\n");
        for a in &self.assertions {
            let status = if a.pass { "PASS" } else { "FAIL" };
            let source = match a.source {
                Source::Reference => "reference",
                Source::Computed => "computed",
            };
            out.push_str(&format!(
                "{},{},{status},{},{},{source}\n",
                self.suite,
                a.id,
                csv_field(&a.expected),
                csv_field(&a.actual)
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Quotes a CSV field when it contains a comma or quote.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
