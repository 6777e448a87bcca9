use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A table of string cells with the result that justifies it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub citation: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Section {
    pub fn new(title: &str, citation: &str, columns: &[&str]) -> Self {
        Section {
            title: title.to_string(),
            citation: citation.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.rows.push(cells.into_iter().map(|c| c.to_string()).collect());
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub text: String,
    pub citation: String,
}

/// One pass/fail line of the reproduction suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub section: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub citation: String,
}

/// Output of one CLI command. Every number is an exact string such as
/// `"-15/4"`; JSON keys are emitted in sorted order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub query: BTreeMap<String, String>,
    pub sections: Vec<Section>,
    pub claims: Vec<Claim>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ..Report::default()
        }
    }

    pub fn query(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.query.insert(key.to_string(), value.to_string());
        self
    }

    pub fn claim(&mut self, text: impl Into<String>, citation: &str) {
        self.claims.push(Claim {
            text: text.into(),
            citation: citation.to_string(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Pretty JSON with keys in sorted order; parsing and re-emitting it is
    /// byte-identical.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report JSON: {e}")))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{}", self.command);
        for (k, v) in &self.query {
            let _ = write!(out, "  {k}={v}");
        }
        out.push('\n');
        for s in &self.sections {
            let _ = writeln!(out, "\n{} [{}]", s.title, s.citation);
            out.push_str(&render_table(&s.columns, &s.rows));
        }
        if !self.claims.is_empty() {
            out.push('\n');
            for c in &self.claims {
                let _ = writeln!(out, "- {} [{}]", c.text, c.citation);
            }
        }
        if !self.checks.is_empty() {
            out.push('\n');
            for c in &self.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{mark} {}/{}: {} [{}]", c.section, c.name, c.detail, c.citation);
            }
            let failed = self.checks.iter().filter(|c| !c.passed).count();
            let _ = writeln!(out, "\n{} checks, {failed} failed", self.checks.len());
        }
        out
    }
}

fn render_table(columns: &[String], rows: &[Vec<String>]) -> String {
    let width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = columns.iter().map(|c| width(c)).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            if i < widths.len() {
                widths[i] = widths[i].max(width(cell));
            }
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - width(c))))
            .collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    let mut out = line(columns);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&line(&rule));
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("levels");
        r.query("hook", "3 2");
        let mut s = Section::new("conformal levels", "hook conformal levels", &["k", "tags"]);
        s.row(["-15/4", "H1"]);
        s.row(["-3", "H2=H3"]);
        r.sections.push(s);
        r.claim("three levels", "computed");
        r.checks.push(Check {
            section: "levels".into(),
            name: "solver".into(),
            passed: true,
            detail: "ok".into(),
            citation: "computed".into(),
        });
        r
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let json = sample().to_json();
        let back = Report::from_json(&json).unwrap();
        assert_eq!(back, sample());
        assert_eq!(back.to_json(), json);
        let keys: Vec<&str> = json
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        assert_eq!(keys, ["checks", "claims", "command", "query", "sections"]);
    }

    #[test]
    fn text_table_aligns() {
        let text = sample().to_text();
        assert!(text.contains("  k      tags\n"));
        assert!(text.contains("  -15/4  H1\n"));
        assert!(text.contains("PASS levels/solver"));
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(Report::from_json("{"), Err(Error::Parse(_))));
    }
}
