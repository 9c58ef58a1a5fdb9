//! Deterministic report rendering for the command-line interface.
//!
//! Every subcommand produces a [`Report`]: the echoed command, a structured
//! `results` value, optional availability notes, and a list of executed
//! checks with pass/fail status. A report renders to JSON (the default) or
//! Markdown; both forms are byte-identical across repeated runs because the
//! JSON maps are key-sorted and no unseeded randomness enters a report.

use serde_json::{json, Value};

/// Output format of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// Pretty-printed JSON with sorted keys.
    Json,
    /// Markdown with a fenced JSON results block and a check table.
    Md,
}

impl Format {
    /// Parses a format name ("json" or "md").
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "json" => Some(Format::Json),
            "md" => Some(Format::Md),
            _ => None,
        }
    }

    /// Resolves the effective format: an explicit flag wins, then the
    /// `EULERLAB_FORMAT` environment variable, then JSON.
    pub fn resolve(flag: Option<Format>) -> Format {
        if let Some(f) = flag {
            return f;
        }
        match std::env::var("EULERLAB_FORMAT") {
            Ok(v) => Format::parse(v.trim()).unwrap_or(Format::Json),
            Err(_) => Format::Json,
        }
    }
}

/// One executed check.
#[derive(Debug, Clone)]
pub struct Check {
    /// Short name of the check.
    pub name: String,
    /// Whether it passed.
    pub pass: bool,
    /// Human-readable detail (may be empty).
    pub detail: String,
}

/// A full subcommand report.
#[derive(Debug, Clone)]
pub struct Report {
    /// The subcommand that produced the report.
    pub command: String,
    /// Structured results.
    pub results: Value,
    /// Availability or context notes (not failures).
    pub notes: Vec<String>,
    /// Executed checks, in execution order.
    pub checks: Vec<Check>,
}

impl Report {
    /// Creates an empty report for a subcommand.
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            results: Value::Null,
            notes: Vec::new(),
            checks: Vec::new(),
        }
    }

    /// Records an executed check.
    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    /// Records an availability or context note.
    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Whether every executed check passed (vacuously true with none).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// JSON form of the whole report.
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "results": self.results,
            "notes": self.notes,
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "pass": self.passed(),
        })
    }

    /// Renders the report in the requested format.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                serde_json::to_string_pretty(&self.to_json()).expect("report serializes")
            }
            Format::Md => self.render_md(),
        }
    }

    fn render_md(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# eulerlab {}\n\n", self.command));
        for note in &self.notes {
            out.push_str(&format!("> {note}\n"));
        }
        if !self.notes.is_empty() {
            out.push('\n');
        }
        if !self.results.is_null() {
            out.push_str("```json\n");
            out.push_str(
                &serde_json::to_string_pretty(&self.results).expect("results serialize"),
            );
            out.push_str("\n```\n\n");
        }
        if !self.checks.is_empty() {
            out.push_str("| check | result | detail |\n|---|---|---|\n");
            for c in &self.checks {
                let status = if c.pass { "pass" } else { "FAIL" };
                out.push_str(&format!("| {} | {} | {} |\n", c.name, status, c.detail));
            }
            out.push('\n');
        }
        out.push_str(if self.passed() {
            "All checks passed.\n"
        } else {
            "Some checks FAILED.\n"
        });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_parsing() {
        assert_eq!(Format::parse("json"), Some(Format::Json));
        assert_eq!(Format::parse("md"), Some(Format::Md));
        assert_eq!(Format::parse("yaml"), None);
    }

    #[test]
    fn pass_status_and_render() {
        let mut r = Report::new("demo");
        r.results = json!({"b": 2, "a": 1});
        assert!(r.passed());
        r.check("first", true, "ok");
        assert!(r.passed());
        r.check("second", false, "broken");
        assert!(!r.passed());

        let rendered = r.render(Format::Json);
        // Keys are sorted, so "a" appears before "b" and output is stable.
        assert!(rendered.find("\"a\"").unwrap() < rendered.find("\"b\"").unwrap());
        assert_eq!(rendered, r.render(Format::Json));

        let md = r.render(Format::Md);
        assert!(md.starts_with("# eulerlab demo"));
        assert!(md.contains("| second | FAIL | broken |"));
        assert!(md.contains("Some checks FAILED."));
    }

    #[test]
    fn notes_render_as_blockquotes() {
        let mut r = Report::new("demo");
        r.note("availability note");
        let md = r.render(Format::Md);
        assert!(md.contains("> availability note"));
        let j = r.to_json();
        assert_eq!(j["notes"][0], "availability note");
    }
}
