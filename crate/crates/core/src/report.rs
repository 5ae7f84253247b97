//! Verdicts and the line-oriented `key = value` report format.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(String),
    Skipped(String),
}

impl Verdict {
    pub fn from_bool(ok: bool, why: impl Into<String>) -> Verdict {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Fails(why.into())
        }
    }

    /// Budget exhaustion becomes `skipped(budget)`; other errors propagate.
    pub fn from_result(r: Result<bool>, why: impl Into<String>) -> Result<Verdict> {
        match r {
            Ok(ok) => Ok(Verdict::from_bool(ok, why)),
            Err(e) if is_budget(&e) => Ok(Verdict::Skipped("budget".into())),
            Err(e) => Err(e),
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

pub(crate) fn is_budget(e: &Error) -> bool {
    matches!(e, Error::BudgetExceeded(_) | Error::SaturationCap(_))
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails(_) => write!(f, "fails"),
            Verdict::Skipped(reason) => write!(f, "skipped({reason})"),
        }
    }
}

/// A sorted `key = value` document. Verdict keys are tracked so the exit
/// status can be derived from the report alone.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: BTreeMap<String, String>,
    verdicts: BTreeMap<String, Verdict>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.entries.insert(key.into(), escape(&value.to_string()));
    }

    pub fn verdict(&mut self, key: impl Into<String>, v: Verdict) {
        let key = key.into();
        if let Verdict::Fails(why) = &v {
            if !why.is_empty() {
                self.set(format!("{key}.detail"), why);
            }
        }
        self.set(key.clone(), &v);
        self.verdicts.insert(key, v);
    }

    /// Copies every entry of `other` under `prefix.`.
    pub fn merge(&mut self, prefix: &str, other: Report) {
        for (k, v) in other.entries {
            self.entries.insert(format!("{prefix}.{k}"), v);
        }
        for (k, v) in other.verdicts {
            self.verdicts.insert(format!("{prefix}.{k}"), v);
        }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn verdicts(&self) -> impl Iterator<Item = (&str, &Verdict)> {
        self.verdicts.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn has_failure(&self) -> bool {
        self.verdicts.values().any(Verdict::is_failure)
    }

    pub fn to_machine(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }

    /// Indented human-readable rendering grouped by the first key segment.
    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let mut section = "";
        for (k, v) in &self.entries {
            let (head, rest) = k.split_once('.').unwrap_or(("", k.as_str()));
            if head != section {
                if !head.is_empty() {
                    out.push_str(&format!("[{head}]\n"));
                }
                section = head;
            }
            let indent = if head.is_empty() { "" } else { "  " };
            out.push_str(&format!("{indent}{rest}: {v}\n"));
        }
        out
    }

    /// Parses the output of [`Report::to_machine`]. Verdict tracking is
    /// rebuilt from values of the form `holds`, `fails`, `skipped(..)`.
    pub fn parse_machine(text: &str) -> Result<Report> {
        let mut report = Report::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once(" = ") else {
                return Err(Error::Parse {
                    line: i + 1,
                    column: 1,
                    message: "expected `key = value`".into(),
                });
            };
            report.entries.insert(k.to_string(), v.to_string());
            let verdict = match v {
                "holds" => Some(Verdict::Holds),
                "fails" => Some(Verdict::Fails(String::new())),
                s if s.starts_with("skipped(") && s.ends_with(')') => {
                    Some(Verdict::Skipped(s["skipped(".len()..s.len() - 1].to_string()))
                }
                _ => None,
            };
            if let Some(v) = verdict {
                report.verdicts.insert(k.to_string(), v);
            }
        }
        Ok(report)
    }
}

fn escape(s: &str) -> String {
    s.replace('\n', " ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_round_trip() {
        let mut r = Report::new();
        r.set("b.value", "x0^2 - x1");
        r.verdict("a.check", Verdict::Holds);
        r.verdict("c.skip", Verdict::Skipped("budget".into()));
        r.verdict("d.bad", Verdict::Fails(String::new()));
        let text = r.to_machine();
        assert!(text.starts_with("a.check = holds\n"));
        let back = Report::parse_machine(&text).unwrap();
        assert_eq!(back.to_machine(), text);
        assert!(back.has_failure());
        assert_eq!(back.verdicts().count(), 3);
    }

    #[test]
    fn budget_errors_become_skips() {
        let v = Verdict::from_result(Err(Error::BudgetExceeded("pairs".into())), "").unwrap();
        assert_eq!(v.to_string(), "skipped(budget)");
        assert!(Verdict::from_result(Err(Error::NotInIdeal), "").is_err());
    }
}
