//! Reports: ordered sections with a status, named facts, optional proof
//! traces and notes.
//!
//! Every number is stored once as a fact and rendered from there into both
//! the human text and the machine block, so the two cannot disagree.
//!
//! Machine block, version 1:
//!
//! ```text
//! format=knotsurf-machine/1
//! sections=2
//! section.1.title=...
//! section.1.status=pass|fail|inconclusive
//! section.1.<key>=<value>
//! summary.pass=1
//! summary.fail=0
//! summary.inconclusive=1
//! ```
//!
//! Keys are `[a-z0-9_.]+`; values run to the end of the line and never
//! contain a newline.

use std::fmt::{self, Display, Write as _};

pub const MACHINE_FORMAT: &str = "knotsurf-machine/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub title: String,
    pub status: Status,
    pub facts: Vec<(String, String)>,
    pub trace: Option<String>,
    pub notes: Vec<String>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            status: Status::Pass,
            facts: Vec::new(),
            trace: None,
            notes: Vec::new(),
        }
    }

    pub fn fact(&mut self, key: &str, value: impl Display) -> &mut Self {
        debug_assert!(key
            .chars()
            .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_' || c == '.'));
        let v = value.to_string().replace('\n', " ");
        self.facts.push((key.to_string(), v));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.facts.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Records `key = value` and fails the section unless `ok`.
    pub fn check(&mut self, key: &str, value: impl Display, ok: bool) -> &mut Self {
        self.fact(key, value);
        if !ok {
            self.fail(format!("check `{key}` failed"));
        }
        self
    }

    pub fn fail(&mut self, note: impl Into<String>) {
        self.status = Status::Fail;
        self.notes.push(note.into());
    }

    /// Downgrades a passing section; failures stay failures.
    pub fn inconclusive(&mut self, note: impl Into<String>) {
        if self.status == Status::Pass {
            self.status = Status::Inconclusive;
        }
        self.notes.push(note.into());
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub sections: Vec<Section>,
}

impl Report {
    pub fn push(&mut self, s: Section) {
        self.sections.push(s);
    }

    pub fn count(&self, status: Status) -> usize {
        self.sections.iter().filter(|s| s.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    /// 0 iff no section failed.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render_human(&self, with_traces: bool) -> String {
        let mut out = String::new();
        for s in &self.sections {
            let _ = writeln!(out, "== {} [{}]", s.title, s.status.as_str().to_uppercase());
            for (k, v) in &s.facts {
                let _ = writeln!(out, "   {k}: {v}");
            }
            for n in &s.notes {
                let _ = writeln!(out, "   note: {n}");
            }
            if with_traces {
                if let Some(t) = &s.trace {
                    out.push_str("   trace:\n");
                    for line in t.lines() {
                        let _ = writeln!(out, "   {line}");
                    }
                }
            }
        }
        let _ = writeln!(
            out,
            "-- {} pass, {} fail, {} inconclusive",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Inconclusive)
        );
        out
    }

    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "format={MACHINE_FORMAT}");
        let _ = writeln!(out, "sections={}", self.sections.len());
        for (i, s) in self.sections.iter().enumerate() {
            let n = i + 1;
            let _ = writeln!(out, "section.{n}.title={}", s.title);
            let _ = writeln!(out, "section.{n}.status={}", s.status);
            for (k, v) in &s.facts {
                let _ = writeln!(out, "section.{n}.{k}={v}");
            }
        }
        for st in [Status::Pass, Status::Fail, Status::Inconclusive] {
            let _ = writeln!(out, "summary.{st}={}", self.count(st));
        }
        out
    }
}

/// Parses a version-1 machine block back into `(key, value)` pairs.
pub fn parse_machine(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(l) if l == format!("format={MACHINE_FORMAT}") => {}
        other => return Err(format!("unexpected header {other:?}")),
    }
    lines
        .map(|l| {
            l.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| format!("not key=value: {l:?}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_and_machine_share_facts() {
        let mut s = Section::new("demo");
        s.fact("betti", 0).fact("torsion", "[]");
        s.check("index", 168, true);
        let mut r = Report::default();
        r.push(s);
        let mut bad = Section::new("bad");
        bad.check("det", 2, false);
        r.push(bad);
        assert_eq!(r.exit_code(), 1);
        let human = r.render_human(false);
        assert!(human.contains("== demo [PASS]\n   betti: 0\n"));
        assert!(human.contains("== bad [FAIL]"));
        let machine = parse_machine(&r.render_machine()).unwrap();
        assert!(machine.contains(&("section.1.index".into(), "168".into())));
        assert!(machine.contains(&("section.2.status".into(), "fail".into())));
        assert!(machine.contains(&("summary.fail".into(), "1".into())));
    }

    #[test]
    fn inconclusive_does_not_fail() {
        let mut s = Section::new("x");
        s.inconclusive("overflow");
        assert_eq!(s.status, Status::Inconclusive);
        let mut r = Report::default();
        r.push(s);
        assert_eq!(r.exit_code(), 0);
    }
}
