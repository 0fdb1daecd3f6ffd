//! Line-oriented problem files.
//!
//! ```text
//! # Figure III premises
//! [events]
//! Human = S & M          # optional named formulas
//! [assess]
//! C / B = 0.7
//! A / B = 4/5
//! B / (A | B) = (0, 1]   # intervals may have open ends
//! [target]
//! C / A
//! [syllogism]
//! form = Darii           # or: figure = I and mood = AII
//! import = conditional
//! ```
//!
//! Values are exact: `0.3` is `3/10`. A bare formula in `[assess]` or
//! `[target]` is conditioned on the sure event.

use std::collections::HashMap;
use std::fmt::Write as _;

use syllogic::rational::{check_unit, format_rational};
use syllogic::{parse_rational, ConditionalEvent, Event, Figure, ImportKind, OpenInterval, SyllogismForm};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assessment {
    pub event: ConditionalEvent,
    pub value: OpenInterval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyllogismSpec {
    pub form: SyllogismForm,
    pub import: Option<ImportKind>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProblemFile {
    pub events: Vec<(String, Event)>,
    pub assessments: Vec<Assessment>,
    pub target: Option<ConditionalEvent>,
    pub syllogism: Option<SyllogismSpec>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Events,
    Assess,
    Target,
    Syllogism,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses `0.3`, `{1/2}`, `[0.2, 0.9]`, `(0, 1]` and the like.
pub fn parse_value(text: &str) -> Result<OpenInterval, String> {
    let s = text.trim();
    let rational = |t: &str| -> Result<_, String> {
        let r = parse_rational(t).map_err(|e| e.to_string())?;
        check_unit(&r).map_err(|e| e.to_string())?;
        Ok(r)
    };
    if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        return Ok(OpenInterval::point(rational(inner)?));
    }
    let lower_open = match s.chars().next() {
        Some('[') => false,
        Some('(') => true,
        _ => return Ok(OpenInterval::point(rational(s)?)),
    };
    let upper_open = match s.chars().last() {
        Some(']') => false,
        Some(')') => true,
        _ => return Err(format!("`{s}` lacks a closing bracket")),
    };
    let (a, b) = s[1..s.len() - 1].split_once(',').ok_or_else(|| format!("`{s}` needs two endpoints"))?;
    OpenInterval::new(rational(a)?, rational(b)?, lower_open, upper_open).map_err(|e| e.to_string())
}

/// Inverse of [`parse_value`], with exact fractions.
pub fn format_value(v: &OpenInterval) -> String {
    if v.is_point() {
        return format_rational(&v.lower);
    }
    format!(
        "{}{}, {}{}",
        if v.lower_open { '(' } else { '[' },
        format_rational(&v.lower),
        format_rational(&v.upper),
        if v.upper_open { ')' } else { ']' }
    )
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile, CliError> {
        let mut out = ProblemFile::default();
        let mut names: HashMap<String, Event> = HashMap::new();
        let mut section = Section::None;
        let (mut form, mut figure, mut mood, mut import) = (None, None, None, None);
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let err = |message: String| CliError::Parse { line: line_no, message };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                section = match name.trim().to_ascii_lowercase().as_str() {
                    "events" => Section::Events,
                    "assess" => Section::Assess,
                    "target" => Section::Target,
                    "syllogism" => Section::Syllogism,
                    other => return Err(err(format!("unknown section `[{other}]`"))),
                };
                continue;
            }
            let key_value = || line.rsplit_once('=').map(|(k, v)| (k.trim(), v.trim()));
            match section {
                Section::None => return Err(err("content before the first section".into())),
                Section::Events => {
                    let (name, formula) = key_value().ok_or_else(|| err("expected `name = formula`".into()))?;
                    if !is_identifier(name) {
                        return Err(err(format!("`{name}` is not a valid event name")));
                    }
                    let event = Event::parse_with(formula, &names).map_err(|e| err(e.to_string()))?;
                    names.insert(name.to_string(), event.clone());
                    out.events.push((name.to_string(), event));
                }
                Section::Assess => {
                    let (ev, value) = key_value().ok_or_else(|| err("expected `E / H = value`".into()))?;
                    let event = ConditionalEvent::parse_with(ev, &names).map_err(|e| err(e.to_string()))?;
                    let value = parse_value(value).map_err(err)?;
                    out.assessments.push(Assessment { event, value });
                }
                Section::Target => {
                    if out.target.is_some() {
                        return Err(err("only one target is allowed".into()));
                    }
                    out.target = Some(ConditionalEvent::parse_with(line, &names).map_err(|e| err(e.to_string()))?);
                }
                Section::Syllogism => {
                    let (key, value) = key_value().ok_or_else(|| err("expected `key = value`".into()))?;
                    let value = value.to_string();
                    match key.to_ascii_lowercase().as_str() {
                        "form" | "name" => form = Some(value),
                        "figure" => figure = Some(value),
                        "mood" => mood = Some(value),
                        "import" => import = Some(value.parse::<ImportKind>().map_err(|e| err(e.to_string()))?),
                        other => return Err(err(format!("unknown syllogism key `{other}`"))),
                    }
                }
            }
        }
        let form = match (form, figure, mood) {
            (Some(f), None, None) => Some(f),
            (None, Some(fig), Some(m)) => {
                let fig: Figure = fig.parse()?;
                Some(format!("{fig}-{m}"))
            }
            (None, None, None) => None,
            _ => return Err(CliError::Invalid("give either `form` or both `figure` and `mood`".into())),
        };
        match form {
            Some(f) => out.syllogism = Some(SyllogismSpec { form: f.parse()?, import }),
            None if import.is_some() => return Err(CliError::Invalid("`import` given without a syllogism".into())),
            None => {}
        }
        Ok(out)
    }

    pub fn values_are_points(&self) -> bool {
        self.assessments.iter().all(|a| a.value.is_point())
    }

    pub fn family(&self) -> Vec<ConditionalEvent> {
        self.assessments.iter().map(|a| a.event.clone()).collect()
    }

    /// Canonical text that parses back to an equal problem, with named events
    /// expanded.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if !self.assessments.is_empty() {
            s.push_str("[assess]\n");
            for a in &self.assessments {
                let _ = writeln!(s, "{} = {}", a.event, format_value(&a.value));
            }
        }
        if let Some(t) = &self.target {
            let _ = writeln!(s, "[target]\n{t}");
        }
        if let Some(spec) = &self.syllogism {
            let _ = writeln!(s, "[syllogism]\nfigure = {}\nmood = {}", spec.form.figure, spec.form.mood_string());
            if let Some(k) = spec.import {
                let _ = writeln!(s, "import = {k}");
            }
        }
        s
    }

    /// Drops the named-event table, which [`ProblemFile::to_text`] does not keep.
    pub fn without_names(&self) -> ProblemFile {
        ProblemFile { events: Vec::new(), ..self.clone() }
    }
}
