//! Syllogisms as inferences between defaults and negated defaults.
//!
//! `H ~> E` reads "E is a plausible consequence of H" (`p(E|H) = 1`), and
//! `H ~/> E` is its negation (`p(E|H) < 1`). A rule serializes to one line:
//!
//! ```text
//! (M ~> P, S ~> M, (S | M) ~/> !S) |=s S ~> P
//! ```
//!
//! with `|=s` for strictly valid and `|=` for valid inferences.

use std::fmt;

use crate::error::{Error, Result};
use crate::event::Event;
use crate::figures::Figure;
use crate::syllogism::{catalog, evaluate_syllogism, ImportKind, Quantity, SentenceType, SyllogismForm, MIDDLE, PREDICATE, SUBJECT};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefaultStatement {
    pub antecedent: Event,
    pub consequent: Event,
    pub negated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Entailment {
    Valid,
    StrictlyValid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefaultRule {
    pub premises: Vec<DefaultStatement>,
    pub conclusion: DefaultStatement,
    pub marker: Entailment,
}

impl DefaultStatement {
    pub fn from_sentence(s: &SentenceType) -> Self {
        let (subject, predicate) = (Event::atom(&s.subject), Event::atom(&s.predicate));
        let (consequent, negated) = match s.kind {
            Quantity::A => (predicate, false),
            Quantity::E => (predicate.not(), false),
            Quantity::I => (predicate.not(), true),
            Quantity::O => (predicate, true),
        };
        DefaultStatement { antecedent: subject, consequent, negated }
    }

    pub fn to_ascii(&self) -> String {
        let arrow = if self.negated { "~/>" } else { "~>" };
        format!("{} {arrow} {}", operand(&self.antecedent), operand(&self.consequent))
    }

    pub fn to_unicode(&self) -> String {
        let arrow = if self.negated { "⇝\u{338}" } else { "⇝" };
        format!("{}{arrow}{}", unicode(&self.antecedent, true), unicode(&self.consequent, true))
    }

    fn parse(text: &str) -> Result<Self> {
        let (lhs, rhs, negated) = if let Some((l, r)) = text.split_once("~/>") {
            (l, r, true)
        } else if let Some((l, r)) = text.split_once("~>") {
            (l, r, false)
        } else {
            return Err(Error::Parse(format!("`{text}` is not a default")));
        };
        Ok(DefaultStatement { antecedent: Event::parse(lhs)?, consequent: Event::parse(rhs)?, negated })
    }
}

fn operand(e: &Event) -> String {
    match e {
        Event::And(..) | Event::Or(..) => format!("({e})"),
        _ => e.to_string(),
    }
}

fn unicode(e: &Event, top: bool) -> String {
    let wrap = |s: String| if top { s } else { format!("({s})") };
    match e {
        Event::True => "⊤".into(),
        Event::False => "⊥".into(),
        Event::Atom(a) => a.clone(),
        Event::Not(inner) => match inner.as_ref() {
            Event::Atom(a) => format!("{a}\u{304}"),
            other => format!("¬{}", unicode(other, false)),
        },
        Event::And(a, b) => wrap(format!("{}∧{}", unicode(a, false), unicode(b, false))),
        Event::Or(a, b) => format!("({}∨{})", unicode(a, false), unicode(b, false)),
    }
}

/// The import premise as a negated default: the minor antecedent is not
/// implausible given the disjunction.
fn import_default(figure: Figure) -> DefaultStatement {
    let (h, [a, b]) = match figure {
        Figure::I => (SUBJECT, [SUBJECT, MIDDLE]),
        Figure::II => (SUBJECT, [SUBJECT, PREDICATE]),
        Figure::III => (MIDDLE, [SUBJECT, MIDDLE]),
    };
    DefaultStatement { antecedent: Event::atom(a).or(&Event::atom(b)), consequent: Event::atom(h).not(), negated: true }
}

pub fn to_defaults(form: &SyllogismForm) -> Result<DefaultRule> {
    if !catalog().iter().any(|f| f.figure == form.figure && f.mood == form.mood) {
        return Err(Error::UnknownForm(form.label()));
    }
    let [major, minor, conclusion] = form.sentences();
    let verdict = evaluate_syllogism(form, ImportKind::Conditional)?;
    let marker = match (verdict.valid, verdict.strictly_valid) {
        (_, true) => Entailment::StrictlyValid,
        (true, false) => Entailment::Valid,
        _ => return Err(Error::Internal(format!("{} is not valid under import", form.label()))),
    };
    Ok(DefaultRule {
        premises: vec![
            DefaultStatement::from_sentence(&major),
            DefaultStatement::from_sentence(&minor),
            import_default(form.figure),
        ],
        conclusion: DefaultStatement::from_sentence(&conclusion),
        marker,
    })
}

impl DefaultRule {
    pub fn to_ascii(&self) -> String {
        let premises: Vec<String> = self.premises.iter().map(DefaultStatement::to_ascii).collect();
        let marker = match self.marker {
            Entailment::Valid => "|=",
            Entailment::StrictlyValid => "|=s",
        };
        format!("({}) {marker} {}", premises.join(", "), self.conclusion.to_ascii())
    }

    pub fn to_unicode(&self) -> String {
        let premises: Vec<String> = self.premises.iter().map(DefaultStatement::to_unicode).collect();
        let marker = match self.marker {
            Entailment::Valid => "⊨",
            Entailment::StrictlyValid => "⊨_s",
        };
        format!("({}) {marker} {}", premises.join(", "), self.conclusion.to_unicode())
    }

    /// Parses the line format produced by [`DefaultRule::to_ascii`].
    pub fn parse(line: &str) -> Result<DefaultRule> {
        let bad = || Error::Parse(format!("`{line}` is not a default rule"));
        let at = line.rfind("|=").ok_or_else(bad)?;
        let (lhs, rest) = (line[..at].trim(), &line[at + 2..]);
        let (marker, rhs) = match rest.strip_prefix('s') {
            Some(r) => (Entailment::StrictlyValid, r),
            None => (Entailment::Valid, rest),
        };
        let inner = lhs.strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
        let mut premises = Vec::new();
        let (mut depth, mut start) = (0i32, 0usize);
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    premises.push(DefaultStatement::parse(&inner[start..i])?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        premises.push(DefaultStatement::parse(&inner[start..])?);
        Ok(DefaultRule { premises, conclusion: DefaultStatement::parse(rhs)?, marker })
    }
}

impl fmt::Display for DefaultRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}
