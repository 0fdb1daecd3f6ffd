//! Command results, rendered as text or serialized as JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use syllogic::rational::{format_decimal, format_rational};
use syllogic::OpenInterval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Check,
    Propagate,
    Syllogism,
    Catalog,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: CommandKind,
    /// First line of the text rendering.
    pub verdict: String,
    /// Drives the exit status: 0 when true, 1 when false.
    pub success: bool,
    /// Canonical problem text; evaluating it again reproduces the verdict.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub problem: Option<String>,
    pub details: Details,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalReport {
    pub lower: String,
    pub upper: String,
    pub lower_open: bool,
    pub upper_open: bool,
    pub lower_decimal: String,
    pub upper_decimal: String,
    pub text: String,
}

impl IntervalReport {
    pub fn new(iv: &OpenInterval) -> Self {
        IntervalReport {
            lower: format_rational(&iv.lower),
            upper: format_rational(&iv.upper),
            lower_open: iv.lower_open,
            upper_open: iv.upper_open,
            lower_decimal: format_decimal(&iv.lower, 4),
            upper_decimal: format_decimal(&iv.upper, 4),
            text: interval_text(iv),
        }
    }

    fn decimal_text(&self) -> String {
        let (l, r) = (if self.lower_open { '(' } else { '[' }, if self.upper_open { ')' } else { ']' });
        format!("{l}{}, {}{r}", self.lower_decimal, self.upper_decimal)
    }
}

/// `[a, b]` with open ends shown by parentheses; points stay as intervals
/// (`[1, 1]`) so precise bounds read uniformly.
pub fn interval_text(iv: &OpenInterval) -> String {
    format!(
        "{}{}, {}{}",
        if iv.lower_open { '(' } else { '[' },
        format_rational(&iv.lower),
        format_rational(&iv.upper),
        if iv.upper_open { ')' } else { ']' }
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub constituent: String,
    pub mass: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridReport {
    pub density: usize,
    pub t_coherent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub method: String,
    pub interval: Option<IntervalReport>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub name: String,
    pub figure: String,
    pub mood: String,
    pub verdict: String,
    pub sigma: String,
    pub conclusion_set: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defaults: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Details {
    Check {
        precise: bool,
        coherent: bool,
        witness: Vec<WitnessEntry>,
        grid: Option<GridReport>,
    },
    Propagate {
        target: String,
        method: String,
        figure: Option<String>,
        interval: Option<IntervalReport>,
        non_informative: bool,
        cross_check: Option<CrossCheck>,
        diagnostics: Vec<String>,
    },
    Syllogism {
        form: String,
        figure: String,
        mood: String,
        import: String,
        premises: Vec<String>,
        target: String,
        sigma: String,
        conclusion_set: String,
        valid: bool,
        strictly_valid: bool,
    },
    Catalog {
        import: String,
        rows: Vec<CatalogRow>,
    },
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.verdict);
        match &self.details {
            Details::Check { witness, grid, .. } => {
                if !witness.is_empty() {
                    s.push_str("witness:\n");
                    for w in witness {
                        let _ = writeln!(s, "  λ[{}] = {}", w.constituent, w.mass);
                    }
                }
                if let Some(g) = grid {
                    let verdict = if g.t_coherent { "every point coherent" } else { "incoherent point found" };
                    let _ = writeln!(s, "grid {}: {verdict}", g.density);
                }
            }
            Details::Propagate { target, method, interval, cross_check, diagnostics, .. } => {
                let _ = writeln!(s, "target: {target}");
                if let Some(iv) = interval {
                    let _ = writeln!(s, "decimal: {}", iv.decimal_text());
                }
                let _ = writeln!(s, "method: {method}");
                if let Some(c) = cross_check {
                    let got = c.interval.as_ref().map_or("none".to_string(), |i| i.text.clone());
                    let verdict = if c.agrees { "agrees" } else { "DISAGREES" };
                    let _ = writeln!(s, "cross-check ({}): {got} {verdict}", c.method);
                }
                for d in diagnostics {
                    let _ = writeln!(s, "note: {d}");
                }
            }
            Details::Syllogism { form, figure, mood, import, premises, target, conclusion_set, .. } => {
                let _ = writeln!(s, "form: {form} (figure {figure}, {mood}), import {import}");
                for p in premises {
                    let _ = writeln!(s, "premise: {p}");
                }
                let _ = writeln!(s, "conclusion: p({target}) ∈ {conclusion_set}");
            }
            Details::Catalog { rows, .. } => {
                for r in rows {
                    match &r.defaults {
                        Some(d) => {
                            let _ = writeln!(s, "{:<10} {d}", r.name);
                        }
                        None => {
                            let _ = writeln!(
                                s,
                                "{:<10} {:<3} {}  {:<7}  Σ={:<8} conclusion {}",
                                r.name, r.figure, r.mood, r.verdict, r.sigma, r.conclusion_set
                            );
                        }
                    }
                }
            }
        }
        s
    }
}
