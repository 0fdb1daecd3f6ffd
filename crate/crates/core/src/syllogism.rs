//! Probabilistic semantics of categorical syllogisms.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::coherence::check_coherence;
use crate::error::{Error, Result};
use crate::event::{ConditionalEvent, Event};
use crate::figures::{sigma_with_openness, Figure};
use crate::interval::OpenInterval;
use crate::propagation::extension_bounds;
use crate::rational::{check_unit, Rational};

pub const SUBJECT: &str = "S";
pub const MIDDLE: &str = "M";
pub const PREDICATE: &str = "P";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    /// Every S is P.
    A,
    /// No S is P.
    E,
    /// Some S is P.
    I,
    /// Some S is not P.
    O,
}

impl Quantity {
    pub fn letter(&self) -> char {
        match self {
            Quantity::A => 'A',
            Quantity::E => 'E',
            Quantity::I => 'I',
            Quantity::O => 'O',
        }
    }

    pub fn from_letter(c: char) -> Result<Quantity> {
        match c.to_ascii_uppercase() {
            'A' => Ok(Quantity::A),
            'E' => Ok(Quantity::E),
            'I' => Ok(Quantity::I),
            'O' => Ok(Quantity::O),
            _ => Err(Error::Parse(format!("`{c}` is not a sentence type"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SentenceType {
    pub kind: Quantity,
    pub subject: String,
    pub predicate: String,
}

impl SentenceType {
    pub fn new(kind: Quantity, subject: &str, predicate: &str) -> Self {
        SentenceType { kind, subject: subject.to_string(), predicate: predicate.to_string() }
    }

    /// `predicate | subject`.
    pub fn event(&self) -> ConditionalEvent {
        ConditionalEvent { consequent: Event::atom(&self.predicate), antecedent: Event::atom(&self.subject) }
    }
}

impl fmt::Display for SentenceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, p) = (&self.subject, &self.predicate);
        match self.kind {
            Quantity::A => write!(f, "Every {s} is {p}"),
            Quantity::E => write!(f, "No {s} is {p}"),
            Quantity::I => write!(f, "Some {s} is {p}"),
            Quantity::O => write!(f, "Some {s} is not {p}"),
        }
    }
}

/// `p(event) ∈ set`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProbConstraint {
    pub event: ConditionalEvent,
    pub set: OpenInterval,
}

impl ProbConstraint {
    /// The same constraint stated on the complementary conditional event.
    pub fn complement(&self) -> ProbConstraint {
        ProbConstraint { event: self.event.complement(), set: self.set.reflect() }
    }
}

impl fmt::Display for ProbConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p({}) ∈ {}", self.event, self.set)
    }
}

/// A sentence read as a probability constraint, in its primary form and the
/// equivalent form on the complementary event.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SentenceInterpretation {
    pub primary: ProbConstraint,
    pub equivalent: ProbConstraint,
}

pub fn interpret_sentence(sentence: &SentenceType) -> SentenceInterpretation {
    let ev = sentence.event();
    let (zero, one) = (Rational::zero(), Rational::one());
    let on_event = |set| ProbConstraint { event: ev.clone(), set };
    let primary = match sentence.kind {
        Quantity::A => on_event(OpenInterval::point(one)),
        Quantity::E => on_event(OpenInterval::point(zero)),
        Quantity::I => on_event(OpenInterval::positive()),
        Quantity::O => ProbConstraint { event: ev.complement(), set: OpenInterval::positive() },
    };
    let equivalent = primary.complement();
    SentenceInterpretation { primary, equivalent }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ImportKind {
    None,
    /// Positive probability of the minor antecedent given the disjunction of
    /// the antecedents.
    #[default]
    Conditional,
    /// Positive probability of the minor antecedent.
    Unconditional,
}

impl FromStr for ImportKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ImportKind> {
        match s.trim().to_ascii_lowercase().as_str() {
            "none" => Ok(ImportKind::None),
            "conditional" => Ok(ImportKind::Conditional),
            "unconditional" => Ok(ImportKind::Unconditional),
            other => Err(Error::Parse(format!("unknown import kind `{other}`"))),
        }
    }
}

impl fmt::Display for ImportKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ImportKind::None => "none",
            ImportKind::Conditional => "conditional",
            ImportKind::Unconditional => "unconditional",
        })
    }
}

/// Minor-premise antecedent and the two terms of the import disjunction.
fn import_terms(figure: Figure) -> (&'static str, [&'static str; 2]) {
    match figure {
        Figure::I => (SUBJECT, [SUBJECT, MIDDLE]),
        Figure::II => (SUBJECT, [SUBJECT, PREDICATE]),
        Figure::III => (MIDDLE, [SUBJECT, MIDDLE]),
    }
}

pub fn import_constraint(figure: Figure, kind: ImportKind) -> Option<ProbConstraint> {
    let (h, [d1, d2]) = import_terms(figure);
    let antecedent = match kind {
        ImportKind::None => return None,
        ImportKind::Unconditional => Event::True,
        ImportKind::Conditional => Event::atom(d1).or(&Event::atom(d2)),
    };
    Some(ProbConstraint {
        event: ConditionalEvent { consequent: Event::atom(h), antecedent },
        set: OpenInterval::positive(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SyllogismForm {
    pub name: Option<String>,
    pub figure: Figure,
    /// Major premise, minor premise, conclusion.
    pub mood: [Quantity; 3],
}

impl SyllogismForm {
    pub fn new(figure: Figure, mood: [Quantity; 3]) -> Self {
        let mut form = SyllogismForm { name: None, figure, mood };
        form.name = catalog().into_iter().find(|f| f.figure == figure && f.mood == mood).and_then(|f| f.name);
        form
    }

    pub fn mood_string(&self) -> String {
        self.mood.iter().map(Quantity::letter).collect()
    }

    /// Major premise, minor premise and conclusion sentences over `S`, `M`, `P`.
    pub fn sentences(&self) -> [SentenceType; 3] {
        let [a, b, c] = self.mood;
        let (major, minor) = match self.figure {
            Figure::I => ((MIDDLE, PREDICATE), (SUBJECT, MIDDLE)),
            Figure::II => ((PREDICATE, MIDDLE), (SUBJECT, MIDDLE)),
            Figure::III => ((MIDDLE, PREDICATE), (MIDDLE, SUBJECT)),
        };
        [
            SentenceType::new(a, major.0, major.1),
            SentenceType::new(b, minor.0, minor.1),
            SentenceType::new(c, SUBJECT, PREDICATE),
        ]
    }

    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!("{}-{}", self.figure, self.mood_string()),
        }
    }
}

impl FromStr for SyllogismForm {
    type Err = Error;

    /// Accepts a catalog name (`barbara`) or `FIGURE-MOOD` (`I-AAA`, `3-OAO`).
    fn from_str(s: &str) -> Result<SyllogismForm> {
        let s = s.trim();
        if let Some(f) = catalog().into_iter().find(|f| f.name.as_deref().is_some_and(|n| n.eq_ignore_ascii_case(s))) {
            return Ok(f);
        }
        let unknown = || Error::UnknownForm(s.to_string());
        let (fig, mood) = s.split_once(['-', ':', ' ']).ok_or_else(unknown)?;
        let figure: Figure = fig.parse().map_err(|_| unknown())?;
        let letters: Vec<char> = mood.trim().chars().collect();
        if letters.len() != 3 {
            return Err(unknown());
        }
        let q = |c| Quantity::from_letter(c).map_err(|_| unknown());
        Ok(SyllogismForm::new(figure, [q(letters[0])?, q(letters[1])?, q(letters[2])?]))
    }
}

impl fmt::Display for SyllogismForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} {})", self.label(), self.figure, self.mood_string())
    }
}

/// The traditionally valid syllogisms of the first three figures.
pub fn catalog() -> Vec<SyllogismForm> {
    use Quantity::*;
    let rows: [(Figure, &str, [Quantity; 3]); 18] = [
        (Figure::I, "Barbara", [A, A, A]),
        (Figure::I, "Barbari", [A, A, I]),
        (Figure::I, "Darii", [A, I, I]),
        (Figure::I, "Celarent", [E, A, E]),
        (Figure::I, "Celaront", [E, A, O]),
        (Figure::I, "Ferio", [E, I, O]),
        (Figure::II, "Camestres", [A, E, E]),
        (Figure::II, "Camestrop", [A, E, O]),
        (Figure::II, "Baroco", [A, O, O]),
        (Figure::II, "Cesare", [E, A, E]),
        (Figure::II, "Cesaro", [E, A, O]),
        (Figure::II, "Festino", [E, I, O]),
        (Figure::III, "Datisi", [A, I, I]),
        (Figure::III, "Darapti", [A, A, I]),
        (Figure::III, "Ferison", [E, I, O]),
        (Figure::III, "Felapton", [E, A, O]),
        (Figure::III, "Disamis", [I, A, I]),
        (Figure::III, "Bocardo", [O, A, O]),
    ];
    rows.into_iter()
        .map(|(figure, name, mood)| SyllogismForm { name: Some(name.to_string()), figure, mood })
        .collect()
}

/// Outcome of evaluating a syllogism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    /// Conditional event the extension set refers to (`P|S` or `P̄|S`).
    pub target: ConditionalEvent,
    pub premise_box: [OpenInterval; 3],
    pub sigma: OpenInterval,
    pub conclusion_set: OpenInterval,
    pub valid: bool,
    pub strictly_valid: bool,
}

impl Verdict {
    fn from_sets(target: ConditionalEvent, premise_box: [OpenInterval; 3], sigma: OpenInterval, conclusion_set: OpenInterval) -> Self {
        let valid = sigma.is_subset_of(&conclusion_set);
        let strictly_valid = sigma == conclusion_set;
        Verdict { target, premise_box, sigma, conclusion_set, valid, strictly_valid }
    }

    pub fn label(&self) -> &'static str {
        if self.strictly_valid {
            "s-valid"
        } else if self.valid {
            "valid"
        } else {
            "invalid"
        }
    }
}

/// Restates a constraint on whichever of `event` or its complement equals
/// `slot`, or `None` if neither does.
fn restate_on(slot: &ConditionalEvent, c: &ProbConstraint) -> Option<OpenInterval> {
    if slot.equivalent(&c.event) {
        Some(c.set.clone())
    } else if slot.equivalent(&c.event.complement()) {
        Some(c.set.reflect())
    } else {
        None
    }
}

/// Intersects a constraint into the component of the box it constrains.
fn apply(family: &[ConditionalEvent], bx: &mut [OpenInterval], c: &ProbConstraint) -> Result<()> {
    for (slot, iv) in family.iter().zip(bx.iter_mut()) {
        if let Some(set) = restate_on(slot, c) {
            *iv = iv.intersect(&set).ok_or(Error::NotGCoherent)?;
            return Ok(());
        }
    }
    Err(Error::UnmatchedConstraint(c.event.to_string()))
}

fn instantiated(figure: Figure) -> (Vec<ConditionalEvent>, ConditionalEvent) {
    (figure.premise_family_with(SUBJECT, MIDDLE, PREDICATE), figure.target_with(SUBJECT, MIDDLE, PREDICATE))
}

/// Constraint placed on the import slot of the figure family. The unconditional
/// form implies the conditional one, and its verdict reuses that box.
fn import_slot_constraint(figure: Figure, kind: ImportKind) -> Option<ProbConstraint> {
    match kind {
        ImportKind::None => None,
        _ => import_constraint(figure, ImportKind::Conditional),
    }
}

fn premise_box(
    figure: Figure,
    constraints: &[ProbConstraint],
    import: ImportKind,
) -> Result<(Vec<ConditionalEvent>, ConditionalEvent, [OpenInterval; 3])> {
    let (family, target) = instantiated(figure);
    let mut bx = [OpenInterval::unit(), OpenInterval::unit(), OpenInterval::unit()];
    for c in constraints.iter().chain(import_slot_constraint(figure, import).iter()) {
        apply(&family, &mut bx, c)?;
    }
    Ok((family, target, bx))
}

pub fn evaluate_syllogism(form: &SyllogismForm, import: ImportKind) -> Result<Verdict> {
    let [major, minor, conclusion] = form.sentences();
    let premises = [interpret_sentence(&major).primary, interpret_sentence(&minor).primary];
    let (_, target, bx) = premise_box(form.figure, &premises, import)?;
    let sigma = sigma_with_openness(form.figure, &bx)?;
    let concl = interpret_sentence(&conclusion).primary;
    let conclusion_set =
        restate_on(&target, &concl).ok_or_else(|| Error::UnmatchedConstraint(concl.event.to_string()))?;
    Ok(Verdict::from_sets(target, bx, sigma, conclusion_set))
}

/// Verdict for an arbitrary premise box on the figure's `S`, `M`, `P` family
/// against a declared conclusion set on its target event.
pub fn box_verdict(figure: Figure, bx: &[OpenInterval; 3], conclusion_set: &OpenInterval) -> Result<Verdict> {
    conclusion_set.validate()?;
    let (_, target) = instantiated(figure);
    let sigma = sigma_with_openness(figure, bx)?;
    Ok(Verdict::from_sets(target, bx.clone(), sigma, conclusion_set.clone()))
}

/// Whether the all-ones assessment on the premises is coherent and forces the
/// conclusion to probability one.
pub fn check_p_entailment(premises: &[ConditionalEvent], conclusion: &ConditionalEvent) -> Result<bool> {
    let ones = vec![Rational::one(); premises.len()];
    if !check_coherence(premises, &ones)? {
        return Ok(false);
    }
    let iv = extension_bounds(premises, &ones, conclusion)?;
    Ok(iv.lower.is_one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    AtLeast,
    AtMost,
    Exactly,
    Above,
    Below,
}

/// Threshold sentence such as "at least most S are not-P": `p(event) ≥ threshold`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GqSentence {
    pub event: ConditionalEvent,
    pub comparison: Comparison,
    pub threshold: Rational,
}

impl GqSentence {
    pub fn new(event: ConditionalEvent, comparison: Comparison, threshold: Rational) -> Self {
        GqSentence { event, comparison, threshold }
    }

    pub fn constraint(&self) -> Result<ProbConstraint> {
        check_unit(&self.threshold)?;
        let (zero, one, y) = (Rational::zero(), Rational::one(), self.threshold.clone());
        let set = match self.comparison {
            Comparison::AtLeast => OpenInterval::closed(y, one),
            Comparison::AtMost => OpenInterval::closed(zero, y),
            Comparison::Exactly => OpenInterval::point(y),
            Comparison::Above => OpenInterval::new(y, one, true, false)?,
            Comparison::Below => OpenInterval::new(zero, y, false, true)?,
        };
        Ok(ProbConstraint { event: self.event.clone(), set })
    }
}

/// Extension set on the figure's conclusion event (`P|S`, or `P̄|S` for the
/// second figure) under threshold premises over `S`, `M`, `P`.
pub fn gq_syllogism(figure: Figure, sentences: &[GqSentence], import: ImportKind) -> Result<OpenInterval> {
    let constraints = sentences.iter().map(GqSentence::constraint).collect::<Result<Vec<_>>>()?;
    let (_, _, bx) = premise_box(figure, &constraints, import)?;
    sigma_with_openness(figure, &bx)
}
