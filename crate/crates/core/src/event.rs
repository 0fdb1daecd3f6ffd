//! Boolean event formulas, conditional events and their text grammar.
//!
//! Grammar (loosest binding first):
//!
//! ```text
//! conditional := formula [ "/" formula ]
//! formula     := conj { "|" conj }
//! conj        := unary { "&" unary }
//! unary       := "!" unary | atom | "1" | "0" | "⊤" | "⊥" | "(" formula ")"
//! atom        := [A-Za-z][A-Za-z0-9_]*
//! ```

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Event {
    True,
    False,
    Atom(String),
    Not(Box<Event>),
    And(Box<Event>, Box<Event>),
    Or(Box<Event>, Box<Event>),
}

impl Event {
    pub fn atom(name: &str) -> Event {
        Event::Atom(name.to_string())
    }

    pub fn not(&self) -> Event {
        Event::Not(Box::new(self.clone()))
    }

    pub fn and(&self, other: &Event) -> Event {
        Event::And(Box::new(self.clone()), Box::new(other.clone()))
    }

    pub fn or(&self, other: &Event) -> Event {
        Event::Or(Box::new(self.clone()), Box::new(other.clone()))
    }

    pub fn parse(text: &str) -> Result<Event> {
        Event::parse_with(text, &HashMap::new())
    }

    /// Parses a formula, expanding identifiers bound in `names`.
    pub fn parse_with(text: &str, names: &HashMap<String, Event>) -> Result<Event> {
        let mut p = Parser::new(text, names);
        let e = p.formula()?;
        p.expect_end()?;
        Ok(e)
    }

    pub fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Event::True | Event::False => {}
            Event::Atom(a) => {
                out.insert(a.clone());
            }
            Event::Not(e) => e.collect_atoms(out),
            Event::And(a, b) | Event::Or(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut s = BTreeSet::new();
        self.collect_atoms(&mut s);
        s
    }

    /// Evaluates under an assignment given as a lookup.
    pub fn eval(&self, value: &dyn Fn(&str) -> bool) -> bool {
        match self {
            Event::True => true,
            Event::False => false,
            Event::Atom(a) => value(a),
            Event::Not(e) => !e.eval(value),
            Event::And(a, b) => a.eval(value) && b.eval(value),
            Event::Or(a, b) => a.eval(value) || b.eval(value),
        }
    }

    /// Evaluates on a world encoded as a bitmask over `atoms`, where the first
    /// atom is the most significant bit.
    pub fn eval_world(&self, atoms: &[String], world: u32) -> bool {
        let k = atoms.len();
        self.eval(&|name| {
            let i = atoms.binary_search_by(|a| a.as_str().cmp(name)).expect("atom outside the frame");
            world >> (k - 1 - i) & 1 == 1
        })
    }

    /// Bitset of the worlds (over `atoms`) where the event holds.
    pub fn truth_set(&self, atoms: &[String]) -> Vec<bool> {
        (0..1u32 << atoms.len()).map(|w| self.eval_world(atoms, w)).collect()
    }

    pub fn is_satisfiable(&self) -> bool {
        let atoms: Vec<String> = self.atoms().into_iter().collect();
        (0..1u32 << atoms.len()).any(|w| self.eval_world(&atoms, w))
    }

    /// Logical equivalence by truth table over the joint atoms.
    pub fn equivalent(&self, other: &Event) -> bool {
        let mut atoms = self.atoms();
        other.collect_atoms(&mut atoms);
        let atoms: Vec<String> = atoms.into_iter().collect();
        (0..1u32 << atoms.len()).all(|w| self.eval_world(&atoms, w) == other.eval_world(&atoms, w))
    }

    fn precedence(&self) -> u8 {
        match self {
            Event::Or(..) => 1,
            Event::And(..) => 2,
            _ => 3,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.precedence() < min;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Event::True => write!(f, "1")?,
            Event::False => write!(f, "0")?,
            Event::Atom(a) => write!(f, "{a}")?,
            Event::Not(e) => {
                write!(f, "!")?;
                e.fmt_prec(f, 3)?;
            }
            Event::And(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, " & ")?;
                b.fmt_prec(f, 2)?;
            }
            Event::Or(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " | ")?;
                b.fmt_prec(f, 1)?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// `E | H`: true when `E ∧ H`, false when `Ē ∧ H`, void when `H̄`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConditionalEvent {
    pub consequent: Event,
    pub antecedent: Event,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Truth {
    True,
    False,
    Void,
}

impl ConditionalEvent {
    pub fn new(consequent: Event, antecedent: Event) -> Result<Self> {
        if !antecedent.is_satisfiable() {
            return Err(Error::ImpossibleAntecedent(antecedent.to_string()));
        }
        Ok(ConditionalEvent { consequent, antecedent })
    }

    /// Parses `E / H`; a bare formula is conditioned on the sure event.
    pub fn parse(text: &str) -> Result<Self> {
        ConditionalEvent::parse_with(text, &HashMap::new())
    }

    pub fn parse_with(text: &str, names: &HashMap<String, Event>) -> Result<Self> {
        let mut p = Parser::new(text, names);
        let e = p.formula()?;
        let h = if p.eat('/') { p.formula()? } else { Event::True };
        p.expect_end()?;
        ConditionalEvent::new(e, h)
    }

    /// `Ē | H`.
    pub fn complement(&self) -> ConditionalEvent {
        ConditionalEvent { consequent: self.consequent.not(), antecedent: self.antecedent.clone() }
    }

    pub fn truth(&self, atoms: &[String], world: u32) -> Truth {
        if !self.antecedent.eval_world(atoms, world) {
            Truth::Void
        } else if self.consequent.eval_world(atoms, world) {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut s = self.consequent.atoms();
        self.antecedent.collect_atoms(&mut s);
        s
    }

    /// Same three-valued object: equal antecedents and equal `E ∧ H`.
    pub fn equivalent(&self, other: &ConditionalEvent) -> bool {
        let mut atoms = self.atoms();
        atoms.extend(other.atoms());
        let atoms: Vec<String> = atoms.into_iter().collect();
        (0..1u32 << atoms.len()).all(|w| self.truth(&atoms, w) == other.truth(&atoms, w))
    }
}

impl fmt::Display for ConditionalEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.consequent.fmt_prec(f, 3)?;
        write!(f, " / ")?;
        self.antecedent.fmt_prec(f, 3)
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a HashMap<String, Event>,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, names: &'a HashMap<String, Event>) -> Self {
        Parser { chars: text.chars().collect(), pos: 0, names, text }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in `{}`", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(&format!("unexpected `{c}`"))),
        }
    }

    fn formula(&mut self) -> Result<Event> {
        let mut e = self.conj()?;
        while self.eat('|') {
            let r = self.conj()?;
            e = Event::Or(Box::new(e), Box::new(r));
        }
        Ok(e)
    }

    fn conj(&mut self) -> Result<Event> {
        let mut e = self.unary()?;
        while self.eat('&') {
            let r = self.unary()?;
            e = Event::And(Box::new(e), Box::new(r));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Event> {
        match self.peek() {
            Some('!') => {
                self.pos += 1;
                Ok(Event::Not(Box::new(self.unary()?)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.formula()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some('1') | Some('⊤') => {
                self.pos += 1;
                Ok(Event::True)
            }
            Some('0') | Some('⊥') => {
                self.pos += 1;
                Ok(Event::False)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Ok(self.names.get(&name).cloned().unwrap_or(Event::Atom(name)))
            }
            Some(c) => Err(self.err(&format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let e = Event::parse("!A & (B | C)").unwrap();
        assert_eq!(e.to_string(), "!A & (B | C)");
        assert_eq!(Event::parse(&e.to_string()).unwrap(), e);
        let c = ConditionalEvent::parse("A / A | B").unwrap();
        assert_eq!(c.to_string(), "A / (A | B)");
        assert!(Event::parse("A &").is_err());
        assert!(Event::parse("(A").is_err());
    }

    #[test]
    fn impossible_antecedent_rejected() {
        assert!(matches!(ConditionalEvent::parse("A / B & !B"), Err(Error::ImpossibleAntecedent(_))));
        assert!(ConditionalEvent::parse("A / 0").is_err());
    }

    #[test]
    fn named_events_expand() {
        let mut names = HashMap::new();
        names.insert("D".to_string(), Event::parse("S | M").unwrap());
        let c = ConditionalEvent::parse_with("S / D", &names).unwrap();
        assert!(c.equivalent(&ConditionalEvent::parse("S / M | S").unwrap()));
    }

    #[test]
    fn conditional_equivalence() {
        let a = ConditionalEvent::parse("C / A").unwrap();
        let b = ConditionalEvent::parse("C & A / A").unwrap();
        assert!(a.equivalent(&b));
        assert!(!a.equivalent(&a.complement()));
    }
}
