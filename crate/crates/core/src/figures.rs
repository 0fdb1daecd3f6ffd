//! Closed-form propagation rules for the three syllogistic figures.
//!
//! Each figure fixes a premise family over atoms `A`, `B`, `C` and a target:
//!
//! | figure | premises `(x, y, t)`        | target |
//! |--------|-----------------------------|--------|
//! | I      | `C|B`, `B|A`, `A|(A ∨ B)`   | `C|A`  |
//! | II     | `B|C`, `B̄|A`, `A|(A ∨ C)`   | `C̄|A`  |
//! | III    | `C|B`, `A|B`, `B|(A ∨ B)`   | `C|A`  |

use std::fmt;
use std::str::FromStr;

use crate::coherence::check_g_coherence;
use crate::error::{Error, Result};
use crate::event::{ConditionalEvent, Event};
use crate::germ::Germ;
use crate::interval::{ExtensionInterval, OpenInterval};
use crate::rational::{check_unit, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Figure {
    I,
    II,
    III,
}

fn ce(consequent: Event, antecedent: Event) -> ConditionalEvent {
    ConditionalEvent { consequent, antecedent }
}

impl Figure {
    pub const ALL: [Figure; 3] = [Figure::I, Figure::II, Figure::III];

    /// Premise family with `A`, `B`, `C` renamed to the given atoms.
    pub fn premise_family_with(&self, a: &str, b: &str, c: &str) -> Vec<ConditionalEvent> {
        let (a, b, c) = (Event::atom(a), Event::atom(b), Event::atom(c));
        match self {
            Figure::I => vec![ce(c, b.clone()), ce(b.clone(), a.clone()), ce(a.clone(), a.or(&b))],
            Figure::II => vec![ce(b.clone(), c.clone()), ce(b.not(), a.clone()), ce(a.clone(), a.or(&c))],
            Figure::III => vec![ce(c, b.clone()), ce(a.clone(), b.clone()), ce(b.clone(), a.or(&b))],
        }
    }

    pub fn target_with(&self, a: &str, _b: &str, c: &str) -> ConditionalEvent {
        let (a, c) = (Event::atom(a), Event::atom(c));
        match self {
            Figure::II => ce(c.not(), a),
            _ => ce(c, a),
        }
    }

    pub fn premise_family(&self) -> Vec<ConditionalEvent> {
        self.premise_family_with("A", "B", "C")
    }

    pub fn target(&self) -> ConditionalEvent {
        self.target_with("A", "B", "C")
    }

    /// The two premises plus the target, with no import premise.
    pub fn bare_family(&self) -> Vec<ConditionalEvent> {
        let mut f = self.premise_family();
        f.truncate(2);
        f.push(self.target());
        f
    }

    /// Precise bounds on the target.
    pub fn bounds(&self, x: &Rational, y: &Rational, t: &Rational) -> ExtensionInterval {
        let (lo, hi) = eval(*self, x, x, y, y, t);
        ExtensionInterval::new(lo, hi)
    }

    /// Bounds on the target for a closed box of premise values.
    pub fn box_bounds(&self, bx: &FigureBox) -> ExtensionInterval {
        let (lo, hi) = eval(*self, &bx.x.lower, &bx.x.upper, &bx.y.lower, &bx.y.upper, &bx.t.lower);
        ExtensionInterval::new(lo, hi)
    }

    pub fn numeral(&self) -> &'static str {
        match self {
            Figure::I => "I",
            Figure::II => "II",
            Figure::III => "III",
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.numeral())
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Figure> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(Figure::I),
            "II" | "2" => Ok(Figure::II),
            "III" | "3" => Ok(Figure::III),
            other => Err(Error::Parse(format!("unknown figure `{other}`"))),
        }
    }
}

/// A precise assessment `(x, y, t)` on a figure's premise family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureTriple {
    pub figure: Figure,
    pub x: Rational,
    pub y: Rational,
    pub t: Rational,
}

impl FigureTriple {
    pub fn new(figure: Figure, x: Rational, y: Rational, t: Rational) -> Result<Self> {
        [&x, &y, &t].into_iter().try_for_each(check_unit)?;
        Ok(FigureTriple { figure, x, y, t })
    }

    pub fn bounds(&self) -> ExtensionInterval {
        self.figure.bounds(&self.x, &self.y, &self.t)
    }

    pub fn values(&self) -> Vec<Rational> {
        vec![self.x.clone(), self.y.clone(), self.t.clone()]
    }
}

/// Closed box `[x₁, x₂] × [y₁, y₂] × [t₁, t₂]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureBox {
    pub x: ExtensionInterval,
    pub y: ExtensionInterval,
    pub t: ExtensionInterval,
}

impl FigureBox {
    pub fn new(x: ExtensionInterval, y: ExtensionInterval, t: ExtensionInterval) -> Self {
        FigureBox { x, y, t }
    }

    pub fn point(x: Rational, y: Rational, t: Rational) -> Self {
        let p = |v: Rational| ExtensionInterval::new(v.clone(), v);
        FigureBox::new(p(x), p(y), p(t))
    }
}

pub fn figure1_bounds(x: &Rational, y: &Rational, t: &Rational) -> ExtensionInterval {
    Figure::I.bounds(x, y, t)
}

pub fn figure2_bounds(x: &Rational, y: &Rational, t: &Rational) -> ExtensionInterval {
    Figure::II.bounds(x, y, t)
}

pub fn figure3_bounds(x: &Rational, y: &Rational, t: &Rational) -> ExtensionInterval {
    Figure::III.bounds(x, y, t)
}

pub fn figure1_box_bounds(bx: &FigureBox) -> ExtensionInterval {
    Figure::I.box_bounds(bx)
}

pub fn figure2_box_bounds(bx: &FigureBox) -> ExtensionInterval {
    Figure::II.box_bounds(bx)
}

pub fn figure3_box_bounds(bx: &FigureBox) -> ExtensionInterval {
    Figure::III.box_bounds(bx)
}

fn eval<T: Scalar>(figure: Figure, x1: &T, x2: &T, y1: &T, y2: &T, t1: &T) -> (T, T) {
    match figure {
        Figure::I => figure1(x1, x2, y1, t1),
        Figure::II => figure2(x1, x2, y1, y2, t1),
        Figure::III => figure3(x1, x2, y1, t1),
    }
}

fn figure1<T: Scalar>(x1: &T, x2: &T, y1: &T, t1: &T) -> (T, T) {
    let (zero, one) = (T::zero_value(), T::one_value());
    if t1.is_zero_value() {
        return (zero, one);
    }
    let lower = x1.clone() * y1.clone() - (one.clone() - t1.clone()) * (one.clone() - x1.clone()) / t1.clone();
    let upper = (one.clone() - x2.clone()) * (one.clone() - y1.clone()) + x2.clone() / t1.clone();
    (zero.max_of(lower), one.min_of(upper))
}

fn figure2<T: Scalar>(x1: &T, x2: &T, y1: &T, y2: &T, t1: &T) -> (T, T) {
    let (zero, one) = (T::zero_value(), T::one_value());
    let low_sum = x1.clone() + y1.clone() * t1.clone();
    if low_sum > one {
        return ((low_sum - one.clone()) / (t1.clone() * x1.clone()), one);
    }
    let high_sum = x2.clone() + y2.clone() * t1.clone();
    if high_sum < *t1 {
        return ((t1.clone() - high_sum) / (t1.clone() * (one.clone() - x2.clone())), one);
    }
    (zero, one)
}

fn figure3<T: Scalar>(x1: &T, x2: &T, y1: &T, t1: &T) -> (T, T) {
    let (zero, one) = (T::zero_value(), T::one_value());
    let denom = one.clone() - t1.clone() * (one.clone() - y1.clone());
    let a = t1.clone() * (x1.clone() + y1.clone() - one.clone());
    let lower = if a <= zero { zero.clone() } else { a / denom.clone() };
    let b = t1.clone() * (y1.clone() - x2.clone());
    let upper = if b <= zero { one } else { one - b / denom };
    (lower, upper)
}

/// Coherent extension set of a box whose faces may be open.
///
/// Open faces are pushed inward by a positive infinitesimal and the closed-box
/// rule is evaluated on the resulting germs; the limits give the infimum and
/// supremum. Each endpoint is then kept or excluded according to whether the
/// premise box extended by that endpoint value is g-coherent.
pub fn sigma_with_openness(figure: Figure, bx: &[OpenInterval; 3]) -> Result<OpenInterval> {
    bx.iter().try_for_each(OpenInterval::validate)?;
    let premises = figure.premise_family();
    if !check_g_coherence(&premises, bx)? {
        return Err(Error::NotGCoherent);
    }
    let eps = Germ::epsilon();
    let lower = |iv: &OpenInterval| {
        let v = Germ::constant(iv.lower.clone());
        if iv.lower_open {
            v + eps.clone()
        } else {
            v
        }
    };
    let upper = |iv: &OpenInterval| {
        let v = Germ::constant(iv.upper.clone());
        if iv.upper_open {
            v - eps.clone()
        } else {
            v
        }
    };
    let (lo, hi) = eval(figure, &lower(&bx[0]), &upper(&bx[0]), &lower(&bx[1]), &upper(&bx[1]), &lower(&bx[2]));
    let limit = |g: Germ| g.standard_part().ok_or_else(|| Error::Internal("bound diverges".into()));
    let (v, w) = (limit(lo)?, limit(hi)?);
    let mut extended = premises;
    extended.push(figure.target());
    let attained = |z: &Rational| -> Result<bool> {
        let mut b: Vec<OpenInterval> = bx.to_vec();
        b.push(OpenInterval::point(z.clone()));
        check_g_coherence(&extended, &b)
    };
    let lower_open = !attained(&v)?;
    let upper_open = if v == w { lower_open } else { !attained(&w)? };
    let sigma = OpenInterval { lower: v, upper: w, lower_open, upper_open };
    sigma.validate().map_err(|_| Error::Internal(format!("empty extension set {sigma}")))?;
    Ok(sigma)
}
