//! Closed extension intervals and intervals with endpoint openness.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, in_unit_interval, Rational};

/// Closed interval `[lower, upper] ⊆ [0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionInterval {
    pub lower: Rational,
    pub upper: Rational,
}

impl ExtensionInterval {
    pub fn new(lower: Rational, upper: Rational) -> Self {
        ExtensionInterval { lower, upper }
    }

    pub fn unit() -> Self {
        ExtensionInterval::new(Rational::zero(), Rational::one())
    }

    pub fn is_unit(&self) -> bool {
        self.lower.is_zero() && self.upper.is_one()
    }

    pub fn hull(&self, other: &ExtensionInterval) -> ExtensionInterval {
        ExtensionInterval::new(
            self.lower.clone().min(other.lower.clone()),
            self.upper.clone().max(other.upper.clone()),
        )
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.lower <= *v && *v <= self.upper
    }

    pub fn contains_interval(&self, other: &ExtensionInterval) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }
}

impl fmt::Display for ExtensionInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_rational(&self.lower), format_rational(&self.upper))
    }
}

/// Nonempty interval of `[0, 1]` whose endpoints may be excluded.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpenInterval {
    pub lower: Rational,
    pub upper: Rational,
    pub lower_open: bool,
    pub upper_open: bool,
}

impl OpenInterval {
    pub fn new(lower: Rational, upper: Rational, lower_open: bool, upper_open: bool) -> Result<Self> {
        let iv = OpenInterval { lower, upper, lower_open, upper_open };
        iv.validate()?;
        Ok(iv)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = in_unit_interval(&self.lower)
            && in_unit_interval(&self.upper)
            && (self.lower < self.upper || (self.lower == self.upper && !self.lower_open && !self.upper_open));
        if ok {
            Ok(())
        } else {
            Err(Error::MalformedInterval(self.to_string()))
        }
    }

    pub fn closed(lower: Rational, upper: Rational) -> Self {
        OpenInterval { lower, upper, lower_open: false, upper_open: false }
    }

    pub fn point(v: Rational) -> Self {
        OpenInterval::closed(v.clone(), v)
    }

    pub fn unit() -> Self {
        OpenInterval::closed(Rational::zero(), Rational::one())
    }

    /// `(0, 1]`.
    pub fn positive() -> Self {
        OpenInterval { lower_open: true, ..OpenInterval::unit() }
    }

    /// `[0, 1)`.
    pub fn below_one() -> Self {
        OpenInterval { upper_open: true, ..OpenInterval::unit() }
    }

    pub fn is_point(&self) -> bool {
        self.lower == self.upper
    }

    pub fn is_unit(&self) -> bool {
        *self == OpenInterval::unit()
    }

    pub fn contains(&self, v: &Rational) -> bool {
        let above = if self.lower_open { *v > self.lower } else { *v >= self.lower };
        let below = if self.upper_open { *v < self.upper } else { *v <= self.upper };
        above && below
    }

    pub fn is_subset_of(&self, other: &OpenInterval) -> bool {
        let lower_ok = other.lower < self.lower
            || (other.lower == self.lower && (!other.lower_open || self.lower_open));
        let upper_ok = self.upper < other.upper
            || (other.upper == self.upper && (!other.upper_open || self.upper_open));
        lower_ok && upper_ok
    }

    /// Image under `v ↦ 1 − v`, used to move a bound from `E|H` to `Ē|H`.
    pub fn reflect(&self) -> OpenInterval {
        let one = Rational::one();
        OpenInterval {
            lower: &one - &self.upper,
            upper: &one - &self.lower,
            lower_open: self.upper_open,
            upper_open: self.lower_open,
        }
    }

    /// Intersection, or `None` when it is empty.
    pub fn intersect(&self, other: &OpenInterval) -> Option<OpenInterval> {
        let (lower, lower_open) = match self.lower.cmp(&other.lower) {
            std::cmp::Ordering::Less => (other.lower.clone(), other.lower_open),
            std::cmp::Ordering::Greater => (self.lower.clone(), self.lower_open),
            std::cmp::Ordering::Equal => (self.lower.clone(), self.lower_open || other.lower_open),
        };
        let (upper, upper_open) = match self.upper.cmp(&other.upper) {
            std::cmp::Ordering::Less => (self.upper.clone(), self.upper_open),
            std::cmp::Ordering::Greater => (other.upper.clone(), other.upper_open),
            std::cmp::Ordering::Equal => (self.upper.clone(), self.upper_open || other.upper_open),
        };
        let iv = OpenInterval { lower, upper, lower_open, upper_open };
        iv.validate().ok().map(|_| iv)
    }

    pub fn closure(&self) -> ExtensionInterval {
        ExtensionInterval::new(self.lower.clone(), self.upper.clone())
    }
}

impl fmt::Display for OpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lower == self.upper && !self.lower_open && !self.upper_open {
            return write!(f, "{{{}}}", format_rational(&self.lower));
        }
        write!(
            f,
            "{}{}, {}{}",
            if self.lower_open { '(' } else { '[' },
            format_rational(&self.lower),
            format_rational(&self.upper),
            if self.upper_open { ')' } else { ']' }
        )
    }
}

impl From<ExtensionInterval> for OpenInterval {
    fn from(iv: ExtensionInterval) -> Self {
        OpenInterval::closed(iv.lower, iv.upper)
    }
}

/// One interval per member of a family.
pub type BoxAssessment = Vec<OpenInterval>;

/// Box whose every component is a single point.
pub fn point_box(values: &[Rational]) -> BoxAssessment {
    values.iter().cloned().map(OpenInterval::point).collect()
}
