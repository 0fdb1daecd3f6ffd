//! Germs of rational functions at `ε → 0⁺`.
//!
//! A germ is a quotient of polynomials in a positive infinitesimal `ε`, ordered
//! by its sign for all sufficiently small `ε`. Evaluating a piecewise rational
//! bound function on `a + ε` yields its right-hand limit behaviour at `a`.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{Rational, Scalar};

#[derive(Clone, Debug)]
pub struct Germ {
    num: Vec<Rational>,
    den: Vec<Rational>,
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn low_index(p: &[Rational]) -> Option<usize> {
    p.iter().position(|c| !c.is_zero())
}

fn poly_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

impl Germ {
    fn new(mut num: Vec<Rational>, mut den: Vec<Rational>) -> Self {
        trim(&mut num);
        trim(&mut den);
        let d0 = low_index(&den).expect("germ with zero denominator");
        if num.is_empty() {
            return Germ { num, den: vec![Rational::one()] };
        }
        let shift = d0.min(low_index(&num).unwrap_or(0));
        num.drain(..shift);
        den.drain(..shift);
        let lead = den[low_index(&den).unwrap()].clone();
        if !lead.is_one() {
            num.iter_mut().for_each(|c| *c /= &lead);
            den.iter_mut().for_each(|c| *c /= &lead);
        }
        Germ { num, den }
    }

    pub fn constant(r: Rational) -> Self {
        Germ::new(vec![r], vec![Rational::one()])
    }

    /// The positive infinitesimal itself.
    pub fn epsilon() -> Self {
        Germ::new(vec![Rational::zero(), Rational::one()], vec![Rational::one()])
    }

    pub fn signum(&self) -> Ordering {
        let Some(i) = low_index(&self.num) else {
            return Ordering::Equal;
        };
        let j = low_index(&self.den).unwrap();
        let positive = self.num[i].is_positive() == self.den[j].is_positive();
        if positive {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Limit as `ε → 0⁺`, or `None` when the germ diverges.
    pub fn standard_part(&self) -> Option<Rational> {
        let Some(i) = low_index(&self.num) else {
            return Some(Rational::zero());
        };
        let j = low_index(&self.den).unwrap();
        match i.cmp(&j) {
            Ordering::Greater => Some(Rational::zero()),
            Ordering::Equal => Some(&self.num[i] / &self.den[j]),
            Ordering::Less => None,
        }
    }
}

impl PartialEq for Germ {
    fn eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).signum() == Ordering::Equal
    }
}

impl PartialOrd for Germ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self.clone() - other.clone()).signum())
    }
}

impl Add for Germ {
    type Output = Germ;
    fn add(self, rhs: Germ) -> Germ {
        if self.den == rhs.den {
            return Germ::new(poly_add(&self.num, &rhs.num), self.den);
        }
        let num = poly_add(&poly_mul(&self.num, &rhs.den), &poly_mul(&rhs.num, &self.den));
        Germ::new(num, poly_mul(&self.den, &rhs.den))
    }
}

impl Neg for Germ {
    type Output = Germ;
    fn neg(self) -> Germ {
        Germ { num: self.num.into_iter().map(|c| -c).collect(), den: self.den }
    }
}

impl Sub for Germ {
    type Output = Germ;
    fn sub(self, rhs: Germ) -> Germ {
        self + (-rhs)
    }
}

impl Mul for Germ {
    type Output = Germ;
    fn mul(self, rhs: Germ) -> Germ {
        Germ::new(poly_mul(&self.num, &rhs.num), poly_mul(&self.den, &rhs.den))
    }
}

impl Div for Germ {
    type Output = Germ;
    fn div(self, rhs: Germ) -> Germ {
        assert!(!rhs.num.is_empty(), "germ division by zero");
        Germ::new(poly_mul(&self.num, &rhs.den), poly_mul(&self.den, &rhs.num))
    }
}

impl Scalar for Germ {
    fn from_rational(r: &Rational) -> Self {
        Germ::constant(r.clone())
    }
}
