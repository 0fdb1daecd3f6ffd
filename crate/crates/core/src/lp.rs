//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Every problem is first attempted with a checked 128-bit rational type; if any
//! intermediate value overflows, the solve is repeated with arbitrary
//! precision. Both paths perform the same pivots, so results are identical.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Constraint { coeffs, relation, rhs }
    }
}

/// `optimize objective · x` subject to the constraints and `x ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpProblem {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
    pub objective: Vec<Rational>,
    pub sense: Sense,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub point: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LpProblem {
    pub fn new(num_vars: usize, sense: Sense) -> Self {
        LpProblem { num_vars, constraints: Vec::new(), objective: vec![Rational::zero(); num_vars], sense }
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        debug_assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint::new(coeffs, relation, rhs));
    }

    pub fn with_objective(mut self, objective: Vec<Rational>, sense: Sense) -> Self {
        self.objective = objective;
        self.sense = sense;
        self
    }
}

pub fn solve(problem: &LpProblem) -> LpOutcome {
    if let Some(out) = run::<Q>(problem) {
        return out;
    }
    run::<Rational>(problem).expect("arbitrary precision never overflows")
}

/// Any feasible point, or `None`.
pub fn feasible_point(problem: &LpProblem) -> Option<Vec<Rational>> {
    let mut p = problem.clone();
    p.objective = vec![Rational::zero(); p.num_vars];
    match solve(&p) {
        LpOutcome::Optimal(s) => Some(s.point),
        _ => None,
    }
}

trait Field: Clone {
    fn from_rational(r: &Rational) -> Option<Self>;
    fn to_rational(&self) -> Rational;
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn compare(&self, o: &Self) -> Ordering;
    fn poisoned(&self) -> bool;
}

impl Field for Rational {
    fn from_rational(r: &Rational) -> Option<Self> {
        Some(r.clone())
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn compare(&self, o: &Self) -> Ordering {
        self.cmp(o)
    }
    fn poisoned(&self) -> bool {
        false
    }
}

/// Reduced 128-bit rational; a zero denominator marks an overflowed value.
#[derive(Clone, Copy, Debug)]
struct Q {
    n: i128,
    d: i128,
}

const POISON: Q = Q { n: 0, d: 0 };

impl Q {
    fn make(n: Option<i128>, d: Option<i128>) -> Q {
        match (n, d) {
            (Some(n), Some(d)) if d != 0 => {
                let g = n.gcd(&d);
                let (mut n, mut d) = (n / g, d / g);
                if d < 0 {
                    match (n.checked_neg(), d.checked_neg()) {
                        (Some(a), Some(b)) => {
                            n = a;
                            d = b;
                        }
                        _ => return POISON,
                    }
                }
                Q { n, d }
            }
            _ => POISON,
        }
    }
}

impl Field for Q {
    fn from_rational(r: &Rational) -> Option<Self> {
        let n = r.numer().to_i128()?;
        let d = r.denom().to_i128()?;
        // Headroom keeps the first products in range.
        (n.unsigned_abs() < 1 << 62 && d < 1 << 62).then_some(Q { n, d })
    }
    fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.n), BigInt::from(self.d))
    }
    fn nil() -> Self {
        Q { n: 0, d: 1 }
    }
    fn unit() -> Self {
        Q { n: 1, d: 1 }
    }
    fn is_zero(&self) -> bool {
        self.n == 0
    }
    fn is_positive(&self) -> bool {
        self.n > 0
    }
    fn is_negative(&self) -> bool {
        self.n < 0
    }
    fn add(&self, o: &Self) -> Self {
        if self.d == 0 || o.d == 0 {
            return POISON;
        }
        if self.n == 0 {
            return *o;
        }
        if o.n == 0 {
            return *self;
        }
        let g = self.d.gcd(&o.d);
        let (a, b) = (self.d / g, o.d / g);
        let n = self.n.checked_mul(b).zip(o.n.checked_mul(a)).and_then(|(x, y)| x.checked_add(y));
        Q::make(n, a.checked_mul(o.d))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.d == 0 || o.d == 0 {
            return POISON;
        }
        if self.n == 0 || o.n == 0 {
            return Q::nil();
        }
        let g1 = self.n.gcd(&o.d);
        let g2 = o.n.gcd(&self.d);
        let n = (self.n / g1).checked_mul(o.n / g2);
        let d = (self.d / g2).checked_mul(o.d / g1);
        Q::make(n, d)
    }
    fn div(&self, o: &Self) -> Self {
        if o.d == 0 || o.n == 0 {
            return POISON;
        }
        self.mul(&Q::make(Some(o.d), Some(o.n)))
    }
    fn neg(&self) -> Self {
        match self.n.checked_neg() {
            Some(n) => Q { n, d: self.d },
            None => POISON,
        }
    }
    fn compare(&self, o: &Self) -> Ordering {
        if self.poisoned() || o.poisoned() {
            return Ordering::Equal;
        }
        let l = self.n.checked_mul(o.d);
        let r = o.n.checked_mul(self.d);
        match (l, r) {
            (Some(l), Some(r)) => l.cmp(&r),
            _ => self.to_rational().cmp(&o.to_rational()),
        }
    }
    fn poisoned(&self) -> bool {
        self.d == 0
    }
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    obj: Vec<T>,
    cols: usize,
    poisoned: bool,
}

enum Phase {
    Optimal,
    Unbounded,
}

impl<T: Field> Tableau<T> {
    fn rhs(&self, i: usize) -> &T {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let inv = T::unit().div(&self.rows[r][e]);
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v = v.mul(&inv);
                self.poisoned |= v.poisoned();
            }
        }
        let pivot_row = self.rows[r].clone();
        let nz: Vec<usize> = (0..=self.cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<T>, poisoned: &mut bool| {
            let f = row[e].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nz {
                row[j] = row[j].sub(&f.mul(&pivot_row[j]));
                *poisoned |= row[j].poisoned();
            }
        };
        let mut poisoned = self.poisoned;
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row, &mut poisoned);
            }
        }
        eliminate(&mut self.obj, &mut poisoned);
        self.poisoned = poisoned;
        self.basis[r] = e;
    }

    /// Minimizes over columns `< allowed` with Bland's rule.
    fn optimize(&mut self, allowed: usize) -> Option<Phase> {
        loop {
            if self.poisoned {
                return None;
            }
            let Some(e) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return Some(Phase::Optimal);
            };
            let mut best: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i).div(a);
                if ratio.poisoned() {
                    return None;
                }
                let better = match &best {
                    None => true,
                    Some((b, r)) => match ratio.compare(r) {
                        Ordering::Less => true,
                        Ordering::Equal => self.basis[i] < self.basis[*b],
                        Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return Some(Phase::Unbounded),
                Some((r, _)) => self.pivot(r, e),
            }
        }
    }
}

fn run<T: Field>(problem: &LpProblem) -> Option<LpOutcome> {
    let n = problem.num_vars;
    let m = problem.constraints.len();
    let slack_count = problem.constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let first_art = n + slack_count;
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut needs_art = Vec::with_capacity(m);
    let mut slack = n;
    for c in &problem.constraints {
        let mut row = vec![T::nil(); first_art];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = T::from_rational(a)?;
        }
        let mut rhs = T::from_rational(&c.rhs)?;
        let mut slack_col = None;
        match c.relation {
            Relation::Eq => {}
            Relation::Le => {
                row[slack] = T::unit();
                slack_col = Some(slack);
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = T::unit().neg();
                slack_col = Some(slack);
                slack += 1;
            }
        }
        if rhs.is_negative() {
            row.iter_mut().for_each(|v| *v = v.neg());
            rhs = rhs.neg();
        }
        match slack_col {
            Some(s) if row[s].is_positive() => {
                basis.push(s);
                needs_art.push(false);
            }
            _ => {
                basis.push(usize::MAX);
                needs_art.push(true);
            }
        }
        row.push(rhs);
        rows.push(row);
    }
    let art_count = needs_art.iter().filter(|a| **a).count();
    let cols = first_art + art_count;
    let mut art = first_art;
    for (i, row) in rows.iter_mut().enumerate() {
        let rhs = row.pop().unwrap();
        row.resize(cols, T::nil());
        if needs_art[i] {
            row[art] = T::unit();
            basis[i] = art;
            art += 1;
        }
        row.push(rhs);
    }
    let mut obj = vec![T::nil(); cols + 1];
    for (i, row) in rows.iter().enumerate() {
        if needs_art[i] {
            for (o, v) in obj.iter_mut().zip(row) {
                *o = o.sub(v);
            }
        }
    }
    for o in obj.iter_mut().take(cols).skip(first_art) {
        *o = T::nil();
    }
    let mut tab = Tableau { rows, basis, obj, cols, poisoned: false };

    if art_count > 0 {
        tab.optimize(cols)?;
        if !tab.obj[cols].is_zero() {
            return Some(LpOutcome::Infeasible);
        }
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= first_art {
                match (0..first_art).find(|&j| !tab.rows[i][j].is_zero()) {
                    Some(j) => {
                        tab.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        tab.rows.remove(i);
                        tab.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
        if tab.poisoned {
            return None;
        }
    }

    let mut cost = vec![T::nil(); cols];
    for (j, c) in problem.objective.iter().enumerate() {
        let v = T::from_rational(c)?;
        cost[j] = if problem.sense == Sense::Max { v.neg() } else { v };
    }
    let mut obj = vec![T::nil(); cols + 1];
    obj[..cols].clone_from_slice(&cost);
    for (i, row) in tab.rows.iter().enumerate() {
        let cb = &cost[tab.basis[i]];
        if cb.is_zero() {
            continue;
        }
        for (o, v) in obj.iter_mut().zip(row) {
            *o = o.sub(&cb.mul(v));
        }
    }
    tab.obj = obj;
    match tab.optimize(first_art)? {
        Phase::Unbounded => return Some(LpOutcome::Unbounded),
        Phase::Optimal => {}
    }
    let mut point = vec![Rational::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            point[b] = tab.rhs(i).to_rational();
        }
    }
    let value = problem.objective.iter().zip(&point).map(|(c, x)| c * x).sum();
    Some(LpOutcome::Optimal(LpSolution { value, point }))
}
