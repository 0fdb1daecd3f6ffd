//! Coherence of precise assessments and g-coherence of box assessments.

use num_traits::{One, Signed, Zero};

use crate::constituents::{enumerate_constituents, points_for, ConstituentTable};
use crate::error::{Error, Result};
use crate::event::ConditionalEvent;
use crate::interval::{BoxAssessment, OpenInterval};
use crate::lp::{self, LpOutcome, LpProblem, Relation, Sense};
use crate::par::{self, Execution};
use crate::rational::{check_unit, Rational};

/// `Σ_h q_hj λ_h = p_j` for every `j`, then `Σ_h λ_h = 1`, with `λ ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub matrix: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
}

impl LinearSystem {
    pub fn unknowns(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    pub fn to_lp(&self) -> LpProblem {
        let mut p = LpProblem::new(self.unknowns(), Sense::Max);
        for (row, b) in self.matrix.iter().zip(&self.rhs) {
            p.push(row.clone(), Relation::Eq, b.clone());
        }
        p
    }

    /// Whether `lambda` solves the system exactly.
    pub fn is_solution(&self, lambda: &[Rational]) -> bool {
        lambda.len() == self.unknowns()
            && lambda.iter().all(|l| !l.is_negative())
            && self
                .matrix
                .iter()
                .zip(&self.rhs)
                .all(|(row, b)| row.iter().zip(lambda).map(|(a, l)| a * l).sum::<Rational>() == *b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct I0Result {
    /// `M_j`, the largest probability mass the antecedent `H_j` can receive.
    pub maxima: Vec<Rational>,
    /// Subscripts with `M_j = 0`.
    pub zero_set: Vec<usize>,
}

pub fn build_system(table: &ConstituentTable, assessment: &[Rational]) -> Result<LinearSystem> {
    let points = points_for(table, assessment)?;
    let m = table.len();
    let mut matrix: Vec<Vec<Rational>> =
        (0..assessment.len()).map(|j| (0..m).map(|h| points[h][j].clone()).collect()).collect();
    matrix.push(vec![Rational::one(); m]);
    let mut rhs = assessment.to_vec();
    rhs.push(Rational::one());
    Ok(LinearSystem { matrix, rhs })
}

pub fn solve_feasible(system: &LinearSystem) -> Option<Vec<Rational>> {
    lp::feasible_point(&system.to_lp())
}

/// Indicator row of `Φ_j = Σ_{C_h ⊆ H_j} λ_h`.
pub fn phi_row(table: &ConstituentTable, j: usize) -> Vec<Rational> {
    table
        .constituents
        .iter()
        .map(|c| if c.in_antecedent(j) { Rational::one() } else { Rational::zero() })
        .collect()
}

pub fn phi(table: &ConstituentTable, j: usize, lambda: &[Rational]) -> Rational {
    table.constituents.iter().zip(lambda).filter(|(c, _)| c.in_antecedent(j)).map(|(_, l)| l.clone()).sum()
}

fn maximize(problem: &LpProblem, objective: Vec<Rational>) -> Result<Rational> {
    match lp::solve(&problem.clone().with_objective(objective, Sense::Max)) {
        LpOutcome::Optimal(s) => Ok(s.value),
        LpOutcome::Infeasible => Err(Error::InfeasibleSystem),
        LpOutcome::Unbounded => Err(Error::Unbounded),
    }
}

pub fn compute_i0(system: &LinearSystem, table: &ConstituentTable) -> Result<I0Result> {
    let problem = system.to_lp();
    let maxima = (0..table.family_len())
        .map(|j| maximize(&problem, phi_row(table, j)))
        .collect::<Result<Vec<_>>>()?;
    let zero_set = maxima.iter().enumerate().filter(|(_, m)| m.is_zero()).map(|(j, _)| j).collect();
    Ok(I0Result { maxima, zero_set })
}

/// `I₀` computed from a known solution: only subscripts whose antecedent has
/// zero mass under the witness need an LP.
fn zero_set_from_witness(problem: &LpProblem, table: &ConstituentTable, witness: &[Rational]) -> Result<Vec<usize>> {
    let mut zero = Vec::new();
    for j in 0..table.family_len() {
        if phi(table, j, witness).is_zero() && maximize(problem, phi_row(table, j))?.is_zero() {
            zero.push(j);
        }
    }
    Ok(zero)
}

fn validate(family: &[ConditionalEvent], assessment: &[Rational]) -> Result<()> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if family.len() != assessment.len() {
        return Err(Error::LengthMismatch { expected: family.len(), found: assessment.len() });
    }
    assessment.iter().try_for_each(check_unit)
}

/// Outcome of the coherence recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    pub coherent: bool,
    /// Number of systems solved along the `I₀` chain.
    pub depth: usize,
    /// Constituents and a solution of the outermost system, when solvable.
    pub witness: Option<(ConstituentTable, Vec<Rational>)>,
}

pub fn coherence_report(family: &[ConditionalEvent], assessment: &[Rational]) -> Result<CoherenceReport> {
    validate(family, assessment)?;
    let mut idx: Vec<usize> = (0..family.len()).collect();
    let mut witness = None;
    for depth in 1..=family.len() {
        let sub: Vec<ConditionalEvent> = idx.iter().map(|&j| family[j].clone()).collect();
        let values: Vec<Rational> = idx.iter().map(|&j| assessment[j].clone()).collect();
        let table = enumerate_constituents(&sub)?;
        let system = build_system(&table, &values)?;
        let problem = system.to_lp();
        let Some(lambda) = lp::feasible_point(&problem) else {
            return Ok(CoherenceReport { coherent: false, depth, witness });
        };
        let zero = zero_set_from_witness(&problem, &table, &lambda)?;
        if witness.is_none() {
            witness = Some((table, lambda));
        }
        if zero.is_empty() {
            return Ok(CoherenceReport { coherent: true, depth, witness });
        }
        idx = zero.into_iter().map(|j| idx[j]).collect();
    }
    Err(Error::Internal("zero-probability chain did not shrink".into()))
}

pub fn check_coherence(family: &[ConditionalEvent], assessment: &[Rational]) -> Result<bool> {
    Ok(coherence_report(family, assessment)?.coherent)
}

fn validate_box(family: &[ConditionalEvent], bx: &[OpenInterval]) -> Result<()> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if family.len() != bx.len() {
        return Err(Error::LengthMismatch { expected: family.len(), found: bx.len() });
    }
    bx.iter().try_for_each(OpenInterval::validate)
}

/// Whether some precise assessment inside the box, open faces excluded, is
/// coherent.
pub fn check_g_coherence(family: &[ConditionalEvent], bx: &[OpenInterval]) -> Result<bool> {
    validate_box(family, bx)?;
    g_coherent(family, bx, family.len())
}

/// Linearized box system over the constituents not listed in `dead`:
/// `l_j Φ_j ≤ Σ_{E_jH_j} λ ≤ u_j Φ_j` and `Σ λ = 1`.
struct BoxSystem<'a> {
    table: &'a ConstituentTable,
    bx: &'a [OpenInterval],
    alive: Vec<usize>,
}

impl BoxSystem<'_> {
    fn column(&self, f: impl Fn(usize) -> Rational) -> Vec<Rational> {
        self.alive.iter().map(|&h| f(h)).collect()
    }

    fn lower_slack(&self, j: usize) -> Vec<Rational> {
        let l = &self.bx[j].lower;
        self.column(|h| {
            let c = &self.table.constituents[h];
            match (c.in_antecedent(j), c.verifies(j)) {
                (false, _) => Rational::zero(),
                (true, true) => Rational::one() - l,
                (true, false) => -l.clone(),
            }
        })
    }

    fn upper_slack(&self, j: usize) -> Vec<Rational> {
        let u = &self.bx[j].upper;
        self.column(|h| {
            let c = &self.table.constituents[h];
            match (c.in_antecedent(j), c.verifies(j)) {
                (false, _) => Rational::zero(),
                (true, true) => u - Rational::one(),
                (true, false) => u.clone(),
            }
        })
    }

    fn phi(&self, j: usize) -> Vec<Rational> {
        self.column(|h| if self.table.constituents[h].in_antecedent(j) { Rational::one() } else { Rational::zero() })
    }

    fn problem(&self) -> LpProblem {
        let mut p = LpProblem::new(self.alive.len(), Sense::Max);
        p.push(vec![Rational::one(); self.alive.len()], Relation::Eq, Rational::one());
        for (j, iv) in self.bx.iter().enumerate() {
            if iv.lower.is_positive() {
                p.push(self.lower_slack(j), Relation::Ge, Rational::zero());
            }
            if !iv.upper.is_one() {
                p.push(self.upper_slack(j), Relation::Ge, Rational::zero());
            }
        }
        p
    }
}

fn g_coherent(family: &[ConditionalEvent], bx: &[OpenInterval], budget: usize) -> Result<bool> {
    if budget == 0 {
        return Err(Error::Internal("g-coherence recursion exceeded the family length".into()));
    }
    let table = enumerate_constituents(family)?;
    let n = family.len();
    let base = BoxSystem { table: &table, bx, alive: (0..table.len()).collect() };
    let problem = base.problem();
    let Some(witness) = lp::feasible_point(&problem) else {
        return Ok(false);
    };
    let mut i0 = Vec::new();
    for j in 0..n {
        let mass: Rational = base.phi(j).iter().zip(&witness).map(|(a, l)| a * l).sum();
        if mass.is_zero() && maximize(&problem, base.phi(j))?.is_zero() {
            i0.push(j);
        }
    }
    let has_open = bx.iter().any(|iv| iv.lower_open || iv.upper_open);
    if !has_open {
        return if i0.is_empty() { Ok(true) } else { recurse(family, bx, &i0, budget) };
    }
    let free: Vec<usize> = (0..n).filter(|j| !i0.contains(j)).collect();
    let mut extras: Vec<u64> = (0..1u64 << free.len()).collect();
    extras.sort_by_key(|s| s.count_ones());
    for extra in extras {
        let mut zero = i0.clone();
        zero.extend(free.iter().enumerate().filter(|(b, _)| extra >> b & 1 == 1).map(|(_, &j)| j));
        zero.sort_unstable();
        if zero.len() == n {
            continue;
        }
        let alive: Vec<usize> = (0..table.len())
            .filter(|&h| zero.iter().all(|&j| !table.constituents[h].in_antecedent(j)))
            .collect();
        if alive.is_empty() {
            continue;
        }
        let sys = BoxSystem { table: &table, bx, alive };
        let problem = sys.problem();
        if lp::feasible_point(&problem).is_none() {
            continue;
        }
        let mut strict = Vec::new();
        for j in (0..n).filter(|j| !zero.contains(j)) {
            strict.push(sys.phi(j));
            if bx[j].lower_open {
                strict.push(sys.lower_slack(j));
            }
            if bx[j].upper_open {
                strict.push(sys.upper_slack(j));
            }
        }
        let mut ok = true;
        for objective in strict {
            if !maximize(&problem, objective)?.is_positive() {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        if zero.is_empty() || recurse(family, bx, &zero, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn recurse(family: &[ConditionalEvent], bx: &[OpenInterval], idx: &[usize], budget: usize) -> Result<bool> {
    let sub: Vec<ConditionalEvent> = idx.iter().map(|&j| family[j].clone()).collect();
    let sub_box: Vec<OpenInterval> = idx.iter().map(|&j| bx[j].clone()).collect();
    g_coherent(&sub, &sub_box, budget - 1)
}

/// Grid of `density` points per nondegenerate component, open endpoints
/// excluded.
pub fn grid_points(bx: &[OpenInterval], density: usize) -> Result<Vec<Vec<Rational>>> {
    if density < 2 {
        return Err(Error::GridTooCoarse(density));
    }
    let steps = Rational::from_integer((density as i64 - 1).into());
    let axes: Vec<Vec<Rational>> = bx
        .iter()
        .map(|iv| {
            if iv.is_point() {
                return vec![iv.lower.clone()];
            }
            let width = &iv.upper - &iv.lower;
            (0..density)
                .map(|i| &iv.lower + &width * Rational::from_integer((i as i64).into()) / &steps)
                .filter(|v| iv.contains(v))
                .collect()
        })
        .collect();
    let mut points: Vec<Vec<Rational>> = vec![Vec::new()];
    for axis in &axes {
        points = points
            .into_iter()
            .flat_map(|p| {
                axis.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    Ok(points)
}

/// Whether every grid point of the box is coherent.
pub fn check_t_coherence_grid(
    family: &[ConditionalEvent],
    bx: &BoxAssessment,
    density: usize,
    exec: Execution,
) -> Result<bool> {
    validate_box(family, bx)?;
    let points = grid_points(bx, density)?;
    let results = par::map(exec, &points, |p| check_coherence(family, p));
    for r in results {
        if !r? {
            return Ok(false);
        }
    }
    Ok(true)
}
