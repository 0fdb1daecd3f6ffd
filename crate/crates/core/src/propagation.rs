//! Coherent extension of a precise assessment to one further conditional
//! event, by exact linear programming.

use num_traits::{One, Zero};

use crate::coherence::{check_coherence, grid_points};
use crate::constituents::{enumerate_constituents, ConstituentTable};
use crate::error::{Error, Result};
use crate::event::ConditionalEvent;
use crate::interval::{BoxAssessment, ExtensionInterval, OpenInterval};
use crate::lp::{self, LpOutcome, LpProblem, LpSolution, Relation, Sense};
use crate::par::{self, Execution};
use crate::rational::Rational;

pub use crate::lp::LpProblem as LPProblem;

/// Solves a linear program, reporting infeasibility and unboundedness as
/// errors.
pub fn lp_optimize(problem: &LpProblem) -> Result<LpSolution> {
    match lp::solve(problem) {
        LpOutcome::Optimal(s) => Ok(s),
        LpOutcome::Infeasible => Err(Error::Infeasible),
        LpOutcome::Unbounded => Err(Error::Unbounded),
    }
}

/// How a probe settled its bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeOutcome {
    /// The probe value was unattainable and the bound is an LP optimum.
    Optimized,
    /// The target antecedent can receive positive mass at the probe value.
    PositiveTarget,
    /// The target antecedent has zero mass but every premise antecedent can
    /// receive positive mass; no witness is produced.
    ZeroTargetPositivePremises,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeTrace {
    pub bound: Rational,
    pub outcome: ProbeOutcome,
    /// Number of restarts on a reduced premise family.
    pub restarts: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub interval: ExtensionInterval,
    pub lower: ProbeTrace,
    pub upper: ProbeTrace,
}

impl ExtensionReport {
    pub fn diagnostics(&self) -> Vec<String> {
        let mut notes = Vec::new();
        for (name, t) in [("lower", &self.lower), ("upper", &self.upper)] {
            if t.outcome == ProbeOutcome::ZeroTargetPositivePremises {
                notes.push(format!(
                    "{name} bound reached with zero mass on the target antecedent; no witness returned"
                ));
            }
            if t.restarts > 0 {
                notes.push(format!("{name} bound required {} restart(s) on a reduced family", t.restarts));
            }
        }
        notes
    }
}

/// Row of `Σ_{E H} λ − v Σ_{H} λ` for member `j` of the table's family.
fn conditional_row(table: &ConstituentTable, j: usize, v: &Rational) -> Vec<Rational> {
    table
        .constituents
        .iter()
        .map(|c| match (c.in_antecedent(j), c.verifies(j)) {
            (false, _) => Rational::zero(),
            (true, true) => Rational::one() - v,
            (true, false) => -v.clone(),
        })
        .collect()
}

fn indicator(table: &ConstituentTable, pred: impl Fn(usize) -> bool) -> Vec<Rational> {
    (0..table.len()).map(|h| if pred(h) { Rational::one() } else { Rational::zero() }).collect()
}

fn max_value(problem: &LpProblem, objective: Vec<Rational>) -> Result<Rational> {
    Ok(lp_optimize(&problem.clone().with_objective(objective, Sense::Max))?.value)
}

/// Runs the probe at `z0 ∈ {0, 1}`; yields the lower bound for 0 and the upper
/// bound for 1.
fn probe(
    family: &[ConditionalEvent],
    values: &[Rational],
    target: &ConditionalEvent,
    z0: Rational,
) -> Result<ProbeTrace> {
    let mut idx: Vec<usize> = (0..family.len()).collect();
    for restarts in 0..=family.len() {
        let mut fam: Vec<ConditionalEvent> = idx.iter().map(|&j| family[j].clone()).collect();
        fam.push(target.clone());
        let t = fam.len() - 1;
        let table = enumerate_constituents(&fam)?;
        let m = table.len();
        let mut premises = LpProblem::new(m, Sense::Min);
        for (k, &j) in idx.iter().enumerate() {
            premises.push(conditional_row(&table, k, &values[j]), Relation::Eq, Rational::zero());
        }
        let mut system = premises.clone();
        system.push(conditional_row(&table, t, &z0), Relation::Eq, Rational::zero());
        system.push(vec![Rational::one(); m], Relation::Eq, Rational::one());

        let Some(witness) = lp::feasible_point(&system) else {
            let mut step2 = premises;
            step2.push(indicator(&table, |h| table.constituents[h].in_antecedent(t)), Relation::Eq, Rational::one());
            let sense = if z0.is_zero() { Sense::Min } else { Sense::Max };
            let objective = indicator(&table, |h| table.constituents[h].verifies(t));
            let bound = lp_optimize(&step2.with_objective(objective, sense))?.value;
            return Ok(ProbeTrace { bound, outcome: ProbeOutcome::Optimized, restarts });
        };
        let mass = |j: usize| -> Rational {
            table.constituents.iter().zip(&witness).filter(|(c, _)| c.in_antecedent(j)).map(|(_, l)| l.clone()).sum()
        };
        let phi = |j: usize| indicator(&table, |h| table.constituents[h].in_antecedent(j));
        if !mass(t).is_zero() || !max_value(&system, phi(t))?.is_zero() {
            return Ok(ProbeTrace { bound: z0, outcome: ProbeOutcome::PositiveTarget, restarts });
        }
        let mut zero = Vec::new();
        for k in 0..t {
            if mass(k).is_zero() && max_value(&system, phi(k))?.is_zero() {
                zero.push(idx[k]);
            }
        }
        if zero.is_empty() {
            return Ok(ProbeTrace { bound: z0, outcome: ProbeOutcome::ZeroTargetPositivePremises, restarts });
        }
        idx = zero;
    }
    Err(Error::Internal("extension probe did not terminate within the family length".into()))
}

/// Lower and upper coherent extension bounds, with per-probe traces.
pub fn extension_report(
    family: &[ConditionalEvent],
    assessment: &[Rational],
    target: &ConditionalEvent,
) -> Result<ExtensionReport> {
    if !target.antecedent.is_satisfiable() {
        return Err(Error::ImpossibleAntecedent(target.antecedent.to_string()));
    }
    if !check_coherence(family, assessment)? {
        return Err(Error::IncoherentPremises);
    }
    let lower = probe(family, assessment, target, Rational::zero())?;
    let upper = probe(family, assessment, target, Rational::one())?;
    if lower.bound > upper.bound {
        return Err(Error::Internal("extension bounds crossed".into()));
    }
    Ok(ExtensionReport { interval: ExtensionInterval::new(lower.bound.clone(), upper.bound.clone()), lower, upper })
}

pub fn extension_bounds(
    family: &[ConditionalEvent],
    assessment: &[Rational],
    target: &ConditionalEvent,
) -> Result<ExtensionInterval> {
    Ok(extension_report(family, assessment, target)?.interval)
}

/// Hull of the extension bounds over the coherent grid points of a box.
///
/// Approximates the coherent extension set of the box from inside; returns
/// `None` when no grid point is coherent.
pub fn extension_union_sampled(
    family: &[ConditionalEvent],
    bx: &BoxAssessment,
    target: &ConditionalEvent,
    density: usize,
    exec: Execution,
) -> Result<Option<ExtensionInterval>> {
    if bx.len() != family.len() {
        return Err(Error::LengthMismatch { expected: family.len(), found: bx.len() });
    }
    bx.iter().try_for_each(OpenInterval::validate)?;
    let points = grid_points(bx, density)?;
    let results = par::map(exec, &points, |p| match extension_bounds(family, p, target) {
        Err(Error::IncoherentPremises) => Ok(None),
        other => other.map(Some),
    });
    let mut hull: Option<ExtensionInterval> = None;
    for r in results {
        if let Some(iv) = r? {
            hull = Some(match hull {
                None => iv,
                Some(h) => h.hull(&iv),
            });
        }
    }
    Ok(hull)
}
