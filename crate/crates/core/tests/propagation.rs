use num_traits::{One, Zero};
use proptest::prelude::*;
use syllogic::lp::{LpProblem, Relation, Sense};
use syllogic::propagation::ProbeOutcome;
use syllogic::rational::rat;
use syllogic::{
    check_coherence, extension_bounds, extension_report, extension_union_sampled, lp_optimize, ConditionalEvent, Error,
    Execution, ExtensionInterval, Figure, OpenInterval, Rational,
};

fn r(n: i64, d: i64) -> Rational {
    rat(n, d)
}

fn ce(s: &str) -> ConditionalEvent {
    ConditionalEvent::parse(s).unwrap()
}

fn iv(a: Rational, b: Rational) -> ExtensionInterval {
    ExtensionInterval::new(a, b)
}

fn grid(steps: i64) -> impl Iterator<Item = (Rational, Rational, Rational)> {
    let v: Vec<Rational> = (0..=steps).map(|i| r(i, steps)).collect();
    let mut out = Vec::new();
    for x in &v {
        for y in &v {
            for t in &v {
                out.push((x.clone(), y.clone(), t.clone()));
            }
        }
    }
    out.into_iter()
}

#[test]
fn trivial_program() {
    let mut p = LpProblem::new(2, Sense::Max);
    p.push(vec![r(1, 1), r(1, 1)], Relation::Eq, r(1, 1));
    let p = p.with_objective(vec![r(1, 1), r(0, 1)], Sense::Max);
    let sol = lp_optimize(&p).unwrap();
    assert_eq!(sol.value, r(1, 1));
    assert_eq!(sol.point, vec![r(1, 1), r(0, 1)]);

    let mut bad = LpProblem::new(1, Sense::Min);
    bad.push(vec![r(1, 1)], Relation::Ge, r(2, 1));
    bad.push(vec![r(1, 1)], Relation::Le, r(1, 1));
    assert_eq!(lp_optimize(&bad), Err(Error::Infeasible));
    let unbounded = LpProblem::new(1, Sense::Max).with_objective(vec![r(1, 1)], Sense::Max);
    assert_eq!(lp_optimize(&unbounded), Err(Error::Unbounded));
}

#[test]
fn figure_two_step_two_minimum() {
    // x + yt > 1: the lower probe is unattainable and the LP minimum is
    // (x + yt − 1)/(xt).
    for (x, y, t) in grid(6) {
        if &x + &y * &t <= Rational::one() {
            continue;
        }
        let rep = extension_report(&Figure::II.premise_family(), &[x.clone(), y.clone(), t.clone()], &Figure::II.target())
            .unwrap();
        assert_eq!(rep.lower.outcome, ProbeOutcome::Optimized);
        assert_eq!(rep.interval.lower, (&x + &y * &t - Rational::one()) / (&x * &t));
    }
}

#[test]
fn figure_three_step_two_minimum() {
    for (x, y, t) in grid(6) {
        let a = &t * (&x + &y - Rational::one());
        if a <= Rational::zero() {
            continue;
        }
        let rep =
            extension_report(&Figure::III.premise_family(), &[x.clone(), y.clone(), t.clone()], &Figure::III.target())
                .unwrap();
        assert_eq!(rep.lower.outcome, ProbeOutcome::Optimized);
        assert_eq!(rep.interval.lower, a / (Rational::one() - &t * (Rational::one() - &y)));
    }
}

#[test]
fn extension_examples() {
    let fam = Figure::I.premise_family();
    for t in [r(1, 10), r(1, 2), r(1, 1)] {
        assert_eq!(extension_bounds(&fam, &[r(1, 1), r(1, 1), t], &Figure::I.target()).unwrap(), iv(r(1, 1), r(1, 1)));
    }
    for (x, y) in [(r(0, 1), r(0, 1)), (r(1, 3), r(3, 4)), (r(1, 1), r(1, 1))] {
        assert_eq!(extension_bounds(&fam, &[x, y, r(0, 1)], &Figure::I.target()).unwrap(), ExtensionInterval::unit());
    }
    assert_eq!(
        extension_bounds(&Figure::II.premise_family(), &[r(9, 10), r(1, 2), r(4, 5)], &Figure::II.target()).unwrap(),
        iv(r(5, 12), r(1, 1))
    );
    assert_eq!(
        extension_bounds(&Figure::III.premise_family(), &[r(7, 10), r(4, 5), r(1, 2)], &Figure::III.target()).unwrap(),
        iv(r(5, 18), r(17, 18))
    );
}

#[test]
fn errors() {
    let fam = vec![ce("A / A")];
    assert_eq!(extension_bounds(&fam, &[r(0, 1)], &ce("B / A")), Err(Error::IncoherentPremises));
    let bad_target = ConditionalEvent { consequent: syllogic::Event::atom("B"), antecedent: syllogic::Event::False };
    assert!(matches!(extension_bounds(&fam, &[r(1, 1)], &bad_target), Err(Error::ImpossibleAntecedent(_))));
}

#[test]
fn restarts_happen_only_where_a_premise_antecedent_is_forced_null() {
    // I and II: t = 0 nulls A, and with it the antecedent of the B|A-type
    // premise, so the probe restarts. III: y = 0, t = 1 nulls A while every
    // premise antecedent keeps mass, which is the zero-target case.
    for fig in Figure::ALL {
        for (x, y, t) in grid(4) {
            let rep = extension_report(&fig.premise_family(), &[x.clone(), y.clone(), t.clone()], &fig.target()).unwrap();
            let restarted = rep.lower.restarts > 0 || rep.upper.restarts > 0;
            let zero_target = [&rep.lower, &rep.upper].iter().any(|p| p.outcome == ProbeOutcome::ZeroTargetPositivePremises);
            let (want_restart, want_zero) = match fig {
                Figure::I | Figure::II => (t.is_zero(), false),
                Figure::III => (false, y.is_zero() && t.is_one()),
            };
            assert_eq!(restarted, want_restart, "figure {fig} at ({x}, {y}, {t})");
            assert_eq!(zero_target, want_zero, "figure {fig} at ({x}, {y}, {t})");
        }
    }
}

#[test]
fn zero_target_with_positive_premises_is_reported() {
    let rep = extension_report(&[ce("A")], &[r(0, 1)], &ce("C / A")).unwrap();
    assert_eq!(rep.interval, ExtensionInterval::unit());
    assert_eq!(rep.lower.outcome, ProbeOutcome::ZeroTargetPositivePremises);
    assert_eq!(rep.upper.outcome, ProbeOutcome::ZeroTargetPositivePremises);
    assert_eq!(rep.diagnostics().len(), 2);
}

#[test]
fn sampled_unions() {
    let one = || OpenInterval::point(r(1, 1));
    let bx = vec![one(), one(), OpenInterval::closed(r(1, 4), r(1, 1))];
    for exec in [Execution::Sequential, Execution::Parallel] {
        let got = extension_union_sampled(&Figure::I.premise_family(), &bx, &Figure::I.target(), 4, exec).unwrap();
        assert_eq!(got, Some(iv(r(1, 1), r(1, 1))));
    }

    let bx = vec![one(), OpenInterval::closed(r(3, 4), r(1, 1)), OpenInterval::closed(r(1, 2), r(1, 1))];
    let got = extension_union_sampled(&Figure::II.premise_family(), &bx, &Figure::II.target(), 4, Execution::Parallel);
    assert_eq!(got.unwrap(), Some(iv(r(3, 4), r(1, 1))));

    let p = [r(7, 10), r(4, 5), r(1, 2)];
    let bx: Vec<OpenInterval> = p.iter().cloned().map(OpenInterval::point).collect();
    let fam = Figure::III.premise_family();
    assert_eq!(
        extension_union_sampled(&fam, &bx, &Figure::III.target(), 3, Execution::Parallel).unwrap(),
        Some(extension_bounds(&fam, &p, &Figure::III.target()).unwrap())
    );

    let none = extension_union_sampled(&[ce("A / A")], &vec![OpenInterval::point(r(0, 1))], &ce("B / A"), 3, Execution::Parallel);
    assert_eq!(none.unwrap(), None);
    assert!(matches!(
        extension_union_sampled(&[ce("A / A")], &vec![], &ce("B / A"), 3, Execution::Parallel),
        Err(Error::LengthMismatch { .. })
    ));
}

fn unit_rational() -> impl Strategy<Value = Rational> {
    (1i64..=30).prop_flat_map(|d| (0..=d).prop_map(move |n| rat(n, d)))
}

fn arb_family() -> impl Strategy<Value = (Vec<ConditionalEvent>, ConditionalEvent)> {
    let pool = [
        "B / A", "C / B", "C / A", "A / B", "B / C", "!B / A", "A / A | B", "B / A | B", "A / A | C", "A & B / C", "A | C / B",
        "!C / A", "C", "B",
    ];
    (prop::collection::vec(0..pool.len(), 1..4), 0..pool.len()).prop_map(move |(idx, target)| {
        (idx.into_iter().map(|i| ce(pool[i])).collect(), ce(pool[target]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn bounds_are_tight_and_attained(
        (fam, target) in arb_family(),
        vals in prop::collection::vec(unit_rational(), 3),
    ) {
        let vals = &vals[..fam.len()];
        if !check_coherence(&fam, vals).unwrap() {
            return Ok(());
        }
        let b = extension_bounds(&fam, vals, &target).unwrap();
        prop_assert!(Rational::zero() <= b.lower && b.lower <= b.upper && b.upper <= Rational::one());
        let mut ext = fam.clone();
        ext.push(target.clone());
        let with = |z: &Rational| {
            let mut v = vals.to_vec();
            v.push(z.clone());
            check_coherence(&ext, &v).unwrap()
        };
        let mid = (&b.lower + &b.upper) / rat(2, 1);
        prop_assert!(with(&b.lower));
        prop_assert!(with(&b.upper));
        prop_assert!(with(&mid));
        let step = rat(1, 97);
        if b.lower > Rational::zero() {
            let below = (&b.lower - &step).max(Rational::zero());
            prop_assert!(!with(&below));
        }
        if b.upper < Rational::one() {
            let above = (&b.upper + &step).min(Rational::one());
            prop_assert!(!with(&above));
        }
    }
}
