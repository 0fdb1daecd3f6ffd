use num_traits::{One, Zero};
use proptest::prelude::*;
use syllogic::figures::{
    figure1_bounds, figure1_box_bounds, figure2_bounds, figure2_box_bounds, figure3_bounds, figure3_box_bounds,
};
use syllogic::rational::rat;
use syllogic::{
    extension_bounds, extension_union_sampled, sigma_with_openness, Error, Execution, ExtensionInterval, Figure,
    FigureBox, OpenInterval, Rational,
};

fn r(n: i64, d: i64) -> Rational {
    rat(n, d)
}

fn iv(a: Rational, b: Rational) -> ExtensionInterval {
    ExtensionInterval::new(a, b)
}

fn unit() -> ExtensionInterval {
    ExtensionInterval::unit()
}

fn axis(steps: i64) -> Vec<Rational> {
    (0..=steps).map(|i| r(i, steps)).collect()
}

fn closed_box(x: (Rational, Rational), y: (Rational, Rational), t: (Rational, Rational)) -> FigureBox {
    FigureBox::new(iv(x.0, x.1), iv(y.0, y.1), iv(t.0, t.1))
}

#[test]
fn figure_one_examples() {
    for t in [r(1, 7), r(1, 2), r(1, 1)] {
        assert_eq!(figure1_bounds(&r(1, 1), &r(1, 1), &t), iv(r(1, 1), r(1, 1)));
    }
    assert_eq!(figure1_bounds(&r(1, 3), &r(2, 5), &r(0, 1)), unit());
    assert_eq!(figure1_bounds(&r(4, 5), &r(9, 10), &r(1, 2)), iv(r(13, 25), r(1, 1)));

    let one = (r(1, 1), r(1, 1));
    assert_eq!(figure1_box_bounds(&closed_box(one.clone(), one, (r(1, 4), r(1, 1)))), iv(r(1, 1), r(1, 1)));
    assert_eq!(figure1_box_bounds(&closed_box((r(0, 1), r(1, 1)), (r(0, 1), r(1, 1)), (r(0, 1), r(1, 1)))), unit());
    let half = (r(1, 2), r(1, 1));
    assert_eq!(figure1_box_bounds(&closed_box(half.clone(), half.clone(), half)), unit());
}

#[test]
fn figure_two_examples() {
    for (y, t) in [(r(1, 3), r(1, 2)), (r(1, 1), r(1, 5)), (r(7, 9), r(1, 1))] {
        assert_eq!(figure2_bounds(&r(1, 1), &y, &t), iv(y.clone(), r(1, 1)));
    }
    assert_eq!(figure2_bounds(&r(1, 2), &r(1, 2), &r(1, 2)), unit());
    assert_eq!(figure2_bounds(&r(1, 10), &r(1, 20), &r(4, 5)), iv(r(11, 12), r(1, 1)));

    let y1 = r(2, 3);
    let bx = closed_box((r(1, 1), r(1, 1)), (y1.clone(), r(1, 1)), (r(1, 3), r(1, 1)));
    assert_eq!(figure2_box_bounds(&bx), iv(y1, r(1, 1)));
    assert_eq!(figure2_box_bounds(&closed_box((r(0, 1), r(1, 1)), (r(0, 1), r(1, 1)), (r(0, 1), r(1, 1)))), unit());
    let bx = closed_box((r(9, 10), r(1, 1)), (r(3, 4), r(1, 1)), (r(1, 2), r(1, 1)));
    assert_eq!(figure2_box_bounds(&bx), iv(r(11, 18), r(1, 1)));
}

#[test]
fn figure_two_ties_are_non_informative() {
    // x + yt = 1 and x + yt = t sit on the middle case.
    assert_eq!(figure2_bounds(&r(1, 2), &r(1, 2), &r(1, 1)), unit());
    assert_eq!(figure2_bounds(&r(0, 1), &r(1, 1), &r(1, 2)), unit());
    assert_eq!(figure2_bounds(&r(1, 1), &r(0, 1), &r(1, 1)), unit());
}

#[test]
fn figure_three_examples() {
    for t in [r(0, 1), r(1, 3), r(1, 1)] {
        assert_eq!(figure3_bounds(&r(1, 1), &r(1, 1), &t), iv(t.clone(), r(1, 1)));
    }
    assert_eq!(figure3_bounds(&r(2, 9), &r(5, 6), &r(0, 1)), unit());
    assert_eq!(figure3_bounds(&r(7, 10), &r(4, 5), &r(1, 2)), iv(r(5, 18), r(17, 18)));

    assert_eq!(figure3_box_bounds(&closed_box((r(0, 1), r(1, 1)), (r(0, 1), r(1, 1)), (r(0, 1), r(1, 1)))), unit());
    assert_eq!(figure3_box_bounds(&FigureBox::point(r(7, 10), r(4, 5), r(1, 2))), iv(r(5, 18), r(17, 18)));
    let bx = closed_box((r(0, 1), r(1, 4)), (r(9, 10), r(1, 1)), (r(1, 2), r(1, 1)));
    assert_eq!(figure3_box_bounds(&bx), iv(r(0, 1), r(25, 38)));
}

#[test]
fn figure_names_parse() {
    assert_eq!("ii".parse::<Figure>().unwrap(), Figure::II);
    assert_eq!("3".parse::<Figure>().unwrap(), Figure::III);
    assert!("IV".parse::<Figure>().is_err());
}

#[test]
fn degenerate_boxes_match_points() {
    let a = axis(8);
    for fig in Figure::ALL {
        for x in &a {
            for y in &a {
                for t in &a {
                    let bx = FigureBox::point(x.clone(), y.clone(), t.clone());
                    assert_eq!(fig.box_bounds(&bx), fig.bounds(x, y, t));
                }
            }
        }
    }
}

#[test]
fn figure_three_complement_identity() {
    let a = axis(20);
    for x in &a {
        for y in &a {
            for t in &a {
                let lower = figure3_bounds(x, y, t).lower;
                let upper = figure3_bounds(&(Rational::one() - x), y, t).upper;
                assert_eq!(lower + upper, Rational::one(), "at ({x}, {y}, {t})");
            }
        }
    }
}

/// Checks `f` is monotone along each axis where `domain` holds at both ends.
fn sweep(
    steps: i64,
    domain: impl Fn(&Rational, &Rational, &Rational) -> bool,
    f: impl Fn(&Rational, &Rational, &Rational) -> Rational,
    directions: [i8; 3],
) {
    let a = axis(steps);
    let n = a.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let here = [i, j, k];
                for (d, &dir) in directions.iter().enumerate() {
                    let mut next = here;
                    next[d] += 1;
                    if next[d] >= n {
                        continue;
                    }
                    let (p, q) = ((&a[here[0]], &a[here[1]], &a[here[2]]), (&a[next[0]], &a[next[1]], &a[next[2]]));
                    if !domain(p.0, p.1, p.2) || !domain(q.0, q.1, q.2) {
                        continue;
                    }
                    let (u, v) = (f(p.0, p.1, p.2), f(q.0, q.1, q.2));
                    let ok = if dir > 0 { u <= v } else { u >= v };
                    assert!(ok, "axis {d} at {p:?} -> {q:?}: {u} vs {v}");
                }
            }
        }
    }
}

#[test]
fn monotonicity_of_the_bound_functions() {
    let lower = |fig: Figure| move |x: &Rational, y: &Rational, t: &Rational| fig.bounds(x, y, t).lower;
    let upper = |fig: Figure| move |x: &Rational, y: &Rational, t: &Rational| fig.bounds(x, y, t).upper;
    sweep(20, |_, _, t| !t.is_zero(), lower(Figure::I), [1, 1, 1]);
    sweep(20, |x, y, t| x + y * t > Rational::one(), lower(Figure::II), [1, 1, 1]);
    sweep(20, |_, _, _| true, lower(Figure::III), [1, 1, 1]);
    sweep(20, |x, y, t| t * (y - x) > Rational::zero(), upper(Figure::III), [1, -1, -1]);
}

#[test]
fn sigma_examples() {
    let one = || OpenInterval::point(r(1, 1));
    let zero = || OpenInterval::point(r(0, 1));
    let pos = OpenInterval::positive;
    let below = OpenInterval::below_one;
    let cases = [
        (Figure::I, [one(), pos(), pos()], pos()),
        (Figure::III, [below(), one(), pos()], below()),
        (Figure::II, [zero(), below(), pos()], pos()),
        (Figure::I, [one(), one(), pos()], one()),
        (Figure::I, [zero(), one(), pos()], zero()),
        (Figure::I, [zero(), pos(), pos()], below()),
        (Figure::II, [one(), one(), pos()], one()),
        (Figure::II, [one(), pos(), pos()], pos()),
        (Figure::III, [one(), one(), pos()], pos()),
        (Figure::III, [pos(), one(), pos()], pos()),
        (Figure::III, [one(), pos(), pos()], pos()),
        (Figure::I, [one(), one(), OpenInterval::unit()], OpenInterval::unit()),
    ];
    for (fig, bx, want) in cases {
        assert_eq!(sigma_with_openness(fig, &bx).unwrap(), want, "figure {fig} box {bx:?}");
    }
}

#[test]
fn sigma_rejects_malformed_boxes() {
    let bad = OpenInterval { lower: r(1, 2), upper: r(1, 2), lower_open: true, upper_open: false };
    let bx = [bad, OpenInterval::unit(), OpenInterval::unit()];
    assert!(matches!(sigma_with_openness(Figure::I, &bx), Err(Error::MalformedInterval(_))));
}

fn arb_interval() -> impl Strategy<Value = OpenInterval> {
    (0i64..=4, 0i64..=4, any::<bool>(), any::<bool>()).prop_map(|(a, b, lo, hi)| {
        let (a, b) = (a.min(b), a.max(b));
        let (lo, hi) = if a == b { (false, false) } else { (lo, hi) };
        OpenInterval::new(r(a, 4), r(b, 4), lo, hi).unwrap()
    })
}

fn arb_closed() -> impl Strategy<Value = ExtensionInterval> {
    (0i64..=4, 0i64..=4).prop_map(|(a, b)| iv(r(a.min(b), 4), r(a.max(b), 4)))
}

fn fig() -> impl Strategy<Value = Figure> {
    prop_oneof![Just(Figure::I), Just(Figure::II), Just(Figure::III)]
}

fn unit_rational() -> impl Strategy<Value = Rational> {
    (1i64..=40).prop_flat_map(|d| (0..=d).prop_map(move |n| rat(n, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn closed_forms_match_the_lp(f in fig(), x in unit_rational(), y in unit_rational(), t in unit_rational()) {
        let lp = extension_bounds(&f.premise_family(), &[x.clone(), y.clone(), t.clone()], &f.target()).unwrap();
        prop_assert_eq!(f.bounds(&x, &y, &t), lp);
    }

    #[test]
    fn sampled_union_sits_inside_box_bounds_and_matches_it_on_refinement(
        f in fig(), x in arb_closed(), y in arb_closed(), t in arb_closed()
    ) {
        let bx = FigureBox::new(x.clone(), y.clone(), t.clone());
        let closed: Vec<OpenInterval> =
            [&x, &y, &t].iter().map(|c| OpenInterval::closed(c.lower.clone(), c.upper.clone())).collect();
        let exact = f.box_bounds(&bx);
        // I and III attain their box extremes at corners, which a density-2
        // grid hits. II can reach its middle case only inside the box, so it
        // needs the refined grid containing every quarter point.
        let coarse = if f == Figure::II { 5 } else { 2 };
        for density in [2, 3, 5] {
            let sampled = extension_union_sampled(&f.premise_family(), &closed, &f.target(), density, Execution::Parallel)
                .unwrap()
                .unwrap();
            prop_assert!(exact.contains_interval(&sampled));
            if density >= coarse {
                prop_assert_eq!(&sampled, &exact);
            }
        }
    }

    #[test]
    fn sigma_of_a_closed_box_is_the_closed_box_bound(f in fig(), x in arb_closed(), y in arb_closed(), t in arb_closed()) {
        let bx = [&x, &y, &t].map(|c| OpenInterval::closed(c.lower.clone(), c.upper.clone()));
        let sigma = sigma_with_openness(f, &bx).unwrap();
        let want = f.box_bounds(&FigureBox::new(x, y, t));
        prop_assert_eq!(sigma, OpenInterval::closed(want.lower, want.upper));
    }

    #[test]
    fn sigma_sits_between_interior_samples_and_the_closure(
        f in fig(), bx in prop::array::uniform3(arb_interval())
    ) {
        let sigma = sigma_with_openness(f, &bx).unwrap();
        let closure = f.box_bounds(&FigureBox::new(bx[0].closure(), bx[1].closure(), bx[2].closure()));
        prop_assert!(closure.contains_interval(&sigma.closure()));
        let sampled = extension_union_sampled(&f.premise_family(), &bx.to_vec(), &f.target(), 5, Execution::Parallel)
            .unwrap();
        if let Some(s) = sampled {
            prop_assert!(sigma.contains(&s.lower) && sigma.contains(&s.upper), "sigma {} sample {}", sigma, s);
        }
    }
}
