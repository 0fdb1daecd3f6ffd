use std::collections::BTreeSet;

use proptest::prelude::*;
use syllogic::rational::rat;
use syllogic::{enumerate_constituents, points_for, ConditionalEvent, Error, Event, Figure, Rational};

fn family(items: &[&str]) -> Vec<ConditionalEvent> {
    items.iter().map(|s| ConditionalEvent::parse(s).unwrap()).collect()
}

/// Expected row: constituent text and point pattern over symbols `x`, `y`, `z`
/// (the assessed values of the three members) or the constants `0`, `1`.
fn check_table(fam: &[ConditionalEvent], rows: &[(&str, [&str; 3])], residual: Option<&str>) {
    let values = [rat(2, 7), rat(3, 11), rat(5, 13)];
    let table = enumerate_constituents(fam).unwrap();
    let got: Vec<String> = (0..table.len()).map(|h| table.describe(h)).collect();
    let want: Vec<String> = rows.iter().map(|(c, _)| c.to_string()).collect();
    assert_eq!(got, want);
    assert_eq!(table.residual.as_ref().map(|r| table.describe_worlds(r)), residual.map(str::to_string));
    let points = points_for(&table, &values).unwrap();
    for (h, (_, pattern)) in rows.iter().enumerate() {
        let expected: Vec<Rational> = pattern
            .iter()
            .map(|s| match *s {
                "0" => rat(0, 1),
                "1" => rat(1, 1),
                "x" => values[0].clone(),
                "y" => values[1].clone(),
                "z" => values[2].clone(),
                other => panic!("bad symbol {other}"),
            })
            .collect();
        assert_eq!(points[h], expected, "row {h} ({})", rows[h].0);
    }
}

#[test]
fn figure_one_triple_table() {
    check_table(
        &family(&["C / B", "B / A", "C / A"]),
        &[
            ("A & B & C", ["1", "1", "1"]),
            ("A & B & !C", ["0", "1", "0"]),
            ("A & !B & C", ["x", "0", "1"]),
            ("A & !B & !C", ["x", "0", "0"]),
            ("!A & B & C", ["1", "y", "z"]),
            ("!A & B & !C", ["0", "y", "z"]),
        ],
        Some("!A & !B"),
    );
}

#[test]
fn figure_one_premise_table_merges_identical_cells() {
    // A!BC and A!B!C induce the same cells on every member, so they form a
    // single constituent A!B.
    check_table(
        &Figure::I.premise_family(),
        &[
            ("A & B & C", ["1", "1", "1"]),
            ("A & B & !C", ["0", "1", "1"]),
            ("A & !B", ["x", "0", "1"]),
            ("!A & B & C", ["1", "y", "0"]),
            ("!A & B & !C", ["0", "y", "0"]),
        ],
        Some("!A & !B"),
    );
}

#[test]
fn figure_two_triple_table() {
    check_table(
        &Figure::II.bare_family(),
        &[
            ("A & B & C", ["1", "0", "0"]),
            ("A & B & !C", ["x", "0", "1"]),
            ("A & !B & C", ["0", "1", "0"]),
            ("A & !B & !C", ["x", "1", "1"]),
            ("!A & B & C", ["1", "y", "z"]),
            ("!A & !B & C", ["0", "y", "z"]),
        ],
        Some("!A & !C"),
    );
}

#[test]
fn figure_two_premise_table() {
    check_table(
        &Figure::II.premise_family(),
        &[
            ("A & B & C", ["1", "0", "1"]),
            ("A & B & !C", ["x", "0", "1"]),
            ("A & !B & C", ["0", "1", "1"]),
            ("A & !B & !C", ["x", "1", "1"]),
            ("!A & B & C", ["1", "y", "0"]),
            ("!A & !B & C", ["0", "y", "0"]),
        ],
        Some("!A & !C"),
    );
}

#[test]
fn figure_three_premise_table() {
    check_table(
        &Figure::III.premise_family(),
        &[
            ("A & B & C", ["1", "1", "1"]),
            ("A & B & !C", ["0", "1", "1"]),
            ("A & !B", ["x", "y", "0"]),
            ("!A & B & C", ["1", "0", "1"]),
            ("!A & B & !C", ["0", "0", "1"]),
        ],
        Some("!A & !B"),
    );
}

#[test]
fn single_event_family() {
    let table = enumerate_constituents(&family(&["A / A"])).unwrap();
    assert_eq!(table.len(), 1);
    assert_eq!(table.describe(0), "A");
    assert_eq!(table.residual.as_ref().map(|r| table.describe_worlds(r)), Some("!A".to_string()));
    assert_eq!(points_for(&table, &[rat(1, 3)]).unwrap(), vec![vec![rat(1, 1)]]);
}

#[test]
fn non_cube_constituent_renders_as_disjunction() {
    // A | B as consequent under the sure event: the true cell is not a cube.
    let table = enumerate_constituents(&family(&["A | B"])).unwrap();
    assert_eq!(table.describe(0), "(A & B) | (A & !B) | (!A & B)");
    assert_eq!(table.describe(1), "!A & !B");
    assert!(table.residual.is_none());
}

#[test]
fn all_ones_point_on_constituent_inside_every_true_cell() {
    let table = enumerate_constituents(&family(&["B / A", "C / A"])).unwrap();
    let pts = points_for(&table, &[rat(1, 5), rat(3, 5)]).unwrap();
    assert_eq!(table.describe(0), "A & B & C");
    assert_eq!(pts[0], vec![rat(1, 1), rat(1, 1)]);
}

#[test]
fn errors() {
    let fam = family(&["B / A"]);
    let table = enumerate_constituents(&fam).unwrap();
    assert!(matches!(points_for(&table, &[rat(1, 2), rat(1, 2)]), Err(Error::LengthMismatch { .. })));
    assert!(matches!(points_for(&table, &[rat(3, 2)]), Err(Error::ValueOutOfRange(_))));
    let bad = ConditionalEvent { consequent: Event::atom("A"), antecedent: Event::parse("B & !B").unwrap() };
    assert!(matches!(enumerate_constituents(&[bad]), Err(Error::ImpossibleAntecedent(_))));
    assert!(matches!(enumerate_constituents(&[]), Err(Error::EmptyFamily)));
    let many: String = (0..13).map(|i| format!("X{i}")).collect::<Vec<_>>().join(" & ");
    assert!(matches!(
        enumerate_constituents(&family(&[&many])),
        Err(Error::TooManyAtoms { found: 13, .. })
    ));
}

fn arb_event(atoms: &'static [&'static str]) -> impl Strategy<Value = Event> {
    let leaf = prop_oneof![
        (0..atoms.len()).prop_map(move |i| Event::atom(atoms[i])),
        Just(Event::True),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| e.not()),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(&b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.or(&b)),
        ]
    })
}

fn arb_family() -> impl Strategy<Value = Vec<ConditionalEvent>> {
    const ATOMS: &[&str] = &["A", "B", "C", "D"];
    prop::collection::vec((arb_event(ATOMS), arb_event(ATOMS)), 1..4).prop_filter_map("satisfiable antecedents", |v| {
        v.into_iter().map(|(e, h)| ConditionalEvent::new(e, h).ok()).collect()
    })
}

proptest! {
    #[test]
    fn constituents_partition_the_worlds(fam in arb_family()) {
        let table = enumerate_constituents(&fam).unwrap();
        let k = table.atoms.len();
        let mut seen = vec![0u32; 1 << k];
        for c in &table.constituents {
            for &w in &c.worlds {
                seen[w as usize] += 1;
            }
            prop_assert!(c.cells.iter().any(|cell| *cell != syllogic::Truth::Void));
        }
        for &w in table.residual.iter().flatten() {
            seen[w as usize] += 1;
        }
        prop_assert!(seen.iter().all(|&s| s == 1));
        prop_assert!(table.len() + 1 <= 3usize.pow(fam.len() as u32));
    }

    #[test]
    fn cells_agree_with_three_valued_semantics(fam in arb_family()) {
        let table = enumerate_constituents(&fam).unwrap();
        for c in &table.constituents {
            for &w in &c.worlds {
                for (j, ce) in fam.iter().enumerate() {
                    prop_assert_eq!(ce.truth(&table.atoms, w), c.cells[j]);
                }
            }
        }
        let distinct: BTreeSet<_> = table.constituents.iter().map(|c| c.cells.clone()).collect();
        prop_assert_eq!(distinct.len(), table.len());
    }

    #[test]
    fn boolean_laws_hold(a in arb_event(&["A", "B", "C"]), b in arb_event(&["A", "B", "C"])) {
        prop_assert!(a.not().not().equivalent(&a));
        prop_assert!(a.and(&b).not().equivalent(&a.not().or(&b.not())));
        prop_assert!(a.or(&b).equivalent(&b.or(&a)));
        prop_assert!(a.and(&a.not()).equivalent(&Event::False));
        prop_assert!(Event::parse(&a.to_string()).unwrap().equivalent(&a));
    }
}
