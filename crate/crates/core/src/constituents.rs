//! Constituents generated by a finite family of conditional events.

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::event::{ConditionalEvent, Truth};
use crate::rational::{check_unit, Rational};

pub const MAX_ATOMS: usize = 12;

/// A set of worlds inducing the same truth value on every member of the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constituent {
    /// Worlds in descending order; the first one is the representative.
    pub worlds: Vec<u32>,
    /// Truth value of each conditional event of the family on this constituent.
    pub cells: Vec<Truth>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstituentTable {
    pub atoms: Vec<String>,
    /// Constituents contained in the disjunction of the antecedents.
    pub constituents: Vec<Constituent>,
    /// Worlds outside every antecedent, if any.
    pub residual: Option<Vec<u32>>,
}

impl Constituent {
    /// Whether the constituent lies inside the antecedent of member `j`.
    pub fn in_antecedent(&self, j: usize) -> bool {
        self.cells[j] != Truth::Void
    }

    pub fn verifies(&self, j: usize) -> bool {
        self.cells[j] == Truth::True
    }
}

pub fn family_atoms(family: &[ConditionalEvent]) -> BTreeSet<String> {
    let mut atoms = BTreeSet::new();
    for c in family {
        atoms.extend(c.atoms());
    }
    atoms
}

/// Partitions all atom assignments by their cells `E_jH_j`, `Ē_jH_j`, `H̄_j`.
///
/// Constituents are ordered by representative world, enumerated from the
/// all-true assignment downward with atoms in alphabetical order.
pub fn enumerate_constituents(family: &[ConditionalEvent]) -> Result<ConstituentTable> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let atoms: Vec<String> = family_atoms(family).into_iter().collect();
    if atoms.len() > MAX_ATOMS {
        return Err(Error::TooManyAtoms { found: atoms.len(), limit: MAX_ATOMS });
    }
    let mut constituents: Vec<Constituent> = Vec::new();
    let mut index: HashMap<Vec<Truth>, usize> = HashMap::new();
    let mut residual = Vec::new();
    let mut satisfied = vec![false; family.len()];
    for world in (0..1u32 << atoms.len()).rev() {
        let cells: Vec<Truth> = family.iter().map(|c| c.truth(&atoms, world)).collect();
        if cells.iter().all(|c| *c == Truth::Void) {
            residual.push(world);
            continue;
        }
        for (j, c) in cells.iter().enumerate() {
            satisfied[j] |= *c != Truth::Void;
        }
        match index.get(&cells) {
            Some(&h) => constituents[h].worlds.push(world),
            None => {
                index.insert(cells.clone(), constituents.len());
                constituents.push(Constituent { worlds: vec![world], cells });
            }
        }
    }
    if let Some(j) = satisfied.iter().position(|s| !s) {
        return Err(Error::ImpossibleAntecedent(family[j].antecedent.to_string()));
    }
    let residual = if residual.is_empty() { None } else { Some(residual) };
    Ok(ConstituentTable { atoms, constituents, residual })
}

impl ConstituentTable {
    pub fn len(&self) -> usize {
        self.constituents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constituents.is_empty()
    }

    pub fn family_len(&self) -> usize {
        self.constituents.first().map_or(0, |c| c.cells.len())
    }

    /// Renders a set of worlds as a conjunction of literals when it is a cube,
    /// otherwise as a disjunction of such conjunctions.
    pub fn describe_worlds(&self, worlds: &[u32]) -> String {
        describe_worlds(&self.atoms, worlds)
    }

    pub fn describe(&self, h: usize) -> String {
        self.describe_worlds(&self.constituents[h].worlds)
    }
}

fn literal(atoms: &[String], i: usize, value: bool) -> String {
    if value {
        atoms[i].clone()
    } else {
        format!("!{}", atoms[i])
    }
}

fn world_bit(k: usize, world: u32, i: usize) -> bool {
    world >> (k - 1 - i) & 1 == 1
}

pub fn describe_worlds(atoms: &[String], worlds: &[u32]) -> String {
    let k = atoms.len();
    let common: Vec<(usize, bool)> = (0..k)
        .filter_map(|i| {
            let v = world_bit(k, worlds[0], i);
            worlds.iter().all(|w| world_bit(k, *w, i) == v).then_some((i, v))
        })
        .collect();
    let conj = |lits: Vec<String>| if lits.is_empty() { "1".to_string() } else { lits.join(" & ") };
    if worlds.len() == 1usize << (k - common.len()) {
        return conj(common.iter().map(|&(i, v)| literal(atoms, i, v)).collect());
    }
    worlds
        .iter()
        .map(|w| {
            let lits = (0..k).map(|i| literal(atoms, i, world_bit(k, *w, i))).collect();
            format!("({})", conj(lits))
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Points `Q_h` with `q_hj` equal to 1, 0 or `p_j`.
pub fn points_for(table: &ConstituentTable, assessment: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    let n = table.family_len();
    if assessment.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: assessment.len() });
    }
    for p in assessment {
        check_unit(p)?;
    }
    Ok(table
        .constituents
        .iter()
        .map(|c| {
            c.cells
                .iter()
                .zip(assessment)
                .map(|(cell, p)| match cell {
                    Truth::True => Rational::one(),
                    Truth::False => Rational::zero(),
                    Truth::Void => p.clone(),
                })
                .collect()
        })
        .collect())
}
