//! Demazure path sets in tensor form, the recursive `f`-closure oracle,
//! characters and the classical invariance check.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

use super::conditions::check_conditions;
use super::Engine;
use crate::cartan::ClassicalWeight;
use crate::crystal::Crystal;
use crate::exec::{Budget, Exec};
use crate::path::{Path, PathSpace};
use crate::schedule::Schedule;
use crate::{CrystalError, Result};

/// Which tensor form describes `B_{w^(k)}(λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kappa {
    /// `u_{λ_j} ⊗ B_a^(j) ⊗ B^{⊗(j-1)}`.
    One,
    /// `u_{λ_j} ⊗ B_a^(j,j-1) ⊗ B^{⊗(j-2)}` for `j ≥ 2`.
    Two,
}

/// Every window `(p(1), …, p(m))` with `p(t) ∈ choices`.
fn free_tails<E: Clone>(choices: &[E], m: usize) -> Vec<Vec<E>> {
    (0..m)
        .map(|_| choices.iter().cloned())
        .multi_cartesian_product()
        .collect::<Vec<_>>()
        .into_iter()
        .chain(std::iter::once(Vec::new()).filter(|_| m == 0))
        .collect()
}

/// The path set of `B_{w^(k)}(λ)` read off the tensor form for `κ`.
///
/// The hypotheses are checked first: (II), (III), (IV′) through `j` for
/// `κ = 1`, (II′) and (III) through `j` for `κ = 2`.
pub fn demazure_paths<C: Crystal>(
    engine: &Engine<C>,
    k: usize,
    kappa: Kappa,
) -> Result<BTreeSet<Path<C::Element>>> {
    let space = &engine.space;
    if k == 0 {
        return Ok(BTreeSet::from([space.ground_path()]));
    }
    let (j, a) = engine.schedule.position(k);
    let report = check_conditions(engine, j, kappa == Kappa::Two)?;
    let holds = match kappa {
        Kappa::One => report.kappa_one(),
        Kappa::Two => report.kappa_two(),
    };
    if !holds {
        return Err(CrystalError::ConditionFailure(
            serde_json::to_string(&report.to_json()).expect("report serializes"),
        ));
    }
    let all = engine.crystal().elements();
    let mut out = BTreeSet::new();
    let mut push = |window: Vec<C::Element>| -> Result<()> {
        out.insert(space.path(window));
        engine.budget.check(out.len())
    };
    if kappa == Kappa::One || j == 1 {
        let top = engine.subset(j, a)?;
        for tail in free_tails(&all, j - 1) {
            for b in &top {
                let mut w = tail.clone();
                w.push(b.clone());
                push(w)?;
            }
        }
    } else {
        let mixed = engine.mixed_subsets(j - 1)?.swap_remove(a);
        for tail in free_tails(&all, j - 2) {
            for (x, y) in &mixed {
                let mut w = tail.clone();
                w.push(y.clone());
                w.push(x.clone());
                push(w)?;
            }
        }
    }
    Ok(out)
}

/// `B_{w^(k)}(λ)` from the recursion `B_{r_i w} = ⋃_n f_i^n B_w ∖ {0}`,
/// starting at the ground-state path and following the schedule word.
pub fn recursive_oracle<C: Crystal>(
    space: &PathSpace<C>,
    schedule: &Schedule,
    k: usize,
    budget: Budget,
    exec: Exec,
) -> Result<BTreeSet<Path<C::Element>>> {
    let mut set = BTreeSet::from([space.ground_path()]);
    for t in 1..=k {
        let i = schedule.reflection(t);
        let current: Vec<_> = set.iter().cloned().collect();
        let strings = exec.map(&current, |p| {
            let mut string = Vec::new();
            let mut cur = space.f(i, p);
            while let Some(q) = cur {
                cur = space.f(i, &q);
                string.push(q);
            }
            string
        });
        for q in strings.into_iter().flatten() {
            set.insert(q);
        }
        budget.check(set.len())?;
    }
    Ok(set)
}

/// Weight multiplicities, sorted by weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterTable(pub Vec<(ClassicalWeight, usize)>);

impl CharacterTable {
    pub fn cardinality(&self) -> usize {
        self.0.iter().map(|(_, m)| m).sum()
    }

    /// `[[coeffs, multiplicity], …]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.0).expect("character serializes")
    }
}

pub fn character<'a, C: Crystal + 'a>(
    space: &PathSpace<C>,
    paths: impl IntoIterator<Item = &'a Path<C::Element>>,
) -> CharacterTable {
    let mut counts: BTreeMap<ClassicalWeight, usize> = BTreeMap::new();
    for p in paths {
        *counts.entry(space.weight(p)).or_default() += 1;
    }
    CharacterTable(counts.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub big_l: usize,
    /// `σ^L(Λ_0) = Λ_{i_L}`.
    pub i_l: usize,
    pub cardinality: usize,
    pub expected_cardinality: usize,
    pub restricted_characters_equal: bool,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.cardinality == self.expected_cardinality && self.restricted_characters_equal
    }
}

/// Compares `B_{w^(Ld)}(lΛ_0)` with `B^{⊗L}` as crystals for the
/// subalgebra without the node `i_L`: equal size and equal multisets of
/// weights restricted to `I ∖ {i_L}`.
pub fn classical_invariance_check<C: Crystal>(engine: &Engine<C>, big_l: usize) -> Result<InvarianceReport> {
    let crystal = engine.crystal();
    let ty = crystal.affine_type();
    let lam0 = ClassicalWeight::fundamental(ty.index_count(), 0).scaled(crystal.level() as i64);
    if engine.space.lambda() != &lam0 {
        return Err(CrystalError::UnsupportedWeight(format!(
            "classical invariance is stated for {lam0}"
        )));
    }
    let shifted = crystal.sigma().power(&ClassicalWeight::fundamental(ty.index_count(), 0), big_l);
    let (i_l, _) = shifted
        .as_multiple_of_fundamental()
        .expect("σ permutes the fundamental weights");

    let paths = demazure_paths(engine, big_l * engine.d(), Kappa::One)?;
    let mut demazure: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for p in &paths {
        let w = engine.space.weight_at(p, big_l.max(p.len()));
        *demazure.entry(w.restricted(i_l)).or_default() += 1;
    }

    let single: Vec<Vec<i64>> = crystal
        .elements()
        .iter()
        .map(|b| crystal.weight(b).restricted(i_l))
        .collect();
    let mut tensor: BTreeMap<Vec<i64>, usize> = BTreeMap::from([(vec![0; ty.index_count() - 1], 1)]);
    for _ in 0..big_l {
        let mut next: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for (w, m) in &tensor {
            for s in &single {
                let sum: Vec<i64> = w.iter().zip(s).map(|(x, y)| x + y).collect();
                *next.entry(sum).or_default() += m;
            }
        }
        tensor = next;
    }
    let expected = crystal.size().pow(big_l as u32);
    Ok(InvarianceReport {
        big_l,
        i_l,
        cardinality: paths.len(),
        expected_cardinality: expected,
        restricted_characters_equal: demazure == tensor,
    })
}
