//! Demazure subsets `B_a^(j)` of a perfect crystal, extremal chains, the
//! mixed sets `B_a^(j+1,j) ⊂ B ⊗ B`, and the path sets they describe.

pub mod closed_form;
pub mod conditions;
pub mod paths;
pub mod search;

use std::collections::BTreeSet;

use crate::crystal::{tensor_apply, Crystal, Op};
use crate::exec::{Budget, Exec};
use crate::path::PathSpace;
use crate::schedule::Schedule;
use crate::Result;

pub use closed_form::ClosedForm;
pub use conditions::{check_conditions, ConditionReport, Witness};
pub use search::{search_schedules, SearchConfig, SearchReport};
pub use paths::{
    character, classical_invariance_check, demazure_paths, recursive_oracle, CharacterTable,
    InvarianceReport, Kappa,
};

/// An element of `B ⊗ B`, written `(left, right)`.
pub type Pair<E> = (E, E);

/// A perfect crystal path space together with a schedule.
#[derive(Debug, Clone)]
pub struct Engine<C: Crystal> {
    pub space: PathSpace<C>,
    pub schedule: Schedule,
    pub budget: Budget,
    pub exec: Exec,
}

impl<C: Crystal> Engine<C> {
    pub fn new(space: PathSpace<C>, schedule: Schedule, budget: Budget, exec: Exec) -> Result<Self> {
        schedule.validate_for(space.crystal().affine_type())?;
        Ok(Engine { space, schedule, budget, exec })
    }

    pub fn crystal(&self) -> &C {
        self.space.crystal()
    }

    pub fn d(&self) -> usize {
        self.schedule.d
    }

    /// Closes `set` under `f_i`, in canonical order.
    fn f_closure<E: Ord + Clone>(
        &self,
        set: &[E],
        step: impl Fn(&E) -> Option<E>,
    ) -> Result<Vec<E>> {
        let mut out: BTreeSet<E> = BTreeSet::new();
        for b in set {
            let mut cur = Some(b.clone());
            while let Some(x) = cur {
                cur = step(&x);
                if !out.insert(x) {
                    // the rest of this string is already present
                    break;
                }
            }
            self.budget.check(out.len())?;
        }
        Ok(out.into_iter().collect())
    }

    /// `B_0^(j), …, B_d^(j)`.
    pub fn subsets(&self, j: usize) -> Result<Vec<Vec<C::Element>>> {
        let mut sets = vec![vec![self.space.ground_bar(j).clone()]];
        for a in 1..=self.d() {
            let i = self.schedule.index(j, a);
            let prev = sets.last().expect("B_0 is present");
            let next = self.f_closure(prev, |b| self.crystal().f(i, b))?;
            sets.push(next);
        }
        Ok(sets)
    }

    /// `B_a^(j)`.
    pub fn subset(&self, j: usize, a: usize) -> Result<Vec<C::Element>> {
        let mut sets = self.subsets(j)?;
        Ok(sets.swap_remove(a))
    }

    /// `b_0^(j) = b̄_j`, `b_a^(j) = f_{i_a}^{max} b_{a-1}^(j)`.
    pub fn extremal_chain(&self, j: usize) -> Vec<C::Element> {
        let mut chain = vec![self.space.ground_bar(j).clone()];
        for a in 1..=self.d() {
            let i = self.schedule.index(j, a);
            let next = self.crystal().f_max(i, chain.last().expect("non-empty"));
            chain.push(next);
        }
        chain
    }

    /// `B_0^(j+1,j), …, B_d^(j+1,j)` inside `B ⊗ B`.
    pub fn mixed_subsets(&self, j: usize) -> Result<Vec<Vec<Pair<C::Element>>>> {
        let top = self.subset(j, self.d())?;
        let left = self.space.ground_bar(j + 1);
        let mut sets = vec![top.into_iter().map(|r| (left.clone(), r)).collect::<Vec<_>>()];
        for a in 1..=self.d() {
            let i = self.schedule.index(j + 1, a);
            let prev = sets.last().expect("seed is present");
            let next = self.f_closure(prev, |(x, y)| {
                let f = tensor_apply(self.crystal(), Op::F, i, &[x.clone(), y.clone()])?;
                let mut it = f.into_iter();
                Some((it.next()?, it.next()?))
            })?;
            sets.push(next);
        }
        Ok(sets)
    }
}
