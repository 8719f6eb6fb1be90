//! Bounded search for schedules meeting the `κ = 1` or `κ = 2` hypotheses.
//!
//! Candidates are tables of `period` rows of length `d ≤ d_max` over the
//! index set. A prefix of a row is dropped as soon as (III) fails on it, or
//! the extremal chain along it breaks (IV′). Complete candidates are checked
//! with [`check_conditions`] up to `j_max`.
//!
//! For `κ = 2`, (IV) is certified either by (III) and (IV′) under `λ`, or by
//! the full `κ = 1` hypotheses under `lΛ_0` with the same schedule; the
//! Bruhat statement does not depend on the weight.

use serde::Serialize;

use super::conditions::check_conditions;
use super::{Engine, Kappa};
use crate::cartan::ClassicalWeight;
use crate::crystal::Crystal;
use crate::exec::{Budget, Exec};
use crate::path::PathSpace;
use crate::schedule::Schedule;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub d_max: usize,
    pub period: usize,
    pub j_max: usize,
    pub budget: Budget,
    pub exec: Exec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub family: String,
    pub level: u32,
    pub lambda: ClassicalWeight,
    pub kappa: u8,
    pub d_max: usize,
    pub period: usize,
    pub j_max: usize,
    /// Complete candidates that reached the full condition check.
    pub candidates_checked: usize,
    pub prefixes_pruned: usize,
    /// Tables that passed, by increasing `d` then lexicographically.
    pub found: Vec<Vec<Vec<usize>>>,
}

impl SearchReport {
    pub fn smallest_d(&self) -> Option<usize> {
        self.found.first().map(|t| t[0].len())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Whether the row prefix `row` for position `j` survives (III) and the
/// in-row part of (IV′) in `space`.
fn prefix_ok<C: Crystal>(space: &PathSpace<C>, j: usize, row: &[usize], check_iii: bool) -> bool {
    let crystal = space.crystal();
    let lam_j = space.lambda_k(j);
    let mut set = vec![space.ground_bar(j).clone()];
    let mut b = space.ground_bar(j).clone();
    for (pos, &i) in row.iter().enumerate() {
        if pos > 0 && (crystal.epsilon(i, &b) != 0 || crystal.phi(i, &b) == 0) {
            return false;
        }
        if check_iii && set.iter().any(|x| (crystal.epsilon(i, x) as i64) < lam_j.pairing(i)) {
            return false;
        }
        if pos + 1 < row.len() {
            let mut next = std::collections::BTreeSet::new();
            for x in &set {
                let mut cur = Some(x.clone());
                while let Some(y) = cur {
                    cur = crystal.f(i, &y);
                    if !next.insert(y) {
                        break;
                    }
                }
            }
            set = next.into_iter().collect();
        }
        b = crystal.f_max(i, &b);
    }
    true
}

struct Searcher<'a, C: Crystal> {
    main: &'a PathSpace<C>,
    base: Option<&'a PathSpace<C>>,
    kappa: Kappa,
    cfg: SearchConfig,
    pruned: usize,
    checked: usize,
    found: Vec<Vec<Vec<usize>>>,
}

impl<C: Crystal + Clone> Searcher<'_, C> {
    fn keep(&self, j: usize, row: &[usize]) -> bool {
        match self.kappa {
            Kappa::One => prefix_ok(self.main, j, row, true),
            Kappa::Two => {
                prefix_ok(self.main, j, row, false)
                    || self.base.is_some_and(|s| prefix_ok(s, j, row, true))
            }
        }
    }

    fn complete(&mut self, table: Vec<Vec<usize>>) -> Result<()> {
        self.checked += 1;
        self.cfg.budget.check(self.checked)?;
        let sched = Schedule::new(table.clone(), "search")?;
        let engine = Engine::new(self.main.clone(), sched.clone(), self.cfg.budget, self.cfg.exec)?;
        let ok = match self.kappa {
            Kappa::One => check_conditions(&engine, self.cfg.j_max, false)?.kappa_one(),
            Kappa::Two => {
                let r = check_conditions(&engine, self.cfg.j_max, true)?;
                let certified = (r.iii && r.iv_prime)
                    || match self.base {
                        Some(s) => {
                            let e0 = Engine::new(s.clone(), sched, self.cfg.budget, self.cfg.exec)?;
                            check_conditions(&e0, self.cfg.j_max, false)?.kappa_one()
                        }
                        None => false,
                    };
                r.kappa_two() && certified
            }
        };
        if ok {
            self.found.push(table);
        }
        Ok(())
    }

    fn dfs(&mut self, n: usize, d: usize, table: &mut Vec<Vec<usize>>) -> Result<()> {
        let rows = table.len();
        let last = table.last().map_or(0, Vec::len);
        if rows == self.cfg.period && last == d {
            return self.complete(table.clone());
        }
        if rows == 0 || last == d {
            table.push(Vec::new());
        }
        let j = table.len();
        for i in 0..=n {
            table[j - 1].push(i);
            if self.keep(j, &table[j - 1]) {
                self.dfs(n, d, table)?;
            } else {
                self.pruned += 1;
            }
            table[j - 1].pop();
        }
        if table[j - 1].is_empty() {
            table.pop();
        }
        Ok(())
    }
}

/// Exhaustive search over all tables with `d ≤ cfg.d_max` rows of length `d`
/// and `cfg.period` rows.
pub fn search_schedules<C: Crystal + Clone>(
    crystal: &C,
    lambda: &ClassicalWeight,
    kappa: Kappa,
    cfg: SearchConfig,
) -> Result<SearchReport> {
    let ty = crystal.affine_type();
    let main = PathSpace::new(crystal.clone(), lambda.clone())?;
    let lam0 = ClassicalWeight::fundamental(ty.index_count(), 0).scaled(crystal.level() as i64);
    let base = match kappa {
        Kappa::Two => Some(PathSpace::new(crystal.clone(), lam0)?),
        Kappa::One => None,
    };
    let mut s = Searcher {
        main: &main,
        base: base.as_ref(),
        kappa,
        cfg,
        pruned: 0,
        checked: 0,
        found: Vec::new(),
    };
    for d in 1..=cfg.d_max {
        s.dfs(ty.rank(), d, &mut Vec::new())?;
    }
    Ok(SearchReport {
        family: ty.to_string(),
        level: crystal.level(),
        lambda: lambda.clone(),
        kappa: match kappa {
            Kappa::One => 1,
            Kappa::Two => 2,
        },
        d_max: cfg.d_max,
        period: cfg.period,
        j_max: cfg.j_max,
        candidates_checked: s.checked,
        prefixes_pruned: s.pruned,
        found: s.found,
    })
}
