//! Checks of (II), (III), (IV′) and (II′) for an engine, with the first
//! counterexample of each failing `(condition, j, a)` cell as witness.
//!
//! (IV), the Bruhat increase of `w^(k)`, is never tested directly; it follows
//! from (III) together with (IV′).

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::json;

use super::Engine;
use crate::crystal::Crystal;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: &'static str,
    pub j: usize,
    pub a: usize,
    pub element: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub j_max: usize,
    pub ii: bool,
    pub iii: bool,
    pub iv_prime: bool,
    /// `None` when (II′) was not requested.
    pub ii_prime: Option<bool>,
    pub witnesses: Vec<Witness>,
}

impl ConditionReport {
    /// (II), (III) and (IV′) all hold: the `κ = 1` hypotheses.
    pub fn kappa_one(&self) -> bool {
        self.ii && self.iii && self.iv_prime
    }

    /// (II′) and (III) hold.
    pub fn kappa_two(&self) -> bool {
        self.ii_prime == Some(true) && self.iii
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "j_max": self.j_max,
            "conditions": {
                "II": self.ii,
                "III": self.iii,
                "IVprime": self.iv_prime,
                "IIprime": self.ii_prime,
                "IV": if self.iv_prime && self.iii { "implied by IVprime" } else { "not established" },
            },
            "witnesses": self.witnesses,
        })
    }
}

struct Cell {
    ii: Option<Witness>,
    iii: Vec<Witness>,
    iv_prime: Vec<Witness>,
    ii_prime: Option<Witness>,
}

fn check_j<C: Crystal>(engine: &Engine<C>, j: usize, with_ii_prime: bool) -> Result<Cell> {
    let crystal = engine.crystal();
    let space = &engine.space;
    let sched = &engine.schedule;
    let d = engine.d();
    let enc = |b: &C::Element| crystal.encode(b);
    let sets = engine.subsets(j)?;
    let all = crystal.elements();

    let ii = if sets[d] == all {
        None
    } else {
        let present: BTreeSet<_> = sets[d].iter().collect();
        let missing = all.iter().find(|b| !present.contains(b)).expect("B_d is a proper subset");
        Some(Witness {
            condition: "II",
            j,
            a: d,
            element: enc(missing),
            detail: format!("B_d has {} of {} elements", sets[d].len(), all.len()),
        })
    };

    let lam_j = space.lambda_k(j);
    let mut iii = Vec::new();
    for a in 1..=d {
        let i = sched.index(j, a);
        let bound = lam_j.pairing(i);
        if let Some(b) = sets[a - 1]
            .iter()
            .find(|b| (crystal.epsilon(i, b) as i64) < bound)
        {
            iii.push(Witness {
                condition: "III",
                j,
                a,
                element: enc(b),
                detail: format!("ε_{i} = {} < ⟨λ_j, h_{i}⟩ = {bound}", crystal.epsilon(i, b)),
            });
        }
    }

    let chain = engine.extremal_chain(j);
    let mut iv_prime = Vec::new();
    for (a, b) in chain.iter().enumerate().skip(1) {
        let next = if a < d { sched.index(j, a + 1) } else { sched.index(j + 1, 1) };
        let (eps, phi) = (crystal.epsilon(next, b), crystal.phi(next, b));
        if eps != 0 || phi == 0 {
            iv_prime.push(Witness {
                condition: "IVprime",
                j,
                a,
                element: enc(b),
                detail: format!("ε_{next} = {eps}, φ_{next} = {phi}"),
            });
        }
    }
    let first = sched.index(j + 1, 1);
    let m = space.lambda_k(j + 1).pairing(first);
    let target = space.ground_bar(j + 1);
    let reached = crystal.f_pow(first, &chain[d], m as u32);
    if reached.as_ref() != Some(target) {
        iv_prime.push(Witness {
            condition: "IVprime",
            j,
            a: d,
            element: enc(&chain[d]),
            detail: format!(
                "f_{first}^{m} b_d = {} but b̄_(j+1) = {}",
                reached.as_ref().map_or("0".into(), enc),
                enc(target)
            ),
        });
    }

    let ii_prime = if with_ii_prime {
        let mixed = engine.mixed_subsets(j)?;
        let left = engine.subset(j + 1, d)?;
        let expected: Vec<_> = left
            .iter()
            .flat_map(|x| all.iter().map(move |y| (x.clone(), y.clone())))
            .collect();
        if mixed[d] == expected {
            None
        } else {
            let have: BTreeSet<_> = mixed[d].iter().collect();
            let want: BTreeSet<_> = expected.iter().collect();
            let (x, y) = want
                .difference(&have)
                .next()
                .or_else(|| have.difference(&want).next())
                .copied()
                .expect("the sets differ");
            Some(Witness {
                condition: "IIprime",
                j,
                a: d,
                element: format!("{} ⊗ {}", enc(x), enc(y)),
                detail: format!(
                    "B_d^(j+1,j) has {} elements, B_d^(j+1) ⊗ B has {}",
                    mixed[d].len(),
                    expected.len()
                ),
            })
        }
    } else {
        None
    };

    Ok(Cell { ii, iii, iv_prime, ii_prime })
}

/// Evaluates the conditions for `1 ≤ j ≤ j_max`; (II′) only when requested.
pub fn check_conditions<C: Crystal>(
    engine: &Engine<C>,
    j_max: usize,
    with_ii_prime: bool,
) -> Result<ConditionReport> {
    let cells = engine
        .exec
        .map_range(j_max, |idx| check_j(engine, idx + 1, with_ii_prime));
    let mut report = ConditionReport {
        j_max,
        ii: true,
        iii: true,
        iv_prime: true,
        ii_prime: with_ii_prime.then_some(true),
        witnesses: Vec::new(),
    };
    for cell in cells {
        let cell = cell?;
        if let Some(w) = cell.ii {
            report.ii = false;
            report.witnesses.push(w);
        }
        if !cell.iii.is_empty() {
            report.iii = false;
            report.witnesses.extend(cell.iii);
        }
        if !cell.iv_prime.is_empty() {
            report.iv_prime = false;
            report.witnesses.extend(cell.iv_prime);
        }
        if let Some(w) = cell.ii_prime {
            report.ii_prime = Some(false);
            report.witnesses.push(w);
        }
    }
    Ok(report)
}
