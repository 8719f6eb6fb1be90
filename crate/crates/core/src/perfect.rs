//! Exhaustive check of the perfectness surrogate: `ε` and `φ` restrict to
//! bijections from `{b : level(ε(b)) = l}` onto the level-`l` dominant
//! weights.

use serde::Serialize;

use crate::cartan::ClassicalWeight;
use crate::crystal::Crystal;
use crate::exec::Exec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectnessReport {
    pub family: String,
    pub level: u32,
    pub size: usize,
    pub minimal_elements: usize,
    pub dominant_weights: usize,
    /// `level(ε(b)) ≥ l` and `level(φ(b)) = level(ε(b))` for every `b`.
    pub levels_consistent: bool,
    pub phi_bijective: bool,
    pub epsilon_bijective: bool,
    pub witnesses: Vec<String>,
}

impl PerfectnessReport {
    pub fn passed(&self) -> bool {
        self.levels_consistent && self.phi_bijective && self.epsilon_bijective
    }
}

fn is_bijection(mut images: Vec<ClassicalWeight>, targets: &[ClassicalWeight]) -> bool {
    images.sort();
    images == targets
}

pub fn check_perfectness<C: Crystal>(crystal: &C, exec: Exec) -> PerfectnessReport {
    let ty = crystal.affine_type();
    let l = crystal.level();
    let elements = crystal.elements();
    let stats = exec.map(&elements, |b| {
        let eps = crystal.epsilon_weight(b);
        let phi = crystal.phi_weight(b);
        let le = ty.level(&eps).expect("ε has one entry per index");
        let lp = ty.level(&phi).expect("φ has one entry per index");
        (eps, phi, le, lp)
    });
    let mut witnesses = Vec::new();
    let mut levels_consistent = true;
    for (b, (_, _, le, lp)) in elements.iter().zip(&stats) {
        if *le < l as i64 || le != lp {
            levels_consistent = false;
            witnesses.push(format!(
                "{}: level(ε) = {le}, level(φ) = {lp}",
                crystal.encode(b)
            ));
        }
    }
    let minimal: Vec<_> = stats.iter().filter(|s| s.2 == l as i64).collect();
    let targets = ty.dominant_weights_of_level(l);
    let phi_bijective = is_bijection(minimal.iter().map(|s| s.1.clone()).collect(), &targets);
    let epsilon_bijective = is_bijection(minimal.iter().map(|s| s.0.clone()).collect(), &targets);
    if !phi_bijective || !epsilon_bijective {
        witnesses.push(format!(
            "{} minimal elements against {} dominant weights",
            minimal.len(),
            targets.len()
        ));
    }
    PerfectnessReport {
        family: ty.to_string(),
        level: l,
        size: elements.len(),
        minimal_elements: minimal.len(),
        dominant_weights: targets.len(),
        levels_consistent,
        phi_bijective,
        epsilon_bijective,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::AffineType;
    use crate::coord::CoordinateCrystal;
    use crate::tableau::TableauCrystal;

    #[test]
    fn small_crystals_are_perfect() {
        let c = CoordinateCrystal::new(AffineType::C1(2), 1).unwrap();
        let r = check_perfectness(&c, Exec::Parallel);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.dominant_weights, 3);
        let t = TableauCrystal::new(3, 2, 1).unwrap();
        assert!(check_perfectness(&t, Exec::Sequential).passed());
    }
}
