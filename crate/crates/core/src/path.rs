//! Semi-infinite paths `p = ⋯ ⊗ p(2) ⊗ p(1)` that agree with the ground-state
//! path `⋯ ⊗ b̄_2 ⊗ b̄_1` far to the left.

use serde_json::json;

use crate::cartan::ClassicalWeight;
use crate::crystal::{reduce_signature, tensor_signature, tensor_step, Crystal, Op, Sign, SignedSequence, TensorStep};
use crate::{CrystalError, Result};

/// A path stored by its finite window `window[j-1] = p(j)`.
///
/// The window is normalized: its last entry differs from the ground-state
/// element at that position, so equal paths have equal windows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path<E> {
    pub window: Vec<E>,
}

impl<E> Path<E> {
    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }
}

/// The path set `P(λ, B)`: the crystal, `λ`, the σ-orbit `λ_k = σ^k λ` and
/// the ground-state elements `b̄_k = b(λ_{k-1})`.
#[derive(Debug, Clone)]
pub struct PathSpace<C: Crystal> {
    crystal: C,
    lambda: ClassicalWeight,
    orbit: Vec<ClassicalWeight>,
    ground: Vec<C::Element>,
}

impl<C: Crystal> PathSpace<C> {
    pub fn new(crystal: C, lambda: ClassicalWeight) -> Result<Self> {
        let ty = crystal.affine_type();
        lambda.check_len(ty.index_count())?;
        if !lambda.is_dominant() {
            return Err(CrystalError::UnsupportedWeight(format!("{lambda} is not dominant")));
        }
        let level = ty.level(&lambda)?;
        if level != crystal.level() as i64 {
            return Err(CrystalError::UnsupportedWeight(format!(
                "{lambda} has level {level}, the crystal has level {}",
                crystal.level()
            )));
        }
        let orbit = crystal.sigma().orbit(&lambda);
        let ground = orbit
            .iter()
            .map(|mu| crystal.ground_element(mu))
            .collect::<Result<Vec<_>>>()?;
        Ok(PathSpace { crystal, lambda, orbit, ground })
    }

    pub fn crystal(&self) -> &C {
        &self.crystal
    }

    pub fn lambda(&self) -> &ClassicalWeight {
        &self.lambda
    }

    /// Length of the σ-orbit of `λ`.
    pub fn period(&self) -> usize {
        self.orbit.len()
    }

    /// `λ_k = σ^k λ`.
    pub fn lambda_k(&self, k: usize) -> &ClassicalWeight {
        &self.orbit[k % self.orbit.len()]
    }

    /// `b̄_j` for `j ≥ 1`.
    pub fn ground_bar(&self, j: usize) -> &C::Element {
        assert!(j >= 1, "positions start at 1");
        &self.ground[(j - 1) % self.ground.len()]
    }

    pub fn ground_path(&self) -> Path<C::Element> {
        Path { window: Vec::new() }
    }

    /// `p(j)`, reading the ground state beyond the window.
    pub fn at<'a>(&'a self, p: &'a Path<C::Element>, j: usize) -> &'a C::Element {
        p.window.get(j - 1).unwrap_or_else(|| self.ground_bar(j))
    }

    /// Builds a normalized path from `window[j-1] = p(j)`.
    pub fn path(&self, mut window: Vec<C::Element>) -> Path<C::Element> {
        while let Some(last) = window.last() {
            if last == self.ground_bar(window.len()) {
                window.pop();
            } else {
                break;
            }
        }
        Path { window }
    }

    /// `p(n) ⊗ … ⊗ p(1)` as a left-to-right factor list.
    pub fn factors(&self, p: &Path<C::Element>, n: usize) -> Vec<C::Element> {
        assert!(n >= p.len(), "truncation {n} cuts into the window of length {}", p.len());
        (1..=n).rev().map(|j| self.at(p, j).clone()).collect()
    }

    /// Builds a path from `p(n) ⊗ … ⊗ p(1)`.
    pub fn from_factors(&self, factors: &[C::Element]) -> Path<C::Element> {
        self.path(factors.iter().rev().cloned().collect())
    }

    /// `i`-signature truncated at position `n`, with the `u_{λ_n}` block first.
    pub fn signature(&self, p: &Path<C::Element>, i: usize, n: usize) -> SignedSequence {
        let lead = self.lambda_k(n).pairing(i);
        tensor_signature(&self.crystal, i, &self.factors(p, n), lead as u32)
    }

    /// Applies `e_i` or `f_i`; `None` is the crystal zero.
    ///
    /// When `f_i` lands on the highest-weight block the window grows by one
    /// position and the signature is recomputed.
    pub fn apply(&self, op: Op, i: usize, p: &Path<C::Element>) -> Option<Path<C::Element>> {
        let mut n = p.len();
        loop {
            let lead = self.lambda_k(n).pairing(i) as u32;
            match tensor_step(&self.crystal, op, i, &self.factors(p, n), lead) {
                TensorStep::Zero => return None,
                TensorStep::Highest => n += 1,
                TensorStep::Applied { factors, .. } => return Some(self.from_factors(&factors)),
            }
        }
    }

    pub fn f(&self, i: usize, p: &Path<C::Element>) -> Option<Path<C::Element>> {
        self.apply(Op::F, i, p)
    }

    pub fn e(&self, i: usize, p: &Path<C::Element>) -> Option<Path<C::Element>> {
        self.apply(Op::E, i, p)
    }

    /// `(ε_i(p), φ_i(p))` read off the reduced signature.
    pub fn epsilon_phi(&self, p: &Path<C::Element>, i: usize) -> (u32, u32) {
        let reduced = reduce_signature(&self.signature(p, i, p.len()));
        (reduced.count(Sign::Minus) as u32, reduced.count(Sign::Plus) as u32)
    }

    /// `λ_n + Σ_{j ≤ n} wt(p(j))`, computed with truncation `n`.
    pub fn weight_at(&self, p: &Path<C::Element>, n: usize) -> ClassicalWeight {
        (1..=n).fold(self.lambda_k(n).clone(), |acc, j| {
            &acc + &self.crystal.weight(self.at(p, j))
        })
    }

    pub fn weight(&self, p: &Path<C::Element>) -> ClassicalWeight {
        self.weight_at(p, p.len())
    }

    /// `⋯ ⊗ p(n) ⊗ … ⊗ p(1)` with each factor rendered by `label`.
    pub fn render_with(
        &self,
        p: &Path<C::Element>,
        n: usize,
        label: impl Fn(&C::Element) -> String,
    ) -> String {
        let parts: Vec<String> = self.factors(p, n).iter().map(label).collect();
        format!("⋯⊗{}", parts.join("⊗"))
    }

    pub fn to_json(&self, p: &Path<C::Element>) -> serde_json::Value {
        json!({
            "lambda": self.lambda,
            "N": p.len(),
            "window": p.window.iter().map(|b| self.crystal.encode(b)).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::AffineType;
    use crate::coord::CoordinateCrystal;
    use crate::tableau::TableauCrystal;

    #[test]
    fn ground_path_is_highest_weight() {
        let c = TableauCrystal::new(3, 2, 1).unwrap();
        let space = PathSpace::new(c, ClassicalWeight(vec![1, 0, 0, 0])).unwrap();
        let g = space.ground_path();
        for i in 0..=3 {
            assert_eq!(space.e(i, &g), None);
        }
        assert_eq!(space.weight(&g), ClassicalWeight(vec![1, 0, 0, 0]));
        // f_0 acts on position 1: 34 → 13
        let p = space.f(0, &g).unwrap();
        assert_eq!(p.window, vec![c.decode("13").unwrap()]);
        assert_eq!(space.f(1, &g), None);
    }

    #[test]
    fn a2even_ground_state_is_constant() {
        let c = CoordinateCrystal::new(AffineType::A2Even(2), 2).unwrap();
        let space = PathSpace::new(c, ClassicalWeight(vec![2, 0, 0])).unwrap();
        for j in 1..6 {
            assert_eq!(space.ground_bar(j), &c.zero());
        }
    }

    #[test]
    fn rejects_wrong_level() {
        let c = CoordinateCrystal::new(AffineType::C1(2), 1).unwrap();
        assert!(PathSpace::new(c, ClassicalWeight(vec![2, 0, 0])).is_err());
        assert!(PathSpace::new(c, ClassicalWeight(vec![1, 0])).is_err());
    }
}
