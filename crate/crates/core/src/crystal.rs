//! The abstract crystal interface and the signature rule for tensor products.
//!
//! Tensor factors are always listed left to right as written,
//! `b_N ⊗ … ⊗ b_1`, and positions are counted from the right: position 1 is
//! the last entry of the slice. A highest-weight block `u_μ` standing to the
//! left of all factors gets position `N + 1`.

use std::fmt::{self, Debug};
use std::hash::Hash;

use crate::cartan::{AffineType, ClassicalWeight, Sigma};
use crate::{CrystalError, Result};

/// Which Kashiwara operator to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    E,
    F,
}

/// A finite crystal of affine type with level `l`.
pub trait Crystal: Sync {
    type Element: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn affine_type(&self) -> AffineType;

    /// Level of the perfect crystal.
    fn level(&self) -> u32;

    /// The automorphism σ with `σλ = ε(b(λ))`.
    fn sigma(&self) -> Sigma;

    fn f(&self, i: usize, b: &Self::Element) -> Option<Self::Element>;

    fn e(&self, i: usize, b: &Self::Element) -> Option<Self::Element>;

    fn epsilon(&self, i: usize, b: &Self::Element) -> u32;

    fn phi(&self, i: usize, b: &Self::Element) -> u32;

    /// Every element, in canonical (ascending) order.
    fn elements(&self) -> Vec<Self::Element>;

    /// Canonical string encoding used in exports and on the command line.
    fn encode(&self, b: &Self::Element) -> String;

    fn decode(&self, s: &str) -> Result<Self::Element>;

    /// Membership test for a candidate element.
    fn contains(&self, b: &Self::Element) -> bool;

    /// The element `b(λ)` with `φ(b(λ)) = λ`.
    ///
    /// The default searches the whole crystal; perfectness makes the answer
    /// unique.
    fn ground_element(&self, lambda: &ClassicalWeight) -> Result<Self::Element> {
        search_ground_element(self, lambda)
    }

    fn index_count(&self) -> usize {
        self.affine_type().index_count()
    }

    fn apply(&self, op: Op, i: usize, b: &Self::Element) -> Option<Self::Element> {
        match op {
            Op::E => self.e(i, b),
            Op::F => self.f(i, b),
        }
    }

    /// `Σ φ_i(b) Λ_i`.
    fn phi_weight(&self, b: &Self::Element) -> ClassicalWeight {
        ClassicalWeight(
            self.affine_type()
                .indices()
                .map(|i| self.phi(i, b) as i64)
                .collect(),
        )
    }

    /// `Σ ε_i(b) Λ_i`.
    fn epsilon_weight(&self, b: &Self::Element) -> ClassicalWeight {
        ClassicalWeight(
            self.affine_type()
                .indices()
                .map(|i| self.epsilon(i, b) as i64)
                .collect(),
        )
    }

    /// `wt(b) = Σ (φ_i(b) − ε_i(b)) Λ_i`.
    fn weight(&self, b: &Self::Element) -> ClassicalWeight {
        &self.phi_weight(b) - &self.epsilon_weight(b)
    }

    /// `f_i^m b`, or `None` if some step leaves the crystal.
    fn f_pow(&self, i: usize, b: &Self::Element, m: u32) -> Option<Self::Element> {
        let mut cur = b.clone();
        for _ in 0..m {
            cur = self.f(i, &cur)?;
        }
        Some(cur)
    }

    /// `f_i^{max} b = f_i^{φ_i(b)} b`.
    fn f_max(&self, i: usize, b: &Self::Element) -> Self::Element {
        self.f_pow(i, b, self.phi(i, b))
            .expect("φ_i counts the defined f_i applications")
    }

    fn size(&self) -> usize {
        self.elements().len()
    }
}

/// Finds the unique `b` with `φ(b) = λ` by exhaustive search.
pub fn search_ground_element<C: Crystal + ?Sized>(
    crystal: &C,
    lambda: &ClassicalWeight,
) -> Result<C::Element> {
    lambda.check_len(crystal.index_count())?;
    let mut found = crystal
        .elements()
        .into_iter()
        .filter(|b| &crystal.phi_weight(b) == lambda);
    let first = found.next().ok_or_else(|| {
        CrystalError::UnsupportedWeight(format!("no element b with φ(b) = {lambda}"))
    })?;
    if found.next().is_some() {
        return Err(CrystalError::UnsupportedWeight(format!(
            "more than one element with φ(b) = {lambda}"
        )));
    }
    Ok(first)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

/// One sign together with the tensor position it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signed {
    pub sign: Sign,
    pub origin: usize,
}

/// A sequence of signs, read left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedSequence {
    pub entries: Vec<Signed>,
}

impl SignedSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push_block(&mut self, minus: u32, plus: u32, origin: usize) {
        self.entries.extend((0..minus).map(|_| Signed { sign: Sign::Minus, origin }));
        self.entries.extend((0..plus).map(|_| Signed { sign: Sign::Plus, origin }));
    }

    pub fn extend(&mut self, other: &SignedSequence) {
        self.entries.extend_from_slice(&other.entries);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.entries.iter().filter(|s| s.sign == sign).count()
    }

    /// Rightmost `−`.
    pub fn rightmost_minus(&self) -> Option<Signed> {
        self.entries.iter().rev().find(|s| s.sign == Sign::Minus).copied()
    }

    /// Leftmost `+`.
    pub fn leftmost_plus(&self) -> Option<Signed> {
        self.entries.iter().find(|s| s.sign == Sign::Plus).copied()
    }

    /// Signs grouped by origin, e.g. `(++,--,-+)`.
    pub fn grouped(&self) -> String {
        let mut groups: Vec<String> = Vec::new();
        let mut last: Option<usize> = None;
        for s in &self.entries {
            let c = if s.sign == Sign::Plus { '+' } else { '-' };
            if last == Some(s.origin) {
                groups.last_mut().expect("group exists").push(c);
            } else {
                groups.push(c.to_string());
                last = Some(s.origin);
            }
        }
        format!("({})", groups.join(","))
    }
}

impl fmt::Display for SignedSequence {
    /// Each sign followed by `@origin`, e.g. `(-@4,+@2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|s| format!("{}@{}", if s.sign == Sign::Plus { '+' } else { '-' }, s.origin))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `ε_i(b)` minuses followed by `φ_i(b)` pluses, all tagged with `origin`.
pub fn component_signature<C: Crystal + ?Sized>(
    crystal: &C,
    i: usize,
    b: &C::Element,
    origin: usize,
) -> SignedSequence {
    let mut s = SignedSequence::new();
    s.push_block(crystal.epsilon(i, b), crystal.phi(i, b), origin);
    s
}

/// Cancels adjacent `(+, −)` pairs until the sequence reads `−…− +…+`.
///
/// A stack pass gives the same result as repeatedly deleting the leftmost
/// adjacent pair.
pub fn reduce_signature(s: &SignedSequence) -> SignedSequence {
    let mut stack: Vec<Signed> = Vec::with_capacity(s.len());
    for &entry in &s.entries {
        if entry.sign == Sign::Minus && stack.last().is_some_and(|t| t.sign == Sign::Plus) {
            stack.pop();
        } else {
            stack.push(entry);
        }
    }
    SignedSequence { entries: stack }
}

/// `i`-signature of `u ⊗ b_N ⊗ … ⊗ b_1` where `u` contributes
/// `leading_plus` pluses at position `N + 1`.
pub fn tensor_signature<C: Crystal + ?Sized>(
    crystal: &C,
    i: usize,
    factors: &[C::Element],
    leading_plus: u32,
) -> SignedSequence {
    let n = factors.len();
    let mut s = SignedSequence::new();
    s.push_block(0, leading_plus, n + 1);
    for (idx, b) in factors.iter().enumerate() {
        s.push_block(crystal.epsilon(i, b), crystal.phi(i, b), n - idx);
    }
    s
}

/// Result of acting on a tensor product that may carry a highest-weight block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TensorStep<E> {
    /// The operator gives the crystal zero.
    Zero,
    /// The selected sign belongs to the highest-weight block at position
    /// `N + 1`; more factors are needed.
    Highest,
    /// The operator acted on `position`; the new factors are returned.
    Applied { position: usize, factors: Vec<E> },
}

/// Applies `e_i` or `f_i` to `u ⊗ b_N ⊗ … ⊗ b_1` by the signature rule.
pub fn tensor_step<C: Crystal + ?Sized>(
    crystal: &C,
    op: Op,
    i: usize,
    factors: &[C::Element],
    leading_plus: u32,
) -> TensorStep<C::Element> {
    let reduced = reduce_signature(&tensor_signature(crystal, i, factors, leading_plus));
    let chosen = match op {
        Op::F => reduced.leftmost_plus(),
        Op::E => reduced.rightmost_minus(),
    };
    let Some(chosen) = chosen else {
        return TensorStep::Zero;
    };
    let n = factors.len();
    if chosen.origin == n + 1 {
        return TensorStep::Highest;
    }
    let idx = n - chosen.origin;
    let acted = crystal
        .apply(op, i, &factors[idx])
        .expect("a surviving sign guarantees the factor can be acted on");
    let mut out = factors.to_vec();
    out[idx] = acted;
    TensorStep::Applied {
        position: chosen.origin,
        factors: out,
    }
}

/// Applies `e_i` or `f_i` to the plain tensor product `b_N ⊗ … ⊗ b_1`.
/// `None` is the crystal zero.
pub fn tensor_apply<C: Crystal + ?Sized>(
    crystal: &C,
    op: Op,
    i: usize,
    factors: &[C::Element],
) -> Option<Vec<C::Element>> {
    match tensor_step(crystal, op, i, factors, 0) {
        TensorStep::Applied { factors, .. } => Some(factors),
        TensorStep::Zero => None,
        TensorStep::Highest => unreachable!("no highest-weight block was supplied"),
    }
}

/// `(ε_i, φ_i)` of a plain tensor product, read off the reduced signature.
pub fn tensor_epsilon_phi<C: Crystal + ?Sized>(
    crystal: &C,
    i: usize,
    factors: &[C::Element],
) -> (u32, u32) {
    let reduced = reduce_signature(&tensor_signature(crystal, i, factors, 0));
    (
        reduced.count(Sign::Minus) as u32,
        reduced.count(Sign::Plus) as u32,
    )
}
