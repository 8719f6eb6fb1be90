//! Affine type metadata: index sets, levels of fundamental weights, weights in
//! `P_cl` and the Dynkin diagram automorphisms that act on level-`l` dominant
//! weights.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{CrystalError, Result};

/// One of the classical affine families, with its rank `n`.
///
/// The index set is always `0..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineType {
    /// `A_n^(1)`
    A1(usize),
    /// `B_n^(1)`
    B1(usize),
    /// `C_n^(1)`
    C1(usize),
    /// `D_n^(1)`
    D1(usize),
    /// `A_{2n-1}^(2)`
    A2Odd(usize),
    /// `A_{2n}^(2)`
    A2Even(usize),
    /// `D_{n+1}^(2)`
    D2(usize),
}

impl AffineType {
    /// Builds a family from its tag (`A1`, `B1`, `C1`, `D1`, `A2odd`,
    /// `A2even`, `D2`), checking the rank bound.
    pub fn new(tag: &str, n: usize) -> Result<Self> {
        let ty = match tag {
            "A1" => AffineType::A1(n),
            "B1" => AffineType::B1(n),
            "C1" => AffineType::C1(n),
            "D1" => AffineType::D1(n),
            "A2odd" | "A2Odd" => AffineType::A2Odd(n),
            "A2even" | "A2Even" => AffineType::A2Even(n),
            "D2" => AffineType::D2(n),
            other => {
                return Err(CrystalError::InvalidParameter(format!(
                    "unknown family `{other}`"
                )))
            }
        };
        ty.validate()?;
        Ok(ty)
    }

    pub fn validate(self) -> Result<()> {
        let n = self.rank();
        let min = self.min_rank();
        if n < min {
            return Err(CrystalError::InvalidRank {
                family: self.tag(),
                n,
                min,
            });
        }
        Ok(())
    }

    pub fn rank(self) -> usize {
        match self {
            AffineType::A1(n)
            | AffineType::B1(n)
            | AffineType::C1(n)
            | AffineType::D1(n)
            | AffineType::A2Odd(n)
            | AffineType::A2Even(n)
            | AffineType::D2(n) => n,
        }
    }

    /// Smallest rank accepted. `A_1^(1)` is tolerated for the three
    /// dimensional level-2 example.
    pub fn min_rank(self) -> usize {
        match self {
            AffineType::A1(_) => 1,
            AffineType::B1(_) => 3,
            AffineType::D1(_) => 4,
            AffineType::A2Odd(_) => 3,
            AffineType::A2Even(_) | AffineType::D2(_) | AffineType::C1(_) => 2,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            AffineType::A1(_) => "A1",
            AffineType::B1(_) => "B1",
            AffineType::C1(_) => "C1",
            AffineType::D1(_) => "D1",
            AffineType::A2Odd(_) => "A2odd",
            AffineType::A2Even(_) => "A2even",
            AffineType::D2(_) => "D2",
        }
    }

    /// Number of indices, `n + 1`.
    pub fn index_count(self) -> usize {
        self.rank() + 1
    }

    pub fn indices(self) -> std::ops::RangeInclusive<usize> {
        0..=self.rank()
    }

    /// Levels of `Λ_0, …, Λ_n` (the Dynkin diagram labels).
    pub fn levels(self) -> Vec<i64> {
        let n = self.rank();
        let mut v = vec![2i64; n + 1];
        match self {
            AffineType::A1(_) | AffineType::C1(_) => v.iter_mut().for_each(|x| *x = 1),
            AffineType::B1(_) => {
                v[0] = 1;
                v[1] = 1;
                v[n] = 1;
            }
            AffineType::D1(_) => {
                v[0] = 1;
                v[1] = 1;
                v[n - 1] = 1;
                v[n] = 1;
            }
            AffineType::A2Odd(_) => {
                v[0] = 1;
                v[1] = 1;
            }
            AffineType::A2Even(_) => v[0] = 1,
            AffineType::D2(_) => {
                v[0] = 1;
                v[n] = 1;
            }
        }
        v
    }

    /// Level of a classical weight, `Σ m_i · level(Λ_i)`.
    pub fn level(self, weight: &ClassicalWeight) -> Result<i64> {
        weight.check_len(self.index_count())?;
        Ok(weight
            .coeffs()
            .iter()
            .zip(self.levels())
            .map(|(m, lv)| m * lv)
            .sum())
    }

    /// The diagram automorphism σ used by the perfect crystal of this family.
    ///
    /// Type `A` depends on the column height of `B^{k,l}`, so it is passed in
    /// `column_height`; it is ignored for the other families.
    pub fn sigma(self, column_height: usize) -> Sigma {
        match self {
            AffineType::A1(_) => Sigma::Rotate(column_height),
            AffineType::B1(_) | AffineType::A2Odd(_) => Sigma::SwapZeroOne,
            AffineType::D1(_) => Sigma::SwapBothEnds,
            AffineType::A2Even(_) | AffineType::D2(_) | AffineType::C1(_) => Sigma::Identity,
        }
    }

    /// All dominant weights of level `l`, in ascending lexicographic order of
    /// their coefficient vectors.
    pub fn dominant_weights_of_level(self, l: u32) -> Vec<ClassicalWeight> {
        let levels = self.levels();
        let mut out = Vec::new();
        let mut current = vec![0i64; levels.len()];
        fill_level(&levels, 0, l as i64, &mut current, &mut out);
        out
    }
}

fn fill_level(
    levels: &[i64],
    idx: usize,
    remaining: i64,
    current: &mut Vec<i64>,
    out: &mut Vec<ClassicalWeight>,
) {
    if idx == levels.len() {
        if remaining == 0 {
            out.push(ClassicalWeight(current.clone()));
        }
        return;
    }
    let max = remaining / levels[idx];
    for m in 0..=max {
        current[idx] = m;
        fill_level(levels, idx + 1, remaining - m * levels[idx], current, out);
    }
    current[idx] = 0;
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.tag(), self.rank())
    }
}

/// A weight `Σ m_i Λ_i` of `P_cl`, stored as its coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassicalWeight(pub Vec<i64>);

impl ClassicalWeight {
    pub fn zero(len: usize) -> Self {
        ClassicalWeight(vec![0; len])
    }

    /// `Λ_i` in a weight space with `len` coefficients.
    pub fn fundamental(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        ClassicalWeight(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `⟨λ, h_i⟩`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn scaled(&self, c: i64) -> Self {
        ClassicalWeight(self.0.iter().map(|m| m * c).collect())
    }

    /// `Some(i)` when the weight is `l·Λ_i` for some `l > 0`.
    pub fn as_multiple_of_fundamental(&self) -> Option<(usize, i64)> {
        let nonzero: Vec<_> = self.0.iter().enumerate().filter(|(_, &m)| m != 0).collect();
        match nonzero.as_slice() {
            [(i, &m)] if m > 0 => Some((*i, m)),
            _ => None,
        }
    }

    /// Coefficients with index `skip` removed.
    pub fn restricted(&self, skip: usize) -> Vec<i64> {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, &m)| m)
            .collect()
    }

    pub(crate) fn check_len(&self, expected: usize) -> Result<()> {
        if self.0.len() != expected {
            return Err(CrystalError::Dimension {
                expected,
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

impl Add for &ClassicalWeight {
    type Output = ClassicalWeight;

    fn add(self, rhs: Self) -> ClassicalWeight {
        ClassicalWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ClassicalWeight {
    type Output = ClassicalWeight;

    fn sub(self, rhs: Self) -> ClassicalWeight {
        ClassicalWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for ClassicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl FromStr for ClassicalWeight {
    type Err = CrystalError;

    /// Parses `1,0,0,0` (brackets and parentheses are tolerated).
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        if trimmed.is_empty() {
            return Err(CrystalError::Parse("empty weight".into()));
        }
        trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| CrystalError::Parse(format!("weight coefficient `{t}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(ClassicalWeight)
    }
}

/// Diagram automorphism acting on `(P_cl^+)_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sigma {
    /// `(m_0, …, m_n) ↦ (m_k, m_{k+1}, …, m_n, m_0, …, m_{k-1})`.
    Rotate(usize),
    /// Swaps `m_0` and `m_1`.
    SwapZeroOne,
    /// Swaps `m_0 ↔ m_1` and `m_{n-1} ↔ m_n`.
    SwapBothEnds,
    Identity,
}

impl Sigma {
    pub fn apply(self, weight: &ClassicalWeight) -> ClassicalWeight {
        let m = weight.coeffs();
        let len = m.len();
        let mut out = m.to_vec();
        match self {
            Sigma::Rotate(k) => {
                for (i, slot) in out.iter_mut().enumerate() {
                    *slot = m[(i + k) % len];
                }
            }
            Sigma::SwapZeroOne => out.swap(0, 1),
            Sigma::SwapBothEnds => {
                out.swap(0, 1);
                out.swap(len - 2, len - 1);
            }
            Sigma::Identity => {}
        }
        ClassicalWeight(out)
    }

    /// `σ^t λ`.
    pub fn power(self, weight: &ClassicalWeight, t: usize) -> ClassicalWeight {
        (0..t).fold(weight.clone(), |w, _| self.apply(&w))
    }

    /// The σ-orbit `λ, σλ, σ²λ, …` up to (not including) the first repeat of `λ`.
    pub fn orbit(self, weight: &ClassicalWeight) -> Vec<ClassicalWeight> {
        let mut orbit = vec![weight.clone()];
        loop {
            let next = self.apply(orbit.last().expect("orbit is non-empty"));
            if &next == weight {
                return orbit;
            }
            orbit.push(next);
        }
    }
}

/// `ε(i)` of the parity function: 0 for even, 1 for odd.
pub fn parity(i: usize) -> usize {
    i % 2
}
