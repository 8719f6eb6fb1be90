//! The coordinate-tuple perfect crystals for `B_n^(1)`, `D_n^(1)`,
//! `A_{2n-1}^(2)`, `A_{2n}^(2)`, `D_{n+1}^(2)` and `C_n^(1)`.
//!
//! An element is stored in printed order `(x_1, …, x_n, [x_0], x̄_n, …, x̄_1)`;
//! the `x_0` slot exists only for `B_n^(1)` and `D_{n+1}^(2)`.

use std::fmt;

use smallvec::SmallVec;

use crate::cartan::{parity, AffineType, ClassicalWeight, Sigma};
use crate::crystal::{search_ground_element, Crystal};
use crate::exec::Budget;
use crate::{CrystalError, Result};

/// One element of a coordinate crystal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordElement(pub SmallVec<[u16; 16]>);

impl CoordElement {
    pub fn from_slice(v: &[u16]) -> Self {
        CoordElement(SmallVec::from_slice(v))
    }

    pub fn coords(&self) -> &[u16] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().map(|&c| c as u32).sum()
    }
}

impl fmt::Display for CoordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A named coordinate of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    /// `x_i`, `1 ≤ i ≤ n`.
    X(usize),
    /// `x_0`.
    Zero,
    /// `x̄_i`, `1 ≤ i ≤ n`.
    Bar(usize),
}

/// A perfect crystal of level `l` realized on coordinate tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoordinateCrystal {
    ty: AffineType,
    l: u32,
}

impl CoordinateCrystal {
    pub fn new(ty: AffineType, l: u32) -> Result<Self> {
        ty.validate()?;
        if matches!(ty, AffineType::A1(_)) {
            return Err(CrystalError::Unsupported(
                "type A uses the tableau crystal".into(),
            ));
        }
        if l == 0 {
            return Err(CrystalError::InvalidParameter("level must be at least 1".into()));
        }
        Ok(CoordinateCrystal { ty, l })
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn has_zero_slot(&self) -> bool {
        matches!(self.ty, AffineType::B1(_) | AffineType::D2(_))
    }

    /// Number of stored coordinates.
    pub fn width(&self) -> usize {
        2 * self.rank() + usize::from(self.has_zero_slot())
    }

    /// Storage index of a slot.
    pub fn position(&self, slot: Slot) -> usize {
        let n = self.rank();
        match slot {
            Slot::X(i) => i - 1,
            Slot::Zero => {
                assert!(self.has_zero_slot(), "{} has no x_0 coordinate", self.ty);
                n
            }
            Slot::Bar(i) => self.width() - i,
        }
    }

    /// All slots in printed order.
    pub fn slots(&self) -> Vec<Slot> {
        let n = self.rank();
        let mut v: Vec<Slot> = (1..=n).map(Slot::X).collect();
        if self.has_zero_slot() {
            v.push(Slot::Zero);
        }
        v.extend((1..=n).rev().map(Slot::Bar));
        v
    }

    fn get(&self, b: &CoordElement, slot: Slot) -> i64 {
        b.0[self.position(slot)] as i64
    }

    fn x(&self, b: &CoordElement, i: usize) -> i64 {
        self.get(b, Slot::X(i))
    }

    fn xb(&self, b: &CoordElement, i: usize) -> i64 {
        self.get(b, Slot::Bar(i))
    }

    fn x0(&self, b: &CoordElement) -> i64 {
        if self.has_zero_slot() {
            self.get(b, Slot::Zero)
        } else {
            0
        }
    }

    /// `Σ (x_i + x̄_i)`, excluding `x_0`.
    fn pair_sum(&self, b: &CoordElement) -> i64 {
        b.total() as i64 - self.x0(b)
    }

    fn max_entry(&self) -> u16 {
        match self.ty {
            AffineType::C1(_) => 2 * self.l as u16,
            _ => self.l as u16,
        }
    }

    /// Membership predicate of the family. `x_0` counts towards the sum.
    pub fn is_member(&self, b: &CoordElement) -> bool {
        if b.0.len() != self.width() {
            return false;
        }
        let l = self.l as i64;
        let s = self.pair_sum(b);
        let z = self.x0(b);
        let n = self.rank();
        match self.ty {
            AffineType::B1(_) => z <= 1 && s + z == l,
            AffineType::D1(_) => (self.x(b, n) == 0 || self.xb(b, n) == 0) && s == l,
            AffineType::A2Odd(_) => s == l,
            AffineType::A2Even(_) => s <= l,
            AffineType::D2(_) => z <= 1 && s + z <= l,
            AffineType::C1(_) => s % 2 == 0 && s <= 2 * l,
            AffineType::A1(_) => unreachable!("rejected in the constructor"),
        }
    }

    fn member_or_err(&self, b: &CoordElement) -> Result<()> {
        if self.is_member(b) {
            Ok(())
        } else {
            Err(CrystalError::Membership(format!("{} {}", self.ty, b)))
        }
    }

    /// Applies coordinate shifts, returning `None` if the result is not a member.
    fn shifted(&self, b: &CoordElement, moves: &[(Slot, i64)]) -> Option<CoordElement> {
        let mut out = b.clone();
        for &(slot, delta) in moves {
            let p = self.position(slot);
            let v = out.0[p] as i64 + delta;
            if v < 0 || v > u16::MAX as i64 {
                return None;
            }
            out.0[p] = v as u16;
        }
        self.is_member(&out).then_some(out)
    }

    fn f_moves(&self, i: usize, b: &CoordElement) -> Vec<(Slot, i64)> {
        use Slot::*;
        let n = self.rank();
        let (x, xb) = (|j| self.x(b, j), |j| self.xb(b, j));
        match self.ty {
            AffineType::B1(_) | AffineType::D1(_) | AffineType::A2Odd(_) if i == 0 => {
                if x(2) >= xb(2) {
                    vec![(X(2), 1), (Bar(1), -1)]
                } else {
                    vec![(X(1), 1), (Bar(2), -1)]
                }
            }
            AffineType::A2Even(_) | AffineType::D2(_) if i == 0 => {
                if x(1) >= xb(1) {
                    vec![(X(1), 1)]
                } else {
                    vec![(Bar(1), -1)]
                }
            }
            AffineType::C1(_) if i == 0 => {
                if x(1) >= xb(1) {
                    vec![(X(1), 2)]
                } else if x(1) == xb(1) - 1 {
                    vec![(X(1), 1), (Bar(1), -1)]
                } else {
                    vec![(Bar(1), -2)]
                }
            }
            AffineType::B1(_) | AffineType::D2(_) if i == n => {
                if self.x0(b) == 0 {
                    vec![(X(n), -1), (Zero, 1)]
                } else {
                    vec![(Zero, -1), (Bar(n), 1)]
                }
            }
            AffineType::A2Odd(_) | AffineType::A2Even(_) | AffineType::C1(_) if i == n => {
                vec![(X(n), -1), (Bar(n), 1)]
            }
            AffineType::D1(_) if i == n => {
                if x(n) >= 1 {
                    vec![(X(n), -1), (Bar(n - 1), 1)]
                } else {
                    vec![(X(n - 1), -1), (Bar(n), 1)]
                }
            }
            AffineType::D1(_) if i == n - 1 => {
                if xb(n) == 0 {
                    vec![(X(n - 1), -1), (X(n), 1)]
                } else {
                    vec![(Bar(n), -1), (Bar(n - 1), 1)]
                }
            }
            _ => {
                if x(i + 1) >= xb(i + 1) {
                    vec![(X(i), -1), (X(i + 1), 1)]
                } else {
                    vec![(Bar(i + 1), -1), (Bar(i), 1)]
                }
            }
        }
    }

    /// Inverse of [`Self::f_moves`]: each branch undoes the `f_i` case whose
    /// image satisfies the branch condition.
    fn e_moves(&self, i: usize, b: &CoordElement) -> Vec<(Slot, i64)> {
        use Slot::*;
        let n = self.rank();
        let (x, xb) = (|j| self.x(b, j), |j| self.xb(b, j));
        match self.ty {
            AffineType::B1(_) | AffineType::D1(_) | AffineType::A2Odd(_) if i == 0 => {
                if x(2) > xb(2) {
                    vec![(X(2), -1), (Bar(1), 1)]
                } else {
                    vec![(X(1), -1), (Bar(2), 1)]
                }
            }
            AffineType::A2Even(_) | AffineType::D2(_) if i == 0 => {
                if x(1) > xb(1) {
                    vec![(X(1), -1)]
                } else {
                    vec![(Bar(1), 1)]
                }
            }
            AffineType::C1(_) if i == 0 => {
                if x(1) >= xb(1) + 2 {
                    vec![(X(1), -2)]
                } else if x(1) == xb(1) + 1 {
                    vec![(X(1), -1), (Bar(1), 1)]
                } else {
                    vec![(Bar(1), 2)]
                }
            }
            AffineType::B1(_) | AffineType::D2(_) if i == n => {
                if self.x0(b) == 1 {
                    vec![(Zero, -1), (X(n), 1)]
                } else {
                    vec![(Bar(n), -1), (Zero, 1)]
                }
            }
            AffineType::A2Odd(_) | AffineType::A2Even(_) | AffineType::C1(_) if i == n => {
                vec![(Bar(n), -1), (X(n), 1)]
            }
            AffineType::D1(_) if i == n => {
                if xb(n) >= 1 {
                    vec![(Bar(n), -1), (X(n - 1), 1)]
                } else {
                    vec![(Bar(n - 1), -1), (X(n), 1)]
                }
            }
            AffineType::D1(_) if i == n - 1 => {
                if x(n) >= 1 {
                    vec![(X(n), -1), (X(n - 1), 1)]
                } else {
                    vec![(Bar(n - 1), -1), (Bar(n), 1)]
                }
            }
            _ => {
                if x(i + 1) > xb(i + 1) {
                    vec![(X(i + 1), -1), (X(i), 1)]
                } else {
                    vec![(Bar(i), -1), (Bar(i + 1), 1)]
                }
            }
        }
    }

    fn eps_phi_values(&self, i: usize, b: &CoordElement) -> (i64, i64) {
        let n = self.rank();
        let l = self.l as i64;
        let (x, xb) = (|j| self.x(b, j), |j| self.xb(b, j));
        let pos = |v: i64| v.max(0);
        match self.ty {
            AffineType::B1(_) | AffineType::D1(_) | AffineType::A2Odd(_) if i == 0 => (
                x(1) + pos(x(2) - xb(2)),
                xb(1) + pos(xb(2) - x(2)),
            ),
            AffineType::A2Even(_) | AffineType::D2(_) if i == 0 => {
                let base = l - self.x0(b) - self.pair_sum(b);
                (base + 2 * pos(x(1) - xb(1)), base + 2 * pos(xb(1) - x(1)))
            }
            AffineType::C1(_) if i == 0 => {
                let base = l - self.pair_sum(b) / 2;
                (base + pos(x(1) - xb(1)), base + pos(xb(1) - x(1)))
            }
            AffineType::B1(_) | AffineType::D2(_) if i == n => {
                (2 * xb(n) + self.x0(b), 2 * x(n) + self.x0(b))
            }
            AffineType::A2Odd(_) | AffineType::A2Even(_) | AffineType::C1(_) if i == n => {
                (xb(n), x(n))
            }
            AffineType::D1(_) if i == n => (xb(n - 1) + xb(n), x(n - 1) + x(n)),
            AffineType::D1(_) if i == n - 1 => (xb(n - 1) + x(n), x(n - 1) + xb(n)),
            _ => (
                xb(i) + pos(x(i + 1) - xb(i + 1)),
                x(i) + pos(xb(i + 1) - x(i + 1)),
            ),
        }
    }

    /// All members in ascending lexicographic order of `(x, x_0, x̄)`.
    pub fn enumerate(&self, budget: Budget) -> Result<Vec<CoordElement>> {
        let width = self.width();
        let zero_pos = self.has_zero_slot().then(|| self.position(Slot::Zero));
        let max_total = match self.ty {
            AffineType::C1(_) => 2 * self.l,
            _ => self.l,
        } as u16;
        let mut out = Vec::new();
        let mut cur: SmallVec<[u16; 16]> = SmallVec::from_elem(0, width);
        self.fill(0, max_total, zero_pos, &mut cur, &mut out, budget)?;
        Ok(out)
    }

    fn fill(
        &self,
        idx: usize,
        remaining: u16,
        zero_pos: Option<usize>,
        cur: &mut SmallVec<[u16; 16]>,
        out: &mut Vec<CoordElement>,
        budget: Budget,
    ) -> Result<()> {
        if idx == cur.len() {
            let b = CoordElement(cur.clone());
            if self.is_member(&b) {
                out.push(b);
                budget.check(out.len())?;
            }
            return Ok(());
        }
        let cap = if Some(idx) == zero_pos {
            remaining.min(1)
        } else {
            remaining.min(self.max_entry())
        };
        for v in 0..=cap {
            cur[idx] = v;
            self.fill(idx + 1, remaining - v, zero_pos, cur, out, budget)?;
        }
        cur[idx] = 0;
        Ok(())
    }

    /// The element with the single nonzero coordinate `slot = value`.
    pub fn unit(&self, slot: Slot, value: u16) -> CoordElement {
        let mut v: SmallVec<[u16; 16]> = SmallVec::from_elem(0, self.width());
        v[self.position(slot)] = value;
        CoordElement(v)
    }

    pub fn zero(&self) -> CoordElement {
        CoordElement(SmallVec::from_elem(0, self.width()))
    }

    /// `b(lΛ_i)` from the closed formulas, for the weights that have one.
    pub fn minimal_element(&self, lambda: &ClassicalWeight) -> Result<CoordElement> {
        lambda.check_len(self.ty.index_count())?;
        let unsupported = || {
            CrystalError::UnsupportedWeight(format!(
                "{} has no closed-form minimal element for {lambda}",
                self.ty
            ))
        };
        let (i, m) = lambda.as_multiple_of_fundamental().ok_or_else(unsupported)?;
        let l = self.l as u16;
        if m != self.l as i64 {
            return Err(unsupported());
        }
        let n = self.rank();
        let spin = || {
            let x0 = parity(self.l as usize) as u16;
            let half = (l - x0) / 2;
            let mut b = self.zero();
            b.0[self.position(Slot::X(n))] = half;
            b.0[self.position(Slot::Zero)] = x0;
            b.0[self.position(Slot::Bar(n))] = half;
            b
        };
        let b = match (self.ty, i) {
            (AffineType::B1(_) | AffineType::D1(_) | AffineType::A2Odd(_), 0) => {
                self.unit(Slot::Bar(1), l)
            }
            (AffineType::B1(_) | AffineType::D1(_) | AffineType::A2Odd(_), 1) => {
                self.unit(Slot::X(1), l)
            }
            (AffineType::B1(_), j) if j == n => spin(),
            (AffineType::D1(_), j) if j == n - 1 => self.unit(Slot::Bar(n), l),
            (AffineType::D1(_), j) if j == n => self.unit(Slot::X(n), l),
            (AffineType::A2Even(_) | AffineType::D2(_) | AffineType::C1(_), 0) => self.zero(),
            (AffineType::D2(_), j) if j == n => spin(),
            (AffineType::C1(_), j) if j == n => {
                let mut b = self.unit(Slot::X(n), l);
                b.0[self.position(Slot::Bar(n))] = l;
                b
            }
            _ => return Err(unsupported()),
        };
        debug_assert!(self.is_member(&b));
        Ok(b)
    }

    /// True when every nonzero coordinate of `b` lies in `allowed`.
    pub fn support_within(&self, b: &CoordElement, allowed: &[Slot]) -> bool {
        self.slots()
            .into_iter()
            .all(|s| allowed.contains(&s) || self.get(b, s) == 0)
    }

    fn check(&self, i: usize, b: &CoordElement) {
        assert!(i <= self.rank(), "index {i} outside 0..={}", self.rank());
        debug_assert!(self.is_member(b), "{} is not in {}", b, self.ty);
    }
}

impl Crystal for CoordinateCrystal {
    type Element = CoordElement;

    fn affine_type(&self) -> AffineType {
        self.ty
    }

    fn level(&self) -> u32 {
        self.l
    }

    fn sigma(&self) -> Sigma {
        self.ty.sigma(0)
    }

    fn f(&self, i: usize, b: &CoordElement) -> Option<CoordElement> {
        self.check(i, b);
        self.shifted(b, &self.f_moves(i, b))
    }

    fn e(&self, i: usize, b: &CoordElement) -> Option<CoordElement> {
        self.check(i, b);
        self.shifted(b, &self.e_moves(i, b))
    }

    fn epsilon(&self, i: usize, b: &CoordElement) -> u32 {
        self.check(i, b);
        let (eps, _) = self.eps_phi_values(i, b);
        debug_assert!(eps >= 0);
        eps as u32
    }

    fn phi(&self, i: usize, b: &CoordElement) -> u32 {
        self.check(i, b);
        let (_, phi) = self.eps_phi_values(i, b);
        debug_assert!(phi >= 0);
        phi as u32
    }

    fn elements(&self) -> Vec<CoordElement> {
        self.enumerate(Budget::default())
            .expect("crystal exceeds the default enumeration budget")
    }

    fn encode(&self, b: &CoordElement) -> String {
        format!("{}{}", self.ty.tag(), b)
    }

    fn decode(&self, s: &str) -> Result<CoordElement> {
        let body = s.trim().trim_start_matches(self.ty.tag());
        let body = body.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u16>()
                    .map_err(|e| CrystalError::Parse(format!("coordinate `{t}`: {e}")))
            })
            .collect::<Result<SmallVec<[u16; 16]>>>()?;
        if coords.len() != self.width() {
            return Err(CrystalError::Dimension {
                expected: self.width(),
                got: coords.len(),
            });
        }
        let b = CoordElement(coords);
        self.member_or_err(&b)?;
        Ok(b)
    }

    fn contains(&self, b: &CoordElement) -> bool {
        self.is_member(b)
    }

    fn ground_element(&self, lambda: &ClassicalWeight) -> Result<CoordElement> {
        match self.minimal_element(lambda) {
            Ok(b) => Ok(b),
            Err(CrystalError::UnsupportedWeight(_)) => search_ground_element(self, lambda),
            Err(e) => Err(e),
        }
    }

    fn size(&self) -> usize {
        self.elements().len()
    }
}
