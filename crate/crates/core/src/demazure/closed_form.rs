//! Closed descriptions of `B_a^(j)` and `b_a^(j)` for the builtin schedules,
//! independent of any closure computation.
//!
//! Coordinate families are covered for `lΛ_0` with the default schedule and,
//! through the parity shift `j ↦ j+1`, for the `lΛ_1` schedules of
//! `B_n^(1)`, `D_n^(1)` and `A_{2n-1}^(2)`, and for the `D_n^(1)` variant
//! with the middle pair swapped. Type `A` is covered at
//! `j = n+1` with the formula schedule.

use crate::cartan::{parity, AffineType, ClassicalWeight};
use crate::coord::{CoordElement, CoordinateCrystal, Slot};
use crate::crystal::Crystal;
use crate::tableau::{RectTableau, TableauCrystal};
use crate::{CrystalError, Result};

pub trait ClosedForm: Crystal {
    /// `B_a^(j)` for `λ` and the named schedule variant.
    fn closed_subset(
        &self,
        lambda: &ClassicalWeight,
        variant: &str,
        j: usize,
        a: usize,
    ) -> Result<Vec<Self::Element>>;

    /// `b_a^(j)`.
    fn closed_extremal(
        &self,
        lambda: &ClassicalWeight,
        variant: &str,
        j: usize,
        a: usize,
    ) -> Result<Self::Element>;
}

fn out_of_scope(ty: AffineType, lambda: &ClassicalWeight, variant: &str, j: usize, a: usize) -> CrystalError {
    CrystalError::Unsupported(format!(
        "no closed form for {ty}, {lambda}, schedule `{variant}`, j={j}, a={a}"
    ))
}

/// What a coordinate closed form needs: `d`, the parity class of `j`
/// after the `lΛ_1` shift (`true` when `b̄_j` is the `x_1` element), and
/// whether the middle pair `(n-1, n)` of `D_n^(1)` is swapped.
struct CoordScope {
    d: usize,
    x_side: bool,
    swapped: bool,
}

impl CoordinateCrystal {
    fn closed_scope(&self, lambda: &ClassicalWeight, variant: &str, j: usize, a: usize) -> Result<CoordScope> {
        let ty = self.affine_type();
        let err = || out_of_scope(ty, lambda, variant, j, a);
        lambda.check_len(ty.index_count())?;
        let (i, m) = lambda.as_multiple_of_fundamental().ok_or_else(err)?;
        let swapped = variant == "alt" && matches!(ty, AffineType::D1(_));
        if m != self.level() as i64 || (variant != "default" && !swapped) || j == 0 {
            return Err(err());
        }
        let n = ty.rank();
        let d = match ty {
            AffineType::B1(_) | AffineType::A2Odd(_) => 2 * n - 1,
            AffineType::D1(_) => 2 * n - 2,
            _ => 2 * n,
        };
        let shift = match (ty, i) {
            (_, 0) => 0,
            (AffineType::B1(_) | AffineType::D1(_) | AffineType::A2Odd(_), 1) => 1,
            _ => return Err(err()),
        };
        if a > d {
            return Err(err());
        }
        Ok(CoordScope { d, x_side: parity(j + shift) == 0, swapped })
    }

    /// Allowed support of `B_a^(j)`, or `None` for `B_d^(j) = B`.
    fn closed_support(&self, scope: &CoordScope, a: usize) -> Option<Vec<Slot>> {
        let n = self.rank();
        let base = if scope.x_side { Slot::X(1) } else { Slot::Bar(1) };
        if a == scope.d {
            return None;
        }
        let xs = |hi: usize| (1..=hi).map(Slot::X);
        let bars = |lo: usize| (lo..=n).map(Slot::Bar);
        let slots: Vec<Slot> = match self.affine_type() {
            AffineType::B1(_) | AffineType::A2Odd(_) => {
                let zero = self.has_zero_slot().then_some(Slot::Zero);
                let mut s = vec![base];
                if a < n {
                    s.extend((2..=a + 1).map(Slot::X));
                } else {
                    s.extend((2..=n).map(Slot::X));
                    s.extend(zero);
                    s.extend(bars(2 * n - a));
                }
                s
            }
            AffineType::D1(_) => {
                let mut s = vec![base];
                if scope.swapped && a == n - 1 {
                    s.extend((2..n).map(Slot::X));
                    s.push(Slot::Bar(n));
                } else if a < n {
                    s.extend((2..=a + 1).map(Slot::X));
                } else {
                    s.extend((2..=n).map(Slot::X));
                    s.extend(bars(2 * n - 1 - a));
                }
                s
            }
            _ => {
                let mut s: Vec<Slot> = if a <= n { xs(a).collect() } else { xs(n).collect() };
                if a > n {
                    if self.has_zero_slot() {
                        s.push(Slot::Zero);
                    }
                    s.extend(bars(2 * n + 1 - a));
                }
                s
            }
        };
        Some(slots)
    }
}

impl ClosedForm for CoordinateCrystal {
    fn closed_subset(
        &self,
        lambda: &ClassicalWeight,
        variant: &str,
        j: usize,
        a: usize,
    ) -> Result<Vec<CoordElement>> {
        let scope = self.closed_scope(lambda, variant, j, a)?;
        let all = self.elements();
        Ok(match self.closed_support(&scope, a) {
            None => all,
            Some(slots) => all.into_iter().filter(|b| self.support_within(b, &slots)).collect(),
        })
    }

    fn closed_extremal(
        &self,
        lambda: &ClassicalWeight,
        variant: &str,
        j: usize,
        a: usize,
    ) -> Result<CoordElement> {
        let scope = self.closed_scope(lambda, variant, j, a)?;
        let n = self.rank();
        let l = self.level() as u16;
        let start = if scope.x_side { Slot::X(1) } else { Slot::Bar(1) };
        let end = if scope.x_side { Slot::Bar(1) } else { Slot::X(1) };
        let b = match self.affine_type() {
            AffineType::B1(_) | AffineType::A2Odd(_) => match a {
                0 => self.unit(start, l),
                a if a < n => self.unit(Slot::X(a + 1), l),
                a if a < scope.d => self.unit(Slot::Bar(2 * n - a), l),
                _ => self.unit(end, l),
            },
            AffineType::D1(_) => match a {
                0 => self.unit(start, l),
                a if scope.swapped && a == n - 1 => self.unit(Slot::Bar(n), l),
                a if a < n => self.unit(Slot::X(a + 1), l),
                a if a < scope.d => self.unit(Slot::Bar(2 * n - 1 - a), l),
                _ => self.unit(end, l),
            },
            ty => {
                let m = if matches!(ty, AffineType::C1(_)) { 2 * l } else { l };
                match a {
                    0 => self.zero(),
                    a if a <= n => self.unit(Slot::X(a), m),
                    a => self.unit(Slot::Bar(2 * n + 1 - a), m),
                }
            }
        };
        Ok(b)
    }
}

impl TableauCrystal {
    fn closed_scope(&self, lambda: &ClassicalWeight, variant: &str, j: usize, a: usize) -> Result<(usize, usize)> {
        let n = self.rank();
        let k = self.height();
        let kp = n + 1 - k;
        let err = || out_of_scope(self.affine_type(), lambda, variant, j, a);
        lambda.check_len(n + 1)?;
        let lam0 = ClassicalWeight::fundamental(n + 1, 0).scaled(self.level() as i64);
        if lambda != &lam0 || variant != "formula" || j != n + 1 || a == 0 || a > k * kp {
            return Err(err());
        }
        let g = (a - 1) / kp;
        Ok((g, a - 1 - kp * g))
    }
}

impl ClosedForm for TableauCrystal {
    /// `{m : m_{i,i'} = i for i < k−g, m_{k−g,i'} ≤ k−g+r+1}`.
    fn closed_subset(
        &self,
        lambda: &ClassicalWeight,
        variant: &str,
        j: usize,
        a: usize,
    ) -> Result<Vec<RectTableau>> {
        let (g, r) = self.closed_scope(lambda, variant, j, a)?;
        let row = self.height() - g;
        let bound = (row + r + 1) as u8;
        Ok(self
            .elements()
            .into_iter()
            .filter(|t| {
                (1..=self.width()).all(|c| {
                    (1..row).all(|i| self.entry(t, i, c) == i as u8) && self.entry(t, row, c) <= bound
                })
            })
            .collect())
    }

    /// Rows `i < k−g` hold `i`, row `k−g` holds `k−g+r+1`, rows below hold
    /// `i + k'`.
    fn closed_extremal(
        &self,
        lambda: &ClassicalWeight,
        variant: &str,
        j: usize,
        a: usize,
    ) -> Result<RectTableau> {
        let (g, r) = self.closed_scope(lambda, variant, j, a)?;
        let k = self.height();
        let kp = self.rank() + 1 - k;
        let row = k - g;
        let col: Vec<u8> = (1..=k)
            .map(|i| match i.cmp(&row) {
                std::cmp::Ordering::Less => i as u8,
                std::cmp::Ordering::Equal => (row + r + 1) as u8,
                std::cmp::Ordering::Greater => (i + kp) as u8,
            })
            .collect();
        self.from_columns(&vec![col; self.width()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b1_even_row() {
        let c = CoordinateCrystal::new(AffineType::B1(3), 1).unwrap();
        let lam = ClassicalWeight(vec![1, 0, 0, 0]);
        let set: Vec<String> = c
            .closed_subset(&lam, "default", 2, 2)
            .unwrap()
            .iter()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(set, ["(0,0,1,0,0,0,0)", "(0,1,0,0,0,0,0)", "(1,0,0,0,0,0,0)"]);
        let c2 = CoordinateCrystal::new(AffineType::B1(3), 2).unwrap();
        assert_eq!(
            c2.closed_extremal(&lam.scaled(2), "default", 1, 1).unwrap().to_string(),
            "(0,2,0,0,0,0,0)"
        );
    }

    #[test]
    fn type_a_first_step() {
        let c = TableauCrystal::new(3, 2, 1).unwrap();
        let lam = ClassicalWeight(vec![1, 0, 0, 0]);
        let set: Vec<String> = c
            .closed_subset(&lam, "formula", 4, 1)
            .unwrap()
            .iter()
            .map(|t| c.compact(t))
            .collect();
        assert_eq!(set, ["12", "13"]);
        assert!(c.closed_subset(&lam, "formula", 3, 1).is_err());
    }

    #[test]
    fn c1_extremal_uses_2l() {
        let c = CoordinateCrystal::new(AffineType::C1(2), 1).unwrap();
        let lam = ClassicalWeight(vec![1, 0, 0]);
        assert_eq!(c.closed_extremal(&lam, "default", 1, 1).unwrap().to_string(), "(2,0,0,0)");
    }
}
