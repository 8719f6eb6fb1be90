//! The `A_n^(1)` perfect crystal `B^{k,l}` on `k × l` rectangular tables.
//!
//! Classical operators act through the column injection
//! `T ↦ (column l) ⊗ … ⊗ (column 1)`, so column `a` sits at tensor position
//! `a`. The 0-arrows come from promotion: `f_0 = pr⁻¹ ∘ f_1 ∘ pr`.

use std::fmt;

use itertools::Itertools;
use smallvec::SmallVec;

use crate::cartan::{AffineType, ClassicalWeight, Sigma};
use crate::crystal::{reduce_signature, search_ground_element, Crystal, Sign, SignedSequence};
use crate::exec::Budget;
use crate::{CrystalError, Result};

/// Entries of a rectangular table stored column by column, left to right,
/// each column top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectTableau(pub SmallVec<[u8; 16]>);

impl RectTableau {
    pub fn entries(&self) -> &[u8] {
        &self.0
    }
}

/// `B^{k,l}` for `A_n^(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableauCrystal {
    n: usize,
    k: usize,
    l: usize,
}

impl TableauCrystal {
    pub fn new(n: usize, k: usize, l: usize) -> Result<Self> {
        AffineType::A1(n).validate()?;
        if k == 0 || k > n {
            return Err(CrystalError::InvalidParameter(format!(
                "column height k={k} must lie in 1..={n}"
            )));
        }
        if l == 0 {
            return Err(CrystalError::InvalidParameter("level must be at least 1".into()));
        }
        if n + 1 > u8::MAX as usize {
            return Err(CrystalError::InvalidParameter(format!("rank {n} is too large")));
        }
        Ok(TableauCrystal { n, k, l })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn height(&self) -> usize {
        self.k
    }

    pub fn width(&self) -> usize {
        self.l
    }

    fn top(&self) -> u8 {
        (self.n + 1) as u8
    }

    /// Entry in row `r`, column `c` (both 1-based).
    pub fn entry(&self, t: &RectTableau, r: usize, c: usize) -> u8 {
        t.0[(c - 1) * self.k + (r - 1)]
    }

    /// Column `c` (1-based).
    pub fn column<'a>(&self, t: &'a RectTableau, c: usize) -> &'a [u8] {
        &t.0[(c - 1) * self.k..c * self.k]
    }

    pub fn from_columns(&self, columns: &[Vec<u8>]) -> Result<RectTableau> {
        if columns.len() != self.l || columns.iter().any(|c| c.len() != self.k) {
            return Err(CrystalError::Dimension {
                expected: self.k * self.l,
                got: columns.iter().map(Vec::len).sum(),
            });
        }
        let t = RectTableau(columns.iter().flatten().copied().collect());
        if !self.is_valid(&t) {
            return Err(CrystalError::Membership(self.encode(&t)));
        }
        Ok(t)
    }

    /// Rows weakly increase, columns strictly increase, entries in `1..=n+1`.
    pub fn is_valid(&self, t: &RectTableau) -> bool {
        if t.0.len() != self.k * self.l {
            return false;
        }
        if t.0.iter().any(|&m| m == 0 || m > self.top()) {
            return false;
        }
        for c in 1..=self.l {
            for r in 1..=self.k {
                if r < self.k && self.entry(t, r, c) >= self.entry(t, r + 1, c) {
                    return false;
                }
                if c < self.l && self.entry(t, r, c) > self.entry(t, r, c + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// All tables in ascending order.
    pub fn enumerate(&self, budget: Budget) -> Result<Vec<RectTableau>> {
        let columns: Vec<Vec<u8>> = (1..=self.top()).combinations(self.k).collect();
        let mut out = Vec::new();
        let mut chosen: Vec<usize> = Vec::with_capacity(self.l);
        self.extend_columns(&columns, &mut chosen, &mut out, budget)?;
        Ok(out)
    }

    fn extend_columns(
        &self,
        columns: &[Vec<u8>],
        chosen: &mut Vec<usize>,
        out: &mut Vec<RectTableau>,
        budget: Budget,
    ) -> Result<()> {
        if chosen.len() == self.l {
            out.push(RectTableau(
                chosen.iter().flat_map(|&c| columns[c].iter().copied()).collect(),
            ));
            return budget.check(out.len());
        }
        for (idx, col) in columns.iter().enumerate() {
            let fits = chosen
                .last()
                .is_none_or(|&p| columns[p].iter().zip(col).all(|(a, b)| a <= b));
            if fits {
                chosen.push(idx);
                self.extend_columns(columns, chosen, out, budget)?;
                chosen.pop();
            }
        }
        Ok(())
    }

    /// `(ε_j, φ_j)` of a single column, `1 ≤ j ≤ n`.
    fn column_eps_phi(col: &[u8], j: u8) -> (u32, u32) {
        let has = |v| col.contains(&v);
        (
            u32::from(has(j + 1) && !has(j)),
            u32::from(has(j) && !has(j + 1)),
        )
    }

    /// Reduced `j`-signature of the column tensor product.
    fn classical_signature(&self, j: usize, t: &RectTableau) -> SignedSequence {
        let mut s = SignedSequence::new();
        for c in (1..=self.l).rev() {
            let (eps, phi) = Self::column_eps_phi(self.column(t, c), j as u8);
            s.push_block(eps, phi, c);
        }
        reduce_signature(&s)
    }

    fn classical_apply(&self, raise: bool, j: usize, t: &RectTableau) -> Option<RectTableau> {
        let reduced = self.classical_signature(j, t);
        let chosen = if raise {
            reduced.rightmost_minus()?
        } else {
            reduced.leftmost_plus()?
        };
        let (from, to) = if raise {
            (j as u8 + 1, j as u8)
        } else {
            (j as u8, j as u8 + 1)
        };
        let c = chosen.origin;
        let mut out = t.clone();
        let slot = (c - 1) * self.k
            + self
                .column(t, c)
                .iter()
                .position(|&m| m == from)
                .expect("a surviving sign marks a movable entry");
        out.0[slot] = to;
        debug_assert!(self.is_valid(&out), "{}", self.encode(&out));
        Some(out)
    }

    fn rows(&self, t: &RectTableau) -> Vec<Vec<Option<u8>>> {
        (1..=self.k)
            .map(|r| (1..=self.l).map(|c| Some(self.entry(t, r, c))).collect())
            .collect()
    }

    fn tableau_from_rows(&self, rows: &[Vec<u8>]) -> RectTableau {
        RectTableau(
            (0..self.l)
                .flat_map(|c| rows.iter().map(move |row| row[c]))
                .collect(),
        )
    }

    /// Promotion: remove the entries `n+1`, slide the holes to the top-left by
    /// reverse jeu de taquin, add 1 to every entry and fill the holes with 1.
    pub fn promotion(&self, t: &RectTableau) -> RectTableau {
        let mut g = self.rows(t);
        let holes: Vec<(usize, usize)> = (0..self.k)
            .cartesian_product(0..self.l)
            .filter(|&(r, c)| g[r][c] == Some(self.top()))
            .collect();
        for &(r, c) in &holes {
            g[r][c] = None;
        }
        for &(r0, c0) in &holes {
            let (mut r, mut c) = (r0, c0);
            loop {
                let north = if r > 0 { g[r - 1][c] } else { None };
                let west = if c > 0 { g[r][c - 1] } else { None };
                let (nr, nc) = match (north, west) {
                    (None, None) => break,
                    (Some(a), Some(b)) if a >= b => (r - 1, c),
                    (Some(_), None) => (r - 1, c),
                    _ => (r, c - 1),
                };
                g[r][c] = g[nr][nc].take();
                (r, c) = (nr, nc);
            }
        }
        let rows: Vec<Vec<u8>> = g
            .into_iter()
            .map(|row| row.into_iter().map(|m| m.map_or(1, |v| v + 1)).collect())
            .collect();
        self.tableau_from_rows(&rows)
    }

    /// Inverse promotion: remove the 1s, slide the holes to the bottom-right,
    /// subtract 1 from every entry and fill the holes with `n+1`.
    pub fn promotion_inverse(&self, t: &RectTableau) -> RectTableau {
        let mut g = self.rows(t);
        let holes: Vec<(usize, usize)> = (0..self.k)
            .cartesian_product(0..self.l)
            .filter(|&(r, c)| g[r][c] == Some(1))
            .collect();
        for &(r, c) in &holes {
            g[r][c] = None;
        }
        for &(r0, c0) in holes.iter().rev() {
            let (mut r, mut c) = (r0, c0);
            loop {
                let south = if r + 1 < self.k { g[r + 1][c] } else { None };
                let east = if c + 1 < self.l { g[r][c + 1] } else { None };
                let (nr, nc) = match (south, east) {
                    (None, None) => break,
                    (Some(a), Some(b)) if a <= b => (r + 1, c),
                    (Some(_), None) => (r + 1, c),
                    _ => (r, c + 1),
                };
                g[r][c] = g[nr][nc].take();
                (r, c) = (nr, nc);
            }
        }
        let top = self.top();
        let rows: Vec<Vec<u8>> = g
            .into_iter()
            .map(|row| row.into_iter().map(|m| m.map_or(top, |v| v - 1)).collect())
            .collect();
        self.tableau_from_rows(&rows)
    }

    /// `b(lΛ_m)`: every column is the sorted residues of `i + m − k`
    /// (`1 ≤ i ≤ k`) taken in `1..=n+1`.
    pub fn minimal_element(&self, m: usize) -> RectTableau {
        let modulus = (self.n + 1) as i64;
        let col: Vec<u8> = (1..=self.k as i64)
            .map(|i| (i + m as i64 - self.k as i64).rem_euclid(modulus))
            .map(|v| if v == 0 { modulus as u8 } else { v as u8 })
            .sorted()
            .collect();
        RectTableau((0..self.l).flat_map(|_| col.iter().copied()).collect())
    }

    /// `b̄_j` of the ground-state path for `λ = lΛ_0`, read off the window
    /// `n+2−jk, …, n+1−(j−1)k`.
    pub fn ground_state_tableau(&self, j: usize) -> RectTableau {
        let (n, k) = (self.n as i64, self.k as i64);
        let j = j as i64;
        let window: Vec<i64> = (n + 2 - j * k..=n + 1 - (j - 1) * k).collect();
        let kp = n + 1 - k;
        let col: Vec<u8> = match window.iter().position(|v| v.rem_euclid(n + 1) == 0) {
            None => (1..=k)
                .map(|i| (i + n + 1 - j * k).rem_euclid(n + 1) as u8)
                .collect(),
            Some(p) => {
                let alpha = p as i64 + 1;
                (1..=k)
                    .map(|i| if i <= k - alpha { i as u8 } else { (i + kp) as u8 })
                    .collect()
            }
        };
        RectTableau((0..self.l).flat_map(|_| col.iter().copied()).collect())
    }

    /// Compact label: each column's entries run together, columns joined by
    /// `|`, e.g. `13|24`.
    pub fn compact(&self, t: &RectTableau) -> String {
        let sep = if self.n + 1 >= 10 { "," } else { "" };
        (1..=self.l)
            .map(|c| self.column(t, c).iter().map(|m| m.to_string()).join(sep))
            .join("|")
    }

    fn check(&self, i: usize, t: &RectTableau) {
        assert!(i <= self.n, "index {i} outside 0..={}", self.n);
        debug_assert!(self.is_valid(t), "{t:?} is not a valid table");
    }
}

impl fmt::Display for RectTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl Crystal for TableauCrystal {
    type Element = RectTableau;

    fn affine_type(&self) -> AffineType {
        AffineType::A1(self.n)
    }

    fn level(&self) -> u32 {
        self.l as u32
    }

    fn sigma(&self) -> Sigma {
        AffineType::A1(self.n).sigma(self.k)
    }

    fn f(&self, i: usize, t: &RectTableau) -> Option<RectTableau> {
        self.check(i, t);
        if i == 0 {
            let lifted = self.classical_apply(false, 1, &self.promotion(t))?;
            Some(self.promotion_inverse(&lifted))
        } else {
            self.classical_apply(false, i, t)
        }
    }

    fn e(&self, i: usize, t: &RectTableau) -> Option<RectTableau> {
        self.check(i, t);
        if i == 0 {
            let lifted = self.classical_apply(true, 1, &self.promotion(t))?;
            Some(self.promotion_inverse(&lifted))
        } else {
            self.classical_apply(true, i, t)
        }
    }

    fn epsilon(&self, i: usize, t: &RectTableau) -> u32 {
        self.check(i, t);
        if i == 0 {
            return self.epsilon(1, &self.promotion(t));
        }
        self.classical_signature(i, t).count(Sign::Minus) as u32
    }

    fn phi(&self, i: usize, t: &RectTableau) -> u32 {
        self.check(i, t);
        if i == 0 {
            return self.phi(1, &self.promotion(t));
        }
        self.classical_signature(i, t).count(Sign::Plus) as u32
    }

    fn elements(&self) -> Vec<RectTableau> {
        self.enumerate(Budget::default())
            .expect("crystal exceeds the default enumeration budget")
    }

    fn encode(&self, t: &RectTableau) -> String {
        let body = (1..=self.l)
            .map(|c| self.column(t, c).iter().join(","))
            .join("|");
        format!("A1[n={},k={},l={}]{{{}}}", self.n, self.k, self.l, body)
    }

    fn decode(&self, s: &str) -> Result<RectTableau> {
        let s = s.trim();
        let body = match s.find('{') {
            Some(p) => s[p + 1..].trim_end_matches('}'),
            None => s,
        };
        let columns = body
            .split('|')
            .map(|col| {
                let col = col.trim();
                if col.contains(',') {
                    col.split(',')
                        .map(|v| {
                            v.trim()
                                .parse::<u8>()
                                .map_err(|e| CrystalError::Parse(format!("entry `{v}`: {e}")))
                        })
                        .collect::<Result<Vec<u8>>>()
                } else {
                    col.chars()
                        .map(|ch| {
                            ch.to_digit(10).map(|d| d as u8).ok_or_else(|| {
                                CrystalError::Parse(format!("entry `{ch}` in `{col}`"))
                            })
                        })
                        .collect()
                }
            })
            .collect::<Result<Vec<Vec<u8>>>>()?;
        self.from_columns(&columns)
    }

    fn contains(&self, t: &RectTableau) -> bool {
        self.is_valid(t)
    }

    fn ground_element(&self, lambda: &ClassicalWeight) -> Result<RectTableau> {
        lambda.check_len(self.n + 1)?;
        match lambda.as_multiple_of_fundamental() {
            Some((m, c)) if c == self.l as i64 => Ok(self.minimal_element(m)),
            _ => search_ground_element(self, lambda),
        }
    }
}
