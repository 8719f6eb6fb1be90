//! Reflection schedules `i_a^(j)` (`j ≥ 1`, `1 ≤ a ≤ d`) defining the chain
//! `w^(k) = r_{i_a^(j)} w^(k-1)` with `k = (j-1)d + a`.

use serde::{Deserialize, Serialize};

use crate::cartan::{parity, AffineType, ClassicalWeight};
use crate::{CrystalError, Result};

/// A schedule periodic in `j`: row `(j-1) mod period_in_j` of `table` lists
/// `i_1^(j), …, i_d^(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    pub d: usize,
    pub period_in_j: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(skip)]
    pub name: String,
}

impl Schedule {
    pub fn new(table: Vec<Vec<usize>>, name: impl Into<String>) -> Result<Self> {
        let d = table.first().map_or(0, Vec::len);
        let s = Schedule { d, period_in_j: table.len(), table, name: name.into() };
        s.check_shape()?;
        Ok(s)
    }

    fn check_shape(&self) -> Result<()> {
        if self.d == 0 || self.period_in_j == 0 {
            return Err(CrystalError::Schedule("empty table".into()));
        }
        if self.table.len() != self.period_in_j {
            return Err(CrystalError::Schedule(format!(
                "period_in_j is {} but the table has {} rows",
                self.period_in_j,
                self.table.len()
            )));
        }
        if let Some(row) = self.table.iter().find(|r| r.len() != self.d) {
            return Err(CrystalError::Schedule(format!(
                "row {row:?} does not have length d = {}",
                self.d
            )));
        }
        Ok(())
    }

    /// Checks that every index lies in the index set of `ty`.
    pub fn validate_for(&self, ty: AffineType) -> Result<()> {
        self.check_shape()?;
        let n = ty.rank();
        match self.table.iter().flatten().find(|&&i| i > n) {
            Some(i) => Err(CrystalError::Schedule(format!("index {i} outside 0..={n}"))),
            None => Ok(()),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let mut s: Schedule =
            serde_json::from_str(text).map_err(|e| CrystalError::Parse(e.to_string()))?;
        s.check_shape()?;
        s.name = "file".into();
        Ok(s)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("schedule serializes")
    }

    /// `i_a^(j)`.
    pub fn index(&self, j: usize, a: usize) -> usize {
        assert!(j >= 1 && (1..=self.d).contains(&a), "(j, a) = ({j}, {a}) out of range");
        self.table[(j - 1) % self.period_in_j][a - 1]
    }

    pub fn row(&self, j: usize) -> &[usize] {
        &self.table[(j - 1) % self.period_in_j]
    }

    /// `(j, a)` with `k = (j-1)d + a`, `1 ≤ a ≤ d`; `k = 0` gives `(1, 0)`.
    pub fn position(&self, k: usize) -> (usize, usize) {
        if k == 0 {
            return (1, 0);
        }
        ((k - 1) / self.d + 1, (k - 1) % self.d + 1)
    }

    /// The reflection index applied at step `k ≥ 1`.
    pub fn reflection(&self, k: usize) -> usize {
        let (j, a) = self.position(k);
        self.index(j, a)
    }

    /// The word `(i(1), …, i(k))`.
    pub fn word(&self, k: usize) -> Vec<usize> {
        (1..=k).map(|t| self.reflection(t)).collect()
    }

    /// The same schedule with columns `a1` and `a2` exchanged in every row.
    pub fn with_swap(&self, a1: usize, a2: usize) -> Schedule {
        let mut s = self.clone();
        for row in &mut s.table {
            row.swap(a1 - 1, a2 - 1);
        }
        s.name = format!("{}-swap{a1}{a2}", self.name);
        s
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The type `A_n^(1)` schedule `i_a^(j) = k(1-j) - g + r mod n+1` with
/// `g = ⌊(a-1)/k'⌋`, `r = a-1-k'g`, `d = kk'`.
pub fn type_a_formula(n: usize, k: usize) -> Schedule {
    let modulus = (n + 1) as i64;
    let kp = n + 1 - k;
    let period = (n + 1) / gcd(k, n + 1);
    let table = (1..=period)
        .map(|j| {
            (1..=k * kp)
                .map(|a| {
                    let g = (a - 1) / kp;
                    let r = a - 1 - kp * g;
                    let v = k as i64 * (1 - j as i64) - g as i64 + r as i64;
                    v.rem_euclid(modulus) as usize
                })
                .collect()
        })
        .collect();
    Schedule::new(table, "formula").expect("formula table is rectangular")
}

/// The period-8 sequence `0,3,1,0,2,1,3,2` for `A_3^(1)`, `B^{2,1}`.
pub fn intro_schedule() -> Schedule {
    Schedule::new(vec![vec![0, 3, 1, 0], vec![2, 1, 3, 2]], "intro").expect("rectangular")
}

/// `e, 2, 3, …, n, …, 3, 2, e` of length `2n−1`.
fn palindrome_b(n: usize, end: usize) -> Vec<usize> {
    let mut row = vec![end];
    row.extend(2..=n);
    row.extend((2..n).rev());
    row.push(end);
    row
}

/// `e, m_2, …, m_{n-2}, p, q, m_{n-2}, …, m_2, e` of length `2n−2`.
fn palindrome_d(n: usize, end: usize, inner: impl Fn(usize) -> usize, pair: (usize, usize)) -> Vec<usize> {
    let mut row = vec![end];
    row.extend((2..=n - 2).map(&inner));
    row.push(pair.0);
    row.push(pair.1);
    row.extend((2..=n - 2).rev().map(&inner));
    row.push(end);
    row
}

/// Two rows indexed by the parity of `j`: `rows(j)` for `j = 1, 2`.
fn by_parity(rows: impl Fn(usize) -> Vec<usize>, name: &str) -> Schedule {
    Schedule::new(vec![rows(1), rows(2)], name).expect("rectangular")
}

/// Names of the schedule variants for `lΛ_i`.
pub fn variants(ty: AffineType, i: usize) -> Vec<&'static str> {
    let n = ty.rank();
    match (ty, i) {
        (AffineType::A1(3), 0) => vec!["formula", "intro"],
        (AffineType::A1(_), 0) => vec!["formula"],
        (AffineType::B1(_), 0 | 1) => vec!["default"],
        (AffineType::B1(_), j) if j == n => vec!["default", "alt"],
        (AffineType::D1(_), 0 | 1) => vec!["default", "alt"],
        (AffineType::D1(_), j) if j + 1 == n || j == n => vec!["default", "alt"],
        (AffineType::A2Odd(_), 0 | 1) => vec!["default"],
        (AffineType::A2Even(_), 0) => vec!["default"],
        (AffineType::D2(_) | AffineType::C1(_), 0) => vec!["default"],
        (AffineType::D2(_) | AffineType::C1(_), j) if j == n => vec!["default"],
        _ => vec![],
    }
}

/// Every `(i, variant)` for which a builtin schedule of `lΛ_i` exists.
pub fn configurations(ty: AffineType) -> Vec<(usize, &'static str)> {
    ty.indices()
        .flat_map(|i| variants(ty, i).into_iter().map(move |v| (i, v)))
        .collect()
}

/// The builtin schedule for `λ = lΛ_i`.
///
/// `column_height` is `k` of `B^{k,l}` and only matters for type `A`.
/// `variant` picks among the alternatives (`default`, `alt`, and for type
/// `A` `formula` or `intro`).
pub fn builtin(
    ty: AffineType,
    column_height: usize,
    lambda: &ClassicalWeight,
    variant: &str,
) -> Result<Schedule> {
    lambda.check_len(ty.index_count())?;
    let unsupported = || {
        CrystalError::UnsupportedWeight(format!(
            "no builtin schedule `{variant}` for {ty} and {lambda}"
        ))
    };
    let (i, _) = lambda.as_multiple_of_fundamental().ok_or_else(unsupported)?;
    if !variants(ty, i).contains(&variant) {
        return Err(unsupported());
    }
    let n = ty.rank();
    let alt = variant == "alt";
    let name = format!("{}-L{i}-{variant}", ty.tag());
    let sched = match (ty, i) {
        (AffineType::A1(_), 0) if variant == "intro" => {
            if column_height != 2 {
                return Err(unsupported());
            }
            intro_schedule()
        }
        (AffineType::A1(_), 0) => type_a_formula(n, column_height),
        (AffineType::B1(_) | AffineType::A2Odd(_), 0) => {
            by_parity(|j| palindrome_b(n, parity(j + 1)), &name)
        }
        (AffineType::B1(_) | AffineType::A2Odd(_), 1) => {
            by_parity(|j| palindrome_b(n, parity(j)), &name)
        }
        (AffineType::B1(_), _) => {
            let mut row: Vec<usize> = (2..=n).rev().collect();
            row.extend(if alt { [0, 1] } else { [1, 0] });
            row.extend(2..n);
            Schedule::new(vec![row], &name)?
        }
        (AffineType::D1(_), 0 | 1) => {
            let pair = if alt { (n, n - 1) } else { (n - 1, n) };
            let shift = usize::from(i == 0);
            by_parity(|j| palindrome_d(n, parity(j + shift), |a| a, pair), &name)
        }
        (AffineType::D1(_), _) => {
            let pair = if alt { (0, 1) } else { (1, 0) };
            let shift = usize::from(i == n);
            by_parity(|j| palindrome_d(n, n - parity(j + shift), |a| n - a, pair), &name)
        }
        (AffineType::A2Even(_) | AffineType::D2(_) | AffineType::C1(_), 0) => {
            let mut row: Vec<usize> = (0..=n).collect();
            row.extend((1..n).rev());
            Schedule::new(vec![row], &name)?
        }
        (AffineType::D2(_) | AffineType::C1(_), _) => {
            let mut row: Vec<usize> = (0..=n).rev().collect();
            row.extend(1..n);
            Schedule::new(vec![row], &name)?
        }
        _ => return Err(unsupported()),
    };
    let sched = Schedule { name, ..sched };
    sched.validate_for(ty)?;
    Ok(sched)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(len: usize, i: usize, l: i64) -> ClassicalWeight {
        ClassicalWeight::fundamental(len, i).scaled(l)
    }

    #[test]
    fn type_a_formula_rows() {
        let s = type_a_formula(3, 2);
        assert_eq!(s.d, 4);
        assert_eq!(s.period_in_j, 2);
        assert_eq!(s.row(4), &[2, 3, 1, 2]);
        assert_eq!(s.row(1), &[0, 1, 3, 0]);
    }

    #[test]
    fn intro_word() {
        let s = intro_schedule();
        assert_eq!(s.word(8), vec![0, 3, 1, 0, 2, 1, 3, 2]);
        assert_eq!(s.reflection(9), 0);
        assert_eq!(s.position(8), (2, 4));
        assert_eq!(s.position(0), (1, 0));
    }

    #[test]
    fn b1_rows() {
        let s = builtin(AffineType::B1(3), 0, &lam(4, 0, 1), "default").unwrap();
        assert_eq!(s.row(2), &[1, 2, 3, 2, 1]);
        assert_eq!(s.row(1), &[0, 2, 3, 2, 0]);
        let s1 = builtin(AffineType::B1(3), 0, &lam(4, 1, 1), "default").unwrap();
        assert_eq!(s1.row(1), &[1, 2, 3, 2, 1]);
        let sn = builtin(AffineType::B1(4), 0, &lam(5, 4, 1), "alt").unwrap();
        assert_eq!(sn.row(1), &[4, 3, 2, 0, 1, 2, 3]);
    }

    #[test]
    fn d1_rows() {
        let s = builtin(AffineType::D1(5), 0, &lam(6, 0, 1), "default").unwrap();
        assert_eq!(s.row(2), &[1, 2, 3, 4, 5, 3, 2, 1]);
        let s = builtin(AffineType::D1(5), 0, &lam(6, 4, 1), "alt").unwrap();
        assert_eq!(s.row(1), &[4, 3, 2, 0, 1, 2, 3, 4]);
        assert_eq!(s.row(2), &[5, 3, 2, 0, 1, 2, 3, 5]);
        let s = builtin(AffineType::D1(5), 0, &lam(6, 5, 1), "default").unwrap();
        assert_eq!(s.row(1), &[5, 3, 2, 1, 0, 2, 3, 5]);
    }

    #[test]
    fn twisted_and_c_rows() {
        let s = builtin(AffineType::A2Even(2), 0, &lam(3, 0, 1), "default").unwrap();
        assert_eq!(s.row(7), &[0, 1, 2, 1]);
        let s = builtin(AffineType::C1(3), 0, &lam(4, 3, 2), "default").unwrap();
        assert_eq!(s.row(1), &[3, 2, 1, 0, 1, 2]);
    }

    #[test]
    fn unsupported_and_json() {
        assert!(builtin(AffineType::A2Even(2), 0, &lam(3, 1, 1), "default").is_err());
        let s = intro_schedule();
        let text = s.to_json().to_string();
        assert_eq!(text, r#"{"d":4,"period_in_j":2,"table":[[0,3,1,0],[2,1,3,2]]}"#);
        assert_eq!(Schedule::from_json(&text).unwrap().table, s.table);
        assert!(Schedule::from_json(r#"{"d":2,"period_in_j":1,"table":[[0]]}"#).is_err());
        assert!(s.validate_for(AffineType::A1(2)).is_err());
    }
}
