use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A symmetric Cartan datum on `I = {0, ..., r-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanDatum {
    name: Option<String>,
    pairing: Vec<Vec<i64>>,
}

impl CartanDatum {
    /// Validates the pairing matrix: symmetric, positive even diagonal,
    /// non-positive off-diagonal entries with integral `a_ij`, and positive
    /// definite.
    pub fn new(pairing: Vec<Vec<i64>>) -> Result<Self> {
        let r = pairing.len();
        if r == 0 {
            return Err(Error::Cartan("empty index set".into()));
        }
        for (i, row) in pairing.iter().enumerate() {
            if row.len() != r {
                return Err(Error::Cartan(format!("row {i} has length {}, expected {r}", row.len())));
            }
            let d = row[i];
            if d <= 0 || d % 2 != 0 {
                return Err(Error::Cartan(format!("{i}.{i} = {d} is not positive even")));
            }
            for (j, &x) in row.iter().enumerate() {
                if x != pairing[j][i] {
                    return Err(Error::Cartan(format!("pairing not symmetric at ({i},{j})")));
                }
                if i != j {
                    if x > 0 {
                        return Err(Error::Cartan(format!("{i}.{j} = {x} is positive")));
                    }
                    if (2 * x) % d != 0 {
                        return Err(Error::Cartan(format!("a_{i}{j} = 2*{x}/{d} is not an integer")));
                    }
                }
            }
        }
        if !positive_definite(&pairing) {
            return Err(Error::Cartan("pairing is not positive definite".into()));
        }
        Ok(Self { name: None, pairing })
    }

    /// Built-in types with the vertex labeling used throughout: `A_n` and
    /// `D_n` chains, `B_r` with short vertex 0, `C_r` with long vertex 0,
    /// `F4` with short vertices 0 and 1, `G2` with short vertex 0, `E6..E8`.
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::Cartan(format!("unknown type `{name}`"));
        let mut chars = name.trim().chars();
        let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let r: usize = chars.as_str().parse().map_err(|_| bad())?;
        let m = match (family, r) {
            ('A', r) if r >= 1 => chain(r, |_| 2, |_| -1),
            ('B', r) if r >= 2 => chain(r, |i| if i == 0 { 2 } else { 4 }, |_| -2),
            ('C', r) if r >= 2 => chain(r, |i| if i == 0 { 4 } else { 2 }, |i| if i == 0 { -2 } else { -1 }),
            ('D', r) if r >= 4 => {
                // chain 0 - 1 - ... - (r-2) with r-1 attached to r-3
                let mut m = chain(r - 1, |_| 2, |_| -1);
                for row in m.iter_mut() {
                    row.push(0);
                }
                m.push(vec![0; r]);
                m[r - 1][r - 1] = 2;
                m[r - 1][r - 3] = -1;
                m[r - 3][r - 1] = -1;
                m
            }
            ('E', r) if (6..=8).contains(&r) => {
                // chain 0 - 1 - ... - (r-2) with r-1 attached to 2
                let mut m = chain(r - 1, |_| 2, |_| -1);
                for row in m.iter_mut() {
                    row.push(0);
                }
                m.push(vec![0; r]);
                m[r - 1][r - 1] = 2;
                m[r - 1][2] = -1;
                m[2][r - 1] = -1;
                m
            }
            ('F', 4) => chain(4, |i| if i < 2 { 2 } else { 4 }, |i| if i == 0 { -1 } else { -2 }),
            ('G', 2) => vec![vec![2, -3], vec![-3, 6]],
            _ => return Err(bad()),
        };
        let mut c = Self::new(m)?;
        c.name = Some(format!("{family}{r}"));
        Ok(c)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.pairing.len()
    }

    pub fn pairing(&self) -> &[Vec<i64>] {
        &self.pairing
    }

    /// `i . j`
    pub fn dot(&self, i: usize, j: usize) -> i64 {
        self.pairing[i][j]
    }

    /// `a_ij = 2 (i.j) / (i.i)`
    pub fn a(&self, i: usize, j: usize) -> i64 {
        2 * self.pairing[i][j] / self.pairing[i][i]
    }

    /// The bilinear form extended to `Z I`.
    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                s += xi * yj * self.pairing[i][j];
            }
        }
        s
    }

    /// Simple reflection `s_i` acting on `Z I`.
    pub fn reflect(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let c = 2 * self.pair(v, &self.simple(i)) / self.pairing[i][i];
        let mut out = v.to_vec();
        out[i] -= c;
        out
    }

    pub fn simple(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    pub fn is_simply_laced(&self) -> bool {
        (0..self.rank()).all(|i| self.pairing[i][i] == 2)
    }
}

impl FromStr for CartanDatum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::named(s)
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{:?}", self.pairing),
        }
    }
}

fn chain(r: usize, diag: impl Fn(usize) -> i64, edge: impl Fn(usize) -> i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; r]; r];
    for i in 0..r {
        m[i][i] = diag(i);
        if i + 1 < r {
            m[i][i + 1] = edge(i);
            m[i + 1][i] = edge(i);
        }
    }
    m
}

/// Sylvester's criterion on leading principal minors, via exact elimination.
fn positive_definite(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_types_validate() {
        for n in ["A1", "A2", "A3", "A5", "B2", "B3", "C2", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let c = CartanDatum::named(n).unwrap();
            assert_eq!(c.name(), Some(n));
        }
        assert!(CartanDatum::named("H3").is_err());
        assert!(CartanDatum::named("B1").is_err());
    }

    #[test]
    fn rejects_bad_data() {
        assert!(CartanDatum::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanDatum::new(vec![vec![2, -2], vec![-2, 2]]).is_err());
        assert!(CartanDatum::new(vec![vec![3]]).is_err());
        assert!(CartanDatum::new(vec![vec![2, -1], vec![-2, 2]]).is_err());
        assert!(CartanDatum::new(vec![vec![4, -1], vec![-1, 2]]).is_err());
    }

    #[test]
    fn labelings() {
        let b = CartanDatum::named("B3").unwrap();
        assert_eq!((b.dot(0, 0), b.dot(1, 1), b.dot(0, 1), b.a(1, 0), b.a(0, 1)), (2, 4, -2, -1, -2));
        let c = CartanDatum::named("C3").unwrap();
        assert_eq!((c.dot(0, 0), c.dot(1, 1), c.a(0, 1), c.a(1, 0)), (4, 2, -1, -2));
        let f = CartanDatum::named("F4").unwrap();
        assert_eq!((f.dot(0, 1), f.dot(1, 2), f.dot(2, 3)), (-1, -2, -2));
        let g = CartanDatum::named("G2").unwrap();
        assert_eq!((g.a(0, 1), g.a(1, 0)), (-3, -1));
    }

    #[test]
    fn reflections_are_involutions() {
        let g = CartanDatum::named("G2").unwrap();
        let v = vec![3, 2];
        for i in 0..2 {
            assert_eq!(g.reflect(i, &g.reflect(i, &v)), v);
        }
        assert_eq!(g.reflect(0, &g.simple(1)), vec![3, 1]);
    }
}
