//! Exact Gaussian elimination over the fields used in the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::qarith::RatFunc;

/// The operations elimination needs.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
}

impl Field for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
    fn one_like(&self) -> Self {
        RatFunc::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Field for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
}

/// An element of `F_p`, carrying its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    pub value: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(x: i128, p: u64) -> Self {
        Self { value: x.rem_euclid(p as i128) as u64, p }
    }

    pub fn from_rational(x: &BigRational, p: u64) -> Option<Self> {
        let pb = BigInt::from(p);
        let n = x.numer().mod_floor(&pb);
        let d = x.denom().mod_floor(&pb);
        if d.is_zero() {
            return None;
        }
        let n: u64 = n.try_into().ok()?;
        let d: u64 = d.try_into().ok()?;
        Some(Self { value: n, p }.div(&Self { value: d, p }))
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.value as u128;
        let mut acc: u128 = 1;
        let p = self.p as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Self { value: acc as u64, p: self.p }
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Self { value: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Self { value: 1 % self.p, p: self.p }
    }
    fn is_zero_elem(&self) -> bool {
        self.value == 0
    }
    fn add(&self, o: &Self) -> Self {
        Self { value: ((self.value as u128 + o.value as u128) % self.p as u128) as u64, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Self { value: ((self.value as u128 + self.p as u128 - o.value as u128) % self.p as u128) as u64, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Self { value: ((self.value as u128 * o.value as u128) % self.p as u128) as u64, p: self.p }
    }
    fn div(&self, o: &Self) -> Self {
        assert!(o.value != 0, "division by zero in F_p");
        self.mul(&o.pow(self.p - 2))
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero_elem()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].one_like().div(&m[r][c]);
        for x in m[r].iter_mut() {
            if !x.is_zero_elem() {
                *x = x.mul(&inv);
            }
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero_elem() {
                let f = m[i][c].clone();
                for j in c..cols {
                    if !m[r][j].is_zero_elem() {
                        let t = f.mul(&m[r][j]);
                        m[i][j] = m[i][j].sub(&t);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// A solution of `a x = b` with free variables set to zero, or `None` if the
/// system is inconsistent.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F], zero: &F) -> Option<Vec<F>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut row = row.clone();
            row.push(x.clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![zero.zero_like(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// A basis of `{x : a x = 0}`.
pub fn nullspace<F: Field>(a: &[Vec<F>], cols: usize, zero: &F) -> Vec<Vec<F>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.zero_like(); cols];
        v[free] = zero.one_like();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = zero.zero_like().sub(&m[r][free]);
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::LaurentPoly;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rational_solve_and_nullspace() {
        let a = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]];
        assert_eq!(rank(&a), 2);
        let x = solve(&a, &[q(6), q(12), q(2)], &q(0)).unwrap();
        let lhs: Vec<BigRational> = a.iter().map(|r| r.iter().zip(&x).map(|(u, v)| u * v).sum()).collect();
        assert_eq!(lhs, vec![q(6), q(12), q(2)]);
        assert!(solve(&a, &[q(1), q(1), q(1)], &q(0)).is_none());
        let ns = nullspace(&a, 3, &q(0));
        assert_eq!(ns.len(), 1);
        for row in &a {
            let s: BigRational = row.iter().zip(&ns[0]).map(|(u, v)| u * v).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn ratfunc_solve() {
        let p = |s: &str| RatFunc::from_poly(s.parse::<LaurentPoly>().unwrap());
        let a = vec![vec![p("1"), p("q")], vec![p("q"), p("1")]];
        let x = solve(&a, &[p("1"), p("0")], &RatFunc::zero()).unwrap();
        assert_eq!(&(&a[0][0] * &x[0]) + &(&a[0][1] * &x[1]), p("1"));
        assert_eq!(&(&a[1][0] * &x[0]) + &(&a[1][1] * &x[1]), p("0"));
    }

    #[test]
    fn prime_field() {
        let a = Fp::new(3, 7);
        assert_eq!(a.div(&a).value, 1);
        assert_eq!(Fp::from_rational(&BigRational::new(1.into(), 2.into()), 7).unwrap().value, 4);
        let m = vec![vec![Fp::new(1, 2), Fp::new(1, 2)], vec![Fp::new(1, 2), Fp::new(1, 2)]];
        assert_eq!(rank(&m), 1);
    }
}
