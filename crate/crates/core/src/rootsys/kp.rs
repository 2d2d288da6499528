use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{ConvexOrder, Root, RootSystem};
use crate::error::{Error, Result};

/// Multiplicities `m(alpha_k)` indexed by position in a convex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KpVector(pub Vec<u32>);

impl KpVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = vec![0; n];
        v[k] = 1;
        Self(v)
    }

    /// `|m| = sum m_k alpha_k`.
    pub fn weight(&self, order: &ConvexOrder) -> Vec<i64> {
        let r = order.roots().first().map_or(0, Vec::len);
        let mut w = vec![0; r];
        for (m, a) in self.0.iter().zip(order.roots()) {
            for (x, y) in w.iter_mut().zip(a) {
                *x += *m as i64 * y;
            }
        }
        w
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &m)| m > 0).map(|(k, _)| k)
    }

    /// The order `<=`: compare at the largest index where the vectors differ.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return a.cmp(b);
            }
        }
        Ordering::Equal
    }

    /// The order `<='`: compare at the smallest index where the vectors differ.
    pub fn cmp_lex_prime(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            if a != b {
                return a.cmp(b);
            }
        }
        Ordering::Equal
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        parts.join(",")
    }
}

/// Number of multisets of positive roots summing to `nu`.
pub fn kostant_partition(rs: &RootSystem, nu: &[i64]) -> u64 {
    if nu.iter().any(|&x| x < 0) {
        return 0;
    }
    fn go(roots: &[Root], k: usize, nu: &mut Vec<i64>) -> u64 {
        if nu.iter().all(|&x| x == 0) {
            return 1;
        }
        if k == roots.len() {
            return 0;
        }
        let mut total = go(roots, k + 1, nu);
        let a = &roots[k];
        let mut used = 0;
        while nu.iter().zip(a).all(|(x, y)| x >= y) {
            for (x, y) in nu.iter_mut().zip(a) {
                *x -= y;
            }
            used += 1;
            total += go(roots, k + 1, nu);
        }
        for (x, y) in nu.iter_mut().zip(a) {
            *x += used * y;
        }
        total
    }
    go(rs.positive_roots(), 0, &mut nu.to_vec())
}

/// All Kostant partitions of `nu` as vectors over the given order, sorted.
pub fn kp_vectors(order: &ConvexOrder, nu: &[i64]) -> Vec<KpVector> {
    fn go(roots: &[Root], k: usize, nu: &mut Vec<i64>, cur: &mut Vec<u32>, out: &mut Vec<KpVector>) {
        if k == roots.len() {
            if nu.iter().all(|&x| x == 0) {
                out.push(KpVector(cur.clone()));
            }
            return;
        }
        let a = &roots[k];
        let mut m = 0;
        loop {
            cur.push(m);
            go(roots, k + 1, nu, cur, out);
            cur.pop();
            if !nu.iter().zip(a).all(|(x, y)| x >= y) {
                break;
            }
            for (x, y) in nu.iter_mut().zip(a) {
                *x -= y;
            }
            m += 1;
        }
        for (x, y) in nu.iter_mut().zip(a) {
            *x += m as i64 * y;
        }
    }
    let mut out = Vec::new();
    if nu.iter().all(|&x| x >= 0) {
        go(order.roots(), 0, &mut nu.to_vec(), &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// Is `nu` a sum of roots drawn from `allowed`?
pub fn is_sum_of(allowed: &[Root], nu: &[i64]) -> bool {
    fn go(allowed: &[Root], k: usize, nu: &mut Vec<i64>) -> bool {
        if nu.iter().all(|&x| x == 0) {
            return true;
        }
        if k == allowed.len() {
            return false;
        }
        let a = &allowed[k];
        let mut used = 0;
        let mut found = go(allowed, k + 1, nu);
        while !found && nu.iter().zip(a).all(|(x, y)| x >= y) {
            for (x, y) in nu.iter_mut().zip(a) {
                *x -= y;
            }
            used += 1;
            found = go(allowed, k + 1, nu);
        }
        for (x, y) in nu.iter_mut().zip(a) {
            *x += used * y;
        }
        found
    }
    nu.iter().all(|&x| x >= 0) && go(allowed, 0, &mut nu.to_vec())
}

/// Given positive roots `deltas` summing to the root `alpha`, finds a
/// nonempty proper subset `S` (0-based indices) such that both partial sums
/// are roots.
pub fn root_sum_split(rs: &RootSystem, alpha: &[i64], deltas: &[Root]) -> Result<Vec<usize>> {
    let n = deltas.len();
    if n < 2 || n > 20 {
        return Err(Error::Domain(format!("need between 2 and 20 summands, got {n}")));
    }
    let total = sum(deltas.iter());
    if total != alpha || !rs.is_positive_root(alpha) || !deltas.iter().all(|d| rs.is_positive_root(d)) {
        return Err(Error::Domain("summands must be positive roots adding to a positive root".into()));
    }
    for mask in 1u32..(1 << n) - 1 {
        // fix the last summand outside S so each split is visited once
        if mask & (1 << (n - 1)) != 0 {
            continue;
        }
        let s = sum(deltas.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, d)| d));
        let rest: Vec<i64> = alpha.iter().zip(&s).map(|(a, b)| a - b).collect();
        if rs.is_positive_root(&s) && rs.is_positive_root(&rest) {
            return Ok((0..n).filter(|k| mask & (1 << k) != 0).collect());
        }
    }
    Err(Error::Invariant(format!("no root split for {deltas:?}")))
}

fn sum<'a>(it: impl Iterator<Item = &'a Root>) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::new();
    for d in it {
        if out.is_empty() {
            out = vec![0; d.len()];
        }
        for (x, y) in out.iter_mut().zip(d) {
            *x += y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kostant_examples() {
        let rs = RootSystem::named("A2").unwrap();
        assert_eq!(kostant_partition(&rs, &[1, 0]), 1);
        assert_eq!(kostant_partition(&rs, &[1, 1]), 2);
        assert_eq!(kostant_partition(&rs, &[0, 0]), 1);
        assert_eq!(kostant_partition(&rs, &[-1, 2]), 0);
        let b2 = RootSystem::named("B2").unwrap();
        // 2a0+a1: {001}, {01,0}, {0,0,1}
        assert_eq!(kostant_partition(&b2, &[2, 1]), 3);
    }

    #[test]
    fn kp_vector_orders() {
        let m = KpVector(vec![1, 0, 1]);
        let n = KpVector(vec![0, 1, 0]);
        assert_eq!(n.cmp_lex(&m), Ordering::Less);
        assert_eq!(n.cmp_lex_prime(&m), Ordering::Less);
        let a = KpVector(vec![2, 0, 0, 1]);
        let b = KpVector(vec![0, 3, 1, 0]);
        assert_eq!(a.cmp_lex(&b), Ordering::Greater);
        assert_eq!(a.cmp_lex_prime(&b), Ordering::Greater);
    }

    #[test]
    fn root_sum_split_examples() {
        let rs = RootSystem::named("A2").unwrap();
        assert_eq!(root_sum_split(&rs, &[1, 1], &[vec![1, 0], vec![0, 1]]).unwrap(), vec![0]);
        let b2 = RootSystem::named("B2").unwrap();
        let deltas = vec![vec![1, 0], vec![0, 1], vec![1, 0]];
        let s = root_sum_split(&b2, &[2, 1], &deltas).unwrap();
        assert!(!s.is_empty() && s.len() < 3);
    }

    #[test]
    fn root_sum_split_exhaustive_rank_three() {
        for n in ["A3", "B3", "C3"] {
            let rs = RootSystem::named(n).unwrap();
            let order = ConvexOrder::from_reduced_word(&rs, &rs.default_reduced_word()).unwrap();
            for alpha in rs.positive_roots() {
                for m in kp_vectors(&order, alpha) {
                    let deltas: Vec<Root> = m
                        .support()
                        .flat_map(|k| std::iter::repeat(order.roots()[k].clone()).take(m.0[k] as usize))
                        .collect();
                    if deltas.len() >= 2 {
                        root_sum_split(&rs, alpha, &deltas).unwrap();
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn kostant_matches_enumeration(a in 0i64..4, b in 0i64..4, c in 0i64..3) {
            let rs = RootSystem::named("B3").unwrap();
            let order = ConvexOrder::from_reduced_word(&rs, &rs.default_reduced_word()).unwrap();
            let nu = vec![a, b, c];
            let vs = kp_vectors(&order, &nu);
            prop_assert_eq!(vs.len() as u64, kostant_partition(&rs, &nu));
            for v in &vs {
                prop_assert_eq!(v.weight(&order), nu.clone());
            }
        }

        #[test]
        fn lex_orders_total(x in prop::collection::vec(0u32..3, 4), y in prop::collection::vec(0u32..3, 4)) {
            let (x, y) = (KpVector(x), KpVector(y));
            prop_assert_eq!(x.cmp_lex(&y), y.cmp_lex(&x).reverse());
            prop_assert_eq!(x.cmp_lex_prime(&y) == Ordering::Equal, x == y);
        }
    }
}
