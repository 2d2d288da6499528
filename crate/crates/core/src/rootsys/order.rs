use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use super::{Root, RootSystem};
use crate::error::{Error, Result};

/// A total order `alpha_1 < ... < alpha_N` on the positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexOrder {
    roots: Vec<Root>,
    #[serde(skip)]
    pos: HashMap<Root, usize>,
}

impl ConvexOrder {
    /// Wraps a list of roots without checking convexity.
    pub fn from_roots(rs: &RootSystem, roots: Vec<Root>) -> Result<Self> {
        if roots.len() != rs.num_positive() {
            return Err(Error::Domain(format!("order has {} roots, expected {}", roots.len(), rs.num_positive())));
        }
        let mut pos = HashMap::new();
        for (k, r) in roots.iter().enumerate() {
            if !rs.is_positive_root(r) {
                return Err(Error::Domain(format!("{r:?} is not a positive root")));
            }
            if pos.insert(r.clone(), k).is_some() {
                return Err(Error::Domain(format!("{r:?} repeated")));
            }
        }
        Ok(Self { roots, pos })
    }

    /// `alpha_j = s_{i_N} ... s_{i_{j+1}} alpha_{i_j}`.
    pub fn from_reduced_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        rs.validate_reduced_word(word)?;
        let c = rs.cartan();
        let n = word.len();
        let mut roots = vec![Vec::new(); n];
        for j in 0..n {
            let mut v = c.simple(word[j]);
            for &i in &word[j + 1..] {
                v = c.reflect(i, &v);
            }
            roots[j] = v;
        }
        Self::from_roots(rs, roots)
    }

    /// Recovers the reduced word: the largest root is `alpha_{i_N}`; reflect
    /// the rest by `s_{i_N}` and repeat.
    pub fn reduced_word(&self, rs: &RootSystem) -> Result<Vec<usize>> {
        let c = rs.cartan();
        let mut rest = self.roots.clone();
        let mut word = Vec::with_capacity(rest.len());
        while let Some(top) = rest.pop() {
            let i =
                rs.simple_index(&top).ok_or_else(|| Error::Domain("order does not come from a reduced word".into()))?;
            word.push(i);
            rest = rest.iter().map(|v| c.reflect(i, v)).collect();
        }
        word.reverse();
        if Self::from_reduced_word(rs, &word)?.roots != self.roots {
            return Err(Error::Domain("order does not come from a reduced word".into()));
        }
        Ok(word)
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn position(&self, r: &[i64]) -> Option<usize> {
        self.pos.get(r).copied()
    }

    fn pos_of(&self, r: &[i64]) -> usize {
        self.position(r).unwrap_or_else(|| panic!("{r:?} is not a positive root"))
    }

    pub fn cmp_roots(&self, a: &[i64], b: &[i64]) -> Ordering {
        self.pos_of(a).cmp(&self.pos_of(b))
    }

    /// All `(beta, gamma)` with `beta + gamma = alpha` and
    /// `beta < alpha < gamma`.
    pub fn decompositions(&self, alpha: &[i64]) -> Vec<(Root, Root)> {
        let pa = self.pos_of(alpha);
        let mut out = Vec::new();
        for b in &self.roots[..pa] {
            let g: Vec<i64> = alpha.iter().zip(b).map(|(x, y)| x - y).collect();
            if let Some(pg) = self.position(&g) {
                if pg > pa {
                    out.push((b.clone(), g));
                }
            }
        }
        out
    }

    /// Minimal pairs for `alpha`, sorted with `gamma` increasing in the
    /// order. The first entry is the pair used by the cuspidal recursion.
    pub fn minimal_pairs(&self, rs: &RootSystem, alpha: &[i64]) -> Result<Vec<(Root, Root)>> {
        if rs.is_simple(alpha) {
            return Err(Error::Domain(format!("{alpha:?} is simple")));
        }
        if !rs.is_positive_root(alpha) {
            return Err(Error::Domain(format!("{alpha:?} is not a positive root")));
        }
        let all = self.decompositions(alpha);
        let mut out: Vec<(Root, Root)> = all
            .iter()
            .filter(|(b, g)| {
                let (pb, pg) = (self.pos_of(b), self.pos_of(g));
                !all.iter().any(|(b2, g2)| {
                    let (pb2, pg2) = (self.pos_of(b2), self.pos_of(g2));
                    pb < pb2 && pg2 < pg
                })
            })
            .cloned()
            .collect();
        out.sort_by_key(|(_, g)| self.pos_of(g));
        Ok(out)
    }

    /// For every `alpha = beta + gamma` with all three positive roots,
    /// `alpha` lies strictly between `beta` and `gamma`.
    pub fn is_convex(&self, rs: &RootSystem) -> bool {
        is_convex(rs, &self.roots).unwrap_or(false)
    }
}

/// The pairwise-sum convexity criterion on an ordered list of roots.
pub fn is_convex(rs: &RootSystem, order: &[Root]) -> Result<bool> {
    let o = ConvexOrder::from_roots(rs, order.to_vec())?;
    for (pb, b) in order.iter().enumerate() {
        for (pg, g) in order.iter().enumerate().skip(pb + 1) {
            let s: Vec<i64> = b.iter().zip(g).map(|(x, y)| x + y).collect();
            if let Some(pa) = o.position(&s) {
                if !(pb < pa && pa < pg) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_order_from_word() {
        let rs = RootSystem::named("A2").unwrap();
        let o = ConvexOrder::from_reduced_word(&rs, &[0, 1, 0]).unwrap();
        assert_eq!(o.roots(), &[vec![0, 1], vec![1, 1], vec![1, 0]]);
        assert!(o.is_convex(&rs));
        assert_eq!(o.reduced_word(&rs).unwrap(), vec![0, 1, 0]);
        let mp = o.minimal_pairs(&rs, &[1, 1]).unwrap();
        assert_eq!(mp, vec![(vec![0, 1], vec![1, 0])]);
        assert!(o.minimal_pairs(&rs, &[1, 0]).is_err());
    }

    #[test]
    fn rank_one() {
        let rs = RootSystem::named("A1").unwrap();
        let o = ConvexOrder::from_reduced_word(&rs, &[0]).unwrap();
        assert_eq!(o.roots(), &[vec![1]]);
        assert!(o.is_convex(&rs));
    }

    #[test]
    fn non_convex_list() {
        let rs = RootSystem::named("A2").unwrap();
        assert!(!is_convex(&rs, &[vec![1, 1], vec![1, 0], vec![0, 1]]).unwrap());
        assert!(is_convex(&rs, &[vec![1, 1], vec![1, 0]]).is_err());
    }

    #[test]
    fn all_orders_small_types_convex() {
        for n in ["A2", "B2", "G2", "A3", "B3", "C3"] {
            let rs = RootSystem::named(n).unwrap();
            for w in rs.reduced_words(usize::MAX) {
                let o = ConvexOrder::from_reduced_word(&rs, &w).unwrap();
                assert!(o.is_convex(&rs), "{n} {w:?}");
                assert_eq!(o.reduced_word(&rs).unwrap(), w);
                for a in rs.positive_roots().iter().filter(|a| !rs.is_simple(a)) {
                    assert!(!o.minimal_pairs(&rs, a).unwrap().is_empty());
                }
            }
        }
    }
}
