//! The nilpotent Lie algebra `n` spanned by positive root vectors.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// Structure constants `[X_a, X_b] = c X_{a+b}` on the positive roots of a
/// root system, indexed as in [`RootSystem::positive_roots`].
#[derive(Clone, Debug)]
pub struct NilpotentAlgebra {
    rs: RootSystem,
    bracket: Vec<Vec<Option<(usize, i64)>>>,
}

impl NilpotentAlgebra {
    /// Simply-laced case: `[e_a, e_b] = eps(a, b) e_{a+b}` with the bilinear
    /// sign `eps(a_i, a_j) = -1` for `i = j` and for oriented edges `i -> j`,
    /// where `i -> j` when `key[i] < key[j]`.
    pub fn simply_laced(rs: RootSystem, key: &[i64]) -> Result<Self> {
        let c = rs.cartan().clone();
        let r = c.rank();
        if !c.is_simply_laced() {
            return Err(Error::Cartan("sign construction needs a simply-laced datum".into()));
        }
        let mut minus = vec![vec![false; r]; r];
        for i in 0..r {
            minus[i][i] = true;
            for j in 0..r {
                if i != j && c.dot(i, j) != 0 {
                    if key[i] == key[j] {
                        return Err(Error::Cartan(format!("adjacent vertices {i}, {j} share an orientation key")));
                    }
                    minus[i][j] = key[i] < key[j];
                }
            }
        }
        let eps = |a: &Root, b: &Root| -> i64 {
            let mut s = 0;
            for i in 0..r {
                for j in 0..r {
                    if minus[i][j] {
                        s += a[i] * b[j];
                    }
                }
            }
            if s % 2 == 0 {
                1
            } else {
                -1
            }
        };
        let roots = rs.positive_roots().to_vec();
        let n = roots.len();
        let mut bracket = vec![vec![None; n]; n];
        for a in 0..n {
            for b in 0..n {
                let s: Root = roots[a].iter().zip(&roots[b]).map(|(x, y)| x + y).collect();
                if let Some(k) = rs.root_index(&s) {
                    bracket[a][b] = Some((k, eps(&roots[a], &roots[b])));
                }
            }
        }
        Ok(NilpotentAlgebra { rs, bracket })
    }

    pub fn from_table(rs: RootSystem, bracket: Vec<Vec<Option<(usize, i64)>>>) -> Self {
        NilpotentAlgebra { rs, bracket }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.bracket.len()
    }

    pub fn bracket(&self, a: usize, b: usize) -> Option<(usize, i64)> {
        self.bracket[a][b]
    }

    /// `[x, y]` for vectors in the root-vector basis.
    pub fn bracket_vec(&self, x: &BTreeMap<usize, i64>, y: &BTreeMap<usize, i64>) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (&a, &u) in x {
            for (&b, &v) in y {
                if let Some((k, c)) = self.bracket[a][b] {
                    *out.entry(k).or_insert(0) += c * u * v;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Matrix of `ad X_a` acting on `n`; column `b` is `[X_a, X_b]`.
    pub fn adjoint(&self, a: usize) -> Vec<Vec<i64>> {
        let n = self.dim();
        let mut m = vec![vec![0; n]; n];
        for b in 0..n {
            if let Some((k, c)) = self.bracket[a][b] {
                m[k][b] = c;
            }
        }
        m
    }

    /// Antisymmetry and the Jacobi identity on all basis triples.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        let unit = |a: usize| BTreeMap::from([(a, 1i64)]);
        for a in 0..n {
            if self.bracket[a][a].is_some() {
                return Err(Error::Invariant(format!("[X_{a}, X_{a}] != 0")));
            }
            for b in 0..n {
                let ab = self.bracket[a][b];
                let ba = self.bracket[b][a].map(|(k, c)| (k, -c));
                if ab != ba {
                    return Err(Error::Invariant(format!("bracket of {a}, {b} is not antisymmetric")));
                }
                for c in 0..n {
                    let mut sum = BTreeMap::new();
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        let t = self.bracket_vec(&unit(x), &self.bracket_vec(&unit(y), &unit(z)));
                        for (k, v) in t {
                            *sum.entry(k).or_insert(0) += v;
                        }
                    }
                    if sum.values().any(|&v| v != 0) {
                        return Err(Error::Invariant(format!("Jacobi fails on {a}, {b}, {c}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Index of the simple root `i`.
    pub fn simple(&self, i: usize) -> usize {
        self.rs.root_index(&self.rs.cartan().simple(i)).unwrap()
    }
}

/// Expansion of a product of root vectors in the ordered basis
/// `X_{a_1}^{m_1} ... X_{a_N}^{m_N}` (positions increasing).
pub struct PbwStraightener<'a> {
    alg: &'a NilpotentAlgebra,
    pos: Vec<usize>,
    memo: HashMap<Vec<usize>, BTreeMap<Vec<usize>, i64>>,
}

impl<'a> PbwStraightener<'a> {
    /// `order` lists root indices from first to last.
    pub fn new(alg: &'a NilpotentAlgebra, order: &[usize]) -> Self {
        let mut pos = vec![0; order.len()];
        for (p, &k) in order.iter().enumerate() {
            pos[k] = p;
        }
        PbwStraightener { alg, pos, memo: HashMap::new() }
    }

    pub fn expand(&mut self, word: &[usize]) -> BTreeMap<Vec<usize>, i64> {
        if let Some(e) = self.memo.get(word) {
            return e.clone();
        }
        let out = match (0..word.len().saturating_sub(1)).find(|&i| self.pos[word[i]] > self.pos[word[i + 1]]) {
            None => BTreeMap::from([(word.to_vec(), 1)]),
            Some(i) => {
                let mut swapped = word.to_vec();
                swapped.swap(i, i + 1);
                let mut out = self.expand(&swapped);
                if let Some((k, c)) = self.alg.bracket(word[i], word[i + 1]) {
                    let mut shorter = word[..i].to_vec();
                    shorter.push(k);
                    shorter.extend(&word[i + 2..]);
                    for (m, v) in self.expand(&shorter) {
                        *out.entry(m).or_insert(0) += c * v;
                    }
                    out.retain(|_, v| *v != 0);
                }
                out
            }
        };
        self.memo.insert(word.to_vec(), out.clone());
        out
    }
}
