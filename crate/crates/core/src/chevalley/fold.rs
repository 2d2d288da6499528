//! Folding a non-simply-laced datum out of a simply-laced one with a
//! diagram automorphism.

use std::collections::BTreeMap;

use serde::Serialize;

use super::lie::NilpotentAlgebra;
use crate::error::{Error, Result};
use crate::rootsys::{CartanDatum, Root, RootSystem};

/// `(ambient, sigma, orbit map, orientation key)` for a datum of type B, C,
/// F or G. The folded Lie algebra is the sigma-fixed part of the ambient one
/// with `e_o = sum_{i in o} e_i`.
#[derive(Clone, Debug, Serialize)]
pub struct FoldedDatum {
    #[serde(skip)]
    pub ambient: CartanDatum,
    #[serde(skip)]
    pub folded: CartanDatum,
    pub ambient_pairing: Vec<Vec<i64>>,
    pub sigma: Vec<usize>,
    pub orbit_of: Vec<usize>,
    /// edges point from smaller to larger key; constant on orbits
    pub key: Vec<i64>,
}

fn chain_with(n: usize, extra: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
    }
    let mut edge = |a: usize, b: usize| {
        m[a][b] = -1;
        m[b][a] = -1;
    };
    for &(a, b) in extra {
        edge(a, b);
    }
    m
}

pub fn fold(c: &CartanDatum) -> Result<FoldedDatum> {
    let name = c.name().ok_or_else(|| Error::Cartan("folding needs a named type".into()))?;
    let (letter, rank) = name.split_at(1);
    let r: usize = rank.parse().map_err(|_| Error::Cartan(format!("bad type name {name}")))?;
    let (pairing, sigma, orbit_of, key): (Vec<Vec<i64>>, Vec<usize>, Vec<usize>, Vec<i64>) = match letter {
        "B" => {
            // D_{r+1}: chain 0..r-1, node r attached to r-2; fork {r-1, r}
            let n = r + 1;
            let mut edges: Vec<(usize, usize)> = (0..r - 1).map(|i| (i, i + 1)).collect();
            edges.push((r - 2, r));
            let mut sigma: Vec<usize> = (0..n).collect();
            sigma.swap(r - 1, r);
            let orbit_of = (0..n).map(|i| (r - 1).saturating_sub(i)).collect();
            let key = (0..n).map(|i| i.min(r - 1) as i64).collect();
            (chain_with(n, &edges), sigma, orbit_of, key)
        }
        "C" => {
            // A_{2r-1} reversed about the middle vertex
            let n = 2 * r - 1;
            let m = r - 1;
            let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let sigma = (0..n).map(|i| n - 1 - i).collect();
            let orbit_of = (0..n).map(|i| i.abs_diff(m)).collect();
            let key = (0..n).map(|i| -(i.abs_diff(m) as i64)).collect();
            (chain_with(n, &edges), sigma, orbit_of, key)
        }
        "F" if r == 4 => {
            // E6: chain 0..4, node 5 attached to 2
            let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)];
            let sigma = vec![4, 3, 2, 1, 0, 5];
            let orbit_of = vec![0, 1, 2, 1, 0, 3];
            let key = vec![-2, -1, 0, -1, -2, -1];
            (chain_with(6, &edges), sigma, orbit_of, key)
        }
        "G" if r == 2 => {
            // D4 with triality about the central vertex 1
            let edges = [(0, 1), (1, 2), (1, 3)];
            let sigma = vec![2, 1, 3, 0];
            let orbit_of = vec![0, 1, 0, 0];
            let key = vec![-1, 0, -1, -1];
            (chain_with(4, &edges), sigma, orbit_of, key)
        }
        _ => return Err(Error::Cartan(format!("no folding for type {name}"))),
    };
    let fd = FoldedDatum {
        ambient: CartanDatum::new(pairing.clone())?,
        folded: c.clone(),
        ambient_pairing: pairing,
        sigma,
        orbit_of,
        key,
    };
    fd.validate()?;
    Ok(fd)
}

impl FoldedDatum {
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.folded.rank()];
        for (i, &o) in self.orbit_of.iter().enumerate() {
            out[o].push(i);
        }
        out
    }

    /// `o.o' = sum_{i in o, j in o'} i.j`
    pub fn orbit_pairing(&self) -> Vec<Vec<i64>> {
        let orbits = self.orbits();
        orbits
            .iter()
            .map(|o| {
                orbits
                    .iter()
                    .map(|p| {
                        o.iter()
                            .flat_map(|&i| p.iter().map(move |&j| (i, j)))
                            .map(|(i, j)| self.ambient.dot(i, j))
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// `alpha_{o'}(h_o) = sum_{i in o} a_{i j}` for any `j` in `o'`.
    pub fn fixed_point_cartan_matrix(&self) -> Vec<Vec<i64>> {
        let orbits = self.orbits();
        orbits
            .iter()
            .map(|o| orbits.iter().map(|p| o.iter().map(|&i| self.ambient.a(i, p[0])).sum()).collect())
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.ambient.rank();
        let a = &self.ambient;
        for i in 0..n {
            for j in 0..n {
                if a.dot(self.sigma[i], self.sigma[j]) != a.dot(i, j) {
                    return Err(Error::Cartan("sigma is not a diagram automorphism".into()));
                }
                if self.orbit_of[i] == self.orbit_of[j] && i != j && a.dot(i, j) != 0 {
                    return Err(Error::Cartan(format!("vertices {i} and {j} share an orbit but are not orthogonal")));
                }
            }
            if self.orbit_of[self.sigma[i]] != self.orbit_of[i] || self.key[self.sigma[i]] != self.key[i] {
                return Err(Error::Cartan("orbit map or orientation is not sigma-invariant".into()));
            }
        }
        // the orbits are exactly the sigma-orbits
        for o in self.orbits() {
            let mut cyc = vec![o[0]];
            while self.sigma[*cyc.last().unwrap()] != o[0] {
                cyc.push(self.sigma[*cyc.last().unwrap()]);
            }
            cyc.sort();
            if cyc != o {
                return Err(Error::Cartan(format!("{o:?} is not a sigma-orbit")));
            }
        }
        let r = self.folded.rank();
        let fixed = self.fixed_point_cartan_matrix();
        for i in 0..r {
            for j in 0..r {
                if fixed[i][j] != self.folded.a(i, j) {
                    return Err(Error::Cartan(format!("fixed-point Cartan matrix {fixed:?} does not match the datum")));
                }
            }
        }
        Ok(())
    }

    /// The Cartan matrix of the orbit pairing is the transpose of the
    /// datum's Cartan matrix.
    pub fn orbit_pairing_is_dual(&self) -> bool {
        let p = self.orbit_pairing();
        let r = p.len();
        (0..r).all(|i| (0..r).all(|j| 2 * p[i][j] == p[i][i] * self.folded.a(j, i)))
    }

    /// `sum_{i in o} alpha~_i` restricted: the folded weight of an ambient weight.
    pub fn restrict(&self, v: &[i64]) -> Root {
        let mut out = vec![0; self.folded.rank()];
        for (i, &x) in v.iter().enumerate() {
            out[self.orbit_of[i]] += x;
        }
        out
    }

    /// All ambient words obtained by replacing each letter `o` with some
    /// `i` in `o`.
    pub fn expand_word(&self, ii: &[usize]) -> Vec<Vec<usize>> {
        let orbits = self.orbits();
        let mut out = vec![vec![]];
        for &o in ii {
            out = out
                .into_iter()
                .flat_map(|w: Vec<usize>| orbits[o].iter().map(move |&i| [w.clone(), vec![i]].concat()))
                .collect();
        }
        out
    }

    /// Replaces every `s_o` by the product of the commuting `s_i`, `i in o`.
    pub fn expand_reduced_word(&self, word: &[usize]) -> Vec<usize> {
        let orbits = self.orbits();
        word.iter().flat_map(|&o| orbits[o].clone()).collect()
    }
}

/// The ambient algebra, the fixed-point algebra on the folded positive
/// roots, and for each folded root the ambient roots whose vectors sum to it.
pub struct FoldedAlgebra {
    pub datum: FoldedDatum,
    pub ambient: NilpotentAlgebra,
    pub folded: NilpotentAlgebra,
    pub root_orbits: Vec<Vec<usize>>,
}

pub fn folded_algebra(datum: FoldedDatum) -> Result<FoldedAlgebra> {
    let ars = RootSystem::new(datum.ambient.clone());
    let ambient = NilpotentAlgebra::simply_laced(ars.clone(), &datum.key)?;
    let frs = RootSystem::new(datum.folded.clone());
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, b) in ars.positive_roots().iter().enumerate() {
        let res = datum.restrict(b);
        let idx = frs
            .root_index(&res)
            .ok_or_else(|| Error::Invariant(format!("ambient root {b:?} restricts to the non-root {res:?}")))?;
        groups.entry(idx).or_default().push(k);
    }
    if groups.len() != frs.num_positive() {
        return Err(Error::Invariant("folded roots are not all hit".into()));
    }
    let root_orbits: Vec<Vec<usize>> = (0..frs.num_positive()).map(|k| groups[&k].clone()).collect();
    for o in &root_orbits {
        for &x in o {
            let xs = &ars.positive_roots()[x];
            let image: Vec<i64> =
                (0..xs.len()).map(|i| xs[datum.sigma.iter().position(|&s| s == i).unwrap()]).collect();
            if !o.iter().any(|&y| ars.positive_roots()[y] == image) {
                return Err(Error::Invariant("root orbit not sigma-stable".into()));
            }
            for &y in o {
                if x != y && ars.cartan().pair(xs, &ars.positive_roots()[y]) != 0 {
                    return Err(Error::Invariant("roots in an orbit are not orthogonal".into()));
                }
            }
        }
    }
    let n = frs.num_positive();
    let vec_of = |k: usize| -> BTreeMap<usize, i64> { root_orbits[k].iter().map(|&x| (x, 1)).collect() };
    let mut table = vec![vec![None; n]; n];
    for a in 0..n {
        for b in 0..n {
            let v = ambient.bracket_vec(&vec_of(a), &vec_of(b));
            if v.is_empty() {
                continue;
            }
            let s: Root = frs.positive_roots()[a].iter().zip(&frs.positive_roots()[b]).map(|(x, y)| x + y).collect();
            let k = frs.root_index(&s).ok_or_else(|| Error::Invariant("bracket leaves the root system".into()))?;
            let c = v[&root_orbits[k][0]];
            if v != vec_of(k).into_keys().map(|x| (x, c)).collect() {
                return Err(Error::Invariant("bracket of fixed vectors is not fixed".into()));
            }
            table[a][b] = Some((k, c));
        }
    }
    Ok(FoldedAlgebra { datum, ambient, folded: NilpotentAlgebra::from_table(frs, table), root_orbits })
}
