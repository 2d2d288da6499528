//! Module maps between finite modules, and kernels.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::algebra::Gen;
use super::module::{add_into, unit, BasisVector, FiniteModule, Vector};
use crate::error::{Error, Result};
use crate::linalg::nullspace;

/// A homogeneous module map raising degrees by `shift`; column `j` is the
/// image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Intertwiner {
    pub shift: i64,
    #[serde(skip)]
    pub columns: Vec<Vector>,
}

fn generators(m: &FiniteModule) -> Vec<Gen> {
    let n = m.len();
    (0..n).map(Gen::Y).chain((0..n.saturating_sub(1)).map(Gen::Phi)).collect()
}

/// A basis of the homogeneous maps `M -> N` for every degree shift.
pub fn intertwiners(m: &FiniteModule, n: &FiniteModule) -> Result<Vec<Intertwiner>> {
    if m.nu != n.nu {
        return Err(Error::Weight(format!("maps between weights {:?} and {:?}", m.nu, n.nu)));
    }
    let mut shifts = BTreeSet::new();
    for a in &m.basis {
        for b in &n.basis {
            if a.word == b.word {
                shifts.insert(b.degree - a.degree);
            }
        }
    }
    let gens = generators(m);
    let images_m: Vec<Vec<Vector>> = gens.iter().map(|g| (0..m.dim()).map(|a| m.act(g, &unit(a))).collect()).collect();
    let images_n: Vec<Vec<Vector>> = gens.iter().map(|g| (0..n.dim()).map(|b| n.act(g, &unit(b))).collect()).collect();
    let mut out = Vec::new();
    for d in shifts {
        let unknowns: Vec<(usize, usize)> = (0..m.dim())
            .flat_map(|a| {
                (0..n.dim())
                    .filter(move |&b| m.basis[a].word == n.basis[b].word && n.basis[b].degree == m.basis[a].degree + d)
                    .map(move |b| (a, b))
            })
            .collect();
        let index: HashMap<(usize, usize), usize> = unknowns.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        // X(g a) - g(X a) = 0, one equation per (g, a, coordinate)
        let mut eqs: BTreeMap<(usize, usize, usize), BTreeMap<usize, BigRational>> = BTreeMap::new();
        for (gi, _) in gens.iter().enumerate() {
            for a in 0..m.dim() {
                for (&a2, x) in &images_m[gi][a] {
                    for (&(aa, b), &u) in index.iter().filter(|((aa, _), _)| *aa == a2) {
                        debug_assert_eq!(aa, a2);
                        let e = eqs.entry((gi, a, b)).or_default().entry(u).or_insert_with(BigRational::zero);
                        *e += x;
                    }
                }
                for (&(aa, b), &u) in index.iter().filter(|((aa, _), _)| *aa == a) {
                    debug_assert_eq!(aa, a);
                    for (&c, x) in &images_n[gi][b] {
                        let e = eqs.entry((gi, a, c)).or_default().entry(u).or_insert_with(BigRational::zero);
                        *e -= x;
                    }
                }
            }
        }
        let rows: Vec<Vec<BigRational>> = eqs
            .into_values()
            .filter(|r| r.values().any(|x| !x.is_zero()))
            .map(|r| {
                let mut row = vec![BigRational::zero(); unknowns.len()];
                for (u, x) in r {
                    row[u] = x;
                }
                row
            })
            .collect();
        for sol in nullspace(&rows, unknowns.len(), &BigRational::zero()) {
            let mut columns = vec![Vector::new(); m.dim()];
            for (u, x) in sol.into_iter().enumerate() {
                if !x.is_zero() {
                    let (a, b) = unknowns[u];
                    columns[a].insert(b, x);
                }
            }
            out.push(Intertwiner { shift: d, columns });
        }
    }
    Ok(out)
}

/// The kernel of a homogeneous map as a submodule, with a homogeneous
/// basis adapted to the weight spaces.
pub fn kernel(m: &FiniteModule, x: &Intertwiner) -> Result<FiniteModule> {
    let mut blocks: BTreeMap<&BasisVector, Vec<usize>> = BTreeMap::new();
    for (i, b) in m.basis.iter().enumerate() {
        blocks.entry(b).or_default().push(i);
    }
    // kernel vectors, each with the coordinate that identifies it
    let mut vecs: Vec<(Vector, usize)> = Vec::new();
    let mut basis = Vec::new();
    for (b, cols) in &blocks {
        let targets: Vec<usize> =
            cols.iter().flat_map(|&c| x.columns[c].keys().copied()).collect::<BTreeSet<_>>().into_iter().collect();
        let rows: Vec<Vec<BigRational>> = targets
            .iter()
            .map(|t| cols.iter().map(|&c| x.columns[c].get(t).cloned().unwrap_or_else(BigRational::zero)).collect())
            .collect();
        let ns = nullspace(&rows, cols.len(), &BigRational::zero());
        for v in ns {
            let free = v.iter().position(|x| x.is_one()).expect("free column");
            let vec: Vector =
                v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (cols[i], x)).collect();
            vecs.push((vec, cols[free]));
            basis.push((*b).clone());
        }
    }
    submodule(m, &vecs, basis)
}

/// The submodule spanned by `vecs`; each vector comes with a coordinate at
/// which it is 1 and all the others vanish.
fn submodule(m: &FiniteModule, vecs: &[(Vector, usize)], basis: Vec<BasisVector>) -> Result<FiniteModule> {
    let pivot: HashMap<usize, usize> = vecs.iter().enumerate().map(|(i, (_, p))| (*p, i)).collect();
    let coords = |v: &Vector| -> Result<Vector> {
        let mut c = Vector::new();
        for (&p, &i) in &pivot {
            if let Some(x) = v.get(&p) {
                c.insert(i, x.clone());
            }
        }
        let mut back = Vector::new();
        for (&i, x) in &c {
            add_into(&mut back, &vecs[i].0, x);
        }
        if &back != v {
            return Err(Error::Invariant("subspace is not stable under the action".into()));
        }
        Ok(c)
    };
    let n = m.len();
    let mut y = vec![Vec::new(); n];
    let mut phi = vec![Vec::new(); n.saturating_sub(1)];
    for (v, _) in vecs {
        for (l, slot) in y.iter_mut().enumerate() {
            slot.push(coords(&m.act(&Gen::Y(l), v))?);
        }
        for (k, slot) in phi.iter_mut().enumerate() {
            slot.push(coords(&m.act(&Gen::Phi(k), v))?);
        }
    }
    Ok(FiniteModule { nu: m.nu.clone(), basis, y, phi })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::g2_module;
    use super::super::induce::induce;
    use super::super::KlrAlgebra;
    use super::*;
    use crate::rootsys::CartanDatum;

    #[test]
    fn endomorphisms_of_g2_fixture_contain_identity() {
        let m = g2_module();
        let homs = intertwiners(&m, &m).unwrap();
        let id: Vec<Vector> = (0..m.dim()).map(unit).collect();
        let deg0: Vec<&Intertwiner> = homs.iter().filter(|h| h.shift == 0).collect();
        assert_eq!(deg0.len(), 1);
        let scale = deg0[0].columns[0][&0].clone();
        let scaled: Vec<Vector> =
            deg0[0].columns.iter().map(|c| c.iter().map(|(&i, x)| (i, x / &scale)).collect()).collect();
        assert_eq!(scaled, id);
        assert!(intertwiners(&m, &FiniteModule::trivial(2, 0)).is_err());
    }

    #[test]
    fn a2_standard_to_costandard() {
        let alg = KlrAlgebra::new(CartanDatum::named("A2").unwrap());
        let (s0, s1) = (FiniteModule::trivial(2, 0), FiniteModule::trivial(2, 1));
        let d = induce(&alg, &s1, &s0, 10).unwrap();
        let c = induce(&alg, &s0, &s1, 10).unwrap();
        let homs = intertwiners(&d, &c).unwrap();
        assert_eq!(homs.len(), 1);
        let k = kernel(&d, &homs[0]).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis[0].word, vec![0, 1]);
        assert_eq!(k.verify(&alg, super::super::GroundField::Rational).unwrap(), vec![]);
    }
}
