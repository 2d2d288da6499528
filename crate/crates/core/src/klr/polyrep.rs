//! The polynomial representation: `R(nu)` acting on `sum_ii k[y_1..y_n] e_ii`.
//!
//! This is built straight from the action formulas, without the rewriting
//! engine, and serves as an independent check of normal forms.

use std::collections::BTreeMap;

use super::algebra::{exponent_vectors, Gen, KlrAlgebra, Term};
use super::perm;
use crate::linalg::rank;
use num_rational::BigRational;
use num_traits::Zero;

/// A polynomial in `y_1..y_n` with integer coefficients.
pub type Poly = BTreeMap<Vec<u16>, i64>;

/// A vector of the representation: one polynomial per word.
pub type PolyVec = BTreeMap<Vec<u8>, Poly>;

fn add_mono(p: &mut Poly, m: Vec<u16>, c: i64) {
    if c == 0 {
        return;
    }
    let e = p.entry(m.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        p.remove(&m);
    }
}

fn swap_vars(p: &Poly, k: usize) -> Poly {
    let mut out = Poly::new();
    for (m, &c) in p {
        let mut m = m.clone();
        m.swap(k, k + 1);
        add_mono(&mut out, m, c);
    }
    out
}

fn mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::new();
    for (a, &x) in p {
        for (b, &y) in q {
            let m = a.iter().zip(b).map(|(s, t)| s + t).collect();
            add_mono(&mut out, m, x * y);
        }
    }
    out
}

/// `(s_k f - f) / (y_k - y_{k+1})`
fn demazure(p: &Poly, k: usize) -> Poly {
    let mut out = Poly::new();
    for (m, &c) in p {
        let (a, b) = (m[k], m[k + 1]);
        if a == b {
            continue;
        }
        let (lo, d, sign) = if a > b { (b, a - b, -1) } else { (a, b - a, 1) };
        for t in 0..d {
            let mut mm = m.clone();
            mm[k] = lo + t;
            mm[k + 1] = lo + d - 1 - t;
            add_mono(&mut out, mm, sign * c);
        }
    }
    out
}

pub struct PolyRep<'a> {
    alg: &'a KlrAlgebra,
}

impl<'a> PolyRep<'a> {
    pub fn new(alg: &'a KlrAlgebra) -> Self {
        PolyRep { alg }
    }

    fn q_as_poly(&self, i: usize, j: usize, k: usize, n: usize) -> Poly {
        let mut out = Poly::new();
        for (c, pu, pv) in self.alg.q_poly(i, j) {
            let mut m = vec![0u16; n];
            m[k] = pu as u16;
            m[k + 1] = pv as u16;
            add_mono(&mut out, m, c);
        }
        out
    }

    pub fn act(&self, g: &Gen, v: &PolyVec) -> PolyVec {
        let mut out = PolyVec::new();
        for (ii, f) in v {
            let (word, g) = match g {
                Gen::Y(m) => {
                    let mut r = Poly::new();
                    for (mono, &c) in f {
                        let mut mono = mono.clone();
                        mono[*m] += 1;
                        add_mono(&mut r, mono, c);
                    }
                    (ii.clone(), r)
                }
                Gen::E(jj) => {
                    if jj != ii {
                        continue;
                    }
                    (ii.clone(), f.clone())
                }
                Gen::Phi(k) => {
                    let k = *k;
                    let (a, b) = (ii[k] as usize, ii[k + 1] as usize);
                    let mut jj = ii.clone();
                    jj.swap(k, k + 1);
                    let r = if a == b {
                        demazure(f, k)
                    } else if self.alg.less(a, b) {
                        swap_vars(f, k)
                    } else {
                        mul(&self.q_as_poly(b, a, k, ii.len()), &swap_vars(f, k))
                    };
                    (jj, r)
                }
            };
            let slot = out.entry(word).or_default();
            for (m, c) in g {
                add_mono(slot, m, c);
            }
        }
        out.retain(|_, p| !p.is_empty());
        out
    }

    /// Applies `gens[0] gens[1] ...` to `v`.
    pub fn apply(&self, gens: &[Gen], v: &PolyVec) -> PolyVec {
        gens.iter().rev().fold(v.clone(), |acc, g| self.act(g, &acc))
    }

    /// The generator word spelling a normal-form term.
    pub fn term_gens(t: &Term) -> Vec<Gen> {
        let mut gens: Vec<Gen> = perm::reduced_word(&t.w).into_iter().map(|k| Gen::Phi(k as usize)).collect();
        for (m, &a) in t.y.iter().enumerate() {
            for _ in 0..a {
                gens.push(Gen::Y(m));
            }
        }
        gens.push(Gen::E(t.ii.clone()));
        gens
    }

    /// All monomials `y^a e_ii` with `|a| <= deg`.
    pub fn test_vectors(ii: &[u8], deg: u32) -> Vec<PolyVec> {
        exponent_vectors(ii.len(), deg)
            .into_iter()
            .map(|a| PolyVec::from([(ii.to_vec(), Poly::from([(a, 1)]))]))
            .collect()
    }

    /// Rank of the operators given by `terms` (all with source `ii`), measured on
    /// the test vectors of degree at most `deg`.
    pub fn operator_rank(&self, terms: &[Term], ii: &[u8], deg: u32) -> usize {
        let inputs = Self::test_vectors(ii, deg);
        let mut columns: BTreeMap<(usize, Vec<u8>, Vec<u16>), usize> = BTreeMap::new();
        let mut rows: Vec<Vec<(usize, i64)>> = Vec::new();
        for t in terms {
            let gens = Self::term_gens(t);
            let mut row = Vec::new();
            for (idx, v) in inputs.iter().enumerate() {
                for (w, p) in self.apply(&gens, v) {
                    for (m, c) in p {
                        let next = columns.len();
                        let col = *columns.entry((idx, w.clone(), m)).or_insert(next);
                        row.push((col, c));
                    }
                }
            }
            rows.push(row);
        }
        let ncols = columns.len();
        let dense: Vec<Vec<BigRational>> = rows
            .into_iter()
            .map(|r| {
                let mut v = vec![BigRational::zero(); ncols];
                for (c, x) in r {
                    v[c] = BigRational::from_integer(x.into());
                }
                v
            })
            .collect();
        if ncols == 0 {
            return 0;
        }
        rank(&dense)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanDatum;

    #[test]
    fn demazure_examples() {
        // d(y_0) = -1 under (s f - f)/(y_0 - y_1)
        let p = Poly::from([(vec![1, 0], 1)]);
        assert_eq!(demazure(&p, 0), Poly::from([(vec![0, 0], -1)]));
        let p = Poly::from([(vec![0, 2], 1)]);
        assert_eq!(demazure(&p, 0), Poly::from([(vec![1, 0], 1), (vec![0, 1], 1)]));
    }

    #[test]
    fn relations_hold_in_polynomial_rep() {
        for name in ["A3", "B3", "G2"] {
            let alg = KlrAlgebra::new(CartanDatum::named(name).unwrap());
            let rep = PolyRep::new(&alg);
            let r = alg.cartan().rank() as u8;
            let words: Vec<Vec<u8>> = crate::rootsys::RootSystem::named(name)
                .unwrap()
                .weights_of_height(3)
                .iter()
                .flat_map(|nu| crate::shuffle::words_of_weight(nu))
                .map(|w| w.into_iter().map(|i| i as u8).collect())
                .collect();
            assert!(words.iter().all(|w: &Vec<u8>| w.iter().all(|&i| i < r)));
            for ii in &words {
                for v in PolyRep::test_vectors(ii, 2) {
                    // braid: (phi1 phi0 phi1 - phi0 phi1 phi0) e_ii
                    let lhs = rep.apply(&[Gen::Phi(1), Gen::Phi(0), Gen::Phi(1)], &v);
                    let rhs = rep.apply(&[Gen::Phi(0), Gen::Phi(1), Gen::Phi(0)], &v);
                    let mut diff = lhs.clone();
                    for (w, p) in rhs {
                        let slot = diff.entry(w).or_default();
                        for (m, c) in p {
                            add_mono(slot, m, -c);
                        }
                    }
                    diff.retain(|_, p| !p.is_empty());
                    let mut expect = PolyVec::new();
                    if ii[0] == ii[2] && ii[0] != ii[1] {
                        let mut acc = Poly::new();
                        for (c, pu, pv) in alg.braid_defect(ii[0] as usize, ii[1] as usize) {
                            for (m, x) in &v[ii] {
                                let mut m = m.clone();
                                m[0] += pu as u16;
                                m[2] += pv as u16;
                                add_mono(&mut acc, m, c * x);
                            }
                        }
                        if !acc.is_empty() {
                            expect.insert(ii.clone(), acc);
                        }
                    }
                    assert_eq!(diff, expect, "{name} {ii:?}");
                }
            }
        }
    }
}
