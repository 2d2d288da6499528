//! Induction `R(l+m) e_{l,m} (x) (M [x] N)` on explicit bases.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::algebra::{Element, Gen, KlrAlgebra, Term};
use super::module::{add_into, unit, BasisVector, FiniteModule, Vector};
use super::perm::{self, Perm};
use crate::error::{Error, Result};

/// Minimal-length representatives `w` of `S_n / (S_a x S_b)`: the images
/// keep the sources of each block in increasing order.
pub fn shuffles(a: usize, b: usize) -> Vec<Perm> {
    let n = a + b;
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != a {
            continue;
        }
        let (mut x, mut y) = (0u8, a as u8);
        let img: Perm = (0..n)
            .map(|j| {
                if mask >> j & 1 == 1 {
                    x += 1;
                    x - 1
                } else {
                    y += 1;
                    y - 1
                }
            })
            .collect();
        out.push(img);
    }
    out.sort_by_key(|w| (perm::length(w), w.clone()));
    out
}

/// `w = d u` with `d` a shuffle and `u` in the parabolic subgroup.
fn split(w: &[u8], a: usize) -> (Perm, Perm) {
    let n = w.len();
    let (mut x, mut y) = (0u8, a as u8);
    let mut d = vec![0u8; n];
    for j in 0..n {
        if (w[j] as usize) < a {
            d[j] = x;
            x += 1;
        } else {
            d[j] = y;
            y += 1;
        }
    }
    let mut u = vec![0u8; n];
    for j in 0..n {
        u[d[j] as usize] = w[j];
    }
    (d, u)
}

struct Inducer<'a> {
    alg: &'a KlrAlgebra,
    m: &'a FiniteModule,
    n: &'a FiniteModule,
    a: usize,
    cosets: Vec<Perm>,
    coset_index: HashMap<Perm, usize>,
    /// tensor basis: (index in M, index in N)
    pairs: Vec<(usize, usize)>,
    pair_index: HashMap<(usize, usize), usize>,
}

type TensorVec = std::collections::BTreeMap<(usize, usize), BigRational>;

impl Inducer<'_> {
    fn word(&self, p: usize) -> Vec<u8> {
        let (i, j) = self.pairs[p];
        let mut w = self.m.basis[i].word.clone();
        w.extend(&self.n.basis[j].word);
        w
    }

    fn index(&self, coset: usize, pair: usize) -> usize {
        coset * self.pairs.len() + pair
    }

    /// A parabolic generator on `M [x] N`.
    fn act_tensor(&self, g: &Gen, v: &TensorVec) -> TensorVec {
        let a = self.a;
        let mut out = TensorVec::new();
        for (&(i, j), c) in v {
            let (img, left): (Vector, bool) = match g {
                Gen::Y(l) if *l < a => (self.m.act(&Gen::Y(*l), &unit(i)), true),
                Gen::Y(l) => (self.n.act(&Gen::Y(l - a), &unit(j)), false),
                Gen::Phi(k) if *k + 1 < a => (self.m.act(&Gen::Phi(*k), &unit(i)), true),
                Gen::Phi(k) => {
                    debug_assert!(*k >= a);
                    (self.n.act(&Gen::Phi(k - a), &unit(j)), false)
                }
                Gen::E(_) => unreachable!(),
            };
            for (x, y) in img {
                let key = if left { (x, j) } else { (i, x) };
                let e = out.entry(key).or_insert_with(BigRational::zero);
                *e += &y * c;
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    /// The term `t` (whose idempotent is the word of `pair`) applied to
    /// `1 (x) pair`.
    fn act_term(&self, t: &Term, pair: usize, out: &mut Vector, coeff: &BigRational) {
        let (d, u) = split(&t.w, self.a);
        let mut gens: Vec<Gen> = perm::reduced_word(&u).into_iter().map(|k| Gen::Phi(k as usize)).collect();
        for (l, &e) in t.y.iter().enumerate() {
            gens.extend(std::iter::repeat_n(Gen::Y(l), e as usize));
        }
        let mut v = TensorVec::from([(self.pairs[pair], BigRational::one())]);
        for g in gens.iter().rev() {
            v = self.act_tensor(g, &v);
        }
        let coset = self.coset_index[&d];
        for (key, x) in v {
            let idx = self.index(coset, self.pair_index[&key]);
            let e = out.entry(idx).or_insert_with(BigRational::zero);
            *e += x * coeff;
        }
        if !perm::is_identity(&u) && !perm::is_identity(&d) {
            // phi_d phi_u y^a = t + lower terms
            let start = Element::term(Term { w: u, y: t.y.clone(), ii: t.ii.clone() });
            let full = self.alg.lmul_phis(&perm::reduced_word(&d), &start);
            debug_assert_eq!(full.terms.get(t), Some(&1));
            for (s, &c) in &full.terms {
                if s != t {
                    self.act_term(s, pair, out, &(coeff * BigRational::from_integer((-c).into())));
                }
            }
        }
        out.retain(|_, x| !x.is_zero());
    }
}

/// Induction of `M [x] N`. The result has basis `phi_d (x) m (x) n` for `d`
/// in [`shuffles`], ordered by coset and then by `(m, n)`.
pub fn induce(alg: &KlrAlgebra, m: &FiniteModule, n: &FiniteModule, max_dim: usize) -> Result<FiniteModule> {
    if m.nu.len() != n.nu.len() {
        return Err(Error::Shape("modules over different Cartan data".into()));
    }
    let (a, b) = (m.len(), n.len());
    let cosets = shuffles(a, b);
    let dim = cosets.len() * m.dim() * n.dim();
    if dim > max_dim {
        return Err(Error::Budget(format!("induced module would have dimension {dim} > {max_dim}")));
    }
    let pairs: Vec<(usize, usize)> = (0..m.dim()).flat_map(|i| (0..n.dim()).map(move |j| (i, j))).collect();
    let ind = Inducer {
        alg,
        m,
        n,
        a,
        coset_index: cosets.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect(),
        cosets,
        pair_index: pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect(),
        pairs,
    };
    let total = a + b;
    let mut basis = Vec::with_capacity(dim);
    for d in &ind.cosets {
        for p in 0..ind.pairs.len() {
            let ii = ind.word(p);
            let (i, j) = ind.pairs[p];
            let t = Term { w: d.clone(), y: vec![0; total], ii: ii.clone() };
            basis.push(BasisVector {
                word: perm::act(d, &ii),
                degree: alg.degree(&t) + m.basis[i].degree + n.basis[j].degree,
            });
        }
    }
    let mut y = vec![vec![Vector::new(); dim]; total];
    let mut phi = vec![vec![Vector::new(); dim]; total.saturating_sub(1)];
    for (c, d) in ind.cosets.iter().enumerate() {
        for p in 0..ind.pairs.len() {
            let t = Term { w: d.clone(), y: vec![0; total], ii: ind.word(p) };
            let col = ind.index(c, p);
            let start = Element::term(t);
            let gens: Vec<Gen> = (0..total).map(Gen::Y).chain((0..total.saturating_sub(1)).map(Gen::Phi)).collect();
            for g in gens {
                let x = alg.lmul(&g, &start)?;
                let mut out = Vector::new();
                for (s, &coef) in &x.terms {
                    let mut part = Vector::new();
                    ind.act_term(s, p, &mut part, &BigRational::one());
                    add_into(&mut out, &part, &BigRational::from_integer(coef.into()));
                }
                match g {
                    Gen::Y(l) => y[l][col] = out,
                    Gen::Phi(k) => phi[k][col] = out,
                    Gen::E(_) => unreachable!(),
                }
            }
        }
    }
    let nu = m.nu.iter().zip(&n.nu).map(|(x, y)| x + y).collect();
    Ok(FiniteModule { nu, basis, y, phi })
}

/// `Ind(N [x] M)` shifted by `lambda . mu`.
pub fn coinduce(alg: &KlrAlgebra, m: &FiniteModule, n: &FiniteModule, max_dim: usize) -> Result<FiniteModule> {
    let shift = alg.cartan().pair(&m.nu, &n.nu);
    Ok(induce(alg, n, m, max_dim)?.shift(shift))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_representatives() {
        let s = shuffles(2, 2);
        assert_eq!(s.len(), 6);
        for w in &s {
            let (d, u) = split(w, 2);
            assert_eq!(&d, w);
            assert!(perm::is_identity(&u));
        }
        let w = vec![3, 1, 0, 2];
        let (d, u) = split(&w, 2);
        assert_eq!(perm::compose(&d, &u), w);
        assert_eq!(perm::length(&d) + perm::length(&u), perm::length(&w));
    }

    use super::super::module::GroundField;
    use crate::rootsys::CartanDatum;
    use crate::shuffle::shuffle_product;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        /// Inducing modules that satisfy the relations gives modules that do,
        /// with the shuffle product as character.
        #[test]
        fn induction_preserves_relations(
            ty in prop::sample::select(vec!["A2", "B2", "G2", "A3"]),
            letters in prop::collection::vec(0usize..3, 2..5),
            cut in 1usize..4,
        ) {
            let c = CartanDatum::named(ty).unwrap();
            let r = c.rank();
            let alg = KlrAlgebra::new(c.clone());
            let letters: Vec<usize> = letters.into_iter().map(|i| i % r).collect();
            let cut = cut.min(letters.len() - 1);
            let build = |ls: &[usize]| {
                ls.iter().fold(FiniteModule::empty(r), |acc, &i| induce(&alg, &acc, &FiniteModule::trivial(r, i), 1000).unwrap())
            };
            let (m, n) = (build(&letters[..cut]), build(&letters[cut..]));
            let ind = induce(&alg, &m, &n, 1000).unwrap();
            prop_assert!(ind.verify(&alg, GroundField::Rational).unwrap().is_empty());
            prop_assert_eq!(ind.character(), shuffle_product(&c, &m.character(), &n.character()));
            let co = coinduce(&alg, &m, &n, 1000).unwrap();
            prop_assert!(co.verify(&alg, GroundField::Rational).unwrap().is_empty());
            prop_assert_eq!(co.dim(), ind.dim());
        }
    }
}
