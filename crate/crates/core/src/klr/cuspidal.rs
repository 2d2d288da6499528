//! Cuspidal modules as kernels of maps between induced modules.

use std::collections::HashMap;

use serde::Serialize;

use super::algebra::KlrAlgebra;
use super::hom::{intertwiners, kernel};
use super::induce::induce;
use super::module::FiniteModule;
use crate::error::{Error, Result};
use crate::qarith::LaurentPoly;
use crate::rootsys::{ConvexOrder, Root, RootSystem};
use crate::shuffle::ShuffleElement;

/// Output of [`cuspidal_module`] for one root.
#[derive(Clone, Debug)]
pub struct CuspidalModule {
    pub alpha: Root,
    pub module: FiniteModule,
    /// minimal pair used, `beta < alpha < gamma`
    pub pair: Option<(Root, Root)>,
    /// dimension of the space of maps `Ind(S_beta, S_gamma) -> Ind(S_gamma, S_beta)`
    pub hom_dim: usize,
}

/// `ch(K) / ch(S)` when it is a Laurent polynomial: the same multiplier on
/// every word.
pub fn character_ratio(k: &ShuffleElement, s: &ShuffleElement) -> Option<LaurentPoly> {
    let (w0, c0) = s.terms().next()?;
    let r = k.coeff(w0).div_exact(c0)?;
    let words: std::collections::BTreeSet<_> = k.support().chain(s.support()).collect();
    for w in words {
        if k.coeff(w) != &s.coeff(w) * &r {
            return None;
        }
    }
    Some(r)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Budget {
    pub max_dim: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_dim: 400 }
    }
}

/// Builds `S_alpha` recursively: for the first minimal pair `(beta, gamma)`
/// it is the kernel of the nonzero map `Ind(S_beta, S_gamma) -> Ind(S_gamma, S_beta)`.
pub struct CuspidalBuilder<'a> {
    alg: &'a KlrAlgebra,
    rs: &'a RootSystem,
    order: &'a ConvexOrder,
    budget: Budget,
    cache: HashMap<Root, CuspidalModule>,
}

impl<'a> CuspidalBuilder<'a> {
    pub fn new(alg: &'a KlrAlgebra, rs: &'a RootSystem, order: &'a ConvexOrder, budget: Budget) -> Self {
        CuspidalBuilder { alg, rs, order, budget, cache: HashMap::new() }
    }

    pub fn build(&mut self, alpha: &[i64]) -> Result<&CuspidalModule> {
        if !self.cache.contains_key(alpha) {
            let c = self.compute(alpha)?;
            self.cache.insert(alpha.to_vec(), c);
        }
        Ok(&self.cache[alpha])
    }

    fn compute(&mut self, alpha: &[i64]) -> Result<CuspidalModule> {
        if let Some(i) = self.rs.simple_index(alpha) {
            return Ok(CuspidalModule {
                alpha: alpha.to_vec(),
                module: FiniteModule::trivial(self.rs.rank(), i),
                pair: None,
                hom_dim: 0,
            });
        }
        let (beta, gamma) = self.order.minimal_pairs(self.rs, alpha)?.into_iter().next().unwrap();
        let sb = self.build(&beta)?.module.clone();
        let sg = self.build(&gamma)?.module.clone();
        let max = self.budget.max_dim;
        let delta = induce(self.alg, &sb, &sg, max)?;
        let nabla = induce(self.alg, &sg, &sb, max)?;
        let homs = intertwiners(&delta, &nabla)?;
        let Some(f) = homs.first() else {
            return Err(Error::Invariant(format!("no nonzero map for {alpha:?} via {beta:?} + {gamma:?}")));
        };
        let module = kernel(&delta, f)?;
        Ok(CuspidalModule { alpha: alpha.to_vec(), module, pair: Some((beta, gamma)), hom_dim: homs.len() })
    }
}

/// [`CuspidalBuilder::build`] for a single root.
pub fn cuspidal_module(
    alg: &KlrAlgebra,
    rs: &RootSystem,
    order: &ConvexOrder,
    alpha: &[i64],
    budget: Budget,
) -> Result<CuspidalModule> {
    CuspidalBuilder::new(alg, rs, order, budget).build(alpha).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::CuspidalTable;
    use crate::rootsys::hmm_order;

    #[test]
    fn a2_and_b2_agree_with_characters() {
        for name in ["A2", "B2"] {
            let rs = RootSystem::named(name).unwrap();
            let alg = KlrAlgebra::new(rs.cartan().clone());
            for word in rs.reduced_words(10) {
                let order = ConvexOrder::from_reduced_word(&rs, &word).unwrap();
                let table = CuspidalTable::build(&rs, &order).unwrap();
                let mut b = CuspidalBuilder::new(&alg, &rs, &order, Budget::default());
                for alpha in rs.positive_roots() {
                    let c = b.build(alpha).unwrap();
                    let r = character_ratio(&c.module.character(), table.get(alpha));
                    let r = r.unwrap_or_else(|| panic!("{name} {word:?} {alpha:?}: {}", c.module.character()));
                    assert!(r.as_monomial().is_some_and(|(c, _)| c == &1.into()), "{r}");
                    assert_eq!(c.module.verify(&alg, Default::default()).unwrap(), vec![]);
                }
            }
        }
    }

    #[test]
    fn b2_hmm() {
        let rs = RootSystem::named("B2").unwrap();
        let alg = KlrAlgebra::new(rs.cartan().clone());
        let hmm = hmm_order(&rs).unwrap();
        let alpha = vec![1, 1];
        let c = cuspidal_module(&alg, &rs, &hmm.order, &alpha, Budget::default()).unwrap();
        let table = CuspidalTable::build(&rs, &hmm.order).unwrap();
        assert!(character_ratio(&c.module.character(), table.get(&alpha)).is_some());
        assert_eq!(c.hom_dim, 1);
    }
}
