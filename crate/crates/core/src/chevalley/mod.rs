//! The `q = 1` picture: root vectors in `U(n)`, the coordinate functions
//! `Z_beta` of the ordered product of root subgroups, and folding.

mod fold;
mod lie;

pub use fold::{fold, folded_algebra, FoldedAlgebra, FoldedDatum};
pub use lie::{NilpotentAlgebra, PbwStraightener};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pbw::CuspidalTable;
use crate::rootsys::{ConvexOrder, Root, RootSystem};
use crate::shuffle::words_of_weight;

/// `(e_ii f)(1)` differentiates `f(exp(t_1 e_{i_1}) ... exp(t_n e_{i_n}))`,
/// and `Z` is read off the product of root subgroups in increasing order.
/// With this convention `(e_ii, Z_alpha)` is the coefficient of `X_alpha` in
/// the PBW expansion with factors in increasing order.
pub const PBW_INCREASING: bool = true;

/// The nilpotent algebra of any finite type: the sign construction for
/// simply-laced types, the fixed points of a folding otherwise.
pub fn nilpotent_algebra(rs: &RootSystem) -> Result<NilpotentAlgebra> {
    if rs.cartan().is_simply_laced() {
        let key: Vec<i64> = (0..rs.rank() as i64).collect();
        NilpotentAlgebra::simply_laced(rs.clone(), &key)
    } else {
        Ok(folded_algebra(fold(rs.cartan())?)?.folded)
    }
}

fn order_indices(alg: &NilpotentAlgebra, order: &ConvexOrder) -> Result<Vec<usize>> {
    let rs = alg.root_system();
    let mut idx: Vec<usize> = order
        .roots()
        .iter()
        .map(|r| rs.root_index(r).ok_or_else(|| Error::Domain(format!("{r:?} is not a root"))))
        .collect::<Result<_>>()?;
    if !PBW_INCREASING {
        idx.reverse();
    }
    Ok(idx)
}

/// Adjoint matrices of the root vectors on `n`, keyed by root.
pub fn root_vectors(alg: &NilpotentAlgebra) -> BTreeMap<Root, Vec<Vec<i64>>> {
    let rs = alg.root_system();
    rs.positive_roots().iter().enumerate().map(|(k, r)| (r.clone(), alg.adjoint(k))).collect()
}

/// Evaluates `(e_ii, Z_alpha)` for all words of weight alpha.
pub struct ZPairing<'a> {
    alg: &'a NilpotentAlgebra,
    st: PbwStraightener<'a>,
}

impl<'a> ZPairing<'a> {
    pub fn new(alg: &'a NilpotentAlgebra, order: &ConvexOrder) -> Result<Self> {
        let idx = order_indices(alg, order)?;
        Ok(ZPairing { alg, st: PbwStraightener::new(alg, &idx) })
    }

    pub fn pair(&mut self, ii: &[usize], alpha: &[i64]) -> Result<i64> {
        let rs = self.alg.root_system();
        let r = rs.rank();
        let mut w = vec![0i64; r];
        for &i in ii {
            if i >= r {
                return Err(Error::Domain(format!("letter {i} out of range")));
            }
            w[i] += 1;
        }
        if w != alpha {
            return Err(Error::Weight(format!("word of weight {w:?} paired with {alpha:?}")));
        }
        let k = rs.root_index(alpha).ok_or_else(|| Error::Domain(format!("{alpha:?} is not a positive root")))?;
        let word: Vec<usize> = ii.iter().map(|&i| self.alg.simple(i)).collect();
        Ok(self.st.expand(&word).get(&vec![k]).copied().unwrap_or(0))
    }
}

/// [`ZPairing::pair`] for one word.
pub fn z_pairing(alg: &NilpotentAlgebra, order: &ConvexOrder, ii: &[usize], alpha: &[i64]) -> Result<i64> {
    ZPairing::new(alg, order)?.pair(ii, alpha)
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossRouteRow {
    pub root: Root,
    pub word: String,
    pub character_q1: i64,
    pub z: i64,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossRoute {
    pub rows: Vec<CrossRouteRow>,
    /// the sign relating `Z_alpha` to the specialized character, per root
    pub signs: Vec<(Root, i64)>,
    pub passed: bool,
}

/// Compares `(e_ii, Z_alpha)` with the `q = 1` value of the cuspidal
/// character, allowing one sign per root. Roots above `max_height` are skipped.
pub fn cross_route(rs: &RootSystem, order: &ConvexOrder, table: &CuspidalTable, max_height: i64) -> Result<CrossRoute> {
    let alg = nilpotent_algebra(rs)?;
    let mut zp = ZPairing::new(&alg, order)?;
    let mut rows = Vec::new();
    let mut signs = Vec::new();
    let mut passed = true;
    for alpha in order.roots() {
        if crate::rootsys::height(alpha) > max_height {
            continue;
        }
        let ch = table.get(alpha);
        let mut sign = 0i64;
        let mut local = Vec::new();
        for ii in words_of_weight(alpha) {
            let c: i64 =
                ch.coeff(&ii).eval_at_one().try_into().map_err(|_| Error::Domain("coefficient overflow".into()))?;
            let z = zp.pair(&ii, alpha)?;
            if sign == 0 && z != 0 {
                sign = if c * z < 0 { -1 } else { 1 };
            }
            local.push((ii, c, z));
        }
        let sign = if sign == 0 { 1 } else { sign };
        for (ii, c, z) in local {
            let ok = c == sign * z;
            passed &= ok;
            rows.push(CrossRouteRow {
                root: alpha.clone(),
                word: crate::rootsys::word_string(&ii),
                character_q1: c,
                z,
                matches: ok,
            });
        }
        signs.push((alpha.clone(), sign));
    }
    Ok(CrossRoute { rows, signs, passed })
}

/// One folded pairing written as a sum over expanded ambient words.
#[derive(Clone, Debug, Serialize)]
pub struct FoldCheck {
    pub root: Root,
    pub word: String,
    pub value: i64,
    /// ambient words with their pairings against the representative root,
    /// the latter's sign normalized
    pub summands: Vec<(String, i64)>,
    pub sum_matches: bool,
    pub nonnegative: bool,
}

/// `(e_ii, Z_alpha)` against `sum_jj (e~_jj, Z~_beta)` for a representative
/// `beta` over `alpha`, for all roots of height at most `max_height` and all
/// their words.
pub fn fold_check(fa: &FoldedAlgebra, word: &[usize], max_height: i64) -> Result<Vec<FoldCheck>> {
    let frs = fa.folded.root_system();
    let ars = fa.ambient.root_system();
    let order = ConvexOrder::from_reduced_word(frs, word)?;
    let aorder = ConvexOrder::from_reduced_word(ars, &fa.datum.expand_reduced_word(word))?;
    let mut zf = ZPairing::new(&fa.folded, &order)?;
    let mut za = ZPairing::new(&fa.ambient, &aorder)?;
    let mut out = Vec::new();
    for (k, alpha) in frs.positive_roots().iter().enumerate() {
        if crate::rootsys::height(alpha) > max_height {
            continue;
        }
        let beta = ars.positive_roots()[fa.root_orbits[k][0]].clone();
        // sign of Z~_beta: make its first nonzero value positive
        let mut sign = 0;
        for jj in words_of_weight(&beta) {
            let z = za.pair(&jj, &beta)?;
            if z != 0 {
                sign = z.signum();
                break;
            }
        }
        for ii in words_of_weight(alpha) {
            let value = zf.pair(&ii, alpha)?;
            let mut summands = Vec::new();
            let mut total = 0;
            for jj in fa.datum.expand_word(&ii) {
                let w: Root = (0..ars.rank()).map(|i| jj.iter().filter(|&&x| x == i).count() as i64).collect();
                let z = if w == beta { za.pair(&jj, &beta)? } else { 0 };
                total += z;
                summands.push((crate::rootsys::word_string(&jj), sign * z));
            }
            out.push(FoldCheck {
                root: alpha.clone(),
                word: crate::rootsys::word_string(&ii),
                value,
                nonnegative: summands.iter().all(|(_, z)| *z >= 0),
                sum_matches: total == value,
                summands,
            });
        }
    }
    Ok(out)
}
