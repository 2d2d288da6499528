use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use super::{all_pair_characters, CuspidalTable};
use crate::error::Result;
use crate::linalg;
use crate::qarith::{LaurentPoly, RatFunc};
use crate::rootsys::{is_sum_of, kostant_partition, kp_vectors, word_string, KpVector, Root, RootSystem};
use crate::shuffle::{expand_in_dual_pbw, shuffle_product, GramCache, ShuffleElement, Word};

/// Outcome of a check with human-readable failure details.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Verdict {
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Verdict {
    pub fn new() -> Self {
        Self { passed: true, checked: 0, failures: Vec::new() }
    }

    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            self.failures.push(msg());
        }
    }

    pub fn merge(&mut self, other: Verdict) {
        self.passed &= other.passed;
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// Bar-invariance, content one, positivity and minimal-pair independence
/// of every entry.
pub fn check_table(rs: &RootSystem, table: &CuspidalTable) -> Result<Verdict> {
    let mut v = Verdict::new();
    for (a, x) in table.entries() {
        v.check(x.is_bar_invariant(), || format!("{a:?}: not bar-invariant"));
        v.check(x.content() == 1.into(), || format!("{a:?}: content {}", x.content()));
        v.check(x.is_nonnegative(), || format!("{a:?}: negative coefficient"));
    }
    for (a, variants) in all_pair_characters(rs, table)? {
        for ((b, g), x) in variants {
            v.check(x == *table.get(&a), || format!("{a:?}: pair ({b:?}, {g:?}) gives a different character"));
        }
    }
    Ok(v)
}

/// Result of restricting a standard character along the parts of `n`.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictionCase {
    pub m: KpVector,
    pub n: KpVector,
    pub is_zero: bool,
    pub predicted_zero: bool,
    /// At `n = m`: whether the restriction is a q-power times the boxed
    /// product of cuspidal powers.
    pub diagonal_match: Option<bool>,
}

fn parts_of(table: &CuspidalTable, n: &KpVector) -> Vec<Vec<i64>> {
    table.order.roots().iter().zip(&n.0).map(|(a, &k)| a.iter().map(|x| x * k as i64).collect()).collect()
}

/// Iterated restriction of `Delta(m)` along `(n_1 alpha_1, ..., n_N alpha_N)`.
pub fn check_restriction_pattern(
    rs: &RootSystem,
    table: &CuspidalTable,
    m: &KpVector,
    n: &KpVector,
) -> Result<RestrictionCase> {
    let delta = table.standard_character(rs, m);
    let res = delta.restrict_many(&parts_of(table, n))?;
    let predicted_zero = n.cmp_lex(m) == Ordering::Greater || n.cmp_lex_prime(m) == Ordering::Greater;
    let diagonal_match = (m == n).then(|| {
        let powers: Vec<ShuffleElement> = (0..m.0.len()).map(|k| power(rs, table.by_position(k), m.0[k])).collect();
        let mut boxed: BTreeMap<Vec<Word>, LaurentPoly> = BTreeMap::new();
        let mut tuples: Vec<(Vec<Word>, LaurentPoly)> = vec![(vec![], LaurentPoly::one())];
        for p in &powers {
            let mut next = Vec::new();
            for (ws, c) in &tuples {
                for (w, d) in p.terms() {
                    let mut ws = ws.clone();
                    ws.push(w.clone());
                    next.push((ws, c * d));
                }
            }
            tuples = next;
        }
        boxed.extend(tuples);
        same_up_to_q_power(&res, &boxed)
    });
    Ok(RestrictionCase { m: m.clone(), n: n.clone(), is_zero: res.is_empty(), predicted_zero, diagonal_match })
}

fn power(rs: &RootSystem, x: &ShuffleElement, k: u32) -> ShuffleElement {
    let mut acc = ShuffleElement::one(rs.rank());
    for _ in 0..k {
        acc = shuffle_product(rs.cartan(), &acc, x);
    }
    acc
}

fn same_up_to_q_power<K: Ord>(a: &BTreeMap<K, LaurentPoly>, b: &BTreeMap<K, LaurentPoly>) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return a.is_empty() && b.is_empty();
    }
    let lo = |m: &BTreeMap<K, LaurentPoly>| m.values().filter_map(LaurentPoly::min_exp).min().unwrap();
    let k = lo(a) - lo(b);
    a.iter().zip(b).all(|((ka, va), (kb, vb))| ka == kb && *va == vb.shift(k))
}

/// Two-part restrictions of `E_alpha^*`: the left weight is a sum of roots
/// `>= alpha`, the right one of roots `<= alpha`; for every minimal pair the
/// `(gamma, beta)` component is proportional to `E_gamma^* (x) E_beta^*`.
pub fn check_cuspidal_restriction(rs: &RootSystem, table: &CuspidalTable, alpha: &[i64]) -> Result<Verdict> {
    let mut v = Verdict::new();
    let x = table.get(alpha);
    let pa = table.order.position(alpha).unwrap();
    let above: Vec<Root> = table.order.roots()[pa..].to_vec();
    let below: Vec<Root> = table.order.roots()[..=pa].to_vec();
    for lambda in RootSystem::sub_weights(alpha) {
        let mu: Vec<i64> = alpha.iter().zip(&lambda).map(|(a, b)| a - b).collect();
        if lambda.iter().all(|&z| z == 0) || mu.iter().all(|&z| z == 0) {
            continue;
        }
        if x.deconcat(&lambda, &mu)?.is_empty() {
            continue;
        }
        v.check(is_sum_of(&above, &lambda) && is_sum_of(&below, &mu), || {
            format!("{alpha:?}: nonzero restriction to ({lambda:?}, {mu:?})")
        });
    }
    if !rs.is_simple(alpha) {
        for (beta, gamma) in table.order.minimal_pairs(rs, alpha)? {
            let comp = x.restrict(&gamma, &beta)?;
            let (eg, eb) = (table.get(&gamma), table.get(&beta));
            let mut tensor: BTreeMap<(Word, Word), LaurentPoly> = BTreeMap::new();
            for (u, cu) in eg.terms() {
                for (w, cw) in eb.terms() {
                    tensor.insert((u.clone(), w.clone()), cu * cw);
                }
            }
            v.check(proportional(&comp, &tensor), || {
                format!("{alpha:?}: ({gamma:?}, {beta:?}) component is not a multiple of the tensor product")
            });
        }
    }
    Ok(v)
}

fn proportional<K: Ord>(a: &BTreeMap<K, LaurentPoly>, b: &BTreeMap<K, LaurentPoly>) -> bool {
    let Some((k0, b0)) = b.iter().next() else { return a.is_empty() };
    let a0 = a.get(k0).cloned().unwrap_or_default();
    let Some(c) = a0.div_exact(b0) else { return false };
    a.keys().all(|k| b.contains_key(k)) && b.iter().all(|(k, bv)| a.get(k).cloned().unwrap_or_default() == bv * &c)
}

/// `(E_alpha^*)^n` expands as the single dual PBW monomial `n 1_alpha`.
pub fn check_power_indivisible(rs: &RootSystem, table: &CuspidalTable, alpha: &[i64], n: u32) -> Result<Verdict> {
    let mut v = Verdict::new();
    let x = power(rs, table.get(alpha), n);
    let e = expand_in_dual_pbw(rs, &x, table)?;
    let mut m = KpVector::zero(table.order.len());
    m.0[table.order.position(alpha).unwrap()] = n;
    v.check(e.len() == 1 && e.get(&m).is_some_and(LaurentPoly::is_one), || {
        format!("{alpha:?}^{n}: expansion {:?}", e.iter().map(|(k, c)| (k.label(), c.to_string())).collect::<Vec<_>>())
    });
    Ok(v)
}

/// Where the dual PBW expansion of `nabla(m)` lives.
#[derive(Clone, Debug, Serialize)]
pub struct UnitriangularCase {
    pub m: KpVector,
    pub support: Vec<(KpVector, LaurentPoly)>,
    /// every `m'` in the support has `m' <= m` and `m' <=' m`
    pub below: bool,
    /// every `m'` in the support has `m <= m'` and `m <=' m'`
    pub above: bool,
    /// the coefficient at `m` is a q-power
    pub diagonal: bool,
}

pub fn unitriangular_case(rs: &RootSystem, table: &CuspidalTable, m: &KpVector) -> Result<UnitriangularCase> {
    let nabla = table.costandard_character(rs, m);
    let e = expand_in_dual_pbw(rs, &nabla, table)?;
    let below = e.keys().all(|m2| m2.cmp_lex(m) != Ordering::Greater && m2.cmp_lex_prime(m) != Ordering::Greater);
    let above = e.keys().all(|m2| m.cmp_lex(m2) != Ordering::Greater && m.cmp_lex_prime(m2) != Ordering::Greater);
    let diagonal = e.get(m).is_some_and(|c| c.as_monomial().is_some_and(|(k, _)| *k == 1.into()));
    Ok(UnitriangularCase { m: m.clone(), support: e.into_iter().collect(), below, above, diagonal })
}

/// `nabla(m)` expands on `{m' : m' <= m, m' <=' m}` with a pure q-power at
/// `m`. This is the direction forced by the restriction vanishing pattern.
pub fn check_unitriangular(rs: &RootSystem, table: &CuspidalTable, m: &KpVector) -> Result<Verdict> {
    let mut v = Verdict::new();
    let c = unitriangular_case(rs, table, m)?;
    for (m2, coeff) in &c.support {
        v.check(m2.cmp_lex(m) != Ordering::Greater && m2.cmp_lex_prime(m) != Ordering::Greater, || {
            format!("nabla({}) has coefficient {coeff} at {}", m.label(), m2.label())
        });
    }
    v.check(c.diagonal, || format!("nabla({}): coefficient at itself is not a q-power", m.label()));
    Ok(v)
}

/// Dual PBW monomials of weight `nu`: their number is the Kostant partition
/// count, they are linearly independent, pairwise orthogonal for the
/// transported form, and the norms of single root vectors are `1 - q_alpha^2`.
pub fn check_monomials(
    rs: &RootSystem,
    table: &CuspidalTable,
    gram: &GramCache,
    nu: &[i64],
    with_form: bool,
) -> Result<Verdict> {
    let mut v = Verdict::new();
    let ms = kp_vectors(&table.order, nu);
    let kp = kostant_partition(rs, nu);
    v.check(ms.len() as u64 == kp, || format!("{nu:?}: {} monomials, partition count {kp}", ms.len()));
    let xs: Vec<ShuffleElement> = ms.iter().map(|m| table.standard_character(rs, m)).collect();
    let mut words: Vec<&Word> = xs.iter().flat_map(|x| x.support()).collect();
    words.sort();
    words.dedup();
    let mat: Vec<Vec<RatFunc>> =
        words.iter().map(|w| xs.iter().map(|x| RatFunc::from_poly(x.coeff(w))).collect()).collect();
    let r = linalg::rank(&mat);
    v.check(r == xs.len(), || format!("{nu:?}: rank {r} of {} monomials", xs.len()));
    if with_form {
        let g = gram.transported_gram(&xs, &xs)?;
        for i in 0..xs.len() {
            for j in 0..xs.len() {
                if i != j {
                    v.check(g[i][j].is_zero(), || {
                        format!("{nu:?}: ({}, {})' = {}", ms[i].label(), ms[j].label(), g[i][j])
                    });
                }
            }
        }
        if let Some(k) = table.order.position(nu) {
            let i = ms.iter().position(|m| *m == KpVector::unit(table.order.len(), k)).unwrap();
            let expect = RatFunc::from_poly(&LaurentPoly::one() - &LaurentPoly::q_pow(rs.cartan().pair(nu, nu)));
            v.check(g[i][i] == expect, || format!("{nu:?}: norm {}", g[i][i]));
        }
    }
    Ok(v)
}

/// `(E_alpha^*, E_alpha^*)' = 1 - q^{alpha.alpha}`.
pub fn check_root_norm(rs: &RootSystem, table: &CuspidalTable, gram: &GramCache, alpha: &[i64]) -> Result<Verdict> {
    let mut v = Verdict::new();
    let x = table.get(alpha);
    let val = gram.transported_form(x, x)?;
    let expect = RatFunc::from_poly(&LaurentPoly::one() - &LaurentPoly::q_pow(rs.cartan().pair(alpha, alpha)));
    v.check(val == expect, || format!("{alpha:?}: norm {val}"));
    Ok(v)
}

/// The good word of every root lies in the support of its cuspidal character.
pub fn check_good_words(table: &CuspidalTable, words: &std::collections::HashMap<Root, Vec<usize>>) -> Verdict {
    let mut v = Verdict::new();
    for (a, x) in table.entries() {
        let w = &words[a];
        v.check(!x.coeff(w).is_zero(), || format!("{a:?}: good word {} not in support", word_string(w)));
    }
    v
}
