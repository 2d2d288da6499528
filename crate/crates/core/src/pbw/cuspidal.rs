use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qarith::{primitive_part_many, qfact, LaurentPoly};
use crate::rootsys::{height, ConvexOrder, KpVector, Root, RootSystem};
use crate::shuffle::{shuffle_product, ShuffleElement};

/// How a cuspidal character was normalized from its q-commutator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub beta: Root,
    pub gamma: Root,
    /// The Laurent polynomial divided out (lattice gcd times unit).
    pub divisor: LaurentPoly,
    /// gcd of the integer coefficients of the raw commutator.
    #[serde(serialize_with = "crate::qarith::serialize_bigint")]
    pub integer_content: BigInt,
}

/// The cuspidal characters `E_alpha^*` for a convex order.
#[derive(Clone, Debug, Serialize)]
pub struct CuspidalTable {
    pub order: ConvexOrder,
    chars: Vec<ShuffleElement>,
    pub normalizations: Vec<Option<Normalization>>,
}

impl CuspidalTable {
    /// Builds the table by height, using for each non-simple root the
    /// minimal pair whose `gamma` is smallest in the order.
    pub fn build(rs: &RootSystem, order: &ConvexOrder) -> Result<Self> {
        Self::build_with(rs, order, |pairs| pairs[0].clone())
    }

    /// As [`CuspidalTable::build`] with a caller-chosen minimal pair.
    pub fn build_with(
        rs: &RootSystem,
        order: &ConvexOrder,
        choose: impl Fn(&[(Root, Root)]) -> (Root, Root),
    ) -> Result<Self> {
        let n = order.len();
        let mut by_height: Vec<usize> = (0..n).collect();
        by_height.sort_by_key(|&k| height(&order.roots()[k]));
        let mut chars: Vec<Option<ShuffleElement>> = vec![None; n];
        let mut normalizations = vec![None; n];
        for k in by_height {
            let alpha = &order.roots()[k];
            if let Some(i) = rs.simple_index(alpha) {
                chars[k] = Some(ShuffleElement::word(&[i], rs.rank()));
                continue;
            }
            let pairs = order.minimal_pairs(rs, alpha)?;
            let (beta, gamma) = choose(&pairs);
            let get = |r: &Root| chars[order.position(r).unwrap()].clone().expect("smaller roots first");
            let (x, norm) = cuspidal_from_pair(rs, &get(&beta), &get(&gamma), &beta, &gamma)?;
            chars[k] = Some(x);
            normalizations[k] = Some(norm);
        }
        Ok(Self { order: order.clone(), chars: chars.into_iter().map(Option::unwrap).collect(), normalizations })
    }

    pub fn get(&self, alpha: &[i64]) -> &ShuffleElement {
        &self.chars[self.order.position(alpha).expect("positive root")]
    }

    pub fn by_position(&self, k: usize) -> &ShuffleElement {
        &self.chars[k]
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Root, &ShuffleElement)> {
        self.order.roots().iter().zip(&self.chars)
    }

    /// `Delta(m)`: product of cuspidal powers along increasing roots.
    pub fn standard_character(&self, rs: &RootSystem, m: &KpVector) -> ShuffleElement {
        let c = rs.cartan();
        let mut acc = ShuffleElement::one(rs.rank());
        for (k, &mk) in m.0.iter().enumerate() {
            for _ in 0..mk {
                acc = shuffle_product(c, &acc, &self.chars[k]);
            }
        }
        acc
    }

    /// `nabla(m)`: product of cuspidal powers along decreasing roots.
    pub fn costandard_character(&self, rs: &RootSystem, m: &KpVector) -> ShuffleElement {
        let c = rs.cartan();
        let mut acc = ShuffleElement::one(rs.rank());
        for (k, &mk) in m.0.iter().enumerate().rev() {
            for _ in 0..mk {
                acc = shuffle_product(c, &acc, &self.chars[k]);
            }
        }
        acc
    }
}

/// `E_beta^* E_gamma^* - q^{beta.gamma} E_gamma^* E_beta^*`.
pub fn q_commutator(
    rs: &RootSystem,
    eb: &ShuffleElement,
    eg: &ShuffleElement,
    beta: &[i64],
    gamma: &[i64],
) -> Result<ShuffleElement> {
    let c = rs.cartan();
    let bg = shuffle_product(c, eb, eg);
    let gb = shuffle_product(c, eg, eb).shift(c.pair(beta, gamma));
    bg.sub(&gb)
}

/// Product of `[len]_i!` over the maximal runs `i^len` of `w`.
pub fn run_factorial(rs: &RootSystem, w: &[usize]) -> LaurentPoly {
    let c = rs.cartan();
    let mut out = LaurentPoly::one();
    let mut k = 0;
    while k < w.len() {
        let mut l = k;
        while l < w.len() && w[l] == w[k] {
            l += 1;
        }
        if l - k > 1 {
            out = &out * &qfact((l - k) as i64, c.dot(w[k], w[k])).expect("valid datum");
        }
        k = l;
    }
    out
}

/// gcd in `Z[q,q^-1]` of `x_w / prod [run]!`: the largest divisor keeping
/// `x` inside the integral form of the dual algebra.
pub fn lattice_gcd(rs: &RootSystem, x: &ShuffleElement) -> Result<LaurentPoly> {
    let mut g = LaurentPoly::zero();
    for (w, c) in x.terms() {
        let f = run_factorial(rs, w);
        let y =
            c.div_exact(&f).ok_or_else(|| Error::Invariant(format!("coefficient of {w:?} is not divisible by {f}")))?;
        g = if g.is_zero() { y.normalize_unit() } else { g.gcd(&y) };
    }
    Ok(g)
}

/// Normalizes the q-commutator of a minimal pair to the indivisible,
/// bar-invariant, positive representative.
pub fn cuspidal_from_pair(
    rs: &RootSystem,
    eb: &ShuffleElement,
    eg: &ShuffleElement,
    beta: &[i64],
    gamma: &[i64],
) -> Result<(ShuffleElement, Normalization)> {
    let comm = q_commutator(rs, eb, eg, beta, gamma)?;
    if comm.is_zero() {
        return Err(Error::Invariant(format!("q-commutator of {beta:?}, {gamma:?} vanishes")));
    }
    let integer_content = comm.content();
    let g = lattice_gcd(rs, &comm)?;
    let mut words = Vec::new();
    let mut coeffs = Vec::new();
    for (w, c) in comm.terms() {
        words.push(w.clone());
        coeffs.push(c.div_exact(&g).expect("gcd divides"));
    }
    // content is 1 after dividing by the lattice gcd; this picks the unit
    let pp = primitive_part_many(&coeffs)?;
    let mut sign = pp.sign;
    let mut part = pp.part;
    if !part.iter().all(LaurentPoly::is_nonnegative) {
        part = part.into_iter().map(|p| -p).collect();
        sign = -sign;
    }
    if !part.iter().all(LaurentPoly::is_nonnegative) {
        return Err(Error::Invariant(format!("no positive normalization for {:?}", sum(beta, gamma))));
    }
    if !part.iter().all(LaurentPoly::is_bar_invariant) {
        return Err(Error::Invariant(format!("no bar-invariant normalization for {:?}", sum(beta, gamma))));
    }
    let weight = comm.weight().to_vec();
    let x = ShuffleElement::from_terms(weight, words.into_iter().zip(part))?;
    // comm = divisor * x
    let unit = LaurentPoly::monomial(if sign < 0 { -BigInt::one() } else { BigInt::one() }, pp.unit_exp);
    let divisor = &(&g * &unit) * &LaurentPoly::constant(pp.content.clone());
    debug_assert!(pp.content.is_positive());
    Ok((x, Normalization { beta: beta.to_vec(), gamma: gamma.to_vec(), divisor, integer_content }))
}

fn sum(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// For each non-simple root, the normalized character obtained from every
/// minimal pair; used to test that the choice does not matter.
pub fn all_pair_characters(
    rs: &RootSystem,
    table: &CuspidalTable,
) -> Result<HashMap<Root, Vec<((Root, Root), ShuffleElement)>>> {
    let mut out = HashMap::new();
    for alpha in table.order.roots() {
        if rs.is_simple(alpha) {
            continue;
        }
        let mut v = Vec::new();
        for (b, g) in table.order.minimal_pairs(rs, alpha)? {
            let (x, _) = cuspidal_from_pair(rs, table.get(&b), table.get(&g), &b, &g)?;
            v.push(((b, g), x));
        }
        out.insert(alpha.clone(), v);
    }
    Ok(out)
}
