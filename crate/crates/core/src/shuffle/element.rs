use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qarith::LaurentPoly;
use crate::rootsys::{parse_word, word_string};

pub type Word = Vec<usize>;

/// Weight of a word in `N I` for an index set of size `rank`.
pub fn word_weight(w: &[usize], rank: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    for &i in w {
        v[i] += 1;
    }
    v
}

/// A homogeneous element of the quantum shuffle algebra: a finitely
/// supported map from words of a fixed weight to Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ShuffleRepr", into = "ShuffleRepr")]
pub struct ShuffleElement {
    weight: Vec<i64>,
    terms: BTreeMap<Word, LaurentPoly>,
}

impl ShuffleElement {
    pub fn zero(weight: Vec<i64>) -> Self {
        Self { weight, terms: BTreeMap::new() }
    }

    /// The empty word with coefficient 1.
    pub fn one(rank: usize) -> Self {
        Self::word(&[], rank)
    }

    pub fn word(w: &[usize], rank: usize) -> Self {
        Self::monomial(w, LaurentPoly::one(), rank)
    }

    pub fn monomial(w: &[usize], c: LaurentPoly, rank: usize) -> Self {
        let mut x = Self::zero(word_weight(w, rank));
        x.add_term(w.to_vec(), c);
        x
    }

    pub fn from_terms(weight: Vec<i64>, terms: impl IntoIterator<Item = (Word, LaurentPoly)>) -> Result<Self> {
        let mut x = Self::zero(weight);
        for (w, c) in terms {
            if word_weight(&w, x.weight.len()) != x.weight {
                return Err(Error::Weight(format!("word {} does not have weight {:?}", word_string(&w), x.weight)));
            }
            x.add_term(w, c);
        }
        Ok(x)
    }

    /// Adds `c` to the coefficient of `w`, dropping zeros. The caller
    /// guarantees that `w` has the right weight.
    pub fn add_term(&mut self, w: Word, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn weight(&self) -> &[i64] {
        &self.weight
    }

    pub fn rank(&self) -> usize {
        self.weight.len()
    }

    pub fn height(&self) -> i64 {
        self.weight.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[usize]) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    fn check_same_weight(&self, o: &Self) -> Result<()> {
        if self.weight != o.weight && !self.is_zero() && !o.is_zero() {
            return Err(Error::Weight(format!("{:?} vs {:?}", self.weight, o.weight)));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same_weight(o)?;
        let mut out = if self.is_zero() { Self::zero(o.weight.clone()) } else { self.clone() };
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.weight.clone());
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { weight: self.weight.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), c.shift(k))).collect() }
    }

    pub fn bar(&self) -> Self {
        Self { weight: self.weight.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), c.bar())).collect() }
    }

    /// Coefficient-wise evaluation at `q = 1`, dropping words that vanish.
    pub fn specialize_q1(&self) -> BTreeMap<Word, BigInt> {
        self.terms.iter().map(|(w, c)| (w.clone(), c.eval_at_one())).filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_bar_invariant)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_nonnegative)
    }

    /// gcd of all integer coefficients.
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(&c.content()))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.values().filter_map(LaurentPoly::min_exp).min()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.values().filter_map(LaurentPoly::max_exp).max()
    }

    /// If `self = q^k other` for some `k`, returns `k`.
    pub fn q_power_ratio(&self, other: &Self) -> Option<i64> {
        if self.is_zero() || other.is_zero() || self.len() != other.len() {
            return None;
        }
        let k = self.min_exp()? - other.min_exp()?;
        (*self == other.shift(k)).then_some(k)
    }

    /// If `self = c * other` for a Laurent polynomial `c`, returns `c`.
    pub fn poly_ratio(&self, other: &Self) -> Option<LaurentPoly> {
        if other.is_zero() {
            return self.is_zero().then(LaurentPoly::zero);
        }
        let (w, d) = other.terms.iter().next()?;
        let c = self.coeff(w).div_exact(d)?;
        (other.scale(&c) == *self).then_some(c)
    }

    /// All splittings `w = w1 w2` with `weight(w1) = lambda`, `weight(w2) = mu`.
    pub fn deconcat(&self, lambda: &[i64], mu: &[i64]) -> Result<Vec<(Word, Word, LaurentPoly)>> {
        let total: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a + b).collect();
        if total != self.weight || lambda.iter().chain(mu).any(|&x| x < 0) {
            return Err(Error::Weight(format!("{lambda:?} + {mu:?} does not equal {:?}", self.weight)));
        }
        let k: i64 = lambda.iter().sum();
        let rank = self.rank();
        Ok(self
            .terms
            .iter()
            .filter(|(w, _)| word_weight(&w[..k as usize], rank) == lambda)
            .map(|(w, c)| (w[..k as usize].to_vec(), w[k as usize..].to_vec(), c.clone()))
            .collect())
    }

    /// The deconcatenation component as an element of the tensor square,
    /// keyed by the pair of words.
    pub fn restrict(&self, lambda: &[i64], mu: &[i64]) -> Result<BTreeMap<(Word, Word), LaurentPoly>> {
        Ok(self.deconcat(lambda, mu)?.into_iter().map(|(a, b, c)| ((a, b), c)).collect())
    }

    /// Iterated deconcatenation along a sequence of weights, returned as a
    /// map from word tuples.
    pub fn restrict_many(&self, parts: &[Vec<i64>]) -> Result<BTreeMap<Vec<Word>, LaurentPoly>> {
        let mut total = vec![0; self.rank()];
        for p in parts {
            for (t, x) in total.iter_mut().zip(p) {
                *t += x;
            }
        }
        if total != self.weight {
            return Err(Error::Weight(format!("parts do not add up to {:?}", self.weight)));
        }
        let rank = self.rank();
        let mut out = BTreeMap::new();
        'words: for (w, c) in &self.terms {
            let mut pieces = Vec::with_capacity(parts.len());
            let mut start = 0usize;
            for p in parts {
                let len = p.iter().sum::<i64>() as usize;
                let piece = &w[start..start + len];
                if word_weight(piece, rank) != *p {
                    continue 'words;
                }
                pieces.push(piece.to_vec());
                start += len;
            }
            out.insert(pieces, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(
                |(w, c)| {
                    if c.is_one() {
                        format!("({})", word_string(w))
                    } else {
                        format!("({c})({})", word_string(w))
                    }
                },
            )
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct ShuffleRepr {
    weight: Vec<i64>,
    terms: BTreeMap<String, LaurentPoly>,
}

impl From<ShuffleElement> for ShuffleRepr {
    fn from(x: ShuffleElement) -> Self {
        Self { weight: x.weight, terms: x.terms.into_iter().map(|(w, c)| (word_string(&w), c)).collect() }
    }
}

impl TryFrom<ShuffleRepr> for ShuffleElement {
    type Error = Error;
    fn try_from(r: ShuffleRepr) -> Result<Self> {
        let mut terms = Vec::new();
        for (k, c) in r.terms {
            let w = parse_word(&k).ok_or_else(|| Error::Parse(format!("bad word `{k}`")))?;
            if w.iter().any(|&i| i >= r.weight.len()) {
                return Err(Error::Parse(format!("letter out of range in `{k}`")));
            }
            terms.push((w, c));
        }
        ShuffleElement::from_terms(r.weight, terms)
    }
}
