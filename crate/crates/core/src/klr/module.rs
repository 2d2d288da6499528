//! Finite-dimensional graded modules given by generator matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::algebra::{Gen, KlrAlgebra};
use super::expr::{parse_word, word_to_string};
use crate::error::{Error, Result};
use crate::qarith::LaurentPoly;
use crate::rootsys::CartanDatum;
use crate::shuffle::ShuffleElement;

pub type Vector = BTreeMap<usize, BigRational>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisVector {
    pub word: Vec<u8>,
    pub degree: i64,
}

/// A graded module over `R(nu)`. Column `j` of a generator matrix is the
/// image of basis vector `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteModule {
    pub nu: Vec<i64>,
    pub basis: Vec<BasisVector>,
    pub y: Vec<Vec<Vector>>,
    pub phi: Vec<Vec<Vector>>,
}

/// Field in which relations are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum GroundField {
    #[default]
    Rational,
    Prime(u64),
}

impl GroundField {
    pub fn is_zero(&self, x: &BigRational) -> bool {
        match self {
            GroundField::Rational => x.is_zero(),
            GroundField::Prime(p) => (x.numer() % BigInt::from(*p)).is_zero(),
        }
    }

    /// Entries must be representable in the field.
    fn admits(&self, x: &BigRational) -> bool {
        match self {
            GroundField::Rational => true,
            GroundField::Prime(p) => !(x.denom() % BigInt::from(*p)).is_zero(),
        }
    }
}

/// A failed relation and the basis vector on which it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: String,
    pub basis_index: usize,
    pub word: String,
    pub degree: i64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails on basis vector {} (word {}, degree {})",
            self.relation, self.basis_index, self.word, self.degree
        )
    }
}

pub fn add_into(acc: &mut Vector, v: &Vector, c: &BigRational) {
    if c.is_zero() {
        return;
    }
    for (&i, x) in v {
        let e = acc.entry(i).or_insert_with(BigRational::zero);
        *e += x * c;
        if e.is_zero() {
            acc.remove(&i);
        }
    }
}

pub fn unit(i: usize) -> Vector {
    Vector::from([(i, BigRational::one())])
}

impl FiniteModule {
    /// The module `R(0) = k`.
    pub fn empty(rank: usize) -> Self {
        FiniteModule { nu: vec![0; rank], basis: vec![BasisVector { word: vec![], degree: 0 }], y: vec![], phi: vec![] }
    }

    /// The one-dimensional module over `R(alpha_i)` on which `y_1` acts by 0.
    pub fn trivial(rank: usize, i: usize) -> Self {
        let mut nu = vec![0; rank];
        nu[i] = 1;
        FiniteModule {
            nu,
            basis: vec![BasisVector { word: vec![i as u8], degree: 0 }],
            y: vec![vec![Vector::new()]],
            phi: vec![],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn len(&self) -> usize {
        self.nu.iter().sum::<i64>() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn shift(&self, d: i64) -> Self {
        let mut m = self.clone();
        for b in &mut m.basis {
            b.degree += d;
        }
        m
    }

    /// `sum q^deg [word]` over the basis.
    pub fn character(&self) -> ShuffleElement {
        let mut ch = ShuffleElement::zero(self.nu.clone());
        for b in &self.basis {
            ch.add_term(b.word.iter().map(|&i| i as usize).collect(), LaurentPoly::q_pow(b.degree));
        }
        ch
    }

    pub fn act(&self, g: &Gen, v: &Vector) -> Vector {
        let mat = match g {
            Gen::Y(m) => &self.y[*m],
            Gen::Phi(k) => &self.phi[*k],
            Gen::E(ii) => {
                return v.iter().filter(|(&i, _)| &self.basis[i].word == ii).map(|(&i, x)| (i, x.clone())).collect();
            }
        };
        let mut out = Vector::new();
        for (&i, x) in v {
            add_into(&mut out, &mat[i], x);
        }
        out
    }

    /// `gens[0] gens[1] ... v`
    pub fn apply(&self, gens: &[Gen], v: &Vector) -> Vector {
        gens.iter().rev().fold(v.clone(), |acc, g| self.act(g, &acc))
    }

    /// Checks that words and degrees are compatible with the generators.
    pub fn check_shape(&self, cartan: &CartanDatum) -> Result<()> {
        let n = self.len();
        if self.nu.len() != cartan.rank() || self.nu.iter().any(|&x| x < 0) {
            return Err(Error::Shape(format!("weight {:?} does not match rank {}", self.nu, cartan.rank())));
        }
        if self.y.len() != n || self.phi.len() != n.saturating_sub(1) {
            return Err(Error::Shape(format!("expected {n} y-matrices and {} phi-matrices", n.saturating_sub(1))));
        }
        for (idx, b) in self.basis.iter().enumerate() {
            let mut w = vec![0i64; cartan.rank()];
            for &i in &b.word {
                if i as usize >= cartan.rank() {
                    return Err(Error::Shape(format!("basis vector {idx}: letter {i} out of range")));
                }
                w[i as usize] += 1;
            }
            if w != self.nu {
                return Err(Error::Shape(format!(
                    "basis vector {idx}: word {} has the wrong weight",
                    word_to_string(&b.word)
                )));
            }
        }
        for (kind, mats) in [("y", &self.y), ("phi", &self.phi)] {
            for (k, mat) in mats.iter().enumerate() {
                if mat.len() != self.dim() {
                    return Err(Error::Shape(format!(
                        "{kind}{} has {} columns, expected {}",
                        k + 1,
                        mat.len(),
                        self.dim()
                    )));
                }
                for (j, col) in mat.iter().enumerate() {
                    let src = &self.basis[j];
                    let (word, deg) = if kind == "y" {
                        let i = src.word[k] as usize;
                        (src.word.clone(), src.degree + cartan.dot(i, i))
                    } else {
                        let mut w = src.word.clone();
                        w.swap(k, k + 1);
                        (w, src.degree - cartan.dot(src.word[k] as usize, src.word[k + 1] as usize))
                    };
                    for (&i, x) in col {
                        if i >= self.dim() {
                            return Err(Error::Shape(format!("{kind}{}: row index {i} out of range", k + 1)));
                        }
                        if x.is_zero() {
                            continue;
                        }
                        let tgt = &self.basis[i];
                        if tgt.word != word || tgt.degree != deg {
                            return Err(Error::Shape(format!(
                                "{kind}{} maps basis vector {j} (word {}, degree {}) to basis vector {i} (word {}, degree {}); expected word {}, degree {deg}",
                                k + 1,
                                word_to_string(&src.word),
                                src.degree,
                                word_to_string(&tgt.word),
                                tgt.degree,
                                word_to_string(&word)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Every defining relation on every basis vector. Shape problems are
    /// returned as errors; failed relations as violations.
    pub fn verify(&self, alg: &KlrAlgebra, field: GroundField) -> Result<Vec<Violation>> {
        self.check_shape(alg.cartan())?;
        for mat in self.y.iter().chain(&self.phi) {
            for col in mat {
                if let Some(x) = col.values().find(|x| !field.admits(x)) {
                    return Err(Error::Shape(format!("entry {x} is not defined over {field:?}")));
                }
            }
        }
        let n = self.len();
        let mut out = Vec::new();
        for (idx, b) in self.basis.iter().enumerate() {
            let v = unit(idx);
            let ii = &b.word;
            let mut fail = |name: String| {
                out.push(Violation { relation: name, basis_index: idx, word: word_to_string(ii), degree: b.degree })
            };
            let mut check = |name: String, lhs: Vector, rhs: Vector| {
                let mut d = lhs;
                add_into(&mut d, &rhs, &-BigRational::one());
                if d.values().any(|x| !field.is_zero(x)) {
                    fail(name);
                }
            };
            for k in 0..n {
                for l in k + 1..n {
                    check(
                        format!("y{}y{} = y{}y{}", k + 1, l + 1, l + 1, k + 1),
                        self.apply(&[Gen::Y(k), Gen::Y(l)], &v),
                        self.apply(&[Gen::Y(l), Gen::Y(k)], &v),
                    );
                }
            }
            for k in 0..n.saturating_sub(1) {
                for l in k + 2..n.saturating_sub(1) {
                    check(
                        format!("s{}s{} = s{}s{}", k + 1, l + 1, l + 1, k + 1),
                        self.apply(&[Gen::Phi(k), Gen::Phi(l)], &v),
                        self.apply(&[Gen::Phi(l), Gen::Phi(k)], &v),
                    );
                }
                let (a, c) = (ii[k] as usize, ii[k + 1] as usize);
                let mut q = Vector::new();
                for (coef, pu, pv) in alg.q_poly(a, c) {
                    let mut gens = vec![Gen::Y(k); pu as usize];
                    gens.extend(vec![Gen::Y(k + 1); pv as usize]);
                    add_into(&mut q, &self.apply(&gens, &v), &BigRational::from_integer(coef.into()));
                }
                check(
                    format!("s{}^2 = Q(y{}, y{})", k + 1, k + 1, k + 2),
                    self.apply(&[Gen::Phi(k), Gen::Phi(k)], &v),
                    q,
                );
                for l in 0..n {
                    let sl = if l == k {
                        k + 1
                    } else if l == k + 1 {
                        k
                    } else {
                        l
                    };
                    let mut lhs = self.apply(&[Gen::Phi(k), Gen::Y(l)], &v);
                    add_into(&mut lhs, &self.apply(&[Gen::Y(sl), Gen::Phi(k)], &v), &-BigRational::one());
                    let rhs = match (a == c, l == k, l == k + 1) {
                        (true, true, _) => {
                            let mut r = v.clone();
                            r.insert(idx, -BigRational::one());
                            r
                        }
                        (true, _, true) => v.clone(),
                        _ => Vector::new(),
                    };
                    check(format!("s{}y{} - y{}s{}", k + 1, l + 1, sl + 1, k + 1), lhs, rhs);
                }
            }
            for k in 0..n.saturating_sub(2) {
                let mut lhs = self.apply(&[Gen::Phi(k + 1), Gen::Phi(k), Gen::Phi(k + 1)], &v);
                add_into(&mut lhs, &self.apply(&[Gen::Phi(k), Gen::Phi(k + 1), Gen::Phi(k)], &v), &-BigRational::one());
                let mut rhs = Vector::new();
                if ii[k] == ii[k + 2] {
                    for (coef, pu, pv) in alg.braid_defect(ii[k] as usize, ii[k + 1] as usize) {
                        let mut gens = vec![Gen::Y(k); pu as usize];
                        gens.extend(vec![Gen::Y(k + 2); pv as usize]);
                        add_into(&mut rhs, &self.apply(&gens, &v), &BigRational::from_integer(coef.into()));
                    }
                }
                check(format!("braid s{}s{}s{} - s{}s{}s{}", k + 2, k + 1, k + 2, k + 1, k + 2, k + 1), lhs, rhs);
            }
        }
        Ok(out)
    }

    /// Indices of basis vectors grouped by word.
    pub fn weight_spaces(&self) -> BTreeMap<Vec<u8>, Vec<usize>> {
        let mut out: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
        for (i, b) in self.basis.iter().enumerate() {
            out.entry(b.word.clone()).or_default().push(i);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let spaces = self.weight_spaces();
        let mut action = serde_json::Map::new();
        for (kind, mats) in [("y", &self.y), ("phi", &self.phi)] {
            for (k, mat) in mats.iter().enumerate() {
                let mut blocks = Vec::new();
                for (src, cols) in &spaces {
                    let mut by_target: BTreeMap<&Vec<u8>, ()> = BTreeMap::new();
                    for &j in cols {
                        for &i in mat[j].keys() {
                            by_target.insert(&self.basis[i].word, ());
                        }
                    }
                    for tgt in by_target.keys() {
                        let rows = &spaces[*tgt];
                        let matrix: Vec<Vec<Value>> = rows
                            .iter()
                            .map(|&i| cols.iter().map(|&j| rational_json(mat[j].get(&i))).collect())
                            .collect();
                        blocks.push(serde_json::json!({
                            "source": word_to_string(src),
                            "target": word_to_string(tgt),
                            "matrix": matrix,
                        }));
                    }
                }
                action.insert(format!("{kind}{}", k + 1), Value::Array(blocks));
            }
        }
        serde_json::json!({
            "nu": self.nu,
            "basis": self.basis.iter().map(|b| serde_json::json!({"word": word_to_string(&b.word), "degree": b.degree})).collect::<Vec<_>>(),
            "action": action,
        })
    }

    /// Reads the JSON layout written by [`FiniteModule::to_json`]. Blocks
    /// not listed act by zero.
    pub fn from_json(v: &Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            nu: Vec<i64>,
            basis: Vec<RawBasis>,
            #[serde(default)]
            action: BTreeMap<String, Vec<RawBlock>>,
        }
        #[derive(Deserialize)]
        struct RawBasis {
            word: String,
            degree: i64,
        }
        #[derive(Deserialize)]
        struct RawBlock {
            source: String,
            target: String,
            matrix: Vec<Vec<Value>>,
        }
        let raw: Raw = serde_json::from_value(v.clone())?;
        let basis: Vec<BasisVector> = raw
            .basis
            .iter()
            .map(|b| Ok(BasisVector { word: parse_word(&b.word)?, degree: b.degree }))
            .collect::<Result<_>>()?;
        let n = raw.nu.iter().sum::<i64>().max(0) as usize;
        let mut m = FiniteModule {
            nu: raw.nu,
            y: vec![vec![Vector::new(); basis.len()]; n],
            phi: vec![vec![Vector::new(); basis.len()]; n.saturating_sub(1)],
            basis,
        };
        let spaces = m.weight_spaces();
        for (name, blocks) in raw.action {
            let (kind, idx) = if let Some(r) = name.strip_prefix("phi") {
                ("phi", r)
            } else if let Some(r) = name.strip_prefix('y') {
                ("y", r)
            } else {
                return Err(Error::Parse(format!("unknown generator `{name}`")));
            };
            let k: usize = idx.parse().map_err(|_| Error::Parse(format!("bad generator `{name}`")))?;
            let mats = if kind == "y" { &mut m.y } else { &mut m.phi };
            if k == 0 || k > mats.len() {
                return Err(Error::Shape(format!("generator `{name}` out of range")));
            }
            for b in blocks {
                let empty = Vec::new();
                let cols = spaces.get(&parse_word(&b.source)?).unwrap_or(&empty);
                let rows = spaces.get(&parse_word(&b.target)?).unwrap_or(&empty);
                if b.matrix.len() != rows.len() || b.matrix.iter().any(|r| r.len() != cols.len()) {
                    return Err(Error::Shape(format!(
                        "{name} block {} -> {} should be {}x{}",
                        b.source,
                        b.target,
                        rows.len(),
                        cols.len()
                    )));
                }
                for (r, row) in b.matrix.iter().enumerate() {
                    for (c, x) in row.iter().enumerate() {
                        let x = parse_rational(x)?;
                        if !x.is_zero() {
                            mats[k - 1][cols[c]].insert(rows[r], x);
                        }
                    }
                }
            }
        }
        Ok(m)
    }
}

fn rational_json(x: Option<&BigRational>) -> Value {
    match x {
        None => Value::from(0),
        Some(x) if x.is_integer() => match i64::try_from(x.numer()) {
            Ok(i) => Value::from(i),
            Err(_) => Value::from(x.to_string()),
        },
        Some(x) => Value::from(x.to_string()),
    }
}

fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(|| Error::Parse(format!("matrix entry {n} is not an integer; use a string \"p/q\""))),
        Value::String(s) => {
            s.trim().parse::<BigRational>().map_err(|_| Error::Parse(format!("bad matrix entry `{s}`")))
        }
        _ => Err(Error::Parse(format!("bad matrix entry {v}"))),
    }
}

/// Scales a vector to have coprime integer entries with a positive first entry.
pub fn primitive_vector(v: &Vector) -> Vector {
    let den = v.values().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let num = v.values().fold(BigInt::zero(), |acc, x| acc.gcd(&(x.numer() * &den / x.denom())));
    if num.is_zero() {
        return v.clone();
    }
    let sign = if v.values().next().is_some_and(|x| x.is_negative()) { -1 } else { 1 };
    let scale = BigRational::new(den * sign, num);
    v.iter().map(|(&i, x)| (i, x * &scale)).collect()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::g2_module;
    use super::super::induce::induce;
    use super::*;
    use crate::shuffle::shuffle_product;

    fn g2() -> KlrAlgebra {
        KlrAlgebra::new(CartanDatum::named("G2").unwrap())
    }

    #[test]
    fn g2_fixture_is_a_module() {
        let m = g2_module();
        assert_eq!(m.verify(&g2(), GroundField::Rational).unwrap(), vec![]);
        assert_eq!(m.verify(&g2(), GroundField::Prime(2)).unwrap(), vec![]);
        assert_eq!(m.character().to_string(), "(q^-3 + q^-1 + q + q^3)(001) + (010)");
    }

    #[test]
    fn mutation_is_detected() {
        let mut m = g2_module();
        m.y[0][1] = unit(0);
        let v = m.verify(&g2(), GroundField::Rational).unwrap();
        assert!(!v.is_empty());
        assert!(v.iter().any(|x| x.relation.starts_with("s1y")), "{v:?}");
        // shape errors are not relation failures
        let mut m = g2_module();
        m.y[0][1] = unit(4);
        assert!(matches!(m.verify(&g2(), GroundField::Rational), Err(Error::Shape(_))));
    }

    #[test]
    fn other_vertex_order_up_to_rescaling() {
        let swapped = KlrAlgebra::with_order(CartanDatum::named("G2").unwrap(), &[1, 0]).unwrap();
        let m = g2_module();
        assert!(!m.verify(&swapped, GroundField::Rational).unwrap().is_empty());
        let mut m2 = m.clone();
        m2.phi[1][4] = Vector::from([(0, -BigRational::one())]);
        assert_eq!(m2.verify(&swapped, GroundField::Rational).unwrap(), vec![]);
    }

    #[test]
    fn json_roundtrip() {
        let m = g2_module();
        let j = m.to_json();
        let back = FiniteModule::from_json(&j).unwrap();
        assert_eq!(back, m);
        assert!(FiniteModule::from_json(
            &serde_json::json!({"nu": [1], "basis": [{"word": "0", "degree": 0}], "action": {"z1": []}})
        )
        .is_err());
    }

    #[test]
    fn trivial_modules_and_induction() {
        let alg = KlrAlgebra::new(CartanDatum::named("A2").unwrap());
        let (s0, s1) = (FiniteModule::trivial(2, 0), FiniteModule::trivial(2, 1));
        assert_eq!(s0.verify(&alg, GroundField::Rational).unwrap(), vec![]);
        let m = induce(&alg, &s0, &s1, 100).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.verify(&alg, GroundField::Rational).unwrap(), vec![]);
        assert_eq!(m.character(), shuffle_product(alg.cartan(), &s0.character(), &s1.character()));
        let e = FiniteModule::empty(2);
        assert_eq!(induce(&alg, &s0, &e, 100).unwrap(), s0);
        assert_eq!(induce(&alg, &e, &s1, 100).unwrap(), s1);
    }

    #[test]
    fn induction_of_g2_fixture() {
        let alg = g2();
        let m = g2_module();
        let s1 = FiniteModule::trivial(2, 1);
        let ind = induce(&alg, &m, &s1, 1000).unwrap();
        assert_eq!(ind.dim(), 20);
        assert_eq!(ind.verify(&alg, GroundField::Rational).unwrap(), vec![]);
        assert_eq!(ind.character(), shuffle_product(alg.cartan(), &m.character(), &s1.character()));
        let ind = induce(&alg, &s1, &m, 1000).unwrap();
        assert_eq!(ind.verify(&alg, GroundField::Rational).unwrap(), vec![]);
        assert_eq!(ind.character(), shuffle_product(alg.cartan(), &s1.character(), &m.character()));
    }
}
