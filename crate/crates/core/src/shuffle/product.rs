use std::collections::HashMap;

use super::{ShuffleElement, Word};
use crate::qarith::LaurentPoly;
use crate::rootsys::CartanDatum;

/// All interleavings of `u` and `v` with their twist exponents, collected as
/// `w -> sum q^e(A,B)` where `e(A,B) = -sum_{a in A, b in B, a > b} w_a . w_b`
/// and `A` are the positions taken by `u`.
pub fn shuffle_words(c: &CartanDatum, u: &[usize], v: &[usize]) -> HashMap<Word, LaurentPoly> {
    let mut raw: HashMap<Word, HashMap<i64, i64>> = HashMap::new();
    let mut w = Vec::with_capacity(u.len() + v.len());
    // placed[i] = i . (sum of letters of v placed so far)
    let mut placed = vec![0i64; c.rank()];
    go(c, u, v, 0, 0, 0, &mut w, &mut placed, &mut raw);
    raw.into_iter()
        .map(|(w, es)| (w, LaurentPoly::from_terms(es.into_iter().filter(|(_, n)| *n != 0))))
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn go(
    c: &CartanDatum,
    u: &[usize],
    v: &[usize],
    a: usize,
    b: usize,
    e: i64,
    w: &mut Word,
    placed: &mut [i64],
    out: &mut HashMap<Word, HashMap<i64, i64>>,
) {
    if a == u.len() && b == v.len() {
        *out.entry(w.clone()).or_default().entry(e).or_insert(0) += 1;
        return;
    }
    if a < u.len() {
        let x = u[a];
        w.push(x);
        go(c, u, v, a + 1, b, e - placed[x], w, placed, out);
        w.pop();
    }
    if b < v.len() {
        let y = v[b];
        w.push(y);
        for (i, p) in placed.iter_mut().enumerate() {
            *p += c.dot(i, y);
        }
        go(c, u, v, a, b + 1, e, w, placed, out);
        for (i, p) in placed.iter_mut().enumerate() {
            *p -= c.dot(i, y);
        }
        w.pop();
    }
}

/// The twisted shuffle product, dual to the coproduct `r`.
pub fn shuffle_product(c: &CartanDatum, x: &ShuffleElement, y: &ShuffleElement) -> ShuffleElement {
    let weight: Vec<i64> = x.weight().iter().zip(y.weight()).map(|(a, b)| a + b).collect();
    let mut acc: HashMap<Word, LaurentPoly> = HashMap::new();
    for (u, cu) in x.terms() {
        for (v, cv) in y.terms() {
            let prod = cu * cv;
            for (w, p) in shuffle_words(c, u, v) {
                let t = &p * &prod;
                match acc.get_mut(&w) {
                    Some(s) => *s += &t,
                    None => {
                        acc.insert(w, t);
                    }
                }
            }
        }
    }
    let mut out = ShuffleElement::zero(weight);
    for (w, p) in acc {
        out.add_term(w, p);
    }
    out
}

/// Product of several elements, left to right.
pub fn shuffle_many<'a>(c: &CartanDatum, xs: impl IntoIterator<Item = &'a ShuffleElement>) -> ShuffleElement {
    let mut acc = ShuffleElement::one(c.rank());
    for x in xs {
        acc = shuffle_product(c, &acc, x);
    }
    acc
}

/// `r(E_jj)` as a list of `(u, v, coefficient)` obtained by multiplying out
/// `r(E_j) = E_j (x) 1 + 1 (x) E_j` in the twisted tensor square, where
/// `(x1 (x) x2)(y1 (x) y2) = q^{-|x2|.|y1|} x1 y1 (x) x2 y2`.
pub fn twisted_coproduct(c: &CartanDatum, jj: &[usize]) -> Vec<(Word, Word, LaurentPoly)> {
    let rank = c.rank();
    let mut cur: HashMap<(Word, Word), LaurentPoly> = HashMap::new();
    cur.insert((vec![], vec![]), LaurentPoly::one());
    for &j in jj {
        let mut next: HashMap<(Word, Word), LaurentPoly> = HashMap::new();
        for ((x1, x2), coef) in cur {
            // (x1 (x) x2)(E_j (x) 1): twist by |x2| . j
            let x2w = super::word_weight(&x2, rank);
            let e = -c.pair(&x2w, &c.simple(j));
            let mut l = x1.clone();
            l.push(j);
            let t = coef.shift(e);
            *next.entry((l, x2.clone())).or_default() += &t;
            // (x1 (x) x2)(1 (x) E_j): no twist
            let mut r = x2;
            r.push(j);
            *next.entry((x1, r)).or_default() += &coef;
        }
        cur = next;
    }
    let mut out: Vec<(Word, Word, LaurentPoly)> =
        cur.into_iter().filter(|(_, c)| !c.is_zero()).map(|((a, b), c)| (a, b, c)).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a2() -> CartanDatum {
        CartanDatum::named("A2").unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn two_letter_products() {
        let c = a2();
        let x = shuffle_product(&c, &ShuffleElement::word(&[0], 2), &ShuffleElement::word(&[1], 2));
        assert_eq!(x.coeff(&[0, 1]), LaurentPoly::one());
        assert_eq!(x.coeff(&[1, 0]), lp("q"));
        assert_eq!(x.len(), 2);
        let y = shuffle_product(&c, &ShuffleElement::word(&[0], 2), &ShuffleElement::word(&[0], 2));
        assert_eq!(y.coeff(&[0, 0]), lp("1 + q^-2"));
    }

    #[test]
    fn unit() {
        let c = a2();
        let x = ShuffleElement::from_terms(vec![1, 1], [(vec![0, 1], lp("q")), (vec![1, 0], lp("2"))]).unwrap();
        assert_eq!(shuffle_product(&c, &x, &ShuffleElement::one(2)), x);
        assert_eq!(shuffle_product(&c, &ShuffleElement::one(2), &x), x);
    }

    fn arb_element(rank: usize) -> impl Strategy<Value = ShuffleElement> {
        (1usize..=2).prop_flat_map(move |len| {
            prop::collection::vec(
                (prop::collection::vec(0..rank, len), -2i64..3, prop_oneof![Just(-1i64), Just(1), Just(2)]),
                1..3,
            )
            .prop_map(move |terms| {
                let w0 = super::super::word_weight(&terms[0].0, rank);
                let mut x = ShuffleElement::zero(w0.clone());
                for (w, e, c) in terms {
                    if super::super::word_weight(&w, rank) == w0 {
                        x.add_term(w, LaurentPoly::monomial(c, e));
                    }
                }
                x
            })
        })
    }

    proptest! {
        #[test]
        fn associative(x in arb_element(3), y in arb_element(3), z in arb_element(3)) {
            let c = CartanDatum::named("B3").unwrap();
            let l = shuffle_product(&c, &shuffle_product(&c, &x, &y), &z);
            let r = shuffle_product(&c, &x, &shuffle_product(&c, &y, &z));
            prop_assert_eq!(&l, &r);
            let expected: Vec<i64> = (0..3).map(|i| x.weight()[i] + y.weight()[i] + z.weight()[i]).collect();
            if !l.is_zero() {
                prop_assert_eq!(l.weight(), expected.as_slice());
            }
        }

        #[test]
        fn dual_to_coproduct(x in arb_element(2), y in arb_element(2)) {
            let c = CartanDatum::named("G2").unwrap();
            let p = shuffle_product(&c, &x, &y);
            let nu: Vec<i64> = (0..2).map(|i| x.weight()[i] + y.weight()[i]).collect();
            for w in super::super::words_of_weight(&nu) {
                let mut paired = LaurentPoly::zero();
                for (u, v, k) in twisted_coproduct(&c, &w) {
                    paired += &(&k * &(&x.coeff(&u) * &y.coeff(&v)));
                }
                prop_assert_eq!(p.coeff(&w), paired);
            }
        }
    }
}
