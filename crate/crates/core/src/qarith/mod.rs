//! Exact arithmetic in `Z[q, q^-1]` and `Q(q)`.

mod laurent;
mod ratfunc;

pub use laurent::{IntRepr, LaurentPoly};
pub use ratfunc::RatFunc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// The quantum integer `[n]_i` for a vertex with `i.i = d`, i.e. with
/// `q_i = q^(d/2)`: `q_i^(n-1) + q_i^(n-3) + ... + q_i^(1-n)`.
pub fn qint(n: i64, d: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::Domain(format!("quantum integer of negative n = {n}")));
    }
    check_even_positive(d)?;
    let half = d / 2;
    Ok(LaurentPoly::from_terms((0..n).map(|k| ((n - 1 - 2 * k) * half, 1))))
}

/// The quantum factorial `[n]_i! = [n]_i [n-1]_i ... [1]_i`.
pub fn qfact(n: i64, d: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::Domain(format!("quantum factorial of negative n = {n}")));
    }
    check_even_positive(d)?;
    let mut acc = LaurentPoly::one();
    for k in 1..=n {
        acc = &acc * &qint(k, d)?;
    }
    Ok(acc)
}

fn check_even_positive(d: i64) -> Result<()> {
    if d <= 0 || d % 2 != 0 {
        return Err(Error::Domain(format!("vertex norm {d} is not a positive even integer")));
    }
    Ok(())
}

/// `q -> q^-1`.
pub fn bar(f: &LaurentPoly) -> LaurentPoly {
    f.bar()
}

/// Decomposition `f = content * sign * q^unit_exp * part` with `part` having
/// coprime integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitivePart<T> {
    pub part: T,
    pub sign: i8,
    pub unit_exp: i64,
    pub content: BigInt,
}

/// Content extraction for a single Laurent polynomial; see [`primitive_part_many`].
pub fn primitive_part(f: &LaurentPoly) -> Result<PrimitivePart<LaurentPoly>> {
    let pp = primitive_part_many(std::slice::from_ref(f))?;
    Ok(PrimitivePart {
        part: pp.part.into_iter().next().unwrap(),
        sign: pp.sign,
        unit_exp: pp.unit_exp,
        content: pp.content,
    })
}

/// Removes the common integer content and a unit `±q^k` from a vector of
/// Laurent polynomials.
///
/// The power of `q` is chosen to make the vector bar-invariant when some
/// shift achieves that; otherwise the smallest exponent becomes 0. The sign
/// makes the first nonzero entry have a positive leading coefficient.
pub fn primitive_part_many(fs: &[LaurentPoly]) -> Result<PrimitivePart<Vec<LaurentPoly>>> {
    let content = fs.iter().fold(BigInt::zero(), |g, f| g.gcd(&f.content()));
    if content.is_zero() {
        return Err(Error::Domain("primitive part of zero".into()));
    }
    let lo = fs.iter().filter_map(LaurentPoly::min_exp).min().unwrap();
    let hi = fs.iter().filter_map(LaurentPoly::max_exp).max().unwrap();
    let reduced: Vec<LaurentPoly> = fs.iter().map(|f| f.div_int(&content)).collect();
    let symmetric_shift = if (lo + hi) % 2 == 0 { Some(-(lo + hi) / 2) } else { None };
    let shift = match symmetric_shift {
        Some(s) if reduced.iter().all(|f| f.shift(s).is_bar_invariant()) => s,
        _ => -lo,
    };
    let mut part: Vec<LaurentPoly> = reduced.iter().map(|f| f.shift(shift)).collect();
    let first = part.iter().find(|f| !f.is_zero()).unwrap();
    let sign: i8 = if first.leading_coeff().unwrap().is_negative() { -1 } else { 1 };
    if sign < 0 {
        part = part.into_iter().map(|f| -f).collect();
    }
    Ok(PrimitivePart { part, sign, unit_exp: -shift, content })
}

/// Serializes a big integer as a JSON number when it fits, else a string.
pub fn serialize_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&IntRepr(x.clone()), s)
}

impl LaurentPoly {
    /// Division of every coefficient by an integer that divides all of them.
    pub fn div_int(&self, c: &BigInt) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(e, x)| {
            debug_assert!((x % c).is_zero());
            (e, x / c)
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(qint(1, 2).unwrap(), LaurentPoly::one());
        assert_eq!(qint(2, 2).unwrap(), lp("q^-1 + q"));
        assert_eq!(qint(3, 4).unwrap(), lp("q^-4 + 1 + q^4"));
        assert_eq!(qint(0, 2).unwrap(), LaurentPoly::zero());
        assert!(qint(-1, 2).is_err());
        assert!(qint(2, 3).is_err());
        assert_eq!(qfact(3, 2).unwrap(), &qint(3, 2).unwrap() * &qint(2, 2).unwrap());
    }

    #[test]
    fn quantum_integer_identity() {
        for d in [2, 4, 6] {
            let h = d / 2;
            let qi_diff = &LaurentPoly::q_pow(h) - &LaurentPoly::q_pow(-h);
            for n in 1..=8 {
                let lhs = &qint(n, d).unwrap() * &qi_diff;
                let rhs = &LaurentPoly::q_pow(n * h) - &LaurentPoly::q_pow(-n * h);
                assert_eq!(lhs, rhs, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn bar_examples() {
        assert_eq!(bar(&lp("q^2")), lp("q^-2"));
        assert_eq!(bar(&lp("1 + q")), lp("1 + q^-1"));
    }

    #[test]
    fn display_and_parse() {
        let f = LaurentPoly::from_terms([(-2, 1), (0, 2), (2, 1)]);
        assert_eq!(f.to_string(), "q^-2 + 2 + q^2");
        assert_eq!(lp("-q^-1 + 3q - 2q^4").to_string(), "-q^-1 + 3q - 2q^4");
        assert_eq!(lp("0"), LaurentPoly::zero());
        assert!("q^".parse::<LaurentPoly>().is_err());
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, "[[-2,1],[0,2],[2,1]]");
        assert_eq!(serde_json::from_str::<LaurentPoly>(&json).unwrap(), f);
    }

    #[test]
    fn primitive_part_examples() {
        let p = primitive_part(&lp("2q^3")).unwrap();
        assert_eq!((p.part, p.unit_exp, p.content), (LaurentPoly::one(), 3, BigInt::from(2)));

        let p = primitive_part(&lp("q + q^-1")).unwrap();
        assert_eq!((p.part.clone(), p.unit_exp, p.content), (lp("q + q^-1"), 0, BigInt::from(1)));

        // not bar-invariant up to a shift: minimal exponent moved to 0
        let p = primitive_part(&lp("q - q^-1")).unwrap();
        assert_eq!(p.content, BigInt::from(1));
        assert_eq!(p.part, lp("q^2 - 1"));
        assert_eq!(p.unit_exp, -1);

        let p = primitive_part(&lp("-6q^5 - 6q^7")).unwrap();
        assert_eq!((p.part, p.sign, p.unit_exp, p.content), (lp("q^-1 + q"), -1, 6, BigInt::from(6)));

        assert!(primitive_part(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn gcd_and_division() {
        let a = lp("q - q^-1");
        let b = lp("q^2 - q^-2");
        let g = a.gcd(&b);
        assert_eq!(g, lp("q^2 - 1"));
        assert_eq!(b.div_exact(&a).unwrap(), lp("q + q^-1"));
        assert!(a.div_exact(&b).is_none());
        assert_eq!(lp("6q^2 + 6").gcd(&lp("4q^2 + 4")), lp("2 + 2q^2"));
    }

    #[test]
    fn ratfunc_basics() {
        let one_minus_q2 = lp("1 - q^2");
        let f = RatFunc::new(LaurentPoly::one(), one_minus_q2.clone());
        let g = &f * &RatFunc::from_poly(one_minus_q2.clone());
        assert_eq!(g, RatFunc::one());
        assert_eq!(g.as_poly(), Some(LaurentPoly::one()));
        let h = RatFunc::new(lp("q^2 - 1"), lp("q - q^-1"));
        assert_eq!(h.as_poly(), Some(lp("q")));
        assert_eq!(RatFunc::new(lp("2"), lp("4")), RatFunc::new(lp("1"), lp("2")));
    }

    fn arb_lp() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i64..5, -3i64..4), 0..5).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_lp(), b in arb_lp(), c in arb_lp()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn bar_is_ring_involution(a in arb_lp(), b in arb_lp()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        }

        #[test]
        fn display_roundtrip(a in arb_lp()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }

        #[test]
        fn ratfunc_matches_poly_arithmetic(a in arb_lp(), b in arb_lp()) {
            let (ra, rb) = (RatFunc::from_poly(a.clone()), RatFunc::from_poly(b.clone()));
            prop_assert_eq!((&ra + &rb).as_poly().unwrap(), &a + &b);
            prop_assert_eq!((&ra * &rb).as_poly().unwrap(), &a * &b);
            if !b.is_zero() {
                prop_assert_eq!(&(&ra / &rb) * &rb, ra.clone());
            }
        }

        #[test]
        fn gcd_divides_both(a in arb_lp(), b in arb_lp(), c in arb_lp()) {
            prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
            let (x, y) = (&a * &c, &b * &c);
            let g = x.gcd(&y);
            prop_assert!(x.div_exact(&g).is_some());
            prop_assert!(y.div_exact(&g).is_some());
            prop_assert!(g.div_exact(&c.normalize_unit()).is_some());
        }
    }
}
