use std::collections::BTreeMap;

use super::ShuffleElement;
use crate::error::{Error, Result};
use crate::linalg;
use crate::pbw::CuspidalTable;
use crate::qarith::{LaurentPoly, RatFunc};
use crate::rootsys::{kp_vectors, KpVector, RootSystem};

/// Coefficients of `x` in the basis of dual PBW monomials
/// `E_{alpha_1}^{*m_1} ... E_{alpha_N}^{*m_N}` of its weight.
pub fn expand_in_dual_pbw(
    rs: &RootSystem,
    x: &ShuffleElement,
    table: &CuspidalTable,
) -> Result<BTreeMap<KpVector, LaurentPoly>> {
    if x.is_zero() {
        return Ok(BTreeMap::new());
    }
    let ms = kp_vectors(&table.order, x.weight());
    let monomials: Vec<ShuffleElement> = ms.iter().map(|m| table.standard_character(rs, m)).collect();
    let coeffs = solve_in_span(&monomials, x)?
        .ok_or_else(|| Error::Inconsistent("element is not in the span of the dual PBW monomials".into()))?;
    let mut out = BTreeMap::new();
    for (m, c) in ms.into_iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let p = c.as_poly().ok_or_else(|| {
            Error::Inconsistent(format!("coefficient {c} at {} is not a Laurent polynomial", m.label()))
        })?;
        out.insert(m, p);
    }
    Ok(out)
}

/// Solves `sum c_k basis_k = x` over `Q(q)` on word coefficients; returns
/// `None` when `x` is outside the span. Errors if the basis is dependent.
pub fn solve_in_span(basis: &[ShuffleElement], x: &ShuffleElement) -> Result<Option<Vec<RatFunc>>> {
    let mut words: Vec<&Vec<usize>> = basis.iter().flat_map(|b| b.support()).chain(x.support()).collect();
    words.sort();
    words.dedup();
    let a: Vec<Vec<RatFunc>> =
        words.iter().map(|w| basis.iter().map(|b| RatFunc::from_poly(b.coeff(w))).collect()).collect();
    if linalg::rank(&a) < basis.len() {
        return Err(Error::Inconsistent("dual PBW monomials are linearly dependent".into()));
    }
    let rhs: Vec<RatFunc> = words.iter().map(|w| RatFunc::from_poly(x.coeff(w))).collect();
    Ok(linalg::solve(&a, &rhs, &RatFunc::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::ConvexOrder;
    use crate::shuffle::shuffle_product;

    #[test]
    fn monomials_expand_to_themselves() {
        let rs = RootSystem::named("B2").unwrap();
        let order = ConvexOrder::from_reduced_word(&rs, &rs.default_reduced_word()).unwrap();
        let t = CuspidalTable::build(&rs, &order).unwrap();
        for m in kp_vectors(&order, &[2, 2]) {
            let x = t.standard_character(&rs, &m);
            let e = expand_in_dual_pbw(&rs, &x, &t).unwrap();
            assert_eq!(e.len(), 1);
            assert_eq!(e[&m], LaurentPoly::one());
        }
        assert!(expand_in_dual_pbw(&rs, &ShuffleElement::zero(vec![1, 1]), &t).unwrap().is_empty());
    }

    #[test]
    fn power_of_root_vector() {
        let rs = RootSystem::named("A2").unwrap();
        let order = ConvexOrder::from_reduced_word(&rs, &[0, 1, 0]).unwrap();
        let t = CuspidalTable::build(&rs, &order).unwrap();
        let a = t.get(&[1, 1]).clone();
        let sq = shuffle_product(rs.cartan(), &a, &a);
        let e = expand_in_dual_pbw(&rs, &sq, &t).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&KpVector(vec![0, 2, 0])], LaurentPoly::one());
    }
}
