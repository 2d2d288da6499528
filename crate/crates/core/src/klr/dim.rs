//! Graded dimensions of `e_jj R(nu) e_ii`, truncated in polynomial degree.

use super::algebra::KlrAlgebra;
use super::polyrep::PolyRep;
use crate::qarith::LaurentPoly;

/// `sum q^deg(t)` over the normal-form terms `t` of `e_jj R(nu) e_ii` with
/// total `y`-degree at most `cap`. Words of different weight give 0.
pub fn graded_dim_hom_space(alg: &KlrAlgebra, ii: &[u8], jj: &[u8], cap: u32) -> LaurentPoly {
    let terms = alg.basis_terms(ii, jj, cap);
    LaurentPoly::from_terms(terms.iter().map(|t| (alg.degree(t), 1)))
}

/// Count of normal forms against the rank of the operators they define on
/// the polynomial representation. Equal counts mean the normal forms are
/// linearly independent in `R(nu)`.
pub fn dimension_oracle(alg: &KlrAlgebra, ii: &[u8], jj: &[u8], cap: u32) -> (usize, usize) {
    let terms = alg.basis_terms(ii, jj, cap);
    let n = ii.len() as u32;
    let rep = PolyRep::new(alg);
    let rank = rep.operator_rank(&terms, ii, cap + n * n.saturating_sub(1) / 2 + 1);
    (terms.len(), rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{CartanDatum, RootSystem};
    use crate::shuffle::words_of_weight;

    #[test]
    fn single_vertex_is_polynomial_ring() {
        let alg = KlrAlgebra::new(CartanDatum::named("B2").unwrap());
        assert_eq!(graded_dim_hom_space(&alg, &[0], &[0], 3), "1 + q^2 + q^4 + q^6".parse().unwrap());
        assert_eq!(graded_dim_hom_space(&alg, &[1], &[1], 2), "1 + q^4 + q^8".parse().unwrap());
        assert_eq!(graded_dim_hom_space(&alg, &[], &[], 5), LaurentPoly::one());
        assert!(graded_dim_hom_space(&alg, &[0], &[1], 5).is_zero());
    }

    #[test]
    fn nil_hecke_two_strands() {
        let alg = KlrAlgebra::new(CartanDatum::named("A2").unwrap());
        let s = graded_dim_hom_space(&alg, &[0, 0], &[0, 0], 0);
        assert_eq!(s, "1 + q^-2".parse().unwrap());
        assert_eq!(dimension_oracle(&alg, &[0, 0], &[0, 0], 0), (2, 2));
    }

    #[test]
    fn counts_match_oracle_small() {
        for name in ["A2", "B2"] {
            let rs = RootSystem::named(name).unwrap();
            let alg = KlrAlgebra::new(rs.cartan().clone());
            for h in 1..=2 {
                for nu in rs.weights_of_height(h) {
                    let words: Vec<Vec<u8>> =
                        words_of_weight(&nu).into_iter().map(|w| w.into_iter().map(|i| i as u8).collect()).collect();
                    for ii in &words {
                        for jj in &words {
                            let (c, r) = dimension_oracle(&alg, ii, jj, 2);
                            assert_eq!(c, r, "{name} {ii:?} {jj:?}");
                        }
                    }
                }
            }
        }
    }
}
