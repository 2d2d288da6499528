//! Minimal pairs, self-extension elements and auxiliary words for the HMM
//! orders in types B3, C3, F4 and G2, plus the explicit G2 module.

use serde::Serialize;

use crate::error::Result;
use crate::pbw::Verdict;
use crate::rootsys::{hmm_order, parse_word, word_string, RootSystem};

/// One row: a root given by its good word, a minimal pair, the side whose
/// self-extension is used, the element `x` as a generator expression
/// (1-based `s<k>` for `phi_k`), and the auxiliary word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub table: &'static str,
    pub alpha: &'static str,
    pub gamma: &'static str,
    pub beta: &'static str,
    pub side: Option<Side>,
    pub x: Option<&'static str>,
    pub j: Option<&'static str>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Beta,
    Gamma,
}

const fn row(
    table: &'static str,
    alpha: &'static str,
    gamma: &'static str,
    beta: &'static str,
    side: Side,
    x: &'static str,
    j: &'static str,
) -> TableRow {
    TableRow { table, alpha, gamma, beta, side: Some(side), x: Some(x), j: Some(j) }
}

use Side::{Beta as B, Gamma as G};

pub const B3_ROWS: &[TableRow] = &[
    row("B3", "01", "0", "1", B, "s1^2", "10"),
    row("B3", "12", "1", "2", B, "s1^2", "21"),
    row("B3", "012", "01", "2", B, "s2^2", "021"),
    row("B3", "001", "0", "01", G, "s1 s2^2", "010"),
    row("B3", "0012", "0", "012", G, "s1 s2^2", "0102"),
    row("B3", "10012", "1", "0012", G, "s1^2", "01012"),
];

pub const C3_ROWS: &[TableRow] = &[
    row("C3", "01", "0", "1", G, "s1^2", "10"),
    row("C3", "12", "1", "2", B, "s1^2", "21"),
    row("C3", "012", "01", "2", B, "s2^2", "021"),
    row("C3", "101", "1", "01", G, "s1 s2 s1", "011"),
    row("C3", "1012", "1", "012", G, "s1 s2 s1", "0112"),
    row("C3", "01212", "012", "12", B, "s3 s2 s1^2 s2 s3", "10122"),
];

pub const F4_ROWS: &[TableRow] = &[
    row("F4", "0123", "0", "123", G, "s1^2", "1023"),
    row("F4", "1012", "1", "012", G, "s1 s2 s3^2 s2 s1", "0121"),
    row("F4", "01012", "01", "012", G, "s2 s3 s4^2 s3 s2", "00121"),
    row("F4", "10123", "1", "0123", G, "s1 s2 s3^2 s2 s1", "01213"),
    row("F4", "010123", "01", "0123", G, "s2 s3 s4^2 s3 s2", "001213"),
    row("F4", "210123", "2", "10123", G, "s1^2", "120123"),
    row("F4", "1210123", "1", "210123", G, "s1 s2 s3^2 s2 s1", "2101123"),
    row("F4", "2010123", "2", "010123", G, "s1 s2^2 s1", "0120123"),
    row("F4", "12010123", "12", "010123", B, "s4 s3 s5 s4 s2 s3^2 s2", "10120123"),
    row("F4", "112010123", "1", "12010123", G, "s1 s2^2", "121010123"),
    row("F4", "2112010123", "2", "112010123", G, "s1^2", "1212010123"),
    row("F4", "21012310123", "210123", "10123", G, "s6 s5 s4 s3 s2 s1^2 s2 s3 s4 s5 s6", "12101230123"),
];

pub const G2_ROWS: &[TableRow] = &[
    row("G2", "01", "0", "1", B, "s1^2", "10"),
    TableRow { table: "G2", alpha: "001", gamma: "0", beta: "01", side: Some(G), x: None, j: None },
    row("G2", "0001", "0", "001", G, "s3^2 s2 s1", "0010"),
    row("G2", "00101", "001", "01", G, "s2^2 s1 s3 s4 s2 s3", "01001"),
];

/// All rows of the named table (`B3`, `C3`, `F4`, `G2`).
pub fn table_rows(table: &str) -> Option<&'static [TableRow]> {
    match table {
        "B3" => Some(B3_ROWS),
        "C3" => Some(C3_ROWS),
        "F4" => Some(F4_ROWS),
        "G2" => Some(G2_ROWS),
        _ => None,
    }
}

pub fn all_table_rows() -> impl Iterator<Item = &'static TableRow> {
    B3_ROWS.iter().chain(C3_ROWS).chain(F4_ROWS).chain(G2_ROWS)
}

/// Compares the minimal pairs of the HMM order with the `gamma`, `beta`
/// columns of the rows, matching roots through their good words.
pub fn check_minimal_pairs(rs: &RootSystem, rows: &[TableRow]) -> Result<Verdict> {
    let hd = hmm_order(rs)?;
    let mut v = Verdict::new();
    let root = |w: &str| parse_word(w).and_then(|w| hd.root_of_word(&w).cloned());
    for r in rows {
        let (Some(a), Some(g), Some(b)) = (root(r.alpha), root(r.gamma), root(r.beta)) else {
            v.check(false, || format!("{} row {}: a word is not the good word of any root", r.table, r.alpha));
            continue;
        };
        let pairs = hd.order.minimal_pairs(rs, &a)?;
        v.check(pairs.contains(&(b.clone(), g.clone())), || {
            let found: Vec<String> = pairs
                .iter()
                .map(|(b, g)| format!("{} | {}", word_string(hd.word(g)), word_string(hd.word(b))))
                .collect();
            format!(
                "{} row {}: expected {} | {}, minimal pairs {}",
                r.table,
                r.alpha,
                r.gamma,
                r.beta,
                found.join(", ")
            )
        });
    }
    Ok(v)
}

/// The element identity in F4: `phi1 phi2 phi3^2 phi2 phi1 e(1012)` and its
/// normal form.
pub const F4_IDENTITY_LHS: &str = "s1 s2 s3^2 s2 s1 e(1012)";
pub const F4_IDENTITY_RHS: &str = "s1 s2^2 s1 y1^2 e(1012) - s2 s1 y1 s2 e(1012) - y1 e(1012) - s1 s2 s1 y3 e(1012)";

/// The five-dimensional `R(2 alpha_0 + alpha_1)`-module in type G2 with basis
/// `v001[3], v001[1], v001[-1], v001[-3], v010[0]`.
pub fn g2_module() -> super::module::FiniteModule {
    use super::module::{unit, BasisVector, FiniteModule, Vector};
    use num_rational::BigRational;
    let b = |w: &[u8], d: i64| BasisVector { word: w.to_vec(), degree: d };
    let basis = vec![b(&[0, 0, 1], 3), b(&[0, 0, 1], 1), b(&[0, 0, 1], -1), b(&[0, 0, 1], -3), b(&[0, 1, 0], 0)];
    let neg = |i: usize| Vector::from([(i, BigRational::from_integer((-1).into()))]);
    let z = Vector::new;
    FiniteModule {
        nu: vec![2, 1],
        basis,
        y: vec![
            vec![z(), neg(0), neg(1), neg(2), z()],
            vec![z(), unit(0), unit(1), unit(2), z()],
            vec![z(), z(), z(), z(), z()],
        ],
        phi: vec![vec![unit(1), z(), unit(3), z(), z()], vec![z(), z(), z(), unit(4), unit(0)]],
    }
}
