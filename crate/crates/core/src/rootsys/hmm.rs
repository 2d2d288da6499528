use std::cmp::Ordering;
use std::collections::HashMap;

use super::roots::height;
use super::{ConvexOrder, Root, RootSystem};
use crate::error::Result;

/// Good words `ii_alpha` for every positive root, together with the convex
/// order they induce.
///
/// Words are built right to left: with `L(alpha)` the reversed word, read
/// over the reversed alphabet `r-1 < ... < 1 < 0`,
/// `L(alpha) = max { L(beta) L(gamma) : alpha = beta + gamma, L(beta) < L(gamma) }`
/// and roots are ordered by `L`.
#[derive(Clone, Debug)]
pub struct HmmData {
    pub order: ConvexOrder,
    pub words: HashMap<Root, Vec<usize>>,
}

impl HmmData {
    pub fn word(&self, alpha: &[i64]) -> &[usize] {
        &self.words[alpha]
    }

    /// Root whose good word is `w`.
    pub fn root_of_word(&self, w: &[usize]) -> Option<&Root> {
        self.words.iter().find(|(_, v)| v.as_slice() == w).map(|(r, _)| r)
    }
}

fn cmp_reversed(r: usize, a: &[usize], b: &[usize]) -> Ordering {
    let key = |x: &usize| r - 1 - x;
    a.iter().map(key).cmp(b.iter().map(key))
}

pub fn hmm_order(rs: &RootSystem) -> Result<HmmData> {
    let r = rs.rank();
    let mut by_height: Vec<Root> = rs.positive_roots().to_vec();
    by_height.sort_by_key(|a| height(a));
    let mut rev: HashMap<Root, Vec<usize>> = HashMap::new();
    for alpha in &by_height {
        if let Some(i) = rs.simple_index(alpha) {
            rev.insert(alpha.clone(), vec![i]);
            continue;
        }
        let mut best: Option<Vec<usize>> = None;
        for beta in &by_height {
            if height(beta) >= height(alpha) {
                break;
            }
            let gamma: Vec<i64> = alpha.iter().zip(beta).map(|(x, y)| x - y).collect();
            let (Some(lb), Some(lg)) = (rev.get(beta), rev.get(&gamma)) else { continue };
            if cmp_reversed(r, lb, lg) != Ordering::Less {
                continue;
            }
            let cand: Vec<usize> = lb.iter().chain(lg).copied().collect();
            if best.as_ref().map_or(true, |b| cmp_reversed(r, &cand, b) == Ordering::Greater) {
                best = Some(cand);
            }
        }
        let best = best.expect("every non-simple root splits into two roots");
        rev.insert(alpha.clone(), best);
    }
    let mut roots = rs.positive_roots().to_vec();
    roots.sort_by(|a, b| cmp_reversed(r, &rev[a], &rev[b]));
    let order = ConvexOrder::from_roots(rs, roots)?;
    let words = rev
        .into_iter()
        .map(|(k, mut v)| {
            v.reverse();
            (k, v)
        })
        .collect();
    Ok(HmmData { order, words })
}

/// Renders a word over single-digit labels as a string like `0012`.
pub fn word_string(w: &[usize]) -> String {
    if w.iter().all(|&i| i < 10) {
        w.iter().map(|i| char::from(b'0' + *i as u8)).collect()
    } else {
        let parts: Vec<String> = w.iter().map(usize::to_string).collect();
        parts.join(",")
    }
}

/// Parses `0012` or `0,0,1,2`.
pub fn parse_word(s: &str) -> Option<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Some(Vec::new());
    }
    if s.contains(',') {
        s.split(',').map(|p| p.trim().parse().ok()).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words_of(name: &str) -> (RootSystem, HmmData) {
        let rs = RootSystem::named(name).unwrap();
        let h = hmm_order(&rs).unwrap();
        (rs, h)
    }

    fn nonsimple_words(rs: &RootSystem, h: &HmmData) -> Vec<String> {
        let mut v: Vec<String> =
            rs.positive_roots().iter().filter(|a| !rs.is_simple(a)).map(|a| word_string(h.word(a))).collect();
        v.sort();
        v
    }

    #[test]
    fn b2_words() {
        let (rs, h) = words_of("B2");
        assert_eq!(nonsimple_words(&rs, &h), vec!["001", "01"]);
    }

    #[test]
    fn g2_words_and_order() {
        let (rs, h) = words_of("G2");
        assert_eq!(nonsimple_words(&rs, &h), vec!["0001", "001", "00101", "01"]);
        let seq: Vec<String> = h.order.roots().iter().map(|a| word_string(h.word(a))).collect();
        assert_eq!(seq, vec!["1", "01", "00101", "001", "0001", "0"]);
    }

    #[test]
    fn b3_words() {
        let (rs, h) = words_of("B3");
        assert_eq!(nonsimple_words(&rs, &h), vec!["001", "0012", "01", "012", "10012", "12"]);
    }

    #[test]
    fn hmm_orders_convex() {
        for n in ["A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"] {
            let (rs, h) = words_of(n);
            assert!(h.order.is_convex(&rs), "{n}");
            h.order.reduced_word(&rs).unwrap();
        }
    }

    #[test]
    fn word_round_trip() {
        assert_eq!(parse_word("0012"), Some(vec![0, 0, 1, 2]));
        assert_eq!(parse_word("0,10"), Some(vec![0, 10]));
        assert_eq!(word_string(&[2, 1, 0]), "210");
        assert_eq!(parse_word("0x"), None);
    }
}
