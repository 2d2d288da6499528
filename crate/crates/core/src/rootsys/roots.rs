use std::collections::{HashMap, HashSet};

use rand::Rng;

use super::CartanDatum;
use crate::error::{Error, Result};

/// Coordinates of an element of `Z I` in the basis of simple roots.
pub type Root = Vec<i64>;

/// A finite-type root system: the Cartan datum together with its positive
/// roots, sorted by height and then coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanDatum,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(cartan: CartanDatum) -> Self {
        let roots = positive_roots(&cartan);
        let index = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        Self { cartan, roots, index }
    }

    pub fn named(name: &str) -> Result<Self> {
        Ok(Self::new(CartanDatum::named(name)?))
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    /// Number of positive roots, i.e. the length of `w0`.
    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    /// Position of a positive root in [`RootSystem::positive_roots`].
    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_simple(&self, v: &[i64]) -> bool {
        height(v) == 1 && v.iter().all(|&x| x >= 0)
    }

    /// Index of the simple root `v`, if it is one.
    pub fn simple_index(&self, v: &[i64]) -> Option<usize> {
        if self.is_simple(v) {
            v.iter().position(|&x| x == 1)
        } else {
            None
        }
    }

    /// Checks that `word` is a reduced word for the longest element and
    /// reports the first position where the exchange condition fails.
    pub fn validate_reduced_word(&self, word: &[usize]) -> Result<()> {
        let r = self.rank();
        if let Some(&bad) = word.iter().find(|&&i| i >= r) {
            return Err(Error::NotReduced(format!("letter {bad} out of range for rank {r}")));
        }
        let mut w = WeylElement::identity(&self.cartan);
        for (k, &i) in word.iter().enumerate() {
            if !w.increases(i) {
                return Err(Error::NotReduced(format!("prefix {:?} is not reduced", &word[..=k])));
            }
            w.push(i);
        }
        if word.len() != self.num_positive() {
            return Err(Error::NotReduced(format!(
                "length {} differs from the number of positive roots {}",
                word.len(),
                self.num_positive()
            )));
        }
        Ok(())
    }

    /// A reduced word for `w0` chosen by a uniform random walk over the
    /// available length-increasing letters.
    pub fn random_reduced_word<R: Rng>(&self, rng: &mut R) -> Vec<usize> {
        let mut w = WeylElement::identity(&self.cartan);
        let mut word = Vec::with_capacity(self.num_positive());
        loop {
            let avail: Vec<usize> = (0..self.rank()).filter(|&i| w.increases(i)).collect();
            if avail.is_empty() {
                return word;
            }
            let i = avail[rng.gen_range(0..avail.len())];
            w.push(i);
            word.push(i);
        }
    }

    /// All reduced words for `w0`, stopping after `limit` words.
    pub fn reduced_words(&self, limit: usize) -> Vec<Vec<usize>> {
        fn go(w: &WeylElement, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
            if out.len() >= limit {
                return;
            }
            let mut extended = false;
            for i in 0..w.rank() {
                if w.increases(i) {
                    extended = true;
                    let mut w2 = w.clone();
                    w2.push(i);
                    word.push(i);
                    go(&w2, word, out, limit);
                    word.pop();
                }
            }
            if !extended {
                out.push(word.clone());
            }
        }
        let mut out = Vec::new();
        go(&WeylElement::identity(&self.cartan), &mut Vec::new(), &mut out, limit);
        out
    }

    /// A fixed reduced word for `w0`: the lexicographically smallest one.
    pub fn default_reduced_word(&self) -> Vec<usize> {
        let mut w = WeylElement::identity(&self.cartan);
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| w.increases(i)) {
            w.push(i);
            word.push(i);
        }
        word
    }

    /// All weights `0 <= mu <= nu` componentwise.
    pub fn sub_weights(nu: &[i64]) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &n in nu {
            out = out
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    (0..=n).map(move |k| {
                        let mut p = p.clone();
                        p.push(k);
                        p
                    })
                })
                .collect();
        }
        out
    }

    /// All weights in `N I` of the given height.
    pub fn weights_of_height(&self, h: i64) -> Vec<Vec<i64>> {
        fn go(r: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if cur.len() + 1 == r {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
                return;
            }
            for k in (0..=left).rev() {
                cur.push(k);
                go(r, left - k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self.rank(), h, &mut Vec::new(), &mut out);
        out
    }
}

pub fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

/// Orbit closure of the simple roots under simple reflections, keeping the
/// positive vectors.
fn positive_roots(c: &CartanDatum) -> Vec<Root> {
    let r = c.rank();
    let mut seen: HashSet<Root> = HashSet::new();
    let mut stack: Vec<Root> = (0..r).map(|i| c.simple(i)).collect();
    seen.extend(stack.iter().cloned());
    while let Some(v) = stack.pop() {
        for i in 0..r {
            let w = c.reflect(i, &v);
            if w.iter().all(|&x| x >= 0) && w.iter().any(|&x| x > 0) && seen.insert(w.clone()) {
                stack.push(w);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().collect();
    roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    roots
}

/// A Weyl group element stored as the images of the simple roots.
#[derive(Clone, Debug)]
pub struct WeylElement {
    cartan: CartanDatum,
    cols: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(c: &CartanDatum) -> Self {
        Self { cartan: c.clone(), cols: (0..c.rank()).map(|i| c.simple(i)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    /// Right multiplication by `s_i`.
    pub fn push(&mut self, i: usize) {
        let ci = self.cols[i].clone();
        for j in 0..self.rank() {
            let a = self.cartan.a(i, j);
            if a != 0 {
                for (x, y) in self.cols[j].iter_mut().zip(&ci) {
                    *x -= a * y;
                }
            }
        }
    }

    /// `l(w s_i) > l(w)`, i.e. `w(alpha_i) > 0`.
    pub fn increases(&self, i: usize) -> bool {
        self.cols[i].iter().all(|&x| x >= 0)
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.rank()];
        for (j, &c) in v.iter().enumerate() {
            for (o, x) in out.iter_mut().zip(&self.cols[j]) {
                *o += c * x;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn root_counts() {
        for (n, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
        ] {
            assert_eq!(RootSystem::named(n).unwrap().num_positive(), count, "{n}");
        }
    }

    #[test]
    fn a2_roots() {
        let rs = RootSystem::named("A2").unwrap();
        assert_eq!(rs.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn g2_highest_root() {
        let rs = RootSystem::named("G2").unwrap();
        assert!(rs.is_positive_root(&[3, 2]));
        assert!(rs.is_positive_root(&[3, 1]));
        assert!(!rs.is_positive_root(&[2, 2]));
    }

    #[test]
    fn reduced_word_counts() {
        let counts = [("A2", 2), ("B2", 2), ("G2", 2), ("A3", 16), ("B3", 42)];
        for (n, c) in counts {
            let rs = RootSystem::named(n).unwrap();
            let words = rs.reduced_words(usize::MAX);
            assert_eq!(words.len(), c, "{n}");
            for w in &words {
                rs.validate_reduced_word(w).unwrap();
            }
        }
    }

    #[test]
    fn validation_reports_prefix() {
        let rs = RootSystem::named("A2").unwrap();
        let err = rs.validate_reduced_word(&[0, 0, 1]).unwrap_err().to_string();
        assert!(err.contains("[0, 0]"), "{err}");
        assert!(rs.validate_reduced_word(&[0, 1]).is_err());
        assert!(rs.validate_reduced_word(&[0, 1, 0, 1]).is_err());
    }

    #[test]
    fn random_words_are_reduced() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in ["A3", "B3", "C3", "F4", "E6"] {
            let rs = RootSystem::named(n).unwrap();
            for _ in 0..5 {
                let w = rs.random_reduced_word(&mut rng);
                rs.validate_reduced_word(&w).unwrap();
            }
        }
    }

    #[test]
    fn weights_of_height_enumerates() {
        let rs = RootSystem::named("A3").unwrap();
        assert_eq!(rs.weights_of_height(2).len(), 6);
        assert!(rs.weights_of_height(2).iter().all(|w| height(w) == 2));
    }
}
