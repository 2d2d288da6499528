//! Permutations of `n` positions stored as `img`: the result of applying the
//! permutation to the sequence `0, 1, ..., n-1`, so that `w . ii = (ii[img[j]])_j`.

pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

pub fn is_identity(w: &[u8]) -> bool {
    w.iter().enumerate().all(|(j, &x)| x as usize == j)
}

/// `s_k w`: swap positions `k` and `k+1` of the image.
pub fn left_mul(k: usize, w: &[u8]) -> Perm {
    let mut v = w.to_vec();
    v.swap(k, k + 1);
    v
}

/// Number of inversions.
pub fn length(w: &[u8]) -> usize {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                n += 1;
            }
        }
    }
    n
}

/// Is `k` a left descent, i.e. `l(s_k w) < l(w)`?
pub fn is_left_descent(k: usize, w: &[u8]) -> bool {
    w[k] > w[k + 1]
}

/// The lexicographically smallest reduced word: repeatedly strip the
/// smallest left descent.
pub fn reduced_word(w: &[u8]) -> Vec<u8> {
    let mut v = w.to_vec();
    let mut out = Vec::new();
    while let Some(k) = (0..v.len().saturating_sub(1)).find(|&k| v[k] > v[k + 1]) {
        out.push(k as u8);
        v.swap(k, k + 1);
    }
    out
}

/// The permutation of a word of simple transpositions `s_{k_1} ... s_{k_m}`.
pub fn from_word(n: usize, word: &[u8]) -> Perm {
    let mut v = identity(n);
    for &k in word.iter().rev() {
        v.swap(k as usize, k as usize + 1);
    }
    v
}

/// `w . ii`
pub fn act<T: Copy>(w: &[u8], ii: &[T]) -> Vec<T> {
    w.iter().map(|&j| ii[j as usize]).collect()
}

/// Composition `a b` (apply `b` first).
pub fn compose(a: &[u8], b: &[u8]) -> Perm {
    a.iter().map(|&j| b[j as usize]).collect()
}

/// All permutations of `n` elements.
pub fn all(n: usize) -> Vec<Perm> {
    fn go(n: usize, cur: &mut Perm, used: &mut [bool], out: &mut Vec<Perm>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x as u8);
                go(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One step of rewriting a reduced word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// swap the commuting letters at `p`, `p+1`
    Commute(usize),
    /// replace `a b a` at `p..p+3` by `b a b`
    Braid(usize),
}

/// Moves turning the reduced word `word` into the reduced word `target` of
/// the same permutation.
pub fn conversion(word: &[u8], target: &[u8]) -> Vec<Move> {
    let mut w = word.to_vec();
    let mut moves = Vec::new();
    for p in 0..target.len() {
        if w[p] != target[p] {
            front(&mut w, p, target[p], &mut moves);
        }
    }
    debug_assert_eq!(w, target);
    moves
}

/// Brings the left descent `k` of the element spelled by `w[start..]` to
/// position `start`.
fn front(w: &mut Vec<u8>, start: usize, k: u8, moves: &mut Vec<Move>) {
    let a = w[start];
    if a == k {
        return;
    }
    front(w, start + 1, k, moves);
    if a.abs_diff(k) >= 2 {
        w.swap(start, start + 1);
        moves.push(Move::Commute(start));
    } else {
        front(w, start + 2, a, moves);
        w[start] = k;
        w[start + 1] = a;
        w[start + 2] = k;
        moves.push(Move::Braid(start));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_spell_their_permutation() {
        for n in 1..=5 {
            for w in all(n) {
                let r = reduced_word(&w);
                assert_eq!(r.len(), length(&w));
                assert_eq!(from_word(n, &r), w);
            }
        }
    }

    #[test]
    fn action_on_words() {
        // phi_0 e_(a,b,c) = e_(b,a,c) phi_0
        let w = from_word(3, &[0]);
        assert_eq!(act(&w, &[7, 8, 9]), vec![8, 7, 9]);
        let w = from_word(3, &[0, 1]);
        assert_eq!(act(&w, &[7, 8, 9]), act(&from_word(3, &[0]), &act(&from_word(3, &[1]), &[7, 8, 9])));
        assert_eq!(compose(&from_word(3, &[0]), &from_word(3, &[1])), w);
    }

    #[test]
    fn conversions_reach_target() {
        let n = 5;
        for w in all(n) {
            let r = reduced_word(&w);
            // every reduced word obtained by bringing some descent to the front
            for k in 0..n - 1 {
                if is_left_descent(k, &w) {
                    let mut t = vec![k as u8];
                    t.extend(reduced_word(&left_mul(k, &w)));
                    let moves = conversion(&r, &t);
                    let mut cur = r.clone();
                    for m in moves {
                        match m {
                            Move::Commute(p) => {
                                assert!(cur[p].abs_diff(cur[p + 1]) >= 2);
                                cur.swap(p, p + 1);
                            }
                            Move::Braid(p) => {
                                assert_eq!(cur[p], cur[p + 2]);
                                assert_eq!(cur[p].abs_diff(cur[p + 1]), 1);
                                let (a, b) = (cur[p], cur[p + 1]);
                                cur[p] = b;
                                cur[p + 1] = a;
                                cur[p + 2] = b;
                            }
                        }
                    }
                    assert_eq!(cur, t);
                    let back = conversion(&t, &r);
                    assert!(back.len() <= 64);
                }
            }
        }
    }
}
