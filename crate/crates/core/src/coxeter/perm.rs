//! Type `A_{n-1}` elements as permutations of `1..=n`.
//!
//! The generator `s_i` acts on one-line notation by swapping positions `i`
//! and `i + 1`, so the one-line form of `s_{a1} ⋯ s_{ak}` is obtained by
//! applying those swaps left to right to `1 2 ⋯ n`.

use super::{typed_coxeter_matrix, CoxeterSystem, Elem, Refl};
use crate::error::{Error, Result};

pub fn is_type_a(sys: &CoxeterSystem) -> bool {
    sys.coxeter_matrix() == typed_coxeter_matrix('A', sys.rank()).as_slice()
}

fn require_a(sys: &CoxeterSystem) -> Result<usize> {
    if is_type_a(sys) {
        Ok(sys.rank() + 1)
    } else {
        Err(Error::Precondition("system is not of type A".into()))
    }
}

/// One-line notation (values `1..=n`) of `w`.
pub fn permutation(sys: &CoxeterSystem, w: Elem) -> Result<Vec<usize>> {
    let n = require_a(sys)?;
    let mut p: Vec<usize> = (1..=n).collect();
    for s in sys.word(w) {
        p.swap(s, s + 1);
    }
    Ok(p)
}

/// One-line notation of every element, in element order.
pub fn all_permutations(sys: &CoxeterSystem) -> Result<Vec<Vec<usize>>> {
    sys.elements().map(|w| permutation(sys, w)).collect()
}

/// The element with one-line notation `p`.
pub fn element_of(sys: &CoxeterSystem, p: &[usize]) -> Result<Elem> {
    let n = require_a(sys)?;
    let mut sorted = p.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=n).collect::<Vec<_>>() {
        return Err(Error::Precondition(format!("{p:?} is not a permutation of 1..={n}")));
    }
    // Bubble sort: p s_{b1} ⋯ s_{bk} = id, so p = s_{bk} ⋯ s_{b1}.
    let mut q = p.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..n - 1).find(|&i| q[i] > q[i + 1]) {
        q.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    sys.word_to_element(&word)
}

/// Parse compact one-line notation such as `45123` (entries below 10).
pub fn parse_one_line(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.contains([',', ' ']) {
        return t
            .split([',', ' '])
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad permutation `{text}`"))))
            .collect();
    }
    t.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| Error::Parse(format!("bad permutation `{text}`")))
        })
        .collect()
}

/// The reflection of the transposition `(i j)`, 1-based.
pub fn transposition(sys: &CoxeterSystem, i: usize, j: usize) -> Result<Refl> {
    let n = require_a(sys)?;
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::Precondition(format!("({i},{j}) is not a transposition of 1..={n}")));
    }
    let mut p: Vec<usize> = (1..=n).collect();
    p.swap(i - 1, j - 1);
    sys.as_reflection(element_of(sys, &p)?)
}

/// Cycle type, parts in decreasing order.
pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] - 1;
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}
