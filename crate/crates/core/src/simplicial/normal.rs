//! Degeneracy words and the monotone surjections they encode.
//!
//! A simplex `s_{i1} ... s_{ik} x` (with `i1 > ... > ik`) of dimension `d` over a
//! nondegenerate `x` of dimension `e` corresponds to the monotone surjection
//! `[d] -> [e]` that repeats exactly the positions `{i1, ..., ik}`. Face and
//! degeneracy operators act on that surjection by deleting or duplicating an
//! entry, which is how renormalization is computed here.

/// Expands a normal-form word into the value sequence of its surjection `[dim] -> [dim - len]`.
pub(crate) fn word_to_seq(word: &[usize], dim: usize) -> Vec<usize> {
    let mut seq = Vec::with_capacity(dim + 1);
    let mut value = 0;
    for t in 0..=dim {
        seq.push(value);
        if t < dim && !word.contains(&t) {
            value += 1;
        }
    }
    seq
}

/// Reads the normal-form word (strictly decreasing) off a monotone surjection.
pub(crate) fn seq_to_word(seq: &[usize]) -> Vec<usize> {
    let mut word: Vec<usize> = seq.windows(2).enumerate().filter(|(_, w)| w[0] == w[1]).map(|(t, _)| t).collect();
    word.reverse();
    word
}

/// `outer ∘ inner` for sequences; `inner` values index into `outer`.
pub(crate) fn compose_seq(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&t| outer[t]).collect()
}

/// Checks that a word is strictly decreasing and that each degeneracy is applied
/// at a dimension where its index exists.
pub(crate) fn word_is_normal(word: &[usize], base_dim: usize) -> bool {
    if word.windows(2).any(|w| w[0] <= w[1]) {
        return false;
    }
    word.iter().rev().enumerate().all(|(m, &r)| r <= base_dim + m)
}

/// All normal-form words of the given length over a base of dimension `base_dim`,
/// in lexicographic order.
pub(crate) fn words(base_dim: usize, len: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    let dim = base_dim + len;
    if len == 0 {
        return vec![Vec::new()];
    }
    // Any subset of {0..dim-1} of the right size is a valid repeat set.
    let mut out: Vec<Vec<usize>> = (0..dim)
        .combinations(len)
        .map(|mut c| {
            c.reverse();
            c
        })
        .collect();
    out.sort();
    out
}
