//! Symmetric-group realization of type A Weyl elements: permutations and
//! the k-subset cosets they cut out.

use crate::cartan::Gcm;
use crate::error::{Error, Result};
use crate::weyl::WeylElement;

/// Returns `n` when the GCM is the type A Cartan matrix of rank `n - 1`.
pub fn type_a_size(gcm: &Gcm) -> Option<usize> {
    let rank = gcm.rank();
    for i in 0..rank {
        for j in 0..rank {
            let expected = if i == j {
                2
            } else if i.abs_diff(j) == 1 {
                -1
            } else {
                0
            };
            if gcm.entry(i, j) != expected {
                return None;
            }
        }
    }
    Some(rank + 1)
}

/// One-line permutation of `{1..n}` (`out[j-1] = w(j)`), composing the word
/// letters left to right: each letter `i` swaps positions `i` and `i + 1`.
pub fn permutation(w: &WeylElement, n: usize) -> Result<Vec<usize>> {
    match type_a_size(w.gcm()) {
        Some(size) if size == n => {}
        _ => return Err(Error::MixedRootData),
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    for &i in w.word_internal() {
        perm.swap(i, i + 1);
    }
    Ok(perm)
}

/// The sorted image `w({1..k})`, the coset invariant in the k-subset order.
pub fn coset(perm: &[usize], k: usize) -> Vec<usize> {
    let mut subset: Vec<usize> = perm[..k].to_vec();
    subset.sort_unstable();
    subset
}

/// Componentwise order on equal-size sorted subsets.
pub fn subset_leq(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}
