//! Weyl group arithmetic on canonical reduced words, Bruhat order, cover
//! enumeration with reflection data, and saturated chain streams.
//!
//! Elements are stored as the lexicographically smallest reduced word, found
//! by acting on the rho coordinate vector with exact integers and repeatedly
//! extracting the smallest descent. Two words represent the same element
//! exactly when their canonical forms agree.

use crate::cartan::{real_root_orbit, Gcm};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// Handle to a Weyl group of a fixed symmetrizable GCM.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    gcm: Arc<Gcm>,
}

impl WeylGroup {
    pub fn new(gcm: Gcm) -> Self {
        WeylGroup { gcm: Arc::new(gcm) }
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            gcm: Arc::clone(&self.gcm),
            word: Vec::new(),
        }
    }

    /// Canonicalizes a word of 1-based simple reflection indices.
    pub fn element(&self, word: &[usize]) -> Result<WeylElement> {
        let rank = self.gcm.rank();
        let mut internal = Vec::with_capacity(word.len());
        for &i in word {
            if i < 1 || i > rank {
                return Err(Error::IndexOutOfRange(i, rank));
            }
            internal.push(i - 1);
        }
        Ok(WeylElement {
            gcm: Arc::clone(&self.gcm),
            word: canonical_word(&self.gcm, &internal),
        })
    }

    /// Parses space-separated 1-based indices; the empty string is the identity.
    pub fn element_from_str(&self, src: &str) -> Result<WeylElement> {
        let word = parse_word(src)?;
        self.element(&word)
    }

    pub fn simple(&self, i: usize) -> Result<WeylElement> {
        self.element(&[i])
    }

    /// All group elements, breadth-first by length. Only safe on finite types;
    /// generation stops with an error once `cap` elements are exceeded.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut out = vec![self.identity()];
        seen.insert(Vec::new());
        let mut frontier = vec![self.identity()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 1..=self.rank() {
                    let wi = w.multiply(&self.simple(i)?)?;
                    if seen.insert(wi.word.clone()) {
                        if out.len() >= cap {
                            return Err(Error::EnumerationCap(cap));
                        }
                        out.push(wi.clone());
                        next.push(wi);
                    }
                }
            }
            frontier = next;
        }
        out.sort_by_key(|w| (w.len(), w.word.clone()));
        Ok(out)
    }
}

/// A Weyl group element in canonical form (lex-least reduced word).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    gcm: Arc<Gcm>,
    word: Vec<usize>, // 0-based letters
}

impl WeylElement {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    /// Canonical word as 1-based indices.
    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i + 1).collect()
    }

    pub(crate) fn word_internal(&self) -> &[usize] {
        &self.word
    }

    fn check_same_group(&self, other: &WeylElement) -> Result<()> {
        if self.gcm == other.gcm {
            Ok(())
        } else {
            Err(Error::MixedRootData)
        }
    }

    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_same_group(other)?;
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(WeylElement {
            gcm: Arc::clone(&self.gcm),
            word: canonical_word(&self.gcm, &word),
        })
    }

    pub fn inverse(&self) -> WeylElement {
        let reversed: Vec<usize> = self.word.iter().rev().copied().collect();
        WeylElement {
            gcm: Arc::clone(&self.gcm),
            word: canonical_word(&self.gcm, &reversed),
        }
    }

    /// Bruhat order test by the lifting-property recursion on a descent of `w`.
    pub fn bruhat_leq(&self, w: &WeylElement) -> Result<bool> {
        self.check_same_group(w)?;
        let mut v = self.clone();
        let mut w = w.clone();
        loop {
            if v.len() > w.len() {
                return Ok(false);
            }
            if w.is_identity() {
                return Ok(v.is_identity());
            }
            // first canonical letter = smallest left descent of w
            let i = w.word[0];
            let s = WeylElement {
                gcm: Arc::clone(&self.gcm),
                word: vec![i],
            };
            let sv = s.multiply(&v)?;
            w = s.multiply(&w)?;
            if sv.len() < v.len() {
                v = sv;
            }
        }
    }

    /// Action on weight coordinates (values on the simple coroots).
    pub fn act_on_weight(&self, coords: &[i64]) -> Vec<i64> {
        let mut out = coords.to_vec();
        for &i in self.word.iter().rev() {
            out = self.gcm.reflect_weight(i, &out);
        }
        out
    }

    /// Action on root-lattice coordinates.
    pub fn act_on_root(&self, coords: &[i64]) -> Vec<i64> {
        let mut out = coords.to_vec();
        for &i in self.word.iter().rev() {
            out = self.gcm.reflect_root(i, &out);
        }
        out
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|&i| (i + 1).to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses "1 2 1" into 1-based indices; "" is the empty word.
pub fn parse_word(src: &str) -> Result<Vec<usize>> {
    src.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad reflection index {tok:?}")))
        })
        .collect()
}

/// Lex-least reduced word: act on rho, then peel off the smallest descent
/// until no coordinate is negative.
fn canonical_word(gcm: &Gcm, word: &[usize]) -> Vec<usize> {
    let rank = gcm.rank();
    let mut r = vec![1i64; rank];
    for &i in word.iter().rev() {
        r = gcm.reflect_weight(i, &r);
    }
    let mut out = Vec::new();
    loop {
        match (0..rank).find(|&i| r[i] < 0) {
            Some(i) => {
                out.push(i);
                r = gcm.reflect_weight(i, &r);
            }
            None => break,
        }
    }
    debug_assert!(r.iter().all(|&c| c == 1), "descent extraction must end at rho");
    out
}

/// A Bruhat cover with its reflection data. The reflection acts on the
/// right: `upper = lower * s_beta`, equivalently `s_beta = lower^-1 * upper`.
/// This is the convention under which `rho_pairing` equals the vanishing
/// order of extremal-weight sections along the corresponding divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverDatum {
    pub lower: WeylElement,
    pub upper: WeylElement,
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
    pub rho_pairing: i64,
}

/// Coordinates of `rho - t*rho` in the simple-root basis, computed by the
/// recursion `f(s_i u) = alpha_i + s_i f(u)`. Well defined for any valid rho.
fn rho_minus_w_rho(gcm: &Gcm, word: &[usize]) -> Vec<i64> {
    let mut acc = vec![0i64; gcm.rank()];
    for &i in word.iter().rev() {
        acc = gcm.reflect_root(i, &acc);
        acc[i] += 1;
    }
    acc
}

/// Matrix of the action on the root lattice, columns = images of simple roots.
fn root_lattice_matrix(gcm: &Gcm, w: &WeylElement) -> Vec<Vec<i64>> {
    (0..gcm.rank())
        .map(|j| {
            let mut e = vec![0i64; gcm.rank()];
            e[j] = 1;
            w.act_on_root(&e)
        })
        .collect()
}

/// Matrix of the reflection `s_beta` on the root lattice.
fn reflection_matrix(gcm: &Gcm, root: &[i64], coroot: &[i64]) -> Vec<Vec<i64>> {
    let rank = gcm.rank();
    (0..rank)
        .map(|j| {
            // <alpha_j, beta^vee> = sum_i coroot_i a_ij
            let pairing: i64 = (0..rank).map(|i| coroot[i] * gcm.entry(i, j)).sum();
            let mut col = vec![0i64; rank];
            col[j] = 1;
            for k in 0..rank {
                col[k] -= pairing * root[k];
            }
            col
        })
        .collect()
}

fn positive_divisors(n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Reflection data of a covering pair: the root `beta` with
/// `upper = lower * s_beta`, its coroot from the real root orbit, and
/// `<rho, beta^vee>`.
///
/// `beta` is read off from `rho - t*rho = <rho, beta^vee> beta`, testing each
/// positive divisor of the coordinate gcd so primitivity of the lattice
/// vector is never assumed.
pub fn cover_reflection(lower: &WeylElement, upper: &WeylElement) -> Result<CoverDatum> {
    if lower.gcm != upper.gcm {
        return Err(Error::MixedRootData);
    }
    if upper.len() != lower.len() + 1 {
        return Err(Error::NotACover);
    }
    let gcm = lower.gcm();
    let t = lower.inverse().multiply(upper)?;
    let delta = rho_minus_w_rho(gcm, t.word_internal());
    if delta.iter().any(|&c| c < 0) || delta.iter().all(|&c| c == 0) {
        return Err(Error::NotACover);
    }
    let gcd = delta.iter().fold(0i64, |acc, &c| num_integer::gcd(acc, c));
    let t_matrix = root_lattice_matrix(gcm, &t);
    for d in positive_divisors(gcd) {
        let root: Vec<i64> = delta.iter().map(|&c| c / d).collect();
        let height: i64 = root.iter().sum();
        let orbit = real_root_orbit(gcm, height);
        let Some(pair) = orbit.iter().find(|p| p.root == root) else {
            continue;
        };
        if reflection_matrix(gcm, &pair.root, &pair.coroot) == t_matrix {
            let rho_pairing = pair.coroot_height();
            debug_assert_eq!(d, rho_pairing, "gcd divisor must match <rho, beta^vee>");
            return Ok(CoverDatum {
                lower: lower.clone(),
                upper: upper.clone(),
                root: pair.root.clone(),
                coroot: pair.coroot.clone(),
                rho_pairing,
            });
        }
    }
    Err(Error::NotACover)
}

/// Deduplicated elements arising as reduced subwords of `w` with the given
/// length, in canonical-word order.
fn subword_elements_of_length(w: &WeylElement, len: usize) -> Vec<WeylElement> {
    let gcm = &w.gcm;
    let word = w.word_internal();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut mask_stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((pos, chosen)) = mask_stack.pop() {
        if chosen.len() == len {
            let canon = canonical_word(gcm, &chosen);
            if canon.len() == len {
                seen.insert(canon);
            }
            continue;
        }
        if word.len() - pos < len - chosen.len() {
            continue;
        }
        // skip letter at pos
        mask_stack.push((pos + 1, chosen.clone()));
        // take letter at pos
        let mut taken = chosen;
        taken.push(word[pos]);
        mask_stack.push((pos + 1, taken));
    }
    seen.into_iter()
        .map(|word| WeylElement {
            gcm: Arc::clone(gcm),
            word,
        })
        .collect()
}

/// All `v'` with `v <| v'` and `v' <= w`, each with reflection data, in
/// canonical-word order.
pub fn covers_in_interval(v: &WeylElement, w: &WeylElement) -> Result<Vec<CoverDatum>> {
    if !v.bruhat_leq(w)? {
        return Err(Error::NotComparable);
    }
    let mut out = Vec::new();
    for candidate in subword_elements_of_length(w, v.len() + 1) {
        if v.bruhat_leq(&candidate)? {
            out.push(cover_reflection(v, &candidate)?);
        }
    }
    Ok(out)
}

/// All `w'` with `w' <| w` and `v <= w'`, each with reflection data for
/// `s_beta = w'^-1 * w`, in canonical-word order.
pub fn cocovers_in_interval(v: &WeylElement, w: &WeylElement) -> Result<Vec<CoverDatum>> {
    if !v.bruhat_leq(w)? {
        return Err(Error::NotComparable);
    }
    if w.is_identity() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for candidate in subword_elements_of_length(w, w.len() - 1) {
        if v.bruhat_leq(&candidate)? {
            out.push(cover_reflection(&candidate, w)?);
        }
    }
    Ok(out)
}

/// Depth-first stream of all saturated chains `v = u_0 <| u_1 <| ... <| u_d = w`.
/// Deterministic: covers are explored in canonical-word order.
pub fn maximal_chains(v: &WeylElement, w: &WeylElement) -> Result<MaximalChains> {
    if !v.bruhat_leq(w)? {
        return Err(Error::NotComparable);
    }
    Ok(MaximalChains {
        target: w.clone(),
        stack: vec![(v.clone(), Vec::new())],
    })
}

pub struct MaximalChains {
    target: WeylElement,
    stack: Vec<(WeylElement, Vec<CoverDatum>)>,
}

impl Iterator for MaximalChains {
    type Item = Vec<CoverDatum>;

    fn next(&mut self) -> Option<Self::Item> {
        while let Some((node, chain)) = self.stack.pop() {
            if node == self.target {
                return Some(chain);
            }
            let covers = covers_in_interval(&node, &self.target)
                .expect("nodes on the stack stay within the interval");
            for cover in covers.into_iter().rev() {
                let mut extended = chain.clone();
                let upper = cover.upper.clone();
                extended.push(cover);
                self.stack.push((upper, extended));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::builtin;

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(builtin(name).unwrap())
    }

    #[test]
    fn involution_cancels() {
        let g = group("A2");
        let e = g.element(&[1, 1]).unwrap();
        assert!(e.is_identity());
    }

    #[test]
    fn braid_words_share_canonical_form() {
        let g = group("A2");
        let a = g.element(&[2, 1, 2]).unwrap();
        let b = g.element(&[1, 2, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.word(), vec![1, 2, 1]);
    }

    #[test]
    fn exchange_condition_reduces() {
        let g = group("A2");
        let w = g.element(&[1, 2, 1, 2]).unwrap();
        assert_eq!(w.word(), vec![2, 1]);
    }

    #[test]
    fn canonicalize_is_idempotent() {
        for name in ["A2", "B2", "A1~"] {
            let g = group(name);
            let w = g.element(&[1, 2, 1]).unwrap();
            let again = g.element(&w.word()).unwrap();
            assert_eq!(w, again);
        }
    }

    #[test]
    fn index_out_of_range_is_rejected() {
        let g = group("A2");
        assert!(matches!(
            g.element(&[3]),
            Err(Error::IndexOutOfRange(3, 2))
        ));
        assert!(matches!(g.element(&[0]), Err(Error::IndexOutOfRange(0, 2))));
    }

    #[test]
    fn multiplication_examples() {
        let g = group("A2");
        let e = g.identity();
        let w = g.element(&[2, 1]).unwrap();
        assert_eq!(e.multiply(&w).unwrap(), w);
        let s1 = g.simple(1).unwrap();
        assert_eq!(s1.multiply(&w).unwrap().word(), vec![1, 2, 1]);
        assert_eq!(g.element(&[1, 2]).unwrap().inverse().word(), vec![2, 1]);
    }

    #[test]
    fn mixed_root_data_is_rejected() {
        let a = group("A2").simple(1).unwrap();
        let b = group("B2").simple(1).unwrap();
        assert!(matches!(a.multiply(&b), Err(Error::MixedRootData)));
        assert!(matches!(a.bruhat_leq(&b), Err(Error::MixedRootData)));
    }

    #[test]
    fn bruhat_examples() {
        let g = group("A2");
        let e = g.identity();
        let s1 = g.simple(1).unwrap();
        let s2 = g.simple(2).unwrap();
        let w0 = g.element(&[1, 2, 1]).unwrap();
        assert!(e.bruhat_leq(&w0).unwrap());
        assert!(e.bruhat_leq(&e).unwrap());
        assert!(!s1.bruhat_leq(&s2).unwrap());
        assert!(s2.bruhat_leq(&g.element(&[1, 2]).unwrap()).unwrap());
    }

    /// Brute force: v <= w iff some subsequence of a reduced word of w
    /// canonicalizes to v.
    fn bruhat_oracle(v: &WeylElement, w: &WeylElement) -> bool {
        let word = w.word();
        let n = word.len();
        let group = WeylGroup::new(w.gcm().clone());
        for mask in 0u32..(1 << n) {
            let sub: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| word[i]).collect();
            if &group.element(&sub).unwrap() == v {
                return true;
            }
        }
        false
    }

    #[test]
    fn lifting_recursion_matches_subword_oracle() {
        for name in ["A2", "B2"] {
            let g = group(name);
            let elements = g.enumerate(64).unwrap();
            for v in &elements {
                for w in &elements {
                    assert_eq!(
                        v.bruhat_leq(w).unwrap(),
                        bruhat_oracle(v, w),
                        "{name}: {v} vs {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn group_sizes() {
        assert_eq!(group("A2").enumerate(100).unwrap().len(), 6);
        assert_eq!(group("B2").enumerate(100).unwrap().len(), 8);
        assert_eq!(group("A3").enumerate(100).unwrap().len(), 24);
    }

    #[test]
    fn cover_reflection_simple_cover() {
        let g = group("A2");
        let datum = cover_reflection(&g.identity(), &g.simple(1).unwrap()).unwrap();
        assert_eq!(datum.root, vec![1, 0]);
        assert_eq!(datum.coroot, vec![1, 0]);
        assert_eq!(datum.rho_pairing, 1);
    }

    #[test]
    fn cover_reflection_acts_on_the_right() {
        // s_1 <| s_1 s_2: the connecting reflection is s_1^-1 (s_1 s_2) = s_2.
        let g = group("A2");
        let s1 = g.simple(1).unwrap();
        let upper = g.element(&[1, 2]).unwrap();
        let datum = cover_reflection(&s1, &upper).unwrap();
        assert_eq!(datum.root, vec![0, 1]);
        assert_eq!(datum.rho_pairing, 1);

        // s_1 <| s_2 s_1 connects through the highest root.
        let upper = g.element(&[2, 1]).unwrap();
        let datum = cover_reflection(&s1, &upper).unwrap();
        assert_eq!(datum.root, vec![1, 1]);
        assert_eq!(datum.rho_pairing, 2);
    }

    #[test]
    fn cover_reflection_rejects_non_covers() {
        let g = group("A2");
        let e = g.identity();
        let w0 = g.element(&[1, 2, 1]).unwrap();
        assert!(matches!(cover_reflection(&e, &w0), Err(Error::NotACover)));
        assert!(matches!(
            cover_reflection(&e, &e),
            Err(Error::NotACover)
        ));
    }

    #[test]
    fn cover_data_satisfy_type_invariants() {
        let g = group("B2");
        let elements = g.enumerate(64).unwrap();
        for v in &elements {
            for w in &elements {
                if !v.bruhat_leq(w).unwrap() {
                    continue;
                }
                for datum in covers_in_interval(v, w).unwrap() {
                    assert_eq!(datum.upper.len(), datum.lower.len() + 1);
                    // re-assert upper = lower * s_beta by matrix action
                    let t = datum.lower.inverse().multiply(&datum.upper).unwrap();
                    assert_eq!(
                        root_lattice_matrix(g.gcm(), &t),
                        reflection_matrix(g.gcm(), &datum.root, &datum.coroot)
                    );
                    assert_eq!(datum.rho_pairing, datum.coroot.iter().sum::<i64>());
                }
            }
        }
    }

    #[test]
    fn covers_of_identity_are_simple_reflections() {
        let g = group("A2");
        let covers = covers_in_interval(&g.identity(), &g.element(&[1, 2]).unwrap()).unwrap();
        let words: Vec<Vec<usize>> = covers.iter().map(|c| c.upper.word()).collect();
        assert_eq!(words, vec![vec![1], vec![2]]);
        assert_eq!(
            covers.iter().map(|c| c.rho_pairing).collect::<Vec<_>>(),
            vec![1, 1]
        );
    }

    #[test]
    fn covers_in_interval_s1_w0() {
        let g = group("A2");
        let s1 = g.simple(1).unwrap();
        let w0 = g.element(&[1, 2, 1]).unwrap();
        let covers = covers_in_interval(&s1, &w0).unwrap();
        let data: Vec<(Vec<usize>, Vec<i64>, i64)> = covers
            .iter()
            .map(|c| (c.upper.word(), c.root.clone(), c.rho_pairing))
            .collect();
        assert_eq!(
            data,
            vec![
                (vec![1, 2], vec![0, 1], 1),
                (vec![2, 1], vec![1, 1], 2),
            ]
        );
        assert!(covers_in_interval(&w0, &w0).unwrap().is_empty());
    }

    #[test]
    fn cocovers_in_interval_examples() {
        let g = group("A2");
        let s1 = g.simple(1).unwrap();
        let w0 = g.element(&[1, 2, 1]).unwrap();
        let cocovers = cocovers_in_interval(&s1, &w0).unwrap();
        let data: Vec<(Vec<usize>, i64)> = cocovers
            .iter()
            .map(|c| (c.lower.word(), c.rho_pairing))
            .collect();
        assert_eq!(data, vec![(vec![1, 2], 1), (vec![2, 1], 1)]);

        let cocovers = cocovers_in_interval(&g.identity(), &g.element(&[1, 2]).unwrap()).unwrap();
        let data: Vec<(Vec<usize>, Vec<i64>, i64)> = cocovers
            .iter()
            .map(|c| (c.lower.word(), c.root.clone(), c.rho_pairing))
            .collect();
        assert_eq!(
            data,
            vec![(vec![1], vec![0, 1], 1), (vec![2], vec![1, 1], 2)]
        );
        assert!(cocovers_in_interval(&w0, &w0).unwrap().is_empty());
    }

    #[test]
    fn interval_covers_are_complete_and_unique() {
        let g = group("A3");
        let elements = g.enumerate(100).unwrap();
        let v = g.simple(2).unwrap();
        let w = g.element(&[1, 2, 3, 1, 2]).unwrap();
        let covers = covers_in_interval(&v, &w).unwrap();
        let mut expected: Vec<&WeylElement> = elements
            .iter()
            .filter(|u| {
                u.len() == v.len() + 1
                    && v.bruhat_leq(u).unwrap()
                    && u.bruhat_leq(&w).unwrap()
            })
            .collect();
        expected.sort_by_key(|u| u.word());
        let got: Vec<&WeylElement> = covers.iter().map(|c| &c.upper).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn chain_streams() {
        let g = group("A2");
        let e = g.identity();
        let w0 = g.element(&[1, 2, 1]).unwrap();
        assert_eq!(maximal_chains(&e, &e).unwrap().count(), 1);
        assert_eq!(maximal_chains(&e, &w0).unwrap().count(), 4);
        let s1 = g.simple(1).unwrap();
        assert_eq!(maximal_chains(&s1, &w0).unwrap().count(), 2);
        assert!(matches!(
            maximal_chains(&s1, &g.simple(2).unwrap()),
            Err(Error::NotComparable)
        ));
    }

    #[test]
    fn chains_are_saturated_and_end_at_target() {
        let g = group("B2");
        let v = g.simple(1).unwrap();
        let w = g.element(&[1, 2, 1, 2]).unwrap();
        for chain in maximal_chains(&v, &w).unwrap() {
            assert_eq!(chain.len(), w.len() - v.len());
            assert_eq!(chain.first().unwrap().lower, v);
            assert_eq!(chain.last().unwrap().upper, w);
            for pair in chain.windows(2) {
                assert_eq!(pair[0].upper, pair[1].lower);
            }
        }
    }
}
