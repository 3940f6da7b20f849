//! Generalized Cartan matrices, real root orbits and weight/coroot pairings.
//!
//! Everything is exact integer arithmetic. The matrix convention is
//! `entries[i][j] = <alpha_j, alpha_i^vee>`, so a simple reflection acts on
//! root coordinates through row `i` and on coroot coordinates through
//! column `i`.

use crate::error::{Error, Result};
use num_integer::Integer;
use num_rational::Rational64;
use std::collections::{BTreeMap, VecDeque};
use std::fmt;

/// A validated symmetrizable generalized Cartan matrix.
///
/// Construction goes through [`Gcm::new`], which checks the GCM axioms and
/// solves for the symmetrizer, so a value of this type always carries a
/// symmetrizer normalized to coprime positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gcm {
    rank: usize,
    entries: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
}

impl Gcm {
    /// Validates a square integer matrix as a symmetrizable GCM.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let rank = entries.len();
        if rank == 0 {
            return Err(Error::NotGcm("empty matrix".into()));
        }
        for row in &entries {
            if row.len() != rank {
                return Err(Error::NotGcm("matrix is not square".into()));
            }
        }
        for i in 0..rank {
            if entries[i][i] != 2 {
                return Err(Error::NotGcm(format!("diagonal entry ({i},{i}) is not 2")));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(Error::NotGcm(format!(
                        "off-diagonal entry ({i},{j}) is positive"
                    )));
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::NotGcm(format!(
                        "zero pattern is asymmetric at ({i},{j})"
                    )));
                }
            }
        }
        let symmetrizer = solve_symmetrizer(&entries)?;
        Ok(Gcm {
            rank,
            entries,
            symmetrizer,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Entry `a_ij` with 0-based indices.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Symmetrizer `d`, coprime positive integers with `d_i a_ij = d_j a_ji`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Parses the row-text format `"2 -1; -1 2"` or a JSON array of arrays.
    pub fn parse(src: &str) -> Result<Self> {
        let trimmed = src.trim();
        if trimmed.starts_with('[') {
            let rows: Vec<Vec<i64>> = serde_json::from_str(trimmed)
                .map_err(|e| Error::Parse(format!("bad JSON matrix: {e}")))?;
            return Gcm::new(rows);
        }
        let mut rows = Vec::new();
        for row in trimmed.split(';') {
            let entries: Vec<i64> = row
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad matrix entry {tok:?}")))
                })
                .collect::<Result<_>>()?;
            if !entries.is_empty() {
                rows.push(entries);
            }
        }
        Gcm::new(rows)
    }

    /// Simple reflection `s_i` (0-based) acting on root-lattice coordinates.
    pub fn reflect_root(&self, i: usize, coords: &[i64]) -> Vec<i64> {
        let pairing: i64 = (0..self.rank).map(|j| self.entries[i][j] * coords[j]).sum();
        let mut out = coords.to_vec();
        out[i] -= pairing;
        out
    }

    /// Simple reflection `s_i` (0-based) acting on coroot-lattice coordinates.
    pub fn reflect_coroot(&self, i: usize, coords: &[i64]) -> Vec<i64> {
        let pairing: i64 = (0..self.rank).map(|j| self.entries[j][i] * coords[j]).sum();
        let mut out = coords.to_vec();
        out[i] -= pairing;
        out
    }

    /// Simple reflection `s_i` (0-based) on weight coordinates
    /// (coordinate `j` = value on `alpha_j^vee`).
    pub fn reflect_weight(&self, i: usize, coords: &[i64]) -> Vec<i64> {
        let v = coords[i];
        (0..self.rank)
            .map(|j| coords[j] - v * self.entries[j][i])
            .collect()
    }
}

impl fmt::Display for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}

/// Solves `d_i a_ij = d_j a_ji` along a spanning forest of the Coxeter graph,
/// then checks the relation on all pairs (this covers every cycle).
fn solve_symmetrizer(entries: &[Vec<i64>]) -> Result<Vec<i64>> {
    let rank = entries.len();
    let mut d: Vec<Option<Rational64>> = vec![None; rank];
    for root in 0..rank {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Rational64::new(1, 1));
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].unwrap();
            for j in 0..rank {
                if i == j || entries[i][j] == 0 || d[j].is_some() {
                    continue;
                }
                d[j] = Some(di * Rational64::new(entries[i][j], entries[j][i]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Rational64> = d.into_iter().map(Option::unwrap).collect();
    for i in 0..rank {
        for j in 0..rank {
            if d[i] * Rational64::from(entries[i][j]) != d[j] * Rational64::from(entries[j][i]) {
                return Err(Error::NotSymmetrizable);
            }
        }
    }
    // scale to the smallest positive integer vector
    let lcm_den = d.iter().fold(1i64, |acc, r| acc.lcm(r.denom()));
    let ints: Vec<i64> = d.iter().map(|r| (r * lcm_den).to_integer()).collect();
    let gcd = ints.iter().fold(0i64, |acc, &v| acc.gcd(&v));
    let out: Vec<i64> = ints.iter().map(|&v| v / gcd).collect();
    if out.iter().any(|&v| v <= 0) {
        return Err(Error::NotSymmetrizable);
    }
    Ok(out)
}

/// A positive real root together with the coroot obtained by applying the
/// same reflection sequence to the paired simple coroot.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootCorootPair {
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
    pub positive: bool,
}

impl RootCorootPair {
    pub fn height(&self) -> i64 {
        self.root.iter().sum()
    }

    pub fn coroot_height(&self) -> i64 {
        self.coroot.iter().sum()
    }
}

/// All positive real roots of height at most `height_bound`, with coroots,
/// deduplicated and sorted by (height, lexicographic).
///
/// Only the orbit of the simple roots is generated, so imaginary roots never
/// appear. The bound is mandatory: Kac-Moody root systems are infinite.
pub fn real_root_orbit(g: &Gcm, height_bound: i64) -> Vec<RootCorootPair> {
    let rank = g.rank();
    let mut seen: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
    for i in 0..rank {
        let mut root = vec![0i64; rank];
        let mut coroot = vec![0i64; rank];
        root[i] = 1;
        coroot[i] = 1;
        if height_bound >= 1 && seen.insert(root.clone(), coroot.clone()).is_none() {
            queue.push_back((root, coroot));
        }
    }
    while let Some((root, coroot)) = queue.pop_front() {
        for i in 0..rank {
            let r = g.reflect_root(i, &root);
            if r.iter().any(|&c| c < 0) {
                continue; // reflected to a negative root
            }
            if r.iter().sum::<i64>() > height_bound {
                continue;
            }
            if !seen.contains_key(&r) {
                let c = g.reflect_coroot(i, &coroot);
                seen.insert(r.clone(), c.clone());
                queue.push_back((r, c));
            }
        }
    }
    let mut out: Vec<RootCorootPair> = seen
        .into_iter()
        .map(|(root, coroot)| RootCorootPair {
            root,
            coroot,
            positive: true,
        })
        .collect();
    out.sort_by(|a, b| (a.height(), &a.root).cmp(&(b.height(), &b.root)));
    out
}

/// An integral weight in fundamental-weight coordinates: coordinate `i` is
/// the value on `alpha_i^vee`. `rho` is the all-ones vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn two_rho(rank: usize) -> Self {
        Weight(vec![2; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", coords.join(", "))
    }
}

/// Pairing of a weight against a coroot in simple-coroot coordinates.
/// In fundamental-weight coordinates this is a dot product.
pub fn pair(lambda: &Weight, coroot: &[i64]) -> Result<i64> {
    if lambda.0.len() != coroot.len() {
        return Err(Error::DimensionMismatch(lambda.0.len(), coroot.len()));
    }
    Ok(lambda.0.iter().zip(coroot).map(|(a, b)| a * b).sum())
}

/// The type A Cartan matrix of the given rank.
pub fn type_a(rank: usize) -> Gcm {
    let entries = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    if i == j {
                        2
                    } else if i.abs_diff(j) == 1 {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    Gcm::new(entries).expect("type A matrices are valid")
}

/// Built-in Cartan matrices used by the command line and the test corpus.
pub fn builtin(name: &str) -> Option<Gcm> {
    let entries: Vec<Vec<i64>> = match name {
        "A1" => vec![vec![2]],
        "A2" => vec![vec![2, -1], vec![-1, 2]],
        "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        "B2" => vec![vec![2, -1], vec![-2, 2]],
        "A1~" => vec![vec![2, -2], vec![-2, 2]],
        _ => return None,
    };
    Some(Gcm::new(entries).expect("builtin matrices are valid"))
}
