//! Symbolic chart engine for type A Bott-Samelson resolutions: chart maps
//! as matrices with exact polynomial entries, valuations of pulled-back
//! extremal sections along boundary divisors, and the Schubert-case
//! discrepancy harness.
//!
//! Conventions. Letter `i` of a word contributes one factor to an ordered
//! matrix product, either raised (the chart is transverse to the divisor of
//! that letter) or lowered (the chart contains its generic point):
//!
//! - raised:  `(I + z_k E_{i,i+1}) * (E_{i+1,i} - E_{i,i+1} + sum_{j} E_jj)`
//! - lowered: `I + z_k E_{i+1,i}`
//!
//! The boundary divisor `D_k` is `{z_k = 0}` read in the chart lowering
//! exactly letter `k`.

use crate::cartan::{type_a, Weight};
use crate::error::{Error, Result};
use crate::poly::{Q, SparsePolynomial};
use crate::richardson::{classify, Classification, DivisorKind, Fraction, Rat};
use crate::typea::permutation;
use crate::weyl::{cocovers_in_interval, WeylElement, WeylGroup};
use serde::Serialize;
use std::collections::BTreeMap;

pub type ChartPoly = SparsePolynomial<Q>;
type Matrix = Vec<Vec<ChartPoly>>;

/// A word in the simple reflections of A_{n-1}, not necessarily reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BsWord {
    pub n: usize,
    pub letters: Vec<usize>, // 1-based letter indices
}

impl BsWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::UnsupportedRank(n));
        }
        for &l in &letters {
            if l < 1 || l >= n {
                return Err(Error::IndexOutOfRange(l, n - 1));
            }
        }
        Ok(BsWord { n, letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn group(&self) -> WeylGroup {
        WeylGroup::new(type_a(self.n - 1))
    }

    pub fn element(&self) -> WeylElement {
        self.group()
            .element(&self.letters)
            .expect("letters validated on construction")
    }

    /// Element of the subword omitting letter `k` (1-based).
    pub fn complement_element(&self, k: usize) -> WeylElement {
        let letters: Vec<usize> = self
            .letters
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k - 1)
            .map(|(_, &l)| l)
            .collect();
        self.group()
            .element(&letters)
            .expect("letters validated on construction")
    }
}

/// A chart of the resolution: one raised/lowered bit per letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    pub word: BsWord,
    pub tau: Vec<bool>, // true = raised
}

impl Chart {
    pub fn new(word: BsWord, tau: Vec<bool>) -> Result<Self> {
        if tau.len() != word.len() {
            return Err(Error::LengthMismatch(tau.len(), word.len()));
        }
        Ok(Chart { word, tau })
    }

    /// The chart containing the generic point of `D_k`: letter `k` lowered,
    /// all others raised.
    pub fn for_divisor(word: BsWord, k: usize) -> Result<Self> {
        if k < 1 || k > word.len() {
            return Err(Error::IndexOutOfRange(k, word.len()));
        }
        let tau = (0..word.len()).map(|j| j != k - 1).collect();
        Chart::new(word, tau)
    }
}

fn identity_matrix(n: usize, nvars: usize) -> Matrix {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        ChartPoly::one(nvars)
                    } else {
                        ChartPoly::zero(nvars)
                    }
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let nvars = a[0][0].nvars();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut acc = ChartPoly::zero(nvars);
                    for k in 0..n {
                        acc = acc.add(&a[r][k].mul(&b[k][c]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn raised_factor(n: usize, nvars: usize, letter: usize, var: usize) -> Matrix {
    let a = letter - 1;
    let b = letter;
    let mut unipotent = identity_matrix(n, nvars);
    unipotent[a][b] = ChartPoly::var(nvars, var);
    let mut lift = identity_matrix(n, nvars);
    lift[a][a] = ChartPoly::zero(nvars);
    lift[b][b] = ChartPoly::zero(nvars);
    lift[b][a] = ChartPoly::one(nvars);
    lift[a][b] = ChartPoly::one(nvars).neg();
    mat_mul(&unipotent, &lift)
}

fn lowered_factor(n: usize, nvars: usize, letter: usize, var: usize) -> Matrix {
    let mut m = identity_matrix(n, nvars);
    m[letter][letter - 1] = ChartPoly::var(nvars, var);
    m
}

/// Ordered product of the per-letter factors; the entries are polynomials
/// in `z_1..z_m` and the determinant is a unit.
pub fn chart_matrix(chart: &Chart) -> Matrix {
    let n = chart.word.n;
    let nvars = chart.word.len();
    let mut m = identity_matrix(n, nvars);
    for (k, &letter) in chart.word.letters.iter().enumerate() {
        let factor = if chart.tau[k] {
            raised_factor(n, nvars, letter, k)
        } else {
            lowered_factor(n, nvars, letter, k)
        };
        m = mat_mul(&m, &factor);
    }
    m
}

pub fn determinant(m: &Matrix) -> ChartPoly {
    let n = m.len();
    let nvars = m[0][0].nvars();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = ChartPoly::zero(nvars);
    for r in 0..n {
        if m[r][0].is_zero() {
            continue;
        }
        let sub: Matrix = (0..n)
            .filter(|&rr| rr != r)
            .map(|rr| m[rr][1..].to_vec())
            .collect();
        let cofactor = determinant(&sub);
        let signed = if r % 2 == 0 {
            m[r][0].mul(&cofactor)
        } else {
            m[r][0].neg().mul(&cofactor)
        };
        acc = acc.add(&signed);
    }
    acc
}

/// Minor on the given 1-based rows and the first `rows.len()` columns.
fn leading_minor(m: &Matrix, rows: &[usize]) -> ChartPoly {
    let sub: Matrix = rows
        .iter()
        .map(|&r| m[r - 1][..rows.len()].to_vec())
        .collect();
    determinant(&sub)
}

/// Pullback of the extremal section of the `u`-weight line of weight
/// `lambda`: the product over fundamental factors of the minor with rows
/// `u({1..i})` and columns `{1..i}`, raised to the `lambda_i`-th power.
pub fn section_pullback(chart: &Chart, u: &WeylElement, lambda: &Weight) -> Result<ChartPoly> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    let n = chart.word.n;
    if lambda.rank() != n - 1 {
        return Err(Error::DimensionMismatch(lambda.rank(), n - 1));
    }
    let perm = permutation(u, n)?;
    let matrix = chart_matrix(chart);
    let nvars = chart.word.len();
    let mut out = ChartPoly::one(nvars);
    for i in 1..n {
        let c = lambda.0[i - 1];
        if c == 0 {
            continue;
        }
        let mut rows: Vec<usize> = perm[..i].to_vec();
        rows.sort_unstable();
        let minor = leading_minor(&matrix, &rows);
        out = out.mul(&minor.pow(c as u32));
    }
    Ok(out)
}

/// Multiplicities of a pulled-back section along the boundary divisors.
#[derive(Debug, Clone)]
pub struct ValuationTable {
    pub word: BsWord,
    pub u: WeylElement,
    pub lambda: Weight,
    pub values: BTreeMap<u32, u16>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValuationJson {
    pub word: Vec<usize>,
    pub u: Vec<usize>,
    pub lambda: Vec<i64>,
    pub valuations: BTreeMap<u32, u16>,
}

impl ValuationTable {
    pub fn to_json(&self) -> ValuationJson {
        ValuationJson {
            word: self.word.letters.clone(),
            u: self.u.word(),
            lambda: self.lambda.0.clone(),
            valuations: self.values.clone(),
        }
    }
}

/// For each divisor `D_k`, the `z_k`-adic valuation of the pulled-back
/// section on the chart lowering exactly letter `k`. Exact polynomial
/// arithmetic keeps the other variables generic.
pub fn boundary_valuations(
    word: &BsWord,
    u: &WeylElement,
    lambda: &Weight,
) -> Result<ValuationTable> {
    let mut values = BTreeMap::new();
    for k in 1..=word.len() {
        let chart = Chart::for_divisor(word.clone(), k)?;
        let section = section_pullback(&chart, u, lambda)?;
        if section.is_zero() {
            return Err(Error::SectionIdenticallyZero);
        }
        values.insert(k as u32, section.valuation_in(k - 1).unwrap());
    }
    Ok(ValuationTable {
        word: word.clone(),
        u: u.clone(),
        lambda: lambda.clone(),
        values,
    })
}

#[derive(Debug, Clone)]
pub struct DivisorEntry {
    pub index: usize,
    pub kind: DivisorKind,
    /// The designated strict-transform image, when this divisor is one.
    pub image: Option<WeylElement>,
    /// Valuation of the pulled-back top section (weight rho) along `D_k`.
    pub valuation: u16,
    pub coefficient: Rat,
}

/// Discrepancy bookkeeping for the Schubert pair of a reduced word: the
/// boundary pair coefficients on the base come from the cocover
/// multiplicities, the resolution side from symbolic valuations. Designated
/// strict transforms must come out with coefficient exactly zero.
#[derive(Debug, Clone)]
pub struct SchubertReport {
    pub word: BsWord,
    pub n_param: i64,
    pub entries: Vec<DivisorEntry>,
    pub stricts_consistent: bool,
    pub classification: Classification,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscrepancyJson {
    pub k: usize,
    pub kind: DivisorKind,
    pub e: Fraction,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SchubertJson {
    pub word: Vec<usize>,
    pub lambda: Vec<i64>,
    #[serde(rename = "N")]
    pub n: i64,
    pub valuations: BTreeMap<u32, u16>,
    pub discrepancies: Vec<DiscrepancyJson>,
    pub stricts_consistent: bool,
    pub verdict: Classification,
}

impl SchubertReport {
    pub fn to_json(&self) -> SchubertJson {
        SchubertJson {
            word: self.word.letters.clone(),
            lambda: vec![1; self.word.n - 1],
            n: self.n_param,
            valuations: self
                .entries
                .iter()
                .map(|e| (e.index as u32, e.valuation))
                .collect(),
            discrepancies: self
                .entries
                .iter()
                .map(|e| DiscrepancyJson {
                    k: e.index,
                    kind: e.kind,
                    e: Fraction::from(e.coefficient),
                    image: e.image.as_ref().map(|w| w.word()),
                })
                .collect(),
            stricts_consistent: self.stricts_consistent,
            verdict: self.classification,
        }
    }
}

/// Runs the discrepancy harness for the Schubert pair of a reduced word.
/// `n_opt` defaults to one more than the largest cocover multiplicity.
pub fn schubert_discrepancies(word: &BsWord, n_opt: Option<i64>) -> Result<SchubertReport> {
    let group = word.group();
    let w = word.element();
    if w.len() != word.len() {
        return Err(Error::NotReduced);
    }
    let rho = Weight::rho(word.n - 1);
    // pair coefficients b' on the base, one per cocover of w
    let mut b_of: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for cover in cocovers_in_interval(&group.identity(), &w)? {
        b_of.insert(cover.lower.word(), cover.rho_pairing);
    }
    let max_b = b_of.values().copied().max().unwrap_or(0);
    let n_param = n_opt.unwrap_or(max_b + 1);
    if n_param <= max_b || n_param < 1 {
        return Err(Error::NTooSmall(n_param, max_b));
    }
    // lex-first divisor with a reduced complement represents each cocover
    let mut designated: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for k in 1..=word.len() {
        let complement = word.complement_element(k);
        if complement.len() == word.len() - 1 {
            designated.entry(complement.word()).or_insert(k);
        }
    }
    let valuations = boundary_valuations(word, &w, &rho)?;
    let mut entries = Vec::new();
    let mut stricts_consistent = true;
    for k in 1..=word.len() {
        let valuation = valuations.values[&(k as u32)];
        let complement = word.complement_element(k);
        let is_designated = designated.get(&complement.word()) == Some(&k)
            && complement.len() == word.len() - 1;
        let entry = if is_designated {
            let b = b_of[&complement.word()];
            let coefficient = Rat::new(valuation as i64 - b, n_param);
            if coefficient != Rat::from(0) {
                stricts_consistent = false;
            }
            DivisorEntry {
                index: k,
                kind: DivisorKind::Strict,
                image: Some(complement),
                valuation,
                coefficient,
            }
        } else {
            DivisorEntry {
                index: k,
                kind: DivisorKind::Exceptional,
                image: None,
                valuation,
                coefficient: Rat::new(valuation as i64, n_param) - Rat::from(1),
            }
        };
        entries.push(entry);
    }
    let classification = classify(entries.iter().map(|e| e.coefficient));
    Ok(SchubertReport {
        word: word.clone(),
        n_param,
        entries,
        stricts_consistent,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;
    use crate::weyl::cover_reflection;

    fn poly_str(nvars: usize, names: &[&str], p: &ChartPoly) -> String {
        let ring = crate::poly::Ring::new(names.iter().map(|s| s.to_string()).collect());
        assert_eq!(nvars, ring.nvars());
        ring.display(p).to_string()
    }

    #[test]
    fn chart_matrix_a1_raised() {
        let word = BsWord::new(2, vec![1]).unwrap();
        let chart = Chart::new(word, vec![true]).unwrap();
        let m = chart_matrix(&chart);
        let s = |p: &ChartPoly| poly_str(1, &["z"], p);
        assert_eq!(
            [
                [s(&m[0][0]), s(&m[0][1])],
                [s(&m[1][0]), s(&m[1][1])]
            ],
            [["z".to_string(), "-1".to_string()], ["1".into(), "0".into()]]
        );
    }

    #[test]
    fn chart_matrix_a1_lowered() {
        let word = BsWord::new(2, vec![1]).unwrap();
        let chart = Chart::new(word, vec![false]).unwrap();
        let m = chart_matrix(&chart);
        let s = |p: &ChartPoly| poly_str(1, &["z"], p);
        assert_eq!(
            [
                [s(&m[0][0]), s(&m[0][1])],
                [s(&m[1][0]), s(&m[1][1])]
            ],
            [["1".to_string(), "0".to_string()], ["z".into(), "1".into()]]
        );
    }

    #[test]
    fn empty_word_gives_identity() {
        let word = BsWord::new(3, vec![]).unwrap();
        let chart = Chart::new(word, vec![]).unwrap();
        let m = chart_matrix(&chart);
        assert!(determinant(&m).is_one());
    }

    #[test]
    fn chart_determinants_are_units() {
        for letters in [vec![1], vec![1, 2], vec![1, 2, 1], vec![2, 1, 2]] {
            let m = letters.len();
            for mask in 0..(1u32 << m) {
                let word = BsWord::new(3, letters.clone()).unwrap();
                let tau: Vec<bool> = (0..m).map(|j| mask & (1 << j) != 0).collect();
                let chart = Chart::new(word, tau).unwrap();
                let det = determinant(&chart_matrix(&chart));
                let rendered = det.num_terms() == 1
                    && det.terms().all(|(mono, c)| {
                        mono.is_one() && (c == &Q::from_int(1) || c == &Q::from_int(-1))
                    });
                assert!(rendered, "determinant must be a unit");
            }
        }
    }

    #[test]
    fn section_pullback_a1_examples() {
        let group = WeylGroup::new(type_a(1));
        let s1 = group.simple(1).unwrap();
        let rho = Weight::rho(1);

        let word = BsWord::new(2, vec![1]).unwrap();
        let lowered = Chart::new(word.clone(), vec![false]).unwrap();
        let f = section_pullback(&lowered, &s1, &rho).unwrap();
        assert_eq!(poly_str(1, &["z"], &f), "z");

        let raised = Chart::new(word, vec![true]).unwrap();
        let f = section_pullback(&raised, &s1, &rho).unwrap();
        assert_eq!(poly_str(1, &["z"], &f), "1");
    }

    #[test]
    fn base_point_section_is_a_unit() {
        // the all-lowered chart at the origin is the base point; the
        // identity-weight section is the product of leading principal
        // minors of a lower unipotent matrix, so it is exactly 1
        for letters in [vec![1], vec![1, 2], vec![1, 2, 1]] {
            let word = BsWord::new(3, letters.clone()).unwrap();
            let chart = Chart::new(word.clone(), vec![false; letters.len()]).unwrap();
            let e = word.group().identity();
            let f = section_pullback(&chart, &e, &Weight::rho(2)).unwrap();
            assert!(f.is_one(), "expected 1, got {f:?}");
        }
    }

    #[test]
    fn valuations_a1() {
        let word = BsWord::new(2, vec![1]).unwrap();
        let group = word.group();
        let table =
            boundary_valuations(&word, &group.simple(1).unwrap(), &Weight::rho(1)).unwrap();
        assert_eq!(table.values, BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn valuations_a2_word_12() {
        let word = BsWord::new(3, vec![1, 2]).unwrap();
        let w = word.element();
        let table = boundary_valuations(&word, &w, &Weight::rho(2)).unwrap();
        assert_eq!(table.values, BTreeMap::from([(1, 2), (2, 1)]));

        // each birational divisor matches its cover_reflection prediction
        for k in 1..=2 {
            let complement = word.complement_element(k);
            let datum = cover_reflection(&complement, &w).unwrap();
            assert_eq!(table.values[&(k as u32)] as i64, datum.rho_pairing);
        }
    }

    #[test]
    fn valuations_a2_word_121() {
        let word = BsWord::new(3, vec![1, 2, 1]).unwrap();
        let w = word.element();
        let table = boundary_valuations(&word, &w, &Weight::rho(2)).unwrap();
        assert_eq!(table.values, BTreeMap::from([(1, 1), (2, 2), (3, 1)]));
    }

    #[test]
    fn section_vanishes_when_u_is_not_below_w() {
        // u = w_0 on the word (1): the u-extremal coordinate dies on X_{s_1}
        let word = BsWord::new(3, vec![1]).unwrap();
        let w0 = word.group().element(&[1, 2, 1]).unwrap();
        assert!(matches!(
            boundary_valuations(&word, &w0, &Weight::rho(2)),
            Err(Error::SectionIdenticallyZero)
        ));
    }

    #[test]
    fn schubert_harness_a1() {
        let word = BsWord::new(2, vec![1]).unwrap();
        let report = schubert_discrepancies(&word, Some(2)).unwrap();
        assert_eq!(report.entries.len(), 1);
        let entry = &report.entries[0];
        assert_eq!(entry.kind, DivisorKind::Strict);
        assert_eq!(entry.image.as_ref().unwrap().word(), Vec::<usize>::new());
        assert_eq!(entry.coefficient, Rat::from(0));
        assert!(report.stricts_consistent);
        assert_eq!(report.classification, Classification::Klt);
    }

    #[test]
    fn schubert_harness_a2_word_12() {
        let word = BsWord::new(3, vec![1, 2]).unwrap();
        let report = schubert_discrepancies(&word, Some(3)).unwrap();
        assert!(report
            .entries
            .iter()
            .all(|e| e.kind == DivisorKind::Strict && e.coefficient == Rat::from(0)));
        assert!(report.stricts_consistent);
        assert_eq!(report.classification, Classification::Klt);
    }

    #[test]
    fn schubert_harness_a2_word_121() {
        let word = BsWord::new(3, vec![1, 2, 1]).unwrap();
        let report = schubert_discrepancies(&word, Some(2)).unwrap();
        let kinds: Vec<DivisorKind> = report.entries.iter().map(|e| e.kind).collect();
        assert_eq!(
            kinds,
            vec![
                DivisorKind::Strict,
                DivisorKind::Exceptional,
                DivisorKind::Strict
            ]
        );
        assert!(report.stricts_consistent);
        assert!(report.entries[1].coefficient > Rat::from(-1));
        assert_eq!(report.classification, Classification::Klt);
    }

    #[test]
    fn schubert_harness_rejects_bad_input() {
        let word = BsWord::new(3, vec![1, 1]).unwrap();
        assert!(matches!(
            schubert_discrepancies(&word, None),
            Err(Error::NotReduced)
        ));
        let word = BsWord::new(3, vec![1, 2]).unwrap();
        assert!(matches!(
            schubert_discrepancies(&word, Some(2)),
            Err(Error::NTooSmall(2, 2))
        ));
    }
}
