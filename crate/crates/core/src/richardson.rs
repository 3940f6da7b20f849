//! Boundary divisor data on a Richardson interval: components with their
//! multiplicities b_i, the pair (N, Delta), K + Delta, Chevalley chain
//! degrees, discrepancy tables and aggregated certificates.

use crate::cartan::{pair, Weight};
use crate::error::{Error, Result};
use crate::weyl::{
    cocovers_in_interval, covers_in_interval, maximal_chains, CoverDatum, WeylElement,
};
use num_rational::Rational64;
use serde::Serialize;

pub type Rat = Rational64;

/// Which side of the boundary a component lives on: `V` for components that
/// raise the lower end of the interval, `W` for components that lower the
/// upper end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    V,
    W,
}

/// A prime divisor of the boundary, with its cover reflection data and the
/// multiplicity `b = <rho, beta^vee>`.
#[derive(Debug, Clone)]
pub struct BoundaryComponent {
    pub side: Side,
    pub element: WeylElement,
    pub cover: CoverDatum,
    pub b: i64,
}

impl BoundaryComponent {
    /// Interval cut out by this component: `[element, w]` on the V side,
    /// `[v, element]` on the W side.
    pub fn interval(&self, v: &WeylElement, w: &WeylElement) -> (WeylElement, WeylElement) {
        match self.side {
            Side::V => (self.element.clone(), w.clone()),
            Side::W => (v.clone(), self.element.clone()),
        }
    }
}

/// All boundary components of the interval `[v, w]`: V-side covers of `v`
/// below `w` first, then W-side cocovers of `w` above `v`, each side in
/// canonical-word order.
pub fn boundary(v: &WeylElement, w: &WeylElement) -> Result<Vec<BoundaryComponent>> {
    let mut out = Vec::new();
    for cover in covers_in_interval(v, w)? {
        out.push(BoundaryComponent {
            side: Side::V,
            element: cover.upper.clone(),
            b: cover.rho_pairing,
            cover,
        });
    }
    for cover in cocovers_in_interval(v, w)? {
        out.push(BoundaryComponent {
            side: Side::W,
            element: cover.lower.clone(),
            b: cover.rho_pairing,
            cover,
        });
    }
    Ok(out)
}

/// The assembled pair data: components, the chosen `N`, the Delta
/// coefficients `1 - b_i/N` and the `K + Delta` coefficients `-b_i/N`.
#[derive(Debug, Clone)]
pub struct PairDatum {
    pub v: WeylElement,
    pub w: WeylElement,
    pub components: Vec<BoundaryComponent>,
    pub n: i64,
    pub delta: Vec<Rat>,
    pub k_plus_delta: Vec<Rat>,
}

/// Builds the pair. Default `N` is the smallest admissible value
/// `max(b_i) + 1`, or 1 for an empty boundary.
pub fn pair_datum(v: &WeylElement, w: &WeylElement, n_opt: Option<i64>) -> Result<PairDatum> {
    let components = boundary(v, w)?;
    let max_b = components.iter().map(|c| c.b).max().unwrap_or(0);
    let n = n_opt.unwrap_or(max_b + 1);
    if n <= max_b {
        return Err(Error::NTooSmall(n, max_b));
    }
    if n < 1 {
        return Err(Error::NTooSmall(n, 0));
    }
    let delta: Vec<Rat> = components
        .iter()
        .map(|c| Rat::from(1) - Rat::new(c.b, n))
        .collect();
    let k_plus_delta: Vec<Rat> = components.iter().map(|c| Rat::new(-c.b, n)).collect();
    Ok(PairDatum {
        v: v.clone(),
        w: w.clone(),
        components,
        n,
        delta,
        k_plus_delta,
    })
}

/// Degree of the interval under the line bundle of a dominant weight,
/// computed by the Chevalley chain formula: a sum over saturated chains of
/// the products of `<lambda, beta^vee>` along the chain.
pub fn chevalley_degree(v: &WeylElement, w: &WeylElement, lambda: &Weight) -> Result<i64> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    let mut total = 0i64;
    for chain in maximal_chains(v, w)? {
        let mut product = 1i64;
        for step in &chain {
            product *= pair(lambda, &step.coroot)?;
        }
        total += product;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

/// Checks that the degree of `[v, w]` under the weight `2 rho` equals the
/// multiplicity-weighted sum of the component degrees.
pub fn degree_identity_check(v: &WeylElement, w: &WeylElement) -> Result<DegreeReport> {
    if !v.bruhat_leq(w)? {
        return Err(Error::NotComparable);
    }
    if v.len() == w.len() {
        return Err(Error::DimensionZero);
    }
    let two_rho = Weight::two_rho(v.gcm().rank());
    let lhs = chevalley_degree(v, w, &two_rho)?;
    let mut rhs = 0i64;
    for component in boundary(v, w)? {
        let (lo, hi) = component.interval(v, w);
        rhs += component.b * chevalley_degree(&lo, &hi, &two_rho)?;
    }
    Ok(DegreeReport {
        lhs,
        rhs,
        pass: lhs == rhs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DivisorKind {
    #[serde(rename = "strict")]
    Strict,
    #[serde(rename = "exceptional")]
    Exceptional,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyEntry {
    pub label: String,
    pub kind: DivisorKind,
    pub coefficient: Rat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    #[serde(rename = "KLT")]
    Klt,
    #[serde(rename = "LogCanonical")]
    LogCanonical,
    #[serde(rename = "Neither")]
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub entries: Vec<DiscrepancyEntry>,
    pub classification: Classification,
}

/// Classifies a list of discrepancy coefficients: all > -1 is KLT,
/// all >= -1 is log canonical. An empty list is vacuously KLT.
pub fn classify<I: IntoIterator<Item = Rat>>(coefficients: I) -> Classification {
    let minus_one = Rat::from(-1);
    let mut classification = Classification::Klt;
    for e in coefficients {
        if e < minus_one {
            return Classification::Neither;
        }
        if e == minus_one {
            classification = Classification::LogCanonical;
        }
    }
    classification
}

/// Evaluates a discrepancy table from strict-transform data `(label, b_i)`
/// and exceptional data `(label, d_j)`. Strict entries sit in the
/// transformed pair and carry coefficient 0; each exceptional divisor gets
/// `d_j/N - 1`. Classification reads the exceptional coefficients.
pub fn discrepancy_eval(
    n: i64,
    stricts: &[(String, i64)],
    exceptionals: &[(String, i64)],
) -> Result<DiscrepancyReport> {
    let max_b = stricts.iter().map(|&(_, b)| b).max().unwrap_or(0);
    if n <= max_b || n < 1 {
        return Err(Error::NTooSmall(n, max_b));
    }
    let mut entries = Vec::new();
    for (label, _b) in stricts {
        entries.push(DiscrepancyEntry {
            label: label.clone(),
            kind: DivisorKind::Strict,
            coefficient: Rat::from(0),
        });
    }
    let mut exceptional_coeffs = Vec::new();
    for (label, d) in exceptionals {
        let e = Rat::new(*d, n) - Rat::from(1);
        exceptional_coeffs.push(e);
        entries.push(DiscrepancyEntry {
            label: label.clone(),
            kind: DivisorKind::Exceptional,
            coefficient: e,
        });
    }
    Ok(DiscrepancyReport {
        classification: classify(exceptional_coeffs),
        entries,
    })
}

/// The coefficient-comparison hypothesis: every `c_i` lies in `[0, 1)` and
/// is strictly below `a_i`.
pub fn lemma46_check(lc_coeffs: &[Rat], new_coeffs: &[Rat]) -> Result<bool> {
    if lc_coeffs.len() != new_coeffs.len() {
        return Err(Error::LengthMismatch(lc_coeffs.len(), new_coeffs.len()));
    }
    let zero = Rat::from(0);
    let one = Rat::from(1);
    Ok(lc_coeffs
        .iter()
        .zip(new_coeffs)
        .all(|(a, c)| *c >= zero && *c < one && c < a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FpureEvidence {
    pub p: u64,
    pub pass: bool,
}

/// Aggregated certificate: the pair, the per-index ampleness checks
/// `<2 rho, alpha_i^vee> > 0`, the degree identity, and optional prime
/// characteristic splitting evidence.
#[derive(Debug, Clone)]
pub struct KltCertificate {
    pub pair: PairDatum,
    pub ample_check: Vec<bool>,
    pub degree: DegreeReport,
    pub fpure_evidence: Vec<FpureEvidence>,
    pub verdict: bool,
}

#[derive(Debug, Clone, Default)]
pub struct CertifyOptions {
    pub n: Option<i64>,
    pub primes: Vec<u64>,
}

/// Builds the full certificate for `[v, w]`. Splitting evidence is attached
/// when primes are requested and a finite type A Pluecker model of rank at
/// most 3 covers the root datum; otherwise the evidence list stays empty.
pub fn certify(v: &WeylElement, w: &WeylElement, options: &CertifyOptions) -> Result<KltCertificate> {
    let pair_data = pair_datum(v, w, options.n)?;
    let rank = v.gcm().rank();
    let two_rho = Weight::two_rho(rank);
    let ample_check: Vec<bool> = (0..rank)
        .map(|i| {
            let mut coroot = vec![0i64; rank];
            coroot[i] = 1;
            pair(&two_rho, &coroot).map(|value| value > 0)
        })
        .collect::<Result<_>>()?;
    let degree = if v.len() == w.len() {
        // a point has no divisor decomposition; the identity holds vacuously
        DegreeReport {
            lhs: 1,
            rhs: 1,
            pass: true,
        }
    } else {
        degree_identity_check(v, w)?
    };
    let fpure_evidence = if options.primes.is_empty() {
        Vec::new()
    } else {
        crate::fsplit::compatible_evidence(v, w, &options.primes)?
    };
    let verdict = ample_check.iter().all(|&a| a)
        && degree.pass
        && fpure_evidence.iter().all(|e| e.pass);
    Ok(KltCertificate {
        pair: pair_data,
        ample_check,
        degree,
        fpure_evidence,
        verdict,
    })
}

/// Exact rational in wire form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl From<Rat> for Fraction {
    fn from(r: Rat) -> Self {
        Fraction {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentJson {
    pub side: Side,
    pub element: Vec<usize>,
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
    pub b: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub gcm: Vec<Vec<i64>>,
    pub v: Vec<usize>,
    pub w: Vec<usize>,
    pub components: Vec<ComponentJson>,
    #[serde(rename = "N")]
    pub n: i64,
    pub delta: Vec<Fraction>,
    pub degree: DegreeReport,
    pub ample: bool,
    pub fpure: Vec<FpureEvidence>,
    pub verdict: String,
}

pub fn components_json(components: &[BoundaryComponent]) -> Vec<ComponentJson> {
    components
        .iter()
        .map(|c| ComponentJson {
            side: c.side,
            element: c.element.word(),
            root: c.cover.root.clone(),
            coroot: c.cover.coroot.clone(),
            b: c.b,
        })
        .collect()
}

impl KltCertificate {
    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            gcm: self.pair.v.gcm().entries().to_vec(),
            v: self.pair.v.word(),
            w: self.pair.w.word(),
            components: components_json(&self.pair.components),
            n: self.pair.n,
            delta: self.pair.delta.iter().map(|&r| Fraction::from(r)).collect(),
            degree: self.degree,
            ample: self.ample_check.iter().all(|&a| a),
            fpure: self.fpure_evidence.clone(),
            verdict: if self.verdict { "PASS" } else { "FAIL" }.to_string(),
        }
    }
}
