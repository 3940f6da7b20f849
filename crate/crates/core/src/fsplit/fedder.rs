//! Frobenius bracket powers, Fedder-type purity tests at the cone point,
//! and compatible-splitting certificates for nested homogeneous ideals.

use super::groebner::{colon, groebner, intersection, Ideal};
use crate::error::{Error, Result};
use crate::poly::{Field, Monomial, Ring, SparsePolynomial};
use serde::Serialize;

/// Frobenius bracket power `I^[p^e]`, generated by the `p^e`-th powers of
/// the generators. Only meaningful over a prime field.
pub fn bracket_power<F: Field>(ideal: &Ideal<F>, e: u32) -> Result<Ideal<F>> {
    let p = F::CHARACTERISTIC;
    if p == 0 {
        return Err(Error::WrongField);
    }
    let q = p.pow(e);
    assert!(q <= u16::MAX as u64, "bracket exponent overflows the monomial type");
    let gens = ideal
        .gens
        .iter()
        .map(|g| {
            // termwise Frobenius: coefficients of F_p are fixed by x -> x^q
            SparsePolynomial::from_terms(
                g.nvars(),
                g.terms().map(|(m, c)| (m.pow(q as u16), c.clone())),
            )
        })
        .collect();
    Ideal::new(ideal.ring.clone(), gens)
}

/// True when some monomial of `g` lies outside `m^[p]`, i.e. has every
/// exponent below `p`.
fn outside_bracket_maximal<F: Field>(g: &SparsePolynomial<F>, p: u64) -> bool {
    g.terms()
        .any(|(m, _)| m.0.iter().all(|&e| (e as u64) < p))
}

#[derive(Debug, Clone)]
pub struct FedderReport<F: Field> {
    pub p: u64,
    pub is_split: bool,
    pub witness: Option<SparsePolynomial<F>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitReportJson {
    pub p: u64,
    pub pass: bool,
    pub witness: Option<String>,
}

impl<F: Field> FedderReport<F> {
    pub fn to_json(&self, ring: &Ring) -> SplitReportJson {
        SplitReportJson {
            p: self.p,
            pass: self.is_split,
            witness: self.witness.as_ref().map(|w| ring.display(w).to_string()),
        }
    }
}

/// Fedder test at the cone point for a homogeneous ideal over `F_p`: the
/// cone is split exactly when `(I^[p] : I)` is not contained in
/// `m^[p] = (x_1^p, ..., x_r^p)`. Membership is decided monomial-wise; the
/// witness is the first reduced-basis generator outside.
pub fn fedder_fpure<F: Field>(ideal: &Ideal<F>) -> Result<FedderReport<F>> {
    let p = F::CHARACTERISTIC;
    if p == 0 {
        return Err(Error::WrongField);
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let bracket = bracket_power(ideal, 1)?;
    let quotient = colon(&bracket, ideal)?;
    let witness = quotient
        .gens
        .iter()
        .find(|g| outside_bracket_maximal(g, p))
        .cloned();
    Ok(FedderReport {
        p,
        is_split: witness.is_some(),
        witness,
    })
}

#[derive(Debug, Clone)]
pub struct CompatibleReport<F: Field> {
    pub p: u64,
    pub pass: bool,
    pub witness: Option<SparsePolynomial<F>>,
}

impl<F: Field> CompatibleReport<F> {
    pub fn to_json(&self, ring: &Ring) -> SplitReportJson {
        SplitReportJson {
            p: self.p,
            pass: self.pass,
            witness: self.witness.as_ref().map(|w| ring.display(w).to_string()),
        }
    }
}

/// Compatible-splitting test for nested homogeneous ideals `I` inside `J`:
/// passes when `(I^[p] : I) cap (J^[p] : J)` escapes `m^[p]`. A passing
/// witness certifies a splitting of the ambient cone compatible with both
/// subschemes at once.
pub fn compatible_fpure_test<F: Field>(
    i: &Ideal<F>,
    j: &Ideal<F>,
) -> Result<CompatibleReport<F>> {
    let p = F::CHARACTERISTIC;
    if p == 0 {
        return Err(Error::WrongField);
    }
    if i.ring != j.ring {
        return Err(Error::RingMismatch);
    }
    if !i.is_homogeneous() || !j.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let j_basis = groebner(j);
    if !i.gens.iter().all(|g| j_basis.contains(g)) {
        return Err(Error::NotNested);
    }
    let ci = colon(&bracket_power(i, 1)?, i)?;
    let cj = colon(&bracket_power(j, 1)?, j)?;
    let meet = groebner(&intersection(&ci.to_ideal(), &cj.to_ideal())?);
    let witness = meet
        .gens
        .iter()
        .find(|g| outside_bracket_maximal(g, p))
        .cloned();
    Ok(CompatibleReport {
        p,
        pass: witness.is_some(),
        witness,
    })
}

/// Re-verifies a splitting witness independently of the colon computation:
/// `u * g` must reduce to zero modulo `I^[p]` for every generator `g`, and
/// `u` must have a monomial with all exponents below `p`.
pub fn verify_witness<F: Field>(ideal: &Ideal<F>, witness: &SparsePolynomial<F>) -> Result<bool> {
    let p = F::CHARACTERISTIC;
    if p == 0 {
        return Err(Error::WrongField);
    }
    let bracket = groebner(&bracket_power(ideal, 1)?);
    let products_vanish = ideal
        .gens
        .iter()
        .all(|g| bracket.contains(&witness.mul(g)));
    Ok(products_vanish && outside_bracket_maximal(witness, p))
}

/// The monomial `(x_1 ... x_r)^(p-1)`, the torus splitting element.
pub fn torus_splitting_monomial<F: Field>(nvars: usize) -> SparsePolynomial<F> {
    let p = F::CHARACTERISTIC;
    assert!(p > 0);
    SparsePolynomial::from_terms(
        nvars,
        [(Monomial(vec![(p - 1) as u16; nvars]), F::one())],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Fp, Q};

    fn ring_xy() -> Ring {
        Ring::new(vec!["x".into(), "y".into()])
    }

    fn ideal2<const P: u64>(ring: &Ring, srcs: &[&str]) -> Ideal<Fp<P>> {
        let gens = srcs.iter().map(|s| ring.parse(s).unwrap()).collect();
        Ideal::new(ring.clone(), gens).unwrap()
    }

    #[test]
    fn bracket_power_examples() {
        let ring = ring_xy();
        let i = ideal2::<2>(&ring, &["x + y"]);
        let b = bracket_power(&i, 1).unwrap();
        assert_eq!(ring.display(&b.gens[0]).to_string(), "x^2 + y^2");

        let i = ideal2::<3>(&ring, &["x", "y"]);
        let b = bracket_power(&i, 1).unwrap();
        assert_eq!(ring.display(&b.gens[0]).to_string(), "x^3");
        assert_eq!(ring.display(&b.gens[1]).to_string(), "y^3");

        let i = ideal2::<2>(&ring, &["x*y + y^2"]);
        let b = bracket_power(&i, 2).unwrap();
        assert_eq!(ring.display(&b.gens[0]).to_string(), "x^4*y^4 + y^8");

        let rational: Ideal<Q> =
            Ideal::new(ring.clone(), vec![ring.parse("x").unwrap()]).unwrap();
        assert!(matches!(bracket_power(&rational, 1), Err(Error::WrongField)));
    }

    #[test]
    fn fedder_splits_the_coordinate_cross() {
        let ring = ring_xy();
        let i = ideal2::<2>(&ring, &["x*y"]);
        let report = fedder_fpure(&i).unwrap();
        assert!(report.is_split);
        let w = report.witness.unwrap();
        assert_eq!(ring.display(&w).to_string(), "x*y");
        assert!(verify_witness(&i, &w).unwrap());
    }

    #[test]
    fn fedder_rejects_the_double_line() {
        let ring = ring_xy();
        let i = ideal2::<2>(&ring, &["x^2"]);
        let report = fedder_fpure(&i).unwrap();
        assert!(!report.is_split);
        assert!(report.witness.is_none());
    }

    #[test]
    fn fedder_requires_homogeneous_input() {
        let ring = ring_xy();
        let i = ideal2::<2>(&ring, &["x^2 + y"]);
        assert!(matches!(fedder_fpure(&i), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn zero_ideal_splits_with_torus_monomial() {
        let ring = ring_xy();
        let zero = ideal2::<3>(&ring, &[]);
        let report = fedder_fpure(&zero).unwrap();
        assert!(report.is_split);
        let torus = torus_splitting_monomial::<Fp<3>>(2);
        assert!(verify_witness(&zero, &torus).unwrap());
    }

    #[test]
    fn compatible_examples() {
        let ring = ring_xy();
        let zero = ideal2::<2>(&ring, &[]);
        let cross = ideal2::<2>(&ring, &["x*y"]);
        let report = compatible_fpure_test(&zero, &cross).unwrap();
        assert!(report.pass);
        assert_eq!(
            ring.display(&report.witness.unwrap()).to_string(),
            "x*y"
        );

        let fat = ideal2::<2>(&ring, &["x^2*y"]);
        let report = compatible_fpure_test(&zero, &fat).unwrap();
        assert!(!report.pass);
    }

    #[test]
    fn compatible_requires_nesting() {
        let ring = ring_xy();
        let i = ideal2::<2>(&ring, &["x"]);
        let j = ideal2::<2>(&ring, &["y"]);
        assert!(matches!(
            compatible_fpure_test(&i, &j),
            Err(Error::NotNested)
        ));
    }

    #[test]
    fn compatible_pass_implies_both_fedder_pass() {
        let ring = ring_xy();
        let i = ideal2::<2>(&ring, &["x"]);
        let j = ideal2::<2>(&ring, &["x", "y"]);
        let report = compatible_fpure_test(&i, &j).unwrap();
        if report.pass {
            let w = report.witness.unwrap();
            assert!(verify_witness(&i, &w).unwrap());
            assert!(verify_witness(&j, &w).unwrap());
            assert!(fedder_fpure(&i).unwrap().is_split);
            assert!(fedder_fpure(&j).unwrap().is_split);
        }
    }
}
