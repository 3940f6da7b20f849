//! Exact polynomial algebra over prime fields and the rationals: Groebner
//! bases, bracket powers, colon ideals, Fedder-type purity certificates, and
//! Pluecker models of small type A flag varieties with their Richardson
//! ideals.

pub mod fedder;
pub mod groebner;
pub mod plucker;

pub use fedder::{
    bracket_power, compatible_fpure_test, fedder_fpure, torus_splitting_monomial, verify_witness,
    CompatibleReport, FedderReport, SplitReportJson,
};
pub use groebner::{
    colon, dimension, groebner, intersection, normal_form, GroebnerBasis, Ideal,
};
pub use plucker::{
    flag_plucker_model, minor_images, plucker_subsets, richardson_ideal, PluckerModel,
    RichardsonIdeals,
};

use crate::error::{Error, Result};
use crate::poly::{Field, Fp};
use crate::richardson::FpureEvidence;
use crate::typea::type_a_size;
use crate::weyl::WeylElement;

/// Supported primes for splitting computations. Bracket-power Groebner
/// computations grow quickly; desk scale is the contract.
pub const SUPPORTED_PRIMES: [u64; 4] = [2, 3, 5, 7];

pub fn check_prime(p: u64) -> Result<()> {
    if SUPPORTED_PRIMES.contains(&p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn evidence_at<F: Field>(n: usize, v: &WeylElement, w: &WeylElement) -> Result<bool> {
    let model = flag_plucker_model::<F>(n)?;
    let rich = richardson_ideal(&model, v, w)?;
    let report = compatible_fpure_test(&rich.ideal.to_ideal(), &rich.boundary.to_ideal())?;
    Ok(report.pass)
}

/// Compatible-splitting evidence for a Richardson interval, one entry per
/// requested prime. Available only when the root datum is finite type A of
/// rank at most 3 (so a Pluecker model exists); otherwise the list is empty.
pub fn compatible_evidence(
    v: &WeylElement,
    w: &WeylElement,
    primes: &[u64],
) -> Result<Vec<FpureEvidence>> {
    for &p in primes {
        check_prime(p)?;
    }
    let Some(n) = type_a_size(v.gcm()) else {
        return Ok(Vec::new());
    };
    if !(2..=4).contains(&n) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for &p in primes {
        let pass = match p {
            2 => evidence_at::<Fp<2>>(n, v, w)?,
            3 => evidence_at::<Fp<3>>(n, v, w)?,
            5 => evidence_at::<Fp<5>>(n, v, w)?,
            7 => evidence_at::<Fp<7>>(n, v, w)?,
            other => return Err(Error::NotPrime(other)),
        };
        out.push(FpureEvidence { p, pass });
    }
    Ok(out)
}
