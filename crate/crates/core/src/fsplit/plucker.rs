//! Pluecker models of small type A flag varieties: variables indexed by
//! proper nonempty subsets, relations computed as the kernel of the
//! substitution p_S -> minor(rows S, first |S| columns) of a generic
//! matrix, and Richardson ideals via the k-subset coset order.

use super::groebner::{groebner, intersection, GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::poly::{Field, Monomial, Q, Ring, SparsePolynomial};
use crate::richardson::{boundary, Side};
use crate::typea::{coset, permutation, subset_leq, type_a_size};
use crate::weyl::WeylElement;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Proper nonempty subsets of `{1..n}` ordered by (size, lexicographic).
pub fn plucker_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << n) - 1 {
        let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        out.push(subset);
    }
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

fn subset_name(subset: &[usize]) -> String {
    let digits: String = subset.iter().map(|d| d.to_string()).collect();
    format!("p{digits}")
}

/// Minor of the generic n x n matrix on the given rows and the first
/// |rows| columns, as a polynomial in the n^2 entry variables.
fn generic_minor(n: usize, rows: &[usize]) -> SparsePolynomial<Q> {
    let k = rows.len();
    let nvars = n * n;
    let mut out = SparsePolynomial::zero(nvars);
    for (perm, sign) in all_permutations(k) {
        let mut exps = vec![0u16; nvars];
        for (col, &row_idx) in perm.iter().enumerate() {
            let row = rows[row_idx] - 1;
            exps[row * n + col] += 1;
        }
        out.add_term(Monomial(exps), Q::from_int(sign));
    }
    out
}

/// All permutations of `0..k` with signs from inversion counts.
fn all_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn recurse(remaining: &mut Vec<usize>, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.is_empty() {
            out.push(current.clone());
            return;
        }
        for i in 0..remaining.len() {
            let item = remaining.remove(i);
            current.push(item);
            recurse(remaining, current, out);
            current.pop();
            remaining.insert(i, item);
        }
    }
    let mut perms = Vec::new();
    recurse(&mut (0..k).collect(), &mut Vec::new(), &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let mut inversions = 0;
            for i in 0..p.len() {
                for j in (i + 1)..p.len() {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

/// Nullspace basis of the column system `M c = 0` over the rationals, via
/// reduced row echelon form. Deterministic.
fn nullspace(mut m: Vec<Vec<Q>>, ncols: usize) -> Vec<Vec<Q>> {
    let nrows = m.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..ncols {
                    let delta = &factor * &m[row][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::from_int(1);
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Scales to a primitive integer vector with positive degrevlex-leading
/// coefficient, then reads the coefficients back as exact integers.
fn primitive_relation(
    nvars: usize,
    columns: &[(usize, usize)],
    coeffs: &[Q],
) -> SparsePolynomial<Q> {
    let mut denominator_lcm = BigInt::from(1);
    for c in coeffs {
        denominator_lcm = denominator_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Q::from_integer(denominator_lcm.clone())).to_integer())
        .collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    let scaled: Vec<BigInt> = ints.iter().map(|v| v / &gcd).collect();
    let mut poly = SparsePolynomial::zero(nvars);
    for ((s, t), coeff) in columns.iter().zip(&scaled) {
        if coeff.is_zero() {
            continue;
        }
        let mono = Monomial::var(nvars, *s).mul(&Monomial::var(nvars, *t));
        poly.add_term(mono, Q::from_integer(coeff.clone()));
    }
    if let Some((_, lead)) = poly.leading() {
        if lead.is_negative() {
            return poly.neg();
        }
    }
    poly
}

/// Quadratic relations of the flag model over the rationals: for each pair
/// of subset sizes, the kernel of evaluating degree-(1,1) monomials at the
/// generic minors. Quadrics generate the full kernel for these models.
fn relations_over_q(n: usize, subsets: &[Vec<usize>]) -> Vec<SparsePolynomial<Q>> {
    let nvars = subsets.len();
    let minors: Vec<SparsePolynomial<Q>> = subsets.iter().map(|s| generic_minor(n, s)).collect();
    let mut relations = Vec::new();
    let sizes: Vec<usize> = {
        let mut out: Vec<usize> = subsets.iter().map(|s| s.len()).collect();
        out.dedup();
        out
    };
    for &k in &sizes {
        for &l in &sizes {
            if k > l {
                continue;
            }
            let mut columns: Vec<(usize, usize)> = Vec::new();
            for (si, s) in subsets.iter().enumerate() {
                if s.len() != k {
                    continue;
                }
                for (ti, t) in subsets.iter().enumerate() {
                    if t.len() != l {
                        continue;
                    }
                    if k == l && ti < si {
                        continue;
                    }
                    columns.push((si, ti));
                }
            }
            let products: Vec<SparsePolynomial<Q>> = columns
                .iter()
                .map(|&(s, t)| minors[s].mul(&minors[t]))
                .collect();
            let mut monomials: Vec<Monomial> = Vec::new();
            for p in &products {
                for (m, _) in p.terms() {
                    if !monomials.contains(m) {
                        monomials.push(m.clone());
                    }
                }
            }
            monomials.sort();
            let matrix: Vec<Vec<Q>> = monomials
                .iter()
                .map(|m| {
                    products
                        .iter()
                        .map(|p| {
                            p.terms()
                                .find(|(pm, _)| *pm == m)
                                .map(|(_, c)| c.clone())
                                .unwrap_or_else(Q::zero)
                        })
                        .collect()
                })
                .collect();
            for kernel_vector in nullspace(matrix, columns.len()) {
                relations.push(primitive_relation(nvars, &columns, &kernel_vector));
            }
        }
    }
    relations
}

/// A Pluecker model of the full flag variety of an n-dimensional space,
/// n between 2 and 4.
#[derive(Debug, Clone)]
pub struct PluckerModel<F: Field> {
    pub n: usize,
    pub ring: Ring,
    pub subsets: Vec<Vec<usize>>,
    pub relations: Vec<SparsePolynomial<F>>,
}

impl<F: Field> PluckerModel<F> {
    pub fn relations_ideal(&self) -> Ideal<F> {
        Ideal {
            ring: self.ring.clone(),
            gens: self.relations.clone(),
        }
    }

    pub fn var_of_subset(&self, subset: &[usize]) -> Option<usize> {
        self.subsets.iter().position(|s| s == subset)
    }
}

/// Builds the model: relations are computed once over the rationals and
/// mapped into the requested coefficient field.
pub fn flag_plucker_model<F: Field>(n: usize) -> Result<PluckerModel<F>> {
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedRank(n));
    }
    let subsets = plucker_subsets(n);
    let ring = Ring::new(subsets.iter().map(|s| subset_name(s)).collect());
    let relations_q = relations_over_q(n, &subsets);
    let relations = relations_q
        .iter()
        .map(|r| {
            SparsePolynomial::from_terms(
                r.nvars(),
                r.terms().map(|(m, c)| {
                    debug_assert!(c.is_integer());
                    let int = c.to_integer();
                    let small: i64 = int.try_into().expect("relation coefficients are small");
                    (m.clone(), F::from_int(small))
                }),
            )
        })
        .collect();
    Ok(PluckerModel {
        n,
        ring,
        subsets,
        relations,
    })
}

/// The generic minors themselves, for substitution checks in tests.
pub fn minor_images(n: usize, subsets: &[Vec<usize>]) -> (Ring, Vec<SparsePolynomial<Q>>) {
    let names: Vec<String> = (0..n)
        .flat_map(|r| (0..n).map(move |c| format!("x{}{}", r + 1, c + 1)))
        .collect();
    let ring = Ring::new(names);
    let images = subsets.iter().map(|s| generic_minor(n, s)).collect();
    (ring, images)
}

fn vanishing_vars<F: Field>(
    model: &PluckerModel<F>,
    v_perm: &[usize],
    w_perm: &[usize],
) -> Vec<usize> {
    model
        .subsets
        .iter()
        .enumerate()
        .filter(|(_, s)| {
            let k = s.len();
            let lower = coset(v_perm, k);
            let upper = coset(w_perm, k);
            !(subset_leq(&lower, s) && subset_leq(s, &upper))
        })
        .map(|(i, _)| i)
        .collect()
}

fn interval_ideal<F: Field>(
    model: &PluckerModel<F>,
    v: &WeylElement,
    w: &WeylElement,
) -> Result<Ideal<F>> {
    let v_perm = permutation(v, model.n)?;
    let w_perm = permutation(w, model.n)?;
    let mut gens = model.relations.clone();
    for var in vanishing_vars(model, &v_perm, &w_perm) {
        gens.push(SparsePolynomial::var(model.ring.nvars(), var));
    }
    Ideal::new(model.ring.clone(), gens)
}

/// The Richardson ideal of an interval, its boundary ideal (intersection of
/// the component ideals, so the boundary stays reduced), and the component
/// ideals themselves. All returned as reduced bases.
#[derive(Debug, Clone)]
pub struct RichardsonIdeals<F: Field> {
    pub ideal: GroebnerBasis<F>,
    pub boundary: GroebnerBasis<F>,
    pub components: Vec<(Side, WeylElement, GroebnerBasis<F>)>,
}

pub fn richardson_ideal<F: Field>(
    model: &PluckerModel<F>,
    v: &WeylElement,
    w: &WeylElement,
) -> Result<RichardsonIdeals<F>> {
    match type_a_size(v.gcm()) {
        Some(size) if size == model.n => {}
        _ => return Err(Error::MixedRootData),
    }
    if !v.bruhat_leq(w)? {
        return Err(Error::NotComparable);
    }
    let ideal = groebner(&interval_ideal(model, v, w)?);
    let mut components = Vec::new();
    let mut boundary_acc: Option<Ideal<F>> = None;
    for component in boundary(v, w)? {
        let (lo, hi) = component.interval(v, w);
        let comp_ideal = interval_ideal(model, &lo, &hi)?;
        boundary_acc = Some(match boundary_acc {
            None => comp_ideal.clone(),
            Some(prev) => intersection(&prev, &comp_ideal)?,
        });
        components.push((component.side, component.element.clone(), groebner(&comp_ideal)));
    }
    let boundary_ideal = match boundary_acc {
        Some(ideal) => groebner(&ideal),
        // empty boundary: the unit ideal, cutting out the empty set
        None => GroebnerBasis {
            ring: model.ring.clone(),
            gens: vec![SparsePolynomial::one(model.ring.nvars())],
            reduced: true,
        },
    };
    Ok(RichardsonIdeals {
        ideal,
        boundary: boundary_ideal,
        components,
    })
}
