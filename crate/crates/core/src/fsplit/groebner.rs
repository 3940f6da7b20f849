//! Buchberger engine over a generic coefficient field, with degree-ordered
//! pair selection, the coprime and chain criteria, reduced bases, normal
//! forms, elimination, ideal intersection and colon ideals.

use crate::error::{Error, Result};
use crate::poly::{Field, Monomial, MonomialOrder, Ring, SparsePolynomial};
use std::collections::BTreeSet;

/// A finitely generated ideal in a named ring.
#[derive(Debug, Clone)]
pub struct Ideal<F: Field> {
    pub ring: Ring,
    pub gens: Vec<SparsePolynomial<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: Ring, gens: Vec<SparsePolynomial<F>>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != ring.nvars() {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal { ring, gens })
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }
}

/// A reduced Groebner basis under the fixed degrevlex order: autoreduced,
/// monic generators sorted by leading monomial. Unique for the ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    pub ring: Ring,
    pub gens: Vec<SparsePolynomial<F>>,
    pub reduced: bool,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn contains(&self, f: &SparsePolynomial<F>) -> bool {
        normal_form(f, &self.gens).is_zero()
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
        }
    }
}

/// Working representation: terms sorted descending under the active order.
type WPoly<F> = Vec<(Monomial, F)>;

fn to_working<F: Field>(p: &SparsePolynomial<F>, order: MonomialOrder) -> WPoly<F> {
    let mut terms: WPoly<F> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    terms
}

fn to_poly<F: Field>(nvars: usize, w: &WPoly<F>) -> SparsePolynomial<F> {
    SparsePolynomial::from_terms(nvars, w.iter().cloned())
}

/// `a + coeff * monomial * b`, both sorted descending under `order`.
fn add_scaled<F: Field>(
    a: &WPoly<F>,
    b: &WPoly<F>,
    monomial: &Monomial,
    coeff: &F,
    order: MonomialOrder,
) -> WPoly<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() || j < b.len() {
        if j >= b.len() {
            out.push(a[i].clone());
            i += 1;
            continue;
        }
        let bm = b[j].0.mul(monomial);
        if i >= a.len() {
            let c = coeff.clone() * b[j].1.clone();
            if !c.is_zero() {
                out.push((bm, c));
            }
            j += 1;
            continue;
        }
        match order.cmp(&a[i].0, &bm) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                let c = coeff.clone() * b[j].1.clone();
                if !c.is_zero() {
                    out.push((bm, c));
                }
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = a[i].1.clone() + coeff.clone() * b[j].1.clone();
                if !c.is_zero() {
                    out.push((bm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Full multivariate division remainder: no remainder term is divisible by
/// any basis leading monomial.
fn reduce_full<F: Field>(f: WPoly<F>, basis: &[WPoly<F>], order: MonomialOrder) -> WPoly<F> {
    let mut work = f;
    let mut remainder: WPoly<F> = Vec::new();
    'outer: while let Some((m, c)) = work.first().cloned() {
        for g in basis {
            let (gm, gc) = &g[0];
            if gm.divides(&m) {
                let factor = -(c.clone() * gc.inv());
                let quotient = gm.quotient(&m);
                work = add_scaled(&work, g, &quotient, &factor, order);
                continue 'outer;
            }
        }
        remainder.push((m, c));
        work.remove(0);
    }
    remainder
}

fn s_poly<F: Field>(f: &WPoly<F>, g: &WPoly<F>, order: MonomialOrder) -> WPoly<F> {
    let (fm, fc) = &f[0];
    let (gm, gc) = &g[0];
    let lcm = fm.lcm(gm);
    let left = add_scaled(
        &Vec::new(),
        f,
        &fm.quotient(&lcm),
        &fc.inv(),
        order,
    );
    add_scaled(&left, g, &gm.quotient(&lcm), &(-gc.inv()), order)
}

/// Buchberger with degree-ordered pair selection and the coprime and chain
/// criteria, followed by autoreduction to the reduced basis.
pub(crate) fn buchberger_engine<F: Field>(
    nvars: usize,
    gens: &[SparsePolynomial<F>],
    order: MonomialOrder,
) -> Vec<SparsePolynomial<F>> {
    let mut basis: Vec<WPoly<F>> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(to_working(g, order));
        }
    }
    // queue keyed by (lcm degree, j, i); done-pairs feed the chain criterion
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let enqueue = |queue: &mut BTreeSet<(u32, usize, usize)>, basis: &[WPoly<F>], i: usize, j: usize| {
        let lcm = basis[i][0].0.lcm(&basis[j][0].0);
        queue.insert((lcm.degree(), j, i));
    };
    for j in 1..basis.len() {
        for i in 0..j {
            enqueue(&mut queue, &basis, i, j);
        }
    }
    while let Some(&(deg, j, i)) = queue.iter().next() {
        queue.remove(&(deg, j, i));
        done.insert((i, j));
        let lcm = basis[i][0].0.lcm(&basis[j][0].0);
        if basis[i][0].0.is_coprime(&basis[j][0].0) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let r = reduce_full(s, &basis, order);
        if !r.is_empty() {
            basis.push(r);
            let new = basis.len() - 1;
            for k in 0..new {
                enqueue(&mut queue, &basis, k, new);
            }
        }
    }
    autoreduce(nvars, basis, order)
}

fn autoreduce<F: Field>(
    nvars: usize,
    mut basis: Vec<WPoly<F>>,
    order: MonomialOrder,
) -> Vec<SparsePolynomial<F>> {
    // minimalize: drop generators whose lead is divisible by another lead
    basis.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut minimal: Vec<WPoly<F>> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    // tail-reduce each generator against the others until stable
    loop {
        let mut changed = false;
        for idx in 0..minimal.len() {
            let others: Vec<WPoly<F>> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != idx)
                .map(|(_, g)| g.clone())
                .collect();
            let reduced = reduce_full(minimal[idx].clone(), &others, order);
            if reduced != minimal[idx] {
                minimal[idx] = reduced;
                changed = true;
            }
        }
        minimal.retain(|g| !g.is_empty());
        if !changed {
            break;
        }
    }
    for g in &mut minimal {
        let lc = g[0].1.clone();
        if !lc.is_one() {
            let inv = lc.inv();
            for term in g.iter_mut() {
                term.1 = term.1.clone() * inv.clone();
            }
        }
    }
    minimal.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    minimal.iter().map(|g| to_poly(nvars, g)).collect()
}

/// Reduced Groebner basis under degrevlex. Deterministic.
pub fn groebner<F: Field>(ideal: &Ideal<F>) -> GroebnerBasis<F> {
    let gens = buchberger_engine(ideal.ring.nvars(), &ideal.gens, MonomialOrder::DegRevLex);
    GroebnerBasis {
        ring: ideal.ring.clone(),
        gens,
        reduced: true,
    }
}

/// Normal form of `f` against a (not necessarily reduced) basis under
/// degrevlex.
pub fn normal_form<F: Field>(
    f: &SparsePolynomial<F>,
    basis: &[SparsePolynomial<F>],
) -> SparsePolynomial<F> {
    let order = MonomialOrder::DegRevLex;
    let working: Vec<WPoly<F>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_working(g, order))
        .collect();
    let r = reduce_full(to_working(f, order), &working, order);
    to_poly(f.nvars(), &r)
}

/// Krull dimension of the quotient: the largest variable subset that meets
/// the support of no leading monomial. The zero ideal in r variables gives
/// r; the unit ideal is reported as 0.
pub fn dimension<F: Field>(gb: &GroebnerBasis<F>) -> usize {
    let nvars = gb.ring.nvars();
    assert!(nvars <= 24, "combinatorial dimension is desk-scale only");
    if gb.gens.iter().any(|g| {
        g.leading()
            .map(|(m, _)| m.is_one())
            .unwrap_or(false)
    }) {
        return 0;
    }
    let supports: Vec<u32> = gb
        .gens
        .iter()
        .filter_map(|g| g.leading())
        .map(|(m, _)| {
            m.0.iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let mut best = 0;
    for mask in 0u32..(1 << nvars) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !mask != 0) {
            best = size;
        }
    }
    best
}

fn ring_with_tag(ring: &Ring) -> Ring {
    let mut names = vec!["_t".to_string()];
    names.extend(ring.names().iter().cloned());
    Ring::new(names)
}

fn lift_front<F: Field>(p: &SparsePolynomial<F>) -> SparsePolynomial<F> {
    SparsePolynomial::from_terms(
        p.nvars() + 1,
        p.terms().map(|(m, c)| {
            let mut exps = vec![0u16];
            exps.extend_from_slice(&m.0);
            (Monomial(exps), c.clone())
        }),
    )
}

fn strip_front<F: Field>(p: &SparsePolynomial<F>) -> SparsePolynomial<F> {
    SparsePolynomial::from_terms(
        p.nvars() - 1,
        p.terms().map(|(m, c)| (Monomial(m.0[1..].to_vec()), c.clone())),
    )
}

/// Intersection of two ideals by eliminating `t` from `t*A + (1-t)*B`.
pub fn intersection<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    let nvars = a.ring.nvars();
    let t = SparsePolynomial::<F>::var(nvars + 1, 0);
    let one_minus_t = SparsePolynomial::<F>::one(nvars + 1).sub(&t);
    let mut ext_gens = Vec::new();
    for g in &a.gens {
        ext_gens.push(t.mul(&lift_front(g)));
    }
    for g in &b.gens {
        ext_gens.push(one_minus_t.mul(&lift_front(g)));
    }
    let gb = buchberger_engine(nvars + 1, &ext_gens, MonomialOrder::ElimFirst(1));
    let gens: Vec<SparsePolynomial<F>> = gb
        .iter()
        .filter(|g| g.terms().all(|(m, _)| m.0[0] == 0))
        .map(strip_front)
        .collect();
    let _ = ring_with_tag(&a.ring); // the extended ring only exists inside the elimination
    Ideal::new(a.ring.clone(), gens)
}

/// Exact division by a single polynomial; the caller guarantees membership
/// in the principal ideal.
fn divide_exact<F: Field>(h: &SparsePolynomial<F>, g: &SparsePolynomial<F>) -> SparsePolynomial<F> {
    let order = MonomialOrder::DegRevLex;
    let gw = to_working(g, order);
    let mut work = to_working(h, order);
    let mut quotient: WPoly<F> = Vec::new();
    while let Some((m, c)) = work.first().cloned() {
        let (gm, gc) = &gw[0];
        assert!(gm.divides(&m), "division must be exact");
        let q = gm.quotient(&m);
        let qc = c.clone() * gc.inv();
        quotient.push((q.clone(), qc.clone()));
        work = add_scaled(&work, &gw, &q, &(-qc), order);
    }
    to_poly(h.nvars(), &quotient)
}

/// Colon ideal `(J : I)`, computed as the intersection over the generators
/// `g` of `I` of `(J cap (g)) / g`. Returns reduced basis generators.
pub fn colon<F: Field>(j: &Ideal<F>, i: &Ideal<F>) -> Result<GroebnerBasis<F>> {
    if j.ring != i.ring {
        return Err(Error::RingMismatch);
    }
    let gens: Vec<&SparsePolynomial<F>> = i.gens.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        // (J : 0) is the whole ring
        return Ok(GroebnerBasis {
            ring: j.ring.clone(),
            gens: vec![SparsePolynomial::one(j.ring.nvars())],
            reduced: true,
        });
    }
    let mut acc: Option<Ideal<F>> = None;
    for g in gens {
        let principal = Ideal::new(j.ring.clone(), vec![(*g).clone()])?;
        let meet = intersection(j, &principal)?;
        let quotient_gens: Vec<SparsePolynomial<F>> =
            meet.gens.iter().map(|h| divide_exact(h, g)).collect();
        let part = Ideal::new(j.ring.clone(), quotient_gens)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersection(&prev, &part)?,
        });
    }
    Ok(groebner(&acc.unwrap()))
}

/// Leading monomials of a reduced basis, for tests and reports.
pub fn leading_monomials<F: Field>(gb: &GroebnerBasis<F>) -> Vec<Monomial> {
    gb.gens
        .iter()
        .filter_map(|g| g.leading())
        .map(|(m, _)| m.clone())
        .collect()
}

/// Deterministic pseudo-random combinations of the generators, used by the
/// test suite to probe normal forms.
pub fn random_combination<F: Field>(
    ideal: &Ideal<F>,
    seed: u64,
) -> SparsePolynomial<F> {
    // xorshift; enough to vary coefficients and monomial multipliers
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).max(1);
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let nvars = ideal.ring.nvars();
    let mut out = SparsePolynomial::zero(nvars);
    for g in &ideal.gens {
        let coeff = F::from_int((next() % 19) as i64 - 9);
        let mut exps = vec![0u16; nvars];
        exps[(next() as usize) % nvars] = (next() % 3) as u16;
        let multiplier = SparsePolynomial::from_terms(nvars, [(Monomial(exps), coeff)]);
        out = out.add(&multiplier.mul(g));
    }
    out
}
