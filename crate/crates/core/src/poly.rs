//! Exact sparse multivariate polynomials, generic over the coefficient
//! field. Coefficients are either exact rationals or a prime field; there is
//! no floating point anywhere.
//!
//! Terms are stored in a BTreeMap keyed by monomials under the fixed public
//! order (degrevlex). The Groebner engine re-sorts working copies when it
//! needs an elimination order.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational coefficients (characteristic zero).
pub type Q = BigRational;

/// Coefficient field: exact, with explicit inversion and integer embedding.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// 0 in characteristic zero, p for a prime field.
    const CHARACTERISTIC: u64;

    /// Multiplicative inverse; callers guarantee the value is nonzero.
    fn inv(&self) -> Self;

    fn from_int(n: i64) -> Self;
}

impl Field for Q {
    const CHARACTERISTIC: u64 = 0;

    fn inv(&self) -> Self {
        self.recip()
    }

    fn from_int(n: i64) -> Self {
        Q::from_integer(BigInt::from(n))
    }
}

/// Prime field of order `P`, for the supported primes 2, 3, 5, 7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(value: i64) -> Self {
        let p = P as i64;
        Fp(value.rem_euclid(p) as u64)
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Fp::<P>(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 * rhs.0) % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn inv(&self) -> Self {
        debug_assert!(self.0 != 0, "inverse of zero");
        self.pow(P - 2)
    }

    fn from_int(n: i64) -> Self {
        Fp::new(n)
    }
}

/// Exponent vector. Comparison is the fixed public order, degrevlex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial(exps)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    pub fn pow(&self, e: u16) -> Monomial {
        Monomial(self.0.iter().map(|&a| a * e).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    /// `other / self`; caller checks divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(
            other
                .0
                .iter()
                .zip(&self.0)
                .map(|(&b, &a)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Degrevlex comparison: higher total degree wins; on ties the last nonzero
/// coordinate of the difference is negative for the larger monomial.
fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex(&self.0, &other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Monomial orders used by the Groebner engine. `ElimFirst(k)` is the block
/// order that eliminates the first `k` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    DegRevLex,
    ElimFirst(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::ElimFirst(k) => degrevlex(&a.0[..k], &b.0[..k])
                .then_with(|| degrevlex(&a.0[k..], &b.0[k..])),
        }
    }
}

/// Sparse polynomial: nonzero coefficients only, terms sorted by degrevlex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial<F: Field> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> SparsePolynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, value: F) -> Self {
        let mut p = Self::zero(nvars);
        if !value.is_zero() {
            p.terms.insert(Monomial::one(nvars), value);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(nvars, index), F::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_one() && c.clone().is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&monomial) {
            None => {
                self.terms.insert(monomial, coeff);
            }
            Some(existing) => {
                let sum = existing + coeff;
                if !sum.is_zero() {
                    self.terms.insert(monomial, sum);
                }
            }
        }
    }

    /// Leading term under the fixed degrevlex order.
    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.last_key_value()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Lowest exponent of the given variable over all terms: the
    /// variable-adic valuation with the other variables generic.
    pub fn valuation_in(&self, var: usize) -> Option<u16> {
        self.terms.keys().map(|m| m.0[var]).min()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn mul_term(&self, monomial: &Monomial, coeff: &F) -> Self {
        if coeff.is_zero() {
            return Self::zero(self.nvars);
        }
        SparsePolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(monomial), c.clone() * coeff.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, coeff: &F) -> Self {
        self.mul_term(&Monomial::one(self.nvars), coeff)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Divides the leading coefficient out so the polynomial is monic.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Substitutes `images[i]` for variable `i`; the images live in a ring
    /// with `target_nvars` variables.
    pub fn substitute(&self, images: &[Self], target_nvars: usize) -> Self {
        let mut out = Self::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target_nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e as u32));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Maps coefficients into another field, dropping terms that die.
    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> SparsePolynomial<G> {
        SparsePolynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }
}

/// Variable names of a polynomial ring; equality is by name list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new(names: Vec<String>) -> Self {
        Ring { names }
    }

    pub fn with_prefix(prefix: &str, count: usize) -> Self {
        Ring::new((1..=count).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn display<'a, F: Field>(&'a self, poly: &'a SparsePolynomial<F>) -> PolyDisplay<'a, F> {
        PolyDisplay { ring: self, poly }
    }

    /// Parses integer-coefficient polynomial text: `'*'` optional between
    /// factors, `^` for powers, variables matched against the ring names.
    pub fn parse<F: Field>(&self, src: &str) -> Result<SparsePolynomial<F>> {
        let tokens = tokenize(src)?;
        let nvars = self.nvars();
        let mut poly = SparsePolynomial::zero(nvars);
        let mut idx = 0;
        let mut first = true;
        while idx < tokens.len() {
            // leading sign of the term
            let sign = match &tokens[idx] {
                Token::Plus => {
                    idx += 1;
                    1i64
                }
                Token::Minus => {
                    idx += 1;
                    -1i64
                }
                _ if first => 1i64,
                other => {
                    return Err(Error::Parse(format!("expected + or -, found {other:?}")));
                }
            };
            first = false;
            let mut coeff = F::from_int(sign);
            let mut monomial = Monomial::one(nvars);
            let mut has_factor = false;
            loop {
                match tokens.get(idx) {
                    Some(Token::Int(n)) => {
                        coeff = coeff * F::from_int(*n);
                        idx += 1;
                        has_factor = true;
                    }
                    Some(Token::Ident(name)) => {
                        let var = self
                            .var_index(name)
                            .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                        idx += 1;
                        let mut exp = 1u16;
                        if matches!(tokens.get(idx), Some(Token::Caret)) {
                            idx += 1;
                            match tokens.get(idx) {
                                Some(Token::Int(n)) if *n >= 0 => {
                                    exp = *n as u16;
                                    idx += 1;
                                }
                                _ => return Err(Error::Parse("expected exponent".into())),
                            }
                        }
                        monomial = monomial.mul(&Monomial::var(nvars, var).pow(exp));
                        has_factor = true;
                    }
                    Some(Token::Star) => {
                        idx += 1;
                    }
                    _ => break,
                }
            }
            if !has_factor {
                return Err(Error::Parse("empty term".into()));
            }
            poly.add_term(monomial, coeff);
        }
        Ok(poly)
    }
}

#[derive(Debug, PartialEq)]
enum Token {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '0'..='9' => {
                let mut n = 0i64;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n * 10 + v as i64;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(name));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

pub struct PolyDisplay<'a, F: Field> {
    ring: &'a Ring,
    poly: &'a SparsePolynomial<F>,
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        // leading term first
        for (i, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let coeff_str = c.to_string();
            let (sign, magnitude) = match coeff_str.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", coeff_str),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let mut factors = Vec::new();
            if magnitude != "1" || m.is_one() {
                factors.push(magnitude.clone());
            }
            for (j, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.names()[j].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.names()[j], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
