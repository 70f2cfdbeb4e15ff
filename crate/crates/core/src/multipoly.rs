//! Multivariate polynomials over `F_p` in the degree reverse lexicographic order.
//!
//! Monomials are dense exponent vectors; a [`Polynomial`] is a term list kept
//! strictly sorted in descending degrevlex order with no zero coefficients.
//! The zero polynomial is the empty term list.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::FieldPrime;

/// A monomial `x1^a1 * ... * xk^ak` with cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    /// The variable `x_{index+1}` (0-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    /// Whether `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the single variable when this is a pure power `x_i^t`, `t ≥ 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    fn extended(&self, extra_exp: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(extra_exp);
        Monomial {
            exps,
            degree: self.degree + extra_exp,
        }
    }

    fn without_last(&self) -> Monomial {
        let mut exps = self.exps.clone();
        let last = exps.pop().unwrap_or(0);
        Monomial {
            exps,
            degree: self.degree - last,
        }
    }
}

/// Degrevlex with `x1 > x2 > ... > xk`: higher total degree wins; on a tie
/// the monomial whose exponent difference has a negative last nonzero entry
/// is the larger one.
pub fn degrevlex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::AmbientMismatch(format!(
            "monomials in {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(degrevlex(a, b))
}

#[inline]
fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {
            for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        }
        ord => ord,
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degrevlex. Comparing monomials of different arity is a logic error.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars());
        degrevlex(self, other)
    }
}

/// All monomials of total degree `degree` in `nvars` variables, sorted
/// descending in degrevlex.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(idx: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx + 1 == cur.len() {
            cur[idx] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[idx] = e;
            rec(idx + 1, left - e, cur, out);
        }
        cur[idx] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, degree, &mut vec![0; nvars], &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Number of monomials of degree exactly `degree` in `nvars` variables.
pub fn count_monomials(nvars: usize, degree: u32) -> u128 {
    if nvars == 0 {
        return (degree == 0) as u128;
    }
    binomial(degree as u128 + nvars as u128 - 1, nvars as u128 - 1)
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub mono: Monomial,
}

/// A polynomial in `nvars` variables over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    field: FieldPrime,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize, field: FieldPrime) -> Self {
        Polynomial {
            nvars,
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, field: FieldPrime, c: u32) -> Self {
        Self::monomial(nvars, field, c, Monomial::one(nvars))
    }

    pub fn monomial(nvars: usize, field: FieldPrime, coeff: u32, mono: Monomial) -> Self {
        debug_assert_eq!(mono.nvars(), nvars);
        let coeff = coeff % field.value();
        let terms = if coeff == 0 {
            Vec::new()
        } else {
            vec![Term { coeff, mono }]
        };
        Polynomial {
            nvars,
            field,
            terms,
        }
    }

    /// The variable `x_{index+1}`.
    pub fn var(nvars: usize, field: FieldPrime, index: usize) -> Self {
        Self::monomial(nvars, field, 1, Monomial::var(nvars, index))
    }

    /// Builds a canonical polynomial from arbitrary `(coefficient, exponents)`
    /// pairs: coefficients are reduced mod p, duplicates combined, zeros dropped.
    pub fn from_terms<I>(nvars: usize, field: FieldPrime, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Vec<u32>)>,
    {
        let mut raw = Vec::new();
        for (c, exps) in terms {
            if exps.len() != nvars {
                return Err(Error::AmbientMismatch(format!(
                    "term has {} exponents, expected {nvars}",
                    exps.len()
                )));
            }
            raw.push(Term {
                coeff: field.reduce_i64(c),
                mono: Monomial::new(exps),
            });
        }
        Ok(Self::from_raw(nvars, field, raw))
    }

    /// Canonicalizes an unsorted term list with reduced coefficients.
    pub(crate) fn from_raw(nvars: usize, field: FieldPrime, mut raw: Vec<Term>) -> Self {
        raw.sort_unstable_by(|a, b| b.mono.cmp(&a.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = field.add(last.coeff, t.coeff);
                }
                _ => terms.push(t),
            }
        }
        terms.retain(|t| t.coeff != 0);
        Polynomial {
            nvars,
            field,
            terms,
        }
    }

    /// Builds from a term list that is already strictly sorted and zero-free.
    pub(crate) fn from_sorted(nvars: usize, field: FieldPrime, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].mono > w[1].mono));
        debug_assert!(terms.iter().all(|t| t.coeff != 0));
        Polynomial {
            nvars,
            field,
            terms,
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn field(&self) -> FieldPrime {
        self.field
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn leading_term(&self) -> Option<(u32, &Monomial)> {
        self.terms.first().map(|t| (t.coeff, &t.mono))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.coeff)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.mono.degree();
                self.terms.iter().all(|s| s.mono.degree() == d)
            }
        }
    }

    /// The homogeneous component of degree `degree`.
    pub fn homogeneous_part(&self, degree: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mono.degree() == degree)
            .cloned()
            .collect();
        Polynomial::from_sorted(self.nvars, self.field, terms)
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars || self.field != other.field {
            return Err(Error::AmbientMismatch(format!(
                "{} variables over {} vs {} variables over {}",
                self.nvars, self.field, other.nvars, other.field
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let p = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let conv = |c: u32| if negate { p.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match a[i].mono.cmp(&b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: conv(b[j].coeff),
                        mono: b[j].mono.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = p.add(a[i].coeff, conv(b[j].coeff));
                    if c != 0 {
                        out.push(Term {
                            coeff: c,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term {
            coeff: conv(t.coeff),
            mono: t.mono.clone(),
        }));
        Polynomial::from_sorted(self.nvars, p, out)
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        let p = self.field;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for t in &other.terms {
                raw.push(Term {
                    coeff: p.mul(s.coeff, t.coeff),
                    mono: s.mono.mul(&t.mono),
                });
            }
        }
        Polynomial::from_raw(self.nvars, p, raw)
    }

    pub fn scalar_mul(&self, c: u32) -> Polynomial {
        let p = self.field;
        let c = c % p.value();
        if c == 0 {
            return Polynomial::zero(self.nvars, p);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: p.mul(t.coeff, c),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial::from_sorted(self.nvars, p, terms)
    }

    /// `c * m * self`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Polynomial {
        let p = self.field;
        let c = c % p.value();
        if c == 0 {
            return Polynomial::zero(self.nvars, p);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: p.mul(t.coeff, c),
                mono: t.mono.mul(m),
            })
            .collect();
        Polynomial::from_sorted(self.nvars, p, terms)
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scalar_mul(self.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// Multiplies every term by `x_{k+1}^(target - deg(term))`, producing a
    /// homogeneous polynomial of degree `target` in `k + 1` variables.
    pub fn homogenize(&self, target_degree: u32) -> Result<Polynomial> {
        if let Some(d) = self.degree() {
            if target_degree < d {
                return Err(Error::params(format!(
                    "cannot homogenize a degree-{d} polynomial to degree {target_degree}"
                )));
            }
        }
        let raw = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                mono: t.mono.extended(target_degree - t.mono.degree()),
            })
            .collect();
        Ok(Polynomial::from_raw(self.nvars + 1, self.field, raw))
    }

    /// Sets the last variable to 1, dropping it from the ambient ring.
    pub fn dehomogenize(&self) -> Result<Polynomial> {
        if self.nvars == 0 {
            return Err(Error::params("no variable to dehomogenize"));
        }
        let raw = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                mono: t.mono.without_last(),
            })
            .collect();
        Ok(Polynomial::from_raw(self.nvars - 1, self.field, raw))
    }

    /// Embeds into a ring with `extra` additional trailing variables.
    pub fn extend_ambient(&self, extra: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = t.mono.exps.clone();
                exps.resize(self.nvars + extra, 0);
                Term {
                    coeff: t.coeff,
                    mono: Monomial {
                        exps,
                        degree: t.mono.degree,
                    },
                }
            })
            .collect();
        // appending zero exponents preserves degrevlex order
        Polynomial::from_sorted(self.nvars + extra, self.field, terms)
    }

    pub fn evaluate(&self, point: &[u32]) -> Result<u32> {
        if point.len() != self.nvars {
            return Err(Error::AmbientMismatch(format!(
                "point of length {} for {} variables",
                point.len(),
                self.nvars
            )));
        }
        let p = self.field;
        let mut acc = 0;
        for t in &self.terms {
            let mut v = t.coeff;
            for (&x, &e) in point.iter().zip(&t.mono.exps) {
                if e > 0 {
                    v = p.mul(v, p.pow(x % p.value(), e as u64));
                }
            }
            acc = p.add(acc, v);
        }
        Ok(acc)
    }

    /// Parses the text form produced by `Display`. Also accepts `-`, omitted
    /// coefficients, explicit `^1` and whitespace anywhere.
    pub fn parse(text: &str, nvars: usize, field: FieldPrime) -> Result<Polynomial> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut raw = Vec::new();
        let bytes = s.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut negative = false;
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    negative = !negative;
                }
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
                pos += 1;
            }
            let term = &s[start..pos];
            if term.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {text:?}")));
            }
            let mut coeff: u32 = 1;
            let mut exps = vec![0u32; nvars];
            for factor in term.split('*') {
                if let Some(rest) = factor.strip_prefix('x') {
                    let (idx, exp) = match rest.split_once('^') {
                        Some((i, e)) => (i, parse_u32(e, factor)?),
                        None => (rest, 1),
                    };
                    let idx = parse_u32(idx, factor)? as usize;
                    if idx == 0 || idx > nvars {
                        return Err(Error::Parse(format!(
                            "variable x{idx} out of range 1..={nvars}"
                        )));
                    }
                    exps[idx - 1] += exp;
                } else {
                    let c: u64 = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad factor {factor:?}")))?;
                    coeff = field.mul(coeff, (c % field.value() as u64) as u32);
                }
            }
            if negative {
                coeff = field.neg(coeff);
            }
            raw.push(Term {
                coeff,
                mono: Monomial::new(exps),
            });
        }
        Ok(Polynomial::from_raw(nvars, field, raw))
    }
}

fn parse_u32(s: &str, ctx: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::Parse(format!("bad number in {ctx:?}")))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Canonical form: `c*x1^a1*...*xk^ak + ...`, coefficients as residues in
/// `[0, p)`, terms in descending degrevlex, zero exponents omitted.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if t.mono.is_one() {
                write!(f, "{}", t.coeff)?;
            } else {
                write!(f, "{}*{}", t.coeff, t.mono)?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ambient mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ambient mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ambient mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scalar_mul(self.field.value() - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f101() -> FieldPrime {
        FieldPrime::new(101).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn poly(s: &str, k: usize) -> Polynomial {
        Polynomial::parse(s, k, f101()).unwrap()
    }

    #[test]
    fn degrevlex_examples() {
        assert_eq!(
            degrevlex_cmp(&mono(&[2, 0, 0]), &mono(&[1, 1, 0])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            degrevlex_cmp(&mono(&[0, 0, 1]), &mono(&[2, 0, 0])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            degrevlex_cmp(&mono(&[3, 1]), &mono(&[3, 1])).unwrap(),
            Ordering::Equal
        );
        // the tie-break that separates degrevlex from deglex
        assert_eq!(
            degrevlex_cmp(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])).unwrap(),
            Ordering::Less
        );
        assert!(degrevlex_cmp(&mono(&[1]), &mono(&[1, 0])).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let a = poly("x1 + x2", 2);
        let b = poly("x1 - x2", 2);
        assert_eq!(&a * &b, poly("x1^2 - x2^2", 2));
        assert_eq!(&a + &Polynomial::zero(2, f101()), a);
        assert_eq!(&a * &a, poly("x1^2 + 2*x1*x2 + x2^2", 2));
        assert!((&a - &a).is_zero());
        assert_eq!(a.scalar_mul(0), Polynomial::zero(2, f101()));
        let other = Polynomial::var(3, f101(), 0);
        assert!(a.checked_add(&other).is_err());
        assert!(a.checked_mul(&other).is_err());
    }

    #[test]
    fn leading_term_examples() {
        let f = poly("x2^3 + x1*x2", 2);
        assert_eq!(f.leading_term(), Some((1, &mono(&[0, 3]))));
        let f = poly("x2^2 + x1*x2", 2);
        assert_eq!(f.leading_monomial(), Some(&mono(&[1, 1])));
        let c = Polynomial::constant(2, f101(), 7);
        assert_eq!(c.leading_term(), Some((7, &mono(&[0, 0]))));
        assert_eq!(Polynomial::zero(2, f101()).leading_term(), None);
    }

    #[test]
    fn homogenize_examples() {
        assert_eq!(poly("x1 + 1", 1).homogenize(1).unwrap(), poly("x1 + x2", 2));
        let h = poly("x1^2 + x1*x2", 2);
        assert_eq!(h.homogenize(2).unwrap(), h.extend_ambient(1));
        assert_eq!(
            poly("x1^2 + x2", 2).homogenize(3).unwrap(),
            poly("x1^2*x3 + x2*x3^2", 3)
        );
        assert!(poly("x1^2", 1).homogenize(1).is_err());
    }

    #[test]
    fn homogeneity_and_evaluation() {
        assert!(poly("x1^2 + x1*x2", 2).is_homogeneous());
        assert!(!poly("x1^2 + x2", 2).is_homogeneous());
        let p7 = FieldPrime::new(7).unwrap();
        let f = Polynomial::parse("x1*x2 + 1", 2, p7).unwrap();
        assert_eq!(f.evaluate(&[2, 3]).unwrap(), 0);
        assert!(f.evaluate(&[2]).is_err());
    }

    #[test]
    fn display_is_canonical_and_parses_back() {
        let f = poly("3 - x2 + 5*x1^2*x3^1 + x3*x1*x1", 3);
        assert_eq!(f.to_string(), "6*x1^2*x3 + 100*x2 + 3");
        assert_eq!(poly(&f.to_string(), 3), f);
        assert_eq!(Polynomial::zero(2, f101()).to_string(), "0");
        assert!(Polynomial::parse("x4", 3, f101()).is_err());
        assert!(Polynomial::parse("x1 + ", 3, f101()).is_err());
        assert!(Polynomial::parse("y1", 3, f101()).is_err());
    }

    #[test]
    fn monomial_enumeration_is_sorted_and_complete() {
        let ms = monomials_of_degree(4, 2);
        assert_eq!(ms.len(), 10);
        assert_eq!(ms.len() as u128, count_monomials(4, 2));
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(monomials_of_degree(3, 0), vec![Monomial::one(3)]);
        assert_eq!(count_monomials(4, 9), 220);
    }

    fn arb_mono(k: usize) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..4, k).prop_map(Monomial::new)
    }

    fn arb_poly(k: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((0i64..101, prop::collection::vec(0u32..3, k)), 0..6)
            .prop_map(move |ts| Polynomial::from_terms(k, FieldPrime::new(101).unwrap(), ts).unwrap())
    }

    proptest! {
        #[test]
        fn degrevlex_is_total_and_multiplicative(a in arb_mono(3), b in arb_mono(3), c in arb_mono(3)) {
            let ab = a.cmp(&b);
            prop_assert_eq!(ab, b.cmp(&a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(a.mul(&c).cmp(&b.mul(&c)), ab);
            // well-order: the unit is below everything
            prop_assert!(Monomial::one(3) <= a);
            if a < b && b < c {
                prop_assert!(a < c);
            }
        }

        #[test]
        fn evaluation_is_a_ring_morphism(f in arb_poly(3), g in arb_poly(3), pt in prop::collection::vec(0u32..101, 3)) {
            let p = f101();
            let fg = (&f * &g).evaluate(&pt)?;
            prop_assert_eq!(fg, p.mul(f.evaluate(&pt)?, g.evaluate(&pt)?));
            let s = (&f + &g).evaluate(&pt)?;
            prop_assert_eq!(s, p.add(f.evaluate(&pt)?, g.evaluate(&pt)?));
        }

        #[test]
        fn homogenize_then_dehomogenize_is_identity(f in arb_poly(3), extra in 0u32..3) {
            let d = f.degree().unwrap_or(0) + extra;
            let h = f.homogenize(d)?;
            prop_assert!(h.is_homogeneous());
            prop_assert_eq!(h.dehomogenize()?, f);
        }

        #[test]
        fn leading_monomial_is_multiplicative(f in arb_poly(3), g in arb_poly(3)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = &f * &g;
            prop_assert_eq!(
                fg.leading_monomial().unwrap(),
                &f.leading_monomial().unwrap().mul(g.leading_monomial().unwrap())
            );
        }

        #[test]
        fn text_form_round_trips(f in arb_poly(4)) {
            prop_assert_eq!(Polynomial::parse(&f.to_string(), 4, f101())?, f);
        }
    }
}
