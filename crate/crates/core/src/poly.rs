//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Everything in this crate lives in the symmetric algebra of a rank-`r`
//! dual Lie algebra, concretely `Q[x1, .., xr]`. All polynomials handled
//! here are homogeneous; the zero polynomial is the only one without a
//! well-defined degree. Terms are kept in graded-lexicographic order so
//! that rendering and pivoting are deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linform::LinForm;

/// Exact rational scalar: arbitrary-precision, always reduced, denominator positive.
pub type Rational = BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Exponent vector of a single monomial; length equals the torus rank.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(rank: usize) -> Self {
        Monomial(vec![0; rank])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

// Graded-lexicographic: total degree first, then lex with x1 heaviest.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given total degree, in descending graded-lex order.
pub fn monomials_of_degree(rank: usize, degree: usize) -> Vec<Monomial> {
    fn rec(rank: usize, degree: usize, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if rank == 1 {
            prefix.push(degree as u32);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e as u32);
            rec(rank - 1, degree - e, prefix, out);
            prefix.pop();
        }
    }
    if rank == 0 {
        return if degree == 0 { vec![Monomial::new(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(rank, degree, &mut Vec::new(), &mut out);
    out
}

/// Number of monomials of the given total degree in `rank` variables.
pub fn monomial_count(rank: usize, degree: usize) -> usize {
    // C(degree + rank - 1, rank - 1)
    if rank == 0 {
        return if degree == 0 { 1 } else { 0 };
    }
    let mut acc: u128 = 1;
    for i in 1..rank {
        acc = acc * (degree + i) as u128 / i as u128;
    }
    acc as usize
}

/// Homogeneous polynomial with exact rational coefficients.
///
/// Invariants: no zero coefficients are stored and all stored monomials share
/// one total degree. The zero polynomial has an empty term map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    rank: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(rank: usize) -> Self {
        Polynomial { rank, terms: BTreeMap::new() }
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(rank);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(rank), c);
        }
        p
    }

    pub fn one(rank: usize) -> Self {
        Polynomial::constant(rank, Rational::one())
    }

    /// The variable `x{index+1}`.
    pub fn variable(rank: usize, index: usize) -> Self {
        assert!(index < rank, "variable index out of range");
        let mut exps = vec![0; rank];
        exps[index] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::new(exps), Rational::one());
        Polynomial { rank, terms }
    }

    /// Builds a polynomial from raw terms, checking the homogeneity invariant.
    pub fn from_terms<I>(rank: usize, iter: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in iter {
            if m.exps().len() != rank {
                return Err(Error::RankMismatch { expected: rank, got: m.exps().len() });
            }
            let entry = terms.entry(m).or_insert_with(Rational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        let mut degree = None;
        for m in terms.keys() {
            let d = m.total_degree();
            match degree {
                None => degree = Some(d),
                Some(k) if k != d => return Err(Error::DegreeMismatch(k, d)),
                _ => {}
            }
        }
        Ok(Polynomial { rank, terms })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|m| m.total_degree())
    }

    /// Iterates terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the graded-lex leading (largest) monomial.
    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    fn assert_rank(&self, other: &Polynomial) {
        assert_eq!(self.rank, other.rank, "polynomial rank mismatch");
    }

    /// Sum of two homogeneous polynomials of equal degree (zero is compatible
    /// with any degree).
    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: other.rank });
        }
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(Error::DegreeMismatch(a, b));
            }
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Polynomial { rank: self.rank, terms })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial { rank: self.rank, terms }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.rank);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Polynomial { rank: self.rank, terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_rank(other);
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let entry = terms.entry(m).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { rank: self.rank, terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.rank);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replaces each variable `xi` by `images[i]` (homogeneous degree-1 or
    /// zero images keep the result homogeneous).
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.rank, "substitution image count mismatch");
        let mut acc = Polynomial::zero(self.rank);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(self.rank, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            acc = acc
                .try_add(&term)
                .expect("degree-1 substitution images keep homogeneity");
        }
        acc
    }

    /// Exact division by `form^mult`; `None` when the power does not divide.
    ///
    /// One step is long division in the pivot variable (the first variable
    /// with a nonzero coefficient in `form`): the remainder is free of the
    /// pivot and divisibility holds exactly when it vanishes.
    pub fn divide_by_linform(&self, form: &LinForm, mult: u32) -> Option<Polynomial> {
        assert_eq!(form.rank(), self.rank, "linear form rank mismatch");
        let mut q = self.clone();
        for _ in 0..mult {
            q = q.divide_by_linform_once(form)?;
        }
        Some(q)
    }

    fn divide_by_linform_once(&self, form: &LinForm) -> Option<Polynomial> {
        if self.is_zero() {
            return Some(Polynomial::zero(self.rank));
        }
        let pivot = form
            .coeffs()
            .iter()
            .position(|&c| c != 0)
            .expect("linear forms are nonzero");
        let pivot_coeff = Rational::from(BigInt::from(form.coeffs()[pivot]));

        // Split self by the exponent of the pivot variable.
        let mut layers: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exps()[pivot];
            let mut exps = m.exps().to_vec();
            exps[pivot] = 0;
            let layer = layers.entry(e).or_insert_with(|| Polynomial::zero(self.rank));
            *layer = layer
                .try_add(&Polynomial::from_terms(self.rank, [(Monomial::new(exps), c.clone())]).unwrap())
                .expect("stripped layers stay homogeneous");
        }
        let top = *layers.keys().next_back().unwrap();
        if top == 0 {
            return None;
        }
        // Tail of the form, without the pivot variable.
        let mut tail = Polynomial::zero(self.rank);
        for (j, &c) in form.coeffs().iter().enumerate() {
            if j != pivot && c != 0 {
                tail = tail
                    .try_add(&Polynomial::variable(self.rank, j).scale(&Rational::from(BigInt::from(c))))
                    .unwrap();
            }
        }

        let layer = |layers: &BTreeMap<u32, Polynomial>, e: u32| {
            layers.get(&e).cloned().unwrap_or_else(|| Polynomial::zero(self.rank))
        };
        let mut work = layers.clone();
        let mut quotient_layers: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for e in (1..=top).rev() {
            let lead = layer(&work, e);
            if lead.is_zero() {
                continue;
            }
            let q = lead.scale(&(Rational::one() / pivot_coeff.clone()));
            // Subtract q * x_pivot^(e-1) * form: kills layer e, feeds layer e-1.
            let below = layer(&work, e - 1).try_sub(&q.mul(&tail)).expect("layers homogeneous");
            work.insert(e, Polynomial::zero(self.rank));
            work.insert(e - 1, below);
            quotient_layers.insert(e - 1, q);
        }
        if !layer(&work, 0).is_zero() {
            return None;
        }
        let mut quotient = Polynomial::zero(self.rank);
        for (e, p) in quotient_layers {
            let mut exps = vec![0; self.rank];
            exps[pivot] = e;
            let shift = Polynomial::from_terms(self.rank, [(Monomial::new(exps), Rational::one())]).unwrap();
            quotient = quotient.try_add(&p.mul(&shift)).expect("quotient homogeneous");
        }
        Some(quotient)
    }

    /// Renders a single coefficient/monomial pair without sign.
    fn fmt_term(rank: usize, m: &Monomial, c: &Rational, out: &mut String) {
        let abs = c.abs();
        if m.total_degree() == 0 {
            out.push_str(&abs.to_string());
            return;
        }
        let mut factors = Vec::new();
        if !abs.is_one() {
            factors.push(abs.to_string());
        }
        for i in 0..rank {
            let e = m.exps()[i];
            if e == 1 {
                factors.push(format!("x{}", i + 1));
            } else if e > 1 {
                factors.push(format!("x{}^{}", i + 1, e));
            }
        }
        out.push_str(&factors.join("*"));
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            Self::fmt_term(self.rank, m, c, &mut out);
        }
        write!(f, "{}", out)
    }
}

/// Parses the canonical text rendering, e.g. `2*x1^2*x2 - 1/3*x2^3`.
pub fn parse_polynomial(input: &str, rank: usize) -> Result<Polynomial> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Schema("empty polynomial string".into()));
    }
    // Split into signed terms at top-level + and -.
    let bytes = compact.as_bytes();
    let mut terms: Vec<(bool, &str)> = Vec::new();
    let mut start = 0usize;
    let mut neg = false;
    let mut i = 0usize;
    if bytes[0] == b'-' {
        neg = true;
        start = 1;
        i = 1;
    } else if bytes[0] == b'+' {
        start = 1;
        i = 1;
    }
    while i < bytes.len() {
        if bytes[i] == b'+' || bytes[i] == b'-' {
            terms.push((neg, &compact[start..i]));
            neg = bytes[i] == b'-';
            start = i + 1;
        }
        i += 1;
    }
    terms.push((neg, &compact[start..]));

    let mut parsed: Vec<(Monomial, Rational)> = Vec::new();
    for (negated, term) in terms {
        if term.is_empty() {
            return Err(Error::Schema(format!("malformed polynomial: {input:?}")));
        }
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; rank];
        let mut any_factor = false;
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(Error::Schema(format!("malformed term {term:?} in {input:?}")));
            }
            if let Some(rest) = factor.strip_prefix('x') {
                let (idx_str, exp_str) = match rest.split_once('^') {
                    Some((a, b)) => (a, Some(b)),
                    None => (rest, None),
                };
                let idx: usize = idx_str
                    .parse()
                    .map_err(|_| Error::Schema(format!("bad variable {factor:?} in {input:?}")))?;
                if idx == 0 || idx > rank {
                    return Err(Error::Schema(format!(
                        "variable x{idx} out of range for rank {rank} in {input:?}"
                    )));
                }
                let exp: u32 = match exp_str {
                    Some(e) => e
                        .parse()
                        .map_err(|_| Error::Schema(format!("bad exponent in {factor:?}")))?,
                    None => 1,
                };
                exps[idx - 1] += exp;
            } else {
                let r = Rational::from_str(factor)
                    .map_err(|_| Error::Schema(format!("bad coefficient {factor:?} in {input:?}")))?;
                coeff *= r;
            }
            any_factor = true;
        }
        if !any_factor {
            return Err(Error::Schema(format!("malformed term {term:?} in {input:?}")));
        }
        if negated {
            coeff = -coeff;
        }
        parsed.push((Monomial::new(exps), coeff));
    }
    let p = Polynomial::from_terms(rank, parsed)?;
    Ok(p)
}
