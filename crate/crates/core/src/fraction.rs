//! Fractions with linear-form denominators.
//!
//! Localization sums only ever produce quotients whose denominators are
//! products of isotropy weights, so the denominator is kept as a multiset
//! of primitive pairwise non-proportional linear forms. Distinct primitive
//! forms are coprime primes in the polynomial ring, which makes reduction
//! (cancel every factor dividing the numerator) a complete normal form.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::linform::LinForm;
use crate::poly::{Polynomial, Rational};

/// Reduced quotient `numerator / prod(form_i ^ mult_i)`.
///
/// Invariants: forms are primitive with positive leading coordinate, sorted
/// and pairwise distinct; no denominator factor divides the numerator; a zero
/// numerator forces an empty denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinFraction {
    rank: usize,
    numerator: Polynomial,
    denominator: Vec<(LinForm, u32)>,
}

impl LinFraction {
    pub fn zero(rank: usize) -> Self {
        LinFraction { rank, numerator: Polynomial::zero(rank), denominator: Vec::new() }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        LinFraction { rank: p.rank(), numerator: p, denominator: Vec::new() }.reduced()
    }

    /// `numerator / prod(weights)`, extracting rational content from each
    /// weight so only primitive directions remain downstairs.
    pub fn quotient(numerator: Polynomial, weights: &[LinForm]) -> Self {
        let rank = numerator.rank();
        let mut scale = Rational::one();
        let mut dens: BTreeMap<LinForm, u32> = BTreeMap::new();
        for w in weights {
            assert_eq!(w.rank(), rank, "weight rank mismatch");
            scale *= Rational::from(BigInt::from(w.content()));
            *dens.entry(w.direction()).or_insert(0) += 1;
        }
        let numerator = numerator.scale(&(Rational::one() / scale));
        LinFraction { rank, numerator, denominator: dens.into_iter().collect() }.reduced()
    }

    fn reduced(mut self) -> Self {
        if self.numerator.is_zero() {
            self.denominator.clear();
            return self;
        }
        let mut remaining = Vec::new();
        for (form, mult) in std::mem::take(&mut self.denominator) {
            let mut left = mult;
            while left > 0 {
                match self.numerator.divide_by_linform(&form, 1) {
                    Some(q) => {
                        self.numerator = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                remaining.push((form, left));
            }
        }
        self.denominator = remaining;
        self
    }

    /// Exact sum over a common denominator, fully reduced. All terms must
    /// share the ambient rank; mixed formal degrees are rejected since the
    /// numerator must stay homogeneous.
    pub fn sum<'a, I>(rank: usize, terms: I) -> Result<LinFraction>
    where
        I: IntoIterator<Item = &'a LinFraction>,
    {
        let terms: Vec<&LinFraction> = terms.into_iter().collect();
        for t in &terms {
            if t.rank != rank {
                return Err(Error::RankMismatch { expected: rank, got: t.rank });
            }
        }
        let mut common: BTreeMap<LinForm, u32> = BTreeMap::new();
        for t in &terms {
            for (form, mult) in &t.denominator {
                let e = common.entry(form.clone()).or_insert(0);
                *e = (*e).max(*mult);
            }
        }
        let mut numerator = Polynomial::zero(rank);
        for t in &terms {
            let mut scaled = t.numerator.clone();
            for (form, mult) in &common {
                let have = t
                    .denominator
                    .iter()
                    .find(|(f, _)| f == form)
                    .map(|(_, m)| *m)
                    .unwrap_or(0);
                if *mult > have {
                    scaled = scaled.mul(&form.to_polynomial().pow(mult - have));
                }
            }
            numerator = numerator.try_add(&scaled)?;
        }
        Ok(LinFraction { rank, numerator, denominator: common.into_iter().collect() }.reduced())
    }

    pub fn add(&self, other: &LinFraction) -> Result<LinFraction> {
        LinFraction::sum(self.rank, [self, other])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    /// Surviving denominator factors; empty exactly when the fraction is a
    /// polynomial.
    pub fn certificate(&self) -> &[(LinForm, u32)] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_empty()
    }

    /// The fraction as a polynomial, if fully reduced to one.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.is_polynomial() {
            Some(&self.numerator)
        } else {
            None
        }
    }

    /// Degree of the numerator minus total denominator multiplicity;
    /// `None` for zero.
    pub fn formal_degree(&self) -> Option<isize> {
        let d: u32 = self.denominator.iter().map(|(_, m)| m).sum();
        self.numerator.degree().map(|n| n as isize - d as isize)
    }

    pub fn scale(&self, c: &Rational) -> LinFraction {
        if c.is_zero() {
            return LinFraction::zero(self.rank);
        }
        LinFraction {
            rank: self.rank,
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    /// Multiplies by a polynomial and re-reduces.
    pub fn mul_polynomial(&self, p: &Polynomial) -> LinFraction {
        LinFraction {
            rank: self.rank,
            numerator: self.numerator.mul(p),
            denominator: self.denominator.clone(),
        }
        .reduced()
    }
}

impl fmt::Display for LinFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        let num = self.numerator.to_string();
        let num = if num.contains(" + ") || num.contains(" - ") {
            format!("({num})")
        } else {
            num
        };
        let den: Vec<String> = self
            .denominator
            .iter()
            .map(|(form, mult)| {
                let base = form.to_string();
                let base = if base.contains(" + ") || base.contains(" - ") {
                    format!("({base})")
                } else {
                    base
                };
                if *mult == 1 {
                    base
                } else if base.starts_with('(') {
                    format!("{base}^{mult}")
                } else {
                    format!("({base})^{mult}")
                }
            })
            .collect();
        write!(f, "{}/{}", num, den.join("*"))
    }
}
