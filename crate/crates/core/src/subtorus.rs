//! Subtori of the acting torus, stored by their annihilators.
//!
//! A stabilizer subalgebra is the common kernel of finitely many integer
//! covectors. Restricting a polynomial to the subalgebra is reduction modulo
//! the linear ideal those covectors generate; with the annihilator kept in
//! reduced row echelon form the reduction produces a canonical
//! representative, so restriction equality is decidable by comparison.

use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::linform::LinForm;
use crate::poly::{Polynomial, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subtorus {
    rank: usize,
    /// RREF annihilator rows: primitive integers, positive leading entry.
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Subtorus {
    /// The whole algebra (empty annihilator).
    pub fn full(rank: usize) -> Self {
        Subtorus { rank, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Common kernel of the given covectors. Dependent input rows collapse in
    /// the echelon form.
    pub fn from_annihilator(rank: usize, forms: &[LinForm]) -> Result<Self> {
        let mut rows = Vec::new();
        for f in forms {
            if f.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, got: f.rank() });
            }
            rows.push(f.coeffs().iter().map(|&c| Rational::from(BigInt::from(c))).collect());
        }
        let (rows, pivots) = linalg::rref_integer_rows(rows);
        Ok(Subtorus { rank, rows, pivots })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Codimension of the subalgebra = number of independent annihilator rows
    /// = degree of the stratum it stabilizes.
    pub fn codim(&self) -> usize {
        self.rows.len()
    }

    pub fn annihilator_rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Canonical representative of `f` modulo the annihilator ideal: solve
    /// each pivot variable from its echelon row and substitute. The result
    /// uses free variables only, and two polynomials restrict equally iff
    /// their reductions coincide.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: f.rank() });
        }
        if self.rows.is_empty() {
            return Ok(f.clone());
        }
        let mut images: Vec<Polynomial> = (0..self.rank)
            .map(|j| Polynomial::variable(self.rank, j))
            .collect();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let lead = BigRational::from(row[pc].clone());
            let mut image = Polynomial::zero(self.rank);
            for (j, v) in row.iter().enumerate() {
                if j != pc && !v.is_zero() {
                    let coeff = -BigRational::from(v.clone()) / &lead;
                    image = image
                        .try_add(&Polynomial::variable(self.rank, j).scale(&coeff))
                        .expect("degree-1 image");
                }
            }
            images[pc] = image;
        }
        Ok(f.substitute(&images))
    }

    /// Whether `f` and `g` restrict to the same polynomial on the subalgebra.
    pub fn restrictions_equal(&self, f: &Polynomial, g: &Polynomial) -> Result<bool> {
        Ok(self.reduce(&f.try_sub(g)?)?.is_zero())
    }

    /// Kernel of the combined annihilators.
    pub fn intersection(&self, other: &Subtorus) -> Subtorus {
        assert_eq!(self.rank, other.rank, "subtorus rank mismatch");
        let rows: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .chain(&other.rows)
            .map(|r| r.iter().map(|v| BigRational::from(v.clone())).collect())
            .collect();
        let (rows, pivots) = linalg::rref_integer_rows(rows);
        Subtorus { rank: self.rank, rows, pivots }
    }

    /// Whether `other` is a subalgebra of `self`, decided by annihilator span
    /// inclusion.
    pub fn contains(&self, other: &Subtorus) -> bool {
        assert_eq!(self.rank, other.rank, "subtorus rank mismatch");
        self.rows.iter().all(|row| other.reduces_to_zero(row))
    }

    fn reduces_to_zero(&self, row: &[BigInt]) -> bool {
        let mut v: Vec<Rational> = row.iter().map(|x| BigRational::from(x.clone())).collect();
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            if !v[pc].is_zero() {
                let factor = v[pc].clone() / BigRational::from(r[pc].clone());
                for (j, e) in r.iter().enumerate() {
                    let sub = &factor * BigRational::from(e.clone());
                    v[j] -= sub;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    /// Whether the covector vanishes on the subalgebra (lies in the
    /// annihilator span).
    pub fn annihilates(&self, form: &LinForm) -> bool {
        let row: Vec<BigInt> = form.coeffs().iter().map(|&c| BigInt::from(c)).collect();
        self.reduces_to_zero(&row)
    }
}
