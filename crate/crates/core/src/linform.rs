//! Integer linear forms on the torus Lie algebra.
//!
//! Weights of isotropy representations and directions of one-skeleton
//! components are covectors with integer coordinates. A form keeps its sign
//! and content (weights like `2*x1` matter); the primitive, sign-normalized
//! representative is what congruence tests and proportionality classes use.

use num::{BigInt, Integer};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

/// Nonzero integer covector of length `rank`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinForm {
    coeffs: Vec<i64>,
}

impl LinForm {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::Validation("zero linear form".into()));
        }
        Ok(LinForm { coeffs })
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Signed content: `self = content * direction` with `direction` primitive.
    pub fn content(&self) -> i64 {
        let g = self
            .coeffs
            .iter()
            .fold(0i64, |acc, &c| acc.gcd(&c.unsigned_abs().try_into().unwrap_or(i64::MAX)));
        let sign = self.coeffs.iter().find(|&&c| c != 0).map(|&c| c.signum()).unwrap_or(1);
        g * sign
    }

    /// Primitive representative with positive first nonzero coordinate.
    pub fn direction(&self) -> LinForm {
        let c = self.content();
        LinForm { coeffs: self.coeffs.iter().map(|&k| k / c).collect() }
    }

    pub fn is_proportional(&self, other: &LinForm) -> bool {
        self.direction() == other.direction()
    }

    pub fn neg(&self) -> LinForm {
        LinForm { coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }

    /// Pairing with a vector in the Lie algebra.
    pub fn pair(&self, xi: &[i64]) -> i128 {
        assert_eq!(xi.len(), self.coeffs.len(), "pairing rank mismatch");
        self.coeffs.iter().zip(xi).map(|(&a, &b)| a as i128 * b as i128).sum()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero(self.rank());
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                p = p
                    .try_add(&Polynomial::variable(self.rank(), i).scale(&Rational::from(BigInt::from(c))))
                    .expect("degree-1 terms");
            }
        }
        p
    }
}

impl std::fmt::Display for LinForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Product of the given forms as a polynomial (empty product is 1).
pub fn weight_product(rank: usize, forms: &[LinForm]) -> Polynomial {
    forms.iter().fold(Polynomial::one(rank), |acc, w| acc.mul(&w.to_polynomial()))
}
