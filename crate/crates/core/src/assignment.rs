//! The graded ring of polynomial assignments.
//!
//! An assignment of degree `2k` attaches a homogeneous degree-`k` polynomial
//! to every fixed point so that any two points lying in a common stratum
//! closure restrict to the same polynomial on its stabilizer. Under the
//! formality assumption the fixed-point values determine the assignment on
//! all strata, so only those values are stored; stratum values are recovered
//! by reduction on demand.

use num::{BigInt, One, Zero};

use crate::error::{CongruenceViolation, Error, Result};
use crate::linform::{weight_product, LinForm};
use crate::poly::{monomials_of_degree, Polynomial, Rational};
use crate::space::{direction_classes, Region, TSpace};
use crate::subtorus::Subtorus;

#[derive(Clone, PartialEq, Debug)]
pub struct Assignment {
    degree2: usize,
    /// Aligned with `TSpace::fixed_points`.
    values: Vec<Polynomial>,
}

impl Assignment {
    /// Validates degrees and every stratum congruence; on failure returns the
    /// full list of violated conditions.
    pub fn new(space: &TSpace, degree2: usize, values: Vec<Polynomial>) -> Result<Self> {
        if !degree2.is_multiple_of(2) {
            return Err(Error::Validation(format!(
                "assignment degree {degree2} must be even (twice the polynomial degree)"
            )));
        }
        let k = degree2 / 2;
        if values.len() != space.fixed_points.len() {
            return Err(Error::Validation(format!(
                "expected {} values, got {}",
                space.fixed_points.len(),
                values.len()
            )));
        }
        for (i, v) in values.iter().enumerate() {
            if v.rank() != space.rank {
                return Err(Error::RankMismatch { expected: space.rank, got: v.rank() });
            }
            if let Some(d) = v.degree() {
                if d != k {
                    return Err(Error::Validation(format!(
                        "value at {} has degree {} but the assignment degree is 2*{}",
                        space.point_name(i),
                        d,
                        k
                    )));
                }
            }
        }
        let violations = congruence_violations(space, &values)?;
        if !violations.is_empty() {
            return Err(Error::Congruence(violations));
        }
        Ok(Assignment { degree2, values })
    }

    pub fn zero(space: &TSpace, degree2: usize) -> Self {
        Assignment {
            degree2,
            values: vec![Polynomial::zero(space.rank); space.fixed_points.len()],
        }
    }

    pub fn degree2(&self) -> usize {
        self.degree2
    }

    /// Polynomial degree of the values.
    pub fn k(&self) -> usize {
        self.degree2 / 2
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    pub fn value(&self, point: usize) -> &Polynomial {
        &self.values[point]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Value of the assignment on a stratum: the common restriction of the
    /// fixed-point values to the stabilizer.
    pub fn stratum_value(&self, space: &TSpace, region: Region) -> Result<Polynomial> {
        let stab = space
            .region_stabilizer(region)
            .unwrap_or_else(|| Subtorus::full(space.rank));
        let points = space.region_points(region);
        let Some(&first) = points.first() else {
            return Ok(Polynomial::zero(space.rank));
        };
        let value = stab.reduce(&self.values[first])?;
        for &p in &points[1..] {
            let other = stab.reduce(&self.values[p])?;
            if other != value {
                return Err(Error::Validation(format!(
                    "values of {} and {} disagree on stratum {}",
                    space.point_name(first),
                    space.point_name(p),
                    space.region_name(region)
                )));
            }
        }
        Ok(value)
    }

    pub fn try_add(&self, space: &TSpace, other: &Assignment) -> Result<Assignment> {
        if !self.is_zero() && !other.is_zero() && self.degree2 != other.degree2 {
            return Err(Error::DegreeMismatch(self.degree2, other.degree2));
        }
        let degree2 = if self.is_zero() { other.degree2 } else { self.degree2 };
        let values: Vec<Polynomial> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Assignment::new(space, degree2, values)
    }

    /// Pointwise product. Congruences are preserved automatically because
    /// restriction is a ring morphism; revalidation is kept as an assertion.
    pub fn mul(&self, space: &TSpace, other: &Assignment) -> Result<Assignment> {
        let values: Vec<Polynomial> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.mul(b))
            .collect();
        Assignment::new(space, self.degree2 + other.degree2, values)
    }

    pub fn scale(&self, space: &TSpace, c: &Rational) -> Result<Assignment> {
        let values = self.values.iter().map(|v| v.scale(c)).collect();
        Assignment::new(space, self.degree2, values)
    }

    /// Multiplies every value by one global polynomial.
    pub fn mul_polynomial(&self, space: &TSpace, p: &Polynomial) -> Result<Assignment> {
        let extra = p.degree().unwrap_or(0);
        let values = self.values.iter().map(|v| v.mul(p)).collect();
        Assignment::new(space, self.degree2 + 2 * extra, values)
    }
}

/// All broken stratum congruences of a candidate value family. Consecutive
/// point pairs suffice: restriction equality is transitive along a component.
pub fn congruence_violations(
    space: &TSpace,
    values: &[Polynomial],
) -> Result<Vec<CongruenceViolation>> {
    let mut violations = Vec::new();
    let mut check = |name: &str, stab: &Subtorus, points: &[usize]| -> Result<()> {
        for pair in points.windows(2) {
            let residue = stab.reduce(&values[pair[0]].try_sub(&values[pair[1]])?)?;
            if !residue.is_zero() {
                violations.push(CongruenceViolation {
                    stratum: name.to_string(),
                    point_a: space.point_name(pair[0]).to_string(),
                    point_b: space.point_name(pair[1]).to_string(),
                    residue,
                });
            }
        }
        Ok(())
    };
    for comp in &space.one_skeleton {
        let stab = Subtorus::from_annihilator(space.rank, std::slice::from_ref(&comp.direction))?;
        check(&comp.name, &stab, &comp.points)?;
    }
    for stratum in &space.higher_strata {
        check(&stratum.name, &stratum.stabilizer, &stratum.points)?;
    }
    Ok(violations)
}

/// Basis over the rationals of the degree-`2k` assignments, in reduced
/// echelon form with respect to the (point, monomial) coordinates.
///
/// Unknowns are one copy of the degree-`k` monomial basis per fixed point;
/// each stratum contributes the linear conditions "consecutive values
/// restrict equally", and the kernel is computed exactly.
pub fn assignment_basis(space: &TSpace, k: usize) -> Vec<Assignment> {
    let monos = monomials_of_degree(space.rank, k);
    let m = monos.len();
    let n_points = space.fixed_points.len();
    let cols = n_points * m;

    let mono_polys: Vec<Polynomial> = monos
        .iter()
        .map(|mo| {
            Polynomial::from_terms(space.rank, [(mo.clone(), Rational::one())]).unwrap()
        })
        .collect();

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut add_constraints = |stab: &Subtorus, points: &[usize]| {
        // Reduction of each basis monomial, expressed in the ambient monomial
        // coordinates of degree k.
        let reduced: Vec<Polynomial> =
            mono_polys.iter().map(|p| stab.reduce(p).unwrap()).collect();
        for pair in points.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            for target in &monos {
                let mut row = vec![Rational::zero(); cols];
                let mut nonzero = false;
                for (mi, red) in reduced.iter().enumerate() {
                    let c = red.coefficient(target);
                    if !c.is_zero() {
                        row[a * m + mi] = c.clone();
                        row[b * m + mi] = -c;
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    };
    for comp in &space.one_skeleton {
        let stab = Subtorus::from_annihilator(space.rank, std::slice::from_ref(&comp.direction))
            .expect("validated direction");
        add_constraints(&stab, &comp.points);
    }
    for stratum in &space.higher_strata {
        add_constraints(&stratum.stabilizer, &stratum.points);
    }

    let kernel = crate::linalg::nullspace(&rows, cols);
    kernel
        .into_iter()
        .map(|vecr| {
            let values: Vec<Polynomial> = (0..n_points)
                .map(|p| {
                    let terms = monos
                        .iter()
                        .enumerate()
                        .map(|(mi, mo)| (mo.clone(), vecr[p * m + mi].clone()));
                    Polynomial::from_terms(space.rank, terms).unwrap()
                })
                .collect();
            Assignment::new(space, 2 * k, values).expect("kernel vectors satisfy congruences")
        })
        .collect()
}

/// The delta class at a fixed point: the product of one primitive positive
/// direction per proportionality class of the point's weights, and zero
/// elsewhere. Always a valid assignment.
pub fn delta_class(space: &TSpace, point: usize) -> Assignment {
    let classes = direction_classes(&space.fixed_points[point].weights);
    let product = classes
        .iter()
        .fold(Polynomial::one(space.rank), |acc, (dir, _)| acc.mul(&dir.to_polynomial()));
    let degree2 = 2 * classes.len();
    let mut values = vec![Polynomial::zero(space.rank); space.fixed_points.len()];
    values[point] = product;
    Assignment::new(space, degree2, values).expect("delta classes satisfy all congruences")
}

/// The `m`-th equivariant Chern assignment: the elementary symmetric
/// polynomial of the isotropy weights at each point. A congruence failure
/// here signals inconsistent input data.
pub fn chern_class(space: &TSpace, m: usize) -> Result<Assignment> {
    if m > space.half_dim {
        return Err(Error::Hypothesis(format!(
            "Chern index {m} exceeds half_dim {}",
            space.half_dim
        )));
    }
    let values: Vec<Polynomial> = space
        .fixed_points
        .iter()
        .map(|p| elementary_symmetric(space.rank, &p.weights, m))
        .collect();
    Assignment::new(space, 2 * m, values)
}

/// sigma_m of the given forms, by the standard one-pass recurrence.
pub fn elementary_symmetric(rank: usize, forms: &[LinForm], m: usize) -> Polynomial {
    let mut e: Vec<Polynomial> = (0..=m)
        .map(|j| if j == 0 { Polynomial::one(rank) } else { Polynomial::zero(rank) })
        .collect();
    for w in forms {
        let wp = w.to_polynomial();
        for j in (1..=m).rev() {
            let bump = e[j - 1].mul(&wp);
            e[j] = e[j].try_add(&bump).expect("symmetric layers homogeneous");
        }
    }
    e.pop().unwrap()
}

/// The Thom assignment of a stratum closure: the product of the normal
/// weights at each of its fixed points, zero off the closure.
pub fn thom_class(space: &TSpace, region: Region) -> Result<Assignment> {
    let points = space.region_points(region);
    if points.is_empty() {
        return Err(Error::Validation(format!(
            "stratum {} has no fixed points",
            space.region_name(region)
        )));
    }
    let mut normal_count = None;
    let mut values = vec![Polynomial::zero(space.rank); space.fixed_points.len()];
    for &p in &points {
        let normals = space.normal_weights(region, p);
        match normal_count {
            None => normal_count = Some(normals.len()),
            Some(c) if c != normals.len() => {
                return Err(Error::Validation(format!(
                    "stratum {} has inconsistent normal weight counts ({} vs {} at {})",
                    space.region_name(region),
                    c,
                    normals.len(),
                    space.point_name(p)
                )))
            }
            _ => {}
        }
        values[p] = weight_product(space.rank, &normals);
    }
    Assignment::new(space, 2 * normal_count.unwrap(), values)
}

/// On a space whose weights are all collinear of dimension at least six,
/// builds the standard assignment that passes the plain localization test on
/// every stratum but is not cohomological. `None` when the construction does
/// not apply.
pub fn collinear_counterexample(space: &TSpace) -> Option<Assignment> {
    let n = space.half_dim;
    if n < 3 {
        return None;
    }
    let alpha = space.fixed_points.first()?.weights.first()?.direction();
    let mut lambdas: Vec<i128> = Vec::with_capacity(space.fixed_points.len());
    for p in &space.fixed_points {
        let mut prod: i128 = 1;
        for w in &p.weights {
            if !w.is_proportional(&alpha) {
                return None;
            }
            prod *= w.content() as i128;
        }
        lambdas.push(prod);
    }
    let (i, j) = (0..lambdas.len())
        .flat_map(|i| ((i + 1)..lambdas.len()).map(move |j| (i, j)))
        .find(|&(i, j)| lambdas[i] + lambdas[j] != 0)?;
    let mut values = vec![Polynomial::zero(space.rank); space.fixed_points.len()];
    let scalar = |v: i128| Rational::from(BigInt::from(v));
    values[i] = alpha.to_polynomial().scale(&scalar(lambdas[i]));
    values[j] = alpha.to_polynomial().scale(&scalar(-lambdas[j]));
    Some(Assignment::new(space, 2, values).expect("multiples of alpha are congruent mod alpha"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poly::rat;

    fn alpha() -> Polynomial {
        Polynomial::variable(2, 0)
    }

    #[test]
    fn product_example_assignment_is_valid() {
        let s = fixtures::cp1sq();
        let z = Polynomial::zero(2);
        let a = Assignment::new(&s, 2, vec![alpha(), z.clone(), z, alpha()]).unwrap();
        assert_eq!(a.k(), 1);
    }

    #[test]
    fn cube_example_assignment_is_valid() {
        let s = fixtures::cp1cube();
        let mut values = vec![Polynomial::zero(2); 8];
        values[0] = alpha();
        values[1] = alpha().neg();
        assert!(Assignment::new(&s, 2, values).is_ok());
    }

    #[test]
    fn congruence_violation_is_reported_with_residue() {
        let s = fixtures::cp1sq();
        let z = Polynomial::zero(2);
        let x2 = Polynomial::variable(2, 1);
        let err = Assignment::new(&s, 2, vec![x2.clone(), z.clone(), z.clone(), z]).unwrap_err();
        match err {
            Error::Congruence(violations) => {
                assert_eq!(violations[0].stratum, "X0");
                assert_eq!(violations[0].residue, x2);
            }
            other => panic!("expected congruence violation, got {other}"),
        }
    }

    #[test]
    fn basis_dimensions_match_hand_counts() {
        assert_eq!(assignment_basis(&fixtures::cp1(), 1).len(), 3);
        assert_eq!(assignment_basis(&fixtures::cp1sq(), 1).len(), 5);
        assert_eq!(assignment_basis(&fixtures::cp1sq(), 0).len(), 1);
        assert_eq!(assignment_basis(&fixtures::cp1xcp1(), 1).len(), 4);
    }

    #[test]
    fn degree_zero_basis_is_constants_when_connected() {
        let basis = assignment_basis(&fixtures::cp1cube(), 0);
        assert_eq!(basis.len(), 1);
        let a = &basis[0];
        assert!(a.values().windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn ring_operations() {
        let s = fixtures::cp1cube();
        let mut values = vec![Polynomial::zero(2); 8];
        values[0] = alpha();
        values[1] = alpha().neg();
        let f = Assignment::new(&s, 2, values).unwrap();
        let f2 = f.mul(&s, &f).unwrap();
        assert_eq!(f2.value(0), &alpha().pow(2));
        assert_eq!(f2.value(1), &alpha().pow(2));
        assert!(f2.value(2).is_zero());

        let zero = f.try_add(&s, &f.scale(&s, &rat(-1, 1)).unwrap()).unwrap();
        assert!(zero.is_zero());
        let same = f.scale(&s, &rat(1, 1)).unwrap();
        assert_eq!(same, f);
    }

    #[test]
    fn add_rejects_mixed_degrees() {
        let s = fixtures::cp1();
        let one = Assignment::new(&s, 0, vec![Polynomial::one(2); 2]).unwrap();
        let a = Assignment::new(&s, 2, vec![alpha(), alpha()]).unwrap();
        assert!(matches!(one.try_add(&s, &a), Err(Error::DegreeMismatch(0, 2))));
    }

    #[test]
    fn delta_class_on_collinear_and_gkm_points() {
        let cube = fixtures::cp1cube();
        let d = delta_class(&cube, 0);
        assert_eq!(d.degree2(), 2);
        assert_eq!(d.value(0), &alpha());
        assert!(d.value(1).is_zero());

        let gkm = fixtures::cp1xcp1();
        let d = delta_class(&gkm, 0);
        assert_eq!(d.degree2(), 4);
        assert_eq!(
            d.value(0),
            &Polynomial::variable(2, 0).mul(&Polynomial::variable(2, 1))
        );
    }

    #[test]
    fn sums_of_deltas_are_valid() {
        let s = fixtures::cp1cube();
        let a = delta_class(&s, 0);
        let b = delta_class(&s, 3);
        assert!(a.try_add(&s, &b).is_ok());
    }

    #[test]
    fn chern_values() {
        let s = fixtures::cp1sq();
        let c0 = chern_class(&s, 0).unwrap();
        assert_eq!(c0.value(0), &Polynomial::one(2));

        let c1 = chern_class(&s, 1).unwrap();
        assert_eq!(c1.value(0), &alpha().scale(&rat(-2, 1)));
        assert!(c1.value(1).is_zero());
        assert!(c1.value(2).is_zero());
        assert_eq!(c1.value(3), &alpha().scale(&rat(2, 1)));

        // top Chern class is the Euler class
        let c2 = chern_class(&s, 2).unwrap();
        let morse = crate::space::morse_data(&s, &s.generic_xi()).unwrap();
        for (i, mp) in morse.points.iter().enumerate() {
            assert_eq!(c2.value(i), &mp.euler);
        }
    }

    #[test]
    fn thom_class_of_gkm_edge() {
        let s = fixtures::cp1xcp1();
        let t = thom_class(&s, Region::Skeleton(2)).unwrap(); // E13, direction x2
        assert_eq!(t.degree2(), 2);
        assert_eq!(t.value(0), &alpha());
        assert!(t.value(1).is_zero());
        assert_eq!(t.value(2), &alpha());
        assert!(t.value(3).is_zero());
    }

    #[test]
    fn thom_class_of_whole_space_is_one() {
        let s = fixtures::cp1sq();
        // the declared component closure equals the whole space
        let t = thom_class(&s, Region::Skeleton(0)).unwrap();
        assert_eq!(t.degree2(), 0);
        assert!(t.values().iter().all(|v| v == &Polynomial::one(2)));
    }

    #[test]
    fn collinear_counterexample_matches_construction() {
        let s = fixtures::cp1cube();
        let f = collinear_counterexample(&s).unwrap();
        assert_eq!(f.value(0), &alpha());
        assert_eq!(f.value(1), &alpha().neg());
        assert!(f.values()[2..].iter().all(|v| v.is_zero()));
    }

    #[test]
    fn collinear_counterexample_requires_collinearity_and_dimension() {
        assert!(collinear_counterexample(&fixtures::cp1xcp1()).is_none());
        assert!(collinear_counterexample(&fixtures::cp1sq()).is_none()); // n = 2 < 3
    }

    #[test]
    fn higher_stratum_constraints_are_checked() {
        let s = fixtures::cp1xcp1_with_dense_stratum();
        // degree-0: dense stratum forces nothing beyond equality of constants
        assert_eq!(assignment_basis(&s, 0).len(), 1);
        assert_eq!(assignment_basis(&s, 1).len(), 4);
    }
}
