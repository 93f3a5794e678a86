//! Localization sums and the cohomologicality criteria.
//!
//! The necessary side is uniform: for a cohomological assignment every sum
//! `sum_p f(p) eta(p) / e_Y(p)` over a stratum closure is a polynomial, for
//! every cohomology class `eta` of the closure. The sufficient side is split
//! by component shape: closures of dimension at most four fall to the
//! Goldin-Holm integrality test, and minimal Hamiltonian components (d+1
//! fixed points of indices 0..d) fall to the moment conditions built from
//! Tolman's closed formula for canonical classes. Components meeting neither
//! hypothesis leave the verdict undecided, although the necessary conditions
//! can still refute.

use num::{BigInt, One, Zero};

use crate::assignment::{assignment_basis, chern_class, delta_class, thom_class, Assignment};
use crate::error::{Error, Result};
use crate::fraction::LinFraction;
use crate::linform::LinForm;
use crate::poly::{Monomial, Polynomial, Rational};
use crate::space::{betti_data, morse_data, Region, TSpace};

/// One evaluated localization sum.
#[derive(Clone, Debug)]
pub struct LocalizationReport {
    pub region: String,
    pub eta: String,
    pub sum: LinFraction,
}

impl LocalizationReport {
    pub fn polynomial(&self) -> bool {
        self.sum.is_polynomial()
    }

    /// Surviving denominator when the sum is not a polynomial.
    pub fn certificate(&self) -> &[(LinForm, u32)] {
        self.sum.certificate()
    }
}

/// Exact `sum_{p in Y^T} f(p) eta(p) / e_Y(p)` with `e_Y(p)` the product of
/// the weights tangent to the region closure at `p`.
pub fn localization_sum(
    space: &TSpace,
    region: Region,
    f: &Assignment,
    eta: Option<&Assignment>,
) -> Result<LinFraction> {
    let mut terms = Vec::new();
    for p in space.region_points(region) {
        let mut numerator = f.value(p).clone();
        if let Some(e) = eta {
            numerator = numerator.mul(e.value(p));
        }
        let tangent = space.tangent_weights(region, p);
        terms.push(LinFraction::quotient(numerator, &tangent));
    }
    LinFraction::sum(space.rank, terms.iter())
}

/// Integrality test on a component whose closure has dimension at most four:
/// the plain localization sum must be a polynomial.
pub fn goldin_holm_check(
    space: &TSpace,
    component: usize,
    f: &Assignment,
) -> Result<LocalizationReport> {
    let comp = &space.one_skeleton[component];
    if comp.half_dim > 2 {
        return Err(Error::Hypothesis(format!(
            "component {} has half_dim {} > 2; the dimension-four integrality criterion does not apply",
            comp.name, comp.half_dim
        )));
    }
    let sum = localization_sum(space, Region::Skeleton(component), f, None)?;
    Ok(LocalizationReport { region: comp.name.clone(), eta: "1".into(), sum })
}

/// First Chern data of one component: the oriented primitive generator of
/// its direction line, and at each of the component's fixed points the sum
/// of tangent weights as a multiple of that generator.
#[derive(Clone, Debug)]
pub struct Chern1Data {
    pub component: String,
    /// Primitive direction, oriented positively against the polarization.
    pub generator: LinForm,
    /// Aligned with the component's point list.
    pub multiples: Vec<Rational>,
    pub values: Vec<Polynomial>,
    /// Index ordering law failures (`c1` must strictly decrease as the
    /// component Morse index grows); reported, not fatal.
    pub ordering_violations: Vec<String>,
}

pub fn component_chern1(space: &TSpace, xi: &[i64], component: usize) -> Result<Chern1Data> {
    let comp = &space.one_skeleton[component];
    let morse = morse_data(space, xi)?;
    let gen_sign = if comp.direction.pair(xi) > 0 { 1i64 } else { -1i64 };
    let generator = if gen_sign > 0 { comp.direction.clone() } else { comp.direction.neg() };
    let mut multiples = Vec::new();
    let mut values = Vec::new();
    for &p in &comp.points {
        let mut m = Rational::zero();
        for w in space.tangent_weights(Region::Skeleton(component), p) {
            // w = content * direction = (content * sign) * generator
            m += Rational::from(BigInt::from(w.content() * gen_sign));
        }
        values.push(generator.to_polynomial().scale(&m));
        multiples.push(m);
    }
    let lambda = &morse.components[component].lambda;
    let mut ordering_violations = Vec::new();
    for i in 0..comp.points.len() {
        for j in 0..comp.points.len() {
            if lambda[i] < lambda[j] && multiples[i] <= multiples[j] {
                ordering_violations.push(format!(
                    "c1({}) = {} should exceed c1({}) = {} (indices {} < {})",
                    space.point_name(comp.points[i]),
                    multiples[i],
                    space.point_name(comp.points[j]),
                    multiples[j],
                    lambda[i],
                    lambda[j],
                ));
            }
        }
    }
    Ok(Chern1Data {
        component: comp.name.clone(),
        generator,
        multiples,
        values,
        ordering_violations,
    })
}

/// Whether the component is a minimal Hamiltonian piece: d+1 fixed points
/// whose component Morse indices are exactly 0..=d.
pub fn tolman_hypothesis(space: &TSpace, xi: &[i64], component: usize) -> Result<bool> {
    let comp = &space.one_skeleton[component];
    let morse = morse_data(space, xi)?;
    if comp.points.len() != comp.half_dim + 1 {
        return Ok(false);
    }
    let mut seen = vec![false; comp.half_dim + 1];
    for &l in &morse.components[component].lambda {
        if l > comp.half_dim || seen[l] {
            return Ok(false);
        }
        seen[l] = true;
    }
    Ok(true)
}

/// Restrictions of the degree-`2k` canonical class of a minimal component,
/// by the closed product formula over first Chern values. Returned in
/// component point order as (fixed point, value) pairs.
pub fn tolman_canonical_classes(
    space: &TSpace,
    xi: &[i64],
    component: usize,
    k: usize,
) -> Result<Vec<(usize, Polynomial)>> {
    let comp = &space.one_skeleton[component];
    let d = comp.half_dim;
    if !tolman_hypothesis(space, xi, component)? {
        return Err(Error::Hypothesis(format!(
            "component {} is not minimal: need {} fixed points with component indices 0..={}",
            comp.name,
            d + 1,
            d
        )));
    }
    if k > d {
        return Err(Error::Hypothesis(format!(
            "no canonical class of degree 2*{k} on a component of half dimension {d}"
        )));
    }
    let morse = morse_data(space, xi)?;
    let chern1 = component_chern1(space, xi, component)?;
    let lambda = &morse.components[component].lambda;
    // position (within the component) of the unique point of each index
    let mut by_index = vec![0usize; d + 1];
    for (pos, &l) in lambda.iter().enumerate() {
        by_index[l] = pos;
    }
    let m = |l: usize| chern1.multiples[by_index[l]].clone();

    // Coefficient of the negative-weight product at the index-k point,
    // against generator^k.
    let gen_sign = if comp.direction.pair(xi) > 0 { 1i64 } else { -1i64 };
    let pk = comp.points[by_index[k]];
    let mut lminus_coeff = Rational::one();
    for w in space.tangent_weights(Region::Skeleton(component), pk) {
        if w.pair(xi) < 0 {
            lminus_coeff *= Rational::from(BigInt::from(w.content() * gen_sign));
        }
    }

    let mut ck = Rational::one() / lminus_coeff.clone();
    for j in 0..k {
        ck *= m(k) - m(j);
    }
    if ck.is_zero() {
        return Err(Error::Hypothesis(format!(
            "degenerate first Chern values on component {}: the normalization constant vanishes",
            comp.name
        )));
    }

    let gen_pow = chern1.generator.to_polynomial().pow(k as u32);
    let mut out = Vec::with_capacity(d + 1);
    for (pos, &p) in comp.points.iter().enumerate() {
        let mut scalar = Rational::one() / ck.clone();
        for j in 0..k {
            scalar *= chern1.multiples[pos].clone() - m(j);
        }
        out.push((p, gen_pow.scale(&scalar)));
    }
    // Value at the index-k point must be the negative-weight product, and
    // lower indices must vanish. Both follow from the formula; asserted to
    // catch inconsistent data.
    let at = |l: usize| &out[by_index[l]].1;
    let expected = gen_pow.scale(&lminus_coeff);
    if *at(k) != expected {
        return Err(Error::Validation(format!(
            "canonical class normalization failed on {}: got {}, expected {}",
            comp.name,
            at(k),
            expected
        )));
    }
    for l in 0..k {
        if !at(l).is_zero() {
            return Err(Error::Validation(format!(
                "canonical class of degree 2*{k} does not vanish at index {l} on {}",
                comp.name
            )));
        }
    }
    Ok(out)
}

/// One evaluated moment condition.
#[derive(Clone, Debug)]
pub struct MomentCondition {
    pub power: usize,
    pub sum: LinFraction,
}

#[derive(Clone, Debug)]
pub struct MomentReport {
    pub component: String,
    pub conditions: Vec<MomentCondition>,
    pub passed: bool,
}

/// Moment conditions on a minimal component: for an assignment of degree
/// `2k`, `sum_p f(p) c1(p)^i / e_X(p)` must vanish exactly for every
/// `i < d - k`. Vacuously true when `k >= d`.
pub fn chern_moment_check(
    space: &TSpace,
    xi: &[i64],
    component: usize,
    f: &Assignment,
) -> Result<MomentReport> {
    let comp = &space.one_skeleton[component];
    if !tolman_hypothesis(space, xi, component)? {
        return Err(Error::Hypothesis(format!(
            "component {} is not minimal; the moment criterion does not apply",
            comp.name
        )));
    }
    let chern1 = component_chern1(space, xi, component)?;
    let d = comp.half_dim;
    let k = f.k();
    let mut conditions = Vec::new();
    let mut passed = true;
    for i in 0..d.saturating_sub(k) {
        let mut terms = Vec::new();
        for (pos, &p) in comp.points.iter().enumerate() {
            let numerator = f.value(p).mul(&chern1.values[pos].pow(i as u32));
            let tangent = space.tangent_weights(Region::Skeleton(component), p);
            terms.push(LinFraction::quotient(numerator, &tangent));
        }
        let sum = LinFraction::sum(space.rank, terms.iter())?;
        if !sum.is_zero() {
            passed = false;
        }
        conditions.push(MomentCondition { power: i, sum });
    }
    Ok(MomentReport { component: comp.name.clone(), conditions, passed })
}

/// A full family of canonical classes on a rank-one space, stored by their
/// fixed-point restrictions. Construction asserts the defining properties:
/// `tau_q(q)` is the product of the negative weights at `q`, and `tau_q`
/// vanishes at every other point of index at most `lambda_q`.
#[derive(Clone, Debug)]
pub struct CanonicalFamily {
    pub lambda: Vec<usize>,
    /// `taus[q]` is the canonical class at fixed point `q`.
    pub taus: Vec<Assignment>,
}

impl CanonicalFamily {
    pub fn from_values(space: &TSpace, xi: &[i64], values: Vec<Vec<Polynomial>>) -> Result<Self> {
        if space.rank != 1 {
            return Err(Error::Hypothesis(format!(
                "canonical families require a rank-one space, got rank {}",
                space.rank
            )));
        }
        let n_points = space.fixed_points.len();
        if values.len() != n_points {
            return Err(Error::MissingClasses(format!(
                "need one class per fixed point: got {} for {}",
                values.len(),
                n_points
            )));
        }
        let morse = morse_data(space, xi)?;
        let lambda: Vec<usize> = morse.points.iter().map(|p| p.lambda).collect();
        let mut taus = Vec::with_capacity(n_points);
        for (q, vals) in values.into_iter().enumerate() {
            let tau = Assignment::new(space, 2 * lambda[q], vals)?;
            if tau.value(q) != &morse.points[q].lambda_minus {
                return Err(Error::Validation(format!(
                    "tau at {} restricts to {} there; expected the negative-weight product {}",
                    space.point_name(q),
                    tau.value(q),
                    morse.points[q].lambda_minus
                )));
            }
            for p in 0..n_points {
                if p != q && lambda[p] <= lambda[q] && !tau.value(p).is_zero() {
                    return Err(Error::Validation(format!(
                        "tau at {} must vanish at {} (index {} <= {})",
                        space.point_name(q),
                        space.point_name(p),
                        lambda[p],
                        lambda[q]
                    )));
                }
            }
            taus.push(tau);
        }
        Ok(CanonicalFamily { lambda, taus })
    }

    /// Canonical classes of a rank-one minimal space via the closed formula.
    pub fn tolman(space: &TSpace, xi: &[i64]) -> Result<Self> {
        if space.rank != 1 {
            return Err(Error::Hypothesis(format!(
                "canonical families require a rank-one space, got rank {}",
                space.rank
            )));
        }
        let component = space
            .one_skeleton
            .iter()
            .position(|c| c.points.len() == space.fixed_points.len())
            .ok_or_else(|| {
                Error::MissingClasses("no one-skeleton component contains every fixed point".into())
            })?;
        let morse = morse_data(space, xi)?;
        let lambda: Vec<usize> = morse.points.iter().map(|p| p.lambda).collect();
        let mut values = vec![Vec::new(); space.fixed_points.len()];
        for q in 0..space.fixed_points.len() {
            let classes = tolman_canonical_classes(space, xi, component, lambda[q])?;
            let mut vals = vec![Polynomial::zero(space.rank); space.fixed_points.len()];
            for (p, v) in classes {
                vals[p] = v;
            }
            values[q] = vals;
        }
        CanonicalFamily::from_values(space, xi, values)
    }
}

#[derive(Clone, Debug)]
pub struct PairingReport {
    /// For each fixed point `q`, the reduced sum `sum_p f(p) tau_q(p) / e_M(p)`.
    pub sums: Vec<LinFraction>,
    pub passed: bool,
}

/// Pairing criterion on a rank-one space: `f` is cohomological iff every
/// pairing against a canonical class reduces to a polynomial. The reduced
/// sums are exactly the coefficients of `f` against the dual basis.
pub fn canonical_pairing_check(
    space: &TSpace,
    f: &Assignment,
    family: &CanonicalFamily,
) -> Result<PairingReport> {
    if space.rank != 1 {
        return Err(Error::Hypothesis(format!(
            "the pairing criterion requires rank one, got {}",
            space.rank
        )));
    }
    if family.taus.len() != space.fixed_points.len() {
        return Err(Error::MissingClasses("family size mismatch".into()));
    }
    let mut sums = Vec::new();
    let mut passed = true;
    for tau in &family.taus {
        let sum = localization_sum(space, Region::Whole, f, Some(tau))?;
        if !sum.is_polynomial() {
            passed = false;
        }
        sums.push(sum);
    }
    Ok(PairingReport { sums, passed })
}

#[derive(Clone, Debug)]
pub struct VanishingReport {
    /// (fixed point index, sum) for every `q` with `lambda_q < n - k`.
    pub conditions: Vec<(usize, LinFraction)>,
    pub passed: bool,
}

/// Refined criterion on a rank-one space: a degree-`2k` assignment is
/// cohomological iff the pairing sums vanish exactly for all `q` of index
/// strictly below `n - k`. Vacuous for `k >= n`.
pub fn canonical_vanishing_check(
    space: &TSpace,
    f: &Assignment,
    family: &CanonicalFamily,
) -> Result<VanishingReport> {
    if space.rank != 1 {
        return Err(Error::Hypothesis(format!(
            "the vanishing criterion requires rank one, got {}",
            space.rank
        )));
    }
    let n = space.half_dim;
    let k = f.k();
    let mut conditions = Vec::new();
    let mut passed = true;
    for (q, tau) in family.taus.iter().enumerate() {
        if family.lambda[q] + k < n {
            let sum = localization_sum(space, Region::Whole, f, Some(tau))?;
            if !sum.is_zero() {
                passed = false;
            }
            conditions.push((q, sum));
        }
    }
    Ok(VanishingReport { conditions, passed })
}

/// Smallest `N` such that `x^N * f` passes the pairing criterion, read off
/// directly as the worst surviving denominator power of the pairing sums.
pub fn torsion_exponent(
    space: &TSpace,
    f: &Assignment,
    family: &CanonicalFamily,
    cap: u32,
) -> Result<u32> {
    let report = canonical_pairing_check(space, f, family)?;
    let mut needed = 0u32;
    for sum in &report.sums {
        let total: u32 = sum.certificate().iter().map(|(_, m)| m).sum();
        needed = needed.max(total);
    }
    if needed > cap {
        return Err(Error::CapExceeded(cap));
    }
    if needed > 0 {
        let x_pow = Polynomial::variable(1, 0).pow(needed);
        let shifted = f.mul_polynomial(space, &x_pow)?;
        let recheck = canonical_pairing_check(space, &shifted, family)?;
        if !recheck.passed {
            return Err(Error::Validation(
                "internal: shifted assignment still fails the pairing criterion".into(),
            ));
        }
    }
    Ok(needed)
}

/// Coefficient of a rank-one homogeneous polynomial against `x^deg`.
fn rank1_scalar(p: &Polynomial) -> Rational {
    match p.degree() {
        None => Rational::zero(),
        Some(d) => p.coefficient(&Monomial::new(vec![d as u32])),
    }
}

/// Dimension of the space of degree-`2k` assignments passing the vanishing
/// criterion, computed as the kernel of the scalar constraint matrix over
/// the assignment basis.
pub fn vanishing_passing_dimension(
    space: &TSpace,
    family: &CanonicalFamily,
    k: usize,
) -> Result<usize> {
    if space.rank != 1 {
        return Err(Error::Hypothesis("rank-one spaces only".into()));
    }
    let n = space.half_dim;
    let basis = assignment_basis(space, k);
    if basis.is_empty() {
        return Ok(0);
    }
    let xi = space.generic_xi();
    let morse = morse_data(space, &xi)?;
    // e_M(p) = euler_coeff * x^n
    let euler_coeff: Vec<Rational> =
        morse.points.iter().map(|mp| rank1_scalar(&mp.euler)).collect();
    let mut rows = Vec::new();
    for q in 0..space.fixed_points.len() {
        if family.lambda[q] + k >= n {
            continue;
        }
        let tau = &family.taus[q];
        let row: Vec<Rational> = basis
            .iter()
            .map(|b| {
                let mut acc = Rational::zero();
                for p in 0..space.fixed_points.len() {
                    let fp = rank1_scalar(b.value(p));
                    let tp = rank1_scalar(tau.value(p));
                    if !fp.is_zero() && !tp.is_zero() {
                        acc += fp * tp / euler_coeff[p].clone();
                    }
                }
                acc
            })
            .collect();
        rows.push(row);
    }
    Ok(basis.len() - crate::linalg::rank(&rows, basis.len()))
}

/// `dim A^{2k} - dim H^{2k}`: how many degree-`2k` assignments are missed by
/// the free-module dimension count.
pub fn defect_dimension(space: &TSpace, xi: &[i64], k: usize) -> Result<usize> {
    let dim_a = assignment_basis(space, k).len();
    let dim_h = betti_data(space, xi)?.dim_ht(space.rank, k);
    if dim_a < dim_h {
        return Err(Error::NegativeDefect { k, dim_a, dim_h });
    }
    Ok(dim_a - dim_h)
}

/// Which eta classes join the necessity battery.
#[derive(Clone, Copy, Debug)]
pub struct EtaSelection {
    pub one: bool,
    pub chern: bool,
    pub thom: bool,
    /// Delta classes are cohomological exactly on GKM spaces, so they are
    /// only ever used there regardless of this flag.
    pub delta: bool,
    /// Pair against the candidate itself (sound: a cohomological class has
    /// cohomological powers).
    pub self_class: bool,
}

impl Default for EtaSelection {
    fn default() -> Self {
        EtaSelection { one: true, chern: true, thom: true, delta: true, self_class: true }
    }
}

/// The finite eta library used by the necessity checks: the constant class,
/// the Chern assignments, the Thom assignments of every declared stratum,
/// the candidate itself, and (on GKM spaces only) the delta classes.
pub fn eta_library(
    space: &TSpace,
    candidate: Option<&Assignment>,
    sel: &EtaSelection,
) -> Result<Vec<(String, Assignment)>> {
    let mut lib = Vec::new();
    if sel.one {
        lib.push((
            "1".to_string(),
            Assignment::new(space, 0, vec![Polynomial::one(space.rank); space.fixed_points.len()])?,
        ));
    }
    if sel.chern {
        for m in 1..=space.half_dim {
            lib.push((format!("c{m}"), chern_class(space, m)?));
        }
    }
    if sel.thom {
        for region in space.regions() {
            if region != Region::Whole {
                lib.push((
                    format!("thom({})", space.region_name(region)),
                    thom_class(space, region)?,
                ));
            }
        }
    }
    if let (true, Some(f)) = (sel.self_class, candidate) {
        lib.push(("f".to_string(), f.clone()));
    }
    if sel.delta && space.is_gkm()? {
        for p in 0..space.fixed_points.len() {
            lib.push((format!("delta({})", space.point_name(p)), delta_class(space, p)));
        }
    }
    Ok(lib)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// Closure dimension at most four.
    SmallDim,
    /// Minimal Hamiltonian component.
    Minimal,
    Unmet,
}

#[derive(Clone, Debug)]
pub struct ComponentVerdict {
    pub name: String,
    pub half_dim: usize,
    pub hypothesis: Hypothesis,
    /// `None` when no sufficient criterion applies.
    pub passed: Option<bool>,
    pub certificate: Option<LinFraction>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub region: String,
    pub condition: String,
    pub certificate: LinFraction,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Cohomological,
    NotCohomological(Witness),
    Undecidable(Vec<String>),
}

#[derive(Clone, Debug)]
pub struct DecisionReport {
    pub verdict: Verdict,
    pub components: Vec<ComponentVerdict>,
    pub necessity: Vec<LocalizationReport>,
}

/// Full decision procedure. Every declared stratum closure and the whole
/// space are first run through the necessity battery; each one-skeleton
/// component is then checked against whichever sufficient criterion its
/// shape admits. The verdict is Cohomological only when every component
/// falls under a criterion and everything passes; a component outside both
/// hypotheses downgrades the verdict to Undecidable unless some necessary
/// condition already refutes.
pub fn decide_cohomological(
    space: &TSpace,
    xi: &[i64],
    f: &Assignment,
    sel: &EtaSelection,
) -> Result<DecisionReport> {
    let mut sel = *sel;
    sel.one = true; // the plain localization sums drive the small-dimension criterion
    let lib = eta_library(space, Some(f), &sel)?;

    let mut necessity = Vec::new();
    for region in space.regions() {
        for (label, eta) in &lib {
            let sum = localization_sum(space, region, f, Some(eta))?;
            necessity.push(LocalizationReport {
                region: space.region_name(region),
                eta: label.clone(),
                sum,
            });
        }
    }

    let mut components = Vec::new();
    let mut component_witness: Option<Witness> = None;
    let mut unmet = Vec::new();
    for (ci, comp) in space.one_skeleton.iter().enumerate() {
        if comp.half_dim <= 2 {
            let report = necessity
                .iter()
                .find(|r| r.region == comp.name && r.eta == "1")
                .expect("eta=1 battery covers every component");
            let passed = report.polynomial();
            if !passed && component_witness.is_none() {
                component_witness = Some(Witness {
                    region: comp.name.clone(),
                    condition: "integrality of the localization sum".into(),
                    certificate: report.sum.clone(),
                });
            }
            components.push(ComponentVerdict {
                name: comp.name.clone(),
                half_dim: comp.half_dim,
                hypothesis: Hypothesis::SmallDim,
                passed: Some(passed),
                certificate: if passed { None } else { Some(report.sum.clone()) },
                detail: format!("localization sum = {}", report.sum),
            });
        } else if tolman_hypothesis(space, xi, ci)? {
            let report = chern_moment_check(space, xi, ci, f)?;
            let failing = report.conditions.iter().find(|c| !c.sum.is_zero());
            if let Some(cond) = failing {
                if component_witness.is_none() {
                    component_witness = Some(Witness {
                        region: comp.name.clone(),
                        condition: format!("moment condition i={} must vanish", cond.power),
                        certificate: cond.sum.clone(),
                    });
                }
            }
            components.push(ComponentVerdict {
                name: comp.name.clone(),
                half_dim: comp.half_dim,
                hypothesis: Hypothesis::Minimal,
                passed: Some(report.passed),
                certificate: failing.map(|c| c.sum.clone()),
                detail: format!("{} moment condition(s) checked", report.conditions.len()),
            });
        } else {
            unmet.push(comp.name.clone());
            components.push(ComponentVerdict {
                name: comp.name.clone(),
                half_dim: comp.half_dim,
                hypothesis: Hypothesis::Unmet,
                passed: None,
                certificate: None,
                detail: format!(
                    "half_dim {} with {} fixed points: neither sufficient criterion applies",
                    comp.half_dim,
                    comp.points.len()
                ),
            });
        }
    }

    let witness = component_witness.or_else(|| {
        necessity.iter().find(|r| !r.polynomial()).map(|r| Witness {
            region: r.region.clone(),
            condition: format!("necessity with eta = {}", r.eta),
            certificate: r.sum.clone(),
        })
    });

    let verdict = match witness {
        Some(w) => Verdict::NotCohomological(w),
        None if unmet.is_empty() => Verdict::Cohomological,
        None => Verdict::Undecidable(unmet),
    };
    Ok(DecisionReport { verdict, components, necessity })
}

#[derive(Clone, Debug)]
pub struct IntegralReport {
    pub region: String,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    pub equal: bool,
}

/// Consistency identity tying the top Chern pairing over a stratum closure
/// to the Euler-characteristic multiple of the assignment's stratum value:
/// restricted to the stabilizer, `sum_p (prod of normal weights) f(p)`
/// equals `|Z^T| * (c_l f)(Z)` with `l` the normal half-dimension.
pub fn chern_integral_check(
    space: &TSpace,
    region: Region,
    f: &Assignment,
) -> Result<IntegralReport> {
    let Some(stab) = space.region_stabilizer(region) else {
        return Err(Error::Hypothesis(
            "the integral identity applies to declared stratum closures, not the whole space".into(),
        ));
    };
    let points = space.region_points(region);
    if points.is_empty() {
        return Err(Error::Validation(format!(
            "stratum {} has no fixed points",
            space.region_name(region)
        )));
    }
    let mut normal_count = None;
    let mut lhs_raw = Polynomial::zero(space.rank);
    for &p in &points {
        let normals = space.normal_weights(region, p);
        match normal_count {
            None => normal_count = Some(normals.len()),
            Some(c) if c != normals.len() => {
                return Err(Error::Validation(format!(
                    "stratum {} has inconsistent normal weight counts",
                    space.region_name(region)
                )))
            }
            _ => {}
        }
        let product = crate::linform::weight_product(space.rank, &normals);
        lhs_raw = lhs_raw.try_add(&product.mul(f.value(p)))?;
    }
    let lhs = stab.reduce(&lhs_raw)?;
    let ell = normal_count.unwrap();
    let c_ell = chern_class(space, ell)?;
    let product = c_ell.mul(space, f)?;
    let stratum_value = product.stratum_value(space, region)?;
    let chi = Rational::from(BigInt::from(points.len() as i64));
    let rhs = stratum_value.scale(&chi);
    let equal = lhs == rhs;
    Ok(IntegralReport { region: space.region_name(region), lhs, rhs, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poly::rat;

    fn alpha() -> Polynomial {
        Polynomial::variable(2, 0)
    }

    fn cp1sq_f(space: &TSpace) -> Assignment {
        let z = Polynomial::zero(2);
        Assignment::new(space, 2, vec![alpha(), z.clone(), z, alpha()]).unwrap()
    }

    fn cube_f(space: &TSpace) -> Assignment {
        let mut values = vec![Polynomial::zero(2); 8];
        values[0] = alpha();
        values[1] = alpha().neg();
        Assignment::new(space, 2, values).unwrap()
    }

    #[test]
    fn product_example_obstruction() {
        let s = fixtures::cp1sq();
        let f = cp1sq_f(&s);
        let sum = localization_sum(&s, Region::Whole, &f, None).unwrap();
        assert_eq!(sum.numerator(), &Polynomial::constant(2, rat(2, 1)));
        assert_eq!(sum.certificate(), &[(LinForm::new(vec![1, 0]).unwrap(), 1)]);
    }

    #[test]
    fn cube_example_sums() {
        let s = fixtures::cp1cube();
        let f = cube_f(&s);
        let sum = localization_sum(&s, Region::Whole, &f, None).unwrap();
        assert!(sum.is_zero());

        let f2 = f.mul(&s, &f).unwrap();
        let sum2 = localization_sum(&s, Region::Whole, &f2, None).unwrap();
        assert_eq!(sum2.numerator(), &Polynomial::constant(2, rat(2, 1)));
        assert_eq!(sum2.certificate(), &[(LinForm::new(vec![1, 0]).unwrap(), 1)]);
    }

    #[test]
    fn goldin_holm_on_small_components() {
        let s = fixtures::cp1();
        let f = Assignment::new(&s, 2, vec![alpha(), Polynomial::zero(2)]).unwrap();
        let report = goldin_holm_check(&s, 0, &f).unwrap();
        assert!(report.polynomial());

        let cube = fixtures::cp1cube();
        let g = cube_f(&cube);
        assert!(matches!(goldin_holm_check(&cube, 0, &g), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn chern1_of_minimal_projective_plane() {
        let s = fixtures::cp2_s1();
        let data = component_chern1(&s, &[1], 0).unwrap();
        assert_eq!(data.multiples, vec![rat(3, 1), rat(0, 1), rat(-3, 1)]);
        assert!(data.ordering_violations.is_empty());
    }

    #[test]
    fn tolman_classes_match_hand_computation() {
        let s = fixtures::cp2_s1();
        let x = Polynomial::variable(1, 0);
        let tau1 = tolman_canonical_classes(&s, &[1], 0, 1).unwrap();
        assert_eq!(tau1[0].1, Polynomial::zero(1));
        assert_eq!(tau1[1].1, x.neg());
        assert_eq!(tau1[2].1, x.scale(&rat(-2, 1)));

        let tau2 = tolman_canonical_classes(&s, &[1], 0, 2).unwrap();
        assert!(tau2[0].1.is_zero());
        assert!(tau2[1].1.is_zero());
        assert_eq!(tau2[2].1, x.pow(2).scale(&rat(2, 1)));
    }

    #[test]
    fn tolman_tau0_is_constant_one() {
        let s = fixtures::cp2_s1();
        let tau0 = tolman_canonical_classes(&s, &[1], 0, 0).unwrap();
        for (_, v) in tau0 {
            assert_eq!(v, Polynomial::one(1));
        }
    }

    #[test]
    fn tolman_hypothesis_fails_off_minimal_spaces() {
        let s = fixtures::cp1sq();
        assert!(!tolman_hypothesis(&s, &[1, 1], 0).unwrap());
        assert!(matches!(
            tolman_canonical_classes(&s, &[1, 1], 0, 1),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn moment_condition_on_projective_plane() {
        let s = fixtures::cp2_s1();
        let x = Polynomial::variable(1, 0);
        // passes: (1, 1, 1) gives 1/2 - 1 + 1/2 = 0
        let f = Assignment::new(&s, 2, vec![x.clone(), x.clone(), x.clone()]).unwrap();
        assert!(chern_moment_check(&s, &[1], 0, &f).unwrap().passed);
        // fails: (1, 0, 0) gives 1/2
        let g = Assignment::new(&s, 2, vec![x.clone(), Polynomial::zero(1), Polynomial::zero(1)])
            .unwrap();
        let report = chern_moment_check(&s, &[1], 0, &g).unwrap();
        assert!(!report.passed);
        assert_eq!(report.conditions.len(), 1);

        // k >= d is vacuous
        let h = Assignment::new(&s, 4, vec![x.pow(2), x.pow(2), x.pow(2)]).unwrap();
        let report = chern_moment_check(&s, &[1], 0, &h).unwrap();
        assert!(report.passed && report.conditions.is_empty());
    }

    #[test]
    fn canonical_family_via_formula() {
        let s = fixtures::cp2_s1();
        let family = CanonicalFamily::tolman(&s, &[1]).unwrap();
        assert_eq!(family.lambda, vec![0, 1, 2]);
        for tau in &family.taus {
            let report = canonical_pairing_check(&s, tau, &family).unwrap();
            assert!(report.passed);
        }
    }

    #[test]
    fn vanishing_check_matches_moments_on_minimal_space() {
        let s = fixtures::cp2_s1();
        let family = CanonicalFamily::tolman(&s, &[1]).unwrap();
        let x = Polynomial::variable(1, 0);
        let f = Assignment::new(&s, 2, vec![x.clone(), x.clone(), x.clone()]).unwrap();
        assert!(canonical_vanishing_check(&s, &f, &family).unwrap().passed);
        let g = Assignment::new(&s, 2, vec![x.clone(), Polynomial::zero(1), Polynomial::zero(1)])
            .unwrap();
        assert!(!canonical_vanishing_check(&s, &g, &family).unwrap().passed);
    }

    #[test]
    fn vanishing_dimension_counts() {
        let s = fixtures::cp2_s1();
        let family = CanonicalFamily::tolman(&s, &[1]).unwrap();
        // degree 2: one constraint on a 3-dimensional space
        assert_eq!(vanishing_passing_dimension(&s, &family, 1).unwrap(), 2);
        // k >= n: no constraints at all
        assert_eq!(
            vanishing_passing_dimension(&s, &family, 2).unwrap(),
            assignment_basis(&s, 2).len()
        );
    }

    #[test]
    fn torsion_exponent_of_cohomological_class_is_zero() {
        let s = fixtures::cp2_s1();
        let family = CanonicalFamily::tolman(&s, &[1]).unwrap();
        let n = torsion_exponent(&s, &family.taus[1], &family, 8).unwrap();
        assert_eq!(n, 0);
    }

    #[test]
    fn decision_on_product_example() {
        let s = fixtures::cp1sq();
        let f = cp1sq_f(&s);
        let report = decide_cohomological(&s, &[1, 1], &f, &EtaSelection::default()).unwrap();
        match &report.verdict {
            Verdict::NotCohomological(w) => {
                assert_eq!(w.region, "X0");
                assert_eq!(w.certificate.numerator(), &Polynomial::constant(2, rat(2, 1)));
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn decision_on_cube_upgrades_from_undecidable() {
        let s = fixtures::cp1cube();
        let f = cube_f(&s);
        let report = decide_cohomological(&s, &[1, 1], &f, &EtaSelection::default()).unwrap();
        // passes the plain integrality test everywhere ...
        assert!(report.necessity.iter().filter(|r| r.eta == "1").all(|r| r.polynomial()));
        // ... but a larger eta refutes
        match &report.verdict {
            Verdict::NotCohomological(w) => assert!(w.condition.contains("eta")),
            other => panic!("expected refutation, got {other:?}"),
        }
        assert_eq!(report.components[0].hypothesis, Hypothesis::Unmet);
    }

    #[test]
    fn decision_on_gkm_space() {
        let s = fixtures::cp1xcp1();
        for b in assignment_basis(&s, 1) {
            let report = decide_cohomological(&s, &[1, 2], &b, &EtaSelection::default()).unwrap();
            assert!(matches!(report.verdict, Verdict::Cohomological));
        }
    }

    #[test]
    fn defect_dimensions() {
        assert_eq!(defect_dimension(&fixtures::cp1sq(), &[1, 1], 1).unwrap(), 1);
        assert_eq!(defect_dimension(&fixtures::cp1(), &[1, 1], 1).unwrap(), 0);
        assert_eq!(defect_dimension(&fixtures::cp1sq(), &[1, 1], 0).unwrap(), 0);
    }

    #[test]
    fn integral_identity_on_sphere_and_edges() {
        let s = fixtures::cp1();
        let f = Assignment::new(&s, 2, vec![alpha(), Polynomial::zero(2)]).unwrap();
        let report = chern_integral_check(&s, Region::Skeleton(0), &f).unwrap();
        assert!(report.equal, "lhs {} vs rhs {}", report.lhs, report.rhs);

        let g = fixtures::cp1xcp1();
        for b in assignment_basis(&g, 1) {
            for ci in 0..4 {
                let report = chern_integral_check(&g, Region::Skeleton(ci), &b).unwrap();
                assert!(report.equal, "edge {ci}: lhs {} vs rhs {}", report.lhs, report.rhs);
            }
        }
    }

    #[test]
    fn constant_assignment_integral_identity() {
        let s = fixtures::cp1sq();
        let one = Assignment::new(&s, 0, vec![Polynomial::one(2); 4]).unwrap();
        let report = chern_integral_check(&s, Region::Skeleton(0), &one).unwrap();
        assert!(report.equal);
    }

    #[test]
    fn ordering_violation_is_reported_not_fatal() {
        use crate::space::{FixedPoint, SkeletonComponent};
        // index-0 point and index-1 point with equal weight sums: the first
        // Chern multiples fail to decrease strictly
        let s = TSpace {
            name: "bad-order".into(),
            rank: 1,
            half_dim: 2,
            fixed_points: vec![
                FixedPoint {
                    name: "a".into(),
                    weights: vec![
                        LinForm::new(vec![1]).unwrap(),
                        LinForm::new(vec![1]).unwrap(),
                    ],
                },
                FixedPoint {
                    name: "b".into(),
                    weights: vec![
                        LinForm::new(vec![-1]).unwrap(),
                        LinForm::new(vec![3]).unwrap(),
                    ],
                },
            ],
            one_skeleton: vec![SkeletonComponent {
                name: "X".into(),
                direction: LinForm::new(vec![1]).unwrap(),
                points: vec![0, 1],
                half_dim: 2,
            }],
            higher_strata: vec![],
            xi: Some(vec![1]),
            formal: true,
        };
        s.validate().unwrap();
        let data = component_chern1(&s, &[1], 0).unwrap();
        assert_eq!(data.multiples, vec![rat(2, 1), rat(2, 1)]);
        assert_eq!(data.ordering_violations.len(), 1);
    }

    #[test]
    fn torsion_cap_is_enforced() {
        let s = fixtures::cp2_s1();
        let family = CanonicalFamily::tolman(&s, &[1]).unwrap();
        let x = Polynomial::variable(1, 0);
        let bad =
            Assignment::new(&s, 2, vec![x, Polynomial::zero(1), Polynomial::zero(1)]).unwrap();
        let n = torsion_exponent(&s, &bad, &family, 8).unwrap();
        assert!(n >= 1);
        assert!(matches!(torsion_exponent(&s, &bad, &family, 0), Err(Error::CapExceeded(0))));
    }

    #[test]
    fn eta_library_excludes_deltas_off_gkm() {
        let s = fixtures::cp1cube();
        let lib = eta_library(&s, None, &EtaSelection::default()).unwrap();
        assert!(lib.iter().all(|(l, _)| !l.starts_with("delta")));
        let g = fixtures::cp1xcp1();
        let lib = eta_library(&g, None, &EtaSelection::default()).unwrap();
        assert!(lib.iter().any(|(l, _)| l.starts_with("delta")));
    }
}
