//! Combinatorial model of a compact torus action: isolated fixed points with
//! isotropy weights, one-skeleton components, and optional higher strata.
//!
//! The one-skeleton grouping is input data, not derived: two spaces can have
//! identical weight multisets at every fixed point and still differ in which
//! points share a component of the codimension-one fixed sets.

use std::collections::{BTreeMap, HashMap, HashSet};


use crate::error::{Error, Result};
use crate::linform::{weight_product, LinForm};
use crate::poly::{monomial_count, Polynomial};
use crate::subtorus::Subtorus;

#[derive(Clone, Debug)]
pub struct FixedPoint {
    pub name: String,
    pub weights: Vec<LinForm>,
}

#[derive(Clone, Debug)]
pub struct SkeletonComponent {
    pub name: String,
    /// Primitive positive-normalized annihilator of the stabilizer.
    pub direction: LinForm,
    /// Indices into `TSpace::fixed_points`.
    pub points: Vec<usize>,
    pub half_dim: usize,
}

#[derive(Clone, Debug)]
pub struct HigherStratum {
    pub name: String,
    pub stabilizer: Subtorus,
    pub points: Vec<usize>,
}

/// A stratum closure to localize over, or the whole space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Region {
    Whole,
    Skeleton(usize),
    Higher(usize),
}

#[derive(Clone, Debug)]
pub struct TSpace {
    pub name: String,
    pub rank: usize,
    pub half_dim: usize,
    pub fixed_points: Vec<FixedPoint>,
    pub one_skeleton: Vec<SkeletonComponent>,
    pub higher_strata: Vec<HigherStratum>,
    pub xi: Option<Vec<i64>>,
    pub formal: bool,
}

impl TSpace {
    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.fixed_points.iter().position(|p| p.name == name)
    }

    pub fn point_name(&self, idx: usize) -> &str {
        &self.fixed_points[idx].name
    }

    /// Checks every structural invariant; returns non-fatal warnings.
    ///
    /// Full effectiveness of the action is not decidable from weight data;
    /// the weak check (weights span the dual algebra) only produces a
    /// warning because standard examples act through a single character.
    pub fn validate(&self) -> Result<Vec<String>> {
        let mut warnings = Vec::new();
        if self.rank == 0 {
            return Err(Error::Validation("rank must be at least 1".into()));
        }
        if !self.formal {
            return Err(Error::Validation(
                "space must declare \"formal\": true; non-formal actions are unsupported".into(),
            ));
        }
        if self.fixed_points.is_empty() {
            return Err(Error::Validation("at least one fixed point is required".into()));
        }
        let mut seen = HashSet::new();
        for p in &self.fixed_points {
            if !seen.insert(p.name.as_str()) {
                return Err(Error::Validation(format!("duplicate fixed point name {}", p.name)));
            }
            if p.weights.len() != self.half_dim {
                return Err(Error::Validation(format!(
                    "{} has {} weights but half_dim is {}",
                    p.name,
                    p.weights.len(),
                    self.half_dim
                )));
            }
            for w in &p.weights {
                if w.rank() != self.rank {
                    return Err(Error::Validation(format!(
                        "{} has a weight of rank {} (expected {})",
                        p.name,
                        w.rank(),
                        self.rank
                    )));
                }
            }
        }
        let mut stratum_names = HashSet::new();
        for comp in &self.one_skeleton {
            if !stratum_names.insert(comp.name.as_str()) {
                return Err(Error::Validation(format!("duplicate stratum name {}", comp.name)));
            }
            if comp.direction.rank() != self.rank {
                return Err(Error::Validation(format!(
                    "component {} direction has wrong rank",
                    comp.name
                )));
            }
            if comp.half_dim >= 1 && comp.points.len() < 2 {
                return Err(Error::Validation(format!(
                    "component {} has half_dim {} but only {} fixed point(s)",
                    comp.name,
                    comp.half_dim,
                    comp.points.len()
                )));
            }
            let mut in_comp = HashSet::new();
            for &pi in &comp.points {
                if pi >= self.fixed_points.len() {
                    return Err(Error::Validation(format!(
                        "component {} references an unknown fixed point",
                        comp.name
                    )));
                }
                if !in_comp.insert(pi) {
                    return Err(Error::Validation(format!(
                        "component {} lists {} twice",
                        comp.name,
                        self.point_name(pi)
                    )));
                }
                let tangent = self.fixed_points[pi]
                    .weights
                    .iter()
                    .filter(|w| w.is_proportional(&comp.direction))
                    .count();
                if tangent != comp.half_dim {
                    return Err(Error::Validation(format!(
                        "{} has {} weight(s) proportional to the direction of {} but the component declares half_dim {}",
                        self.point_name(pi),
                        tangent,
                        comp.name,
                        comp.half_dim
                    )));
                }
            }
        }
        // Every weight direction at every point is covered by exactly one
        // component through that point.
        for (pi, p) in self.fixed_points.iter().enumerate() {
            let mut classes: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
            for w in &p.weights {
                *classes.entry(w.direction().coeffs().to_vec()).or_insert(0) += 1;
            }
            for dir in classes.keys() {
                let covering: Vec<&SkeletonComponent> = self
                    .one_skeleton
                    .iter()
                    .filter(|c| c.points.contains(&pi) && c.direction.coeffs() == dir.as_slice())
                    .collect();
                match covering.len() {
                    1 => {}
                    0 => {
                        return Err(Error::Validation(format!(
                            "no one-skeleton component through {} covers its weight direction {}",
                            p.name,
                            LinForm::new(dir.clone()).unwrap()
                        )))
                    }
                    _ => {
                        return Err(Error::Validation(format!(
                            "weight direction {} at {} is covered by more than one component",
                            LinForm::new(dir.clone()).unwrap(),
                            p.name
                        )))
                    }
                }
            }
        }
        for stratum in &self.higher_strata {
            if !stratum_names.insert(stratum.name.as_str()) {
                return Err(Error::Validation(format!("duplicate stratum name {}", stratum.name)));
            }
            if stratum.stabilizer.rank() != self.rank {
                return Err(Error::Validation(format!(
                    "stratum {} stabilizer has wrong rank",
                    stratum.name
                )));
            }
            if stratum.stabilizer.codim() < 2 {
                return Err(Error::Validation(format!(
                    "higher stratum {} must have stabilizer codimension >= 2",
                    stratum.name
                )));
            }
            for &pi in &stratum.points {
                if pi >= self.fixed_points.len() {
                    return Err(Error::Validation(format!(
                        "stratum {} references an unknown fixed point",
                        stratum.name
                    )));
                }
            }
        }
        if let Some(xi) = &self.xi {
            if xi.len() != self.rank {
                return Err(Error::Validation(format!(
                    "xi has length {} but rank is {}",
                    xi.len(),
                    self.rank
                )));
            }
            self.check_generic(xi)?;
        }
        // Weak effectiveness: do the weights span the dual algebra?
        let all: Vec<Vec<crate::poly::Rational>> = self
            .fixed_points
            .iter()
            .flat_map(|p| &p.weights)
            .map(|w| w.coeffs().iter().map(|&c| crate::poly::rat(c, 1)).collect())
            .collect();
        if crate::linalg::rank(&all, self.rank) < self.rank {
            warnings.push(
                "weights do not span the dual Lie algebra; the action factors through a quotient torus"
                    .into(),
            );
        }
        Ok(warnings)
    }

    fn check_generic(&self, xi: &[i64]) -> Result<()> {
        for p in &self.fixed_points {
            for w in &p.weights {
                if w.pair(xi) == 0 {
                    return Err(Error::NonGenericXi(format!(
                        "weight {} at {} pairs to zero",
                        w, p.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Pairwise linear independence of the weights at every fixed point,
    /// cross-checked against the one-skeleton dimensions.
    pub fn is_gkm(&self) -> Result<bool> {
        let mut independent = true;
        'outer: for p in &self.fixed_points {
            for i in 0..p.weights.len() {
                for j in (i + 1)..p.weights.len() {
                    if p.weights[i].is_proportional(&p.weights[j]) {
                        independent = false;
                        break 'outer;
                    }
                }
            }
        }
        let max_half_dim = self.one_skeleton.iter().map(|c| c.half_dim).max().unwrap_or(0);
        let skeleton_gkm = max_half_dim <= 1;
        if independent != skeleton_gkm {
            return Err(Error::Validation(format!(
                "inconsistent data: pairwise weight independence says GKM={independent} but the one-skeleton says GKM={skeleton_gkm}"
            )));
        }
        Ok(independent)
    }

    /// The stored polarization if present, else the first vector of the form
    /// `(1, t, t^2, ...)` that pairs non-trivially with every weight.
    pub fn generic_xi(&self) -> Vec<i64> {
        if let Some(xi) = &self.xi {
            return xi.clone();
        }
        let mut t: i64 = 1;
        loop {
            let mut xi = Vec::with_capacity(self.rank);
            let mut pow: i64 = 1;
            for _ in 0..self.rank {
                xi.push(pow);
                pow = pow.saturating_mul(t);
            }
            if self.check_generic(&xi).is_ok() {
                return xi;
            }
            t += 1;
        }
    }

    pub fn region_name(&self, region: Region) -> String {
        match region {
            Region::Whole => "M".to_string(),
            Region::Skeleton(i) => self.one_skeleton[i].name.clone(),
            Region::Higher(i) => self.higher_strata[i].name.clone(),
        }
    }

    pub fn region_by_name(&self, name: &str) -> Option<Region> {
        if name == "M" {
            return Some(Region::Whole);
        }
        if let Some(i) = self.one_skeleton.iter().position(|c| c.name == name) {
            return Some(Region::Skeleton(i));
        }
        self.higher_strata.iter().position(|s| s.name == name).map(Region::Higher)
    }

    /// All declared regions, skeleton first, then higher strata, then the
    /// whole space.
    pub fn regions(&self) -> Vec<Region> {
        let mut out: Vec<Region> = (0..self.one_skeleton.len()).map(Region::Skeleton).collect();
        out.extend((0..self.higher_strata.len()).map(Region::Higher));
        out.push(Region::Whole);
        out
    }

    pub fn region_points(&self, region: Region) -> Vec<usize> {
        match region {
            Region::Whole => (0..self.fixed_points.len()).collect(),
            Region::Skeleton(i) => self.one_skeleton[i].points.clone(),
            Region::Higher(i) => self.higher_strata[i].points.clone(),
        }
    }

    /// Stabilizer subalgebra of the stratum (`None` for the whole space).
    pub fn region_stabilizer(&self, region: Region) -> Option<Subtorus> {
        match region {
            Region::Whole => None,
            Region::Skeleton(i) => Some(
                Subtorus::from_annihilator(self.rank, &[self.one_skeleton[i].direction.clone()])
                    .expect("validated direction"),
            ),
            Region::Higher(i) => Some(self.higher_strata[i].stabilizer.clone()),
        }
    }

    /// Weights at `point` tangent to the region closure: those vanishing on
    /// the region's stabilizer.
    pub fn tangent_weights(&self, region: Region, point: usize) -> Vec<LinForm> {
        let weights = &self.fixed_points[point].weights;
        match region {
            Region::Whole => weights.clone(),
            Region::Skeleton(i) => weights
                .iter()
                .filter(|w| w.is_proportional(&self.one_skeleton[i].direction))
                .cloned()
                .collect(),
            Region::Higher(i) => weights
                .iter()
                .filter(|w| self.higher_strata[i].stabilizer.annihilates(w))
                .cloned()
                .collect(),
        }
    }

    /// Weights at `point` normal to the region closure.
    pub fn normal_weights(&self, region: Region, point: usize) -> Vec<LinForm> {
        let tangent = self.tangent_weights(region, point);
        let mut remaining: Vec<LinForm> = Vec::new();
        let mut pool = tangent;
        for w in &self.fixed_points[point].weights {
            if let Some(pos) = pool.iter().position(|t| t == w) {
                pool.remove(pos);
            } else {
                remaining.push(w.clone());
            }
        }
        remaining
    }
}

/// Morse quantities of one fixed point against a generic polarization.
#[derive(Clone, Debug)]
pub struct MorsePoint {
    /// Count of weights pairing negatively; the Morse index is twice this.
    pub lambda: usize,
    /// Product of the negative weights (1 when there are none).
    pub lambda_minus: Polynomial,
    /// Product of all weights: the equivariant Euler class at the point.
    pub euler: Polynomial,
}

/// Same quantities computed inside one skeleton component, using the weights
/// tangent to the component closure only. Entries align with the component's
/// point list.
#[derive(Clone, Debug)]
pub struct MorseComponent {
    pub lambda: Vec<usize>,
    pub lambda_minus: Vec<Polynomial>,
    pub euler: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct MorseData {
    pub xi: Vec<i64>,
    pub points: Vec<MorsePoint>,
    pub components: Vec<MorseComponent>,
}

pub fn morse_data(space: &TSpace, xi: &[i64]) -> Result<MorseData> {
    let mut points = Vec::with_capacity(space.fixed_points.len());
    for p in &space.fixed_points {
        for w in &p.weights {
            if w.pair(xi) == 0 {
                return Err(Error::NonGenericXi(format!(
                    "weight {} at {} pairs to zero",
                    w, p.name
                )));
            }
        }
        let negative: Vec<LinForm> =
            p.weights.iter().filter(|w| w.pair(xi) < 0).cloned().collect();
        points.push(MorsePoint {
            lambda: negative.len(),
            lambda_minus: weight_product(space.rank, &negative),
            euler: weight_product(space.rank, &p.weights),
        });
    }
    let mut components = Vec::with_capacity(space.one_skeleton.len());
    for (ci, comp) in space.one_skeleton.iter().enumerate() {
        let mut lambda = Vec::new();
        let mut lambda_minus = Vec::new();
        let mut euler = Vec::new();
        for &pi in &comp.points {
            let tangent = space.tangent_weights(Region::Skeleton(ci), pi);
            let negative: Vec<LinForm> =
                tangent.iter().filter(|w| w.pair(xi) < 0).cloned().collect();
            lambda.push(negative.len());
            lambda_minus.push(weight_product(space.rank, &negative));
            euler.push(weight_product(space.rank, &tangent));
        }
        components.push(MorseComponent { lambda, lambda_minus, euler });
    }
    Ok(MorseData { xi: xi.to_vec(), points, components })
}

/// Even Betti numbers read off the Morse indices, plus the free-module
/// dimension count for the equivariant theory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiData {
    /// `betti[k]` counts fixed points of index `k`, for `k = 0 ..= half_dim`.
    pub betti: Vec<usize>,
}

impl BettiData {
    /// Dimension of the degree-`2k` part of `H(M) tensor S(t*)`.
    pub fn dim_ht(&self, rank: usize, k: usize) -> usize {
        let mut acc = 0usize;
        for (i, &b) in self.betti.iter().enumerate() {
            if i <= k {
                acc += b * monomial_count(rank, k - i);
            }
        }
        acc
    }
}

pub fn betti_data(space: &TSpace, xi: &[i64]) -> Result<BettiData> {
    let morse = morse_data(space, xi)?;
    let mut betti = vec![0usize; space.half_dim + 1];
    for mp in &morse.points {
        betti[mp.lambda] += 1;
    }
    Ok(BettiData { betti })
}

/// Euler class of the region closure at one of its fixed points: the product
/// of the tangent weights there. Errors on a zero product input.
pub fn region_euler(space: &TSpace, region: Region, point: usize) -> Result<Polynomial> {
    let tangent = space.tangent_weights(region, point);
    let e = weight_product(space.rank, &tangent);
    if e.is_zero() && !tangent.is_empty() {
        return Err(Error::ZeroEulerClass(space.point_name(point).to_string()));
    }
    Ok(e)
}

/// Groups the weights at a point into proportionality classes, returning the
/// primitive positive direction of each class with its multiplicity, in a
/// canonical order.
pub fn direction_classes(weights: &[LinForm]) -> Vec<(LinForm, usize)> {
    let mut classes: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for w in weights {
        *classes.entry(w.direction().coeffs().to_vec()).or_insert(0) += 1;
    }
    classes
        .into_iter()
        .map(|(c, n)| (LinForm::new(c).expect("directions are nonzero"), n))
        .collect()
}

/// Builds the point-name lookup used by loaders.
pub fn point_lookup(space: &TSpace) -> HashMap<&str, usize> {
    space
        .fixed_points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.name.as_str(), i))
        .collect()
}
