//! Pullback of assignments along equivariant maps given combinatorially.
//!
//! A map is presented by its action on fixed points, optionally together
//! with a stratum correspondence. The stratum correspondence cannot be
//! reconstructed from fixed-point data in general, so when supplied it is
//! validated (monotone and stabilizer-compatible), never inferred.

use crate::assignment::Assignment;
use crate::error::{Error, Result};
use crate::space::{Region, TSpace};
use crate::subtorus::Subtorus;

/// Fixed-point map between two spaces for the same torus, with an optional
/// declared stratum correspondence.
#[derive(Clone, Debug)]
pub struct EquivariantMap {
    /// `phi[i]` is the target index of the image of source point `i`.
    pub phi: Vec<usize>,
    /// Declared pairs (source stratum, target stratum).
    pub strata: Vec<(Region, Region)>,
}

impl EquivariantMap {
    /// Builds and validates the map data from named pairs.
    pub fn new(
        source: &TSpace,
        target: &TSpace,
        phi_pairs: &[(String, String)],
        strata_pairs: &[(String, String)],
    ) -> Result<Self> {
        if source.rank != target.rank {
            return Err(Error::InvalidMapData(format!(
                "source rank {} differs from target rank {}",
                source.rank, target.rank
            )));
        }
        let mut phi = vec![usize::MAX; source.fixed_points.len()];
        for (from, to) in phi_pairs {
            let i = source
                .point_index(from)
                .ok_or_else(|| Error::InvalidMapData(format!("unknown source point {from}")))?;
            let j = target
                .point_index(to)
                .ok_or_else(|| Error::InvalidMapData(format!("unknown target point {to}")))?;
            if phi[i] != usize::MAX {
                return Err(Error::InvalidMapData(format!("{from} is mapped twice")));
            }
            phi[i] = j;
        }
        if let Some(missing) = phi.iter().position(|&j| j == usize::MAX) {
            return Err(Error::InvalidMapData(format!(
                "fixed point {} has no image",
                source.point_name(missing)
            )));
        }
        let mut strata = Vec::new();
        for (from, to) in strata_pairs {
            let sx = source
                .region_by_name(from)
                .filter(|r| *r != Region::Whole)
                .ok_or_else(|| Error::InvalidMapData(format!("unknown source stratum {from}")))?;
            let tx = target
                .region_by_name(to)
                .filter(|r| *r != Region::Whole)
                .ok_or_else(|| Error::InvalidMapData(format!("unknown target stratum {to}")))?;
            let stab_x =
                source.region_stabilizer(sx).unwrap_or_else(|| Subtorus::full(source.rank));
            let stab_y =
                target.region_stabilizer(tx).unwrap_or_else(|| Subtorus::full(target.rank));
            // stabilizer-compatible: t_X inside t_{f(X)}
            if !stab_y.contains(&stab_x) {
                return Err(Error::InvalidMapData(format!(
                    "stratum map {from} -> {to} is not stabilizer-compatible"
                )));
            }
            // monotone: images of the stratum's fixed points land in the image stratum
            let target_points = target.region_points(tx);
            for p in source.region_points(sx) {
                if !target_points.contains(&phi[p]) {
                    return Err(Error::InvalidMapData(format!(
                        "stratum map {from} -> {to} is not monotone: {} maps outside",
                        source.point_name(p)
                    )));
                }
            }
            strata.push((sx, tx));
        }
        Ok(EquivariantMap { phi, strata })
    }

    /// Composition `other . self` (apply `self` first). The stratum data of
    /// the composite is not derivable, so it is dropped.
    pub fn then(&self, other: &EquivariantMap) -> EquivariantMap {
        EquivariantMap {
            phi: self.phi.iter().map(|&j| other.phi[j]).collect(),
            strata: Vec::new(),
        }
    }
}

/// Pullback of an assignment on the target: on fixed points it is
/// composition with the point map, and the result must satisfy the source
/// congruences; a failure means the declared map data is not equivariant.
pub fn pullback(
    source: &TSpace,
    target: &TSpace,
    map: &EquivariantMap,
    a: &Assignment,
) -> Result<Assignment> {
    if a.values().len() != target.fixed_points.len() {
        return Err(Error::InvalidMapData(
            "assignment does not live on the target space".into(),
        ));
    }
    let values = map.phi.iter().map(|&j| a.value(j).clone()).collect();
    Assignment::new(source, a.degree2(), values).map_err(|e| match e {
        Error::Congruence(violations) => Error::InvalidMapData(format!(
            "pulled-back values violate a source congruence: {}",
            violations[0]
        )),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poly::Polynomial;

    fn diag_map(source: &TSpace, target: &TSpace) -> EquivariantMap {
        EquivariantMap::new(
            source,
            target,
            &[("p1".into(), "p4".into()), ("p2".into(), "p1".into())],
            &[("X0".into(), "X0".into())],
        )
        .unwrap()
    }

    #[test]
    fn diagonal_pullback_of_obstruction_class() {
        let cp1 = fixtures::cp1();
        let cp1sq = fixtures::cp1sq();
        let alpha = Polynomial::variable(2, 0);
        let z = Polynomial::zero(2);
        let f =
            Assignment::new(&cp1sq, 2, vec![alpha.clone(), z.clone(), z, alpha.clone()]).unwrap();
        let map = diag_map(&cp1, &cp1sq);
        let pulled = pullback(&cp1, &cp1sq, &map, &f).unwrap();
        assert_eq!(pulled.degree2(), 2);
        assert_eq!(pulled.value(0), &alpha);
        assert_eq!(pulled.value(1), &alpha);
    }

    #[test]
    fn identity_pullback_is_identity() {
        let s = fixtures::cp1sq();
        let id = EquivariantMap::new(
            &s,
            &s,
            &s.fixed_points
                .iter()
                .map(|p| (p.name.clone(), p.name.clone()))
                .collect::<Vec<_>>(),
            &[],
        )
        .unwrap();
        for b in crate::assignment::assignment_basis(&s, 1) {
            assert_eq!(pullback(&s, &s, &id, &b).unwrap(), b);
        }
    }

    #[test]
    fn incompatible_point_map_is_rejected() {
        // sphere onto the diagonal pair of the GKM square: q1 and q4 are not
        // joined by any declared component, and a class separating them mod
        // x1 witnesses the failure
        let cp1 = fixtures::cp1();
        let square = fixtures::cp1xcp1();
        let map = EquivariantMap::new(
            &cp1,
            &square,
            &[("p1".into(), "q1".into()), ("p2".into(), "q4".into())],
            &[],
        )
        .unwrap();
        let x2 = Polynomial::variable(2, 1);
        let z = Polynomial::zero(2);
        let f = Assignment::new(&square, 2, vec![x2.clone(), x2.clone(), z.clone(), z]).unwrap();
        assert!(matches!(pullback(&cp1, &square, &map, &f), Err(Error::InvalidMapData(_))));
    }

    #[test]
    fn stratum_map_validation() {
        let cp1 = fixtures::cp1();
        let square = fixtures::cp1xcp1();
        // E13 has direction x2; the sphere stabilizer is ker(x1): incompatible
        let err = EquivariantMap::new(
            &cp1,
            &square,
            &[("p1".into(), "q1".into()), ("p2".into(), "q2".into())],
            &[("X0".into(), "E13".into())],
        );
        assert!(matches!(err, Err(Error::InvalidMapData(_))));
        // E12 has direction x1 and contains the images: compatible
        assert!(EquivariantMap::new(
            &cp1,
            &square,
            &[("p1".into(), "q1".into()), ("p2".into(), "q2".into())],
            &[("X0".into(), "E12".into())],
        )
        .is_ok());
    }

    #[test]
    fn composition_is_contravariant() {
        let cp1 = fixtures::cp1();
        let cp1sq = fixtures::cp1sq();
        // factor swap on the product space
        let swap = EquivariantMap::new(
            &cp1sq,
            &cp1sq,
            &[
                ("p1".into(), "p1".into()),
                ("p2".into(), "p3".into()),
                ("p3".into(), "p2".into()),
                ("p4".into(), "p4".into()),
            ],
            &[],
        )
        .unwrap();
        let diag = diag_map(&cp1, &cp1sq);
        let composed = diag.then(&swap);
        for b in crate::assignment::assignment_basis(&cp1sq, 1) {
            let via_composite = pullback(&cp1, &cp1sq, &composed, &b).unwrap();
            let staged = pullback(&cp1sq, &cp1sq, &swap, &b).unwrap();
            let via_stages = pullback(&cp1, &cp1sq, &diag, &staged).unwrap();
            assert_eq!(via_composite, via_stages);
        }
    }
}
