//! JSON document formats for spaces, assignments, and maps.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::assignment::Assignment;
use crate::error::{Error, Result};
use crate::linform::LinForm;
use crate::poly::{parse_polynomial, Polynomial};
use crate::space::{FixedPoint, HigherStratum, SkeletonComponent, TSpace};
use crate::subtorus::Subtorus;

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub rank: usize,
    pub half_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Vec<i64>>,
    pub fixed_points: Vec<FixedPointDoc>,
    pub one_skeleton: Vec<SkeletonDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub higher_strata: Option<Vec<HigherStratumDoc>>,
    pub formal: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct FixedPointDoc {
    pub name: String,
    pub weights: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct SkeletonDoc {
    pub name: String,
    pub direction: Vec<i64>,
    pub fixed_points: Vec<String>,
    pub half_dim: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct HigherStratumDoc {
    pub name: String,
    pub annihilator: Vec<Vec<i64>>,
    pub fixed_points: Vec<String>,
}

/// Builds and validates a space from its document. Returns the validation
/// warnings alongside.
pub fn space_from_doc(doc: &SpaceDoc, name: &str) -> Result<(TSpace, Vec<String>)> {
    let mut fixed_points = Vec::with_capacity(doc.fixed_points.len());
    for fp in &doc.fixed_points {
        let weights = fp
            .weights
            .iter()
            .map(|w| {
                LinForm::new(w.clone()).map_err(|_| {
                    Error::Validation(format!("{} has a zero weight", fp.name))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        fixed_points.push(FixedPoint { name: fp.name.clone(), weights });
    }
    let lookup = |space_points: &[FixedPoint], n: &str| -> Result<usize> {
        space_points
            .iter()
            .position(|p| p.name == n)
            .ok_or_else(|| Error::Validation(format!("unknown fixed point name {n}")))
    };
    let mut one_skeleton = Vec::with_capacity(doc.one_skeleton.len());
    for comp in &doc.one_skeleton {
        let direction = LinForm::new(comp.direction.clone())
            .map_err(|_| Error::Validation(format!("component {} has zero direction", comp.name)))?
            .direction();
        let points = comp
            .fixed_points
            .iter()
            .map(|n| lookup(&fixed_points, n))
            .collect::<Result<Vec<_>>>()?;
        one_skeleton.push(SkeletonComponent {
            name: comp.name.clone(),
            direction,
            points,
            half_dim: comp.half_dim,
        });
    }
    let mut higher_strata = Vec::new();
    for stratum in doc.higher_strata.as_deref().unwrap_or(&[]) {
        let forms = stratum
            .annihilator
            .iter()
            .map(|row| {
                LinForm::new(row.clone()).map_err(|_| {
                    Error::Validation(format!("stratum {} has a zero annihilator row", stratum.name))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let stabilizer = Subtorus::from_annihilator(doc.rank, &forms)?;
        if stabilizer.codim() != forms.len() {
            return Err(Error::Validation(format!(
                "stratum {} declares {} annihilator rows but only {} are independent",
                stratum.name,
                forms.len(),
                stabilizer.codim()
            )));
        }
        let points = stratum
            .fixed_points
            .iter()
            .map(|n| lookup(&fixed_points, n))
            .collect::<Result<Vec<_>>>()?;
        higher_strata.push(HigherStratum { name: stratum.name.clone(), stabilizer, points });
    }
    let space = TSpace {
        name: name.to_string(),
        rank: doc.rank,
        half_dim: doc.half_dim,
        fixed_points,
        one_skeleton,
        higher_strata,
        xi: doc.xi.clone(),
        formal: doc.formal,
    };
    let warnings = space.validate()?;
    Ok((space, warnings))
}

pub fn parse_space(json: &str, name: &str) -> Result<(TSpace, Vec<String>)> {
    let doc: SpaceDoc =
        serde_json::from_str(json).map_err(|e| Error::Schema(format!("space document: {e}")))?;
    space_from_doc(&doc, name)
}

pub fn load_space(path: &Path) -> Result<(TSpace, Vec<String>)> {
    let text = std::fs::read_to_string(path)?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("space");
    parse_space(&text, name)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AssignmentDoc {
    /// Cohomological degree `2k`.
    pub degree: usize,
    /// Fixed point name to canonical polynomial text.
    pub values: BTreeMap<String, String>,
}

pub fn assignment_from_doc(space: &TSpace, doc: &AssignmentDoc) -> Result<Assignment> {
    if !doc.degree.is_multiple_of(2) {
        return Err(Error::Schema(format!(
            "assignment degree {} must be even",
            doc.degree
        )));
    }
    let mut values = vec![Polynomial::zero(space.rank); space.fixed_points.len()];
    let mut seen = vec![false; space.fixed_points.len()];
    for (name, text) in &doc.values {
        let idx = space
            .point_index(name)
            .ok_or_else(|| Error::Schema(format!("unknown fixed point {name} in assignment")))?;
        values[idx] = parse_polynomial(text, space.rank)?;
        seen[idx] = true;
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::Schema(format!(
            "assignment has no value for fixed point {}",
            space.point_name(missing)
        )));
    }
    Assignment::new(space, doc.degree, values)
}

pub fn assignment_to_doc(space: &TSpace, a: &Assignment) -> AssignmentDoc {
    let values = space
        .fixed_points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.name.clone(), a.value(i).to_string()))
        .collect();
    AssignmentDoc { degree: a.degree2(), values }
}

pub fn parse_assignment(space: &TSpace, json: &str) -> Result<Assignment> {
    let doc: AssignmentDoc = serde_json::from_str(json)
        .map_err(|e| Error::Schema(format!("assignment document: {e}")))?;
    assignment_from_doc(space, &doc)
}

pub fn load_assignment(path: &Path, space: &TSpace) -> Result<Assignment> {
    let text = std::fs::read_to_string(path)?;
    parse_assignment(space, &text)
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    /// Path to the source space document, relative to the map file.
    pub source: String,
    /// Path to the target space document, relative to the map file.
    pub target: String,
    pub phi: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strata: Option<BTreeMap<String, String>>,
}

pub fn load_map_doc(path: &Path) -> Result<MapDoc> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Schema(format!("map document: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SPHERE: &str = r#"{
        "rank": 2, "half_dim": 1, "formal": true,
        "fixed_points": [
            {"name": "p1", "weights": [[1, 0]]},
            {"name": "p2", "weights": [[-1, 0]]}
        ],
        "one_skeleton": [
            {"name": "X0", "direction": [1, 0], "fixed_points": ["p1", "p2"], "half_dim": 1}
        ]
    }"#;

    #[test]
    fn space_round_trip() {
        let (space, warnings) = parse_space(SPHERE, "sphere").unwrap();
        assert_eq!(space.fixed_points.len(), 2);
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn unknown_fields_are_schema_errors() {
        let bad = SPHERE.replacen("\"rank\"", "\"wat\": 1, \"rank\"", 1);
        assert!(matches!(parse_space(&bad, "x"), Err(Error::Schema(_))));
    }

    #[test]
    fn assignment_round_trip_is_canonical() {
        let (space, _) = parse_space(SPHERE, "sphere").unwrap();
        let doc = AssignmentDoc {
            degree: 2,
            values: [("p1".to_string(), "x1".to_string()), ("p2".to_string(), "0".to_string())]
                .into_iter()
                .collect(),
        };
        let a = assignment_from_doc(&space, &doc).unwrap();
        let emitted = assignment_to_doc(&space, &a);
        assert_eq!(doc, emitted);
        let json = serde_json::to_string_pretty(&emitted).unwrap();
        let reparsed: AssignmentDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string_pretty(&reparsed).unwrap(), json);
    }

    #[test]
    fn assignment_requires_every_point() {
        let (space, _) = parse_space(SPHERE, "sphere").unwrap();
        let doc = AssignmentDoc {
            degree: 2,
            values: [("p1".to_string(), "x1".to_string())].into_iter().collect(),
        };
        assert!(matches!(assignment_from_doc(&space, &doc), Err(Error::Schema(_))));
    }

    #[test]
    fn invalid_congruence_is_reported_on_load() {
        let (space, _) = parse_space(SPHERE, "sphere").unwrap();
        let doc = AssignmentDoc {
            degree: 2,
            values: [("p1".to_string(), "x2".to_string()), ("p2".to_string(), "0".to_string())]
                .into_iter()
                .collect(),
        };
        assert!(matches!(assignment_from_doc(&space, &doc), Err(Error::Congruence(_))));
    }
}
