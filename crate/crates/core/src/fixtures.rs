//! In-memory copies of the shipped example spaces, for unit tests.

use crate::linform::LinForm;
use crate::space::{FixedPoint, HigherStratum, SkeletonComponent, TSpace};

fn lf(c: Vec<i64>) -> LinForm {
    LinForm::new(c).unwrap()
}

fn pt(name: &str, weights: Vec<Vec<i64>>) -> FixedPoint {
    FixedPoint { name: name.into(), weights: weights.into_iter().map(lf).collect() }
}

/// Rotation sphere: two fixed points, weights `alpha` and `-alpha`.
pub fn cp1() -> TSpace {
    let s = TSpace {
        name: "ex_cp1".into(),
        rank: 2,
        half_dim: 1,
        fixed_points: vec![pt("p1", vec![vec![1, 0]]), pt("p2", vec![vec![-1, 0]])],
        one_skeleton: vec![SkeletonComponent {
            name: "X0".into(),
            direction: lf(vec![1, 0]),
            points: vec![0, 1],
            half_dim: 1,
        }],
        higher_strata: vec![],
        xi: None,
        formal: true,
    };
    s.validate().unwrap();
    s
}

/// Product of two spheres rotated with the same character; one degree-one
/// stratum closure equal to the whole space.
pub fn cp1sq() -> TSpace {
    let s = TSpace {
        name: "ex_cp1sq".into(),
        rank: 2,
        half_dim: 2,
        fixed_points: vec![
            pt("p1", vec![vec![-1, 0], vec![-1, 0]]),
            pt("p2", vec![vec![-1, 0], vec![1, 0]]),
            pt("p3", vec![vec![1, 0], vec![-1, 0]]),
            pt("p4", vec![vec![1, 0], vec![1, 0]]),
        ],
        one_skeleton: vec![SkeletonComponent {
            name: "X0".into(),
            direction: lf(vec![1, 0]),
            points: vec![0, 1, 2, 3],
            half_dim: 2,
        }],
        higher_strata: vec![],
        xi: None,
        formal: true,
    };
    s.validate().unwrap();
    s
}

/// Product of three spheres rotated with the same character.
pub fn cp1cube() -> TSpace {
    let s = TSpace {
        name: "ex_cp1cube".into(),
        rank: 2,
        half_dim: 3,
        fixed_points: vec![
            pt("p1", vec![vec![1, 0], vec![1, 0], vec![1, 0]]),
            pt("p2", vec![vec![1, 0], vec![-1, 0], vec![-1, 0]]),
            pt("p3", vec![vec![1, 0], vec![-1, 0], vec![1, 0]]),
            pt("p4", vec![vec![1, 0], vec![1, 0], vec![-1, 0]]),
            pt("p5", vec![vec![-1, 0], vec![1, 0], vec![1, 0]]),
            pt("p6", vec![vec![-1, 0], vec![-1, 0], vec![1, 0]]),
            pt("p7", vec![vec![-1, 0], vec![1, 0], vec![-1, 0]]),
            pt("p8", vec![vec![-1, 0], vec![-1, 0], vec![-1, 0]]),
        ],
        one_skeleton: vec![SkeletonComponent {
            name: "X0".into(),
            direction: lf(vec![1, 0]),
            points: vec![0, 1, 2, 3, 4, 5, 6, 7],
            half_dim: 3,
        }],
        higher_strata: vec![],
        xi: None,
        formal: true,
    };
    s.validate().unwrap();
    s
}

/// Product of two spheres with independent characters: a GKM square.
pub fn cp1xcp1() -> TSpace {
    let s = TSpace {
        name: "ex_cp1xcp1_gkm".into(),
        rank: 2,
        half_dim: 2,
        fixed_points: vec![
            pt("q1", vec![vec![1, 0], vec![0, 1]]),
            pt("q2", vec![vec![-1, 0], vec![0, 1]]),
            pt("q3", vec![vec![1, 0], vec![0, -1]]),
            pt("q4", vec![vec![-1, 0], vec![0, -1]]),
        ],
        one_skeleton: vec![
            SkeletonComponent {
                name: "E12".into(),
                direction: lf(vec![1, 0]),
                points: vec![0, 1],
                half_dim: 1,
            },
            SkeletonComponent {
                name: "E34".into(),
                direction: lf(vec![1, 0]),
                points: vec![2, 3],
                half_dim: 1,
            },
            SkeletonComponent {
                name: "E13".into(),
                direction: lf(vec![0, 1]),
                points: vec![0, 2],
                half_dim: 1,
            },
            SkeletonComponent {
                name: "E24".into(),
                direction: lf(vec![0, 1]),
                points: vec![1, 3],
                half_dim: 1,
            },
        ],
        higher_strata: vec![],
        xi: None,
        formal: true,
    };
    s.validate().unwrap();
    s
}

/// Projective plane under a circle with rotation numbers 1 and 2: the minimal
/// Hamiltonian case with three fixed points of indices 0, 1, 2.
pub fn cp2_s1() -> TSpace {
    let s = TSpace {
        name: "ex_cp2_s1".into(),
        rank: 1,
        half_dim: 2,
        fixed_points: vec![
            pt("p0", vec![vec![1], vec![2]]),
            pt("p1", vec![vec![-1], vec![1]]),
            pt("p2", vec![vec![-2], vec![-1]]),
        ],
        one_skeleton: vec![SkeletonComponent {
            name: "X0".into(),
            direction: lf(vec![1]),
            points: vec![0, 1, 2],
            half_dim: 2,
        }],
        higher_strata: vec![],
        xi: Some(vec![1]),
        formal: true,
    };
    s.validate().unwrap();
    s
}

/// GKM square plus a redundant dense stratum with a point stabilizer; useful
/// for exercising higher-stratum code paths.
pub fn cp1xcp1_with_dense_stratum() -> TSpace {
    let mut s = cp1xcp1();
    s.higher_strata.push(HigherStratum {
        name: "D".into(),
        stabilizer: crate::subtorus::Subtorus::from_annihilator(
            2,
            &[lf(vec![1, 0]), lf(vec![0, 1])],
        )
        .unwrap(),
        points: vec![0, 1, 2, 3],
    });
    s.validate().unwrap();
    s
}
