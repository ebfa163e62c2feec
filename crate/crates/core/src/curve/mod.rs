//! Plane curves over prime fields and brute-force point counting.

mod corpus;
mod count;
mod parse;
mod plane;
mod weierstrass;

pub use corpus::{corpus, CorpusCurve};
pub use count::{
    count_points, plane_work, smoothness_probe, CountOptions, PointCount, PointCounter,
    ProjectivePoint, Smoothness, DEFAULT_BUDGET,
};
pub use parse::parse_poly;
pub use plane::{CurveRecord, Monomial, PlaneCurve, TermRecord};
pub use weierstrass::{
    classify_cubics, weierstrass_count, weierstrass_discriminant, CubicSurvey, WeierstrassCubic,
};
