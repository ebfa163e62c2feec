use super::count::CountOptions;
use super::parse::parse_poly;
use super::plane::PlaneCurve;
use super::weierstrass::classify_cubics;

/// A smooth plane curve with known genus, used as reference data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusCurve {
    pub name: String,
    pub p: u64,
    pub equation: String,
    pub genus: usize,
}

impl CorpusCurve {
    fn new(name: &str, p: u64, equation: &str, genus: usize) -> Self {
        CorpusCurve {
            name: name.into(),
            p,
            equation: equation.into(),
            genus,
        }
    }

    pub fn curve(&self) -> PlaneCurve {
        parse_poly(&self.equation, self.p).expect("corpus equations parse")
    }
}

/// Klein quartics, Fermat curves, a cubic over `F_7` and all sixteen
/// nonsingular normal-form cubics over `F_2`.
pub fn corpus() -> Vec<CorpusCurve> {
    let mut out = vec![
        CorpusCurve::new("klein-f2", 2, "x^3*y + y^3*z + z^3*x", 3),
        CorpusCurve::new("klein-f3", 3, "x^3*y + y^3*z + z^3*x", 3),
        CorpusCurve::new("klein-f5", 5, "x^3*y + y^3*z + z^3*x", 3),
        CorpusCurve::new("fermat-quartic-f3", 3, "x^4 + y^4 + z^4", 3),
        CorpusCurve::new("fermat-cubic-f2", 2, "x^3 + y^3 + z^3", 1),
        CorpusCurve::new("fermat-cubic-f5", 5, "x^3 + y^3 + z^3", 1),
        CorpusCurve::new("cubic-f7", 7, "y^2*z - x^3 - 3*z^3", 1),
    ];
    let survey = classify_cubics(2, &CountOptions::default()).expect("32 cubics fit any budget");
    for (n1, group) in &survey.groups {
        for (i, e) in group.iter().enumerate() {
            let curve = e.to_plane_curve();
            out.push(CorpusCurve {
                name: format!("weierstrass-f2-n{n1}-{i}"),
                p: 2,
                equation: curve.to_string(),
                genus: 1,
            });
        }
    }
    out
}
