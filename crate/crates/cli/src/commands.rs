//! One handler per subcommand. Each echoes its parsed inputs and returns
//! a JSON payload, a text rendering and diagnostics.

use std::fmt::Write;

use curvezeta::bounds::{deuring_report, hws_bound, hws_width, serre_nq, SerreValue};
use curvezeta::curve::{
    count_points, parse_poly, plane_work, smoothness_probe, CountOptions, PlaneCurve, Smoothness,
};
use curvezeta::diagnostics::codes;
use curvezeta::survey::elliptic_survey;
use curvezeta::zeta::{
    bootstrap_basic, bootstrap_improved, bootstrap_improved_with_genus, subsequence_check,
    Bootstrap,
};
use curvezeta::{Diagnostic, Error, PrimePower, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{Map, Value};

use crate::args::{
    BootstrapArgs, Cli, Command, CountArgs, QArgs, QgArgs, SubseqArgs, SurveyArgs, VerifyArgs,
    ZetaArgs,
};
use crate::json::{self, object};
use crate::render;

/// Output of a successful run.
pub struct Body {
    pub result: Value,
    pub text: String,
    pub diagnostics: Vec<Diagnostic>,
    /// `false` turns the run into a verification failure.
    pub verified: bool,
}

pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub outcome: Result<Body>,
}

pub fn execute(cli: &Cli) -> Report {
    let opts = CountOptions::with_budget(cli.budget);
    let (command, inputs, outcome) = match &cli.command {
        Command::Bootstrap(a) => ("bootstrap", bootstrap_inputs(a), bootstrap(a)),
        Command::Zeta(a) => ("zeta", zeta_inputs(a), zeta(a)),
        Command::Count(a) => ("count", count_inputs(a, cli.budget), count(a, &opts)),
        Command::Verify(a) => ("verify", verify_inputs(a, cli.budget), verify(a, &opts)),
        Command::EcSurvey(a) => ("ec-survey", survey_inputs(a), survey(a, &opts)),
        Command::Deuring(a) => ("deuring", q_inputs(a), deuring(a)),
        Command::Serre(a) => ("serre", qg_inputs(a), serre(a)),
        Command::Hws(a) => ("hws", qg_inputs(a), hws(a)),
        Command::Subseq(a) => ("subseq", subseq_inputs(a), subseq(a)),
    };
    Report {
        command,
        inputs,
        outcome,
    }
}

const STRICT_CODES: [&str; 2] = [codes::WEIL_FAIL, codes::NONINTEGRAL_C];

fn strict_ok(strict: bool, diagnostics: &[Diagnostic]) -> bool {
    !strict
        || !diagnostics
            .iter()
            .any(|d| STRICT_CODES.contains(&d.code.as_str()))
}

fn prime_field(p: u64) -> Result<PrimePower> {
    let q = PrimePower::new(p)?;
    if q.e() != 1 {
        return Err(Error::NotPrime(p));
    }
    Ok(q)
}

fn counts_table(first: usize, values: &[BigRational]) -> String {
    let rows: Vec<Vec<String>> = values
        .iter()
        .enumerate()
        .map(|(i, v)| vec![(first + i).to_string(), v.to_string()])
        .collect();
    render::table(&["r".into(), "N_r".into()], &rows)
}

fn run_summary(run: &Bootstrap) -> Map<String, Value> {
    object([
        ("method", Value::from(run.method().to_string())),
        ("genus", Value::from(run.genus())),
        (
            "sequence",
            Value::Object(object([
                ("q", Value::from(run.q().q())),
                ("counts", json::rationals(run.values())),
            ])),
        ),
        ("numerator", json::numerator(run.numerator())),
        ("power_sums", json::rationals(run.power_sums())),
        (
            "weil",
            Value::Array(
                run.weil_verdicts()
                    .iter()
                    .map(|&b| Value::Bool(b))
                    .collect(),
            ),
        ),
        ("integral", Value::Bool(run.is_integral())),
    ])
}

fn bootstrap_inputs(a: &BootstrapArgs) -> Map<String, Value> {
    object([
        ("q", Value::from(a.q)),
        ("counts", json::ints(&a.counts)),
        ("k", Value::from(a.k)),
        (
            "method",
            Value::from(if a.basic { "basic" } else { "improved" }),
        ),
        ("genus", a.genus.map_or(Value::Null, Value::from)),
        ("strict", Value::Bool(a.strict)),
    ])
}

fn bootstrap(a: &BootstrapArgs) -> Result<Body> {
    let q = PrimePower::new(a.q)?;
    let run = if a.basic {
        let genus = a.genus.unwrap_or(a.counts.len().div_ceil(2));
        bootstrap_basic(q, &a.counts, genus, a.k)?
    } else if let Some(genus) = a.genus {
        bootstrap_improved_with_genus(q, &a.counts, genus, a.k)?
    } else {
        bootstrap_improved(q, &a.counts, a.k)?
    };
    let diagnostics = run.diagnostics();
    let mut text = format!(
        "{} bootstrap over F_{}, genus {}\nP(T) = {}\n",
        run.method(),
        a.q,
        run.genus(),
        render::polynomial(run.numerator().coeffs(), "T")
    );
    text.push_str(&counts_table(1, run.values()));
    Ok(Body {
        result: Value::Object(run_summary(&run)),
        text,
        verified: strict_ok(a.strict, &diagnostics),
        diagnostics,
    })
}

fn zeta_inputs(a: &ZetaArgs) -> Map<String, Value> {
    object([("q", Value::from(a.q)), ("counts", json::ints(&a.counts))])
}

fn zeta(a: &ZetaArgs) -> Result<Body> {
    let q = PrimePower::new(a.q)?;
    let run = bootstrap_improved(q, &a.counts, a.counts.len())?;
    let z = run.numerator();
    let coeffs: Vec<String> = z.coeffs().iter().map(|c| c.to_string()).collect();
    let text = format!(
        "P(T) = {}\nc_0..c_{}: {}\n",
        render::polynomial(z.coeffs(), "T"),
        2 * z.genus(),
        coeffs.join(", ")
    );
    Ok(Body {
        result: Value::Object(object([("numerator", json::numerator(z))])),
        text,
        diagnostics: run.diagnostics(),
        verified: true,
    })
}

fn curve_value(curve: &PlaneCurve) -> Value {
    Value::Object(object([
        ("p", Value::from(curve.p())),
        ("degree", Value::from(curve.degree())),
        ("equation", Value::from(curve.to_string())),
    ]))
}

fn count_inputs(a: &CountArgs, budget: u128) -> Map<String, Value> {
    object([
        ("p", Value::from(a.p)),
        ("curve", Value::from(a.curve.clone())),
        (
            "r",
            Value::Array(vec![Value::from(*a.r.start()), Value::from(*a.r.end())]),
        ),
        ("budget", json::uint(budget)),
    ])
}

fn count(a: &CountArgs, opts: &CountOptions) -> Result<Body> {
    prime_field(a.p)?;
    let curve = parse_poly(&a.curve, a.p)?;
    let required = plane_work(a.p, *a.r.end());
    if required > opts.budget {
        return Err(Error::BudgetExceeded {
            required,
            budget: opts.budget,
        });
    }
    let mut counts = Vec::new();
    for r in a.r.clone() {
        counts.push(count_points(&curve, r, opts)?);
    }
    let values: Vec<BigRational> = counts
        .iter()
        .map(|c| BigRational::from_integer(c.count.into()))
        .collect();
    let text = format!(
        "{curve} over F_{}\n{}",
        a.p,
        counts_table(*a.r.start() as usize, &values)
    );
    let rows = counts
        .iter()
        .map(|c| {
            Value::Object(object([
                ("r", Value::from(c.r)),
                ("count", json::uint(c.count.into())),
            ]))
        })
        .collect();
    Ok(Body {
        result: Value::Object(object([
            ("curve", curve_value(&curve)),
            ("counts", Value::Array(rows)),
        ])),
        text,
        diagnostics: Vec::new(),
        verified: true,
    })
}

fn verify_inputs(a: &VerifyArgs, budget: u128) -> Map<String, Value> {
    object([
        ("p", Value::from(a.p)),
        ("curve", Value::from(a.curve.clone())),
        ("genus", Value::from(a.genus)),
        ("k", Value::from(a.k)),
        ("check_upto", a.check_upto.map_or(Value::Null, Value::from)),
        ("budget", json::uint(budget)),
        ("strict", Value::Bool(a.strict)),
    ])
}

/// Counts `N_1..N_g` by enumeration, bootstraps to `k` and compares the
/// remaining terms with enumeration as far as allowed.
fn verify(a: &VerifyArgs, opts: &CountOptions) -> Result<Body> {
    let q = prime_field(a.p)?;
    let curve = parse_poly(&a.curve, a.p)?;
    let g = a.genus;
    if g == 0 {
        return Err(Error::InvalidArgument("genus must be at least 1".into()));
    }
    if a.k == 0 {
        return Err(Error::InvalidArgument(
            "horizon k must be at least 1".into(),
        ));
    }
    let mut diagnostics = Vec::new();

    let d = curve.degree() as usize;
    let plane_genus = (d.saturating_sub(1) * d.saturating_sub(2)) / 2;
    if plane_genus != g {
        diagnostics.push(Diagnostic::warning(
            codes::GENUS_MISMATCH,
            format!("a smooth plane curve of degree {d} has genus {plane_genus}, not {g}"),
        ));
    }
    if plane_work(a.p, 1).saturating_mul(4) <= opts.budget {
        if let Smoothness::SingularAt { point, r } = smoothness_probe(&curve, 1, opts)? {
            diagnostics.push(Diagnostic::warning(
                codes::SINGULAR_POINT,
                format!(
                    "singular point {point} over F_{}^{r}; counts need not bootstrap",
                    a.p
                ),
            ));
        }
    }

    let upto = match a.check_upto {
        Some(r) => {
            let required = plane_work(a.p, r);
            if required > opts.budget {
                return Err(Error::BudgetExceeded {
                    required,
                    budget: opts.budget,
                });
            }
            r as usize
        }
        None => {
            let mut r = a.k;
            while r > g && plane_work(a.p, r as u32) > opts.budget {
                r -= 1;
            }
            if r < a.k {
                diagnostics.push(Diagnostic::warning(
                    codes::BUDGET_LIMITED,
                    format!(
                        "enumeration stops at r = {r} within the budget; N_{}..N_{} are unchecked",
                        r + 1,
                        a.k
                    ),
                ));
            }
            r
        }
    };

    let enumerated = upto.max(g);
    let mut counts = Vec::with_capacity(enumerated);
    for r in 1..=enumerated as u32 {
        counts.push(BigInt::from(count_points(&curve, r, opts)?.count));
    }
    let run = bootstrap_improved_with_genus(q, &counts[..g], g, a.k.max(upto))?;
    diagnostics.extend(run.diagnostics());

    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let mut agree = true;
    for r in g + 1..=upto {
        let predicted = &run.values()[r - 1];
        let observed = BigRational::from_integer(counts[r - 1].clone());
        let ok = *predicted == observed;
        if !ok {
            agree = false;
            diagnostics.push(Diagnostic::error(
                codes::ORACLE_MISMATCH,
                format!("N_{r}: bootstrap gives {predicted}, enumeration gives {observed}"),
            ));
        }
        checks.push(Value::Object(object([
            ("r", Value::from(r)),
            ("bootstrap", json::rational(predicted)),
            ("enumeration", json::rational(&observed)),
            ("ok", Value::Bool(ok)),
        ])));
        rows.push(vec![
            r.to_string(),
            predicted.to_string(),
            observed.to_string(),
            if ok { "ok" } else { "MISMATCH" }.to_string(),
        ]);
    }

    let values = &run.values()[..a.k];
    let mut text = format!(
        "{curve} over F_{}, genus {g}\nenumerated N_1..N_{g}: {}\nP(T) = {}\n",
        a.p,
        counts[..g]
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", "),
        render::polynomial(run.numerator().coeffs(), "T"),
    );
    text.push_str(&counts_table(1, values));
    if rows.is_empty() {
        text.push_str("no terms beyond the genus were enumerated\n");
    } else {
        text.push('\n');
        text.push_str(&render::table(
            &[
                "r".into(),
                "bootstrap".into(),
                "enumeration".into(),
                "".into(),
            ],
            &rows,
        ));
    }
    writeln!(
        text,
        "{}",
        if agree {
            "verified"
        } else {
            "verification FAILED"
        }
    )
    .unwrap();

    let result = object([
        ("curve", curve_value(&curve)),
        ("genus", Value::from(g)),
        ("enumerated", json::ints(&counts[..g])),
        (
            "sequence",
            Value::Object(object([
                ("q", Value::from(a.p)),
                ("counts", json::rationals(values)),
            ])),
        ),
        ("numerator", json::numerator(run.numerator())),
        ("checks", Value::Array(checks)),
        ("checked_upto", Value::from(upto)),
        ("agree", Value::Bool(agree)),
    ]);
    Ok(Body {
        result: Value::Object(result),
        text,
        verified: agree && strict_ok(a.strict, &diagnostics),
        diagnostics,
    })
}

fn survey_inputs(a: &SurveyArgs) -> Map<String, Value> {
    object([("p", Value::from(a.p)), ("k", Value::from(a.k))])
}

fn survey(a: &SurveyArgs, opts: &CountOptions) -> Result<Body> {
    prime_field(a.p)?;
    if a.k == 0 {
        return Err(Error::InvalidArgument(
            "horizon k must be at least 1".into(),
        ));
    }
    let s = elliptic_survey(a.p, a.k, opts)?;
    let c = &s.classification;

    let mut text = format!(
        "Weierstrass cubics over F_{}: {} in normal form, {} nonsingular\n",
        s.p, c.total, c.nonsingular
    );
    let mut classes = Vec::new();
    for (n1, curves) in &c.groups {
        let names: Vec<String> = curves.iter().map(|e| e.to_string()).collect();
        writeln!(text, "N_1 = {n1} ({}): {}", curves.len(), names.join("; ")).unwrap();
        let members = curves
            .iter()
            .zip(names)
            .map(|(e, name)| {
                let a = e.coefficients().iter().map(|&c| Value::from(c)).collect();
                Value::Object(object([
                    ("equation", Value::from(name)),
                    ("a", Value::Array(a)),
                ]))
            })
            .collect();
        classes.push(Value::Object(object([
            ("n1", Value::from(*n1)),
            ("curves", Value::Array(members)),
        ])));
    }

    let mut header = vec!["r".to_string()];
    header.extend(s.rows.iter().map(|row| format!("N_1={}", row.n1)));
    header.extend(["max".into(), "HWS".into(), "gap".into(), "reference".into()]);
    let mut rows = Vec::new();
    for col in &s.columns {
        let i = col.r as usize - 1;
        let mut cells = vec![col.r.to_string()];
        for row in &s.rows {
            let mark = if col.maximal_rows.contains(&row.n1) {
                "*"
            } else {
                ""
            };
            cells.push(format!("{}{mark}", row.values[i]));
        }
        cells.push(col.max.to_string());
        cells.push(col.hws.to_string());
        cells.push((col.hws - col.max).to_string());
        cells.push(match col.reference {
            Some(v) if v != col.max => format!("{v}!"),
            Some(v) => v.to_string(),
            None => "-".into(),
        });
        rows.push(cells);
    }
    text.push('\n');
    text.push_str(&render::table(&header, &rows));
    text.push_str(
        "* attains the maximum over all elliptic curves; gap = HWS - max; \
         ! reference disagrees with the maximum\n",
    );

    let rows_json = s
        .rows
        .iter()
        .map(|row| {
            Value::Object(object([
                ("n1", Value::from(row.n1)),
                ("values", json::ints(&row.values)),
            ]))
        })
        .collect();
    let to_list = |v: &[u64]| Value::Array(v.iter().map(|&x| Value::from(x)).collect());
    let columns_json = s
        .columns
        .iter()
        .map(|col| {
            Value::Object(object([
                ("r", Value::from(col.r)),
                ("max", json::uint(col.max)),
                ("hws", json::uint(col.hws)),
                ("reference", col.reference.map_or(Value::Null, json::uint)),
                ("maximal_rows", to_list(&col.maximal_rows)),
                ("best_rows", to_list(&col.best_rows)),
            ]))
        })
        .collect();
    let result = object([
        ("p", Value::from(s.p)),
        ("k", Value::from(s.k)),
        ("total", Value::from(c.total)),
        ("nonsingular", Value::from(c.nonsingular)),
        ("classes", Value::Array(classes)),
        ("rows", Value::Array(rows_json)),
        ("columns", Value::Array(columns_json)),
    ]);
    Ok(Body {
        result: Value::Object(result),
        text,
        diagnostics: s.diagnostics,
        verified: true,
    })
}

fn q_inputs(a: &QArgs) -> Map<String, Value> {
    object([("q", Value::from(a.q))])
}

fn qg_inputs(a: &QgArgs) -> Map<String, Value> {
    object([("q", Value::from(a.q)), ("g", Value::from(a.g))])
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn deuring(a: &QArgs) -> Result<Body> {
    let r = deuring_report(PrimePower::new(a.q)?);
    let text = format!(
        "q = {}, m = {}\nN - q - 1: [{}]\ncardinalities: [{}]\n",
        r.q,
        r.m,
        join(&r.offsets),
        join(&r.cardinals)
    );
    let result = object([
        ("q", Value::from(r.q)),
        ("m", json::uint(r.m)),
        (
            "offsets",
            Value::Array(r.offsets.iter().map(|&t| json::sint(t)).collect()),
        ),
        (
            "cardinals",
            Value::Array(r.cardinals.iter().map(|&n| json::uint(n)).collect()),
        ),
    ]);
    Ok(Body {
        result: Value::Object(result),
        text,
        diagnostics: Vec::new(),
        verified: true,
    })
}

fn serre(a: &QgArgs) -> Result<Body> {
    let q = PrimePower::new(a.q)?;
    let value = serre_nq(q, a.g)?;
    let mut diagnostics = Vec::new();
    if value == SerreValue::Unknown {
        diagnostics.push(Diagnostic::info(
            codes::SERRE_UNKNOWN,
            format!("N_q({}) is not tabulated for q = {}", a.g, a.q),
        ));
    }
    let text = format!("N_{}({}) = {value}\n", a.q, a.g);
    let result = object([
        ("q", Value::from(a.q)),
        ("g", Value::from(a.g)),
        ("value", value.known().map_or(Value::Null, json::uint)),
        ("hws", json::uint(hws_bound(q, a.g))),
    ]);
    Ok(Body {
        result: Value::Object(result),
        text,
        diagnostics,
        verified: true,
    })
}

fn hws(a: &QgArgs) -> Result<Body> {
    let q = PrimePower::new(a.q)?;
    let m = hws_width(q);
    let bound = hws_bound(q, a.g);
    let text = format!("q + 1 + g*m = {} + 1 + {}*{m} = {bound}\n", a.q, a.g);
    let result = object([
        ("q", Value::from(a.q)),
        ("g", Value::from(a.g)),
        ("m", json::uint(m)),
        ("bound", json::uint(bound)),
    ]);
    Ok(Body {
        result: Value::Object(result),
        text,
        diagnostics: Vec::new(),
        verified: true,
    })
}

fn subseq_inputs(a: &SubseqArgs) -> Map<String, Value> {
    object([
        ("q", Value::from(a.q)),
        ("counts", json::ints(&a.counts)),
        ("s", Value::from(a.s)),
        ("k", Value::from(a.k)),
    ])
}

fn subseq(a: &SubseqArgs) -> Result<Body> {
    if a.k == 0 {
        return Err(Error::InvalidArgument(
            "horizon k must be at least 1".into(),
        ));
    }
    let q = PrimePower::new(a.q)?;
    let holds = subsequence_check(q, &a.counts, a.s, a.k)?;
    let stride = a.s as usize;
    let run = bootstrap_improved(q, &a.counts, stride * a.k)?;
    let picked: Vec<BigRational> = (1..=a.k)
        .map(|j| run.values()[stride * j - 1].clone())
        .collect();
    let qs = q.pow(a.s)?;

    let mut diagnostics = run.diagnostics();
    if !holds {
        diagnostics.push(Diagnostic::error(
            codes::SUBSEQUENCE_MISMATCH,
            format!(
                "N_{s}, N_{}, ... is not the bootstrap over F_{qs}",
                2 * a.s,
                s = a.s
            ),
        ));
    }
    let rows: Vec<Vec<String>> = picked
        .iter()
        .enumerate()
        .map(|(i, v)| {
            vec![
                (i + 1).to_string(),
                ((i + 1) * stride).to_string(),
                v.to_string(),
            ]
        })
        .collect();
    let mut text = format!("stride {} over F_{}: counts over F_{qs}\n", a.s, a.q);
    text.push_str(&render::table(
        &["j".into(), "r".into(), "N_r".into()],
        &rows,
    ));
    writeln!(
        text,
        "{}",
        if holds { "consistent" } else { "INCONSISTENT" }
    )
    .unwrap();
    let result = object([
        ("q_s", Value::from(qs.q())),
        ("values", json::rationals(&picked)),
        ("holds", Value::Bool(holds)),
    ]);
    Ok(Body {
        result: Value::Object(result),
        text,
        diagnostics,
        verified: holds,
    })
}
