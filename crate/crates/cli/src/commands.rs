use std::io::Read;

use serde::Serialize;

use fwe_core::duality::{classify, dual_distance, invariant_subspace, VerdictKind};
use fwe_core::exactnum::parse_rational;
use fwe_core::homopoly::parse_poly;
use fwe_core::momentsearch::{build, solve_for_q, MomentSearch};
use fwe_core::rhcheck::{exact_circle_certificate, rh_verdict, Certificate, RHReport};
use fwe_core::ringlab::{
    bound_survey, extremal, okuda_star, prop21_check, rh_sweep, ExtremalResult, Prop21Verdict, RingName,
    RingSpec,
};
use fwe_core::zeta::{product_relation, self_inversive_check, zeta_polynomial, SelfInversive, ZetaPoly};
use fwe_core::{HomoPoly, Poly, QScalar, Rational, SurdPoly};

use crate::config::RunConfig;
use crate::render::{grid, list, pairs, yes_no};
use crate::Failure;

/// A finished command: the JSON payload and its table rendering.
pub struct Report {
    pub json: String,
    pub table: String,
}

impl Report {
    fn new<T: Serialize>(payload: &T, table: String) -> Self {
        Self {
            json: serde_json::to_string_pretty(payload).expect("payload serializes"),
            table,
        }
    }
}

/// Where polynomial input comes from: `--poly` text, else JSON on stdin.
pub struct PolySource<'a> {
    pub text: Option<&'a str>,
    pub stdin: &'a mut dyn Read,
}

impl PolySource<'_> {
    fn read<S>(self, cfg: &RunConfig) -> Result<HomoPoly<S>, Failure>
    where
        S: fwe_core::exactnum::Scalar + std::str::FromStr,
    {
        let w = match self.text {
            Some(t) => parse_poly::<S>(t)?,
            None => {
                let mut buf = String::new();
                self.stdin
                    .read_to_string(&mut buf)
                    .map_err(|e| fwe_core::Error::Json(e.to_string()))?;
                if buf.trim().is_empty() {
                    return Err(Failure::Usage("give --poly or a JSON polynomial on stdin".into()));
                }
                HomoPoly::<S>::from_json_str(&buf)?
            }
        };
        cfg.check_degree(w.degree())?;
        Ok(w)
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

fn ring(name: &str) -> Result<RingSpec, Failure> {
    Ok(RingSpec::new(name.parse::<RingName>()?)?)
}

#[derive(Serialize)]
struct ClassifyOut {
    q: String,
    kind: VerdictKind,
    transformed: String,
    dual_distance: Option<usize>,
}

pub fn classify_cmd(cfg: &RunConfig, src: PolySource) -> Result<Report, Failure> {
    let q = cfg.require_q()?;
    let w: SurdPoly = src.read(cfg)?;
    let v = classify(&w, q)?;
    // a zero x^n coefficient in the image leaves the dual distance undefined
    let dd = dual_distance(&w, q).ok().flatten();
    let out = ClassifyOut {
        q: q.to_string(),
        kind: v.kind,
        transformed: v.transformed.to_string(),
        dual_distance: dd,
    };
    let table = pairs(&[
        ("q", out.q.clone()),
        ("kind", format!("{:?}", out.kind)),
        ("transformed", out.transformed.clone()),
        ("dual distance", dd.map_or("-".into(), |d| d.to_string())),
    ]);
    Ok(Report::new(&out, table))
}

#[derive(Serialize)]
struct SubspaceOut {
    q: String,
    degree: usize,
    divisor: usize,
    sign: i8,
    dimension: usize,
    basis: Vec<String>,
}

pub fn invariant_space_cmd(
    cfg: &RunConfig,
    degree: usize,
    divisor: usize,
    anti: bool,
) -> Result<Report, Failure> {
    let q = cfg.require_q()?;
    cfg.check_degree(degree)?;
    let sign = if anti { -1 } else { 1 };
    let basis = invariant_subspace::<QScalar>(degree, divisor, q, sign)?;
    let out = SubspaceOut {
        q: q.to_string(),
        degree,
        divisor,
        sign,
        dimension: basis.len(),
        basis: basis.iter().map(ToString::to_string).collect(),
    };
    let mut table = pairs(&[
        ("q", out.q.clone()),
        ("degree", degree.to_string()),
        ("divisor", divisor.to_string()),
        ("sign", sign.to_string()),
        ("dimension", out.dimension.to_string()),
    ]);
    for b in &out.basis {
        table += &format!("  {b}\n");
    }
    Ok(Report::new(&out, table))
}

#[derive(Serialize)]
struct ZetaOut {
    q: String,
    n: usize,
    d: usize,
    d_perp: usize,
    degree: usize,
    text: String,
    /// Index is the power of T.
    coefficients: Vec<String>,
    self_inversive: SelfInversive,
}

fn zeta_out(z: &ZetaPoly) -> Result<ZetaOut, Failure> {
    Ok(ZetaOut {
        q: z.q.to_string(),
        n: z.n,
        d: z.d,
        d_perp: z.d_perp,
        degree: z.degree(),
        text: z.to_string(),
        coefficients: strings(z.coeffs()),
        self_inversive: self_inversive_check(z)?,
    })
}

pub fn zeta_cmd(cfg: &RunConfig, src: PolySource) -> Result<Report, Failure> {
    let q = cfg.require_q()?;
    let w: Poly = src.read(cfg)?;
    let z = zeta_polynomial(&w, q)?;
    let out = zeta_out(&z)?;
    let table = pairs(&[
        ("P(T)", out.text.clone()),
        ("coefficients", list(&out.coefficients)),
        ("degree", out.degree.to_string()),
        ("n, d, d_perp", format!("{}, {}, {}", out.n, out.d, out.d_perp)),
        ("self-inversive", format!("{:?}", out.self_inversive)),
    ]);
    Ok(Report::new(&out, table))
}

#[derive(Serialize)]
struct RhOut {
    q: String,
    zeta: String,
    #[serde(flatten)]
    report: RHReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<Certificate>,
}

pub fn rh_cmd(
    cfg: &RunConfig,
    src: PolySource,
    zeta_coeffs: Option<&str>,
    exact: bool,
) -> Result<Report, Failure> {
    let q = cfg.require_q()?;
    let z = match zeta_coeffs {
        Some(list) => {
            let coeffs = list
                .split(',')
                .map(|c| parse_rational(c.trim()))
                .collect::<fwe_core::Result<Vec<_>>>()?;
            cfg.check_degree(coeffs.len().saturating_sub(1))?;
            ZetaPoly::from_coeffs(coeffs, q.clone())
        }
        None => zeta_polynomial(&src.read::<Rational>(cfg)?, q)?,
    };
    let report = rh_verdict(&z, &cfg.tolerance, cfg.precision_bits)?;
    let out = RhOut {
        q: q.to_string(),
        zeta: z.to_string(),
        report,
        exact: exact.then(|| exact_circle_certificate(&z)),
    };
    let mut rows = vec![
        ("P(T)", out.zeta.clone()),
        ("verdict", format!("{:?}", out.report.verdict)),
        (
            "max deviation",
            out.report
                .max_radial_deviation
                .map_or("-".into(), |d| format!("{d:e}")),
        ),
        ("tolerance", format!("{:e}", out.report.tolerance)),
        ("precision", format!("{} bits", out.report.precision_bits)),
    ];
    if let Some(c) = out.exact {
        rows.push(("exact", format!("{c:?}")));
    }
    let mut table = pairs(&rows);
    let roots: Vec<Vec<String>> = out
        .report
        .roots
        .iter()
        .map(|r| vec![short(&r.re), short(&r.im)])
        .collect();
    if !roots.is_empty() {
        table += "\n";
        table += &grid(&["re", "im"], &roots);
    }
    Ok(Report::new(&out, table))
}

/// Root digits trimmed for the table; JSON keeps them all.
fn short(s: &str) -> String {
    const DIGITS: usize = 24;
    match s.find('.') {
        Some(dot) if s.len() > dot + 1 + DIGITS => s[..dot + 1 + DIGITS].to_string(),
        _ => s.to_string(),
    }
}

#[derive(Serialize)]
struct MomentOut {
    factorization: Option<String>,
    #[serde(flatten)]
    search: MomentSearch,
}

fn factor_text(search: &MomentSearch) -> Option<String> {
    let (linear, rest) = search.factorization()?;
    let mut parts = Vec::new();
    if rest.degree() != Some(0) || rest.coeff(0) != 1.into() {
        parts.push(format!("({rest})"));
    }
    for (f, m) in linear {
        match m {
            0 => {}
            1 => parts.push(format!("({f})")),
            _ => parts.push(format!("({f})^{m}")),
        }
    }
    Some(parts.join(""))
}

pub fn moment_search_cmd(cfg: &RunConfig, degree: usize, divisor: usize) -> Result<Report, Failure> {
    cfg.check_degree(degree)?;
    let search = solve_for_q(&build(degree, divisor)?);
    let out = MomentOut {
        factorization: factor_text(&search),
        search,
    };
    let s = &out.search;
    let mut table = pairs(&[
        ("degree", s.n.to_string()),
        ("divisor", s.c.to_string()),
        ("equations", s.equations.to_string()),
        ("unknowns", s.unknowns.to_string()),
        ("consistency", s.consistency.len().to_string()),
        ("gcd", s.gcd.as_ref().map_or("-".into(), ToString::to_string)),
        ("factorization", out.factorization.clone().unwrap_or_else(|| "-".into())),
        ("rational roots", list(&s.rational_roots)),
    ]);
    if !s.solutions.is_empty() {
        let rows: Vec<Vec<String>> = s
            .solutions
            .iter()
            .map(|sol| {
                vec![
                    sol.q.to_string(),
                    sol.dimension.map_or("inconsistent".into(), |d| d.to_string()),
                    sol.coefficients.as_ref().map_or("-".into(), |a| list(a)),
                ]
            })
            .collect();
        table += "\n";
        table += &grid(&["q", "dim", "A"], &rows);
    }
    if let Some(f) = &s.family {
        table += &format!("\nfamily for generic q: {} free parameters\n", f.free_parameters);
        for (i, a) in f.coefficients.iter().enumerate() {
            table += &format!("  A_{} = {a}\n", i * s.c);
        }
    }
    Ok(Report::new(&out, table))
}

#[derive(Serialize)]
struct ExtremalOut {
    ring: String,
    q: String,
    n: usize,
    w: String,
    d: usize,
    bound: i64,
    meets_bound: bool,
    unique: bool,
    conjectural: bool,
}

impl ExtremalOut {
    fn new(spec: &RingSpec, n: usize, e: &ExtremalResult) -> Self {
        Self {
            ring: spec.name.to_string(),
            q: spec.q.to_string(),
            n,
            w: e.w.to_string(),
            d: e.d,
            bound: e.bound,
            meets_bound: e.meets_bound,
            unique: e.unique,
            conjectural: e.conjectural,
        }
    }
}

pub fn extremal_cmd(cfg: &RunConfig, name: &str, n: usize) -> Result<Report, Failure> {
    cfg.check_degree(n)?;
    let spec = ring(name)?;
    let e = extremal(&spec, n, spec.target_sign)?;
    let out = ExtremalOut::new(&spec, n, &e);
    let table = pairs(&[
        ("ring", out.ring.clone()),
        ("q", out.q.clone()),
        ("degree", n.to_string()),
        ("W", out.w.clone()),
        ("d", out.d.to_string()),
        ("bound", out.bound.to_string()),
        ("meets bound", yes_no(out.meets_bound)),
        ("unique", yes_no(out.unique)),
        ("conjectural bound", yes_no(out.conjectural)),
    ]);
    Ok(Report::new(&out, table))
}

pub fn survey_cmd(cfg: &RunConfig, name: &str, n_max: usize, rh: bool) -> Result<Report, Failure> {
    cfg.check_degree(n_max)?;
    let spec = ring(name)?;
    if rh {
        let rows = rh_sweep(&spec, n_max, &cfg.tolerance, cfg.precision_bits)?;
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.d.to_string(),
                    r.zeta_degree.to_string(),
                    format!("{:?}", r.verdict),
                    r.max_radial_deviation.map_or("-".into(), |d| format!("{d:.3e}")),
                ]
            })
            .collect();
        let table = grid(&["n", "d", "deg P", "verdict", "max deviation"], &cells);
        return Ok(Report::new(&rows, table));
    }
    let rows = bound_survey(&spec, n_max)?;
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.d.to_string(),
                r.bound.to_string(),
                yes_no(r.within_bound),
                yes_no(r.meets_bound),
                yes_no(r.unique),
            ]
        })
        .collect();
    let table = grid(&["n", "d", "bound", "within", "meets", "unique"], &cells);
    Ok(Report::new(&rows, table))
}

#[derive(Serialize)]
struct OkudaOut {
    ring: String,
    n: usize,
    w: String,
    star: String,
    /// Extremal element of degree n − 4, for comparison.
    extremal_below: String,
    equals_extremal_below: bool,
    product_relation: bool,
}

pub fn okuda_cmd(cfg: &RunConfig, name: &str, n: usize) -> Result<Report, Failure> {
    cfg.check_degree(n)?;
    let spec = ring(name)?;
    let e = extremal(&spec, n, spec.target_sign)?;
    let star = okuda_star(&e.w)?;
    let below = extremal(&spec, n.saturating_sub(4), spec.target_sign)?;
    let related = product_relation(
        &zeta_polynomial(&e.w, &spec.q)?,
        &zeta_polynomial(&star, &spec.q)?,
    );
    let out = OkudaOut {
        ring: spec.name.to_string(),
        n,
        w: e.w.to_string(),
        star: star.to_string(),
        extremal_below: below.w.to_string(),
        equals_extremal_below: star == below.w,
        product_relation: related,
    };
    let table = pairs(&[
        ("W", out.w.clone()),
        ("W*", out.star.clone()),
        ("extremal n-4", out.extremal_below.clone()),
        ("W* is extremal", yes_no(out.equals_extremal_below)),
        ("P* = (3T^2-3T+1)P", yes_no(out.product_relation)),
    ]);
    Ok(Report::new(&out, table))
}

#[derive(Serialize)]
struct Prop21Out {
    ring: String,
    n: usize,
    w: String,
    d: usize,
    verdict: Prop21Verdict,
}

pub fn prop21_cmd(cfg: &RunConfig, name: &str, n: usize) -> Result<Report, Failure> {
    cfg.check_degree(n)?;
    let spec = ring(name)?;
    let e = extremal(&spec, n, spec.target_sign)?;
    let out = Prop21Out {
        ring: spec.name.to_string(),
        n,
        w: e.w.to_string(),
        d: e.d,
        verdict: prop21_check(&e.w)?,
    };
    let table = pairs(&[
        ("W", out.w.clone()),
        ("d", out.d.to_string()),
        ("verdict", format!("{:?}", out.verdict)),
    ]);
    Ok(Report::new(&out, table))
}

#[derive(Serialize)]
struct GeneratorOut {
    name: &'static str,
    degree: usize,
    poly: String,
    character: i8,
}

#[derive(Serialize)]
struct RingOut {
    name: String,
    q: String,
    divisor: usize,
    target_sign: i8,
    conjectural: bool,
    generators: Vec<GeneratorOut>,
}

fn ring_out(spec: &RingSpec) -> RingOut {
    RingOut {
        name: spec.name.to_string(),
        q: spec.q.to_string(),
        divisor: spec.c,
        target_sign: spec.target_sign,
        conjectural: spec.name.conjectural(),
        generators: spec
            .gens
            .iter()
            .map(|g| GeneratorOut {
                name: g.name,
                degree: g.degree(),
                poly: g.poly.to_string(),
                character: g.character,
            })
            .collect(),
    }
}

pub fn ring_list_cmd() -> Result<Report, Failure> {
    let rings: Vec<RingOut> = RingSpec::all()?.iter().map(ring_out).collect();
    let cells: Vec<Vec<String>> = rings
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                r.q.clone(),
                r.divisor.to_string(),
                r.generators.iter().map(|g| g.name).collect::<Vec<_>>().join(", "),
                r.target_sign.to_string(),
                yes_no(r.conjectural),
            ]
        })
        .collect();
    let table = grid(&["ring", "q", "c", "generators", "target", "conjectural"], &cells);
    Ok(Report::new(&rings, table))
}

pub fn ring_gen_cmd(name: &str) -> Result<Report, Failure> {
    let out = ring_out(&ring(name)?);
    let cells: Vec<Vec<String>> = out
        .generators
        .iter()
        .map(|g| vec![g.name.to_string(), g.degree.to_string(), g.character.to_string(), g.poly.clone()])
        .collect();
    let table = format!(
        "{} (q = {}, c = {})\n{}",
        out.name,
        out.q,
        out.divisor,
        grid(&["name", "degree", "character", "polynomial"], &cells)
    );
    Ok(Report::new(&out, table))
}
