//! End-to-end acceptance run. One line per criterion; exits non-zero if
//! any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fwe_core::duality::{classify, invariant_subspace, is_conjugated_invariant, macwilliams, VerdictKind};
use fwe_core::exactnum::{int, rat};
use fwe_core::momentsearch::{build, check_membership, solve_for_q};
use fwe_core::rhcheck::{default_tolerance, rh_verdict, RHVerdict};
use fwe_core::ringlab::{
    bound_survey, extremal, okuda_star, prop21_check, rh_sweep, Prop21Verdict, RingName, RingSpec,
};
use fwe_core::zeta::{product_relation, verify_zeta, zeta_polynomial, ZetaPoly};
use fwe_core::{Error, Poly, QScalar, Rational};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fail(e: Error) -> String {
    format!("{}: {}", e.module(), e)
}

/// `(i, num, den)` means `num/den · x^(n-i) y^i`.
fn poly(n: usize, terms: &[(usize, i64, i64)]) -> Poly {
    Poly::from_terms(n, terms.iter().map(|&(i, a, b)| (i, rat(a, b)))).unwrap()
}

/// The generators as printed, entered term by term.
fn printed_generators() -> BTreeMap<&'static str, Poly> {
    BTreeMap::from([
        ("W22", poly(2, &[(0, 1, 1), (2, 1, 1)])),
        ("phi4", poly(4, &[(0, 1, 1), (2, -6, 1), (4, 1, 1)])),
        ("W_H8", poly(8, &[(0, 1, 1), (4, 14, 1), (8, 1, 1)])),
        ("W12", poly(12, &[(0, 1, 1), (4, -33, 1), (8, -33, 1), (12, 1, 1)])),
        ("W4", poly(4, &[(0, 1, 1), (3, 8, 1)])),
        ("psi6", poly(6, &[(0, 1, 1), (3, -20, 1), (6, -8, 1)])),
        ("W24", poly(2, &[(0, 1, 1), (2, 3, 1)])),
        ("phi3", poly(3, &[(0, 1, 1), (2, -9, 1)])),
        ("eta6", poly(6, &[(0, 1, 1), (3, 5, 2), (6, -1, 8)])),
        ("eta12", poly(12, &[(0, 1, 1), (3, -11, 1), (9, -11, 8), (12, -1, 64)])),
        (
            "eta24",
            poly(
                24,
                &[
                    (0, 1, 1),
                    (6, 253, 4),
                    (9, 1265, 32),
                    (12, 7659, 256),
                    (15, -1265, 256),
                    (18, 253, 256),
                    (24, 1, 4096),
                ],
            ),
        ),
    ])
}

fn kind(w: &Poly, q: &Rational) -> Result<VerdictKind, Error> {
    let lifted = w.map(|c| QScalar::from(c.clone()));
    Ok(classify(&lifted, q)?.kind)
}

fn ring(name: RingName) -> RingSpec {
    RingSpec::new(name).expect("ring constructs")
}

/// Every zeta polynomial produced during the run, for the round-trip check.
#[derive(Default)]
struct Produced(Vec<(Poly, Rational, ZetaPoly)>);

impl Produced {
    fn zeta(&mut self, w: &Poly, q: &Rational) -> Result<ZetaPoly, Error> {
        let z = zeta_polynomial(w, q)?;
        self.0.push((w.clone(), q.clone(), z.clone()));
        Ok(z)
    }
}

fn criterion_1() -> Outcome {
    let printed = printed_generators();
    let mut seen = 0;
    for spec in RingSpec::all().map_err(fail)? {
        for g in &spec.gens {
            let want = printed.get(g.name).ok_or(format!("unexpected generator {}", g.name))?;
            ensure!(&g.poly == want, "{} differs: {}", g.name, g.poly);
            seen += 1;
        }
    }
    ensure!(seen == 12, "expected 12 ring slots, saw {seen}");
    let g = &printed;
    ensure!(kind(&g["W12"], &int(2)).map_err(fail)? == VerdictKind::AntiInvariant, "W12 at q = 2");
    ensure!(kind(&g["eta6"], &rat(3, 2)).map_err(fail)? == VerdictKind::Invariant, "eta6 at q = 3/2");
    ensure!(kind(&g["eta24"], &rat(3, 2)).map_err(fail)? == VerdictKind::Invariant, "eta24 at q = 3/2");
    ensure!(
        is_conjugated_invariant(&g["eta12"], &rat(3, 2)).map_err(fail)?,
        "eta12 not fixed by the conjugated transform"
    );
    Ok(format!("{} generators exact; W12, eta6, eta24, eta12 characters confirmed", printed.len()))
}

/// Integer polynomial product, ascending coefficients.
fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn criterion_2(log: &mut Produced) -> Outcome {
    let g = printed_generators();
    let q = rat(3, 2);
    let p6 = log.zeta(&g["eta6"], &q).map_err(fail)?;
    let want6: Vec<Rational> = [2, 3, 3].iter().map(|&c| rat(c, 8)).collect();
    ensure!(p6.coeffs() == want6.as_slice(), "P6 = {p6}");

    let p12 = log.zeta(&g["eta12"], &q).map_err(fail)?;
    let num = convolve(&[-2, 0, 3], &[8, 12, 24, 26, 36, 27, 27]);
    let want12: Vec<Rational> = num.iter().map(|&c| rat(c, 160)).collect();
    ensure!(p12.coeffs() == want12.as_slice(), "P12 = {p12}");

    let p24 = log.zeta(&g["eta24"], &q).map_err(fail)?;
    ensure!(p24.degree() == 14, "deg P24 = {}", p24.degree());
    Ok(format!("P6 = {p6}, P12 exact, deg P24 = 14"))
}

fn criterion_3() -> Outcome {
    let out = solve_for_q(&build(6, 3).map_err(fail)?);
    let g = out.gcd.clone().ok_or("no consistency polynomial")?;
    // 2q^2 - 5q + 3 = (q - 1)(2q - 3) has simple roots
    ensure!(g.eval(&int(1)).is_zero() && g.eval(&rat(3, 2)).is_zero(), "gcd {g} misses a root");
    let sols = out.unique_solutions();
    let want = vec![(rat(3, 2), vec![int(1), rat(5, 2), rat(-1, 8)])];
    ensure!(sols == want, "solutions {sols:?}");
    Ok(format!("gcd {g}; q = 3/2, A = (1, 5/2, -1/8)"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let q = rat(3, 2);
    let eta6 = &printed_generators()["eta6"];
    let expected = [(8, 0), (10, 0), (12, 1), (14, 0), (16, 0), (18, 1), (20, 0), (22, 0), (24, 2)];
    let mut dims = Vec::new();
    for (n, dim) in expected {
        let basis = invariant_subspace::<Rational>(n, 3, &q, 1).map_err(fail)?;
        ensure!(basis.len() == dim, "n = {n}: dimension {}", basis.len());
        if dim == 1 {
            let power = eta6.pow((n / 6) as u32);
            ensure!(basis[0] == power, "n = {n}: basis is not eta6^{}", n / 6);
        }
        dims.push(format!("{n}:{dim}"));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("dimensions {} in {:.1?}", dims.join(" "), elapsed))
}

fn criterion_5() -> Outcome {
    let mut total = 0;
    let mut meets = 0;
    for name in RingName::proven() {
        let rows = bound_survey(&ring(name), 72).map_err(fail)?;
        for r in &rows {
            ensure!(r.within_bound, "{name} n = {}: d = {} > bound {}", r.n, r.d, r.bound);
            ensure!(r.meets_bound == (r.d as i64 == r.bound), "{name} n = {}: meets flag", r.n);
        }
        total += rows.len();
        meets += rows.iter().filter(|r| r.meets_bound).count();
    }
    let d2 = extremal(&ring(RingName::TypeII), 12, -1).map_err(fail)?.d;
    let d3 = extremal(&ring(RingName::TypeIII), 18, -1).map_err(fail)?.d;
    ensure!(d2 == 4, "Type II degree 12: d = {d2}");
    ensure!(d3 == 6, "Type III degree 18: d = {d3}");
    Ok(format!("{total} degrees within bound, {meets} meet it; II@12 d = 4, III@18 d = 6"))
}

fn criterion_6(log: &mut Produced) -> Outcome {
    let spec = ring(RingName::TypeIII);
    for n in [18, 30] {
        let w = extremal(&spec, n, -1).map_err(fail)?.w;
        let star = okuda_star(&w).map_err(fail)?;
        let below = extremal(&spec, n - 4, -1).map_err(fail)?.w;
        ensure!(star == below, "n = {n}: W* is not the extremal element of degree {}", n - 4);
        let p = log.zeta(&w, &spec.q).map_err(fail)?;
        let pstar = log.zeta(&star, &spec.q).map_err(fail)?;
        ensure!(product_relation(&p, &pstar), "n = {n}: P* != (3T^2-3T+1)P");
    }
    Ok("n = 18, 30: W* extremal at n - 4 and P* = (3T^2-3T+1)P".into())
}

fn criterion_7() -> Outcome {
    let spec = ring(RingName::TypeIII);
    for n in [18, 30] {
        let w = extremal(&spec, n, -1).map_err(fail)?.w;
        let v = prop21_check(&w).map_err(fail)?;
        ensure!(v == Prop21Verdict::DividesWithPsi6, "n = {n}: {v:?}");
    }
    Ok("n = 18, 30: DividesWithPsi6".into())
}

fn criterion_8(log: &mut Produced) -> Outcome {
    let tol = default_tolerance();
    let q = rat(3, 2);
    let p6 = log.zeta(&printed_generators()["eta6"], &q).map_err(fail)?;
    let report = rh_verdict(&p6, &tol, 256).map_err(fail)?;
    ensure!(report.verdict == RHVerdict::Holds, "P6: {:?}", report.verdict);
    let dev = report.max_radial_deviation.ok_or("P6: no deviation")?;
    ensure!(dev < 1e-30, "P6 deviation {dev:e}");

    // (T - 1)(T - 1/q)
    let inv = Rational::one() / q.clone();
    let off = ZetaPoly::from_coeffs(vec![inv.clone(), -(Rational::one() + inv), int(1)], q.clone());
    let v = rh_verdict(&off, &tol, 256).map_err(fail)?.verdict;
    ensure!(v == RHVerdict::Fails, "off-circle polynomial: {v:?}");

    let start = Instant::now();
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    let mut rows = 0;
    for name in [RingName::R32, RingName::R32minus] {
        for r in rh_sweep(&ring(name), 48, &tol, 256).map_err(fail)? {
            *tally.entry(format!("{:?}", r.verdict)).or_default() += 1;
            rows += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "sweep took {elapsed:?}");
    let counts: Vec<String> = tally.iter().map(|(k, v)| format!("{k} {v}")).collect();
    Ok(format!(
        "P6 deviation {dev:.1e}; off-circle Fails; sweep {rows} rows ({}) in {elapsed:.1?}",
        counts.join(", ")
    ))
}

/// Monic random combination of a graded basis, if the x^n coefficient
/// survives.
fn random_element(rng: &mut ChaCha8Rng, basis: &[Poly]) -> Option<Poly> {
    let mut w = Poly::zero(basis[0].degree());
    for b in basis {
        let c = rat(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        w = w.add(&b.scale(&c));
    }
    let lead = w.coeff(0);
    (!lead.is_zero()).then(|| w.scale(&(Rational::one() / lead)))
}

fn agrees(w: &Poly, q: &Rational) -> Result<bool, String> {
    let member = check_membership(w, q).map_err(fail)?;
    Ok(member == (kind(w, q).map_err(fail)? == VerdictKind::Invariant))
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    let mut members = 0;
    for spec in RingSpec::all().map_err(fail)? {
        for g in &spec.gens {
            if g.degree() % 2 == 1 {
                // outside the even-degree domain of the moment identities
                ensure!(
                    matches!(check_membership(&g.poly, &spec.q), Err(Error::OddDegree(_))),
                    "{} should be rejected",
                    g.name
                );
                continue;
            }
            ensure!(agrees(&g.poly, &spec.q)?, "{} at q = {}", g.name, spec.q);
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut random = 0;
    while random < 50 {
        let spec = ring(RingName::ALL[rng.gen_range(0..RingName::ALL.len())]);
        let n = 2 * rng.gen_range(1..=12);
        let basis = spec.graded_basis(n, 1);
        if basis.is_empty() {
            continue;
        }
        let Some(w) = random_element(&mut rng, &basis) else {
            continue;
        };
        ensure!(agrees(&w, &spec.q)?, "{} degree {n}: {w}", spec.name);
        members += usize::from(check_membership(&w, &spec.q).map_err(fail)?);
        random += 1;
    }
    ensure!(members == 50, "only {members} of 50 random invariants are members");
    Ok(format!("{checked} even-degree generators and 50 random invariants agree"))
}

fn random_poly(rng: &mut ChaCha8Rng) -> Poly {
    let n = 2 * rng.gen_range(1..=6);
    let mut terms = Vec::new();
    for i in 0..=n {
        if rng.gen_bool(0.6) {
            terms.push((i, rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))));
        }
    }
    Poly::from_terms(n, terms).unwrap()
}

fn criterion_10(log: &mut Produced) -> Outcome {
    let qs = [int(2), int(3), int(4), rat(3, 2), rat(5, 3), rat(1, 2), int(7)];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for k in 0..100 {
        let w = random_poly(&mut rng);
        let q = &qs[rng.gen_range(0..qs.len())];
        let back = macwilliams(&macwilliams(&w, q).map_err(fail)?, q).map_err(fail)?;
        ensure!(back == w, "sample {k}: {w} at q = {q}");
    }
    // extremal elements of the classical rings add zeta outputs beyond the named ones
    for name in RingName::proven() {
        let spec = ring(name);
        for n in (2..=40).filter(|&n| spec.has_target_piece(n)) {
            let w = extremal(&spec, n, spec.target_sign).map_err(fail)?.w;
            if let Err(e) = log.zeta(&w, &spec.q) {
                ensure!(matches!(e, Error::DistanceTooSmall { .. }), "{name} n = {n}: {e}");
            }
        }
    }
    for (w, q, z) in &log.0 {
        ensure!(verify_zeta(w, q, z), "verify_zeta failed for {w} at q = {q}");
    }
    Ok(format!("100 involutions exact; verify_zeta on {} zeta outputs", log.0.len()))
}

fn main() -> ExitCode {
    let mut log = Produced::default();
    let results: Vec<(&str, Outcome)> = vec![
        ("generator fidelity", criterion_1()),
        ("zeta reproduction", criterion_2(&mut log)),
        ("moment discovery", criterion_3()),
        ("even-degree scan", criterion_4()),
        ("bound sweep, Types I-IV to 72", criterion_5()),
        ("degree-lowering chain", criterion_6(&mut log)),
        ("divisibility check", criterion_7()),
        ("RH numerics", criterion_8(&mut log)),
        ("moment/transform equivalence", criterion_9()),
        ("involution and zeta round trip", criterion_10(&mut log)),
    ];
    let mut failed = 0;
    for (k, (title, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("[PASS] {:>2}. {title}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2}. {title}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
