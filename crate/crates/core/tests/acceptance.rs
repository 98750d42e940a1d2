//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion does.

use std::io::Write;
use std::time::{Duration, Instant};

use lforge::algebra::rat;
use lforge::archimedean::{
    arch_zeta_verify, random_barnes1, random_barnes2, random_gamma_point, random_stade,
    stade_fixed_point, verify_barnes1, verify_barnes2, verify_gamma_duplication,
    verify_gamma_reflection, verify_stade, ArchField, ArchParams, CheckReport, QuadSpec, Stage,
};
use lforge::cli::{arch_report, nonarch_report, ArchConfig, NonarchConfig};
use lforge::lfactors::{
    branching_report, inert_sweep, separation_dimension_terms, split_sweep,
    sym_alg_dimension_terms, two_variable_sweep, verify_inert, verify_separation_split,
    verify_split, verify_sym_alg_fact, verify_two_variable, IdentityReport,
};
use lforge::reptheory::{
    alternant, character_dimension, freudenthal_multiplicities, gl3_weights, weyl_character,
    weyl_dimension, weyl_group, RootSystemId, SatakeGL2, SatakeGL4, SatakeGSp4,
    DEFAULT_WEIGHT_BOUND,
};
use num_complex::Complex64;

const SEED: u64 = 0;
const SWEEPS: u64 = 50;
const ORDER: u32 = 8;
const ARCH_DRAWS: u64 = 20;

struct Outcome {
    pass: bool,
    detail: String,
}

fn line(text: &str) {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{text}").unwrap();
    out.flush().unwrap();
}

fn run(
    results: &mut Vec<(String, bool)>,
    name: &str,
    budget: Option<Duration>,
    f: impl FnOnce() -> Outcome,
) {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        if elapsed > b {
            o.pass = false;
            o.detail
                .push_str(&format!("; over budget {:.0}s", b.as_secs_f64()));
        }
    }
    let tag = if o.pass { "PASS" } else { "FAIL" };
    line(&format!(
        "{tag} {name} ({:.1}s): {}",
        elapsed.as_secs_f64(),
        o.detail
    ));
    results.push((name.to_string(), o.pass));
}

fn exact(reports: &[IdentityReport]) -> Outcome {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} {}", r.identity, r.params))
        .collect();
    Outcome {
        pass: failed.is_empty() && !reports.is_empty(),
        detail: if failed.is_empty() {
            format!("{} exact identities", reports.len())
        } else {
            format!(
                "{}/{} failed, first {}",
                failed.len(),
                reports.len(),
                failed[0]
            )
        },
    }
}

fn numeric(reports: &[CheckReport]) -> Outcome {
    let worst = reports.iter().map(|r| r.rel_err).fold(0.0, f64::max);
    let failed: Vec<&CheckReport> = reports.iter().filter(|r| !r.pass).collect();
    Outcome {
        pass: failed.is_empty() && !reports.is_empty(),
        detail: match failed.first() {
            None => format!("{} checks, worst rel err {worst:.2e}", reports.len()),
            Some(r) => format!(
                "{}/{} failed, first {} rel err {:.2e} > {:.0e}",
                failed.len(),
                reports.len(),
                r.check,
                r.rel_err,
                r.tolerance
            ),
        },
    }
}

fn fail(e: impl std::fmt::Display) -> Outcome {
    Outcome {
        pass: false,
        detail: format!("error: {e}"),
    }
}

fn dominant(system: RootSystemId, max: i32) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..system.rank() {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i32>| {
                let top = w.last().copied().unwrap_or(max);
                (0..=top).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    if system == RootSystemId::D3Sim {
        let negated: Vec<Vec<i32>> = out
            .iter()
            .filter(|w| w[2] > 0)
            .map(|w| vec![w[0], w[1], -w[2]])
            .collect();
        out.extend(negated);
    }
    out
}

fn split_identity() -> Outcome {
    let mut reports = match split_sweep(SEED, SWEEPS, ORDER, false) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    match verify_split(&SatakeGL4::symbolic(), &SatakeGL2::symbolic(), ORDER, false) {
        Ok(r) => reports.push(r),
        Err(e) => return fail(e),
    }
    exact(&reports)
}

fn inert_identity() -> Outcome {
    let mut reports = match inert_sweep(SEED, SWEEPS, ORDER, false) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    match verify_inert(
        &SatakeGSp4::symbolic(),
        &SatakeGL2::symbolic(),
        ORDER,
        false,
    ) {
        Ok(r) => reports.extend(r),
        Err(e) => return fail(e),
    }
    let kinds: std::collections::BTreeSet<&str> =
        reports.iter().map(|r| r.identity.as_str()).collect();
    let mut o = exact(&reports);
    if kinds.len() < 2 {
        o.pass = false;
        o.detail.push_str("; expected both factorizations");
    }
    o
}

fn plethysm() -> Outcome {
    let reports = match (
        verify_sym_alg_fact(None, 6, false),
        verify_separation_split(None, 5, false),
    ) {
        (Ok(a), Ok(b)) => vec![a, b],
        (Err(e), _) | (_, Err(e)) => return fail(e),
    };
    let mut o = exact(&reports);
    let dims = [
        (sym_alg_dimension_terms(2), 36, vec![1, 30, 5]),
        (separation_dimension_terms(2), 78, vec![3, 60, 15]),
    ];
    for (got, total, parts) in dims {
        let (lhs, terms) = match got {
            Ok(x) => x,
            Err(e) => return fail(e),
        };
        let mut terms: Vec<_> = terms;
        let mut want: Vec<_> = parts.iter().map(|&p| rat(p, 1)).collect();
        terms.sort();
        want.sort();
        let sum = terms.iter().fold(rat(0, 1), |a, b| a + b);
        if lhs != rat(total, 1) || sum != lhs || terms != want {
            o.pass = false;
            o.detail
                .push_str(&format!("; dimension split {lhs} = {terms:?}"));
        }
    }
    o.detail.push_str("; 36 = 1+30+5, 78 = 3+60+15");
    o
}

fn character_engine() -> Outcome {
    let mut count = 0;
    for system in RootSystemId::ALL {
        let group = weyl_group(system);
        let rho = system.rho();
        let den = alternant(system, &rho);
        for w in dominant(system, 4) {
            let chi = match weyl_character(system, &w) {
                Ok(c) => c,
                Err(e) => return fail(format!("{system} {w:?}: {e}")),
            };
            let freud: u64 = match freudenthal_multiplicities(system, &w, DEFAULT_WEIGHT_BOUND) {
                Ok(m) => m.values().sum(),
                Err(e) => return fail(format!("{system} {w:?}: {e}")),
            };
            let a = character_dimension(system, &w).unwrap();
            let b = weyl_dimension(system, &w).unwrap();
            if a != rat(freud as i64, 1) || a != b {
                return fail(format!("{system} {w:?}: dims {a} {freud} {b}"));
            }
            let shifted: Vec<i32> = w.iter().zip(&rho).map(|(x, r)| x + r).collect();
            if &*chi * &den != alternant(system, &shifted) {
                return fail(format!("{system} {w:?}: nonzero division remainder"));
            }
            if let Some(g) = group.iter().find(|g| g.act(system, &chi) != *chi) {
                return fail(format!("{system} {w:?}: not invariant under {g:?}"));
            }
            count += 1;
        }
    }
    Outcome {
        pass: true,
        detail: format!("{count} weights over {} systems", RootSystemId::ALL.len()),
    }
}

fn branching() -> Outcome {
    let reports: Result<Vec<_>, _> = gl3_weights(-3, 3)
        .iter()
        .map(|w| branching_report(w))
        .collect();
    match reports {
        Ok(r) => exact(&r),
        Err(e) => fail(e),
    }
}

fn barnes() -> Outcome {
    let q = QuadSpec::for_dimension(1);
    let half = Complex64::new(0.5, 0.0);
    let mut reports = Vec::new();
    for field in ArchField::ALL {
        for i in 0..ARCH_DRAWS {
            let (a, b) = random_barnes1(SEED, i);
            let (a2, b2) = random_barnes2(SEED, i);
            match (
                verify_barnes1(a, b, field, &q, 1e-8),
                verify_barnes2(a2, b2, field, &q, 1e-8),
            ) {
                (Ok(x), Ok(y)) => reports.extend([x, y]),
                (Err(e), _) | (_, Err(e)) => return fail(e),
            }
        }
    }
    let mut o = numeric(&reports);
    match verify_barnes1([half; 2], [half; 2], ArchField::R, &q, 1e-8) {
        Ok(r) => {
            let pi_err = ((r.lhs_value() - std::f64::consts::PI).norm()) / std::f64::consts::PI;
            let ok = r.pass && pi_err <= 1e-8;
            o.pass &= ok;
            o.detail
                .push_str(&format!("; half case vs pi rel err {pi_err:.2e}"));
        }
        Err(e) => return fail(e),
    }
    o
}

fn stade() -> Outcome {
    let q = QuadSpec::for_dimension(1);
    let mut generic = Vec::new();
    let mut fixed = Vec::new();
    for field in ArchField::ALL {
        for i in 0..ARCH_DRAWS {
            match (
                verify_stade(&random_stade(SEED, i), field, &q, 1e-8),
                verify_stade(&stade_fixed_point(SEED, i), field, &q, 1e-12),
            ) {
                (Ok(x), Ok(y)) => {
                    generic.push(x);
                    fixed.push(y);
                }
                (Err(e), _) | (_, Err(e)) => return fail(e),
            }
        }
    }
    let (g, f) = (numeric(&generic), numeric(&fixed));
    Outcome {
        pass: g.pass && f.pass,
        detail: format!("balanced: {}; fixed point: {}", g.detail, f.detail),
    }
}

fn zeta_end_to_end() -> Outcome {
    let one = Complex64::new(1.0, 0.0);
    let mut reports = Vec::new();
    for field in ArchField::ALL {
        let runs = [
            (ArchParams::trivial(field), Stage::AfterBarnes1, 1e-6),
            (ArchParams::generic(field), Stage::AfterBarnes1, 1e-6),
            (ArchParams::trivial(field), Stage::Full, 1e-3),
        ];
        for (p, stage, tol) in runs {
            if let Err(e) = p.check_cc() {
                return fail(e);
            }
            let d = if stage == Stage::Full { 4 } else { 2 };
            match arch_zeta_verify(&p, one, stage, &QuadSpec::for_dimension(d), tol) {
                Ok(r) => reports.push(r),
                Err(e) => return fail(e),
            }
        }
    }
    let mut o = numeric(&reports);
    let per: Vec<String> = reports
        .iter()
        .map(|r| format!("{} {:.1e}", r.check, r.rel_err))
        .collect();
    o.detail.push_str(&format!(" [{}]", per.join(", ")));
    o
}

fn two_variable() -> Outcome {
    let mut reports = match two_variable_sweep(SEED, SWEEPS, ORDER, 4, false) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    match verify_two_variable(
        &SatakeGL4::symbolic(),
        &SatakeGL2::symbolic(),
        ORDER,
        4,
        false,
    ) {
        Ok(r) => reports.push(r),
        Err(e) => return fail(e),
    }
    exact(&reports)
}

fn gamma_oracles() -> Outcome {
    let mut reports = Vec::new();
    for i in 0..100 {
        let z = random_gamma_point(SEED, i);
        match (
            verify_gamma_reflection(z, 1e-12),
            verify_gamma_duplication(z, 1e-12),
        ) {
            (Ok(a), Ok(b)) => reports.extend([a, b]),
            (Err(e), _) | (_, Err(e)) => return fail(e),
        }
    }
    numeric(&reports)
}

fn reports_with(threads: usize) -> Result<(String, String), String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())?;
    pool.install(|| {
        let n = nonarch_report(&NonarchConfig::default()).map_err(|e| e.to_string())?;
        let a = arch_report(&ArchConfig::default()).map_err(|e| e.to_string())?;
        Ok((n.to_json(), a.to_json()))
    })
}

fn determinism() -> Outcome {
    let runs: Result<Vec<(String, String)>, String> =
        [1, 4, 1].iter().map(|&t| reports_with(t)).collect();
    let runs = match runs {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let same = runs.windows(2).all(|w| w[0] == w[1]);
    Outcome {
        pass: same,
        detail: format!(
            "reports of {} and {} bytes {} across 1/4/1 threads",
            runs[0].0.len(),
            runs[0].1.len(),
            if same { "identical" } else { "differ" }
        ),
    }
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let mut results = Vec::new();
    run(
        &mut results,
        "1 split identity",
        Some(secs(60)),
        split_identity,
    );
    run(
        &mut results,
        "2 inert identity",
        Some(secs(60)),
        inert_identity,
    );
    run(&mut results, "3 plethysm factorizations", None, plethysm);
    run(&mut results, "4 character engine", None, character_engine);
    run(&mut results, "5 branching law", None, branching);
    run(&mut results, "6 barnes lemmas", Some(secs(30)), barnes);
    run(&mut results, "7 stade transformation", None, stade);
    run(
        &mut results,
        "8 archimedean zeta",
        Some(secs(600)),
        zeta_end_to_end,
    );
    run(&mut results, "9 two-variable factor", None, two_variable);
    run(&mut results, "10 gamma oracles", None, gamma_oracles);
    run(&mut results, "11 determinism", None, determinism);
    let failed: Vec<&str> = results
        .iter()
        .filter(|r| !r.1)
        .map(|r| r.0.as_str())
        .collect();
    line(&format!(
        "acceptance: {}/{} criteria pass",
        results.len() - failed.len(),
        results.len()
    ));
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
