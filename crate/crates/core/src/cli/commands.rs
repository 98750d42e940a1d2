use std::io::Read;
use std::path::PathBuf;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::archimedean::{parse_complex, ArchError, ArchField, ArchParams, QuadSpec, Stage};
use crate::lfactors::{
    lfactor_std4, lfactor_sym2, lfactor_tensor_gsp4_gl2, lfactor_wedge2_std2_inert,
    lfactor_wedge2_std2_split, two_variable_factor, zeta_series, PlaceData, ZetaConfig,
};
use crate::reptheory::{ReptheoryError, SatakeGL2, SatakeGL4, SatakeGSp4, SatakeInput};

use super::suites::{arch_checks, nonarch_checks, ArchConfig, NonarchConfig, SuiteReport};
use super::{
    ArchArgs, FieldArg, LfactorArgs, NonarchArgs, OutputArgs, PlaceArg, SeriesArgs, StageArg,
    Which, EXIT_CONTOUR, EXIT_FAIL, EXIT_INPUT, EXIT_PASS,
};

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

impl From<ReptheoryError> for CliError {
    fn from(e: ReptheoryError) -> Self {
        input_error(e.to_string())
    }
}

impl From<ArchError> for CliError {
    fn from(e: ArchError) -> Self {
        let code = match e {
            ArchError::ContourViolation(_)
            | ArchError::CentralCharacterViolation(_)
            | ArchError::BalanceViolation(_)
            | ArchError::PoleAtNonPositiveInteger(_) => EXIT_CONTOUR,
            ArchError::NonConvergence { .. } => EXIT_FAIL,
            ArchError::InvalidIntegrand(_) | ArchError::InvalidInput(_) => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Inline JSON (starting with `{` or `[`), `-` for stdin, or a file path.
pub fn read_json_arg(arg: &str) -> Result<Value, CliError> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_error(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(arg).map_err(|e| input_error(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| input_error(format!("malformed JSON: {e}")))
}

pub(super) fn emit<T: serde::Serialize>(
    out: &OutputArgs,
    doc: &T,
    table: &str,
) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(doc).expect("report serializes");
    if out.json {
        println!("{text}");
    } else {
        print!("{table}");
    }
    if let Some(path) = &out.out {
        std::fs::write(path, format!("{text}\n"))
            .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn satake_input(arg: &Option<String>) -> Result<(SatakeGL4, SatakeGL2, SatakeGSp4), CliError> {
    let input: SatakeInput = match arg {
        None => SatakeInput::default(),
        Some(a) => serde_json::from_value(read_json_arg(a)?)
            .map_err(|e| input_error(format!("Satake input: {e}")))?,
    };
    Ok((
        input.gl4.unwrap_or_else(SatakeGL4::trivial),
        input.gl2.unwrap_or_else(SatakeGL2::trivial),
        input.gsp4.unwrap_or_else(SatakeGSp4::trivial),
    ))
}

fn place_name(p: PlaceArg) -> &'static str {
    match p {
        PlaceArg::Split => "split",
        PlaceArg::Inert => "inert",
    }
}

pub(super) fn run_lfactor(a: &LfactorArgs) -> Result<i32, CliError> {
    let (s4, s2, c) = satake_input(&a.input)?;
    let omega = match a.place {
        PlaceArg::Split => s4.central(),
        PlaceArg::Inert => c.central(),
    };
    let factor = match (a.which, a.place) {
        (Which::Wedge2Std2, PlaceArg::Split) => lfactor_wedge2_std2_split(&s4, &s2),
        (Which::Wedge2Std2, PlaceArg::Inert) => lfactor_wedge2_std2_inert(&c, &s2),
        (Which::Sym2, _) => lfactor_sym2(&s2, &omega),
        (Which::Std4, _) => lfactor_std4(&s4),
        (Which::Tensor8, _) => lfactor_tensor_gsp4_gl2(&c, &s2),
    };
    let series = factor.expand(a.order, a.order);
    let doc = json!({
        "which": factor.label,
        "place": place_name(a.place),
        "degree": factor.degree(),
        "factor": factor.render(),
        "blocks": factor.blocks_json(),
        "order": a.order,
        "series": series.render(),
    });
    let table = format!("factor: {}\nseries: {}\n", factor.render(), series.render());
    emit(&a.output, &doc, &table)?;
    Ok(EXIT_PASS)
}

pub(super) fn run_series(a: &SeriesArgs) -> Result<i32, CliError> {
    let (s4, s2, c) = if a.symbolic {
        (
            SatakeGL4::symbolic(),
            SatakeGL2::symbolic(),
            SatakeGSp4::symbolic(),
        )
    } else {
        satake_input(&a.input)?
    };
    let place = match a.place {
        PlaceArg::Split => PlaceData::Split(s4.clone()),
        PlaceArg::Inert => PlaceData::Inert(c),
    };
    let series = match a.u_order {
        Some(u) => {
            if a.place != PlaceArg::Split {
                return Err(input_error(
                    "the two-variable factor is defined at split places",
                ));
            }
            two_variable_factor(&s4, &s2, a.order, u)?
        }
        None => zeta_series(
            &place,
            &s2,
            ZetaConfig {
                t_order: a.order,
                with_sym2: !a.bare,
            },
        )?,
    };
    let doc = json!({
        "place": place_name(a.place),
        "with_sym2": a.u_order.is_none() && !a.bare,
        "two_variable": a.u_order.is_some(),
        "series": series,
    });
    emit(&a.output, &doc, &format!("{}\n", series.render()))?;
    Ok(EXIT_PASS)
}

fn table_line(pass: bool, name: &str, detail: &str) -> String {
    format!(
        "{} {:<20} {}\n",
        if pass { "PASS" } else { "FAIL" },
        name,
        detail
    )
}

fn finish(report: &SuiteReport, table: String, out: &OutputArgs) -> Result<i32, CliError> {
    let table = format!(
        "{table}{}: {}/{} passed\n",
        report.suite, report.summary.passed, report.summary.total
    );
    emit(out, report, &table)?;
    Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
}

/// The document written by `verify nonarch`.
pub fn nonarch_report(cfg: &NonarchConfig) -> Result<SuiteReport, ReptheoryError> {
    let checks = nonarch_checks(cfg)?;
    Ok(SuiteReport::new(
        "nonarch",
        serde_json::to_value(cfg).unwrap(),
        &checks,
    ))
}

/// The document written by `verify arch`.
pub fn arch_report(cfg: &ArchConfig) -> Result<SuiteReport, ArchError> {
    let checks = arch_checks(cfg)?;
    let mut config = serde_json::to_value(cfg).unwrap();
    if let Some((p, s)) = &cfg.params {
        config["params"] = p.to_json();
        config["s"] = json!([s.re, s.im]);
    }
    Ok(SuiteReport::new("arch", config, &checks))
}

pub(super) fn run_nonarch(a: &NonarchArgs) -> Result<i32, CliError> {
    let cfg = NonarchConfig {
        order: a.order,
        sweeps: a.sweeps,
        seed: a.seed,
        symbolic: a.symbolic,
        mutate: a.mutate,
    };
    let report = nonarch_report(&cfg)?;
    let mut table = String::new();
    for c in &report.checks {
        let detail = match c["first_mismatch"].as_object() {
            Some(m) => format!("{} first mismatch at degree {}", c["params"], m["degree"]),
            None => c["params"].to_string(),
        };
        table += &table_line(
            c["pass"] == true,
            c["identity"].as_str().unwrap_or("?"),
            &detail,
        );
    }
    finish(&report, table, &a.output)
}

fn parse_arch_params(v: &Value) -> Result<(ArchParams, Complex64), CliError> {
    let p = ArchParams::from_json(v, ArchField::R)?;
    let s = match v.get("s") {
        Some(x) => parse_complex(x)?,
        None => Complex64::new(1.0, 0.0),
    };
    Ok((p, s))
}

pub(super) fn run_arch(a: &ArchArgs) -> Result<i32, CliError> {
    let quad = match &a.quad {
        Some(q) => Some(
            serde_json::from_value::<QuadSpec>(read_json_arg(q)?)
                .map_err(|e| input_error(format!("quadrature override: {e}")))?,
        ),
        None => None,
    };
    let params = match &a.params {
        Some(p) => Some(parse_arch_params(&read_json_arg(p)?)?),
        None => None,
    };
    let cfg = ArchConfig {
        stage: match a.stage {
            StageArg::AfterBarnes1 => Stage::AfterBarnes1,
            StageArg::Full => Stage::Full,
        },
        sweeps: a.sweeps,
        seed: a.seed,
        tolerance: a.tolerance,
        quad,
        fields: match a.field {
            FieldArg::R => vec![ArchField::R],
            FieldArg::C => vec![ArchField::C],
            FieldArg::Both => ArchField::ALL.to_vec(),
        },
        params,
    };
    let report = arch_report(&cfg)?;
    let mut table = String::new();
    for c in &report.checks {
        let detail = format!(
            "rel_err {:.3e} (tolerance {:.0e})",
            c["rel_err"].as_f64().unwrap_or(f64::NAN),
            c["tolerance"].as_f64().unwrap_or(f64::NAN)
        );
        table += &table_line(
            c["pass"] == true,
            c["check"].as_str().unwrap_or("?"),
            &detail,
        );
    }
    finish(&report, table, &a.output)
}

fn schema_error(path: &std::path::Path, what: &str) -> CliError {
    input_error(format!("{}: not a report ({what})", path.display()))
}

/// Merges report files, sorted by path. Returns the merged document, a
/// table and the overall verdict.
pub fn run_report(paths: &[PathBuf]) -> Result<(Value, String, bool), CliError> {
    let mut paths = paths.to_vec();
    paths.sort();
    let mut entries = Vec::new();
    let mut table = String::new();
    let (mut total, mut passed) = (0usize, 0usize);
    for path in &paths {
        let text = std::fs::read_to_string(path)
            .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
        let doc: Value =
            serde_json::from_str(&text).map_err(|_| schema_error(path, "malformed JSON"))?;
        let suite = doc["suite"]
            .as_str()
            .ok_or_else(|| schema_error(path, "missing suite"))?;
        let checks = doc["checks"]
            .as_array()
            .ok_or_else(|| schema_error(path, "missing checks"))?;
        let mut ok = 0;
        for c in checks {
            match c["pass"].as_bool() {
                Some(true) => ok += 1,
                Some(false) => {}
                None => return Err(schema_error(path, "check without a pass field")),
            }
        }
        let pass = ok == checks.len();
        total += checks.len();
        passed += ok;
        table += &table_line(
            pass,
            suite,
            &format!("{ok}/{} {}", checks.len(), path.display()),
        );
        entries.push(json!({
            "path": path.display().to_string(),
            "suite": suite,
            "total": checks.len(),
            "passed": ok,
            "failed": checks.len() - ok,
            "pass": pass,
        }));
    }
    let pass = passed == total;
    table += &format!(
        "overall: {passed}/{total} passed, {}\n",
        if pass { "PASS" } else { "FAIL" }
    );
    let doc = json!({
        "reports": entries,
        "summary": {"total": total, "passed": passed, "failed": total - passed},
        "pass": pass,
    });
    Ok((doc, table, pass))
}
