use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::args::{RunConfig, Suite};
use super::parse;
use crate::admissibility::{Exponent, Rational};
use crate::error::{Error, Result};
use crate::experiments::{
    blowup_dilation, blowup_mollifier, blowup_rescaled, integrability_sweep, verify_integrability,
    verify_norming, verify_reproducing, verify_young_bound, Check, DilationConfig,
    IntegrabilityConfig, MixtureSpec, MollifierConfig, NormingConfig, ReproducingConfig,
    RescaledConfig, YoungConfig,
};

/// Every runnable suite, in the order `verify all` reports them.
pub const SUITES: [Suite; 7] = [
    Suite::BlowupDilation,
    Suite::BlowupMollifier,
    Suite::BlowupRescaled,
    Suite::Integrability,
    Suite::Norming,
    Suite::Reproducing,
    Suite::Young,
];

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub report: Value,
    pub observations_csv: Option<String>,
}

fn name(suite: Suite) -> &'static str {
    match suite {
        Suite::Reproducing => "reproducing",
        Suite::Integrability => "integrability",
        Suite::BlowupDilation => "blowup-dilation",
        Suite::BlowupRescaled => "blowup-rescaled",
        Suite::BlowupMollifier => "blowup-mollifier",
        Suite::Young => "young",
        Suite::Norming => "norming",
        Suite::All => "all",
    }
}

fn reject_unused(suite: Suite, cfg: &RunConfig, allowed: &[&str]) -> Result<()> {
    let given = [
        ("d", cfg.d.is_some()),
        ("s", cfg.s.is_some()),
        ("u", cfg.u.is_some()),
        ("v", cfg.v.is_some()),
        ("p", cfg.p.is_some()),
        ("q", cfg.q.is_some()),
        ("sigma", cfg.sigma.is_some()),
        ("L", cfg.length.is_some()),
        ("n", cfg.n.is_some()),
        ("fields", cfg.fields.is_some()),
        ("nonnegative", cfg.nonnegative),
    ];
    match given
        .iter()
        .find(|(flag, set)| *set && !allowed.contains(flag))
    {
        Some((flag, _)) => Err(Error::Parse(format!(
            "--{flag} is not used by suite {}",
            name(suite)
        ))),
        None => Ok(()),
    }
}

fn real_or(value: &Option<String>, default: f64) -> Result<f64> {
    value
        .as_deref()
        .map(parse::real)
        .transpose()
        .map(|v| v.unwrap_or(default))
}

fn rational_or(value: &Option<String>, default: Rational) -> Result<Rational> {
    value
        .as_deref()
        .map(parse::number)
        .transpose()
        .map(|v| v.unwrap_or(default))
}

fn exponent_or(value: &Option<String>, default: Exponent) -> Result<Exponent> {
    value
        .as_deref()
        .map(parse::exponent)
        .transpose()
        .map(|v| v.unwrap_or(default))
}

fn outcome<T: Serialize>(
    suite: Suite,
    report: &T,
    checks: &[Check],
    passed: bool,
    csv: Option<String>,
) -> Result<SuiteOutcome> {
    Ok(SuiteOutcome {
        name: name(suite),
        passed,
        checks: checks.to_vec(),
        report: serde_json::to_value(report)?,
        observations_csv: csv,
    })
}

/// Runs one suite with the reference configuration overridden by `cfg`.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<SuiteOutcome> {
    match suite {
        Suite::Reproducing => {
            reject_unused(suite, cfg, &["d", "s", "L", "n"])?;
            let base = ReproducingConfig::default();
            let rc = ReproducingConfig {
                d: cfg.d.unwrap_or(base.d),
                s: real_or(&cfg.s, base.s)?,
                n: cfg.n.unwrap_or(base.n),
                length: real_or(&cfg.length, base.length)?,
                seed: cfg.seed,
                ..base
            };
            let r = verify_reproducing(&rc)?;
            outcome(suite, &r, &r.checks, r.passed, None)
        }
        Suite::Integrability => {
            reject_unused(suite, cfg, &["d", "s", "p"])?;
            let ic = IntegrabilityConfig::default();
            match (&cfg.s, &cfg.p) {
                (Some(s), Some(p)) => {
                    let r = verify_integrability(
                        cfg.d.unwrap_or(1),
                        &parse::number(s)?,
                        &parse::exponent(p)?,
                        &ic,
                    )?;
                    outcome(suite, &r, &r.checks, r.passed, None)
                }
                (None, None) if cfg.d.is_none() => {
                    let r = integrability_sweep(&ic)?;
                    outcome(suite, &r, &r.checks, r.passed, None)
                }
                _ => Err(Error::Parse(
                    "integrability takes both --s and --p (with optional --d), or neither".into(),
                )),
            }
        }
        Suite::BlowupDilation => {
            reject_unused(suite, cfg, &["d", "s", "v", "L", "n"])?;
            let base = DilationConfig::reference(cfg.d.unwrap_or(1));
            let dc = DilationConfig {
                v: real_or(&cfg.v, base.v)?,
                s: real_or(&cfg.s, base.s)?,
                n: cfg.n.unwrap_or(base.n),
                length: real_or(&cfg.length, base.length)?,
                ..base
            };
            let r = blowup_dilation(&dc)?;
            let csv = r.observations_csv()?;
            outcome(suite, &r, &r.checks, r.passed, Some(csv))
        }
        Suite::BlowupRescaled => {
            reject_unused(suite, cfg, &["d", "s", "u", "v", "p", "L", "n"])?;
            let base = RescaledConfig::default();
            let rc = RescaledConfig {
                d: cfg.d.unwrap_or(base.d),
                u: real_or(&cfg.u, base.u)?,
                v: real_or(&cfg.v, base.v)?,
                s: real_or(&cfg.s, base.s)?,
                p: match &cfg.p {
                    Some(p) => parse::exponent(p)?.to_f64(),
                    None => base.p,
                },
                n: cfg.n.unwrap_or(base.n),
                length: real_or(&cfg.length, base.length)?,
                ..base
            };
            let r = blowup_rescaled(&rc)?;
            let csv = r.observations_csv()?;
            outcome(suite, &r, &r.checks, r.passed, Some(csv))
        }
        Suite::BlowupMollifier => {
            reject_unused(suite, cfg, &["d", "s", "u", "v", "q", "L", "n"])?;
            let base = MollifierConfig::default();
            let mc = MollifierConfig {
                d: cfg.d.unwrap_or(base.d),
                u: rational_or(&cfg.u, base.u.clone())?,
                v: rational_or(&cfg.v, base.v.clone())?,
                s: rational_or(&cfg.s, base.s.clone())?,
                q: exponent_or(&cfg.q, base.q.clone())?,
                n: cfg.n.unwrap_or(base.n),
                length: real_or(&cfg.length, base.length)?,
                ..base
            };
            let r = blowup_mollifier(&mc)?;
            let csv = r.observations_csv()?;
            outcome(suite, &r, &r.checks, r.passed, Some(csv))
        }
        Suite::Young => {
            reject_unused(
                suite,
                cfg,
                &["d", "sigma", "q", "L", "n", "fields", "nonnegative"],
            )?;
            let base = YoungConfig::default();
            let yc = YoungConfig {
                d: cfg.d.unwrap_or(base.d),
                sigma: rational_or(&cfg.sigma, base.sigma.clone())?,
                q: exponent_or(&cfg.q, base.q.clone())?,
                fields: cfg.fields.unwrap_or(base.fields),
                seed: cfg.seed,
                mixture: MixtureSpec {
                    signed: !cfg.nonnegative,
                    ..base.mixture
                },
                n: cfg.n.unwrap_or(base.n),
                length: real_or(&cfg.length, base.length)?,
                ..base
            };
            let r = verify_young_bound(&yc)?;
            outcome(suite, &r, &r.checks, r.passed, None)
        }
        Suite::Norming => {
            reject_unused(suite, cfg, &["d", "u", "p", "s", "L", "n", "fields"])?;
            let base = NormingConfig::default();
            let nc = NormingConfig {
                d: cfg.d.unwrap_or(base.d),
                u: rational_or(&cfg.u, base.u.clone())?,
                p: exponent_or(&cfg.p, base.p.clone())?,
                s: rational_or(&cfg.s, base.s.clone())?,
                fields: cfg.fields.unwrap_or(base.fields),
                seed: cfg.seed,
                n: cfg.n.unwrap_or(base.n),
                length: real_or(&cfg.length, base.length)?,
                ..base
            };
            let r = verify_norming(&nc)?;
            outcome(suite, &r, &r.checks, r.passed, None)
        }
        Suite::All => Err(Error::Parse("`all` is not a single suite".into())),
    }
}

/// Runs every suite concurrently with reference settings and `cfg.seed`.
pub(crate) fn run_all(cfg: &RunConfig) -> Result<Vec<SuiteOutcome>> {
    reject_unused(Suite::All, cfg, &[])?;
    let seeded = RunConfig {
        seed: cfg.seed,
        ..Default::default()
    };
    let results: Vec<Result<SuiteOutcome>> = std::thread::scope(|scope| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|&s| {
                let seeded = &seeded;
                scope.spawn(move || run_suite(s, seeded))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    let mut outcomes = results.into_iter().collect::<Result<Vec<_>>>()?;
    outcomes.sort_by_key(|o| o.name);
    Ok(outcomes)
}

pub(crate) fn aggregate(seed: u64, outcomes: &[SuiteOutcome]) -> Value {
    let suites: BTreeMap<&str, Value> = outcomes
        .iter()
        .map(|o| (o.name, json!({ "passed": o.passed, "checks": o.checks })))
        .collect();
    json!({
        "seed": seed,
        "passed": outcomes.iter().all(|o| o.passed),
        "suites": suites,
    })
}
