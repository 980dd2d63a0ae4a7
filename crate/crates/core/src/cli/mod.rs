//! Command-line front end.
//!
//! Predicate commands (`check-pair`, `kernel-interval`) take exact
//! rationals such as `3/2` and `inf`; decimals are rejected there. Numeric
//! commands (`eval-kernel`, `verify`) also accept decimals.
//!
//! Exit codes: `0` success, `1` a negative answer (not admissible, empty
//! interval, failed check), `2` invalid input.

mod args;
mod parse;
mod suites;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use serde::Serialize;

use crate::admissibility::{kernel_interval, rkbs_pair_check, PairQuery};
use crate::error::{Error, Result};
use crate::experiments::Check;
use crate::specfun::{
    bessel_kernel, kernel_at_origin, near_field_class, NearFieldClass, RadialKernelSpec,
};
use crate::spectral::{io as field_io, kernel_section, GridSpec};

pub use args::{Cli, Command, EvalKernelArgs, Format, PairArgs, RunConfig, Suite};
pub use suites::{run_suite, SuiteOutcome, SUITES};

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Io(_) => 1,
                _ => 2,
            }
        }
    }
}

struct Output<'a> {
    format: Format,
    pretty: bool,
    dir: Option<&'a Path>,
}

impl Output<'_> {
    fn json<T: Serialize>(&self, value: &T) -> Result<String> {
        let mut text = if self.pretty {
            serde_json::to_string_pretty(value)?
        } else {
            serde_json::to_string(value)?
        };
        text.push('\n');
        Ok(text)
    }

    fn save(&self, name: &str, text: &str) -> Result<()> {
        if let Some(dir) = self.dir {
            fs::create_dir_all(dir)?;
            let ext = match self.format {
                Format::Json => "json",
                Format::Csv => "csv",
            };
            fs::write(dir.join(format!("{name}.{ext}")), text)?;
        }
        Ok(())
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32> {
    let out = Output {
        format: cli.format,
        pretty: cli.pretty,
        dir: cli.out.as_deref(),
    };
    match &cli.command {
        Command::CheckPair(a) => check_pair(a, &out, stdout),
        Command::KernelInterval(a) => interval(a, &out, stdout),
        Command::EvalKernel(a) => eval_kernel(a, &out, stdout),
        Command::Verify { suite, config } => verify(*suite, config, &out, stdout),
    }
}

fn check_pair(a: &PairArgs, out: &Output, stdout: &mut dyn Write) -> Result<i32> {
    let s =
        a.s.as_deref()
            .ok_or_else(|| Error::Parse("check-pair needs -s".into()))?;
    let query = PairQuery::parse(a.d, &a.u, &a.p, &a.v, &a.q, s)?;
    let verdict = rkbs_pair_check(&query);
    let text = match out.format {
        Format::Json if out.pretty => verdict.to_string(),
        Format::Json => out.json(&verdict)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "id",
                "status",
                "strict_required",
                "holds",
                "lower",
                "value",
                "upper",
            ])?;
            for c in &verdict.conditions {
                let bound = |b: &Option<crate::admissibility::Bound>| {
                    b.as_ref().map(|b| b.value.to_string()).unwrap_or_default()
                };
                w.write_record([
                    c.id.to_string(),
                    c.status.to_string(),
                    c.strict_required.to_string(),
                    c.holds.to_string(),
                    bound(&c.lower),
                    c.value.to_string(),
                    bound(&c.upper),
                ])?;
            }
            csv_text(w)?
        }
    };
    stdout.write_all(text.as_bytes())?;
    out.save("check-pair", &text)?;
    Ok(if verdict.admissible { 0 } else { 1 })
}

fn interval(a: &PairArgs, out: &Output, stdout: &mut dyn Write) -> Result<i32> {
    if a.s.is_some() {
        return Err(Error::Parse("kernel-interval does not take -s".into()));
    }
    let (u, v) = (a.u.parse()?, a.v.parse()?);
    let interval = kernel_interval(a.d, &u, &a.p.parse()?, &v, &a.q.parse()?)?;
    let text = match out.format {
        Format::Json if out.pretty => format!("{interval}\n"),
        Format::Json => out.json(&interval)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["lower", "upper", "upper_strict", "empty"])?;
            w.write_record([
                interval.lower.to_string(),
                interval.upper.to_string(),
                interval.upper_strict.to_string(),
                interval.empty.to_string(),
            ])?;
            csv_text(w)?
        }
    };
    stdout.write_all(text.as_bytes())?;
    out.save("kernel-interval", &text)?;
    Ok(if interval.empty { 1 } else { 0 })
}

#[derive(Serialize)]
struct KernelValue {
    r: f64,
    /// `None` when the kernel is singular at `r`.
    value: Option<f64>,
    annotation: String,
}

#[derive(Serialize)]
struct KernelTable {
    d: u32,
    s: f64,
    /// Order of the Bessel kernel, `2s`.
    kernel_order: f64,
    near_field_class: NearFieldClass,
    values: Vec<KernelValue>,
}

fn eval_kernel(a: &EvalKernelArgs, out: &Output, stdout: &mut dyn Write) -> Result<i32> {
    let s = parse::real(&a.s)?;
    let spec = RadialKernelSpec::new(2.0 * s, a.d)?;
    let class = near_field_class(&spec);
    if let Some(n) = a.grid_n {
        let length = parse::real(a.grid_length.as_deref().unwrap_or("32"))?;
        let grid = GridSpec::new(a.d, n, length)?;
        let centre = match &a.center {
            Some(list) => list
                .iter()
                .map(|x| parse::real(x))
                .collect::<Result<Vec<_>>>()?,
            None => vec![0.0; a.d as usize],
        };
        let field = kernel_section(s, &centre, &grid, a.method.into())?;
        let mut bytes = Vec::new();
        field_io::write_csv(&field, &mut bytes)?;
        stdout.write_all(&bytes)?;
        if let Some(dir) = out.dir {
            fs::create_dir_all(dir)?;
            fs::write(dir.join("kernel-section.csv"), &bytes)?;
        }
        return Ok(0);
    }
    if a.r.is_empty() {
        return Err(Error::Parse(
            "eval-kernel needs -r values or --grid-n".into(),
        ));
    }
    let mut values = Vec::new();
    for r in &a.r {
        let r = parse::real(r)?;
        if r < 0.0 {
            return Err(Error::Domain(format!(
                "radius must be nonnegative, got {r}"
            )));
        }
        let (value, annotation) = if r == 0.0 {
            match (class, kernel_at_origin(&spec)) {
                (NearFieldClass::Bounded, Some(v)) => (Some(v), "bounded".to_string()),
                (NearFieldClass::Logarithmic, _) => (None, "singular (logarithmic)".to_string()),
                (NearFieldClass::PowerLaw { exponent }, _) => {
                    (None, format!("singular (power law r^{exponent})"))
                }
                (NearFieldClass::Bounded, None) => {
                    unreachable!("bounded kernels have a finite origin value")
                }
            }
        } else {
            (Some(bessel_kernel(&spec, r)?), String::new())
        };
        values.push(KernelValue {
            r,
            value,
            annotation,
        });
    }
    let table = KernelTable {
        d: a.d,
        s,
        kernel_order: 2.0 * s,
        near_field_class: class,
        values,
    };
    let text = match out.format {
        Format::Json => out.json(&table)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["r", "value", "annotation"])?;
            for v in &table.values {
                let value = v
                    .value
                    .map(|x| format!("{x:e}"))
                    .unwrap_or_else(|| "inf".into());
                w.write_record([v.r.to_string(), value, v.annotation.clone()])?;
            }
            csv_text(w)?
        }
    };
    stdout.write_all(text.as_bytes())?;
    out.save("eval-kernel", &text)?;
    Ok(0)
}

fn verify(suite: Suite, config: &RunConfig, out: &Output, stdout: &mut dyn Write) -> Result<i32> {
    let outcomes = match suite {
        Suite::All => suites::run_all(config)?,
        one => vec![run_suite(one, config)?],
    };
    let passed = outcomes.iter().all(|o| o.passed);
    let text = match out.format {
        Format::Json if out.pretty => checks_table(&outcomes),
        Format::Json if suite == Suite::All => {
            out.json(&suites::aggregate(config.seed, &outcomes))?
        }
        Format::Json => out.json(&outcomes[0].report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "check", "value", "relation", "threshold", "passed"])?;
            for o in &outcomes {
                for c in &o.checks {
                    w.write_record([
                        o.name.to_string(),
                        c.name.clone(),
                        format!("{:e}", c.value),
                        c.relation.clone(),
                        format!("{:e}", c.threshold),
                        c.passed.to_string(),
                    ])?;
                }
            }
            csv_text(w)?
        }
    };
    stdout.write_all(text.as_bytes())?;
    if let Some(dir) = out.dir {
        fs::create_dir_all(dir)?;
        for o in &outcomes {
            fs::write(dir.join(format!("{}.json", o.name)), out.json(&o.report)?)?;
            if let Some(csv) = &o.observations_csv {
                fs::write(dir.join(format!("{}-observations.csv", o.name)), csv)?;
            }
        }
        let name = if suite == Suite::All {
            "all".to_string()
        } else {
            outcomes[0].name.to_string()
        };
        out.save(&format!("verify-{name}"), &text)?;
    }
    Ok(if passed { 0 } else { 1 })
}

fn checks_table(outcomes: &[SuiteOutcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        s.push_str(&format!(
            "{} [{}]\n",
            o.name,
            if o.passed { "PASS" } else { "FAIL" }
        ));
        for Check {
            name,
            value,
            relation,
            threshold,
            passed,
        } in &o.checks
        {
            s.push_str(&format!(
                "  {:<4} {name:<48} {value:>12.4e} {relation} {threshold:.4e}\n",
                if *passed { "ok" } else { "FAIL" }
            ));
        }
    }
    s
}

fn csv_text(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
