//! Compare the exact criterion `G_s ∈ L^{p'}` with a quadrature
//! experiment that shrinks the inner cutoff and watches the integral.

use bessel_rkbs::admissibility::{integrability_check, Exponent, Rational};
use bessel_rkbs::experiments::{integrability_sweep, verify_integrability, IntegrabilityConfig};

fn main() -> bessel_rkbs::Result<()> {
    let cfg = IntegrabilityConfig::default();
    for (d, s, p) in [
        (1, "1", "2"),
        (1, "1/2", "2"),
        (2, "1", "3/2"),
        (3, "1", "3"),
    ] {
        let (s, p): (Rational, Exponent) = (s.parse()?, p.parse()?);
        let report = verify_integrability(d, &s, &p, &cfg)?;
        println!(
            "d={d} s={s} p={p}: exact {} empirical {:?} ({} cutoffs)",
            integrability_check(d, &s, &p),
            report.empirical_verdict,
            report.quadrature_estimates.len()
        );
        for e in &report.quadrature_estimates {
            println!("    r0 = {:.0e}  integral = {:.10e}", e.r0, e.estimate);
        }
    }

    let sweep = integrability_sweep(&cfg)?;
    println!(
        "\nsweep of {} triples: {} mismatches, classes {:?}",
        sweep.cases.len(),
        sweep.mismatches,
        sweep.classes_covered
    );
    Ok(())
}
