//! Check `⟨K_s(x, ·), ψ⟩ = ψ(x)` numerically for Gaussians and
//! band-limited fields, and compare the pairing with the RKHS inner
//! product when `p = q = 2`.

use bessel_rkbs::experiments::{verify_reproducing, ReproducingConfig};
use bessel_rkbs::spectral::SectionMethod;

fn main() -> bessel_rkbs::Result<()> {
    let reference = verify_reproducing(&ReproducingConfig::default())?;
    println!("reference grid (d = 1, s = 1, L = 84, n = 4096)");
    for p in &reference.points {
        println!(
            "  {:<14} x = {:<8?} expected {:+.12} pairing {:+.12} |err| {:.1e}",
            p.field, p.x, p.expected, p.pairing, p.error
        );
    }
    for c in &reference.checks {
        println!(
            "  {:<48} {:.3e} {} {:.0e}",
            c.name, c.value, c.relation, c.threshold
        );
    }

    // Using the pointwise kernel instead of its periodized, band-limited
    // version leaves an aliasing error at the cusp.
    let radial = verify_reproducing(&ReproducingConfig {
        section: SectionMethod::Radial,
        points: Some(vec![vec![0.03]]),
        ..Default::default()
    })?;
    println!(
        "\nradial section: Gaussian error {:.2e}, band-limited error {:.2e}",
        radial.gaussian_max_error, radial.band_limited_max_error
    );

    let plane = verify_reproducing(&ReproducingConfig {
        d: 2,
        s: 1.5,
        n: 256,
        length: 40.0,
        points: Some(vec![vec![0.0, 0.0], vec![1.0, -2.0]]),
        ..Default::default()
    })?;
    println!(
        "d = 2, s = 3/2: Gaussian error {:.2e}, passed = {}",
        plane.gaussian_max_error, plane.passed
    );
    Ok(())
}
