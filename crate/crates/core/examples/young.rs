//! Young's inequality `‖G_σ ∗ f‖_{q'} <= ‖G_σ‖_{q'} ‖f‖_1` on random
//! Gaussian mixtures.

use bessel_rkbs::admissibility::{Exponent, Rational};
use bessel_rkbs::experiments::{verify_young_bound, MixtureSpec, YoungConfig};

fn main() -> bessel_rkbs::Result<()> {
    let report = verify_young_bound(&YoungConfig::default())?;
    println!(
        "sigma = 1, q = inf: ||G||_1 = {:.12}, ratios in [{:.6}, {:.6}], {} violations",
        report.kernel_norm, report.min_ratio, report.max_ratio, report.violations
    );

    let sharp = verify_young_bound(&YoungConfig {
        mixture: MixtureSpec {
            signed: false,
            ..Default::default()
        },
        fields: 20,
        ..Default::default()
    })?;
    println!(
        "nonnegative fields attain the bound: max |ratio - 1| = {:.2e}",
        sharp.max_ratio - 1.0
    );

    let report = verify_young_bound(&YoungConfig {
        sigma: Rational::new(3, 2),
        q: Exponent::integer(2)?,
        ..Default::default()
    })?;
    println!(
        "sigma = 3/2, q = 2: ||G||_2 = {:.9}, max ratio {:.6}, passed = {}",
        report.kernel_norm, report.max_ratio, report.passed
    );
    Ok(())
}
