//! Norming pairs: for `p = q'` and `u + v = 2s` the norm of `H^{u,p}` can
//! be computed through the pairing with `H^{v,q}`.

use bessel_rkbs::admissibility::{Exponent, Rational};
use bessel_rkbs::experiments::{verify_norming, NormingConfig};

fn main() -> bessel_rkbs::Result<()> {
    for p in [
        Rational::integer(2),
        Rational::new(3, 2),
        Rational::integer(4),
    ] {
        let cfg = NormingConfig {
            p: Exponent::finite(p)?,
            fields: 20,
            bank: 16,
            ..Default::default()
        };
        let r = verify_norming(&cfg)?;
        println!(
            "H^{{{},{}}} vs H^{{{},{}}}: path difference {:.1e}, \
             dual bound {:.6} (random duals only {:.4}), perturbed gap {:.3e}",
            cfg.u,
            cfg.p,
            r.v,
            r.q,
            r.max_path_difference,
            r.min_dual_fraction,
            r.min_random_dual_fraction,
            r.perturbed_gap
        );
    }
    Ok(())
}
