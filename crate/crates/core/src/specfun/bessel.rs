//! Modified Bessel function of the second kind for real order and
//! positive real argument.
//!
//! The order `ν` is split as `ν = n + μ` with `|μ| <= 1/2`. `K_μ` and
//! `K_{μ+1}` come from Temme's series below [`SERIES_SWITCH`] and from
//! Steed's continued fraction above it; upward recurrence in the order
//! (stable for `K`) then reaches `K_ν`.

use std::f64::consts::PI;

use super::gamma::{recip_gamma_1p, temme_gammas};
use crate::error::{domain, Result};

/// Largest supported `|ν|`.
pub const MAX_ORDER: f64 = 60.0;

/// `K_ν(z)` underflows to zero beyond this argument.
pub const UNDERFLOW_ARG: f64 = 700.0;

/// Argument at which evaluation moves from the Temme series to the
/// continued fraction. Both branches agree to ~1e-15 relative here.
pub const SERIES_SWITCH: f64 = 2.0;

const EPS: f64 = 1e-16;
const MAX_ITER: usize = 10_000;

/// `K_ν(z)`.
///
/// Returns `0.0` for `z >` [`UNDERFLOW_ARG`]. For large orders and tiny
/// arguments the result may overflow to `+inf`.
pub fn bessel_k(order: f64, z: f64) -> Result<f64> {
    if !(z > 0.0) || z.is_nan() {
        return domain(format!("bessel_k requires z > 0, got {z}"));
    }
    if !order.is_finite() || order.abs() > MAX_ORDER {
        return domain(format!(
            "bessel_k order must satisfy |ν| <= {MAX_ORDER}, got {order}"
        ));
    }
    if z > UNDERFLOW_ARG {
        return Ok(0.0);
    }
    Ok(bessel_k_pair(order.abs(), z).0)
}

/// `(K_ν(z), K_{ν+1}(z))` for `ν >= 0`, `z > 0`.
pub(crate) fn bessel_k_pair(nu: f64, z: f64) -> (f64, f64) {
    let steps = (nu + 0.5).floor();
    let mu = nu - steps;
    let (mut k_mu, mut k_mu1) = if z < SERIES_SWITCH {
        temme_series(mu, z)
    } else {
        steed_fraction(mu, z)
    };
    let two_over_z = 2.0 / z;
    for i in 1..=(steps as usize) {
        let next = (mu + i as f64) * two_over_z * k_mu1 + k_mu;
        k_mu = k_mu1;
        k_mu1 = next;
    }
    (k_mu, k_mu1)
}

/// `z^ν K_ν(z)` for `ν >= 0`, computed through a rescaled recurrence so
/// that it stays finite as `z → 0` (its limit is `2^{ν-1} Γ(ν)` for `ν > 0`).
pub fn scaled_bessel_k(nu: f64, z: f64) -> Result<f64> {
    if !(z > 0.0) || z.is_nan() {
        return domain(format!("scaled_bessel_k requires z > 0, got {z}"));
    }
    if !(0.0..=MAX_ORDER).contains(&nu) {
        return domain(format!(
            "scaled_bessel_k order must lie in [0, {MAX_ORDER}], got {nu}"
        ));
    }
    if z > UNDERFLOW_ARG {
        return Ok((nu * z.ln() - z).exp() * (std::f64::consts::PI / (2.0 * z)).sqrt());
    }
    let steps = (nu + 0.5).floor();
    let mu = nu - steps;
    let (k_mu, k_mu1) = if z < SERIES_SWITCH {
        temme_series(mu, z)
    } else {
        steed_fraction(mu, z)
    };
    let zmu = z.powf(mu);
    let mut lo = zmu * k_mu;
    let mut hi = zmu * z * k_mu1;
    let z2 = z * z;
    for i in 1..=(steps as usize) {
        let next = 2.0 * (mu + i as f64) * hi + z2 * lo;
        lo = hi;
        hi = next;
    }
    Ok(lo)
}

fn temme_series(mu: f64, z: f64) -> (f64, f64) {
    let half = 0.5 * z;
    let pimu = PI * mu;
    let fact = if pimu.abs() < EPS {
        1.0
    } else {
        pimu / pimu.sin()
    };
    let d = -half.ln();
    let e = mu * d;
    let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
    let (g1, g2) = temme_gammas(mu);
    let gampl = recip_gamma_1p(mu);
    let gammi = recip_gamma_1p(-mu);

    let mut ff = fact * (g1 * e.cosh() + g2 * fact2 * d);
    let mut sum = ff;
    let ee = e.exp();
    let mut p = 0.5 * ee / gampl;
    let mut q = 0.5 / (ee * gammi);
    let mut c = 1.0;
    let dd = half * half;
    let mut sum1 = p;
    let mu2 = mu * mu;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        c *= dd / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        sum1 += c * (p - fi * ff);
        if del.abs() < sum.abs() * EPS {
            break;
        }
    }
    (sum, sum1 * 2.0 / z)
}

fn steed_fraction(mu: f64, z: f64) -> (f64, f64) {
    let mu2 = mu * mu;
    let mut b = 2.0 * (1.0 + z);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu2;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    let h = a1 * h;
    let k_mu = (PI / (2.0 * z)).sqrt() * (-z).exp() / s;
    let k_mu1 = k_mu * (mu + z + 0.5 - h) / z;
    (k_mu, k_mu1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn k_half(z: f64) -> f64 {
        (PI / (2.0 * z)).sqrt() * (-z).exp()
    }

    /// `K_ν(z) = ∫_0^∞ exp(-z cosh t) cosh(ν t) dt` by the trapezoidal
    /// rule, which converges geometrically for this analytic integrand.
    fn integral_oracle(nu: f64, z: f64) -> f64 {
        let h: f64 = 1e-3;
        let mut sum = 0.5 * (-z).exp();
        let mut t = h;
        loop {
            let term = (-z * t.cosh() + nu * t).exp() * 0.5 + (-z * t.cosh() - nu * t).exp() * 0.5;
            sum += term;
            if term < 1e-30 * sum {
                break;
            }
            t += h;
        }
        sum * h
    }

    #[test]
    fn reference_values() {
        // mpmath besselk, 20 digits
        let cases = [
            (0.0, 1.0, 0.421_024_438_240_708_333_34),
            (1.0, 1.0, 0.601_907_230_197_234_574_74),
            (0.5, 1.0, 0.461_068_504_447_894_558_44),
            (2.5, 1.7, 0.667_781_999_611_739_778_81),
            (0.25, 0.001, 11.756_476_271_934_458_578),
            (3.3, 5.0, 0.009_791_521_116_214_422_675_1),
            (10.0, 2.0, 162_482.403_979_559_148_72),
            (0.0, 1e-6, 13.931_442_073_626_419_459),
            (1.0, 30.0, 2.167_732_001_891_549_424_9e-14),
            (7.5, 0.3, 1_409_014_685.658_704_201_7),
            (60.0, 30.0, 46_713_096.235_994_666_998),
            (60.0, 1.0, 7.960_735_226_220_904_711_1e97),
            (0.1, 20.0, 5.742_639_211_877_088_965_5e-10),
            (4.0, 1e-3, 47_999_996_000_000.246_003),
            (0.3, 2.0, 0.116_036_974_348_119_258_36),
            (0.3, 2.01, 0.114_612_257_516_909_909_21),
            (1.7, 12.0, 2.470_628_911_710_812_105_7e-6),
        ];
        for (nu, z, want) in cases {
            let got = bessel_k(nu, z).unwrap();
            assert!(rel(got, want) < 1e-10, "K_{nu}({z}) = {got}, want {want}");
        }
    }

    #[test]
    fn closed_form_half_order() {
        assert!(rel(bessel_k(0.5, 1.0).unwrap(), 0.461_068_504_447_894_56) < 1e-12);
        let mut z = 1e-4;
        while z <= 30.0 {
            assert!(rel(bessel_k(0.5, z).unwrap(), k_half(z)) < 1e-10, "z = {z}");
            z *= 1.07;
        }
    }

    #[test]
    fn symmetric_in_order() {
        for &nu in &[0.5, 1.0, 2.3, 7.0, 13.75] {
            for &z in &[0.01, 1.0, 5.0] {
                assert_eq!(bessel_k(nu, z).unwrap(), bessel_k(-nu, z).unwrap());
            }
        }
    }

    #[test]
    fn recurrence_oracle() {
        let z = 1.7;
        let lhs = bessel_k(2.5, z).unwrap();
        let rhs = bessel_k(0.5, z).unwrap() + (2.0 * 1.5 / z) * bessel_k(1.5, z).unwrap();
        assert!(rel(lhs, rhs) < 1e-9);
    }

    #[test]
    fn agrees_with_integral_representation() {
        for &nu in &[0.0, 0.2, 0.5, 1.0, 1.5, 2.0, 3.7, 6.0] {
            for &z in &[0.05, 0.5, 1.99, 2.0, 2.01, 4.0, 15.0] {
                let want = integral_oracle(nu, z);
                let got = bessel_k(nu, z).unwrap();
                assert!(rel(got, want) < 1e-11, "K_{nu}({z}): {got} vs {want}");
            }
        }
    }

    #[test]
    fn branches_meet_at_switch() {
        for &mu in &[-0.5, -0.3, 0.0, 0.1, 0.49] {
            let (a0, a1) = temme_series(mu, SERIES_SWITCH);
            let (b0, b1) = steed_fraction(mu, SERIES_SWITCH);
            assert!(rel(a0, b0) < 1e-13 && rel(a1, b1) < 1e-13, "mu = {mu}");
        }
    }

    #[test]
    fn scaled_form() {
        for &nu in &[0.0, 0.3, 1.0, 2.5, 17.25, 60.0] {
            for &z in &[1e-3, 0.7, 3.0, 40.0] {
                let k = bessel_k(nu, z).unwrap();
                if k.is_finite() && z.powf(nu).is_finite() {
                    let want = z.powf(nu) * k;
                    assert!(
                        rel(scaled_bessel_k(nu, z).unwrap(), want) < 1e-12,
                        "nu {nu} z {z}"
                    );
                }
            }
        }
        // small-argument limit 2^{ν-1} Γ(ν)
        let lim = 2f64.powf(39.0) * crate::specfun::gamma(40.0).unwrap();
        assert!(rel(scaled_bessel_k(40.0, 1e-9).unwrap(), lim) < 1e-12);
        assert!(scaled_bessel_k(60.0, 1e-8).unwrap().is_finite());
    }

    #[test]
    fn domain_and_underflow() {
        assert!(bessel_k(1.0, 0.0).is_err());
        assert!(bessel_k(1.0, -3.0).is_err());
        assert!(bessel_k(61.0, 1.0).is_err());
        assert_eq!(bessel_k(2.0, 701.0).unwrap(), 0.0);
        assert!(bessel_k(0.0, 700.0).unwrap() > 0.0);
    }
}
