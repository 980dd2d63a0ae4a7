//! Gamma function for real positive arguments.

use std::f64::consts::PI;

use crate::error::{domain, Result};

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Taylor coefficients of `1 / Γ(1 + x)` around `x = 0`.
const RECIP_GAMMA_1P: [f64; 27] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
];

fn lanczos(x: f64) -> f64 {
    // valid for x >= 0.5
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * (t.ln() * (x + 0.5) - t).exp() * acc
}

/// `Γ(x)` for `x > 0`.
pub fn gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!(
            "gamma requires a finite positive argument, got {x}"
        ));
    }
    Ok(gamma_unchecked(x))
}

pub(crate) fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        PI / ((PI * x).sin() * lanczos(1.0 - x))
    } else {
        lanczos(x)
    }
}

/// `ln Γ(x)` for `x > 0`, usable far beyond the overflow point of [`gamma`].
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!(
            "ln_gamma requires a finite positive argument, got {x}"
        ));
    }
    if x < 0.5 {
        return Ok(PI.ln() - (PI * x).sin().ln() - ln_gamma(1.0 - x)?);
    }
    let y = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (y + i as f64);
    }
    let t = y + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * PI).ln() + (y + 0.5) * t.ln() - t + acc.ln())
}

/// `1 / Γ(1 + x)` by its Taylor series; accurate for `|x| <= 1/2`.
pub(crate) fn recip_gamma_1p(x: f64) -> f64 {
    RECIP_GAMMA_1P.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Temme's auxiliary functions
/// `Γ₁(μ) = (1/Γ(1-μ) - 1/Γ(1+μ)) / (2μ)` and
/// `Γ₂(μ) = (1/Γ(1-μ) + 1/Γ(1+μ)) / 2`, evaluated from the even and odd
/// parts of the series so that `μ → 0` loses no precision.
pub(crate) fn temme_gammas(mu: f64) -> (f64, f64) {
    let mu2 = mu * mu;
    let mut odd = 0.0;
    let mut even = 0.0;
    for (k, c) in RECIP_GAMMA_1P.iter().enumerate().rev() {
        if k % 2 == 1 {
            odd = odd * mu2 + c;
        } else {
            even = even * mu2 + c;
        }
    }
    (-odd, even)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn factorials_and_half_integers() {
        assert!(rel(gamma(1.0).unwrap(), 1.0) < 1e-15);
        assert!(rel(gamma(0.5).unwrap(), PI.sqrt()) < 1e-14);
        assert!(rel(gamma(5.0).unwrap(), 24.0) < 1e-14);
        let mut fact = 1.0;
        for n in 1..30 {
            assert!(rel(gamma(n as f64).unwrap(), fact) < 1e-13, "n = {n}");
            fact *= n as f64;
        }
        assert!(rel(gamma(1.5).unwrap(), PI.sqrt() / 2.0) < 1e-14);
    }

    #[test]
    fn matches_reference_values() {
        // mpmath, 30 digits
        let cases = [
            (0.05, 19.470_085_311_255_511_756),
            (0.3, 2.991_568_987_687_590_744_6),
            (2.7, 1.544_685_845_850_593_983_6),
            (13.25, 902_965_985.822_931_876_36),
            (50.0, 6.082_818_640_342_675_608_7e62),
        ];
        for (x, want) in cases {
            assert!(rel(gamma(x).unwrap(), want) < 1e-12, "gamma({x})");
            assert!(
                (ln_gamma(x).unwrap() - want.ln()).abs() < 1e-12,
                "ln_gamma({x})"
            );
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(gamma(0.0).is_err());
        assert!(gamma(-1.5).is_err());
        assert!(gamma(f64::NAN).is_err());
        assert!(ln_gamma(-2.0).is_err());
    }

    #[test]
    fn series_agrees_with_lanczos() {
        for i in -50..=50 {
            let x = i as f64 / 100.0;
            let want = 1.0 / gamma_unchecked(1.0 + x);
            assert!((recip_gamma_1p(x) - want).abs() < 1e-14, "x = {x}");
        }
    }

    #[test]
    fn temme_gammas_limits() {
        let (g1, g2) = temme_gammas(0.0);
        assert!((g1 + 0.577_215_664_901_532_9).abs() < 1e-15);
        assert_eq!(g2, 1.0);
        let mu = 0.3;
        let (g1, g2) = temme_gammas(mu);
        let a = 1.0 / gamma_unchecked(1.0 - mu);
        let b = 1.0 / gamma_unchecked(1.0 + mu);
        assert!((g1 - (a - b) / (2.0 * mu)).abs() < 1e-13);
        assert!((g2 - (a + b) / 2.0).abs() < 1e-14);
    }
}
