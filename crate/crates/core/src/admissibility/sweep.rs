use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::checks::{rkbs_pair_check, PairQuery};
use super::exponent::{Exponent, Rational};
use super::interval::kernel_interval;

/// Result of comparing interval membership against the direct pair check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub seed: u64,
    pub cases: usize,
    pub admissible: usize,
    pub boundary_cases: usize,
    pub discrepancies: Vec<PairQuery>,
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(1..=48), rng.gen_range(1..=8))
}

fn random_exponent(rng: &mut impl Rng) -> Exponent {
    match rng.gen_range(0..6) {
        0 => Exponent::Infinite,
        1 => Exponent::integer(1).unwrap(),
        2 => Exponent::integer(2).unwrap(),
        _ => {
            let den = rng.gen_range(1..=6);
            Exponent::finite(Rational::new(den + rng.gen_range(1..=18), den)).unwrap()
        }
    }
}

/// A random query whose `s` is drawn either freely or from the endpoints of
/// its kernel interval, so that boundary cases are well represented.
pub fn random_query(rng: &mut impl Rng) -> PairQuery {
    let d = rng.gen_range(1..=4);
    let (u, p, v, q) = (
        random_rational(rng),
        random_exponent(rng),
        random_rational(rng),
        random_exponent(rng),
    );
    let interval = kernel_interval(d, &u, &p, &v, &q).expect("positive u, v");
    let s = match rng.gen_range(0..4) {
        0 => interval.lower.clone(),
        1 => interval.upper.clone(),
        2 => {
            &interval.lower
                + &(&(&interval.upper - &interval.lower) * &Rational::new(rng.gen_range(1..16), 16))
        }
        _ => random_rational(rng),
    };
    let s = if s.is_positive() {
        s
    } else {
        [Rational::new(1, 7), Rational::one()]
            .choose(rng)
            .unwrap()
            .clone()
    };
    PairQuery::new(d, u, p, v, q, s).expect("valid random query")
}

/// Checks `s in kernel_interval(..) <=> rkbs_pair_check(..).admissible` on
/// `cases` seeded random queries.
pub fn consistency_sweep(seed: u64, cases: usize) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SweepReport {
        seed,
        cases,
        admissible: 0,
        boundary_cases: 0,
        discrepancies: Vec::new(),
    };
    for _ in 0..cases {
        let query = random_query(&mut rng);
        let interval =
            kernel_interval(query.d, &query.u, &query.p, &query.v, &query.q).expect("valid");
        let admissible = rkbs_pair_check(&query).admissible;
        report.admissible += admissible as usize;
        report.boundary_cases += (query.s == interval.lower || query.s == interval.upper) as usize;
        if interval.contains(&query.s) != admissible {
            report.discrepancies.push(query);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_agrees_with_pair_check() {
        let report = consistency_sweep(2024, 10_000);
        assert!(
            report.discrepancies.is_empty(),
            "{:?}",
            &report.discrepancies[..1]
        );
        assert!(report.admissible > 500, "{}", report.admissible);
        assert!(report.boundary_cases > 2000);
    }

    #[test]
    fn deterministic() {
        assert_eq!(consistency_sweep(5, 200), consistency_sweep(5, 200));
    }
}
