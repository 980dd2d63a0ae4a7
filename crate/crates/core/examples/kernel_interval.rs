//! The set of kernel orders `s` for which `K_s` reproduces a fixed pair,
//! cross-checked against the pair predicate on a grid of rationals.

use bessel_rkbs::admissibility::{
    consistency_sweep, kernel_interval, rkbs_pair_check, Exponent, PairQuery, Rational,
};

fn main() -> bessel_rkbs::Result<()> {
    let pairs = [
        (1, "3", "2", "3", "2"),
        (1, "2", "1", "2", "1"),
        (2, "5/2", "3/2", "3", "inf"),
        (4, "1", "2", "1", "2"),
    ];
    for (d, u, p, v, q) in pairs {
        let (u, p, v, q): (Rational, Exponent, Rational, Exponent) =
            (u.parse()?, p.parse()?, v.parse()?, q.parse()?);
        let interval = kernel_interval(d, &u, &p, &v, &q)?;
        println!("d={d}  H^{{{u},{p}}} x H^{{{v},{q}}}  ->  s in {interval}");

        // every s = k/8 in [0, 4] agrees with the predicate
        for k in 1..=32 {
            let s = Rational::new(k, 8);
            let query = PairQuery::new(d, u.clone(), p.clone(), v.clone(), q.clone(), s.clone())?;
            assert_eq!(interval.contains(&s), rkbs_pair_check(&query).admissible);
        }
    }

    let report = consistency_sweep(2024, 2_000);
    println!(
        "\nrandom sweep: {} queries, {} admissible, {} on an endpoint, {} discrepancies",
        report.cases,
        report.admissible,
        report.boundary_cases,
        report.discrepancies.len()
    );
    Ok(())
}
