//! Decide admissibility of a few pairs `H^{u,p} x H^{v,q}` for the kernel
//! `K_s`, printing the full condition table for each.
//!
//! Pass `d u p v q s` on the command line to check a pair of your own:
//!
//! ```text
//! cargo run --example check_pair -- 1 2 1 2 1 5/4
//! ```

use bessel_rkbs::admissibility::{rkbs_pair_check, self_pair_check, PairQuery};

fn main() -> bessel_rkbs::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let queries = if args.len() == 6 {
        let d = args[0]
            .parse()
            .map_err(|_| bessel_rkbs::Error::Parse(format!("bad dimension {}", args[0])))?;
        vec![PairQuery::parse(
            d, &args[1], &args[2], &args[3], &args[4], &args[5],
        )?]
    } else {
        [
            ("3", "2", "3", "2", "2"),
            ("2", "1", "2", "1", "5/4"),
            ("2", "1", "2", "1", "3/2"),
            ("3", "1", "2", "2", "2"),
            ("3", "2", "3", "2", "4"),
        ]
        .iter()
        .map(|(u, p, v, q, s)| PairQuery::parse(1, u, p, v, q, s))
        .collect::<Result<_, _>>()?
    };

    for query in &queries {
        let verdict = rkbs_pair_check(query);
        println!("{verdict}");
        if !verdict.admissible {
            let ids: Vec<String> = verdict.failing().map(|c| c.id.to_string()).collect();
            println!("  fails: {}\n", ids.join(", "));
        }
    }

    // A single space paired with itself.
    let q = &queries[0];
    let self_pair = self_pair_check(q.d, &q.u, &q.p, &q.s)?;
    println!(
        "H^{{{},{}}} paired with itself for s = {}: {}",
        q.u,
        q.p,
        q.s,
        if self_pair.admissible {
            "admissible"
        } else {
            "not admissible"
        }
    );
    Ok(())
}
