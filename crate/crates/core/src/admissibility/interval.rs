use std::fmt;

use serde::{Deserialize, Serialize};

use super::checks::{rkbs_pair_check, PairQuery};
use super::exponent::{holder_conjugate, Exponent, Rational};
use crate::error::Result;

/// The set of kernel orders `s` for which a fixed pair is admissible:
/// `(lower, upper]`, or `(lower, upper)` when `upper_strict`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelInterval {
    pub lower: Rational,
    pub upper: Rational,
    pub upper_strict: bool,
    /// Set when no `s` is admissible, either because `lower >= upper` or
    /// because a condition that does not involve `s` already fails.
    pub empty: bool,
}

impl KernelInterval {
    pub fn contains(&self, s: &Rational) -> bool {
        if self.empty || *s <= self.lower {
            return false;
        }
        if self.upper_strict {
            *s < self.upper
        } else {
            *s <= self.upper
        }
    }
}

impl fmt::Display for KernelInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let close = if self.upper_strict { ')' } else { ']' };
        write!(f, "({}, {}{close}", self.lower, self.upper)?;
        if self.empty {
            write!(f, " empty")?;
        }
        Ok(())
    }
}

/// All `s` for which `H^{u,p}, H^{v,q}` is an RKBS pair with kernel `K_s`.
pub fn kernel_interval(
    d: u32,
    u: &Rational,
    p: &Exponent,
    v: &Rational,
    q: &Exponent,
) -> Result<KernelInterval> {
    // validates u, v > 0 with a dummy order
    let probe = PairQuery::new(
        d,
        u.clone(),
        p.clone(),
        v.clone(),
        q.clone(),
        Rational::one(),
    )?;
    let dd = probe.dim();
    let half = Rational::new(1, 2);
    let a = u + &(&dd * &holder_conjugate(p).reciprocal());
    let b = v + &(&dd * &holder_conjugate(q).reciprocal());
    let lower = &half * &a.max(b);
    let excess = &(&p.reciprocal() + &q.reciprocal()) - &Rational::one();
    let upper = &half * &(&(u + v) - &(&dd * &excess));
    let upper_strict = (p.is_one() || q.is_one()) && !(p.is_infinite() || q.is_infinite());

    let fixed = rkbs_pair_check(&probe);
    let s_free_ok =
        fixed.conditions[0].holds && *u > &dd * &p.reciprocal() && *v > &dd * &q.reciprocal();
    let degenerate = lower >= upper;
    Ok(KernelInterval {
        lower,
        upper,
        upper_strict,
        empty: degenerate || !s_free_ok,
    })
}
