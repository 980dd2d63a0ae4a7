use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::exponent::{holder_conjugate, Exponent, Rational};
use crate::error::{Error, Result};

/// Parameters `(d, u, p, v, q, s)` of a candidate pair with kernel `K_s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairQuery {
    pub d: u32,
    pub u: Rational,
    pub p: Exponent,
    pub v: Rational,
    pub q: Exponent,
    pub s: Rational,
}

impl PairQuery {
    pub fn new(
        d: u32,
        u: Rational,
        p: Exponent,
        v: Rational,
        q: Exponent,
        s: Rational,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("dimension must be a positive integer".into()));
        }
        for (name, x) in [("u", &u), ("v", &v), ("s", &s)] {
            if !x.is_positive() {
                return Err(Error::Domain(format!("{name} must be positive, got {x}")));
            }
        }
        Ok(Self { d, u, p, v, q, s })
    }

    /// Builds a query from textual rationals in the order `u, p, v, q, s`.
    pub fn parse(d: u32, u: &str, p: &str, v: &str, q: &str, s: &str) -> Result<Self> {
        Self::new(
            d,
            u.parse()?,
            p.parse()?,
            v.parse()?,
            q.parse()?,
            s.parse()?,
        )
    }

    /// The same query with the two spaces exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            d: self.d,
            u: self.v.clone(),
            p: self.q.clone(),
            v: self.u.clone(),
            q: self.p.clone(),
            s: self.s.clone(),
        }
    }

    pub(crate) fn dim(&self) -> Rational {
        Rational::integer(self.d as i64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionId {
    DualExponent,
    UWindow,
    VWindow,
    SumCondition,
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConditionId::DualExponent => "dual-exponent",
            ConditionId::UWindow => "u-window",
            ConditionId::VWindow => "v-window",
            ConditionId::SumCondition => "sum-condition",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    SatisfiedStrict,
    SatisfiedEquality,
    Violated,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::SatisfiedStrict => "satisfied-strict",
            Status::SatisfiedEquality => "satisfied-equality",
            Status::Violated => "violated",
        })
    }
}

/// One side of an inequality. A `strict` bound is violated by equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub value: Rational,
    pub strict: bool,
}

/// An evaluated inequality `lower (<|<=) value (<|<=) upper`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub id: ConditionId,
    pub relation: String,
    pub value: Rational,
    pub lower: Option<Bound>,
    pub upper: Option<Bound>,
    pub status: Status,
    /// Equality is not enough for this condition in the present query.
    pub strict_required: bool,
    pub holds: bool,
}

impl Condition {
    fn evaluate(
        id: ConditionId,
        relation: impl Into<String>,
        value: Rational,
        lower: Option<Bound>,
        upper: Option<Bound>,
        strict_required: bool,
    ) -> Self {
        let side = |ord: Ordering, strict: bool| match ord {
            Ordering::Greater => Status::SatisfiedStrict,
            Ordering::Equal if strict => Status::Violated,
            Ordering::Equal => Status::SatisfiedEquality,
            Ordering::Less => Status::Violated,
        };
        let mut sides = Vec::new();
        if let Some(b) = &lower {
            sides.push(side(value.cmp(&b.value), b.strict));
        }
        if let Some(b) = &upper {
            sides.push(side(b.value.cmp(&value), b.strict));
        }
        let status = if sides.contains(&Status::Violated) {
            Status::Violated
        } else if sides.contains(&Status::SatisfiedEquality) {
            Status::SatisfiedEquality
        } else {
            Status::SatisfiedStrict
        };
        let holds = match status {
            Status::SatisfiedStrict => true,
            Status::SatisfiedEquality => !strict_required,
            Status::Violated => false,
        };
        Self {
            id,
            relation: relation.into(),
            value,
            lower,
            upper,
            status,
            strict_required,
            holds,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = |strict: bool| if strict { "<" } else { "<=" };
        write!(
            f,
            "{:<14} {:<20} ",
            self.id.to_string(),
            self.status.to_string()
        )?;
        if let Some(b) = &self.lower {
            write!(f, "{} {} ", b.value, op(b.strict))?;
        }
        write!(f, "{}", self.value)?;
        if let Some(b) = &self.upper {
            write!(f, " {} {}", op(b.strict), b.value)?;
        }
        write!(f, "   [{}]", self.relation)?;
        if self.strict_required && self.status == Status::SatisfiedEquality {
            write!(f, " (strict inequality required)")?;
        }
        Ok(())
    }
}

/// Outcome of a pair or self-pair check with every condition evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub admissible: bool,
    pub query: PairQuery,
    /// Set when `p` or `q` is infinite; the conditions then use `1/inf = 0` unchanged.
    pub endpoint_case: bool,
    pub conditions: Vec<Condition>,
}

impl Verdict {
    fn from_conditions(query: PairQuery, conditions: Vec<Condition>) -> Self {
        let endpoint_case = query.p.is_infinite() || query.q.is_infinite();
        let admissible = conditions.iter().all(|c| c.holds);
        Self {
            admissible,
            query,
            endpoint_case,
            conditions,
        }
    }

    pub fn condition(&self, id: ConditionId) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.id == id)
    }

    pub fn failing(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.holds)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.query;
        writeln!(
            f,
            "H^{{{},{}}} x H^{{{},{}}} on R^{} with kernel K_{}: {}",
            q.u,
            q.p,
            q.v,
            q.q,
            q.d,
            q.s,
            if self.admissible {
                "admissible"
            } else {
                "not admissible"
            }
        )?;
        if self.endpoint_case {
            writeln!(f, "  (endpoint case: an exponent is infinite)")?;
        }
        for c in &self.conditions {
            writeln!(f, "  {c}")?;
        }
        Ok(())
    }
}

fn open(value: Rational) -> Option<Bound> {
    Some(Bound {
        value,
        strict: true,
    })
}

fn closed(value: Rational) -> Option<Bound> {
    Some(Bound {
        value,
        strict: false,
    })
}

fn window(
    id: ConditionId,
    name: &str,
    d: &Rational,
    x: &Rational,
    r: &Exponent,
    s: &Rational,
) -> Condition {
    let e = if id == ConditionId::UWindow { "p" } else { "q" };
    let lo = d * &r.reciprocal();
    let hi = &(&Rational::integer(2) * s) - &(d * &holder_conjugate(r).reciprocal());
    Condition::evaluate(
        id,
        format!("d/{e} < {name} < 2s - d/{e}'"),
        x.clone(),
        open(lo),
        open(hi),
        false,
    )
}

/// Decides whether `H^{u,p}` and `H^{v,q}` form an RKBS pair with kernel `K_s`.
pub fn rkbs_pair_check(query: &PairQuery) -> Verdict {
    let one = Rational::one();
    let d = query.dim();
    let recip_sum = &query.p.reciprocal() + &query.q.reciprocal();
    let dual = Condition::evaluate(
        ConditionId::DualExponent,
        "1/p + 1/q >= 1",
        recip_sum.clone(),
        closed(one.clone()),
        None,
        false,
    );
    let u_window = window(ConditionId::UWindow, "u", &d, &query.u, &query.p, &query.s);
    let v_window = window(ConditionId::VWindow, "v", &d, &query.v, &query.q, &query.s);
    let strict =
        (query.p.is_one() || query.q.is_one()) && !(query.p.is_infinite() || query.q.is_infinite());
    let rhs = &(&Rational::integer(2) * &query.s) + &(&d * &(&recip_sum - &one));
    let sum = Condition::evaluate(
        ConditionId::SumCondition,
        "u + v >= 2s + d(1/p + 1/q - 1)",
        &query.u + &query.v,
        closed(rhs),
        None,
        strict,
    );
    Verdict::from_conditions(query.clone(), vec![dual, u_window, v_window, sum])
}

/// Decides whether `H^{u,p}` forms an RKBS pair with itself under `K_s`.
pub fn self_pair_check(d: u32, u: &Rational, p: &Exponent, s: &Rational) -> Result<Verdict> {
    let query = PairQuery::new(d, u.clone(), p.clone(), u.clone(), p.clone(), s.clone())?;
    let dd = query.dim();
    let two = Rational::integer(2);
    let dual = Condition::evaluate(
        ConditionId::DualExponent,
        "p <= 2  (2/p >= 1)",
        &two * &p.reciprocal(),
        closed(Rational::one()),
        None,
        false,
    );
    let u_window = window(ConditionId::UWindow, "u", &dd, u, p, s);
    let rhs = &(&two * s) + &(&dd * &(&(&two * &p.reciprocal()) - &Rational::one()));
    let sum = Condition::evaluate(
        ConditionId::SumCondition,
        "2u >= 2s + d(2/p - 1)",
        &two * u,
        closed(rhs),
        None,
        p.is_one(),
    );
    Ok(Verdict::from_conditions(query, vec![dual, u_window, sum]))
}

/// `H^{s,p}(R^d)` is an RKBS iff `s > d/p`.
pub fn rkbs_space_check(d: u32, s: &Rational, p: &Exponent) -> bool {
    *s > &Rational::integer(d as i64) * &p.reciprocal()
}

/// `G_s` lies in `L^{p'}(R^d)` iff `s > d/p`.
pub fn integrability_check(d: u32, s: &Rational, p: &Exponent) -> bool {
    rkbs_space_check(d, s, p)
}

/// Decides whether an admissible pair is a norming pair: `p = q'`,
/// `u + v = 2s` and the pair check passes. Only defined for `p, q` in `(1, inf)`.
pub fn norming_check(query: &PairQuery) -> Result<bool> {
    if !query.p.is_interior() || !query.q.is_interior() {
        return Err(Error::NotApplicable(format!(
            "norming pairs are characterised for 1 < p, q < inf, got p = {}, q = {}",
            query.p, query.q
        )));
    }
    let conjugate = query.p == holder_conjugate(&query.q);
    let balanced = &query.u + &query.v == &Rational::integer(2) * &query.s;
    Ok(conjugate && balanced && rkbs_pair_check(query).admissible)
}

/// Continuous embedding `H^{u,p} -> H^{v,q}`: `p <= q` and `u - d/p >= v - d/q`.
pub fn embedding_check(
    d: u32,
    u: &Rational,
    p: &Exponent,
    v: &Rational,
    q: &Exponent,
) -> Result<bool> {
    if !p.is_interior() || !q.is_interior() {
        return Err(Error::NotApplicable(format!(
            "the embedding characterisation needs 1 < p, q < inf, got p = {p}, q = {q}"
        )));
    }
    let d = Rational::integer(d as i64);
    let lhs = u - &(&d * &p.reciprocal());
    let rhs = v - &(&d * &q.reciprocal());
    Ok(p <= q && lhs >= rhs)
}

/// `l^p` and `l^q` form an RKBS pair with the diagonal kernel iff `1/p + 1/q >= 1`.
pub fn sequence_pair_check(p: &Exponent, q: &Exponent) -> bool {
    &p.reciprocal() + &q.reciprocal() >= Rational::one()
}
