//! Exact lower bounds on k-planar crossing numbers of complete and complete
//! bipartite graphs.
//!
//! Everything here is exact: values are integers or [`Rational`]s and the
//! only rounding is an explicit ceiling. Bounds come from three sources:
//! linear density bounds (optionally lifted to `k` planes), the counting
//! method that pushes a bound from a subgraph to a host graph, and
//! closed-form scaling. [`best_lower_bound`] combines all of them and
//! returns a [`BoundCertificate`] that [`verify_certificate`] can replay.

mod certificate;
mod chains;
mod estimates;
mod search;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use certificate::{
    chain_certificate, kplanar_seed_bound, verify_certificate, BoundCertificate, ChainMode, Step,
    StepOp, Verdict,
};
pub use chains::{bipartite_chain, complete_chain, counting_step, scale_bipartite, scale_complete};
pub use estimates::{approx_factor_table, cstar_lower, upper_bound_estimate, FactorRow};
pub use search::{best_lower_bound, SEARCH_CAP};

pub type Rational = BigRational;

/// Largest accepted side size or vertex count.
pub const MAX_PARAM: u64 = 1 << 32;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `"num/den"`, or just `"num"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"num/den"` or `"num"`. Non-canonical spellings such as `"2/4"`
/// are accepted and reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Refused(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub(crate) fn ceil_nonneg(r: &Rational) -> u128 {
    if r.is_negative() {
        return 0;
    }
    r.ceil()
        .to_integer()
        .to_u128()
        .expect("bound value exceeds 128 bits")
}

/// The two graph families bounds are computed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Complete,
    Bipartite,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Complete => "complete",
            Family::Bipartite => "bipartite",
        })
    }
}

/// A concrete target graph: `K_n` or `K_{p,q}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Instance {
    Complete(u64),
    Bipartite(u64, u64),
}

impl Instance {
    pub fn family(&self) -> Family {
        match self {
            Instance::Complete(_) => Family::Complete,
            Instance::Bipartite(..) => Family::Bipartite,
        }
    }

    pub fn params(&self) -> Vec<u64> {
        match *self {
            Instance::Complete(n) => vec![n],
            Instance::Bipartite(p, q) => vec![p, q],
        }
    }

    pub fn from_params(family: Family, params: &[u64]) -> Result<Instance> {
        match (family, params) {
            (Family::Complete, &[n]) => Ok(Instance::Complete(n)),
            (Family::Bipartite, &[p, q]) => Ok(Instance::Bipartite(p, q)),
            _ => Err(Error::Refused(format!(
                "{family} family takes {} parameter(s), got {}",
                if family == Family::Complete { 1 } else { 2 },
                params.len()
            ))),
        }
    }

    /// Refuses parameters above [`MAX_PARAM`], which keeps every bound
    /// and intermediate value within 128 bits.
    pub fn check_size(&self) -> Result<()> {
        match self.params().into_iter().find(|&x| x > MAX_PARAM) {
            Some(x) => Err(Error::Refused(format!(
                "{self}: parameter {x} exceeds {MAX_PARAM}"
            ))),
            None => Ok(()),
        }
    }

    pub fn vertices(&self) -> u64 {
        match *self {
            Instance::Complete(n) => n,
            Instance::Bipartite(p, q) => p + q,
        }
    }

    pub fn edges(&self) -> u128 {
        match *self {
            Instance::Complete(n) => u128::from(n) * u128::from(n.saturating_sub(1)) / 2,
            Instance::Bipartite(p, q) => u128::from(p) * u128::from(q),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Complete(n) => write!(f, "K_{n}"),
            Instance::Bipartite(p, q) => write!(f, "K_{{{p},{q}}}"),
        }
    }
}

/// Graph class a density bound holds for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Applicability {
    Simple,
    Bipartite,
}

impl Applicability {
    pub fn covers(&self, family: Family) -> bool {
        matches!(
            (self, family),
            (Applicability::Simple, _) | (Applicability::Bipartite, Family::Bipartite)
        )
    }
}

/// The named single-plane density bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// `m - 3n + 6`
    Euler,
    /// `m - 2n + 4`, also the first bipartite cascade tier
    EulerBipartite,
    /// `2m - 5n + 12`
    CascadeTier2,
    /// `3m - 8.5n + 19`
    CascadeTier3,
    /// `5m - (139/6)(n - 2)`
    Ackerman,
}

impl BoundKind {
    pub const ALL: [BoundKind; 5] = [
        BoundKind::Euler,
        BoundKind::EulerBipartite,
        BoundKind::CascadeTier2,
        BoundKind::CascadeTier3,
        BoundKind::Ackerman,
    ];

    /// Smallest vertex count the bound is stated for.
    pub fn min_vertices(&self) -> u64 {
        match self {
            BoundKind::Euler | BoundKind::EulerBipartite | BoundKind::Ackerman => 3,
            BoundKind::CascadeTier2 | BoundKind::CascadeTier3 => 4,
        }
    }
}

/// The statement `cr_k(G) >= slope*m - vertex_coeff*n + constant` for every
/// graph `G` in the class, with `k = planes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearBound {
    kind: BoundKind,
    slope: Rational,
    vertex_coeff: Rational,
    constant: Rational,
    applicability: Applicability,
    planes: u64,
    lifted: bool,
}

impl LinearBound {
    pub fn new(kind: BoundKind) -> Self {
        let (slope, vc, c, applicability) = match kind {
            BoundKind::Euler => (
                rational(1, 1),
                rational(3, 1),
                rational(6, 1),
                Applicability::Simple,
            ),
            BoundKind::EulerBipartite => (
                rational(1, 1),
                rational(2, 1),
                rational(4, 1),
                Applicability::Bipartite,
            ),
            BoundKind::CascadeTier2 => (
                rational(2, 1),
                rational(5, 1),
                rational(12, 1),
                Applicability::Bipartite,
            ),
            BoundKind::CascadeTier3 => (
                rational(3, 1),
                rational(17, 2),
                rational(19, 1),
                Applicability::Bipartite,
            ),
            BoundKind::Ackerman => (
                rational(5, 1),
                rational(139, 6),
                rational(139, 3),
                Applicability::Simple,
            ),
        };
        LinearBound {
            kind,
            slope,
            vertex_coeff: vc,
            constant: c,
            applicability,
            planes: 1,
            lifted: false,
        }
    }

    pub fn euler() -> Self {
        Self::new(BoundKind::Euler)
    }

    pub fn euler_bipartite() -> Self {
        Self::new(BoundKind::EulerBipartite)
    }

    /// Tiers 1 to 3 of the bipartite cascade.
    pub fn cascade_tiers() -> [Self; 3] {
        [
            Self::new(BoundKind::EulerBipartite),
            Self::new(BoundKind::CascadeTier2),
            Self::new(BoundKind::CascadeTier3),
        ]
    }

    pub fn ackerman() -> Self {
        Self::new(BoundKind::Ackerman)
    }

    pub fn kind(&self) -> BoundKind {
        self.kind
    }

    pub fn slope(&self) -> &Rational {
        &self.slope
    }

    pub fn vertex_coeff(&self) -> &Rational {
        &self.vertex_coeff
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn applicability(&self) -> Applicability {
        self.applicability
    }

    pub fn planes(&self) -> u64 {
        self.planes
    }

    pub fn is_lifted(&self) -> bool {
        self.lifted
    }

    /// `slope*m - vertex_coeff*n + constant`, unclamped.
    pub fn evaluate(&self, n: u64, m: u128) -> Rational {
        let n = Rational::from_integer(n.into());
        let m = Rational::from_integer(m.into());
        &self.slope * m - &self.vertex_coeff * n + &self.constant
    }

    /// `max(0, ceil(evaluate(n, m)))`.
    pub fn ceil_at(&self, n: u64, m: u128) -> u128 {
        ceil_nonneg(&self.evaluate(n, m))
    }
}

impl fmt::Display for LinearBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cr = if self.planes == 1 {
            "cr".to_string()
        } else {
            format!("cr_{}", self.planes)
        };
        let coeff = |r: &Rational| match r {
            r if r.is_integer() => format_rational(r),
            r => format!("({})", format_rational(r)),
        };
        write!(
            f,
            "{cr} >= {}m - {}n + {}",
            coeff(&self.slope),
            coeff(&self.vertex_coeff),
            format_rational(&self.constant)
        )
    }
}

/// Turns a single-plane bound `cr >= f(m) - g(n)` into
/// `cr_k >= f(m) - k g(n)`. Only the vertex and constant parts scale.
pub fn hereditary_lift(lb: &LinearBound, k: u64) -> Result<LinearBound> {
    if lb.lifted {
        return Err(Error::Refused(format!("bound {lb} is already lifted")));
    }
    if k == 0 {
        return Err(Error::Refused("lift needs k >= 1".into()));
    }
    let k_r = Rational::from_integer(k.into());
    Ok(LinearBound {
        vertex_coeff: &lb.vertex_coeff * &k_r,
        constant: &lb.constant * &k_r,
        planes: k,
        lifted: true,
        ..lb.clone()
    })
}

fn require_vertices(n: u64, min: u64, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::Refused(format!("{what} needs n >= {min}, got {n}")));
    }
    Ok(())
}

/// `max(0, m - 3(n-2))`, or `max(0, m - 2(n-2))` for bipartite graphs.
pub fn euler_bound(n: u64, m: u128, bipartite: bool) -> Result<u128> {
    require_vertices(n, 3, "euler bound")?;
    let per = if bipartite { 2 } else { 3 };
    Ok(m.saturating_sub(per * u128::from(n - 2)))
}

/// Single-plane bound for bipartite graphs: the best of the three cascade
/// tiers and zero. Tier 3 uses the integral density `floor(3.5n - 7)`.
pub fn bipartite_cascade_bound(n: u64, m: u128) -> Result<u128> {
    require_vertices(n, 4, "bipartite cascade")?;
    let (n, m) = (i128::from(n), m as i128);
    let tier1 = m - 2 * (n - 2);
    let tier2 = 2 * m - (3 * n - 8) - 2 * (n - 2);
    let tier3 = 3 * m - Integer::div_floor(&(7 * n - 14), &2) - (3 * n - 8) - 2 * (n - 2);
    Ok([0, tier1, tier2, tier3].into_iter().max().unwrap_or(0) as u128)
}

/// `max(0, 5m - (139/6)(n - 2))`.
pub fn ackerman_bound(n: u64, m: u128) -> Result<Rational> {
    require_vertices(n, 3, "ackerman bound")?;
    let v = LinearBound::ackerman().evaluate(n, m);
    Ok(if v.is_negative() { Rational::zero() } else { v })
}
