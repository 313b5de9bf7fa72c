//! Replayable lower-bound certificates.
//!
//! A certificate is a list of steps, each naming one operation, its
//! arguments, and the value it produces. Replaying recomputes every value
//! exactly, checks each operation's preconditions against the running
//! state, and compares the canonical string of each result.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::chains::{counting_step, scale_bipartite_from, scale_complete};
use super::{
    ceil_nonneg, format_rational, hereditary_lift, BoundKind, Family, Instance, LinearBound,
    Rational,
};
use crate::error::{Error, Result};

/// Ceiling schedule for the square bipartite chain.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainMode {
    /// One ceiling per increment of the squared ratio.
    #[default]
    PerStep,
    /// Two ceilinged counting steps per increment, through `K_{n+1,n}`.
    Nested,
}

impl fmt::Display for ChainMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainMode::PerStep => "per-step",
            ChainMode::Nested => "nested",
        })
    }
}

impl FromStr for ChainMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "per-step" => Ok(ChainMode::PerStep),
            "nested" => Ok(ChainMode::Nested),
            _ => Err(Error::Refused(format!("unknown chain mode {s:?}"))),
        }
    }
}

/// One operation of a certificate. Serialized as `{"op": .., "args": {..}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    tag = "op",
    content = "args",
    rename_all = "snake_case",
    deny_unknown_fields
)]
pub enum StepOp {
    /// `cr_k >= 0` for the target itself.
    Trivial {
        params: Vec<u64>,
        k: u64,
    },
    /// A single-plane density bound evaluated at an instance.
    BaseBound {
        bound: BoundKind,
        params: Vec<u64>,
        vertices: u64,
        #[serde(with = "int_string")]
        edges: u128,
    },
    HereditaryLift {
        k: u64,
    },
    ClampCeil {},
    /// One vertex added to the instance.
    CountingStep {
        alpha: u64,
        beta: u64,
        to: Vec<u64>,
    },
    /// `K_{n,n}` to `K_{n+1,n+1}` with a single ceiling.
    BipartiteSquareStep {
        n: u64,
    },
    ScaleComplete {
        n: u64,
    },
    ScaleBipartite {
        p: u64,
        q: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    #[serde(flatten)]
    pub op: StepOp,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundCertificate {
    pub family: Family,
    pub params: Vec<u64>,
    pub k: u64,
    #[serde(with = "int_string")]
    pub value: u128,
    pub steps: Vec<Step>,
}

mod int_string {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        let s = String::deserialize(d)?;
        let v: u128 = s.parse().map_err(D::Error::custom)?;
        if v.to_string() != s {
            return Err(D::Error::custom(format!("non-canonical integer {s:?}")));
        }
        Ok(v)
    }
}

impl BoundCertificate {
    pub fn instance(&self) -> Result<Instance> {
        Instance::from_params(self.family, &self.params)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Appends a scaling step taking the certified instance to `target`.
    pub fn scale_to(mut self, target: Instance) -> Result<Self> {
        let from = self.instance()?;
        let (op, value) = match (from, target) {
            (Instance::Complete(r), Instance::Complete(n)) => (
                StepOp::ScaleComplete { n },
                scale_complete(r, self.value, n)?,
            ),
            (Instance::Bipartite(a, b), Instance::Bipartite(p, q)) => {
                check_bipartite_scale(a, b, p, q).map_err(Error::Refused)?;
                (
                    StepOp::ScaleBipartite { p, q },
                    scale_bipartite_from(a, b, self.value, p, q)?,
                )
            }
            _ => return Err(Error::Refused(format!("cannot scale {from} to {target}"))),
        };
        self.steps.push(Step {
            op,
            result: value.to_string(),
        });
        self.params = target.params();
        self.value = value;
        Ok(self)
    }
}

fn check_bipartite_scale(a: u64, b: u64, p: u64, q: u64) -> std::result::Result<(), String> {
    if a < 2 || b < 2 || p < a || q < b {
        return Err(format!("cannot scale K_{{{a},{b}}} to K_{{{p},{q}}}"));
    }
    Ok(())
}

/// Steps that evaluate `kind`, lifted to `k` planes, at `instance`, and
/// the resulting integer.
pub(crate) fn direct_steps(
    instance: Instance,
    kind: BoundKind,
    k: u64,
) -> Result<(Vec<Step>, u128)> {
    let base = LinearBound::new(kind);
    if !base.applicability().covers(instance.family()) {
        return Err(Error::Refused(format!(
            "{kind:?} does not apply to {instance}"
        )));
    }
    let (n, m) = (instance.vertices(), instance.edges());
    let mut steps = vec![Step {
        op: StepOp::BaseBound {
            bound: kind,
            params: instance.params(),
            vertices: n,
            edges: m,
        },
        result: format_rational(&base.evaluate(n, m)),
    }];
    let lb = if k > 1 {
        let lifted = hereditary_lift(&base, k)?;
        steps.push(Step {
            op: StepOp::HereditaryLift { k },
            result: format_rational(&lifted.evaluate(n, m)),
        });
        lifted
    } else {
        base
    };
    let value = lb.ceil_at(n, m);
    steps.push(Step {
        op: StepOp::ClampCeil {},
        result: value.to_string(),
    });
    Ok((steps, value))
}

pub(crate) fn trivial_certificate(instance: Instance, k: u64) -> BoundCertificate {
    BoundCertificate {
        family: instance.family(),
        params: instance.params(),
        k,
        value: 0,
        steps: vec![Step {
            op: StepOp::Trivial {
                params: instance.params(),
                k,
            },
            result: "0".into(),
        }],
    }
}

/// The strongest single density bound at `instance`, as a certificate.
pub(crate) fn best_direct(instance: Instance, k: u64) -> Result<BoundCertificate> {
    let mut best = trivial_certificate(instance, k);
    for kind in BoundKind::ALL {
        if !LinearBound::new(kind)
            .applicability()
            .covers(instance.family())
            || instance.vertices() < kind.min_vertices()
        {
            continue;
        }
        let (steps, value) = direct_steps(instance, kind, k)?;
        if value > best.value {
            best.value = value;
            best.steps = steps;
        }
    }
    Ok(best)
}

/// The k-planar seed at `K_{14k-3}` (lifted Ackerman bound) or
/// `K_{8k+2,8k+2}` (lifted third cascade tier).
pub fn kplanar_seed_bound(family: Family, k: u64) -> Result<BoundCertificate> {
    if k == 0 {
        return Err(Error::Refused("k must be at least 1".into()));
    }
    if k > super::MAX_PARAM / 16 {
        return Err(Error::Refused(format!("k = {k} is too large")));
    }
    let (instance, kind) = match family {
        Family::Complete => (Instance::Complete(14 * k - 3), BoundKind::Ackerman),
        Family::Bipartite => (
            Instance::Bipartite(8 * k + 2, 8 * k + 2),
            BoundKind::CascadeTier3,
        ),
    };
    let (steps, value) = direct_steps(instance, kind, k)?;
    Ok(BoundCertificate {
        family,
        params: instance.params(),
        k,
        value,
        steps,
    })
}

/// Seeds with the best density bound at `seed` and chains up to `target`.
///
/// Complete instances grow one vertex per step. Square bipartite instances
/// grow per `mode`.
pub fn chain_certificate(
    seed: Instance,
    target: Instance,
    k: u64,
    mode: ChainMode,
) -> Result<BoundCertificate> {
    seed.check_size()?;
    target.check_size()?;
    let mut cert = best_direct(seed, k)?;
    if cert.value == 0 {
        return Err(Error::Refused(format!(
            "no positive density bound at {seed} for k = {k}"
        )));
    }
    match (seed, target) {
        (Instance::Complete(s), Instance::Complete(t)) if 5 <= s && s <= t => {
            for n in s..t {
                cert.push_counting(n + 1, n - 3, vec![n + 1])?;
            }
        }
        (Instance::Bipartite(s, s2), Instance::Bipartite(t, t2))
            if s == s2 && t == t2 && 4 <= s && s <= t =>
        {
            for n in s..t {
                match mode {
                    ChainMode::PerStep => {
                        let value = square_step(n, cert.value)?;
                        cert.steps.push(Step {
                            op: StepOp::BipartiteSquareStep { n },
                            result: value.to_string(),
                        });
                        cert.value = value;
                    }
                    ChainMode::Nested => {
                        cert.push_counting(n + 1, n - 1, vec![n + 1, n])?;
                        cert.push_counting(n + 1, n - 1, vec![n + 1, n + 1])?;
                    }
                }
            }
        }
        _ => return Err(Error::Refused(format!("no chain from {seed} to {target}"))),
    }
    cert.params = target.params();
    Ok(cert)
}

impl BoundCertificate {
    pub(crate) fn push_counting(&mut self, alpha: u64, beta: u64, to: Vec<u64>) -> Result<()> {
        let value = counting_step(alpha, beta, self.value)?;
        self.steps.push(Step {
            op: StepOp::CountingStep { alpha, beta, to },
            result: value.to_string(),
        });
        self.value = value;
        Ok(())
    }
}

fn square_step(n: u64, a: u128) -> Result<u128> {
    super::chains::bipartite_chain(n, n + 1, a, ChainMode::PerStep)
}

/// Outcome of [`verify_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    /// Index of the first failing step; `None` with a message means the
    /// header or the final value is wrong.
    pub failed_step: Option<usize>,
    pub message: Option<String>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.message.is_none()
    }

    fn fail(step: Option<usize>, message: String) -> Self {
        Verdict {
            failed_step: step,
            message: Some(message),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.message, self.failed_step) {
            (None, _) => f.write_str("valid"),
            (Some(m), Some(i)) => write!(f, "invalid at step {i}: {m}"),
            (Some(m), None) => write!(f, "invalid: {m}"),
        }
    }
}

enum State {
    Start,
    Linear {
        instance: Instance,
        bound: LinearBound,
    },
    Count {
        instance: Instance,
        value: u128,
    },
}

/// Replays every step with exact arithmetic and checks the final value.
pub fn verify_certificate(cert: &BoundCertificate) -> Verdict {
    let target = match cert.instance().and_then(|t| t.check_size().map(|_| t)) {
        Ok(t) => t,
        Err(e) => return Verdict::fail(None, e.to_string()),
    };
    if cert.k == 0 {
        return Verdict::fail(None, "k must be at least 1".into());
    }
    if cert.steps.is_empty() {
        return Verdict::fail(None, "certificate has no steps".into());
    }
    let mut state = State::Start;
    for (i, step) in cert.steps.iter().enumerate() {
        let (next, shown) = match replay(cert, state, &step.op) {
            Ok(r) => r,
            Err(m) => return Verdict::fail(Some(i), m),
        };
        if shown != step.result {
            return Verdict::fail(
                Some(i),
                format!("result is {}, recorded {:?}", shown, step.result),
            );
        }
        state = next;
    }
    match state {
        State::Count { instance, value } if instance == target && value == cert.value => Verdict {
            failed_step: None,
            message: None,
        },
        State::Count { instance, value } => Verdict::fail(
            None,
            format!(
                "steps certify {value} for {instance}, certificate claims {} for {target}",
                cert.value
            ),
        ),
        _ => Verdict::fail(None, "steps do not end in an integer bound".into()),
    }
}

fn replay(
    cert: &BoundCertificate,
    state: State,
    op: &StepOp,
) -> std::result::Result<(State, String), String> {
    let instance_of = |params: &[u64]| {
        let i = Instance::from_params(cert.family, params).map_err(|e| e.to_string())?;
        i.check_size().map_err(|e| e.to_string())?;
        Ok::<_, String>(i)
    };
    match (state, op) {
        (State::Start, StepOp::Trivial { params, k }) => {
            if *params != cert.params || *k != cert.k {
                return Err("trivial step does not match the certificate header".into());
            }
            Ok((
                State::Count {
                    instance: instance_of(params)?,
                    value: 0,
                },
                "0".into(),
            ))
        }
        (
            State::Start,
            StepOp::BaseBound {
                bound,
                params,
                vertices,
                edges,
            },
        ) => {
            let instance = instance_of(params)?;
            let lb = LinearBound::new(*bound);
            if !lb.applicability().covers(cert.family) {
                return Err(format!(
                    "{bound:?} does not apply to the {} family",
                    cert.family
                ));
            }
            if instance.vertices() < bound.min_vertices() {
                return Err(format!(
                    "{bound:?} needs at least {} vertices",
                    bound.min_vertices()
                ));
            }
            if (*vertices, *edges) != (instance.vertices(), instance.edges()) {
                return Err(format!(
                    "{instance} has {} vertices and {} edges",
                    instance.vertices(),
                    instance.edges()
                ));
            }
            let shown = format_rational(&lb.evaluate(*vertices, *edges));
            Ok((
                State::Linear {
                    instance,
                    bound: lb,
                },
                shown,
            ))
        }
        (State::Linear { instance, bound }, StepOp::HereditaryLift { k }) => {
            let lifted = hereditary_lift(&bound, *k).map_err(|e| e.to_string())?;
            let shown = format_rational(&lifted.evaluate(instance.vertices(), instance.edges()));
            Ok((
                State::Linear {
                    instance,
                    bound: lifted,
                },
                shown,
            ))
        }
        (State::Linear { instance, bound }, StepOp::ClampCeil {}) => {
            if bound.planes() != cert.k {
                return Err(format!(
                    "bound holds for {} plane(s), certificate is for k = {}",
                    bound.planes(),
                    cert.k
                ));
            }
            let r: Rational = bound.evaluate(instance.vertices(), instance.edges());
            let value = ceil_nonneg(&r);
            Ok((State::Count { instance, value }, value.to_string()))
        }
        (State::Count { instance, value }, StepOp::CountingStep { alpha, beta, to }) => {
            let next = instance_of(to)?;
            let (want_alpha, want_beta) = counting_ratio(instance, next)?;
            if (*alpha, *beta) != (want_alpha, want_beta) {
                return Err(format!("{instance} to {next} has ratio {want_alpha}/{want_beta}, recorded {alpha}/{beta}"));
            }
            let v = counting_step(*alpha, *beta, value).map_err(|e| e.to_string())?;
            Ok((
                State::Count {
                    instance: next,
                    value: v,
                },
                v.to_string(),
            ))
        }
        (
            State::Count {
                instance: Instance::Bipartite(a, b),
                value,
            },
            StepOp::BipartiteSquareStep { n },
        ) => {
            if a != *n || b != *n || *n < 4 {
                return Err(format!("square step at n = {n} from K_{{{a},{b}}}"));
            }
            let v = square_step(*n, value).map_err(|e| e.to_string())?;
            Ok((
                State::Count {
                    instance: Instance::Bipartite(n + 1, n + 1),
                    value: v,
                },
                v.to_string(),
            ))
        }
        (
            State::Count {
                instance: Instance::Complete(r),
                value,
            },
            StepOp::ScaleComplete { n },
        ) => {
            instance_of(&[*n])?;
            let v = scale_complete(r, value, *n).map_err(|e| e.to_string())?;
            Ok((
                State::Count {
                    instance: Instance::Complete(*n),
                    value: v,
                },
                v.to_string(),
            ))
        }
        (
            State::Count {
                instance: Instance::Bipartite(a, b),
                value,
            },
            StepOp::ScaleBipartite { p, q },
        ) => {
            check_bipartite_scale(a, b, *p, *q)?;
            instance_of(&[*p, *q])?;
            let v = scale_bipartite_from(a, b, value, *p, *q).map_err(|e| e.to_string())?;
            Ok((
                State::Count {
                    instance: Instance::Bipartite(*p, *q),
                    value: v,
                },
                v.to_string(),
            ))
        }
        (State::Start, _) => Err("first step must be trivial or base_bound".into()),
        (State::Linear { .. }, _) => Err("a density bound must be lifted or clamped next".into()),
        (State::Count { .. }, _) => Err("operation not allowed on an integer bound".into()),
    }
}

/// `(alpha, beta)` for a host that is `from` plus one vertex.
pub(crate) fn counting_ratio(
    from: Instance,
    to: Instance,
) -> std::result::Result<(u64, u64), String> {
    let ratio = match (from, to) {
        (Instance::Complete(n), Instance::Complete(t)) if t == n + 1 && n >= 4 => {
            Some((n + 1, n - 3))
        }
        (Instance::Bipartite(a, b), Instance::Bipartite(p, q))
            if p == a + 1 && q == b && a >= 2 =>
        {
            Some((a + 1, a - 1))
        }
        (Instance::Bipartite(a, b), Instance::Bipartite(p, q))
            if p == a && q == b + 1 && b >= 2 =>
        {
            Some((b + 1, b - 1))
        }
        _ => None,
    };
    ratio.ok_or_else(|| format!("no counting step from {from} to {to}"))
}
