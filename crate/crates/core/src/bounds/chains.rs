//! The counting method and the recurrences built from it.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::certificate::ChainMode;
use crate::error::{Error, Result};

fn ceil_ratio(num: BigUint, den: BigUint) -> Result<u128> {
    let (q, r) = num.div_rem(&den);
    let q = if r == BigUint::ZERO { q } else { q + 1u32 };
    q.to_u128()
        .ok_or_else(|| Error::Refused(format!("bound value {q} exceeds 128 bits")))
}

fn product(xs: &[u64]) -> BigUint {
    xs.iter().fold(BigUint::from(1u32), |acc, &x| acc * x)
}

/// `ceil(alpha * lower / beta)`: a host with `alpha` copies of `H`, each
/// crossing shared by at most `beta` copies, has at least this many
/// crossings when `H` has at least `lower`.
pub fn counting_step(alpha: u64, beta: u64, lower: u128) -> Result<u128> {
    if alpha == 0 || beta == 0 {
        return Err(Error::Refused(format!(
            "counting step needs alpha, beta >= 1, got ({alpha}, {beta})"
        )));
    }
    ceil_ratio(BigUint::from(lower) * alpha, BigUint::from(beta))
}

/// Pushes a bound for `K_{start,start}` up to `K_{end,end}`.
///
/// `Nested` goes through `K_{n+1,n}` with two ceilinged counting steps per
/// increment; `PerStep` applies a single ceiling to `((n+1)/(n-1))^2`.
pub fn bipartite_chain(start: u64, end: u64, seed: u128, mode: ChainMode) -> Result<u128> {
    if start < 4 || start > end {
        return Err(Error::Refused(format!(
            "bipartite chain needs 4 <= start <= end, got {start}..{end}"
        )));
    }
    let mut a = seed;
    for n in start..end {
        a = match mode {
            ChainMode::PerStep => ceil_ratio(
                BigUint::from(a) * (n + 1) * (n + 1),
                BigUint::from(n - 1) * (n - 1),
            )?,
            ChainMode::Nested => counting_step(n + 1, n - 1, counting_step(n + 1, n - 1, a)?)?,
        };
    }
    Ok(a)
}

/// Pushes a bound for `K_start` up to `K_end`, one vertex at a time:
/// `a_{n+1} = ceil((n+1) a_n / (n-3))`.
pub fn complete_chain(start: u64, end: u64, seed: u128) -> Result<u128> {
    if start < 5 || start > end {
        return Err(Error::Refused(format!(
            "complete chain needs 5 <= start <= end, got {start}..{end}"
        )));
    }
    (start..end).try_fold(seed, |a, n| counting_step(n + 1, n - 3, a))
}

/// Bound for `K_{p,q}` from a bound for `K_{r,r}` in one counting step.
pub fn scale_bipartite(r: u64, lower_rr: u128, p: u64, q: u64) -> Result<u128> {
    if r < 2 || p < r || q < r {
        return Err(Error::Refused(format!(
            "bipartite scaling needs p, q >= r >= 2, got r={r}, p={p}, q={q}"
        )));
    }
    scale_bipartite_from(r, r, lower_rr, p, q)
}

/// Scaling between rectangular shapes: `K_{a,b}` to `K_{p,q}`.
pub(crate) fn scale_bipartite_from(a: u64, b: u64, lower: u128, p: u64, q: u64) -> Result<u128> {
    ceil_ratio(
        product(&[p, p - 1, q, q - 1]) * lower,
        product(&[a, a - 1, b, b - 1]),
    )
}

/// Bound for `K_n` from a bound for `K_r` in one counting step.
pub fn scale_complete(r: u64, lower_r: u128, n: u64) -> Result<u128> {
    if r < 5 || n < r {
        return Err(Error::Refused(format!(
            "complete scaling needs n >= r >= 5, got r={r}, n={n}"
        )));
    }
    ceil_ratio(
        product(&[n, n - 1, n - 2, n - 3]) * lower_r,
        product(&[r, r - 1, r - 2, r - 3]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};

    #[test]
    fn counting_examples() {
        assert_eq!(counting_step(16, 14, 203).unwrap(), 232);
        assert_eq!(counting_step(16, 14, 232).unwrap(), 266);
        assert_eq!(counting_step(26, 22, 435).unwrap(), 515);
        assert_eq!(counting_step(1, 1, 77).unwrap(), 77);
        assert!(counting_step(0, 1, 5).is_err());
        assert!(counting_step(1, 0, 5).is_err());
    }

    #[test]
    fn counting_matches_rational_ceiling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let a = rng.random_range(1..10_000u64);
            let b = rng.random_range(1..10_000u64);
            let x = rng.random_range(0..1_000_000_000u128);
            let want = BigRational::new((x * u128::from(a)).into(), b.into()).ceil();
            assert_eq!(
                BigRational::from_integer(counting_step(a, b, x).unwrap().into()),
                want
            );
        }
    }

    #[test]
    fn bipartite_chains() {
        let per_step: Vec<u128> = (16..=21)
            .map(|e| bipartite_chain(15, e, 203, ChainMode::PerStep).unwrap())
            .collect();
        assert_eq!(per_step, [266, 342, 433, 541, 668, 817]);
        let nested: Vec<u128> = (16..=21)
            .map(|e| bipartite_chain(15, e, 203, ChainMode::Nested).unwrap())
            .collect();
        assert_eq!(nested, [266, 343, 435, 545, 674, 824]);
        assert_eq!(
            bipartite_chain(15, 15, 203, ChainMode::Nested).unwrap(),
            203
        );
        assert!(bipartite_chain(3, 5, 1, ChainMode::PerStep).is_err());
        assert!(bipartite_chain(9, 5, 1, ChainMode::PerStep).is_err());
    }

    #[test]
    fn nested_dominates_per_step() {
        for end in 15..=40 {
            assert!(
                bipartite_chain(15, end, 203, ChainMode::Nested).unwrap()
                    >= bipartite_chain(15, end, 203, ChainMode::PerStep).unwrap()
            );
        }
    }

    #[test]
    fn complete_chains() {
        assert_eq!(complete_chain(25, 57, 435).unwrap(), 13667);
        assert_eq!(complete_chain(25, 26, 435).unwrap(), 515);
        assert_eq!(complete_chain(9, 9, 36).unwrap(), 36);
        assert!(complete_chain(4, 9, 0).is_err());
    }

    #[test]
    fn scaling() {
        assert_eq!(scale_bipartite(21, 817, 21, 22).unwrap(), 899);
        assert_eq!(scale_bipartite(21, 817, 21, 21).unwrap(), 817);
        assert!(scale_bipartite(21, 817, 20, 30).is_err());
        assert_eq!(scale_complete(25, 435, 25).unwrap(), 435);
        assert_eq!(scale_complete(25, 435, 26).unwrap(), 515);
        assert!(scale_complete(57, 13667, 56).is_err());
        for p in 21..=60u64 {
            for q in 21..=60u64 {
                let want = (u128::from(p * (p - 1) * q * (q - 1))).div_ceil(216);
                assert!(scale_bipartite(21, 817, p, q).unwrap() >= want, "{p} {q}");
            }
        }
    }

    #[test]
    fn complete_scaling_tracks_n4_over_694() {
        for n in 57..=200u64 {
            let v = scale_complete(57, 13667, n).unwrap();
            let falling = u128::from(n * (n - 1) * (n - 2) * (n - 3));
            assert_eq!(v, (falling * 13667).div_ceil(9_480_240));
            assert!(v >= falling.div_ceil(694), "n={n}");
        }
    }
}
