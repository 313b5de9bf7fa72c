//! Cited upper-bound constants and the approximation factors they give
//! against the lower bounds.

use serde::Serialize;

use super::{format_rational, rational, Instance, Rational};
use crate::drawing::{guy_number, zarankiewicz_number};
use crate::error::{Error, Result};

/// Leading-term upper estimate for `cr_k` of the instance: a cited constant
/// times `Z(p, q)` or `Z(n)`. Lower-order terms are dropped, so this is an
/// asymptotic estimate and never enters a certificate.
///
/// | family    | k = 1 | k = 2  | k >= 3           |
/// |-----------|-------|--------|------------------|
/// | complete  | 1     | 7/24   | 2/k^2            |
/// | bipartite | 1     | 2/9    | 2/k^2 - 1/k^3    |
pub fn upper_bound_estimate(instance: Instance, k: u64) -> Result<Rational> {
    if k == 0 {
        return Err(Error::Refused("k must be at least 1".into()));
    }
    let kk = k as i64;
    let (constant, z) = match instance {
        Instance::Complete(n) => {
            let c = match k {
                1 => rational(1, 1),
                2 => rational(7, 24),
                _ => rational(2, kk * kk),
            };
            (c, guy_number(n))
        }
        Instance::Bipartite(p, q) => {
            let c = match k {
                1 => rational(1, 1),
                2 => rational(2, 9),
                _ => rational(2, kk * kk) - rational(1, kk * kk * kk),
            };
            (c, zarankiewicz_number(p, q))
        }
    };
    Ok(constant * Rational::from_integer(z.into()))
}

/// One row of the approximation-factor summary. A factor is the leading
/// upper constant divided by the leading lower constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorRow {
    pub quantity: &'static str,
    #[serde(serialize_with = "as_string")]
    pub prior: Rational,
    #[serde(serialize_with = "as_string")]
    pub new: Rational,
}

fn as_string<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

impl FactorRow {
    pub fn prior_display(&self) -> String {
        two_decimals_up(&self.prior)
    }

    pub fn new_display(&self) -> String {
        two_decimals_up(&self.new)
    }
}

/// Rounds up to two decimals and trims trailing zeros.
fn two_decimals_up(r: &Rational) -> String {
    let hundredths = (r * Rational::from_integer(100.into())).ceil().to_integer();
    let s = format!("{}.{:02}", &hundredths / 100, &hundredths % 100);
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Factors for `cr_2` and `cr_k` of complete and complete bipartite graphs.
///
/// Lower constants are the denominators `D` in `cr >= p^2 q^2 / D` (resp.
/// `n^4 / D`, with a `k^2` that cancels for the `cr_k` rows).
pub fn approx_factor_table() -> Vec<FactorRow> {
    // (quantity, upper leading constant, prior D, new D)
    let rows = [
        (
            "cr_2(K_{p,q})",
            rational(2, 9 * 16),
            rational(290, 1),
            rational(216, 1),
        ),
        (
            "cr_2(K_n)",
            rational(7, 24 * 64),
            rational(952, 1),
            rational(694, 1),
        ),
        (
            "cr_k(K_{p,q})",
            rational(2, 16),
            rational(108, 1),
            rational(366, 5),
        ),
        (
            "cr_k(K_n)",
            rational(2, 64),
            rational(432, 1),
            rational(232, 1),
        ),
    ];
    rows.into_iter()
        .map(|(quantity, upper, prior, new)| FactorRow {
            quantity,
            prior: &upper * prior,
            new: upper * new,
        })
        .collect()
}

/// Lower bound on the constant `c*` with `cr_2(G) <= c* cr(G)` for all `G`:
/// `K_n` has a drawing with about `n^4/64` crossings and `cr_2(K_n)` is at
/// least about `n^4/694`.
pub fn cstar_lower() -> Rational {
    rational(64, 694)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn estimates() {
        assert_eq!(
            upper_bound_estimate(Instance::Bipartite(21, 21), 2).unwrap(),
            rational(20000, 9)
        );
        assert_eq!(
            upper_bound_estimate(Instance::Complete(12), 2).unwrap(),
            rational(175, 4)
        );
        assert_eq!(
            upper_bound_estimate(Instance::Complete(12), 3).unwrap(),
            rational(2, 9) * rational(150, 1)
        );
        assert_eq!(
            upper_bound_estimate(Instance::Bipartite(10, 10), 1).unwrap(),
            rational(400, 1)
        );
        assert!(upper_bound_estimate(Instance::Complete(5), 0).is_err());
    }

    #[test]
    fn factor_table() {
        let shown: Vec<(String, String)> = approx_factor_table()
            .iter()
            .map(|r| (r.prior_display(), r.new_display()))
            .collect();
        let want = [
            ("4.03", "3"),
            ("4.34", "3.17"),
            ("13.5", "9.15"),
            ("13.5", "7.25"),
        ];
        for (got, want) in shown.iter().zip(want) {
            assert_eq!((got.0.as_str(), got.1.as_str()), want);
        }
        assert_eq!(approx_factor_table()[1].new, rational(694 * 7, 1536));
    }

    #[test]
    fn rounding_goes_up() {
        assert_eq!(two_decimals_up(&rational(31628, 10000)), "3.17");
        assert_eq!(two_decimals_up(&rational(3, 1)), "3");
        assert_eq!(two_decimals_up(&rational(27, 2)), "13.5");
        assert_eq!(two_decimals_up(&rational(301, 100)), "3.01");
    }

    #[test]
    fn cstar() {
        let c = cstar_lower();
        assert_eq!(c, rational(32, 347));
        assert!(c > rational(67, 1000));
        assert!(c < rational(3, 8));
        assert_eq!(format_rational(&c), "32/347");
    }
}
