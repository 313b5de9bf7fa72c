//! Zarankiewicz and cylindrical drawings, and the closed forms `Z(p, q)`
//! and `Z(n)` they attain.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_rational::Ratio;

use super::{CombinatorialDrawing, Crossing, Point, StraightLineDrawing};
use crate::error::{Error, Result};
use crate::graph::{complete, complete_bipartite, Edge};

/// `floor(p/2) floor((p-1)/2) floor(q/2) floor((q-1)/2)`.
pub fn zarankiewicz_number(p: u64, q: u64) -> u128 {
    let half = |x: u64| u128::from(x / 2) * u128::from(x.saturating_sub(1) / 2);
    half(p) * half(q)
}

/// `(1/4) floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2)`.
pub fn guy_number(n: u64) -> u128 {
    let f = |k: u64| u128::from(n.saturating_sub(k) / 2);
    let product = f(0) * f(1) * f(2) * f(3);
    assert!(
        product % 4 == 0,
        "floor product {product} is not divisible by 4"
    );
    product / 4
}

/// Straight-line drawing of `K_{p,q}` with exactly `Z(p, q)` crossings.
///
/// The `p` side sits on the x-axis at `1, 2, ..` (the first `ceil(p/2)`
/// vertices) and `-1, -2, ..` (the rest); the `q` side sits on the y-axis
/// the same way. No vertex is at the origin, so every edge interior lies
/// strictly inside one quadrant and no vertex touches a foreign edge.
pub fn zarankiewicz_drawing(p: usize, q: usize) -> Result<StraightLineDrawing> {
    if p == 0 || q == 0 {
        return Err(Error::Refused(format!(
            "zarankiewicz drawing needs both sides nonempty, got ({p}, {q})"
        )));
    }
    let axis = |count: usize| -> Vec<i64> {
        let positive = count.div_ceil(2);
        (0..count)
            .map(|i| {
                if i < positive {
                    i as i64 + 1
                } else {
                    -((i - positive) as i64 + 1)
                }
            })
            .collect()
    };
    let coords = axis(p)
        .into_iter()
        .map(|x| Point::from_ints(x, 0))
        .chain(axis(q).into_iter().map(|y| Point::from_ints(0, y)))
        .collect();
    StraightLineDrawing::new(complete_bipartite(p, q), coords)
}

pub const CYLINDRICAL_RANGE: RangeInclusive<usize> = 3..=12;

/// Combinatorial drawing of `K_n` on a cylinder with exactly `Z(n)`
/// crossings, for `3 <= n <= 12`.
///
/// `ceil(n/2)` vertices sit evenly spaced on the top rim and `floor(n/2)` on
/// the bottom rim, the bottom rim rotated by `1/(8b)` of a turn (`b` the
/// bottom count) so no two rim vertices are antipodal. Edges within a rim
/// are chords of that rim's lid disk; edges between rims run along the side
/// of the cylinder, turning monotonically through the shorter angle.
///
/// Two chords of one lid cross iff their endpoints interleave around the
/// rim. Two side curves cross iff their angular difference passes through
/// a whole number of turns strictly inside the height interval; with both
/// turns shorter than half a turn this happens at most once.
pub fn cylindrical_drawing(n: usize) -> Result<CombinatorialDrawing> {
    if !CYLINDRICAL_RANGE.contains(&n) {
        return Err(Error::Refused(format!(
            "cylindrical drawing supports {}..={} vertices, got {n}",
            CYLINDRICAL_RANGE.start(),
            CYLINDRICAL_RANGE.end()
        )));
    }
    let top = n.div_ceil(2);
    let bottom = n / 2;
    let graph = complete(n);
    let mut crossings = BTreeSet::new();

    // lids: vertices 0..top on the top rim, top..n on the bottom rim, each
    // listed in angular order
    for rim in [0..top, top..n] {
        let vs: Vec<usize> = rim.collect();
        for (a, b, c, d) in interleaved_quadruples(&vs) {
            crossings.insert(Crossing::new(Edge::new(a, c), Edge::new(b, d)));
        }
    }

    type Turn = Ratio<i64>;
    let top_angle = |i: usize| Turn::new(i as i64, top as i64);
    let bottom_angle = |j: usize| {
        let offset = Turn::new(1, 8 * bottom as i64);
        (Turn::new(j as i64, bottom as i64) + offset).fract()
    };
    // (top vertex, bottom vertex, start angle, signed turn)
    let mut side: Vec<(usize, usize, Turn, Turn)> = Vec::new();
    for i in 0..top {
        for j in 0..bottom {
            let start = top_angle(i);
            let mut delta = (bottom_angle(j) - start + Turn::from_integer(1)).fract();
            if delta > Turn::new(1, 2) {
                delta -= Turn::from_integer(1);
            }
            debug_assert!(delta != Turn::new(1, 2));
            side.push((i, top + j, start, delta));
        }
    }
    for (k, &(a1, b1, s1, d1)) in side.iter().enumerate() {
        for &(a2, b2, s2, d2) in &side[k + 1..] {
            if a1 == a2 || b1 == b2 {
                continue;
            }
            // difference of angles moves linearly from s1 - s2 to
            // (s1 + d1) - (s2 + d2); count whole turns strictly between
            let from = s1 - s2;
            let to = from + d1 - d2;
            let (lo, hi) = if from <= to { (from, to) } else { (to, from) };
            let whole_turns = whole_numbers_strictly_between(lo, hi);
            debug_assert!(whole_turns <= 1);
            if whole_turns == 1 {
                crossings.insert(Crossing::new(Edge::new(a1, b1), Edge::new(a2, b2)));
            }
        }
    }
    Ok(CombinatorialDrawing::new(
        graph,
        crossings.into_iter().collect(),
    ))
}

fn interleaved_quadruples(vs: &[usize]) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    let k = vs.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    out.push((vs[a], vs[b], vs[c], vs[d]));
                }
            }
        }
    }
    out
}

fn whole_numbers_strictly_between(lo: Ratio<i64>, hi: Ratio<i64>) -> i64 {
    // integers z with lo < z < hi
    let first = lo.floor().to_integer() + 1;
    let last = if hi.is_integer() {
        hi.to_integer() - 1
    } else {
        hi.floor().to_integer()
    };
    (last - first + 1).max(0)
}
