//! Seeded straight-line drawings with a bounded number of crossings.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drawing::{count_crossings, CombinatorialDrawing, Point, StraightLineDrawing};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_TARGET_CROSSINGS: usize = 10;

type P = (i64, i64);

fn orient(a: P, b: P, c: P) -> i64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

/// Proper crossing of two segments with four distinct endpoints, points
/// in general position.
fn cross(a: P, b: P, c: P, d: P) -> bool {
    orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0
}

fn general_position(rng: &mut ChaCha8Rng, n: usize) -> Vec<P> {
    let mut pts: Vec<P> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = (rng.random_range(0..64), rng.random_range(0..64));
        let collinear = pts
            .iter()
            .enumerate()
            .any(|(i, &a)| pts[i + 1..].iter().any(|&b| orient(a, b, p) == 0));
        if !pts.contains(&p) && !collinear {
            pts.push(p);
        }
    }
    pts
}

/// A straight-line drawing with at most `target` crossings: a random
/// crossing-free base on 5 to 11 points, then extra segments each crossing
/// at least one earlier segment, while the budget lasts.
pub fn random_low_crossing_drawing(seed: u64, target: usize) -> Result<StraightLineDrawing> {
    if target > MAX_TARGET_CROSSINGS {
        return Err(Error::Refused(format!(
            "target crossings {target} exceeds {MAX_TARGET_CROSSINGS}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(5..=11);
    let pts = general_position(&mut rng, n);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    pairs.shuffle(&mut rng);

    let crossings_with = |chosen: &[(usize, usize)], (a, b): (usize, usize)| {
        chosen
            .iter()
            .filter(|&&(c, d)| ![c, d].contains(&a) && ![c, d].contains(&b))
            .filter(|&&(c, d)| cross(pts[a], pts[b], pts[c], pts[d]))
            .count()
    };

    let base_size = rng.random_range(n - 1..=3 * n - 6);
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let mut rest = Vec::new();
    for p in pairs {
        if chosen.len() < base_size && crossings_with(&chosen, p) == 0 {
            chosen.push(p);
        } else {
            rest.push(p);
        }
    }

    let mut budget = target;
    for p in rest {
        if budget == 0 {
            break;
        }
        let c = crossings_with(&chosen, p);
        if c >= 1 && c <= budget {
            chosen.push(p);
            budget -= c;
        }
    }

    let graph = Graph::from_edges(n, chosen)?;
    let coords = pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
    StraightLineDrawing::new(graph, coords)
}

/// The combinatorial drawing of [`random_low_crossing_drawing`].
pub fn random_low_crossing_instance(seed: u64, target: usize) -> Result<CombinatorialDrawing> {
    Ok(count_crossings(&random_low_crossing_drawing(seed, target)?)?.1)
}
