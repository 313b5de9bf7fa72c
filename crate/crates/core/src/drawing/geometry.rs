//! Exact orientation predicates over rational coordinates.
//!
//! Coordinates are first brought to a common denominator, so every
//! predicate is an integer determinant sign. Small coordinates take an
//! `i128` path; anything larger falls back to `BigInt`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{CombinatorialDrawing, Crossing, StraightLineDrawing};
use crate::error::{Error, Result};
use crate::graph::Edge;

enum Lattice {
    Small(Vec<(i128, i128)>),
    Big(Vec<(BigInt, BigInt)>),
}

impl Lattice {
    fn from_drawing(d: &StraightLineDrawing) -> Lattice {
        let mut lcm = BigInt::one();
        for p in &d.coords {
            lcm = lcm.lcm(p.x.denom());
            lcm = lcm.lcm(p.y.denom());
        }
        let scale = |r: &num_rational::BigRational| r.numer() * (&lcm / r.denom());
        let big: Vec<(BigInt, BigInt)> = d
            .coords
            .iter()
            .map(|p| (scale(&p.x), scale(&p.y)))
            .collect();
        let limit = BigInt::from(1i64 << 62);
        if big.iter().all(|(x, y)| x.abs() < limit && y.abs() < limit) {
            Lattice::Small(
                big.iter()
                    .map(|(x, y)| (x.to_i128().unwrap(), y.to_i128().unwrap()))
                    .collect(),
            )
        } else {
            Lattice::Big(big)
        }
    }

    /// Sign of the cross product (b - a) x (c - a).
    fn orient(&self, a: usize, b: usize, c: usize) -> Ordering {
        match self {
            Lattice::Small(p) => {
                let (ax, ay) = p[a];
                let (bx, by) = p[b];
                let (cx, cy) = p[c];
                ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)).cmp(&0)
            }
            Lattice::Big(p) => {
                let (ax, ay) = &p[a];
                let (bx, by) = &p[b];
                let (cx, cy) = &p[c];
                let det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
                det.cmp(&BigInt::zero())
            }
        }
    }

    /// Whether collinear point `c` lies strictly between `a` and `b`.
    fn strictly_between(&self, a: usize, b: usize, c: usize) -> bool {
        match self {
            Lattice::Small(p) => {
                let (ax, ay) = p[a];
                let (bx, by) = p[b];
                let (cx, cy) = p[c];
                (ax - cx) * (bx - cx) + (ay - cy) * (by - cy) < 0
            }
            Lattice::Big(p) => {
                let (ax, ay) = &p[a];
                let (bx, by) = &p[b];
                let (cx, cy) = &p[c];
                ((ax - cx) * (bx - cx) + (ay - cy) * (by - cy)).is_negative()
            }
        }
    }

    fn key(&self, v: usize) -> (String, String) {
        match self {
            Lattice::Small(p) => (p[v].0.to_string(), p[v].1.to_string()),
            Lattice::Big(p) => (p[v].0.to_string(), p[v].1.to_string()),
        }
    }
}

/// Counts the unordered pairs of non-adjacent edges whose segments cross,
/// returning the count and the crossing set.
///
/// Fails if two vertices coincide or a vertex lies in the interior of a
/// segment it is not an endpoint of. Several segments through one point are
/// allowed; each pair is counted on its own.
pub fn count_crossings(d: &StraightLineDrawing) -> Result<(usize, CombinatorialDrawing)> {
    if d.coords.len() != d.graph.vertex_count() {
        return Err(Error::InvalidDrawing(format!(
            "{} coordinates for {} vertices",
            d.coords.len(),
            d.graph.vertex_count()
        )));
    }
    let lattice = Lattice::from_drawing(d);
    let n = d.graph.vertex_count();

    let mut positions: BTreeMap<(String, String), usize> = BTreeMap::new();
    for v in 0..n {
        if let Some(&w) = positions.get(&lattice.key(v)) {
            return Err(Error::CoincidentVertices(w, v));
        }
        positions.insert(lattice.key(v), v);
    }

    let edges: Vec<Edge> = d.graph.edges().copied().collect();
    for e in &edges {
        let (a, b) = e.endpoints();
        for c in 0..n {
            if c != a
                && c != b
                && lattice.orient(a, b, c) == Ordering::Equal
                && lattice.strictly_between(a, b, c)
            {
                return Err(Error::VertexOnEdge {
                    vertex: c,
                    edge: *e,
                });
            }
        }
    }

    let mut crossings = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        let (a, b) = e.endpoints();
        for f in &edges[i + 1..] {
            if e.shares_endpoint(f) {
                continue;
            }
            let (c, dd) = f.endpoints();
            let o1 = lattice.orient(a, b, c);
            let o2 = lattice.orient(a, b, dd);
            let o3 = lattice.orient(c, dd, a);
            let o4 = lattice.orient(c, dd, b);
            let opposite =
                |x: Ordering, y: Ordering| x != Ordering::Equal && y != Ordering::Equal && x != y;
            if opposite(o1, o2) && opposite(o3, o4) {
                crossings.push(Crossing::new(*e, *f));
            }
        }
    }
    let count = crossings.len();
    Ok((count, CombinatorialDrawing::new(d.graph.clone(), crossings)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{validate_drawing, Point};
    use crate::graph::{complete, Graph};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn ints(pts: &[(i64, i64)]) -> Vec<Point> {
        pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    #[test]
    fn convex_k4_has_one_crossing() {
        let d =
            StraightLineDrawing::new(complete(4), ints(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap();
        let (count, comb) = count_crossings(&d).unwrap();
        assert_eq!(count, 1);
        assert_eq!(
            comb.crossings,
            vec![Crossing::new(Edge::new(0, 2), Edge::new(1, 3))]
        );
    }

    #[test]
    fn triangle_has_none() {
        let d = StraightLineDrawing::new(complete(3), ints(&[(0, 0), (5, 1), (2, 7)])).unwrap();
        assert_eq!(count_crossings(&d).unwrap().0, 0);
    }

    #[test]
    fn vertex_on_edge_is_degenerate() {
        let g = Graph::from_edges(3, [(0, 2)]).unwrap();
        let d = StraightLineDrawing::new(g, ints(&[(0, 0), (1, 1), (2, 2)])).unwrap();
        match count_crossings(&d) {
            Err(Error::VertexOnEdge { vertex, edge }) => {
                assert_eq!(vertex, 1);
                assert_eq!(edge, Edge::new(0, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn collinear_but_outside_is_fine() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = StraightLineDrawing::new(g, ints(&[(0, 0), (1, 0), (2, 0), (3, 0)])).unwrap();
        assert_eq!(count_crossings(&d).unwrap().0, 0);
    }

    #[test]
    fn coincident_vertices_rejected() {
        let d = StraightLineDrawing::new(complete(2), ints(&[(1, 1), (1, 1)])).unwrap();
        assert!(matches!(
            count_crossings(&d),
            Err(Error::CoincidentVertices(0, 1))
        ));
    }

    #[test]
    fn rational_coordinates() {
        let half = |n: i64| BigRational::new(n.into(), 2.into());
        let pts = vec![
            Point::new(half(0), half(0)),
            Point::new(half(1), half(0)),
            Point::new(half(1), half(1)),
            Point::new(half(0), half(1)),
        ];
        let d = StraightLineDrawing::new(complete(4), pts).unwrap();
        assert_eq!(count_crossings(&d).unwrap().0, 1);
    }

    #[test]
    fn huge_coordinates_use_big_path() {
        let big = |k: i64| BigRational::from_integer(BigInt::from(k) << 100);
        let pts = vec![
            Point::new(big(0), big(0)),
            Point::new(big(1), big(0)),
            Point::new(big(1), big(1)),
            Point::new(big(0), big(1)),
        ];
        let d = StraightLineDrawing::new(complete(4), pts).unwrap();
        assert_eq!(count_crossings(&d).unwrap().0, 1);
    }

    fn general_position(seed: u64, n: usize) -> Vec<(i64, i64)> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut pts: Vec<(i64, i64)> = Vec::new();
        while pts.len() < n {
            let p = (rng.random_range(-50..50), rng.random_range(-50..50));
            let collinear = pts.iter().enumerate().any(|(i, a)| {
                pts[i + 1..]
                    .iter()
                    .any(|b| (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0) == 0)
            });
            if !pts.contains(&p) && !collinear {
                pts.push(p);
            }
        }
        pts
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn affine_maps_preserve_count(seed in any::<u64>(), a in -4i64..5, b in -3i64..4, c in -3i64..4, d_coef in -4i64..5, tx in -9i64..9, ty in -9i64..9) {
            prop_assume!(a * d_coef - b * c > 0);
            let pts = general_position(seed, 7);
            let g = complete(7);
            let base = StraightLineDrawing::new(g.clone(), ints(&pts)).unwrap();
            let (count, comb) = count_crossings(&base).unwrap();
            prop_assert!(validate_drawing(&comb));
            let mapped: Vec<(i64, i64)> = pts
                .iter()
                .map(|&(x, y)| (a * x + b * y + tx, c * x + d_coef * y + ty))
                .collect();
            let moved = StraightLineDrawing::new(g, ints(&mapped)).unwrap();
            let (count2, comb2) = count_crossings(&moved).unwrap();
            prop_assert_eq!(count, count2);
            prop_assert_eq!(comb.crossings, comb2.crossings);
        }
    }
}
