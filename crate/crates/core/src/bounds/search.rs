//! Best certified lower bound for one instance.
//!
//! Dynamic programming over every smaller instance, up to [`SEARCH_CAP`]
//! vertices per side: each cell keeps the larger of its best density bound
//! and a counting step from a neighbour that has one vertex fewer. Chains
//! in either ceiling schedule and one-shot scalings are compositions of
//! such steps with fewer ceilings, so the table dominates all of them.
//! Beyond the cap the corner cell is scaled to the target.

use num_integer::Integer;

use super::certificate::{best_direct, counting_ratio, direct_steps, trivial_certificate};
use super::chains::counting_step;
use super::{hereditary_lift, BoundCertificate, BoundKind, Family, Instance, LinearBound};
use crate::error::{Error, Result};

pub const SEARCH_CAP: u64 = 200;

#[derive(Clone, Copy)]
enum Origin {
    Trivial,
    Direct(BoundKind),
    From(Instance),
}

/// A lifted bound with a shared integer denominator, for cheap evaluation
/// over the whole table.
struct FastBound {
    kind: BoundKind,
    min_vertices: u64,
    slope: i128,
    vertex: i128,
    constant: i128,
    den: i128,
}

impl FastBound {
    fn all(family: Family, k: u64) -> Result<Vec<FastBound>> {
        let mut out = Vec::new();
        for kind in BoundKind::ALL {
            let base = LinearBound::new(kind);
            if !base.applicability().covers(family) {
                continue;
            }
            let lb = if k > 1 {
                hereditary_lift(&base, k)?
            } else {
                base
            };
            let den = [lb.slope(), lb.vertex_coeff(), lb.constant()]
                .iter()
                .fold(num_bigint::BigInt::from(1), |acc, r| acc.lcm(r.denom()));
            let scaled = |r: &super::Rational| -> i128 {
                let v = r.numer() * (&den / r.denom());
                i128::try_from(v).expect("coefficients fit in 128 bits")
            };
            out.push(FastBound {
                kind,
                min_vertices: kind.min_vertices(),
                slope: scaled(lb.slope()),
                vertex: scaled(lb.vertex_coeff()),
                constant: scaled(lb.constant()),
                den: i128::try_from(den).expect("denominator fits in 128 bits"),
            });
        }
        Ok(out)
    }

    fn ceil_at(&self, n: u64, m: u128) -> u128 {
        let v = self.slope * m as i128 - self.vertex * i128::from(n) + self.constant;
        Integer::div_ceil(&v, &self.den).max(0) as u128
    }
}

struct Table {
    cols: u64,
    value: Vec<u128>,
    origin: Vec<Origin>,
}

impl Table {
    fn index(&self, i: Instance) -> usize {
        match i {
            Instance::Complete(n) => n as usize,
            Instance::Bipartite(a, b) => (a * (self.cols + 1) + b) as usize,
        }
    }

    fn get(&self, i: Instance) -> (u128, Origin) {
        let ix = self.index(i);
        (self.value[ix], self.origin[ix])
    }

    fn fill(&mut self, cell: Instance, bounds: &[FastBound], preds: &[Instance]) -> Result<()> {
        let (n, m) = (cell.vertices(), cell.edges());
        let mut best = (0u128, Origin::Trivial);
        for b in bounds.iter().filter(|b| n >= b.min_vertices) {
            let v = b.ceil_at(n, m);
            if v > best.0 {
                best = (v, Origin::Direct(b.kind));
            }
        }
        for &p in preds {
            let Ok((alpha, beta)) = counting_ratio(p, cell) else {
                continue;
            };
            let v = counting_step(alpha, beta, self.get(p).0)?;
            if v > best.0 {
                best = (v, Origin::From(p));
            }
        }
        let ix = self.index(cell);
        self.value[ix] = best.0;
        self.origin[ix] = best.1;
        Ok(())
    }

    fn certificate(&self, cell: Instance, k: u64) -> Result<BoundCertificate> {
        let mut path = vec![cell];
        let mut cur = cell;
        let start = loop {
            match self.get(cur).1 {
                Origin::From(p) => {
                    path.push(p);
                    cur = p;
                }
                o => break o,
            }
        };
        path.reverse();
        let seed = path[0];
        let mut cert = match start {
            Origin::Trivial => trivial_certificate(seed, k),
            Origin::Direct(kind) => {
                let (steps, value) = direct_steps(seed, kind, k)?;
                BoundCertificate {
                    family: seed.family(),
                    params: seed.params(),
                    k,
                    value,
                    steps,
                }
            }
            Origin::From(_) => unreachable!("loop stops at a non-step origin"),
        };
        for w in path.windows(2) {
            let (alpha, beta) = counting_ratio(w[0], w[1]).map_err(Error::Refused)?;
            cert.push_counting(alpha, beta, w[1].params())?;
        }
        cert.params = cell.params();
        debug_assert_eq!(cert.value, self.get(cell).0);
        Ok(cert)
    }
}

/// The strongest certified lower bound on `cr_k` of `target` over density
/// bounds, counting chains from every smaller instance, and scaling.
///
/// Ties go to the candidate found first: trivial, then density bounds in
/// [`BoundKind::ALL`] order, then steps adding a vertex to the first side,
/// then to the second side.
pub fn best_lower_bound(target: Instance, k: u64) -> Result<BoundCertificate> {
    if k == 0 {
        return Err(Error::Refused("k must be at least 1".into()));
    }
    target.check_size()?;
    let bounds = FastBound::all(target.family(), k)?;
    let (table, corner) = match target {
        Instance::Complete(n) => {
            let top = n.min(SEARCH_CAP);
            let mut t = Table {
                cols: 0,
                value: vec![0; top as usize + 1],
                origin: vec![Origin::Trivial; top as usize + 1],
            };
            for s in 1..=top {
                t.fill(Instance::Complete(s), &bounds, &[Instance::Complete(s - 1)])?;
            }
            (t, Instance::Complete(top))
        }
        Instance::Bipartite(p, q) => {
            let (rows, cols) = (p.min(SEARCH_CAP), q.min(SEARCH_CAP));
            let size = ((rows + 1) * (cols + 1)) as usize;
            let mut t = Table {
                cols,
                value: vec![0; size],
                origin: vec![Origin::Trivial; size],
            };
            for a in 1..=rows {
                for b in 1..=cols {
                    let preds = [Instance::Bipartite(a - 1, b), Instance::Bipartite(a, b - 1)];
                    t.fill(Instance::Bipartite(a, b), &bounds, &preds)?;
                }
            }
            (t, Instance::Bipartite(rows, cols))
        }
    };
    let from_table = table.certificate(corner, k)?;
    if corner == target {
        return Ok(from_table);
    }
    let direct = best_direct(target, k)?;
    let scaled = match from_table.value {
        0 => None,
        _ => from_table.scale_to(target).ok(),
    };
    Ok(match scaled {
        Some(s) if s.value > direct.value => s,
        _ => direct,
    })
}
