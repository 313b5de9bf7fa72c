//! Left-right planarity test (de Fraysseix–Rosenstiehl criterion, in the
//! formulation by Brandes). Both DFS phases are iterative so deep graphs do
//! not exhaust the call stack. Only the test is implemented, not the
//! embedding phase.

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Debug, Clone, Copy)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState {
    // per vertex
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    adj: Vec<Vec<(usize, usize)>>,
    ordered: Vec<Vec<usize>>,
    // per edge (oriented during the first DFS)
    src: Vec<usize>,
    tgt: Vec<usize>,
    oriented: Vec<bool>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    lowpt_edge: Vec<usize>,
    reference: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

/// Returns true iff `g` is planar.
pub fn lr_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n > 2 && m > 3 * n - 6 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for (i, e) in g.edges().enumerate() {
        adj[e.u()].push((e.v(), i));
        adj[e.v()].push((e.u(), i));
    }
    let mut st = LrState {
        height: vec![NONE; n],
        parent_edge: vec![NONE; n],
        adj,
        ordered: vec![Vec::new(); n],
        src: vec![NONE; m],
        tgt: vec![NONE; m],
        oriented: vec![false; m],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting: vec![0; m],
        lowpt_edge: vec![NONE; m],
        reference: vec![NONE; m],
        stack_bottom: vec![0; m],
        stack: Vec::new(),
    };

    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            roots.push(v);
            st.orient(v);
        }
    }
    for v in 0..n {
        let mut out: Vec<usize> = st.adj[v]
            .iter()
            .map(|&(_, e)| e)
            .filter(|&e| st.src[e] == v)
            .collect();
        out.sort_by_key(|&e| st.nesting[e]);
        st.ordered[v] = out;
    }
    roots.into_iter().all(|r| st.test(r))
}

impl LrState {
    fn orient(&mut self, root: usize) {
        let mut dfs = vec![root];
        let mut next_index = vec![0usize; self.height.len()];
        let mut resumed = vec![false; self.src.len()];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            while next_index[v] < self.adj[v].len() {
                let (w, vw) = self.adj[v][next_index[v]];
                if !resumed[vw] {
                    if self.oriented[vw] {
                        next_index[v] += 1;
                        continue;
                    }
                    self.oriented[vw] = true;
                    self.src[vw] = v;
                    self.tgt[vw] = w;
                    self.lowpt[vw] = self.height[v];
                    self.lowpt2[vw] = self.height[v];
                    if self.height[w] == NONE {
                        // tree edge: finish w first, then come back to v
                        self.parent_edge[w] = vw;
                        self.height[w] = self.height[v] + 1;
                        dfs.push(v);
                        dfs.push(w);
                        resumed[vw] = true;
                        break;
                    }
                    // back edge
                    self.lowpt[vw] = self.height[w];
                }
                self.nesting[vw] = 2 * self.lowpt[vw];
                if self.lowpt2[vw] < self.height[v] {
                    // chordal
                    self.nesting[vw] += 1;
                }
                if e != NONE {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                next_index[v] += 1;
            }
        }
    }

    fn test(&mut self, root: usize) -> bool {
        let mut dfs = vec![root];
        let mut next_index = vec![0usize; self.height.len()];
        let mut resumed = vec![false; self.src.len()];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            let mut descended = false;
            while next_index[v] < self.ordered[v].len() {
                let ei = self.ordered[v][next_index[v]];
                let w = self.tgt[ei];
                if !resumed[ei] {
                    self.stack_bottom[ei] = self.stack.len();
                    if ei == self.parent_edge[w] {
                        dfs.push(v);
                        dfs.push(w);
                        resumed[ei] = true;
                        descended = true;
                        break;
                    }
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        left: Interval::EMPTY,
                        right: Interval { low: ei, high: ei },
                    });
                }
                // integrate new return edges
                if self.lowpt[ei] < self.height[v] {
                    if ei == self.ordered[v][0] {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                next_index[v] += 1;
            }
            if !descended && e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn conflicting(&self, interval: &Interval, b: usize) -> bool {
        !interval.is_empty() && self.lowpt[interval.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn set_ref(&mut self, edge: usize, target: usize) {
        if edge != NONE {
            self.reference[edge] = target;
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        // merge return edges of ei into p.right
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                // align
                let target = self.lowpt_edge[e];
                self.set_ref(q.right.low, target);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        let hu = self.height[u];
        // drop entire conflict pairs
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            // trim left interval
            while p.left.high != NONE && self.tgt[p.left.high] == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                // just emptied
                self.set_ref(p.left.low, p.right.low);
                p.left.low = NONE;
            }
            // trim right interval
            while p.right.high != NONE && self.tgt[p.right.high] == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.set_ref(p.right.low, p.left.low);
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        // side of e is the side of a highest return edge
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                self.reference[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr])
                {
                    hl
                } else {
                    hr
                };
            }
        }
    }
}
