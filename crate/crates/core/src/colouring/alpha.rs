//! Exact maximum t-dependent set by a Russian-doll branch and bound.
//!
//! Vertices are renumbered in degeneracy order and the suffixes
//! `V_i = {i, .., n-1}` are solved from the back. Heredity of
//! t-dependence gives `alpha^t(V_i) <= alpha^t(V_{i+1}) + 1`, so level `i`
//! only has to decide whether a set of size `alpha^t(V_{i+1}) + 1`
//! containing `i` exists, and `alpha^t(V_j)` bounds every node whose
//! candidates lie in `V_j`.
//!
//! Two more bounds prune a node with partial set `S`:
//! * a candidate adjacent to `u in S` uses one of `u`'s remaining
//!   `t - deg_S(u)` slots, so the candidates in `N(u)` contribute at most
//!   that many;
//! * a clique among the leftover candidates contributes at most `t + 1`.

use crate::bitset::{clear_bit, intersects, popcount, popcount_and, set_bit, Ones};
use crate::{Graph, VertexSet};

/// Removal order of the min-degree peeling (ties by lowest label).
pub(crate) fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (degree[v], v)).expect("vertex left");
        removed[v] = true;
        order.push(v);
        for u in g.neighbours(v) {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    order
}

/// Greedy clique partition of `rem` (in position order); each clique of
/// size `s` contributes `min(s, t + 1)`. Clears `rem`.
fn clique_cover_bound(g: &Graph, rem: &mut [u64], pool: &mut [u64], t: usize) -> usize {
    let mut bound = 0;
    while let Some(v) = Ones::new(rem).next() {
        clear_bit(rem, v);
        let mut size = 1;
        for (p, (r, a)) in pool.iter_mut().zip(rem.iter().zip(g.row(v))) {
            *p = r & a;
        }
        while let Some(w) = Ones::new(pool).next() {
            clear_bit(rem, w);
            size += 1;
            for (p, a) in pool.iter_mut().zip(g.row(w)) {
                *p &= a;
            }
        }
        bound += size.min(t + 1);
    }
    bound
}

/// Upper bound on `alpha^t(g)` from a greedy clique partition.
pub fn clique_cover_alpha_bound(g: &Graph, t: usize) -> usize {
    let mut rem = g.vertex_set().words().to_vec();
    let mut pool = vec![0; rem.len()];
    clique_cover_bound(g, &mut rem, &mut pool, t)
}

struct Search<'a> {
    g: &'a Graph,
    t: usize,
    /// `suffix_best[i] = alpha^t(V_i)` for the levels solved so far.
    suffix_best: Vec<usize>,
    record: usize,
    found: bool,
    witness: Vec<usize>,
    members: Vec<usize>,
    in_set: Vec<u64>,
    saturated: Vec<u64>,
    deg_in_set: Vec<usize>,
    candidates: Vec<Vec<u64>>,
    scratch: Vec<u64>,
    pool: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, t: usize) -> Self {
        let n = g.n();
        let words = g.word_count();
        Search {
            g,
            t,
            suffix_best: vec![0; n + 1],
            record: 0,
            found: false,
            witness: Vec::new(),
            members: Vec::new(),
            in_set: vec![0; words],
            saturated: vec![0; words],
            deg_in_set: vec![0; n],
            candidates: vec![vec![0; words]; n + 1],
            scratch: vec![0; words],
            pool: vec![0; words],
        }
    }

    fn push(&mut self, v: usize) {
        let row = self.g.row(v);
        let mut d = 0;
        for (wi, (&a, &b)) in self.in_set.iter().zip(row).enumerate() {
            let mut x = a & b;
            while x != 0 {
                let u = wi * 64 + x.trailing_zeros() as usize;
                x &= x - 1;
                d += 1;
                self.deg_in_set[u] += 1;
                if self.deg_in_set[u] == self.t {
                    set_bit(&mut self.saturated, u);
                }
            }
        }
        self.deg_in_set[v] = d;
        if d == self.t {
            set_bit(&mut self.saturated, v);
        }
        set_bit(&mut self.in_set, v);
        self.members.push(v);
    }

    fn pop(&mut self) {
        let v = self.members.pop().expect("nonempty");
        clear_bit(&mut self.in_set, v);
        clear_bit(&mut self.saturated, v);
        self.deg_in_set[v] = 0;
        let row = self.g.row(v);
        for (wi, (&a, &b)) in self.in_set.iter().zip(row).enumerate() {
            let mut x = a & b;
            while x != 0 {
                let u = wi * 64 + x.trailing_zeros() as usize;
                x &= x - 1;
                if self.deg_in_set[u] == self.t {
                    clear_bit(&mut self.saturated, u);
                }
                self.deg_in_set[u] -= 1;
            }
        }
    }

    /// Whether `w` can join the current set.
    #[inline]
    fn compatible(&self, w: usize) -> bool {
        let row = self.g.row(w);
        popcount_and(row, &self.in_set) <= self.t && !intersects(row, &self.saturated)
    }

    fn slot_and_clique_bound(&mut self, depth: usize) -> usize {
        self.scratch.copy_from_slice(&self.candidates[depth]);
        let mut bound = 0;
        let mut used = vec![false; self.members.len()];
        loop {
            let mut best: Option<(usize, usize, isize)> = None;
            for (i, &u) in self.members.iter().enumerate() {
                if used[i] {
                    continue;
                }
                let slack = self.t - self.deg_in_set[u];
                let covered = popcount_and(self.g.row(u), &self.scratch);
                let gain = covered as isize - slack as isize;
                if gain > 0 && best.is_none_or(|(_, _, g)| gain > g) {
                    best = Some((i, slack, gain));
                }
            }
            let Some((i, slack, _)) = best else { break };
            used[i] = true;
            bound += slack;
            let row = self.g.row(self.members[i]);
            for (s, a) in self.scratch.iter_mut().zip(row) {
                *s &= !a;
            }
        }
        bound + clique_cover_bound(self.g, &mut self.scratch, &mut self.pool, self.t)
    }

    fn expand(&mut self, depth: usize) {
        let size = self.members.len();
        if size > self.record {
            self.record = size;
            self.found = true;
            self.witness = self.members.clone();
            return;
        }
        let remaining = popcount(&self.candidates[depth]);
        if remaining == 0 || size + remaining <= self.record {
            return;
        }
        if size + self.slot_and_clique_bound(depth) <= self.record {
            return;
        }
        let mut cand = std::mem::take(&mut self.candidates[depth]);
        let mut remaining = remaining;
        while let Some(v) = Ones::new(&cand).next() {
            if size + remaining <= self.record || size + self.suffix_best[v] <= self.record {
                break;
            }
            clear_bit(&mut cand, v);
            remaining -= 1;
            self.push(v);
            let mut next = std::mem::take(&mut self.candidates[depth + 1]);
            next.iter_mut().for_each(|w| *w = 0);
            for w in Ones::new(&cand) {
                if self.compatible(w) {
                    set_bit(&mut next, w);
                }
            }
            self.candidates[depth + 1] = next;
            self.expand(depth + 1);
            self.pop();
            if self.found {
                break;
            }
        }
        self.candidates[depth] = cand;
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.n();
        for i in (0..n).rev() {
            self.record = self.suffix_best[i + 1];
            self.found = false;
            self.push(i);
            let mut cand = std::mem::take(&mut self.candidates[0]);
            cand.iter_mut().for_each(|w| *w = 0);
            for w in i + 1..n {
                if self.compatible(w) {
                    set_bit(&mut cand, w);
                }
            }
            self.candidates[0] = cand;
            self.expand(0);
            self.pop();
            self.suffix_best[i] = self.record;
        }
        self.witness
    }
}

/// Size of a largest t-dependent set of `g`, with a witness.
pub fn alpha_t_exact(g: &Graph, t: usize) -> (usize, VertexSet) {
    let n = g.n();
    if n == 0 {
        return (0, VertexSet::empty(0));
    }
    let order = degeneracy_order(g);
    let h = g.permuted(&order);
    let witness = Search::new(&h, t).run();
    let set = VertexSet::from_members(n, witness.iter().map(|&i| order[i]));
    (set.len(), set)
}
