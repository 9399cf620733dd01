//! Exhaustive oracles for graphs small enough to enumerate (n <= 16).

#![allow(dead_code)]

use improper_core::Graph;

/// Neighbourhoods as bit masks.
pub fn rows(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 16, "oracle limited to 16 vertices");
    (0..g.n()).map(|u| (0..g.n()).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v)).collect()
}

pub fn mask_is_dependent(rows: &[u32], mask: u32, t: usize) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (rows[v] & mask).count_ones() as usize > t {
            return false;
        }
    }
    true
}

/// Largest t-dependent set, by enumerating every subset.
pub fn brute_alpha(g: &Graph, t: usize) -> usize {
    let rows = rows(g);
    (0u32..1 << g.n())
        .filter(|&m| mask_is_dependent(&rows, m, t))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Fewest t-dependent classes, by enumerating every set partition.
pub fn brute_chi(g: &Graph, t: usize) -> usize {
    fn walk(rows: &[u32], t: usize, v: usize, blocks: &mut Vec<u32>, best: &mut usize) {
        if v == rows.len() {
            if blocks.iter().all(|&b| mask_is_dependent(rows, b, t)) {
                *best = (*best).min(blocks.len());
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i] |= 1 << v;
            walk(rows, t, v + 1, blocks, best);
            blocks[i] &= !(1 << v);
        }
        blocks.push(1 << v);
        walk(rows, t, v + 1, blocks, best);
        blocks.pop();
    }
    let rows = rows(g);
    let mut best = g.n();
    walk(&rows, t, 0, &mut Vec::new(), &mut best);
    best
}

/// The graph on `n` vertices whose edges are the set bits of `code`, pairs in row-major order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}
