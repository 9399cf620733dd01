use super::Colouring;
use crate::bitset::{intersects, popcount_and, set_bit, Ones};
use crate::{Graph, VertexSet};

/// A t-dependent subset of `s` that is maximal under insertion, unless
/// `target` stops it first.
///
/// Members of `s` are scanned by ascending degree inside `s` (ties by label)
/// and each is kept iff the set stays t-dependent.
pub fn greedy_dependent_set(g: &Graph, s: &VertexSet, t: usize, target: Option<usize>) -> VertexSet {
    let mut order: Vec<(usize, usize)> = s.iter().filter(|&v| v < g.n()).map(|v| (g.degree_in(v, s), v)).collect();
    order.sort_unstable();
    let words = g.word_count();
    let mut chosen = vec![0u64; words];
    let mut saturated = vec![0u64; words];
    let mut deg = vec![0usize; g.n()];
    let mut size = 0;
    for (_, v) in order {
        if target.is_some_and(|k| size >= k) {
            break;
        }
        let row = g.row(v);
        let d = popcount_and(row, &chosen);
        if d > t || intersects(row, &saturated) {
            continue;
        }
        for wi in 0..words {
            let mut x = chosen[wi] & row[wi];
            while x != 0 {
                let u = wi * 64 + x.trailing_zeros() as usize;
                x &= x - 1;
                deg[u] += 1;
                if deg[u] == t {
                    set_bit(&mut saturated, u);
                }
            }
        }
        deg[v] = d;
        if d == t {
            set_bit(&mut saturated, v);
        }
        set_bit(&mut chosen, v);
        size += 1;
    }
    VertexSet::from_members(g.n(), Ones::new(&chosen))
}

/// Repeatedly removes a greedy maximal t-dependent set from the uncoloured
/// vertices and makes it a colour class, until every vertex is coloured.
pub fn greedy_peel_colouring(g: &Graph, t: usize) -> Colouring {
    let mut remaining = g.vertex_set();
    let mut assignment = vec![0; g.n()];
    let mut class = 0;
    while !remaining.is_empty() {
        let peeled = greedy_dependent_set(g, &remaining, t, None);
        for v in peeled.iter() {
            assignment[v] = class;
        }
        remaining.difference_with(&peeled);
        class += 1;
    }
    Colouring::from_assignment(assignment)
}

#[cfg(test)]
mod tests {
    use super::super::{is_t_dependent, verify_colouring};
    use super::*;
    use crate::RngSeed;

    #[test]
    fn edgeless_and_complete() {
        let g = Graph::empty(7);
        let s = VertexSet::from_members(7, [1, 3, 6]);
        assert_eq!(greedy_dependent_set(&g, &s, 0, None), s);
        let k4 = Graph::complete(4);
        assert_eq!(greedy_dependent_set(&k4, &k4.vertex_set(), 1, None).len(), 2);
        assert_eq!(greedy_dependent_set(&g, &g.vertex_set(), 0, Some(3)).len(), 3);
        assert_eq!(greedy_peel_colouring(&g, 0).class_count(), 1);
        assert_eq!(greedy_peel_colouring(&Graph::complete(5), 1).class_count(), 3);
        assert_eq!(greedy_peel_colouring(&Graph::empty(0), 1).class_count(), 0);
    }

    #[test]
    fn outputs_verify_and_are_maximal() {
        for seed in 0..30u64 {
            let g = Graph::sample_gnp(40, 0.4, RngSeed(seed)).unwrap();
            for t in [0, 1, 3] {
                let s = greedy_dependent_set(&g, &g.vertex_set(), t, None);
                assert!(is_t_dependent(&g, &s, t));
                for v in 0..g.n() {
                    if !s.contains(v) {
                        let mut bigger = s.clone();
                        bigger.insert(v);
                        assert!(!is_t_dependent(&g, &bigger, t));
                    }
                }
                assert!(verify_colouring(&g, t, &greedy_peel_colouring(&g, t)));
            }
        }
    }
}
