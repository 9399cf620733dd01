use std::collections::BTreeSet;

use super::Colouring;
use crate::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LovaszDecomposition {
    /// The decomposition with empty parts dropped.
    pub colouring: Colouring,
    /// `ceil((Delta + 1) / (t + 1))`, the number of parts searched over.
    pub part_budget: usize,
    /// Vertex moves made by the local search.
    pub moves: usize,
}

/// Partitions `g` into at most `ceil((Delta + 1) / (t + 1))` t-dependent parts.
///
/// Starts from the round-robin assignment `v mod m` and, while some vertex
/// has more than `t` neighbours in its own part, moves the lowest such vertex
/// to the part where it has fewest neighbours (lowest index on ties). That
/// part holds at most `floor(deg / m) <= t` of its neighbours, so each move
/// lowers the number of edges inside parts and the search ends.
pub fn lovasz_decomposition(g: &Graph, t: usize) -> LovaszDecomposition {
    let n = g.n();
    let parts = (g.max_degree() + 1).div_ceil(t + 1);
    let mut part: Vec<usize> = (0..n).map(|v| v % parts).collect();
    // inside[v * parts + c] = neighbours of v in part c
    let mut inside = vec![0u32; n * parts];
    for v in 0..n {
        for u in g.neighbours(v) {
            inside[v * parts + part[u]] += 1;
        }
    }
    let violates = |inside: &[u32], part: &[usize], v: usize| inside[v * parts + part[v]] as usize > t;
    let mut violators: BTreeSet<usize> = (0..n).filter(|&v| violates(&inside, &part, v)).collect();
    let mut moves = 0;
    while let Some(v) = violators.pop_first() {
        let counts = &inside[v * parts..(v + 1) * parts];
        let (target, _) = counts.iter().enumerate().min_by_key(|&(c, &k)| (k, c)).expect("parts >= 1");
        let source = part[v];
        debug_assert_ne!(target, source);
        part[v] = target;
        moves += 1;
        for u in g.neighbours(v) {
            inside[u * parts + source] -= 1;
            inside[u * parts + target] += 1;
            if part[u] == source || part[u] == target {
                if violates(&inside, &part, u) {
                    violators.insert(u);
                } else {
                    violators.remove(&u);
                }
            }
        }
    }
    LovaszDecomposition { colouring: Colouring::from_assignment(part), part_budget: parts, moves }
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::super::verify_colouring;
    use super::*;
    use crate::RngSeed;

    #[test]
    fn complete_graph_pairs_up() {
        let d = lovasz_decomposition(&Graph::complete(6), 1);
        assert_eq!(d.part_budget, 3);
        assert_eq!(d.colouring.class_count(), 3);
        assert!(d.colouring.classes().iter().all(|c| c.len() == 2));
    }

    #[test]
    fn star_is_valid_but_loose() {
        let g = star(10);
        let d = lovasz_decomposition(&g, 0);
        assert!(d.colouring.class_count() <= 10);
        assert!(verify_colouring(&g, 0, &d.colouring));
    }

    #[test]
    fn budget_and_move_bound_on_random_graphs() {
        for seed in 0..500u64 {
            let n = 1 + (seed % 40) as usize;
            let p = [0.1, 0.3, 0.5, 0.9][(seed % 4) as usize];
            let g = Graph::sample_gnp(n, p, RngSeed(seed)).unwrap();
            let t = (seed / 7 % 5) as usize;
            let d = lovasz_decomposition(&g, t);
            assert!(verify_colouring(&g, t, &d.colouring), "seed {seed}");
            assert!(d.colouring.class_count() <= d.part_budget);
            assert_eq!(d.part_budget, (g.max_degree() + 1).div_ceil(t + 1));
            assert!(d.moves <= n * g.max_degree().max(1));
        }
    }
}
