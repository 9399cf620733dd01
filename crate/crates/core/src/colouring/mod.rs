//! t-dependent sets and t-improper colourings: verification, exact solvers
//! for `alpha^t` and `chi^t`, and constructive heuristics.

mod alpha;
mod bounds;
mod chi;
mod greedy;
mod lovasz;
mod strategy;

pub use alpha::{alpha_t_exact, clique_cover_alpha_bound};
pub use bounds::{bounds_report, AlphaValue, BoundsReport, ALPHA_EXACT_CAP};
pub use chi::{chi_t_exact, chi_t_exact_with_cap, DEFAULT_CHI_CAP};
pub use greedy::{greedy_dependent_set, greedy_peel_colouring};
pub use lovasz::{lovasz_decomposition, LovaszDecomposition};
pub use strategy::{
    ColouringStrategy, DependentSetStrategy, ExactColouring, ExactDependentSet,
    GreedyDependentSet, LovaszColouring, PeelColouring, StrategyRegistry,
};

use serde::{Deserialize, Serialize};

use crate::{Graph, VertexSet};

/// `true` iff every vertex of `s` has at most `t` neighbours inside `s`.
pub fn is_t_dependent(g: &Graph, s: &VertexSet, t: usize) -> bool {
    s.iter().all(|v| g.degree_in(v, s) <= t)
}

/// A partition of the vertices into classes `0..class_count`, all nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    assignment: Vec<usize>,
    class_count: usize,
}

impl Colouring {
    /// Relabels arbitrary class labels to `0..k`, preserving their order, so
    /// that no class is empty.
    pub fn from_assignment(assignment: Vec<usize>) -> Self {
        let mut labels = assignment.clone();
        labels.sort_unstable();
        labels.dedup();
        let assignment = assignment
            .iter()
            .map(|c| labels.binary_search(c).expect("label present"))
            .collect();
        Colouring { assignment, class_count: labels.len() }
    }

    /// Builds a colouring from disjoint classes covering `0..n`. Returns
    /// `None` if the classes overlap or leave a vertex uncovered.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Option<Self> {
        let mut assignment = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= n || assignment[v] != usize::MAX {
                    return None;
                }
                assignment[v] = c;
            }
        }
        if assignment.contains(&usize::MAX) {
            return None;
        }
        Some(Self::from_assignment(assignment))
    }

    pub fn singletons(n: usize) -> Self {
        Colouring { assignment: (0..n).collect(), class_count: n }
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// `true` iff `c` covers exactly the vertices of `g` and every class is t-dependent.
pub fn verify_colouring(g: &Graph, t: usize, c: &Colouring) -> bool {
    if c.assignment.len() != g.n() {
        return false;
    }
    let mut sets = vec![VertexSet::empty(g.n()); c.class_count];
    for (v, &class) in c.assignment.iter().enumerate() {
        if class >= c.class_count {
            return false;
        }
        sets[class].insert(v);
    }
    (0..g.n()).all(|v| g.degree_in(v, &sets[c.assignment[v]]) <= t)
}


#[cfg(test)]
mod tests {
    use super::test_graphs::*;
    use super::*;

    #[test]
    fn dependence_checks() {
        let k3 = Graph::complete(3);
        assert!(!is_t_dependent(&k3, &k3.vertex_set(), 1));
        assert!(is_t_dependent(&k3, &k3.vertex_set(), 2));
        assert!(is_t_dependent(&k3, &VertexSet::empty(3), 0));
        let c5 = cycle(5);
        let s = VertexSet::from_members(5, [0, 1, 2]);
        assert!(!is_t_dependent(&c5, &s, 1));
        assert!(is_t_dependent(&c5, &s, 2));
    }

    #[test]
    fn colouring_construction() {
        let c = Colouring::from_assignment(vec![7, 3, 7, 9]);
        assert_eq!(c.assignment(), &[1, 0, 1, 2]);
        assert_eq!(c.class_count(), 3);
        assert_eq!(c.classes(), vec![vec![1], vec![0, 2], vec![3]]);
        assert!(Colouring::from_classes(3, &[vec![0, 1], vec![1, 2]]).is_none());
        assert!(Colouring::from_classes(3, &[vec![0, 1]]).is_none());
        assert_eq!(Colouring::from_classes(3, &[vec![2], vec![0, 1]]).unwrap().class_of(2), 0);
    }

    #[test]
    fn verification() {
        let k3 = Graph::complete(3);
        assert!(!verify_colouring(&k3, 1, &Colouring::from_assignment(vec![0, 0, 0])));
        assert!(verify_colouring(&k3, 2, &Colouring::from_assignment(vec![0, 0, 0])));
        for g in [k3, petersen(), star(6), Graph::empty(4)] {
            for t in 0..3 {
                assert!(verify_colouring(&g, t, &Colouring::singletons(g.n())));
            }
        }
        assert!(!verify_colouring(&Graph::complete(3), 0, &Colouring::singletons(2)));
    }
}
