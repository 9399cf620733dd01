use serde::{Deserialize, Serialize};

use super::{alpha_t_exact, chi_t_exact_with_cap, clique_cover_alpha_bound, DEFAULT_CHI_CAP};
use crate::Graph;

/// Largest graph for which [`bounds_report`] runs the exact `alpha^t` search.
pub const ALPHA_EXACT_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum AlphaValue {
    Exact(usize),
    UpperBound(usize),
}

impl AlphaValue {
    pub fn value(&self) -> usize {
        match *self {
            AlphaValue::Exact(v) | AlphaValue::UpperBound(v) => v,
        }
    }
}

/// Certified lower and upper bounds on `chi^t(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub t: usize,
    pub max_degree: usize,
    pub alpha_t: AlphaValue,
    /// `ceil(n / alpha^t)`, using the exact value or an upper bound on `alpha^t`.
    pub chi_lower_ratio: usize,
    /// `ceil(chi / (t + 1))`, when the proper chromatic number is computed.
    pub chi_lower_proper: Option<usize>,
    /// `ceil((Delta + 1) / (t + 1))`.
    pub chi_upper_lovasz: usize,
    /// The proper chromatic number `chi`, when computed.
    pub chi_upper_proper: Option<usize>,
    /// The exact `chi^t`, when the graph is small enough.
    pub chi_t: Option<usize>,
}

impl BoundsReport {
    pub fn lower(&self) -> usize {
        self.chi_lower_ratio.max(self.chi_lower_proper.unwrap_or(0))
    }

    pub fn upper(&self) -> usize {
        self.chi_upper_proper.map_or(self.chi_upper_lovasz, |c| c.min(self.chi_upper_lovasz))
    }

    pub fn is_consistent(&self) -> bool {
        let exact_ok = self.chi_t.is_none_or(|c| self.lower() <= c && c <= self.upper());
        self.lower() <= self.upper() && exact_ok
    }
}

/// Bounds from the dependence ratio, the proper chromatic number and the
/// maximum degree. Exact sub-results are filled in only for graphs with at
/// most [`ALPHA_EXACT_CAP`] (for `alpha^t`) or [`DEFAULT_CHI_CAP`] (for `chi`
/// and `chi^t`) vertices.
pub fn bounds_report(g: &Graph, t: usize) -> BoundsReport {
    let n = g.n();
    let max_degree = g.max_degree();
    if n == 0 {
        return BoundsReport {
            n,
            t,
            max_degree,
            alpha_t: AlphaValue::Exact(0),
            chi_lower_ratio: 0,
            chi_lower_proper: Some(0),
            chi_upper_lovasz: 0,
            chi_upper_proper: Some(0),
            chi_t: Some(0),
        };
    }
    let alpha_t = if n <= ALPHA_EXACT_CAP {
        AlphaValue::Exact(alpha_t_exact(g, t).0)
    } else {
        AlphaValue::UpperBound(clique_cover_alpha_bound(g, t))
    };
    let chi = chi_t_exact_with_cap(g, 0, DEFAULT_CHI_CAP).ok().map(|(c, _)| c);
    let chi_t = chi_t_exact_with_cap(g, t, DEFAULT_CHI_CAP).ok().map(|(c, _)| c);
    BoundsReport {
        n,
        t,
        max_degree,
        alpha_t,
        chi_lower_ratio: n.div_ceil(alpha_t.value()),
        chi_lower_proper: chi.map(|c| c.div_ceil(t + 1)),
        chi_upper_lovasz: (max_degree + 1).div_ceil(t + 1),
        chi_upper_proper: chi,
        chi_t,
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::*;
    use crate::RngSeed;

    #[test]
    fn complete_graph_is_pinned() {
        let r = bounds_report(&Graph::complete(6), 1);
        assert_eq!(r.alpha_t, AlphaValue::Exact(2));
        assert_eq!(r.chi_lower_ratio, 3);
        assert_eq!(r.chi_lower_proper, Some(3));
        assert_eq!(r.chi_upper_lovasz, 3);
        assert_eq!(r.chi_upper_proper, Some(6));
        assert_eq!((r.lower(), r.upper()), (3, 3));
    }

    #[test]
    fn edgeless_graph() {
        for t in 0..3 {
            let r = bounds_report(&Graph::empty(5), t);
            assert_eq!((r.lower(), r.upper(), r.chi_t), (1, 1, Some(1)));
        }
    }

    #[test]
    fn five_cycle() {
        let r = bounds_report(&cycle(5), 1);
        assert_eq!(r.alpha_t, AlphaValue::Exact(3));
        assert_eq!(r.chi_lower_ratio, 2);
        assert_eq!(r.chi_t, Some(2));
        assert!(r.is_consistent());
    }

    #[test]
    fn large_graphs_fall_back_to_bounds() {
        let g = Graph::sample_gnp(100, 0.3, RngSeed(4)).unwrap();
        let r = bounds_report(&g, 2);
        assert!(matches!(r.alpha_t, AlphaValue::UpperBound(_)));
        assert_eq!(r.chi_t, None);
        assert!(r.is_consistent());
    }
}
