//! Named solver strategies, looked up at runtime by the CLI and the
//! experiment harness.

use std::collections::BTreeMap;

use super::{
    alpha_t_exact, chi_t_exact_with_cap, greedy_dependent_set, greedy_peel_colouring,
    lovasz_decomposition, Colouring, DEFAULT_CHI_CAP,
};
use crate::{Error, Graph, Result, VertexSet};

/// Produces a t-improper colouring.
pub trait ColouringStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    /// Whether the class count is always `chi^t`.
    fn is_exact(&self) -> bool;
    fn colour(&self, g: &Graph, t: usize) -> Result<Colouring>;
}

/// Produces a t-dependent set.
pub trait DependentSetStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    /// Whether the returned set is always a maximum one.
    fn is_exact(&self) -> bool;
    fn find(&self, g: &Graph, t: usize) -> Result<VertexSet>;
}

#[derive(Debug, Clone, Copy)]
pub struct ExactColouring {
    pub cap: usize,
}

impl Default for ExactColouring {
    fn default() -> Self {
        ExactColouring { cap: DEFAULT_CHI_CAP }
    }
}

impl ColouringStrategy for ExactColouring {
    fn name(&self) -> &'static str {
        "exact"
    }
    fn description(&self) -> &'static str {
        "branch and bound over class assignments; optimal, small graphs only"
    }
    fn is_exact(&self) -> bool {
        true
    }
    fn colour(&self, g: &Graph, t: usize) -> Result<Colouring> {
        chi_t_exact_with_cap(g, t, self.cap).map(|(_, c)| c)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct PeelColouring;

impl ColouringStrategy for PeelColouring {
    fn name(&self) -> &'static str {
        "greedy"
    }
    fn description(&self) -> &'static str {
        "repeatedly peel a greedy maximal t-dependent set"
    }
    fn is_exact(&self) -> bool {
        false
    }
    fn colour(&self, g: &Graph, t: usize) -> Result<Colouring> {
        Ok(greedy_peel_colouring(g, t))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LovaszColouring;

impl ColouringStrategy for LovaszColouring {
    fn name(&self) -> &'static str {
        "lovasz"
    }
    fn description(&self) -> &'static str {
        "local search into ceil((Delta+1)/(t+1)) parts"
    }
    fn is_exact(&self) -> bool {
        false
    }
    fn colour(&self, g: &Graph, t: usize) -> Result<Colouring> {
        Ok(lovasz_decomposition(g, t).colouring)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ExactDependentSet;

impl DependentSetStrategy for ExactDependentSet {
    fn name(&self) -> &'static str {
        "exact"
    }
    fn description(&self) -> &'static str {
        "Russian-doll branch and bound for a maximum t-dependent set"
    }
    fn is_exact(&self) -> bool {
        true
    }
    fn find(&self, g: &Graph, t: usize) -> Result<VertexSet> {
        Ok(alpha_t_exact(g, t).1)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GreedyDependentSet;

impl DependentSetStrategy for GreedyDependentSet {
    fn name(&self) -> &'static str {
        "greedy"
    }
    fn description(&self) -> &'static str {
        "insertion by ascending degree; maximal, not maximum"
    }
    fn is_exact(&self) -> bool {
        false
    }
    fn find(&self, g: &Graph, t: usize) -> Result<VertexSet> {
        Ok(greedy_dependent_set(g, &g.vertex_set(), t, None))
    }
}

/// Strategies keyed by name.
#[derive(Default)]
pub struct StrategyRegistry {
    colouring: BTreeMap<&'static str, Box<dyn ColouringStrategy>>,
    dependent_set: BTreeMap<&'static str, Box<dyn DependentSetStrategy>>,
}

impl StrategyRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registry holding `exact`, `greedy` and `lovasz` colourers and `exact`
    /// and `greedy` dependent-set finders.
    pub fn with_builtins() -> Self {
        let mut r = Self::new();
        r.register_colouring(Box::new(ExactColouring::default()));
        r.register_colouring(Box::new(PeelColouring));
        r.register_colouring(Box::new(LovaszColouring));
        r.register_dependent_set(Box::new(ExactDependentSet));
        r.register_dependent_set(Box::new(GreedyDependentSet));
        r
    }

    /// Adds a strategy, replacing any earlier one with the same name.
    pub fn register_colouring(&mut self, s: Box<dyn ColouringStrategy>) {
        self.colouring.insert(s.name(), s);
    }

    pub fn register_dependent_set(&mut self, s: Box<dyn DependentSetStrategy>) {
        self.dependent_set.insert(s.name(), s);
    }

    pub fn colouring(&self, name: &str) -> Result<&dyn ColouringStrategy> {
        self.colouring.get(name).map(|b| b.as_ref()).ok_or_else(|| Error::UnknownStrategy(name.to_owned()))
    }

    pub fn dependent_set(&self, name: &str) -> Result<&dyn DependentSetStrategy> {
        self.dependent_set.get(name).map(|b| b.as_ref()).ok_or_else(|| Error::UnknownStrategy(name.to_owned()))
    }

    pub fn colouring_names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.colouring.keys().copied()
    }

    pub fn dependent_set_names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.dependent_set.keys().copied()
    }
}
