use super::{alpha_t_exact, greedy_peel_colouring, lovasz_decomposition, Colouring};
use crate::bitset::{clear_bit, popcount_and, set_bit, words_for};
use crate::{Error, Graph, Result};

/// Default vertex limit for [`chi_t_exact`].
pub const DEFAULT_CHI_CAP: usize = 24;

struct Assign<'a> {
    g: &'a Graph,
    t: usize,
    colours: usize,
    order: Vec<usize>,
    classes: Vec<Vec<u64>>,
    saturated: Vec<u64>,
    deg_in_class: Vec<usize>,
    assignment: Vec<usize>,
}

impl Assign<'_> {
    fn fits(&self, v: usize, c: usize) -> bool {
        let row = self.g.row(v);
        let class = &self.classes[c];
        if popcount_and(row, class) > self.t {
            return false;
        }
        !row.iter().zip(class).zip(&self.saturated).any(|((a, b), s)| a & b & s != 0)
    }

    fn place(&mut self, v: usize, c: usize) {
        let g = self.g;
        let mut d = 0;
        for u in g.neighbours(v) {
            if self.assignment[u] == c {
                d += 1;
                self.deg_in_class[u] += 1;
                if self.deg_in_class[u] == self.t {
                    set_bit(&mut self.saturated, u);
                }
            }
        }
        self.deg_in_class[v] = d;
        if d == self.t {
            set_bit(&mut self.saturated, v);
        }
        set_bit(&mut self.classes[c], v);
        self.assignment[v] = c;
    }

    fn unplace(&mut self, v: usize) {
        let c = self.assignment[v];
        self.assignment[v] = usize::MAX;
        clear_bit(&mut self.classes[c], v);
        clear_bit(&mut self.saturated, v);
        self.deg_in_class[v] = 0;
        let g = self.g;
        for u in g.neighbours(v) {
            if self.assignment[u] == c {
                if self.deg_in_class[u] == self.t {
                    clear_bit(&mut self.saturated, u);
                }
                self.deg_in_class[u] -= 1;
            }
        }
    }

    /// Colours `order[i..]`; classes are opened in first-use order, so class
    /// `used` is the only empty class worth trying.
    fn solve(&mut self, i: usize, used: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        let limit = (used + 1).min(self.colours);
        for c in 0..limit {
            if !self.fits(v, c) {
                continue;
            }
            self.place(v, c);
            if self.solve(i + 1, used.max(c + 1)) {
                return true;
            }
            self.unplace(v);
        }
        false
    }
}

fn try_colour(g: &Graph, t: usize, colours: usize) -> Option<Colouring> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let words = words_for(n);
    let mut search = Assign {
        g,
        t,
        colours,
        order,
        classes: vec![vec![0; words]; colours],
        saturated: vec![0; words],
        deg_in_class: vec![0; n],
        assignment: vec![usize::MAX; n],
    };
    search.solve(0, 0).then(|| Colouring::from_assignment(search.assignment))
}

/// [`chi_t_exact_with_cap`] with the default cap of 24 vertices.
pub fn chi_t_exact(g: &Graph, t: usize) -> Result<(usize, Colouring)> {
    chi_t_exact_with_cap(g, t, DEFAULT_CHI_CAP)
}

/// The t-improper chromatic number with an optimal colouring.
///
/// Class counts are tried upwards from `ceil(n / alpha^t)`; the first count
/// below the best heuristic colouring that admits an assignment wins.
pub fn chi_t_exact_with_cap(g: &Graph, t: usize, cap: usize) -> Result<(usize, Colouring)> {
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded { what: "exact t-improper chromatic number", n, cap });
    }
    if n == 0 {
        return Ok((0, Colouring::singletons(0)));
    }
    let (alpha, _) = alpha_t_exact(g, t);
    let lower = n.div_ceil(alpha);
    let peel = greedy_peel_colouring(g, t);
    let lovasz = lovasz_decomposition(g, t).colouring;
    let upper = if lovasz.class_count() < peel.class_count() { lovasz } else { peel };
    for colours in lower..upper.class_count() {
        if let Some(c) = try_colour(g, t, colours) {
            return Ok((colours, c));
        }
    }
    Ok((upper.class_count(), upper))
}
