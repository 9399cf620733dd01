mod common;

use common::{brute_alpha, brute_chi};
use improper_core::colouring::*;
use improper_core::{mix_seed, Graph, RngSeed};

/// 500 seeded `G(n, 1/2)` graphs with `2 <= n <= 9`.
fn corpus() -> impl Iterator<Item = Graph> {
    (0..500u64).map(|i| Graph::sample_gnp(2 + (i % 8) as usize, 0.5, mix_seed(RngSeed(9001), i)).unwrap())
}

#[test]
fn sandwich_monotonicity_and_ratio_bound() {
    for g in corpus() {
        let n = g.n();
        let delta = g.max_degree();
        let (chi, proper) = chi_t_exact(&g, 0).unwrap();
        assert!(verify_colouring(&g, 0, &proper));
        let mut prev: Option<(usize, usize)> = None;
        for t in 0..=delta {
            let (chi_t, c) = chi_t_exact(&g, t).unwrap();
            let (alpha_t, witness) = alpha_t_exact(&g, t);
            assert!(verify_colouring(&g, t, &c));
            assert!(is_t_dependent(&g, &witness, t) && witness.len() == alpha_t);
            assert_eq!(chi_t, brute_chi(&g, t), "chi n={n} t={t}");
            assert_eq!(alpha_t, brute_alpha(&g, t), "alpha n={n} t={t}");
            assert!(chi.div_ceil(t + 1) <= chi_t);
            assert!(chi_t <= (delta + 1).div_ceil(t + 1).min(chi));
            assert!(chi_t >= n.div_ceil(alpha_t));
            if let Some((pc, pa)) = prev {
                assert!(chi_t <= pc && alpha_t >= pa);
            }
            prev = Some((chi_t, alpha_t));
            let report = bounds_report(&g, t);
            assert!(report.is_consistent());
            assert_eq!(report.chi_t, Some(chi_t));
            assert!(greedy_peel_colouring(&g, t).class_count() >= chi_t);
            let d = lovasz_decomposition(&g, t);
            assert!(d.colouring.class_count() >= chi_t);
            assert!(d.moves <= n * delta.max(1));
        }
        assert_eq!(prev.map(|p| p.0), (n > 0).then_some(1));
    }
}

#[test]
fn named_examples() {
    let k5 = Graph::complete(5);
    assert_eq!(chi_t_exact(&k5, 1).unwrap().0, 3);
    assert_eq!(greedy_peel_colouring(&k5, 1).class_count(), 3);
    let k6 = Graph::complete(6);
    let d = lovasz_decomposition(&k6, 1);
    assert_eq!(d.colouring.class_count(), 3);
    assert!(d.colouring.classes().iter().all(|c| c.len() == 2));
    let star = Graph::new(10, &(1..10).map(|v| (0, v)).collect::<Vec<_>>()).unwrap();
    let d = lovasz_decomposition(&star, 0);
    assert!(d.colouring.class_count() <= 10 && verify_colouring(&star, 0, &d.colouring));
    assert_eq!(chi_t_exact(&star, 0).unwrap().0, 2);
    let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    assert_eq!(alpha_t_exact(&c5, 1).0, 3);
    assert_eq!(chi_t_exact(&c5, 1).unwrap().0, 2);
}

#[test]
fn exact_chi_at_the_cap_is_tractable() {
    for s in 0..3 {
        let g = Graph::sample_gnp(DEFAULT_CHI_CAP, 0.5, RngSeed(s)).unwrap();
        for t in [0, 2] {
            let (chi, c) = chi_t_exact(&g, t).unwrap();
            assert!(verify_colouring(&g, t, &c) && c.class_count() == chi);
        }
    }
    let big = Graph::sample_gnp(DEFAULT_CHI_CAP + 1, 0.5, RngSeed(0)).unwrap();
    assert!(matches!(chi_t_exact(&big, 0), Err(improper_core::Error::CapExceeded { .. })));
}
