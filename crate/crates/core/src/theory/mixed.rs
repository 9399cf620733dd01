//! Tails of `X + Y` where `X ~ Bin(n1, p)` and `Y / 2 ~ Bin(n2, p)`.

use super::{lambda_star, BoundKind, TailBound, TheoryParams};
use crate::{Error, Result};

/// Largest `n1 + n2` accepted by [`mixedbin_tail_exact`].
pub const MIXED_EXACT_CAP: u64 = 64;

fn pmf(n: u64, params: &TheoryParams) -> Vec<f64> {
    let mut c: u64 = 1;
    (0..=n)
        .map(|i| {
            if i > 0 {
                c = (c as u128 * (n - i + 1) as u128 / i as u128) as u64;
            }
            c as f64 * params.p().powi(i as i32) * params.q().powi((n - i) as i32)
        })
        .collect()
}

/// Exact `Pr(X + Y <= (n1 + 2 n2) x)` by direct convolution.
pub fn mixedbin_tail_exact(n1: u64, n2: u64, x: f64, params: &TheoryParams) -> Result<TailBound> {
    if n1 + n2 > MIXED_EXACT_CAP {
        return Err(Error::CapExceeded {
            what: "exact mixed-binomial convolution",
            n: (n1 + n2) as usize,
            cap: MIXED_EXACT_CAP as usize,
        });
    }
    let exact = |log| Ok(TailBound::new(log, BoundKind::Exact));
    let total = (n1 + 2 * n2) as f64;
    let threshold = total * x;
    if threshold.is_nan() || threshold < 0.0 {
        return exact(f64::NEG_INFINITY);
    }
    if threshold >= total {
        return exact(0.0);
    }
    // Absorb rounding in products like 20 * (3 * 0.2 / 4).
    let limit = (threshold + 1e-9 * threshold.max(1.0)).floor() as u64;
    let (px, py) = (pmf(n1, params), pmf(n2, params));
    let mut mass = 0.0;
    for (j, &wy) in py.iter().enumerate() {
        let y = 2 * j as u64;
        if y > limit {
            break;
        }
        let top = (limit - y).min(n1) as usize;
        mass += wy * px[..=top].iter().sum::<f64>();
    }
    exact(mass.min(1.0).ln())
}

/// `Pr(X + Y <= (n1 + 2 n2) x) <= exp(-(n1 + 2 n2) Lambda*(x) / 2)` for `0 <= x <= p`.
pub fn mixedbin_upper(n1: u64, n2: u64, x: f64, params: &TheoryParams) -> Result<TailBound> {
    if !(0.0..=params.p()).contains(&x) {
        return Err(Error::precondition(format!(
            "mixed-binomial bound needs 0 <= x <= p = {}, got {x}",
            params.p()
        )));
    }
    let total = (n1 + 2 * n2) as f64;
    Ok(TailBound::new(-0.5 * total * lambda_star(x, params), BoundKind::Upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_instance() {
        let h = TheoryParams::new(0.5).unwrap();
        let exact = mixedbin_tail_exact(2, 1, 0.25, &h).unwrap();
        assert!((exact.value() - 0.375).abs() < 1e-15);
        // exp(-2 Lambda*(1/4)) = 0.769800358919501 at p = 1/2.
        let bound = mixedbin_upper(2, 1, 0.25, &h).unwrap();
        assert!((bound.value() - 0.769_800_358_919_501).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs() {
        let p = TheoryParams::new(0.3).unwrap();
        assert_eq!(mixedbin_tail_exact(4, 3, 1.0, &p).unwrap().value(), 1.0);
        assert_eq!(mixedbin_tail_exact(0, 0, 0.1, &p).unwrap().value(), 1.0);
        // X absent: Pr(2 Bin(5, p) <= 10 * 0.35) = Pr(Bin(5, p) <= 1).
        let e = mixedbin_tail_exact(0, 5, 0.35, &p).unwrap().value();
        let direct = 0.7f64.powi(5) + 5.0 * 0.3 * 0.7f64.powi(4);
        assert!((e - direct).abs() < 1e-14);
        assert!(matches!(mixedbin_tail_exact(40, 25, 0.1, &p), Err(Error::CapExceeded { .. })));
        assert_eq!(mixedbin_upper(3, 3, 0.3, &p).unwrap().value(), 1.0);
        assert!(mixedbin_upper(3, 3, 0.31, &p).is_err());
        assert!(mixedbin_upper(3, 3, -0.01, &p).is_err());
    }
}
