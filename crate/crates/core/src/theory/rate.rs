use super::TheoryParams;

/// The Bernoulli(`p`) rate function
/// `x ln(x/p) + (1 - x) ln((1 - x)/q)` on `[0, 1]`, `+inf` elsewhere.
///
/// Evaluated through `ln_1p` so that values near the minimum at `x = p`
/// keep full relative precision.
pub fn lambda_star(x: f64, params: &TheoryParams) -> f64 {
    let (p, q) = (params.p(), params.q());
    if x.is_nan() || !(0.0..=1.0).contains(&x) {
        return f64::INFINITY;
    }
    if x == p {
        return 0.0;
    }
    if x == 0.0 {
        return -params.ln_q();
    }
    if x == 1.0 {
        return -params.ln_p();
    }
    let d = x - p;
    let v = x * (d / p).ln_1p() + (1.0 - x) * (-d / q).ln_1p();
    v.max(0.0)
}

/// `ln C(n, k)`; `-inf` when `k > n`. Exact integer arithmetic for `n <= 64`,
/// otherwise a sum of `min(k, n - k)` logarithms of ratios.
pub fn ln_choose(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let k = k.min(n - k);
    if n <= 64 {
        let mut c: u128 = 1;
        for i in 0..k as u128 {
            c = c * (n as u128 - i) / (i + 1);
        }
        return (c as f64).ln();
    }
    (1..=k).map(|i| ((n - k + i) as f64 / i as f64).ln()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: f64) -> TheoryParams {
        TheoryParams::new(p).unwrap()
    }

    #[test]
    fn boundary_values() {
        let h = params(0.5);
        assert_eq!(lambda_star(0.5, &h), 0.0);
        assert!((lambda_star(0.0, &h) - std::f64::consts::LN_2).abs() < 1e-15);
        assert!((lambda_star(1.0, &h) - std::f64::consts::LN_2).abs() < 1e-15);
        let p = params(0.3);
        assert!((lambda_star(0.0, &p) - (1.0 / 0.7f64).ln()).abs() < 1e-15);
        assert!((lambda_star(1.0, &p) - (1.0 / 0.3f64).ln()).abs() < 1e-15);
        assert_eq!(lambda_star(-1e-9, &p), f64::INFINITY);
        assert_eq!(lambda_star(1.0 + 1e-9, &p), f64::INFINITY);
        assert_eq!(lambda_star(f64::NAN, &p), f64::INFINITY);
    }

    #[test]
    fn binomial_coefficients() {
        assert_eq!(ln_choose(5, 0), 0.0);
        assert!((ln_choose(10, 3) - 120f64.ln()).abs() < 1e-14);
        assert!((ln_choose(64, 32) - 1832624140942590534f64.ln()).abs() < 1e-12);
        assert_eq!(ln_choose(3, 4), f64::NEG_INFINITY);
        // C(100, 50) = 100891344545564193334812497256
        assert!((ln_choose(100, 50) - 1.008_913_445_455_642e29_f64.ln()).abs() < 1e-11);
        assert_eq!(ln_choose(100, 97), ln_choose(100, 3));
    }
}
