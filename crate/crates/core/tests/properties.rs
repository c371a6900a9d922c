use exg_core::stats::{int_points_gauss, integral, intsum, zero};
use exg_core::*;
use proptest::prelude::*;

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.ln()..hi.ln()).prop_map(f64::exp)
}

fn params() -> impl Strategy<Value = ExGaussParams> {
    (-1e3..1e3f64, log_uniform(1e-3, 1e3), log_uniform(1e-3, 1e3))
        .prop_map(|(m, s, t)| ExGaussParams::new(m, s, t).unwrap())
}

fn moderate_params() -> impl Strategy<Value = ExGaussParams> {
    // sigma / tau within [1/20, 20]
    (
        -1e3..1e3f64,
        log_uniform(1e-2, 1e3),
        log_uniform(0.05, 20.0),
    )
        .prop_map(|(m, s, ratio)| ExGaussParams::new(m, s, s / ratio).unwrap())
}

proptest! {
    #[test]
    fn skewness_strictly_inside_bounds(p in params()) {
        let t = pars_to_stats(&p).t;
        prop_assert!(t > 0.0 && t < 2.0, "t={}", t);
    }

    #[test]
    fn conversion_round_trip(p in moderate_params()) {
        let q = stats_to_pars(&pars_to_stats(&p)).unwrap();
        let scale = p.sd();
        prop_assert!((q.mu() - p.mu()).abs() <= 1e-12 * (p.mu().abs() + scale));
        prop_assert!((q.sigma() / p.sigma() - 1.0).abs() <= 1e-12);
        prop_assert!((q.tau() / p.tau() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn cdf_monotone(p in params(), n in 10usize..200) {
        let lo = p.mu() - 10.0 * p.sigma();
        let hi = p.mu() + 10.0 * p.sigma() + 40.0 * p.tau();
        let mut prev = 0.0;
        for i in 0..=n {
            let x = lo + (hi - lo) * i as f64 / n as f64;
            let f = exgauss_cdf(x, &p);
            prop_assert!((0.0..=1.0).contains(&f));
            prop_assert!(f >= prev, "x={} F={} prev={}", x, f, prev);
            prev = f;
        }
    }

    #[test]
    fn quantile_inverse(p in params(), k in 0usize..4) {
        let alpha = [0.1, 0.01, 0.001, 0.5][k];
        let z = zalp_exgauss(alpha, &p).unwrap();
        prop_assert!((exgauss_cdf(z, &p) - (1.0 - alpha)).abs() <= 1e-8);
        prop_assert!((exgauss_sf(z, &p) - alpha).abs() <= 1e-8 * alpha.max(1e-3));
    }

    #[test]
    fn standard_form_matches_converted(lamb in 0.25..0.99f64, z in -3.0..6.0f64) {
        let st = ExGaussStats::new(0.0, 1.0, 2.0 * lamb.powi(3)).unwrap();
        let p = stats_to_pars(&st).unwrap();
        let a = exgauss_pdf_lamb(z, lamb).unwrap();
        let b = exgauss_pdf(z, &p);
        prop_assert!((a / b - 1.0).abs() < 1e-10, "{} vs {}", a, b);
    }

    #[test]
    fn pdf_finite_everywhere(p in params(), x in -1e6..1e6f64) {
        let f = exgauss_pdf(x, &p);
        prop_assert!(f.is_finite() && f >= 0.0);
        prop_assert!(exgauss_ln_pdf(x, &p).is_finite());
        let (_, g) = exgauss_ln_pdf_grad(x, &p);
        prop_assert!(g.iter().all(|v| v.is_finite()));
    }

    #[test]
    fn stats_affine_equivariance(
        xs in prop::collection::vec(-1e3..1e3f64, 3..60),
        c in -1e3..1e3f64,
        k in 0.01..100.0f64,
    ) {
        let s = Sample::new(xs.clone()).unwrap();
        prop_assume!(stats(&s).is_ok());
        let a = stats(&s).unwrap();
        prop_assume!(a.s > 1e-6);
        let shifted = Sample::new(xs.iter().map(|x| x + c).collect()).unwrap();
        let scaled = Sample::new(xs.iter().map(|x| k * x + c).collect()).unwrap();
        let b = stats(&shifted).unwrap();
        let d = stats(&scaled).unwrap();
        let tol = 1e-9 * (a.m.abs() + a.s + c.abs());
        prop_assert!((b.m - (a.m + c)).abs() <= tol);
        prop_assert!((d.s / (k * a.s) - 1.0).abs() <= 1e-9);
        prop_assert!((d.t - a.t).abs() <= 1e-8 * (1.0 + a.t.abs()));
    }

    #[test]
    fn histogram_normalized(xs in prop::collection::vec(-1e4..1e4f64, 2..400), bins in 1usize..120) {
        let s = Sample::new(xs).unwrap();
        prop_assume!(s.max() > s.min());
        let h = histogram(&s, Some(bins)).unwrap();
        let area: f64 = h.densities.iter().zip(h.widths()).map(|(d, w)| d * w).sum();
        prop_assert!((area - 1.0).abs() < 1e-12);
        prop_assert_eq!(h.counts.iter().sum::<u64>(), s.len() as u64);
    }

    #[test]
    fn gauss_legendre_exact_for_low_degree(n in 1usize..12, a in -5.0..5.0f64, w in 0.1..5.0f64, seed in any::<u64>()) {
        let b = a + w;
        let deg = 2 * n - 1;
        // pseudo-random coefficients from the seed
        let coefs: Vec<f64> = (0..=deg)
            .map(|k| (((seed >> (k % 60)) & 0xff) as f64 / 128.0) - 1.0)
            .collect();
        let poly = |x: f64| coefs.iter().rev().fold(0.0, |acc, c| acc * x + c);
        let exact: f64 = coefs
            .iter()
            .enumerate()
            .map(|(k, c)| c * (b.powi(k as i32 + 1) - a.powi(k as i32 + 1)) / (k as f64 + 1.0))
            .sum();
        let pts = int_points_gauss(a, b, n).unwrap();
        let vals: Vec<f64> = pts.iter().map(|q| poly(q.node)).collect();
        let got = intsum(&vals, &pts).unwrap();
        let mag: f64 = coefs
            .iter()
            .enumerate()
            .map(|(k, c)| c.abs() * (b.abs().max(a.abs())).powi(k as i32) * w)
            .sum();
        prop_assert!((got - exact).abs() <= 1e-13 * mag.max(exact.abs()), "{} vs {}", got, exact);
    }

    #[test]
    fn root_finder_converges(root in -100.0..100.0f64, lo_off in 0.0..50.0f64, hi_off in 0.0..50.0f64, cubic in any::<bool>()) {
        let f = |x: f64| if cubic { (x - root).powi(3) + (x - root) } else { (x - root).tanh() };
        let r = zero(f, (root - lo_off - 1e-3, root + hi_off + 1e-3), 1e-12).unwrap();
        prop_assert!((r - root).abs() <= 1e-12 + 8.0 * f64::EPSILON * root.abs());
    }

    #[test]
    fn sampler_deterministic(seed in any::<u64>(), stream in any::<u64>()) {
        let p = ExGaussParams::new(500.0, 50.0, 100.0).unwrap();
        let a = sample_exg(&mut RngStream::with_stream(seed, stream), &p, 16);
        let b = sample_exg(&mut RngStream::with_stream(seed, stream), &p, 16);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn gaussian_sum_construction(seed in any::<u64>(), p in params()) {
        let mut s = RngStream::new(seed);
        let mut t = RngStream::new(seed);
        for _ in 0..32 {
            let x = drand_exg(&mut s, &p);
            let g = drand_gauss(&mut t, p.mu(), p.sigma()).unwrap();
            let e = drand_exp(&mut t, p.tau()).unwrap();
            prop_assert_eq!(x.to_bits(), (g + e).to_bits());
        }
    }

    #[test]
    fn ks_outlier_lowers_statistic_by_at_most_top_cdf(xs in prop::collection::vec(300.0..1500.0f64, 1..100), big in 2e3..1e5f64) {
        let p = ExGaussParams::new(500.0, 50.0, 100.0).unwrap();
        let s = Sample::new(xs.clone()).unwrap();
        let mut more = xs;
        more.push(big);
        let t = Sample::new(more).unwrap();
        // appending a top point raises N, which lowers every "ECDF above F"
        // deviation i - N F(x_i) by F(x_i), so the drop is at most F(max)
        let slack = exgauss_cdf(s.max(), &p) + 1e-12 * s.len() as f64;
        prop_assert!(ks_stat(&t, &p) >= ks_stat(&s, &p) - slack);
    }

    #[test]
    fn trim_idempotent(seed in 0u64..1000, tail in 0.001..0.2f64) {
        let p = ExGaussParams::new(500.0, 50.0, 100.0).unwrap();
        let s = Sample::new(sample_exg(&mut RngStream::new(seed), &p, 500)).unwrap();
        let once = trim_with(&s, tail, true, &p).unwrap();
        let twice = trim_with(&once.trimmed, tail, true, &p).unwrap();
        prop_assert_eq!(twice.n_removed_left + twice.n_removed_right, 0);
        prop_assert_eq!(&twice.trimmed, &once.trimmed);
        prop_assert_eq!(once.n_removed_left + once.n_removed_right + once.trimmed.len(), s.len());
    }
}

#[test]
fn composite_integral_matches_partition_sum() {
    let p = ExGaussParams::new(500.0, 50.0, 100.0).unwrap();
    let lo = p.mu() - 10.0 * p.sigma();
    let hi = p.mu() + 10.0 * p.sigma() + 30.0 * p.tau();
    let pts = int_points_gauss(lo, hi, 200).unwrap();
    let vals: Vec<f64> = pts.iter().map(|q| exgauss_pdf(q.node, &p)).collect();
    let a = intsum(&vals, &pts).unwrap();
    assert!((a - 1.0).abs() < 1e-9, "{a}");
    let b = integral(|x| exgauss_pdf(x, &p), lo, hi, 50, 20).unwrap();
    assert!((b - 1.0).abs() < 1e-9, "{b}");
    let ones = vec![1.0; pts.len()];
    assert!((intsum(&ones, &pts).unwrap() - (hi - lo)).abs() < 1e-9 * (hi - lo));
}

#[test]
fn ks_outlier_can_lower_statistic_when_ecdf_leads() {
    let p = ExGaussParams::new(500.0, 50.0, 100.0).unwrap();
    let s = Sample::new(vec![300.0, 300.0]).unwrap();
    let t = Sample::new(vec![300.0, 300.0, 2000.0]).unwrap();
    let f = exgauss_cdf(300.0, &p);
    assert!((ks_stat(&s, &p) - (2.0 - 2.0 * f)).abs() < 1e-12);
    assert!((ks_stat(&t, &p) - (2.0 - 3.0 * f)).abs() < 1e-12);
    assert!(ks_stat(&t, &p) < ks_stat(&s, &p));
}
