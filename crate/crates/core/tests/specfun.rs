use fracwave::specfun::*;
use fracwave::Error;

include!("data/ml_reference.rs");

fn close(a: f64, b: f64, abs: f64, rel: f64) -> bool {
    (a - b).abs() <= abs + rel * b.abs()
}

#[test]
fn gamma_spec_values() {
    assert_eq!(gamma(1.0).unwrap(), 1.0);
    assert!(close(gamma(0.5).unwrap(), 1.7724538509055160, 0.0, 2e-16));
    assert!(close(gamma(2.5).unwrap(), 1.3293403881791370, 0.0, 2e-16));
}

#[test]
fn gamma_relative_error_against_recurrence_identities() {
    // Γ(x+1) = xΓ(x) and the reflection formula tie distant arguments together
    for i in 0..400 {
        let x = -169.75 + 0.8475 * i as f64;
        if x == x.floor() && x <= 0.0 {
            continue;
        }
        let (g0, g1) = match (gamma(x), gamma(x + 1.0)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        assert!(close(g1, x * g0, 0.0, 1e-13), "x = {x}");
    }
}

#[test]
fn gamma_errors() {
    assert!(matches!(gamma(0.0), Err(Error::GammaPole(_))));
    assert!(matches!(gamma(-7.0), Err(Error::GammaPole(_))));
    assert!(matches!(gamma(171.7), Err(Error::GammaOverflow(_))));
    assert!(gamma(171.6).unwrap().is_finite());
}

#[test]
fn ml2_spec_values() {
    let e = |a, b, z| ml2(ML2Params::new(a, b).unwrap(), z).unwrap();
    assert!(close(e(1.0, 1.0, 1.0), std::f64::consts::E, 0.0, 1e-15));
    assert_eq!(e(1.5, 2.0, 0.0), 1.0);
    assert!(close(e(2.0, 1.0, -4.0), -0.4161468365471424, 1e-15, 0.0));
    assert!(close(e(0.5, 1.0, -1.0), 0.4275835761558070, 2e-15, 0.0));
}

#[test]
fn ml2_matches_high_precision_reference() {
    let mut worst = 0.0f64;
    for row in ML2_REFERENCE {
        let [a, b, z, want] = *row;
        let got = ml2(ML2Params::new(a, b).unwrap(), z).unwrap();
        let err = (got - want).abs() / (1e-3 + want.abs()).min(1.0);
        worst = worst.max(err);
        assert!(close(got, want, 2e-14, 2e-14), "E_{{{a},{b}}}({z}) = {got}, want {want}");
    }
    println!("worst scaled error {worst:e}");
}

#[test]
fn series_and_contour_routes_agree_where_both_apply() {
    let pol = TruncationPolicy::default();
    for &a in &[0.6f64, 1.2, 1.5, 1.9] {
        for &b in &[0.7, 1.0, 2.0] {
            for &z in &[-0.3f64, -1.5, -4.0] {
                if (-z).powf(1.0 / a) > 3.0 {
                    continue;
                }
                let p = ML2Params::new(a, b).unwrap();
                let s = ml2_series(p, z, pol).unwrap().value;
                let c = ml2_contour(p, z).unwrap();
                assert!(close(s, c, 1e-14, 1e-14), "({a},{b},{z}): {s} vs {c}");
            }
        }
    }
}

#[test]
fn nonconvergence_is_reported_with_partial_sum() {
    let p = ML2Params::new(0.1, 1.0).unwrap();
    let pol = TruncationPolicy::new(1e-18, 16).unwrap();
    match ml2_with(p, 2.0, pol) {
        Err(Error::NonConvergence { terms, partial_sum, .. }) => {
            assert_eq!(terms, 16);
            assert!(partial_sum > 1.0);
        }
        other => panic!("expected non-convergence, got {other:?}"),
    }
}

#[test]
fn mlbv_matches_high_precision_reference() {
    for row in MLBV_REFERENCE {
        let [ax, ay, rho, x, y, want] = *row;
        let got = mlbv(MLBVParams::new(ax, ay, rho).unwrap(), x, y).unwrap();
        assert!(close(got, want, 2e-14, 2e-14), "E_({ax},{ay}),{rho}({x},{y}) = {got}, want {want}");
    }
}

#[test]
fn mlbv_worked_example_under_both_conventions() {
    let p = MLBVParams::new(1.0, 0.5, 1.0).unwrap();
    let pol = TruncationPolicy::default();
    let m = mlbv_with(p, -0.3, -0.8, GammaConvention::Multinomial, pol).unwrap();
    let printed = mlbv_with(p, -0.3, -0.8, GammaConvention::AsPrinted, pol).unwrap();
    assert!(close(m, 0.39132309883436156826, 1e-15, 0.0));
    assert!(close(printed, 0.33650069560913004032, 1e-15, 0.0));
}

#[test]
fn mlbv_zero_argument_reductions() {
    let pol = TruncationPolicy::default();
    let p = MLBVParams::new(0.7, 1.3, 1.5).unwrap();
    for conv in [GammaConvention::Multinomial, GammaConvention::AsPrinted, GammaConvention::Transposed] {
        assert_eq!(mlbv_with(p, 0.0, 0.0, conv, pol).unwrap(), rgamma(1.5));
    }
    let y = -2.3;
    let x = -1.7;
    let ml = |a: f64, z: f64| ml2(ML2Params::new(a, 1.5).unwrap(), z).unwrap();
    // as printed, x = 0 keeps E_{α,ρ}(y) and y = 0 keeps E_{α+β,ρ}(x)
    let printed = |x, y| mlbv_with(p, x, y, GammaConvention::AsPrinted, pol).unwrap();
    assert!(close(printed(0.0, y), ml(0.7, y), 1e-15, 1e-14));
    assert!(close(printed(x, 0.0), ml(2.0, x), 1e-15, 1e-14));
    // multinomial: α pairs with x, β with y
    let multi = |x, y| mlbv_with(p, x, y, GammaConvention::Multinomial, pol).unwrap();
    assert!(close(multi(0.0, y), ml(1.3, y), 1e-15, 1e-14));
    assert!(close(multi(x, 0.0), ml(0.7, x), 1e-15, 1e-14));
}

#[test]
fn symmetry_holds_for_multinomial_convention_only() {
    let pol = TruncationPolicy::default();
    let p = MLBVParams::new(1.0, 0.5, 1.0).unwrap();
    let a = mlbv(p, -0.3, -0.8).unwrap();
    let b = mlbv_symmetric(p, -0.3, -0.8).unwrap();
    assert!((a - b).abs() <= 1e-12);
    let q = MLBVParams::new(0.8, 0.8, 2.0).unwrap();
    assert_eq!(mlbv(q, -0.4, -0.4).unwrap(), mlbv_symmetric(q, -0.4, -0.4).unwrap());
    let r = MLBVParams::new(0.3, 1.7, 1.2).unwrap();
    assert_eq!(mlbv_symmetric(r, 0.0, 0.0).unwrap(), rgamma(1.2));
    let pa = mlbv_with(p, -0.3, -0.8, GammaConvention::AsPrinted, pol).unwrap();
    let pb = mlbv_symmetric_with(p, -0.3, -0.8, GammaConvention::AsPrinted, pol).unwrap();
    assert!((pa - pb).abs() > 1e-3, "the printed convention is not symmetric");
}

#[test]
fn kernel_example_and_limits() {
    let k = KernelParams {
        alpha1: 1.5,
        alpha2: 0.5,
        mu: 1.0,
    };
    let lam = std::f64::consts::PI.powi(2);
    let v = kernel_e(k, 1.5, lam, 0.7).unwrap();
    assert!(close(v, -0.018403480612707337453, 1e-15, 1e-13));
    assert!(close(kernel_e(k, 1.5, lam, 1e-14).unwrap(), rgamma(1.5), 1e-9, 0.0));
    let k0 = KernelParams { mu: 0.0, ..k };
    let t: f64 = 0.9;
    let want = ml2(ML2Params::new(1.5, 1.5).unwrap(), -lam * t.powf(1.5)).unwrap();
    assert!(close(kernel_e(k0, 1.5, lam, t).unwrap(), want, 1e-15, 1e-14));
}

#[test]
fn kernel_series_and_contour_paths_agree() {
    let k = KernelParams {
        alpha1: 1.7,
        alpha2: 0.4,
        mu: 2.0,
    };
    for &lam in &[1.0, 30.0, 400.0] {
        let kern = BivariateKernel::new(k, lam).unwrap();
        for &t in &[0.05, 0.3, 1.0, 1.9] {
            for &rho in &[1.0, 1.7, 2.0, 3.7] {
                let (x, y) = kern.arguments(t);
                let p = MLBVParams::new(1.3, 1.7, rho).unwrap();
                let s = mlbv_series(p, x, y, GammaConvention::Multinomial, TruncationPolicy::default());
                let c = mlbv_contour(p, x, y).unwrap();
                let v = kern.eval(rho, t).unwrap();
                assert!(close(v, c, 1e-14, 1e-13), "lam {lam} t {t} rho {rho}: {v} vs {c}");
                if let Ok(s) = s {
                    if s.abs_sum < 1e3 {
                        assert!(close(s.value, c, 1e-12, 1e-12), "series {} vs {c}", s.value);
                    }
                }
            }
        }
    }
}
