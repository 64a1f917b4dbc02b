use fracwave::fracops::*;
use fracwave::specfun::{gamma, ml2, ML2Params};
use fracwave::Error;

fn ml(a: f64, b: f64, z: f64) -> f64 {
    ml2(ML2Params::new(a, b).unwrap(), z).unwrap()
}

fn max_err(g: &UniformGridFn, skip: usize, exact: impl Fn(f64) -> f64) -> f64 {
    g.nodes()
        .zip(&g.values)
        .skip(skip)
        .map(|(t, v)| (v - exact(t)).abs())
        .fold(0.0, f64::max)
}

#[test]
fn integral_of_constant_and_linear_data_is_exact() {
    let one = UniformGridFn::sample(0.5, 0.01, 151, |_| 1.0).unwrap();
    let i1 = rl_integral(&one, 1.0).unwrap();
    assert_eq!(i1.values[0], 0.0);
    assert!(max_err(&i1, 0, |t| t - 0.5) < 1e-13);
    let ih = rl_integral(&one, 0.5).unwrap();
    let g15 = gamma(1.5).unwrap();
    assert!(max_err(&ih, 0, |t| (t - 0.5).sqrt() / g15) < 1e-13);

    let lin = UniformGridFn::sample(0.0, 1e-2, 101, |t| t).unwrap();
    let i = rl_integral(&lin, 1.25).unwrap();
    let c = gamma(2.0).unwrap() / gamma(3.25).unwrap();
    assert!(max_err(&i, 0, |t| c * t.powf(2.25)) < 1e-13);
}

#[test]
fn caputo_power_rules() {
    let lin = UniformGridFn::sample(0.0, 1e-2, 101, |t| t).unwrap();
    let d = caputo_derivative(&lin, 1.5).unwrap();
    assert!(max_err(&d, 0, |_| 0.0) < 1e-10);

    let sq = UniformGridFn::sample(0.0, 1e-2, 101, |t| t * t).unwrap();
    let d = caputo_derivative(&sq, 1.5).unwrap();
    let c = 2.0 / gamma(1.5).unwrap();
    assert!(max_err(&d, 0, |t| c * t.sqrt()) < 1e-11);

    let d = caputo_derivative(&sq, 0.4).unwrap();
    let c = 2.0 / gamma(2.6).unwrap();
    assert!(max_err(&d, 1, |t| c * t.powf(1.6)) < 2e-3);
}

#[test]
fn caputo_shifted_origin() {
    let a = 1.0;
    let f = UniformGridFn::sample(a, 1e-3, 1001, |t| (t - a).powi(2) + 3.0).unwrap();
    let d = caputo_derivative(&f, 1.25).unwrap();
    let c = 2.0 / gamma(1.75).unwrap();
    assert!(max_err(&d, 0, |t| c * (t - a).powf(0.75)) < 1e-10);
}

#[test]
fn caputo_eigenfunction_relation() {
    // E_{1.5,1}(−t^{1.5}) = 1 − t^{1.5}/Γ(2.5) + …; the t^{1.5} term needs a
    // starting correction, after which the error is O(h) uniformly
    let h = 1e-3;
    let f = UniformGridFn::sample(0.0, h, 1001, |t| ml(1.5, 1.0, -t.powf(1.5))).unwrap();
    let want = |t: f64| -ml(1.5, 1.0, -t.powf(1.5));
    let corrected = caputo_derivative_with(&f, 1.5, Some(0.0), &[1.5]).unwrap();
    let e = max_err(&corrected, 1, want);
    assert!(e < 1e-3, "corrected: {e}");
    let estimated_slope = caputo_derivative_with(&f, 1.5, None, &[1.5]).unwrap();
    let e = max_err(&estimated_slope, 1, want);
    assert!(e < 1e-3, "estimated slope: {e}");
    // uncorrected, the error at the first nodes does not shrink with h
    let plain = caputo_derivative(&f, 1.5).unwrap();
    assert!(max_err(&plain, 1, want) > 0.1);
}

#[test]
fn starting_corrections_make_the_operator_exact_on_the_basis() {
    for &(alpha, sigma) in &[(1.5, 1.5), (1.25, 1.25), (1.7, 2.4), (0.5, 0.5), (0.6, 1.3)] {
        let h = 0.01;
        let f = UniformGridFn::sample(0.0, h, 201, |t| 2.0 - 3.0 * t + t.powf(sigma)).unwrap();
        let slope = if sigma > 1.0 { Some(-3.0) } else { None };
        let d = caputo_derivative_with(&f, alpha, slope, &[sigma]).unwrap();
        let c = gamma(sigma + 1.0).unwrap() / gamma(sigma + 1.0 - alpha).unwrap();
        let lin = if alpha < 1.0 { -3.0 / gamma(2.0 - alpha).unwrap() } else { 0.0 };
        let e = max_err(&d, 1, |t| c * t.powf(sigma - alpha) + lin * t.powf(1.0 - alpha));
        assert!(e < 1e-9, "alpha {alpha} sigma {sigma}: {e}");
    }
}

#[test]
fn operator_reuse_across_columns() {
    let op = CaputoOperator::new(1.25, 1e-2, 101, true, &[1.25]).unwrap();
    let a: Vec<f64> = (0..101).map(|j| (j as f64 * 1e-2).powf(1.25)).collect();
    let b: Vec<f64> = a.iter().map(|v| 3.0 * v).collect();
    let da = op.apply(&a, Some(0.0)).unwrap();
    let db = op.apply(&b, Some(0.0)).unwrap();
    for (x, y) in da.iter().zip(&db) {
        assert!((3.0 * x - y).abs() < 1e-12);
    }
    assert!(op.apply(&a, None).is_err());
    assert!(op.apply(&a[..50], Some(0.0)).is_err());
}

#[test]
fn rl_derivative_power_rules() {
    let one = UniformGridFn::sample(0.0, 1e-3, 1001, |_| 1.0).unwrap();
    let d = rl_derivative(&one, 0.5).unwrap();
    let g05 = gamma(0.5).unwrap();
    assert!(max_err(&d, 100, |t| 1.0 / (t.sqrt() * g05)) < 1e-3);

    let lin = UniformGridFn::sample(0.0, 1e-3, 1001, |t| t).unwrap();
    let d = rl_derivative(&lin, 1.5).unwrap();
    assert!(max_err(&d, 100, |t| 1.0 / (t.sqrt() * g05)) < 1e-3);
}

#[test]
fn rl_derivative_of_ml_pattern() {
    // D^α [t^{γ−1}E_{β,γ}(ct^β)] = t^{γ−α−1}E_{β,γ−α}(ct^β)
    let (al, be, ga, c) = (0.5, 1.5, 2.0, -1.0);
    let f = UniformGridFn::sample(0.0, 1e-3, 1001, |t| t.powf(ga - 1.0) * ml(be, ga, c * t.powf(be))).unwrap();
    let d = rl_derivative(&f, al).unwrap();
    let e = max_err(&d, 10, |t| t.powf(ga - al - 1.0) * ml(be, ga - al, c * t.powf(be)));
    assert!(e < 1e-4, "{e}");
}

#[test]
fn rl_integral_of_ml_pattern() {
    // I^α [t^{γ−1}E_{β,γ}(ct^β)] = t^{α+γ−1}E_{β,α+γ}(ct^β)
    for &(al, be, ga, c) in &[(0.5, 1.5, 1.0, -2.0), (1.3, 0.8, 1.5, -5.0), (0.7, 1.9, 2.0, -20.0)] {
        let f = UniformGridFn::sample(0.0, 1e-3, 1001, |t| t.powf(ga - 1.0) * ml(be, ga, c * t.powf(be))).unwrap();
        let i = rl_integral(&f, al).unwrap();
        let e = max_err(&i, 0, |t| t.powf(al + ga - 1.0) * ml(be, al + ga, c * t.powf(be)));
        assert!(e < 1e-5, "({al},{be},{ga},{c}): {e}");
    }
}

#[test]
fn semigroup_spot_check() {
    let f = UniformGridFn::sample(0.0, 1e-3, 1001, |t| (3.0 * t).sin() + t * t).unwrap();
    let two_step = rl_integral(&rl_integral(&f, 0.4).unwrap(), 0.9).unwrap();
    let one_step = rl_integral(&f, 1.3).unwrap();
    let e = max_err(&two_step, 0, |t| one_step.values[(t / 1e-3).round() as usize]);
    assert!(e < 1e-5, "{e}");
}

fn order(e_coarse: f64, e_fine: f64) -> f64 {
    (e_coarse / e_fine).log2()
}

#[test]
fn refinement_orders_on_polynomial_inputs() {
    let cubic = |t: f64| t * t * t;
    let run = |h: f64| {
        let n = (1.0 / h).round() as usize + 1;
        let f = UniformGridFn::sample(0.0, h, n, cubic).unwrap();
        let ei = max_err(&rl_integral(&f, 0.6).unwrap(), 0, |t| 6.0 * t.powf(3.6) / gamma(4.6).unwrap());
        let ec1 = max_err(&caputo_derivative(&f, 0.6).unwrap(), 0, |t| 6.0 * t.powf(2.4) / gamma(3.4).unwrap());
        let ec2 = max_err(&caputo_derivative(&f, 1.4).unwrap(), 0, |t| 6.0 * t.powf(1.6) / gamma(2.6).unwrap());
        [ei, ec1, ec2]
    };
    let coarse = run(1.0 / 200.0);
    let fine = run(1.0 / 400.0);
    let nominal = [2.0, 2.0 - 0.6, 2.0 - 0.4];
    for k in 0..3 {
        let p = order(coarse[k], fine[k]);
        assert!(p >= 0.9 * nominal[k], "operator {k}: order {p} ({} -> {})", coarse[k], fine[k]);
    }
}

#[test]
fn domain_and_resolution_errors() {
    assert!(matches!(UniformGridFn::new(0.0, 0.1, vec![1.0, 2.0]), Err(Error::Resolution(_))));
    assert!(UniformGridFn::new(0.0, 0.0, vec![1.0; 4]).is_err());
    let f = UniformGridFn::sample(0.0, 0.1, 5, |t| t).unwrap();
    assert!(matches!(rl_derivative(&f, 1.0), Err(Error::Domain(_))));
    assert!(matches!(rl_integral(&f, -0.5), Err(Error::Domain(_))));
}
