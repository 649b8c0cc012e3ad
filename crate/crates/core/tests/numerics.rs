//! Special functions against frozen high-precision references, plus the
//! identities they must satisfy everywhere in their domains.

#![allow(clippy::excessive_precision)]

use proptest::prelude::*;
use risfso::numerics::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

// Reference values computed with 40-digit arithmetic.

#[test]
fn ln_gamma_matches_reference() {
    let cases = [
        (15.0, 25.191_221_182_738_681_5),
        (0.5, 0.572_364_942_924_700_087_07),
        (3.7, 1.428_072_326_665_388_129_2),
        (42.25, 114.966_392_654_249_894_35),
    ];
    for (x, want) in cases {
        let got = ln_gamma(x).unwrap();
        assert!(rel(got, want) < 1e-13, "lnΓ({x}) = {got}, want {want}");
    }
    assert!(rel(gamma(5.0).unwrap(), 24.0) < 1e-14);
}

#[test]
fn erf_family_matches_reference() {
    assert!(rel(erf(1.0), 0.842_700_792_949_714_869_34) < 1e-14);
    assert!(rel(erf(0.3), 0.328_626_759_459_127_416_19) < 1e-14);
    assert!(rel(erfc(3.0), 2.209_049_699_858_544_137_3e-5) < 1e-13);
    assert!(rel(erfc(10.0), 2.088_487_583_762_544_757e-45) < 1e-12);
    assert!(rel(erfc(26.0), 5.663_192_408_856_142_846_5e-296) < 1e-12);
    assert_eq!(erf(-0.3), -erf(0.3));
}

#[test]
fn normal_quantiles_match_reference() {
    assert!(rel(normal_quantile(0.975).unwrap(), 1.959_963_984_540_054_235_5) < 1e-12);
    assert!(rel(normal_quantile(0.995).unwrap(), 2.575_829_303_548_900_761) < 1e-12);
    assert!(normal_quantile(1.0).is_err());
}

#[test]
fn bessel_k_matches_reference() {
    let cases = [
        (5.0, 2.0, 9.431_049_100_596_467_442_8),
        (0.5, 1.0, 0.461_068_504_447_894_558_44),
        (0.0, 0.001, 7.023_688_800_562_381_322_8),
        (20.0, 0.001, 6.377_706_556_397_376_453_4e82),
        (13.3, 30.0, 3.719_849_779_803_998_320_6e-13),
        (2.7, 50.0, 3.665_376_626_523_187_970_9e-23),
        (0.2, 1.9, 0.129_966_431_627_762_943_8),
        (0.2, 2.1, 0.101_588_225_572_661_248_63),
        (7.5, 5.0, 0.396_456_666_055_582_965_3),
    ];
    for (nu, x, want) in cases {
        let got = bessel_k(nu, x).unwrap();
        assert!(rel(got, want) < 1e-10, "K_{nu}({x}) = {got:e}, want {want:e}");
    }
}

#[test]
fn parabolic_cylinder_matches_reference() {
    let cases = [
        (-3.0, -2.5, 43.342_227_210_666_613_372),
        (-1.0, 1.5, 0.293_902_891_384_215_006_73),
        (-0.5, 2.0, 0.243_018_893_963_601_941_59),
        (-11.0, -40.0, 3.889_284_937_023_507_088e183),
        (-11.0, 40.0, 4.382_993_177_204_666_973_9e-192),
        (-5.5, 10.0, 3.714_173_811_693_538_314_2e-17),
        (-0.25, -3.0, 3.253_712_763_219_574_956_9),
        (-12.0, -0.5, 5.247_857_883_987_687_097_6e-4),
        (-2.0, 0.0, 1.0),
    ];
    for (v, z, want) in cases {
        let got = parabolic_cylinder_d(v, z).unwrap();
        assert!(rel(got, want) < 1e-9, "D_{v}({z}) = {got:e}, want {want:e}");
    }
    assert!(parabolic_cylinder_d(-13.0, 1.0).is_err());
    assert!(parabolic_cylinder_d(-1.0, 41.0).is_err());
}

#[test]
fn meijer_g_matches_reference() {
    // G^{3,0}_{1,3}(y | c; c-1, 14, 9) with the default pointing exponent.
    let c = 3.223_372_913_064_751_152_9;
    let cases = [
        (5.0, 394_954_513_889.732_860_66),
        (20.0, 8_529_315_270_163.838_612_7),
        (60.0, 64_043_563_177_029.556_226),
        (150.0, 43_657_880_516_455.989_531),
    ];
    for (y, want) in cases {
        let got = meijer_g_1330(c, [c - 1.0, 14.0, 9.0], y, &MellinBarnesContour::default()).unwrap();
        assert!(rel(got, want) < 1e-7, "G({y}) = {got:e}, want {want:e}");
    }
}

#[test]
fn meijer_g_stable_under_doubled_nodes() {
    let c = 3.223_372_913_064_751_152_9;
    for y in [1e-4, 0.3, 5.0, 60.0, 400.0] {
        let base = meijer_g_1330(c, [c - 1.0, 14.0, 9.0], y, &MellinBarnesContour::default()).unwrap();
        let fine = meijer_g_1330(c, [c - 1.0, 14.0, 9.0], y, &MellinBarnesContour::with_node_count(1024)).unwrap();
        assert!(rel(base, fine) < 1e-7, "y={y}: {base:e} vs {fine:e}");
    }
}

#[test]
fn quadrature_error_estimate_bounds_true_error() {
    let q = Quadrature::default();
    let cases: [(&dyn Fn(f64) -> f64, f64); 3] = [
        (&|x: f64| (-x).exp(), 1.0),
        (&|x: f64| x * (-x * x).exp(), 0.5),
        (
            &|x: f64| (-0.5 * (x - 5.0) * (x - 5.0)).exp() / (2.0 * std::f64::consts::PI).sqrt(),
            normal_cdf(5.0),
        ),
    ];
    for (f, want) in cases {
        let r = integrate_semi_infinite(f, &q).unwrap();
        let err = (r.value - want).abs();
        assert!(err < 1e-10, "{} vs {want}", r.value);
        assert!(
            err <= r.err_estimate.max(4.0 * f64::EPSILON * want),
            "true error {err:e} above estimate {:e}",
            r.err_estimate
        );
    }
}

#[test]
fn quadrature_rejects_bad_budget() {
    assert!(Quadrature::new(0.0, 1e-8, 10).is_err());
    assert!(Quadrature::new(1e-12, 1e-8, 0).is_err());
}

#[test]
fn quadrature_reports_unreachable_tolerance() {
    let q = Quadrature::new(1e-300, 1e-15, 3).unwrap();
    let r = q.integrate(|x: f64| (50.0 * x).sin().abs() / x.sqrt(), 0.0, 10.0);
    assert!(r.is_err());
}

proptest! {
    #[test]
    fn bessel_k_recurrence(nu in 0.5f64..15.0, x in 0.05f64..60.0) {
        let lo = bessel_k(nu - 1.0, x).unwrap();
        let mid = bessel_k(nu, x).unwrap();
        let hi = bessel_k(nu + 1.0, x).unwrap();
        let rhs = lo + 2.0 * nu / x * mid;
        prop_assert!(rel(hi, rhs) < 1e-9, "K_{}({}) = {:e}, recurrence {:e}", nu + 1.0, x, hi, rhs);
    }

    #[test]
    fn parabolic_cylinder_contiguous_relation(v in -10.5f64..-1.5, z in -8.0f64..8.0) {
        // D_{v+1} - z D_v + v D_{v-1} = 0
        let lo = parabolic_cylinder_d(v - 1.0, z).unwrap();
        let mid = parabolic_cylinder_d(v, z).unwrap();
        let hi = parabolic_cylinder_d(v + 1.0, z).unwrap();
        let scale = hi.abs().max((z * mid).abs()).max((v * lo).abs());
        prop_assert!((hi - z * mid + v * lo).abs() <= 1e-7 * scale);
    }

    #[test]
    fn scaled_parabolic_cylinder_consistent(v in -12.0f64..0.0, z in -20.0f64..20.0) {
        let d = parabolic_cylinder_d(v, z).unwrap();
        let s = parabolic_cylinder_d_scaled(v, z).unwrap();
        prop_assert!(rel(s, (-0.25 * z * z).exp() * d) < 1e-10);
    }

    #[test]
    fn erf_and_erfc_sum_to_one(x in -6.0f64..6.0) {
        prop_assert!((erf(x) + erfc(x) - 1.0).abs() < 2e-16 * 4.0);
    }

    #[test]
    fn erfcx_is_scaled_erfc(x in -5.0f64..25.0) {
        prop_assert!(rel(erfcx(x), (x * x).exp() * erfc(x)) < 1e-12);
    }

    #[test]
    fn erf_inv_round_trips(y in -0.999_999f64..0.999_999) {
        let x = erf_inv(y).unwrap();
        prop_assert!((erf(x) - y).abs() < 1e-14);
    }

    #[test]
    fn meijer_g_independent_of_contour_shift(y in 0.01f64..200.0, extra in 0.3f64..3.0) {
        let (a, b) = (3.2, [2.2, 14.0, 9.0]);
        let saddle = meijer_g_1330(a, b, y, &MellinBarnesContour::default()).unwrap();
        let shifted = meijer_g_1330(a, b, y, &MellinBarnesContour::with_real_shift(-2.2 + extra)).unwrap();
        prop_assert!(rel(saddle, shifted) < 1e-6, "{:e} vs {:e}", saddle, shifted);
    }

    #[test]
    fn meijer_g_parameter_shift(y in 0.05f64..100.0, k in 0.1f64..2.0) {
        // x^k G(x | a; b) = G(x | a+k; b+k)
        let (a, b) = (3.2, [2.2, 14.0, 9.0]);
        let lhs = y.powf(k) * meijer_g_1330(a, b, y, &MellinBarnesContour::default()).unwrap();
        let rhs = meijer_g_1330(a + k, [b[0] + k, b[1] + k, b[2] + k], y, &MellinBarnesContour::default()).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-6);
    }
}
