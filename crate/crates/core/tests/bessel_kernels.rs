use std::f64::consts::PI;

use proptest::prelude::*;
use qwalk_core::{bessel_j, bessel_row, j0_integral, truncation_radius};

/// `J_n(x) = (1/2pi) integral_0^{2pi} cos(n tau - x sin tau) dtau` by the
/// trapezoid rule, which is spectrally accurate for this periodic integrand
/// once the point count exceeds `|n| + x` by a margin.
fn trapezoid_oracle(n: i64, x: f64) -> f64 {
    let m = 2 * (n.unsigned_abs() as usize + x.ceil() as usize) + 256;
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for j in 0..m {
        let tau = 2.0 * PI * j as f64 / m as f64;
        let y = (n as f64 * tau - x * tau.sin()).cos() - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    sum / m as f64
}

/// Partial sums of `sum_m (-1)^m (x/2)^{2m+k} / (m! (m+k)!)`.
fn series_oracle(k: u32, x: f64, terms: u32) -> f64 {
    let mut sum = 0.0;
    for m in 0..terms {
        let mut term = (0.5 * x).powi((2 * m + k) as i32);
        for j in 1..=m {
            term /= j as f64;
        }
        for j in 1..=(m + k) {
            term /= j as f64;
        }
        if m % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    sum
}

#[test]
fn series_oracle_values() {
    let j0 = bessel_j(0, 1.0).unwrap();
    assert!((j0 - series_oracle(0, 1.0, 30)).abs() < 1e-15);
    assert!((j0 - 0.765_197_686_6).abs() < 1e-10);

    let row = bessel_row(10, 1.0).unwrap();
    assert!((row.values()[1] - series_oracle(1, 1.0, 30)).abs() < 1e-15);
    assert!((row.values()[1] - 0.440_050_585_7).abs() < 1e-10);

    assert!((bessel_j(2, 2.0).unwrap() - series_oracle(2, 2.0, 40)).abs() < 1e-15);
}

// Reference values computed once with mpmath at 40 digits.
#[allow(clippy::excessive_precision)]
const REFERENCE: &[(i64, f64, f64)] = &[
    (0, 1.0, 0.765_197_686_557_966_55),
    (1, 1.0, 0.440_050_585_744_933_52),
    (3, 1.0, 0.019_563_353_982_668_406),
    (2, 2.0, 0.352_834_028_615_637_72),
    (0, 100.0, 0.019_985_850_304_223_122),
    (50, 30.0, 2.058_165_663_156_417_8e-8),
    (7, 0.5, 1.201_586_732_776_302_3e-8),
    (0, 1e-3, 0.999_999_750_000_015_6),
    (500, 700.5, 0.008_441_306_643_872_349),
    (1000, 1000.0, 0.044_730_672_947_964_04),
    (0, 2000.0, 0.007_098_341_833_199_617),
    (1, 2000.0, 0.016_370_141_522_854_217),
    (1000, 2000.0, 0.013_364_551_284_220_439),
    (1999, 2000.0, 0.038_087_430_624_360_076),
    (2100, 2000.0, 1.156_877_745_541_362_1e-11),
    (2200, 2000.0, 2.241_108_153_898_387_8e-28),
];

#[test]
fn matches_high_precision_reference() {
    for &(k, x, want) in REFERENCE {
        let got = bessel_j(k, x).unwrap();
        assert!(
            (got - want).abs() <= 1e-13,
            "J_{k}({x}) = {got:e}, reference {want:e}"
        );
    }
}

#[test]
fn absolute_error_across_orders_and_arguments() {
    let xs = [1.0, 3.7, 10.0, 55.5, 200.0, 999.9, 2000.0];
    for &x in &xs {
        let xi = x as i64;
        let orders = [0, 1, 2, xi / 2, xi - 1, xi, xi + 20, xi + 100, xi + 200];
        for &k in &orders {
            let k = k.max(0);
            let got = bessel_j(k, x).unwrap();
            let want = trapezoid_oracle(k, x);
            assert!(
                (got - want).abs() <= 1e-13,
                "J_{k}({x}): got {got:e}, oracle {want:e}"
            );
        }
    }
}

#[test]
fn row_is_consistent_with_single_orders() {
    let row = bessel_row(60, 37.25).unwrap();
    for k in [0usize, 5, 36, 37, 38, 59, 60] {
        let short = bessel_row(k, 37.25).unwrap();
        assert!((row.values()[k] - short.values()[k]).abs() < 1e-14);
        assert!((row.values()[k] - bessel_j(k as i64, 37.25).unwrap()).abs() < 1e-14);
    }
}

#[test]
fn sum_rule_normalization() {
    for t in [1.0, 10.0, 100.0, 1000.0] {
        let k = truncation_radius(t, 1e-12).unwrap();
        let row = bessel_row(k, t).unwrap();
        let s = row.sum_rule();
        assert!(s >= 1.0 - 1e-12, "t={t} sum rule {s}");
        // rounding in the sum of squares may exceed 1 by a few ulps
        assert!(s <= 1.0 + 4.0 * f64::EPSILON, "t={t} sum rule {s}");
        assert!(row.values().iter().all(|v| v.abs() <= 1.0));
    }
}

#[test]
fn integral_agrees_with_series_on_grid() {
    for i in 0..=200 {
        let x = 0.5 * i as f64;
        let a = j0_integral(x).unwrap();
        let b = bessel_j(0, x).unwrap();
        assert!((a - b).abs() <= 1e-10, "x={x}: integral {a}, series {b}");
    }
    assert!((j0_integral(1.0).unwrap() - bessel_j(0, 1.0).unwrap()).abs() <= 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parity_is_exact(k in -20i64..=20, x in 0.0f64..50.0) {
        let neg = bessel_j(-k, x).unwrap();
        let pos = bessel_j(k, x).unwrap();
        let sign = if k.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
        prop_assert_eq!(neg, sign * pos);
    }

    #[test]
    fn bounded_by_one(k in 0i64..300, x in 0.0f64..300.0) {
        prop_assert!(bessel_j(k, x).unwrap().abs() <= 1.0);
    }

    #[test]
    fn j0_integral_is_even(x in -80.0f64..80.0) {
        prop_assert_eq!(j0_integral(-x).unwrap(), j0_integral(x).unwrap());
    }

    #[test]
    fn addition_theorem(a in 0.01f64..=20.0, b in 0.01f64..=20.0, xi in 0.0f64..=PI) {
        let c = (a * a + b * b - 2.0 * a * b * xi.cos()).max(0.0).sqrt();
        let k_max = truncation_radius(a + b, 1e-12).unwrap();
        let ra = bessel_row(k_max, a).unwrap();
        let rb = bessel_row(k_max, b).unwrap();
        let (va, vb) = (ra.values(), rb.values());
        let mut re = va[0] * vb[0];
        let mut im = 0.0;
        for k in 1..=k_max {
            let kf = k as f64;
            // k and -k terms: J_{-k}(a) J_{-k}(b) = J_k(a) J_k(b)
            let prod = va[k] * vb[k];
            re += prod * ((kf * xi).cos() + (-kf * xi).cos());
            im += prod * ((kf * xi).sin() + (-kf * xi).sin());
        }
        let want = bessel_j(0, c).unwrap();
        prop_assert!(((re - want).powi(2) + im * im).sqrt() <= 1e-9);
    }
}
