//! Exit criteria for the library, one test per criterion. Each prints a
//! `PASS`/`FAIL` line with the measured values (shown with `--nocapture`).

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use qwalk_core::{
    adjacency_power_oracle, amplitude_decay_check, char_fn_closed, char_fn_direct,
    ctrw_distribution, decay_bound, distribution, distribution_of, distribution_theta,
    empirical_moment, evolve, hadamard, ks_distance, propagator_entry, propagator_entry_series,
    spectral_oracle, srw_distribution, symmetric_initial, LimitLaw, Result,
};

const TOL: f64 = 1e-12;

type Criterion = fn() -> Result<Outcome>;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { passed, detail })
}

fn within_budget(start: Instant, budget: Duration) -> (bool, String) {
    let spent = start.elapsed();
    (
        spent < budget,
        format!(
            "{:.3}s of {:.0}s",
            spent.as_secs_f64(),
            budget.as_secs_f64()
        ),
    )
}

fn normalization() -> Result<Outcome> {
    let start = Instant::now();
    let mut worst = 0.0_f64;
    let mut tails_ok = true;
    for t in [1.0, 10.0, 100.0, 1000.0] {
        let d = distribution(t, TOL)?;
        worst = worst.max((d.total() + d.tail_bound() - 1.0).abs());
        tails_ok &= d.tail_bound() <= TOL && d.total() <= 1.0 + 1e-12;
    }
    let (fast, time) = within_budget(start, Duration::from_secs(1));
    outcome(
        worst <= 1e-12 && tails_ok && fast,
        format!("max |sum + tail - 1| = {worst:.3e}, tails <= {TOL:e}: {tails_ok}, {time}"),
    )
}

fn propagator_oracles() -> Result<Outcome> {
    let mut spectral_worst = 0.0_f64;
    for t in [0.5, 1.0, 5.0, 10.0, 20.0] {
        let u = spectral_oracle(401, t)?;
        for l in -20..=20 {
            for m in -20..=20 {
                let closed = propagator_entry(l, m, t)?;
                let err = (u.centered(l, m).expect("inside window") - closed).norm();
                spectral_worst = spectral_worst.max(err);
            }
        }
    }
    let mut series_worst = 0.0_f64;
    for i in 0..=40 {
        let t = 0.1 * i as f64;
        for k in -10..=10 {
            let err = (propagator_entry_series(k, t, 60)? - propagator_entry(0, k, t)?).norm();
            series_worst = series_worst.max(err);
        }
    }
    outcome(
        spectral_worst <= 1e-9 && series_worst <= 1e-10,
        format!("spectral 41x41 max err {spectral_worst:.3e} (<= 1e-9), series max err {series_worst:.3e} (<= 1e-10)"),
    )
}

fn binomial_structure() -> Result<Outcome> {
    let mut mismatches = 0;
    for n in 1..=16u32 {
        let row = adjacency_power_oracle(n, n as usize)?;
        for (i, &v) in row.iter().enumerate() {
            let k = i as i64 - n as i64;
            let d = n as i64 - k;
            let want = if d % 2 == 0 {
                (0..d / 2).fold(1u64, |c, j| c * (n as u64 - j as u64) / (j as u64 + 1))
            } else {
                0
            };
            if v != want {
                mismatches += 1;
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("{mismatches} mismatching coefficients for n <= 16"),
    )
}

fn characteristic_function() -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for t in [5.0, 13.0, 50.0] {
        for i in 0..64 {
            let xi = PI * i as f64 / 63.0;
            let err = (char_fn_direct(xi, t, TOL)? - char_fn_closed(xi, t)?).norm();
            worst = worst.max(err);
        }
    }
    outcome(
        worst <= 1e-9,
        format!("sup error {worst:.3e} over 64-point grid (<= 1e-9)"),
    )
}

fn continuous_spread() -> Result<Outcome> {
    let mut worst = 0.0_f64;
    let mut oracle_worst = 0.0_f64;
    for t in [1.0, 10.0, 100.0] {
        let d = distribution(t, TOL)?;
        worst = worst.max((empirical_moment(&d, t, 2)? - 0.5).abs());
        // -phi''(0) / t^2 from the closed characteristic function
        let phi = |xi: f64| char_fn_closed(xi, t).map(|c| c.re);
        let h = 0.05 / t;
        let d2 = |h: f64| -> Result<f64> { Ok((phi(h)? - 2.0 * phi(0.0)? + phi(-h)?) / (h * h)) };
        let second = -(4.0 * d2(h / 2.0)? - d2(h)?) / 3.0;
        oracle_worst = oracle_worst.max((second / (t * t) - 0.5).abs());
    }
    outcome(
        worst <= 1e-9 && oracle_worst <= 1e-6,
        format!("max |E(X/t)^2 - 1/2| = {worst:.3e} (<= 1e-9); char-fn derivative oracle off by {oracle_worst:.1e}"),
    )
}

fn arcsine_convergence() -> Result<Outcome> {
    let start = Instant::now();
    let arc = LimitLaw::arcsine(1.0)?;
    let early = ks_distance(&distribution(50.0, TOL)?, 50.0, arc)?;
    let late = ks_distance(&distribution(400.0, TOL)?, 400.0, arc)?;
    let (fast, time) = within_budget(start, Duration::from_secs(10));
    outcome(
        late < early && late <= 0.05 && fast,
        format!("ks(50) = {early:.4}, ks(400) = {late:.4} (<= 0.05), {time}"),
    )
}

fn fourth_moment() -> Result<Outcome> {
    let err = |t: f64| -> Result<f64> {
        Ok((empirical_moment(&distribution(t, TOL)?, t, 4)? - 0.375).abs())
    };
    let (early, late) = (err(50.0)?, err(500.0)?);
    outcome(
        late <= 0.01 && late < early,
        format!("|E(X/t)^4 - 3/8|: t=50 {early:.3e}, t=500 {late:.3e} (<= 0.01)"),
    )
}

fn hadamard_limit() -> Result<Outcome> {
    let start = Instant::now();
    let coin = hadamard();
    let law = LimitLaw::KonnoHadamard;
    let d1000 = distribution_of(&evolve(1000, &coin, symmetric_initial()));
    let ratio = d1000.stddev() / 1000.0;
    let d100 = distribution_of(&evolve(100, &coin, symmetric_initial()));
    let d800 = distribution_of(&evolve(800, &coin, symmetric_initial()));
    let early = ks_distance(&d100, 100.0, law)?;
    let late = ks_distance(&d800, 800.0, law)?;
    let (fast, time) = within_budget(start, Duration::from_secs(10));
    outcome(
        (ratio - 0.54119).abs() <= 0.01 && late <= 0.05 && late < early && fast,
        format!("sigma(1000)/1000 = {ratio:.6}; ks(100) = {early:.4}, ks(800) = {late:.4} (<= 0.05), {time}"),
    )
}

fn theta_walk() -> Result<Outcome> {
    let theta = PI / 3.0;
    let want = theta.cos().powi(2) / 2.0;
    let m2 = empirical_moment(&distribution_theta(100.0, theta, TOL)?, 100.0, 2)?;
    let law = LimitLaw::arcsine(theta.cos())?;
    let ks = ks_distance(&distribution_theta(400.0, theta, TOL)?, 400.0, law)?;
    outcome(
        (m2 - want).abs() <= 1e-9 && ks <= 0.05,
        format!(
            "|m2 - cos^2/2| = {:.3e} (<= 1e-9), ks(400) = {ks:.4} (<= 0.05)",
            (m2 - want).abs()
        ),
    )
}

fn decay_bound_holds() -> Result<Outcome> {
    let mut ok = true;
    let mut worst_ratio = 0.0_f64;
    for t in [100.0, 200.0, 400.0, 800.0] {
        let v = amplitude_decay_check(0.5, t)?;
        let bound = 1.1 * decay_bound(0.5, t)?;
        ok &= v <= bound;
        worst_ratio = worst_ratio.max(v / bound);
    }
    outcome(ok, format!("max J^2/(1.1 bound) = {worst_ratio:.3}"))
}

fn classical_contrast() -> Result<Outcome> {
    let mut srw_worst = 0.0_f64;
    for n in [4u64, 100, 400] {
        let d = srw_distribution(n);
        srw_worst = srw_worst.max((d.stddev() / (n as f64).sqrt() - 1.0).abs());
    }
    let mut ctrw_worst = 0.0_f64;
    for t in [10.0, 100.0] {
        let d = ctrw_distribution(t, TOL)?;
        ctrw_worst = ctrw_worst.max((d.variance() - t).abs() / t);
    }
    let ks = ks_distance(&srw_distribution(400), 20.0, LimitLaw::gaussian(1.0)?)?;
    outcome(
        srw_worst <= 1e-8 && ctrw_worst <= 1e-6 && ks <= 0.05,
        format!("srw |sigma/sqrt n - 1| = {srw_worst:.2e}; ctrw |var - t|/t = {ctrw_worst:.2e}; ks(400) = {ks:.4} (<= 0.05)"),
    )
}

fn verify(name: &str, criterion: Criterion) {
    let (passed, detail) = match criterion() {
        Ok(o) => (o.passed, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    println!("{} [{name}] {detail}", if passed { "PASS" } else { "FAIL" });
    assert!(passed, "criterion {name} failed: {detail}");
}

macro_rules! criteria {
    ($($test:ident => $name:literal, $run:ident;)*) => {
        $(
            #[test]
            fn $test() {
                verify($name, $run);
            }
        )*
    };
}

criteria! {
    criterion_01_normalization => "1 normalization", normalization;
    criterion_02_propagator_oracles => "2 propagator oracles", propagator_oracles;
    criterion_03_binomial_structure => "3 binomial structure", binomial_structure;
    criterion_04_characteristic_function => "4 characteristic function", characteristic_function;
    criterion_05_continuous_spread => "5 continuous spread constant", continuous_spread;
    criterion_06_arcsine_convergence => "6 arcsine weak convergence", arcsine_convergence;
    criterion_07_fourth_moment => "7 fourth-moment limit", fourth_moment;
    criterion_08_hadamard_limit => "8 Hadamard walk limit", hadamard_limit;
    criterion_09_theta_walk => "9 theta walk", theta_walk;
    criterion_10_decay_bound => "10 decay bound", decay_bound_holds;
    criterion_11_classical_contrast => "11 classical contrast", classical_contrast;
}
