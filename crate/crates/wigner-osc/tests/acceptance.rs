//! Acceptance suite: every release-gating check, one test per criterion,
//! each printing a PASS line with the measured numbers once its assertions
//! hold. Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines.

use std::f64::consts::PI;

use wigner_osc::cli::{
    parametric_survival, parametric_survival_from_ode, parametric_survival_quadrature,
};
use wigner_osc::dynamics::{
    averaged_adiabatic, integrate_ode, DriveSpec, EpsilonProfile, FrequencyMod,
};
use wigner_osc::mc::{
    estimate_free_particle_moments, estimate_kernel_moments, estimate_phase_moments,
    estimate_survival, EnsembleConfig,
};
use wigner_osc::noise::{
    expect_angle_function, longtime_phi_squared, longtime_radial_expectation, phase_density,
    survival_ground, transition_probability_with_tol, NoiseSpec, SMatrices,
};
use wigner_osc::phase_op::{g_coefficient, phi_matrix, phi_spectrum, PI_SQ_OVER_3};
use wigner_osc::weyl::{
    thermal_weyl_transform, wrap_angle, OscillatorSpec, PhasePoint, PolarPoint,
};

fn natural_noise(n: f64) -> NoiseSpec {
    NoiseSpec::from_n(n, &OscillatorSpec::natural())
}

#[test]
fn criterion_01_survival_closed_form_vs_monte_carlo() {
    let noise = natural_noise(1.0);
    let cfg = EnsembleConfig {
        trajectories: 100_000,
        dt_frac: 1.0 / 500.0,
        seed: 42,
        partitions: 1,
    };
    let mut worst_sigma = 0.0f64;
    let mut worst_se = 0.0f64;
    for wt in [0.5, 1.0, PI, 5.0, 10.0, 20.0] {
        let start = std::time::Instant::now();
        let closed = survival_ground(&noise, wt);
        let est = estimate_survival(&noise, wt, &cfg).unwrap();
        let elapsed = start.elapsed();
        let sigma = est.sigma_from(closed);
        worst_sigma = worst_sigma.max(sigma);
        worst_se = worst_se.max(est.std_error);
        assert!(
            sigma < 3.0,
            "omega t = {wt}: MC {} +- {} vs closed {closed} ({sigma:.2} sigma)",
            est.value,
            est.std_error
        );
        assert!(
            elapsed.as_secs() < 60,
            "omega t = {wt} took {elapsed:?}, budget is one minute"
        );
    }
    println!(
        "criterion 01 PASS: survival closed form vs MC at 6 times, worst dev {worst_sigma:.2} sigma, worst SE {worst_se:.1e}"
    );
}

#[test]
fn criterion_02_kernel_moments_and_determinant_identity() {
    let noise = natural_noise(1.0);
    let cfg = EnsembleConfig {
        trajectories: 100_000,
        ..Default::default()
    };
    let est = estimate_kernel_moments(&noise, 2.0 * PI, &cfg, PhasePoint::new(0.0, 0.0)).unwrap();
    for (name, e, want) in [
        ("cov_xx", est.cov_xx, PI),
        ("cov_yy", est.cov_yy, PI),
        ("cov_xy", est.cov_xy, 0.0),
    ] {
        assert!(
            e.sigma_from(want) < 3.0,
            "{name}: {} +- {} vs {want}",
            e.value,
            e.std_error
        );
    }

    let mut seed = 2024u64;
    let mut rand = move || {
        seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((seed >> 11) as f64) / ((1u64 << 53) as f64)
    };
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let n = 5.0 * rand();
        let wt = 40.0 * rand();
        let s = SMatrices::new(n, wt);
        let want = (1.0 + n * wt).powi(2) - (n * wt.sin()).powi(2);
        let dev = (4.0 * s.det_a - want).abs() / want.abs().max(1.0);
        worst = worst.max(dev);
    }
    assert!(worst <= 1e-12, "determinant identity residual {worst:.2e}");
    println!(
        "criterion 02 PASS: MC covariance at full period matches pi*I within 3 sigma; det identity residual {worst:.1e} over 1000 draws"
    );
}

#[test]
fn criterion_03_phase_density_normalization_grid() {
    let spec = OscillatorSpec::natural();
    let mut worst = 0.0f64;
    for i in 0..20 {
        let n = 0.25 + 4.75 * i as f64 / 19.0;
        let noise = NoiseSpec::from_n(n, &spec);
        for j in 0..20 {
            let wt = 0.1 + 19.9 * j as f64 / 19.0;
            let norm = expect_angle_function(&noise, wt, |_| 1.0).unwrap();
            worst = worst.max((norm - 1.0).abs());
        }
    }
    assert!(worst < 1e-10, "worst normalization defect {worst:.2e}");

    // P is identically one whenever sin(omega t) = 0
    let noise = natural_noise(1.0);
    for phi in [-3.0, -0.4, 0.0, 1.1, 3.0] {
        assert_eq!(phase_density(&noise, 0.0, phi), 1.0);
        for k in 1..=3 {
            let p = phase_density(&noise, k as f64 * PI, phi);
            assert!(
                (p - 1.0).abs() <= 4.0 * f64::EPSILON,
                "P = {p} at omega t = {k} pi"
            );
        }
    }
    println!(
        "criterion 03 PASS: 20x20 grid normalized within {worst:.1e}; P = 1 at sin(omega t) = 0 to machine precision"
    );
}

#[test]
fn criterion_04_mean_phase_curve_reproduction() {
    let noise = natural_noise(1.0);
    // the curve starts at zero
    let at_zero = expect_angle_function(&noise, 0.0, |phi| phi).unwrap();
    assert!(at_zero.abs() < 1e-12, "mean phase at t = 0: {at_zero}");

    let cfg = EnsembleConfig {
        trajectories: 100_000,
        dt_frac: 1.0 / 300.0,
        seed: 42,
        partitions: 1,
    };
    let mut worst = 0.0f64;
    for wt in [2.0, 6.0, 10.0, 14.0, 18.0] {
        let quad = expect_angle_function(&noise, wt, |phi| phi).unwrap();
        let mc = estimate_phase_moments(&noise, wt, &cfg).unwrap().mean_phi;
        let sigma = mc.sigma_from(quad);
        worst = worst.max(sigma);
        assert!(
            sigma < 3.0,
            "omega t = {wt}: quadrature {quad} vs MC {} +- {}",
            mc.value,
            mc.std_error
        );
    }
    println!(
        "criterion 04 PASS: mean-phase curve (N = 1, omega t in [0, 20]) starts at 0; quadrature vs MC within {worst:.2} sigma at 5 points"
    );
}

#[test]
fn criterion_05_phase_variance_randomizes() {
    let noise = natural_noise(1.0);
    let wt = 1.0e3;
    let value = longtime_phi_squared(&noise, wt, 128).unwrap();
    let rel = (value - PI_SQ_OVER_3).abs() / PI_SQ_OVER_3;
    assert!(
        rel < 0.01,
        "long-time phi^2 {value} is {rel:.2e} from pi^2/3"
    );

    let cfg = EnsembleConfig {
        trajectories: 20_000,
        dt_frac: 1.0 / 50.0,
        seed: 42,
        partitions: 1,
    };
    let mc = estimate_phase_moments(&noise, wt, &cfg).unwrap().var_phi;
    let sigma = mc.sigma_from(PI_SQ_OVER_3);
    assert!(
        sigma < 3.0,
        "MC phase variance {} +- {} vs pi^2/3",
        mc.value,
        mc.std_error
    );
    println!(
        "criterion 05 PASS: long-time phi^2 = {value:.6} ({rel:.1e} relative from pi^2/3); MC variance within {sigma:.2} sigma"
    );
}

#[test]
fn criterion_06_thermal_limit_and_energy_growth() {
    let spec = OscillatorSpec::natural();
    let noise = natural_noise(1.0);
    let wt = 1.0e3;
    let mut worst = 0.0f64;
    for beta in [0.1, 1.0] {
        let got =
            longtime_radial_expectation(&noise, wt, |r| thermal_weyl_transform(beta, &spec, r))
                .unwrap();
        let h = 0.5 * spec.hbar * spec.omega * beta;
        let want = 1.0 / (h.cosh() + noise.n_param * wt * h.sinh());
        worst = worst.max((got - want).abs());
        assert!((got - want).abs() < 1e-6, "beta {beta}: {got} vs {want}");
    }
    // first-order energy growth: Tr(rho H) -> (hbar omega / 2) N omega t
    let energy =
        0.5 * spec.hbar * spec.omega * longtime_radial_expectation(&noise, wt, |r| r * r).unwrap();
    let want = 0.5 * spec.hbar * spec.omega * noise.n_param * wt;
    let rel = (energy - want).abs() / want;
    assert!(rel < 5e-3, "energy growth {energy} vs {want}");
    println!(
        "criterion 06 PASS: thermal limit within {worst:.1e} for beta in {{0.1, 1}}; energy growth within {rel:.1e} relative"
    );
}

#[test]
fn criterion_07_phase_operator_structure() {
    let phi300 = phi_matrix(300).unwrap();
    let defect = phi300.hermiticity_defect();
    assert!(defect < 1e-12, "hermiticity defect {defect:.2e}");
    for m in 0..300 {
        let d = phi300.get(m, m);
        assert!(d.re == 0.0 && d.im == 0.0, "diagonal not exactly zero");
    }
    for (m, n) in [(0usize, 7usize), (3, 4), (100, 258), (40, 41)] {
        assert_eq!(
            g_coefficient(m, n).to_bits(),
            g_coefficient(n, m).to_bits(),
            "g not exactly symmetric at ({m},{n})"
        );
    }
    let s100 = phi_spectrum(100).unwrap();
    let s300 = phi_spectrum(300).unwrap();
    assert!(s300.spread < 2.0 * PI, "spread {} >= 2 pi", s300.spread);
    assert!(
        s300.spread > s100.spread,
        "spread not increasing: {} vs {}",
        s300.spread,
        s100.spread
    );
    for rep in [&s100, &s300] {
        for &w in &rep.eigenvalues {
            assert!(w.abs() < 1.5 * PI, "eigenvalue {w} outside the 3 pi range");
        }
    }
    println!(
        "criterion 07 PASS: phi Hermitian (defect {defect:.1e}), zero diagonal, g symmetric; spread {:.6} < 2 pi and > {:.6} at dim 100; spectrum inside 3 pi range",
        s300.spread, s100.spread
    );
}

#[test]
fn criterion_08_parametric_oscillator() {
    // closed form vs quadrature form on u t in [0, 10]
    let mut worst_q = 0.0f64;
    for k in 0..=100 {
        let ut = 10.0 * k as f64 / 100.0;
        let closed = parametric_survival(ut);
        let quad = parametric_survival_quadrature(ut).unwrap();
        worst_q = worst_q.max((closed - quad).abs());
    }
    assert!(worst_q < 1e-10, "closed vs quadrature gap {worst_q:.2e}");

    // full-ODE energy growth rate at ebar = 0.05, f = 0
    let spec = OscillatorSpec::natural();
    let ebar = 0.05;
    let freq = FrequencyMod::parametric(spec.omega, ebar, 0.0);
    let u = freq.growth_rate();
    let t_full = 50.0 * spec.period();
    let dt = spec.period() / 1000.0;
    let start = PhasePoint::new(1.0, 0.0);
    let half = integrate_ode(start, &spec, &DriveSpec::None, &freq, t_full / 2.0, dt)
        .unwrap()
        .last();
    let full = integrate_ode(start, &spec, &DriveSpec::None, &freq, t_full, dt)
        .unwrap()
        .last();
    let rate = (full.radius_sq().ln() - half.radius_sq().ln()) / (t_full / 2.0);
    let rate_rel = (rate - 2.0 * u).abs() / (2.0 * u);
    assert!(rate_rel < 0.10, "growth rate {rate} vs 2u = {}", 2.0 * u);

    // survival through the ODE flow at ebar = 0.02 vs 1/cosh(ut)
    let ebar_slow = 0.02;
    let u_slow = ebar_slow / 4.0;
    let mut worst_flow = 0.0f64;
    for ut in [0.5, 1.0, 1.5, 2.0] {
        let t = ut / u_slow;
        let from_ode = parametric_survival_from_ode(ebar_slow, 0.0, t).unwrap();
        let closed = parametric_survival(ut);
        let rel = (from_ode - closed).abs() / closed;
        worst_flow = worst_flow.max(rel);
        assert!(rel < 0.02, "ut = {ut}: flow {from_ode} vs closed {closed}");
    }
    println!(
        "criterion 08 PASS: 1/cosh(ut) vs quadrature within {worst_q:.1e}; ODE growth rate within {rate_rel:.1e} of 2u; flow-quadrature survival within {worst_flow:.1e} relative"
    );
}

#[test]
fn criterion_09_adiabatic_phase_tracking() {
    let spec = OscillatorSpec::natural();
    let freq = FrequencyMod {
        omega0: spec.omega,
        profile: EpsilonProfile::SlowSine {
            amplitude: 0.01,
            rate: spec.omega / 100.0,
        },
    };
    let t_slow = 2.0 * PI * 100.0 / spec.omega;
    let dt = spec.period() / 1000.0;
    let start = PolarPoint::new(1.0, 0.0);
    let traj = integrate_ode(start.to_phase(), &spec, &DriveSpec::None, &freq, t_slow, dt).unwrap();
    let mut worst_gap = 0.0f64;
    let n = traj.points.len();
    for k in (0..n).step_by(n / 200) {
        let t = traj.times[k];
        let ode = traj.points[k].to_polar();
        let avg = averaged_adiabatic(start, &freq, t);
        worst_gap = worst_gap.max(wrap_angle(ode.phi - avg.phi).abs());
    }
    assert!(worst_gap < 5e-3, "phase gap {worst_gap:.2e}");
    let drift = (traj.last().to_polar().r - start.r).abs() / start.r;
    assert!(drift < 1e-3, "amplitude drift {drift:.2e}");
    println!(
        "criterion 09 PASS: adiabatic phase gap {worst_gap:.1e} rad over one slow period; amplitude drift {drift:.1e} relative"
    );
}

#[test]
fn criterion_10_transition_completeness() {
    let noise = natural_noise(1.0);
    let mut total = 0.0;
    for n in 0..=40usize {
        total += transition_probability_with_tol(0, n, &noise, 2.0, 1e-7).unwrap();
    }
    let defect = (total - 1.0).abs();
    assert!(defect < 1e-4, "sum of P(0->n) = {total}");
    println!("criterion 10 PASS: sum over 41 final states = {total:.8} (defect {defect:.1e})");
}

#[test]
fn criterion_11_free_particle_diffusion() {
    let spec = OscillatorSpec::natural();
    let noise = NoiseSpec::from_mu(2.0, &spec);
    let cfg = EnsembleConfig {
        trajectories: 100_000,
        ..Default::default()
    };
    let est = estimate_free_particle_moments(&noise, &spec, 1.0, 0.0, 0.0, &cfg).unwrap();
    let t = 1.0;
    let m = spec.mass;
    let mu = noise.mu;
    let mut worst = 0.0f64;
    for (name, e, want) in [
        ("Var(p)", est.var_p, mu * t),
        ("Cov(p,q)", est.cov_pq, mu * t * t / (2.0 * m)),
        ("Var(q)", est.var_q, mu * t * t * t / (3.0 * m * m)),
    ] {
        let sigma = e.sigma_from(want);
        worst = worst.max(sigma);
        assert!(
            sigma < 3.0,
            "{name}: {} +- {} vs {want}",
            e.value,
            e.std_error
        );
    }
    println!(
        "criterion 11 PASS: free-particle moments match mu t, mu t^2/2m, mu t^3/3m^2 within {worst:.2} sigma"
    );
}

#[test]
fn criterion_12_partition_determinism() {
    let noise = natural_noise(1.0);
    let base = EnsembleConfig {
        trajectories: 20_000,
        ..Default::default()
    };
    let survival_ref = estimate_survival(&noise, 1.3, &base).unwrap();
    let phase_ref = estimate_phase_moments(&noise, 1.3, &base).unwrap();
    let kernel_ref =
        estimate_kernel_moments(&noise, 1.3, &base, PhasePoint::new(0.5, 0.0)).unwrap();
    for partitions in [2usize, 8] {
        let cfg = EnsembleConfig { partitions, ..base };
        let s = estimate_survival(&noise, 1.3, &cfg).unwrap();
        assert_eq!(s.value.to_bits(), survival_ref.value.to_bits());
        assert_eq!(s.std_error.to_bits(), survival_ref.std_error.to_bits());
        let p = estimate_phase_moments(&noise, 1.3, &cfg).unwrap();
        assert_eq!(
            p.mean_phi.value.to_bits(),
            phase_ref.mean_phi.value.to_bits()
        );
        assert_eq!(p.var_phi.value.to_bits(), phase_ref.var_phi.value.to_bits());
        let k = estimate_kernel_moments(&noise, 1.3, &cfg, PhasePoint::new(0.5, 0.0)).unwrap();
        assert_eq!(k.cov_xx.value.to_bits(), kernel_ref.cov_xx.value.to_bits());
        assert_eq!(k.cov_xy.value.to_bits(), kernel_ref.cov_xy.value.to_bits());
        assert_eq!(k.cov_yy.value.to_bits(), kernel_ref.cov_yy.value.to_bits());
    }
    println!(
        "criterion 12 PASS: survival, phase, and kernel estimates bit-identical across 1, 2, and 8 partitions"
    );
}
