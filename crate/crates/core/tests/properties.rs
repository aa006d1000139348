use std::f64::consts::PI;

use proptest::prelude::*;

use photon_audit::cavity::{lowest_eigenradius, lowest_eigenradius_tol, sph_jstar};
use photon_audit::dipole::{
    dipole_field_circular, near_axis_field, parity_check, rotating_near_field, total_field_mixed, DipoleParams,
    Handedness, MixedPoint, Parity,
};
use photon_audit::forces::{
    brute_force_strip_fields, strip_force, strip_force_closed, summed_strip_fields, PhotonPairConfig, Spin,
};
use photon_audit::manley_rowe::{check_manley_rowe, constructed_solution, OscillatorChannel};
use photon_audit::nuclear::{induced_total_charge, induced_total_charge_quadrature, schwinger_radius, NuclearSpecies};
use photon_audit::numerics::{bisect, Integrator};
use photon_audit::relativity::{lorentz_factor, table2};
use photon_audit::report::sig6;
use photon_audit::vector::cylindrical_to_cartesian;
use photon_audit::waveguide::{
    closure_integrals, flux_line_geometry, surface_pressure, GuidedModeParams, Polarization,
};
use photon_audit::SI;

fn spin() -> impl Strategy<Value = Spin> {
    prop_oneof![Just(Spin::Parallel), Just(Spin::Antiparallel)]
}

fn hand() -> impl Strategy<Value = Handedness> {
    prop_oneof![Just(Handedness::Upper), Just(Handedness::Lower)]
}

fn circular() -> impl Strategy<Value = Polarization> {
    prop_oneof![Just(Polarization::Right), Just(Polarization::Left)]
}

fn pair(spin: Spin, b_am: f64, d_over_b: f64, alpha: f64, chi: f64) -> PhotonPairConfig {
    let b = b_am * 1e-18;
    PhotonPairConfig::new(b, b * d_over_b, 1.84e16, alpha, 210e-9, spin, chi).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadrature_is_linear(a in -5.0..5.0f64, b in -5.0..5.0f64, lo in -3.0..0.0f64, hi in 0.1..3.0f64) {
        let q = Integrator::new(1e-12);
        let f = |x: f64| (3.0 * x).cos() * x.exp();
        let g = |x: f64| 1.0 / (1.0 + x * x);
        let both = q.integrate(|x| a * f(x) + b * g(x), lo, hi).unwrap().value;
        let sep = a * q.integrate(f, lo, hi).unwrap().value + b * q.integrate(g, lo, hi).unwrap().value;
        prop_assert!((both - sep).abs() <= 1e-11 * (1.0 + sep.abs()));
        // arctan closed form for g
        let exact = hi.atan() - lo.atan();
        prop_assert!((q.integrate(g, lo, hi).unwrap().value - exact).abs() <= 1e-12);
    }

    #[test]
    fn bisect_finds_cube_roots(c in 0.01..1e3f64) {
        let r = bisect(|x| x * x * x - c, 0.0, 11.0, 1e-14).unwrap();
        prop_assert!((r.root() - c.cbrt()).abs() <= 1e-12 * c.cbrt().max(1.0));
        prop_assert!(r.contains(c.cbrt()));
    }

    #[test]
    fn induced_charge_below_z(z in 1u32..110, extra in 0u32..160) {
        let s = NuclearSpecies::from_za(z, z + extra).unwrap();
        let closed = induced_total_charge(&s).unwrap();
        let q = induced_total_charge_quadrature(&SI, &s, 1e-11).unwrap().value;
        prop_assert!(((q - closed) / closed).abs() <= 1e-9);
        let qe = closed / SI.e;
        prop_assert!(qe > 0.0 && qe < f64::from(z), "q0/e = {qe} for Z = {z}");
    }

    #[test]
    fn schwinger_radius_grows_as_sqrt_z(z in 1u32..100) {
        let r1 = schwinger_radius(z).unwrap();
        let r4 = schwinger_radius(4 * z).unwrap();
        prop_assert!((r4 / r1 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn manley_rowe_scaling(rate in 1e-6..1e6f64, w2 in 1.0..10.0f64, gap in 0.1..10.0f64, s in 0.1..10.0f64, eps in 1e-6..0.1f64) {
        let [a, b, c] = constructed_solution(rate, w2 + gap, w2).unwrap();
        prop_assert!(check_manley_rowe(a, b, c, 1e-10).passed);
        let scale = |ch: OscillatorChannel| OscillatorChannel::new(ch.power * s, ch.omega).unwrap();
        prop_assert!(check_manley_rowe(scale(a), scale(b), scale(c), 1e-10).passed);
        let off = OscillatorChannel::new(a.power * (1.0 + eps), a.omega).unwrap();
        prop_assert!(!check_manley_rowe(off, b, c, 1e-10).passed);
    }

    #[test]
    fn closed_force_is_attractive_and_scales(sp in spin(), b_am in 1.0..50.0f64, d_over_b in 1.5..50.0f64, alpha in 2.0..8.0f64, chi in 0.0..PI) {
        let cfg = pair(sp, b_am, d_over_b, alpha, chi);
        let f = strip_force_closed(&cfg);
        let g = strip_force_closed(&cfg.with_spacing(2.0 * cfg.d).unwrap());
        prop_assert!((g / f - 0.125).abs() < 1e-12);
        let wider = PhotonPairConfig { b: cfg.b * 0.5, ..cfg };
        prop_assert!((strip_force_closed(&wider) / f - 1.0 / 16.0).abs() < 1e-12);
        if sp == Spin::Antiparallel {
            prop_assert!(f < 0.0);
        } else {
            prop_assert!(f * (2.0 * chi).cos() <= 0.0);
        }
    }

    #[test]
    fn strip_force_matches_quadrature(sp in spin(), b_am in 1.0..50.0f64, d_over_b in 1.5..50.0f64, alpha in 2.0..6.0f64, chi in 0.0..PI) {
        // beyond alpha = 6 the field cancellation in P limits the quadrature itself
        let cfg = pair(sp, b_am, d_over_b, alpha, chi);
        let f = strip_force(&cfg, 1e-8).unwrap();
        // near the nodes of cos 2χ the parallel force is itself tiny
        let scale = if sp == Spin::Parallel { f.closed.abs().max(strip_force_closed(&cfg.with_chi(0.0)).abs() * 1e-3) } else { f.closed.abs() };
        prop_assert!((f.quadrature - f.closed).abs() <= 1e-6 * scale);
    }

    #[test]
    fn summed_fields_match_brute_force(sp in spin(), h in hand(), d_over_b in 1.1..100.0f64, chi in 0.0..(2.0 * PI), u in -0.49..0.49f64) {
        let cfg = pair(sp, 10.0, d_over_b, 4.0, chi).with_branch(h);
        let y = cfg.d * (PI * u).tan();
        let amp = cfg.e0 * cfg.b * cfg.b / (cfg.d * cfg.d + y * y);
        let gap = summed_strip_fields(&cfg, y).max_difference(&brute_force_strip_fields(&cfg, y).unwrap());
        prop_assert!(gap <= 1e-12 * amp);
    }

    #[test]
    fn dipole_forms_agree(h in hand(), r in 1e-14..1e-12f64, theta in 0.01..3.13f64, phi in -PI..PI, t in 0.0..1e-14f64) {
        let d = DipoleParams::new(1e-30, 2.0 * PI * 6e14, h, 0.0).unwrap();
        let pt = MixedPoint::spherical(r, theta, phi);
        let truth = rotating_near_field(&d, pt, t).unwrap();
        for e in [dipole_field_circular(&d, pt, t).unwrap(), total_field_mixed(&d, pt, t).unwrap()] {
            prop_assert!((e - truth).norm() <= 1e-12 * truth.norm());
        }
    }

    #[test]
    fn near_axis_field_is_even(h in hand(), b in 1e-18..1e-15f64, t in 0.0..10.0f64, k in 0.0..2.0f64, z in -1.0..1.0f64) {
        let r = parity_check(|rho, phi| cylindrical_to_cartesian(near_axis_field(1.0, 1.0, k, (rho, phi, z), t, h), phi), b);
        prop_assert_eq!(r.parity, Parity::Even);
    }

    #[test]
    fn wall_stress_vanishes(pol in circular(), e0 in 1e14..1e18f64, b in 1e-18..1e-15f64, omega in 1e13..1e17f64, phi in 0.0..(2.0 * PI), s in 0.0..1.0f64) {
        let p = GuidedModeParams::new(e0, b, omega, 1e-7, pol).unwrap();
        let g = surface_pressure(&p, phi, 0.0, s * 2.0 * PI / omega).unwrap();
        prop_assert!(g.abs() <= 1e-12 * SI.eps0 * e0 * e0);
    }

    #[test]
    fn lorentz_exact_exceeds_approx(alpha in 0.5..12.0f64) {
        let l = lorentz_factor(alpha).unwrap();
        prop_assert!(l.exact >= l.approx);
        let d = 10f64.powf(-alpha);
        // (2 - d)^{-1/2} sqrt(2) = 1 + d/4 + O(d²)
        prop_assert!((l.exact / l.approx - 1.0 - d / 4.0).abs() <= d * d + 1e-15);
        prop_assert_eq!(l.approximation_warning, alpha < 2.0);
    }

    #[test]
    fn sizing_scales_with_wavelength(b in 1e-18..1e-15f64, alpha in 2.0..8.0f64, lambda in 1e-7..1e-5f64, s in 1.1..4.0f64) {
        let r1 = &table2(&[(b, alpha)], lambda).unwrap()[0];
        let r2 = &table2(&[(b, alpha)], lambda * s).unwrap()[0];
        prop_assert!((r1.l / r2.l - s).abs() <= 1e-12 * s);
        prop_assert!((r1.l_over_lambda / r2.l_over_lambda - s * s).abs() <= 1e-12 * s * s);
        prop_assert_eq!(r1.e0, r2.e0);
    }

    #[test]
    fn flux_lines_meet_the_wall(phi0 in -1.5..1.5f64) {
        let line = flux_line_geometry(phi0).unwrap();
        for p in line.chord {
            prop_assert!(((p.x * p.x + p.y * p.y).sqrt() - 1.0).abs() < 1e-12);
        }
        if let Some(j) = line.junction_angle() {
            prop_assert!((j - phi0.abs()).abs() < 1e-9);
        }
    }

    #[test]
    fn sig6_round_trips(m in 1.0..10.0f64, e in -30i32..30, neg in any::<bool>()) {
        let x = if neg { -m } else { m } * 10f64.powi(e);
        let back: f64 = sig6(x).parse().unwrap();
        prop_assert!(((back - x) / x).abs() <= 5e-6);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn closure_holds(pol in circular(), e0 in 1e14..1e18f64, b in 1e-18..1e-15f64, omega in 1e13..1e17f64, l in 1e-10..1e-5f64) {
        let p = GuidedModeParams::new(e0, b, omega, l, pol).unwrap();
        let c = closure_integrals(&p, 1e-10).unwrap();
        prop_assert!(c.max_relative_error() <= 1e-8);
    }

    #[test]
    fn eigenradius_is_stable(tol in 1e-13..1e-6f64) {
        let fine = lowest_eigenradius().unwrap();
        let coarse = lowest_eigenradius_tol(tol).unwrap();
        prop_assert!((coarse.sigma - fine.sigma).abs() <= tol);
        prop_assert!(sph_jstar(coarse.sigma).unwrap().abs() <= 10.0 * tol);
    }
}
