use std::f64::consts::PI;

use dirac_well::field::{normalization_integral, outside_fraction};
use dirac_well::{find_eigenstates, DiracField, Normalization, Region, Well};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

fn random_points(count: usize, rmax: f64) -> Vec<(f64, f64)> {
    let mut runner = TestRunner::deterministic();
    let strategy = (0.0..rmax, 0.0..2.0 * PI);
    (0..count)
        .map(|_| strategy.new_tree(&mut runner).unwrap().current())
        .collect()
}

fn bilinear_agrees_with_closed_form(well: &Well, normalization: Normalization) {
    let states = find_eigenstates(well, 3).unwrap();
    let points = random_points(1000, 3.0 * well.radius());
    for state in &states {
        let field = DiracField::with_normalization(well, state, normalization).unwrap();
        let samples: Vec<_> = points
            .iter()
            .map(|&(rho, phi)| field.sample(rho, phi).unwrap())
            .collect();
        let peak = samples.iter().map(|s| s.j_phi.abs()).fold(0.0, f64::max);
        assert!(peak > 0.0);
        for s in &samples {
            assert!(s.j_rho.abs() < 1e-15 * peak, "{s:?}");
            assert!(s.j_z.abs() < 1e-15 * peak, "{s:?}");
            let closed = field
                .j_phi_closed_form(s.rho, Region::of(well, s.rho))
                .unwrap();
            let scale = closed.abs().max(1e-300);
            assert!(
                (s.j_phi - closed).abs() <= 1e-10 * scale,
                "{} at rho = {}: bilinear {} closed {}",
                state.label(),
                s.rho,
                s.j_phi,
                closed
            );
        }
    }
}

#[test]
fn s_wave_currents() {
    for u in [0.01, 0.1, 1.0, 10.0] {
        bilinear_agrees_with_closed_form(&Well::new(10.0, u, 0).unwrap(), Normalization::Raw);
    }
}

#[test]
fn p_wave_currents() {
    for u in [0.01, 1.0] {
        bilinear_agrees_with_closed_form(&Well::new(10.0, u, 1).unwrap(), Normalization::Raw);
    }
}

#[test]
fn unit_charge_currents() {
    bilinear_agrees_with_closed_form(&Well::new(10.0, 0.1, 0).unwrap(), Normalization::UnitCharge);
}

#[test]
fn densities_do_not_depend_on_azimuth() {
    let well = Well::new(10.0, 0.1, 2).unwrap();
    let state = find_eigenstates(&well, 1).unwrap()[0];
    let field = DiracField::new(&well, &state).unwrap();
    for rho in [0.5, 4.0, 9.9, 10.5, 14.0] {
        let base = field.sample(rho, 0.0).unwrap();
        for k in 1..16 {
            let s = field.sample(rho, k as f64 * PI / 8.0).unwrap();
            assert!((s.j_phi - base.j_phi).abs() <= 1e-14 * base.j_phi.abs());
            assert!(
                (s.charge_density - base.charge_density).abs() <= 1e-14 * base.charge_density.abs()
            );
        }
    }
}

#[test]
fn ground_state_circulates_one_way() {
    for l in 0..3 {
        let well = Well::new(10.0, 1.0, l).unwrap();
        let state = find_eigenstates(&well, 1).unwrap()[0];
        let field = DiracField::new(&well, &state).unwrap();
        for i in 1..200 {
            let rho = 15.0 * i as f64 / 200.0;
            assert!(
                field.sample(rho, 0.3).unwrap().j_phi > 0.0,
                "l = {l}, rho = {rho}"
            );
        }
    }
}

#[test]
fn unit_charge_density_integrates_to_one_electron_per_metre() {
    let well = Well::new(10.0, 0.01, 0).unwrap();
    let state = find_eigenstates(&well, 1).unwrap()[0];
    let field = DiracField::with_normalization(&well, &state, Normalization::UnitCharge).unwrap();
    // midpoint rule in nm, density in C/m³ → C/m after the 1e-18 area factor
    let n = 40_000;
    let rmax = 60.0;
    let h = rmax / n as f64;
    let total: f64 = (0..n)
        .map(|i| {
            let rho = (i as f64 + 0.5) * h;
            2.0 * PI * rho * field.charge_density(rho).unwrap() * h
        })
        .sum::<f64>()
        * 1e-18;
    let e = well.constants().elementary_charge;
    assert!(((total + e) / e).abs() < 1e-6, "total {total:e}");
}

#[test]
fn normalization_integral_matches_inside_closed_form() {
    // ∫₀^R J₀(ζρ)²ρ dρ = R²/2 (J₀² + J₁²) at ζR; inside small component adds
    // (ħcζ/(E+mc²))² R²/2 (J₁² − J₀J₂).
    use dirac_well::special::bessel_j;
    let well = Well::new(10.0, 10.0, 0).unwrap();
    let state = find_eigenstates(&well, 1).unwrap()[0];
    let x = state.wave_numbers.zeta * 10.0;
    let (j0, j1, j2) = (
        bessel_j(0, x).unwrap(),
        bessel_j(1, x).unwrap(),
        bessel_j(2, x).unwrap(),
    );
    let ratio =
        well.hbar_c() * state.wave_numbers.zeta / (state.energy_kinetic + 2.0 * well.rest_energy());
    let inside = 2.0 * PI * 50.0 * (j0 * j0 + j1 * j1 + ratio * ratio * (j1 * j1 - j0 * j2));
    let total = normalization_integral(&well, &state).unwrap();
    let frac = outside_fraction(&well, &state).unwrap();
    assert!(((total * (1.0 - frac) - inside) / inside).abs() < 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fields_are_continuous_at_the_wall(
        log_u in -2.0f64..1.5,
        l in 0u32..3,
        phi in 0.0f64..(2.0 * PI),
    ) {
        let u = 10f64.powf(log_u);
        let well = Well::new(10.0, u, l).unwrap();
        for state in find_eigenstates(&well, 2).unwrap() {
            let field = DiracField::new(&well, &state).unwrap();
            let r = well.radius();
            let a = field.sample_in(r, phi, Region::Inside).unwrap();
            let b = field.sample_in(r, phi, Region::Outside).unwrap();
            let rel = |x: f64, y: f64| (x - y).abs() / x.abs().max(y.abs());
            prop_assert!(rel(a.j_phi, b.j_phi) < 1e-10);
            prop_assert!(rel(a.charge_density, b.charge_density) < 1e-10);
        }
    }
}
