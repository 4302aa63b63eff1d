use std::ffi::CStr;
use std::ptr;

use dirac_well_ffi::*;

fn config(potential_ev: f64, l: u32) -> DwWellConfig {
    DwWellConfig {
        radius_nm: 10.0,
        potential_ev,
        azimuthal_l: l,
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(dw_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn solve(c: &DwWellConfig, max_states: usize) -> *mut DwSolution {
    let mut sol = ptr::null_mut();
    assert_eq!(unsafe { dw_solve(c, max_states, &mut sol) }, DwStatus::Ok);
    assert!(!sol.is_null());
    sol
}

#[test]
fn version_matches_the_crate() {
    let v = unsafe { CStr::from_ptr(dw_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn solve_and_read_states() {
    let sol = solve(&config(0.01, 0), 0);
    unsafe {
        assert_eq!(dw_solution_len(sol), 2);
        let mut s = std::mem::zeroed::<DwState>();
        assert_eq!(dw_solution_state(sol, 0, &mut s), DwStatus::Ok);
        assert_eq!((s.azimuthal_l, s.radial_n), (0, 1));
        assert!((s.energy_kinetic_ev * 1e3 - 1.53).abs() < 0.01);
        assert!((s.zeta_per_nm * 1e9 / 2.00e8 - 1.0).abs() < 0.01);
        assert_eq!(s.kappa_sign, 1.0);

        assert_eq!(dw_solution_state(sol, 2, &mut s), DwStatus::UnknownState);
        assert!(last_error().contains("out of range"));
        dw_solution_free(sol);
    }
}

#[test]
fn max_states_limits_the_solution() {
    let sol = solve(&config(10.0, 0), 1);
    unsafe {
        assert_eq!(dw_solution_len(sol), 1);
        dw_solution_free(sol);
    }
}

#[test]
fn invalid_configs_report_status_and_message() {
    let mut sol = ptr::null_mut();
    let status = unsafe { dw_solve(&config(600_000.0, 0), 0, &mut sol) };
    assert_eq!(status, DwStatus::InvalidConfig);
    assert!(sol.is_null());
    assert!(last_error().contains("rest energy"), "{}", last_error());

    let status = unsafe { dw_solve(ptr::null(), 0, &mut sol) };
    assert_eq!(status, DwStatus::NullPointer);
    let status = unsafe { dw_solve(&config(1.0, 0), 0, ptr::null_mut()) };
    assert_eq!(status, DwStatus::NullPointer);
}

#[test]
fn success_clears_the_error_message() {
    let mut out = 0.0;
    assert_eq!(unsafe { dw_bessel_j(0, -1.0, &mut out) }, DwStatus::Domain);
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { dw_bessel_j(0, 1.0, &mut out) }, DwStatus::Ok);
    assert!(last_error().is_empty());
}

#[test]
fn field_samples_through_a_handle() {
    let sol = solve(&config(0.1, 0), 1);
    unsafe {
        let mut field = ptr::null_mut();
        assert_eq!(
            dw_field_new(sol, 0, DwNormalization::Raw, &mut field),
            DwStatus::Ok
        );
        // the field handle outlives the solution
        dw_solution_free(sol);

        let mut s = std::mem::zeroed::<DwFieldSample>();
        assert_eq!(dw_field_sample(field, 0.0, 0.0, &mut s), DwStatus::Ok);
        assert_eq!(s.re_psi1, 1.0);
        assert_eq!(s.region, DwRegion::Inside);
        assert_eq!(dw_field_sample(field, 12.0, 1.0, &mut s), DwStatus::Ok);
        assert_eq!(s.region, DwRegion::Outside);
        assert!(s.j_phi > 0.0);
        assert!(s.j_rho.abs() < 1e-15 * s.j_phi);
        assert_eq!(dw_field_sample(field, -1.0, 0.0, &mut s), DwStatus::Domain);
        dw_field_free(field);
    }
}

#[test]
fn unit_charge_field_and_outside_fraction() {
    let sol = solve(&config(0.01, 0), 1);
    unsafe {
        let mut frac = 0.0;
        assert_eq!(
            dw_solution_outside_fraction(sol, 0, &mut frac),
            DwStatus::Ok
        );
        assert!(frac > 0.0 && frac < 0.1);

        let mut field = ptr::null_mut();
        assert_eq!(
            dw_field_new(sol, 0, DwNormalization::UnitCharge, &mut field),
            DwStatus::Ok
        );
        let mut s = std::mem::zeroed::<DwFieldSample>();
        assert_eq!(dw_field_sample(field, 1.0, 0.0, &mut s), DwStatus::Ok);
        assert!(s.charge_density < 0.0);
        dw_field_free(field);
        dw_solution_free(sol);
    }
}

#[test]
fn special_functions_and_hard_wall() {
    let mut out = 0.0;
    unsafe {
        assert_eq!(dw_bessel_j(0, 0.0, &mut out), DwStatus::Ok);
        assert_eq!(out, 1.0);
        assert_eq!(dw_bessel_i(1, 0.0, &mut out), DwStatus::Ok);
        assert_eq!(out, 0.0);
        assert_eq!(dw_bessel_k_scaled(0, 1.0, &mut out), DwStatus::Ok);
        assert!((out / std::f64::consts::E - 0.421_024_438).abs() < 1e-9);
        assert_eq!(dw_bessel_k_scaled(0, 0.0, &mut out), DwStatus::Domain);
        assert_eq!(dw_bessel_j(0, 1.0, ptr::null_mut()), DwStatus::NullPointer);

        assert_eq!(
            dw_infinite_well_zeta(&config(1.0, 0), 1, &mut out),
            DwStatus::Ok
        );
        assert!((out - 0.240_482_555_769_577_3).abs() < 1e-15);
        assert_ne!(
            dw_infinite_well_zeta(&config(1.0, 1), 1, &mut out),
            DwStatus::Ok
        );
    }
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        dw_solution_free(ptr::null_mut());
        dw_field_free(ptr::null_mut());
        assert_eq!(dw_solution_len(ptr::null()), 0);
        let mut s = std::mem::zeroed::<DwFieldSample>();
        assert_eq!(
            dw_field_sample(ptr::null(), 1.0, 0.0, &mut s),
            DwStatus::NullPointer
        );
    }
}
