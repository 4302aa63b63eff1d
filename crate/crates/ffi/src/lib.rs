//! C ABI over the `dirac-well` solver.
//!
//! Every fallible function returns a [`DwStatus`]; on failure a message is
//! available from [`dw_last_error`] on the same thread. Solutions and fields
//! are opaque handles released with their matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dirac_well::field::outside_fraction;
use dirac_well::limits::infinite_well_zeta;
use dirac_well::special::{bessel_i, bessel_j, bessel_k_scaled};
use dirac_well::{
    find_eigenstates, DiracField, EigenState, Error, Normalization, Region, Well, WellConfig,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidConfig = 2,
    Domain = 3,
    OutsideBoundWindow = 4,
    NoConvergence = 5,
    Quadrature = 6,
    UnknownState = 7,
    Invalid = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DwNormalization {
    Raw = 0,
    UnitCharge = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DwRegion {
    Inside = 0,
    Outside = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DwWellConfig {
    pub radius_nm: f64,
    pub potential_ev: f64,
    pub azimuthal_l: u32,
}

/// One bound state. Energies in eV, wave numbers in nm⁻¹.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DwState {
    pub azimuthal_l: u32,
    pub radial_n: u32,
    pub energy_total_ev: f64,
    pub energy_kinetic_ev: f64,
    pub zeta_per_nm: f64,
    pub xi_per_nm: f64,
    pub ln_kappa: f64,
    pub kappa_sign: f64,
    pub boundary_residual: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DwFieldSample {
    pub rho_nm: f64,
    pub phi_rad: f64,
    pub re_psi1: f64,
    pub im_psi1: f64,
    pub re_psi4: f64,
    pub im_psi4: f64,
    pub j_rho: f64,
    pub j_phi: f64,
    pub j_z: f64,
    pub charge_density: f64,
    pub region: DwRegion,
}

/// Bound states of one well.
pub struct DwSolution {
    well: Well,
    states: Vec<EigenState>,
}

/// Field evaluator for one state.
pub struct DwField {
    field: DiracField,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> DwStatus {
    match e {
        Error::InvalidConfig(_) => DwStatus::InvalidConfig,
        Error::Domain { .. } => DwStatus::Domain,
        Error::OutsideBoundWindow { .. } => DwStatus::OutsideBoundWindow,
        Error::NoConvergence { .. } => DwStatus::NoConvergence,
        Error::Quadrature { .. } => DwStatus::Quadrature,
        Error::UnknownState { .. } => DwStatus::UnknownState,
        Error::Invalid(_) => DwStatus::Invalid,
    }
}

/// Runs `f`, converting errors and panics into a status code.
fn guard<F: FnOnce() -> Result<(), DwStatus>>(f: F) -> DwStatus {
    set_last_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DwStatus::Ok,
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_last_error(&format!("panic: {msg}"));
            DwStatus::Panic
        }
    }
}

fn lift<T>(r: dirac_well::Result<T>) -> Result<T, DwStatus> {
    r.map_err(|e| {
        set_last_error(&e.to_string());
        status_of(&e)
    })
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), DwStatus> {
    if p.is_null() {
        set_last_error(&format!("{name} is null"));
        Err(DwStatus::NullPointer)
    } else {
        Ok(())
    }
}

impl From<&EigenState> for DwState {
    fn from(s: &EigenState) -> Self {
        Self {
            azimuthal_l: s.azimuthal_l,
            radial_n: s.radial_n,
            energy_total_ev: s.energy_total,
            energy_kinetic_ev: s.energy_kinetic,
            zeta_per_nm: s.wave_numbers.zeta,
            xi_per_nm: s.wave_numbers.xi,
            ln_kappa: s.ln_kappa,
            kappa_sign: s.kappa_sign,
            boundary_residual: s.boundary_residual,
        }
    }
}

fn well_from(config: &DwWellConfig) -> Result<Well, DwStatus> {
    lift(WellConfig::new(config.radius_nm, config.potential_ev, config.azimuthal_l).to_internal())
}

fn state_at(solution: &DwSolution, index: usize) -> Result<&EigenState, DwStatus> {
    solution.states.get(index).ok_or_else(|| {
        set_last_error(&format!(
            "state index {index} out of range ({} states)",
            solution.states.len()
        ));
        DwStatus::UnknownState
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failure on this thread; empty after a success. The
/// pointer stays valid until the next call into this library on the thread.
#[no_mangle]
pub extern "C" fn dw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Solves for up to `max_states` bound states (0 means all) and stores a new
/// handle in `*out`.
///
/// # Safety
/// `config` must point to a valid config and `out` to writable storage.
#[no_mangle]
pub unsafe extern "C" fn dw_solve(
    config: *const DwWellConfig,
    max_states: usize,
    out: *mut *mut DwSolution,
) -> DwStatus {
    guard(|| {
        non_null(config, "config")?;
        non_null(out, "out")?;
        *out = ptr::null_mut();
        let well = well_from(&*config)?;
        let limit = if max_states == 0 {
            usize::MAX
        } else {
            max_states
        };
        let states = lift(find_eigenstates(&well, limit))?;
        *out = Box::into_raw(Box::new(DwSolution { well, states }));
        Ok(())
    })
}

/// # Safety
/// `solution` must come from [`dw_solve`] and not be freed twice. Null is a
/// no-op.
#[no_mangle]
pub unsafe extern "C" fn dw_solution_free(solution: *mut DwSolution) {
    if !solution.is_null() {
        drop(Box::from_raw(solution));
    }
}

/// Number of states in the solution; 0 for null.
///
/// # Safety
/// `solution` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dw_solution_len(solution: *const DwSolution) -> usize {
    solution.as_ref().map_or(0, |s| s.states.len())
}

/// # Safety
/// `solution` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dw_solution_state(
    solution: *const DwSolution,
    index: usize,
    out: *mut DwState,
) -> DwStatus {
    guard(|| {
        non_null(solution, "solution")?;
        non_null(out, "out")?;
        *out = state_at(&*solution, index)?.into();
        Ok(())
    })
}

/// Fraction of the state's charge outside the well.
///
/// # Safety
/// `solution` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dw_solution_outside_fraction(
    solution: *const DwSolution,
    index: usize,
    out: *mut f64,
) -> DwStatus {
    guard(|| {
        non_null(solution, "solution")?;
        non_null(out, "out")?;
        let s = &*solution;
        *out = lift(outside_fraction(&s.well, state_at(s, index)?))?;
        Ok(())
    })
}

/// Creates a field evaluator for state `index`. The new handle does not
/// borrow the solution.
///
/// # Safety
/// `solution` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dw_field_new(
    solution: *const DwSolution,
    index: usize,
    normalization: DwNormalization,
    out: *mut *mut DwField,
) -> DwStatus {
    guard(|| {
        non_null(solution, "solution")?;
        non_null(out, "out")?;
        *out = ptr::null_mut();
        let s = &*solution;
        let n = match normalization {
            DwNormalization::Raw => Normalization::Raw,
            DwNormalization::UnitCharge => Normalization::UnitCharge,
        };
        let field = lift(DiracField::with_normalization(
            &s.well,
            state_at(s, index)?,
            n,
        ))?;
        *out = Box::into_raw(Box::new(DwField { field }));
        Ok(())
    })
}

/// # Safety
/// `field` must come from [`dw_field_new`] and not be freed twice. Null is a
/// no-op.
#[no_mangle]
pub unsafe extern "C" fn dw_field_free(field: *mut DwField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Spinor, currents and charge density at (ρ in nm, φ in rad).
///
/// # Safety
/// `field` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dw_field_sample(
    field: *const DwField,
    rho_nm: f64,
    phi_rad: f64,
    out: *mut DwFieldSample,
) -> DwStatus {
    guard(|| {
        non_null(field, "field")?;
        non_null(out, "out")?;
        let f = &(*field).field;
        let region = Region::of(f.well(), rho_nm);
        let sp = lift(f.spinor_in(rho_nm, phi_rad, region))?;
        let s = f.field_from_spinor(&sp);
        *out = DwFieldSample {
            rho_nm,
            phi_rad,
            re_psi1: sp.psi[0].re,
            im_psi1: sp.psi[0].im,
            re_psi4: sp.psi[3].re,
            im_psi4: sp.psi[3].im,
            j_rho: s.j_rho,
            j_phi: s.j_phi,
            j_z: s.j_z,
            charge_density: s.charge_density,
            region: match region {
                Region::Inside => DwRegion::Inside,
                Region::Outside => DwRegion::Outside,
            },
        };
        Ok(())
    })
}

/// n-th hard-wall wave number j₀,ₙ/R in nm⁻¹ (l must be 0).
///
/// # Safety
/// `config` must point to a valid config and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn dw_infinite_well_zeta(
    config: *const DwWellConfig,
    n: u32,
    out: *mut f64,
) -> DwStatus {
    guard(|| {
        non_null(config, "config")?;
        non_null(out, "out")?;
        *out = lift(infinite_well_zeta(&well_from(&*config)?, n))?;
        Ok(())
    })
}

unsafe fn special(out: *mut f64, value: impl FnOnce() -> dirac_well::Result<f64>) -> DwStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = lift(value())?;
        Ok(())
    })
}

/// J_n(x).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dw_bessel_j(n: u32, x: f64, out: *mut f64) -> DwStatus {
    special(out, || bessel_j(n, x))
}

/// I_n(x).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dw_bessel_i(n: u32, x: f64, out: *mut f64) -> DwStatus {
    special(out, || bessel_i(n, x))
}

/// eˣ K_n(x).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dw_bessel_k_scaled(n: u32, x: f64, out: *mut f64) -> DwStatus {
    special(out, || bessel_k_scaled(n, x))
}
