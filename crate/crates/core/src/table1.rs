//! Ground states of the R = 10 nm, l = 0 well at four depths, compared
//! against published reference values.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::solver::{find_eigenstates, EigenState};
use crate::units::{PhysicalConstants, Well, WellConfig};

pub const RADIUS_NM: f64 = 10.0;

/// Published ground-state values for one well depth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferenceRow {
    pub potential_ev: f64,
    pub kinetic_mev: f64,
    pub kappa: f64,
    pub zeta_per_m: f64,
    pub xi_per_m: f64,
}

pub const REFERENCE: [ReferenceRow; 4] = [
    ReferenceRow {
        potential_ev: 0.01,
        kinetic_mev: 1.53,
        kappa: 44.1,
        zeta_per_m: 2.00e8,
        xi_per_m: 4.71e8,
    },
    ReferenceRow {
        potential_ev: 0.10,
        kinetic_mev: 1.95,
        kappa: 2.23e6,
        zeta_per_m: 2.26e8,
        xi_per_m: 1.60e9,
    },
    ReferenceRow {
        potential_ev: 1.00,
        kinetic_mev: 2.12,
        kappa: 2.32e21,
        zeta_per_m: 2.36e8,
        xi_per_m: 5.12e9,
    },
    ReferenceRow {
        potential_ev: 10.0,
        kinetic_mev: 2.18,
        kappa: 1.75e69,
        zeta_per_m: 2.39e8,
        xi_per_m: 1.62e10,
    },
];

/// Pass thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub kinetic_abs_mev: f64,
    pub zeta_rel: f64,
    pub xi_rel: f64,
    pub log10_kappa_abs: f64,
}

pub const TOLERANCES: Tolerances = Tolerances {
    kinetic_abs_mev: 0.01,
    zeta_rel: 0.01,
    xi_rel: 0.01,
    log10_kappa_abs: 0.11,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComparedRow {
    pub reference: ReferenceRow,
    pub state: EigenState,
    pub kinetic_abs_delta_mev: f64,
    pub zeta_rel_delta: f64,
    pub xi_rel_delta: f64,
    pub log10_kappa_abs_delta: f64,
    pub pass: bool,
}

impl ComparedRow {
    pub fn reference_log10_kappa(&self) -> f64 {
        self.reference.kappa.log10()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1Report {
    pub constants: PhysicalConstants,
    pub tolerances: Tolerances,
    pub rows: Vec<ComparedRow>,
}

impl Table1Report {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

pub fn reproduce() -> Result<Table1Report> {
    reproduce_with(PhysicalConstants::CODATA_2018)
}

/// Solves every reference well with the given constants and compares.
pub fn reproduce_with(constants: PhysicalConstants) -> Result<Table1Report> {
    let rows = REFERENCE
        .iter()
        .map(|reference| {
            let well = Well::with_constants(
                WellConfig::new(RADIUS_NM, reference.potential_ev, 0),
                constants,
            )?;
            let state = find_eigenstates(&well, 1)?
                .into_iter()
                .next()
                .ok_or_else(|| {
                    Error::Invalid(format!(
                        "no bound state at U = {} eV",
                        reference.potential_ev
                    ))
                })?;
            Ok(compare(reference, state, &TOLERANCES))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table1Report {
        constants,
        tolerances: TOLERANCES,
        rows,
    })
}

pub fn compare(reference: &ReferenceRow, state: EigenState, tol: &Tolerances) -> ComparedRow {
    let kinetic_abs_delta_mev = (state.energy_kinetic_mev() - reference.kinetic_mev).abs();
    let zeta_rel_delta =
        (state.wave_numbers.zeta_per_m() - reference.zeta_per_m).abs() / reference.zeta_per_m;
    let xi_rel_delta =
        (state.wave_numbers.xi_per_m() - reference.xi_per_m).abs() / reference.xi_per_m;
    let log10_kappa_abs_delta = (state.log10_kappa() - reference.kappa.log10()).abs();
    let pass = kinetic_abs_delta_mev <= tol.kinetic_abs_mev
        && zeta_rel_delta <= tol.zeta_rel
        && xi_rel_delta <= tol.xi_rel
        && log10_kappa_abs_delta <= tol.log10_kappa_abs
        && state.kappa_sign > 0.0;
    ComparedRow {
        reference: *reference,
        state,
        kinetic_abs_delta_mev,
        zeta_rel_delta,
        xi_rel_delta,
        log10_kappa_abs_delta,
        pass,
    }
}
