//! Physical constants and the validated well description.
//!
//! Everything inside the crate is computed in electron-volts and nanometres.
//! Conversion to SI happens only when results are reported.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Metres per nanometre.
pub const NM_PER_M: f64 = 1.0e9;

/// CODATA 2018 constants in the (eV, nm) unit system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// ħc in eV·nm.
    pub hbar_c: f64,
    /// Electron rest energy mc² in eV.
    pub electron_rest_energy: f64,
    /// Elementary charge e in coulomb; the electron carries −e.
    pub elementary_charge: f64,
    /// Speed of light in m/s.
    pub speed_of_light: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
        hbar_c: 197.326_980_4,
        electron_rest_energy: 510_998.95,
        elementary_charge: 1.602_176_634e-19,
        speed_of_light: 299_792_458.0,
    };
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

/// User-facing description of the well. Validated by [`WellConfig::to_internal`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WellConfig {
    /// Well radius R in nm.
    pub radius_nm: f64,
    /// Potential step U in eV (zero inside, U outside).
    pub potential_ev: f64,
    /// Azimuthal quantum number l ≥ 0.
    pub azimuthal_l: u32,
}

impl WellConfig {
    pub fn new(radius_nm: f64, potential_ev: f64, azimuthal_l: u32) -> Self {
        Self {
            radius_nm,
            potential_ev,
            azimuthal_l,
        }
    }

    /// Validates against CODATA constants.
    pub fn to_internal(&self) -> Result<Well> {
        Well::with_constants(*self, PhysicalConstants::CODATA_2018)
    }
}

/// A validated well together with the constants it is solved with.
///
/// Motion along z is not modelled: the longitudinal momentum is always zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Well {
    config: WellConfig,
    constants: PhysicalConstants,
}

impl Well {
    pub fn new(radius_nm: f64, potential_ev: f64, azimuthal_l: u32) -> Result<Self> {
        WellConfig::new(radius_nm, potential_ev, azimuthal_l).to_internal()
    }

    pub fn with_constants(config: WellConfig, constants: PhysicalConstants) -> Result<Self> {
        let WellConfig {
            radius_nm,
            potential_ev,
            ..
        } = config;
        if !radius_nm.is_finite() || radius_nm <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "radius must be positive and finite, got {radius_nm} nm"
            )));
        }
        if !potential_ev.is_finite() || potential_ev <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "potential must be positive and finite, got {potential_ev} eV"
            )));
        }
        if potential_ev >= constants.electron_rest_energy {
            return Err(Error::InvalidConfig(format!(
                "potential {potential_ev} eV must stay below the electron rest energy {} eV",
                constants.electron_rest_energy
            )));
        }
        if !(constants.hbar_c > 0.0 && constants.electron_rest_energy > 0.0) {
            return Err(Error::InvalidConfig(
                "non-positive physical constants".into(),
            ));
        }
        Ok(Self { config, constants })
    }

    /// Same geometry and constants, different azimuthal number.
    pub fn with_l(&self, azimuthal_l: u32) -> Self {
        let mut well = *self;
        well.config.azimuthal_l = azimuthal_l;
        well
    }

    pub fn config(&self) -> WellConfig {
        self.config
    }

    pub fn constants(&self) -> &PhysicalConstants {
        &self.constants
    }

    pub fn radius(&self) -> f64 {
        self.config.radius_nm
    }

    pub fn potential(&self) -> f64 {
        self.config.potential_ev
    }

    pub fn l(&self) -> u32 {
        self.config.azimuthal_l
    }

    pub fn rest_energy(&self) -> f64 {
        self.constants.electron_rest_energy
    }

    pub fn hbar_c(&self) -> f64 {
        self.constants.hbar_c
    }
}

pub fn per_nm_to_per_m(k: f64) -> f64 {
    k * NM_PER_M
}

pub fn per_m_to_per_nm(k: f64) -> f64 {
    k / NM_PER_M
}

pub fn ev_to_mev(e: f64) -> f64 {
    e * 1.0e3
}

pub fn mev_to_ev(e: f64) -> f64 {
    e * 1.0e-3
}
