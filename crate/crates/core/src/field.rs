//! Spinor, charge density and current density of a bound state.
//!
//! For a spin-up state of azimuthal number l the spinor has the form
//!
//! ```text
//! ψ = ( e^{ilφ} A(ρ), 0, 0, −i e^{i(l+1)φ} B(ρ) )
//! ```
//!
//! with, inside the well, A = J_l(ζρ), B = ħcζ/(𝓔+mc²) · J_{l+1}(ζρ), and
//! outside A = κK_l(ξρ), B = κ ħcξ/(𝓔−U+mc²) · K_{l+1}(ξρ). Currents are
//! obtained from the bilinears −e c ψ†α_kψ with the cylindrical α-matrices;
//! the closed-form product of radial functions is kept as a cross-check.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::integrate;
use crate::solver::EigenState;
use crate::special::{bessel_j_pair, bessel_k_scaled_pair};
use crate::units::Well;

/// Exponents below this are flushed to an exact zero (e^{-690.8} ≈ 1e-300).
const LN_FLUSH: f64 = -690.775_527_898_213_7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Inside,
    Outside,
}

impl Region {
    pub fn of(well: &Well, rho: f64) -> Self {
        if rho <= well.radius() {
            Region::Inside
        } else {
            Region::Outside
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Region::Inside => "inside",
            Region::Outside => "outside",
        }
    }
}

/// Field scaling convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// Inside coefficient of J_l equal to one. Charge density is reported in
    /// units of e and currents in units of e·c, times the dimensionless |ψ|².
    Raw,
    /// One electron per metre of z: charge density in C/m³, current in A/m².
    UnitCharge,
}

impl Normalization {
    pub fn as_str(&self) -> &'static str {
        match self {
            Normalization::Raw => "raw",
            Normalization::UnitCharge => "unit-charge",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorSample {
    pub rho: f64,
    pub phi: f64,
    pub psi: [Complex64; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldSample {
    pub rho: f64,
    pub phi: f64,
    pub j_rho: f64,
    pub j_phi: f64,
    pub j_z: f64,
    pub charge_density: f64,
}

/// The cylindrical α-matrices at azimuth φ, in the order (ρ, φ, z).
pub fn alpha_matrices(phi: f64) -> [[[Complex64; 4]; 4]; 3] {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let em = Complex64::from_polar(1.0, -phi);
    let ep = Complex64::from_polar(1.0, phi);
    let rho = [[z, z, z, em], [z, z, ep, z], [z, em, z, z], [ep, z, z, z]];
    let azi = [
        [z, z, z, -i * em],
        [z, z, i * ep, z],
        [z, -i * em, z, z],
        [i * ep, z, z, z],
    ];
    let axial = [
        [z, z, one, z],
        [z, z, z, -one],
        [one, z, z, z],
        [z, -one, z, z],
    ];
    [rho, azi, axial]
}

/// ψ†Mψ; real for Hermitian M.
fn bilinear(psi: &[Complex64; 4], m: &[[Complex64; 4]; 4]) -> f64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (row, p) in m.iter().zip(psi) {
        let mut mv = Complex64::new(0.0, 0.0);
        for (entry, q) in row.iter().zip(psi) {
            mv += entry * q;
        }
        acc += p.conj() * mv;
    }
    acc.re
}

/// Evaluates fields of one bound state.
#[derive(Debug, Clone, Copy)]
pub struct DiracField {
    well: Well,
    state: EigenState,
    /// ħcζ/(𝓔+mc²)
    inside_ratio: f64,
    /// ħcξ/(𝓔−U+mc²)
    outside_ratio: f64,
    normalization: Normalization,
    /// Multiplies raw |ψ|² to give the reported density.
    density_scale: f64,
    norm_integral: Option<f64>,
}

impl DiracField {
    /// Raw fields (inside J_l coefficient equal to one).
    pub fn new(well: &Well, state: &EigenState) -> Result<Self> {
        if state.azimuthal_l != well.l() {
            return Err(Error::Invalid(format!(
                "state {} does not belong to a well with l = {}",
                state.label(),
                well.l()
            )));
        }
        let mc2 = well.rest_energy();
        let hc = well.hbar_c();
        let kin = state.energy_kinetic;
        Ok(Self {
            well: *well,
            state: *state,
            inside_ratio: hc * state.wave_numbers.zeta / (kin + 2.0 * mc2),
            outside_ratio: hc * state.wave_numbers.xi / (kin - well.potential() + 2.0 * mc2),
            normalization: Normalization::Raw,
            density_scale: 1.0,
            norm_integral: None,
        })
    }

    pub fn with_normalization(well: &Well, state: &EigenState, n: Normalization) -> Result<Self> {
        let mut field = Self::new(well, state)?;
        if n == Normalization::UnitCharge {
            let total_nm2 = normalization_integral(well, state)?;
            // |ψ|² per m² per metre of z
            let total_m2 = total_nm2 * 1e-18;
            field.density_scale = 1.0 / total_m2;
            field.norm_integral = Some(total_nm2);
            field.normalization = n;
        }
        Ok(field)
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn well(&self) -> &Well {
        &self.well
    }

    pub fn state(&self) -> &EigenState {
        &self.state
    }

    /// Radial amplitudes (A, B) on the requested side of the boundary.
    /// The outside branch is evaluated in log space.
    pub fn radial(&self, rho: f64, region: Region) -> Result<(f64, f64)> {
        if !rho.is_finite() || rho < 0.0 {
            return Err(Error::Domain {
                function: "spinor",
                x: rho,
                reason: "radius must be finite and non-negative",
            });
        }
        let l = self.well.l();
        let k = self.state.wave_numbers;
        match region {
            Region::Inside => {
                let (j_l, j_l1) = bessel_j_pair(l, k.zeta * rho)?;
                Ok((j_l, self.inside_ratio * j_l1))
            }
            Region::Outside => {
                if rho == 0.0 {
                    return Err(Error::Domain {
                        function: "spinor",
                        x: rho,
                        reason: "outside branch is singular on the axis",
                    });
                }
                let x = k.xi * rho;
                let (k_l, k_l1) = bessel_k_scaled_pair(l, x)?;
                let base = self.state.ln_kappa - x;
                let a = flush_exp(base + k_l.ln());
                let b = flush_exp(base + k_l1.ln());
                let s = self.state.kappa_sign;
                Ok((s * a, s * self.outside_ratio * b))
            }
        }
    }

    fn amplitude_scale(&self) -> f64 {
        self.density_scale.sqrt()
    }

    pub fn spinor(&self, rho: f64, phi: f64) -> Result<SpinorSample> {
        self.spinor_in(rho, phi, Region::of(&self.well, rho))
    }

    /// Spinor from an explicit branch; used to compare both sides at ρ = R.
    pub fn spinor_in(&self, rho: f64, phi: f64, region: Region) -> Result<SpinorSample> {
        let (a, b) = self.radial(rho, region)?;
        let s = self.amplitude_scale();
        let l = self.well.l() as f64;
        let zero = Complex64::new(0.0, 0.0);
        let psi1 = Complex64::from_polar(s * a, l * phi);
        let psi4 = Complex64::new(0.0, -1.0) * Complex64::from_polar(s * b, (l + 1.0) * phi);
        Ok(SpinorSample {
            rho,
            phi,
            psi: [psi1, zero, zero, psi4],
        })
    }

    pub fn sample(&self, rho: f64, phi: f64) -> Result<FieldSample> {
        self.sample_in(rho, phi, Region::of(&self.well, rho))
    }

    /// Current and charge density from the α-matrix bilinears.
    pub fn sample_in(&self, rho: f64, phi: f64, region: Region) -> Result<FieldSample> {
        let sp = self.spinor_in(rho, phi, region)?;
        Ok(self.field_from_spinor(&sp))
    }

    pub fn field_from_spinor(&self, sp: &SpinorSample) -> FieldSample {
        let [a_rho, a_phi, a_z] = alpha_matrices(sp.phi);
        let density: f64 = sp.psi.iter().map(|p| p.norm_sqr()).sum();
        let (charge_unit, current_unit) = self.units();
        FieldSample {
            rho: sp.rho,
            phi: sp.phi,
            j_rho: -current_unit * bilinear(&sp.psi, &a_rho),
            j_phi: -current_unit * bilinear(&sp.psi, &a_phi),
            j_z: -current_unit * bilinear(&sp.psi, &a_z),
            charge_density: -charge_unit * density,
        }
    }

    /// (e, e·c) in the reporting units.
    fn units(&self) -> (f64, f64) {
        match self.normalization {
            Normalization::Raw => (1.0, 1.0),
            Normalization::UnitCharge => {
                let c = self.well.constants();
                (c.elementary_charge, c.elementary_charge * c.speed_of_light)
            }
        }
    }

    /// j_φ from the closed-form product of radial functions:
    /// 2ħcζ J_l J_{l+1}/(𝓔+mc²) inside, 2κ²ħcξ K_l K_{l+1}/(𝓔−U+mc²) outside,
    /// in the same units as [`DiracField::sample`].
    pub fn j_phi_closed_form(&self, rho: f64, region: Region) -> Result<f64> {
        let l = self.well.l();
        let k = self.state.wave_numbers;
        let raw = match region {
            Region::Inside => {
                let (j_l, j_l1) = bessel_j_pair(l, k.zeta * rho)?;
                2.0 * self.inside_ratio * j_l * j_l1
            }
            Region::Outside => {
                let x = k.xi * rho;
                let (k_l, k_l1) = bessel_k_scaled_pair(l, x)?;
                let ln = 2.0 * self.state.ln_kappa - 2.0 * x + k_l.ln() + k_l1.ln();
                2.0 * self.outside_ratio * flush_exp(ln)
            }
        };
        let (_, current_unit) = self.units();
        Ok(current_unit * self.density_scale * raw)
    }

    /// Charge density at ρ; independent of φ.
    pub fn charge_density(&self, rho: f64) -> Result<f64> {
        Ok(self.sample(rho, 0.0)?.charge_density)
    }

    /// Raw 2πρ|ψ|² per unit ρ (nm).
    fn radial_weight(&self, rho: f64, region: Region) -> f64 {
        match self.radial(rho, region) {
            Ok((a, b)) => 2.0 * PI * rho * (a * a + b * b),
            Err(_) => f64::NAN,
        }
    }

    /// Raw 2π∫ |ψ|² ρ dρ over [R, ∞) in nm².
    fn outside_integral(&self, cut_skin_depths: f64) -> Result<f64> {
        let r = self.well.radius();
        let xi = self.state.wave_numbers.xi;
        let cut = r + cut_skin_depths / xi;
        // pieces of a few skin depths keep the adaptive rule well conditioned
        let pieces = 8;
        let mut total = 0.0;
        for p in 0..pieces {
            let a = r + (cut - r) * p as f64 / pieces as f64;
            let b = r + (cut - r) * (p + 1) as f64 / pieces as f64;
            total += integrate(|x| self.radial_weight(x, Region::Outside), a, b, 1e-13, 0.0)?.value;
        }
        // |ψ|² ~ e^{−2ξρ}/ρ beyond the cut, so 2πρ|ψ|² decays as e^{−2ξρ}
        let tail = self.radial_weight(cut, Region::Outside) / (2.0 * xi);
        Ok(total + tail)
    }

    fn inside_integral(&self) -> Result<f64> {
        let r = self.well.radius();
        Ok(integrate(
            |x| self.radial_weight(x, Region::Inside),
            0.0,
            r,
            1e-13,
            0.0,
        )?
        .value)
    }
}

fn flush_exp(ln: f64) -> f64 {
    if ln < LN_FLUSH {
        0.0
    } else {
        ln.exp()
    }
}

/// Convenience wrapper for [`DiracField::spinor`] on raw fields.
pub fn evaluate_spinor(
    state: &EigenState,
    well: &Well,
    rho: f64,
    phi: f64,
) -> Result<SpinorSample> {
    DiracField::new(well, state)?.spinor(rho, phi)
}

/// Convenience wrapper for [`DiracField::sample`] on raw fields.
pub fn current_density(state: &EigenState, well: &Well, rho: f64, phi: f64) -> Result<FieldSample> {
    DiracField::new(well, state)?.sample(rho, phi)
}

/// Raw charge density −|ψ|² (units of e).
pub fn charge_density(state: &EigenState, well: &Well, rho: f64) -> Result<f64> {
    DiracField::new(well, state)?.charge_density(rho)
}

/// Skin depths beyond R at which the outside integral is truncated.
pub const DEFAULT_CUT_SKIN_DEPTHS: f64 = 40.0;

/// 2π∫₀^∞ ψ†ψ ρ dρ of the raw spinor, in nm² (per unit length of z).
pub fn normalization_integral(well: &Well, state: &EigenState) -> Result<f64> {
    normalization_integral_with_cut(well, state, DEFAULT_CUT_SKIN_DEPTHS)
}

/// As [`normalization_integral`], truncating the quadrature `cut` skin
/// depths beyond the wall before adding the asymptotic tail.
pub fn normalization_integral_with_cut(well: &Well, state: &EigenState, cut: f64) -> Result<f64> {
    let field = DiracField::new(well, state)?;
    Ok(field.inside_integral()? + field.outside_integral(cut)?)
}

/// Fraction of the total charge found at ρ > R.
pub fn outside_fraction(well: &Well, state: &EigenState) -> Result<f64> {
    let field = DiracField::new(well, state)?;
    let inside = field.inside_integral()?;
    let outside = field.outside_integral(DEFAULT_CUT_SKIN_DEPTHS)?;
    Ok(outside / (inside + outside))
}

/// e-folding length 1/ξ of the evanescent amplitude, in nm.
pub fn skin_depth(state: &EigenState) -> f64 {
    1.0 / state.wave_numbers.xi
}
