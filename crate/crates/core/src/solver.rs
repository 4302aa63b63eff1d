//! Bound-state eigenenergies from the boundary-matching condition.
//!
//! Inside the well the large component is J_l(ζρ), outside it is κK_l(ξρ).
//! Continuity of both spinor components at ρ = R gives
//!
//! ```text
//! D(E) = ξ J_l(ζR) K_{l+1}(ξR) − (E − U + mc²)/(E + mc²) · ζ K_l(ξR) J_{l+1}(ζR) = 0
//! ```
//!
//! which is evaluated with e^{ξR}K in place of K. The energy variable
//! throughout is the kinetic energy E − mc², so that ζ and ξ never suffer
//! from cancellation against the rest energy.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root::{bisect, scan_sign_changes};
use crate::special::{bessel_j, bessel_j_pair, bessel_k_scaled, bessel_k_scaled_pair};
use crate::units::{ev_to_mev, per_nm_to_per_m, Well};

/// Inside wavenumber ζ and outside decay constant ξ, both in nm⁻¹.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveNumbers {
    pub zeta: f64,
    pub xi: f64,
}

impl WaveNumbers {
    pub fn zeta_per_m(&self) -> f64 {
        per_nm_to_per_m(self.zeta)
    }

    pub fn xi_per_m(&self) -> f64 {
        per_nm_to_per_m(self.xi)
    }
}

/// One converged bound state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenState {
    pub azimuthal_l: u32,
    /// 1 for the lowest state of a given l.
    pub radial_n: u32,
    /// Total energy 𝓔 in eV, rest energy included.
    pub energy_total: f64,
    /// 𝓔 − mc² in eV.
    pub energy_kinetic: f64,
    pub wave_numbers: WaveNumbers,
    /// ln|κ|.
    pub ln_kappa: f64,
    /// Sign of κ; negative whenever J_l(ζR) < 0.
    pub kappa_sign: f64,
    /// |D(E)| / (|first term| + |second term|) at the converged energy.
    pub boundary_residual: f64,
}

impl EigenState {
    pub fn energy_kinetic_mev(&self) -> f64 {
        ev_to_mev(self.energy_kinetic)
    }

    pub fn log10_kappa(&self) -> f64 {
        self.ln_kappa / std::f64::consts::LN_10
    }

    /// `l<l>n<n>`, e.g. `l0n1`.
    pub fn label(&self) -> String {
        format!("l{}n{}", self.azimuthal_l, self.radial_n)
    }
}

/// Tuning for [`find_eigenstates_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Minimum number of scan points across the bound window.
    pub min_scan_points: usize,
    /// Scan points per expected state; the grid grows with the well depth.
    pub points_per_state: usize,
    /// Bisection stops once the bracket is narrower than this fraction of
    /// the kinetic energy (or no double fits inside).
    pub relative_tolerance: f64,
    pub max_iterations: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            min_scan_points: 2000,
            points_per_state: 64,
            relative_tolerance: 1e-15,
            max_iterations: 300,
        }
    }
}

/// Kinetic energies within this fraction of the window edges are never probed.
pub const WINDOW_GUARD: f64 = 1e-9;

fn check_window(well: &Well, kinetic: f64) -> Result<()> {
    let u = well.potential();
    if !(kinetic > 0.0 && kinetic < u) {
        return Err(Error::OutsideBoundWindow {
            kinetic_ev: kinetic,
            potential_ev: u,
        });
    }
    Ok(())
}

/// ζ and ξ at kinetic energy `kinetic` (eV), which must lie in (0, U).
///
/// ζ² = (𝓔² − m²c⁴)/(ħc)² and ξ² = (m²c⁴ − (𝓔 − U)²)/(ħc)², both factored so
/// that no difference of nearly equal rest-energy-sized numbers is formed.
pub fn wave_numbers(well: &Well, kinetic: f64) -> Result<WaveNumbers> {
    check_window(well, kinetic)?;
    let mc2 = well.rest_energy();
    let u = well.potential();
    let hc = well.hbar_c();
    let zeta = (kinetic * (kinetic + 2.0 * mc2)).sqrt() / hc;
    let xi = ((u - kinetic) * (2.0 * mc2 + kinetic - u)).sqrt() / hc;
    Ok(WaveNumbers { zeta, xi })
}

/// The two sides of the matching equation, with K scaled by e^{ξR}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchingTerms {
    /// ξ J_l(ζR) K̃_{l+1}(ξR)
    pub outside: f64,
    /// (𝓔 − U + mc²)/(𝓔 + mc²) · ζ K̃_l(ξR) J_{l+1}(ζR)
    pub inside: f64,
}

impl MatchingTerms {
    pub fn residual(&self) -> f64 {
        self.outside - self.inside
    }

    pub fn relative_residual(&self) -> f64 {
        let scale = self.outside.abs() + self.inside.abs();
        if scale == 0.0 {
            0.0
        } else {
            self.residual().abs() / scale
        }
    }
}

pub fn matching_terms(well: &Well, kinetic: f64) -> Result<MatchingTerms> {
    let k = wave_numbers(well, kinetic)?;
    let l = well.l();
    let r = well.radius();
    let mc2 = well.rest_energy();
    let u = well.potential();
    let (j_l, j_l1) = bessel_j_pair(l, k.zeta * r)?;
    let (k_l, k_l1) = bessel_k_scaled_pair(l, k.xi * r)?;
    let ratio = (kinetic - u + 2.0 * mc2) / (kinetic + 2.0 * mc2);
    Ok(MatchingTerms {
        outside: k.xi * j_l * k_l1,
        inside: ratio * k.zeta * k_l * j_l1,
    })
}

/// Matching defect D at kinetic energy `kinetic`; bound states are its zeros.
pub fn boundary_residual(well: &Well, kinetic: f64) -> Result<f64> {
    Ok(matching_terms(well, kinetic)?.residual())
}

/// The scan grid: uniform in √E_kin (so roughly uniform in ζ), which keeps
/// the spacing between consecutive states close to constant in grid steps.
pub fn scan_grid(well: &Well, opts: &SolverOptions) -> Vec<f64> {
    let u = well.potential();
    let lo = (WINDOW_GUARD * u).sqrt();
    let hi = ((1.0 - WINDOW_GUARD) * u).sqrt();
    let expected = expected_state_count(well);
    let points = opts
        .min_scan_points
        .max(opts.points_per_state.saturating_mul(expected))
        .max(2);
    (0..points)
        .map(|i| {
            let s = lo + (hi - lo) * i as f64 / (points - 1) as f64;
            s * s
        })
        .collect()
}

/// Rough upper estimate of the number of bound states, from ζ at the top of
/// the window and the asymptotic spacing π/R of Bessel zeros.
pub fn expected_state_count(well: &Well) -> usize {
    let u = well.potential();
    let zeta_top = (u * (u + 2.0 * well.rest_energy())).sqrt() / well.hbar_c();
    (zeta_top * well.radius() / std::f64::consts::PI + 0.5 * well.l() as f64 + 2.0).ceil() as usize
}

pub fn find_eigenstates(well: &Well, max_states: usize) -> Result<Vec<EigenState>> {
    find_eigenstates_with(well, max_states, &SolverOptions::default())
}

/// All bound states of `well` (up to `max_states`), lowest first.
///
/// An empty result is not an error: it means no sign change of the
/// matching defect was found in the window.
pub fn find_eigenstates_with(
    well: &Well,
    max_states: usize,
    opts: &SolverOptions,
) -> Result<Vec<EigenState>> {
    if max_states == 0 {
        return Ok(Vec::new());
    }
    let grid = scan_grid(well, opts);
    let residual = |e: f64| boundary_residual(well, e);
    let brackets = scan_sign_changes(&grid, max_states, residual)?;
    brackets
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            let kinetic = bisect(b, opts.relative_tolerance, opts.max_iterations, residual)?;
            build_state(well, kinetic, i as u32 + 1)
        })
        .collect()
}

/// Assembles the state at a converged kinetic energy.
pub fn build_state(well: &Well, kinetic: f64, radial_n: u32) -> Result<EigenState> {
    let wave_numbers = wave_numbers(well, kinetic)?;
    let terms = matching_terms(well, kinetic)?;
    let (ln_kappa, kappa_sign) = ln_kappa_at(well, &wave_numbers)?;
    Ok(EigenState {
        azimuthal_l: well.l(),
        radial_n,
        energy_total: well.rest_energy() + kinetic,
        energy_kinetic: kinetic,
        wave_numbers,
        ln_kappa,
        kappa_sign,
        boundary_residual: terms.relative_residual(),
    })
}

/// ln|κ| and sign κ from the first matching line κK_l(ξR) = J_l(ζR), in log
/// space: ln|κ| = ln|J_l(ζR)| − ln K̃_l(ξR) + ξR.
pub fn ln_kappa(state: &EigenState, well: &Well) -> Result<(f64, f64)> {
    ln_kappa_at(well, &state.wave_numbers)
}

fn ln_kappa_at(well: &Well, k: &WaveNumbers) -> Result<(f64, f64)> {
    let r = well.radius();
    let j = bessel_j(well.l(), k.zeta * r)?;
    if j == 0.0 {
        return Err(Error::Invalid(
            "J_l(ζR) vanishes: amplitude ratio is zero".into(),
        ));
    }
    let k_scaled = bessel_k_scaled(well.l(), k.xi * r)?;
    Ok((j.abs().ln() - k_scaled.ln() + k.xi * r, j.signum()))
}

/// Relative disagreement of the second matching line,
/// κ ξ K_{l+1}(ξR) against (𝓔−U+mc²)/(𝓔+mc²) · ζ J_{l+1}(ζR),
/// with κ taken from the first line.
pub fn derivative_condition_mismatch(state: &EigenState, well: &Well) -> Result<f64> {
    let r = well.radius();
    let k = state.wave_numbers;
    let k_l1 = bessel_k_scaled(well.l() + 1, k.xi * r)?;
    let j_l1 = bessel_j(well.l() + 1, k.zeta * r)?;
    // κ K_{l+1}(ξR) = sign · exp(ln|κ| − ξR) · K̃_{l+1}(ξR)
    let lhs = state.kappa_sign * (state.ln_kappa - k.xi * r + k_l1.ln()).exp() * k.xi;
    let mc2 = well.rest_energy();
    let ratio =
        (state.energy_kinetic - well.potential() + 2.0 * mc2) / (state.energy_kinetic + 2.0 * mc2);
    let rhs = ratio * k.zeta * j_l1;
    Ok(((lhs - rhs) / rhs).abs())
}

/// ħ²ζ²/2m written as (ħcζ)²/(2mc²); the non-relativistic kinetic energy.
pub fn nonrelativistic_kinetic(well: &Well, zeta: f64) -> f64 {
    let p = well.hbar_c() * zeta;
    p * p / (2.0 * well.rest_energy())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::mev_to_ev;

    fn shallow() -> Well {
        Well::new(10.0, 0.01, 0).unwrap()
    }

    #[test]
    fn wave_numbers_rejects_energies_outside_window() {
        let w = shallow();
        assert!(wave_numbers(&w, 0.0).is_err());
        assert!(wave_numbers(&w, 0.01).is_err());
        assert!(wave_numbers(&w, -1e-3).is_err());
        assert!(wave_numbers(&w, 0.02).is_err());
    }

    #[test]
    fn wave_numbers_at_bottom_of_window() {
        let w = shallow();
        let k = wave_numbers(&w, 1e-15).unwrap();
        assert!(k.zeta > 0.0 && k.zeta < 1e-6);
        let mc2 = w.rest_energy();
        let xi_limit = (mc2 * mc2 - (mc2 - 0.01f64).powi(2)).sqrt() / w.hbar_c();
        assert!(((k.xi - xi_limit) / xi_limit).abs() < 1e-8);
    }

    #[test]
    fn wave_numbers_match_table_values() {
        let w = shallow();
        let k = wave_numbers(&w, mev_to_ev(1.53)).unwrap();
        assert!((k.zeta_per_m() / 2.00e8 - 1.0).abs() < 0.01);
        assert!((k.xi_per_m() / 4.71e8 - 1.0).abs() < 0.01);
        let w = Well::new(10.0, 10.0, 0).unwrap();
        let k = wave_numbers(&w, mev_to_ev(2.18)).unwrap();
        assert!((k.zeta_per_m() / 2.39e8 - 1.0).abs() < 0.01);
        assert!((k.xi_per_m() / 1.62e10 - 1.0).abs() < 0.01);
    }

    #[test]
    fn residual_is_finite_at_window_edges() {
        let w = shallow();
        assert!(boundary_residual(&w, 1e-12).unwrap().is_finite());
        assert!(boundary_residual(&w, 0.01 * (1.0 - 1e-9))
            .unwrap()
            .is_finite());
    }

    #[test]
    fn residual_keeps_sign_between_the_two_shallow_states() {
        let w = shallow();
        let a = boundary_residual(&w, mev_to_ev(3.0)).unwrap();
        let b = boundary_residual(&w, mev_to_ev(4.0)).unwrap();
        assert_eq!(a.signum(), b.signum());
    }

    #[test]
    fn truncation_returns_only_the_ground_state() {
        let states = find_eigenstates(&shallow(), 1).unwrap();
        assert_eq!(states.len(), 1);
        assert!((states[0].energy_kinetic_mev() - 1.53).abs() < 0.01);
        assert_eq!(states[0].radial_n, 1);
        assert_eq!(states[0].label(), "l0n1");
    }

    #[test]
    fn zero_states_requested() {
        assert!(find_eigenstates(&shallow(), 0).unwrap().is_empty());
    }

    #[test]
    fn states_are_strictly_ordered_and_inside_window() {
        let w = Well::new(10.0, 0.1, 0).unwrap();
        let states = find_eigenstates(&w, usize::MAX).unwrap();
        assert!(states.len() > 2);
        for pair in states.windows(2) {
            assert!(pair[0].energy_kinetic < pair[1].energy_kinetic);
            assert_eq!(pair[1].radial_n, pair[0].radial_n + 1);
        }
        for s in &states {
            assert!(s.energy_kinetic > 0.0 && s.energy_kinetic < 0.1);
            assert!(s.boundary_residual < 1e-10);
            assert!(s.ln_kappa.is_finite());
        }
    }

    #[test]
    fn excited_states_carry_negative_kappa_when_j_is_negative() {
        let w = Well::new(10.0, 0.1, 0).unwrap();
        let states = find_eigenstates(&w, usize::MAX).unwrap();
        for s in &states {
            let j = bessel_j(0, s.wave_numbers.zeta * 10.0).unwrap();
            assert_eq!(s.kappa_sign, j.signum());
        }
        assert!(states.iter().any(|s| s.kappa_sign < 0.0));
    }

    #[test]
    fn general_l_states() {
        for l in 1..=3 {
            let w = Well::new(10.0, 0.1, l).unwrap();
            let states = find_eigenstates(&w, usize::MAX).unwrap();
            assert!(!states.is_empty(), "l={l}");
            for s in &states {
                assert_eq!(s.azimuthal_l, l);
                assert!(s.boundary_residual < 1e-10);
                assert!(derivative_condition_mismatch(s, &w).unwrap() < 1e-8);
            }
        }
    }

    #[test]
    fn shallow_high_l_well_can_have_no_states() {
        let w = Well::new(1.0, 1e-4, 3).unwrap();
        assert!(find_eigenstates(&w, usize::MAX).unwrap().is_empty());
    }
}
