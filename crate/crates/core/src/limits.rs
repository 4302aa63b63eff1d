//! Approach of the finite well to the hard-wall (infinite) limit.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{outside_fraction, skin_depth, DiracField, Region};
use crate::root::{bisect, Bracket};
use crate::solver::{find_eigenstates, EigenState};
use crate::special::bessel_j;
use crate::units::Well;

/// n-th positive zero of J₀ (n ≥ 1), located by bisection around McMahon's
/// estimate (n − 1/4)π.
pub fn bessel_j0_zero(n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::Invalid("zero index starts at 1".into()));
    }
    let guess = (n as f64 - 0.25) * PI;
    let (lo, hi) = (guess - 1.0, guess + 1.0);
    let f = |x: f64| bessel_j(0, x);
    let bracket = Bracket {
        lo,
        hi,
        f_lo: f(lo)?,
        f_hi: f(hi)?,
    };
    bisect(bracket, 0.0, 200, f)
}

/// Hard-wall wavenumber j_{0,n}/R in nm⁻¹.
pub fn infinite_well_zeta(well: &Well, n: u32) -> Result<f64> {
    if well.l() != 0 {
        return Err(Error::Invalid(
            "hard-wall comparison is defined for l = 0 only".into(),
        ));
    }
    Ok(bessel_j0_zero(n)? / well.radius())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitReport {
    pub radius_nm: f64,
    /// eV, ascending.
    pub potential_grid: Vec<f64>,
    /// Ground-state ζ per potential, nm⁻¹.
    pub zeta_ground: Vec<f64>,
    /// j_{0,1}/R, nm⁻¹.
    pub zeta_infinite: f64,
    /// nm.
    pub skin_depths: Vec<f64>,
    pub outside_fractions: Vec<f64>,
    pub ground_states: Vec<EigenState>,
}

impl LimitReport {
    /// 1 − ζ(U)/ζ^∞ for the deepest well of the grid.
    pub fn deepest_relative_gap(&self) -> Option<f64> {
        self.zeta_ground
            .last()
            .map(|z| 1.0 - z / self.zeta_infinite)
    }

    pub fn zeta_strictly_increasing(&self) -> bool {
        self.zeta_ground.windows(2).all(|w| w[0] < w[1])
    }

    pub fn skin_depth_strictly_decreasing(&self) -> bool {
        self.skin_depths.windows(2).all(|w| w[0] > w[1])
    }

    pub fn outside_fraction_strictly_decreasing(&self) -> bool {
        self.outside_fractions.windows(2).all(|w| w[0] > w[1])
    }

    pub fn below_infinite_limit(&self) -> bool {
        self.zeta_ground.iter().all(|&z| z < self.zeta_infinite)
    }
}

/// Ground-state (l = 0) summary across a strictly ascending potential grid.
/// Each potential is solved on its own thread.
pub fn convergence_report(radius_nm: f64, potentials: &[f64]) -> Result<LimitReport> {
    if potentials.is_empty() {
        return Err(Error::Invalid("at least one potential is required".into()));
    }
    if potentials.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Invalid(
            "potentials must be sorted in strictly ascending order".into(),
        ));
    }
    let wells = potentials
        .iter()
        .map(|&u| Well::new(radius_nm, u, 0))
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<Result<(EigenState, f64, f64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = wells
            .iter()
            .map(|well| scope.spawn(move || ground_row(well)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("solver thread panicked"))
            .collect()
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(LimitReport {
        radius_nm,
        potential_grid: potentials.to_vec(),
        zeta_ground: rows.iter().map(|r| r.0.wave_numbers.zeta).collect(),
        zeta_infinite: infinite_well_zeta(&wells[0], 1)?,
        skin_depths: rows.iter().map(|r| r.1).collect(),
        outside_fractions: rows.iter().map(|r| r.2).collect(),
        ground_states: rows.iter().map(|r| r.0).collect(),
    })
}

fn ground_row(well: &Well) -> Result<(EigenState, f64, f64)> {
    let state = find_eigenstates(well, 1)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Invalid(format!("no bound state for U = {} eV", well.potential())))?;
    Ok((state, skin_depth(&state), outside_fraction(well, &state)?))
}

/// Largest |ψ₁(ρ)/ψ₁(0) − J₀(ζ^∞ρ)| over `samples` points of [0, R]; both
/// profiles peak at 1 on the axis, so this is relative to the peak.
pub fn hard_wall_profile_deviation(well: &Well, state: &EigenState, samples: usize) -> Result<f64> {
    let zeta_inf = infinite_well_zeta(well, 1)?;
    let field = DiracField::new(well, state)?;
    let (axis, _) = field.radial(0.0, Region::Inside)?;
    let r = well.radius();
    let mut worst = 0.0f64;
    for i in 0..samples.max(2) {
        let rho = r * i as f64 / (samples.max(2) - 1) as f64;
        let (a, _) = field.radial(rho, Region::Inside)?;
        let hard = bessel_j(0, zeta_inf * rho)?;
        worst = worst.max((a / axis - hard).abs());
    }
    Ok(worst)
}
