#![allow(dead_code)]

use dirac_well::special::{bessel_j, bessel_k_scaled};
use dirac_well::PhysicalConstants;

/// Schrödinger bound-state energies (eV) of the same well, from the
/// log-derivative match ζ J_{l+1}(ζR)/J_l(ζR) = ξ K_{l+1}(ξR)/K_l(ξR) with
/// ζ = √(2mE)/ħ and ξ = √(2m(U − E))/ħ. Written cross-multiplied so the
/// poles of either ratio do not produce spurious sign changes.
pub fn schrodinger_levels(radius: f64, potential: f64, l: u32, scan: usize) -> Vec<f64> {
    let c = PhysicalConstants::CODATA_2018;
    let two_m = 2.0 * c.electron_rest_energy;
    let f = |e: f64| {
        let zeta = (two_m * e).sqrt() / c.hbar_c;
        let xi = (two_m * (potential - e)).sqrt() / c.hbar_c;
        zeta * bessel_j(l + 1, zeta * radius).unwrap() * bessel_k_scaled(l, xi * radius).unwrap()
            - xi * bessel_k_scaled(l + 1, xi * radius).unwrap()
                * bessel_j(l, zeta * radius).unwrap()
    };
    let lo = potential * 1e-12;
    let hi = potential * (1.0 - 1e-12);
    let mut levels = Vec::new();
    let mut prev_e = lo;
    let mut prev_f = f(lo);
    for i in 1..=scan {
        let t = i as f64 / scan as f64;
        let e = lo + (hi - lo) * t * t;
        let fe = f(e);
        if prev_f == 0.0 || prev_f.signum() != fe.signum() {
            let (mut a, mut b, mut fa) = (prev_e, e, prev_f);
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if m <= a || m >= b {
                    break;
                }
                let fm = f(m);
                if fm.signum() == fa.signum() {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            levels.push(0.5 * (a + b));
        }
        prev_e = e;
        prev_f = fe;
    }
    levels
}
