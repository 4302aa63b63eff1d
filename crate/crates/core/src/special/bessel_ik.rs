use std::f64::consts::PI;

use super::{asymptotic, EULER_GAMMA};
use crate::error::{Error, Result};

/// Largest argument accepted by [`bessel_i`]; I₀(700) ≈ 1.5e302.
pub const BESSEL_I_MAX_ARG: f64 = 700.0;

/// Modified Bessel function of the first kind I_n(x), 0 ≤ x ≤ 700.
pub fn bessel_i(order: u32, x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain {
            function: "bessel_i",
            x,
            reason: "argument must be finite and non-negative",
        });
    }
    if x > BESSEL_I_MAX_ARG {
        return Err(Error::Domain {
            function: "bessel_i",
            x,
            reason: "result overflows double precision",
        });
    }
    if x == 0.0 {
        return Ok(if order == 0 { 1.0 } else { 0.0 });
    }
    if x > 30.0 && asymptotic::usable(order, x) {
        let terms = asymptotic::terms(order, x);
        let mut sum = 0.0;
        for (k, t) in terms.iter().enumerate().rev() {
            sum += if k % 2 == 0 { *t } else { -*t };
        }
        // split e^x so that e^{700}/√x does not overflow on the way
        let half = (0.5 * x).exp();
        return Ok(half * (sum / (2.0 * PI * x).sqrt()) * half);
    }
    Ok(i_series(order, x))
}

fn i_series(order: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut lead = 1.0;
    for k in 1..=order {
        lead *= half / k as f64;
        if lead == 0.0 {
            return 0.0;
        }
    }
    let q = half * half;
    let n = order as f64;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * (k + n));
        sum += term;
        if term < 1e-17 * sum || k > 2000.0 {
            break;
        }
        k += 1.0;
    }
    lead * sum
}

/// Exponentially scaled modified Bessel function of the second kind,
/// e^x K_n(x), for x > 0.
pub fn bessel_k_scaled(order: u32, x: f64) -> Result<f64> {
    Ok(k_scaled_up_to(order, x)?.0)
}

/// `(e^x K_n(x), e^x K_{n+1}(x))`.
pub fn bessel_k_scaled_pair(order: u32, x: f64) -> Result<(f64, f64)> {
    k_scaled_up_to(order, x)
}

fn k_scaled_up_to(order: u32, x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain {
            function: "bessel_k_scaled",
            x,
            reason: "K_n diverges at the origin; argument must be positive and finite",
        });
    }
    let (mut k0, mut k1) = if x <= 2.0 {
        k01_series(x)
    } else {
        k01_steed(x)
    };
    // upward recurrence is stable for K
    for n in 1..=order {
        let k2 = k0 + 2.0 * n as f64 / x * k1;
        k0 = k1;
        k1 = k2;
    }
    if !k1.is_finite() {
        return Err(Error::Domain {
            function: "bessel_k_scaled",
            x,
            reason: "result overflows double precision",
        });
    }
    Ok((k0, k1))
}

/// Small-argument series for e^x K₀ and e^x K₁.
fn k01_series(x: f64) -> (f64, f64) {
    let log_half = (0.5 * x).ln();
    let q = 0.25 * x * x;

    let mut i0 = 1.0;
    let mut i1 = 1.0;
    let mut t0 = 1.0; // q^k / (k!)²
    let mut t1 = 1.0; // q^k / (k!(k+1)!)
    let mut harmonic = 0.0; // H_k
    let mut s0 = 0.0; // Σ t0 H_k
    let mut s1 = 2.0 * (1.0 - EULER_GAMMA) - 1.0; // k = 0: ψ(1) + ψ(2)
    let mut k = 1.0;
    loop {
        t0 *= q / (k * k);
        t1 *= q / (k * (k + 1.0));
        let h_next = harmonic + 1.0 / k;
        i0 += t0;
        i1 += t1;
        s0 += t0 * h_next;
        // ψ(k+1) + ψ(k+2) = H_k + H_{k+1} − 2γ
        s1 += t1 * (h_next + h_next + 1.0 / (k + 1.0) - 2.0 * EULER_GAMMA);
        harmonic = h_next;
        if t0 < 1e-18 * i0 && k > 2.0 {
            break;
        }
        k += 1.0;
    }
    i1 *= 0.5 * x;

    let k0 = -(log_half + EULER_GAMMA) * i0 + s0;
    let k1 = 1.0 / x + log_half * i1 - 0.25 * x * s1;
    let scale = x.exp();
    (k0 * scale, k1 * scale)
}

/// Steed's evaluation of Temme's second continued fraction (order zero),
/// returning e^x K₀ and e^x K₁ directly.
fn k01_steed(x: f64) -> (f64, f64) {
    const EPS: f64 = 1e-17;
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..100_000u32 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    h *= a1;
    let k0 = (PI / (2.0 * x)).sqrt() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}
