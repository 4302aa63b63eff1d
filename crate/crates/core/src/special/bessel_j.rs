use std::f64::consts::{FRAC_1_SQRT_2, PI};

use super::asymptotic;
use crate::error::{Error, Result};

/// Bessel function of the first kind J_n(x), x ≥ 0.
///
/// Power series near the origin, Miller's backward recurrence in the
/// transition region and Hankel's expansion for large arguments.
pub fn bessel_j(order: u32, x: f64) -> Result<f64> {
    check(x)?;
    Ok(eval(order, x))
}

/// `(J_n(x), J_{n+1}(x))`, sharing work where the method allows it.
pub fn bessel_j_pair(order: u32, x: f64) -> Result<(f64, f64)> {
    check(x)?;
    let direct = |n: u32| use_series(n, x) || asymptotic::usable(n, x);
    if direct(order) || direct(order + 1) {
        return Ok((eval(order, x), eval(order + 1, x)));
    }
    let (a, b) = miller(order, x);
    Ok((a, b))
}

fn check(x: f64) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain {
            function: "bessel_j",
            x,
            reason: "argument must be finite and non-negative",
        });
    }
    Ok(())
}

fn eval(order: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if order == 0 { 1.0 } else { 0.0 };
    }
    if use_series(order, x) {
        series(order, x)
    } else if asymptotic::usable(order, x) {
        hankel(order, x)
    } else {
        miller(order, x).0
    }
}

// Cancellation in the alternating series is bounded by e^{x²/(4(n+1))}.
fn use_series(order: u32, x: f64) -> bool {
    x * x <= 4.0 * (order as f64 + 1.0)
}

fn series(order: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut lead = 1.0;
    for k in 1..=order {
        lead *= half / k as f64;
        if lead == 0.0 {
            return 0.0;
        }
    }
    let q = -half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    let n = order as f64;
    for k in 1..200 {
        let k = k as f64;
        term *= q / (k * (k + n));
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn hankel(order: u32, x: f64) -> f64 {
    let terms = asymptotic::terms(order, x);
    let mut p = 0.0;
    let mut q = 0.0;
    // accumulate smallest terms first
    for (k, t) in terms.iter().enumerate().rev() {
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * t;
        } else {
            q += sign * t;
        }
    }
    // χ = x − (2n+1)π/4; expand so that x itself is never reduced twice.
    let (c, s) = match order % 4 {
        0 => (FRAC_1_SQRT_2, FRAC_1_SQRT_2),
        1 => (-FRAC_1_SQRT_2, FRAC_1_SQRT_2),
        2 => (-FRAC_1_SQRT_2, -FRAC_1_SQRT_2),
        _ => (FRAC_1_SQRT_2, -FRAC_1_SQRT_2),
    };
    let (sin_x, cos_x) = x.sin_cos();
    let cos_chi = cos_x * c + sin_x * s;
    let sin_chi = sin_x * c - cos_x * s;
    (2.0 / (PI * x)).sqrt() * (p * cos_chi - q * sin_chi)
}

/// Backward recurrence normalised with J₀ + 2ΣJ_{2k} = 1.
/// Returns J_n and J_{n+1}.
fn miller(order: u32, x: f64) -> (f64, f64) {
    const BIG: f64 = 1e250;
    let top = (order as f64 + 1.0).max(x);
    let mut start = (top + 30.0 + (40.0 * top).sqrt()) as u32;
    start += start % 2;

    let mut next = 0.0; // J_{k+1}
    let mut cur = 1e-300; // J_k
    let mut norm = 0.0;
    let mut out_n = 0.0;
    let mut out_n1 = 0.0;
    let two_over_x = 2.0 / x;
    for k in (1..=start).rev() {
        let prev = k as f64 * two_over_x * cur - next;
        next = cur;
        cur = prev;
        // cur is now J_{k-1}
        if k - 1 == order {
            out_n = cur;
            out_n1 = next;
        }
        if (k - 1) % 2 == 0 && k - 1 > 0 {
            norm += 2.0 * cur;
        }
        if cur.abs() > BIG {
            cur /= BIG;
            next /= BIG;
            norm /= BIG;
            out_n /= BIG;
            out_n1 /= BIG;
        }
    }
    norm += cur;
    (out_n / norm, out_n1 / norm)
}
