//! Extended-precision reference values for the Bessel kernels.
//!
//! Shares no code with the production kernels: J and I come from their
//! defining power series evaluated with enough working bits to absorb the
//! alternating-series cancellation, and e^x K_n(x) comes from trapezoidal
//! quadrature of ∫₀^∞ exp(−x(cosh t − 1)) cosh(n t) dt.

#![allow(dead_code)]

use dashu_float::ops::Abs;
use dashu_float::round::mode::HalfAway;
use dashu_float::FBig;

type F = FBig<HalfAway, 2>;

fn big(x: f64, bits: usize) -> F {
    F::try_from(x)
        .expect("finite f64")
        .with_precision(bits)
        .value()
}

fn int(k: u64, bits: usize) -> F {
    F::from(k).with_precision(bits).value()
}

fn to_f64(x: &F) -> f64 {
    x.to_f64().value()
}

/// (x/2)^n / n! in working precision.
fn leading_term(x: &F, n: u32, bits: usize) -> F {
    let half = x / int(2, bits);
    let mut term = int(1, bits);
    for k in 1..=n {
        term = term * &half / int(k as u64, bits);
    }
    term
}

fn series(n: u32, x: f64, alternating: bool) -> f64 {
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    // Largest term is about e^x; carry that many extra bits for J.
    let bits = if alternating {
        160 + (1.45 * x) as usize
    } else {
        192
    };
    let xb = big(x, bits);
    let mut q = &xb * &xb / int(4, bits);
    if alternating {
        q = -q;
    }
    let mut term = leading_term(&xb, n, bits);
    let mut sum = term.clone();
    let tiny = F::try_from(2f64.powi(-230)).unwrap();
    let mut k: u64 = 0;
    loop {
        k += 1;
        term = term * &q / int(k * (k + n as u64), bits);
        sum = &sum + &term;
        if (k as f64) > x && term.clone().abs() <= sum.clone().abs() * &tiny {
            break;
        }
    }
    to_f64(&sum)
}

/// J_n(x) for x ≥ 0.
pub fn bessel_j(n: u32, x: f64) -> f64 {
    series(n, x, true)
}

/// I_n(x) for x ≥ 0.
pub fn bessel_i(n: u32, x: f64) -> f64 {
    series(n, x, false)
}

/// e^x K_n(x) for every order in `0..=max_order`, x > 0.
pub fn bessel_k_scaled_orders(max_order: u32, x: f64) -> Vec<f64> {
    assert!(x > 0.0);
    let bits = 224;
    let h = (0.45 / x.sqrt()).min(0.05);
    // integrand envelope exp(−x(cosh t − 1) + n t) must fall below e^-100
    let n = max_order as f64;
    let mut t_max = h;
    while x * (t_max.cosh() - 1.0) - n * t_max < 100.0 {
        t_max += h;
    }
    let steps = (t_max / h).ceil() as u64;

    let xb = big(x, bits);
    let one = int(1, bits);
    let two = int(2, bits);
    let step = big(h, bits).exp();
    let mut e_t = one.clone();
    let mut sums = vec![F::ZERO.with_precision(bits).value(); max_order as usize + 1];
    for k in 0..=steps {
        let inv = &one / &e_t;
        let cosh_m1 = (&e_t + &inv) / &two - &one;
        let weight = if k == 0 {
            one.clone() / &two
        } else {
            one.clone()
        };
        let base = (-(&xb * &cosh_m1)).exp() * weight;
        let mut e_nt = one.clone();
        let mut e_mnt = one.clone();
        for (order, sum) in sums.iter_mut().enumerate() {
            if order > 0 {
                e_nt *= &e_t;
                e_mnt *= &inv;
            }
            let cosh_nt = (&e_nt + &e_mnt) / &two;
            *sum = &*sum + &base * cosh_nt;
        }
        e_t *= &step;
    }
    let hb = big(h, bits);
    sums.iter().map(|s| to_f64(&(s * &hb))).collect()
}

pub fn bessel_k_scaled(n: u32, x: f64) -> f64 {
    bessel_k_scaled_orders(n, x)[n as usize]
}

/// Bisection on the oracle J_n for a zero inside `[lo, hi]`.
pub fn bessel_j_zero(n: u32, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = bessel_j(n, lo);
    assert!(f_lo * bessel_j(n, hi) < 0.0, "no sign change");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = bessel_j(n, mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `count` log-spaced points on `[lo, hi]`.
pub fn log_points(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| {
            (a + (b - a) * i as f64 / (count - 1) as f64)
                .exp()
                .clamp(lo, hi)
        })
        .collect()
}

pub fn rel_err(value: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        value.abs()
    } else {
        ((value - reference) / reference).abs()
    }
}
