// Hankel-type large-argument expansions shared by J and I.

/// Coefficients a_k(n) = Π_{j=1..k} (4n² − (2j−1)²) / (k! 8^k) of the
/// large-argument expansions, truncated before the terms (at argument `x`)
/// stop decreasing or drop below double-precision resolution.
pub(crate) fn terms(order: u32, x: f64) -> Vec<f64> {
    let mu = 4.0 * (order as f64) * (order as f64);
    let mut out = Vec::with_capacity(32);
    let mut term = 1.0;
    out.push(term);
    let mut k = 1.0;
    loop {
        let odd = 2.0 * k - 1.0;
        let next = term * (mu - odd * odd) / (k * 8.0 * x);
        if next == 0.0 || next.abs() < 1e-18 || next.abs() >= term.abs() && k > 1.0 {
            break;
        }
        out.push(next);
        term = next;
        k += 1.0;
        if k > 200.0 {
            break;
        }
    }
    out
}

/// True when the expansion of the given order converges to full precision.
pub(crate) fn usable(order: u32, x: f64) -> bool {
    let n = order as f64;
    x >= 25.0 && x >= 0.5 * n * n
}
