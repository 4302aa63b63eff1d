//! Sign-change bracketing and bisection.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

/// Walks `grid` in order and yields every adjacent pair where `f` changes
/// sign (or hits zero exactly at the left point). Stops after `limit` brackets.
pub fn scan_sign_changes<F>(grid: &[f64], limit: usize, mut f: F) -> Result<Vec<Bracket>>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut out = Vec::new();
    let Some((&first, rest)) = grid.split_first() else {
        return Ok(out);
    };
    let mut x_prev = first;
    let mut f_prev = f(first)?;
    for &x in rest {
        if out.len() >= limit {
            break;
        }
        let fx = f(x)?;
        if !fx.is_finite() || !f_prev.is_finite() {
            return Err(Error::Invalid(format!(
                "non-finite residual while scanning near {x}"
            )));
        }
        if f_prev == 0.0 || ((f_prev < 0.0) != (fx < 0.0) && fx != 0.0) {
            out.push(Bracket {
                lo: x_prev,
                hi: x,
                f_lo: f_prev,
                f_hi: fx,
            });
        }
        x_prev = x;
        f_prev = fx;
    }
    Ok(out)
}

/// Bisects a sign-change bracket until its width falls below
/// `rel_tol · |x|` or no double lies strictly inside. Returns the endpoint
/// with the smaller residual.
pub fn bisect<F>(bracket: Bracket, rel_tol: f64, max_iter: usize, mut f: F) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let Bracket {
        mut lo,
        mut hi,
        mut f_lo,
        mut f_hi,
    } = bracket;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if (f_lo < 0.0) == (f_hi < 0.0) {
        return Err(Error::Invalid(format!(
            "bracket [{lo}, {hi}] does not enclose a sign change"
        )));
    }
    for _ in 0..max_iter {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi || hi - lo <= rel_tol * mid.abs() {
            return Ok(if f_lo.abs() <= f_hi.abs() { lo } else { hi });
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    Err(Error::NoConvergence {
        lo_ev: lo,
        hi_ev: hi,
        iterations: max_iter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_all_sign_changes_of_sine() {
        let grid: Vec<f64> = (0..=1000).map(|i| 0.1 + i as f64 * 0.01).collect();
        let brackets = scan_sign_changes(&grid, usize::MAX, |x| Ok(x.sin())).unwrap();
        assert_eq!(brackets.len(), 3);
        let roots: Vec<f64> = brackets
            .into_iter()
            .map(|b| bisect(b, 1e-15, 200, |x| Ok(x.sin())).unwrap())
            .collect();
        for (k, r) in roots.iter().enumerate() {
            let exact = (k + 1) as f64 * std::f64::consts::PI;
            assert!((r - exact).abs() < 1e-14, "{r} vs {exact}");
        }
    }

    #[test]
    fn limit_truncates_scan() {
        let grid: Vec<f64> = (0..=1000).map(|i| 0.1 + i as f64 * 0.01).collect();
        let brackets = scan_sign_changes(&grid, 1, |x| Ok(x.sin())).unwrap();
        assert_eq!(brackets.len(), 1);
    }

    #[test]
    fn rejects_bracket_without_sign_change() {
        let b = Bracket {
            lo: 0.0,
            hi: 1.0,
            f_lo: 1.0,
            f_hi: 2.0,
        };
        assert!(bisect(b, 1e-12, 100, |x| Ok(x + 1.0)).is_err());
    }

    #[test]
    fn reports_non_convergence() {
        let b = Bracket {
            lo: 0.0,
            hi: 4.0,
            f_lo: -1.0,
            f_hi: 1.0,
        };
        let err = bisect(b, 0.0, 3, |x| Ok(x - 1.234567)).unwrap_err();
        assert!(matches!(err, Error::NoConvergence { iterations: 3, .. }));
    }
}
