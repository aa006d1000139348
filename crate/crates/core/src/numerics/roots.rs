use crate::{Error, Result};

/// Final bracket of a bisection run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub iterations: u32,
}

impl Bracket {
    pub fn root(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        (self.hi - self.lo).abs()
    }

    pub fn contains(&self, x: f64) -> bool {
        let (a, b) = if self.lo <= self.hi {
            (self.lo, self.hi)
        } else {
            (self.hi, self.lo)
        };
        a <= x && x <= b
    }
}

/// Bisects `[lo, hi]` until the bracket is at most `tol` wide.
///
/// The sequence of brackets depends only on `f`, `lo` and `hi`, so a smaller
/// `tol` continues the same sequence and its result stays inside any bracket
/// returned for a larger one.
pub fn bisect<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<Bracket>
where
    F: Fn(f64) -> f64,
{
    if !(tol > 0.0) {
        return Err(Error::domain("bisect", format!("tol must be > 0, got {tol}")));
    }
    if !(lo.is_finite() && hi.is_finite()) || lo == hi {
        return Err(Error::domain("bisect", format!("degenerate bracket [{lo}, {hi}]")));
    }
    let (mut a, mut b) = if lo < hi { (lo, hi) } else { (hi, lo) };
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(Bracket {
            lo: a,
            hi: a,
            iterations: 0,
        });
    }
    if fb == 0.0 {
        return Ok(Bracket {
            lo: b,
            hi: b,
            iterations: 0,
        });
    }
    if !(fa.is_finite() && fb.is_finite()) || fa.signum() == fb.signum() {
        return Err(Error::Bracket {
            lo: a,
            hi: b,
            f_lo: fa,
            f_hi: fb,
        });
    }

    let mut iterations = 0;
    while b - a > tol {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        iterations += 1;
        if fm == 0.0 {
            return Ok(Bracket {
                lo: m,
                hi: m,
                iterations,
            });
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(Bracket {
        lo: a,
        hi: b,
        iterations,
    })
}

/// Root of `f` in `[lo, hi]` to within `tol`; `f(lo)` and `f(hi)` must differ in sign.
pub fn find_root<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    bisect(f, lo, hi, tol).map(|b| b.root())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn cosine_root() {
        let x = find_root(f64::cos, 1.0, 2.0, 1e-13).unwrap();
        assert!((x - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn no_sign_change() {
        let err = find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-10).unwrap_err();
        assert!(matches!(err, Error::Bracket { .. }));
    }

    #[test]
    fn reversed_bracket_and_exact_endpoint() {
        let x = find_root(|x| x - 0.25, 1.0, 0.0, 1e-12).unwrap();
        assert!((x - 0.25).abs() < 1e-12);
        assert_eq!(find_root(|x| x, 0.0, 1.0, 1e-12).unwrap(), 0.0);
    }

    #[test]
    fn deterministic() {
        let a = bisect(|x| x.powi(3) - 2.0, 0.0, 2.0, 1e-9).unwrap();
        let b = bisect(|x| x.powi(3) - 2.0, 0.0, 2.0, 1e-9).unwrap();
        assert_eq!(a, b);
        assert!(a.width() <= 1e-9);
    }
}
