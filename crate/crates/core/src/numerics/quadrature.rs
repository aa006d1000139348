use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Kronrod abscissae on [-1, 1], positive half, descending. Even indices are
/// Kronrod-only points; odd indices are shared with the 7-point Gauss rule.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    /// Sum of per-interval |K15 − G7| estimates.
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuadratureError {
    #[error("quadrature did not converge within {subdivisions} subdivisions: best {best:?}, target {target:e}")]
    NoConvergence {
        best: QuadratureResult,
        target: f64,
        subdivisions: usize,
    },
    #[error("integrand is not finite at x = {x:e}")]
    NonFinite { x: f64 },
    #[error("invalid quadrature input: {0}")]
    InvalidInput(String),
}

/// Adaptive 7/15-point Gauss–Kronrod integrator with global bisection.
///
/// Intervals are kept in a max-heap by error estimate; the worst one is split
/// until the summed estimate meets `max(abs_tol, rel_tol·|I|)` or the
/// subdivision budget runs out. Per-interval estimates are the raw Gauss/Kronrod
/// difference, floored at 50ε·∫|f| to absorb rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integrator {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for Integrator {
    fn default() -> Self {
        Integrator::new(1e-10)
    }
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

impl Integrator {
    /// Absolute and relative tolerance both set to `tol`.
    pub fn new(tol: f64) -> Self {
        Integrator {
            abs_tol: tol,
            rel_tol: tol,
            max_subdivisions: 2000,
        }
    }

    /// Purely relative tolerance, for integrals in physical units far from 1.
    pub fn relative(rel_tol: f64) -> Self {
        Integrator {
            abs_tol: 0.0,
            ..Integrator::new(rel_tol)
        }
    }

    pub fn with_abs_tol(self, abs_tol: f64) -> Self {
        Integrator { abs_tol, ..self }
    }

    pub fn with_max_subdivisions(self, max_subdivisions: usize) -> Self {
        Integrator {
            max_subdivisions,
            ..self
        }
    }

    fn validate(&self) -> Result<(), QuadratureError> {
        let ok = self.abs_tol >= 0.0
            && self.rel_tol >= 0.0
            && (self.abs_tol > 0.0 || self.rel_tol > 0.0)
            && self.abs_tol.is_finite()
            && self.rel_tol.is_finite();
        if ok {
            Ok(())
        } else {
            Err(QuadratureError::InvalidInput(format!(
                "tolerances must be non-negative and not both zero (abs {}, rel {})",
                self.abs_tol, self.rel_tol
            )))
        }
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }

    /// ∫ₐᵇ f(x) dx for finite a < b.
    pub fn integrate<F>(&self, f: F, a: f64, b: f64) -> Result<QuadratureResult, QuadratureError>
    where
        F: Fn(f64) -> f64,
    {
        self.validate()?;
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(QuadratureError::InvalidInput(format!(
                "need finite a < b, got [{a}, {b}]"
            )));
        }

        let mut evaluations = 0usize;
        let first = kronrod15(&f, a, b, &mut evaluations)?;
        let mut total = first.value;
        let mut total_err = first.error;
        let mut heap = BinaryHeap::from([first]);
        let mut subdivisions = 0usize;

        while total_err > self.target(total) {
            if subdivisions >= self.max_subdivisions {
                return Err(QuadratureError::NoConvergence {
                    best: QuadratureResult {
                        value: total,
                        error_estimate: total_err,
                        evaluations,
                    },
                    target: self.target(total),
                    subdivisions,
                });
            }
            let worst = heap.pop().expect("heap holds at least one segment");
            let mid = 0.5 * (worst.a + worst.b);
            if mid <= worst.a || mid >= worst.b {
                // interval at floating-point resolution; its error cannot shrink
                return Err(QuadratureError::NoConvergence {
                    best: QuadratureResult {
                        value: total,
                        error_estimate: total_err,
                        evaluations,
                    },
                    target: self.target(total),
                    subdivisions,
                });
            }
            let left = kronrod15(&f, worst.a, mid, &mut evaluations)?;
            let right = kronrod15(&f, mid, worst.b, &mut evaluations)?;
            total += left.value + right.value - worst.value;
            total_err += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
            subdivisions += 1;

            // running sums drift; refresh them now and then
            if subdivisions.is_multiple_of(64) {
                total = heap.iter().map(|s| s.value).sum();
                total_err = heap.iter().map(|s| s.error).sum();
            }
        }

        let value: f64 = heap.iter().map(|s| s.value).sum();
        let error_estimate: f64 = heap.iter().map(|s| s.error).sum();
        Ok(QuadratureResult {
            value,
            error_estimate,
            evaluations,
        })
    }

    /// ∫ f over ℝ via y = t/(1 − t²), t ∈ (−1, 1).
    pub fn integrate_real_line<F>(&self, f: F) -> Result<QuadratureResult, QuadratureError>
    where
        F: Fn(f64) -> f64,
    {
        self.integrate(
            |t| {
                let s = 1.0 - t * t;
                let y = t / s;
                if !y.is_finite() {
                    return 0.0;
                }
                let w = f(y) * (1.0 + t * t) / (s * s);
                if w.is_finite() {
                    w
                } else {
                    0.0
                }
            },
            -1.0,
            1.0,
        )
    }

    /// ∫ₐ^∞ f via x = a + t/(1 − t), t ∈ [0, 1).
    pub fn integrate_semi_infinite<F>(&self, f: F, a: f64) -> Result<QuadratureResult, QuadratureError>
    where
        F: Fn(f64) -> f64,
    {
        self.integrate(
            |t| {
                let s = 1.0 - t;
                let x = a + t / s;
                if !x.is_finite() {
                    return 0.0;
                }
                let w = f(x) / (s * s);
                if w.is_finite() {
                    w
                } else {
                    0.0
                }
            },
            0.0,
            1.0,
        )
    }
}

fn kronrod15<F>(f: &F, a: f64, b: f64, evaluations: &mut usize) -> Result<Segment, QuadratureError>
where
    F: Fn(f64) -> f64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| -> Result<f64, QuadratureError> {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(QuadratureError::NonFinite { x })
        }
    };

    let fc = eval(center)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut abs_sum = WGK[7] * fc.abs();
    for (j, (&x, &w)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let dx = half * x;
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        kronrod += w * (f1 + f2);
        abs_sum += w * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    *evaluations += 15;

    let value = kronrod * half;
    let roundoff = 50.0 * f64::EPSILON * abs_sum * half.abs();
    let error = ((kronrod - gauss) * half).abs().max(roundoff);
    Ok(Segment { a, b, value, error })
}

/// ∫ₐᵇ f with `|error| ≤ max(tol, tol·|I|)`.
pub fn integrate_finite<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult, QuadratureError>
where
    F: Fn(f64) -> f64,
{
    check_tol(tol)?;
    Integrator::new(tol).integrate(f, a, b)
}

/// ∫ f over the whole real line; f must decay at ±∞.
pub fn integrate_real_line<F>(f: F, tol: f64) -> Result<QuadratureResult, QuadratureError>
where
    F: Fn(f64) -> f64,
{
    check_tol(tol)?;
    Integrator::new(tol).integrate_real_line(f)
}

/// ∫ₐ^∞ f.
pub fn integrate_semi_infinite<F>(f: F, a: f64, tol: f64) -> Result<QuadratureResult, QuadratureError>
where
    F: Fn(f64) -> f64,
{
    check_tol(tol)?;
    Integrator::new(tol).integrate_semi_infinite(f, a)
}

fn check_tol(tol: f64) -> Result<(), QuadratureError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(QuadratureError::InvalidInput(format!("tol must be > 0, got {tol}")))
    }
}
