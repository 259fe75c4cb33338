//! Global adaptive Gauss-Kronrod (7/15) quadrature.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimate meets `max(abs_tol, rel_tol * |I|)`. Semi-infinite ranges are
//! handled by mapping the last segment with `x = b + tan(theta)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            rel_tol: 1e-8,
            abs_tol: 1e-14,
            max_intervals: 20_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
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

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Segment> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let s = f(centre - dx) + f(centre + dx);
        kronrod += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    let value = kronrod * half;
    if !value.is_finite() {
        return Err(Error::NonFinite(format!("integrand on [{a}, {b}]")));
    }
    let error = ((kronrod - gauss) * half).abs();
    Ok(Segment { a, b, value, error })
}

/// Integrate `f` over `[points[0], points[last]]` with mandatory breakpoints
/// at every listed point.
pub fn integrate_with_breakpoints<F>(f: F, points: &[f64], opts: &QuadOptions) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    if points.len() < 2 {
        return Err(Error::invalid("need at least two integration points"));
    }
    if points.iter().any(|p| !p.is_finite()) || points.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::invalid(
            "integration points must be finite and non-decreasing",
        ));
    }
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0;
    for w in points.windows(2) {
        if w[1] > w[0] {
            heap.push(kronrod(&f, w[0], w[1])?);
            evaluations += 15;
        }
    }
    loop {
        let value: f64 = heap.iter().map(|s| s.value).sum();
        let error: f64 = heap.iter().map(|s| s.error).sum();
        let target = opts.abs_tol.max(opts.rel_tol * value.abs());
        if error <= target {
            return Ok(QuadResult {
                value,
                abs_error: error,
                evaluations,
            });
        }
        let worst = match heap.pop() {
            Some(s) => s,
            None => {
                return Ok(QuadResult {
                    value: 0.0,
                    abs_error: 0.0,
                    evaluations,
                })
            }
        };
        let mid = 0.5 * (worst.a + worst.b);
        if heap.len() + 2 > opts.max_intervals || mid <= worst.a || mid >= worst.b {
            return Err(Error::NonConvergence {
                what: "adaptive quadrature",
                achieved: error,
                requested: target,
            });
        }
        heap.push(kronrod(&f, worst.a, mid)?);
        heap.push(kronrod(&f, mid, worst.b)?);
        evaluations += 30;
    }
}

pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    opts: &QuadOptions,
) -> Result<QuadResult> {
    integrate_with_breakpoints(f, &[a, b], opts)
}

/// Integrate over `[0, inf)`. Interior breakpoints are honoured; the tail
/// beyond the last one is mapped onto `theta in [0, pi/2]`.
pub fn integrate_half_line<F>(f: F, breakpoints: &[f64], opts: &QuadOptions) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    let mut points = vec![0.0];
    points.extend(breakpoints.iter().copied().filter(|&p| p > 0.0));
    points.sort_by(f64::total_cmp);
    points.dedup();
    let last = *points.last().unwrap();
    // The tail is shifted onto [last, last + pi/2] so one breakpoint list
    // covers the finite segments and the mapped one.
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mapped = |x: f64| {
        if x <= last {
            f(x)
        } else {
            let theta = x - last;
            if theta >= half_pi {
                return 0.0;
            }
            let c = theta.cos();
            f(last + theta.tan()) / (c * c)
        }
    };
    points.push(last + half_pi);
    integrate_with_breakpoints(mapped, &points, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_are_exact() {
        let r = integrate(
            |x| x.powi(5) - 3.0 * x * x + 1.0,
            -1.0,
            2.0,
            &QuadOptions::default(),
        )
        .unwrap();
        assert!((r.value - (64.0 / 6.0 - 1.0 / 6.0 - 9.0 + 3.0)).abs() < 1e-13);
        assert_eq!(r.evaluations, 15);
    }

    #[test]
    fn smooth_integrals() {
        let opts = QuadOptions {
            rel_tol: 1e-12,
            ..Default::default()
        };
        let r = integrate(f64::sin, 0.0, std::f64::consts::PI, &opts).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
        let r = integrate(|x| x.sqrt(), 0.0, 1.0, &opts).unwrap();
        assert!((r.value - 2.0 / 3.0).abs() < 1e-11);
    }

    #[test]
    fn half_line_lorentzian_and_gaussian() {
        let opts = QuadOptions {
            rel_tol: 1e-11,
            ..Default::default()
        };
        let r = integrate_half_line(|x| 1.0 / (1.0 + x * x), &[], &opts).unwrap();
        assert!((r.value - std::f64::consts::FRAC_PI_2).abs() < 1e-10);
        let r = integrate_half_line(|x| (-x * x).exp(), &[1.0, 3.0], &opts).unwrap();
        assert!((r.value - 0.5 * std::f64::consts::PI.sqrt()).abs() < 1e-10);
        // (x^2+1)^-2 over the half line is pi/4
        let r = integrate_half_line(|x| (x * x + 1.0).powi(-2), &[], &opts).unwrap();
        assert!((r.value - std::f64::consts::FRAC_PI_4).abs() < 1e-10);
    }

    #[test]
    fn narrow_peak_needs_breakpoint() {
        // Lorentzian of width 1e-6 centred at 10: the breakpoint lets the
        // adaptive scheme see the peak.
        let w = 1e-6;
        let f = |x: f64| w / ((x - 10.0).powi(2) + w * w);
        let r = integrate_half_line(f, &[10.0], &QuadOptions::default()).unwrap();
        let exact = std::f64::consts::FRAC_PI_2 + (10.0 / w).atan();
        assert!((r.value - exact).abs() / exact < 1e-8);
    }

    #[test]
    fn reports_non_convergence() {
        let opts = QuadOptions {
            max_intervals: 8,
            ..Default::default()
        };
        let err = integrate(|x| (1.0 / x).sin(), 1e-6, 1.0, &opts).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }

    #[test]
    fn rejects_bad_points() {
        assert!(integrate(|x| x, 1.0, 0.0, &QuadOptions::default()).is_err());
        assert!(integrate(|x| x, 0.0, f64::INFINITY, &QuadOptions::default()).is_err());
        assert!(integrate(|_| f64::NAN, 0.0, 1.0, &QuadOptions::default()).is_err());
    }
}
