use std::f64::consts::PI;

use crate::detection::{BinaryHypothesis, Fidelity};

const SCAN_POINTS: usize = 256;
const ANGLE_TOL: f64 = 1e-12;

/// Minimum error over projective measurements on the plane spanned by two
/// pure states with `|<psi0|psi1>|^2 = overlap_sq`.
///
/// The states are `(1, 0)` and `(cos a, sin a)` with `cos^2 a = overlap_sq`;
/// measuring along `(cos phi, sin phi)` and its complement gives
/// `Pe(phi) = p0 sin^2 phi + p1 cos^2(phi - a)`, minimised by a grid scan
/// followed by golden-section refinement.
pub fn optimal_qubit_discrimination(overlap_sq: Fidelity, prior: &BinaryHypothesis) -> f64 {
    let a = overlap_sq.value().sqrt().acos();
    let (p0, p1) = (prior.p0(), prior.p1());
    let pe = |phi: f64| p0 * phi.sin().powi(2) + p1 * (phi - a).cos().powi(2);

    let step = PI / SCAN_POINTS as f64;
    let best = (0..SCAN_POINTS)
        .map(|i| i as f64 * step)
        .min_by(|x, y| pe(*x).total_cmp(&pe(*y)))
        .unwrap_or(0.0);

    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (best - step, best + step);
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let (mut f1, mut f2) = (pe(x1), pe(x2));
    while hi - lo > ANGLE_TOL {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = pe(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = pe(x2);
        }
    }
    pe(0.5 * (lo + hi)).min(pe(best))
}
