//! Dense real matrix exponential by scaling and squaring with diagonal Padé
//! approximants of degree 3, 5, 7, 9 or 13 (Higham's 2005 selection).
//!
//! Works for non-normal generators with real eigenvalues of either sign,
//! which is the situation for above-threshold quadratic Hamiltonians.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

const THETA: [(usize, f64); 4] = [
    (3, 1.495_585_217_958_292e-2),
    (5, 2.539_398_330_063_23e-1),
    (7, 9.504_178_996_162_932e-1),
    (9, 2.097_847_961_257_068e0),
];
const THETA_13: f64 = 5.371_920_351_148_152e0;

const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B7: [f64; 8] = [
    17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0,
];
const B9: [f64; 10] = [
    17643225600.0,
    8821612800.0,
    2075673600.0,
    302702400.0,
    30270240.0,
    2162160.0,
    110880.0,
    3960.0,
    90.0,
    1.0,
];
const B13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// Largest generator norm accepted; beyond this the squaring phase overflows.
const MAX_NORM: f64 = 700.0 * 64.0;

fn one_norm(a: &DMatrix<f64>) -> f64 {
    a.column_iter()
        .map(|c| c.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `exp(a)` for a square real matrix.
pub fn expm(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: a.ncols(),
        });
    }
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("matrix exponential argument".into()));
    }
    let norm = one_norm(a);
    if norm > MAX_NORM {
        return Err(Error::NonConvergence {
            what: "matrix exponential (generator norm too large)",
            achieved: norm,
            requested: MAX_NORM,
        });
    }
    let identity = DMatrix::<f64>::identity(n, n);
    if norm == 0.0 {
        return Ok(identity);
    }

    for &(degree, theta) in &THETA {
        if norm <= theta {
            let coeffs: &[f64] = match degree {
                3 => &B3,
                5 => &B5,
                7 => &B7,
                _ => &B9,
            };
            let (u, v) = low_degree_terms(a, coeffs);
            return pade_solve(&u, &v);
        }
    }

    let squarings = (norm / THETA_13).log2().ceil().max(0.0) as i32;
    let scaled = a * 2f64.powi(-squarings);
    let (u, v) = degree13_terms(&scaled);
    let mut r = pade_solve(&u, &v)?;
    for _ in 0..squarings {
        r = &r * &r;
    }
    if r.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("matrix exponential overflowed".into()));
    }
    Ok(r)
}

fn low_degree_terms(a: &DMatrix<f64>, b: &[f64]) -> (DMatrix<f64>, DMatrix<f64>) {
    let n = a.nrows();
    let a2 = a * a;
    let mut power = DMatrix::<f64>::identity(n, n);
    let mut odd = DMatrix::<f64>::zeros(n, n);
    let mut even = DMatrix::<f64>::zeros(n, n);
    for k in 0..b.len() / 2 {
        even += &power * b[2 * k];
        odd += &power * b[2 * k + 1];
        power = &power * &a2;
    }
    (a * odd, even)
}

fn degree13_terms(a: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    let n = a.nrows();
    let b = &B13;
    let identity = DMatrix::<f64>::identity(n, n);
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let inner_u = &a6 * (&a6 * b[13] + &a4 * b[11] + &a2 * b[9]);
    let u = a * (inner_u + &a6 * b[7] + &a4 * b[5] + &a2 * b[3] + &identity * b[1]);
    let inner_v = &a6 * (&a6 * b[12] + &a4 * b[10] + &a2 * b[8]);
    let v = inner_v + &a6 * b[6] + &a4 * b[4] + &a2 * b[2] + identity * b[0];
    (u, v)
}

fn pade_solve(u: &DMatrix<f64>, v: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let denominator = v - u;
    let numerator = v + u;
    denominator
        .lu()
        .solve(&numerator)
        .ok_or(Error::NonConvergence {
            what: "Pade denominator solve (singular matrix)",
            achieved: f64::INFINITY,
            requested: 0.0,
        })
}
