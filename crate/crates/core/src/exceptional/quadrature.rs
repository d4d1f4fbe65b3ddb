//! Gauss–Legendre spot check of orthogonality against the exceptional weight.

use rug::Float;
use serde::Serialize;

use super::{exceptional_jacobi, ExceptionalSpec, Weight, WeightParams};
use crate::error::{Error, Result};
use crate::wronskian::FamilySpec;

/// Nodes and weights of the k-point rule on [-1, 1].
pub fn gauss_legendre(k: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (k as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=k {
                let j = j as f64;
                let p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = k as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityReport {
    pub n: usize,
    pub m: usize,
    /// ∫P_n P_m W / sqrt(∫P_n² W ∫P_m² W)
    pub normalized_inner_product: f64,
    pub endpoint_gap: f64,
}

/// Composite rule on panels graded geometrically towards ±1, stopping once the
/// innermost panel pair is 2^{-levels} from the endpoints.
fn integrate3(
    levels: usize,
    rule: &[(f64, f64)],
    prec: u32,
    f: &dyn Fn(&Float) -> Result<[f64; 3]>,
) -> Result<[f64; 3]> {
    let mut panels = vec![(-0.5, 0.5)];
    let mut a = 0.5;
    for _ in 0..levels {
        let b = 1.0 - (1.0 - a) / 2.0;
        panels.push((a, b));
        panels.push((-b, -a));
        a = b;
    }
    let mut acc = [0.0; 3];
    for (lo, hi) in panels {
        let half = (hi - lo) / 2.0;
        let mid = (hi + lo) / 2.0;
        for &(t, w) in rule {
            let x = Float::with_val(prec, mid + half * t);
            let v = f(&x)?;
            for (s, vi) in acc.iter_mut().zip(v) {
                *s += w * half * vi;
            }
        }
    }
    Ok(acc)
}

/// Normalized inner product of P_n and P_m under the weight, with the
/// endpoint gap shrunk until the value settles to `tol`.
pub fn orthogonality_check(
    family: &FamilySpec,
    n: usize,
    m: usize,
    prec: u32,
    tol: f64,
) -> Result<OrthogonalityReport> {
    let pn = exceptional_jacobi(&ExceptionalSpec::new(family.clone(), n)?)?;
    let pm = exceptional_jacobi(&ExceptionalSpec::new(family.clone(), m)?)?;
    let weight = Weight::new(WeightParams::new(family.clone()))?;
    let rule = gauss_legendre(48);
    let integrand = |x: &Float| -> Result<[f64; 3]> {
        let w = weight.eval(x)?;
        let a = pn.eval_float(x);
        let b = pm.eval_float(x);
        let ab = Float::with_val(prec, &a * &b) * &w;
        let aa = Float::with_val(prec, a.square_ref()) * &w;
        let bb = Float::with_val(prec, b.square_ref()) * &w;
        Ok([ab.to_f64(), aa.to_f64(), bb.to_f64()])
    };
    let mut prev: Option<f64> = None;
    for levels in (8..=48).step_by(8) {
        let [ab, aa, bb] = integrate3(levels, &rule, prec, &integrand)?;
        if !(aa > 0.0 && bb > 0.0) {
            return Err(Error::Degenerate("nonpositive norm in orthogonality check".into()));
        }
        let v = ab / (aa * bb).sqrt();
        if let Some(p) = prev {
            if (v - p).abs() < tol {
                return Ok(OrthogonalityReport {
                    n,
                    m,
                    normalized_inner_product: v,
                    endpoint_gap: (2.0f64).powi(-(levels as i32)),
                });
            }
        }
        prev = Some(v);
    }
    Err(Error::Convergence("orthogonality quadrature did not settle".into()))
}
