//! Bessel functions of the first kind and their positive zeros.

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};

/// Series below this argument; Hankel above it when its truncation error is small enough.
fn series_limit(nu: f64) -> f64 {
    12f64.max(2.0 * nu.abs())
}

/// Power series Σ (-1)^k (x/2)^{2k+ν} / (k! Γ(k+ν+1)).
fn j_series(nu: &Float, x: &Float, prec: u32) -> Float {
    // terms peak near e^x before cancelling
    let guard = (x.to_f64().abs() * std::f64::consts::LOG2_E) as u32 + 32;
    let wp = prec + guard;
    let half = Float::with_val(wp, x / 2u32);
    let q = -Float::with_val(wp, half.square_ref());
    let nu1 = Float::with_val(wp, nu + 1u32);
    let mut term = Float::with_val(wp, (&half).pow(nu)) / nu1.gamma();
    let mut sum = term.clone();
    let eps = Float::with_val(wp, Float::i_exp(1, -(wp as i32)));
    let mut k = 0u32;
    loop {
        k += 1;
        let den = Float::with_val(wp, nu + k) * k;
        term *= &q;
        term /= den;
        sum += &term;
        let small = Float::with_val(wp, term.abs_ref()) <= Float::with_val(wp, sum.abs_ref()) * &eps;
        if small && Float::with_val(wp, k) > half {
            break;
        }
        if k > 100_000 {
            break;
        }
    }
    Float::with_val(prec, sum)
}

/// Hankel expansion; None when the smallest term is above 2^{-prec}.
fn j_hankel(nu: &Float, x: &Float, prec: u32) -> Option<Float> {
    let wp = prec + 32;
    let mu = Float::with_val(wp, nu.square_ref()) * 4u32;
    let eight_x = Float::with_val(wp, x * 8u32);
    let mut p = Float::with_val(wp, 1);
    let mut q = Float::new(wp);
    let mut a = Float::with_val(wp, 1);
    let tol = Float::with_val(wp, Float::i_exp(1, -(prec as i32) - 4));
    let mut last = Float::with_val(wp, f64::INFINITY);
    let mut converged = false;
    for k in 1u32..400 {
        let odd = Float::with_val(wp, 2 * k - 1).square();
        a *= Float::with_val(wp, &mu - &odd);
        a /= Float::with_val(wp, &eight_x * k);
        let mag = Float::with_val(wp, a.abs_ref());
        if mag > last {
            break;
        }
        // signs: P takes a_0 - a_2 + a_4 ..., Q takes a_1 - a_3 + ...
        let sign_neg = (k / 2) % 2 == 1;
        let t = if sign_neg { -a.clone() } else { a.clone() };
        if k % 2 == 0 {
            p += &t;
        } else {
            q += &t;
        }
        if mag < tol {
            converged = true;
            break;
        }
        last = mag;
    }
    if !converged {
        return None;
    }
    let pi = Float::with_val(wp, Constant::Pi);
    let omega = Float::with_val(wp, x - Float::with_val(wp, nu * &pi) / 2u32) - Float::with_val(wp, &pi / 4u32);
    let (s, c) = omega.sin_cos(Float::new(wp));
    let amp = (Float::with_val(wp, 2u32) / Float::with_val(wp, &pi * x)).sqrt();
    Some(Float::with_val(prec, amp * (p * c - q * s)))
}

/// J_ν(x) for x > 0 and ν > -1.
pub fn bessel_j(nu: &Float, x: &Float, prec: u32) -> Result<Float> {
    if *nu <= -1 {
        return Err(Error::Domain(format!("ν = {nu} must exceed -1")));
    }
    if *x <= 0 {
        return Err(Error::Domain("Bessel argument must be positive".into()));
    }
    if x.to_f64() > series_limit(nu.to_f64()) {
        if let Some(v) = j_hankel(nu, x, prec) {
            return Ok(v);
        }
    }
    Ok(j_series(nu, x, prec))
}

fn j_f64(nu: &Float, x: f64) -> f64 {
    j_series(nu, &Float::with_val(64, x), 64).to_f64()
}

/// McMahon's expansion for large k; the transition-region form for k = 1 and large ν.
fn initial_guess(nu: f64, k: u32) -> f64 {
    if k == 1 && nu > 2.0 {
        let c = nu.cbrt();
        return nu + 1.855_757_1 * c + 1.033_150 / c - 0.003_97 / nu;
    }
    let mu = 4.0 * nu * nu;
    let b = (k as f64 + nu / 2.0 - 0.25) * std::f64::consts::PI;
    let e = 8.0 * b;
    b - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e.powi(3))
}

/// Sign changes of J_ν on (0, x) sampled on a step-0.05 grid.
fn sign_changes_below(nu: &Float, x: f64) -> usize {
    let mut count = 0;
    let mut t = 0.05;
    let mut prev = j_f64(nu, t);
    while t + 0.05 < x {
        t += 0.05;
        let v = j_f64(nu, t);
        if v != 0.0 && prev != 0.0 && (v < 0.0) != (prev < 0.0) {
            count += 1;
        }
        if v != 0.0 {
            prev = v;
        }
    }
    count
}

fn newton(nu: &Float, mut x: Float, prec: u32) -> Option<Float> {
    let wp = prec + 16;
    let tol = Float::with_val(wp, Float::i_exp(1, -(prec as i32) + 2));
    let nu1 = Float::with_val(wp, nu + 1u32);
    for _ in 0..200 {
        if x <= 0 {
            return None;
        }
        let j = j_series(nu, &x, wp);
        let j1 = j_series(&nu1, &x, wp);
        // J_ν' = (ν/x) J_ν - J_{ν+1}
        let d = Float::with_val(wp, nu * &j) / &x - j1;
        let step = Float::with_val(wp, &j / &d);
        x -= &step;
        if Float::with_val(wp, step.abs_ref()) <= Float::with_val(wp, &tol * &x) {
            return Some(x);
        }
    }
    None
}

/// Bisection on a sign-changing bracket, then Newton.
fn bracket_refine(nu: &Float, k: u32, prec: u32) -> Result<Float> {
    let mut count = 0;
    let mut t = 0.05;
    let mut prev = j_f64(nu, t);
    loop {
        let next = t + 0.05;
        let v = j_f64(nu, next);
        if (v < 0.0) != (prev < 0.0) {
            count += 1;
            if count == k {
                let (mut lo, mut hi) = (t, next);
                for _ in 0..60 {
                    let mid = 0.5 * (lo + hi);
                    if (j_f64(nu, mid) < 0.0) == (prev < 0.0) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                return newton(nu, Float::with_val(prec + 16, 0.5 * (lo + hi)), prec)
                    .map(|x| Float::with_val(prec, x))
                    .ok_or_else(|| Error::Convergence(format!("Newton failed for j_{{{nu},{k}}}")));
            }
        }
        prev = v;
        t = next;
        if t > 1e5 {
            return Err(Error::Convergence(format!("no bracket for j_{{{nu},{k}}}")));
        }
    }
}

/// k-th positive zero j_{ν,k}.
pub fn bessel_zero(nu: &Float, k: u32, prec: u32) -> Result<Float> {
    if *nu <= -1 {
        return Err(Error::Domain(format!("ν = {nu} must exceed -1")));
    }
    if k == 0 {
        return Err(Error::Domain("zero index k starts at 1".into()));
    }
    let guess = initial_guess(nu.to_f64(), k).max(0.1);
    if let Some(x) = newton(nu, Float::with_val(prec + 16, guess), prec) {
        let xf = x.to_f64();
        // accept only if exactly k-1 sign changes lie below and J changes sign at x
        let below = sign_changes_below(nu, xf - 0.02);
        let across = (j_f64(nu, xf - 0.01) < 0.0) != (j_f64(nu, xf + 0.01) < 0.0);
        if below + 1 == k as usize && across {
            return Ok(Float::with_val(prec, x));
        }
    }
    bracket_refine(nu, k, prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: f64) -> Float {
        Float::with_val(128, v)
    }

    #[test]
    fn j0_first_zero_against_bisection() {
        let z = bessel_zero(&f(0.0), 1, 128).unwrap();
        assert!((z.to_f64() - 2.404_825_557_695_773).abs() < 1e-12);
        // independent bisection on the series
        let (mut lo, mut hi) = (2.0, 3.0);
        for _ in 0..80 {
            let m = 0.5 * (lo + hi);
            if j_f64(&f(0.0), m) > 0.0 {
                lo = m;
            } else {
                hi = m;
            }
        }
        assert!((z.to_f64() - lo).abs() < 1e-12);
    }

    #[test]
    fn half_order_zeros_are_multiples_of_pi() {
        let pi = Float::with_val(128, Constant::Pi);
        for k in 1..=3u32 {
            let z = bessel_zero(&f(0.5), k, 128).unwrap();
            let err = Float::with_val(128, &z - Float::with_val(128, &pi * k)).abs();
            assert!(err < Float::with_val(128, Float::i_exp(1, -100)), "k={k} err={err}");
        }
    }

    #[test]
    fn hankel_matches_series_at_seam() {
        // at x = 60 the Hankel tail is far below 2^-64
        for nu in [0.0, 0.5, 3.0, 5.0] {
            let x = f(60.0);
            let h = j_hankel(&f(nu), &x, 64).expect("converged");
            let s = j_series(&f(nu), &x, 64);
            assert!((h.to_f64() - s.to_f64()).abs() < 1e-15, "ν={nu}");
        }
    }

    #[test]
    fn half_order_closed_form() {
        // J_{1/2}(x) = sqrt(2/(πx)) sin x
        let x = 7.3f64;
        let v = bessel_j(&f(0.5), &f(x), 128).unwrap().to_f64();
        let exact = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sin();
        assert!((v - exact).abs() < 1e-14);
    }

    #[test]
    fn large_order_first_zero() {
        // j_{5,1} = 8.771483815959954
        let z = bessel_zero(&f(5.0), 1, 128).unwrap();
        assert!((z.to_f64() - 8.771_483_815_959_954).abs() < 1e-12);
    }

    #[test]
    fn rejects_order_below_minus_one() {
        assert!(bessel_zero(&f(-1.0), 1, 64).is_err());
    }
}
