//! Numeric roots: Aberth–Ehrlich in double precision driven by multiprecision
//! Newton ratios, then Newton polishing and residual certification.

use rug::float::Round;
use rug::{Float, Integer, Rational};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::complex::{horner_with_derivative, Complex};
use super::exact::square_free;
use crate::error::{Error, Result};
use crate::polyalg::Poly;

/// Largest precision reached by the doubling policy.
pub const MAX_PRECISION_BITS: u32 = 1024;

const ABERTH_MAX_ITER: usize = 600;

#[derive(Clone, Debug)]
pub struct Root {
    pub value: Complex,
    pub mult: usize,
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let digits = decimal_digits(self.value.prec());
        let mut st = s.serialize_struct("Root", 3)?;
        st.serialize_field("re", &fmt_float(&self.value.re, digits))?;
        st.serialize_field("im", &fmt_float(&self.value.im, digits))?;
        st.serialize_field("mult", &self.mult)?;
        st.end()
    }
}

/// Decimal digits carried by a binary precision.
pub fn decimal_digits(prec: u32) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).floor().max(1.0) as usize
}

/// Fixed-format decimal string with `digits` significant digits.
pub fn fmt_float(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.to_string_radix(10, Some(digits))
}

#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct RootSet {
    pub roots: Vec<Root>,
}

impl RootSet {
    pub fn degree(&self) -> usize {
        self.roots.iter().map(|r| r.mult).sum()
    }

    /// Roots within 2^{-prec/4} of the real axis and strictly inside (-1, 1).
    pub fn numeric_interval_count(&self, prec: u32) -> usize {
        let band = Float::with_val(64, Float::i_exp(1, -(prec as i32) / 4));
        self.roots
            .iter()
            .filter(|r| {
                let im = Float::with_val(64, r.value.im.abs_ref());
                im <= band && r.value.re > -1 && r.value.re < 1
            })
            .map(|r| r.mult)
            .sum()
    }
}

/// Square-free polynomial prepared for numerics: scaled integer coefficients
/// and the guard bits lost to cancellation on [-1, 1].
pub(crate) struct Prepared {
    ints: Vec<Integer>,
    guard: u32,
}

impl Prepared {
    pub(crate) fn new(p: &Poly) -> Prepared {
        let ints = p.primitive_integer();
        let guard = guard_bits(&ints);
        Prepared { ints, guard }
    }

    pub(crate) fn degree(&self) -> usize {
        self.ints.len() - 1
    }

    /// Coefficients divided by a common power of two and rounded to `prec`.
    pub(crate) fn coeffs(&self, prec: u32) -> Vec<Float> {
        let shift = self
            .ints
            .iter()
            .map(|c| c.significant_bits())
            .max()
            .unwrap_or(0) as i32;
        self.ints
            .iter()
            .map(|c| {
                let f = Float::with_val(prec, c);
                f >> shift
            })
            .collect()
    }

    pub(crate) fn guard(&self) -> u32 {
        self.guard
    }
}

/// log2(Σ|a_i|) - log2(max |p| on a Chebyshev sample of [-1, 1]) + 32.
fn guard_bits(ints: &[Integer]) -> u32 {
    let bits = ints.iter().map(|c| c.significant_bits()).max().unwrap_or(1);
    let prec = bits + 96 + 2 * ints.len() as u32;
    let coeffs: Vec<Float> = ints.iter().map(|c| Float::with_val(prec, c)).collect();
    let mut sum = Float::new(prec);
    for c in &coeffs {
        sum += c.clone().abs();
    }
    let mut maxv = Float::new(prec);
    let samples = 64usize;
    for k in 0..=samples {
        let x = (std::f64::consts::PI * (k as f64 + 0.5) / (samples as f64 + 1.0)).cos();
        let z = Complex::from_f64(prec, x, 0.0);
        let (v, _) = horner_with_derivative(&coeffs, &z);
        let a = v.re.abs();
        if a > maxv {
            maxv = a;
        }
    }
    if maxv.is_zero() {
        return 64 + 2 * ints.len() as u32;
    }
    let lost = Float::with_val(64, sum.log2_ref()) - Float::with_val(64, maxv.log2_ref());
    let lost = lost.to_f64().max(0.0).ceil() as u32;
    lost + 32
}

/// Newton ratio p/p' as a double-precision pair.
fn newton_ratio_f64(coeffs: &[Float], z: (f64, f64), prec: u32) -> (f64, f64) {
    let zc = Complex::from_f64(prec, z.0, z.1);
    let (p, d) = horner_with_derivative(coeffs, &zc);
    if d.re.is_zero() && d.im.is_zero() {
        return (f64::NAN, f64::NAN);
    }
    p.div(&d).to_f64()
}

fn c_div(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let n = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
}

fn c_abs(a: (f64, f64)) -> f64 {
    a.0.hypot(a.1)
}

/// Initial guesses on circles whose radii come from the upper convex hull of
/// (i, log|a_i|).
pub(crate) fn newton_polygon_guesses(ints: &[Integer]) -> Vec<(f64, f64)> {
    let n = ints.len() - 1;
    let logs: Vec<f64> = ints
        .iter()
        .map(|c| {
            if *c == 0 {
                f64::NEG_INFINITY
            } else {
                Float::with_val(64, c).abs().log2().to_f64()
            }
        })
        .collect();
    let mut hull: Vec<usize> = Vec::new();
    for i in 0..=n {
        if logs[i] == f64::NEG_INFINITY {
            continue;
        }
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b as f64 - a as f64) * (logs[i] - logs[a]) - (i as f64 - a as f64) * (logs[b] - logs[a]);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    let mut out = Vec::with_capacity(n);
    let sigma = 0.7;
    for w in hull.windows(2) {
        let (a, b) = (w[0], w[1]);
        let k = b - a;
        let r = ((logs[a] - logs[b]) / k as f64).exp2();
        for j in 0..k {
            let th = 2.0 * std::f64::consts::PI * (j as f64 / k as f64) + 2.0 * std::f64::consts::PI * (b as f64) / n as f64 + sigma;
            out.push((r * th.cos(), r * th.sin()));
        }
    }
    out
}

/// Aberth–Ehrlich iteration with Gauss–Seidel updates.
fn aberth(coeffs: &[Float], prec: u32, mut z: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    let n = z.len();
    let mut done = vec![false; n];
    for _ in 0..ABERTH_MAX_ITER {
        let mut all = true;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let nr = newton_ratio_f64(coeffs, z[i], prec);
            if !nr.0.is_finite() || !nr.1.is_finite() {
                z[i] = (z[i].0 * (1.0 + 1e-7) + 1e-9, z[i].1 + 1e-9);
                all = false;
                continue;
            }
            let mut s = (0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = (z[i].0 - z[j].0, z[i].1 - z[j].1);
                    let inv = c_div((1.0, 0.0), d);
                    s.0 += inv.0;
                    s.1 += inv.1;
                }
            }
            let ns = (nr.0 * s.0 - nr.1 * s.1, nr.0 * s.1 + nr.1 * s.0);
            let w = c_div(nr, (1.0 - ns.0, -ns.1));
            if !w.0.is_finite() || !w.1.is_finite() {
                all = false;
                continue;
            }
            z[i] = (z[i].0 - w.0, z[i].1 - w.1);
            if c_abs(w) <= 4.0 * f64::EPSILON * c_abs(z[i]).max(1e-3) {
                done[i] = true;
            } else {
                all = false;
            }
        }
        if all {
            break;
        }
    }
    z
}

/// Roots of a square-free polynomial at `prec` bits, certified by the Newton
/// residual |p/p'| < 2^{-prec/2} max(1, |z|).
pub(crate) fn solve_square_free(
    prep: &Prepared,
    prec: u32,
    guesses: Option<&[(f64, f64)]>,
) -> Result<Vec<Complex>> {
    let n = prep.degree();
    if n == 0 {
        return Ok(Vec::new());
    }
    let wp = prec + prep.guard();
    let coeffs = prep.coeffs(wp);
    if n == 1 {
        let r = -Float::with_val(wp, &coeffs[0] / &coeffs[1]);
        return Ok(vec![Complex::from_real(r)]);
    }
    let start = match guesses {
        Some(g) if g.len() == n => g.to_vec(),
        _ => newton_polygon_guesses(&prep.ints),
    };
    let low = prep.coeffs(prep.guard() + 64);
    let approx = aberth(&low, prep.guard() + 64, start);

    let tol_stop = Float::with_val(64, Float::i_exp(1, -(prec as i32)));
    let tol_cert = Float::with_val(64, Float::i_exp(1, -(prec as i32) / 2));
    let mut roots = Vec::with_capacity(n);
    for (i, &(re, im)) in approx.iter().enumerate() {
        let mut z = Complex::from_f64(wp, re, im);
        let mut last = Float::with_val(64, f64::INFINITY);
        for _ in 0..12 {
            let (p, d) = horner_with_derivative(&coeffs, &z);
            if d.re.is_zero() && d.im.is_zero() {
                break;
            }
            let step = p.div(&d);
            z = z.sub(&step);
            let scale = Float::with_val(64, z.abs()).max(&Float::with_val(64, 1));
            last = Float::with_val(64, step.abs() / &scale);
            if last <= tol_stop {
                break;
            }
        }
        if !(last <= tol_cert) {
            return Err(Error::Convergence(format!(
                "root {i} of a degree-{n} factor not certified at {prec} bits"
            )));
        }
        roots.push(z);
    }
    check_distinct(&roots, prec)?;
    Ok(roots)
}

/// Guided starts can miss a root; the generic start is the fallback.
pub(crate) fn solve_guided(prep: &Prepared, prec: u32, guesses: Option<&[(f64, f64)]>) -> Result<Vec<Complex>> {
    match solve_square_free(prep, prec, guesses) {
        Err(Error::Convergence(_)) if guesses.is_some() => solve_square_free(prep, prec, None),
        r => r,
    }
}

/// Two approximations converging to the same root leave another root unfound.
fn check_distinct(roots: &[Complex], prec: u32) -> Result<()> {
    let mut pts: Vec<(f64, f64)> = roots.iter().map(|r| r.to_f64()).collect();
    pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
    let eps = 2f64.powi(-((prec as i32) / 2).min(1000)).max(1e-300);
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[j].0 - pts[i].0 > eps * 4.0 {
                break;
            }
            if c_abs((pts[j].0 - pts[i].0, pts[j].1 - pts[i].1)) <= eps * 4.0 * c_abs(pts[i]).max(1.0) {
                return Err(Error::Convergence(format!(
                    "two approximations coincide near {:.6e}{:+.6e}i at {prec} bits",
                    pts[i].0, pts[i].1
                )));
            }
        }
    }
    Ok(())
}

/// Root set at a single precision; multiplicities are exact.
pub fn find_roots(p: &Poly, precision_bits: u32) -> Result<RootSet> {
    find_roots_guided(p, precision_bits, None)
}

/// As find_roots, with initial guesses used when p is square-free.
pub fn find_roots_guided(p: &Poly, precision_bits: u32, guesses: Option<&[(f64, f64)]>) -> Result<RootSet> {
    if p.is_zero() || p.deg() < 1 {
        return Err(Error::Domain("root finding needs a polynomial of degree ≥ 1".into()));
    }
    let sf = square_free(p)?;
    let single = sf.factors.len() == 1 && sf.factors[0].1 == 1;
    let mut roots = Vec::new();
    for (g, k) in &sf.factors {
        let prep = Prepared::new(g);
        let gs = if single { guesses } else { None };
        for value in solve_square_free(&prep, precision_bits, gs)? {
            roots.push(Root { value, mult: *k });
        }
    }
    Ok(RootSet { roots })
}

/// Doubling policy: retry at twice the precision up to MAX_PRECISION_BITS.
pub fn find_roots_adaptive(p: &Poly, precision_bits: u32, guesses: Option<&[(f64, f64)]>) -> Result<(RootSet, u32)> {
    let mut prec = precision_bits.max(32);
    loop {
        match find_roots_guided(p, prec, guesses) {
            Ok(r) => return Ok((r, prec)),
            Err(Error::Convergence(msg)) => {
                if prec >= MAX_PRECISION_BITS {
                    return Err(Error::Convergence(format!("{msg}; precision cap reached")));
                }
                prec = (prec * 2).min(MAX_PRECISION_BITS);
            }
            Err(e) => return Err(e),
        }
    }
}

/// Inclusion radii n|p(z_i) / (lc Π_{j≠i}(z_i - z_j))|.
fn inclusion_radii(prep: &Prepared, roots: &[Complex], prec: u32) -> Vec<Float> {
    let n = roots.len();
    let wp = prec + prep.guard();
    let coeffs = prep.coeffs(wp);
    let lc = coeffs[n].clone();
    roots
        .iter()
        .enumerate()
        .map(|(i, zi)| {
            let (p, _) = horner_with_derivative(&coeffs, zi);
            let mut prod = Complex::from_real(lc.clone());
            for (j, zj) in roots.iter().enumerate() {
                if i != j {
                    prod = prod.mul(&zi.sub(zj));
                }
            }
            let w = p.div(&prod).abs();
            Float::with_val(64, w * n as u32)
        })
        .collect()
}

/// Roots in (a, b) from Weierstrass inclusion discs: disjoint discs hold one
/// root each, a disc meeting the axis and no other conjugate disc holds a real
/// root. None when the discs do not separate at this precision.
pub(crate) fn disc_count(prep: &Prepared, roots: &[Complex], prec: u32, a: f64, b: f64) -> Option<usize> {
    let radii = inclusion_radii(prep, roots, prec);
    let pts: Vec<(f64, f64)> = roots.iter().map(|r| r.to_f64()).collect();
    let rad: Vec<f64> = radii.iter().map(|r| r.to_f64_round(Round::Up)).collect();
    let n = pts.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            let d = c_abs((pts[i].0 - pts[j].0, pts[i].1 - pts[j].1));
            if d <= rad[i] + rad[j] {
                return None;
            }
        }
        let im = Float::with_val(64, roots[i].im.abs_ref());
        if im > radii[i] {
            continue;
        }
        for j in 0..n {
            if j != i {
                let d = c_abs((pts[i].0 - pts[j].0, -pts[i].1 - pts[j].1));
                if d <= rad[i] + rad[j] {
                    return None;
                }
            }
        }
        let (lo, hi) = (pts[i].0 - rad[i], pts[i].0 + rad[i]);
        if lo > a && hi < b {
            count += 1;
        } else if !(hi < a || lo > b) {
            return None;
        }
    }
    Some(count)
}

/// Roots and their certified count in (a, b), doubling precision until the
/// inclusion discs separate.
pub(crate) fn solve_and_count(
    prep: &Prepared,
    prec: u32,
    guesses: Option<&[(f64, f64)]>,
    a: &Rational,
    b: &Rational,
) -> Result<(Vec<Complex>, usize, u32)> {
    let (af, bf) = (a.to_f64(), b.to_f64());
    let mut prec = prec.max(32);
    loop {
        let attempt = solve_guided(prep, prec, guesses)
            .map(|roots| disc_count(prep, &roots, prec, af, bf).map(|c| (roots, c)));
        match attempt {
            Ok(Some((roots, c))) => return Ok((roots, c, prec)),
            Ok(None) | Err(Error::Convergence(_)) if prec < MAX_PRECISION_BITS => {
                prec = (prec * 2).min(MAX_PRECISION_BITS)
            }
            Ok(None) => return Err(Error::Convergence("inclusion discs did not separate".into())),
            Err(e) => return Err(e),
        }
    }
}

/// Number of roots of a square-free g in (a, b), certified by inclusion discs.
pub fn certified_interval_count(g: &Poly, a: &Rational, b: &Rational) -> Result<usize> {
    solve_and_count(&Prepared::new(g), 128, None, a, b).map(|(_, c, _)| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{int, jacobi, rat};

    fn close(z: &Complex, re: f64, im: f64, tol: f64) -> bool {
        let (a, b) = z.to_f64();
        (a - re).abs() < tol && (b - im).abs() < tol
    }

    #[test]
    fn simple_quadratic() {
        let p = Poly::from_i64(&[2, -3, 1]);
        let r = find_roots(&p, 128).unwrap();
        assert_eq!(r.degree(), 2);
        assert!(r.roots.iter().any(|z| close(&z.value, 1.0, 0.0, 1e-30)));
        assert!(r.roots.iter().any(|z| close(&z.value, 2.0, 0.0, 1e-30)));
    }

    #[test]
    fn multiplicities_exact() {
        let p = &Poly::from_i64(&[5, 4]) * &Poly::from_i64(&[1, 2]).pow(3);
        let r = find_roots(&p, 128).unwrap();
        assert_eq!(r.degree(), 4);
        for root in &r.roots {
            if root.mult == 3 {
                assert!(close(&root.value, -0.5, 0.0, 1e-30));
            } else {
                assert!(close(&root.value, -1.25, 0.0, 1e-30));
            }
        }
    }

    #[test]
    fn golden_cubed() {
        // ((x - (1+√5)/4)(x - (1-√5)/4))^3 = (x^2 - x/2 - 1/4)^3
        let q = Poly::new(vec![rat(-1, 4), rat(-1, 2), int(1)]).pow(3);
        let r = find_roots(&q, 128).unwrap();
        let s5 = 5f64.sqrt();
        assert_eq!(r.roots.len(), 2);
        for root in &r.roots {
            assert_eq!(root.mult, 3);
            assert!(close(&root.value, (1.0 + s5) / 4.0, 0.0, 1e-14) || close(&root.value, (1.0 - s5) / 4.0, 0.0, 1e-14));
        }
    }

    #[test]
    fn legendre_high_degree() {
        let p = jacobi(60, &int(0), &int(0));
        let r = find_roots(&p, 128).unwrap();
        assert_eq!(r.numeric_interval_count(128), 60);
    }

    #[test]
    fn certified_count_matches_sturm() {
        let p = &jacobi(30, &rat(1, 2), &int(2)) * &Poly::from_i64(&[3, 1, 2]);
        let c = certified_interval_count(&p, &int(-1), &int(1)).unwrap();
        assert_eq!(c, 30);
    }
}
