//! Harnesses for the edge (Bessel), bulk (arcsine) and exceptional-zero
//! asymptotics, and the electrostatic identity at the zeros of Ω.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::bessel::{bessel_j, bessel_zero};
use super::classify::{classify_polynomial, ZeroClassification};
use super::complex::Complex;
use super::exact::{count_real_roots, poly_gcd, square_free};
use super::roots::{decimal_digits, find_roots_adaptive, fmt_float};
use crate::error::{Error, Result};
use crate::exceptional::{exceptional_jacobi, in_degree_set, ExceptionalSpec};
use crate::polyalg::Poly;
use crate::wronskian::{omega, omega_columns, FamilySpec};

/// One step of a convergence sequence; error = |observable - target|.
#[derive(Clone, Debug)]
pub struct ConvergenceRecord {
    pub n: usize,
    pub observable: Float,
    pub target: Float,
    pub error: Float,
}

impl ConvergenceRecord {
    pub fn new(n: usize, observable: Float, target: Float) -> Self {
        let error = Float::with_val(observable.prec(), &observable - &target).abs();
        ConvergenceRecord {
            n,
            observable,
            target,
            error,
        }
    }

    /// n, observable, target, error with `digits` significant digits.
    pub fn csv_row(&self, digits: usize) -> [String; 4] {
        [
            self.n.to_string(),
            fmt_float(&self.observable, digits),
            fmt_float(&self.target, digits),
            fmt_float(&self.error, digits),
        ]
    }
}

impl Serialize for ConvergenceRecord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let d = decimal_digits(self.observable.prec());
        let mut st = s.serialize_struct("ConvergenceRecord", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("observable", &fmt_float(&self.observable, d))?;
        st.serialize_field("target", &fmt_float(&self.target, d))?;
        st.serialize_field("error", &fmt_float(&self.error, d))?;
        st.end()
    }
}

/// A degree left out of a sweep and the reason.
#[derive(Clone, Debug, Serialize)]
pub struct Skipped {
    pub n: usize,
    pub reason: String,
}

fn float_of(r: &Rational, prec: u32) -> Float {
    Float::with_val(prec, r)
}

fn require_shifted_params(f: &FamilySpec) -> Result<()> {
    let r = f.r() as i64;
    if Rational::from(&f.alpha + r) <= -1 || Rational::from(&f.beta + r) <= -1 {
        return Err(Error::Domain(format!("α+r > -1 and β+r > -1 are required for {f}")));
    }
    Ok(())
}

fn classify_at(family: &FamilySpec, n: usize, prec: u32) -> Result<(ExceptionalSpec, Poly, ZeroClassification)> {
    let spec = ExceptionalSpec::new(family.clone(), n)?;
    let p = exceptional_jacobi(&spec)?;
    let c = classify_polynomial(&spec, &p, prec)?;
    Ok((spec, p, c))
}

/// Regular zeros repeated by multiplicity, descending.
fn regular_list(c: &ZeroClassification) -> Vec<Float> {
    c.regular
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.value.re.clone(), r.mult))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Edge {
    /// Zeros near +1 against j_{α+r,k}.
    Plus,
    /// Zeros near -1 against j_{β+r1-r2,k}.
    Minus,
}

#[derive(Clone, Debug, Serialize)]
pub struct FunctionalSample {
    pub n: usize,
    pub x: f64,
    #[serde(serialize_with = "ser_float")]
    pub observable: Float,
    #[serde(serialize_with = "ser_float")]
    pub target: Float,
    #[serde(serialize_with = "ser_float")]
    pub relative_error: Float,
}

fn ser_float<S: Serializer>(x: &Float, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_float(x, decimal_digits(x.prec())))
}

#[derive(Clone, Debug, Serialize)]
pub struct MehlerHeineReport {
    pub edge: Edge,
    pub k: u32,
    #[serde(serialize_with = "ser_float")]
    pub bessel_order: Float,
    pub records: Vec<ConvergenceRecord>,
    /// Scaled values of P at cos(x/n) against the Bessel limit (edge +1 only).
    pub functional: Vec<FunctionalSample>,
    pub skipped: Vec<Skipped>,
}

impl MehlerHeineReport {
    /// max over x of the functional relative error at each n, in n order.
    pub fn functional_max_errors(&self) -> Vec<(usize, f64)> {
        let mut out: Vec<(usize, f64)> = Vec::new();
        for s in &self.functional {
            let e = s.relative_error.to_f64();
            match out.iter_mut().find(|(n, _)| *n == s.n) {
                Some(v) => v.1 = v.1.max(e),
                None => out.push((s.n, e)),
            }
        }
        out
    }
}

/// Ω̄ for (λ, μ') with α' = α+μ1+r2, β' = β-μ1-r2: kind-1 columns for λ and
/// kind-3 columns for μ'.
fn omega_bar_conjugate(f: &FamilySpec) -> Result<Poly> {
    let shift = (f.mu.first() + f.r2()) as i64;
    let a2 = Rational::from(&f.alpha + shift);
    let b2 = Rational::from(&f.beta - shift);
    let mut cols: Vec<(u8, usize)> = f.lambda.degree_sequence().into_iter().map(|n| (1u8, n)).collect();
    cols.extend(f.mu.conjugate().degree_sequence().into_iter().map(|m| (3u8, m)));
    omega_columns(&cols, &a2, &b2)
}

/// Edge asymptotics of the regular zeros: n θ_{k,n} against j_{ν,k}, plus the
/// functional limit at x ∈ {1, 2, 5} for the +1 edge.
pub fn mehler_heine_record(
    family: &FamilySpec,
    k: u32,
    n_list: &[usize],
    edge: Edge,
    precision_bits: u32,
) -> Result<MehlerHeineReport> {
    if k == 0 {
        return Err(Error::Domain("zero index k starts at 1".into()));
    }
    require_shifted_params(family)?;
    let prec = precision_bits;
    let om = omega(family)?;
    let (r1, r2, r) = (family.r1() as i64, family.r2() as i64, family.r() as i64);
    let nu_r = match edge {
        Edge::Plus => {
            if om.eval(&Rational::from(1)) == 0 {
                return Err(Error::Domain(format!("Ω(1) = 0 for {family}")));
            }
            Rational::from(&family.alpha + r)
        }
        Edge::Minus => {
            let bar = omega_bar_conjugate(family)?;
            if bar.eval(&Rational::from(-1)) == 0 {
                return Err(Error::Domain(format!(
                    "Ω̄ for the conjugate family vanishes at -1 for {family}; no limit is stated"
                )));
            }
            Rational::from(&family.beta + r1) - r2
        }
    };
    let nu = float_of(&nu_r, prec);
    let target = bessel_zero(&nu, k, prec)?;
    let omega_one = float_of(&om.eval(&Rational::from(1)), prec);

    let mut records = Vec::new();
    let mut functional = Vec::new();
    let mut skipped = Vec::new();
    for &n in n_list {
        if !in_degree_set(&family.lambda, &family.mu, n) {
            skipped.push(Skipped {
                n,
                reason: "n ∉ ℕ_{λ,μ}".into(),
            });
            continue;
        }
        let (_, p, c) = classify_at(family, n, prec)?;
        let regs = regular_list(&c);
        if regs.len() < k as usize {
            skipped.push(Skipped {
                n,
                reason: format!("only {} regular zeros, fewer than k = {k}", regs.len()),
            });
            continue;
        }
        let x = match edge {
            Edge::Plus => regs[k as usize - 1].clone(),
            Edge::Minus => -regs[regs.len() - k as usize].clone(),
        };
        let theta = Float::with_val(prec, x.acos_ref());
        let obs = theta * n as u32;
        records.push(ConvergenceRecord::new(n, obs, target.clone()));

        if edge == Edge::Plus {
            for xs in [1.0f64, 2.0, 5.0] {
                functional.push(functional_sample(family, &p, n, xs, &omega_one, &nu_r, prec)?);
            }
        }
    }
    Ok(MehlerHeineReport {
        edge,
        k,
        bessel_order: nu,
        records,
        functional,
        skipped,
    })
}

fn functional_sample(
    family: &FamilySpec,
    p: &Poly,
    n: usize,
    xs: f64,
    omega_one: &Float,
    nu_r: &Rational,
    prec: u32,
) -> Result<FunctionalSample> {
    // Horner in the monomial basis loses about log2 Σ|c_i| bits
    let lost: u32 = p
        .coeffs()
        .iter()
        .map(|c| c.numer().significant_bits() as i64 - c.denom().significant_bits() as i64)
        .max()
        .unwrap_or(0)
        .max(0) as u32
        + 2 * p.coeffs().len() as u32;
    let wp = prec + lost + 64;
    let x = Float::with_val(wp, xs);
    let arg = Float::with_val(wp, &x / n as u32).cos();
    let val = p.eval_float(&arg);
    let r = family.r() as i64;
    let scale_exp = Float::with_val(wp, Rational::from(&family.alpha + 2 * r));
    let nf = Float::with_val(wp, n as u32);
    let obs = Float::with_val(prec, val / nf.pow(&scale_exp));

    // Ω(1) 2^{α+r2} x^{-α-r} J_{α+r}(x)
    let two_pow = Float::with_val(prec, 2u32).pow(Float::with_val(prec, Rational::from(&family.alpha + family.r2() as i64)));
    let xp = Float::with_val(prec, xs).pow(-Float::with_val(prec, nu_r));
    let j = bessel_j(&Float::with_val(prec, nu_r), &Float::with_val(prec, xs), prec)?;
    let target = Float::with_val(prec, omega_one * two_pow) * xp * j;
    let rel = Float::with_val(prec, &obs - &target).abs() / Float::with_val(prec, target.abs_ref());
    Ok(FunctionalSample {
        n,
        x: xs,
        observable: obs,
        target,
        relative_error: rel,
    })
}

/// Kolmogorov–Smirnov distance between the regular zeros and the arcsine law.
pub fn arcsine_distance_of(c: &ZeroClassification, precision_bits: u32) -> Result<Float> {
    let mut xs = regular_list(c);
    if xs.is_empty() {
        return Err(Error::Degenerate("no regular zeros (N_n = 0)".into()));
    }
    xs.reverse();
    let prec = precision_bits;
    let m = xs.len();
    let pi = Float::with_val(prec, Constant::Pi);
    let mut ks = Float::new(prec);
    for (i, x) in xs.iter().enumerate() {
        // F(x) = 1/2 + asin(x)/π
        let f = Float::with_val(prec, x.asin_ref()) / &pi + Float::with_val(prec, 0.5);
        let hi = Float::with_val(prec, Rational::from((i as u64 + 1, m as u64))) - &f;
        let lo = f - Float::with_val(prec, Rational::from((i as u64, m as u64)));
        ks = ks.max(&hi.abs()).max(&lo.abs());
    }
    Ok(ks)
}

pub fn arcsine_distance(spec: &ExceptionalSpec, precision_bits: u32) -> Result<Float> {
    require_shifted_params(&spec.family)?;
    let p = exceptional_jacobi(spec)?;
    let c = classify_polynomial(spec, &p, precision_bits)?;
    arcsine_distance_of(&c, precision_bits)
}

/// KS distances over a degree list as records with target 0.
pub fn arcsine_record(family: &FamilySpec, n_list: &[usize], precision_bits: u32) -> Result<(Vec<ConvergenceRecord>, Vec<Skipped>)> {
    require_shifted_params(family)?;
    let mut out = Vec::new();
    let mut skipped = Vec::new();
    for &n in n_list {
        if !in_degree_set(&family.lambda, &family.mu, n) {
            skipped.push(Skipped {
                n,
                reason: "n ∉ ℕ_{λ,μ}".into(),
            });
            continue;
        }
        let (_, _, c) = classify_at(family, n, precision_bits)?;
        match arcsine_distance_of(&c, precision_bits) {
            Ok(ks) => out.push(ConvergenceRecord::new(n, ks, Float::new(precision_bits))),
            Err(Error::Degenerate(reason)) => skipped.push(Skipped { n, reason }),
            Err(e) => return Err(e),
        }
    }
    Ok((out, skipped))
}

/// A distinct zero of Ω with its exact multiplicity.
#[derive(Clone, Debug)]
pub struct OmegaZero {
    pub value: Complex,
    pub mult: usize,
    /// Lies on the closed segment [-1, 1] (decided by an exact count).
    pub on_segment: bool,
    /// Index of the square-free factor holding this zero.
    factor: usize,
}

impl Serialize for OmegaZero {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let d = decimal_digits(self.value.prec());
        let mut st = s.serialize_struct("OmegaZero", 4)?;
        st.serialize_field("re", &fmt_float(&self.value.re, d))?;
        st.serialize_field("im", &fmt_float(&self.value.im, d))?;
        st.serialize_field("mult", &self.mult)?;
        st.serialize_field("on_segment", &self.on_segment)?;
        st.end()
    }
}

fn segment_distance(z: &Complex) -> f64 {
    let (re, im) = z.to_f64();
    (re.abs() - 1.0).max(0.0).hypot(im)
}

/// 1 + max |a_i / a_n|: every root has modulus below it.
fn cauchy_bound(g: &Poly) -> Rational {
    let lc = g.lc();
    let m = g
        .coeffs()
        .iter()
        .map(|c| Rational::from(c / &lc).abs())
        .max()
        .unwrap_or_default();
    m + 1u32
}

/// Distinct zeros of Ω sorted by real then imaginary part.
pub fn omega_zeros(family: &FamilySpec, precision_bits: u32) -> Result<(Poly, Vec<OmegaZero>, Vec<Poly>)> {
    let om = omega(family)?;
    if om.is_zero() {
        return Err(Error::Degenerate(format!("Ω vanishes identically for {family}")));
    }
    let mut out = Vec::new();
    let mut factors = Vec::new();
    if om.deg() < 1 {
        return Ok((om, out, factors));
    }
    let sf = square_free(&om)?;
    let (lo, hi) = (Rational::from(-1), Rational::from(1));
    for (idx, (g, k)) in sf.factors.iter().enumerate() {
        let on = count_real_roots(g, &lo, &hi, false)?;
        let bound = cauchy_bound(g);
        let real = count_real_roots(g, &-bound.clone(), &bound, false)?;
        let (rs, _) = find_roots_adaptive(g, precision_bits, None)?;
        let mut vals: Vec<Complex> = rs.roots.into_iter().map(|r| r.value).collect();
        // the `real` roots nearest the axis are real; of those, `on` lie on the segment
        vals.sort_by(|a, b| a.im.to_f64().abs().total_cmp(&b.im.to_f64().abs()));
        for v in vals.iter_mut().take(real) {
            v.im = Float::new(v.prec());
        }
        vals[..real].sort_by(|a, b| segment_distance(a).total_cmp(&segment_distance(b)));
        for (i, mut v) in vals.into_iter().enumerate() {
            v.set_prec(precision_bits);
            let on_segment = i < on;
            out.push(OmegaZero {
                value: v,
                mult: *k,
                on_segment,
                factor: idx,
            });
        }
        factors.push(g.clone());
    }
    out.sort_by(|a, b| {
        let (ar, ai) = a.value.to_f64();
        let (br, bi) = b.value.to_f64();
        ar.total_cmp(&br).then(ai.total_cmp(&bi))
    });
    Ok((om, out, factors))
}

#[derive(Clone, Debug, Serialize)]
pub struct AttractionSeries {
    pub zero: OmegaZero,
    pub real: bool,
    /// observable = n · min_k |z_j - z_{k,n}| over exceptional zeros.
    pub records: Vec<ConvergenceRecord>,
    /// max over the grid ≤ 10 × the value at the smallest n.
    pub bounded: bool,
    /// For real z_j: the nearest exceptional zero at the largest n is real.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_partner_at_max_n: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AttractionReport {
    pub series: Vec<AttractionSeries>,
    pub skipped: Vec<Skipped>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

/// Distance from each simple Ω-zero off [-1, 1] to the nearest exceptional zero.
pub fn attraction_record(family: &FamilySpec, n_list: &[usize], precision_bits: u32) -> Result<AttractionReport> {
    require_shifted_params(family)?;
    let prec = precision_bits;
    let (_, zeros, _) = omega_zeros(family, prec)?;
    let targets: Vec<OmegaZero> = zeros.into_iter().filter(|z| z.mult == 1 && !z.on_segment).collect();
    if targets.is_empty() {
        return Ok(AttractionReport {
            series: Vec::new(),
            skipped: Vec::new(),
            diagnostic: Some(format!("Ω has no simple zero off [-1, 1] for {family}")),
        });
    }
    let band = Float::with_val(64, Float::i_exp(1, -(prec as i32) / 4));
    let mut series: Vec<AttractionSeries> = targets
        .iter()
        .map(|z| AttractionSeries {
            real: z.value.im.is_zero(),
            zero: z.clone(),
            records: Vec::new(),
            bounded: true,
            real_partner_at_max_n: None,
        })
        .collect();
    let mut skipped = Vec::new();
    let mut last_partner_real: Vec<Option<bool>> = vec![None; series.len()];
    for &n in n_list {
        if !in_degree_set(&family.lambda, &family.mu, n) {
            skipped.push(Skipped {
                n,
                reason: "n ∉ ℕ_{λ,μ}".into(),
            });
            continue;
        }
        let (_, _, c) = classify_at(family, n, prec)?;
        if c.exceptional.is_empty() {
            skipped.push(Skipped {
                n,
                reason: "no exceptional zeros".into(),
            });
            continue;
        }
        for (si, s) in series.iter_mut().enumerate() {
            let mut best: Option<(Float, &Complex)> = None;
            for e in &c.exceptional {
                let d = s.zero.value.sub(&e.value).abs();
                if best.as_ref().is_none_or(|(b, _)| d < *b) {
                    best = Some((d, &e.value));
                }
            }
            let (d, partner) = best.expect("nonempty");
            last_partner_real[si] = Some(Float::with_val(64, partner.im.abs_ref()) <= band);
            let obs = Float::with_val(prec, d * n as u32);
            s.records.push(ConvergenceRecord::new(n, obs, Float::new(prec)));
        }
    }
    for (si, s) in series.iter_mut().enumerate() {
        if let Some(first) = s.records.first() {
            let limit = Float::with_val(prec, &first.observable * 10u32);
            s.bounded = s.records.iter().all(|r| r.observable <= limit);
        }
        if s.real {
            s.real_partner_at_max_n = last_partner_real[si];
        }
    }
    Ok(AttractionReport {
        series,
        skipped,
        diagnostic: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElectrostaticForm {
    /// (α+r)/(2(1-z)) - (β+r)/(2(1+z)) + 3z/(1-z²) + Σ_{k≠j} 1/(z-z_k)
    Stated,
    /// (α+r)/(2(1-z)) - (β+r1-r2)/(2(1+z)) + Σ_{k≠j} 1/(z-z_k), from the
    /// vanishing residue of P² W with W = (1-x)^{α+r}(1+x)^{β+r1-r2}/Ω².
    Derived,
}

#[derive(Clone, Debug, Serialize)]
pub struct ElectrostaticReport {
    pub form: ElectrostaticForm,
    pub zero: OmegaZero,
    #[serde(serialize_with = "ser_complex")]
    pub lhs: Complex,
    #[serde(serialize_with = "ser_complex")]
    pub rhs: Complex,
    #[serde(serialize_with = "ser_float")]
    pub residual: Float,
}

fn ser_complex<S: Serializer>(z: &Complex, s: S) -> std::result::Result<S::Ok, S::Error> {
    let d = decimal_digits(z.prec());
    s.collect_seq([fmt_float(&z.re, d), fmt_float(&z.im, d)])
}

fn recip_diff(z: &Complex, w: &Complex, prec: u32) -> Complex {
    let mut a = z.clone();
    a.set_prec(prec);
    let mut b = w.clone();
    b.set_prec(prec);
    a.sub(&b).recip()
}

/// |LHS - RHS| of the electrostatic identity at the j-th zero of Ω (ordering
/// of `omega_zeros`).
pub fn electrostatic_residual(
    spec: &ExceptionalSpec,
    j: usize,
    form: ElectrostaticForm,
    precision_bits: u32,
) -> Result<ElectrostaticReport> {
    let f = &spec.family;
    let prec = precision_bits;
    let (_, zeros, factors) = omega_zeros(f, prec)?;
    let zj = zeros
        .get(j)
        .ok_or_else(|| Error::Domain(format!("Ω has {} distinct zeros; index {j} is out of range", zeros.len())))?
        .clone();
    if zj.mult != 1 {
        return Err(Error::Domain(format!("z_{j} has multiplicity {}", zj.mult)));
    }
    let g = &factors[zj.factor];
    for e in [1i64, -1] {
        let (re, im) = zj.value.to_f64();
        if g.eval(&Rational::from(e)) == 0 && im == 0.0 && (re - e as f64).abs() < 1e-9 {
            return Err(Error::Domain(format!("z_{j} is the endpoint {e}")));
        }
    }
    let p = exceptional_jacobi(spec)?;
    let common = poly_gcd(g, &p);
    if common.deg() >= 1 {
        let (rs, _) = find_roots_adaptive(&common, prec, None)?;
        if rs.roots.iter().any(|r| r.value.sub(&zj.value).abs().to_f64() < 1e-6) {
            return Err(Error::Domain(format!("z_{j} is also a zero of P")));
        }
    }
    let c = classify_polynomial(spec, &p, prec)?;
    let wp = prec;
    let z = {
        let mut v = zj.value.clone();
        v.set_prec(wp);
        v
    };
    let mut lhs = Complex::zero(wp);
    for root in c.regular.iter().chain(&c.exceptional) {
        let t = recip_diff(&z, &root.value, wp).scale(&Float::with_val(wp, root.mult as u32));
        lhs = lhs.add(&t);
    }

    let (r1, r2, r) = (f.r1() as i64, f.r2() as i64, f.r() as i64);
    let a = Float::with_val(wp, Rational::from(&f.alpha + r));
    let b = match form {
        ElectrostaticForm::Stated => Float::with_val(wp, Rational::from(&f.beta + r)),
        ElectrostaticForm::Derived => Float::with_val(wp, Rational::from(&f.beta + r1) - r2),
    };
    let one_c = Complex::from_f64(wp, 1.0, 0.0);
    let one_minus = one_c.sub(&z);
    let one_plus = one_c.add(&z);
    let half = Float::with_val(wp, 0.5);
    let mut rhs = one_minus.recip().scale(&Float::with_val(wp, &a * &half));
    rhs = rhs.sub(&one_plus.recip().scale(&Float::with_val(wp, &b * &half)));
    if form == ElectrostaticForm::Stated {
        let three_z = z.scale(&Float::with_val(wp, 3));
        rhs = rhs.add(&three_z.div(&one_minus.mul(&one_plus)));
    }
    for (k, zk) in zeros.iter().enumerate() {
        if k == j {
            continue;
        }
        let t = recip_diff(&z, &zk.value, wp).scale(&Float::with_val(wp, zk.mult as u32));
        rhs = rhs.add(&t);
    }
    let residual = lhs.sub(&rhs).abs();
    Ok(ElectrostaticReport {
        form,
        zero: zj,
        lhs,
        rhs,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::polyalg::{int, rat};

    fn classical() -> FamilySpec {
        FamilySpec::new(Partition::empty(), Partition::empty(), int(0), int(0))
    }

    #[test]
    fn single_zero_ks_is_one_point_cdf() {
        // P_1^{(0,0)} = x: one zero at 0 where F = 1/2
        let spec = ExceptionalSpec::new(classical(), 1).unwrap();
        let ks = arcsine_distance(&spec, 128).unwrap();
        assert!((ks.to_f64() - 0.5).abs() < 1e-30);
    }

    #[test]
    fn classical_edge_scaling_improves() {
        let rep = mehler_heine_record(&classical(), 1, &[20, 80], Edge::Plus, 128).unwrap();
        assert_eq!(rep.records.len(), 2);
        assert!(rep.records[1].error < rep.records[0].error);
        let f = rep.functional_max_errors();
        assert!(f[1].1 < f[0].1, "{f:?}");
    }

    #[test]
    fn minus_edge_uses_beta_order() {
        let f = FamilySpec::new(Partition::empty(), Partition::empty(), int(0), rat(1, 2));
        let rep = mehler_heine_record(&f, 1, &[60], Edge::Minus, 128).unwrap();
        // j_{1/2,1} = π
        assert!((rep.records[0].target.to_f64() - std::f64::consts::PI).abs() < 1e-12);
        assert!(rep.records[0].error.to_f64() < 0.05);
    }

    #[test]
    fn derived_electrostatic_identity_small_instance() {
        // Ω = (9 - x)/4
        let f = FamilySpec::new(Partition::empty(), Partition::from_slice(&[1]), int(1), rat(7, 2));
        let spec = ExceptionalSpec::new(f, 3).unwrap();
        let rep = electrostatic_residual(&spec, 0, ElectrostaticForm::Derived, 128).unwrap();
        assert!(rep.residual.to_f64() < 1e-30, "{}", rep.residual);
        assert!(rep.zero.value.im.is_zero());
        let stated = electrostatic_residual(&spec, 0, ElectrostaticForm::Stated, 128).unwrap();
        assert!(stated.residual > rep.residual);
    }

    #[test]
    fn attraction_without_qualifying_zeros_is_diagnostic() {
        let rep = attraction_record(&classical(), &[10], 128).unwrap();
        assert!(rep.series.is_empty());
        assert!(rep.diagnostic.is_some());
    }
}
