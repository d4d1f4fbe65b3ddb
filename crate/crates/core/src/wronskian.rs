//! Generalized Jacobi polynomials Ω_{λ,μ} and the four-kind variant Ω_{M1,M2},
//! built from cleared determinants.

use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{MayaDiagram, Partition};
use crate::polyalg::{
    self, as_integer, det_auto, eigenfunction, factorial, integer_in, jacobi, pochhammer,
    wronskian_generic, Poly, QuasiRational,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub lambda: Partition,
    pub mu: Partition,
    #[serde(with = "polyalg::serde_rational")]
    pub alpha: Rational,
    #[serde(with = "polyalg::serde_rational")]
    pub beta: Rational,
}

impl FamilySpec {
    pub fn new(lambda: Partition, mu: Partition, alpha: Rational, beta: Rational) -> Self {
        FamilySpec {
            lambda,
            mu,
            alpha,
            beta,
        }
    }

    pub fn r1(&self) -> usize {
        self.lambda.length()
    }

    pub fn r2(&self) -> usize {
        self.mu.length()
    }

    pub fn r(&self) -> usize {
        self.r1() + self.r2()
    }

    /// |λ| + |μ|
    pub fn size(&self) -> usize {
        self.lambda.size() + self.mu.size()
    }

    pub fn n_seq(&self) -> Vec<usize> {
        self.lambda.degree_sequence()
    }

    pub fn m_seq(&self) -> Vec<usize> {
        self.mu.degree_sequence()
    }

    /// Largest entry of n_μ, 0 when μ is empty.
    pub fn m1(&self) -> usize {
        self.m_seq().first().copied().unwrap_or(0)
    }

    pub fn n1(&self) -> usize {
        self.n_seq().first().copied().unwrap_or(0)
    }

    pub fn with_params(&self, alpha: Rational, beta: Rational) -> FamilySpec {
        FamilySpec::new(self.lambda.clone(), self.mu.clone(), alpha, beta)
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "λ={} μ={} α={} β={}",
            self.lambda, self.mu, self.alpha, self.beta
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourTypeSpec {
    #[serde(rename = "M1")]
    pub m1: MayaDiagram,
    #[serde(rename = "M2")]
    pub m2: MayaDiagram,
    #[serde(with = "polyalg::serde_rational")]
    pub alpha: Rational,
    #[serde(with = "polyalg::serde_rational")]
    pub beta: Rational,
}

/// One failed membership test: clause name, 1-based indices and the value hit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: String,
    pub i: usize,
    pub j: Option<usize>,
    #[serde(with = "polyalg::serde_rational")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub no_degree_reduction: bool,
    pub degree_violations: Vec<Violation>,
    pub independent_entries: bool,
    pub independence_violations: Vec<Violation>,
    /// α > -1, β > m_1 and λ even.
    pub orthogonality_regime: bool,
    pub endpoint_plus_ok: bool,
    pub endpoint_minus_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceptional: Option<ExceptionalAdmissibility>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalAdmissibility {
    pub n: usize,
    pub s: i64,
    pub n_in_degree_set: bool,
    pub no_degree_reduction: bool,
    pub no_degree_reduction_bis: bool,
    pub independent_entries: bool,
    pub violations: Vec<Violation>,
}

impl AdmissibilityReport {
    /// Both generalized-polynomial conditions hold.
    pub fn gjp_ok(&self) -> bool {
        self.no_degree_reduction && self.independent_entries
    }

    /// The exceptional-polynomial conditions (2XJP and 1XJP) and n ∈ ℕ_{λ,μ}.
    pub fn xjp_ok(&self) -> bool {
        match &self.exceptional {
            Some(e) => e.n_in_degree_set && e.no_degree_reduction && e.independent_entries,
            None => false,
        }
    }
}

/// q ∈ {-1, ..., -k}
fn in_neg_range(q: &Rational, k: i64) -> bool {
    integer_in(q, -k, -1)
}

pub fn check_admissibility(spec: &FamilySpec, n: Option<usize>) -> AdmissibilityReport {
    let ns = spec.n_seq();
    let ms = spec.m_seq();
    let (a, b) = (&spec.alpha, &spec.beta);
    let ab = Rational::from(a + b);
    let amb = Rational::from(a - b);

    let mut degree_violations = Vec::new();
    for (i, &ni) in ns.iter().enumerate() {
        let v = Rational::from(&ab + ni as u64);
        if in_neg_range(&v, ni as i64) {
            degree_violations.push(Violation {
                clause: "alpha+beta+n_i".into(),
                i: i + 1,
                j: None,
                value: v,
            });
        }
    }
    for (i, &mi) in ms.iter().enumerate() {
        let v = Rational::from(&amb + mi as u64);
        if in_neg_range(&v, mi as i64) {
            degree_violations.push(Violation {
                clause: "alpha-beta+m_i".into(),
                i: i + 1,
                j: None,
                value: v,
            });
        }
    }

    let mut independence_violations = Vec::new();
    for (i, &ni) in ns.iter().enumerate() {
        for (j, &mj) in ms.iter().enumerate() {
            let v = Rational::from(mj as i64 - ni as i64);
            if *b == v {
                independence_violations.push(Violation {
                    clause: "beta=m_j-n_i".into(),
                    i: i + 1,
                    j: Some(j + 1),
                    value: v,
                });
            }
        }
    }

    let n1 = spec.n1() as i64;
    let m1 = spec.m1() as i64;
    let mut plus_ok = !integer_in(a, -n1.max(m1), -1);
    for &ni in &ns {
        for &mj in &ms {
            if *a == -(ni as i64) - mj as i64 - 1 {
                plus_ok = false;
            }
        }
    }
    let minus_ok = !integer_in(b, -n1, m1) || (*b == 0 && (ns.is_empty() || ms.is_empty()));

    let orthogonality_regime = *a > -1 && *b > m1 && spec.lambda.is_even();

    let exceptional = n.map(|n| exceptional_conditions(spec, n));

    AdmissibilityReport {
        no_degree_reduction: degree_violations.is_empty(),
        degree_violations,
        independent_entries: independence_violations.is_empty(),
        independence_violations,
        orthogonality_regime,
        endpoint_plus_ok: plus_ok,
        endpoint_minus_ok: minus_ok,
        exceptional,
    }
}

fn exceptional_conditions(spec: &FamilySpec, n: usize) -> ExceptionalAdmissibility {
    let ms = spec.m_seq();
    let r = spec.r() as i64;
    let s = n as i64 - spec.size() as i64 + spec.r1() as i64;
    let in_set = crate::exceptional::in_degree_set(&spec.lambda, &spec.mu, n);
    let ab = Rational::from(&spec.alpha + &spec.beta);
    let mut violations = Vec::new();
    let mut nd = true;
    let mut nd_bis = true;
    let mut indep = true;
    if s >= 0 {
        let v = Rational::from(&ab + s);
        if in_neg_range(&v, s) {
            nd = false;
            violations.push(Violation {
                clause: "alpha+beta+s".into(),
                i: 0,
                j: None,
                value: v.clone(),
            });
        }
        if in_neg_range(&v, s + 2 * r) {
            nd_bis = false;
            if nd {
                violations.push(Violation {
                    clause: "alpha+beta+s (extended)".into(),
                    i: 0,
                    j: None,
                    value: v,
                });
            }
        }
        for (j, &mj) in ms.iter().enumerate() {
            let v = Rational::from(mj as i64 - s);
            if spec.beta == v {
                indep = false;
                violations.push(Violation {
                    clause: "beta=m_j-s".into(),
                    i: 0,
                    j: Some(j + 1),
                    value: v,
                });
            }
        }
    }
    let base = check_admissibility(spec, None);
    ExceptionalAdmissibility {
        n,
        s,
        n_in_degree_set: in_set,
        no_degree_reduction: nd && base.no_degree_reduction,
        no_degree_reduction_bis: nd_bis && base.no_degree_reduction,
        independent_entries: indep && base.independent_entries,
        violations,
    }
}

/// (1+x)^k
fn one_plus_pow(k: usize) -> Poly {
    Poly::shifted_x_pow(1, k)
}

/// (1-x)^k
fn one_minus_pow(k: usize) -> Poly {
    Poly::from_i64(&[1, -1]).pow(k)
}

/// Cleared column entries for each eigenfunction kind at derivative order i,
/// given the total matrix size r.
pub(crate) fn kind1_entry(n: usize, a: &Rational, b: &Rational, i: usize) -> Poly {
    polyalg::jacobi_derivative_closed(n, a, b, i).expand()
}

pub(crate) fn kind2_entry(m: usize, a: &Rational, b: &Rational, i: usize, r: usize) -> Poly {
    // d_{m,i} = (m-β-i+1)_i
    let start = Rational::from(m as i64 - i as i64 + 1) - b;
    let d = pochhammer(&start, i);
    if d == 0 {
        return Poly::zero();
    }
    let ai = Rational::from(a + i as u64);
    let bi = Rational::from(-b) - i as u64;
    let p = jacobi(m, &ai, &bi).scale(&d);
    &one_plus_pow(r - 1 - i) * &p
}

pub(crate) fn kind3_entry(m: usize, a: &Rational, b: &Rational, i: usize, r: usize) -> Poly {
    // (-1)^i (m-α-i+1)_i
    let start = Rational::from(m as i64 - i as i64 + 1) - a;
    let mut e = pochhammer(&start, i);
    if i % 2 == 1 {
        e = -e;
    }
    if e == 0 {
        return Poly::zero();
    }
    let ai = Rational::from(-a) - i as u64;
    let bi = Rational::from(b + i as u64);
    let p = jacobi(m, &ai, &bi).scale(&e);
    &one_minus_pow(r - 1 - i) * &p
}

pub(crate) fn kind4_entry(n: usize, a: &Rational, b: &Rational, i: usize, r: usize) -> Poly {
    // (-2)^i (n+1)_i
    let mut g = pochhammer(&Rational::from(n as u64 + 1), i) << i as u32;
    if i % 2 == 1 {
        g = -g;
    }
    let ai = Rational::from(-a) - i as u64;
    let bi = Rational::from(-b) - i as u64;
    let p = jacobi(n + i, &ai, &bi).scale(&g);
    let k = r - 1 - i;
    &(&one_minus_pow(k) * &one_plus_pow(k)) * &p
}

fn divide_clearing(det: Poly, plus: usize, minus: usize) -> Result<Poly> {
    let d = det
        .div_linear_pow(&Rational::from(-1), plus)
        .ok_or_else(|| Error::Internal(format!("determinant not divisible by (1+x)^{plus}")))?;
    let d = d
        .div_linear_pow(&Rational::from(1), minus)
        .ok_or_else(|| Error::Internal(format!("determinant not divisible by (1-x)^{minus}")))?;
    // (x-1)^k = (-1)^k (1-x)^k
    Ok(if minus % 2 == 1 { -d } else { d })
}

/// One Wronskian entry: eigenfunction kind (1..=4) and Jacobi degree.
pub type Column = (u8, usize);

/// Prefactored Wronskian (1+x)^{(β+r1+r3)(r2+r4)}(1-x)^{(α+r1+r2)(r3+r4)} Wr[...]
/// for columns in the given order, where r_k counts the columns of kind k.
pub fn omega_columns(cols: &[Column], a: &Rational, b: &Rational) -> Result<Poly> {
    let r = cols.len();
    if r == 0 {
        return Ok(Poly::one());
    }
    let rows = cleared_matrix(cols, a, b, r);
    let (plus, minus) = clearing_exponents(cols);
    divide_clearing(det_auto(rows), plus, minus)
}

/// Cleared matrix with `nrows` rows (derivative orders 0..nrows) and size
/// parameter `size` for the clearing powers.
pub(crate) fn cleared_matrix(cols: &[Column], a: &Rational, b: &Rational, size: usize) -> Vec<Vec<Poly>> {
    (0..size)
        .map(|i| {
            cols.iter()
                .map(|&(kind, deg)| match kind {
                    1 => kind1_entry(deg, a, b, i),
                    2 => kind2_entry(deg, a, b, i, size),
                    3 => kind3_entry(deg, a, b, i, size),
                    4 => kind4_entry(deg, a, b, i, size),
                    _ => panic!("eigenfunction kind must be 1..=4"),
                })
                .collect()
        })
        .collect()
}

/// Powers of (1+x) and (1-x) removed after clearing.
pub(crate) fn clearing_exponents(cols: &[Column]) -> (usize, usize) {
    let count = |k: u8| cols.iter().filter(|c| c.0 == k).count();
    let k24 = count(2) + count(4);
    let k34 = count(3) + count(4);
    (k24 * k24.saturating_sub(1), k34 * k34.saturating_sub(1))
}

/// Ω for arbitrary distinct kind-1 degrees n and kind-2 degrees m, in the
/// given column order.
pub fn omega_sequences(ns: &[usize], ms: &[usize], a: &Rational, b: &Rational) -> Result<Poly> {
    let cols: Vec<Column> = ns
        .iter()
        .map(|&n| (1u8, n))
        .chain(ms.iter().map(|&m| (2u8, m)))
        .collect();
    omega_columns(&cols, a, b)
}

/// Ω_{λ,μ}^{(α,β)} by the cleared determinant.
pub fn omega(spec: &FamilySpec) -> Result<Poly> {
    omega_sequences(&spec.n_seq(), &spec.m_seq(), &spec.alpha, &spec.beta)
}

/// Independent route: prefactor times the Wronskian from repeated differentiation.
pub fn omega_via_wronskian(spec: &FamilySpec) -> Result<Poly> {
    let cols: Vec<Column> = spec
        .n_seq()
        .iter()
        .map(|&n| (1u8, n))
        .chain(spec.m_seq().iter().map(|&m| (2u8, m)))
        .collect();
    omega_columns_via_wronskian(&cols, &spec.alpha, &spec.beta)
}

/// Oracle for omega_columns through wronskian_generic.
pub fn omega_columns_via_wronskian(cols: &[Column], a: &Rational, b: &Rational) -> Result<Poly> {
    if cols.is_empty() {
        return Ok(Poly::one());
    }
    let fs: Vec<QuasiRational> = cols.iter().map(|&(k, d)| eigenfunction(k, d, a, b)).collect();
    let count = |k: u8| cols.iter().filter(|c| c.0 == k).count() as u64;
    let (r1, r2, r3, r4) = (count(1), count(2), count(3), count(4));
    let q = Rational::from(b + (r1 + r3)) * (r2 + r4);
    let p = Rational::from(a + (r1 + r2)) * (r3 + r4);
    wronskian_generic(&fs)
        .with_factor(&p, &q)
        .to_poly()
        .ok_or_else(|| Error::Internal("prefactored wronskian is not a polynomial".into()))
}

/// Ω̃ built from kinds 1 and 3 with prefactor (1-x)^{(α+r1)r2}.
pub fn omega_tilde(spec: &FamilySpec) -> Result<Poly> {
    let cols: Vec<Column> = spec
        .n_seq()
        .iter()
        .map(|&n| (1u8, n))
        .chain(spec.m_seq().iter().map(|&m| (3u8, m)))
        .collect();
    omega_columns(&cols, &spec.alpha, &spec.beta)
}

impl FourTypeSpec {
    /// Columns ordered kind 1, 2, 3, 4.
    pub fn columns(&self) -> Vec<Column> {
        let mut cols: Vec<Column> = self.m1.pos.iter().map(|&v| (1u8, v)).collect();
        cols.extend(self.m2.pos.iter().map(|&v| (2u8, v)));
        cols.extend(self.m2.neg.iter().map(|&v| (3u8, v)));
        cols.extend(self.m1.neg.iter().map(|&v| (4u8, v)));
        cols
    }
}

/// Ω_{M1,M2}^{(α,β)}; columns ordered kind 1, 2, 3, 4.
pub fn omega_four(spec: &FourTypeSpec) -> Result<Poly> {
    omega_columns(&spec.columns(), &spec.alpha, &spec.beta)
}

/// Oracle for omega_four through wronskian_generic.
pub fn omega_four_via_wronskian(spec: &FourTypeSpec) -> Result<Poly> {
    omega_columns_via_wronskian(&spec.columns(), &spec.alpha, &spec.beta)
}

/// Monic normalization; the zero polynomial is degenerate.
pub fn monic(p: &Poly) -> Result<Poly> {
    p.monic()
        .ok_or_else(|| Error::Degenerate("zero polynomial has no monic form".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeLc {
    pub degree: usize,
    #[serde(with = "polyalg::serde_rational")]
    pub lc: Rational,
}

/// Degree |λ|+|μ| and the closed-form leading coefficient.
pub fn predicted_degree_lc(spec: &FamilySpec) -> Result<DegreeLc> {
    let report = check_admissibility(spec, None);
    if !report.gjp_ok() {
        return Err(Error::Admissibility {
            message: "degree/leading coefficient law needs no degree reduction and independent entries".into(),
            report: Some(Box::new(report)),
        });
    }
    Ok(DegreeLc {
        degree: spec.size(),
        lc: leading_coefficient_formula(&spec.n_seq(), &spec.m_seq(), &spec.alpha, &spec.beta),
    })
}

/// Leading-coefficient product for arbitrary degree sequences.
pub fn leading_coefficient_formula(ns: &[usize], ms: &[usize], a: &Rational, b: &Rational) -> Rational {
    let mut lc = Rational::from(1);
    let ab1 = Rational::from(a + b) + 1u32;
    let amb1 = Rational::from(a - b) + 1u32;
    let mut pow2 = 0u32;
    for &n in ns {
        lc *= pochhammer(&Rational::from(&ab1 + n as u64), n);
        lc /= factorial(n);
        pow2 += n as u32;
    }
    for &m in ms {
        lc *= pochhammer(&Rational::from(&amb1 + m as u64), m);
        lc /= factorial(m);
        pow2 += m as u32;
    }
    lc >>= pow2;
    for i in 0..ns.len() {
        for j in i + 1..ns.len() {
            lc *= ns[j] as i64 - ns[i] as i64;
        }
    }
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            lc *= ms[j] as i64 - ms[i] as i64;
        }
    }
    for &n in ns {
        for &m in ms {
            lc *= Rational::from(m as i64 - n as i64) - b;
        }
    }
    lc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionReport {
    #[serde(with = "polyalg::serde_rational")]
    pub value_plus: Rational,
    #[serde(with = "polyalg::serde_rational")]
    pub value_minus: Rational,
    pub zeros_in_closed_interval: usize,
}

pub fn omega_region_report(spec: &FamilySpec) -> Result<RegionReport> {
    let p = omega(spec)?;
    if p.is_zero() {
        return Err(Error::Degenerate(format!("Ω vanishes identically for {spec}")));
    }
    let count = crate::zeros::count_real_roots(&p, &Rational::from(-1), &Rational::from(1), false)?;
    Ok(RegionReport {
        value_plus: p.eval(&Rational::from(1)),
        value_minus: p.eval(&Rational::from(-1)),
        zeros_in_closed_interval: count,
    })
}

/// Whether every Maya-diagram condition for Ω_{M1,M2} holds.
pub fn four_type_admissible(spec: &FourTypeSpec) -> bool {
    let (a, b) = (&spec.alpha, &spec.beta);
    let bad = |v: Rational, k: usize| in_neg_range(&v, k as i64);
    let ab = Rational::from(a + b);
    let amb = Rational::from(a - b);
    for &n in &spec.m1.pos {
        if bad(Rational::from(&ab + n as u64), n) {
            return false;
        }
    }
    for &m in &spec.m2.pos {
        if bad(Rational::from(&amb + m as u64), m) {
            return false;
        }
    }
    for &m in &spec.m2.neg {
        if bad(Rational::from(-&amb) + m as u64, m) {
            return false;
        }
    }
    for &n in &spec.m1.neg {
        if bad(Rational::from(-&ab) + n as u64, n) {
            return false;
        }
    }
    // β ≠ m_j - n_i, β ≠ n'_j - m'_i, α ≠ m'_j - n_i, α ≠ n'_j - m_i
    let pairs = [
        (&spec.m1.pos, &spec.m2.pos, b),
        (&spec.m2.neg, &spec.m1.neg, b),
        (&spec.m1.pos, &spec.m2.neg, a),
        (&spec.m2.pos, &spec.m1.neg, a),
    ];
    for (lhs, rhs, par) in pairs {
        for &x in lhs.iter() {
            for &y in rhs.iter() {
                if as_integer(par) == Some(y as i64 - x as i64) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{int, rat};

    fn fam(l: &[usize], m: &[usize], a: Rational, b: Rational) -> FamilySpec {
        FamilySpec::new(Partition::from_slice(l), Partition::from_slice(m), a, b)
    }

    #[test]
    fn single_row_is_jacobi() {
        assert_eq!(omega(&fam(&[], &[], int(0), int(0))).unwrap(), Poly::one());
        for n in 1..7 {
            let s = fam(&[n], &[], rat(1, 3), rat(-2, 5));
            assert_eq!(omega(&s).unwrap(), jacobi(n, &s.alpha, &s.beta));
        }
        let s = fam(&[], &[4], rat(1, 3), rat(2, 5));
        assert_eq!(omega(&s).unwrap(), jacobi(4, &rat(1, 3), &rat(-2, 5)));
    }

    #[test]
    fn closed_form_first_example() {
        let s = fam(&[1, 1], &[1], int(1), int(1));
        let want = Poly::shifted_x_pow(1, 3).scale(&int(-15));
        assert_eq!(omega(&s).unwrap(), want);
        let pl = predicted_degree_lc(&s).unwrap();
        assert_eq!((pl.degree, pl.lc), (3, int(-15)));
    }

    #[test]
    fn oracle_agrees_small() {
        let specs = [
            fam(&[2, 1], &[1], rat(1, 2), rat(7, 3)),
            fam(&[1], &[2, 2], rat(-1, 3), rat(5, 2)),
            fam(&[3], &[1, 1], int(2), rat(1, 4)),
        ];
        for s in specs {
            assert_eq!(omega(&s).unwrap(), omega_via_wronskian(&s).unwrap(), "{s}");
        }
    }

    #[test]
    fn admissibility_examples() {
        let r = check_admissibility(&fam(&[], &[], int(-3), int(-3)), Some(4));
        assert!(r.gjp_ok() && r.endpoint_plus_ok && r.endpoint_minus_ok);
        let r = check_admissibility(&fam(&[1, 1], &[1], int(1), int(1)), None);
        // n = (2,1), m = (1): m_j - n_i ∈ {-1, 0}
        assert!(r.independent_entries);
        let r = check_admissibility(&fam(&[1, 1], &[1], int(1), int(-1)), None);
        assert!(!r.independent_entries);
        assert_eq!(r.independence_violations[0].i, 1);
        assert_eq!(r.independence_violations[0].j, Some(1));
        let r = check_admissibility(&fam(&[2], &[2], rat(5, 2), rat(-3, 2)), None);
        assert!(r.no_degree_reduction);
    }

    #[test]
    fn region_report_examples() {
        let r = omega_region_report(&fam(&[1, 1], &[1], int(1), int(1))).unwrap();
        assert_eq!(r.value_minus, 0);
        assert_eq!(r.zeros_in_closed_interval, 3);
        let r = omega_region_report(&fam(&[], &[], int(0), int(0))).unwrap();
        assert_eq!((r.value_plus, r.value_minus, r.zeros_in_closed_interval), (int(1), int(1), 0));
    }

    #[test]
    fn omega_four_matches_oracle() {
        let cases = [
            (MayaDiagram::from_slices(&[1], &[3, 0]), MayaDiagram::from_slices(&[2, 0], &[1])),
            (MayaDiagram::from_slices(&[0], &[]), MayaDiagram::from_slices(&[3], &[2])),
            (MayaDiagram::from_slices(&[], &[4]), MayaDiagram::from_slices(&[2], &[])),
        ];
        for (m1, m2) in cases {
            let s = FourTypeSpec {
                m1,
                m2,
                alpha: rat(1, 3),
                beta: rat(2, 7),
            };
            assert_eq!(omega_four(&s).unwrap(), omega_four_via_wronskian(&s).unwrap());
        }
    }

    #[test]
    fn omega_tilde_reflection_small() {
        let s = fam(&[1, 1], &[1], int(1), int(1));
        let lhs = omega(&s).unwrap().compose_neg();
        let t = omega_tilde(&s.with_params(s.beta.clone(), s.alpha.clone())).unwrap();
        // (-1)^{|λ|+|μ|+r1 r2} = (-1)^{3+2}
        assert_eq!(lhs, -t);
    }
}
