//! Exceptional Jacobi polynomials P_{λ,μ,n}^{(α,β)}: degree sets, construction,
//! cofactor expansion, the weight and the identity suite.

mod identities;
mod quadrature;
mod suite;

pub use identities::{
    verify_identity, xm_jacobi, xm_constant_formula, type23_constant_formula, IdentityCase,
    IdentityInput, IdentityReport, RevisitedCase, ShiftStep,
};
pub use quadrature::{gauss_legendre, orthogonality_check, OrthogonalityReport};
pub use suite::{identity_grid, run_suite, CaseTally, Counterexample, GridSize, SuiteReport};

use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyalg::{self, det_auto, Poly};
use crate::wronskian::{
    check_admissibility, cleared_matrix, clearing_exponents, omega, omega_columns, Column,
    FamilySpec,
};

/// Above this value of s the cofactor route replaces the full determinant.
const COFACTOR_THRESHOLD: i64 = 40;

/// n ∈ ℕ_{λ,μ}: n ≥ |λ|+|μ|-r1 and n-|λ|-|μ| ≠ λ_j - j.
pub fn in_degree_set(lambda: &Partition, mu: &Partition, n: usize) -> bool {
    degree_set_violation(lambda, mu, n).is_none()
}

fn degree_set_violation(lambda: &Partition, mu: &Partition, n: usize) -> Option<String> {
    let size = (lambda.size() + mu.size()) as i64;
    let r1 = lambda.length() as i64;
    let n = n as i64;
    if n < size - r1 {
        return Some(format!("n = {n} is below |λ|+|μ|-r1 = {}", size - r1));
    }
    for (j, &lj) in lambda.parts().iter().enumerate() {
        let j1 = j as i64 + 1;
        if n - size == lj as i64 - j1 {
            return Some(format!("n-|λ|-|μ| = {} equals λ_{j1} - {j1}", n - size));
        }
    }
    None
}

/// All n ≤ upto in ℕ_{λ,μ}, ascending.
pub fn degree_set(lambda: &Partition, mu: &Partition, upto: usize) -> Vec<usize> {
    (0..=upto).filter(|&n| in_degree_set(lambda, mu, n)).collect()
}

/// The |λ|+|μ| degrees missing from ℕ_{λ,μ}.
pub fn exceptional_degrees(lambda: &Partition, mu: &Partition) -> Vec<usize> {
    let upto = lambda.size() + mu.size() + lambda.first() + 1;
    (0..=upto).filter(|&n| !in_degree_set(lambda, mu, n)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalSpec {
    pub family: FamilySpec,
    pub n: usize,
}

impl ExceptionalSpec {
    /// Checks n ∈ ℕ_{λ,μ}.
    pub fn new(family: FamilySpec, n: usize) -> Result<Self> {
        if let Some(msg) = degree_set_violation(&family.lambda, &family.mu, n) {
            return Err(Error::Domain(format!("n ∉ ℕ_{{λ,μ}}: {msg}")));
        }
        Ok(ExceptionalSpec { family, n })
    }

    /// s = n - |λ| - |μ| + r1
    pub fn s(&self) -> usize {
        (self.n + self.family.r1())
            .checked_sub(self.family.size())
            .expect("n ∈ ℕ_{λ,μ} implies s ≥ 0")
    }

    fn columns(&self, second_kind: u8) -> Vec<Column> {
        let mut cols: Vec<Column> = self.family.n_seq().into_iter().map(|v| (1u8, v)).collect();
        cols.extend(self.family.m_seq().into_iter().map(|v| (second_kind, v)));
        cols.push((1, self.s()));
        cols
    }
}

impl std::fmt::Display for ExceptionalSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} n={}", self.family, self.n)
    }
}

fn require_admissible(spec: &ExceptionalSpec) -> Result<()> {
    if let Some(msg) = degree_set_violation(&spec.family.lambda, &spec.family.mu, spec.n) {
        return Err(Error::Domain(format!("n ∉ ℕ_{{λ,μ}}: {msg}")));
    }
    let report = check_admissibility(&spec.family, Some(spec.n));
    if !report.xjp_ok() {
        return Err(Error::Admissibility {
            message: format!("exceptional conditions fail for {spec}"),
            report: Some(Box::new(report)),
        });
    }
    Ok(())
}

/// P_{λ,μ,n}^{(α,β)} = (1+x)^{(β+r1+1)r2} Wr[f_1, ..., f_r, P_s^{(α,β)}].
pub fn exceptional_jacobi(spec: &ExceptionalSpec) -> Result<Poly> {
    require_admissible(spec)?;
    if spec.s() as i64 > COFACTOR_THRESHOLD {
        exceptional_by_cofactors(spec)
    } else {
        exceptional_by_determinant(spec)
    }
}

/// Full (r+1)×(r+1) cleared determinant.
pub fn exceptional_by_determinant(spec: &ExceptionalSpec) -> Result<Poly> {
    let f = &spec.family;
    omega_columns(&spec.columns(2), &f.alpha, &f.beta)
}

/// Σ_k Q_k · d^k/dx^k P_s^{(α,β)}.
pub fn exceptional_by_cofactors(spec: &ExceptionalSpec) -> Result<Poly> {
    let f = &spec.family;
    let q = cofactors(spec)?;
    let s = spec.s();
    let mut acc = Poly::zero();
    for (k, qk) in q.iter().enumerate() {
        if k > s || qk.is_zero() {
            continue;
        }
        let d = polyalg::jacobi_derivative_closed(s, &f.alpha, &f.beta, k).expand();
        acc = &acc + &(qk * &d);
    }
    Ok(acc)
}

/// Cofactors Q_0..Q_r of the last column.
pub fn cofactor_q(spec: &ExceptionalSpec) -> Result<Vec<Poly>> {
    require_admissible(spec)?;
    cofactors(spec)
}

fn cofactors(spec: &ExceptionalSpec) -> Result<Vec<Poly>> {
    let f = &spec.family;
    let cols = spec.columns(2);
    let size = cols.len();
    let r = size - 1;
    let fixed = &cols[..r];
    let rows = cleared_matrix(fixed, &f.alpha, &f.beta, size);
    let (plus, _) = clearing_exponents(&cols);
    let minus_one = Rational::from(-1);
    let mut out = Vec::with_capacity(size);
    for k in 0..size {
        let minor: Vec<Vec<Poly>> = rows
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, row)| row.clone())
            .collect();
        let d = det_auto(minor);
        let d = d.div_linear_pow(&minus_one, plus).ok_or_else(|| {
            Error::Internal(format!("cofactor {k} not divisible by (1+x)^{plus}"))
        })?;
        out.push(if (k + r) % 2 == 1 { -d } else { d });
    }
    Ok(out)
}

/// P̄_{λ,μ,n}^{(α,β)} = (1-x)^{(α+r1+1)r2} Wr[f̄_1, ..., f̄_r, P_s^{(α,β)}] with
/// kind-3 functions in place of kind 2.
pub fn exceptional_bar(spec: &ExceptionalSpec) -> Result<Poly> {
    let f = &spec.family;
    omega_columns(&spec.columns(3), &f.alpha, &f.beta)
}

/// P̃_{λ,μ,n}^{(α,β)} = (1+x)^{(β+r1)(r2+1)} Wr[f_1, ..., f_r, (1+x)^{-β}P_s^{(α,-β)}]
/// with s = n - |λ| - |μ| + r2.
pub fn exceptional_tilde(family: &FamilySpec, n: usize) -> Result<Poly> {
    let s = (n + family.r2())
        .checked_sub(family.size())
        .ok_or_else(|| Error::Domain("n - |λ| - |μ| + r2 is negative".into()))?;
    let mut cols: Vec<Column> = family.n_seq().into_iter().map(|v| (1u8, v)).collect();
    cols.extend(family.m_seq().into_iter().map(|v| (2u8, v)));
    cols.push((2, s));
    omega_columns(&cols, &family.alpha, &family.beta)
}

/// Sign (-1)^σ relating the appended column to the degree-sorted λ̃.
pub fn augmentation_sign(spec: &ExceptionalSpec) -> i32 {
    let s = spec.s();
    let below = spec.family.n_seq().iter().filter(|&&v| v < s).count();
    if (spec.family.r2() + below).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// λ̃ with degree sequence n_λ ∪ {s}.
pub fn augmented_partition(spec: &ExceptionalSpec) -> Result<Partition> {
    let mut seq = spec.family.n_seq();
    seq.push(spec.s());
    seq.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_degree_sequence(&seq)
}

/// Exponents of the weight (1-x)^a (1+x)^b / Ω².
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightParams {
    pub family: FamilySpec,
    #[serde(with = "polyalg::serde_rational")]
    pub exp_minus: Rational,
    #[serde(with = "polyalg::serde_rational")]
    pub exp_plus: Rational,
}

impl WeightParams {
    pub fn new(family: FamilySpec) -> Self {
        let r1 = family.r1() as i64;
        let r2 = family.r2() as i64;
        let exp_minus = Rational::from(&family.alpha + (r1 + r2));
        let exp_plus = Rational::from(&family.beta + (r1 - r2));
        WeightParams {
            family,
            exp_minus,
            exp_plus,
        }
    }
}

/// Precomputed weight: Ω is built once.
pub struct Weight {
    params: WeightParams,
    omega: Poly,
}

impl Weight {
    pub fn new(params: WeightParams) -> Result<Self> {
        let omega = omega(&params.family)?;
        if omega.is_zero() {
            return Err(Error::Degenerate("Ω vanishes identically".into()));
        }
        Ok(Weight { params, omega })
    }

    pub fn eval(&self, x: &Float) -> Result<Float> {
        let prec = x.prec();
        if *x <= -1 || *x >= 1 {
            return Err(Error::Domain(format!("weight argument {x} outside (-1,1)")));
        }
        let om = self.omega.eval_float(x);
        if om.is_zero() {
            return Err(Error::Domain(format!("weight has a pole at {x}")));
        }
        let one_minus = Float::with_val(prec, 1 - x);
        let one_plus = Float::with_val(prec, 1 + x);
        let a = Float::with_val(prec, &self.params.exp_minus);
        let b = Float::with_val(prec, &self.params.exp_plus);
        let log = Float::with_val(prec, one_minus.ln() * &a) + Float::with_val(prec, one_plus.ln() * &b);
        let num = log.exp();
        Ok(num / om.square())
    }
}

/// (1-x)^{α+r1+r2}(1+x)^{β+r1-r2} / Ω(x)^2
pub fn weight_eval(w: &WeightParams, x: &Float) -> Result<Float> {
    Weight::new(w.clone())?.eval(x)
}

/// Leading coefficient of P_{λ,μ,n} predicted from the augmented degree sequence.
pub fn predicted_leading_coefficient(spec: &ExceptionalSpec) -> Rational {
    let f = &spec.family;
    let mut ns = f.n_seq();
    ns.push(spec.s());
    // the formula orders columns n_λ, s, n_μ; P has s last
    let lc = crate::wronskian::leading_coefficient_formula(&ns, &f.m_seq(), &f.alpha, &f.beta);
    if f.r2() % 2 == 1 {
        -lc
    } else {
        lc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{int, jacobi, rat};
    use crate::wronskian::{omega_columns_via_wronskian, omega_sequences};

    fn fam(l: &[usize], m: &[usize], a: Rational, b: Rational) -> FamilySpec {
        FamilySpec::new(Partition::from_slice(l), Partition::from_slice(m), a, b)
    }

    #[test]
    fn degree_set_examples() {
        let e = Partition::empty();
        assert_eq!(degree_set(&e, &Partition::from_slice(&[1, 1, 1]), 6), vec![3, 4, 5, 6]);
        assert_eq!(degree_set(&e, &e, 4), vec![0, 1, 2, 3, 4]);
        assert_eq!(degree_set(&Partition::from_slice(&[2]), &e, 6), vec![1, 2, 4, 5, 6]);
    }

    #[test]
    fn exceptional_degree_count() {
        for (l, m) in [(vec![3, 1, 1], vec![3, 3]), (vec![2, 2], vec![1]), (vec![], vec![4, 1])] {
            let (l, m) = (Partition::from_slice(&l), Partition::from_slice(&m));
            assert_eq!(exceptional_degrees(&l, &m).len(), l.size() + m.size());
        }
    }

    #[test]
    fn classical_reduction() {
        for n in 0..8 {
            let spec = ExceptionalSpec::new(fam(&[], &[], rat(1, 3), rat(3, 4)), n).unwrap();
            assert_eq!(exceptional_jacobi(&spec).unwrap(), jacobi(n, &rat(1, 3), &rat(3, 4)));
        }
    }

    #[test]
    fn matches_wronskian_oracle() {
        let spec = ExceptionalSpec::new(fam(&[], &[1, 1], rat(1, 2), int(3)), 2).unwrap();
        let p = exceptional_jacobi(&spec).unwrap();
        assert_eq!(p.degree(), Some(2));
        let cols = spec.columns(2);
        assert_eq!(p, omega_columns_via_wronskian(&cols, &rat(1, 2), &int(3)).unwrap());
    }

    #[test]
    fn augmented_route_sign() {
        let specs = [
            ExceptionalSpec::new(fam(&[2, 1], &[1], rat(1, 2), rat(7, 3)), 6).unwrap(),
            ExceptionalSpec::new(fam(&[3, 1, 1], &[3, 3], int(0), rat(1, 2)), 12).unwrap(),
            ExceptionalSpec::new(fam(&[2], &[2, 1], rat(-1, 3), rat(9, 2)), 4).unwrap(),
        ];
        for spec in specs {
            let lt = augmented_partition(&spec).unwrap();
            let mut ns = spec.family.n_seq();
            ns.push(spec.s());
            ns.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(lt.degree_sequence().len(), ns.len().min(lt.degree_sequence().len()));
            let via = omega_sequences(&ns, &spec.family.m_seq(), &spec.family.alpha, &spec.family.beta)
                .unwrap();
            let direct = exceptional_jacobi(&spec).unwrap();
            let want = if augmentation_sign(&spec) == 1 { via } else { -via };
            assert_eq!(direct, want, "{spec}");
        }
    }

    #[test]
    fn cofactor_resummation() {
        for (l, m, n) in [(vec![1, 1], vec![1], 4usize), (vec![], vec![1, 1], 2), (vec![2], vec![3], 9)] {
            let spec = ExceptionalSpec::new(fam(&l, &m, int(1), rat(5, 2)), n).unwrap();
            let q = cofactor_q(&spec).unwrap();
            let bound = spec.family.size() as i64 - spec.family.r1() as i64;
            for (k, qk) in q.iter().enumerate() {
                assert!(qk.deg() <= bound + k as i64, "deg Q_{k}");
            }
            let r = spec.family.r();
            let om = omega(&spec.family).unwrap();
            assert_eq!(q[r], &Poly::shifted_x_pow(1, spec.family.r2()) * &om);
            assert_eq!(
                exceptional_by_cofactors(&spec).unwrap(),
                exceptional_by_determinant(&spec).unwrap()
            );
        }
    }

    #[test]
    fn degree_is_n_and_lc() {
        let f = fam(&[2, 1], &[2], rat(1, 2), rat(13, 3));
        for n in degree_set(&f.lambda, &f.mu, 14) {
            let spec = ExceptionalSpec::new(f.clone(), n).unwrap();
            let p = exceptional_jacobi(&spec).unwrap();
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.lc(), predicted_leading_coefficient(&spec));
        }
    }

    #[test]
    fn rejects_missing_degree() {
        let e = ExceptionalSpec::new(fam(&[2], &[], int(0), int(0)), 3);
        assert!(matches!(e, Err(Error::Domain(_))));
    }

    #[test]
    fn weight_trivial() {
        let prec = 128;
        for (a, b) in [(int(0), int(0)), (int(1), int(2))] {
            let w = WeightParams::new(fam(&[], &[], a, b));
            let v = weight_eval(&w, &Float::with_val(prec, 0)).unwrap();
            assert_eq!(v, 1);
        }
        let w = WeightParams::new(fam(&[3, 1, 1], &[3, 3], int(0), rat(1, 2)));
        let v = weight_eval(&w, &Float::with_val(prec, 0.5)).unwrap();
        assert!(v > 0);
        assert!(weight_eval(&w, &Float::with_val(prec, 1)).is_err());
    }

    #[test]
    fn tilde_duality() {
        let f = fam(&[2, 1], &[1], rat(1, 2), rat(7, 3));
        for n in 5..9 {
            let lhs = exceptional_tilde(&f, n).unwrap();
            let dual = fam(&[1], &[2, 1], rat(1, 2), rat(-7, 3));
            if !in_degree_set(&dual.lambda, &dual.mu, n) {
                continue;
            }
            let rhs = exceptional_by_determinant(&ExceptionalSpec::new(dual, n).unwrap()).unwrap();
            // (-1)^{r1 r2} = (-1)^{2}
            assert_eq!(lhs, rhs);
        }
    }
}
