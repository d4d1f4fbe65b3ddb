use rug::{Integer, Rational};

use super::poly::Poly;
use super::quasi::QuasiRational;
use super::{as_integer, pochhammer};
use crate::error::{Error, Result};

/// P_n^{(α,β)} from the explicit binomial sum, expanded exactly.
///
/// Uses the homogeneous Horner scheme H_k = H_{k-1}(x+1) + a_{n-k}(x-1)^k on
/// integer-scaled coefficients, so the whole expansion costs O(n^2) integer ops.
pub fn jacobi(n: usize, alpha: &Rational, beta: &Rational) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    let na = Rational::from(alpha + n as u64);
    let nb = Rational::from(beta + n as u64);
    let ca = binomial_row(&na, n);
    let cb = binomial_row(&nb, n);
    let a: Vec<Rational> = (0..=n)
        .map(|j| Rational::from(&ca[j] * &cb[n - j]))
        .collect();
    let mut den = Integer::from(1);
    for c in &a {
        if *c.denom() != 1 {
            den.lcm_mut(c.denom());
        }
    }
    let ai: Vec<Integer> = a
        .iter()
        .map(|c| Integer::from(&den / c.denom()) * c.numer())
        .collect();

    // h: current Horner polynomial, u: (x-1)^k
    let mut h: Vec<Integer> = vec![ai[n].clone()];
    let mut u: Vec<Integer> = vec![Integer::from(1)];
    for k in 1..=n {
        // u <- u * (x - 1)
        let mut nu = vec![Integer::new(); u.len() + 1];
        for (i, c) in u.iter().enumerate() {
            nu[i + 1] += c;
            nu[i] -= c;
        }
        u = nu;
        // h <- h * (x + 1)
        let mut nh = vec![Integer::new(); h.len() + 1];
        for (i, c) in h.iter().enumerate() {
            nh[i + 1] += c;
            nh[i] += c;
        }
        h = nh;
        let coef = &ai[n - k];
        if *coef != 0 {
            for (i, c) in u.iter().enumerate() {
                h[i] += coef * c;
            }
        }
    }
    let total = den << n as u32;
    Poly::new(
        h.into_iter()
            .map(|c| Rational::from((c, total.clone())))
            .collect(),
    )
}

/// C(a, j) for j = 0..=n.
fn binomial_row(a: &Rational, n: usize) -> Vec<Rational> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(Rational::from(1));
    for j in 1..=n {
        let f = Rational::from(a - (j as i64 - 1));
        let v = Rational::from(&row[j - 1] * &f) / j as u64;
        row.push(v);
    }
    row
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedDerivative {
    pub scalar: Rational,
    pub poly: Poly,
}

impl ClosedDerivative {
    pub fn expand(&self) -> Poly {
        self.poly.scale(&self.scalar)
    }
}

/// k-th derivative of P_n^{(α,β)} as (n+α+β+1)_k/2^k · P_{n-k}^{(α+k,β+k)}.
pub fn jacobi_derivative_closed(
    n: usize,
    alpha: &Rational,
    beta: &Rational,
    k: usize,
) -> ClosedDerivative {
    let start = Rational::from(alpha + beta) + (n as u64 + 1);
    let scalar = pochhammer(&start, k) >> k as u32;
    let poly = if k > n {
        Poly::zero()
    } else {
        let a = Rational::from(alpha + k as u64);
        let b = Rational::from(beta + k as u64);
        jacobi(n - k, &a, &b)
    };
    ClosedDerivative { scalar, poly }
}

/// Eigenvalue of the Jacobi operator for each quasi-rational eigenfunction kind.
pub fn eigenvalue(kind: u8, n: usize, alpha: &Rational, beta: &Rational) -> Rational {
    let nn = Rational::from(n as u64);
    let (sa, sb, shift) = match kind {
        1 => (alpha.clone(), beta.clone(), Rational::new()),
        2 => (
            alpha.clone(),
            Rational::from(-beta),
            (beta * Rational::from(alpha + 1u32)),
        ),
        3 => (
            Rational::from(-alpha),
            beta.clone(),
            (alpha * Rational::from(beta + 1u32)),
        ),
        4 => (
            Rational::from(-alpha),
            Rational::from(-beta),
            Rational::from(alpha + beta),
        ),
        _ => panic!("eigenfunction kind must be 1..=4"),
    };
    let lin = Rational::from(&nn + &sa) + &sb + 1u32;
    lin * &nn - shift
}

/// Quasi-rational eigenfunction of the given kind.
pub fn eigenfunction(kind: u8, n: usize, alpha: &Rational, beta: &Rational) -> QuasiRational {
    let na = Rational::from(-alpha);
    let nb = Rational::from(-beta);
    match kind {
        1 => QuasiRational::new(Rational::new(), Rational::new(), jacobi(n, alpha, beta)),
        2 => QuasiRational::new(Rational::new(), nb.clone(), jacobi(n, alpha, &nb)),
        3 => QuasiRational::new(na.clone(), Rational::new(), jacobi(n, &na, beta)),
        4 => QuasiRational::new(na.clone(), nb.clone(), jacobi(n, &na, &nb)),
        _ => panic!("eigenfunction kind must be 1..=4"),
    }
}

/// Coefficients c_i with P_n^{(α,β)} = Σ c_i P_i^{(α+N,β+N)}, by back-substitution.
pub fn connection_coefficients(
    n: usize,
    alpha: &Rational,
    beta: &Rational,
    shift: usize,
) -> Result<Vec<Rational>> {
    let s = Rational::from(alpha + beta) + n as u64;
    if let Some(v) = as_integer(&s) {
        if v <= -1 && v >= -(n as i64) - 2 * shift as i64 {
            return Err(Error::admissibility(format!(
                "alpha+beta+n = {v} lies in {{-1,...,{}}}",
                -(n as i64) - 2 * shift as i64
            )));
        }
    }
    let a2 = Rational::from(alpha + shift as u64);
    let b2 = Rational::from(beta + shift as u64);
    let mut rem = jacobi(n, alpha, beta);
    let mut c = vec![Rational::new(); n + 1];
    for i in (0..=n).rev() {
        let ri = rem.coeff(i);
        if ri == 0 {
            continue;
        }
        let t = jacobi(i, &a2, &b2);
        if t.deg() != i as i64 {
            return Err(Error::admissibility(format!(
                "target basis polynomial of degree {i} degenerates"
            )));
        }
        let ci = ri / t.lc();
        rem = &rem - &t.scale(&ci);
        c[i] = ci;
    }
    if !rem.is_zero() {
        return Err(Error::Internal("connection remainder nonzero".into()));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{int, rat};
    use proptest::prelude::*;

    /// Three-term recurrence, independent of the explicit sum.
    fn jacobi_recurrence(n: usize, a: &Rational, b: &Rational) -> Poly {
        let mut p0 = Poly::one();
        if n == 0 {
            return p0;
        }
        let half = rat(1, 2);
        let ab = Rational::from(a + b);
        let mut p1 = Poly::linear(
            Rational::from(a - b) * &half,
            (Rational::from(&ab + 2u32)) * &half,
        );
        for k in 1..n {
            let kk = Rational::from(k as u64);
            let two_k_ab = Rational::from(&kk * 2u32) + &ab;
            let c1 = Rational::from(&kk + 1u32)
                * (Rational::from(&kk + &ab) + 1u32)
                * Rational::from(&two_k_ab)
                * 2u32;
            let c2 = Rational::from(&two_k_ab + 1u32)
                * (Rational::from(a * a) - Rational::from(b * b));
            let c3 = Rational::from(&two_k_ab)
                * Rational::from(&two_k_ab + 1u32)
                * Rational::from(&two_k_ab + 2u32);
            let c4 = Rational::from(&kk + a)
                * Rational::from(&kk + b)
                * Rational::from(&two_k_ab + 2u32)
                * 2u32;
            let lin = Poly::linear(c2, c3);
            let num = &(&lin * &p1) - &p0.scale(&c4);
            let next = num.scale(&Rational::from(c1.recip_ref()));
            p0 = p1;
            p1 = next;
        }
        p1
    }

    #[test]
    fn small_cases() {
        assert_eq!(jacobi(0, &rat(3, 7), &int(2)), Poly::one());
        assert_eq!(
            jacobi(2, &int(0), &int(0)),
            Poly::new(vec![rat(-1, 2), int(0), rat(3, 2)])
        );
        assert_eq!(jacobi(1, &int(0), &int(-2)), Poly::one());
    }

    #[test]
    fn degree_reduction_rule() {
        // deg = n unless α+β+n ∈ {-1..-n}
        for n in 1..6usize {
            for s in -8i64..3 {
                let a = int(s - n as i64);
                let p = jacobi(n, &a, &int(0));
                let reduced = s <= -1 && s >= -(n as i64);
                assert_eq!(p.deg() < n as i64, reduced, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn matches_recurrence_generic() {
        for n in 0..12 {
            for (a, b) in [(rat(1, 2), rat(3, 2)), (rat(-1, 3), int(4)), (int(0), int(0))] {
                assert_eq!(jacobi(n, &a, &b), jacobi_recurrence(n, &a, &b));
            }
        }
    }

    #[test]
    fn derivative_closed_examples() {
        let d = jacobi_derivative_closed(3, &int(0), &int(0), 0);
        assert_eq!(d.scalar, 1);
        assert_eq!(d.poly, jacobi(3, &int(0), &int(0)));
        assert!(jacobi_derivative_closed(1, &int(0), &int(0), 2).poly.is_zero());
        let h = rat(1, 2);
        let d = jacobi_derivative_closed(2, &h, &h, 1);
        assert_eq!(d.expand(), jacobi(2, &h, &h).derivative());
    }

    #[test]
    fn connection_examples() {
        let c = connection_coefficients(4, &rat(1, 3), &int(2), 0).unwrap();
        assert_eq!(c, vec![int(0), int(0), int(0), int(0), int(1)]);
        let c = connection_coefficients(2, &int(0), &int(0), 1).unwrap();
        assert!(c.iter().filter(|v| **v != 0).count() <= 3);
        let recon = c.iter().enumerate().fold(Poly::zero(), |acc, (i, ci)| {
            &acc + &jacobi(i, &int(1), &int(1)).scale(ci)
        });
        assert_eq!(recon, jacobi(2, &int(0), &int(0)));
        let c = connection_coefficients(6, &rat(1, 2), &rat(3, 2), 2).unwrap();
        assert_eq!(c[0], 0);
        assert_eq!(c[1], 0);
        assert!(connection_coefficients(3, &int(-2), &int(-2), 1).is_err());
    }

    #[test]
    fn eigenvalues_table() {
        let a = rat(1, 2);
        let b = rat(3, 2);
        assert_eq!(eigenvalue(1, 2, &a, &b), 2 * 5);
        assert_eq!(eigenvalue(2, 2, &a, &b), Rational::from(2) * rat(2, 1) - rat(9, 4));
        assert_eq!(eigenvalue(4, 0, &a, &b), -2);
    }

    /// Exact ∫_{-1}^{1} f (1-x)^α (1+x)^β dx divided by ∫ (1-x)^α (1+x)^β dx,
    /// via Beta-function ratios after expanding f in powers of (1+x).
    fn normalized_integral(f: &Poly, a: &Rational, b: &Rational) -> Rational {
        let g = f.compose_linear(&int(1), &int(-1));
        let mut acc = Rational::new();
        let ab2 = Rational::from(a + b) + 2u32;
        let b1 = Rational::from(b + 1u32);
        for (k, c) in g.coeffs().iter().enumerate() {
            let r = (pochhammer(&b1, k) / pochhammer(&ab2, k)) << k as u32;
            acc += Rational::from(c * &r);
        }
        acc
    }

    #[test]
    fn orthogonality_exact() {
        for (a, b) in [(rat(1, 2), rat(-1, 3)), (int(0), int(0)), (int(2), rat(5, 4))] {
            for n in 0..6 {
                for m in 0..6 {
                    let prod = &jacobi(n, &a, &b) * &jacobi(m, &a, &b);
                    let v = normalized_integral(&prod, &a, &b);
                    assert_eq!(v == 0, n != m, "n={n} m={m}");
                }
            }
        }
    }

    fn arb_param() -> impl Strategy<Value = Rational> {
        (-12i64..12, 1i64..5).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn reflection(n in 0usize..13, a in arb_param(), b in arb_param()) {
            let lhs = jacobi(n, &a, &b).compose_neg();
            let rhs = jacobi(n, &b, &a);
            let rhs = if n % 2 == 1 { -rhs } else { rhs };
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivative_consistency(n in 0usize..10, a in arb_param(), b in arb_param(), k in 0usize..4) {
            let closed = jacobi_derivative_closed(n, &a, &b, k).expand();
            prop_assert_eq!(closed, jacobi(n, &a, &b).nth_derivative(k));
        }

        #[test]
        fn connection_vanishing_law(n in 0usize..9, a in arb_param(), b in arb_param(), shift in 0usize..3) {
            if let Ok(c) = connection_coefficients(n, &a, &b, shift) {
                for (i, ci) in c.iter().enumerate() {
                    if (i as i64) < n as i64 - 2 * shift as i64 {
                        prop_assert_eq!(ci, &Rational::new());
                    }
                }
            }
        }
    }
}
