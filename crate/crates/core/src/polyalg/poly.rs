use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Assign, Float, Integer, Rational};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::from(1))
    }

    pub fn x() -> Self {
        Poly::new(vec![Rational::new(), Rational::from(1)])
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn from_integers(coeffs: &[Integer]) -> Self {
        Poly::new(coeffs.iter().map(|c| Rational::from(c.clone())).collect())
    }

    /// a + b x
    pub fn linear(a: Rational, b: Rational) -> Self {
        Poly::new(vec![a, b])
    }

    /// (c + x)^k, built from binomial coefficients.
    pub fn shifted_x_pow(c: i64, k: usize) -> Self {
        let mut out = Vec::with_capacity(k + 1);
        let mut binom = Integer::from(1);
        let cc = Integer::from(c);
        let mut cpow: Vec<Integer> = Vec::with_capacity(k + 1);
        cpow.push(Integer::from(1));
        for i in 1..=k {
            let v = Integer::from(&cpow[i - 1] * &cc);
            cpow.push(v);
        }
        for j in 0..=k {
            out.push(Rational::from(Integer::from(&binom * &cpow[k - j])));
            binom *= (k - j) as u64;
            binom /= (j + 1) as u64;
        }
        Poly::new(out)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if *c == 0 {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| Rational::from(a * c)).collect(),
        }
    }

    pub fn monic(&self) -> Option<Poly> {
        if self.is_zero() {
            return None;
        }
        let inv = Rational::from(self.lc().recip_ref());
        Some(self.scale(&inv))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Rational::from(c * i as u64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Poly {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.derivative();
        }
        p
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_float(&self, x: &Float) -> Float {
        let prec = x.prec();
        let mut acc = Float::with_val(prec, 0);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += Float::with_val(prec, c);
        }
        acc
    }

    /// p(-x)
    pub fn compose_neg(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { Rational::from(-c) } else { c.clone() })
                .collect(),
        )
    }

    /// p(a x + b)
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Poly {
        let lin = Poly::linear(b.clone(), a.clone());
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Common denominator form: returns (integer coefficients, d) with self = ints / d.
    pub fn to_integer_parts(&self) -> (Vec<Integer>, Integer) {
        let mut d = Integer::from(1);
        for c in &self.coeffs {
            if *c.denom() != 1 {
                d.lcm_mut(c.denom());
            }
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| {
                let q = Integer::from(&d / c.denom());
                q * c.numer()
            })
            .collect();
        (ints, d)
    }

    /// Primitive integer polynomial with positive leading coefficient, same roots.
    pub fn primitive_integer(&self) -> Vec<Integer> {
        let (mut ints, _) = self.to_integer_parts();
        let mut g = Integer::new();
        for c in &ints {
            g.gcd_mut(c);
        }
        if g != 0 {
            if ints.last().is_some_and(|c| *c < 0) {
                g = -g;
            }
            for c in ints.iter_mut() {
                c.div_exact_mut(&g);
            }
        }
        ints
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let inv = Rational::from(d.lc().recip_ref());
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::new(); r.len() - dd];
        let mut t = Rational::new();
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if *top == 0 {
                continue;
            }
            let f = Rational::from(top * &inv);
            for (j, dc) in d.coeffs.iter().enumerate() {
                t.assign(&f * dc);
                r[k + j] -= &t;
            }
            q[k] = f;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Quotient when d divides self exactly.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Divide by (x - a) exactly k times via synthetic division; None on a nonzero remainder.
    pub fn div_linear_pow(&self, a: &Rational, k: usize) -> Option<Poly> {
        let mut cur = self.coeffs.clone();
        for _ in 0..k {
            if cur.is_empty() {
                return Some(Poly::zero());
            }
            let n = cur.len();
            let mut q = vec![Rational::new(); n - 1];
            let mut acc = Rational::new();
            for i in (0..n).rev() {
                acc *= a;
                acc += &cur[i];
                if i > 0 {
                    q[i - 1] = acc.clone();
                }
            }
            if acc != 0 {
                return None;
            }
            cur = q;
        }
        Some(Poly::new(cur))
    }

    /// Multiplicity of the root a.
    pub fn root_multiplicity(&self, a: &Rational) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut m = 0;
        let mut p = self.clone();
        while let Some(q) = p.div_linear_pow(a, 1) {
            m += 1;
            p = q;
        }
        m
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        crate::zeros::poly_gcd(self, other)
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::new(); k];
        c.extend(self.coeffs.iter().cloned());
        Poly { coeffs: c }
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let (a, da) = self.to_integer_parts();
        let (b, db) = other.to_integer_parts();
        let prod = mul_integer(&a, &b);
        let den = da * db;
        Poly::new(
            prod.into_iter()
                .map(|c| Rational::from((c, den.clone())))
                .collect(),
        )
    }

    fn add_impl(&self, other: &Poly, sub: bool) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            let v = match (a, b) {
                (Some(a), Some(b)) => {
                    if sub {
                        Rational::from(a - b)
                    } else {
                        Rational::from(a + b)
                    }
                }
                (Some(a), None) => a.clone(),
                (None, Some(b)) => {
                    if sub {
                        Rational::from(-b)
                    } else {
                        b.clone()
                    }
                }
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Poly::new(out)
    }
}

/// Schoolbook product of integer coefficient vectors.
pub(crate) fn mul_integer(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Integer::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.mul_impl(rhs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        self.add_impl(&rhs, false)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self.add_impl(&rhs, true)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        self.mul_impl(&rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -(self.clone())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            let abs = Rational::from(c.abs_ref());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = abs != 1 || i == 0;
            if show_coeff {
                if *abs.denom() != 1 && i > 0 {
                    write!(f, "({abs})")?;
                } else {
                    write!(f, "{abs}")?;
                }
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let mut out = Vec::with_capacity(v.len());
        for s in v {
            out.push(super::parse_rational(&s).map_err(serde::de::Error::custom)?);
        }
        Ok(Poly::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{int, rat};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().deg(), -1);
    }

    #[test]
    fn div_rem_basic() {
        let a = p(&[-1, 0, 1]);
        let (q, r) = a.div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2]));
        assert_eq!(q, Poly::new(vec![int(0), rat(1, 2)]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn shifted_pow() {
        assert_eq!(Poly::shifted_x_pow(1, 3), p(&[1, 3, 3, 1]));
        assert_eq!(Poly::shifted_x_pow(-1, 2), p(&[1, -2, 1]));
        assert_eq!(Poly::shifted_x_pow(1, 0), Poly::one());
    }

    #[test]
    fn linear_power_division() {
        let f = &Poly::shifted_x_pow(1, 3) * &p(&[2, 1]);
        assert_eq!(f.div_linear_pow(&int(-1), 3).unwrap(), p(&[2, 1]));
        assert!(f.div_linear_pow(&int(-1), 4).is_none());
        assert_eq!(f.root_multiplicity(&int(-1)), 3);
        assert_eq!(f.root_multiplicity(&int(-2)), 1);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 3]).to_string(), "3*x^2 - 1");
        assert_eq!(Poly::new(vec![rat(1, 2), int(-1)]).to_string(), "-x + 1/2");
    }

    #[test]
    fn serde_roundtrip() {
        let a = Poly::new(vec![rat(-1, 2), int(0), rat(3, 2)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"["-1/2","0","3/2"]"#);
        let b: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..7).prop_map(|v| {
            Poly::new(v.into_iter().map(|(a, b)| rat(a, b)).collect())
        })
    }

    proptest! {
        #[test]
        fn division_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert!(r.deg() < b.deg());
            prop_assert_eq!(&(&q * &b) + &r, a);
        }

        #[test]
        fn product_rule(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eval_is_ring_hom(a in arb_poly(), b in arb_poly(), xn in -9i64..9, xd in 1i64..5) {
            let x = rat(xn, xd);
            let prod = Rational::from(&a.eval(&x) * &b.eval(&x));
            prop_assert_eq!((&a * &b).eval(&x), prod);
        }

        #[test]
        fn compose_neg_involution(a in arb_poly()) {
            prop_assert_eq!(a.compose_neg().compose_neg(), a.clone());
            let x = rat(3, 7);
            prop_assert_eq!(a.compose_neg().eval(&x), a.eval(&Rational::from(-&x)));
        }
    }
}
