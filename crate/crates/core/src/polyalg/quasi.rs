use rug::Rational;

use super::det::det_bareiss;
use super::poly::Poly;
use super::{as_integer, int};

/// (1-x)^p (1+x)^q · poly(x)
#[derive(Clone, Debug)]
pub struct QuasiRational {
    pub p: Rational,
    pub q: Rational,
    pub poly: Poly,
}

impl QuasiRational {
    pub fn new(p: Rational, q: Rational, poly: Poly) -> Self {
        QuasiRational { p, q, poly }
    }

    pub fn from_poly(poly: Poly) -> Self {
        QuasiRational::new(Rational::new(), Rational::new(), poly)
    }

    pub fn zero() -> Self {
        QuasiRational::from_poly(Poly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Moves factors (1-x) and (1+x) of poly into the exponents. The zero
    /// function is canonically (0, 0, 0).
    pub fn normalize(&self) -> QuasiRational {
        if self.poly.is_zero() {
            return QuasiRational::zero();
        }
        let mut p = self.p.clone();
        let mut q = self.q.clone();
        let mut poly = self.poly.clone();
        let one = int(1);
        let m_one = int(-1);
        let k1 = poly.root_multiplicity(&one);
        if k1 > 0 {
            // (x - 1)^k = (-1)^k (1 - x)^k
            poly = poly.div_linear_pow(&one, k1).expect("multiplicity");
            if k1 % 2 == 1 {
                poly = -poly;
            }
            p += k1 as u64;
        }
        let k2 = poly.root_multiplicity(&m_one);
        if k2 > 0 {
            poly = poly.div_linear_pow(&m_one, k2).expect("multiplicity");
            q += k2 as u64;
        }
        QuasiRational { p, q, poly }
    }

    /// Derivative without normalization: exponents drop by one and the
    /// polynomial part becomes -p(1+x)R + q(1-x)R + (1-x^2)R'.
    pub fn raw_derivative(&self) -> QuasiRational {
        let r = &self.poly;
        let one_plus = Poly::from_i64(&[1, 1]);
        let one_minus = Poly::from_i64(&[1, -1]);
        let one_minus_sq = Poly::from_i64(&[1, 0, -1]);
        let a = (&one_plus * r).scale(&Rational::from(-&self.p));
        let b = (&one_minus * r).scale(&self.q);
        let c = &one_minus_sq * &r.derivative();
        let poly = &(&a + &b) + &c;
        QuasiRational {
            p: Rational::from(&self.p - 1u32),
            q: Rational::from(&self.q - 1u32),
            poly,
        }
    }

    pub fn mul(&self, other: &QuasiRational) -> QuasiRational {
        QuasiRational {
            p: Rational::from(&self.p + &other.p),
            q: Rational::from(&self.q + &other.q),
            poly: &self.poly * &other.poly,
        }
    }

    pub fn scale(&self, c: &Rational) -> QuasiRational {
        QuasiRational {
            p: self.p.clone(),
            q: self.q.clone(),
            poly: self.poly.scale(c),
        }
    }

    /// f(-x): the exponents trade places.
    pub fn reflect(&self) -> QuasiRational {
        QuasiRational {
            p: self.q.clone(),
            q: self.p.clone(),
            poly: self.poly.compose_neg(),
        }
    }

    /// The polynomial obtained when both exponents are nonnegative integers.
    pub fn to_poly(&self) -> Option<Poly> {
        let n = self.normalize();
        if n.is_zero() {
            return Some(Poly::zero());
        }
        let p = as_integer(&n.p)?;
        let q = as_integer(&n.q)?;
        if p < 0 || q < 0 {
            return None;
        }
        let f = &Poly::shifted_x_pow(1, q as usize) * &Poly::from_i64(&[1, -1]).pow(p as usize);
        Some(&f * &n.poly)
    }

    /// Multiply by (1-x)^a (1+x)^b, keeping everything in the exponents.
    pub fn with_factor(&self, a: &Rational, b: &Rational) -> QuasiRational {
        QuasiRational {
            p: Rational::from(&self.p + a),
            q: Rational::from(&self.q + b),
            poly: self.poly.clone(),
        }
    }
}

impl PartialEq for QuasiRational {
    fn eq(&self, other: &Self) -> bool {
        let a = self.normalize();
        let b = other.normalize();
        a.p == b.p && a.q == b.q && a.poly == b.poly
    }
}

/// Exact derivative, normalized.
pub fn qr_derivative(f: &QuasiRational) -> QuasiRational {
    f.raw_derivative().normalize()
}

/// (x^2-1) f'' + (α-β+(α+β+2)x) f'
pub fn apply_jacobi_operator(f: &QuasiRational, alpha: &Rational, beta: &Rational) -> QuasiRational {
    let d1 = f.raw_derivative();
    let d2 = d1.raw_derivative();
    // (x^2-1) = -(1-x)(1+x) lifts d2 to the exponents of d1
    let lin = Poly::linear(
        Rational::from(alpha - beta),
        Rational::from(alpha + beta) + 2u32,
    );
    let poly = &(&lin * &d1.poly) - &d2.poly;
    QuasiRational {
        p: d1.p,
        q: d1.q,
        poly,
    }
    .normalize()
}

/// Wronskian of quasi-rational functions by repeated differentiation.
///
/// Row k of column j is (1-x)^{p_j-k}(1+x)^{q_j-k} R_{jk}; the power factors
/// come out of the determinant and Bareiss runs on the polynomial parts.
pub fn wronskian_generic(fs: &[QuasiRational]) -> QuasiRational {
    assert!(!fs.is_empty(), "wronskian of an empty family");
    let r = fs.len();
    let mut rows: Vec<Vec<Poly>> = vec![Vec::with_capacity(r); r];
    let mut p = Rational::new();
    let mut q = Rational::new();
    for f in fs {
        p += &f.p;
        q += &f.q;
        let mut cur = f.clone();
        for row in rows.iter_mut() {
            row.push(cur.poly.clone());
            cur = cur.raw_derivative();
        }
    }
    let tri = (r * (r - 1) / 2) as u64;
    p -= tri;
    q -= tri;
    QuasiRational {
        p,
        q,
        poly: det_bareiss(rows),
    }
    .normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{eigenfunction, eigenvalue, jacobi, jacobi_derivative_closed, rat};

    fn mono(k: usize) -> QuasiRational {
        QuasiRational::from_poly(Poly::one().shift_up(k))
    }

    #[test]
    fn derivative_of_constant() {
        let c = QuasiRational::from_poly(Poly::constant(rat(7, 3)));
        assert!(qr_derivative(&c).is_zero());
    }

    #[test]
    fn derivative_kind3() {
        // d/dx (1-x)^{-α} P_n^{(-α,β)} = -(n-α) (1-x)^{-α-1} P_n^{(-α-1,β+1)}
        let (a, b) = (rat(2, 3), rat(5, 2));
        for n in 0..7usize {
            let lhs = qr_derivative(&eigenfunction(3, n, &a, &b));
            let na1 = Rational::from(-&a) - 1u32;
            let b1 = Rational::from(&b + 1u32);
            let c = -(Rational::from(n as u64) - &a);
            let rhs = QuasiRational::new(na1.clone(), int(0), jacobi(n, &na1, &b1)).scale(&c);
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn derivative_kind1_matches_closed() {
        let (a, b) = (rat(-1, 4), rat(3, 1));
        for n in 0..7usize {
            let lhs = qr_derivative(&eigenfunction(1, n, &a, &b));
            let rhs = jacobi_derivative_closed(n, &a, &b, 1).expand();
            assert_eq!(lhs, QuasiRational::from_poly(rhs));
        }
    }

    #[test]
    fn eigen_relations() {
        for (a, b) in [(rat(1, 2), rat(3, 2)), (rat(-2, 3), rat(7, 5)), (int(2), int(1))] {
            for kind in 1..=4u8 {
                for n in 0..=8usize {
                    let f = eigenfunction(kind, n, &a, &b);
                    let lhs = apply_jacobi_operator(&f, &a, &b);
                    let rhs = f.scale(&eigenvalue(kind, n, &a, &b));
                    assert_eq!(lhs, rhs, "kind={kind} n={n}");
                }
            }
        }
    }

    #[test]
    fn kind4_constant() {
        let f = eigenfunction(4, 0, &int(1), &int(1));
        assert_eq!(f.p, -1);
        assert_eq!(f.q, -1);
        assert_eq!(f.poly, Poly::one());
    }

    #[test]
    fn operator_kills_constants() {
        let one = QuasiRational::from_poly(Poly::one());
        assert!(apply_jacobi_operator(&one, &rat(1, 3), &int(4)).is_zero());
    }

    #[test]
    fn wronskian_monomials() {
        for (k1, k2) in [(0usize, 1usize), (2, 5), (1, 4)] {
            let w = wronskian_generic(&[mono(k1), mono(k2)]);
            let expect = Poly::one()
                .shift_up(k1 + k2 - 1)
                .scale(&int(k2 as i64 - k1 as i64));
            assert_eq!(w.to_poly().unwrap(), expect);
        }
        let f = eigenfunction(2, 3, &rat(1, 2), &rat(1, 3));
        assert_eq!(wronskian_generic(std::slice::from_ref(&f)), f);
    }

    #[test]
    fn wronskian_common_factor() {
        let beta = rat(3, 7);
        let g1 = QuasiRational::from_poly(jacobi(2, &int(1), &int(2)));
        let g2 = QuasiRational::from_poly(jacobi(4, &rat(1, 2), &int(0)));
        let h = QuasiRational::new(int(0), Rational::from(-&beta), Poly::one());
        let lhs = wronskian_generic(&[h.mul(&g1), h.mul(&g2)]);
        let rhs = h.mul(&h).mul(&wronskian_generic(&[g1, g2]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wronskian_reflection_composition() {
        // Wr[f_i(-x)] = (-1)^{r(r-1)/2} Wr[f_i](-x)
        let a = rat(1, 3);
        let b = rat(5, 2);
        let fs = vec![
            eigenfunction(1, 3, &a, &b),
            eigenfunction(2, 1, &a, &b),
            eigenfunction(3, 2, &a, &b),
        ];
        let refl: Vec<_> = fs.iter().map(|f| f.reflect()).collect();
        let lhs = wronskian_generic(&refl);
        let rhs = wronskian_generic(&fs).reflect().scale(&int(-1));
        assert_eq!(lhs, rhs);
    }
}
