//! Exact rational arithmetic, dense polynomials over Q, Jacobi polynomials and
//! quasi-rational functions.

mod det;
mod jacobi;
mod poly;
mod quasi;

pub use det::{det_auto, det_bareiss, det_minors};
pub use jacobi::{
    connection_coefficients, eigenfunction, eigenvalue, jacobi, jacobi_derivative_closed,
    ClosedDerivative,
};
pub use poly::Poly;
pub use quasi::{apply_jacobi_operator, qr_derivative, wronskian_generic, QuasiRational};

pub use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// Rising factorial x(x+1)...(x+n-1); equals 1 for n = 0.
pub fn pochhammer(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::from(1);
    let mut t = x.clone();
    for _ in 0..n {
        acc *= &t;
        t += 1;
    }
    acc
}

/// Generalized binomial coefficient C(a, j) = (a-j+1)_j / j!.
pub fn gen_binomial(a: &Rational, j: usize) -> Rational {
    let start = a - Rational::from(j as i64 - 1);
    pochhammer(&start, j) / factorial(j)
}

pub fn factorial(n: usize) -> Rational {
    Rational::from(Integer::from(Integer::factorial(n as u32)))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::from((num, den))
}

pub fn int(v: i64) -> Rational {
    Rational::from(v)
}

/// Parse "p/q", "p" or "-p/q".
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let r = match t.split_once('/') {
        Some((p, q)) => {
            let p: Integer = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("malformed rational '{s}'")))?;
            let q: Integer = q
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("malformed rational '{s}'")))?;
            if q == 0 {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            Rational::from((p, q))
        }
        None => {
            let p: Integer = t
                .parse()
                .map_err(|_| Error::Parse(format!("malformed rational '{s}'")))?;
            Rational::from(p)
        }
    };
    Ok(r)
}

/// Returns Some(k) when r is an integer that fits in i64.
pub fn as_integer(r: &Rational) -> Option<i64> {
    if *r.denom() == 1 {
        r.numer().to_i64()
    } else {
        None
    }
}

/// True when r is an integer in the closed range [lo, hi].
pub fn integer_in(r: &Rational, lo: i64, hi: i64) -> bool {
    match as_integer(r) {
        Some(k) => lo <= k && k <= hi,
        None => false,
    }
}

/// serde helpers for rationals as "p/q" strings.
pub mod serde_rational {
    use rug::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(5, 2), 0), 1);
        assert_eq!(pochhammer(&int(3), 2), 12);
        assert_eq!(pochhammer(&int(-2), 4), 0);
    }

    #[test]
    fn binomial_generalized() {
        assert_eq!(gen_binomial(&int(5), 2), 10);
        assert_eq!(gen_binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(gen_binomial(&int(2), 3), 0);
        assert_eq!(gen_binomial(&int(-1), 3), -1);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational(" -3/4 ").unwrap(), rat(-3, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }
}
