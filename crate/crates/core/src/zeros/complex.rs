//! Minimal complex arithmetic over MPFR floats.

use rug::{Assign, Float};

#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn zero(prec: u32) -> Self {
        Complex {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Complex {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn from_real(x: Float) -> Self {
        let prec = x.prec();
        Complex {
            re: x,
            im: Float::new(prec),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn set_prec(&mut self, prec: u32) {
        self.re.set_prec(prec);
        self.im.set_prec(prec);
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn add(&self, o: &Complex) -> Complex {
        let p = self.prec();
        Complex {
            re: Float::with_val(p, &self.re + &o.re),
            im: Float::with_val(p, &self.im + &o.im),
        }
    }

    pub fn sub(&self, o: &Complex) -> Complex {
        let p = self.prec();
        Complex {
            re: Float::with_val(p, &self.re - &o.re),
            im: Float::with_val(p, &self.im - &o.im),
        }
    }

    pub fn mul(&self, o: &Complex) -> Complex {
        let p = self.prec();
        let rr = Float::with_val(p, &self.re * &o.re);
        let ii = Float::with_val(p, &self.im * &o.im);
        let ri = Float::with_val(p, &self.re * &o.im);
        let ir = Float::with_val(p, &self.im * &o.re);
        Complex {
            re: rr - ii,
            im: ri + ir,
        }
    }

    pub fn scale(&self, s: &Float) -> Complex {
        let p = self.prec();
        Complex {
            re: Float::with_val(p, &self.re * s),
            im: Float::with_val(p, &self.im * s),
        }
    }

    pub fn recip(&self) -> Complex {
        let p = self.prec();
        let n = Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref());
        Complex {
            re: Float::with_val(p, &self.re / &n),
            im: -Float::with_val(p, &self.im / &n),
        }
    }

    pub fn div(&self, o: &Complex) -> Complex {
        self.mul(&o.recip())
    }
}

/// p(z) and p'(z) for real coefficients (ascending) by Horner.
pub fn horner_with_derivative(coeffs: &[Float], z: &Complex) -> (Complex, Complex) {
    let prec = z.prec();
    let n = coeffs.len();
    let mut pr = Float::with_val(prec, &coeffs[n - 1]);
    let mut pi = Float::new(prec);
    let mut dr = Float::new(prec);
    let mut di = Float::new(prec);
    let mut t1 = Float::new(prec);
    let mut t2 = Float::new(prec);
    for i in (0..n - 1).rev() {
        // d = d·z + p
        t1.assign(&dr * &z.re);
        t2.assign(&di * &z.im);
        let nr = Float::with_val(prec, &t1 - &t2) + &pr;
        t1.assign(&dr * &z.im);
        t2.assign(&di * &z.re);
        let ni = Float::with_val(prec, &t1 + &t2) + &pi;
        dr = nr;
        di = ni;
        // p = p·z + a_i
        t1.assign(&pr * &z.re);
        t2.assign(&pi * &z.im);
        let nr = Float::with_val(prec, &t1 - &t2) + &coeffs[i];
        t1.assign(&pr * &z.im);
        t2.assign(&pi * &z.re);
        let ni = Float::with_val(prec, &t1 + &t2);
        pr = nr;
        pi = ni;
    }
    (Complex { re: pr, im: pi }, Complex { re: dr, im: di })
}
