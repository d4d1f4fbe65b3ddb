//! Exact side: gcd over Q, square-free decomposition and Sturm counts.

use rug::{Integer, Rational};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyalg::{self, Poly};

/// Primes near 2^62 for modular gcd degree probes.
const PRIMES: [u64; 4] = [
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
];

fn primitive(mut v: Vec<Integer>) -> Vec<Integer> {
    while v.last().is_some_and(|c| *c == 0) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = Integer::new();
    for c in &v {
        g.gcd_mut(c);
        if g == 1 {
            break;
        }
    }
    if v.last().is_some_and(|c| *c < 0) {
        g = -g;
    }
    if g != 1 {
        for c in v.iter_mut() {
            c.div_exact_mut(&g);
        }
    }
    v
}

fn to_primitive(p: &Poly) -> Vec<Integer> {
    primitive(p.primitive_integer())
}

fn mod_reduce(v: &[Integer], p: u64) -> Vec<u64> {
    let pi = Integer::from(p);
    let mut out: Vec<u64> = v
        .iter()
        .map(|c| {
            let r = Integer::from(c % &pi);
            let r = if r < 0 { r + &pi } else { r };
            r.to_u64().expect("residue fits")
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Degree of gcd(a, b) over F_p.
fn gcd_degree_mod(a: &[u64], b: &[u64], p: u64) -> usize {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let lead = mulmod(*a.last().unwrap(), inv, p);
            let shift = a.len() - b.len();
            for (i, &bi) in b.iter().enumerate() {
                let t = mulmod(lead, bi, p);
                let ai = &mut a[i + shift];
                *ai = if *ai >= t { *ai - t } else { *ai + p - t };
            }
            while a.last() == Some(&0) {
                a.pop();
            }
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when some prime certifies gcd(a, b) = 1.
fn coprime_by_modular_probe(a: &[Integer], b: &[Integer]) -> bool {
    for &p in &PRIMES {
        let am = mod_reduce(a, p);
        let bm = mod_reduce(b, p);
        // a bad prime drops a leading coefficient
        if am.len() != a.len() || bm.len() != b.len() {
            continue;
        }
        if gcd_degree_mod(&am, &bm, p) == 0 {
            return true;
        }
    }
    false
}

/// Pseudo-remainder with a positive multiplier: c·a mod b, c > 0.
fn prem_positive(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() < b.len() {
        return r;
    }
    let steps = r.len() - db;
    for k in (0..steps).rev() {
        let lead = r[k + db].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bi) in b.iter().enumerate() {
            r[k + i] -= Integer::from(&lead * bi);
        }
        r.truncate(k + db);
    }
    if lb < 0 && steps % 2 == 1 {
        for c in r.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    while r.last().is_some_and(|c| *c == 0) {
        r.pop();
    }
    r
}

fn integer_gcd_poly(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let (mut a, mut b) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    while !b.is_empty() {
        let r = primitive(prem_positive(&a, &b));
        a = b;
        b = r;
    }
    primitive(a)
}

/// Monic gcd over Q; gcd(0, 0) = 0.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic().unwrap_or_else(Poly::zero);
    }
    if b.is_zero() {
        return a.monic().unwrap_or_else(Poly::zero);
    }
    if a.deg() == 0 || b.deg() == 0 {
        return Poly::one();
    }
    let ai = to_primitive(a);
    let bi = to_primitive(b);
    if coprime_by_modular_probe(&ai, &bi) {
        return Poly::one();
    }
    let g = integer_gcd_poly(&ai, &bi);
    Poly::from_integers(&g).monic().expect("nonzero gcd")
}

/// content · Π factor^mult, factors monic, square-free and pairwise coprime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareFree {
    #[serde(with = "polyalg::serde_rational")]
    pub content: Rational,
    pub factors: Vec<(Poly, usize)>,
}

impl SquareFree {
    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|f| f.1 == 1)
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.1).collect()
    }

    pub fn expand(&self) -> Poly {
        let mut p = Poly::constant(self.content.clone());
        for (f, k) in &self.factors {
            p = &p * &f.pow(*k);
        }
        p
    }
}

/// Yun's algorithm over Q.
pub fn square_free(p: &Poly) -> Result<SquareFree> {
    let content = p.lc();
    let f = p
        .monic()
        .ok_or_else(|| Error::Domain("square-free decomposition of the zero polynomial".into()))?;
    let mut factors = Vec::new();
    if f.deg() == 0 {
        return Ok(SquareFree { content, factors });
    }
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df);
    if a0.deg() == 0 {
        factors.push((f, 1));
        return Ok(SquareFree { content, factors });
    }
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let c = df.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut k = 1;
    while b.deg() > 0 {
        let a = poly_gcd(&b, &d);
        let nb = b.exact_div(&a).expect("gcd divides");
        let nc = d.exact_div(&a).expect("gcd divides");
        if a.deg() > 0 {
            factors.push((a, k));
        }
        d = &nc - &nb.derivative();
        b = nb;
        k += 1;
    }
    Ok(SquareFree { content, factors })
}

/// True when gcd(P, P') is constant.
pub fn is_square_free(p: &Poly) -> bool {
    p.deg() <= 1 || poly_gcd(p, &p.derivative()).deg() == 0
}

/// Sign of Σ c_i (num/den)^i, den > 0, by homogeneous evaluation.
fn sign_at(c: &[Integer], x: &Rational) -> i32 {
    let (num, den) = (x.numer(), x.denom());
    let d = c.len();
    if d == 0 {
        return 0;
    }
    let mut acc = Integer::from(&c[d - 1]);
    let mut dpow = Integer::from(1);
    for i in (0..d - 1).rev() {
        acc *= num;
        dpow *= den;
        acc += Integer::from(&c[i] * &dpow);
    }
    acc.cmp0() as i32
}

/// Sturm chain S_0 = f, S_1 = f', S_{k+1} = -rem(S_{k-1}, S_k), made primitive.
pub fn sturm_chain(f: &Poly) -> Vec<Vec<Integer>> {
    let s0 = to_primitive(f);
    let s1 = to_primitive(&f.derivative());
    let mut chain = vec![s0];
    if s1.is_empty() {
        return chain;
    }
    chain.push(s1);
    loop {
        let n = chain.len();
        if chain[n - 1].len() <= 1 {
            break;
        }
        let r = prem_positive(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        let r: Vec<Integer> = r.into_iter().map(|c| -c).collect();
        // primitive() would normalize the sign; keep it
        let mut g = Integer::new();
        for c in &r {
            g.gcd_mut(c);
        }
        let r = r.into_iter().map(|c| c.div_exact(&g)).collect();
        chain.push(r);
    }
    chain
}

fn variations(chain: &[Vec<Integer>], x: &Rational) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in chain {
        let sg = sign_at(s, x);
        if sg != 0 {
            if last != 0 && sg != last {
                v += 1;
            }
            last = sg;
        }
    }
    v
}

/// Distinct roots of a square-free f strictly inside (a, b); f(a), f(b) ≠ 0.
fn sturm_count_open(f: &Poly, a: &Rational, b: &Rational) -> usize {
    if f.deg() <= 0 {
        return 0;
    }
    let chain = sturm_chain(f);
    variations(&chain, a).saturating_sub(variations(&chain, b))
}

/// Largest degree handled by Sturm chains; above it counts come from
/// certified numeric isolation.
pub const STURM_MAX_DEGREE: i64 = 160;

/// Real roots in (a, b) or [a, b], with multiplicity.
pub fn count_real_roots(p: &Poly, a: &Rational, b: &Rational, open_ends: bool) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain("root count of the zero polynomial".into()));
    }
    if a >= b {
        return Err(Error::Domain(format!("empty interval ({a}, {b})")));
    }
    let sf = square_free(p)?;
    let mut total = 0;
    for (g, k) in &sf.factors {
        let mut g = g.clone();
        let mut ends = 0;
        for e in [a, b] {
            if g.eval(e) == 0 {
                g = g.div_linear_pow(e, 1).expect("root divides");
                ends += 1;
            }
        }
        let inner = if g.deg() > STURM_MAX_DEGREE {
            super::roots::certified_interval_count(&g, a, b)?
        } else {
            sturm_count_open(&g, a, b)
        };
        total += k * (inner + if open_ends { 0 } else { ends });
    }
    Ok(total)
}
