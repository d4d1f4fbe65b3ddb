//! Partitions, degree sequences and Maya diagrams.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse("partition must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Panics on invalid input; for literals in tests and examples.
    pub fn from_slice(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    /// Parse "3,1,1"; the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for (i, tok) in t.split(',').enumerate() {
            let v: usize = tok.trim().parse().map_err(|_| {
                Error::Parse(format!("partition entry {} ('{}') is not a positive integer", i + 1, tok.trim()))
            })?;
            parts.push(v);
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_1, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        degree_sequence(self)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    pub fn is_even(&self) -> bool {
        is_even(self)
    }

    /// All partitions of n, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Inverse of the degree sequence; zero parts from a trailing n_r = 0 are dropped.
    pub fn from_degree_sequence(n: &[usize]) -> Result<Self> {
        if n.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Domain("degree sequence must be strictly decreasing".into()));
        }
        let r = n.len();
        let parts: Vec<usize> = n
            .iter()
            .enumerate()
            .map(|(i, &ni)| ni + i + 1 - r)
            .filter(|&p| p > 0)
            .collect();
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

/// n_i = λ_i + r - i
pub fn degree_sequence(lambda: &Partition) -> Vec<usize> {
    let r = lambda.length();
    lambda
        .parts
        .iter()
        .enumerate()
        .map(|(i, &l)| l + r - i - 1)
        .collect()
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let first = lambda.first();
    let parts = (1..=first)
        .map(|i| lambda.parts.iter().filter(|&&l| l >= i).count())
        .collect();
    Partition { parts }
}

/// Even length with λ_{2i-1} = λ_{2i}.
pub fn is_even(lambda: &Partition) -> bool {
    lambda.parts.len().is_multiple_of(2) && lambda.parts.chunks(2).all(|c| c[0] == c[1])
}

/// Two-sided encoding (a'_1 > ... > a'_{r4} | a_1 > ... > a_{r1}).
///
/// Filled boxes at positions a_i >= 0; empty boxes at positions -a'_i - 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct MayaDiagram {
    pub neg: Vec<usize>,
    pub pos: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MayaCanonical {
    pub t: i64,
    pub lambda: Partition,
    pub conj_shift: i64,
}

impl MayaDiagram {
    pub fn new(neg: Vec<usize>, pos: Vec<usize>) -> Result<Self> {
        for (name, v) in [("neg", &neg), ("pos", &pos)] {
            if v.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::Domain(format!("maya {name} sequence must be strictly decreasing")));
            }
        }
        Ok(MayaDiagram { neg, pos })
    }

    pub fn from_slices(neg: &[usize], pos: &[usize]) -> Self {
        MayaDiagram::new(neg.to_vec(), pos.to_vec()).expect("invalid maya literal")
    }

    /// Form A diagram of a partition: (∅ | n_1, ..., n_r).
    pub fn from_partition(lambda: &Partition) -> Self {
        MayaDiagram {
            neg: Vec::new(),
            pos: degree_sequence(lambda),
        }
    }

    fn empties(&self) -> BTreeSet<i64> {
        self.neg.iter().map(|&a| -(a as i64) - 1).collect()
    }

    /// Box state at an integer position.
    pub fn filled(&self, k: i64) -> bool {
        if k >= 0 {
            self.pos.contains(&(k as usize))
        } else {
            !self.neg.contains(&((-k - 1) as usize))
        }
    }

    /// M + t: every box moves t places to the right of the origin.
    pub fn shift(&self, t: i64) -> MayaDiagram {
        let lo = self.neg.first().map_or(0, |&a| -(a as i64) - 1).min(0) - t.abs() - 1;
        let hi = self.pos.first().map_or(0, |&a| a as i64).max(0) + t.abs() + 1;
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for y in (lo..=hi).rev() {
            let f = self.filled(y - t);
            if y >= 0 && f {
                pos.push(y as usize);
            } else if y < 0 && !f {
                neg.push((-y - 1) as usize);
            }
        }
        neg.sort_unstable_by(|a, b| b.cmp(a));
        MayaDiagram { neg, pos }
    }

    /// t(M): the shift that puts the leftmost empty box at the origin.
    pub fn t(&self) -> i64 {
        if let Some(&a) = self.neg.first() {
            return a as i64 + 1;
        }
        let mut k = 0usize;
        while self.pos.contains(&k) {
            k += 1;
        }
        -(k as i64)
    }

    pub fn canonical(&self) -> MayaCanonical {
        maya_canonical(self)
    }
}

impl fmt::Display for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| {
            if v.is_empty() {
                "∅".to_string()
            } else {
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            }
        };
        write!(f, "({} | {})", j(&self.neg), j(&self.pos))
    }
}

pub fn maya_canonical(m: &MayaDiagram) -> MayaCanonical {
    let t = m.t();
    let a = m.shift(t);
    debug_assert!(a.neg.is_empty());
    let lambda = Partition::from_degree_sequence(&a.pos).expect("form A sequence");
    // form B: rightmost filled box at -1
    let rightmost = match m.pos.first() {
        Some(&p) => p as i64,
        None => {
            let e = m.empties();
            let mut k = -1i64;
            while e.contains(&k) {
                k -= 1;
            }
            k
        }
    };
    MayaCanonical {
        t,
        lambda,
        conj_shift: -1 - rightmost,
    }
}

/// Conjugate partition read from canonical form B: λ'_j = n'_j - s + j.
pub fn conjugate_from_form_b(m: &MayaDiagram) -> Partition {
    let b = m.shift(maya_canonical(m).conj_shift);
    debug_assert!(b.pos.is_empty());
    Partition::from_degree_sequence(&b.neg).expect("form B sequence")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_slice(v)
    }

    /// Column lengths of the Young diagram by explicit cell enumeration.
    fn brute_conjugate(l: &Partition) -> Partition {
        let mut cells = Vec::new();
        for (i, &li) in l.parts().iter().enumerate() {
            for j in 0..li {
                cells.push((i, j));
            }
        }
        let cols = cells.iter().map(|c| c.1 + 1).max().unwrap_or(0);
        let parts = (0..cols)
            .map(|c| cells.iter().filter(|cell| cell.1 == c).count())
            .collect();
        Partition::new(parts).unwrap()
    }

    #[test]
    fn degree_sequence_examples() {
        assert_eq!(degree_sequence(&p(&[3, 1, 1])), vec![5, 2, 1]);
        assert!(degree_sequence(&Partition::empty()).is_empty());
        assert_eq!(degree_sequence(&p(&[1, 1, 1, 1])), vec![4, 3, 2, 1]);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[3, 1, 1])), p(&[3, 1, 1]));
        assert_eq!(conjugate(&p(&[2, 2])), p(&[2, 2]));
        assert_eq!(conjugate(&p(&[4, 1])), p(&[2, 1, 1, 1]));
        assert_eq!(conjugate(&p(&[4, 1])), brute_conjugate(&p(&[4, 1])));
    }

    #[test]
    fn evenness() {
        assert!(is_even(&p(&[3, 3])));
        assert!(is_even(&Partition::empty()));
        assert!(!is_even(&p(&[3])));
        assert!(!is_even(&p(&[3, 2])));
        assert!(is_even(&p(&[4, 4, 1, 1])));
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(Partition::parse("3,1,1").unwrap(), p(&[3, 1, 1]));
        assert!(Partition::parse("").unwrap().is_empty());
        let e = Partition::parse("1,2").unwrap_err();
        assert!(e.to_string().contains("partition must be weakly decreasing"));
        assert!(Partition::parse("1,0").is_err());
        assert!(Partition::parse("a").is_err());
    }

    #[test]
    fn maya_examples() {
        let c = maya_canonical(&MayaDiagram::from_slices(&[], &[5, 2, 1]));
        assert_eq!((c.t, c.lambda), (0, p(&[3, 1, 1])));
        let c = maya_canonical(&MayaDiagram::from_slices(&[3], &[]));
        assert_eq!((c.t, c.lambda), (4, p(&[1, 1, 1])));
        let c = maya_canonical(&MayaDiagram::from_slices(&[], &[2, 1, 0]));
        assert_eq!((c.t, c.lambda), (-3, Partition::empty()));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..9).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert!(Partition::all_of_size(6).iter().all(|p| p.size() == 6));
    }

    #[test]
    fn shift_by_one_matches_reencoding() {
        // n_{r1} = 0: M - 1 is (n'+1 | n-1 without the zero)
        let m = MayaDiagram::from_slices(&[2, 0], &[4, 1, 0]);
        assert_eq!(m.shift(-1), MayaDiagram::from_slices(&[3, 1], &[3, 0]));
        assert_eq!(m.shift(-1).shift(1), m);
    }

    #[test]
    fn form_b_gives_conjugate() {
        let m = MayaDiagram::from_slices(&[3], &[]);
        assert_eq!(conjugate_from_form_b(&m), p(&[3]));
        let m = MayaDiagram::from_partition(&p(&[4, 2, 2, 1]));
        assert_eq!(conjugate_from_form_b(&m), p(&[4, 3, 1, 1]));
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..7, 0..6).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    fn arb_set(max: usize) -> impl Strategy<Value = Vec<usize>> {
        prop::collection::btree_set(0usize..max, 0..5)
            .prop_map(|s| s.into_iter().rev().collect())
    }

    proptest! {
        #[test]
        fn degree_sequence_law(l in arb_partition()) {
            let n = degree_sequence(&l);
            let r = l.length();
            prop_assert!(n.windows(2).all(|w| w[0] > w[1]));
            prop_assert_eq!(n.iter().sum::<usize>(), l.size() + r * r.saturating_sub(1) / 2);
            prop_assert_eq!(Partition::from_degree_sequence(&n).unwrap(), l);
        }

        #[test]
        fn conjugation_involution(l in arb_partition()) {
            let c = conjugate(&l);
            prop_assert_eq!(conjugate(&c), l.clone());
            prop_assert_eq!(c.size(), l.size());
            prop_assert_eq!(c, brute_conjugate(&l));
        }

        #[test]
        fn even_pairs(a in 1usize..9) {
            prop_assert!(is_even(&p(&[a, a])));
            prop_assert!(!is_even(&p(&[a])));
        }

        #[test]
        fn canonical_shift_invariant(neg in arb_set(6), pos in arb_set(8), t in -6i64..7) {
            let m = MayaDiagram::new(neg, pos).unwrap();
            let c = maya_canonical(&m);
            let shifted = m.shift(t);
            prop_assert_eq!(maya_canonical(&shifted).lambda, c.lambda.clone());
            prop_assert_eq!(maya_canonical(&shifted).t, c.t - t);
            prop_assert_eq!(m.shift(c.t), MayaDiagram::from_partition(&c.lambda));
            prop_assert_eq!(conjugate_from_form_b(&m), conjugate(&c.lambda));
        }
    }
}
