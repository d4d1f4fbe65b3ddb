//! Exact scan for multiple zeros of Ω under the simple-zeros hypotheses.

use rayon::prelude::*;
use rug::Rational;
use serde::Serialize;

use super::exact::{poly_gcd, square_free};
use crate::partitions::Partition;
use crate::polyalg::{rat, Poly};
use crate::wronskian::{check_admissibility, omega, FamilySpec};

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureGrid {
    /// Bound on |λ| + |μ|.
    pub max_size: usize,
    #[serde(serialize_with = "ser_rationals")]
    pub alpha_grid: Vec<Rational>,
    /// β = m1 + offset.
    #[serde(serialize_with = "ser_rationals")]
    pub beta_offsets: Vec<Rational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

impl Default for ConjectureGrid {
    fn default() -> Self {
        ConjectureGrid {
            max_size: 8,
            alpha_grid: vec![rat(-3, 4), rat(0, 1), rat(1, 2), rat(1, 1), rat(2, 1)],
            beta_offsets: vec![rat(1, 4), rat(1, 1), rat(3, 1)],
        }
    }
}

impl ConjectureGrid {
    /// Families with λ even and |λ| + |μ| ≤ max_size over the parameter grid.
    pub fn families(&self) -> Vec<FamilySpec> {
        let mut parts = Vec::new();
        for n in 0..=self.max_size {
            parts.extend(Partition::all_of_size(n));
        }
        let mut out = Vec::new();
        for l in parts.iter().filter(|p| p.is_even()) {
            for m in parts.iter().filter(|m| l.size() + m.size() <= self.max_size) {
                let probe = FamilySpec::new(l.clone(), m.clone(), Rational::new(), Rational::new());
                let m1 = probe.m1() as i64;
                for a in &self.alpha_grid {
                    for off in &self.beta_offsets {
                        let b = Rational::from(off + m1);
                        out.push(FamilySpec::new(l.clone(), m.clone(), a.clone(), b));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Hypotheses {
    pub alpha_above_minus_one: bool,
    pub beta_above_m1: bool,
    pub lambda_even: bool,
    pub independent_entries: bool,
}

impl Hypotheses {
    pub fn of(f: &FamilySpec) -> Self {
        let report = check_admissibility(f, None);
        Hypotheses {
            alpha_above_minus_one: f.alpha > -1,
            beta_above_m1: f.beta > f.m1() as i64,
            lambda_even: f.lambda.is_even(),
            independent_entries: report.independent_entries,
        }
    }

    pub fn all(&self) -> bool {
        self.alpha_above_minus_one && self.beta_above_m1 && self.lambda_even && self.independent_entries
    }

    /// Human-readable list of the failed hypotheses.
    pub fn violations(&self, f: &FamilySpec) -> Vec<String> {
        let mut v = Vec::new();
        if !self.alpha_above_minus_one {
            v.push(format!("α = {} ≤ -1", f.alpha));
        }
        if !self.beta_above_m1 {
            v.push(format!("β = {} ≤ m1 = {}", f.beta, f.m1()));
        }
        if !self.lambda_even {
            v.push(format!("λ = {} is not even", f.lambda));
        }
        if !self.independent_entries {
            v.push("β = m_j - n_i for some i, j".into());
        }
        v
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorRecord {
    /// Monic square-free factor, ascending coefficients.
    pub factor: Poly,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanCase {
    pub family: FamilySpec,
    pub degree: i64,
    /// gcd(Ω, Ω') is constant.
    pub simple: bool,
    pub gcd_degree: i64,
    pub factors: Vec<FactorRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Anchor {
    #[serde(flatten)]
    pub case: ScanCase,
    pub hypotheses: Hypotheses,
    pub violations: Vec<String>,
    /// Non-simple, as expected of these examples.
    pub confirmed_non_simple: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub checked: usize,
    pub outside_hypotheses: usize,
    pub degenerate: usize,
    pub counterexamples: Vec<ScanCase>,
    /// Cases whose multiplicities are not all triangular numbers.
    pub non_triangular: Vec<ScanCase>,
    pub anchors: Vec<Anchor>,
}

pub fn is_triangular(k: usize) -> bool {
    // k = t(t+1)/2 iff 8k+1 is an odd square
    let d = 8 * k + 1;
    let s = (d as f64).sqrt().round() as usize;
    s * s == d
}

/// Exact simplicity of the zeros of Ω; None when Ω vanishes identically.
pub fn scan_case(f: &FamilySpec) -> Option<ScanCase> {
    let om = omega(f).ok()?;
    if om.is_zero() {
        return None;
    }
    let g = poly_gcd(&om, &om.derivative());
    let factors = if om.deg() >= 1 {
        square_free(&om)
            .ok()?
            .factors
            .into_iter()
            .map(|(p, k)| FactorRecord {
                factor: p.monic().unwrap_or(p),
                multiplicity: k,
            })
            .collect()
    } else {
        Vec::new()
    };
    Some(ScanCase {
        family: f.clone(),
        degree: om.deg(),
        simple: g.deg() <= 0,
        gcd_degree: g.deg().max(0),
        factors,
    })
}

/// The four printed non-simple examples, each violating a hypothesis.
pub fn anchor_families() -> Vec<FamilySpec> {
    let p = |v: &[usize]| Partition::from_slice(v);
    vec![
        FamilySpec::new(p(&[1, 1]), p(&[1]), rat(1, 1), rat(1, 1)),
        FamilySpec::new(p(&[2]), p(&[2]), rat(5, 2), rat(-3, 2)),
        FamilySpec::new(p(&[1, 1]), p(&[1]), rat(9, 2), rat(9, 2)),
        FamilySpec::new(p(&[2]), p(&[4]), rat(1, 2), rat(-1, 2)),
    ]
}

pub fn conjecture_scan(families: &[FamilySpec], anchors: &[FamilySpec]) -> ConjectureReport {
    let results: Vec<(bool, Option<ScanCase>)> = families
        .par_iter()
        .map(|f| {
            let h = Hypotheses::of(f).all();
            (h, if h { scan_case(f) } else { None })
        })
        .collect();
    let mut checked = 0;
    let mut outside = 0;
    let mut degenerate = 0;
    let mut counterexamples = Vec::new();
    let mut non_triangular = Vec::new();
    for (h, case) in results {
        if !h {
            outside += 1;
            continue;
        }
        let Some(case) = case else {
            degenerate += 1;
            continue;
        };
        checked += 1;
        if case.factors.iter().any(|f| !is_triangular(f.multiplicity)) {
            non_triangular.push(case.clone());
        }
        if !case.simple {
            counterexamples.push(case);
        }
    }
    let anchors = anchors
        .iter()
        .filter_map(|f| {
            let case = scan_case(f)?;
            let hyp = Hypotheses::of(f);
            Some(Anchor {
                confirmed_non_simple: !case.simple,
                violations: hyp.violations(f),
                hypotheses: hyp,
                case,
            })
        })
        .collect();
    ConjectureReport {
        checked,
        outside_hypotheses: outside,
        degenerate,
        counterexamples,
        non_triangular,
        anchors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_numbers() {
        let t: Vec<usize> = (1..30).filter(|&k| is_triangular(k)).collect();
        assert_eq!(t, vec![1, 3, 6, 10, 15, 21, 28]);
    }

    #[test]
    fn first_anchor_is_a_triple_root() {
        let a = &anchor_families()[0];
        let c = scan_case(a).unwrap();
        assert!(!c.simple);
        assert_eq!(c.factors.len(), 1);
        assert_eq!(c.factors[0].multiplicity, 3);
        let h = Hypotheses::of(a);
        assert!(!h.beta_above_m1);
    }

    #[test]
    fn small_grid_has_no_counterexample() {
        let grid = ConjectureGrid {
            max_size: 4,
            ..ConjectureGrid::default()
        };
        let r = conjecture_scan(&grid.families(), &[]);
        assert!(r.checked > 50);
        assert!(r.counterexamples.is_empty());
    }
}
