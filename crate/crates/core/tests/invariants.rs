//! Property tests for the zero-counting and factorization invariants.

use proptest::prelude::*;
use rug::Rational;

use xjacobi::exceptional::{degree_set, exceptional_jacobi};
use xjacobi::polyalg::{int, rat};
use xjacobi::wronskian::{check_admissibility, omega};
use xjacobi::zeros::{
    classify_zeros, conjecture_scan, count_real_roots, find_roots, is_triangular, mehler_heine_record, square_free, ConjectureGrid, Edge,
};
use xjacobi::{ExceptionalSpec, FamilySpec, Partition};

fn partition() -> impl Strategy<Value = Partition> {
    (0usize..=4).prop_flat_map(|n| {
        let all = Partition::all_of_size(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn param() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn family() -> impl Strategy<Value = FamilySpec> {
    (partition(), partition(), param(), param()).prop_map(|(l, m, a, b)| FamilySpec::new(l, m, a, b))
}

/// An admissible degree of the family, up to 14.
fn spec() -> impl Strategy<Value = Option<ExceptionalSpec>> {
    (family(), 0usize..6).prop_map(|(f, pick)| {
        let ns = degree_set(&f.lambda, &f.mu, 14);
        let n = *ns.get(pick.min(ns.len().saturating_sub(1)))?;
        let spec = ExceptionalSpec::new(f, n).ok()?;
        check_admissibility(&spec.family, Some(n)).xjp_ok().then_some(spec)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn numeric_interval_count_matches_sturm(spec in spec()) {
        let Some(spec) = spec else { return Ok(()) };
        let p = exceptional_jacobi(&spec).unwrap();
        prop_assume!(p.deg() >= 1);
        let prec = 128;
        let roots = find_roots(&p, prec).unwrap();
        let exact = count_real_roots(&p, &int(-1), &int(1), true).unwrap();
        prop_assert_eq!(roots.numeric_interval_count(prec), exact);
    }

    /// Zeros at ±1 carry parameter-dependent multiplicities; the law is for the rest.
    #[test]
    fn omega_multiplicities_are_triangular(f in family()) {
        let om = omega(&f).unwrap();
        prop_assume!(om.deg() >= 1);
        let sf = square_free(&om).unwrap();
        for (g, k) in &sf.factors {
            let at_ends = g.root_multiplicity(&int(1)) + g.root_multiplicity(&int(-1));
            if g.deg() as usize > at_ends {
                prop_assert!(is_triangular(*k), "multiplicity {} of {} for {}", k, g, f);
            }
        }
    }

    #[test]
    fn regular_count_lower_bound(spec in spec()) {
        let Some(spec) = spec else { return Ok(()) };
        prop_assume!(spec.n >= 1);
        let c = classify_zeros(&spec, 128).unwrap();
        if c.checks.count_bound_applies {
            prop_assert_eq!(c.checks.count_bound_holds, Some(true), "{}", spec);
        }
    }

    #[test]
    fn regular_zeros_simple_under_orthogonality(
        l in prop::sample::select(vec![vec![], vec![1, 1], vec![2, 2]]),
        m in partition(),
        a in (-3i64..=12).prop_map(|p| rat(p, 4)),
        off in (1i64..=12).prop_map(|p| rat(p, 4)),
        pick in 0usize..8,
    ) {
        let probe = FamilySpec::new(Partition::from_slice(&l), m.clone(), int(0), int(0));
        let b = Rational::from(&off + probe.m1() as i64);
        let f = FamilySpec::new(Partition::from_slice(&l), m, a, b);
        let ns = degree_set(&f.lambda, &f.mu, 20);
        let n = ns[pick.min(ns.len() - 1)];
        let spec = ExceptionalSpec::new(f, n).unwrap();
        let Ok(c) = classify_zeros(&spec, 128) else { return Ok(()) };
        if c.checks.orthogonality_applies {
            prop_assert!(c.checks.regular_simple, "{}", spec);
            prop_assert_eq!(c.checks.count_matches, Some(true), "{}", spec);
        }
    }
}

#[test]
fn conjecture_grid_multiplicities_are_triangular() {
    let r = conjecture_scan(&ConjectureGrid::default().families(), &[]);
    assert!(r.checked > 1000);
    assert!(r.non_triangular.is_empty(), "{:?}", r.non_triangular.first().map(|c| c.family.to_string()));
}

#[test]
fn bessel_functional_limit_converges() {
    let families = [
        FamilySpec::new(Partition::empty(), Partition::empty(), int(0), int(0)),
        FamilySpec::new(Partition::from_slice(&[3, 1, 1]), Partition::from_slice(&[3, 3]), int(0), rat(1, 2)),
    ];
    for f in families {
        let r = mehler_heine_record(&f, 1, &[100, 400], Edge::Plus, 128).unwrap();
        let errs = r.functional_max_errors();
        assert_eq!(errs.len(), 2, "{f}");
        assert!(errs[1].1 < errs[0].1, "{f}: {errs:?}");
    }
}
