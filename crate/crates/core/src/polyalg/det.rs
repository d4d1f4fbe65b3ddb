use super::poly::Poly;

/// Determinant over Q[x] by fraction-free (Bareiss) elimination.
pub fn det_bareiss(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign_neg = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // prefer the lowest-degree nonzero pivot
            let swap = (k + 1..n)
                .filter(|&i| !m[i][k].is_zero())
                .min_by_key(|&i| m[i][k].deg());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign_neg = !sign_neg;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t
                    .exact_div(&prev)
                    .expect("Bareiss division must be exact");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_neg {
        -d
    } else {
        d
    }
}

/// Laplace expansion along the first row; intended for r <= 3.
pub fn det_minors(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    match n {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Poly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &det_minors(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Minors up to 3x3 by expansion, Bareiss beyond.
pub fn det_auto(m: Vec<Vec<Poly>>) -> Poly {
    if m.len() <= 3 {
        det_minors(&m)
    } else {
        det_bareiss(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;
    use proptest::prelude::*;

    fn arb_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Poly>>> {
        prop::collection::vec(
            prop::collection::vec((-5i64..5, 1i64..4), 0..3).prop_map(|v| {
                Poly::new(v.into_iter().map(|(a, b)| rat(a, b)).collect())
            }),
            n * n,
        )
        .prop_map(move |flat| flat.chunks(n).map(|c| c.to_vec()).collect())
    }

    #[test]
    fn identity_and_singular() {
        let one = Poly::one();
        let z = Poly::zero();
        let id = vec![
            vec![one.clone(), z.clone(), z.clone()],
            vec![z.clone(), one.clone(), z.clone()],
            vec![z.clone(), z.clone(), one.clone()],
        ];
        assert_eq!(det_bareiss(id.clone()), one);
        let mut sing = id;
        sing[2] = sing[1].clone();
        assert!(det_bareiss(sing).is_zero());
    }

    #[test]
    fn needs_pivot_swap() {
        let x = Poly::x();
        let one = Poly::one();
        let z = Poly::zero();
        let m = vec![vec![z.clone(), one.clone()], vec![x.clone(), z.clone()]];
        assert_eq!(det_bareiss(m), -x);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn bareiss_matches_laplace(m in (1usize..5).prop_flat_map(arb_matrix)) {
            prop_assert_eq!(det_bareiss(m.clone()), det_minors(&m));
        }
    }
}
