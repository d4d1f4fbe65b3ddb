//! Executes a validated RunConfig.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use xjacobi::exceptional::{exceptional_jacobi, identity_grid, predicted_leading_coefficient, run_suite};
use xjacobi::wronskian::{check_admissibility, omega, predicted_degree_lc};
use xjacobi::zeros::{
    anchor_families, arcsine_record, attraction_record, classify_polynomial, classify_zeros, conjecture_scan,
    decimal_digits, electrostatic_residual, fmt_float, mehler_heine_record, omega_zeros, ConvergenceRecord, Root,
    ScanCase,
};
use xjacobi::{Error, ExceptionalSpec, FamilySpec, Poly};

use crate::config::{Command, RunConfig};

/// Significant digits of every CSV number.
pub const CSV_DIGITS: usize = 20;

pub struct Artifact {
    pub result: Value,
    /// Header row first.
    pub table: Vec<Vec<String>>,
    /// A verification found a counterexample.
    pub failed: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("artifact values serialize")
}

fn header(cols: &[&str]) -> Vec<String> {
    cols.iter().map(|c| c.to_string()).collect()
}

/// Seeded subsample preserving grid order.
fn sample<T: Clone>(items: Vec<T>, k: Option<usize>, seed: u64) -> Vec<T> {
    match k {
        Some(k) if k < items.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut idx = rand::seq::index::sample(&mut rng, items.len(), k).into_vec();
            idx.sort_unstable();
            idx.into_iter().map(|i| items[i].clone()).collect()
        }
        _ => items,
    }
}

fn poly_json(p: &Poly) -> Value {
    json!({
        "coefficients": p,
        "degree": p.deg(),
        "leading_coefficient": if p.is_zero() { Value::Null } else { Value::String(p.lc().to_string()) },
        "text": p.to_string(),
    })
}

fn poly_rows(name: &str, p: &Poly, table: &mut Vec<Vec<String>>) {
    for (i, c) in p.coeffs().iter().enumerate() {
        table.push(vec![name.to_string(), i.to_string(), c.to_string()]);
    }
}

fn root_row(kind: &str, r: &Root) -> Vec<String> {
    vec![
        kind.to_string(),
        fmt_float(&r.value.re, CSV_DIGITS),
        fmt_float(&r.value.im, CSV_DIGITS),
        r.mult.to_string(),
    ]
}

fn record_rows(records: &[ConvergenceRecord], prefix: &[String], table: &mut Vec<Vec<String>>) {
    for r in records {
        let mut row = prefix.to_vec();
        row.extend(r.csv_row(CSV_DIGITS));
        table.push(row);
    }
}

fn construct(family: &FamilySpec, n: Option<usize>) -> Result<Artifact, Error> {
    let om = omega(family)?;
    let predicted = predicted_degree_lc(family);
    let omega_matches = predicted
        .as_ref()
        .ok()
        .map(|p| om.deg() == p.degree as i64 && om.lc() == p.lc);
    let mut table = vec![header(&["polynomial", "power", "coefficient"])];
    poly_rows("omega", &om, &mut table);
    let mut result = json!({
        "family": family,
        "omega": poly_json(&om),
        "omega_predicted": match &predicted {
            Ok(p) => to_value(p),
            Err(e) => json!({ "unavailable": e.to_string() }),
        },
        "omega_matches_prediction": omega_matches,
        "admissibility": check_admissibility(family, n),
    });
    if let Some(n) = n {
        let spec = ExceptionalSpec::new(family.clone(), n)?;
        let p = exceptional_jacobi(&spec)?;
        let lc = predicted_leading_coefficient(&spec);
        poly_rows("P", &p, &mut table);
        result["n"] = json!(n);
        result["s"] = json!(spec.s());
        result["polynomial"] = poly_json(&p);
        result["polynomial_predicted"] = json!({ "degree": n, "lc": lc.to_string() });
        result["polynomial_matches_prediction"] = json!(p.deg() == n as i64 && p.lc() == lc);
    }
    Ok(Artifact {
        result,
        table,
        failed: false,
    })
}

fn figure1(spec: &ExceptionalSpec, prec: u32) -> Result<Artifact, Error> {
    let p = exceptional_jacobi(spec)?;
    let c = classify_polynomial(spec, &p, prec)?;
    let (om, zs, _) = omega_zeros(&spec.family, prec)?;
    let digits = decimal_digits(prec);
    let mut table = vec![header(&["kind", "re", "im", "mult", "nearest_omega_zero", "distance"])];
    for z in &zs {
        let mut row = vec![
            "omega".to_string(),
            fmt_float(&z.value.re, CSV_DIGITS),
            fmt_float(&z.value.im, CSV_DIGITS),
            z.mult.to_string(),
        ];
        row.extend([String::new(), String::new()]);
        table.push(row);
    }
    for r in &c.regular {
        let mut row = root_row("regular", r);
        row.extend([String::new(), String::new()]);
        table.push(row);
    }
    let mut exceptional = Vec::new();
    let mut max_distance = 0f64;
    for r in &c.exceptional {
        let nearest = zs
            .iter()
            .enumerate()
            .map(|(i, z)| (i, r.value.sub(&z.value).abs()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).expect("finite distances"));
        let mut row = root_row("exceptional", r);
        let mut entry = to_value(r);
        if let Some((i, d)) = nearest {
            max_distance = max_distance.max(d.to_f64());
            row.extend([i.to_string(), fmt_float(&d, CSV_DIGITS)]);
            entry["nearest_omega_zero"] = json!(i);
            entry["distance"] = json!(fmt_float(&d, digits));
        }
        table.push(row);
        exceptional.push(entry);
    }
    let result = json!({
        "family": spec.family,
        "n": spec.n,
        "degree": c.degree,
        "omega": poly_json(&om),
        "omega_zeros": zs,
        "regular_zeros": c.regular,
        "exceptional_zeros": exceptional,
        "N_n": c.n_regular,
        "exceptional_count": c.exceptional.iter().map(|r| r.mult).sum::<usize>(),
        "max_exceptional_to_omega_distance": format!("{max_distance:.6}"),
    });
    Ok(Artifact {
        result,
        table,
        failed: false,
    })
}

fn scan_rows(role: &str, c: &ScanCase, table: &mut Vec<Vec<String>>) {
    let mults: Vec<String> = c.factors.iter().map(|f| f.multiplicity.to_string()).collect();
    table.push(vec![
        role.to_string(),
        c.family.lambda.to_string(),
        c.family.mu.to_string(),
        c.family.alpha.to_string(),
        c.family.beta.to_string(),
        c.degree.to_string(),
        c.simple.to_string(),
        mults.join(" "),
    ]);
}

pub fn run(cfg: &RunConfig) -> Result<Artifact, Error> {
    let prec = cfg.precision_bits;
    match &cfg.command {
        Command::Construct { family, n } => construct(family, *n),
        Command::Verify { suite, grid, sample: k } => {
            let inputs = sample(identity_grid(*grid, *suite), *k, cfg.seed);
            let report = run_suite(&inputs);
            let mut table = vec![header(&["identity", "pass", "fail", "skipped"])];
            for (name, t) in &report.cases {
                table.push(vec![name.clone(), t.pass.to_string(), t.fail.to_string(), t.skipped.to_string()]);
            }
            let mut result = to_value(&report);
            result["all_pass"] = json!(report.all_pass());
            Ok(Artifact {
                result,
                table,
                failed: !report.all_pass(),
            })
        }
        Command::Zeros { spec } => {
            let c = classify_zeros(spec, prec)?;
            let mut table = vec![header(&["kind", "re", "im", "mult"])];
            table.extend(c.regular.iter().map(|r| root_row("regular", r)));
            table.extend(c.exceptional.iter().map(|r| root_row("exceptional", r)));
            Ok(Artifact {
                result: to_value(&c),
                table,
                failed: false,
            })
        }
        Command::MehlerHeine { family, k, n_list, edge } => {
            let r = mehler_heine_record(family, *k, n_list, *edge, prec)?;
            let mut table = vec![header(&["n", "observable", "target", "error"])];
            record_rows(&r.records, &[], &mut table);
            Ok(Artifact {
                result: to_value(&r),
                table,
                failed: false,
            })
        }
        Command::Arcsine { family, n_list } => {
            let (records, skipped) = arcsine_record(family, n_list, prec)?;
            let mut table = vec![header(&["n", "observable", "target", "error"])];
            record_rows(&records, &[], &mut table);
            Ok(Artifact {
                result: json!({ "records": records, "skipped": skipped }),
                table,
                failed: false,
            })
        }
        Command::Attraction { family, n_list } => {
            let r = attraction_record(family, n_list, prec)?;
            let mut table = vec![header(&["zero", "n", "observable", "target", "error"])];
            for (i, s) in r.series.iter().enumerate() {
                record_rows(&s.records, &[i.to_string()], &mut table);
            }
            Ok(Artifact {
                result: to_value(&r),
                table,
                failed: false,
            })
        }
        Command::Electrostatic { spec, j, form } => {
            let indices: Vec<usize> = match j {
                Some(j) => vec![*j],
                None => {
                    let (_, zs, _) = omega_zeros(&spec.family, prec)?;
                    (0..zs.len()).filter(|&i| zs[i].mult == 1).collect()
                }
            };
            let mut reports = Vec::new();
            let mut skipped = Vec::new();
            for i in indices {
                match electrostatic_residual(spec, i, *form, prec) {
                    Ok(r) => reports.push((i, r)),
                    // with no explicit index, zeros outside the identity's hypotheses are listed, not fatal
                    Err(Error::Domain(msg)) if j.is_none() => skipped.push(json!({ "j": i, "reason": msg })),
                    Err(e) => return Err(e),
                }
            }
            let mut table = vec![header(&["j", "re", "im", "residual"])];
            for (i, r) in &reports {
                table.push(vec![
                    i.to_string(),
                    fmt_float(&r.zero.value.re, CSV_DIGITS),
                    fmt_float(&r.zero.value.im, CSV_DIGITS),
                    fmt_float(&r.residual, CSV_DIGITS),
                ]);
            }
            let entries: Vec<Value> = reports
                .iter()
                .map(|(i, r)| {
                    let mut v = to_value(r);
                    v["j"] = json!(i);
                    v
                })
                .collect();
            Ok(Artifact {
                result: json!({ "residuals": entries, "skipped": skipped }),
                table,
                failed: false,
            })
        }
        Command::ScanConjecture { grid, sample: k } => {
            let families = sample(grid.families(), *k, cfg.seed);
            let r = conjecture_scan(&families, &anchor_families());
            let mut table = vec![header(&["role", "lambda", "mu", "alpha", "beta", "degree", "simple", "multiplicities"])];
            for c in &r.counterexamples {
                scan_rows("counterexample", c, &mut table);
            }
            for a in &r.anchors {
                scan_rows("anchor", &a.case, &mut table);
            }
            let mut result = to_value(&r);
            result["families"] = json!(families.len());
            Ok(Artifact {
                result,
                table,
                failed: false,
            })
        }
        Command::Figure1 { spec } => figure1(spec, prec),
    }
}
