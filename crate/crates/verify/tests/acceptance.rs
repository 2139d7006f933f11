//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use clap::Parser;
use maxrep_cli::{run, Cli};
use maxrep_core::currents::{
    crossratio_axiom_check, lamination_dichotomy_check, period, period_via_length, FramingCrossratio,
};
use maxrep_core::fields::{compare, int, Field, OrderSpec, RatFunc, Rational, Sign};
use maxrep_core::linalg::{crossratio, maslov, Lagrangian, Matrix};
use maxrep_core::reps::{pants_representation, BoundaryPoint, DiagonalModel, Letter, Word};
use maxrep_core::spectra::{building_pseudodistance, char_poly, jordan_valuation, JordanMode, NormChoice};
use maxrep_core::valuations::ValuationSpec;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use rayon::prelude::*;
use serde_json::Value;

type Outcome = Result<String, String>;

/// Runs one job exactly as the `maxrep` binary would, in process.
fn maxrep(args: &[&str]) -> Result<(Value, i32), String> {
    let cli = Cli::try_parse_from(std::iter::once("maxrep").chain(args.iter().copied())).map_err(|e| e.to_string())?;
    Ok(run(&cli))
}

fn within(elapsed: Duration, limit: Duration, detail: String) -> Outcome {
    if elapsed < limit {
        Ok(detail)
    } else {
        Err(format!("{detail}; took {elapsed:?}, limit {limit:?}"))
    }
}

fn pants_reproduction() -> Outcome {
    let expected: RatFunc = "-256*X^2+320-16/X^2".parse().map_err(|e| format!("{e}"))?;
    let expected = expected.to_string();
    let start = Instant::now();
    let (r, code) = maxrep(&["pants-demo", "--order", "aplus:0"])?;
    let elapsed = start.elapsed();
    if code != 0 {
        return Err(format!("exit code {code}"));
    }
    let res = &r["result"];
    let symplectic = res["relations"]["generators"]
        .as_array()
        .is_some_and(|g| g.iter().all(|e| e["symplectic"] == true));
    let relator = res["relations"]["relators"]
        .as_array()
        .is_some_and(|rs| rs.iter().all(|e| e["value"] == "identity"));
    let trace = res["trace"]["value"].as_str().unwrap_or_default();
    let detail = format!("symplectic={symplectic} relator_identity={relator} trace={trace} expected={expected}");
    if !symplectic || !relator || trace != expected {
        return Err(detail);
    }
    within(elapsed, Duration::from_secs(1), detail)
}

fn closed_point_matrix() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (order, want) in [
        ("aplus:0", "Closed"),
        ("plusinf", "Closed"),
        ("aplus:1", "NotClosedIntegral"),
        ("aminus:1", "NotClosedIntegral"),
    ] {
        let (r, code) = maxrep(&["closed-point", "--order", order])?;
        let res = &r["result"];
        let got = res["verdict"].as_str().unwrap_or("error");
        let line = match got {
            "Closed" => format!("{order}: Closed by {} of length {}", res["witness"], res["length"]),
            _ => format!("{order}: {got}"),
        };
        let positive = got != "Closed"
            || res["length"]
                .as_str()
                .and_then(maxrep_core::fields::parse_rational)
                .is_some_and(|l| l.is_positive());
        if code != 0 || got != want || !positive {
            return Err(format!("{line}, expected {want}"));
        }
        seen.push(line);
    }
    within(start.elapsed(), Duration::from_secs(60), seen.join("; "))
}

fn multicurve_certificates() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for order in ["aplus:0", "plusinf"] {
        let (r, code) = maxrep(&["multicurve", "--order", order, "--max-length", "4"])?;
        let res = &r["result"];
        if code != 0 || res["classification"] != "MulticurveCertified" {
            return Err(format!("{order}: {}", r["result"]["classification"]));
        }
        let k = res["K"].as_u64().ok_or("missing K")?;
        let residues = res["residues"].as_array().ok_or("missing residues")?;
        // Recheck the report independently of its `integral` flags.
        for e in residues {
            let p = maxrep_core::fields::parse_rational(e["period"].as_str().unwrap_or("?"))
                .ok_or_else(|| format!("unparsable period {}", e["period"]))?;
            if !(p * Rational::from_integer(k.into())).is_integer() {
                return Err(format!("{order}: period of {} is not in (1/{k})Z", e["word"]));
            }
        }
        seen.push(format!("{order}: K={k} over {} words", residues.len()));
    }
    within(start.elapsed(), Duration::from_secs(120), seen.join("; "))
}

fn random_word(rng: &mut common::TestRng, len: usize) -> Word {
    let alphabet = Letter::alphabet(3);
    let mut w = Word::empty();
    while w.len() < len {
        if let Some(next) = w.push(alphabet[rng.gen_range(0..alphabet.len())]) {
            w = next;
        }
    }
    w
}

/// Roots of the monic reciprocal quartic `t^4 + a t^3 + b t^2 + a t + 1`.
fn reciprocal_quartic_roots(a: &Rational, b: &Rational) -> Vec<Complex64> {
    // With s = t + 1/t: s^2 + a s + (b - 2) = 0.
    let c = b - int(2);
    let disc = a * a - int(4) * &c;
    let af = a.to_f64().unwrap_or(f64::NAN);
    let cf = c.to_f64().unwrap_or(f64::NAN);
    let sq = Complex64::new(disc.to_f64().unwrap_or(f64::NAN), 0.0).sqrt();
    let s1 = if af >= 0.0 { -(sq + af) / 2.0 } else { (sq - af) / 2.0 };
    let s2 = if s1.norm() == 0.0 { -af - s1 } else { Complex64::new(cf, 0.0) / s1 };
    let mut out = Vec::new();
    for s in [s1, s2] {
        let r = (s * s - 4.0).sqrt();
        let (p, q) = ((s + r) / 2.0, (s - r) / 2.0);
        let big = if p.norm() >= q.norm() { p } else { q };
        out.push(big);
        out.push(1.0 / big);
    }
    out
}

fn numeric_oracle() -> Outcome {
    let rep = pants_representation(OrderSpec::AtPlus(int(0)), ValuationSpec::Adic(int(0))).map_err(|e| e.to_string())?;
    let x = Rational::new(1.into(), 1_000_000.into());
    let scale = (1e-6f64).ln().abs();
    let mut rng = common::rng(4);
    let words: Vec<Word> = (0..60)
        .map(|_| {
            let len = rng.gen_range(1..=5);
            random_word(&mut rng, len)
        })
        .collect();
    // (misses, worst error, where) for zero and for nonzero exact entries
    let mut stats = [(0usize, 0.0f64, String::new()), (0usize, 0.0f64, String::new())];
    for w in &words {
        let g = rep.evaluate(w);
        let exact = jordan_valuation(&g, rep.val(), JordanMode::Symplectic).map_err(|e| e.to_string())?;
        let cp = char_poly(&g);
        let at = |i: usize| cp.coeff(i).eval(&x).ok_or("pole at the sample point");
        let (c0, c1, c3, c4) = (at(0)?, at(1)?, at(3)?, at(4)?);
        if c0 != int(1) || c4 != int(1) || c1 != c3 {
            return Err(format!("characteristic polynomial of {} is not reciprocal", rep.presentation().show(w)));
        }
        let roots = reciprocal_quartic_roots(&c3, &at(2)?);
        let mut logs: Vec<f64> = roots.iter().map(|t| t.norm().ln() / scale).collect();
        logs.sort_by(|p, q| q.total_cmp(p));
        for (j, e) in exact.entries().iter().enumerate() {
            let e = e.to_f64().unwrap_or(f64::NAN);
            let (slot, err) = if e == 0.0 {
                (0, logs[j].abs())
            } else {
                (1, (logs[j] - e).abs() / e.abs())
            };
            // strict for zero entries, inclusive for the relative bound
            let miss = err.is_nan() || if slot == 0 { err >= 0.05 } else { err > 0.05 };
            let st = &mut stats[slot];
            if miss {
                st.0 += 1;
            }
            if err.is_nan() || err > st.1 {
                st.1 = err;
                st.2 = format!("{} (exact {exact}, numeric {:.4})", rep.presentation().show(w), logs[j]);
            }
        }
    }
    let [zero, nonzero] = &stats;
    let detail = format!(
        "{} words; zero entries: {} out of tolerance, worst {:.4} at {}; nonzero entries: {} out of tolerance, \
         worst relative error {:.4} at {}",
        words.len(),
        zero.0,
        zero.1,
        zero.2,
        nonzero.0,
        nonzero.1,
        nonzero.2
    );
    if zero.0 + nonzero.0 == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn maslov_suite() -> Outcome {
    let ord = OrderSpec::PlusInfinity;
    let violations: usize = (0..1000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = common::rng(5_000 + i);
            let n = 1 + (i % 3) as usize;
            let l: Vec<Lagrangian<Rational>> = (0..4).map(|_| common::lagrangian_q(&mut rng, n)).collect();
            let t = |a: usize, b: usize, c: usize| maslov(&l[a], &l[b], &l[c], &ord).expect("maslov index");
            let t012 = t(0, 1, 2);
            let g = common::symplectic_q(&mut rng, n);
            let m: Vec<Lagrangian<Rational>> = l.iter().map(|x| x.apply(&g).expect("apply")).collect();
            let checks = [
                t012.unsigned_abs() as usize <= n,
                t(1, 0, 2) == -t012,
                t(0, 2, 1) == -t012,
                t(2, 1, 0) == -t012,
                t(1, 2, 3) - t(0, 2, 3) + t(0, 1, 3) - t012 == 0,
                maslov(&m[0], &m[1], &m[2], &ord).expect("maslov index") == t012,
            ];
            checks.iter().filter(|ok| !**ok).count()
        })
        .sum();
    let detail = format!("1000 triples, n in 1..=3, {violations} violations");
    if violations == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn crossratio_suite() -> Outcome {
    let results: Vec<(usize, usize, usize, usize)> = (0..1000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = common::rng(6_000 + i);
            let n = 1 + (i % 3) as usize;
            let ord = OrderSpec::AtPlus(int(0));
            let val = ValuationSpec::Adic(int(0));
            // Axioms on five nested boundary points.
            let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
            let conj = common::lift(&common::symplectic_q(&mut rng, n));
            let model = DiagonalModel::new(exps, conj, ord).expect("model");
            let pts = common::model_points(&mut rng, &model, 5);
            let framing = model.framing(&pts).expect("framing");
            let cr = FramingCrossratio::new(&framing, val);
            let report = crossratio_axiom_check(&cr, &[[0, 1, 2, 3, 4]]).expect("axiom check");
            let axiom_bad = usize::from(!report.holds());
            let undefined = usize::from(report.symmetry_checked + report.additivity_checked < 2);
            // Periods from the framing against translation lengths.
            let conj = common::lift(&common::symplectic_q(&mut rng, n));
            let case = common::eigen_case_with(&mut rng, conj);
            let w = Word::generator(0);
            let by_length = period_via_length(&case.rep, &w, NormChoice::SymplecticSum).expect("length");
            let mut compared = 0;
            let mut period_bad = 0;
            for x in &case.aux {
                if let Ok(p) = period(&case.framing, &w, &case.rep, &case.minus, x, &case.plus) {
                    compared += 1;
                    period_bad += usize::from(p.period != by_length.period);
                }
            }
            (axiom_bad, undefined, compared, period_bad)
        })
        .collect();
    let sum = |f: fn(&(usize, usize, usize, usize)) -> usize| results.iter().map(f).sum::<usize>();
    let (axioms, undefined, compared, periods) = (sum(|r| r.0), sum(|r| r.1), sum(|r| r.2), sum(|r| r.3));
    let detail = format!(
        "1000 configurations, {axioms} axiom violations, {undefined} with undefined values, \
         {compared} period comparisons with {periods} mismatches"
    );
    if axioms == 0 && periods == 0 && compared > 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn infinitely_large(ord: &OrderSpec) -> RatFunc {
    let x = RatFunc::x();
    match ord {
        OrderSpec::AtPlus(a) => (x - &RatFunc::constant(a.clone())).inv().expect("nonzero"),
        OrderSpec::AtMinus(a) => -(x - &RatFunc::constant(a.clone())).inv().expect("nonzero"),
        OrderSpec::PlusInfinity => x,
        OrderSpec::MinusInfinity => -x,
    }
}

fn order_suite() -> Outcome {
    let bound = RatFunc::constant(Rational::from_integer(BigInt::from(2u8).pow(64)));
    let mut violations = Vec::new();
    for (k, ord) in common::all_orders().into_iter().enumerate() {
        if compare(&infinitely_large(&ord), &bound, &ord) != Ordering::Greater {
            violations.push(format!("{ord}: witness not above 2^64"));
        }
        let bad: usize = (0..1000u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = common::rng(7_000 + 1_000 * k as u64 + i);
                let [a, b, c] = [0; 3].map(|_| common::ratfunc(&mut rng, 3));
                let (sa, sb) = (a.sign(&ord), b.sign(&ord));
                let pos = |f: &RatFunc| f.sign(&ord) == Sign::Positive;
                let le = |f: &RatFunc, g: &RatFunc| compare(f, g, &ord) != Ordering::Greater;
                let checks = [
                    (sa == Sign::Zero) == a.is_zero(),
                    (-a.clone()).sign(&ord) == sa.flip(),
                    !(pos(&a) && pos(&b)) || pos(&(a.clone() + &b)),
                    !(pos(&a) && pos(&b)) || pos(&(a.clone() * &b)),
                    (a.clone() * &b).sign(&ord) == sa.times(sb),
                    a.is_zero() || pos(&(a.clone() * &a)),
                    compare(&(a.clone() + &c), &(b.clone() + &c), &ord) == compare(&a, &b, &ord),
                    !(le(&a, &b) && le(&b, &c)) || le(&a, &c),
                ];
                checks.iter().filter(|ok| !**ok).count()
            })
            .sum();
        if bad > 0 {
            violations.push(format!("{ord}: {bad} axiom violations"));
        }
    }
    if violations.is_empty() {
        Ok("1000 samples under each of 4 orders, witnesses above 2^64, 0 violations".into())
    } else {
        Err(violations.join("; "))
    }
}

fn pseudodistance_suite() -> Outcome {
    let bad: usize = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = common::rng(8_000 + i);
            let n = 1 + (i % 2) as usize;
            let [g1, g2, g3, k] = [0; 4].map(|_| common::symplectic_k(&mut rng, n));
            let mut bad = 0;
            for val in [ValuationSpec::Adic(int(0)), ValuationSpec::AtInfinity] {
                for norm in [NormChoice::SymplecticSum, NormChoice::SpreadMax] {
                    let d = |a: &Matrix<RatFunc>, b: &Matrix<RatFunc>| {
                        building_pseudodistance(a, b, &val, norm).expect("pseudodistance")
                    };
                    let d12 = d(&g1, &g2);
                    let checks = [
                        d12 == d(&g2, &g1),
                        d(&g1, &g3) <= &d12 + &d(&g2, &g3),
                        d(&(&k * &g1), &(&k * &g2)) == d12,
                        !d12.is_negative(),
                    ];
                    bad += checks.iter().filter(|ok| !**ok).count();
                }
            }
            bad
        })
        .sum();
    let detail = format!("100 triples, both valuations and norms, {bad} violations");
    if bad == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn lamination_suite() -> Outcome {
    let ord = OrderSpec::AtPlus(int(0));
    let val = ValuationSpec::Adic(int(0));
    let mut rng = common::rng(9);
    let mut xs = Vec::new();
    while xs.len() < 100 {
        let conj = common::lift(&common::symplectic_q(&mut rng, 1));
        let model = DiagonalModel::new(vec![1], conj, ord.clone()).map_err(|e| e.to_string())?;
        let pts: Vec<BoundaryPoint> = common::model_points(&mut rng, &model, 4);
        let l: Vec<Lagrangian<RatFunc>> = pts.iter().map(|p| model.lagrangian(p).expect("lagrangian")).collect();
        xs.push(crossratio(&l[0], &l[1], &l[3], &l[2]).map_err(|e| e.to_string())?);
    }
    let report = lamination_dichotomy_check(&xs, &ord, &val).map_err(|e| e.to_string())?;
    let units = report
        .branches
        .iter()
        .filter(|b| **b == maxrep_core::currents::DichotomyBranch::Unit)
        .count();
    let detail = format!(
        "100 values, {units} with nu(x)=0, {} with nu(x/(x-1))=0, {} violations",
        report.branches.len() - units,
        report.violations.len()
    );
    if report.violations.is_empty() {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("pants reproduction", pants_reproduction),
        ("closed-point matrix", closed_point_matrix),
        ("multicurve certificates", multicurve_certificates),
        ("numeric oracle", numeric_oracle),
        ("maslov suite", maslov_suite),
        ("crossratio suite", crossratio_suite),
        ("ordered-field suite", order_suite),
        ("pseudodistance suite", pseudodistance_suite),
        ("lamination dichotomy", lamination_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {} [{name}]: PASS - {detail} ({ms} ms)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL - {detail} ({ms} ms)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
