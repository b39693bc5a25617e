//! Acceptance suite: one line per criterion, exact equality throughout.
//! Runs as a plain binary under `cargo test` (no libtest harness).

mod common;

use std::time::Instant;

use common::{hook_length_count, leibniz_det};
use immanant_lab::cli::run_with_env;
use immanant_lab::gadgets::{build_projection, matrix_e, matrix_h};
use immanant_lab::identities::{
    check_block_formula, check_cycle_format, check_imz, check_orbit_counts, check_pieri, check_strip_projection,
    ProjectionKind,
};
use immanant_lab::linalg::{
    determinant, immanant, load_matrix, matrix_to_json, permanent_direct, permanent_ryser, save_matrix, Matrix, Scalar,
};
use immanant_lab::partitions::{factorial, partitions_of, partitions_up_to};
use immanant_lab::random::{case_rng, random_matrix};
use immanant_lab::symgroup::{character_table, StripKind};
use immanant_lab::{Limits, Partition};
use num_bigint::BigInt;
use rand::Rng;

const SEED: u64 = 20240531;
const LIM: Limits = Limits::DEFAULT;

/// Outcome of one criterion: number of cases checked and the first failure.
type Verdict = Result<usize, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn expect(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn projection_identity() -> Verdict {
    let mut cases = 0;
    for lambda in partitions_up_to(8) {
        for i in 1..=lambda.length() {
            let k = lambda.gap(i);
            if k == 0 {
                continue;
            }
            for sample in 0..5 {
                let a = random_matrix(
                    &mut case_rng(SEED, &format!("accept/projection/{lambda}/{i}/{sample}")),
                    k,
                );
                let g = build_projection(&lambda, i, &a).map_err(|e| e.to_string())?;
                let imm = immanant(&lambda, &g, &LIM).map_err(|e| e.to_string())?;
                let per = permanent_ryser(&a, &LIM).map_err(|e| e.to_string())?;
                expect(imm == per, || {
                    format!("lambda={lambda} i={i} sample={sample}: {imm} != {per}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn gadget_lemma() -> Verdict {
    let mut cases = 0;
    for q in 1..=7 {
        let h = matrix_h(q);
        let e = matrix_e(q);
        expect(permanent_direct(&h, &LIM).unwrap() == Scalar::one(), || {
            format!("per(H{q}) != 1")
        })?;
        expect(determinant(&e) == Scalar::one(), || format!("det(E{q}) != 1"))?;
        for beta in partitions_of(q) {
            let vh = immanant(&beta, &h, &LIM).unwrap();
            let ve = immanant(&beta, &e, &LIM).unwrap();
            let want_h = if beta.is_row() { Scalar::one() } else { Scalar::zero() };
            let want_e = if beta.is_column() {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            expect(vh == want_h, || format!("im_{beta}(H{q}) = {vh}"))?;
            expect(ve == want_e, || format!("im_{beta}(E{q}) = {ve}"))?;
            cases += 2;
        }
        cases += 2;
    }
    Ok(cases)
}

fn block_formula() -> Verdict {
    let mut cases = 0;
    for lambda in partitions_up_to(7) {
        for p in 1..lambda.size() {
            for sample in 0..3 {
                let mut rng = case_rng(SEED, &format!("accept/block/{lambda}/{p}/{sample}"));
                let a = random_matrix(&mut rng, p);
                let b = random_matrix(&mut rng, lambda.size() - p);
                let r = check_block_formula(&lambda, &a, &b, &LIM).map_err(|e| e.to_string())?;
                expect(r.pass, || r.to_string())?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn strip_projections() -> Verdict {
    let mut cases = 0;
    let mut empty_cases = 0;
    for lambda in partitions_up_to(7) {
        for q in 1..=lambda.size() {
            let a = random_matrix(
                &mut case_rng(SEED, &format!("accept/strip/{lambda}/{q}")),
                lambda.size() - q,
            );
            for kind in [ProjectionKind::Row, ProjectionKind::Column, ProjectionKind::Skew] {
                let r = check_strip_projection(&lambda, q, &a, kind, &LIM).map_err(|e| e.to_string())?;
                expect(r.pass, || r.to_string())?;
                if r.parameters.ends_with("removals=0") {
                    expect(r.lhs == "0" && r.rhs == "0", || format!("empty removal nonzero: {r}"))?;
                    empty_cases += 1;
                }
                cases += 1;
            }
        }
    }
    expect(empty_cases > 0, || "no empty-removal case was exercised".into())?;
    Ok(cases)
}

fn littlewood() -> Verdict {
    let mut cases = 0;
    for gamma in partitions_up_to(6) {
        for r in [
            check_cycle_format(&gamma, &LIM),
            check_imz(&gamma, &LIM),
            check_orbit_counts(&gamma),
        ] {
            let r = r.map_err(|e| e.to_string())?;
            expect(r.pass, || r.to_string())?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn pieri() -> Verdict {
    let mut cases = 0;
    for lambda in partitions_up_to(7) {
        for q in 1..=lambda.size() {
            for alpha in partitions_of(lambda.size() - q) {
                for kind in [StripKind::Row, StripKind::Column] {
                    let r = check_pieri(&lambda, &alpha, kind).map_err(|e| e.to_string())?;
                    expect(r.pass, || r.to_string())?;
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

fn kernel_oracles() -> Verdict {
    let mut cases = 0;
    let mut rng = case_rng(SEED, "accept/kernels");
    for t in 0..200 {
        let n = rng.random_range(1..=8);
        let m = random_matrix(&mut rng, n);
        let r = permanent_ryser(&m, &LIM).unwrap();
        let d = permanent_direct(&m, &LIM).unwrap();
        expect(r == d, || format!("matrix {t} (n={n}): ryser {r} != direct {d}"))?;
        cases += 1;
    }
    for n in 1..=7 {
        let m = random_matrix(&mut case_rng(SEED, &format!("accept/det/{n}")), n);
        let det = determinant(&m);
        expect(det == immanant(&Partition::column(n), &m, &LIM).unwrap(), || {
            format!("det != im_(1^{n})")
        })?;
        if n <= 6 {
            expect(det == leibniz_det(&m), || {
                format!("det disagrees with Leibniz at n={n}")
            })?;
        }
        let identity = Matrix::<Scalar>::identity(n);
        let ones = Matrix::<Scalar>::ones(n);
        for lambda in partitions_of(n) {
            let vi = immanant(&lambda, &identity, &LIM).unwrap();
            expect(vi == Scalar::from_biguint(lambda.syt_count()), || {
                format!("im_{lambda}(I) = {vi}")
            })?;
            let vj = immanant(&lambda, &ones, &LIM).unwrap();
            let want = if lambda.is_row() {
                Scalar::from_biguint(factorial(n))
            } else {
                Scalar::zero()
            };
            expect(vj == want, || format!("im_{lambda}(J) = {vj}"))?;
            cases += 2;
        }
        cases += 1;
    }
    Ok(cases)
}

fn character_tables() -> Verdict {
    let mut cases = 0;
    for n in 1..=8 {
        let t = character_table(n, &LIM).map_err(|e| e.to_string())?;
        let order = BigInt::from(factorial(n));
        for a in 0..t.irreducibles.len() {
            for b in 0..t.irreducibles.len() {
                let want = if a == b { order.clone() } else { BigInt::ZERO };
                let got = t.inner_product(a, b);
                expect(got == want, || {
                    format!("n={n} <{}, {}> = {got}", t.irreducibles[a], t.irreducibles[b])
                })?;
                cases += 1;
            }
            let dim = &t.values[a][0];
            expect(*dim == BigInt::from(hook_length_count(&t.irreducibles[a])), || {
                format!("dimension of {} is {dim}", t.irreducibles[a])
            })?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn separation_values() -> Verdict {
    let mut cases = 0;
    for h in 2..=10 {
        for i in 1..=10 {
            let mut parts = vec![h];
            parts.extend(std::iter::repeat_n(1, i));
            let hook = Partition::new(parts).unwrap();
            let k = hook.separation().unwrap().k;
            expect(k == h - 1, || format!("separation of {hook} is {k}"))?;
            cases += 1;
        }
    }
    for m in 1..=10 {
        for s in 1..=10 {
            let rect = Partition::new(vec![m; s]).unwrap();
            let k = rect.separation().unwrap().k;
            expect(k == m, || format!("separation of {rect} is {k}"))?;
            cases += 1;
        }
    }
    Ok(cases)
}

fn cli_round_trip() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut cases = 0;
    let run = |args: &[&str]| {
        let argv: Vec<String> = std::iter::once("immanant-lab")
            .chain(args.iter().copied())
            .map(String::from)
            .collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with_env(&argv, None, &mut out, &mut err);
        (code, String::from_utf8_lossy(&out).into_owned())
    };
    for lambda in partitions_up_to(7) {
        let Ok(sep) = lambda.separation() else { continue };
        for i in sep.indices {
            let path = dir.path().join(format!("g-{lambda}-{i}.json"));
            let (f, l, row) = (path.to_str().unwrap(), lambda.to_string(), i.to_string());
            let (code, _) = run(&["gadget", "build", &l, "--row-index", &row, "--seed", "5", "--out", f]);
            expect(code == 0, || format!("gadget build {l} exited {code}"))?;
            let (code, out) = run(&["gadget", "verify", &l, "--row-index", &row, "--matrix", f]);
            expect(code == 0 && out.contains("equal: true"), || {
                format!("gadget verify {l} i={i}: {out}")
            })?;
            cases += 1;
        }
    }
    for t in 0..50 {
        let m = random_matrix(&mut case_rng(SEED, &format!("accept/json/{t}")), 1 + t % 6);
        let path = dir.path().join(format!("m{t}.json"));
        save_matrix(&m, &path).map_err(|e| e.to_string())?;
        let text = std::fs::read_to_string(&path).unwrap();
        let back = load_matrix(&path).map_err(|e| e.to_string())?;
        expect(back == m && text == matrix_to_json(&back) + "\n", || {
            format!("round trip {t} not bit-exact")
        })?;
        cases += 1;
    }
    Ok(cases)
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "projection identity, |lambda| <= 8, 5 matrices per row",
            projection_identity,
        ),
        ("gadget lemma, q <= 7", gadget_lemma),
        ("block formula, |lambda| <= 7, 3 pairs per split", block_formula),
        ("strip and skew-hook projections, |lambda| <= 7", strip_projections),
        ("Littlewood identities, size <= 6", littlewood),
        ("Pieri and LR cross-check, |lambda| <= 7", pieri),
        ("kernel oracles", kernel_oracles),
        ("character table orthogonality, n <= 8", character_tables),
        ("separation of hooks and rectangles", separation_values),
        ("CLI round trip and JSON bit-exactness", cli_round_trip),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(cases) => println!("PASS {name} ({cases} cases, {secs:.2}s)"),
            Err(why) => {
                failures += 1;
                println!("FAIL {name}: {why} ({secs:.2}s)");
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria passed");
}
