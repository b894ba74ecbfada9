//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `cargo test --test acceptance -- --nocapture`)
//! and pinning both the exact-zero requirement and the runtime budget.

use std::time::{Duration, Instant};

use osp12::bi::{self, verify_bi};
use osp12::casimir::{
    canonical_paths, centralizer_residuals, explicit_casimir, intermediate_casimir,
    path_consistency, CasimirPath, CasimirTable, SubsetIndex,
};
use osp12::pbw::{casimir, check_defining_relations, Generator, PbwElement};
use osp12::perm::Permutation;
use osp12::repnum::{
    check_rep, evaluate, fundamental_casimir_eigenvalue, fundamental_rep, numeric_residual,
    RatMatrix,
};
use osp12::rmatrix::{gamma, universal_r, universal_r_inverse, verify_r_properties};
use osp12::scalar::{int, ratio, Scalar, Zero};
use osp12::tensor::{coproduct, coproduct_iter, embed, insert_unit, outer, TensorElement};

fn finish(criterion: &str, started: Instant, budget: Duration, ok: bool) {
    let elapsed = started.elapsed();
    println!(
        "{} {criterion} ({elapsed:.2?}, budget {budget:.0?})",
        if ok && elapsed <= budget {
            "PASS"
        } else {
            "FAIL"
        }
    );
    assert!(ok, "{criterion}: checks failed");
    assert!(
        elapsed <= budget,
        "{criterion}: runtime {elapsed:?} exceeds budget {budget:?}"
    );
}

fn subset(n: usize, elems: &[usize]) -> SubsetIndex {
    SubsetIndex::new(n, elems.iter().copied()).unwrap()
}

#[test]
fn criterion_01_defining_relations() {
    let t = Instant::now();
    let report = check_defining_relations();
    let ok = report.checks.len() == 13 && report.all_passed();
    finish(
        "criterion 1: all 13 defining relations rewrite to exact zero",
        t,
        Duration::from_secs(1),
        ok,
    );
}

#[test]
fn criterion_02_r_matrix_suite_n3() {
    let t = Instant::now();
    let report = verify_r_properties(3).unwrap();
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    // the suite must cover every family of identities
    let covered = [
        "Delta(x)R = R Delta_op(x), x=Fp",
        "R_12^2 = 1",
        "R_21 = R_12",
        "(id x Delta)R = R_12 R_13",
        "(Delta x id)R = R_23 R_13",
        "R_12 R_13 R_23 = R_23 R_13 R_12",
        "[R_12, R_13] = 0",
        "gamma_s1 fixes Delta^(2) of Fp",
        "braided YBE: words (1,2,1) = (2,1,2)",
        "(id x tau_hat)tau_hat = (Delta x id)tau_hat, x=Fp",
        "(tau_check x id)tau_check = (id x Delta)tau_check, x=Fm",
    ];
    let ok = report.all_passed() && covered.iter().all(|want| names.contains(want));
    finish(
        "criterion 2: R-matrix suite at n=3, every residual exactly zero",
        t,
        Duration::from_secs(10),
        ok,
    );
}

#[test]
fn criterion_03_c13_triple_agreement() {
    let t = Instant::now();
    let cbar13 = insert_unit(&coproduct(&casimir(), false), 2).unwrap();

    // construction a: R_32^{-1} Cbar_13 R_32 (leg-swap symmetry makes
    // R_32 = R_23; the inverse stays spelled out)
    let via_a = {
        let r32 = universal_r(3, 3, 2).unwrap();
        let r32_inv = universal_r_inverse(3, 3, 2).unwrap();
        &(&r32_inv * &cbar13) * &r32
    };
    // construction b: R_12 Cbar_13 R_12^{-1}
    let via_b = {
        let r12 = universal_r(3, 1, 2).unwrap();
        let r12_inv = universal_r_inverse(3, 1, 2).unwrap();
        &(&r12 * &cbar13) * &r12_inv
    };
    // construction c: the closed-form embedded Casimir
    let via_c = explicit_casimir(&subset(3, &[1, 3])).unwrap();

    let canonical = intermediate_casimir(&subset(3, &[1, 3])).unwrap();
    let agree = via_a == via_b && via_b == via_c && via_c == canonical;

    let c13_centralizes = centralizer_residuals(&canonical).all_zero();
    let cbar_report = centralizer_residuals(&cbar13);
    let cbar_fails = cbar_report.residuals.iter().any(|r| !r.is_zero);

    finish(
        "criterion 3: C_13 triple agreement; C_13 centralizes, Cbar_13 does not",
        t,
        Duration::from_secs(10),
        agree && c13_centralizes && cbar_fails,
    );
}

#[test]
fn criterion_04_coproduct_of_casimir_closed_form() {
    let t = Instant::now();
    let c = casimir();
    let dc = coproduct(&c, false);

    let leg = |x: &PbwElement, i: usize| embed(x, i, 2).unwrap();
    let fp = PbwElement::generator(Generator::Fplus);
    let fm = PbwElement::generator(Generator::Fminus);
    let p = PbwElement::generator(Generator::P);
    let cross = &(&leg(&fm, 1) * &leg(&fp, 2)) - &(&leg(&fp, 1) * &leg(&fm, 2));
    let closed_form = |c_coeff: i64| {
        let mut acc = (&cross * &leg(&p, 1)).scale(&int(16));
        acc = &acc + &(&leg(&c, 1) * &leg(&p, 2)).scale(&int(c_coeff));
        acc = &acc + &(&leg(&p, 1) * &leg(&c, 2));
        acc = &acc - &(&leg(&p, 1) * &leg(&p, 2));
        acc
    };
    // the independently expanded coefficient of C⊗P is 1; the printed variant
    // with 8 does not match the expansion and must be rejected
    let ok = dc == closed_form(1) && dc != closed_form(8);
    finish(
        "criterion 4: Delta(C) matches the closed form with coefficient 1 on C⊗P (8-variant rejected)",
        t,
        Duration::from_secs(1),
        ok,
    );
}

#[test]
fn criterion_05_centralizer_certification_n3_n4() {
    let t = Instant::now();
    let mut ok = true;
    let mut count = 0usize;
    for n in [3usize, 4] {
        let table = CasimirTable::new(n).unwrap();
        for a in SubsetIndex::nonempty_subsets(n) {
            let report = centralizer_residuals(table.get(&a));
            if !report.all_zero() {
                eprintln!("C_{a} fails to centralize at n={n}");
                ok = false;
            }
            count += report.residuals.len();
        }
    }
    ok &= count == (7 + 15) * 6;
    finish(
        "criterion 5: [Delta^(n-1)(g), C_A] = 0 for all nonempty A, n in {3,4}, 132 residuals",
        t,
        Duration::from_secs(300),
        ok,
    );
}

#[test]
fn criterion_06_bi_certification_n3_n4() {
    let t = Instant::now();
    let r3 = verify_bi(3).unwrap();
    let r4 = verify_bi(4).unwrap();
    let mut ok = r3.relations.len() == 28 && r3.all_passed();
    ok &= r4.relations.len() == 120 && r4.all_passed();

    // wrong-normalization control must fail
    let table = CasimirTable::new(3).unwrap();
    let control =
        bi::bi_residual_wrong_normalization(&table, &subset(3, &[1, 2]), &subset(3, &[2, 3]))
            .unwrap();
    ok &= !control.is_zero();

    finish(
        "criterion 6: BI relations exact zero for 28 pairs (n=3) and 120 pairs (n=4); control fails",
        t,
        Duration::from_secs(600),
        ok,
    );
}

#[test]
fn criterion_07_path_independence_n4() {
    let t = Instant::now();
    let mut ok = true;
    for elems in [
        vec![1usize, 3],
        vec![1, 4],
        vec![2, 4],
        vec![1, 3, 4],
        vec![1, 2, 4],
    ] {
        let a = subset(4, &elems);
        let paths = canonical_paths(&a).unwrap();
        if paths.len() < 2 {
            eprintln!("fewer than two distinct paths for {a}");
            ok = false;
            continue;
        }
        let report = path_consistency(&a, &paths).unwrap();
        if !report.all_equal {
            eprintln!("paths disagree for {a}");
            ok = false;
        }
    }
    // invariance: a word inside K leaves C_K fixed
    for (k_elems, word) in [(vec![1usize, 2], vec![1usize]), (vec![2, 3], vec![2])] {
        let k = subset(4, &k_elems);
        let report = path_consistency(
            &k,
            &[
                CasimirPath {
                    start: k.clone(),
                    word: vec![],
                },
                CasimirPath {
                    start: k.clone(),
                    word,
                },
            ],
        )
        .unwrap();
        ok &= report.all_equal;
    }
    finish(
        "criterion 7: >=2 distinct (K, word) paths agree for five subsets at n=4, plus in-K invariance",
        t,
        Duration::from_secs(120),
        ok,
    );
}

#[test]
fn criterion_08_explicit_embedding_equivalence_n4() {
    let t = Instant::now();
    let table = CasimirTable::new(4).unwrap();
    let mut ok = true;
    for a in SubsetIndex::nonempty_subsets(4) {
        if &explicit_casimir(&a).unwrap() != table.get(&a) {
            eprintln!("explicit formula disagrees with the braided route for {a}");
            ok = false;
        }
    }
    finish(
        "criterion 8: explicit embedding equals braided construction for all 15 nonempty A in [4]",
        t,
        Duration::from_secs(120),
        ok,
    );
}

#[test]
fn criterion_09_numeric_oracle() {
    let t = Instant::now();
    let rep = fundamental_rep();
    let mut ok = check_rep(&rep).unwrap().all_passed();

    // Casimir acts as the golden scalar
    let rho_c = evaluate(&TensorElement::from(&casimir()), &rep).unwrap();
    ok &= rho_c == RatMatrix::identity(3).scale(&fundamental_casimir_eigenvalue());

    // symbolic zeros evaluate to the exact zero matrix
    let threshold = ratio(1, 1000);
    let mut zero_cases: Vec<(String, TensorElement)> = Vec::new();

    let table = CasimirTable::new(3).unwrap();
    let bi1 = bi::bi_residual_with(&table, &subset(3, &[1, 2]), &subset(3, &[2, 3])).unwrap();
    zero_cases.push(("BI relation residual".into(), bi1.residual));

    let r12 = universal_r(3, 1, 2).unwrap();
    let r13 = universal_r(3, 1, 3).unwrap();
    let r23 = universal_r(3, 2, 3).unwrap();
    zero_cases.push((
        "Yang-Baxter residual".into(),
        &(&(&r12 * &r13) * &r23) - &(&(&r23 * &r13) * &r12),
    ));

    for g in Generator::ALL {
        let dg = coproduct_iter(2, &PbwElement::generator(g));
        let c13 = table.get(&subset(3, &[1, 3]));
        zero_cases.push((
            format!("centralizer residual [Delta^2({}), C_13]", g.symbol()),
            &(&dg * c13) - &(c13 * &dg),
        ));
    }

    for (name, x) in &zero_cases {
        let norm = numeric_residual(x, &rep).unwrap();
        if !norm.is_zero() {
            eprintln!("{name}: expected exact numeric zero, got norm {norm}");
            ok = false;
        }
    }

    // counterexamples must be loudly nonzero
    let cbar13 = insert_unit(&coproduct(&casimir(), false), 2).unwrap();
    let dfp = coproduct_iter(2, &PbwElement::generator(Generator::Fplus));
    let noncentral = &(&dfp * &cbar13) - &(&cbar13 * &dfp);
    let norm = numeric_residual(&noncentral, &rep).unwrap();
    ok &= norm > threshold;

    let control =
        bi::bi_residual_wrong_normalization(&table, &subset(3, &[1, 2]), &subset(3, &[2, 3]))
            .unwrap();
    let norm = numeric_residual(&control, &rep).unwrap();
    ok &= norm > threshold;

    finish(
        "criterion 9: numeric oracle confirms symbolic zeros exactly and counterexamples > 1e-3",
        t,
        Duration::from_secs(60),
        ok,
    );
}

#[test]
fn criterion_10_cli_contract() {
    let t = Instant::now();
    let bin = env!("CARGO_BIN_EXE_osp12");
    let run = |args: &[&str]| {
        std::process::Command::new(bin)
            .args(args)
            .output()
            .expect("binary runs")
    };

    let mut ok = true;
    for args in [
        vec!["verify-bi", "--n", "3"],
        vec!["r-properties", "--n", "3"],
        vec!["paths", "--n", "4", "--subset", "1,3"],
    ] {
        let first = run(&args);
        let second = run(&args);
        if !first.status.success() {
            eprintln!(
                "{args:?}: nonzero exit: {}",
                String::from_utf8_lossy(&first.stderr)
            );
            ok = false;
        }
        if first.stdout != second.stdout {
            eprintln!("{args:?}: output is not byte-stable");
            ok = false;
        }
    }

    // corrupted representation fixture: eval must exit nonzero
    let dir = std::env::temp_dir();
    let good = dir.join("osp12_acceptance_rep.json");
    osp12::repnum::save_rep(&fundamental_rep(), &good).unwrap();
    let text = std::fs::read_to_string(&good).unwrap();
    let bad = dir.join("osp12_acceptance_rep_bad.json");
    std::fs::write(&bad, text.replacen("\"1/2\"", "\"1/3\"", 1)).unwrap();

    let good_run = run(&["eval", "--rep", good.to_str().unwrap(), "--expr", "C # C"]);
    ok &= good_run.status.success();
    let bad_run = run(&["eval", "--rep", bad.to_str().unwrap(), "--expr", "C # C"]);
    ok &= !bad_run.status.success();
    ok &= !bad_run.stderr.is_empty();

    let _ = std::fs::remove_file(&good);
    let _ = std::fs::remove_file(&bad);

    finish(
        "criterion 10: CLI verbs exit 0 with byte-stable reports; corrupted rep fixture fails eval",
        t,
        Duration::from_secs(120),
        ok,
    );
}

/// Exactness guard for the whole suite: the scalar type never leaves the
/// rationals, so a zero is a zero.
#[test]
fn scalars_are_exact() {
    let x: Scalar = ratio(1, 3);
    let y = &x + &x + &x;
    assert_eq!(y, int(1));
    assert!((&y - &int(1)).is_zero());
    let _ = outer(&TensorElement::unit(1), &TensorElement::unit(1));
    let _ = gamma(&Permutation::identity(2), &TensorElement::unit(2)).unwrap();
}
