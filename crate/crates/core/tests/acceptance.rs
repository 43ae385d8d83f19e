//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `--nocapture`).
//!
//! Criterion 5 is expected red on `prop_4_5` alone: that statement admits
//! genuine counterexamples (see the check's documentation in
//! `lie_index::verify`), which the suite reports honestly rather than
//! suppressing. Every other listed check passes over the full corpus.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use lie_index::catalog;
use lie_index::classify::is_supersolvable;
use lie_index::doc::{self, AnyAlgebra};
use lie_index::field::Field;
use lie_index::index::{
    core_of, ideal_completions, ideal_index, index_complex, index_complex_with_table,
    is_completion, is_maximal, phi_star, strict_core, CompletionTable,
};
use lie_index::lattice::{build_lattice, is_subideal, radical_from_lattice};
use lie_index::random::{random_algebra, DEFAULT_BUDGET};
use lie_index::rational;
use lie_index::report::ReportDocument;
use lie_index::verify::{
    corpus_members, run_suite, targeted_rational_checks, SuiteConfig, Verdict, VerificationReport,
    SKIP_ONLY_CHECKS, SKIP_REASON_CLOSED_FIELD,
};
use lie_index::{
    Bounds, FpAlgebra, FpSubspace, PrimeField, QSubspace, Rationals, Subspace, TriBool,
};

fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn qv(xs: &[i64]) -> Vec<lie_index::QScalar> {
    xs.iter().map(|&x| Rationals.from_i64(x)).collect()
}

fn fp_rows(field: &PrimeField, dim: usize, rows: &[Vec<u32>]) -> FpSubspace {
    Subspace::from_rows(field, dim, rows).unwrap()
}

fn q_rows(dim: usize, rows: &[Vec<lie_index::QScalar>]) -> QSubspace {
    Subspace::from_rows(&Rationals, dim, rows).unwrap()
}

struct SharedCorpus {
    config: SuiteConfig,
    members: Vec<(String, FpAlgebra)>,
    report: VerificationReport,
    suite_elapsed: Duration,
}

fn shared() -> &'static SharedCorpus {
    static CORPUS: OnceLock<SharedCorpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let config = SuiteConfig::acceptance();
        let members = corpus_members(&config);
        let start = Instant::now();
        let report = run_suite(&config);
        let suite_elapsed = start.elapsed();
        SharedCorpus {
            config,
            members,
            report,
            suite_elapsed,
        }
    })
}

fn announce(id: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {id}: {verdict} - {detail}");
}

// Criterion 1: nilp4 over GF(3), M = <b,c,d>: the complex contains
// C1 = <a> and C2 = <a,c> with k(C1) = k(C2) = 0, quotient dimensions 1
// and 2, both subideal. Exact, under one second.
#[test]
fn criterion_1_nilp4_reproduction() {
    let start = Instant::now();
    let field = gf(3);
    let l = catalog::build("nilp4", field).unwrap();
    let lat = build_lattice(&l, &Bounds::new()).unwrap();
    let m = fp_rows(&field, 4, &[vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
    let cx = index_complex(&l, &m, &lat).unwrap();
    let c1 = fp_rows(&field, 4, &[vec![1, 0, 0, 0]]);
    let c2 = fp_rows(&field, 4, &[vec![1, 0, 0, 0], vec![0, 0, 1, 0]]);
    let r1 = cx.records.iter().find(|r| r.space == c1).expect("C1 present");
    let r2 = cx.records.iter().find(|r| r.space == c2).expect("C2 present");
    let ok = r1.strict_core.is_zero()
        && r2.strict_core.is_zero()
        && r1.quotient_dim == 1
        && r2.quotient_dim == 2
        && r1.is_subideal
        && r2.is_subideal;
    let elapsed = start.elapsed();
    announce(
        "criterion 1",
        ok && elapsed < Duration::from_secs(1),
        &format!("nilp4 record dims 1 and 2, subideal, in {elapsed:?}"),
    );
    assert!(ok, "nilp4 records do not match");
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
}

// Criterion 2: ex31 over Q: ideals exactly {0, S, S', L}; the diagonal is
// certified maximal; <e1, f1> is an abelian completion equal to its own
// centralizer; every ideal completion of the diagonal has a non-abelian
// quotient.
#[test]
fn criterion_2_ex31_reproduction() {
    let start = Instant::now();
    let q = Rationals;
    let l = catalog::build("ex31", q).unwrap();
    let lat = build_lattice(&l, &Bounds::new()).unwrap();
    let s = q_rows(
        6,
        &[qv(&[1, 0, 0, 0, 0, 0]), qv(&[0, 1, 0, 0, 0, 0]), qv(&[0, 0, 1, 0, 0, 0])],
    );
    let s_bar = q_rows(
        6,
        &[qv(&[0, 0, 0, 1, 0, 0]), qv(&[0, 0, 0, 0, 1, 0]), qv(&[0, 0, 0, 0, 0, 1])],
    );
    let mut expect = vec![Subspace::zero(6), s.clone(), s_bar.clone(), l.full_space()];
    expect.sort();
    let ideals_exact = lat.ideals == expect;
    let m = catalog::ex31_diagonal();
    let maximal = is_maximal(&l, &m, None) == TriBool::Yes;
    let c = q_rows(6, &[qv(&[1, 0, 0, 0, 0, 0]), qv(&[0, 0, 0, 1, 0, 0])]);
    let abelian_completion = l.product_space(&c, &c).unwrap().is_zero()
        && is_completion(&l, &c, &m, Some(&lat.ideals)).unwrap();
    let self_centralizing = l.centralizer(&c).unwrap() == c;
    let records = ideal_completions(&l, &m, &lat.ideals).unwrap();
    let no_abelian = !records.is_empty() && records.iter().all(|r| !r.quotient_abelian);
    let ok = ideals_exact && maximal && abelian_completion && self_centralizing && no_abelian;
    let elapsed = start.elapsed();
    announce(
        "criterion 2",
        ok && elapsed < Duration::from_secs(1),
        &format!("ex31 facts verified in {elapsed:?}"),
    );
    assert!(ideals_exact, "ideal list mismatch");
    assert!(maximal, "diagonal not certified maximal");
    assert!(abelian_completion, "<e1,f1> not an abelian completion");
    assert!(self_centralizing, "centralizer(<e1,f1>) != <e1,f1>");
    assert!(no_abelian, "an ideal completion had an abelian quotient");
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
}

// Criterion 3: ex41 over Q: eta(L:S) = 1 via the ideal completion <a>;
// M = <a, e1> is maximal with completion <a, e2> of quotient dimension 1;
// the algebra is not supersolvable; L/<a> is certified non-split simple.
#[test]
fn criterion_3_ex41_reproduction() {
    let start = Instant::now();
    let q = Rationals;
    let l = catalog::build("ex41", q).unwrap();
    let ideals = rational::all_ideals_q(&l).unwrap();
    let s = q_rows(4, &[qv(&[0, 1, 0, 0]), qv(&[0, 0, 1, 0]), qv(&[0, 0, 0, 1])]);
    let a = Subspace::line(&q, &qv(&[1, 0, 0, 0]));
    let eta_ok = ideal_index(&l, &s, &ideals).unwrap() == 1;
    let completions = ideal_completions(&l, &s, &ideals).unwrap();
    let via_a = completions.len() == 1 && completions[0].space == a;
    let m_x = q_rows(4, &[qv(&[1, 0, 0, 0]), qv(&[0, 1, 0, 0])]);
    let m_maximal = is_maximal(&l, &m_x, None) == TriBool::Yes;
    let c = q_rows(4, &[qv(&[1, 0, 0, 0]), qv(&[0, 0, 1, 0])]);
    let c_completion = is_completion(&l, &c, &m_x, Some(&ideals)).unwrap();
    let k = strict_core(&l, &c, Some(&ideals)).unwrap();
    let c_qdim_1 = c.dim() - k.dim() == 1;
    let not_ss = is_supersolvable(&l) == TriBool::No;
    let quotient = l.quotient(&a).unwrap().quotient;
    let quotient_simple = rational::is_nonsplit_simple_3dim(&quotient) == Ok(true);
    let ok = eta_ok && via_a && m_maximal && c_completion && c_qdim_1 && not_ss && quotient_simple;
    let elapsed = start.elapsed();
    announce(
        "criterion 3",
        ok && elapsed < Duration::from_secs(1),
        &format!("ex41 facts verified in {elapsed:?}"),
    );
    assert!(ok, "ex41 facts failed: eta={eta_ok} via_a={via_a} maximal={m_maximal} completion={c_completion} qdim1={c_qdim_1} not_ss={not_ss} simple={quotient_simple}");
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
}

// Criterion 4: affine2 with M = <x+y>, over GF(3) and over Q: <x> is a
// maximal element of I(M) and not an ideal, <y> is an ideal completion,
// and eta = 1.
#[test]
fn criterion_4_affine2_opening_example() {
    let start = Instant::now();
    // GF(3): exhaustively
    let field = gf(3);
    let l3 = catalog::build("affine2", field).unwrap();
    let lat = build_lattice(&l3, &Bounds::new()).unwrap();
    let m3 = fp_rows(&field, 2, &[vec![1, 1]]);
    let cx = index_complex(&l3, &m3, &lat).unwrap();
    let x3 = fp_rows(&field, 2, &[vec![1, 0]]);
    let y3 = fp_rows(&field, 2, &[vec![0, 1]]);
    let rx = cx.records.iter().find(|r| r.space == x3).expect("<x> in I(M)");
    let ry = cx.records.iter().find(|r| r.space == y3).expect("<y> in I(M)");
    let gf3_ok = rx.maximal_in_complex && !rx.is_ideal && ry.is_ideal && cx.eta == Some(1);
    // Q: through the decidable ideal set
    let q = Rationals;
    let lq = catalog::build("affine2", q).unwrap();
    let ideals = rational::all_ideals_q(&lq).unwrap();
    let mq = Subspace::line(&q, &qv(&[1, 1]));
    let xq = Subspace::line(&q, &qv(&[1, 0]));
    let yq = Subspace::line(&q, &qv(&[0, 1]));
    let x_completion = is_completion(&lq, &xq, &mq, Some(&ideals)).unwrap() && !lq.is_ideal(&xq);
    let y_completion = is_completion(&lq, &yq, &mq, Some(&ideals)).unwrap() && lq.is_ideal(&yq);
    // the only subalgebra strictly above <x> is L, and k(L) = <y> escapes M
    let k_full = strict_core(&lq, &lq.full_space(), Some(&ideals)).unwrap();
    let x_maximal = k_full == yq && !mq.contains(&q, &k_full).unwrap();
    let eta_q = ideal_index(&lq, &mq, &ideals).unwrap() == 1;
    let q_ok = x_completion && y_completion && x_maximal && eta_q;
    let elapsed = start.elapsed();
    announce(
        "criterion 4",
        gf3_ok && q_ok && elapsed < Duration::from_secs(1),
        &format!("affine2 facts over GF(3) and Q in {elapsed:?}"),
    );
    assert!(gf3_ok, "GF(3) side failed");
    assert!(q_ok, "Q side failed");
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
}

// Criterion 5: the exhaustive suite over the catalog plus 500 random GF(2)
// algebras (dim <= 4) and 100 random GF(3) algebras (dim <= 3): the listed
// checks must have no Fail entries, within five minutes.
//
// Expected red: prop_4_5 admits genuine counterexamples (documented on the
// check and pinned by `prop_4_5_counterexample_is_reported` in the library
// tests). All other checks pass; this test reports the failure honestly.
#[test]
fn criterion_5_exhaustive_suite() {
    let data = shared();
    let checks = [
        "lemma_1_1",
        "thm_2_2",
        "cor_2_3",
        "cor_2_5",
        "thm_2_6",
        "cor_2_7",
        "cor_2_9",
        "thm_2_10",
        "thm_2_11",
        "thm_2_12",
        "prop_3_2",
        "thm_4_4",
        "prop_4_5",
    ];
    // corpus size sanity: catalog + 500 + 100
    let random_members = data
        .members
        .iter()
        .filter(|(id, _)| id.starts_with("random_"))
        .count();
    assert_eq!(random_members, 600);
    let mut failed_checks = Vec::new();
    for check in checks {
        let entries: Vec<_> = data.report.entries_for(check).collect();
        assert!(!entries.is_empty(), "{check} produced no entries");
        let fails = entries
            .iter()
            .filter(|e| matches!(e.verdict, Verdict::Fail { .. }))
            .count();
        let skips = entries
            .iter()
            .filter(|e| matches!(e.verdict, Verdict::Skip { .. }))
            .count();
        announce(
            &format!("criterion 5 [{check}]"),
            fails == 0,
            &format!("{} entries, {fails} fail, {skips} skip", entries.len()),
        );
        if fails > 0 {
            failed_checks.push(format!("{check} ({fails} failures)"));
        }
    }
    let within_time = data.suite_elapsed < Duration::from_secs(300);
    announce(
        "criterion 5 [runtime]",
        within_time,
        &format!("suite over {} members in {:?}", data.members.len(), data.suite_elapsed),
    );
    assert!(within_time, "suite took {:?}", data.suite_elapsed);
    assert!(
        failed_checks.is_empty(),
        "checks with failures: {}; prop_4_5 failures are genuine counterexamples \
         to the statement as printed (see lie_index::verify::check_prop_4_5 docs \
         and the pinned library test)",
        failed_checks.join(", ")
    );
}

// Criterion 6: oracle equivalences over every finite-field corpus member:
// strict core fast path vs enumeration, core vs largest contained ideal,
// idealizer tower vs chain search, supersolvability vs the eta criterion.
#[test]
fn criterion_6_oracle_equivalences() {
    let data = shared();
    let start = Instant::now();
    let mut disagreements = 0usize;
    for (id, l) in &data.members {
        let field = *l.field();
        let lat = build_lattice(l, &data.config.bounds).unwrap();
        let subalgebras = lat.subalgebras().unwrap();
        let table = CompletionTable::build(l, &lat).unwrap();
        // (a) + (b) per subalgebra
        for b in subalgebras {
            let fast = strict_core(l, b, Some(&lat.ideals)).unwrap();
            let mut slow = Subspace::zero(l.dim());
            for i in &lat.ideals {
                if i != b && b.contains(&field, i).unwrap() {
                    slow = slow.sum(&field, i).unwrap();
                }
            }
            if fast != slow {
                disagreements += 1;
                eprintln!("strict core disagreement on {id}");
            }
            let core_fast = core_of(l, b);
            let core_slow = lat
                .ideals
                .iter()
                .filter(|i| b.contains(&field, i).unwrap())
                .max_by_key(|i| i.dim())
                .cloned()
                .unwrap_or_else(|| Subspace::zero(l.dim()));
            if core_fast != core_slow {
                disagreements += 1;
                eprintln!("core disagreement on {id}");
            }
        }
        // (c) subideal via chain search
        for b in subalgebras {
            let fast = is_subideal(l, b);
            let slow = chain_search(l, b, subalgebras);
            if fast != slow {
                disagreements += 1;
                eprintln!("subideal disagreement on {id}");
            }
        }
        // (d) supersolvability vs eta = 1 everywhere
        let direct = match is_supersolvable(l) {
            TriBool::Yes => true,
            TriBool::No => false,
            TriBool::Unknown => {
                disagreements += 1;
                eprintln!("supersolvability undecided on {id}");
                continue;
            }
        };
        let eta_all_one = lat
            .maximal_subalgebras()
            .unwrap()
            .iter()
            .all(|m| index_complex_with_table(l, m, &table).unwrap().eta == Some(1));
        if direct != eta_all_one {
            disagreements += 1;
            eprintln!("supersolvability criterion disagreement on {id}");
        }
    }
    let elapsed = start.elapsed();
    announce(
        "criterion 6",
        disagreements == 0,
        &format!(
            "4 oracle pairs over {} members, {disagreements} disagreements, in {elapsed:?}",
            data.members.len()
        ),
    );
    assert_eq!(disagreements, 0);
}

fn chain_search(l: &FpAlgebra, b: &FpSubspace, subalgebras: &[FpSubspace]) -> bool {
    let field = l.field();
    let mut reachable: Vec<&FpSubspace> = vec![b];
    let mut frontier = vec![b];
    while let Some(s) = frontier.pop() {
        if s.is_full() {
            return true;
        }
        for t in subalgebras {
            if reachable.contains(&t) || !t.contains(field, s).unwrap() {
                continue;
            }
            let product = l.product_space(t, s).unwrap();
            if s.contains(field, &product).unwrap() {
                reachable.push(t);
                frontier.push(t);
            }
        }
    }
    false
}

// Criterion 7: phi*(L) = R(L) exactly, as subspaces, for every
// finite-field corpus member, including the mixed GF(5) case where both
// equal the 2-dimensional solvable component.
#[test]
fn criterion_7_phi_star_equals_radical() {
    let data = shared();
    let start = Instant::now();
    let mut mismatches = 0usize;
    for (id, l) in &data.members {
        let lat = build_lattice(l, &data.config.bounds).unwrap();
        let (_, phi) = phi_star(l, &lat).unwrap();
        let radical = radical_from_lattice(l, &lat).unwrap();
        if phi != radical {
            mismatches += 1;
            eprintln!("phi* != radical on {id}");
        }
    }
    // the mixed case explicitly: both equal the affine2 component
    let field = gf(5);
    let mixed = catalog::build("affine2_sl2", field).unwrap();
    let lat = build_lattice(&mixed, &Bounds::new().with(5, 5)).unwrap();
    let (_, phi) = phi_star(&mixed, &lat).unwrap();
    let radical = radical_from_lattice(&mixed, &lat).unwrap();
    let affine_component = fp_rows(&field, 5, &[vec![1, 0, 0, 0, 0], vec![0, 1, 0, 0, 0]]);
    let mixed_ok = phi == affine_component && radical == affine_component;
    let elapsed = start.elapsed();
    announce(
        "criterion 7",
        mismatches == 0 && mixed_ok,
        &format!(
            "phi* = radical on {} members, mixed case = affine component: {mixed_ok}, in {elapsed:?}",
            data.members.len()
        ),
    );
    assert_eq!(mismatches, 0);
    assert!(mixed_ok, "mixed GF(5) case mismatch");
}

// Criterion 8: the I(H) non-homomorph witness passes, while the S(H)
// closure spot checks record no violations over the corpus.
#[test]
fn criterion_8_ih_and_sh() {
    let data = shared();
    let targeted = targeted_rational_checks();
    let ih = targeted
        .iter()
        .find(|e| e.check == "ih_not_homomorph")
        .expect("ih check present");
    let ih_ok = matches!(ih.verdict, Verdict::Pass);
    let sh_entries: Vec<_> = data.report.entries_for("sh_homomorph").collect();
    let sh_ok = !sh_entries.is_empty()
        && sh_entries
            .iter()
            .all(|e| !matches!(e.verdict, Verdict::Fail { .. }));
    announce(
        "criterion 8",
        ih_ok && sh_ok,
        &format!(
            "I(H) witness pass={ih_ok}, S(H) closure entries={} with no violations={sh_ok}",
            sh_entries.len()
        ),
    );
    assert!(ih_ok, "I(H) witness failed");
    assert!(sh_ok, "S(H) closure violations found");
}

// Criterion 9: repeated runs with identical seeds and parameters produce
// byte-identical reports.
#[test]
fn criterion_9_determinism() {
    let config = SuiteConfig {
        catalog: false,
        random: vec![lie_index::verify::RandomBatch {
            p: 2,
            max_dim: 4,
            count: 40,
            seed: 7,
        }],
        checks: lie_index::verify::CheckFilter::All,
        bounds: Bounds::new(),
    };
    let a = run_suite(&config);
    let b = run_suite(&config);
    let doc_a = ReportDocument::from_verification("digest".into(), "verify".into(), &a).to_json();
    let doc_b = ReportDocument::from_verification("digest".into(), "verify".into(), &b).to_json();
    let ok = doc_a == doc_b;
    announce(
        "criterion 9",
        ok,
        &format!("two runs, {} bytes each, identical={ok}", doc_a.len()),
    );
    assert!(ok);
}

// Criterion 10: non-reproducible content is explicitly skipped with the
// stated reason, never silently dropped.
#[test]
fn criterion_10_explicit_skips() {
    let data = shared();
    let mut ok = true;
    for id in SKIP_ONLY_CHECKS {
        let entry = data.report.entries_for(id).next();
        match entry {
            Some(e) => match &e.verdict {
                Verdict::Skip { reason } if reason == SKIP_REASON_CLOSED_FIELD => {}
                other => {
                    ok = false;
                    eprintln!("{id}: unexpected verdict {other:?}");
                }
            },
            None => {
                ok = false;
                eprintln!("{id}: no skip entry");
            }
        }
    }
    announce(
        "criterion 10",
        ok,
        &format!("{} named skip entries with reason strings", SKIP_ONLY_CHECKS.len()),
    );
    assert!(ok);
}

// Supplementary: random catalog draws stay deterministic and valid, and
// the ex31/ex41 targeted entries pass end to end (criteria 2, 3 cross-check
// through the suite path).
#[test]
fn targeted_entries_pass_in_suite() {
    let data = shared();
    for check in ["ex31_facts", "ex41_facts", "affine2_q_facts", "cor_2_8"] {
        for e in data.report.entries_for(check) {
            assert!(
                matches!(e.verdict, Verdict::Pass),
                "{} on {} failed: {:?}",
                e.check,
                e.algebra,
                e.verdict
            );
        }
    }
    // determinism of the random generator inside the corpus
    let draw_a = random_algebra(gf(2), 3, 42, DEFAULT_BUDGET).unwrap();
    let draw_b = random_algebra(gf(2), 3, 42, DEFAULT_BUDGET).unwrap();
    assert!(draw_a.algebra.same_table(&draw_b.algebra));
    // witnesses embedded in any failing entries parse back to valid algebras
    for e in &data.report.entries {
        if let Verdict::Fail { witness } = &e.verdict {
            let parsed = witness.algebra.to_algebra().expect("witness algebra parses");
            if let AnyAlgebra::Fp(l) = &parsed {
                assert!(l.dim() > 0);
                let doc = doc::to_document(&parsed);
                assert_eq!(&doc, &witness.algebra, "witness round-trips");
            }
        }
    }
}
