//! Acceptance suite: every numbered criterion runs as its own test and
//! prints one PASS/FAIL line (visible with --nocapture; the test name
//! carries the verdict either way). All assertions are exact; no tolerances.
//!
//! Criteria 1 and 3 assert the closed-form family values 6+7t and 9+24t for
//! every t. Those formulas hold at t = 1 but disagree with the exact graded
//! computation for t >= 2 (the Tjurina number 2g, which is proven and
//! independently checkable, pins the totals; see the t1_grading example).
//! The assertions are kept as stated and the t >= 2 clauses fail.

use std::collections::BTreeSet;
use std::time::Instant;

use wmod::basis::{decompositions_two, delta_basis};
use wmod::canonical::{guards, CanonicalModel};
use wmod::cotangent::t1_report;
use wmod::presentation::{char_is_admissible, minimal_presentation};
use wmod::unfolding::{moduli_report, normalize, unfold};
use wmod::{
    enumerate_semigroups, EnumerationFilter, NumericalSemigroup, ScalarField,
    DEFAULT_MAX_GENUS,
};

fn s(gens: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

fn conclude(n: u32, desc: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {n}: PASS - {desc}");
    } else {
        println!("criterion {n}: FAIL - {desc}");
        panic!(
            "criterion {n}: FAIL - {desc}\n  {}",
            failures.join("\n  ")
        );
    }
}

fn check(failures: &mut Vec<String>, ok: bool, msg: String) {
    if !ok {
        failures.push(msg);
    }
}

#[test]
fn criterion_01_codim2_family() {
    let mut failures = Vec::new();
    for tau in 1..=4u64 {
        let h = s(&[4, 3 + 4 * tau, 6 + 4 * tau]);
        check(
            &mut failures,
            h.genus() == 3 + 4 * tau,
            format!("tau={tau}: genus {} != {}", h.genus(), 3 + 4 * tau),
        );
        check(
            &mut failures,
            h.frobenius() == (5 + 8 * tau) as i64,
            format!("tau={tau}: frobenius {} != {}", h.frobenius(), 5 + 8 * tau),
        );
        check(&mut failures, h.is_symmetric(), format!("tau={tau}: not symmetric"));
        let p = minimal_presentation(&h);
        check(&mut failures, p.is_complete_intersection(), format!("tau={tau}: not CI"));
        // Y3^2 - Y6 X^tau and Y6^2 - X^(3+2tau), up to the fixed tie-break.
        let expect = vec![
            (vec![0, 2, 0], vec![tau as u32, 0, 1]),
            (vec![0, 0, 2], vec![3 + 2 * tau as u32, 0, 0]),
        ];
        let got: Vec<(Vec<u32>, Vec<u32>)> = p
            .generators
            .iter()
            .map(|b| (b.plus.exponents.clone(), b.minus.exponents.clone()))
            .collect();
        check(
            &mut failures,
            got == expect,
            format!("tau={tau}: presentation {got:?} != {expect:?}"),
        );
        let t1 = t1_report(&h, ScalarField::Rational).unwrap();
        check(
            &mut failures,
            t1.negative_dim == 6 + 7 * tau,
            format!("tau={tau}: dim T1- = {} != 6+7t = {}", t1.negative_dim, 6 + 7 * tau),
        );
        let m = moduli_report(&h, ScalarField::Rational).unwrap();
        check(
            &mut failures,
            m.dimension == 5 + 7 * tau,
            format!("tau={tau}: moduli dim {} != 5+7t = {}", m.dimension, 5 + 7 * tau),
        );
    }
    conclude(1, "family <4,3+4t,6+4t>, t = 1..4", failures);
}

#[test]
fn criterion_02_tau1_unfolding_detail() {
    let mut failures = Vec::new();
    let h = s(&[4, 7, 10]);
    let p = minimal_presentation(&h);
    let u = unfold(&p);
    check(
        &mut failures,
        u.total_coefficients() == 20,
        format!("total coefficients {} != 20", u.total_coefficients()),
    );
    let n = normalize(&u, ScalarField::Rational).unwrap();
    let free = n.free_coefficients().len();
    check(&mut failures, free == 13, format!("free coefficients {free} != 13"));
    let t1 = t1_report(&h, ScalarField::Rational).unwrap();
    check(&mut failures, t1.tjurina == 14, format!("tjurina {} != 14", t1.tjurina));
    check(
        &mut failures,
        t1.tjurina == 2 * h.genus(),
        format!("tjurina {} != 2g = {}", t1.tjurina, 2 * h.genus()),
    );
    conclude(2, "t = 1 detail: 20 coefficients, 13 free, Tjurina 14 = 2g", failures);
}

#[test]
fn criterion_03_codim4_family() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for tau in 1..=3u64 {
        let h = s(&[16, 1 + 16 * tau, 2 + 16 * tau, 4 + 16 * tau, 8 + 16 * tau]);
        check(
            &mut failures,
            h.genus() == 32 * tau,
            format!("tau={tau}: genus {} != {}", h.genus(), 32 * tau),
        );
        check(
            &mut failures,
            h.frobenius() == (64 * tau - 1) as i64,
            format!("tau={tau}: frobenius {} != {}", h.frobenius(), 64 * tau - 1),
        );
        let p = minimal_presentation(&h);
        check(
            &mut failures,
            p.is_complete_intersection() && p.generators.len() == 4,
            format!("tau={tau}: expected CI with 4 binomials, got {}", p.generators.len()),
        );
        // G_k = Y_{2^(k-1)}^2 - Y_{2^k} X^tau for k = 1..3 and
        // G_4 = Y_8^2 - X^(1+2tau); weight consistency forces the last
        // exponent.
        let t = tau as u32;
        let expect = vec![
            (vec![0, 2, 0, 0, 0], vec![t, 0, 1, 0, 0]),
            (vec![0, 0, 2, 0, 0], vec![t, 0, 0, 1, 0]),
            (vec![0, 0, 0, 2, 0], vec![t, 0, 0, 0, 1]),
            (vec![0, 0, 0, 0, 2], vec![1 + 2 * t, 0, 0, 0, 0]),
        ];
        let got: Vec<(Vec<u32>, Vec<u32>)> = p
            .generators
            .iter()
            .map(|b| (b.plus.exponents.clone(), b.minus.exponents.clone()))
            .collect();
        check(
            &mut failures,
            got == expect,
            format!("tau={tau}: presentation mismatch: {got:?}"),
        );
        let t1 = t1_report(&h, ScalarField::Rational).unwrap();
        check(
            &mut failures,
            t1.negative_dim == 9 + 24 * tau,
            format!("tau={tau}: dim T1- = {} != 9+24t = {}", t1.negative_dim, 9 + 24 * tau),
        );
        let u = normalize(&unfold(&p), ScalarField::Rational).unwrap();
        let rank = u.total_coefficients() - u.free_coefficients().len();
        check(
            &mut failures,
            rank >= 15,
            format!("tau={tau}: trivial action rank {rank} < 15"),
        );
    }
    let elapsed = started.elapsed();
    check(
        &mut failures,
        elapsed.as_secs() < 30,
        format!("runtime {elapsed:?} exceeded 30 s"),
    );
    conclude(3, "family <16,1+16t,2+16t,4+16t,8+16t>, t = 1..3", failures);
}

#[test]
fn criterion_04_genus80() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let h = s(&[32, 33, 34, 36, 40, 48]);
    check(&mut failures, h.genus() == 80, format!("genus {} != 80", h.genus()));
    let p = minimal_presentation(&h);
    check(&mut failures, p.is_complete_intersection(), "not CI".to_string());
    let m = moduli_report(&h, ScalarField::Rational).unwrap();
    check(&mut failures, m.dimension == 53, format!("moduli dim {} != 53", m.dimension));
    let elapsed = started.elapsed();
    check(
        &mut failures,
        elapsed.as_secs() < 60,
        format!("runtime {elapsed:?} exceeded 60 s"),
    );
    conclude(4, "<32,33,34,36,40,48>: genus 80, CI, moduli dimension 53", failures);
}

#[test]
fn criterion_05_canonical_counts_g7() {
    let mut failures = Vec::new();
    let h = s(&[4, 7, 10]);
    let model = CanonicalModel::new(&h).unwrap();

    let expected_table = [
        ("F_{8,1}", "X4^2 - X0*X8"),
        ("F_{11,1}", "X4*X7 - X0*X11"),
        ("F_{12,1}", "X4*X8 - X0*X12"),
        ("F_{14,1}", "X7^2 - X4*X10"),
        ("F_{15,1}", "X7*X8 - X4*X11"),
        ("F_{16,1}", "X8^2 - X4*X12"),
        ("F_{18,1}", "X8*X10 - X7*X11"),
        ("F_{19,1}", "X8*X11 - X7*X12"),
        ("F_{20,1}", "X10^2 - X8*X12"),
        ("F_{22,1}", "X11^2 - X10*X12"),
    ];
    let got: Vec<(String, String)> =
        model.quadrics().iter().map(|q| (q.label(), q.render())).collect();
    check(
        &mut failures,
        got.len() == 10
            && got
                .iter()
                .zip(expected_table.iter())
                .all(|((l, t), (el, et))| l == el && t == et),
        format!("quadric table mismatch: {got:?}"),
    );

    let excluded: Vec<String> = model
        .excluded_targets()
        .iter()
        .map(|&(w, i)| model.quadric(w, i).unwrap().label())
        .collect();
    let expected_excluded = ["F_{12,1}", "F_{16,1}", "F_{19,1}", "F_{20,1}", "F_{22,1}"];
    check(
        &mut failures,
        excluded == expected_excluded,
        format!("excluded targets {excluded:?}"),
    );

    // Certificate for F_{14,1}: the sign of X8 F_{18,1} is fixed by the
    // requirement that the expansion cancel (it is +1).
    let cert = model.find_syzygy((14, 2)).unwrap();
    let mut terms: BTreeSet<(u64, u64, i8)> =
        cert.terms.iter().map(|t| (t.nongap, t.s, t.sign)).collect();
    let expected_terms: BTreeSet<(u64, u64, i8)> =
        [(12, 14, 1), (10, 16, -1), (7, 19, 1), (8, 18, 1)].into_iter().collect();
    check(
        &mut failures,
        terms == expected_terms,
        format!("certificate terms {:?}", terms.iter().collect::<Vec<_>>()),
    );
    terms.clear();

    conclude(5, "<4,7,10>: quadric table, excluded set, F_{14,1} certificate", failures);
}

#[test]
fn criterion_06_shrunk_syzygies_trivial_to_genus9() {
    let mut failures = Vec::new();
    let mut instances = 0;
    let mut certificates = 0;
    for genus in 4..=9u64 {
        let filter = EnumerationFilter { symmetric: true, complete_intersection: true };
        for h in enumerate_semigroups(genus, filter, DEFAULT_MAX_GENUS).unwrap() {
            if guards(&h).is_err() {
                continue;
            }
            instances += 1;
            let model = CanonicalModel::new(&h).unwrap();
            match model.all_certificates() {
                Ok(certs) => {
                    for cert in certs {
                        certificates += 1;
                        match model.verify_shrunk_syzygy(&cert) {
                            Ok(trace) => check(
                                &mut failures,
                                trace.residue_zero,
                                format!("{h}: nonzero residue"),
                            ),
                            Err(e) => failures.push(format!("{h}: {e}")),
                        }
                    }
                }
                Err(e) => failures.push(format!("{h}: {e}")),
            }
        }
    }
    check(&mut failures, instances >= 5, format!("only {instances} instances swept"));
    conclude(
        6,
        &format!(
            "shrunk syzygies reduce to zero ({certificates} certificates over {instances} curves, genus <= 9)"
        ),
        failures,
    );
}

#[test]
fn criterion_07_basis_dimensions_to_genus10() {
    let mut failures = Vec::new();
    let mut instances = 0;
    for genus in 4..=10u64 {
        let filter = EnumerationFilter { symmetric: true, complete_intersection: false };
        for h in enumerate_semigroups(genus, filter, DEFAULT_MAX_GENUS).unwrap() {
            if guards(&h).is_err() {
                continue;
            }
            instances += 1;
            let g = h.genus();
            for n in [2u64, 3] {
                let basis = delta_basis(&h, n).unwrap();
                check(
                    &mut failures,
                    basis.len() as u64 == (2 * n - 1) * (g - 1),
                    format!("{h}: delta_{n} has {} != {}", basis.len(), (2 * n - 1) * (g - 1)),
                );
            }
            let extra: u64 = h
                .members_below(4 * g - 3)
                .iter()
                .map(|&w| decompositions_two(&h, w).unwrap().len() as u64 - 1)
                .sum();
            check(
                &mut failures,
                extra == (g - 2) * (g - 3) / 2,
                format!("{h}: sum(nu-1) = {extra} != {}", (g - 2) * (g - 3) / 2),
            );
        }
    }
    check(&mut failures, instances >= 10, format!("only {instances} instances swept"));
    conclude(
        7,
        &format!("basis dimensions (2n-1)(g-1) and quadric count, {instances} curves to genus 10"),
        failures,
    );
}

#[test]
fn criterion_08_unfold_vs_t1_cross_module() {
    let mut failures = Vec::new();
    let mut instances = 0;
    for genus in 1..=12u64 {
        let filter = EnumerationFilter { symmetric: true, complete_intersection: true };
        for h in enumerate_semigroups(genus, filter, DEFAULT_MAX_GENUS).unwrap() {
            instances += 1;
            let p = minimal_presentation(&h);
            let admissible_prime = (2u64..)
                .filter(|&c| wmod::field::is_prime(c))
                .find(|&c| char_is_admissible(&p, c).unwrap())
                .unwrap();
            for field in [ScalarField::Rational, ScalarField::Prime(admissible_prime)] {
                let t1 = t1_report(&h, field).unwrap();
                let u = normalize(&unfold(&p), field).unwrap();
                let free = u.free_coefficients().len() as u64;
                check(
                    &mut failures,
                    free == t1.negative_dim,
                    format!(
                        "{h} (char {}): free {free} != dim T1- {}",
                        field.characteristic(),
                        t1.negative_dim
                    ),
                );
                check(
                    &mut failures,
                    u.free_weights() == t1.coordinate_weights,
                    format!("{h} (char {}): weight multisets differ", field.characteristic()),
                );
            }
        }
    }
    check(&mut failures, instances >= 20, format!("only {instances} instances swept"));
    conclude(
        8,
        &format!(
            "free unfold coefficients match dim T1- with equal weights ({instances} CI curves to genus 12, char 0 and one admissible prime each)"
        ),
        failures,
    );
}

#[test]
fn criterion_09_characteristic_behavior() {
    let mut failures = Vec::new();
    let h = s(&[4, 7, 10]);
    let p = minimal_presentation(&h);
    check(&mut failures, !char_is_admissible(&p, 2).unwrap(), "p=2 admissible".into());
    check(&mut failures, !char_is_admissible(&p, 5).unwrap(), "p=5 admissible".into());
    check(&mut failures, char_is_admissible(&p, 3).unwrap(), "p=3 inadmissible".into());
    let q = t1_report(&h, ScalarField::Rational).unwrap();
    let p3 = t1_report(&h, ScalarField::Prime(3)).unwrap();
    check(
        &mut failures,
        q.by_degree == p3.by_degree,
        format!("char 3 dims differ: {:?} vs {:?}", p3.by_degree, q.by_degree),
    );
    conclude(9, "<4,7,10>: admissibility at 2/3/5 and char-3 dimensions", failures);
}

#[test]
fn criterion_10_buchweitz_obstruction() {
    let mut failures = Vec::new();
    // Gap set {1..12, 19, 21, 24, 25}: pairwise sumset size confirmed by
    // the brute-force oracle in tests/oracles.rs before freezing 46 here.
    let h = s(&[13, 14, 15, 16, 17, 18, 20, 22, 23]);
    let expected_gaps: Vec<u64> = (1..=12).chain([19, 21, 24, 25]).collect();
    check(
        &mut failures,
        h.gaps() == expected_gaps.as_slice(),
        format!("gap set {:?}", h.gaps()),
    );
    let rep = h.buchweitz_screen(2);
    let entry = &rep.entries[0];
    check(&mut failures, entry.n == 2, format!("entry order {}", entry.n));
    check(&mut failures, entry.count == 46, format!("sumset count {} != 46", entry.count));
    check(&mut failures, entry.bound == 45, format!("bound {} != 45", entry.bound));
    check(&mut failures, entry.exceeded && rep.obstructed, "not reported obstructed".into());
    conclude(10, "classical genus-16 gap set obstructed at n = 2 (46 > 45)", failures);
}
