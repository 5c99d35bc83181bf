//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the checked counts (visible with --nocapture).

use std::time::{Duration, Instant};

use eldb::broadcast::classify;
use eldb::corpus;
use eldb::distance::all_pairs_distances;
use eldb::families::{build_tk, generate, subdivided_star, Family};
use eldb::formulas;
use eldb::graph::Graph;
use eldb::products::{product, ProductKind};
use eldb::reduction::{self, CnfFormula, Lit};
use eldb::solver::{self, Objective, SolveResult};
use eldb::sweep::{self, Suite};

fn path(n: usize) -> Graph {
    generate(Family::Path, n).unwrap()
}

fn cycle(n: usize) -> Graph {
    generate(Family::Cycle, n).unwrap()
}

/// Independent validation of a solve result through the hearing rule.
fn assert_sound(g: &Graph, r: &SolveResult, what: &str) {
    assert!(!r.exhausted, "{what}: exhausted");
    let d = all_pairs_distances(g).unwrap();
    let w = r
        .witness
        .as_ref()
        .unwrap_or_else(|| panic!("{what}: no witness"));
    let report = classify(g, &d, w).unwrap();
    match r.objective {
        Objective::MaxCoverage => {
            assert!(report.is_efficient, "{what}: witness not efficient");
            assert_eq!(Some(report.coverage_count), r.value, "{what}: coverage");
        }
        Objective::MinCost => {
            assert!(report.is_k_eldb, "{what}: witness not a k-ELDB");
            assert_eq!(Some(report.cost), r.value, "{what}: cost");
        }
        _ => assert!(report.is_k_eldb, "{what}: witness not a k-ELDB"),
    }
}

#[test]
fn a1_path_gamma_matches_closed_form() {
    let t0 = Instant::now();
    let mut checked = 0;
    for n in 2..=21 {
        let g = path(n);
        for k in 1..=3 {
            let want = formulas::path_gamma(n, k).exact_value().unwrap();
            let solved = solver::gamma_ebk(&g, k).unwrap();
            assert_eq!(solved.value, Some(want), "P_{n} at k={k}");
            checked += 1;
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("[PASS] A1: gamma_ebk(P_n) = ceil(n/3) on {checked} (n,k) pairs in {elapsed:?}");
}

#[test]
fn a2_cycle_mcr_table_and_gamma() {
    let t0 = Instant::now();
    for n in 3..=20 {
        let g = cycle(n);
        let want_mcr = formulas::cycle_mcr(n).exact_value().unwrap();
        let solved_mcr = solver::mcr(&g).unwrap();
        assert_eq!(solved_mcr.value, Some(want_mcr), "mcr(C_{n})");
        let k = want_mcr;
        let want_gamma = formulas::cycle_gamma(n).exact_value().unwrap();
        let solved_gamma = solver::gamma_ebk(&g, k).unwrap();
        assert_eq!(
            solved_gamma.value,
            Some(want_gamma),
            "gamma(C_{n}) at k={k}"
        );
    }
    assert_eq!(solver::mcr(&cycle(7)).unwrap().value, Some(3));
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("[PASS] A2: cycle mcr table and gamma = ceil(n/3) for n = 3..20 in {elapsed:?}");
}

#[test]
fn a3_subdivided_star_mcr_and_gamma() {
    let mut checked = 0;
    for i in 0..=6 {
        for n in 3..=5 {
            let g = subdivided_star(i, n).unwrap();
            assert_eq!(
                solver::mcr(&g).unwrap().value,
                Some(1),
                "mcr S_{i}(K_1_{})",
                n - 1
            );
            let want = formulas::subdivided_star_gamma(i, n).exact_value().unwrap();
            let solved = solver::gamma_ebk(&g, 1).unwrap();
            assert_eq!(solved.value, Some(want), "gamma_eb1 S_{i}(K_1_{})", n - 1);
            checked += 1;
        }
    }
    println!("[PASS] A3: subdivided stars mcr = 1 and two-case gamma on {checked} instances");
}

#[test]
fn a4_eb2_degree_bounds_with_expected_c5_flag() {
    let corpus = corpus::bounds_corpus();
    let mut upper_violations = Vec::new();
    for (name, g) in &corpus {
        let check = formulas::check_eb2_bounds(g).unwrap();
        let gamma = check
            .gamma_eb2
            .unwrap_or_else(|| panic!("{name}: bounds corpus graphs have mcr <= 2"));
        assert_eq!(
            check.lower_holds,
            Some(true),
            "{name}: lower bound must hold (gamma_eb2 = {gamma})"
        );
        if check.upper_holds == Some(false) {
            upper_violations.push(name.clone());
        }
    }
    // The upper-bound side is a checker, and exactly one violation is the
    // documented expected report.
    assert_eq!(upper_violations, vec!["C_5".to_string()]);
    println!(
        "[PASS] A4: lower bound holds on all {} corpus graphs; upper-bound checker flags only C_5 (expected)",
        corpus.len()
    );
}

#[test]
fn a5_lexicographic_products() {
    let h = path(4);

    for m in 2..=8 {
        let p = product(ProductKind::Lexicographic, &path(m), &h);
        let solved_mcr = solver::mcr(&p).unwrap();
        assert_eq!(solved_mcr.value, Some(2), "mcr(P_{m}.P_4)");
        let want = formulas::lex_path(m, 2)
            .gamma_eb2
            .unwrap()
            .exact_value()
            .unwrap();
        let solved_gamma = solver::gamma_ebk(&p, 2).unwrap();
        assert_eq!(solved_gamma.value, Some(want), "gamma_eb2(P_{m}.P_4)");
    }

    let mut m8_discrepancy = false;
    for m in 3..=12 {
        let p = product(ProductKind::Lexicographic, &cycle(m), &h);
        let solved = solver::mcr(&p).unwrap();
        let fs = formulas::lex_cycle_mcr(m, 2);
        let oracle = fs.oracle.exact_value().unwrap();
        let table = fs.case_table.exact_value().unwrap();
        assert_eq!(solved.value, Some(oracle), "mcr(C_{m}.P_4) vs arc oracle");
        if m == 8 {
            assert_ne!(
                solved.value,
                Some(table),
                "m=8 must disagree with the case table"
            );
            m8_discrepancy = true;
        } else {
            assert_eq!(solved.value, Some(table), "mcr(C_{m}.P_4) vs case table");
        }

        // Witness structure: with rad(H) = 2 no broadcaster takes cost 1,
        // and each second-factor layer holds at most one broadcaster.
        let witness = solved.witness.as_ref().unwrap();
        let hn = h.vertex_count();
        let mut per_layer = vec![0usize; m];
        for v in witness.broadcasters() {
            assert!(witness.cost_of(v) >= 2, "C_{m}.P_4: cost-1 broadcaster");
            per_layer[v / hn] += 1;
        }
        assert!(
            per_layer.iter().all(|&c| c <= 1),
            "C_{m}.P_4: layer with two broadcasters"
        );
    }
    assert!(m8_discrepancy);

    // The sweep records the same story: the only disagreeing row is the
    // m=8 table row, marked as expected.
    let report = sweep::run_suite(Suite::Lex);
    assert!(report.failures().is_empty());
    let flagged: Vec<_> = report.rows.iter().filter(|r| !r.agree).collect();
    assert_eq!(flagged.len(), 1);
    assert_eq!(flagged[0].params, "m=8;h=P_4");
    assert!(flagged[0].note.starts_with(sweep::EXPECTED_DISCREPANCY));

    println!("[PASS] A5: lex products match (P_m: mcr 2, gamma 2*ceil(m/5); C_m: arc oracle; m=8 flagged)");
}

#[test]
fn a6_strong_products() {
    let mut pairs_checked = 0;
    for m in 3..=9 {
        let mcr_cm = solver::mcr(&cycle(m)).unwrap().value.unwrap();
        for n in 2..=4 {
            let p = product(ProductKind::Strong, &cycle(m), &path(n));
            let got = solver::mcr(&p).unwrap().value.unwrap();
            assert_eq!(got, mcr_cm, "mcr(C_{m} x P_{n})");
            assert!(got >= mcr_cm.max(1), "factor lower bound");
            pairs_checked += 1;
        }
    }

    for q in 2..=4 {
        let kq = generate(Family::Complete, q).unwrap();
        for (h_name, h) in [("P_5", path(5)), ("C_7", cycle(7))] {
            let mcr_h = solver::mcr(&h).unwrap().value.unwrap();
            let gamma_h = solver::gamma_ebk(&h, mcr_h).unwrap().value.unwrap();
            let p = product(ProductKind::Strong, &kq, &h);
            let got_mcr = solver::mcr(&p).unwrap().value.unwrap();
            assert_eq!(got_mcr, mcr_h, "mcr(K_{q} x {h_name})");
            let got_gamma = solver::gamma_ebk(&p, mcr_h).unwrap().value.unwrap();
            assert_eq!(got_gamma, gamma_h, "gamma(K_{q} x {h_name})");
            assert!(got_mcr >= mcr_h.max(1));
            pairs_checked += 1;
        }
    }

    // Factor lower bound on mixed pairs where neither side is forced.
    for (g, h, g_name, h_name) in [
        (cycle(4), cycle(5), "C_4", "C_5"),
        (cycle(5), cycle(7), "C_5", "C_7"),
    ] {
        let mcr_g = solver::mcr(&g).unwrap().value.unwrap();
        let mcr_h = solver::mcr(&h).unwrap().value.unwrap();
        let p = product(ProductKind::Strong, &g, &h);
        let got = solver::mcr(&p).unwrap().value.unwrap();
        assert!(
            got >= mcr_g.max(mcr_h),
            "mcr({g_name} x {h_name}) = {got} below factor bound"
        );
        pairs_checked += 1;
    }

    println!("[PASS] A6: strong products on {pairs_checked} factor pairs (cycle x path, rad-1 factors, lower bound)");
}

#[test]
fn a7_solver_agrees_with_brute_force_oracle() {
    let t0 = Instant::now();
    let corpus: Vec<_> = corpus::small_connected()
        .into_iter()
        .filter(|(_, g)| g.vertex_count() <= 8)
        .collect();
    assert!(
        corpus.len() >= 20,
        "need a real corpus, got {}",
        corpus.len()
    );
    let mut comparisons = 0;
    for (name, g) in &corpus {
        for k in 1..=2 {
            let exists = solver::exists_k_eldb(g, k).unwrap();
            let brute = solver::brute_force_oracle(g, k, Objective::Exists).unwrap();
            assert_eq!(exists.feasible, brute.feasible, "{name} exists k={k}");

            let gamma = solver::gamma_ebk(g, k).unwrap();
            let brute = solver::brute_force_oracle(g, k, Objective::MinCost).unwrap();
            assert_eq!(gamma.feasible, brute.feasible, "{name} gamma k={k}");
            assert_eq!(gamma.value, brute.value, "{name} gamma k={k}");

            let cover = solver::f_k(g, k).unwrap();
            let brute = solver::brute_force_oracle(g, k, Objective::MaxCoverage).unwrap();
            assert_eq!(cover.value, brute.value, "{name} F_k k={k}");
            comparisons += 3;
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "[PASS] A7: exact-cover solver = brute force on {} graphs x k in {{1,2}} ({comparisons} comparisons) in {elapsed:?}",
        corpus.len()
    );
}

#[test]
fn a8_tree_gadget_mcr_and_unique_witnesses() {
    for k in 1..=4 {
        let t = build_tk(k).unwrap();
        assert_eq!(solver::mcr(&t).unwrap().value, Some(k), "mcr(T_{k})");
    }
    for k in 2..=4 {
        let t = build_tk(k).unwrap();
        let (gamma, witnesses) = solver::enumerate_optimal(&t, k).unwrap().unwrap();
        assert_eq!(gamma, k, "gamma(T_{k}) at k");
        assert_eq!(witnesses.len(), 2, "T_{k} optimal witnesses");
        let mut centers = Vec::new();
        for w in &witnesses {
            let b = w.broadcasters();
            assert_eq!(b.len(), 1, "T_{k}: single broadcaster");
            assert_eq!(w.cost_of(b[0]), k, "T_{k}: full cost on the center");
            centers.push(b[0]);
        }
        centers.sort_unstable();
        assert_eq!(centers, vec![0, 1], "T_{k}: the two centers");
    }
    println!("[PASS] A8: mcr(T_k) = k for k = 1..4; exactly the two center witnesses for k = 2..4");
}

fn all_clauses(n: usize) -> Vec<[Lit; 3]> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for signs in 0..8u8 {
                    out.push([
                        Lit {
                            var: a,
                            negated: signs & 1 != 0,
                        },
                        Lit {
                            var: b,
                            negated: signs & 2 != 0,
                        },
                        Lit {
                            var: c,
                            negated: signs & 4 != 0,
                        },
                    ]);
                }
            }
        }
    }
    out
}

/// Every formula on exactly `n` variables with 1..=max_m distinct clauses.
fn all_instances(n: usize, max_m: usize) -> Vec<CnfFormula> {
    let clauses = all_clauses(n);
    let mut out = Vec::new();
    let mut pick = |indices: &[usize]| {
        let cs: Vec<[Lit; 3]> = indices.iter().map(|&i| clauses[i]).collect();
        out.push(CnfFormula::new(n, cs).unwrap());
    };
    for i in 0..clauses.len() {
        pick(&[i]);
    }
    if max_m >= 2 {
        for i in 0..clauses.len() {
            for j in i + 1..clauses.len() {
                pick(&[i, j]);
            }
        }
    }
    if max_m >= 3 {
        for i in 0..clauses.len() {
            for j in i + 1..clauses.len() {
                for l in j + 1..clauses.len() {
                    pick(&[i, j, l]);
                }
            }
        }
    }
    out
}

fn cyclic_instance(n: usize, m: usize) -> CnfFormula {
    let clauses: Vec<[Lit; 3]> = (0..m)
        .map(|j| {
            [
                Lit {
                    var: (j % n) + 1,
                    negated: j % 2 == 0,
                },
                Lit {
                    var: ((j + 1) % n) + 1,
                    negated: j % 3 == 0,
                },
                Lit {
                    var: ((j + 2) % n) + 1,
                    negated: false,
                },
            ]
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

#[test]
fn a9_reduction_equivalence() {
    let t0 = Instant::now();

    // Vertex-count identity across the build grid.
    let mut built = 0;
    for k in [2, 3, 4] {
        for n in 3..=6 {
            for m in 1..=4 {
                let cnf = cyclic_instance(n, m);
                let rg = reduction::build_reduction(&cnf, k).unwrap();
                assert_eq!(
                    rg.graph.vertex_count(),
                    (3 * k - 2) * m + (4 * k - 2) * n,
                    "count for n={n} m={m} k={k}"
                );
                built += 1;
            }
        }
    }

    // The illustrated 5-variable 2-clause instance lands on 38 vertices.
    let fig2 = reduction::parse_cnf("p cnf 5 2\n1 2 3 0\n1 -2 -5 0").unwrap();
    assert_eq!(
        reduction::build_reduction(&fig2, 2)
            .unwrap()
            .graph
            .vertex_count(),
        38
    );
    let fig2_report = reduction::verify_reduction(&fig2, 2).unwrap();
    assert!(fig2_report.equivalence_holds && fig2_report.witness_shape_ok);

    // Exhaustive equivalence: every formula with n <= 4 variables and up
    // to 3 distinct clauses, at k = 2 and k = 3.
    let mut verified = 0;
    let mut satisfiable = 0;
    for n in [3, 4] {
        let instances = all_instances(n, 3);
        for k in [2, 3] {
            let reports = reduction::verify_many(instances.clone(), k).unwrap();
            for r in &reports {
                assert!(!r.exhausted, "n={} m={} k={k}", r.variables, r.clauses);
                assert!(
                    r.equivalence_holds,
                    "equivalence failed: n={} m={} k={} sat={} eldb={}",
                    r.variables, r.clauses, r.k, r.x3sat_satisfiable, r.eldb_feasible
                );
                assert_eq!(
                    r.roundtrip_failures, 0,
                    "n={} m={} k={k}",
                    r.variables, r.clauses
                );
                assert!(
                    r.witness_shape_ok,
                    "n={} m={} k={k}",
                    r.variables, r.clauses
                );
                assert_eq!(r.vertex_count, r.expected_vertex_count);
                if r.x3sat_satisfiable {
                    satisfiable += 1;
                }
            }
            verified += reports.len();
        }
    }

    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    println!(
        "[PASS] A9: {built} gadget counts verified; equivalence + round trip on {verified} instances ({satisfiable} satisfiable) in {elapsed:?}"
    );
}

#[test]
fn a10_coverage_and_feasibility_monotone() {
    let corpus = corpus::small_connected();
    for (name, g) in &corpus {
        let d = all_pairs_distances(g).unwrap();
        let rad = d.radius();
        let n = g.vertex_count();

        let mut prev = 0;
        for k in 1..=rad {
            let f = solver::f_k(g, k).unwrap().value.unwrap();
            assert!(f >= prev, "{name}: F_{k} = {f} < F_{} = {prev}", k - 1);
            assert!(f >= 2, "{name}: a single ball always covers two vertices");
            prev = f;
        }
        assert_eq!(prev, n, "{name}: F_rad must reach |V|");

        let mcr = solver::mcr(g).unwrap().value.unwrap();
        for k in 1..mcr {
            assert!(
                !solver::exists_k_eldb(g, k).unwrap().feasible,
                "{name} k={k}"
            );
        }
        for k in mcr..=rad {
            assert!(
                solver::exists_k_eldb(g, k).unwrap().feasible,
                "{name} k={k}"
            );
        }
    }
    println!(
        "[PASS] A10: F_k non-decreasing with F_rad = |V|, and k-ELDB feasibility monotone, on {} graphs",
        corpus.len()
    );
}

#[test]
fn a11_every_witness_passes_the_independent_validator() {
    let mut validated = 0;

    for (name, g) in corpus::small_connected() {
        let rad = all_pairs_distances(&g).unwrap().radius();
        let m = solver::mcr(&g).unwrap();
        assert_sound(&g, &m, &format!("{name} mcr"));
        let k = m.value.unwrap();
        assert_sound(
            &g,
            &solver::gamma_ebk(&g, k).unwrap(),
            &format!("{name} gamma@{k}"),
        );
        assert_sound(
            &g,
            &solver::gamma_ebk(&g, k + 1).unwrap(),
            &format!("{name} gamma@{}", k + 1),
        );
        assert_sound(&g, &solver::f_k(&g, 1).unwrap(), &format!("{name} F_1"));
        assert_sound(
            &g,
            &solver::f_k(&g, 2.min(rad.max(1))).unwrap(),
            &format!("{name} F_2"),
        );
        assert_sound(
            &g,
            &solver::min_k_without_cost_one(&g).unwrap(),
            &format!("{name} no-cost-1"),
        );
        validated += 6;
    }

    for (label, p) in [
        (
            "P_6.P_4",
            product(ProductKind::Lexicographic, &path(6), &path(4)),
        ),
        ("C_7xP_3", product(ProductKind::Strong, &cycle(7), &path(3))),
        (
            "K_3xC_7",
            product(
                ProductKind::Strong,
                &generate(Family::Complete, 3).unwrap(),
                &cycle(7),
            ),
        ),
    ] {
        let m = solver::mcr(&p).unwrap();
        assert_sound(&p, &m, &format!("{label} mcr"));
        let k = m.value.unwrap();
        assert_sound(
            &p,
            &solver::gamma_ebk(&p, k).unwrap(),
            &format!("{label} gamma@{k}"),
        );
        validated += 2;
    }

    // A connected gadget witness goes through the same validator.
    let cnf = CnfFormula::new(
        3,
        vec![[
            Lit {
                var: 1,
                negated: false,
            },
            Lit {
                var: 2,
                negated: false,
            },
            Lit {
                var: 3,
                negated: false,
            },
        ]],
    )
    .unwrap();
    let rg = reduction::build_reduction(&cnf, 2).unwrap();
    let r = solver::exists_k_eldb(&rg.graph, 2).unwrap();
    assert_sound(&rg.graph, &r, "single-clause gadget exists@2");
    validated += 1;

    println!("[PASS] A11: {validated} solver witnesses validated by the hearing-rule classifier, zero exceptions");
}
