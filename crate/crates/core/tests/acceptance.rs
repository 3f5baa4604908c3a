//! Acceptance suite: exact closed-form reproduction plus the exhaustive
//! verification suites, one test per criterion, each printing a pass/fail
//! line (run with `--nocapture` to see them on success).

use std::time::Instant;

use amflood::{
    enumerate_connected, flood_k, k_radius, ni_k_radius, radius_diameter, run_suite,
    total_domination_number, validate_reduction, Graph, SourceSet,
};

fn criterion(name: &str, started: Instant, ok: bool, detail: String) {
    println!(
        "acceptance {name}: {} ({:.2?})",
        if ok { "PASS" } else { "FAIL" },
        started.elapsed()
    );
    assert!(ok, "{name}: {detail}");
}

fn suite_criterion(name: &str, suite: &str, n_max: usize) {
    let t = Instant::now();
    let result = run_suite(suite, n_max).unwrap();
    let detail = result
        .failures
        .first()
        .map(|f| f.to_string())
        .unwrap_or_default();
    criterion(
        name,
        t,
        result.passed(),
        format!("{} ({} checked): {detail}", result.summary_line(), result.checked),
    );
}

fn cycle_closed_form(n: usize, k: usize) -> usize {
    if n % 2 == 1 {
        n.div_ceil(k)
    } else if k <= n / 2 {
        n.div_ceil(2 * k)
    } else if k == n {
        1
    } else {
        2
    }
}

#[test]
fn cycle_closed_forms() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in 3..=16 {
        let g = Graph::cycle(n);
        for k in 1..=n {
            let got = flood_k(&g, k, false).unwrap().value;
            let want = cycle_closed_form(n, k);
            if got != want {
                bad.push(format!("C_{n} k={k}: got {got}, want {want}"));
            }
        }
    }
    criterion("cycle-closed-forms", t, bad.is_empty(), bad.join("; "));
}

#[test]
fn complete_graph_times() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in 3..=8 {
        let g = Graph::complete(n);
        for k in 1..=n {
            let got = flood_k(&g, k, false).unwrap().value;
            let want = if k == 1 {
                3
            } else if k == n {
                1
            } else {
                2
            };
            if got != want {
                bad.push(format!("K_{n} k={k}: got {got}, want {want}"));
            }
        }
    }
    // Sourcing at every node floods any connected graph in one round
    // (n >= 2; a single isolated source has nothing to send to).
    for n in 2..=6 {
        for g in enumerate_connected(n).unwrap() {
            let got = flood_k(&g, n, false).unwrap().value;
            if got != 1 {
                bad.push(format!(
                    "Flood_n != 1 on n={n} edges={:?}",
                    g.edges().collect::<Vec<_>>()
                ));
                break;
            }
        }
    }
    criterion("complete-graph-times", t, bad.is_empty(), bad.join("; "));
}

#[test]
fn path12_triple() {
    let t = Instant::now();
    let g = Graph::path(12);
    let flood = flood_k(&g, 3, false).unwrap().value;
    let rni = ni_k_radius(&g, 3, false).unwrap().unwrap().value;
    let r = k_radius(&g, 3, false).unwrap().value;
    criterion(
        "path12-triple",
        t,
        flood == 2 && rni == 5 && r == 2,
        format!("Flood_3={flood} (want 2), r^ni_3={rni} (want 5), r_3={r} (want 2)"),
    );
}

#[test]
fn odd_cycle_sharpness() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in [3usize, 5, 7, 9, 11] {
        let g = Graph::cycle(n);
        let (rad, diam) = radius_diameter(&g).unwrap();
        let flood1 = flood_k(&g, 1, false).unwrap().value;
        if rad != (n - 1) / 2 || diam != (n - 1) / 2 || flood1 != n {
            bad.push(format!(
                "C_{n}: Rad={rad} Diam={diam} Flood_1={flood1}, want ({}, {}, {n})",
                (n - 1) / 2,
                (n - 1) / 2
            ));
        }
    }
    criterion("odd-cycle-sharpness", t, bad.is_empty(), bad.join("; "));
}

#[test]
fn equivalence_suite() {
    suite_criterion("equivalence-suite", "thm1-equivalence", 6);
}

#[test]
fn single_source_suite() {
    suite_criterion("single-source-suite", "thm6-single-source", 6);
    suite_criterion("single-source-bipartite", "cor1-bipartite", 6);
}

#[test]
fn bound_chain_suite() {
    suite_criterion("bound-chain-suite", "thm2-bounds", 6);
}

#[test]
fn nonbipartite_suite() {
    suite_criterion("nonbipartite-suite", "thm3-nonbip", 5);
    suite_criterion("nonbipartite-monotonicity", "thm3-monotone", 5);
}

#[test]
fn bipartite_gap_suite() {
    suite_criterion("bipartite-gap-suite", "thm4-bipartite-gap", 6);
}

#[test]
fn lemma_suites() {
    suite_criterion("lemma-tree-radius", "lemma-tree-radius", 7);
    suite_criterion("lemma-span-tree", "lemma-span-tree", 6);
    suite_criterion("lemma-ni-half", "lemma-ni-half", 6);

    let t = Instant::now();
    let mut bad = Vec::new();
    for n in 3..=6 {
        for g in enumerate_connected(n).unwrap() {
            let gamma = total_domination_number(&g, false).unwrap().value;
            if 3 * gamma > 2 * n {
                bad.push(format!(
                    "gamma_t={gamma} > 2n/3 on n={n} edges={:?}",
                    g.edges().collect::<Vec<_>>()
                ));
            }
        }
    }
    criterion("total-domination-bound", t, bad.is_empty(), bad.join("; "));
}

#[test]
fn reduction_validation() {
    let t = Instant::now();
    let report = validate_reduction(5).unwrap();
    criterion(
        "reduction-validation",
        t,
        report.passed(),
        format!(
            "{} decision instances, {} gadget checks, counterexamples: {:?}",
            report.instances,
            report.gamma_checked,
            report.counterexamples.first()
        ),
    );
}

#[test]
fn exploratory_reports() {
    let t = Instant::now();
    let conjecture = run_suite("conjecture-scan", 5).unwrap();
    for note in &conjecture.notes {
        println!("report {note}");
    }
    let anticenter = run_suite("anticenter-search", 6).unwrap();
    for note in &anticenter.notes {
        println!("report {note}");
    }
    let ok = conjecture.findings == 0 && !conjecture.notes.is_empty() && !anticenter.notes.is_empty();
    criterion(
        "exploratory-reports",
        t,
        ok,
        format!(
            "conjecture findings={} notes={}, anticenter notes={}",
            conjecture.findings,
            conjecture.notes.len(),
            anticenter.notes.len()
        ),
    );
}

#[test]
fn single_isolated_source_is_the_degenerate_case() {
    // The n = 1 graph floods in zero rounds: there is no one to send to.
    let t = Instant::now();
    let g = Graph::path(1);
    let s = SourceSet::all(&g).unwrap();
    let rounds = amflood::flood_rounds(&g, &s).unwrap();
    criterion(
        "degenerate-single-node",
        t,
        rounds == 0,
        format!("rounds = {rounds}"),
    );
}
