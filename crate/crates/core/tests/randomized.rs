//! Seeded random sweeps at sizes the exhaustive enumeration cannot reach:
//! 200 samples of 30-node graphs for the per-instance suites.

use amflood::run_suite_random;

#[test]
fn randomized_suites_pass_on_thirty_node_graphs() {
    for suite in ["thm1-equivalence", "cor1-bipartite", "thm6-single-source"] {
        let result = run_suite_random(suite, 30, 200, 2024).unwrap();
        assert!(
            result.passed(),
            "suite {suite} failed: {:?}",
            result.failures.first()
        );
        assert!(result.checked >= 200, "suite {suite} undersampled");
    }
}
