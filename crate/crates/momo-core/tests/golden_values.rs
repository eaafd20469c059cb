//! Compares every benchmark evaluator against fixture files produced by
//! an independent transcription of the same formulas
//! (tools/golden_values.py). A mismatch means one of the two
//! transcriptions drifted from the source definition.

use momo_core::problems::{Problem, ALL_PROBLEMS};

fn load_fixture(name: &str) -> Vec<Vec<f64>> {
    let path = format!(
        "{}/tests/data/golden_{name}.csv",
        env!("CARGO_MANIFEST_DIR")
    );
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing fixture {path}: {e}; regenerate with tools/golden_values.py"));
    text.lines()
        .map(|line| {
            line.split(',')
                .map(|field| field.parse().expect("bad float in fixture"))
                .collect()
        })
        .collect()
}

#[test]
fn evaluators_match_independent_transcription() {
    // absolute tolerance: inputs are bit-exact via shortest-roundtrip
    // formatting, so only last-ulp libm-vs-libc differences remain
    let tol = 1e-12;
    for id in ALL_PROBLEMS {
        let problem = Problem::get(id);
        let rows = load_fixture(problem.name());
        assert!(rows.len() >= 30, "{}: fixture too small", problem.name());
        for row in &rows {
            assert_eq!(row.len(), problem.dim + 2, "{}: bad row width", problem.name());
            let (x, expected) = row.split_at(problem.dim);
            let f = problem.evaluate(x).unwrap();
            for (a, b) in f.iter().zip(expected) {
                assert!(
                    (a - b).abs() <= tol * b.abs().max(1.0),
                    "{}: x={x:?} got {f:?} expected {expected:?}",
                    problem.name()
                );
            }
        }
    }
}
