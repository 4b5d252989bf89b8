//! Read every matrix in the bundled corpus and compare brute-force
//! anti-invariant counts with the general formula.

use std::path::Path;

use antiinv::counting::{at_q, closed_form_alpha, count_anti_invariant_brute, invariant_counts, AlphaFormula};
use antiinv::gflinalg::{MatrixFile, DEFAULT_GUARD as G};

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let mut paths: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    for path in paths {
        let t = MatrixFile::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let x = invariant_counts(&t, G).unwrap();
        let n = t.rows();
        let row: Vec<String> = (0..=n / 2)
            .map(|l| {
                let brute = count_anti_invariant_brute(&t, l, G).unwrap();
                let formula = at_q(&closed_form_alpha(n, l, AlphaFormula::Main(&x)).unwrap(), t.ctx());
                assert_eq!(brute, formula);
                brute.to_string()
            })
            .collect();
        println!(
            "{:<28} GF({}) n={n}: alpha = [{}]",
            path.file_name().unwrap().to_string_lossy(),
            t.ctx().order(),
            row.join(", ")
        );
    }
}
