//! Shared fixtures for the pipeline benchmarks.

use std::sync::Arc;

use nervekit::corpus::{arrow_diagram, disc_cyclic};
use nervekit::monoidal::{BraidedDiagram, MonoidalFunctor};
use nervekit::smith::IntMatrix;

/// The arrow-category diagram with identity transfers on disc(Z/2).
pub fn arrow_identity_diagram() -> BraidedDiagram {
    let z2 = Arc::new(disc_cyclic(2));
    arrow_diagram(z2.clone(), z2.clone(), MonoidalFunctor::identity(&z2.mon))
}

/// A deterministic dense integer matrix with mixed-magnitude entries.
pub fn dense_test_matrix(rows: usize, cols: usize) -> IntMatrix {
    let entries: Vec<Vec<i64>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let v = ((i * 31 + j * 17) % 13) as i64 - 6;
                    if (i + j) % 5 == 0 {
                        v * 3
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&entries)
}
