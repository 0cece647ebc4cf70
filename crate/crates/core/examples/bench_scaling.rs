//! Times the linear-time solvers on growing path-heavy instances.

use metdim::bench::{run_suite, to_csv, BenchSuite};

fn main() {
    for suite in [BenchSuite::DiTree, BenchSuite::Unicyclic] {
        let rows = run_suite(suite, &[1_000, 10_000, 100_000], 1, false).unwrap();
        print!("{}", to_csv(&rows));
    }
}
