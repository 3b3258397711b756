//! Prints the closed-form comparison table.
fn main() {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(9);
    print!(
        "{}",
        ideal_atoms::table::compare_bounds_tsv(n_max).expect("table")
    );
}
