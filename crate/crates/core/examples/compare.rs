//! Prints the two-sided/left/regular comparison table measured on the
//! witness families.
fn main() {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(9);
    let tsv = ideal_atoms::table::compare_witnesses_tsv(n_max, ideal_atoms::Execution::default())
        .expect("table");
    print!("{tsv}");
}
