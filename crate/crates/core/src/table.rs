//! Per-`|S|` complexity tables: closed-form bounds or values measured on
//! the witness families, rendered as TSV.

use std::fmt::Write as _;

use crate::atoms::enumerate_atoms_with;
use crate::bounds::{build_table, fill_ratios, BoundsTable, MAX_TABLE_STATES};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::witnesses::{witness, WitnessClass};

/// Classes of the three-way comparison, in cell order.
pub const COMPARE_CLASSES: [WitnessClass; 3] = [
    WitnessClass::TwoSidedIdeal,
    WitnessClass::LeftIdeal,
    WitnessClass::Regular,
];

/// Automata standing in for the class at `n`. Below the witness range the
/// one-state automata are used: `Σ*` for every class, and the empty
/// language for the classes whose one-state table has an `|S| = 0` entry.
pub fn table_instances(class: WitnessClass, n: usize) -> Result<Vec<Dfa>> {
    if n >= class.min_states() {
        return Ok(vec![witness(class, n)?]);
    }
    if n != 1 {
        return Err(Error::NoWitness {
            class: class.name(),
            n,
        });
    }
    let mut out = vec![Dfa::trivial(&["a"], true)];
    if matches!(class, WitnessClass::Regular | WitnessClass::LeftIdeal) {
        out.push(Dfa::trivial(&["a"], false));
    }
    Ok(out)
}

/// Largest atom complexity per `|S|` over the instances of the class.
pub fn witness_table(class: WitnessClass, n: usize, exec: Execution) -> Result<BoundsTable> {
    let mut rows: Vec<Option<u64>> = vec![None; n + 1];
    for d in table_instances(class, n)? {
        for e in enumerate_atoms_with(&d, exec)?.atoms() {
            let k = e.complexity.expect("atom") as u64;
            let slot = &mut rows[e.basis.len()];
            *slot = Some(slot.map_or(k, |v| v.max(k)));
        }
    }
    Ok(BoundsTable::from_rows(class, n, rows))
}

pub fn witness_tables(
    class: WitnessClass,
    n_max: usize,
    exec: Execution,
) -> Result<Vec<BoundsTable>> {
    if n_max > MAX_TABLE_STATES {
        return Err(Error::TooManyStates {
            n: n_max,
            limit: MAX_TABLE_STATES,
        });
    }
    let mut tables = (1..=n_max)
        .map(|n| witness_table(class, n, exec))
        .collect::<Result<Vec<_>>>()?;
    fill_ratios(&mut tables);
    Ok(tables)
}

fn cell(value: Option<u64>) -> String {
    value.map_or_else(|| "*".to_string(), |v| v.to_string())
}

fn ratio(value: Option<f64>) -> String {
    value.map_or_else(|| "-".to_string(), |r| format!("{r:.2}"))
}

fn header(out: &mut String, n_max: usize) {
    out.push('n');
    for n in 1..=n_max {
        write!(out, "\t{n}").unwrap();
    }
    out.push('\n');
}

/// One column per `n`; rows `|S|=0..=n_max`, then `max` and `ratio`.
/// Impossible sizes print `*`; sizes larger than `n` are left empty.
pub fn render_tsv(tables: &[BoundsTable]) -> String {
    render_columns(tables.len(), |n, row| match row {
        Row::Size(s) if s > n => String::new(),
        Row::Size(s) => cell(tables[n - 1].rows[s]),
        Row::Max => tables[n - 1].max.to_string(),
        Row::Ratio => ratio(tables[n - 1].ratio),
    })
}

/// Three-way table with cells `two-sided/left/regular`, one table list per
/// class in [`COMPARE_CLASSES`] order.
pub fn render_compare_tsv(by_class: &[Vec<BoundsTable>; 3]) -> String {
    let n_max = by_class[0].len();
    assert!(by_class.iter().all(|t| t.len() == n_max));
    let join = |f: &dyn Fn(&BoundsTable) -> String, n: usize| {
        by_class
            .iter()
            .map(|tables| f(&tables[n - 1]))
            .collect::<Vec<_>>()
            .join("/")
    };
    render_columns(n_max, |n, row| match row {
        Row::Size(s) if s > n => String::new(),
        Row::Size(s) => join(&|t| cell(t.rows[s]), n),
        Row::Max => join(&|t| t.max.to_string(), n),
        Row::Ratio if n == 1 => "-".to_string(),
        Row::Ratio => join(&|t| ratio(t.ratio), n),
    })
}

#[derive(Clone, Copy)]
enum Row {
    Size(usize),
    Max,
    Ratio,
}

fn render_columns(n_max: usize, cell_at: impl Fn(usize, Row) -> String) -> String {
    let mut out = String::new();
    header(&mut out, n_max);
    let rows = (0..=n_max).map(Row::Size).chain([Row::Max, Row::Ratio]);
    for row in rows {
        match row {
            Row::Size(s) => write!(out, "|S|={s}").unwrap(),
            Row::Max => out.push_str("max"),
            Row::Ratio => out.push_str("ratio"),
        }
        for n in 1..=n_max {
            write!(out, "\t{}", cell_at(n, row)).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Closed-form comparison table for `n = 1..=n_max`.
pub fn compare_bounds_tsv(n_max: usize) -> Result<String> {
    let [a, b, c] = COMPARE_CLASSES.map(|class| build_table(class, n_max));
    Ok(render_compare_tsv(&[a?, b?, c?]))
}

/// Comparison table measured on the witness families.
pub fn compare_witnesses_tsv(n_max: usize, exec: Execution) -> Result<String> {
    let [a, b, c] = COMPARE_CLASSES.map(|class| witness_tables(class, n_max, exec));
    Ok(render_compare_tsv(&[a?, b?, c?]))
}
