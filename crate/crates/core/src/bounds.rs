//! Closed-form maxima for the number of atoms and for atom complexities.

use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::witnesses::WitnessClass;

/// Largest `n` accepted by [`build_table`].
pub const MAX_TABLE_STATES: usize = 12;

fn binom(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    (0..k).fold(1u64, |acc, i| {
        acc.checked_mul(n - i).expect("binomial overflow") / (i + 1)
    })
}

fn pow2(e: usize) -> u64 {
    1u64.checked_shl(e as u32).expect("power of two overflow")
}

/// `1 + Σ_{x=1}^{s} Σ_{y=1}^{n-s} f(x, y)`.
fn pair_sum(n: usize, s: usize, f: impl Fn(i64, i64) -> u64) -> u64 {
    let mut total = 1u64;
    for x in 1..=s as i64 {
        for y in 1..=(n - s) as i64 {
            total = total.checked_add(f(x, y)).expect("bound overflow");
        }
    }
    total
}

/// What the bounds need to know about a basis `S`: its size and whether it
/// holds the initial state (state 1) and the accepting sink (state `n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisProfile {
    pub n: usize,
    pub size: usize,
    pub contains_initial: bool,
    pub contains_sink: bool,
}

impl BasisProfile {
    /// Profile with state 1 initial and state `n` the sink, the labelling
    /// used by the witness families.
    pub fn of(n: usize, basis: StateSet) -> Self {
        Self::relative(n, basis, 0, n - 1)
    }

    /// Profile against explicit initial and sink states (0-based).
    pub fn relative(n: usize, basis: StateSet, initial: usize, sink: usize) -> Self {
        BasisProfile {
            n,
            size: basis.len(),
            contains_initial: basis.contains(initial),
            contains_sink: basis.contains(sink),
        }
    }

    /// Every profile realizable by some basis of the given size.
    pub fn all_of_size(n: usize, size: usize) -> Vec<BasisProfile> {
        if n == 1 {
            let has = size == 1;
            return vec![BasisProfile {
                n,
                size,
                contains_initial: has,
                contains_sink: has,
            }];
        }
        let mut out = Vec::new();
        for contains_initial in [false, true] {
            for contains_sink in [false, true] {
                let fixed = usize::from(contains_initial) + usize::from(contains_sink);
                if fixed <= size && size - fixed <= n - 2 {
                    out.push(BasisProfile {
                        n,
                        size,
                        contains_initial,
                        contains_sink,
                    });
                }
            }
        }
        out
    }
}

/// Maximal number of atoms of a language of complexity `n` in the class.
pub fn max_atom_count(class: WitnessClass, n: usize) -> u64 {
    if n <= 1 {
        return 1;
    }
    match class {
        WitnessClass::Regular => pow2(n),
        WitnessClass::RightIdeal => pow2(n - 1),
        WitnessClass::LeftIdeal => pow2(n - 1) + 1,
        WitnessClass::TwoSidedIdeal => pow2(n - 2) + 1,
    }
}

/// Maximal complexity of an atom `A_S` with the given basis profile, or
/// `None` when no language of the class has such an atom.
pub fn atom_complexity_bound(class: WitnessClass, p: BasisProfile) -> Option<u64> {
    let (n, s) = (p.n, p.size);
    assert!(n >= 1 && s <= n, "basis size {s} out of range for n = {n}");
    let n_i = n as i64;
    match class {
        WitnessClass::Regular => Some(if s == 0 || s == n {
            pow2(n) - 1
        } else {
            pair_sum(n, s, |x, y| binom(n_i, x) * binom(n_i - x, y))
        }),
        WitnessClass::RightIdeal => {
            if !p.contains_sink {
                None
            } else if s == n {
                Some(pow2(n - 1))
            } else {
                Some(pair_sum(n, s, |x, y| {
                    binom(n_i - 1, x - 1) * binom(n_i - x, y)
                }))
            }
        }
        WitnessClass::LeftIdeal => {
            if s == n {
                Some(n as u64)
            } else if p.contains_initial {
                None
            } else if s == 0 {
                Some(pow2(n - 1))
            } else {
                Some(pair_sum(n, s, |x, y| {
                    binom(n_i - 1, x) * binom(n_i - x - 1, y - 1)
                }))
            }
        }
        WitnessClass::TwoSidedIdeal => {
            if s == n {
                Some(n as u64)
            } else if p.contains_initial || !p.contains_sink {
                None
            } else if s == n - 1 {
                Some(pow2(n - 2) + n as u64 - 1)
            } else {
                Some(pair_sum(n, s, |x, y| {
                    binom(n_i - 2, x - 1) * binom(n_i - x - 1, y - 1)
                }))
            }
        }
    }
}

/// Largest bound over all bases of size `size`.
pub fn size_bound(class: WitnessClass, n: usize, size: usize) -> Option<u64> {
    BasisProfile::all_of_size(n, size)
        .into_iter()
        .filter_map(|p| atom_complexity_bound(class, p))
        .max()
}

/// Per-`|S|` maxima for one class and one `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundsTable {
    pub class: WitnessClass,
    pub n: usize,
    /// Indexed by `|S|` in `0..=n`; `None` marks an impossible size.
    pub rows: Vec<Option<u64>>,
    pub max: u64,
    /// `max_n / max_{n-1}`, absent for the first column.
    pub ratio: Option<f64>,
}

impl BoundsTable {
    /// Closed-form maxima.
    pub fn new(class: WitnessClass, n: usize) -> Self {
        Self::from_rows(class, n, (0..=n).map(|s| size_bound(class, n, s)).collect())
    }

    pub fn from_rows(class: WitnessClass, n: usize, rows: Vec<Option<u64>>) -> Self {
        assert_eq!(rows.len(), n + 1);
        let max = rows.iter().flatten().copied().max().unwrap_or(0);
        BoundsTable {
            class,
            n,
            rows,
            max,
            ratio: None,
        }
    }
}

/// One table per `n` in `1..=n_max`, ratios filled against the previous `n`.
pub fn build_table(class: WitnessClass, n_max: usize) -> Result<Vec<BoundsTable>> {
    if n_max > MAX_TABLE_STATES {
        return Err(Error::TooManyStates {
            n: n_max,
            limit: MAX_TABLE_STATES,
        });
    }
    let mut tables: Vec<BoundsTable> = (1..=n_max).map(|n| BoundsTable::new(class, n)).collect();
    fill_ratios(&mut tables);
    Ok(tables)
}

/// Sets each table's ratio against its predecessor in the slice.
pub fn fill_ratios(tables: &mut [BoundsTable]) {
    for i in 1..tables.len() {
        tables[i].ratio = Some(tables[i].max as f64 / tables[i - 1].max as f64);
    }
}

/// Right-ideal bound for `|S| = s` equals the left-ideal bound for
/// `|S| = n - s`, for every proper non-empty size.
pub fn symmetry_check(n: usize) -> bool {
    (1..n).all(|s| {
        let right = atom_complexity_bound(
            WitnessClass::RightIdeal,
            BasisProfile {
                n,
                size: s,
                contains_initial: false,
                contains_sink: true,
            },
        );
        let left = atom_complexity_bound(
            WitnessClass::LeftIdeal,
            BasisProfile {
                n,
                size: n - s,
                contains_initial: false,
                contains_sink: true,
            },
        );
        right.is_some() && right == left
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts disjoint pairs `(X, Y)` directly: `1 ≤ |X| ≤ s`,
    /// `1 ≤ |Y| ≤ n - s`, plus the class membership constraints, plus one
    /// for the empty quotient.
    fn count_pairs(n: usize, s: usize, keep: impl Fn(StateSet, StateSet) -> bool) -> u64 {
        let mut count = 1;
        for x in StateSet::all_subsets(n) {
            for y in StateSet::all_subsets(n) {
                if (1..=s).contains(&x.len())
                    && (1..=n - s).contains(&y.len())
                    && x.is_disjoint(y)
                    && keep(x, y)
                {
                    count += 1;
                }
            }
        }
        count
    }

    fn generic(n: usize, s: usize) -> BasisProfile {
        BasisProfile {
            n,
            size: s,
            contains_initial: false,
            contains_sink: true,
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(12, 6), 924);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(2, 3), 0);
    }

    #[test]
    fn pair_sums_match_enumeration() {
        for n in 2..=7 {
            let last = n - 1;
            for s in 1..n {
                let reg = count_pairs(n, s, |_, _| true);
                let right = count_pairs(n, s, |x, _| x.contains(last));
                let left = count_pairs(n, s, |x, y| !x.contains(0) && y.contains(0));
                let two = count_pairs(n, s, |x, y| {
                    x.contains(last) && !x.contains(0) && y.contains(0) && !y.contains(last)
                });
                assert_eq!(
                    atom_complexity_bound(WitnessClass::Regular, generic(n, s)),
                    Some(reg)
                );
                assert_eq!(
                    atom_complexity_bound(WitnessClass::RightIdeal, generic(n, s)),
                    Some(right)
                );
                assert_eq!(
                    atom_complexity_bound(WitnessClass::LeftIdeal, generic(n, s)),
                    Some(left)
                );
                if s < n - 1 {
                    assert_eq!(
                        atom_complexity_bound(WitnessClass::TwoSidedIdeal, generic(n, s)),
                        Some(two)
                    );
                }
            }
        }
    }

    #[test]
    fn atom_counts() {
        assert_eq!(max_atom_count(WitnessClass::Regular, 5), 32);
        assert_eq!(max_atom_count(WitnessClass::TwoSidedIdeal, 4), 5);
        for class in WitnessClass::ALL {
            assert_eq!(max_atom_count(class, 1), 1);
        }
    }

    #[test]
    fn tabulated_cells() {
        assert_eq!(size_bound(WitnessClass::Regular, 4, 2), Some(43));
        assert_eq!(size_bound(WitnessClass::LeftIdeal, 5, 2), Some(53));
        assert_eq!(size_bound(WitnessClass::TwoSidedIdeal, 6, 3), Some(64));
        assert_eq!(size_bound(WitnessClass::TwoSidedIdeal, 6, 0), None);
        assert_eq!(size_bound(WitnessClass::RightIdeal, 6, 0), None);
        for n in 1..=9 {
            assert_eq!(size_bound(WitnessClass::LeftIdeal, n, n), Some(n as u64));
        }
    }

    #[test]
    fn special_bases() {
        let full = |n| BasisProfile::of(n, StateSet::full(n));
        assert_eq!(
            atom_complexity_bound(WitnessClass::Regular, full(4)),
            Some(15)
        );
        assert_eq!(
            atom_complexity_bound(WitnessClass::RightIdeal, full(4)),
            Some(8)
        );
        assert_eq!(
            atom_complexity_bound(WitnessClass::LeftIdeal, full(4)),
            Some(4)
        );
        let no_first = BasisProfile::of(5, StateSet::full(5).without(0));
        assert_eq!(
            atom_complexity_bound(WitnessClass::TwoSidedIdeal, no_first),
            Some(12)
        );
        // 1 ∈ S ≠ Q_n is never an atom of a left ideal
        let with_first = BasisProfile::of(5, StateSet::one_based(&[1, 5]));
        assert_eq!(
            atom_complexity_bound(WitnessClass::LeftIdeal, with_first),
            None
        );
        assert_eq!(
            atom_complexity_bound(WitnessClass::TwoSidedIdeal, with_first),
            None
        );
        assert_eq!(
            atom_complexity_bound(
                WitnessClass::LeftIdeal,
                BasisProfile::of(5, StateSet::EMPTY)
            ),
            Some(16)
        );
    }

    #[test]
    fn max_rows_and_ratios() {
        let reg = build_table(WitnessClass::Regular, 5).unwrap();
        let maxes: Vec<u64> = reg.iter().map(|t| t.max).collect();
        assert_eq!(maxes, vec![1, 3, 10, 43, 141]);
        assert_eq!(format!("{:.2}", reg[3].ratio.unwrap()), "4.30");
        assert_eq!(reg[0].ratio, None);
        let ts = build_table(WitnessClass::TwoSidedIdeal, 9).unwrap();
        assert_eq!(ts[8].max, 1710);
        assert!(build_table(WitnessClass::Regular, 13).is_err());
        assert!(build_table(WitnessClass::Regular, 12).is_ok());
    }

    #[test]
    fn symmetry() {
        assert_eq!(
            atom_complexity_bound(WitnessClass::RightIdeal, generic(4, 2)),
            Some(16)
        );
        assert_eq!(
            atom_complexity_bound(WitnessClass::LeftIdeal, generic(4, 2)),
            Some(16)
        );
        for n in 2..=12 {
            assert!(symmetry_check(n), "n = {n}");
        }
    }
}
