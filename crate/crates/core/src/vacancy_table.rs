//! Piecewise-constant prediction of `p~_i^(a) - p_i^(a)` across one `delta`
//! step, read off from the selected lengths `l_k^(b)`.

use crate::bijection::{DeltaRecord, INFINITE};
use crate::cartan::Node;
use crate::rigged::{vacancy, RiggedConfiguration};

/// Left end of a segment `[start, next start)`.
#[derive(Clone, Copy, Debug)]
enum Breakpoint {
    One,
    /// `l_k^(a)` as `(a, k)`.
    Ell(u8, u8),
    Min((u8, u8), (u8, u8)),
    Max((u8, u8), (u8, u8)),
}

use Breakpoint::{Ell, Max, Min, One};

const TABLE_1: &[(Breakpoint, i64)] = &[
    (One, -1),
    (Ell(1, 1), 1),
    (Ell(2, 1), 0),
    (Ell(2, 2), -1),
    (Ell(1, 2), 1),
    (Ell(2, 3), 0),
];

const TABLE_2: &[(Breakpoint, i64)] = &[
    (One, 0),
    (Ell(1, 1), -1),
    (Ell(2, 1), 1),
    (Ell(3, 1), 0),
    (Ell(3, 2), -1),
    (Ell(2, 2), 1),
    (Min((1, 2), (3, 3)), 0),
    (Max((1, 2), (3, 3)), -1),
    (Ell(2, 3), 1),
    (Ell(3, 4), 0),
];

const TABLE_3: &[(Breakpoint, i64)] = &[
    (One, 0),
    (Ell(2, 1), -1),
    (Ell(3, 1), 1),
    (Min((4, 1), (6, 1)), 0),
    (Max((4, 1), (6, 1)), -1),
    (Ell(3, 2), 1),
    (Min((2, 2), (4, 2)), 0),
    (Max((2, 2), (4, 2)), -1),
    (Ell(3, 3), 1),
    (Min((6, 2), (2, 3)), 0),
    (Max((6, 2), (2, 3)), -1),
    (Ell(3, 4), 1),
    (Ell(4, 3), 0),
];

const TABLE_4: &[(Breakpoint, i64)] = &[
    (One, 0),
    (Ell(3, 1), -1),
    (Ell(4, 1), 1),
    (Min((5, 1), (3, 2)), 0),
    (Max((5, 1), (3, 2)), -1),
    (Ell(4, 2), 1),
    (Ell(3, 3), 0),
    (Ell(3, 4), -1),
    (Ell(4, 3), 1),
    (Ell(5, 2), 0),
];

const TABLE_5: &[(Breakpoint, i64)] = &[
    (One, 0),
    (Ell(4, 1), -1),
    (Ell(5, 1), 1),
    (Ell(4, 2), 0),
    (Ell(4, 3), -1),
    (Ell(5, 2), 1),
];

const TABLE_6: &[(Breakpoint, i64)] = &[
    (One, 0),
    (Ell(3, 1), -1),
    (Ell(6, 1), 1),
    (Ell(3, 2), 0),
    (Ell(3, 3), -1),
    (Ell(6, 2), 1),
    (Ell(3, 4), 0),
];

const TABLES: [&[(Breakpoint, i64)]; 6] = [TABLE_1, TABLE_2, TABLE_3, TABLE_4, TABLE_5, TABLE_6];

fn resolve(rec: &DeltaRecord, bp: Breakpoint) -> usize {
    let ell = |(a, k): (u8, u8)| rec.ell(Node::ALL[a as usize - 1], k as usize);
    match bp {
        One => 1,
        Ell(a, k) => ell((a, k)),
        Min(x, y) => ell(x).min(ell(y)),
        Max(x, y) => ell(x).max(ell(y)),
    }
}

/// The predicted change for color `a` as `(start, value)` segments.
pub fn segments(rec: &DeltaRecord, a: Node) -> Vec<(usize, i64)> {
    TABLES[a.index()]
        .iter()
        .map(|&(bp, val)| (resolve(rec, bp), val))
        .collect()
}

/// Whether the segment starts of every table are weakly increasing, i.e.
/// every table is a well-formed partition of `[1, infinity)`.
pub fn breakpoints_ordered(rec: &DeltaRecord) -> bool {
    Node::ALL
        .iter()
        .all(|&a| segments(rec, a).windows(2).all(|w| w[0].0 <= w[1].0))
}

/// Predicted `p~_i^(a) - p_i^(a)` for `i >= 1`.
pub fn vacancy_change_oracle(rec: &DeltaRecord, a: Node, i: usize) -> i64 {
    debug_assert!(i >= 1 && i != INFINITE);
    segments(rec, a)
        .into_iter()
        .rev()
        .find(|&(start, _)| start <= i)
        .map_or(0, |(_, val)| val)
}

/// Compares the tables against vacancy numbers recomputed from the
/// configurations before and after the step, for `1 <= i <= max part + 2`.
/// Returns the mismatches as `(a, i, predicted, actual)`.
pub fn table_mismatches(
    before: &RiggedConfiguration,
    after: &RiggedConfiguration,
    rec: &DeltaRecord,
) -> Vec<(Node, usize, i64, i64)> {
    let (old, new) = (before.shape(), after.shape());
    let top = old.largest_part() + 2;
    let mut out = Vec::new();
    for a in Node::ALL {
        for i in 1..=top {
            let actual = vacancy(&new, after.length, a, i) - vacancy(&old, before.length, a, i);
            let predicted = vacancy_change_oracle(rec, a, i);
            if actual != predicted {
                out.push((a, i, predicted, actual));
            }
        }
    }
    out
}
