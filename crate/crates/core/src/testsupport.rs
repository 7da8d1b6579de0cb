//! Independent oracles shared by the unit tests. Everything here recomputes
//! results from first principles, deliberately avoiding the production code
//! paths it is used to check.

use crate::shapes::partitions;
use crate::tableaux::ReverseSsyt;

/// Predicts the row multisets after one letter is inserted, working purely
/// with multiset counts: the value bumped out of row `i` is the largest `v`
/// such that row `i` (plus the arriving value) holds more entries `>= v`
/// than row `i - 1` does; when no such value exists the arrival settles in
/// row `i`. Row 0 acts as a bottomless floor. Returns the row multisets
/// (sorted, bottom row first) and the 1-based settling row.
pub(crate) fn bump_row_multisets(rows: &[Vec<usize>], k: usize) -> (Vec<Vec<usize>>, usize) {
    let mut rows: Vec<Vec<usize>> = rows.to_vec();
    rows.push(Vec::new());
    let count_ge = |set: &[usize], v: usize| set.iter().filter(|&&e| e >= v).count();
    let mut value = k;
    let mut i = rows.len();
    loop {
        let mut merged = rows[i - 1].clone();
        merged.push(value);
        let mut candidates = merged.clone();
        candidates.sort_unstable();
        candidates.dedup();
        candidates.reverse();
        let bumped = candidates.into_iter().find(|&v| {
            i > 1 && count_ge(&merged, v) > count_ge(&rows[i - 2], v)
        });
        match bumped {
            None => {
                merged.sort_unstable();
                rows[i - 1] = merged;
                while rows.last().is_some_and(Vec::is_empty) {
                    rows.pop();
                }
                return (rows, i);
            }
            Some(v) => {
                let pos = merged.iter().position(|&e| e == v).unwrap();
                merged.remove(pos);
                merged.sort_unstable();
                rows[i - 1] = merged;
                value = v;
                i -= 1;
            }
        }
    }
}

/// Every reverse semi-standard Young tableau with at most `max_cells` cells
/// and entries at most `max_entry`, built by direct backtracking over the
/// defining inequalities.
pub(crate) fn reverse_ssyts(max_cells: usize, max_entry: usize) -> Vec<ReverseSsyt> {
    let mut out = vec![ReverseSsyt::empty()];
    for n in 1..=max_cells {
        for shape in partitions(n) {
            let lengths = shape.parts().to_vec();
            let mut rows: Vec<Vec<usize>> = lengths.iter().map(|&l| vec![0; l]).collect();
            fill_reverse(&lengths, max_entry, 0, 0, &mut rows, &mut out);
        }
    }
    out
}

fn fill_reverse(
    lengths: &[usize],
    max_entry: usize,
    mut r: usize,
    mut c: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<ReverseSsyt>,
) {
    if r == lengths.len() {
        out.push(ReverseSsyt::new(rows.clone()).expect("backtracker respects the inequalities"));
        return;
    }
    if c == lengths[r] {
        r += 1;
        c = 0;
        if r == lengths.len() {
            out.push(
                ReverseSsyt::new(rows.clone()).expect("backtracker respects the inequalities"),
            );
            return;
        }
    }
    // Strictly below the left neighbour, weakly below the cell underneath.
    let mut cap = max_entry;
    if c > 0 {
        cap = cap.min(rows[r][c - 1].saturating_sub(1));
    }
    if r > 0 {
        cap = cap.min(rows[r - 1][c]);
    }
    for entry in 1..=cap {
        rows[r][c] = entry;
        fill_reverse(lengths, max_entry, r, c + 1, rows, out);
    }
    rows[r][c] = 0;
}
