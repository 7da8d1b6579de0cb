//! The row-set correspondence between semi-skyline augmented fillings and
//! reverse semi-standard Young tableaux, and the letter insertion on fillings
//! together with its exact inverse.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fillings::{AugmentedFilling, Cell, Ssaf};
use crate::tableaux::ReverseSsyt;
use crate::Error;

/// What one insertion did: the chain of bumped values, the cells they landed
/// in, and the new cell created at the end (the last path entry).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionTrace {
    pub sequence: Vec<usize>,
    pub path: Vec<Cell>,
    pub termination: Cell,
}

impl fmt::Display for InsertionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I=(")?;
        for (i, x) in self.sequence.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "), P=(")?;
        for (i, cell) in self.path.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{cell}")?;
        }
        write!(f, "), t={}", self.termination)
    }
}

/// Sorts each row of the filling into strictly decreasing order. Row `i` of
/// the result holds exactly the entries of row `i` of the filling, so the
/// output is the reverse tableau sharing the filling's row sets.
pub fn rho(filling: &Ssaf) -> ReverseSsyt {
    let tallest = (1..=filling.basement_width())
        .map(|i| filling.height(i))
        .max()
        .unwrap_or(0);
    let rows: Vec<Vec<usize>> = (1..=tallest)
        .map(|row| {
            let mut entries: Vec<usize> = (1..=filling.basement_width())
                .filter(|&i| filling.height(i) >= row)
                .map(|i| filling.entry(Cell::new(i, row)).unwrap())
                .collect();
            entries.sort_unstable_by(|a, b| b.cmp(a));
            entries
        })
        .collect();
    ReverseSsyt::new(rows).expect("row sets of a semi-skyline filling form a reverse tableau")
}

/// Rebuilds the unique semi-skyline filling with the same row sets as the
/// given reverse tableau: working up the rows, each entry (largest first)
/// lands on top of the leftmost column of the right height whose top entry
/// can support it.
pub fn rho_inverse(tableau: &ReverseSsyt) -> Ssaf {
    let width = tableau
        .rows()
        .first()
        .and_then(|row| row.first())
        .copied()
        .unwrap_or(0);
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); width];
    for (r, row) in tableau.rows().iter().enumerate() {
        // Rows are strictly decreasing, so iteration order is largest first.
        for &entry in row {
            place_at_height(&mut columns, entry, r);
        }
    }
    let filling = AugmentedFilling::from_columns(columns)
        .expect("placements never exceed the basement width");
    Ssaf::new_unchecked(filling)
}

/// Puts `value` on top of the leftmost column of exactly `height` cells whose
/// top entry is at least `value`; a height-0 column supports `value` when its
/// basement label (the column index) does. Returns the chosen column.
pub(crate) fn place_at_height(
    columns: &mut Vec<Vec<usize>>,
    value: usize,
    height: usize,
) -> usize {
    if height == 0 {
        if columns.len() < value {
            columns.resize(value, Vec::new());
        }
        let column = (value..=columns.len())
            .find(|&i| columns[i - 1].is_empty())
            .unwrap_or_else(|| {
                columns.push(Vec::new());
                columns.len()
            });
        columns[column - 1].push(value);
        return column;
    }
    for i in 1..=columns.len() {
        if columns[i - 1].len() == height && columns[i - 1][height - 1] >= value {
            columns[i - 1].push(value);
            return i;
        }
    }
    panic!("no column of height {height} accepts {value}");
}

/// Inserts a letter into a semi-skyline filling by the scanning bump: walk
/// the cells in reading order (basement included, empty positions reading as
/// zero); the carried value replaces the entry above the first cell that is
/// at least the carried value while the cell above it is smaller, and the
/// replaced entry carries on. The walk never revisits a cell, and the first
/// placement into an empty position ends the insertion. The basement grows to
/// hold `k` if needed.
pub fn insert(filling: &Ssaf, k: usize) -> (Ssaf, InsertionTrace) {
    assert!(k >= 1, "letters are positive");
    let width = filling.basement_width().max(k);
    let mut columns = filling.columns().to_vec();
    columns.resize(width, Vec::new());

    // Shape is static until the final placement, so the reading order can be
    // fixed up front.
    let tallest = columns.iter().map(Vec::len).max().unwrap_or(0);
    let mut cells = Vec::new();
    for row in (1..=tallest).rev() {
        for column in 1..=width {
            if columns[column - 1].len() >= row {
                cells.push(Cell::new(column, row));
            }
        }
    }
    for column in 1..=width {
        cells.push(Cell::new(column, 0));
    }

    let mut value = k;
    let mut sequence = Vec::new();
    let mut path = Vec::new();
    for cell in cells {
        let here = if cell.row == 0 {
            cell.column
        } else {
            columns[cell.column - 1][cell.row - 1]
        };
        let above = columns[cell.column - 1].get(cell.row).copied().unwrap_or(0);
        if here >= value && above < value {
            sequence.push(value);
            let landing = Cell::new(cell.column, cell.row + 1);
            path.push(landing);
            if above == 0 {
                columns[cell.column - 1].push(value);
                let trace = InsertionTrace {
                    sequence,
                    path,
                    termination: landing,
                };
                let result = AugmentedFilling::from_columns(columns)
                    .expect("insertion keeps entries within the basement width");
                return (Ssaf::new_unchecked(result), trace);
            }
            columns[cell.column - 1][cell.row] = value;
            value = above;
        }
    }
    unreachable!("insertion always terminates on or above the basement")
}

/// Removes the top cell of the chosen column and undoes the bump chain that
/// would have produced it: scanning backwards through the reading order, any
/// entry greater than the carried value sitting beneath an entry at most the
/// carried value must have bumped it, so the two swap and the scan continues.
/// Returns the shrunk filling and the letter whose insertion grew the column.
/// Exact inverse of [`insert`] when the column is the trace's termination
/// column.
///
/// Errors if the column holds no cell, or if no insertion could have
/// terminated there (the filling left behind fails the triple conditions).
pub fn delete_from_column(filling: &Ssaf, column: usize) -> Result<(Ssaf, usize), Error> {
    let width = filling.basement_width();
    if column == 0 || column > width || filling.height(column) == 0 {
        return Err(Error::EmptyColumn { column });
    }
    let cells = filling.reading_cells();
    let removed = Cell::new(column, filling.height(column));
    let position = cells
        .iter()
        .position(|&c| c == removed)
        .expect("the top cell appears in reading order");
    let mut columns = filling.columns().to_vec();
    let mut value = columns[column - 1].pop().unwrap();
    for &cell in cells[..position].iter().rev() {
        let here = columns[cell.column - 1][cell.row - 1];
        let above = columns[cell.column - 1].get(cell.row).copied().unwrap_or(0);
        if here > value && above <= value {
            columns[cell.column - 1][cell.row - 1] = value;
            value = here;
        }
    }
    let result =
        AugmentedFilling::from_columns(columns).expect("deletion only rearranges entries");
    Ok((Ssaf::new(result)?, value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyspace::enumerate_ssaf;
    use crate::shapes::{compositions, sort_to_partition};
    use crate::tableaux::reverse_schensted_insert;
    use crate::testsupport::{bump_row_multisets, reverse_ssyts};

    fn ssaf(columns: &[&[usize]]) -> Ssaf {
        Ssaf::from_columns(columns.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn row_multisets(f: &Ssaf) -> Vec<Vec<usize>> {
        rho(f).row_multisets()
    }

    #[test]
    fn rho_sorts_row_sets() {
        let f = ssaf(&[&[1], &[], &[3, 2], &[], &[5, 4, 4, 3]]);
        let p = rho(&f);
        assert_eq!(
            p.rows(),
            &[vec![5, 3, 1], vec![4, 2], vec![4], vec![3]]
        );

        assert_eq!(rho(&Ssaf::empty(0)), ReverseSsyt::empty());

        let first_of_eight = ssaf(&[&[1], &[], &[3, 3, 3], &[4, 4]]);
        assert_eq!(
            rho(&first_of_eight).rows(),
            &[vec![4, 3, 1], vec![4, 3], vec![3]]
        );
    }

    #[test]
    fn rho_inverse_reproduces_the_fourteen_column_placement() {
        let p = ReverseSsyt::new(vec![
            vec![14, 13, 11, 8, 6],
            vec![14, 13, 10, 8],
            vec![13, 11, 8],
            vec![12],
            vec![8],
        ])
        .unwrap();
        let f = rho_inverse(&p);
        let mut expected = vec![Vec::new(); 14];
        expected[5] = vec![6];
        expected[7] = vec![8, 8, 8];
        expected[10] = vec![11, 10];
        expected[12] = vec![13, 13, 13, 12, 8];
        expected[13] = vec![14, 14, 11];
        assert_eq!(f, Ssaf::from_columns(expected).unwrap());
    }

    #[test]
    fn rho_inverse_single_cell() {
        let p = ReverseSsyt::new(vec![vec![4]]).unwrap();
        let f = rho_inverse(&p);
        assert_eq!(f.column(4), &[4]);
        assert_eq!(f.size(), 1);
    }

    #[test]
    fn rho_round_trips_on_small_fillings() {
        for total in 0..=4 {
            for shape in compositions(total, 4) {
                for f in enumerate_ssaf(&shape) {
                    let p = rho(&f);
                    assert_eq!(rho_inverse(&p), f);
                    assert_eq!(
                        sort_to_partition(&f.shape()).conjugate(),
                        p.shape(),
                        "row lengths conjugate the sorted heights"
                    );
                }
            }
        }
    }

    #[test]
    fn rho_inverse_is_the_unique_filling_with_matching_rows() {
        // Group every small SSAF by its row multisets, then check each
        // reverse tableau maps to the one filling in its group.
        use std::collections::HashMap;
        let mut by_rows: HashMap<(usize, Vec<Vec<usize>>), Vec<Ssaf>> = HashMap::new();
        for total in 0..=5 {
            for shape in compositions(total, 5) {
                for f in enumerate_ssaf(&shape) {
                    by_rows
                        .entry((total, row_multisets(&f)))
                        .or_default()
                        .push(f);
                }
            }
        }
        for p in reverse_ssyts(5, 5) {
            let key = (p.size(), p.row_multisets());
            let group = by_rows.get(&key).expect("some filling realizes the rows");
            assert_eq!(group.len(), 1, "row sets {key:?} have several fillings");
            assert_eq!(rho_inverse(&p), group[0]);
            assert_eq!(rho(&group[0]), p);
        }
    }

    #[test]
    fn insert_reproduces_the_traced_example() {
        let f = ssaf(&[&[1], &[], &[], &[4, 4, 3], &[5, 2], &[], &[]]);
        let (result, trace) = insert(&f, 4);
        assert_eq!(
            result,
            ssaf(&[&[1], &[2], &[], &[4, 4, 4], &[5, 3], &[], &[]])
        );
        assert_eq!(trace.sequence, vec![4, 3, 2]);
        assert_eq!(
            trace.path,
            vec![Cell::new(4, 3), Cell::new(5, 2), Cell::new(2, 1)]
        );
        assert_eq!(trace.termination, Cell::new(2, 1));
        assert_eq!(
            trace.to_string(),
            "I=(4,3,2), P=((4,3),(5,2),(2,1)), t=(2,1)"
        );
    }

    #[test]
    fn insert_into_empty_lands_on_its_own_basement() {
        let (f, trace) = insert(&Ssaf::empty(0), 3);
        assert_eq!(f.column(3), &[3]);
        assert_eq!(f.basement_width(), 3);
        assert_eq!(trace.to_string(), "I=(3), P=((3,1)), t=(3,1)");
    }

    #[test]
    fn insert_commutes_with_rho_and_matches_the_multiset_rule() {
        for total in 0..=4 {
            for shape in compositions(total, 4) {
                for f in enumerate_ssaf(&shape) {
                    for k in 1..=4 {
                        let (grown, trace) = insert(&f, k);
                        let (tableau, terminal_row) = reverse_schensted_insert(&rho(&f), k);
                        assert_eq!(rho(&grown), tableau, "F = {f}, k = {k}");
                        assert_eq!(trace.termination.row, terminal_row);
                        let (rows, row) = bump_row_multisets(&rho(&f).row_multisets(), k);
                        assert_eq!(row_multisets(&grown), rows);
                        assert_eq!(trace.termination.row, row);
                    }
                }
            }
        }
    }

    #[test]
    fn bumped_values_land_above_their_next_occurrence() {
        for shape in compositions(4, 4) {
            for f in enumerate_ssaf(&shape) {
                for k in 1..=4 {
                    let (_, trace) = insert(&f, k);
                    let cells = {
                        // Reading cells of the width-extended original.
                        let mut widened = f.columns().to_vec();
                        widened.resize(f.basement_width().max(k), Vec::new());
                        AugmentedFilling::from_columns(widened).unwrap()
                    };
                    let reading = cells.reading_cells();
                    let mut start = 0;
                    for (i, &x) in trace.sequence.iter().enumerate() {
                        let next_occurrence = reading[start..]
                            .iter()
                            .find(|&&c| cells.entry(c) == Some(x));
                        if let Some(&cell) = next_occurrence {
                            assert!(
                                trace.path[i].row > cell.row,
                                "x{} = {x} landed at {} not above {}",
                                i + 1,
                                trace.path[i],
                                cell
                            );
                        }
                        start = reading
                            .iter()
                            .position(|&c| c == trace.path[i])
                            .map_or(start, |p| p + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn delete_undoes_the_traced_example() {
        let grown = ssaf(&[&[1], &[2], &[], &[4, 4, 4], &[5, 3], &[], &[]]);
        let (back, letter) = delete_from_column(&grown, 2).unwrap();
        assert_eq!(back, ssaf(&[&[1], &[], &[], &[4, 4, 3], &[5, 2], &[], &[]]));
        assert_eq!(letter, 4);
    }

    #[test]
    fn delete_single_cell() {
        let f = ssaf(&[&[], &[], &[3]]);
        let (back, letter) = delete_from_column(&f, 3).unwrap();
        assert!(back.is_empty());
        assert_eq!(letter, 3);
    }

    #[test]
    fn delete_rejects_empty_columns() {
        let f = ssaf(&[&[1], &[]]);
        assert!(matches!(
            delete_from_column(&f, 2),
            Err(Error::EmptyColumn { column: 2 })
        ));
        assert!(delete_from_column(&f, 5).is_err());
    }

    #[test]
    fn delete_inverts_insert_at_the_termination_column() {
        for total in 0..=5 {
            for shape in compositions(total, 5) {
                for f in enumerate_ssaf(&shape) {
                    for k in 1..=5 {
                        let (grown, trace) = insert(&f, k);
                        let (back, letter) =
                            delete_from_column(&grown, trace.termination.column).unwrap();
                        assert_eq!(letter, k, "F = {f}, k = {k}");
                        assert_eq!(back, f.clone(), "F = {f}, k = {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn delete_from_any_column_is_valid_or_rejected() {
        // Deletion inverts an insertion only at a column where one could
        // have terminated; elsewhere it must refuse rather than hand back a
        // broken filling.
        for total in 1..=4 {
            for shape in compositions(total, 4) {
                for f in enumerate_ssaf(&shape) {
                    for column in 1..=4 {
                        if f.height(column) == 0 {
                            continue;
                        }
                        match delete_from_column(&f, column) {
                            Ok((shrunk, letter)) => {
                                assert!(letter >= 1);
                                assert!(shrunk.as_filling().is_ssaf());
                                assert_eq!(shrunk.size() + 1, f.size());
                            }
                            Err(Error::NotSsaf { .. }) => {}
                            Err(other) => panic!("unexpected error {other}"),
                        }
                    }
                }
            }
        }
        // A concrete refusal: both columns have height two, and removing from
        // the left one strands a non-inverted triple.
        let f = ssaf(&[&[], &[], &[3, 2], &[4, 1]]);
        assert!(matches!(
            delete_from_column(&f, 3),
            Err(Error::NotSsaf { .. })
        ));
        assert!(delete_from_column(&f, 4).is_ok());
    }

    #[test]
    fn trace_json_shape() {
        let f = ssaf(&[&[1], &[], &[], &[4, 4, 3], &[5, 2], &[], &[]]);
        let (_, trace) = insert(&f, 4);
        assert_eq!(
            serde_json::to_string(&trace).unwrap(),
            "{\"sequence\":[4,3,2],\"path\":[[4,3],[5,2],[2,1]],\"termination\":[2,1]}"
        );
    }
}
