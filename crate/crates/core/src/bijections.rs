//! The weight-preserving correspondence between semi-standard tableaux and
//! semi-skyline fillings, the matrix correspondence producing filling pairs,
//! and skylining.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::fillings::{AugmentedFilling, Ssaf};
use crate::maps::{delete_from_column, insert, place_at_height};
use crate::shapes::sort_to_partition;
use crate::tableaux::{standardize_word, Ssyt, Word};
use crate::Error;

/// A matrix over the naturals with finitely many nonzero entries, stored as
/// `(row, column) -> count` with 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NatMatrix {
    entries: BTreeMap<(usize, usize), usize>,
}

impl NatMatrix {
    pub fn zero() -> Self {
        NatMatrix::default()
    }

    /// Accumulates `(row, column, count)` triples. Indices and counts must be
    /// positive.
    pub fn from_entries<I>(entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let mut map = BTreeMap::new();
        for (i, j, count) in entries {
            if i == 0 || j == 0 || count == 0 {
                return Err(Error::MalformedMatrix);
            }
            *map.entry((i, j)).or_insert(0) += count;
        }
        Ok(NatMatrix { entries: map })
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &count)| (i, j, count))
    }

    pub fn count(&self, row: usize, column: usize) -> usize {
        self.entries.get(&(row, column)).copied().unwrap_or(0)
    }

    /// Sum of all counts.
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> NatMatrix {
        NatMatrix {
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &count)| ((j, i), count))
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    entries: Vec<(usize, usize, usize)>,
}

impl Serialize for NatMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixRepr {
            entries: self.entries().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NatMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        NatMatrix::from_entries(repr.entries).map_err(D::Error::custom)
    }
}

/// The biword of a matrix: the top line weakly increases, and bottom entries
/// under a repeated top letter weakly increase too.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoLineArray {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl TwoLineArray {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self, Error> {
        if top.len() != bottom.len() {
            return Err(Error::MalformedArray {
                reason: "top and bottom lines differ in length".to_string(),
            });
        }
        if top.iter().chain(&bottom).any(|&x| x == 0) {
            return Err(Error::MalformedArray {
                reason: "letters must be positive".to_string(),
            });
        }
        for r in 1..top.len() {
            if top[r - 1] > top[r] {
                return Err(Error::MalformedArray {
                    reason: "top line must weakly increase".to_string(),
                });
            }
            if top[r - 1] == top[r] && bottom[r - 1] > bottom[r] {
                return Err(Error::MalformedArray {
                    reason: "bottom letters under equal top letters must weakly increase"
                        .to_string(),
                });
            }
        }
        Ok(TwoLineArray { top, bottom })
    }

    pub fn empty() -> Self {
        TwoLineArray {
            top: Vec::new(),
            bottom: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// Column pairs `(top, bottom)` left to right.
    pub fn pairs(&self) -> impl DoubleEndedIterator<Item = (usize, usize)> + '_ {
        self.top.iter().copied().zip(self.bottom.iter().copied())
    }
}

impl<'de> Deserialize<'de> for TwoLineArray {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            top: Vec<usize>,
            bottom: Vec<usize>,
        }
        let repr = Repr::deserialize(deserializer)?;
        TwoLineArray::new(repr.top, repr.bottom).map_err(D::Error::custom)
    }
}

/// Reads the nonzero matrix entries left to right, top to bottom, repeating
/// the pair `(i, j)` once per unit of the count.
pub fn matrix_to_array(matrix: &NatMatrix) -> TwoLineArray {
    let mut top = Vec::with_capacity(matrix.total());
    let mut bottom = Vec::with_capacity(matrix.total());
    for (i, j, count) in matrix.entries() {
        for _ in 0..count {
            top.push(i);
            bottom.push(j);
        }
    }
    TwoLineArray { top, bottom }
}

/// Tallies the column pairs of the array back into a matrix.
pub fn array_to_matrix(array: &TwoLineArray) -> NatMatrix {
    let mut entries = BTreeMap::new();
    for (i, j) in array.pairs() {
        *entries.entry((i, j)).or_insert(0) += 1;
    }
    NatMatrix { entries }
}

/// Folds [`insert`] over the letters of a word, rightmost letter first.
pub fn insert_word(word: &Word) -> Ssaf {
    let mut filling = Ssaf::empty(0);
    for &letter in word.letters().iter().rev() {
        filling = insert(&filling, letter).0;
    }
    filling
}

/// Maps a tableau to the filling built by inserting its column word from the
/// right. The shape of the result rearranges the shape of the tableau and the
/// entry multiset is preserved.
pub fn psi(tableau: &Ssyt) -> Ssaf {
    insert_word(&tableau.col_word())
}

/// Inverts [`psi`]: repeatedly removes the top of the shortest nonzero column
/// (ties broken to the right), one pass per recovered tableau column; the
/// extracted letters spell the column word left to right.
pub fn psi_inverse(filling: &Ssaf) -> Ssyt {
    let mut current = filling.clone();
    let mut tableau_columns: Vec<Vec<usize>> = Vec::new();
    while !current.is_empty() {
        let mut order: Vec<usize> = (1..=current.basement_width())
            .filter(|&i| current.height(i) > 0)
            .collect();
        order.sort_by_key(|&i| (current.height(i), std::cmp::Reverse(i)));
        let mut letters = Vec::with_capacity(order.len());
        for column in order {
            let (next, letter) =
                delete_from_column(&current, column).expect("chosen columns are nonzero");
            current = next;
            letters.push(letter);
        }
        tableau_columns.push(letters);
    }
    let height = tableau_columns.first().map_or(0, Vec::len);
    let rows: Vec<Vec<usize>> = (0..height)
        .map(|r| {
            tableau_columns
                .iter()
                .filter(|col| col.len() > r)
                .map(|col| col[col.len() - 1 - r])
                .collect()
        })
        .take_while(|row: &Vec<usize>| !row.is_empty())
        .collect();
    Ssyt::new(rows).expect("extracted letters form a tableau")
}

/// The matrix correspondence: processing the biword right to left, each
/// bottom letter is inserted into the first filling and the matching top
/// letter is recorded in the second at one height below the insertion's
/// termination, on the leftmost column that accepts it. The two shapes
/// rearrange the same partition.
pub fn phi(matrix: &NatMatrix) -> (Ssaf, Ssaf) {
    let array = matrix_to_array(matrix);
    let mut insertion = Ssaf::empty(0);
    let mut recording: Vec<Vec<usize>> = Vec::new();
    for (i, j) in array.pairs().rev() {
        let (grown, trace) = insert(&insertion, j);
        insertion = grown;
        place_at_height(&mut recording, i, trace.termination.row - 1);
    }
    let width = insertion.basement_width().max(recording.len());
    recording.resize(width, Vec::new());
    let mut insertion_columns = insertion.into_filling().into_columns();
    insertion_columns.resize(width, Vec::new());
    let f = Ssaf::new_unchecked(
        AugmentedFilling::from_columns(insertion_columns).expect("widening preserves validity"),
    );
    let g = Ssaf::new(
        AugmentedFilling::from_columns(recording).expect("recorded letters fit the basement"),
    )
    .expect("the recording filling is semi-skyline");
    (f, g)
}

/// Inverts [`phi`]: the highest occurrence of the smallest entry of the
/// recording filling names the row whose rightmost column of that height in
/// the insertion filling is deleted; the pairs come back out left to right.
pub fn phi_inverse(insertion: &Ssaf, recording: &Ssaf) -> Result<NatMatrix, Error> {
    if sort_to_partition(&insertion.shape()) != sort_to_partition(&recording.shape()) {
        return Err(Error::ShapeMismatch);
    }
    let mut f = insertion.clone();
    let mut g = recording.columns().to_vec();
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    loop {
        // Smallest entry of the recording filling, highest occurrence. Each
        // minimal entry tops its column, so scanning column tops suffices.
        let chosen = g
            .iter()
            .enumerate()
            .filter_map(|(c, col)| col.last().map(|&value| (value, col.len(), c + 1)))
            .min_by(|a, b| (a.0, std::cmp::Reverse(a.1)).cmp(&(b.0, std::cmp::Reverse(b.1))));
        let Some((value, row, column)) = chosen else {
            break;
        };
        let rightmost = (1..=f.basement_width())
            .filter(|&i| f.height(i) == row)
            .max()
            .expect("the two shapes stay synchronized");
        let (next, letter) = delete_from_column(&f, rightmost)?;
        f = next;
        g[column - 1].pop();
        top.push(value);
        bottom.push(letter);
    }
    let array = TwoLineArray::new(top, bottom).expect("recovered pairs form a biword");
    Ok(array_to_matrix(&array))
}

/// Standardizes a filling: relabel the reading word onto `1..=n` (ties
/// resolved in reading order), put the labels back in place, then shift every
/// column onto the basement column named by its bottom label. Distinct
/// columns always name distinct targets; this is asserted at runtime.
pub fn skyline(filling: &Ssaf) -> Ssaf {
    let word = Word::new(filling.reading_word()).expect("entries are positive");
    let labels = standardize_word(&word);
    let mut relabeled: Vec<Vec<usize>> = (1..=filling.basement_width())
        .map(|i| vec![0; filling.height(i)])
        .collect();
    let cells = filling
        .reading_cells()
        .into_iter()
        .filter(|c| !c.is_basement());
    for (cell, &label) in cells.zip(labels.letters()) {
        relabeled[cell.column - 1][cell.row - 1] = label;
    }
    let moved: Vec<(usize, Vec<usize>)> = relabeled
        .into_iter()
        .filter(|col| !col.is_empty())
        .map(|col| (col[0], col))
        .collect();
    let width = moved.iter().map(|&(target, _)| target).max().unwrap_or(0);
    let mut columns = vec![Vec::new(); width];
    for (target, column) in moved {
        assert!(
            columns[target - 1].is_empty(),
            "two columns relocated onto basement {target}"
        );
        columns[target - 1] = column;
    }
    Ssaf::new(AugmentedFilling::from_columns(columns).expect("labels fit the new basement"))
        .expect("skylining preserves the filling conditions")
}
