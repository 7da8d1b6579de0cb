//! Semi-standard and reverse semi-standard Young tableaux, column words,
//! reverse Schensted insertion, standardization, and Knuth moves.
//!
//! Tableaux are stored French style: bottom row first, rows read left to
//! right, columns bottom to top.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::shapes::Partition;
use crate::Error;

/// A finite sequence of positive letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self, Error> {
        if letters.iter().any(|&l| l == 0) {
            return Err(Error::NonPositiveEntry);
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl From<&[usize]> for Word {
    fn from(letters: &[usize]) -> Self {
        Word::new(letters.to_vec()).expect("word letters must be positive")
    }
}

impl<const N: usize> From<[usize; N]> for Word {
    fn from(letters: [usize; N]) -> Self {
        Word::new(letters.to_vec()).expect("word letters must be positive")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.letters.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Word::new(Vec::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}

/// A semi-standard Young tableau: rows weakly increase left to right and
/// columns strictly increase bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Ssyt {
    rows: Vec<Vec<usize>>,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        validate_tableau_shape(&rows).map_err(|reason| Error::MalformedSsyt { reason })?;
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::MalformedSsyt {
                    reason: format!("row {} is not weakly increasing", r + 1),
                });
            }
            if r > 0 {
                let below = &rows[r - 1];
                if row.iter().zip(below).any(|(above, below)| above <= below) {
                    return Err(Error::MalformedSsyt {
                        reason: format!("column entries do not increase into row {}", r + 1),
                    });
                }
            }
        }
        Ok(Ssyt { rows })
    }

    pub fn empty() -> Self {
        Ssyt::default()
    }

    /// Rows bottom first.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("tableau row lengths form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry multiset as an exponent vector over `vars` variables.
    pub fn content_exponents(&self, vars: usize) -> Vec<usize> {
        let mut expo = vec![0; vars];
        for row in &self.rows {
            for &entry in row {
                assert!(entry <= vars, "entry {entry} exceeds the variable count");
                expo[entry - 1] += 1;
            }
        }
        expo
    }

    /// Columns read top to bottom, taken left to right.
    pub fn col_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.size());
        let width = self.rows.first().map_or(0, Vec::len);
        for c in 0..width {
            let height = self.rows.iter().take_while(|row| row.len() > c).count();
            for r in (0..height).rev() {
                letters.push(self.rows[r][c]);
            }
        }
        Word { letters }
    }
}

fn validate_tableau_shape(rows: &[Vec<usize>]) -> Result<(), String> {
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return Err(format!("row {} is empty", r + 1));
        }
        if row.iter().any(|&e| e == 0) {
            return Err(format!("row {} holds a non-positive entry", r + 1));
        }
        if r > 0 && row.len() > rows[r - 1].len() {
            return Err(format!("row {} is longer than the row below it", r + 1));
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct SsytRepr {
    kind: String,
    rows: Vec<Vec<usize>>,
}

impl Serialize for Ssyt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SsytRepr {
            kind: "ssyt".to_string(),
            rows: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Ssyt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SsytRepr::deserialize(deserializer)?;
        if repr.kind != "ssyt" {
            return Err(D::Error::custom(format!(
                "expected kind \"ssyt\", found {:?}",
                repr.kind
            )));
        }
        Ssyt::new(repr.rows).map_err(D::Error::custom)
    }
}

/// A reverse semi-standard Young tableau: rows strictly decrease left to
/// right and columns weakly decrease bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ReverseSsyt {
    rows: Vec<Vec<usize>>,
}

impl ReverseSsyt {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        validate_tableau_shape(&rows).map_err(|reason| Error::MalformedReverseSsyt { reason })?;
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::MalformedReverseSsyt {
                    reason: format!("row {} is not strictly decreasing", r + 1),
                });
            }
            if r > 0 {
                let below = &rows[r - 1];
                if row.iter().zip(below).any(|(above, below)| above > below) {
                    return Err(Error::MalformedReverseSsyt {
                        reason: format!("column entries increase into row {}", r + 1),
                    });
                }
            }
        }
        Ok(ReverseSsyt { rows })
    }

    pub fn empty() -> Self {
        ReverseSsyt::default()
    }

    /// Rows bottom first.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("tableau row lengths form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row entries as sorted multisets, bottom row first.
    pub fn row_multisets(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|row| {
                let mut sorted = row.clone();
                sorted.sort_unstable();
                sorted
            })
            .collect()
    }
}

/// Greedy split of a word into its maximal strictly decreasing runs.
pub fn column_decompose(word: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for &letter in word.letters() {
        if let Some(&last) = current.last() {
            if letter >= last {
                out.push(Word { letters: current });
                current = Vec::new();
            }
        }
        current.push(letter);
    }
    if !current.is_empty() {
        out.push(Word { letters: current });
    }
    out
}

/// Column insertion of `k` into a reverse semi-standard Young tableau:
/// entering each column bottom to top, `k` displaces the lowest entry
/// strictly smaller than itself (the bottom of the strictly-smaller top
/// segment) and the displaced entry carries on into the next column.
/// Returns the grown tableau and the 1-based row of the new cell.
pub fn reverse_schensted_insert(tableau: &ReverseSsyt, k: usize) -> (ReverseSsyt, usize) {
    assert!(k >= 1, "letters are positive");
    let width = tableau.rows.first().map_or(0, Vec::len);
    let mut columns: Vec<Vec<usize>> = (0..width)
        .map(|c| {
            tableau
                .rows
                .iter()
                .filter_map(|row| row.get(c).copied())
                .collect()
        })
        .collect();
    let mut value = k;
    let mut terminal_row = 0;
    for c in 0.. {
        if c == columns.len() {
            columns.push(vec![value]);
            terminal_row = 1;
            break;
        }
        let column = &mut columns[c];
        match column.iter().position(|&e| e < value) {
            None => {
                column.push(value);
                terminal_row = column.len();
                break;
            }
            Some(idx) => {
                std::mem::swap(&mut value, &mut column[idx]);
            }
        }
    }
    let height = columns.first().map_or(0, Vec::len);
    let rows: Vec<Vec<usize>> = (0..height)
        .map(|r| {
            columns
                .iter()
                .filter_map(|col| col.get(r).copied())
                .collect()
        })
        .collect();
    let result = ReverseSsyt::new(rows).expect("column insertion preserves the tableau");
    (result, terminal_row)
}

/// Relabels a word bijectively onto `1..=n`: smaller letters get smaller
/// labels, equal letters are labelled ascending left to right.
pub fn standardize_word(word: &Word) -> Word {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| (word.letters[i], i));
    let mut letters = vec![0; word.len()];
    for (label, &position) in order.iter().enumerate() {
        letters[position] = label + 1;
    }
    Word { letters }
}

/// Relabels the entries of a tableau onto `1..=n`, equal entries ascending
/// in their order of appearance in the column word. The result is a standard
/// Young tableau of the same shape.
pub fn standardize_ssyt(tableau: &Ssyt) -> Ssyt {
    // Cell positions in column-word order.
    let width = tableau.rows.first().map_or(0, Vec::len);
    let mut sequence = Vec::with_capacity(tableau.size());
    for c in 0..width {
        let height = tableau.rows.iter().take_while(|row| row.len() > c).count();
        for r in (0..height).rev() {
            sequence.push((tableau.rows[r][c], sequence.len(), (r, c)));
        }
    }
    sequence.sort_by_key(|&(entry, seq, _)| (entry, seq));
    let mut rows: Vec<Vec<usize>> = tableau.rows.clone();
    for (label, &(_, _, (r, c))) in sequence.iter().enumerate() {
        rows[r][c] = label + 1;
    }
    Ssyt::new(rows).expect("standardization preserves the tableau")
}

/// The closure of a word under elementary Knuth moves
/// (`xzy <-> zxy` for `x <= y < z`, `yxz <-> yzx` for `x < y <= z`),
/// explored breadth first. Returns the class and whether the search was
/// truncated at `cap` words.
pub fn knuth_class(word: &Word, cap: usize) -> (BTreeSet<Word>, bool) {
    let mut class = BTreeSet::new();
    class.insert(word.clone());
    let mut frontier = vec![word.clone()];
    while let Some(current) = frontier.pop() {
        for neighbor in knuth_neighbors(&current) {
            if class.len() >= cap {
                return (class, true);
            }
            if class.insert(neighbor.clone()) {
                frontier.push(neighbor);
            }
        }
    }
    (class, false)
}

fn knuth_neighbors(word: &Word) -> Vec<Word> {
    let letters = &word.letters;
    let mut out = Vec::new();
    for i in 0..letters.len().saturating_sub(2) {
        let (a, b, c) = (letters[i], letters[i + 1], letters[i + 2]);
        // xzy <-> zxy with x <= y < z: swap the first two letters.
        if (a <= c && c < b) || (b <= c && c < a) {
            let mut next = letters.clone();
            next.swap(i, i + 1);
            out.push(Word { letters: next });
        }
        // yxz <-> yzx with x < y <= z: swap the last two letters.
        if (b < a && a <= c) || (c < a && a <= b) {
            let mut next = letters.clone();
            next.swap(i + 1, i + 2);
            out.push(Word { letters: next });
        }
    }
    out
}
