//! Exhaustive enumeration of fillings and tableaux, and the exact polynomial
//! layer built on them: one monomial per object, arbitrary-precision integer
//! coefficients, no floating point anywhere.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::fillings::{AugmentedFilling, Ssaf};
use crate::shapes::{compositions, rearrangements, Partition, WeakComposition};
use crate::tableaux::Ssyt;
use crate::Error;

/// An exact sparse polynomial: exponent vector -> integer coefficient. All
/// exponent vectors share the variable count and zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparsePolynomial {
    vars: usize,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(vars: usize) -> Self {
        SparsePolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeats. Panics if an exponent vector has the wrong length.
    pub fn from_terms<I>(vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<usize>, i64)>,
    {
        let mut poly = SparsePolynomial::zero(vars);
        for (expo, coeff) in terms {
            poly.add_term(expo, BigInt::from(coeff));
        }
        poly
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Vec<usize>, coefficient: BigInt) {
        assert_eq!(
            exponents.len(),
            self.vars,
            "exponent vector length must match the variable count"
        );
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &SparsePolynomial) {
        assert_eq!(self.vars, other.vars, "variable counts must match");
        for (expo, coeff) in &other.terms {
            self.add_term(expo.clone(), coeff.clone());
        }
    }

    pub fn coefficient(&self, exponents: &[usize]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Sum of all coefficients.
    pub fn total_coefficient_mass(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The same polynomial viewed in a wider variable ring.
    pub fn embed(&self, vars: usize) -> SparsePolynomial {
        assert!(vars >= self.vars, "cannot drop variables");
        let terms = self
            .terms
            .iter()
            .map(|(expo, coeff)| {
                let mut wider = expo.clone();
                wider.resize(vars, 0);
                (wider, coeff.clone())
            })
            .collect();
        SparsePolynomial { vars, terms }
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (expo, coeff)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let monomial: Vec<String> = expo
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{}", v + 1, e)
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{coeff}")?;
            } else if coeff.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

struct CoefficientRepr<'a>(&'a BigInt);

impl Serialize for CoefficientRepr<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(self.0.clone()) {
            Ok(small) => serializer.serialize_i64(small),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for SparsePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Terms<'a>(&'a SparsePolynomial);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.terms.len()))?;
                // Descending lexicographic exponent order.
                for (expo, coeff) in self.0.terms.iter().rev() {
                    seq.serialize_element(&(expo, CoefficientRepr(coeff)))?;
                }
                seq.end()
            }
        }
        let mut state = serializer.serialize_struct("SparsePolynomial", 2)?;
        state.serialize_field("vars", &self.vars)?;
        state.serialize_field("terms", &Terms(self))?;
        state.end()
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        #[derive(Deserialize)]
        struct Repr {
            vars: usize,
            terms: Vec<(Vec<usize>, Coeff)>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut poly = SparsePolynomial::zero(repr.vars);
        for (expo, coeff) in repr.terms {
            if expo.len() != repr.vars {
                return Err(D::Error::custom("exponent vector has the wrong length"));
            }
            let coeff = match coeff {
                Coeff::Small(c) => BigInt::from(c),
                Coeff::Big(s) => s
                    .parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad coefficient: {e}")))?,
            };
            poly.add_term(expo, coeff);
        }
        Ok(poly)
    }
}

/// All semi-skyline fillings of the given shape, ordered by reading word.
///
/// Columns are filled independently with weakly decreasing stacks bounded by
/// their basement entry, then joined left to right; a partial assignment is
/// abandoned as soon as a column pair produces a non-inverted triple or an
/// attacking equality, both of which no later column can repair.
pub fn enumerate_ssaf(shape: &WeakComposition) -> Vec<Ssaf> {
    let width = shape.width();
    let candidates: Vec<Vec<Vec<usize>>> = (1..=width)
        .map(|i| column_stacks(i, shape.part(i)))
        .collect();
    let mut chosen: Vec<Vec<usize>> = Vec::with_capacity(width);
    let mut out = Vec::new();
    extend_columns(&candidates, &mut chosen, &mut out);
    out.sort_by_key(|f| f.reading_word());
    out
}

/// Weakly decreasing stacks (bottom to top) of the given height over the
/// alphabet `1..=index`.
fn column_stacks(index: usize, height: usize) -> Vec<Vec<usize>> {
    fn go(height: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if stack.len() == height {
            out.push(stack.clone());
            return;
        }
        for entry in 1..=max {
            stack.push(entry);
            go(height, entry, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    go(height, index, &mut Vec::with_capacity(height), &mut out);
    out
}

fn extend_columns(
    candidates: &[Vec<Vec<usize>>],
    chosen: &mut Vec<Vec<usize>>,
    out: &mut Vec<Ssaf>,
) {
    if chosen.len() == candidates.len() {
        let filling = AugmentedFilling::from_columns(chosen.clone())
            .expect("stacks stay within the basement alphabet");
        out.push(Ssaf::new_unchecked(filling));
        return;
    }
    for stack in &candidates[chosen.len()] {
        if pair_compatible(chosen, stack) {
            chosen.push(stack.clone());
            extend_columns(candidates, chosen, out);
            chosen.pop();
        }
    }
}

/// Checks the new rightmost column against every earlier column: all triples
/// between the pair must invert, and no attacking pair may hold equal
/// entries.
fn pair_compatible(columns: &[Vec<usize>], new_column: &[usize]) -> bool {
    let ind = |x: usize, y: usize| (x > y) as i32;
    let ip = columns.len() + 1;
    let hp = new_column.len();
    for (c, column) in columns.iter().enumerate() {
        let i = c + 1;
        let h = column.len();
        let left = |row: usize| if row == 0 { i } else { column[row - 1] };
        let right = |row: usize| if row == 0 { ip } else { new_column[row - 1] };
        // Same-row attacks.
        for j in 1..=h.min(hp) {
            if column[j - 1] == new_column[j - 1] {
                return false;
            }
        }
        // Lower-left cell attacked by the upper-right one.
        for j in 0..=h {
            if j + 1 <= hp && left(j) == new_column[j] {
                return false;
            }
        }
        if h >= hp {
            for j in 1..=hp {
                let (e1, e2, e3) = (left(j), right(j), left(j - 1));
                if ind(e1, e2) + ind(e2, e3) - ind(e1, e3) != 1 {
                    return false;
                }
            }
        } else {
            for j in 0..=h {
                let (e1, e2, e3) = (left(j), right(j), right(j + 1));
                if ind(e3, e1) + ind(e1, e2) - ind(e3, e2) != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// All semi-standard Young tableaux of the given shape with entries at most
/// `max_entry`.
pub fn enumerate_ssyt(shape: &Partition, max_entry: usize) -> Vec<Ssyt> {
    let lengths = shape.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = lengths.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fill_ssyt(&lengths, max_entry, 0, 0, &mut rows, &mut out);
    out
}

fn fill_ssyt(
    lengths: &[usize],
    max_entry: usize,
    mut r: usize,
    mut c: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Ssyt>,
) {
    if r < lengths.len() && c == lengths[r] {
        r += 1;
        c = 0;
    }
    if r == lengths.len() {
        out.push(Ssyt::new(rows.clone()).expect("backtracker respects the inequalities"));
        return;
    }
    // Weakly above the left neighbour, strictly above the cell below.
    let mut low = 1;
    if c > 0 {
        low = low.max(rows[r][c - 1]);
    }
    if r > 0 {
        low = low.max(rows[r - 1][c] + 1);
    }
    for entry in low..=max_entry {
        rows[r][c] = entry;
        fill_ssyt(lengths, max_entry, r, c + 1, rows, out);
    }
    rows[r][c] = 0;
}

/// The polynomial with one content monomial per filling of the shape, in
/// `width(shape)` variables.
pub fn e_hat(shape: &WeakComposition) -> SparsePolynomial {
    let vars = shape.width();
    let mut poly = SparsePolynomial::zero(vars);
    for filling in enumerate_ssaf(shape) {
        poly.add_term(filling.content_exponents(vars), BigInt::one());
    }
    poly
}

/// The Schur polynomial: one weight monomial per semi-standard tableau of the
/// shape with entries at most `vars`.
pub fn schur(shape: &Partition, vars: usize) -> SparsePolynomial {
    let mut poly = SparsePolynomial::zero(vars);
    for tableau in enumerate_ssyt(shape, vars) {
        poly.add_term(tableau.content_exponents(vars), BigInt::one());
    }
    poly
}

/// Number of fillings of shape `gamma` with content `mu`. The two
/// compositions must have the same width.
pub fn nk(gamma: &WeakComposition, mu: &WeakComposition) -> Result<usize, Error> {
    if gamma.width() != mu.width() {
        return Err(Error::WidthMismatch {
            left: gamma.width(),
            right: mu.width(),
        });
    }
    let vars = gamma.width();
    let target = mu.padded(vars).parts().to_vec();
    Ok(enumerate_ssaf(gamma)
        .iter()
        .filter(|f| f.content_exponents(vars) == target)
        .count())
}

/// Filling counts `NK` over every composition of a fixed sum and width, rows
/// and columns sorted along a linear extension of reverse dominance (larger
/// shapes first), so the matrix is upper triangular with unit diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    sum: usize,
    width: usize,
    order: Vec<WeakComposition>,
    counts: Vec<Vec<usize>>,
}

impl TransitionMatrix {
    pub fn sum(&self) -> usize {
        self.sum
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Row and column labels, in matrix order.
    pub fn order(&self) -> &[WeakComposition] {
        &self.order
    }

    pub fn counts(&self) -> &[Vec<usize>] {
        &self.counts
    }

    pub fn get(&self, row: usize, column: usize) -> usize {
        self.counts[row][column]
    }

    pub fn is_unitriangular(&self) -> bool {
        self.counts.iter().enumerate().all(|(r, row)| {
            row.iter()
                .enumerate()
                .all(|(c, &count)| if c < r { count == 0 } else { c != r || count == 1 })
        })
    }
}

/// Builds the transition matrix for all compositions of `sum` into `width`
/// parts.
pub fn transition_matrix(sum: usize, width: usize) -> TransitionMatrix {
    let mut order = compositions(sum, width);
    // Descending tail-sum vectors extend reverse dominance linearly: anything
    // strictly below a shape in the order sorts strictly after it.
    order.sort_by(|a, b| tail_vector(b, width).cmp(&tail_vector(a, width)));
    let index: BTreeMap<Vec<usize>, usize> = order
        .iter()
        .enumerate()
        .map(|(pos, gamma)| (gamma.padded(width).parts().to_vec(), pos))
        .collect();
    let mut counts = vec![vec![0; order.len()]; order.len()];
    for (r, gamma) in order.iter().enumerate() {
        for filling in enumerate_ssaf(gamma) {
            let content = filling.content_exponents(width);
            if let Some(&c) = index.get(&content) {
                counts[r][c] += 1;
            }
        }
    }
    TransitionMatrix {
        sum,
        width,
        order,
        counts,
    }
}

fn tail_vector(gamma: &WeakComposition, width: usize) -> Vec<usize> {
    let mut tails = Vec::with_capacity(width);
    let mut acc = 0;
    for k in (1..=width).rev() {
        acc += gamma.part(k);
        tails.push(acc);
    }
    tails.reverse();
    tails
}

/// Exact polynomial identity check: the per-shape polynomials of all
/// rearrangements of `shape` into `vars` parts sum to the Schur polynomial in
/// `vars` variables.
pub fn verify_schur_decomposition(shape: &Partition, vars: usize) -> bool {
    let lhs = schur(shape, vars);
    let mut rhs = SparsePolynomial::zero(vars);
    if let Ok(gammas) = rearrangements(shape, vars) {
        for gamma in gammas {
            rhs.add_assign(&e_hat(&gamma.padded(vars)));
        }
    }
    lhs == rhs
}
