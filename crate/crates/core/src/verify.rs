//! Exhaustive desk-scale verification sweeps. Each sweep walks every
//! instance inside the requested bounds and reports either the instance
//! count or the first counterexample.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::bijections::{insert_word, phi, phi_inverse, psi, skyline, NatMatrix};
use crate::polyspace::{enumerate_ssyt, transition_matrix, verify_schur_decomposition};
use crate::shapes::partitions;
use crate::tableaux::{knuth_class, standardize_ssyt, Word};

/// How much ground a sweep covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepReport {
    pub instances: usize,
}

/// The first failing instance of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub case: String,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.case, self.detail)
    }
}

pub type SweepResult = Result<SweepReport, Counterexample>;

/// Checks the Schur decomposition identity for every partition of at most
/// `max_n` cells, in `|lambda|` variables.
pub fn schur_sweep(max_n: usize) -> SweepResult {
    let mut instances = 0;
    for n in 0..=max_n {
        for lambda in partitions(n) {
            if !verify_schur_decomposition(&lambda, n) {
                return Err(Counterexample {
                    case: format!("lambda = {lambda}"),
                    detail: "rearrangement polynomials do not sum to the Schur polynomial"
                        .to_string(),
                });
            }
            instances += 1;
        }
    }
    Ok(SweepReport { instances })
}

/// Round trip and transpose symmetry of the matrix correspondence over every
/// matrix with indices at most `index` and total at most `total`.
pub fn rsk_roundtrip_sweep(total: usize, index: usize) -> SweepResult {
    let mut instances = 0;
    for matrix in matrices_up_to(total, index) {
        if let Err(counterexample) = check_matrix_roundtrip(&matrix) {
            return Err(counterexample);
        }
        instances += 1;
    }
    Ok(SweepReport { instances })
}

/// Shared per-matrix check: inversion recovers the matrix and transposition
/// swaps the pair.
pub fn check_matrix_roundtrip(matrix: &NatMatrix) -> Result<(), Counterexample> {
    let (f, g) = phi(matrix);
    match phi_inverse(&f, &g) {
        Ok(back) if back == *matrix => {}
        Ok(back) => {
            return Err(Counterexample {
                case: format!("A = {:?}", matrix),
                detail: format!("round trip returned {back:?}"),
            })
        }
        Err(e) => {
            return Err(Counterexample {
                case: format!("A = {:?}", matrix),
                detail: format!("inverse failed: {e}"),
            })
        }
    }
    let (tf, tg) = phi(&matrix.transpose());
    if (tf, tg) != (g, f) {
        return Err(Counterexample {
            case: format!("A = {:?}", matrix),
            detail: "transposing the matrix does not swap the filling pair".to_string(),
        });
    }
    Ok(())
}

/// Unit upper-triangularity of the transition matrix for every sum and width
/// within the bounds.
pub fn triangularity_sweep(max_sum: usize, max_width: usize) -> SweepResult {
    let mut instances = 0;
    for sum in 0..=max_sum {
        for width in 1..=max_width {
            let matrix = transition_matrix(sum, width);
            if !matrix.is_unitriangular() {
                return Err(Counterexample {
                    case: format!("sum {sum}, width {width}"),
                    detail: "transition matrix is not unit upper triangular".to_string(),
                });
            }
            instances += 1;
        }
    }
    Ok(SweepReport { instances })
}

/// Skylining commutes with tableau standardization for every tableau with at
/// most `max_cells` cells and entries at most `max_entry`.
pub fn standardization_sweep(max_cells: usize, max_entry: usize) -> SweepResult {
    let mut instances = 0;
    for n in 0..=max_cells {
        for lambda in partitions(n) {
            for tableau in enumerate_ssyt(&lambda, max_entry) {
                if skyline(&psi(&tableau)) != psi(&standardize_ssyt(&tableau)) {
                    return Err(Counterexample {
                        case: format!("T = {:?}", tableau.rows()),
                        detail: "skylining and standardization disagree".to_string(),
                    });
                }
                instances += 1;
            }
        }
    }
    Ok(SweepReport { instances })
}

/// Knuth invariance of the insertion filling: for every valid two-line array
/// within the bounds, rebuilding a valid array from any Knuth-equivalent
/// bottom word leaves the insertion filling unchanged.
pub fn knuth_sweep(max_len: usize, alphabet: usize) -> SweepResult {
    let mut instances = 0;
    let mut fillings = HashMap::new();
    let mut classes = HashMap::new();
    let mut filling_of = |letters: &[usize]| {
        fillings
            .entry(letters.to_vec())
            .or_insert_with(|| insert_word(&Word::new(letters.to_vec()).unwrap()))
            .clone()
    };
    for len in 0..=max_len {
        for top in weakly_increasing_words(len, alphabet) {
            for bottom in all_words(len, alphabet) {
                if !valid_array(&top, &bottom) {
                    continue;
                }
                let class = classes
                    .entry(bottom.clone())
                    .or_insert_with(|| {
                        let (class, truncated) =
                            knuth_class(&Word::new(bottom.clone()).unwrap(), 100_000);
                        assert!(!truncated, "desk-scale class exceeded the cap");
                        class
                    })
                    .clone();
                let reference = filling_of(&bottom);
                for member in &class {
                    if !valid_array(&top, member.letters()) {
                        continue;
                    }
                    if filling_of(member.letters()) != reference {
                        return Err(Counterexample {
                            case: format!("top {top:?}, bottoms {bottom:?} vs {member}"),
                            detail: "Knuth-equivalent bottom lines produce different fillings"
                                .to_string(),
                        });
                    }
                    instances += 1;
                }
            }
        }
    }
    Ok(SweepReport { instances })
}

/// Every matrix with 1-based indices at most `index` and entry total at most
/// `total`, the zero matrix included.
pub fn matrices_up_to(total: usize, index: usize) -> Vec<NatMatrix> {
    let slots: Vec<(usize, usize)> = (1..=index)
        .flat_map(|i| (1..=index).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    fn go(
        slots: &[(usize, usize)],
        counts: &mut BTreeMap<(usize, usize), usize>,
        idx: usize,
        budget: usize,
        out: &mut Vec<NatMatrix>,
    ) {
        if idx == slots.len() {
            out.push(
                NatMatrix::from_entries(
                    counts
                        .iter()
                        .filter(|&(_, &c)| c > 0)
                        .map(|(&(i, j), &c)| (i, j, c)),
                )
                .expect("enumerated entries are positive"),
            );
            return;
        }
        for c in 0..=budget {
            if c > 0 {
                counts.insert(slots[idx], c);
            }
            go(slots, counts, idx + 1, budget - c, out);
            counts.remove(&slots[idx]);
        }
    }
    go(&slots, &mut counts, 0, total, &mut out);
    out
}

fn weakly_increasing_words(len: usize, alphabet: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(len: usize, low: usize, alphabet: usize, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if word.len() == len {
            out.push(word.clone());
            return;
        }
        for letter in low..=alphabet {
            word.push(letter);
            go(len, letter, alphabet, word, out);
            word.pop();
        }
    }
    go(len, 1, alphabet, &mut Vec::new(), &mut out);
    out
}

fn all_words(len: usize, alphabet: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(len: usize, alphabet: usize, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if word.len() == len {
            out.push(word.clone());
            return;
        }
        for letter in 1..=alphabet {
            word.push(letter);
            go(len, alphabet, word, out);
            word.pop();
        }
    }
    go(len, alphabet, &mut Vec::new(), &mut out);
    out
}

fn valid_array(top: &[usize], bottom: &[usize]) -> bool {
    (1..top.len()).all(|r| top[r - 1] < top[r] || bottom[r - 1] <= bottom[r])
}
