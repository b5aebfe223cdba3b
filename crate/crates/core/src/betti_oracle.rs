//! Independent Betti-number oracle via reduced simplicial homology.
//!
//! For a squarefree ideal `I` and a squarefree multidegree `a`, the
//! multigraded Betti number is `beta_{i,a} = rank H~_{i-1}(K^a(I))` where
//! `K^a(I) = { t <= a : a \ t in I }` is the upper Koszul complex. Ranks
//! are taken over a characteristic-zero field using fraction-free Gaussian
//! elimination on exact integers, so the oracle carries no tolerances.
//!
//! This path never touches the linear-quotients machinery; it exists to
//! cross-validate it entry by entry.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ideal::MonomialIdeal;
use crate::linear_quotients::BettiTable;
use crate::monomial::SquarefreeMonomial;

/// Cap on the ground set for the full `2^n` multidegree sweep.
pub const ORACLE_MAX_VARS: u32 = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("ground set has {n} variables; the oracle sweep is capped at {ORACLE_MAX_VARS}")]
    GroundSetTooLarge { n: u32 },
    #[error("face {face} is not contained in the vertex set {vertices}")]
    FaceOutsideVertexSet { face: SquarefreeMonomial, vertices: SquarefreeMonomial },
    #[error("faces are not downward closed: {face} present but {missing} absent")]
    NotDownwardClosed { face: SquarefreeMonomial, missing: SquarefreeMonomial },
}

/// An abstract simplicial complex on a vertex subset of `{1..n}`.
///
/// The family may be void (no faces at all) or consist of the empty face
/// alone; both occur as upper Koszul complexes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: SquarefreeMonomial,
    /// `faces_by_card[c]` holds the cardinality-`c` faces, sorted by mask.
    faces_by_card: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// Validates that every face lies in the vertex set and that the family
    /// is downward closed.
    pub fn new(
        vertices: SquarefreeMonomial,
        faces: Vec<SquarefreeMonomial>,
    ) -> Result<Self, OracleError> {
        let max_card = faces.iter().map(|f| f.degree()).max().unwrap_or(0) as usize;
        let mut faces_by_card: Vec<Vec<u32>> = vec![Vec::new(); max_card + 1];
        for f in &faces {
            if !f.divides(vertices).unwrap_or(false) {
                return Err(OracleError::FaceOutsideVertexSet { face: *f, vertices });
            }
            let bucket = &mut faces_by_card[f.degree() as usize];
            if !bucket.contains(&f.mask()) {
                bucket.push(f.mask());
            }
        }
        for bucket in &mut faces_by_card {
            bucket.sort_unstable();
        }
        let complex = SimplicialComplex { vertices, faces_by_card };
        if let Some((face, missing)) = complex.closure_violation() {
            return Err(OracleError::NotDownwardClosed { face, missing });
        }
        Ok(complex)
    }

    fn closure_violation(&self) -> Option<(SquarefreeMonomial, SquarefreeMonomial)> {
        let ground = self.vertices.ground();
        for card in 1..self.faces_by_card.len() {
            for &mask in &self.faces_by_card[card] {
                for bit in 0..32 {
                    if mask & (1 << bit) == 0 {
                        continue;
                    }
                    let sub = mask & !(1 << bit);
                    if !self.faces_by_card[card - 1].contains(&sub) {
                        return Some((
                            ground.monomial_from_mask(mask),
                            ground.monomial_from_mask(sub),
                        ));
                    }
                }
            }
        }
        None
    }

    /// The declared vertex set (vertices need not appear in any face).
    pub fn vertex_set(&self) -> SquarefreeMonomial {
        self.vertices
    }

    /// No faces at all, not even the empty one.
    pub fn is_void(&self) -> bool {
        self.faces_by_card.iter().all(Vec::is_empty)
    }

    /// Number of faces of the given cardinality.
    pub fn face_count(&self, card: usize) -> usize {
        self.faces_by_card.get(card).map_or(0, Vec::len)
    }

    pub fn faces(&self) -> impl Iterator<Item = SquarefreeMonomial> + '_ {
        let ground = self.vertices.ground();
        self.faces_by_card
            .iter()
            .flatten()
            .map(move |&mask| ground.monomial_from_mask(mask))
    }

    /// Boundary matrix from cardinality-`card` faces to cardinality-`card-1`
    /// faces in the augmented chain complex; entries are `0, +1, -1`.
    fn boundary_matrix(&self, card: usize) -> Vec<Vec<BigInt>> {
        let cols = &self.faces_by_card[card];
        let rows = &self.faces_by_card[card - 1];
        let mut matrix = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
        for (j, &face) in cols.iter().enumerate() {
            let mut sign = BigInt::one();
            for bit in 0..32 {
                if face & (1 << bit) == 0 {
                    continue;
                }
                let sub = face & !(1 << bit);
                let i = rows.binary_search(&sub).expect("downward closed");
                matrix[i][j] = sign.clone();
                sign = -sign;
            }
        }
        matrix
    }

    /// Ranks of the reduced homology over a characteristic-zero field.
    pub fn reduced_homology(&self) -> HomologyRanks {
        let mut ranks = BTreeMap::new();
        if self.is_void() {
            return HomologyRanks { ranks };
        }
        let top = self.faces_by_card.len() - 1;
        // boundary_ranks[c] = rank of the map from cardinality c to c-1.
        let mut boundary_ranks = vec![0u64; top + 2];
        for card in 1..=top {
            boundary_ranks[card] = integer_rank(self.boundary_matrix(card)) as u64;
        }
        for (card, window) in boundary_ranks.windows(2).enumerate() {
            let chains = self.face_count(card) as u64;
            let kernel = chains - window[0];
            let rank = kernel - window[1];
            if rank > 0 {
                ranks.insert(card as i64 - 1, rank);
            }
        }
        HomologyRanks { ranks }
    }

    /// Reduced Euler characteristic `sum_c (-1)^(c-1) f_c` over all face
    /// cardinalities `c >= 0`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_card
            .iter()
            .enumerate()
            .map(|(card, faces)| {
                let sign = if card % 2 == 0 { -1 } else { 1 };
                sign * faces.len() as i64
            })
            .sum()
    }
}

/// Reduced homology ranks by dimension (`-1` is the augmentation degree);
/// zero ranks are omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyRanks {
    ranks: BTreeMap<i64, u64>,
}

impl HomologyRanks {
    pub fn rank(&self, dimension: i64) -> u64 {
        self.ranks.get(&dimension).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.ranks.iter().map(|(&q, &r)| (q, r))
    }

    pub fn is_trivial(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Alternating sum `sum_q (-1)^q rank_q`, matching the reduced Euler
    /// characteristic of the complex.
    pub fn alternating_sum(&self) -> i64 {
        self.ranks
            .iter()
            .map(|(&q, &r)| if q.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// The upper Koszul complex `K^a(I) = { t <= a : a \ t in I }`.
///
/// Membership of `a \ t` in `I` is monotone under shrinking `t`, so the
/// family is downward closed by construction; it is void exactly when
/// `a` itself lies outside `I`.
pub fn upper_koszul(ideal: &MonomialIdeal, a: SquarefreeMonomial) -> SimplicialComplex {
    let ground = a.ground();
    let mut faces = Vec::new();
    // Enumerate all submasks of a, including the empty one.
    let full = a.mask();
    let mut sub = full;
    loop {
        let tau = ground.monomial_from_mask(sub);
        if ideal.contains(a.minus(tau).expect("same ground")) {
            faces.push(tau);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & full;
    }
    SimplicialComplex::new(a, faces).expect("upper Koszul complexes are downward closed")
}

/// Exhaustive multigraded Betti table via Hochster-style homology of the
/// upper Koszul complexes, over all `2^n` squarefree multidegrees.
pub fn betti_table_oracle(ideal: &MonomialIdeal) -> Result<BettiTable, OracleError> {
    let ground = ideal.ground();
    if ground.size() > ORACLE_MAX_VARS {
        return Err(OracleError::GroundSetTooLarge { n: ground.size() });
    }
    let mut table = BettiTable::new();
    for a in ground.all_monomials() {
        if !ideal.contains(a) {
            continue;
        }
        let complex = upper_koszul(ideal, a);
        for (dimension, rank) in complex.reduced_homology().iter() {
            let i = u32::try_from(dimension + 1).expect("dimension >= -1");
            table.add(i, a, rank);
        }
    }
    Ok(table)
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination with
/// full pivoting; all divisions are exact, so the result is the rank over
/// the rationals.
pub fn integer_rank(mut matrix: Vec<Vec<BigInt>>) -> usize {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut previous_pivot = BigInt::one();
    let mut rank = 0;
    for step in 0..rows.min(cols) {
        // Smallest-magnitude nonzero entry of the trailing submatrix keeps
        // intermediate values small.
        let mut pivot: Option<(usize, usize)> = None;
        for i in step..rows {
            for j in step..cols {
                if matrix[i][j].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => matrix[i][j].abs() < matrix[pi][pj].abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        matrix.swap(step, pi);
        if pj != step {
            for row in matrix.iter_mut() {
                row.swap(step, pj);
            }
        }
        let pivot_value = matrix[step][step].clone();
        for i in step + 1..rows {
            for j in step + 1..cols {
                let numerator = &matrix[i][j] * &pivot_value - &matrix[i][step] * &matrix[step][j];
                matrix[i][j] = numerator / &previous_pivot;
            }
            matrix[i][step] = BigInt::zero();
        }
        previous_pivot = pivot_value;
        rank += 1;
    }
    rank
}
