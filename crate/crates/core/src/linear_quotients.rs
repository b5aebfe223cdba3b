//! Linear quotients and the shift ideals of the minimal resolution.
//!
//! An ordering `m_1, ..., m_r` of the minimal generators has linear
//! quotients when each colon ideal `(m_1,..,m_{i-1}) : (m_i)` is generated
//! by variables; `set(m_i)` collects their indices, i.e.
//! `set(m_i) = { k : x_k * m_i is divisible by some earlier generator }`.
//! The minimal multigraded free resolution then has, in homological degree
//! `l`, one basis element of multidegree `m * x^A` for every generator `m`
//! and every `A` inside `set(m)` with `|A| = l`. The ideal `J_l` spanned by
//! those multidegrees is the `l`-th shift ideal; `J_0` is the ideal itself
//! and `J_1` is the adjacency ideal.
//!
//! Matroidal ideals always have linear quotients in descending
//! lexicographic order, which is the default order used here.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::ideal::{IdealError, MonomialIdeal};
use crate::matroid::{set_string, ExchangeWitness};
use crate::monomial::{subsets_of_size, SquarefreeMonomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinearQuotientsError {
    #[error("the zero ideal admits no generator order")]
    ZeroIdeal,
    #[error("order is not a permutation of the minimal generators")]
    NotAPermutation,
    #[error(
        "linear quotients fail at generator {later_position} ({later}): \
         the colon by {earlier} (position {earlier_position}) is not spanned by set({later})"
    )]
    Violation {
        /// 1-based position of the offending generator in the order.
        later_position: usize,
        later: SquarefreeMonomial,
        /// 1-based position of the earlier generator witnessing the failure.
        earlier_position: usize,
        earlier: SquarefreeMonomial,
    },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Generators in descending lexicographic order, the order in which
/// matroidal ideals have linear quotients.
pub fn order_lex(ideal: &MonomialIdeal) -> Vec<SquarefreeMonomial> {
    // Canonical storage order is already descending lex.
    ideal.generators().to_vec()
}

/// A generator order together with the computed `set(m_i)`, witnessing
/// that the order has linear quotients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotientsOrder {
    ideal: MonomialIdeal,
    order: Vec<SquarefreeMonomial>,
    sets: Vec<SquarefreeMonomial>,
}

impl LinearQuotientsOrder {
    /// Computes the sets for the descending lexicographic order.
    pub fn new_lex(ideal: &MonomialIdeal) -> Result<Self, LinearQuotientsError> {
        Self::with_order(ideal, order_lex(ideal))
    }

    /// Computes `set(m_i) = { k : exists j < i with m_j | x_k * m_i }` for
    /// each generator and verifies linear quotients: every colon generator
    /// `m_j / gcd(m_j, m_i)` must be divisible by some `x_k` with `k` in
    /// `set(m_i)`. Fails with the violating pair otherwise.
    pub fn with_order(
        ideal: &MonomialIdeal,
        order: Vec<SquarefreeMonomial>,
    ) -> Result<Self, LinearQuotientsError> {
        if ideal.is_zero() {
            return Err(LinearQuotientsError::ZeroIdeal);
        }
        let mut sorted = order.clone();
        sorted.sort();
        let mut canonical = ideal.generators().to_vec();
        canonical.sort();
        if sorted != canonical {
            return Err(LinearQuotientsError::NotAPermutation);
        }

        let ground = ideal.ground();
        let mut sets = Vec::with_capacity(order.len());
        for (i, &current) in order.iter().enumerate() {
            let mut set = SquarefreeMonomial::unit(ground);
            for k in ground.variables() {
                let multiplied = current.with(k).expect("k in range");
                if order[..i].iter().any(|&earlier| {
                    earlier.divides(multiplied).expect("same ground")
                }) {
                    set = set.with(k).expect("k in range");
                }
            }
            for (j, &earlier) in order[..i].iter().enumerate() {
                let colon_generator = earlier.minus(current).expect("same ground");
                if colon_generator.gcd(set).expect("same ground").is_unit() {
                    return Err(LinearQuotientsError::Violation {
                        later_position: i + 1,
                        later: current,
                        earlier_position: j + 1,
                        earlier,
                    });
                }
            }
            sets.push(set);
        }
        Ok(LinearQuotientsOrder { ideal: ideal.clone(), order, sets })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn order(&self) -> &[SquarefreeMonomial] {
        &self.order
    }

    /// `set(m_i)` for each generator, parallel to `order()`.
    pub fn sets(&self) -> &[SquarefreeMonomial] {
        &self.sets
    }

    /// The projective dimension: the largest cardinality of a set.
    pub fn projdim(&self) -> u32 {
        self.sets.iter().map(|s| s.degree()).max().unwrap_or(0)
    }

    /// The `l`-th shift slice: the multiset of multidegrees `m union A`
    /// over generators `m` and `A` inside `set(m)` with `|A| = l`, with
    /// multiplicities, plus the ideal they generate.
    ///
    /// Out-of-range `l` yields the zero ideal with an empty slice.
    pub fn shifts(&self, ell: u32) -> ShiftSlice {
        let ground = self.ideal.ground();
        let mut multiplicities: BTreeMap<SquarefreeMonomial, u64> = BTreeMap::new();
        for (&m, &set) in self.order.iter().zip(&self.sets) {
            for extension in subsets_of_size(set.mask(), ell) {
                let shift = m.lcm(ground.monomial_from_mask(extension)).expect("same ground");
                *multiplicities.entry(shift).or_insert(0) += 1;
            }
        }
        let ideal = if multiplicities.is_empty() {
            MonomialIdeal::zero(ground)
        } else {
            MonomialIdeal::minimalize(ground, multiplicities.keys().copied().collect())
                .expect("non-empty")
        };
        let mut multiplicities: Vec<(SquarefreeMonomial, u64)> =
            multiplicities.into_iter().collect();
        // Descending lex, matching generator listings.
        multiplicities.reverse();
        ShiftSlice { ell, ideal, multiplicities }
    }

    /// Assembles the shift slices of all homological degrees.
    pub fn betti_table(&self) -> BettiTable {
        let mut table = BettiTable::new();
        for ell in 0..=self.projdim() {
            for &(a, mult) in &self.shifts(ell).multiplicities {
                table.add(ell, a, mult);
            }
        }
        table
    }
}

/// The `l`-th multigraded shifts: the ideal they generate and the Betti
/// multiplicities by multidegree (descending lexicographic order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSlice {
    pub ell: u32,
    pub ideal: MonomialIdeal,
    pub multiplicities: Vec<(SquarefreeMonomial, u64)>,
}

impl ShiftSlice {
    /// Total Betti number of the slice.
    pub fn total(&self) -> u64 {
        self.multiplicities.iter().map(|&(_, mult)| mult).sum()
    }
}

/// Multigraded Betti numbers: `(homological degree, multidegree) -> beta`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(u32, SquarefreeMonomial), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    pub fn add(&mut self, i: u32, a: SquarefreeMonomial, mult: u64) {
        if mult > 0 {
            *self.entries.entry((i, a)).or_insert(0) += mult;
        }
    }

    pub fn entry(&self, i: u32, a: SquarefreeMonomial) -> u64 {
        self.entries.get(&(i, a)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological degree with a non-zero entry.
    pub fn projdim(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Total Betti number in homological degree `i`.
    pub fn total(&self, i: u32) -> u64 {
        self.entries.iter().filter(|((j, _), _)| *j == i).map(|(_, &m)| m).sum()
    }

    /// Totals for `i = 0..=projdim`.
    pub fn totals(&self) -> Vec<u64> {
        match self.projdim() {
            None => Vec::new(),
            Some(p) => (0..=p).map(|i| self.total(i)).collect(),
        }
    }

    /// Entries sorted by homological degree, then descending lex.
    pub fn iter(&self) -> impl Iterator<Item = (u32, SquarefreeMonomial, u64)> + '_ {
        let mut keys: Vec<_> = self.entries.keys().copied().collect();
        keys.sort_by(|&(i1, a1), &(i2, a2)| i1.cmp(&i2).then(a2.cmp(&a1)));
        keys.into_iter().map(|(i, a)| (i, a, self.entries[&(i, a)]))
    }

    /// Entries on which the two tables disagree (including one-sided ones).
    pub fn diff(&self, other: &BettiTable) -> Vec<BettiDiff> {
        let mut keys: Vec<(u32, SquarefreeMonomial)> = self.entries.keys().copied().collect();
        for key in other.entries.keys() {
            if !self.entries.contains_key(key) {
                keys.push(*key);
            }
        }
        keys.sort_by(|&(i1, a1), &(i2, a2)| i1.cmp(&i2).then(a2.cmp(&a1)));
        keys.into_iter()
            .filter_map(|(i, a)| {
                let (left, right) = (self.entry(i, a), other.entry(i, a));
                (left != right).then_some(BettiDiff { i, a, left, right })
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("serialization cannot fail")
    }

    fn to_doc(&self) -> BettiTableDoc {
        BettiTableDoc {
            entries: self
                .iter()
                .map(|(i, a, mult)| BettiEntryDoc { i, a: a.indices(), mult })
                .collect(),
        }
    }

    /// Plain-text table, one line per homological degree.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("  i  total  multidegrees\n");
        let Some(p) = self.projdim() else {
            out.push_str("  (empty table)\n");
            return out;
        };
        for i in 0..=p {
            let degrees: Vec<String> = self
                .iter()
                .filter(|&(j, _, _)| j == i)
                .map(|(_, a, mult)| format!("{a} ({mult})"))
                .collect();
            out.push_str(&format!("  {i}  {:5}  {}\n", self.total(i), degrees.join(", ")));
        }
        out
    }
}

/// A disagreement between two Betti tables at one `(i, a)` position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiDiff {
    pub i: u32,
    pub a: SquarefreeMonomial,
    pub left: u64,
    pub right: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiTableDoc {
    entries: Vec<BettiEntryDoc>,
}

#[derive(Serialize, Deserialize)]
struct BettiEntryDoc {
    i: u32,
    a: Vec<u32>,
    mult: u64,
}

/// Applies the adjacency ideal `ell` times starting from `ideal`; the zero
/// ideal absorbs further iterations.
pub fn iterated_adjacency(ideal: &MonomialIdeal, ell: u32) -> Result<MonomialIdeal, IdealError> {
    let mut current = ideal.clone();
    for _ in 0..ell {
        current = current.adjacency_ideal()?;
    }
    Ok(current)
}

/// Checks, for a matroidal ideal, that every shift ideal is matroidal and
/// coincides with the iterated adjacency ideal; failures are report
/// content, not errors, since they would falsify the implementation.
pub fn verify_theorem(ideal: &MonomialIdeal) -> TheoremReport {
    let matroidal_input = match ideal.is_matroidal() {
        Ok(_) => None,
        Err(IdealError::NotMatroidal(w)) => Some(Err(w)),
        Err(other) => Some(Ok(other.to_string())),
    };
    if let Some(failure) = matroidal_input {
        let (witness, note) = match failure {
            Err(w) => (Some(w), w.to_string()),
            Ok(msg) => (None, msg),
        };
        return TheoremReport {
            n: ideal.ground().size(),
            ideal: ideal.clone(),
            applicable: false,
            input_witness: witness,
            note: Some(note),
            projdim: None,
            levels: Vec::new(),
        };
    }

    let lq = match LinearQuotientsOrder::new_lex(ideal) {
        Ok(lq) => lq,
        Err(err) => {
            // Matroidal ideals have linear quotients in lex order; reaching
            // this branch means the implementation is wrong.
            return TheoremReport {
                n: ideal.ground().size(),
                ideal: ideal.clone(),
                applicable: true,
                input_witness: None,
                note: Some(format!("linear quotients unexpectedly failed: {err}")),
                projdim: None,
                levels: Vec::new(),
            };
        }
    };

    let projdim = lq.projdim();
    let mut levels = Vec::new();
    for ell in 0..=projdim {
        let slice = lq.shifts(ell);
        let matroidal_witness = match slice.ideal.is_matroidal() {
            Ok(_) => None,
            Err(IdealError::NotMatroidal(w)) => Some(w),
            Err(other) => {
                unreachable!("shift ideal of a matroidal ideal is equigenerated: {other}")
            }
        };
        let iterated = iterated_adjacency(ideal, ell).expect("equigenerated throughout");
        let next_equals_adjacency = (ell < projdim).then(|| {
            let next = lq.shifts(ell + 1).ideal;
            slice.ideal.adjacency_ideal().expect("equigenerated") == next
        });
        levels.push(LevelReport {
            ell,
            matroidal: matroidal_witness.is_none(),
            matroidal_witness,
            equals_iterated_adjacency: iterated == slice.ideal,
            next_equals_adjacency,
            shift_ideal: slice.ideal,
            betti: slice.multiplicities,
        });
    }
    TheoremReport {
        n: ideal.ground().size(),
        ideal: ideal.clone(),
        applicable: true,
        input_witness: None,
        note: None,
        projdim: Some(projdim),
        levels,
    }
}

/// Verification report for one ideal.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub n: u32,
    pub ideal: MonomialIdeal,
    /// Whether the input is matroidal; checks below apply only then.
    pub applicable: bool,
    pub input_witness: Option<ExchangeWitness>,
    pub note: Option<String>,
    pub projdim: Option<u32>,
    pub levels: Vec<LevelReport>,
}

/// Per-homological-degree checks.
#[derive(Debug, Clone)]
pub struct LevelReport {
    pub ell: u32,
    pub shift_ideal: MonomialIdeal,
    pub betti: Vec<(SquarefreeMonomial, u64)>,
    pub matroidal: bool,
    pub matroidal_witness: Option<ExchangeWitness>,
    pub equals_iterated_adjacency: bool,
    /// `J_{ell+1}` equals the adjacency ideal of `J_ell`; absent at the top
    /// homological degree.
    pub next_equals_adjacency: Option<bool>,
}

impl TheoremReport {
    pub fn all_passed(&self) -> bool {
        self.applicable
            && self.note.is_none()
            && self.levels.iter().all(|level| {
                level.matroidal
                    && level.equals_iterated_adjacency
                    && level.next_equals_adjacency.unwrap_or(true)
            })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialization cannot fail")
    }

    /// Plain-text rendering, one line per homological degree.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("ideal: {} (n = {})\n", self.ideal, self.n));
        if !self.applicable {
            out.push_str("not matroidal; theorem checks inapplicable\n");
            if let Some(w) = &self.input_witness {
                out.push_str(&format!("  {w}\n"));
            }
            return out;
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("FAIL: {note}\n"));
            return out;
        }
        out.push_str(&format!("projdim: {}\n", self.projdim.unwrap_or(0)));
        out.push_str("  ell  gens  matroidal  J=A^ell(I)  A(J)=J_next\n");
        for level in &self.levels {
            out.push_str(&format!(
                "  {:3}  {:4}  {:9}  {:10}  {}\n",
                level.ell,
                level.shift_ideal.generators().len(),
                if level.matroidal { "yes" } else { "NO" },
                if level.equals_iterated_adjacency { "yes" } else { "NO" },
                match level.next_equals_adjacency {
                    Some(true) => "yes",
                    Some(false) => "NO",
                    None => "-",
                },
            ));
        }
        out.push_str(if self.all_passed() { "result: PASS\n" } else { "result: FAIL\n" });
        out
    }
}

impl Serialize for TheoremReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TheoremReport", 7)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("ideal", &gens_doc(&self.ideal))?;
        s.serialize_field("matroidal_input", &self.applicable)?;
        s.serialize_field("witness", &self.input_witness.map(witness_doc))?;
        s.serialize_field("projdim", &self.projdim)?;
        s.serialize_field("levels", &self.levels)?;
        s.serialize_field("all_passed", &self.all_passed())?;
        s.end()
    }
}

impl Serialize for LevelReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct BettiEntry {
            a: Vec<u32>,
            mult: u64,
        }
        let mut s = serializer.serialize_struct("LevelReport", 6)?;
        s.serialize_field("ell", &self.ell)?;
        s.serialize_field("J", &gens_doc(&self.shift_ideal))?;
        let betti: Vec<BettiEntry> =
            self.betti.iter().map(|&(a, mult)| BettiEntry { a: a.indices(), mult }).collect();
        s.serialize_field("betti", &betti)?;
        s.serialize_field("matroidal", &self.matroidal)?;
        s.serialize_field("equals_iterated_adjacency", &self.equals_iterated_adjacency)?;
        s.serialize_field("next_equals_adjacency", &self.next_equals_adjacency)?;
        s.end()
    }
}

fn gens_doc(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    ideal.generators().iter().map(|g| g.indices()).collect()
}

fn witness_doc(w: ExchangeWitness) -> String {
    format!(
        "B1={}, B2={}, b1={}",
        set_string(w.basis_from),
        set_string(w.basis_to),
        w.pivot_out
    )
}
