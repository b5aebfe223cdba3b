//! Squarefree monomials over a fixed ground set.
//!
//! A squarefree monomial in the variables `x1..xn` is identified with its
//! support, a subset of `{1..n}`, and is used interchangeably as a
//! multidegree. Subsets are stored as bitmasks of one machine word, which
//! caps the ground set at [`MAX_VARS`] variables and keeps exhaustive
//! sweeps cheap.
//!
//! Variables are indexed `1..=n` in the public API and in all I/O; bit
//! `k-1` of the mask represents `x_k`.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Hard cap on the number of variables, so a subset fits one `u32`.
pub const MAX_VARS: u32 = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("ground set size {n} out of range 1..={MAX_VARS}")]
    InvalidGroundSet { n: u32 },
    #[error("ground sets differ: {left} vs {right} variables")]
    GroundSetMismatch { left: u32, right: u32 },
    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("duplicate variable index {index}")]
    DuplicateIndex { index: u32 },
    #[error("cannot parse monomial from {input:?}")]
    Parse { input: String },
}

/// The index set `{1..n}` of the ambient polynomial ring `k[x1..xn]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: u32,
}

impl GroundSet {
    pub fn new(n: u32) -> Result<Self, MonomialError> {
        if n == 0 || n > MAX_VARS {
            return Err(MonomialError::InvalidGroundSet { n });
        }
        Ok(GroundSet { n })
    }

    /// Number of variables.
    pub fn size(self) -> u32 {
        self.n
    }

    /// Bitmask with one bit per variable.
    pub(crate) fn full_mask(self) -> u32 {
        u32::MAX >> (32 - self.n)
    }

    /// The variable indices `1..=n`.
    pub fn variables(self) -> impl Iterator<Item = u32> {
        1..=self.n
    }

    /// The monomial `x_k`.
    pub fn variable(self, k: u32) -> Result<SquarefreeMonomial, MonomialError> {
        SquarefreeMonomial::unit(self).with(k)
    }

    /// All `2^n` squarefree monomials over this ground set.
    pub fn all_monomials(self) -> impl Iterator<Item = SquarefreeMonomial> {
        let n = self.n;
        (0..=self.full_mask()).map(move |mask| SquarefreeMonomial { n, mask })
    }

    pub(crate) fn monomial_from_mask(self, mask: u32) -> SquarefreeMonomial {
        debug_assert_eq!(mask & !self.full_mask(), 0);
        SquarefreeMonomial { n: self.n, mask }
    }
}

/// A squarefree monomial, identified with its support in `{1..n}` and with
/// its multidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomial {
    n: u32,
    mask: u32,
}

impl SquarefreeMonomial {
    /// The unit monomial `1` (empty support).
    pub fn unit(ground: GroundSet) -> Self {
        SquarefreeMonomial { n: ground.n, mask: 0 }
    }

    /// Builds a monomial from 1-based variable indices.
    pub fn from_indices(ground: GroundSet, indices: &[u32]) -> Result<Self, MonomialError> {
        let mut m = Self::unit(ground);
        for &k in indices {
            if m.contains(k) {
                return Err(MonomialError::DuplicateIndex { index: k });
            }
            m = m.with(k)?;
        }
        Ok(m)
    }

    pub fn ground(self) -> GroundSet {
        GroundSet { n: self.n }
    }

    pub(crate) fn mask(self) -> u32 {
        self.mask
    }

    /// `deg(m)`, the size of the support.
    pub fn degree(self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_unit(self) -> bool {
        self.mask == 0
    }

    /// Whether `x_k` divides the monomial.
    pub fn contains(self, k: u32) -> bool {
        k >= 1 && k <= self.n && self.mask & (1 << (k - 1)) != 0
    }

    /// The sorted 1-based support.
    pub fn indices(self) -> Vec<u32> {
        (1..=self.n).filter(|&k| self.contains(k)).collect()
    }

    /// The monomial `m * x_k` (set insertion).
    pub fn with(self, k: u32) -> Result<Self, MonomialError> {
        if k == 0 || k > self.n {
            return Err(MonomialError::IndexOutOfRange { index: k, n: self.n });
        }
        Ok(SquarefreeMonomial { n: self.n, mask: self.mask | 1 << (k - 1) })
    }

    /// The monomial `m / x_k` when `x_k | m` (set removal; no-op otherwise).
    pub fn without(self, k: u32) -> Self {
        if k == 0 || k > self.n {
            return self;
        }
        SquarefreeMonomial { n: self.n, mask: self.mask & !(1 << (k - 1)) }
    }

    fn same_ground(self, other: Self) -> Result<(), MonomialError> {
        if self.n != other.n {
            return Err(MonomialError::GroundSetMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Least common multiple: the union of supports.
    pub fn lcm(self, other: Self) -> Result<Self, MonomialError> {
        self.same_ground(other)?;
        Ok(SquarefreeMonomial { n: self.n, mask: self.mask | other.mask })
    }

    /// Greatest common divisor: the intersection of supports.
    pub fn gcd(self, other: Self) -> Result<Self, MonomialError> {
        self.same_ground(other)?;
        Ok(SquarefreeMonomial { n: self.n, mask: self.mask & other.mask })
    }

    /// Set difference of supports, the support of `self / gcd(self, other)`.
    pub fn minus(self, other: Self) -> Result<Self, MonomialError> {
        self.same_ground(other)?;
        Ok(SquarefreeMonomial { n: self.n, mask: self.mask & !other.mask })
    }

    /// Whether `self` divides `other`, i.e. the support is contained.
    pub fn divides(self, other: Self) -> Result<bool, MonomialError> {
        self.same_ground(other)?;
        Ok(self.mask & !other.mask == 0)
    }

    /// Lexicographic comparison of exponent vectors with `x1 > x2 > ... > xn`.
    ///
    /// At the first index where the exponents differ, the monomial containing
    /// that variable is the larger. The unit monomial is the least element.
    pub fn lex_compare(self, other: Self) -> Result<Ordering, MonomialError> {
        self.same_ground(other)?;
        Ok(lex_cmp_masks(self.mask, other.mask))
    }

    /// The distance `d(m, m') = 1/2 * sum_k |nu_k(m) - nu_k(m')|`.
    ///
    /// Exponent vectors over different ground sets are aligned by padding
    /// with zeros, so the value is defined for every pair. For squarefree
    /// inputs it is half the size of the symmetric difference of supports.
    pub fn distance(self, other: Self) -> Distance {
        Distance { doubled: (self.mask ^ other.mask).count_ones() }
    }
}

fn lex_cmp_masks(a: u32, b: u32) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    // Lowest differing bit is the lex-deciding variable.
    if a & (diff & diff.wrapping_neg()) != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// `Ord` is the lexicographic order above; monomials over a larger ground
/// set tie-break as greater so the order stays total across ground sets.
impl Ord for SquarefreeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp_masks(self.mask, other.mask).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for SquarefreeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for k in self.indices() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "x{k}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses `x1*x2*x3`, the bracket form `[1,2,3]`, or `1` for the unit.
pub fn parse_monomial(ground: GroundSet, input: &str) -> Result<SquarefreeMonomial, MonomialError> {
    let s = input.trim();
    let parse_err = || MonomialError::Parse { input: input.to_string() };
    if s == "1" {
        return Ok(SquarefreeMonomial::unit(ground));
    }
    let indices: Vec<u32> = if let Some(body) = s.strip_prefix('[') {
        let body = body.strip_suffix(']').ok_or_else(parse_err)?;
        let body = body.trim();
        if body.is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|part| part.trim().parse::<u32>().map_err(|_| parse_err()))
                .collect::<Result<_, _>>()?
        }
    } else {
        s.split('*')
            .map(|part| {
                part.trim()
                    .strip_prefix('x')
                    .and_then(|idx| idx.parse::<u32>().ok())
                    .ok_or_else(parse_err)
            })
            .collect::<Result<_, _>>()?
    };
    SquarefreeMonomial::from_indices(ground, &indices)
}

/// An exact distance value; always a half-integer, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Distance {
    doubled: u32,
}

impl Distance {
    pub const ZERO: Distance = Distance { doubled: 0 };
    pub const ONE: Distance = Distance { doubled: 2 };

    pub fn doubled(self) -> u32 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled.is_multiple_of(2)
    }

    pub fn integer_value(self) -> Option<u32> {
        self.is_integer().then_some(self.doubled / 2)
    }
}

impl std::ops::Add for Distance {
    type Output = Distance;
    fn add(self, rhs: Distance) -> Distance {
        Distance { doubled: self.doubled + rhs.doubled }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.integer_value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/2", self.doubled),
        }
    }
}

/// Iterates over all sub-masks of `mask` with exactly `size` bits set, in
/// increasing numeric order of the produced masks.
pub(crate) fn subsets_of_size(mask: u32, size: u32) -> SubsetsOfSize {
    let positions: Vec<u32> = (0..32).filter(|&b| mask & (1 << b) != 0).collect();
    let k = size as usize;
    let exhausted = k > positions.len();
    SubsetsOfSize { positions, selector: (0..k as u32).collect(), exhausted }
}

pub(crate) struct SubsetsOfSize {
    positions: Vec<u32>,
    selector: Vec<u32>,
    exhausted: bool,
}

impl Iterator for SubsetsOfSize {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.exhausted {
            return None;
        }
        let current = self
            .selector
            .iter()
            .fold(0u32, |acc, &i| acc | 1 << self.positions[i as usize]);
        // Odometer step on the index selector.
        let k = self.selector.len();
        let n = self.positions.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.exhausted = true;
                break;
            }
            i -= 1;
            if self.selector[i] < (n - (k - i)) as u32 {
                self.selector[i] += 1;
                for j in i + 1..k {
                    self.selector[j] = self.selector[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    }
}
