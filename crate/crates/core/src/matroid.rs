//! Matroids given by their bases.
//!
//! A basis is stored as a [`SquarefreeMonomial`], using subsets of `{1..n}`
//! and squarefree monomials interchangeably. Construction always runs the
//! exhaustive exchange-property check, so every `Matroid` value is valid by
//! construction and carries its bases in canonical order (descending
//! lexicographic).

use std::cmp::Reverse;
use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monomial::{GroundSet, MonomialError, SquarefreeMonomial, subsets_of_size};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("a matroid needs at least one basis")]
    EmptyBases,
    #[error("bases have unequal cardinality: |{first}| = {} but |{second}| = {}", first.degree(), second.degree())]
    UnequalCardinality { first: SquarefreeMonomial, second: SquarefreeMonomial },
    #[error("{0}")]
    ExchangeViolation(ExchangeWitness),
    #[error("rank {r} out of range 1..={n}")]
    RankOutOfRange { r: u32, n: u32 },
    #[error("graph is disconnected: no spanning tree exists")]
    DisconnectedGraph,
    #[error("graph edge ({a},{b}) has an endpoint outside 1..={vertices}")]
    InvalidEdge { a: u32, b: u32, vertices: u32 },
    #[error("graph has no edges")]
    NoEdges,
    #[error("a transversal system needs at least one set")]
    EmptySetSystem,
    #[error("{basis} is not a basis of this matroid")]
    NotABasis { basis: SquarefreeMonomial },
    #[error("bases {first} and {second} are at basis-graph distance {distance}, not 2")]
    NotAtDistanceTwo { first: SquarefreeMonomial, second: SquarefreeMonomial, distance: u32 },
    #[error(transparent)]
    Monomial(#[from] MonomialError),
}

/// A violating triple for the exchange property: no `b2 in B2 \ B1` makes
/// `B1 - b1 + b2` a basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub basis_from: SquarefreeMonomial,
    pub basis_to: SquarefreeMonomial,
    pub pivot_out: u32,
}

impl fmt::Display for ExchangeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "exchange property fails: B1 = {}, B2 = {}, b1 = {}: no b2 in B2\\B1 makes B1 - b1 + b2 a basis",
            set_string(self.basis_from),
            set_string(self.basis_to),
            self.pivot_out
        )
    }
}

/// Renders a basis as a set, e.g. `{1,2}`.
pub(crate) fn set_string(b: SquarefreeMonomial) -> String {
    format!("{{{}}}", b.indices().iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","))
}

/// A matroid on `{1..n}`, represented by its set of bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    ground: GroundSet,
    bases: Vec<SquarefreeMonomial>,
}

impl Matroid {
    /// Validates a candidate basis set: non-empty, equal cardinalities, and
    /// the exchange property (exhaustive, with a witness on failure).
    ///
    /// Bases are deduplicated and stored in descending lexicographic order.
    pub fn from_bases(
        ground: GroundSet,
        candidate_bases: Vec<SquarefreeMonomial>,
    ) -> Result<Self, MatroidError> {
        if candidate_bases.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        let mut bases = candidate_bases;
        for b in &bases {
            if b.ground() != ground {
                return Err(MonomialError::GroundSetMismatch {
                    left: ground.size(),
                    right: b.ground().size(),
                }
                .into());
            }
        }
        bases.sort_by_key(|&b| Reverse(b));
        bases.dedup();
        let first = bases[0];
        for &b in &bases[1..] {
            if b.degree() != first.degree() {
                return Err(MatroidError::UnequalCardinality { first, second: b });
            }
        }
        let matroid = Matroid { ground, bases };
        match matroid.exchange_witness() {
            None => Ok(matroid),
            Some(w) => Err(MatroidError::ExchangeViolation(w)),
        }
    }

    /// First exchange-property violation in canonical order, if any.
    fn exchange_witness(&self) -> Option<ExchangeWitness> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                let out_candidates = b1.minus(b2).expect("same ground");
                for pivot_out in out_candidates.indices() {
                    let stripped = b1.without(pivot_out);
                    let found = b2
                        .minus(b1)
                        .expect("same ground")
                        .indices()
                        .into_iter()
                        .any(|pivot_in| self.is_basis(stripped.with(pivot_in).expect("in range")));
                    if !found {
                        return Some(ExchangeWitness {
                            basis_from: b1,
                            basis_to: b2,
                            pivot_out,
                        });
                    }
                }
            }
        }
        None
    }

    /// The uniform matroid `U_{r,n}`: all `r`-subsets of `{1..n}`.
    pub fn uniform(r: u32, ground: GroundSet) -> Result<Self, MatroidError> {
        let n = ground.size();
        if r == 0 || r > n {
            return Err(MatroidError::RankOutOfRange { r, n });
        }
        let bases = subsets_of_size(ground.full_mask(), r)
            .map(|mask| ground.monomial_from_mask(mask))
            .collect();
        Self::from_bases(ground, bases)
    }

    /// The graphic matroid of a connected multigraph: ground set elements
    /// are the edges (numbered 1..|E| in input order), bases are the edge
    /// sets of spanning trees, enumerated by brute force.
    ///
    /// Loops and parallel edges are permitted; loops never occur in a basis.
    pub fn graphic(graph: &MultiGraph) -> Result<Self, MatroidError> {
        if !graph.is_connected() {
            return Err(MatroidError::DisconnectedGraph);
        }
        let ground = GroundSet::new(graph.edges.len() as u32)?;
        let tree_size = graph.vertices - 1;
        let bases: Vec<SquarefreeMonomial> = subsets_of_size(ground.full_mask(), tree_size)
            .filter(|&mask| graph.is_acyclic(mask))
            .map(|mask| ground.monomial_from_mask(mask))
            .collect();
        if bases.is_empty() {
            // Unreachable for a connected graph; kept as a guard.
            return Err(MatroidError::DisconnectedGraph);
        }
        Self::from_bases(ground, bases)
    }

    /// The transversal matroid of a set system over `{1..n}`: bases are the
    /// maximum-cardinality partial transversals, found by brute-force
    /// matching in the element/set bipartite graph.
    pub fn transversal(
        ground: GroundSet,
        sets: &[SquarefreeMonomial],
    ) -> Result<Self, MatroidError> {
        if sets.is_empty() {
            return Err(MatroidError::EmptySetSystem);
        }
        for s in sets {
            if s.ground() != ground {
                return Err(MonomialError::GroundSetMismatch {
                    left: ground.size(),
                    right: s.ground().size(),
                }
                .into());
            }
        }
        let union = sets
            .iter()
            .fold(0u32, |acc, s| acc | s.mask());
        let max_size = union.count_ones().min(sets.len() as u32);
        for size in (0..=max_size).rev() {
            let bases: Vec<SquarefreeMonomial> = subsets_of_size(union, size)
                .filter(|&mask| has_full_matching(mask, sets))
                .map(|mask| ground.monomial_from_mask(mask))
                .collect();
            if !bases.is_empty() {
                return Self::from_bases(ground, bases);
            }
        }
        // size = 0 always matches, so this point is unreachable.
        Self::from_bases(ground, vec![SquarefreeMonomial::unit(ground)])
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// Common cardinality of the bases.
    pub fn rank(&self) -> u32 {
        self.bases[0].degree()
    }

    /// Bases in canonical order (descending lexicographic).
    pub fn bases(&self) -> &[SquarefreeMonomial] {
        &self.bases
    }

    pub fn is_basis(&self, b: SquarefreeMonomial) -> bool {
        self.bases.contains(&b)
    }

    /// Exhaustive symmetric exchange check: for all `B1, B2` and
    /// `b1 in B1 \ B2` there is `b2 in B2 \ B1` with both `B1 - b1 + b2`
    /// and `B2 - b2 + b1` bases.
    ///
    /// This holds for every matroid; the check exists to test the
    /// implementation, and a `false` indicates a bug.
    pub fn check_symmetric_exchange(&self) -> bool {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for pivot_out in b1.minus(b2).expect("same ground").indices() {
                    let found = b2.minus(b1).expect("same ground").indices().into_iter().any(
                        |pivot_in| {
                            self.is_basis(b1.without(pivot_out).with(pivot_in).expect("in range"))
                                && self
                                    .is_basis(b2.without(pivot_in).with(pivot_out).expect("in range"))
                        },
                    );
                    if !found {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The basis graph: vertices are the bases, edges join bases whose
    /// symmetric difference is a single pivot, labeled by the pivot pair.
    pub fn basis_graph(&self) -> BasisGraph {
        let graph = BasisGraph::new(self.bases.clone());
        assert!(graph.is_connected(), "basis graph of a valid matroid must be connected");
        graph
    }

    /// For bases at basis-graph distance exactly two, written
    /// `B2 = B1 - (e1+e2) + (f1+f2)`, returns every common neighbor with
    /// its pivot annotation for the step away from `B1`.
    pub fn distance_two_neighbors(
        &self,
        first: SquarefreeMonomial,
        second: SquarefreeMonomial,
    ) -> Result<DistanceTwoNeighbors, MatroidError> {
        for b in [first, second] {
            if !self.is_basis(b) {
                return Err(MatroidError::NotABasis { basis: b });
            }
        }
        let graph = self.basis_graph();
        let i = graph.vertex_index(first).expect("basis is a vertex");
        let j = graph.vertex_index(second).expect("basis is a vertex");
        let distance = graph.distance(i, j).expect("basis graph is connected");
        if distance != 2 {
            return Err(MatroidError::NotAtDistanceTwo { first, second, distance });
        }
        let removed = first.minus(second).expect("same ground").indices();
        let added = second.minus(first).expect("same ground").indices();
        debug_assert_eq!(removed.len(), 2);
        debug_assert_eq!(added.len(), 2);
        let neighbors: Vec<CommonNeighbor> = graph
            .neighbors(i)
            .iter()
            .filter(|v| graph.neighbors(j).contains(v))
            .map(|&v| {
                let c = graph.vertices()[v];
                CommonNeighbor {
                    basis: c,
                    pivot_out: first.minus(c).expect("same ground").indices()[0],
                    pivot_in: c.minus(first).expect("same ground").indices()[0],
                }
            })
            .collect();
        debug_assert!(neighbors.len() >= 2, "a distance-two pair has at least two common neighbors");
        Ok(DistanceTwoNeighbors {
            removed: (removed[0], removed[1]),
            added: (added[0], added[1]),
            neighbors,
        })
    }

    pub fn from_json(input: &str) -> Result<Self, MatroidParseError> {
        MatroidSpec::from_json(input)?.build().map_err(MatroidParseError::Invalid)
    }

    pub fn to_json(&self) -> String {
        let doc = MatroidDoc {
            n: self.ground.size(),
            bases: self.bases.iter().map(|b| b.indices()).collect(),
        };
        serde_json::to_string(&doc).expect("serialization cannot fail")
    }
}

/// Augmenting-path matching: every element of `mask` must be assigned a
/// distinct set containing it.
fn has_full_matching(mask: u32, sets: &[SquarefreeMonomial]) -> bool {
    let elements: Vec<u32> = (0..32).filter(|&b| mask & (1 << b) != 0).collect();
    let mut assigned: Vec<Option<usize>> = vec![None; sets.len()];
    fn augment(
        element_bit: u32,
        sets: &[SquarefreeMonomial],
        assigned: &mut [Option<usize>],
        visited: &mut [bool],
        elements: &[u32],
    ) -> bool {
        for (s, set) in sets.iter().enumerate() {
            if set.mask() & (1 << element_bit) == 0 || visited[s] {
                continue;
            }
            visited[s] = true;
            let free = match assigned[s] {
                None => true,
                Some(prev) => augment(elements[prev], sets, assigned, visited, elements),
            };
            if free {
                assigned[s] = Some(elements.iter().position(|&e| e == element_bit).unwrap());
                return true;
            }
        }
        false
    }
    for &e in &elements {
        let mut visited = vec![false; sets.len()];
        if !augment(e, sets, &mut assigned, &mut visited, &elements) {
            return false;
        }
    }
    true
}

/// A common neighbor `C` of a distance-two pair `(B1, B2)`, annotated with
/// the pivot step `C = B1 - pivot_out + pivot_in`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommonNeighbor {
    pub basis: SquarefreeMonomial,
    pub pivot_out: u32,
    pub pivot_in: u32,
}

/// The common-neighbor structure of a basis pair at distance two,
/// `B2 = B1 - (e1+e2) + (f1+f2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTwoNeighbors {
    /// `(e1, e2)`: the elements of `B1 \ B2`, ascending.
    pub removed: (u32, u32),
    /// `(f1, f2)`: the elements of `B2 \ B1`, ascending.
    pub added: (u32, u32),
    pub neighbors: Vec<CommonNeighbor>,
}

impl DistanceTwoNeighbors {
    /// Both removed elements appear as pivot-outs across distinct neighbors
    /// and both added elements appear as pivot-ins across distinct neighbors.
    pub fn has_pivot_coverage(&self) -> bool {
        let (e1, e2) = self.removed;
        let (f1, f2) = self.added;
        [e1, e2].iter().all(|&e| self.neighbors.iter().any(|c| c.pivot_out == e))
            && [f1, f2].iter().all(|&f| self.neighbors.iter().any(|c| c.pivot_in == f))
    }

    /// A single pair of neighbors realizing both coverages at once: one
    /// pivots out `e1`, the other `e2`, and between them they pivot in
    /// `f1` and `f2`.
    pub fn has_diagonal_pair(&self) -> bool {
        let (e1, e2) = self.removed;
        let (f1, f2) = self.added;
        self.neighbors.iter().any(|c1| {
            self.neighbors.iter().any(|c2| {
                let outs = (c1.pivot_out, c2.pivot_out);
                let ins = (c1.pivot_in, c2.pivot_in);
                (outs == (e1, e2) || outs == (e2, e1)) && (ins == (f1, f2) || ins == (f2, f1))
            })
        })
    }
}

/// Graph on the bases of a matroid; two bases are adjacent when their
/// symmetric difference has size two, i.e. one pivot step apart.
#[derive(Debug, Clone)]
pub struct BasisGraph {
    vertices: Vec<SquarefreeMonomial>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<PivotEdge>,
}

/// An edge of the basis graph with its pivot label:
/// `vertices[to] = vertices[from] - pivot_out + pivot_in`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PivotEdge {
    pub from: usize,
    pub to: usize,
    pub pivot_out: u32,
    pub pivot_in: u32,
}

impl BasisGraph {
    fn new(vertices: Vec<SquarefreeMonomial>) -> Self {
        let mut adjacency = vec![Vec::new(); vertices.len()];
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let out = vertices[i].minus(vertices[j]).expect("same ground");
                let inn = vertices[j].minus(vertices[i]).expect("same ground");
                if out.degree() == 1 && inn.degree() == 1 {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                    edges.push(PivotEdge {
                        from: i,
                        to: j,
                        pivot_out: out.indices()[0],
                        pivot_in: inn.indices()[0],
                    });
                }
            }
        }
        BasisGraph { vertices, adjacency, edges }
    }

    pub fn vertices(&self) -> &[SquarefreeMonomial] {
        &self.vertices
    }

    pub fn edges(&self) -> &[PivotEdge] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn vertex_index(&self, b: SquarefreeMonomial) -> Option<usize> {
        self.vertices.iter().position(|&v| v == b)
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Shortest path length between two vertices, `None` if unreachable.
    pub fn distance(&self, i: usize, j: usize) -> Option<u32> {
        self.distances_from(i)[j]
    }

    fn distances_from(&self, start: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// A multigraph with 1-based vertices; loops and parallel edges allowed.
#[derive(Debug, Clone)]
pub struct MultiGraph {
    vertices: u32,
    edges: Vec<(u32, u32)>,
}

impl MultiGraph {
    pub fn new(vertices: u32, edges: Vec<(u32, u32)>) -> Result<Self, MatroidError> {
        if edges.is_empty() {
            return Err(MatroidError::NoEdges);
        }
        for &(a, b) in &edges {
            if a == 0 || b == 0 || a > vertices || b > vertices {
                return Err(MatroidError::InvalidEdge { a, b, vertices });
            }
        }
        Ok(MultiGraph { vertices, edges })
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices as usize;
        let mut seen = vec![false; n + 1];
        let mut queue = VecDeque::from([1u32]);
        seen[1] = true;
        while let Some(v) = queue.pop_front() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y as usize] {
                        seen[y as usize] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        (1..=self.vertices).all(|v| seen[v as usize])
    }

    /// Whether the edge subset selected by `mask` (bit `i` = edge `i+1`)
    /// contains no cycle. Union-find; a loop is a one-edge cycle.
    fn is_acyclic(&self, mask: u32) -> bool {
        let mut parent: Vec<u32> = (0..=self.vertices).collect();
        fn find(parent: &mut Vec<u32>, v: u32) -> u32 {
            if parent[v as usize] != v {
                let root = find(parent, parent[v as usize]);
                parent[v as usize] = root;
            }
            parent[v as usize]
        }
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra as usize] = rb;
        }
        true
    }
}

#[derive(Debug, Error)]
pub enum MatroidParseError {
    #[error("malformed matroid document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(MatroidError),
}

/// JSON document `{"n": 4, "bases": [[1,2],[1,3]]}`.
#[derive(Serialize, Deserialize)]
pub struct MatroidDoc {
    pub n: u32,
    pub bases: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
pub struct UniformSpec {
    pub r: u32,
    pub n: u32,
}

#[derive(Serialize, Deserialize)]
pub struct GraphicSpec {
    pub vertices: u32,
    pub edges: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
pub struct TransversalSpec {
    pub n: u32,
    pub sets: Vec<Vec<u32>>,
}

/// A matroid constructor document: explicit bases, `{"uniform": {...}}`,
/// `{"graphic": {...}}`, or `{"transversal": {...}}`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatroidSpec {
    Uniform { uniform: UniformSpec },
    Graphic { graphic: GraphicSpec },
    Transversal { transversal: TransversalSpec },
    Explicit(MatroidDoc),
}

impl MatroidSpec {
    pub fn from_json(input: &str) -> Result<Self, MatroidParseError> {
        Ok(serde_json::from_str(input)?)
    }

    pub fn build(&self) -> Result<Matroid, MatroidError> {
        match self {
            MatroidSpec::Uniform { uniform } => {
                Matroid::uniform(uniform.r, GroundSet::new(uniform.n)?)
            }
            MatroidSpec::Graphic { graphic } => {
                Matroid::graphic(&MultiGraph::new(graphic.vertices, graphic.edges.clone())?)
            }
            MatroidSpec::Transversal { transversal } => {
                let ground = GroundSet::new(transversal.n)?;
                let sets = transversal
                    .sets
                    .iter()
                    .map(|s| SquarefreeMonomial::from_indices(ground, s))
                    .collect::<Result<Vec<_>, _>>()?;
                Matroid::transversal(ground, &sets)
            }
            MatroidSpec::Explicit(doc) => {
                let ground = GroundSet::new(doc.n)?;
                let bases = doc
                    .bases
                    .iter()
                    .map(|b| SquarefreeMonomial::from_indices(ground, b))
                    .collect::<Result<Vec<_>, _>>()?;
                Matroid::from_bases(ground, bases)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: u32) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn m(n: u32, indices: &[u32]) -> SquarefreeMonomial {
        SquarefreeMonomial::from_indices(ground(n), indices).unwrap()
    }

    fn bases(n: u32, sets: &[&[u32]]) -> Vec<SquarefreeMonomial> {
        sets.iter().map(|s| m(n, s)).collect()
    }

    #[test]
    fn from_bases_accepts_u23() {
        let matroid =
            Matroid::from_bases(ground(3), bases(3, &[&[2, 3], &[1, 2], &[1, 3]])).unwrap();
        assert_eq!(matroid, Matroid::uniform(2, ground(3)).unwrap());
        assert_eq!(matroid.rank(), 2);
        // Canonical order is descending lex.
        assert_eq!(matroid.bases(), &bases(3, &[&[1, 2], &[1, 3], &[2, 3]])[..]);
    }

    #[test]
    fn from_bases_reports_exchange_witness() {
        let err = Matroid::from_bases(ground(4), bases(4, &[&[1, 2], &[3, 4]])).unwrap_err();
        match err {
            MatroidError::ExchangeViolation(w) => {
                assert_eq!(w.basis_from, m(4, &[1, 2]));
                assert_eq!(w.basis_to, m(4, &[3, 4]));
                assert_eq!(w.pivot_out, 1);
            }
            other => panic!("expected exchange violation, got {other:?}"),
        }
    }

    #[test]
    fn from_bases_rejects_unequal_cardinality() {
        let err = Matroid::from_bases(ground(2), bases(2, &[&[1], &[1, 2]])).unwrap_err();
        assert!(matches!(err, MatroidError::UnequalCardinality { .. }));
        assert!(matches!(
            Matroid::from_bases(ground(2), vec![]),
            Err(MatroidError::EmptyBases)
        ));
    }

    #[test]
    fn validation_is_idempotent() {
        let matroid = Matroid::uniform(2, ground(4)).unwrap();
        let again = Matroid::from_bases(matroid.ground(), matroid.bases().to_vec()).unwrap();
        assert_eq!(matroid, again);
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(
            Matroid::uniform(2, ground(3)).unwrap().bases(),
            &bases(3, &[&[1, 2], &[1, 3], &[2, 3]])[..]
        );
        assert_eq!(
            Matroid::uniform(1, ground(3)).unwrap().bases(),
            &bases(3, &[&[1], &[2], &[3]])[..]
        );
        assert_eq!(
            Matroid::uniform(3, ground(3)).unwrap().bases(),
            &bases(3, &[&[1, 2, 3]])[..]
        );
        assert!(matches!(
            Matroid::uniform(4, ground(3)),
            Err(MatroidError::RankOutOfRange { r: 4, n: 3 })
        ));
        assert!(Matroid::uniform(0, ground(3)).is_err());
    }

    #[test]
    fn graphic_examples() {
        // Triangle: spanning trees are the three 2-subsets.
        let triangle = MultiGraph::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(
            Matroid::graphic(&triangle).unwrap().bases(),
            Matroid::uniform(2, ground(3)).unwrap().bases()
        );
        // Path on 3 vertices: a single spanning tree.
        let path = MultiGraph::new(3, vec![(1, 2), (2, 3)]).unwrap();
        assert_eq!(Matroid::graphic(&path).unwrap().bases(), &bases(2, &[&[1, 2]])[..]);
        // 4-cycle: four spanning trees, each omitting one edge.
        let cycle = MultiGraph::new(4, vec![(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let cycle_matroid = Matroid::graphic(&cycle).unwrap();
        assert_eq!(
            cycle_matroid.bases(),
            &bases(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])[..]
        );
        // Disconnected graph has no spanning tree.
        let disconnected = MultiGraph::new(4, vec![(1, 2), (3, 4)]).unwrap();
        assert!(matches!(
            Matroid::graphic(&disconnected),
            Err(MatroidError::DisconnectedGraph)
        ));
    }

    #[test]
    fn graphic_tree_counts() {
        // Cayley: K4 has 16 spanning trees.
        let k4 = MultiGraph::new(4, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(Matroid::graphic(&k4).unwrap().bases().len(), 16);
        // Kirchhoff on the diamond (K4 minus an edge) gives 8.
        let diamond = MultiGraph::new(4, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert_eq!(Matroid::graphic(&diamond).unwrap().bases().len(), 8);
    }

    #[test]
    fn graphic_loops_and_parallel_edges() {
        // Edge 2 is a loop: it appears in no basis.
        let with_loop = MultiGraph::new(2, vec![(1, 2), (1, 1), (2, 1)]).unwrap();
        let matroid = Matroid::graphic(&with_loop).unwrap();
        assert_eq!(matroid.bases(), &bases(3, &[&[1], &[3]])[..]);
        // Single vertex with a loop: the empty spanning tree, rank 0.
        let lone = MultiGraph::new(1, vec![(1, 1)]).unwrap();
        let rank0 = Matroid::graphic(&lone).unwrap();
        assert_eq!(rank0.rank(), 0);
        assert_eq!(rank0.bases().len(), 1);
    }

    #[test]
    fn transversal_examples() {
        let g3 = ground(3);
        let sets = [m(3, &[1, 2]), m(3, &[2, 3])];
        let matroid = Matroid::transversal(g3, &sets).unwrap();
        assert_eq!(matroid.bases(), Matroid::uniform(2, g3).unwrap().bases());

        let single = Matroid::transversal(ground(2), &[m(2, &[1, 2])]).unwrap();
        assert_eq!(single.bases(), &bases(2, &[&[1], &[2]])[..]);

        let disjoint = Matroid::transversal(ground(2), &[m(2, &[1]), m(2, &[2])]).unwrap();
        assert_eq!(disjoint.bases(), &bases(2, &[&[1, 2]])[..]);

        assert!(matches!(
            Matroid::transversal(g3, &[]),
            Err(MatroidError::EmptySetSystem)
        ));
    }

    #[test]
    fn symmetric_exchange_examples() {
        assert!(Matroid::uniform(2, ground(4)).unwrap().check_symmetric_exchange());
        let cycle = MultiGraph::new(4, vec![(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert!(Matroid::graphic(&cycle).unwrap().check_symmetric_exchange());
        let k4 = MultiGraph::new(4, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(Matroid::graphic(&k4).unwrap().check_symmetric_exchange());
    }

    #[test]
    fn basis_graph_examples() {
        let triangle = Matroid::uniform(2, ground(3)).unwrap().basis_graph();
        assert_eq!(triangle.vertices().len(), 3);
        assert_eq!(triangle.edges().len(), 3);

        let single = Matroid::uniform(3, ground(3)).unwrap().basis_graph();
        assert_eq!(single.vertices().len(), 1);
        assert!(single.edges().is_empty());
        assert!(single.is_connected());

        let u13 = Matroid::uniform(1, ground(3)).unwrap().basis_graph();
        assert_eq!(u13.vertices().len(), 3);
        assert_eq!(u13.edges().len(), 3);
    }

    #[test]
    fn basis_graph_edge_labels_and_metric() {
        let k4 = MultiGraph::new(4, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let matroid = Matroid::graphic(&k4).unwrap();
        let graph = matroid.basis_graph();
        assert!(graph.is_connected());
        for e in graph.edges() {
            let from = graph.vertices()[e.from];
            let to = graph.vertices()[e.to];
            assert_eq!(from.without(e.pivot_out).with(e.pivot_in).unwrap(), to);
        }
        // Adjacency coincides with metric distance one.
        for (i, &a) in graph.vertices().iter().enumerate() {
            for (j, &b) in graph.vertices().iter().enumerate() {
                let adjacent = graph.neighbors(i).contains(&j);
                assert_eq!(adjacent, a.distance(b) == crate::monomial::Distance::ONE);
            }
        }
    }

    #[test]
    fn distance_two_neighbors_u24() {
        let matroid = Matroid::uniform(2, ground(4)).unwrap();
        let result = matroid.distance_two_neighbors(m(4, &[1, 2]), m(4, &[3, 4])).unwrap();
        assert_eq!(result.removed, (1, 2));
        assert_eq!(result.added, (3, 4));
        let mut found: Vec<_> = result.neighbors.iter().map(|c| c.basis).collect();
        found.sort();
        let mut expected = bases(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        expected.sort();
        assert_eq!(found, expected);
        assert!(result.has_pivot_coverage());
        assert!(result.has_diagonal_pair());
        // Annotations record the step away from B1.
        for c in &result.neighbors {
            assert_eq!(m(4, &[1, 2]).without(c.pivot_out).with(c.pivot_in).unwrap(), c.basis);
        }
    }

    #[test]
    fn distance_two_rejects_other_distances() {
        // In U_{3,4} every pair of distinct bases is adjacent.
        let u34 = Matroid::uniform(3, ground(4)).unwrap();
        let err = u34.distance_two_neighbors(m(4, &[1, 2, 3]), m(4, &[1, 2, 4])).unwrap_err();
        assert!(matches!(err, MatroidError::NotAtDistanceTwo { distance: 1, .. }));
        let err = u34.distance_two_neighbors(m(4, &[1, 2, 3]), m(4, &[1, 2, 3])).unwrap_err();
        assert!(matches!(err, MatroidError::NotAtDistanceTwo { distance: 0, .. }));
        let err = u34.distance_two_neighbors(m(4, &[1, 2, 3]), m(4, &[2, 4])).unwrap_err();
        assert!(matches!(err, MatroidError::NotABasis { .. }));
        // The graphic matroid of the 4-cycle is U_{3,4}: no distance-two
        // pairs exist there either.
        let cycle = MultiGraph::new(4, vec![(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let cycle_matroid = Matroid::graphic(&cycle).unwrap();
        let graph = cycle_matroid.basis_graph();
        for i in 0..graph.vertices().len() {
            for j in 0..graph.vertices().len() {
                assert!(graph.distance(i, j).unwrap() <= 1);
            }
        }
    }

    #[test]
    fn distance_two_structure_exhaustive_k4() {
        let k4 = MultiGraph::new(4, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let matroid = Matroid::graphic(&k4).unwrap();
        let graph = matroid.basis_graph();
        let mut pairs = 0;
        for i in 0..graph.vertices().len() {
            for j in 0..graph.vertices().len() {
                if graph.distance(i, j) != Some(2) {
                    continue;
                }
                pairs += 1;
                let b1 = graph.vertices()[i];
                let b2 = graph.vertices()[j];
                // Graph distance two coincides with symmetric difference 4.
                assert_eq!(b1.distance(b2).integer_value(), Some(2));
                let result = matroid.distance_two_neighbors(b1, b2).unwrap();
                assert!(result.neighbors.len() >= 2);
                assert!(result.has_pivot_coverage());
                assert!(result.has_diagonal_pair());
            }
        }
        assert!(pairs > 0, "K4 must have distance-two basis pairs");
    }

    #[test]
    fn matroid_spec_json_round_trip() {
        let matroid = Matroid::from_json(r#"{"n": 3, "bases": [[1,2],[1,3],[2,3]]}"#).unwrap();
        assert_eq!(matroid, Matroid::uniform(2, ground(3)).unwrap());
        let round = Matroid::from_json(&matroid.to_json()).unwrap();
        assert_eq!(round, matroid);

        let uniform = Matroid::from_json(r#"{"uniform": {"r": 2, "n": 4}}"#).unwrap();
        assert_eq!(uniform, Matroid::uniform(2, ground(4)).unwrap());

        let graphic =
            Matroid::from_json(r#"{"graphic": {"vertices": 3, "edges": [[1,2],[2,3],[1,3]]}}"#)
                .unwrap();
        assert_eq!(graphic.bases().len(), 3);

        let transversal =
            Matroid::from_json(r#"{"transversal": {"n": 3, "sets": [[1,2],[2,3]]}}"#).unwrap();
        assert_eq!(transversal, Matroid::uniform(2, ground(3)).unwrap());

        assert!(Matroid::from_json("{not json").is_err());
        assert!(Matroid::from_json(r#"{"n": 4, "bases": [[1,2],[3,4]]}"#).is_err());
    }
}
