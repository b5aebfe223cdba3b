//! Squarefree monomial ideals by their minimal generators.
//!
//! Generators are kept in canonical order (descending lexicographic), so
//! ideal equality is structural equality. The zero ideal is represented
//! explicitly by an empty generator list; it arises legitimately as the
//! adjacency ideal of an edgeless generator graph and absorbs further
//! adjacency iterations.

use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matroid::{ExchangeWitness, Matroid, MatroidError};
use crate::monomial::{Distance, GroundSet, MonomialError, SquarefreeMonomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("cannot minimalize an empty set of monomials")]
    EmptyGeneratingSet,
    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,
    #[error("the zero ideal has no generators to work with")]
    ZeroIdeal,
    #[error("not matroidal: {0}")]
    NotMatroidal(ExchangeWitness),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
}

#[derive(Debug, Error)]
pub enum IdealParseError {
    #[error("malformed ideal document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] IdealError),
}

/// A squarefree monomial ideal, stored by its minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ground: GroundSet,
    generators: Vec<SquarefreeMonomial>,
}

impl MonomialIdeal {
    /// The zero ideal (no generators).
    pub fn zero(ground: GroundSet) -> Self {
        MonomialIdeal { ground, generators: Vec::new() }
    }

    /// Reduces a non-empty generating set to the minimal one: drops every
    /// monomial strictly divisible by another, deduplicates, and sorts in
    /// canonical order.
    pub fn minimalize(
        ground: GroundSet,
        monomials: Vec<SquarefreeMonomial>,
    ) -> Result<Self, IdealError> {
        if monomials.is_empty() {
            return Err(IdealError::EmptyGeneratingSet);
        }
        for m in &monomials {
            if m.ground() != ground {
                return Err(MonomialError::GroundSetMismatch {
                    left: ground.size(),
                    right: m.ground().size(),
                }
                .into());
            }
        }
        let mut generators: Vec<SquarefreeMonomial> = Vec::new();
        for &candidate in &monomials {
            let redundant = monomials
                .iter()
                .any(|&other| other != candidate && other.divides(candidate).expect("same ground"));
            if !redundant && !generators.contains(&candidate) {
                generators.push(candidate);
            }
        }
        generators.sort_by_key(|&g| Reverse(g));
        Ok(MonomialIdeal { ground, generators })
    }

    /// The matroidal ideal of a matroid: one generator per basis.
    pub fn from_matroid(matroid: &Matroid) -> Self {
        // Bases are equal-cardinality and already canonically ordered.
        MonomialIdeal { ground: matroid.ground(), generators: matroid.bases().to_vec() }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// Minimal generators in canonical order (descending lexicographic).
    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The common degree of the generators, when equigenerated and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let first = self.generators.first()?.degree();
        self.generators.iter().all(|g| g.degree() == first).then_some(first)
    }

    /// Whether all generators share one degree (vacuously true when zero).
    pub fn is_equigenerated(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: SquarefreeMonomial) -> bool {
        self.generators.iter().any(|g| g.divides(m).unwrap_or(false))
    }

    /// Interprets the generator supports as candidate bases and validates
    /// the exchange property. Returns the matroid, or the first violating
    /// triple in canonical order.
    pub fn is_matroidal(&self) -> Result<Matroid, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        if self.degree().is_none() {
            return Err(IdealError::NotEquigenerated);
        }
        match Matroid::from_bases(self.ground, self.generators.clone()) {
            Ok(matroid) => Ok(matroid),
            Err(MatroidError::ExchangeViolation(witness)) => Err(IdealError::NotMatroidal(witness)),
            Err(other) => unreachable!("minimal equigenerated generators: {other}"),
        }
    }

    /// The graph on the generators with edges at metric distance one.
    ///
    /// For a matroidal ideal this is the basis graph of the underlying
    /// matroid under the support identification.
    pub fn generator_graph(&self) -> Result<GeneratorGraph, IdealError> {
        if !self.is_equigenerated() {
            return Err(IdealError::NotEquigenerated);
        }
        let vertices = self.generators.clone();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if vertices[i].distance(vertices[j]) == Distance::ONE {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                    edges.push((i, j));
                }
            }
        }
        Ok(GeneratorGraph { vertices, adjacency, edges })
    }

    /// The adjacency ideal: generated by the least common multiples of
    /// adjacent generator pairs. The zero ideal when no pair is adjacent.
    pub fn adjacency_ideal(&self) -> Result<MonomialIdeal, IdealError> {
        let graph = self.generator_graph()?;
        let mut lcms: Vec<SquarefreeMonomial> = Vec::new();
        for &(i, j) in &graph.edges {
            let l = graph.vertices[i].lcm(graph.vertices[j]).expect("same ground");
            if !lcms.contains(&l) {
                lcms.push(l);
            }
        }
        if lcms.is_empty() {
            return Ok(MonomialIdeal::zero(self.ground));
        }
        // Equal input degrees make all lcms degree d+1, so minimalization
        // is pure de-duplication; run it anyway for the invariant.
        MonomialIdeal::minimalize(self.ground, lcms)
    }

    pub fn from_json(input: &str) -> Result<Self, IdealParseError> {
        let doc: IdealDoc = serde_json::from_str(input)?;
        Ok(Self::from_doc(&doc)?)
    }

    fn from_doc(doc: &IdealDoc) -> Result<Self, IdealError> {
        let ground = GroundSet::new(doc.n)?;
        if doc.generators.is_empty() {
            return Ok(MonomialIdeal::zero(ground));
        }
        let monomials = doc
            .generators
            .iter()
            .map(|g| SquarefreeMonomial::from_indices(ground, g))
            .collect::<Result<Vec<_>, _>>()?;
        MonomialIdeal::minimalize(ground, monomials)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("serialization cannot fail")
    }

    fn to_doc(&self) -> IdealDoc {
        IdealDoc {
            n: self.ground.size(),
            generators: self.generators.iter().map(|g| g.indices()).collect(),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// JSON document `{"n": 3, "generators": [[1,2],[1,3],[2,3]]}`.
#[derive(Serialize, Deserialize)]
pub struct IdealDoc {
    pub n: u32,
    pub generators: Vec<Vec<u32>>,
}

/// The graph `G_I` on the minimal generators of an equigenerated ideal;
/// two generators are adjacent when their distance is one.
#[derive(Debug, Clone)]
pub struct GeneratorGraph {
    vertices: Vec<SquarefreeMonomial>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl GeneratorGraph {
    pub fn vertices(&self) -> &[SquarefreeMonomial] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
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

    fn ideal(n: u32, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(ground(n), gens.iter().map(|g| m(n, g)).collect()).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[1], &[1, 2]]).generators(), &[m(2, &[1])]);
        let incomparable = ideal(3, &[&[1, 2], &[1, 3]]);
        assert_eq!(incomparable.generators(), &[m(3, &[1, 2]), m(3, &[1, 3])]);
        let equigenerated = ideal(3, &[&[2, 3], &[1, 2], &[1, 3]]);
        assert_eq!(equigenerated.generators().len(), 3);
        assert!(matches!(
            MonomialIdeal::minimalize(ground(2), vec![]),
            Err(IdealError::EmptyGeneratingSet)
        ));
        // Duplicates collapse.
        assert_eq!(ideal(2, &[&[1], &[1]]).generators(), &[m(2, &[1])]);
    }

    #[test]
    fn canonical_order_is_descending_lex() {
        let i = ideal(3, &[&[2, 3], &[1, 3], &[1, 2]]);
        assert_eq!(i.generators(), &[m(3, &[1, 2]), m(3, &[1, 3]), m(3, &[2, 3])]);
        assert_eq!(i.to_string(), "(x1*x2, x1*x3, x2*x3)");
    }

    #[test]
    fn degree_and_equigenerated() {
        assert_eq!(ideal(3, &[&[1, 2], &[2, 3]]).degree(), Some(2));
        assert_eq!(ideal(3, &[&[1], &[2, 3]]).degree(), None);
        assert!(!ideal(3, &[&[1], &[2, 3]]).is_equigenerated());
        let zero = MonomialIdeal::zero(ground(3));
        assert_eq!(zero.degree(), None);
        assert!(zero.is_equigenerated());
        assert_eq!(zero.to_string(), "(0)");
    }

    #[test]
    fn from_matroid_examples() {
        let u23 = Matroid::uniform(2, ground(3)).unwrap();
        assert_eq!(
            MonomialIdeal::from_matroid(&u23).generators(),
            &[m(3, &[1, 2]), m(3, &[1, 3]), m(3, &[2, 3])]
        );
        let u12 = Matroid::uniform(1, ground(2)).unwrap();
        assert_eq!(MonomialIdeal::from_matroid(&u12).generators(), &[m(2, &[1]), m(2, &[2])]);
        let single = Matroid::uniform(3, ground(3)).unwrap();
        assert_eq!(MonomialIdeal::from_matroid(&single).generators(), &[m(3, &[1, 2, 3])]);
    }

    #[test]
    fn is_matroidal_round_trip() {
        let i = ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let matroid = i.is_matroidal().unwrap();
        assert_eq!(matroid, Matroid::uniform(2, ground(3)).unwrap());
        assert_eq!(MonomialIdeal::from_matroid(&matroid), i);

        let principal = ideal(3, &[&[1, 2, 3]]);
        assert!(principal.is_matroidal().is_ok());
    }

    #[test]
    fn round_trip_identity_on_corpus() {
        for member in crate::corpus::default_corpus() {
            let i = MonomialIdeal::from_matroid(&member.matroid);
            let recovered = i.is_matroidal().unwrap_or_else(|e| panic!("{}: {e}", member.name));
            assert_eq!(recovered, member.matroid, "{}", member.name);
            assert_eq!(MonomialIdeal::from_matroid(&recovered), i, "{}", member.name);
        }
    }

    #[test]
    fn is_matroidal_failure_witness() {
        let err = ideal(4, &[&[1, 2], &[3, 4]]).is_matroidal().unwrap_err();
        match err {
            IdealError::NotMatroidal(w) => {
                assert_eq!(w.basis_from, m(4, &[1, 2]));
                assert_eq!(w.basis_to, m(4, &[3, 4]));
                assert_eq!(w.pivot_out, 1);
            }
            other => panic!("expected matroidality failure, got {other:?}"),
        }
        assert!(matches!(
            ideal(3, &[&[1], &[2, 3]]).is_matroidal(),
            Err(IdealError::NotEquigenerated)
        ));
        assert!(matches!(
            MonomialIdeal::zero(ground(3)).is_matroidal(),
            Err(IdealError::ZeroIdeal)
        ));
    }

    #[test]
    fn generator_graph_examples() {
        let triangle = ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]).generator_graph().unwrap();
        assert_eq!(triangle.edges().len(), 3);

        let isolated = ideal(4, &[&[1, 2], &[3, 4]]).generator_graph().unwrap();
        assert!(isolated.edges().is_empty());

        let variables = ideal(3, &[&[1], &[2], &[3]]).generator_graph().unwrap();
        assert_eq!(variables.edges().len(), 3);

        assert!(ideal(3, &[&[1], &[2, 3]]).generator_graph().is_err());
    }

    #[test]
    fn generator_graph_matches_basis_graph_for_matroidal() {
        let k4 = crate::matroid::MultiGraph::new(
            4,
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        let matroid = Matroid::graphic(&k4).unwrap();
        let i = MonomialIdeal::from_matroid(&matroid);
        let gen_graph = i.generator_graph().unwrap();
        let basis_graph = matroid.basis_graph();
        assert_eq!(gen_graph.vertices(), basis_graph.vertices());
        let basis_edges: Vec<(usize, usize)> =
            basis_graph.edges().iter().map(|e| (e.from, e.to)).collect();
        assert_eq!(gen_graph.edges(), &basis_edges[..]);
    }

    #[test]
    fn adjacency_ideal_examples() {
        let u23 = ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(u23.adjacency_ideal().unwrap().generators(), &[m(3, &[1, 2, 3])]);

        let variables = ideal(3, &[&[1], &[2], &[3]]);
        assert_eq!(
            variables.adjacency_ideal().unwrap().generators(),
            &[m(3, &[1, 2]), m(3, &[1, 3]), m(3, &[2, 3])]
        );

        let disjoint = ideal(4, &[&[1, 2], &[3, 4]]);
        assert!(disjoint.adjacency_ideal().unwrap().is_zero());

        // The zero ideal absorbs adjacency.
        let zero = MonomialIdeal::zero(ground(3));
        assert!(zero.adjacency_ideal().unwrap().is_zero());
    }

    #[test]
    fn adjacency_raises_degree_by_one() {
        for r in 1..4u32 {
            let i = MonomialIdeal::from_matroid(&Matroid::uniform(r, ground(4)).unwrap());
            let a = i.adjacency_ideal().unwrap();
            if !a.is_zero() {
                assert_eq!(a.degree(), Some(r + 1));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let i = MonomialIdeal::from_json(r#"{"n": 3, "generators": [[2,3],[1,2],[1,3]]}"#).unwrap();
        assert_eq!(i, ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]));
        assert_eq!(MonomialIdeal::from_json(&i.to_json()).unwrap(), i);

        // Non-minimal input is minimalized on ingestion.
        let reduced = MonomialIdeal::from_json(r#"{"n": 2, "generators": [[1],[1,2]]}"#).unwrap();
        assert_eq!(reduced.generators(), &[m(2, &[1])]);

        // The zero ideal round-trips.
        let zero = MonomialIdeal::from_json(r#"{"n": 3, "generators": []}"#).unwrap();
        assert!(zero.is_zero());
        assert_eq!(MonomialIdeal::from_json(&zero.to_json()).unwrap(), zero);

        assert!(MonomialIdeal::from_json("[1,2]").is_err());
        assert!(MonomialIdeal::from_json(r#"{"n": 2, "generators": [[7]]}"#).is_err());
    }
}
