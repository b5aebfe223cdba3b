//! The built-in verification corpus.
//!
//! Defaults: all uniform matroids `U_{r,n}` with `1 <= r < n <= 6`, the
//! graphic matroids of the 4-cycle, K4, and the diamond (K4 minus an
//! edge), and three fixed transversal systems. The non-matroidal fixtures
//! are equigenerated ideals that still have linear quotients in
//! lexicographic order; they exercise the paths that do not require
//! matroidality.

use crate::ideal::MonomialIdeal;
use crate::matroid::{Matroid, MultiGraph};
use crate::monomial::{GroundSet, SquarefreeMonomial};

/// Default bound for the uniform family.
pub const DEFAULT_MAX_N: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Uniform,
    Graphic,
    Transversal,
    All,
}

impl Family {
    pub fn parse(name: &str) -> Option<Family> {
        match name {
            "uniform" => Some(Family::Uniform),
            "graphic" => Some(Family::Graphic),
            "transversal" => Some(Family::Transversal),
            "all" => Some(Family::All),
            _ => None,
        }
    }
}

/// A named corpus member.
#[derive(Debug, Clone)]
pub struct CorpusMatroid {
    pub name: String,
    pub matroid: Matroid,
}

impl CorpusMatroid {
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_matroid(&self.matroid)
    }
}

/// All `U_{r,n}` with `1 <= r < n <= max_n`.
pub fn uniform_family(max_n: u32) -> Vec<CorpusMatroid> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let ground = GroundSet::new(n).expect("corpus sizes are in range");
        for r in 1..n {
            out.push(CorpusMatroid {
                name: format!("U({r},{n})"),
                matroid: Matroid::uniform(r, ground).expect("valid rank"),
            });
        }
    }
    out
}

type EdgeList = &'static [(u32, u32)];

/// Graphic matroids of the 4-cycle, the complete graph K4, and the
/// diamond (K4 minus an edge).
pub fn graphic_fixtures() -> Vec<CorpusMatroid> {
    let fixtures: [(&str, u32, EdgeList); 3] = [
        ("graphic(C4)", 4, &[(1, 2), (2, 3), (3, 4), (4, 1)]),
        ("graphic(K4)", 4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
        ("graphic(diamond)", 4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    ];
    fixtures
        .into_iter()
        .map(|(name, vertices, edges)| CorpusMatroid {
            name: name.to_string(),
            matroid: Matroid::graphic(
                &MultiGraph::new(vertices, edges.to_vec()).expect("valid graph"),
            )
            .expect("connected"),
        })
        .collect()
}

/// Three fixed transversal systems: the two-set chain over `{1,2,3}`, a
/// rank-3 chain over `{1..5}`, and a system with a repeated set.
pub fn transversal_fixtures() -> Vec<CorpusMatroid> {
    let fixtures: [(&str, u32, &[&[u32]]); 3] = [
        ("transversal(T1)", 3, &[&[1, 2], &[2, 3]]),
        ("transversal(T2)", 5, &[&[1, 2, 3], &[3, 4], &[4, 5]]),
        ("transversal(T3)", 5, &[&[1, 2], &[1, 2], &[3, 4, 5]]),
    ];
    fixtures
        .into_iter()
        .map(|(name, n, sets)| {
            let ground = GroundSet::new(n).expect("in range");
            let sets: Vec<SquarefreeMonomial> = sets
                .iter()
                .map(|s| SquarefreeMonomial::from_indices(ground, s).expect("in range"))
                .collect();
            CorpusMatroid {
                name: name.to_string(),
                matroid: Matroid::transversal(ground, &sets).expect("non-empty system"),
            }
        })
        .collect()
}

pub fn corpus(family: Family, max_n: u32) -> Vec<CorpusMatroid> {
    match family {
        Family::Uniform => uniform_family(max_n),
        Family::Graphic => graphic_fixtures(),
        Family::Transversal => transversal_fixtures(),
        Family::All => {
            let mut all = uniform_family(max_n);
            all.extend(graphic_fixtures());
            all.extend(transversal_fixtures());
            all
        }
    }
}

/// The default corpus: every family at the default bound.
pub fn default_corpus() -> Vec<CorpusMatroid> {
    corpus(Family::All, DEFAULT_MAX_N)
}

/// Equigenerated ideals with linear quotients under lex that are not
/// matroidal: the edge ideal of the path on four vertices and a star with
/// an extra edge.
pub fn nonmatroidal_lq_fixtures() -> Vec<(String, MonomialIdeal)> {
    let build = |n: u32, gens: &[&[u32]]| {
        let ground = GroundSet::new(n).expect("in range");
        MonomialIdeal::minimalize(
            ground,
            gens.iter()
                .map(|g| SquarefreeMonomial::from_indices(ground, g).expect("in range"))
                .collect(),
        )
        .expect("non-empty")
    };
    vec![
        ("path(P4)".to_string(), build(4, &[&[1, 2], &[2, 3], &[3, 4]])),
        ("star-plus-edge".to_string(), build(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3]])),
    ]
}

/// Every equigenerated ideal with linear quotients used by the
/// verification suites: the corpus ideals plus the non-matroidal fixtures.
pub fn equigenerated_lq_pool() -> Vec<(String, MonomialIdeal)> {
    let mut pool: Vec<(String, MonomialIdeal)> =
        default_corpus().into_iter().map(|c| (c.name.clone(), c.ideal())).collect();
    pool.extend(nonmatroidal_lq_fixtures());
    pool
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_composition() {
        let all = default_corpus();
        // 1+2+3+4+5 uniform members, three graphic, three transversal.
        assert_eq!(all.len(), 15 + 3 + 3);
        let mut names: Vec<&str> = all.iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), all.len(), "corpus names must be unique");
    }

    #[test]
    fn families_select_subsets() {
        assert_eq!(corpus(Family::Uniform, 4).len(), 1 + 2 + 3);
        assert_eq!(corpus(Family::Graphic, 6).len(), 3);
        assert_eq!(corpus(Family::Transversal, 6).len(), 3);
        assert_eq!(Family::parse("graphic"), Some(Family::Graphic));
        assert_eq!(Family::parse("nope"), None);
    }

    #[test]
    fn transversal_fixtures_are_as_documented() {
        let fixtures = transversal_fixtures();
        // T1 is U_{2,3}.
        assert_eq!(
            fixtures[0].matroid,
            Matroid::uniform(2, GroundSet::new(3).unwrap()).unwrap()
        );
        // T2 has rank 3 and is not uniform.
        assert_eq!(fixtures[1].matroid.rank(), 3);
        assert!(fixtures[1].matroid.bases().len() < 10);
        // T3: {1,2} forced, third element free among {3,4,5}.
        assert_eq!(fixtures[2].matroid.rank(), 3);
        assert_eq!(fixtures[2].matroid.bases().len(), 3);
    }

    #[test]
    fn nonmatroidal_fixtures_behave_as_named() {
        for (name, ideal) in nonmatroidal_lq_fixtures() {
            assert!(ideal.is_matroidal().is_err(), "{name} must not be matroidal");
            assert!(
                crate::linear_quotients::LinearQuotientsOrder::new_lex(&ideal).is_ok(),
                "{name} must have linear quotients under lex"
            );
        }
    }
}
