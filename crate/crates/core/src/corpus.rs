//! The standard instance corpus: concrete non-bipartite graphs from all five
//! families, each carrying the transitive group action the checks need.
//!
//! Every constructor here is deterministic, so witnesses and report hashes
//! are stable across runs.

use crate::graph::{
    cayley, cayley_sum, from_action_graph, twisted_cayley, twisted_cayley_sum, AutomorphismMap,
    BuildError, ConnectionSet, RegularMultigraph,
};
use crate::group::{build_group, GroupAction, GroupDescriptor, GroupError, GroupTable};
use crate::harness::SweepInstance;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error("unsupported corpus request: {0}")]
    UnknownFamily(String),
}

fn instance(
    name: String,
    gr: RegularMultigraph,
    group: GroupTable,
    action: GroupAction,
) -> SweepInstance {
    SweepInstance {
        name,
        gr,
        group,
        action,
    }
}

fn cyclic(n: usize) -> Result<GroupTable, CorpusError> {
    Ok(build_group(&GroupDescriptor::Cyclic(n))?)
}

fn negation(g: &GroupTable) -> AutomorphismMap {
    let n = g.order();
    AutomorphismMap::new(g, (0..n).map(|x| (n - x) % n).collect())
        .expect("negation is an automorphism of a cyclic group")
}

/// Cycle graphs C_n as Cayley graphs of the cyclic group, n >= 3.
pub fn cycle_graph(n: usize) -> Result<SweepInstance, CorpusError> {
    let g = cyclic(n)?;
    let s = ConnectionSet::new(&g, vec![1, n - 1])?;
    let gr = cayley(&g, &s)?;
    let action = GroupAction::regular(&g);
    Ok(instance(format!("cycle-{n}"), gr, g, action))
}

pub fn odd_cycles(min: usize, max: usize) -> Result<Vec<SweepInstance>, CorpusError> {
    (min.max(3)..=max)
        .filter(|n| n % 2 == 1)
        .map(cycle_graph)
        .collect()
}

/// Cayley graph of the dihedral group of order 2n with the mixed-parity
/// connection set {r, r^{-1}, s, sr}; contains the triangle {e, s, sr}, so
/// it is non-bipartite for every n.
pub fn dihedral_cayley(n: usize) -> Result<SweepInstance, CorpusError> {
    let g = build_group(&GroupDescriptor::Dihedral(n))?;
    let s = ConnectionSet::new(&g, vec![1, n - 1, n, n + 1])?;
    let gr = cayley(&g, &s)?;
    let action = GroupAction::regular(&g);
    Ok(instance(format!("dihedral-{n}-cayley"), gr, g, action))
}

pub fn dihedral_cayley_range(min: usize, max: usize) -> Result<Vec<SweepInstance>, CorpusError> {
    (min.max(3)..=max).map(dihedral_cayley).collect()
}

fn find_perm(g: &GroupTable, one_line: &[usize]) -> usize {
    g.natural_perms()
        .expect("symmetric groups carry their permutation form")
        .iter()
        .position(|p| p == one_line)
        .expect("element present")
}

/// Cayley graph of the symmetric group on `n` points (n = 3 or 4) with a
/// mixed-parity connection set, hence non-bipartite.
pub fn symmetric_cayley(n: usize) -> Result<SweepInstance, CorpusError> {
    let g = build_group(&GroupDescriptor::Symmetric(n))?;
    let elements = match n {
        3 => vec![
            find_perm(&g, &[1, 0, 2]), // (0 1)
            find_perm(&g, &[1, 2, 0]), // (0 1 2)
            find_perm(&g, &[2, 0, 1]), // (0 2 1)
        ],
        4 => vec![
            find_perm(&g, &[1, 0, 2, 3]), // (0 1)
            find_perm(&g, &[1, 2, 3, 0]), // (0 1 2 3)
            find_perm(&g, &[3, 0, 1, 2]), // (0 3 2 1)
            find_perm(&g, &[1, 0, 3, 2]), // (0 1)(2 3)
        ],
        other => {
            return Err(CorpusError::UnknownFamily(format!(
                "symmetric-cayley supports n in {{3,4}}, got {other}"
            )))
        }
    };
    let s = ConnectionSet::new(&g, elements)?;
    let gr = cayley(&g, &s)?;
    let action = GroupAction::regular(&g);
    Ok(instance(format!("symmetric-{n}-cayley"), gr, g, action))
}

/// Cayley sum graph of cyclic(n) with S = {0, 1}; the solutions of 2x = s
/// give loops, so these are non-bipartite for every n >= 3.
pub fn cyclic_sum(n: usize) -> Result<SweepInstance, CorpusError> {
    let g = cyclic(n)?;
    let s = ConnectionSet::new(&g, vec![0, 1])?;
    let gr = cayley_sum(&g, &s)?;
    let action = GroupAction::regular(&g);
    Ok(instance(format!("cyclic-sum-{n}"), gr, g, action))
}

pub fn cyclic_sums(min: usize, max: usize) -> Result<Vec<SweepInstance>, CorpusError> {
    (min.max(3)..=max).map(cyclic_sum).collect()
}

/// Twisted Cayley graph of cyclic(n), S = {1, n-1}, twisted by negation;
/// undirected for every n, with a loop when n is odd.
pub fn twisted_negation(n: usize) -> Result<SweepInstance, CorpusError> {
    let g = cyclic(n)?;
    let s = ConnectionSet::new(&g, vec![1, n - 1])?;
    let sigma = negation(&g);
    let gr = twisted_cayley(&g, &s, &sigma)?;
    let action = GroupAction::regular(&g);
    Ok(instance(format!("twisted-neg-{n}"), gr, g, action))
}

pub fn twisted_negations(min: usize, max: usize) -> Result<Vec<SweepInstance>, CorpusError> {
    (min.max(3)..=max)
        .filter(|n| n % 2 == 1)
        .map(twisted_negation)
        .collect()
}

/// Twisted Cayley sum graph of cyclic(n), S = {1, n-1}, twisted by negation;
/// its adjacency coincides with the n-cycle, built through the twisted rule.
pub fn twisted_sum_negation(n: usize) -> Result<SweepInstance, CorpusError> {
    let g = cyclic(n)?;
    let s = ConnectionSet::new(&g, vec![1, n - 1])?;
    let sigma = negation(&g);
    let gr = twisted_cayley_sum(&g, &s, &sigma)?;
    let action = GroupAction::regular(&g);
    Ok(instance(format!("twisted-sum-neg-{n}"), gr, g, action))
}

pub fn twisted_sum_negations(min: usize, max: usize) -> Result<Vec<SweepInstance>, CorpusError> {
    (min.max(3)..=max)
        .filter(|n| n % 2 == 1)
        .map(twisted_sum_negation)
        .collect()
}

/// The Petersen graph as an orbit graph: the alternating group on 5 points
/// (which has no index-two subgroup) acting on unordered pairs, with the
/// orbit of one disjoint pair as edge set.
pub fn petersen() -> Result<SweepInstance, CorpusError> {
    let g = build_group(&GroupDescriptor::FromPermutations(vec![
        vec![1, 2, 0, 3, 4], // (0 1 2)
        vec![1, 2, 3, 4, 0], // (0 1 2 3 4)
    ]))?;
    let nat = GroupAction::natural(&g)?;
    let pairs = nat.on_pairs(&g)?;
    // vertex 0 is the pair {0,1}, vertex 7 is {2,3}
    let gr = from_action_graph(&pairs, &[(0, 7, 1)], "petersen".into())?;
    Ok(instance("petersen".into(), gr, g, pairs))
}

/// The standard corpus: >= 25 non-bipartite instances across all five
/// families, all within the default enumeration caps except the symmetric(4)
/// Cayley graph (subset scans run there; ternary scans are cap-skipped).
pub fn standard_corpus() -> Result<Vec<SweepInstance>, CorpusError> {
    let mut out = Vec::new();
    out.extend(odd_cycles(3, 13)?);
    out.extend(dihedral_cayley_range(3, 6)?);
    out.push(symmetric_cayley(3)?);
    out.push(symmetric_cayley(4)?);
    out.extend(cyclic_sums(3, 13)?);
    out.extend(twisted_negations(5, 11)?);
    out.extend(twisted_sum_negations(5, 13)?);
    out.push(petersen()?);
    debug_assert!(out.iter().all(|inst| !inst.gr.is_bipartite()));
    Ok(out)
}

/// Bipartite companions used by spectrum and equality-case tests.
pub fn bipartite_extras() -> Result<Vec<SweepInstance>, CorpusError> {
    let mut out = Vec::new();
    let g2 = cyclic(2)?;
    let s = ConnectionSet::new(&g2, vec![1])?;
    let gr = cayley(&g2, &s)?;
    let action = GroupAction::regular(&g2);
    out.push(instance("k2".into(), gr, g2, action));
    for n in [4usize, 6, 8] {
        out.push(cycle_graph(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let corpus = standard_corpus().unwrap();
        assert!(corpus.len() >= 25, "corpus has {} instances", corpus.len());
        let mut families: Vec<&str> = corpus
            .iter()
            .map(|i| i.gr.provenance().family.as_str())
            .collect();
        families.sort();
        families.dedup();
        assert_eq!(
            families,
            vec![
                "action_graph",
                "cayley",
                "cayley_sum",
                "twisted_cayley",
                "twisted_cayley_sum"
            ]
        );
        for inst in &corpus {
            assert!(
                !inst.gr.is_bipartite(),
                "{} must be non-bipartite",
                inst.name
            );
            assert!(inst.gr.is_connected(), "{} must be connected", inst.name);
            assert!(crate::group::is_transitive(&inst.action));
        }
    }

    #[test]
    fn corpus_commutation_invariants() {
        use crate::graph::{commutes_with_action, Family};
        for inst in standard_corpus().unwrap() {
            match inst.gr.provenance().family {
                Family::Cayley | Family::ActionGraph => {
                    assert!(
                        commutes_with_action(&inst.gr, &inst.action, 1),
                        "{} should commute with the action",
                        inst.name
                    );
                }
                Family::CayleySum | Family::TwistedCayley | Family::TwistedCayleySum => {
                    assert!(
                        commutes_with_action(&inst.gr, &inst.action, 2),
                        "{} should commute with the squared operator",
                        inst.name
                    );
                }
            }
        }
    }

    #[test]
    fn petersen_is_strongly_regular() {
        let p = petersen().unwrap();
        assert_eq!(p.gr.n(), 10);
        assert_eq!(p.gr.degree(), 3);
        // strongly regular parameters (10, 3, 0, 1): T^2 = 2I + (J - I - T)
        let sq = p.gr.square();
        for u in 0..10 {
            for v in 0..10 {
                let expected = if u == v {
                    3
                } else if p.gr.entry(u, v) > 0 {
                    0
                } else {
                    1
                };
                assert_eq!(sq.entry(u, v), expected, "square entry at ({u},{v})");
            }
        }
    }

    #[test]
    fn bipartite_extras_are_bipartite() {
        for inst in bipartite_extras().unwrap() {
            assert!(inst.gr.is_bipartite());
        }
    }
}
