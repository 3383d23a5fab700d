//! Perfect matchings on boolean supports and the decomposition of a regular
//! integer adjacency matrix into a sum of permutation matrices.

use crate::graph::RegularMultigraph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatchingError {
    /// No perfect matching; carries a Hall-violating set of rows (their
    /// column neighborhood is strictly smaller than the set).
    #[error("no perfect matching; Hall violator rows {violator:?}")]
    NoMatching { violator: Vec<usize> },
    #[error("matching extraction failed on a doubly regular matrix: {0}")]
    Internal(String),
}

/// Finds a permutation `pi` with `bip[pi[v]][v]` true for every column `v`,
/// or reports a Hall-violating row set.
///
/// Deterministic tie-break: rows are processed in ascending order, each first
/// grabs its smallest free compatible column, and augmenting paths scan
/// columns in ascending order.
pub fn perfect_matching(bip: &[Vec<bool>]) -> Result<Vec<usize>, MatchingError> {
    let n = bip.len();
    assert!(
        bip.iter().all(|row| row.len() == n),
        "matrix must be square"
    );
    let mut row_of_col: Vec<Option<usize>> = vec![None; n];

    fn augment(
        bip: &[Vec<bool>],
        r: usize,
        row_of_col: &mut [Option<usize>],
        visited_cols: &mut [bool],
        visited_rows: &mut Vec<usize>,
    ) -> bool {
        visited_rows.push(r);
        for c in 0..bip.len() {
            if !bip[r][c] || visited_cols[c] {
                continue;
            }
            visited_cols[c] = true;
            let free = match row_of_col[c] {
                None => true,
                Some(r2) => augment(bip, r2, row_of_col, visited_cols, visited_rows),
            };
            if free {
                row_of_col[c] = Some(r);
                return true;
            }
        }
        false
    }

    for r in 0..n {
        if let Some(c) = (0..n).find(|&c| bip[r][c] && row_of_col[c].is_none()) {
            row_of_col[c] = Some(r);
            continue;
        }
        let mut visited_cols = vec![false; n];
        let mut visited_rows = Vec::new();
        if !augment(
            bip,
            r,
            &mut row_of_col,
            &mut visited_cols,
            &mut visited_rows,
        ) {
            visited_rows.sort_unstable();
            visited_rows.dedup();
            return Err(MatchingError::NoMatching {
                violator: visited_rows,
            });
        }
    }
    let mut pi = vec![0usize; n];
    for (c, r) in row_of_col.iter().enumerate() {
        pi[c] = r.expect("all columns matched");
    }
    Ok(pi)
}

/// Exactly `d` permutations of the vertex set whose permutation matrices sum
/// to the adjacency matrix.
#[derive(Debug, Clone)]
pub struct PermutationList {
    perms: Vec<Vec<usize>>,
}

impl PermutationList {
    pub fn permutations(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    /// Re-sums the permutation matrices and compares with the adjacency.
    pub fn validate_against(&self, gr: &RegularMultigraph) -> bool {
        let n = gr.n();
        let mut sum = vec![0u32; n * n];
        for p in &self.perms {
            for (v, &u) in p.iter().enumerate() {
                sum[u * n + v] += 1;
            }
        }
        sum.as_slice() == gr.adjacency()
    }
}

/// Birkhoff-von Neumann decomposition of a d-regular integer adjacency
/// matrix: repeatedly extract a perfect matching of the positive-entry
/// support and decrement. A matching step can never fail on a doubly regular
/// matrix; a failure is reported as an internal error rather than papered
/// over.
pub fn birkhoff_decompose(gr: &RegularMultigraph) -> Result<PermutationList, MatchingError> {
    let n = gr.n();
    let d = gr.degree();
    let mut work: Vec<u32> = gr.adjacency().to_vec();
    let mut perms = Vec::with_capacity(d as usize);
    for round in 0..d {
        let bip: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| work[u * n + v] > 0).collect())
            .collect();
        let pi = perfect_matching(&bip)
            .map_err(|e| MatchingError::Internal(format!("round {round}: {e}")))?;
        for (v, &u) in pi.iter().enumerate() {
            work[u * n + v] -= 1;
        }
        perms.push(pi);
    }
    if work.iter().any(|&x| x != 0) {
        return Err(MatchingError::Internal(
            "residual entries after extracting d matchings".into(),
        ));
    }
    let list = PermutationList { perms };
    debug_assert!(list.validate_against(gr));
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cayley, ConnectionSet, Family, Provenance, RegularMultigraph};
    use crate::group::{build_group, GroupDescriptor};

    fn from_adj(n: usize, adj: Vec<u32>) -> RegularMultigraph {
        RegularMultigraph::from_adjacency(
            n,
            adj,
            Provenance {
                family: Family::ActionGraph,
                description: "test".into(),
            },
        )
        .unwrap()
    }

    #[test]
    fn matching_examples() {
        let id3 = vec![
            vec![true, false, false],
            vec![false, true, false],
            vec![false, false, true],
        ];
        assert_eq!(perfect_matching(&id3).unwrap(), vec![0, 1, 2]);

        let all2 = vec![vec![true, true], vec![true, true]];
        assert_eq!(perfect_matching(&all2).unwrap(), vec![0, 1]);

        let dead_row = vec![
            vec![true, true, true],
            vec![false, false, false],
            vec![true, true, true],
        ];
        match perfect_matching(&dead_row) {
            Err(MatchingError::NoMatching { violator }) => assert_eq!(violator, vec![1]),
            other => panic!("expected NoMatching, got {other:?}"),
        }
    }

    mod prop {
        use super::*;
        use proptest::prelude::*;
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;

        /// Random symmetric doubly-regular integer matrix: a sum of random
        /// permutation matrices, each added together with its transpose (or
        /// alone when it is an involution).
        pub(super) fn random_regular(n: usize, target_d: usize, seed: u64) -> RegularMultigraph {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut adj = vec![0u32; n * n];
            let mut d = 0usize;
            while d < target_d {
                if target_d - d >= 2 && rng.gen_bool(0.6) {
                    let mut p: Vec<usize> = (0..n).collect();
                    p.shuffle(&mut rng);
                    for (v, &u) in p.iter().enumerate() {
                        adj[u * n + v] += 1;
                        adj[v * n + u] += 1;
                    }
                    d += 2;
                } else {
                    // random involution: pair up a shuffled prefix
                    let mut pts: Vec<usize> = (0..n).collect();
                    pts.shuffle(&mut rng);
                    let mut p: Vec<usize> = (0..n).collect();
                    for i in 0..rng.gen_range(0..=n / 2) {
                        p[pts[2 * i]] = pts[2 * i + 1];
                        p[pts[2 * i + 1]] = pts[2 * i];
                    }
                    for (v, &u) in p.iter().enumerate() {
                        adj[u * n + v] += 1;
                    }
                    d += 1;
                }
            }
            RegularMultigraph::from_adjacency(
                n,
                adj,
                Provenance {
                    family: Family::ActionGraph,
                    description: "random".into(),
                },
            )
            .unwrap()
        }

        proptest! {
            #[test]
            fn birkhoff_roundtrip(n in 2usize..10, d in 1usize..7, seed: u64) {
                let gr = random_regular(n, d, seed);
                let list = birkhoff_decompose(&gr).unwrap();
                prop_assert_eq!(list.len() as u64, gr.degree());
                prop_assert!(list.validate_against(&gr));
            }
        }
    }

    #[test]
    fn birkhoff_examples() {
        // d copies of the identity
        let gr = from_adj(4, {
            let mut adj = vec![0u32; 16];
            for v in 0..4 {
                adj[v * 4 + v] = 3;
            }
            adj
        });
        let list = birkhoff_decompose(&gr).unwrap();
        assert_eq!(list.len(), 3);
        for p in list.permutations() {
            assert_eq!(p, &vec![0, 1, 2, 3]);
        }

        // 5-cycle: the two rotations, in some order
        let g5 = build_group(&GroupDescriptor::Cyclic(5)).unwrap();
        let c5 = cayley(&g5, &ConnectionSet::new(&g5, vec![1, 4]).unwrap()).unwrap();
        let list = birkhoff_decompose(&c5).unwrap();
        assert_eq!(list.len(), 2);
        let mut found: Vec<Vec<usize>> = list.permutations().to_vec();
        found.sort();
        let plus: Vec<usize> = (0..5).map(|v| (v + 1) % 5).collect();
        let minus: Vec<usize> = (0..5).map(|v| (v + 4) % 5).collect();
        let mut expect = vec![plus, minus];
        expect.sort();
        assert_eq!(found, expect);

        // triangle: two 3-cycles, inverses of each other
        let g3 = build_group(&GroupDescriptor::Cyclic(3)).unwrap();
        let tri = cayley(&g3, &ConnectionSet::new(&g3, vec![1, 2]).unwrap()).unwrap();
        let list = birkhoff_decompose(&tri).unwrap();
        assert_eq!(list.len(), 2);
        let (a, b) = (&list.permutations()[0], &list.permutations()[1]);
        for v in 0..3 {
            assert_eq!(a[b[v]], v);
            assert_eq!(b[a[v]], v);
        }
        assert!(list.validate_against(&tri));
    }
}
