//! Regular integer-matrix multigraphs and the algebraic graph families.
//!
//! Adjacency is an n-by-n nonnegative integer matrix with all row and column
//! sums equal to the degree; a diagonal entry `adj[v][v] = k` means `k` loops
//! at `v`, each contributing 1 to the degree. Undirectedness is validated by
//! explicit matrix symmetry rather than by per-family algebraic conditions:
//! the matrix check is universal, and builders never silently repair an
//! asymmetric construction.

use crate::bitset::Bitset;
use crate::group::{GroupAction, GroupTable};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("the construction is directed: adjacency differs at ({u},{v}) vs ({v},{u})")]
    DirectedResult { u: usize, v: usize },
    #[error("vertex degrees are not constant: vertex {v} has degree {got}, expected {expected}")]
    NotRegular { v: usize, got: u64, expected: u64 },
    #[error("adjacency is not invariant under the action (element {g} at ({u},{v}))")]
    NotInvariant { g: usize, u: usize, v: usize },
    #[error("a regular multigraph needs at least 2 vertices")]
    TooFewVertices,
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cayley,
    CayleySum,
    TwistedCayley,
    TwistedCayleySum,
    ActionGraph,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Cayley => "cayley",
            Family::CayleySum => "cayley_sum",
            Family::TwistedCayley => "twisted_cayley",
            Family::TwistedCayleySum => "twisted_cayley_sum",
            Family::ActionGraph => "action_graph",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Provenance {
    pub family: Family,
    pub description: String,
}

/// A sorted, duplicate-free, nonempty subset of group element indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionSet {
    elements: Vec<usize>,
}

impl ConnectionSet {
    pub fn new(g: &GroupTable, mut elements: Vec<usize>) -> Result<Self, BuildError> {
        elements.sort_unstable();
        elements.dedup();
        if elements.is_empty() {
            return Err(BuildError::InvalidConnectionSet(
                "connection set is empty".into(),
            ));
        }
        if elements.iter().any(|&s| s >= g.order()) {
            return Err(BuildError::InvalidConnectionSet(
                "connection set references elements outside the group".into(),
            ));
        }
        Ok(ConnectionSet { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// A group automorphism given as a permutation of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismMap {
    perm: Vec<usize>,
}

impl AutomorphismMap {
    pub fn identity(g: &GroupTable) -> Self {
        AutomorphismMap {
            perm: (0..g.order()).collect(),
        }
    }

    pub fn new(g: &GroupTable, perm: Vec<usize>) -> Result<Self, BuildError> {
        if perm.len() != g.order() {
            return Err(BuildError::InvalidAutomorphism("length mismatch".into()));
        }
        let mut seen = vec![false; perm.len()];
        for &x in &perm {
            if x >= perm.len() || seen[x] {
                return Err(BuildError::InvalidAutomorphism("not a bijection".into()));
            }
            seen[x] = true;
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                if perm[g.mul(a, b)] != g.mul(perm[a], perm[b]) {
                    return Err(BuildError::InvalidAutomorphism(format!(
                        "not a homomorphism at ({a},{b})"
                    )));
                }
            }
        }
        Ok(AutomorphismMap { perm })
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.perm[g]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }
}

/// An undirected d-regular multigraph on `{0..n-1}` with integer adjacency.
#[derive(Debug, Clone)]
pub struct RegularMultigraph {
    n: usize,
    d: u64,
    adj: Vec<u32>,
    provenance: Provenance,
}

impl RegularMultigraph {
    pub fn from_adjacency(
        n: usize,
        adj: Vec<u32>,
        provenance: Provenance,
    ) -> Result<Self, BuildError> {
        let gr = RegularMultigraph {
            n,
            d: 0,
            adj,
            provenance,
        };
        gr.finish_validation()
    }

    fn finish_validation(mut self) -> Result<Self, BuildError> {
        let n = self.n;
        if n < 2 {
            return Err(BuildError::TooFewVertices);
        }
        if self.adj.len() != n * n {
            return Err(BuildError::Internal("adjacency shape mismatch".into()));
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if self.adj[u * n + v] != self.adj[v * n + u] {
                    return Err(BuildError::DirectedResult { u, v });
                }
            }
        }
        let d: u64 = (0..n).map(|v| self.adj[v] as u64).sum();
        for u in 0..n {
            let row: u64 = (0..n).map(|v| self.adj[u * n + v] as u64).sum();
            if row != d {
                return Err(BuildError::NotRegular {
                    v: u,
                    got: row,
                    expected: d,
                });
            }
        }
        if d == 0 {
            return Err(BuildError::NotRegular {
                v: 0,
                got: 0,
                expected: 1,
            });
        }
        self.d = d;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u64 {
        self.d
    }

    #[inline]
    pub fn entry(&self, u: usize, v: usize) -> u32 {
        self.adj[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.adj[u * self.n..(u + 1) * self.n]
    }

    pub fn adjacency(&self) -> &[u32] {
        &self.adj
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The graph of the squared adjacency operator: length-2 walks, loops
    /// included, degree d^2.
    pub fn square(&self) -> RegularMultigraph {
        let n = self.n;
        let mut sq = vec![0u32; n * n];
        for u in 0..n {
            for k in 0..n {
                let a = self.adj[u * n + k] as u64;
                if a == 0 {
                    continue;
                }
                for v in 0..n {
                    sq[u * n + v] += (a * self.adj[k * n + v] as u64) as u32;
                }
            }
        }
        RegularMultigraph {
            n,
            d: self.d * self.d,
            adj: sq,
            provenance: Provenance {
                family: self.provenance.family,
                description: format!("square({})", self.provenance.description),
            },
        }
    }

    /// 2-colorability of the support graph; any loop forces non-bipartite.
    /// Multiplicities are irrelevant to the verdict.
    pub fn bipartite_verdict(&self) -> BipartiteVerdict {
        let n = self.n;
        for v in 0..n {
            if self.entry(v, v) > 0 {
                return BipartiteVerdict {
                    bipartite: false,
                    coloring: None,
                };
            }
        }
        let mut color = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if color[start] != usize::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if self.entry(u, v) == 0 {
                        continue;
                    }
                    if color[v] == usize::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return BipartiteVerdict {
                            bipartite: false,
                            coloring: None,
                        };
                    }
                }
            }
        }
        let mut class = Bitset::new(n);
        for (v, &c) in color.iter().enumerate() {
            if c == 0 {
                class.insert(v);
            }
        }
        BipartiteVerdict {
            bipartite: true,
            coloring: Some(class),
        }
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite_verdict().bipartite
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            #[allow(clippy::needless_range_loop)]
            for v in 0..n {
                if self.entry(u, v) > 0 && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BipartiteVerdict {
    pub bipartite: bool,
    /// One color class of the support graph when bipartite.
    pub coloring: Option<Bitset>,
}

fn cayley_like(
    g: &GroupTable,
    s: &ConnectionSet,
    family: Family,
    description: String,
    rule: impl Fn(usize, usize) -> usize,
) -> Result<RegularMultigraph, BuildError> {
    let n = g.order();
    let mut adj = vec![0u32; n * n];
    for x in 0..n {
        for &si in s.elements() {
            let y = rule(x, si);
            adj[y * n + x] += 1;
        }
    }
    RegularMultigraph::from_adjacency(
        n,
        adj,
        Provenance {
            family,
            description,
        },
    )
}

/// Cayley graph: `y` adjacent to `x` when `y = x s` for some `s` in `S`.
pub fn cayley(g: &GroupTable, s: &ConnectionSet) -> Result<RegularMultigraph, BuildError> {
    cayley_like(
        g,
        s,
        Family::Cayley,
        format!("cayley(S={})", label_set(g, s)),
        |x, si| g.mul(x, si),
    )
}

/// Cayley sum graph: `y` adjacent to `x` when `y = x^{-1} s` for some `s` in `S`.
pub fn cayley_sum(g: &GroupTable, s: &ConnectionSet) -> Result<RegularMultigraph, BuildError> {
    cayley_like(
        g,
        s,
        Family::CayleySum,
        format!("cayley_sum(S={})", label_set(g, s)),
        |x, si| g.mul(g.inv(x), si),
    )
}

/// Twisted Cayley graph: `y` adjacent to `x` when `y = sigma(x s)`.
pub fn twisted_cayley(
    g: &GroupTable,
    s: &ConnectionSet,
    sigma: &AutomorphismMap,
) -> Result<RegularMultigraph, BuildError> {
    cayley_like(
        g,
        s,
        Family::TwistedCayley,
        format!("twisted_cayley(S={})", label_set(g, s)),
        |x, si| sigma.apply(g.mul(x, si)),
    )
}

/// Twisted Cayley sum graph: `y` adjacent to `x` when `y = sigma(x^{-1} s)`.
///
/// A symmetric adjacency matrix forces `S = sigma(S)`; that is re-asserted
/// after the matrix check and a violation is reported as an internal error.
pub fn twisted_cayley_sum(
    g: &GroupTable,
    s: &ConnectionSet,
    sigma: &AutomorphismMap,
) -> Result<RegularMultigraph, BuildError> {
    let gr = cayley_like(
        g,
        s,
        Family::TwistedCayleySum,
        format!("twisted_cayley_sum(S={})", label_set(g, s)),
        |x, si| sigma.apply(g.mul(g.inv(x), si)),
    )?;
    let sigma_s: std::collections::BTreeSet<usize> =
        s.elements().iter().map(|&x| sigma.apply(x)).collect();
    if !sigma_s.iter().copied().eq(s.elements().iter().copied()) {
        return Err(BuildError::Internal(
            "matrix is symmetric but S != sigma(S); construction rule violated".into(),
        ));
    }
    Ok(gr)
}

fn label_set(g: &GroupTable, s: &ConnectionSet) -> String {
    let mut out = String::from("{");
    for (i, &x) in s.elements().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(g.label(x));
    }
    out.push('}');
    out
}

/// Builds the orbit closure of the given base edges under the action. Each
/// distinct image of a base edge contributes its multiplicity to both
/// directions (once to the diagonal for loops). The action must act by graph
/// automorphisms on the result, and the result must be regular; both are
/// validated.
pub fn from_action_graph(
    a: &GroupAction,
    base_edges: &[(usize, usize, u32)],
    description: String,
) -> Result<RegularMultigraph, BuildError> {
    let n = a.degree();
    if n < 2 {
        return Err(BuildError::TooFewVertices);
    }
    if base_edges.is_empty() {
        return Err(BuildError::InvalidConnectionSet(
            "no base edges given".into(),
        ));
    }
    let mut adj = vec![0u32; n * n];
    for &(u, v, m) in base_edges {
        if u >= n || v >= n {
            return Err(BuildError::InvalidConnectionSet(format!(
                "base edge ({u},{v}) outside the vertex set"
            )));
        }
        if m == 0 {
            continue;
        }
        let mut seen = std::collections::BTreeSet::new();
        for g in 0..a.group_order() {
            let (x, y) = (a.apply(g, u), a.apply(g, v));
            let key = (x.min(y), x.max(y));
            if seen.insert(key) {
                if x == y {
                    adj[x * n + x] += m;
                } else {
                    adj[x * n + y] += m;
                    adj[y * n + x] += m;
                }
            }
        }
    }
    let gr = RegularMultigraph::from_adjacency(
        n,
        adj,
        Provenance {
            family: Family::ActionGraph,
            description,
        },
    )?;
    // orbit closures are invariant by construction; kept as a safety net
    if let Some((g, u, v)) = first_invariance_violation(&gr, a, 1) {
        return Err(BuildError::NotInvariant { g, u, v });
    }
    Ok(gr)
}

fn power_matrix(gr: &RegularMultigraph, power: u8) -> Vec<u32> {
    match power {
        1 => gr.adjacency().to_vec(),
        2 => gr.square().adjacency().to_vec(),
        _ => panic!("only powers 1 and 2 are supported"),
    }
}

fn first_invariance_violation(
    gr: &RegularMultigraph,
    a: &GroupAction,
    power: u8,
) -> Option<(usize, usize, usize)> {
    let n = gr.n();
    assert_eq!(a.degree(), n, "action must act on the vertex set");
    let m = power_matrix(gr, power);
    for g in 0..a.group_order() {
        for u in 0..n {
            let gu = a.apply(g, u);
            for v in 0..n {
                if m[gu * n + a.apply(g, v)] != m[u * n + v] {
                    return Some((g, u, v));
                }
            }
        }
    }
    None
}

/// True when `adj^power` is invariant under conjugation by every permutation
/// of the action.
pub fn commutes_with_action(gr: &RegularMultigraph, a: &GroupAction, power: u8) -> bool {
    first_invariance_violation(gr, a, power).is_none()
}

/// Convenience: build the connection set from raw indices and take the left
/// multiplication action used by the algebraic families.
pub fn left_action(g: &GroupTable) -> GroupAction {
    GroupAction::regular(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupDescriptor};

    fn cyclic(n: usize) -> GroupTable {
        build_group(&GroupDescriptor::Cyclic(n)).unwrap()
    }

    fn conn(g: &GroupTable, els: &[usize]) -> ConnectionSet {
        ConnectionSet::new(g, els.to_vec()).unwrap()
    }

    #[test]
    fn cayley_examples() {
        let g5 = cyclic(5);
        let c5 = cayley(&g5, &conn(&g5, &[1, 4])).unwrap();
        assert_eq!(c5.degree(), 2);
        for x in 0..5 {
            assert_eq!(c5.entry((x + 1) % 5, x), 1);
            assert_eq!(c5.entry((x + 4) % 5, x), 1);
        }

        let g2 = cyclic(2);
        let k2 = cayley(&g2, &conn(&g2, &[1])).unwrap();
        assert_eq!(k2.degree(), 1);
        assert_eq!(k2.adjacency(), &[0, 1, 1, 0]);

        let g4 = cyclic(4);
        match cayley(&g4, &conn(&g4, &[1])) {
            Err(BuildError::DirectedResult { .. }) => {}
            other => panic!("expected DirectedResult, got {other:?}"),
        }
    }

    #[test]
    fn cayley_sum_examples() {
        let g3 = cyclic(3);
        let gr = cayley_sum(&g3, &conn(&g3, &[0])).unwrap();
        assert_eq!(gr.degree(), 1);
        assert_eq!(gr.entry(0, 0), 1);
        assert_eq!(gr.entry(1, 2), 1);
        assert_eq!(gr.entry(2, 1), 1);

        let g5 = cyclic(5);
        let gr = cayley_sum(&g5, &conn(&g5, &[0, 1])).unwrap();
        assert_eq!(gr.degree(), 2);
        // loops exactly at the solutions of 2x = s
        assert_eq!(gr.entry(0, 0), 1);
        assert_eq!(gr.entry(3, 3), 1);
        for v in [1, 2, 4] {
            assert_eq!(gr.entry(v, v), 0);
        }
    }

    #[test]
    fn cayley_sum_abelian_always_symmetric() {
        for n in 2..=9 {
            let g = cyclic(n);
            for mask in 1u32..(1 << n.min(6)) {
                let els: Vec<usize> = (0..n.min(6)).filter(|&i| mask >> i & 1 == 1).collect();
                let s = conn(&g, &els);
                cayley_sum(&g, &s).expect("abelian Cayley sum graphs are undirected");
            }
        }
    }

    #[test]
    fn twisted_identity_matches_untwisted() {
        let g = cyclic(7);
        let s = conn(&g, &[1, 2, 5, 6]);
        let id = AutomorphismMap::identity(&g);
        assert_eq!(
            cayley(&g, &s).unwrap().adjacency(),
            twisted_cayley(&g, &s, &id).unwrap().adjacency()
        );
        assert_eq!(
            cayley_sum(&g, &s).unwrap().adjacency(),
            twisted_cayley_sum(&g, &s, &id).unwrap().adjacency()
        );
    }

    fn scaling_automorphism(g: &GroupTable, k: usize) -> AutomorphismMap {
        // x -> k*x on a cyclic group, valid when gcd(k, n) = 1
        let n = g.order();
        AutomorphismMap::new(g, (0..n).map(|x| (k * x) % n).collect()).unwrap()
    }

    #[test]
    fn twisted_cayley_symmetry_is_checked() {
        // direct expansion: y = 2(x+s) on cyclic(5) with S = {1,4} is asymmetric
        let g5 = cyclic(5);
        let sigma = scaling_automorphism(&g5, 2);
        match twisted_cayley(&g5, &conn(&g5, &[1, 4]), &sigma) {
            Err(BuildError::DirectedResult { .. }) => {}
            other => panic!("expected DirectedResult, got {other:?}"),
        }

        // y = 3(x+s) on cyclic(8) with S = {1,7} is asymmetric as well
        let g8 = cyclic(8);
        let sigma = scaling_automorphism(&g8, 3);
        match twisted_cayley(&g8, &conn(&g8, &[1, 7]), &sigma) {
            Err(BuildError::DirectedResult { .. }) => {}
            other => panic!("expected DirectedResult, got {other:?}"),
        }

        // ... while S = {2,6} satisfies 3S = -S and is accepted, with loops
        let gr = twisted_cayley(&g8, &conn(&g8, &[2, 6]), &sigma).unwrap();
        assert_eq!(gr.degree(), 2);
        assert_eq!(gr.entry(1, 1), 1);
        assert_eq!(gr.entry(5, 5), 1);
        assert!(!gr.is_bipartite());
    }

    #[test]
    fn twisted_cayley_sum_symmetry_and_sigma_s() {
        let g3 = cyclic(3);
        let sigma = scaling_automorphism(&g3, 2);
        match twisted_cayley_sum(&g3, &conn(&g3, &[1]), &sigma) {
            Err(BuildError::DirectedResult { .. }) => {}
            other => panic!("expected DirectedResult, got {other:?}"),
        }

        // sigma(S) = S is necessary but not sufficient: y = 2(-x+0) = 3x on
        // cyclic(5) is not an involution, so the matrix check rejects it
        let g5 = cyclic(5);
        let sigma = scaling_automorphism(&g5, 2);
        match twisted_cayley_sum(&g5, &conn(&g5, &[0]), &sigma) {
            Err(BuildError::DirectedResult { .. }) => {}
            other => panic!("expected DirectedResult, got {other:?}"),
        }

        // negation twist on cyclic(9) with S = {1,8} is the 9-cycle
        let g9 = cyclic(9);
        let neg = scaling_automorphism(&g9, 8);
        let gr = twisted_cayley_sum(&g9, &conn(&g9, &[1, 8]), &neg).unwrap();
        let c9 = cayley(&g9, &conn(&g9, &[1, 8])).unwrap();
        assert_eq!(gr.adjacency(), c9.adjacency());
    }

    #[test]
    fn action_graph_examples() {
        // 5-cycle from the regular action of cyclic(5)
        let g5 = cyclic(5);
        let act = GroupAction::regular(&g5);
        let gr = from_action_graph(&act, &[(0, 1, 1)], "c5-orbit".into()).unwrap();
        let c5 = cayley(&g5, &conn(&g5, &[1, 4])).unwrap();
        assert_eq!(gr.adjacency(), c5.adjacency());

        // Petersen graph: alternating group on 5 points acting on 2-subsets,
        // orbit of the disjoint pair ({0,1},{2,3})
        let a5 = build_group(&GroupDescriptor::FromPermutations(vec![
            vec![1, 2, 0, 3, 4],
            vec![1, 2, 3, 4, 0],
        ]))
        .unwrap();
        assert_eq!(a5.order(), 60);
        let nat = GroupAction::natural(&a5).unwrap();
        let pairs = nat.on_pairs(&a5).unwrap();
        assert_eq!(pairs.degree(), 10);
        // pair indices: (0,1) -> 0 and (2,3) -> 7 in lexicographic order
        let petersen = from_action_graph(&pairs, &[(0, 7, 1)], "petersen".into()).unwrap();
        assert_eq!(petersen.n(), 10);
        assert_eq!(petersen.degree(), 3);
        assert!(!petersen.is_bipartite());
        assert!(petersen.is_connected());
        // girth 5: no triangles and no 4-cycles through vertex 0
        let sq = petersen.square();
        assert_eq!(sq.entry(0, 0), 3);

        // an intransitive action produces an irregular closure
        let flip = build_group(&GroupDescriptor::FromPermutations(vec![vec![1, 0, 2]])).unwrap();
        let act = GroupAction::natural(&flip).unwrap();
        match from_action_graph(&act, &[(0, 2, 1)], "irregular".into()) {
            Err(BuildError::NotRegular { .. }) => {}
            other => panic!("expected NotRegular, got {other:?}"),
        }
    }

    #[test]
    fn square_examples() {
        let g3 = cyclic(3);
        let tri = cayley(&g3, &conn(&g3, &[1, 2])).unwrap();
        let sq = tri.square();
        assert_eq!(sq.adjacency(), &[2, 1, 1, 1, 2, 1, 1, 1, 2]);
        assert_eq!(sq.degree(), 4);

        let g2 = cyclic(2);
        let k2 = cayley(&g2, &conn(&g2, &[1])).unwrap();
        assert_eq!(k2.square().adjacency(), &[1, 0, 0, 1]);

        // squaring equals exact integer matrix multiplication
        let g5 = cyclic(5);
        let gr = cayley_sum(&g5, &conn(&g5, &[0, 1])).unwrap();
        let sq = gr.square();
        for u in 0..5 {
            for v in 0..5 {
                let direct: u32 = (0..5).map(|k| gr.entry(u, k) * gr.entry(k, v)).sum();
                assert_eq!(sq.entry(u, v), direct);
            }
        }
    }

    #[test]
    fn bipartite_examples() {
        let g5 = cyclic(5);
        assert!(!cayley(&g5, &conn(&g5, &[1, 4])).unwrap().is_bipartite());

        let g4 = cyclic(4);
        let c4 = cayley(&g4, &conn(&g4, &[1, 3])).unwrap();
        let verdict = c4.bipartite_verdict();
        assert!(verdict.bipartite);
        assert_eq!(verdict.coloring.unwrap().to_indices(), vec![0, 2]);

        let g3 = cyclic(3);
        assert!(!cayley_sum(&g3, &conn(&g3, &[0])).unwrap().is_bipartite());
    }

    #[test]
    fn commutation_with_left_action() {
        let g5 = cyclic(5);
        let act = GroupAction::regular(&g5);
        let c5 = cayley(&g5, &conn(&g5, &[1, 4])).unwrap();
        assert!(commutes_with_action(&c5, &act, 1));

        let dih = build_group(&GroupDescriptor::Dihedral(4)).unwrap();
        let act_d = GroupAction::regular(&dih);
        let s = conn(&dih, &[1, 3, 4, 5]);
        let gr = cayley(&dih, &s).unwrap();
        assert!(commutes_with_action(&gr, &act_d, 1));

        // Cayley sum graphs commute with the square of the adjacency operator
        let sum5 = cayley_sum(&g5, &conn(&g5, &[0, 1])).unwrap();
        assert!(commutes_with_action(&sum5, &act, 2));
        assert!(!commutes_with_action(&sum5, &act, 1));

        // rewiring two edges keeps regularity but breaks invariance:
        // replace {0,1} and {2,3} by {0,2} and {1,3}
        let mut adj = c5.adjacency().to_vec();
        let mut unlink = |u: usize, v: usize| {
            adj[u * 5 + v] -= 1;
            adj[v * 5 + u] -= 1;
        };
        unlink(0, 1);
        unlink(2, 3);
        let mut link = |u: usize, v: usize| {
            adj[u * 5 + v] += 1;
            adj[v * 5 + u] += 1;
        };
        link(0, 2);
        link(1, 3);
        let perturbed = RegularMultigraph::from_adjacency(
            5,
            adj,
            Provenance {
                family: Family::Cayley,
                description: "perturbed".into(),
            },
        )
        .unwrap();
        assert!(!commutes_with_action(&perturbed, &act, 1));
    }
}
