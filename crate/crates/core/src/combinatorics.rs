//! Exact computation of the four isoperimetric constants with optimizing
//! witnesses, plus operator-count edge statistics.
//!
//! All constants are exact rationals computed from integer counts; no
//! floating point enters this module. Enumeration order and tie-breaks are
//! fixed (ascending bitmask for subsets, lexicographic `(L, R)` for pairs) so
//! witnesses are reproducible. Subset scans walk a Gray code and maintain
//! per-vertex incidence counts incrementally; ternary scans maintain the
//! counts under a mixed-radix counter. Scans can be partitioned across
//! workers by high-order mask bits; the merged result is independent of the
//! partitioning.

use crate::bitset::Bitset;
use crate::graph::RegularMultigraph;
use crate::ratio::ExactRatio;
use serde::Serialize;
use thiserror::Error;

/// Caps keep the worst-case exhaustive scans at desk scale.
#[derive(Debug, Clone)]
pub struct EnumConfig {
    /// Max vertex count for subset (2^n) scans.
    pub subset_cap: usize,
    /// Max vertex count for ternary (3^n) scans.
    pub ternary_cap: usize,
    /// Worker threads for partitioned scans; results are identical for any
    /// value.
    pub jobs: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            subset_cap: 24,
            ternary_cap: 16,
            jobs: 1,
        }
    }
}

#[derive(Debug, Error)]
pub enum EnumError {
    #[error("graph on {n} vertices exceeds the enumeration cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// The minimizing set (or disjoint pair) behind a constant.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CutWitness {
    Subset {
        set: Bitset,
        value: ExactRatio,
    },
    Pair {
        left: Bitset,
        right: Bitset,
        value: ExactRatio,
    },
}

impl CutWitness {
    pub fn value(&self) -> &ExactRatio {
        match self {
            CutWitness::Subset { value, .. } => value,
            CutWitness::Pair { value, .. } => value,
        }
    }
}

/// The operator count `<T 1_A, 1_B> = sum_{u in B, v in A} adj[u][v]`.
/// Internal incidences of `A ∩ B` (including loops) count once per ordered
/// occurrence.
pub fn edge_count(gr: &RegularMultigraph, a: &Bitset, b: &Bitset) -> u64 {
    let mut total = 0u64;
    for u in b.iter() {
        let row = gr.row(u);
        for v in a.iter() {
            total += row[v] as u64;
        }
    }
    total
}

/// `vol_{T^power}(S) = <T^power 1_V, 1_S>`; equals `d^power * |S|` because
/// row sums are constant, and that identity is asserted.
pub fn vol(gr: &RegularMultigraph, s: &Bitset, power: u8) -> u64 {
    let computed: u64 = match power {
        1 => s
            .iter()
            .map(|u| gr.row(u).iter().map(|&x| x as u64).sum::<u64>())
            .sum(),
        2 => {
            let sq = gr.square();
            s.iter()
                .map(|u| sq.row(u).iter().map(|&x| x as u64).sum::<u64>())
                .sum()
        }
        _ => panic!("only powers 1 and 2 are supported"),
    };
    let d_pow = match power {
        1 => gr.degree(),
        _ => gr.degree() * gr.degree(),
    };
    assert_eq!(computed, d_pow * s.count() as u64);
    computed
}

/// Best value seen by a scan: numerator, denominator, and the witness masks
/// for tie-breaking.
#[derive(Clone, Copy, Debug)]
struct Best {
    num: u64,
    den: u64,
    mask: u64,
    mask2: u64,
}

impl Best {
    fn better_than(&self, other: &Best) -> bool {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs < rhs || (lhs == rhs && (self.mask, self.mask2) < (other.mask, other.mask2))
    }
}

fn merge(best: Option<Best>, cand: Best) -> Option<Best> {
    match best {
        None => Some(cand),
        Some(b) if cand.better_than(&b) => Some(cand),
        some => some,
    }
}

/// Walks all subset masks of `width` low bits above the fixed `base`, calling
/// `visit(mask, incidence, popcount)` for every mask. `incidence[v]` is
/// maintained as `sum_{u in S} adj[v][u]`.
fn subset_walk(
    gr: &RegularMultigraph,
    base: u64,
    width: usize,
    mut visit: impl FnMut(u64, &[u64], u32),
) {
    let n = gr.n();
    let mut inc = vec![0u64; n];
    let mut mask = base;
    let mut pop = 0u32;
    for v in 0..n {
        if base >> v & 1 == 1 {
            pop += 1;
            for (w, slot) in inc.iter_mut().enumerate() {
                *slot += gr.entry(w, v) as u64;
            }
        }
    }
    visit(mask, &inc, pop);
    for i in 0u64..((1u64 << width) - 1) {
        let flip = (i + 1).trailing_zeros() as usize;
        let bit = 1u64 << flip;
        if mask & bit == 0 {
            mask |= bit;
            pop += 1;
            for (w, slot) in inc.iter_mut().enumerate() {
                *slot += gr.entry(w, flip) as u64;
            }
        } else {
            mask &= !bit;
            pop -= 1;
            for (w, slot) in inc.iter_mut().enumerate() {
                *slot -= gr.entry(w, flip) as u64;
            }
        }
        visit(mask, &inc, pop);
    }
}

/// Exhaustive scan over nonempty subsets with `|S| <= n/2`, minimizing the
/// value produced by `eval`. Partitioned by high-order mask bits when
/// `jobs > 1`; the winner is merged with the global tie-break, so the result
/// does not depend on the partitioning.
fn subset_scan<F>(gr: &RegularMultigraph, cfg: &EnumConfig, eval: F) -> Best
where
    F: Fn(u64, &[u64], u32) -> (u64, u64) + Sync,
{
    let n = gr.n();
    let jobs = cfg.jobs.clamp(1, 64);
    let high = if jobs == 1 {
        0
    } else {
        (jobs.next_power_of_two().trailing_zeros() as usize).min(n.saturating_sub(1))
    };
    let width = n - high;
    let blocks: Vec<u64> = (0..(1u64 << high)).collect();
    let run_block = |base_bits: u64| -> Option<Best> {
        let base = base_bits << width;
        let mut best: Option<Best> = None;
        subset_walk(gr, base, width, |mask, inc, pop| {
            if pop == 0 || 2 * pop as usize > n {
                return;
            }
            let (num, den) = eval(mask, inc, pop);
            best = merge(
                best,
                Best {
                    num,
                    den,
                    mask,
                    mask2: 0,
                },
            );
        });
        best
    };
    let results: Vec<Option<Best>> = if jobs == 1 {
        blocks.iter().map(|&b| run_block(b)).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = blocks
                .chunks(blocks.len().div_ceil(jobs))
                .map(|chunk| {
                    scope.spawn(|| {
                        chunk.iter().fold(None, |acc, &b| match run_block(b) {
                            Some(c) => merge(acc, c),
                            None => acc,
                        })
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("scan worker panicked"))
                .collect()
        })
    };
    results
        .into_iter()
        .flatten()
        .fold(None, merge)
        .expect("nonempty scan")
}

/// Hard ceilings independent of configuration; beyond these the scans would
/// not terminate in reasonable time and the mask bookkeeping would overflow.
const SUBSET_HARD_LIMIT: usize = 30;
const TERNARY_HARD_LIMIT: usize = 24;

fn check_subset_cap(gr: &RegularMultigraph, cfg: &EnumConfig) -> Result<(), EnumError> {
    let cap = cfg.subset_cap.min(SUBSET_HARD_LIMIT);
    if gr.n() > cap {
        return Err(EnumError::TooLarge { n: gr.n(), cap });
    }
    Ok(())
}

/// Edge Cheeger constant: min over nonempty `S` with `|S| <= n/2` of
/// `|boundary edges of S| / (d |S|)`, with the operator count of the
/// boundary. Ties break toward the smallest bitmask.
pub fn edge_cheeger(gr: &RegularMultigraph) -> Result<(ExactRatio, CutWitness), EnumError> {
    edge_cheeger_with(gr, &EnumConfig::default())
}

pub fn edge_cheeger_with(
    gr: &RegularMultigraph,
    cfg: &EnumConfig,
) -> Result<(ExactRatio, CutWitness), EnumError> {
    check_subset_cap(gr, cfg)?;
    let d = gr.degree();
    let best = subset_scan(gr, cfg, |mask, inc, pop| {
        // boundary = sum over v outside S of its incidence into S
        let mut boundary = 0u64;
        for (v, &c) in inc.iter().enumerate() {
            if mask >> v & 1 == 0 {
                boundary += c;
            }
        }
        (boundary, d * pop as u64)
    });
    let value = ExactRatio::new(best.num, best.den);
    let witness = CutWitness::Subset {
        set: Bitset::from_mask(gr.n(), best.mask),
        value: value.clone(),
    };
    Ok((value, witness))
}

/// Vertex Cheeger constant: min over nonempty `S` with `|S| <= n/2` of
/// `|N(S) \ S| / |S|`.
pub fn vertex_cheeger(gr: &RegularMultigraph) -> Result<(ExactRatio, CutWitness), EnumError> {
    vertex_cheeger_with(gr, &EnumConfig::default())
}

pub fn vertex_cheeger_with(
    gr: &RegularMultigraph,
    cfg: &EnumConfig,
) -> Result<(ExactRatio, CutWitness), EnumError> {
    check_subset_cap(gr, cfg)?;
    let best = subset_scan(gr, cfg, |mask, inc, pop| {
        let mut boundary = 0u64;
        for (v, &c) in inc.iter().enumerate() {
            if mask >> v & 1 == 0 && c > 0 {
                boundary += 1;
            }
        }
        (boundary, pop as u64)
    });
    let value = ExactRatio::new(best.num, best.den);
    let witness = CutWitness::Subset {
        set: Bitset::from_mask(gr.n(), best.mask),
        value: value.clone(),
    };
    Ok((value, witness))
}

/// State for the ternary (none/L/R) scans.
struct TernaryState<'a> {
    gr: &'a RegularMultigraph,
    digits: Vec<u8>,
    e_left: Vec<u64>,
    e_right: Vec<u64>,
    cross: u64,
    size_left: u32,
    size_right: u32,
    left_mask: u64,
    right_mask: u64,
}

impl<'a> TernaryState<'a> {
    fn at_index(gr: &'a RegularMultigraph, index: u64) -> Self {
        let n = gr.n();
        let mut st = TernaryState {
            gr,
            digits: vec![0; n],
            e_left: vec![0; n],
            e_right: vec![0; n],
            cross: 0,
            size_left: 0,
            size_right: 0,
            left_mask: 0,
            right_mask: 0,
        };
        let mut rest = index;
        for v in 0..n {
            let digit = (rest % 3) as u8;
            rest /= 3;
            if digit != 0 {
                st.transition(v, 0, digit);
                st.digits[v] = digit;
            }
        }
        st
    }

    /// Applies the role change of vertex `v` to the incidence sums and the
    /// cross count. Cross deltas always read the opposite side's sum, which
    /// the row updates for `v` never touch.
    fn transition(&mut self, v: usize, old: u8, new: u8) {
        let n = self.gr.n();
        let bit = 1u64 << v;
        match old {
            1 => {
                self.cross -= self.e_right[v];
                self.size_left -= 1;
                self.left_mask &= !bit;
                for w in 0..n {
                    self.e_left[w] -= self.gr.entry(w, v) as u64;
                }
            }
            2 => {
                self.cross -= self.e_left[v];
                self.size_right -= 1;
                self.right_mask &= !bit;
                for w in 0..n {
                    self.e_right[w] -= self.gr.entry(w, v) as u64;
                }
            }
            _ => {}
        }
        match new {
            1 => {
                self.cross += self.e_right[v];
                self.size_left += 1;
                self.left_mask |= bit;
                for w in 0..n {
                    self.e_left[w] += self.gr.entry(w, v) as u64;
                }
            }
            2 => {
                self.cross += self.e_left[v];
                self.size_right += 1;
                self.right_mask |= bit;
                for w in 0..n {
                    self.e_right[w] += self.gr.entry(w, v) as u64;
                }
            }
            _ => {}
        }
    }

    /// Mixed-radix increment, least significant digit first.
    fn increment(&mut self) {
        for v in 0..self.digits.len() {
            let old = self.digits[v];
            if old == 2 {
                self.transition(v, 2, 0);
                self.digits[v] = 0;
            } else {
                self.transition(v, old, old + 1);
                self.digits[v] = old + 1;
                return;
            }
        }
        unreachable!("counter overflow");
    }
}

fn ternary_scan<F>(gr: &RegularMultigraph, cfg: &EnumConfig, eval: F) -> Best
where
    F: Fn(&TernaryState) -> (u64, u64) + Sync,
{
    let n = gr.n();
    let total = 3u64.pow(n as u32);
    let jobs = cfg.jobs.clamp(1, 64) as u64;
    let chunk = (total - 1).div_ceil(jobs).max(1);
    let ranges: Vec<(u64, u64)> = (0..jobs)
        .map(|j| (1 + j * chunk, (1 + (j + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();
    let run_range = |lo: u64, hi: u64| -> Option<Best> {
        let mut st = TernaryState::at_index(gr, lo);
        let mut best: Option<Best> = None;
        let mut idx = lo;
        loop {
            let (num, den) = eval(&st);
            best = merge(
                best,
                Best {
                    num,
                    den,
                    mask: st.left_mask,
                    mask2: st.right_mask,
                },
            );
            idx += 1;
            if idx >= hi {
                break;
            }
            st.increment();
        }
        best
    };
    let results: Vec<Option<Best>> = if ranges.len() == 1 {
        vec![run_range(ranges[0].0, ranges[0].1)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(lo, hi)| scope.spawn(move || run_range(lo, hi)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("scan worker panicked"))
                .collect()
        })
    };
    results
        .into_iter()
        .flatten()
        .fold(None, merge)
        .expect("nonempty scan")
}

fn check_ternary_cap(gr: &RegularMultigraph, cfg: &EnumConfig) -> Result<(), EnumError> {
    let cap = cfg.ternary_cap.min(TERNARY_HARD_LIMIT);
    if gr.n() > cap {
        return Err(EnumError::TooLarge { n: gr.n(), cap });
    }
    Ok(())
}

fn pair_result(gr: &RegularMultigraph, best: Best) -> (ExactRatio, CutWitness) {
    let value = ExactRatio::new(best.num, best.den);
    let witness = CutWitness::Pair {
        left: Bitset::from_mask(gr.n(), best.mask),
        right: Bitset::from_mask(gr.n(), best.mask2),
        value: value.clone(),
    };
    (value, witness)
}

/// Edge bipartiteness constant: min over disjoint `L, R` (union nonempty) of
/// `(|E(L, R^c)| + |E(R, L^c)|) / (d |L u R|)`. Ties break toward the
/// lexicographically smallest `(L, R)` mask pair.
pub fn edge_bipartiteness(gr: &RegularMultigraph) -> Result<(ExactRatio, CutWitness), EnumError> {
    edge_bipartiteness_with(gr, &EnumConfig::default())
}

pub fn edge_bipartiteness_with(
    gr: &RegularMultigraph,
    cfg: &EnumConfig,
) -> Result<(ExactRatio, CutWitness), EnumError> {
    check_ternary_cap(gr, cfg)?;
    let d = gr.degree();
    // |E(L,R^c)| + |E(R,L^c)| = d(|L|+|R|) - 2 E(L,R) by column regularity
    let best = ternary_scan(gr, cfg, |st| {
        let k = (st.size_left + st.size_right) as u64;
        (d * k - 2 * st.cross, d * k)
    });
    Ok(pair_result(gr, best))
}

/// Vertex bipartiteness constant: min over disjoint `L, R` of
/// `(|L n N(L)| + |R n N(R)| + |vertex boundary of L u R|) / |L u R|`.
pub fn vertex_bipartiteness(gr: &RegularMultigraph) -> Result<(ExactRatio, CutWitness), EnumError> {
    vertex_bipartiteness_with(gr, &EnumConfig::default())
}

pub fn vertex_bipartiteness_with(
    gr: &RegularMultigraph,
    cfg: &EnumConfig,
) -> Result<(ExactRatio, CutWitness), EnumError> {
    check_ternary_cap(gr, cfg)?;
    let best = ternary_scan(gr, cfg, |st| {
        let mut defect = 0u64;
        for (v, &digit) in st.digits.iter().enumerate() {
            let hit = match digit {
                1 => st.e_left[v] > 0,
                2 => st.e_right[v] > 0,
                _ => st.e_left[v] + st.e_right[v] > 0,
            };
            if hit {
                defect += 1;
            }
        }
        (defect, (st.size_left + st.size_right) as u64)
    });
    Ok(pair_result(gr, best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cayley, cayley_sum, ConnectionSet};
    use crate::group::{build_group, GroupDescriptor, GroupTable};

    fn cyclic(n: usize) -> GroupTable {
        build_group(&GroupDescriptor::Cyclic(n)).unwrap()
    }

    fn cycle(n: usize) -> RegularMultigraph {
        let g = cyclic(n);
        let s = ConnectionSet::new(&g, vec![1, n - 1]).unwrap();
        cayley(&g, &s).unwrap()
    }

    fn triangle() -> RegularMultigraph {
        let g = cyclic(3);
        cayley(&g, &ConnectionSet::new(&g, vec![1, 2]).unwrap()).unwrap()
    }

    #[test]
    fn edge_count_examples() {
        let tri = triangle();
        let all = Bitset::from_mask(3, 0b111);
        assert_eq!(edge_count(&tri, &all, &all), 6);
        assert_eq!(edge_count(&tri, &Bitset::new(3), &all), 0);

        let c5 = cycle(5);
        let a = Bitset::from_mask(5, 0b00001);
        let b = Bitset::from_mask(5, 0b10010);
        assert_eq!(edge_count(&c5, &a, &b), 2);
    }

    #[test]
    fn edge_count_duality_exhaustive() {
        for gr in [triangle(), cycle(5), cycle(8)] {
            let n = gr.n();
            for mask in 0u64..(1 << n) {
                let s = Bitset::from_mask(n, mask);
                let sc = s.complement();
                assert_eq!(edge_count(&gr, &s, &sc), edge_count(&gr, &sc, &s));
            }
        }
    }

    #[test]
    fn cut_identity_exhaustive() {
        // |E(L,R^c)| + |E(R,L^c)| = |E(L,L)| + |E(R,R)| + |boundary(L u R)|
        for gr in [triangle(), cycle(5), {
            let g = cyclic(7);
            cayley_sum(&g, &ConnectionSet::new(&g, vec![0, 1]).unwrap()).unwrap()
        }] {
            let n = gr.n();
            for l_mask in 0u64..(1 << n) {
                for r_mask in 0u64..(1 << n) {
                    if l_mask & r_mask != 0 || l_mask | r_mask == 0 {
                        continue;
                    }
                    let l = Bitset::from_mask(n, l_mask);
                    let r = Bitset::from_mask(n, r_mask);
                    let lhs =
                        edge_count(&gr, &l, &r.complement()) + edge_count(&gr, &r, &l.complement());
                    let u = l.union(&r);
                    let rhs = edge_count(&gr, &l, &l)
                        + edge_count(&gr, &r, &r)
                        + edge_count(&gr, &u, &u.complement());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn edge_cheeger_examples() {
        let (v, w) = edge_cheeger(&triangle()).unwrap();
        assert_eq!(v, ExactRatio::from_integer(1));
        match w {
            CutWitness::Subset { set, .. } => assert_eq!(set.to_indices(), vec![0]),
            _ => panic!(),
        }

        let (v, w) = edge_cheeger(&cycle(5)).unwrap();
        assert_eq!(v, ExactRatio::new(1, 2));
        match w {
            CutWitness::Subset { set, .. } => assert_eq!(set.to_indices(), vec![0, 1]),
            _ => panic!(),
        }

        let g4 = cyclic(4);
        let k4 = cayley(&g4, &ConnectionSet::new(&g4, vec![1, 2, 3]).unwrap()).unwrap();
        let (v, w) = edge_cheeger(&k4).unwrap();
        assert_eq!(v, ExactRatio::new(2, 3));
        assert_eq!(w.value(), &v);
    }

    #[test]
    fn vertex_cheeger_examples() {
        let (v, _) = vertex_cheeger(&triangle()).unwrap();
        assert_eq!(v, ExactRatio::from_integer(2));

        let (v, w) = vertex_cheeger(&cycle(5)).unwrap();
        assert_eq!(v, ExactRatio::from_integer(1));
        match w {
            CutWitness::Subset { set, .. } => assert_eq!(set.to_indices(), vec![0, 1]),
            _ => panic!(),
        }

        let g2 = cyclic(2);
        let k2 = cayley(&g2, &ConnectionSet::new(&g2, vec![1]).unwrap()).unwrap();
        let (v, _) = vertex_cheeger(&k2).unwrap();
        assert_eq!(v, ExactRatio::from_integer(1));
    }

    #[test]
    fn edge_bipartiteness_examples() {
        let (v, w) = edge_bipartiteness(&triangle()).unwrap();
        assert_eq!(v, ExactRatio::new(1, 3));
        match w {
            CutWitness::Pair { left, right, .. } => {
                assert_eq!(left.to_indices(), vec![0]);
                assert_eq!(right.to_indices(), vec![1, 2]);
            }
            _ => panic!(),
        }

        let (v, w) = edge_bipartiteness(&cycle(4)).unwrap();
        assert_eq!(v, ExactRatio::zero());
        match w {
            CutWitness::Pair { left, right, .. } => {
                assert_eq!(left.to_indices(), vec![0, 2]);
                assert_eq!(right.to_indices(), vec![1, 3]);
            }
            _ => panic!(),
        }

        let (v, w) = edge_bipartiteness(&cycle(5)).unwrap();
        assert_eq!(v, ExactRatio::new(1, 5));
        match w {
            CutWitness::Pair { left, right, .. } => {
                assert_eq!(left.to_indices(), vec![0, 2]);
                assert_eq!(right.to_indices(), vec![1, 3, 4]);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn vertex_bipartiteness_examples() {
        let (v, w) = vertex_bipartiteness(&triangle()).unwrap();
        assert_eq!(v, ExactRatio::new(1, 2));
        match w {
            CutWitness::Pair { left, right, .. } => {
                assert_eq!(left.to_indices(), vec![0]);
                assert_eq!(right.to_indices(), vec![1]);
            }
            _ => panic!(),
        }

        let (v, _) = vertex_bipartiteness(&cycle(4)).unwrap();
        assert_eq!(v, ExactRatio::zero());

        let (v, w) = vertex_bipartiteness(&cycle(5)).unwrap();
        assert_eq!(v, ExactRatio::new(1, 4));
        match w {
            CutWitness::Pair { left, right, .. } => {
                assert_eq!(left.to_indices(), vec![0, 2]);
                assert_eq!(right.to_indices(), vec![1, 3]);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn vol_examples() {
        let tri = triangle();
        let all = Bitset::from_mask(3, 0b111);
        assert_eq!(vol(&tri, &all, 1), 6);
        assert_eq!(vol(&tri, &Bitset::from_mask(3, 0b001), 2), 4);
        assert_eq!(vol(&tri, &Bitset::new(3), 1), 0);
    }

    #[test]
    fn caps_are_enforced() {
        let c5 = cycle(5);
        let small = EnumConfig {
            subset_cap: 4,
            ternary_cap: 4,
            jobs: 1,
        };
        assert!(matches!(
            edge_cheeger_with(&c5, &small),
            Err(EnumError::TooLarge { n: 5, cap: 4 })
        ));
        assert!(matches!(
            edge_bipartiteness_with(&c5, &small),
            Err(EnumError::TooLarge { n: 5, cap: 4 })
        ));
    }

    mod prop {
        use super::*;
        use crate::graph::{Family, Provenance};
        use proptest::prelude::*;
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;

        fn random_regular(n: usize, target_d: usize, seed: u64) -> RegularMultigraph {
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
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn scans_match_naive_reference(n in 2usize..7, d in 1usize..5, seed: u64) {
                let gr = random_regular(n, d, seed);
                prop_assert_eq!(crate::reference::edge_cheeger(&gr), edge_cheeger(&gr).unwrap().0);
                prop_assert_eq!(crate::reference::vertex_cheeger(&gr), vertex_cheeger(&gr).unwrap().0);
                prop_assert_eq!(
                    crate::reference::edge_bipartiteness(&gr),
                    edge_bipartiteness(&gr).unwrap().0
                );
                prop_assert_eq!(
                    crate::reference::vertex_bipartiteness(&gr),
                    vertex_bipartiteness(&gr).unwrap().0
                );
            }

            #[test]
            fn beta_zero_iff_bipartite_when_connected(n in 2usize..7, d in 1usize..5, seed: u64) {
                let gr = random_regular(n, d, seed);
                prop_assume!(gr.is_connected());
                let beta = edge_bipartiteness(&gr).unwrap().0;
                prop_assert_eq!(beta.is_zero(), gr.is_bipartite());
                let beta_v = vertex_bipartiteness(&gr).unwrap().0;
                prop_assert_eq!(beta_v.is_zero(), gr.is_bipartite());
            }
        }
    }

    #[test]
    fn parallel_scans_match_serial() {
        let g = cyclic(11);
        let gr = cayley_sum(&g, &ConnectionSet::new(&g, vec![0, 1, 2]).unwrap()).unwrap();
        let serial = EnumConfig::default();
        let parallel = EnumConfig {
            jobs: 5,
            ..EnumConfig::default()
        };
        for (a, b) in [
            (
                edge_cheeger_with(&gr, &serial).unwrap(),
                edge_cheeger_with(&gr, &parallel).unwrap(),
            ),
            (
                vertex_cheeger_with(&gr, &serial).unwrap(),
                vertex_cheeger_with(&gr, &parallel).unwrap(),
            ),
            (
                edge_bipartiteness_with(&gr, &serial).unwrap(),
                edge_bipartiteness_with(&gr, &parallel).unwrap(),
            ),
            (
                vertex_bipartiteness_with(&gr, &serial).unwrap(),
                vertex_bipartiteness_with(&gr, &parallel).unwrap(),
            ),
        ] {
            assert_eq!(a.0, b.0);
            assert_eq!(
                serde_json::to_string(&a.1).unwrap(),
                serde_json::to_string(&b.1).unwrap()
            );
        }
    }
}
