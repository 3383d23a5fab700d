//! Naive reference enumerators for the four isoperimetric constants.
//!
//! These are deliberately written from the definitions with no pruning, no
//! incremental updates, and no bit tricks, and they share no code with the
//! optimized scans in [`crate::combinatorics`]. The verification suite uses
//! them as the independent oracle for every graph small enough to afford the
//! quartic blowup (n <= 8 or so).

use crate::bitset::Bitset;
use crate::graph::RegularMultigraph;
use crate::ratio::ExactRatio;

fn count_edges(gr: &RegularMultigraph, a: &Bitset, b: &Bitset) -> u64 {
    let mut total = 0;
    for u in 0..gr.n() {
        for v in 0..gr.n() {
            if b.contains(u) && a.contains(v) {
                total += gr.entry(u, v) as u64;
            }
        }
    }
    total
}

fn neighborhood(gr: &RegularMultigraph, s: &Bitset) -> Bitset {
    let mut out = Bitset::new(gr.n());
    for v in 0..gr.n() {
        for u in 0..gr.n() {
            if s.contains(u) && gr.entry(v, u) > 0 {
                out.insert(v);
            }
        }
    }
    out
}

fn min_ratio(candidates: impl Iterator<Item = (u64, u64)>) -> ExactRatio {
    let mut best: Option<ExactRatio> = None;
    for (num, den) in candidates {
        let r = ExactRatio::new(num, den);
        best = match best {
            None => Some(r),
            Some(b) if r < b => Some(r),
            some => some,
        };
    }
    best.expect("at least one candidate")
}

pub fn edge_cheeger(gr: &RegularMultigraph) -> ExactRatio {
    let n = gr.n();
    min_ratio((1u64..1 << n).filter_map(|mask| {
        let s = Bitset::from_mask(n, mask);
        if 2 * s.count() > n {
            return None;
        }
        let boundary = count_edges(gr, &s, &s.complement());
        Some((boundary, gr.degree() * s.count() as u64))
    }))
}

pub fn vertex_cheeger(gr: &RegularMultigraph) -> ExactRatio {
    let n = gr.n();
    min_ratio((1u64..1 << n).filter_map(|mask| {
        let s = Bitset::from_mask(n, mask);
        if 2 * s.count() > n {
            return None;
        }
        let boundary = neighborhood(gr, &s).intersection(&s.complement()).count();
        Some((boundary as u64, s.count() as u64))
    }))
}

pub fn edge_bipartiteness(gr: &RegularMultigraph) -> ExactRatio {
    let n = gr.n();
    let mut candidates = Vec::new();
    for l_mask in 0u64..1 << n {
        for r_mask in 0u64..1 << n {
            if l_mask & r_mask != 0 || l_mask | r_mask == 0 {
                continue;
            }
            let l = Bitset::from_mask(n, l_mask);
            let r = Bitset::from_mask(n, r_mask);
            let num = count_edges(gr, &l, &r.complement()) + count_edges(gr, &r, &l.complement());
            let den = gr.degree() * l.union(&r).count() as u64;
            candidates.push((num, den));
        }
    }
    min_ratio(candidates.into_iter())
}

pub fn vertex_bipartiteness(gr: &RegularMultigraph) -> ExactRatio {
    let n = gr.n();
    let mut candidates = Vec::new();
    for l_mask in 0u64..1 << n {
        for r_mask in 0u64..1 << n {
            if l_mask & r_mask != 0 || l_mask | r_mask == 0 {
                continue;
            }
            let l = Bitset::from_mask(n, l_mask);
            let r = Bitset::from_mask(n, r_mask);
            let union = l.union(&r);
            let num = neighborhood(gr, &l).intersection(&l).count()
                + neighborhood(gr, &r).intersection(&r).count()
                + neighborhood(gr, &union)
                    .intersection(&union.complement())
                    .count();
            candidates.push((num as u64, union.count() as u64));
        }
    }
    min_ratio(candidates.into_iter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics;
    use crate::graph::{cayley, cayley_sum, ConnectionSet};
    use crate::group::{build_group, GroupDescriptor};

    #[test]
    fn optimized_equals_naive_small() {
        let mut graphs = Vec::new();
        for n in 3..=7 {
            let g = build_group(&GroupDescriptor::Cyclic(n)).unwrap();
            graphs.push(cayley(&g, &ConnectionSet::new(&g, vec![1, n - 1]).unwrap()).unwrap());
            graphs.push(cayley_sum(&g, &ConnectionSet::new(&g, vec![0, 1]).unwrap()).unwrap());
        }
        for gr in &graphs {
            assert_eq!(edge_cheeger(gr), combinatorics::edge_cheeger(gr).unwrap().0);
            assert_eq!(
                vertex_cheeger(gr),
                combinatorics::vertex_cheeger(gr).unwrap().0
            );
            assert_eq!(
                edge_bipartiteness(gr),
                combinatorics::edge_bipartiteness(gr).unwrap().0
            );
            assert_eq!(
                vertex_bipartiteness(gr),
                combinatorics::vertex_bipartiteness(gr).unwrap().0
            );
        }
    }
}
