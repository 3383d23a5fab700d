//! Mechanical verification of the explicit inequalities on concrete graphs,
//! with pass/fail margins.
//!
//! Checks compare exact rationals wherever both sides are combinatorial; the
//! only float comparisons involve eigenvalues and use a fixed 1e-9 slack, so
//! float noise can never fake a counterexample. "Inapplicable" is a
//! first-class verdict (bipartite inputs, failed side conditions, exceeded
//! enumeration caps) rather than a silent skip. Strict inequalities are
//! checked strictly on rationals; exact equality fails with a witness dump.

use crate::bitset::Bitset;
use crate::combinatorics::{self, CutWitness, EnumConfig, EnumError};
use crate::graph::{commutes_with_action, Family, RegularMultigraph};
use crate::group::{self, GroupAction, GroupTable, Subgroup};
use crate::matching::birkhoff_decompose;
use crate::ratio::ExactRatio;
use crate::spectral::{normalized_spectrum, SpectralError, SpectrumReport};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Slack for comparisons that involve eigenvalues.
pub const FLOAT_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum CheckValue {
    Exact(ExactRatio),
    Real(f64),
    Count(u64),
    Absent,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckWitness {
    Cut(CutWitness),
    Partition {
        first: Vec<usize>,
        second: Vec<usize>,
    },
    Subset(Vec<usize>),
    GroupElement(usize),
}

/// Outcome of one inequality check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    /// Standing assumptions validated for this instance.
    pub hypothesis_ok: bool,
    pub lhs: CheckValue,
    pub rhs: CheckValue,
    /// Strict checks require margin > 0 exactly.
    pub strict: bool,
    /// rhs - lhs in the asserted direction (presentation value; verdicts on
    /// rational checks are decided exactly).
    pub margin: f64,
    pub verdict: Verdict,
    pub witness: Option<CheckWitness>,
    pub note: String,
}

impl CheckReport {
    fn inapplicable(id: &str, note: impl Into<String>) -> Self {
        CheckReport {
            check_id: id.to_string(),
            hypothesis_ok: false,
            lhs: CheckValue::Absent,
            rhs: CheckValue::Absent,
            strict: false,
            margin: 0.0,
            verdict: Verdict::Inapplicable,
            witness: None,
            note: note.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("matching failure: {0}")]
    Matching(#[from] crate::matching::MatchingError),
}

/// Everything the checks need about one graph instance, computed once.
/// Constants blocked by enumeration caps are left unset and surface as
/// inapplicable verdicts with a cap note.
pub struct InstanceData<'a> {
    pub name: String,
    pub gr: &'a RegularMultigraph,
    pub group: &'a GroupTable,
    pub action: &'a GroupAction,
    pub class: Family,
    pub bipartite: bool,
    pub connected: bool,
    pub transitive: bool,
    pub no_index_two_transitive: bool,
    /// action acts by graph automorphisms (commutes with the adjacency)
    pub commuting: bool,
    pub commuting_square: bool,
    pub edge_cheeger: Option<(ExactRatio, CutWitness)>,
    pub vertex_cheeger: Option<(ExactRatio, CutWitness)>,
    pub beta_edge: Option<(ExactRatio, CutWitness)>,
    pub beta_vert: Option<(ExactRatio, CutWitness)>,
    pub square: RegularMultigraph,
    pub square_edge_cheeger: Option<(ExactRatio, CutWitness)>,
    pub spectrum: SpectrumReport,
}

impl<'a> InstanceData<'a> {
    pub fn compute(
        name: impl Into<String>,
        gr: &'a RegularMultigraph,
        group: &'a GroupTable,
        action: &'a GroupAction,
        cfg: &EnumConfig,
    ) -> Result<Self, HarnessError> {
        let capped = |r: Result<(ExactRatio, CutWitness), EnumError>| -> Result<
            Option<(ExactRatio, CutWitness)>,
            HarnessError,
        > {
            match r {
                Ok(v) => Ok(Some(v)),
                Err(EnumError::TooLarge { .. }) => Ok(None),
            }
        };
        let square = gr.square();
        Ok(InstanceData {
            name: name.into(),
            gr,
            group,
            action,
            class: gr.provenance().family,
            bipartite: gr.is_bipartite(),
            connected: gr.is_connected(),
            transitive: group::is_transitive(action),
            no_index_two_transitive: group::no_index_two_transitive(group, action),
            commuting: commutes_with_action(gr, action, 1),
            commuting_square: commutes_with_action(gr, action, 2),
            edge_cheeger: capped(combinatorics::edge_cheeger_with(gr, cfg))?,
            vertex_cheeger: capped(combinatorics::vertex_cheeger_with(gr, cfg))?,
            beta_edge: capped(combinatorics::edge_bipartiteness_with(gr, cfg))?,
            beta_vert: capped(combinatorics::vertex_bipartiteness_with(gr, cfg))?,
            square_edge_cheeger: capped(combinatorics::edge_cheeger_with(&square, cfg))?,
            spectrum: normalized_spectrum(gr)?,
            square,
        })
    }

    pub fn degree_ratio(&self) -> u64 {
        self.gr.degree()
    }
}

fn big(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// lhs <= rhs with a float tolerance, for checks touching eigenvalues.
fn float_check(
    id: &str,
    hypothesis_ok: bool,
    lhs: f64,
    rhs: f64,
    lhs_value: CheckValue,
    rhs_value: CheckValue,
    note: impl Into<String>,
) -> CheckReport {
    let margin = rhs - lhs;
    CheckReport {
        check_id: id.to_string(),
        hypothesis_ok,
        lhs: lhs_value,
        rhs: rhs_value,
        strict: false,
        margin,
        verdict: if margin >= -FLOAT_SLACK {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        witness: None,
        note: note.into(),
    }
}

/// lhs <= rhs (or < for strict) decided exactly on rationals.
fn exact_check(
    id: &str,
    hypothesis_ok: bool,
    lhs: &BigRational,
    rhs: &BigRational,
    strict: bool,
    witness: Option<CheckWitness>,
    note: impl Into<String>,
) -> CheckReport {
    let margin = rhs - lhs;
    let pass = if strict {
        margin.is_positive()
    } else {
        !margin.is_negative()
    };
    CheckReport {
        check_id: id.to_string(),
        hypothesis_ok,
        lhs: CheckValue::Exact(ExactRatio::from_rational(
            lhs.clone().max(BigRational::zero()),
        )),
        rhs: CheckValue::Exact(ExactRatio::from_rational(
            rhs.clone().max(BigRational::zero()),
        )),
        strict,
        margin: margin.to_f64().unwrap_or(f64::NAN),
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        witness,
        note: note.into(),
    }
}

/// Cheeger--Buser sandwich: h_edge^2/2 <= 1 - mu2 <= 2 h_edge.
/// Inapplicable on disconnected graphs (mu2 = 1 makes the upper gap trivial).
pub fn check_cheeger_buser(d: &InstanceData) -> [CheckReport; 2] {
    if !d.connected {
        return [
            CheckReport::inapplicable("cheeger_buser_lower", "graph is disconnected"),
            CheckReport::inapplicable("cheeger_buser_upper", "graph is disconnected"),
        ];
    }
    let Some((h_edge, _)) = &d.edge_cheeger else {
        return [
            CheckReport::inapplicable("cheeger_buser_lower", "subset enumeration cap exceeded"),
            CheckReport::inapplicable("cheeger_buser_upper", "subset enumeration cap exceeded"),
        ];
    };
    let h = h_edge.to_f64();
    let gap = d.spectrum.upper_gap;
    [
        float_check(
            "cheeger_buser_lower",
            true,
            h * h / 2.0,
            gap,
            CheckValue::Exact(ExactRatio::from_rational(
                d.edge_cheeger.as_ref().unwrap().0.as_rational()
                    * d.edge_cheeger.as_ref().unwrap().0.as_rational()
                    / big(2),
            )),
            CheckValue::Real(gap),
            "h_edge^2/2 <= 1 - mu2",
        ),
        float_check(
            "cheeger_buser_upper",
            true,
            gap,
            2.0 * h,
            CheckValue::Real(gap),
            CheckValue::Exact(ExactRatio::from_rational(h_edge.as_rational() * big(2))),
            "1 - mu2 <= 2 h_edge",
        ),
    ]
}

/// Trevisan sandwich: beta_edge^2/2 <= 1 + mu_n <= 2 beta_edge.
pub fn check_trevisan(d: &InstanceData) -> [CheckReport; 2] {
    let Some((beta, _)) = &d.beta_edge else {
        return [
            CheckReport::inapplicable("trevisan_lower", "ternary enumeration cap exceeded"),
            CheckReport::inapplicable("trevisan_upper", "ternary enumeration cap exceeded"),
        ];
    };
    let b = beta.to_f64();
    let gap = d.spectrum.lower_gap;
    [
        float_check(
            "trevisan_lower",
            true,
            b * b / 2.0,
            gap,
            CheckValue::Exact(ExactRatio::from_rational(
                beta.as_rational() * beta.as_rational() / big(2),
            )),
            CheckValue::Real(gap),
            "beta_edge^2/2 <= 1 + mu_n",
        ),
        float_check(
            "trevisan_upper",
            true,
            gap,
            2.0 * b,
            CheckValue::Real(gap),
            CheckValue::Exact(ExactRatio::from_rational(beta.as_rational() * big(2))),
            "1 + mu_n <= 2 beta_edge",
        ),
    ]
}

/// Lower bounds on the bipartiteness constants in terms of the Cheeger
/// constants, with the piecewise constants of the underlying theorems:
/// K = 40/60 when the attached action acts by graph automorphisms on a
/// vertex-transitive instance, K = 90/135 for the algebraic families.
pub fn check_main_bipartiteness(d: &InstanceData) -> [CheckReport; 2] {
    const EDGE_ID: &str = "beta_edge_vs_cheeger";
    const VERT_ID: &str = "beta_vert_vs_cheeger";
    if d.bipartite {
        return [
            CheckReport::inapplicable(EDGE_ID, "graph is bipartite"),
            CheckReport::inapplicable(VERT_ID, "graph is bipartite"),
        ];
    }
    let (Some((h_edge, _)), Some((h_vert, _)), Some((beta_e, we)), Some((beta_v, wv))) = (
        &d.edge_cheeger,
        &d.vertex_cheeger,
        &d.beta_edge,
        &d.beta_vert,
    ) else {
        return [
            CheckReport::inapplicable(EDGE_ID, "enumeration cap exceeded"),
            CheckReport::inapplicable(VERT_ID, "enumeration cap exceeded"),
        ];
    };
    let vertex_transitive_case = d.class == Family::ActionGraph;
    let (k_edge, k_vert) = if vertex_transitive_case {
        (40u64, 60u64)
    } else {
        (90u64, 135u64)
    };
    let hypothesis_ok =
        d.transitive && d.no_index_two_transitive && (!vertex_transitive_case || d.commuting);

    let d_rat = big(d.gr.degree());
    let t = &d_rat * beta_e.as_rational();
    let threshold = BigRational::new(BigInt::one(), BigInt::from(k_edge));
    let (rhs_edge, branch) = if t < threshold {
        (big(k_edge) * beta_e.as_rational(), "small-degree branch")
    } else {
        (
            big(k_edge) * &d_rat * beta_e.as_rational(),
            "large-degree branch",
        )
    };
    let edge = exact_check(
        EDGE_ID,
        hypothesis_ok,
        h_edge.as_rational(),
        &rhs_edge,
        false,
        Some(CheckWitness::Cut(we.clone())),
        format!("h_edge <= {k_edge} * beta_edge piecewise; {branch}"),
    );
    let rhs_vert = big(k_vert) * beta_v.as_rational();
    let vert = exact_check(
        VERT_ID,
        hypothesis_ok,
        h_vert.as_rational(),
        &rhs_vert,
        false,
        Some(CheckWitness::Cut(wv.clone())),
        format!("h_vert <= {k_vert} * beta_vert"),
    );
    [edge, vert]
}

/// End-to-end lower spectral gap chain:
/// 1 + mu_n >= beta_edge^2/2 >= (beta_vert/d)^2/2 >= h_vert^2 / (2*135^2*d^2).
pub fn check_lower_gap_chain(d: &InstanceData) -> CheckReport {
    const ID: &str = "lower_gap_chain";
    if d.bipartite {
        return CheckReport::inapplicable(ID, "graph is bipartite");
    }
    let Some((h_vert, _)) = &d.vertex_cheeger else {
        return CheckReport::inapplicable(ID, "subset enumeration cap exceeded");
    };
    let deg = big(d.gr.degree());
    let bound =
        h_vert.as_rational() * h_vert.as_rational() / (big(2) * big(135) * big(135) * &deg * &deg);
    float_check(
        ID,
        true,
        bound.to_f64().unwrap_or(f64::NAN),
        d.spectrum.lower_gap,
        CheckValue::Exact(ExactRatio::from_rational(bound.clone())),
        CheckValue::Real(d.spectrum.lower_gap),
        "1 + mu_n >= h_vert^2 / (2 * 135^2 * d^2)",
    )
}

/// Square-graph Cheeger bound, strict: h_edge(square) > h_edge^2 / (K d),
/// with K = 20 when the action commutes with the adjacency operator and
/// K = 48 otherwise.
pub fn check_square_cheeger(d: &InstanceData) -> CheckReport {
    const ID: &str = "square_cheeger";
    if d.bipartite {
        return CheckReport::inapplicable(ID, "graph is bipartite");
    }
    let (Some((h_edge, _)), Some((h_sq, wsq))) = (&d.edge_cheeger, &d.square_edge_cheeger) else {
        return CheckReport::inapplicable(ID, "subset enumeration cap exceeded");
    };
    if h_edge.is_zero() {
        // degenerate 0 > 0; the bound presumes positive edge expansion
        return CheckReport::inapplicable(ID, "disconnected graph has zero Cheeger constant");
    }
    let k = if d.commuting { 20u64 } else { 48u64 };
    let rhs = h_edge.as_rational() * h_edge.as_rational() / (big(k) * big(d.gr.degree()));
    exact_check(
        ID,
        d.transitive && d.no_index_two_transitive && d.commuting_square,
        &rhs,
        h_sq.as_rational(),
        true,
        Some(CheckWitness::Cut(wsq.clone())),
        format!("h_edge(square) > h_edge^2/({k}d), strict"),
    )
}

/// For sampled subsets X: the one-step boundary of the closed neighborhood
/// X u N(X) is dominated by the two-step boundary of X,
/// <T 1_{X u N(X)}, 1_complement> <= <T^2 1_X, 1_complement>.
/// All subsets are tested when n <= 10, otherwise 1000 seeded random subsets.
pub fn check_closed_neighborhood_boundary(d: &InstanceData, seed: u64) -> CheckReport {
    const ID: &str = "closed_neighborhood_boundary";
    let gr = d.gr;
    let n = gr.n();
    let mut worst: Option<(i128, u64, u64, u64)> = None; // (margin, lhs, rhs, sample_count)
    let mut worst_set: Vec<usize> = Vec::new();
    let mut samples = 0u64;
    let mut run = |set: &Bitset| {
        let mut closed = set.clone();
        for v in 0..n {
            if (0..n).any(|u| set.contains(u) && gr.entry(v, u) > 0) {
                closed.insert(v);
            }
        }
        let lhs = combinatorics::edge_count(gr, &closed, &closed.complement());
        let rhs = combinatorics::edge_count(&d.square, set, &set.complement());
        let margin = rhs as i128 - lhs as i128;
        samples += 1;
        if worst.is_none_or(|(m, ..)| margin < m) {
            worst = Some((margin, lhs, rhs, 0));
            worst_set = set.to_indices();
        }
    };
    if n <= 10 {
        for mask in 0u64..(1 << n) {
            run(&Bitset::from_mask(n, mask));
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1000 {
            let mut set = Bitset::new(n);
            for v in 0..n {
                if rng.gen_bool(0.5) {
                    set.insert(v);
                }
            }
            run(&set);
        }
    }
    let (margin, lhs, rhs, _) = worst.expect("at least one sample");
    CheckReport {
        check_id: ID.to_string(),
        hypothesis_ok: true,
        lhs: CheckValue::Count(lhs),
        rhs: CheckValue::Count(rhs),
        strict: false,
        margin: margin as f64,
        verdict: if margin >= 0 {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        witness: Some(CheckWitness::Subset(worst_set)),
        note: format!("binding subset over {samples} samples"),
    }
}

/// Translate-overlap dichotomy: when psi = h_edge(square) < h_edge/d, the
/// minimizing subset A of the square graph satisfies, for every group
/// element g, either vol(A n gA) >= vol(A)(1 - c) or vol(A n gA) <= vol(A) c
/// with c = 2 d psi (1 + h_edge) / h_edge^2, in exact arithmetic.
pub fn check_dichotomy(d: &InstanceData) -> CheckReport {
    const ID: &str = "translate_overlap_dichotomy";
    if !d.commuting_square {
        return CheckReport::inapplicable(ID, "action does not commute with the squared operator");
    }
    let (Some((h_edge, _)), Some((psi, wsq))) = (&d.edge_cheeger, &d.square_edge_cheeger) else {
        return CheckReport::inapplicable(ID, "subset enumeration cap exceeded");
    };
    // applicability: psi < h_edge / d exactly
    let lhs = psi.as_rational() * big(d.gr.degree());
    if lhs >= *h_edge.as_rational() {
        return CheckReport::inapplicable(ID, "psi >= h_edge/d; dichotomy hypothesis fails");
    }
    let a_set = match wsq {
        CutWitness::Subset { set, .. } => set.clone(),
        _ => unreachable!("square Cheeger witness is a subset"),
    };
    let h = h_edge.as_rational();
    let c = big(2) * big(d.gr.degree()) * psi.as_rational() * (big(1) + h) / (h * h);
    let a_size = big(a_set.count() as u64);
    let low = &a_size * &c;
    let high = &a_size * (big(1) - &c);
    let mut worst_g = None;
    for g in 0..d.action.group_order() {
        let mut image = Bitset::new(d.gr.n());
        for v in a_set.iter() {
            image.insert(d.action.apply(g, v));
        }
        let overlap = big(a_set.intersection(&image).count() as u64);
        let ok = overlap >= high || overlap <= low;
        if !ok {
            worst_g = Some(g);
            break;
        }
    }
    CheckReport {
        check_id: ID.to_string(),
        hypothesis_ok: d.transitive && d.no_index_two_transitive,
        lhs: CheckValue::Exact(ExactRatio::from_rational(c.clone())),
        rhs: CheckValue::Count(a_set.count() as u64),
        strict: false,
        margin: if worst_g.is_some() { -1.0 } else { 0.0 },
        verdict: if worst_g.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        },
        witness: worst_g.map(CheckWitness::GroupElement),
        note: format!(
            "every translate overlap lies outside (c|A|, (1-c)|A|) with c = {}",
            ExactRatio::from_rational(c.clone().min(big(1))).fraction_string()
        ),
    }
}

/// Searches index-two-subgroup orbit pairs (plus the bipartition classes on
/// bipartite graphs) for an equal partition V1, V2 with
/// V_j n (union_i rho_i(V_j)) empty. Non-bipartite graphs admit none; the
/// verdict asserts consistency with that.
pub fn check_partition_conclusion(d: &InstanceData) -> Result<CheckReport, HarnessError> {
    const ID: &str = "independent_equal_partition";
    let rho = birkhoff_decompose(d.gr)?;
    let n = d.gr.n();
    let mut candidates: Vec<(Bitset, Bitset)> = Vec::new();
    for sub in group::index_two_subgroups(d.group) {
        let orbit_list = group::orbits(d.action, Some(&sub));
        if orbit_list.len() == 2 && orbit_list[0].len() == orbit_list[1].len() {
            candidates.push((
                Bitset::from_indices(n, &orbit_list[0]),
                Bitset::from_indices(n, &orbit_list[1]),
            ));
        }
    }
    if let Some(class) = d.gr.bipartite_verdict().coloring {
        if 2 * class.count() == n {
            let other = class.complement();
            candidates.push((class, other));
        }
    }
    let independent = |part: &Bitset| -> bool {
        rho.permutations()
            .iter()
            .all(|p| part.iter().all(|v| !part.contains(p[v])))
    };
    let found = candidates
        .into_iter()
        .find(|(v1, v2)| independent(v1) && independent(v2));
    let consistent = found.is_some() == d.bipartite;
    Ok(CheckReport {
        check_id: ID.to_string(),
        hypothesis_ok: d.transitive,
        lhs: CheckValue::Absent,
        rhs: CheckValue::Absent,
        strict: false,
        margin: if consistent { 0.0 } else { -1.0 },
        verdict: if consistent {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        witness: found.map(|(v1, v2)| CheckWitness::Partition {
            first: v1.to_indices(),
            second: v2.to_indices(),
        }),
        note: if d.bipartite {
            "bipartite: an independent equal partition must exist".to_string()
        } else {
            "non-bipartite: no independent equal partition may exist".to_string()
        },
    })
}

/// The dichotomy entry as the theorem suites run it: the surrounding setup
/// assumes -1 is not an eigenvalue, so bipartite inputs are gated out here
/// (the bare [`check_dichotomy`] carries no such gate).
fn suite_dichotomy(d: &InstanceData) -> CheckReport {
    if d.bipartite {
        CheckReport::inapplicable(
            "translate_overlap_dichotomy",
            "graph is bipartite (-1 is an eigenvalue)",
        )
    } else {
        check_dichotomy(d)
    }
}

/// The check set run by the CLI `verify` command.
pub fn verify_suite(d: &InstanceData) -> Vec<CheckReport> {
    let mut out = Vec::new();
    out.extend(check_cheeger_buser(d));
    out.extend(check_trevisan(d));
    out.extend(check_main_bipartiteness(d));
    out.push(check_square_cheeger(d));
    out.push(suite_dichotomy(d));
    out
}

/// The full check set (verify set plus the chain, sampling, and partition
/// checks), used by reports and sweeps.
pub fn full_suite(d: &InstanceData, seed: u64) -> Result<Vec<CheckReport>, HarnessError> {
    let mut out = Vec::new();
    out.extend(check_cheeger_buser(d));
    out.extend(check_trevisan(d));
    out.extend(check_main_bipartiteness(d));
    out.push(check_lower_gap_chain(d));
    out.push(check_square_cheeger(d));
    out.push(check_closed_neighborhood_boundary(d, seed));
    out.push(suite_dichotomy(d));
    out.push(check_partition_conclusion(d)?);
    Ok(out)
}

// ---------------------------------------------------------------------------
// trapping argument
// ---------------------------------------------------------------------------

/// An instance of the index-two trapping setup: a transitive action, a
/// distinguished vertex subset, and the real parameters constrained by the
/// two hypothesis systems.
pub struct TrappingInstance<'a> {
    pub group: &'a GroupTable,
    pub action: &'a GroupAction,
    pub subset: Bitset,
    pub delta: ExactRatio,
    pub xi: ExactRatio,
    pub zeta: ExactRatio,
    pub kappa: ExactRatio,
    pub mu: ExactRatio,
}

#[derive(Debug, Error)]
pub enum TrappingError {
    #[error("trapping hypotheses violated: {failed:?}")]
    HypothesisViolated { failed: Vec<String> },
}

#[derive(Debug, Clone, Serialize)]
pub struct TrappingReport {
    /// |subset ∩ tau(subset)| per group element.
    pub overlaps: Vec<u64>,
    /// True when no overlap falls strictly inside (delta|V'|, (1-delta)|V'|).
    pub gap_hypothesis_ok: bool,
    /// Elements tau with overlap >= (1-delta)|V'|.
    pub trapping_set: Bitset,
    pub is_subgroup: bool,
    pub index: Option<usize>,
    pub orbits: Vec<Vec<usize>>,
    /// Index into `orbits` of an orbit meeting the defect bound.
    pub certified_orbit: Option<usize>,
    /// Some orbit has |subset ∩ orbit^c|^2 <= delta(1+zeta)|V|^2/8
    /// (squared comparison avoids roots).
    pub orbit_defect_ok: bool,
    /// Subgroup of index two with the defect bound: the full conclusion.
    pub conclusion_ok: bool,
}

impl TrappingInstance<'_> {
    /// Individual first-system constraints, by name, with verdicts.
    pub fn size_window_constraints(&self) -> Vec<(&'static str, bool)> {
        let v_size = big(self.subset.count() as u64);
        let n = big(self.action.degree() as u64);
        let ratio = &v_size / &n;
        let one = BigRational::one();
        let delta = self.delta.as_rational();
        let xi = self.xi.as_rational();
        let zeta = self.zeta.as_rational();
        vec![
            ("(1-xi)/2 <= |V'|/|V|", (&one - xi) / big(2) <= ratio),
            ("|V'|/|V| <= (1+zeta)/2", ratio <= (&one + zeta) / big(2)),
            ("delta > 0", delta.is_positive()),
            ("delta < (1-zeta)/2", *delta < (&one - zeta) / big(2)),
            ("delta < (1-3xi)/4", *delta < (&one - big(3) * xi) / big(4)),
        ]
    }

    /// Individual second-system constraints (used by the partition and
    /// orbit-image consequences).
    pub fn map_budget_constraints(&self) -> Vec<(&'static str, bool)> {
        let one = BigRational::one();
        let mu = self.mu.as_rational();
        let kappa = self.kappa.as_rational();
        let xi = self.xi.as_rational();
        let zeta = self.zeta.as_rational();
        let delta = self.delta.as_rational();
        let slack = if mu.is_positive() {
            &one / (big(2) * mu) - xi - kappa
        } else {
            -one.clone()
        };
        vec![
            ("mu > 0", mu.is_positive()),
            ("kappa >= 0", !kappa.is_negative()),
            ("1/(2mu) - xi - kappa > 0", slack.is_positive()),
            (
                "delta < 2/(1+zeta) * (1/(2mu) - xi - kappa)^2",
                *delta < big(2) / (&one + zeta) * (&slack * &slack),
            ),
        ]
    }
}

/// Computes the trapping set H = {tau : |V' ∩ tau(V')| >= (1-delta)|V'|} and,
/// when the overlap-gap hypothesis holds, verifies that H is an index-two
/// subgroup and that some H-orbit nearly contains the subset.
pub fn trapping_set(inst: &TrappingInstance) -> Result<TrappingReport, TrappingError> {
    let mut failed: Vec<String> = Vec::new();
    if !group::is_transitive(inst.action) {
        failed.push("action is transitive".into());
    }
    if !group::no_index_two_transitive(inst.group, inst.action) {
        failed.push("no index two subgroup acts transitively".into());
    }
    if inst.subset.is_empty() {
        failed.push("subset is nonempty".into());
    }
    for (name, ok) in inst.size_window_constraints() {
        if !ok {
            failed.push(name.into());
        }
    }
    if !failed.is_empty() {
        return Err(TrappingError::HypothesisViolated { failed });
    }

    let n = inst.action.degree();
    let order = inst.action.group_order();
    let v_size = inst.subset.count() as u64;
    let delta = inst.delta.as_rational();
    let low = delta * big(v_size);
    let high = (BigRational::one() - delta) * big(v_size);

    let mut overlaps = Vec::with_capacity(order);
    let mut trapping = Bitset::new(order);
    let mut gap_ok = true;
    for tau in 0..order {
        let mut image = Bitset::new(n);
        for v in inst.subset.iter() {
            image.insert(inst.action.apply(tau, v));
        }
        let o = inst.subset.intersection(&image).count() as u64;
        overlaps.push(o);
        let o_rat = big(o);
        if o_rat > low && o_rat < high {
            gap_ok = false;
        }
        if o_rat >= high {
            trapping.insert(tau);
        }
    }

    if !gap_ok {
        return Ok(TrappingReport {
            overlaps,
            gap_hypothesis_ok: false,
            trapping_set: trapping,
            is_subgroup: false,
            index: None,
            orbits: Vec::new(),
            certified_orbit: None,
            orbit_defect_ok: false,
            conclusion_ok: false,
        });
    }

    let sub = Subgroup {
        members: trapping.clone(),
    };
    let is_subgroup = sub.validate(inst.group).is_ok();
    let index = if is_subgroup {
        Some(sub.index_in(inst.group))
    } else {
        None
    };
    let orbit_list = if is_subgroup {
        group::orbits(inst.action, Some(&sub))
    } else {
        Vec::new()
    };
    // defect bound, squared: |V' ∩ orbit^c|^2 <= delta (1+zeta) |V|^2 / 8
    let bound =
        delta * (BigRational::one() + inst.zeta.as_rational()) * big((n * n) as u64) / big(8);
    let mut certified = None;
    for (i, orbit) in orbit_list.iter().enumerate() {
        let orbit_set = Bitset::from_indices(n, orbit);
        let defect = inst.subset.intersection(&orbit_set.complement()).count() as u64;
        if big(defect * defect) <= bound {
            certified = Some(i);
            break;
        }
    }
    let orbit_defect_ok = certified.is_some();
    Ok(TrappingReport {
        overlaps,
        gap_hypothesis_ok: true,
        conclusion_ok: is_subgroup && index == Some(2) && orbit_defect_ok,
        trapping_set: trapping,
        is_subgroup,
        index,
        orbits: orbit_list,
        certified_orbit: certified,
        orbit_defect_ok,
    })
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

/// One instance to run the suite on.
pub struct SweepInstance {
    pub name: String,
    pub gr: RegularMultigraph,
    pub group: GroupTable,
    pub action: GroupAction,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub name: String,
    pub family: String,
    pub n: usize,
    pub d: u64,
    pub edge_cheeger: Option<ExactRatio>,
    pub vertex_cheeger: Option<ExactRatio>,
    pub beta_edge: Option<ExactRatio>,
    pub beta_vert: Option<ExactRatio>,
    pub mu2: f64,
    pub mu_n: f64,
    pub verdicts: Vec<(String, Verdict)>,
    pub skipped: Option<String>,
}

/// Minima over the swept instances of the tightness ratios, each >= 1
/// exactly when the corresponding bound holds.
#[derive(Debug, Clone, Default, Serialize)]
pub struct TightnessSummary {
    /// min of beta_edge * 90 d / h_edge
    pub edge_ratio_min: Option<(ExactRatio, String)>,
    /// min of beta_vert * 135 / h_vert
    pub vert_ratio_min: Option<(ExactRatio, String)>,
    /// min of h_edge(square) * 48 d / h_edge^2
    pub square_ratio_min: Option<(ExactRatio, String)>,
}

#[derive(Serialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    pub tightness: TightnessSummary,
    /// Set when a bipartiteness lower-bound check failed; such a failure
    /// contradicts a proved statement and aborts the sweep.
    pub fatal: Option<String>,
}

fn update_min(slot: &mut Option<(ExactRatio, String)>, candidate: BigRational, name: &str) {
    let candidate = ExactRatio::from_rational(candidate);
    match slot {
        Some((best, _)) if *best <= candidate => {}
        _ => *slot = Some((candidate, name.to_string())),
    }
}

pub fn sweep(instances: &[SweepInstance], cfg: &EnumConfig, seed: u64) -> SweepReport {
    let mut rows = Vec::new();
    let mut tightness = TightnessSummary::default();
    let mut fatal = None;
    for inst in instances {
        let data = match InstanceData::compute(&inst.name, &inst.gr, &inst.group, &inst.action, cfg)
        {
            Ok(d) => d,
            Err(e) => {
                rows.push(SweepRow {
                    name: inst.name.clone(),
                    family: inst.gr.provenance().family.as_str().to_string(),
                    n: inst.gr.n(),
                    d: inst.gr.degree(),
                    edge_cheeger: None,
                    vertex_cheeger: None,
                    beta_edge: None,
                    beta_vert: None,
                    mu2: f64::NAN,
                    mu_n: f64::NAN,
                    verdicts: Vec::new(),
                    skipped: Some(e.to_string()),
                });
                continue;
            }
        };
        if data.edge_cheeger.is_none() {
            rows.push(SweepRow {
                name: inst.name.clone(),
                family: data.class.as_str().to_string(),
                n: inst.gr.n(),
                d: inst.gr.degree(),
                edge_cheeger: None,
                vertex_cheeger: None,
                beta_edge: None,
                beta_vert: None,
                mu2: data.spectrum.mu2,
                mu_n: data.spectrum.mu_n,
                verdicts: Vec::new(),
                skipped: Some(format!(
                    "subset enumeration cap exceeded (n = {})",
                    inst.gr.n()
                )),
            });
            continue;
        }
        let checks = match full_suite(&data, seed) {
            Ok(c) => c,
            Err(e) => {
                rows.push(SweepRow {
                    name: inst.name.clone(),
                    family: data.class.as_str().to_string(),
                    n: inst.gr.n(),
                    d: inst.gr.degree(),
                    edge_cheeger: data.edge_cheeger.as_ref().map(|x| x.0.clone()),
                    vertex_cheeger: data.vertex_cheeger.as_ref().map(|x| x.0.clone()),
                    beta_edge: data.beta_edge.as_ref().map(|x| x.0.clone()),
                    beta_vert: data.beta_vert.as_ref().map(|x| x.0.clone()),
                    mu2: data.spectrum.mu2,
                    mu_n: data.spectrum.mu_n,
                    verdicts: Vec::new(),
                    skipped: Some(e.to_string()),
                });
                continue;
            }
        };

        if !data.bipartite {
            if let (Some((h_e, _)), Some((b_e, _))) = (&data.edge_cheeger, &data.beta_edge) {
                if !h_e.is_zero() {
                    update_min(
                        &mut tightness.edge_ratio_min,
                        b_e.as_rational() * big(90) * big(data.gr.degree()) / h_e.as_rational(),
                        &inst.name,
                    );
                }
            }
            if let (Some((h_v, _)), Some((b_v, _))) = (&data.vertex_cheeger, &data.beta_vert) {
                if !h_v.is_zero() {
                    update_min(
                        &mut tightness.vert_ratio_min,
                        b_v.as_rational() * big(135) / h_v.as_rational(),
                        &inst.name,
                    );
                }
            }
            if let (Some((h_e, _)), Some((h_sq, _))) =
                (&data.edge_cheeger, &data.square_edge_cheeger)
            {
                if !h_e.is_zero() {
                    update_min(
                        &mut tightness.square_ratio_min,
                        h_sq.as_rational() * big(48) * big(data.gr.degree())
                            / (h_e.as_rational() * h_e.as_rational()),
                        &inst.name,
                    );
                }
            }
        }

        let bound_check_failed = checks.iter().any(|c| {
            c.verdict == Verdict::Fail
                && (c.check_id == "beta_edge_vs_cheeger" || c.check_id == "beta_vert_vs_cheeger")
        });
        rows.push(SweepRow {
            name: inst.name.clone(),
            family: data.class.as_str().to_string(),
            n: inst.gr.n(),
            d: inst.gr.degree(),
            edge_cheeger: data.edge_cheeger.as_ref().map(|x| x.0.clone()),
            vertex_cheeger: data.vertex_cheeger.as_ref().map(|x| x.0.clone()),
            beta_edge: data.beta_edge.as_ref().map(|x| x.0.clone()),
            beta_vert: data.beta_vert.as_ref().map(|x| x.0.clone()),
            mu2: data.spectrum.mu2,
            mu_n: data.spectrum.mu_n,
            verdicts: checks
                .iter()
                .map(|c| (c.check_id.clone(), c.verdict))
                .collect(),
            skipped: None,
        });
        if bound_check_failed {
            // a failure here would contradict a proved bound: stop and surface it
            fatal = Some(format!("bipartiteness lower bound failed on {}", inst.name));
            break;
        }
    }
    SweepReport {
        rows,
        tightness,
        fatal,
    }
}
