//! Graph-spec documents: the JSON input format of the CLI.
//!
//! A document names a family, a group, and the family-specific data
//! (connection set, automorphism generator images, base edges). Fields that
//! a family does not use are rejected rather than ignored, so typos surface
//! as errors. The schema ships in `docs/graph_spec.schema.json`.

use crate::graph::{
    cayley, cayley_sum, from_action_graph, twisted_cayley, twisted_cayley_sum, AutomorphismMap,
    BuildError, ConnectionSet, Family, RegularMultigraph,
};
use crate::group::{build_group, GroupAction, GroupDescriptor, GroupError, GroupTable};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read spec document: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed spec document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid spec document: {0}")]
    Validation(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// A group element referenced by index or display label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Label(String),
}

impl ElementRef {
    fn resolve(&self, g: &GroupTable) -> Result<usize, SpecError> {
        match self {
            ElementRef::Index(i) => {
                if *i < g.order() {
                    Ok(*i)
                } else {
                    Err(SpecError::Validation(format!(
                        "element index {i} outside group of order {}",
                        g.order()
                    )))
                }
            }
            ElementRef::Label(s) => {
                if let Ok(i) = s.parse::<usize>() {
                    if i < g.order() {
                        return Ok(i);
                    }
                }
                g.labels()
                    .iter()
                    .position(|l| l == s)
                    .ok_or_else(|| SpecError::Validation(format!("unknown element label {s:?}")))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionKind {
    /// Left multiplication on the group itself.
    Regular,
    /// The defining point action of a permutation-closure group.
    Natural,
    /// The induced action on unordered pairs of points.
    Pairs,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CapsOverride {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ternary: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphSpecDocument {
    #[serde(default = "default_schema_version")]
    pub schema_version: String,
    pub family: Family,
    pub group: GroupDescriptor,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub connection_set: Vec<ElementRef>,
    /// Generator-image map defining the twisting automorphism; extended to
    /// the whole group and validated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<BTreeMap<String, ElementRef>>,
    /// Orbit seed edges `[u, v]` or `[u, v, multiplicity]` (action_graph).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_edges: Option<Vec<Vec<usize>>>,
    /// Which action the orbit closure uses (action_graph; defaults to the
    /// natural action for permutation groups, regular otherwise).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<CapsOverride>,
}

fn default_schema_version() -> String {
    SCHEMA_VERSION.to_string()
}

/// A parsed document resolved into a concrete graph, group, and action.
pub struct ResolvedSpec {
    pub doc: GraphSpecDocument,
    pub group: GroupTable,
    pub action: GroupAction,
    pub gr: RegularMultigraph,
}

pub fn parse_document(json: &str) -> Result<GraphSpecDocument, SpecError> {
    let doc: GraphSpecDocument = serde_json::from_str(json)?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(SpecError::Validation(format!(
            "unsupported schema_version {:?}, expected {SCHEMA_VERSION:?}",
            doc.schema_version
        )));
    }
    Ok(doc)
}

pub fn load_document(path: &std::path::Path) -> Result<GraphSpecDocument, SpecError> {
    parse_document(&std::fs::read_to_string(path)?)
}

/// Extends a generator-image map to a full automorphism: the images of all
/// products of the given generators are forced, the generators must generate
/// the group, and the extension must be a bijective homomorphism.
fn resolve_automorphism(
    g: &GroupTable,
    images: &BTreeMap<String, ElementRef>,
) -> Result<AutomorphismMap, SpecError> {
    let mut gens: Vec<(usize, usize)> = Vec::new();
    for (key, value) in images {
        let from = ElementRef::Label(key.clone()).resolve(g)?;
        let to = value.resolve(g)?;
        gens.push((from, to));
    }
    let n = g.order();
    let mut sigma: Vec<Option<usize>> = vec![None; n];
    sigma[g.identity()] = Some(g.identity());
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        let sx = sigma[x].expect("frontier elements are mapped");
        for &(from, to) in &gens {
            let y = g.mul(x, from);
            let sy = g.mul(sx, to);
            match sigma[y] {
                None => {
                    sigma[y] = Some(sy);
                    frontier.push(y);
                }
                Some(existing) if existing != sy => {
                    return Err(SpecError::Validation(
                        "automorphism images are inconsistent".into(),
                    ))
                }
                _ => {}
            }
        }
    }
    let perm: Option<Vec<usize>> = sigma.into_iter().collect();
    let perm = perm.ok_or_else(|| {
        SpecError::Validation("automorphism generators do not generate the group".into())
    })?;
    Ok(AutomorphismMap::new(g, perm)?)
}

fn forbid(cond: bool, what: &str, family: &str) -> Result<(), SpecError> {
    if cond {
        Err(SpecError::Validation(format!(
            "field {what:?} is not used by family {family:?}"
        )))
    } else {
        Ok(())
    }
}

pub fn resolve(doc: GraphSpecDocument) -> Result<ResolvedSpec, SpecError> {
    let group = build_group(&doc.group)?;
    let family = doc.family.as_str();
    let gr = match doc.family {
        Family::Cayley | Family::CayleySum | Family::TwistedCayley | Family::TwistedCayleySum => {
            forbid(doc.base_edges.is_some(), "base_edges", family)?;
            forbid(doc.action.is_some(), "action", family)?;
            if doc.connection_set.is_empty() {
                return Err(SpecError::Validation(
                    "connection_set is required for this family".into(),
                ));
            }
            let elements = doc
                .connection_set
                .iter()
                .map(|e| e.resolve(&group))
                .collect::<Result<Vec<_>, _>>()?;
            let s = ConnectionSet::new(&group, elements)?;
            let twisted = matches!(doc.family, Family::TwistedCayley | Family::TwistedCayleySum);
            let sigma = match (&doc.automorphism, twisted) {
                (Some(images), true) => resolve_automorphism(&group, images)?,
                (None, true) => {
                    return Err(SpecError::Validation(
                        "twisted families require an automorphism".into(),
                    ))
                }
                (Some(_), false) => {
                    return Err(SpecError::Validation(
                        "automorphism is only used by the twisted families".into(),
                    ))
                }
                (None, false) => AutomorphismMap::identity(&group),
            };
            match doc.family {
                Family::Cayley => cayley(&group, &s)?,
                Family::CayleySum => cayley_sum(&group, &s)?,
                Family::TwistedCayley => twisted_cayley(&group, &s, &sigma)?,
                Family::TwistedCayleySum => twisted_cayley_sum(&group, &s, &sigma)?,
                Family::ActionGraph => unreachable!(),
            }
        }
        Family::ActionGraph => {
            forbid(!doc.connection_set.is_empty(), "connection_set", family)?;
            forbid(doc.automorphism.is_some(), "automorphism", family)?;
            let edges = doc.base_edges.as_ref().ok_or_else(|| {
                SpecError::Validation("base_edges is required for action_graph".into())
            })?;
            let mut base = Vec::new();
            for e in edges {
                match e.as_slice() {
                    [u, v] => base.push((*u, *v, 1u32)),
                    [u, v, m] => base.push((*u, *v, *m as u32)),
                    _ => {
                        return Err(SpecError::Validation(
                            "base edges must be [u,v] or [u,v,multiplicity]".into(),
                        ))
                    }
                }
            }
            let kind = doc.action.unwrap_or(if group.natural_perms().is_some() {
                ActionKind::Natural
            } else {
                ActionKind::Regular
            });
            let action = build_action(&group, kind)?;
            let description = format!("orbit_graph({})", doc.group);
            return Ok(ResolvedSpec {
                gr: from_action_graph(&action, &base, description)?,
                group,
                action,
                doc,
            });
        }
    };
    let action = GroupAction::regular(&group);
    Ok(ResolvedSpec {
        doc,
        group,
        action,
        gr,
    })
}

fn build_action(group: &GroupTable, kind: ActionKind) -> Result<GroupAction, SpecError> {
    Ok(match kind {
        ActionKind::Regular => GroupAction::regular(group),
        ActionKind::Natural => GroupAction::natural(group)?,
        ActionKind::Pairs => GroupAction::natural(group)?.on_pairs(group)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_resolve_cayley() {
        let doc =
            parse_document(r#"{"family":"cayley","group":{"cyclic":5},"connection_set":[1,4]}"#)
                .unwrap();
        let resolved = resolve(doc).unwrap();
        assert_eq!(resolved.gr.n(), 5);
        assert_eq!(resolved.gr.degree(), 2);
    }

    #[test]
    fn resolve_twisted_with_generator_images() {
        let doc = parse_document(
            r#"{"family":"twisted_cayley_sum","group":{"cyclic":9},
                "connection_set":[1,8],"automorphism":{"1":8}}"#,
        )
        .unwrap();
        let resolved = resolve(doc).unwrap();
        assert_eq!(resolved.gr.n(), 9);
        // negation twist of {1,8} is the 9-cycle
        assert_eq!(resolved.gr.entry(1, 0), 1);
        assert_eq!(resolved.gr.entry(8, 0), 1);
    }

    #[test]
    fn resolve_petersen_document() {
        let doc = parse_document(
            r#"{"family":"action_graph",
                "group":{"from_permutations":[[1,2,0,3,4],[1,2,3,4,0]]},
                "action":"pairs","base_edges":[[0,7]]}"#,
        )
        .unwrap();
        let resolved = resolve(doc).unwrap();
        assert_eq!(resolved.gr.n(), 10);
        assert_eq!(resolved.gr.degree(), 3);
    }

    #[test]
    fn labels_resolve() {
        let doc = parse_document(
            r#"{"family":"cayley","group":{"dihedral":4},
                "connection_set":["r1","r3","s","sr1"]}"#,
        )
        .unwrap();
        let resolved = resolve(doc).unwrap();
        assert_eq!(resolved.gr.degree(), 4);
    }

    #[test]
    fn validation_errors() {
        assert!(parse_document("{not json").is_err());

        // missing connection set
        let doc = parse_document(r#"{"family":"cayley","group":{"cyclic":5}}"#).unwrap();
        assert!(matches!(resolve(doc), Err(SpecError::Validation(_))));

        // stray field for the family
        let doc = parse_document(
            r#"{"family":"cayley","group":{"cyclic":5},
                "connection_set":[1,4],"base_edges":[[0,1]]}"#,
        )
        .unwrap();
        assert!(matches!(resolve(doc), Err(SpecError::Validation(_))));

        // wrong schema version
        assert!(parse_document(
            r#"{"schema_version":"99","family":"cayley","group":{"cyclic":5},
                "connection_set":[1,4]}"#
        )
        .is_err());

        // automorphism images that conflict (x -> 2x forced onto 2 -> 3)
        let doc = parse_document(
            r#"{"family":"twisted_cayley","group":{"cyclic":5},
                "connection_set":[1,4],"automorphism":{"1":2,"2":3}}"#,
        )
        .unwrap();
        assert!(matches!(resolve(doc), Err(SpecError::Validation(_))));
    }
}
