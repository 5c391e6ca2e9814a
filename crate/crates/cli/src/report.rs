//! Serialized shapes of the command outputs. Field order here is the key
//! order in the emitted JSON.

use goursat_core::chain::GoursatChain;
use goursat_core::lattice::HasseDiagram;
use goursat_core::Subgroup;
use serde::Serialize;

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SubgroupJson {
    pub order: usize,
    pub members: Vec<String>,
}

impl From<&Subgroup> for SubgroupJson {
    fn from(g: &Subgroup) -> Self {
        Self {
            order: g.order(),
            members: g.member_labels(),
        }
    }
}

/// One link of a chain. `factor` is 1-based; `theta` lists
/// `[element of Λ, coset representative]` pairs.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct LinkJson {
    pub factor: usize,
    pub gbar: SubgroupJson,
    pub g_rel: SubgroupJson,
    pub theta: Vec<[String; 2]>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ChainJson {
    pub n: usize,
    pub components: usize,
    pub g1bar: SubgroupJson,
    pub links: Vec<LinkJson>,
}

impl ChainJson {
    pub fn from_chain(c: &GoursatChain) -> Self {
        let links = c
            .links()
            .iter()
            .enumerate()
            .map(|(k, link)| {
                let theta = link.theta();
                let dom = theta.domain().parent();
                let cod = theta.codomain().parent();
                LinkJson {
                    factor: k + 2,
                    gbar: link.gbar().into(),
                    g_rel: link.g_rel().into(),
                    theta: theta
                        .pairs()
                        .map(|(x, y)| [dom.element_label(x), cod.element_label(y)])
                        .collect(),
                }
            })
            .collect();
        Self {
            n: c.n(),
            components: c.component_count(),
            g1bar: c.g1bar().into(),
            links,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SubgroupEntry {
    pub order: usize,
    pub members: Vec<String>,
    pub chain: ChainJson,
    pub is_cyclic: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct EnumerateReport {
    pub group: String,
    pub order: usize,
    pub subgroup_count: usize,
    pub subgroups: Vec<SubgroupEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct DecomposeReport {
    pub group: String,
    pub subgroup: SubgroupJson,
    pub chain: ChainJson,
    pub reconstruction_matches: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassifyReport {
    pub group: String,
    pub criterion: String,
    pub cyclic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_order: Option<usize>,
    pub direct_order: usize,
    pub direct_cyclic: bool,
    pub abelian: bool,
    pub p_group_for: Option<u64>,
    pub product_of_projections: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct LatticeNode {
    pub idx: usize,
    pub order: usize,
    pub members: Vec<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct LatticeReport {
    pub group: String,
    pub node_count: usize,
    pub edge_count: usize,
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<[usize; 2]>,
}

impl LatticeReport {
    pub fn new(group: &str, d: &HasseDiagram) -> Self {
        let nodes: Vec<LatticeNode> = d
            .nodes()
            .iter()
            .enumerate()
            .map(|(idx, g)| LatticeNode {
                idx,
                order: g.order(),
                members: g.member_labels(),
            })
            .collect();
        let edges: Vec<[usize; 2]> = d.edges().iter().map(|&(u, v)| [u, v]).collect();
        Self {
            group: group.to_string(),
            node_count: nodes.len(),
            edge_count: edges.len(),
            nodes,
            edges,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub group: String,
    pub order: usize,
    pub goursat_count: usize,
    pub oracle_count: usize,
    pub sets_equal: bool,
    pub roundtrip_ok: bool,
    pub verified: bool,
}
