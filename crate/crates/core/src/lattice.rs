//! Hasse diagrams of subgroup lattices.

use std::fmt::Write;

use crate::subgroup::Subgroup;

/// Covering relation on a list of subgroups of one group.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    nodes: Vec<Subgroup>,
    edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// Edge `u -> v` iff `u ⊂ v` with no listed subgroup strictly between.
    pub fn new(nodes: Vec<Subgroup>) -> Self {
        let k = nodes.len();
        let below: Vec<Vec<bool>> = (0..k)
            .map(|u| {
                (0..k)
                    .map(|v| u != v && nodes[u].order() < nodes[v].order() && nodes[u].is_contained_in(&nodes[v]))
                    .collect()
            })
            .collect();
        let mut edges = Vec::new();
        for u in 0..k {
            for v in 0..k {
                if below[u][v] && !(0..k).any(|w| below[u][w] && below[w][v]) {
                    edges.push((u, v));
                }
            }
        }
        Self { nodes, edges }
    }

    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Graphviz rendering; node `i` is labeled `order=k, idx=i`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph subgroup_lattice {\n    rankdir=BT;\n");
        for (i, h) in self.nodes.iter().enumerate() {
            writeln!(out, "    n{i} [label=\"order={}, idx={i}\"];", h.order()).unwrap();
        }
        for (u, v) in &self.edges {
            writeln!(out, "    n{u} -> n{v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_group, GroupKind};
    use crate::group::Limits;
    use crate::subgroup::all_subgroups;

    fn diagram(kind: GroupKind) -> HasseDiagram {
        let g = make_group(kind, &Limits::default()).unwrap();
        HasseDiagram::new(all_subgroups(&g, &Limits::default()).unwrap())
    }

    #[test]
    fn chains_and_diamonds() {
        let z1 = diagram(GroupKind::Cyclic(1));
        assert_eq!((z1.nodes().len(), z1.edges().len()), (1, 0));
        let z4 = diagram(GroupKind::Cyclic(4));
        assert_eq!(z4.edges(), &[(0, 1), (1, 2)]);
        // Z6: 1 < 2, 3 < 6
        let z6 = diagram(GroupKind::Cyclic(6));
        assert_eq!(z6.edges().len(), 4);
        // S3: trivial under four atoms, each atom under S3
        let s3 = diagram(GroupKind::Symmetric(3));
        assert_eq!(s3.edges().len(), 8);
    }

    #[test]
    fn dot_output() {
        let dot = diagram(GroupKind::Cyclic(4)).to_dot();
        assert!(dot.starts_with("digraph subgroup_lattice {"));
        assert!(dot.contains("n0 [label=\"order=1, idx=0\"];"));
        assert!(dot.contains("n1 -> n2;"));
        assert_eq!(dot.matches("->").count(), 2);
    }
}
