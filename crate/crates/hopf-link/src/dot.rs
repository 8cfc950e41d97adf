//! Graphviz export of link quivers.

use hopf_link_core::link::LinkQuiver;

/// Vertices `C{i}:dim{d}`, one undirected edge per direct link (self-links
/// included), one cluster per link class.
pub fn quiver_dot(name: &str, q: &LinkQuiver) -> String {
    let mut out = format!("graph \"{}\" {{\n", name.replace('"', "'"));
    for (k, class) in q.classes.iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_{} {{\n", k));
        for &v in class {
            out.push_str(&format!("    C{} [label=\"C{}:dim{}\"];\n", v, v, q.vertex_dims[v]));
        }
        out.push_str("  }\n");
    }
    for &v in &q.loops {
        out.push_str(&format!("  C{} -- C{};\n", v, v));
    }
    for &(a, b) in &q.edges {
        out.push_str(&format!("  C{} -- C{};\n", a, b));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopf_link_core::coalg::sweedler;
    use hopf_link_core::link::link_quiver;
    use hopf_link_core::radical::analyze;

    #[test]
    fn sweedler_dot() {
        let h = sweedler();
        let q = link_quiver(h.coalgebra(), &analyze(&h).unwrap()).unwrap();
        let d = quiver_dot("sweedler", &q);
        assert_eq!(d.matches("label=").count(), 2);
        assert_eq!(d.matches(" -- ").count(), 1);
        assert_eq!(d.matches("subgraph cluster_").count(), 1);
        assert!(d.contains("C0 [label=\"C0:dim1\"]"));
    }
}
