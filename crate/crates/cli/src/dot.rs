use std::fmt::Write as _;

use renner::order::HasseDiagram;

/// DOT text for a Hasse diagram: one node per element and one edge per
/// cover, lower to upper, both in lexicographic order.
pub fn dot_export(h: &HasseDiagram, name: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{name}\" {{");
    s.push_str("  rankdir=BT;\n");
    for x in &h.elements {
        let _ = writeln!(s, "  \"{x}\";");
    }
    for &(a, b) in &h.covers {
        let _ = writeln!(s, "  \"{}\" -> \"{}\";", h.elements[a], h.elements[b]);
    }
    s.push_str("}\n");
    s
}
