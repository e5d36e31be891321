use std::fmt::Write;

use super::AttackGraph;

pub(super) fn to_dot(g: &AttackGraph) -> String {
    let mut out = String::from("digraph {\n");
    for id in g.names() {
        writeln!(out, "    \"{id}\";").unwrap();
    }
    for &(a, b) in g.attacks() {
        writeln!(out, "    \"{}\" -> \"{}\";", g.name(a), g.name(b)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_dot() {
        let g = AttackGraph::parse("arg(b). arg(a). att(a,b). att(b,a).").unwrap();
        assert_eq!(
            g.to_dot(),
            "digraph {\n    \"b\";\n    \"a\";\n    \"b\" -> \"a\";\n    \"a\" -> \"b\";\n}\n"
        );
    }
}
