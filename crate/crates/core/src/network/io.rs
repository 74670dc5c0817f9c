use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{NetworkError, PlanarNetwork};
use crate::exact::Rat;

impl PlanarNetwork {
    /// Parses the JSON form; the result is validated.
    pub fn from_json(text: &str) -> Result<PlanarNetwork, NetworkError> {
        let net: PlanarNetwork = serde_json::from_str(text).map_err(|e| NetworkError::Json(e.to_string()))?;
        net.validate().map_err(NetworkError::Invalid)?;
        Ok(net)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("network serializes")
    }

    /// Graphviz rendering with pinned positions and weights as labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph network {\n  rankdir=LR;\n");
        // scale coordinates to integers so positions stay exact
        let scale = self
            .vertices
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.x.denom()).lcm(v.y.denom()));
        let scaled = |r: &Rat| (r * Rat::from_integer(scale.clone())).to_integer();
        for v in &self.vertices {
            let label = if let Some(i) = self.sources.iter().position(|&s| s == v.id) {
                format!("s{}", i + 1)
            } else if let Some(j) = self.sinks.iter().position(|&t| t == v.id) {
                format!("t{}", j + 1)
            } else {
                String::new()
            };
            let (x, y) = (scaled(&v.x), scaled(&v.y));
            let _ = writeln!(out, "  v{} [label=\"{label}\", pos=\"{x},{y}!\"];", v.id);
        }
        for e in &self.edges {
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.from, e.to, e.weight);
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::exact::ratio;
    use crate::network::{elementary_network, ElementaryKind, PlanarNetwork};

    #[test]
    fn json_round_trip() {
        let g = elementary_network(3, &ElementaryKind::Lower { j: 1, c: ratio(2, 3) }).unwrap();
        let text = g.to_json();
        assert!(text.contains("\"2/3\""));
        assert_eq!(PlanarNetwork::from_json(&text).unwrap(), g);
        assert!(PlanarNetwork::from_json("{").is_err());
    }

    #[test]
    fn json_is_validated() {
        let g = elementary_network(2, &ElementaryKind::Lower { j: 1, c: ratio(1, 1) }).unwrap();
        let mut value: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        value["edges"][0]["weight"] = "-1".into();
        assert!(PlanarNetwork::from_json(&value.to_string()).is_err());
    }

    #[test]
    fn dot_lists_terminals_and_weights() {
        let g = elementary_network(2, &ElementaryKind::Upper { j: 1, c: ratio(5, 2) }).unwrap();
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph network {"));
        assert!(dot.contains("label=\"s1\"") && dot.contains("label=\"t2\""));
        assert!(dot.contains("label=\"5/2\""));
    }
}
