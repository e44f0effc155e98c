//! graph6 codec, short form only (orders 1 through 62).

use thiserror::Error;

use crate::graph::{bit, Graph, GraphError};

pub const MAX_SHORT_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6: {0}")]
    Malformed(String),
    #[error("graph of order {0} does not fit the short graph6 form")]
    TooLarge(usize),
}

impl From<GraphError> for Graph6Error {
    fn from(e: GraphError) -> Self {
        Graph6Error::Malformed(e.to_string())
    }
}

/// Encode the labelled adjacency of `g` (upper triangle, column by column).
pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | u8::from(row & bit(i) != 0);
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Graph6Error::Malformed("empty string".into()))?;
    if let Some(b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Graph6Error::Malformed(format!("byte {b} outside 63..=126")));
    }
    if first == 126 {
        return Err(Graph6Error::Malformed(
            "long-form order prefix is not supported".into(),
        ));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::Malformed("order 0".into()));
    }
    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Malformed(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // padding bits must be zero for the encoding to be canonical
    if !pairs.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(Graph6Error::Malformed("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_vertex_examples() {
        // 'A' = 65 -> n = 2; one pair bit, padded: 0b100000 + 63 = 95 = '_'
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(encode(&k2).unwrap(), "A_");
        assert_eq!(decode("A_").unwrap(), k2);
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(encode(&e2).unwrap(), "A?");
        assert_eq!(decode("A?").unwrap(), e2);
    }

    #[test]
    fn known_strings() {
        // C_4 labelled 0-1-2-3-0: pairs (0,1)=1 (0,2)=0 (1,2)=1 (0,3)=1 (1,3)=0 (2,3)=1
        // bits 101101 = 45, + 63 = 108 = 'l'
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(encode(&c4).unwrap(), "Cl");
        // K_4: all six bits set -> 63 + 63 = '~'
        assert_eq!(encode(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(encode(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(decode("@").unwrap().order(), 1);
        // the petgraph test fixture
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(""), Err(Graph6Error::Malformed(_))));
        assert!(matches!(decode("A"), Err(Graph6Error::Malformed(_))));
        assert!(matches!(decode("A__"), Err(Graph6Error::Malformed(_))));
        assert!(matches!(decode("A\x20"), Err(Graph6Error::Malformed(_))));
        assert!(matches!(decode("?"), Err(Graph6Error::Malformed(_))));
        assert!(matches!(decode("~??~"), Err(Graph6Error::Malformed(_))));
        // 'A' + 0b010000 padding bit set
        assert!(matches!(decode("AO"), Err(Graph6Error::Malformed(_))));
    }

    #[test]
    fn too_large() {
        let g = Graph::empty(63).unwrap();
        assert_eq!(encode(&g), Err(Graph6Error::TooLarge(63)));
        assert!(encode(&Graph::empty(62).unwrap()).is_ok());
    }

    #[test]
    fn exhaustive_round_trip_small() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask & (1 << k) != 0)
                        .map(|(_, &p)| p),
                )
                .unwrap();
                let s = encode(&g).unwrap();
                assert_eq!(decode(&s).unwrap(), g);
                assert_eq!(encode(&decode(&s).unwrap()).unwrap(), s);
            }
        }
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=20).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                Graph::from_edges(
                    n,
                    pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn decode_inverts_encode(g in arb_graph()) {
            let s = encode(&g).unwrap();
            prop_assert_eq!(decode(&s).unwrap(), g);
        }

        #[test]
        fn complement_is_involution(g in arb_graph()) {
            prop_assert_eq!(g.complement().complement(), g.clone());
            for (u, v) in g.non_edges().into_iter().take(5) {
                let lhs = g.add_edge(u, v).unwrap().complement();
                let rhs = g.complement().remove_edge(u, v).unwrap();
                prop_assert_eq!(lhs.edges(), rhs.edges());
            }
        }
    }
}
