//! graph6 encoding, as emitted by `geng` and friends.
//!
//! The upper triangle is read column by column (`(0,1), (0,2), (1,2), (0,3), ...`)
//! and packed big-endian into 6-bit groups, each offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn graph_from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::malformed("empty record"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::malformed(format!("byte {pos} is outside 63..=126")));
    }

    let (n, body) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(Error::TooLarge("8-byte size header (n > 258047)".into()));
    } else {
        if bytes.len() < 4 {
            return Err(Error::malformed("truncated size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        if n < 63 {
            return Err(Error::malformed("non-minimal size header"));
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(format!("{n} vertices")));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::malformed(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = (1u8 << (6 - bits % 6)) - 1;
        if (body[expected - 1] - 63) & pad != 0 {
            return Err(Error::malformed("nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn graph_to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hand_decoded_records() {
        let k2 = graph_from_graph6("A_").unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        assert_eq!(graph_to_graph6(&k2), "A_");
        assert_eq!(graph_to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(graph_to_graph6(&Graph::empty(0).unwrap()), "?");

        // star K_{1,4} centred on vertex 4
        let star = graph_from_graph6("D?{").unwrap();
        assert_eq!(star.n(), 5);
        assert_eq!(star.degree(4), 4);
        assert_eq!(star.edge_count(), 4);
        assert_eq!(graph_to_graph6(&star), "D?{");
    }

    #[test]
    fn petgraph_reference_string() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph_to_graph6(&g), "DQc");
    }

    #[test]
    fn long_headers() {
        for n in [62, 63, 64] {
            let g = Graph::complete(n).unwrap();
            let s = graph_to_graph6(&g);
            assert_eq!(s.starts_with('~'), n >= 63);
            assert_eq!(graph_from_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn malformed_records() {
        let name = |s: &str| graph_from_graph6(s).unwrap_err().name();
        assert_eq!(name(""), "MalformedGraph6");
        assert_eq!(name("A"), "MalformedGraph6");
        assert_eq!(name("A__"), "MalformedGraph6");
        // bit 5 of the single data byte is padding when n = 2
        assert_eq!(name("A`"), "MalformedGraph6");
        assert_eq!(name("A "), "MalformedGraph6");
        assert_eq!(name("~?A?"), "TooLarge");
        assert_eq!(name("~??~"), "MalformedGraph6");
        assert!(graph_from_graph6(">>graph6<<A_\n").is_ok());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph(64)) {
            let s = graph_to_graph6(&g);
            prop_assert_eq!(graph_from_graph6(&s).unwrap(), g);
        }
    }
}
