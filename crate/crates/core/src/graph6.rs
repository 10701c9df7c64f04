//! Bit-exact encoder/decoder for the standard graph6 text format.
//!
//! The format packs the upper triangle of the adjacency matrix column by
//! column ((0,1), (0,2), (1,2), (0,3), ...) into 6-bit groups offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Encode a graph as graph6. Two equal graphs always produce identical bytes.
pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_size(&mut out, n);
    let mut acc: u8 = 0;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn encode_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Decode a graph6 string (an optional `>>graph6<<` header is accepted).
pub fn decode(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6 {
                pos,
                msg: format!("byte {b:#04x} outside graph6 range 63..=126"),
            });
        }
    }
    let (n, mut pos) = decode_size(bytes)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(Error::Graph6 {
            pos: bytes.len().min(pos + needed),
            msg: format!(
                "expected {} edge bytes for {} vertices, found {}",
                needed,
                n,
                bytes.len() - pos
            ),
        });
    }
    let mut edges = Vec::new();
    let mut acc: u8 = 0;
    let mut avail = 0;
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            if avail == 0 {
                acc = bytes[pos] - 63;
                pos += 1;
                avail = 6;
            }
            if acc & (1 << (avail - 1)) != 0 {
                edges.push((i, j));
            }
            avail -= 1;
            idx += 1;
        }
    }
    debug_assert_eq!(idx, bit_count);
    // Padding bits must be zero for a bit-exact canonical encoding.
    if avail > 0 && acc & ((1 << avail) - 1) != 0 {
        return Err(Error::Graph6 {
            pos: pos - 1,
            msg: "nonzero padding bits".into(),
        });
    }
    Graph::new(n, edges)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let err = |pos: usize, msg: &str| Error::Graph6 {
        pos,
        msg: msg.into(),
    };
    match bytes {
        [] => Err(err(0, "empty input")),
        [b, ..] if *b != 126 => Ok(((*b - 63) as usize, 1)),
        [_, b, ..] if *b != 126 => {
            if bytes.len() < 4 {
                return Err(err(bytes.len(), "truncated 3-byte size"));
            }
            let mut n = 0usize;
            for &x in &bytes[1..4] {
                n = (n << 6) | (x - 63) as usize;
            }
            Ok((n, 4))
        }
        _ => {
            if bytes.len() < 8 {
                return Err(err(bytes.len(), "truncated 6-byte size"));
            }
            let mut n = 0usize;
            for &x in &bytes[2..8] {
                n = (n << 6) | (x - 63) as usize;
            }
            Ok((n, 8))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_standard, cycle, StandardKind};

    #[test]
    fn k1_encodes_to_at_sign() {
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(decode("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn known_encoding() {
        // 5 vertices, edges (0,2), (0,4), (1,3), (3,4) encode as "DQc".
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn c5_round_trip() {
        let c5 = cycle(5);
        let text = encode(&c5);
        let back = decode(&text).unwrap();
        assert_eq!(back.vertex_count(), 5);
        assert_eq!(back.edge_count(), 5);
        assert_eq!(back, c5);
        // Encoding is stable across calls.
        assert_eq!(encode(&c5), text);
    }

    #[test]
    fn header_accepted() {
        let c4 = cycle(4);
        let text = format!(">>graph6<<{}", encode(&c4));
        assert_eq!(decode(&text).unwrap(), c4);
    }

    #[test]
    fn malformed_inputs_rejected_with_position() {
        match decode("D") {
            Err(Error::Graph6 { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected graph6 error, got {other:?}"),
        }
        match decode("DQc ") {
            Err(Error::Graph6 { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected graph6 error, got {other:?}"),
        }
        assert!(decode("").is_err());
        // Nonzero padding bits.
        let g = build_standard(StandardKind::Path, 1).unwrap();
        let mut bytes = encode(&g).into_bytes();
        *bytes.last_mut().unwrap() |= 1;
        assert!(decode(std::str::from_utf8(&bytes).unwrap()).is_err());
    }

    #[test]
    fn large_vertex_count_size_field() {
        let g = Graph::empty(100);
        let text = encode(&g);
        assert_eq!(&text[..1], "~");
        let back = decode(&text).unwrap();
        assert_eq!(back.vertex_count(), 100);
        assert_eq!(back.edge_count(), 0);
    }
}
