//! graph6 encoding: an order header followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per byte and offset by 63.

use thiserror::Error;

use crate::graph::Graph;

/// Orders above this use the four-byte `~` header.
pub const SHORT_HEADER_MAX: usize = 62;
const LONG_HEADER_MAX: usize = 258_047;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header")]
    BadHeader,
    #[error("byte {0:#x} is outside the graph6 range 63..=126")]
    BadByte(u8),
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits after the adjacency data are not zero")]
    NonzeroPadding,
    #[error("graph on {0} vertices is too large for graph6")]
    TooLarge(usize),
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= SHORT_HEADER_MAX {
        out.push(n as u8 + 63);
    } else if n <= LONG_HEADER_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::BadByte(b));
    }
    let (n, data) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Graph6Error::BadHeader);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= SHORT_HEADER_MAX {
            return Err(Graph6Error::BadHeader);
        }
        (n, &bytes[4..])
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: data.len(),
        });
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in bit_count..expected * 6 {
        if bit(k) {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded pairs are in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_vertex() {
        assert_eq!(encode(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(decode("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn triangle_hand_packed() {
        // Bits (0,1),(0,2),(1,2) = 111 then 000 padding: 0b111000 = 56, +63 = 'w'.
        assert_eq!(encode(&Graph::complete(3)).unwrap(), "Bw");
    }

    #[test]
    fn known_string_from_petgraph_fixture() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
    }

    #[test]
    fn random_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..1000 {
            let n = rng.gen_range(0..=20);
            let p: f64 = rng.gen();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
        }
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::cycle(70);
        let s = encode(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("B"), Err(Graph6Error::WrongLength { expected: 1, found: 0 }));
        // 'x' = 57 = 0b111001 sets a padding bit for n = 3.
        assert_eq!(decode("Bx"), Err(Graph6Error::NonzeroPadding));
        assert_eq!(decode("B\x20"), Err(Graph6Error::BadByte(0x20)));
        assert_eq!(decode("~~"), Err(Graph6Error::BadHeader));
    }
}
