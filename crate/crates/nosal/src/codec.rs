//! graph6 encoder/decoder, bit-exact per the published format.
//!
//! Vertex count first (one char for n <= 62, `~` + three chars for
//! n <= 258047), then the upper triangle in column-major order packed into
//! 6-bit groups, each offset by 63.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 character {ch:?} at byte {pos}")]
    InvalidChar { pos: usize, ch: char },
    #[error("truncated graph6 payload: expected {expected} data chars, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing data after graph6 payload: expected {expected} data chars, got {got}")]
    TrailingData { expected: usize, got: usize },
    #[error("vertex count {0} exceeds the supported graph6 range (<= 258047)")]
    TooLarge(usize),
}

const OFFSET: u8 = 63;

fn payload_chars(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encodes a graph to its graph6 string.
pub fn graph6_encode(g: &Graph) -> Result<String, CodecError> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else if n <= 258_047 {
        out.push(b'~');
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    } else {
        return Err(CodecError::TooLarge(n));
    }
    if n >= 2 {
        let mut acc: u8 = 0;
        let mut filled = 0u8;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(g.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push(OFFSET + acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            acc <<= 6 - filled;
            out.push(OFFSET + acc);
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes a graph6 string.
pub fn graph6_decode(s: &str) -> Result<Graph, CodecError> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(CodecError::Empty);
    }
    let check = |pos: usize| -> Result<u8, CodecError> {
        let b = *bytes.get(pos).ok_or(CodecError::Truncated {
            expected: pos + 1,
            got: bytes.len(),
        })?;
        if !(OFFSET..=126).contains(&b) {
            return Err(CodecError::InvalidChar {
                pos,
                ch: b as char,
            });
        }
        Ok(b - OFFSET)
    };
    let (n, data_start) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            // 8-byte form for n > 258047 is out of supported range.
            return Err(CodecError::TooLarge(usize::MAX));
        }
        let hi = check(1)? as usize;
        let mid = check(2)? as usize;
        let lo = check(3)? as usize;
        ((hi << 12) | (mid << 6) | lo, 4)
    } else {
        (check(0)? as usize, 1)
    };
    let expected = if n >= 2 { payload_chars(n) } else { 0 };
    let got = bytes.len() - data_start;
    if got < expected {
        return Err(CodecError::Truncated { expected, got });
    }
    if got > expected {
        return Err(CodecError::TrailingData { expected, got });
    }
    let mut g = Graph::empty(n);
    let mut bit_idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = check(data_start + bit_idx / 6)?;
            let bit = (byte >> (5 - bit_idx % 6)) & 1;
            if bit == 1 {
                g.add_edge(i, j);
            }
            bit_idx += 1;
        }
    }
    // Validate remaining characters (padding bits may be anything on input,
    // but the characters themselves must be in range).
    for pos in data_start..(data_start + expected) {
        check(pos)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn k3_encodes_to_bw() {
        // By hand: n=3 -> 'B'; column-major bits (0,1),(0,2),(1,2) = 111,
        // padded to 111000 = 56, 56+63 = 119 = 'w'.
        let g = Graph::complete(3);
        assert_eq!(graph6_encode(&g).unwrap(), "Bw");
        assert_eq!(graph6_decode("Bw").unwrap(), g);
    }

    #[test]
    fn single_vertex_is_at_sign() {
        let g = Graph::empty(1);
        assert_eq!(graph6_encode(&g).unwrap(), "@");
        assert_eq!(graph6_decode("@").unwrap().n(), 1);
    }

    #[test]
    fn known_petgraph_vector() {
        // 5 vertices, edges 02 04 13 34 encodes to "DQc".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(graph6_encode(&g).unwrap(), "DQc");
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(graph6_decode(""), Err(CodecError::Empty));
        assert!(matches!(
            graph6_decode("B"),
            Err(CodecError::Truncated { .. })
        ));
        assert!(matches!(
            graph6_decode("Bww"),
            Err(CodecError::TrailingData { .. })
        ));
        assert!(matches!(
            graph6_decode("B\x1f"),
            Err(CodecError::InvalidChar { .. })
        ));
    }

    #[test]
    fn large_n_header_roundtrip() {
        let mut g = Graph::empty(100);
        g.add_edge(0, 99);
        g.add_edge(63, 64);
        let s = graph6_encode(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    #[test]
    fn random_roundtrip_n_up_to_30() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0906);
        for _ in 0..500 {
            let n = rng.random_range(0..=30);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.3) {
                        g.add_edge(u, v);
                    }
                }
            }
            let s = graph6_encode(&g).unwrap();
            assert_eq!(graph6_decode(&s).unwrap(), g);
        }
    }
}
