//! The graph6 ASCII encoding of simple undirected graphs.
//!
//! A graph6 string is a header encoding the order `n` followed by the upper
//! triangle of the adjacency matrix in column-major order — bit `k` of the
//! stream corresponds to the `k`-th pair in the sequence
//! `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...` — packed six bits per
//! byte (most significant bit first) with each byte offset by `63` into the
//! printable range `0x3f..=0x7e`. Orders up to `62` use a single header
//! byte `n + 63`; orders `63..=258047` use `'~'` followed by three bytes
//! holding `n` in 18 bits, big-endian six-bit groups.
//!
//! [`parse`] accepts an optional `>>graph6<<` prefix and ignores trailing
//! ASCII whitespace; it rejects malformed input (bad bytes, wrong length,
//! nonzero padding) with byte-accurate errors rather than guessing.

use super::{Graph, MAX_ORDER};
use crate::error::Graph6Error;

const HEADER_PREFIX: &str = ">>graph6<<";
/// Largest order expressible in the three-byte long form.
const LONG_FORM_MAX: usize = 258_047;

/// Decodes a graph6 string into a [`Graph`].
///
/// # Errors
/// Reports empty input, bytes outside `0x3f..=0x7e` (with their offset),
/// truncated or overlong payloads, nonzero padding bits, and orders above
/// the construction cap ([`MAX_ORDER`]) or the three-byte format limit.
///
/// # Example
/// ```
/// use forcelab_core::graph::graph6;
/// let g = graph6::parse("C~").unwrap();
/// assert!(g.is_complete());
/// assert_eq!(g.order(), 4);
/// ```
pub fn parse(input: &str) -> Result<Graph, Graph6Error> {
    let stripped = input.strip_prefix(HEADER_PREFIX).unwrap_or(input);
    let offset0 = input.len() - stripped.len();
    let bytes = stripped.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let check = |i: usize| -> Result<u8, Graph6Error> {
        match bytes.get(i) {
            Some(&b) if (0x3f..=0x7e).contains(&b) => Ok(b - 63),
            Some(&b) => Err(Graph6Error::InvalidByte {
                byte: b,
                offset: offset0 + i,
            }),
            None => Err(Graph6Error::Truncated {
                expected: offset0 + i + 1,
                found: offset0 + bytes.len(),
            }),
        }
    };

    // Header: n.
    let (n, header_len) = if bytes[0] != b'~' {
        (check(0)? as usize, 1)
    } else if bytes.get(1) == Some(&b'~') {
        // Six-byte huge form: decode only to report the order honestly.
        let mut n = 0usize;
        for i in 2..8 {
            n = n * 64 + check(i)? as usize;
        }
        return Err(Graph6Error::OrderTooLarge {
            n,
            max: MAX_ORDER.min(LONG_FORM_MAX),
        });
    } else {
        let n = (check(1)? as usize) * 64 * 64 + (check(2)? as usize) * 64 + check(3)? as usize;
        (n, 4)
    };
    if n == 0 {
        return Err(Graph6Error::OrderZero);
    }
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { n, max: MAX_ORDER });
    }

    // Payload: ceil(n(n-1)/2 / 6) bytes of adjacency bits.
    let bit_count = n * (n.saturating_sub(1)) / 2;
    let payload_len = (bit_count + 5) / 6;
    if bytes.len() < header_len + payload_len {
        return Err(Graph6Error::Truncated {
            expected: offset0 + header_len + payload_len,
            found: offset0 + bytes.len(),
        });
    }
    if bytes.len() > header_len + payload_len {
        return Err(Graph6Error::TrailingData {
            offset: offset0 + header_len + payload_len,
        });
    }

    let bit = |k: usize| -> Result<bool, Graph6Error> {
        let value = check(header_len + k / 6)?;
        Ok(value & (1 << (5 - k % 6)) != 0)
    };

    let mut g = Graph::empty(n).expect("order checked against cap");
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            if bit(k)? {
                g.add_edge(u, v).expect("distinct upper-triangle pairs");
            }
            k += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    for pad in bit_count..payload_len * 6 {
        if bit(pad)? {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Encodes a [`Graph`] as a graph6 string (no `>>graph6<<` prefix).
///
/// Uses the single-byte header for orders up to `62` and the three-byte
/// long form above that. Every constructible [`Graph`] fits: the
/// construction cap is below the long-form limit.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= LONG_FORM_MAX);
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn parses_known_strings() {
        // "C~" is K₄.
        let g = parse("C~").unwrap();
        assert_eq!(g, generate::complete(4));

        // "D??" is the edgeless graph on five vertices.
        let g = parse("D??").unwrap();
        assert_eq!((g.order(), g.size()), (5, 0));

        // "DUW" is a 5-cycle (as the labeling 0-2-4-1-3-0).
        let g = parse("DUW").unwrap();
        assert!(g.is_cycle_graph());
        for (u, v) in [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)] {
            assert!(g.has_edge(u, v));
        }

        // Tiny orders; order zero is rejected rather than given conventions.
        assert_eq!(parse("?"), Err(Graph6Error::OrderZero));
        assert_eq!(parse("@").unwrap().order(), 1);
        let k2 = parse("A_").unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
    }

    #[test]
    fn accepts_prefix_and_trailing_whitespace() {
        let g = parse(">>graph6<<C~\n").unwrap();
        assert!(g.is_complete());
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse(""), Err(Graph6Error::Empty));
        assert_eq!(parse("   \n"), Err(Graph6Error::Empty));
        assert_eq!(
            parse("C~~"),
            Err(Graph6Error::TrailingData { offset: 2 })
        );
        assert_eq!(
            parse("C"),
            Err(Graph6Error::Truncated {
                expected: 2,
                found: 1
            })
        );
        assert!(matches!(
            parse("C\x1f"),
            Err(Graph6Error::InvalidByte {
                byte: 0x1f,
                offset: 1
            })
        ));
        // n = 2 has one adjacency bit; the remaining five must be zero.
        // 'A' declares n = 2; byte 'derives' from value with low bits set.
        assert_eq!(parse("A?").unwrap().size(), 0);
        assert_eq!(parse("AO"), Err(Graph6Error::NonzeroPadding));
        // Offsets account for the stripped prefix.
        assert!(matches!(
            parse(">>graph6<<C\x1f"),
            Err(Graph6Error::InvalidByte { offset: 11, .. })
        ));
    }

    #[test]
    fn rejects_oversized_orders() {
        // Long-form header with n = 100000 = 24·64² + 26·64 + 32, which is
        // valid graph6 but beyond the construction cap.
        let hdr = format!(
            "~{}{}{}",
            (24u8 + 63) as char,
            (26u8 + 63) as char,
            (32u8 + 63) as char
        );
        match parse(&hdr) {
            Err(Graph6Error::OrderTooLarge { n, .. }) => assert_eq!(n, 100_000),
            other => panic!("expected OrderTooLarge, got {other:?}"),
        }
        // The six-byte huge form (orders beyond 258047) is recognized and
        // rejected rather than misparsed.
        assert!(matches!(
            parse("~~??????"),
            Err(Graph6Error::OrderTooLarge { n: 0, .. })
        ));
    }

    #[test]
    fn round_trips_the_long_form() {
        let g = generate::path(100);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse(&s).unwrap(), g);
    }

    #[test]
    fn round_trips_assorted_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6672_6163);
        for n in 1..=20 {
            for _ in 0..20 {
                let mut g = Graph::empty(n).unwrap();
                for u in 0..n {
                    for v in (u + 1)..n {
                        if rng.gen_bool(0.4) {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                }
                let s = encode(&g);
                assert_eq!(parse(&s).unwrap(), g, "round-trip failed for {s:?}");
            }
        }
        for g in [
            generate::cycle(7),
            generate::complete(9),
            generate::star(8),
            generate::edgeless(6),
            generate::full_binary_tree(3),
            generate::house(),
            generate::double_diamond(),
        ] {
            assert_eq!(parse(&encode(&g)).unwrap(), g);
        }
    }
}
