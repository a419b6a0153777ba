//! graph6 text encoding.
//!
//! One graph per line: a header byte `n + 63` (orders up to 62), then the
//! upper triangle of the adjacency matrix in column-major order, packed six
//! bits per printable byte (offset 63). Padding bits must be zero; every
//! violation reports the byte offset where it was found.

use super::Graph;
use std::fmt;

/// Largest order expressible with a single-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    /// Empty input line.
    Empty,
    /// Order is above [`GRAPH6_MAX_ORDER`] (writing) or the header announces
    /// a multi-byte order (parsing).
    UnsupportedOrder(usize),
    /// Byte outside the printable graph6 range 63..=126.
    InvalidByte { offset: usize, byte: u8 },
    /// Wrong total length for the announced order.
    BadLength { expected: usize, got: usize },
    /// A padding bit beyond the last vertex pair is set.
    TrailingBits { offset: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::UnsupportedOrder(n) => {
                write!(f, "order {} not supported (single-byte headers cover 0..=62)", n)
            }
            Graph6Error::InvalidByte { offset, byte } => {
                write!(f, "invalid graph6 byte 0x{:02x} at offset {}", byte, offset)
            }
            Graph6Error::BadLength { expected, got } => {
                write!(f, "bad graph6 length: expected {} bytes, got {}", expected, got)
            }
            Graph6Error::TrailingBits { offset } => {
                write!(f, "nonzero padding bits in byte at offset {}", offset)
            }
        }
    }
}

impl std::error::Error for Graph6Error {}

/// Parse a single graph6 line. A trailing newline (or CRLF) is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let &header = bytes.first().ok_or(Graph6Error::Empty)?;
    if header == 126 {
        // multi-byte order header
        return Err(Graph6Error::UnsupportedOrder(63));
    }
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::InvalidByte { offset: 0, byte: header });
    }
    let n = (header - 63) as usize;
    let pair_bits = n * n.saturating_sub(1) / 2;
    let data_len = pair_bits.div_ceil(6);
    if bytes.len() != 1 + data_len {
        return Err(Graph6Error::BadLength { expected: 1 + data_len, got: bytes.len() });
    }
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset: 1 + i, byte: b });
        }
    }

    let bit_at = |k: usize| -> bool {
        let byte = bytes[1 + k / 6] - 63;
        byte >> (5 - k % 6) & 1 == 1
    };

    let mut g = Graph::new(n).expect("graph6 order is at most 62");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                g.add_edge(i, j).expect("upper-triangle bits visit each pair once");
            }
            k += 1;
        }
    }
    for pad in pair_bits..data_len * 6 {
        if bit_at(pad) {
            return Err(Graph6Error::TrailingBits { offset: 1 + pad / 6 });
        }
    }
    Ok(g)
}

/// Encode a graph as a single graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let pair_bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + pair_bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges_of(s: &str) -> Vec<(usize, usize)> {
        parse_graph6(s).unwrap().edges()
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
        assert_eq!(write_graph6(&Graph::new(0).unwrap()).unwrap(), "?");
        assert_eq!(write_graph6(&Graph::new(1).unwrap()).unwrap(), "@");
        assert_eq!(write_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
    }

    #[test]
    fn fixture_strings() {
        // single edge plus an isolated vertex
        assert_eq!(edges_of("B_"), vec![(0, 1)]);
        // complete graph on four vertices
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        // star with hub 4
        assert_eq!(edges_of("D?{"), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        // paths and cycles as written by this encoder
        assert_eq!(write_graph6(&Graph::path(4).unwrap()).unwrap(), "Ch");
        assert_eq!(write_graph6(&Graph::cycle(4).unwrap()).unwrap(), "Cl");
        assert_eq!(write_graph6(&Graph::cycle(5).unwrap()).unwrap(), "Dhc");
        assert_eq!(write_graph6(&Graph::complete_bipartite(2, 3).unwrap()).unwrap(), "D]o");
    }

    #[test]
    fn round_trips() {
        for g in [
            Graph::new(0).unwrap(),
            Graph::new(5).unwrap(),
            Graph::path(7).unwrap(),
            Graph::cycle(9).unwrap(),
            Graph::complete(8).unwrap(),
            Graph::complete_bipartite(4, 5).unwrap(),
            Graph::star(61).unwrap(),
        ] {
            let s = write_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g, "round trip failed for {}", s);
        }
        assert_eq!(parse_graph6("Dhc\n").unwrap(), Graph::cycle(5).unwrap());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::UnsupportedOrder(63)));
        assert_eq!(
            parse_graph6(" ?"),
            Err(Graph6Error::InvalidByte { offset: 0, byte: b' ' })
        );
        assert_eq!(parse_graph6("C"), Err(Graph6Error::BadLength { expected: 2, got: 1 }));
        assert_eq!(
            parse_graph6("C~~"),
            Err(Graph6Error::BadLength { expected: 2, got: 3 })
        );
        assert_eq!(
            parse_graph6("B\x1f"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: 0x1f })
        );
        // order 2 uses one pair bit; the other five must stay clear
        assert_eq!(parse_graph6("A~"), Err(Graph6Error::TrailingBits { offset: 1 }));
        assert!(parse_graph6("A_").is_ok());
    }

    #[test]
    fn write_rejects_large_orders() {
        let g = Graph::new(63).unwrap();
        assert_eq!(write_graph6(&g), Err(Graph6Error::UnsupportedOrder(63)));
    }
}
