//! graph6 encoding (short form, order ≤ 62).
//!
//! One order byte `63 + n`, then the upper triangle of the adjacency matrix
//! in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed big-endian
//! into 6-bit groups, zero-padded, each group offset by 63.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    /// Byte outside the printable range `63..=126`.
    ByteOutOfRange(u8),
    /// Order byte `126` introduces the long form, which is not supported.
    LongForm,
    /// Input ended before all edge bits were read.
    Truncated {
        expected: usize,
    },
    TrailingBytes,
    /// Padding bits in the final group must be zero.
    NonZeroPadding,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph6 parse error at byte {}: ", self.offset)?;
        match self.kind {
            ParseErrorKind::Empty => f.write_str("empty input"),
            ParseErrorKind::ByteOutOfRange(b) => write!(f, "byte 0x{b:02x} is outside 63..=126"),
            ParseErrorKind::LongForm => {
                write!(
                    f,
                    "long-form header (orders above {MAX_ORDER} are unsupported)"
                )
            }
            ParseErrorKind::Truncated { expected } => {
                write!(f, "missing edge bits, expected {expected} bytes in total")
            }
            ParseErrorKind::TrailingBytes => f.write_str("trailing bytes after edge data"),
            ParseErrorKind::NonZeroPadding => f.write_str("non-zero padding bits"),
        }
    }
}

fn edge_bytes(order: usize) -> usize {
    (order * order.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + edge_bytes(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.as_bytes();
    let err = |offset, kind| ParseError { offset, kind };

    let &first = bytes.first().ok_or(err(0, ParseErrorKind::Empty))?;
    if first == 126 {
        return Err(err(0, ParseErrorKind::LongForm));
    }
    if !(63..=126).contains(&first) {
        return Err(err(0, ParseErrorKind::ByteOutOfRange(first)));
    }
    let n = (first - 63) as usize;
    let expected = 1 + edge_bytes(n);
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        if pos < expected {
            return Err(err(pos, ParseErrorKind::ByteOutOfRange(bytes[pos])));
        }
    }
    if bytes.len() < expected {
        return Err(err(bytes.len(), ParseErrorKind::Truncated { expected }));
    }
    if bytes.len() > expected {
        return Err(err(expected, ParseErrorKind::TrailingBytes));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = bytes[1 + bit / 6] - 63;
            if group >> (5 - bit % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        if last & ((1u8 << (6 - bit % 6)) - 1) != 0 {
            return Err(err(expected - 1, ParseErrorKind::NonZeroPadding));
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is symmetric and loop-free"))
}
