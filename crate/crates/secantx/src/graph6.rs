//! The graph6 ASCII interchange format, one graph per line, for n <= 62.
//!
//! Layout: byte 0 encodes n as n+63; the upper-triangle bits b(i,j) for
//! 0 <= i < j < n follow in column order (j ascending, i inside j), packed six
//! bits per byte, each offset by 63. Padding bits must be zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_MAX_VERTICES: usize = 62;

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            msg: "empty graph6 line".to_string(),
        });
    }
    if bytes[0] == b'~' {
        return Err(Error::Parse {
            offset: 0,
            msg: "multi-byte vertex counts (n > 62) are not supported".to_string(),
        });
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(Error::Parse {
            offset: 0,
            msg: format!("invalid size byte 0x{:02x}", bytes[0]),
        });
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * (n - 1) / 2;
    let expect = 1 + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(Error::Parse {
            offset: bytes.len().min(expect),
            msg: format!(
                "wrong length for n = {}: got {} bytes, expected {}",
                n,
                bytes.len(),
                expect
            ),
        });
    }
    let mut g = Graph::new(n);
    let mut t = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + t / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Parse {
                    offset: 1 + t / 6,
                    msg: format!("invalid data byte 0x{:02x}", byte),
                });
            }
            let bit = (byte - 63) >> (5 - t % 6) & 1;
            if bit == 1 {
                g.add_edge(i, j).expect("indices in range");
            }
            t += 1;
            if t == nbits {
                break 'outer;
            }
        }
    }
    // validate the padding bits and remaining byte range
    for (k, &byte) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&byte) {
            return Err(Error::Parse {
                offset: k,
                msg: format!("invalid data byte 0x{:02x}", byte),
            });
        }
    }
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse {
                offset: bytes.len() - 1,
                msg: "nonzero padding bits".to_string(),
            });
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::Infeasible {
            what: "graph6 emission",
            n,
            max: GRAPH6_MAX_VERTICES,
        });
    }
    let nbits = n * (n - 1) / 2;
    let mut out = vec![63 + n as u8];
    let mut t = 0usize;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                cur |= 1 << (5 - t % 6);
            }
            t += 1;
            if t % 6 == 0 {
                out.push(cur + 63);
                cur = 0;
            }
        }
    }
    if nbits % 6 != 0 {
        out.push(cur + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ascii"))
}

#[cfg(test)]
mod tests {
    use super::*;

    // independent reference decoder: translate the published byte layout with
    // direct bit indexing instead of the streaming loop above
    fn reference_decode(line: &str) -> Option<Vec<(usize, usize)>> {
        let b = line.as_bytes();
        let n = (*b.first()? - 63) as usize;
        let mut bits = Vec::new();
        for &byte in &b[1..] {
            let v = byte.checked_sub(63)?;
            for k in (0..6).rev() {
                bits.push(v >> k & 1 == 1);
            }
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if *bits.get(idx)? {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Some(edges)
    }

    #[test]
    fn known_lines() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.n(), 4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(reference_decode("C~").unwrap().len(), 6);
        let e4 = parse_graph6("C?").unwrap();
        assert_eq!(e4.n(), 4);
        assert_eq!(e4.edge_count(), 0);
        assert_eq!(reference_decode("C?").unwrap().len(), 0);
    }

    #[test]
    fn roundtrip_corpus() {
        let graphs = [
            Graph::sunlet4(),
            Graph::path(9).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::complete(6).unwrap(),
            Graph::empty_graph(1).unwrap(),
            Graph::spider(3, 2).unwrap(),
        ];
        for g in &graphs {
            let line = emit_graph6(g).unwrap();
            let back = parse_graph6(&line).unwrap();
            assert_eq!(back.edges(), g.edges());
            assert_eq!(emit_graph6(&back).unwrap(), line);
            let mut reference = reference_decode(&line).unwrap();
            reference.sort();
            assert_eq!(reference, g.edges());
        }
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph6("~??"), Err(Error::Parse { offset: 0, .. })));
        // too short for n = 5
        assert!(parse_graph6("D?").is_err());
        // bad data byte (space)
        assert!(parse_graph6("C   ").is_err());
        // nonzero padding: n = 2 has 1 bit, 5 padding bits must be zero
        let bad = String::from_utf8(vec![63 + 2, 63 + 0b011111]).unwrap();
        assert!(matches!(parse_graph6(&bad), Err(Error::Parse { .. })));
        let good = String::from_utf8(vec![63 + 2, 63 + 0b100000]).unwrap();
        assert_eq!(parse_graph6(&good).unwrap().edge_count(), 1);
    }
}
