//! graph6 text encoding (short form, order at most 62).
//!
//! The header byte is `n + 63`; the payload is the upper triangle of the
//! adjacency matrix read column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, most significant first, each byte offset by 63.

use super::Graph;
use crate::error::GraphError;

pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_GRAPH6_ORDER, "graph6 short form needs n <= 62");
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, reason: &str| GraphError::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    let (body, start) = match bytes {
        [b'>', b'>', b'g', b'r', b'a', b'p', b'h', b'6', b'<', b'<', rest @ ..] => (rest, 10),
        _ => (bytes, 0),
    };
    let &header = body.first().ok_or_else(|| err(start, "empty input"))?;
    if header == b'~' {
        return Err(err(start, "orders above 62 are not supported"));
    }
    if !(63..=126).contains(&header) {
        return Err(err(start, "header byte outside 63..=126"));
    }
    let n = (header - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let payload = &body[1..];
    if payload.len() < need {
        return Err(err(start + 1 + payload.len(), "truncated bit payload"));
    }
    if payload.len() > need {
        return Err(err(start + 1 + need, "trailing bytes after payload"));
    }
    for (i, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(start + 1 + i, "payload byte outside 63..=126"));
        }
    }
    if bits % 6 != 0 {
        let last = payload[need - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(start + need, "nonzero padding bits"));
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_is_at_sign() {
        assert_eq!(write_graph6(&Graph::complete(1)), "@");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn reference_example() {
        // The example from the public format description: a 5-vertex graph
        // with edges 0-2, 0-4, 1-3, 3-4 encodes as "DQc".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert!(parse_graph6("DQc").unwrap().same_adjacency(&g));
    }

    #[test]
    fn d_question_brace() {
        // Payload "?{" is 000000 111100: only x(0,4), x(1,4), x(2,4), x(3,4)
        // are set, i.e. the star K_{1,4} centered at 4 (cross-checked with
        // networkx's graph6 reader).
        let g = parse_graph6("D?{").unwrap();
        let want = Graph::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(g.same_adjacency(&want));
        assert_eq!(write_graph6(&g), "D?{");
    }

    #[test]
    fn known_small_graphs() {
        assert_eq!(write_graph6(&Graph::complete(4)), "C~");
        assert_eq!(write_graph6(&Graph::path(4)), "Ch");
        assert_eq!(write_graph6(&Graph::complete(2)), "A_");
    }

    #[test]
    fn errors_name_offsets() {
        match parse_graph6("D?") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("C\x10") {
            Err(GraphError::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("~??").is_err());
        // "A" followed by a byte with the padding bits set.
        assert!(parse_graph6("A`").is_err());
    }

    #[test]
    fn optional_header_is_accepted() {
        assert!(parse_graph6(">>graph6<<C~").unwrap().is_complete());
    }
}
