//! Plain-text hypergraph format.
//!
//! ```text
//! # comment
//! k n m
//! v v v      <- m lines of k vertex ids each, 0-based
//! ```
//!
//! Writing always emits the sorted edge list, so `parse(to_text(h)) == h`
//! and `to_text(parse(s))` is stable.

use super::{Hypergraph, VertexId};
use crate::error::{Error, Result};

pub fn to_text(h: &Hypergraph) -> String {
    let mut s = format!("{} {} {}\n", h.k(), h.n(), h.m());
    for e in h.edges() {
        let line: Vec<String> = e.vertices().iter().map(|v| v.to_string()).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

pub fn parse(input: &str) -> Result<Hypergraph> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing header line \"k n m\"".into(),
    })?;
    let nums = parse_ids(hline, header)?;
    let [k, n, m] = nums[..] else {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header needs 3 integers, found {}", nums.len()),
        });
    };
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                msg: format!("more than the declared {m} edges"),
            });
        }
        edges.push(parse_ids(line, l)?);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Hypergraph::new(k, n, edges)
}

fn parse_ids(line: usize, s: &str) -> Result<Vec<VertexId>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<VertexId>().map_err(|_| Error::Parse {
                line,
                msg: format!("not a nonnegative integer: {t:?}"),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::random::random_connected;
    use proptest::prelude::*;
    use rand::SeedableRng;

    #[test]
    fn parses_with_comments() {
        let h = parse("# the remark graph\n3 5 3\n0 1 2\n0 2 4 # last\n\n0 1 3\n").unwrap();
        assert_eq!(h.m(), 3);
        assert_eq!(to_text(&h), "3 5 3\n0 1 2\n0 1 3\n0 2 4\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("3 5"), Err(Error::Parse { .. })));
        assert!(matches!(parse("3 5 2\n0 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("3 5 1\n0 1 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("3 5 1\n0 1\n"), Err(Error::NonUniformEdge { .. })));
        assert!(matches!(parse("3 5 2\n0 1 2\n2 1 0\n"), Err(Error::DuplicateEdge(_))));
        assert!(matches!(parse("2 2 1\n0 5\n"), Err(Error::VertexOutOfRange { .. })));
    }

    proptest! {
        #[test]
        fn round_trip(seed in 0u64..5000, k in 2usize..=4, m in 0usize..=6) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let h = if m == 0 { Hypergraph::empty(k, 3) } else { random_connected(&mut rng, k, m) };
            let s = to_text(&h);
            let back = parse(&s).unwrap();
            prop_assert_eq!(&back, &h);
            prop_assert_eq!(to_text(&back), s);
        }
    }
}
