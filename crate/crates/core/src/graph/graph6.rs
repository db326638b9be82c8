//! graph6 encoding.
//!
//! Size field `N(n)`, then the upper triangle in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, big-endian, each byte
//! offset by 63. An optional `>>graph6<<` header is accepted when decoding and
//! never written.

use alloc::format;
use alloc::vec::Vec;

use super::Graph;
use crate::{Error, Result};

pub const HEADER: &[u8] = b">>graph6<<";
pub const MAX_ORDER: u64 = 68_719_476_735;

fn push_size(out: &mut Vec<u8>, n: u64) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n as u64 > MAX_ORDER {
        return Err(Error::Graph6(format!("order {n} exceeds the graph6 limit")));
    }
    let mut out = Vec::new();
    push_size(&mut out, n as u64);
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
    Ok(out)
}

fn sextet(b: u8) -> Result<u64> {
    if (63..=126).contains(&b) {
        Ok(u64::from(b - 63))
    } else {
        Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")))
    }
}

pub fn decode(bytes: &[u8]) -> Result<Graph> {
    let mut data = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    while let [rest @ .., b'\n' | b'\r'] = data {
        data = rest;
    }
    let (n, body) = match data {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated size field".into()));
            }
            let n = rest[..6].iter().try_fold(0u64, |acc, &b| Ok::<_, Error>((acc << 6) | sextet(b)?))?;
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size field".into()));
            }
            let n = rest[..3].iter().try_fold(0u64, |acc, &b| Ok::<_, Error>((acc << 6) | sextet(b)?))?;
            (n, &rest[3..])
        }
        [b, rest @ ..] => (sextet(*b)?, rest),
    };
    if n > MAX_ORDER {
        return Err(Error::Graph6(format!("order {n} out of range")));
    }
    let n = usize::try_from(n).map_err(|_| Error::Graph6("order does not fit in memory".into()))?;
    let bits = n.checked_mul(n.saturating_sub(1)).map(|x| x / 2).ok_or_else(|| Error::Graph6("order too large".into()))?;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6])?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad = sextet(body[k / 6])? & ((1 << (6 - k % 6)) - 1);
        if pad != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(encode(&Graph::new(1)).unwrap(), b"@");
        assert_eq!(encode(&Graph::complete(2)).unwrap(), b"A_");
        assert_eq!(encode(&Graph::new(0)).unwrap(), b"?");
        // 5-cycle: bits 101001 1001(00)
        assert_eq!(encode(&Graph::cycle(5)).unwrap(), b"Dhc");
    }

    #[test]
    fn header_and_newline_tolerated() {
        let g = decode(b">>graph6<<A_\n").unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode(b"").is_err());
        assert!(decode(b"A").is_err());
        assert!(decode(b"A_?").is_err());
        assert!(decode(b"A\x20").is_err());
        assert!(decode(b"A`").is_err()); // padding bit set
        assert!(decode(b"~?").is_err());
    }

    #[test]
    fn long_size_field() {
        let g = Graph::path(100);
        let bytes = encode(&g).unwrap();
        assert_eq!(&bytes[..4], &[126, 63, 64, 99]);
        assert_eq!(decode(&bytes).unwrap(), g);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn round_trip(n in 0usize..=500, seed in any::<u64>()) {
            let mut g = Graph::new(n);
            let mut x = seed | 1;
            for v in 1..n {
                for u in 0..v {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x % 7 == 0 { g.add_edge(u, v); }
                }
            }
            prop_assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
        }
    }
}
