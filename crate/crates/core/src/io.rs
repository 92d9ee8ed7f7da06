//! Readers and writers for rotation systems.
//!
//! `rot/1` text: the first line holds `n`, then one line `v: u1 u2 ... uk` per
//! vertex, neighbours in clockwise order. Blank lines and `#` comments are
//! skipped.
//!
//! plantri `planar_code`: optional header `>>planar_code<<` (or with ` le`/
//! ` be`), then per graph a byte `n` followed by each vertex's clockwise
//! neighbours, numbered from 1, each list closed by 0. A leading 0 byte
//! switches that graph to 16-bit entries.

use std::fmt::Write as _;

use thiserror::Error;

use crate::plane_graph::{GraphError, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        Self {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown format {0:?} (rot, planar_code)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Rot,
    PlanarCode,
}

impl std::str::FromStr for Format {
    type Err = FormatError;
    fn from_str(s: &str) -> Result<Self, FormatError> {
        match s {
            "rot" | "rot/1" => Ok(Format::Rot),
            "planar_code" | "planar-code" | "pc" => Ok(Format::PlanarCode),
            _ => Err(FormatError::UnknownFormat(s.to_string())),
        }
    }
}

pub fn write_rot(rs: &RotationSystem) -> String {
    let mut s = format!("{}\n", rs.order());
    for (v, l) in rs.lists().iter().enumerate() {
        let _ = write!(s, "{v}:");
        for u in l {
            let _ = write!(s, " {u}");
        }
        s.push('\n');
    }
    s
}

/// Parses `rot/1` into raw rotation lists (not yet validated as a graph).
pub fn parse_rot(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut lines = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("").trim();
        if !body.is_empty() {
            lines.push((offset + line.len() - line.trim_start().len(), body));
        }
        offset += line.len();
    }
    let Some(&(off0, first)) = lines.first() else {
        return Err(ParseError::new(0, "empty input"));
    };
    let n: usize = first
        .parse()
        .map_err(|_| ParseError::new(off0, format!("expected vertex count, found {first:?}")))?;
    let mut rot: Vec<Option<Vec<usize>>> = vec![None; n];
    for &(off, line) in &lines[1..] {
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| ParseError::new(off, "expected `v: neighbours`"))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| ParseError::new(off, format!("bad vertex {:?}", head.trim())))?;
        if v >= n {
            return Err(ParseError::new(off, format!("vertex {v} out of range 0..{n}")));
        }
        if rot[v].is_some() {
            return Err(ParseError::new(off, format!("vertex {v} listed twice")));
        }
        let base = off + head.len() + 1;
        let mut list = Vec::new();
        let mut pos = 0;
        for tok in tail.split_whitespace() {
            let at = base + tail[pos..].find(tok).unwrap() + pos;
            pos = at - base + tok.len();
            let u: usize = tok
                .parse()
                .map_err(|_| ParseError::new(at, format!("bad neighbour {tok:?}")))?;
            if u >= n {
                return Err(ParseError::new(at, format!("neighbour {u} out of range 0..{n}")));
            }
            list.push(u);
        }
        rot[v] = Some(list);
    }
    let end = text.len();
    rot.into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| ParseError::new(end, format!("vertex {v} has no rotation line"))))
        .collect()
}

pub fn read_rot(text: &str) -> Result<RotationSystem, FormatError> {
    Ok(RotationSystem::new(parse_rot(text)?)?)
}

const HEADER: &[u8] = b">>planar_code";

/// Encodes graphs after a `>>planar_code<<` header; graphs with more than
/// 255 vertices use little-endian 16-bit entries, flagged in the header.
pub fn write_planar_code(graphs: &[&RotationSystem]) -> Vec<u8> {
    let wide = graphs.iter().any(|g| g.order() > 255);
    let mut out = Vec::new();
    out.extend_from_slice(if wide { b">>planar_code le<<" } else { b">>planar_code<<" });
    for g in graphs {
        if g.order() > 255 {
            out.push(0);
            let mut put = |x: usize| out.extend_from_slice(&(x as u16).to_le_bytes());
            put(g.order());
            for l in g.lists() {
                for &u in l {
                    put(u + 1);
                }
                put(0);
            }
        } else {
            out.push(g.order() as u8);
            for l in g.lists() {
                out.extend(l.iter().map(|&u| (u + 1) as u8));
                out.push(0);
            }
        }
    }
    out
}

/// Decodes every graph in a `planar_code` stream into raw rotation lists.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<Vec<Vec<usize>>>, ParseError> {
    let mut pos = 0;
    let mut big_endian = false;
    if bytes.starts_with(HEADER) {
        let close = bytes
            .windows(2)
            .position(|w| w == b"<<")
            .ok_or_else(|| ParseError::new(0, "unterminated header"))?;
        match &bytes[HEADER.len()..close] {
            b"" | b" le" => {}
            b" be" => big_endian = true,
            other => {
                return Err(ParseError::new(
                    HEADER.len(),
                    format!("unknown header option {:?}", String::from_utf8_lossy(other)),
                ))
            }
        }
        pos = close + 2;
    } else if bytes.first() == Some(&b'>') {
        return Err(ParseError::new(0, "unknown header"));
    }
    let mut graphs = Vec::new();
    while pos < bytes.len() {
        let start = pos;
        let wide = bytes[pos] == 0;
        if wide {
            pos += 1;
        }
        let next = |pos: &mut usize| -> Result<usize, ParseError> {
            if wide {
                let b = bytes
                    .get(*pos..*pos + 2)
                    .ok_or_else(|| ParseError::new(*pos, "truncated 16-bit entry"))?;
                *pos += 2;
                let b = [b[0], b[1]];
                Ok(if big_endian { u16::from_be_bytes(b) } else { u16::from_le_bytes(b) } as usize)
            } else {
                let b = *bytes
                    .get(*pos)
                    .ok_or_else(|| ParseError::new(*pos, "truncated graph"))?;
                *pos += 1;
                Ok(b as usize)
            }
        };
        let n = next(&mut pos)?;
        if n == 0 {
            return Err(ParseError::new(start, "graph with zero vertices"));
        }
        let mut rot = Vec::with_capacity(n);
        for _ in 0..n {
            let mut list = Vec::new();
            loop {
                let at = pos;
                match next(&mut pos)? {
                    0 => break,
                    u if u > n => {
                        return Err(ParseError::new(at, format!("neighbour {u} exceeds n = {n}")))
                    }
                    u => list.push(u - 1),
                }
            }
            rot.push(list);
        }
        graphs.push(rot);
    }
    Ok(graphs)
}

pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<RotationSystem>, FormatError> {
    parse_planar_code(bytes)?
        .into_iter()
        .map(|r| RotationSystem::new(r).map_err(FormatError::from))
        .collect()
}

/// Reads the first graph of `bytes` in `format`.
pub fn read_one(bytes: &[u8], format: Format) -> Result<RotationSystem, FormatError> {
    match format {
        Format::Rot => {
            let text = std::str::from_utf8(bytes)
                .map_err(|e| ParseError::new(e.valid_up_to(), "input is not UTF-8"))?;
            read_rot(text)
        }
        Format::PlanarCode => read_planar_code(bytes)?
            .into_iter()
            .next()
            .ok_or_else(|| ParseError::new(bytes.len(), "no graph in stream").into()),
    }
}

/// Guesses the format from the leading bytes.
pub fn sniff(bytes: &[u8]) -> Format {
    if bytes.starts_with(b">>planar_code") {
        Format::PlanarCode
    } else if bytes.iter().take(64).all(|b| b.is_ascii()) && bytes.iter().take(64).any(|b| b.is_ascii_digit()) {
        Format::Rot
    } else {
        Format::PlanarCode
    }
}

pub fn write(rs: &RotationSystem, format: Format) -> Vec<u8> {
    match format {
        Format::Rot => write_rot(rs).into_bytes(),
        Format::PlanarCode => write_planar_code(&[rs]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::fixtures::{k4, octahedron};
    use crate::plane_graph::PlanarTriangulation;

    #[test]
    fn rot_round_trip() {
        let rs = RotationSystem::new(k4()).unwrap();
        let text = write_rot(&rs);
        assert_eq!(text, "4\n0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\n");
        assert_eq!(read_rot(&text).unwrap(), rs);
    }

    #[test]
    fn planar_code_round_trip() {
        let rs = RotationSystem::new(k4()).unwrap();
        let pc = write_planar_code(&[&rs]);
        assert!(pc.starts_with(b">>planar_code<<"));
        assert_eq!(&pc[15..], &[4, 2, 4, 3, 0, 3, 4, 1, 0, 1, 4, 2, 0, 1, 2, 3, 0]);
        let back = read_planar_code(&pc).unwrap();
        assert_eq!(back, vec![rs.clone()]);
        assert_eq!(write_rot(&back[0]), write_rot(&rs));
    }

    #[test]
    fn several_graphs_and_wide_entries() {
        let a = RotationSystem::new(k4()).unwrap();
        let b = RotationSystem::new(octahedron()).unwrap();
        let pc = write_planar_code(&[&a, &b]);
        assert_eq!(read_planar_code(&pc).unwrap(), vec![a.clone(), b.clone()]);
        let mut wide = b">>planar_code le<<".to_vec();
        wide.push(0);
        wide.extend_from_slice(&4u16.to_le_bytes());
        for l in a.lists() {
            for &u in l {
                wide.extend_from_slice(&((u + 1) as u16).to_le_bytes());
            }
            wide.extend_from_slice(&[0, 0]);
        }
        assert_eq!(read_planar_code(&wide).unwrap(), vec![a]);
    }

    #[test]
    fn truncated_stream() {
        let rs = RotationSystem::new(octahedron()).unwrap();
        let pc = write_planar_code(&[&rs]);
        let err = parse_planar_code(&pc[..pc.len() - 3]).unwrap_err();
        assert_eq!(err.offset, pc.len() - 3);
        let err = parse_planar_code(&[5, 2, 0]).unwrap_err();
        assert_eq!(err.offset, 3);
    }

    #[test]
    fn octahedron_from_planar_code_bytes() {
        // clockwise 1-based lists as a generator would emit them
        let mut bytes = b">>planar_code<<".to_vec();
        bytes.extend_from_slice(&[
            6, 2, 3, 4, 5, 0, 1, 5, 6, 3, 0, 1, 2, 6, 4, 0, 1, 3, 6, 5, 0, 1, 4, 6, 2, 0, 2, 5, 4, 3, 0,
        ]);
        let rs = read_planar_code(&bytes).unwrap().remove(0);
        let g = PlanarTriangulation::new(rs).unwrap();
        assert_eq!(g.faces().len(), 8);
    }

    #[test]
    fn rot_errors_carry_offsets() {
        let err = parse_rot("3\n0: 1 2\n1: 0 x\n").unwrap_err();
        assert_eq!(err.offset, 14);
        let err = parse_rot("2\n0: 1\n").unwrap_err();
        assert!(err.message.contains("vertex 1"));
        let err = parse_rot("").unwrap_err();
        assert_eq!(err.offset, 0);
        assert!(parse_rot("# k4\n4\n0: 1 3 2\n\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2 # last\n").is_ok());
    }

    #[test]
    fn sniffing() {
        assert_eq!(sniff(b">>planar_code<<\x04"), Format::PlanarCode);
        assert_eq!(sniff(b"4\n0: 1 2 3\n"), Format::Rot);
    }
}
