//! Text form of toral weights.
//!
//! Two shapes are accepted:
//!   `q^{1/2,0,-3}`          a linear weight, fundamental-weight coordinates;
//!   `t=1/4,c=-1;t=0,c=0`    per simple root, torsion and exponent entries,
//!                           either key optional and defaulting to 0.

use num_traits::Zero;

use crate::exact::rational::{parse_rat, Rat};
use crate::rootsys::Rs;

use super::ToralWeight;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("weight literal parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        pos,
        msg: msg.into(),
    }
}

pub fn parse_weight(rs: &Rs, input: &str) -> Result<ToralWeight, ParseError> {
    let s = input.trim();
    let base = input.len() - input.trim_start().len();
    if let Some(rest) = s.strip_prefix("q^{") {
        let Some(body) = rest.strip_suffix('}') else {
            return Err(err(base + s.len(), "missing closing '}'"));
        };
        let mut coords = vec![];
        let mut pos = base + 3;
        for part in body.split(',') {
            let c = parse_rat(part)
                .ok_or_else(|| err(pos, format!("bad rational {part:?}")))?;
            coords.push(c);
            pos += part.len() + 1;
        }
        if coords.len() != rs.rank() {
            return Err(err(
                base,
                format!(
                    "expected {} fundamental-weight coordinates, got {}",
                    rs.rank(),
                    coords.len()
                ),
            ));
        }
        let lambda = rs.from_weight_coords(&coords);
        return Ok(ToralWeight::linear(rs.clone(), &lambda));
    }
    // Per-root entries.
    let mut torsion = vec![Rat::zero(); rs.rank()];
    let mut exponent = vec![Rat::zero(); rs.rank()];
    let mut pos = base;
    let mut count = 0usize;
    for entry in s.split(';') {
        if count >= rs.rank() {
            return Err(err(pos, format!("more entries than the rank {}", rs.rank())));
        }
        let mut inner = pos;
        for kv in entry.split(',') {
            let kv_trim = kv.trim();
            if kv_trim.is_empty() {
                inner += kv.len() + 1;
                continue;
            }
            let Some((key, value)) = kv_trim.split_once('=') else {
                return Err(err(inner, format!("expected key=value, got {kv_trim:?}")));
            };
            let r = parse_rat(value)
                .ok_or_else(|| err(inner, format!("bad rational {value:?}")))?;
            match key.trim() {
                "t" => torsion[count] = r,
                "c" => exponent[count] = r,
                other => return Err(err(inner, format!("unknown key {other:?}"))),
            }
            inner += kv.len() + 1;
        }
        count += 1;
        pos += entry.len() + 1;
    }
    if count != rs.rank() {
        return Err(err(
            base,
            format!("expected {} entries separated by ';', got {count}", rs.rank()),
        ));
    }
    Ok(ToralWeight::new(rs.clone(), torsion, exponent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};
    use crate::rootsys::RootSystem;

    #[test]
    fn parse_example_weight() {
        // The B2 weight with Lambda(K_{a1}) = 1, Lambda(K_{a2}) = i q^{-1}.
        let rs = RootSystem::build_str("B2").unwrap();
        let w = parse_weight(&rs, "t=0,c=0;t=1/4,c=-1").unwrap();
        assert_eq!(w.torsion_values()[1], rat(1, 4));
        assert_eq!(w.exponent_values()[1], rat_int(-1));
        // Round trip through the canonical literal.
        let again = parse_weight(&rs, &w.to_literal()).unwrap();
        assert_eq!(w, again);
    }

    #[test]
    fn parse_linear_weight() {
        let rs = RootSystem::build_str("A2").unwrap();
        let w = parse_weight(&rs, "q^{1/2,0}").unwrap();
        // c_i = (lambda, alpha_i) with lambda = omega1/2: c = (1/2, 0).
        assert_eq!(w.exponent_values(), &[rat(1, 2), rat_int(0)]);
        assert!(w.torsion_values().iter().all(|t| t == &rat_int(0)));
    }

    #[test]
    fn parse_partial_entries() {
        let rs = RootSystem::build_str("A1").unwrap();
        let w = parse_weight(&rs, "t=1/4").unwrap();
        assert_eq!(w.torsion_values()[0], rat(1, 4));
        assert_eq!(w.exponent_values()[0], rat_int(0));
    }

    #[test]
    fn errors_carry_positions() {
        let rs = RootSystem::build_str("A2").unwrap();
        let e = parse_weight(&rs, "t=1/4").unwrap_err();
        assert!(e.msg.contains("expected 2 entries"));
        let e = parse_weight(&rs, "t=zz;t=0").unwrap_err();
        assert!(e.msg.contains("bad rational"));
        let e = parse_weight(&rs, "q^{1,2").unwrap_err();
        assert!(e.msg.contains("missing closing"));
        let e = parse_weight(&rs, "x=3;t=0").unwrap_err();
        assert!(e.msg.contains("unknown key"));
    }
}
