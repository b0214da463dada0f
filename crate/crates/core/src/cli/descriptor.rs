//! Representation descriptors: `burau`, `sym`, `sum=[d1,d2,...]`, each
//! optionally followed by `;twist=r` or `;frame=<unit>` modifiers applied
//! left to right.

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::rep::{burau_rep, direct_sum, frame, sym_rep, twist, GeneratorRep};

/// Splits at `sep` outside square brackets.
fn split_top_level(text: &str, sep: char) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (k, c) in text.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced ']' in {text:?}")));
                }
            }
            _ if c == sep && depth == 0 => {
                parts.push(&text[start..k]);
                start = k + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced '[' in {text:?}")));
    }
    parts.push(&text[start..]);
    Ok(parts)
}

pub fn parse_rep_descriptor(text: &str, n: usize) -> Result<GeneratorRep> {
    let pieces = split_top_level(text.trim(), ';')?;
    let base = pieces[0].trim();
    let mut rep = match base {
        "burau" => burau_rep(n)?,
        "sym" => sym_rep(n)?,
        _ => {
            let inner = base
                .strip_prefix("sum=[")
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("unknown representation {base:?}")))?;
            let parts = split_top_level(inner, ',')?
                .into_iter()
                .map(|d| parse_rep_descriptor(d, n))
                .collect::<Result<Vec<_>>>()?;
            direct_sum(&parts)?
        }
    };
    for modifier in &pieces[1..] {
        let (key, value) = modifier
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("modifier {modifier:?} needs key=value")))?;
        rep = match key.trim() {
            "twist" => {
                let r = value
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad twist exponent {value:?}")))?;
                twist(&rep, r)?
            }
            "frame" => frame(&rep, &value.trim().parse::<LaurentPoly>()?)?,
            other => return Err(Error::Parse(format!("unknown modifier {other:?}"))),
        };
    }
    Ok(rep)
}
