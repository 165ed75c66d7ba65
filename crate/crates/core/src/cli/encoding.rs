//! Text encodings: maps as `v1,…,vn@m`, chains as `…@m;…@r`, spans as
//! `θ1@n;θ2@m`, bijections as bare value lists.

use thiserror::Error;

use crate::fincard::{Bijection, FinMap, Span};
use crate::symcat::{S2Obj, S3Obj};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse {input:?}: {reason}")]
pub struct EncodingError {
    pub input: String,
    pub reason: String,
}

fn err(input: &str, reason: impl Into<String>) -> EncodingError {
    EncodingError {
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn values(input: &str, part: &str) -> Result<Vec<usize>, EncodingError> {
    let part = part.trim();
    if part.is_empty() {
        return Ok(Vec::new());
    }
    part.split(',')
        .map(|v| v.trim().parse::<usize>().map_err(|e| err(input, format!("{v:?}: {e}"))))
        .collect()
}

pub fn parse_map(input: &str) -> Result<FinMap, EncodingError> {
    let (vals, cod) = input.split_once('@').ok_or_else(|| err(input, "expected values@codomain"))?;
    let cod = cod.trim().parse::<usize>().map_err(|e| err(input, format!("codomain: {e}")))?;
    FinMap::new(values(input, vals)?, cod).map_err(|e| err(input, e.to_string()))
}

pub fn parse_s2(input: &str) -> Result<S2Obj, EncodingError> {
    S2Obj::new(parse_map(input)?).map_err(|e| err(input, e.to_string()))
}

pub fn parse_s3(input: &str) -> Result<S3Obj, EncodingError> {
    let (a, b) = input.split_once(';').ok_or_else(|| err(input, "expected two maps separated by ';'"))?;
    S3Obj::new(parse_map(a)?, parse_map(b)?).map_err(|e| err(input, e.to_string()))
}

pub fn parse_span(input: &str) -> Result<Span, EncodingError> {
    let (a, b) = input.split_once(';').ok_or_else(|| err(input, "expected two maps separated by ';'"))?;
    Span::new(parse_map(a)?, parse_map(b)?).map_err(|e| err(input, e.to_string()))
}

pub fn parse_bijection(input: &str) -> Result<Bijection, EncodingError> {
    Bijection::new(values(input, input)?).map_err(|e| err(input, e.to_string()))
}

pub fn encode_bijection(f: &Bijection) -> String {
    let vals: Vec<String> = f.values().iter().map(|v| v.to_string()).collect();
    vals.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrips() {
        let f = parse_map("1,1,2@2").unwrap();
        assert_eq!(f.to_string(), "1,1,2@2");
        assert_eq!(parse_map("@3").unwrap().dom(), 0);
        let t = parse_s3("1,2@2;1,1@1").unwrap();
        assert_eq!((t.n(), t.m(), t.r()), (2, 2, 1));
        let s = parse_span("1,1@1;1,2@2").unwrap();
        assert_eq!((s.n(), s.apex(), s.m()), (1, 2, 2));
        assert_eq!(encode_bijection(&parse_bijection("2,1,3").unwrap()), "2,1,3");
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_map("1,2").is_err());
        assert!(parse_map("1,x@2").is_err());
        assert!(parse_map("3@2").is_err());
        assert!(parse_s2("2,1@2").is_err());
        assert!(parse_span("1@1;1,2@2").is_err());
        assert!(parse_bijection("1,1").is_err());
    }
}
