use std::ops::RangeInclusive;
use std::str::FromStr;

use monodimer::{BaseGraph, Error};

/// `path:m`, `cycle:m`, `complete:m` or `file:<path>`.
#[derive(Clone, Debug)]
pub struct BaseSpec(pub BaseGraph);

impl FromStr for BaseSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_base(s).map(BaseSpec).map_err(|e| e.to_string())
    }
}

pub fn parse_base(s: &str) -> Result<BaseGraph, Error> {
    let (kind, arg) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected kind:arg, got {s:?}")))?;
    let size = || {
        arg.parse::<usize>()
            .ok()
            .filter(|&m| m >= 1)
            .ok_or_else(|| Error::Parse(format!("bad vertex count {arg:?}")))
    };
    match kind {
        "path" => BaseGraph::path(size()?),
        "cycle" => BaseGraph::cycle(size()?),
        "complete" => BaseGraph::complete(size()?),
        "file" => {
            let text = std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
            BaseGraph::parse(&text)
        }
        _ => Err(Error::Parse(format!("unknown base graph kind {kind:?}"))),
    }
}

/// Inclusive range `a..b`, or a single integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<i64>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let int = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t:?}"));
        match s.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (int(a)?, int(b)?);
                if a > b {
                    return Err(format!("empty range {s}"));
                }
                Ok(Span(a..=b))
            }
            None => {
                let v = int(s)?;
                Ok(Span(v..=v))
            }
        }
    }
}

/// Comma-separated integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t:?}")))
            .collect::<Result<Vec<_>, _>>()
            .map(IntList)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases() {
        assert_eq!(parse_base("path:3").unwrap(), BaseGraph::path(3).unwrap());
        assert_eq!(parse_base("cycle:4").unwrap(), BaseGraph::cycle(4).unwrap());
        assert_eq!(parse_base("complete:3").unwrap().edges().len(), 3);
        assert!(parse_base("path:0").is_err());
        assert!(parse_base("star:3").is_err());
        assert!(parse_base("path").is_err());
        assert!(parse_base("file:/nonexistent/graph.txt").is_err());
    }

    #[test]
    fn spans() {
        assert_eq!("0..4".parse::<Span>().unwrap(), Span(0..=4));
        assert_eq!("-3..-1".parse::<Span>().unwrap(), Span(-3..=-1));
        assert_eq!("2".parse::<Span>().unwrap(), Span(2..=2));
        assert!("4..0".parse::<Span>().is_err());
        assert!("a..b".parse::<Span>().is_err());
    }

    #[test]
    fn lists() {
        assert_eq!("2,-3,1".parse::<IntList>().unwrap(), IntList(vec![2, -3, 1]));
        assert!("2,,1".parse::<IntList>().is_err());
    }
}
