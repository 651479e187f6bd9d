use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple graph on vertices `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseGraph {
    m: usize,
    edges: Vec<(usize, usize)>,
}

impl BaseGraph {
    pub fn new(m: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if m == 0 {
            return Err(Error::Precondition("base graph needs at least one vertex".into()));
        }
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u >= m || v >= m {
                return Err(Error::Precondition(format!("edge ({u},{v}) outside 0..{m}")));
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Precondition(format!("repeated edge ({u},{v})")));
            }
        }
        Ok(BaseGraph { m, edges })
    }

    /// The path `P_m`; edge `k` joins `k` and `k + 1`.
    pub fn path(m: usize) -> Result<Self> {
        BaseGraph::new(m, (1..m).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::Precondition(format!("cycle needs at least 3 vertices, got {m}")));
        }
        let mut edges: Vec<_> = (1..m).map(|v| (v - 1, v)).collect();
        edges.push((m - 1, 0));
        BaseGraph::new(m, edges)
    }

    pub fn complete(m: usize) -> Result<Self> {
        let edges = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
        BaseGraph::new(m, edges)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Parses the text format:
    ///
    /// ```text
    /// # comment
    /// vertices 3
    /// edge 0 1
    /// edge 1 2
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut m = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}: {raw:?}", lineno + 1));
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["vertices", n] if m.is_none() => {
                    m = Some(n.parse::<usize>().map_err(|_| err("bad vertex count"))?);
                }
                ["vertices", _] => return Err(err("duplicate vertices line")),
                ["edge", u, v] => {
                    if m.is_none() {
                        return Err(err("edge before vertices line"));
                    }
                    let u = u.parse::<usize>().map_err(|_| err("bad vertex id"))?;
                    let v = v.parse::<usize>().map_err(|_| err("bad vertex id"))?;
                    edges.push((u, v));
                }
                _ => return Err(err("unrecognized line")),
            }
        }
        let m = m.ok_or_else(|| Error::Parse("missing `vertices <m>` line".into()))?;
        BaseGraph::new(m, edges)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BaseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.m)?;
        for (u, v) in &self.edges {
            writeln!(f, "edge {u} {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        assert_eq!(BaseGraph::path(1).unwrap().edges().len(), 0);
        assert_eq!(BaseGraph::path(3).unwrap().edges(), &[(0, 1), (1, 2)]);
        assert_eq!(BaseGraph::cycle(4).unwrap().edges().len(), 4);
        assert_eq!(BaseGraph::complete(4).unwrap().edges().len(), 6);
        assert!(BaseGraph::cycle(2).is_err());
        assert!(BaseGraph::path(0).is_err());
    }

    #[test]
    fn rejects_non_simple() {
        assert!(BaseGraph::new(2, vec![(0, 0)]).is_err());
        assert!(BaseGraph::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(BaseGraph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let text = "# triangle\nvertices 3\nedge 0 1\nedge 1 2  # last two\nedge 2 0\n";
        let g = BaseGraph::parse(text).unwrap();
        assert_eq!(g, BaseGraph::cycle(3).unwrap());
        assert_eq!(BaseGraph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(BaseGraph::parse("edge 0 1"), Err(Error::Parse(_))));
        assert!(matches!(BaseGraph::parse("vertices x"), Err(Error::Parse(_))));
        assert!(matches!(BaseGraph::parse("vertices 2\nfoo"), Err(Error::Parse(_))));
        assert!(matches!(BaseGraph::parse(""), Err(Error::Parse(_))));
    }
}
