use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families with canonical labelling. Paths and cycles run in
/// vertex order; the hub of a star or wheel is vertex `n - 1`; the parts of
/// `K_{a,b}` are `0..a` and `a..a+b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Star(usize),
    Wheel(usize),
    CompleteBipartite(usize, usize),
}

impl Family {
    fn domain_error(&self) -> Error {
        let (family, params) = match *self {
            Family::Path(n) => ("path", n.to_string()),
            Family::Cycle(n) => ("cycle", n.to_string()),
            Family::Complete(n) => ("complete", n.to_string()),
            Family::Empty(n) => ("empty", n.to_string()),
            Family::Star(n) => ("star", n.to_string()),
            Family::Wheel(n) => ("wheel", n.to_string()),
            Family::CompleteBipartite(a, b) => ("complete_bipartite", format!("{a},{b}")),
        };
        Error::FamilyDomain {
            family: family.to_string(),
            params,
        }
    }

    /// Checks the family's minimum parameters.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Family::Path(n) | Family::Complete(n) | Family::Empty(n) => n >= 1,
            Family::Cycle(n) | Family::Star(n) => n >= 3,
            Family::Wheel(n) => n >= 4,
            Family::CompleteBipartite(a, b) => a >= 1 && b >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(self.domain_error())
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Empty(n)
            | Family::Star(n)
            | Family::Wheel(n) => n,
            Family::CompleteBipartite(a, b) => a + b,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            Family::Path(n) => {
                Graph::from_edge_list(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>())
            }
            Family::Cycle(n) => {
                Graph::from_edge_list(n, &(0..n).map(|v| (v, (v + 1) % n)).collect::<Vec<_>>())
            }
            Family::Complete(n) => {
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                Graph::from_edge_list(n, &edges)
            }
            Family::Empty(n) => Graph::from_edge_list(n, &[]),
            Family::Star(n) => Graph::empty(n - 1).join(&Graph::empty(1)),
            Family::Wheel(n) => Family::Cycle(n - 1).build()?.join(&Graph::empty(1)),
            Family::CompleteBipartite(a, b) => Graph::empty(a).join(&Graph::empty(b)),
        }
    }

    /// Parses a family name and its comma- or space-separated parameters.
    pub fn parse(name: &str, params: &[usize]) -> Result<Family> {
        let one = || match params {
            [n] => Ok(*n),
            _ => Err(Error::FamilyDomain {
                family: name.to_string(),
                params: format!("{params:?}"),
            }),
        };
        let family = match name {
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "complete" => Family::Complete(one()?),
            "empty" => Family::Empty(one()?),
            "star" => Family::Star(one()?),
            "wheel" => Family::Wheel(one()?),
            "complete_bipartite" => match params {
                [a, b] => Family::CompleteBipartite(*a, *b),
                _ => {
                    return Err(Error::FamilyDomain {
                        family: name.to_string(),
                        params: format!("{params:?}"),
                    })
                }
            },
            _ => {
                return Err(Error::FamilyDomain {
                    family: name.to_string(),
                    params: format!("{params:?}"),
                })
            }
        };
        family.validate()?;
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::Empty(n) => write!(f, "E{n}"),
            Family::Star(n) => write!(f, "S{n}"),
            Family::Wheel(n) => write!(f, "W{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `name:params`, e.g. `path:5` or `complete_bipartite:3,3`.
    fn from_str(s: &str) -> Result<Family> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = rest
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Format(format!("bad family parameter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Family::parse(name, &params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_four_is_k4() {
        assert_eq!(
            Family::Wheel(4).build().unwrap(),
            Family::Complete(4).build().unwrap()
        );
    }

    #[test]
    fn k33_has_nine_edges() {
        let g = Family::CompleteBipartite(3, 3).build().unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 9));
        assert!((0..3).all(|v| g.neighbors(v).to_vec() == vec![3, 4, 5]));
    }

    #[test]
    fn star_three_is_p3() {
        let s3 = Family::Star(3).build().unwrap();
        // Hub is vertex 2; relabel it into the middle.
        assert_eq!(s3.permuted(&[0, 2, 1]), Family::Path(3).build().unwrap());
    }

    #[test]
    fn domain_errors() {
        for f in [
            Family::Star(2),
            Family::Wheel(3),
            Family::Cycle(2),
            Family::Path(0),
        ] {
            assert!(
                matches!(f.build(), Err(Error::FamilyDomain { .. })),
                "{f:?}"
            );
        }
        assert!("star:2".parse::<Family>().is_err());
        assert!("blob:2".parse::<Family>().is_err());
        assert_eq!(
            "complete_bipartite:2,3".parse::<Family>().unwrap(),
            Family::CompleteBipartite(2, 3)
        );
    }
}
