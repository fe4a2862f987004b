//! Textual and JSON descriptions of groups.
//!
//! Text form: `name:n` (`sym:3`, `alt:4`, `cyclic:5`, `dihedral:6`,
//! `trivial:2`) or 1-based generators in cycle notation separated by `;`,
//! optionally followed by `@degree`, e.g. `(1 2)(3 4);(1 3)@4`. Without a
//! degree the largest mentioned point is used.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Budget;
use crate::group::{named_group, NamedGroup, PermGroup};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Named {
        name: NamedGroup,
        n: usize,
    },
    Explicit {
        degree: usize,
        generators: Vec<String>,
    },
}

impl GroupSpec {
    pub fn named(name: NamedGroup, n: usize) -> Self {
        GroupSpec::Named { name, n }
    }

    /// Parses the text form, with `degree` overriding any `@degree` suffix.
    pub fn parse_with_degree(text: &str, degree: Option<usize>) -> Result<Self> {
        let text = text.trim();
        if let Some((name, n)) = text.split_once(':') {
            if !name.contains('(') {
                let name: NamedGroup = name.parse()?;
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid degree in {text:?}")))?;
                if degree.is_some_and(|d| d != n) {
                    return Err(Error::Parse(format!("degree flag conflicts with {text:?}")));
                }
                return Ok(GroupSpec::Named { name, n });
            }
        }
        let (gens_text, suffix) = match text.rsplit_once('@') {
            Some((g, d)) => {
                let d: usize = d
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid degree suffix in {text:?}")))?;
                (g, Some(d))
            }
            None => (text, None),
        };
        let generators: Vec<String> = gens_text
            .split(';')
            .map(str::trim)
            .filter(|g| !g.is_empty())
            .map(str::to_owned)
            .collect();
        if generators.is_empty() {
            return Err(Error::Parse(format!("no generators in {text:?}")));
        }
        let mentioned = generators
            .iter()
            .map(|g| Permutation::cycle_notation_max_point(g))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .max()
            .unwrap_or(0);
        let degree = degree.or(suffix).unwrap_or(mentioned).max(1);
        let spec = GroupSpec::Explicit { degree, generators };
        spec.permutations()?;
        Ok(spec)
    }

    pub fn degree(&self) -> usize {
        match self {
            GroupSpec::Named { n, .. } => *n,
            GroupSpec::Explicit { degree, .. } => *degree,
        }
    }

    fn permutations(&self) -> Result<Vec<Permutation>> {
        match self {
            GroupSpec::Named { name, n } => name.generators(*n),
            GroupSpec::Explicit { degree, generators } => generators
                .iter()
                .map(|g| Permutation::parse_cycles(g, *degree))
                .collect(),
        }
    }

    pub fn build(&self, budget: &Budget) -> Result<PermGroup> {
        match self {
            GroupSpec::Named { name, n } => named_group(*name, *n, budget),
            GroupSpec::Explicit { degree, .. } => {
                PermGroup::generate(*degree, &self.permutations()?, budget)
            }
        }
    }

    /// Canonical text form; parses back to an equal spec.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named { name, n } => write!(f, "{name}:{n}"),
            GroupSpec::Explicit { degree, generators } => {
                write!(f, "{}@{degree}", generators.join(";"))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse_with_degree(s, None)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawSpec {
    Text(String),
    Named {
        name: String,
        n: usize,
    },
    Explicit {
        degree: usize,
        generators: Vec<String>,
    },
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GroupSpec::Named { name, n } => RawSpec::Named {
                name: name.to_string(),
                n: *n,
            },
            GroupSpec::Explicit { degree, generators } => RawSpec::Explicit {
                degree: *degree,
                generators: generators.clone(),
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let spec = match RawSpec::deserialize(d)? {
            RawSpec::Text(t) => t.parse(),
            RawSpec::Named { name, n } => name.parse().map(|name| GroupSpec::Named { name, n }),
            RawSpec::Explicit { degree, generators } => {
                let spec = GroupSpec::Explicit { degree, generators };
                spec.permutations().map(|_| spec)
            }
        };
        spec.map_err(D::Error::custom)
    }
}
