use std::fmt;

use crate::error::{check_degree, Error, Result};
use crate::perm::{Permutation, Point};

use super::Radix;

/// An m-tuple of points of a domain of size `domain`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PointTuple {
    domain: usize,
    entries: Vec<Point>,
}

impl PointTuple {
    pub fn new(domain: usize, entries: Vec<Point>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&x| x as usize >= domain) {
            return Err(Error::InvalidArgument(format!(
                "tuple entry {} outside domain of size {domain}",
                bad + 1
            )));
        }
        Ok(PointTuple { domain, entries })
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Point] {
        &self.entries
    }

    /// Mixed-radix code in `[0, domain^arity)`, first entry most significant.
    pub fn encode(&self) -> Result<u64> {
        let radix = Radix::new(self.domain, self.arity())
            .ok_or_else(|| Error::budget("tuple encoding", u64::MAX))?;
        Ok(radix.encode(&self.entries))
    }

    pub fn decode(domain: usize, arity: usize, code: u64) -> Result<Self> {
        let radix =
            Radix::new(domain, arity).ok_or_else(|| Error::budget("tuple encoding", u64::MAX))?;
        if code >= radix.size() {
            return Err(Error::InvalidArgument(format!(
                "code {code} outside tuple space of size {}",
                radix.size()
            )));
        }
        let mut entries = vec![0 as Point; arity];
        radix.decode_into(code, &mut entries);
        Ok(PointTuple { domain, entries })
    }

    /// Parses a 1-based literal such as `"(1,2,2)"`.
    pub fn parse(text: &str, domain: usize) -> Result<Self> {
        let body = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| {
                Error::Parse(format!("tuple literal must be parenthesised: {text:?}"))
            })?;
        let entries = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<Point>() {
                Ok(p) if p >= 1 => Ok(p - 1),
                _ => Err(Error::Parse(format!("invalid tuple entry {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        PointTuple::new(domain, entries).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for PointTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str(")")
    }
}

pub fn act_on_tuple(p: &Permutation, t: &PointTuple) -> Result<PointTuple> {
    check_degree(t.domain, p.degree())?;
    Ok(PointTuple {
        domain: t.domain,
        entries: t.entries.iter().map(|&x| p.image(x)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(domain: usize, e: &[Point]) -> PointTuple {
        PointTuple::new(domain, e.to_vec()).unwrap()
    }

    #[test]
    fn identity_action() {
        let x = t(4, &[3, 0, 2]);
        assert_eq!(act_on_tuple(&Permutation::identity(4), &x).unwrap(), x);
    }

    #[test]
    fn entrywise_action() {
        let swap = Permutation::transposition(2, 0, 1).unwrap();
        assert_eq!(
            act_on_tuple(&swap, &t(2, &[0, 0, 1])).unwrap(),
            t(2, &[1, 1, 0])
        );
    }

    #[test]
    fn action_degree_mismatch() {
        assert!(act_on_tuple(&Permutation::identity(3), &t(2, &[0])).is_err());
    }

    #[test]
    fn codes_are_lexicographic() {
        assert_eq!(t(3, &[0, 0]).encode().unwrap(), 0);
        assert_eq!(t(3, &[0, 2]).encode().unwrap(), 2);
        assert_eq!(t(3, &[1, 0]).encode().unwrap(), 3);
        assert_eq!(PointTuple::decode(3, 2, 5).unwrap(), t(3, &[1, 2]));
        assert!(PointTuple::decode(3, 2, 9).is_err());
    }

    #[test]
    fn literal_syntax() {
        let x = PointTuple::parse("(1, 2,2)", 3).unwrap();
        assert_eq!(x, t(3, &[0, 1, 1]));
        assert_eq!(x.to_string(), "(1,2,2)");
        assert!(PointTuple::parse("(0,1)", 3).is_err());
        assert!(PointTuple::parse("(4)", 3).is_err());
        assert!(PointTuple::parse("1,2", 3).is_err());
    }

    #[test]
    fn entries_validated() {
        assert!(PointTuple::new(2, vec![0, 2]).is_err());
    }
}
