use std::fmt;
use std::str::FromStr;

/// Inclusive integer range written `a..b`, or a single value `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: u64,
    pub hi: u64,
}

impl Span {
    pub fn single(v: u64) -> Self {
        Span { lo: v, hi: v }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("{t:?} is not a non-negative integer"))
        };
        let span = match s.split_once("..") {
            Some((a, b)) => Span {
                lo: num(a)?,
                hi: num(b.strip_prefix('=').unwrap_or(b))?,
            },
            None => Span::single(num(s)?),
        };
        if span.lo > span.hi {
            return Err(format!("empty range {s}"));
        }
        Ok(span)
    }
}

/// Comma-separated part list; validated as a partition later.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartList(pub Vec<i64>);

impl FromStr for PartList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| format!("{t:?} is not an integer"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(PartList)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ranges() {
        assert_eq!("7..40".parse::<Span>(), Ok(Span { lo: 7, hi: 40 }));
        assert_eq!("7..=40".parse::<Span>(), Ok(Span { lo: 7, hi: 40 }));
        assert_eq!("45".parse::<Span>(), Ok(Span::single(45)));
        assert!("9..3".parse::<Span>().is_err());
        assert!("a..3".parse::<Span>().is_err());
        assert!("-3".parse::<Span>().is_err());
    }

    #[test]
    fn parses_part_lists() {
        assert_eq!("3, 1,2".parse::<PartList>(), Ok(PartList(vec![3, 1, 2])));
        assert!("1,,2".parse::<PartList>().is_err());
    }
}
