//! Text forms used by the command line: partitions as bracketed lists and
//! symmetric-function expressions built from `+`, `-`, integer scalars and
//! `s[...]` atoms.

use num::BigInt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::SymFunc;

/// Parses `"[2,1]"`, `"2,1"`, `"2"` or `"[]"` into a partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let inner = text.trim();
    let inner = inner
        .strip_prefix('[')
        .map(|rest| {
            rest.strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unbalanced brackets in {:?}", text)))
        })
        .transpose()?
        .unwrap_or(inner);
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad partition entry {:?}", tok)))
        })
        .collect::<Result<Vec<u32>>>()?;
    Partition::try_new(parts)
}

/// Parses expressions like `"s[2,1] + 2*s[1] - 3"`. A bare bracketed list
/// is accepted as a Schur atom, so `"[2]"` means `s[2]`; a bare integer is
/// a multiple of `s[]`.
pub fn parse_symfunc(text: &str) -> Result<SymFunc> {
    let mut out = SymFunc::zero();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut sign: i64 = 1;
    let mut first = true;
    loop {
        rest = rest.trim_start();
        if rest.is_empty() {
            if first {
                break;
            }
            return Err(Error::Parse("dangling operator".into()));
        }
        if !first {
            let op = rest.chars().next().unwrap();
            match op {
                '+' => sign = 1,
                '-' => sign = -1,
                _ => return Err(Error::Parse(format!("expected + or - before {:?}", rest))),
            }
            rest = rest[1..].trim_start();
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        first = false;

        // optional integer scalar
        let digits_end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        let mut coeff = BigInt::from(sign);
        let mut has_scalar = false;
        if digits_end > 0 {
            let scalar: BigInt = rest[..digits_end]
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer in {:?}", rest)))?;
            coeff *= scalar;
            has_scalar = true;
            rest = rest[digits_end..].trim_start();
            if let Some(r) = rest.strip_prefix('*') {
                rest = r.trim_start();
            }
        }

        // atom: 's[...]' or bare '[...]', optional after a scalar
        if rest.starts_with('s') || rest.starts_with('[') {
            let body = rest.strip_prefix('s').unwrap_or(rest);
            let open = body
                .strip_prefix('[')
                .ok_or_else(|| Error::Parse(format!("expected [ in {:?}", rest)))?;
            let close = open
                .find(']')
                .ok_or_else(|| Error::Parse(format!("missing ] in {:?}", rest)))?;
            let lam = parse_partition(&open[..close])?;
            out.add_term(lam, coeff);
            rest = &open[close + 1..];
        } else if has_scalar {
            out.add_term(Partition::empty(), coeff);
        } else {
            return Err(Error::Parse(format!("expected term at {:?}", rest)));
        }
        sign = 1;

        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::Coeff;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("[2,1]").unwrap(), p(&[2, 1]));
        assert_eq!(parse_partition("2,1").unwrap(), p(&[2, 1]));
        assert_eq!(parse_partition("3").unwrap(), p(&[3]));
        assert_eq!(parse_partition("[]").unwrap(), Partition::empty());
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert!(parse_partition("[1,2]").is_err());
        assert!(parse_partition("[2,x]").is_err());
        assert!(parse_partition("[2").is_err());
    }

    #[test]
    fn expressions() {
        let f = parse_symfunc("s[2,1] + 2*s[1] - 3").unwrap();
        assert_eq!(f.coefficient(&p(&[2, 1])), Coeff::from(1));
        assert_eq!(f.coefficient(&p(&[1])), Coeff::from(2));
        assert_eq!(f.coefficient(&p(&[])), Coeff::from(-3));

        let f = parse_symfunc("[2]").unwrap();
        assert_eq!(f, SymFunc::schur(p(&[2])));

        let f = parse_symfunc("-s[1] + s[1]").unwrap();
        assert!(f.is_zero());

        let f = parse_symfunc("2 s[1]").unwrap();
        assert_eq!(f.coefficient(&p(&[1])), Coeff::from(2));

        assert!(parse_symfunc("").is_err());
        assert!(parse_symfunc("s[1] +").is_err());
        assert!(parse_symfunc("q[1]").is_err());

        // round trip through display
        let f = parse_symfunc("3*s[2,1] - s[1,1,1]").unwrap();
        assert_eq!(f.to_string(), "3*s[2,1] - s[1,1,1]");
        assert_eq!(parse_symfunc(&f.to_string()).unwrap(), f);
    }
}
