//! Parser for match-side specifications.
//!
//! ```text
//! side    := family | "product[" family ("," family)* "]"
//! family  := name ":" param ("," param)*
//! param   := ident "=" int [".." int]
//! ```
//!
//! Inside `product[...]` a comma-separated token containing `:` starts a new
//! factor; tokens without one extend the current factor's parameters.

use crate::catalog::{FamilyTag, Registry};
use crate::error::{Error, Result};
use crate::matcher::{ParamRange, Side};

fn parse_int(s: &str, ctx: &str) -> Result<i64> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| Error::Parse(format!("expected an integer in {ctx:?}, got {s:?}")))
}

fn parse_param(tok: &str) -> Result<(String, i64, i64)> {
    let (name, value) = tok
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("expected param=lo..hi, got {tok:?}")))?;
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(Error::Parse(format!("bad parameter name {name:?}")));
    }
    let (lo, hi) = match value.split_once("..") {
        Some((lo, hi)) => (parse_int(lo, tok)?, parse_int(hi, tok)?),
        None => {
            let v = parse_int(value, tok)?;
            (v, v)
        }
    };
    Ok((name.to_string(), lo, hi))
}

fn parse_family(reg: &Registry, head: &str, params: &[&str]) -> Result<(FamilyTag, ParamRange)> {
    let (name, first) = head
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected family:param=lo..hi, got {head:?}")))?;
    let tag = reg.get(name.trim())?.tag();
    let mut bounds = Vec::with_capacity(params.len() + 1);
    if !first.trim().is_empty() {
        bounds.push(parse_param(first)?);
    }
    for p in params {
        bounds.push(parse_param(p)?);
    }
    Ok((tag, ParamRange::from_owned(bounds)?))
}

/// Splits comma-separated tokens into factors, each beginning at a `name:` token.
fn parse_factors(reg: &Registry, body: &str) -> Result<Vec<(FamilyTag, ParamRange)>> {
    let mut groups: Vec<Vec<&str>> = Vec::new();
    for tok in body.split(',') {
        if tok.contains(':') {
            groups.push(vec![tok]);
        } else if let Some(g) = groups.last_mut() {
            g.push(tok);
        } else {
            return Err(Error::Parse(format!(
                "factor must start with family name, got {tok:?}"
            )));
        }
    }
    groups
        .iter()
        .map(|g| parse_family(reg, g[0], &g[1..]))
        .collect()
}

pub fn parse_side(reg: &Registry, spec: &str) -> Result<Side> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("product[") {
        let body = rest
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("unterminated product in {spec:?}")))?;
        if body.trim().is_empty() {
            return Err(Error::EmptyProduct);
        }
        return Ok(Side::Product(parse_factors(reg, body)?));
    }
    let mut factors = parse_factors(reg, spec)?;
    match factors.len() {
        1 => {
            let (tag, range) = factors.pop().unwrap();
            Ok(Side::Family(tag, range))
        }
        _ => Err(Error::Parse(format!(
            "expected a single family, got {spec:?}; use product[...]"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg() -> Registry {
        Registry::builtin()
    }

    #[test]
    fn single_family() {
        let side = parse_side(&reg(), "blownup-plane:p=3..6,k=1..35").unwrap();
        assert_eq!(
            side,
            Side::Family(
                FamilyTag::BlownUpPlane,
                ParamRange::new(&[("p", 3, 6), ("k", 1, 35)]).unwrap()
            )
        );
        let side = parse_side(&reg(), "enriques:m=2").unwrap();
        assert_eq!(
            side,
            Side::Family(
                FamilyTag::EnriquesFm,
                ParamRange::new(&[("m", 2, 2)]).unwrap()
            )
        );
        let neg = parse_side(&reg(), "k3:r=-2..-1").unwrap();
        assert_eq!(
            neg,
            Side::Family(FamilyTag::K3, ParamRange::new(&[("r", -2, -1)]).unwrap())
        );
    }

    #[test]
    fn product_side() {
        let side =
            parse_side(&reg(), "product[k3:r=80..90,blownup-plane:p=4..4,k=12..12]").unwrap();
        let Side::Product(factors) = side else {
            panic!("not a product")
        };
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].0, FamilyTag::K3);
        assert_eq!(
            factors[1].1,
            ParamRange::new(&[("p", 4, 4), ("k", 12, 12)]).unwrap()
        );
    }

    #[test]
    fn malformed() {
        for bad in [
            "",
            "k3",
            "k3:r",
            "k3:r=a..b",
            "k3:r=3..1",
            "torus:a=1",
            "product[k3:r=1",
            "product[r=1]",
            "product[]",
            "k3:r=1,enriques:m=1",
            "k3:r=1,r=2",
        ] {
            assert!(parse_side(&reg(), bad).is_err(), "{bad}");
        }
    }
}
