//! Counterexample pairs: two polarized manifolds with one Hilbert polynomial,
//! one Calabi–Yau and one of Kodaira dimension minus infinity.

use crate::catalog::{product_family, FamilyDescriptor, FamilyTag, Registry};
use crate::error::{Error, Result};
use crate::matcher::CY4Solution;
use crate::ratpoly::RatPoly;

pub type Member = (FamilyDescriptor, RatPoly);

/// A matched pair `(Calabi–Yau side, non-Calabi–Yau side)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexamplePair {
    pub dimension: usize,
    pub calabi_yau: Member,
    pub other: Member,
}

impl CounterexamplePair {
    pub fn polynomials_agree(&self) -> bool {
        self.calabi_yau.1 == self.other.1
    }
}

fn build(reg: &Registry, tag: FamilyTag, params: &[i64]) -> Result<Member> {
    reg.by_tag(tag)?.build(params)
}

/// Threefold pair: the fibre product with `m = p(p-3) + 1` against
/// `S_{3p} x E` with a degree-2 bundle on E.
pub fn cy3_pair(reg: &Registry, p: i64) -> Result<CounterexamplePair> {
    let m = p
        .checked_mul(p - 3)
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| Error::BadParams {
            family: FamilyTag::CY3FiberProduct,
            message: "p too large".into(),
        })?;
    let k = p.checked_mul(3).ok_or_else(|| Error::BadParams {
        family: FamilyTag::BlownUpPlane,
        message: "p too large".into(),
    })?;
    let calabi_yau = build(reg, FamilyTag::CY3FiberProduct, &[m])?;
    let other = product_family(vec![
        build(reg, FamilyTag::BlownUpPlane, &[p, k])?,
        build(reg, FamilyTag::EllipticCurve, &[2])?,
    ])?;
    Ok(CounterexamplePair {
        dimension: 3,
        calabi_yau,
        other,
    })
}

/// Fourfold pair for a solution of the Diophantine system: `W` against
/// `S x S_{3p}` with S a K3 surface of degree `2r`.
pub fn cy4_pair(reg: &Registry, sol: &CY4Solution) -> Result<CounterexamplePair> {
    let calabi_yau = build(reg, FamilyTag::HypersurfaceW, &[sol.x, sol.y, sol.z])?;
    let other = product_family(vec![
        build(reg, FamilyTag::K3, &[sol.r])?,
        build(reg, FamilyTag::BlownUpPlane, &[sol.p, 3 * sol.p])?,
    ])?;
    Ok(CounterexamplePair {
        dimension: 4,
        calabi_yau,
        other,
    })
}

/// Lifts the threefold pair to dimension `d >= 5` by multiplying both sides
/// with K3 factors of degree `2r`: `(d-3)/2` of them for odd d, and one extra
/// copy of the Calabi–Yau threefold plus `(d-6)/2` of them for even d.
/// `d = 3` returns the threefold pair itself.
pub fn lift_cy3_pair(reg: &Registry, d: i64, p: i64, r: i64) -> Result<CounterexamplePair> {
    let base = cy3_pair(reg, p)?;
    if d == 3 {
        return Ok(base);
    }
    if d < 5 {
        return Err(Error::InvalidDimension(d));
    }
    let k3 = build(reg, FamilyTag::K3, &[r])?;
    let mut extra: Vec<Member> = Vec::new();
    if d % 2 == 1 {
        extra.extend(std::iter::repeat_n(k3, ((d - 3) / 2) as usize));
    } else {
        extra.push(base.calabi_yau.clone());
        extra.extend(std::iter::repeat_n(k3, ((d - 6) / 2) as usize));
    }
    let lift = |seed: Member| {
        let mut factors = vec![seed];
        factors.extend(extra.iter().cloned());
        product_family(factors)
    };
    Ok(CounterexamplePair {
        dimension: d as usize,
        calabi_yau: lift(base.calabi_yau.clone())?,
        other: lift(base.other)?,
    })
}
