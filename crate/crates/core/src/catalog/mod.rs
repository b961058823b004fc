//! Polarized families and their Hilbert polynomials.
//!
//! Each family is a [`FamilyKind`] strategy registered by name in a
//! [`Registry`]. The typed constructors below ([`blownup_plane`],
//! [`k3_polarized`], ...) go through the builtin strategies; products are
//! composed with [`product_family`] rather than registered.

mod descriptor;
mod families;
mod registry;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ratpoly::{int, proj_space_chi, LinearTwist, RatPoly};

pub use descriptor::{FamilyDescriptor, FamilyTag};
pub use families::{
    BlownUpPlane, Cy3FiberProduct, EllipticCurve, EnriquesFm, HypersurfaceW, K3Polarized,
};
pub use registry::{FamilyKind, Registry};

/// Intersection numbers feeding surface Riemann–Roch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceRRData {
    /// `(L^2)`
    pub l2: i64,
    /// `(L . K_S)`
    pub lk: i64,
    /// `chi(O_S)`
    pub chi_o: i64,
}

/// Intersection numbers feeding Riemann–Roch on a Calabi–Yau threefold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CY3RRData {
    /// `(L^3)`
    pub l3: i64,
    /// `(L . c_2)`
    pub lc2: i64,
}

/// `(L^2)/2 n^2 - (L.K)/2 n + chi(O)`.
pub fn hilbert_surface(d: SurfaceRRData) -> RatPoly {
    RatPoly::from_coeffs(vec![
        int(d.chi_o),
        BigRational::new(BigInt::from(-d.lk), BigInt::from(2)),
        BigRational::new(BigInt::from(d.l2), BigInt::from(2)),
    ])
}

/// `(L^3)/6 n^3 + (L.c_2)/12 n`.
pub fn hilbert_cy3(d: CY3RRData) -> RatPoly {
    RatPoly::from_coeffs(vec![
        int(0),
        BigRational::new(BigInt::from(d.lc2), BigInt::from(12)),
        int(0),
        BigRational::new(BigInt::from(d.l3), BigInt::from(6)),
    ])
}

/// Euler characteristic of `O(t_1(n), ..., t_s(n))` on `P^{d_1} x ... x P^{d_s}`.
pub fn multiproj_chi(dims: &[i64], twists: &[LinearTwist]) -> Result<RatPoly> {
    if dims.len() != twists.len() {
        return Err(Error::DimensionMismatch {
            dims: dims.len(),
            twists: twists.len(),
        });
    }
    dims.iter()
        .zip(twists)
        .map(|(&d, &t)| proj_space_chi(d, t))
        .product()
}

/// Künneth product of polarized families.
pub fn product_family(
    children: Vec<(FamilyDescriptor, RatPoly)>,
) -> Result<(FamilyDescriptor, RatPoly)> {
    if children.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let poly = children.iter().map(|(_, p)| p).product();
    let desc = FamilyDescriptor::product(children.into_iter().map(|(d, _)| d).collect());
    Ok((desc, poly))
}

pub fn blownup_plane(p: i64, k: i64) -> Result<(FamilyDescriptor, RatPoly)> {
    BlownUpPlane.build(&[p, k])
}

pub fn enriques_fm(m: i64) -> Result<(FamilyDescriptor, RatPoly)> {
    EnriquesFm.build(&[m])
}

pub fn k3_polarized(r: i64) -> Result<(FamilyDescriptor, RatPoly)> {
    K3Polarized.build(&[r])
}

pub fn elliptic_curve(deg: i64) -> Result<(FamilyDescriptor, RatPoly)> {
    EllipticCurve.build(&[deg])
}

pub fn cy3_fiber_product(m: i64) -> Result<(FamilyDescriptor, RatPoly)> {
    Cy3FiberProduct.build(&[m])
}

#[allow(non_snake_case)]
pub fn hypersurface_W(x: i64, y: i64, z: i64) -> Result<(FamilyDescriptor, RatPoly)> {
    HypersurfaceW.build(&[x, y, z])
}
