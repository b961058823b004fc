//! Builtin family strategies.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::descriptor::FamilyTag;
use super::registry::FamilyKind;
use super::{hilbert_cy3, hilbert_surface, multiproj_chi, CY3RRData, SurfaceRRData};
use crate::error::{Error, Result};
use crate::matcher::ParamRange;
use crate::ratpoly::{int, LinearTwist, RatPoly};

fn guard(tag: FamilyTag, ok: bool, condition: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::AmplenessViolation {
            family: tag,
            condition: condition.to_string(),
        })
    }
}

fn overflow(tag: FamilyTag) -> Error {
    Error::BadParams {
        family: tag,
        message: "parameters overflow 64-bit intersection numbers".into(),
    }
}

/// Divisor class `a h + b (e_1 + ... + e_k)` on the plane blown up at k points,
/// with `h^2 = 1`, `e_i^2 = -1` and all other products zero.
#[derive(Debug, Clone, Copy)]
struct BlowupClass {
    h: i64,
    e: i64,
}

impl BlowupClass {
    fn dot(self, other: BlowupClass, k: i64) -> Option<i64> {
        let hh = self.h.checked_mul(other.h)?;
        let ee = self.e.checked_mul(other.e)?.checked_mul(k)?;
        hh.checked_sub(ee)
    }
}

/// The plane blown up at k general points, polarized by `p h - sum e_i`.
#[derive(Debug, Clone, Copy, Default)]
pub struct BlownUpPlane;

impl FamilyKind for BlownUpPlane {
    fn tag(&self) -> FamilyTag {
        FamilyTag::BlownUpPlane
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["blownup", "rational-surface"]
    }

    fn param_names(&self) -> &'static [&'static str] {
        &["p", "k"]
    }

    fn assumptions(&self) -> &'static [&'static str] {
        &["blown-up points in general position"]
    }

    fn check(&self, params: &[i64]) -> Result<()> {
        let (p, k) = (params[0], params[1]);
        guard(self.tag(), p > 2, "p > 2")?;
        guard(self.tag(), k > 0, "k > 0")?;
        let p2 = p.checked_mul(p).ok_or_else(|| overflow(self.tag()))?;
        guard(self.tag(), p2 > k, "p^2 > k")
    }

    fn polynomial(&self, params: &[i64]) -> Result<RatPoly> {
        let (p, k) = (params[0], params[1]);
        let ell = BlowupClass { h: p, e: -1 };
        let canonical = BlowupClass { h: -3, e: 1 };
        let l2 = ell.dot(ell, k).ok_or_else(|| overflow(self.tag()))?;
        let lk = ell.dot(canonical, k).ok_or_else(|| overflow(self.tag()))?;
        Ok(hilbert_surface(SurfaceRRData { l2, lk, chi_o: 1 }))
    }

    fn default_range(&self) -> ParamRange {
        ParamRange::new(&[("p", 3, 12), ("k", 1, 143)]).unwrap()
    }
}

/// Enriques surface with elliptic fibre F and bisection C, polarized by `F + m C`.
#[derive(Debug, Clone, Copy, Default)]
pub struct EnriquesFm;

impl FamilyKind for EnriquesFm {
    fn tag(&self) -> FamilyTag {
        FamilyTag::EnriquesFm
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["enriques-fm"]
    }

    fn param_names(&self) -> &'static [&'static str] {
        &["m"]
    }

    fn assumptions(&self) -> &'static [&'static str] {
        &["generic Enriques surface (no smooth rational curves)"]
    }

    fn check(&self, params: &[i64]) -> Result<()> {
        guard(self.tag(), params[0] >= 1, "m >= 1")
    }

    fn polynomial(&self, params: &[i64]) -> Result<RatPoly> {
        let m = params[0];
        let l2 = fm_square(m).ok_or_else(|| overflow(self.tag()))?;
        // K is numerically trivial
        Ok(hilbert_surface(SurfaceRRData {
            l2,
            lk: 0,
            chi_o: 1,
        }))
    }

    fn default_range(&self) -> ParamRange {
        ParamRange::new(&[("m", 1, 60)]).unwrap()
    }
}

/// `(F + mC)^2 = (F^2) + 2m (F.C) + m^2 (C^2)` with `(F^2) = (C^2) = 0`, `(F.C) = 1`.
fn fm_square(m: i64) -> Option<i64> {
    let (ff, fc, cc) = (0i64, 1i64, 0i64);
    let cross = m.checked_mul(2)?.checked_mul(fc)?;
    let square = m.checked_mul(m)?.checked_mul(cc)?;
    ff.checked_add(cross)?.checked_add(square)
}

/// K3 surface with a polarization of degree `(l^2) = 2r`.
#[derive(Debug, Clone, Copy, Default)]
pub struct K3Polarized;

impl FamilyKind for K3Polarized {
    fn tag(&self) -> FamilyTag {
        FamilyTag::K3
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["k3-polarized"]
    }

    fn param_names(&self) -> &'static [&'static str] {
        &["r"]
    }

    fn check(&self, params: &[i64]) -> Result<()> {
        guard(self.tag(), params[0] >= 1, "r >= 1")
    }

    fn polynomial(&self, params: &[i64]) -> Result<RatPoly> {
        let l2 = params[0]
            .checked_mul(2)
            .ok_or_else(|| overflow(self.tag()))?;
        Ok(hilbert_surface(SurfaceRRData {
            l2,
            lk: 0,
            chi_o: 2,
        }))
    }

    fn default_range(&self) -> ParamRange {
        ParamRange::new(&[("r", 1, 100)]).unwrap()
    }
}

/// Elliptic curve with a line bundle of positive degree.
#[derive(Debug, Clone, Copy, Default)]
pub struct EllipticCurve;

impl FamilyKind for EllipticCurve {
    fn tag(&self) -> FamilyTag {
        FamilyTag::EllipticCurve
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["elliptic"]
    }

    fn param_names(&self) -> &'static [&'static str] {
        &["deg"]
    }

    fn check(&self, params: &[i64]) -> Result<()> {
        guard(self.tag(), params[0] >= 1, "deg >= 1")
    }

    fn polynomial(&self, params: &[i64]) -> Result<RatPoly> {
        // deg(n eta) + 1 - g with g = 1
        let genus = 1;
        Ok(RatPoly::from_ints(&[1 - genus, params[0]]))
    }

    fn default_range(&self) -> ParamRange {
        ParamRange::new(&[("deg", 1, 12)]).unwrap()
    }
}

/// Fibre product of two rational elliptic surfaces over P^1, polarized by
/// `R_1 + R_2 + m F`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Cy3FiberProduct;

impl FamilyKind for Cy3FiberProduct {
    fn tag(&self) -> FamilyTag {
        FamilyTag::CY3FiberProduct
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["cy3"]
    }

    fn param_names(&self) -> &'static [&'static str] {
        &["m"]
    }

    fn assumptions(&self) -> &'static [&'static str] {
        &["generic relatively minimal rational elliptic surfaces with section"]
    }

    fn check(&self, params: &[i64]) -> Result<()> {
        guard(self.tag(), params[0] >= 3, "m >= 3")
    }

    fn polynomial(&self, params: &[i64]) -> Result<RatPoly> {
        let l3 = params[0]
            .checked_sub(1)
            .and_then(|v| v.checked_mul(6))
            .ok_or_else(|| overflow(self.tag()))?;
        // c_2 . R_i = c_2(R_i) - (K_{R_i}^2) = 12 - 0 on each rational elliptic
        // surface; c_2 . F = 0 since the fibre F is an abelian surface.
        let (c2_r, c2_f) = (12i64, 0i64);
        let lc2 = 2 * c2_r + params[0].saturating_mul(c2_f);
        Ok(hilbert_cy3(CY3RRData { l3, lc2 }))
    }

    fn default_range(&self) -> ParamRange {
        ParamRange::new(&[("m", 3, 60)]).unwrap()
    }
}

/// Smooth (3,3,2) hypersurface in P^2 x P^2 x P^1, polarized by `O(x, y, z)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct HypersurfaceW;

/// Multidegree of the hypersurface and the ambient dimensions.
const W_DIMS: [i64; 3] = [2, 2, 1];
const W_DEGREE: [i64; 3] = [3, 3, 2];

impl HypersurfaceW {
    /// `chi(O(nx, ny, nz)) - chi(O(nx - 3, ny - 3, nz - 2))` on the ambient space.
    pub fn via_exact_sequence(x: i64, y: i64, z: i64) -> Result<RatPoly> {
        let slopes = [x, y, z];
        let ambient: Vec<_> = slopes.iter().map(|&s| LinearTwist::new(s, 0)).collect();
        let ideal: Vec<_> = slopes
            .iter()
            .zip(W_DEGREE)
            .map(|(&s, d)| LinearTwist::new(s, -d))
            .collect();
        Ok(multiproj_chi(&W_DIMS, &ambient)? - multiproj_chi(&W_DIMS, &ideal)?)
    }

    /// `((3xy(x+y)z + x^2y^2) n^4 + (6(x+y)z + 2x^2 + 9xy + 2y^2) n^2 + 4) / 2`.
    pub fn closed_form(x: i64, y: i64, z: i64) -> RatPoly {
        let (x, y, z) = (BigInt::from(x), BigInt::from(y), BigInt::from(z));
        let quartic = BigInt::from(3) * &x * &y * (&x + &y) * &z + &x * &x * &y * &y;
        let quadratic = BigInt::from(6) * (&x + &y) * &z
            + BigInt::from(2) * &x * &x
            + BigInt::from(9) * &x * &y
            + BigInt::from(2) * &y * &y;
        let half = |v: BigInt| BigRational::new(v, BigInt::from(2));
        RatPoly::from_coeffs(vec![int(2), int(0), half(quadratic), int(0), half(quartic)])
    }
}

/// Fails with [`Error::InternalInconsistency`] unless the two routes agree.
pub(crate) fn reconcile(what: &str, a: RatPoly, b: &RatPoly) -> Result<RatPoly> {
    if &a == b {
        Ok(a)
    } else {
        Err(Error::InternalInconsistency(format!("{what}: {a} != {b}")))
    }
}

impl FamilyKind for HypersurfaceW {
    fn tag(&self) -> FamilyTag {
        FamilyTag::HypersurfaceW
    }

    fn aliases(&self) -> &'static [&'static str] {
        &["w", "hypersurface"]
    }

    fn param_names(&self) -> &'static [&'static str] {
        &["x", "y", "z"]
    }

    fn assumptions(&self) -> &'static [&'static str] {
        &["smooth hypersurface of multidegree (3,3,2)"]
    }

    fn check(&self, params: &[i64]) -> Result<()> {
        guard(self.tag(), params[0] >= 1, "x >= 1")?;
        guard(self.tag(), params[1] >= 1, "y >= 1")?;
        guard(self.tag(), params[2] >= 1, "z >= 1")?;
        guard(
            self.tag(),
            params.iter().all(|&v| v <= 1 << 20),
            "x, y, z <= 2^20",
        )
    }

    fn polynomial(&self, params: &[i64]) -> Result<RatPoly> {
        let (x, y, z) = (params[0], params[1], params[2]);
        let exact = Self::via_exact_sequence(x, y, z)?;
        reconcile(
            "hypersurface W exact sequence vs closed form",
            exact,
            &Self::closed_form(x, y, z),
        )
    }

    fn default_range(&self) -> ParamRange {
        ParamRange::new(&[("x", 1, 8), ("y", 1, 8), ("z", 1, 8)]).unwrap()
    }
}
