//! Parameter sweeps, Hilbert-polynomial coincidence search and the
//! fourfold Diophantine system.

use std::collections::HashMap;

use num_integer::Roots;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::catalog::{product_family, FamilyDescriptor, FamilyKind, FamilyTag, Registry};
use crate::error::{Error, Result};
use crate::ratpoly::RatPoly;

/// Fixed reading attached to every match.
pub const INTERPRETATION: &str =
    "fibers of a flat projective morphism over a connected base";

/// Tuples built per rayon task.
const CHUNK: usize = 256;

/// Inclusive bounds per named parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamRange {
    bounds: Vec<(String, i64, i64)>,
}

impl ParamRange {
    pub fn new(bounds: &[(&str, i64, i64)]) -> Result<Self> {
        Self::from_owned(
            bounds
                .iter()
                .map(|&(n, lo, hi)| (n.to_string(), lo, hi))
                .collect(),
        )
    }

    pub fn from_owned(bounds: Vec<(String, i64, i64)>) -> Result<Self> {
        for (name, lo, hi) in &bounds {
            if lo > hi {
                return Err(Error::InvalidRange {
                    param: name.clone(),
                    lo: *lo,
                    hi: *hi,
                });
            }
        }
        for (i, (name, _, _)) in bounds.iter().enumerate() {
            if bounds[..i].iter().any(|(n, _, _)| n == name) {
                return Err(Error::Parse(format!("parameter {name} given twice")));
            }
        }
        Ok(ParamRange { bounds })
    }

    pub fn bounds(&self) -> &[(String, i64, i64)] {
        &self.bounds
    }

    /// Number of tuples in the box, saturating.
    pub fn volume(&self) -> u128 {
        self.bounds
            .iter()
            .map(|&(_, lo, hi)| (hi as i128 - lo as i128 + 1) as u128)
            .fold(1u128, |acc, v| acc.saturating_mul(v))
    }

    /// Bounds reordered to `names`; every name must be present and no others.
    fn aligned(&self, family: FamilyTag, names: &[&str]) -> Result<Vec<(i64, i64)>> {
        let mut out = Vec::with_capacity(names.len());
        for want in names {
            let b = self
                .bounds
                .iter()
                .find(|(n, _, _)| n == want)
                .ok_or_else(|| Error::BadParams {
                    family,
                    message: format!("range is missing parameter {want}"),
                })?;
            out.push((b.1, b.2));
        }
        if let Some((extra, _, _)) = self
            .bounds
            .iter()
            .find(|(n, _, _)| !names.contains(&n.as_str()))
        {
            return Err(Error::BadParams {
                family,
                message: format!("unknown parameter {extra}"),
            });
        }
        Ok(out)
    }
}

/// Lexicographic walk over an integer box (last coordinate fastest).
struct BoxIter {
    bounds: Vec<(i64, i64)>,
    next: Option<Vec<i64>>,
}

impl BoxIter {
    fn new(bounds: Vec<(i64, i64)>) -> Self {
        let next = Some(bounds.iter().map(|b| b.0).collect());
        BoxIter { bounds, next }
    }
}

impl Iterator for BoxIter {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            if succ[i] < self.bounds[i].1 {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = self.bounds[i].0;
        }
        Some(current)
    }
}

/// One side of a match query: a single family or a product of families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Side {
    Family(FamilyTag, ParamRange),
    Product(Vec<(FamilyTag, ParamRange)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchRecord {
    pub left: FamilyDescriptor,
    pub right: FamilyDescriptor,
    pub polynomial: RatPoly,
    pub interpretation: String,
}

impl MatchRecord {
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("left".into(), self.left.to_json());
        obj.insert("right".into(), self.right.to_json());
        obj.insert("polynomial".into(), Value::from(self.polynomial.key()));
        obj.insert(
            "interpretation".into(),
            Value::from(self.interpretation.as_str()),
        );
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> std::result::Result<Self, String> {
        let left = FamilyDescriptor::from_json(v.get("left").ok_or("missing left")?)?;
        let right = FamilyDescriptor::from_json(v.get("right").ok_or("missing right")?)?;
        let key = v
            .get("polynomial")
            .and_then(Value::as_str)
            .ok_or("missing polynomial")?;
        let polynomial = RatPoly::from_key(key).map_err(|e| e.to_string())?;
        let interpretation = v
            .get("interpretation")
            .and_then(Value::as_str)
            .ok_or("missing interpretation")?
            .to_string();
        Ok(MatchRecord {
            left,
            right,
            polynomial,
            interpretation,
        })
    }
}

/// Enumerates and matches families drawn from a [`Registry`].
#[derive(Debug, Clone, Default)]
pub struct Matcher {
    registry: Registry,
}

impl Matcher {
    pub fn new(registry: Registry) -> Self {
        Matcher { registry }
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    /// Lazily yields every guard-passing member of the box in lexicographic
    /// parameter order. Errors other than guard violations are passed through.
    pub fn enumerate_family(
        &self,
        tag: FamilyTag,
        range: &ParamRange,
    ) -> Result<impl Iterator<Item = Result<(FamilyDescriptor, RatPoly)>> + '_> {
        let kind = self.registry.by_tag(tag)?;
        let bounds = range.aligned(tag, kind.param_names())?;
        Ok(BoxIter::new(bounds).filter_map(move |params| build_or_skip(kind, &params)))
    }

    /// [`Matcher::enumerate_family`] evaluated in parallel chunks; order is preserved.
    pub fn collect_family(
        &self,
        tag: FamilyTag,
        range: &ParamRange,
    ) -> Result<Vec<(FamilyDescriptor, RatPoly)>> {
        let kind = self.registry.by_tag(tag)?;
        let bounds = range.aligned(tag, kind.param_names())?;
        let tuples: Vec<Vec<i64>> = BoxIter::new(bounds).collect();
        let chunks: Vec<Vec<_>> = tuples
            .par_chunks(CHUNK)
            .map(|chunk| {
                chunk
                    .iter()
                    .filter_map(|t| build_or_skip(kind, t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(chunks.into_iter().flatten().collect())
    }

    /// Cartesian product of factor enumerations, each combination turned into
    /// a product family. Lexicographic in the factors.
    pub fn collect_product(
        &self,
        factors: &[(FamilyTag, ParamRange)],
    ) -> Result<Vec<(FamilyDescriptor, RatPoly)>> {
        if factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        let members = factors
            .iter()
            .map(|(tag, range)| self.collect_family(*tag, range))
            .collect::<Result<Vec<_>>>()?;
        if members.iter().any(Vec::is_empty) {
            return Ok(Vec::new());
        }
        let bounds: Vec<(i64, i64)> = members.iter().map(|m| (0, m.len() as i64 - 1)).collect();
        let combos: Vec<Vec<i64>> = BoxIter::new(bounds).collect();
        combos
            .par_iter()
            .map(|idx| {
                let children = idx
                    .iter()
                    .zip(&members)
                    .map(|(&i, m)| m[i as usize].clone())
                    .collect();
                product_family(children)
            })
            .collect()
    }

    pub fn collect_side(&self, side: &Side) -> Result<Vec<(FamilyDescriptor, RatPoly)>> {
        match side {
            Side::Family(tag, range) => self.collect_family(*tag, range),
            Side::Product(factors) => self.collect_product(factors),
        }
    }

    pub fn match_sides(&self, left: &Side, right: &Side) -> Result<Vec<MatchRecord>> {
        let (l, r) = rayon::join(|| self.collect_side(left), || self.collect_side(right));
        Ok(match_members(&l?, &r?))
    }

    pub fn find_matches(
        &self,
        left: (FamilyTag, &ParamRange),
        right: (FamilyTag, &ParamRange),
    ) -> Result<Vec<MatchRecord>> {
        self.match_sides(
            &Side::Family(left.0, left.1.clone()),
            &Side::Family(right.0, right.1.clone()),
        )
    }

    pub fn compose_and_match(
        &self,
        left_factors: &[(FamilyTag, ParamRange)],
        right_factors: &[(FamilyTag, ParamRange)],
    ) -> Result<Vec<MatchRecord>> {
        self.match_sides(
            &Side::Product(left_factors.to_vec()),
            &Side::Product(right_factors.to_vec()),
        )
    }
}

fn build_or_skip(
    kind: &dyn FamilyKind,
    params: &[i64],
) -> Option<Result<(FamilyDescriptor, RatPoly)>> {
    match kind.build(params) {
        Err(Error::AmplenessViolation { .. }) => None,
        other => Some(other),
    }
}

/// Buckets `right` by canonical key and pairs every `left` member with its
/// bucket. Output is sorted by (left params, right params).
pub fn match_members(
    left: &[(FamilyDescriptor, RatPoly)],
    right: &[(FamilyDescriptor, RatPoly)],
) -> Vec<MatchRecord> {
    let right_keys: Vec<String> = right.par_iter().map(|(_, p)| p.key()).collect();
    let mut buckets: HashMap<&str, Vec<usize>> = HashMap::new();
    for (j, key) in right_keys.iter().enumerate() {
        buckets.entry(key.as_str()).or_default().push(j);
    }
    let mut out: Vec<MatchRecord> = left
        .par_iter()
        .flat_map_iter(|(ld, lp)| {
            let key = lp.key();
            let hits = buckets.get(key.as_str()).cloned().unwrap_or_default();
            hits.into_iter().map(move |j| {
                let (rd, rp) = &right[j];
                debug_assert_eq!(lp, rp);
                MatchRecord {
                    left: ld.clone(),
                    right: rd.clone(),
                    polynomial: rp.clone(),
                    interpretation: INTERPRETATION.to_string(),
                }
            })
        })
        .collect();
    out.sort_by_cached_key(|m| (m.left.flat_params(), m.right.flat_params()));
    out
}

pub fn enumerate_family(
    tag: FamilyTag,
    range: &ParamRange,
) -> Result<Vec<(FamilyDescriptor, RatPoly)>> {
    Matcher::default().collect_family(tag, range)
}

pub fn find_matches(
    left: (FamilyTag, &ParamRange),
    right: (FamilyTag, &ParamRange),
) -> Result<Vec<MatchRecord>> {
    Matcher::default().find_matches(left, right)
}

pub fn compose_and_match(
    left_factors: &[(FamilyTag, ParamRange)],
    right_factors: &[(FamilyTag, ParamRange)],
) -> Result<Vec<MatchRecord>> {
    Matcher::default().compose_and_match(left_factors, right_factors)
}

/// A solution of the fourfold system relating `S x S_3p` to the hypersurface W.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CY4Solution {
    pub p: i64,
    pub r: i64,
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

/// `3xy(x+y)z + x^2 y^2`
fn quartic_rhs(x: i128, y: i128, z: i128) -> i128 {
    3 * x * y * (x + y) * z + x * x * y * y
}

/// `6(x+y)z + 2x^2 + 9xy + 2y^2`, twice the quadratic right side.
fn quadratic_rhs_doubled(x: i128, y: i128, z: i128) -> i128 {
    6 * (x + y) * z + 2 * x * x + 9 * x * y + 2 * y * y
}

impl CY4Solution {
    pub fn new(p: i64, r: i64, x: i64, y: i64, z: i64) -> Self {
        CY4Solution { p, r, x, y, z }
    }

    pub fn satisfies_system(&self) -> bool {
        let (p, r, x, y, z) = (
            self.p as i128,
            self.r as i128,
            self.x as i128,
            self.y as i128,
            self.z as i128,
        );
        if p < 4 || r < 1 || x < 1 || y < 1 || z < 1 {
            return false;
        }
        let q = p * p - 3 * p;
        let doubled = quadratic_rhs_doubled(x, y, z);
        q * r == quartic_rhs(x, y, z) && doubled % 2 == 0 && q + r == doubled / 2
    }

    /// The same solution with the two P^2 factors exchanged.
    pub fn swapped(&self) -> Self {
        CY4Solution {
            x: self.y,
            y: self.x,
            ..*self
        }
    }
}

fn require_positive(name: &'static str, value: i64) -> Result<()> {
    if value < 1 {
        Err(Error::InvalidBound { name, value })
    } else {
        Ok(())
    }
}

/// Every solution with `4 <= p <= p_max`, `1 <= r <= r_max` and
/// `1 <= x, y, z <= xyz_max`, sorted lexicographically.
///
/// The second equation fixes r from (p, x, y, z), so only those four are
/// scanned; r is then range-checked and the first equation tested.
pub fn solve_cy4_system(p_max: i64, r_max: i64, xyz_max: i64) -> Result<Vec<CY4Solution>> {
    require_positive("p_max", p_max)?;
    require_positive("r_max", r_max)?;
    require_positive("xyz_max", xyz_max)?;
    let mut out: Vec<CY4Solution> = (4..=p_max)
        .into_par_iter()
        .flat_map_iter(|p| {
            let q = p as i128 * p as i128 - 3 * p as i128;
            let side = 1..=xyz_max;
            side.clone()
                .flat_map(move |x| {
                    let side = side.clone();
                    side.clone()
                        .flat_map(move |y| side.clone().map(move |z| (x, y, z)))
                })
                .filter_map(move |(x, y, z)| {
                    let doubled = quadratic_rhs_doubled(x as i128, y as i128, z as i128);
                    if doubled % 2 != 0 {
                        return None;
                    }
                    let r = doubled / 2 - q;
                    if r < 1
                        || r > r_max as i128
                        || q * r != quartic_rhs(x as i128, y as i128, z as i128)
                    {
                        return None;
                    }
                    Some(CY4Solution::new(p, r as i64, x, y, z))
                })
        })
        .collect();
    out.retain(CY4Solution::satisfies_system);
    out.sort();
    Ok(out)
}

/// Solutions on the slice `y = 2x`, `z = x`, where the system reduces to
/// `p^2 - 3p = x^2` and `r = 22 x^2`.
pub fn solve_cy4_reduced(x_max: i64) -> Result<Vec<CY4Solution>> {
    require_positive("x_max", x_max)?;
    let mut out = Vec::new();
    for x in 1..=x_max {
        let x2 = x as i128 * x as i128;
        // p = (3 + sqrt(9 + 4x^2)) / 2
        let disc = 9 + 4 * x2;
        let root = disc.sqrt();
        if root * root != disc || (3 + root) % 2 != 0 {
            continue;
        }
        let p = (3 + root) / 2;
        if p < 4 {
            continue;
        }
        let sol = CY4Solution::new(p as i64, (22 * x2) as i64, x, 2 * x, x);
        if sol.satisfies_system() {
            out.push(sol);
        }
    }
    Ok(out)
}

/// True iff `poly` has degree exactly `d` and no `n^(d-1)` term.
pub fn cy_coefficient_check(poly: &RatPoly, d: usize) -> bool {
    d >= 1 && poly.degree() == Some(d) && num_traits::Zero::is_zero(&poly.coeff(d - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{blownup_plane, elliptic_curve, enriques_fm, k3_polarized};
    use crate::ratpoly::int;

    fn range(b: &[(&str, i64, i64)]) -> ParamRange {
        ParamRange::new(b).unwrap()
    }

    #[test]
    fn param_range_validation() {
        assert!(matches!(
            ParamRange::new(&[("m", 3, 2)]),
            Err(Error::InvalidRange { .. })
        ));
        assert!(ParamRange::new(&[("m", 1, 2), ("m", 1, 2)]).is_err());
        assert_eq!(range(&[("p", 3, 4), ("k", 8, 9)]).volume(), 4);
    }

    #[test]
    fn box_iter_is_lexicographic() {
        let all: Vec<_> = BoxIter::new(vec![(0, 1), (5, 6)]).collect();
        assert_eq!(all, vec![vec![0, 5], vec![0, 6], vec![1, 5], vec![1, 6]]);
        assert_eq!(BoxIter::new(vec![]).count(), 1);
    }

    #[test]
    fn enumerate_blownup_box() {
        let got =
            enumerate_family(FamilyTag::BlownUpPlane, &range(&[("p", 3, 4), ("k", 8, 9)])).unwrap();
        let params: Vec<_> = got.iter().map(|(d, _)| d.param_values()).collect();
        // p = 3 admits only k = 8
        assert_eq!(params, vec![vec![3, 8], vec![4, 8], vec![4, 9]]);
        for (d, poly) in &got {
            let (p, k) = (d.param_values()[0], d.param_values()[1]);
            assert!(p * p > k);
            assert_eq!(poly, &blownup_plane(p, k).unwrap().1);
        }
    }

    #[test]
    fn enumerate_k3_and_empty() {
        let got = enumerate_family(FamilyTag::K3, &range(&[("r", 1, 3)])).unwrap();
        let polys: Vec<_> = got.into_iter().map(|(_, p)| p).collect();
        assert_eq!(
            polys,
            vec![
                RatPoly::from_ints(&[2, 0, 1]),
                RatPoly::from_ints(&[2, 0, 2]),
                RatPoly::from_ints(&[2, 0, 3])
            ]
        );
        assert!(
            enumerate_family(FamilyTag::EnriquesFm, &range(&[("m", 0, 0)]))
                .unwrap()
                .is_empty()
        );
        assert!(matches!(
            enumerate_family(FamilyTag::Product, &range(&[])),
            Err(Error::UnsupportedFamily(FamilyTag::Product))
        ));
        assert!(matches!(
            enumerate_family(FamilyTag::K3, &range(&[("m", 1, 1)])),
            Err(Error::BadParams { .. })
        ));
    }

    #[test]
    fn lazy_stream_matches_parallel_collect() {
        let m = Matcher::default();
        let r = range(&[("p", 3, 9), ("k", 1, 70)]);
        let lazy: Vec<_> = m
            .enumerate_family(FamilyTag::BlownUpPlane, &r)
            .unwrap()
            .collect::<Result<_>>()
            .unwrap();
        assert_eq!(lazy, m.collect_family(FamilyTag::BlownUpPlane, &r).unwrap());
    }

    #[test]
    fn enriques_rational_match_found() {
        let matches = find_matches(
            (FamilyTag::EnriquesFm, &range(&[("m", 1, 10)])),
            (
                FamilyTag::BlownUpPlane,
                &range(&[("p", 3, 6), ("k", 1, 35)]),
            ),
        )
        .unwrap();
        let hit = matches
            .iter()
            .find(|m| m.left.param("m") == Some(2) && m.right.param_values() == vec![4, 12])
            .expect("m=2 <-> (4,12)");
        assert_eq!(hit.polynomial, RatPoly::from_ints(&[1, 0, 2]));
        assert_eq!(hit.interpretation, INTERPRETATION);
        for m in &matches {
            assert_eq!(m.left.family, FamilyTag::EnriquesFm);
            assert_eq!(m.right.family, FamilyTag::BlownUpPlane);
        }
        let keys: Vec<_> = matches
            .iter()
            .map(|m| (m.left.flat_params(), m.right.flat_params()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn chi_o_mismatch_gives_nothing() {
        let none = find_matches(
            (FamilyTag::K3, &range(&[("r", 1, 2)])),
            (FamilyTag::EnriquesFm, &range(&[("m", 1, 2)])),
        )
        .unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn cy3_matches_product_side() {
        let m = Matcher::default();
        let got = m
            .match_sides(
                &Side::Family(FamilyTag::CY3FiberProduct, range(&[("m", 3, 10)])),
                &Side::Product(vec![
                    (
                        FamilyTag::BlownUpPlane,
                        range(&[("p", 4, 4), ("k", 12, 12)]),
                    ),
                    (FamilyTag::EllipticCurve, range(&[("deg", 2, 2)])),
                ]),
            )
            .unwrap();
        assert!(got
            .iter()
            .any(|r| r.left.param("m") == Some(5) && r.right.flat_params() == vec![4, 12, 2]));
    }

    #[test]
    fn compose_examples() {
        let got = compose_and_match(
            &[
                (FamilyTag::K3, range(&[("r", 80, 90)])),
                (
                    FamilyTag::BlownUpPlane,
                    range(&[("p", 4, 4), ("k", 12, 12)]),
                ),
            ],
            &[(
                FamilyTag::HypersurfaceW,
                range(&[("x", 1, 3), ("y", 1, 5), ("z", 1, 3)]),
            )],
        )
        .unwrap();
        let hit = got
            .iter()
            .find(|m| {
                m.left.flat_params() == vec![88, 4, 12] && m.right.flat_params() == vec![2, 4, 2]
            })
            .expect("T <-> W at r = 88");
        assert_eq!(hit.polynomial, RatPoly::from_ints(&[2, 0, 92, 0, 176]));

        let one = compose_and_match(
            &[
                (FamilyTag::EnriquesFm, range(&[("m", 2, 2)])),
                (FamilyTag::EllipticCurve, range(&[("deg", 2, 2)])),
            ],
            &[
                (
                    FamilyTag::BlownUpPlane,
                    range(&[("p", 4, 4), ("k", 12, 12)]),
                ),
                (FamilyTag::EllipticCurve, range(&[("deg", 2, 2)])),
            ],
        )
        .unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].polynomial, RatPoly::from_ints(&[0, 2, 0, 4]));

        let none = compose_and_match(
            &[(FamilyTag::K3, range(&[("r", 1, 1)]))],
            &[(FamilyTag::K3, range(&[("r", 2, 2)]))],
        )
        .unwrap();
        assert!(none.is_empty());
        assert_eq!(
            compose_and_match(&[], &[(FamilyTag::K3, range(&[("r", 1, 1)]))]).unwrap_err(),
            Error::EmptyProduct
        );
    }

    #[test]
    fn match_record_json_round_trip() {
        let left = enriques_fm(2).unwrap();
        let right = product_family(vec![
            blownup_plane(4, 12).unwrap(),
            elliptic_curve(2).unwrap(),
        ])
        .unwrap();
        let rec = MatchRecord {
            left: left.0,
            right: right.0,
            polynomial: left.1,
            interpretation: INTERPRETATION.into(),
        };
        let v = rec.to_json();
        assert_eq!(v["polynomial"], "1,0,2");
        assert_eq!(MatchRecord::from_json(&v).unwrap(), rec);
        assert!(MatchRecord::from_json(&serde_json::json!({"left": 1})).is_err());
    }

    #[test]
    fn cy4_system_examples() {
        let sols = solve_cy4_system(10, 100, 5).unwrap();
        assert!(sols.contains(&CY4Solution::new(4, 88, 2, 4, 2)));
        assert!(sols.iter().all(CY4Solution::satisfies_system));
        let slice: Vec<_> = solve_cy4_system(10, 200, 4)
            .unwrap()
            .into_iter()
            .filter(|s| s.y == 2 * s.x && s.z == s.x)
            .collect();
        assert_eq!(slice, vec![CY4Solution::new(4, 88, 2, 4, 2)]);
        assert!(solve_cy4_system(4, 1, 1).unwrap().is_empty());
        assert!(solve_cy4_system(3, 100, 5).unwrap().is_empty());
        assert!(matches!(
            solve_cy4_system(0, 1, 1),
            Err(Error::InvalidBound { .. })
        ));
    }

    #[test]
    fn cy4_reduced_examples() {
        assert_eq!(
            solve_cy4_reduced(2).unwrap(),
            vec![CY4Solution::new(4, 88, 2, 4, 2)]
        );
        assert!(solve_cy4_reduced(1).unwrap().is_empty());
        assert!(solve_cy4_reduced(0).is_err());
        let full = solve_cy4_system(40, 22 * 100, 20).unwrap();
        for s in solve_cy4_reduced(10).unwrap() {
            assert!(full.contains(&s), "{s:?}");
        }
    }

    #[test]
    fn solution_json_shape() {
        let js = serde_json::to_string(&CY4Solution::new(4, 88, 2, 4, 2)).unwrap();
        assert_eq!(js, r#"{"p":4,"r":88,"x":2,"y":4,"z":2}"#);
    }

    #[test]
    fn satisfies_system_rejects() {
        assert!(CY4Solution::new(4, 88, 2, 4, 2).satisfies_system());
        assert!(CY4Solution::new(4, 88, 4, 2, 2).satisfies_system());
        assert!(!CY4Solution::new(4, 87, 2, 4, 2).satisfies_system());
        assert!(!CY4Solution::new(3, 88, 2, 4, 2).satisfies_system());
    }

    #[test]
    fn coefficient_predicate_examples() {
        assert!(cy_coefficient_check(&RatPoly::from_ints(&[0, 2, 0, 4]), 3));
        assert!(cy_coefficient_check(&RatPoly::from_ints(&[1, 0, 2]), 2));
        assert!(!cy_coefficient_check(&RatPoly::from_ints(&[1, 1, 1]), 2));
        assert!(!cy_coefficient_check(&RatPoly::from_ints(&[0, 2, 0, 4]), 4));
        assert!(!cy_coefficient_check(&RatPoly::one(), 0));
        assert_eq!(k3_polarized(5).unwrap().1.coeff(1), int(0));
    }
}
