mod common;

use std::collections::HashSet;

use cyflat::catalog::{
    blownup_plane, cy3_fiber_product, enriques_fm, hypersurface_W, k3_polarized, product_family,
    HypersurfaceW,
};
use cyflat::lifting::cy4_pair;
use cyflat::matcher::{enumerate_family, solve_cy4_reduced, solve_cy4_system};
use cyflat::ratpoly::{int, proj_space_chi};
use cyflat::{FamilyTag, LinearTwist, Matcher, ParamRange, Registry, Side};
use proptest::prelude::*;

#[test]
fn cy4_scan_matches_naive_nesting() {
    for (p, r, xyz) in [(10, 100, 5), (12, 300, 6), (6, 50, 3), (4, 1, 1)] {
        let fast = solve_cy4_system(p, r, xyz).unwrap();
        let naive = common::naive_cy4_scan(p, r, xyz);
        assert_eq!(
            fast.iter().collect::<HashSet<_>>(),
            naive.iter().collect::<HashSet<_>>(),
            "box ({p},{r},{xyz})"
        );
        assert_eq!(fast, naive);
    }
}

#[test]
fn reduced_slice_is_unique_in_box() {
    // y = 2x, z = x inside the full box, compared with the reduced solver
    let slice: Vec<_> = common::naive_cy4_scan(10, 200, 4)
        .into_iter()
        .filter(|s| s.y == 2 * s.x && s.z == s.x)
        .collect();
    assert_eq!(slice, solve_cy4_reduced(4).unwrap());
    assert_eq!(slice.len(), 1);
}

#[test]
fn every_solution_gives_matching_polynomials() {
    let reg = Registry::builtin();
    for sol in solve_cy4_system(20, 2000, 12).unwrap() {
        let pair = cy4_pair(&reg, &sol).unwrap();
        assert!(pair.polynomials_agree(), "{sol:?}");
    }
}

#[test]
fn match_records_recompute_from_descriptors() {
    let reg = Registry::builtin();
    let m = Matcher::new(reg.clone());
    let left = Side::Product(vec![
        (FamilyTag::K3, ParamRange::new(&[("r", 1, 100)]).unwrap()),
        (
            FamilyTag::BlownUpPlane,
            ParamRange::new(&[("p", 4, 6), ("k", 12, 18)]).unwrap(),
        ),
    ]);
    let right = Side::Family(
        FamilyTag::HypersurfaceW,
        ParamRange::new(&[("x", 1, 4), ("y", 1, 4), ("z", 1, 4)]).unwrap(),
    );
    let records = m.match_sides(&left, &right).unwrap();
    assert!(!records.is_empty());
    for rec in &records {
        assert_eq!(reg.polynomial_of(&rec.left).unwrap(), rec.polynomial);
        assert_eq!(reg.polynomial_of(&rec.right).unwrap(), rec.polynomial);
        assert!(rec.left.label().starts_with("product["));
    }
}

#[test]
fn bucketed_keys_collide_only_on_equal_polynomials() {
    let reg = Registry::builtin();
    let m = Matcher::new(reg.clone());
    let mut all = Vec::new();
    for kind in reg.kinds() {
        all.extend(m.collect_family(kind.tag(), &kind.default_range()).unwrap());
    }
    let mut by_key = std::collections::HashMap::new();
    for (_, p) in &all {
        if let Some(prev) = by_key.insert(p.key(), p.clone()) {
            assert_eq!(&prev, p);
        }
    }
}

#[test]
fn hypersurface_symmetric_in_the_two_planes() {
    for x in 1..=6 {
        for y in 1..=6 {
            for z in 1..=3 {
                assert_eq!(
                    hypersurface_W(x, y, z).unwrap().1,
                    hypersurface_W(y, x, z).unwrap().1
                );
            }
        }
    }
}

#[test]
fn enumeration_is_exactly_the_guard_set() {
    let got = enumerate_family(
        FamilyTag::BlownUpPlane,
        &ParamRange::new(&[("p", 0, 7), ("k", -3, 60)]).unwrap(),
    )
    .unwrap();
    let expected: Vec<Vec<i64>> = (0..=7)
        .flat_map(|p| (-3..=60).map(move |k| vec![p, k]))
        .filter(|v| v[0] > 2 && v[1] > 0 && v[0] * v[0] > v[1])
        .collect();
    let params: Vec<_> = got.iter().map(|(d, _)| d.param_values()).collect();
    assert_eq!(params, expected);
}

proptest! {
    #[test]
    fn blownup_agrees_with_intersection_numbers(p in 3i64..60, k_frac in 0.0f64..1.0) {
        let k = 1 + ((p * p - 2) as f64 * k_frac) as i64;
        let got = blownup_plane(p, k).unwrap().1;
        // (l^2) = p^2 - k, (l.K) = -3p + k, chi = 1
        let expected = cyflat::catalog::hilbert_surface(cyflat::catalog::SurfaceRRData {
            l2: p * p - k,
            lk: -3 * p + k,
            chi_o: 1,
        });
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn kunneth_coherence(r in 1i64..200, p in 4i64..20, m in 3i64..50, n in -20i64..20) {
        let children = vec![k3_polarized(r).unwrap(), blownup_plane(p, 3 * p).unwrap(), cy3_fiber_product(m).unwrap()];
        let product_of_values = children.iter().map(|(_, q)| q.eval_int(n)).fold(int(1), |a, b| a * b);
        let (desc, poly) = product_family(children).unwrap();
        prop_assert_eq!(poly.eval_int(n), product_of_values);
        prop_assert_eq!(desc.children.len(), 3);
    }

    #[test]
    fn chi_o_is_constant_term(r in 1i64..500, m in 1i64..500, x in 1i64..15, y in 1i64..15, z in 1i64..15) {
        prop_assert_eq!(k3_polarized(r).unwrap().1.coeff(0), int(2));
        prop_assert_eq!(enriques_fm(m).unwrap().1.coeff(0), int(1));
        prop_assert_eq!(hypersurface_W(x, y, z).unwrap().1.coeff(0), int(2));
    }

    #[test]
    fn hypersurface_routes_agree_beyond_twenty(x in 1i64..400, y in 1i64..400, z in 1i64..400) {
        prop_assert_eq!(HypersurfaceW::via_exact_sequence(x, y, z).unwrap(), HypersurfaceW::closed_form(x, y, z));
    }

    #[test]
    fn proj_chi_counts_monomials(dim in 0u32..=5, slope in 0i64..=4, intercept in 0i64..=20, n in 0i64..=5) {
        let t = slope * n + intercept;
        let chi = proj_space_chi(dim as i64, LinearTwist::new(slope, intercept)).unwrap();
        let count = common::count_multi_monomials(&[dim], &[t as u32]);
        prop_assert_eq!(chi.eval_int(n), cyflat::Rational::from_integer(count.into()));
    }
}
