//! Independent oracles shared by the integration suites.

#![allow(dead_code)]

use std::collections::HashMap;

use cyflat::{CY4Solution, FamilyDescriptor, RatPoly};

/// Number of monomials of total degree `degree` in `vars` variables, by
/// recursion on the exponent of the first variable.
pub fn count_monomials(vars: u32, degree: u32, memo: &mut HashMap<(u32, u32), u128>) -> u128 {
    if vars == 0 {
        return u128::from(degree == 0);
    }
    if let Some(&v) = memo.get(&(vars, degree)) {
        return v;
    }
    let total = (0..=degree)
        .map(|first| count_monomials(vars - 1, degree - first, memo))
        .sum();
    memo.insert((vars, degree), total);
    total
}

/// `h^0(P^{d_1} x ... x P^{d_s}, O(t_1, ..., t_s))` for nonnegative twists:
/// multihomogeneous monomials of the given multidegree.
pub fn count_multi_monomials(dims: &[u32], twists: &[u32]) -> u128 {
    let mut memo = HashMap::new();
    dims.iter()
        .zip(twists)
        .map(|(&d, &t)| count_monomials(d + 1, t, &mut memo))
        .product()
}

/// All-pairs comparison by polynomial equality, no hashing.
pub fn naive_matches(
    left: &[(FamilyDescriptor, RatPoly)],
    right: &[(FamilyDescriptor, RatPoly)],
) -> Vec<(FamilyDescriptor, FamilyDescriptor, RatPoly)> {
    let mut out = Vec::new();
    for (ld, lp) in left {
        for (rd, rp) in right {
            if lp == rp {
                out.push((ld.clone(), rd.clone(), lp.clone()));
            }
        }
    }
    out.sort_by_key(|(l, r, _)| (l.flat_params(), r.flat_params()));
    out
}

/// Plain five-fold scan of the fourfold system, loops nested z, y, x, r, p.
pub fn naive_cy4_scan(p_max: i64, r_max: i64, xyz_max: i64) -> Vec<CY4Solution> {
    let mut out = Vec::new();
    for z in 1..=xyz_max {
        for y in 1..=xyz_max {
            for x in 1..=xyz_max {
                for r in 1..=r_max {
                    for p in 4..=p_max {
                        let q = p * p - 3 * p;
                        let lhs1 = q * r;
                        let rhs1 = 3 * x * y * (x + y) * z + x * x * y * y;
                        let twice = 6 * (x + y) * z + 2 * x * x + 9 * x * y + 2 * y * y;
                        if lhs1 == rhs1 && 2 * (q + r) == twice {
                            out.push(CY4Solution::new(p, r, x, y, z));
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}
