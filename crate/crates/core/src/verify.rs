//! Regression suite over the published identities, run by `cyflat verify-paper`.

use serde::Serialize;

use crate::catalog::{product_family, FamilyTag, HypersurfaceW, Registry};
use crate::lifting::{cy3_pair, cy4_pair, lift_cy3_pair};
use crate::matcher::{cy_coefficient_check, solve_cy4_system, CY4Solution, Matcher};
use crate::ratpoly::RatPoly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn build(reg: &Registry, tag: FamilyTag, params: &[i64]) -> Result<RatPoly, String> {
    reg.by_tag(tag)
        .and_then(|k| k.build(params))
        .map(|(_, p)| p)
        .map_err(|e| e.to_string())
}

/// Blown-up plane with k = 3p against the Enriques surface with m = p(p-3)/2.
fn enriques_rational(reg: &Registry) -> Outcome {
    for p in 4..=12 {
        let m = p * (p - 3) / 2;
        let rational = build(reg, FamilyTag::BlownUpPlane, &[p, 3 * p])?;
        let enriques = build(reg, FamilyTag::EnriquesFm, &[m])?;
        let expected = RatPoly::from_ints(&[1, 0, m]);
        ensure(rational == expected && enriques == expected, || {
            format!("p={p}: rational {rational}, Enriques {enriques}, expected {expected}")
        })?;
    }
    Ok("p = 4..12, (p(p-3)/2)n^2 + 1 on both sides".into())
}

fn cy3_counterexample(reg: &Registry) -> Outcome {
    for p in 4..=12 {
        let pair = cy3_pair(reg, p).map_err(|e| e.to_string())?;
        ensure(pair.polynomials_agree(), || {
            format!("p={p}: {} vs {}", pair.calabi_yau.1, pair.other.1)
        })?;
        if p == 4 {
            let expected = RatPoly::from_ints(&[0, 2, 0, 4]);
            ensure(pair.calabi_yau.1 == expected, || {
                format!("p=4 gave {}", pair.calabi_yau.1)
            })?;
        }
    }
    Ok("p = 4..12, m = p(p-3)+1; 4n^3 + 2n at p = 4".into())
}

fn cy4_counterexample(reg: &Registry) -> Outcome {
    let target = CY4Solution::new(4, 88, 2, 4, 2);
    let pair = cy4_pair(reg, &target).map_err(|e| e.to_string())?;
    let expected = RatPoly::from_ints(&[2, 0, 92, 0, 176]);
    ensure(
        pair.calabi_yau.1 == expected && pair.other.1 == expected,
        || {
            format!(
                "W(2,4,2) = {}, S x S_12 = {}",
                pair.calabi_yau.1, pair.other.1
            )
        },
    )?;
    let sols = solve_cy4_system(10, 100, 5).map_err(|e| e.to_string())?;
    ensure(sols.contains(&target), || {
        format!("scan missed {target:?}: {sols:?}")
    })?;
    // x and y enter symmetrically (swapping the two P^2 factors)
    ensure(
        sols.iter().all(|s| *s == target || s.swapped() == target),
        || format!("unexpected solutions in box: {sols:?}"),
    )?;
    Ok(format!("176n^4 + 92n^2 + 2; box p<=10, r<=100, x,y,z<=5 has {} solution(s), all (4,88,2,4,2) up to x<->y", sols.len()))
}

fn hypersurface_dual_path(reg: &Registry) -> Outcome {
    let kind = reg
        .by_tag(FamilyTag::HypersurfaceW)
        .map_err(|e| e.to_string())?;
    let mut count = 0;
    for x in 1..=20 {
        for y in 1..=20 {
            for z in 1..=20 {
                let exact =
                    HypersurfaceW::via_exact_sequence(x, y, z).map_err(|e| e.to_string())?;
                let closed = HypersurfaceW::closed_form(x, y, z);
                ensure(exact == closed, || {
                    format!("({x},{y},{z}): {exact} vs {closed}")
                })?;
                let built = kind.build(&[x, y, z]).map_err(|e| e.to_string())?.1;
                ensure(built == closed, || {
                    format!("catalog ({x},{y},{z}) gave {built}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} exact comparisons"))
}

fn higher_dimensional_lifts(reg: &Registry) -> Outcome {
    for d in 5..=8 {
        for p in 4..=8 {
            for r in [1, 88] {
                let pair = lift_cy3_pair(reg, d, p, r).map_err(|e| e.to_string())?;
                ensure(pair.polynomials_agree(), || {
                    format!(
                        "d={d} p={p} r={r}: {} vs {}",
                        pair.calabi_yau.1, pair.other.1
                    )
                })?;
                ensure(pair.calabi_yau.1.degree() == Some(d as usize), || {
                    format!(
                        "d={d}: lifted polynomial has degree {:?}",
                        pair.calabi_yau.1.degree()
                    )
                })?;
            }
        }
    }
    Ok("d = 5..8, p = 4..8, r in {1, 88}".into())
}

fn vanishing_subleading(reg: &Registry) -> Outcome {
    let matcher = Matcher::new(reg.clone());
    let mut count = 0;
    for (tag, d) in [
        (FamilyTag::CY3FiberProduct, 3),
        (FamilyTag::HypersurfaceW, 4),
    ] {
        let range = reg.by_tag(tag).map_err(|e| e.to_string())?.default_range();
        for (desc, poly) in matcher
            .collect_family(tag, &range)
            .map_err(|e| e.to_string())?
        {
            ensure(cy_coefficient_check(&poly, d), || {
                format!("{}: {poly}", desc.label())
            })?;
            count += 1;
        }
    }
    // lifted Calabi–Yau products inherit it
    for d in 5..=8 {
        let pair = lift_cy3_pair(reg, d, 4, 88).map_err(|e| e.to_string())?;
        ensure(cy_coefficient_check(&pair.calabi_yau.1, d as usize), || {
            format!("lifted d={d}: {}", pair.calabi_yau.1)
        })?;
        count += 1;
    }
    let enriques = product_family(vec![reg
        .by_tag(FamilyTag::EnriquesFm)
        .and_then(|k| k.build(&[2]))
        .map_err(|e| e.to_string())?])
    .map_err(|e| e.to_string())?;
    ensure(cy_coefficient_check(&enriques.1, 2), || {
        format!("Enriques: {}", enriques.1)
    })?;
    Ok(format!(
        "{count} Calabi–Yau polynomials without an n^(d-1) term"
    ))
}

type CheckFn = fn(&Registry) -> Outcome;

pub const CHECKS: [(&str, CheckFn); 6] = [
    ("enriques-rational-match", enriques_rational),
    ("cy3-counterexample", cy3_counterexample),
    ("cy4-counterexample", cy4_counterexample),
    ("hypersurface-dual-path", hypersurface_dual_path),
    ("higher-dimensional-lifts", higher_dimensional_lifts),
    ("vanishing-subleading-coefficient", vanishing_subleading),
];

pub fn run(reg: &Registry) -> Report {
    let checks = CHECKS
        .iter()
        .map(|&(name, f)| match f(reg) {
            Ok(detail) => Check {
                name,
                pass: true,
                detail,
            },
            Err(detail) => Check {
                name,
                pass: false,
                detail,
            },
        })
        .collect();
    Report { checks }
}
