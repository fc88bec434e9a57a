//! Triangle identities, written in the signed compact notation.
//!
//! Every evaluator receives an index ordering (i, j, k) of the three signed
//! sides/angles and returns the two sides of one equality.  Most identities
//! hold for all six orderings and are checked on all of them.

use super::context::{radical, Ctx};
use super::{Degeneracy, Family, IdentityRecord};
use crate::error::Result;

type PairFn = fn(&Ctx, usize, usize, usize) -> Result<(f64, f64)>;

const ALL: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn all() -> Vec<[usize; 3]> {
    ALL.to_vec()
}

fn rest(i: usize, j: usize) -> usize {
    3 - i - j
}

/// Orderings with the first index fixed.
fn first(i: usize) -> Vec<[usize; 3]> {
    ALL.iter().copied().filter(|o| o[0] == i).collect()
}

/// Orderings with the first two indices fixed as a set.
fn pair_of(i: usize, j: usize) -> Vec<[usize; 3]> {
    vec![[i, j, rest(i, j)], [j, i, rest(i, j)]]
}

struct Builder {
    out: Vec<IdentityRecord>,
}

impl Builder {
    /// Two records that are each other's dual, both written out.
    #[allow(clippy::too_many_arguments)]
    fn dual_pair(
        &mut self,
        ids: (&str, &str),
        family: Family,
        description: &str,
        degenerate: Degeneracy,
        orders: Vec<[usize; 3]>,
        f: PairFn,
        g: PairFn,
    ) {
        let d = degenerate.dual();
        self.out
            .push(IdentityRecord::triangle(ids.0, family, description, degenerate, orders.clone(), f, false, Some(ids.1)));
        self.out.push(IdentityRecord::triangle(ids.1, family, description, d, orders, g, false, Some(ids.0)));
    }

    /// A record together with its dual, evaluated on the dual data.
    fn with_dual(&mut self, id: &str, family: Family, description: &str, degenerate: Degeneracy, orders: Vec<[usize; 3]>, f: PairFn) {
        let dual_id = format!("{id}_dual");
        self.out.push(IdentityRecord::triangle(
            id,
            family,
            description,
            degenerate,
            orders.clone(),
            f,
            false,
            Some(&dual_id),
        ));
        self.out.push(IdentityRecord::triangle(
            &dual_id,
            family,
            &format!("dual of {description}"),
            degenerate.dual(),
            orders,
            f,
            true,
            Some(id),
        ));
    }

    /// A self-dual record.
    fn self_dual(&mut self, id: &str, family: Family, description: &str, degenerate: Degeneracy, orders: Vec<[usize; 3]>, f: PairFn) {
        self.out.push(IdentityRecord::triangle(id, family, description, degenerate, orders, f, false, Some(id)));
    }
}

const SIDE: [&str; 3] = ["a", "b", "c"];
const ANGLE: [&str; 3] = ["A", "B", "C"];

pub(super) fn triangle_records() -> Vec<IdentityRecord> {
    use Degeneracy::*;
    use Family::*;
    let mut b = Builder { out: Vec::new() };

    // cosine theorems and their versine forms, one record per side
    for i in 0..3 {
        let (s, a) = (SIDE[i], ANGLE[i]);
        b.dual_pair(
            (&format!("cosine_{s}"), &format!("cosine_{a}")),
            Cosine,
            "cosine theorem",
            K1Zero,
            first(i),
            |c, i, j, k| {
                Ok((c.c1(c.x[i]), c.c1(c.x[j]) * c.c1(c.x[k]) - c.k1 * c.s1(c.x[j]) * c.s1(c.x[k]) * c.c2(c.X[i])))
            },
            |c, i, j, k| {
                Ok((c.c2(c.X[i]), c.c2(c.X[j]) * c.c2(c.X[k]) - c.k2 * c.s2(c.X[j]) * c.s2(c.X[k]) * c.c1(c.x[i])))
            },
        );
        b.dual_pair(
            (&format!("versine_{s}"), &format!("versine_{a}")),
            Cosine,
            "cosine theorem in versine form",
            Never,
            first(i),
            |c, i, j, k| {
                Ok((c.v1(c.x[i]) - c.v1(c.x[j] + c.x[k]), -c.k2 * c.s1(c.x[j]) * c.s1(c.x[k]) * c.v2(c.X[i])))
            },
            |c, i, j, k| {
                Ok((c.v2(c.X[i]) - c.v2(c.X[j] + c.X[k]), -c.k1 * c.s2(c.X[j]) * c.s2(c.X[k]) * c.v1(c.x[i])))
            },
        );
        b.dual_pair(
            (&format!("half_sum_{s}"), &format!("half_sum_{a}")),
            Cosine,
            "cosine theorem in excess form",
            K2Zero,
            first(i),
            |c, i, j, k| {
                Ok((2.0 * c.s1(c.e) * c.s1(c.ei[i]), -c.k2 * c.s1(c.x[j]) * c.s1(c.x[k]) * c.v2(c.X[i])))
            },
            |c, i, j, k| {
                Ok((2.0 * c.s2(c.E) * c.s2(c.EI[i]), -c.k1 * c.s2(c.X[j]) * c.s2(c.X[k]) * c.v1(c.x[i])))
            },
        );
    }
    // the angle forms belong to the dual family
    for r in b.out.iter_mut() {
        if r.id.ends_with(['A', 'B', 'C']) {
            r.family = DualCosine;
        }
    }

    b.self_dual("sine_theorem", Sine, "sine theorem", Never, all(), |c, i, j, _| {
        Ok((c.s1(c.x[i]) * c.s2(c.X[j]), c.s1(c.x[j]) * c.s2(c.X[i])))
    });

    // projection relations: side i against angle j, and the duals
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let k = rest(i, j);
            b.dual_pair(
                (&format!("projection_{}_{}", SIDE[i], ANGLE[j]), &format!("projection_{}_{}", ANGLE[i], SIDE[j])),
                Projection,
                "projection relation",
                Never,
                vec![[i, j, k]],
                |c, i, j, k| {
                    Ok((
                        c.s1(c.x[i]) * c.c2(c.X[j]),
                        -c.c1(c.x[j]) * c.s1(c.x[k]) - c.s1(c.x[j]) * c.c1(c.x[k]) * c.c2(c.X[i]),
                    ))
                },
                |c, i, j, k| {
                    Ok((
                        c.s2(c.X[i]) * c.c1(c.x[j]),
                        -c.c2(c.X[j]) * c.s2(c.X[k]) - c.s2(c.X[j]) * c.c2(c.X[k]) * c.c1(c.x[i]),
                    ))
                },
            );
        }
    }

    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        b.self_dual(
            &format!("selfdual_{}{}", ANGLE[i], ANGLE[j]),
            Selfdual4,
            "self-dual four-part relation",
            Never,
            pair_of(i, j),
            |c, i, j, k| {
                Ok((
                    c.k2 * c.s2(c.X[i]) * c.s2(c.X[j]) - c.c2(c.X[i]) * c.c2(c.X[j]) * c.c1(c.x[k]),
                    c.k1 * c.s1(c.x[i]) * c.s1(c.x[j]) - c.c1(c.x[i]) * c.c1(c.x[j]) * c.c2(c.X[k]),
                ))
            },
        );
    }

    // minimal forms
    b.dual_pair(
        ("minimal_1i", "minimal_1I"),
        Minimal,
        "minimal form of the cosine theorem",
        Never,
        all(),
        |c, i, j, k| Ok((c.sc(0.5) * c.s1(c.ei[i]), -c.s1(c.x[j]) * c.s1(c.x[k]) * c.s2(0.5 * c.X[i]).powi(2))),
        |c, i, j, k| Ok((c.sa(0.5) * c.s2(c.EI[i]), -c.s2(c.X[j]) * c.s2(c.X[k]) * c.s1(0.5 * c.x[i]).powi(2))),
    );

    // area and coarea definitions
    b.with_dual("area_cosine", AreaCatalog, "cosine of the area", AnyZero, vec![[0, 1, 2]], |c, _, _, _| {
        Ok((c.ca(1.0), c.c2(2.0 * c.E)))
    });
    b.with_dual("area_sine", AreaCatalog, "sine of the area", K1Zero, vec![[0, 1, 2]], |c, _, _, _| {
        Ok((c.k1 * c.sa(1.0), c.s2(2.0 * c.E)))
    });
    b.with_dual("area_half_sine", AreaCatalog, "sine of the half area", K1Zero, vec![[0, 1, 2]], |c, _, _, _| {
        Ok((c.k1 * c.sa(0.5), c.s2(c.E)))
    });
    b.with_dual("area_quarter_tangent", AreaCatalog, "tangent of the quarter area", K1Zero, vec![[0, 1, 2]], |c, _, _, _| {
        Ok((c.k1 * c.ta(0.25)?, c.t2(0.5 * c.E)?))
    });
    b.with_dual("area_full_cosine", AreaCatalog, "cosine of the area from the sides", AnyZero, vec![[0, 1, 2]], |c, _, _, _| {
        let d2 = 8.0 * c.half_cos_prod().powi(2);
        Ok((c.ca(1.0), (c.cos_sum().powi(2) - d2) / d2))
    });
    b.with_dual("area_full_sine", AreaCatalog, "sine of the area from two sides and an angle", Never, all(), |c, i, j, k| {
        let d2 = 8.0 * c.half_cos_prod().powi(2);
        Ok((c.sa(1.0), -c.s1(c.x[i]) * c.s1(c.x[j]) * c.s2(c.X[k]) * c.cos_sum() / d2))
    });
    b.with_dual("area_quarter_cosine", AreaCatalog, "cosine of the quarter area", AnyZero, vec![[0, 1, 2]], |c, _, _, _| {
        let num = c.c1(0.5 * c.e) * c.ei.iter().map(|&v| c.c1(0.5 * v)).product::<f64>();
        Ok((c.ca(0.25).powi(2), num / c.half_cos_prod()))
    });
    b.with_dual("area_quarter_sine", AreaCatalog, "sine of the quarter area", Never, vec![[0, 1, 2]], |c, _, _, _| {
        let num = -c.sc(0.25) * c.ei.iter().map(|&v| c.s1(0.5 * v)).product::<f64>();
        Ok((c.sa(0.25).powi(2), num / c.half_cos_prod()))
    });

    // Cagnoli family
    b.with_dual("cagnoli_cosine", Cagnoli, "cosine of the half area from the sides", AnyZero, vec![[0, 1, 2]], |c, _, _, _| {
        Ok((c.ca(0.5), c.cos_sum() / (4.0 * c.half_cos_prod())))
    });
    b.with_dual("cagnoli", Cagnoli, "sine of the half area from two sides and an angle", Never, all(), |c, i, j, k| {
        Ok((c.sa(0.5), -c.s2(c.X[i]) * c.s1(c.x[j]) * c.s1(c.x[k]) / (4.0 * c.half_cos_prod())))
    });
    b.with_dual("cagnoli_half_sides", Cagnoli, "sine of the half area from half sides", Never, all(), |c, i, j, k| {
        Ok((c.sa(0.5), -c.s2(c.X[i]) * c.s1(0.5 * c.x[j]) * c.s1(0.5 * c.x[k]) / c.c1(0.5 * c.x[i])))
    });
    b.with_dual("cagnoli_radical", Cagnoli, "sine of the half area from the sides", Never, vec![[0, 1, 2]], |c, _, _, _| {
        Ok((c.sa(0.5), radical(c.side_radicand()) / (2.0 * c.half_cos_prod())))
    });
    b.with_dual("cagnoli_tangent", Cagnoli, "tangent of the half area", Never, all(), |c, i, j, k| {
        Ok((c.ta(0.5)?, -c.s2(c.X[i]) * c.s1(c.x[j]) * c.s1(c.x[k]) / c.cos_sum()))
    });
    b.with_dual("cagnoli_tangent_radical", Cagnoli, "tangent of the half area from the sides", Never, vec![[0, 1, 2]], |c, _, _, _| {
        Ok((c.ta(0.5)?, 2.0 * radical(c.side_radicand()) / c.cos_sum()))
    });
    b.with_dual("cagnoli_tangent_half_sides", Cagnoli, "tangent of the half area from half-side tangents", Never, all(), |c, i, j, k| {
        let (tj, tk) = (c.t1(0.5 * c.x[j])?, c.t1(0.5 * c.x[k])?);
        Ok((c.ta(0.5)?, -c.s2(c.X[i]) * tj * tk / (1.0 - c.k1 * c.c2(c.X[i]) * tj * tk)))
    });

    // Euler half-angle set
    b.dual_pair(
        ("euler_sine", "euler_side_sine"),
        Euler,
        "half-angle sine from the sides",
        Never,
        all(),
        |c, i, j, k| Ok((c.s2(0.5 * c.X[i]).powi(2), -c.sc(0.5) * c.s1(c.ei[i]) / (c.s1(c.x[j]) * c.s1(c.x[k])))),
        |c, i, j, k| Ok((c.s1(0.5 * c.x[i]).powi(2), -c.sa(0.5) * c.s2(c.EI[i]) / (c.s2(c.X[j]) * c.s2(c.X[k])))),
    );
    b.dual_pair(
        ("euler_cosine", "euler_side_cosine"),
        Euler,
        "half-angle cosine from the sides",
        K2Zero,
        all(),
        |c, i, j, k| Ok((c.c2(0.5 * c.X[i]).powi(2), c.s1(c.ei[j]) * c.s1(c.ei[k]) / (c.s1(c.x[j]) * c.s1(c.x[k])))),
        |c, i, j, k| Ok((c.c1(0.5 * c.x[i]).powi(2), c.s2(c.EI[j]) * c.s2(c.EI[k]) / (c.s2(c.X[j]) * c.s2(c.X[k])))),
    );
    b.dual_pair(
        ("euler_tangent", "euler_side_tangent"),
        Euler,
        "half-angle tangent from the sides",
        Never,
        all(),
        |c, i, j, k| Ok((c.t2(0.5 * c.X[i])?.powi(2), -c.sc(0.5) * c.s1(c.ei[i]) / (c.s1(c.ei[j]) * c.s1(c.ei[k])))),
        |c, i, j, k| Ok((c.t1(0.5 * c.x[i])?.powi(2), -c.sa(0.5) * c.s2(c.EI[i]) / (c.s2(c.EI[j]) * c.s2(c.EI[k])))),
    );
    b.dual_pair(
        ("double_euler", "double_euler_side"),
        Euler,
        "angle sine from the sides",
        Never,
        all(),
        |c, i, j, k| Ok((c.s2(c.X[i]), -2.0 * radical(c.side_radicand()) / (c.s1(c.x[j]) * c.s1(c.x[k])))),
        |c, i, j, k| Ok((c.s1(c.x[i]), -2.0 * radical(c.angle_radicand()) / (c.s2(c.X[j]) * c.s2(c.X[k])))),
    );
    b.with_dual("euler_cosine_product", Euler, "product of the half-angle cosines", K2Zero, vec![[0, 1, 2]], |c, _, _, _| {
        let l = c.X.iter().map(|&v| c.c2(0.5 * v)).product::<f64>();
        let num = c.ei.iter().map(|&v| c.s1(v)).product::<f64>();
        let den = c.x.iter().map(|&v| c.s1(v)).product::<f64>();
        Ok((l, num / den))
    });
    b.with_dual("euler_sine_product", Euler, "mixed product of half-angle sines and cosine", Never, all(), |c, i, j, k| {
        let l = c.s2(0.5 * c.X[i]) * c.s2(0.5 * c.X[j]) * c.c2(0.5 * c.X[k]);
        let den = c.x.iter().map(|&v| c.s1(v)).product::<f64>();
        Ok((l, -c.s1(c.ei[i]) * c.s1(c.ei[j]) * c.sc(0.5) / den))
    });
    b.with_dual("euler_tangent_product", Euler, "product of two half-angle tangents", Never, all(), |c, i, j, k| {
        Ok((c.t2(0.5 * c.X[i])? * c.t2(0.5 * c.X[j])?, -c.sc(0.5) / c.s1(c.ei[k])))
    });
    b.with_dual("euler_tangent_ratio", Euler, "ratio of two half-angle tangents", Never, all(), |c, i, j, _| {
        Ok((c.t2(0.5 * c.X[i])? / c.t2(0.5 * c.X[j])?, c.s1(c.ei[i]) / c.s1(c.ei[j])))
    });

    // Gauss–Delambre–Mollweide analogies
    b.with_dual("delambre_sine_sum", Delambre, "analogy for the sine of a half angle sum", Never, all(), |c, i, j, k| {
        Ok((c.s2(0.5 * (c.X[i] + c.X[j])) / c.s2(0.5 * c.X[k]), -c.c1(0.5 * (c.x[i] - c.x[j])) / c.c1(0.5 * c.x[k])))
    });
    b.with_dual("delambre_cosine_sum", Delambre, "analogy for the cosine of a half angle sum", K2Zero, all(), |c, i, j, k| {
        Ok((c.c2(0.5 * (c.X[i] + c.X[j])) / c.c2(0.5 * c.X[k]), c.c1(0.5 * (c.x[i] + c.x[j])) / c.c1(0.5 * c.x[k])))
    });
    b.with_dual("delambre_sine_difference", Delambre, "analogy for the sine of a half angle difference", Never, all(), |c, i, j, k| {
        Ok((c.s2(0.5 * (c.X[i] - c.X[j])) / c.s2(0.5 * c.X[k]), c.s1(0.5 * (c.x[i] - c.x[j])) / c.s1(0.5 * c.x[k])))
    });
    b.with_dual("delambre_cosine_difference", Delambre, "analogy for the cosine of a half angle difference", K2Zero, all(), |c, i, j, k| {
        Ok((c.c2(0.5 * (c.X[i] - c.X[j])) / c.c2(0.5 * c.X[k]), -c.s1(0.5 * (c.x[i] + c.x[j])) / c.s1(0.5 * c.x[k])))
    });

    // Napier analogies
    b.dual_pair(
        ("napier_angle_sum", "napier_side_sum"),
        Napier,
        "analogy for the tangent of a half sum",
        Never,
        all(),
        |c, i, j, k| {
            Ok((
                c.t2(0.5 * (c.X[i] + c.X[j]))? / c.t2(0.5 * c.X[k])?,
                -c.c1(0.5 * (c.x[i] - c.x[j])) / c.c1(0.5 * (c.x[i] + c.x[j])),
            ))
        },
        |c, i, j, k| {
            Ok((
                c.t1(0.5 * (c.x[i] + c.x[j]))? / c.t1(0.5 * c.x[k])?,
                -c.c2(0.5 * (c.X[i] - c.X[j])) / c.c2(0.5 * (c.X[i] + c.X[j])),
            ))
        },
    );
    b.dual_pair(
        ("napier_angle_difference", "napier_side_difference"),
        Napier,
        "analogy for the tangent of a half difference",
        Never,
        all(),
        |c, i, j, k| {
            Ok((
                c.t2(0.5 * (c.X[i] - c.X[j]))? / c.t2(0.5 * c.X[k])?,
                -c.s1(0.5 * (c.x[i] - c.x[j])) / c.s1(0.5 * (c.x[i] + c.x[j])),
            ))
        },
        |c, i, j, k| {
            Ok((
                c.t1(0.5 * (c.x[i] - c.x[j]))? / c.t1(0.5 * c.x[k])?,
                -c.s2(0.5 * (c.X[i] - c.X[j])) / c.s2(0.5 * (c.X[i] + c.X[j])),
            ))
        },
    );
    b.self_dual("napier_selfdual", Napier, "self-dual tangent analogy", Never, all(), |c, i, j, _| {
        Ok((
            c.t2(0.5 * (c.X[i] + c.X[j]))? / c.t2(0.5 * (c.X[i] - c.X[j]))?,
            c.t1(0.5 * (c.x[i] + c.x[j]))? / c.t1(0.5 * (c.x[i] - c.x[j]))?,
        ))
    });

    // excess tangents and L'Huillier
    b.dual_pair(
        ("excess_tangent_area", "excess_tangent_coarea"),
        Lhuillier,
        "quarter-area tangent from the excess tangents",
        Never,
        all(),
        |c, i, j, k| Ok((c.ta(0.25)?, -c.t1(0.5 * c.ei[i])? * c.t1(0.5 * c.ei[j])? * c.t2(0.5 * c.EI[k])?)),
        |c, i, j, k| Ok((c.tc(0.25)?, -c.t2(0.5 * c.EI[i])? * c.t2(0.5 * c.EI[j])? * c.t1(0.5 * c.ei[k])?)),
    );
    b.self_dual("excess_tangent_mixed", Lhuillier, "area and coarea tangents against excess tangents", Never, all(), |c, i, _, _| {
        Ok((c.ta(0.25)? * c.t2(0.5 * c.EI[i])?, c.tc(0.25)? * c.t1(0.5 * c.ei[i])?))
    });
    b.with_dual("excess_tangent_sine_like", Lhuillier, "equal ratios of excess tangents", Never, all(), |c, i, j, _| {
        Ok((c.t1(0.5 * c.ei[i])? / c.t2(0.5 * c.EI[i])?, c.t1(0.5 * c.ei[j])? / c.t2(0.5 * c.EI[j])?))
    });
    b.with_dual("area_coarea_ratio", Lhuillier, "ratio of area and coarea tangents", Never, vec![[0, 1, 2], [1, 0, 2], [2, 0, 1]], |c, i, _, _| {
        Ok((c.t1(0.5 * c.ei[i])? / c.t2(0.5 * c.EI[i])?, c.ta(0.25)? / c.tc(0.25)?))
    });
    b.dual_pair(
        ("excess_tangent_euler", "excess_tangent_euler_side"),
        Lhuillier,
        "squared excess tangent from the others",
        Never,
        all(),
        |c, i, j, k| Ok((c.t2(0.5 * c.EI[i])?.powi(2), -c.tc(0.25)? * c.t1(0.5 * c.ei[i])? / (c.t1(0.5 * c.ei[j])? * c.t1(0.5 * c.ei[k])?))),
        |c, i, j, k| Ok((c.t1(0.5 * c.ei[i])?.powi(2), -c.ta(0.25)? * c.t2(0.5 * c.EI[i])? / (c.t2(0.5 * c.EI[j])? * c.t2(0.5 * c.EI[k])?))),
    );
    b.dual_pair(
        ("lhuillier", "lhuillier_dual"),
        Lhuillier,
        "quarter-area tangent from the sides",
        Never,
        vec![[0, 1, 2]],
        |c, _, _, _| {
            let p = c.ei.iter().map(|&v| c.t1(0.5 * v)).collect::<Result<Vec<_>>>()?;
            Ok((c.ta(0.25)?.powi(2), -c.tc(0.25)? * p.iter().product::<f64>()))
        },
        |c, _, _, _| {
            let p = c.EI.iter().map(|&v| c.t2(0.5 * v)).collect::<Result<Vec<_>>>()?;
            Ok((c.tc(0.25)?.powi(2), -c.ta(0.25)? * p.iter().product::<f64>()))
        },
    );

    b.out
}
