//! Counts of cuspidal automorphic representations contributing to each
//! space of cusp forms, and the linear systems that determine them.
//!
//! The Saito-Kurokawa counts come from classical dimension formulas for
//! elliptic newforms of level 1, 2 and 4 together with a parity condition.
//! Multiplying by the fixed-vector matrix gives the Saito-Kurokawa part of
//! every cusp space.  Subtracting from the full cusp dimensions leaves the
//! general-type part for ten of the groups; inverting the ten-by-ten system
//! recovers the general-type counts, and the held-back row then yields the
//! dimensions for the last group, the level-4 Klingen group.

use crate::exactmath::{
    det_rational, rat, rf, solve_linear, Polynomial, Rational, RationalFunction,
};
use crate::globaldims::{codim_series, sk_series};
use crate::groups::GroupLabel;
use crate::localreps::{
    full_matrix, g_matrix, g_rows, klingen4_g_row, p_matrix, FULL_OMEGAS, P_OMEGAS,
};
use crate::localreps::OmegaLabel;

/// Printed generating series for the Saito-Kurokawa counts, indexed like
/// `P_OMEGAS`.
pub fn skp_count_series(idx: usize) -> RationalFunction {
    match P_OMEGAS[idx] {
        OmegaLabel::IIb => rf(&[(1, 10)], &[(2, 1), (6, 1)]),
        OmegaLabel::Vb => rf(&[(1, 8)], &[(4, 1), (6, 1)]),
        OmegaLabel::VIb => rf(&[(1, 6), (1, 8), (-1, 12)], &[(4, 1), (6, 1)]),
        OmegaLabel::VIc => rf(&[(1, 11)], &[(4, 1), (6, 1)]),
        OmegaLabel::XIb => rf(&[(1, 7)], &[(2, 1), (6, 1)]),
        OmegaLabel::Vastar => rf(&[(1, 5)], &[(4, 1), (6, 1)]),
        _ => unreachable!(),
    }
}

/// Printed generating series for the general-type counts, indexed like
/// `G_COLUMNS`.
pub fn skg_count_series(idx: usize) -> RationalFunction {
    let num: &[(i64, usize)] = match idx {
        // I
        0 => &[(1, 20), (1, 22), (1, 24), (-1, 32), (-1, 34), (1, 35)],
        // IIa
        1 => &[(1, 16), (1, 18), (1, 19), (-1, 20), (-1, 22)],
        // IIIa combined with VIa/VIb
        2 => &[
            (1, 12),
            (2, 14),
            (2, 16),
            (-1, 17),
            (2, 18),
            (-2, 19),
            (1, 20),
            (-2, 21),
            (1, 22),
            (-2, 23),
            (1, 26),
            (1, 28),
            (1, 29),
            (-1, 30),
        ],
        // IVa
        3 => &[
            (1, 10),
            (1, 12),
            (1, 13),
            (1, 14),
            (-1, 18),
            (1, 19),
            (2, 20),
            (2, 21),
            (1, 22),
            (1, 23),
            (-1, 24),
            (-1, 25),
            (-1, 26),
            (-1, 27),
            (1, 30),
        ],
        // Va combined with Va*
        4 => &[(1, 15), (1, 17), (-1, 20), (-1, 22), (1, 25)],
        // VII combined with VIIIa/VIIIb
        5 => &[(1, 10), (1, 12), (-1, 16), (1, 17)],
        // IXa
        6 => &[(1, 8), (1, 19)],
        // X
        7 => &[(1, 11), (1, 19), (1, 20), (-1, 23)],
        // XIa
        8 => &[(1, 12), (1, 15), (1, 16), (-1, 19), (-1, 20), (1, 23)],
        // sc(16)
        9 => &[(1, 9)],
        _ => unreachable!(),
    };
    let den: &[(usize, usize)] = match idx {
        0 => &[(4, 1), (6, 1), (10, 1), (12, 1)],
        1 => &[(4, 2), (5, 1), (6, 1)],
        2 | 3 | 4 => &[(4, 1), (5, 1), (6, 1), (12, 1)],
        5 => &[(4, 2), (6, 2)],
        6 | 7 | 8 => &[(2, 1), (4, 1), (6, 1), (12, 1)],
        9 => &[(2, 1), (4, 2), (5, 1)],
        _ => unreachable!(),
    };
    rf(num, den)
}

fn dot(row: &[i64], series: &[RationalFunction]) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for (c, s) in row.iter().zip(series) {
        if *c != 0 {
            acc = &acc + &s.scale(&rat(*c));
        }
    }
    acc
}

/// Saito-Kurokawa part of the cusp space of a group, assembled from the
/// counts and the fixed-vector matrix.
pub fn skp_series_derived(label: GroupLabel) -> RationalFunction {
    let counts: Vec<RationalFunction> = (0..6).map(skp_count_series).collect();
    dot(&p_matrix()[label.index()], &counts)
}

/// Determinant of the ten-by-ten general-type system.
pub fn g_system_det() -> Rational {
    det_rational(&g_matrix()).expect("square matrix")
}

/// Solves the general-type system: the right-hand sides are the cusp
/// dimensions minus the Saito-Kurokawa parts for the ten groups with
/// independently known dimension series.
pub fn solve_g_counts() -> Vec<RationalFunction> {
    static CACHE: std::sync::OnceLock<Vec<RationalFunction>> = std::sync::OnceLock::new();
    CACHE
        .get_or_init(|| {
            let rhs: Vec<RationalFunction> = g_rows()
                .into_iter()
                .map(|g| &sk_series(g) - &skp_series_derived(g))
                .collect();
            solve_linear(&g_matrix(), &rhs).expect("general-type system is invertible")
        })
        .clone()
}

/// General-type part of the cusp space of the level-4 Klingen group,
/// obtained from the held-back row of the system.
pub fn klingen4_skg_derived() -> RationalFunction {
    dot(&klingen4_g_row(), &solve_g_counts())
}

/// Cusp dimensions for the level-4 Klingen group: general-type part plus
/// Saito-Kurokawa part.
pub fn klingen4_sk_derived() -> RationalFunction {
    &klingen4_skg_derived() + &skp_series_derived(GroupLabel::Klingen4)
}

/// Dimensions of all modular forms for the level-4 Klingen group.  For even
/// weights at least 6 the codimension series applies; odd-weight spaces are
/// cuspidal; in weight 0 there are only the constants, and in weight 4 the
/// codimension is the number of zero-dimensional boundary components.
pub fn klingen4_mk_derived() -> RationalFunction {
    let delta4 = crate::globaldims::codim_params(GroupLabel::Klingen4).3;
    let corrections = RationalFunction::from_poly(Polynomial::from_terms(&[(1, 0), (delta4, 4)]));
    &(&klingen4_sk_derived() + &codim_series(GroupLabel::Klingen4)) + &corrections
}

/// Total multiplicity assigned to each of the 19 columns of the full
/// system.  Merged general-type counts are placed on a single
/// representative column; this leaves the matrix product unchanged because
/// the merged fixed-vector columns satisfy `IIIa = VIa + VIb` and
/// `VII = VIIIa + VIIIb`, while the two-member packet column `Va/a*` hits
/// both of its columns with the same count.
pub fn assemble_full_counts() -> Vec<RationalFunction> {
    let sp: Vec<RationalFunction> = (0..6).map(skp_count_series).collect();
    let sg = solve_g_counts();
    FULL_OMEGAS
        .iter()
        .map(|&omega| match omega {
            OmegaLabel::I => sg[0].clone(),
            OmegaLabel::IIa => sg[1].clone(),
            OmegaLabel::IIb => sp[0].clone(),
            OmegaLabel::IIIa => sg[2].clone(),
            OmegaLabel::IVa => sg[3].clone(),
            OmegaLabel::Va => sg[4].clone(),
            OmegaLabel::Vb => sp[1].clone(),
            OmegaLabel::VIa => RationalFunction::zero(),
            OmegaLabel::VIb => sp[2].clone(),
            OmegaLabel::VIc => sp[3].clone(),
            OmegaLabel::VII => sg[5].clone(),
            OmegaLabel::VIIIa | OmegaLabel::VIIIb => RationalFunction::zero(),
            OmegaLabel::IXa => sg[6].clone(),
            OmegaLabel::X => sg[7].clone(),
            OmegaLabel::XIa => sg[8].clone(),
            OmegaLabel::XIb => sp[4].clone(),
            OmegaLabel::Vastar => &sg[4] + &sp[5],
            OmegaLabel::Sc16 => sg[9].clone(),
            _ => unreachable!(),
        })
        .collect()
}

/// Residual check of the full 11 x 19 system: for every group, the
/// fixed-vector row applied to the assembled counts must reproduce the cusp
/// dimension series (with the last group's series coming from the derived
/// pipeline).
pub fn full_system_holds() -> Vec<(GroupLabel, bool)> {
    let counts = assemble_full_counts();
    let matrix = full_matrix();
    GroupLabel::ALL
        .iter()
        .map(|&g| {
            let lhs = dot(&matrix[g.index()], &counts);
            let rhs = if g == GroupLabel::Klingen4 {
                klingen4_sk_derived()
            } else {
                sk_series(g)
            };
            (g, lhs.equal(&rhs))
        })
        .collect()
}

/// Re-solves the general-type system with one of the ten rows replaced by
/// the held-back Klingen row (right-hand side from the printed series for
/// that group).  The system stays square; on success the counts must agree
/// with the baseline solution.
pub fn solve_g_counts_dropping(dropped: GroupLabel) -> Result<Vec<RationalFunction>, crate::exactmath::ExactMathError> {
    assert_ne!(dropped, GroupLabel::Klingen4);
    let mut matrix: Vec<Vec<i64>> = Vec::new();
    let mut rhs: Vec<RationalFunction> = Vec::new();
    for g in g_rows() {
        if g == dropped {
            continue;
        }
        matrix.push(g_matrix()[g_rows().iter().position(|&x| x == g).unwrap()].clone());
        rhs.push(&sk_series(g) - &skp_series_derived(g));
    }
    matrix.push(klingen4_g_row());
    rhs.push(crate::globaldims::skg_series(GroupLabel::Klingen4));
    solve_linear(&matrix, &rhs)
}
