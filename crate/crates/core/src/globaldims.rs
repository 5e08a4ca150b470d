//! Cusp structure, codimension formulas, and generating series for the
//! dimensions of modular and cusp forms of each group.
//!
//! The codimension of the cusp forms inside all modular forms, for even
//! weight at least 6 (and in fact also weight 4), is the number of
//! zero-dimensional boundary components plus one space of degree-one cusp
//! forms for each one-dimensional boundary component.  The level of that
//! degree-one space is recovered from the shape of the stabilizer group of
//! the component: a lattice with lower-left entries divisible by `n` and
//! upper-right entries in `m' Z` is conjugate to the classical group of
//! level `n * m'`.

use std::collections::HashMap;

use crate::exactmath::{rf, Polynomial, RationalFunction};
use crate::groups::GroupLabel;

/// Builds `prod(num_factors) / prod (1-t^a)^e`.
fn rfp(num_factors: &[&[(i64, usize)]], den_factors: &[(usize, usize)]) -> RationalFunction {
    let mut num = Polynomial::one();
    for f in num_factors {
        num = &num * &Polynomial::from_terms(f);
    }
    let mut den = Polynomial::one();
    for &(a, e) in den_factors {
        let f = Polynomial::from_terms(&[(1, 0), (-1, a)]);
        for _ in 0..e {
            den = &den * &f;
        }
    }
    RationalFunction::new(num, den).expect("den(0) = 1 by construction")
}

/// Generating series for dimensions of degree-one cusp forms of level
/// `n` (1, 2 or 4); nonzero only in even weights at least 6.
pub fn elliptic_cusp_series(n: u32) -> RationalFunction {
    match n {
        1 => rf(&[(1, 12)], &[(4, 1), (6, 1)]),
        2 => rf(&[(1, 8)], &[(2, 1), (4, 1)]),
        4 => rf(&[(1, 6)], &[(2, 2)]),
        _ => panic!("no degree-one cusp series for level {n}"),
    }
}

/// Indicator series of even weights at least 6: `t^6/(1-t^2)`.
pub fn even_weight_indicator() -> RationalFunction {
    rf(&[(1, 6)], &[(2, 1)])
}

/// Boundary data of a group: the number of zero-dimensional components and
/// the stabilizer shape `(m' numerator, m' denominator, n)` of each
/// one-dimensional component.
pub struct CuspData {
    pub zero_dim_components: i64,
    pub one_dim_shapes: Vec<(i64, i64, i64)>,
}

impl CuspData {
    /// Level of the degree-one group attached to each one-dimensional
    /// component: `n * m'`, which must come out a positive integer dividing 4.
    pub fn one_dim_levels(&self) -> Vec<u32> {
        self.one_dim_shapes
            .iter()
            .map(|&(mp_num, mp_den, n)| {
                let prod = n * mp_num;
                assert_eq!(prod % mp_den, 0, "level n*m' is not integral");
                let level = (prod / mp_den) as u32;
                assert!(matches!(level, 1 | 2 | 4), "unexpected level {level}");
                level
            })
            .collect()
    }
}

/// Boundary data for each group, transcribed from the double-coset tables.
pub fn cusp_data(label: GroupLabel) -> CuspData {
    let (zero_dim, shapes): (i64, Vec<(i64, i64, i64)>) = match label {
        // The principal level-2 group has 15 components of each kind, every
        // stabilizer of shape (2, 2).
        GroupLabel::Gamma2 => (15, vec![(2, 1, 2); 15]),
        GroupLabel::Sp4Z => (1, vec![(1, 1, 1)]),
        GroupLabel::K2 => (1, vec![(1, 1, 1), (1, 2, 2)]),
        GroupLabel::K4 => (2, vec![(1, 1, 1), (1, 4, 4), (1, 1, 2)]),
        GroupLabel::Gamma0p2 => (3, vec![(1, 1, 2), (1, 1, 2)]),
        GroupLabel::Gamma0p4 => (7, vec![(1, 1, 4), (4, 1, 1), (1, 1, 4), (1, 1, 4)]),
        GroupLabel::Gamma0star4 => (
            7,
            vec![(1, 1, 4), (4, 1, 1), (1, 1, 4), (1, 1, 4), (1, 1, 4)],
        ),
        GroupLabel::Klingen2 => (2, vec![(1, 1, 1), (1, 1, 2), (1, 1, 1)]),
        GroupLabel::Klingen4 => (
            4,
            vec![
                (1, 1, 1),
                (1, 1, 4),
                (1, 1, 1),
                (1, 1, 1),
                (1, 1, 2),
                (1, 1, 4),
            ],
        ),
        GroupLabel::M4 => (
            3,
            vec![(1, 1, 1), (1, 2, 4), (1, 1, 1), (1, 1, 2), (1, 2, 4)],
        ),
        GroupLabel::B2 => (4, vec![(1, 1, 2); 4]),
    };
    CuspData {
        zero_dim_components: zero_dim,
        one_dim_shapes: shapes,
    }
}

/// Coefficients `(alpha, beta, gamma, delta)` of the codimension formula:
/// multiplicities of the level-1, level-2 and level-4 degree-one cusp
/// series, and the constant term.
pub fn codim_params(label: GroupLabel) -> (i64, i64, i64, i64) {
    let data = cusp_data(label);
    let mut counts = HashMap::new();
    for level in data.one_dim_levels() {
        *counts.entry(level).or_insert(0i64) += 1;
    }
    (
        counts.get(&1).copied().unwrap_or(0),
        counts.get(&2).copied().unwrap_or(0),
        counts.get(&4).copied().unwrap_or(0),
        data.zero_dim_components,
    )
}

/// The codimension generating series over even weights at least 6,
/// assembled from the boundary data.
pub fn codim_series(label: GroupLabel) -> RationalFunction {
    let (alpha, beta, gamma, delta) = codim_params(label);
    let mut acc = RationalFunction::zero();
    for (mult, series) in [
        (alpha, elliptic_cusp_series(1)),
        (beta, elliptic_cusp_series(2)),
        (gamma, elliptic_cusp_series(4)),
        (delta, even_weight_indicator()),
    ] {
        acc = &acc + &series.scale(&crate::exactmath::rat(mult));
    }
    acc
}

/// The printed closed forms of the codimension series, for cross-checking.
pub fn printed_codim_series(label: GroupLabel) -> RationalFunction {
    match label {
        GroupLabel::Gamma2 => rf(&[(30, 6), (-15, 8)], &[(2, 2)]),
        GroupLabel::Sp4Z => rfp(&[&[(1, 6)], &[(1, 0), (1, 2), (-1, 8)]], &[(4, 1), (6, 1)]),
        GroupLabel::K2 => rfp(
            &[&[(1, 6)], &[(1, 0), (1, 2), (1, 6), (-1, 8)]],
            &[(4, 1), (6, 1)],
        ),
        GroupLabel::K4 => rfp(
            &[&[(1, 6)], &[(2, 0), (3, 2), (1, 4), (1, 6), (-2, 8)]],
            &[(4, 1), (6, 1)],
        ),
        GroupLabel::Gamma0p2 => rfp(
            &[&[(1, 6)], &[(3, 0), (2, 2), (-3, 4)]],
            &[(2, 1), (4, 1)],
        ),
        GroupLabel::Gamma0p4 => rfp(&[&[(1, 6)], &[(11, 0), (-7, 2)]], &[(2, 2)]),
        GroupLabel::Gamma0star4 => rfp(&[&[(1, 6)], &[(12, 0), (-7, 2)]], &[(2, 2)]),
        GroupLabel::Klingen2 => rfp(
            &[&[(1, 6)], &[(2, 0), (3, 2), (1, 4), (1, 6), (-2, 8)]],
            &[(4, 1), (6, 1)],
        ),
        GroupLabel::Klingen4 => rfp(
            &[&[(1, 6)], &[(6, 0), (9, 2), (5, 4), (2, 6), (-4, 8)]],
            &[(4, 1), (6, 1)],
        ),
        GroupLabel::M4 => rfp(
            &[&[(1, 6)], &[(3, 0), (6, 2), (3, 4), (2, 6), (-3, 8)]],
            &[(4, 1), (6, 1)],
        ),
        GroupLabel::B2 => rfp(
            &[&[(4, 6)], &[(1, 0), (1, 2), (-1, 4)]],
            &[(2, 1), (4, 1)],
        ),
    }
}

/// Generating series for the dimensions of all modular forms.
pub fn mk_series(label: GroupLabel) -> RationalFunction {
    match label {
        GroupLabel::Gamma2 => rfp(
            &[&[(1, 0), (1, 2)], &[(1, 0), (1, 4)], &[(1, 0), (1, 5)]],
            &[(2, 4)],
        ),
        GroupLabel::Sp4Z => rfp(
            &[&[(1, 0), (1, 35)]],
            &[(4, 1), (6, 1), (10, 1), (12, 1)],
        ),
        GroupLabel::K2 => rfp(
            &[
                &[(1, 0), (1, 10)],
                &[(1, 0), (1, 12)],
                &[(1, 0), (1, 11)],
            ],
            &[(4, 1), (6, 1), (8, 1), (12, 1)],
        ),
        GroupLabel::K4 => rfp(
            &[
                &[(1, 0), (1, 12)],
                &[
                    (1, 0),
                    (1, 6),
                    (1, 7),
                    (1, 8),
                    (1, 9),
                    (1, 10),
                    (1, 11),
                    (1, 17),
                ],
            ],
            &[(4, 2), (6, 1), (12, 1)],
        ),
        GroupLabel::Gamma0p2 => rfp(&[&[(1, 0), (1, 19)]], &[(2, 1), (4, 2), (6, 1)]),
        GroupLabel::Gamma0p4 => rfp(
            &[&[(1, 0), (1, 4), (1, 11), (1, 15)]],
            &[(2, 3), (6, 1)],
        ),
        GroupLabel::Gamma0star4 => rfp(
            &[&[(1, 0), (1, 4), (1, 6), (1, 10)], &[(1, 0), (1, 5)]],
            &[(2, 3), (6, 1)],
        ),
        GroupLabel::Klingen2 => rfp(
            &[
                &[(1, 0), (1, 6), (1, 8), (1, 10), (1, 12), (1, 18)],
                &[(1, 0), (1, 11)],
            ],
            &[(4, 2), (6, 1), (12, 1)],
        ),
        GroupLabel::Klingen4 => rf(
            &[
                (1, 0),
                (2, 4),
                (4, 6),
                (1, 7),
                (5, 8),
                (2, 9),
                (4, 10),
                (5, 11),
                (5, 12),
                (4, 13),
                (2, 14),
                (5, 15),
                (1, 16),
                (4, 17),
                (2, 19),
                (1, 23),
            ],
            &[(4, 2), (6, 2)],
        ),
        GroupLabel::M4 => rfp(
            &[
                &[(1, 0), (1, 4)],
                &[
                    (1, 0),
                    (2, 6),
                    (1, 7),
                    (3, 8),
                    (1, 9),
                    (1, 10),
                    (2, 11),
                    (1, 12),
                    (1, 13),
                    (2, 14),
                    (1, 15),
                    (1, 16),
                    (3, 17),
                    (1, 18),
                    (2, 19),
                    (1, 25),
                ],
            ],
            &[(4, 2), (6, 1), (12, 1)],
        ),
        GroupLabel::B2 => rfp(
            &[&[(1, 0), (1, 6)], &[(1, 0), (1, 11)]],
            &[(2, 1), (4, 3)],
        ),
    }
}

/// Generating series for the dimensions of cusp forms.
pub fn sk_series(label: GroupLabel) -> RationalFunction {
    match label {
        GroupLabel::Gamma2 => rfp(
            &[
                &[(1, 5)],
                &[(1, 0), (5, 1), (1, 2), (4, 3), (1, 4), (-5, 5), (1, 6)],
            ],
            &[(2, 4)],
        ),
        GroupLabel::Sp4Z => {
            &mk_series(GroupLabel::Sp4Z) - &rf(&[(1, 0)], &[(4, 1), (6, 1)])
        }
        GroupLabel::K2 => rfp(
            &[
                &[(1, 8)],
                &[(1, 0), (1, 12)],
                &[(1, 0), (1, 2), (1, 3), (1, 4), (-1, 12), (1, 13)],
            ],
            &[(4, 1), (6, 1), (8, 1), (12, 1)],
        ),
        GroupLabel::K4 => rfp(
            &[
                &[(1, 7)],
                &[
                    (1, 0),
                    (1, 1),
                    (1, 2),
                    (2, 3),
                    (1, 4),
                    (2, 5),
                    (1, 9),
                    (1, 10),
                    (2, 11),
                    (1, 12),
                    (1, 13),
                    (1, 14),
                    (1, 16),
                    (-1, 21),
                    (1, 22),
                ],
            ],
            &[(4, 2), (6, 1), (12, 1)],
        ),
        GroupLabel::Gamma0p2 => rfp(
            &[&[(1, 6)], &[(1, 0), (1, 2), (-1, 8), (1, 13)]],
            &[(2, 1), (4, 2), (6, 1)],
        ),
        GroupLabel::Gamma0p4 => rfp(
            &[&[(1, 6)], &[(3, 0), (1, 4), (1, 5), (-2, 6), (1, 9)]],
            &[(2, 3), (6, 1)],
        ),
        GroupLabel::Gamma0star4 => rfp(
            &[
                &[(1, 5)],
                &[
                    (1, 0),
                    (3, 1),
                    (1, 3),
                    (1, 4),
                    (2, 5),
                    (1, 6),
                    (-1, 7),
                    (-1, 9),
                    (1, 10),
                ],
            ],
            &[(2, 3), (6, 1)],
        ),
        GroupLabel::Klingen2 => rfp(
            &[
                &[(1, 8)],
                &[
                    (1, 0),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (-1, 5),
                    (-1, 6),
                    (1, 7),
                    (2, 8),
                    (1, 11),
                    (-1, 14),
                    (1, 15),
                    (1, 16),
                    (-1, 17),
                    (-1, 18),
                    (1, 19),
                ],
            ],
            &[(2, 1), (4, 1), (6, 1), (12, 1)],
        ),
        GroupLabel::Klingen4 => rfp(
            &[
                &[(1, 7)],
                &[
                    (1, 0),
                    (3, 1),
                    (2, 2),
                    (9, 3),
                    (5, 4),
                    (13, 5),
                    (4, 6),
                    (6, 7),
                    (5, 8),
                    (4, 10),
                    (-3, 11),
                    (2, 12),
                    (-2, 13),
                    (-2, 15),
                    (1, 16),
                ],
            ],
            &[(4, 2), (6, 2)],
        ),
        GroupLabel::M4 => rfp(
            &[
                &[(1, 7)],
                &[
                    (1, 0),
                    (2, 1),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (-1, 6),
                    (4, 8),
                    (5, 9),
                    (3, 12),
                    (2, 13),
                    (-2, 15),
                    (2, 16),
                    (1, 17),
                    (-1, 18),
                    (-2, 19),
                    (1, 20),
                ],
            ],
            &[(2, 1), (4, 1), (6, 1), (12, 1)],
        ),
        GroupLabel::B2 => rfp(
            &[
                &[(1, 6)],
                &[
                    (1, 0),
                    (1, 2),
                    (-1, 4),
                    (1, 5),
                    (1, 6),
                    (-1, 7),
                    (-1, 8),
                    (1, 9),
                ],
            ],
            &[(2, 2), (4, 2)],
        ),
    }
}

/// Generating series for the dimensions of cusp forms of Saito-Kurokawa
/// type.
pub fn skp_series(label: GroupLabel) -> RationalFunction {
    match label {
        GroupLabel::Gamma2 => rfp(
            &[
                &[(1, 5)],
                &[(1, 0), (1, 1), (1, 2)],
                &[(1, 0), (4, 1), (10, 3), (-5, 4), (10, 5)],
            ],
            &[(4, 1), (6, 1)],
        ),
        GroupLabel::Sp4Z => rf(&[(1, 10)], &[(2, 1), (6, 1)]),
        GroupLabel::K2 => rfp(
            &[&[(1, 8)], &[(1, 0), (1, 2), (1, 3), (1, 4)]],
            &[(4, 1), (6, 1)],
        ),
        GroupLabel::K4 => rfp(
            &[&[(1, 7)], &[(1, 0), (1, 1), (1, 2), (2, 3), (1, 4), (2, 5)]],
            &[(4, 1), (6, 1)],
        ),
        GroupLabel::Gamma0p2 => rfp(
            &[&[(1, 6)], &[(1, 0), (1, 2), (2, 4)]],
            &[(2, 1), (6, 1)],
        ),
        GroupLabel::Gamma0p4 => rfp(
            &[&[(1, 6)], &[(3, 0), (3, 2), (4, 4)]],
            &[(2, 1), (6, 1)],
        ),
        GroupLabel::Gamma0star4 => rfp(
            &[
                &[(1, 5)],
                &[(1, 0), (-1, 1), (1, 2)],
                &[(1, 0), (4, 1), (5, 2), (4, 3)],
            ],
            &[(2, 1), (6, 1)],
        ),
        GroupLabel::Klingen2 => rfp(
            &[
                &[(1, 8)],
                &[(1, 0), (1, 1), (1, 2)],
                &[(1, 0), (-1, 1), (2, 2)],
            ],
            &[(4, 1), (6, 1)],
        ),
        GroupLabel::Klingen4 => rfp(
            &[&[(1, 7)], &[(1, 0), (2, 1), (1, 2), (4, 3), (2, 4), (4, 5)]],
            &[(4, 1), (6, 1)],
        ),
        GroupLabel::M4 => rfp(
            &[
                &[(1, 7)],
                &[(1, 0), (1, 1), (1, 2)],
                &[(1, 0), (1, 1), (-1, 2), (3, 3)],
            ],
            &[(4, 1), (6, 1)],
        ),
        GroupLabel::B2 => rfp(
            &[
                &[(1, 6)],
                &[(1, 0), (1, 1), (1, 2)],
                &[(1, 0), (-1, 1), (3, 2), (-2, 3), (3, 4)],
            ],
            &[(4, 1), (6, 1)],
        ),
    }
}

/// Generating series for the dimensions of cusp forms of general type.
pub fn skg_series(label: GroupLabel) -> RationalFunction {
    match label {
        GroupLabel::Gamma2 => rfp(
            &[
                &[(1, 8)],
                &[(1, 0), (1, 1), (1, 2)],
                &[
                    (10, 0),
                    (-1, 1),
                    (12, 2),
                    (-5, 3),
                    (2, 4),
                    (13, 5),
                    (-16, 6),
                    (1, 7),
                ],
            ],
            &[(2, 2), (4, 1), (6, 1)],
        ),
        GroupLabel::Sp4Z => rfp(
            &[
                &[(1, 20)],
                &[(1, 0), (1, 2), (1, 4), (-1, 12), (-1, 14), (1, 15)],
            ],
            &[(4, 1), (6, 1), (10, 1), (12, 1)],
        ),
        GroupLabel::K2 => rfp(
            &[
                &[(1, 16)],
                &[
                    (1, 0),
                    (1, 3),
                    (1, 4),
                    (1, 7),
                    (1, 8),
                    (-2, 9),
                    (-2, 10),
                    (1, 11),
                ],
            ],
            &[(2, 1), (4, 1), (6, 1), (12, 1)],
        ),
        GroupLabel::K4 => rfp(
            &[
                &[(1, 11)],
                &[
                    (1, 0),
                    (1, 1),
                    (1, 3),
                    (1, 4),
                    (2, 5),
                    (2, 8),
                    (2, 9),
                    (1, 12),
                    (1, 13),
                    (-2, 14),
                    (-3, 15),
                    (1, 16),
                ],
            ],
            &[(2, 1), (4, 1), (6, 1), (12, 1)],
        ),
        GroupLabel::Gamma0p2 => rfp(
            &[&[(1, 12)], &[(2, 0), (2, 2), (-1, 4), (-2, 6), (1, 7)]],
            &[(2, 1), (4, 2), (6, 1)],
        ),
        GroupLabel::Gamma0p4 => rfp(
            &[&[(1, 8)], &[(3, 0), (1, 3), (3, 4), (-4, 6), (1, 7)]],
            &[(2, 3), (6, 1)],
        ),
        GroupLabel::Gamma0star4 => rfp(
            &[
                &[(1, 8)],
                &[
                    (4, 0),
                    (3, 1),
                    (1, 2),
                    (1, 3),
                    (4, 4),
                    (-1, 5),
                    (-5, 6),
                    (1, 7),
                ],
            ],
            &[(2, 3), (6, 1)],
        ),
        GroupLabel::Klingen2 => rfp(
            &[
                &[(1, 12)],
                &[
                    (1, 0),
                    (1, 2),
                    (1, 3),
                    (2, 4),
                    (1, 7),
                    (1, 8),
                    (2, 11),
                    (1, 12),
                    (-2, 13),
                    (-3, 14),
                    (1, 15),
                ],
            ],
            &[(2, 1), (4, 1), (6, 1), (12, 1)],
        ),
        GroupLabel::Klingen4 => rfp(
            &[
                &[(1, 8)],
                &[
                    (1, 0),
                    (1, 1),
                    (5, 2),
                    (4, 3),
                    (11, 4),
                    (6, 5),
                    (12, 6),
                    (8, 7),
                    (8, 8),
                    (5, 9),
                    (-1, 10),
                    (1, 11),
                    (-6, 12),
                    (-2, 13),
                    (-6, 14),
                    (1, 15),
                ],
            ],
            &[(4, 2), (6, 2)],
        ),
        GroupLabel::M4 => rfp(
            &[
                &[(1, 10)],
                &[
                    (1, 0),
                    (2, 1),
                    (4, 2),
                    (1, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (4, 9),
                    (4, 10),
                    (-1, 12),
                    (3, 13),
                    (1, 14),
                    (-3, 15),
                    (-5, 16),
                    (1, 17),
                ],
            ],
            &[(2, 1), (4, 1), (6, 1), (12, 1)],
        ),
        GroupLabel::B2 => rfp(
            &[
                &[(1, 10)],
                &[(1, 0), (1, 1), (1, 2)],
                &[
                    (1, 0),
                    (-1, 1),
                    (4, 2),
                    (-2, 3),
                    (1, 4),
                    (3, 5),
                    (-5, 6),
                    (1, 7),
                ],
            ],
            &[(2, 1), (4, 2), (6, 1)],
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codim_params_match_printed_table() {
        let expect = [
            (GroupLabel::Gamma2, (0, 0, 15, 15)),
            (GroupLabel::Sp4Z, (1, 0, 0, 1)),
            (GroupLabel::K2, (2, 0, 0, 1)),
            (GroupLabel::K4, (2, 1, 0, 2)),
            (GroupLabel::Gamma0p2, (0, 2, 0, 3)),
            (GroupLabel::Gamma0p4, (0, 0, 4, 7)),
            (GroupLabel::Gamma0star4, (0, 0, 5, 7)),
            (GroupLabel::Klingen2, (2, 1, 0, 2)),
            (GroupLabel::Klingen4, (3, 1, 2, 4)),
            (GroupLabel::M4, (2, 3, 0, 3)),
            (GroupLabel::B2, (0, 4, 0, 4)),
        ];
        for (label, params) in expect {
            assert_eq!(codim_params(label), params, "params for {label}");
        }
    }

    #[test]
    fn codim_series_matches_printed_closed_forms() {
        for g in GroupLabel::ALL {
            assert!(
                codim_series(g).equal(&printed_codim_series(g)),
                "codimension series mismatch for {g}"
            );
        }
    }

    #[test]
    fn codim_consistency_up_to_weight_40() {
        for g in GroupLabel::ALL {
            let mk = mk_series(g).expand(40);
            let sk = sk_series(g).expand(40);
            let codim = codim_series(g).expand(40);
            let delta = codim_params(g).3;
            for k in 0..=40usize {
                if k % 2 == 1 {
                    assert_eq!(mk.coeff(k), sk.coeff(k), "odd weight {k} for {g}");
                } else if k >= 6 {
                    let diff = mk.coeff(k) - sk.coeff(k);
                    assert_eq!(&diff, codim.coeff(k), "even weight {k} for {g}");
                }
            }
            // In weight 4 the formula itself (not the series, which starts
            // at weight 6) still holds; all three degree-one cusp spaces
            // vanish there, so the codimension is just the constant.
            let diff4 = mk.coeff(4) - sk.coeff(4);
            assert_eq!(diff4, crate::exactmath::rat(delta), "weight 4 for {g}");
        }
    }

    #[test]
    fn cusp_forms_split_into_types() {
        for g in GroupLabel::ALL {
            let lhs = sk_series(g);
            let rhs = &skp_series(g) + &skg_series(g);
            assert!(lhs.equal(&rhs), "S = S(P) + S(G) fails for {g}");
        }
    }

    #[test]
    fn low_weight_tables() {
        // Weight-by-weight dimension values for k = 1..20, all four
        // families, in the canonical group order.
        let mk: [[i64; 20]; 11] = [
            [0, 5, 0, 15, 1, 35, 5, 69, 15, 121, 35, 195, 69, 295, 121, 425, 195, 589, 295, 791],
            [0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 3, 0, 2, 0, 4, 0, 4, 0, 5],
            [0, 0, 0, 1, 0, 1, 0, 2, 0, 2, 1, 5, 0, 3, 1, 7, 1, 7, 2, 10],
            [0, 0, 0, 2, 0, 2, 1, 4, 1, 5, 3, 10, 3, 9, 6, 17, 7, 19, 12, 27],
            [0, 1, 0, 3, 0, 4, 0, 7, 0, 9, 0, 14, 0, 17, 0, 24, 0, 29, 1, 38],
            [0, 3, 0, 7, 0, 14, 0, 24, 0, 38, 1, 57, 3, 81, 7, 111, 14, 148, 24, 192],
            [0, 3, 0, 7, 1, 15, 3, 27, 7, 45, 15, 71, 27, 105, 45, 149, 71, 205, 105, 273],
            [0, 0, 0, 2, 0, 2, 0, 4, 0, 5, 1, 10, 0, 9, 2, 17, 2, 19, 4, 26],
            [0, 0, 0, 4, 0, 6, 1, 12, 2, 20, 7, 36, 10, 46, 22, 75, 32, 98, 50, 133],
            [0, 0, 0, 3, 0, 3, 1, 8, 1, 10, 5, 21, 5, 23, 13, 41, 16, 49, 28, 71],
            [0, 1, 0, 4, 0, 5, 0, 11, 0, 14, 1, 24, 1, 30, 4, 45, 5, 55, 11, 76],
        ];
        let sk: [[i64; 20]; 11] = [
            [0, 0, 0, 0, 1, 5, 5, 24, 15, 61, 35, 120, 69, 205, 121, 320, 195, 469, 295, 656],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3],
            [0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 2, 0, 2, 1, 4, 1, 4, 2, 7],
            [0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3, 4, 3, 5, 6, 10, 7, 12, 12, 19],
            [0, 0, 0, 0, 0, 1, 0, 2, 0, 4, 0, 7, 0, 10, 0, 15, 0, 20, 1, 27],
            [0, 0, 0, 0, 0, 3, 0, 9, 0, 19, 1, 34, 3, 54, 7, 80, 14, 113, 24, 153],
            [0, 0, 0, 0, 1, 3, 3, 10, 7, 23, 15, 44, 27, 73, 45, 112, 71, 163, 105, 226],
            [0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 4, 0, 5, 2, 10, 2, 12, 4, 18],
            [0, 0, 0, 0, 0, 0, 1, 3, 2, 9, 7, 19, 10, 30, 22, 53, 32, 74, 50, 106],
            [0, 0, 0, 0, 0, 0, 1, 2, 1, 4, 5, 10, 5, 14, 13, 27, 16, 35, 28, 54],
            [0, 0, 0, 0, 0, 1, 0, 3, 0, 6, 1, 12, 1, 18, 4, 29, 5, 39, 11, 56],
        ];
        let skp: [[i64; 20]; 11] = [
            [0, 0, 0, 0, 1, 5, 5, 14, 6, 20, 11, 29, 11, 34, 16, 44, 17, 49, 21, 58],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2],
            [0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 2, 0, 2, 1, 3, 1, 3, 1, 4],
            [0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3, 2, 3, 3, 5, 3, 5, 4, 6],
            [0, 0, 0, 0, 0, 1, 0, 2, 0, 4, 0, 5, 0, 6, 0, 8, 0, 9, 0, 10],
            [0, 0, 0, 0, 0, 3, 0, 6, 0, 10, 0, 13, 0, 16, 0, 20, 0, 23, 0, 26],
            [0, 0, 0, 0, 1, 3, 3, 6, 4, 10, 5, 13, 7, 16, 8, 20, 9, 23, 11, 26],
            [0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 3, 0, 3, 1, 5, 1, 5, 1, 6],
            [0, 0, 0, 0, 0, 0, 1, 2, 1, 4, 3, 6, 2, 6, 4, 10, 4, 10, 5, 12],
            [0, 0, 0, 0, 0, 0, 1, 2, 1, 3, 3, 5, 2, 5, 4, 8, 4, 8, 5, 10],
            [0, 0, 0, 0, 0, 1, 0, 3, 0, 5, 1, 7, 0, 8, 1, 11, 1, 12, 1, 14],
        ];
        let skg: [[i64; 20]; 11] = [
            [0, 0, 0, 0, 0, 0, 0, 10, 9, 41, 24, 91, 58, 171, 105, 276, 178, 420, 274, 598],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 3],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3, 5, 4, 7, 8, 13],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 4, 0, 7, 0, 11, 1, 17],
            [0, 0, 0, 0, 0, 0, 0, 3, 0, 9, 1, 21, 3, 38, 7, 60, 14, 90, 24, 127],
            [0, 0, 0, 0, 0, 0, 0, 4, 3, 13, 10, 31, 20, 57, 37, 92, 62, 140, 94, 200],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 5, 1, 7, 3, 12],
            [0, 0, 0, 0, 0, 0, 0, 1, 1, 5, 4, 13, 8, 24, 18, 43, 28, 64, 45, 94],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 5, 3, 9, 9, 19, 12, 27, 23, 44],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 5, 1, 10, 3, 18, 4, 27, 10, 42],
        ];
        let families: [(&str, fn(GroupLabel) -> RationalFunction, &[[i64; 20]; 11]); 4] = [
            ("M", mk_series, &mk),
            ("S", sk_series, &sk),
            ("S(P)", skp_series, &skp),
            ("S(G)", skg_series, &skg),
        ];
        for (name, series, table) in families {
            for (gi, g) in GroupLabel::ALL.iter().enumerate() {
                let s = series(*g).expand(20);
                for k in 1..=20usize {
                    assert_eq!(
                        s.coeff_i64(k),
                        table[gi][k - 1],
                        "{name} weight {k} for {g}"
                    );
                }
            }
        }
    }

    #[test]
    fn low_weight_vanishing() {
        // Cusp spaces vanish for every group in weights up to 4.
        for g in GroupLabel::ALL {
            let sk = sk_series(g).expand(4);
            for k in 0..=4usize {
                assert_eq!(sk.coeff_i64(k), 0, "cusp forms in weight {k} for {g}");
            }
        }
    }
}
