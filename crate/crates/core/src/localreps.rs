//! The catalogue of local representation types at the even place and their
//! fixed-vector dimensions under each congruence subgroup.
//!
//! Each type is described by its conductor exponent, epsilon factor sign,
//! temperedness, paramodular vectors, and its restriction to the maximal
//! compact subgroup, given as multiplicities of irreducible characters of
//! the finite symplectic group.  For the nine groups with a reduction
//! pattern the fixed-vector dimensions follow from character theory; the two
//! remaining columns are recorded data.  Out of these dimensions we build
//! the linear systems that tie global multiplicities to cusp form
//! dimensions.

use std::sync::OnceLock;

use crate::groups::GroupLabel;
use crate::s6;

/// Labels for the 27 representation types with nonzero fixed vectors under
/// the principal congruence subgroup.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OmegaLabel {
    I,
    IIa,
    IIb,
    IIIa,
    IIIb,
    IVa,
    IVb,
    IVc,
    IVd,
    Va,
    Vb,
    Vc,
    Vd,
    VIa,
    VIb,
    VIc,
    VId,
    VII,
    VIIIa,
    VIIIb,
    IXa,
    IXb,
    X,
    XIa,
    XIb,
    Vastar,
    Sc16,
}

use OmegaLabel::*;

impl OmegaLabel {
    pub const ALL: [OmegaLabel; 27] = [
        I, IIa, IIb, IIIa, IIIb, IVa, IVb, IVc, IVd, Va, Vb, Vc, Vd, VIa, VIb, VIc, VId, VII,
        VIIIa, VIIIb, IXa, IXb, X, XIa, XIb, Vastar, Sc16,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&o| o == self).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            I => "I",
            IIa => "IIa",
            IIb => "IIb",
            IIIa => "IIIa",
            IIIb => "IIIb",
            IVa => "IVa",
            IVb => "IVb",
            IVc => "IVc",
            IVd => "IVd",
            Va => "Va",
            Vb => "Vb",
            Vc => "Vc",
            Vd => "Vd",
            VIa => "VIa",
            VIb => "VIb",
            VIc => "VIc",
            VId => "VId",
            VII => "VII",
            VIIIa => "VIIIa",
            VIIIb => "VIIIb",
            IXa => "IXa",
            IXb => "IXb",
            X => "X",
            XIa => "XIa",
            XIb => "XIb",
            Vastar => "Vastar",
            Sc16 => "sc16",
        }
    }

    pub fn parse(s: &str) -> Option<OmegaLabel> {
        Self::ALL.iter().copied().find(|o| o.name() == s)
    }
}

/// Possible signs of the epsilon factor at the central point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Epsilon {
    Plus,
    Minus,
    /// Both signs occur, depending on the unramified twist.
    PlusMinus,
}

/// One row of the catalogue.
pub struct RepTypeRecord {
    pub label: OmegaLabel,
    /// Exponent of the conductor.
    pub conductor: u8,
    pub epsilon: Epsilon,
    pub tempered: bool,
    /// Whether the type has nonzero paramodular vectors.
    pub paramodular: bool,
    /// Multiplicities of the eleven irreducible characters (in irrep order)
    /// in the restriction to the maximal compact subgroup.
    pub restriction: [i64; 11],
    /// Occurs in packets parametrized by cuspidal four-dimensional
    /// Galois-side parameters (the general type).
    pub in_g: bool,
    /// Occurs in Saito-Kurokawa packets.
    pub in_p: bool,
}

/// The full catalogue, in the printed row order.
pub fn catalogue() -> &'static Vec<RepTypeRecord> {
    static CAT: OnceLock<Vec<RepTypeRecord>> = OnceLock::new();
    CAT.get_or_init(|| {
        use Epsilon::*;
        // (label, conductor, eps, tempered, paramodular, restriction, G, P).
        // Restriction multiplicities are over the irrep order
        // [6],[5,1],[4,2],[4,1,1],[3,3],[3,2,1],[3,1^3],[2^3],[2^2,1^2],[2,1^4],[1^6].
        let rows: [(OmegaLabel, u8, Epsilon, bool, bool, [i64; 11], bool, bool); 27] = [
            (I, 0, Plus, true, true, [1, 1, 2, 0, 0, 1, 0, 1, 0, 0, 0], true, false),
            (IIa, 1, PlusMinus, true, true, [0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0], true, false),
            (IIb, 0, Plus, false, true, [1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0], false, true),
            (IIIa, 2, Plus, true, true, [0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0], true, false),
            (IIIb, 0, Plus, false, true, [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0], false, false),
            (IVa, 3, PlusMinus, true, true, [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0], true, false),
            (IVb, 2, Plus, false, true, [0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0], false, false),
            (IVc, 1, PlusMinus, false, true, [0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0], false, false),
            (IVd, 0, Plus, false, true, [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0], false, false),
            (Va, 2, Minus, true, true, [0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0], true, false),
            (Vb, 1, PlusMinus, false, true, [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0], false, true),
            (Vc, 1, PlusMinus, false, true, [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0], false, true),
            (Vd, 0, Plus, false, true, [1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0], false, false),
            (VIa, 2, Plus, true, true, [0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0], true, false),
            (VIb, 2, Plus, true, false, [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0], true, true),
            (VIc, 1, PlusMinus, false, true, [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0], false, true),
            (VId, 0, Plus, false, true, [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0], false, false),
            (VII, 4, Plus, true, true, [0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0], true, false),
            (VIIIa, 4, Plus, true, true, [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0], true, false),
            (VIIIb, 4, Plus, true, false, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0], true, false),
            (IXa, 4, Plus, true, true, [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0], true, false),
            (IXb, 4, Plus, false, false, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0], false, false),
            (X, 2, Minus, true, true, [0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0], true, false),
            (XIa, 3, PlusMinus, true, true, [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0], true, false),
            (XIb, 2, Minus, false, true, [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0], false, true),
            (Vastar, 2, Minus, true, false, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1], true, true),
            (Sc16, 4, Minus, true, true, [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0], true, false),
        ];
        rows.into_iter()
            .map(
                |(label, conductor, epsilon, tempered, paramodular, restriction, in_g, in_p)| {
                    RepTypeRecord {
                        label,
                        conductor,
                        epsilon,
                        tempered,
                        paramodular,
                        restriction,
                        in_g,
                        in_p,
                    }
                },
            )
            .collect()
    })
}

/// Fixed-vector dimensions for the two columns that do not come from a
/// reduction-pattern computation, in catalogue row order: the level-2
/// paramodular group and the level-4 Klingen group.
const K2_COLUMN: [i64; 27] = [
    2, 1, 1, 0, 2, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
];
const KLINGEN4_COLUMN: [i64; 27] = [
    11, 7, 4, 5, 6, 2, 3, 5, 1, 5, 2, 2, 2, 5, 0, 2, 4, 2, 2, 0, 1, 1, 3, 2, 1, 0, 1,
];

/// The printed 27 x 11 fixed-vector dimension table, columns in group order,
/// for cross-checking the recomputation.
pub const LOCALDIM_GOLDEN: [[i64; 11]; 27] = [
    [45, 1, 2, 4, 4, 12, 15, 4, 11, 8, 8],
    [30, 0, 1, 2, 1, 5, 8, 2, 7, 5, 4],
    [15, 1, 1, 2, 3, 7, 7, 2, 4, 3, 4],
    [30, 0, 0, 1, 2, 8, 10, 1, 5, 3, 4],
    [15, 1, 2, 3, 2, 4, 5, 3, 6, 5, 4],
    [16, 0, 0, 0, 0, 2, 4, 0, 2, 1, 1],
    [14, 0, 0, 1, 2, 6, 6, 1, 3, 2, 3],
    [14, 0, 1, 2, 1, 3, 4, 2, 5, 4, 3],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [21, 0, 0, 1, 0, 2, 5, 1, 5, 3, 2],
    [9, 0, 1, 1, 1, 3, 3, 1, 2, 2, 2],
    [9, 0, 1, 1, 1, 3, 3, 1, 2, 2, 2],
    [6, 1, 0, 1, 2, 4, 4, 1, 2, 1, 2],
    [25, 0, 0, 1, 1, 5, 7, 1, 5, 3, 3],
    [5, 0, 0, 0, 1, 3, 3, 0, 0, 0, 1],
    [5, 0, 1, 1, 0, 0, 1, 1, 2, 2, 1],
    [10, 1, 1, 2, 2, 4, 4, 2, 4, 3, 3],
    [15, 0, 0, 0, 0, 4, 5, 0, 2, 0, 0],
    [10, 0, 0, 0, 0, 3, 4, 0, 2, 0, 0],
    [5, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0],
    [10, 0, 0, 0, 0, 3, 4, 0, 1, 0, 0],
    [5, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0],
    [15, 0, 0, 1, 0, 1, 7, 0, 3, 2, 0],
    [10, 0, 0, 0, 0, 1, 4, 0, 2, 1, 0],
    [5, 0, 0, 1, 0, 0, 3, 0, 1, 1, 0],
    [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [9, 0, 0, 0, 0, 0, 3, 0, 1, 0, 0],
];

/// Dimension of the space of fixed vectors of a congruence subgroup in a
/// representation of the given type.
pub fn local_fixed_dim(omega: OmegaLabel, group: GroupLabel) -> i64 {
    match group {
        GroupLabel::K2 => K2_COLUMN[omega.index()],
        GroupLabel::Klingen4 => KLINGEN4_COLUMN[omega.index()],
        _ => {
            let record = &catalogue()[omega.index()];
            (0..11)
                .map(|i| record.restriction[i] * s6::fixed_dim(i, group).unwrap())
                .sum()
        }
    }
}

/// The full 27 x 11 fixed-vector dimension table, rows in catalogue order,
/// columns in group order.
pub fn dim_table() -> &'static Vec<[i64; 11]> {
    static TABLE: OnceLock<Vec<[i64; 11]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        OmegaLabel::ALL
            .iter()
            .map(|&omega| {
                let mut row = [0i64; 11];
                for (j, &g) in GroupLabel::ALL.iter().enumerate() {
                    row[j] = local_fixed_dim(omega, g);
                }
                row
            })
            .collect()
    })
}

/// Column order of the 11 x 19 system relating cusp form dimensions to
/// global multiplicities.  The twin of `Vb` is omitted because it
/// contributes through the same counting series, and purely induced types
/// never carry cuspidal multiplicity.
pub const FULL_OMEGAS: [OmegaLabel; 19] = [
    I, IIa, IIb, IIIa, IVa, Va, Vb, VIa, VIb, VIc, VII, VIIIa, VIIIb, IXa, X, XIa, XIb, Vastar,
    Sc16,
];

/// Column order of the 11 x 6 Saito-Kurokawa system.
pub const P_OMEGAS: [OmegaLabel; 6] = [IIb, Vb, VIb, VIc, XIb, Vastar];

/// Column labels of the 10 x 10 general-type system.  Types with identical
/// fixed-vector columns, or whose columns are forced to combine with
/// others, are merged; see `g_matrix`.
pub const G_COLUMNS: [&str; 10] = [
    "I", "IIa", "IIIa+VIa+VIb", "IVa", "Va+Vastar", "VII+VIIIa+VIIIb", "IXa", "X", "XIa", "sc16",
];

/// Rows of the general-type system: every group except the level-4 Klingen
/// group, whose row is held back and used afterwards.
pub fn g_rows() -> Vec<GroupLabel> {
    GroupLabel::ALL
        .iter()
        .copied()
        .filter(|&g| g != GroupLabel::Klingen4)
        .collect()
}

/// The 11 x 19 coefficient matrix of the full system.
pub fn full_matrix() -> Vec<Vec<i64>> {
    GroupLabel::ALL
        .iter()
        .map(|&g| {
            FULL_OMEGAS
                .iter()
                .map(|&omega| local_fixed_dim(omega, g))
                .collect()
        })
        .collect()
}

/// The 11 x 6 coefficient matrix of the Saito-Kurokawa system.
pub fn p_matrix() -> Vec<Vec<i64>> {
    GroupLabel::ALL
        .iter()
        .map(|&g| P_OMEGAS.iter().map(|&omega| local_fixed_dim(omega, g)).collect())
        .collect()
}

/// One row of the general-type matrix.  The multiplicity series of the
/// merged columns agree, and the fixed-vector columns satisfy
/// `IIIa = VIa + VIb` and `VII = VIIIa + VIIIb`, which is asserted here.
fn g_row(g: GroupLabel) -> Vec<i64> {
    let d = |omega: OmegaLabel| local_fixed_dim(omega, g);
    assert_eq!(d(IIIa), d(VIa) + d(VIb), "merged column IIIa for {g}");
    assert_eq!(d(VII), d(VIIIa) + d(VIIIb), "merged column VII for {g}");
    vec![
        d(I),
        d(IIa),
        d(IIIa),
        d(IVa),
        d(Va) + d(Vastar),
        d(VII),
        d(IXa),
        d(X),
        d(XIa),
        d(Sc16),
    ]
}

/// The 10 x 10 coefficient matrix of the general-type system.
pub fn g_matrix() -> Vec<Vec<i64>> {
    g_rows().into_iter().map(g_row).collect()
}

/// The held-back level-4 Klingen row of the general-type system.
pub fn klingen4_g_row() -> Vec<i64> {
    g_row(GroupLabel::Klingen4)
}
