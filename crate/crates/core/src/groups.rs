//! Labels for the eleven congruence subgroups under consideration, in the
//! fixed order used by every table and matrix in this crate.

use std::fmt;

/// The eleven groups of level dividing 4, in canonical row order.
///
/// `K2` and `K4` are the paramodular groups of level 2 and 4, `Klingen2` and
/// `Klingen4` the Klingen congruence subgroups, `M4` the intersection of the
/// level-4 paramodular and Klingen groups, and `B2` the Borel congruence
/// subgroup of level 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GroupLabel {
    Gamma2,
    Sp4Z,
    K2,
    K4,
    Gamma0p2,
    Gamma0p4,
    Gamma0star4,
    Klingen2,
    Klingen4,
    M4,
    B2,
}

impl GroupLabel {
    pub const ALL: [GroupLabel; 11] = [
        GroupLabel::Gamma2,
        GroupLabel::Sp4Z,
        GroupLabel::K2,
        GroupLabel::K4,
        GroupLabel::Gamma0p2,
        GroupLabel::Gamma0p4,
        GroupLabel::Gamma0star4,
        GroupLabel::Klingen2,
        GroupLabel::Klingen4,
        GroupLabel::M4,
        GroupLabel::B2,
    ];

    /// Index in the canonical row order.
    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&g| g == self).unwrap()
    }

    /// Identifier used on the command line and in serialized output.
    pub fn name(self) -> &'static str {
        match self {
            GroupLabel::Gamma2 => "Gamma2",
            GroupLabel::Sp4Z => "Sp4Z",
            GroupLabel::K2 => "K2",
            GroupLabel::K4 => "K4",
            GroupLabel::Gamma0p2 => "Gamma0p2",
            GroupLabel::Gamma0p4 => "Gamma0p4",
            GroupLabel::Gamma0star4 => "Gamma0star4",
            GroupLabel::Klingen2 => "Klingen2",
            GroupLabel::Klingen4 => "Klingen4",
            GroupLabel::M4 => "M4",
            GroupLabel::B2 => "B2",
        }
    }

    pub fn parse(s: &str) -> Option<GroupLabel> {
        Self::ALL.iter().copied().find(|g| g.name() == s)
    }

    /// Whether the group surjects onto a proper pattern subgroup of the
    /// symplectic group over the field with two elements.  The level-2
    /// paramodular group and the level-4 Klingen group do not reduce to such
    /// a pattern; their fixed-vector columns come from direct computation.
    pub fn has_reduction_pattern(self) -> bool {
        !matches!(self, GroupLabel::K2 | GroupLabel::Klingen4)
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}
