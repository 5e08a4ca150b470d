//! Character theory of the symmetric group on six letters and its
//! identification with the symplectic group of rank two over the field with
//! two elements.
//!
//! The character table is computed from scratch by the Murnaghan–Nakayama
//! rule.  The symplectic group is enumerated by brute force over all 4x4
//! bit matrices, and the exceptional isomorphism with the symmetric group is
//! realized explicitly through the permutation action on a six-dimensional
//! quadratic space over the two-element field.  From these we recover, for
//! each of the finite pattern subgroups attached to our congruence groups,
//! the number of elements of each cycle type and the dimension of the space
//! of fixed vectors in each irreducible character.

use std::collections::HashMap;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::groups::GroupLabel;

/// A partition of 6, parts in weakly decreasing order.
pub type Partition = Vec<usize>;

/// The eleven cycle types, in the column order of the conjugacy-count table:
/// identity first, then by increasing largest cycle.
pub fn class_order() -> Vec<Partition> {
    vec![
        vec![1, 1, 1, 1, 1, 1],
        vec![2, 1, 1, 1, 1],
        vec![2, 2, 1, 1],
        vec![2, 2, 2],
        vec![3, 1, 1, 1],
        vec![3, 2, 1],
        vec![3, 3],
        vec![4, 1, 1],
        vec![4, 2],
        vec![5, 1],
        vec![6],
    ]
}

/// The eleven irreducible characters, in the column order of the
/// fixed-vector table.
pub fn irrep_order() -> Vec<Partition> {
    vec![
        vec![6],
        vec![5, 1],
        vec![4, 2],
        vec![4, 1, 1],
        vec![3, 3],
        vec![3, 2, 1],
        vec![3, 1, 1, 1],
        vec![2, 2, 2],
        vec![2, 2, 1, 1],
        vec![2, 1, 1, 1, 1],
        vec![1, 1, 1, 1, 1, 1],
    ]
}

/// Number of permutations of the given cycle type in the full symmetric
/// group on six letters.
pub fn class_size(cycle_type: &[usize]) -> i64 {
    let mut centralizer: i64 = 1;
    let mut mult: HashMap<usize, i64> = HashMap::new();
    for &j in cycle_type {
        *mult.entry(j).or_insert(0) += 1;
    }
    for (j, m) in mult {
        centralizer *= (j as i64).pow(m as u32);
        for i in 1..=m {
            centralizer *= i;
        }
    }
    720 / centralizer
}

/// Character value by the Murnaghan–Nakayama rule, in the beta-number
/// (abacus) encoding: removing a border strip of length `t` moves a bead
/// from position `b` to the empty position `b - t`, with sign given by the
/// number of beads jumped over.
fn strip_char(betas: u64, rho: &[usize]) -> i64 {
    let Some((&t, rest)) = rho.split_first() else {
        return 1;
    };
    let mut total = 0;
    for b in t..64 {
        if betas >> b & 1 == 1 && betas >> (b - t) & 1 == 0 {
            let between = if t > 1 {
                ((betas >> (b - t + 1)) & ((1u64 << (t - 1)) - 1)).count_ones()
            } else {
                0
            };
            let sign = if between % 2 == 0 { 1 } else { -1 };
            let moved = (betas & !(1 << b)) | (1 << (b - t));
            total += sign * strip_char(moved, rest);
        }
    }
    total
}

/// Value of the irreducible character labelled by `lambda` on the class of
/// cycle type `rho`.
pub fn character_value(lambda: &[usize], rho: &[usize]) -> i64 {
    let mut betas: u64 = 0;
    for i in 0..6 {
        let part = lambda.get(i).copied().unwrap_or(0);
        betas |= 1 << (part + 5 - i);
    }
    strip_char(betas, rho)
}

/// The full character table, rows indexed by `irrep_order`, columns by
/// `class_order`.
pub struct CharacterTable {
    pub classes: Vec<Partition>,
    pub class_sizes: Vec<i64>,
    pub irreps: Vec<Partition>,
    /// `values[i][c]` is the value of irrep `i` on class `c`.
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    fn build() -> CharacterTable {
        let classes = class_order();
        let irreps = irrep_order();
        let class_sizes: Vec<i64> = classes.iter().map(|c| class_size(c)).collect();
        assert_eq!(class_sizes.iter().sum::<i64>(), 720);
        let values: Vec<Vec<i64>> = irreps
            .iter()
            .map(|l| classes.iter().map(|c| character_value(l, c)).collect())
            .collect();
        let table = CharacterTable {
            classes,
            class_sizes,
            irreps,
            values,
        };
        table.check_orthogonality();
        table
    }

    /// First and second orthogonality relations; any transcription or
    /// computation error in the table trips these.
    fn check_orthogonality(&self) {
        for i in 0..11 {
            for j in 0..11 {
                let dot: i64 = (0..11)
                    .map(|c| self.class_sizes[c] * self.values[i][c] * self.values[j][c])
                    .sum();
                assert_eq!(dot, if i == j { 720 } else { 0 }, "row orthogonality {i},{j}");
            }
        }
        for c in 0..11 {
            for d in 0..11 {
                let dot: i64 = (0..11).map(|i| self.values[i][c] * self.values[i][d]).sum();
                let expect = if c == d { 720 / self.class_sizes[c] } else { 0 };
                assert_eq!(dot, expect, "column orthogonality {c},{d}");
            }
        }
    }

    /// Dimension of the `i`-th irreducible, its value on the identity.
    pub fn dimension(&self, i: usize) -> i64 {
        self.values[i][0]
    }

    /// Non-panicking re-check of the first orthogonality relation.
    pub fn orthogonality_holds(&self) -> bool {
        (0..11).all(|i| {
            (0..11).all(|j| {
                let dot: i64 = (0..11)
                    .map(|c| self.class_sizes[c] * self.values[i][c] * self.values[j][c])
                    .sum();
                dot == if i == j { 720 } else { 0 }
            })
        })
    }

    /// Index of a cycle type in the class order.
    pub fn class_index(&self, cycle_type: &[usize]) -> usize {
        self.classes
            .iter()
            .position(|c| c == cycle_type)
            .expect("valid cycle type")
    }

    /// Index of a partition in the irrep order.
    pub fn irrep_index(&self, lambda: &[usize]) -> usize {
        self.irreps
            .iter()
            .position(|l| l == lambda)
            .expect("valid partition")
    }
}

pub fn character_table() -> &'static CharacterTable {
    static TABLE: OnceLock<CharacterTable> = OnceLock::new();
    TABLE.get_or_init(CharacterTable::build)
}

/// A 4x4 matrix over the two-element field, bit `4r + c` holding entry
/// `(r, c)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mat4(pub u16);

impl Mat4 {
    pub const IDENTITY: Mat4 = Mat4(0b1000_0100_0010_0001);
    /// The symplectic form: ones on the antidiagonal (signs vanish in
    /// characteristic two).
    pub const J: Mat4 = Mat4(0b0001_0010_0100_1000);

    pub fn get(self, r: usize, c: usize) -> bool {
        self.0 >> (4 * r + c) & 1 == 1
    }

    pub fn from_rows(rows: [[u8; 4]; 4]) -> Mat4 {
        let mut bits: u16 = 0;
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    bits |= 1 << (4 * r + c);
                }
            }
        }
        Mat4(bits)
    }

    pub fn mul(self, rhs: Mat4) -> Mat4 {
        let mut bits: u16 = 0;
        for r in 0..4 {
            for c in 0..4 {
                let mut e = false;
                for k in 0..4 {
                    e ^= self.get(r, k) & rhs.get(k, c);
                }
                if e {
                    bits |= 1 << (4 * r + c);
                }
            }
        }
        Mat4(bits)
    }

    pub fn transpose(self) -> Mat4 {
        let mut bits: u16 = 0;
        for r in 0..4 {
            for c in 0..4 {
                if self.get(r, c) {
                    bits |= 1 << (4 * c + r);
                }
            }
        }
        Mat4(bits)
    }

    pub fn is_symplectic(self) -> bool {
        self.transpose().mul(Mat4::J).mul(self) == Mat4::J
    }
}

/// All 720 elements of the symplectic group over the two-element field,
/// found by exhausting the 65536 bit matrices.
pub fn sp4_f2() -> &'static Vec<Mat4> {
    static GROUP: OnceLock<Vec<Mat4>> = OnceLock::new();
    GROUP.get_or_init(|| {
        let g: Vec<Mat4> = (0..=u16::MAX)
            .map(Mat4)
            .filter(|m| m.is_symplectic())
            .collect();
        assert_eq!(g.len(), 720);
        g
    })
}

/// A permutation of {0, ..., 5}; `0[i]` is the image of `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Perm(pub [u8; 6]);

impl Perm {
    pub fn identity() -> Perm {
        Perm([0, 1, 2, 3, 4, 5])
    }

    /// Composition acting on the left: `(self * rhs)(i) = self(rhs(i))`.
    pub fn compose(self, rhs: Perm) -> Perm {
        let mut out = [0u8; 6];
        for i in 0..6 {
            out[i] = self.0[rhs.0[i] as usize];
        }
        Perm(out)
    }

    /// Cycle type as a partition of 6.
    pub fn cycle_type(self) -> Partition {
        let mut seen = [false; 6];
        let mut parts = Vec::new();
        for start in 0..6 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

/// Vectors in a six-dimensional space over the two-element field, one bit
/// per coordinate.  The permutation group acts by permuting coordinates; the
/// subspace of even-weight vectors modulo the all-ones vector is a
/// four-dimensional symplectic space with basis `E1, E2, F2, F1`.
const E1: u8 = 0b000011;
const E2: u8 = 0b110000;
const F2: u8 = 0b011000;
const F1: u8 = 0b000110;
const ALL_ONES: u8 = 0b111111;
const BASIS: [u8; 4] = [E1, E2, F2, F1];

fn apply_perm(p: Perm, v: u8) -> u8 {
    let mut out = 0u8;
    for i in 0..6 {
        if v >> i & 1 == 1 {
            out |= 1 << p.0[i];
        }
    }
    out
}

/// Coordinates of an even-weight vector modulo the all-ones vector, in the
/// symplectic basis.  Resolved by brute force over the 16 combinations.
fn coords_mod_radical(w: u8) -> u8 {
    for x in 0u8..16 {
        let mut combo = 0u8;
        for (i, &b) in BASIS.iter().enumerate() {
            if x >> i & 1 == 1 {
                combo ^= b;
            }
        }
        if combo == w || combo == w ^ ALL_ONES {
            return x;
        }
    }
    panic!("vector {w:06b} is not in the even-weight subspace");
}

/// The symplectic matrix of a permutation: column `j` holds the coordinates
/// of the image of the `j`-th basis vector.
pub fn perm_to_mat(p: Perm) -> Mat4 {
    let mut bits: u16 = 0;
    for (j, &b) in BASIS.iter().enumerate() {
        let x = coords_mod_radical(apply_perm(p, b));
        for r in 0..4 {
            if x >> r & 1 == 1 {
                bits |= 1 << (4 * r + j);
            }
        }
    }
    Mat4(bits)
}

/// The realized isomorphism: all 720 pairs (permutation, symplectic matrix),
/// together with the inverse lookup.
pub struct Isomorphism {
    pub pairs: Vec<(Perm, Mat4)>,
    mat_to_perm: HashMap<Mat4, Perm>,
}

impl Isomorphism {
    fn build() -> Isomorphism {
        let pairs: Vec<(Perm, Mat4)> = (0u8..6)
            .permutations(6)
            .map(|v| {
                let p = Perm(v.try_into().unwrap());
                (p, perm_to_mat(p))
            })
            .collect();
        assert_eq!(pairs.len(), 720);
        let mut mat_to_perm = HashMap::new();
        for &(p, m) in &pairs {
            assert!(m.is_symplectic(), "image of {p:?} is not symplectic");
            assert!(
                mat_to_perm.insert(m, p).is_none(),
                "map is not injective at {p:?}"
            );
        }
        Isomorphism { pairs, mat_to_perm }
    }

    pub fn perm_of(&self, m: Mat4) -> Perm {
        self.mat_to_perm[&m]
    }
}

pub fn isomorphism() -> &'static Isomorphism {
    static ISO: OnceLock<Isomorphism> = OnceLock::new();
    ISO.get_or_init(Isomorphism::build)
}

/// The image of a congruence subgroup in the symplectic group over the
/// two-element field, cut out by an entry pattern and, for one group, an
/// extra determinant-block condition.
struct SubgroupPattern {
    mask: Mat4,
    /// Restricts the lower-right block to the rotation subgroup (the three
    /// elements of order dividing 3) of the invertible 2x2 matrices.
    rotation_block: bool,
}

fn subgroup_pattern(label: GroupLabel) -> Option<SubgroupPattern> {
    let rows = match label {
        GroupLabel::Gamma2 => [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        GroupLabel::Sp4Z => [[1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1]],
        GroupLabel::K4 => [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]],
        GroupLabel::Gamma0p2 => [[1, 1, 1, 1], [1, 1, 1, 1], [0, 0, 1, 1], [0, 0, 1, 1]],
        GroupLabel::Gamma0p4 | GroupLabel::Gamma0star4 => {
            [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]]
        }
        GroupLabel::Klingen2 => [[1, 1, 1, 1], [0, 1, 1, 1], [0, 1, 1, 1], [0, 0, 0, 1]],
        GroupLabel::M4 => [[1, 0, 0, 0], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]],
        GroupLabel::B2 => [[1, 1, 1, 1], [0, 1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 1]],
        GroupLabel::K2 | GroupLabel::Klingen4 => return None,
    };
    Some(SubgroupPattern {
        mask: Mat4::from_rows(rows),
        rotation_block: label == GroupLabel::Gamma0star4,
    })
}

fn lower_right_block_is_rotation(g: Mat4) -> bool {
    let d = (
        g.get(2, 2) as u8,
        g.get(2, 3) as u8,
        g.get(3, 2) as u8,
        g.get(3, 3) as u8,
    );
    matches!(d, (1, 0, 0, 1) | (0, 1, 1, 1) | (1, 1, 1, 0))
}

/// Elements of the pattern subgroup attached to a congruence group, or
/// `None` for the two groups with no such pattern.
pub fn subgroup_members(label: GroupLabel) -> Option<Vec<Mat4>> {
    let pattern = subgroup_pattern(label)?;
    Some(
        sp4_f2()
            .iter()
            .copied()
            .filter(|g| {
                g.0 & !pattern.mask.0 == 0
                    && (!pattern.rotation_block || lower_right_block_is_rotation(*g))
            })
            .collect(),
    )
}

/// Number of elements of each cycle type (in class order) in the pattern
/// subgroup attached to a congruence group.
pub fn cycle_type_counts(label: GroupLabel) -> Option<Vec<i64>> {
    let members = subgroup_members(label)?;
    let iso = isomorphism();
    let table = character_table();
    let mut counts = vec![0i64; 11];
    for m in members {
        counts[table.class_index(&iso.perm_of(m).cycle_type())] += 1;
    }
    Some(counts)
}

/// Averaged character: `(1/|H|) sum_mu counts(mu) chi(mu)`.  Panics if the
/// sum is not divisible by the group order (it always is for a character).
fn average(values: &[i64], counts: &[i64]) -> i64 {
    let order: i64 = counts.iter().sum();
    let dot: i64 = values.iter().zip(counts).map(|(v, c)| v * c).sum();
    assert_eq!(dot % order, 0, "character average is not an integer");
    dot / order
}

/// Dimension of the space of fixed vectors of the pattern subgroup in the
/// irrep with the given index.
pub fn fixed_dim(irrep_idx: usize, label: GroupLabel) -> Option<i64> {
    let counts = cycle_type_counts(label)?;
    Some(average(&character_table().values[irrep_idx], &counts))
}

/// Multiplicity of one character in the restriction of a product of two
/// others: `(1/|H|) sum_mu counts(mu) chi(mu) psi(mu)` (all characters here
/// are rational-valued).
pub fn multiplicity(chi: &[i64], psi: &[i64], counts: &[i64]) -> i64 {
    let product: Vec<i64> = chi.iter().zip(psi).map(|(a, b)| a * b).collect();
    average(&product, counts)
}

/// Conjugacy-count table rows as printed, for cross-checking the
/// recomputation.  Row order follows `GroupLabel::ALL` restricted to the
/// nine groups with a reduction pattern.
pub const CONJUGACY_GOLDEN: [(GroupLabel, [i64; 11]); 9] = [
    (GroupLabel::Gamma2, [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (GroupLabel::Sp4Z, [1, 15, 45, 15, 40, 120, 40, 90, 90, 144, 120]),
    (GroupLabel::K4, [1, 6, 9, 0, 4, 12, 4, 0, 0, 0, 0]),
    (GroupLabel::Gamma0p2, [1, 3, 9, 7, 0, 0, 8, 6, 6, 0, 8]),
    (GroupLabel::Gamma0p4, [1, 0, 0, 3, 0, 0, 2, 0, 0, 0, 0]),
    (GroupLabel::Gamma0star4, [1, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0]),
    (GroupLabel::Klingen2, [1, 7, 9, 3, 8, 8, 0, 6, 6, 0, 0]),
    (GroupLabel::M4, [1, 4, 3, 0, 2, 2, 0, 0, 0, 0, 0]),
    (GroupLabel::B2, [1, 3, 5, 3, 0, 0, 0, 2, 2, 0, 0]),
];

/// Fixed-vector table rows as printed (columns in irrep order).
pub const FIXED_DIM_GOLDEN: [(GroupLabel, [i64; 11]); 9] = [
    (GroupLabel::Gamma2, [1, 5, 9, 10, 5, 16, 10, 5, 9, 5, 1]),
    (GroupLabel::Sp4Z, [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (GroupLabel::K4, [1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0]),
    (GroupLabel::Gamma0p2, [1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0]),
    (GroupLabel::Gamma0p4, [1, 0, 3, 1, 0, 2, 3, 3, 0, 1, 0]),
    (GroupLabel::Gamma0star4, [1, 1, 3, 4, 3, 4, 4, 3, 3, 1, 1]),
    (GroupLabel::Klingen2, [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (GroupLabel::M4, [1, 2, 2, 1, 1, 1, 0, 0, 0, 0, 0]),
    (GroupLabel::B2, [1, 1, 2, 0, 0, 1, 0, 1, 0, 0, 0]),
];
