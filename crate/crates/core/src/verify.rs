//! Named verification checks over every recomputed table and series, for
//! consumption by the command-line tool and the acceptance suite.

use crate::arthur::{
    assemble_full_counts, full_system_holds, g_system_det, klingen4_mk_derived,
    klingen4_sk_derived, klingen4_skg_derived, skg_count_series, skp_count_series,
    skp_series_derived, solve_g_counts, solve_g_counts_dropping,
};
use crate::exactmath::{rat, ratio, Rational};
use crate::globaldims::{
    codim_series, elliptic_cusp_series, mk_series, printed_codim_series, sk_series, skg_series,
    skp_series,
};
use crate::groups::GroupLabel;
use crate::jacobi::{
    cohen_h, divide_by_240_g4, eisenstein_jacobi, fj_rank, gritsenko_lift, jacobi_rank, phi_basis,
    theta_eighth,
};
use crate::localreps::{g_rows, G_COLUMNS, LOCALDIM_GOLDEN};
use crate::s6::{
    character_table, cycle_type_counts, sp4_f2, CONJUGACY_GOLDEN, FIXED_DIM_GOLDEN,
};
use num_traits::Zero;

/// Outcome of one verification check.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Verification scopes selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    S6,
    LocalDim,
    Codim,
    Systems,
    Klingen4,
    Appendix,
    All,
}

impl Scope {
    pub const ALL: [Scope; 7] = [
        Scope::S6,
        Scope::LocalDim,
        Scope::Codim,
        Scope::Systems,
        Scope::Klingen4,
        Scope::Appendix,
        Scope::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::S6 => "s6",
            Scope::LocalDim => "localdim",
            Scope::Codim => "codim",
            Scope::Systems => "systems",
            Scope::Klingen4 => "klingen4",
            Scope::Appendix => "appendix",
            Scope::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Scope> {
        Scope::ALL.into_iter().find(|sc| sc.name() == s)
    }
}

/// Runs every check in the scope and returns the report.
pub fn run_scope(scope: Scope) -> Vec<Check> {
    match scope {
        Scope::S6 => check_s6(),
        Scope::LocalDim => check_localdim(),
        Scope::Codim => check_codim(),
        Scope::Systems => check_systems(),
        Scope::Klingen4 => check_klingen4(),
        Scope::Appendix => check_appendix(),
        Scope::All => {
            let mut out = Vec::new();
            out.extend(check_s6());
            out.extend(check_localdim());
            out.extend(check_codim());
            out.extend(check_systems());
            out.extend(check_klingen4());
            out.extend(check_appendix());
            out
        }
    }
}

fn check_s6() -> Vec<Check> {
    let mut out = Vec::new();
    let order = sp4_f2().len();
    out.push(Check::new(
        "s6.group-order",
        order == 720,
        format!("symplectic group over F2 has {order} elements (want 720)"),
    ));
    let table = character_table();
    out.push(Check::new(
        "s6.orthogonality",
        table.orthogonality_holds(),
        "row and column orthogonality of the character table",
    ));
    for (g, want) in CONJUGACY_GOLDEN {
        let got = cycle_type_counts(g).unwrap();
        let ok = got == want;
        out.push(Check::new(
            format!("s6.conjugacy.{}", g.name()),
            ok,
            if ok {
                "cycle-type counts match".to_string()
            } else {
                format!("got {got:?}, want {want:?}")
            },
        ));
    }
    for (g, want) in FIXED_DIM_GOLDEN {
        let got: Vec<i64> = (0..11)
            .map(|i| crate::s6::fixed_dim(i, g).unwrap())
            .collect();
        let ok = got == want;
        out.push(Check::new(
            format!("s6.fixed.{}", g.name()),
            ok,
            if ok {
                "fixed-vector dimensions match".to_string()
            } else {
                format!("got {got:?}, want {want:?}")
            },
        ));
        // Fixed vectors in the regular module: dimensions weighted by the
        // irreducible dimensions sum to the index of the subgroup.
        let subgroup = crate::s6::subgroup_members(g).unwrap();
        let sum: i64 = (0..11)
            .map(|i| table.dimension(i) * crate::s6::fixed_dim(i, g).unwrap())
            .sum();
        let ok = sum as usize * subgroup.len() == 720;
        out.push(Check::new(
            format!("s6.regular-module.{}", g.name()),
            ok,
            format!("sum dim*fixed = {sum}, subgroup order {}", subgroup.len()),
        ));
    }
    out
}

fn check_localdim() -> Vec<Check> {
    let mut out = Vec::new();
    let table = crate::localreps::dim_table();
    for (i, record) in crate::localreps::catalogue().iter().enumerate() {
        let ok = table[i] == LOCALDIM_GOLDEN[i];
        out.push(Check::new(
            format!("localdim.row.{}", record.label.name()),
            ok,
            if ok {
                "all 11 fixed-vector dimensions match".to_string()
            } else {
                format!("got {:?}, want {:?}", table[i], LOCALDIM_GOLDEN[i])
            },
        ));
        let restriction_sum: i64 = record
            .restriction
            .iter()
            .enumerate()
            .map(|(j, m)| m * character_table().dimension(j))
            .sum();
        let ok = restriction_sum == table[i][0];
        out.push(Check::new(
            format!("localdim.restriction.{}", record.label.name()),
            ok,
            format!(
                "restriction dimension {restriction_sum} vs principal congruence column {}",
                table[i][0]
            ),
        ));
    }
    out
}

fn check_codim() -> Vec<Check> {
    let mut out = Vec::new();
    for g in GroupLabel::ALL {
        let derived = codim_series(g);
        let printed = printed_codim_series(g);
        out.push(Check::new(
            format!("codim.series.{}", g.name()),
            derived.equal(&printed),
            format!("derived {derived} vs printed {printed}"),
        ));
        // M - S equals the codimension series at even weights from 6 on,
        // the constant boundary count at weight 4, and zero at odd weights.
        let order = 40;
        let m = mk_series(g).expand(order);
        let s = sk_series(g).expand(order);
        let c = derived.expand(order);
        let delta = crate::globaldims::codim_params(g).3;
        let mut ok = true;
        let mut detail = String::from("M - S consistent through weight 40");
        for k in 1..=order {
            let diff = m.coeff(k) - s.coeff(k);
            let want = if k % 2 == 1 {
                Rational::zero()
            } else if k == 2 {
                continue;
            } else if k == 4 {
                rat(delta)
            } else {
                c.coeff(k).clone()
            };
            if diff != want {
                ok = false;
                detail = format!("mismatch at weight {k}: difference {diff}, expected {want}");
                break;
            }
        }
        out.push(Check::new(format!("codim.consistency.{}", g.name()), ok, detail));
    }
    out
}

fn check_systems() -> Vec<Check> {
    let mut out = Vec::new();
    // Counts of the non-tempered types against newform dimensions for the
    // degree-one groups of level 1, 2, 4.
    let s1 = elliptic_cusp_series(1).expand(78);
    let s2 = elliptic_cusp_series(2).expand(78);
    let s4 = elliptic_cusp_series(4).expand(78);
    let counts: Vec<_> = (0..6).map(|i| skp_count_series(i).expand(40)).collect();
    let mut ok = true;
    let mut detail = String::from("lift counts match newform dimensions through weight 40");
    for k in 2..=40usize {
        let w = 2 * k - 2;
        let full1 = s1.coeff_i64(w);
        let new2 = s2.coeff_i64(w) - 2 * full1;
        let new4 = s4.coeff_i64(w) - 2 * s2.coeff_i64(w) + full1;
        let even = k % 2 == 0;
        let checks = [
            (counts[0].coeff_i64(k), if even { full1 } else { 0 }),
            (
                counts[1].coeff_i64(k) + counts[2].coeff_i64(k),
                if even { new2 } else { 0 },
            ),
            (
                counts[3].coeff_i64(k) + counts[5].coeff_i64(k),
                if even { 0 } else { new2 },
            ),
            (counts[4].coeff_i64(k), if even { 0 } else { new4 }),
        ];
        if let Some((got, want)) = checks.iter().find(|(a, b)| a != b) {
            ok = false;
            detail = format!("mismatch at weight {k}: got {got}, want {want}");
            break;
        }
    }
    out.push(Check::new("systems.lift-counts", ok, detail));
    for g in GroupLabel::ALL {
        let derived = skp_series_derived(g);
        let printed = skp_series(g);
        out.push(Check::new(
            format!("systems.skp.{}", g.name()),
            derived.equal(&printed),
            format!("derived {derived} vs printed {printed}"),
        ));
    }
    let det = g_system_det();
    out.push(Check::new(
        "systems.g-determinant",
        !det.is_zero(),
        format!("determinant of the 10x10 system is {det}"),
    ));
    let sols = solve_g_counts();
    for (i, sol) in sols.iter().enumerate() {
        let printed = skg_count_series(i);
        out.push(Check::new(
            format!("systems.g-count.{}", G_COLUMNS[i]),
            sol.equal(&printed),
            format!("solved {sol} vs printed {printed}"),
        ));
    }
    for g in g_rows() {
        let derived = &sk_series(g) - &skp_series_derived(g);
        let printed = skg_series(g);
        out.push(Check::new(
            format!("systems.skg.{}", g.name()),
            derived.equal(&printed),
            format!("derived {derived} vs printed {printed}"),
        ));
    }
    for (g, ok) in full_system_holds() {
        out.push(Check::new(
            format!("systems.full.{}", g.name()),
            ok,
            "fixed-vector row applied to assembled counts reproduces the cusp series",
        ));
    }
    let baseline = solve_g_counts();
    let mut solvable = 0;
    let mut stable = true;
    for dropped in g_rows() {
        if let Ok(alt) = solve_g_counts_dropping(dropped) {
            solvable += 1;
            if !baseline.iter().zip(&alt).all(|(a, b)| a.equal(b)) {
                stable = false;
            }
        }
    }
    out.push(Check::new(
        "systems.row-exchange",
        stable && solvable >= 8,
        format!("{solvable} of 10 row swaps solvable, all agreeing with the baseline"),
    ));
    let n_counts = assemble_full_counts().len();
    out.push(Check::new(
        "systems.count-columns",
        n_counts == 19,
        format!("{n_counts} columns assembled (want 19)"),
    ));
    out
}

fn check_klingen4() -> Vec<Check> {
    let mut out = Vec::new();
    let g = GroupLabel::Klingen4;
    let pairs = [
        ("klingen4.skg", klingen4_skg_derived(), skg_series(g)),
        ("klingen4.sk", klingen4_sk_derived(), sk_series(g)),
        ("klingen4.mk", klingen4_mk_derived(), mk_series(g)),
    ];
    for (id, derived, printed) in pairs {
        out.push(Check::new(
            id,
            derived.equal(&printed),
            format!("derived {derived} vs printed {printed}"),
        ));
    }
    let m = klingen4_mk_derived().expand(12);
    let s = klingen4_sk_derived().expand(12);
    let spots = [
        ("klingen4.m2", m.coeff_i64(2), 0),
        ("klingen4.m4", m.coeff_i64(4), 4),
        ("klingen4.s7", s.coeff_i64(7), 1),
        ("klingen4.s12", s.coeff_i64(12), 19),
        ("klingen4.m12", m.coeff_i64(12), 36),
    ];
    for (id, got, want) in spots {
        out.push(Check::new(id, got == want, format!("got {got}, want {want}")));
    }
    out
}

fn check_appendix() -> Vec<Check> {
    let mut out = Vec::new();
    let push = |out: &mut Vec<Check>, id: &str, ok: bool, detail: String| {
        out.push(Check::new(id, ok, detail));
    };
    let h = cohen_h(3, 3) / cohen_h(3, 0);
    push(
        &mut out,
        "appendix.cohen",
        h == rat(56) && cohen_h(3, 4) / cohen_h(3, 0) == rat(126),
        "index-one Eisenstein coefficient ratios 56 and 126".to_string(),
    );
    let [phi0, phi1, phi2, phi3] = phi_basis(8);
    let phi0_q1: Vec<(i64, Rational)> = phi0.q_slice(1);
    push(
        &mut out,
        "appendix.phi0-q1",
        phi0_q1
            == vec![
                (2, rat(1)),
                (1, rat(56)),
                (0, rat(126)),
                (-1, rat(56)),
                (-2, rat(1)),
            ],
        format!("{phi0_q1:?}"),
    );
    push(
        &mut out,
        "appendix.phi1-q1",
        phi1.q_slice(1)
            == vec![
                (4, rat(1)),
                (2, rat(56)),
                (0, rat(126)),
                (-2, rat(56)),
                (-4, rat(1)),
            ],
        "first coefficient row of the rescaled doubling image".to_string(),
    );
    push(
        &mut out,
        "appendix.phi2-q1",
        phi2.q_slice(1)
            == vec![
                (2, rat(14)),
                (1, rat(64)),
                (0, rat(84)),
                (-1, rat(64)),
                (-2, rat(14)),
            ],
        "first coefficient row of the index-two form".to_string(),
    );
    push(
        &mut out,
        "appendix.phi3-q1",
        phi3.coeff(1, 0) == ratio(574, 9) && phi3.coeff(1, 4) == ratio(1, 9),
        "first coefficient row of the twice-raised form".to_string(),
    );
    let theta8 = theta_eighth(4);
    let expect = phi1.sub(&phi3).scale(&ratio(9, 8));
    let theta_ok = (0..=4).all(|n| {
        (-8i64..=8).all(|r| theta8.coeff(n, r) == expect.coeff(n, r))
    }) && theta8.coeff(0, 0).is_zero();
    push(
        &mut out,
        "appendix.theta8",
        theta_ok,
        "eighth power of the odd theta series equals 9/8 of the difference".to_string(),
    );
    let lifts: Vec<_> = [&phi0, &phi1, &phi2, &phi3]
        .iter()
        .map(|p| gritsenko_lift(p, 4))
        .collect();
    push(
        &mut out,
        "appendix.lift-rank",
        fj_rank(&lifts) == 4 && fj_rank(&lifts[1..]) == 3,
        "four independent lifts, three at the intermediate level".to_string(),
    );
    let g1 = gritsenko_lift(&phi1, 8);
    let g2 = gritsenko_lift(&phi2, 8);
    let g3 = gritsenko_lift(&phi3, 8);
    let products = vec![
        g1.mul(&g1),
        g1.mul(&g2),
        g1.mul(&g3),
        g2.mul(&g2),
        g2.mul(&g3),
        g3.mul(&g3),
    ];
    let r = fj_rank(&products);
    push(
        &mut out,
        "appendix.product-rank",
        r == 6,
        format!("pairwise products span rank {r} (want 6)"),
    );
    let quotient = divide_by_240_g4(&phi2.mul(&phi2));
    let q1_ok = quotient.q_slice(1)
        == vec![
            (2, rat(28)),
            (1, rat(128)),
            (0, rat(-72)),
            (-1, rat(128)),
            (-2, rat(28)),
        ];
    let q2 = quotient.q_slice(2);
    let q2_ok = q2.first() == Some(&(4, rat(198))) && quotient.coeff(2, 1) == rat(-17280);
    push(
        &mut out,
        "appendix.quotient-rows",
        q1_ok && q2_ok,
        "formal quotient by the weight-4 Eisenstein series matches".to_string(),
    );
    push(
        &mut out,
        "appendix.quotient-rank",
        jacobi_rank(&[&phi1, &phi3, &quotient]) == 3,
        "the formal quotient is outside the holomorphic span".to_string(),
    );
    // Known dimensions of the weight-4 Jacobi spaces at indices 1, 2, 4;
    // the families at hand realize them.
    push(
        &mut out,
        "appendix.jacobi-dims",
        jacobi_rank(&[&phi0]) == 1
            && jacobi_rank(&[&phi2]) == 1
            && jacobi_rank(&[&phi1, &phi3, &theta8]) == 2,
        "weight-4 spaces of index 1, 2, 4 have dimensions 1, 1, 2".to_string(),
    );
    let g4 = eisenstein_jacobi(4, 2);
    let p23 = g2.mul(&g3);
    let qm = p23.slots[4].qmax.min(g4.qmax);
    let want = g4.mul(&phi3).scale(&rat(10)).truncate(qm);
    let got = p23.slots[4].truncate(qm);
    push(
        &mut out,
        "appendix.product-entry",
        got == want,
        "index-4 slot of the mixed product is ten times the expected form".to_string(),
    );
    out
}
