use proptest::prelude::*;

use super::*;
use ratfun::rf;

fn poly(terms: &[(i64, usize)]) -> Polynomial {
    Polynomial::from_terms(terms)
}

#[test]
fn polynomial_divrem_roundtrip() {
    let a = poly(&[(1, 0), (-3, 2), (2, 5)]);
    let b = poly(&[(1, 0), (1, 1)]);
    let (q, r) = a.divrem(&b).unwrap();
    assert_eq!(&q * &b + r, a);
}

#[test]
fn gcd_of_cyclotomic_style_factors() {
    let a = poly(&[(1, 0), (-1, 4)]); // 1 - t^4
    let b = poly(&[(1, 0), (-1, 2)]); // 1 - t^2
    let g = a.gcd(&b);
    // gcd is monic, so (t^2 - 1); same factor up to sign.
    assert_eq!(g, poly(&[(-1, 0), (1, 2)]));
}

#[test]
fn rational_function_canonical_form() {
    // (t^2 - 1)/(t - 1) reduces to the polynomial t + 1.
    let f = RationalFunction::new(poly(&[(-1, 0), (1, 2)]), poly(&[(-1, 0), (1, 1)])).unwrap();
    assert_eq!(f.numerator(), &poly(&[(1, 0), (1, 1)]));
    assert_eq!(f.denominator(), &Polynomial::one());
    assert_eq!(f.denominator().constant_term(), rat(1));
}

#[test]
fn pole_at_zero_is_rejected() {
    let err = RationalFunction::new(Polynomial::one(), poly(&[(1, 1)])).unwrap_err();
    assert_eq!(err, ExactMathError::ZeroConstantDenominator);
}

#[test]
fn removable_pole_at_zero_is_accepted() {
    let f = RationalFunction::new(poly(&[(1, 1)]), poly(&[(1, 1), (1, 2)])).unwrap();
    assert!(f.equal(&rf(&[(1, 0)], &[]).div(&rf(&[(1, 0), (1, 1)], &[])).unwrap()));
}

#[test]
fn geometric_series_expansion() {
    let f = rf(&[(1, 0)], &[(1, 1)]); // 1/(1-t)
    let s = f.expand(10);
    assert!(s.coeffs().iter().all(|c| c == &rat(1)));
}

#[test]
fn expansion_of_known_series() {
    // t^12/((1-t^4)(1-t^6)): counts 1 at 12, 16, 18, 20, 22, 2 at 24, ...
    let f = rf(&[(1, 12)], &[(4, 1), (6, 1)]);
    let s = f.expand(24);
    let got: Vec<i64> = (0..=24).map(|n| s.coeff_i64(n)).collect();
    let mut expect = vec![0i64; 25];
    for (n, v) in [(12, 1), (16, 1), (18, 1), (20, 1), (22, 1), (24, 2)] {
        expect[n] = v;
    }
    assert_eq!(got, expect);
}

#[test]
fn factored_denominator_display() {
    let f = rf(&[(1, 8)], &[(4, 1), (6, 1)]);
    assert_eq!(f.to_string(), "t^8 / ((1-t^4)(1-t^6))");
    let g = rf(&[(1, 6)], &[(2, 2)]);
    assert_eq!(g.to_string(), "t^6 / ((1-t^2)^2)");
}

#[test]
fn solve_small_integer_system() {
    // x + y = 1/(1-t), x - y = 1/(1+t)  =>  x = 1/(1-t^2), y = t/(1-t^2).
    let a = vec![vec![1, 1], vec![1, -1]];
    let b = vec![
        rf(&[(1, 0)], &[(1, 1)]),
        RationalFunction::new(poly(&[(1, 0)]), poly(&[(1, 0), (1, 1)])).unwrap(),
    ];
    let x = solve_linear(&a, &b).unwrap();
    assert!(x[0].equal(&rf(&[(1, 0)], &[(2, 1)])));
    assert!(x[1].equal(&rf(&[(1, 1)], &[(2, 1)])));
}

#[test]
fn singular_system_is_detected() {
    let a = vec![vec![1, 2], vec![2, 4]];
    let b = vec![RationalFunction::one(), RationalFunction::one()];
    assert_eq!(solve_linear(&a, &b).unwrap_err(), ExactMathError::SingularMatrix);
    assert_eq!(det_rational(&a).unwrap(), rat(0));
}

#[test]
fn determinant_matches_cofactor_expansion() {
    let a = vec![vec![2, 0, 1], vec![1, 3, -1], vec![0, 5, 4]];
    // 2*(12+5) - 0 + 1*(5-0) = 39.
    assert_eq!(det_rational(&a).unwrap(), rat(39));
}

#[test]
fn rank_of_rational_matrix() {
    let rows = vec![
        vec![rat(1), rat(2), rat(3)],
        vec![rat(2), rat(4), rat(6)],
        vec![rat(0), rat(1), rat(1)],
    ];
    assert_eq!(rank(&rows), 2);
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-20i64..20, 0..6)
        .prop_map(|cs| Polynomial::new(cs.into_iter().map(rat).collect()))
}

fn arb_unit_poly() -> impl Strategy<Value = Polynomial> {
    // Nonzero constant term, so usable as a denominator.
    (1i64..20, prop::collection::vec(-20i64..20, 0..5)).prop_map(|(c0, rest)| {
        let mut cs = vec![rat(c0)];
        cs.extend(rest.into_iter().map(rat));
        Polynomial::new(cs)
    })
}

proptest! {
    #[test]
    fn poly_mul_matches_expansion_pointwise(a in arb_poly(), b in arb_poly()) {
        let p = &a * &b;
        for n in 0..8usize {
            let mut conv = rat(0);
            for j in 0..=n {
                conv += a.coeff(j) * b.coeff(n - j);
            }
            prop_assert_eq!(p.coeff(n), conv);
        }
    }

    #[test]
    fn rf_canonical_form_invariants(n in arb_poly(), d in arb_unit_poly()) {
        let f = RationalFunction::new(n.clone(), d.clone()).unwrap();
        prop_assert_eq!(f.denominator().constant_term(), rat(1));
        prop_assert_eq!(
            f.numerator().gcd(f.denominator()).degree().unwrap_or(0), 0
        );
        // Cross-multiplied equality with the unreduced input.
        prop_assert_eq!(f.numerator() * &d, &n * f.denominator());
    }

    #[test]
    fn expansion_is_multiplicative(
        n1 in arb_poly(), d1 in arb_unit_poly(),
        n2 in arb_poly(), d2 in arb_unit_poly(),
    ) {
        let f = RationalFunction::new(n1, d1).unwrap();
        let g = RationalFunction::new(n2, d2).unwrap();
        let order = 8usize;
        let sf = f.expand(order);
        let sg = g.expand(order);
        let sp = (&f * &g).expand(order);
        for n in 0..=order {
            let mut conv = rat(0);
            for j in 0..=n {
                conv += sf.coeff(j) * sg.coeff(n - j);
            }
            prop_assert_eq!(sp.coeff(n), &conv);
        }
    }

    #[test]
    fn solve_then_multiply_recovers_rhs(
        seed in prop::collection::vec(-5i64..5, 9),
        rhs_exps in prop::collection::vec(0usize..6, 3),
    ) {
        let mut a: Vec<Vec<i64>> = seed.chunks(3).map(|c| c.to_vec()).collect();
        // Diagonal boost to make singularity rare but still possible.
        for i in 0..3 { a[i][i] += 7; }
        let b: Vec<RationalFunction> = rhs_exps
            .iter()
            .map(|&e| rf(&[(1, e)], &[(2, 1)]))
            .collect();
        if let Ok(x) = solve_linear(&a, &b) {
            for i in 0..3 {
                let mut acc = RationalFunction::zero();
                for j in 0..3 {
                    acc = &acc + &x[j].scale(&rat(a[i][j]));
                }
                prop_assert!(acc.equal(&b[i]));
            }
        } else {
            prop_assert_eq!(det_rational(&a).unwrap(), rat(0));
        }
    }
}
