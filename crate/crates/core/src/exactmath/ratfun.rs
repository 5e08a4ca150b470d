//! Rational functions in one variable and their power-series expansions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat, ExactMathError, Polynomial, Rational};

/// A rational function `num/den` in `t`, kept in a canonical form:
/// `gcd(num, den) = 1` and `den(0) = 1`.
///
/// The normalization `den(0) = 1` forces `den(0) != 0`, so every value of
/// this type admits a power-series expansion around `t = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds and normalizes `num/den`.  Errors if, after cancelling common
    /// factors, the denominator still vanishes at 0 (i.e. the function has a
    /// pole at the expansion point).
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ExactMathError> {
        if den.is_zero() {
            return Err(ExactMathError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let c0 = den.constant_term();
        if c0.is_zero() {
            return Err(ExactMathError::ZeroConstantDenominator);
        }
        let inv = Rational::one() / c0;
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    /// A polynomial viewed as a rational function.
    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        RationalFunction::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(Polynomial::one())
    }

    /// The monomial `t^n`.
    pub fn t_power(n: usize) -> Self {
        RationalFunction::from_poly(Polynomial::monomial(rat(1), n))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalFunction::new(self.num.scale(c), self.den.clone()).expect("den unchanged")
    }

    /// Division; errors if `rhs` is zero or the quotient has a pole at 0.
    pub fn div(&self, rhs: &RationalFunction) -> Result<Self, ExactMathError> {
        if rhs.is_zero() {
            return Err(ExactMathError::DivisionByZero);
        }
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Expands into a power series up to and including `t^order` by exact long
    /// division.
    pub fn expand(&self, order: usize) -> SeriesCoeffs {
        let mut coeffs = Vec::with_capacity(order + 1);
        // den(0) = 1 by the canonical form, so the recursion
        //   a_n = num_n - sum_{j=1..n} den_j * a_{n-j}
        // needs no division.
        for n in 0..=order {
            let mut a = self.num.coeff(n);
            for j in 1..=n {
                let d = self.den.coeff(j);
                if !d.is_zero() {
                    a -= d * &coeffs[n - j];
                }
            }
            coeffs.push(a);
        }
        SeriesCoeffs { coeffs }
    }

    /// Structural equality test via cross-multiplication; equivalent to
    /// comparison of canonical forms but independent of normalization.
    pub fn equal(&self, other: &RationalFunction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Attempts to write the denominator as a product of cyclotomic-style
    /// factors `(1 - t^a)^e`, pulled out greedily from the largest exponent
    /// down.  Returns `None` if a nontrivial part remains.
    pub fn factored_denominator(&self) -> Option<Vec<(usize, usize)>> {
        let mut den = self.den.clone();
        let mut factors: Vec<(usize, usize)> = Vec::new();
        let mut a = den.degree()?;
        while a >= 1 {
            let f = Polynomial::from_terms(&[(1, 0), (-1, a)]);
            while let Ok(q) = den.div_exact(&f) {
                match factors.last_mut() {
                    Some((b, e)) if *b == a => *e += 1,
                    _ => factors.push((a, 1)),
                }
                den = q;
            }
            a -= 1;
        }
        if den == Polynomial::one() {
            factors.sort();
            Some(factors)
        } else {
            None
        }
    }

    /// Numerator and factored denominator chosen for printing.  Starting
    /// from the reduced form, a factor `(1 - t^a)` may be promoted to
    /// `(1 - t^{2a})` when multiplying the numerator by `(1 + t^a)` makes
    /// it strictly shorter; this recovers presentations like the classical
    /// numerator `1 + t^35` over `(1-t^4)(1-t^6)(1-t^10)(1-t^12)` that the
    /// fully reduced fraction hides.
    pub fn display_form(&self) -> Option<(Polynomial, Vec<(usize, usize)>)> {
        let terms = |p: &Polynomial| p.coeffs().iter().filter(|c| !c.is_zero()).count();
        let mut factors = self.factored_denominator()?;
        let mut num = self.num.clone();
        loop {
            let mut improved = false;
            for i in 0..factors.len() {
                let (a, e) = factors[i];
                let candidate = &num * &Polynomial::from_terms(&[(1, 0), (1, a)]);
                if terms(&candidate) < terms(&num) {
                    if e == 1 {
                        factors.remove(i);
                    } else {
                        factors[i].1 -= 1;
                    }
                    match factors.iter_mut().find(|(b, _)| *b == 2 * a) {
                        Some(slot) => slot.1 += 1,
                        None => factors.push((2 * a, 1)),
                    }
                    factors.sort();
                    num = candidate;
                    improved = true;
                    break;
                }
            }
            if !improved {
                break;
            }
        }
        Some((num, factors))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &self.num * &rhs.den + &rhs.num * &self.den;
        RationalFunction::new(num, &self.den * &rhs.den).expect("dens nonzero at 0")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs.clone())
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("dens nonzero at 0")
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            return write!(f, "{}", self.num);
        }
        match self.display_form() {
            Some((numerator, factors)) => {
                let num = if numerator.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                    format!("({})", numerator)
                } else {
                    format!("{}", numerator)
                };
                let den: String = factors
                    .iter()
                    .map(|&(a, e)| {
                        let base = if a == 1 {
                            "(1-t)".to_string()
                        } else {
                            format!("(1-t^{})", a)
                        };
                        if e == 1 {
                            base
                        } else {
                            format!("{}^{}", base, e)
                        }
                    })
                    .collect();
                write!(f, "{} / ({})", num, den)
            }
            None => write!(f, "({}) / ({})", self.num, self.den),
        }
    }
}

/// Truncated power-series coefficients `a_0, ..., a_order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesCoeffs {
    coeffs: Vec<Rational>,
}

impl SeriesCoeffs {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        SeriesCoeffs { coeffs }
    }

    /// Highest retained exponent.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient as an `i64`; panics if it is not an integer in range.
    pub fn coeff_i64(&self, n: usize) -> i64 {
        let c = &self.coeffs[n];
        assert!(c.is_integer(), "coefficient of t^{} is not an integer: {}", n, c);
        let s = c.to_integer().to_string();
        s.parse().expect("coefficient fits in i64")
    }
}

/// Convenience constructor: `num / prod (1 - t^a)^e` with an integer-term
/// numerator.  This is the shape of every generating series in this crate.
pub fn rf(num_terms: &[(i64, usize)], den_factors: &[(usize, usize)]) -> RationalFunction {
    let num = Polynomial::from_terms(num_terms);
    let mut den = Polynomial::one();
    for &(a, e) in den_factors {
        let f = Polynomial::from_terms(&[(1, 0), (-1, a)]);
        for _ in 0..e {
            den = &den * &f;
        }
    }
    RationalFunction::new(num, den).expect("den(0) = 1 by construction")
}
