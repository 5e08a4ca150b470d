//! Univariate polynomials over the rationals, dense representation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{rat, ExactMathError, Rational};

/// A polynomial in one variable `t` with rational coefficients.
///
/// Invariant: the coefficient vector never ends in a zero, and the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients in ascending order of degree,
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial::constant(rat(1))
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c * t^n`.
    pub fn monomial(c: Rational, n: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Polynomial { coeffs }
    }

    /// Builds a polynomial from `(integer coefficient, exponent)` pairs.
    pub fn from_terms(terms: &[(i64, usize)]) -> Self {
        let mut p = Polynomial::zero();
        for &(c, n) in terms {
            p = p + Polynomial::monomial(rat(c), n);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^n` (zero beyond the degree).
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    /// All coefficients in ascending order.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Value at `t = 0`.
    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// Leading coefficient, or zero for the zero polynomial.
    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), ExactMathError> {
        let d_deg = divisor.degree().ok_or(ExactMathError::DivisionByZero)?;
        let lead_inv = Rational::one() / divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg {
            let k = rem.len() - 1 - d_deg;
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let v = &rem[k + i] - &factor * dc;
                    rem[k + i] = v;
                }
                quot[k] = factor;
            }
            rem.pop();
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial, ExactMathError> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactMathError::DivisionByZero)
        }
    }

    /// Monic greatest common divisor.
    ///
    /// Runs a primitive pseudo-remainder sequence over the integers instead
    /// of the naive Euclidean algorithm: clearing denominators and dividing
    /// every remainder by its content keeps coefficient sizes polynomial,
    /// where rational-arithmetic Euclid blows up exponentially on the
    /// high-degree inputs produced by rational-function arithmetic.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let make_monic = |p: &Polynomial| {
            let inv = Rational::one() / p.leading_coeff();
            p.scale(&inv)
        };
        if self.is_zero() {
            return if other.is_zero() {
                Polynomial::zero()
            } else {
                make_monic(other)
            };
        }
        if other.is_zero() {
            return make_monic(self);
        }
        let mut a = int_primitive(self);
        let mut b = int_primitive(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = reduce_to_primitive(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        let poly = Polynomial::new(
            a.into_iter()
                .map(|c| Rational::from_integer(c))
                .collect::<Vec<_>>(),
        );
        make_monic(&poly)
    }
}

/// Integer coefficient vector of `p` scaled to be primitive (content 1).
fn int_primitive(p: &Polynomial) -> Vec<BigInt> {
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    reduce_to_primitive(ints)
}

/// Divides an integer coefficient vector by its content.
fn reduce_to_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
        if content.is_one() {
            return v;
        }
    }
    if !content.is_zero() {
        for c in v.iter_mut() {
            *c = &*c / &content;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b`: repeatedly scales by the leading
/// coefficient of `b` so the division stays over the integers.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let d_deg = b.len() - 1;
    let lead = b.last().unwrap();
    let mut rem = a.to_vec();
    while rem.len() > d_deg {
        let k = rem.len() - 1 - d_deg;
        let top = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c = &*c * lead;
        }
        for (i, bc) in b.iter().enumerate() {
            let v = &rem[k + i] - &top * bc;
            rem[k + i] = v;
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    rem
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        (&self).mul(&rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + a * b;
                coeffs[i + j] = v;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.to_string().trim_start_matches('-').to_string();
            if first {
                if c < &Rational::zero() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < &Rational::zero() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = n == 0 || mag != "1";
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if n > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if n == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{}", n)?;
                }
            }
        }
        Ok(())
    }
}
