use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::divisors;
use super::{ArithError, Rational};

/// Univariate polynomial in `δ` over the rationals, lowest degree first.
///
/// The coefficient list never ends in a zero; the zero polynomial is the
/// empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `δ`.
    pub fn delta() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// Builds `c0 + c1 δ + …`, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation; exact.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = &rem[shift + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * d;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Greatest common divisor, normalised as in [`Poly::normalize`].
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.normalize(), other.normalize());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.normalize();
        }
        a.normalize()
    }

    /// Scales to coprime integer coefficients with a positive leading term.
    pub fn normalize(&self) -> Poly {
        match self.to_primitive_int() {
            Some(p) => p.to_poly(),
            None => Poly::zero(),
        }
    }

    /// Squarefree part, normalised.
    pub fn squarefree(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.normalize();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.normalize()
    }

    /// Primitive integer polynomial with positive leading coefficient
    /// proportional to `self`, or `None` for zero.
    pub fn to_primitive_int(&self) -> Option<IntPoly> {
        let lead = self.leading()?;
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut p = IntPoly::new(ints).primitive();
        if lead.is_negative() {
            p = -p;
        }
        Some(p)
    }

    /// The rational roots of a nonzero polynomial, deduplicated and sorted by
    /// (numerator, denominator).
    ///
    /// Works on the squarefree primitive integer part: every rational root
    /// `p/q` in lowest terms has `p` dividing the constant term and `q`
    /// dividing the leading coefficient, and each candidate is checked by
    /// exact evaluation.
    pub fn rational_roots(&self) -> Result<Vec<Rational>, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let mut roots = Vec::new();
        let Some(f) = self.squarefree().to_primitive_int() else {
            return Ok(roots);
        };
        // strip the factor δ^m
        let zeros = f.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            roots.push(Rational::zero());
        }
        let f = IntPoly::new(f.coeffs[zeros..].to_vec());
        if f.degree().unwrap_or(0) > 0 {
            let a0 = f.coeffs[0].magnitude();
            let an = f.coeffs.last().unwrap().magnitude();
            let at_one = f.eval_int(&BigInt::one());
            let at_minus_one = f.eval_int(&-BigInt::one());
            let nums = divisors(a0);
            for q in divisors(an) {
                let q = BigInt::from(q);
                for p in &nums {
                    let p = BigInt::from(p.clone());
                    if !p.gcd(&q).is_one() {
                        continue;
                    }
                    for p in [p.clone(), -p] {
                        // (q·x − p) | f over Z, so (q − p) | f(1) and (q + p) | f(−1)
                        if !divides(&(&q - &p), &at_one) || !divides(&(&q + &p), &at_minus_one) {
                            continue;
                        }
                        if f.homogeneous_eval(&p, &q).is_zero() {
                            roots.push(Rational::new(p, q.clone()));
                        }
                    }
                }
            }
        }
        roots.sort_by(|a, b| (a.numer(), a.denom()).cmp(&(b.numer(), b.denom())));
        roots.dedup();
        Ok(roots)
    }
}

fn divides(d: &BigInt, n: &BigInt) -> bool {
    if d.is_zero() {
        n.is_zero()
    } else {
        (n % d).is_zero()
    }
}

impl fmt::Display for Poly {
    /// `c0 + c1*d + c2*d^2`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*d")?,
                _ => write!(f, "{c}*d^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// Polynomial in `δ` with integer coefficients; the entry type of the
/// fraction-free pencil elimination.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Divides out the gcd of the coefficients (sign untouched).
    pub fn primitive(self) -> IntPoly {
        let content = self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() || content.is_one() {
            return self;
        }
        IntPoly::new(self.coeffs.into_iter().map(|c| c / &content).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `q^deg · f(p/q)`, an integer.
    fn homogeneous_eval(&self, p: &BigInt, q: &BigInt) -> BigInt {
        // Horner on Σ c_i p^i q^(n−i)
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        acc
    }

    /// Exact quotient; `divisor` must divide `self` over Z.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return IntPoly::zero();
        };
        if dd == 0 {
            let d = &divisor.coeffs[0];
            if d.is_one() {
                return self.clone();
            }
            return IntPoly::new(self.coeffs.iter().map(|c| c / d).collect());
        }
        assert!(nd >= dd, "inexact polynomial division");
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let c = top / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * d;
            }
            quot[shift] = c;
        }
        debug_assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        IntPoly::new(quot)
    }

    pub fn sign_of_leading(&self) -> Sign {
        self.coeffs.last().map_or(Sign::NoSign, |c| c.sign())
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}
