//! Dense univariate polynomials in `t` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::combinat::{binomial, factorial};
use super::rational::{format_fraction, parse_fraction, FractionParseError, Rational};

/// Coefficient `i` of `coeffs` multiplies `t^i`. Trailing zeros are never
/// stored, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `t + c`.
    pub fn linear(c: Rational) -> Self {
        Self::from_coeffs(vec![c, Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `[t^i]`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(x.into()))
    }

    /// Integer numerators over the least common denominator of the
    /// coefficients.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let denom = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numers = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        (numers, denom)
    }

    /// Values at many integer points, sharing one common denominator.
    pub fn eval_ints(&self, xs: impl IntoIterator<Item = i64>) -> Vec<Rational> {
        let (numers, denom) = self.integer_form();
        xs.into_iter()
            .map(|x| {
                let v = numers.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c);
                Rational::new(v, denom.clone())
            })
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// `q(t) = p(t + c)`, expanded with the binomial theorem.
    pub fn shift(&self, c: &Rational) -> Self {
        if c.is_zero() || self.coeffs.len() <= 1 {
            return self.clone();
        }
        if c.is_integer() {
            return self.shift_integer(c.numer());
        }
        let d = self.coeffs.len();
        let mut powers = Vec::with_capacity(d);
        powers.push(Rational::one());
        for i in 1..d {
            powers.push(&powers[i - 1] * c);
        }
        let mut out = vec![Rational::zero(); d];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let b = Rational::from_integer(binomial(i as i64, j as i64));
                *slot += a * b * &powers[i - j];
            }
        }
        Self::from_coeffs(out)
    }

    /// Taylor shift by an integer with repeated synthetic division on the
    /// integer form.
    fn shift_integer(&self, c: &BigInt) -> Self {
        let (mut a, denom) = self.integer_form();
        let d = a.len();
        for i in 0..d {
            for j in (i..d - 1).rev() {
                let carry = &a[j + 1] * c;
                a[j] += carry;
            }
        }
        Self::from_coeffs(a.into_iter().map(|x| Rational::new(x, denom.clone())).collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / lead;
            if !q.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * b;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Scales to a monic polynomial; the zero polynomial is returned as is.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Indices `m` with `[t^m] < 0`, ascending.
    pub fn negative_indices(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
            .map(|(i, _)| i)
            .collect()
    }

    /// True iff every stored coefficient is strictly positive. The zero
    /// polynomial is not positive.
    pub fn has_positive_coeffs(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(Signed::is_positive)
    }

    /// Coefficients as `p/q` strings, `q` always written.
    pub fn to_fraction_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| format_fraction(c, true)).collect()
    }

    pub fn from_fraction_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, FractionParseError> {
        let coeffs = items
            .iter()
            .map(|s| parse_fraction(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl fmt::Display for Polynomial {
    /// Highest degree first, e.g. `1/2 t^2 + 3/2 t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", format_fraction(&abs, false))?;
            }
            match i {
                0 => {}
                1 if show_coeff => write!(f, " t")?,
                1 => write!(f, "t")?,
                _ if show_coeff => write!(f, " t^{i}")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Polynomial {
    let len = a.len().max(b.len());
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
        out.push(if negate_b { x - y } else { x + y });
    }
    Polynomial::from_coeffs(out)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// `C(t + a, b) = (t+a)(t+a-1)...(t+a-b+1) / b!`; constant 1 when `b = 0`.
pub fn binom_poly(a: i64, b: usize) -> Polynomial {
    // integer coefficients of the falling product, divided once at the end
    let mut coeffs: Vec<BigInt> = vec![BigInt::one()];
    for i in 0..b as i64 {
        let root = BigInt::from(a - i);
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j] += c * &root;
            next[j + 1] += c;
        }
        coeffs = next;
    }
    let denom = factorial(b);
    Polynomial::from_coeffs(
        coeffs
            .into_iter()
            .map(|c| Rational::new(c, denom.clone()))
            .collect(),
    )
}

/// `p(t + c)`.
pub fn poly_shift(p: &Polynomial, c: &Rational) -> Polynomial {
    p.shift(c)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InterpolationError {
    #[error("degenerate interpolation input: no points")]
    Empty,
    #[error("degenerate interpolation input: abscissa {0} repeated")]
    DuplicateAbscissa(Rational),
}

/// The polynomial of degree below `values.len()` taking `values[t]` at
/// `t = 0, 1, ...`, from integer forward differences:
/// `p(t) = Σ_j Δ^j p(0) · t(t-1)...(t-j+1) / j!`, kept over `d!` until the end.
pub fn interpolate_naturals(values: &[BigInt]) -> Polynomial {
    if values.is_empty() {
        return Polynomial::zero();
    }
    let d = values.len() - 1;
    let mut row = values.to_vec();
    let mut diffs = Vec::with_capacity(values.len());
    for level in 0..=d {
        diffs.push(row[0].clone());
        for i in 0..d - level {
            let next = &row[i + 1] - &row[i];
            row[i] = next;
        }
    }
    // a_j = Δ^j · d!/j!
    let mut weights = vec![BigInt::one(); d + 1];
    for j in (0..d).rev() {
        weights[j] = &weights[j + 1] * (j + 1);
    }
    let mut acc: Vec<BigInt> = vec![&diffs[d] * &weights[d]];
    for j in (0..d).rev() {
        // acc <- acc · (t - j) + a_j
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] += c;
            if j != 0 {
                next[i] -= c * j;
            }
        }
        next[0] += &diffs[j] * &weights[j];
        acc = next;
    }
    let denom = factorial(d);
    Polynomial::from_coeffs(acc.into_iter().map(|c| Rational::new(c, denom.clone())).collect())
}

/// The unique polynomial of degree below `points.len()` through `points`,
/// via Newton divided differences.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial, InterpolationError> {
    if points.is_empty() {
        return Err(InterpolationError::Empty);
    }
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut sorted = xs.clone();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(InterpolationError::DuplicateAbscissa(w[0].clone()));
    }

    let n = points.len();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut newton = Vec::with_capacity(n);
    newton.push(table[0].clone());
    for level in 1..n {
        for i in 0..n - level {
            table[i] = (&table[i + 1] - &table[i]) / (xs[i + level] - xs[i]);
        }
        newton.push(table[0].clone());
    }

    // Horner on the Newton form: c_0 + (t - x_0)(c_1 + (t - x_1)(...))
    let mut acc = Polynomial::constant(newton[n - 1].clone());
    for i in (0..n - 1).rev() {
        acc = &acc * &Polynomial::linear(-xs[i]);
        acc = &acc + &Polynomial::constant(newton[i].clone());
    }
    Ok(acc)
}
