//! The coefficient ring `Q[g]`: rational polynomials in the structure
//! parameter of the one-parameter family.
//!
//! Every formula we implement stays polynomial in the parameter (shifts,
//! binomial expansions, powers of `-g`), so no rational functions are
//! needed. A [`GammaCoeff`] is a trimmed coefficient vector indexed by the
//! power of the parameter; the zero polynomial is the empty vector.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational scalar. Always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// Parse a rational from `"n"` or `"n/d"` text.
pub fn parse_rational(text: &str) -> Result<Rational, GammaError> {
    Rational::from_str(text.trim()).map_err(|_| GammaError::BadRational(text.to_string()))
}

/// Domain errors for the parameter.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    /// The family is only defined for a nonzero parameter.
    #[error("the parameter gamma must be nonzero")]
    ZeroGamma,
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
}

/// Whether the parameter is kept symbolic or fixed at a nonzero rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaMode {
    Symbolic,
    Instantiated(Rational),
}

impl GammaMode {
    /// Fix the parameter at `value`; rejects zero.
    pub fn instantiated(value: Rational) -> Result<Self, GammaError> {
        if value.is_zero() {
            Err(GammaError::ZeroGamma)
        } else {
            Ok(GammaMode::Instantiated(value))
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, GammaMode::Symbolic)
    }
}

/// An element of `Q[g]`: `coeffs[t]` is the coefficient of `g^t`.
///
/// Canonical form: trailing zeros trimmed, so the zero polynomial is the
/// empty vector and instantiated values have length <= 1.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct GammaCoeff {
    coeffs: Vec<Rational>,
}

impl GammaCoeff {
    pub fn zero() -> Self {
        GammaCoeff { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        GammaCoeff::from_rational(Rational::one())
    }

    /// The polynomial `g`.
    pub fn gamma() -> Self {
        GammaCoeff::term(1, Rational::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        let mut g = GammaCoeff { coeffs: vec![c] };
        g.trim();
        g
    }

    pub fn from_int(n: i64) -> Self {
        GammaCoeff::from_rational(rat_int(n))
    }

    pub fn from_bigint(n: &Int) -> Self {
        GammaCoeff::from_rational(Rational::from_integer(n.clone()))
    }

    /// The monomial `c * g^power`.
    pub fn term(power: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        let mut g = GammaCoeff { coeffs };
        g.trim();
        g
    }

    /// The linear polynomial `c0 + c1 * g`.
    pub fn linear(c0: i64, c1: i64) -> Self {
        let mut g = GammaCoeff {
            coeffs: vec![rat_int(c0), rat_int(c1)],
        };
        g.trim();
        g
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when the polynomial has no `g`-dependence.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree in `g`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `g^power`.
    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms as `(power, coefficient)` pairs, ascending power.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn neg(&self) -> Self {
        GammaCoeff {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for t in 0..n {
            let mut c = self.coeffs.get(t).cloned().unwrap_or_else(Rational::zero);
            if let Some(d) = other.coeffs.get(t) {
                c += d;
            }
            coeffs.push(c);
        }
        let mut g = GammaCoeff { coeffs };
        g.trim();
        g
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return GammaCoeff::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (s, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[s + t] += a * b;
            }
        }
        let mut g = GammaCoeff { coeffs };
        g.trim();
        g
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return GammaCoeff::zero();
        }
        GammaCoeff {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, n: &Int) -> Self {
        self.scale(&Rational::from_integer(n.clone()))
    }

    /// `self^n` with the empty-product convention `x^0 = 1`.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = GammaCoeff::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at a fixed parameter value (Horner).
    pub fn eval(&self, gamma0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * gamma0 + c;
        }
        acc
    }

    /// Collapse to a constant polynomial at `gamma0`. Rejects zero.
    pub fn instantiate(&self, gamma0: &Rational) -> Result<Self, GammaError> {
        if gamma0.is_zero() {
            return Err(GammaError::ZeroGamma);
        }
        Ok(GammaCoeff::from_rational(self.eval(gamma0)))
    }
}

impl fmt::Debug for GammaCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GammaCoeff({self})")
    }
}

impl fmt::Display for GammaCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match power {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag} ")?;
                    }
                    if power == 1 {
                        write!(f, "g")?;
                    } else {
                        write!(f, "g^{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Shared pretty-printer for sparse linear combinations.
///
/// Each term is a coefficient in `Q[g]` together with the text of its basis
/// monomial (empty for the unit). Splits every coefficient into its
/// `g`-power parts so the output stays inside the expression grammar.
pub fn write_linear_combination<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a GammaCoeff, String)>,
{
    let mut first = true;
    let mut any = false;
    for (coeff, mono) in terms {
        for (power, c) in coeff.terms() {
            any = true;
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (power == 0 && mono.is_empty()) {
                parts.push(mag.to_string());
            }
            if power == 1 {
                parts.push("g".to_string());
            } else if power > 1 {
                parts.push(format!("g^{power}"));
            }
            if !mono.is_empty() {
                parts.push(mono.clone());
            }
            if parts.is_empty() {
                parts.push("1".to_string());
            }
            write!(f, "{}", parts.join(" "))?;
        }
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_zero_is_empty() {
        assert!(GammaCoeff::zero().is_zero());
        assert!(GammaCoeff::from_int(0).is_zero());
        let g = GammaCoeff::linear(1, 2).sub(&GammaCoeff::linear(1, 2));
        assert!(g.is_zero());
        assert_eq!(g, GammaCoeff::zero());
    }

    #[test]
    fn arithmetic() {
        let p = GammaCoeff::linear(1, 1); // 1 + g
        let q = GammaCoeff::linear(-1, 1); // -1 + g
        let prod = p.mul(&q); // g^2 - 1
        assert_eq!(prod.coeff(0), rat_int(-1));
        assert_eq!(prod.coeff(1), rat_int(0));
        assert_eq!(prod.coeff(2), rat_int(1));
        assert_eq!(prod.eval(&rat_int(1)), rat_int(0));
        assert_eq!(prod.eval(&rat(1, 2)), rat(-3, 4));
    }

    #[test]
    fn pow_empty_product() {
        assert!(GammaCoeff::zero().pow(0).is_one());
        assert_eq!(GammaCoeff::gamma().pow(3), GammaCoeff::term(3, rat_int(1)));
    }

    #[test]
    fn instantiate_rejects_zero() {
        assert_eq!(
            GammaCoeff::gamma().instantiate(&rat_int(0)),
            Err(GammaError::ZeroGamma)
        );
        assert_eq!(
            GammaCoeff::gamma().instantiate(&rat_int(2)).unwrap(),
            GammaCoeff::from_int(2)
        );
    }

    #[test]
    fn mode_rejects_zero() {
        assert_eq!(
            GammaMode::instantiated(rat_int(0)),
            Err(GammaError::ZeroGamma)
        );
        assert!(GammaMode::instantiated(rat(2, 3)).is_ok());
    }

    #[test]
    fn display_round_numbers() {
        assert_eq!(GammaCoeff::linear(1, -2).to_string(), "1 - 2 g");
        assert_eq!(GammaCoeff::term(2, rat(3, 4)).to_string(), "3/4 g^2");
        assert_eq!(GammaCoeff::zero().to_string(), "0");
    }
}
