//! Combinatorial helpers for the closed-form structure constants: Stirling
//! numbers of the second kind, falling factorials, multinomials, and the
//! `X_i` correction polynomials in the single variable `alpha - beta`.

use num_traits::{One, Signed, Zero};

use crate::gamma::Int;

pub fn factorial(n: u32) -> Int {
    let mut acc = Int::one();
    for t in 2..=n.max(1) {
        acc *= Int::from(t);
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for t in 0..k {
        acc = acc * Int::from(n - t) / Int::from(t + 1);
    }
    acc
}

/// Multinomial coefficient `n! / (p_1! ... p_r! (n - sum p_t)!)`;
/// zero when the implicit remainder is negative.
pub fn multinomial(n: u32, parts: &[u32]) -> Int {
    let sum: u32 = parts.iter().sum();
    if sum > n {
        return Int::zero();
    }
    let mut acc = Int::one();
    let mut rest = n;
    for &p in parts {
        acc *= binomial(rest, p);
        rest -= p;
    }
    acc
}

/// Stirling number of the second kind,
/// `{r, s} = (1/s!) sum_{t=0}^{s} (-1)^{s-t} C(s,t) t^r`, with `{0,0} = 1`
/// by the convention `0^0 = 1`. Zero when `s > r`.
pub fn stirling2(r: u32, s: u32) -> Int {
    let mut sum = Int::zero();
    for t in 0..=s {
        let pow = if r == 0 && t == 0 {
            Int::one()
        } else {
            Int::from(t).pow(r)
        };
        let term = binomial(s, t) * pow;
        if (s - t) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum / factorial(s)
}

/// Falling factorial `n (n-1) ... (n-r+1)`; `1` when `r = 0`, `0` when `r > n`.
pub fn falling_factorial(n: u32, r: u32) -> Int {
    if r > n {
        return Int::zero();
    }
    let mut acc = Int::one();
    for t in 0..r {
        acc *= Int::from(n - t);
    }
    acc
}

/// `(-1)^parity_sum` as a big integer, for parity sums assembled in `u32`.
pub fn sign(parity_sum: u32) -> Int {
    if parity_sum % 2 == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

/// An integer polynomial in one indeterminate, used for the variable
/// `alpha - beta`. Trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        let mut p = IntPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        IntPoly {
            coeffs: vec![Int::zero(), Int::one()],
        }
    }

    /// `c * t^power`.
    pub fn term(power: usize, c: Int) -> Self {
        let mut coeffs = vec![Int::zero(); power + 1];
        coeffs[power] = c;
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, power: usize) -> Int {
        self.coeffs.get(power).cloned().unwrap_or_else(Int::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for t in 0..n {
            let mut c = self.coeff(t);
            if let Some(d) = other.coeffs.get(t) {
                c += d;
            }
            coeffs.push(c);
        }
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (s, a) in self.coeffs.iter().enumerate() {
            for (t, b) in other.coeffs.iter().enumerate() {
                coeffs[s + t] += a * b;
            }
        }
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: &Int) -> Self {
        let mut p = IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        };
        p.trim();
        p
    }

    pub fn eval(&self, t: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
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
            match power {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag} ")?;
                    }
                    if power == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn x_poly_in_range(i: u32, kappa: i64, delta: i64, eps: i64) -> bool {
    let i = i as i64;
    0 <= kappa && kappa <= i && 0 <= delta && delta <= i - kappa && 0 <= eps && eps <= i - kappa - delta
}

/// The correction polynomial `X_i(kappa, delta, eps)` in the variable
/// `alpha - beta`, by the closed form
/// `C(delta+eps, eps) * sum_z C(i; kappa, z) {i-kappa-z, delta+eps} t^z`.
/// Zero outside the index range `0 <= kappa <= i`, `0 <= delta <= i-kappa`,
/// `0 <= eps <= i-kappa-delta`.
pub fn x_poly(i: u32, kappa: i64, delta: i64, eps: i64) -> IntPoly {
    if !x_poly_in_range(i, kappa, delta, eps) {
        return IntPoly::zero();
    }
    let (kappa, delta, eps) = (kappa as u32, delta as u32, eps as u32);
    let front = binomial(delta + eps, eps);
    let mut p = IntPoly::zero();
    for zeta in 0..=(i - kappa - delta - eps) {
        let c = multinomial(i, &[kappa, zeta]) * stirling2(i - kappa - zeta, delta + eps);
        if !c.is_zero() {
            p = p.add(&IntPoly::term(zeta as usize, c));
        }
    }
    p.scale(&front)
}

/// `X_i` computed by the defining recurrence
/// `X_{i+1}(k,d,e) = (t + d + e) X_i(k,d,e) + X_i(k-1,d,e) + X_i(k,d-1,e)
///  + X_i(k,d,e-1)` with `X_0(0,0,0) = 1`. Independent route used to
/// cross-check the closed form.
pub fn x_poly_by_recurrence(i: u32, kappa: i64, delta: i64, eps: i64) -> IntPoly {
    if !x_poly_in_range(i, kappa, delta, eps) {
        return IntPoly::zero();
    }
    if i == 0 {
        return IntPoly::one();
    }
    let shift = IntPoly::var().add(&IntPoly::constant(Int::from(delta + eps)));
    shift
        .mul(&x_poly_by_recurrence(i - 1, kappa, delta, eps))
        .add(&x_poly_by_recurrence(i - 1, kappa - 1, delta, eps))
        .add(&x_poly_by_recurrence(i - 1, kappa, delta - 1, eps))
        .add(&x_poly_by_recurrence(i - 1, kappa, delta, eps - 1))
}
