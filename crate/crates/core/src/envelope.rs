//! The closed-form product in the envelope: structure constants for
//! `(a^i b^j c^k d^l e^m)(a^r b^n c^p d^q e^s)` as an 11-fold combinatorial
//! sum, with the bilinear extension, commutators, and associators on top.
//!
//! The square-bracket factors are falling factorials (they arise from
//! iterated formal derivatives hitting powers of `b` and `c`), multinomials
//! with a negative implicit remainder vanish, and `0^0 = 1` throughout. The
//! parameter exponent in the shift makes the `omega` base a polynomial in
//! `g`, so coefficients live in `Q[g]`.

use num_traits::Zero;

use crate::comb::{binomial, factorial, falling_factorial, multinomial, sign, stirling2};
use crate::element::Element;
use crate::gamma::{GammaCoeff, Int};
use crate::monomial::Monomial;

/// Product of two basis monomials in the envelope.
pub fn mul_closed(x: &Monomial, z: &Monomial) -> Element {
    let [i, j, k, l, m] = x.exps();
    let [r, n, p, q, s] = z.exps();
    let mut acc = Element::zero();

    for alpha in 0..=j.min(k) {
        for beta in 0..=alpha {
            let a_fact = factorial(alpha) * binomial(alpha, beta);
            let ab = alpha - beta;
            for kappa in 0..=i {
                for delta in 0..=(i - kappa) {
                    if alpha + delta > k {
                        continue;
                    }
                    for eps in 0..=(i - kappa - delta) {
                        if alpha + eps > j {
                            continue;
                        }
                        let de_fact = factorial(delta + eps);
                        for zeta in 0..=(i - kappa - delta - eps) {
                            // (alpha - beta)^zeta with 0^0 = 1
                            let ab_pow = if zeta == 0 {
                                Int::from(1)
                            } else {
                                Int::from(ab).pow(zeta)
                            };
                            if ab_pow.is_zero() {
                                continue;
                            }
                            let stir = stirling2(i - kappa - zeta, delta + eps);
                            if stir.is_zero() {
                                continue;
                            }
                            let c_i = multinomial(i, &[kappa, zeta]);
                            let head =
                                &a_fact * &de_fact * &ab_pow * &stir * &c_i;
                            for eta in 0..=(j - alpha - eps) {
                                for lambda in 0..=(k - alpha - delta) {
                                    let ff_b = falling_factorial(n, k - alpha - lambda);
                                    if ff_b.is_zero() {
                                        continue;
                                    }
                                    let ff_c = falling_factorial(p + lambda, j - alpha - eta);
                                    if ff_c.is_zero() {
                                        continue;
                                    }
                                    let exps = [
                                        r + kappa, // minus nu below
                                        n + alpha + eta + lambda - k,
                                        p + lambda + alpha + eta - j,
                                        j + k + l + q - alpha - eta - lambda,
                                        m + s,
                                    ];
                                    for theta in 0..=(j - alpha - eps - eta) {
                                        let c_j = multinomial(j, &[alpha, eps, eta, theta]);
                                        for mu in 0..=(k - alpha - delta - lambda) {
                                            let c_k =
                                                multinomial(k, &[alpha, delta, lambda, mu]);
                                            let parity = i + j + k + alpha + beta + kappa
                                                + eps + eta + theta + lambda;
                                            let base = sign(parity)
                                                * &head
                                                * &c_j
                                                * &c_k
                                                * &ff_b
                                                * &ff_c;
                                            if base.is_zero() {
                                                continue;
                                            }
                                            // omega = j+k-l-2a-b-2d-2e-2th-2mu - m*g
                                            let w0 = j as i64 + k as i64
                                                - l as i64
                                                - 2 * alpha as i64
                                                - beta as i64
                                                - 2 * delta as i64
                                                - 2 * eps as i64
                                                - 2 * theta as i64
                                                - 2 * mu as i64;
                                            let omega = GammaCoeff::linear(w0, -(m as i64));
                                            let mut omega_pow = GammaCoeff::one();
                                            for nu in 0..=r {
                                                let c = omega_pow
                                                    .scale_int(&(&base * binomial(r, nu)));
                                                if !c.is_zero() {
                                                    let mut e = exps;
                                                    e[0] -= nu;
                                                    acc.add_term(Monomial::new(e), c);
                                                }
                                                if nu < r {
                                                    omega_pow = omega_pow.mul(&omega);
                                                    if omega_pow.is_zero() {
                                                        break;
                                                    }
                                                }
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    acc
}

/// Bilinear extension of [`mul_closed`] to general elements.
pub fn mul(x: &Element, y: &Element) -> Element {
    let mut acc = Element::zero();
    for (xm, xc) in x.iter() {
        for (ym, yc) in y.iter() {
            let prod = mul_closed(xm, ym).scale(&xc.mul(yc));
            acc = acc.add(&prod);
        }
    }
    acc
}

/// `x y - y x`.
pub fn commutator(x: &Element, y: &Element) -> Element {
    mul(x, y).sub(&mul(y, x))
}

/// `(x y) z - x (y z)`.
pub fn associator(x: &Element, y: &Element, z: &Element) -> Element {
    mul(&mul(x, y), z).sub(&mul(x, &mul(y, z)))
}
