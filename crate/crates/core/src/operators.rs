//! Differential-operator representation of the envelope on the polynomial
//! algebra: multiplication, formal differentiation, and shifts of the `a`
//! variable, composed into the left/right multiplication operators, the
//! derivations `D_{s,t}`, and the full left-multiplication operator of a
//! basis monomial.
//!
//! Operators have no canonical normal form here; equality is extensional
//! (same action on all monomials up to a degree bound), which is how every
//! identity they satisfy is stated.

use std::collections::HashMap;

use num_traits::Zero;

use crate::comb::{binomial, factorial, multinomial, sign, x_poly};
use crate::element::Element;
use crate::gamma::{GammaCoeff, Int, Rational};
use crate::monomial::{monomials_up_to, Gen, Monomial};

/// A primitive operator on the polynomial algebra.
#[derive(Clone, PartialEq, Debug)]
pub enum PrimitiveOp {
    /// Multiplication by a generator.
    Mul(Gen),
    /// Formal differentiation with respect to a generator.
    Diff(Gen),
    /// The shift `a -> a + alpha`, exponent in `Q[g]`.
    Shift(GammaCoeff),
}

/// A finite `Q[g]`-linear combination of primitive words. Within a word the
/// rightmost primitive acts first, matching juxtaposition.
#[derive(Clone, Debug, Default)]
pub struct CompositeOp {
    terms: Vec<(GammaCoeff, Vec<PrimitiveOp>)>,
}

impl CompositeOp {
    pub fn zero() -> Self {
        CompositeOp { terms: Vec::new() }
    }

    pub fn identity() -> Self {
        CompositeOp {
            terms: vec![(GammaCoeff::one(), Vec::new())],
        }
    }

    pub fn word(factors: Vec<PrimitiveOp>) -> Self {
        CompositeOp {
            terms: vec![(GammaCoeff::one(), factors)],
        }
    }

    pub fn scaled_word(scalar: GammaCoeff, factors: Vec<PrimitiveOp>) -> Self {
        if scalar.is_zero() {
            return CompositeOp::zero();
        }
        CompositeOp {
            terms: vec![(scalar, factors)],
        }
    }

    pub fn mul_by(g: Gen) -> Self {
        CompositeOp::word(vec![PrimitiveOp::Mul(g)])
    }

    pub fn diff(g: Gen) -> Self {
        CompositeOp::word(vec![PrimitiveOp::Diff(g)])
    }

    pub fn shift(alpha: GammaCoeff) -> Self {
        if alpha.is_zero() {
            return CompositeOp::identity();
        }
        CompositeOp::word(vec![PrimitiveOp::Shift(alpha)])
    }

    pub fn shift_int(k: i64) -> Self {
        CompositeOp::shift(GammaCoeff::from_int(k))
    }

    pub fn terms(&self) -> &[(GammaCoeff, Vec<PrimitiveOp>)] {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        CompositeOp { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CompositeOp {
            terms: self
                .terms
                .iter()
                .map(|(s, f)| (s.neg(), f.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &GammaCoeff) -> Self {
        if c.is_zero() {
            return CompositeOp::zero();
        }
        CompositeOp {
            terms: self
                .terms
                .iter()
                .map(|(s, f)| (s.mul(c), f.clone()))
                .collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&GammaCoeff::from_int(n))
    }

    /// `self` after `rhs`: `(self.compose(rhs))(x) = self(rhs(x))`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (sa, fa) in &self.terms {
            for (sb, fb) in &rhs.terms {
                let scalar = sa.mul(sb);
                if scalar.is_zero() {
                    continue;
                }
                let mut factors = fa.clone();
                factors.extend(fb.iter().cloned());
                terms.push((scalar, factors));
            }
        }
        CompositeOp { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = CompositeOp::identity();
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    /// `[self, other] = self other - other self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// Apply the operator to an element of the polynomial algebra.
    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (scalar, factors) in &self.terms {
            let mut cur = x.clone();
            for f in factors.iter().rev() {
                if cur.is_zero() {
                    break;
                }
                cur = apply_primitive(f, &cur);
            }
            out = out.add(&cur.scale(scalar));
        }
        out
    }
}

fn apply_primitive(op: &PrimitiveOp, x: &Element) -> Element {
    let mut out = Element::zero();
    match op {
        PrimitiveOp::Mul(g) => {
            for (m, c) in x.iter() {
                out.add_term(m.raised(*g, 1), c.clone());
            }
        }
        PrimitiveOp::Diff(g) => {
            for (m, c) in x.iter() {
                let e = m.exp(*g);
                if e == 0 {
                    continue;
                }
                out.add_term(
                    m.lowered(*g).unwrap(),
                    c.scale(&Rational::from_integer(Int::from(e))),
                );
            }
        }
        PrimitiveOp::Shift(alpha) => {
            for (m, c) in x.iter() {
                let i = m.exp(Gen::A);
                if i == 0 {
                    out.add_term(*m, c.clone());
                    continue;
                }
                // (a + alpha)^i expanded over Q[g]
                let mut alpha_pow = GammaCoeff::one();
                for t in (0..=i).rev() {
                    let coeff = c.mul(&alpha_pow).scale_int(&binomial(i, t));
                    out.add_term(m.with_a(t), coeff);
                    if t > 0 {
                        alpha_pow = alpha_pow.mul(alpha);
                        if alpha_pow.is_zero() {
                            break;
                        }
                    }
                }
            }
        }
    }
    out
}

impl Monomial {
    fn with_a(&self, i: u32) -> Monomial {
        let mut e = self.exps();
        e[0] = i;
        Monomial::new(e)
    }
}

/// The left-multiplication operator `L_s` of a generator.
pub fn left_op(s: Gen) -> CompositeOp {
    use PrimitiveOp::{Diff, Mul};
    match s {
        // L_a = M_a
        Gen::A => CompositeOp::mul_by(Gen::A),
        // L_b = S M_b + (S^{-1} - S) D_c M_d
        Gen::B => CompositeOp::word(vec![PrimitiveOp::Shift(GammaCoeff::one()), Mul(Gen::B)])
            .add(&CompositeOp::word(vec![
                PrimitiveOp::Shift(GammaCoeff::from_int(-1)),
                Diff(Gen::C),
                Mul(Gen::D),
            ]))
            .sub(&CompositeOp::word(vec![
                PrimitiveOp::Shift(GammaCoeff::one()),
                Diff(Gen::C),
                Mul(Gen::D),
            ])),
        // L_c = S M_c - (S + S^{-1}) D_b M_d
        Gen::C => CompositeOp::word(vec![PrimitiveOp::Shift(GammaCoeff::one()), Mul(Gen::C)])
            .sub(&CompositeOp::word(vec![
                PrimitiveOp::Shift(GammaCoeff::one()),
                Diff(Gen::B),
                Mul(Gen::D),
            ]))
            .sub(&CompositeOp::word(vec![
                PrimitiveOp::Shift(GammaCoeff::from_int(-1)),
                Diff(Gen::B),
                Mul(Gen::D),
            ])),
        // L_d = S^{-1} M_d
        Gen::D => CompositeOp::word(vec![
            PrimitiveOp::Shift(GammaCoeff::from_int(-1)),
            Mul(Gen::D),
        ]),
        // L_e = S^{-g} M_e
        Gen::E => CompositeOp::word(vec![
            PrimitiveOp::Shift(GammaCoeff::gamma().neg()),
            Mul(Gen::E),
        ]),
    }
}

/// The right-multiplication operator `R_s` of a generator.
pub fn right_op(s: Gen) -> CompositeOp {
    use PrimitiveOp::{Diff, Mul};
    match s {
        // R_a = M_a + M_b D_b + M_c D_c - M_d D_d + g M_e D_e - 3 D_b D_c M_d
        Gen::A => CompositeOp::mul_by(Gen::A)
            .add(&CompositeOp::word(vec![Mul(Gen::B), Diff(Gen::B)]))
            .add(&CompositeOp::word(vec![Mul(Gen::C), Diff(Gen::C)]))
            .sub(&CompositeOp::word(vec![Mul(Gen::D), Diff(Gen::D)]))
            .add(&CompositeOp::scaled_word(
                GammaCoeff::gamma(),
                vec![Mul(Gen::E), Diff(Gen::E)],
            ))
            .add(&CompositeOp::scaled_word(
                GammaCoeff::from_int(-3),
                vec![Diff(Gen::B), Diff(Gen::C), Mul(Gen::D)],
            )),
        // R_b = M_b - (S^{-1} + I) D_c M_d
        Gen::B => CompositeOp::mul_by(Gen::B)
            .sub(&CompositeOp::word(vec![
                PrimitiveOp::Shift(GammaCoeff::from_int(-1)),
                Diff(Gen::C),
                Mul(Gen::D),
            ]))
            .sub(&CompositeOp::word(vec![Diff(Gen::C), Mul(Gen::D)])),
        // R_c = M_c + (S^{-1} - I) D_b M_d
        Gen::C => CompositeOp::mul_by(Gen::C)
            .add(&CompositeOp::word(vec![
                PrimitiveOp::Shift(GammaCoeff::from_int(-1)),
                Diff(Gen::B),
                Mul(Gen::D),
            ]))
            .sub(&CompositeOp::word(vec![Diff(Gen::B), Mul(Gen::D)])),
        // R_d = M_d
        Gen::D => CompositeOp::mul_by(Gen::D),
        // R_e = M_e
        Gen::E => CompositeOp::mul_by(Gen::E),
    }
}

/// The adjoint operator `rho_s = R_s - L_s`, so `rho_s(x) = [x, s]`.
pub fn adjoint_op(s: Gen) -> CompositeOp {
    right_op(s).sub(&left_op(s))
}

/// The derivation `D_{s,t} = [L_s, L_t] + [L_s, R_t] + [R_s, R_t]`.
pub fn derivation_op(s: Gen, t: Gen) -> CompositeOp {
    let (ls, lt) = (left_op(s), left_op(t));
    let (rs, rt) = (right_op(s), right_op(t));
    ls.commutator(&lt)
        .add(&ls.commutator(&rt))
        .add(&rs.commutator(&rt))
}

/// The left-multiplication operator of a basis monomial
/// `a^i b^j c^k d^l e^m`, assembled as the explicit multi-indexed sum of
/// primitive words with `X_i` corrections; applying it to `z` agrees with
/// the closed-form product `x z`.
pub fn left_op_monomial(x: &Monomial) -> CompositeOp {
    use PrimitiveOp::{Diff, Mul};
    let [i, j, k, l, m] = x.exps();
    let mut terms: Vec<(GammaCoeff, Vec<PrimitiveOp>)> = Vec::new();

    for alpha in 0..=j.min(k) {
        for beta in 0..=alpha {
            let a_fact = factorial(alpha) * binomial(alpha, beta);
            let ab = Int::from(alpha - beta);
            for kappa in 0..=i {
                for delta in 0..=(i - kappa) {
                    if alpha + delta > k {
                        continue;
                    }
                    for eps in 0..=(i - kappa - delta) {
                        if alpha + eps > j {
                            continue;
                        }
                        let xval = x_poly(i, kappa as i64, delta as i64, eps as i64).eval(&ab);
                        if xval.is_zero() {
                            continue;
                        }
                        let head = &a_fact * factorial(delta) * factorial(eps) * &xval;
                        for eta in 0..=(j - alpha - eps) {
                            for theta in 0..=(j - alpha - eps - eta) {
                                let c_j = multinomial(j, &[alpha, eps, eta, theta]);
                                for lambda in 0..=(k - alpha - delta) {
                                    for mu in 0..=(k - alpha - delta - lambda) {
                                        let c_k = multinomial(k, &[alpha, delta, lambda, mu]);
                                        let parity = i + j + k + alpha + beta + kappa
                                            + eps + eta + theta + lambda;
                                        let scalar = sign(parity) * &head * &c_j * &c_k;
                                        if scalar.is_zero() {
                                            continue;
                                        }
                                        let w0 = j as i64 + k as i64
                                            - l as i64
                                            - 2 * alpha as i64
                                            - beta as i64
                                            - 2 * delta as i64
                                            - 2 * eps as i64
                                            - 2 * theta as i64
                                            - 2 * mu as i64;
                                        let shift_exp = GammaCoeff::linear(w0, -(m as i64));
                                        let mut factors = Vec::new();
                                        factors.extend(std::iter::repeat_n(Mul(Gen::A), kappa as usize));
                                        if !shift_exp.is_zero() {
                                            factors.push(PrimitiveOp::Shift(shift_exp));
                                        }
                                        factors.extend(std::iter::repeat_n(Mul(Gen::B), eta as usize));
                                        factors.extend(std::iter::repeat_n(
                                            Diff(Gen::B),
                                            (k - alpha - lambda) as usize,
                                        ));
                                        factors.extend(std::iter::repeat_n(
                                            Diff(Gen::C),
                                            (j - alpha - eta) as usize,
                                        ));
                                        factors.extend(std::iter::repeat_n(Mul(Gen::C), lambda as usize));
                                        factors.extend(std::iter::repeat_n(
                                            Mul(Gen::D),
                                            (j + k + l - alpha - eta - lambda) as usize,
                                        ));
                                        factors.extend(std::iter::repeat_n(Mul(Gen::E), m as usize));
                                        terms.push((
                                            GammaCoeff::from_bigint(&scalar),
                                            factors,
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    CompositeOp { terms }
}

/// Extensional operator equality: same action on every monomial of total
/// degree at most `degree_bound`.
pub fn op_equal_upto(op_a: &CompositeOp, op_b: &CompositeOp, degree_bound: u32) -> bool {
    for m in monomials_up_to(degree_bound) {
        let x = Element::from_monomial(m);
        if op_a.apply(&x) != op_b.apply(&x) {
            return false;
        }
    }
    true
}

/// Memoizing wrapper around [`left_op_monomial`] for repeated sweeps.
#[derive(Default)]
pub struct LeftOpCache {
    cache: HashMap<Monomial, CompositeOp>,
}

impl LeftOpCache {
    pub fn new() -> Self {
        LeftOpCache::default()
    }

    pub fn get(&mut self, x: &Monomial) -> &CompositeOp {
        self.cache.entry(*x).or_insert_with(|| left_op_monomial(x))
    }

    /// Product `x y` through the operator engine.
    pub fn mul(&mut self, x: &Element, y: &Element) -> Element {
        let mut acc = Element::zero();
        for (xm, xc) in x.iter() {
            let prod = self.get(xm).apply(y);
            acc = acc.add(&prod.scale(xc));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::mul_closed;
    use crate::monomial::monomials_exp_capped;

    fn mono(e: [u32; 5]) -> Monomial {
        Monomial::new(e)
    }

    fn elem(e: [u32; 5]) -> Element {
        Element::from_monomial(mono(e))
    }

    #[test]
    fn primitive_actions() {
        // S^{-1} M_d (a) = ad - d
        let op = left_op(Gen::D);
        let got = op.apply(&Element::gen(Gen::A));
        assert_eq!(got, elem([1, 0, 0, 1, 0]).sub(&elem([0, 0, 0, 1, 0])));

        // S^{-g} M_e (a) = ae - g e
        let got = left_op(Gen::E).apply(&Element::gen(Gen::A));
        let expect = elem([1, 0, 0, 0, 1]).sub(&Element::term(
            Monomial::gen(Gen::E),
            GammaCoeff::gamma(),
        ));
        assert_eq!(got, expect);

        // D_b (1) = 0
        assert!(CompositeOp::diff(Gen::B).apply(&Element::one()).is_zero());
    }

    #[test]
    fn left_right_adjoint_examples() {
        let bc = elem([0, 1, 1, 0, 0]);
        assert_eq!(left_op(Gen::A).apply(&bc), elem([1, 1, 1, 0, 0]));

        // rho_a (bc) = [bc, a] = 2 bc - 3 d
        let got = adjoint_op(Gen::A).apply(&bc);
        let expect = bc
            .scale(&GammaCoeff::from_int(2))
            .sub(&elem([0, 0, 0, 1, 0]).scale(&GammaCoeff::from_int(3)));
        assert_eq!(got, expect);

        // R_d (a^2) = a^2 d
        assert_eq!(right_op(Gen::D).apply(&elem([2, 0, 0, 0, 0])), elem([2, 0, 0, 1, 0]));
    }

    /// Values of the derivations on the generators: rows are the argument,
    /// in generator order, entries as (coefficient, generator) or None.
    fn table1(s: Gen, t: Gen, arg: Gen) -> Element {
        use Gen::*;
        let entry = |c: GammaCoeff, g: Gen| Element::term(Monomial::gen(g), c);
        let val = match (s, t, arg) {
            (A, B, A) => Some(entry(GammaCoeff::from_int(-1), B)),
            (A, B, C) => Some(entry(GammaCoeff::one(), D)),
            (A, C, A) => Some(entry(GammaCoeff::from_int(-1), C)),
            (A, C, B) => Some(entry(GammaCoeff::from_int(-1), D)),
            (A, D, A) => Some(entry(GammaCoeff::from_int(-1), D)),
            (A, E, A) => Some(entry(GammaCoeff::gamma().pow(2).neg(), E)),
            (B, C, A) => Some(entry(GammaCoeff::one(), D)),
            _ => None,
        };
        val.unwrap_or_else(Element::zero)
    }

    #[test]
    fn derivation_ops_reproduce_table() {
        for (si, s) in Gen::ALL.into_iter().enumerate() {
            for t in Gen::ALL.into_iter().skip(si + 1) {
                let op = derivation_op(s, t);
                for arg in Gen::ALL {
                    let got = op.apply(&Element::gen(arg));
                    assert_eq!(got, table1(s, t, arg), "D_({s},{t})({arg})");
                }
            }
        }
    }

    #[test]
    fn derivation_antisymmetry_and_vanishing() {
        let dbd = derivation_op(Gen::B, Gen::D);
        assert!(op_equal_upto(&dbd, &CompositeOp::zero(), 4));
        for s in Gen::ALL {
            for t in Gen::ALL {
                let forward = derivation_op(s, t);
                let backward = derivation_op(t, s).neg();
                assert!(op_equal_upto(&forward, &backward, 3), "({s},{t})");
            }
        }
    }

    #[test]
    fn left_op_monomial_small_cases() {
        // L_d = S^{-1} M_d
        let got = left_op_monomial(&Monomial::gen(Gen::D));
        assert!(op_equal_upto(&got, &left_op(Gen::D), 5));

        // L_b applied to ac = abc + bc - 2d
        let got = left_op_monomial(&Monomial::gen(Gen::B)).apply(&elem([1, 0, 1, 0, 0]));
        assert_eq!(got, mul_closed(&mono([0, 1, 0, 0, 0]), &mono([1, 0, 1, 0, 0])));
    }

    #[test]
    fn left_op_monomial_aid_collapses() {
        // L_{a^i d} = L_a^i L_d, so a^i d * a^r = a^i (a-1)^r d
        for i in 0..=2u32 {
            let x = Monomial::gen_pow(Gen::A, i).raised(Gen::D, 1);
            let direct = left_op(Gen::A).pow(i).compose(&left_op(Gen::D));
            assert!(op_equal_upto(&left_op_monomial(&x), &direct, 4), "i={i}");
        }
    }

    #[test]
    fn left_op_monomial_matches_closed_form_small() {
        for x in monomials_exp_capped(1) {
            let op = left_op_monomial(&x);
            for z in monomials_up_to(3) {
                let got = op.apply(&Element::from_monomial(z));
                assert_eq!(got, mul_closed(&x, &z), "x={x} z={z}");
            }
        }
    }

    #[test]
    fn op_equal_upto_examples() {
        let lc = left_op(Gen::C);
        let ld = left_op(Gen::D);
        assert!(op_equal_upto(&lc.compose(&ld), &ld.compose(&lc), 4));

        // [R_a, L_b] = -S^{-1} D_c M_d
        let lhs = right_op(Gen::A).commutator(&left_op(Gen::B));
        let rhs = CompositeOp::scaled_word(
            GammaCoeff::from_int(-1),
            vec![
                PrimitiveOp::Shift(GammaCoeff::from_int(-1)),
                PrimitiveOp::Diff(Gen::C),
                PrimitiveOp::Mul(Gen::D),
            ],
        );
        assert!(op_equal_upto(&lhs, &rhs, 4));

        assert!(!op_equal_upto(&left_op(Gen::B), &left_op(Gen::C), 1));
    }
}
