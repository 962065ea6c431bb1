//! Sparse elements of the envelope: finite maps from basis monomials to
//! `Q[g]` coefficients. No stored coefficient is zero.

use std::collections::BTreeMap;
use std::fmt;

use crate::gamma::{write_linear_combination, GammaCoeff, GammaError, Rational};
use crate::monomial::{Gen, Monomial};

/// The general element of the envelope, in canonical form: keys unique,
/// coefficients nonzero, iteration in lexicographic monomial order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, GammaCoeff>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::from_monomial(Monomial::unit())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Element::term(m, GammaCoeff::one())
    }

    pub fn gen(g: Gen) -> Self {
        Element::from_monomial(Monomial::gen(g))
    }

    /// The scalar multiple `c * 1`.
    pub fn scalar(c: GammaCoeff) -> Self {
        Element::term(Monomial::unit(), c)
    }

    pub fn term(m: Monomial, c: GammaCoeff) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &GammaCoeff)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> GammaCoeff {
        self.terms.get(m).cloned().unwrap_or_else(GammaCoeff::zero)
    }

    /// Largest total degree in the support; `None` when zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Add `c * m` in place, keeping the canonical no-zero-coefficient form.
    pub fn add_term(&mut self, m: Monomial, c: GammaCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(*m, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &GammaCoeff) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        let mut out = Element::zero();
        for (m, a) in self.iter() {
            out.add_term(*m, a.mul(c));
        }
        out
    }

    pub fn scale_rat(&self, c: &Rational) -> Element {
        self.scale(&GammaCoeff::from_rational(c.clone()))
    }

    /// Evaluate every coefficient at a fixed nonzero parameter value,
    /// putting the result in instantiated form.
    pub fn gamma_eval(&self, gamma0: &Rational) -> Result<Element, GammaError> {
        let mut out = Element::zero();
        for (m, c) in self.iter() {
            out.add_term(*m, c.instantiate(gamma0)?);
        }
        Ok(out)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.iter().map(|(m, c)| (c, m.literal())))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element::add(self, rhs)
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element::sub(self, rhs)
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::rat_int;

    #[test]
    fn canonicalization_drops_zeros() {
        let mut e = Element::gen(Gen::B);
        e.add_term(Monomial::gen(Gen::B), GammaCoeff::from_int(-1));
        assert!(e.is_zero());
        assert_eq!(e, Element::zero());
    }

    #[test]
    fn gamma_eval_examples() {
        // (g e) at 2 -> 2 e
        let ge = Element::term(Monomial::gen(Gen::E), GammaCoeff::gamma());
        let got = ge.gamma_eval(&rat_int(2)).unwrap();
        assert_eq!(
            got,
            Element::term(Monomial::gen(Gen::E), GammaCoeff::from_int(2))
        );

        // (g^2 - 1) b at 1 -> 0
        let coeff = GammaCoeff::gamma().pow(2).sub(&GammaCoeff::one());
        let x = Element::term(Monomial::gen(Gen::B), coeff);
        assert!(x.gamma_eval(&rat_int(1)).unwrap().is_zero());

        assert!(ge.gamma_eval(&rat_int(0)).is_err());
    }

    #[test]
    fn display_canonical_order() {
        let mut e = Element::zero();
        e.add_term(Monomial::new([0, 0, 0, 1, 0]), GammaCoeff::from_int(-3));
        e.add_term(Monomial::new([0, 1, 1, 0, 0]), GammaCoeff::from_int(2));
        e.add_term(Monomial::gen(Gen::E), GammaCoeff::gamma());
        assert_eq!(e.to_string(), "g e - 3 d + 2 b c");
        assert_eq!(Element::zero().to_string(), "0");
        assert_eq!(Element::one().to_string(), "1");
    }
}
