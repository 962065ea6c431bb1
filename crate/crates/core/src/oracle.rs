//! Ground-truth multiplication by recursive straightening from first
//! principles.
//!
//! Products are rewritten into the left-tapped basis using only the
//! commutation rules for bracketing a monomial with a generator, the
//! left-product rule for pushing a generator into a monomial, the
//! degree-reduction identity for a general left factor, and the derivation
//! values on generators extended by the Leibniz rule. This path shares no
//! code with the closed-form structure constants or the operator calculus,
//! which is what makes the triple-engine agreement sweep meaningful.
//!
//! Every intermediate is normalized to an `Element` before the next rule
//! applies; the rules are only valid on basis monomials.

use std::cell::{Cell, RefCell};
use std::collections::HashMap;

use crate::bracket::bracket_gen_gen;
use crate::element::Element;
use crate::gamma::GammaCoeff;
use crate::monomial::{Gen, Monomial};

/// An unreduced expression in the free nonassociative algebra on the
/// generators: the input language of [`Straightener::straighten`].
#[derive(Clone, Debug)]
pub enum FreeTerm {
    Gen(Gen),
    Scalar(GammaCoeff),
    Node(Box<FreeTerm>, Box<FreeTerm>),
    Sum(Vec<FreeTerm>),
    Scaled(GammaCoeff, Box<FreeTerm>),
}

impl FreeTerm {
    pub fn gen(g: Gen) -> Self {
        FreeTerm::Gen(g)
    }

    pub fn scalar(c: GammaCoeff) -> Self {
        FreeTerm::Scalar(c)
    }

    pub fn node(left: FreeTerm, right: FreeTerm) -> Self {
        FreeTerm::Node(Box::new(left), Box::new(right))
    }

    pub fn sum(terms: Vec<FreeTerm>) -> Self {
        FreeTerm::Sum(terms)
    }

    pub fn scaled(c: GammaCoeff, t: FreeTerm) -> Self {
        FreeTerm::Scaled(c, Box::new(t))
    }

    /// Left-tapped product of a slice of generators, e.g. `[a,b,c]` is
    /// `a(bc)`.
    pub fn tapped(gens: &[Gen]) -> Self {
        match gens {
            [] => FreeTerm::scalar(GammaCoeff::one()),
            [g] => FreeTerm::gen(*g),
            [g, rest @ ..] => FreeTerm::node(FreeTerm::gen(*g), FreeTerm::tapped(rest)),
        }
    }
}

/// Values of the derivations `D_{s,t}` on the generators (the derivation
/// table of the family), extended antisymmetrically. Everything not listed
/// is zero; in particular `D_{b,d}, D_{b,e}, D_{c,d}, D_{c,e}, D_{d,e}`
/// vanish identically.
pub fn derivation_on_generator(s: Gen, t: Gen, arg: Gen) -> Element {
    use Gen::*;
    if s > t {
        return derivation_on_generator(t, s, arg).neg();
    }
    let entry = |c: GammaCoeff, g: Gen| Element::term(Monomial::gen(g), c);
    match (s, t, arg) {
        (A, B, A) => entry(GammaCoeff::from_int(-1), B),
        (A, B, C) => entry(GammaCoeff::one(), D),
        (A, C, A) => entry(GammaCoeff::from_int(-1), C),
        (A, C, B) => entry(GammaCoeff::from_int(-1), D),
        (A, D, A) => entry(GammaCoeff::from_int(-1), D),
        (A, E, A) => entry(GammaCoeff::gamma().pow(2).neg(), E),
        (B, C, A) => entry(GammaCoeff::one(), D),
        _ => Element::zero(),
    }
}

/// Hard depth bound for the straightening recursion. The termination
/// measure (degree of the recursion argument, then order inversions)
/// strictly decreases, so reaching the bound indicates an implementation
/// bug rather than a legitimate input.
const MAX_DEPTH: u32 = 4096;

/// Memoizing straightening engine. Pure up to its internal caches; create
/// one per worker for parallel sweeps.
#[derive(Default)]
pub struct Straightener {
    mul_cache: RefCell<HashMap<(Monomial, Monomial), Element>>,
    left_cache: RefCell<HashMap<(Gen, Monomial), Element>>,
    bracket_cache: RefCell<HashMap<(Monomial, Gen), Element>>,
    derive_cache: RefCell<HashMap<(Gen, Gen, Monomial), Element>>,
    depth: Cell<u32>,
}

impl Straightener {
    pub fn new() -> Self {
        Straightener::default()
    }

    fn enter(&self) -> DepthGuard<'_> {
        let d = self.depth.get() + 1;
        assert!(
            d < MAX_DEPTH,
            "straightening recursion exceeded its termination bound"
        );
        self.depth.set(d);
        DepthGuard(&self.depth)
    }

    /// `comb * y` where `comb` has degree at most one (scalars and
    /// generators), as produced by brackets and derivation values.
    fn mul_low_degree(&self, comb: &Element, y: &Monomial) -> Element {
        let mut acc = Element::zero();
        for (m, c) in comb.iter() {
            let part = if m.is_unit() {
                Element::from_monomial(*y)
            } else {
                let g = m
                    .split_leading()
                    .filter(|(_, rest)| rest.is_unit())
                    .map(|(g, _)| g)
                    .expect("bracket and derivation values are spanned by generators");
                self.left_mul_gen(g, y)
            };
            acc = acc.add(&part.scale(c));
        }
        acc
    }

    /// `[x, s]` for a basis monomial `x`, by recursion on the degree.
    pub fn bracket_mono_gen(&self, x: &Monomial, s: Gen) -> Element {
        if x.is_unit() {
            return Element::zero();
        }
        if let Some((t, rest)) = x.split_leading() {
            if rest.is_unit() {
                return bracket_gen_gen(t, s);
            }
        }
        if let Some(hit) = self.bracket_cache.borrow().get(&(*x, s)) {
            return hit.clone();
        }
        let _guard = self.enter();
        let (t, y) = x.split_leading().unwrap();
        // [ty, s] = [t,s] y + t [y,s] - D_{s,t}(y) - [y, [s,t]]
        let ts = bracket_gen_gen(t, s);
        let mut out = self.mul_low_degree(&ts, &y);
        out = out.add(&self.left_mul_element(t, &self.bracket_mono_gen(&y, s)));
        out = out.sub(&self.derive(s, t, &y));
        out = out.sub(&self.bracket_with_combination(&y, &bracket_gen_gen(s, t)));
        self.bracket_cache.borrow_mut().insert((*x, s), out.clone());
        out
    }

    /// `[y, comb]` for a degree-one combination `comb`.
    fn bracket_with_combination(&self, y: &Monomial, comb: &Element) -> Element {
        let mut acc = Element::zero();
        for (m, c) in comb.iter() {
            if m.is_unit() {
                continue; // [y, 1] = 0
            }
            let g = m
                .split_leading()
                .filter(|(_, rest)| rest.is_unit())
                .map(|(g, _)| g)
                .expect("bracket values are spanned by generators");
            acc = acc.add(&self.bracket_mono_gen(y, g).scale(c));
        }
        acc
    }

    /// `[x, s]` extended linearly to elements `x`.
    pub fn bracket_element_gen(&self, x: &Element, s: Gen) -> Element {
        let mut acc = Element::zero();
        for (m, c) in x.iter() {
            acc = acc.add(&self.bracket_mono_gen(m, s).scale(c));
        }
        acc
    }

    /// `s x` in normal form, by recursion on the degree of `x`.
    pub fn left_mul_gen(&self, s: Gen, x: &Monomial) -> Element {
        if x.is_unit() {
            return Element::gen(s);
        }
        let (t, y) = x.split_leading().unwrap();
        if s <= t {
            return Element::from_monomial(x.raised(s, 1));
        }
        if let Some(hit) = self.left_cache.borrow().get(&(s, *x)) {
            return hit.clone();
        }
        let _guard = self.enter();
        // s(ty) = t(sy) + [s,t] y + 2/3 D_{s,t}(y) + 2/3 [y, [s,t]]
        let two_thirds = GammaCoeff::from_rational(crate::gamma::rat(2, 3));
        let sy = self.left_mul_gen(s, &y);
        let mut out = self.left_mul_element(t, &sy);
        let st = bracket_gen_gen(s, t);
        out = out.add(&self.mul_low_degree(&st, &y));
        out = out.add(&self.derive(s, t, &y).scale(&two_thirds));
        out = out.add(&self.bracket_with_combination(&y, &st).scale(&two_thirds));
        self.left_cache.borrow_mut().insert((s, *x), out.clone());
        out
    }

    /// `s x` extended linearly to elements `x`.
    pub fn left_mul_element(&self, s: Gen, x: &Element) -> Element {
        let mut acc = Element::zero();
        for (m, c) in x.iter() {
            acc = acc.add(&self.left_mul_gen(s, m).scale(c));
        }
        acc
    }

    /// `D_{s,t}(x)` by Leibniz recursion over the left-tapped factorization.
    pub fn derive(&self, s: Gen, t: Gen, x: &Monomial) -> Element {
        if s == t || x.is_unit() {
            return Element::zero();
        }
        if let Some((g, rest)) = x.split_leading() {
            if rest.is_unit() {
                return derivation_on_generator(s, t, g);
            }
        }
        if let Some(hit) = self.derive_cache.borrow().get(&(s, t, *x)) {
            return hit.clone();
        }
        let _guard = self.enter();
        let (u, rest) = x.split_leading().unwrap();
        // D(u x') = D(u) x' + u D(x')
        let du = derivation_on_generator(s, t, u);
        let mut out = self.mul_low_degree(&du, &rest);
        out = out.add(&self.left_mul_element(u, &self.derive(s, t, &rest)));
        self.derive_cache.borrow_mut().insert((s, t, *x), out.clone());
        out
    }

    /// Full product of two basis monomials, by recursion on the degree of
    /// the left factor.
    pub fn mul_oracle(&self, x: &Monomial, z: &Monomial) -> Element {
        if x.is_unit() {
            return Element::from_monomial(*z);
        }
        let (s, xp) = x.split_leading().unwrap();
        if xp.is_unit() {
            return self.left_mul_gen(s, z);
        }
        if let Some(hit) = self.mul_cache.borrow().get(&(*x, *z)) {
            return hit.clone();
        }
        let _guard = self.enter();
        // (s x') z = 2 s(x' z) - x'(s z) - x' [z, s] + [x' z, s]
        let xpz = self.mul_oracle(&xp, z);
        let mut out = self
            .left_mul_element(s, &xpz)
            .scale(&GammaCoeff::from_int(2));
        let sz = self.left_mul_gen(s, z);
        out = out.sub(&self.mul_monomial_element(&xp, &sz));
        let zs = self.bracket_mono_gen(z, s);
        out = out.sub(&self.mul_monomial_element(&xp, &zs));
        out = out.add(&self.bracket_element_gen(&xpz, s));
        self.mul_cache.borrow_mut().insert((*x, *z), out.clone());
        out
    }

    fn mul_monomial_element(&self, x: &Monomial, y: &Element) -> Element {
        let mut acc = Element::zero();
        for (m, c) in y.iter() {
            acc = acc.add(&self.mul_oracle(x, m).scale(c));
        }
        acc
    }

    /// Bilinear extension of [`Straightener::mul_oracle`].
    pub fn mul_elements(&self, x: &Element, y: &Element) -> Element {
        let mut acc = Element::zero();
        for (xm, xc) in x.iter() {
            for (ym, yc) in y.iter() {
                acc = acc.add(&self.mul_oracle(xm, ym).scale(&xc.mul(yc)));
            }
        }
        acc
    }

    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        self.mul_elements(x, y).sub(&self.mul_elements(y, x))
    }

    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Element {
        self.mul_elements(&self.mul_elements(x, y), z)
            .sub(&self.mul_elements(x, &self.mul_elements(y, z)))
    }

    /// Image of a free nonassociative expression in the envelope.
    pub fn straighten(&self, term: &FreeTerm) -> Element {
        match term {
            FreeTerm::Gen(g) => Element::gen(*g),
            FreeTerm::Scalar(c) => Element::scalar(c.clone()),
            FreeTerm::Node(left, right) => {
                let l = self.straighten(left);
                let r = self.straighten(right);
                self.mul_elements(&l, &r)
            }
            FreeTerm::Sum(terms) => {
                let mut acc = Element::zero();
                for t in terms {
                    acc = acc.add(&self.straighten(t));
                }
                acc
            }
            FreeTerm::Scaled(c, t) => self.straighten(t).scale(c),
        }
    }
}

struct DepthGuard<'a>(&'a Cell<u32>);

impl Drop for DepthGuard<'_> {
    fn drop(&mut self) {
        self.0.set(self.0.get() - 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::mul_closed;
    use crate::gamma::rat_int;
    use crate::monomial::monomials_up_to;

    fn mono(e: [u32; 5]) -> Monomial {
        Monomial::new(e)
    }

    fn elem(e: [u32; 5]) -> Element {
        Element::from_monomial(mono(e))
    }

    #[test]
    fn bracket_examples() {
        let st = Straightener::new();
        // [bc, a] = 2 bc - 3 d
        let got = st.bracket_mono_gen(&mono([0, 1, 1, 0, 0]), Gen::A);
        let expect = elem([0, 1, 1, 0, 0])
            .scale(&GammaCoeff::from_int(2))
            .sub(&elem([0, 0, 0, 1, 0]).scale(&GammaCoeff::from_int(3)));
        assert_eq!(got, expect);

        // [d^l e^m, b] = 0
        for l in 0..=2 {
            for m in 0..=2 {
                let x = mono([0, 0, 0, l, m]);
                assert!(st.bracket_mono_gen(&x, Gen::B).is_zero(), "l={l} m={m}");
            }
        }

        // [b, a] = b
        assert_eq!(st.bracket_mono_gen(&Monomial::gen(Gen::B), Gen::A), Element::gen(Gen::B));
    }

    #[test]
    fn left_mul_examples() {
        let st = Straightener::new();
        assert_eq!(st.left_mul_gen(Gen::A, &mono([0, 1, 1, 0, 0])), elem([1, 1, 1, 0, 0]));

        // b(ac) = abc + bc - 2d
        let got = st.left_mul_gen(Gen::B, &mono([1, 0, 1, 0, 0]));
        let expect = elem([1, 1, 1, 0, 0])
            .add(&elem([0, 1, 1, 0, 0]))
            .sub(&elem([0, 0, 0, 1, 0]).scale(&GammaCoeff::from_int(2)));
        assert_eq!(got, expect);

        // d(bc) = bcd
        assert_eq!(st.left_mul_gen(Gen::D, &mono([0, 1, 1, 0, 0])), elem([0, 1, 1, 1, 0]));
    }

    #[test]
    fn derive_examples() {
        let st = Straightener::new();
        // D_{a,b}(bc) = bd
        assert_eq!(st.derive(Gen::A, Gen::B, &mono([0, 1, 1, 0, 0])), elem([0, 1, 0, 1, 0]));

        // D_{a,e}(a) = -g^2 e and D_{a,e}(e^2) = 0 by the derivation table
        assert_eq!(
            st.derive(Gen::A, Gen::E, &Monomial::gen(Gen::A)),
            Element::term(Monomial::gen(Gen::E), GammaCoeff::gamma().pow(2).neg())
        );
        assert!(st.derive(Gen::A, Gen::E, &mono([0, 0, 0, 0, 2])).is_zero());

        // D_{a,e}(a^2) = -2 g^2 ae + g^3 e  (Leibniz through e a = ae - g e)
        let got = st.derive(Gen::A, Gen::E, &mono([2, 0, 0, 0, 0]));
        let mut expect = Element::term(mono([1, 0, 0, 0, 1]), GammaCoeff::gamma().pow(2).scale(&rat_int(-2)));
        expect.add_term(Monomial::gen(Gen::E), GammaCoeff::gamma().pow(3));
        assert_eq!(got, expect);

        // D_{c,e} kills everything
        for x in monomials_up_to(3) {
            assert!(st.derive(Gen::C, Gen::E, &x).is_zero(), "x={x}");
        }
    }

    #[test]
    fn mul_oracle_examples() {
        let st = Straightener::new();
        // c b = bc - 2d
        let got = st.mul_oracle(&mono([0, 0, 1, 0, 0]), &mono([0, 1, 0, 0, 0]));
        let expect = elem([0, 1, 1, 0, 0]).sub(&elem([0, 0, 0, 1, 0]).scale(&GammaCoeff::from_int(2)));
        assert_eq!(got, expect);

        // a^2 e = a^2 e
        assert_eq!(st.mul_oracle(&mono([2, 0, 0, 0, 0]), &mono([0, 0, 0, 0, 1])), elem([2, 0, 0, 0, 1]));

        // (bc)(bc) agrees with the closed form
        let x = mono([0, 1, 1, 0, 0]);
        assert_eq!(st.mul_oracle(&x, &x), mul_closed(&x, &x));
    }

    #[test]
    fn straighten_examples() {
        let st = Straightener::new();
        // b a = ab + b
        let got = st.straighten(&FreeTerm::node(FreeTerm::gen(Gen::B), FreeTerm::gen(Gen::A)));
        assert_eq!(got, elem([1, 1, 0, 0, 0]).add(&Element::gen(Gen::B)));

        assert_eq!(st.straighten(&FreeTerm::gen(Gen::D)), Element::gen(Gen::D));

        // (a,b,c) = -(b,a,c) as free expressions
        let assoc = |x: FreeTerm, y: FreeTerm, z: FreeTerm| {
            FreeTerm::sum(vec![
                FreeTerm::node(FreeTerm::node(x.clone(), y.clone()), z.clone()),
                FreeTerm::scaled(
                    GammaCoeff::from_int(-1),
                    FreeTerm::node(x, FreeTerm::node(y, z)),
                ),
            ])
        };
        let lhs = st.straighten(&assoc(
            FreeTerm::gen(Gen::A),
            FreeTerm::gen(Gen::B),
            FreeTerm::gen(Gen::C),
        ));
        let rhs = st
            .straighten(&assoc(
                FreeTerm::gen(Gen::B),
                FreeTerm::gen(Gen::A),
                FreeTerm::gen(Gen::C),
            ))
            .neg();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn defining_relations_vanish_on_generators() {
        let st = Straightener::new();
        for s in Gen::ALL {
            for t in Gen::ALL {
                // st - ts - [s,t] straightens to zero
                let got = st
                    .mul_oracle(&Monomial::gen(s), &Monomial::gen(t))
                    .sub(&st.mul_oracle(&Monomial::gen(t), &Monomial::gen(s)))
                    .sub(&bracket_gen_gen(s, t));
                assert!(got.is_zero(), "pair ({s},{t})");
            }
        }
    }
}
