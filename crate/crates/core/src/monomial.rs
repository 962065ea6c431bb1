//! Generators and left-tapped basis monomials.
//!
//! The basis of the envelope consists of left-tapped monomials
//! `a^i b^j c^k d^l e^m` with the fixed generator order `a < b < c < d < e`;
//! under the linear isomorphism with the polynomial algebra a monomial is
//! just its exponent 5-tuple.

use std::fmt;

/// A generator of the Malcev algebra, in the fixed order `a < b < c < d < e`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    A,
    B,
    C,
    D,
    E,
}

impl Gen {
    pub const ALL: [Gen; 5] = [Gen::A, Gen::B, Gen::C, Gen::D, Gen::E];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Gen {
        Gen::ALL[i]
    }

    pub fn symbol(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::C => 'c',
            Gen::D => 'd',
            Gen::E => 'e',
        }
    }

    pub fn from_symbol(c: char) -> Option<Gen> {
        match c {
            'a' => Some(Gen::A),
            'b' => Some(Gen::B),
            'c' => Some(Gen::C),
            'd' => Some(Gen::D),
            'e' => Some(Gen::E),
            _ => None,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Exponent 5-tuple `(i, j, k, l, m)` naming the basis monomial
/// `a^i b^j c^k d^l e^m`. The all-zero tuple is the unit.
///
/// The derived order is lexicographic on the tuple, which is the canonical
/// term order used for printing and serialization.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial([u32; 5]);

impl Monomial {
    pub fn new(exps: [u32; 5]) -> Self {
        Monomial(exps)
    }

    pub fn unit() -> Self {
        Monomial([0; 5])
    }

    pub fn gen(g: Gen) -> Self {
        Monomial::unit().raised(g, 1)
    }

    /// `g^e`.
    pub fn gen_pow(g: Gen, e: u32) -> Self {
        Monomial::unit().raised(g, e)
    }

    pub fn exps(&self) -> [u32; 5] {
        self.0
    }

    pub fn exp(&self, g: Gen) -> u32 {
        self.0[g.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0 == [0; 5]
    }

    /// Copy with the exponent of `g` increased by `by`.
    pub fn raised(&self, g: Gen, by: u32) -> Self {
        let mut e = self.0;
        e[g.index()] += by;
        Monomial(e)
    }

    /// Copy with the exponent of `g` decreased by one, or `None` at zero.
    pub fn lowered(&self, g: Gen) -> Option<Self> {
        let mut e = self.0;
        if e[g.index()] == 0 {
            return None;
        }
        e[g.index()] -= 1;
        Some(Monomial(e))
    }

    /// The smallest generator with a nonzero exponent.
    pub fn leading_gen(&self) -> Option<Gen> {
        Gen::ALL.into_iter().find(|g| self.exp(*g) > 0)
    }

    /// Peel the leading generator: `x = s * rest` in left-tapped form.
    pub fn split_leading(&self) -> Option<(Gen, Monomial)> {
        let g = self.leading_gen()?;
        Some((g, self.lowered(g).unwrap()))
    }

    /// The exponent-wise sum (the commutative product of the tuples).
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for t in 0..5 {
            e[t] += other.0[t];
        }
        Monomial(e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        write!(f, "{}", self.literal())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({:?})", self.0)
    }
}

impl Monomial {
    /// Text of the monomial as a juxtaposed literal, e.g. `a^2 b d`.
    /// Empty for the unit (callers decide how to render `1`).
    pub fn literal(&self) -> String {
        let mut parts = Vec::new();
        for g in Gen::ALL {
            match self.exp(g) {
                0 => {}
                1 => parts.push(g.symbol().to_string()),
                e => parts.push(format!("{}^{}", g.symbol(), e)),
            }
        }
        parts.join(" ")
    }
}

/// All monomials of total degree exactly `degree`, in lexicographic order.
pub fn monomials_of_degree(degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..=degree {
        for j in 0..=(degree - i) {
            for k in 0..=(degree - i - j) {
                for l in 0..=(degree - i - j - k) {
                    let m = degree - i - j - k - l;
                    out.push(Monomial([i, j, k, l, m]));
                }
            }
        }
    }
    out.sort();
    out
}

/// All monomials of total degree at most `degree`, in lexicographic order.
pub fn monomials_up_to(degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=degree {
        out.extend(monomials_of_degree(d));
    }
    out.sort();
    out
}

/// All monomials with every exponent at most `cap`, in lexicographic order.
pub fn monomials_exp_capped(cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..=cap {
        for j in 0..=cap {
            for k in 0..=cap {
                for l in 0..=cap {
                    for m in 0..=cap {
                        out.push(Monomial([i, j, k, l, m]));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting_and_degree() {
        let x = Monomial::new([0, 1, 2, 0, 1]);
        assert_eq!(x.degree(), 4);
        let (g, rest) = x.split_leading().unwrap();
        assert_eq!(g, Gen::B);
        assert_eq!(rest, Monomial::new([0, 0, 2, 0, 1]));
        assert!(Monomial::unit().split_leading().is_none());
    }

    #[test]
    fn counts() {
        // C(d+4, 4) monomials of degree d in 5 variables.
        assert_eq!(monomials_of_degree(3).len(), 35);
        assert_eq!(monomials_up_to(4).len(), 126);
        assert_eq!(monomials_exp_capped(2).len(), 243);
    }

    #[test]
    fn literal_text() {
        assert_eq!(Monomial::new([2, 1, 0, 0, 3]).literal(), "a^2 b e^3");
        assert_eq!(Monomial::unit().to_string(), "1");
    }

    #[test]
    fn lex_order() {
        assert!(Monomial::unit() < Monomial::gen(Gen::E));
        assert!(Monomial::gen(Gen::E) < Monomial::gen(Gen::A));
        assert!(Monomial::new([0, 1, 1, 0, 0]) < Monomial::new([0, 2, 0, 0, 0]));
    }
}
