//! The Malcev bracket of the one-parameter family and the Malcev-identity
//! checker.
//!
//! The bracket is hard-coded to
//! `[b,c] = 2d, [a,b] = -b, [a,c] = -c, [a,d] = d, [a,e] = g e`
//! with all unlisted pairs zero. [`BracketTable`] carries a general
//! antisymmetric bracket on the 5-dimensional space over `Q[g]` so the
//! identity checker can also run on perturbed tables as a negative control.

use crate::element::Element;
use crate::gamma::GammaCoeff;
use crate::monomial::{Gen, Monomial};

/// A vector in the 5-dimensional space, as coefficients of `a, b, c, d, e`.
pub type GammaVec = [GammaCoeff; 5];

fn zero_vec() -> GammaVec {
    std::array::from_fn(|_| GammaCoeff::zero())
}

fn basis_vec(g: Gen, c: GammaCoeff) -> GammaVec {
    let mut v = zero_vec();
    v[g.index()] = c;
    v
}

/// The bracket `[s, t]` of two generators as an element of the envelope.
pub fn bracket_gen_gen(s: Gen, t: Gen) -> Element {
    let v = BracketTable::standard().bracket_gens(s, t);
    vec_to_element(&v)
}

fn vec_to_element(v: &GammaVec) -> Element {
    let mut e = Element::zero();
    for g in Gen::ALL {
        e.add_term(Monomial::gen(g), v[g.index()].clone());
    }
    e
}

/// An antisymmetric bracket on the span of `a, b, c, d, e` over `Q[g]`.
#[derive(Clone)]
pub struct BracketTable {
    // entries[s][t] = coefficients of [g_s, g_t] in the basis
    entries: Vec<Vec<GammaVec>>,
}

impl BracketTable {
    /// The everywhere-zero (abelian) bracket.
    pub fn zero() -> Self {
        BracketTable {
            entries: (0..5).map(|_| (0..5).map(|_| zero_vec()).collect()).collect(),
        }
    }

    /// The bracket of the one-parameter family.
    pub fn standard() -> Self {
        let mut t = BracketTable::zero();
        t.set_bracket(Gen::B, Gen::C, basis_vec(Gen::D, GammaCoeff::from_int(2)));
        t.set_bracket(Gen::A, Gen::B, basis_vec(Gen::B, GammaCoeff::from_int(-1)));
        t.set_bracket(Gen::A, Gen::C, basis_vec(Gen::C, GammaCoeff::from_int(-1)));
        t.set_bracket(Gen::A, Gen::D, basis_vec(Gen::D, GammaCoeff::one()));
        t.set_bracket(Gen::A, Gen::E, basis_vec(Gen::E, GammaCoeff::gamma()));
        t
    }

    /// Set `[s, t]` (and `[t, s] = -[s, t]`, keeping antisymmetry).
    pub fn set_bracket(&mut self, s: Gen, t: Gen, value: GammaVec) {
        let neg: GammaVec = std::array::from_fn(|i| value[i].neg());
        self.entries[s.index()][t.index()] = value;
        self.entries[t.index()][s.index()] = neg;
    }

    pub fn bracket_gens(&self, s: Gen, t: Gen) -> GammaVec {
        self.entries[s.index()][t.index()].clone()
    }

    /// Bilinear extension of the bracket to vectors.
    pub fn bracket_vec(&self, x: &GammaVec, y: &GammaVec) -> GammaVec {
        let mut out = zero_vec();
        for s in 0..5 {
            if x[s].is_zero() {
                continue;
            }
            for t in 0..5 {
                if y[t].is_zero() {
                    continue;
                }
                let scale = x[s].mul(&y[t]);
                let v = &self.entries[s][t];
                for r in 0..5 {
                    if !v[r].is_zero() {
                        out[r] = out[r].add(&v[r].mul(&scale));
                    }
                }
            }
        }
        out
    }

    fn is_zero_vec(v: &GammaVec) -> bool {
        v.iter().all(GammaCoeff::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        for s in 0..5 {
            for t in 0..5 {
                let forward = &self.entries[s][t];
                let backward = &self.entries[t][s];
                for r in 0..5 {
                    if !forward[r].add(&backward[r]).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Check the Malcev identity
/// `[[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]`
/// for all basis triples of the table, identically in `g`.
/// Requires an antisymmetric table (returns `false` otherwise).
pub fn verify_malcev(table: &BracketTable) -> bool {
    if !table.is_antisymmetric() {
        return false;
    }
    for x in Gen::ALL {
        let xv = basis_vec(x, GammaCoeff::one());
        for y in Gen::ALL {
            let yv = basis_vec(y, GammaCoeff::one());
            for z in Gen::ALL {
                let zv = basis_vec(z, GammaCoeff::one());
                let xy = table.bracket_vec(&xv, &yv);
                let xz = table.bracket_vec(&xv, &zv);
                let yz = table.bracket_vec(&yv, &zv);
                let zx = table.bracket_vec(&zv, &xv);
                let lhs = table.bracket_vec(&xy, &xz);
                let t1 = table.bracket_vec(&table.bracket_vec(&xy, &zv), &xv);
                let t2 = table.bracket_vec(&table.bracket_vec(&yz, &xv), &xv);
                let t3 = table.bracket_vec(&table.bracket_vec(&zx, &xv), &yv);
                let rhs: GammaVec = std::array::from_fn(|r| t1[r].add(&t2[r]).add(&t3[r]));
                let diff: GammaVec = std::array::from_fn(|r| lhs[r].sub(&rhs[r]));
                if !BracketTable::is_zero_vec(&diff) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_values() {
        let two_d = Element::from_monomial(Monomial::gen(Gen::D)).scale(&GammaCoeff::from_int(2));
        assert_eq!(bracket_gen_gen(Gen::B, Gen::C), two_d);
        let gamma_e = Element::term(Monomial::gen(Gen::E), GammaCoeff::gamma());
        assert_eq!(bracket_gen_gen(Gen::A, Gen::E), gamma_e);
        assert!(bracket_gen_gen(Gen::D, Gen::E).is_zero());
        assert!(bracket_gen_gen(Gen::C, Gen::C).is_zero());
    }

    #[test]
    fn antisymmetry_all_pairs() {
        for s in Gen::ALL {
            for t in Gen::ALL {
                let forward = bracket_gen_gen(s, t);
                let backward = bracket_gen_gen(t, s);
                assert!(forward.add(&backward).is_zero(), "pair ({s},{t})");
            }
        }
    }

    #[test]
    fn malcev_identity_holds_for_standard_table() {
        assert!(verify_malcev(&BracketTable::standard()));
    }

    #[test]
    fn malcev_identity_fails_for_perturbed_table() {
        let mut t = BracketTable::standard();
        t.set_bracket(Gen::B, Gen::C, basis_vec(Gen::E, GammaCoeff::from_int(2)));
        assert!(!verify_malcev(&t));
    }

    #[test]
    fn malcev_identity_holds_for_zero_bracket() {
        assert!(verify_malcev(&BracketTable::zero()));
    }
}
