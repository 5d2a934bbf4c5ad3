//! Gröbner bases, normal forms and the ideal toolkit.

pub(crate) mod engine;
mod hilbert;
mod ideal;

pub use hilbert::{binomial_poly, divide_one_minus_t, h_vector_is_symmetric, hilbert_numerator, HilbertReport};
pub use ideal::Ideal;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};
use engine::{GbConfig, ModuleOrder, Term, Vector};

pub(crate) fn to_vector(p: &Polynomial, comp: u32) -> Vector {
    p.terms()
        .iter()
        .map(|&(mon, coef)| Term { mon, comp, coef })
        .collect()
}

/// Terms of `v` in component `comp`, as a polynomial. Within one component
/// every module order used here agrees with degrevlex.
pub(crate) fn component(ring: Ring, v: &[Term], comp: u32) -> Polynomial {
    let terms = v
        .iter()
        .filter(|t| t.comp == comp)
        .map(|t| (t.mon, t.coef))
        .collect();
    Polynomial::from_sorted_terms(ring, terms)
}

fn check_inputs(gens: &[Polynomial]) -> Result<Option<Ring>> {
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    let ring = first.ring();
    for g in gens {
        ring.check(&g.ring())?;
    }
    Ok(Some(ring))
}

/// Full reduction of `f` by the list `g` (any list, not only Gröbner bases).
pub fn normal_form(f: &Polynomial, g: &[Polynomial]) -> Result<Polynomial> {
    let ring = f.ring();
    for h in g {
        ring.check(&h.ring())?;
    }
    let order = ModuleOrder::ring();
    let basis: Vec<Vector> = g.iter().map(|h| to_vector(h, 0)).collect();
    let r = engine::reduce_by(&order, ring.field(), &basis, to_vector(f, 0));
    Ok(component(ring, &r, 0))
}

/// `lcm/lt(f) * f - lcm/lt(g) * g` with monic leading terms.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.ring().check(&g.ring())?;
    let (Some(a), Some(b)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Ok(f.ring().zero());
    };
    let l = a.lcm(b);
    let fa = f.monic().mul_term(&l.div(a), 1);
    let gb = g.monic().mul_term(&l.div(b), 1);
    fa.sub(&gb)
}

/// Reduced Gröbner basis (degrevlex, monic) of homogeneous generators.
pub fn groebner_basis(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let Some(ring) = check_inputs(gens)? else {
        return Ok(Vec::new());
    };
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
    }
    let order = ModuleOrder::ring();
    let inputs: Vec<Vector> = gens.iter().map(|g| to_vector(g, 0)).collect();
    let res = engine::groebner(ring.field(), &order, &inputs, GbConfig::default());
    Ok(res.basis.iter().map(|v| component(ring, v, 0)).collect())
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(g: &[Polynomial]) -> Result<bool> {
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let s = s_polynomial(&g[i], &g[j])?;
            if !normal_form(&s, g)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_step_division() {
        let r = Ring::new(32003, 1).unwrap();
        let f = r.parse("z0^2*z1").unwrap();
        let g = r.parse("z0^2 - z1^2").unwrap();
        assert_eq!(normal_form(&f, &[g.clone()]).unwrap(), r.parse("z1^3").unwrap());
        assert!(normal_form(&g, &[g.clone()]).unwrap().is_zero());
        assert!(normal_form(&r.zero(), &[g]).unwrap().is_zero());
    }

    #[test]
    fn squares_basis() {
        let r = Ring::new(32003, 1).unwrap();
        let g = groebner_basis(&[r.parse("z0^2-z1^2").unwrap(), r.parse("z0^2+z1^2").unwrap()]).unwrap();
        assert_eq!(g, vec![r.parse("z0^2").unwrap(), r.parse("z1^2").unwrap()]);
    }

    #[test]
    fn twisted_cubic_basis_is_groebner() {
        let r = Ring::new(32003, 3).unwrap();
        let gens: Vec<Polynomial> = ["z0*z2-z1^2", "z0*z3-z1*z2", "z1*z3-z2^2"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let g = groebner_basis(&gens).unwrap();
        assert!(is_groebner_basis(&g).unwrap());
        assert_eq!(g.len(), 3);
    }
}
