use super::engine::{self, normalize, CompInfo, GbConfig, ModuleOrder, Term, Vector};
use super::hilbert::HilbertReport;
use super::{component, to_vector};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};
use crate::rng::Rng;
use std::fmt;
use std::sync::OnceLock;

/// A homogeneous ideal given by generators, with a lazily computed reduced
/// Gröbner basis and Hilbert data.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
    report: OnceLock<HilbertReport>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    /// Zero generators are dropped; every generator must be homogeneous.
    pub fn new(ring: Ring, mut gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            ring.check(&g.ring())?;
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
        }
        gens.retain(|g| !g.is_zero());
        Ok(Self::raw(ring, gens))
    }

    fn raw(ring: Ring, gens: Vec<Polynomial>) -> Self {
        Ideal {
            ring,
            gens,
            gb: OnceLock::new(),
            report: OnceLock::new(),
        }
    }

    fn with_gb(ring: Ring, gens: Vec<Polynomial>, gb: Vec<Polynomial>) -> Self {
        let i = Self::raw(ring, gens);
        let _ = i.gb.set(gb);
        i
    }

    pub fn parse(ring: Ring, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: Ring) -> Self {
        Self::raw(ring, Vec::new())
    }

    pub fn unit(ring: Ring) -> Self {
        Self::raw(ring, vec![ring.one()])
    }

    /// The irrelevant ideal `(z0, ..., zn)`.
    pub fn irrelevant(ring: Ring) -> Self {
        Self::raw(ring, ring.vars())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.degree()).max()
    }

    /// Reduced, monic Gröbner basis in degrevlex.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| {
            let order = ModuleOrder::ring();
            let inputs: Vec<Vector> = self.gens.iter().map(|g| to_vector(g, 0)).collect();
            let res = engine::groebner(self.ring.field(), &order, &inputs, GbConfig::default());
            res.basis.iter().map(|v| component(self.ring, v, 0)).collect()
        })
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner_basis()
            .iter()
            .filter_map(|g| g.leading_monomial().copied())
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        super::normal_form(f, self.groebner_basis())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Ideal) -> Result<bool> {
        self.ring.check(&other.ring)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(|g| g.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// A minimal homogeneous generating set (the inputs that survive
    /// degree-by-degree reduction).
    pub fn minimal_generators(&self) -> Ideal {
        let mut sorted = self.gens.clone();
        sorted.sort_by_key(|g| g.degree());
        let order = ModuleOrder::ring();
        let inputs: Vec<Vector> = sorted.iter().map(|g| to_vector(g, 0)).collect();
        let res = engine::groebner(self.ring.field(), &order, &inputs, GbConfig::default());
        let gens = sorted
            .into_iter()
            .zip(&res.input_minimal)
            .filter(|(_, &m)| m)
            .map(|(g, _)| g)
            .collect();
        let gb = res.basis.iter().map(|v| component(self.ring, v, 0)).collect();
        Self::with_gb(self.ring, gens, gb)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::raw(self.ring, gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check(&other.ring)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul_unchecked(b));
            }
        }
        Ideal::new(self.ring, gens)
    }

    /// Ideal of a lower-block result: minimal generators and reduced basis
    /// read off component `comp`.
    fn from_lower(ring: Ring, res: &engine::GbResult, comp: u32) -> Ideal {
        let gens = res.lower_generators().map(|v| component(ring, v, comp)).collect();
        let gb = res.lower_basis().map(|v| component(ring, v, comp)).collect();
        Self::with_gb(ring, gens, gb)
    }

    /// `self ∩ other`, as the lower part of the module generated by
    /// `(g, g)` and `(h, 0)`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring));
        }
        let mut order = ModuleOrder::top(&[0, 0]);
        order.comps[1].block = 1;
        let mut inputs: Vec<Vector> = Vec::new();
        for g in &self.gens {
            let mut v = to_vector(g, 0);
            v.extend(to_vector(g, 1));
            inputs.push(v);
        }
        for h in &other.gens {
            inputs.push(to_vector(h, 0));
        }
        let res = engine::groebner(self.ring.field(), &order, &inputs, GbConfig::default());
        Ok(Self::from_lower(self.ring, &res, 1))
    }

    /// `(self : other) = { f : f·other ⊆ self }`.
    ///
    /// With `g_1..g_k` the generators of `other` reduced to a basis modulo
    /// `self` (see [`Ideal::independent_modulo`]), this
    /// is the lower part of the module in `R^k ⊕ R` generated by
    /// `(g_1, ..., g_k | 1)` and `h e_i` for the generators `h` of `self`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check(&other.ring)?;
        let g = self.independent_modulo(&other.gens)?;
        if g.is_empty() {
            return Ok(Self::unit(self.ring));
        }
        let k = g.len();
        let mut comps: Vec<CompInfo> = g
            .iter()
            .enumerate()
            .map(|(i, x)| CompInfo {
                block: 0,
                shift: -(x.degree().unwrap() as i32),
                weight: None,
                rank: i as u32,
            })
            .collect();
        comps.push(CompInfo {
            block: 1,
            shift: 0,
            weight: None,
            rank: k as u32,
        });
        let order = ModuleOrder { comps };
        let field = self.ring.field();
        let mut inputs: Vec<Vector> = Vec::new();
        let mut u: Vec<Term> = Vec::new();
        for (i, x) in g.iter().enumerate() {
            u.extend(to_vector(x, i as u32));
        }
        u.push(Term {
            mon: Monomial::one(self.ring.nvars()),
            comp: k as u32,
            coef: 1,
        });
        inputs.push(normalize(&order, field, u));
        for i in 0..k {
            for h in &self.gens {
                inputs.push(to_vector(h, i as u32));
            }
        }
        let res = engine::groebner(field, &order, &inputs, GbConfig::default());
        Ok(Self::from_lower(self.ring, &res, k as u32))
    }

    /// A subset-sized replacement for `polys` modulo `self`: going up in
    /// degree, normal forms modulo `self` plus everything kept in lower
    /// degrees, echelonized within the degree. `self + (result)` equals
    /// `self + (polys)`.
    pub(crate) fn independent_modulo(&self, polys: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let mut sorted: Vec<&Polynomial> = polys.iter().filter(|p| !p.is_zero()).collect();
        sorted.sort_by_key(|p| p.degree());
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut k = 0;
        while k < sorted.len() {
            let d = sorted[k].degree();
            let base = if kept.is_empty() {
                self.clone()
            } else {
                let mut g = self.gens.clone();
                g.extend(kept.iter().cloned());
                Ideal::new(self.ring, g)?
            };
            let mut echelon: Vec<Polynomial> = Vec::new();
            while k < sorted.len() && sorted[k].degree() == d {
                let mut p = base.normal_form(sorted[k])?;
                k += 1;
                while let Some(lm) = p.leading_monomial().copied() {
                    let Some(b) = echelon.iter().find(|b| b.leading_monomial() == Some(&lm)) else {
                        break;
                    };
                    let c = self.ring.field().neg(p.leading_coefficient().unwrap());
                    p = p.add_scaled(b, c, None);
                }
                if !p.is_zero() {
                    echelon.push(p.monic());
                }
            }
            kept.extend(echelon);
        }
        Ok(kept)
    }

    pub fn quotient_by(&self, f: &Polynomial) -> Result<Ideal> {
        self.quotient(&Ideal::new(self.ring, vec![f.clone()])?)
    }

    /// `(self : z_i^∞)`: swap `z_i` with the last variable, take the
    /// degrevlex basis, strip the last variable from each element and swap back.
    pub fn saturation_by_variable(&self, i: usize) -> Ideal {
        let last = self.ring.nvars() - 1;
        let swapped: Vec<Polynomial> = self.gens.iter().map(|g| g.swap_vars(i, last)).collect();
        let gb = Self::raw(self.ring, swapped);
        let gens: Vec<Polynomial> = gb
            .groebner_basis()
            .iter()
            .map(|g| {
                let e = g.terms().iter().map(|t| t.0.exponent(last)).min().unwrap_or(0);
                let mut exps = vec![0u16; self.ring.nvars()];
                exps[last] = e;
                let d = Monomial::from_exponents(&exps).expect("valid variable count");
                let terms = g.terms().iter().map(|&(m, c)| (m.div(&d), c)).collect();
                Polynomial::from_terms(self.ring, terms).swap_vars(i, last)
            })
            .collect();
        Self::raw(self.ring, gens)
    }

    /// Saturation with respect to `(z0, ..., zn)`, as the intersection of
    /// the saturations by each variable.
    pub fn saturation(&self) -> Result<Ideal> {
        let mut parts = Vec::new();
        for i in (0..self.ring.nvars()).rev() {
            let k = self.saturation_by_variable(i);
            if self.is_subset(&k)? && k.is_subset(self)? {
                // A variable that is a nonzerodivisor: already saturated.
                return Ok(self.clone());
            }
            parts.push(k);
        }
        let mut cur = parts.pop().expect("at least one variable");
        while let Some(k) = parts.pop() {
            if !cur.is_subset(&k)? {
                cur = cur.intersection(&k)?;
            }
        }
        Ok(cur.minimal_generators())
    }

    pub fn is_saturated(&self) -> Result<bool> {
        self.saturation()?.is_subset(self)
    }

    /// Random element of degree `d`: `sum f_k g_k` with random forms `f_k`.
    pub fn random_element(&self, d: u32, rng: &mut Rng) -> Polynomial {
        let mut acc = self.ring.zero();
        for g in &self.gens {
            let dg = g.degree().unwrap();
            if dg <= d {
                let f = self.ring.random_form(d - dg, rng);
                acc = acc.add_scaled(&f.mul_unchecked(g), 1, None);
            }
        }
        acc
    }

    /// Unmixed part of codimension `r`: `(J : (J : I))` for a complete
    /// intersection `J ⊆ I` of `r` random forms of the largest generator
    /// degree, retried up to 5 times per degree before raising the degree.
    pub fn top_dimensional_part(&self, r: usize, rng: &mut Rng) -> Result<Ideal> {
        let found = self.codimension();
        if found != r as i64 {
            return Err(Error::Codimension {
                expected: r as i64,
                found,
            });
        }
        let d0 = self.max_degree().unwrap_or(0);
        for d in d0..d0 + 3 {
            for _ in 0..5 {
                let forms = (0..r).map(|_| self.random_element(d, rng)).collect();
                let j = Ideal::new(self.ring, forms)?;
                if j.codimension() == r as i64 {
                    let jq = j.quotient(self)?;
                    return j.quotient(&jq);
                }
            }
        }
        Err(Error::NoRegularSequence(r))
    }

    /// Krull dimension of `R/I` from maximal independent sets of variables
    /// modulo the leading ideal; the unit ideal has dimension -1.
    pub fn affine_dimension(&self) -> i64 {
        let masks: Vec<u32> = self.leading_monomials().iter().map(|m| m.mask()).collect();
        if masks.iter().any(|&m| m == 0) {
            return -1;
        }
        let n = self.ring.nvars();
        let mut best = 0u32;
        for s in 0u32..(1u32 << n) {
            let size = s.count_ones();
            if size > best && masks.iter().all(|&m| m & !s != 0) {
                best = size;
            }
        }
        best as i64
    }

    /// `n + 1 - dim`, the codimension of the cone (equal to the projective
    /// codimension of the scheme).
    pub fn codimension(&self) -> i64 {
        self.ring.nvars() as i64 - self.affine_dimension()
    }

    pub fn hilbert_report(&self) -> &HilbertReport {
        self.report
            .get_or_init(|| HilbertReport::from_leading_monomials(self.ring.nvars(), &self.leading_monomials()))
    }

    pub fn degree(&self) -> i64 {
        self.hilbert_report().degree
    }

    pub fn h_vector(&self) -> Vec<i64> {
        self.hilbert_report().second_series.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        Ring::new(32003, n).unwrap()
    }

    #[test]
    fn quotient_basics() {
        let r = ring(3);
        let i = Ideal::parse(r, &["z0*z1"]).unwrap();
        let q = i.quotient(&Ideal::parse(r, &["z0"]).unwrap()).unwrap();
        assert!(q.equals(&Ideal::parse(r, &["z1"]).unwrap()).unwrap());
        let q1 = i.quotient(&Ideal::unit(r)).unwrap();
        assert!(q1.equals(&i).unwrap());
    }

    #[test]
    fn intersection_basics() {
        let r = ring(3);
        let a = Ideal::parse(r, &["z0"]).unwrap();
        let b = Ideal::parse(r, &["z1"]).unwrap();
        let c = a.intersection(&b).unwrap();
        assert_eq!(c.generators().len(), 1);
        assert!(c.equals(&Ideal::parse(r, &["z0*z1"]).unwrap()).unwrap());
        assert!(a.intersection(&a).unwrap().equals(&a).unwrap());
    }

    #[test]
    fn saturation_of_embedded_point() {
        let r = ring(1);
        let i = Ideal::parse(r, &["z0^2", "z0*z1"]).unwrap();
        let s = i.saturation().unwrap();
        assert!(s.equals(&Ideal::parse(r, &["z0"]).unwrap()).unwrap());
        assert!(s.saturation().unwrap().equals(&s).unwrap());
    }

    #[test]
    fn dimensions() {
        let r = ring(3);
        assert_eq!(Ideal::unit(r).affine_dimension(), -1);
        let i = Ideal::parse(r, &["z0", "z1"]).unwrap();
        assert_eq!(i.affine_dimension(), 2);
        assert_eq!(i.hilbert_report().affine_dimension, 2);
        let p = Ideal::parse(r, &["z0"]).unwrap();
        assert_eq!(p.h_vector(), vec![1]);
        assert_eq!(p.degree(), 1);
        assert_eq!(p.codimension(), 1);
    }

    #[test]
    fn top_part_of_plane_union_line() {
        let r = ring(4);
        let a = Ideal::parse(r, &["z0", "z1"]).unwrap();
        let b = Ideal::parse(r, &["z2", "z3", "z4"]).unwrap();
        let i = a.intersection(&b).unwrap();
        let top = i.top_dimensional_part(2, &mut Rng::new(3)).unwrap();
        assert!(top.equals(&a).unwrap());
    }

    #[test]
    fn minimal_generators_drop_redundancy() {
        let r = ring(2);
        let i = Ideal::parse(r, &["z0^2", "z0", "z0*z1", "z1^2"]).unwrap();
        assert_eq!(i.minimal_generators().generators().len(), 2);
    }
}
