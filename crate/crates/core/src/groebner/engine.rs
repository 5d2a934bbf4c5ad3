//! Homogeneous Buchberger algorithm for submodules of graded free modules.
//!
//! Everything in the crate that needs a Gröbner basis (ideals, syzygies,
//! intersections, quotients) goes through [`groebner`]. Inputs are
//! homogeneous vectors in a free module whose components carry a degree
//! shift; the basis is built degree by degree (for homogeneous input the
//! sugar of a pair is its degree), with the Gebauer-Möller criteria.
//!
//! Components are split into an upper block (0) and a lower block (1). The
//! module order ranks every upper term above every lower term, so basis
//! elements whose leading term is lower have no upper terms at all: they
//! generate the intersection of the module with the lower summand. Within a
//! degree, pairs between two lower elements are processed first, then all
//! other pairs, then the inputs of that degree. With that schedule a lower
//! element created from anything other than a lower-lower pair is a minimal
//! generator of the lower module, and an input that survives reduction in
//! the upper block is a minimal generator of the upper module.

use crate::field::PrimeField;
use crate::monomial::{degrevlex, Monomial};
use std::cmp::Ordering;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub mon: Monomial,
    pub comp: u32,
    pub coef: u32,
}

pub(crate) type Vector = Vec<Term>;

#[derive(Clone, Debug)]
pub(crate) struct CompInfo {
    pub block: u8,
    /// Degree of the basis vector `e_c`.
    pub shift: i32,
    /// Schreyer weight: `m e_c` is compared through `m * weight`.
    pub weight: Option<Monomial>,
    /// Tie-break; smaller rank is larger.
    pub rank: u32,
}

/// Order on terms `m e_c`: block (upper first), shifted degree, degrevlex on
/// the weighted monomial, then component rank.
#[derive(Clone, Debug)]
pub(crate) struct ModuleOrder {
    pub comps: Vec<CompInfo>,
}

impl ModuleOrder {
    /// Term-over-position order with the given shifts, all in the upper block.
    pub fn top(shifts: &[i32]) -> Self {
        ModuleOrder {
            comps: shifts
                .iter()
                .enumerate()
                .map(|(i, &s)| CompInfo {
                    block: 0,
                    shift: s,
                    weight: None,
                    rank: i as u32,
                })
                .collect(),
        }
    }

    /// A single ring component.
    pub fn ring() -> Self {
        Self::top(&[0])
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        let (ia, ib) = (&self.comps[ac as usize], &self.comps[bc as usize]);
        if ia.block != ib.block {
            return ib.block.cmp(&ia.block);
        }
        let da = am.degree() as i32 + ia.shift;
        let db = bm.degree() as i32 + ib.shift;
        if da != db {
            return da.cmp(&db);
        }
        let o = match (&ia.weight, &ib.weight) {
            (None, None) => degrevlex(am, bm),
            (wa, wb) => {
                let x = wa.map_or(*am, |w| am.mul(&w));
                let y = wb.map_or(*bm, |w| bm.mul(&w));
                degrevlex(&x, &y)
            }
        };
        if o != Ordering::Equal {
            return o;
        }
        ib.rank.cmp(&ia.rank)
    }

    #[inline]
    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(&a.mon, a.comp, &b.mon, b.comp)
    }

    #[inline]
    pub fn degree(&self, t: &Term) -> i32 {
        t.mon.degree() as i32 + self.comps[t.comp as usize].shift
    }
}

/// Sort arbitrary terms and combine duplicates.
pub(crate) fn normalize(order: &ModuleOrder, field: PrimeField, mut terms: Vec<Term>) -> Vector {
    terms.sort_by(|a, b| order.cmp_terms(b, a));
    let mut out: Vector = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.mon == t.mon && last.comp == t.comp => {
                last.coef = field.add(last.coef, t.coef)
            }
            _ => out.push(t),
        }
    }
    out.retain(|t| t.coef != 0);
    out
}

/// `x + c * m * y` for sorted vectors.
pub(crate) fn axpy(
    order: &ModuleOrder,
    field: PrimeField,
    x: &[Term],
    c: u32,
    m: &Monomial,
    y: &[Term],
) -> Vector {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let shift = |t: &Term| Term {
        mon: t.mon.mul(m),
        comp: t.comp,
        coef: field.mul(t.coef, c),
    };
    while i < x.len() && j < y.len() {
        let yt = shift(&y[j]);
        match order.cmp_terms(&x[i], &yt) {
            Ordering::Greater => {
                out.push(x[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(yt);
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(x[i].coef, yt.coef);
                if s != 0 {
                    out.push(Term { coef: s, ..x[i] });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&x[i..]);
    out.extend(y[j..].iter().map(shift));
    if c == 0 {
        out.retain(|t| t.coef != 0);
    }
    out
}

pub(crate) fn scale(field: PrimeField, v: &mut [Term], c: u32) {
    for t in v.iter_mut() {
        t.coef = field.mul(t.coef, c);
    }
}

/// Full reduction of `f` by an arbitrary list of monic-or-not vectors.
pub(crate) fn reduce_by(order: &ModuleOrder, field: PrimeField, basis: &[Vector], mut f: Vector) -> Vector {
    let mut rem = Vec::new();
    let mut start = 0;
    while start < f.len() {
        let t = f[start];
        let red = basis
            .iter()
            .filter(|g| !g.is_empty() && g[0].comp == t.comp && g[0].mon.divides(&t.mon))
            .min_by_key(|g| g.len());
        match red {
            Some(g) => {
                let q = t.mon.div(&g[0].mon);
                let c = field.neg(field.mul(t.coef, field.inv(g[0].coef)));
                f = axpy(order, field, &f[start + 1..], c, &q, &g[1..]);
                start = 0;
            }
            None => {
                rem.push(t);
                start += 1;
            }
        }
    }
    rem
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct GbConfig {
    /// Form S-pairs between lower elements, completing a Gröbner basis of the
    /// lower module. Without it lower elements are only collected as
    /// generators (and used as reducers).
    pub lower_pairs: bool,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { lower_pairs: true }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct GbResult {
    /// Reduced, minimal basis in creation order.
    pub basis: Vec<Vector>,
    pub lower: Vec<bool>,
    /// Basis indices of lower elements that are minimal generators of the
    /// lower module (or simply all lower elements without `lower_pairs`).
    pub new_lower: Vec<usize>,
    /// Per input: did it survive as a minimal generator of the upper module.
    pub input_minimal: Vec<bool>,
}

impl GbResult {
    pub fn lower_basis(&self) -> impl Iterator<Item = &Vector> {
        self.basis.iter().zip(&self.lower).filter(|(_, &l)| l).map(|(v, _)| v)
    }

    pub fn lower_generators(&self) -> impl Iterator<Item = &Vector> {
        self.new_lower.iter().map(|&i| &self.basis[i])
    }
}

struct Elem {
    v: Vector,
    lm: Monomial,
    comp: u32,
    lower: bool,
    /// Inside its own block the element lives in the leading component only.
    pure: bool,
    /// Has terms outside the block of its leading term.
    passengers: bool,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    comp: u32,
    lcm: Monomial,
    koszul: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Origin {
    LowerPair,
    Other,
}

struct Engine<'a> {
    field: PrimeField,
    order: &'a ModuleOrder,
    cfg: GbConfig,
    elems: Vec<Elem>,
    by_comp: Vec<Vec<usize>>,
    pairs: BTreeMap<i32, Vec<Pair>>,
    new_lower: Vec<usize>,
}

/// Compute a reduced Gröbner basis of the module generated by `inputs`
/// (homogeneous, sorted by `order`).
pub(crate) fn groebner(
    field: PrimeField,
    order: &ModuleOrder,
    inputs: &[Vector],
    cfg: GbConfig,
) -> GbResult {
    let mut eng = Engine {
        field,
        order,
        cfg,
        elems: Vec::new(),
        by_comp: vec![Vec::new(); order.comps.len()],
        pairs: BTreeMap::new(),
        new_lower: Vec::new(),
    };
    let mut pending: Vec<(i32, usize)> = inputs
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_empty())
        .map(|(i, v)| (order.degree(&v[0]), i))
        .collect();
    pending.sort();
    let mut input_minimal = vec![false; inputs.len()];
    let mut next = 0;
    loop {
        let pd = eng.pairs.keys().next().copied();
        let id = pending.get(next).map(|x| x.0);
        let delta = match (pd, id) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if pd == Some(delta) {
            let batch = eng.pairs.remove(&delta).unwrap_or_default();
            let (lower, upper): (Vec<Pair>, Vec<Pair>) = batch
                .into_iter()
                .partition(|p| eng.elems[p.i].lower && eng.elems[p.j].lower);
            for p in lower {
                eng.process_pair(&p, Origin::LowerPair);
            }
            for p in upper {
                eng.process_pair(&p, Origin::Other);
            }
        }
        while next < pending.len() && pending[next].0 == delta {
            let idx = pending[next].1;
            next += 1;
            let r = eng.reduce(inputs[idx].clone());
            if !r.is_empty() {
                let k = eng.insert(r, Origin::Other);
                if !eng.elems[k].lower {
                    input_minimal[idx] = true;
                }
            }
        }
    }
    eng.finish(input_minimal)
}

impl<'a> Engine<'a> {
    fn find_reducer(&self, mon: &Monomial, comp: u32) -> Option<usize> {
        let mut best: Option<usize> = None;
        for &k in &self.by_comp[comp as usize] {
            let e = &self.elems[k];
            if e.lm.divides(mon) && best.map_or(true, |b| self.elems[b].v.len() > e.v.len()) {
                best = Some(k);
            }
        }
        best
    }

    fn reduce(&self, mut f: Vector) -> Vector {
        let mut rem = Vec::new();
        let mut start = 0;
        while start < f.len() {
            let t = f[start];
            match self.find_reducer(&t.mon, t.comp) {
                Some(k) => {
                    let g = &self.elems[k].v;
                    let q = t.mon.div(&g[0].mon);
                    let c = self.field.neg(t.coef);
                    f = axpy(self.order, self.field, &f[start + 1..], c, &q, &g[1..]);
                    start = 0;
                }
                None => {
                    rem.push(t);
                    start += 1;
                }
            }
        }
        rem
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let qa = p.lcm.div(&a.lm);
        let qb = p.lcm.div(&b.lm);
        let x: Vector = a
            .v
            .iter()
            .skip(1)
            .map(|t| Term {
                mon: t.mon.mul(&qa),
                ..*t
            })
            .collect();
        axpy(self.order, self.field, &x, self.field.neg(1), &qb, &b.v[1..])
    }

    /// `lead_poly(b) * a - lead_poly(a) * b` for two elements that are pure
    /// in their block with coprime leading monomials: only passengers survive.
    fn koszul(&self, p: &Pair) -> Vector {
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let mut acc: Vector = Vec::new();
        for t in b.v.iter().filter(|t| t.comp == b.comp) {
            acc = axpy(self.order, self.field, &acc, t.coef, &t.mon, &a.v);
        }
        for t in a.v.iter().filter(|t| t.comp == a.comp) {
            acc = axpy(self.order, self.field, &acc, self.field.neg(t.coef), &t.mon, &b.v);
        }
        acc
    }

    fn process_pair(&mut self, p: &Pair, origin: Origin) {
        let v = if p.koszul { self.koszul(p) } else { self.spoly(p) };
        let r = self.reduce(v);
        if !r.is_empty() {
            self.insert(r, origin);
        }
    }

    fn insert(&mut self, mut v: Vector, origin: Origin) -> usize {
        let inv = self.field.inv(v[0].coef);
        scale(self.field, &mut v, inv);
        let lead = v[0];
        let block = self.order.comps[lead.comp as usize].block;
        let lower = block > 0;
        let mut pure = true;
        let mut passengers = false;
        for t in &v {
            let b = self.order.comps[t.comp as usize].block;
            if b != block {
                passengers = true;
            } else if t.comp != lead.comp {
                pure = false;
            }
        }
        let idx = self.elems.len();
        self.elems.push(Elem {
            v,
            lm: lead.mon,
            comp: lead.comp,
            lower,
            pure,
            passengers,
        });
        self.by_comp[lead.comp as usize].push(idx);
        if lower && origin != Origin::LowerPair {
            self.new_lower.push(idx);
        }
        if lower && !self.cfg.lower_pairs {
            return idx;
        }
        self.update_pairs(idx);
        idx
    }

    fn update_pairs(&mut self, h: usize) {
        let (hl, comp) = (self.elems[h].lm, self.elems[h].comp);
        // Chain criterion on queued pairs.
        let elems = &self.elems;
        for list in self.pairs.values_mut() {
            list.retain(|p| {
                !(p.comp == comp
                    && hl.divides(&p.lcm)
                    && elems[p.i].lm.lcm(&hl) != p.lcm
                    && elems[p.j].lm.lcm(&hl) != p.lcm)
            });
        }
        self.pairs.retain(|_, l| !l.is_empty());

        let he = &self.elems[h];
        let mut cands: Vec<Pair> = self.by_comp[comp as usize]
            .iter()
            .filter(|&&i| i != h)
            .map(|&i| {
                let e = &self.elems[i];
                Pair {
                    i,
                    j: h,
                    comp,
                    lcm: e.lm.lcm(&hl),
                    koszul: e.pure && he.pure && e.lm.is_coprime(&hl),
                }
            })
            .collect();
        // Criterion M: a strictly smaller lcm makes the pair redundant.
        let keep: Vec<bool> = cands
            .iter()
            .map(|c| {
                !cands
                    .iter()
                    .any(|d| d.lcm != c.lcm && d.lcm.divides(&c.lcm))
            })
            .collect();
        let mut kept: Vec<Pair> = cands
            .drain(..)
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(c, _)| c)
            .collect();
        // Criterion F: one pair per lcm, preferring a coprime one.
        kept.sort_by(|a, b| degrevlex(&a.lcm, &b.lcm).then(b.koszul.cmp(&a.koszul)).then(a.i.cmp(&b.i)));
        kept.dedup_by(|later, first| later.lcm == first.lcm);
        let shift = self.order.comps[comp as usize].shift;
        for p in kept {
            if p.koszul && !self.elems[p.i].passengers && !self.elems[p.j].passengers {
                continue;
            }
            let d = p.lcm.degree() as i32 + shift;
            self.pairs.entry(d).or_default().push(p);
        }
    }

    fn finish(mut self, input_minimal: Vec<bool>) -> GbResult {
        for idx in 0..self.elems.len() {
            let v = std::mem::take(&mut self.elems[idx].v);
            let tail = self.reduce(v[1..].to_vec());
            let mut nv = Vec::with_capacity(tail.len() + 1);
            nv.push(v[0]);
            nv.extend(tail);
            self.elems[idx].v = nv;
        }
        let lower = self.elems.iter().map(|e| e.lower).collect();
        GbResult {
            basis: self.elems.into_iter().map(|e| e.v).collect(),
            lower,
            new_lower: self.new_lower,
            input_minimal,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn vec_of(order: &ModuleOrder, f: PrimeField, terms: &[(&[u16], u32, i64)]) -> Vector {
        let ts = terms
            .iter()
            .map(|(e, c, k)| Term {
                mon: Monomial::from_exponents(e).unwrap(),
                comp: *c,
                coef: f.from_i64(*k),
            })
            .collect();
        normalize(order, f, ts)
    }

    #[test]
    fn koszul_syzygy_from_lifted_pair() {
        // Upper component 0 (ring), lower components 1,2 tracking x, y.
        let f = field();
        let mut order = ModuleOrder::top(&[0, 1, 1]);
        order.comps[1].block = 1;
        order.comps[2].block = 1;
        let a = vec_of(&order, f, &[(&[1, 0], 0, 1), (&[0, 0], 1, 1)]);
        let b = vec_of(&order, f, &[(&[0, 1], 0, 1), (&[0, 0], 2, 1)]);
        let res = groebner(f, &order, &[a, b], GbConfig::default());
        let syz: Vec<&Vector> = res.lower_generators().collect();
        assert_eq!(syz.len(), 1);
        // y e1 - x e2 up to sign
        assert_eq!(syz[0].len(), 2);
        assert!(res.input_minimal.iter().all(|&m| m));
    }

    #[test]
    fn redundant_input_is_flagged() {
        let f = field();
        let order = ModuleOrder::ring();
        let x = vec_of(&order, f, &[(&[1, 0], 0, 1)]);
        let xy = vec_of(&order, f, &[(&[1, 1], 0, 1)]);
        let y2 = vec_of(&order, f, &[(&[0, 2], 0, 1)]);
        let res = groebner(f, &order, &[xy, x, y2], GbConfig::default());
        assert_eq!(res.input_minimal, vec![false, true, true]);
        assert_eq!(res.basis.len(), 2);
    }
}
