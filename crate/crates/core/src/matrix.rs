//! Homogeneous matrices between graded free modules, their kernels, minors
//! and Pfaffians.
//!
//! Twists are generator degrees: a column with twist `c` is a basis vector
//! of degree `c`, i.e. a summand `R(-c)`. Entry `(i, j)` must be homogeneous
//! of degree `col_twists[j] - row_twists[i]` (or zero), so the matrix is a
//! degree-zero map from the column module to the row module.

use crate::error::{Error, Result};
use crate::groebner::engine::{self, CompInfo, GbConfig, GbResult, ModuleOrder, Term, Vector};
use crate::groebner::{component, to_vector, Ideal};
use crate::poly::{Polynomial, Ring};
use std::collections::HashMap;
use std::fmt;

/// An element of a graded free module: one polynomial per component and the
/// generator degree of each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleElement {
    pub components: Vec<Polynomial>,
    pub twists: Vec<i32>,
}

impl FreeModuleElement {
    /// Common value of `deg(entry_i) + twist_i`; `Ok(None)` for zero.
    pub fn degree(&self) -> Result<Option<i32>> {
        let mut d = None;
        for (f, &t) in self.components.iter().zip(&self.twists) {
            if f.is_zero() {
                continue;
            }
            if !f.is_homogeneous() {
                return Err(Error::NotHomogeneous(f.to_string()));
            }
            let e = f.degree().unwrap() as i32 + t;
            match d {
                None => d = Some(e),
                Some(x) if x != e => {
                    return Err(Error::InhomogeneousMatrix(format!(
                        "component degrees {x} and {e} differ"
                    )))
                }
                _ => {}
            }
        }
        Ok(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_ok()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|f| f.is_zero())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    row_twists: Vec<i32>,
    col_twists: Vec<i32>,
}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GradedMatrix {}x{} rows {:?} cols {:?}", self.rows, self.cols, self.row_twists, self.col_twists)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl GradedMatrix {
    pub fn new(
        ring: Ring,
        entries: Vec<Vec<Polynomial>>,
        row_twists: Vec<i32>,
        col_twists: Vec<i32>,
    ) -> Result<Self> {
        let rows = row_twists.len();
        let cols = col_twists.len();
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape(format!(
                "expected {rows}x{cols} entries for the given twists"
            )));
        }
        let flat: Vec<Polynomial> = entries.into_iter().flatten().collect();
        let m = GradedMatrix {
            ring,
            rows,
            cols,
            entries: flat,
            row_twists,
            col_twists,
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.entry(i, j);
                self.ring.check(&e.ring())?;
                if e.is_zero() {
                    continue;
                }
                let want = self.col_twists[j] - self.row_twists[i];
                let ok = e.is_homogeneous() && e.degree().map(|d| d as i32) == Some(want);
                if !ok {
                    return Err(Error::InhomogeneousMatrix(format!(
                        "entry ({i},{j}) = {e} should have degree {want}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Twists read off the entries: row 0 gets twist 0 and the rest follow
    /// from nonzero entries. Rows or columns not connected to row 0 through
    /// nonzero entries get twist 0.
    pub fn with_inferred_twists(ring: Ring, entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        let mut rt: Vec<Option<i32>> = vec![None; rows];
        let mut ct: Vec<Option<i32>> = vec![None; cols];
        for start in 0..rows {
            if rt[start].is_some() {
                continue;
            }
            rt[start] = Some(0);
            let mut changed = true;
            while changed {
                changed = false;
                for i in 0..rows {
                    for j in 0..cols {
                        let e = &entries[i][j];
                        let Some(d) = e.degree() else { continue };
                        let d = d as i32;
                        match (rt[i], ct[j]) {
                            (Some(r), None) => {
                                ct[j] = Some(r + d);
                                changed = true;
                            }
                            (None, Some(c)) => {
                                rt[i] = Some(c - d);
                                changed = true;
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        let rt = rt.into_iter().map(|x| x.unwrap_or(0)).collect();
        let ct = ct.into_iter().map(|x| x.unwrap_or(0)).collect();
        Self::new(ring, entries, rt, ct)
    }

    /// The `1 x k` matrix of the generators of an ideal.
    pub fn from_ideal(ideal: &Ideal) -> Self {
        let gens = ideal.generators().to_vec();
        let ct = gens.iter().map(|g| g.degree().unwrap() as i32).collect();
        GradedMatrix {
            ring: ideal.ring(),
            rows: 1,
            cols: gens.len(),
            entries: gens,
            row_twists: vec![0],
            col_twists: ct,
        }
    }

    pub fn zero(ring: Ring, row_twists: Vec<i32>, col_twists: Vec<i32>) -> Self {
        let (rows, cols) = (row_twists.len(), col_twists.len());
        GradedMatrix {
            ring,
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
            row_twists,
            col_twists,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_twists(&self) -> &[i32] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i32] {
        &self.col_twists
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub(crate) fn set_entry(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> FreeModuleElement {
        FreeModuleElement {
            components: (0..self.rows).map(|i| self.entry(i, j).clone()).collect(),
            twists: self.row_twists.clone(),
        }
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        (0..self.cols).map(|j| self.entry(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Matrix product; the column twists of `self` must be the row twists of
    /// `other`.
    pub fn mul(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        self.ring.check(&other.ring)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.col_twists != other.row_twists {
            return Err(Error::Shape("twists of the middle module differ".into()));
        }
        let mut out = GradedMatrix::zero(self.ring, self.row_twists.clone(), other.col_twists.clone());
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    let (a, b) = (self.entry(i, k), other.entry(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add_scaled(&a.mul_unchecked(b), 1, None);
                    }
                }
                out.set_entry(i, j, acc);
            }
        }
        Ok(out)
    }

    /// The dual map: rows and columns exchanged, twists negated.
    pub fn transpose(&self) -> GradedMatrix {
        let mut out = GradedMatrix::zero(
            self.ring,
            self.col_twists.iter().map(|t| -t).collect(),
            self.row_twists.iter().map(|t| -t).collect(),
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set_entry(j, i, self.entry(i, j).clone());
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> GradedMatrix {
        let mut out = GradedMatrix::zero(
            self.ring,
            self.row_twists.clone(),
            cols.iter().map(|&j| self.col_twists[j]).collect(),
        );
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out.set_entry(i, k, self.entry(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> GradedMatrix {
        let mut out = GradedMatrix::zero(
            self.ring,
            rows.iter().map(|&i| self.row_twists[i]).collect(),
            self.col_twists.clone(),
        );
        for (k, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                out.set_entry(k, j, self.entry(i, j).clone());
            }
        }
        out
    }

    /// Columns as module vectors in components `offset..offset + rows`.
    pub(crate) fn column_vector(&self, j: usize, order: &ModuleOrder, offset: u32) -> Vector {
        let mut terms: Vec<Term> = Vec::new();
        for i in 0..self.rows {
            terms.extend(to_vector(self.entry(i, j), offset + i as u32));
        }
        engine::normalize(order, self.ring.field(), terms)
    }

    fn from_vectors<'a>(
        ring: Ring,
        row_twists: &[i32],
        offset: u32,
        order: &ModuleOrder,
        vecs: impl Iterator<Item = &'a Vector>,
    ) -> GradedMatrix {
        let vecs: Vec<&Vector> = vecs.collect();
        let col_twists: Vec<i32> = vecs.iter().map(|v| order.degree(&v[0])).collect();
        let mut out = GradedMatrix::zero(ring, row_twists.to_vec(), col_twists);
        for (j, v) in vecs.iter().enumerate() {
            for i in 0..row_twists.len() {
                out.set_entry(i, j, component(ring, v, offset + i as u32));
            }
        }
        out
    }

    /// Generators of the kernel, from the lower part of the module spanned by
    /// `(column_j, e_j)`, with the Schreyer order on the `e_j`. With
    /// `minimal` the generators are a minimal system.
    pub fn syzygy_with(&self, minimal: bool) -> GradedMatrix {
        let m = self.rows as u32;
        let k = self.cols;
        let mut comps: Vec<CompInfo> = self
            .row_twists
            .iter()
            .enumerate()
            .map(|(i, &t)| CompInfo {
                block: 0,
                shift: t,
                weight: None,
                rank: i as u32,
            })
            .collect();
        let upper = ModuleOrder { comps: comps.clone() };
        let cols: Vec<Vector> = (0..k).map(|j| self.column_vector(j, &upper, 0)).collect();
        for (j, c) in cols.iter().enumerate() {
            let (weight, rank) = match c.first() {
                Some(t) => (Some(t.mon), t.comp * k as u32 + j as u32),
                None => (None, m * k as u32 + j as u32),
            };
            comps.push(CompInfo {
                block: 1,
                shift: self.col_twists[j],
                weight,
                rank,
            });
        }
        let order = ModuleOrder { comps };
        let field = self.ring.field();
        let one = crate::monomial::Monomial::one(self.ring.nvars());
        let inputs: Vec<Vector> = cols
            .into_iter()
            .enumerate()
            .map(|(j, mut c)| {
                c.push(Term {
                    mon: one,
                    comp: m + j as u32,
                    coef: 1,
                });
                c
            })
            .collect();
        let res = engine::groebner(field, &order, &inputs, GbConfig { lower_pairs: minimal });
        let mut out = Self::from_vectors(self.ring, &self.col_twists, m, &order, res.lower_generators());
        out.sort_columns_by_degree();
        out
    }

    /// Minimal generators of the kernel.
    pub fn syzygy(&self) -> GradedMatrix {
        self.syzygy_with(true)
    }

    fn sort_columns_by_degree(&mut self) {
        let mut idx: Vec<usize> = (0..self.cols).collect();
        idx.sort_by_key(|&j| self.col_twists[j]);
        *self = self.select_columns(&idx);
    }

    /// Result of an elimination where the upper block is a copy of the row
    /// module and the lower block another copy starting at component `rows`.
    fn doubled_order(&self) -> ModuleOrder {
        let mut comps = Vec::new();
        for block in 0..2u8 {
            for (i, &t) in self.row_twists.iter().enumerate() {
                comps.push(CompInfo {
                    block,
                    shift: t,
                    weight: None,
                    rank: i as u32,
                });
            }
        }
        ModuleOrder { comps }
    }

    /// Generators of `im(self) ∩ im(other)` inside the common target: the
    /// lower part of the module spanned by `(b, b)` and `(c, 0)`.
    pub fn module_intersection(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        self.ring.check(&other.ring)?;
        if self.row_twists != other.row_twists {
            return Err(Error::Shape("target modules of the two maps differ".into()));
        }
        let order = self.doubled_order();
        let m = self.rows as u32;
        let field = self.ring.field();
        let mut inputs = Vec::new();
        for j in 0..self.cols {
            let mut v = self.column_vector(j, &order, 0);
            v.extend(self.column_vector(j, &order, m));
            inputs.push(engine::normalize(&order, field, v));
        }
        for j in 0..other.cols {
            inputs.push(other.column_vector(j, &order, 0));
        }
        let res: GbResult = engine::groebner(field, &order, &inputs, GbConfig::default());
        let mut out = Self::from_vectors(self.ring, &self.row_twists, m, &order, res.lower_generators());
        out.sort_columns_by_degree();
        Ok(out)
    }

    /// Is every column of `other` in the image of `self`.
    pub fn image_contains(&self, other: &GradedMatrix) -> Result<bool> {
        self.ring.check(&other.ring)?;
        if self.row_twists != other.row_twists {
            return Err(Error::Shape("target modules of the two maps differ".into()));
        }
        let order = ModuleOrder::top(&self.row_twists);
        let field = self.ring.field();
        let inputs: Vec<Vector> = (0..self.cols).map(|j| self.column_vector(j, &order, 0)).collect();
        let res = engine::groebner(field, &order, &inputs, GbConfig::default());
        for j in 0..other.cols {
            let v = other.column_vector(j, &order, 0);
            if !engine::reduce_by(&order, field, &res.basis, v).is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_image(&self, other: &GradedMatrix) -> Result<bool> {
        Ok(self.image_contains(other)? && other.image_contains(self)?)
    }

    /// Determinant of a square submatrix by cofactor expansion along rows,
    /// memoized on the remaining column set.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let mut memo: HashMap<(usize, u64), Polynomial> = HashMap::new();
        let mask: u64 = (1u64 << cols.len()) - 1;
        self.minor_rec(rows, cols, 0, mask, &mut memo)
    }

    fn minor_rec(
        &self,
        rows: &[usize],
        cols: &[usize],
        depth: usize,
        mask: u64,
        memo: &mut HashMap<(usize, u64), Polynomial>,
    ) -> Polynomial {
        if depth == rows.len() {
            return self.ring.one();
        }
        if let Some(p) = memo.get(&(depth, mask)) {
            return p.clone();
        }
        let f = self.ring.field();
        let mut acc = self.ring.zero();
        let mut sign = 1u32;
        for (c, &col) in cols.iter().enumerate() {
            if mask & (1 << c) == 0 {
                continue;
            }
            let e = self.entry(rows[depth], col);
            if !e.is_zero() {
                let sub = self.minor_rec(rows, cols, depth + 1, mask & !(1 << c), memo);
                if !sub.is_zero() {
                    acc = acc.add_scaled(&e.mul_unchecked(&sub), sign, None);
                }
            }
            sign = f.neg(sign);
        }
        memo.insert((depth, mask), acc.clone());
        acc
    }

    /// All nonzero `t x t` minors.
    pub fn minors(&self, t: usize) -> Result<Vec<Polynomial>> {
        if t == 0 || t > self.rows.min(self.cols) {
            return Err(Error::OutOfRange {
                index: t,
                len: self.rows.min(self.cols),
            });
        }
        let mut out = Vec::new();
        for rs in subsets(self.rows, t) {
            for cs in subsets(self.cols, t) {
                let m = self.minor(&rs, &cs);
                if !m.is_zero() {
                    out.push(m);
                }
            }
        }
        Ok(out)
    }

    pub fn minors_ideal(&self, t: usize) -> Result<Ideal> {
        Ideal::new(self.ring, self.minors(t)?)
    }

    /// Ideal of all entries.
    pub fn entry_ideal(&self) -> Ideal {
        Ideal::new(self.ring, self.entries.clone()).expect("entries of a graded matrix are homogeneous")
    }

    pub fn is_skew_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        (0..self.rows).all(|i| {
            self.entry(i, i).is_zero()
                && (i + 1..self.cols).all(|j| self.entry(i, j).add_scaled(self.entry(j, i), 1, None).is_zero())
        })
    }

    /// Pfaffian of the principal submatrix on `idx` (even length) by
    /// expansion along the first index.
    pub fn pfaffian(&self, idx: &[usize]) -> Polynomial {
        if idx.is_empty() {
            return self.ring.one();
        }
        if idx.len() % 2 == 1 {
            return self.ring.zero();
        }
        let f = self.ring.field();
        let mut acc = self.ring.zero();
        let mut sign = 1u32;
        for k in 1..idx.len() {
            let e = self.entry(idx[0], idx[k]);
            if !e.is_zero() {
                let rest: Vec<usize> = idx[1..].iter().enumerate().filter(|&(p, _)| p + 1 != k).map(|(_, &x)| x).collect();
                let sub = self.pfaffian(&rest);
                acc = acc.add_scaled(&e.mul_unchecked(&sub), sign, None);
            }
            sign = f.neg(sign);
        }
        acc
    }

    /// The `2N+1` signed maximal Pfaffians of an odd skew-symmetric matrix.
    pub fn maximal_pfaffians(&self) -> Result<Vec<Polynomial>> {
        if !self.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        if self.rows % 2 == 0 {
            return Err(Error::Shape(format!("{}x{} is not of odd size", self.rows, self.cols)));
        }
        let f = self.ring.field();
        Ok((0..self.rows)
            .map(|i| {
                let idx: Vec<usize> = (0..self.rows).filter(|&k| k != i).collect();
                let p = self.pfaffian(&idx);
                if i % 2 == 0 {
                    p
                } else {
                    p.scale(f.neg(1))
                }
            })
            .collect())
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        Ring::new(32003, n).unwrap()
    }

    fn row(r: Ring, s: &[&str]) -> GradedMatrix {
        let polys = s.iter().map(|x| r.parse(x).unwrap()).collect();
        GradedMatrix::with_inferred_twists(r, vec![polys]).unwrap()
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = ring(1);
        let m = row(r, &["z0", "z1"]);
        let s = m.syzygy();
        assert_eq!(s.cols(), 1);
        assert_eq!(s.col_twists(), &[2]);
        assert!(m.mul(&s).unwrap().is_zero());
    }

    #[test]
    fn four_variables_have_six_koszul_syzygies() {
        let r = ring(3);
        let m = row(r, &["z0", "z1", "z2", "z3"]);
        let s = m.syzygy();
        assert_eq!(s.cols(), 6);
        assert!(s.col_twists().iter().all(|&t| t == 2));
        assert!(m.mul(&s).unwrap().is_zero());
        let ns = m.syzygy_with(false);
        assert!(s.same_image(&ns).unwrap());
    }

    #[test]
    fn inhomogeneous_entries_are_rejected() {
        let r = ring(2);
        let e = vec![vec![r.parse("z0").unwrap(), r.parse("z1^2").unwrap()]];
        assert!(GradedMatrix::new(r, e, vec![0], vec![1, 1]).is_err());
    }

    #[test]
    fn minors_and_pfaffians_of_small_matrices() {
        let r = ring(2);
        let z = |s: &str| r.parse(s).unwrap();
        let m = GradedMatrix::with_inferred_twists(r, vec![vec![z("z0"), z("z1")], vec![z("z1"), z("z2")]]).unwrap();
        assert_eq!(m.minors(2).unwrap(), vec![z("z0*z2 - z1^2")]);
        assert_eq!(m.minors(1).unwrap().len(), 4);
        assert!(m.minors(3).is_err());

        let s = GradedMatrix::new(
            r,
            vec![
                vec![r.zero(), z("z0"), z("z1")],
                vec![z("-z0"), r.zero(), z("z2")],
                vec![z("-z1"), z("-z2"), r.zero()],
            ],
            vec![0, 0, 0],
            vec![1, 1, 1],
        )
        .unwrap();
        let p = s.maximal_pfaffians().unwrap();
        assert_eq!(p, vec![z("z2"), z("-z1"), z("z0")]);
        assert!(m.maximal_pfaffians().is_err());
    }

    #[test]
    fn intersection_of_principal_submodules() {
        let r = ring(2);
        let z = |s: &str| r.parse(s).unwrap();
        let a = GradedMatrix::new(r, vec![vec![z("z0")]], vec![0], vec![1]).unwrap();
        let b = GradedMatrix::new(r, vec![vec![z("z1")]], vec![0], vec![1]).unwrap();
        let c = a.module_intersection(&b).unwrap();
        assert_eq!(c.cols(), 1);
        assert_eq!(c.entry(0, 0), &r.parse("z0*z1").unwrap());
    }
}
