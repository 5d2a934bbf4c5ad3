//! Free resolutions of homogeneous ideals, built one syzygy step at a time,
//! their minimization, Betti tables and the Gorenstein certificate.

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::groebner::{h_vector_is_symmetric, Ideal};
use crate::matrix::GradedMatrix;
use crate::poly::{Polynomial, Ring};
use crate::rng::Rng;
use serde::{Deserialize, Serialize};

/// `maps[0]` is the `1 x k` row of generators of the ideal and `maps[i]`
/// presents the kernel of `maps[i - 1]`. The free module at step `i` is the
/// source of `maps[i]`.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Ring,
    maps: Vec<GradedMatrix>,
    minimal: bool,
}

impl Resolution {
    /// With `minimal`, each step is a minimal generating set of the kernel
    /// (starting from minimal generators of the ideal), giving the minimal
    /// resolution. Otherwise the given generators are kept and each kernel
    /// is presented by all syzygies found by the elimination, which usually
    /// leaves unit entries behind. Kernels that are free by the syzygy
    /// theorem are always given by a basis, so both modes stop within the
    /// length bound.
    pub fn of_ideal(ideal: &Ideal, minimal: bool) -> Result<Resolution> {
        let ring = ideal.ring();
        if ideal.is_zero() {
            return Ok(Resolution {
                ring,
                maps: Vec::new(),
                minimal: true,
            });
        }
        let first = if minimal {
            GradedMatrix::from_ideal(&ideal.minimal_generators())
        } else {
            GradedMatrix::from_ideal(ideal)
        };
        let mut maps = vec![first];
        loop {
            let free_kernel = maps.len() + 1 >= ring.nvars();
            let s = maps.last().unwrap().syzygy_with(minimal || free_kernel);
            if s.cols() == 0 {
                break;
            }
            maps.push(s);
            if maps.len() > ring.nvars() {
                return Err(Error::Certificate(format!(
                    "resolution exceeds the length bound {}",
                    ring.nvars()
                )));
            }
        }
        let mut r = Resolution { ring, maps, minimal };
        if !minimal && !r.has_units() {
            r.minimal = true;
        }
        Ok(r)
    }

    pub fn from_maps(ring: Ring, maps: Vec<GradedMatrix>) -> Result<Resolution> {
        for w in maps.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Err(Error::Certificate("consecutive maps do not compose to zero".into()));
            }
        }
        let mut r = Resolution {
            ring,
            maps,
            minimal: false,
        };
        r.minimal = !r.has_units();
        Ok(r)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn maps(&self) -> &[GradedMatrix] {
        &self.maps
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Number of free modules (`pd(R/I)` for a resolution of `I`).
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Any nonzero constant in a differential past the generator row.
    pub fn has_units(&self) -> bool {
        self.maps.iter().skip(1).any(|m| find_unit(m).is_some())
    }

    pub fn is_complex(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn betti(&self) -> BettiTable {
        let degs: Vec<Vec<i32>> = self.maps.iter().map(|m| m.col_twists().to_vec()).collect();
        BettiTable::from_degrees(&degs)
    }

    pub fn regularity(&self) -> Result<i64> {
        if !self.minimal {
            return Err(Error::NotMinimal);
        }
        Ok(self.betti().regularity().unwrap_or(0))
    }

    /// Remove unit entries by elimination, from the generator end.
    ///
    /// For a unit `u` at `(i, j)` of `d_k`, the columns of `d_k` become
    /// `d_k[.][l] - d_k[i][l] / u * d_k[.][j]`, row `i` and column `j` go,
    /// row `j` of `d_{k+1}` and column `i` of `d_{k-1}` go.
    pub fn minimize(&self) -> Resolution {
        let f = self.ring.field();
        let mut maps = self.maps.clone();
        for k in 1..maps.len() {
            while let Some((i, j)) = find_unit(&maps[k]) {
                let d = &maps[k];
                let u = d.entry(i, j).leading_coefficient().unwrap();
                let uinv = f.inv(u);
                let rows: Vec<usize> = (0..d.rows()).filter(|&r| r != i).collect();
                let cols: Vec<usize> = (0..d.cols()).filter(|&c| c != j).collect();
                let mut nd = d.select_rows(&rows).select_columns(&cols);
                for (ci, &l) in cols.iter().enumerate() {
                    let a = d.entry(i, l);
                    if a.is_zero() {
                        continue;
                    }
                    let c = f.neg(uinv);
                    for (ri, &r) in rows.iter().enumerate() {
                        let b = d.entry(r, j);
                        if b.is_zero() {
                            continue;
                        }
                        let e = nd.entry(ri, ci).add_scaled(&b.mul_unchecked(a), c, None);
                        nd.set_entry(ri, ci, e);
                    }
                }
                maps[k] = nd;
                let prev = &maps[k - 1];
                let keep: Vec<usize> = (0..prev.cols()).filter(|&c| c != i).collect();
                maps[k - 1] = prev.select_columns(&keep);
                if k + 1 < maps.len() {
                    let next = &maps[k + 1];
                    let keep: Vec<usize> = (0..next.rows()).filter(|&r| r != j).collect();
                    maps[k + 1] = next.select_rows(&keep);
                }
            }
        }
        while maps.last().is_some_and(|m| m.cols() == 0) {
            maps.pop();
        }
        Resolution {
            ring: self.ring,
            maps,
            minimal: true,
        }
    }

    /// Insert a trivial summand `R(-degree)` at steps `step` and `step + 1`,
    /// mapped isomorphically onto each other and mixed with random multiples
    /// of the existing columns.
    pub fn with_ghost_pair(&self, step: usize, degree: i32, rng: &mut Rng) -> Result<Resolution> {
        if step == 0 || step >= self.maps.len() {
            return Err(Error::OutOfRange {
                index: step,
                len: self.maps.len().saturating_sub(1),
            });
        }
        let ring = self.ring;
        let mut maps = self.maps.clone();
        // New basis vector e' in F_step: d_step(e') = 0.
        maps[step] = append_column(&maps[step], vec![ring.zero(); maps[step].rows()], degree);
        // New basis vector e'' in F_{step+1}: d(e'') = e' + random image.
        let mut col = vec![ring.zero(); maps[step].cols()];
        *col.last_mut().unwrap() = ring.one();
        if step + 1 < maps.len() {
            let old = &maps[step + 1];
            let mut d = old.clone();
            d = append_row(&d, degree);
            for l in 0..old.cols() {
                let e = old.col_twists()[l];
                if e <= degree {
                    let g: Polynomial = ring.random_form((degree - e) as u32, rng);
                    for (r, c) in col.iter_mut().enumerate().take(old.rows()) {
                        let x = old.entry(r, l);
                        if !x.is_zero() && !g.is_zero() {
                            *c = c.add_scaled(&x.mul_unchecked(&g), 1, None);
                        }
                    }
                }
            }
            maps[step + 1] = append_column(&d, col, degree);
            if step + 2 < maps.len() {
                maps[step + 2] = append_row(&maps[step + 2], degree);
            }
        } else {
            let rt = maps[step].col_twists().to_vec();
            let m = GradedMatrix::new(ring, col.into_iter().map(|c| vec![c]).collect(), rt, vec![degree])?;
            maps.push(m);
        }
        Resolution::from_maps(ring, maps)
    }

    /// Text dump: one block per map with its twist headers.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (k, m) in self.maps.iter().enumerate() {
            s.push_str(&format!("map {k} {}x{}\n", m.rows(), m.cols()));
            s.push_str(&crate::io::write_matrix_body(m));
        }
        s
    }
}

fn find_unit(m: &GradedMatrix) -> Option<(usize, usize)> {
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            let e = m.entry(i, j);
            if !e.is_zero() && e.is_constant() {
                return Some((i, j));
            }
        }
    }
    None
}

fn append_column(m: &GradedMatrix, col: Vec<Polynomial>, twist: i32) -> GradedMatrix {
    let mut entries: Vec<Vec<Polynomial>> = (0..m.rows()).map(|i| m.row(i)).collect();
    for (r, c) in entries.iter_mut().zip(col) {
        r.push(c);
    }
    let mut ct = m.col_twists().to_vec();
    ct.push(twist);
    GradedMatrix::new(m.ring(), entries, m.row_twists().to_vec(), ct).expect("homogeneous column")
}

fn append_row(m: &GradedMatrix, twist: i32) -> GradedMatrix {
    let mut entries: Vec<Vec<Polynomial>> = (0..m.rows()).map(|i| m.row(i)).collect();
    entries.push(vec![m.ring().zero(); m.cols()]);
    let mut rt = m.row_twists().to_vec();
    rt.push(twist);
    GradedMatrix::new(m.ring(), entries, rt, m.col_twists().to_vec()).expect("zero row")
}

/// The four checks for an arithmetically Gorenstein quotient `R/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinCertificate {
    pub codimension: i64,
    /// Length of the minimal resolution of `R/I`.
    pub projective_dimension: i64,
    pub cohen_macaulay: bool,
    pub last_rank: usize,
    pub last_rank_one: bool,
    pub h_vector: Vec<i64>,
    pub symmetric_h_vector: bool,
    pub is_gorenstein: bool,
}

impl GorensteinCertificate {
    pub fn from_resolution(ideal: &Ideal, res: &Resolution) -> GorensteinCertificate {
        let codimension = ideal.codimension();
        let projective_dimension = res.len() as i64;
        let last_rank = res.maps().last().map_or(0, |m| m.cols());
        let h_vector = ideal.h_vector();
        let cohen_macaulay = projective_dimension == codimension;
        let last_rank_one = last_rank == 1;
        let symmetric_h_vector = h_vector_is_symmetric(&h_vector);
        GorensteinCertificate {
            codimension,
            projective_dimension,
            cohen_macaulay,
            last_rank,
            last_rank_one,
            symmetric_h_vector,
            is_gorenstein: cohen_macaulay && last_rank_one && symmetric_h_vector,
            h_vector,
        }
    }
}

pub fn gorenstein_certificate(ideal: &Ideal) -> Result<GorensteinCertificate> {
    let res = Resolution::of_ideal(ideal, true)?;
    Ok(GorensteinCertificate::from_resolution(ideal, &res))
}
