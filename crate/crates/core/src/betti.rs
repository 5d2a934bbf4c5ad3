//! Graded Betti tables: ranks of free modules indexed by homological step
//! and generator degree. Step 0 holds the generators of the ideal, so an
//! entry `(i, d)` with rank `b` is the summand `b R(-d)` of the `i`-th free
//! module in `... -> F_1 -> F_0 -> I -> 0`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    /// Serialized as `[[degree, rank], ...]` per step, so the table reads
    /// back from formats without integer map keys.
    #[serde(with = "pair_lists")]
    steps: Vec<BTreeMap<i32, usize>>,
}

mod pair_lists {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(steps: &[BTreeMap<i32, usize>], s: S) -> Result<S::Ok, S::Error> {
        let lists: Vec<Vec<(i32, usize)>> = steps.iter().map(|m| m.iter().map(|(&d, &b)| (d, b)).collect()).collect();
        lists.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BTreeMap<i32, usize>>, D::Error> {
        let lists = Vec::<Vec<(i32, usize)>>::deserialize(d)?;
        Ok(lists.into_iter().map(|l| l.into_iter().collect()).collect())
    }
}

/// A summand `count R(-degree)` present in both `step` and `step + 1` of a
/// non-minimal resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GhostPair {
    pub step: usize,
    pub degree: i32,
    pub count: usize,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `steps[i]` lists `(degree, rank)` pairs of step `i`.
    pub fn from_steps(steps: &[&[(i32, usize)]]) -> Self {
        let mut t = Self::new();
        for (i, s) in steps.iter().enumerate() {
            for &(d, r) in s.iter() {
                t.add(i, d, r);
            }
        }
        t
    }

    /// From the generator degrees of each free module.
    pub fn from_degrees(steps: &[Vec<i32>]) -> Self {
        let mut t = Self::new();
        for (i, s) in steps.iter().enumerate() {
            for &d in s {
                t.add(i, d, 1);
            }
        }
        t
    }

    pub fn add(&mut self, step: usize, degree: i32, rank: usize) {
        if rank == 0 {
            return;
        }
        while self.steps.len() <= step {
            self.steps.push(BTreeMap::new());
        }
        *self.steps[step].entry(degree).or_insert(0) += rank;
    }

    pub fn get(&self, step: usize, degree: i32) -> usize {
        self.steps.get(step).and_then(|s| s.get(&degree)).copied().unwrap_or(0)
    }

    pub fn step(&self, step: usize) -> BTreeMap<i32, usize> {
        self.steps.get(step).cloned().unwrap_or_default()
    }

    /// Number of steps (index of the last nonempty step plus one).
    pub fn len(&self) -> usize {
        self.steps.iter().rposition(|s| !s.is_empty()).map_or(0, |i| i + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rank(&self, step: usize) -> usize {
        self.steps.get(step).map_or(0, |s| s.values().sum())
    }

    /// `(step, degree, rank)` rows in increasing order.
    pub fn entries(&self) -> Vec<(usize, i32, usize)> {
        let mut out = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            for (&d, &r) in s {
                if r > 0 {
                    out.push((i, d, r));
                }
            }
        }
        out
    }

    /// `max_i (max degree at step i - i)`.
    pub fn regularity(&self) -> Option<i64> {
        self.entries().iter().map(|&(i, d, _)| d as i64 - i as i64).max()
    }

    /// Numerator `Q(t)` of the Hilbert series of `R/I`:
    /// `1 - sum_i (-1)^i sum_d b_{i,d} t^d`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let top = self.entries().iter().map(|e| e.1).max().unwrap_or(0).max(0) as usize;
        let mut q = vec![0i64; top + 1];
        q[0] = 1;
        for (i, d, r) in self.entries() {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            q[d as usize] += sign * r as i64;
        }
        while q.len() > 1 && *q.last().unwrap() == 0 {
            q.pop();
        }
        q
    }

    /// Alternating rank sum `rank R - sum_i (-1)^i rank F_i`, which is zero
    /// when the resolved ideal is nonzero of rank one.
    pub fn alternating_rank_sum(&self) -> i64 {
        let mut s = 1i64;
        for i in 0..self.len() {
            let r = self.rank(i) as i64;
            s += if i % 2 == 0 { -r } else { r };
        }
        s
    }

    /// If `self - other` is nonnegative and made of ghost pairs (equal
    /// summands in adjacent steps), return those pairs.
    pub fn ghost_pairs_over(&self, other: &BettiTable) -> Option<Vec<GhostPair>> {
        let n = self.len().max(other.len());
        let mut diff: Vec<BTreeMap<i32, i64>> = vec![BTreeMap::new(); n + 1];
        for i in 0..n {
            let mut degs: Vec<i32> = self.step(i).keys().copied().collect();
            degs.extend(other.step(i).keys().copied());
            for d in degs {
                let v = self.get(i, d) as i64 - other.get(i, d) as i64;
                if v < 0 {
                    return None;
                }
                if v > 0 {
                    diff[i].insert(d, v);
                }
            }
        }
        let mut pairs = Vec::new();
        for i in 0..n {
            let cur = std::mem::take(&mut diff[i]);
            for (d, v) in cur {
                let next = diff[i + 1].get(&d).copied().unwrap_or(0);
                if next < v {
                    return None;
                }
                diff[i + 1].insert(d, next - v);
                pairs.push(GhostPair {
                    step: i,
                    degree: d,
                    count: v as usize,
                });
            }
            diff[i + 1].retain(|_, v| *v > 0);
        }
        Some(pairs)
    }

    /// Does `other` embed into `self` up to ghost pairs.
    pub fn embeds(&self, other: &BettiTable) -> bool {
        self.ghost_pairs_over(other).is_some()
    }

    /// Rows `step twist rank`, one per line.
    pub fn to_rows(&self) -> String {
        let mut s = String::new();
        for (i, d, r) in self.entries() {
            s.push_str(&format!("{i} {d} {r}\n"));
        }
        s
    }

    pub fn parse_rows(text: &str) -> Option<BettiTable> {
        let mut t = BettiTable::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return None;
            }
            t.add(parts[0].parse().ok()?, parts[1].parse().ok()?, parts[2].parse().ok()?);
        }
        Some(t)
    }
}

fn summand(d: i32, r: usize) -> String {
    let base = if d == 0 { "R".to_string() } else { format!("R({})", -d) };
    if r == 1 {
        base
    } else {
        format!("{r}{base}")
    }
}

/// Displays as `0 -> R(-12) -> R(-6)+2R(-9) -> 2R(-3)+R(-6) -> I -> 0`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0")?;
        for i in (0..self.len()).rev() {
            let parts: Vec<String> = self.step(i).iter().filter(|(_, &r)| r > 0).map(|(&d, &r)| summand(d, r)).collect();
            write!(f, " -> {}", if parts.is_empty() { "0".to_string() } else { parts.join("+") })?;
        }
        write!(f, " -> I -> 0")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_table() {
        let t = BettiTable::from_steps(&[&[(1, 4)], &[(2, 6)], &[(3, 4)], &[(4, 1)]]);
        assert_eq!(t.len(), 4);
        assert_eq!(t.regularity(), Some(1));
        assert_eq!(t.hilbert_numerator(), vec![1, -4, 6, -4, 1]);
        assert_eq!(t.alternating_rank_sum(), 0);
        assert_eq!(t.to_string(), "0 -> R(-4) -> 4R(-3) -> 6R(-2) -> 4R(-1) -> I -> 0");
        assert_eq!(BettiTable::parse_rows(&t.to_rows()), Some(t));
    }

    #[test]
    fn ghost_pairs() {
        let raw = BettiTable::from_steps(&[&[(3, 2), (6, 5)], &[(6, 5), (9, 2)], &[(12, 1)]]);
        let min = BettiTable::from_steps(&[&[(3, 2), (6, 1)], &[(6, 1), (9, 2)], &[(12, 1)]]);
        let g = raw.ghost_pairs_over(&min).unwrap();
        assert_eq!(g, vec![GhostPair { step: 0, degree: 6, count: 4 }]);
        assert!(!min.embeds(&raw));
        let bad = BettiTable::from_steps(&[&[(3, 2), (6, 2)], &[(6, 1), (9, 2)], &[(12, 1)]]);
        assert!(raw.ghost_pairs_over(&bad).is_none());
    }
}
