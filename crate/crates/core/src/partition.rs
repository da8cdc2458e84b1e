//! Integer partitions, Frobenius coordinates, skew shapes and ribbons.
//!
//! A [`Partition`] is kept trimmed: no trailing zeros, so structural equality
//! is equality of partitions. The text syntax is `6,5,5,1`, with `-` for the
//! empty partition.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Rejects increasing inputs.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Caller guarantees the parts are weakly decreasing; zeros are trimmed.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts, l(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The i-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let mut conj = Vec::with_capacity(self.first());
        for j in 0..self.first() {
            conj.push(self.0.iter().take_while(|&&p| p > j).count());
        }
        Partition(conj)
    }

    /// Frobenius rank: the number of diagonal cells.
    pub fn rank(&self) -> usize {
        self.0.iter().enumerate().take_while(|(i, &p)| p > *i).count()
    }

    /// rk_c: the rank after deleting the first c rows (c ≥ 0) or the first
    /// −c columns (c < 0).
    pub fn shifted_rank(&self, c: i64) -> usize {
        if c >= 0 {
            let c = c as usize;
            self.0
                .iter()
                .skip(c)
                .enumerate()
                .take_while(|(i, &p)| p > *i)
                .count()
        } else {
            let cut = c.unsigned_abs() as usize;
            self.0
                .iter()
                .enumerate()
                .take_while(|(i, &p)| p > cut + *i)
                .count()
        }
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let r = self.rank();
        FrobeniusCoords {
            arms: (0..r).map(|i| self.0[i] - i - 1).collect(),
            legs: (0..r).map(|i| conj.0[i] - i - 1).collect(),
        }
    }

    pub fn from_frobenius(coords: &FrobeniusCoords) -> Result<Partition> {
        let FrobeniusCoords { arms, legs } = coords;
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strict(arms) || !strict(legs) {
            return Err(Error::InvalidPartition(format!("bad Frobenius coordinates {coords}")));
        }
        let r = arms.len();
        // Row i < r has arms[i] + i + 1 cells; rows below the diagonal square are
        // read off the legs column by column.
        let height = legs.first().map_or(0, |&l| l + 1);
        let mut parts = vec![0usize; height];
        for (i, &a) in arms.iter().enumerate() {
            parts[i] = a + i + 1;
        }
        for (j, &l) in legs.iter().enumerate() {
            for row in parts.iter_mut().take(j + l + 1).skip(r) {
                *row += 1;
            }
        }
        Partition::new(parts)
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| row - j + conj.0[j] - i - 1).collect())
            .collect()
    }

    /// λ ⊇ μ, cellwise.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// True iff the Frobenius coordinates have the form (u+z | u).
    pub fn is_z_asymmetric(&self, z: i64) -> bool {
        if z < 0 {
            return self.conjugate().is_z_asymmetric(-z);
        }
        let f = self.frobenius();
        f.arms.iter().zip(&f.legs).all(|(&a, &l)| a as i64 == l as i64 + z)
    }

    /// λ + (m^rows): add m (possibly negative) to each of the first `rows`
    /// parts. `None` when the result is not a partition.
    pub fn add_rectangle(&self, m: i64, rows: usize) -> Option<Partition> {
        if m == 0 || rows == 0 {
            return Some(self.clone());
        }
        let n = rows.max(self.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = self.part(i) as i64 + if i < rows { m } else { 0 };
            if v < 0 {
                return None;
            }
            out.push(v as usize);
        }
        if out.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition::from_sorted(out))
    }

    /// Multiplicity of each part size: `m[i]` counts parts equal to i.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first() + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Number of odd parts.
    pub fn odd_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Multiply every part by t.
    pub fn scale(&self, t: usize) -> Partition {
        Partition::from_sorted(self.0.iter().map(|p| p * t).collect())
    }

    /// λ/t: divide every part by t, if t divides all of them.
    pub fn divide(&self, t: usize) -> Option<Partition> {
        if self.0.iter().all(|p| p % t == 0) {
            Some(Partition(self.0.iter().map(|p| p / t).collect()))
        } else {
            None
        }
    }

    /// Union of multisets of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j == other.len() || (i < self.len() && self.0[i] >= other.0[j]) {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        Partition(v)
    }

    /// All partitions of n, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most n, by size then reverse lexicographic.
    pub fn up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }

    /// All μ ⊆ λ.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        sub_fill(&self.0, 0, usize::MAX, &mut cur, &mut out);
        out
    }

    /// All partitions contained in the shape `bound` (a weakly decreasing row
    /// bound list), of exactly the given size.
    pub fn contained_of_size(bound: &Partition, size: usize) -> Vec<Partition> {
        bound.subpartitions().into_iter().filter(|p| p.size() == size).collect()
    }
}

fn fill(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=rem.min(max)).rev() {
        cur.push(p);
        fill(rem - p, p, cur, out);
        cur.pop();
    }
}

fn sub_fill(bound: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition(cur.clone()));
    if i == bound.len() {
        return;
    }
    for p in 1..=bound[i].min(max) {
        cur.push(p);
        sub_fill(bound, i + 1, p, cur, out);
        cur.pop();
    }
}

impl std::ops::Index<usize> for Partition {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        self.0.get(i).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidPartition(format!("{s}: {e}")))?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl From<&[usize]> for Partition {
    /// Panics if the slice is not weakly decreasing; meant for literals.
    fn from(v: &[usize]) -> Self {
        Partition::new(v.to_vec()).expect("weakly decreasing parts")
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(v: [usize; N]) -> Self {
        Partition::new(v.to_vec()).expect("weakly decreasing parts")
    }
}

/// (arms | legs), both strictly decreasing and of equal length rk(λ).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FrobeniusCoords {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", j(&self.arms), j(&self.legs))
    }
}

/// λ/μ with μ ⊆ λ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    /// λ/∅.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.outer == self.inner
    }

    /// Cells (row, column), 0-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::with_capacity(self.size());
        for i in 0..self.outer.len() {
            for j in self.inner.part(i)..self.outer.part(i) {
                v.push((i, j));
            }
        }
        v
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    /// (size, height) if the shape is a nonempty ribbon: edge-connected with
    /// no 2×2 block. Height is the number of occupied rows minus one.
    pub fn ribbon_info(&self) -> Option<(usize, usize)> {
        let rows: Vec<usize> = (0..self.outer.len())
            .filter(|&i| self.outer.part(i) > self.inner.part(i))
            .collect();
        let (&top, &bottom) = (rows.first()?, rows.last()?);
        if bottom - top + 1 != rows.len() {
            return None;
        }
        // Consecutive rows must overlap in exactly one column, which is both
        // edge-connectivity and the absence of 2×2 blocks.
        for i in top..bottom {
            if self.inner.part(i) + 1 != self.outer.part(i + 1) {
                return None;
            }
        }
        Some((self.size(), bottom - top))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// All z-asymmetric partitions of size at most `max_size`, ordered by size
/// and then reverse lexicographically.
pub fn enumerate_z_asymmetric(z: i64, max_size: usize) -> Vec<Partition> {
    if z < 0 {
        let mut v: Vec<Partition> =
            enumerate_z_asymmetric(-z, max_size).iter().map(Partition::conjugate).collect();
        sort_by_size(&mut v);
        return v;
    }
    let z = z as usize;
    let mut out = Vec::new();
    let mut legs = Vec::new();
    // Diagonal hooks are 2u + z + 1 with u strictly decreasing.
    fn go(z: usize, budget: usize, below: usize, legs: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let mut legs_sorted = legs.clone();
        legs_sorted.reverse();
        let arms = legs_sorted.iter().map(|u| u + z).collect();
        out.push(
            Partition::from_frobenius(&FrobeniusCoords { arms, legs: legs_sorted })
                .expect("strict legs give valid coordinates"),
        );
        for u in (legs.last().map_or(0, |&l| l + 1))..below {
            let hook = 2 * u + z + 1;
            if hook > budget {
                break;
            }
            legs.push(u);
            go(z, budget - hook, below, legs, out);
            legs.pop();
        }
    }
    go(z, max_size, max_size + 1, &mut legs, &mut out);
    sort_by_size(&mut out);
    out
}

fn sort_by_size(v: &mut [Partition]) {
    v.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("6,5,5,1").conjugate(), p("4,3,3,3,3,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("3").conjugate(), p("1,1,1"));
    }

    #[test]
    fn frobenius_examples() {
        let f = p("6,5,5,1").frobenius();
        assert_eq!(f.arms, vec![5, 3, 2]);
        assert_eq!(f.legs, vec![3, 1, 0]);
        assert_eq!(f.to_string(), "(5,3,2 | 3,1,0)");
        assert_eq!(Partition::empty().frobenius(), FrobeniusCoords::default());
        let f = p("2").frobenius();
        assert_eq!((f.arms, f.legs), (vec![1], vec![0]));
    }

    #[test]
    fn shifted_rank_examples() {
        let l = p("6,5,5,1");
        assert_eq!(l.shifted_rank(2), 1);
        assert_eq!(l.shifted_rank(-3), 2);
        assert_eq!(l.shifted_rank(0), l.rank());
        assert_eq!(Partition::empty().shifted_rank(5), 0);
    }

    #[test]
    fn hooks() {
        assert_eq!(p("6,5,5,1").hook_lengths()[0][0], 9);
        assert_eq!(p("1").hook_lengths(), vec![vec![1]]);
        assert_eq!(p("2,1").hook_lengths(), vec![vec![3, 1], vec![1]]);
    }

    #[test]
    fn z_asymmetry() {
        assert!(p("6,5,5,1").is_z_asymmetric(2));
        assert!(p("2").is_z_asymmetric(1));
        assert!(p("2,1").is_z_asymmetric(0));
        assert!(!p("3,1").is_z_asymmetric(0));
        assert!(Partition::empty().is_z_asymmetric(-7));
    }

    #[test]
    fn enumerate_small() {
        let v = enumerate_z_asymmetric(0, 4);
        assert_eq!(v, vec![p("-"), p("1"), p("2,1"), p("2,2")]);
        assert_eq!(enumerate_z_asymmetric(3, 0), vec![p("-")]);
        assert_eq!(enumerate_z_asymmetric(1, 2), vec![p("-"), p("2")]);
        assert_eq!(enumerate_z_asymmetric(-1, 2), vec![p("-"), p("1,1")]);
    }

    #[test]
    fn ribbons() {
        let s = SkewShape::new(p("6,5,5,1"), p("4,4,2,1")).unwrap();
        assert_eq!(s.ribbon_info(), Some((6, 2)));
        assert_eq!(SkewShape::straight(p("1")).ribbon_info(), Some((1, 0)));
        assert_eq!(SkewShape::new(p("2,2"), p("2")).unwrap().ribbon_info(), Some((2, 0)));
        assert_eq!(SkewShape::straight(p("2,2")).ribbon_info(), None);
        assert_eq!(SkewShape::new(p("2,1"), p("1")).unwrap().ribbon_info(), None);
        assert_eq!(SkewShape::straight(p("-")).ribbon_info(), None);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("6,5,5,1").to_string(), "6,5,5,1");
        assert_eq!(p("-").to_string(), "-");
        assert_eq!(p("3,1,0,0"), p("3,1"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(p("2,1").subpartitions().len(), 5);
    }

    #[test]
    fn rectangles() {
        assert_eq!(p("2,1").add_rectangle(1, 3), Some(p("3,2,1")));
        assert_eq!(p("3,2").add_rectangle(-2, 1), None);
        assert_eq!(p("3,1").add_rectangle(-1, 1), Some(p("2,1")));
        assert_eq!(p("1").add_rectangle(-1, 2), None);
    }
}
