//! Degrees in `N^k` and grades in `Z^k`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An element of `N^k` with the coordinatewise partial order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Degree(Vec<u32>);

impl Degree {
    pub fn zero(rank: usize) -> Self {
        Degree(vec![0; rank])
    }

    /// The standard basis vector `e_i` (0-based color index).
    pub fn unit(rank: usize, color: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[color] = 1;
        Degree(coords)
    }

    pub fn from_coords(coords: Vec<u32>) -> Self {
        Degree(coords)
    }

    /// `(c, c, ..., c)`.
    pub fn splat(rank: usize, c: u32) -> Self {
        Degree(vec![c; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, color: usize) -> u32 {
        self.0[color]
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn le(&self, other: &Degree) -> bool {
        debug_assert_eq!(self.rank(), other.rank());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn join(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn meet(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn checked_add(&self, other: &Degree) -> Result<Degree> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::DegreeOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Degree)
    }

    /// Sum that panics on overflow; path degrees are bounded by word length.
    pub fn add(&self, other: &Degree) -> Degree {
        self.checked_add(other).expect("degree overflow")
    }

    /// `self - other`, defined only when `other <= self`.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        if !other.le(self) {
            return None;
        }
        Some(Degree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Componentwise positive part of `self - other`.
    pub fn saturating_sub(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn scale(&self, c: u32) -> Degree {
        Degree(self.0.iter().map(|a| a * c).collect())
    }

    /// Signed difference `self - other` in `Z^k`.
    pub fn grade_minus(&self, other: &Degree) -> Grade {
        Grade(self.0.iter().zip(&other.0).map(|(a, b)| *a as i64 - *b as i64).collect())
    }

    /// All degrees `m` with `0 <= m <= self`, in [`Degree::cmp`] order.
    pub fn below(&self) -> Vec<Degree> {
        let mut out = vec![Vec::with_capacity(self.rank())];
        for &c in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=c).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        let mut out: Vec<Degree> = out.into_iter().map(Degree).collect();
        out.sort();
        out
    }

    /// Parses `a,b,...`.
    pub fn parse(s: &str) -> Result<Degree> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidArgument(format!("bad degree component `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Degree)
    }
}

/// Degree-lexicographic: total degree first, then coordinates.
impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An element of `Z^k`, the grading group.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Grade(Vec<i64>);

impl Grade {
    pub fn zero(rank: usize) -> Self {
        Grade(vec![0; rank])
    }

    pub fn from_coords(coords: Vec<i64>) -> Self {
        Grade(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Grade) -> Grade {
        Grade(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Grade {
        Grade(self.0.iter().map(|a| -a).collect())
    }

    pub fn parse(s: &str) -> Result<Grade> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad grade component `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Grade)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn deg(c: &[u32]) -> Degree {
        Degree::from_coords(c.to_vec())
    }

    #[test]
    fn below_enumerates_box() {
        let all = deg(&[1, 2]).below();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], deg(&[0, 0]));
        assert_eq!(all[5], deg(&[1, 2]));
    }

    #[test]
    fn sub_requires_order() {
        assert_eq!(deg(&[2, 1]).checked_sub(&deg(&[1, 1])), Some(deg(&[1, 0])));
        assert_eq!(deg(&[0, 1]).checked_sub(&deg(&[1, 0])), None);
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(deg(&[u32::MAX]).checked_add(&deg(&[1])), Err(Error::DegreeOverflow)));
    }

    #[test]
    fn parse_and_display() {
        let d = Degree::parse("2, 3").unwrap();
        assert_eq!(d.to_string(), "(2,3)");
        assert!(Degree::parse("2,x").is_err());
        assert_eq!(Grade::parse("1,-1").unwrap().to_string(), "(1,-1)");
    }

    fn arb_deg() -> impl Strategy<Value = Degree> {
        proptest::collection::vec(0u32..6, 3).prop_map(Degree::from_coords)
    }

    proptest! {
        #[test]
        fn lattice_laws(a in arb_deg(), b in arb_deg(), c in arb_deg()) {
            prop_assert_eq!(a.join(&b), b.join(&a));
            prop_assert_eq!(a.meet(&b), b.meet(&a));
            prop_assert_eq!(a.join(&b.join(&c)), a.join(&b).join(&c));
            prop_assert_eq!(a.meet(&b.meet(&c)), a.meet(&b).meet(&c));
            prop_assert_eq!(a.join(&a.meet(&b)), a.clone());
            prop_assert_eq!(a.meet(&a.join(&b)), a.clone());
            prop_assert!(a.le(&a.join(&b)) && a.meet(&b).le(&a));
        }

        #[test]
        fn sub_inverts_add(a in arb_deg(), b in arb_deg()) {
            let s = a.add(&b);
            prop_assert_eq!(s.checked_sub(&b), Some(a.clone()));
            prop_assert_eq!(a.add(&b.saturating_sub(&a)), a.join(&b));
        }
    }
}
