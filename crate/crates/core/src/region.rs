//! Exact set algebra on finite unions of half-open intervals.
//!
//! Every [`Region`] lives inside a bounded [`Universe`] `[lo, hi)` and is kept
//! in canonical form: parts sorted, pairwise disjoint and never adjacent. Two
//! regions are therefore equal exactly when their part lists are identical.
//!
//! Endpoints are never produced by arithmetic. Every operation only selects
//! among endpoints already present in its operands, so comparisons are exact.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegionError {
    #[error("invalid interval [{lo}, {hi}): endpoints must be finite with lo <= hi")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("interval [{lo}, {hi}) lies entirely outside the universe {universe}")]
    OutOfUniverse { lo: f64, hi: f64, universe: Universe },
    #[error("regions belong to different universes ({left} vs {right})")]
    UniverseMismatch { left: Universe, right: Universe },
    #[error("invalid universe [{lo}, {hi}): need finite lo < hi")]
    InvalidUniverse { lo: f64, hi: f64 },
}

/// The carrier set `[lo, hi)` of elementary events.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Universe {
    lo: f64,
    hi: f64,
}

impl Universe {
    pub fn new(lo: f64, hi: f64) -> Result<Self, RegionError> {
        if lo.is_finite() && hi.is_finite() && lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(RegionError::InvalidUniverse { lo, hi })
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, omega: f64) -> bool {
        self.lo <= omega && omega < self.hi
    }

    /// The region covering the whole universe.
    pub fn full(self) -> Region {
        Region {
            universe: self,
            parts: vec![Interval {
                lo: self.lo,
                hi: self.hi,
            }],
        }
    }

    pub fn empty(self) -> Region {
        Region {
            universe: self,
            parts: Vec::new(),
        }
    }
}

impl Default for Universe {
    /// The age axis `[0, 80)`.
    fn default() -> Self {
        Self { lo: 0.0, hi: 80.0 }
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

/// A non-empty half-open interval `[lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    /// Returns `None` for empty or non-finite intervals.
    pub fn new(lo: f64, hi: f64) -> Option<Self> {
        (lo.is_finite() && hi.is_finite() && lo < hi).then_some(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, omega: f64) -> bool {
        self.lo <= omega && omega < self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

/// A canonical finite union of half-open intervals inside a universe.
#[derive(Debug, Clone, PartialEq)]
pub struct Region {
    universe: Universe,
    parts: Vec<Interval>,
}

impl Region {
    /// Builds the canonical union of `intervals`, clipped to the universe.
    ///
    /// Pairs with `lo == hi` contribute nothing. A non-degenerate pair that
    /// misses the universe entirely is rejected rather than silently dropped.
    pub fn normalize<I>(intervals: I, universe: Universe) -> Result<Self, RegionError>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        let mut clipped = Vec::new();
        for (lo, hi) in intervals {
            if !(lo.is_finite() && hi.is_finite()) || lo > hi {
                return Err(RegionError::InvalidInterval { lo, hi });
            }
            if lo == hi {
                continue;
            }
            if hi <= universe.lo || lo >= universe.hi {
                return Err(RegionError::OutOfUniverse { lo, hi, universe });
            }
            clipped.push(Interval {
                lo: lo.max(universe.lo),
                hi: hi.min(universe.hi),
            });
        }
        clipped.sort_by(|a, b| a.lo.total_cmp(&b.lo));

        let mut parts: Vec<Interval> = Vec::with_capacity(clipped.len());
        for iv in clipped {
            match parts.last_mut() {
                // Overlapping or touching parts fuse.
                Some(last) if iv.lo <= last.hi => last.hi = last.hi.max(iv.hi),
                _ => parts.push(iv),
            }
        }
        Ok(Self { universe, parts })
    }

    pub fn interval(lo: f64, hi: f64, universe: Universe) -> Result<Self, RegionError> {
        Self::normalize([(lo, hi)], universe)
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total length of the region.
    pub fn measure(&self) -> f64 {
        self.parts.iter().map(Interval::len).sum()
    }

    pub fn contains(&self, omega: f64) -> bool {
        let idx = self.parts.partition_point(|p| p.lo <= omega);
        idx > 0 && omega < self.parts[idx - 1].hi
    }

    pub fn union(&self, other: &Region) -> Result<Region, RegionError> {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &Region) -> Result<Region, RegionError> {
        self.combine(other, |a, b| a && b)
    }

    pub fn symdiff(&self, other: &Region) -> Result<Region, RegionError> {
        self.combine(other, |a, b| a != b)
    }

    pub fn difference(&self, other: &Region) -> Result<Region, RegionError> {
        self.combine(other, |a, b| a && !b)
    }

    /// `universe \ self`.
    pub fn complement(&self) -> Region {
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        let mut cursor = self.universe.lo;
        for p in &self.parts {
            if cursor < p.lo {
                parts.push(Interval { lo: cursor, hi: p.lo });
            }
            cursor = p.hi;
        }
        if cursor < self.universe.hi {
            parts.push(Interval {
                lo: cursor,
                hi: self.universe.hi,
            });
        }
        Region {
            universe: self.universe,
            parts,
        }
    }

    /// Boolean combination by sweeping the merged endpoint list. On each
    /// elementary segment `[x, y)` both operands are constant, so membership
    /// at `x` decides the whole segment.
    fn combine(
        &self,
        other: &Region,
        keep: impl Fn(bool, bool) -> bool,
    ) -> Result<Region, RegionError> {
        if self.universe != other.universe {
            return Err(RegionError::UniverseMismatch {
                left: self.universe,
                right: other.universe,
            });
        }
        let cuts = breakpoints([self, other], self.universe);
        let mut parts: Vec<Interval> = Vec::new();
        for w in cuts.windows(2) {
            let (x, y) = (w[0], w[1]);
            if !keep(self.contains(x), other.contains(x)) {
                continue;
            }
            match parts.last_mut() {
                Some(last) if last.hi == x => last.hi = y,
                _ => parts.push(Interval { lo: x, hi: y }),
            }
        }
        Ok(Region {
            universe: self.universe,
            parts,
        })
    }

    /// Structural check of the canonical-form invariants.
    pub fn is_canonical(&self) -> bool {
        let inside = self
            .parts
            .iter()
            .all(|p| p.lo < p.hi && p.lo >= self.universe.lo && p.hi <= self.universe.hi);
        let separated = self.parts.windows(2).all(|w| w[0].hi < w[1].lo);
        inside && separated
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Sorted, distinct endpoints of all parts plus the universe endpoints.
pub fn breakpoints<'a, I>(regions: I, universe: Universe) -> Vec<f64>
where
    I: IntoIterator<Item = &'a Region>,
{
    let mut points = vec![universe.lo, universe.hi];
    for r in regions {
        for p in &r.parts {
            points.push(p.lo);
            points.push(p.hi);
        }
    }
    sort_dedup(&mut points);
    points
}

pub(crate) fn sort_dedup(points: &mut Vec<f64>) {
    points.sort_by(f64::total_cmp);
    points.dedup_by(|a, b| a.total_cmp(b) == Ordering::Equal);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> Universe {
        Universe::new(0.0, 80.0).unwrap()
    }

    fn r(pairs: &[(f64, f64)]) -> Region {
        Region::normalize(pairs.iter().copied(), u()).unwrap()
    }

    fn parts(region: &Region) -> Vec<(f64, f64)> {
        region.parts().iter().map(|p| (p.lo(), p.hi())).collect()
    }

    #[test]
    fn normalize_merges_overlapping_and_adjacent() {
        assert_eq!(parts(&r(&[(10.0, 30.0), (20.0, 40.0)])), vec![(10.0, 40.0)]);
        assert_eq!(parts(&r(&[(10.0, 20.0), (20.0, 30.0)])), vec![(10.0, 30.0)]);
        assert!(r(&[]).is_empty());
        assert!(r(&[(5.0, 5.0)]).is_empty());
    }

    #[test]
    fn normalize_clips_and_rejects() {
        assert_eq!(parts(&r(&[(-10.0, 10.0), (70.0, 95.0)])), vec![(0.0, 10.0), (70.0, 80.0)]);
        assert!(matches!(
            Region::normalize([(80.0, 90.0)], u()),
            Err(RegionError::OutOfUniverse { .. })
        ));
        assert!(matches!(
            Region::normalize([(f64::NAN, 1.0)], u()),
            Err(RegionError::InvalidInterval { .. })
        ));
        assert!(matches!(
            Region::normalize([(3.0, 1.0)], u()),
            Err(RegionError::InvalidInterval { .. })
        ));
        assert!(Universe::new(1.0, 1.0).is_err());
    }

    #[test]
    fn union_examples() {
        let a = r(&[(10.0, 30.0)]);
        assert_eq!(parts(&a.union(&r(&[(20.0, 40.0)])).unwrap()), vec![(10.0, 40.0)]);
        assert_eq!(a.union(&u().empty()).unwrap(), a);
        assert_eq!(
            parts(&r(&[(0.0, 10.0)]).union(&r(&[(20.0, 30.0)])).unwrap()),
            vec![(0.0, 10.0), (20.0, 30.0)]
        );
    }

    #[test]
    fn intersect_examples() {
        let a = r(&[(10.0, 30.0)]);
        assert_eq!(parts(&a.intersect(&r(&[(20.0, 40.0)])).unwrap()), vec![(20.0, 30.0)]);
        assert!(r(&[(0.0, 10.0)]).intersect(&r(&[(20.0, 30.0)])).unwrap().is_empty());
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn complement_examples() {
        let a = r(&[(20.0, 30.0)]);
        assert_eq!(parts(&a.complement()), vec![(0.0, 20.0), (30.0, 80.0)]);
        assert_eq!(parts(&u().empty().complement()), vec![(0.0, 80.0)]);
        assert_eq!(a.complement().complement(), a);
        assert!(u().full().complement().is_empty());
    }

    #[test]
    fn symdiff_examples() {
        let a = r(&[(10.0, 30.0)]);
        assert_eq!(
            parts(&a.symdiff(&r(&[(20.0, 40.0)])).unwrap()),
            vec![(10.0, 20.0), (30.0, 40.0)]
        );
        assert!(a.symdiff(&a).unwrap().is_empty());
        assert_eq!(a.symdiff(&u().empty()).unwrap(), a);
    }

    #[test]
    fn contains_is_half_open() {
        let a = r(&[(10.0, 30.0)]);
        assert!(a.contains(10.0));
        assert!(!a.contains(30.0));
        assert!(!a.contains(9.999));
        assert!(!u().empty().contains(10.0));
    }

    #[test]
    fn breakpoint_examples() {
        assert_eq!(breakpoints([&r(&[(10.0, 30.0)])], u()), vec![0.0, 10.0, 30.0, 80.0]);
        assert_eq!(breakpoints(std::iter::empty::<&Region>(), u()), vec![0.0, 80.0]);
        assert_eq!(
            breakpoints([&r(&[(10.0, 20.0)]), &r(&[(10.0, 40.0)])], u()),
            vec![0.0, 10.0, 20.0, 40.0, 80.0]
        );
    }

    #[test]
    fn universe_mismatch_is_reported() {
        let other = Universe::new(0.0, 100.0).unwrap();
        let a = r(&[(10.0, 30.0)]);
        let b = Region::interval(10.0, 30.0, other).unwrap();
        assert!(matches!(a.union(&b), Err(RegionError::UniverseMismatch { .. })));
    }
}
