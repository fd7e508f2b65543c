//! Piecewise-constant functions over a [`Universe`].

use crate::region::{sort_dedup, Universe};

/// A right-open step function: piece `i` holds `values[i]` on
/// `[breakpoints[i], breakpoints[i + 1])`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepCurve<V> {
    universe: Universe,
    breakpoints: Vec<f64>,
    values: Vec<V>,
}

/// Real-valued membership curve, as produced by t-norm evaluation or hedges.
pub type RealCurve = StepCurve<f64>;

impl<V> StepCurve<V> {
    /// # Panics
    ///
    /// If the breakpoints do not start at `universe.lo`, end at `universe.hi`,
    /// increase strictly, or do not number `values.len() + 1`.
    pub fn new(universe: Universe, breakpoints: Vec<f64>, values: Vec<V>) -> Self {
        assert_eq!(breakpoints.len(), values.len() + 1, "one value per piece");
        assert_eq!(breakpoints.first().copied(), Some(universe.lo()));
        assert_eq!(breakpoints.last().copied(), Some(universe.hi()));
        assert!(
            breakpoints.windows(2).all(|w| w[0] < w[1]),
            "breakpoints must increase strictly"
        );
        Self {
            universe,
            breakpoints,
            values,
        }
    }

    pub fn constant(universe: Universe, value: V) -> Self {
        Self {
            universe,
            breakpoints: vec![universe.lo(), universe.hi()],
            values: vec![value],
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    /// Iterates `(lo, hi, value)` per piece.
    pub fn pieces(&self) -> impl Iterator<Item = (f64, f64, &V)> + '_ {
        self.breakpoints
            .windows(2)
            .zip(&self.values)
            .map(|(w, v)| (w[0], w[1], v))
    }

    /// Value of the piece containing `omega`, or `None` outside the universe.
    pub fn eval(&self, omega: f64) -> Option<&V> {
        if !self.universe.contains(omega) {
            return None;
        }
        let idx = self.breakpoints.partition_point(|&b| b <= omega);
        self.values.get(idx - 1)
    }

    /// Probe points covering every piece: each breakpoint inside the universe
    /// and the midpoint of every piece.
    pub fn probe_points(&self) -> Vec<f64> {
        let mut points = Vec::with_capacity(self.values.len() * 2);
        for w in self.breakpoints.windows(2) {
            points.push(w[0]);
            points.push(w[0] + (w[1] - w[0]) / 2.0);
        }
        points
    }

    pub fn map<W>(&self, f: impl FnMut(&V) -> W) -> StepCurve<W> {
        StepCurve {
            universe: self.universe,
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Applies a binary operation piecewise over the common refinement of
    /// both breakpoint sets. Returns `None` when the universes differ.
    pub fn zip_with<W, R>(
        &self,
        other: &StepCurve<W>,
        mut f: impl FnMut(&V, &W) -> R,
    ) -> Option<StepCurve<R>> {
        if self.universe != other.universe {
            return None;
        }
        let mut cuts: Vec<f64> = self
            .breakpoints
            .iter()
            .chain(&other.breakpoints)
            .copied()
            .collect();
        sort_dedup(&mut cuts);

        let (mut i, mut j) = (0, 0);
        let mut values = Vec::with_capacity(cuts.len() - 1);
        for &x in &cuts[..cuts.len() - 1] {
            while self.breakpoints[i + 1] <= x {
                i += 1;
            }
            while other.breakpoints[j + 1] <= x {
                j += 1;
            }
            values.push(f(&self.values[i], &other.values[j]));
        }
        Some(StepCurve {
            universe: self.universe,
            breakpoints: cuts,
            values,
        })
    }

    /// Evaluations on the grid `lo, lo + step, ...` strictly below `hi`.
    pub fn sample(&self, step: f64) -> Vec<(f64, &V)> {
        sample_grid(self.universe, step)
            .into_iter()
            .map(|omega| {
                let v = self.eval(omega).expect("grid point inside universe");
                (omega, v)
            })
            .collect()
    }
}

impl<V: PartialEq> StepCurve<V> {
    /// Fuses adjacent pieces holding equal values.
    pub fn merged(mut self) -> Self {
        let mut breakpoints = Vec::with_capacity(self.breakpoints.len());
        let mut values: Vec<V> = Vec::with_capacity(self.values.len());
        breakpoints.push(self.breakpoints[0]);
        for (v, &hi) in self.values.drain(..).zip(&self.breakpoints[1..]) {
            if values.last() == Some(&v) {
                *breakpoints.last_mut().unwrap() = hi;
            } else {
                values.push(v);
                breakpoints.push(hi);
            }
        }
        self.breakpoints = breakpoints;
        self.values = values;
        self
    }
}

/// Grid points `lo + i * step` strictly below `hi`. A non-positive or
/// non-finite step yields an empty grid.
pub fn sample_grid(universe: Universe, step: f64) -> Vec<f64> {
    if !(step.is_finite() && step > 0.0) {
        return Vec::new();
    }
    (0u64..)
        .map(|i| universe.lo() + i as f64 * step)
        .take_while(|&omega| omega < universe.hi())
        .collect()
}
