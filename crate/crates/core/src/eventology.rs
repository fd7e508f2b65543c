//! Vague events built from per-subject interval judgments.
//!
//! Every subject `μ` assigns each name `x` a region `x_μ` of the universe.
//! The row `{x_μ : μ ∈ M}` of the selection matrix is a vague event, and its
//! membership at `ω` is the fraction of subjects whose region contains `ω`.
//! Set operations on vague events act subject by subject (Minkowski style)
//! before that averaging happens.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::curve::{RealCurve, StepCurve};
use crate::region::{breakpoints, Region, RegionError, Universe};
use crate::vague::{VagueCurve, VagueValue};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EventError {
    #[error("population is empty")]
    EmptyPopulation,
    #[error("vague events are defined over different subject populations or universes")]
    PopulationMismatch,
    #[error("unknown atom {0:?}")]
    UnknownAtom(String),
    #[error("subject {subject} judges {name:?} both for and against on {overlap}")]
    ContradictoryJudgment {
        subject: SubjectId,
        name: String,
        overlap: Region,
    },
    #[error("subject identifier must be non-empty")]
    EmptySubjectId,
    #[error("name must be non-empty")]
    EmptyName,
    #[error("{0:?} needs a second operand")]
    MissingOperand(MinkowskiOp),
    #[error(transparent)]
    Region(#[from] RegionError),
}

/// Identifier of a reasonable subject.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubjectId(String);

impl SubjectId {
    pub fn new(id: impl Into<String>) -> Result<Self, EventError> {
        let id = id.into();
        if id.is_empty() {
            Err(EventError::EmptySubjectId)
        } else {
            Ok(Self(id))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for SubjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Polarity {
    #[default]
    For,
    Against,
}

impl Polarity {
    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::For => "for",
            Polarity::Against => "against",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Judgment {
    pub subject: SubjectId,
    pub name: String,
    pub region: Region,
    pub polarity: Polarity,
}

impl Judgment {
    pub fn new(subject: SubjectId, name: impl Into<String>, region: Region, polarity: Polarity) -> Self {
        Self {
            subject,
            name: name.into(),
            region,
            polarity,
        }
    }
}

/// The fraction `count / population` of subjects, kept exact.
#[derive(Debug, Clone, Copy)]
pub struct Share {
    count: u32,
    population: u32,
}

impl Share {
    /// # Panics
    ///
    /// If `population` is zero or `count > population`.
    pub fn new(count: u32, population: u32) -> Self {
        assert!(population > 0, "population must be positive");
        assert!(count <= population, "count exceeds population");
        Self { count, population }
    }

    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn population(&self) -> u32 {
        self.population
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.count) / f64::from(self.population)
    }

    /// `1 - self`.
    pub fn complement(self) -> Self {
        Self {
            count: self.population - self.count,
            population: self.population,
        }
    }
}

impl PartialEq for Share {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Share {}

impl PartialOrd for Share {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Share {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = u64::from(self.count) * u64::from(other.population);
        let rhs = u64::from(other.count) * u64::from(self.population);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Share {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.count, self.population)
    }
}

/// Exact membership curve with values `k / |M|`.
pub type MembershipCurve = StepCurve<Share>;

/// Converts exact shares to floats, e.g. for mixing with t-norm curves.
pub fn to_real(curve: &MembershipCurve) -> RealCurve {
    curve.map(|s| s.to_f64())
}

/// One row of the selection matrix: a region per subject.
#[derive(Debug, Clone, PartialEq)]
pub struct VagueEvent {
    universe: Universe,
    subjects: Arc<[SubjectId]>,
    regions: Vec<Region>,
}

impl VagueEvent {
    /// `regions[i]` is the judgment of `subjects[i]`.
    pub fn new(
        universe: Universe,
        subjects: Arc<[SubjectId]>,
        regions: Vec<Region>,
    ) -> Result<Self, EventError> {
        if subjects.len() != regions.len() {
            return Err(EventError::PopulationMismatch);
        }
        if let Some(r) = regions.iter().find(|r| r.universe() != universe) {
            return Err(RegionError::UniverseMismatch {
                left: universe,
                right: r.universe(),
            }
            .into());
        }
        Ok(Self {
            universe,
            subjects,
            regions,
        })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn subjects(&self) -> &[SubjectId] {
        &self.subjects
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn population(&self) -> usize {
        self.subjects.len()
    }

    fn aligned_with(&self, other: &VagueEvent) -> bool {
        self.universe == other.universe
            && (Arc::ptr_eq(&self.subjects, &other.subjects) || self.subjects == other.subjects)
    }

    fn per_subject(
        &self,
        other: &VagueEvent,
        op: fn(&Region, &Region) -> Result<Region, RegionError>,
    ) -> Result<VagueEvent, EventError> {
        if !self.aligned_with(other) {
            return Err(EventError::PopulationMismatch);
        }
        let regions = self
            .regions
            .iter()
            .zip(&other.regions)
            .map(|(a, b)| op(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(VagueEvent {
            universe: self.universe,
            subjects: Arc::clone(&self.subjects),
            regions,
        })
    }

    pub fn and(&self, other: &VagueEvent) -> Result<VagueEvent, EventError> {
        self.per_subject(other, Region::intersect)
    }

    pub fn or(&self, other: &VagueEvent) -> Result<VagueEvent, EventError> {
        self.per_subject(other, Region::union)
    }

    pub fn symdiff(&self, other: &VagueEvent) -> Result<VagueEvent, EventError> {
        self.per_subject(other, Region::symdiff)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(&self) -> VagueEvent {
        VagueEvent {
            universe: self.universe,
            subjects: Arc::clone(&self.subjects),
            regions: self.regions.iter().map(Region::complement).collect(),
        }
    }

    /// Averaged indicator: at every `ω`, the number of subjects whose region
    /// contains `ω` divided by `|M|`.
    pub fn membership(&self) -> Result<MembershipCurve, EventError> {
        coverage_curve(self.universe, &self.regions)
    }
}

/// Set operations applied subject by subject.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinkowskiOp {
    And,
    Or,
    Not,
    SymDiff,
}

pub fn mink_combine(
    op: MinkowskiOp,
    a: &VagueEvent,
    b: Option<&VagueEvent>,
) -> Result<VagueEvent, EventError> {
    let rhs = || b.ok_or(EventError::MissingOperand(op));
    match op {
        MinkowskiOp::And => a.and(rhs()?),
        MinkowskiOp::Or => a.or(rhs()?),
        MinkowskiOp::SymDiff => a.symdiff(rhs()?),
        MinkowskiOp::Not => Ok(a.not()),
    }
}

pub fn membership(event: &VagueEvent) -> Result<MembershipCurve, EventError> {
    event.membership()
}

/// Counts, on each elementary piece, how many of `regions` cover it.
fn coverage_curve(universe: Universe, regions: &[Region]) -> Result<MembershipCurve, EventError> {
    let population = u32::try_from(regions.len()).expect("population fits in u32");
    if population == 0 {
        return Err(EventError::EmptyPopulation);
    }
    let cuts = breakpoints(regions, universe);

    let mut deltas: Vec<(f64, i64)> = regions
        .iter()
        .flat_map(|r| r.parts().iter().flat_map(|p| [(p.lo(), 1), (p.hi(), -1)]))
        .collect();
    deltas.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut values = Vec::with_capacity(cuts.len() - 1);
    let mut covered: i64 = 0;
    let mut pending = deltas.into_iter().peekable();
    for &x in &cuts[..cuts.len() - 1] {
        while let Some(&(at, d)) = pending.peek() {
            if at > x {
                break;
            }
            covered += d;
            pending.next();
        }
        let count = u32::try_from(covered).expect("coverage count is never negative");
        values.push(Share::new(count, population));
    }
    Ok(StepCurve::new(universe, cuts, values).merged())
}

/// The matrix of selected events: for every name and subject, the region
/// judged `for` the name and the region judged `against` it.
#[derive(Debug, Clone, PartialEq)]
pub struct SelectionMatrix {
    universe: Universe,
    subjects: Arc<[SubjectId]>,
    names: Vec<String>,
    // [name][subject]
    for_cells: Vec<Vec<Region>>,
    against_cells: Vec<Vec<Region>>,
}

impl SelectionMatrix {
    pub fn builder(universe: Universe) -> MatrixBuilder {
        MatrixBuilder {
            universe,
            subjects: BTreeSet::new(),
            names: BTreeSet::new(),
            cells: BTreeMap::new(),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// Subjects in lexicographic order.
    pub fn subjects(&self) -> &[SubjectId] {
        &self.subjects
    }

    /// Names in lexicographic order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn population(&self) -> usize {
        self.subjects.len()
    }

    fn name_index(&self, name: &str) -> Result<usize, EventError> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .map_err(|_| EventError::UnknownAtom(name.to_owned()))
    }

    pub fn cell(&self, name: &str, subject: &SubjectId, polarity: Polarity) -> Option<&Region> {
        let n = self.name_index(name).ok()?;
        let s = self.subjects.binary_search(subject).ok()?;
        let cells = match polarity {
            Polarity::For => &self.for_cells,
            Polarity::Against => &self.against_cells,
        };
        Some(&cells[n][s])
    }

    fn event_from(&self, cells: &[Vec<Region>], name: &str) -> Result<VagueEvent, EventError> {
        let n = self.name_index(name)?;
        Ok(VagueEvent {
            universe: self.universe,
            subjects: Arc::clone(&self.subjects),
            regions: cells[n].clone(),
        })
    }

    /// The vague event of `name` (its `for` row).
    pub fn row(&self, name: &str) -> Result<VagueEvent, EventError> {
        self.event_from(&self.for_cells, name)
    }

    /// The `against` row of `name`.
    pub fn against_row(&self, name: &str) -> Result<VagueEvent, EventError> {
        self.event_from(&self.against_cells, name)
    }
}

/// Accumulates judgments; repeated judgments of one cell are unioned.
#[derive(Debug, Clone)]
pub struct MatrixBuilder {
    universe: Universe,
    subjects: BTreeSet<SubjectId>,
    names: BTreeSet<String>,
    cells: BTreeMap<(String, SubjectId, Polarity), Region>,
}

impl MatrixBuilder {
    pub fn declare_subject(&mut self, subject: SubjectId) -> &mut Self {
        self.subjects.insert(subject);
        self
    }

    pub fn declare_name(&mut self, name: impl Into<String>) -> Result<&mut Self, EventError> {
        let name = name.into();
        if name.is_empty() {
            return Err(EventError::EmptyName);
        }
        self.names.insert(name);
        Ok(self)
    }

    pub fn add(&mut self, judgment: Judgment) -> Result<&mut Self, EventError> {
        let Judgment {
            subject,
            name,
            region,
            polarity,
        } = judgment;
        if region.universe() != self.universe {
            return Err(RegionError::UniverseMismatch {
                left: self.universe,
                right: region.universe(),
            }
            .into());
        }
        self.declare_name(name.clone())?;
        self.subjects.insert(subject.clone());
        let key = (name, subject, polarity);
        let merged = match self.cells.remove(&key) {
            Some(existing) => existing.union(&region)?,
            None => region,
        };
        self.cells.insert(key, merged);
        Ok(self)
    }

    pub fn build(self) -> Result<SelectionMatrix, EventError> {
        let subjects: Arc<[SubjectId]> = self.subjects.into_iter().collect();
        let names: Vec<String> = self.names.into_iter().collect();
        let empty = self.universe.empty();

        let mut for_cells = Vec::with_capacity(names.len());
        let mut against_cells = Vec::with_capacity(names.len());
        for name in &names {
            let mut for_row = Vec::with_capacity(subjects.len());
            let mut against_row = Vec::with_capacity(subjects.len());
            for subject in subjects.iter() {
                let get = |p| {
                    self.cells
                        .get(&(name.clone(), subject.clone(), p))
                        .cloned()
                        .unwrap_or_else(|| empty.clone())
                };
                let pro = get(Polarity::For);
                let contra = get(Polarity::Against);
                let overlap = pro.intersect(&contra)?;
                if !overlap.is_empty() {
                    return Err(EventError::ContradictoryJudgment {
                        subject: subject.clone(),
                        name: name.clone(),
                        overlap,
                    });
                }
                for_row.push(pro);
                against_row.push(contra);
            }
            for_cells.push(for_row);
            against_cells.push(against_row);
        }
        Ok(SelectionMatrix {
            universe: self.universe,
            subjects,
            names,
            for_cells,
            against_cells,
        })
    }
}

pub fn build_matrix<I>(judgments: I, universe: Universe) -> Result<SelectionMatrix, EventError>
where
    I: IntoIterator<Item = Judgment>,
{
    let mut builder = SelectionMatrix::builder(universe);
    for j in judgments {
        builder.add(j)?;
    }
    builder.build()
}

/// Vague membership of `name`: `t(ω)` is the share of subjects judging `ω`
/// for the name, `f(ω)` the share judging it against.
pub fn derive_vague_curve(matrix: &SelectionMatrix, name: &str) -> Result<VagueCurve, EventError> {
    if matrix.population() == 0 {
        return Err(EventError::EmptyPopulation);
    }
    let truth = matrix.row(name)?.membership()?;
    let falsity = matrix.against_row(name)?.membership()?;
    let curve = truth
        .zip_with(&falsity, |t, f| {
            // for/against are disjoint per subject, so counts never exceed |M|.
            VagueValue::from_computed(t.to_f64(), f.to_f64())
                .expect("disjoint judgments keep t + f <= 1")
        })
        .expect("rows share the matrix universe");
    Ok(curve.merged())
}
