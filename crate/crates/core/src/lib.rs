//! Vague sets and eventological linguistic variables.
//!
//! Subjects judge which part of a bounded universe a name (say, "young man")
//! applies to. Their judgments form a [`SelectionMatrix`]; each row is a
//! [`VagueEvent`] whose membership curve is the exact fraction of subjects
//! covering each point. Expressions such as `young_man and not young_woman`
//! are parsed by [`syntagma::parse`] and evaluated either per subject
//! ([`eval_event`]), through classic vague-set connectives ([`eval_vague`]),
//! or through one of three t-norms ([`eval_tnorm`]).

pub mod curve;
pub mod dataset;
pub mod eventology;
pub mod region;
pub mod syntagma;
pub mod tnorm;
pub mod vague;

pub use curve::{RealCurve, StepCurve};
pub use eventology::{
    build_matrix, derive_vague_curve, membership, mink_combine, EventError, Judgment,
    MembershipCurve, MinkowskiOp, Polarity, SelectionMatrix, Share, SubjectId, VagueEvent,
};
pub use region::{Interval, Region, RegionError, Universe};
pub use syntagma::{eval_event, eval_tnorm, eval_vague, parse, EvalError, Expr, Grade, SyntaxError};
pub use tnorm::{tconorm_apply, tnorm_apply, TNormError, TNormKind};
pub use vague::{HedgeExponents, HedgeKind, VagueCurve, VagueError, VagueSet, VagueValue};
