use thiserror::Error;

use crate::assignment::ExceptionalType;
use crate::icosahedron::VertexId;
use crate::neo_riemannian::{Transform, Triad};
use crate::pitch::PitchClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} cannot be paired with itself")]
    DegeneratePair(VertexId),
    #[error("triple has repeated vertices")]
    DegenerateTriple,
    #[error("golden neighborhoods are defined only for golden triangles and gnomons")]
    UnsupportedFigure,
    #[error("neighborhood query returned {0} figures instead of 2")]
    NeighborhoodSize(usize),
    #[error("expected {expected} tones, got {got}")]
    Arity { expected: &'static str, got: usize },
    #[error("not a bijection from pitch classes to vertices")]
    NotBijective,
    #[error("type labeling failed: {0}")]
    Labeling(String),
    #[error("no golden neighborhood realizes {transform:?} for {triad} on type {ty}")]
    Realization {
        ty: ExceptionalType,
        triad: Triad,
        transform: Transform,
    },
    #[error("transform {0:?} is not realized through a neighborhood")]
    UnsupportedTransform(Transform),
    #[error("unknown tone name `{0}`")]
    UnknownTone(String),
    #[error("tone {0} appears twice")]
    DuplicateTone(PitchClass),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("measure {measure} is golden singular on type {ty}; golden analysis does not apply")]
    SingularMeasure { measure: u32, ty: ExceptionalType },
}

pub type Result<T> = std::result::Result<T, Error>;
