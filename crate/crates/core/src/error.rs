use thiserror::Error;

/// Errors raised by frame, mass-function and fusion operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a frame needs at least one atom")]
    EmptyFrame,
    #[error("frame label at position {0} is empty")]
    EmptyLabel(usize),
    #[error("duplicate frame label `{0}`")]
    DuplicateLabel(String),
    #[error("label `{0}` is not an atom of the frame")]
    UnknownLabel(String),
    #[error("frame has {atoms} atoms, this operation supports at most {max}")]
    FrameTooLarge { atoms: usize, max: usize },
    #[error("operands are defined on different frames")]
    FrameMismatch,
    #[error("focal set belongs to a different frame")]
    ForeignFocalSet,
    #[error("focal set {0} listed more than once")]
    DuplicateFocalSet(String),
    #[error("negative mass {value} on {set}")]
    NegativeMass { set: String, value: f64 },
    #[error("mass {value} on {set} is not a finite value in [0, 1]")]
    MassOutOfRange { set: String, value: f64 },
    #[error("masses sum to {sum}, expected 1")]
    SumNotOne { sum: f64 },
    #[error("mass function is dogmatic (m(Ω) = 0)")]
    DogmaticMass,
    #[error("weight {value} on {set} is not strictly positive")]
    NonPositiveWeight { set: String, value: f64 },
    #[error("transform produced an invalid mass function: {0}")]
    NotAMassFunction(String),
    #[error("bold rule is undefined here: {0}")]
    InvalidForBoldRule(&'static str),
    #[error("cannot condition on the empty set")]
    EmptyConditioningSet,
    #[error("{0} is not a single atom")]
    NotAnAtom(String),
    #[error("{name} = {value} is outside [0, 1]")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("mass on the independence frame has unsupported focal set {0}")]
    UnsupportedFocalStructure(String),
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("datasets are not aligned: {left} vs {right} items")]
    MisalignedDatasets { left: usize, right: usize },
    #[error("cannot form {clusters} clusters from {items} items")]
    TooFewItems { clusters: usize, items: usize },
    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
