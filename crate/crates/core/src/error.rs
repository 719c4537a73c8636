use thiserror::Error;

use crate::extraction::StageLog;
use crate::system::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set is empty")]
    EmptyGround,

    #[error("label 0 is not allowed; labels are positive integers")]
    NonPositiveLabel,

    #[error("label {label} appears more than once{}", in_element(*element))]
    DuplicateLabel {
        label: Label,
        element: Option<Label>,
    },

    #[error("rotation of {element} mentions {element} itself")]
    SelfReference { element: Label },

    #[error("rotation of {element} is not a permutation of the other ground labels")]
    MissingOrExtraLabel { element: Label },

    #[error("subset is empty")]
    EmptySubset,

    #[error("label {0} is not in the ground set")]
    UnknownLabel(Label),

    #[error("relabelling is not a bijection between the required label sets")]
    NotABijection,

    #[error("size {size} is too small (minimum {min})")]
    SizeTooSmall { size: usize, min: usize },

    #[error("size {size} is outside the supported range {min}..={max}")]
    SizeOutOfRange { size: usize, min: usize, max: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no canonical subsystem found ({0})")]
    NotFound(StageLog),

    #[error("value exceeds the ceiling of {max_digits} decimal digits")]
    Overflow { max_digits: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn in_element(element: Option<Label>) -> String {
    match element {
        Some(e) => format!(" in the rotation of {e}"),
        None => String::new(),
    }
}
