use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite complex value ({re}, {im})")]
    NonFinite { re: f64, im: f64 },

    #[error("template index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("iteration budget {max_iter} exceeds template length {len}")]
    TemplateTooShort { max_iter: usize, len: usize },

    #[error("invalid template: {0}")]
    InvalidTemplate(String),

    #[error("cannot parse template spec {spec:?}: {reason} (at {token:?})")]
    TemplateSpec {
        spec: String,
        token: String,
        reason: String,
    },

    #[error("cannot parse complex literal {0:?}")]
    ComplexLiteral(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point set is empty")]
    EmptyPointSet,

    #[error("degenerate regression: all {levels} box counts equal {count}")]
    DegenerateRegression { levels: usize, count: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
