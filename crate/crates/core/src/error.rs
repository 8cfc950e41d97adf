use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    IncompatibleOrder { left: u32, right: u32 },
    DegreeBound { degree: usize, bound: usize },
    /// Exhaustive root search exceeded its work cap.
    RootSearchLimit { candidates: u128 },
    Inconsistent,
    AmbientMismatch { left: usize, right: usize },
    ShapeMismatch(String),
    InvalidStructure(String),
    InvalidGroupTable(String),
    NotPrimitiveRoot,
    NotBialgebra,
    NoAntipode,
    NotPrimitive,
    NotSubcoalgebra,
    NonSplitField { component: String, suggested_order: Option<u32> },
    LiftDivergence,
    SaturationOverlap { first: usize, second: usize },
    NotApplicable(String),
    NotCoideal,
    InvalidCoaction(String),
    CoactionNotAlgebraMap,
    NotCosemisimple,
    /// A construction produced an object whose axiom check failed.
    AxiomFailure(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::IncompatibleOrder { left, right } => {
                write!(f, "incompatible cyclotomic orders {} and {}", left, right)
            }
            Error::DegreeBound { degree, bound } => {
                write!(f, "polynomial degree {} exceeds bound {}", degree, bound)
            }
            Error::RootSearchLimit { candidates } => {
                write!(f, "root search would need {} candidates", candidates)
            }
            Error::Inconsistent => write!(f, "linear system is inconsistent"),
            Error::AmbientMismatch { left, right } => {
                write!(f, "ambient dimensions differ ({} vs {})", left, right)
            }
            Error::ShapeMismatch(s) => write!(f, "shape mismatch: {}", s),
            Error::InvalidStructure(s) => write!(f, "invalid structure: {}", s),
            Error::InvalidGroupTable(s) => write!(f, "invalid group table: {}", s),
            Error::NotPrimitiveRoot => write!(f, "parameter is not a primitive root of unity"),
            Error::NotBialgebra => write!(f, "operation needs a bialgebra structure"),
            Error::NoAntipode => write!(f, "operation needs a bijective antipode"),
            Error::NotPrimitive => write!(f, "matrix is not primitive for the given pair"),
            Error::NotSubcoalgebra => write!(f, "subspace is not a subcoalgebra"),
            Error::NonSplitField { component, suggested_order } => {
                write!(f, "simple component {} does not split over the field", component)?;
                if let Some(n) = suggested_order {
                    write!(f, "; try cyclotomic order {}", n)?;
                }
                Ok(())
            }
            Error::LiftDivergence => write!(f, "idempotent lifting did not converge"),
            Error::SaturationOverlap { first, second } => write!(
                f,
                "wedge saturations of link classes {} and {} intersect",
                first, second
            ),
            Error::NotApplicable(s) => write!(f, "not applicable: {}", s),
            Error::NotCoideal => write!(f, "subspace is not a coideal"),
            Error::InvalidCoaction(s) => write!(f, "invalid coaction: {}", s),
            Error::CoactionNotAlgebraMap => write!(f, "coaction is not an algebra map"),
            Error::NotCosemisimple => write!(f, "coalgebra is not cosemisimple"),
            Error::AxiomFailure(s) => write!(f, "axiom check failed: {}", s),
        }
    }
}
