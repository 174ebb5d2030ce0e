use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// A vector field whose coefficients do not vanish at `(t1, t2) = (1, 0)`.
    NotInSubalgebra,
    /// Two `L`-carrying terms with non-commuting `D` coefficients; the honest
    /// bracket has `L`-degree 2.
    TruncationEscape { left: String, right: String },
    /// Input to `rho` whose image leaves the degree-one smash slice.
    DegreeTooHigh(String),
    InvalidModule(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::NotInSubalgebra => {
                f.write_str("vector field does not vanish at (1,0)")
            }
            AlgebraError::TruncationEscape { left, right } => write!(
                f,
                "bracket leaves the L-degree 1 truncation: coefficients {} and {} do not commute",
                left, right
            ),
            AlgebraError::DegreeTooHigh(what) => {
                write!(f, "term {} has no image in the degree-one smash slice", what)
            }
            AlgebraError::InvalidModule(why) => write!(f, "invalid module: {}", why),
        }
    }
}

impl core::error::Error for AlgebraError {}
