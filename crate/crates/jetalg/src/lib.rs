//! Expression language, verification catalog and reports on top of
//! [`jetalg_core`].

pub mod checks;
pub mod eval;
pub mod expr;
pub mod report;

pub use checks::{run_check, CheckConfig, CheckError, CheckId, Range, RepChoice};
pub use eval::{eval_expr, eval_str, Algebra, ElaborationError, EvalError};
pub use expr::{parse_expr, Atom, Expr, SyntaxError};
pub use jetalg_core::Rat;
pub use report::{Failure, Report};
