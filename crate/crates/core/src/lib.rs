//! Constructive polynomial approximation in the QSP-constrained families
//! P and Q: family membership verification, Bernstein and equi-ripple step
//! approximants, and the density pipelines that turn a continuous target on
//! [0,1] into a verified family member.

pub mod bernstein;
pub mod linalg;
pub mod membership;
pub mod mono_interp;
pub mod poly;
pub mod roots;
pub(crate) mod util;

pub use bernstein::{
    bernstein, bernstein_step, step_error, step_parity_check, step_value, BernsteinError,
    BernsteinForm, StepDomain,
};

pub use membership::{
    check_family, check_target, parity_consequence, Builtin, Family, MembershipReport,
    TargetClass, TargetFunction, Verdict, DEFAULT_MEMBERSHIP_TOL,
};
pub use poly::{CenteredOddPoly, Interval, Poly, PolyError};
pub use roots::{roots_in, sign_on, SignKind, SignVerdict, DEFAULT_TOL};
