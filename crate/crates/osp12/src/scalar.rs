//! Exact rational coefficients.
//!
//! Every coefficient in the symbolic path is an arbitrary-precision rational,
//! kept in lowest terms with a positive denominator. There is no floating
//! point anywhere in the rewriting or tensor machinery; zero tests are exact.

pub use num::traits::{One, Signed, Zero};
use num::BigRational;

/// Exact rational scalar.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

/// Rational scalar `p/q`.
///
/// Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(p.into(), q.into())
}

/// Render a scalar as `p` or `p/q` (lowest terms, sign on the numerator).
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom() == &num::BigInt::from(1) {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}
