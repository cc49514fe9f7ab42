//! Shared text rendering for signed rational coefficients.

use std::fmt;

use num_traits::{One, Signed};

use crate::Rational;

/// Writes the sign and coefficient prefix of a term in a sum: `1/2*`,
/// ` - 3*`, ` + ` and so on. A unit coefficient is left implicit.
pub(crate) fn write_signed_coeff(
    f: &mut impl fmt::Write,
    c: &Rational,
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let mag = c.abs();
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    Ok(())
}
