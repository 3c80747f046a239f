//! Analysis of stabilizer quantum error-correcting codes.
//!
//! The crate computes distances, `c`-disjointness and the disjointness of a
//! code through exact rational linear programming, derives Clifford
//! hierarchy level bounds for transversal gates, and builds the code
//! families and graph-based constructions used to study them.
//!
//! ```
//! use stabdis_core::{disjointness, pauli};
//!
//! let code = pauli::StabilizerCode::from_strings(&["ZZI", "IZZ"]).unwrap();
//! let basis = pauli::logical_basis(&code);
//! let report = disjointness::code_disjointness(&code, &basis).unwrap();
//! assert_eq!(report.code_delta, stabdis_core::Rational::from_integer(1.into()));
//! ```

pub mod disjointness;
mod error;
pub mod families;
pub mod gf2;
pub mod hierarchy;
pub mod logical;
pub mod lp;
pub mod pauli;
pub mod reduction;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};

/// Exact rational numbers used for every LP value.
pub type Rational = BigRational;
/// Arbitrary-precision integer underlying [`Rational`].
pub type Integer = BigInt;
/// Linear program over exact rationals.
pub type ExactProgram = lp::LinearProgram<Rational>;
/// Linear program over `f64` with tolerance-based sign tests.
pub type FloatProgram = lp::LinearProgram<f64>;
/// Solution of an [`ExactProgram`].
pub type ExactSolution = lp::LpSolution<Rational>;

/// `num/den`, also for integers (`2/1`).
pub fn rational_to_json(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `num/den`, or just `num` for integers.
pub fn rational_to_text(r: &Rational) -> String {
    r.to_string()
}

/// Parses `num/den` or an integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

pub(crate) mod ratio_serde {
    use serde::Serializer;

    use crate::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::rational_to_json(r))
    }

    pub mod option {
        use serde::Serializer;

        use crate::Rational;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_str(&crate::rational_to_json(r)),
                None => s.serialize_none(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_formats() {
        let two = Rational::from_integer(2.into());
        assert_eq!(rational_to_json(&two), "2/1");
        assert_eq!(rational_to_text(&two), "2");
        let r = Rational::new(14.into(), 6.into());
        assert_eq!(rational_to_json(&r), "7/3");
        assert_eq!(parse_rational("14/6"), Some(r));
        assert_eq!(parse_rational("2"), Some(two));
        assert_eq!(parse_rational("1/0"), None);
    }
}
