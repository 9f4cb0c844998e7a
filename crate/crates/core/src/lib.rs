//! Exact computation of Lucas polynomials and lucasnomial coefficients in
//! two variables `s` and `t`, and machine verification of their tiling
//! interpretations over partitions in a rectangle.
//!
//! ```
//! use lucastile::{Lucasnomials, BivariatePolynomial};
//!
//! let l = Lucasnomials::new();
//! let c = l.via_quotient(4, 2).unwrap();
//! assert_eq!(c.to_string(), "s^4 + 3*s^2*t + 2*t^2");
//! assert_eq!(c, l.via_recursion_luc(4, 2).unwrap());
//! assert_eq!(l.lucas().fib(4), "s^3 + 2*s*t".parse::<BivariatePolynomial>().unwrap());
//! ```

pub mod cli;
pub mod error;
pub mod interpretations;
pub mod lucas;
pub mod lucasnomial;
pub mod partitions;
pub mod poly;
pub mod report;
pub mod specializations;
pub mod tilings;

pub use error::{Error, Result};
pub use interpretations::{Flavor, FlavorSelection, Mode, TilingPair, Verifier};
pub use lucas::LucasCache;
pub use lucasnomial::{LucasnomialTable, Lucasnomials, Method};
pub use partitions::{enumerate_in_rect, Partition};
pub use poly::{BivariatePolynomial, UnivariatePolynomial};
pub use report::{CaseOutcome, Failure, IdentityReport};
pub use specializations::{gaussian_binomial_oracle, specialize, Preset, Specialized};
pub use tilings::{Shape, Tile, Tiling, TilingKind};
