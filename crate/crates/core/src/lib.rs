//! Linear codes over `R = F_q + uF_q + vF_q + uvF_q` with `u^2 = u`,
//! `v^2 = v`, `uv = vu`.
//!
//! `R` splits along the orthogonal idempotents
//! `g1 = 1 - u - v + uv`, `g2 = uv`, `g3 = u - uv`, `g4 = v - uv` into four
//! copies of GF(q), so a linear code over `R` is a direct sum
//! `g1 C1 ⊕ g2 C2 ⊕ g3 C3 ⊕ g4 C4` of codes over GF(q). Everything in this
//! crate works on that decomposition: duals, hulls and LCD tests run per
//! component, the Gray image interleaves the components, and the LCD
//! construction scales each component separately.
//!
//! ```
//! use galois_lcd::{construct, FqCode, Field, RCode};
//!
//! let f = Field::prime(5)?;
//! let line = FqCode::from_values(&f, 2, &[vec![1, 2]])?;
//! let code = RCode::from_components([line.clone(), line.clone(), line.clone(), line])?;
//! assert!(!code.is_lcd(0)?.lcd);
//!
//! let out = construct::ring_lcd_equivalent(
//!     &code,
//!     construct::LcdMode::Euclidean,
//!     &construct::ConstructOptions::default(),
//! )?;
//! assert!(out.code.is_lcd(0)?.lcd);
//! assert_eq!(out.code.k(), code.k());
//! # Ok::<(), galois_lcd::Error>(())
//! ```

pub mod codefile;
pub mod construct;
pub mod error;
pub mod fqcode;
pub mod gf;
pub mod linalg;
pub mod oracle;
mod poly;
pub mod rcode;
pub mod ring;

pub use error::{Error, Result};
pub use fqcode::{FqCode, LcdCheck, DEFAULT_CAP};
pub use gf::{Fe, Field};
pub use linalg::Matrix;
pub use rcode::{RCode, RCodeParams};
pub use ring::{Basis, Ring, RingElement};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/ring.md")]
    mod ring {}
    #[doc = include_str!("../../../book/src/codes.md")]
    mod codes {}
    #[doc = include_str!("../../../book/src/ring-codes.md")]
    mod ring_codes {}
    #[doc = include_str!("../../../book/src/construction.md")]
    mod construction {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
