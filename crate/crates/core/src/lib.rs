//! Homological invariants of graded modules over polynomial rings.

pub mod criteria;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod modalg;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod presentation;
pub mod random;
pub mod resolve;
pub mod ring;

pub use criteria::{CheckReport, Conclusion, Hypothesis, SplitMode};
pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals};
pub use groebner::{buchberger, kernel_of_map, normal_form, syzygies, GroebnerBasis, Submodule};
pub use module::{free_module, FreeModule, Matrix, ModuleElement};
pub use monomial::{monomial_compare, Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::Polynomial;
pub use presentation::Presentation;
pub use hilbert::{HilbertData, HilbertSeries};
pub use resolve::{BettiTable, HomologicalData, Resolution};
pub use ring::{PolyRing, Ring};
