//! Exact supertropical commutative algebra.
//!
//! * [`kernel`]: elements of `STR(M)` over ordered value monoids.
//! * [`poly`]: supertropical polynomials, canonical forms of polynomial
//!   functions, and univariate factorization.
//! * [`locus`]: ghost loci of bivariate polynomial sets as labeled planar
//!   complexes, with JSON and SVG output.
//! * [`finite`] and [`congr`]: finite nu-semirings given by tables and the
//!   congruence engine (closure, ghostification, classification, quotients,
//!   localization, radicals).
//! * [`spectra`]: nu-prime spectra, their Zariski topology, and sections of
//!   the structure presheaf.

pub mod congr;
pub mod finite;
pub mod kernel;
pub mod locus;
pub mod lp;
pub mod parse;
pub mod poly;
pub mod random;
pub mod spectra;
pub mod svg;

pub use congr::{Congruence, Flag, Localization};
pub use finite::{FiniteNuSemiring, ValidationReport};
pub use kernel::{FiniteChain, Layer, NuElement, NuOrdering, RatElem, RationalAdd, Supertropical, Trivial, ValueMonoid, Q};
pub use locus::{Box2, Cell, CellKind, LocusComplex, Region};
pub use poly::{CanonicalForm, Essentiality, Factor, TropPoly};
pub use spectra::Spectrum;
