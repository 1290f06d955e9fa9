//! Exact-arithmetic library for the mahonian and bimahonian distributions of
//! the wreath products `G(d,1,n) = Z/d wr S_n`.
//!
//! Everything is computed over exact rationals or cyclotomic fields; there is
//! no floating point on any verification path.  The main entry points:
//!
//! - [`cyclotomic`]: elements of `Q(zeta_m)` reduced modulo the m-th
//!   cyclotomic polynomial, Galois automorphisms, root-of-unity orders.
//! - [`poly`]: sparse bivariate polynomials in `t, q` and truncated power
//!   series (with an extra series variable `u`) over rational or cyclotomic
//!   coefficients.
//! - [`wreath`]: elements of `G(d,1,n)` in window notation, word statistics
//!   (`inv`, `maj`, `fmaj`), colored cycle types, fundamental degrees and
//!   reflections.
//! - [`tableaux`]: d-tuples of partitions, standard fillings of their skew
//!   arrangement, fake-degree polynomials and the colored Robinson-Schensted
//!   bijection.
//! - [`distributions`]: the bimahonian distribution computed by four
//!   independent methods (fake degrees, fmaj sums, Molien sums, the type-A
//!   recurrence), plus root-of-unity specializations.
//! - [`characters`]: symmetric-group characters by Murnaghan-Nakayama,
//!   induced cyclic characters and intertwining numbers.
//! - [`sieving`]: Springer-regular elements and the bicyclic sieving checker.
//! - [`verify`]: the named verification suites shared by the CLI and the
//!   acceptance tests.

pub mod characters;
pub mod cyclotomic;
pub mod distributions;
pub mod error;
pub mod poly;
pub mod sieving;
pub mod tableaux;
pub mod verify;
pub mod wreath;

pub use characters::ClassFunction;
pub use cyclotomic::{Cyclotomic, GaloisAut};
pub use distributions::{DistributionRequest, Method};
pub use error::{Budget, Error, Result};
pub use poly::{BiPoly, Coeff, TruncSeries, Var};
pub use sieving::{BicspInstance, BicspReport, RegularCertificate};
pub use tableaux::{MultiPartition, SkewTableau};
pub use wreath::{ColoredCycleType, WreathElem};

