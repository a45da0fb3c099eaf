//! Exact commutative algebra for ideals of projective monomial curves.

pub mod blowup;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod monocurve;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;

pub use error::{Error, Result, RingError};
pub use field::{Field, FieldElement, Rational, DEFAULT_PRIME};
pub use monomial::Monomial;
pub use order::{BaseOrder, Block, MonomialOrder};
pub use parse::{parse_ideal_file, parse_polynomial, print_polynomial, IdealFile};
pub use poly::{Polynomial, Term};
pub use ring::Ring;
pub use groebner::{buchberger, buchberger_with, GbOptions, GbStats, MonomialIdeal, ReducedGb};
pub use ideal::Ideal;
pub use hilbert::{HilbertSeries, Length};
pub use monocurve::{curve_ideal, parametrization_check, CurveSpec};
pub use report::{Claim, Provenance, Status, VerificationReport};
pub use blowup::{FiberPresentation, ReductionCertificate, ReductionOutcome, ReesPresentation};
