//! Partial elimination ideals and secant cones of projective subschemes.
//!
//! The crate is organised bottom-up: [`poly`] (exact polynomial arithmetic),
//! [`groebner`] (Buchberger), [`ideal`] (elimination, quotients, saturation),
//! [`hilbert`] (Hilbert series and multiplicities), [`radical`], and finally
//! [`pei`] and [`secant`], which compute partial elimination ideals, secant
//! cones, secant loci and the lengths of projection fibres.

pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod pei;
pub mod poly;
pub mod radical;
pub mod scroll;
pub mod secant;

pub use error::{Error, Result};
pub use groebner::GroebnerBasis;
pub use ideal::{Ideal, SubringEmbedding};
pub use poly::{ClosedPoint, Field, FieldScalar, LinearMap, Monomial, PolyRing, Polynomial, Ring, TermOrder};
