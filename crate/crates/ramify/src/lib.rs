//! Exact classification of prime-degree extensions of p-adic fields.
//!
//! Given an irreducible polynomial over Q_p (or over an unramified base
//! field), this library determines the isomorphism class of the extension
//! its root generates:
//!
//! * cubic extensions of Q_3 via a closed-form decision procedure on the
//!   discriminant and the depressed coefficients ([`wild3`]);
//! * tamely ramified extensions of prime degree q != p over unramified
//!   base fields, via discriminant valuations and power-residue tests
//!   ([`tame`]).
//!
//! Every closed-form verdict can be cross-checked by an independent
//! brute-force oracle ([`oracle`]) that searches for a root of one
//! polynomial inside the quotient ring of the other at bounded p-adic
//! precision.

pub mod error;
pub mod exactnum;
pub mod oracle;
pub mod padic;
pub mod polyring;
pub mod tame;
pub mod wild3;

pub use error::{Error, Result};
