//! Lex standard monomials, extremal point sets and their universal Gröbner
//! bases over the rationals.
//!
//! A finite point set `V ⊆ {0, ..., k-1}^n` determines the ideal `I(V)` of
//! polynomials vanishing on it. `V` is *extremal* when the lex standard
//! monomials of `I(V)` are the same for every lex order; such sets admit a
//! universal Gröbner basis made of degree-dominated polynomials.

pub mod downshift;
pub mod error;
pub mod extremality;
pub mod groebner;
pub mod limits;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod point;
pub mod polynomial;
pub mod rational;
pub mod shattering;
pub mod standard;

pub use downshift::{
    downshift_family, downshift_i, downshift_seq, section, sm_via_downshift, SectionKey,
};
pub use error::{Error, Result};
pub use extremality::{
    census, is_extremal_bruteforce, is_extremal_downshift, is_extremal_fast,
    is_extremal_fast_with_stats, CensusPredicate, CensusSummary, ExtremalityVerdict, FastStats,
};
pub use groebner::{
    f_sh, minimal_nonstandard, reduce, set_system_basis, standard_representation, universal_basis,
    universal_basis_forced, verify_basis, GroebnerBasis, Reducer,
};
pub use limits::Limits;
pub use monomial::{Monomial, MonomialSet};
pub use order::LexOrder;
pub use point::{Point, PointSet};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use shattering::{is_s_extremal, shattered_family, shatters, SetSystem, ShatterReport};
pub use standard::{relabel, sm_all_lex, sm_lex, sm_oracle, SmResult};
