//! Exact computations with monodromy representations given in a star
//! decomposition `H = V_1 ⊕ ... ⊕ V_t`.
//!
//! Coefficients are the integers, the rationals, `Z/n` or a prime field, with
//! all arithmetic exact. The local monodromy `m_j` differs from the identity
//! only in block row `j`; the monodromy at infinity is `m_t ∘ ... ∘ m_1`.
//!
//! ```
//! use monodromy::random::{random_tuple, InstanceRng, TupleConfig};
//! use monodromy::reconstruct::reconstruct_tuple;
//! use monodromy::ring::RingDescriptor;
//! use monodromy::star::StarDecomposition;
//!
//! let dec = StarDecomposition::from_dims(RingDescriptor::Rationals, 1, &[2, 1]).unwrap();
//! let tuple = random_tuple(&mut InstanceRng::new(1), &dec, &TupleConfig::default()).unwrap();
//! let back = reconstruct_tuple(&tuple.compose(), &dec).unwrap();
//! assert_eq!(back, tuple);
//! ```

pub mod commands;
pub mod corpus;
pub mod duality;
pub mod error;
pub mod group;
pub mod hom;
pub mod instance;
pub mod matrix;
pub mod random;
pub mod reconstruct;
pub mod ring;
pub mod seifert;
pub mod sequence;
pub mod snf;
pub mod star;
