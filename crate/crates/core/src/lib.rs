//! Generators of the symplectic Floer chain complex of a braid closure.
//!
//! The chain complex is generated by the fixed points of the braid-induced
//! map on the traceless SU(2) representation variety. This crate computes
//! those fixed points two independent ways — exactly, as integer linear
//! congruences on the binary-dihedral slice, and numerically, by damped
//! Gauss-Newton on the full gauge-fixed variety — together with the
//! Goeritz-matrix knot signature and the Euler-characteristic consistency
//! check relating the two.

pub mod braid;
pub mod fix;
pub mod invariants;
pub mod su2;

pub use braid::{
    parse_braid_word, ArtinAutomorphism, BraidError, BraidLetter, BraidWord, CompositionOrder,
    FreeLetter, FreeWord, Permutation, Sign,
};
pub use fix::{
    build_congruences, slice_evaluate, solve_congruences, AffineAngleForm, Backend,
    CongruenceSystem, Equation, FixError, FixMode, FixedPointReport, Provenance, SolutionSet,
    SolverConfig, WordSystem,
};
pub use invariants::{
    euler_consistency_check, knot_signature_goeritz, matrix_signature, ConsistencyReport,
    InvariantError, SignatureResult, SymmetricIntMatrix,
};
pub use su2::{
    evaluate_word, fingerprint, gauge_fix, is_irreducible, Fingerprint, Quaternion, RepTuple,
    Su2Error, TracelessSu2,
};
