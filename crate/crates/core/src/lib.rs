//! Representations of the dihedral groups D_m (m ≥ 3) and the invariant
//! bilinear forms they admit.
//!
//! * [`scalar`]: exact arithmetic in Q(ζ_N), plus a floating-point domain.
//! * [`linalg`]: dense matrices, null spaces, ranks, determinants, Kronecker products.
//! * [`dihedral`]: the group itself.
//! * [`irreps`]: irreducible representations, characters, kernels and images.
//! * [`reps`]: direct sums named by multiplicity vectors, enumeration and counting.
//! * [`forms`]: constructive bases for the invariant-form space and non-degeneracy.
//! * [`oracle`]: the same space obtained by brute-force linear solve.

pub mod dihedral;
pub mod error;
pub mod export;
pub mod forms;
pub mod irreps;
pub mod linalg;
pub mod oracle;
pub mod reps;
pub mod scalar;

pub use dihedral::{DihedralGroup, GroupElement};
pub use error::{Error, Result};
pub use forms::{BilinearForm, BlockForm, FormSpaceBasis};
pub use irreps::{CharacterTable, ExactRealization, FloatRealization, Irrep, IrrepKind, IsoClass, Realization};
pub use linalg::Matrix;
pub use oracle::{subspace_equal, ConstraintSystem, ElementSet};
pub use reps::{BlockSlot, MultiplicityVector, Representation};
pub use scalar::{ComplexFloat, CycloScalar, CyclotomicField, FloatField, Rational, Scalar, ScalarField, ScalarMode};
