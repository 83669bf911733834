//! Invariant bilinear forms: matrices X with CᵗXC = X for every C = ρ(g).
//!
//! For ρ = ⊕ k_iρ_i in the canonical basis, every invariant X is block
//! diagonal with one d_ik_i × d_ik_i block per irrep present. A degree-1 block
//! is an arbitrary k_i × k_i matrix; a degree-2 block is made of 2 × 2 slots,
//! slot (p, q) being x_pq·I₂. The space therefore has dimension Σ k_i².

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::export::{matrix_json, matrix_text};
use crate::irreps::Realization;
use crate::linalg::Matrix;
use crate::reps::{BlockSlot, MultiplicityVector};
use crate::scalar::{Scalar, ScalarField};

/// The Gram matrix of a bilinear form B(x, y) = xᵗXy.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm<S> {
    matrix: Matrix<S>,
}

impl<S: Scalar> BilinearForm<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        Ok(BilinearForm { matrix })
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<S> {
        self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn scale(&self, by: &S) -> Self {
        BilinearForm { matrix: self.matrix.scale(by) }
    }
}

/// det X ≠ 0 for exact scalars; full rank under the pivot tolerance for floats.
pub fn is_nondegenerate<S: Scalar>(form: &BilinearForm<S>) -> bool {
    form.matrix.is_nonsingular().expect("forms are square")
}

/// The diagonal block of an invariant form belonging to one irrep.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockForm<S> {
    pub irrep_index: usize,
    pub block: Matrix<S>,
}

#[derive(Debug, Clone)]
pub struct FormSpaceBasis<S> {
    pub spec: MultiplicityVector,
    pub basis: Vec<BilinearForm<S>>,
    pub layout: Vec<BlockSlot>,
}

impl<S: Scalar> FormSpaceBasis<S> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "spec": self.spec.to_json(),
            "dimension": self.basis.len(),
            "layout": self.layout.iter().map(|s| json!({
                "irrep": s.irrep_index,
                "offset": s.offset,
                "size": s.size,
            })).collect::<Vec<_>>(),
            "basis": self.basis.iter().map(|f| matrix_json(&f.matrix)).collect::<Vec<_>>(),
        })
    }

    /// Every basis matrix with column and row rules between irrep blocks.
    pub fn to_text(&self) -> String {
        let cuts: Vec<usize> = self.layout.iter().map(|s| s.offset).collect();
        let labels: Vec<String> = self
            .layout
            .iter()
            .map(|s| format!("rho_{} x{} @{}", s.irrep_index, s.multiplicity, s.offset))
            .collect();
        let mut out = format!("blocks: {}\n", labels.join(", "));
        for (i, f) in self.basis.iter().enumerate() {
            out.push_str(&format!("basis[{i}]:\n"));
            out.push_str(&matrix_text(&f.matrix, &cuts));
        }
        out
    }
}

/// dim Ξ = Σ k_i².
pub fn dimension(kvec: &MultiplicityVector) -> usize {
    kvec.counts().iter().map(|k| k * k).sum()
}

/// Σ k_i(k_i + 1)/2.
pub fn symmetric_dimension(kvec: &MultiplicityVector) -> usize {
    kvec.counts().iter().map(|k| k * (k + 1) / 2).sum()
}

/// Σ k_i(k_i − 1)/2.
pub fn skew_dimension(kvec: &MultiplicityVector) -> usize {
    kvec.counts().iter().map(|k| k * k.saturating_sub(1) / 2).sum()
}

impl<F: ScalarField> Realization<F> {
    /// The elementary basis: for each irrep block and each copy pair (p, q),
    /// the form whose slot (p, q) holds I_{d_i} and which is zero elsewhere.
    pub fn invariant_space_basis(&self, kvec: &MultiplicityVector) -> Result<FormSpaceBasis<F::Elem>> {
        self.check_group(kvec)?;
        let n = kvec.degree();
        let zero = self.field().zero();
        let layout = kvec.layout();
        let mut basis = Vec::with_capacity(dimension(kvec));
        for slot in &layout {
            let unit = self.identity(slot.degree);
            for p in 0..slot.multiplicity {
                for q in 0..slot.multiplicity {
                    let mut x = Matrix::zeros(n, n, &zero);
                    x.set_block(slot.offset + p * slot.degree, slot.offset + q * slot.degree, &unit)?;
                    basis.push(BilinearForm { matrix: x });
                }
            }
        }
        Ok(FormSpaceBasis { spec: kvec.clone(), basis, layout })
    }

    /// CᵗXC = X at both generators.
    pub fn is_invariant(&self, form: &BilinearForm<F::Elem>, kvec: &MultiplicityVector) -> Result<bool> {
        if form.n() != kvec.degree() {
            return Err(Error::DegreeMismatch(form.n(), kvec.degree()));
        }
        let rep = self.representation(kvec)?;
        for c in [&rep.a, &rep.b] {
            if !congruent(c, &form.matrix)?.approx_eq(&form.matrix, 1e-9) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// CᵗXC = X for every one of the 2m group elements.
    pub fn is_invariant_under_all(&self, form: &BilinearForm<F::Elem>, kvec: &MultiplicityVector) -> Result<bool> {
        if form.n() != kvec.degree() {
            return Err(Error::DegreeMismatch(form.n(), kvec.degree()));
        }
        for c in self.rep_matrices(kvec)? {
            if !congruent(&c, &form.matrix)?.approx_eq(&form.matrix, 1e-9) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The identity form: invariant because every ρ(g) is orthogonal here,
    /// and nondegenerate with every diagonal block nonsingular.
    pub fn nondegenerate_witness(&self, kvec: &MultiplicityVector) -> Result<BilinearForm<F::Elem>> {
        self.check_group(kvec)?;
        Ok(BilinearForm { matrix: self.identity(kvec.degree()) })
    }

    /// Splits an invariant form into its per-irrep diagonal blocks.
    pub fn decompose(&self, form: &BilinearForm<F::Elem>, kvec: &MultiplicityVector) -> Result<Vec<BlockForm<F::Elem>>> {
        if !self.is_invariant(form, kvec)? {
            return Err(Error::NotInvariant);
        }
        kvec.layout()
            .iter()
            .map(|s| {
                Ok(BlockForm { irrep_index: s.irrep_index, block: form.matrix.submatrix(s.offset, s.offset, s.size, s.size)? })
            })
            .collect()
    }

    /// Inverse of [`Realization::decompose`].
    pub fn recompose(&self, blocks: &[BlockForm<F::Elem>], kvec: &MultiplicityVector) -> Result<BilinearForm<F::Elem>> {
        let n = kvec.degree();
        let mut x = Matrix::zeros(n, n, &self.field().zero());
        for slot in kvec.layout() {
            let Some(b) = blocks.iter().find(|b| b.irrep_index == slot.irrep_index) else {
                continue;
            };
            if b.block.rows() != slot.size || b.block.cols() != slot.size {
                return Err(Error::DimensionMismatch(format!("block for rho_{} has the wrong size", slot.irrep_index)));
            }
            x.set_block(slot.offset, slot.offset, &b.block)?;
        }
        BilinearForm::new(x)
    }

    /// Singularity flag per irrep block. The form is degenerate iff some flag is set.
    pub fn blockwise_degeneracy_report(
        &self,
        form: &BilinearForm<F::Elem>,
        kvec: &MultiplicityVector,
    ) -> Result<Vec<(usize, bool)>> {
        Ok(self
            .decompose(form, kvec)?
            .into_iter()
            .map(|b| (b.irrep_index, !b.block.is_nonsingular().expect("square block")))
            .collect())
    }
}

/// CᵗXC
pub fn congruent<S: Scalar>(c: &Matrix<S>, x: &Matrix<S>) -> Result<Matrix<S>> {
    c.transpose().mat_mul(x)?.mat_mul(c)
}
