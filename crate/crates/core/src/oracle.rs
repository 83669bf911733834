//! Ground truth for the invariant-form space by direct linear solve.
//!
//! The representation is treated as a list of opaque matrices C. Each one
//! contributes the rows (Cᵗ ⊗ Cᵗ − I)·vec(X) = 0, using column-stacking
//! vectorization, so that vec(CᵗXC) = (Cᵗ ⊗ Cᵗ)vec(X). Nothing here looks at
//! the block structure of the representation.

use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::irreps::Realization;
use crate::linalg::Matrix;
use crate::reps::MultiplicityVector;
use crate::scalar::{Scalar, ScalarField};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementSet {
    GeneratorsOnly,
    AllElements,
}

/// Stacked linear constraints on vec(X) for an n × n form X.
#[derive(Debug, Clone)]
pub struct ConstraintSystem<S> {
    n: usize,
    matrix: Matrix<S>,
}

impl<S: Scalar> ConstraintSystem<S> {
    /// One (Cᵗ ⊗ Cᵗ − I) block per matrix, stacked vertically.
    pub fn new(actions: &[Matrix<S>]) -> Result<Self> {
        let first = actions.first().ok_or_else(|| Error::DimensionMismatch("no constraining matrices".into()))?;
        let n = first.rows();
        let id = Matrix::identity(n * n, &first.one_elem());
        let blocks = actions
            .iter()
            .map(|c| {
                if c.rows() != n || c.cols() != n {
                    return Err(Error::DimensionMismatch("constraining matrices differ in size".into()));
                }
                let ct = c.transpose();
                ct.kron(&ct)?.sub(&id)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ConstraintSystem { n, matrix: Matrix::vstack(&blocks)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    /// Adds X(r, c) − X(c, r) = 0 for r < c.
    pub fn with_symmetry(&self) -> Self {
        self.with_pair_rows(false)
    }

    /// Adds X(r, c) + X(c, r) = 0 for r ≤ c.
    pub fn with_skew_symmetry(&self) -> Self {
        self.with_pair_rows(true)
    }

    fn with_pair_rows(&self, skew: bool) -> Self {
        let n = self.n;
        let zero = self.matrix.zero_elem();
        let one = self.matrix.one_elem();
        let mut rows = Vec::new();
        for r in 0..n {
            for c in r..n {
                if c == r && !skew {
                    continue;
                }
                let mut row = vec![zero.clone(); n * n];
                row[c * n + r] = one.clone();
                if c == r {
                    row[c * n + r] = one.add(&one);
                } else {
                    row[r * n + c] = if skew { one.clone() } else { one.neg() };
                }
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return self.clone();
        }
        let extra = Matrix::from_rows(rows).expect("rectangular");
        ConstraintSystem { n, matrix: Matrix::vstack(&[self.matrix.clone(), extra]).expect("same width") }
    }

    /// Null space, reshaped to n × n forms.
    pub fn solve(&self) -> Vec<BilinearForm<S>> {
        self.matrix
            .null_space()
            .iter()
            .map(|v| BilinearForm::new(Matrix::devectorize(v, self.n, self.n).expect("n² entries")).expect("square"))
            .collect()
    }

    pub fn nullity(&self) -> usize {
        self.matrix.nullity()
    }
}

impl<F: ScalarField> Realization<F> {
    fn constraint_system(&self, kvec: &MultiplicityVector, elements: ElementSet) -> Result<ConstraintSystem<F::Elem>> {
        let actions = match elements {
            ElementSet::GeneratorsOnly => {
                let rep = self.representation(kvec)?;
                vec![rep.a, rep.b]
            }
            ElementSet::AllElements => self.rep_matrices(kvec)?,
        };
        ConstraintSystem::new(&actions)
    }

    /// Basis of {X : CᵗXC = X} by solving the stacked system directly.
    pub fn brute_invariant_space(
        &self,
        kvec: &MultiplicityVector,
        elements: ElementSet,
    ) -> Result<Vec<BilinearForm<F::Elem>>> {
        Ok(self.constraint_system(kvec, elements)?.solve())
    }

    pub fn oracle_dimension(&self, kvec: &MultiplicityVector) -> Result<usize> {
        Ok(self.constraint_system(kvec, ElementSet::GeneratorsOnly)?.nullity())
    }

    pub fn oracle_symmetric_dimension(&self, kvec: &MultiplicityVector) -> Result<usize> {
        Ok(self.constraint_system(kvec, ElementSet::GeneratorsOnly)?.with_symmetry().nullity())
    }

    pub fn oracle_skew_dimension(&self, kvec: &MultiplicityVector) -> Result<usize> {
        Ok(self.constraint_system(kvec, ElementSet::GeneratorsOnly)?.with_skew_symmetry().nullity())
    }
}

fn span_rank<S: Scalar>(forms: &[&BilinearForm<S>]) -> usize {
    if forms.is_empty() {
        return 0;
    }
    let rows: Vec<Matrix<S>> = forms.iter().map(|f| f.matrix().vectorize().transpose()).collect();
    Matrix::vstack(&rows).expect("same size").rank()
}

/// Whether two lists of forms span the same subspace.
pub fn subspace_equal<S: Scalar>(left: &[BilinearForm<S>], right: &[BilinearForm<S>]) -> Result<bool> {
    let sizes = left.iter().chain(right).map(BilinearForm::n);
    if let Some(n) = left.iter().chain(right).map(BilinearForm::n).next() {
        if sizes.clone().any(|s| s != n) {
            return Err(Error::DimensionMismatch("forms of different sizes".into()));
        }
    }
    let l: Vec<_> = left.iter().collect();
    let r: Vec<_> = right.iter().collect();
    let both: Vec<_> = left.iter().chain(right).collect();
    let (rl, rr, rb) = (span_rank(&l), span_rank(&r), span_rank(&both));
    Ok(rl == rr && rl == rb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::DihedralGroup;
    use crate::forms::dimension;
    use crate::irreps::ExactRealization;
    use crate::scalar::CyclotomicField;

    fn setup(m: usize, k: &[usize]) -> (ExactRealization, MultiplicityVector) {
        let g = DihedralGroup::new(m).unwrap();
        (Realization::exact(g), MultiplicityVector::new(&g, k.to_vec()).unwrap())
    }

    #[test]
    fn planar_irrep_of_d3() {
        let (r, k) = setup(3, &[0, 0, 1]);
        let sys = r.constraint_system(&k, ElementSet::GeneratorsOnly).unwrap();
        assert_eq!((sys.matrix().rows(), sys.matrix().cols()), (8, 4));
        let space = r.brute_invariant_space(&k, ElementSet::GeneratorsOnly).unwrap();
        assert_eq!(space.len(), 1);
        assert_eq!(*space[0].matrix(), r.identity(2));
    }

    #[test]
    fn small_dimensions() {
        let (r, k) = setup(3, &[2, 0, 0]);
        assert_eq!(r.oracle_dimension(&k).unwrap(), 4);
        let (r, k) = setup(4, &[0, 0, 0, 0, 1]);
        assert_eq!(r.oracle_dimension(&k).unwrap(), 1);
        let (r, k) = setup(3, &[1, 1, 1]);
        assert_eq!(r.constraint_system(&k, ElementSet::GeneratorsOnly).unwrap().matrix().rows(), 32);
        assert_eq!(r.oracle_dimension(&k).unwrap(), 3);
        let (r, k) = setup(6, &[1, 0, 0, 0, 1, 0]);
        assert_eq!(r.oracle_dimension(&k).unwrap(), 2);
    }

    #[test]
    fn single_irreps_have_one_dimensional_spaces() {
        for m in 3..=10 {
            let g = DihedralGroup::new(m).unwrap();
            let r = Realization::exact(g);
            for i in 0..g.class_count() {
                let mut k = vec![0; g.class_count()];
                k[i] = 1;
                let kv = MultiplicityVector::new(&g, k).unwrap();
                assert_eq!(r.oracle_dimension(&kv).unwrap(), 1, "m={m} irrep {}", i + 1);
            }
        }
    }

    #[test]
    fn symmetric_and_skew() {
        let (r, k) = setup(4, &[0, 0, 0, 0, 2]);
        assert_eq!(r.oracle_symmetric_dimension(&k).unwrap(), 3);
        assert_eq!(r.oracle_skew_dimension(&k).unwrap(), 1);
        let (r, k) = setup(5, &[2, 1, 0, 3]);
        assert_eq!(r.oracle_symmetric_dimension(&k).unwrap() + r.oracle_skew_dimension(&k).unwrap(), dimension(&k));
    }

    #[test]
    fn span_equality() {
        let f = CyclotomicField::new(4);
        let form = |rows: [[i64; 2]; 2]| {
            BilinearForm::new(Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect()).unwrap())
                .unwrap()
        };
        let id = form([[1, 0], [0, 1]]);
        let j = form([[0, 1], [-1, 0]]);
        let basis = vec![id.clone(), form([[1, 1], [0, 0]])];
        assert!(subspace_equal(&basis, &basis).unwrap());
        let scaled: Vec<_> = basis.iter().map(|b| b.scale(&f.from_int(3))).collect();
        assert!(subspace_equal(&basis, &scaled).unwrap());
        assert!(!subspace_equal(std::slice::from_ref(&id), &[j]).unwrap());
        assert!(subspace_equal::<crate::scalar::CycloScalar>(&[], &[]).unwrap());
        let three = BilinearForm::new(Matrix::identity(3, &f.one())).unwrap();
        assert!(subspace_equal(&[id], &[three]).is_err());
    }

    #[test]
    fn generators_suffice() {
        let (r, k) = setup(6, &[1, 0, 1, 0, 1, 1]);
        let gens = r.brute_invariant_space(&k, ElementSet::GeneratorsOnly).unwrap();
        let all = r.brute_invariant_space(&k, ElementSet::AllElements).unwrap();
        assert!(subspace_equal(&gens, &all).unwrap());
        assert!(subspace_equal(&gens, &r.invariant_space_basis(&k).unwrap().basis).unwrap());
    }
}
