//! Finite-dimensional representations of D_m named by multiplicity vectors
//! ρ = k₁ρ₁ ⊕ ⋯ ⊕ k_rρ_r, with degree n = Σ d_i k_i.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde_json::Value;

use crate::dihedral::{DihedralGroup, GroupElement};
use crate::error::{Error, Result};
use crate::irreps::{classify_image, list_irreps, IsoClass, Realization};
use crate::linalg::Matrix;
use crate::scalar::{Scalar, ScalarField};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityVector {
    m: usize,
    k: Vec<usize>,
}

/// Where the copies of one irrep sit inside a representation matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockSlot {
    /// 1-based irrep index.
    pub irrep_index: usize,
    pub degree: usize,
    pub multiplicity: usize,
    pub offset: usize,
    /// degree × multiplicity
    pub size: usize,
}

fn irrep_degrees(group: &DihedralGroup) -> Vec<usize> {
    list_irreps(group).iter().map(|ir| ir.degree()).collect()
}

impl MultiplicityVector {
    pub fn new(group: &DihedralGroup, k: Vec<usize>) -> Result<Self> {
        let r = group.class_count();
        if k.len() != r {
            return Err(Error::MultiplicityLength { m: group.m(), expected: r, got: k.len() });
        }
        let v = MultiplicityVector { m: group.m(), k };
        if v.degree() == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(v)
    }

    /// Parses comma-separated multiplicities, e.g. `"1,1,0"`.
    pub fn parse(group: &DihedralGroup, text: &str) -> Result<Self> {
        let k = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad multiplicity {part:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, k)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn group(&self) -> DihedralGroup {
        DihedralGroup::new(self.m).expect("validated at construction")
    }

    pub fn counts(&self) -> &[usize] {
        &self.k
    }

    /// Number of degree-1 irreps, 2|Z|.
    fn linear_count(&self) -> usize {
        if self.m.is_odd() { 2 } else { 4 }
    }

    fn irrep_degree(&self, i: usize) -> usize {
        if i < self.linear_count() { 1 } else { 2 }
    }

    /// n = Σ d_i k_i.
    pub fn degree(&self) -> usize {
        self.k.iter().enumerate().map(|(i, &k)| self.irrep_degree(i) * k).sum()
    }

    pub fn layout(&self) -> Vec<BlockSlot> {
        let mut offset = 0;
        let mut out = Vec::new();
        for (i, &k) in self.k.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let d = self.irrep_degree(i);
            out.push(BlockSlot { irrep_index: i + 1, degree: d, multiplicity: k, offset, size: d * k });
            offset += d * k;
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.k.iter().map(|&k| Value::from(k)).collect())
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.k.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Every multiplicity vector of degree `n`, in decreasing lexicographic order.
pub fn enumerate_reps(group: &DihedralGroup, n: usize) -> Result<Vec<MultiplicityVector>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let degrees = irrep_degrees(group);
    let mut out = Vec::new();
    let mut current = vec![0; degrees.len()];
    fill(&degrees, 0, n, &mut current, &mut |k| {
        out.push(MultiplicityVector { m: group.m(), k: k.to_vec() });
    });
    Ok(out)
}

fn fill(degrees: &[usize], pos: usize, remaining: usize, current: &mut [usize], emit: &mut impl FnMut(&[usize])) {
    if pos == degrees.len() {
        if remaining == 0 {
            emit(current);
        }
        return;
    }
    for k in (0..=remaining / degrees[pos]).rev() {
        current[pos] = k;
        fill(degrees, pos + 1, remaining - k * degrees[pos], current, emit);
    }
    current[pos] = 0;
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Σ_{s=0}^{⌊n/2⌋} C(s + ⌊(m−3)/2⌋, ⌊(m−3)/2⌋) · C(n − 2s + 2|Z| − 1, 2|Z| − 1).
pub fn count_reps(group: &DihedralGroup, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let planar = (group.m() - 3) / 2;
    let linear = 2 * group.center_size();
    Ok((0..=n / 2)
        .map(|s| binomial(s + planar, planar) * binomial(n - 2 * s + linear - 1, linear - 1))
        .sum())
}

/// Image class from the multiplicities alone: Z₁ if only ρ₁ occurs, Z₂ if
/// only degree-1 irreps occur and one of them is nontrivial, otherwise
/// D_L with L = lcm of m/gcd(m,t) over the degree-2 irreps present.
pub fn image_of_rep(kvec: &MultiplicityVector) -> IsoClass {
    let m = kvec.m;
    let split = kvec.linear_count();
    let planar_orders: Vec<usize> = kvec.k[split..]
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, _)| m / m.gcd(&(i + 1)))
        .collect();
    if planar_orders.is_empty() {
        if kvec.k[1..split].iter().any(|&k| k > 0) {
            IsoClass::CyclicOfOrder2
        } else {
            IsoClass::Trivial
        }
    } else {
        IsoClass::Dihedral(planar_orders.into_iter().fold(1, |acc, o| acc.lcm(&o)))
    }
}

/// Images of the generators a and b under a representation.
#[derive(Debug, Clone)]
pub struct Representation<S> {
    pub spec: MultiplicityVector,
    pub a: Matrix<S>,
    pub b: Matrix<S>,
}

impl<S: Scalar> Representation<S> {
    /// a^m = I, b² = I and ba = a^{m−1}b.
    pub fn satisfies_relations(&self) -> bool {
        let m = self.spec.m;
        let id = Matrix::identity(self.a.rows(), &self.a.one_elem());
        let mut powers = vec![id.clone()];
        for _ in 0..m {
            let next = powers.last().unwrap().mat_mul(&self.a).expect("square");
            powers.push(next);
        }
        let tol = 1e-9;
        let ba = self.b.mat_mul(&self.a).expect("square");
        let rhs = powers[m - 1].mat_mul(&self.b).expect("square");
        powers[m].approx_eq(&id, tol)
            && self.b.mat_mul(&self.b).expect("square").approx_eq(&id, tol)
            && ba.approx_eq(&rhs, tol)
    }
}

impl<F: ScalarField> Realization<F> {
    pub(crate) fn check_group(&self, kvec: &MultiplicityVector) -> Result<()> {
        if kvec.m != self.group().m() {
            return Err(Error::GroupMismatch(kvec.m, self.group().m()));
        }
        Ok(())
    }

    /// Diag[ρ₁ (k₁ times), …, ρ_r (k_r times)] evaluated at `g`.
    pub fn rep_matrix(&self, kvec: &MultiplicityVector, g: GroupElement) -> Result<Matrix<F::Elem>> {
        self.check_group(kvec)?;
        let mut blocks = Vec::new();
        for (ir, &k) in self.irreps().iter().zip(&kvec.k) {
            if k > 0 {
                let block = self.irrep_matrix(ir, g);
                blocks.extend(std::iter::repeat_n(block, k));
            }
        }
        Matrix::block_diag(&blocks)
    }

    pub fn representation(&self, kvec: &MultiplicityVector) -> Result<Representation<F::Elem>> {
        let g = *self.group();
        Ok(Representation { spec: kvec.clone(), a: self.rep_matrix(kvec, g.a())?, b: self.rep_matrix(kvec, g.b())? })
    }

    /// tr ρ(g) for the composite representation.
    pub fn rep_character(&self, kvec: &MultiplicityVector, g: GroupElement) -> Result<F::Elem> {
        let mat = self.rep_matrix(kvec, g)?;
        Ok((0..mat.rows()).fold(self.field().zero(), |acc, i| acc.add(mat.get(i, i))))
    }

    /// Isomorphism test by comparing composite characters on every class.
    pub fn isomorphic(&self, left: &MultiplicityVector, right: &MultiplicityVector) -> Result<bool> {
        self.check_group(left)?;
        self.check_group(right)?;
        if left.degree() != right.degree() {
            return Err(Error::DegreeMismatch(left.degree(), right.degree()));
        }
        for class in self.group().conjugacy_classes() {
            let x = self.rep_character(left, class[0])?;
            let y = self.rep_character(right, class[0])?;
            if !Matrix::scalar(x).approx_eq(&Matrix::scalar(y), 1e-9) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// {g : ρ(g) = I}, by evaluating ρ on every element.
    pub fn rep_kernel(&self, kvec: &MultiplicityVector) -> Result<Vec<GroupElement>> {
        let id = self.identity(kvec.degree());
        let mut out = Vec::new();
        for g in self.group().elements() {
            if self.rep_matrix(kvec, g)?.approx_eq(&id, 1e-9) {
                out.push(g);
            }
        }
        Ok(out)
    }

    pub fn rep_is_faithful(&self, kvec: &MultiplicityVector) -> Result<bool> {
        Ok(self.rep_kernel(kvec)? == [GroupElement::IDENTITY])
    }

    /// Matrices of every group element, in [`DihedralGroup::elements`] order.
    pub fn rep_matrices(&self, kvec: &MultiplicityVector) -> Result<Vec<Matrix<F::Elem>>> {
        self.group().elements().map(|g| self.rep_matrix(kvec, g)).collect()
    }

    /// Image class from the distinct matrices of the representation.
    pub fn brute_image_of_rep(&self, kvec: &MultiplicityVector) -> Result<IsoClass> {
        Ok(classify_image(&self.rep_matrices(kvec)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreps::distinct_matrices;

    fn d(m: usize) -> DihedralGroup {
        DihedralGroup::new(m).unwrap()
    }

    fn kv(m: usize, k: &[usize]) -> MultiplicityVector {
        MultiplicityVector::new(&d(m), k.to_vec()).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(kv(3, &[1, 1, 1]).degree(), 4);
        assert_eq!(kv(4, &[0, 0, 0, 0, 1]).degree(), 2);
        assert_eq!(kv(3, &[2, 0, 0]).degree(), 2);
    }

    #[test]
    fn validation() {
        assert_eq!(
            MultiplicityVector::new(&d(3), vec![1, 1]),
            Err(Error::MultiplicityLength { m: 3, expected: 3, got: 2 })
        );
        assert_eq!(MultiplicityVector::new(&d(3), vec![0, 0, 0]), Err(Error::ZeroDegree));
        assert!(matches!(MultiplicityVector::parse(&d(3), "1,x,0"), Err(Error::Parse(_))));
        assert_eq!(MultiplicityVector::parse(&d(3), "1, 1,0").unwrap(), kv(3, &[1, 1, 0]));
        assert_eq!(kv(3, &[1, 1, 0]).to_string(), "1,1,0");
        assert_eq!(kv(3, &[1, 1, 0]).to_json().to_string(), "[1,1,0]");
        assert_eq!(enumerate_reps(&d(3), 0), Err(Error::ZeroDegree));
        assert_eq!(count_reps(&d(3), 0), Err(Error::ZeroDegree));
    }

    #[test]
    fn rep_matrices() {
        let r = Realization::exact(d(3));
        let f = r.field().clone();
        let g = *r.group();
        for x in g.elements() {
            assert_eq!(r.rep_matrix(&kv(3, &[1, 0, 0]), x).unwrap(), Matrix::scalar(f.one()));
        }
        let diag = r.rep_matrix(&kv(3, &[1, 1, 0]), g.b()).unwrap();
        let expected = Matrix::from_rows(vec![vec![f.one(), f.zero()], vec![f.zero(), f.from_int(-1)]]).unwrap();
        assert_eq!(diag, expected);
        let rot = r.rep_matrix(&kv(3, &[0, 0, 1]), g.a()).unwrap();
        let c = f.embed_cos(1, 3).unwrap();
        let s = f.embed_sin(1, 3).unwrap();
        assert_eq!(rot, Matrix::from_rows(vec![vec![c.clone(), s.neg()], vec![s, c]]).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<String> = enumerate_reps(&d(3), 2).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(got, ["2,0,0", "1,1,0", "0,2,0", "0,0,1"]);
        assert_eq!(enumerate_reps(&d(3), 1).unwrap().len(), 2);
        assert_eq!(enumerate_reps(&d(4), 2).unwrap().len(), 11);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_reps(&d(3), 2).unwrap(), BigUint::from(4u32));
        assert_eq!(count_reps(&d(4), 2).unwrap(), BigUint::from(11u32));
        assert_eq!(count_reps(&d(3), 1).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn count_matches_enumeration() {
        for m in 3..=12 {
            for n in 1..=10 {
                let list = enumerate_reps(&d(m), n).unwrap();
                assert_eq!(count_reps(&d(m), n).unwrap(), BigUint::from(list.len()), "m={m} n={n}");
                assert!(list.iter().all(|k| k.degree() == n));
                assert!(list.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn isomorphism_via_characters() {
        let r = Realization::exact(d(3));
        let a = kv(3, &[1, 1, 0]);
        assert!(r.isomorphic(&a, &a).unwrap());
        assert!(!r.isomorphic(&kv(3, &[2, 0, 0]), &a).unwrap());
        assert!(!r.isomorphic(&kv(3, &[0, 2, 0]), &kv(3, &[0, 0, 1])).unwrap());
        assert_eq!(r.isomorphic(&a, &kv(3, &[1, 1, 1])), Err(Error::DegreeMismatch(2, 4)));
        for m in 3..=6 {
            let r = Realization::exact(d(m));
            let list = enumerate_reps(&d(m), 3).unwrap();
            for x in &list {
                for y in &list {
                    assert_eq!(r.isomorphic(x, y).unwrap(), x == y);
                }
            }
        }
    }

    #[test]
    fn composite_character_is_sum_of_irreducible_ones() {
        let r = Realization::exact(d(6));
        let k = kv(6, &[2, 0, 1, 0, 1, 3]);
        for g in r.group().elements() {
            let expected = r
                .irreps()
                .iter()
                .zip(k.counts())
                .fold(r.field().zero(), |acc, (ir, &c)| acc.add(&r.character(ir, g).mul(&r.field().from_int(c as i64))));
            assert_eq!(r.rep_character(&k, g).unwrap(), expected);
        }
    }

    #[test]
    fn kernels() {
        let r = Realization::exact(d(5));
        assert_eq!(r.rep_kernel(&kv(5, &[3, 0, 0, 0])).unwrap().len(), 10);
        let r6 = Realization::exact(d(6));
        let g6 = *r6.group();
        assert_eq!(
            r6.rep_kernel(&kv(6, &[0, 0, 0, 0, 0, 1])).unwrap(),
            vec![GroupElement::IDENTITY, g6.element(3, false)]
        );
        let r12 = Realization::exact(d(12));
        let k = kv(12, &[0, 0, 0, 0, 0, 1, 1, 0, 0]);
        assert!(r12.rep_is_faithful(&k).unwrap());
    }

    #[test]
    fn images() {
        assert_eq!(image_of_rep(&kv(5, &[4, 0, 0, 0])), IsoClass::Trivial);
        assert_eq!(image_of_rep(&kv(5, &[1, 1, 0, 0])), IsoClass::CyclicOfOrder2);
        assert_eq!(image_of_rep(&kv(6, &[0, 0, 0, 0, 0, 1])), IsoClass::Dihedral(3));
        let k = kv(12, &[0, 0, 0, 0, 0, 1, 1, 0, 0]);
        assert_eq!(image_of_rep(&k), IsoClass::Dihedral(12));
        let r = Realization::exact(d(12));
        assert_eq!(r.brute_image_of_rep(&k).unwrap(), IsoClass::Dihedral(12));
        assert_eq!(distinct_matrices(&r.rep_matrices(&k).unwrap()).len(), 24);
    }

    #[test]
    fn presentation_relations_hold() {
        for m in 3..=9 {
            let r = Realization::exact(d(m));
            for n in [1, 3, 4] {
                for k in enumerate_reps(&d(m), n).unwrap().into_iter().step_by(3) {
                    assert!(r.representation(&k).unwrap().satisfies_relations(), "m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn group_mismatch() {
        let r = Realization::exact(d(4));
        assert_eq!(r.rep_matrix(&kv(3, &[1, 0, 0]), GroupElement::IDENTITY), Err(Error::GroupMismatch(3, 4)));
    }
}
