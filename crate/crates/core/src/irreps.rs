//! The irreducible representations of D_m in the real rotation/reflection
//! basis, their characters, kernels and images.
//!
//! Irreps are numbered from 1 in a fixed order: the degree-1 irreps first
//! (two for odd m, four for even m, in the order of the standard tables
//! below), then the degree-2 irreps ρ_t for t = 1, …, ⌊(m−1)/2⌋.
//!
//! | m    | irrep | a  | b  |
//! |------|-------|----|----|
//! | any  | ρ₁    | 1  | 1  |
//! | any  | ρ₂    | 1  | −1 |
//! | even | ρ₃    | −1 | −1 |
//! | even | ρ₄    | −1 | 1  |

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde_json::{json, Value};

use crate::dihedral::{DihedralGroup, GroupElement};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::{CycloScalar, CyclotomicField, FloatField, Scalar, ScalarField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IrrepKind {
    /// One-dimensional: a ↦ `on_a`, b ↦ `on_b`, both ±1.
    Linear { on_a: i8, on_b: i8 },
    /// Two-dimensional: a ↦ rotation by 2πt/m, b ↦ diag(1, −1).
    Planar { t: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Irrep {
    index: usize,
    m: usize,
    kind: IrrepKind,
}

impl Irrep {
    /// 1-based position in the canonical order.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> IrrepKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        match self.kind {
            IrrepKind::Linear { .. } => 1,
            IrrepKind::Planar { .. } => 2,
        }
    }

    pub fn t(&self) -> Option<usize> {
        match self.kind {
            IrrepKind::Planar { t } => Some(t),
            IrrepKind::Linear { .. } => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.kind == IrrepKind::Linear { on_a: 1, on_b: 1 }
    }

    pub fn label(&self) -> String {
        format!("rho_{}", self.index)
    }

    /// Closed-form faithfulness: degree-1 irreps never are, ρ_t is iff gcd(m, t) = 1.
    pub fn is_faithful_by_gcd(&self) -> bool {
        self.t().is_some_and(|t| t.gcd(&self.m) == 1)
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            IrrepKind::Linear { on_a, on_b } => {
                write!(f, "{} (degree 1, a -> {on_a}, b -> {on_b})", self.label())
            }
            IrrepKind::Planar { t } => write!(f, "{} (degree 2, t = {t})", self.label()),
        }
    }
}

/// All r = 2|Z| + ⌊(m−1)/2⌋ irreps of D_m in canonical order.
pub fn list_irreps(group: &DihedralGroup) -> Vec<Irrep> {
    let m = group.m();
    let mut signs = vec![(1, 1), (1, -1)];
    if m.is_even() {
        signs.extend([(-1, -1), (-1, 1)]);
    }
    let linear = signs.into_iter().map(|(on_a, on_b)| IrrepKind::Linear { on_a, on_b });
    let planar = (1..=(m - 1) / 2).map(|t| IrrepKind::Planar { t });
    linear.chain(planar).enumerate().map(|(i, kind)| Irrep { index: i + 1, m, kind }).collect()
}

/// Isomorphism class of an image ρ(D_m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoClass {
    Trivial,
    CyclicOfOrder2,
    /// D_k, of order 2k.
    Dihedral(usize),
}

impl IsoClass {
    pub fn order(&self) -> usize {
        match self {
            IsoClass::Trivial => 1,
            IsoClass::CyclicOfOrder2 => 2,
            IsoClass::Dihedral(k) => 2 * k,
        }
    }
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoClass::Trivial => f.write_str("Z_1"),
            IsoClass::CyclicOfOrder2 => f.write_str("Z_2"),
            IsoClass::Dihedral(k) => write!(f, "D_{k}"),
        }
    }
}

/// Image class from the structure of the irrep: Z₁ for ρ₁, Z₂ for the
/// other degree-1 irreps, D_{m/gcd(m,t)} for ρ_t.
pub fn image_of_irrep(irrep: &Irrep) -> IsoClass {
    match irrep.kind {
        IrrepKind::Linear { .. } if irrep.is_trivial() => IsoClass::Trivial,
        IrrepKind::Linear { .. } => IsoClass::CyclicOfOrder2,
        IrrepKind::Planar { t } => {
            let k = irrep.m / irrep.m.gcd(&t);
            assert!(k >= 3, "degree-2 irreps of D_m have images D_k with k >= 3");
            IsoClass::Dihedral(k)
        }
    }
}

/// Prime factorization m = 2^{l₂} 3^{l₃} ⋯ p^{l_p}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn of(m: u64) -> Self {
        assert!(m >= 1);
        let mut factors = Vec::new();
        let mut rest = m;
        let mut p = 2;
        while p * p <= rest {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
            p += 1;
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Factorization { factors }
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// (l₂+1)(l₃+1)⋯(l_p+1)
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }
}

fn center_size(m: usize) -> i64 {
    if m.is_odd() { 1 } else { 2 }
}

/// (l₂+1)⋯(l_p+1) + |Z| − 1.
pub fn count_nontrivial_kernel_irreps(group: &DihedralGroup) -> i64 {
    let d = Factorization::of(group.m() as u64).divisor_count() as i64;
    d + center_size(group.m()) - 1
}

/// ⌊(m−1)/2⌋ − (l₂+1)⋯(l_p+1) + |Z| + 1.
pub fn count_faithful_irreps(group: &DihedralGroup) -> i64 {
    let m = group.m();
    let d = Factorization::of(m as u64).divisor_count() as i64;
    ((m as i64) - 1) / 2 - d + center_size(m) + 1
}

/// 2 + (l₂+1)⋯(l_p+1) − |Z|.
pub fn count_irrep_images(group: &DihedralGroup) -> i64 {
    let d = Factorization::of(group.m() as u64).divisor_count() as i64;
    2 + d - center_size(group.m())
}

/// Concrete matrices for every irrep of D_m over a chosen scalar field.
///
/// Cosines and sines of the m angles 2πj/m are computed once up front.
#[derive(Debug, Clone)]
pub struct Realization<F: ScalarField> {
    group: DihedralGroup,
    field: F,
    irreps: Vec<Irrep>,
    cos: Vec<F::Elem>,
    sin: Vec<F::Elem>,
}

pub type ExactRealization = Realization<CyclotomicField>;
pub type FloatRealization = Realization<FloatField>;

impl Realization<CyclotomicField> {
    /// Exact realization over Q(ζ_N), N = lcm(4, m).
    pub fn exact(group: DihedralGroup) -> Self {
        Self::new(group, CyclotomicField::for_dihedral(group.m())).expect("lcm(4, m) is a valid conductor")
    }
}

impl Realization<FloatField> {
    pub fn float(group: DihedralGroup) -> Self {
        Self::new(group, FloatField).expect("float trig never fails")
    }
}

impl<F: ScalarField> Realization<F> {
    pub fn new(group: DihedralGroup, field: F) -> Result<Self> {
        let m = group.m() as u64;
        let cos = (0..m as i64).map(|j| field.cos_turn(j, m)).collect::<Result<_>>()?;
        let sin = (0..m as i64).map(|j| field.sin_turn(j, m)).collect::<Result<_>>()?;
        Ok(Realization { group, irreps: list_irreps(&group), field, cos, sin })
    }

    pub fn group(&self) -> &DihedralGroup {
        &self.group
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    /// Irrep by 1-based index.
    pub fn irrep(&self, index: usize) -> Option<&Irrep> {
        index.checked_sub(1).and_then(|i| self.irreps.get(i))
    }

    pub fn identity(&self, n: usize) -> Matrix<F::Elem> {
        Matrix::identity(n, &self.field.one())
    }

    fn sign(&self, v: i8) -> F::Elem {
        self.field.from_int(i64::from(v))
    }

    /// ρ(a^s b^e).
    pub fn irrep_matrix(&self, irrep: &Irrep, g: GroupElement) -> Matrix<F::Elem> {
        let s = g.rotation_exponent();
        match irrep.kind {
            IrrepKind::Linear { on_a, on_b } => {
                let mut v = if on_a < 0 && s.is_odd() { -1 } else { 1 };
                if g.is_reflection() {
                    v *= on_b;
                }
                Matrix::scalar(self.sign(v))
            }
            IrrepKind::Planar { t } => {
                let j = (t * s) % self.group.m();
                let (c, sn) = (self.cos[j].clone(), self.sin[j].clone());
                let rows = if g.is_reflection() {
                    vec![vec![c.clone(), sn.clone()], vec![sn, c.neg()]]
                } else {
                    vec![vec![c.clone(), sn.neg()], vec![sn, c]]
                };
                Matrix::from_rows(rows).expect("2x2")
            }
        }
    }

    /// χ(g) = tr ρ(g).
    pub fn character(&self, irrep: &Irrep, g: GroupElement) -> F::Elem {
        let mat = self.irrep_matrix(irrep, g);
        (0..mat.rows()).fold(self.field.zero(), |acc, i| acc.add(mat.get(i, i)))
    }

    /// Character values over all group elements in [`DihedralGroup::elements`] order.
    pub fn character_values(&self, irrep: &Irrep) -> Vec<F::Elem> {
        self.group.elements().map(|g| self.character(irrep, g)).collect()
    }

    /// (χ, ψ) = (1/|G|) Σ_g χ(g) conj(ψ(g)), both given over all elements.
    pub fn character_inner_product(&self, chi: &[F::Elem], psi: &[F::Elem]) -> F::Elem {
        assert_eq!(chi.len(), self.group.order());
        assert_eq!(psi.len(), self.group.order());
        let total = chi.iter().zip(psi).fold(self.field.zero(), |acc, (x, y)| acc.add(&x.mul(&y.conj())));
        let inv_order = self.field.from_int(self.group.order() as i64).inv().expect("nonzero");
        total.mul(&inv_order)
    }

    /// {g : ρ(g) = I}, by evaluating ρ on every element.
    pub fn kernel(&self, irrep: &Irrep) -> Vec<GroupElement> {
        let id = self.identity(irrep.degree());
        self.group.elements().filter(|&g| self.irrep_matrix(irrep, g).approx_eq(&id, 1e-9)).collect()
    }

    pub fn is_faithful(&self, irrep: &Irrep) -> bool {
        self.kernel(irrep) == [GroupElement::IDENTITY]
    }

    pub fn brute_nontrivial_kernel_count(&self) -> usize {
        self.irreps.iter().filter(|ir| !self.is_faithful(ir)).count()
    }

    pub fn brute_faithful_count(&self) -> usize {
        self.irreps.iter().filter(|ir| self.is_faithful(ir)).count()
    }

    /// Image of ρ classified from its distinct matrices.
    pub fn brute_image_of_irrep(&self, irrep: &Irrep) -> IsoClass {
        let mats: Vec<_> = self.group.elements().map(|g| self.irrep_matrix(irrep, g)).collect();
        classify_image(&mats)
    }

    pub fn brute_image_count(&self) -> usize {
        self.irreps.iter().map(|ir| self.brute_image_of_irrep(ir)).collect::<BTreeSet<_>>().len()
    }
}

/// Distinct matrices up to the float tolerance (exact equality for exact scalars).
pub fn distinct_matrices<S: Scalar>(mats: &[Matrix<S>]) -> Vec<Matrix<S>> {
    let mut out: Vec<Matrix<S>> = Vec::new();
    for m in mats {
        if !out.iter().any(|o| o.approx_eq(m, 1e-9)) {
            out.push(m.clone());
        }
    }
    out
}

/// Classifies the image of a dihedral group from the matrices of all its
/// elements, listed in [`DihedralGroup::elements`] order. Images of dihedral
/// groups are quotients, hence either abelian of order ≤ 2 or dihedral; the
/// dihedral case is checked against the order of the image of `a`.
pub fn classify_image<S: Scalar>(mats: &[Matrix<S>]) -> IsoClass {
    let distinct = distinct_matrices(mats);
    match distinct.len() {
        1 => IsoClass::Trivial,
        2 => IsoClass::CyclicOfOrder2,
        size => {
            let rot = &mats[1];
            let id = &mats[0];
            let mut power = rot.clone();
            let mut order = 1;
            while !power.approx_eq(id, 1e-9) {
                power = power.mat_mul(rot).expect("square");
                order += 1;
            }
            assert_eq!(size, 2 * order, "image of a dihedral group must be dihedral here");
            IsoClass::Dihedral(order)
        }
    }
}

/// Character table over Q(ζ_N): one row per irrep, one column per class.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    m: usize,
    conductor: u64,
    irreps: Vec<Irrep>,
    classes: Vec<Vec<GroupElement>>,
    values: Vec<Vec<CycloScalar>>,
}

impl CharacterTable {
    pub fn new(realization: &ExactRealization) -> Self {
        let group = *realization.group();
        let classes = group.conjugacy_classes();
        let irreps = realization.irreps().to_vec();
        let values = irreps
            .iter()
            .map(|ir| classes.iter().map(|cl| realization.character(ir, cl[0])).collect())
            .collect();
        CharacterTable { m: group.m(), conductor: realization.field().conductor(), irreps, classes, values }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn classes(&self) -> &[Vec<GroupElement>] {
        &self.classes
    }

    pub fn class_representatives(&self) -> Vec<GroupElement> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    /// Row `i` (0-based) in class order.
    pub fn row(&self, i: usize) -> &[CycloScalar] {
        &self.values[i]
    }

    pub fn to_text(&self) -> String {
        let header: Vec<String> = std::iter::once(String::new())
            .chain(self.classes.iter().map(|c| format!("{} [{}]", c[0], c.len())))
            .collect();
        let mut grid = vec![header];
        for (ir, row) in self.irreps.iter().zip(&self.values) {
            let mut line = vec![ir.label()];
            line.extend(row.iter().map(|v| v.to_string()));
            grid.push(line);
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for line in grid {
            let cells: Vec<String> = line.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "classes": self.classes.iter().map(|c| json!({
                "representative": c[0].to_string(),
                "size": c.len(),
            })).collect::<Vec<_>>(),
            "rows": self.irreps.iter().zip(&self.values).map(|(ir, row)| json!({
                "irrep": ir.label(),
                "degree": ir.degree(),
                "t": ir.t(),
                "values": row.iter().map(crate::export::scalar_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}
