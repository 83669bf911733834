//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use dihedral_forms::forms::{is_nondegenerate, skew_dimension, symmetric_dimension};
use dihedral_forms::irreps::{count_faithful_irreps, count_irrep_images, count_nontrivial_kernel_irreps, distinct_matrices};
use dihedral_forms::reps::{count_reps, enumerate_reps, image_of_rep};
use dihedral_forms::{
    subspace_equal, BilinearForm, CycloScalar, DihedralGroup, ElementSet, ExactRealization, FloatRealization,
    Matrix, MultiplicityVector, Realization, Scalar,
};

const COUNT_LIMIT: Duration = Duration::from_secs(5);
const DIMENSION_LIMIT: Duration = Duration::from_secs(60);
const FAITHFUL_LIMIT: Duration = Duration::from_secs(10);
const FLOAT_RANK_TOLERANCE: f64 = 1e-9;
const SWEEP_M: std::ops::RangeInclusive<usize> = 3..=8;
const SWEEP_N: usize = 6;
const SEED: u64 = 0x5eed_d1ed;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], ok: String) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: ok }
    } else {
        let shown: Vec<_> = failures.iter().take(8).cloned().collect();
        let more = if failures.len() > 8 { format!(" (+{} more)", failures.len() - 8) } else { String::new() };
        Outcome { pass: false, detail: format!("{}{more}", shown.join("; ")) }
    }
}

fn sweep() -> Vec<(DihedralGroup, MultiplicityVector)> {
    let mut out = Vec::new();
    for m in SWEEP_M {
        let g = DihedralGroup::new(m).unwrap();
        for n in 1..=SWEEP_N {
            out.extend(enumerate_reps(&g, n).unwrap().into_iter().map(|k| (g, k)));
        }
    }
    out
}

fn sum_squares(k: &MultiplicityVector) -> usize {
    k.counts().iter().map(|x| x * x).sum()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for m in 3..=12 {
        let g = DihedralGroup::new(m).unwrap();
        for n in 1..=10 {
            let closed = count_reps(&g, n).unwrap();
            let listed = enumerate_reps(&g, n).unwrap().len();
            if closed != BigUint::from(listed) {
                failures.push(format!("m={m} n={n}: formula {closed}, enumeration {listed}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= COUNT_LIMIT {
        failures.push(format!("took {elapsed:?}, limit {COUNT_LIMIT:?}"));
    }
    outcome(&failures, format!("100 (m, n) pairs agree in {elapsed:.2?}"))
}

fn criterion_2(cases: &[(DihedralGroup, MultiplicityVector)]) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut realizations: Vec<Option<ExactRealization>> = vec![None; 9];
    for (g, k) in cases {
        let r = realizations[g.m()].get_or_insert_with(|| Realization::exact(*g));
        let oracle = r.brute_invariant_space(k, ElementSet::GeneratorsOnly).unwrap();
        let built = r.invariant_space_basis(k).unwrap();
        let expected = sum_squares(k);
        if oracle.len() != expected || built.dimension() != expected {
            failures.push(format!("m={} k={k}: oracle {}, built {}, formula {expected}", g.m(), oracle.len(), built.dimension()));
        } else if !subspace_equal(&oracle, &built.basis).unwrap() {
            failures.push(format!("m={} k={k}: spans differ", g.m()));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= DIMENSION_LIMIT {
        failures.push(format!("took {elapsed:?}, limit {DIMENSION_LIMIT:?}"));
    }
    outcome(&failures, format!("{} multiplicity vectors agree and spans coincide in {elapsed:.2?}", cases.len()))
}

fn criterion_3(cases: &[(DihedralGroup, MultiplicityVector)]) -> Outcome {
    let mut failures = Vec::new();
    for (g, k) in cases {
        let r = Realization::exact(*g);
        let sym = r.oracle_symmetric_dimension(k).unwrap();
        let skew = r.oracle_skew_dimension(k).unwrap();
        let want_sym: usize = k.counts().iter().map(|x| x * (x + 1) / 2).sum();
        let want_skew: usize = k.counts().iter().map(|x| x * x.saturating_sub(1) / 2).sum();
        if (sym, skew) != (want_sym, want_skew) || (want_sym, want_skew) != (symmetric_dimension(k), skew_dimension(k)) {
            failures.push(format!("m={} k={k}: oracle ({sym}, {skew}), formula ({want_sym}, {want_skew})", g.m()));
        }
    }
    outcome(&failures, format!("{} multiplicity vectors split correctly", cases.len()))
}

fn slot_of(k: &MultiplicityVector, i: usize) -> usize {
    k.layout().iter().position(|s| i >= s.offset && i < s.offset + s.size).unwrap()
}

fn criterion_4(cases: &[(DihedralGroup, MultiplicityVector)]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (g, k) in cases {
        let r = Realization::exact(*g);
        let layout = k.layout();
        let n = k.degree();
        let owner: Vec<usize> = (0..n).map(|i| slot_of(k, i)).collect();
        for form in r.brute_invariant_space(k, ElementSet::GeneratorsOnly).unwrap() {
            checked += 1;
            let x = form.matrix();
            let off_block = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).any(|(i, j)| owner[i] != owner[j] && !x.get(i, j).is_zero());
            if off_block {
                failures.push(format!("m={} k={k}: nonzero inter-irrep entry", g.m()));
                continue;
            }
            for slot in layout.iter().filter(|s| s.degree == 2) {
                for p in 0..slot.multiplicity {
                    for q in 0..slot.multiplicity {
                        let (r0, c0) = (slot.offset + 2 * p, slot.offset + 2 * q);
                        let ok = x.get(r0, c0 + 1).is_zero()
                            && x.get(r0 + 1, c0).is_zero()
                            && x.get(r0, c0) == x.get(r0 + 1, c0 + 1);
                        if !ok {
                            failures.push(format!("m={} k={k}: slot ({p}, {q}) of rho_{} is not x*I2", g.m(), slot.irrep_index));
                        }
                    }
                }
            }
        }
    }
    outcome(&failures, format!("{checked} oracle basis forms have the expected block pattern"))
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    for m in 3..=20 {
        let r = Realization::exact(DihedralGroup::new(m).unwrap());
        let chars: Vec<_> = r.irreps().iter().map(|ir| r.character_values(ir)).collect();
        for (i, ci) in chars.iter().enumerate() {
            for (j, cj) in chars.iter().enumerate() {
                let ip = r.character_inner_product(ci, cj);
                let want = if i == j { r.field().one() } else { r.field().zero() };
                if ip != want {
                    failures.push(format!("m={m} <chi_{}, chi_{}> = {}", i + 1, j + 1, ip));
                }
            }
        }
    }
    outcome(&failures, "all character inner products equal delta_ij for 3 <= m <= 20".into())
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for m in 3..=100 {
        let g = DihedralGroup::new(m).unwrap();
        let r = Realization::exact(g);
        let brute_nontrivial = r.brute_nontrivial_kernel_count() as i64;
        let brute_faithful = r.brute_faithful_count() as i64;
        let (closed_nontrivial, closed_faithful) = (count_nontrivial_kernel_irreps(&g), count_faithful_irreps(&g));
        if closed_nontrivial != brute_nontrivial || closed_faithful != brute_faithful {
            failures.push(format!(
                "m={m}: nontrivial-kernel {closed_nontrivial} vs {brute_nontrivial}, faithful {closed_faithful} vs {brute_faithful}"
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= FAITHFUL_LIMIT {
        failures.push(format!("took {elapsed:?}, limit {FAITHFUL_LIMIT:?}"));
    }
    outcome(&failures, format!("closed forms match brute force for 3 <= m <= 100 in {elapsed:.2?}"))
}

fn random_kvec(rng: &mut StdRng) -> MultiplicityVector {
    let m = rng.random_range(3..=12);
    let g = DihedralGroup::new(m).unwrap();
    loop {
        let k: Vec<usize> = (0..g.class_count()).map(|_| if rng.random_bool(0.5) { 0 } else { rng.random_range(1..=2) }).collect();
        if k.iter().any(|&x| x > 0) {
            return MultiplicityVector::new(&g, k).unwrap();
        }
    }
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    for m in 3..=60 {
        let g = DihedralGroup::new(m).unwrap();
        let r = Realization::exact(g);
        for ir in r.irreps().iter().filter(|ir| ir.degree() == 2) {
            let t = ir.t().unwrap();
            let mats: Vec<_> = g.elements().map(|e| r.irrep_matrix(ir, e)).collect();
            let order = distinct_matrices(&mats).len();
            if order != 2 * m / m.gcd(&t) {
                failures.push(format!("m={m} t={t}: image order {order}, expected {}", 2 * m / m.gcd(&t)));
            }
        }
        let (brute, closed) = (r.brute_image_count() as i64, count_irrep_images(&g));
        if brute != closed {
            failures.push(format!("m={m}: {brute} distinct images, formula {closed}"));
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..30 {
        let k = random_kvec(&mut rng);
        let r = Realization::exact(k.group());
        let (closed, brute) = (image_of_rep(&k), r.brute_image_of_rep(&k).unwrap());
        let order = distinct_matrices(&r.rep_matrices(&k).unwrap()).len();
        if closed != brute || closed.order() != order {
            failures.push(format!("m={} k={k}: formula {closed}, brute force {brute} of order {order}", k.m()));
        }
    }
    outcome(&failures, "irrep image orders, image counts for 3 <= m <= 60 and 30 random composite images agree".into())
}

fn zero_block(r: &ExactRealization, form: &BilinearForm<CycloScalar>, k: &MultiplicityVector, index: usize) -> BilinearForm<CycloScalar> {
    let mut blocks = r.decompose(form, k).unwrap();
    for b in blocks.iter_mut().filter(|b| b.irrep_index == index) {
        b.block = Matrix::zeros(b.block.rows(), b.block.cols(), &r.field().zero());
    }
    r.recompose(&blocks, k).unwrap()
}

fn criterion_8(cases: &[(DihedralGroup, MultiplicityVector)]) -> Outcome {
    let mut failures = Vec::new();
    for (g, k) in cases {
        let r = Realization::exact(*g);
        let w = r.nondegenerate_witness(k).unwrap();
        if !r.is_invariant_under_all(&w, k).unwrap() || !is_nondegenerate(&w) {
            failures.push(format!("m={} k={k}: witness fails", g.m()));
            continue;
        }
        for slot in k.layout() {
            let z = zero_block(&r, &w, k, slot.irrep_index);
            if is_nondegenerate(&z) {
                failures.push(format!("m={} k={k}: zeroing rho_{} leaves a nondegenerate form", g.m(), slot.irrep_index));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED ^ 8);
    let (mut degenerate, mut nondegenerate) = (0, 0);
    for trial in 0..50 {
        let k = random_kvec(&mut rng);
        let r = Realization::exact(k.group());
        let basis = r.invariant_space_basis(&k).unwrap().basis;
        let mut x = Matrix::zeros(k.degree(), k.degree(), &r.field().zero());
        for b in &basis {
            let c = r.field().from_int(rng.random_range(-2..=2));
            x = x.add(&b.matrix().scale(&c)).unwrap();
        }
        let form = BilinearForm::new(x).unwrap();
        let report = r.blockwise_degeneracy_report(&form, &k).unwrap();
        let flagged = report.iter().any(|&(_, singular)| singular);
        let det_zero = form.matrix().det().unwrap().is_zero();
        if flagged != det_zero {
            failures.push(format!("trial {trial} m={} k={k}: report {report:?}, det zero {det_zero}", k.m()));
        }
        if det_zero { degenerate += 1 } else { nondegenerate += 1 }
    }
    outcome(
        &failures,
        format!("witness valid on {} vectors; 50 random forms ({nondegenerate} nondegenerate, {degenerate} degenerate) agree", cases.len()),
    )
}

fn criterion_9(cases: &[(DihedralGroup, MultiplicityVector)]) -> Outcome {
    let mut failures = Vec::new();
    for (g, k) in cases {
        let exact: ExactRealization = Realization::exact(*g);
        let float: FloatRealization = Realization::float(*g);
        let (e, f) = (exact.oracle_dimension(k).unwrap(), float.oracle_dimension(k).unwrap());
        if e != f {
            failures.push(format!("m={} k={k}: exact {e}, float {f} (threshold {FLOAT_RANK_TOLERANCE:e})", g.m()));
        }
    }
    outcome(&failures, format!("{} float nullities match exact (threshold {FLOAT_RANK_TOLERANCE:e})", cases.len()))
}

fn criterion_10(cases: &[(DihedralGroup, MultiplicityVector)]) -> Outcome {
    let mut failures = Vec::new();
    for (g, k) in cases {
        let r = Realization::exact(*g);
        let gens = r.brute_invariant_space(k, ElementSet::GeneratorsOnly).unwrap();
        let all = r.brute_invariant_space(k, ElementSet::AllElements).unwrap();
        let each = gens.iter().all(|x| r.is_invariant_under_all(x, k).unwrap());
        if !each || !subspace_equal(&gens, &all).unwrap() {
            failures.push(format!("m={} k={k}: generator-invariant form not invariant under every element", g.m()));
        }
    }
    outcome(&failures, format!("{} multiplicity vectors, m <= 8", cases.len()))
}

fn main() -> ExitCode {
    assert_eq!(FLOAT_RANK_TOLERANCE, dihedral_forms::linalg::FLOAT_PIVOT_TOLERANCE);
    let cases = sweep();
    let criteria: Vec<Criterion> = vec![
        ("counting", Box::new(criterion_1)),
        ("dimension", Box::new(|| criterion_2(&cases))),
        ("symmetric/skew split", Box::new(|| criterion_3(&cases))),
        ("block structure", Box::new(|| criterion_4(&cases))),
        ("orthonormality", Box::new(criterion_5)),
        ("faithfulness counts", Box::new(criterion_6)),
        ("image classification", Box::new(criterion_7)),
        ("non-degeneracy", Box::new(|| criterion_8(&cases))),
        ("mode agreement", Box::new(|| criterion_9(&cases))),
        ("generator sufficiency", Box::new(|| criterion_10(&cases))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("criterion {:>2} {:<22} {}: {}", i + 1, name, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
