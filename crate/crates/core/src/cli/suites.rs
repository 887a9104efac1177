//! Randomized and fixed-instance verification suites.

use std::time::Instant;

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::random::{
    complex_classes, instance_rng, instance_seed, random_complex, random_near_cone, random_permutation,
    random_shifted, random_spanning_complex,
};
use super::report::{InstanceReport, SuiteReport, SCHEMA};
use crate::complex::{interval, Face, KSubsets, SimplicialComplex};
use crate::error::Result;
use crate::homology::{betti_direct_in, betti_from_shifted, sarkaria_maps};
use crate::linalg::{realize, FieldElement, FieldMatrix, MatrixSpec, PrimeField};
use crate::operators::{
    certificate_decomposition_check, clique_sum_shift, explicit_basis_decomposition_check, cone, disjoint_union, disjoint_union_shift,
    join, join_top_count_check_with, lex_compare, near_cone_analyze, near_cone_decomposition_check,
    shifted_union_recursive, suspension, union, union_interval_counts_with, LexOrder,
};
use crate::par::ExecMode;
use crate::shift::{
    exterior_shift_with, image_dim_complete, image_dim_direct, kernel_intersection_dim,
    kernel_intersection_dim_restricted, shift_with_matrix, CompoundStrategy, ShiftOptions, Shifter,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Suite {
    #[value(name = "union-eq1")]
    UnionEq1,
    CliqueSum,
    DisjointUnion,
    Sqcup,
    Cone,
    NearCone,
    Idempotence,
    Betti,
    KernelDims,
    Sarkaria,
    JoinTop,
    Counterexample,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::UnionEq1,
        Suite::CliqueSum,
        Suite::DisjointUnion,
        Suite::Sqcup,
        Suite::Cone,
        Suite::NearCone,
        Suite::Idempotence,
        Suite::Betti,
        Suite::KernelDims,
        Suite::Sarkaria,
        Suite::JoinTop,
        Suite::Counterexample,
    ];

    pub fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().to_string()
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::CliqueSum | Suite::DisjointUnion | Suite::Sqcup => 10,
            Suite::KernelDims | Suite::Sarkaria | Suite::JoinTop => 8,
            Suite::Counterexample => 6,
            _ => 9,
        }
    }

    pub fn default_trials(self) -> usize {
        match self {
            Suite::Counterexample => 1,
            _ => 20,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub trials: usize,
    pub max_n: usize,
    pub seed: u64,
    pub field: PrimeField,
    pub exec: ExecMode,
}

/// What one instance produced.
struct Check {
    n: usize,
    description: String,
    passed: bool,
    detail: String,
}

impl Check {
    fn new(n: usize, description: impl Into<String>) -> Self {
        Check { n, description: description.into(), passed: true, detail: String::new() }
    }

    /// Records a sub-check; the first failure's message is kept.
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.passed {
            self.passed = false;
            self.detail = what();
        }
    }

    fn done(mut self, summary: impl Into<String>) -> Self {
        if self.passed {
            self.detail = summary.into();
        }
        self
    }
}

struct Ctx {
    max_n: usize,
    field: PrimeField,
    shifter: Shifter,
    alt: Shifter,
    index: usize,
}

type InstanceFn = fn(&mut ChaCha8Rng, &Ctx) -> Result<Check>;

fn instance_fn(suite: Suite) -> InstanceFn {
    match suite {
        Suite::UnionEq1 => union_eq1,
        Suite::CliqueSum => clique_sum,
        Suite::DisjointUnion => disjoint_union_suite,
        Suite::Sqcup => sqcup,
        Suite::Cone => cone_suite,
        Suite::NearCone => near_cone,
        Suite::Idempotence => idempotence,
        Suite::Betti => betti,
        Suite::KernelDims => kernel_dims,
        Suite::Sarkaria => sarkaria,
        Suite::JoinTop => join_top,
        Suite::Counterexample => counterexample,
    }
}

/// Runs `cfg.trials` seeded instances of `suite` (one for `counterexample`).
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let trials = if suite == Suite::Counterexample { 1 } else { cfg.trials };
    let inner = if cfg.exec.is_parallel() { ExecMode::Sequential } else { cfg.exec };
    let f = instance_fn(suite);
    let instances = cfg.exec.map_range(trials, |index| {
        let seed = instance_seed(cfg.seed, index);
        let options = ShiftOptions { field: cfg.field, exec: inner, ..ShiftOptions::default() };
        let ctx = Ctx {
            max_n: cfg.max_n,
            field: cfg.field,
            shifter: Shifter { seed: seed ^ 0x5eed, options },
            alt: Shifter { seed: seed.rotate_left(17) ^ 0xa11e, options },
            index,
        };
        let mut rng = instance_rng(cfg.seed, index);
        let check = f(&mut rng, &ctx).unwrap_or_else(|e| Check {
            n: 0,
            description: "error".into(),
            passed: false,
            detail: e.to_string(),
        });
        InstanceReport {
            index,
            seed,
            n: check.n,
            description: check.description,
            passed: check.passed,
            detail: check.detail,
        }
    });
    let failures = instances.iter().filter(|i| !i.passed).count();
    SuiteReport {
        schema: SCHEMA,
        command: "verify".into(),
        suite: suite.name(),
        seed: cfg.seed,
        prime: cfg.field.modulus(),
        trials,
        max_n: cfg.max_n,
        instances,
        failures,
        passed: failures == 0,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn show(k: &SimplicialComplex) -> String {
    let facets: Vec<String> = k.facets().iter().map(|f| f.to_string()).collect();
    format!("[{}]", facets.join(" "))
}

/// Splits a total budget `max_n` into two operand sizes `a + b ≤ max_n`.
fn split_sizes(rng: &mut ChaCha8Rng, max_n: usize, cap: usize) -> (usize, usize) {
    let max_n = max_n.max(2);
    let a = rng.gen_range(1..=cap.min(max_n - 1));
    let b = rng.gen_range(1..=cap.min(max_n - a));
    (a, b)
}

/// All `A ⊆ [n]` with `|A| ≤ m`.
fn small_prefixes(n: usize, m: usize) -> Vec<Face> {
    (0..=m.min(n)).flat_map(|size| KSubsets::new(n, size)).collect()
}

fn union_eq1(rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let n = rng.gen_range(3..=ctx.max_n.max(3));
    let k = random_complex(rng, n, 3);
    let l0 = random_complex(rng, n, 3);
    let shared_facet = *k.facets().choose(rng).unwrap();
    let keep: Vec<u32> = shared_facet.vertices().filter(|_| rng.gen_bool(0.7)).collect();
    let shared = if keep.is_empty() { Face::singleton(shared_facet.min().unwrap()) } else { Face::new(keep)? };
    let l = SimplicialComplex::from_facets(n, l0.facets().into_iter().chain([shared]))?;
    let prefixes = small_prefixes(n, 3);
    let counts = union_interval_counts_with(&ctx.shifter, &k, &l, &prefixes)?;
    let mut check = Check::new(n, format!("K={} L={}", show(&k), show(&l)));
    for (a, (lhs, rhs)) in prefixes.iter().zip(&counts) {
        check.expect(lhs == rhs, || format!("A={a}: lhs {lhs} != rhs {rhs}"));
    }
    Ok(check.done(format!("{} prefixes agree", prefixes.len())))
}

/// Glues `L` onto `K` along faces `σ_K ∈ K`, `σ_L ∈ L` of equal size; `L`'s
/// other vertices are placed above `K.n()`.
fn glue(k: &SimplicialComplex, l: &SimplicialComplex, sk: Face, sl: Face) -> Result<SimplicialComplex> {
    let n = k.n() + l.n() - sk.len();
    let mut map = vec![0u32; l.n()];
    for (from, to) in sl.vertices().zip(sk.vertices()) {
        map[from as usize - 1] = to;
    }
    let mut next = k.n() as u32;
    for v in 1..=l.n() as u32 {
        if !sl.contains(v) {
            next += 1;
            map[v as usize - 1] = next;
        }
    }
    Ok(union(&k.with_ambient(n)?, &l.relabel(&map, n)?))
}

fn clique_sum(rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let (a, b) = split_sizes(rng, ctx.max_n, 6);
    let k = random_spanning_complex(rng, a, 3);
    let l = random_spanning_complex(rng, b, 3);
    let d = rng.gen_range(-1..=k.dim().min(l.dim()));
    let size = (d + 1) as usize;
    let pick = |rng: &mut ChaCha8Rng, c: &SimplicialComplex| *c.faces_of_size(size).choose(rng).unwrap();
    let (sk, sl) = (pick(rng, &k), pick(rng, &l));
    let glued = glue(&k, &l, sk, sl)?;
    let n = glued.n();
    let (dk, dl) = (ctx.shifter.shift(&k)?, ctx.shifter.shift(&l)?);
    let expected = ctx.shifter.shift(&glued)?;
    let got = clique_sum_shift(&dk, &dl, d, n)?;
    let mut check = Check::new(n, format!("K={} L={} d={d}", show(&k), show(&l)));
    check.expect(got == expected, || format!("formula {} != engine {}", show(&got), show(&expected)));
    let (sk2, sl2) = (pick(rng, &k), pick(rng, &l));
    let other = ctx.shifter.shift(&glue(&k, &l, sk2, sl2)?)?;
    check.expect(other == expected, || format!("gluing along {sk2}/{sl2} gives {}", show(&other)));
    Ok(check.done(format!("Δ={}", show(&expected))))
}

fn random_pair(rng: &mut ChaCha8Rng, ctx: &Ctx) -> (SimplicialComplex, SimplicialComplex) {
    let (a, b) = split_sizes(rng, ctx.max_n, 6);
    if ctx.index % 2 == 1 {
        (random_shifted(rng, a, 3), random_shifted(rng, b, 3))
    } else {
        (random_complex(rng, a, 3), random_complex(rng, b, 3))
    }
}

fn disjoint_union_suite(rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let (k, l) = random_pair(rng, ctx);
    let n = k.n() + l.n();
    let expected = ctx.shifter.shift(&disjoint_union(&k, &l)?)?;
    let (dk, dl) = (ctx.shifter.shift(&k)?, ctx.shifter.shift(&l)?);
    let gap = disjoint_union_shift(&dk, &dl, n)?;
    let via_shifted = ctx.shifter.shift(&disjoint_union(&dk, &dl)?)?;
    let mut check = Check::new(n, format!("K={} L={}", show(&k), show(&l)));
    check.expect(gap == expected, || format!("gap test {} != engine {}", show(&gap), show(&expected)));
    check.expect(via_shifted == expected, || format!("Δ(ΔK ∪̇ ΔL) = {}", show(&via_shifted)));
    Ok(check.done(format!("Δ={}", show(&expected))))
}

fn sqcup(rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let (k, l) = random_pair(rng, ctx);
    let n = k.n() + l.n();
    let (dk, dl) = (ctx.shifter.shift(&k)?, ctx.shifter.shift(&l)?);
    let rec = shifted_union_recursive(&dk, &dl)?;
    let gap = disjoint_union_shift(&dk, &dl, n)?;
    let engine = ctx.shifter.shift(&disjoint_union(&k, &l)?)?;
    let mut check = Check::new(n, format!("K={} L={}", show(&k), show(&l)));
    check.expect(rec == gap, || format!("recursion {} != gap test {}", show(&rec), show(&gap)));
    check.expect(rec == engine, || format!("recursion {} != engine {}", show(&rec), show(&engine)));
    Ok(check.done(format!("K⊔L={}", show(&rec))))
}

fn cone_suite(rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let n = rng.gen_range(1..=ctx.max_n.max(2) - 1);
    let k = random_complex(rng, n, 4);
    let dk = ctx.shifter.shift(&k)?;
    let lhs = ctx.shifter.shift(&cone(&k)?)?;
    let rhs = cone(&dk)?;
    let mut check = Check::new(n + 1, format!("K={}", show(&k)));
    check.expect(lhs == rhs, || format!("Δ(cone K)={} but cone ΔK={}", show(&lhs), show(&rhs)));
    if n + 1 < ctx.max_n {
        let m = rng.gen_range(1..=(ctx.max_n - n).min(3));
        let simplex = SimplicialComplex::simplex(m, m);
        let lhs = ctx.shifter.shift(&join(&simplex, &k)?)?;
        let rhs = join(&simplex, &dk)?;
        check.expect(lhs == rhs, || format!("Δ(K[{m}]*K)={} but K[{m}]*ΔK={}", show(&lhs), show(&rhs)));
    }
    Ok(check.done("cone commutes"))
}

fn near_cone(rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let n = rng.gen_range(2..=ctx.max_n.max(2));
    match ctx.index % 3 {
        0 => {
            let base = random_complex(rng, n - 1, 3);
            let pi = random_permutation(rng, n);
            let k = cone(&base)?.relabel(&pi, n)?;
            let apex = pi[0];
            let mut check = Check::new(n, format!("cone {} apex {apex}", show(&k)));
            check.expect(near_cone_decomposition_check(&ctx.shifter, &k, apex)?, || "decomposition differs".into());
            let lhs = ctx.shifter.shift(&k)?;
            let rhs = cone(&ctx.shifter.shift(&base)?)?;
            check.expect(lhs == rhs, || format!("Δ(cone)={} but cone Δ={}", show(&lhs), show(&rhs)));
            Ok(check.done("decomposition and cone commutation hold"))
        }
        1 => {
            let base = random_near_cone(rng, n, 4);
            let x = sparse_basis(rng, n, ctx.field);
            let pi = random_permutation(rng, n);
            let k = base.relabel(&pi, n)?;
            let apex = pi[0];
            let mut check = Check::new(n, format!("near cone {} apex {apex}", show(&k)));
            check.expect(explicit_basis_decomposition_check(&base, &x, ExecMode::Sequential)?, || {
                format!("decomposition fails for the sparse basis {:?}", x.to_u64_rows())
            });
            check.expect(near_cone_decomposition_check(&ctx.shifter, &k, apex)?, || "decomposition differs".into());
            if let Ok(cert) = near_cone_analyze(&k) {
                check.expect(certificate_decomposition_check(&ctx.shifter, &k, &cert)?, || {
                    format!("iterated decomposition fails for apexes {:?}", cert.apexes)
                });
            }
            Ok(check.done("decomposition holds"))
        }
        _ => {
            let k = random_shifted(rng, n, 4);
            let mut check = Check::new(n, format!("shifted {}", show(&k)));
            match near_cone_analyze(&k) {
                Ok(cert) => {
                    check.expect(cert.len() == k.num_vertices() && cert.blocked_at.is_none(), || {
                        format!("certificate {:?} is not full", cert.apexes)
                    });
                    check.expect(certificate_decomposition_check(&ctx.shifter, &k, &cert)?, || {
                        "iterated decomposition fails".into()
                    });
                }
                Err(r) => check.expect(false, || format!("refused at level {}", r.level)),
            }
            Ok(check.done("full certificate, decomposition holds"))
        }
    }
}

/// A basis with a dense first vector and the others upper triangular in
/// `e_2, …, e_n`, about half of the entries above the diagonal zero.
fn sparse_basis(rng: &mut ChaCha8Rng, n: usize, field: PrimeField) -> FieldMatrix {
    let mut x = FieldMatrix::zeros(field, n, n);
    for c in 0..n {
        x.set(0, c, field.elem(rng.gen_range(1..field.modulus())));
    }
    for r in 1..n {
        x.set(r, 0, field.elem(rng.gen_range(0..3)));
        x.set(r, r, field.elem(rng.gen_range(1..field.modulus())));
        for c in r + 1..n {
            if rng.gen_bool(0.5) {
                x.set(r, c, field.elem(rng.gen_range(1..10)));
            }
        }
    }
    x
}

fn idempotence(rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let n = rng.gen_range(2..=ctx.max_n.max(2));
    let k = random_complex(rng, n, 4);
    let dk = ctx.shifter.shift(&k)?;
    let mut check = Check::new(n, format!("K={}", show(&k)));
    let twice = ctx.shifter.shift(&dk)?;
    check.expect(twice == dk, || format!("Δ²={} but Δ={}", show(&twice), show(&dk)));
    for _ in 0..5 {
        let pi = random_permutation(rng, n);
        let moved = ctx.shifter.shift(&k.relabel(&pi, n)?)?;
        check.expect(moved == dk, || format!("permutation {pi:?} gives {}", show(&moved)));
    }
    let other = ctx.alt.shift(&k)?;
    check.expect(other == dk, || format!("second seed gives {}", show(&other)));
    Ok(check.done(format!("Δ={}", show(&dk))))
}

fn betti(rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let n = rng.gen_range(1..=ctx.max_n.max(1));
    let k = random_complex(rng, n, 4);
    Ok(preservation_check(ctx.field, &ctx.shifter, &k)?.done(""))
}

fn preservation_check(field: PrimeField, shifter: &Shifter, k: &SimplicialComplex) -> Result<Check> {
    let dk = shifter.shift(k)?;
    let mut check = Check::new(k.n(), format!("K={}", show(k)));
    check.expect(dk.f_vector() == k.f_vector(), || format!("f-vector {:?} != {:?}", dk.f_vector(), k.f_vector()));
    let (a, b) = (betti_from_shifted(&dk)?, betti_direct_in(field, k)?);
    check.expect(a == b, || format!("betti from Δ {:?} != direct {:?}", a.0, b.0));
    check.detail = format!("f={:?} betti={:?}", k.f_vector().0, b.0);
    Ok(check)
}

fn kernel_dims(rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let n = rng.gen_range(3..=ctx.max_n.max(3));
    let kv = rng.gen_range(2..=n);
    let k = random_spanning_complex(rng, kv, 3).with_ambient(n)?;
    let a = realize(&MatrixSpec::Generic { seed: ctx.shifter.seed }, n, ctx.field)?;
    let da = shift_with_matrix(&k, &a, CompoundStrategy::Laplace, ExecMode::Sequential);
    let s_size = rng.gen_range(1..=k.max_face_size().clamp(1, n));
    let ground: Vec<u32> = (1..=n as u32).collect();
    let s = Face::new(ground.choose_multiple(rng, s_size).copied())?;
    let mut check = Check::new(n, format!("K={} S={s}", show(&k)));
    check.expect(da.is_shifted() && da.f_vector() == k.f_vector(), || "Δ_A failed validation".into());

    let q3 = kernel_intersection_dim(&k, &a, s, true, 0)?;
    let q4 = kernel_intersection_dim_restricted(&k, &a, s, true, 0)?;
    let q5 = da.faces_of_size(s_size).iter().filter(|t| s.lex_cmp(**t).is_le()).count();
    check.expect(q3 == q4 && q4 == q5, || format!("kernel dims {q3}, {q4} vs count {q5}"));
    for i in 1..=2.min(n - s_size) {
        let block = interval(s, i, n)?;
        let lhs = block.iter().filter(|&&t| da.contains(t)).count();
        let strict = kernel_intersection_dim(&k, &a, s, true, i)?;
        let loose = kernel_intersection_dim(&k, &a, s, false, i)?;
        check.expect(strict >= loose && lhs == strict - loose, || {
            format!("i={i}: |I ∩ Δ| = {lhs} but kernel difference {strict} - {loose}")
        });
    }

    let h = 1 + ctx.index % 5;
    let big_n = h + rng.gen_range(0..=2);
    let a2 = realize(&MatrixSpec::Generic { seed: ctx.shifter.seed ^ 1 }, big_n, ctx.field)?;
    let mut images = 0;
    for size in 1..=h {
        for t in KSubsets::new(big_n, size) {
            let closed = image_dim_complete(h, big_n, t);
            let direct = image_dim_direct(h, &a2, t)?;
            images += 1;
            check.expect(closed == direct, || format!("h={h} n={big_n} S={t}: closed form {closed} != rank {direct}"));
        }
    }
    Ok(check.done(format!("q={q3}; {images} image dims on h={h}, n={big_n}")))
}

fn sarkaria(rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let n = rng.gen_range(2..=ctx.max_n.max(2));
    let k = random_near_cone(rng, n, 3);
    let alphas: Vec<FieldElement> =
        (0..n).map(|_| ctx.field.elem(rng.gen_range(1..ctx.field.modulus()))).collect();
    let maps = sarkaria_maps(ctx.field, &k, &alphas)?;
    let mut check = Check::new(n, format!("K={}", show(&k)));
    check.expect(maps.chain_map_identities_hold(&k), || "chain map identity fails".into());
    check.expect(maps.invertible(), || "U or D singular".into());
    check.expect(maps.grading_preserved(&k), || "wedge not preserved".into());
    Ok(check.done("U, D are graded chain isomorphisms"))
}

fn join_top(rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let (k, l) = if ctx.index == 0 {
        (SimplicialComplex::points(3), SimplicialComplex::points(3))
    } else {
        let (a, b) = split_sizes(rng, ctx.max_n, 5);
        (random_spanning_complex(rng, a, 3), random_spanning_complex(rng, b, 3))
    };
    let total = k.num_vertices() + l.num_vertices();
    let mut check = Check::new(total, format!("K={} L={}", show(&k), show(&l)));
    for i in 1..=total {
        let (lhs, rhs) = join_top_count_check_with(&ctx.shifter, &k, &l, i)?;
        check.expect(lhs == rhs, || format!("i={i}: {lhs} != {rhs}"));
    }
    Ok(check.done(format!("holds for i = 1..{total}")))
}

fn counterexample(_rng: &mut ChaCha8Rng, ctx: &Ctx) -> Result<Check> {
    let found = suspension_counterexample(&ctx.shifter)?;
    let mut check = Check::new(6, "B = two disjoint edges");
    let show_faces = |fs: &[Face]| fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ");
    let (a, b) = (show_faces(&found.only_left), show_faces(&found.only_right));
    check.expect(found.only_left == [Face::new([1, 2, 6])?], || format!("Δ(ΣB) ∖ Δ(ΣΔB) = {a}"));
    check.expect(found.only_right == [Face::new([1, 3, 4])?], || format!("Δ(ΣΔB) ∖ Δ(ΣB) = {b}"));
    check.expect(found.order == LexOrder::Less, || format!("order {:?}", found.order));
    Ok(check.done(format!("only in Δ(ΣB): {a}; only in Δ(ΣΔB): {b}; strictly less")))
}

/// The two sides of `Δ(Σ K)` versus `Δ(Σ Δ(K))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuspensionComparison {
    pub left: SimplicialComplex,
    pub right: SimplicialComplex,
    pub only_left: Vec<Face>,
    pub only_right: Vec<Face>,
    pub order: LexOrder,
}

pub fn compare_suspensions(shifter: &Shifter, k: &SimplicialComplex) -> Result<SuspensionComparison> {
    let left = shifter.shift(&suspension(k)?)?;
    let right = shifter.shift(&suspension(&shifter.shift(k)?)?)?;
    let only_left = left.faces().filter(|&f| !right.contains(f)).collect();
    let only_right = right.faces().filter(|&f| !left.contains(f)).collect();
    let order = lex_compare(&left, &right);
    Ok(SuspensionComparison { left, right, only_left, only_right, order })
}

/// The suspension of two disjoint edges.
pub fn suspension_counterexample(shifter: &Shifter) -> Result<SuspensionComparison> {
    let b = SimplicialComplex::from_lists(4, &[&[1, 2], &[3, 4]]);
    compare_suspensions(shifter, &b)
}

/// The octahedron graph `{1,4} * {2,5} * {3,6}`.
pub fn octahedron_graph() -> SimplicialComplex {
    let p = |a: u32, b: u32| SimplicialComplex::from_lists(b as usize, &[&[a], &[b]]);
    let edges = [p(1, 4), p(2, 5), p(3, 6)];
    let mut facets = Vec::new();
    for (i, x) in edges.iter().enumerate() {
        for y in &edges[i + 1..] {
            for u in x.faces_of_size(1) {
                for v in y.faces_of_size(1) {
                    facets.push(*u | *v);
                }
            }
        }
    }
    SimplicialComplex::from_facets(6, facets).expect("octahedron fits")
}

/// `Δ(Δ_X(G))` for the octahedron graph `G` and a `(3,3)` block matrix `X`,
/// alongside `Δ(G)`.
pub fn octahedron_shifts(shifter: &Shifter, block_seed: u64) -> Result<(SimplicialComplex, SimplicialComplex)> {
    let g = octahedron_graph();
    let spec = MatrixSpec::BlockGeneric { upper: 3, lower: 3, seed: block_seed };
    let dx = exterior_shift_with(&g, &spec, &shifter.options)?.shifted;
    Ok((shifter.shift(&dx)?, shifter.shift(&g)?))
}

/// Outcome of an exhaustive run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExhaustiveSummary {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// f-vector and Betti preservation on every complex with ambient `[n]`,
/// `n ≤ max_vertices ≤ 5`.
pub fn exhaustive_preservation(shifter: &Shifter, max_vertices: usize) -> Result<ExhaustiveSummary> {
    let mut summary = ExhaustiveSummary::default();
    for n in 0..=max_vertices {
        for k in super::random::all_complexes(n) {
            let check = preservation_check(shifter.options.field, shifter, &k)?;
            summary.checked += 1;
            if !check.passed {
                summary.failures.push(format!("{}: {}", check.description, check.detail));
            }
        }
    }
    Ok(summary)
}

/// The three union formulas against the engine, over all pairs of
/// isomorphism classes with at most `max_vertices` vertices each, and for
/// clique sums every admissible `d` with lex-first gluing faces.
pub fn exhaustive_unions(shifter: &Shifter, max_vertices: usize, exec: ExecMode) -> Result<ExhaustiveSummary> {
    let classes = complex_classes(max_vertices);
    let pairs: Vec<(usize, usize)> =
        (0..classes.len()).flat_map(|i| (0..classes.len()).map(move |j| (i, j))).collect();
    let shifted: Vec<SimplicialComplex> = classes.iter().map(|c| shifter.shift(c)).collect::<Result<_>>()?;
    let results = exec.map(&pairs, |&(i, j)| -> Result<(usize, Vec<String>)> {
        let (k, l) = (&classes[i], &classes[j]);
        let (dk, dl) = (&shifted[i], &shifted[j]);
        let mut failures = Vec::new();
        let mut checked = 0;
        let n = k.n() + l.n();
        let engine = shifter.shift(&disjoint_union(k, l)?)?;
        let gap = disjoint_union_shift(dk, dl, n)?;
        let rec = shifted_union_recursive(dk, dl)?;
        checked += 1;
        if gap != engine || rec != engine {
            failures.push(format!("K={} L={}: disjoint union", show(k), show(l)));
        }
        for d in 0..=k.dim().min(l.dim()) {
            let size = (d + 1) as usize;
            let glued = glue(k, l, k.faces_of_size(size)[0], l.faces_of_size(size)[0])?;
            let expected = shifter.shift(&glued)?;
            let got = clique_sum_shift(dk, dl, d, glued.n())?;
            checked += 1;
            if got != expected {
                failures.push(format!("K={} L={}: clique sum d={d}", show(k), show(l)));
            }
        }
        Ok((checked, failures))
    });
    let mut summary = ExhaustiveSummary::default();
    for r in results {
        let (checked, failures) = r?;
        summary.checked += checked;
        summary.failures.extend(failures);
    }
    Ok(summary)
}
