//! Seeded property suites shared by the command line tool and the tests.
//!
//! Each suite draws its inputs from its own generator, seeded from the run
//! seed and the suite name, so results do not depend on which suites run or
//! in which order.

pub mod oracle;

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::golden;
use crate::harmonic::{
    decompose, decompose_weight, depth_ss, dim_h, h_lambda, harmonic_basis, is_harmonic,
    lambda_star_basis, leading_term_check, unusual_identity_check,
};
use crate::latex;
use crate::operators::{
    commutator, d_op, delta_lambda, euler_op, kelvin, laplacian, script_d_n, OperatorExpr,
};
use crate::partitions::{
    c_set, count_partitions, enumerate_min_part, enumerate_partitions, frobenius, Partition,
};
use crate::qseries::{d_series, eisenstein, partition_gf, q_bracket, QSeries, DEFAULT_ORDER};
use crate::quasimodular::{
    d_hat, expand, frak_d, recognize, required_order, w_hat, QMForm,
};
use crate::random::{self, DEFAULT_SEED};
use crate::ssym::{eval, eval_qk, parse, rat, Monomial, SSPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_weight: u32,
    pub order: usize,
    pub seed: u64,
    /// Random inputs per identity.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_weight: 10,
            order: DEFAULT_ORDER,
            seed: DEFAULT_SEED,
            samples: 20,
        }
    }
}

impl VerifyConfig {
    /// Weight cap for inputs whose q-brackets are computed.
    fn bracket_weight(&self) -> u32 {
        self.max_weight.min(8)
    }

    /// Largest weight handed to `recognize`.
    fn recognition_weight(&self) -> i64 {
        let w = self.max_weight as i64 + 2;
        w - w % 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    /// Number of individual checks performed.
    pub cases: usize,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {:<24} {} checks", self.name, self.cases),
            Some(msg) => write!(f, "FAIL {:<24} after {} checks: {msg}", self.name, self.cases),
        }
    }
}

/// A failed check, or a library error raised while checking.
#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(format!("error: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Counts checks and records the first failure.
struct Ctx<'a> {
    cfg: &'a VerifyConfig,
    rng: ChaCha8Rng,
    cases: usize,
}

impl Ctx<'_> {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> Outcome {
        self.cases += 1;
        if ok {
            Ok(())
        } else {
            Err(Failure(what()))
        }
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, got: &T, want: &T, what: impl FnOnce() -> String) -> Outcome {
        self.check(got == want, || format!("{}: got {got}, expected {want}", what()))
    }
}

type Suite = fn(&mut Ctx) -> Outcome;

const SUITES: &[(&str, Suite)] = &[
    ("partitions", partitions_suite),
    ("ring-laws", ring_laws),
    ("text-round-trip", text_round_trip),
    ("eval-oracle", eval_oracle),
    ("eval-homomorphism", eval_homomorphism),
    ("projection", projection),
    ("commutator-table", commutator_table),
    ("sl2-operators", sl2_operators),
    ("delta-q2-power", delta_q2_power),
    ("laplacian-oracle", laplacian_oracle),
    ("script-d", script_d),
    ("delta-lambda", delta_lambda_suite),
    ("kelvin", kelvin_suite),
    ("decompose", decompose_suite),
    ("q2-multiples", q2_multiples),
    ("basis", basis_suite),
    ("basis-identities", basis_identities),
    ("depth", depth_suite),
    ("euler-product", euler_product),
    ("bracket-linearity", bracket_linearity),
    ("bracket-q1-q2", bracket_q1_q2),
    ("sl2-quasimodular", sl2_quasimodular),
    ("serre-depth", serre_depth),
    ("sl2-equivariance", sl2_equivariance),
    ("depth-bound", depth_bound),
    ("modularity", modularity),
    ("recognize-expand", recognize_expand),
    ("goldens", goldens),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

fn suite_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a, stable across platforms and releases
    name.bytes().fold(0xcbf2_9ce4_8422_2325 ^ seed, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn run_one(name: &'static str, suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let mut ctx = Ctx {
        cfg,
        rng: random::rng(suite_seed(cfg.seed, name)),
        cases: 0,
    };
    let failure = suite(&mut ctx).err().map(|f| f.0);
    SuiteReport {
        name,
        cases: ctx.cases,
        failure,
    }
}

/// Rejects orders too small to recognize every weight the suites produce.
pub fn check_config(cfg: &VerifyConfig) -> Result<()> {
    let k = cfg.recognition_weight();
    let needed = required_order(k);
    if cfg.order < needed {
        return Err(Error::InsufficientOrder {
            weight: k,
            order: cfg.order,
            needed,
        });
    }
    Ok(())
}

/// Runs the named suite, if it exists.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Option<SuiteReport>> {
    check_config(cfg)?;
    Ok(SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(n, s)| run_one(n, s, cfg)))
}

/// Runs every suite in parallel; reports come back in a fixed order.
pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    check_config(cfg)?;
    Ok(SUITES
        .par_iter()
        .map(|&(n, s)| run_one(n, s, cfg))
        .collect())
}

// ---------------------------------------------------------------------------
// helpers

fn weight_upto(ctx: &mut Ctx, max: u32) -> u32 {
    ctx.rng.gen_range(0..=max)
}

fn even_weight_upto(ctx: &mut Ctx, max: u32) -> u32 {
    2 * ctx.rng.gen_range(0..=max / 2)
}

/// Random element of `R`, occasionally of `R̃`.
fn operand(ctx: &mut Ctx) -> SSPoly {
    let w = ctx.cfg.max_weight;
    if ctx.rng.gen_bool(0.25) {
        let q1 = SSPoly::generator(1).pow(ctx.rng.gen_range(0..=2));
        &random::lambda_tilde_homogeneous(&mut ctx.rng, w) * &q1
    } else {
        random::r_element(&mut ctx.rng, w)
    }
}

fn r_polynomial(ctx: &mut Ctx) -> SSPoly {
    random::r_element(&mut ctx.rng, ctx.cfg.max_weight)
}

/// Weights `≤ max` that carry nonzero harmonic polynomials.
fn harmonic_weights(max: u32) -> Vec<u32> {
    (0..=max).filter(|&w| dim_h(w as i64) > 0).collect()
}

fn nonzero_harmonic(ctx: &mut Ctx, max: u32) -> (u32, SSPoly) {
    let weights = harmonic_weights(max);
    loop {
        let w = *weights.choose(&mut ctx.rng).expect("weight 0 is always present");
        let h = random::harmonic_homogeneous(&mut ctx.rng, w);
        if !h.is_zero() {
            return (w, h);
        }
    }
}

fn op_mul(f: SSPoly) -> OperatorExpr {
    OperatorExpr::Mul(f)
}

fn scaled(c: i64, op: OperatorExpr) -> OperatorExpr {
    OperatorExpr::Sum(vec![(rat(c, 1), op)])
}

fn zero_op() -> OperatorExpr {
    OperatorExpr::Sum(Vec::new())
}

fn apply_all(op: &OperatorExpr, f: &SSPoly) -> Result<SSPoly> {
    op.apply(f)
}

// ---------------------------------------------------------------------------
// partitions and the polynomial ring

fn partitions_suite(ctx: &mut Ctx) -> Outcome {
    for n in 0..=25u32 {
        let all = enumerate_partitions(n);
        ctx.eq(&(all.len() as u128), &count_partitions(n as i64), || format!("p({n})"))?;
        let mut ones = enumerate_min_part(n, 1);
        ones.sort();
        let mut sorted = all.clone();
        sorted.sort();
        ctx.check(ones == sorted, || format!("min part 1 differs from all partitions of {n}"))?;
        let n = n as i64;
        let expected = count_partitions(n) + count_partitions(n - 3) - count_partitions(n - 1) - count_partitions(n - 2);
        ctx.eq(&(enumerate_min_part(n as u32, 3).len() as u128), &expected, || format!("parts >= 3 of {n}"))?;
    }
    for n in 0..=15 {
        for l in enumerate_partitions(n) {
            let fr = frobenius(&l);
            let total: u64 = fr.arms.iter().zip(&fr.legs).map(|(a, b)| (a + b + 1) as u64).sum();
            ctx.eq(&total, &l.size(), || format!("Frobenius size of {l}"))?;
            let c = c_set(&l);
            let neg = c.iter().filter(|&&x| x < 0).count();
            ctx.check(c.len() == 2 * neg, || format!("C set of {l} is unbalanced: {c:?}"))?;
        }
    }
    Ok(())
}

fn ring_laws(ctx: &mut Ctx) -> Outcome {
    for _ in 0..ctx.cfg.samples {
        let (a, b, c) = (operand(ctx), operand(ctx), operand(ctx));
        let show = || format!("a = {a}, b = {b}, c = {c}");
        let ok = &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &b == &b * &a
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (&a + &(-&a)).is_zero()
            && &a * &SSPoly::one() == a;
        ctx.check(ok, show)?;
    }
    Ok(())
}

fn text_round_trip(ctx: &mut Ctx) -> Outcome {
    for _ in 0..ctx.cfg.samples {
        let f = operand(ctx);
        let back = parse(&f.to_string())?;
        ctx.eq(&back, &f, || "parse(format(f))".into())?;
    }
    Ok(())
}

fn eval_oracle(ctx: &mut Ctx) -> Outcome {
    for n in 0..=12 {
        for l in enumerate_partitions(n) {
            for k in 0..=10 {
                ctx.eq(&eval_qk(k, &l), &oracle::eval_qk(k, &l), || format!("Q{k}({l})"))?;
            }
        }
    }
    Ok(())
}

fn random_partition(ctx: &mut Ctx) -> Partition {
    let n = ctx.rng.gen_range(0..=12);
    enumerate_partitions(n).choose(&mut ctx.rng).expect("nonempty").clone()
}

fn eval_homomorphism(ctx: &mut Ctx) -> Outcome {
    for _ in 0..ctx.cfg.samples {
        let (f, g) = (r_polynomial(ctx), r_polynomial(ctx));
        let l = random_partition(ctx);
        let lhs = eval(&(&f * &g), &l)?;
        let rhs = eval(&f, &l)? * eval(&g, &l)?;
        ctx.eq(&lhs, &rhs, || format!("eval at {l} of ({f})*({g})"))?;
        let sum = eval(&(&f + &g), &l)?;
        ctx.eq(&sum, &(eval(&f, &l)? + eval(&g, &l)?), || format!("eval at {l} of ({f})+({g})"))?;
    }
    Ok(())
}

fn projection(ctx: &mut Ctx) -> Outcome {
    for _ in 0..ctx.cfg.samples {
        let (f, g) = (operand(ctx), operand(ctx));
        ctx.eq(&f.pr().pr(), &f.pr(), || format!("pr pr ({f})"))?;
        ctx.eq(&(&f * &g).pr(), &(&f.pr() * &g.pr()), || format!("pr(({f})*({g}))"))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// operators

fn commutator_table(ctx: &mut Ctx) -> Outcome {
    use OperatorExpr::*;
    let q1 = || op_mul(SSPoly::generator(1));
    let q2 = || op_mul(SSPoly::generator(2));
    let table: Vec<(&str, OperatorExpr, OperatorExpr, OperatorExpr)> = vec![
        ("[Δ,∂]", Laplacian, D, zero_op()),
        ("[Δ,E]", Laplacian, Euler, scaled(2, Laplacian)),
        ("[Δ,Q1]", Laplacian, q1(), zero_op()),
        ("[Δ,Q2]", Laplacian, q2(), OperatorExpr::e_hat()),
        ("[∂,E]", D, Euler, D),
        ("[∂,Q1]", D, q1(), Identity),
        ("[∂,Q2]", D, q2(), q1()),
        ("[E,Q1]", Euler, q1(), q1()),
        ("[E,Q2]", Euler, q2(), scaled(2, q2())),
        ("[Q1,Q2]", q1(), q2(), zero_op()),
    ];
    for _ in 0..ctx.cfg.samples {
        let f = operand(ctx);
        for (name, a, b, want) in &table {
            let got = commutator(a, b, &f)?;
            let want = apply_all(want, &f)?;
            ctx.eq(&got, &want, || format!("{name} on {f}"))?;
            let anti = commutator(b, a, &f)?;
            ctx.eq(&anti, &-&want, || format!("antisymmetry of {name} on {f}"))?;
        }
    }
    Ok(())
}

fn sl2_operators(ctx: &mut Ctx) -> Outcome {
    let x = OperatorExpr::q2_hat();
    let y = OperatorExpr::Laplacian;
    let h = OperatorExpr::e_hat();
    for _ in 0..ctx.cfg.samples {
        let f = operand(ctx);
        ctx.eq(&commutator(&h, &x, &f)?, &x.apply(&f)?.scale(&rat(2, 1)), || format!("[Ê,Q̂2] on {f}"))?;
        ctx.eq(&commutator(&h, &y, &f)?, &y.apply(&f)?.scale(&rat(-2, 1)), || format!("[Ê,Δ] on {f}"))?;
        ctx.eq(&commutator(&y, &x, &f)?, &h.apply(&f)?, || format!("[Δ,Q̂2] on {f}"))?;
    }
    Ok(())
}

/// `[Δ, Q2^n] f = (-n(n-1)/2 Q1² Q2^{n-2} - n Q1 Q2^{n-1} ∂ + n Q2^{n-1}(E + n - 3/2)) f`.
fn delta_q2_power(ctx: &mut Ctx) -> Outcome {
    let q1 = SSPoly::generator(1);
    for _ in 0..ctx.cfg.samples {
        let f = operand(ctx);
        for n in 1..=6i64 {
            let q2n = SSPoly::monomial(Monomial::q2_half_power(2 * n));
            let q2 = |e: i64| SSPoly::monomial(Monomial::q2_half_power(2 * e));
            let got = commutator(&OperatorExpr::Laplacian, &op_mul(q2n), &f)?;
            let mut want = &(&(&q1 * &q1) * &q2(n - 2)) * &f.scale(&rat(-n * (n - 1), 2));
            want -= &(&(&q1 * &q2(n - 1)) * &d_op(&f)).scale(&rat(n, 1));
            let shifted = &euler_op(&f) + &f.scale(&rat(2 * n - 3, 2));
            want += &(&q2(n - 1) * &shifted).scale(&rat(n, 1));
            ctx.eq(&got, &want, || format!("[Δ,Q2^{n}] on {f}"))?;
        }
    }
    Ok(())
}

fn laplacian_oracle(ctx: &mut Ctx) -> Outcome {
    for n in 0..=6i64 {
        let q2n = SSPoly::monomial(Monomial::q2_half_power(2 * n));
        let direct = oracle::laplacian(&q2n);
        ctx.eq(&laplacian(&q2n), &direct, || format!("Δ(Q2^{n}) against the oracle"))?;
        let closed = oracle::laplacian_q2_power(n);
        ctx.eq(&direct, &closed, || format!("Δ(Q2^{n}) closed form"))?;
    }
    for _ in 0..ctx.cfg.samples {
        let f = operand(ctx);
        ctx.eq(&laplacian(&f), &oracle::laplacian(&f), || format!("Δ({f}) against the oracle"))?;
    }
    Ok(())
}

fn script_d(ctx: &mut Ctx) -> Outcome {
    for _ in 0..ctx.cfg.samples {
        let f = operand(ctx);
        let small = random::r_element(&mut ctx.rng, ctx.cfg.max_weight.min(8));
        for n in 0..=3 {
            ctx.eq(&script_d_n(n, &small), &oracle::script_d_n(n, &small), || format!("𝒟{n}({small}) against the oracle"))?;
        }
        for n in 1..=5u32 {
            let dn = script_d_n(n, &f);
            for m in n + 1..=5 {
                let a = script_d_n(m, &dn);
                let b = script_d_n(n, &script_d_n(m, &f));
                ctx.eq(&a, &b, || format!("[𝒟{n},𝒟{m}] on {f}"))?;
            }
        }
        let w = weight_upto(ctx, ctx.cfg.max_weight);
        let g = random::r_homogeneous(&mut ctx.rng, w, 4);
        for n in 1..=5u32 {
            let dg = script_d_n(n, &g);
            let ok = dg.is_zero() || dg.homogeneous_weight() == Some(w as i64 - n as i64);
            ctx.check(ok, || format!("𝒟{n}({g}) = {dg} has the wrong weight"))?;
        }
    }
    Ok(())
}

fn delta_lambda_suite(ctx: &mut Ctx) -> Outcome {
    let q1 = op_mul(SSPoly::generator(1));
    let small: Vec<Partition> = (0..=6).flat_map(enumerate_partitions).collect();
    for l in &small {
        let f = r_polynomial(ctx);
        let op = OperatorExpr::DeltaLambda(l.clone());
        ctx.check(commutator(&op, &q1, &f)?.is_zero(), || format!("[Δ_{l},Q1] on {f}"))?;
        let lhs = delta_lambda(l, &f.pr()).pr();
        ctx.eq(&lhs, &delta_lambda(l, &f).pr(), || format!("pr Δ_{l} pr on {f}"))?;
    }
    for _ in 0..ctx.cfg.samples {
        let a = small.choose(&mut ctx.rng).expect("nonempty").clone();
        let b = small.choose(&mut ctx.rng).expect("nonempty").clone();
        let f = r_polynomial(ctx);
        let c = commutator(&OperatorExpr::DeltaLambda(a.clone()), &OperatorExpr::DeltaLambda(b.clone()), &f)?;
        ctx.check(c.is_zero(), || format!("[Δ_{a},Δ_{b}] on {f}"))?;
    }
    Ok(())
}

fn kelvin_suite(ctx: &mut Ctx) -> Outcome {
    for _ in 0..ctx.cfg.samples {
        let (_, h) = nonzero_harmonic(ctx, ctx.cfg.max_weight);
        let k = kelvin(&h)?;
        ctx.check(laplacian(&k).pr().is_zero(), || format!("K({h}) is not harmonic"))?;
        ctx.eq(&kelvin(&k)?, &h, || format!("K(K({h}))"))?;
        let g = random::lambda_tilde_homogeneous(&mut ctx.rng, ctx.cfg.max_weight);
        ctx.eq(&kelvin(&kelvin(&g)?)?, &g, || format!("K(K({g}))"))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// harmonic decomposition and basis

fn check_decomposition(ctx: &mut Ctx, f: &SSPoly, n: i64) -> std::result::Result<Vec<SSPoly>, Failure> {
    let d = decompose_weight(f, n)?;
    ctx.eq(&d.reconstruct(), f, || format!("reconstruction of {f}"))?;
    for (r, h) in d.components.iter().enumerate() {
        let ok = is_harmonic(h)? && (h.is_zero() || h.homogeneous_weight() == Some(n - 2 * r as i64));
        ctx.check(ok, || format!("component h_{r} = {h} of {f}"))?;
    }
    Ok(d.components)
}

fn decompose_suite(ctx: &mut Ctx) -> Outcome {
    for n in 0..=ctx.cfg.max_weight as i64 {
        for m in lambda_star_basis(n) {
            check_decomposition(ctx, &SSPoly::monomial(m), n)?;
        }
    }
    for _ in 0..ctx.cfg.samples {
        let (w, h) = nonzero_harmonic(ctx, ctx.cfg.max_weight);
        if w < 2 {
            continue;
        }
        let g = random::lambda_star_homogeneous(&mut ctx.rng, w - 2, 4);
        let f = &h + &(&SSPoly::generator(2) * &g);
        let parts = check_decomposition(ctx, &f, w as i64)?;
        ctx.eq(&parts[0], &h, || format!("harmonic part of {f}"))?;
        let rest = decompose_weight(&g, w as i64 - 2)?.components;
        ctx.check(parts[1..] == rest[..], || format!("higher parts of {f}"))?;
    }
    let mixed = &SSPoly::generator(4) + &SSPoly::generator(3);
    ctx.eq(&decompose(&mixed)?.reconstruct(), &mixed, || "non-homogeneous input".into())?;
    Ok(())
}

fn q2_multiples(ctx: &mut Ctx) -> Outcome {
    for _ in 0..ctx.cfg.samples {
        let g = random::lambda_star_nonzero(&mut ctx.rng, ctx.cfg.max_weight.max(2));
        let f = &SSPoly::generator(2) * &g;
        ctx.check(!is_harmonic(&f)?, || format!("Q2 * ({g}) is harmonic"))?;
    }
    Ok(())
}

fn basis_suite(ctx: &mut Ctx) -> Outcome {
    for n in 0..=ctx.cfg.max_weight {
        let b = harmonic_basis(n)?;
        ctx.eq(&(b.len() as u128), &dim_h(n as i64), || format!("basis size in weight {n}"))?;
        ctx.eq(&b.rank()?, &b.len(), || format!("basis rank in weight {n}"))?;
    }
    Ok(())
}

fn basis_identities(ctx: &mut Ctx) -> Outcome {
    for n in 0..=ctx.cfg.max_weight {
        for (l, h) in harmonic_basis(n)?.elements {
            ctx.check(is_harmonic(&h)?, || format!("h_{l} is not harmonic"))?;
            ctx.check(leading_term_check(&l)?, || format!("leading term of h_{l}"))?;
            ctx.check(unusual_identity_check(&h, n)?, || format!("dual identity for h_{l}"))?;
        }
    }
    Ok(())
}

fn depth_suite(ctx: &mut Ctx) -> Outcome {
    for _ in 0..ctx.cfg.samples {
        let (_, h) = nonzero_harmonic(ctx, ctx.cfg.max_weight);
        for r in 0..=4usize {
            let f = &SSPoly::generator(2).pow(r as u32) * &h;
            ctx.eq(&depth_ss(&f)?, &r, || format!("depth of Q2^{r} ({h})"))?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// q-brackets and quasimodular forms

fn euler_product(ctx: &mut Ctx) -> Outcome {
    let order = ctx.cfg.order;
    let mut prod = QSeries::one(order);
    for n in 1..=order {
        prod = &prod * &(&QSeries::one(order) - &QSeries::monomial(n, order));
    }
    ctx.eq(&(&partition_gf(order) * &prod), &QSeries::one(order), || "Euler product".into())
}

fn bracket_input(ctx: &mut Ctx) -> SSPoly {
    let w = weight_upto(ctx, ctx.cfg.bracket_weight());
    random::r_homogeneous(&mut ctx.rng, w, 3)
}

fn bracket_linearity(ctx: &mut Ctx) -> Outcome {
    let order = ctx.cfg.order;
    for _ in 0..ctx.cfg.samples {
        let (f, g) = (bracket_input(ctx), bracket_input(ctx));
        let (a, b) = (random::small_rational(&mut ctx.rng), random::small_rational(&mut ctx.rng));
        let lhs = q_bracket(&(&f.scale(&a) + &g.scale(&b)), order)?;
        let rhs = &q_bracket(&f, order)?.scale(&a) + &q_bracket(&g, order)?.scale(&b);
        ctx.eq(&lhs, &rhs, || format!("linearity on {f}, {g}"))?;
    }
    Ok(())
}

fn bracket_q1_q2(ctx: &mut Ctx) -> Outcome {
    let order = ctx.cfg.order;
    let p = eisenstein(2, order)?;
    for _ in 0..ctx.cfg.samples {
        let f = bracket_input(ctx);
        let q1f = &SSPoly::generator(1) * &f;
        ctx.check(q_bracket(&q1f, order)?.is_zero(), || format!("<Q1 ({f})> is not zero"))?;
        let bf = q_bracket(&f, order)?;
        let want = &d_series(&bf) - &(&p * &bf).scale(&rat(1, 24));
        let got = q_bracket(&(&SSPoly::generator(2) * &f), order)?;
        ctx.eq(&got, &want, || format!("<Q2 ({f})>"))?;
    }
    Ok(())
}

fn random_form(ctx: &mut Ctx, max_weight: i64) -> (i64, QMForm) {
    let k = 2 * ctx.rng.gen_range(0..=max_weight / 2);
    (k, random::qmform_homogeneous(&mut ctx.rng, k))
}

fn sl2_quasimodular(ctx: &mut Ctx) -> Outcome {
    for _ in 0..ctx.cfg.samples {
        let (_, m) = random_form(ctx, ctx.cfg.max_weight as i64);
        let bracket = |a: &dyn Fn(&QMForm) -> Result<QMForm>, b: &dyn Fn(&QMForm) -> Result<QMForm>| -> Result<QMForm> {
            Ok(&a(&b(&m)?)? - &b(&a(&m)?)?)
        };
        let dh = |x: &QMForm| Ok(d_hat(x));
        let fd = |x: &QMForm| Ok(frak_d(x));
        let wh = |x: &QMForm| w_hat(x);
        ctx.eq(&bracket(&wh, &dh)?, &d_hat(&m).scale(&rat(2, 1)), || format!("[Ŵ,D̂] on {m}"))?;
        ctx.eq(&bracket(&wh, &fd)?, &frak_d(&m).scale(&rat(-2, 1)), || format!("[Ŵ,𝔡] on {m}"))?;
        ctx.eq(&bracket(&fd, &dh)?, &w_hat(&m)?, || format!("[𝔡,D̂] on {m}"))?;
    }
    Ok(())
}

fn serre_depth(ctx: &mut Ctx) -> Outcome {
    for _ in 0..ctx.cfg.samples {
        let (_, m) = random_form(ctx, ctx.cfg.max_weight as i64);
        if m.is_zero() {
            continue;
        }
        ctx.eq(&d_hat(&m).depth(), &(m.depth() + 1), || format!("depth of D̂({m})"))?;
    }
    Ok(())
}

fn sl2_equivariance(ctx: &mut Ctx) -> Outcome {
    let order = ctx.cfg.order;
    let q2_hat = OperatorExpr::q2_hat();
    let e_hat = OperatorExpr::e_hat();
    for _ in 0..ctx.cfg.samples {
        let w = even_weight_upto(ctx, ctx.cfg.bracket_weight());
        let f = random::r_homogeneous(&mut ctx.rng, w, 3);
        let k = w as i64;
        let form = recognize(&q_bracket(&f, order)?, k, order)?;
        let cases = [
            ("Q̂2", q2_hat.apply(&f)?, d_hat(&form), k + 2),
            ("Δ", laplacian(&f), frak_d(&form), k - 2),
            ("Ê", e_hat.apply(&f)?, w_hat(&form)?, k),
        ];
        for (name, image, want, weight) in cases {
            let series = q_bracket(&image, order)?;
            ctx.eq(&series, &expand(&want, order), || format!("<{name} f> for f = {f}"))?;
            if weight >= 0 {
                ctx.eq(&recognize(&series, weight, order)?, &want, || format!("recognized <{name} f> for f = {f}"))?;
            }
        }
    }
    Ok(())
}

fn depth_bound(ctx: &mut Ctx) -> Outcome {
    let order = ctx.cfg.order;
    for _ in 0..ctx.cfg.samples {
        let k = even_weight_upto(ctx, ctx.cfg.max_weight);
        let p = ctx.rng.gen_range(0..=(k / 2).min(2));
        let mut f = SSPoly::zero();
        for r in 0..=p {
            let h = random::harmonic_homogeneous(&mut ctx.rng, k - 2 * r);
            f += &(&SSPoly::generator(2).pow(r) * &h);
        }
        let form = recognize(&q_bracket(&f, order)?, k as i64, order)?;
        ctx.check(form.depth() <= p, || format!("<{f}> = {form} has depth above {p}"))?;
    }
    Ok(())
}

fn modularity(ctx: &mut Ctx) -> Outcome {
    let order = ctx.cfg.order;
    for i in 0..ctx.cfg.samples {
        let k = even_weight_upto(ctx, ctx.cfg.max_weight);
        let f = if i % 2 == 0 {
            random::harmonic_homogeneous(&mut ctx.rng, k)
        } else {
            random::lambda_star_homogeneous(&mut ctx.rng, k, 4)
        };
        let form = recognize(&q_bracket(&f, order)?, k as i64, order)?;
        let parts = decompose_weight(&f, k as i64)?.components;
        let mut higher_vanish = true;
        for h in &parts[1..] {
            higher_vanish &= q_bracket(h, order)?.is_zero();
        }
        ctx.check((form.depth() == 0) == higher_vanish, || {
            format!("<{f}> = {form}, higher brackets vanish: {higher_vanish}")
        })?;
    }
    Ok(())
}

fn recognize_expand(ctx: &mut Ctx) -> Outcome {
    let order = ctx.cfg.order;
    let top = ctx.cfg.recognition_weight();
    for _ in 0..ctx.cfg.samples {
        let (k, m) = random_form(ctx, top);
        ctx.eq(&recognize(&expand(&m, order), k, order)?, &m, || format!("recognize(expand({m}))"))?;
    }
    ctx.check(
        recognize(&QSeries::monomial(1, order), 3, order).is_err(),
        || "odd weight accepted a nonzero series".into(),
    )?;
    Ok(())
}

fn goldens(ctx: &mut Ctx) -> Outcome {
    let order = ctx.cfg.order;
    for row in golden::all_rows() {
        let l = row.partition();
        let n = l.size() as u32;
        if n > ctx.cfg.max_weight {
            continue;
        }
        let h = h_lambda(&l)?;
        ctx.eq(&h, &row.h()?, || format!("h_{l}"))?;
        ctx.eq(&parse(&h.to_string())?, &h, || format!("text form of h_{l}"))?;
        let bracket = q_bracket(&h, order)?;
        let form = recognize(&bracket, n as i64, order)?;
        match row.bracket_form() {
            Some(want) => ctx.eq(&form, &want, || format!("<h_{l}>"))?,
            None => ctx.check(bracket.is_zero(), || format!("<h_{l}> is not zero"))?,
        }
        let rendered = latex::table_row(&l, &h, row.bracket_form().as_ref());
        ctx.check(rendered == row.latex, || format!("LaTeX of h_{l}: {rendered}"))?;
        if let Some(bad) = row.misprinted_h() {
            let refuted = !bad.is_homogeneous() || !is_harmonic(&bad)?;
            ctx.check(refuted, || format!("misprinted h_{l} is consistent"))?;
        }
    }
    Ok(())
}
