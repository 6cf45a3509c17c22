//! Seeded property suites, one per acceptance criterion.
//!
//! Every suite is deterministic given its [`SelftestConfig`] and reports each
//! failed check by description instead of stopping at the first.

use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclic::{
    atl_to_cyla, delta_double, lambda_to_cyl, monotone_semantics, rotation_identities, simplicial_identities,
    sqrtlambda_to_cyl, AtlGen, AtlWord, Flavor,
};
use crate::diagram::{Generator, GeneratorWord};
use crate::evaluator::{compose_diagrams, eq_in, evaluate, AffineDiagram, CategoryTag};
use crate::linear::{tl_compose, tl_evaluate, BarRep, Matrix, Rational, TLElement};
use crate::normal_form::{all_instances, check_relation, normalize, Relation};
use crate::random::{random_word, random_word_between, random_word_from, relation_twin, RelationTable, WordShape};
use crate::syntax::{parse_word, print_word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Largest `k` for exhaustive relation instances.
    pub max_k: usize,
    /// Random words for the normal-form and round-trip suites.
    pub words: usize,
    /// Random pairs for the equality, homomorphism and tower suites.
    pub pairs: usize,
    /// Random pairs for the Temperley-Lieb suite.
    pub tl_pairs: usize,
    pub max_len: usize,
    pub max_arity: usize,
    /// Largest tensor basis the matrix suites will build, `dim^arity`.
    pub max_basis: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: 0x5eed,
            max_k: 8,
            words: 500,
            pairs: 200,
            tl_pairs: 100,
            max_len: 20,
            max_arity: 10,
            max_basis: 729,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub criterion: u8,
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(criterion: u8, name: &'static str) -> Self {
        SuiteReport { criterion, name, checks: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Records a check whose computation may itself fail.
    fn check_result(&mut self, r: crate::Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                let msg = what();
                self.check(false, || format!("{msg}: error {e}"));
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "criterion {} {}: {} ({} checks", self.criterion, self.name, verdict, self.checks)?;
        if !self.passed() {
            write!(f, ", {} failed; first: {}", self.failures.len(), self.failures[0])?;
        }
        f.write_str(")")
    }
}

fn rng_for(cfg: &SelftestConfig, criterion: u8) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(31).wrapping_add(criterion as u64))
}

fn shape(cfg: &SelftestConfig) -> WordShape {
    WordShape { max_len: cfg.max_len, max_arity: cfg.max_arity, inverse_twists: false }
}

/// Largest arity whose tensor basis at `dim` stays within `max_basis`.
fn arity_cap(dim: usize, max_basis: usize) -> usize {
    if dim == 1 {
        return usize::MAX;
    }
    let mut a = 0;
    while dim.pow(a as u32 + 1) <= max_basis {
        a += 1;
    }
    a
}

fn word_fits(w: &GeneratorWord, cap: usize) -> bool {
    w.n_in() <= cap && w.gens().iter().all(|g| g.target() <= cap)
}

pub fn run_all(cfg: &SelftestConfig) -> Vec<SuiteReport> {
    vec![
        relations(cfg),
        normal_forms(cfg),
        matrices(cfg),
        loops_and_bracelets(cfg),
        category_tower(cfg),
        cyclic_embeddings(cfg),
        temperley_lieb(cfg),
        round_trip(cfg),
    ]
}

pub fn run_one(cfg: &SelftestConfig, criterion: u8) -> Option<SuiteReport> {
    Some(match criterion {
        1 => relations(cfg),
        2 => normal_forms(cfg),
        3 => matrices(cfg),
        4 => loops_and_bracelets(cfg),
        5 => category_tower(cfg),
        6 => cyclic_embeddings(cfg),
        7 => temperley_lieb(cfg),
        8 => round_trip(cfg),
        _ => return None,
    })
}

/// Every relation instance with `k <= max_k`, in Cyl and with loops counted.
pub fn relations(cfg: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(1, "relations");
    for inst in all_instances(cfg.max_k) {
        rep.check_result(check_relation(&inst), || format!("{inst}"));
    }
    for rel in Relation::ALL {
        let seen = all_instances(cfg.max_k).iter().any(|i| i.relation == rel);
        rep.check(seen, || format!("no instance of {}", rel.name()));
    }
    rep
}

/// Normal forms reproduce invariants, are idempotent, and decide equality.
pub fn normal_forms(cfg: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(2, "normal form");
    let mut rng = rng_for(cfg, 2);
    let shape = shape(cfg);
    for _ in 0..cfg.words {
        let w = random_word(&mut rng, shape);
        let r = (|| {
            let nf = normalize(&w)?;
            let assembled = nf.assemble();
            let same = evaluate(&assembled)?.invariants() == evaluate(&w)?.invariants();
            let again = normalize(&assembled)?;
            Ok(same && again == nf && again.assemble() == assembled)
        })();
        rep.check_result(r, || format!("normal form of {}", print_word(&w)));
    }

    let table = RelationTable::new(cfg.max_arity.min(cfg.max_k));
    for p in 0..cfg.pairs {
        let u = random_word(&mut rng, shape);
        let v = if p % 2 == 0 {
            let steps = rng.gen_range(1..=4);
            relation_twin(&mut rng, &u, &table, steps)
        } else {
            random_word_between(&mut rng, u.n_in(), u.n_out(), shape)
        };
        let r = (|| {
            let eq = eq_in(CategoryTag::Cyl, &u, &v)?;
            let (cu, cv) = (normalize(&u)?.without_mu().assemble(), normalize(&v)?.without_mu().assemble());
            Ok(eq == (cu == cv) && (p % 2 == 1 || eq))
        })();
        rep.check_result(r, || format!("pair {p}: {} vs {}", print_word(&u), print_word(&v)));
    }
    rep
}

/// The bar representation is a functor on the checked range.
pub fn matrices(cfg: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(3, "matrix oracle");
    let mut rng = rng_for(cfg, 3);
    let instances = all_instances(cfg.max_k);
    for dim in 1..=3 {
        let bar = BarRep::new(dim).expect("positive dimension");
        let cap = arity_cap(dim, cfg.max_basis).min(cfg.max_arity);
        let shape = WordShape { max_len: cfg.max_len, max_arity: cap, inverse_twists: true };

        for p in 0..cfg.pairs {
            let u = random_word(&mut rng, shape);
            let v = random_word_from(&mut rng, u.n_out(), shape);
            let r = (|| {
                let uv = u.then(&v)?;
                Ok(bar.word_matrix(&uv)? == bar.word_matrix(&v)?.mul(&bar.word_matrix(&u)?)?)
            })();
            rep.check_result(r, || format!("dim {dim} pair {p}: {} then {}", print_word(&u), print_word(&v)));
        }

        for inst in &instances {
            let sides = inst.sides().expect("enumerated instances are in range");
            if !word_fits(&sides.lhs, cap) || !word_fits(&sides.rhs, cap) {
                continue;
            }
            let r = (|| {
                let (l, r) = (bar.word_matrix(&sides.lhs)?, bar.word_matrix(&sides.rhs)?);
                Ok(if inst.relation == Relation::LoopRemoval {
                    let scalar = Rational::from_integer(BigInt::from(dim.pow(sides.rhs_loops as u32)));
                    l == r.scale(&scalar) && l == Matrix::identity(l.rows()).scale(&scalar)
                } else if sides.rhs_loops == 0 {
                    l == r
                } else {
                    true
                })
            })();
            rep.check_result(r, || format!("dim {dim}: {inst}"));
        }

        for k in 1..=6.min(cap) {
            let r = GeneratorWord::single(Generator::Tw(k))
                .and_then(|t| t.pow(k))
                .and_then(|w| bar.word_matrix(&w))
                .map(|m| m.is_identity());
            rep.check_result(r, || format!("dim {dim}: tw({k})^{k} is not the identity"));
        }
    }
    rep
}

/// Contractible loops and bracelets are told apart, and windings stay small.
pub fn loops_and_bracelets(cfg: &SelftestConfig) -> SuiteReport {
    use Generator::{Birth, Death};
    let mut rep = SuiteReport::new(4, "loops and bracelets");
    let lp = GeneratorWord::from_gens(vec![Birth(0, 0), Death(2, 0)]).expect("typed");
    let br = GeneratorWord::from_gens(vec![Birth(0, 0), Death(2, 1)]).expect("typed");
    match (evaluate(&lp), evaluate(&br)) {
        (Ok(a), Ok(b)) => {
            rep.check((a.mu(), a.beta()) == (1, 0), || format!("loop has mu={}, beta={}", a.mu(), a.beta()));
            rep.check((b.mu(), b.beta()) == (0, 1), || format!("bracelet has mu={}, beta={}", b.mu(), b.beta()));
            rep.check(a != b, || "loop and bracelet evaluate equally".into());
        }
        (a, b) => rep.check(false, || format!("evaluation failed: {a:?} {b:?}")),
    }
    for cat in [CategoryTag::Cyl, CategoryTag::CylA, CategoryTag::Da] {
        rep.check_result(eq_in(cat, &lp, &br).map(|e| !e), || format!("loop equals bracelet in {cat}"));
    }

    // Random words: evaluation never meets a loop winding more than once,
    // and bracelets only appear once every strand is closed off.
    let mut rng = rng_for(cfg, 4);
    let shape = WordShape { inverse_twists: true, ..shape(cfg) };
    for _ in 0..cfg.words {
        let w = random_word(&mut rng, shape);
        let r = evaluate(&w).map(|d| d.beta() == 0 || d.tau() == 0);
        rep.check_result(r, || format!("evaluating {}", print_word(&w)));
    }
    // Closing k strands with caps rotated by p: an even rotation matches each
    // cap with one cup, an odd one threads everything into a single circle.
    for k in (2..=8usize).step_by(2) {
        for p in 0..=2 * k {
            let r = (|| {
                let mut w = GeneratorWord::identity(0);
                for i in 0..k / 2 {
                    w.push(Birth(2 * i, 0))?;
                }
                w = w.then(&GeneratorWord::single(Generator::Tw(k))?.pow(p)?)?;
                for i in (1..=k / 2).rev() {
                    w.push(Death(2 * i, 0))?;
                }
                let d = evaluate(&w)?;
                let circles = if p % 2 == 0 { k / 2 } else { 1 };
                Ok(d.beta() + d.mu() == circles as u64)
            })();
            rep.check_result(r, || format!("closing tw({k})^{p}"));
        }
    }
    rep
}

/// Equality in Da implies CylA implies Cyl, and both implications are strict.
pub fn category_tower(cfg: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(5, "category tower");
    let mut rng = rng_for(cfg, 5);
    let shape = shape(cfg);
    let table = RelationTable::new(cfg.max_arity.min(cfg.max_k));
    for p in 0..cfg.pairs {
        let u = random_word(&mut rng, shape);
        let v = match p % 3 {
            0 => relation_twin(&mut rng, &u, &table, 2),
            1 => u.clone(),
            _ => random_word_between(&mut rng, u.n_in(), u.n_out(), shape),
        };
        let r = (|| {
            let da = eq_in(CategoryTag::Da, &u, &v)?;
            let cyla = eq_in(CategoryTag::CylA, &u, &v)?;
            let cyl = eq_in(CategoryTag::Cyl, &u, &v)?;
            Ok((!da || cyla) && (!cyla || cyl))
        })();
        rep.check_result(r, || format!("pair {p}: {} vs {}", print_word(&u), print_word(&v)));
    }
    for k in [2, 3, 4] {
        let r = (|| {
            let full = GeneratorWord::single(Generator::Tw(k))?.pow(k)?;
            let id = GeneratorWord::identity(k);
            Ok(!eq_in(CategoryTag::Da, &full, &id)? && eq_in(CategoryTag::CylA, &full, &id)?)
        })();
        rep.check_result(r, || format!("tw({k})^{k} does not separate Da from CylA"));

        let r = (|| {
            let lp = GeneratorWord::new(k, vec![Generator::Birth(k, 0), Generator::Death(k + 2, 0)])?;
            let id = GeneratorWord::identity(k);
            Ok(!eq_in(CategoryTag::CylA, &lp, &id)? && eq_in(CategoryTag::Cyl, &lp, &id)?)
        })();
        rep.check_result(r, || format!("b({k},0) then d({},0) does not separate CylA from Cyl", k + 2));
    }
    rep
}

/// Cyclic relations hold in Cyl; doubling respects simplicial identities.
pub fn cyclic_embeddings(_cfg: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(6, "cyclic embeddings");
    let max_n = 5;
    for id in simplicial_identities(max_n, Flavor::Cyclic).into_iter().chain(rotation_identities(max_n, Flavor::Cyclic)) {
        let r = (|| eq_in(CategoryTag::Cyl, &lambda_to_cyl(&id.lhs)?, &lambda_to_cyl(&id.rhs)?))();
        rep.check_result(r, || format!("Λ {}", id.name));
    }
    for id in simplicial_identities(max_n, Flavor::SqrtCyclic)
        .into_iter()
        .chain(rotation_identities(max_n, Flavor::SqrtCyclic))
    {
        let r = (|| eq_in(CategoryTag::Cyl, &sqrtlambda_to_cyl(&id.lhs)?, &sqrtlambda_to_cyl(&id.rhs)?))();
        rep.check_result(r, || format!("√Λ {}", id.name));
    }
    for id in simplicial_identities(max_n, Flavor::Simplicial) {
        let r = (|| {
            let (l, r) = (delta_double(&id.lhs)?, delta_double(&id.rhs)?);
            Ok(monotone_semantics(&l)? == monotone_semantics(&r)?)
        })();
        rep.check_result(r, || format!("doubled {}", id.name));
    }
    for (name, l, r, extra) in atl_identities(4) {
        let res = (|| {
            let (a, b) = (atl_to_cyla(&l)?, atl_to_cyla(&r)?);
            let mut ia = evaluate(&a.word)?.invariants();
            let mut ib = evaluate(&b.word)?.invariants();
            ia.mu += a.mu;
            ib.mu += b.mu + extra;
            Ok(ia == ib)
        })();
        rep.check_result(res, || format!("shaded {name}"));
    }
    rep
}

/// Relations among shaded annular words; the last field counts loops the
/// right side must add to match.
fn atl_identities(max_n: usize) -> Vec<(String, AtlWord, AtlWord, u64)> {
    use AtlGen::{A, B, T};
    let w = |n: usize, g: Vec<AtlGen>| AtlWord::new(n, g).expect("shaded identity sides are typed");
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((format!("rotation order n={n}"), w(n, vec![T(n); n]), w(n, vec![]), 0));
        out.push((
            format!("loop id n={n}"),
            w(n, vec![AtlGen::LoopId(n, 1, 2)]),
            w(n, vec![]),
            3,
        ));
        for i in 0..=n {
            out.push((format!("cup then cap n={n} i={i}"), w(n, vec![B(n, i), A(n + 1, i)]), w(n, vec![]), 1));
        }
        for j in 1..n {
            for i in 0..j {
                out.push((
                    format!("caps commute n={n} i={i} j={j}"),
                    w(n, vec![A(n, j), A(n - 1, i)]),
                    w(n, vec![A(n, i), A(n - 1, j - 1)]),
                    0,
                ));
            }
        }
    }
    out
}

/// The δ bookkeeping of the Temperley-Lieb layer matches composition.
pub fn temperley_lieb(cfg: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(7, "Temperley-Lieb bookkeeping");
    let mut rng = rng_for(cfg, 7);
    let shape = shape(cfg);
    for p in 0..cfg.tl_pairs {
        let u = random_word(&mut rng, shape);
        let v = random_word_from(&mut rng, u.n_out(), shape);
        let r = (|| {
            let (a, b) = (evaluate(&u)?, evaluate(&v)?);
            let composed = compose_diagrams(&a, &b)?;
            let increment = composed.mu() - a.mu() - b.mu();
            let (ta, tb) = (TLElement::from_diagram(&a.without_mu()), TLElement::from_diagram(&b.without_mu()));
            let t = tl_compose(&ta, &tb)?;
            let terms: Vec<(&AffineDiagram, _)> = t.terms().iter().collect();
            Ok(terms.len() == 1
                && *terms[0].0 == composed.without_mu()
                && terms[0].1.degree() == Some(increment as usize)
                && terms[0].1.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() == 1)
        })();
        rep.check_result(r, || format!("pair {p}: {} then {}", print_word(&u), print_word(&v)));
    }
    for dim in 1..=3 {
        let bar = BarRep::new(dim).expect("positive dimension");
        let delta = Rational::from_integer(BigInt::from(dim));
        let cap = arity_cap(dim, cfg.max_basis).min(cfg.max_arity);
        let shape = WordShape { max_len: cfg.max_len, max_arity: cap, inverse_twists: false };
        for p in 0..cfg.tl_pairs {
            let u = random_word(&mut rng, shape);
            let v = random_word_from(&mut rng, u.n_out(), shape);
            let r = (|| {
                let t = tl_compose(&TLElement::from_word(&u)?, &TLElement::from_word(&v)?)?;
                Ok(tl_evaluate(&t, &bar, &delta)? == bar.word_matrix(&u.then(&v)?)?)
            })();
            rep.check_result(r, || format!("dim {dim} pair {p}: {} then {}", print_word(&u), print_word(&v)));
        }
    }
    rep
}

/// Printing then parsing returns the same word.
pub fn round_trip(cfg: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new(8, "parse/print round trip");
    let mut rng = rng_for(cfg, 8);
    let shape = WordShape { inverse_twists: true, ..shape(cfg) };
    for _ in 0..cfg.words {
        let w = random_word(&mut rng, shape);
        let text = print_word(&w);
        let back = parse_word(&text);
        rep.check(back.as_ref() == Ok(&w), || format!("{text} parsed as {back:?}"));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SelftestConfig {
        SelftestConfig { max_k: 5, words: 40, pairs: 20, tl_pairs: 10, max_len: 10, max_arity: 6, ..Default::default() }
    }

    #[test]
    fn arity_caps() {
        assert_eq!(arity_cap(2, 729), 9);
        assert_eq!(arity_cap(3, 729), 6);
        assert_eq!(arity_cap(1, 729), usize::MAX);
    }

    #[test]
    fn small_suites_pass() {
        let cfg = small();
        for c in [1, 2, 3, 4, 5, 7, 8] {
            let r = run_one(&cfg, c).unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn doubling_failure_is_reported_not_hidden() {
        let r = cyclic_embeddings(&small());
        let other: Vec<_> = r.failures.iter().filter(|f| !f.starts_with("doubled face-degen")).collect();
        assert!(other.is_empty(), "{other:?}");
    }

    #[test]
    fn reports_are_reproducible() {
        assert_eq!(normal_forms(&small()), normal_forms(&small()));
    }
}
