//! Seeded random words, and twins obtained by rewriting with relations.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{Generator, GeneratorWord};
use crate::normal_form::{all_instances, RelationSides};

/// Shape of random words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordShape {
    pub max_len: usize,
    pub max_arity: usize,
    pub inverse_twists: bool,
}

impl Default for WordShape {
    fn default() -> Self {
        WordShape { max_len: 20, max_arity: 10, inverse_twists: false }
    }
}

/// Uniformly chosen generator with source `k` whose target stays within `max_arity`.
pub fn random_generator<R: Rng + ?Sized>(rng: &mut R, k: usize, max_arity: usize, inverse_twists: bool) -> Generator {
    loop {
        let g = match rng.gen_range(0..if inverse_twists { 5 } else { 4 }) {
            0 => Generator::Tw(k),
            1 if k + 2 <= max_arity => Generator::Birth(k, rng.gen_range(0..=k + 1)),
            2 if k >= 2 => Generator::Death(k, rng.gen_range(0..k)),
            3 => Generator::Id(k),
            4 => Generator::TwInv(k),
            _ => continue,
        };
        // Identities are kept rare so that words stay interesting.
        if matches!(g, Generator::Id(_)) && rng.gen_bool(0.7) {
            continue;
        }
        return g;
    }
}

fn walk<R: Rng + ?Sized>(rng: &mut R, n_in: usize, len: usize, shape: WordShape) -> GeneratorWord {
    let mut w = GeneratorWord::identity(n_in);
    for _ in 0..len {
        let g = random_generator(rng, w.n_out(), shape.max_arity, shape.inverse_twists);
        w.push(g).expect("random generator matches arity");
    }
    w
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, shape: WordShape) -> GeneratorWord {
    let n_in = rng.gen_range(0..=shape.max_arity);
    let len = rng.gen_range(0..=shape.max_len);
    walk(rng, n_in, len, shape)
}

pub fn random_word_from<R: Rng + ?Sized>(rng: &mut R, n_in: usize, shape: WordShape) -> GeneratorWord {
    let len = rng.gen_range(0..=shape.max_len);
    walk(rng, n_in, len, shape)
}

/// Random word with the given signature; arities must share parity.
pub fn random_word_between<R: Rng + ?Sized>(rng: &mut R, n_in: usize, n_out: usize, shape: WordShape) -> GeneratorWord {
    assert_eq!(n_in % 2, n_out % 2, "signature parity");
    let correction = n_in.abs_diff(n_out) / 2;
    let budget = shape.max_len.saturating_sub(correction);
    let len = rng.gen_range(0..=budget);
    let mut w = walk(rng, n_in, len, shape);
    while w.n_out() > n_out {
        let k = w.n_out();
        w.push(Generator::Death(k, rng.gen_range(0..k))).expect("typed");
    }
    while w.n_out() < n_out {
        let k = w.n_out();
        w.push(Generator::Birth(k, rng.gen_range(0..=k + 1))).expect("typed");
    }
    w
}

/// Relation instances grouped by the arity at which each side starts.
pub struct RelationTable {
    by_arity: Vec<Vec<RelationSides>>,
}

impl RelationTable {
    pub fn new(max_arity: usize) -> Self {
        let mut by_arity = vec![Vec::new(); max_arity + 1];
        for inst in all_instances(max_arity) {
            let sides = inst.sides().expect("enumerated instances are in range");
            let fits = |w: &GeneratorWord| w.gens().iter().all(|g| g.target() <= max_arity);
            if fits(&sides.lhs) && fits(&sides.rhs) {
                by_arity[sides.lhs.n_in()].push(sides);
            }
        }
        RelationTable { by_arity }
    }

    pub fn instances(&self) -> impl Iterator<Item = &RelationSides> {
        self.by_arity.iter().flatten()
    }
}

/// A word equal to `w` in Cyl, obtained by `steps` random rewrites: either
/// replacing an occurrence of one side of a relation by the other, or
/// inserting a word that is the identity in Cyl.
pub fn relation_twin<R: Rng + ?Sized>(rng: &mut R, w: &GeneratorWord, table: &RelationTable, steps: usize) -> GeneratorWord {
    let mut gens = w.gens().to_vec();
    let n_in = w.n_in();
    for _ in 0..steps {
        let mut sites = Vec::new();
        for start in 0..gens.len() {
            let k = gens[start].source();
            let Some(list) = table.by_arity.get(k) else { continue };
            for sides in list {
                for (from, to) in [(&sides.lhs, &sides.rhs), (&sides.rhs, &sides.lhs)] {
                    let f = from.gens();
                    if !f.is_empty() && gens[start..].starts_with(f) {
                        sites.push((start, f.len(), to.gens().to_vec()));
                    }
                }
            }
        }
        if let (Some(site), true) = (sites.choose(rng), rng.gen_bool(0.75)) {
            let (start, len, ref to) = *site;
            gens.splice(start..start + len, to.iter().copied());
        } else {
            // Insert a word that is the identity in Cyl.
            let pos = rng.gen_range(0..=gens.len());
            let k = if pos == 0 { n_in } else { gens[pos - 1].target() };
            let insert = identity_filler(rng, k, table);
            gens.splice(pos..pos, insert);
        }
    }
    GeneratorWord::new(n_in, gens).expect("rewrites preserve typing")
}

/// Some word from `k` to `k` that equals the identity in Cyl.
fn identity_filler<R: Rng + ?Sized>(rng: &mut R, k: usize, table: &RelationTable) -> Vec<Generator> {
    let candidates: Vec<&RelationSides> = table
        .by_arity
        .get(k)
        .into_iter()
        .flatten()
        .filter(|s| s.rhs.gens().iter().all(|g| matches!(g, Generator::Id(_))))
        .collect();
    match (rng.gen_range(0..3), candidates.choose(rng)) {
        (0, _) => vec![Generator::Tw(k); k],
        (1, Some(s)) => s.lhs.gens().to_vec(),
        _ => vec![Generator::Id(k)],
    }
}

/// Instances used by the twin generator, for reporting.
pub fn twin_relations(table: &RelationTable) -> usize {
    table.instances().count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaluator::{eq_in, CategoryTag};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn words_respect_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let shape = WordShape { max_len: 12, max_arity: 6, inverse_twists: true };
        for _ in 0..200 {
            let w = random_word(&mut rng, shape);
            assert!(w.len() <= 12);
            assert!(w.gens().iter().all(|g| g.source() <= 6 && g.target() <= 6));
        }
    }

    #[test]
    fn words_with_fixed_signature() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let w = random_word_between(&mut rng, 3, 7, WordShape::default());
            assert_eq!(w.signature(), (3, 7));
        }
    }

    #[test]
    fn twins_are_equal_in_cyl() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let table = RelationTable::new(8);
        assert!(twin_relations(&table) > 100);
        let shape = WordShape { max_len: 12, max_arity: 6, inverse_twists: false };
        for _ in 0..100 {
            let w = random_word(&mut rng, shape);
            let t = relation_twin(&mut rng, &w, &table, 3);
            assert!(eq_in(CategoryTag::Cyl, &w, &t).unwrap(), "{w:?} vs {t:?}");
        }
    }
}
