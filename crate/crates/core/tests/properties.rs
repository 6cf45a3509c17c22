use proptest::prelude::*;

use cylcob::evaluator::compose_diagrams;
use cylcob::linear::BarRep;
use cylcob::normal_form::normalize;
use cylcob::syntax::{parse_word, print_word};
use cylcob::{eq_in, evaluate, CategoryTag, Generator, GeneratorWord};

const MAX_ARITY: usize = 7;

/// Builds a typed word from raw choices, skipping moves that leave the arity range.
fn build(n_in: usize, choices: &[(u8, u16)]) -> GeneratorWord {
    let mut w = GeneratorWord::identity(n_in);
    for &(kind, slot) in choices {
        let k = w.n_out();
        let slot = slot as usize;
        let g = match kind {
            0 => Generator::Tw(k),
            1 => Generator::TwInv(k),
            2 if k + 2 <= MAX_ARITY => Generator::Birth(k, slot % (k + 2)),
            3 if k >= 2 => Generator::Death(k, slot % k),
            4 => Generator::Id(k),
            _ => continue,
        };
        w.push(g).unwrap();
    }
    w
}

fn words() -> impl Strategy<Value = GeneratorWord> {
    (0..=MAX_ARITY, prop::collection::vec((0u8..5, any::<u16>()), 0..16)).prop_map(|(n, c)| build(n, &c))
}

fn composable() -> impl Strategy<Value = (GeneratorWord, GeneratorWord)> {
    (words(), prop::collection::vec((0u8..5, any::<u16>()), 0..12)).prop_map(|(u, c)| {
        let v = build(u.n_out(), &c);
        (u, v)
    })
}

proptest! {
    #[test]
    fn print_parse_round_trip(w in words()) {
        prop_assert_eq!(parse_word(&print_word(&w)).unwrap(), w);
    }

    #[test]
    fn normal_form_keeps_invariants(w in words()) {
        let nf = normalize(&w).unwrap();
        let assembled = nf.assemble();
        prop_assert_eq!(evaluate(&assembled).unwrap().invariants(), evaluate(&w).unwrap().invariants());
        prop_assert_eq!(normalize(&assembled).unwrap(), nf.clone());
        prop_assert_eq!(evaluate(&parse_word(&nf.to_string()).unwrap()).unwrap(), evaluate(&assembled).unwrap());
    }

    #[test]
    fn canonicalizing_holds_up_to_dehn_twists(w in words()) {
        // tw'(k) becomes tw(k)^(k-1), which differs from it by a full twist.
        let c = w.canonicalize();
        prop_assert!(eq_in(CategoryTag::CylA, &w, &c).unwrap());
    }

    #[test]
    fn evaluation_is_a_functor((u, v) in composable()) {
        let whole = evaluate(&u.then(&v).unwrap()).unwrap();
        let parts = compose_diagrams(&evaluate(&u).unwrap(), &evaluate(&v).unwrap()).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn composition_is_associative((u, v) in composable(), c in prop::collection::vec((0u8..5, any::<u16>()), 0..8)) {
        let x = build(v.n_out(), &c);
        let (a, b, d) = (evaluate(&u).unwrap(), evaluate(&v).unwrap(), evaluate(&x).unwrap());
        let left = compose_diagrams(&compose_diagrams(&a, &b).unwrap(), &d).unwrap();
        let right = compose_diagrams(&a, &compose_diagrams(&b, &d).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn full_twists_vanish_in_cyla(u in words()) {
        let k = u.n_out();
        let twisted = u.then(&GeneratorWord::single(Generator::Tw(k)).unwrap().pow(k).unwrap()).unwrap();
        prop_assert!(eq_in(CategoryTag::CylA, &u, &twisted).unwrap());
    }

    #[test]
    fn categories_refine_each_other((u, v) in composable()) {
        prop_assume!(u.n_in() == v.n_out());
        let w = u.then(&v).unwrap();
        let twin = v.then(&u).unwrap();
        prop_assume!(w.signature() == twin.signature());
        let da = eq_in(CategoryTag::Da, &w, &twin).unwrap();
        let cyla = eq_in(CategoryTag::CylA, &w, &twin).unwrap();
        let cyl = eq_in(CategoryTag::Cyl, &w, &twin).unwrap();
        prop_assert!((!da || cyla) && (!cyla || cyl));
    }

    #[test]
    fn bar_matrices_compose((u, v) in composable()) {
        prop_assume!(u.gens().iter().chain(v.gens()).all(|g| g.target() <= 6) && u.n_in() <= 6);
        let bar = BarRep::new(2).unwrap();
        let whole = bar.word_matrix(&u.then(&v).unwrap()).unwrap();
        let parts = bar.word_matrix(&v).unwrap().mul(&bar.word_matrix(&u).unwrap()).unwrap();
        prop_assert_eq!(whole, parts);
    }
}
